//! SVG drawing of a construction trace.

use std::fmt::Write as _;

use super::syntax::CliBackend;
use crate::constructions::{ConstructionTrace, Operation};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SvgError {
    #[error("UnsupportedBackend: cannot draw over {0}; use --backend rational")]
    UnsupportedBackend(String),
    #[error("Io: {0}")]
    Io(String),
}

const WIDTH: f64 = 640.0;

/// Renders the trace. Output depends only on the trace, so identical input
/// gives identical bytes.
pub fn render_svg<F: CliBackend>(field: &F, trace: &ConstructionTrace<F::Elem>) -> Result<String, SvgError> {
    let unsupported = || SvgError::UnsupportedBackend(field.name());
    let real = |e: &F::Elem| field.to_f64(e).ok_or_else(unsupported);

    let title = match trace.op {
        Operation::Add => "addition",
        Operation::Mul => "multiplication",
    };
    let labeled = [
        ("O", &trace.origin),
        ("I", &trace.unit),
        ("A", &trace.a),
        ("B", &trace.b),
        ("B1", &trace.aux),
        ("P1", &trace.p1),
        ("C", &trace.result),
    ];
    let mut pts = Vec::with_capacity(labeled.len());
    for (name, p) in labeled {
        pts.push((name, real(&p.x)?, real(&p.y)?));
    }

    let (mut x0, mut x1) = (f64::INFINITY, f64::NEG_INFINITY);
    let (mut y0, mut y1) = (f64::INFINITY, f64::NEG_INFINITY);
    for &(_, x, y) in &pts {
        x0 = x0.min(x);
        x1 = x1.max(x);
        y0 = y0.min(y);
        y1 = y1.max(y);
    }
    let (w, h) = ((x1 - x0).max(1.0), (y1 - y0).max(1.0));
    let (mx, my) = (0.1 * w, 0.1 * h);
    let (vx0, vx1, vy0, vy1) = (x0 - mx, x0 + w + mx, y0 - my, y0 + h + my);
    let scale = WIDTH / (vx1 - vx0);
    let height = (vy1 - vy0) * scale;
    // Screen y grows downwards.
    let sx = |x: f64| (x - vx0) * scale;
    let sy = |y: f64| (vy1 - y) * scale;

    let mut out = String::new();
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{WIDTH:.0}" height="{height:.2}" viewBox="0 0 {WIDTH:.2} {height:.2}">"#
    );
    let _ = writeln!(out, "<title>{title} on the line OI</title>");
    let _ = writeln!(out, r#"<rect x="0" y="0" width="{WIDTH:.2}" height="{height:.2}" fill="white"/>"#);

    for (i, (name, l)) in trace.lines.iter().enumerate() {
        let name = name.replace("||", "-par-");
        let (bx, by) = (real(&l.base().x)?, real(&l.base().y)?);
        let (dx, dy) = l.direction();
        let (dx, dy) = (real(dx)?, real(dy)?);
        // Clip the infinite line to the viewport.
        let (p, q) = if dx == 0.0 { ((bx, vy0), (bx, vy1)) } else { ((vx0, by + (vx0 - bx) * dy / dx), (vx1, by + (vx1 - bx) * dy / dx)) };
        // The first traced line is OI.
        let (stroke, width) = if i == 0 { ("black", 2.0) } else { ("#3b6ea5", 1.0) };
        let _ = writeln!(
            out,
            r#"<line class="{name}" x1="{:.2}" y1="{:.2}" x2="{:.2}" y2="{:.2}" stroke="{stroke}" stroke-width="{width:.1}"/>"#,
            sx(p.0),
            sy(p.1),
            sx(q.0),
            sy(q.1)
        );
    }
    for (name, x, y) in &pts {
        let fill = if *name == "C" { "#c0392b" } else { "black" };
        let _ = writeln!(out, r#"<circle cx="{:.2}" cy="{:.2}" r="4" fill="{fill}"/>"#, sx(*x), sy(*y));
        let _ = writeln!(out, r#"<text x="{:.2}" y="{:.2}" font-family="sans-serif" font-size="14">{name}</text>"#, sx(*x) + 6.0, sy(*y) - 6.0);
    }
    out.push_str("</svg>\n");
    Ok(out)
}

pub fn write_svg<F: CliBackend>(field: &F, trace: &ConstructionTrace<F::Elem>, path: &std::path::Path) -> Result<(), SvgError> {
    let svg = render_svg(field, trace)?;
    std::fs::write(path, svg).map_err(|e| SvgError::Io(format!("{}: {e}", path.display())))
}
