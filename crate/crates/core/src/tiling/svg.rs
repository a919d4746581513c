//! SVG output for patches.

use std::fmt::Write;

use super::patch::TilingPatch;

fn default_fill(sides: u32) -> &'static str {
    match sides {
        3 => "#f4d35e",
        4 => "#83c5be",
        6 => "#ee964b",
        8 => "#a3c4f3",
        12 => "#cdb4db",
        _ => "#dddddd",
    }
}

/// Renders the patch. `classes[f]`, when given, becomes the CSS class of
/// face `f`; `style` is inlined so classes can be colored.
pub fn render_svg(patch: &TilingPatch, classes: Option<&[String]>, style: &str) -> String {
    let pts = patch
        .faces
        .iter()
        .flat_map(|f| f.polygon.iter().copied().chain(std::iter::once(f.center)));
    let (mut x0, mut y0, mut x1, mut y1) = (f64::MAX, f64::MAX, f64::MIN, f64::MIN);
    for [x, y] in pts {
        x0 = x0.min(x);
        y0 = y0.min(y);
        x1 = x1.max(x);
        y1 = y1.max(y);
    }
    if x0 > x1 {
        (x0, y0, x1, y1) = (0.0, 0.0, 1.0, 1.0);
    }
    let scale = 20.0;
    let pad = 0.5;
    let (w, h) = ((x1 - x0 + 2.0 * pad) * scale, (y1 - y0 + 2.0 * pad) * scale);
    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w:.1}" height="{h:.1}" viewBox="0 0 {w:.1} {h:.1}">"#
    );
    if !style.is_empty() {
        let _ = writeln!(s, "<style>{style}</style>");
    }
    let tx = |x: f64| (x - x0 + pad) * scale;
    // SVG y grows downward.
    let ty = |y: f64| (y1 - y + pad) * scale;
    for (i, f) in patch.faces.iter().enumerate() {
        let class = classes
            .and_then(|c| c.get(i))
            .map(String::as_str)
            .unwrap_or("");
        let attrs = if class.is_empty() {
            format!(r#"fill="{}""#, default_fill(f.sides))
        } else {
            format!(r#"class="{class}""#)
        };
        if f.polygon.len() >= 3 {
            let path: Vec<String> = f
                .polygon
                .iter()
                .map(|&[x, y]| format!("{:.2},{:.2}", tx(x), ty(y)))
                .collect();
            let _ = writeln!(
                s,
                r##"<polygon points="{}" {attrs} stroke="#333" stroke-width="0.6"><title>{i}</title></polygon>"##,
                path.join(" ")
            );
        } else {
            let _ = writeln!(
                s,
                r#"<circle cx="{:.2}" cy="{:.2}" r="4" {attrs}/>"#,
                tx(f.center[0]),
                ty(f.center[1])
            );
        }
    }
    s.push_str("</svg>\n");
    s
}

/// Class names bucketing infection rounds: `round-N`, `seed` or `healthy`.
pub fn round_classes(rounds: &[Option<u32>]) -> Vec<String> {
    rounds
        .iter()
        .map(|r| match r {
            None => "healthy".to_string(),
            Some(0) => "seed".to_string(),
            Some(n) => format!("round-{}", n.min(&9)),
        })
        .collect()
}

pub const ROUND_STYLE: &str = ".healthy{fill:#fff}.seed{fill:#7a0019}.round-1{fill:#b2182b}.round-2{fill:#d6604d}\
.round-3{fill:#f4a582}.round-4{fill:#fddbc7}.round-5{fill:#e0e0e0}.round-6{fill:#bababa}.round-7{fill:#878787}\
.round-8{fill:#4d4d4d}.round-9{fill:#1a1a1a}";
