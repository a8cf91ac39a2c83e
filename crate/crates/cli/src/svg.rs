//! Static SVG figure of a polygon on its lattice grid, with each edge
//! labelled by the determinant of its cone.

use std::fmt::Write as _;

use ldp_core::Polygon;

const UNIT: f64 = 48.0;
const MARGIN: f64 = 24.0;

pub fn render(q: &Polygon) -> String {
    let vs = q.vertices();
    let dets = q.fan().cone_dets();
    let reach = vs.iter().map(|v| v.x.abs().max(v.y.abs())).max().unwrap_or(1) + 1;
    let side = 2.0 * reach as f64 * UNIT + 2.0 * MARGIN;
    // lattice (x, y) to pixel coordinates, y pointing up
    let px = |x: f64| MARGIN + (x + reach as f64) * UNIT;
    let py = |y: f64| MARGIN + (reach as f64 - y) * UNIT;

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{side:.0}" height="{side:.0}" viewBox="0 0 {side:.0} {side:.0}">"#
    );
    let _ = writeln!(s, r#"<rect width="100%" height="100%" fill="white"/>"#);
    let _ = writeln!(s, r##"<g stroke="#dddddd" stroke-width="1">"##);
    for k in -reach..=reach {
        let k = k as f64;
        let lo = -(reach as f64);
        let hi = reach as f64;
        let _ = writeln!(s, r#"<line x1="{:.1}" y1="{:.1}" x2="{:.1}" y2="{:.1}"/>"#, px(k), py(lo), px(k), py(hi));
        let _ = writeln!(s, r#"<line x1="{:.1}" y1="{:.1}" x2="{:.1}" y2="{:.1}"/>"#, px(lo), py(k), px(hi), py(k));
    }
    let _ = writeln!(s, "</g>");
    let _ = writeln!(s, r##"<g fill="#999999">"##);
    for x in -reach..=reach {
        for y in -reach..=reach {
            let _ = writeln!(s, r#"<circle cx="{:.1}" cy="{:.1}" r="2"/>"#, px(x as f64), py(y as f64));
        }
    }
    let _ = writeln!(s, "</g>");

    let points: Vec<String> = vs
        .iter()
        .map(|v| format!("{:.1},{:.1}", px(v.x as f64), py(v.y as f64)))
        .collect();
    let _ = writeln!(
        s,
        r##"<polygon points="{}" fill="#4a90d9" fill-opacity="0.25" stroke="#1f4e8c" stroke-width="2"/>"##,
        points.join(" ")
    );
    for v in vs {
        let _ = writeln!(s, r##"<circle cx="{:.1}" cy="{:.1}" r="4" fill="#1f4e8c"/>"##, px(v.x as f64), py(v.y as f64));
    }
    let _ = writeln!(
        s,
        r##"<circle cx="{:.1}" cy="{:.1}" r="5" fill="none" stroke="#c0392b" stroke-width="2"/>"##,
        px(0.0),
        py(0.0)
    );

    let d = vs.len();
    let _ = writeln!(s, r#"<g font-family="sans-serif" font-size="14" text-anchor="middle" dominant-baseline="middle">"#);
    for k in 0..d {
        let (a, b) = (vs[k], vs[(k + 1) % d]);
        let (mx, my) = ((a.x + b.x) as f64 / 2.0, (a.y + b.y) as f64 / 2.0);
        // outward normal of a counterclockwise edge
        let (nx, ny) = ((b.y - a.y) as f64, (a.x - b.x) as f64);
        let len = (nx * nx + ny * ny).sqrt();
        let (lx, ly) = (mx + 0.3 * nx / len, my + 0.3 * ny / len);
        let fill = if dets[k] > 1 { "#c0392b" } else { "#333333" };
        let _ = writeln!(s, r#"<text x="{:.1}" y="{:.1}" fill="{fill}">{}</text>"#, px(lx), py(ly), dets[k]);
    }
    let _ = writeln!(s, "</g>");
    s.push_str("</svg>\n");
    s
}
