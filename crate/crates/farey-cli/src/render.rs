//! Schematic SVG and DOT drawings of dissections and labeled triangulations.

use std::f64::consts::PI;
use std::fmt::Write;

use farey::dissect::Dissection;

const SIZE: f64 = 480.0;
const MARGIN: f64 = 40.0;

fn edges(d: &Dissection) -> Vec<(usize, usize)> {
    let n = d.n();
    let mut e: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    e.extend(d.diagonals().iter().copied());
    e
}

fn svg_header(width: f64, height: f64) -> String {
    format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{width:.0}\" height=\"{height:.0}\" \
         viewBox=\"0 0 {width:.0} {height:.0}\" font-family=\"sans-serif\" font-size=\"12\">\n"
    )
}

/// Vertices on a regular polygon, sides and diagonals as chords.
pub fn polygon_svg(d: &Dissection, labels: &[String]) -> String {
    let n = d.n();
    let r = SIZE / 2.0 - MARGIN;
    let c = SIZE / 2.0;
    let pos = |i: usize| {
        let t = PI / 2.0 - 2.0 * PI * i as f64 / n as f64;
        (c + r * t.cos(), c - r * t.sin())
    };
    let mut s = svg_header(SIZE, SIZE);
    for (i, j) in edges(d) {
        let ((x1, y1), (x2, y2)) = (pos(i), pos(j));
        let side = (i + 1) % n == j || (j + 1) % n == i;
        let style =
            if side { "stroke=\"black\" stroke-width=\"2\"" } else { "stroke=\"steelblue\" stroke-width=\"1.5\"" };
        writeln!(s, "  <line x1=\"{x1:.2}\" y1=\"{y1:.2}\" x2=\"{x2:.2}\" y2=\"{y2:.2}\" {style}/>").unwrap();
    }
    for i in 0..n {
        let (x, y) = pos(i);
        let (lx, ly) = (c + (x - c) * 1.12, c + (y - c) * 1.12);
        writeln!(s, "  <circle cx=\"{x:.2}\" cy=\"{y:.2}\" r=\"3\"/>").unwrap();
        let label = labels.get(i).cloned().unwrap_or_else(|| i.to_string());
        writeln!(
            s,
            "  <text x=\"{lx:.2}\" y=\"{ly:.2}\" text-anchor=\"middle\" dominant-baseline=\"middle\">{label}</text>"
        )
        .unwrap();
    }
    s.push_str("</svg>\n");
    s
}

/// Vertices along a horizontal strip in label order, edges as semicircles.
/// `order[i]` is the left-to-right rank of vertex `i`.
pub fn strip_svg(d: &Dissection, labels: &[String], order: &[usize]) -> String {
    let n = d.n();
    let step = (SIZE - 2.0 * MARGIN) / (n.max(2) - 1) as f64;
    let base = SIZE / 2.0 + MARGIN;
    let x = |i: usize| MARGIN + step * order[i] as f64;
    let mut s = svg_header(SIZE, base + MARGIN);
    writeln!(
        s,
        "  <line x1=\"{:.2}\" y1=\"{base:.2}\" x2=\"{:.2}\" y2=\"{base:.2}\" stroke=\"gray\"/>",
        MARGIN / 2.0,
        SIZE - MARGIN / 2.0
    )
    .unwrap();
    for (i, j) in edges(d) {
        let (x1, x2) = if x(i) < x(j) { (x(i), x(j)) } else { (x(j), x(i)) };
        let r = (x2 - x1) / 2.0;
        writeln!(s, "  <path d=\"M {x1:.2} {base:.2} A {r:.2} {r:.2} 0 0 1 {x2:.2} {base:.2}\" fill=\"none\" stroke=\"steelblue\"/>")
            .unwrap();
    }
    for i in 0..n {
        let xi = x(i);
        writeln!(s, "  <circle cx=\"{xi:.2}\" cy=\"{base:.2}\" r=\"3\"/>").unwrap();
        let label = labels.get(i).cloned().unwrap_or_else(|| i.to_string());
        writeln!(s, "  <text x=\"{xi:.2}\" y=\"{:.2}\" text-anchor=\"middle\">{label}</text>", base + 18.0).unwrap();
    }
    s.push_str("</svg>\n");
    s
}

/// Undirected graph of sides and diagonals.
pub fn dot(d: &Dissection, labels: &[String]) -> String {
    let mut s = String::from("graph dissection {\n  node [shape=circle];\n");
    for i in 0..d.n() {
        let label = labels.get(i).cloned().unwrap_or_else(|| i.to_string());
        writeln!(s, "  v{i} [label=\"{label}\"];").unwrap();
    }
    for (i, j) in edges(d) {
        let style = if d.diagonals().contains(&(i.min(j), i.max(j))) { " [style=dashed]" } else { "" };
        writeln!(s, "  v{i} -- v{j}{style};").unwrap();
    }
    s.push_str("}\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn drawings_mention_every_edge() {
        let d = Dissection::new(5, [(0, 2), (0, 3)]).unwrap();
        let labels: Vec<String> = (0..5).map(|i| format!("v{i}")).collect();
        assert_eq!(polygon_svg(&d, &labels).matches("<line").count(), 7);
        assert_eq!(strip_svg(&d, &labels, &[4, 3, 2, 1, 0]).matches("<path").count(), 7);
        let g = dot(&d, &labels);
        assert_eq!(g.matches(" -- ").count(), 7);
        assert_eq!(g.matches("dashed").count(), 2);
    }
}
