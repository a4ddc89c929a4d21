//! SVG picture of the labeled Shi arrangement for n = 3.
//!
//! Exact witnesses are converted to floats only here, for drawing.

use std::fmt::Write;

use num_traits::ToPrimitive;
use shi_parking::geometry::{enumerate_regions, project_to_sum_zero};
use shi_parking::pairs::pairs;
use shi_parking::{pak_stanley_label, Point, Rational};

use crate::Failure;

const SCALE: f64 = 100.0;
const PAD: f64 = 1.0;

/// Orthonormal basis of the sum-zero plane in R^3.
fn basis() -> [[f64; 3]; 2] {
    let s2 = 2f64.sqrt();
    let s6 = 6f64.sqrt();
    [[1.0 / s2, -1.0 / s2, 0.0], [1.0 / s6, 1.0 / s6, -2.0 / s6]]
}

fn plane_coords(p: &Point<Rational>) -> (f64, f64) {
    let q = project_to_sum_zero(p);
    let x: Vec<f64> = q
        .coords()
        .iter()
        .map(|c| c.to_f64().expect("finite rational"))
        .collect();
    let [u, v] = basis();
    let dot = |b: [f64; 3]| b.iter().zip(&x).map(|(bi, xi)| bi * xi).sum::<f64>();
    (dot(u), dot(v))
}

struct Viewport {
    min_a: f64,
    max_a: f64,
    min_b: f64,
    max_b: f64,
}

impl Viewport {
    fn contains(&self, a: f64, b: f64) -> bool {
        const EPS: f64 = 1e-9;
        a >= self.min_a - EPS && a <= self.max_a + EPS && b >= self.min_b - EPS && b <= self.max_b + EPS
    }

    fn to_svg(&self, a: f64, b: f64) -> (f64, f64) {
        ((a - self.min_a) * SCALE, (self.max_b - b) * SCALE)
    }

    /// Endpoints of `alpha*a + beta*b = c` inside the box.
    fn clip(&self, alpha: f64, beta: f64, c: f64) -> Option<((f64, f64), (f64, f64))> {
        let mut hits = Vec::new();
        if beta.abs() > 1e-12 {
            for a in [self.min_a, self.max_a] {
                hits.push((a, (c - alpha * a) / beta));
            }
        }
        if alpha.abs() > 1e-12 {
            for b in [self.min_b, self.max_b] {
                hits.push(((c - beta * b) / alpha, b));
            }
        }
        hits.retain(|&(a, b)| self.contains(a, b));
        hits.sort_by(|p, q| p.partial_cmp(q).expect("no NaN"));
        Some((*hits.first()?, *hits.last()?))
    }
}

fn num(v: f64) -> String {
    // adding 0.0 turns -0.0 into 0.0
    format!("{:.3}", v + 0.0)
}

pub fn render(n: usize) -> Result<String, Failure> {
    if n != 3 {
        return Err(Failure::Domain(format!("rendering supports only n = 3, got {n}")));
    }
    let mut labels = Vec::new();
    for (sv, w) in enumerate_regions(n)? {
        let x = pak_stanley_label(&sv)?;
        labels.push((plane_coords(w.point()), x));
    }
    let (mut min_a, mut max_a, mut min_b, mut max_b) = (f64::MAX, f64::MIN, f64::MAX, f64::MIN);
    for &((a, b), _) in &labels {
        min_a = min_a.min(a);
        max_a = max_a.max(a);
        min_b = min_b.min(b);
        max_b = max_b.max(b);
    }
    let view = Viewport {
        min_a: min_a - PAD,
        max_a: max_a + PAD,
        min_b: min_b - PAD,
        max_b: max_b + PAD,
    };
    let width = (view.max_a - view.min_a) * SCALE;
    let height = (view.max_b - view.min_b) * SCALE;

    let mut svg = String::new();
    writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{w}" height="{h}" viewBox="0 0 {w} {h}">"#,
        w = num(width),
        h = num(height)
    )
    .unwrap();
    writeln!(svg, r#"<rect width="100%" height="100%" fill="white"/>"#).unwrap();
    let [u, v] = basis();
    for (j, k) in pairs(n) {
        let alpha = u[j - 1] - u[k - 1];
        let beta = v[j - 1] - v[k - 1];
        for c in [0.0, 1.0] {
            let Some((p, q)) = view.clip(alpha, beta, c) else {
                continue;
            };
            let (x1, y1) = view.to_svg(p.0, p.1);
            let (x2, y2) = view.to_svg(q.0, q.1);
            writeln!(
                svg,
                r#"<line x1="{}" y1="{}" x2="{}" y2="{}" stroke="black" stroke-width="1.5" data-hyperplane="x{j}-x{k}={c}"/>"#,
                num(x1),
                num(y1),
                num(x2),
                num(y2),
            )
            .unwrap();
        }
    }
    for ((a, b), x) in &labels {
        let (sx, sy) = view.to_svg(*a, *b);
        let text: String = x.entries().iter().map(|e| e.to_string()).collect();
        writeln!(
            svg,
            r#"<text x="{}" y="{}" font-family="sans-serif" font-size="14" text-anchor="middle" dominant-baseline="middle">{text}</text>"#,
            num(sx),
            num(sy)
        )
        .unwrap();
    }
    svg.push_str("</svg>\n");
    Ok(svg)
}
