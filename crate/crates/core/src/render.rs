//! SVG figures in the Poincare disk.
//!
//! The unit disk maps to a 1000x1000 view box with the centre at (500, 500)
//! and radius [`DISK_RADIUS`]; the y axis points up in the chart and down on
//! screen. Geodesic segments are drawn as circular arcs orthogonal to the
//! boundary (or straight lines through the centre) and hypercycles as
//! 64-segment polylines.

use std::fmt::Write as _;

use crate::kernel::{hpoint_to_disk, Geodesic, HPoint};
use crate::lexell::Hypercycle;

pub const VIEW_SIZE: f64 = 1000.0;
pub const DISK_RADIUS: f64 = 480.0;
pub const HYPERCYCLE_SEGMENTS: usize = 64;
/// Orthogonality slack for arcs, as a difference of angles in radians.
pub const ARC_ANGLE_TOL: f64 = 1e-6;

/// A chart point `(u, w)` in the closed unit disk.
pub type Chart = [f64; 2];

pub fn chart(p: &HPoint) -> Chart {
    let d = hpoint_to_disk(p);
    [d.u, d.w]
}

#[derive(Debug, Clone, PartialEq)]
pub enum Element {
    Point {
        at: Chart,
        label: String,
    },
    /// The geodesic segment between two chart points (ideal endpoints allowed).
    Segment {
        from: Chart,
        to: Chart,
        class: &'static str,
    },
    Polyline {
        points: Vec<Chart>,
        class: &'static str,
    },
    /// A geodesic triangle, filled.
    Triangle {
        vertices: [Chart; 3],
        class: &'static str,
    },
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct Scene {
    pub title: String,
    pub elements: Vec<Element>,
}

/// How an arc between two chart points is drawn.
#[derive(Debug, Clone, Copy, PartialEq)]
enum Arc {
    Straight,
    Circle { centre: Chart, radius: f64 },
}

/// Circle through `z1`, `z2` orthogonal to the unit circle: its centre `c`
/// solves `2 z.c = |z|^2 + 1` for both points.
fn geodesic_arc(z1: Chart, z2: Chart) -> Arc {
    let det = z1[0] * z2[1] - z1[1] * z2[0];
    let scale = (z1[0].hypot(z1[1]) * z2[0].hypot(z2[1])).max(1e-300);
    if det.abs() <= 1e-9 * scale || det.abs() < 1e-12 {
        return Arc::Straight;
    }
    let r1 = 0.5 * (z1[0] * z1[0] + z1[1] * z1[1] + 1.0);
    let r2 = 0.5 * (z2[0] * z2[0] + z2[1] * z2[1] + 1.0);
    let centre = [
        (r1 * z2[1] - r2 * z1[1]) / det,
        (z1[0] * r2 - z2[0] * r1) / det,
    ];
    let radius = (centre[0] * centre[0] + centre[1] * centre[1] - 1.0)
        .max(0.0)
        .sqrt();
    Arc::Circle { centre, radius }
}

fn screen(z: Chart) -> (f64, f64) {
    (
        0.5 * VIEW_SIZE + DISK_RADIUS * z[0],
        0.5 * VIEW_SIZE - DISK_RADIUS * z[1],
    )
}

/// Drawing command from `z1` to `z2`, without the initial move.
fn arc_cmd(z1: Chart, z2: Chart) -> String {
    let (x1, y1) = screen(z1);
    let (x2, y2) = screen(z2);
    match geodesic_arc(z1, z2) {
        Arc::Straight => format!("L {x2:.3} {y2:.3}"),
        Arc::Circle { centre, radius } => {
            let (cx, cy) = screen(centre);
            let cross = (x1 - cx) * (y2 - cy) - (y1 - cy) * (x2 - cx);
            let sweep = u8::from(cross > 0.0);
            let r = radius * DISK_RADIUS;
            format!("A {r:.3} {r:.3} 0 0 {sweep} {x2:.3} {y2:.3}")
        }
    }
}

fn arc_path(z1: Chart, z2: Chart) -> String {
    let (x1, y1) = screen(z1);
    format!("M {x1:.3} {y1:.3} {}", arc_cmd(z1, z2))
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
}

impl Scene {
    pub fn new(title: impl Into<String>) -> Self {
        Self {
            title: title.into(),
            elements: Vec::new(),
        }
    }

    pub fn point(&mut self, p: &HPoint, label: &str) {
        self.elements.push(Element::Point {
            at: chart(p),
            label: label.into(),
        });
    }

    pub fn segment(&mut self, p: &HPoint, q: &HPoint, class: &'static str) {
        self.elements.push(Element::Segment {
            from: chart(p),
            to: chart(q),
            class,
        });
    }

    /// The whole geodesic, between its ideal endpoints.
    pub fn geodesic(&mut self, g: &Geodesic, class: &'static str) {
        let (a, b) = g.ideal_endpoints();
        self.elements.push(Element::Segment {
            from: a,
            to: b,
            class,
        });
    }

    /// The hypercycle over axis parameters `[-span, span]`.
    pub fn hypercycle(&mut self, h: &Hypercycle, span: f64, class: &'static str) {
        self.hypercycle_mapped(h, span, class, |p| *p);
    }

    /// As [`Scene::hypercycle`], with every sample passed through `map` first.
    pub fn hypercycle_mapped(
        &mut self,
        h: &Hypercycle,
        span: f64,
        class: &'static str,
        map: impl Fn(&HPoint) -> HPoint,
    ) {
        let points = h
            .polyline(-span, span, HYPERCYCLE_SEGMENTS)
            .expect("finite span")
            .iter()
            .map(|p| chart(&map(p)))
            .collect();
        self.elements.push(Element::Polyline { points, class });
    }

    pub fn triangle(&mut self, a: &HPoint, b: &HPoint, c: &HPoint, class: &'static str) {
        self.elements.push(Element::Triangle {
            vertices: [chart(a), chart(b), chart(c)],
            class,
        });
    }

    /// Check that every coordinate is in the closed unit disk and that every
    /// arc meets the boundary circle at a right angle.
    pub fn validate(&self) -> Result<(), String> {
        let inside = |z: &Chart| z[0].hypot(z[1]) <= 1.0 + 1e-12;
        let check_arc = |z1: Chart, z2: Chart| -> Result<(), String> {
            if let Arc::Circle { centre, radius } = geodesic_arc(z1, z2) {
                // angle between the arc circle and the unit circle at their
                // crossing, from the law of cosines: cos = (1 + r^2 - |c|^2) / 2r
                let c2 = centre[0] * centre[0] + centre[1] * centre[1];
                let cos = (1.0 + radius * radius - c2) / (2.0 * radius);
                let off = (cos.clamp(-1.0, 1.0).acos() - std::f64::consts::FRAC_PI_2).abs();
                if off > ARC_ANGLE_TOL {
                    return Err(format!(
                        "arc {z1:?}-{z2:?} meets the boundary {off:e} off a right angle"
                    ));
                }
                for z in [z1, z2] {
                    let r = (z[0] - centre[0]).hypot(z[1] - centre[1]);
                    if (r - radius).abs() > 1e-9 * (1.0 + radius) {
                        return Err(format!("arc circle misses its endpoint {z:?}"));
                    }
                }
            }
            Ok(())
        };
        for e in &self.elements {
            let pts: Vec<Chart> = match e {
                Element::Point { at, .. } => vec![*at],
                Element::Segment { from, to, .. } => {
                    check_arc(*from, *to)?;
                    vec![*from, *to]
                }
                Element::Polyline { points, .. } => points.clone(),
                Element::Triangle { vertices, .. } => {
                    for k in 0..3 {
                        check_arc(vertices[k], vertices[(k + 1) % 3])?;
                    }
                    vertices.to_vec()
                }
            };
            if let Some(z) = pts.iter().find(|z| !inside(z)) {
                return Err(format!("coordinate {z:?} outside the unit disk"));
            }
        }
        Ok(())
    }

    pub fn to_svg(&self) -> String {
        let mut s = String::new();
        let c = 0.5 * VIEW_SIZE;
        let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
        let _ = writeln!(
            s,
            r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" viewBox="0 0 {VIEW_SIZE} {VIEW_SIZE}" width="{VIEW_SIZE}" height="{VIEW_SIZE}">"#
        );
        let _ = writeln!(s, "<title>{}</title>", escape(&self.title));
        let _ = writeln!(
            s,
            "<style>.boundary{{fill:#fafafa;stroke:#222;stroke-width:2}} .base{{stroke:#000;stroke-width:3;fill:none}} \
             .geodesic{{stroke:#1f5fa8;stroke-width:2;fill:none}} .axis{{stroke:#1f5fa8;stroke-width:2;stroke-dasharray:8 5;fill:none}} \
             .carrier{{stroke:#c0392b;stroke-width:2.5;fill:none}} .mirror{{stroke:#27ae60;stroke-width:2.5;fill:none}} \
             .leaf{{stroke:#8e44ad;stroke-width:1.8;fill:none}} .cevian{{stroke:#555;stroke-width:1.5;fill:none}} \
             .shade{{fill:#f5cba7;fill-opacity:0.6;stroke:#000;stroke-width:1.5}} text{{font:22px sans-serif}}</style>"
        );
        let _ = writeln!(
            s,
            r#"<circle class="boundary" cx="{c}" cy="{c}" r="{DISK_RADIUS}"/>"#
        );
        for e in &self.elements {
            match e {
                Element::Triangle { vertices, class } => {
                    let [a, b, cc] = *vertices;
                    let d = format!("{} {} {} Z", arc_path(a, b), arc_cmd(b, cc), arc_cmd(cc, a));
                    let _ = writeln!(s, r#"<path class="{class}" d="{d}"/>"#);
                }
                Element::Segment { from, to, class } => {
                    let _ = writeln!(s, r#"<path class="{class}" d="{}"/>"#, arc_path(*from, *to));
                }
                Element::Polyline { points, class } => {
                    let pts = points
                        .iter()
                        .map(|z| {
                            let (x, y) = screen(*z);
                            format!("{x:.3},{y:.3}")
                        })
                        .collect::<Vec<_>>()
                        .join(" ");
                    let _ = writeln!(s, r#"<polyline class="{class}" points="{pts}"/>"#);
                }
                Element::Point { .. } => {}
            }
        }
        for e in &self.elements {
            if let Element::Point { at, label } = e {
                let (x, y) = screen(*at);
                let _ = writeln!(
                    s,
                    r##"<circle cx="{x:.3}" cy="{y:.3}" r="5" fill="#000"/>"##
                );
                if !label.is_empty() {
                    let _ = writeln!(
                        s,
                        r#"<text x="{:.3}" y="{:.3}">{}</text>"#,
                        x + 8.0,
                        y - 8.0,
                        escape(label)
                    );
                }
            }
        }
        s.push_str("</svg>\n");
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::geodesic_through;

    #[test]
    fn arcs_are_orthogonal() {
        let p = HPoint::from_polar(1.0, 0.3);
        let q = HPoint::from_polar(2.0, 2.0);
        let mut scene = Scene::new("t");
        scene.segment(&p, &q, "geodesic");
        scene.geodesic(&geodesic_through(&p, &q).unwrap(), "axis");
        scene.triangle(&p, &q, &HPoint::ORIGIN, "shade");
        scene.point(&p, "P");
        scene.validate().unwrap();
        let svg = scene.to_svg();
        assert!(svg.contains("<path class=\"geodesic\" d=\"M"));
        assert!(svg.contains(">P</text>"));
    }

    #[test]
    fn diameter_is_straight() {
        assert_eq!(geodesic_arc([0.5, 0.0], [-0.3, 0.0]), Arc::Straight);
        assert!(arc_path([0.5, 0.0], [-0.3, 0.0]).contains(" L "));
    }

    #[test]
    fn circle_passes_through_endpoints() {
        let (z1, z2) = ([0.3, 0.4], [-0.5, 0.1]);
        let Arc::Circle { centre, radius } = geodesic_arc(z1, z2) else {
            panic!()
        };
        for z in [z1, z2] {
            assert!(((z[0] - centre[0]).hypot(z[1] - centre[1]) - radius).abs() < 1e-12);
        }
        assert!((centre[0].powi(2) + centre[1].powi(2) - radius * radius - 1.0).abs() < 1e-12);
    }

    #[test]
    fn closed_triangle_path() {
        let mut scene = Scene::new("t");
        scene.triangle(
            &HPoint::from_polar(1.0, 0.0),
            &HPoint::from_polar(1.0, 2.0),
            &HPoint::from_polar(1.0, 4.0),
            "shade",
        );
        let svg = scene.to_svg();
        let line = svg.lines().find(|l| l.contains("class=\"shade\"")).unwrap();
        assert_eq!(line.matches(" A ").count(), 3);
        assert_eq!(line.matches('M').count(), 1);
        assert!(line.contains(" Z\""));
    }

    #[test]
    fn rejects_points_outside_the_disk() {
        let mut scene = Scene::new("t");
        scene.elements.push(Element::Point {
            at: [1.2, 0.0],
            label: String::new(),
        });
        assert!(scene.validate().is_err());
    }
}
