//! Ready-made disk figures for the constructions in this crate.

use crate::cevians::CevianFrame;
use crate::error::Result;
use crate::kernel::{foot_of_perpendicular, geodesic_through, HPoint, Hyperbolic, MinkowskiVec};
use crate::lexell::{AreaLocus, Hypercycle};
use crate::render::{chart, Element, Scene};

/// Axis parameter range for drawn hypercycles.
const SPAN: f64 = 6.0;

/// Reflection in the line through `A` and `B` (standard position).
fn flip(p: &HPoint) -> HPoint {
    let v = p.vec();
    HPoint::normalize(MinkowskiVec::new(v.x0, v.x1, -v.x2)).expect("reflection preserves the sheet")
}

/// Base, apex, midpoints, the axis and both hypercycles of a locus.
pub fn lexell_scene(locus: &AreaLocus) -> Scene {
    let base = &locus.base;
    let w = |p: &HPoint| base.world(p);
    let (a, b, p) = (w(&base.a), w(&base.b), w(&locus.apex));
    let mut s = Scene::new("Constant-area locus");
    s.triangle(&a, &p, &b, "shade");
    s.segment(&a, &b, "base");
    s.segment(&p, &a, "cevian");
    if locus.apex_reflected.dist(&locus.apex) > 1e-9 {
        let q = w(&locus.apex_reflected);
        s.segment(&q, &b, "cevian");
        s.point(&q, "P'");
    } else {
        s.segment(&p, &b, "cevian");
    }
    let axis = geodesic_through(&w(&locus.midpoints[0]), &w(&locus.midpoints[1]))
        .expect("distinct midpoints");
    s.geodesic(&axis, "axis");
    s.hypercycle_mapped(&locus.carrier, SPAN, "carrier", w);
    s.hypercycle_mapped(&locus.mirror, SPAN, "mirror", w);
    s.point(&a, "A");
    s.point(&b, "B");
    s.point(&p, "P");
    s.point(&w(&locus.midpoints[0]), "M1");
    s.point(&w(&locus.midpoints[1]), "M2");
    s
}

/// Leaves of a foliation over one base, each with its reflection across `AB`.
pub fn foliation_scene(leaves: &[AreaLocus]) -> Scene {
    let mut s = Scene::new("Constant-area foliation");
    let Some(first) = leaves.first() else {
        return s;
    };
    let base = &first.base;
    let w = |p: &HPoint| base.world(p);
    let ab = geodesic_through(&w(&base.a), &w(&base.b)).expect("distinct base points");
    s.geodesic(&ab, "geodesic");
    s.segment(&w(&base.a), &w(&base.b), "base");
    for leaf in leaves {
        s.hypercycle_mapped(&leaf.carrier, SPAN, "leaf", |p| w(p));
        s.hypercycle_mapped(&leaf.carrier, SPAN, "leaf", |p| w(&flip(p)));
    }
    s.point(&w(&base.a), "A");
    s.point(&w(&base.b), "B");
    s
}

/// Hypercycles about a diameter whose endpoints play the ideal base, with a
/// sample apex at distance `c` and its triangle.
pub fn limit_scene(offsets: &[f64], c: f64) -> Result<Scene> {
    let mut s = Scene::new("Ideal base limit");
    let axis = geodesic_through(&HPoint::ORIGIN, &HPoint::from_polar(1.0, 0.0))?;
    s.geodesic(&axis, "base");
    for &d in offsets {
        s.hypercycle(&Hypercycle::new(axis, d), SPAN, "leaf");
        s.hypercycle(&Hypercycle::new(axis, -d), SPAN, "leaf");
    }
    let apex = Hypercycle::new(axis, c).sample(0.4)?;
    let (east, west) = axis.ideal_endpoints();
    let at = chart(&apex);
    let foot = foot_of_perpendicular(&apex, &axis);
    s.elements.push(Element::Segment {
        from: at,
        to: east,
        class: "cevian",
    });
    s.elements.push(Element::Segment {
        from: at,
        to: west,
        class: "cevian",
    });
    s.segment(&apex, &foot, "axis");
    s.point(&apex, "P");
    s.point(&foot, "");
    Ok(s)
}

/// A hyperbolic triangle with its three cevians through `O`.
pub fn cevian_scene(frame: &CevianFrame<Hyperbolic>) -> Scene {
    let t = &frame.tri;
    let mut s = Scene::new("Concurrent cevians");
    s.triangle(&t.a, &t.b, &t.c, "shade");
    for (v, foot) in [(&t.a, &frame.d), (&t.b, &frame.e), (&t.c, &frame.f)] {
        s.segment(v, foot, "cevian");
    }
    for (p, label) in [
        (&t.a, "A"),
        (&t.b, "B"),
        (&t.c, "C"),
        (&frame.d, "D"),
        (&frame.e, "E"),
        (&frame.f, "F"),
        (&frame.o, "O"),
    ] {
        s.point(p, label);
    }
    s
}
