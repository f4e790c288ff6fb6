//! Values computed independently at 40 digits with mpmath from textbook
//! right-triangle relations and frozen here.

#![allow(clippy::excessive_precision)]

use curvgeom::cevians::lambert_median_report;
use curvgeom::kernel::{hdist, HPoint};
use curvgeom::lexell::{
    apex_area_formula, apex_area_synthetic, area_derivative, area_function, foliation_limit,
    ideal_half_area, sinh_c_from_angles,
};
use curvgeom::trig::cathetus_from_hypotenuse;
use curvgeom::GeometryKind;

fn close(got: f64, want: f64, tol: f64) {
    assert!(
        (got - want).abs() <= tol * want.abs().max(1.0),
        "got {got:.17e}, want {want:.17e}"
    );
}

#[test]
fn apex_areas() {
    for (x, y, want) in [
        (0.8, 1.0, 0.6952371307430952490),
        (1.0, 2.0, 1.3536286126494281214),
    ] {
        close(apex_area_formula(x, y).unwrap(), want, 1e-14);
        close(apex_area_synthetic(x, y).unwrap(), want, 1e-13);
    }
    close(foliation_limit(0.8), 1.4524096454830576732, 1e-14);
}

#[test]
fn lambert_ratios() {
    let hyperbolic = [
        (0.5, 3.0413827620899233079),
        (1.0, 3.1623559942145638740),
        (2.0, 3.6081065595029429933),
        (4.0, 5.0270254298867649837),
    ];
    for (side, want) in hyperbolic {
        close(
            lambert_median_report(side, GeometryKind::Hyperbolic)
                .unwrap()
                .ad_over_od,
            want,
            1e-12,
        );
    }
    let spherical = [
        (0.3, 2.9849622343267735404),
        (0.6, 2.9393823499643129593),
        (1.2, 2.7490562412719523371),
    ];
    for (side, want) in spherical {
        close(
            lambert_median_report(side, GeometryKind::Spherical)
                .unwrap()
                .ad_over_od,
            want,
            1e-12,
        );
    }
}

#[test]
fn right_triangle_catheti() {
    close(
        cathetus_from_hypotenuse(2.0, 1.0, GeometryKind::Hyperbolic).unwrap(),
        0.5775278855647406997,
        1e-15,
    );
    close(
        cathetus_from_hypotenuse(1.2, 1.0, GeometryKind::Spherical).unwrap(),
        0.9470635493617644941,
        1e-15,
    );
}

#[test]
fn distances_and_area_function() {
    let d = hdist(&HPoint::from_polar(1.0, 0.3), &HPoint::from_polar(2.0, 2.0)).unwrap();
    close(d, 2.5360678803372169734, 1e-14);
    close(area_function(1.0, 5.0), 0.75074904787853048066, 1e-15);
    close(area_derivative(1.0, 5.0), -0.018182327796228331167, 1e-14);
}

#[test]
fn ideal_values() {
    close(ideal_half_area(0.9).unwrap(), 0.79848229548572196857, 1e-15);
    close(
        sinh_c_from_angles(0.4, 0.9).unwrap(),
        5.0572433853156974472,
        1e-15,
    );
}
