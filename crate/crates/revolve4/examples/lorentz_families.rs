//! Constant-curvature surfaces of revolution in Lorentz-Minkowski space:
//! the hyperbolic type SR3 = (f, g, rho sinh v, rho cosh v) and the
//! elliptic type SR4 = (rho cos v, rho sin v, f, g).
//!
//! The sign eps of E (spacelike +1 / timelike -1 meridian) decides which
//! functional form of the radius realizes a given curvature sign: the
//! curvature is K = -eps * rho''/rho, so the eps = -1 column pairs the
//! exponential radius with *positive* K and vice versa.

use std::f64::consts::TAU;

use revolve4::{
    build_surface, complete_meridian, verify_constant_curvature, CurvatureClass, Family, Interval,
    ProfileSpec,
};

fn v_range(family: Family) -> Interval {
    match family {
        Family::Sr3 => Interval::new(-1.0, 1.0),
        _ => Interval::new(0.0, TAU),
    }
}

fn main() -> revolve4::Result<()> {
    let cases: Vec<(Family, f64, ProfileSpec, Interval)> = vec![
        (
            Family::Sr3,
            1.0,
            ProfileSpec::new(CurvatureClass::Negative, 1.0, 0.5, 0.5),
            Interval::new(-1.0, 1.0),
        ),
        (
            Family::Sr3,
            -1.0,
            ProfileSpec::new(CurvatureClass::Positive, 1.0, 1.0, 0.05),
            Interval::new(0.3, 2.0),
        ),
        (
            Family::Sr4,
            1.0,
            ProfileSpec::new(CurvatureClass::Positive, 1.0, 1.0, 0.0),
            Interval::new(0.3, 2.8),
        ),
        (
            Family::Sr4,
            -1.0,
            ProfileSpec::new(CurvatureClass::Negative, 1.0, 1.0, 0.0),
            Interval::new(0.3, 2.8),
        ),
        (
            Family::Sr4,
            1.0,
            ProfileSpec::new(CurvatureClass::Zero, 1.0, 2.0, 1.0),
            Interval::new(0.0, 1.0),
        ),
    ];

    println!("family  eps  form            target K   max deviation   verdict");
    for (family, eps, spec, domain) in cases {
        let spec = spec.with_eps(eps);
        let meridian = complete_meridian(&spec, family, eps, domain)?;
        let patch = build_surface(family, &meridian, v_range(family))?;
        let report = verify_constant_curvature(&patch, spec.target_curvature(), 16, 16, 1e-3)?;
        println!(
            "{}     {:+.0}  {:<15} {:+.1}       {:.3e}       {}",
            family,
            eps,
            format!("{:?}", spec.form()),
            spec.target_curvature(),
            report.max_abs_deviation,
            if report.passed { "PASS" } else { "FAIL" }
        );
    }
    Ok(())
}
