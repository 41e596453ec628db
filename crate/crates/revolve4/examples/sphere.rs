//! Build the round sphere as a surface of revolution in R^4 and verify
//! that its Gaussian curvature is the constant +1.
//!
//! The trigonometric radius profile rho(u) = sin(u) forces K = C^2 = 1;
//! the meridian is completed canonically to f(u) = 1 - cos(u), g = 0.

use std::f64::consts::{PI, TAU};

use revolve4::{
    build_surface, complete_meridian, verify_constant_curvature, CurvatureClass, Family, Interval,
    ProfileSpec,
};

fn main() -> revolve4::Result<()> {
    let spec = ProfileSpec::new(CurvatureClass::Positive, 1.0, 1.0, 0.0);
    println!(
        "profile: rho(u) = sin(u), target K = {}",
        spec.target_curvature()
    );

    let domain = Interval::new(0.05, PI - 0.05);
    let meridian = complete_meridian(&spec, Family::Sr1, 1.0, domain)?;
    println!(
        "meridian at u = pi/2: f = {:.6}, g = {:.6}, rho = {:.6}",
        meridian.f(PI / 2.0),
        meridian.g(PI / 2.0),
        meridian.rho(PI / 2.0)
    );

    let patch = build_surface(Family::Sr1, &meridian, Interval::new(0.0, TAU))?;
    let x = patch.eval(PI / 2.0, 0.0);
    println!(
        "X(pi/2, 0) = ({:.6}, {:.6}, {:.6}, {:.6})",
        x[0], x[1], x[2], x[3]
    );

    let report = verify_constant_curvature(&patch, spec.target_curvature(), 20, 20, 1e-3)?;
    println!(
        "verified on a 20x20 grid: max |K - 1| = {:.3e} -> {}",
        report.max_abs_deviation,
        if report.passed { "PASS" } else { "FAIL" }
    );
    Ok(())
}
