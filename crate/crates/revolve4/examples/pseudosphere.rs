//! A negatively curved surface of revolution, K = -1, from the exponential
//! radius profile rho(u) = cosh(u).
//!
//! Unlike the sphere, the unit-speed meridian only exists where
//! |rho'(u)| <= 1, so the admissible domain has to be computed first; for
//! cosh it is |u| <= asinh(1).

use std::f64::consts::TAU;

use revolve4::{
    admissible_domain, build_surface, complete_meridian, gaussian_curvature,
    verify_constant_curvature, CurvatureClass, Family, Interval, MeridianRole, ProfileSpec,
};

fn main() -> revolve4::Result<()> {
    let spec = ProfileSpec::new(CurvatureClass::Negative, 1.0, 0.5, 0.5);
    println!(
        "profile: rho(u) = cosh(u), target K = {}",
        spec.target_curvature()
    );

    let requested = Interval::new(-2.0, 2.0);
    let domain = admissible_domain(&spec, MeridianRole::Sr1, requested)?;
    println!(
        "admissible domain inside [-2, 2]: [{:.6}, {:.6}] (asinh 1 = {:.6})",
        domain.lo,
        domain.hi,
        1.0f64.asinh()
    );

    // Stay slightly inside the boundary, where the meridian flattens out.
    let domain = domain.shrink(0.02 * domain.length()).expect("nonempty");
    let meridian = complete_meridian(&spec, Family::Sr1, 1.0, domain)?;
    let patch = build_surface(Family::Sr1, &meridian, Interval::new(0.0, TAU))?;

    for u in [-0.6, 0.0, 0.6] {
        let k = gaussian_curvature(&patch, (u, 1.0), 1e-4)?;
        println!("K({u:+.1}, 1.0) = {k:.8}");
    }

    let report = verify_constant_curvature(&patch, -1.0, 20, 20, 1e-3)?;
    println!(
        "verified on a 20x20 grid: max |K + 1| = {:.3e} -> {}",
        report.max_abs_deviation,
        if report.passed { "PASS" } else { "FAIL" }
    );
    Ok(())
}
