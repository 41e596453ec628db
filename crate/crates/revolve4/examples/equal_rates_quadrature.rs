//! With equal rotation rates the turning-angle equation decouples from phi
//! and reduces to an explicit quadrature. This example runs both solvers
//! on the same profiles and compares them, including the flat case whose
//! quadrature has the elementary antiderivative (C ln(C1 u + C2) style).

use revolve4::{integrate_phi, quadrature_phi, CurvatureClass, Interval, ProfileSpec, RootBranch};

fn main() -> revolve4::Result<()> {
    let cases = [
        (
            "zero   (G = (0.6u + 1)^2)",
            ProfileSpec::new(CurvatureClass::Zero, 1.0, 0.6, 1.0),
            Interval::new(0.0, 1.0),
        ),
        (
            "pos    (G = sin^2 u)",
            ProfileSpec::new(CurvatureClass::Positive, 1.0, 1.0, 0.0),
            Interval::new(0.3, 2.8),
        ),
        (
            "neg    (G = cosh^2 u)",
            ProfileSpec::new(CurvatureClass::Negative, 1.0, 0.5, 0.5),
            Interval::new(-0.85, 0.85),
        ),
    ];

    for (label, spec, domain) in cases {
        let quad = quadrature_phi(&spec, 1.0, domain, 0.0)?;
        let ode = integrate_phi(&spec, 1.0, 1.0, domain, 0.0, RootBranch::Plus, 1e-3)?;
        let qi = quad.interpolant();
        let oi = ode.interpolant();
        let gap = (0..200)
            .map(|i| {
                let u = domain.lerp(i as f64 / 199.0);
                (qi.eval(u) - oi.eval(u)).abs()
            })
            .fold(0.0, f64::max);
        println!("{label}: max |phi_quad - phi_ode| = {gap:.3e}");
    }

    // The flat case has an elementary antiderivative to compare against.
    let spec = ProfileSpec::new(CurvatureClass::Zero, 1.0, 0.6, 1.0);
    let quad = quadrature_phi(&spec, 1.0, Interval::new(0.0, 1.0), 0.0)?;
    let exact = (4.0 / 3.0) * 1.6f64.ln();
    println!(
        "flat case phi(1): quadrature {:.12}, antiderivative (4/3)ln(1.6) = {:.12}",
        quad.phi_at(1.0),
        exact
    );

    // A boundary-admissible slope makes the integrand vanish identically.
    let cone = ProfileSpec::new(CurvatureClass::Zero, 1.0, 1.0, 1.0);
    let frozen = quadrature_phi(&cone, 1.0, Interval::new(0.0, 1.0), 0.3)?;
    println!(
        "slope C1 = alpha freezes the angle: phi stays at {:.1} over the whole domain",
        frozen.phi_at(0.7)
    );
    Ok(())
}
