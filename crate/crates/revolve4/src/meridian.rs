//! Meridians of general rotational surfaces with constant curvature.
//!
//! An SR2 surface has constant Gaussian curvature exactly when its meridian
//! can be written as `f = sqrt(G) cos(phi) / alpha`, `g = sqrt(G) sin(phi) / beta`
//! with `G` one of the closed-form profiles and the turning angle `phi`
//! solving an implicit quadratic in `phi'`:
//!
//! ```text
//! A(u, phi) * phi'^2 + B(u, phi) * phi' + C(u, phi) = 0
//!
//! A = G (sin^2 phi / alpha^2 + cos^2 phi / beta^2)
//! B = G' sin phi cos phi (1/beta^2 - 1/alpha^2)
//! C = G'^2/(4G) (cos^2 phi / alpha^2 + sin^2 phi / beta^2) - 1
//! ```
//!
//! The equation is nothing but the arc-length condition `f'^2 + g'^2 = 1`
//! expanded through the substitution; in particular the cross coefficient
//! carries `G' = 2 sqrt(G) (sqrt G)'`, which is what makes `B phi'`
//! dimensionless alongside the other two terms.
//!
//! The quadratic is solved pointwise for `phi'`; which of the two real
//! roots to follow is a caller choice ([`RootBranch`]) held fixed along the
//! whole trajectory, since the two branches trace congruent meridians run
//! in opposite senses. A negative discriminant means no real unit-speed
//! meridian passes through that `(u, phi)`.
//!
//! For equal rates `alpha = beta` the cross term drops out, the equation
//! decouples from `phi`, and the angle reduces to a quadrature:
//!
//! ```text
//! phi(u) = phi0 + integral sqrt(alpha^2 - (sqrt(G))'^2) / sqrt(G) du
//! ```
//!
//! which is implemented in [`quadrature_phi`] and doubles as an independent
//! cross-check of the Runge-Kutta path. At points where the radicand just
//! touches zero the integrand is continued by zero: the meridian degenerates
//! to constant turning angle there, which is a valid (conical) instance, not
//! an error.

use crate::error::{Error, Result};
use crate::interp::CubicHermite;
use crate::profile::ProfileSpec;
use crate::quad::cumulative;
use crate::space::Interval;

/// Which root of the quadratic to follow.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RootBranch {
    Plus,
    Minus,
}

impl RootBranch {
    pub fn sign(self) -> f64 {
        match self {
            RootBranch::Plus => 1.0,
            RootBranch::Minus => -1.0,
        }
    }
}

/// How a [`MeridianSolution`] was produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolveMethod {
    /// Fixed-step fourth-order Runge-Kutta on the quadratic's root.
    GeneralOde,
    /// Equal-rates closed-form quadrature.
    ClosedFormQuadrature,
}

/// Coefficients of the pointwise quadratic `a phi'^2 + b phi' + c = 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OdeCoefficients {
    pub a: f64,
    pub b: f64,
    pub c: f64,
}

/// Sampled meridian of an SR2 surface: turning angle plus the plane
/// coordinates reconstructed from it.
#[derive(Debug, Clone)]
pub struct MeridianSolution {
    pub alpha: f64,
    pub beta: f64,
    pub spec: ProfileSpec,
    pub phi0: f64,
    pub branch: RootBranch,
    pub method: SolveMethod,
    /// Strictly increasing sample parameters.
    pub u_samples: Vec<f64>,
    pub phi: Vec<f64>,
    /// Exact `phi'` at the samples (from the equation, not differences).
    pub phi_prime: Vec<f64>,
    pub f: Vec<f64>,
    pub g: Vec<f64>,
}

impl MeridianSolution {
    pub fn domain(&self) -> Interval {
        Interval::new(self.u_samples[0], self.u_samples[self.u_samples.len() - 1])
    }

    /// Cubic interpolant of the turning angle; build once when evaluating
    /// in a loop.
    pub fn interpolant(&self) -> CubicHermite {
        CubicHermite::new(
            self.u_samples.clone(),
            self.phi.clone(),
            self.phi_prime.clone(),
        )
    }

    /// Interpolated turning angle at `u`.
    pub fn phi_at(&self, u: f64) -> f64 {
        self.interpolant().eval(u)
    }

    /// Largest absolute residual of the meridian equation over the interior
    /// samples, with `phi'` reconstructed by central differences.
    pub fn max_equation_residual(&self) -> f64 {
        let n = self.u_samples.len();
        let mut worst = 0.0f64;
        for i in 1..n - 1 {
            let du = self.u_samples[i + 1] - self.u_samples[i - 1];
            let phi_prime = (self.phi[i + 1] - self.phi[i - 1]) / du;
            let coeffs = ode_coefficients(
                &self.spec,
                self.alpha,
                self.beta,
                self.u_samples[i],
                self.phi[i],
            )
            .expect("samples lie inside the profile domain");
            let residual = coeffs.a * phi_prime * phi_prime + coeffs.b * phi_prime + coeffs.c;
            worst = worst.max(residual.abs());
        }
        worst
    }

    /// Largest deviation of `f'^2 + g'^2` from 1 over the interior samples,
    /// with derivatives from central differences.
    pub fn max_unit_speed_defect(&self) -> f64 {
        let n = self.u_samples.len();
        let mut worst = 0.0f64;
        for i in 1..n - 1 {
            let du = self.u_samples[i + 1] - self.u_samples[i - 1];
            let fp = (self.f[i + 1] - self.f[i - 1]) / du;
            let gp = (self.g[i + 1] - self.g[i - 1]) / du;
            worst = worst.max((fp * fp + gp * gp - 1.0).abs());
        }
        worst
    }
}

/// Coefficients of the implicit meridian equation at `(u, phi)`.
pub fn ode_coefficients(
    spec: &ProfileSpec,
    alpha: f64,
    beta: f64,
    u: f64,
    phi: f64,
) -> Result<OdeCoefficients> {
    let g = spec.g_profile(u)?;
    let g_prime = 2.0 * spec.g_base(u) * spec.g_base_prime(u);
    let (s, c) = phi.sin_cos();
    let ia2 = 1.0 / (alpha * alpha);
    let ib2 = 1.0 / (beta * beta);
    Ok(OdeCoefficients {
        a: g * (s * s * ia2 + c * c * ib2),
        b: g_prime * s * c * (ib2 - ia2),
        c: g_prime * g_prime / (4.0 * g) * (c * c * ia2 + s * s * ib2) - 1.0,
    })
}

/// Discriminants closer to zero than this (relative to the coefficient
/// scale) are treated as exactly zero; they occur where the meridian
/// degenerates rather than fails.
const DISCRIMINANT_ROUNDOFF: f64 = 1e-12;

/// Selected real root of the quadratic, `(-b + sign * sqrt(b^2 - 4ac)) / 2a`.
pub fn solve_phi_prime(coeffs: OdeCoefficients, branch: RootBranch) -> Result<f64> {
    let OdeCoefficients { a, b, c } = coeffs;
    debug_assert!(a > 0.0, "quadratic coefficient must be positive");
    let mut disc = b * b - 4.0 * a * c;
    let scale = (b * b).max((4.0 * a * c).abs()).max(1.0);
    if disc < 0.0 && disc >= -DISCRIMINANT_ROUNDOFF * scale {
        disc = 0.0;
    }
    if disc < 0.0 {
        return Err(Error::NegativeDiscriminant {
            u: None,
            discriminant: disc,
        });
    }
    Ok((-b + branch.sign() * disc.sqrt()) / (2.0 * a))
}

fn reconstruct_plane_coords(
    spec: &ProfileSpec,
    alpha: f64,
    beta: f64,
    us: &[f64],
    phis: &[f64],
) -> (Vec<f64>, Vec<f64>) {
    let mut f = Vec::with_capacity(us.len());
    let mut g = Vec::with_capacity(us.len());
    for (&u, &phi) in us.iter().zip(phis) {
        let sqrt_g = spec.g_base(u).abs();
        let (s, c) = phi.sin_cos();
        f.push(sqrt_g * c / alpha);
        g.push(sqrt_g * s / beta);
    }
    (f, g)
}

/// Integrate the turning angle with fixed-step RK4 following one root
/// branch.
///
/// The discriminant is checked at every internal stage; on failure the
/// first infeasible parameter is located by bisection to 1e-8 and reported
/// in the error.
pub fn integrate_phi(
    spec: &ProfileSpec,
    alpha: f64,
    beta: f64,
    u_range: Interval,
    phi0: f64,
    branch: RootBranch,
    step: f64,
) -> Result<MeridianSolution> {
    assert!(alpha > 0.0 && beta > 0.0, "rotation rates must be positive");
    assert!(step > 0.0, "step must be positive");
    if !u_range.is_proper() {
        return Err(Error::EmptyDomain {
            lo: u_range.lo,
            hi: u_range.hi,
        });
    }
    let rhs = |u: f64, phi: f64| -> Result<f64> {
        solve_phi_prime(ode_coefficients(spec, alpha, beta, u, phi)?, branch)
    };
    let n = (u_range.length() / step).ceil().max(1.0) as usize;

    let rk4 = |u: f64, phi: f64, h: f64| -> Result<f64> {
        let k1 = rhs(u, phi)?;
        let k2 = rhs(u + 0.5 * h, phi + 0.5 * h * k1)?;
        let k3 = rhs(u + 0.5 * h, phi + 0.5 * h * k2)?;
        let k4 = rhs(u + h, phi + h * k3)?;
        Ok(phi + h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4))
    };

    let mut us = Vec::with_capacity(n + 1);
    let mut phis = Vec::with_capacity(n + 1);
    let mut phi_primes = Vec::with_capacity(n + 1);
    let mut u = u_range.lo;
    let mut phi = phi0;
    us.push(u);
    phis.push(phi);
    phi_primes.push(rhs(u, phi).map_err(|e| locate(e, u))?);
    for i in 1..=n {
        let next_u = u_range.lerp(i as f64 / n as f64);
        phi = match rk4(u, phi, next_u - u) {
            Ok(next) => next,
            Err(err) => {
                return Err(locate_step_failure(u, phi, next_u - u, &rk4, err));
            }
        };
        u = next_u;
        us.push(u);
        phis.push(phi);
        phi_primes.push(rhs(u, phi).map_err(|e| locate(e, u))?);
    }

    let (f, g) = reconstruct_plane_coords(spec, alpha, beta, &us, &phis);
    Ok(MeridianSolution {
        alpha,
        beta,
        spec: *spec,
        phi0,
        branch,
        method: SolveMethod::GeneralOde,
        u_samples: us,
        phi: phis,
        phi_prime: phi_primes,
        f,
        g,
    })
}

fn locate(err: Error, u: f64) -> Error {
    match err {
        Error::NegativeDiscriminant { discriminant, .. } => Error::NegativeDiscriminant {
            u: Some(u),
            discriminant,
        },
        other => other,
    }
}

const FAILURE_LOCATE_TOL: f64 = 1e-8;

/// Bisect on the step length to find where the trajectory first loses its
/// real root, then attach that parameter to the error.
fn locate_step_failure(
    u: f64,
    phi: f64,
    h: f64,
    rk4: &dyn Fn(f64, f64, f64) -> Result<f64>,
    err: Error,
) -> Error {
    let mut bad = h;
    let mut good = 0.0;
    let mut last_err = err;
    while bad - good > FAILURE_LOCATE_TOL {
        let mid = 0.5 * (good + bad);
        match rk4(u, phi, mid) {
            Ok(_) => good = mid,
            Err(e) => {
                bad = mid;
                last_err = e;
            }
        }
    }
    locate(last_err, u + bad)
}

/// Node spacing of the quadrature sampling grid.
const QUADRATURE_NODE_SPACING: f64 = 1e-3;
const QUADRATURE_TOL: f64 = 1e-10;
/// Radicand below this is a real definedness violation, not round-off.
const RADICAND_ROUNDOFF: f64 = 1e-9;

/// Equal-rates turning angle by adaptive quadrature:
/// `phi(u) = phi0 + integral sqrt(alpha^2 - (sqrt G)'^2) / sqrt(G)`.
///
/// Fails with [`Error::NegativeRadicand`] where the constants violate the
/// definedness of the integrand; an isolated zero of the radicand is fine
/// and integrates as zero.
pub fn quadrature_phi(
    spec: &ProfileSpec,
    alpha: f64,
    u_range: Interval,
    phi0: f64,
) -> Result<MeridianSolution> {
    assert!(alpha > 0.0, "rotation rate must be positive");
    if !u_range.is_proper() {
        return Err(Error::EmptyDomain {
            lo: u_range.lo,
            hi: u_range.hi,
        });
    }
    let n = (u_range.length() / QUADRATURE_NODE_SPACING).ceil().max(8.0) as usize;
    let nodes: Vec<f64> = (0..=n).map(|i| u_range.lerp(i as f64 / n as f64)).collect();

    let radicand = |u: f64| {
        let d = spec.g_base_prime(u);
        alpha * alpha - d * d
    };
    let mut prev = u_range.lo;
    for &u in &nodes {
        spec.g_profile(u)?;
        if radicand(u) < -RADICAND_ROUNDOFF {
            let at = first_radicand_zero(&radicand, prev, u);
            return Err(Error::NegativeRadicand { u: at });
        }
        prev = u;
    }

    let integrand = move |u: f64| radicand(u).max(0.0).sqrt() / spec.g_base(u).abs();
    let integral = cumulative(&integrand, &nodes, QUADRATURE_TOL);
    let phis: Vec<f64> = integral.iter().map(|v| phi0 + v).collect();
    let phi_primes: Vec<f64> = nodes.iter().map(|&u| integrand(u)).collect();
    let (f, g) = reconstruct_plane_coords(spec, alpha, alpha, &nodes, &phis);
    Ok(MeridianSolution {
        alpha,
        beta: alpha,
        spec: *spec,
        phi0,
        branch: RootBranch::Plus,
        method: SolveMethod::ClosedFormQuadrature,
        u_samples: nodes,
        phi: phis,
        phi_prime: phi_primes,
        f,
        g,
    })
}

fn first_radicand_zero(radicand: &dyn Fn(f64) -> f64, mut good: f64, mut bad: f64) -> f64 {
    if radicand(good) < 0.0 {
        return good;
    }
    while bad - good > FAILURE_LOCATE_TOL {
        let mid = 0.5 * (good + bad);
        if radicand(mid) < 0.0 {
            bad = mid;
        } else {
            good = mid;
        }
    }
    bad
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::profile::CurvatureClass;

    fn affine_spec() -> ProfileSpec {
        ProfileSpec::new(CurvatureClass::Zero, 1.0, 0.6, 1.0)
    }

    /// phi for the affine G = (0.6 u + 1)^2 at alpha = 1 has the closed
    /// antiderivative (0.8 / 0.6) ln(0.6 u + 1).
    fn affine_phi(u: f64) -> f64 {
        (0.8 / 0.6) * (0.6 * u + 1.0).ln()
    }

    #[test]
    fn coefficients_by_hand_substitution() {
        let coeffs = ode_coefficients(&affine_spec(), 1.0, 1.0, 0.0, 0.0).unwrap();
        assert!((coeffs.a - 1.0).abs() < 1e-15);
        assert_eq!(coeffs.b, 0.0);
        assert!((coeffs.c + 0.64).abs() < 1e-15);
    }

    #[test]
    fn equal_rates_kill_the_cross_term() {
        let spec = affine_spec();
        for phi in [0.0, 0.3, 1.1, 2.9] {
            let coeffs = ode_coefficients(&spec, 1.3, 1.3, 0.5, phi).unwrap();
            assert_eq!(coeffs.b, 0.0);
        }
    }

    #[test]
    fn unequal_rates_coefficients_at_right_angle() {
        // G = 1, G' = 0 at u = 0 for the constant profile.
        let spec = ProfileSpec::new(CurvatureClass::Zero, 1.0, 0.0, 1.0);
        let coeffs = ode_coefficients(&spec, 1.0, 2.0, 0.0, std::f64::consts::FRAC_PI_2).unwrap();
        assert!((coeffs.a - 1.0).abs() < 1e-15);
        assert!(coeffs.b.abs() < 1e-15);
        assert!((coeffs.c + 1.0).abs() < 1e-15);
    }

    #[test]
    fn quadratic_roots_select_by_branch() {
        let coeffs = OdeCoefficients {
            a: 1.0,
            b: 0.0,
            c: -0.64,
        };
        assert!((solve_phi_prime(coeffs, RootBranch::Plus).unwrap() - 0.8).abs() < 1e-15);
        assert!((solve_phi_prime(coeffs, RootBranch::Minus).unwrap() + 0.8).abs() < 1e-15);
    }

    #[test]
    fn positive_constant_term_has_no_real_root() {
        let coeffs = OdeCoefficients {
            a: 1.0,
            b: 0.0,
            c: 0.25,
        };
        let err = solve_phi_prime(coeffs, RootBranch::Plus).unwrap_err();
        match err {
            Error::NegativeDiscriminant { discriminant, .. } => {
                assert!((discriminant + 1.0).abs() < 1e-15)
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn rk4_matches_the_closed_antiderivative() {
        let sol = integrate_phi(
            &affine_spec(),
            1.0,
            1.0,
            Interval::new(0.0, 1.0),
            0.0,
            RootBranch::Plus,
            1e-3,
        )
        .unwrap();
        let end = sol.phi[sol.phi.len() - 1];
        assert!(
            (end - affine_phi(1.0)).abs() < 1e-10,
            "phi(1) = {end}, expected {}",
            affine_phi(1.0)
        );
    }

    #[test]
    fn branches_are_mirror_trajectories_when_decoupled() {
        let spec = affine_spec();
        let plus = integrate_phi(
            &spec,
            1.0,
            1.0,
            Interval::new(0.0, 1.0),
            0.2,
            RootBranch::Plus,
            1e-3,
        )
        .unwrap();
        let minus = integrate_phi(
            &spec,
            1.0,
            1.0,
            Interval::new(0.0, 1.0),
            0.2,
            RootBranch::Minus,
            1e-3,
        )
        .unwrap();
        for (p, m) in plus.phi.iter().zip(&minus.phi) {
            assert!(((p - 0.2) + (m - 0.2)).abs() < 1e-8);
        }
    }

    #[test]
    fn quadrature_matches_rk4_on_trigonometric_profile() {
        let spec = ProfileSpec::new(CurvatureClass::Positive, 1.0, 1.0, 0.0);
        let dom = Interval::new(0.3, 2.8);
        let quad = quadrature_phi(&spec, 1.0, dom, 0.0).unwrap();
        let ode = integrate_phi(&spec, 1.0, 1.0, dom, 0.0, RootBranch::Plus, 1e-3).unwrap();
        let qi = quad.interpolant();
        let oi = ode.interpolant();
        for i in 0..=50 {
            let u = dom.lerp(i as f64 / 50.0);
            assert!((qi.eval(u) - oi.eval(u)).abs() < 1e-6, "at {u}");
        }
    }

    #[test]
    fn quadrature_reproduces_the_log_antiderivative() {
        let sol = quadrature_phi(&affine_spec(), 1.0, Interval::new(0.0, 1.0), 0.0).unwrap();
        let end = sol.phi[sol.phi.len() - 1];
        assert!((end - affine_phi(1.0)).abs() < 1e-10);
        assert_eq!(sol.method, SolveMethod::ClosedFormQuadrature);
    }

    #[test]
    fn boundary_admissible_slope_gives_constant_angle() {
        // |C1| = alpha makes the radicand identically zero: phi stays at phi0.
        let spec = ProfileSpec::new(CurvatureClass::Zero, 1.0, 1.0, 1.0);
        let sol = quadrature_phi(&spec, 1.0, Interval::new(0.0, 1.0), 0.7).unwrap();
        for phi in &sol.phi {
            assert_eq!(*phi, 0.7);
        }
    }

    #[test]
    fn steep_slope_violates_the_radicand() {
        let spec = ProfileSpec::new(CurvatureClass::Zero, 1.0, 1.5, 1.0);
        let err = quadrature_phi(&spec, 1.0, Interval::new(0.0, 1.0), 0.0).unwrap_err();
        assert!(matches!(err, Error::NegativeRadicand { .. }));
    }

    #[test]
    fn ode_reports_where_the_root_disappears() {
        // rho' of the trigonometric profile exceeds alpha away from u = 0.
        let spec = ProfileSpec::new(CurvatureClass::Positive, 2.0, 0.0, 1.0);
        let err = integrate_phi(
            &spec,
            1.0,
            1.0,
            Interval::new(1.2, 1.5),
            0.0,
            RootBranch::Plus,
            1e-3,
        );
        match err {
            Err(Error::NegativeDiscriminant { u: Some(_), .. }) => {}
            other => panic!("expected located discriminant failure, got {other:?}"),
        }
    }

    #[test]
    fn plane_coordinates_recombine_into_the_profile() {
        // alpha^2 f^2 + beta^2 g^2 = G is a trig identity of the
        // reconstruction and should hold to round-off.
        let sol = integrate_phi(
            &affine_spec(),
            1.0,
            2.0,
            Interval::new(0.0, 1.0),
            0.3,
            RootBranch::Plus,
            1e-3,
        )
        .unwrap();
        for i in 0..sol.u_samples.len() {
            let g_profile = sol.spec.g_profile(sol.u_samples[i]).unwrap();
            let recombined = sol.alpha * sol.alpha * sol.f[i] * sol.f[i]
                + sol.beta * sol.beta * sol.g[i] * sol.g[i];
            assert!((recombined - g_profile).abs() < 1e-12);
        }
    }

    #[test]
    fn solutions_satisfy_the_equation_residual() {
        let sol = integrate_phi(
            &affine_spec(),
            1.0,
            2.0,
            Interval::new(0.0, 1.0),
            0.1,
            RootBranch::Plus,
            1e-3,
        )
        .unwrap();
        assert!(sol.max_equation_residual() < 1e-5);
        assert!(sol.max_unit_speed_defect() < 1e-5);
    }
}
