//! Assembles surface patches from profiles and meridian solutions.
//!
//! The radius profile only determines the curvature; the remaining meridian
//! coordinates `f`, `g` are a gauge choice. This module picks one canonical
//! unit-speed completion per family:
//!
//! * SR1: `g = 0`, `f' = sqrt(1 - rho'^2)` (arc-length in Euclidean space).
//! * SR3: `g = 0`, `f' = sqrt(eps + rho'^2)` from `f'^2 + g'^2 - rho'^2 = eps`.
//! * SR4: the identity is `rho'^2 + f'^2 - g'^2 = eps`, where `g` sits on
//!   the timelike axis. With `s = eps - rho'^2` the pair
//!   `f' = (1 + s)/2`, `g' = (s - 1)/2` satisfies `f'^2 - g'^2 = s` for any
//!   radius, so this completion needs no extra domain restriction.
//!
//! Integrals are taken by adaptive quadrature to 1e-10 and tabulated on a
//! grid of spacing <= 1e-3 with exact node derivatives, so the evaluated
//! maps carry cubic-Hermite interpolation error far below the curvature
//! tolerances used downstream. The integration constant puts
//! `f(u0) = g(u0) = 0` at the left end of the domain, which keeps exported
//! meshes reproducible.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::interp::CubicHermite;
use crate::meridian::MeridianSolution;
use crate::profile::{meridian_slack, MeridianRole, ProfileSpec};
use crate::quad::cumulative;
use crate::space::{Family, Interval, Map4, MetricSignature, SurfacePatch};

/// Node spacing of tabulated meridian coordinates.
pub const MERIDIAN_NODE_SPACING: f64 = 1e-3;

/// Absolute tolerance of the completion quadrature.
pub const MERIDIAN_QUAD_TOL: f64 = 1e-10;

/// Negative completion slack beyond this is a genuine infeasibility rather
/// than round-off at a boundary.
const SLACK_ROUNDOFF: f64 = 1e-9;

/// Unit-speed defect tolerated when a meridian enters the surface builder.
const SPEED_DEFECT_TOL: f64 = 1e-8;

type Scalar = Arc<dyn Fn(f64) -> f64 + Send + Sync>;

/// A scalar map together with its first derivative.
#[derive(Clone)]
pub struct ScalarFn {
    value: Scalar,
    deriv: Scalar,
}

impl ScalarFn {
    pub fn new<F, D>(value: F, deriv: D) -> Self
    where
        F: Fn(f64) -> f64 + Send + Sync + 'static,
        D: Fn(f64) -> f64 + Send + Sync + 'static,
    {
        Self {
            value: Arc::new(value),
            deriv: Arc::new(deriv),
        }
    }

    pub fn constant(c: f64) -> Self {
        Self::new(move |_| c, |_| 0.0)
    }

    pub fn eval(&self, u: f64) -> f64 {
        (self.value)(u)
    }

    pub fn eval_deriv(&self, u: f64) -> f64 {
        (self.deriv)(u)
    }
}

impl fmt::Debug for ScalarFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("ScalarFn")
    }
}

/// Unit-speed generating curve of a rotational surface.
#[derive(Debug, Clone)]
pub struct MeridianCurve {
    family: Family,
    signature: MetricSignature,
    domain: Interval,
    eps: f64,
    f: ScalarFn,
    g: ScalarFn,
    rho: ScalarFn,
}

impl MeridianCurve {
    pub fn family(&self) -> Family {
        self.family
    }

    pub fn signature(&self) -> MetricSignature {
        self.signature
    }

    pub fn domain(&self) -> Interval {
        self.domain
    }

    pub fn eps(&self) -> f64 {
        self.eps
    }

    pub fn f(&self, u: f64) -> f64 {
        self.f.eval(u)
    }

    pub fn g(&self, u: f64) -> f64 {
        self.g.eval(u)
    }

    pub fn rho(&self, u: f64) -> f64 {
        self.rho.eval(u)
    }

    pub fn f_prime(&self, u: f64) -> f64 {
        self.f.eval_deriv(u)
    }

    pub fn g_prime(&self, u: f64) -> f64 {
        self.g.eval_deriv(u)
    }

    pub fn rho_prime(&self, u: f64) -> f64 {
        self.rho.eval_deriv(u)
    }

    /// Deviation from the family's arc-length identity at `u`; zero for an
    /// exactly unit-speed meridian.
    pub fn speed_defect(&self, u: f64) -> f64 {
        let fp = self.f_prime(u);
        let gp = self.g_prime(u);
        let rp = self.rho_prime(u);
        match self.family {
            Family::Sr1 => fp * fp + gp * gp + rp * rp - 1.0,
            Family::Sr3 => fp * fp + gp * gp - rp * rp - self.eps,
            Family::Sr4 => rp * rp + fp * fp - gp * gp - self.eps,
            _ => f64::NAN,
        }
    }
}

fn meridian_nodes(domain: Interval) -> Vec<f64> {
    let n = (domain.length() / MERIDIAN_NODE_SPACING).ceil().max(8.0) as usize;
    (0..=n).map(|i| domain.lerp(i as f64 / n as f64)).collect()
}

fn tabulate(derivative: Scalar, nodes: &[f64]) -> ScalarFn {
    let ds: Vec<f64> = nodes.iter().map(|&u| derivative(u)).collect();
    let ys = cumulative(&*derivative, nodes, MERIDIAN_QUAD_TOL);
    let table = CubicHermite::new(nodes.to_vec(), ys, ds);
    let deriv = derivative.clone();
    ScalarFn {
        value: Arc::new(move |u| table.eval(u)),
        deriv,
    }
}

/// Canonical unit-speed completion of a radius profile.
///
/// `eps` overrides the sign stored in `spec` so the same constants can be
/// reused across causal characters; SR1 always takes `eps = +1`. The domain
/// must be admissible for the family's [`MeridianRole`].
pub fn complete_meridian(
    spec: &ProfileSpec,
    family: Family,
    eps: f64,
    domain: Interval,
) -> Result<MeridianCurve> {
    assert!(eps == 1.0 || eps == -1.0, "eps must be +1 or -1");
    let (role, eps) = match family {
        Family::Sr1 => (MeridianRole::Sr1, 1.0),
        Family::Sr3 => (MeridianRole::Sr3, eps),
        Family::Sr4 => (MeridianRole::Sr4, eps),
        other => return Err(Error::UnsupportedFamily { family: other }),
    };
    if !domain.is_proper() {
        return Err(Error::EmptyDomain {
            lo: domain.lo,
            hi: domain.hi,
        });
    }
    let spec = spec.with_eps(eps);
    let nodes = meridian_nodes(domain);
    for &u in &nodes {
        if spec.rho_unchecked(u) <= 0.0 {
            return Err(Error::OutOfDomain { u });
        }
    }

    let (f, g) = match role {
        MeridianRole::Sr1 | MeridianRole::Sr3 => {
            for &u in &nodes {
                if meridian_slack(&spec, role, u) < -SLACK_ROUNDOFF {
                    return Err(Error::InfeasibleDomain { u });
                }
            }
            let f_prime: Scalar = Arc::new(move |u| meridian_slack(&spec, role, u).max(0.0).sqrt());
            (tabulate(f_prime, &nodes), ScalarFn::constant(0.0))
        }
        MeridianRole::Sr4 => {
            let slack = move |u: f64| {
                let p = spec.rho_prime(u);
                eps - p * p
            };
            let f_prime: Scalar = Arc::new(move |u| 0.5 * (1.0 + slack(u)));
            let g_prime: Scalar = Arc::new(move |u| 0.5 * (slack(u) - 1.0));
            (tabulate(f_prime, &nodes), tabulate(g_prime, &nodes))
        }
    };

    let rho_spec = spec;
    let rho = ScalarFn::new(
        move |u| rho_spec.rho_unchecked(u),
        move |u| rho_spec.rho_prime(u),
    );
    Ok(MeridianCurve {
        family,
        signature: family.canonical_signature().expect("named family"),
        domain,
        eps,
        f,
        g,
        rho,
    })
}

fn validate_unit_speed(meridian: &MeridianCurve) -> Result<()> {
    for i in 0..=100 {
        let u = meridian.domain.lerp(i as f64 / 100.0);
        let defect = meridian.speed_defect(u);
        if defect.abs() > SPEED_DEFECT_TOL {
            return Err(Error::UnitSpeed { u, defect });
        }
    }
    Ok(())
}

/// Rotational surface patch over a completed meridian.
///
/// The maps are exactly the family parametrizations:
/// SR1 `(f, g, rho cos v, rho sin v)`, SR3 `(f, g, rho sinh v, rho cosh v)`,
/// SR4 `(rho cos v, rho sin v, f, g)`. Analytic partial derivatives are
/// attached so the curvature engine avoids inner finite differences.
pub fn build_surface(
    family: Family,
    meridian: &MeridianCurve,
    v_range: Interval,
) -> Result<SurfacePatch> {
    if family != meridian.family() {
        return Err(Error::FamilyMismatch {
            expected: meridian.family(),
            found: family,
        });
    }
    validate_unit_speed(meridian)?;
    let m = meridian.clone();
    let (eval, du, dv): (Map4, Map4, Map4) = match family {
        Family::Sr1 => {
            let me = m.clone();
            let eval = Arc::new(move |u: f64, v: f64| {
                let rho = me.rho(u);
                [me.f(u), me.g(u), rho * v.cos(), rho * v.sin()]
            }) as Map4;
            let md = m.clone();
            let du = Arc::new(move |u: f64, v: f64| {
                let rp = md.rho_prime(u);
                [md.f_prime(u), md.g_prime(u), rp * v.cos(), rp * v.sin()]
            }) as Map4;
            let mv = m.clone();
            let dv = Arc::new(move |u: f64, v: f64| {
                let rho = mv.rho(u);
                [0.0, 0.0, -rho * v.sin(), rho * v.cos()]
            }) as Map4;
            (eval, du, dv)
        }
        Family::Sr3 => {
            let me = m.clone();
            let eval = Arc::new(move |u: f64, v: f64| {
                let rho = me.rho(u);
                [me.f(u), me.g(u), rho * v.sinh(), rho * v.cosh()]
            }) as Map4;
            let md = m.clone();
            let du = Arc::new(move |u: f64, v: f64| {
                let rp = md.rho_prime(u);
                [md.f_prime(u), md.g_prime(u), rp * v.sinh(), rp * v.cosh()]
            }) as Map4;
            let mv = m.clone();
            let dv = Arc::new(move |u: f64, v: f64| {
                let rho = mv.rho(u);
                [0.0, 0.0, rho * v.cosh(), rho * v.sinh()]
            }) as Map4;
            (eval, du, dv)
        }
        Family::Sr4 => {
            let me = m.clone();
            let eval = Arc::new(move |u: f64, v: f64| {
                let rho = me.rho(u);
                [rho * v.cos(), rho * v.sin(), me.f(u), me.g(u)]
            }) as Map4;
            let md = m.clone();
            let du = Arc::new(move |u: f64, v: f64| {
                let rp = md.rho_prime(u);
                [rp * v.cos(), rp * v.sin(), md.f_prime(u), md.g_prime(u)]
            }) as Map4;
            let mv = m.clone();
            let dv = Arc::new(move |u: f64, v: f64| {
                let rho = mv.rho(u);
                [-rho * v.sin(), rho * v.cos(), 0.0, 0.0]
            }) as Map4;
            (eval, du, dv)
        }
        other => return Err(Error::UnsupportedFamily { family: other }),
    };
    Ok(SurfacePatch::from_parts(
        family,
        meridian.signature(),
        meridian.domain(),
        v_range,
        eval,
        Some(du),
        Some(dv),
    ))
}

/// General rotational surface `(f cos av, f sin av, g cos bv, g sin bv)`
/// from a solved meridian.
///
/// The turning angle is interpolated cubically between the solver samples;
/// `f`, `g` and their derivatives then come from the closed-form profile,
/// so the evaluated map matches the solution everywhere on the grid.
pub fn build_sr2(solution: &MeridianSolution, v_range: Interval) -> Result<SurfacePatch> {
    let alpha = solution.alpha;
    let beta = solution.beta;
    let spec = solution.spec;
    let phi = Arc::new(solution.interpolant());
    let domain = solution.domain();

    let sqrt_g = move |u: f64| spec.g_base(u).abs();
    let sqrt_g_prime = move |u: f64| spec.g_base(u).signum() * spec.g_base_prime(u);

    let ph = phi.clone();
    let f_val = move |u: f64| sqrt_g(u) * ph.eval(u).cos() / alpha;
    let ph = phi.clone();
    let g_val = move |u: f64| sqrt_g(u) * ph.eval(u).sin() / beta;
    let ph = phi.clone();
    let f_der = move |u: f64| {
        let (s, c) = ph.eval(u).sin_cos();
        (sqrt_g_prime(u) * c - sqrt_g(u) * s * ph.eval_deriv(u)) / alpha
    };
    let ph = phi.clone();
    let g_der = move |u: f64| {
        let (s, c) = ph.eval(u).sin_cos();
        (sqrt_g_prime(u) * s + sqrt_g(u) * c * ph.eval_deriv(u)) / beta
    };

    let (fe, ge) = (f_val.clone(), g_val.clone());
    let eval = Arc::new(move |u: f64, v: f64| {
        let (f, g) = (fe(u), ge(u));
        let (sa, ca) = (alpha * v).sin_cos();
        let (sb, cb) = (beta * v).sin_cos();
        [f * ca, f * sa, g * cb, g * sb]
    }) as Map4;
    let du = Arc::new(move |u: f64, v: f64| {
        let (fp, gp) = (f_der(u), g_der(u));
        let (sa, ca) = (alpha * v).sin_cos();
        let (sb, cb) = (beta * v).sin_cos();
        [fp * ca, fp * sa, gp * cb, gp * sb]
    }) as Map4;
    let dv = Arc::new(move |u: f64, v: f64| {
        let (f, g) = (f_val(u), g_val(u));
        let (sa, ca) = (alpha * v).sin_cos();
        let (sb, cb) = (beta * v).sin_cos();
        [
            -alpha * f * sa,
            alpha * f * ca,
            -beta * g * sb,
            beta * g * cb,
        ]
    }) as Map4;

    Ok(SurfacePatch::from_parts(
        Family::Sr2,
        MetricSignature::Euclidean4,
        domain,
        v_range,
        eval,
        Some(du),
        Some(dv),
    ))
}
