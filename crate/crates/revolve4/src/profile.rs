//! Closed-form profiles that force constant Gaussian curvature.
//!
//! Every rotational family in this crate has its curvature pinned down by a
//! single scalar profile of the meridian parameter: the rotation radius
//! `rho(u)` for SR1/SR3/SR4, and the squared orbit speed `G(u)` for SR2.
//! Constant curvature holds exactly when that profile solves a linear
//! second-order equation, so the admissible profiles come in three shapes:
//!
//! | form          | profile                          | `rho''/rho` |
//! |---------------|----------------------------------|-------------|
//! | exponential   | `C1 e^{Cu} + C2 e^{-Cu}`         | `C^2`       |
//! | trigonometric | `C1 sin(Cu) + C2 cos(Cu)`        | `-C^2`      |
//! | affine        | `C1 u + C2`                      | `0`         |
//!
//! # Sign conventions
//!
//! A [`ProfileSpec`] is keyed by the *sign of the target curvature* `K`
//! (its [`CurvatureClass`]), with `|K| = C^2`. Which functional form
//! realizes that target depends on the causal character `eps` of the
//! meridian: the curvature of SR1/SR3/SR4 is `K = -eps * rho''/rho`, so
//!
//! * `eps * K < 0` selects the exponential form,
//! * `eps * K > 0` selects the trigonometric form,
//! * `K = 0` selects the affine form.
//!
//! For the Euclidean families `eps = +1` and this reduces to the familiar
//! pairing negative/exponential, positive/trigonometric. For the Lorentzian
//! families with a timelike meridian (`eps = -1`) the pairing flips: an
//! exponential radius then produces *positive* constant curvature. Keep this
//! in mind when reading constants off an instance: `C` always means
//! `sqrt(|K|)`, never the curvature itself.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::space::Interval;

/// Sign of the constant curvature an instance is built for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CurvatureClass {
    /// Target `K = -C^2`.
    Negative,
    /// Target `K = C^2`.
    Positive,
    /// Target `K = 0`.
    Zero,
}

/// Functional form of a profile once the signs are resolved.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProfileForm {
    Exponential,
    Trigonometric,
    Affine,
}

/// Constants selecting one closed-form profile.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ProfileSpec {
    /// Sign of the target curvature.
    pub class: CurvatureClass,
    /// Rate constant `C = sqrt(|K|)`; must be positive, unused for `Zero`.
    pub c: f64,
    pub c1: f64,
    pub c2: f64,
    /// Sign of `E` for the Lorentzian families; `+1` elsewhere.
    pub eps: f64,
}

impl ProfileSpec {
    /// Spec with `eps = +1` (the Euclidean setting).
    pub fn new(class: CurvatureClass, c: f64, c1: f64, c2: f64) -> Self {
        assert!(
            class == CurvatureClass::Zero || c > 0.0,
            "rate constant C must be positive"
        );
        Self {
            class,
            c,
            c1,
            c2,
            eps: 1.0,
        }
    }

    /// Same constants with the meridian's causal sign set to `eps`.
    pub fn with_eps(mut self, eps: f64) -> Self {
        assert!(eps == 1.0 || eps == -1.0, "eps must be +1 or -1");
        self.eps = eps;
        self
    }

    /// Constant curvature this spec targets: `-C^2`, `C^2` or `0`.
    pub fn target_curvature(&self) -> f64 {
        match self.class {
            CurvatureClass::Negative => -self.c * self.c,
            CurvatureClass::Positive => self.c * self.c,
            CurvatureClass::Zero => 0.0,
        }
    }

    /// Radius form resolved against `eps` (see the module notes).
    pub fn form(&self) -> ProfileForm {
        Self::resolve_form(self.class, self.eps)
    }

    fn resolve_form(class: CurvatureClass, eps: f64) -> ProfileForm {
        match class {
            CurvatureClass::Zero => ProfileForm::Affine,
            CurvatureClass::Negative => {
                if eps > 0.0 {
                    ProfileForm::Exponential
                } else {
                    ProfileForm::Trigonometric
                }
            }
            CurvatureClass::Positive => {
                if eps > 0.0 {
                    ProfileForm::Trigonometric
                } else {
                    ProfileForm::Exponential
                }
            }
        }
    }

    fn eval_form(&self, form: ProfileForm, u: f64) -> f64 {
        match form {
            ProfileForm::Exponential => {
                self.c1 * (self.c * u).exp() + self.c2 * (-self.c * u).exp()
            }
            ProfileForm::Trigonometric => {
                self.c1 * (self.c * u).sin() + self.c2 * (self.c * u).cos()
            }
            ProfileForm::Affine => self.c1 * u + self.c2,
        }
    }

    fn eval_form_prime(&self, form: ProfileForm, u: f64) -> f64 {
        match form {
            ProfileForm::Exponential => {
                self.c * (self.c1 * (self.c * u).exp() - self.c2 * (-self.c * u).exp())
            }
            ProfileForm::Trigonometric => {
                self.c * (self.c1 * (self.c * u).cos() - self.c2 * (self.c * u).sin())
            }
            ProfileForm::Affine => self.c1,
        }
    }

    fn eval_form_second(&self, form: ProfileForm, u: f64) -> f64 {
        match form {
            ProfileForm::Exponential => self.c * self.c * self.eval_form(form, u),
            ProfileForm::Trigonometric => -self.c * self.c * self.eval_form(form, u),
            ProfileForm::Affine => 0.0,
        }
    }

    /// Radius profile without the positivity check.
    pub fn rho_unchecked(&self, u: f64) -> f64 {
        self.eval_form(self.form(), u)
    }

    pub fn rho_prime(&self, u: f64) -> f64 {
        self.eval_form_prime(self.form(), u)
    }

    pub fn rho_second(&self, u: f64) -> f64 {
        self.eval_form_second(self.form(), u)
    }

    /// Rotation radius `rho(u)`; the radius must be positive.
    pub fn rho(&self, u: f64) -> Result<f64> {
        let value = self.rho_unchecked(u);
        if value <= 0.0 {
            return Err(Error::OutOfDomain { u });
        }
        Ok(value)
    }

    /// Signed square root of the SR2 orbit-speed profile, `sqrt(G)` up to
    /// sign. SR2 lives in Euclidean space, so the form resolution always
    /// uses `eps = +1` here regardless of the stored sign.
    pub fn g_base(&self, u: f64) -> f64 {
        self.eval_form(Self::resolve_form(self.class, 1.0), u)
    }

    pub fn g_base_prime(&self, u: f64) -> f64 {
        self.eval_form_prime(Self::resolve_form(self.class, 1.0), u)
    }

    /// Orbit-speed profile `G(u) = g_base(u)^2` for SR2.
    pub fn g_profile(&self, u: f64) -> Result<f64> {
        let base = self.g_base(u);
        if base.abs() < G_BASE_TOL {
            return Err(Error::OutOfDomain { u });
        }
        Ok(base * base)
    }
}

/// Below this magnitude the SR2 profile base counts as vanished.
const G_BASE_TOL: f64 = 1e-12;

/// Which meridian completion a profile domain must support.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MeridianRole {
    /// Euclidean revolution: needs `f'^2 + g'^2 = 1 - rho'^2 >= 0`.
    Sr1,
    /// Hyperbolic-type revolution: needs `f'^2 + g'^2 = eps + rho'^2 >= 0`.
    Sr3,
    /// Elliptic-type revolution: `f'^2 - g'^2 = eps - rho'^2` is solvable
    /// for any radius, so only positivity constrains the domain.
    Sr4,
}

/// Slack of the unit-speed completion at `u`; the meridian exists where
/// this is nonnegative.
pub fn meridian_slack(spec: &ProfileSpec, role: MeridianRole, u: f64) -> f64 {
    let p = spec.rho_prime(u);
    match role {
        MeridianRole::Sr1 => 1.0 - p * p,
        MeridianRole::Sr3 => spec.eps + p * p,
        MeridianRole::Sr4 => 1.0,
    }
}

const DOMAIN_SCAN_SAMPLES: usize = 10_000;
const DOMAIN_REFINE_TOL: f64 = 1e-10;

/// Largest subinterval of `requested` on which the radius is positive and
/// the unit-speed meridian for `role` can be completed.
///
/// The interval is located by scanning 10^4 sample points and refining each
/// boundary crossing by bisection to 1e-10.
pub fn admissible_domain(
    spec: &ProfileSpec,
    role: MeridianRole,
    requested: Interval,
) -> Result<Interval> {
    if !requested.is_proper() {
        return Err(Error::EmptyDomain {
            lo: requested.lo,
            hi: requested.hi,
        });
    }
    let feasible = |u: f64| spec.rho_unchecked(u) > 0.0 && meridian_slack(spec, role, u) >= 0.0;

    let n = DOMAIN_SCAN_SAMPLES;
    let sample = |i: usize| requested.lerp(i as f64 / n as f64);

    // Longest contiguous feasible run of samples (first wins ties).
    let mut best: Option<(usize, usize)> = None;
    let mut run_start: Option<usize> = None;
    for i in 0..=n {
        if feasible(sample(i)) {
            run_start.get_or_insert(i);
        } else if let Some(start) = run_start.take() {
            keep_longest(&mut best, (start, i - 1));
        }
    }
    if let Some(start) = run_start {
        keep_longest(&mut best, (start, n));
    }
    let Some((i_lo, i_hi)) = best else {
        return Err(Error::EmptyDomain {
            lo: requested.lo,
            hi: requested.hi,
        });
    };

    let lo = if i_lo == 0 {
        requested.lo
    } else {
        refine_boundary(sample(i_lo - 1), sample(i_lo), &feasible)
    };
    let hi = if i_hi == n {
        requested.hi
    } else {
        refine_boundary(sample(i_hi + 1), sample(i_hi), &feasible)
    };
    if lo >= hi {
        return Err(Error::EmptyDomain {
            lo: requested.lo,
            hi: requested.hi,
        });
    }
    Ok(Interval::new(lo, hi))
}

fn keep_longest(best: &mut Option<(usize, usize)>, candidate: (usize, usize)) {
    let len = candidate.1 - candidate.0;
    if best.is_none_or(|(a, b)| len > b - a) {
        *best = Some(candidate);
    }
}

/// Bisect between an infeasible and a feasible point; returns the feasible
/// endpoint of the final bracket.
fn refine_boundary(mut bad: f64, mut good: f64, feasible: &dyn Fn(f64) -> bool) -> f64 {
    while (bad - good).abs() > DOMAIN_REFINE_TOL {
        let mid = 0.5 * (bad + good);
        if feasible(mid) {
            good = mid;
        } else {
            bad = mid;
        }
    }
    good
}
