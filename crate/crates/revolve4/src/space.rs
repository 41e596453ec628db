//! Ambient four-spaces and evaluable surface patches.
//!
//! The crate works in exactly two ambient spaces: Euclidean `R^4` and
//! Lorentz-Minkowski `R^4_1`, where the latter carries the indefinite
//! product `<x, y> = x1*y1 + x2*y2 + x3*y3 - x4*y4`. A [`SurfacePatch`] is
//! an immutable map `(u, v) -> R^4` over a rectangular parameter domain,
//! tagged with the signature its tangent vectors should be measured in.
//! Optional analytic partial derivatives tighten everything downstream from
//! finite-difference accuracy to closed-form accuracy.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A point or vector of the ambient four-space.
pub type Vec4 = [f64; 4];

/// Which inner product the ambient four-space carries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MetricSignature {
    /// Positive-definite `x1*y1 + x2*y2 + x3*y3 + x4*y4`.
    Euclidean4,
    /// Indefinite `x1*y1 + x2*y2 + x3*y3 - x4*y4` (the `e4` axis is timelike).
    Lorentz4,
}

/// Scalar product of two four-vectors under the given signature.
///
/// Bilinear and symmetric; for `Lorentz4` the fourth component enters with
/// a minus sign.
pub fn inner_product(sig: MetricSignature, x: Vec4, y: Vec4) -> f64 {
    let spatial = x[0] * y[0] + x[1] * y[1] + x[2] * y[2];
    match sig {
        MetricSignature::Euclidean4 => spatial + x[3] * y[3],
        MetricSignature::Lorentz4 => spatial - x[3] * y[3],
    }
}

/// The rotational surface families, plus an escape hatch for user maps.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    /// `(f, g, rho cos v, rho sin v)` in Euclidean space.
    Sr1,
    /// `(f cos av, f sin av, g cos bv, g sin bv)` in Euclidean space.
    Sr2,
    /// `(f, g, rho sinh v, rho cosh v)` in Lorentz space (hyperbolic type).
    Sr3,
    /// `(rho cos v, rho sin v, f, g)` in Lorentz space (elliptic type).
    Sr4,
    /// Arbitrary user-supplied map.
    Custom,
}

impl Family {
    /// Ambient signature the four named families live in.
    pub fn canonical_signature(self) -> Option<MetricSignature> {
        match self {
            Family::Sr1 | Family::Sr2 => Some(MetricSignature::Euclidean4),
            Family::Sr3 | Family::Sr4 => Some(MetricSignature::Lorentz4),
            Family::Custom => None,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Family::Sr1 => "sr1",
            Family::Sr2 => "sr2",
            Family::Sr3 => "sr3",
            Family::Sr4 => "sr4",
            Family::Custom => "custom",
        };
        f.write_str(name)
    }
}

/// Closed interval `[lo, hi]` on the real line.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Interval {
    pub lo: f64,
    pub hi: f64,
}

impl Interval {
    pub fn new(lo: f64, hi: f64) -> Self {
        debug_assert!(lo <= hi, "interval endpoints out of order: [{lo}, {hi}]");
        Self { lo, hi }
    }

    pub fn length(&self) -> f64 {
        self.hi - self.lo
    }

    /// True when the interval has positive length (false for NaN ends).
    pub fn is_proper(&self) -> bool {
        self.lo < self.hi
    }

    pub fn contains(&self, x: f64) -> bool {
        self.lo <= x && x <= self.hi
    }

    /// Interior interval obtained by trimming `margin` off both ends.
    pub fn shrink(&self, margin: f64) -> Option<Interval> {
        let lo = self.lo + margin;
        let hi = self.hi - margin;
        (lo < hi).then(|| Interval::new(lo, hi))
    }

    /// Point at parameter `t` in `[0, 1]`.
    pub fn lerp(&self, t: f64) -> f64 {
        self.lo + t * self.length()
    }
}

/// Coordinate direction of a surface patch.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Axis {
    U,
    V,
}

pub(crate) type Map4 = Arc<dyn Fn(f64, f64) -> Vec4 + Send + Sync>;

/// An evaluable surface `(u, v) -> R^4` over a rectangular domain.
///
/// Patches are immutable and cheap to clone (the evaluators are shared), so
/// they can be handed to multiple threads freely.
#[derive(Clone)]
pub struct SurfacePatch {
    family: Family,
    signature: MetricSignature,
    domain_u: Interval,
    domain_v: Interval,
    position: Map4,
    tangent_u: Option<Map4>,
    tangent_v: Option<Map4>,
}

impl SurfacePatch {
    /// Patch from a bare evaluation map; derivatives fall back to central
    /// differences.
    pub fn custom<F>(
        signature: MetricSignature,
        domain_u: Interval,
        domain_v: Interval,
        eval: F,
    ) -> Self
    where
        F: Fn(f64, f64) -> Vec4 + Send + Sync + 'static,
    {
        Self {
            family: Family::Custom,
            signature,
            domain_u,
            domain_v,
            position: Arc::new(eval),
            tangent_u: None,
            tangent_v: None,
        }
    }

    /// Patch with analytic partial derivatives supplied by the caller.
    pub fn custom_with_derivatives<F, Du, Dv>(
        signature: MetricSignature,
        domain_u: Interval,
        domain_v: Interval,
        eval: F,
        eval_du: Du,
        eval_dv: Dv,
    ) -> Self
    where
        F: Fn(f64, f64) -> Vec4 + Send + Sync + 'static,
        Du: Fn(f64, f64) -> Vec4 + Send + Sync + 'static,
        Dv: Fn(f64, f64) -> Vec4 + Send + Sync + 'static,
    {
        Self {
            family: Family::Custom,
            signature,
            domain_u,
            domain_v,
            position: Arc::new(eval),
            tangent_u: Some(Arc::new(eval_du)),
            tangent_v: Some(Arc::new(eval_dv)),
        }
    }

    pub(crate) fn from_parts(
        family: Family,
        signature: MetricSignature,
        domain_u: Interval,
        domain_v: Interval,
        position: Map4,
        tangent_u: Option<Map4>,
        tangent_v: Option<Map4>,
    ) -> Self {
        Self {
            family,
            signature,
            domain_u,
            domain_v,
            position,
            tangent_u,
            tangent_v,
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn signature(&self) -> MetricSignature {
        self.signature
    }

    pub fn domain_u(&self) -> Interval {
        self.domain_u
    }

    pub fn domain_v(&self) -> Interval {
        self.domain_v
    }

    /// Position in `R^4` at `(u, v)`.
    pub fn eval(&self, u: f64, v: f64) -> Vec4 {
        (self.position)(u, v)
    }

    pub fn has_analytic_derivatives(&self) -> bool {
        self.tangent_u.is_some() && self.tangent_v.is_some()
    }

    /// Analytic partial derivative along `axis`, when the patch carries one.
    pub fn analytic_derivative(&self, axis: Axis, u: f64, v: f64) -> Option<Vec4> {
        let map = match axis {
            Axis::U => self.tangent_u.as_ref(),
            Axis::V => self.tangent_v.as_ref(),
        };
        map.map(|m| m(u, v))
    }
}

impl fmt::Debug for SurfacePatch {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SurfacePatch")
            .field("family", &self.family)
            .field("signature", &self.signature)
            .field("domain_u", &self.domain_u)
            .field("domain_v", &self.domain_v)
            .field("analytic_derivatives", &self.has_analytic_derivatives())
            .finish()
    }
}

/// Slack allowed when checking stencil points against the domain, to absorb
/// round-off at the endpoints.
const MARGIN_SLACK: f64 = 1e-12;

/// Central-difference partial derivative of the patch map.
///
/// Second-order accurate for smooth maps; the stencil `point +- step` must
/// stay inside the patch domain.
pub fn partial_derivative(
    patch: &SurfacePatch,
    axis: Axis,
    point: (f64, f64),
    step: f64,
) -> Result<Vec4> {
    let (u, v) = point;
    let (plus, minus) = match axis {
        Axis::U => {
            if u - step < patch.domain_u.lo - MARGIN_SLACK
                || u + step > patch.domain_u.hi + MARGIN_SLACK
            {
                return Err(Error::DomainMargin { u, v, step });
            }
            (patch.eval(u + step, v), patch.eval(u - step, v))
        }
        Axis::V => {
            if v - step < patch.domain_v.lo - MARGIN_SLACK
                || v + step > patch.domain_v.hi + MARGIN_SLACK
            {
                return Err(Error::DomainMargin { u, v, step });
            }
            (patch.eval(u, v + step), patch.eval(u, v - step))
        }
    };
    Ok(std::array::from_fn(|i| (plus[i] - minus[i]) / (2.0 * step)))
}
