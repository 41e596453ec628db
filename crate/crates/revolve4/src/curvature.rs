//! First fundamental form and Gaussian curvature from metric data alone.
//!
//! For an orthogonal coordinate patch in a semi-Riemannian surface the
//! Gaussian curvature can be computed from the metric coefficients only:
//!
//! ```text
//! K = -1/(e*g) * [ eps1 * (g_u / e)_u  +  eps2 * (e_v / g)_v ]
//! ```
//!
//! with `e = |E|^(1/2)`, `g = |G|^(1/2)` and `eps1, eps2` the signs of `E`
//! and `G`. The absolute values keep Lorentzian patches (where `E = -1` is
//! legitimate) in real arithmetic; the signs carry the causal information
//! instead.
//!
//! Tangent vectors come from the patch's analytic derivatives when present,
//! otherwise from central differences. The two outer derivatives in the
//! bracket are always taken by nested central differences with the same
//! step, so the end-to-end error budget is `O(step^2)`.

use crate::error::{Error, Result};
use crate::space::{inner_product, partial_derivative, Axis, SurfacePatch, Vec4};

/// Default finite-difference step, balancing truncation against round-off
/// at double precision for coordinates of order one.
pub const DEFAULT_FD_STEP: f64 = 1e-4;

/// |E| or |G| below this flags the point as degenerate (e.g. the rotation
/// axis, where the radius vanishes) instead of producing huge curvatures.
pub const DEGENERATE_TOL: f64 = 1e-9;

/// |F| above this means the coordinates are not orthogonal and the
/// curvature formula does not apply.
pub const ORTHOGONAL_TOL: f64 = 1e-6;

/// Metric coefficients of a patch at one point.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FundamentalForm {
    /// `E = <X_u, X_u>`
    pub e: f64,
    /// `F = <X_u, X_v>`
    pub f: f64,
    /// `G = <X_v, X_v>`
    pub g: f64,
    /// Sign of `E`.
    pub eps1: f64,
    /// Sign of `G`.
    pub eps2: f64,
}

fn tangent(patch: &SurfacePatch, axis: Axis, point: (f64, f64), step: f64) -> Result<Vec4> {
    match patch.analytic_derivative(axis, point.0, point.1) {
        Some(d) => Ok(d),
        None => partial_derivative(patch, axis, point, step),
    }
}

/// First fundamental form of `patch` at `point`.
///
/// Fails with [`Error::DegeneratePoint`] when `|E|` or `|G|` drops below
/// [`DEGENERATE_TOL`].
pub fn fundamental_form(
    patch: &SurfacePatch,
    point: (f64, f64),
    step: f64,
) -> Result<FundamentalForm> {
    let xu = tangent(patch, Axis::U, point, step)?;
    let xv = tangent(patch, Axis::V, point, step)?;
    let sig = patch.signature();
    let e = inner_product(sig, xu, xu);
    let f = inner_product(sig, xu, xv);
    let g = inner_product(sig, xv, xv);
    for (coefficient, value) in [('E', e), ('G', g)] {
        if value.abs() < DEGENERATE_TOL {
            return Err(Error::DegeneratePoint {
                u: point.0,
                v: point.1,
                coefficient,
                magnitude: value.abs(),
            });
        }
    }
    Ok(FundamentalForm {
        e,
        f,
        g,
        eps1: e.signum(),
        eps2: g.signum(),
    })
}

/// Gaussian curvature of `patch` at `point` via the orthogonal-coordinate
/// formula.
///
/// Requires `|F| < ORTHOGONAL_TOL` at the point and nondegenerate `E`, `G`
/// across the five-point stencil in each direction.
pub fn gaussian_curvature(patch: &SurfacePatch, point: (f64, f64), step: f64) -> Result<f64> {
    let (u0, v0) = point;
    let h = step;
    let form = |u: f64, v: f64| fundamental_form(patch, (u, v), h);

    let center = form(u0, v0)?;
    if center.f.abs() > ORTHOGONAL_TOL {
        return Err(Error::NotOrthogonal {
            u: u0,
            v: v0,
            f_abs: center.f.abs(),
        });
    }
    let sqrt_e = |f: &FundamentalForm| f.e.abs().sqrt();
    let sqrt_g = |f: &FundamentalForm| f.g.abs().sqrt();

    // eps1 * (g_u / e)_u by nested central differences in u.
    let u_pp = form(u0 + 2.0 * h, v0)?;
    let u_p = form(u0 + h, v0)?;
    let u_m = form(u0 - h, v0)?;
    let u_mm = form(u0 - 2.0 * h, v0)?;
    let gu_plus = (sqrt_g(&u_pp) - sqrt_g(&center)) / (2.0 * h);
    let gu_minus = (sqrt_g(&center) - sqrt_g(&u_mm)) / (2.0 * h);
    let du_term = (gu_plus / sqrt_e(&u_p) - gu_minus / sqrt_e(&u_m)) / (2.0 * h);

    // eps2 * (e_v / g)_v by nested central differences in v.
    let v_pp = form(u0, v0 + 2.0 * h)?;
    let v_p = form(u0, v0 + h)?;
    let v_m = form(u0, v0 - h)?;
    let v_mm = form(u0, v0 - 2.0 * h)?;
    let ev_plus = (sqrt_e(&v_pp) - sqrt_e(&center)) / (2.0 * h);
    let ev_minus = (sqrt_e(&center) - sqrt_e(&v_mm)) / (2.0 * h);
    let dv_term = (ev_plus / sqrt_g(&v_p) - ev_minus / sqrt_g(&v_m)) / (2.0 * h);

    Ok(-(center.eps1 * du_term + center.eps2 * dv_term) / (sqrt_e(&center) * sqrt_g(&center)))
}

/// One curvature evaluation on a grid; degenerate points stay inspectable.
#[derive(Debug, Clone)]
pub struct GridSample {
    pub u: f64,
    pub v: f64,
    pub curvature: Result<f64>,
}

/// Stencil margin the grid keeps away from the domain boundary.
pub(crate) fn stencil_margin(step: f64) -> f64 {
    4.0 * step
}

/// Gaussian curvature sampled on a uniform `nu x nv` interior grid.
///
/// The grid is shrunk by the stencil margin on all sides; ordering is
/// row-major in `u` then `v` and deterministic regardless of how the
/// evaluations are scheduled. Per-point failures are reported in place with
/// their coordinates rather than aborting the whole grid.
pub fn curvature_grid(
    patch: &SurfacePatch,
    nu: usize,
    nv: usize,
    step: f64,
) -> Result<Vec<GridSample>> {
    if nu < 2 || nv < 2 {
        return Err(Error::InvalidGrid {
            nu,
            nv,
            min_nu: 2,
            min_nv: 2,
        });
    }
    let margin = stencil_margin(step);
    let inner_u = patch
        .domain_u()
        .shrink(margin)
        .ok_or(Error::DomainTooSmall {
            needed: 2.0 * margin,
            available: patch.domain_u().length(),
        })?;
    let inner_v = patch
        .domain_v()
        .shrink(margin)
        .ok_or(Error::DomainTooSmall {
            needed: 2.0 * margin,
            available: patch.domain_v().length(),
        })?;

    let mut samples = Vec::with_capacity(nu * nv);
    for i in 0..nu {
        let u = inner_u.lerp(i as f64 / (nu - 1) as f64);
        for j in 0..nv {
            let v = inner_v.lerp(j as f64 / (nv - 1) as f64);
            samples.push(GridSample {
                u,
                v,
                curvature: gaussian_curvature(patch, (u, v), step),
            });
        }
    }
    Ok(samples)
}
