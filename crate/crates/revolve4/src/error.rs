//! Error type shared by every module of the crate.

use thiserror::Error;

use crate::space::Family;

/// Crate-wide result alias.
pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Everything that can go wrong while building or measuring a surface.
///
/// All variants carry enough context to point at the offending parameter
/// value, so grid routines can attach coordinates to per-point failures.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A finite-difference stencil would leave the patch domain.
    #[error("point ({u}, {v}) with step {step} has no room inside the patch domain")]
    DomainMargin { u: f64, v: f64, step: f64 },

    /// |E| or |G| fell below the degeneracy threshold at a point.
    #[error("metric coefficient {coefficient} is degenerate at ({u}, {v}): |{coefficient}| = {magnitude:.3e}")]
    DegeneratePoint {
        u: f64,
        v: f64,
        coefficient: char,
        magnitude: f64,
    },

    /// The coordinates are not orthogonal enough for the curvature formula.
    #[error("coordinates not orthogonal at ({u}, {v}): |F| = {f_abs:.3e}")]
    NotOrthogonal { u: f64, v: f64, f_abs: f64 },

    /// A profile was evaluated where it is not positive (or vanishes).
    #[error("u = {u} is outside the admissible profile domain")]
    OutOfDomain { u: f64 },

    /// No subinterval of the requested range is admissible.
    #[error("no admissible subinterval of [{lo}, {hi}]")]
    EmptyDomain { lo: f64, hi: f64 },

    /// The meridian completion integrand is negative inside the domain.
    #[error("meridian completion is infeasible at u = {u}")]
    InfeasibleDomain { u: f64 },

    /// A meridian handed to the surface builder is not unit-speed.
    #[error("meridian violates its arc-length identity at u = {u} (defect {defect:.3e})")]
    UnitSpeed { u: f64, defect: f64 },

    /// The quadratic meridian equation has no real root.
    #[error("negative discriminant ({discriminant:.3e}) in the meridian equation{}", match .u { Some(u) => format!(" at u = {u}"), None => String::new() })]
    NegativeDiscriminant { u: Option<f64>, discriminant: f64 },

    /// The closed-form quadrature integrand is imaginary.
    #[error("negative radicand in the meridian quadrature at u = {u}")]
    NegativeRadicand { u: f64 },

    /// Every grid point was degenerate, so there is nothing to report.
    #[error("every grid point is degenerate")]
    AllDegenerate,

    /// Grid dimensions below the minimum required by the operation.
    #[error("grid must be at least {min_nu}x{min_nv}, got {nu}x{nv}")]
    InvalidGrid {
        nu: usize,
        nv: usize,
        min_nu: usize,
        min_nv: usize,
    },

    /// The patch domain cannot absorb the finite-difference margin.
    #[error("domain of length {available:.3e} is too small for the stencil margin {needed:.3e}")]
    DomainTooSmall { needed: f64, available: f64 },

    /// An operation was asked for a family it does not handle.
    #[error("family {family} is not supported by this operation")]
    UnsupportedFamily { family: Family },

    /// A meridian was paired with the wrong surface family.
    #[error("meridian was completed for {expected} but {found} was requested")]
    FamilyMismatch { expected: Family, found: Family },

    /// OBJ and PLY output need a 4D -> 3D projection.
    #[error("OBJ and PLY exports require a projection")]
    ProjectionRequired,
}
