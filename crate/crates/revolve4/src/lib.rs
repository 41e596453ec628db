//! Rotational surfaces of constant Gaussian curvature in four-space.
//!
//! This crate constructs four families of rotational surfaces — two in
//! Euclidean `R^4`, two in Lorentz-Minkowski `R^4_1` — and pins their
//! Gaussian curvature to a prescribed constant through closed-form radius
//! profiles. A finite-difference curvature engine working purely from the
//! first fundamental form verifies the constancy numerically, so every
//! construction ships with its own independent check.
//!
//! The families, written as maps `(u, v) -> R^4`:
//!
//! * **SR1** `(f, g, rho cos v, rho sin v)` — revolution about a plane in
//!   Euclidean space.
//! * **SR2** `(f cos av, f sin av, g cos bv, g sin bv)` — general rotation
//!   with two rates; the meridian obeys an implicit quadratic ODE.
//! * **SR3** `(f, g, rho sinh v, rho cosh v)` — hyperbolic-type revolution
//!   in Lorentz space.
//! * **SR4** `(rho cos v, rho sin v, f, g)` — elliptic-type revolution in
//!   Lorentz space.
//!
//! In every family the curvature is governed by a single scalar profile
//! ([`profile::ProfileSpec`]); the remaining meridian coordinates are
//! completed canonically to unit speed ([`builder`]), or solved for
//! ([`meridian`]) in the SR2 case.
//!
//! ```
//! use revolve4::{
//!     build_surface, complete_meridian, verify_constant_curvature, CurvatureClass, Family,
//!     Interval, ProfileSpec,
//! };
//!
//! // A unit sphere arises from the trigonometric profile rho = sin u.
//! let spec = ProfileSpec::new(CurvatureClass::Positive, 1.0, 1.0, 0.0);
//! let meridian = complete_meridian(
//!     &spec,
//!     Family::Sr1,
//!     1.0,
//!     Interval::new(0.05, std::f64::consts::PI - 0.05),
//! )?;
//! let patch = build_surface(Family::Sr1, &meridian, Interval::new(0.0, std::f64::consts::TAU))?;
//! let report = verify_constant_curvature(&patch, 1.0, 10, 10, 1e-3)?;
//! assert!(report.passed);
//! # Ok::<(), revolve4::Error>(())
//! ```
//!
//! The `revolve4` binary wraps the same pipeline behind `generate`,
//! `verify` and `solve-meridian` subcommands; the `examples/` directory
//! walks through each capability in library form.

pub mod builder;
pub mod curvature;
pub mod error;
pub mod export;
pub mod interp;
pub mod meridian;
pub mod profile;
pub mod quad;
pub mod space;
pub mod verify;

pub use builder::{build_sr2, build_surface, complete_meridian, MeridianCurve, ScalarFn};
pub use curvature::{
    curvature_grid, fundamental_form, gaussian_curvature, FundamentalForm, GridSample,
    DEFAULT_FD_STEP,
};
pub use error::{Error, Result};
pub use export::{export_grid, ExportFormat, Projection};
pub use meridian::{
    integrate_phi, ode_coefficients, quadrature_phi, solve_phi_prime, MeridianSolution,
    OdeCoefficients, RootBranch, SolveMethod,
};
pub use profile::{
    admissible_domain, meridian_slack, CurvatureClass, MeridianRole, ProfileForm, ProfileSpec,
};
pub use space::{
    inner_product, partial_derivative, Axis, Family, Interval, MetricSignature, SurfacePatch, Vec4,
};
pub use verify::{verify_constant_curvature, CurvatureReport};
