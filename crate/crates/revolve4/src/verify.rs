//! Constant-curvature verification reports.

use serde::{Deserialize, Serialize};

use crate::curvature::{curvature_grid, DEFAULT_FD_STEP};
use crate::error::{Error, Result};
use crate::space::{Family, SurfacePatch};

/// Outcome of sampling a patch's Gaussian curvature against a target value.
///
/// `passed` holds exactly when `max_abs_deviation <= tolerance` over the
/// non-degenerate samples; degenerate grid points are listed separately and
/// do not fail the check, so domains touching the rotation axis remain
/// verifiable.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CurvatureReport {
    pub family: Family,
    #[serde(rename = "target_K")]
    pub target_k: f64,
    pub tolerance: f64,
    pub max_abs_deviation: f64,
    pub passed: bool,
    pub n_samples: usize,
    pub degenerate_points: Vec<(f64, f64)>,
    pub samples: Vec<(f64, f64, f64)>,
}

impl CurvatureReport {
    /// JSON form of the report (pretty-printed, trailing newline).
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> std::result::Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }
}

/// Sample the curvature on a `nu x nv` grid and compare against `target_k`.
///
/// Uses the default finite-difference step of the curvature engine.
/// Degenerate points are skipped and recorded; any other per-point failure
/// aborts the verification.
pub fn verify_constant_curvature(
    patch: &SurfacePatch,
    target_k: f64,
    nu: usize,
    nv: usize,
    tolerance: f64,
) -> Result<CurvatureReport> {
    if nu < 4 || nv < 4 {
        return Err(Error::InvalidGrid {
            nu,
            nv,
            min_nu: 4,
            min_nv: 4,
        });
    }
    let grid = curvature_grid(patch, nu, nv, DEFAULT_FD_STEP)?;
    let mut samples = Vec::with_capacity(grid.len());
    let mut degenerate_points = Vec::new();
    for point in grid {
        match point.curvature {
            Ok(k) => samples.push((point.u, point.v, k)),
            Err(Error::DegeneratePoint { .. }) => degenerate_points.push((point.u, point.v)),
            Err(other) => return Err(other),
        }
    }
    if samples.is_empty() {
        return Err(Error::AllDegenerate);
    }
    let max_abs_deviation = samples
        .iter()
        .map(|&(_, _, k)| (k - target_k).abs())
        .fold(0.0, f64::max);
    Ok(CurvatureReport {
        family: patch.family(),
        target_k,
        tolerance,
        max_abs_deviation,
        passed: max_abs_deviation <= tolerance,
        n_samples: samples.len(),
        degenerate_points,
        samples,
    })
}
