//! Grid exporters: raw 4D CSV, plus projected OBJ and PLY meshes.
//!
//! Output is deterministic byte-for-byte for fixed inputs. CSV rows carry
//! the full four coordinates at 17 significant digits; OBJ/PLY need a
//! 4D -> 3D projection first, either dropping one coordinate or projecting
//! stereographically from a pole placed beyond the sampled x4 range.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::space::{SurfacePatch, Vec4};

/// Serialization targets for a sampled grid.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExportFormat {
    /// `u,v,x1,x2,x3,x4` rows, one per grid point.
    Csv4d,
    /// Wavefront OBJ with quad faces (projected).
    Obj,
    /// ASCII PLY with quad faces (projected).
    Ply,
}

/// How to map `R^4` points into `R^3` for mesh output.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Projection {
    DropX1,
    DropX2,
    DropX3,
    DropX4,
    /// From the pole `(0, 0, 0, R)` onto the hyperplane `x4 = 0`, with
    /// `R = 1.1 * max |x4|` over the grid so the pole is never hit.
    Stereographic,
}

impl Projection {
    fn label(&self, pole: f64) -> String {
        match self {
            Projection::DropX1 => "drop-x1".into(),
            Projection::DropX2 => "drop-x2".into(),
            Projection::DropX3 => "drop-x3".into(),
            Projection::DropX4 => "drop-x4".into(),
            Projection::Stereographic => {
                format!("stereographic (pole at (0, 0, 0, {}))", fmt17(pole))
            }
        }
    }
}

/// 17 significant digits, enough to round-trip an f64 exactly.
fn fmt17(x: f64) -> String {
    format!("{x:.16e}")
}

fn sample_grid(patch: &SurfacePatch, nu: usize, nv: usize) -> Vec<(f64, f64, Vec4)> {
    let mut grid = Vec::with_capacity(nu * nv);
    for i in 0..nu {
        let u = patch.domain_u().lerp(i as f64 / (nu - 1) as f64);
        for j in 0..nv {
            let v = patch.domain_v().lerp(j as f64 / (nv - 1) as f64);
            grid.push((u, v, patch.eval(u, v)));
        }
    }
    grid
}

fn stereographic_pole(grid: &[(f64, f64, Vec4)]) -> f64 {
    let max_x4 = grid.iter().map(|(_, _, x)| x[3].abs()).fold(0.0, f64::max);
    if max_x4 == 0.0 {
        1.0
    } else {
        1.1 * max_x4
    }
}

fn project(p: Vec4, projection: Projection, pole: f64) -> [f64; 3] {
    match projection {
        Projection::DropX1 => [p[1], p[2], p[3]],
        Projection::DropX2 => [p[0], p[2], p[3]],
        Projection::DropX3 => [p[0], p[1], p[3]],
        Projection::DropX4 => [p[0], p[1], p[2]],
        Projection::Stereographic => {
            let t = pole / (pole - p[3]);
            [t * p[0], t * p[1], t * p[2]]
        }
    }
}

/// Sample an `nu x nv` grid over the full patch domain and serialize it.
///
/// Vertices are emitted row-major in `u` then `v`; mesh formats connect
/// them with `(nu-1) * (nv-1)` quads in the same order. OBJ and PLY require
/// a projection; CSV ignores it.
pub fn export_grid(
    patch: &SurfacePatch,
    nu: usize,
    nv: usize,
    format: ExportFormat,
    projection: Option<Projection>,
) -> Result<Vec<u8>> {
    if nu < 2 || nv < 2 {
        return Err(Error::InvalidGrid {
            nu,
            nv,
            min_nu: 2,
            min_nv: 2,
        });
    }
    let grid = sample_grid(patch, nu, nv);
    let out = match format {
        ExportFormat::Csv4d => {
            let mut s = String::from("u,v,x1,x2,x3,x4\n");
            for (u, v, x) in &grid {
                let _ = writeln!(
                    s,
                    "{},{},{},{},{},{}",
                    fmt17(*u),
                    fmt17(*v),
                    fmt17(x[0]),
                    fmt17(x[1]),
                    fmt17(x[2]),
                    fmt17(x[3])
                );
            }
            s
        }
        ExportFormat::Obj => {
            let projection = projection.ok_or(Error::ProjectionRequired)?;
            let pole = stereographic_pole(&grid);
            let mut s = String::new();
            let _ = writeln!(s, "# revolve4 surface export (family {})", patch.family());
            let _ = writeln!(s, "# projection: {}", projection.label(pole));
            for (_, _, x) in &grid {
                let p = project(*x, projection, pole);
                let _ = writeln!(s, "v {} {} {}", fmt17(p[0]), fmt17(p[1]), fmt17(p[2]));
            }
            for i in 0..nu - 1 {
                for j in 0..nv - 1 {
                    // 1-based corner indices of quad (i, j), row-major.
                    let a = i * nv + j + 1;
                    let b = (i + 1) * nv + j + 1;
                    let c = (i + 1) * nv + j + 2;
                    let d = i * nv + j + 2;
                    let _ = writeln!(s, "f {a} {b} {c} {d}");
                }
            }
            s
        }
        ExportFormat::Ply => {
            let projection = projection.ok_or(Error::ProjectionRequired)?;
            let pole = stereographic_pole(&grid);
            let mut s = String::from("ply\nformat ascii 1.0\n");
            let _ = writeln!(
                s,
                "comment revolve4 surface export (family {})",
                patch.family()
            );
            let _ = writeln!(s, "comment projection: {}", projection.label(pole));
            let _ = writeln!(s, "element vertex {}", nu * nv);
            s.push_str("property double x\nproperty double y\nproperty double z\n");
            let _ = writeln!(s, "element face {}", (nu - 1) * (nv - 1));
            s.push_str("property list uchar int vertex_indices\nend_header\n");
            for (_, _, x) in &grid {
                let p = project(*x, projection, pole);
                let _ = writeln!(s, "{} {} {}", fmt17(p[0]), fmt17(p[1]), fmt17(p[2]));
            }
            for i in 0..nu - 1 {
                for j in 0..nv - 1 {
                    let a = i * nv + j;
                    let b = (i + 1) * nv + j;
                    let c = (i + 1) * nv + j + 1;
                    let d = i * nv + j + 1;
                    let _ = writeln!(s, "4 {a} {b} {c} {d}");
                }
            }
            s
        }
    };
    Ok(out.into_bytes())
}
