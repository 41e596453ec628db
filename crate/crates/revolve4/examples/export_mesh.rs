//! Export a sampled surface to disk: the raw 4D grid as CSV, and 3D
//! meshes (OBJ, PLY) after projecting out one coordinate or projecting
//! stereographically.

use std::f64::consts::{PI, TAU};
use std::fs;

use revolve4::{
    build_surface, complete_meridian, export_grid, CurvatureClass, ExportFormat, Family, Interval,
    ProfileSpec, Projection,
};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let spec = ProfileSpec::new(CurvatureClass::Positive, 1.0, 1.0, 0.0);
    let meridian = complete_meridian(&spec, Family::Sr1, 1.0, Interval::new(0.05, PI - 0.05))?;
    let patch = build_surface(Family::Sr1, &meridian, Interval::new(0.0, TAU))?;

    let out = std::env::temp_dir().join("revolve4_example");
    fs::create_dir_all(&out)?;

    let csv = export_grid(&patch, 40, 60, ExportFormat::Csv4d, None)?;
    fs::write(out.join("sphere.csv"), &csv)?;
    println!("sphere.csv: {} bytes of u,v,x1,x2,x3,x4 rows", csv.len());

    let obj = export_grid(&patch, 40, 60, ExportFormat::Obj, Some(Projection::DropX2))?;
    fs::write(out.join("sphere_drop_x2.obj"), &obj)?;
    println!("sphere_drop_x2.obj: 40x60 vertices, 39x59 quads");

    let ply = export_grid(
        &patch,
        40,
        60,
        ExportFormat::Ply,
        Some(Projection::Stereographic),
    )?;
    fs::write(out.join("sphere_stereo.ply"), &ply)?;
    let header: String = String::from_utf8_lossy(&ply)
        .lines()
        .take(4)
        .collect::<Vec<_>>()
        .join("\n");
    println!("sphere_stereo.ply header:\n{header}");

    println!("wrote meshes under {}", out.display());
    Ok(())
}
