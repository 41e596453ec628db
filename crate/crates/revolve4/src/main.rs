//! Thin command-line front end over the `revolve4` library.
//!
//! Three subcommands: `generate` samples a surface to CSV/OBJ/PLY,
//! `verify` checks constancy of the Gaussian curvature and exits 0/1,
//! `solve-meridian` integrates the SR2 meridian equation to CSV. Every flag
//! can also be supplied through `--config <path>` as a JSON object keyed by
//! the flag names; explicit flags win.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Args, Parser, Subcommand};
use serde_json::Value;

use revolve4::{
    admissible_domain, build_sr2, build_surface, complete_meridian, export_grid, integrate_phi,
    quadrature_phi, verify_constant_curvature, CurvatureClass, ExportFormat, Family, Interval,
    MeridianRole, MeridianSolution, ProfileSpec, Projection, RootBranch, SurfacePatch,
};

const DEFAULT_ODE_STEP: f64 = 1e-3;

#[derive(Parser)]
#[command(
    name = "revolve4",
    version,
    about = "Constant-curvature rotational surfaces in four-space"
)]
struct Cli {
    /// JSON file mirroring the subcommand flags; explicit flags override it.
    #[arg(long, global = true, value_name = "PATH")]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sample a surface on a grid and write CSV, OBJ or PLY output.
    Generate {
        #[command(flatten)]
        surface: SurfaceArgs,
        /// Output format: csv, obj or ply.
        #[arg(long)]
        format: Option<String>,
        /// 4D -> 3D projection for obj/ply: x1, x2, x3, x4 or stereo.
        #[arg(long)]
        projection: Option<String>,
        /// Output file path.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Verify constancy of the Gaussian curvature; exit code 0 iff PASS.
    Verify {
        #[command(flatten)]
        surface: SurfaceArgs,
        /// Expected constant curvature.
        #[arg(long = "target-K", allow_hyphen_values = true)]
        target_k: Option<f64>,
        /// Maximum allowed |K - target|.
        #[arg(long)]
        tol: Option<f64>,
        /// Where to write the JSON report.
        #[arg(long)]
        report: Option<PathBuf>,
    },
    /// Solve the SR2 meridian equation and write u,phi,f,g samples.
    SolveMeridian {
        #[command(flatten)]
        profile: ProfileArgs,
        #[arg(long)]
        alpha: Option<f64>,
        #[arg(long)]
        beta: Option<f64>,
        /// Initial turning angle.
        #[arg(long, allow_hyphen_values = true)]
        phi0: Option<f64>,
        /// Root branch: + or -.
        #[arg(long, allow_hyphen_values = true)]
        branch: Option<String>,
        /// Solver: ode or quadrature (the latter needs alpha == beta).
        #[arg(long)]
        method: Option<String>,
        #[arg(long = "u-min", allow_hyphen_values = true)]
        u_min: Option<f64>,
        #[arg(long = "u-max", allow_hyphen_values = true)]
        u_max: Option<f64>,
        /// Fixed integration step for the ode method.
        #[arg(long)]
        step: Option<f64>,
        /// Output CSV path.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct ProfileArgs {
    /// Curvature class: neg, pos or zero.
    #[arg(long)]
    class: Option<String>,
    /// Rate constant C = sqrt(|K|) (ignored for the zero class).
    #[arg(long = "C", allow_hyphen_values = true)]
    c: Option<f64>,
    #[arg(long = "C1", allow_hyphen_values = true)]
    c1: Option<f64>,
    #[arg(long = "C2", allow_hyphen_values = true)]
    c2: Option<f64>,
}

#[derive(Args)]
struct SurfaceArgs {
    /// Surface family: sr1, sr2, sr3 or sr4.
    #[arg(long)]
    family: Option<String>,
    #[command(flatten)]
    profile: ProfileArgs,
    /// Sign of E for sr3/sr4: 1 or -1 (default 1).
    #[arg(long, allow_hyphen_values = true)]
    eps: Option<f64>,
    /// First rotation rate (sr2 only).
    #[arg(long)]
    alpha: Option<f64>,
    /// Second rotation rate (sr2 only).
    #[arg(long)]
    beta: Option<f64>,
    /// Initial turning angle (sr2 only).
    #[arg(long, allow_hyphen_values = true)]
    phi0: Option<f64>,
    /// Root branch for sr2: + or -.
    #[arg(long, allow_hyphen_values = true)]
    branch: Option<String>,
    #[arg(long = "u-min", allow_hyphen_values = true)]
    u_min: Option<f64>,
    #[arg(long = "u-max", allow_hyphen_values = true)]
    u_max: Option<f64>,
    /// Grid resolution along u.
    #[arg(long)]
    nu: Option<usize>,
    /// Grid resolution along v.
    #[arg(long)]
    nv: Option<usize>,
}

/// Flag values merged with the optional JSON config.
struct Settings {
    table: serde_json::Map<String, Value>,
}

impl Settings {
    fn load(path: Option<&Path>) -> Result<Self> {
        let table = match path {
            None => serde_json::Map::new(),
            Some(path) => {
                let text = fs::read_to_string(path)
                    .with_context(|| format!("reading config {}", path.display()))?;
                let value: Value = serde_json::from_str(&text)
                    .with_context(|| format!("parsing config {}", path.display()))?;
                match value {
                    Value::Object(map) => map,
                    _ => bail!("config {} must be a JSON object", path.display()),
                }
            }
        };
        Ok(Self { table })
    }

    fn f64_opt(&self, flag: Option<f64>, key: &str) -> Result<Option<f64>> {
        if flag.is_some() {
            return Ok(flag);
        }
        match self.table.get(key) {
            None => Ok(None),
            Some(Value::Number(n)) => {
                Ok(Some(n.as_f64().ok_or_else(|| {
                    anyhow!("config key \"{key}\" is not a finite number")
                })?))
            }
            Some(Value::String(s)) => {
                Ok(Some(s.parse().with_context(|| {
                    format!("config key \"{key}\" is not a number")
                })?))
            }
            Some(_) => bail!("config key \"{key}\" must be a number"),
        }
    }

    fn f64(&self, flag: Option<f64>, key: &str) -> Result<f64> {
        self.f64_opt(flag, key)?
            .ok_or_else(|| anyhow!("missing --{key} (or \"{key}\" in the config file)"))
    }

    fn usize(&self, flag: Option<usize>, key: &str) -> Result<usize> {
        if let Some(v) = flag {
            return Ok(v);
        }
        match self.table.get(key) {
            Some(Value::Number(n)) => n
                .as_u64()
                .map(|v| v as usize)
                .ok_or_else(|| anyhow!("config key \"{key}\" must be a nonnegative integer")),
            Some(_) => bail!("config key \"{key}\" must be an integer"),
            None => bail!("missing --{key} (or \"{key}\" in the config file)"),
        }
    }

    fn string_opt(&self, flag: Option<String>, key: &str) -> Result<Option<String>> {
        if flag.is_some() {
            return Ok(flag);
        }
        match self.table.get(key) {
            None => Ok(None),
            Some(Value::String(s)) => Ok(Some(s.clone())),
            Some(_) => bail!("config key \"{key}\" must be a string"),
        }
    }

    fn string(&self, flag: Option<String>, key: &str) -> Result<String> {
        self.string_opt(flag, key)?
            .ok_or_else(|| anyhow!("missing --{key} (or \"{key}\" in the config file)"))
    }

    fn path(&self, flag: Option<PathBuf>, key: &str) -> Result<PathBuf> {
        if let Some(p) = flag {
            return Ok(p);
        }
        Ok(PathBuf::from(self.string(None, key)?))
    }
}

fn parse_family(name: &str) -> Result<Family> {
    match name {
        "sr1" => Ok(Family::Sr1),
        "sr2" => Ok(Family::Sr2),
        "sr3" => Ok(Family::Sr3),
        "sr4" => Ok(Family::Sr4),
        other => bail!("unknown family \"{other}\" (expected sr1, sr2, sr3 or sr4)"),
    }
}

fn parse_class(name: &str) -> Result<CurvatureClass> {
    match name {
        "neg" => Ok(CurvatureClass::Negative),
        "pos" => Ok(CurvatureClass::Positive),
        "zero" => Ok(CurvatureClass::Zero),
        other => bail!("unknown class \"{other}\" (expected neg, pos or zero)"),
    }
}

fn parse_branch(name: &str) -> Result<RootBranch> {
    match name {
        "+" => Ok(RootBranch::Plus),
        "-" => Ok(RootBranch::Minus),
        other => bail!("unknown branch \"{other}\" (expected + or -)"),
    }
}

fn parse_format(name: &str) -> Result<ExportFormat> {
    match name {
        "csv" => Ok(ExportFormat::Csv4d),
        "obj" => Ok(ExportFormat::Obj),
        "ply" => Ok(ExportFormat::Ply),
        other => bail!("unknown format \"{other}\" (expected csv, obj or ply)"),
    }
}

fn parse_projection(name: &str) -> Result<Projection> {
    match name {
        "x1" => Ok(Projection::DropX1),
        "x2" => Ok(Projection::DropX2),
        "x3" => Ok(Projection::DropX3),
        "x4" => Ok(Projection::DropX4),
        "stereo" => Ok(Projection::Stereographic),
        other => bail!("unknown projection \"{other}\" (expected x1, x2, x3, x4 or stereo)"),
    }
}

fn resolve_profile(settings: &Settings, args: &ProfileArgs) -> Result<ProfileSpec> {
    let class = parse_class(&settings.string(args.class.clone(), "class")?)?;
    let c = match class {
        CurvatureClass::Zero => settings.f64_opt(args.c, "C")?.unwrap_or(1.0),
        _ => settings.f64(args.c, "C")?,
    };
    if class != CurvatureClass::Zero && c <= 0.0 {
        bail!("--C must be positive");
    }
    let c1 = settings.f64(args.c1, "C1")?;
    let c2 = settings.f64(args.c2, "C2")?;
    Ok(ProfileSpec::new(class, c, c1, c2))
}

fn default_v_range(family: Family) -> Interval {
    match family {
        // Hyperbolic rotations are unbounded in v; one unit either side is a
        // representative window.
        Family::Sr3 => Interval::new(-1.0, 1.0),
        _ => Interval::new(0.0, std::f64::consts::TAU),
    }
}

fn resolve_u_range(
    settings: &Settings,
    u_min: Option<f64>,
    u_max: Option<f64>,
) -> Result<Interval> {
    let lo = settings.f64(u_min, "u-min")?;
    let hi = settings.f64(u_max, "u-max")?;
    let range = Interval { lo, hi };
    if !range.is_proper() {
        bail!("--u-min must be strictly below --u-max");
    }
    Ok(range)
}

/// Build the requested patch; returns it with the profile's predicted
/// constant curvature.
fn build_patch(settings: &Settings, args: &SurfaceArgs) -> Result<(SurfacePatch, f64)> {
    let family = parse_family(&settings.string(args.family.clone(), "family")?)?;
    let spec = resolve_profile(settings, &args.profile)?;
    let requested = resolve_u_range(settings, args.u_min, args.u_max)?;

    match family {
        Family::Sr1 | Family::Sr3 | Family::Sr4 => {
            let eps = if family == Family::Sr1 {
                1.0
            } else {
                settings.f64_opt(args.eps, "eps")?.unwrap_or(1.0)
            };
            if eps != 1.0 && eps != -1.0 {
                bail!("--eps must be 1 or -1");
            }
            let spec = spec.with_eps(eps);
            let role = match family {
                Family::Sr1 => MeridianRole::Sr1,
                Family::Sr3 => MeridianRole::Sr3,
                _ => MeridianRole::Sr4,
            };
            let domain = admissible_domain(&spec, role, requested)?;
            if (domain.lo - requested.lo).abs() > 1e-9 || (domain.hi - requested.hi).abs() > 1e-9 {
                eprintln!(
                    "note: requested u-range trimmed to admissible [{:.6}, {:.6}]",
                    domain.lo, domain.hi
                );
            }
            let meridian = complete_meridian(&spec, family, eps, domain)?;
            let patch = build_surface(family, &meridian, default_v_range(family))?;
            Ok((patch, spec.target_curvature()))
        }
        Family::Sr2 => {
            let alpha = settings.f64(args.alpha, "alpha")?;
            let beta = settings.f64(args.beta, "beta")?;
            if alpha <= 0.0 || beta <= 0.0 {
                bail!("--alpha and --beta must be positive");
            }
            let phi0 = settings.f64_opt(args.phi0, "phi0")?.unwrap_or(0.0);
            let branch = parse_branch(
                &settings
                    .string_opt(args.branch.clone(), "branch")?
                    .unwrap_or_else(|| "+".into()),
            )?;
            let solution = integrate_phi(
                &spec,
                alpha,
                beta,
                requested,
                phi0,
                branch,
                DEFAULT_ODE_STEP,
            )?;
            let patch = build_sr2(&solution, default_v_range(family))?;
            Ok((patch, spec.target_curvature()))
        }
        Family::Custom => unreachable!("parse_family only yields named families"),
    }
}

fn solution_csv(solution: &MeridianSolution) -> String {
    let mut s = String::from("u,phi,f,g\n");
    for i in 0..solution.u_samples.len() {
        let _ = writeln!(
            s,
            "{:.16e},{:.16e},{:.16e},{:.16e}",
            solution.u_samples[i], solution.phi[i], solution.f[i], solution.g[i]
        );
    }
    s
}

fn run(cli: Cli) -> Result<ExitCode> {
    let settings = Settings::load(cli.config.as_deref())?;
    match cli.command {
        Command::Generate {
            surface,
            format,
            projection,
            out,
        } => {
            let (patch, predicted) = build_patch(&settings, &surface)?;
            let nu = settings.usize(surface.nu, "nu")?;
            let nv = settings.usize(surface.nv, "nv")?;
            let format = parse_format(&settings.string(format, "format")?)?;
            let projection = settings
                .string_opt(projection, "projection")?
                .map(|s| parse_projection(&s))
                .transpose()?;
            let bytes = export_grid(&patch, nu, nv, format, projection)?;
            let out = settings.path(out, "out")?;
            fs::write(&out, bytes).with_context(|| format!("writing {}", out.display()))?;
            println!(
                "wrote {} ({}x{} grid of family {}, predicted K = {})",
                out.display(),
                nu,
                nv,
                patch.family(),
                predicted
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            surface,
            target_k,
            tol,
            report,
        } => {
            let (patch, predicted) = build_patch(&settings, &surface)?;
            let nu = settings.usize(surface.nu, "nu")?;
            let nv = settings.usize(surface.nv, "nv")?;
            let target_k = settings.f64(target_k, "target-K")?;
            let tol = settings.f64(tol, "tol")?;
            let report_path = settings.path(report, "report")?;
            if (target_k - predicted).abs() > tol {
                eprintln!("note: the profile itself predicts K = {predicted}");
            }
            let outcome = verify_constant_curvature(&patch, target_k, nu, nv, tol)?;
            fs::write(&report_path, outcome.to_json())
                .with_context(|| format!("writing {}", report_path.display()))?;
            let verdict = if outcome.passed { "PASS" } else { "FAIL" };
            println!(
                "{verdict}: max |K - {target_k}| = {:.3e} (tolerance {:.3e}, {} samples, {} degenerate)",
                outcome.max_abs_deviation,
                tol,
                outcome.n_samples,
                outcome.degenerate_points.len()
            );
            Ok(if outcome.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        Command::SolveMeridian {
            profile,
            alpha,
            beta,
            phi0,
            branch,
            method,
            u_min,
            u_max,
            step,
            out,
        } => {
            let spec = resolve_profile(&settings, &profile)?;
            let alpha = settings.f64(alpha, "alpha")?;
            let beta = settings.f64(beta, "beta")?;
            if alpha <= 0.0 || beta <= 0.0 {
                bail!("--alpha and --beta must be positive");
            }
            let phi0 = settings.f64_opt(phi0, "phi0")?.unwrap_or(0.0);
            let branch = parse_branch(
                &settings
                    .string_opt(branch, "branch")?
                    .unwrap_or_else(|| "+".into()),
            )?;
            let range = resolve_u_range(&settings, u_min, u_max)?;
            let method = settings.string(method, "method")?;
            let solution = match method.as_str() {
                "ode" => {
                    let step = settings.f64_opt(step, "step")?.unwrap_or(DEFAULT_ODE_STEP);
                    if step <= 0.0 {
                        bail!("--step must be positive");
                    }
                    integrate_phi(&spec, alpha, beta, range, phi0, branch, step)?
                }
                "quadrature" => {
                    if (alpha - beta).abs() > 1e-12 {
                        bail!("the quadrature method requires --alpha == --beta");
                    }
                    quadrature_phi(&spec, alpha, range, phi0)?
                }
                other => bail!("unknown method \"{other}\" (expected ode or quadrature)"),
            };
            let out = settings.path(out, "out")?;
            fs::write(&out, solution_csv(&solution))
                .with_context(|| format!("writing {}", out.display()))?;
            println!(
                "wrote {} ({} samples, equation residual {:.3e})",
                out.display(),
                solution.u_samples.len(),
                solution.max_equation_residual()
            );
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::FAILURE
        }
    }
}
