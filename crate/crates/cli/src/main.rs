use std::fs::File;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use hbk_cli::commands::{self, KernelSpec, MappingChoice};
use hbk_cli::output::{self, sig12, Format};
use hbk_cli::{apply_thread_cap, campaign, exit_code_for};
use hbk_core::toeplitz::SeriesTarget;
use hbk_core::{Error, Result};

/// Close-to-convex harmonic mappings: tables, growth envelopes, Toeplitz
/// bounds, Bohr radii, and fuzz campaigns.
#[derive(Parser)]
#[command(name = "hbk", version, max_term_width = 100)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Csv => Format::Csv,
            FormatArg::Json => Format::Json,
        }
    }
}

#[derive(Args)]
struct OutputArgs {
    /// Write to a file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Output format for structured results.
    #[arg(long, value_enum, global = true)]
    format: Option<FormatArg>,
}

#[derive(Subcommand)]
enum Command {
    /// Bohr radii r_f for a list of (n, zeta) rows at fixed alpha.
    Tables {
        #[arg(long)]
        alpha: f64,
        /// Rows as comma-separated n:zeta pairs; defaults to the
        /// published parameterization n in {1,...,1000}, zeta = 1/(2n).
        #[arg(long)]
        rows: Option<String>,
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Long-format samples of F_n(r) for plotting.
    FigureData {
        #[arg(long)]
        alpha: f64,
        /// Comma-separated list of n values.
        #[arg(long, default_value = "1,2,3,4,5")]
        n: String,
        #[arg(long, default_value_t = 0.001)]
        step: f64,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Bohr radius: the family radius by default, the kernel-class
    /// radius when --phi is given (--improved adds the area term).
    BohrRadius {
        #[arg(long)]
        alpha: Option<f64>,
        #[arg(long)]
        zeta: f64,
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
        /// Kernel: convex-order:<alpha>, linear:<b1>, or a coefficient file.
        #[arg(long)]
        phi: Option<String>,
        /// Use the area-improved radius (kernel path only).
        #[arg(long)]
        improved: bool,
        #[arg(long, default_value_t = hbk_core::DEFAULT_ORDER)]
        order: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Growth envelope at one radius: Phi/Psi, or L/R when --phi is given.
    Growth {
        #[arg(long)]
        alpha: Option<f64>,
        #[arg(long)]
        zeta: f64,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        r: f64,
        #[arg(long)]
        phi: Option<String>,
        #[arg(long, default_value_t = hbk_core::DEFAULT_ORDER)]
        order: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Closed-form Toeplitz determinant bound, optionally with a
    /// sharpness scan over the rotation extremal.
    ToeplitzBound {
        /// One of t22, t2n, t2n-g, t31, t31-g, t32, t32-g.
        #[arg(long)]
        which: String,
        #[arg(long)]
        alpha: f64,
        #[arg(long, default_value_t = 0.0)]
        zeta: f64,
        #[arg(long, default_value_t = 2)]
        n: u32,
        /// Run the rotation scan with this many grid angles.
        #[arg(long)]
        scan: bool,
        #[arg(long, default_value_t = 360)]
        grid: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Symmetric Toeplitz determinant of a sampled or extremal member.
    ToeplitzDet {
        #[arg(long)]
        alpha: f64,
        #[arg(long)]
        zeta: f64,
        #[arg(long)]
        n: u32,
        /// Starting coefficient index of the matrix.
        #[arg(long, default_value_t = 1)]
        start: usize,
        /// Matrix size q.
        #[arg(long, default_value_t = 3)]
        q: usize,
        /// h (analytic part) or g (co-analytic part).
        #[arg(long, default_value = "h")]
        target: String,
        /// Sample seed; mutually exclusive with --extremal.
        #[arg(long, conflicts_with = "extremal")]
        seed: Option<u64>,
        /// Use the rotation extremal instead of a sample.
        #[arg(long)]
        extremal: bool,
        /// Rotation angle of delta for --extremal.
        #[arg(long, default_value_t = 0.0)]
        delta_angle: f64,
        #[arg(long, default_value_t = 32)]
        order: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Image-area sandwich: quadrature bounds and the exact series value.
    Area {
        #[arg(long)]
        alpha: f64,
        #[arg(long)]
        zeta: f64,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        r: f64,
        #[arg(long, conflicts_with = "extremal")]
        seed: Option<u64>,
        #[arg(long)]
        extremal: bool,
        #[arg(long, default_value_t = 0.0)]
        delta_angle: f64,
        #[arg(long, default_value_t = hbk_core::DEFAULT_ORDER)]
        order: usize,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Seeded fuzz campaign over the class invariants; exit code 1 on any
    /// violation.
    Fuzz {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 10000)]
        samples: usize,
        /// Comma-separated alpha grid.
        #[arg(long, default_value = "-0.5,0,0.25,0.5,0.75,0.9")]
        alpha_grid: String,
        /// Comma-separated n list.
        #[arg(long, default_value = "1,2,3")]
        n_list: String,
        #[arg(long, value_enum, default_value_t = ZetaModeArg::Interior)]
        zeta_mode: ZetaModeArg,
        /// Additive slack on every bound.
        #[arg(long, alias = "tol", default_value_t = 1e-9)]
        slack: f64,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum ZetaModeArg {
    Interior,
    Boundary,
}

fn parse_list<T: std::str::FromStr>(s: &str, what: &str) -> Result<Vec<T>> {
    let mut out = Vec::new();
    for item in s.split(',') {
        let item = item.trim();
        if item.is_empty() {
            continue;
        }
        out.push(
            item.parse::<T>()
                .map_err(|_| Error::Parameter(format!("bad {what} entry: {item}")))?,
        );
    }
    if out.is_empty() {
        return Err(Error::Parameter(format!("{what} list is empty")));
    }
    Ok(out)
}

fn parse_rows(s: &str) -> Result<Vec<(u32, f64)>> {
    let mut rows = Vec::new();
    for item in s.split(',') {
        let item = item.trim();
        if item.is_empty() {
            continue;
        }
        let (n, zeta) = item
            .split_once(':')
            .ok_or_else(|| Error::Parameter(format!("row must be n:zeta, got {item}")))?;
        rows.push((
            n.parse()
                .map_err(|_| Error::Parameter(format!("bad n in row {item}")))?,
            zeta.parse()
                .map_err(|_| Error::Parameter(format!("bad zeta in row {item}")))?,
        ));
    }
    if rows.is_empty() {
        return Err(Error::Parameter("rows list is empty".into()));
    }
    Ok(rows)
}

/// stdout or --out file.
fn sink(out: &Option<PathBuf>) -> Result<Box<dyn Write>> {
    match out {
        None => Ok(Box::new(std::io::stdout().lock())),
        Some(path) => Ok(Box::new(File::create(path).map_err(|e| {
            Error::Parameter(format!("cannot create {}: {e}", path.display()))
        })?)),
    }
}

fn warn_boundary(zeta_abs: f64, n: u32) {
    let cap = hbk_core::classes::zeta_cap::<f64>(n);
    if (zeta_abs - cap).abs() <= 1e-12 {
        eprintln!(
            "note: |zeta| = 1/(2n-1) sits on the class boundary; the growth and Bohr statements assume the open interval"
        );
    }
}

fn run(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::Tables {
            alpha,
            rows,
            tol,
            output,
        } => {
            let rows = match rows {
                Some(s) => parse_rows(&s)?,
                None => commands::default_table_rows(),
            };
            let table = commands::run_tables(alpha, &rows, tol)?;
            let mut w = sink(&output.out)?;
            match output.format.map(Format::from).unwrap_or(Format::Csv) {
                Format::Csv => output::write_tables_csv(&table, &mut w)?,
                Format::Json => output::write_json(&table, &mut w)?,
            }
        }
        Command::FigureData {
            alpha,
            n,
            step,
            output,
        } => {
            let n_list: Vec<u32> = parse_list(&n, "n")?;
            let rows = commands::run_figure(alpha, &n_list, step)?;
            let mut w = sink(&output.out)?;
            match output.format.map(Format::from).unwrap_or(Format::Csv) {
                Format::Csv => output::write_figure_csv(&rows, &mut w)?,
                Format::Json => output::write_json(&rows, &mut w)?,
            }
        }
        Command::BohrRadius {
            alpha,
            zeta,
            n,
            tol,
            phi,
            improved,
            order,
            output,
        } => {
            warn_boundary(zeta, n);
            let result = match &phi {
                Some(spec) => {
                    let spec = KernelSpec::parse(spec)?;
                    commands::run_bohr_kernel(&spec, zeta, n, tol, improved, order)?
                }
                None => {
                    if improved {
                        return Err(Error::Parameter(
                            "--improved needs a kernel; pass --phi".into(),
                        ));
                    }
                    let alpha = alpha.ok_or_else(|| {
                        Error::Parameter("--alpha is required without --phi".into())
                    })?;
                    commands::run_bohr_mzn(alpha, zeta, n, tol)?
                }
            };
            let mut w = sink(&output.out)?;
            match output.format.map(Format::from).unwrap_or(Format::Csv) {
                Format::Json => output::write_json(&result, &mut w)?,
                Format::Csv => output::write_kv(
                    &[
                        ("r_f", format!("{:.6}", result.root_6dp)),
                        ("root", sig12(result.root)),
                        ("radius", sig12(result.radius)),
                        ("capped", result.capped.to_string()),
                        ("residual", sig12(result.residual)),
                        ("iterations", result.iterations.to_string()),
                    ],
                    &mut w,
                )?,
            }
        }
        Command::Growth {
            alpha,
            zeta,
            n,
            r,
            phi,
            order,
            output,
        } => {
            warn_boundary(zeta, n);
            let g = match &phi {
                Some(spec) => {
                    let spec = KernelSpec::parse(spec)?;
                    commands::run_growth_kernel(&spec, zeta, n, r, order)?
                }
                None => {
                    let alpha = alpha.ok_or_else(|| {
                        Error::Parameter("--alpha is required without --phi".into())
                    })?;
                    commands::run_growth(alpha, zeta, n, r)?
                }
            };
            let mut w = sink(&output.out)?;
            match output.format.map(Format::from).unwrap_or(Format::Csv) {
                Format::Json => output::write_json(&g, &mut w)?,
                Format::Csv => output::write_kv(
                    &[
                        ("r", sig12(g.r)),
                        ("lower", sig12(g.lower)),
                        ("upper", sig12(g.upper)),
                    ],
                    &mut w,
                )?,
            }
        }
        Command::ToeplitzBound {
            which,
            alpha,
            zeta,
            n,
            scan,
            grid,
            output,
        } => {
            let b = commands::run_toeplitz_bound(
                &which,
                alpha,
                zeta,
                n,
                if scan { Some(grid) } else { None },
            )?;
            let mut w = sink(&output.out)?;
            match output.format.map(Format::from).unwrap_or(Format::Csv) {
                Format::Json => output::write_json(&b, &mut w)?,
                Format::Csv => {
                    let mut pairs = vec![("bound", sig12(b.bound))];
                    if let Some(s) = b.scan_supremum {
                        pairs.push(("scan_supremum", sig12(s)));
                    }
                    if let Some(t) = b.scan_argmax_theta {
                        pairs.push(("scan_argmax_theta", sig12(t)));
                    }
                    if let Some(g) = b.scan_relative_gap {
                        pairs.push(("scan_relative_gap", sig12(g)));
                    }
                    output::write_kv(&pairs, &mut w)?;
                }
            }
        }
        Command::ToeplitzDet {
            alpha,
            zeta,
            n,
            start,
            q,
            target,
            seed,
            extremal,
            delta_angle,
            order,
            output,
        } => {
            let target = match target.as_str() {
                "h" => SeriesTarget::Analytic,
                "g" => SeriesTarget::CoAnalytic,
                other => {
                    return Err(Error::Parameter(format!(
                        "target must be h or g, got {other}"
                    )))
                }
            };
            let choice = if extremal {
                MappingChoice::Extremal { delta_angle }
            } else {
                MappingChoice::Sampled {
                    seed: seed.unwrap_or(0),
                }
            };
            let d = commands::run_toeplitz_det(&choice, alpha, zeta, n, start, q, target, order)?;
            let mut w = sink(&output.out)?;
            match output.format.map(Format::from).unwrap_or(Format::Csv) {
                Format::Json => output::write_json(&d, &mut w)?,
                Format::Csv => output::write_kv(
                    &[
                        ("det_re", sig12(d.det_re)),
                        ("det_im", sig12(d.det_im)),
                        ("det_abs", sig12(d.det_abs)),
                    ],
                    &mut w,
                )?,
            }
        }
        Command::Area {
            alpha,
            zeta,
            n,
            r,
            seed,
            extremal,
            delta_angle,
            order,
            output,
        } => {
            let choice = if extremal {
                MappingChoice::Extremal { delta_angle }
            } else {
                MappingChoice::Sampled {
                    seed: seed.unwrap_or(0),
                }
            };
            let a = commands::run_area(&choice, alpha, zeta, n, r, order)?;
            let mut w = sink(&output.out)?;
            match output.format.map(Format::from).unwrap_or(Format::Csv) {
                Format::Json => output::write_json(&a, &mut w)?,
                Format::Csv => output::write_kv(
                    &[
                        ("lower", sig12(a.lower)),
                        ("exact", sig12(a.exact)),
                        ("upper", sig12(a.upper)),
                    ],
                    &mut w,
                )?,
            }
        }
        Command::Fuzz {
            seed,
            samples,
            alpha_grid,
            n_list,
            zeta_mode,
            slack,
            output,
        } => {
            let config = campaign::CampaignConfig {
                seed,
                samples,
                alpha_grid: parse_list(&alpha_grid, "alpha")?,
                n_list: parse_list(&n_list, "n")?,
                zeta_mode: match zeta_mode {
                    ZetaModeArg::Interior => campaign::ZetaMode::Interior,
                    ZetaModeArg::Boundary => campaign::ZetaMode::Boundary,
                },
                slack,
                ..campaign::CampaignConfig::with_defaults(seed, samples)
            };
            let report = campaign::run(&config)?;
            let mut w = sink(&output.out)?;
            output::write_json(&report, &mut w)?;
            if !report.pass {
                for p in report.properties.iter().filter(|p| p.violations > 0) {
                    eprintln!(
                        "violation: {} ({} of {}), worst margin {}, reproducer seed {:?}",
                        p.name, p.violations, p.checked, p.worst_margin, p.first_violation_seed
                    );
                }
                return Ok(1);
            }
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    apply_thread_cap();
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}
