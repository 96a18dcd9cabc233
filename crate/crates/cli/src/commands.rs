//! Data-level implementations behind the subcommands. Everything returns
//! plain serializable rows; rendering lives in [`crate::output`].

use num_complex::Complex;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use hbk_core::bohr::{
    area_bounds, area_exact, bohr_radius_hcphi, bohr_radius_mzn, growth_lr, growth_phi, growth_psi,
    improved_bohr_radius, RadiusResult,
};
use hbk_core::classes::{HarmonicMapParams, HarmonicMapping, MaMindaKernel};
use hbk_core::toeplitz::{sharpness_scan, toeplitz_det_of, BoundKind, SeriesTarget, ToeplitzSpec};
use hbk_core::{Error, Result};

/// Rounds to six decimals, ties to even, matching the table rendering.
pub fn round6(x: f64) -> f64 {
    (x * 1e6).round_ties_even() / 1e6
}

/// One table row; `r_f` is stored already rounded to the printed
/// precision so emitted CSV round-trips exactly.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TableRow {
    pub alpha: f64,
    pub zeta: f64,
    pub n: u32,
    pub r_f: f64,
    pub residual: f64,
    pub iterations: u32,
}

/// The standard table parameterization: n with ζ = 1/(2n).
pub fn default_table_rows() -> Vec<(u32, f64)> {
    [1u32, 2, 3, 4, 5, 10, 100, 1000]
        .into_iter()
        .map(|n| (n, 1.0 / (2.0 * n as f64)))
        .collect()
}

/// Bohr radii for a list of (n, ζ) rows at fixed α. Rows are computed in
/// parallel but reported in input order.
pub fn run_tables(alpha: f64, rows: &[(u32, f64)], tol: f64) -> Result<Vec<TableRow>> {
    rows.par_iter()
        .map(|&(n, zeta)| {
            let res = bohr_radius_mzn(alpha, zeta, n, tol)?;
            Ok(TableRow {
                alpha,
                zeta,
                n,
                r_f: round6(res.root),
                residual: res.residual,
                iterations: res.iterations,
            })
        })
        .collect()
}

/// One figure-data row.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FigureRow {
    pub n: u32,
    pub r: f64,
    #[serde(rename = "F")]
    pub f: f64,
}

/// F_n(r) on the grid r = 0, step, ..., 0.999 for each n (ζ = 1/(2n)).
pub fn run_figure(alpha: f64, n_list: &[u32], step: f64) -> Result<Vec<FigureRow>> {
    if !(step > 0.0 && step <= 0.01) {
        return Err(Error::Parameter(format!(
            "step must lie in (0, 0.01], got {step}"
        )));
    }
    let mut grid = Vec::new();
    let mut i = 0u64;
    loop {
        let r = step * i as f64;
        if r > 0.999 {
            break;
        }
        grid.push(r);
        i += 1;
    }
    let rows = hbk_core::bohr::figure_data(alpha, n_list, &grid)?;
    Ok(rows
        .into_iter()
        .map(|row| FigureRow {
            n: row.n,
            r: row.r,
            f: row.f,
        })
        .collect())
}

/// Which kernel backs a kernel-class computation.
#[derive(Clone, Debug)]
pub enum KernelSpec {
    ConvexOrder(f64),
    Linear(f64),
    CoefficientFile(std::path::PathBuf),
}

impl KernelSpec {
    /// Parses `convex-order:<alpha>`, `linear:<b1>`, or a path to a
    /// coefficient file (one real coefficient per line, starting at 1).
    pub fn parse(s: &str) -> Result<Self> {
        if let Some(rest) = s.strip_prefix("convex-order:") {
            let alpha: f64 = rest
                .parse()
                .map_err(|_| Error::Parameter(format!("bad alpha in kernel spec: {rest}")))?;
            return Ok(KernelSpec::ConvexOrder(alpha));
        }
        if let Some(rest) = s.strip_prefix("linear:") {
            let b1: f64 = rest
                .parse()
                .map_err(|_| Error::Parameter(format!("bad B1 in kernel spec: {rest}")))?;
            return Ok(KernelSpec::Linear(b1));
        }
        Ok(KernelSpec::CoefficientFile(std::path::PathBuf::from(s)))
    }

    pub fn build(&self, order: usize) -> Result<MaMindaKernel<f64>> {
        match self {
            KernelSpec::ConvexOrder(alpha) => MaMindaKernel::convex_order(*alpha, order),
            KernelSpec::Linear(b1) => MaMindaKernel::linear_phi(*b1, order),
            KernelSpec::CoefficientFile(path) => {
                let text = std::fs::read_to_string(path).map_err(|e| {
                    Error::Parameter(format!("cannot read {}: {e}", path.display()))
                })?;
                let mut coeffs = Vec::new();
                for (lineno, line) in text.lines().enumerate() {
                    let line = line.trim();
                    if line.is_empty() || line.starts_with('#') {
                        continue;
                    }
                    let v: f64 = line.parse().map_err(|_| {
                        Error::Parameter(format!("bad coefficient on line {}", lineno + 1))
                    })?;
                    coeffs.push(Complex::new(v, 0.0));
                }
                // The file specifies phi as a polynomial: coefficients
                // past the listed ones are zero, so pad to the working
                // order rather than shortening it.
                while coeffs.len() <= order {
                    coeffs.push(Complex::new(0.0, 0.0));
                }
                let phi = hbk_core::TruncatedSeries::new(coeffs)?;
                hbk_core::classes::kernel_from_phi(&phi, order)
            }
        }
    }
}

/// Output of a radius computation.
#[derive(Clone, Debug, Serialize)]
pub struct BohrOutput {
    pub root: f64,
    pub root_6dp: f64,
    pub radius: f64,
    pub capped: bool,
    pub residual: f64,
    pub iterations: u32,
    pub bracket_lo: f64,
    pub bracket_hi: f64,
    /// True when |ζ| sits on the class boundary 1/(2n-1).
    pub boundary_zeta: bool,
}

fn bohr_output(res: RadiusResult<f64>, boundary: bool) -> BohrOutput {
    BohrOutput {
        root: res.root,
        root_6dp: round6(res.root),
        radius: res.reported_radius(),
        capped: res.capped,
        residual: res.residual,
        iterations: res.iterations,
        bracket_lo: res.bracket.0,
        bracket_hi: res.bracket.1,
        boundary_zeta: boundary,
    }
}

fn is_boundary(zeta_abs: f64, n: u32) -> bool {
    (zeta_abs - hbk_core::classes::zeta_cap::<f64>(n)).abs() <= 1e-12
}

/// Bohr radius of the harmonic family (no kernel): root of Ψ(r) = Φ(1).
pub fn run_bohr_mzn(alpha: f64, zeta_abs: f64, n: u32, tol: f64) -> Result<BohrOutput> {
    let res = bohr_radius_mzn(alpha, zeta_abs, n, tol)?;
    Ok(bohr_output(res, is_boundary(zeta_abs, n)))
}

/// Kernel-class Bohr radius, plain or improved (area-corrected).
pub fn run_bohr_kernel(
    spec: &KernelSpec,
    zeta_abs: f64,
    n: u32,
    tol: f64,
    improved: bool,
    order: usize,
) -> Result<BohrOutput> {
    let kernel = spec.build(order)?;
    let res = if improved {
        improved_bohr_radius(&kernel, zeta_abs, n, tol)?
    } else {
        bohr_radius_hcphi(&kernel, zeta_abs, n, tol)?
    };
    Ok(bohr_output(res, is_boundary(zeta_abs, n)))
}

/// Growth envelope values at one radius.
#[derive(Clone, Debug, Serialize)]
pub struct GrowthOutput {
    pub r: f64,
    pub lower: f64,
    pub upper: f64,
}

pub fn run_growth(alpha: f64, zeta_abs: f64, n: u32, r: f64) -> Result<GrowthOutput> {
    Ok(GrowthOutput {
        r,
        lower: growth_phi(r, alpha, zeta_abs, n)?,
        upper: growth_psi(r, alpha, zeta_abs, n)?,
    })
}

pub fn run_growth_kernel(
    spec: &KernelSpec,
    zeta_abs: f64,
    n: u32,
    r: f64,
    order: usize,
) -> Result<GrowthOutput> {
    let kernel = spec.build(order)?;
    let p = growth_lr(r, zeta_abs, n, &kernel)?;
    Ok(GrowthOutput {
        r,
        lower: p.lower,
        upper: p.upper,
    })
}

/// Identifier strings for the bound subcommand.
pub fn parse_bound_kind(s: &str) -> Result<(Option<BoundKind>, &'static str)> {
    // T22 is the n = 2 corollary of the T2(n) family; it has no
    // BoundKind slot of its own.
    match s.to_ascii_lowercase().as_str() {
        "t22" => Ok((None, "t22")),
        "t2n" => Ok((Some(BoundKind::T2nAnalytic), "t2n")),
        "t2n-g" | "t2ng" => Ok((Some(BoundKind::T2nCoAnalytic), "t2n-g")),
        "t31" => Ok((Some(BoundKind::T31Analytic), "t31")),
        "t31-g" | "t31g" => Ok((Some(BoundKind::T31CoAnalytic), "t31-g")),
        "t32" => Ok((Some(BoundKind::T32Analytic), "t32")),
        "t32-g" | "t32g" => Ok((Some(BoundKind::T32CoAnalytic), "t32-g")),
        other => Err(Error::Parameter(format!(
            "unknown bound '{other}' (expected t22, t2n, t2n-g, t31, t31-g, t32, t32-g)"
        ))),
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct BoundOutput {
    pub which: String,
    pub bound: f64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub scan_supremum: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub scan_argmax_theta: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub scan_relative_gap: Option<f64>,
}

pub fn run_toeplitz_bound(
    which: &str,
    alpha: f64,
    zeta_abs: f64,
    n: u32,
    scan_grid: Option<usize>,
) -> Result<BoundOutput> {
    let (kind, name) = parse_bound_kind(which)?;
    let bound = match kind {
        None => hbk_core::toeplitz::bound_t22_corollary(alpha)?,
        Some(k) => k.bound(alpha, zeta_abs, n)?,
    };
    let mut out = BoundOutput {
        which: name.to_string(),
        bound,
        scan_supremum: None,
        scan_argmax_theta: None,
        scan_relative_gap: None,
    };
    if let Some(grid) = scan_grid {
        let kind = kind.unwrap_or(BoundKind::T2nAnalytic); // t22 scans T2(2)
        let n = if out.which == "t22" { 2 } else { n };
        let scan = sharpness_scan(alpha, Complex::new(zeta_abs, 0.0), n, kind, grid)?;
        out.scan_supremum = Some(scan.supremum);
        out.scan_argmax_theta = Some(scan.argmax_theta);
        out.scan_relative_gap = Some(scan.relative_gap);
    }
    Ok(out)
}

/// How the mapping for `toeplitz-det` / `area` is constructed.
#[derive(Clone, Debug)]
pub enum MappingChoice {
    Sampled { seed: u64 },
    Extremal { delta_angle: f64 },
}

fn build_mapping(
    choice: &MappingChoice,
    alpha: f64,
    zeta_abs: f64,
    n: u32,
    order: usize,
) -> Result<HarmonicMapping<f64>> {
    let params = HarmonicMapParams::new(alpha, Complex::new(zeta_abs, 0.0), n)?;
    match choice {
        MappingChoice::Sampled { seed } => HarmonicMapping::sample(params, *seed, order),
        MappingChoice::Extremal { delta_angle } => {
            HarmonicMapping::extremal(params, Complex::from_polar(1.0, *delta_angle), order)
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct DetOutput {
    pub start: usize,
    pub size: usize,
    pub target: String,
    pub det_re: f64,
    pub det_im: f64,
    pub det_abs: f64,
}

#[allow(clippy::too_many_arguments)]
pub fn run_toeplitz_det(
    choice: &MappingChoice,
    alpha: f64,
    zeta_abs: f64,
    n: u32,
    start: usize,
    size: usize,
    target: SeriesTarget,
    order: usize,
) -> Result<DetOutput> {
    let f = build_mapping(choice, alpha, zeta_abs, n, order)?;
    let spec = ToeplitzSpec::new(start, size, target)?;
    let det = toeplitz_det_of(&f, &spec)?;
    Ok(DetOutput {
        start,
        size,
        target: match target {
            SeriesTarget::Analytic => "h".into(),
            SeriesTarget::CoAnalytic => "g".into(),
        },
        det_re: det.re,
        det_im: det.im,
        det_abs: det.norm(),
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct AreaOutput {
    pub r: f64,
    pub lower: f64,
    pub exact: f64,
    pub upper: f64,
}

pub fn run_area(
    choice: &MappingChoice,
    alpha: f64,
    zeta_abs: f64,
    n: u32,
    r: f64,
    order: usize,
) -> Result<AreaOutput> {
    let f = build_mapping(choice, alpha, zeta_abs, n, order)?;
    let kernel = MaMindaKernel::convex_order(alpha, order)?;
    let (lower, upper) = area_bounds(r, zeta_abs, n, &kernel)?;
    let exact = area_exact(&f, r)?;
    Ok(AreaOutput {
        r,
        lower,
        exact,
        upper,
    })
}
