//! Seeded fuzz campaigns over the class: coefficient bounds, the
//! Carathéodory and Efraimidis inequalities, the six Toeplitz determinant
//! bounds, subordination domination, and (on subsets) the growth and
//! area sandwiches.
//!
//! Sample i of a campaign draws its own RNG stream from (campaign seed, i),
//! so reports are byte-identical for a fixed config regardless of the
//! worker count.

use num_complex::Complex;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use hbk_core::bohr::{area_bounds, area_exact, growth_phi, growth_psi};
use hbk_core::classes::{
    zeta_cap, CaratheodoryFunction, HarmonicMapParams, HarmonicMapping, MaMindaKernel,
};
use hbk_core::toeplitz::{toeplitz_det_of, BoundKind};
use hbk_core::{Error, Result};

/// How |ζ| is drawn.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ZetaMode {
    /// Uniform on the open disk of radius 1/(2n-1).
    Interior,
    /// |ζ| pinned to the boundary 1/(2n-1).
    Boundary,
}

/// Campaign parameters. Identical configs yield identical report bytes.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CampaignConfig {
    pub seed: u64,
    pub samples: usize,
    pub alpha_grid: Vec<f64>,
    pub n_list: Vec<u32>,
    pub zeta_mode: ZetaMode,
    /// Additive slack applied to every bound.
    pub slack: f64,
    /// Highest coefficient index checked against the sharp bounds.
    pub coeff_max_index: usize,
    /// Check the growth sandwich on every k-th sample (0 disables).
    pub growth_every: usize,
    /// Check the area sandwich on every k-th sample (0 disables).
    pub area_every: usize,
}

impl CampaignConfig {
    pub fn with_defaults(seed: u64, samples: usize) -> Self {
        Self {
            seed,
            samples,
            alpha_grid: vec![-0.5, 0.0, 0.25, 0.5, 0.75, 0.9],
            n_list: vec![1, 2, 3],
            zeta_mode: ZetaMode::Interior,
            slack: 1e-9,
            coeff_max_index: 32,
            growth_every: 10,
            area_every: 50,
        }
    }

    fn validate(&self) -> Result<()> {
        if self.samples < 1 {
            return Err(Error::Parameter("samples must be at least 1".into()));
        }
        if self.alpha_grid.is_empty() || self.n_list.is_empty() {
            return Err(Error::Parameter(
                "alpha grid and n list must be nonempty".into(),
            ));
        }
        if self.slack <= 0.0 {
            return Err(Error::Parameter("slack must be positive".into()));
        }
        Ok(())
    }
}

/// Per-property aggregate over a campaign.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PropertyReport {
    pub name: String,
    pub checked: u64,
    pub violations: u64,
    /// Smallest observed value of bound + slack - |quantity| (negative
    /// means a violation).
    pub worst_margin: f64,
    /// Derived seed of the first violating sample, for reproduction.
    pub first_violation_seed: Option<u64>,
}

/// Full campaign outcome.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CampaignReport {
    pub config: CampaignConfig,
    pub properties: Vec<PropertyReport>,
    pub pass: bool,
}

const PROPERTY_NAMES: [&str; 13] = [
    "caratheodory_pn",
    "efraimidis",
    "coefficient_a",
    "coefficient_b",
    "toeplitz_t2n_h",
    "toeplitz_t2n_g",
    "toeplitz_t31_h",
    "toeplitz_t31_g",
    "toeplitz_t32_h",
    "toeplitz_t32_g",
    "subordination_majorant",
    "growth_sandwich",
    "area_sandwich",
];

const N_PROPERTIES: usize = PROPERTY_NAMES.len();

/// One margin observation: (property index, margin).
type Observation = (usize, f64);

fn splitmix(seed: u64, salt: u64) -> u64 {
    let mut x = seed ^ salt.wrapping_mul(0x9e3779b97f4a7c15);
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d049bb133111eb);
    x ^ (x >> 31)
}

fn uniform(state: &mut u64) -> f64 {
    *state = splitmix(*state, 0xa0761d6478bd642f);
    (*state >> 11) as f64 / (1u64 << 53) as f64
}

/// Runs the campaign. The returned report carries every property's worst
/// margin; `pass` is true iff no property saw a negative margin.
pub fn run(config: &CampaignConfig) -> Result<CampaignReport> {
    config.validate()?;
    let cells: Vec<(f64, u32)> = config
        .alpha_grid
        .iter()
        .flat_map(|&alpha| config.n_list.iter().map(move |&n| (alpha, n)))
        .collect();

    let per_sample: Vec<Result<Vec<Observation>>> = (0..config.samples)
        .into_par_iter()
        .map(|i| {
            let (alpha, n) = cells[i % cells.len()];
            let sample_seed = splitmix(config.seed, i as u64);
            run_one_sample(config, i, sample_seed, alpha, n)
        })
        .collect();

    let mut checked = [0u64; N_PROPERTIES];
    let mut violations = [0u64; N_PROPERTIES];
    let mut worst = [f64::INFINITY; N_PROPERTIES];
    let mut first_seed: [Option<u64>; N_PROPERTIES] = [None; N_PROPERTIES];

    for (i, obs) in per_sample.into_iter().enumerate() {
        let sample_seed = splitmix(config.seed, i as u64);
        for (prop, margin) in obs? {
            checked[prop] += 1;
            if margin < worst[prop] {
                worst[prop] = margin;
            }
            if margin < 0.0 {
                violations[prop] += 1;
                first_seed[prop].get_or_insert(sample_seed);
            }
        }
    }

    let properties: Vec<PropertyReport> = (0..N_PROPERTIES)
        .map(|p| PropertyReport {
            name: PROPERTY_NAMES[p].to_string(),
            checked: checked[p],
            violations: violations[p],
            worst_margin: if checked[p] == 0 {
                f64::INFINITY
            } else {
                worst[p]
            },
            first_violation_seed: first_seed[p],
        })
        .collect();
    let pass = properties.iter().all(|p| p.violations == 0);
    Ok(CampaignReport {
        config: config.clone(),
        properties,
        pass,
    })
}

fn run_one_sample(
    config: &CampaignConfig,
    index: usize,
    sample_seed: u64,
    alpha: f64,
    n: u32,
) -> Result<Vec<Observation>> {
    let mut out = Vec::with_capacity(64);
    let slack = config.slack;
    let cap = zeta_cap::<f64>(n);

    let mut zstate = splitmix(sample_seed, 0x5e7a);
    let zeta_abs = match config.zeta_mode {
        ZetaMode::Interior => cap * (1.0 - 1e-9) * uniform(&mut zstate).sqrt(),
        ZetaMode::Boundary => cap,
    };
    let zeta_angle = std::f64::consts::TAU * uniform(&mut zstate);
    let zeta = Complex::from_polar(zeta_abs, zeta_angle);

    let p = CaratheodoryFunction::<f64>::sample(sample_seed, 5)?;
    let order = config.coeff_max_index.max(n as usize + 4);
    let pc: Vec<Complex<f64>> = (0..=order.max(20)).map(|m| p.coefficient(m)).collect();

    // |p_m| <= 2
    let mut pn_margin = f64::INFINITY;
    for c in pc.iter().take(config.coeff_max_index + 1).skip(1) {
        pn_margin = pn_margin.min(2.0 + slack - c.norm());
    }
    out.push((0, pn_margin));

    // Efraimidis: |p_m - mu p_k p_{m-k}| <= 2 max{1, |2mu - 1|}
    let mut mustate = splitmix(sample_seed, 0xefa1);
    let mu = Complex::from_polar(
        2.0 * uniform(&mut mustate).sqrt(),
        std::f64::consts::TAU * uniform(&mut mustate),
    );
    let efr_bound = 2.0 * 1.0f64.max((mu * 2.0 - Complex::new(1.0, 0.0)).norm());
    let mut efr_margin = f64::INFINITY;
    for m in 2..=20usize {
        for k in 1..m {
            let lhs = (pc[m] - mu * pc[k] * pc[m - k]).norm();
            efr_margin = efr_margin.min(efr_bound + slack - lhs);
        }
    }
    out.push((1, efr_margin));

    let params = HarmonicMapParams::new(alpha, zeta, n)?;
    let f = HarmonicMapping::sample(params, sample_seed, order)?;

    // sharp coefficient bounds
    let mut a_margin = f64::INFINITY;
    for k in 2..=config.coeff_max_index.min(f.h().order()) {
        let bound = hbk_core::classes::coefficient_bound_a(k, alpha)?;
        a_margin = a_margin.min(bound + slack - f.h().coeff(k).norm());
    }
    out.push((2, a_margin));

    let mut b_margin = f64::INFINITY;
    for m in (n as usize + 1)..=config.coeff_max_index.min(f.g().order()) {
        let bound = hbk_core::classes::coefficient_bound_b(m, n, alpha, zeta_abs)?;
        b_margin = b_margin.min(bound + slack - f.g().coeff(m).norm());
    }
    out.push((3, b_margin));

    // the six determinant bounds, each on its domain of validity
    for (slot, kind) in [
        (4usize, BoundKind::T2nAnalytic),
        (5, BoundKind::T2nCoAnalytic),
        (6, BoundKind::T31Analytic),
        (7, BoundKind::T31CoAnalytic),
        (8, BoundKind::T32Analytic),
        (9, BoundKind::T32CoAnalytic),
    ] {
        if !kind.applies_at::<f64>(n) {
            continue;
        }
        let det = toeplitz_det_of(&f, &kind.spec(n))?.norm();
        let bound = kind.bound(alpha, zeta_abs, n)?;
        out.push((slot, bound + slack - det));
    }

    // subordination domination at r = 1/3
    let kernel = MaMindaKernel::<f64>::convex_order(alpha, order)?;
    let r3 = 1.0 / 3.0;
    let mh = f.h().derivative().majorant().eval(Complex::new(r3, 0.0)).re;
    let mk = kernel.k_prime_majorant_at(r3)?;
    out.push((10, mk + slack - mh));

    // growth sandwich on a subset (real nonnegative zeta, alpha in [0,1))
    if config.growth_every > 0 && index.is_multiple_of(config.growth_every) && alpha >= 0.0 {
        let params = HarmonicMapParams::new(alpha, Complex::new(zeta_abs, 0.0), n)?;
        let fg = HarmonicMapping::sample(params, sample_seed, 256)?;
        let mut margin = f64::INFINITY;
        for ir in 1..=9usize {
            let r = 0.1 * ir as f64;
            let phi = growth_phi(r, alpha, zeta_abs, n)?;
            let psi = growth_psi(r, alpha, zeta_abs, n)?;
            for it in 0..16usize {
                let theta = std::f64::consts::TAU * it as f64 / 16.0;
                let (value, tail) = fg.eval_enclosed(Complex::from_polar(r, theta), 0.95)?;
                let eps = tail + 1e-8;
                let m = value.norm();
                margin = margin.min(psi + eps - m).min(m - (phi - eps));
            }
        }
        out.push((11, margin));
    }

    // area sandwich on a subset
    if config.area_every > 0 && index.is_multiple_of(config.area_every) && alpha >= 0.0 {
        let params = HarmonicMapParams::new(alpha, Complex::new(zeta_abs, 0.0), n)?;
        let fa = HarmonicMapping::sample(params, sample_seed, 128)?;
        let mut margin = f64::INFINITY;
        for r in [0.25, 0.5, 0.75] {
            let s = area_exact(&fa, r)?;
            let (lower, upper) = area_bounds(r, zeta_abs, n, &kernel)?;
            margin = margin.min(upper + slack - s).min(s - (lower - slack));
        }
        out.push((12, margin));
    }

    Ok(out)
}
