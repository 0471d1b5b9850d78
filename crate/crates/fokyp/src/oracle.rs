//! Frequency-sweep oracle: dense sampling plus local refinement.
//!
//! Everything here produces *lower* bound evidence (a witness frequency
//! where the gain is at least some value) or a sampled falsification of
//! a frequency-domain inequality. It never certifies an upper bound;
//! that is the LMI side's job.

use alloc::vec::Vec;

use crate::curve::{curve_contains, rho, CurvePair};
use crate::mat::{lin_solve, sigma_max, CMat};
use crate::model::{principal_power, FosModel};
use crate::rng::SplitMix64;
use crate::Error;
use crate::FreqRange;

/// Log-spaced sampling grid, intersected with the analysis range.
#[derive(Debug, Clone, Copy)]
pub struct GridSpec {
    pub points: usize,
    pub omega_min: f64,
    pub omega_max: f64,
}

impl Default for GridSpec {
    fn default() -> Self {
        Self {
            points: 2000,
            omega_min: 1e-4,
            omega_max: 1e4,
        }
    }
}

impl GridSpec {
    fn validate(&self) -> Result<(), Error> {
        if self.points < 2 || !(self.omega_min > 0.0) || self.omega_min >= self.omega_max {
            return Err(Error::InvalidParameter("grid: need points >= 2, 0 < min < max"));
        }
        Ok(())
    }
}

#[derive(Debug, Clone)]
pub struct SweepResult {
    /// Sampled frequencies, ascending. Contains the refined peak point.
    pub omegas: Vec<f64>,
    /// Largest singular value of the transfer matrix at each frequency.
    pub sigmas: Vec<f64>,
    pub peak_omega: f64,
    pub peak_sigma: f64,
    /// Frequencies dropped because the pencil was singular there.
    pub skipped: Vec<f64>,
}

const REFINE_BUDGET: usize = 200;
const REFINE_REL_TOL: f64 = 1e-4;

fn gain_at(sys: &FosModel, omega: f64) -> Result<f64, Error> {
    Ok(sigma_max(&sys.eval_transfer(omega)?))
}

/// Sweep the gain over a range: log grid intersected with the range
/// (plus `omega = 0` when the range allows it), then a golden-section
/// polish around the grid argmax. Singular (resonant) frequencies are
/// skipped and reported.
pub fn sweep_linf(sys: &FosModel, range: &FreqRange, grid: &GridSpec) -> Result<SweepResult, Error> {
    grid.validate()?;
    let (range_lo, range_hi) = range.bounds();
    let lo = range_lo.max(grid.omega_min);
    let hi = range_hi.min(grid.omega_max);
    if lo > hi {
        return Err(Error::EmptyIntersection);
    }

    let mut omegas = Vec::with_capacity(grid.points + 2);
    if range_lo == 0.0 {
        omegas.push(0.0);
    }
    let (llo, lhi) = (libm::log(lo), libm::log(hi));
    for k in 0..grid.points {
        let t = k as f64 / (grid.points - 1) as f64;
        omegas.push(libm::exp(llo + t * (lhi - llo)));
    }

    let mut kept = Vec::with_capacity(omegas.len());
    let mut sigmas = Vec::with_capacity(omegas.len());
    let mut skipped = Vec::new();
    for &w in &omegas {
        match gain_at(sys, w) {
            Ok(s) => {
                kept.push(w);
                sigmas.push(s);
            }
            Err(Error::Resonance(_)) => skipped.push(w),
            Err(e) => return Err(e),
        }
    }
    if kept.is_empty() {
        return Err(Error::NumericalFailure);
    }

    let mut best = 0usize;
    for (i, s) in sigmas.iter().enumerate() {
        if *s > sigmas[best] {
            best = i;
        }
    }

    // Golden-section maximization on the bracket formed by the grid
    // neighbours of the argmax.
    let bl = if best == 0 { kept[0] } else { kept[best - 1] };
    let bu = if best + 1 == kept.len() {
        kept[best]
    } else {
        kept[best + 1]
    };
    let (peak_w, peak_s) = refine_peak(sys, bl, bu, kept[best], sigmas[best]);

    if peak_s > sigmas[best] {
        // Insert the refined point so the emitted table contains the peak.
        let pos = kept.partition_point(|&w| w < peak_w);
        kept.insert(pos, peak_w);
        sigmas.insert(pos, peak_s);
    }

    Ok(SweepResult {
        omegas: kept,
        sigmas,
        peak_omega: peak_w,
        peak_sigma: peak_s,
        skipped,
    })
}

fn refine_peak(sys: &FosModel, mut a: f64, mut b: f64, seed_w: f64, seed_s: f64) -> (f64, f64) {
    const INV_PHI: f64 = 0.618_033_988_749_894_9;
    let mut best_w = seed_w;
    let mut best_s = seed_s;
    if b <= a {
        return (best_w, best_s);
    }
    let mut c = b - INV_PHI * (b - a);
    let mut d = a + INV_PHI * (b - a);
    let eval = |w: f64| gain_at(sys, w).unwrap_or(f64::NEG_INFINITY);
    let mut fc = eval(c);
    let mut fd = eval(d);
    let mut evals = 2usize;
    let mut prev_best = best_w;
    while evals < REFINE_BUDGET {
        if fc >= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - INV_PHI * (b - a);
            fc = eval(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + INV_PHI * (b - a);
            fd = eval(d);
        }
        evals += 1;
        let (w, s) = if fc >= fd { (c, fc) } else { (d, fd) };
        if s > best_s {
            best_s = s;
            best_w = w;
        }
        if (best_w - prev_best).abs() <= REFINE_REL_TOL * best_w.max(1e-30) {
            break;
        }
        prev_best = best_w;
    }
    (best_w, best_s)
}

/// Sampled falsification check of the frequency-domain inequality
/// `[H(theta); I]* Pi [H(theta); I] < 0` along the curve of `pair`:
/// returns the worst (largest) eigenvalue seen over `samples` seeded
/// log-uniform frequencies, plus grid endpoints. A non-negative return
/// value is a counterexample to the inequality.
pub fn check_fdi_sampled(
    sys: &FosModel,
    pi: &CMat,
    pair: &CurvePair,
    samples: usize,
    seed: u64,
) -> Result<f64, Error> {
    if samples == 0 {
        return Err(Error::InvalidParameter("need at least one sample"));
    }
    let (range_lo, range_hi) = pair.range.bounds();
    let lo = range_lo.max(1e-4);
    let hi = range_hi.min(1e4);
    if lo > hi {
        return Err(Error::EmptyIntersection);
    }
    let (llo, lhi) = (libm::log(lo), libm::log(hi));
    let mut rng = SplitMix64::new(seed);
    let mut freqs = Vec::with_capacity(samples + 3);
    freqs.push(lo);
    freqs.push(hi);
    if range_lo == 0.0 {
        freqs.push(0.0);
    }
    for _ in 0..samples {
        freqs.push(libm::exp(rng.uniform(llo, lhi)));
    }

    let (n, _, _) = sys.dims();
    let mut worst = f64::NEG_INFINITY;
    let mut evaluated = 0usize;
    for &w in &freqs {
        let theta = principal_power(w, sys.nu())?;
        debug_assert!(curve_contains(pair, theta, 1e-8));
        let mut pencil = CMat::identity(n).scale(theta);
        pencil = &pencil - sys.a();
        let h = match lin_solve(&pencil, sys.b()) {
            Ok(h) => h,
            Err(Error::Singular) => continue,
            Err(e) => return Err(e),
        };
        let q = rho(&h, pi)?;
        let (vals, _) = crate::mat::herm_eig(&q)?;
        let lam = *vals.last().unwrap();
        if lam > worst {
            worst = lam;
        }
        evaluated += 1;
    }
    if evaluated == 0 {
        return Err(Error::NumericalFailure);
    }
    Ok(worst)
}
