//! Continuous-time quantum walks `U(t) = exp(−itH)` on path products.
//!
//! The propagator of a product is the tensor product of the factor
//! propagators, so a corner-to-corner amplitude is a product of 1-D entries,
//! each a short sum over the closed-form eigenpairs of a path.

use std::io::{self, Write};

use num_complex::Complex;
use rayon::prelude::*;
use serde::Serialize;

use crate::cospectral::CornerPair;
use crate::error::{domain, Result};
use crate::scalar::Real;
use crate::spectra::{
    path_eigenvalue_real, path_eigenvector_component, Hamiltonian, PathFactor, ProductGraph,
};

/// Grid density used when the caller does not pick a sample count.
pub const DEFAULT_SAMPLES_PER_UNIT: f64 = 1000.0;
/// Number of grid peaks refined by [`scan_fidelity`].
pub const REFINED_PEAKS: usize = 10;
/// Golden-section stopping width.
pub const REFINE_TOLERANCE: f64 = 1e-9;
/// Values this close to the maximum count as attaining it.
pub const TIE_TOLERANCE: f64 = 1e-12;

/// Entry `(b, a)` of `exp(−itH)` for a single path; vertices are 1-indexed.
pub fn path_propagator_entry<T: Real>(
    f: &PathFactor,
    a: usize,
    b: usize,
    t: T,
    h: Hamiltonian,
) -> Complex<T> {
    f.index_range(h)
        .map(|r| {
            let theta = path_eigenvalue_real::<T>(f, r, h);
            let w = path_eigenvector_component::<T>(f, r, a, h)
                * path_eigenvector_component::<T>(f, r, b, h);
            Complex::from_polar(w, -theta * t)
        })
        .fold(Complex::new(T::zero(), T::zero()), |acc, z| acc + z)
}

/// Full `n × n` propagator of a single path, row-major.
pub fn path_propagator<T: Real>(f: &PathFactor, t: T, h: Hamiltonian) -> Vec<Vec<Complex<T>>> {
    (1..=f.n())
        .map(|b| (1..=f.n()).map(|a| path_propagator_entry(f, a, b, t, h)).collect())
        .collect()
}

/// Spectral weights `(θ_r, v_r(a) v_r(b))` of one factor for fixed ends.
#[derive(Debug, Clone)]
struct FactorWeights<T> {
    terms: Vec<(T, T)>,
}

impl<T: Real> FactorWeights<T> {
    fn amplitude(&self, t: T) -> T {
        let (mut re, mut im) = (T::zero(), T::zero());
        for &(theta, w) in &self.terms {
            let (s, c) = (theta * t).sin_cos();
            re = re + w * c;
            im = im - w * s;
        }
        re.hypot(im)
    }
}

/// Precomputed corner-to-corner fidelity `|U(t)_{b,a}|`.
#[derive(Debug, Clone)]
pub struct CornerWalk<T> {
    factors: Vec<FactorWeights<T>>,
}

impl<T: Real> CornerWalk<T> {
    pub fn new(g: &ProductGraph, pair: &CornerPair) -> Result<Self> {
        pair.check(g)?;
        let (a, b) = pair.coords(g);
        let h = g.hamiltonian();
        let factors = g
            .factors()
            .iter()
            .zip(a.iter().zip(&b))
            .map(|(f, (&va, &vb))| FactorWeights {
                terms: f
                    .index_range(h)
                    .map(|r| {
                        (
                            path_eigenvalue_real::<T>(f, r, h),
                            path_eigenvector_component::<T>(f, r, va, h)
                                * path_eigenvector_component::<T>(f, r, vb, h),
                        )
                    })
                    .collect(),
            })
            .collect();
        Ok(Self { factors })
    }

    pub fn fidelity(&self, t: T) -> T {
        self.factors
            .iter()
            .fold(T::one(), |acc, f| acc * f.amplitude(t))
    }
}

/// `|U(t)_{b,a}|` for two corners of `g`.
pub fn corner_fidelity<T: Real>(g: &ProductGraph, pair: &CornerPair, t: T) -> Result<T> {
    Ok(CornerWalk::new(g, pair)?.fidelity(t))
}

/// A sampled fidelity curve and its refined maximum.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FidelityTrace<T> {
    pub times: Vec<T>,
    pub values: Vec<T>,
    /// Refined local maxima `(t, value)`, ordered by time.
    pub peaks: Vec<(T, T)>,
    pub best_t: T,
    pub best_value: T,
}

impl<T: Real> FidelityTrace<T> {
    pub fn summary(&self) -> ScanSummary {
        ScanSummary {
            samples: self.times.len(),
            t_max: self.times.last().map_or(0.0, |t| t.to_f64().unwrap_or(f64::NAN)),
            best_t: self.best_t.to_f64().unwrap_or(f64::NAN),
            best_value: self.best_value.to_f64().unwrap_or(f64::NAN),
            peaks: self
                .peaks
                .iter()
                .map(|(t, v)| (t.to_f64().unwrap_or(f64::NAN), v.to_f64().unwrap_or(f64::NAN)))
                .collect(),
        }
    }

    /// CSV with header `t,fidelity` and 17 significant digits per value.
    pub fn write_csv<W: Write>(&self, mut w: W) -> io::Result<()> {
        writeln!(w, "t,fidelity")?;
        for (t, v) in self.times.iter().zip(&self.values) {
            writeln!(
                w,
                "{:.16e},{:.16e}",
                t.to_f64().unwrap_or(f64::NAN),
                v.to_f64().unwrap_or(f64::NAN)
            )?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ScanSummary {
    pub samples: usize,
    pub t_max: f64,
    pub best_t: f64,
    pub best_value: f64,
    pub peaks: Vec<(f64, f64)>,
}

/// Sample count matching the default grid density for `t_max`.
pub fn default_samples(t_max: f64) -> usize {
    ((t_max * DEFAULT_SAMPLES_PER_UNIT).ceil() as usize + 1).max(2)
}

fn grid<T: Real>(walk: &CornerWalk<T>, t_max: T, samples: usize) -> (Vec<T>, Vec<T>) {
    let step = t_max / T::of((samples - 1) as f64);
    let times: Vec<T> = (0..samples).map(|i| T::of(i as f64) * step).collect();
    let values: Vec<T> = times.par_iter().map(|&t| walk.fidelity(t)).collect();
    (times, values)
}

/// Grid positions that are at least as large as their neighbours.
fn local_peaks<T: Real>(values: &[T]) -> Vec<usize> {
    let n = values.len();
    (0..n)
        .filter(|&i| {
            (i == 0 || values[i] >= values[i - 1]) && (i + 1 == n || values[i] >= values[i + 1])
        })
        .collect()
}

/// Golden-section maximisation on `[lo, hi]`.
fn golden_max<T: Real>(walk: &CornerWalk<T>, mut lo: T, mut hi: T) -> (T, T) {
    let inv_phi = T::of((5f64.sqrt() - 1.0) / 2.0);
    let tol = T::of(REFINE_TOLERANCE);
    let mut x1 = hi - inv_phi * (hi - lo);
    let mut x2 = lo + inv_phi * (hi - lo);
    let mut f1 = walk.fidelity(x1);
    let mut f2 = walk.fidelity(x2);
    let mut iterations = 0;
    while hi - lo > tol && iterations < 200 {
        if f1 < f2 {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + inv_phi * (hi - lo);
            f2 = walk.fidelity(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - inv_phi * (hi - lo);
            f1 = walk.fidelity(x1);
        }
        iterations += 1;
    }
    let mid = (lo + hi) / T::of(2.0);
    (mid, walk.fidelity(mid))
}

fn refine_at<T: Real>(walk: &CornerWalk<T>, times: &[T], values: &[T], i: usize) -> (T, T) {
    let lo = times[i.saturating_sub(1)];
    let hi = times[(i + 1).min(times.len() - 1)];
    let (t, v) = golden_max(walk, lo, hi);
    if v >= values[i] {
        (t, v)
    } else {
        (times[i], values[i])
    }
}

/// Samples `|U(t)_{b,a}|` on a uniform grid over `[0, t_max]` and refines the
/// ten highest grid peaks.
pub fn scan_fidelity<T: Real>(
    g: &ProductGraph,
    pair: &CornerPair,
    t_max: T,
    samples: usize,
) -> Result<FidelityTrace<T>> {
    if samples < 2 {
        return domain(format!("a scan needs at least 2 samples, got {samples}"));
    }
    if !(t_max > T::zero()) || !t_max.is_finite() {
        return domain(format!("t_max must be positive and finite, got {t_max}"));
    }
    let walk = CornerWalk::new(g, pair)?;
    let (times, values) = grid(&walk, t_max, samples);

    let mut candidates = local_peaks(&values);
    candidates.sort_by(|&x, &y| values[y].partial_cmp(&values[x]).unwrap().then(x.cmp(&y)));
    candidates.truncate(REFINED_PEAKS);
    candidates.sort_unstable();
    let peaks: Vec<(T, T)> = candidates
        .par_iter()
        .map(|&i| refine_at(&walk, &times, &values, i))
        .collect();

    let best_value = peaks
        .iter()
        .map(|p| p.1)
        .chain(values.iter().copied())
        .fold(T::neg_infinity(), T::max);
    let tie = T::of(TIE_TOLERANCE);
    let best_t = peaks
        .iter()
        .copied()
        .chain(times.iter().copied().zip(values.iter().copied()))
        .filter(|&(_, v)| v >= best_value - tie)
        .map(|(t, _)| t)
        .fold(T::infinity(), T::min);

    Ok(FidelityTrace {
        times,
        values,
        peaks,
        best_t,
        best_value,
    })
}

/// Refined time of the earliest peak in `[0, t_max]` whose fidelity reaches
/// `target`. `None` only means no such time was found on the default grid;
/// it says nothing about whether transfer happens later.
pub fn find_time_reaching<T: Real>(
    g: &ProductGraph,
    pair: &CornerPair,
    target: T,
    t_max: T,
) -> Result<Option<T>> {
    if !(target > T::zero() && target < T::one()) {
        return domain(format!("target fidelity must lie in (0, 1), got {target}"));
    }
    if !(t_max > T::zero()) || !t_max.is_finite() {
        return domain(format!("t_max must be positive and finite, got {t_max}"));
    }
    let walk = CornerWalk::new(g, pair)?;
    let samples = default_samples(t_max.to_f64().unwrap_or(0.0));
    let (times, values) = grid(&walk, t_max, samples);
    let slack = T::of(1e-2);
    for i in local_peaks(&values) {
        if values[i] < target - slack {
            continue;
        }
        let (t, v) = refine_at(&walk, &times, &values, i);
        if v >= target {
            return Ok(Some(t));
        }
    }
    Ok(None)
}
