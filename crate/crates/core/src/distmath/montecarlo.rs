//! Monte Carlo sampling of the update, histograms, and distribution
//! distances against the analytic and normal references.

use serde::Serialize;
use statrs::distribution::{Continuous, ContinuousCDF, Normal};

use super::convolve::GridDensity;
use crate::error::{Error, Result};
use crate::rng::RngStream;

/// `count` draws of one leader contribution `p + A |C p - x|`.
pub fn sample_leader_update(
    a: f64,
    x: f64,
    p: f64,
    rng: &mut RngStream,
    count: usize,
) -> Result<Vec<f64>> {
    if a < 0.0 || !a.is_finite() {
        return Err(Error::InvalidParameter(format!(
            "step radius must be a nonnegative finite number, got {a}"
        )));
    }
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        let amp = rng.uniform(-a, a)?;
        let swing = rng.uniform(0.0, 2.0)?;
        out.push(p + amp * (swing * p - x).abs());
    }
    Ok(out)
}

/// `count` draws of the averaged three-leader move
/// `(1/3) sum_k [p_k + A_k |C_k p_k - x|]`.
pub fn sample_gwo_update(
    a: f64,
    x: f64,
    p1: f64,
    p2: f64,
    p3: f64,
    rng: &mut RngStream,
    count: usize,
) -> Result<Vec<f64>> {
    if a < 0.0 || !a.is_finite() {
        return Err(Error::InvalidParameter(format!(
            "step radius must be a nonnegative finite number, got {a}"
        )));
    }
    let mut out = Vec::with_capacity(count);
    for _ in 0..count {
        let mut sum = 0.0;
        for &p in &[p1, p2, p3] {
            let amp = rng.uniform(-a, a)?;
            let swing = rng.uniform(0.0, 2.0)?;
            sum += p + amp * (swing * p - x).abs();
        }
        out.push(sum / 3.0);
    }
    Ok(out)
}

/// Equal-width frequency histogram spanning the sample range.
#[derive(Debug, Clone, PartialEq)]
pub struct Histogram {
    bin_edges: Vec<f64>,
    counts: Vec<u64>,
    total: u64,
}

/// Bin `samples` into `bins` equal-width bins over `[min, max]`. A constant
/// sample set is spread over a unit-width window so the edges stay strictly
/// increasing.
pub fn build_histogram(samples: &[f64], bins: usize) -> Result<Histogram> {
    if samples.is_empty() {
        return Err(Error::EmptySamples);
    }
    if bins == 0 {
        return Err(Error::InvalidParameter(
            "histogram needs at least one bin".into(),
        ));
    }
    let mut min = f64::INFINITY;
    let mut max = f64::NEG_INFINITY;
    for (index, &s) in samples.iter().enumerate() {
        if !s.is_finite() {
            return Err(Error::NonFiniteInput { index, value: s });
        }
        min = min.min(s);
        max = max.max(s);
    }
    let (lo, hi) = if min == max {
        (min - 0.5, max + 0.5)
    } else {
        (min, max)
    };
    let width = (hi - lo) / bins as f64;
    let mut counts = vec![0u64; bins];
    for &s in samples {
        let idx = (((s - lo) / width) as usize).min(bins - 1);
        counts[idx] += 1;
    }
    let mut bin_edges: Vec<f64> = (0..=bins).map(|i| lo + i as f64 * width).collect();
    bin_edges[bins] = hi;
    Ok(Histogram {
        bin_edges,
        counts,
        total: samples.len() as u64,
    })
}

impl Histogram {
    pub fn bin_edges(&self) -> &[f64] {
        &self.bin_edges
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    pub fn total(&self) -> u64 {
        self.total
    }

    pub fn bins(&self) -> usize {
        self.counts.len()
    }

    pub fn centers(&self) -> Vec<f64> {
        self.bin_edges
            .windows(2)
            .map(|w| 0.5 * (w[0] + w[1]))
            .collect()
    }

    /// Count in each bin as a fraction of the total.
    pub fn frequencies(&self) -> Vec<f64> {
        self.counts
            .iter()
            .map(|&c| c as f64 / self.total as f64)
            .collect()
    }

    /// Frequency divided by bin width: comparable to a density.
    pub fn densities(&self) -> Vec<f64> {
        self.bin_edges
            .windows(2)
            .zip(&self.counts)
            .map(|(w, &c)| c as f64 / self.total as f64 / (w[1] - w[0]))
            .collect()
    }
}

/// Distances between an empirical distribution and a reference.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct DistComparison {
    pub ks_distance: f64,
    pub total_variation: f64,
    pub sample_size: u64,
}

/// Compare a histogram against the normal distribution `N(mu, sigma^2)`.
///
/// The Kolmogorov-Smirnov distance is the largest gap between the empirical
/// and normal cumulative distributions over the bin edges (where the
/// empirical CDF is exact). The total variation adds the normal mass lying
/// outside the histogram's span, so disjoint supports score 1.
pub fn compare_to_normal(hist: &Histogram, mu: f64, sigma: f64) -> Result<DistComparison> {
    if sigma <= 0.0 || !sigma.is_finite() {
        return Err(Error::InvalidSigma(sigma));
    }
    let normal = Normal::new(mu, sigma).expect("sigma checked above");
    let total = hist.total() as f64;

    let mut ks: f64 = normal.cdf(hist.bin_edges()[0]);
    let mut cum = 0u64;
    let mut tv = 0.0;
    let mut normal_mass = 0.0;
    for (i, w) in hist.bin_edges().windows(2).enumerate() {
        cum += hist.counts()[i];
        ks = ks.max((cum as f64 / total - normal.cdf(w[1])).abs());
        let p = normal.cdf(w[1]) - normal.cdf(w[0]);
        normal_mass += p;
        tv += (hist.counts()[i] as f64 / total - p).abs();
    }
    tv = 0.5 * (tv + (1.0 - normal_mass).max(0.0));
    Ok(DistComparison {
        ks_distance: ks,
        total_variation: tv,
        sample_size: hist.total(),
    })
}

fn ks_statistic<F: Fn(f64) -> f64>(samples: &[f64], cdf: F) -> Result<f64> {
    if samples.is_empty() {
        return Err(Error::EmptySamples);
    }
    let mut sorted = samples.to_vec();
    sorted.sort_by(f64::total_cmp);
    let n = sorted.len() as f64;
    let mut sup: f64 = 0.0;
    for (i, &s) in sorted.iter().enumerate() {
        let c = cdf(s);
        sup = sup.max((c - i as f64 / n).abs());
        sup = sup.max(((i + 1) as f64 / n - c).abs());
    }
    Ok(sup)
}

/// Kolmogorov-Smirnov distance between samples and a grid density.
pub fn ks_samples_vs_grid(samples: &[f64], density: &GridDensity) -> Result<f64> {
    ks_statistic(samples, |s| density.cdf_at(s))
}

/// Kolmogorov-Smirnov distance between samples and `N(mu, sigma^2)`.
pub fn ks_samples_vs_normal(samples: &[f64], mu: f64, sigma: f64) -> Result<f64> {
    if sigma <= 0.0 || !sigma.is_finite() {
        return Err(Error::InvalidSigma(sigma));
    }
    let normal = Normal::new(mu, sigma).expect("sigma checked above");
    ks_statistic(samples, |s| normal.cdf(s))
}

/// Density of `N(mu, sigma^2)` at `u`.
pub fn normal_pdf(u: f64, mu: f64, sigma: f64) -> Result<f64> {
    if sigma <= 0.0 || !sigma.is_finite() {
        return Err(Error::InvalidSigma(sigma));
    }
    let normal = Normal::new(mu, sigma).expect("sigma checked above");
    Ok(normal.pdf(u))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn degenerate_radius_collapses_samples() {
        let mut rng = RngStream::new(3);
        let draws = sample_gwo_update(0.0, 5.0, 1.0, 2.0, 3.0, &mut rng, 100).unwrap();
        assert!(draws.iter().all(|&d| d == 2.0));
    }

    #[test]
    fn sample_mean_matches_leader_average() {
        let mut rng = RngStream::new(9);
        let (a, x, p1, p2, p3) = (2.0, 1.2, 0.4, -0.3, 1.9);
        let draws = sample_gwo_update(a, x, p1, p2, p3, &mut rng, 100_000).unwrap();
        let n = draws.len() as f64;
        let mean = draws.iter().sum::<f64>() / n;
        let var = draws.iter().map(|d| (d - mean) * (d - mean)).sum::<f64>() / n;
        let target = (p1 + p2 + p3) / 3.0;
        assert!((mean - target).abs() < 3.0 * (var / n).sqrt(), "mean {mean}");
    }

    #[test]
    fn sampling_is_deterministic_per_seed() {
        let mut a = RngStream::new(123);
        let mut b = RngStream::new(123);
        let da = sample_gwo_update(2.0, 1.0, 0.5, 1.5, 2.5, &mut a, 64).unwrap();
        let db = sample_gwo_update(2.0, 1.0, 0.5, 1.5, 2.5, &mut b, 64).unwrap();
        assert_eq!(da, db);
    }

    #[test]
    fn constant_samples_occupy_one_bin() {
        let h = build_histogram(&[4.0; 10], 7).unwrap();
        assert_eq!(h.total(), 10);
        assert_eq!(h.counts().iter().filter(|&&c| c > 0).count(), 1);
        assert_eq!(h.counts().iter().sum::<u64>(), 10);
    }

    #[test]
    fn counts_sum_to_sample_size() {
        let mut rng = RngStream::new(21);
        let samples: Vec<f64> = (0..100_000).map(|_| rng.unit()).collect();
        let h = build_histogram(&samples, 80).unwrap();
        assert_eq!(h.bins(), 80);
        assert_eq!(h.counts().iter().sum::<u64>(), 100_000);
    }

    #[test]
    fn two_point_samples_split_into_two_bins() {
        let h = build_histogram(&[0.0, 1.0], 2).unwrap();
        assert_eq!(h.counts(), &[1, 1]);
    }

    #[test]
    fn histogram_rejects_bad_input() {
        assert!(matches!(build_histogram(&[], 4), Err(Error::EmptySamples)));
        assert!(build_histogram(&[1.0], 0).is_err());
        assert!(build_histogram(&[1.0, f64::NAN], 4).is_err());
    }

    #[test]
    fn normal_self_consistency_has_small_ks() {
        let mut rng = RngStream::new(33);
        let (mu, sigma) = (1.0, 2.0);
        let samples: Vec<f64> = (0..100_000)
            .map(|_| rng.normal(mu, sigma).unwrap())
            .collect();
        let h = build_histogram(&samples, 80).unwrap();
        let cmp = compare_to_normal(&h, mu, sigma).unwrap();
        assert!(cmp.ks_distance < 0.01, "ks {}", cmp.ks_distance);
        let full = ks_samples_vs_normal(&samples, mu, sigma).unwrap();
        assert!(full < 0.01, "full-sample ks {full}");
    }

    #[test]
    fn exact_two_bin_match_has_zero_total_variation() {
        // two wide bins split at the mean: each holds exactly half of the
        // normal mass, and the tails beyond 100 sigma underflow to zero
        let samples = [-1.0, 1.0];
        let mut h = build_histogram(&samples, 2).unwrap();
        h.bin_edges = vec![-200.0, 0.0, 200.0];
        let cmp = compare_to_normal(&h, 0.0, 2.0).unwrap();
        assert_eq!(cmp.total_variation, 0.0);
    }

    #[test]
    fn disjoint_supports_have_total_variation_one() {
        let samples = [1000.0, 1000.5, 1001.0];
        let h = build_histogram(&samples, 3).unwrap();
        let cmp = compare_to_normal(&h, 0.0, 1.0).unwrap();
        assert!((cmp.total_variation - 1.0).abs() < 1e-12);
        assert!(cmp.ks_distance > 0.999);
    }

    #[test]
    fn comparison_rejects_degenerate_sigma() {
        let h = build_histogram(&[0.0, 1.0], 2).unwrap();
        assert!(matches!(
            compare_to_normal(&h, 0.0, 0.0),
            Err(Error::InvalidSigma(_))
        ));
    }
}
