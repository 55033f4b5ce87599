//! Distribution machinery for the grey wolf update.
//!
//! One leader's contribution to the update of a position component is the
//! random variable `p + A |C p - x|` with `A ~ U[-a, a]` and `C ~ U[0, 2]`
//! drawn independently. This module provides its exact density and moments
//! ([`LeaderUpdateDist`]), the numeric convolution giving the density of the
//! averaged three-leader move ([`h_pdf_numeric`]), the matching normal
//! moments ([`update_moments`]), and Monte Carlo tooling (samplers,
//! histograms, distribution distances) to compare all of them.

mod convolve;
mod montecarlo;
mod pdf;

pub use convolve::{h_pdf_numeric, GridDensity};
pub use montecarlo::{
    build_histogram, compare_to_normal, ks_samples_vs_grid, ks_samples_vs_normal, normal_pdf,
    sample_gwo_update, sample_leader_update, DistComparison, Histogram,
};

use crate::error::{Error, Result};

/// Monte Carlo sample size used by the verification commands.
pub const DEFAULT_SAMPLE_COUNT: usize = 100_000;
/// Histogram group count used by the verification commands.
pub const DEFAULT_HISTOGRAM_BINS: usize = 80;
/// Grid resolution of the numeric convolution.
pub const DEFAULT_GRID_POINTS: usize = 4096;

/// Half-width parameters of one leader contribution:
/// `m = a (-|p| + |x - p|)` and `n = a (|p| + |x - p|)`.
///
/// The support of the contribution is `[p - n, p + n]`; the sign of `m`
/// decides which branch of the density applies.
pub fn mn_params(a: f64, x: f64, p: f64) -> (f64, f64) {
    let m = a * (-p.abs() + (x - p).abs());
    let n = a * (p.abs() + (x - p).abs());
    (m, n)
}

/// Mean and standard deviation of the averaged three-leader move:
/// `mu = (p1 + p2 + p3) / 3` and
/// `sigma = a * sqrt(sum_k [(x - p_k)^2 + p_k^2 / 3] / 27)`.
pub fn update_moments(a: f64, x: f64, p1: f64, p2: f64, p3: f64) -> (f64, f64) {
    let mu = (p1 + p2 + p3) / 3.0;
    let s: f64 = [p1, p2, p3]
        .iter()
        .map(|&p| (x - p) * (x - p) + p * p / 3.0)
        .sum();
    (mu, a * (s / 27.0).sqrt())
}

/// Exact distribution of one leader contribution `p + A |C p - x|`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LeaderUpdateDist {
    a: f64,
    x: f64,
    p: f64,
    m: f64,
    n: f64,
}

impl LeaderUpdateDist {
    pub fn new(a: f64, x: f64, p: f64) -> Result<Self> {
        if a < 0.0 || !a.is_finite() || !x.is_finite() || !p.is_finite() {
            return Err(Error::InvalidParameter(format!(
                "leader update distribution needs finite x, p and a >= 0, got a={a}, x={x}, p={p}"
            )));
        }
        let (m, n) = mn_params(a, x, p);
        Ok(Self { a, x, p, m, n })
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn x(&self) -> f64 {
        self.x
    }

    pub fn p(&self) -> f64 {
        self.p
    }

    pub fn m(&self) -> f64 {
        self.m
    }

    pub fn n(&self) -> f64 {
        self.n
    }

    /// `[p - n, p + n]`.
    pub fn support(&self) -> (f64, f64) {
        (self.p - self.n, self.p + self.n)
    }

    /// A zero-width support means the contribution is the point mass at `p`
    /// (either `a == 0`, or `x == p == 0`).
    pub fn is_degenerate(&self) -> bool {
        self.n == 0.0
    }

    pub fn mean(&self) -> f64 {
        self.p
    }

    /// `a^2 / 3 * ((x - p)^2 + p^2 / 3)`.
    pub fn variance(&self) -> f64 {
        self.a * self.a / 3.0 * ((self.x - self.p) * (self.x - self.p) + self.p * self.p / 3.0)
    }

    /// Density at `u`. The density is symmetric about `p`, logarithmic over
    /// its support, and returns positive infinity at the single point
    /// `u == p` when `m <= 0` (an integrable singularity).
    pub fn pdf(&self, u: f64) -> Result<f64> {
        pdf::pdf(self, u)
    }

    /// Cumulative distribution at `u`, computed by singularity-aware numeric
    /// integration of the density. Exactly 0.5 at `u == p`.
    pub fn cdf(&self, u: f64) -> Result<f64> {
        pdf::cdf(self, u)
    }

    /// Probability mass on `[lo, hi]`.
    pub fn mass_between(&self, lo: f64, hi: f64) -> Result<f64> {
        pdf::mass_between(self, lo, hi)
    }

    /// `integral of f(u) * pdf(u) du` over the support.
    pub fn weighted_integral<F: Fn(f64) -> f64>(&self, f: F) -> Result<f64> {
        pdf::weighted_integral(self, &f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mn_params_examples() {
        assert_eq!(mn_params(2.0, 1.0, 1.0), (-2.0, 2.0));
        assert_eq!(mn_params(2.0, 1.0, 0.5), (0.0, 2.0));
        assert_eq!(mn_params(2.0, 4.0, 1.0), (4.0, 8.0));
    }

    #[test]
    fn mn_invariants_hold() {
        for &(a, x, p) in &[
            (2.0, 1.0, 1.0),
            (2.0, 4.0, 1.0),
            (0.5, -3.0, 2.0),
            (1.5, 0.0, -1.0),
        ] {
            let (m, n) = mn_params(a, x, p);
            assert!(n >= m.abs());
            assert!(n >= 0.0);
            assert!((n - m - 2.0 * a * p.abs()).abs() < 1e-12);
        }
    }

    #[test]
    fn update_moments_examples() {
        let (mu, sigma) = update_moments(2.0, 3.0, 0.0, 0.0, 0.0);
        assert_eq!(mu, 0.0);
        assert_eq!(sigma, 2.0);

        let (mu, _) = update_moments(1.3, -7.0, 1.0, 2.0, 3.0);
        assert_eq!(mu, 2.0);

        let (_, sigma) = update_moments(0.0, 5.0, 1.0, 2.0, 3.0);
        assert_eq!(sigma, 0.0);
    }

    #[test]
    fn variance_matches_averaged_sum_of_leader_variances() {
        let (a, x) = (1.7, 2.3);
        let ps = [0.4, -1.1, 3.0];
        let per_leader: f64 = ps
            .iter()
            .map(|&p| LeaderUpdateDist::new(a, x, p).unwrap().variance())
            .sum();
        let (_, sigma) = update_moments(a, x, ps[0], ps[1], ps[2]);
        assert!((sigma * sigma - per_leader / 9.0).abs() < 1e-12);
    }

    #[test]
    fn leader_moments_example() {
        let d = LeaderUpdateDist::new(2.0, 1.0, 0.5).unwrap();
        assert_eq!(d.mean(), 0.5);
        assert!((d.variance() - 4.0 / 9.0).abs() < 1e-12);
        let zero = LeaderUpdateDist::new(0.0, 1.0, 0.5).unwrap();
        assert_eq!(zero.variance(), 0.0);
    }

    #[test]
    fn degenerate_detection() {
        assert!(LeaderUpdateDist::new(0.0, 1.0, 1.0).unwrap().is_degenerate());
        assert!(LeaderUpdateDist::new(2.0, 0.0, 0.0).unwrap().is_degenerate());
        assert!(!LeaderUpdateDist::new(2.0, 1.0, 0.0).unwrap().is_degenerate());
        assert!(LeaderUpdateDist::new(-1.0, 0.0, 0.0).is_err());
    }
}
