//! Density, quadrature and cumulative distribution of one leader
//! contribution.
//!
//! With `w = |u - p|` the density is, for `m <= 0`:
//!
//! ```text
//! g(u) = ln(sqrt(-m n) / w) / (n - m)        for w < -m
//! g(u) = ln(n / w) / (2 (n - m))             for -m <= w < n
//! g(u) = 0                                   for w >= n
//! ```
//!
//! and for `m > 0`:
//!
//! ```text
//! g(u) = ln(n / m) / (2 (n - m))             for w < m   (flat top)
//! g(u) = ln(n / w) / (2 (n - m))             for m <= w < n
//! g(u) = 0                                   for w >= n
//! ```
//!
//! When `m <= 0` the density has an integrable logarithmic singularity at
//! `u = p`. All quadratures below split the domain at `p` and integrate the
//! cell around the singularity with the closed form
//! `integral of ln(c / w) dw = w (ln(c / w) + 1)`.
//!
//! `p == 0` is the boundary case `m == n` where the scale draw `C` has no
//! effect and the contribution is uniform on `[-n, n]`.

use super::LeaderUpdateDist;
use crate::error::{Error, Result};

/// Fraction of a singular piece integrated in closed form. Small enough
/// that treating a smooth weight as constant over the cell costs less than
/// the quadrature tolerance.
const SINGULAR_CELL: f64 = 1.0 / (1 << 20) as f64;
/// Absolute quadrature tolerance per smooth piece.
const PIECE_TOL: f64 = 1e-12;

pub(super) fn pdf(d: &LeaderUpdateDist, u: f64) -> Result<f64> {
    if d.is_degenerate() {
        return Err(Error::DegenerateDistribution);
    }
    Ok(pdf_value(d, u))
}

fn pdf_value(d: &LeaderUpdateDist, u: f64) -> f64 {
    let (m, n) = (d.m(), d.n());
    let w = (u - d.p()).abs();
    if w >= n {
        return 0.0;
    }
    if m == n {
        // p == 0: uniform on the support
        return 0.5 / n;
    }
    if m <= 0.0 {
        if w < -m {
            ((-m * n).sqrt() / w).ln() / (n - m)
        } else {
            (n / w).ln() / (2.0 * (n - m))
        }
    } else if w < m {
        (n / m).ln() / (2.0 * (n - m))
    } else {
        (n / w).ln() / (2.0 * (n - m))
    }
}

/// Closed-form mass of `[p, p + eps]` (or its mirror) for `m <= 0`, where
/// the integrand is `coef * ln(c / w)`.
fn singular_cell_mass(d: &LeaderUpdateDist, eps: f64) -> f64 {
    let (m, n) = (d.m(), d.n());
    let (coef, c) = if m < 0.0 {
        (1.0 / (n - m), (-m * n).sqrt())
    } else {
        // m == 0: the log branch reaches the centre
        (0.5 / (n - m), n)
    };
    coef * eps * ((c / eps).ln() + 1.0)
}

fn simpson<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64, tol: f64) -> f64 {
    if a >= b {
        return 0.0;
    }
    let mid = 0.5 * (a + b);
    let (fa, fm, fb) = (f(a), f(mid), f(b));
    let whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    simpson_rec(f, a, b, fa, fm, fb, whole, tol, 48)
}

#[allow(clippy::too_many_arguments)]
fn simpson_rec<F: Fn(f64) -> f64>(
    f: &F,
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    tol: f64,
    depth: u32,
) -> f64 {
    let mid = 0.5 * (a + b);
    let lm = 0.5 * (a + mid);
    let rm = 0.5 * (mid + b);
    let (flm, frm) = (f(lm), f(rm));
    let left = (mid - a) / 6.0 * (fa + 4.0 * flm + fm);
    let right = (b - mid) / 6.0 * (fm + 4.0 * frm + fb);
    let delta = left + right - whole;
    if depth == 0 || delta.abs() <= 15.0 * tol || mid <= a || mid >= b {
        left + right + delta / 15.0
    } else {
        simpson_rec(f, a, mid, fa, flm, fm, left, 0.5 * tol, depth - 1)
            + simpson_rec(f, mid, b, fm, frm, fb, right, 0.5 * tol, depth - 1)
    }
}

/// Split `[lo, hi]` at the breakpoints of the piecewise density.
fn pieces(d: &LeaderUpdateDist, lo: f64, hi: f64) -> Vec<(f64, f64)> {
    let wi = d.m().abs();
    let mut cuts = vec![lo, hi, d.p(), d.p() - wi, d.p() + wi];
    cuts.retain(|&c| c >= lo && c <= hi);
    cuts.sort_by(f64::total_cmp);
    cuts.dedup();
    cuts.windows(2)
        .filter(|w| w[1] > w[0])
        .map(|w| (w[0], w[1]))
        .collect()
}

/// Integrate `f(u) * pdf(u)` over one piece, handling a singular endpoint
/// at `p`. `f` must be smooth; the singular cell contributes
/// `f(p) * closed-form mass` of the cell.
fn integrate_piece<F: Fn(f64) -> f64>(d: &LeaderUpdateDist, s: f64, t: f64, f: &F) -> f64 {
    let p = d.p();
    let singular = d.m() <= 0.0 && d.m() != d.n();
    if singular && s == p {
        let eps = (t - s) * SINGULAR_CELL;
        f(p) * singular_cell_mass(d, eps)
            + simpson(&|u| f(u) * pdf_value(d, u), s + eps, t, PIECE_TOL)
    } else if singular && t == p {
        let eps = (t - s) * SINGULAR_CELL;
        f(p) * singular_cell_mass(d, eps)
            + simpson(&|u| f(u) * pdf_value(d, u), s, t - eps, PIECE_TOL)
    } else {
        simpson(&|u| f(u) * pdf_value(d, u), s, t, PIECE_TOL)
    }
}

pub(super) fn mass_between(d: &LeaderUpdateDist, lo: f64, hi: f64) -> Result<f64> {
    weighted_between(d, lo, hi, &|_| 1.0)
}

pub(super) fn weighted_integral<F: Fn(f64) -> f64>(d: &LeaderUpdateDist, f: &F) -> Result<f64> {
    let (lo, hi) = d.support();
    weighted_between(d, lo, hi, f)
}

fn weighted_between<F: Fn(f64) -> f64>(
    d: &LeaderUpdateDist,
    lo: f64,
    hi: f64,
    f: &F,
) -> Result<f64> {
    if d.is_degenerate() {
        return Err(Error::DegenerateDistribution);
    }
    let (slo, shi) = d.support();
    let lo = lo.max(slo);
    let hi = hi.min(shi);
    if lo >= hi {
        return Ok(0.0);
    }
    if d.m() == d.n() {
        // uniform density, kept on the same numeric path as the callers
        return Ok(simpson(&|u| f(u) * 0.5 / d.n(), lo, hi, PIECE_TOL));
    }
    Ok(pieces(d, lo, hi)
        .into_iter()
        .map(|(s, t)| integrate_piece(d, s, t, f))
        .sum())
}

pub(super) fn cdf(d: &LeaderUpdateDist, u: f64) -> Result<f64> {
    if d.is_degenerate() {
        return Err(Error::DegenerateDistribution);
    }
    let (lo, hi) = d.support();
    if u <= lo {
        return Ok(0.0);
    }
    if u >= hi {
        return Ok(1.0);
    }
    if u == d.p() {
        return Ok(0.5);
    }
    let v = if u > d.p() {
        0.5 + mass_between(d, d.p(), u)?
    } else {
        0.5 - mass_between(d, u, d.p())?
    };
    Ok(v.clamp(0.0, 1.0))
}
