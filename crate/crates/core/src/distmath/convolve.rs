//! Numeric density of the averaged three-leader move.
//!
//! The move is `(x'_1 + x'_2 + x'_3) / 3` with independent leader
//! contributions, so its density is the double convolution of the three
//! contribution densities evaluated at `3u` and rescaled by the Jacobian
//! factor 3 of the change of variables `u = s / 3`.
//!
//! The convolution is carried out on per-cell probability masses: each
//! contribution density is reduced to masses on a uniform grid (the cell
//! holding the logarithmic singularity is integrated in closed form by the
//! quadrature in this crate), the mass sequences are convolved directly, and
//! the result is read back as a density. Each mass grid is centred on its
//! distribution's symmetry point and the upper half is mirrored from the
//! lower half, so the discrete result is exactly symmetric whenever the
//! parameters are.

use super::LeaderUpdateDist;
use crate::error::{Error, Result};

/// Density values of the averaged move on a uniform grid, with the per-cell
/// masses retained so the cumulative distribution is exact for the
/// discretization.
#[derive(Debug, Clone, PartialEq)]
pub struct GridDensity {
    u: Vec<f64>,
    density: Vec<f64>,
    mass: Vec<f64>,
    du: f64,
}

impl GridDensity {
    /// Grid points, ascending and uniformly spaced.
    pub fn grid(&self) -> &[f64] {
        &self.u
    }

    /// Density value at each grid point.
    pub fn density(&self) -> &[f64] {
        &self.density
    }

    /// Probability mass of the cell around each grid point.
    pub fn cell_masses(&self) -> &[f64] {
        &self.mass
    }

    pub fn spacing(&self) -> f64 {
        self.du
    }

    pub fn len(&self) -> usize {
        self.u.len()
    }

    pub fn is_empty(&self) -> bool {
        self.u.is_empty()
    }

    /// Trapezoidal integral of the density over the grid.
    pub fn integral(&self) -> f64 {
        self.density
            .windows(2)
            .map(|w| 0.5 * (w[0] + w[1]) * self.du)
            .sum()
    }

    /// Cumulative distribution at `q`, piecewise linear inside each cell.
    pub fn cdf_at(&self, q: f64) -> f64 {
        let first_edge = self.u[0] - 0.5 * self.du;
        if q <= first_edge {
            return 0.0;
        }
        let total: f64 = self.mass.iter().sum();
        let last_edge = self.u[self.u.len() - 1] + 0.5 * self.du;
        if q >= last_edge {
            return total;
        }
        let cell = (((q - first_edge) / self.du) as usize).min(self.mass.len() - 1);
        let below: f64 = self.mass[..cell].iter().sum();
        let cell_lo = first_edge + cell as f64 * self.du;
        below + self.mass[cell] * ((q - cell_lo) / self.du).clamp(0.0, 1.0)
    }

    /// Grid point with the largest density; the first one on exact ties.
    pub fn argmax_u(&self) -> f64 {
        let mut best = 0;
        for (i, &v) in self.density.iter().enumerate() {
            if v > self.density[best] {
                best = i;
            }
        }
        self.u[best]
    }

    pub fn max_density(&self) -> f64 {
        self.density.iter().copied().fold(0.0, f64::max)
    }
}

/// Per-cell masses of one contribution on a grid of spacing `ds` centred on
/// the symmetry point `p`. The upper half is mirrored from the lower half.
fn cell_masses(d: &LeaderUpdateDist, ds: f64) -> Result<Vec<f64>> {
    let cells = ((2.0 * d.n() / ds).ceil() as usize).max(1);
    let start = d.p() - 0.5 * cells as f64 * ds;
    let mut mass = vec![0.0; cells];
    for i in 0..cells.div_ceil(2) {
        let lo = start + i as f64 * ds;
        let hi = start + (i + 1) as f64 * ds;
        let q = d.mass_between(lo, hi)?;
        mass[i] = q;
        mass[cells - 1 - i] = q;
    }
    Ok(mass)
}

fn convolve(a: &[f64], b: &[f64]) -> Vec<f64> {
    let mut out = vec![0.0; a.len() + b.len() - 1];
    for (i, &ai) in a.iter().enumerate() {
        if ai == 0.0 {
            continue;
        }
        for (j, &bj) in b.iter().enumerate() {
            out[i + j] += ai * bj;
        }
    }
    out
}

/// Density of the averaged three-leader move on a uniform grid covering its
/// support `[(sum p_k - sum n_k) / 3, (sum p_k + sum n_k) / 3]`.
/// `grid_points` sets the number of cells across the support (at least 256).
pub fn h_pdf_numeric(
    d1: &LeaderUpdateDist,
    d2: &LeaderUpdateDist,
    d3: &LeaderUpdateDist,
    grid_points: usize,
) -> Result<GridDensity> {
    for d in [d1, d2, d3] {
        if d.is_degenerate() {
            return Err(Error::DegenerateDistribution);
        }
    }
    if grid_points < 256 {
        return Err(Error::InvalidParameter(format!(
            "grid_points must be at least 256, got {grid_points}"
        )));
    }
    let total_width = 2.0 * (d1.n() + d2.n() + d3.n());
    let ds = total_width / grid_points as f64;

    let q1 = cell_masses(d1, ds)?;
    let q2 = cell_masses(d2, ds)?;
    let q3 = cell_masses(d3, ds)?;
    let q12 = convolve(&q1, &q2);
    let mass = convolve(&q12, &q3);

    let len = mass.len();
    let du = ds / 3.0;
    let center = (d1.p() + d2.p() + d3.p()) / 3.0;
    let half = (len as f64 - 1.0) / 2.0;
    let u: Vec<f64> = (0..len).map(|t| center + (t as f64 - half) * du).collect();
    let density: Vec<f64> = mass.iter().map(|&q| q / du).collect();
    Ok(GridDensity {
        u,
        density,
        mass,
        du,
    })
}
