//! Spatial discretization, initial wavepackets, and the two potential
//! families (edge absorber and Gaussian well).
//!
//! Units are natural, `hbar = c = 1` with `hbar^2/2m = 1`, so the particle
//! mass is fixed at `m = 1/2` and a boost `v` carries momentum `v/2`.

use num_complex::Complex64;
use std::f64::consts::TAU;

use crate::error::{Error, Result};

/// Smallest supported register size.
pub const MIN_QUBITS: u32 = 1;
/// Largest supported register size; keeps every dense oracle feasible.
pub const MAX_QUBITS: u32 = 12;

/// Particle mass under the `hbar^2/2m = 1` convention.
pub const MASS: f64 = 0.5;

/// Uniform 1D mesh of `2^n` points over `[x_min, x_max]`, together with the
/// centered momentum mesh `p_k = 2pi (k - 2^{n-1}) / (2^n dx)`.
#[derive(Debug, Clone, PartialEq)]
pub struct Grid {
    pub x_min: f64,
    pub x_max: f64,
    /// System qubit count; the mesh has `2^n` points.
    pub n: u32,
    /// Number of mesh points, exactly `2^n`.
    pub n_points: usize,
    /// Mesh step `(x_max - x_min) / (2^n - 1)`.
    pub dx: f64,
    /// Box length `x_max - x_min`.
    pub length: f64,
    /// Particle mass (always [`MASS`]).
    pub mass: f64,
}

impl Grid {
    pub fn new(x_min: f64, x_max: f64, n: u32) -> Result<Self> {
        if !(x_max > x_min) {
            return Err(Error::EmptyExtent { x_min, x_max });
        }
        if !(MIN_QUBITS..=MAX_QUBITS).contains(&n) {
            return Err(Error::QubitCount {
                n,
                min: MIN_QUBITS,
                max: MAX_QUBITS,
            });
        }
        let n_points = 1usize << n;
        let length = x_max - x_min;
        Ok(Grid {
            x_min,
            x_max,
            n,
            n_points,
            dx: length / (n_points - 1) as f64,
            length,
            mass: MASS,
        })
    }

    /// Position of mesh point `i`.
    pub fn x(&self, i: usize) -> f64 {
        self.x_min + i as f64 * self.dx
    }

    /// Momentum carried by (centered) transform bin `k`.
    pub fn momentum(&self, k: usize) -> f64 {
        TAU / (self.n_points as f64 * self.dx) * (k as f64 - (self.n_points / 2) as f64)
    }

    pub fn positions(&self) -> Vec<f64> {
        (0..self.n_points).map(|i| self.x(i)).collect()
    }

    pub fn momenta(&self) -> Vec<f64> {
        (0..self.n_points).map(|k| self.momentum(k)).collect()
    }

    /// Box midpoint, the default packet center.
    pub fn mid(&self) -> f64 {
        0.5 * (self.x_min + self.x_max)
    }
}

/// Complex amplitudes over the mesh points plus the tracked physical norm
/// (the fraction of probability not yet absorbed; 1 at `t = 0`).
#[derive(Debug, Clone, PartialEq)]
pub struct WaveFunction {
    pub amplitudes: Vec<Complex64>,
    pub physical_norm: f64,
}

impl WaveFunction {
    /// Gaussian packet `exp[-(x-x0)^2/2sigma^2 + i m v (x-x0)]` sampled on the
    /// mesh and renormalized so the discrete amplitudes sum to unit probability.
    pub fn gaussian(grid: &Grid, x0: f64, sigma: f64, boost: f64) -> Result<Self> {
        if !(sigma > 0.0) {
            return Err(Error::PacketWidth(sigma));
        }
        if x0 < grid.x_min || x0 > grid.x_max {
            return Err(Error::PacketCenter {
                x0,
                x_min: grid.x_min,
                x_max: grid.x_max,
            });
        }
        let momentum = grid.mass * boost;
        let mut amplitudes: Vec<Complex64> = (0..grid.n_points)
            .map(|i| {
                let u = grid.x(i) - x0;
                Complex64::new(-u * u / (2.0 * sigma * sigma), momentum * u).exp()
            })
            .collect();
        let scale = (sum_abs2(&amplitudes)).sqrt().recip();
        for a in &mut amplitudes {
            *a *= scale;
        }
        Ok(WaveFunction {
            amplitudes,
            physical_norm: 1.0,
        })
    }

    pub fn from_amplitudes(amplitudes: Vec<Complex64>) -> Self {
        let physical_norm = sum_abs2(&amplitudes);
        WaveFunction {
            amplitudes,
            physical_norm,
        }
    }

    /// Total probability `sum_i |psi_i|^2`.
    pub fn norm(&self) -> f64 {
        sum_abs2(&self.amplitudes)
    }

    /// Copy rescaled to unit norm. Leaves an all-zero state untouched.
    pub fn renormalized(&self) -> Self {
        let n = self.norm();
        if n == 0.0 {
            return self.clone();
        }
        let scale = n.sqrt().recip();
        WaveFunction {
            amplitudes: self.amplitudes.iter().map(|a| a * scale).collect(),
            physical_norm: 1.0,
        }
    }
}

pub(crate) fn sum_abs2(amplitudes: &[Complex64]) -> f64 {
    amplitudes.iter().map(|a| a.norm_sqr()).sum()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PotentialKind {
    /// Real potential V entering as `exp(-i V dt)`.
    Real,
    /// Nonnegative absorber W entering as `exp(-W dt)`.
    Absorbing,
}

/// Real diagonal potential sampled on the mesh; used for both `V` and `W`.
#[derive(Debug, Clone, PartialEq)]
pub struct PotentialField {
    pub values: Vec<f64>,
    pub kind: PotentialKind,
}

impl PotentialField {
    pub fn zero(grid: &Grid) -> Self {
        PotentialField {
            values: vec![0.0; grid.n_points],
            kind: PotentialKind::Real,
        }
    }

    /// Absorbing potential `U0 / cosh^2(alpha d)` on the `k` outermost points
    /// of each edge, `d` measuring the distance to the nearer box edge.
    /// Mirror-symmetric by construction: `W_i = W_{N-1-i}`.
    pub fn absorbing_edges(grid: &Grid, u0: f64, alpha: f64, k: usize) -> Result<Self> {
        if u0 < 0.0 {
            return Err(Error::AbsorberHeight(u0));
        }
        if !(alpha > 0.0) {
            return Err(Error::AbsorberFalloff(alpha));
        }
        let n_points = grid.n_points;
        if k > n_points / 2 {
            return Err(Error::AbsorberWidth { k, n_points });
        }
        let values = (0..n_points)
            .map(|i| {
                if i + k > n_points - 1 {
                    u0 / (alpha * grid.dx * (n_points - 1 - i) as f64).cosh().powi(2)
                } else if i < k {
                    u0 / (alpha * grid.dx * i as f64).cosh().powi(2)
                } else {
                    0.0
                }
            })
            .collect();
        Ok(PotentialField {
            values,
            kind: PotentialKind::Absorbing,
        })
    }

    /// Confining Gaussian well `V0 exp(-x^2 / 2 sigma_v^2)`, a well for `V0 < 0`.
    pub fn gaussian_well(grid: &Grid, v0: f64, sigma_v: f64) -> Result<Self> {
        if !(sigma_v > 0.0) {
            return Err(Error::WellWidth(sigma_v));
        }
        let values = (0..grid.n_points)
            .map(|i| {
                let x = grid.x(i);
                v0 * (-x * x / (2.0 * sigma_v * sigma_v)).exp()
            })
            .collect();
        Ok(PotentialField {
            values,
            kind: PotentialKind::Real,
        })
    }

    /// Largest absolute sample; this is the spectral norm of the diagonal operator.
    pub fn max_abs(&self) -> f64 {
        self.values.iter().fold(0.0, |m, v| m.max(v.abs()))
    }

    /// Checks the absorber invariant `W_i >= 0`.
    pub fn check_nonnegative(&self) -> Result<()> {
        for (index, &value) in self.values.iter().enumerate() {
            if value < 0.0 {
                return Err(Error::NegativeAbsorber { index, value });
            }
        }
        Ok(())
    }
}
