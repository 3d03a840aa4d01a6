//! Random symmetric matrices, a cyclic Jacobi eigensolver, and a sampling
//! probe that checks the Horn inequalities on `(λ(A+B), λ(A), λ(B))`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::horn::HornInequality;

/// Violations are recorded only below `-MARGIN_TOLERANCE`.
pub const MARGIN_TOLERANCE: f64 = 1e-8;
/// Jacobi stops once the off-diagonal Frobenius norm falls below this
/// fraction of the matrix norm.
pub const JACOBI_TOLERANCE: f64 = 1e-12;
pub const MAX_SWEEPS: usize = 100;

/// Dense real symmetric matrix, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct SymmetricMatrix {
    order: usize,
    data: Vec<f64>,
}

impl SymmetricMatrix {
    pub fn zero(order: usize) -> Self {
        SymmetricMatrix {
            order,
            data: vec![0.0; order * order],
        }
    }

    pub fn diagonal(values: &[f64]) -> Self {
        let mut m = SymmetricMatrix::zero(values.len());
        for (i, &v) in values.iter().enumerate() {
            m.data[i * values.len() + i] = v;
        }
        m
    }

    /// Builds from the upper triangle of `rows`; returns `None` unless the
    /// input is square and exactly symmetric.
    pub fn from_rows(rows: &[Vec<f64>]) -> Option<Self> {
        let n = rows.len();
        if rows.iter().any(|r| r.len() != n) {
            return None;
        }
        let symmetric = (0..n).all(|i| (0..n).all(|j| rows[i][j] == rows[j][i]));
        symmetric.then(|| SymmetricMatrix {
            order: n,
            data: rows.iter().flatten().copied().collect(),
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.order + j]
    }

    fn set_sym(&mut self, i: usize, j: usize, v: f64) {
        self.data[i * self.order + j] = v;
        self.data[j * self.order + i] = v;
    }

    pub fn add(&self, other: &SymmetricMatrix) -> SymmetricMatrix {
        assert_eq!(self.order, other.order);
        SymmetricMatrix {
            order: self.order,
            data: self.data.iter().zip(&other.data).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn trace(&self) -> f64 {
        (0..self.order).map(|i| self.get(i, i)).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    fn off_diagonal_norm(&self) -> f64 {
        let n = self.order;
        (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| self.get(i, j).powi(2))
            .sum::<f64>()
            .sqrt()
    }
}

/// Independent standard-normal entries on and above the diagonal, mirrored below.
pub fn sample_symmetric<R: Rng + ?Sized>(r: usize, rng: &mut R) -> SymmetricMatrix {
    let mut m = SymmetricMatrix::zero(r);
    for i in 0..r {
        for j in i..r {
            let x: f64 = rng.sample(StandardNormal);
            m.set_sym(i, j, x);
        }
    }
    m
}

/// `M = V diag(values) Vᵀ` with eigenvalues weakly decreasing and the
/// matching eigenvectors in the columns of `V`.
#[derive(Clone, Debug)]
pub struct EigenDecomposition {
    pub values: Vec<f64>,
    /// Row-major `order × order`.
    pub vectors: Vec<f64>,
    pub sweeps: usize,
}

impl EigenDecomposition {
    pub fn reconstruct(&self) -> Vec<f64> {
        let n = self.values.len();
        let mut out = vec![0.0; n * n];
        for i in 0..n {
            for j in 0..n {
                out[i * n + j] = (0..n)
                    .map(|k| self.vectors[i * n + k] * self.values[k] * self.vectors[j * n + k])
                    .sum();
            }
        }
        out
    }

    /// `‖V D Vᵀ - M‖_F / ‖M‖_F` (absolute error when `M = 0`).
    pub fn reconstruction_error(&self, m: &SymmetricMatrix) -> f64 {
        let diff: f64 = self
            .reconstruct()
            .iter()
            .zip(&m.data)
            .map(|(a, b)| (a - b).powi(2))
            .sum::<f64>()
            .sqrt();
        let norm = m.frobenius_norm();
        if norm > 0.0 {
            diff / norm
        } else {
            diff
        }
    }
}

/// Cyclic Jacobi rotations until the off-diagonal norm drops below
/// `JACOBI_TOLERANCE · ‖M‖_F`.
pub fn jacobi_eigen(m: &SymmetricMatrix) -> Result<EigenDecomposition> {
    let n = m.order;
    let mut a = m.clone();
    let mut v = vec![0.0; n * n];
    for i in 0..n {
        v[i * n + i] = 1.0;
    }
    let threshold = JACOBI_TOLERANCE * m.frobenius_norm();
    let mut sweeps = 0;
    while a.off_diagonal_norm() > threshold {
        if sweeps == MAX_SWEEPS {
            return Err(Error::NoConvergence(MAX_SWEEPS));
        }
        sweeps += 1;
        for p in 0..n {
            for q in p + 1..n {
                let apq = a.get(p, q);
                if apq == 0.0 {
                    continue;
                }
                let theta = (a.get(q, q) - a.get(p, p)) / (2.0 * apq);
                let sign = if theta >= 0.0 { 1.0 } else { -1.0 };
                let t = sign / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let (akp, akq) = (a.get(k, p), a.get(k, q));
                    a.data[k * n + p] = c * akp - s * akq;
                    a.data[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let (apk, aqk) = (a.get(p, k), a.get(q, k));
                    a.data[p * n + k] = c * apk - s * aqk;
                    a.data[q * n + k] = s * apk + c * aqk;
                }
                a.set_sym(p, q, 0.0);
                for k in 0..n {
                    let (vkp, vkq) = (v[k * n + p], v[k * n + q]);
                    v[k * n + p] = c * vkp - s * vkq;
                    v[k * n + q] = s * vkp + c * vkq;
                }
            }
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&x, &y| a.get(y, y).total_cmp(&a.get(x, x)));
    let values = order.iter().map(|&k| a.get(k, k)).collect();
    let mut vectors = vec![0.0; n * n];
    for (col, &k) in order.iter().enumerate() {
        for i in 0..n {
            vectors[i * n + col] = v[i * n + k];
        }
    }
    Ok(EigenDecomposition {
        values,
        vectors,
        sweeps,
    })
}

/// All eigenvalues, weakly decreasing.
pub fn eigenvalues_desc(m: &SymmetricMatrix) -> Result<Vec<f64>> {
    jacobi_eigen(m).map(|d| d.values)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Violation {
    pub trial: u64,
    pub inequality: String,
    pub margin: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SpectralSampleReport {
    pub r: usize,
    pub trials: u64,
    pub seed: u64,
    pub tolerance: f64,
    pub violations: Vec<Violation>,
    /// Smallest `|μ|_J + |ν|_K - |λ|_I` seen over all trials and inequalities.
    pub worst_margin: Option<f64>,
    pub max_trace_error: f64,
    pub max_reconstruction_error: f64,
}

struct TrialOutcome {
    violations: Vec<Violation>,
    worst_margin: Option<f64>,
    trace_error: f64,
    reconstruction_error: f64,
}

fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

fn run_trial(r: usize, seed: u64, trial: u64, facets: &[HornInequality]) -> Result<TrialOutcome> {
    let mut rng = trial_rng(seed, trial);
    let a = sample_symmetric(r, &mut rng);
    let b = sample_symmetric(r, &mut rng);
    let sum = a.add(&b);
    let (da, db, dsum) = (jacobi_eigen(&a)?, jacobi_eigen(&b)?, jacobi_eigen(&sum)?);
    let reconstruction_error = [(&da, &a), (&db, &b), (&dsum, &sum)]
        .iter()
        .map(|(d, m)| d.reconstruction_error(m))
        .fold(0.0, f64::max);

    let (lambda, mu, nu) = (&dsum.values, &da.values, &db.values);
    let total = |v: &[f64]| v.iter().sum::<f64>();
    let scale: f64 = [lambda, mu, nu].iter().flat_map(|v| v.iter()).map(|x| x.abs()).sum();
    let defect = (total(lambda) - total(mu) - total(nu)).abs();
    let trace_error = if scale > 0.0 { defect / scale } else { defect };

    let mut violations = Vec::new();
    let mut worst_margin: Option<f64> = None;
    for f in facets {
        let margin = f.margin_f64(lambda, mu, nu);
        worst_margin = Some(worst_margin.map_or(margin, |w| w.min(margin)));
        if margin < -MARGIN_TOLERANCE {
            violations.push(Violation {
                trial,
                inequality: f.to_string(),
                margin,
            });
        }
    }
    Ok(TrialOutcome {
        violations,
        worst_margin,
        trace_error,
        reconstruction_error,
    })
}

/// Samples `trials` pairs `(A, B)` and checks every inequality in `facets`
/// against their spectra. Trial `t` draws from stream `t` of a ChaCha8
/// generator seeded with `seed`, so the report is independent of scheduling.
pub fn he_probe(r: usize, trials: u64, seed: u64, facets: &[HornInequality]) -> Result<SpectralSampleReport> {
    if r == 0 {
        return Err(Error::ZeroRank);
    }
    if let Some(f) = facets.iter().find(|f| f.rank() != r) {
        return Err(Error::RankMismatch {
            expected: r,
            found: f.rank(),
        });
    }
    let outcomes = (0..trials)
        .into_par_iter()
        .map(|t| run_trial(r, seed, t, facets))
        .collect::<Result<Vec<_>>>()?;
    let mut report = SpectralSampleReport {
        r,
        trials,
        seed,
        tolerance: MARGIN_TOLERANCE,
        violations: Vec::new(),
        worst_margin: None,
        max_trace_error: 0.0,
        max_reconstruction_error: 0.0,
    };
    for o in outcomes {
        report.violations.extend(o.violations);
        if let Some(m) = o.worst_margin {
            report.worst_margin = Some(report.worst_margin.map_or(m, |w| w.min(m)));
        }
        report.max_trace_error = report.max_trace_error.max(o.trace_error);
        report.max_reconstruction_error = report.max_reconstruction_error.max(o.reconstruction_error);
    }
    Ok(report)
}
