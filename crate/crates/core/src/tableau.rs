//! The classical Littlewood-Richardson rule: `c^λ_{μν}` counts semistandard
//! skew tableaux of shape `λ/μ` and content `ν` whose reverse reading word
//! (rows top to bottom, each row right to left) is a lattice word.

use std::ops::ControlFlow;

use num_bigint::BigUint;

use crate::partition::{Partition, PartitionTriple};

/// A filling of the skew diagram `outer/inner`.
///
/// `rows[i]` holds the entries of row `i` from column `inner[i]` to
/// `outer[i] - 1`, left to right.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewTableau {
    pub outer: Partition,
    pub inner: Partition,
    pub rows: Vec<Vec<u32>>,
}

impl SkewTableau {
    pub fn entry(&self, row: usize, col: usize) -> Option<u32> {
        let start = self.inner.parts()[row] as usize;
        col.checked_sub(start).and_then(|c| self.rows[row].get(c).copied())
    }

    /// Multiset of entries, as a partition of rank `outer.rank()` when the
    /// content is a partition at all.
    pub fn content(&self) -> Vec<u32> {
        let mut counts = vec![0u32; self.outer.rank()];
        for &v in self.rows.iter().flatten() {
            counts[v as usize - 1] += 1;
        }
        counts
    }

    /// Rows right to left, top to bottom.
    pub fn reading_word(&self) -> Vec<u32> {
        self.rows.iter().flat_map(|row| row.iter().rev().copied()).collect()
    }

    pub fn is_semistandard(&self) -> bool {
        let rows_ok = self.rows.iter().all(|row| row.windows(2).all(|w| w[0] <= w[1]));
        let cols_ok = (1..self.rows.len()).all(|i| {
            let lo = self.inner.parts()[i] as usize;
            let hi = self.outer.parts()[i] as usize;
            (lo..hi).all(|col| match (self.entry(i - 1, col), self.entry(i, col)) {
                (Some(above), Some(below)) => above < below,
                _ => true,
            })
        });
        rows_ok && cols_ok
    }

    /// Every prefix of the reading word holds at least as many `k`s as `k+1`s.
    pub fn is_lattice(&self) -> bool {
        let mut counts = vec![0u32; self.outer.rank() + 1];
        self.reading_word().into_iter().all(|v| {
            let v = v as usize;
            counts[v] += 1;
            v == 1 || counts[v] <= counts[v - 1]
        })
    }
}

struct Search<'a> {
    lambda: &'a [u32],
    mu: &'a [u32],
    nu: &'a [u32],
    /// Skew cells in reading order.
    cells: Vec<(usize, usize)>,
    rows: Vec<Vec<u32>>,
    counts: Vec<u32>,
}

impl<'a> Search<'a> {
    fn new(t: &'a PartitionTriple) -> Option<Self> {
        if !t.is_homogeneous() || !t.lambda.contains(&t.mu) {
            return None;
        }
        let (lambda, mu, nu) = (t.lambda.parts(), t.mu.parts(), t.nu.parts());
        let cells = (0..lambda.len())
            .flat_map(|i| (mu[i] as usize..lambda[i] as usize).rev().map(move |j| (i, j)))
            .collect();
        let rows = (0..lambda.len())
            .map(|i| vec![0; (lambda[i] - mu[i]) as usize])
            .collect();
        Some(Search {
            lambda,
            mu,
            nu,
            cells,
            rows,
            counts: vec![0; lambda.len() + 1],
        })
    }

    fn get(&self, i: usize, j: usize) -> Option<u32> {
        let start = self.mu[i] as usize;
        if j < start || j >= self.lambda[i] as usize {
            None
        } else {
            Some(self.rows[i][j - start])
        }
    }

    fn admissible(&self, i: usize, j: usize, v: u32) -> bool {
        let vi = v as usize;
        if self.counts[vi] >= self.nu[vi - 1] {
            return false;
        }
        if vi > 1 && self.counts[vi] >= self.counts[vi - 1] {
            return false;
        }
        if let Some(right) = self.get(i, j + 1) {
            if right < v {
                return false;
            }
        }
        if i > 0 {
            if let Some(above) = self.get(i - 1, j) {
                if above >= v {
                    return false;
                }
            }
        }
        true
    }

    fn run<B>(&mut self, idx: usize, visit: &mut dyn FnMut(&Self) -> ControlFlow<B>) -> ControlFlow<B> {
        if idx == self.cells.len() {
            return visit(self);
        }
        let (i, j) = self.cells[idx];
        for v in 1..=self.nu.len() as u32 {
            if !self.admissible(i, j, v) {
                continue;
            }
            let start = self.mu[i] as usize;
            self.rows[i][j - start] = v;
            self.counts[v as usize] += 1;
            let flow = self.run(idx + 1, visit);
            self.counts[v as usize] -= 1;
            self.rows[i][j - start] = 0;
            flow?;
        }
        ControlFlow::Continue(())
    }
}

fn search<B>(t: &PartitionTriple, mut visit: impl FnMut(&Search<'_>) -> ControlFlow<B>) -> Option<B> {
    let mut s = Search::new(t)?;
    match s.run(0, &mut visit) {
        ControlFlow::Break(b) => Some(b),
        ControlFlow::Continue(()) => None,
    }
}

/// `c^λ_{μν}`; zero when `μ ⊄ λ` or `|λ| ≠ |μ| + |ν|`.
pub fn lr_coefficient(t: &PartitionTriple) -> BigUint {
    let mut count: u64 = 0;
    search::<()>(t, |_| {
        count += 1;
        ControlFlow::Continue(())
    });
    BigUint::from(count)
}

/// `c^λ_{μν} > 0`, stopping at the first witness tableau.
pub fn lr_positive(t: &PartitionTriple) -> bool {
    search(t, |_| ControlFlow::Break(())).is_some()
}

/// All LR tableaux of shape `λ/μ` and content `ν`, in search order.
pub fn lr_tableaux(t: &PartitionTriple) -> Vec<SkewTableau> {
    let mut out = Vec::new();
    search::<()>(t, |s| {
        out.push(SkewTableau {
            outer: t.lambda.clone(),
            inner: t.mu.clone(),
            rows: s.rows.clone(),
        });
        ControlFlow::Continue(())
    });
    out
}
