//! Integer arrays on the punctured triangular grid `Y_r`, their tails
//! (partial line sums), and the count of tail-positive arrays with
//! prescribed full line sums, which equals `c_{λ̄ μ̄ ν̄}`.

use std::fmt;

use num_bigint::BigUint;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partition::{FundamentalWeight, FundamentalWeightTriple};

/// A point `(i, j, k)` of `Y_r`: `i + j + k = r` and each coordinate `< r`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct TrianglePosition {
    pub i: usize,
    pub j: usize,
    pub k: usize,
}

impl TrianglePosition {
    pub fn new(i: usize, j: usize, k: usize) -> Self {
        TrianglePosition { i, j, k }
    }

    pub fn in_grid(&self, r: usize) -> bool {
        self.i + self.j + self.k == r && self.i < r && self.j < r && self.k < r
    }

    /// On an edge of the big triangle (some coordinate is zero).
    pub fn is_boundary(&self) -> bool {
        self.i == 0 || self.j == 0 || self.k == 0
    }
}

impl fmt::Display for TrianglePosition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.i, self.j, self.k)
    }
}

/// `Y_r` in lexicographic order of `(i, j)`.
pub fn positions(r: usize) -> Vec<TrianglePosition> {
    let mut out = Vec::new();
    for i in 0..r {
        for j in 0..r {
            if i + j <= r && r - i - j < r {
                out.push(TrianglePosition::new(i, j, r - i - j));
            }
        }
    }
    out
}

/// `|Y_r| = (r+1)(r+2)/2 - 3`.
pub fn grid_size(r: usize) -> usize {
    ((r + 1) * (r + 2) / 2).saturating_sub(3)
}

/// Canonical index of `p` in [`positions`]`(r)`.
pub fn position_index(r: usize, p: TrianglePosition) -> Option<usize> {
    if !p.in_grid(r) {
        return None;
    }
    // row i' holds r + 1 - i' positions, except row 0 which loses two corners
    let before_rows: usize = (0..p.i).map(|i| r + 1 - i).sum::<usize>() - if p.i > 0 { 2 } else { 0 };
    // within row i, j runs from 0 (or 1 when i = 0) upward
    let offset = if p.i == 0 { p.j - 1 } else { p.j };
    Some(before_rows + offset)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Direction {
    L,
    M,
    N,
}

impl Direction {
    pub const ALL: [Direction; 3] = [Direction::L, Direction::M, Direction::N];

    pub fn as_str(self) -> &'static str {
        match self {
            Direction::L => "L",
            Direction::M => "M",
            Direction::N => "N",
        }
    }
}

impl std::str::FromStr for Direction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "L" => Ok(Direction::L),
            "M" => Ok(Direction::M),
            "N" => Ok(Direction::N),
            other => Err(Error::Parse(format!("unknown tail direction {other:?}"))),
        }
    }
}

/// One of the tails `l_{ts}`, `m_{ts}`, `n_{ts}` with `0 <= t <= s <= r`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TailId {
    pub dir: Direction,
    pub t: usize,
    pub s: usize,
}

impl TailId {
    pub fn new(dir: Direction, t: usize, s: usize, r: usize) -> Result<Self> {
        if t > s || s > r {
            return Err(Error::TailOutOfRange { t, s, r });
        }
        Ok(TailId { dir, t, s })
    }

    /// Every tail identifier of rank `r`, ordered by direction, then `s`, then `t`.
    pub fn all(r: usize) -> Vec<TailId> {
        let mut out = Vec::new();
        for dir in Direction::ALL {
            for s in 0..=r {
                for t in 0..=s {
                    out.push(TailId { dir, t, s });
                }
            }
        }
        out
    }

    /// The positions summed by this tail. Index triples falling outside
    /// `Y_r` (the three corners of the big triangle) contribute nothing.
    pub fn positions(&self, r: usize) -> Vec<TrianglePosition> {
        (self.t..=self.s)
            .map(|x| {
                let (s, rs) = (self.s, r - self.s);
                match self.dir {
                    Direction::L => TrianglePosition::new(rs, x, s - x),
                    Direction::M => TrianglePosition::new(s - x, rs, x),
                    Direction::N => TrianglePosition::new(x, s - x, rs),
                }
            })
            .filter(|p| p.in_grid(r))
            .collect()
    }

    fn index_set(&self, r: usize) -> Vec<usize> {
        self.positions(r)
            .into_iter()
            .filter_map(|p| position_index(r, p))
            .collect()
    }
}

impl fmt::Display for TailId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({},{})", self.dir.as_str(), self.t, self.s)
    }
}

/// An integer family indexed by `Y_r`, stored in canonical position order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TriangleArray {
    r: usize,
    values: Vec<i64>,
}

impl TriangleArray {
    pub fn zero(r: usize) -> Self {
        TriangleArray {
            r,
            values: vec![0; grid_size(r)],
        }
    }

    /// Values listed in canonical position order.
    pub fn from_values(r: usize, values: Vec<i64>) -> Result<Self> {
        if r == 0 {
            return Err(Error::ZeroRank);
        }
        if values.len() != grid_size(r) {
            return Err(Error::RankMismatch {
                expected: grid_size(r),
                found: values.len(),
            });
        }
        Ok(TriangleArray { r, values })
    }

    pub fn rank(&self) -> usize {
        self.r
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn get(&self, p: TrianglePosition) -> Option<i64> {
        position_index(self.r, p).map(|idx| self.values[idx])
    }

    pub fn iter(&self) -> impl Iterator<Item = (TrianglePosition, i64)> + '_ {
        positions(self.r).into_iter().zip(self.values.iter().copied())
    }

    pub fn tail_value(&self, id: TailId) -> Result<i64> {
        TailId::new(id.dir, id.t, id.s, self.r)?;
        Ok(id.index_set(self.r).into_iter().map(|idx| self.values[idx]).sum())
    }

    /// All tails are nonnegative.
    pub fn is_tail_positive(&self) -> bool {
        TailId::all(self.r).into_iter().all(|id| {
            id.index_set(self.r)
                .into_iter()
                .map(|idx| self.values[idx])
                .sum::<i64>()
                >= 0
        })
    }

    /// Full line sums `(l_{0s}, m_{0s}, n_{0s})` for `1 <= s <= r - 1`,
    /// which may be negative for arrays that are not tail-positive.
    pub fn raw_line_sums(&self) -> [Vec<i64>; 3] {
        Direction::ALL.map(|dir| {
            (1..self.r)
                .map(|s| self.tail_value(TailId { dir, t: 0, s }).expect("in range"))
                .collect()
        })
    }

    /// The projection `σ` onto fundamental-weight coordinates.
    pub fn line_sums(&self) -> Result<FundamentalWeightTriple> {
        let [l, m, n] = self.raw_line_sums();
        let r = self.r;
        let weight = |v: Vec<i64>| -> Result<FundamentalWeight> {
            let coords = v
                .into_iter()
                .map(|x| u32::try_from(x).map_err(|_| Error::NegativeLineSum(x)))
                .collect::<Result<Vec<_>>>()?;
            FundamentalWeight::new(coords, r)
        };
        FundamentalWeightTriple::new(weight(l)?, weight(m)?, weight(n)?)
    }

    pub fn add(&self, other: &TriangleArray) -> Result<TriangleArray> {
        if self.r != other.r {
            return Err(Error::RankMismatch {
                expected: self.r,
                found: other.r,
            });
        }
        Ok(TriangleArray {
            r: self.r,
            values: self.values.iter().zip(&other.values).map(|(a, b)| a + b).collect(),
        })
    }
}

impl Serialize for TriangleArray {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr {
            r: usize,
            values: Vec<(usize, usize, usize, i64)>,
        }
        Repr {
            r: self.r,
            values: self.iter().map(|(p, v)| (p.i, p.j, p.k, v)).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for TriangleArray {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            r: usize,
            values: Vec<(usize, usize, usize, i64)>,
        }
        let repr = Repr::deserialize(deserializer)?;
        let mut arr = TriangleArray::zero(repr.r);
        let mut seen = vec![false; arr.values.len()];
        for (i, j, k, v) in repr.values {
            let p = TrianglePosition::new(i, j, k);
            let idx = position_index(repr.r, p).ok_or_else(|| D::Error::custom(format!("{p} not in Y_{}", repr.r)))?;
            if std::mem::replace(&mut seen[idx], true) {
                return Err(D::Error::custom(format!("duplicate position {p}")));
            }
            arr.values[idx] = v;
        }
        if seen.iter().any(|s| !s) {
            return Err(D::Error::custom("missing positions"));
        }
        Ok(arr)
    }
}

/// Constraint system for tail-positive arrays with prescribed line sums.
struct LineSumSystem {
    size: usize,
    equalities: Vec<(Vec<usize>, i64)>,
    tails: Vec<Vec<usize>>,
    bound: i64,
}

type Domains = Vec<(i64, i64)>;

impl LineSumSystem {
    fn new(w: &FundamentalWeightTriple) -> Self {
        let r = w.rank();
        let mut equalities = Vec::new();
        for (dir, weight) in Direction::ALL.into_iter().zip(w.weights()) {
            for s in 1..r {
                let id = TailId { dir, t: 0, s };
                equalities.push((id.index_set(r), weight.coord(s) as i64));
            }
        }
        let mut tails: Vec<Vec<usize>> = TailId::all(r)
            .into_iter()
            .map(|id| id.index_set(r))
            .filter(|set| !set.is_empty())
            .collect();
        for set in &mut tails {
            set.sort_unstable();
        }
        tails.sort();
        tails.dedup();
        let bound = w.weights().iter().map(|x| x.total() as i64).sum();
        LineSumSystem {
            size: grid_size(r),
            equalities,
            tails,
            bound,
        }
    }

    /// Tightens `dom` to a fixpoint; false when some domain empties.
    fn propagate(&self, dom: &mut Domains) -> bool {
        loop {
            let mut changed = false;
            for (vars, target) in &self.equalities {
                let lo_sum: i64 = vars.iter().map(|&v| dom[v].0).sum();
                let hi_sum: i64 = vars.iter().map(|&v| dom[v].1).sum();
                if lo_sum > *target || hi_sum < *target {
                    return false;
                }
                for &v in vars {
                    let (lo, hi) = dom[v];
                    let new_lo = lo.max(target - (hi_sum - hi));
                    let new_hi = hi.min(target - (lo_sum - lo));
                    if new_lo > new_hi {
                        return false;
                    }
                    if (new_lo, new_hi) != (lo, hi) {
                        dom[v] = (new_lo, new_hi);
                        changed = true;
                    }
                }
            }
            for vars in &self.tails {
                let hi_sum: i64 = vars.iter().map(|&v| dom[v].1).sum();
                if hi_sum < 0 {
                    return false;
                }
                for &v in vars {
                    let (lo, hi) = dom[v];
                    let new_lo = lo.max(-(hi_sum - hi));
                    if new_lo > hi {
                        return false;
                    }
                    if new_lo != lo {
                        dom[v].0 = new_lo;
                        changed = true;
                    }
                }
            }
            if !changed {
                return true;
            }
        }
    }

    fn satisfied(&self, values: &[i64]) -> bool {
        self.equalities
            .iter()
            .all(|(vars, t)| vars.iter().map(|&v| values[v]).sum::<i64>() == *t)
            && self
                .tails
                .iter()
                .all(|vars| vars.iter().map(|&v| values[v]).sum::<i64>() >= 0)
    }

    fn search(&self, mut dom: Domains, visit: &mut dyn FnMut(&[i64])) {
        if !self.propagate(&mut dom) {
            return;
        }
        let branch = (0..self.size)
            .filter(|&v| dom[v].0 < dom[v].1)
            .min_by_key(|&v| dom[v].1 - dom[v].0);
        match branch {
            None => {
                let values: Vec<i64> = dom.iter().map(|d| d.0).collect();
                if self.satisfied(&values) {
                    visit(&values);
                }
            }
            Some(v) => {
                let (lo, hi) = dom[v];
                for x in lo..=hi {
                    let mut next = dom.clone();
                    next[v] = (x, x);
                    self.search(next, visit);
                }
            }
        }
    }

    fn run(&self, visit: &mut dyn FnMut(&[i64])) {
        self.search(vec![(-self.bound, self.bound); self.size], visit);
    }
}

/// Number of tail-positive integer arrays on `Y_r` whose line sums equal `w`.
pub fn count_tail_positive(w: &FundamentalWeightTriple) -> BigUint {
    let mut count: u64 = 0;
    LineSumSystem::new(w).run(&mut |_| count += 1);
    BigUint::from(count)
}

/// The arrays counted by [`count_tail_positive`], sorted by their value
/// vectors in canonical position order.
pub fn enumerate_tail_positive(w: &FundamentalWeightTriple) -> Vec<TriangleArray> {
    let r = w.rank();
    let mut out = Vec::new();
    LineSumSystem::new(w).run(&mut |values| {
        out.push(TriangleArray {
            r,
            values: values.to_vec(),
        })
    });
    out.sort();
    out
}
