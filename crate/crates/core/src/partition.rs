//! Partitions of bounded length, weight triples, and the passage between
//! `GL_r` highest weights and `SL_r` fundamental-weight coordinates.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A weakly decreasing vector of nonnegative integers, zero-padded to its
/// ambient length `r`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    /// Validates `parts` and pads it with zeros to length `r`.
    ///
    /// Trailing zeros beyond `r` are accepted and dropped; nonzero parts
    /// beyond `r` are not.
    pub fn new(parts: &[i64], r: usize) -> Result<Self> {
        if r == 0 {
            return Err(Error::ZeroRank);
        }
        if let Some(&p) = parts.iter().find(|&&p| p < 0) {
            return Err(Error::NegativePart(p));
        }
        if let Some(&p) = parts.iter().find(|&&p| p > u32::MAX as i64) {
            return Err(Error::PartTooLarge(p));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotWeaklyDecreasing);
        }
        let nonzero = parts.iter().filter(|&&p| p > 0).count();
        if nonzero > r {
            return Err(Error::TooManyParts { nonzero, r });
        }
        let mut out: Vec<u32> = parts.iter().take(r).map(|&p| p as u32).collect();
        out.resize(r, 0);
        Ok(Partition { parts: out })
    }

    pub fn zero(r: usize) -> Self {
        Partition { parts: vec![0; r] }
    }

    /// Internal constructor for vectors already known to be weakly decreasing.
    pub(crate) fn from_sorted(parts: Vec<u32>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        Partition { parts }
    }

    pub fn rank(&self) -> usize {
        self.parts.len()
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// `|λ|`.
    pub fn size(&self) -> u64 {
        self.parts.iter().map(|&p| p as u64).sum()
    }

    /// `|λ|_I` for a set of 1-based indices `I ⊆ [1, r]`.
    pub fn size_on(&self, subset: &[usize]) -> Result<u64> {
        let r = self.rank();
        subset.iter().try_fold(0u64, |acc, &i| {
            if i == 0 || i > r {
                Err(Error::IndexOutOfRange { index: i, r })
            } else {
                Ok(acc + self.parts[i - 1] as u64)
            }
        })
    }

    /// True when the Young diagram of `inner` fits inside that of `self`.
    pub fn contains(&self, inner: &Partition) -> bool {
        self.rank() == inner.rank() && self.parts.iter().zip(&inner.parts).all(|(a, b)| a >= b)
    }

    pub fn is_zero(&self) -> bool {
        self.parts.iter().all(|&p| p == 0)
    }

    pub fn scaled(&self, n: u32) -> Partition {
        Partition {
            parts: self
                .parts
                .iter()
                .map(|&p| p.checked_mul(n).expect("part overflow"))
                .collect(),
        }
    }

    pub fn add(&self, other: &Partition) -> Result<Partition> {
        check_rank(self.rank(), other.rank())?;
        Ok(Partition {
            parts: self.parts.iter().zip(&other.parts).map(|(a, b)| a + b).collect(),
        })
    }
}

fn check_rank(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::RankMismatch { expected, found })
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (idx, p) in self.parts.iter().enumerate() {
            if idx > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

/// Parses "2,1,0"; the ambient length is the number of listed parts.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let parts = parse_int_list(s)?;
        Partition::new(&parts, parts.len())
    }
}

pub(crate) fn parse_int_list(s: &str) -> Result<Vec<i64>> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::Parse("empty list".into()));
    }
    s.split(',')
        .map(|tok| {
            let tok = tok.trim();
            tok.parse::<i64>()
                .map_err(|_| Error::Parse(format!("not an integer: {tok:?}")))
        })
        .collect()
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// `(λ, μ, ν)` with a shared ambient length; `c^λ_{μν}` is the quantity of interest.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawTriple")]
pub struct PartitionTriple {
    pub lambda: Partition,
    pub mu: Partition,
    pub nu: Partition,
}

#[derive(Deserialize)]
struct RawTriple {
    lambda: Partition,
    mu: Partition,
    nu: Partition,
}

impl TryFrom<RawTriple> for PartitionTriple {
    type Error = Error;

    fn try_from(raw: RawTriple) -> Result<Self> {
        PartitionTriple::new(raw.lambda, raw.mu, raw.nu)
    }
}

impl PartitionTriple {
    pub fn new(lambda: Partition, mu: Partition, nu: Partition) -> Result<Self> {
        check_rank(lambda.rank(), mu.rank())?;
        check_rank(lambda.rank(), nu.rank())?;
        Ok(PartitionTriple { lambda, mu, nu })
    }

    /// Convenience constructor from raw slices, all padded to rank `r`.
    pub fn from_slices(lambda: &[i64], mu: &[i64], nu: &[i64], r: usize) -> Result<Self> {
        PartitionTriple::new(
            Partition::new(lambda, r)?,
            Partition::new(mu, r)?,
            Partition::new(nu, r)?,
        )
    }

    pub fn rank(&self) -> usize {
        self.lambda.rank()
    }

    /// `|λ| = |μ| + |ν|`.
    pub fn is_homogeneous(&self) -> bool {
        self.lambda.size() == self.mu.size() + self.nu.size()
    }

    pub fn add(&self, other: &PartitionTriple) -> Result<PartitionTriple> {
        Ok(PartitionTriple {
            lambda: self.lambda.add(&other.lambda)?,
            mu: self.mu.add(&other.mu)?,
            nu: self.nu.add(&other.nu)?,
        })
    }

    /// `(Nλ, Nμ, Nν)`.
    pub fn scaled(&self, n: u32) -> PartitionTriple {
        PartitionTriple {
            lambda: self.lambda.scaled(n),
            mu: self.mu.scaled(n),
            nu: self.nu.scaled(n),
        }
    }

    /// The same triple at rank `r + 1`, each partition gaining a zero part.
    pub fn embed(&self) -> PartitionTriple {
        let grow = |p: &Partition| {
            let mut parts = p.parts.clone();
            parts.push(0);
            Partition { parts }
        };
        PartitionTriple {
            lambda: grow(&self.lambda),
            mu: grow(&self.mu),
            nu: grow(&self.nu),
        }
    }

    /// Inverse of [`embed`](Self::embed); fails unless all three last parts vanish.
    pub fn restrict(&self) -> Result<PartitionTriple> {
        let r = self.rank();
        if r < 2 {
            return Err(Error::ZeroRank);
        }
        let last = |p: &Partition| p.parts[r - 1];
        if last(&self.lambda) != 0 || last(&self.mu) != 0 || last(&self.nu) != 0 {
            return Err(Error::NonzeroLastPart);
        }
        let shrink = |p: &Partition| Partition {
            parts: p.parts[..r - 1].to_vec(),
        };
        Ok(PartitionTriple {
            lambda: shrink(&self.lambda),
            mu: shrink(&self.mu),
            nu: shrink(&self.nu),
        })
    }

    /// Fundamental-weight coordinates:
    /// `l_s = λ_{r-s} - λ_{r-s+1}`, `m_s = μ_s - μ_{s+1}`, `n_s = ν_s - ν_{s+1}`.
    ///
    /// `λ` enters through its dual, so `c^λ_{μν}` equals the invariant count
    /// of the resulting weight triple.
    pub fn to_fundamental(&self) -> Result<FundamentalWeightTriple> {
        if !self.is_homogeneous() {
            return Err(Error::NotHomogeneous {
                lambda: self.lambda.size(),
                mu_nu: self.mu.size() + self.nu.size(),
            });
        }
        let r = self.rank();
        let diffs = |p: &[u32]| -> Vec<u32> { p.windows(2).map(|w| w[0] - w[1]).collect() };
        let mut l = diffs(&self.lambda.parts);
        l.reverse();
        Ok(FundamentalWeightTriple {
            l: FundamentalWeight { coords: l, rank: r },
            m: FundamentalWeight {
                coords: diffs(&self.mu.parts),
                rank: r,
            },
            n: FundamentalWeight {
                coords: diffs(&self.nu.parts),
                rank: r,
            },
        })
    }

    /// Inverse of [`to_fundamental`](Self::to_fundamental) given the last
    /// parts `(λ_r, μ_r, ν_r)` that the differences forget.
    pub fn from_fundamental(w: &FundamentalWeightTriple, last: [u32; 3]) -> Result<PartitionTriple> {
        let rebuild = |diffs: &[u32], base: u32| -> Partition {
            // parts[i] = base + sum of diffs[i..]
            let mut parts = vec![base; diffs.len() + 1];
            for i in (0..diffs.len()).rev() {
                parts[i] = parts[i + 1] + diffs[i];
            }
            Partition { parts }
        };
        let mut l = w.l.coords.clone();
        l.reverse();
        let t = PartitionTriple {
            lambda: rebuild(&l, last[0]),
            mu: rebuild(&w.m.coords, last[1]),
            nu: rebuild(&w.n.coords, last[2]),
        };
        if !t.is_homogeneous() {
            return Err(Error::NotHomogeneous {
                lambda: t.lambda.size(),
                mu_nu: t.mu.size() + t.nu.size(),
            });
        }
        Ok(t)
    }
}

impl fmt::Display for PartitionTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(({}), ({}), ({}))", self.lambda, self.mu, self.nu)
    }
}

/// Coordinates `(l_1, …, l_{r-1})` of a dominant `SL_r` weight in the
/// fundamental-weight basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FundamentalWeight {
    coords: Vec<u32>,
    rank: usize,
}

impl FundamentalWeight {
    pub fn new(coords: Vec<u32>, r: usize) -> Result<Self> {
        if r == 0 {
            return Err(Error::ZeroRank);
        }
        check_rank(r - 1, coords.len())?;
        Ok(FundamentalWeight { coords, rank: r })
    }

    pub fn zero(r: usize) -> Self {
        FundamentalWeight {
            coords: vec![0; r.saturating_sub(1)],
            rank: r,
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn coords(&self) -> &[u32] {
        &self.coords
    }

    /// `s`-th coordinate, `1 <= s <= r - 1`.
    pub fn coord(&self, s: usize) -> u32 {
        self.coords[s - 1]
    }

    /// The dual weight: coordinate `s` becomes coordinate `r - s`.
    pub fn dual(&self) -> FundamentalWeight {
        let mut coords = self.coords.clone();
        coords.reverse();
        FundamentalWeight {
            coords,
            rank: self.rank,
        }
    }

    pub fn add(&self, other: &FundamentalWeight) -> Result<FundamentalWeight> {
        check_rank(self.rank, other.rank)?;
        Ok(FundamentalWeight {
            coords: self.coords.iter().zip(&other.coords).map(|(a, b)| a + b).collect(),
            rank: self.rank,
        })
    }

    /// `Σ_s s·coord_s`, the weight's class modulo the root lattice up to a factor.
    fn level(&self) -> u64 {
        self.coords
            .iter()
            .enumerate()
            .map(|(i, &c)| (i as u64 + 1) * c as u64)
            .sum()
    }

    pub fn total(&self) -> u64 {
        self.coords.iter().map(|&c| c as u64).sum()
    }
}

/// `(λ̄, μ̄, ν̄)` of common rank.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FundamentalWeightTriple {
    pub l: FundamentalWeight,
    pub m: FundamentalWeight,
    pub n: FundamentalWeight,
}

impl FundamentalWeightTriple {
    pub fn new(l: FundamentalWeight, m: FundamentalWeight, n: FundamentalWeight) -> Result<Self> {
        check_rank(l.rank, m.rank)?;
        check_rank(l.rank, n.rank)?;
        Ok(FundamentalWeightTriple { l, m, n })
    }

    pub fn from_coords(l: &[u32], m: &[u32], n: &[u32], r: usize) -> Result<Self> {
        FundamentalWeightTriple::new(
            FundamentalWeight::new(l.to_vec(), r)?,
            FundamentalWeight::new(m.to_vec(), r)?,
            FundamentalWeight::new(n.to_vec(), r)?,
        )
    }

    pub fn zero(r: usize) -> Self {
        FundamentalWeightTriple {
            l: FundamentalWeight::zero(r),
            m: FundamentalWeight::zero(r),
            n: FundamentalWeight::zero(r),
        }
    }

    pub fn rank(&self) -> usize {
        self.l.rank
    }

    pub fn weights(&self) -> [&FundamentalWeight; 3] {
        [&self.l, &self.m, &self.n]
    }

    /// True iff `λ̄ + μ̄ + ν̄` lies in the root lattice, i.e.
    /// `Σ_s s(l_s + m_s + n_s) ≡ 0 (mod r)`.
    pub fn is_radical(&self) -> bool {
        let level = self.l.level() + self.m.level() + self.n.level();
        level.is_multiple_of(self.rank() as u64)
    }

    /// Dualizes all three weights simultaneously.
    pub fn dual(&self) -> FundamentalWeightTriple {
        FundamentalWeightTriple {
            l: self.l.dual(),
            m: self.m.dual(),
            n: self.n.dual(),
        }
    }

    /// Reorders the weights: slot `i` of the result holds weight `perm[i]`.
    pub fn permuted(&self, perm: [usize; 3]) -> FundamentalWeightTriple {
        let w = self.weights();
        FundamentalWeightTriple {
            l: w[perm[0]].clone(),
            m: w[perm[1]].clone(),
            n: w[perm[2]].clone(),
        }
    }

    /// Images under the 12-element group generated by permutations of the
    /// three weights and simultaneous dualization.
    pub fn symmetry_orbit(&self) -> Vec<FundamentalWeightTriple> {
        const PERMS: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
        let dual = self.dual();
        PERMS
            .iter()
            .flat_map(|&p| [self.permuted(p), dual.permuted(p)])
            .collect()
    }

    pub fn add(&self, other: &FundamentalWeightTriple) -> Result<FundamentalWeightTriple> {
        Ok(FundamentalWeightTriple {
            l: self.l.add(&other.l)?,
            m: self.m.add(&other.m)?,
            n: self.n.add(&other.n)?,
        })
    }
}

/// All partitions of `n` with at most `r` parts, zero-padded to length `r`,
/// in reverse lexicographic order.
pub fn partitions_of(n: u32, r: usize) -> Vec<Partition> {
    fn rec(n: u32, slots: usize, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if slots == 0 {
            if n == 0 {
                out.push(Partition::from_sorted(cur.clone()));
            }
            return;
        }
        // remaining slots can absorb at most slots * max
        if n as u64 > slots as u64 * max as u64 {
            return;
        }
        for p in (0..=n.min(max)).rev() {
            cur.push(p);
            rec(n - p, slots - 1, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, r, n, &mut Vec::with_capacity(r), &mut out);
    out
}

/// Every homogeneous triple of rank `r` with `|λ| = n`.
pub fn homogeneous_triples(n: u32, r: usize) -> Vec<PartitionTriple> {
    let lambdas = partitions_of(n, r);
    let mut out = Vec::new();
    for a in 0..=n {
        let mus = partitions_of(a, r);
        let nus = partitions_of(n - a, r);
        for lambda in &lambdas {
            for mu in &mus {
                for nu in &nus {
                    out.push(PartitionTriple {
                        lambda: lambda.clone(),
                        mu: mu.clone(),
                        nu: nu.clone(),
                    });
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[i64], r: usize) -> Partition {
        Partition::new(parts, r).unwrap()
    }

    #[test]
    fn make_partition_pads_and_validates() {
        assert_eq!(p(&[2, 1], 3).parts(), &[2, 1, 0]);
        assert_eq!(Partition::new(&[1, 2], 2), Err(Error::NotWeaklyDecreasing));
        assert_eq!(p(&[], 1).parts(), &[0]);
        assert_eq!(Partition::new(&[1, -1], 2), Err(Error::NegativePart(-1)));
        assert_eq!(
            Partition::new(&[1, 1, 1], 2),
            Err(Error::TooManyParts { nonzero: 3, r: 2 })
        );
        assert_eq!(p(&[3, 0, 0, 0], 2).parts(), &[3, 0]);
        assert_eq!(Partition::new(&[1], 0), Err(Error::ZeroRank));
    }

    #[test]
    fn sizes() {
        let lam = p(&[2, 1, 0], 3);
        assert_eq!(lam.size_on(&[1, 3]).unwrap(), 2);
        assert_eq!(lam.size_on(&[1, 2, 3]).unwrap(), 3);
        assert_eq!(lam.size(), 3);
        assert_eq!(Partition::zero(4).size_on(&[2, 4]).unwrap(), 0);
        assert_eq!(lam.size_on(&[4]), Err(Error::IndexOutOfRange { index: 4, r: 3 }));
        assert_eq!(lam.size_on(&[0]), Err(Error::IndexOutOfRange { index: 0, r: 3 }));
    }

    #[test]
    fn to_fundamental_examples() {
        let t = PartitionTriple::from_slices(&[2, 1, 0], &[1, 1, 0], &[1, 0, 0], 3).unwrap();
        let w = t.to_fundamental().unwrap();
        assert_eq!(w.l.coords(), &[1, 1]);
        assert_eq!(w.m.coords(), &[0, 1]);
        assert_eq!(w.n.coords(), &[1, 0]);

        let t = PartitionTriple::from_slices(&[1, 1], &[1, 0], &[1, 0], 2).unwrap();
        let w = t.to_fundamental().unwrap();
        assert_eq!(
            (w.l.coords(), w.m.coords(), w.n.coords()),
            (&[0][..], &[1][..], &[1][..])
        );

        let lam = [5, 3, 3, 1];
        let t = PartitionTriple::from_slices(&lam, &lam, &[], 4).unwrap();
        let w = t.to_fundamental().unwrap();
        for s in 1..4 {
            assert_eq!(w.m.coord(s), w.l.coord(4 - s));
        }
        assert_eq!(w.n, FundamentalWeight::zero(4));

        let bad = PartitionTriple::from_slices(&[2], &[1], &[0], 1).unwrap();
        assert!(matches!(bad.to_fundamental(), Err(Error::NotHomogeneous { .. })));
    }

    #[test]
    fn radical_weights() {
        let w = FundamentalWeightTriple::from_coords(&[1], &[1], &[2], 2).unwrap();
        assert!(w.is_radical());
        let w = FundamentalWeightTriple::from_coords(&[1], &[1], &[1], 2).unwrap();
        assert!(!w.is_radical());
        for r in 1..6 {
            assert!(FundamentalWeightTriple::zero(r).is_radical());
        }
    }

    #[test]
    fn dualize() {
        let w = FundamentalWeight::new(vec![1, 2], 3).unwrap();
        assert_eq!(w.dual().coords(), &[2, 1]);
        let w = FundamentalWeight::new(vec![5], 2).unwrap();
        assert_eq!(w.dual(), w);
        let w = FundamentalWeight::new(vec![4, 0, 7, 1], 5).unwrap();
        assert_eq!(w.dual().dual(), w);
        assert!(FundamentalWeight::new(vec![1], 3).is_err());
    }

    #[test]
    fn embed_and_restrict() {
        let t = PartitionTriple::from_slices(&[1, 1], &[1, 0], &[1, 0], 2).unwrap();
        let e = t.embed();
        assert_eq!(
            e,
            PartitionTriple::from_slices(&[1, 1, 0], &[1, 0, 0], &[1, 0, 0], 3).unwrap()
        );
        assert_eq!(e.restrict().unwrap(), t);
        let full = PartitionTriple::from_slices(&[1, 1, 1], &[1, 1, 0], &[1, 0, 0], 3).unwrap();
        assert_eq!(full.restrict(), Err(Error::NonzeroLastPart));
    }

    #[test]
    fn serialization_format() {
        let t = PartitionTriple::from_slices(&[2, 1], &[1, 1], &[1], 3).unwrap();
        assert_eq!(t.lambda.to_string(), "2,1,0");
        let json = serde_json::to_string(&t).unwrap();
        assert_eq!(json, r#"{"lambda":"2,1,0","mu":"1,1,0","nu":"1,0,0"}"#);
        let back: PartitionTriple = serde_json::from_str(&json).unwrap();
        assert_eq!(back, t);
        assert!(serde_json::from_str::<PartitionTriple>(r#"{"lambda":"1","mu":"1,0","nu":"0,0"}"#).is_err());
        assert!("1,x".parse::<Partition>().is_err());
        assert!("".parse::<Partition>().is_err());
    }

    #[test]
    fn enumerates_partitions() {
        assert_eq!(partitions_of(4, 4).len(), 5);
        assert_eq!(partitions_of(4, 2).len(), 3);
        assert_eq!(partitions_of(0, 3), vec![Partition::zero(3)]);
        // brute force count of homogeneous triples for tiny bounds
        let n = 3;
        let r = 2;
        let mut brute = 0;
        for l1 in 0..=n {
            for l2 in 0..=l1 {
                for m1 in 0..=n {
                    for m2 in 0..=m1 {
                        for n1 in 0..=n {
                            for n2 in 0..=n1 {
                                if l1 + l2 == n && m1 + m2 + n1 + n2 == n {
                                    brute += 1;
                                }
                            }
                        }
                    }
                }
            }
        }
        assert_eq!(homogeneous_triples(n, r).len(), brute);
    }
}
