//! Horn inequalities: the partitions `ρ(I)`, consistency of subset triples,
//! recursive generation of the inequality system, membership tests for the
//! cone and the semigroup, and the saturation scan.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::partition::{homogeneous_triples, Partition, PartitionTriple};
use crate::tableau::{lr_coefficient, lr_positive};
use crate::tail_cone::{parse_rational, SubsetTriple};

/// `ρ(I) = (i_s - s, …, i_2 - 2, i_1 - 1)` for `I = {i_1 < … < i_s}`.
pub fn rho(set: &[usize]) -> Result<Partition> {
    if set.is_empty() {
        return Err(Error::EmptySubset);
    }
    if set[0] == 0 {
        return Err(Error::IndexOutOfRange { index: 0, r: set.len() });
    }
    if set.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::UnsortedSubset);
    }
    let parts = set.iter().enumerate().rev().map(|(a, &i)| (i - a - 1) as u32).collect();
    Ok(Partition::from_sorted(parts))
}

/// `|ρ(I)|`.
pub(crate) fn rho_size(set: &[usize]) -> u64 {
    set.iter().enumerate().map(|(a, &i)| (i - a - 1) as u64).sum()
}

/// `(ρ(I), ρ(J), ρ(K))` at rank `s = |I|`.
pub fn rho_triple(st: &SubsetTriple) -> PartitionTriple {
    let part = |set: &[usize]| rho(set).expect("subset triple is validated");
    PartitionTriple::new(part(st.lambda_set()), part(st.mu_set()), part(st.nu_set())).expect("equal cardinalities")
}

/// `(ρ(I), ρ(J), ρ(K))` lies in the Littlewood-Richardson semigroup of rank `s`.
pub fn is_lr_consistent(st: &SubsetTriple) -> bool {
    lr_positive(&rho_triple(st))
}

/// `(ρ(I), ρ(J), ρ(K))` satisfies homogeneity and every inequality of the
/// recursively generated system at rank `s`.
pub fn is_he_consistent(st: &SubsetTriple) -> bool {
    let t = rho_triple(st);
    let facets = generate_facets(st.cardinality());
    cone_contains(&ConeQuery::from_partitions(&t), &facets).expect("ranks agree")
}

/// `|λ|_I <= |μ|_J + |ν|_K`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HornInequality {
    pub subsets: SubsetTriple,
}

impl HornInequality {
    pub fn new(subsets: SubsetTriple) -> Self {
        HornInequality { subsets }
    }

    pub fn rank(&self) -> usize {
        self.subsets.rank()
    }

    fn margin_with<T, F>(&self, lambda: &[T], mu: &[T], nu: &[T], sum: F) -> T
    where
        T: std::ops::Add<Output = T> + std::ops::Sub<Output = T>,
        F: Fn(&[T], &[usize]) -> T,
    {
        sum(mu, self.subsets.mu_set()) + sum(nu, self.subsets.nu_set()) - sum(lambda, self.subsets.lambda_set())
    }

    /// `|μ|_J + |ν|_K - |λ|_I`; the inequality holds iff this is `>= 0`.
    pub fn margin(&self, q: &ConeQuery) -> BigRational {
        self.margin_with(&q.lambda, &q.mu, &q.nu, |v, set| {
            set.iter().map(|&i| v[i - 1].clone()).sum()
        })
    }

    pub fn margin_f64(&self, lambda: &[f64], mu: &[f64], nu: &[f64]) -> f64 {
        self.margin_with(lambda, mu, nu, |v, set| set.iter().map(|&i| v[i - 1]).sum())
    }

    pub fn holds_for_partitions(&self, t: &PartitionTriple) -> bool {
        let sum = |p: &Partition, set: &[usize]| p.size_on(set).expect("indices within rank");
        sum(&t.lambda, self.subsets.lambda_set())
            <= sum(&t.mu, self.subsets.mu_set()) + sum(&t.nu, self.subsets.nu_set())
    }
}

/// Renders in the style `λ2+λ3 ≤ μ1+μ3+ν1+ν3`.
impl fmt::Display for HornInequality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side = |sym: &str, set: &[usize]| set.iter().map(|i| format!("{sym}{i}")).collect::<Vec<_>>().join("+");
        write!(
            f,
            "{} ≤ {}+{}",
            side("λ", self.subsets.lambda_set()),
            side("μ", self.subsets.mu_set()),
            side("ν", self.subsets.nu_set())
        )
    }
}

impl Serialize for HornInequality {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.subsets.serialize(serializer)
    }
}

/// Inequalities from every LR-consistent triple of cardinality
/// `1 <= s <= r - 1`, ordered by `s` and then lexicographically by
/// `(I, J, K)`. The homogeneity equality is not included.
pub fn generate_facets(r: usize) -> Vec<HornInequality> {
    (1..r)
        .flat_map(|s| SubsetTriple::all(r, s))
        .filter(is_lr_consistent)
        .map(HornInequality::new)
        .collect()
}

/// A point of `R^{3r}` given by three weakly decreasing rational vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConeQuery {
    lambda: Vec<BigRational>,
    mu: Vec<BigRational>,
    nu: Vec<BigRational>,
}

impl ConeQuery {
    pub fn new(lambda: Vec<BigRational>, mu: Vec<BigRational>, nu: Vec<BigRational>) -> Result<Self> {
        let r = lambda.len();
        if r == 0 {
            return Err(Error::ZeroRank);
        }
        for v in [&mu, &nu] {
            if v.len() != r {
                return Err(Error::RankMismatch {
                    expected: r,
                    found: v.len(),
                });
            }
        }
        for v in [&lambda, &mu, &nu] {
            if v.windows(2).any(|w| w[0] < w[1]) {
                return Err(Error::NotWeaklyDecreasing);
            }
        }
        Ok(ConeQuery { lambda, mu, nu })
    }

    pub fn from_partitions(t: &PartitionTriple) -> Self {
        let conv = |p: &Partition| {
            p.parts()
                .iter()
                .map(|&x| BigRational::from_integer(BigInt::from(x)))
                .collect()
        };
        ConeQuery {
            lambda: conv(&t.lambda),
            mu: conv(&t.mu),
            nu: conv(&t.nu),
        }
    }

    /// Parses three comma-separated lists of integers or fractions `p/q`.
    pub fn parse(lambda: &str, mu: &str, nu: &str) -> Result<Self> {
        let list = |s: &str| -> Result<Vec<BigRational>> {
            if s.trim().is_empty() {
                return Err(Error::Parse("empty list".into()));
            }
            s.split(',').map(parse_rational).collect()
        };
        ConeQuery::new(list(lambda)?, list(mu)?, list(nu)?)
    }

    pub fn rank(&self) -> usize {
        self.lambda.len()
    }

    pub fn lambda(&self) -> &[BigRational] {
        &self.lambda
    }

    pub fn mu(&self) -> &[BigRational] {
        &self.mu
    }

    pub fn nu(&self) -> &[BigRational] {
        &self.nu
    }

    /// Multiplies every coordinate by a positive rational.
    pub fn scaled(&self, c: &BigRational) -> ConeQuery {
        assert!(c.is_positive(), "scale factor must be positive");
        let mul = |v: &[BigRational]| v.iter().map(|x| x * c).collect();
        ConeQuery {
            lambda: mul(&self.lambda),
            mu: mul(&self.mu),
            nu: mul(&self.nu),
        }
    }

    /// The underlying partition triple when every entry is a nonnegative integer.
    pub fn to_partitions(&self) -> Option<PartitionTriple> {
        let conv = |v: &[BigRational]| -> Option<Partition> {
            let parts = v
                .iter()
                .map(|x| {
                    if x.is_integer() && !x.is_negative() {
                        i64::try_from(x.to_integer()).ok()
                    } else {
                        None
                    }
                })
                .collect::<Option<Vec<i64>>>()?;
            Partition::new(&parts, v.len()).ok()
        };
        PartitionTriple::new(conv(&self.lambda)?, conv(&self.mu)?, conv(&self.nu)?).ok()
    }
}

/// `|λ| = |μ| + |ν|` and every inequality in `facets` holds.
pub fn cone_contains(q: &ConeQuery, facets: &[HornInequality]) -> Result<bool> {
    if let Some(bad) = facets.iter().find(|f| f.rank() != q.rank()) {
        return Err(Error::RankMismatch {
            expected: q.rank(),
            found: bad.rank(),
        });
    }
    let total = |v: &[BigRational]| v.iter().sum::<BigRational>();
    if total(&q.lambda) != total(&q.mu) + total(&q.nu) {
        return Ok(false);
    }
    Ok(facets.iter().all(|f| !f.margin(q).is_negative()))
}

fn cone_contains_partitions(t: &PartitionTriple, facets: &[HornInequality]) -> bool {
    t.is_homogeneous() && facets.iter().all(|f| f.holds_for_partitions(t))
}

/// `c^λ_{μν} > 0`.
pub fn semigroup_contains(t: &PartitionTriple) -> bool {
    lr_positive(t)
}

/// A lattice point of the cone with vanishing coefficient.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SaturationCandidate {
    pub triple: PartitionTriple,
    /// `(N, c(Nλ; Nμ, Nν))` for `2 <= N <= max_stretch`.
    #[serde(serialize_with = "serialize_stretches")]
    pub stretched: Vec<(u32, BigUint)>,
}

impl SaturationCandidate {
    /// Some stretch has a positive coefficient although the triple itself does not.
    pub fn breaks_saturation(&self) -> bool {
        self.stretched.iter().any(|(_, c)| !c.is_zero())
    }
}

fn serialize_stretches<S: Serializer>(v: &[(u32, BigUint)], serializer: S) -> std::result::Result<S::Ok, S::Error> {
    #[derive(Serialize)]
    struct Entry {
        n: u32,
        coefficient: String,
    }
    serializer.collect_seq(v.iter().map(|(n, c)| Entry {
        n: *n,
        coefficient: c.to_string(),
    }))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SaturationReport {
    pub r: usize,
    pub max_weight: u32,
    pub max_stretch: u32,
    pub triples_scanned: u64,
    pub in_cone: u64,
    pub candidates: Vec<SaturationCandidate>,
}

impl SaturationReport {
    pub fn failures(&self) -> impl Iterator<Item = &SaturationCandidate> {
        self.candidates.iter().filter(|c| c.breaks_saturation())
    }
}

/// Scans every homogeneous triple of rank `r` with `|λ| <= max_weight` for
/// lattice points of the cone outside the semigroup, and stretches each one.
pub fn saturation_scan(r: usize, max_weight: u32, max_stretch: u32) -> SaturationReport {
    let facets = generate_facets(r);
    let triples: Vec<PartitionTriple> = (0..=max_weight).flat_map(|n| homogeneous_triples(n, r)).collect();
    let results: Vec<(bool, Option<SaturationCandidate>)> = triples
        .par_iter()
        .map(|t| {
            if !cone_contains_partitions(t, &facets) {
                return (false, None);
            }
            if lr_positive(t) {
                return (true, None);
            }
            let stretched = (2..=max_stretch).map(|n| (n, lr_coefficient(&t.scaled(n)))).collect();
            (
                true,
                Some(SaturationCandidate {
                    triple: t.clone(),
                    stretched,
                }),
            )
        })
        .collect();
    let in_cone = results.iter().filter(|(c, _)| *c).count() as u64;
    let candidates = results.into_iter().filter_map(|(_, c)| c).collect();
    SaturationReport {
        r,
        max_weight,
        max_stretch,
        triples_scanned: triples.len() as u64,
        in_cone,
        candidates,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn st(r: usize, a: &[usize], b: &[usize], c: &[usize]) -> SubsetTriple {
        SubsetTriple::new(r, a.to_vec(), b.to_vec(), c.to_vec()).unwrap()
    }

    fn triple(l: &[i64], m: &[i64], n: &[i64], r: usize) -> PartitionTriple {
        PartitionTriple::from_slices(l, m, n, r).unwrap()
    }

    #[test]
    fn rho_examples() {
        assert_eq!(rho(&[2, 3]).unwrap().parts(), &[1, 1]);
        assert_eq!(rho(&[1, 3]).unwrap().parts(), &[1, 0]);
        assert_eq!(rho(&[1, 2, 3, 4]).unwrap(), Partition::zero(4));
        assert_eq!(rho(&[]), Err(Error::EmptySubset));
        assert_eq!(rho(&[3, 1]), Err(Error::UnsortedSubset));
        assert_eq!(rho_size(&[2, 4, 7]), 1 + 2 + 4);
    }

    #[test]
    fn consistency_examples() {
        assert!(is_lr_consistent(&st(3, &[2, 3], &[1, 3], &[1, 3])));
        assert!(is_lr_consistent(&st(1, &[1], &[1], &[1])));
        assert!(!is_lr_consistent(&st(3, &[3], &[1], &[1])));
        assert!(is_he_consistent(&st(3, &[2, 3], &[1, 3], &[1, 3])));
        assert!(is_he_consistent(&st(1, &[1], &[1], &[1])));
        assert!(!is_he_consistent(&st(3, &[3], &[1], &[1])));
    }

    #[test]
    fn small_facet_lists() {
        assert!(generate_facets(1).is_empty());
        let text: Vec<String> = generate_facets(2).iter().map(|f| f.to_string()).collect();
        assert_eq!(text, ["λ1 ≤ μ1+ν1", "λ2 ≤ μ1+ν2", "λ2 ≤ μ2+ν1"]);
        let r3 = generate_facets(3);
        assert_eq!(r3.len(), 12);
        assert!(r3.iter().any(|f| f.to_string() == "λ2+λ3 ≤ μ1+μ3+ν1+ν3"));
    }

    #[test]
    fn membership_examples() {
        let facets = generate_facets(3);
        let q = |l: &[i64], m: &[i64], n: &[i64], r| ConeQuery::from_partitions(&triple(l, m, n, r));
        assert!(cone_contains(&q(&[2, 1, 0], &[1, 1, 0], &[1, 0, 0], 3), &facets).unwrap());
        assert!(!cone_contains(&q(&[2, 2, 0], &[1, 1, 0], &[1, 0, 0], 3), &facets).unwrap());
        assert!(cone_contains(&q(&[1, 1], &[1, 0], &[1, 0], 2), &generate_facets(2)).unwrap());
        assert!(cone_contains(&q(&[1, 1], &[1, 0], &[1, 0], 2), &facets).is_err());

        assert!(semigroup_contains(&triple(&[1, 1], &[1, 0], &[1, 0], 2)));
        assert!(!semigroup_contains(&triple(&[2, 2, 0], &[1, 1, 0], &[1, 0, 0], 3)));
        assert!(semigroup_contains(&triple(&[4, 1], &[4, 1], &[0, 0], 2)));
    }

    #[test]
    fn rational_queries() {
        let q = ConeQuery::parse("1/2,-1", "1/2,-1/2", "0,-1/2").unwrap();
        assert!(cone_contains(&q, &generate_facets(2)).unwrap());
        assert!(q.to_partitions().is_none());
        assert_eq!(ConeQuery::parse("1,2", "0,0", "0,0"), Err(Error::NotWeaklyDecreasing));
        assert!(ConeQuery::parse("1", "1,0", "0").is_err());
        assert!(ConeQuery::parse("a", "1", "0").is_err());
        assert!(ConeQuery::parse("1", "1", "0/0").is_err());
        let p = ConeQuery::parse("2,1", "1,1", "1,0").unwrap().to_partitions().unwrap();
        assert_eq!(p, triple(&[2, 1], &[1, 1], &[1, 0], 2));
    }

    #[test]
    fn saturation_small() {
        let report = saturation_scan(2, 8, 4);
        assert!(report.candidates.is_empty());
        assert!(report.in_cone > 0);
        let report = saturation_scan(1, 6, 3);
        assert!(report.candidates.is_empty());
        assert_eq!(report.in_cone, report.triples_scanned);
    }

    #[test]
    fn json_shapes() {
        let f = HornInequality::new(st(3, &[2, 3], &[1, 3], &[1, 3]));
        assert_eq!(serde_json::to_string(&f).unwrap(), r#"{"I":[2,3],"J":[1,3],"K":[1,3]}"#);
    }
}
