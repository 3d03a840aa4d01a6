//! Linear forms on `R^{Y_r}`, membership in the cone spanned by the tails,
//! and the tail-positivity test for subset triples.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::hive::{grid_size, position_index, positions, Direction, TailId, TriangleArray, TrianglePosition};
use crate::simplex::feasible_point;

/// A linear form on `R^{Y_r}` with exact rational coefficients, stored in
/// canonical position order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearForm {
    r: usize,
    coeffs: Vec<BigRational>,
}

impl LinearForm {
    pub fn zero(r: usize) -> Self {
        LinearForm {
            r,
            coeffs: vec![BigRational::zero(); grid_size(r)],
        }
    }

    pub fn from_integers(r: usize, coeffs: &[i64]) -> Result<Self> {
        Self::from_rationals(
            r,
            coeffs
                .iter()
                .map(|&c| BigRational::from_integer(BigInt::from(c)))
                .collect(),
        )
    }

    pub fn from_rationals(r: usize, coeffs: Vec<BigRational>) -> Result<Self> {
        if coeffs.len() != grid_size(r) {
            return Err(Error::RankMismatch {
                expected: grid_size(r),
                found: coeffs.len(),
            });
        }
        Ok(LinearForm { r, coeffs })
    }

    /// The coordinate form `y ↦ y_p`.
    pub fn coordinate(r: usize, p: TrianglePosition) -> Option<Self> {
        let idx = position_index(r, p)?;
        let mut f = LinearForm::zero(r);
        f.coeffs[idx] = BigRational::one();
        Some(f)
    }

    /// The tail `id` as a 0/1 form.
    pub fn tail(r: usize, id: TailId) -> Self {
        let mut f = LinearForm::zero(r);
        for p in id.positions(r) {
            f.coeffs[position_index(r, p).expect("tail positions lie in Y_r")] = BigRational::one();
        }
        f
    }

    pub fn rank(&self) -> usize {
        self.r
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, p: TrianglePosition) -> Option<&BigRational> {
        position_index(self.r, p).map(|idx| &self.coeffs[idx])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    pub fn evaluate(&self, y: &TriangleArray) -> BigRational {
        self.coeffs
            .iter()
            .zip(y.values())
            .map(|(c, &v)| c * BigRational::from_integer(BigInt::from(v)))
            .sum()
    }

    fn add_scaled(&mut self, other: &LinearForm, factor: &BigRational) {
        for (a, b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *a += b * factor;
        }
    }
}

impl fmt::Display for LinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (p, c) in positions(self.r).into_iter().zip(&self.coeffs) {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() {
                "-"
            } else if first {
                ""
            } else {
                "+"
            };
            let mag = c.abs();
            if mag.is_one() {
                write!(f, "{sign}y{}{}{}", p.i, p.j, p.k)?;
            } else {
                write!(f, "{sign}{mag}*y{}{}{}", p.i, p.j, p.k)?;
            }
            first = false;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// One member of the tail basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TailForm {
    pub id: TailId,
    pub form: LinearForm,
    /// The first earlier tail with the identical form, if any.
    pub duplicate_of: Option<TailId>,
}

/// All tails of rank `r` in [`TailId::all`] order, including zero and
/// repeated forms.
pub fn tails_basis(r: usize) -> Vec<TailForm> {
    let mut out: Vec<TailForm> = Vec::new();
    for id in TailId::all(r) {
        let form = LinearForm::tail(r, id);
        let duplicate_of = out.iter().find(|t| t.form == form).map(|t| t.id);
        out.push(TailForm { id, form, duplicate_of });
    }
    out
}

/// Nonnegative multipliers expressing a form as a combination of tails.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct TailCertificate {
    pub combination: Vec<(TailId, BigRational)>,
}

impl TailCertificate {
    /// `Σ coeff · tail`.
    pub fn expand(&self, r: usize) -> LinearForm {
        let mut f = LinearForm::zero(r);
        for (id, c) in &self.combination {
            f.add_scaled(&LinearForm::tail(r, *id), c);
        }
        f
    }

    /// Every multiplier is nonnegative and the expansion reproduces `f`.
    pub fn certifies(&self, f: &LinearForm) -> bool {
        self.combination.iter().all(|(_, c)| !c.is_negative()) && self.expand(f.rank()) == *f
    }
}

#[derive(Serialize, Deserialize)]
struct CertificateEntry {
    dir: String,
    t: usize,
    s: usize,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct CertificateRepr {
    tails: Vec<CertificateEntry>,
}

fn rational_string(q: &BigRational) -> String {
    format!("{}/{}", q.numer(), q.denom())
}

pub(crate) fn parse_rational(s: &str) -> Result<BigRational> {
    let bad = || Error::Parse(format!("not a rational: {s:?}"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s.trim(), "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(num, den))
}

impl Serialize for TailCertificate {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        CertificateRepr {
            tails: self
                .combination
                .iter()
                .map(|(id, c)| CertificateEntry {
                    dir: id.dir.as_str().to_string(),
                    t: id.t,
                    s: id.s,
                    coeff: rational_string(c),
                })
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for TailCertificate {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let repr = CertificateRepr::deserialize(deserializer)?;
        let combination = repr
            .tails
            .into_iter()
            .map(|e| {
                let dir: Direction = e.dir.parse().map_err(D::Error::custom)?;
                let c = parse_rational(&e.coeff).map_err(D::Error::custom)?;
                if e.t > e.s {
                    return Err(D::Error::custom(format!("tail ({}, {}) has t > s", e.t, e.s)));
                }
                Ok((TailId { dir, t: e.t, s: e.s }, c))
            })
            .collect::<std::result::Result<_, _>>()?;
        Ok(TailCertificate { combination })
    }
}

/// Decides whether `f` is a nonnegative rational combination of tails and,
/// if so, returns a certificate.
pub fn is_tail_positive_form(f: &LinearForm) -> Option<TailCertificate> {
    let r = f.rank();
    if f.is_zero() {
        return Some(TailCertificate::default());
    }
    // distinct nonzero tails are the only useful columns
    let columns: Vec<TailForm> = tails_basis(r)
        .into_iter()
        .filter(|t| t.duplicate_of.is_none() && !t.form.is_zero())
        .collect();
    let rows: Vec<Vec<BigRational>> = (0..grid_size(r))
        .map(|p| columns.iter().map(|t| t.form.coeffs[p].clone()).collect())
        .collect();
    let x = feasible_point(&rows, &f.coeffs, columns.len())?;
    let combination = columns
        .iter()
        .zip(x)
        .filter(|(_, c)| !c.is_zero())
        .map(|(t, c)| (t.id, c))
        .collect();
    Some(TailCertificate { combination })
}

/// The tail that is the single coordinate `y_p`, for `p` on an edge of the
/// big triangle. Interior coordinates are not tails.
pub fn boundary_tail(r: usize, p: TrianglePosition) -> Option<TailId> {
    if !p.in_grid(r) {
        return None;
    }
    if p.k == 0 {
        Some(TailId {
            dir: Direction::L,
            t: p.j,
            s: p.j,
        })
    } else if p.i == 0 {
        Some(TailId {
            dir: Direction::M,
            t: p.k,
            s: p.k,
        })
    } else if p.j == 0 {
        Some(TailId {
            dir: Direction::N,
            t: p.i,
            s: p.i,
        })
    } else {
        None
    }
}

/// Direct certificate for a form with nonnegative coefficients supported on
/// the boundary of `Y_r`.
pub fn boundary_certificate(f: &LinearForm) -> Option<TailCertificate> {
    if !f.is_nonnegative() {
        return None;
    }
    let r = f.rank();
    positions(r)
        .into_iter()
        .zip(&f.coeffs)
        .filter(|(_, c)| !c.is_zero())
        .map(|(p, c)| boundary_tail(r, p).map(|id| (id, c.clone())))
        .collect::<Option<Vec<_>>>()
        .map(|combination| TailCertificate { combination })
}

/// Three subsets of `[1, r]` of a common cardinality, each strictly increasing.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubsetTriple {
    r: usize,
    lambda_set: Vec<usize>,
    mu_set: Vec<usize>,
    nu_set: Vec<usize>,
}

fn check_subset(set: &[usize], r: usize) -> Result<()> {
    if set.is_empty() {
        return Err(Error::EmptySubset);
    }
    if let Some(&bad) = set.iter().find(|&&x| x == 0 || x > r) {
        return Err(Error::IndexOutOfRange { index: bad, r });
    }
    if set.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::UnsortedSubset);
    }
    Ok(())
}

impl SubsetTriple {
    pub fn new(r: usize, lambda_set: Vec<usize>, mu_set: Vec<usize>, nu_set: Vec<usize>) -> Result<Self> {
        for set in [&lambda_set, &mu_set, &nu_set] {
            check_subset(set, r)?;
        }
        if lambda_set.len() != mu_set.len() || lambda_set.len() != nu_set.len() {
            return Err(Error::CardinalityMismatch);
        }
        Ok(SubsetTriple {
            r,
            lambda_set,
            mu_set,
            nu_set,
        })
    }

    pub fn rank(&self) -> usize {
        self.r
    }

    pub fn cardinality(&self) -> usize {
        self.lambda_set.len()
    }

    /// `I`, indexing λ.
    pub fn lambda_set(&self) -> &[usize] {
        &self.lambda_set
    }

    /// `J`, indexing μ.
    pub fn mu_set(&self) -> &[usize] {
        &self.mu_set
    }

    /// `K`, indexing ν.
    pub fn nu_set(&self) -> &[usize] {
        &self.nu_set
    }

    /// All triples of `s`-subsets of `[1, r]`, lexicographic in `(I, J, K)`.
    pub fn all(r: usize, s: usize) -> Vec<SubsetTriple> {
        let subsets = k_subsets(r, s);
        let mut out = Vec::with_capacity(subsets.len().pow(3));
        for a in &subsets {
            for b in &subsets {
                for c in &subsets {
                    out.push(SubsetTriple {
                        r,
                        lambda_set: a.clone(),
                        mu_set: b.clone(),
                        nu_set: c.clone(),
                    });
                }
            }
        }
        out
    }
}

impl Serialize for SubsetTriple {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = serializer.serialize_struct("SubsetTriple", 3)?;
        st.serialize_field("I", &self.lambda_set)?;
        st.serialize_field("J", &self.mu_set)?;
        st.serialize_field("K", &self.nu_set)?;
        st.end()
    }
}

impl fmt::Display for SubsetTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let set = |s: &[usize]| s.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        write!(
            f,
            "({{{}}}, {{{}}}, {{{}}})",
            set(&self.lambda_set),
            set(&self.mu_set),
            set(&self.nu_set)
        )
    }
}

/// Increasing `s`-subsets of `[1, r]` in lexicographic order.
pub fn k_subsets(r: usize, s: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, r: usize, s: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == s {
            out.push(cur.clone());
            return;
        }
        for x in start..=r {
            if r - x + 1 < s - cur.len() {
                break;
            }
            cur.push(x);
            rec(x + 1, r, s, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if s <= r {
        rec(1, r, s, &mut Vec::with_capacity(s), &mut out);
    }
    out
}

fn count_above(set: &[usize], bound: usize) -> i64 {
    set.iter().filter(|&&x| x > bound).count() as i64
}

/// Coefficients `#(I_{>i}) - #(J_{>r-j}) - #(K_{>r-k})` at each `(i, j, k)`.
pub fn horn_form_coefficients(st: &SubsetTriple) -> Vec<i64> {
    let r = st.r;
    positions(r)
        .into_iter()
        .map(|p| count_above(&st.lambda_set, p.i) - count_above(&st.mu_set, r - p.j) - count_above(&st.nu_set, r - p.k))
        .collect()
}

/// The pullback to `R^{Y_r}` of `|μ|_J + |ν|_K - |λ|_I`.
pub fn horn_form(st: &SubsetTriple) -> LinearForm {
    LinearForm::from_integers(st.r, &horn_form_coefficients(st)).expect("one coefficient per position")
}

/// Consistency decided through tail-positivity: `|ρ(I)| = |ρ(J)| + |ρ(K)|`
/// and the Horn form is a nonnegative combination of tails.
pub fn lr_consistent_via_tails(st: &SubsetTriple) -> bool {
    let size = |set: &[usize]| crate::horn::rho_size(set);
    size(&st.lambda_set) == size(&st.mu_set) + size(&st.nu_set) && is_tail_positive_form(&horn_form(st)).is_some()
}

/// `#(I_{>i}) >= #(J_{>r-j}) + #(K_{>r-k})` at every position.
pub fn counting_inequality_holds(st: &SubsetTriple) -> bool {
    horn_form_coefficients(st).iter().all(|&c| c >= 0)
}
