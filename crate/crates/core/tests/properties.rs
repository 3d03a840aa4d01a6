use lrsg::hive::{count_tail_positive, enumerate_tail_positive, Direction, TailId, TriangleArray};
use lrsg::horn::{cone_contains, generate_facets, ConeQuery};
use lrsg::partition::{
    homogeneous_triples, partitions_of, FundamentalWeight, FundamentalWeightTriple, PartitionTriple,
};
use lrsg::tableau::{lr_coefficient, lr_positive};
use lrsg::tail_cone::{is_tail_positive_form, LinearForm};
use lrsg::Partition;
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::Zero;
use proptest::prelude::*;

fn partition(r: usize, max_part: u32) -> impl Strategy<Value = Partition> {
    prop::collection::vec(0..=max_part, r).prop_map(move |mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        let parts: Vec<i64> = v.into_iter().map(i64::from).collect();
        Partition::new(&parts, r).unwrap()
    })
}

/// `(μ, ν)` drawn freely, `λ` drawn among the partitions of `|μ| + |ν|`.
fn homogeneous_triple(r: usize, max_part: u32) -> impl Strategy<Value = PartitionTriple> {
    (
        partition(r, max_part),
        partition(r, max_part),
        any::<prop::sample::Index>(),
    )
        .prop_map(move |(mu, nu, idx)| {
            let n = (mu.size() + nu.size()) as u32;
            let lambdas = partitions_of(n, r);
            let lambda = idx.get(&lambdas).clone();
            PartitionTriple::new(lambda, mu, nu).unwrap()
        })
}

fn weight_triple(r: usize, max: u32) -> impl Strategy<Value = FundamentalWeightTriple> {
    let coords = move || prop::collection::vec(0..=max, r - 1);
    (coords(), coords(), coords())
        .prop_map(move |(l, m, n)| FundamentalWeightTriple::from_coords(&l, &m, &n, r).unwrap())
}

fn array(r: usize) -> impl Strategy<Value = TriangleArray> {
    prop::collection::vec(-6i64..=6, lrsg::hive::grid_size(r))
        .prop_map(move |v| TriangleArray::from_values(r, v).unwrap())
}

fn positive_triples() -> Vec<PartitionTriple> {
    (0..=5)
        .flat_map(|n| homogeneous_triples(n, 3))
        .filter(lr_positive)
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn fundamental_coordinates_invert(t in (1usize..=5).prop_flat_map(|r| homogeneous_triple(r, 5))) {
        let w = t.to_fundamental().unwrap();
        let r = t.rank();
        let last = [t.lambda.parts()[r - 1], t.mu.parts()[r - 1], t.nu.parts()[r - 1]];
        prop_assert_eq!(PartitionTriple::from_fundamental(&w, last).unwrap(), t);
    }

    #[test]
    fn homogeneous_triples_are_radical(t in (1usize..=6).prop_flat_map(|r| homogeneous_triple(r, 6))) {
        prop_assert!(t.to_fundamental().unwrap().is_radical());
    }

    #[test]
    fn dual_is_an_involution(coords in prop::collection::vec(0u32..50, 0..8)) {
        let w = FundamentalWeight::new(coords.clone(), coords.len() + 1).unwrap();
        prop_assert_eq!(w.dual().dual(), w);
    }

    #[test]
    fn embed_restrict_and_stability(t in (1usize..=3).prop_flat_map(|r| homogeneous_triple(r, 3))) {
        let e = t.embed();
        prop_assert_eq!(e.restrict().unwrap(), t.clone());
        prop_assert_eq!(lr_coefficient(&e), lr_coefficient(&t));
    }

    #[test]
    fn coefficient_symmetric_in_mu_nu(t in (1usize..=4).prop_flat_map(|r| homogeneous_triple(r, 3))) {
        let swapped = PartitionTriple::new(t.lambda.clone(), t.nu.clone(), t.mu.clone()).unwrap();
        prop_assert_eq!(lr_coefficient(&t), lr_coefficient(&swapped));
    }

    #[test]
    fn inhomogeneous_triples_vanish(l in partition(3, 4), m in partition(3, 4), n in partition(3, 4)) {
        let t = PartitionTriple::new(l, m, n).unwrap();
        prop_assume!(!t.is_homogeneous());
        prop_assert_eq!(lr_coefficient(&t), BigUint::zero());
    }

    #[test]
    fn semigroup_closure(pair in {
        let pos = positive_triples();
        (prop::sample::select(pos.clone()), prop::sample::select(pos))
    }) {
        let (a, b) = pair;
        prop_assert!(lr_positive(&a.add(&b).unwrap()));
    }

    #[test]
    fn hive_matches_tableau_at_rank_four(t in homogeneous_triple(4, 3)) {
        prop_assert_eq!(count_tail_positive(&t.to_fundamental().unwrap()), lr_coefficient(&t));
    }

    #[test]
    fn hive_count_has_twelve_symmetries(w in (2usize..=4).prop_flat_map(|r| weight_triple(r, 3))) {
        let base = count_tail_positive(&w);
        for image in w.symmetry_orbit() {
            prop_assert_eq!(count_tail_positive(&image), base.clone());
        }
    }

    #[test]
    fn non_radical_weights_count_zero(w in (2usize..=4).prop_flat_map(|r| weight_triple(r, 4))) {
        prop_assume!(!w.is_radical());
        prop_assert_eq!(count_tail_positive(&w), BigUint::zero());
    }

    #[test]
    fn tails_are_linear(
        (y1, y2, id) in (2usize..=5).prop_flat_map(|r| {
            let ids = TailId::all(r);
            (array(r), array(r), prop::sample::select(ids))
        })
    ) {
        let sum = y1.add(&y2).unwrap();
        prop_assert_eq!(sum.tail_value(id).unwrap(), y1.tail_value(id).unwrap() + y2.tail_value(id).unwrap());
        let [a, b, c] = sum.raw_line_sums();
        let [a1, b1, c1] = y1.raw_line_sums();
        let [a2, b2, c2] = y2.raw_line_sums();
        let add = |x: Vec<i64>, y: Vec<i64>| x.iter().zip(&y).map(|(p, q)| p + q).collect::<Vec<_>>();
        prop_assert_eq!((a, b, c), (add(a1, a2), add(b1, b2), add(c1, c2)));
    }

    #[test]
    fn tail_positive_arrays_form_a_semigroup(
        (w1, w2) in (2usize..=4).prop_flat_map(|r| (weight_triple(r, 3), weight_triple(r, 3)))
    ) {
        let (ys1, ys2) = (enumerate_tail_positive(&w1), enumerate_tail_positive(&w2));
        for y1 in ys1.iter().take(4) {
            for y2 in ys2.iter().take(4) {
                let y = y1.add(y2).unwrap();
                prop_assert!(y.is_tail_positive());
                prop_assert_eq!(y.line_sums().unwrap(), w1.add(&w2).unwrap());
            }
        }
    }

    #[test]
    fn certificates_are_sound(
        (r, coeffs) in (2usize..=4).prop_flat_map(|r| (Just(r), prop::collection::vec(-2i64..=3, lrsg::hive::grid_size(r))))
    ) {
        let f = LinearForm::from_integers(r, &coeffs).unwrap();
        if let Some(cert) = is_tail_positive_form(&f) {
            prop_assert!(cert.certifies(&f));
            // tails have 0/1 coefficients, so certified forms are nonnegative
            prop_assert!(f.is_nonnegative());
            let w = FundamentalWeightTriple::from_coords(&vec![2; r - 1], &vec![1; r - 1], &vec![2; r - 1], r).unwrap();
            for y in enumerate_tail_positive(&w) {
                prop_assert!(f.evaluate(&y) >= BigRational::zero());
            }
        }
    }

    #[test]
    fn cone_membership_is_scale_invariant(
        (l, m, n) in (
            prop::collection::vec(-8i64..=8, 3),
            prop::collection::vec(-8i64..=8, 3),
            prop::collection::vec(-8i64..=8, 3),
        ),
        num in 1i64..=9,
        den in 1i64..=9,
    ) {
        let sorted = |mut v: Vec<i64>| { v.sort_unstable_by(|a, b| b.cmp(a)); v };
        let (l, m, mut n) = (sorted(l), sorted(m), sorted(n));
        // shift ν to force homogeneity whenever the gap divides evenly
        let gap = l.iter().sum::<i64>() - m.iter().sum::<i64>() - n.iter().sum::<i64>();
        if gap % 3 == 0 {
            for x in &mut n { *x += gap / 3; }
        }
        let q = |v: &[i64]| v.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect::<Vec<_>>();
        let query = ConeQuery::new(q(&l), q(&m), q(&n)).unwrap();
        let c = BigRational::new(BigInt::from(num), BigInt::from(den));
        let facets = generate_facets(3);
        prop_assert_eq!(cone_contains(&query, &facets).unwrap(), cone_contains(&query.scaled(&c), &facets).unwrap());
    }
}

#[test]
fn line_direction_tails_cover_every_boundary_coordinate() {
    for r in 2..7 {
        let y = TriangleArray::from_values(r, (1..=lrsg::hive::grid_size(r) as i64).collect()).unwrap();
        for (p, v) in y.iter().filter(|(p, _)| p.is_boundary()) {
            let id = lrsg::tail_cone::boundary_tail(r, p).unwrap();
            assert_eq!(id.t, id.s);
            assert!(Direction::ALL.contains(&id.dir));
            assert_eq!(y.tail_value(id).unwrap(), v);
        }
    }
}
