use num_traits::Zero;
use proptest::prelude::*;

use subres::combinatorics::{sg_set, sg_set_by_transpositions};
use subres::linalg::{det_q, det_q_cofactor, MatrixQ};
use subres::rootsets::rprod;
use subres::scalar::{ratio, Sign};
use subres::schur::{schur_classical, schur_value, SchurSpec};
use subres::sylvester::{degree_window, sres_det, sres_sign, sylm};
use subres::{Rational, RootMultiset, UPoly};

fn small_rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=5).prop_map(|(p, q)| ratio(p, q))
}

fn poly(max_len: usize) -> impl Strategy<Value = UPoly> {
    prop::collection::vec(small_rational(), 0..=max_len).prop_map(UPoly::new)
}

fn multiset(max_len: usize) -> impl Strategy<Value = RootMultiset> {
    prop::collection::vec((-4i64..=4, 1usize..=3), 0..=max_len)
        .prop_map(|v| RootMultiset::from_pairs(v.into_iter().map(|(x, k)| (ratio(x, 1), k))).unwrap())
}

fn nonempty_multiset(max_len: usize) -> impl Strategy<Value = RootMultiset> {
    multiset(max_len).prop_filter("nonempty", |s| !s.is_empty())
}

fn square(n: usize) -> impl Strategy<Value = MatrixQ> {
    prop::collection::vec(prop::collection::vec(small_rational(), n), n)
        .prop_map(|rows| MatrixQ::from_rows(rows).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(p in poly(5), q in poly(5), r in poly(4)) {
        prop_assert_eq!(&p + &q, &q + &p);
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert_eq!(&(&p + &q) - &q, p.clone());
        prop_assert_eq!(&p * &UPoly::one(), p.clone());
        prop_assert!((&p - &p).is_zero());
    }

    #[test]
    fn degree_of_product(p in poly(5), q in poly(5)) {
        let d = (&p * &q).degree();
        match (p.degree(), q.degree()) {
            (Some(a), Some(b)) => prop_assert_eq!(d, Some(a + b)),
            _ => prop_assert_eq!(d, None),
        }
    }

    #[test]
    fn division_identity(p in poly(7), q in poly(4)) {
        prop_assume!(!q.is_zero());
        let (quo, rem) = p.div_rem(&q).unwrap();
        prop_assert_eq!(&(&quo * &q) + &rem, p);
        prop_assert!(rem.degree() < q.degree() || rem.is_zero());
        prop_assert_eq!((&quo * &q).exact_div(&q).unwrap(), quo);
    }

    #[test]
    fn from_roots_vanishes_with_multiplicity(a in nonempty_multiset(4)) {
        let f = UPoly::from_roots(&a);
        prop_assert!(f.is_monic());
        prop_assert_eq!(f.degree(), Some(a.len()));
        for (v, k) in a.entries() {
            let mut g = f.clone();
            for _ in 0..*k {
                g = g.exact_div(&UPoly::linear(v)).unwrap();
            }
            prop_assert!(!g.eval(v).is_zero());
        }
    }

    #[test]
    fn rprod_antisymmetry(x in multiset(4), y in multiset(4)) {
        let sign = Sign::from_parity((x.len() * y.len()) as i64);
        prop_assert_eq!(rprod(&x, &y), sign.apply(rprod(&y, &x)));
    }

    #[test]
    fn rprod_multiplicative_in_union(x in multiset(3), y in multiset(3), z in multiset(3)) {
        prop_assert_eq!(rprod(&x.union(&y), &z), rprod(&x, &z) * rprod(&y, &z));
    }

    #[test]
    fn multiset_split_roundtrip(a in multiset(5)) {
        let (distinct, excess) = a.split();
        prop_assert!(distinct.is_set());
        prop_assert_eq!(distinct.len() + excess.len(), a.len());
        prop_assert_eq!(distinct.union(&excess), a.clone());
        prop_assert_eq!(a.difference(&excess).unwrap(), distinct);
    }

    #[test]
    fn bareiss_matches_cofactor(m in (1usize..=5).prop_flat_map(square)) {
        prop_assert_eq!(det_q(&m).unwrap(), det_q_cofactor(&m).unwrap());
    }

    #[test]
    fn det_alternates_under_row_swap(m in (2usize..=5).prop_flat_map(square), i in 0usize..5, j in 0usize..5) {
        let n = m.rows();
        let (i, j) = (i % n, j % n);
        prop_assume!(i != j);
        let mut s = m.clone();
        s.swap_rows(i, j);
        prop_assert_eq!(det_q(&s).unwrap(), -det_q(&m).unwrap());
    }

    #[test]
    fn det_multiplicative((a, b) in (1usize..=4).prop_flat_map(|n| (square(n), square(n)))) {
        let n = a.rows();
        let prod = MatrixQ::from_fn(n, n, |i, j| {
            (0..n).fold(Rational::zero(), |acc, k| acc + a.at(i, k) * b.at(k, j))
        });
        prop_assert_eq!(det_q(&prod).unwrap(), det_q(&a).unwrap() * det_q(&b).unwrap());
    }

    #[test]
    fn sign_closed_form(r in 0usize..=8, bits in any::<u16>()) {
        let set: Vec<usize> = (1..=r).filter(|i| bits >> (i - 1) & 1 == 1).collect();
        prop_assert_eq!(sg_set(r, &set).unwrap(), sg_set_by_transpositions(r, &set).unwrap());
    }

    #[test]
    fn schur_homogeneity(
        x in prop::collection::btree_set(-6i64..=6, 1..=4),
        extra in 0usize..=3,
        pick in any::<u16>(),
        lambda in (1i64..=4, 1i64..=3),
    ) {
        let pts = RootMultiset::from_ints(&x.into_iter().collect::<Vec<_>>());
        let r = pts.len();
        let k = r + extra;
        let mut removed: Vec<usize> = (1..=k).filter(|i| pick >> (i - 1) & 1 == 1).collect();
        removed.truncate(extra);
        while removed.len() < extra {
            let next = (1..=k).find(|i| !removed.contains(i)).unwrap();
            removed.push(next);
            removed.sort_unstable();
        }
        let lam = ratio(lambda.0, lambda.1);
        let kept: usize = (1..=k).filter(|i| !removed.contains(i)).map(|i| k - i).sum();
        let w = kept - r * (r - 1) / 2;
        let base = schur_value(&SchurSpec::new(k, removed.clone(), pts.clone(), false).unwrap()).unwrap();
        let scaled = schur_value(&SchurSpec::new(k, removed, pts.scaled(&lam), false).unwrap()).unwrap();
        prop_assert_eq!(scaled, base * num_traits::pow(lam, w));
    }

    #[test]
    fn classical_schur_is_symmetric(
        x in prop::collection::btree_set(-6i64..=6, 1..=4),
        rot in 0usize..4,
        extra in 0usize..=2,
    ) {
        let sorted: Vec<Rational> = x.iter().map(|&v| ratio(v, 1)).collect();
        let mut moved = sorted.clone();
        moved.rotate_left(rot % sorted.len());
        moved.reverse();
        let k = sorted.len() + extra;
        let removed: Vec<usize> = (1..=extra).map(|i| 2 * i - 1).filter(|&i| i <= k).collect();
        prop_assume!(removed.len() == extra);
        prop_assert_eq!(
            schur_classical(k, &removed, &sorted).unwrap(),
            schur_classical(k, &removed, &moved).unwrap()
        );
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn sylm_equals_determinant(a in nonempty_multiset(3), b in nonempty_multiset(3)) {
        prop_assume!(a.len() <= 5 && b.len() <= 5);
        let (f, g) = (UPoly::from_roots(&a), UPoly::from_roots(&b));
        for d in degree_window(a.len(), b.len()) {
            let want = sres_det(&f, &g, d).unwrap();
            prop_assert!(want.degree().is_none_or(|k| k <= d));
            prop_assert_eq!(want, sres_sign(a.len(), d).apply(sylm(&a, &b, d).unwrap()), "d={}", d);
        }
    }

    #[test]
    fn boundary_subresultants(a in nonempty_multiset(3), b in nonempty_multiset(3)) {
        let (m, n) = (a.len(), b.len());
        let (f, g) = (UPoly::from_roots(&a), UPoly::from_roots(&b));
        prop_assert_eq!(sres_det(&f, &g, 0).unwrap(), UPoly::constant(rprod(&a, &b)));
        if n < m {
            prop_assert_eq!(sres_det(&f, &g, n).unwrap(), g.clone());
        }
        if m < n {
            prop_assert_eq!(sres_det(&f, &g, m).unwrap(), f.clone());
        }
    }
}
