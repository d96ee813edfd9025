mod common;

use common::*;
use cutreal::cutmodel::*;
use cutreal::extreal::{fold_inf, fold_sup, from_downset, from_upset, scalar_mul, to_downset, to_upset};
use cutreal::{ArithMode, ExtReal, Rational};
use proptest::prelude::*;

fn bounds_down<'a>(xs: &[&'a DownSet]) -> Vec<&'a Rational> {
    xs.iter().filter_map(|s| s.boundary()).collect()
}

fn same_members_down(a: &DownSet, b: &DownSet, probes: &[Rational]) -> bool {
    probes.iter().all(|p| a.contains(p) == b.contains(p))
}

/// A boundary on the 1/8 grid strictly inside (-2, 2).
fn grid_bound() -> impl Strategy<Value = Rational> {
    (-15i64..=15).prop_map(|k| Rational::frac(k, 8))
}

fn grid_lower_cut() -> impl Strategy<Value = DownSet> {
    prop_oneof![
        1 => Just(DownSet::Empty),
        6 => grid_bound().prop_map(DownSet::OpenBelow),
        1 => Just(DownSet::All),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2_000))]

    #[test]
    fn interior_laws(s in downset(), t in downset(), u in upset(), v in upset()) {
        let mut ps = probes(bounds_down(&[&s, &t]));
        ps.extend(probes([u.boundary(), v.boundary()].into_iter().flatten()));
        let is = interior_i(&s);
        prop_assert!(is.is_subset(&s));
        prop_assert!(ps.iter().all(|p| !is.contains(p) || s.contains(p)));
        prop_assert_eq!(interior_i(&is), is.clone());
        prop_assert!(is.is_cut());
        prop_assert_eq!(interior_i(&s.intersection(&t)), is.intersection(&interior_i(&t)));
        let ju = interior_j(&u);
        prop_assert!(ju.is_subset(&u));
        prop_assert_eq!(interior_j(&ju), ju.clone());
        prop_assert_eq!(interior_j(&u.intersection(&v)), ju.intersection(&interior_j(&v)));
        prop_assert_eq!(interior_i(&DownSet::All), DownSet::All);
        prop_assert_eq!(interior_j(&UpSet::All), UpSet::All);
    }

    #[test]
    fn round_trips(a in lower_cut(), b in upper_cut()) {
        prop_assert_eq!(to_lower(&to_upper(&a).unwrap()).unwrap(), a.clone());
        prop_assert_eq!(to_upper(&to_lower(&b).unwrap()).unwrap(), b.clone());
        let pair = CutPair::new(a.clone(), a.complement());
        let expected = if a.boundary().is_some() { CutValidity::Ordinary } else { CutValidity::NonOrdinary };
        prop_assert_eq!(validate_cut(&pair, CutKind::DL), expected);
    }

    #[test]
    fn minkowski_monoid(a in lower_cut(), b in lower_cut(), c in lower_cut()) {
        let add = |x: &DownSet, y: &DownSet| minkowski_down(x, y).unwrap();
        prop_assert_eq!(add(&add(&a, &b), &c), add(&a, &add(&b, &c)));
        prop_assert_eq!(add(&a, &b), add(&b, &a));
        prop_assert_eq!(add(&a, &n_l()), a.clone());
        prop_assert_eq!(add(&DownSet::Empty, &a), DownSet::Empty);
        if a.is_subset(&b) {
            prop_assert!(add(&a, &c).is_subset(&add(&b, &c)));
        }
    }

    #[test]
    fn negation_is_an_order_reversing_homomorphism(a in lower_cut(), b in lower_cut()) {
        let lhs = negate_down(&minkowski_down(&a, &b).unwrap());
        let rhs = minkowski_up(&negate_down(&a), &negate_down(&b)).unwrap();
        prop_assert_eq!(lhs, rhs);
        // ⊆ on lower sets becomes ⊆ on upper sets, i.e. the reversed order of 𝒰
        prop_assert_eq!(a.is_subset(&b), negate_down(&a).is_subset(&negate_down(&b)));
        prop_assert_eq!(negate_up(&negate_down(&a)), a.clone());
    }

    #[test]
    fn lattice_matches_extended_order(xs in prop::collection::vec(ext(), 0..=8)) {
        let downs: Vec<DownSet> = xs.iter().map(to_downset).collect();
        let ups: Vec<UpSet> = xs.iter().map(to_upset).collect();
        prop_assert_eq!(from_downset(&lattice_sup_down(&downs).unwrap()).unwrap(), fold_sup(&xs));
        prop_assert_eq!(from_downset(&lattice_inf_down(&downs).unwrap()).unwrap(), fold_inf(&xs));
        prop_assert_eq!(from_upset(&lattice_sup_up(&ups).unwrap()).unwrap(), fold_sup(&xs));
        prop_assert_eq!(from_upset(&lattice_inf_up(&ups).unwrap()).unwrap(), fold_inf(&xs));
    }

    #[test]
    fn multiplication_matches_scaling(s in nonneg_rational(), x in ext()) {
        let lower = mul_lower(&DownSet::OpenBelow(s.clone()), &to_downset(&x)).unwrap();
        prop_assert_eq!(from_downset(&lower).unwrap(), scalar_mul(ArithMode::SupAdd, &s, &x).unwrap());
        let upper = mul_upper(&UpSet::OpenAbove(s.clone()), &to_upset(&x)).unwrap();
        prop_assert_eq!(from_upset(&upper).unwrap(), scalar_mul(ArithMode::InfAdd, &s, &x).unwrap());
    }

    #[test]
    fn multiplication_laws(s in nonneg_rational(), t in nonneg_rational(), a in lower_cut(), b in lower_cut()) {
        let ms = DownSet::OpenBelow(s.clone());
        let mt = DownSet::OpenBelow(t.clone());
        let mul = |m: &DownSet, x: &DownSet| mul_lower(m, x).unwrap();
        let add = |x: &DownSet, y: &DownSet| minkowski_down(x, y).unwrap();
        prop_assert_eq!(mul(&ms, &add(&a, &b)), add(&mul(&ms, &a), &mul(&ms, &b)));
        prop_assert_eq!(mul(&DownSet::OpenBelow(&s * &t), &a), mul(&ms, &mul(&mt, &a)));
        prop_assert_eq!(mul(&o_l(), &a), a.clone());
        prop_assert_eq!(mul(&n_l(), &a), n_l());
        if a.is_subset(&b) {
            prop_assert!(mul(&ms, &a).is_subset(&mul(&ms, &b)));
        }
    }

    #[test]
    fn grid_oracle_for_sums(a in grid_lower_cut(), b in grid_lower_cut()) {
        let w = GridWindow::new(Rational::from_integer(4), 8).unwrap();
        prop_assert!(grid_oracle_sum(&a, &b, &w), "{a} + {b}");
    }

    #[test]
    fn grid_oracle_for_products(s in (0i64..=12).prop_map(|k| Rational::frac(k, 4)), a in prop_oneof![
        (0i64..=12).prop_map(|k| DownSet::OpenBelow(Rational::frac(k, 4))),
        Just(DownSet::All),
    ]) {
        prop_assume!(!(s.is_zero() && a == n_l()));
        let w = GridWindow::new(Rational::from_integer(4), 8).unwrap();
        prop_assert!(grid_oracle_product(&DownSet::OpenBelow(s.clone()), &a, &w), "{s} * {a}");
    }

    #[test]
    fn closed_sets_are_rejected(b in rational()) {
        prop_assert!(minkowski_down(&DownSet::ClosedBelow(b.clone()), &n_l()).is_err());
        prop_assert!(from_downset(&DownSet::ClosedBelow(b.clone())).is_err());
        prop_assert!(mul_lower(&DownSet::ClosedBelow(b.abs()), &n_l()).is_err());
        prop_assert!(!same_members_down(&DownSet::ClosedBelow(b.clone()), &DownSet::OpenBelow(b.clone()), &[b]));
    }
}

#[test]
fn product_oracle_reports_the_empty_corner() {
    let w = GridWindow::new(Rational::from_integer(4), 8).unwrap();
    assert!(!grid_oracle_product(&n_l(), &n_l(), &w));
    assert_eq!(mul_lower(&n_l(), &n_l()).unwrap(), n_l());
}

#[test]
fn zero_times_infinities() {
    assert_eq!(mul_lower(&n_l(), &DownSet::All).unwrap(), n_l());
    assert_eq!(mul_lower(&n_l(), &DownSet::Empty).unwrap(), n_l());
    assert_eq!(mul_upper(&n_u(), &UpSet::All).unwrap(), n_u());
    assert_eq!(mul_upper(&n_u(), &UpSet::Empty).unwrap(), n_u());
    assert_eq!(from_downset(&n_l()).unwrap(), ExtReal::zero());
}
