#![allow(dead_code)]

use cutreal::cutmodel::{DownSet, UpSet};
use cutreal::{ExtReal, Rational};
use proptest::prelude::*;

pub fn q(n: i64) -> Rational {
    Rational::from_integer(n)
}

pub fn rational() -> impl Strategy<Value = Rational> {
    (-60i64..=60, 1i64..=12).prop_map(|(n, d)| Rational::frac(n, d))
}

pub fn nonneg_rational() -> impl Strategy<Value = Rational> {
    (0i64..=40, 1i64..=8).prop_map(|(n, d)| Rational::frac(n, d))
}

pub fn ext() -> impl Strategy<Value = ExtReal> {
    prop_oneof![
        1 => Just(ExtReal::NegInf),
        1 => Just(ExtReal::PosInf),
        1 => Just(ExtReal::zero()),
        5 => rational().prop_map(ExtReal::Fin),
    ]
}

/// Any of the four variants.
pub fn downset() -> impl Strategy<Value = DownSet> {
    prop_oneof![
        Just(DownSet::Empty),
        rational().prop_map(DownSet::OpenBelow),
        rational().prop_map(DownSet::ClosedBelow),
        Just(DownSet::All),
    ]
}

pub fn upset() -> impl Strategy<Value = UpSet> {
    prop_oneof![
        Just(UpSet::Empty),
        rational().prop_map(UpSet::OpenAbove),
        rational().prop_map(UpSet::ClosedAbove),
        Just(UpSet::All),
    ]
}

/// Elements of ℒ.
pub fn lower_cut() -> impl Strategy<Value = DownSet> {
    prop_oneof![
        1 => Just(DownSet::Empty),
        4 => rational().prop_map(DownSet::OpenBelow),
        1 => Just(DownSet::All),
    ]
}

/// Elements of 𝒰.
pub fn upper_cut() -> impl Strategy<Value = UpSet> {
    prop_oneof![
        1 => Just(UpSet::Empty),
        4 => rational().prop_map(UpSet::OpenAbove),
        1 => Just(UpSet::All),
    ]
}

/// Membership probes around the boundaries of the given sets.
pub fn probes<'a>(bounds: impl IntoIterator<Item = &'a Rational>) -> Vec<Rational> {
    let eps = Rational::frac(1, 1000);
    let mut out = vec![q(0), q(-1000), q(1000)];
    for b in bounds {
        out.extend([b.clone(), b - &eps, b + &eps]);
    }
    out
}
