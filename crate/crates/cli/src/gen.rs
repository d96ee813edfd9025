//! Seeded instance generators shared by `oracle` and the acceptance suite.

use cutreal::convexfn::ExtFn;
use cutreal::cutmodel::{DownSet, GridWindow, UpSet};
use cutreal::{ExtReal, Rational};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub type Gen = ChaCha8Rng;

pub fn seeded(seed: u64) -> Gen {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn rational(rng: &mut Gen) -> Rational {
    Rational::frac(rng.gen_range(-60..=60), rng.gen_range(1..=12))
}

pub fn nonneg_rational(rng: &mut Gen) -> Rational {
    Rational::frac(rng.gen_range(0..=40), rng.gen_range(1..=8))
}

/// Finite with probability 5/8; each infinity and zero 1/8.
pub fn ext(rng: &mut Gen) -> ExtReal {
    match rng.gen_range(0..8) {
        0 => ExtReal::NegInf,
        1 => ExtReal::PosInf,
        2 => ExtReal::zero(),
        _ => ExtReal::Fin(rational(rng)),
    }
}

/// Variant class 0, 1, 2 = `-∞`, finite, `+∞`.
pub fn ext_of_class(rng: &mut Gen, class: usize) -> ExtReal {
    match class {
        0 => ExtReal::NegInf,
        1 => ExtReal::Fin(rational(rng)),
        _ => ExtReal::PosInf,
    }
}

/// Variant 0..4 = `Empty`, `OpenBelow`, `ClosedBelow`, `All`.
pub fn downset_of_variant(rng: &mut Gen, variant: usize) -> DownSet {
    match variant {
        0 => DownSet::Empty,
        1 => DownSet::OpenBelow(rational(rng)),
        2 => DownSet::ClosedBelow(rational(rng)),
        _ => DownSet::All,
    }
}

pub fn upset_of_variant(rng: &mut Gen, variant: usize) -> UpSet {
    match variant {
        0 => UpSet::Empty,
        1 => UpSet::OpenAbove(rational(rng)),
        2 => UpSet::ClosedAbove(rational(rng)),
        _ => UpSet::All,
    }
}

/// An element of ℒ whose finite boundary lies on the window grid strictly
/// inside the half window.
pub fn grid_lower_cut(rng: &mut Gen, w: &GridWindow) -> DownSet {
    let d = w.denominator() as i64;
    // largest k with k/d < bound/2
    let half = w.bound() * Rational::frac(1, 2) * Rational::from_integer(d);
    let mut kmax = half.ceil();
    kmax -= 1;
    let kmax: i64 = kmax.try_into().unwrap_or(i64::MAX).max(0);
    match rng.gen_range(0..8) {
        0 => DownSet::Empty,
        1 => DownSet::All,
        _ => DownSet::OpenBelow(Rational::frac(rng.gen_range(-kmax..=kmax), d)),
    }
}

/// A nonnegative grid value in `[0, bound]`.
pub fn grid_nonneg(rng: &mut Gen, w: &GridWindow) -> Rational {
    let d = w.denominator() as i64;
    let kmax: i64 = (w.bound() * Rational::from_integer(d)).floor().try_into().unwrap_or(i64::MAX);
    Rational::frac(rng.gen_range(0..=kmax), d)
}

fn small_ext(rng: &mut Gen) -> ExtReal {
    match rng.gen_range(0..6) {
        0 => ExtReal::NegInf,
        1 => ExtReal::PosInf,
        _ => ExtReal::from(rng.gen_range(-6..=6)),
    }
}

/// Integer grid of `n` points centred on 0.
pub fn int_grid(n: usize) -> Vec<Rational> {
    (0..n as i64).map(|i| Rational::from_integer(i - n as i64 / 2)).collect()
}

/// Structured functions on `n` grid points: finite with nondecreasing slopes
/// on a window and `+∞` outside, or `-∞` inside a window with arbitrary
/// endpoint values. Both families satisfy Jensen with inf-addition.
pub fn convex_fn(rng: &mut Gen, n: usize) -> ExtFn {
    let (a, b) = (rng.gen_range(0..n), rng.gen_range(0..n));
    let (lo, hi) = (a.min(b), a.max(b));
    let values: Vec<ExtReal> = if rng.gen_bool(0.7) {
        let mut slopes: Vec<i64> = (0..n).map(|_| rng.gen_range(-4..=4)).collect();
        slopes.sort();
        let start = rng.gen_range(-5..=5);
        (0..n)
            .map(|i| {
                if i < lo || i > hi {
                    ExtReal::PosInf
                } else {
                    ExtReal::from(start + slopes[lo..i].iter().sum::<i64>())
                }
            })
            .collect()
    } else {
        let (left, right) = (small_ext(rng), small_ext(rng));
        (0..n)
            .map(|i| {
                if i < lo || i > hi {
                    ExtReal::PosInf
                } else if i == lo {
                    left.clone()
                } else if i == hi {
                    right.clone()
                } else {
                    ExtReal::NegInf
                }
            })
            .collect()
    };
    ExtFn::new(int_grid(n), values).expect("grid is increasing")
}

/// Structured convex functions half the time, arbitrary tables otherwise.
pub fn any_fn(rng: &mut Gen, n: usize) -> ExtFn {
    if rng.gen_bool(0.5) {
        convex_fn(rng, n)
    } else {
        let values = (0..n).map(|_| small_ext(rng)).collect();
        ExtFn::new(int_grid(n), values).expect("grid is increasing")
    }
}

/// A direction in the plane with small integer coordinates, not zero.
pub fn direction(rng: &mut Gen) -> Vec<Rational> {
    loop {
        let (a, b) = (rng.gen_range(-4..=4), rng.gen_range(-4..=4));
        if (a, b) != (0, 0) {
            return vec![Rational::from_integer(a), Rational::from_integer(b)];
        }
    }
}
