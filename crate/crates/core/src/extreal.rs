//! Extended real numbers `{-∞} ∪ ℚ ∪ {+∞}` with both cut-induced
//! arithmetics.
//!
//! The order and lattice structure is shared; addition, the pseudodifference
//! and scaling depend on whether the value is read as a lower cut half (ℒ,
//! sup-addition, `-∞` absorbing) or an upper one (𝒰, inf-addition, `+∞`
//! absorbing). The mode travels with the operation, not the number.

use std::fmt;
use std::str::FromStr;

use crate::cutmodel::{DownSet, UpSet};
use crate::error::{parse_error, Error, Result};
use crate::qnum::Rational;

/// An extended rational. Derived ordering: `NegInf < Fin(_) < PosInf`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExtReal {
    NegInf,
    Fin(Rational),
    PosInf,
}

/// Which cut half induces the arithmetic.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ArithMode {
    /// ℒ-case: `(+∞) + (-∞) = -∞`.
    SupAdd,
    /// 𝒰-case: `(+∞) + (-∞) = +∞`.
    InfAdd,
}

impl ExtReal {
    pub fn fin(q: impl Into<Rational>) -> Self {
        ExtReal::Fin(q.into())
    }

    pub fn zero() -> Self {
        ExtReal::Fin(Rational::zero())
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, ExtReal::Fin(_))
    }

    pub fn as_finite(&self) -> Option<&Rational> {
        match self {
            ExtReal::Fin(q) => Some(q),
            _ => None,
        }
    }

    /// Lossy conversion for plotting; infinities map to `f64` infinities.
    pub fn to_f64(&self) -> f64 {
        match self {
            ExtReal::NegInf => f64::NEG_INFINITY,
            ExtReal::Fin(q) => q.to_f64(),
            ExtReal::PosInf => f64::INFINITY,
        }
    }
}

impl From<Rational> for ExtReal {
    fn from(q: Rational) -> Self {
        ExtReal::Fin(q)
    }
}

impl From<i64> for ExtReal {
    fn from(n: i64) -> Self {
        ExtReal::Fin(Rational::from_integer(n))
    }
}

// ---------------------------------------------------------------------------
// Identification with cut halves

/// `∅ ↦ -∞`, `{p < q} ↦ q`, `ℚ ↦ +∞`.
pub fn from_downset(a: &DownSet) -> Result<ExtReal> {
    match a {
        DownSet::Empty => Ok(ExtReal::NegInf),
        DownSet::OpenBelow(q) => Ok(ExtReal::Fin(q.clone())),
        DownSet::All => Ok(ExtReal::PosInf),
        DownSet::ClosedBelow(_) => Err(Error::NotACut(a.to_string())),
    }
}

pub fn to_downset(x: &ExtReal) -> DownSet {
    match x {
        ExtReal::NegInf => DownSet::Empty,
        ExtReal::Fin(q) => DownSet::OpenBelow(q.clone()),
        ExtReal::PosInf => DownSet::All,
    }
}

/// `ℚ ↦ -∞`, `{p > q} ↦ q`, `∅ ↦ +∞`.
pub fn from_upset(b: &UpSet) -> Result<ExtReal> {
    match b {
        UpSet::All => Ok(ExtReal::NegInf),
        UpSet::OpenAbove(q) => Ok(ExtReal::Fin(q.clone())),
        UpSet::Empty => Ok(ExtReal::PosInf),
        UpSet::ClosedAbove(_) => Err(Error::NotACut(b.to_string())),
    }
}

pub fn to_upset(x: &ExtReal) -> UpSet {
    match x {
        ExtReal::NegInf => UpSet::All,
        ExtReal::Fin(q) => UpSet::OpenAbove(q.clone()),
        ExtReal::PosInf => UpSet::Empty,
    }
}

// ---------------------------------------------------------------------------
// Additions and pseudodifferences

/// Sup-addition: `-∞` absorbs everything, including `+∞`.
pub fn sup_add(a: &ExtReal, b: &ExtReal) -> ExtReal {
    use ExtReal::*;
    match (a, b) {
        (NegInf, _) | (_, NegInf) => NegInf,
        (PosInf, _) | (_, PosInf) => PosInf,
        (Fin(x), Fin(y)) => Fin(x + y),
    }
}

/// Inf-addition: `+∞` absorbs everything, including `-∞`.
pub fn inf_add(a: &ExtReal, b: &ExtReal) -> ExtReal {
    use ExtReal::*;
    match (a, b) {
        (PosInf, _) | (_, PosInf) => PosInf,
        (NegInf, _) | (_, NegInf) => NegInf,
        (Fin(x), Fin(y)) => Fin(x + y),
    }
}

/// Lower pseudodifference `a -· c = sup{u | c +· u ≤ a}`, the residual of
/// sup-addition.
pub fn sup_diff(a: &ExtReal, c: &ExtReal) -> ExtReal {
    use ExtReal::*;
    match (a, c) {
        (_, NegInf) => PosInf,
        (PosInf, _) => PosInf,
        (NegInf, _) => NegInf,
        (Fin(_), PosInf) => NegInf,
        (Fin(x), Fin(y)) => Fin(x - y),
    }
}

/// Upper pseudodifference `b -^ d = inf{x | b ≤ d +^ x}`, the residual of
/// inf-addition.
pub fn inf_diff(b: &ExtReal, d: &ExtReal) -> ExtReal {
    use ExtReal::*;
    match (b, d) {
        (_, PosInf) => NegInf,
        (NegInf, _) => NegInf,
        (PosInf, _) => PosInf,
        (Fin(_), NegInf) => PosInf,
        (Fin(x), Fin(y)) => Fin(x - y),
    }
}

pub fn neg(x: &ExtReal) -> ExtReal {
    match x {
        ExtReal::NegInf => ExtReal::PosInf,
        ExtReal::Fin(q) => ExtReal::Fin(-q),
        ExtReal::PosInf => ExtReal::NegInf,
    }
}

/// Multiplication by `s ≥ 0`. `0·x = 0` for every `x`, in both modes.
///
/// Both cut products agree on this: `0` sends every cut to the neutral
/// element and a positive factor fixes the two non-ordinary cuts. The mode
/// is kept in the signature so call sites read like the other operations.
pub fn scalar_mul(_mode: ArithMode, s: &Rational, x: &ExtReal) -> Result<ExtReal> {
    if s.is_negative() {
        return Err(Error::InvalidMultiplier(s.to_string()));
    }
    if s.is_zero() {
        return Ok(ExtReal::zero());
    }
    Ok(match x {
        ExtReal::Fin(q) => ExtReal::Fin(s * q),
        inf => inf.clone(),
    })
}

pub fn fold_sup<'a, I>(xs: I) -> ExtReal
where
    I: IntoIterator<Item = &'a ExtReal>,
{
    xs.into_iter().max().cloned().unwrap_or(ExtReal::NegInf)
}

pub fn fold_inf<'a, I>(xs: I) -> ExtReal
where
    I: IntoIterator<Item = &'a ExtReal>,
{
    xs.into_iter().min().cloned().unwrap_or(ExtReal::PosInf)
}

impl ArithMode {
    pub fn add(self, a: &ExtReal, b: &ExtReal) -> ExtReal {
        match self {
            ArithMode::SupAdd => sup_add(a, b),
            ArithMode::InfAdd => inf_add(a, b),
        }
    }

    pub fn diff(self, a: &ExtReal, c: &ExtReal) -> ExtReal {
        match self {
            ArithMode::SupAdd => sup_diff(a, c),
            ArithMode::InfAdd => inf_diff(a, c),
        }
    }

    pub fn scale(self, s: &Rational, x: &ExtReal) -> Result<ExtReal> {
        scalar_mul(self, s, x)
    }

    /// The absorbing element of this mode's addition.
    pub fn absorbing(self) -> ExtReal {
        match self {
            ArithMode::SupAdd => ExtReal::NegInf,
            ArithMode::InfAdd => ExtReal::PosInf,
        }
    }

    /// The other mode; negation maps one arithmetic onto the other.
    pub fn dual(self) -> ArithMode {
        match self {
            ArithMode::SupAdd => ArithMode::InfAdd,
            ArithMode::InfAdd => ArithMode::SupAdd,
        }
    }
}

impl fmt::Display for ArithMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ArithMode::SupAdd => "sup",
            ArithMode::InfAdd => "inf",
        })
    }
}

impl FromStr for ArithMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "sup" => Ok(ArithMode::SupAdd),
            "inf" => Ok(ArithMode::InfAdd),
            _ => Err(parse_error("arithmetic mode", s, "expected `sup` or `inf`")),
        }
    }
}

// ---------------------------------------------------------------------------
// Addition through proper elements only

/// Finite probes below (or above) an operand.
struct Probes {
    values: Vec<Rational>,
    /// The probes can be pushed past any bound.
    unbounded: bool,
}

// SupAdd: proper minorants u ≤ x. InfAdd: proper majorants v ≥ x.
fn probes(mode: ArithMode, x: &ExtReal, depth: u32) -> Probes {
    let depth = depth.max(1) as i64;
    let toward = |q: &Rational, k: i64| match mode {
        ArithMode::SupAdd => q - Rational::from_integer(k),
        ArithMode::InfAdd => q + Rational::from_integer(k),
    };
    match (mode, x) {
        (_, ExtReal::Fin(q)) => Probes {
            values: (0..depth).map(|k| toward(q, k)).collect(),
            unbounded: false,
        },
        // nothing proper lies below -∞ (resp. above +∞)
        (ArithMode::SupAdd, ExtReal::NegInf) | (ArithMode::InfAdd, ExtReal::PosInf) => Probes {
            values: Vec::new(),
            unbounded: false,
        },
        (ArithMode::SupAdd, ExtReal::PosInf) => Probes {
            values: (1..=depth).map(Rational::from_integer).collect(),
            unbounded: true,
        },
        (ArithMode::InfAdd, ExtReal::NegInf) => Probes {
            values: (1..=depth).map(|k| Rational::from_integer(-k)).collect(),
            unbounded: true,
        },
    }
}

/// Recomputes `a + b` from proper elements only: the supremum of `u + x`
/// over finite `u ≤ a`, `x ≤ b` (sup-addition), or the infimum of `v + y`
/// over finite `v ≥ a`, `y ≥ b` (inf-addition).
///
/// Each operand contributes `probe_depth` finite probes. An empty probe
/// family makes the extremum range over the empty set; a family that can be
/// pushed past every bound sends the extremum to the matching infinity.
pub fn characterize_add_by_proper(mode: ArithMode, a: &ExtReal, b: &ExtReal, probe_depth: u32) -> ExtReal {
    let (pa, pb) = (probes(mode, a, probe_depth), probes(mode, b, probe_depth));
    let sums: Vec<ExtReal> = pa
        .values
        .iter()
        .flat_map(|u| pb.values.iter().map(move |x| ExtReal::Fin(u + x)))
        .collect();
    match mode {
        ArithMode::SupAdd => {
            if sums.is_empty() {
                ExtReal::NegInf
            } else if pa.unbounded || pb.unbounded {
                ExtReal::PosInf
            } else {
                fold_sup(&sums)
            }
        }
        ArithMode::InfAdd => {
            if sums.is_empty() {
                ExtReal::PosInf
            } else if pa.unbounded || pb.unbounded {
                ExtReal::NegInf
            } else {
                fold_inf(&sums)
            }
        }
    }
}

// ---------------------------------------------------------------------------
// Text form

impl fmt::Display for ExtReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtReal::NegInf => f.write_str("-inf"),
            ExtReal::Fin(q) => write!(f, "{q}"),
            ExtReal::PosInf => f.write_str("+inf"),
        }
    }
}

impl fmt::Debug for ExtReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for ExtReal {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "-inf" => Ok(ExtReal::NegInf),
            "+inf" | "inf" => Ok(ExtReal::PosInf),
            t => t
                .parse::<Rational>()
                .map(ExtReal::Fin)
                .map_err(|_| parse_error("extended real", s, "expected -inf, +inf or p/q")),
        }
    }
}
