//! Symbolic lower and upper sets of rationals.
//!
//! Every downward-closed subset of ℚ that a finite datum can describe is one
//! of `∅`, `{p < b}`, `{p ≤ b}` or `ℚ`; [`DownSet`] enumerates exactly these,
//! and [`UpSet`] the upward-closed counterparts. The sets without a greatest
//! (resp. least) element form the lattices ℒ and 𝒰 of cut halves. All
//! operations here work on that finite description and are exact; the grid
//! oracles at the bottom re-derive Minkowski sums and products by
//! enumeration and serve as an independent check.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{parse_error, Error, Result};
use crate::qnum::Rational;

/// A downward-closed subset of ℚ.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum DownSet {
    Empty,
    /// `{p | p < b}`
    OpenBelow(Rational),
    /// `{p | p ≤ b}`
    ClosedBelow(Rational),
    All,
}

/// An upward-closed subset of ℚ.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum UpSet {
    Empty,
    /// `{p | b < p}`
    OpenAbove(Rational),
    /// `{p | b ≤ p}`
    ClosedAbove(Rational),
    All,
}

/// `N_L = {q < 0}`, the neutral element of ℒ.
pub fn n_l() -> DownSet {
    DownSet::OpenBelow(Rational::zero())
}

/// `O_L = {q < 1}`, the unit multiplier of ℒ.
pub fn o_l() -> DownSet {
    DownSet::OpenBelow(Rational::one())
}

/// `N_U = {q > 0}`, the neutral element of 𝒰.
pub fn n_u() -> UpSet {
    UpSet::OpenAbove(Rational::zero())
}

/// `O_U = {q > 1}`.
pub fn o_u() -> UpSet {
    UpSet::OpenAbove(Rational::one())
}

// Inclusion is a total order on each of the two set families. These keys
// realise it: open before closed at the same boundary.
fn down_key(s: &DownSet) -> (u8, Option<(&Rational, u8)>) {
    match s {
        DownSet::Empty => (0, None),
        DownSet::OpenBelow(b) => (1, Some((b, 0))),
        DownSet::ClosedBelow(b) => (1, Some((b, 1))),
        DownSet::All => (2, None),
    }
}

fn cmp_up_inclusion(x: &UpSet, y: &UpSet) -> Ordering {
    fn rank(s: &UpSet) -> u8 {
        match s {
            UpSet::Empty => 0,
            UpSet::OpenAbove(_) | UpSet::ClosedAbove(_) => 1,
            UpSet::All => 2,
        }
    }
    fn closed(s: &UpSet) -> u8 {
        matches!(s, UpSet::ClosedAbove(_)) as u8
    }
    match (x.boundary(), y.boundary()) {
        (Some(a), Some(b)) => b.cmp(a).then(closed(x).cmp(&closed(y))),
        _ => rank(x).cmp(&rank(y)),
    }
}

impl DownSet {
    pub fn contains(&self, q: &Rational) -> bool {
        match self {
            DownSet::Empty => false,
            DownSet::OpenBelow(b) => q < b,
            DownSet::ClosedBelow(b) => q <= b,
            DownSet::All => true,
        }
    }

    /// Membership in ℒ: no greatest element.
    pub fn is_cut(&self) -> bool {
        !matches!(self, DownSet::ClosedBelow(_))
    }

    pub fn boundary(&self) -> Option<&Rational> {
        match self {
            DownSet::OpenBelow(b) | DownSet::ClosedBelow(b) => Some(b),
            _ => None,
        }
    }

    /// Symbolic inclusion `self ⊆ other`.
    pub fn is_subset(&self, other: &DownSet) -> bool {
        self.cmp_inclusion(other) != Ordering::Greater
    }

    pub fn cmp_inclusion(&self, other: &DownSet) -> Ordering {
        down_key(self).cmp(&down_key(other))
    }

    /// `ℚ ∖ self`.
    pub fn complement(&self) -> UpSet {
        match self {
            DownSet::Empty => UpSet::All,
            DownSet::OpenBelow(b) => UpSet::ClosedAbove(b.clone()),
            DownSet::ClosedBelow(b) => UpSet::OpenAbove(b.clone()),
            DownSet::All => UpSet::Empty,
        }
    }

    pub fn intersection(&self, other: &DownSet) -> DownSet {
        if self.is_subset(other) {
            self.clone()
        } else {
            other.clone()
        }
    }

    pub fn union(&self, other: &DownSet) -> DownSet {
        if self.is_subset(other) {
            other.clone()
        } else {
            self.clone()
        }
    }

    fn require_cut(&self) -> Result<()> {
        if self.is_cut() {
            Ok(())
        } else {
            Err(Error::NotACut(self.to_string()))
        }
    }
}

impl UpSet {
    pub fn contains(&self, q: &Rational) -> bool {
        match self {
            UpSet::Empty => false,
            UpSet::OpenAbove(b) => q > b,
            UpSet::ClosedAbove(b) => q >= b,
            UpSet::All => true,
        }
    }

    /// Membership in 𝒰: no least element.
    pub fn is_cut(&self) -> bool {
        !matches!(self, UpSet::ClosedAbove(_))
    }

    pub fn boundary(&self) -> Option<&Rational> {
        match self {
            UpSet::OpenAbove(b) | UpSet::ClosedAbove(b) => Some(b),
            _ => None,
        }
    }

    pub fn is_subset(&self, other: &UpSet) -> bool {
        cmp_up_inclusion(self, other) != Ordering::Greater
    }

    pub fn cmp_inclusion(&self, other: &UpSet) -> Ordering {
        cmp_up_inclusion(self, other)
    }

    /// `ℚ ∖ self`.
    pub fn complement(&self) -> DownSet {
        match self {
            UpSet::Empty => DownSet::All,
            UpSet::OpenAbove(b) => DownSet::ClosedBelow(b.clone()),
            UpSet::ClosedAbove(b) => DownSet::OpenBelow(b.clone()),
            UpSet::All => DownSet::Empty,
        }
    }

    pub fn intersection(&self, other: &UpSet) -> UpSet {
        if self.is_subset(other) {
            self.clone()
        } else {
            other.clone()
        }
    }

    pub fn union(&self, other: &UpSet) -> UpSet {
        if self.is_subset(other) {
            other.clone()
        } else {
            self.clone()
        }
    }

    fn require_cut(&self) -> Result<()> {
        if self.is_cut() {
            Ok(())
        } else {
            Err(Error::NotACut(self.to_string()))
        }
    }
}

pub fn member_down(s: &DownSet, q: &Rational) -> bool {
    s.contains(q)
}

pub fn member_up(t: &UpSet, q: &Rational) -> bool {
    t.contains(q)
}

/// The interior operator `I`: drops the greatest element if there is one.
pub fn interior_i(s: &DownSet) -> DownSet {
    match s {
        DownSet::ClosedBelow(b) => DownSet::OpenBelow(b.clone()),
        other => other.clone(),
    }
}

/// The interior operator `J`: drops the least element if there is one.
pub fn interior_j(t: &UpSet) -> UpSet {
    match t {
        UpSet::ClosedAbove(b) => UpSet::OpenAbove(b.clone()),
        other => other.clone(),
    }
}

// ---------------------------------------------------------------------------
// Cuts

/// A candidate Dedekind cut `(A, B)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutPair {
    pub lower: DownSet,
    pub upper: UpSet,
}

impl CutPair {
    pub fn new(lower: DownSet, upper: UpSet) -> Self {
        CutPair { lower, upper }
    }
}

/// Which third axiom a cut is checked against: no greatest element in the
/// lower half (`DL`) or no least element in the upper half (`DU`).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CutKind {
    DL,
    DU,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CutDefect {
    /// `q` lies in neither half.
    Uncovered(Rational),
    /// `q` lies in both halves, so the halves are not separated.
    Overlap(Rational),
    /// The lower half has greatest element `q`.
    LowerHasMax(Rational),
    /// The upper half has least element `q`.
    UpperHasMin(Rational),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CutValidity {
    Ordinary,
    NonOrdinary,
    Invalid(CutDefect),
}

// Points where two finitely described sets can first disagree: the
// boundaries, points between and around them.
fn probe_points(bounds: &[&Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero()];
    for b in bounds {
        out.push((*b).clone());
        out.push(*b - Rational::one());
        out.push(*b + Rational::one());
    }
    for (i, a) in bounds.iter().enumerate() {
        for b in &bounds[i + 1..] {
            out.push((*a + *b) * Rational::frac(1, 2));
        }
    }
    out.sort();
    out.dedup();
    out
}

pub fn validate_cut(c: &CutPair, kind: CutKind) -> CutValidity {
    let bounds: Vec<&Rational> = c.lower.boundary().into_iter().chain(c.upper.boundary()).collect();
    for q in probe_points(&bounds) {
        match (c.lower.contains(&q), c.upper.contains(&q)) {
            (false, false) => return CutValidity::Invalid(CutDefect::Uncovered(q)),
            (true, true) => return CutValidity::Invalid(CutDefect::Overlap(q)),
            _ => {}
        }
    }
    debug_assert_eq!(c.lower.complement(), c.upper);
    match (kind, &c.lower, &c.upper) {
        (CutKind::DL, DownSet::ClosedBelow(b), _) => {
            CutValidity::Invalid(CutDefect::LowerHasMax(b.clone()))
        }
        (CutKind::DU, _, UpSet::ClosedAbove(b)) => {
            CutValidity::Invalid(CutDefect::UpperHasMin(b.clone()))
        }
        (_, DownSet::Empty, UpSet::All) | (_, DownSet::All, UpSet::Empty) => {
            CutValidity::NonOrdinary
        }
        _ => CutValidity::Ordinary,
    }
}

/// `J(ℚ ∖ A)`: the upper half matching a lower cut half.
pub fn to_upper(a: &DownSet) -> Result<UpSet> {
    a.require_cut()?;
    Ok(interior_j(&a.complement()))
}

/// `I(ℚ ∖ B)`: the lower half matching an upper cut half.
pub fn to_lower(b: &UpSet) -> Result<DownSet> {
    b.require_cut()?;
    Ok(interior_i(&b.complement()))
}

// ---------------------------------------------------------------------------
// Minkowski addition

/// Element-wise sum on ℒ with `∅` absorbing.
pub fn minkowski_down(a: &DownSet, b: &DownSet) -> Result<DownSet> {
    a.require_cut()?;
    b.require_cut()?;
    Ok(match (a, b) {
        (DownSet::Empty, _) | (_, DownSet::Empty) => DownSet::Empty,
        (DownSet::All, _) | (_, DownSet::All) => DownSet::All,
        (DownSet::OpenBelow(x), DownSet::OpenBelow(y)) => DownSet::OpenBelow(x + y),
        _ => unreachable!("closed sets rejected above"),
    })
}

/// Element-wise sum on 𝒰 with `∅` absorbing.
pub fn minkowski_up(a: &UpSet, b: &UpSet) -> Result<UpSet> {
    a.require_cut()?;
    b.require_cut()?;
    Ok(match (a, b) {
        (UpSet::Empty, _) | (_, UpSet::Empty) => UpSet::Empty,
        (UpSet::All, _) | (_, UpSet::All) => UpSet::All,
        (UpSet::OpenAbove(x), UpSet::OpenAbove(y)) => UpSet::OpenAbove(x + y),
        _ => unreachable!("closed sets rejected above"),
    })
}

// ---------------------------------------------------------------------------
// Lattice operations

/// Supremum in `(ℒ, ⊆)`: the union; `∅` for the empty family.
pub fn lattice_sup_down(family: &[DownSet]) -> Result<DownSet> {
    family.iter().try_fold(DownSet::Empty, |acc, s| {
        s.require_cut()?;
        Ok(acc.union(s))
    })
}

/// Infimum in `(ℒ, ⊆)`: the interior of the intersection; `ℚ` for the empty
/// family.
pub fn lattice_inf_down(family: &[DownSet]) -> Result<DownSet> {
    let meet = family.iter().try_fold(DownSet::All, |acc, s| {
        s.require_cut()?;
        Ok(acc.intersection(s))
    })?;
    Ok(interior_i(&meet))
}

/// Supremum in `(𝒰, ⊇)`: the intersection; `ℚ` for the empty family.
pub fn lattice_sup_up(family: &[UpSet]) -> Result<UpSet> {
    family.iter().try_fold(UpSet::All, |acc, t| {
        t.require_cut()?;
        Ok(acc.intersection(t))
    })
}

/// Infimum in `(𝒰, ⊇)`: the interior of the union; `∅` for the empty family.
pub fn lattice_inf_up(family: &[UpSet]) -> Result<UpSet> {
    let join = family.iter().try_fold(UpSet::Empty, |acc, t| {
        t.require_cut()?;
        Ok(acc.union(t))
    })?;
    Ok(interior_j(&join))
}

// ---------------------------------------------------------------------------
// Negation and additive inverses

/// `(-1)·A`, mapping lower sets onto upper sets.
pub fn negate_down(a: &DownSet) -> UpSet {
    match a {
        DownSet::Empty => UpSet::Empty,
        DownSet::OpenBelow(b) => UpSet::OpenAbove(-b),
        DownSet::ClosedBelow(b) => UpSet::ClosedAbove(-b),
        DownSet::All => UpSet::All,
    }
}

/// `(-1)·B`, mapping upper sets onto lower sets.
pub fn negate_up(b: &UpSet) -> DownSet {
    match b {
        UpSet::Empty => DownSet::Empty,
        UpSet::OpenAbove(x) => DownSet::OpenBelow(-x),
        UpSet::ClosedAbove(x) => DownSet::ClosedBelow(-x),
        UpSet::All => DownSet::All,
    }
}

/// `A* = I(-(ℚ ∖ A))`, the additive inverse of an ordinary `A`.
pub fn star_down(a: &DownSet) -> Result<DownSet> {
    a.require_cut()?;
    Ok(interior_i(&negate_up(&a.complement())))
}

/// `B* = J(-(ℚ ∖ B))`.
pub fn star_up(b: &UpSet) -> Result<UpSet> {
    b.require_cut()?;
    Ok(interior_j(&negate_down(&b.complement())))
}

// ---------------------------------------------------------------------------
// Multiplication by nonnegative cuts

fn lower_multiplier(s: &DownSet) -> Result<&Rational> {
    match s {
        DownSet::OpenBelow(x) if !x.is_negative() => Ok(x),
        other => Err(Error::InvalidMultiplier(other.to_string())),
    }
}

fn upper_multiplier(t: &UpSet) -> Result<&Rational> {
    match t {
        UpSet::OpenAbove(x) if !x.is_negative() => Ok(x),
        other => Err(Error::InvalidMultiplier(other.to_string())),
    }
}

/// `A ∈ ℒ₊`, i.e. `N_L ⊆ A`.
fn in_lower_plus(a: &DownSet) -> bool {
    n_l().is_subset(a) && a.is_cut()
}

/// `B ∈ 𝒰₊`, i.e. `B ⊆ N_U`.
fn in_upper_plus(b: &UpSet) -> bool {
    b.is_subset(&n_u()) && b.is_cut()
}

// Closed form of `{sa | s ∈ S, a ∈ A, (s ≥ 0 and a ≥ 0) or sa < 0}` for
// `S = {p < s}`, `s ≥ 0` and `A ∈ ℒ₊`. For `S = A = N_L` the comprehension
// itself is empty; the result follows `N_L·A = N_L` instead.
fn direct_lower(s: &Rational, a: &DownSet) -> DownSet {
    match a {
        DownSet::OpenBelow(x) => DownSet::OpenBelow(s * x),
        DownSet::All if s.is_positive() => DownSet::All,
        DownSet::All => n_l(),
        _ => unreachable!("caller passes A in L+"),
    }
}

// `{tb | t ∈ T, b ∈ B}` for `T = {p > t}`, `t ≥ 0` and a nonempty `B ∈ 𝒰₊`.
fn direct_upper(t: &Rational, b: &UpSet) -> UpSet {
    match b {
        UpSet::OpenAbove(y) => UpSet::OpenAbove(t * y),
        _ => unreachable!("caller passes nonempty B in U+"),
    }
}

/// `S · A` for a multiplier `S = {p < s}`, `s ≥ 0`.
///
/// Sets outside ℒ₊ go through `I(-ℚ∖(S · I(-ℚ∖A)))`, i.e. `(S · A*)*`.
pub fn mul_lower(s: &DownSet, a: &DownSet) -> Result<DownSet> {
    let sv = lower_multiplier(s)?;
    a.require_cut()?;
    if *a == DownSet::Empty {
        return Ok(if sv.is_zero() { n_l() } else { DownSet::Empty });
    }
    if in_lower_plus(a) {
        return Ok(direct_lower(sv, a));
    }
    let inner = direct_lower(sv, &star_down(a)?);
    star_down(&inner)
}

/// `T · B` for a multiplier `T = {p > t}`, `t ≥ 0`.
///
/// The same star extension as [`mul_lower`], with `J` in place of `I`.
pub fn mul_upper(t: &UpSet, b: &UpSet) -> Result<UpSet> {
    let tv = upper_multiplier(t)?;
    b.require_cut()?;
    if *b == UpSet::Empty {
        return Ok(if tv.is_zero() { n_u() } else { UpSet::Empty });
    }
    if in_upper_plus(b) {
        return Ok(direct_upper(tv, b));
    }
    let inner = mul_upper(t, &star_up(b)?)?;
    star_up(&inner)
}

// ---------------------------------------------------------------------------
// Grid oracles

/// The sample grid `{k/denominator : |k/denominator| ≤ bound}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridWindow {
    bound: Rational,
    denominator: u64,
}

impl GridWindow {
    pub fn new(bound: Rational, denominator: u64) -> Result<Self> {
        if !bound.is_positive() {
            return Err(Error::InvalidWindow(format!("bound {bound} must be positive")));
        }
        if denominator == 0 {
            return Err(Error::InvalidWindow("denominator must be at least 1".into()));
        }
        Ok(GridWindow { bound, denominator })
    }

    pub fn bound(&self) -> &Rational {
        &self.bound
    }

    pub fn denominator(&self) -> u64 {
        self.denominator
    }

    /// Grid step `1/denominator`.
    pub fn step(&self) -> Rational {
        Rational::frac(1, self.denominator as i64)
    }

    /// All grid points, ascending.
    pub fn points(&self) -> Vec<Rational> {
        points_within(&self.bound, self.denominator)
    }

    /// Grid points with `|q| ≤ bound/2`.
    pub fn shrunken_points(&self) -> Vec<Rational> {
        points_within(&(&self.bound * Rational::frac(1, 2)), self.denominator)
    }

    /// The same window sampled twice as finely.
    pub fn refined(&self) -> GridWindow {
        GridWindow {
            bound: self.bound.clone(),
            denominator: self.denominator * 2,
        }
    }
}

fn points_within(bound: &Rational, denominator: u64) -> Vec<Rational> {
    let d = Rational::from_integer(denominator);
    let k = (bound * &d).floor();
    let mut out = Vec::new();
    let mut i = -k.clone();
    while i <= k {
        out.push(Rational::new(i.clone(), denominator).expect("denominator >= 1"));
        i += 1;
    }
    out
}

/// Brute-force check of [`minkowski_down`] against the element-wise
/// definition of the sum.
///
/// For every grid point `q` of the shrunken window, compares
/// `q ∈ minkowski_down(A, A')` with "there is a sample `a ∈ A` such that
/// `q - a ∈ A'`", where `a` ranges over the window refined to denominator
/// `2·denominator`. The comparison is exact whenever finite boundaries are
/// multiples of `1/denominator` lying strictly inside the half window.
/// Returns `false` if `minkowski_down` rejects its operands.
pub fn grid_oracle_sum(a: &DownSet, b: &DownSet, w: &GridWindow) -> bool {
    let Ok(sum) = minkowski_down(a, b) else {
        return false;
    };
    let factors: Vec<Rational> = w.refined().points().into_iter().filter(|x| a.contains(x)).collect();
    w.shrunken_points().iter().all(|q| {
        let brute = factors.iter().any(|x| b.contains(&(q - x)));
        brute == sum.contains(q)
    })
}

/// Supremum of the admissible grid products
/// `{sa | s ∈ S, a ∈ A, (s ≥ 0 and a ≥ 0) or sa < 0}`, or `None` if no
/// grid pair is admissible.
pub fn grid_product_sup(s: &DownSet, a: &DownSet, w: &GridWindow) -> Option<Rational> {
    let pts = w.points();
    let ss: Vec<&Rational> = pts.iter().filter(|x| s.contains(x)).collect();
    let aa: Vec<&Rational> = pts.iter().filter(|x| a.contains(x)).collect();
    let mut best: Option<Rational> = None;
    for x in &ss {
        for y in &aa {
            let p = *x * *y;
            let admissible = (!x.is_negative() && !y.is_negative()) || p.is_negative();
            if admissible && best.as_ref().is_none_or(|b| &p > b) {
                best = Some(p);
            }
        }
    }
    best
}

/// Brute-force check of [`mul_lower`] on the direct-definition branch
/// (`A ∈ ℒ₊`).
///
/// A bounded result `{p < b}` must satisfy `sup_grid < b` and
/// `b - sup_grid ≤ (2/denominator)·(1 + max(s, a))`; grid factors can sit
/// up to one step below each boundary, so the gap scales with the factor
/// sizes. An unbounded result must reach the largest product available in
/// the window. Factors are sampled on the refined window so that a
/// multiplier `{p < 1/denominator}` still has a positive sample.
/// `N_L · N_L` has no admissible grid pair and reports `false`.
pub fn grid_oracle_product(s: &DownSet, a: &DownSet, w: &GridWindow) -> bool {
    let Ok(prod) = mul_lower(s, a) else {
        return false;
    };
    if !in_lower_plus(a) {
        return false;
    }
    let fine = w.refined();
    let Some(sup) = grid_product_sup(s, a, &fine) else {
        return false;
    };
    let sv = s.boundary().cloned().unwrap_or_else(Rational::zero);
    match prod {
        DownSet::OpenBelow(b) => {
            let av = a.boundary().cloned().unwrap_or_else(Rational::zero);
            let tol = w.step() * Rational::from_integer(2) * (Rational::one() + sv.max(av));
            sup < b && (&b - &sup) <= tol
        }
        DownSet::All => {
            let top = fine.points().into_iter().filter(|x| s.contains(x)).max();
            match top {
                Some(t) if t.is_positive() => sup == t * w.bound(),
                _ => false,
            }
        }
        _ => false,
    }
}

// ---------------------------------------------------------------------------
// Text forms: `{}`, `(<, q)`, `(<=, q)`, `QQ`; `(>, q)`, `(>=, q)` for upper
// sets.

impl fmt::Display for DownSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DownSet::Empty => write!(f, "{{}}"),
            DownSet::OpenBelow(b) => write!(f, "(<, {b})"),
            DownSet::ClosedBelow(b) => write!(f, "(<=, {b})"),
            DownSet::All => write!(f, "QQ"),
        }
    }
}

impl fmt::Display for UpSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            UpSet::Empty => write!(f, "{{}}"),
            UpSet::OpenAbove(b) => write!(f, "(>, {b})"),
            UpSet::ClosedAbove(b) => write!(f, "(>=, {b})"),
            UpSet::All => write!(f, "QQ"),
        }
    }
}

impl fmt::Debug for DownSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Debug for UpSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn split_bounded<'a>(s: &'a str, what: &'static str) -> Result<Option<(&'a str, Rational)>> {
    let Some(inner) = s.strip_prefix('(').and_then(|r| r.strip_suffix(')')) else {
        return Ok(None);
    };
    let (op, q) = inner
        .split_once(',')
        .ok_or_else(|| parse_error(what, s, "expected `(op, q)`"))?;
    Ok(Some((op.trim(), q.trim().parse()?)))
}

impl FromStr for DownSet {
    type Err = Error;

    fn from_str(input: &str) -> Result<Self> {
        let s = input.trim();
        match s {
            "{}" => return Ok(DownSet::Empty),
            "QQ" => return Ok(DownSet::All),
            _ => {}
        }
        match split_bounded(s, "lower set")? {
            Some(("<", q)) => Ok(DownSet::OpenBelow(q)),
            Some(("<=", q)) => Ok(DownSet::ClosedBelow(q)),
            _ => Err(parse_error("lower set", input, "expected {}, (<, q), (<=, q) or QQ")),
        }
    }
}

impl FromStr for UpSet {
    type Err = Error;

    fn from_str(input: &str) -> Result<Self> {
        let s = input.trim();
        match s {
            "{}" => return Ok(UpSet::Empty),
            "QQ" => return Ok(UpSet::All),
            _ => {}
        }
        match split_bounded(s, "upper set")? {
            Some((">", q)) => Ok(UpSet::OpenAbove(q)),
            Some((">=", q)) => Ok(UpSet::ClosedAbove(q)),
            _ => Err(parse_error("upper set", input, "expected {}, (>, q), (>=, q) or QQ")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::frac(n, d)
    }
    fn ob(n: i64, d: i64) -> DownSet {
        DownSet::OpenBelow(q(n, d))
    }
    fn cb(n: i64, d: i64) -> DownSet {
        DownSet::ClosedBelow(q(n, d))
    }
    fn oa(n: i64, d: i64) -> UpSet {
        UpSet::OpenAbove(q(n, d))
    }
    fn ca(n: i64, d: i64) -> UpSet {
        UpSet::ClosedAbove(q(n, d))
    }

    #[test]
    fn membership() {
        assert!(!member_down(&ob(1, 2), &q(1, 2)));
        assert!(member_down(&cb(0, 1), &q(0, 1)));
        assert!(member_down(&DownSet::All, &q(-99, 7)));
        assert!(!member_up(&oa(0, 1), &q(0, 1)));
        assert!(member_up(&ca(0, 1), &q(0, 1)));
        assert!(!member_up(&UpSet::Empty, &q(3, 1)));
    }

    #[test]
    fn interior_operators() {
        assert_eq!(interior_i(&cb(0, 1)), ob(0, 1));
        assert_eq!(interior_i(&DownSet::Empty), DownSet::Empty);
        assert_eq!(interior_i(&DownSet::All), DownSet::All);
        assert_eq!(interior_i(&ob(3, 4)), ob(3, 4));
        assert_eq!(interior_j(&ca(0, 1)), oa(0, 1));
        assert_eq!(interior_j(&UpSet::All), UpSet::All);
        assert_eq!(interior_j(&oa(-2, 1)), oa(-2, 1));
    }

    #[test]
    fn inclusion_order() {
        assert!(ob(1, 1).is_subset(&cb(1, 1)));
        assert!(!cb(1, 1).is_subset(&ob(1, 1)));
        assert!(cb(1, 2).is_subset(&ob(1, 1)));
        assert!(DownSet::Empty.is_subset(&ob(-5, 1)));
        assert!(oa(1, 1).is_subset(&ca(1, 1)));
        assert!(ca(2, 1).is_subset(&oa(1, 1)));
        assert!(!oa(1, 1).is_subset(&oa(2, 1)));
        assert!(UpSet::Empty.is_subset(&UpSet::All));
    }

    #[test]
    fn cut_validation() {
        let generated = CutPair::new(ob(0, 1), ca(0, 1));
        assert_eq!(validate_cut(&generated, CutKind::DL), CutValidity::Ordinary);
        assert_eq!(
            validate_cut(&generated, CutKind::DU),
            CutValidity::Invalid(CutDefect::UpperHasMin(q(0, 1)))
        );
        let du = CutPair::new(cb(0, 1), oa(0, 1));
        assert_eq!(validate_cut(&du, CutKind::DU), CutValidity::Ordinary);
        assert_eq!(
            validate_cut(&du, CutKind::DL),
            CutValidity::Invalid(CutDefect::LowerHasMax(q(0, 1)))
        );
        let bottom = CutPair::new(DownSet::Empty, UpSet::All);
        let top = CutPair::new(DownSet::All, UpSet::Empty);
        for kind in [CutKind::DL, CutKind::DU] {
            assert_eq!(validate_cut(&bottom, kind), CutValidity::NonOrdinary);
            assert_eq!(validate_cut(&top, kind), CutValidity::NonOrdinary);
        }
        let gap = CutPair::new(ob(0, 1), oa(0, 1));
        assert_eq!(
            validate_cut(&gap, CutKind::DL),
            CutValidity::Invalid(CutDefect::Uncovered(q(0, 1)))
        );
        let overlap = CutPair::new(ob(1, 1), oa(0, 1));
        assert!(matches!(
            validate_cut(&overlap, CutKind::DL),
            CutValidity::Invalid(CutDefect::Overlap(_))
        ));
        let both_full = CutPair::new(DownSet::All, UpSet::All);
        assert!(matches!(
            validate_cut(&both_full, CutKind::DL),
            CutValidity::Invalid(CutDefect::Overlap(_))
        ));
    }

    #[test]
    fn minkowski_examples() {
        assert_eq!(minkowski_down(&DownSet::Empty, &DownSet::All).unwrap(), DownSet::Empty);
        assert_eq!(minkowski_down(&ob(1, 2), &ob(1, 3)).unwrap(), ob(5, 6));
        assert_eq!(minkowski_down(&DownSet::All, &ob(7, 1)).unwrap(), DownSet::All);
        assert_eq!(minkowski_up(&UpSet::Empty, &UpSet::All).unwrap(), UpSet::Empty);
        assert_eq!(minkowski_up(&oa(1, 2), &oa(1, 3)).unwrap(), oa(5, 6));
        assert!(matches!(minkowski_down(&cb(0, 1), &ob(1, 1)), Err(Error::NotACut(_))));
        assert!(matches!(minkowski_up(&oa(0, 1), &ca(1, 1)), Err(Error::NotACut(_))));
    }

    #[test]
    fn grid_oracle_sum_examples() {
        let w = GridWindow::new(q(4, 1), 8).unwrap();
        assert!(grid_oracle_sum(&ob(0, 1), &ob(0, 1), &w));
        assert!(grid_oracle_sum(&DownSet::Empty, &ob(1, 1), &w));
        assert!(grid_oracle_sum(&DownSet::All, &ob(-1, 1), &w));
        assert!(grid_oracle_sum(&ob(1, 2), &ob(1, 3), &GridWindow::new(q(4, 1), 6).unwrap()));
        assert!(grid_oracle_sum(&DownSet::All, &ob(7, 1), &w));
        // the oracle catches a wrong answer
        assert!(!grid_oracle_sum(&cb(0, 1), &ob(0, 1), &w));
    }

    #[test]
    fn complement_round_trips() {
        assert_eq!(to_upper(&ob(3, 2)).unwrap(), oa(3, 2));
        assert_eq!(to_upper(&DownSet::All).unwrap(), UpSet::Empty);
        assert_eq!(to_upper(&DownSet::Empty).unwrap(), UpSet::All);
        assert_eq!(to_lower(&oa(0, 1)).unwrap(), ob(0, 1));
        assert!(to_upper(&cb(0, 1)).is_err());
        assert!(to_lower(&ca(0, 1)).is_err());
        // membership sampling of ℚ∖{p<q} minus its least element
        let a = ob(3, 2);
        let b = to_upper(&a).unwrap();
        for k in -40..40 {
            let x = q(k, 8);
            let expected = !a.contains(&x) && x != q(3, 2);
            assert_eq!(b.contains(&x), expected, "at {x}");
        }
    }

    #[test]
    fn lattice_examples() {
        assert_eq!(lattice_sup_down(&[]).unwrap(), DownSet::Empty);
        assert_eq!(lattice_inf_down(&[]).unwrap(), DownSet::All);
        assert_eq!(lattice_sup_down(&[ob(1, 1), ob(2, 1), DownSet::Empty]).unwrap(), ob(2, 1));
        assert_eq!(lattice_inf_down(&[ob(0, 1), DownSet::All]).unwrap(), ob(0, 1));
        assert_eq!(lattice_sup_up(&[]).unwrap(), UpSet::All);
        assert_eq!(lattice_inf_up(&[]).unwrap(), UpSet::Empty);
        assert_eq!(lattice_sup_up(&[oa(1, 1), oa(2, 1)]).unwrap(), oa(2, 1));
        assert_eq!(lattice_inf_up(&[oa(1, 1), oa(2, 1), UpSet::Empty]).unwrap(), oa(1, 1));
        assert!(lattice_sup_down(&[cb(1, 1)]).is_err());
        assert!(lattice_inf_up(&[ca(1, 1)]).is_err());
    }

    #[test]
    fn infinite_meet_needs_interior() {
        // ∩ {p < 1/n} = {p ≤ 0}; the infimum in ℒ is I of that, namely N_L.
        // Truncations: the finite meet is {p < 1/N}, and the limit set is
        // handled by I on the symbolic intersection.
        for n in 1..=32 {
            let family: Vec<DownSet> = (1..=n).map(|k| ob(1, k)).collect();
            assert_eq!(lattice_inf_down(&family).unwrap(), ob(1, n));
        }
        assert_eq!(interior_i(&cb(0, 1)), n_l());
    }

    #[test]
    fn star_examples() {
        assert_eq!(star_down(&ob(3, 1)).unwrap(), ob(-3, 1));
        assert_eq!(minkowski_down(&ob(3, 1), &ob(-3, 1)).unwrap(), n_l());
        assert_eq!(star_down(&DownSet::All).unwrap(), DownSet::Empty);
        assert_eq!(star_down(&DownSet::Empty).unwrap(), DownSet::All);
        assert_eq!(star_up(&oa(2, 1)).unwrap(), oa(-2, 1));
        assert_eq!(minkowski_up(&oa(2, 1), &oa(-2, 1)).unwrap(), n_u());
        assert_eq!(star_up(&UpSet::All).unwrap(), UpSet::Empty);
        assert_eq!(star_up(&UpSet::Empty).unwrap(), UpSet::All);
    }

    #[test]
    fn negation_examples() {
        assert_eq!(negate_down(&ob(2, 1)), oa(-2, 1));
        assert_eq!(negate_down(&cb(2, 1)), ca(-2, 1));
        assert_eq!(negate_down(&DownSet::Empty), UpSet::Empty);
        assert_eq!(negate_down(&DownSet::All), UpSet::All);
        assert_eq!(negate_up(&oa(5, 1)), ob(-5, 1));
    }

    #[test]
    fn multiplication_examples() {
        assert_eq!(mul_lower(&n_l(), &DownSet::All).unwrap(), n_l());
        assert_eq!(mul_lower(&n_l(), &DownSet::Empty).unwrap(), n_l());
        assert_eq!(mul_lower(&o_l(), &ob(-5, 1)).unwrap(), ob(-5, 1));
        assert_eq!(mul_lower(&ob(2, 1), &ob(3, 1)).unwrap(), ob(6, 1));
        assert_eq!(mul_lower(&ob(2, 1), &ob(-3, 1)).unwrap(), ob(-6, 1));
        assert_eq!(mul_lower(&ob(2, 1), &DownSet::Empty).unwrap(), DownSet::Empty);
        assert_eq!(mul_lower(&ob(2, 1), &DownSet::All).unwrap(), DownSet::All);
        assert!(matches!(mul_lower(&ob(-1, 1), &ob(1, 1)), Err(Error::InvalidMultiplier(_))));
        assert!(matches!(mul_lower(&DownSet::All, &ob(1, 1)), Err(Error::InvalidMultiplier(_))));
        assert!(matches!(mul_lower(&o_l(), &cb(1, 1)), Err(Error::NotACut(_))));

        // 𝒰 side, obtained by symmetry
        assert_eq!(mul_upper(&n_u(), &UpSet::Empty).unwrap(), n_u());
        assert_eq!(mul_upper(&n_u(), &UpSet::All).unwrap(), n_u());
        assert_eq!(mul_upper(&oa(2, 1), &UpSet::Empty).unwrap(), UpSet::Empty);
        assert_eq!(mul_upper(&oa(2, 1), &UpSet::All).unwrap(), UpSet::All);
        assert_eq!(mul_upper(&o_u(), &oa(-5, 1)).unwrap(), oa(-5, 1));
        assert_eq!(mul_upper(&oa(3, 1), &oa(-1, 2)).unwrap(), oa(-3, 2));
        assert!(mul_upper(&UpSet::Empty, &oa(1, 1)).is_err());
    }

    #[test]
    fn grid_oracle_product_examples() {
        assert!(grid_oracle_product(&ob(2, 1), &ob(3, 1), &GridWindow::new(q(8, 1), 4).unwrap()));
        assert!(grid_oracle_product(&n_l(), &ob(3, 1), &GridWindow::new(q(4, 1), 8).unwrap()));
        assert!(grid_oracle_product(&o_l(), &ob(1, 2), &GridWindow::new(q(4, 1), 16).unwrap()));
        assert!(grid_oracle_product(&ob(1, 1), &DownSet::All, &GridWindow::new(q(4, 1), 8).unwrap()));
        // the one corner where the comprehension is empty
        assert!(!grid_oracle_product(&n_l(), &n_l(), &GridWindow::new(q(4, 1), 8).unwrap()));
        assert_eq!(grid_product_sup(&n_l(), &n_l(), &GridWindow::new(q(4, 1), 8).unwrap()), None);
    }

    #[test]
    fn motivating_contradiction() {
        // Postulating (∅,ℚ) + (ℚ,∅) = (N_L, P_L) and adding the two absorbing
        // equations yields (N_L, P_L) = (O_L, Q_L); the two cuts differ.
        let generated_0 = CutPair::new(n_l(), n_l().complement());
        assert_eq!(generated_0.upper, ca(0, 1));
        assert_eq!(validate_cut(&generated_0, CutKind::DL), CutValidity::Ordinary);
        assert_ne!(n_l(), o_l());
        assert_ne!(CutPair::new(n_l(), ca(0, 1)), CutPair::new(o_l(), ca(1, 1)));
        // what the absorbing rule actually gives
        assert_eq!(minkowski_down(&DownSet::Empty, &DownSet::All).unwrap(), DownSet::Empty);
        assert_eq!(minkowski_down(&DownSet::Empty, &n_l()).unwrap(), DownSet::Empty);
        assert_eq!(minkowski_down(&DownSet::All, &o_l()).unwrap(), DownSet::All);
        assert_ne!(minkowski_down(&DownSet::Empty, &DownSet::All).unwrap(), n_l());
    }

    #[test]
    fn text_forms() {
        for s in [DownSet::Empty, ob(1, 2), cb(-3, 1), DownSet::All] {
            assert_eq!(s.to_string().parse::<DownSet>().unwrap(), s);
        }
        for t in [UpSet::Empty, oa(1, 2), ca(-3, 1), UpSet::All] {
            assert_eq!(t.to_string().parse::<UpSet>().unwrap(), t);
        }
        assert_eq!(ob(1, 2).to_string(), "(<, 1/2)");
        assert_eq!(cb(0, 1).to_string(), "(<=, 0)");
        assert_eq!(DownSet::Empty.to_string(), "{}");
        assert!("(<, 1/0)".parse::<DownSet>().is_err());
        assert!("(>, 1)".parse::<DownSet>().is_err());
    }

    #[test]
    fn window_validation() {
        assert!(GridWindow::new(q(0, 1), 4).is_err());
        assert!(GridWindow::new(q(1, 1), 0).is_err());
        let w = GridWindow::new(q(4, 1), 8).unwrap();
        assert_eq!(w.points().len(), 65);
        assert_eq!(w.shrunken_points().len(), 33);
    }
}
