//! Extended-real-valued functions sampled on a finite rational grid.
//!
//! Convexity is tested in two ways: Jensen's inequality evaluated with a
//! chosen addition, and convexity of the sampled epigraph. With
//! inf-addition the two agree even for improper functions; with
//! sup-addition they do not.

use std::fmt::Write as _;

use crate::error::{parse_error, Error, Result};
use crate::extreal::{fold_inf, inf_add, ArithMode, ExtReal};
use crate::qnum::Rational;

/// A function table on a strictly increasing grid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtFn {
    grid: Vec<Rational>,
    values: Vec<ExtReal>,
}

impl ExtFn {
    pub fn new(grid: Vec<Rational>, values: Vec<ExtReal>) -> Result<Self> {
        if grid.len() != values.len() {
            return Err(Error::DimensionMismatch {
                expected: grid.len(),
                got: values.len(),
            });
        }
        if let Some(w) = grid.windows(2).find(|w| w[0] >= w[1]) {
            return Err(Error::UnsortedGrid(w[1].clone()));
        }
        Ok(ExtFn { grid, values })
    }

    /// Tabulates `f` on `grid`.
    pub fn from_fn(grid: Vec<Rational>, f: impl Fn(&Rational) -> ExtReal) -> Result<Self> {
        let values = grid.iter().map(f).collect();
        ExtFn::new(grid, values)
    }

    pub fn grid(&self) -> &[Rational] {
        &self.grid
    }

    pub fn values(&self) -> &[ExtReal] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.grid.len()
    }

    pub fn is_empty(&self) -> bool {
        self.grid.is_empty()
    }

    pub fn value(&self, x: &Rational) -> Option<&ExtReal> {
        self.grid.binary_search(x).ok().map(|i| &self.values[i])
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Rational, &ExtReal)> {
        self.grid.iter().zip(&self.values)
    }

    /// `x ↦ -f(x)`.
    pub fn negated(&self) -> ExtFn {
        ExtFn {
            grid: self.grid.clone(),
            values: self.values.iter().map(crate::extreal::neg).collect(),
        }
    }

    /// `x,value` lines under a header; infinities as `-inf`/`+inf`.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("x,value\n");
        for (x, v) in self.iter() {
            let _ = writeln!(out, "{x},{v}");
        }
        out
    }

    /// Parses the format written by [`ExtFn::to_csv`]. Rows may come in any
    /// order; errors name the offending line.
    pub fn from_csv(text: &str) -> Result<Self> {
        let mut rows = Vec::new();
        let mut lines = text.lines().enumerate();
        match lines.next() {
            Some((_, h)) if h.trim() == "x,value" => {}
            _ => return Err(parse_error("function table", text.lines().next().unwrap_or(""), "line 1: expected header `x,value`")),
        }
        for (i, line) in lines {
            if line.trim().is_empty() {
                continue;
            }
            let lineno = i + 1;
            let (x, v) = line
                .split_once(',')
                .ok_or_else(|| parse_error("function table", line, format!("line {lineno}: expected `x,value`")))?;
            let x: Rational = x
                .trim()
                .parse()
                .map_err(|e| parse_error("function table", line, format!("line {lineno}: {e}")))?;
            let v: ExtReal = v
                .trim()
                .parse()
                .map_err(|e| parse_error("function table", line, format!("line {lineno}: {e}")))?;
            rows.push((x, v));
        }
        rows.sort_by(|a, b| a.0.cmp(&b.0));
        if let Some(w) = rows.windows(2).find(|w| w[0].0 == w[1].0) {
            return Err(parse_error("function table", &w[0].0.to_string(), "duplicate grid point"));
        }
        let (grid, values) = rows.into_iter().unzip();
        ExtFn::new(grid, values)
    }
}

/// One failed instance of Jensen's inequality:
/// `f(αx + (1-α)y) > αf(x) + (1-α)f(y)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JensenViolation {
    pub x: Rational,
    pub y: Rational,
    pub alpha: Rational,
    pub lhs: ExtReal,
    pub rhs: ExtReal,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JensenReport {
    pub holds: bool,
    pub violations: Vec<JensenViolation>,
    /// Triples whose combination lay on the grid and was evaluated.
    pub checked: usize,
    /// Triples skipped because `αx + (1-α)y` is off the grid.
    pub skipped: usize,
}

fn check_weights(alphas: &[Rational]) -> Result<()> {
    let one = Rational::one();
    match alphas.iter().find(|a| !a.is_positive() || **a >= one) {
        Some(a) => Err(Error::InvalidWeight(a.clone())),
        None => Ok(()),
    }
}

fn combine(alpha: &Rational, x: &Rational, y: &Rational) -> Rational {
    alpha * x + (Rational::one() - alpha) * y
}

fn jensen_check(f: &ExtFn, alphas: &[Rational], mode: ArithMode) -> Result<JensenReport> {
    if f.is_empty() {
        return Err(Error::EmptyDomain);
    }
    check_weights(alphas)?;
    let mut report = JensenReport {
        holds: true,
        violations: Vec::new(),
        checked: 0,
        skipped: 0,
    };
    for (x, fx) in f.iter() {
        for (y, fy) in f.iter() {
            if x == y {
                continue;
            }
            for alpha in alphas {
                let z = combine(alpha, x, y);
                let Some(lhs) = f.value(&z) else {
                    report.skipped += 1;
                    continue;
                };
                report.checked += 1;
                let beta = Rational::one() - alpha;
                let rhs = mode.add(&mode.scale(alpha, fx)?, &mode.scale(&beta, fy)?);
                if *lhs > rhs {
                    report.violations.push(JensenViolation {
                        x: x.clone(),
                        y: y.clone(),
                        alpha: alpha.clone(),
                        lhs: lhs.clone(),
                        rhs,
                    });
                }
            }
        }
    }
    report.holds = report.violations.is_empty();
    Ok(report)
}

/// Jensen's inequality with inf-addition on every grid-closed triple.
pub fn jensen_inf_check(f: &ExtFn, alphas: &[Rational]) -> Result<JensenReport> {
    jensen_check(f, alphas, ArithMode::InfAdd)
}

/// Jensen's inequality with sup-addition on every grid-closed triple.
pub fn jensen_sup_check(f: &ExtFn, alphas: &[Rational]) -> Result<JensenReport> {
    jensen_check(f, alphas, ArithMode::SupAdd)
}

/// Two epigraph points whose convex combination leaves the epigraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EpiWitness {
    pub x: Rational,
    pub r: Rational,
    pub y: Rational,
    pub s: Rational,
    pub alpha: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EpiReport {
    pub convex: bool,
    pub witness: Option<EpiWitness>,
}

/// Samples `epi f = {(x, r) | f(x) ≤ r}` at the heights `r_levels` and checks
/// that `α(x, r) + (1-α)(y, s)` stays inside for every grid-closed triple.
/// Returns the first witness found on failure.
pub fn epi_convex_sampled(f: &ExtFn, r_levels: &[Rational], alphas: &[Rational]) -> Result<EpiReport> {
    if f.is_empty() {
        return Err(Error::EmptyDomain);
    }
    check_weights(alphas)?;
    let mut levels = r_levels.to_vec();
    levels.sort();
    levels.dedup();
    let above = |v: &ExtReal| -> Vec<&Rational> { levels.iter().filter(|r| *v <= ExtReal::Fin((*r).clone())).collect() };
    for (x, fx) in f.iter() {
        let rs = above(fx);
        for (y, fy) in f.iter() {
            if x == y {
                continue;
            }
            let ss = above(fy);
            for alpha in alphas {
                let z = combine(alpha, x, y);
                let Some(fz) = f.value(&z) else { continue };
                for r in &rs {
                    for s in &ss {
                        let height = combine(alpha, r, s);
                        if *fz > ExtReal::Fin(height) {
                            return Ok(EpiReport {
                                convex: false,
                                witness: Some(EpiWitness {
                                    x: x.clone(),
                                    r: (*r).clone(),
                                    y: y.clone(),
                                    s: (*s).clone(),
                                    alpha: alpha.clone(),
                                }),
                            });
                        }
                    }
                }
            }
        }
    }
    Ok(EpiReport {
        convex: true,
        witness: None,
    })
}

/// Heights at which sampling the epigraph decides convexity on the grid
/// exactly: every finite value of `f`, plus one level low enough that
/// `α·r + (1-α)·v < w` for all finite values `v, w` and the smallest weight.
pub fn epi_levels(f: &ExtFn, alphas: &[Rational]) -> Vec<Rational> {
    let mut levels: Vec<Rational> = f.values().iter().filter_map(|v| v.as_finite().cloned()).collect();
    let m = levels.iter().map(Rational::abs).max().unwrap_or_else(Rational::zero);
    let min_alpha = alphas.iter().min().cloned().unwrap_or_else(|| Rational::frac(1, 2));
    let two_m = &m + &m;
    let reach = two_m.checked_div(&min_alpha).unwrap_or(two_m);
    levels.push(-(reach + Rational::one()));
    levels.sort();
    levels.dedup();
    levels
}

/// `x ↦ f1(x) +^ f2(x)` on a shared grid.
pub fn pointwise_inf_sum(f1: &ExtFn, f2: &ExtFn) -> Result<ExtFn> {
    if f1.grid != f2.grid {
        return Err(Error::DomainMismatch);
    }
    let values = f1.values.iter().zip(&f2.values).map(|(a, b)| inf_add(a, b)).collect();
    ExtFn::new(f1.grid.clone(), values)
}

/// Infimal convolution `x ↦ inf{f1(x1) +^ f2(x2) | x1 + x2 = x}` evaluated
/// on `grid`. A point with no split on the two input grids gets `+∞`.
pub fn inf_convolution_on(f1: &ExtFn, f2: &ExtFn, grid: Vec<Rational>) -> Result<ExtFn> {
    ExtFn::from_fn(grid, |x| {
        let splits: Vec<ExtReal> = f1
            .iter()
            .filter_map(|(x1, v1)| f2.value(&(x - x1)).map(|v2| inf_add(v1, v2)))
            .collect();
        fold_inf(&splits)
    })
}

/// Infimal convolution on the sum grid `{x1 + x2}` of the two inputs.
pub fn inf_convolution(f1: &ExtFn, f2: &ExtFn) -> Result<ExtFn> {
    if f1.is_empty() || f2.is_empty() {
        return Err(Error::EmptyDomain);
    }
    let mut grid: Vec<Rational> = f1
        .grid
        .iter()
        .flat_map(|a| f2.grid.iter().map(move |b| a + b))
        .collect();
    grid.sort();
    grid.dedup();
    inf_convolution_on(f1, f2, grid)
}

/// `+∞` left of 0, `0` at 0, `-∞` right of 0: convex, satisfies Jensen with
/// inf-addition, and violates it with sup-addition.
pub fn counterexample_fn(grid: Vec<Rational>) -> Result<ExtFn> {
    if grid.binary_search(&Rational::zero()).is_err() {
        return Err(Error::MissingGridPoint(Rational::zero()));
    }
    ExtFn::from_fn(grid, |x| {
        if x.is_negative() {
            ExtReal::PosInf
        } else if x.is_zero() {
            ExtReal::zero()
        } else {
            ExtReal::NegInf
        }
    })
}

/// Grid `lo, lo + step, ..., ≤ hi`.
pub fn grid_range(lo: &Rational, hi: &Rational, step: &Rational) -> Result<Vec<Rational>> {
    if !step.is_positive() {
        return Err(Error::InvalidWindow(format!("step {step} must be positive")));
    }
    let mut out = Vec::new();
    let mut x = lo.clone();
    while &x <= hi {
        out.push(x.clone());
        x = &x + step;
    }
    Ok(out)
}

/// The weights `{1/4, 1/3, 1/2, 2/3, 3/4}` used by default for convexity checks.
pub fn default_alphas() -> Vec<Rational> {
    [(1, 4), (1, 3), (1, 2), (2, 3), (3, 4)]
        .into_iter()
        .map(|(n, d)| Rational::frac(n, d))
        .collect()
}
