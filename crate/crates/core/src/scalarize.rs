//! Polyhedral set-valued functions and their linear scalarizations.
//!
//! A value is stored by generators, `conv(points) + cone(rays)`, so the
//! scalarization `x ↦ inf{w·z | z ∈ f(x)}` is a finite minimum plus a sign
//! test on the rays. Scalarizations of a perfectly well-behaved set-valued
//! function can take both infinite values; the results plug directly into
//! [`crate::convexfn`].

use std::fmt;
use std::str::FromStr;

use crate::convexfn::ExtFn;
use crate::error::{parse_error, Error, Result};
use crate::extreal::{fold_inf, ExtReal};
use crate::qnum::Rational;

pub type Vector = Vec<Rational>;

fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}

/// `conv(points) + cone(rays)` in ℚ^dim; empty iff there are no points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyVal {
    dim: usize,
    points: Vec<Vector>,
    rays: Vec<Vector>,
}

impl PolyVal {
    pub fn new(dim: usize, points: Vec<Vector>, rays: Vec<Vector>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::DimensionMismatch { expected: 1, got: 0 });
        }
        for v in points.iter().chain(&rays) {
            if v.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    got: v.len(),
                });
            }
        }
        if rays.iter().any(|r| r.iter().all(Rational::is_zero)) {
            return Err(Error::ZeroRay);
        }
        Ok(PolyVal { dim, points, rays })
    }

    pub fn empty(dim: usize) -> Self {
        PolyVal {
            dim,
            points: Vec::new(),
            rays: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn points(&self) -> &[Vector] {
        &self.points
    }

    pub fn rays(&self) -> &[Vector] {
        &self.rays
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// `self + cone(cone_rays)`; the empty set stays empty.
    pub fn plus_cone(&self, cone_rays: &[Vector]) -> Result<PolyVal> {
        if self.is_empty() {
            return Ok(self.clone());
        }
        let mut rays = self.rays.clone();
        rays.extend(cone_rays.iter().cloned());
        PolyVal::new(self.dim, self.points.clone(), rays)
    }

    /// Sufficient test for `self = ℚ^dim`: nonempty with rays that
    /// positively span the space. Exact for `dim ≤ 2`; in higher dimensions
    /// only the case where every `±e_i` is a ray direction is detected.
    pub fn is_full_space(&self) -> bool {
        !self.is_empty() && rays_span_space(self.dim, &self.rays)
    }
}

fn rays_span_space(dim: usize, rays: &[Vector]) -> bool {
    match dim {
        1 => rays.iter().any(|r| r[0].is_positive()) && rays.iter().any(|r| r[0].is_negative()),
        2 => {
            if rays.is_empty() {
                return false;
            }
            // The cone is a proper subset iff some nonzero w has w·r ≥ 0 for
            // every ray; such a w can be taken orthogonal to one of the rays.
            let supported = rays.iter().any(|r| {
                let normals = [vec![-&r[1], r[0].clone()], vec![r[1].clone(), -&r[0]]];
                normals
                    .iter()
                    .any(|w| rays.iter().all(|s| !dot(w, s).is_negative()))
            });
            !supported
        }
        _ => (0..dim).all(|i| {
            [true, false].iter().all(|positive| {
                rays.iter().any(|r| {
                    r.iter().enumerate().all(|(j, c)| {
                        if j == i {
                            if *positive {
                                c.is_positive()
                            } else {
                                c.is_negative()
                            }
                        } else {
                            c.is_zero()
                        }
                    })
                })
            })
        }),
    }
}

/// `inf{w·z | z ∈ P}`.
pub fn support_inf(p: &PolyVal, w: &[Rational]) -> Result<ExtReal> {
    if w.len() != p.dim {
        return Err(Error::DimensionMismatch {
            expected: p.dim,
            got: w.len(),
        });
    }
    if p.is_empty() {
        return Ok(ExtReal::PosInf);
    }
    if p.rays.iter().any(|r| dot(w, r).is_negative()) {
        return Ok(ExtReal::NegInf);
    }
    let values: Vec<ExtReal> = p.points.iter().map(|z| ExtReal::Fin(dot(w, z))).collect();
    Ok(fold_inf(&values))
}

/// A set-valued function on a finite grid.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SetFn {
    grid: Vec<Rational>,
    values: Vec<PolyVal>,
}

impl SetFn {
    pub fn new(grid: Vec<Rational>, values: Vec<PolyVal>) -> Result<Self> {
        if grid.len() != values.len() {
            return Err(Error::DimensionMismatch {
                expected: grid.len(),
                got: values.len(),
            });
        }
        if let Some(w) = grid.windows(2).find(|w| w[0] >= w[1]) {
            return Err(Error::UnsortedGrid(w[1].clone()));
        }
        if let Some(d) = values.first().map(PolyVal::dim) {
            if let Some(v) = values.iter().find(|v| v.dim != d) {
                return Err(Error::DimensionMismatch { expected: d, got: v.dim });
            }
        }
        Ok(SetFn { grid, values })
    }

    pub fn grid(&self) -> &[Rational] {
        &self.grid
    }

    pub fn values(&self) -> &[PolyVal] {
        &self.values
    }

    pub fn value(&self, x: &Rational) -> Option<&PolyVal> {
        self.grid.binary_search(x).ok().map(|i| &self.values[i])
    }

    /// `x ↦ f(x) + C` on nonempty values, `∅` elsewhere. Generator form is
    /// already closed, so this is the closed hull `f^△`.
    pub fn closed_hull(&self, cone_rays: &[Vector]) -> Result<SetFn> {
        let values = self
            .values
            .iter()
            .map(|v| v.plus_cone(cone_rays))
            .collect::<Result<Vec<_>>>()?;
        SetFn::new(self.grid.clone(), values)
    }
}

/// `x ↦ support_inf(f(x), w)`.
pub fn scalarization(f: &SetFn, w: &[Rational]) -> Result<ExtFn> {
    let values = f
        .values
        .iter()
        .map(|p| support_inf(p, w))
        .collect::<Result<Vec<_>>>()?;
    ExtFn::new(f.grid.clone(), values)
}

/// The direction `v = (0, 1)` generating the ordering cone of the example.
pub fn example_direction() -> Vector {
    vec![Rational::zero(), Rational::one()]
}

/// `H⁺(v) = {z | z₂ ≥ 0}` for `x > 0`, `C = cone{v}` at 0, `∅` for `x < 0`.
pub fn example_setfn(grid: Vec<Rational>) -> Result<SetFn> {
    if grid.binary_search(&Rational::zero()).is_err() {
        return Err(Error::MissingGridPoint(Rational::zero()));
    }
    let origin = vec![Rational::zero(), Rational::zero()];
    let e1 = vec![Rational::one(), Rational::zero()];
    let half_plane = PolyVal::new(2, vec![origin.clone()], vec![e1.clone(), e1.iter().map(|c| -c).collect(), example_direction()])?;
    let cone = PolyVal::new(2, vec![origin], vec![example_direction()])?;
    let values = grid
        .iter()
        .map(|x| {
            if x.is_positive() {
                half_plane.clone()
            } else if x.is_zero() {
                cone.clone()
            } else {
                PolyVal::empty(2)
            }
        })
        .collect();
    SetFn::new(grid, values)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Properness {
    /// Some value is nonempty.
    pub dom_nonempty: bool,
    /// No value was detected to be the whole space.
    pub no_full_space_value: bool,
}

pub fn properness_report(f: &SetFn) -> Properness {
    Properness {
        dom_nonempty: f.values.iter().any(|v| !v.is_empty()),
        no_full_space_value: !f.values.iter().any(PolyVal::is_full_space),
    }
}

/// Somewhere below `+∞` and nowhere `-∞`.
pub fn is_proper(f: &ExtFn) -> bool {
    f.values().iter().any(|v| *v != ExtReal::PosInf) && !f.values().contains(&ExtReal::NegInf)
}

// ---------------------------------------------------------------------------
// Text form: `points:[(a,b);...] rays:[(c,d);...]`

fn write_list(f: &mut fmt::Formatter<'_>, vs: &[Vector]) -> fmt::Result {
    f.write_str("[")?;
    for (i, v) in vs.iter().enumerate() {
        if i > 0 {
            f.write_str(";")?;
        }
        f.write_str("(")?;
        for (j, c) in v.iter().enumerate() {
            if j > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")?;
    }
    f.write_str("]")
}

impl fmt::Display for PolyVal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("points:")?;
        write_list(f, &self.points)?;
        f.write_str(" rays:")?;
        write_list(f, &self.rays)
    }
}

fn parse_list(s: &str, input: &str) -> Result<Vec<Vector>> {
    let inner = s
        .trim()
        .strip_prefix('[')
        .and_then(|r| r.strip_suffix(']'))
        .ok_or_else(|| parse_error("polyhedral value", input, "expected `[...]`"))?;
    if inner.trim().is_empty() {
        return Ok(Vec::new());
    }
    inner
        .split(';')
        .map(|tuple| {
            let body = tuple
                .trim()
                .strip_prefix('(')
                .and_then(|r| r.strip_suffix(')'))
                .ok_or_else(|| parse_error("polyhedral value", input, format!("bad vector {tuple:?}")))?;
            body.split(',').map(|c| c.trim().parse()).collect()
        })
        .collect()
}

impl FromStr for PolyVal {
    type Err = Error;

    fn from_str(input: &str) -> Result<Self> {
        let s = input.trim();
        let rest = s
            .strip_prefix("points:")
            .ok_or_else(|| parse_error("polyhedral value", input, "expected `points:`"))?;
        let (pts, rays) = rest
            .split_once("rays:")
            .ok_or_else(|| parse_error("polyhedral value", input, "expected `rays:`"))?;
        let points = parse_list(pts, input)?;
        let rays = parse_list(rays, input)?;
        let dim = points
            .first()
            .or(rays.first())
            .map(Vec::len)
            .ok_or_else(|| parse_error("polyhedral value", input, "cannot infer the dimension of an empty generator list"))?;
        PolyVal::new(dim, points, rays)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use ExtReal::{NegInf, PosInf};

    fn q(n: i64) -> Rational {
        Rational::from_integer(n)
    }
    fn v(a: i64, b: i64) -> Vector {
        vec![q(a), q(b)]
    }

    #[test]
    fn support_examples() {
        let cone = PolyVal::new(2, vec![v(0, 0)], vec![v(0, 1)]).unwrap();
        assert_eq!(support_inf(&cone, &v(1, 1)).unwrap(), ExtReal::zero());
        let half = PolyVal::new(2, vec![v(0, 0)], vec![v(1, 0), v(-1, 0), v(0, 1)]).unwrap();
        assert_eq!(support_inf(&half, &v(1, 1)).unwrap(), NegInf);
        assert_eq!(support_inf(&PolyVal::empty(2), &v(3, -7)).unwrap(), PosInf);
        let seg = PolyVal::new(2, vec![v(1, 2), v(-3, 5)], vec![]).unwrap();
        assert_eq!(support_inf(&seg, &v(1, 1)).unwrap(), ExtReal::from(2));
        assert!(matches!(support_inf(&cone, &[q(1)]), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn construction_checks() {
        assert_eq!(PolyVal::new(2, vec![], vec![v(0, 0)]), Err(Error::ZeroRay));
        assert!(PolyVal::new(2, vec![vec![q(1)]], vec![]).is_err());
        assert!(SetFn::new(vec![q(0)], vec![PolyVal::empty(2), PolyVal::empty(2)]).is_err());
        assert!(example_setfn(vec![q(1)]).is_err());
    }

    #[test]
    fn example_values() {
        let f = example_setfn(vec![q(-1), q(0), q(1)]).unwrap();
        assert!(f.value(&q(-1)).unwrap().is_empty());
        assert_eq!(f.value(&q(0)).unwrap().rays(), &[v(0, 1)]);
        assert_eq!(f.value(&q(1)).unwrap().rays().len(), 3);
        // f already equals its closed hull with respect to C
        let hull = f.closed_hull(&[example_direction()]).unwrap();
        for x in [q(-1), q(0), q(1)] {
            for w in [v(1, 1), v(0, 1), v(2, 3)] {
                assert_eq!(
                    support_inf(hull.value(&x).unwrap(), &w).unwrap(),
                    support_inf(f.value(&x).unwrap(), &w).unwrap()
                );
            }
        }
    }

    #[test]
    fn scalarization_examples() {
        let f = example_setfn(vec![q(-1), q(0), q(1)]).unwrap();
        let phi = scalarization(&f, &v(1, 1)).unwrap();
        assert_eq!(phi.values(), &[PosInf, ExtReal::zero(), NegInf]);
        assert!(!is_proper(&phi));
        let psi = scalarization(&f, &v(0, 1)).unwrap();
        assert_eq!(psi.values(), &[PosInf, ExtReal::zero(), ExtReal::zero()]);
        assert!(is_proper(&psi));
        let empty = SetFn::new(vec![q(0), q(1)], vec![PolyVal::empty(2), PolyVal::empty(2)]).unwrap();
        assert!(scalarization(&empty, &v(1, 0)).unwrap().values().iter().all(|x| *x == PosInf));
    }

    #[test]
    fn properness() {
        let f = example_setfn(vec![q(-1), q(0), q(1)]).unwrap();
        assert_eq!(properness_report(&f), Properness { dom_nonempty: true, no_full_space_value: true });
        let empty = SetFn::new(vec![q(0)], vec![PolyVal::empty(2)]).unwrap();
        assert_eq!(properness_report(&empty), Properness { dom_nonempty: false, no_full_space_value: true });
        let plane = PolyVal::new(2, vec![v(0, 0)], vec![v(1, 0), v(-1, 0), v(0, 1), v(0, -1)]).unwrap();
        let full = SetFn::new(vec![q(0)], vec![plane]).unwrap();
        assert_eq!(properness_report(&full), Properness { dom_nonempty: true, no_full_space_value: false });
    }

    #[test]
    fn full_space_detection_in_the_plane() {
        let mk = |rays: Vec<Vector>| PolyVal::new(2, vec![v(0, 0)], rays).unwrap().is_full_space();
        assert!(mk(vec![v(1, 0), v(-1, 1), v(-1, -1)]));
        assert!(!mk(vec![v(1, 0), v(-1, 0), v(0, 1)]));
        assert!(!mk(vec![v(1, 0), v(-1, 0)]));
        assert!(!mk(vec![v(1, 1)]));
        assert!(!mk(vec![]));
        assert!(!PolyVal::empty(2).is_full_space());
        let line = PolyVal::new(1, vec![vec![q(0)]], vec![vec![q(2)], vec![q(-1)]]).unwrap();
        assert!(line.is_full_space());
    }

    #[test]
    fn text_form() {
        let half = PolyVal::new(2, vec![v(0, 0)], vec![v(1, 0), v(-1, 0), v(0, 1)]).unwrap();
        let s = half.to_string();
        assert_eq!(s, "points:[(0,0)] rays:[(1,0);(-1,0);(0,1)]");
        assert_eq!(s.parse::<PolyVal>().unwrap(), half);
        let with_frac: PolyVal = "points:[(1/2, -3)] rays:[]".parse().unwrap();
        assert_eq!(with_frac.points()[0][0], Rational::frac(1, 2));
        assert!("points:[] rays:[]".parse::<PolyVal>().is_err());
        assert!("rays:[(1,0)]".parse::<PolyVal>().is_err());
    }
}
