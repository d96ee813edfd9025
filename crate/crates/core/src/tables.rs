//! The infinity tables of both arithmetics, computed from the operations.

use std::fmt::Write;

use crate::extreal::{ArithMode, ExtReal};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Op {
    Sum,
    Difference,
}

/// One table cell: `a op b = value` under `mode`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Entry {
    pub mode: ArithMode,
    pub op: Op,
    pub a: ExtReal,
    pub b: ExtReal,
    pub value: ExtReal,
}

impl Entry {
    fn new(mode: ArithMode, op: Op, a: ExtReal, b: ExtReal) -> Entry {
        let value = match op {
            Op::Sum => mode.add(&a, &b),
            Op::Difference => mode.diff(&a, &b),
        };
        Entry { mode, op, a, b, value }
    }

    /// `(+inf) - (-inf) = +inf`; finite operands are left bare, and
    /// infinite ones only get parentheses when both operands are infinite.
    pub fn render(&self) -> String {
        let sym = match self.op {
            Op::Sum => '+',
            Op::Difference => '-',
        };
        if self.a.is_finite() || self.b.is_finite() {
            format!("{} {sym} {} = {}", self.a, self.b, self.value)
        } else {
            format!("({}) {sym} ({}) = {}", self.a, self.b, self.value)
        }
    }
}

/// The sum of opposite infinities under `mode`.
pub fn infinity_sum(mode: ArithMode) -> Entry {
    Entry::new(mode, Op::Sum, ExtReal::PosInf, ExtReal::NegInf)
}

/// The four differences of infinities under `mode`.
pub fn infinity_differences(mode: ArithMode) -> Vec<Entry> {
    use ExtReal::{NegInf, PosInf};
    [(PosInf, PosInf), (NegInf, NegInf), (PosInf, NegInf), (NegInf, PosInf)]
        .into_iter()
        .map(|(a, b)| Entry::new(mode, Op::Difference, a, b))
        .collect()
}

/// Rows with one finite operand; these agree in both arithmetics.
pub fn mixed_rows(mode: ArithMode, c: &ExtReal) -> Vec<Entry> {
    use ExtReal::{NegInf, PosInf};
    let mut rows = Vec::new();
    for op in [Op::Sum, Op::Difference] {
        for inf in [PosInf, NegInf] {
            rows.push(Entry::new(mode, op, c.clone(), inf.clone()));
            rows.push(Entry::new(mode, op, inf, c.clone()));
        }
    }
    rows
}

/// Side-by-side table for sup-addition (lower cuts) and inf-addition
/// (upper cuts).
pub fn render_tables() -> String {
    let modes = [ArithMode::SupAdd, ArithMode::InfAdd];
    let five = ExtReal::from(5);
    let sections: Vec<(&str, [Vec<Entry>; 2])> = vec![
        ("Sum", modes.map(|m| vec![infinity_sum(m)])),
        ("Differences", modes.map(infinity_differences)),
        ("Mixed", modes.map(|m| mixed_rows(m, &five))),
    ];
    let width = 28;
    let mut out = String::new();
    writeln!(out, "{:<width$}| inf-addition (upper cuts)", "sup-addition (lower cuts)").unwrap();
    for (title, [left, right]) in sections {
        writeln!(out, "{title}").unwrap();
        for (l, r) in left.iter().zip(&right) {
            writeln!(out, "  {:<w$}|   {}", l.render(), r.render(), w = width - 2).unwrap();
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use ArithMode::{InfAdd, SupAdd};

    #[test]
    fn table_contents() {
        let text = render_tables();
        let (left, right): (Vec<&str>, Vec<&str>) = text
            .lines()
            .filter_map(|l| l.split_once('|'))
            .map(|(a, b)| (a.trim(), b.trim()))
            .unzip();
        assert!(left.contains(&"(+inf) - (-inf) = +inf"));
        assert!(right.contains(&"(+inf) - (+inf) = -inf"));
        assert!(left.contains(&"5 - +inf = -inf"));
        assert!(right.contains(&"5 - +inf = -inf"));
        assert!(left.contains(&"(+inf) + (-inf) = -inf"));
        assert!(right.contains(&"(+inf) + (-inf) = +inf"));
    }

    #[test]
    fn mixed_rows_agree() {
        for c in [ExtReal::from(5), ExtReal::from(-2), ExtReal::zero()] {
            let l: Vec<_> = mixed_rows(SupAdd, &c).iter().map(|e| e.value.clone()).collect();
            let r: Vec<_> = mixed_rows(InfAdd, &c).iter().map(|e| e.value.clone()).collect();
            assert_eq!(l, r);
        }
    }

    #[test]
    fn differences_are_dual() {
        for (l, r) in infinity_differences(SupAdd).iter().zip(infinity_differences(InfAdd)) {
            if l.a == l.b {
                assert_ne!(l.value, r.value);
            } else {
                assert_eq!(l.value, r.value);
            }
        }
    }
}
