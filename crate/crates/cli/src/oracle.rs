use std::fmt;

use cutreal::cutmodel::GridWindow;
use cutreal::Rational;

use crate::gen;
use crate::laws::{self, Corrupt, LawResult};

#[derive(Debug, Clone)]
pub struct OracleConfig {
    pub trials: usize,
    pub seed: u64,
    pub window: GridWindow,
    pub corrupt: Corrupt,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            trials: 200,
            seed: 42,
            window: GridWindow::new(Rational::from_integer(4), 8).expect("valid window"),
            corrupt: Corrupt::default(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleReport {
    pub seed: u64,
    pub laws: Vec<LawResult>,
}

impl OracleReport {
    pub fn passed(&self) -> bool {
        self.laws.iter().all(LawResult::passed)
    }
}

/// Runs every law with `trials` instances each (structured laws use
/// `trials` per variant class, scaled down where the class grid is large).
/// Each law draws from its own stream derived from the seed, so one law's
/// instance count does not shift another's instances.
pub fn run(cfg: &OracleConfig) -> OracleReport {
    let n = cfg.trials;
    let per_class = n.div_ceil(9).max(1);
    let per_pair = n.div_ceil(16).max(1);
    let rng = |k: u64| gen::seeded(cfg.seed.wrapping_mul(1_000_003).wrapping_add(k));
    let laws = vec![
        laws::infinity_table(),
        laws::monoid(&mut rng(1), n, cfg.corrupt),
        laws::homomorphism(&mut rng(2), per_class),
        laws::grid_sum(&mut rng(3), n, &cfg.window, cfg.corrupt),
        laws::grid_product(&mut rng(4), n, &cfg.window),
        laws::residuation(&mut rng(5), per_class, cfg.corrupt),
        laws::interior(&mut rng(6), per_pair),
        laws::round_trip(&mut rng(7), n.div_ceil(3).max(1)),
        laws::sup_additivity(&mut rng(8), n),
        laws::conlinear(&mut rng(9), n),
        laws::jensen_epigraph(&mut rng(10), n),
        laws::counterexample(),
        laws::convex_preservation(&mut rng(11), n.div_ceil(2).max(1)),
        laws::scalarization_dichotomy(&mut rng(12), n.min(64)),
    ];
    OracleReport { seed: cfg.seed, laws }
}

impl fmt::Display for OracleReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "seed {}", self.seed)?;
        for law in &self.laws {
            let status = if law.passed() { "ok" } else { "FAIL" };
            writeln!(
                f,
                "{:<20} {:>5}/{:<5} {status:<4} instances {:016x}",
                law.name,
                law.cases - law.failures,
                law.cases,
                law.digest
            )?;
            if let Some(note) = &law.note {
                writeln!(f, "  {note}")?;
            }
            if let Some(w) = &law.witness {
                writeln!(f, "  witness: {w}")?;
            }
        }
        let failed = self.laws.iter().filter(|l| !l.passed()).count();
        if failed == 0 {
            write!(f, "all {} laws passed", self.laws.len())
        } else {
            write!(f, "{failed} of {} laws failed", self.laws.len())
        }
    }
}
