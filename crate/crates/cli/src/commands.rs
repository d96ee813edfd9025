use std::fs;
use std::path::Path;

use cutreal::convexfn::{grid_range, inf_convolution, ExtFn};
use cutreal::expr;
use cutreal::scalarize::{example_setfn, scalarization};
use cutreal::tables::render_tables;
use cutreal::{ArithMode, Error, ExtReal, Rational};

/// Failure of a command, mapped to the process exit code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    /// Bad arguments or unreadable input: exit 2.
    Usage(String),
    /// A check ran and failed: exit 1.
    Check(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Check(_) => 1,
            CliError::Usage(_) => 2,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Check(m) => m,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

pub fn eval(mode: ArithMode, text: &str) -> Result<ExtReal, CliError> {
    Ok(expr::eval_str(text, mode)?)
}

pub fn tables() -> String {
    render_tables()
}

/// `lo:hi:step`, e.g. `-2:2:1/2`.
pub fn parse_grid(spec: &str) -> Result<Vec<Rational>, CliError> {
    let parts: Vec<&str> = spec.split(':').collect();
    let [lo, hi, step] = parts.as_slice() else {
        return Err(CliError::Usage(format!("grid {spec:?}: expected lo:hi:step")));
    };
    let (lo, hi, step): (Rational, Rational, Rational) = (lo.trim().parse()?, hi.trim().parse()?, step.trim().parse()?);
    let grid = grid_range(&lo, &hi, &step)?;
    if grid.is_empty() {
        return Err(CliError::Usage(format!("grid {spec:?} is empty")));
    }
    Ok(grid)
}

/// `a,b` with rational entries.
pub fn parse_direction(spec: &str) -> Result<Vec<Rational>, CliError> {
    let w = spec
        .split(',')
        .map(|c| c.trim().parse::<Rational>())
        .collect::<Result<Vec<_>, _>>()?;
    if w.len() != 2 {
        return Err(CliError::Usage(format!("direction {spec:?}: expected two components a,b")));
    }
    Ok(w)
}

pub fn read_fn(path: &Path) -> Result<ExtFn, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
    ExtFn::from_csv(&text).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
}

/// Writes to `path`, or to stdout when `path` is `-`.
pub fn write_output(path: &Path, text: &str) -> Result<(), CliError> {
    if path == Path::new("-") {
        print!("{text}");
        return Ok(());
    }
    fs::write(path, text).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
}

pub fn infconv(f1: &Path, f2: &Path) -> Result<String, CliError> {
    let (f1, f2) = (read_fn(f1)?, read_fn(f2)?);
    Ok(inf_convolution(&f1, &f2)?.to_csv())
}

pub fn scalarize(w: &[Rational], grid: Vec<Rational>) -> Result<String, CliError> {
    let f = example_setfn(grid)?;
    Ok(scalarization(&f, w)?.to_csv())
}

pub const DEFAULT_GRID: &str = "-2:2:1";
