//! Browser bindings for the demo page in `www/`.
//!
//! Every export takes and returns plain strings so the page needs no glue
//! beyond the generated module. Errors come back as rejected strings.

use cutreal::convexfn::{grid_range, inf_convolution, ExtFn};
use cutreal::expr::eval_str;
use cutreal::scalarize::{example_setfn, is_proper, scalarization};
use cutreal::tables::render_tables;
use cutreal::{ArithMode, Rational};
use wasm_bindgen::prelude::*;

fn msg(e: impl ToString) -> String {
    e.to_string()
}

/// Evaluates `expr` in mode `sup` or `inf`.
#[wasm_bindgen]
pub fn evaluate(expr: &str, mode: &str) -> Result<String, String> {
    let mode: ArithMode = mode.parse().map_err(msg)?;
    eval_str(expr, mode).map(|v| v.to_string()).map_err(msg)
}

/// Both results side by side: `sup-result,inf-result`.
#[wasm_bindgen]
pub fn evaluate_both(expr: &str) -> Result<String, String> {
    Ok(format!("{},{}", evaluate(expr, "sup")?, evaluate(expr, "inf")?))
}

#[wasm_bindgen]
pub fn tables() -> String {
    render_tables()
}

/// CSV of `x ↦ inf{w·z | z ∈ f(x)}` for the example set-valued function on
/// the grid `lo:hi:step`, followed by a `# proper` or `# improper` line.
#[wasm_bindgen]
pub fn scalarize(w1: &str, w2: &str, grid: &str) -> Result<String, String> {
    let w: Vec<Rational> = vec![w1.trim().parse().map_err(msg)?, w2.trim().parse().map_err(msg)?];
    let parts: Vec<&str> = grid.split(':').collect();
    let [lo, hi, step] = parts.as_slice() else {
        return Err(format!("grid {grid:?}: expected lo:hi:step"));
    };
    let points = grid_range(
        &lo.trim().parse().map_err(msg)?,
        &hi.trim().parse().map_err(msg)?,
        &step.trim().parse().map_err(msg)?,
    )
    .map_err(msg)?;
    let phi = scalarization(&example_setfn(points).map_err(msg)?, &w).map_err(msg)?;
    let verdict = if is_proper(&phi) { "proper" } else { "improper" };
    Ok(format!("{}# {verdict}\n", phi.to_csv()))
}

/// Infimal convolution of two `x,value` tables.
#[wasm_bindgen]
pub fn infconv(f1: &str, f2: &str) -> Result<String, String> {
    let f1 = ExtFn::from_csv(f1).map_err(|e| format!("f1: {e}"))?;
    let f2 = ExtFn::from_csv(f2).map_err(|e| format!("f2: {e}"))?;
    inf_convolution(&f1, &f2).map(|h| h.to_csv()).map_err(msg)
}
