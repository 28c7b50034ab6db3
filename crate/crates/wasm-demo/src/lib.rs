//! Three operations for the static page in `www/`.

use symfn::partitions::Partition;
use symfn::symfunc::{q_eps_lambda, EpsPreset};
use symfn::vertex::{jj_closed_form, jj_recursion, solve_q, specialize_q, OperatorSpec, Specialization};
use symfn::EpsSequence;
use wasm_bindgen::prelude::*;

const MAX_WEIGHT: usize = 6;

fn partition(s: &str) -> Result<Partition, String> {
    let lambda: Partition = s.trim().parse().map_err(|e: symfn::Error| e.to_string())?;
    if lambda.weight() > MAX_WEIGHT {
        return Err(format!("weight {} is above the demo limit {MAX_WEIGHT}", lambda.weight()));
    }
    Ok(lambda)
}

pub fn qexpand_text(lambda: &str, eps: &str) -> Result<String, String> {
    let lambda = partition(lambda)?;
    let preset: EpsPreset = eps.parse().map_err(|e: symfn::Error| e.to_string())?;
    Ok(q_eps_lambda(&lambda, &EpsSequence::preset(preset)).to_text())
}

/// `spec` is empty for the generic solution.
pub fn macdonald_text(lambda: &str, spec: &str) -> Result<String, String> {
    let lambda = partition(lambda)?;
    let mut r = solve_q(&lambda, &OperatorSpec::generic()).map_err(|e| e.to_string())?;
    if !spec.is_empty() {
        let which: Specialization = spec.parse().map_err(|e: symfn::Error| e.to_string())?;
        r = specialize_q(&r, which).map_err(|e| e.to_string())?;
    }
    Ok(r.to_text())
}

pub fn jj_text(m: usize, n: usize) -> Result<String, String> {
    if m + n > 2 * MAX_WEIGHT {
        return Err(format!("m + n is above the demo limit {}", 2 * MAX_WEIGHT));
    }
    let g = jj_recursion(m, n).map_err(|e| e.to_string())?;
    let mut out = String::new();
    for (i, gi) in g.iter().enumerate() {
        let closed = jj_closed_form(m, n, i).map_err(|e| e.to_string())?;
        let mark = if closed == *gi { "" } else { "  (closed form differs)" };
        let mu = Partition::new(vec![m + i, n - i]).map_err(|e| e.to_string())?;
        out.push_str(&format!("g_{i}  {mu:?}  {gi}{mark}\n"));
    }
    Ok(out)
}

#[wasm_bindgen]
pub fn qexpand(lambda: &str, eps: &str) -> Result<String, JsError> {
    qexpand_text(lambda, eps).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn macdonald(lambda: &str, spec: &str) -> Result<String, JsError> {
    macdonald_text(lambda, spec).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen]
pub fn jj(m: usize, n: usize) -> Result<String, JsError> {
    jj_text(m, n).map_err(|e| JsError::new(&e))
}
