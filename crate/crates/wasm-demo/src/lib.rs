//! Browser bindings. Every export returns a JSON string; the plain `*_json`
//! functions hold the logic so they can be tested off the browser.

use rankcrank::cyclotomic::{exact_quotient, phi, Modulus, Variant};
use rankcrank::partitions::{modified_crank_poly, modified_rank_poly, progression_index};
use rankcrank::qseries::{ck_grid, crank_series_corrected};
use rankcrank::search::unimodal_profile;
use rankcrank::verify::asymptotic_diagnostic;
use rankcrank::{CrankSpec, LaurentPoly};
use serde::Serialize;
use serde_json::json;
use wasm_bindgen::prelude::*;

/// Largest coefficient index the page may request.
pub const DEMO_BOUND: u32 = 150;

fn bounded(n: u32) -> Result<u32, String> {
    if n > DEMO_BOUND {
        return Err(format!("n = {n} is above the demo bound {DEMO_BOUND}"));
    }
    Ok(n)
}

#[derive(Serialize)]
struct Quotient {
    statistic: String,
    ell: u64,
    n: u64,
    size: u64,
    poly: LaurentPoly,
    quotient: LaurentPoly,
    nonnegative: bool,
    unimodal: bool,
}

/// `statistic` is `rank`, `crank` (both modified, divided by `Phi_l`) or
/// `crank2` (`crank_{5n+4} / Phi_5(z^2)`, `ell` ignored).
pub fn stanton_quotient_json(statistic: &str, ell: u32, n: u32) -> Result<String, String> {
    let n = u64::from(bounded(n)?);
    let ell = u64::from(ell);
    let (poly, modulus, size, ell) = match statistic {
        "rank" => (modified_rank_poly(ell, n), Modulus::new(ell, Variant::Standard), progression_index(ell, n), ell),
        "crank" => (modified_crank_poly(ell, n), Modulus::new(ell, Variant::Standard), progression_index(ell, n), ell),
        "crank2" => {
            let size = 5 * n + 4;
            let p = crank_series_corrected(size as usize).coeff(size as usize).clone();
            (Ok(p), Modulus::new(5, Variant::Squared), Ok(size), 5)
        }
        other => return Err(format!("unknown statistic {other:?}")),
    };
    let poly = poly.map_err(|e| e.to_string())?;
    let modulus = modulus.map_err(|e| e.to_string())?;
    let quotient = exact_quotient(&poly, &phi(modulus)).map_err(|e| e.to_string())?;
    let out = Quotient {
        statistic: statistic.to_string(),
        ell,
        n,
        size: size.map_err(|e| e.to_string())?,
        nonnegative: quotient.is_nonnegative(),
        unimodal: poly.is_unimodal(),
        poly,
        quotient,
    };
    Ok(serde_json::to_string(&out).expect("serializable"))
}

/// One slice `[q^n]` of the product named by `k` and the comma-separated
/// a-vector, with the unimodality profile for `0 <= m < n_hi`.
pub fn crank_slice_json(k: u32, a: &str, n: u32, n_hi: u32) -> Result<String, String> {
    let a: Vec<u32> = a
        .split(',')
        .map(|s| s.trim().parse::<u32>().map_err(|e| format!("bad a-vector entry {s:?}: {e}")))
        .collect::<Result<_, _>>()?;
    let spec = CrankSpec::new(k, a).map_err(|e| e.to_string())?;
    let n = bounded(n)?;
    let n_hi = bounded(n_hi)?.max(2);
    let profile = unimodal_profile(&spec, n_hi);
    let largest = (1..profile.len()).rev().find(|&m| !profile[m]);
    let eventually = largest.is_none_or(|m| m + 1 < n_hi as usize);
    let slice = ck_grid(&spec, n as usize).row_poly(n as usize);
    Ok(json!({
        "spec": spec.to_string(),
        "n": n,
        "n_hi": n_hi,
        "slice": slice,
        "slice_unimodal": slice.is_unimodal(),
        "profile": profile,
        "threshold": if eventually { Some(largest.unwrap_or(0)) } else { None },
    })
    .to_string())
}

/// `N(m, n)` for `|m| <= n` next to the sech² approximation.
pub fn rank_distribution_json(n: u32) -> Result<String, String> {
    let n = bounded(n)?;
    let ms: Vec<i64> = (-(n as i64)..=n as i64).collect();
    let samples = asymptotic_diagnostic(u64::from(n), &ms).map_err(|e| e.to_string())?;
    Ok(serde_json::to_string(&samples).expect("serializable"))
}

#[wasm_bindgen]
pub fn stanton_quotient(statistic: &str, ell: u32, n: u32) -> Result<String, JsValue> {
    stanton_quotient_json(statistic, ell, n).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn crank_slice(k: u32, a: &str, n: u32, n_hi: u32) -> Result<String, JsValue> {
    crank_slice_json(k, a, n, n_hi).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn rank_distribution(n: u32) -> Result<String, JsValue> {
    rank_distribution_json(n).map_err(|e| JsValue::from_str(&e))
}
