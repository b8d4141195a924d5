//! Unimodality thresholds over the space of colored crank products.

use std::time::Instant;

#[cfg(feature = "parallel")]
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::qseries::{ak_spec, bk_spec, ck_grid, CrankSpec};
use crate::report::{Counterexample, Report};

/// Every spec with `a_1 <= k`, ordered by the reversed a-vector
/// (`(3,2,1), (4,2,1), (5,2,1), (4,3,1), ...`).
pub fn crank_space(k: u32) -> Result<Vec<CrankSpec>> {
    if k < 3 {
        return Err(Error::InvalidK { k, reason: "the search space starts at k = 3" });
    }
    let h = k.div_ceil(2) as usize;
    let mut out = Vec::new();
    // ascending h-subsets of 1..=k in lex order, then reversed into a-vectors
    let mut idx: Vec<u32> = (1..=h as u32).collect();
    loop {
        out.push(CrankSpec::new(k, idx.iter().rev().copied().collect())?);
        let Some(i) = (0..h).rev().find(|&i| idx[i] < k - (h - 1 - i) as u32) else {
            break;
        };
        idx[i] += 1;
        for j in i + 1..h {
            idx[j] = idx[j - 1] + 1;
        }
    }
    Ok(out)
}

/// Outcome of scanning `n in 0..n_hi` for one spec.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchResult {
    pub spec: CrankSpec,
    pub n_hi: u32,
    /// Largest `n < n_hi` whose coefficient is not unimodal.
    pub largest_non_unimodal: Option<u32>,
    /// `false` when non-unimodality persists to the top of the window.
    pub eventually_unimodal: bool,
    /// Least `N` with every `n > N` (up to `n_hi`) unimodal; `0` when all
    /// `n >= 1` are, `None` when not eventually unimodal.
    pub threshold: Option<u32>,
}

/// Unimodality of `[q^n] C` for `n in 0..n_hi`.
pub fn unimodal_profile(spec: &CrankSpec, n_hi: u32) -> Vec<bool> {
    let order = n_hi.saturating_sub(1) as usize;
    let g = ck_grid(spec, order);
    (0..n_hi as usize).map(|n| g.row_is_unimodal(n)).collect()
}

pub fn min_unimodal_threshold(spec: &CrankSpec, n_hi: u32) -> SearchResult {
    let profile = unimodal_profile(spec, n_hi);
    summarize(spec.clone(), n_hi, &profile)
}

fn summarize(spec: CrankSpec, n_hi: u32, profile: &[bool]) -> SearchResult {
    let largest = (1..profile.len()).rev().find(|&n| !profile[n]).map(|n| n as u32);
    let eventually = largest.is_none_or(|m| m + 1 < n_hi);
    SearchResult {
        spec,
        n_hi,
        largest_non_unimodal: largest,
        eventually_unimodal: eventually,
        threshold: eventually.then(|| largest.unwrap_or(0)),
    }
}

/// Thresholds for every spec in `crank_space(k)`, `k_lo <= k <= k_hi`, in
/// `(k, space order)`.
pub fn exhaustive_search(k_lo: u32, k_hi: u32, n_hi: u32) -> Result<Vec<SearchResult>> {
    let mut specs = Vec::new();
    for k in k_lo..=k_hi {
        specs.extend(crank_space(k)?);
    }
    #[cfg(feature = "parallel")]
    let it = specs.par_iter();
    #[cfg(not(feature = "parallel"))]
    let it = specs.iter();
    Ok(it.map(|s| min_unimodal_threshold(s, n_hi)).collect())
}

/// `k,a_vector,threshold,n_hi` with `-` for specs that never become unimodal.
pub fn to_csv(results: &[SearchResult]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["k", "a_vector", "threshold", "n_hi"]).expect("in-memory write");
    for r in results {
        let a: Vec<String> = r.spec.a().iter().map(u32::to_string).collect();
        let t = r.threshold.map_or_else(|| "-".to_string(), |t| t.to_string());
        w.write_record([r.spec.k().to_string(), a.join(" "), t, r.n_hi.to_string()])
            .expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("utf8")
}

/// Published thresholds for `3 <= k <= 6` in [`crank_space`] order
/// (`None` = not eventually unimodal), computed with `n < 75`.
pub const TABLE1_N_HI: u32 = 75;

pub const TABLE1: [(u32, &[Option<u32>]); 4] = [
    (3, &[Some(7), None, Some(6)]),
    (4, &[Some(1), None, None, Some(1), None, Some(23)]),
    (5, &[Some(9), None, None, Some(11), None, Some(9), Some(10), None, Some(13), Some(13)]),
    (
        6,
        &[
            Some(1), None, None, None, Some(5), None, None, Some(11), None, Some(21),
            Some(14), None, None, Some(19), None, Some(20), Some(7), None, Some(32), Some(19),
        ],
    ),
];

/// `(spec, expected threshold)` for every published row.
pub fn table1_expected() -> Vec<(CrankSpec, Option<u32>)> {
    TABLE1
        .iter()
        .flat_map(|&(k, col)| {
            crank_space(k).expect("k >= 3").into_iter().zip(col.iter().copied())
        })
        .collect()
}

/// Recomputes every published threshold.
pub fn verify_table1(n_hi: u32) -> Result<Report> {
    let started = Instant::now();
    let results = exhaustive_search(3, 6, n_hi)?;
    let mut cex = Vec::new();
    for (r, (spec, want)) in results.iter().zip(table1_expected()) {
        debug_assert_eq!(r.spec, spec);
        if r.threshold != want {
            let code = |t: Option<u32>| t.map_or(-1, i64::from);
            cex.push(
                Counterexample::new(
                    format!("threshold of {spec}"),
                    &[("k", spec.k().into()), ("expected", code(want)), ("found", code(r.threshold))],
                ),
            );
        }
    }
    Ok(Report::from_counterexamples("table1", format!("3 <= k <= 6, n < {n_hi}"), cex, started))
}

/// Eventually unimodal if and only if `a_1 - a_2 = 1`, tested in both
/// directions against scan results.
pub fn check_conjecture_4_2(results: &[SearchResult]) -> Report {
    let started = Instant::now();
    let mut cex = Vec::new();
    for r in results {
        let gap = r.spec.leading_gap();
        let check = match (gap == 1, r.eventually_unimodal) {
            (true, false) => format!("{} has a_1 - a_2 = 1 but is not eventually unimodal", r.spec),
            (false, true) => format!("{} is eventually unimodal with a_1 - a_2 = {gap}", r.spec),
            _ => continue,
        };
        cex.push(Counterexample::new(check, &[("k", r.spec.k().into()), ("gap", gap.into())]));
    }
    let lo = results.iter().map(|r| r.spec.k()).min();
    let hi = results.iter().map(|r| r.spec.k()).max();
    let range = match (lo, hi, results.first()) {
        (Some(lo), Some(hi), Some(r)) => format!("{lo} <= k <= {hi}, n < {}", r.n_hi),
        _ => "empty".to_string(),
    };
    Report::from_counterexamples("conj4.2", range, cex, started)
        .note("a finite scan can only support the forward direction up to the scan bound")
}

/// `[q^n] A_k` is unimodal for `n >= 15` and `[q^n] B_k` for `n >= 24`
/// (odd `k`), `k_lo <= k <= k_hi`, `n < n_hi`.
pub fn check_conjecture_1_4(k_lo: u32, k_hi: u32, n_hi: u32) -> Result<Report> {
    let started = Instant::now();
    let mut jobs: Vec<(CrankSpec, u32, &str)> = Vec::new();
    for k in k_lo.max(3)..=k_hi {
        jobs.push((ak_spec(k)?, 15, "A"));
        if k >= 7 && k % 2 == 1 {
            jobs.push((bk_spec(k, false)?, 24, "B"));
        }
    }
    #[cfg(feature = "parallel")]
    let it = jobs.par_iter();
    #[cfg(not(feature = "parallel"))]
    let it = jobs.iter();
    let per_job: Vec<(Vec<Counterexample>, String)> = it
        .map(|(spec, onset, fam)| {
            let profile = unimodal_profile(spec, n_hi);
            let onset = *onset as usize;
            let cex = (onset..profile.len())
                .filter(|&n| !profile[n])
                .map(|n| {
                    Counterexample::new(
                        format!("[q^n] {fam}_k not unimodal ({spec})"),
                        &[("k", spec.k().into()), ("n", n as i64)],
                    )
                })
                .collect();
            let below = (0..onset.min(profile.len())).rev().find(|&n| !profile[n]);
            let note = match below {
                Some(n) => format!("{fam}_{}: largest non-unimodal n below {onset} is {n}", spec.k()),
                None => format!("{fam}_{}: unimodal for every n below {onset}", spec.k()),
            };
            (cex, note)
        })
        .collect();
    let mut cex = Vec::new();
    let mut notes = Vec::new();
    for (c, note) in per_job {
        cex.extend(c);
        notes.push(note);
    }
    let mut report = Report::from_counterexamples(
        "conj1.4",
        format!("{k_lo} <= k <= {k_hi}, n < {n_hi}"),
        cex,
        started,
    );
    report.notes = notes;
    Ok(report)
}
