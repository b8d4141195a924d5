//! Verification suites. Each returns a [`Report`]; failures of the checked
//! statement land in the report rather than in `Err`.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
#[cfg(feature = "parallel")]
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cyclotomic::{divides_squared, divides_standard, exact_quotient, hat_sum, phi, Modulus, Variant};
use crate::error::{Error, Result};
use crate::grid::AnyGrid;
use crate::laurent::LaurentPoly;
use crate::partitions::{
    beta, colored_counts, crank_count_series, modify_crank, modify_rank, partition_counts,
    progression_index, CongruenceCase, SERIES_BOUND,
};
use crate::qseries::{ak_spec, bk_spec, ck_grid, crank_series_corrected, rank_series, CrankSpec};
use crate::report::{Counterexample, Report, Status};
use crate::search;

fn par_map<T, F>(lo: u64, hi: u64, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(u64) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    return (lo..=hi).into_par_iter().map(f).collect();
    #[cfg(not(feature = "parallel"))]
    return (lo..=hi).map(f).collect();
}

fn within_bound(size: u64) -> Result<usize> {
    if size > SERIES_BOUND {
        return Err(Error::BoundExceeded { n: size, bound: SERIES_BOUND });
    }
    Ok(size as usize)
}

fn cex(check: &str, params: &[(&str, i64)], poly: Option<LaurentPoly>) -> Counterexample {
    let c = Counterexample::new(check, params);
    match poly {
        Some(p) => c.with_poly(p),
        None => c,
    }
}

/// Divisibility by `Phi_l(z)` and non-negativity of the quotient.
fn quotient_checks(f: &LaurentPoly, ell: u64, params: &[(&str, i64)], out: &mut Vec<Counterexample>) -> Option<LaurentPoly> {
    if !divides_standard(f, ell).expect("l validated by caller") {
        out.push(cex("divisible by Phi_l(z)", params, Some(f.clone())));
        return None;
    }
    let q = exact_quotient(f, &phi(Modulus::standard(ell).unwrap())).expect("criterion agrees with division");
    if !q.is_nonnegative() {
        out.push(cex("non-negative quotient", params, Some(q.clone())));
    }
    Some(q)
}

/// `rank*_{l,n} / Phi_l` is a non-negative Laurent polynomial, `l in {5, 7}`.
/// Symmetry and unimodality of `rank*_{l,n}` are recorded as notes.
pub fn verify_stanton_rank(ell: u64, n_max: u64) -> Result<Report> {
    if ell != 5 && ell != 7 {
        return Err(Error::InvalidEll { ell });
    }
    let started = Instant::now();
    let top = progression_index(ell, n_max)?;
    let ranks = rank_series(top as usize);
    let b = beta(ell)?;
    let per_n = par_map(0, n_max, |n| {
        let size = ell * n + b as u64;
        let f = modify_rank(ranks.coeff(size as usize), size);
        let mut out = Vec::new();
        let params = [("n", n as i64), ("size", size as i64)];
        let q = quotient_checks(&f, ell, &params, &mut out);
        let shape = (f.is_symmetric(), f.is_unimodal());
        (out, shape, if n == 0 { q } else { None })
    });
    let mut all = Vec::new();
    let mut asym = Vec::new();
    let mut nonuni = Vec::new();
    let mut first_q = None;
    for (n, (out, (sym, uni), q)) in per_n.into_iter().enumerate() {
        all.extend(out);
        if !sym {
            asym.push(n);
        }
        if !uni {
            nonuni.push(n);
        }
        first_q = first_q.or(q);
    }
    let mut r = Report::from_counterexamples(
        format!("conj1.1-part1-ell{ell}"),
        format!("0 <= n <= {n_max} ({ell}n + {b} <= {top})"),
        all,
        started,
    );
    if let Some(q) = first_q {
        r = r.note(format!("quotient at n = 0: {q}"));
    }
    r = r.note(format!("rank* symmetric failures: {asym:?}"));
    Ok(r.note(format!("rank* unimodality failures: {nonuni:?}")))
}

/// `crank_{5n+4} / Phi_5(z^2)` is a non-negative Laurent polynomial. The
/// normalized quotient `z^4 crank_{5n+4} / Phi_5(z^2)` is checked symmetric.
pub fn verify_stanton_crank2(n_max: u64) -> Result<Report> {
    let started = Instant::now();
    let top = within_bound(5 * n_max + 4)?;
    let cranks = crank_series_corrected(top);
    let g = phi(Modulus::new(5, Variant::Squared)?);
    let per_n = par_map(0, n_max, |n| {
        let size = 5 * n + 4;
        let f = cranks.coeff(size as usize);
        let params = [("n", n as i64), ("size", size as i64)];
        let mut out = Vec::new();
        if !divides_squared(f, 5).unwrap() {
            out.push(cex("divisible by Phi_5(z^2)", &params, Some(f.clone())));
            return (out, Vec::new(), None);
        }
        let q = exact_quotient(f, &g).expect("criterion agrees with division");
        if !q.is_nonnegative() {
            out.push(cex("non-negative quotient", &params, Some(q.clone())));
        }
        let normalized = q.shift(4);
        if !normalized.is_symmetric() {
            out.push(cex("symmetric normalized quotient", &params, Some(normalized.clone())));
        }
        (out, q.interior_zeros(), Some(normalized))
    });
    let mut all = Vec::new();
    let mut zeros = Vec::new();
    let mut first = None;
    for (n, (out, z, norm)) in per_n.into_iter().enumerate() {
        all.extend(out);
        if !z.is_empty() {
            zeros.push(n);
        }
        if n == 0 {
            first = norm;
        }
    }
    let mut r = Report::from_counterexamples(
        "conj1.1-part2",
        format!("0 <= n <= {n_max} (5n + 4 <= {top})"),
        all,
        started,
    );
    if let Some(p) = first {
        r = r.note(format!("normalization: z^4 * crank_4 / Phi_5(z^2) = {p}"));
    }
    Ok(r.note(format!("quotients with interior zeros at n = {zeros:?}")))
}

/// Size from which `crank*_{l,n}` is unimodal; smaller sizes can fail.
pub const CRANK_UNIMODAL_ONSET: u64 = 44;

/// `crank*_{l,n} / Phi_l` is non-negative and `crank*_{l,n}` is symmetric,
/// and unimodal once `l n + beta >= 44`, for `l in {5, 7, 11}`.
pub fn verify_stanton_crank3(ell: u64, n_max: u64) -> Result<Report> {
    if ![5, 7, 11].contains(&ell) {
        return Err(Error::InvalidEll { ell });
    }
    let started = Instant::now();
    let top = progression_index(ell, n_max)?;
    let cranks = crank_series_corrected(top as usize);
    let b = beta(ell)? as u64;
    let per_n = par_map(0, n_max, |n| {
        let size = ell * n + b;
        let f = modify_crank(cranks.coeff(size as usize), size, ell);
        let params = [("n", n as i64), ("size", size as i64)];
        let mut out = Vec::new();
        let q = quotient_checks(&f, ell, &params, &mut out);
        if !f.is_symmetric() {
            out.push(cex("symmetric crank*", &params, Some(f.clone())));
        }
        let unimodal = f.is_unimodal();
        if !unimodal && size >= CRANK_UNIMODAL_ONSET {
            out.push(cex("unimodal crank*", &params, Some(f.clone())));
        }
        (out, !unimodal && size < CRANK_UNIMODAL_ONSET, if n == 0 { q } else { None })
    });
    let mut all = Vec::new();
    let mut first = None;
    let mut small = Vec::new();
    for (n, (out, early, q)) in per_n.into_iter().enumerate() {
        all.extend(out);
        if early {
            small.push(ell * n as u64 + b);
        }
        first = first.or(q);
    }
    let mut r = Report::from_counterexamples(
        format!("conj1.1-part3-ell{ell}"),
        format!("0 <= n <= {n_max} ({ell}n + {b} <= {top})"),
        all,
        started,
    );
    if let Some(q) = first {
        r = r.note(format!("quotient at n = 0: {q}"));
    }
    Ok(r.note(format!("crank* not unimodal below {CRANK_UNIMODAL_ONSET} at sizes {small:?}")))
}

/// Threshold below which the rank inequality is known to fail.
pub const RANK_INEQUALITY_ONSET: u64 = 39;

/// Every `(n, m)` with `2 <= n <= n_hi`, `0 <= m <= n - 3` and
/// `N(m, n) < N(m + 1, n)`. The endpoint `m = n - 2` always fails, since no
/// partition has rank `n - 2` while `(n)` has rank `n - 1`.
pub fn rank_inequality_violations(n_hi: u64) -> Result<Vec<(u64, i64)>> {
    let top = within_bound(n_hi)?;
    let ranks = rank_series(top);
    let per_n = par_map(2, n_hi.max(2), |n| {
        if n > n_hi {
            return Vec::new();
        }
        let f = ranks.coeff(n as usize);
        (0..=n as i64 - 3)
            .filter(|&m| f.coefficient(m) < f.coefficient(m + 1))
            .map(|m| (n, m))
            .collect::<Vec<_>>()
    });
    Ok(per_n.into_iter().flatten().collect())
}

/// `N(m, n) >= N(m + 1, n)` for `0 <= m <= n - 3`, `n_lo <= n <= n_hi`.
/// Violations below the onset 39 are expected and reported as notes.
pub fn verify_rank_unimodality(n_lo: u64, n_hi: u64) -> Result<Report> {
    let started = Instant::now();
    let violations = rank_inequality_violations(n_hi)?;
    let mut all = Vec::new();
    let mut early = Vec::new();
    for &(n, m) in &violations {
        if n < RANK_INEQUALITY_ONSET {
            early.push((n, m));
        } else if n >= n_lo {
            all.push(cex("N(m,n) >= N(m+1,n)", &[("n", n as i64), ("m", m)], None));
        }
    }
    let mut r = Report::from_counterexamples(
        "conj1.3",
        format!("{n_lo} <= n <= {n_hi}, 0 <= m <= n - 3"),
        all,
        started,
    );
    r = match early.iter().map(|&(n, _)| n).max() {
        Some(n) => {
            let ms: Vec<i64> = early.iter().filter(|v| v.0 == n).map(|v| v.1).collect();
            r.note(format!("largest n < {RANK_INEQUALITY_ONSET} violating the inequality: {n} (m = {ms:?})"))
        }
        None => r.note(format!("no violations below n = {RANK_INEQUALITY_ONSET}")),
    };
    Ok(r.note(format!("{} violations with n < {RANK_INEQUALITY_ONSET}", early.len()))
        .note("m = n - 2 excluded: N(n-2,n) = 0 < N(n-1,n) = 1 for every n >= 2"))
}

/// `M(r, t; N)`: partitions of `N` with crank `≡ r (mod t)`.
pub fn crank_residue_count(crank_poly: &LaurentPoly, r: i64, t: u64) -> BigInt {
    hat_sum(crank_poly, r, t)
}

/// `5 M(2k + j, 10; 5n + 4) = M(j, 2; 5n + 4)` for `0 <= k <= 4`, `j in {0, 1}`.
pub fn verify_crank_mod10(n_max: u64) -> Result<Report> {
    let started = Instant::now();
    let top = within_bound(5 * n_max + 4)?;
    let cranks = crank_series_corrected(top);
    let per_n = par_map(0, n_max, |n| {
        let f = cranks.coeff((5 * n + 4) as usize);
        let mut out = Vec::new();
        for j in 0..2i64 {
            let rhs = crank_residue_count(f, j, 2);
            for k in 0..5i64 {
                let lhs = crank_residue_count(f, 2 * k + j, 10) * 5;
                if lhs != rhs {
                    out.push(cex(
                        "5 M(2k+j,10;5n+4) = M(j,2;5n+4)",
                        &[("n", n as i64), ("k", k), ("j", j)],
                        None,
                    ));
                }
            }
        }
        out
    });
    Ok(Report::from_counterexamples(
        "thm2.2",
        format!("0 <= n <= {n_max} (5n + 4 <= {top})"),
        per_n.into_iter().flatten().collect(),
        started,
    ))
}

/// `M(n - k, n)` is constant for `n >= 2k`, `1 <= k <= k_max`, `n <= n_max`;
/// also `M(n - 1, n) = 0` and `M(n, n) = 1` for `2 <= n <= n_max`.
pub fn verify_crank_diagonal(k_max: u64, n_max: u64) -> Result<Report> {
    let started = Instant::now();
    let top = within_bound(n_max)?;
    let cranks = crank_series_corrected(top);
    let m = |a: i64, n: u64| cranks.coeff(n as usize).coefficient(a);
    let mut all = Vec::new();
    let mut values = Vec::new();
    for k in 1..=k_max {
        if 2 * k > n_max {
            break;
        }
        let base = m(k as i64, 2 * k);
        for n in 2 * k + 1..=n_max {
            if m((n - k) as i64, n) != base {
                all.push(cex("M(n-k,n) constant for n >= 2k", &[("k", k as i64), ("n", n as i64)], None));
            }
        }
        values.push(format!("k={k}: {base}"));
    }
    for n in 2..=n_max {
        if !m(n as i64 - 1, n).is_zero() {
            all.push(cex("M(n-1,n) = 0", &[("n", n as i64)], None));
        }
        if m(n as i64, n) != BigInt::from(1) {
            all.push(cex("M(n,n) = 1", &[("n", n as i64)], None));
        }
    }
    Ok(Report::from_counterexamples(
        "lemma2.4",
        format!("1 <= k <= {k_max}, n <= {n_max}"),
        all,
        started,
    )
    .note(format!("constant values {}", values.join(", "))))
}

/// Summation formula for `M(m, n)`, `1 <= m <= m_max`, against the product,
/// for `2 <= n <= order` (at `n = 1` both give the uncorrected value).
pub fn verify_crank_summation(m_max: u64, order: u64) -> Result<Report> {
    let started = Instant::now();
    let top = within_bound(order)?;
    let cranks = crank_series_corrected(top);
    let per_m = par_map(1, m_max.max(1), |m| {
        let series = crank_count_series(m, top);
        (2..=top)
            .filter(|&n| series[n] != cranks.coeff(n).coefficient(m as i64))
            .map(|n| cex("summation formula = product", &[("m", m as i64), ("n", n as i64)], None))
            .collect::<Vec<_>>()
    });
    Ok(Report::from_counterexamples(
        "crank-summation",
        format!("1 <= m <= {m_max}, 2 <= n <= {order}"),
        per_m.into_iter().flatten().collect(),
        started,
    ))
}

/// `l | p_k(l n + delta)` for `0 <= n <= n_max`.
pub fn verify_colored_congruence(case: &CongruenceCase, n_max: u64) -> Result<Report> {
    let started = Instant::now();
    let top = within_bound(case.index(n_max))?;
    let counts = colored_counts(case.k as u32, top);
    let all = congruence_failures(case, &counts, n_max);
    Ok(Report::from_counterexamples(
        "thm1.2",
        format!("{case}, 0 <= n <= {n_max}"),
        all,
        started,
    ))
}

fn congruence_failures(case: &CongruenceCase, counts: &[BigInt], n_max: u64) -> Vec<Counterexample> {
    let ell = BigInt::from(case.ell);
    (0..=n_max)
        .filter(|&n| !(&counts[case.index(n) as usize] % &ell).is_zero())
        .map(|n| {
            cex(
                "l | p_k(l n + delta)",
                &[
                    ("k", case.k as i64),
                    ("h", case.h as i64),
                    ("l", case.ell as i64),
                    ("n", n as i64),
                ],
                None,
            )
        })
        .collect()
}

/// Every valid congruence case with `k <= k_max`, each for `n <= n_max`.
pub fn verify_colored_congruences(k_max: u64, n_max: u64) -> Result<Report> {
    let started = Instant::now();
    let cases = CongruenceCase::all_up_to(k_max);
    for c in &cases {
        within_bound(c.index(n_max))?;
    }
    let per_k = par_map(1, k_max.max(1), |k| {
        let mine: Vec<&CongruenceCase> = cases.iter().filter(|c| c.k == k).collect();
        let Some(top) = mine.iter().map(|c| c.index(n_max)).max() else {
            return Vec::new();
        };
        let counts = colored_counts(k as u32, top as usize);
        mine.iter().flat_map(|c| congruence_failures(c, &counts, n_max)).collect()
    });
    Ok(Report::from_counterexamples(
        "thm1.2",
        format!("all {} cases with k <= {k_max}, 0 <= n <= {n_max}", cases.len()),
        per_k.into_iter().flatten().collect(),
        started,
    ))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Kind {
    A,
    B,
}

impl Kind {
    /// First index covered by the non-negativity statement.
    pub fn onset(self) -> u64 {
        match self {
            Kind::A => 15,
            Kind::B => 24,
        }
    }

    pub fn spec(self, k: u32) -> Result<CrankSpec> {
        match self {
            Kind::A => ak_spec(k),
            Kind::B => bk_spec(k, false),
        }
    }

    /// Whether the quotient statement covers `case`.
    pub fn check_hypotheses(self, case: &CongruenceCase) -> Result<()> {
        let odd = case.k % 2 == 1;
        let ok = match self {
            Kind::A => !(case.h == 26 || (odd && case.h == 14)),
            Kind::B => odd && case.k >= 7 && [6, 14].contains(&case.h),
        };
        if ok {
            Ok(())
        } else {
            Err(Error::HypothesisViolation(format!("kind {self} does not cover {case}")))
        }
    }

    /// Whether the unconditional divisibility statement covers `case`.
    pub fn divisibility_covers(self, case: &CongruenceCase) -> bool {
        let odd = case.k % 2 == 1;
        match self {
            Kind::A => [4, 6, 8, 10].contains(&case.h) || (!odd && case.h == 14),
            Kind::B => odd && case.k >= 7 && [6, 14].contains(&case.h),
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Kind::A => "A",
            Kind::B => "B",
        })
    }
}

impl FromStr for Kind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "A" | "a" => Ok(Kind::A),
            "B" | "b" => Ok(Kind::B),
            _ => Err(Error::Parse(format!("unknown family {s:?}, expected A or B"))),
        }
    }
}

/// Indices `l n + delta <= idx_max` where `Phi_l` fails to divide the slice
/// of the family `kind`. No hypothesis on `(h, k)` beyond a valid progression.
pub fn colored_divisibility_failures(kind: Kind, case: &CongruenceCase, idx_max: u64) -> Result<Vec<u64>> {
    let grid = ck_grid(&kind.spec(case.k as u32)?, within_bound(idx_max)?);
    Ok(failures_on_grid(&grid, case, idx_max))
}

fn failures_on_grid(grid: &AnyGrid, case: &CongruenceCase, idx_max: u64) -> Vec<u64> {
    (0..)
        .map(|n| case.index(n))
        .take_while(|&i| i <= idx_max)
        .filter(|&i| !divides_standard(&grid.row_poly(i as usize), case.ell).expect("l >= 5 prime"))
        .collect()
}

fn divisibility_report(kind: Kind, case: &CongruenceCase, idx_max: u64, fails: &[u64], started: Instant) -> Report {
    let all = fails
        .iter()
        .map(|&i| cex("Phi_l divides the slice", &[("index", i as i64), ("l", case.ell as i64)], None))
        .collect();
    let scope = if kind.divisibility_covers(case) { "inside" } else { "outside" };
    Report::from_counterexamples(
        format!("colored-divisibility-{kind}"),
        format!("{case}, l n + delta <= {idx_max}"),
        all,
        started,
    )
    .note(format!("case is {scope} the stated hypotheses for family {kind}"))
}

/// Numeric divisibility `Phi_l | [q^{l n + delta}]` of the family over
/// `l n + delta <= idx_max`. Notes whether the case lies inside the
/// statement's hypotheses.
pub fn verify_colored_divisibility(kind: Kind, case: &CongruenceCase, idx_max: u64) -> Result<Report> {
    let started = Instant::now();
    let fails = colored_divisibility_failures(kind, case, idx_max)?;
    Ok(divisibility_report(kind, case, idx_max, &fails, started))
}

/// [`verify_colored_divisibility`] for many cases, building each family
/// member once. Reports come back in the order of `cases`.
pub fn verify_colored_divisibility_all(kind: Kind, cases: &[CongruenceCase], idx_max: u64) -> Result<Vec<Report>> {
    let top = within_bound(idx_max)?;
    let mut ks: Vec<u64> = cases.iter().map(|c| c.k).collect();
    ks.sort_unstable();
    ks.dedup();
    let specs = ks.iter().map(|&k| kind.spec(k as u32)).collect::<Result<Vec<_>>>()?;
    #[cfg(feature = "parallel")]
    let it = specs.par_iter();
    #[cfg(not(feature = "parallel"))]
    let it = specs.iter();
    let per_k: Vec<Vec<(CongruenceCase, Report)>> = it
        .map(|spec| {
            let grid = ck_grid(spec, top);
            cases
                .iter()
                .filter(|c| c.k == u64::from(spec.k()))
                .map(|c| {
                    let started = Instant::now();
                    let fails = failures_on_grid(&grid, c, idx_max);
                    (*c, divisibility_report(kind, c, idx_max, &fails, started))
                })
                .collect()
        })
        .collect();
    let mut flat: Vec<(CongruenceCase, Report)> = per_k.into_iter().flatten().collect();
    Ok(cases
        .iter()
        .map(|c| {
            let i = flat.iter().position(|(d, _)| d == c).expect("every case was run");
            flat.swap_remove(i).1
        })
        .collect())
}

/// Slices `[q^{l n + delta}]` of `A_k` or `B_k` for `n <= n_max`:
/// divisibility by `Phi_l` and symmetry at every `n` (unconditional);
/// unimodality and a non-negative quotient beyond the onset (conditional).
/// Unconditional failures give `Fail`, conditional ones `Partial`.
pub fn verify_colored_stanton(kind: Kind, case: &CongruenceCase, n_max: u64) -> Result<Report> {
    kind.check_hypotheses(case)?;
    let started = Instant::now();
    let spec = kind.spec(case.k as u32)?;
    let top = within_bound(case.index(n_max))?;
    let grid = ck_grid(&spec, top);
    let divisor = phi(Modulus::standard(case.ell)?);
    let per_n = par_map(0, n_max, |n| {
        let idx = case.index(n);
        let f = grid.row_poly(idx as usize);
        let params = [("n", n as i64), ("index", idx as i64)];
        let mut hard = Vec::new();
        let mut soft = Vec::new();
        if !f.is_symmetric() {
            hard.push(cex("symmetric slice", &params, Some(f.clone())));
        }
        if !divides_standard(&f, case.ell).unwrap() {
            hard.push(cex("Phi_l divides the slice", &params, Some(f.clone())));
        } else if idx >= kind.onset() {
            if !f.is_unimodal() {
                soft.push(cex("unimodal slice (conditional)", &params, Some(f.clone())));
            }
            let q = exact_quotient(&f, &divisor).expect("criterion agrees with division");
            if !q.is_nonnegative() {
                soft.push(cex("non-negative quotient (conditional)", &params, Some(q)));
            }
        }
        (hard, soft)
    });
    let (mut hard, mut soft) = (Vec::new(), Vec::new());
    for (h, s) in per_n {
        hard.extend(h);
        soft.extend(s);
    }
    let status = match (hard.is_empty(), soft.is_empty()) {
        (false, _) => Status::Fail,
        (true, false) => Status::Partial,
        (true, true) => Status::Pass,
    };
    let n_soft = soft.len();
    hard.extend(soft);
    let mut r = Report::from_counterexamples(
        format!("colored-stanton-{kind}"),
        format!("{spec}, {case}, 0 <= n <= {n_max}"),
        hard,
        started,
    );
    r.status = status;
    Ok(r.note(format!("{n_soft} conditional failures at or beyond index {}", kind.onset())))
}

/// `M(N - l - 1, N) - M(N - l, N) - 1` at `N = 22 l + beta` for `l in {5, 7, 11}`,
/// required to be non-negative.
pub fn crank_boundary_values() -> Result<Vec<(u64, u64, BigInt)>> {
    let sizes: Vec<(u64, u64)> = [5u64, 7, 11]
        .iter()
        .map(|&l| Ok((l, progression_index(l, 22)?)))
        .collect::<Result<_>>()?;
    let top = sizes.iter().map(|s| s.1).max().unwrap() as usize;
    let cranks = crank_series_corrected(top);
    Ok(sizes
        .into_iter()
        .map(|(l, size)| {
            let f = cranks.coeff(size as usize);
            let n = size as i64;
            let l_ = l as i64;
            (l, size, f.coefficient(n - l_ - 1) - f.coefficient(n - l_) - 1)
        })
        .collect())
}

pub fn verify_crank_boundary() -> Result<Report> {
    let started = Instant::now();
    let values = crank_boundary_values()?;
    let all = values
        .iter()
        .filter(|v| v.2 < BigInt::zero())
        .map(|(l, size, _)| cex("M(N-l-1,N) - M(N-l,N) - 1 >= 0", &[("l", *l as i64), ("N", *size as i64)], None))
        .collect();
    let shown: Vec<String> = values.iter().map(|(l, s, v)| format!("l={l} N={s}: {v}")).collect();
    Ok(Report::from_counterexamples("crank-boundary-n22", "l in {5, 7, 11}, n = 22", all, started)
        .note(shown.join("; ")))
}

/// One point of the rank distribution against `(g/4) sech^2(g m / 2) p(n)`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AsymptoticSample {
    pub n: u64,
    pub m: i64,
    pub gamma: f64,
    pub predicted: f64,
    #[serde(with = "decimal")]
    pub actual: BigInt,
    pub rel_error: f64,
    /// `|m| <= sqrt(n) log(n) / (pi sqrt 6)`.
    pub in_range: bool,
}

mod decimal {
    use num_bigint::BigInt;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &BigInt, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&v.to_string())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigInt, D::Error> {
        String::deserialize(d)?.parse().map_err(serde::de::Error::custom)
    }
}

/// Floating-point comparison of `N(m, n)` with its sech² approximation.
/// Samples outside the validity window are still computed but flagged.
pub fn asymptotic_diagnostic(n: u64, m_values: &[i64]) -> Result<Vec<AsymptoticSample>> {
    if n < 2 {
        return Err(Error::InvalidSpec(format!("asymptotics need n >= 2, got {n}")));
    }
    let top = within_bound(n)?;
    let row = rank_series(top).coeff(top).clone();
    let p = partition_counts(top)[top].to_f64().unwrap_or(f64::INFINITY);
    let nf = n as f64;
    let gamma = PI / (6.0 * nf).sqrt();
    let window = nf.sqrt() * nf.ln() / (PI * 6f64.sqrt());
    Ok(m_values
        .iter()
        .map(|&m| {
            let sech = 1.0 / (gamma * m as f64 / 2.0).cosh();
            let predicted = gamma / 4.0 * sech * sech * p;
            let actual = row.coefficient(m);
            let a = actual.to_f64().unwrap_or(f64::INFINITY);
            AsymptoticSample {
                n,
                m,
                gamma,
                predicted,
                actual,
                rel_error: (a - predicted).abs() / predicted,
                in_range: (m.unsigned_abs() as f64) <= window,
            }
        })
        .collect())
}

/// Stable identifiers accepted by [`run_claim`].
pub const CLAIM_IDS: &[&str] = &[
    "conj1.1-part1-ell5",
    "conj1.1-part1-ell7",
    "conj1.1-part2",
    "conj1.1-part3-ell5",
    "conj1.1-part3-ell7",
    "conj1.1-part3-ell11",
    "conj1.3",
    "conj1.4",
    "conj4.2",
    "thm1.2",
    "thm2.2",
    "lemma2.4",
    "crank-summation",
    "colored-stanton-A",
    "colored-stanton-B",
    "colored-divisibility-A",
    "colored-divisibility-B",
    "crank-boundary-n22",
    "table1",
];

/// Range knobs for [`run_claim`]; `None` picks the per-claim default.
#[derive(Clone, Copy, Debug, Default)]
pub struct ClaimOptions {
    /// Largest `n` (or scan bound, or index bound; see [`claim_help`]).
    pub n_max: Option<u64>,
    pub k_max: Option<u64>,
}

/// What `n_max` and `k_max` mean for `id`, with their defaults.
pub fn claim_help(id: &str) -> Option<&'static str> {
    Some(match id {
        "conj1.1-part1-ell5" | "conj1.1-part3-ell5" | "conj1.1-part2" | "thm2.2" => {
            "n_max: largest n (default 99)"
        }
        "conj1.1-part1-ell7" | "conj1.1-part3-ell7" => "n_max: largest n (default 70)",
        "conj1.1-part3-ell11" => "n_max: largest n (default 44)",
        "conj1.3" => "n_max: largest n scanned from 39 (default 200)",
        "conj1.4" => "n_max: scan bound, n < n_max (default 100); k_max (default 12)",
        "conj4.2" | "table1" => "n_max: scan bound, n < n_max (default 75); k_max (default 6)",
        "thm1.2" => "n_max: largest n (default 50); k_max (default 12)",
        "lemma2.4" => "n_max: largest n (default 60); k_max (default 10)",
        "crank-summation" => "n_max: series order (default 100); k_max: largest m (default 10)",
        "colored-stanton-A" | "colored-stanton-B" => {
            "n_max: largest n (default 10); k_max (default 12); runs every covered case"
        }
        "colored-divisibility-A" | "colored-divisibility-B" => {
            "n_max: largest index l n + delta (default 300); k_max (default 12); runs every case"
        }
        "crank-boundary-n22" => "no range knobs",
        _ => return None,
    })
}

fn merge(id: &str, range: String, reports: Vec<Report>, started: Instant) -> Report {
    let status = if reports.iter().any(|r| r.status == Status::Fail) {
        Status::Fail
    } else if reports.iter().any(|r| r.status == Status::Partial) {
        Status::Partial
    } else {
        Status::Pass
    };
    let mut out = Report::from_counterexamples(id, range, Vec::new(), started);
    for r in reports {
        out.notes.push(format!("{}: {:?}, {} counterexamples", r.range, r.status, r.counterexamples.len()));
        out.counterexamples.extend(r.counterexamples);
    }
    out.status = status;
    out
}

/// Runs the suite named `id`.
pub fn run_claim(id: &str, opts: ClaimOptions) -> Result<Report> {
    let started = Instant::now();
    let n = |d: u64| opts.n_max.unwrap_or(d);
    let k = |d: u64| opts.k_max.unwrap_or(d);
    match id {
        "conj1.1-part1-ell5" => verify_stanton_rank(5, n(99)),
        "conj1.1-part1-ell7" => verify_stanton_rank(7, n(70)),
        "conj1.1-part2" => verify_stanton_crank2(n(99)),
        "conj1.1-part3-ell5" => verify_stanton_crank3(5, n(99)),
        "conj1.1-part3-ell7" => verify_stanton_crank3(7, n(70)),
        "conj1.1-part3-ell11" => verify_stanton_crank3(11, n(44)),
        "conj1.3" => verify_rank_unimodality(RANK_INEQUALITY_ONSET, n(200)),
        "conj1.4" => search::check_conjecture_1_4(3, k(12) as u32, n(100) as u32),
        "conj4.2" => {
            let results = search::exhaustive_search(3, k(6) as u32, n(75) as u32)?;
            Ok(search::check_conjecture_4_2(&results))
        }
        "table1" => search::verify_table1(n(search::TABLE1_N_HI as u64) as u32),
        "thm1.2" => verify_colored_congruences(k(12), n(50)),
        "thm2.2" => verify_crank_mod10(n(99)),
        "lemma2.4" => verify_crank_diagonal(k(10), n(60)),
        "crank-summation" => verify_crank_summation(k(10), n(100)),
        "colored-stanton-A" | "colored-stanton-B" => {
            let kind = if id.ends_with('A') { Kind::A } else { Kind::B };
            let (k_max, n_max) = (k(12), n(10));
            let reports = CongruenceCase::all_up_to(k_max)
                .iter()
                .filter(|c| c.k >= 3 && kind.check_hypotheses(c).is_ok())
                .map(|c| verify_colored_stanton(kind, c, n_max))
                .collect::<Result<Vec<_>>>()?;
            Ok(merge(id, format!("k <= {k_max}, 0 <= n <= {n_max}"), reports, started))
        }
        "colored-divisibility-A" | "colored-divisibility-B" => {
            let kind = if id.ends_with('A') { Kind::A } else { Kind::B };
            let (k_max, idx_max) = (k(12), n(300));
            let cases: Vec<CongruenceCase> = CongruenceCase::all_up_to(k_max)
                .into_iter()
                .filter(|c| kind.divisibility_covers(c) && kind.spec(c.k as u32).is_ok())
                .collect();
            let reports = verify_colored_divisibility_all(kind, &cases, idx_max)?;
            Ok(merge(id, format!("k <= {k_max}, l n + delta <= {idx_max}"), reports, started))
        }
        "crank-boundary-n22" => verify_crank_boundary(),
        _ => Err(Error::UnknownClaim(id.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn modified_rank_small() {
        let r = verify_stanton_rank(5, 0).unwrap();
        assert!(r.passed());
        assert!(r.notes[0].ends_with(&p("z^-2").to_string()));
        assert!(verify_stanton_rank(7, 5).unwrap().passed());
        assert!(matches!(verify_stanton_rank(11, 1), Err(Error::InvalidEll { ell: 11 })));
    }

    #[test]
    fn crank2_normalization_recorded() {
        let r = verify_stanton_crank2(10).unwrap();
        assert!(r.passed(), "{r:?}");
        assert!(r.notes.iter().any(|n| n == "normalization: z^4 * crank_4 / Phi_5(z^2) = 1"));
    }

    #[test]
    fn crank3_small() {
        for ell in [5, 7, 11] {
            let r = verify_stanton_crank3(ell, 3).unwrap();
            assert!(r.passed(), "{r:?}");
        }
        assert!(verify_stanton_crank3(5, 0).unwrap().notes[0].ends_with("z^-2"));
    }

    #[test]
    fn rank_inequality_small_n() {
        let v = rank_inequality_violations(10).unwrap();
        assert!(!v.contains(&(4, 0)));
        let r = verify_rank_unimodality(1, 60).unwrap();
        assert!(r.passed(), "{r:?}");
        assert!(r.notes[0].starts_with("largest n < 39"));
    }

    #[test]
    fn rank_endpoint_always_fails() {
        let ranks = rank_series(30);
        for n in 2..=30i64 {
            let f = ranks.coeff(n as usize);
            assert!(f.coefficient(n - 2) < f.coefficient(n - 1));
        }
    }

    #[test]
    fn crank_mod10_small() {
        let cranks = crank_series_corrected(4);
        let f = cranks.coeff(4);
        for k in 0..5 {
            assert_eq!(crank_residue_count(f, 2 * k, 10), BigInt::from(1));
            assert_eq!(crank_residue_count(f, 2 * k + 1, 10), BigInt::zero());
        }
        assert_eq!(crank_residue_count(f, 0, 2), BigInt::from(5));
        assert!(verify_crank_mod10(20).unwrap().passed());
    }

    #[test]
    fn crank_diagonal_and_summation() {
        assert!(verify_crank_diagonal(5, 30).unwrap().passed());
        assert!(verify_crank_summation(5, 40).unwrap().passed());
    }

    #[test]
    fn colored_congruences() {
        let c = CongruenceCase::new(1, 4, 5).unwrap();
        assert!(verify_colored_congruence(&c, 30).unwrap().passed());
        let c = CongruenceCase::new(6, 4, 5).unwrap();
        assert_eq!((c.t, c.delta), (2, 4));
        assert!(verify_colored_congruence(&c, 30).unwrap().passed());
        assert!(CongruenceCase::new(3, 4, 7).is_err());
    }

    #[test]
    fn hypotheses() {
        let c = CongruenceCase::new(11, 14, 5).unwrap();
        assert!(Kind::B.check_hypotheses(&c).is_ok());
        assert!(matches!(Kind::A.check_hypotheses(&c), Err(Error::HypothesisViolation(_))));
        let even = CongruenceCase::new(8, 6, 7).unwrap();
        assert!(Kind::B.check_hypotheses(&even).is_err());
        assert!(Kind::A.divisibility_covers(&CongruenceCase::new(6, 4, 5).unwrap()));
    }

    #[test]
    fn colored_quotients_a6() {
        let c = CongruenceCase::new(6, 4, 5).unwrap();
        let r = verify_colored_stanton(Kind::A, &c, 8).unwrap();
        assert_eq!(r.status, Status::Pass, "{r:?}");
    }

    #[test]
    fn asymptotics() {
        let s = asymptotic_diagnostic(100, &[0, 3, 60]).unwrap();
        assert!(s[0].in_range && !s[2].in_range);
        assert!((s[0].gamma - PI / 600f64.sqrt()).abs() < 1e-15);
        let far = asymptotic_diagnostic(400, &[0]).unwrap();
        assert!(far[0].rel_error < s[0].rel_error);
        let json = serde_json::to_string(&s[0]).unwrap();
        assert!(json.contains(r#""actual":""#));
        assert!(asymptotic_diagnostic(1, &[0]).is_err());
    }

    #[test]
    fn unknown_claim() {
        assert!(matches!(run_claim("nope", ClaimOptions::default()), Err(Error::UnknownClaim(_))));
        for id in CLAIM_IDS {
            assert!(claim_help(id).is_some(), "{id}");
        }
    }
}
