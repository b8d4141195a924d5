//! Integer partitions by direct enumeration, their rank and crank, colored
//! partition counts, and the four-monomial modified rank/crank polynomials.
//!
//! Enumeration is exponential and serves as the independent oracle; the
//! generating-function routes in [`crate::qseries`] are what the suites use.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::cyclotomic::is_prime;
use crate::error::{Error, Result};
use crate::grid::{Grid, Op};
use crate::laurent::LaurentPoly;

/// Largest `n` accepted by the enumerators (p(60) = 966467).
pub const ENUMERATION_BOUND: u64 = 60;

/// Largest `q`-order the polynomial helpers will expand to.
pub const SERIES_BOUND: u64 = 2000;

/// Parts in non-increasing order; the empty partition is the partition of 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Parse("partition parts must be positive".into()));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn size(&self) -> u64 {
        self.parts.iter().map(|&p| u64::from(p)).sum()
    }

    pub fn largest(&self) -> Option<u32> {
        self.parts.first().copied()
    }

    /// Number of parts equal to 1.
    pub fn ones(&self) -> usize {
        self.parts.iter().rev().take_while(|&&p| p == 1).count()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.parts.iter().map(u32::to_string).collect();
        write!(f, "({})", s.join(","))
    }
}

/// Partitions of `n` in reverse lexicographic order, starting from `(n)`.
pub struct Partitions {
    current: Option<Vec<u32>>,
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let cur = self.current.take()?;
        let out = Partition { parts: cur.clone() };
        self.current = successor(cur);
        Some(out)
    }
}

fn successor(mut parts: Vec<u32>) -> Option<Vec<u32>> {
    // rightmost part > 1 is decremented; the freed ones are repacked greedily
    let mut ones = 0u32;
    while parts.last() == Some(&1) {
        parts.pop();
        ones += 1;
    }
    let last = parts.last_mut()?;
    *last -= 1;
    let cap = *last;
    let mut rest = ones + 1;
    while rest > 0 {
        let take = rest.min(cap);
        parts.push(take);
        rest -= take;
    }
    Some(parts)
}

pub fn enumerate_bounded(n: u64, bound: u64) -> Result<Partitions> {
    if n > bound {
        return Err(Error::BoundExceeded { n, bound });
    }
    let first = if n == 0 { Vec::new() } else { vec![n as u32] };
    Ok(Partitions { current: Some(first) })
}

pub fn enumerate(n: u64) -> Result<Partitions> {
    enumerate_bounded(n, ENUMERATION_BOUND)
}

/// Dyson's rank: largest part minus number of parts.
pub fn rank_of(lam: &Partition) -> Result<i64> {
    let largest = lam.largest().ok_or(Error::EmptyPartition)?;
    Ok(i64::from(largest) - lam.parts.len() as i64)
}

/// Andrews–Garvan crank: the largest part if there are no ones, otherwise
/// (number of parts larger than the number of ones) minus (number of ones).
pub fn crank_of(lam: &Partition) -> Result<i64> {
    let largest = lam.largest().ok_or(Error::EmptyPartition)?;
    let omega = lam.ones();
    if omega == 0 {
        return Ok(i64::from(largest));
    }
    let mu = lam.parts.iter().filter(|&&p| p as usize > omega).count();
    Ok(mu as i64 - omega as i64)
}

/// `N(m, n)` by enumeration; `N(0, 0) = 1`.
pub fn rank_count(m: i64, n: u64) -> Result<u64> {
    if n == 0 {
        return Ok(u64::from(m == 0));
    }
    let mut count = 0;
    for lam in enumerate(n)? {
        if rank_of(&lam)? == m {
            count += 1;
        }
    }
    Ok(count)
}

/// `M(m, n)` by enumeration, with the conventional values at `n = 1`
/// (`M(0,1) = 1`, all others 0) and `M(0,0) = 1`.
pub fn crank_count(m: i64, n: u64) -> Result<u64> {
    if n <= 1 {
        return Ok(u64::from(m == 0));
    }
    let mut count = 0;
    for lam in enumerate(n)? {
        if crank_of(&lam)? == m {
            count += 1;
        }
    }
    Ok(count)
}

/// Runs `ops` on the constant series 1 with no `z` dependence and reads off
/// the integer coefficients.
fn integer_series(order: usize, ops: impl Iterator<Item = Op>) -> Vec<BigInt> {
    let mut g = Grid::<BigInt>::one(order, 0);
    for op in ops {
        g.apply(op).expect("arbitrary precision cannot overflow");
    }
    (0..=order).map(|i| g.row_poly(i).coefficient(0)).collect()
}

/// `p_k(0..=order)` from the k-fold product `prod_n (1 - q^n)^{-k}`.
pub fn colored_counts(k: u32, order: usize) -> Vec<BigInt> {
    integer_series(
        order,
        (1..=order).flat_map(|n| (0..k).map(move |_| Op::DivGeometric { zexp: 0, step: n })),
    )
}

pub fn colored_count(k: u32, n: usize) -> BigInt {
    colored_counts(k, n).pop().unwrap()
}

/// `p(0..=order)`.
pub fn partition_counts(order: usize) -> Vec<BigInt> {
    colored_counts(1, order)
}

/// `sum_n M(m, n) q^n` for `m >= 1` from
/// `(1/(q;q)_inf) sum_{j>=1} (-1)^{j-1} q^{j(j-1)/2 + m j} (1 - q^j)`.
///
/// Like the product it comes from, this gives the uncorrected value at `n = 1`.
pub fn crank_count_series(m: u64, order: usize) -> Vec<BigInt> {
    crank_count_series_with(m, order, true)
}

/// Same sum with or without the `(1 - q^j)` factor on each term.
pub(crate) fn crank_count_series_with(m: u64, order: usize, damped: bool) -> Vec<BigInt> {
    assert!(m >= 1, "the summation formula is for positive crank values");
    let mut theta = vec![BigInt::zero(); order + 1];
    for j in 1u64.. {
        let e = j * (j - 1) / 2 + m * j;
        if e > order as u64 {
            break;
        }
        let sign = if j % 2 == 1 { BigInt::one() } else { -BigInt::one() };
        if damped && e + j <= order as u64 {
            theta[(e + j) as usize] -= &sign;
        }
        theta[e as usize] += sign;
    }
    let p = partition_counts(order);
    (0..=order)
        .map(|n| (0..=n).map(|i| &theta[i] * &p[n - i]).sum())
        .collect()
}

/// `l - (l^2 - 1)/24`.
pub fn beta(ell: u64) -> Result<i64> {
    let sq = ell * ell - 1;
    if ell < 2 || !sq.is_multiple_of(24) {
        return Err(Error::InvalidEll { ell });
    }
    Ok(ell as i64 - (sq / 24) as i64)
}

/// Least non-negative `d` with `24 d ≡ k (mod l)`.
pub fn delta(k: u64, ell: u64) -> Result<u64> {
    if ell < 2 || num_integer::gcd(24, ell) != 1 {
        return Err(Error::NoDelta { ell });
    }
    Ok((0..ell).find(|d| (24 * d) % ell == k % ell).expect("24 is invertible mod l"))
}

/// Which clause of the colored-congruence criteria a `(h, l)` pair uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Clause {
    /// `h in {4, 8, 14}`, `l ≡ 2 (mod 3)`
    One,
    /// `h in {6, 10}`, `l ≡ 3 (mod 4)`
    Two,
    /// `h = 26`, `l ≡ 11 (mod 12)`
    Three,
}

pub const CONGRUENCE_OFFSETS: [u64; 6] = [4, 6, 8, 10, 14, 26];

fn clause_for(h: u64, ell: u64) -> Option<Clause> {
    match h {
        4 | 8 | 14 if ell % 3 == 2 => Some(Clause::One),
        6 | 10 if ell % 4 == 3 => Some(Clause::Two),
        26 if ell % 12 == 11 => Some(Clause::Three),
        _ => None,
    }
}

/// `p_k(l n + delta) ≡ 0 (mod l)` with `k + h = l t`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CongruenceCase {
    pub k: u64,
    pub h: u64,
    pub ell: u64,
    pub t: u64,
    pub delta: u64,
    pub clause: Clause,
}

impl CongruenceCase {
    /// Validates `(k, h, l)`. The prime must be at least 5 so that `24` is
    /// invertible and `delta` is defined.
    pub fn new(k: u64, h: u64, ell: u64) -> Result<Self> {
        let bad = |why: &str| Error::InvalidCase(format!("(k={k}, h={h}, l={ell}): {why}"));
        if k == 0 {
            return Err(bad("k must be positive"));
        }
        if !is_prime(ell) || ell < 5 {
            return Err(bad("l must be a prime >= 5"));
        }
        if !(k + h).is_multiple_of(ell) {
            return Err(bad("l does not divide k + h"));
        }
        let clause = clause_for(h, ell).ok_or_else(|| bad("no clause covers this (h, l)"))?;
        Ok(CongruenceCase { k, h, ell, t: (k + h) / ell, delta: delta(k, ell)?, clause })
    }

    /// Every valid case with `1 <= k <= k_max`, ordered by `(k, h, l)`.
    pub fn all_up_to(k_max: u64) -> Vec<CongruenceCase> {
        let mut out = Vec::new();
        for k in 1..=k_max {
            for h in CONGRUENCE_OFFSETS {
                for ell in 5..=k + h {
                    if let Ok(c) = CongruenceCase::new(k, h, ell) {
                        out.push(c);
                    }
                }
            }
        }
        out
    }

    /// `l n + delta`.
    pub fn index(&self, n: u64) -> u64 {
        self.ell * n + self.delta
    }
}

impl fmt::Display for CongruenceCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "k={} h={} l={} t={} delta={}", self.k, self.h, self.ell, self.t, self.delta)
    }
}

/// `l n + beta`, checked against [`SERIES_BOUND`].
pub fn progression_index(ell: u64, n: u64) -> Result<u64> {
    let idx = (ell * n) as i64 + beta(ell)?;
    let idx = idx as u64;
    if idx > SERIES_BOUND {
        return Err(Error::BoundExceeded { n: idx, bound: SERIES_BOUND });
    }
    Ok(idx)
}

/// `rank_N(z) + z^{N-2} - z^{N-1} + z^{2-N} - z^{1-N}` for `N = size`.
pub fn modify_rank(rank_poly: &LaurentPoly, size: u64) -> LaurentPoly {
    let n = size as i64;
    let corr = [(n - 2, 1), (n - 1, -1), (2 - n, 1), (1 - n, -1)]
        .into_iter()
        .fold(LaurentPoly::zero(), |acc, (e, c)| &acc + &LaurentPoly::monomial(c, e));
    rank_poly + &corr
}

/// `crank_N(z) + z^{N-l} - z^N + z^{l-N} - z^{-N}` for `N = size`.
pub fn modify_crank(crank_poly: &LaurentPoly, size: u64, ell: u64) -> LaurentPoly {
    let n = size as i64;
    let l = ell as i64;
    let corr = [(n - l, 1), (n, -1), (l - n, 1), (-n, -1)]
        .into_iter()
        .fold(LaurentPoly::zero(), |acc, (e, c)| &acc + &LaurentPoly::monomial(c, e));
    crank_poly + &corr
}

/// Modified rank polynomial at `N = l n + beta` for `l in {5, 7}`.
pub fn modified_rank_poly(ell: u64, n: u64) -> Result<LaurentPoly> {
    if ell != 5 && ell != 7 {
        return Err(Error::InvalidEll { ell });
    }
    let size = progression_index(ell, n)?;
    let ranks = crate::qseries::rank_series(size as usize);
    Ok(modify_rank(ranks.coeff(size as usize), size))
}

/// Modified crank polynomial at `N = l n + beta` for `l in {5, 7, 11}`.
pub fn modified_crank_poly(ell: u64, n: u64) -> Result<LaurentPoly> {
    if ![5, 7, 11].contains(&ell) {
        return Err(Error::InvalidEll { ell });
    }
    let size = progression_index(ell, n)?;
    let cranks = crate::qseries::crank_series_corrected(size as usize);
    Ok(modify_crank(cranks.coeff(size as usize), size, ell))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(p: &[u32]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    #[test]
    fn enumeration_small() {
        let zero: Vec<_> = enumerate(0).unwrap().collect();
        assert_eq!(zero, vec![part(&[])]);
        let four: Vec<String> = enumerate(4).unwrap().map(|p| p.to_string()).collect();
        assert_eq!(four, ["(4)", "(3,1)", "(2,2)", "(2,1,1)", "(1,1,1,1)"]);
        assert_eq!(enumerate(9).unwrap().count(), 30);
        assert!(matches!(enumerate(61), Err(Error::BoundExceeded { n: 61, bound: 60 })));
    }

    #[test]
    fn enumeration_counts_match_series() {
        let p = partition_counts(30);
        for n in 0..=30u64 {
            assert_eq!(BigInt::from(enumerate(n).unwrap().count()), p[n as usize], "p({n})");
        }
    }

    #[test]
    fn enumeration_is_strictly_reverse_lex() {
        let all: Vec<Vec<u32>> = enumerate(12).unwrap().map(|p| p.parts().to_vec()).collect();
        assert!(all.windows(2).all(|w| w[0] > w[1]));
        assert!(all.iter().all(|p| p.windows(2).all(|w| w[0] >= w[1])));
    }

    #[test]
    fn ranks() {
        assert_eq!(rank_of(&part(&[4])).unwrap(), 3);
        assert_eq!(rank_of(&part(&[2, 1, 1])).unwrap(), -1);
        assert_eq!(rank_of(&part(&[3, 1])).unwrap(), 1);
        assert_eq!(rank_of(&part(&[])), Err(Error::EmptyPartition));
    }

    #[test]
    fn cranks() {
        assert_eq!(crank_of(&part(&[4])).unwrap(), 4);
        assert_eq!(crank_of(&part(&[3, 1])).unwrap(), 0);
        assert_eq!(crank_of(&part(&[2, 1, 1])).unwrap(), -2);
        assert_eq!(crank_of(&part(&[])), Err(Error::EmptyPartition));
    }

    #[test]
    fn counts() {
        assert_eq!(rank_count(3, 4).unwrap(), 1);
        assert_eq!(rank_count(0, 4).unwrap(), 1);
        assert_eq!(rank_count(5, 4).unwrap(), 0);
        assert_eq!(rank_count(0, 0).unwrap(), 1);
        assert_eq!(crank_count(0, 1).unwrap(), 1);
        assert_eq!(crank_count(-1, 1).unwrap(), 0);
        assert_eq!(crank_count(4, 4).unwrap(), 1);
        assert_eq!(crank_count(3, 4).unwrap(), 0);
    }

    #[test]
    fn colored() {
        assert_eq!(colored_count(1, 4), BigInt::from(5));
        assert_eq!(colored_count(2, 2), BigInt::from(5));
        assert_eq!(colored_count(7, 0), BigInt::from(1));
    }

    #[test]
    fn colored_counts_match_divisor_recurrence() {
        // n p_k(n) = k sum_{j=1}^n sigma(j) p_k(n - j)
        let order = 40;
        let sigma: Vec<i64> = (0..=order as i64)
            .map(|j| if j == 0 { 0 } else { (1..=j).filter(|d| j % d == 0).sum() })
            .collect();
        for k in [1u32, 3, 6, 12] {
            let mut rec = vec![BigInt::one()];
            for n in 1..=order {
                let s: BigInt = (1..=n).map(|j| BigInt::from(sigma[j]) * &rec[n - j]).sum();
                rec.push(s * k / n);
            }
            assert_eq!(colored_counts(k, order), rec, "k = {k}");
        }
    }

    #[test]
    fn beta_and_delta() {
        assert_eq!(beta(5).unwrap(), 4);
        assert_eq!(beta(7).unwrap(), 5);
        assert_eq!(beta(11).unwrap(), 6);
        assert!(matches!(beta(3), Err(Error::InvalidEll { ell: 3 })));
        assert_eq!(delta(1, 5).unwrap(), 4);
        assert_eq!(delta(1, 7).unwrap(), 5);
        assert_eq!(delta(1, 11).unwrap(), 6);
        assert!(delta(1, 3).is_err());
    }

    #[test]
    fn congruence_cases() {
        let c = CongruenceCase::new(6, 4, 5).unwrap();
        assert_eq!((c.t, c.delta, c.clause), (2, 4, Clause::One));
        assert!(CongruenceCase::new(3, 4, 7).is_err());
        assert!(CongruenceCase::new(1, 4, 5).is_ok());
        // 21 = 3 * 7, but 7 ≡ 1 (mod 3) and 3 has no delta
        assert!(CongruenceCase::new(7, 14, 7).is_err());
        assert!(CongruenceCase::new(7, 14, 3).is_err());
        let c = CongruenceCase::new(11, 14, 5).unwrap();
        assert_eq!((c.t, c.delta, c.clause), (5, 4, Clause::One));
        let c = CongruenceCase::new(13, 6, 19).unwrap();
        assert_eq!((c.t, c.clause), (1, Clause::Two));
        assert!(CongruenceCase::all_up_to(12).iter().all(|c| c.k <= 12));
    }

    #[test]
    fn modified_polys() {
        let r = modified_rank_poly(5, 0).unwrap();
        assert_eq!(r, LaurentPoly::from_i64s(-2, &[1; 5]));
        let r7 = modified_rank_poly(7, 0).unwrap();
        let rank5 = crate::qseries::rank_series(5).coeff(5).clone();
        let expect = &rank5 + &"z^3 - z^4 + z^-3 - z^-4".parse().unwrap();
        assert_eq!(r7, expect);
        let r51 = modified_rank_poly(5, 1).unwrap();
        assert_eq!(r51.coefficient(8), BigInt::zero());
        assert_eq!(r51.coefficient(7), BigInt::one());
        let c = modified_crank_poly(5, 0).unwrap();
        assert_eq!(c, LaurentPoly::from_i64s(-2, &[1; 5]));
        for ell in [5, 7, 11] {
            assert!(modified_crank_poly(ell, 2).unwrap().is_symmetric());
        }
        assert!(modified_rank_poly(11, 0).is_err());
    }

    #[test]
    fn crank_summation_formula_small() {
        // the formula follows the raw product, so n = 1 gives the uncorrected M(1,1) = 1
        let s = crank_count_series(1, 8);
        assert_eq!(s[1], BigInt::one());
        for n in (0..=8).filter(|&n| n != 1) {
            assert_eq!(s[n], BigInt::from(crank_count(1, n as u64).unwrap()), "M(1,{n})");
        }
        // without the (1 - q^j) damping the sum already disagrees at M(1,2)
        let undamped = crank_count_series_with(1, 8, false);
        assert_eq!(undamped[2], BigInt::one());
        assert_eq!(crank_count(1, 2).unwrap(), 0);
    }
}
