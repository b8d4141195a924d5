//! Truncated power series in `q` with Laurent-polynomial coefficients, and
//! the rank, crank and colored-crank generating functions built on them.

use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grid::{build_any, AnyGrid, Coeff, Grid, GridBuilder, Op, Overflow, ProductPlan};
use crate::laurent::LaurentPoly;

/// `sum_{n <= order} coeffs[n] q^n`; nothing beyond `order` is meaningful.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QSeries {
    order: usize,
    coeffs: Vec<LaurentPoly>,
}

impl QSeries {
    pub fn one(order: usize) -> Self {
        let mut coeffs = vec![LaurentPoly::zero(); order + 1];
        coeffs[0] = LaurentPoly::one();
        QSeries { order, coeffs }
    }

    /// Pads or truncates `coeffs` to `order + 1` entries.
    pub fn from_coeffs(order: usize, mut coeffs: Vec<LaurentPoly>) -> Self {
        coeffs.resize(order + 1, LaurentPoly::zero());
        QSeries { order, coeffs }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// `[q^n]`.
    ///
    /// # Panics
    /// If `n` is beyond the truncation order.
    pub fn coeff(&self, n: usize) -> &LaurentPoly {
        assert!(n <= self.order, "q^{n} is beyond the truncation order {}", self.order);
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[LaurentPoly] {
        &self.coeffs
    }

    pub fn set_coeff(&mut self, n: usize, p: LaurentPoly) {
        assert!(n <= self.order);
        self.coeffs[n] = p;
    }

    /// Truncated product; the result has the smaller of the two orders.
    pub fn mul(&self, other: &QSeries) -> QSeries {
        let order = self.order.min(other.order);
        let mut out = vec![LaurentPoly::zero(); order + 1];
        for (i, a) in self.coeffs.iter().take(order + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(order + 1 - i).enumerate() {
                if !b.is_zero() {
                    out[i + j] = &out[i + j] + &(a * b);
                }
            }
        }
        QSeries { order, coeffs: out }
    }

    /// Specialization `z = 1`: the integer sequence of coefficient sums.
    pub fn eval_one(&self) -> Vec<BigInt> {
        self.coeffs.iter().map(LaurentPoly::eval_one).collect()
    }

    fn from_grid(g: &AnyGrid) -> QSeries {
        let coeffs = (0..=g.order()).map(|i| g.row_poly(i)).collect();
        QSeries { order: g.order(), coeffs }
    }
}

fn crank_factor_plan(a: u32, order: usize) -> ProductPlan {
    let a = i64::from(a);
    let mut ops = Vec::with_capacity(2 * order + 1);
    for n in 1..=order {
        ops.push(Op::DivGeometric { zexp: a, step: n });
        ops.push(Op::DivGeometric { zexp: -a, step: n });
    }
    ops.push(Op::MulEuler);
    ProductPlan { order, slope: a as usize, ops }
}

/// Raw product `prod_{n>=1} (1-q^n) / ((1 - z^a q^n)(1 - z^-a q^n))` to order
/// `q^order`, with no correction at `q^1`. For `a = 0` this is `1/(q;q)_inf`.
pub fn crank_factor_series(a: u32, order: usize) -> QSeries {
    QSeries::from_grid(&build_any(&crank_factor_plan(a, order)))
}

/// `sum_n crank_n(z) q^n`: the raw `a = 1` product with `[q^1]` set to 1,
/// i.e. `M(0,1) = 1` and `M(m,1) = 0` otherwise.
pub fn crank_series_corrected(order: usize) -> QSeries {
    let mut s = crank_factor_series(1, order);
    if order >= 1 {
        s.set_coeff(1, LaurentPoly::one());
    }
    s
}

struct RankBuilder {
    order: usize,
}

impl GridBuilder for RankBuilder {
    fn build<T: Coeff>(&self) -> Result<Grid<T>, Overflow> {
        let mut acc = Grid::one(self.order, 1);
        let mut term = Grid::one(self.order, 1);
        for n in 1.. {
            let sq = n * n;
            if sq > self.order {
                break;
            }
            term.truncate(self.order - sq);
            term.div_geometric(1, n)?;
            term.div_geometric(-1, n)?;
            acc.add_shifted(&term, sq)?;
        }
        Ok(acc)
    }
}

/// `sum_n rank_n(z) q^n = sum_{n>=0} q^{n^2} / prod_{k=1}^n (1 - z q^k)(1 - z^-1 q^k)`.
pub fn rank_series(order: usize) -> QSeries {
    QSeries::from_grid(&build_any(&RankBuilder { order }))
}

/// `(k, a_1 > a_2 > ... > a_h > 0)` with `h = ceil(k/2)`, naming the product
/// `C(0)^{floor(k/2)} prod_j C(a_j z)` of crank factors.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CrankSpec {
    k: u32,
    a: Vec<u32>,
}

impl CrankSpec {
    pub fn new(k: u32, a: Vec<u32>) -> Result<Self> {
        if k < 3 {
            return Err(Error::InvalidSpec(format!("k = {k} must be at least 3")));
        }
        let want = k.div_ceil(2) as usize;
        if a.len() != want {
            return Err(Error::InvalidSpec(format!(
                "k = {k} needs {want} entries in the a-vector, got {}",
                a.len()
            )));
        }
        if a.last() == Some(&0) || a.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::InvalidSpec(format!("{a:?} is not strictly decreasing and positive")));
        }
        Ok(CrankSpec { k, a })
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn a(&self) -> &[u32] {
        &self.a
    }

    /// Number of `C(0; tau)` factors.
    pub fn zero_factors(&self) -> u32 {
        self.k / 2
    }

    /// Member of the searched space (`a_1 <= k`).
    pub fn in_search_space(&self) -> bool {
        self.a[0] <= self.k
    }

    /// `a_1 - a_2`.
    pub fn leading_gap(&self) -> u32 {
        self.a[0] - self.a[1]
    }

    /// Dense expansion plan. `C(0)^{floor(k/2)} prod_j C(a_j z)` collapses to
    /// `(q;q)_inf^{k mod 2} prod_j prod_n 1/((1 - z^a_j q^n)(1 - z^-a_j q^n))`.
    pub(crate) fn plan(&self, order: usize) -> ProductPlan {
        let mut ops = Vec::with_capacity(2 * order * self.a.len() + 1);
        for &aj in &self.a {
            for n in 1..=order {
                ops.push(Op::DivGeometric { zexp: i64::from(aj), step: n });
                ops.push(Op::DivGeometric { zexp: -i64::from(aj), step: n });
            }
        }
        if self.k % 2 == 1 {
            ops.push(Op::MulEuler);
        }
        ProductPlan { order, slope: self.a[0] as usize, ops }
    }
}

impl fmt::Display for CrankSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let a: Vec<String> = self.a.iter().map(u32::to_string).collect();
        write!(f, "C_{}({})", self.k, a.join(","))
    }
}

/// Expansion of the colored crank generating function named by `spec`.
pub fn ck_grid(spec: &CrankSpec, order: usize) -> AnyGrid {
    build_any(&spec.plan(order))
}

pub fn ck_series(spec: &CrankSpec, order: usize) -> QSeries {
    QSeries::from_grid(&ck_grid(spec, order))
}

/// The a-vector `(h+1, h, ..., 3, 2)` with `h = ceil(k/2)`.
pub fn ak_spec(k: u32) -> Result<CrankSpec> {
    if k < 3 {
        return Err(Error::InvalidK { k, reason: "the A family starts at k = 3" });
    }
    let h = k.div_ceil(2);
    CrankSpec::new(k, (2..=h + 1).rev().collect())
}

/// The a-vector `(h+2, h+1, ..., 6, 5, 3, 2)` with `h = ceil(k/2)`; `k` must
/// be odd and at least 7 unless `allow_even` opts into the even members.
pub fn bk_spec(k: u32, allow_even: bool) -> Result<CrankSpec> {
    if k < 7 {
        return Err(Error::InvalidK { k, reason: "the B family needs k >= 7" });
    }
    if k.is_multiple_of(2) && !allow_even {
        return Err(Error::InvalidK { k, reason: "the B family is stated for odd k" });
    }
    let h = k.div_ceil(2);
    let mut a: Vec<u32> = (5..=h + 2).rev().collect();
    a.extend([3, 2]);
    CrankSpec::new(k, a)
}

pub fn ak_series(k: u32, order: usize) -> Result<QSeries> {
    Ok(ck_series(&ak_spec(k)?, order))
}

pub fn bk_series(k: u32, order: usize) -> Result<QSeries> {
    Ok(ck_series(&bk_spec(k, false)?, order))
}
