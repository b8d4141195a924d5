//! Dense two-dimensional coefficient tables for truncated series in `q`
//! whose coefficients are Laurent polynomials in `z`.
//!
//! Row `i` holds `[q^i]`, stored centred at exponent 0 with radius
//! `slope * i`. Every product we expand has `|exponent of z| <= slope * (power of q)`
//! termwise, so the radius bound is exact and loops never leave the band.
//!
//! Arithmetic is generic over [`Coeff`]; the builders first try checked
//! `i128`, then checked 256-bit, then arbitrary precision.

use ethnum::I256;
use num_bigint::BigInt;
use num_traits::Zero;

use crate::laurent::{is_unimodal_seq, LaurentPoly};

pub trait Coeff: Clone + PartialOrd + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    /// `self += other`; `false` on overflow (value then unspecified).
    fn add_assign_checked(&mut self, other: &Self) -> bool;
    /// `self -= other`; `false` on overflow.
    fn sub_assign_checked(&mut self, other: &Self) -> bool;
    fn to_bigint(&self) -> BigInt;
}

impl Coeff for i128 {
    fn zero() -> Self {
        0
    }
    fn one() -> Self {
        1
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    #[inline]
    fn add_assign_checked(&mut self, other: &Self) -> bool {
        match self.checked_add(*other) {
            Some(v) => {
                *self = v;
                true
            }
            None => false,
        }
    }
    #[inline]
    fn sub_assign_checked(&mut self, other: &Self) -> bool {
        match self.checked_sub(*other) {
            Some(v) => {
                *self = v;
                true
            }
            None => false,
        }
    }
    fn to_bigint(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl Coeff for I256 {
    fn zero() -> Self {
        I256::ZERO
    }
    fn one() -> Self {
        I256::ONE
    }
    fn is_zero(&self) -> bool {
        *self == I256::ZERO
    }
    #[inline]
    fn add_assign_checked(&mut self, other: &Self) -> bool {
        match self.checked_add(*other) {
            Some(v) => {
                *self = v;
                true
            }
            None => false,
        }
    }
    #[inline]
    fn sub_assign_checked(&mut self, other: &Self) -> bool {
        match self.checked_sub(*other) {
            Some(v) => {
                *self = v;
                true
            }
            None => false,
        }
    }
    fn to_bigint(&self) -> BigInt {
        BigInt::from_signed_bytes_le(&self.to_le_bytes())
    }
}

impl Coeff for BigInt {
    fn zero() -> Self {
        <BigInt as Zero>::zero()
    }
    fn one() -> Self {
        BigInt::from(1)
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add_assign_checked(&mut self, other: &Self) -> bool {
        *self += other;
        true
    }
    fn sub_assign_checked(&mut self, other: &Self) -> bool {
        *self -= other;
        true
    }
    fn to_bigint(&self) -> BigInt {
        self.clone()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Overflow;

/// One step of a product expansion.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Op {
    /// Multiply by `1 / (1 - z^zexp q^step)`.
    DivGeometric { zexp: i64, step: usize },
    /// Multiply by `(q; q)_inf`, expanded by the pentagonal number theorem.
    MulEuler,
}

#[derive(Clone, Debug)]
pub struct Grid<T> {
    order: usize,
    slope: usize,
    rows: Vec<Vec<T>>,
}

impl<T: Coeff> Grid<T> {
    /// The constant series 1 truncated at `q^order`.
    pub fn one(order: usize, slope: usize) -> Self {
        let mut g = Self::zeros(order, slope);
        g.rows[0][0] = T::one();
        g
    }

    pub fn zeros(order: usize, slope: usize) -> Self {
        let rows = (0..=order).map(|i| vec![T::zero(); 2 * slope * i + 1]).collect();
        Grid { order, slope, rows }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    fn radius(&self, i: usize) -> i64 {
        (self.slope * i) as i64
    }

    pub fn truncate(&mut self, order: usize) {
        if order < self.order {
            self.rows.truncate(order + 1);
            self.order = order;
        }
    }

    pub fn apply(&mut self, op: Op) -> Result<(), Overflow> {
        match op {
            Op::DivGeometric { zexp, step } => self.div_geometric(zexp, step),
            Op::MulEuler => self.mul_euler(),
        }
    }

    /// `g_i = f_i + z^zexp g_{i - step}`, ascending in `i`.
    pub fn div_geometric(&mut self, zexp: i64, step: usize) -> Result<(), Overflow> {
        assert!(step >= 1);
        assert!(zexp.unsigned_abs() as usize <= self.slope * step, "exponent leaves the band");
        for i in step..=self.order {
            let (head, tail) = self.rows.split_at_mut(i);
            let src = &head[i - step];
            let dst = &mut tail[0];
            let rs = (self.slope * (i - step)) as i64;
            let rd = (self.slope * i) as i64;
            // dst[x + rd] += src[x - zexp + rs] for x - zexp in [-rs, rs]
            let base = (rd + zexp - rs) as usize;
            for (d, s) in dst[base..base + src.len()].iter_mut().zip(src.iter()) {
                if !s.is_zero() && !d.add_assign_checked(s) {
                    return Err(Overflow);
                }
            }
        }
        Ok(())
    }

    /// Multiply by `sum_k (-1)^k q^{k(3k-1)/2}`, descending in `i` so that
    /// every read sees the old row.
    pub fn mul_euler(&mut self) -> Result<(), Overflow> {
        let penta = pentagonal_terms(self.order);
        for i in (1..=self.order).rev() {
            let rd = self.radius(i);
            let (head, tail) = self.rows.split_at_mut(i);
            let dst = &mut tail[0];
            for &(p, negative) in penta.iter().filter(|(p, _)| *p >= 1 && *p <= i) {
                let src = &head[i - p];
                let rs = (self.slope * (i - p)) as i64;
                let base = (rd - rs) as usize;
                for (d, s) in dst[base..base + src.len()].iter_mut().zip(src.iter()) {
                    if s.is_zero() {
                        continue;
                    }
                    let ok = if negative { d.sub_assign_checked(s) } else { d.add_assign_checked(s) };
                    if !ok {
                        return Err(Overflow);
                    }
                }
            }
        }
        Ok(())
    }

    /// `self += q^shift * other`, both with the same slope.
    pub fn add_shifted(&mut self, other: &Grid<T>, shift: usize) -> Result<(), Overflow> {
        assert_eq!(self.slope, other.slope);
        for (j, src) in other.rows.iter().enumerate() {
            let i = j + shift;
            if i > self.order {
                break;
            }
            let base = (self.radius(i) - other.radius(j)) as usize;
            for (d, s) in self.rows[i][base..base + src.len()].iter_mut().zip(src.iter()) {
                if !s.is_zero() && !d.add_assign_checked(s) {
                    return Err(Overflow);
                }
            }
        }
        Ok(())
    }

    /// Nonzero span of row `i`, trimmed of zero ends.
    pub fn row_trimmed(&self, i: usize) -> (i64, &[T]) {
        let row = &self.rows[i];
        let Some(first) = row.iter().position(|c| !c.is_zero()) else {
            return (0, &row[0..0]);
        };
        let last = row.iter().rposition(|c| !c.is_zero()).unwrap();
        (first as i64 - self.radius(i), &row[first..=last])
    }

    pub fn row_poly(&self, i: usize) -> LaurentPoly {
        let (lo, c) = self.row_trimmed(i);
        LaurentPoly::from_coeffs(lo, c.iter().map(Coeff::to_bigint).collect())
    }

    pub fn row_is_unimodal(&self, i: usize) -> bool {
        is_unimodal_seq(self.row_trimmed(i).1)
    }
}

/// `(p, negative)` for the generalized pentagonal exponents `p <= order`.
pub fn pentagonal_terms(order: usize) -> Vec<(usize, bool)> {
    let mut out = vec![(0, false)];
    for k in 1usize.. {
        let p1 = k * (3 * k - 1) / 2;
        if p1 > order {
            break;
        }
        out.push((p1, k % 2 == 1));
        let p2 = k * (3 * k + 1) / 2;
        if p2 <= order {
            out.push((p2, k % 2 == 1));
        }
    }
    out
}

/// A grid at whichever precision sufficed.
#[derive(Clone, Debug)]
pub enum AnyGrid {
    Small(Grid<i128>),
    Wide(Grid<I256>),
    Big(Grid<BigInt>),
}

macro_rules! dispatch {
    ($self:expr, $g:ident => $body:expr) => {
        match $self {
            AnyGrid::Small($g) => $body,
            AnyGrid::Wide($g) => $body,
            AnyGrid::Big($g) => $body,
        }
    };
}

impl AnyGrid {
    pub fn order(&self) -> usize {
        dispatch!(self, g => g.order())
    }

    pub fn row_poly(&self, i: usize) -> LaurentPoly {
        dispatch!(self, g => g.row_poly(i))
    }

    pub fn row_is_unimodal(&self, i: usize) -> bool {
        dispatch!(self, g => g.row_is_unimodal(i))
    }

    /// Width used, for diagnostics.
    pub fn precision(&self) -> &'static str {
        match self {
            AnyGrid::Small(_) => "i128",
            AnyGrid::Wide(_) => "i256",
            AnyGrid::Big(_) => "bigint",
        }
    }
}

/// Something that can expand itself at any coefficient width.
pub trait GridBuilder {
    fn build<T: Coeff>(&self) -> Result<Grid<T>, Overflow>;
}

/// Runs `b` at the narrowest width that does not overflow.
pub fn build_any<B: GridBuilder>(b: &B) -> AnyGrid {
    if let Ok(g) = b.build::<i128>() {
        return AnyGrid::Small(g);
    }
    if let Ok(g) = b.build::<I256>() {
        return AnyGrid::Wide(g);
    }
    AnyGrid::Big(b.build::<BigInt>().expect("arbitrary precision cannot overflow"))
}

/// A plain sequence of [`Op`]s applied to the series 1.
#[derive(Clone, Debug)]
pub struct ProductPlan {
    pub order: usize,
    pub slope: usize,
    pub ops: Vec<Op>,
}

impl GridBuilder for ProductPlan {
    fn build<T: Coeff>(&self) -> Result<Grid<T>, Overflow> {
        let mut g = Grid::one(self.order, self.slope);
        for &op in &self.ops {
            g.apply(op)?;
        }
        Ok(g)
    }
}
