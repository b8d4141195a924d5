//! Exact Laurent polynomials in one variable `z` with big-integer coefficients.
//!
//! A [`LaurentPoly`] is stored densely as a lowest exponent plus the run of
//! coefficients up to the highest nonzero term. Interior zeros are kept since
//! the structural predicates (unimodality in particular) read the whole span.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::Error;

#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(into = "LaurentJson", try_from = "LaurentJson")]
pub struct LaurentPoly {
    lo: i64,
    coeffs: Vec<BigInt>,
}

impl LaurentPoly {
    /// The canonical zero polynomial (`lo = 0`, no coefficients).
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(BigInt::one(), 0)
    }

    pub fn monomial(c: impl Into<BigInt>, exp: i64) -> Self {
        Self::from_coeffs(exp, vec![c.into()])
    }

    /// Builds `sum_i coeffs[i] * z^(lo + i)` and normalizes.
    pub fn from_coeffs(lo: i64, coeffs: Vec<BigInt>) -> Self {
        let mut p = LaurentPoly { lo, coeffs };
        p.normalize();
        p
    }

    pub fn from_i64s(lo: i64, coeffs: &[i64]) -> Self {
        Self::from_coeffs(lo, coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    fn normalize(&mut self) {
        let trailing = self.coeffs.iter().rev().take_while(|c| c.is_zero()).count();
        self.coeffs.truncate(self.coeffs.len() - trailing);
        let leading = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if leading == self.coeffs.len() {
            self.coeffs.clear();
            self.lo = 0;
            return;
        }
        if leading > 0 {
            self.coeffs.drain(..leading);
            self.lo += leading as i64;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Lowest exponent with a nonzero coefficient (0 for the zero polynomial).
    pub fn lo(&self) -> i64 {
        self.lo
    }

    /// Highest exponent with a nonzero coefficient; `None` for zero.
    pub fn hi(&self) -> Option<i64> {
        if self.is_zero() {
            None
        } else {
            Some(self.lo + self.coeffs.len() as i64 - 1)
        }
    }

    /// Dense coefficients over `lo..=hi`.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// `[z^m] f`; zero outside the span.
    pub fn coefficient(&self, m: i64) -> BigInt {
        let idx = m - self.lo;
        if idx < 0 || idx >= self.coeffs.len() as i64 {
            BigInt::zero()
        } else {
            self.coeffs[idx as usize].clone()
        }
    }

    /// Iterator over `(exponent, coefficient)` for nonzero terms.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (self.lo + i as i64, c))
    }

    /// Multiplication by `z^k`.
    pub fn shift(&self, k: i64) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        LaurentPoly { lo: self.lo + k, coeffs: self.coeffs.clone() }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::from_coeffs(self.lo, self.coeffs.iter().map(|x| x * c).collect())
    }

    /// `f(z^t)`: exponent `m` moves to `m * t`.
    pub fn substitute_power(&self, t: u32) -> Self {
        assert!(t >= 1, "substitution power must be positive");
        if self.is_zero() || t == 1 {
            return self.clone();
        }
        let t = i64::from(t);
        let mut coeffs = vec![BigInt::zero(); (self.coeffs.len() - 1) * t as usize + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * t as usize] = c.clone();
        }
        Self::from_coeffs(self.lo * t, coeffs)
    }

    /// `f(-z)`.
    pub fn negate_variable(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| if (self.lo + i as i64).is_odd() { -c } else { c.clone() })
            .collect();
        Self::from_coeffs(self.lo, coeffs)
    }

    /// `f(1/z)`.
    pub fn reflect(&self) -> Self {
        match self.hi() {
            None => Self::zero(),
            Some(hi) => Self::from_coeffs(-hi, self.coeffs.iter().rev().cloned().collect()),
        }
    }

    /// Value at `z = 1`.
    pub fn eval_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    pub fn is_symmetric(&self) -> bool {
        match self.hi() {
            None => true,
            Some(hi) => hi == -self.lo && self.coeffs.iter().eq(self.coeffs.iter().rev()),
        }
    }

    pub fn is_unimodal(&self) -> bool {
        is_unimodal_seq(&self.coeffs)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// Exponents strictly inside the span whose coefficient is zero.
    pub fn interior_zeros(&self) -> Vec<i64> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| c.is_zero())
            .map(|(i, _)| self.lo + i as i64)
            .collect()
    }

    /// Division with remainder in `Z[z, 1/z]`: returns `(q, r)` with
    /// `self = q * divisor + r`, where `r` is the remainder of ordinary
    /// polynomial division after clearing the lowest powers of `z` from both
    /// sides. `r` is zero exactly when `divisor` divides `self`.
    ///
    /// Fails if a step would need a non-integral coefficient.
    pub fn div_rem(&self, divisor: &LaurentPoly) -> Result<(LaurentPoly, LaurentPoly), Error> {
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_zero() {
            return Ok((Self::zero(), Self::zero()));
        }
        let d = &divisor.coeffs;
        let dlen = d.len();
        let lead = &d[dlen - 1];
        let mut rem = self.coeffs.clone();
        if rem.len() < dlen {
            return Ok((Self::zero(), self.clone()));
        }
        let qlen = rem.len() - dlen + 1;
        let mut quot = vec![BigInt::zero(); qlen];
        for qi in (0..qlen).rev() {
            let top = &rem[qi + dlen - 1];
            if top.is_zero() {
                continue;
            }
            let (c, r) = top.div_rem(lead);
            if !r.is_zero() {
                return Err(Error::NonIntegralDivision);
            }
            for (j, dj) in d.iter().enumerate() {
                rem[qi + j] -= &c * dj;
            }
            quot[qi] = c;
        }
        Ok((
            Self::from_coeffs(self.lo - divisor.lo, quot),
            Self::from_coeffs(self.lo, rem),
        ))
    }

    /// Exact quotient `self / divisor`, or [`Error::NotDivisible`].
    pub fn exact_div(&self, divisor: &LaurentPoly) -> Result<LaurentPoly, Error> {
        match self.div_rem(divisor) {
            Ok((q, r)) if r.is_zero() => Ok(q),
            Ok(_) | Err(Error::NonIntegralDivision) => Err(Error::NotDivisible),
            Err(e) => Err(e),
        }
    }

    fn add_signed(&self, other: &LaurentPoly, negate: bool) -> LaurentPoly {
        if other.is_zero() {
            return self.clone();
        }
        if self.is_zero() {
            return if negate { -other.clone() } else { other.clone() };
        }
        let lo = self.lo.min(other.lo);
        let hi = self.hi().unwrap().max(other.hi().unwrap());
        let mut coeffs = vec![BigInt::zero(); (hi - lo + 1) as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[(self.lo - lo) as usize + i] += c;
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            let slot = &mut coeffs[(other.lo - lo) as usize + i];
            if negate {
                *slot -= c;
            } else {
                *slot += c;
            }
        }
        Self::from_coeffs(lo, coeffs)
    }
}

/// True iff the sequence weakly rises to some pivot and weakly falls after it.
/// Empty, constant and monotone sequences all qualify.
pub fn is_unimodal_seq<T: PartialOrd>(c: &[T]) -> bool {
    let mut i = 1;
    while i < c.len() && c[i - 1] <= c[i] {
        i += 1;
    }
    while i < c.len() && c[i - 1] >= c[i] {
        i += 1;
    }
    i >= c.len()
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.add_signed(rhs, false)
    }
}

impl Add for LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: LaurentPoly) -> LaurentPoly {
        self.add_signed(&rhs, false)
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.add_signed(rhs, true)
    }
}

impl Sub for LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: LaurentPoly) -> LaurentPoly {
        self.add_signed(&rhs, true)
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(mut self) -> LaurentPoly {
        for c in &mut self.coeffs {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        LaurentPoly::from_coeffs(self.lo + rhs.lo, coeffs)
    }
}

impl Mul for LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: LaurentPoly) -> LaurentPoly {
        &self * &rhs
    }
}

impl fmt::Display for LaurentPoly {
    /// `c_lo*z^lo + ... + c_hi*z^hi`, zero terms omitted, constant term bare.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (e, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mag = c.abs();
            if e == 0 {
                write!(f, "{mag}")?;
            } else {
                write!(f, "{mag}*z^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

impl FromStr for LaurentPoly {
    type Err = Error;

    /// Accepts the display form and shorthand such as `z^-1 + 2 - z`,
    /// `3*z^2`, `-z^-4`. Repeated exponents are summed.
    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = |msg: &str| Error::Parse(format!("{msg} in {s:?}"));
        let words: Vec<&str> = s.split_whitespace().collect();
        let is_term_char = |c: char| c.is_ascii_alphanumeric() || c == '^' || c == '*';
        for pair in words.windows(2) {
            let last = pair[0].chars().next_back().unwrap();
            let first = pair[1].chars().next().unwrap();
            if is_term_char(last) && is_term_char(first) {
                return Err(bad("missing operator between terms"));
            }
        }
        let src: Vec<char> = words.concat().chars().collect();
        if src.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut acc = LaurentPoly::zero();
        let mut i = 0;
        while i < src.len() {
            let mut negative = false;
            if src[i] == '+' || src[i] == '-' {
                negative = src[i] == '-';
                i += 1;
            } else if i > 0 {
                return Err(bad("expected sign between terms"));
            }
            let start = i;
            while i < src.len() && src[i].is_ascii_digit() {
                i += 1;
            }
            let coef: BigInt = if i > start {
                src[start..i].iter().collect::<String>().parse().map_err(|_| bad("bad coefficient"))?
            } else {
                BigInt::one()
            };
            let mut exp = 0i64;
            let had_digits = i > start;
            if i < src.len() && src[i] == '*' {
                if !had_digits {
                    return Err(bad("dangling '*'"));
                }
                i += 1;
                if i >= src.len() || src[i] != 'z' {
                    return Err(bad("expected 'z' after '*'"));
                }
            }
            if i < src.len() && src[i] == 'z' {
                i += 1;
                exp = 1;
                if i < src.len() && src[i] == '^' {
                    i += 1;
                    let es = i;
                    if i < src.len() && (src[i] == '-' || src[i] == '+') {
                        i += 1;
                    }
                    while i < src.len() && src[i].is_ascii_digit() {
                        i += 1;
                    }
                    exp = src[es..i].iter().collect::<String>().parse().map_err(|_| bad("bad exponent"))?;
                }
            } else if !had_digits {
                return Err(bad("expected a term"));
            }
            let coef = if negative { -coef } else { coef };
            acc = &acc + &LaurentPoly::monomial(coef, exp);
        }
        Ok(acc)
    }
}

impl PartialOrd for LaurentPoly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for LaurentPoly {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.lo, &self.coeffs).cmp(&(other.lo, &other.coeffs))
    }
}

/// JSON shape `{"lo": int, "coeffs": [decimal strings]}`.
#[derive(Serialize, Deserialize)]
struct LaurentJson {
    lo: i64,
    coeffs: Vec<String>,
}

impl From<LaurentPoly> for LaurentJson {
    fn from(p: LaurentPoly) -> Self {
        LaurentJson { lo: p.lo, coeffs: p.coeffs.iter().map(|c| c.to_string()).collect() }
    }
}

impl TryFrom<LaurentJson> for LaurentPoly {
    type Error = Error;
    fn try_from(j: LaurentJson) -> Result<Self, Error> {
        let coeffs = j
            .coeffs
            .iter()
            .map(|s| s.parse::<BigInt>().map_err(|_| Error::Parse(format!("bad coefficient {s:?}"))))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(LaurentPoly::from_coeffs(j.lo, coeffs))
    }
}
