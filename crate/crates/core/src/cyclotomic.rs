//! Cyclotomic divisors `Phi_l(z)`, `Phi_l(z^2)`, `Phi_l(-z)` and the
//! residue-class ("hat-sum") criteria that decide divisibility by them.
//!
//! Every divisibility question has two independent answers here: the hat-sum
//! criterion, which is linear in the span and used in the hot loops, and
//! exact long division through [`LaurentPoly::div_rem`]. Tests hold the two
//! against each other.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::laurent::LaurentPoly;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    /// `Phi_l(z)`
    Standard,
    /// `Phi_l(z^2)`
    Squared,
    /// `Phi_l(-z)`
    Negated,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Modulus {
    ell: u64,
    variant: Variant,
}

impl Modulus {
    pub fn new(ell: u64, variant: Variant) -> Result<Self> {
        check_odd_prime(ell)?;
        Ok(Modulus { ell, variant })
    }

    pub fn standard(ell: u64) -> Result<Self> {
        Self::new(ell, Variant::Standard)
    }

    pub fn ell(&self) -> u64 {
        self.ell
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub fn check_odd_prime(ell: u64) -> Result<()> {
    if ell % 2 == 1 && is_prime(ell) {
        Ok(())
    } else {
        Err(Error::NotOddPrime(ell))
    }
}

/// The divisor polynomial named by `m`.
pub fn phi(m: Modulus) -> LaurentPoly {
    let base = LaurentPoly::from_coeffs(0, vec![BigInt::one(); m.ell as usize]);
    match m.variant {
        Variant::Standard => base,
        Variant::Squared => base.substitute_power(2),
        Variant::Negated => base.negate_variable(),
    }
}

/// Sum of the coefficients of `f` over exponents `j ≡ r (mod modulus)`.
pub fn hat_sum(f: &LaurentPoly, r: i64, modulus: u64) -> BigInt {
    assert!(modulus >= 1, "modulus must be positive");
    let m = modulus as i64;
    let target = r.rem_euclid(m);
    f.terms()
        .filter(|(e, _)| e.rem_euclid(m) == target)
        .map(|(_, c)| c)
        .sum()
}

/// All hat-sums `f̂_{r,M}` for `r = 0..M` in one pass.
pub fn hat_sums(f: &LaurentPoly, modulus: u64) -> Vec<BigInt> {
    assert!(modulus >= 1, "modulus must be positive");
    let m = modulus as i64;
    let mut out = vec![BigInt::zero(); modulus as usize];
    for (e, c) in f.terms() {
        out[e.rem_euclid(m) as usize] += c;
    }
    out
}

/// `Phi_l(z) | f` iff all residue classes mod `l` carry the same coefficient sum.
pub fn divides_standard(f: &LaurentPoly, ell: u64) -> Result<bool> {
    check_odd_prime(ell)?;
    let sums = hat_sums(f, ell);
    let last = &sums[ell as usize - 1];
    Ok(sums.iter().all(|s| s == last))
}

/// `Phi_l(-z) | f` via the signed criterion on residues mod `2l`:
/// `(-1)^r (f̂_{r,2l} - f̂_{r+l,2l}) = f̂_{l-1,2l} - f̂_{2l-1,2l}` for `0 <= r <= l-2`.
pub fn divides_negated(f: &LaurentPoly, ell: u64) -> Result<bool> {
    check_odd_prime(ell)?;
    let l = ell as usize;
    let sums = hat_sums(f, 2 * ell);
    let rhs = &sums[l - 1] - &sums[2 * l - 1];
    Ok((0..l - 1).all(|r| {
        let diff = &sums[r] - &sums[r + l];
        let signed = if r % 2 == 0 { diff } else { -diff };
        signed == rhs
    }))
}

/// `Phi_l(z^2) | f`. Since `Phi_l(z^2) = Phi_l(z) Phi_l(-z)` with coprime
/// factors, this is the conjunction of the two hat-sum criteria.
pub fn divides_squared(f: &LaurentPoly, ell: u64) -> Result<bool> {
    Ok(divides_standard(f, ell)? && divides_negated(f, ell)?)
}

/// Hat-sum decision for any variant.
pub fn divides(f: &LaurentPoly, m: Modulus) -> bool {
    match m.variant {
        Variant::Standard => divides_standard(f, m.ell),
        Variant::Negated => divides_negated(f, m.ell),
        Variant::Squared => divides_squared(f, m.ell),
    }
    .expect("modulus validated at construction")
}

/// Long-division decision for any variant.
pub fn divides_by_division(f: &LaurentPoly, m: Modulus) -> bool {
    let (_, r) = f.div_rem(&phi(m)).expect("cyclotomic divisors are monic");
    r.is_zero()
}

/// `q` with `q * g = f`, or [`Error::NotDivisible`].
pub fn exact_quotient(f: &LaurentPoly, g: &LaurentPoly) -> Result<LaurentPoly> {
    f.exact_div(g)
}

/// Symmetric + unimodal + `Phi_l(z) | f` must give a non-negative quotient.
/// Returns `true` vacuously when a hypothesis fails.
pub fn check_positive_quotient(f: &LaurentPoly, ell: u64) -> Result<bool> {
    if !(f.is_symmetric() && f.is_unimodal() && divides_standard(f, ell)?) {
        return Ok(true);
    }
    let q = exact_quotient(f, &phi(Modulus::standard(ell)?))?;
    Ok(q.is_nonnegative())
}

/// `[z^(m-1)] f >= [z^(m+1)] f` for every `m >= 1`.
pub fn steps_down_by_two(f: &LaurentPoly) -> bool {
    let Some(hi) = f.hi() else { return true };
    (1..=hi + 1).all(|m| f.coefficient(m - 1) >= f.coefficient(m + 1))
}

/// The normalized quotient `z^(l-1) f / Phi_l(z^2)`.
pub fn normalized_squared_quotient(f: &LaurentPoly, ell: u64) -> Result<LaurentPoly> {
    let g = phi(Modulus::new(ell, Variant::Squared)?);
    Ok(exact_quotient(f, &g)?.shift(ell as i64 - 1))
}

/// Symmetric + two-step decreasing + `Phi_l(z^2) | f` must give a symmetric,
/// non-negative `z^(l-1) f / Phi_l(z^2)`. Vacuously `true` otherwise.
pub fn check_squared_quotient(f: &LaurentPoly, ell: u64) -> Result<bool> {
    if !(f.is_symmetric() && steps_down_by_two(f) && divides_squared(f, ell)?) {
        return Ok(true);
    }
    let q = normalized_squared_quotient(f, ell)?;
    Ok(q.is_symmetric() && q.is_nonnegative())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    fn rank4() -> LaurentPoly {
        LaurentPoly::from_i64s(-3, &[1, 0, 1, 1, 1, 0, 1])
    }

    fn crank4() -> LaurentPoly {
        LaurentPoly::from_i64s(-4, &[1, 0, 1, 0, 1, 0, 1, 0, 1])
    }

    #[test]
    fn divisor_polynomials() {
        assert_eq!(phi(Modulus::standard(5).unwrap()), p("1 + z + z^2 + z^3 + z^4"));
        assert_eq!(phi(Modulus::new(5, Variant::Squared).unwrap()), p("1 + z^2 + z^4 + z^6 + z^8"));
        assert_eq!(phi(Modulus::new(5, Variant::Negated).unwrap()), p("1 - z + z^2 - z^3 + z^4"));
    }

    #[test]
    fn modulus_validation() {
        assert!(Modulus::standard(9).is_err());
        assert!(Modulus::standard(2).is_err());
        assert!(Modulus::standard(1).is_err());
        assert!(Modulus::standard(11).is_ok());
        assert_eq!(divides_standard(&rank4(), 15), Err(Error::NotOddPrime(15)));
    }

    #[test]
    fn hat_sums_examples() {
        assert_eq!(hat_sum(&rank4(), 0, 5), BigInt::from(1));
        let phi5 = phi(Modulus::standard(5).unwrap());
        for r in -3..8 {
            assert_eq!(hat_sum(&phi5, r, 5), BigInt::from(1));
        }
        assert_eq!(hat_sum(&p("1 - z^5"), 0, 5), BigInt::zero());
    }

    #[test]
    fn standard_divisibility() {
        assert!(divides_standard(&rank4(), 5).unwrap());
        assert!(!divides_standard(&p("1 + z"), 5).unwrap());
        assert!(divides_standard(&crank4(), 5).unwrap());
    }

    #[test]
    fn negated_divisibility() {
        let neg = phi(Modulus::new(5, Variant::Negated).unwrap());
        assert!(divides_negated(&neg, 5).unwrap());
        assert!(!divides_negated(&LaurentPoly::one(), 5).unwrap());
        assert!(divides_negated(&(&p("1 + z") * &neg), 5).unwrap());
        assert!(divides_squared(&crank4(), 5).unwrap());
    }

    #[test]
    fn quotients() {
        let star = LaurentPoly::from_i64s(-2, &[1; 5]);
        let phi5 = phi(Modulus::standard(5).unwrap());
        assert_eq!(exact_quotient(&star, &phi5).unwrap(), p("z^-2"));
        let sq = phi(Modulus::new(5, Variant::Squared).unwrap());
        assert_eq!(exact_quotient(&crank4(), &sq).unwrap(), p("z^-4"));
        assert_eq!(exact_quotient(&p("1 + z"), &phi5), Err(Error::NotDivisible));
        assert_eq!(normalized_squared_quotient(&crank4(), 5).unwrap(), LaurentPoly::one());
    }

    #[test]
    fn positive_quotient_instances() {
        let star = LaurentPoly::from_i64s(-2, &[1; 5]);
        assert!(check_positive_quotient(&star, 5).unwrap());
        let phi7 = phi(Modulus::standard(7).unwrap());
        let f = &phi7.shift(-3) * &p("z^-1 + 1 + z");
        assert!(f.is_symmetric() && f.is_unimodal());
        assert!(check_positive_quotient(&f, 7).unwrap());
        assert!(check_positive_quotient(&p("1 + z"), 5).unwrap());
    }

    #[test]
    fn squared_quotient_instance() {
        assert!(steps_down_by_two(&crank4()));
        assert!(check_squared_quotient(&crank4(), 5).unwrap());
    }

    fn arb_poly() -> impl Strategy<Value = LaurentPoly> {
        (-12i64..12, prop::collection::vec(-4i64..5, 0..30))
            .prop_map(|(lo, c)| LaurentPoly::from_i64s(lo, &c))
    }

    /// Random multiples of the divisor, so both outcomes get exercised.
    fn arb_case(variant: Variant) -> impl Strategy<Value = (LaurentPoly, u64)> {
        (arb_poly(), prop::sample::select(vec![5u64, 7, 11]), any::<bool>()).prop_map(
            move |(f, ell, multiply)| {
                let g = phi(Modulus::new(ell, variant).unwrap());
                (if multiply { &f * &g } else { f }, ell)
            },
        )
    }

    proptest! {
        #[test]
        fn standard_criterion_matches_division((f, ell) in arb_case(Variant::Standard)) {
            let m = Modulus::standard(ell).unwrap();
            prop_assert_eq!(divides(&f, m), divides_by_division(&f, m));
        }

        #[test]
        fn negated_criterion_matches_division((f, ell) in arb_case(Variant::Negated)) {
            let m = Modulus::new(ell, Variant::Negated).unwrap();
            prop_assert_eq!(divides(&f, m), divides_by_division(&f, m));
        }

        #[test]
        fn squared_criterion_matches_division((f, ell) in arb_case(Variant::Squared)) {
            let m = Modulus::new(ell, Variant::Squared).unwrap();
            prop_assert_eq!(divides(&f, m), divides_by_division(&f, m));
        }

        #[test]
        fn quotient_roundtrip((f, ell) in arb_case(Variant::Standard)) {
            let g = phi(Modulus::standard(ell).unwrap());
            if let Ok(q) = exact_quotient(&f, &g) {
                prop_assert_eq!(&q * &g, f);
            }
        }
    }
}
