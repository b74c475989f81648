//! Coefficient rings and the shared scalar type.
//!
//! Every computation in this crate runs over an exact coefficient ring:
//! either [`Rat`] (arbitrary-precision rationals, the base field) or
//! [`crate::mpoly::MPoly`] (sparse multivariate polynomials over `Rat`).
//! The [`Ring`] trait is the small surface the series, continued-fraction
//! and moment kernels need; it is prototype-based (`zero_like`, `one_like`)
//! so that rings carrying context, like a polynomial variable set, can
//! implement it.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact scalar: an arbitrary-precision rational, always stored reduced
/// with a positive denominator.
pub type Rat = BigRational;

/// `n` as a [`Rat`].
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// `n/d` as a [`Rat`]. Panics when `d == 0`.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"p/q"` or `"p"`.
pub fn parse_rat(s: &str) -> Result<Rat, String> {
    Rat::from_str(s.trim()).map_err(|e| format!("invalid rational {s:?}: {e}"))
}

/// Formats a scalar as `"p/q"`, or `"p"` when the denominator is 1.
pub fn format_rat(r: &Rat) -> String {
    r.to_string()
}

/// Commutative ring with exact arithmetic.
///
/// `exact_div` returns `None` when the divisor is zero or does not divide
/// exactly; `inverse` returns `None` when the element is not a unit.
pub trait Ring: Clone + PartialEq + fmt::Debug + fmt::Display {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn from_i64_like(&self, n: i64) -> Self;
    fn from_rat_like(&self, r: &Rat) -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn add_ref(&self, rhs: &Self) -> Self;
    fn sub_ref(&self, rhs: &Self) -> Self;
    fn mul_ref(&self, rhs: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    fn exact_div(&self, rhs: &Self) -> Option<Self>;
    fn inverse(&self) -> Option<Self>;
}

impl Ring for Rat {
    fn zero_like(&self) -> Self {
        Rat::zero()
    }
    fn one_like(&self) -> Self {
        Rat::one()
    }
    fn from_i64_like(&self, n: i64) -> Self {
        rat_int(n)
    }
    fn from_rat_like(&self, r: &Rat) -> Self {
        r.clone()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        if Zero::is_zero(rhs) {
            None
        } else {
            Some(self / rhs)
        }
    }
    fn inverse(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
}

/// `base^exp` by repeated squaring.
pub fn ring_pow<R: Ring>(base: &R, exp: usize) -> R {
    let mut result = base.one_like();
    let mut acc = base.clone();
    let mut e = exp;
    while e > 0 {
        if e & 1 == 1 {
            result = result.mul_ref(&acc);
        }
        e >>= 1;
        if e > 0 {
            acc = acc.mul_ref(&acc);
        }
    }
    result
}

/// Rising factorial `base (base+1) ... (base+n-1)`; 1 for `n = 0`.
pub fn pochhammer<R: Ring>(base: &R, n: usize) -> R {
    let mut product = base.one_like();
    for j in 0..n {
        product = product.mul_ref(&base.add_ref(&base.from_i64_like(j as i64)));
    }
    product
}

/// q-shifted factorial `(a; q)_n = prod_{j=0}^{n-1} (1 - a q^j)`.
pub fn qpochhammer<R: Ring>(a: &R, q: &R, n: usize) -> R {
    let one = a.one_like();
    let mut product = one.clone();
    let mut aqj = a.clone();
    for _ in 0..n {
        product = product.mul_ref(&one.sub_ref(&aqj));
        aqj = aqj.mul_ref(q);
    }
    product
}

/// `n!` as a [`Rat`].
pub fn factorial(n: usize) -> Rat {
    let mut f = BigInt::one();
    for k in 2..=n {
        f *= BigInt::from(k);
    }
    Rat::from_integer(f)
}

/// Binomial coefficient with integer arguments, generalized to negative
/// upper index via the falling factorial; 0 when `k < 0` or `k > n >= 0`.
pub fn binomial(n: i64, k: i64) -> Rat {
    if k < 0 || (n >= 0 && k > n) {
        return Rat::zero();
    }
    let mut num = BigInt::one();
    for j in 0..k {
        num *= BigInt::from(n - j);
    }
    let mut den = BigInt::one();
    for j in 1..=k {
        den *= BigInt::from(j);
    }
    Rat::new(num, den)
}

/// Binomial coefficient with a ring-element upper index:
/// `(top choose k) = (top-k+1)_k / k!`.
pub fn binomial_ring<R: Ring>(top: &R, k: usize) -> R {
    let shifted = top.sub_ref(&top.from_i64_like(k as i64 - 1));
    let rising = pochhammer(&shifted, k);
    rising.mul_ref(&top.from_rat_like(&factorial(k).recip()))
}

/// True when the rational is a nonnegative integer.
pub fn is_nonneg_integer(r: &Rat) -> bool {
    r.is_integer() && !r.is_negative()
}

/// The value of an integer-valued rational as `usize`, if it fits.
pub fn rat_to_usize(r: &Rat) -> Option<usize> {
    if !r.is_integer() || r.is_negative() {
        return None;
    }
    let n = r.to_integer();
    let (_, digits) = n.to_u64_digits();
    match digits.len() {
        0 => Some(0),
        1 => usize::try_from(digits[0]).ok(),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pochhammer_empty_product_is_one() {
        assert_eq!(pochhammer(&rat(7, 3), 0), rat_int(1));
    }

    #[test]
    fn pochhammer_of_one_is_factorial() {
        assert_eq!(pochhammer(&rat_int(1), 4), rat_int(24));
        assert_eq!(factorial(4), rat_int(24));
    }

    #[test]
    fn pochhammer_half() {
        // (1/2)(3/2)(5/2) computed directly
        let direct = rat(1, 2) * rat(3, 2) * rat(5, 2);
        assert_eq!(pochhammer(&rat(1, 2), 3), direct);
        assert_eq!(direct, rat(15, 8));
    }

    #[test]
    fn qpochhammer_values() {
        assert_eq!(qpochhammer(&rat(2, 7), &rat(1, 5), 0), rat_int(1));
        assert_eq!(qpochhammer(&rat_int(1), &rat(1, 3), 2), rat_int(0));
        // (1 - 1/2)(1 - 1/6) computed directly
        let direct = (rat_int(1) - rat(1, 2)) * (rat_int(1) - rat(1, 6));
        assert_eq!(qpochhammer(&rat(1, 2), &rat(1, 3), 2), direct);
        assert_eq!(direct, rat(5, 12));
    }

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(4, 2), rat_int(6));
        assert_eq!(binomial(9, 0), rat_int(1));
        assert_eq!(binomial(-3, 0), rat_int(1));
        assert_eq!(binomial(3, 5), rat_int(0));
        assert_eq!(binomial(3, -1), rat_int(0));
        assert_eq!(binomial(-1, 2), rat_int(1));
    }

    #[test]
    fn binomial_ring_matches_integer_binomial() {
        for n in 0..8i64 {
            for k in 0..8usize {
                assert_eq!(binomial_ring(&rat_int(n), k), binomial(n, k as i64));
            }
        }
    }

    #[test]
    fn rat_round_trip_format() {
        assert_eq!(format_rat(&rat(-1, 4)), "-1/4");
        assert_eq!(format_rat(&rat_int(17)), "17");
        assert_eq!(parse_rat("-1/4").unwrap(), rat(-1, 4));
        assert_eq!(parse_rat("17").unwrap(), rat_int(17));
        assert!(parse_rat("x").is_err());
    }

    #[test]
    fn rat_to_usize_bounds() {
        assert_eq!(rat_to_usize(&rat_int(5)), Some(5));
        assert_eq!(rat_to_usize(&rat(1, 2)), None);
        assert_eq!(rat_to_usize(&rat_int(-1)), None);
        assert_eq!(rat_to_usize(&rat_int(0)), Some(0));
    }
}
