//! Truncated formal power series over an exact coefficient ring.
//!
//! A [`TruncSeries`] stores coefficients `c_0..c_N` exactly; everything above
//! the order `N` is unknown. Binary operations carry the minimum order of the
//! operands. Multiplication is the Cauchy product truncated at that order.
//!
//! The module also provides the coefficientwise `c_n -> c_n / n!` transform
//! between ordinary and exponential generating functions, generalized
//! hypergeometric truncations with series arguments, and the handful of
//! trigonometric/exponential argument series the identity checks need.

use thiserror::Error;

use crate::ring::{factorial, pochhammer, rat, rat_int, Rat, Ring};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FpsError {
    #[error("constant term is not invertible")]
    NonInvertibleConstantTerm,
    #[error("composition or exponential argument has nonzero constant term")]
    NonzeroConstantTermInComposition,
    #[error("denominator parameter {0} hits a pole within the truncation depth")]
    DenominatorParameterPole(String),
}

/// Formal power series truncated at a fixed order (inclusive).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncSeries<R: Ring> {
    coeffs: Vec<R>,
}

impl<R: Ring> TruncSeries<R> {
    /// Builds a series from `c_0..c_N`; the order is `len - 1`.
    pub fn from_coeffs(coeffs: Vec<R>) -> Self {
        assert!(!coeffs.is_empty(), "series needs at least the constant term");
        TruncSeries { coeffs }
    }

    pub fn constant(value: R, order: usize) -> Self {
        let zero = value.zero_like();
        let mut coeffs = vec![zero; order + 1];
        coeffs[0] = value;
        TruncSeries { coeffs }
    }

    pub fn zero(proto: &R, order: usize) -> Self {
        TruncSeries {
            coeffs: vec![proto.zero_like(); order + 1],
        }
    }

    pub fn one(proto: &R, order: usize) -> Self {
        Self::constant(proto.one_like(), order)
    }

    /// The series `t`.
    pub fn var(proto: &R, order: usize) -> Self {
        let mut s = Self::zero(proto, order);
        if order >= 1 {
            s.coeffs[1] = proto.one_like();
        }
        s
    }

    /// Geometric series `1/(1 - r t) = sum r^n t^n`.
    pub fn geometric(ratio: &R, order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut acc = ratio.one_like();
        coeffs.push(acc.clone());
        for _ in 0..order {
            acc = acc.mul_ref(ratio);
            coeffs.push(acc.clone());
        }
        TruncSeries { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, n: usize) -> R {
        if n < self.coeffs.len() {
            self.coeffs[n].clone()
        } else {
            self.coeffs[0].zero_like()
        }
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Ring::is_zero)
    }

    fn proto(&self) -> &R {
        &self.coeffs[0]
    }

    pub fn truncate(&self, order: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.truncate(order + 1);
        while coeffs.len() < order + 1 {
            coeffs.push(self.proto().zero_like());
        }
        TruncSeries { coeffs }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let order = self.order().min(rhs.order());
        let coeffs = (0..=order)
            .map(|n| self.coeffs[n].add_ref(&rhs.coeffs[n]))
            .collect();
        TruncSeries { coeffs }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let order = self.order().min(rhs.order());
        let coeffs = (0..=order)
            .map(|n| self.coeffs[n].sub_ref(&rhs.coeffs[n]))
            .collect();
        TruncSeries { coeffs }
    }

    pub fn neg(&self) -> Self {
        TruncSeries {
            coeffs: self.coeffs.iter().map(Ring::neg_ref).collect(),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let order = self.order().min(rhs.order());
        let zero = self.proto().zero_like();
        let mut coeffs = vec![zero; order + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(order + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate().take(order + 1 - i) {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] = coeffs[i + j].add_ref(&a.mul_ref(b));
            }
        }
        TruncSeries { coeffs }
    }

    pub fn scale(&self, c: &R) -> Self {
        TruncSeries {
            coeffs: self.coeffs.iter().map(|a| a.mul_ref(c)).collect(),
        }
    }

    pub fn scale_rat(&self, c: &Rat) -> Self {
        let c = self.proto().from_rat_like(c);
        self.scale(&c)
    }

    /// Multiplies by `t^k`, keeping the order.
    pub fn shift_up(&self, k: usize) -> Self {
        let order = self.order();
        let zero = self.proto().zero_like();
        let mut coeffs = vec![zero; order + 1];
        for n in k..=order {
            coeffs[n] = self.coeffs[n - k].clone();
        }
        TruncSeries { coeffs }
    }

    /// Divides by `t^k`; the k lowest coefficients must vanish. The order
    /// drops by `k`.
    pub fn shift_down(&self, k: usize) -> Self {
        assert!(
            self.coeffs.iter().take(k).all(Ring::is_zero),
            "shift_down would drop nonzero coefficients"
        );
        assert!(self.order() >= k);
        TruncSeries {
            coeffs: self.coeffs[k..].to_vec(),
        }
    }

    /// Multiplicative inverse; the constant term must be a unit.
    pub fn reciprocal(&self) -> Result<Self, FpsError> {
        let c0_inv = self.coeffs[0]
            .inverse()
            .ok_or(FpsError::NonInvertibleConstantTerm)?;
        let order = self.order();
        let mut inv = Vec::with_capacity(order + 1);
        inv.push(c0_inv.clone());
        for n in 1..=order {
            // g_n = -c0^{-1} * sum_{k=1..n} f_k g_{n-k}
            let mut acc = self.proto().zero_like();
            for k in 1..=n {
                if self.coeffs[k].is_zero() {
                    continue;
                }
                acc = acc.add_ref(&self.coeffs[k].mul_ref(&inv[n - k]));
            }
            inv.push(acc.mul_ref(&c0_inv).neg_ref());
        }
        Ok(TruncSeries { coeffs: inv })
    }

    pub fn div(&self, rhs: &Self) -> Result<Self, FpsError> {
        Ok(self.mul(&rhs.reciprocal()?))
    }

    /// Substitutes `inner` (zero constant term) for the variable, by Horner
    /// evaluation over truncated powers.
    pub fn compose(&self, inner: &Self) -> Result<Self, FpsError> {
        if !inner.coeffs[0].is_zero() {
            return Err(FpsError::NonzeroConstantTermInComposition);
        }
        let order = self.order().min(inner.order());
        let inner = inner.truncate(order);
        let mut result = TruncSeries::constant(self.coeff(self.order()), order);
        for n in (0..self.order()).rev() {
            result = result.mul(&inner);
            result.coeffs[0] = result.coeffs[0].add_ref(&self.coeffs[n]);
        }
        Ok(result)
    }

    /// `exp(f) = sum f^k / k!` for `f` with zero constant term; exact over
    /// rings containing the rationals.
    pub fn exp(&self) -> Result<Self, FpsError> {
        if !self.coeffs[0].is_zero() {
            return Err(FpsError::NonzeroConstantTermInComposition);
        }
        let order = self.order();
        let mut result = TruncSeries::one(self.proto(), order);
        let mut power = TruncSeries::one(self.proto(), order);
        for k in 1..=order {
            power = power.mul(self);
            if power.is_zero() {
                break;
            }
            result = result.add(&power.scale_rat(&factorial(k).recip()));
        }
        Ok(result)
    }

    /// OGF -> EGF coefficient map: `c_n -> c_n / n!`.
    pub fn egf_transform(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(n, c)| c.mul_ref(&c.from_rat_like(&factorial(n).recip())))
            .collect();
        TruncSeries { coeffs }
    }

    /// EGF -> OGF coefficient map: `c_n -> c_n * n!`.
    pub fn inverse_egf_transform(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(n, c)| c.mul_ref(&c.from_rat_like(&factorial(n))))
            .collect();
        TruncSeries { coeffs }
    }

    /// Serializes as a JSON list of coefficient strings, constant term first.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.coeffs
                .iter()
                .map(|c| serde_json::Value::String(c.to_string()))
                .collect(),
        )
    }
}

/// Truncation of the generalized hypergeometric series
/// `sum_k [prod (num_i)_k / prod (den_j)_k] arg^k / k!`.
///
/// The argument must have zero constant term so every coefficient is a
/// finite sum; a denominator parameter that is a nonpositive integer inside
/// the needed range is reported as a pole.
pub fn hyper_series(
    num: &[Rat],
    den: &[Rat],
    arg: &TruncSeries<Rat>,
) -> Result<TruncSeries<Rat>, FpsError> {
    if !arg.coeffs[0].is_zero() {
        return Err(FpsError::NonzeroConstantTermInComposition);
    }
    let order = arg.order();
    let mut result = TruncSeries::one(&rat_int(0), order);
    let mut term = TruncSeries::one(&rat_int(0), order);
    for k in 0..order {
        // T_{k+1} = T_k * arg * prod(num_i + k) / (prod(den_j + k) * (k+1))
        let mut ratio = Rat::from_integer((k as i64 + 1).into()).recip();
        for p in num {
            ratio *= p + rat_int(k as i64);
        }
        for p in den {
            let f = p + rat_int(k as i64);
            if num_traits::Zero::is_zero(&f) {
                return Err(FpsError::DenominatorParameterPole(p.to_string()));
            }
            ratio /= f;
        }
        term = term.mul(arg).scale(&ratio);
        if term.is_zero() {
            break;
        }
        result = result.add(&term);
    }
    Ok(result)
}

/// Argument series appearing in the exponential generating function
/// identities.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TrigArg {
    /// `sin^2(t/2)`
    SinHalfSq,
    /// `2 sin(t/2)`
    TwoSinHalf,
    /// `1 - e^{-t}`
    OneMinusExpNeg,
}

pub fn trig_arg(kind: TrigArg, order: usize) -> TruncSeries<Rat> {
    match kind {
        TrigArg::SinHalfSq => {
            let s = sin_at(&rat(1, 2), order);
            s.mul(&s)
        }
        TrigArg::TwoSinHalf => sin_at(&rat(1, 2), order).scale(&rat_int(2)),
        TrigArg::OneMinusExpNeg => {
            TruncSeries::one(&rat_int(0), order).sub(&exp_at(&rat_int(-1), order))
        }
    }
}

/// `e^{alpha t}` truncated.
pub fn exp_at(alpha: &Rat, order: usize) -> TruncSeries<Rat> {
    let mut coeffs = Vec::with_capacity(order + 1);
    let mut acc = rat_int(1);
    coeffs.push(acc.clone());
    for n in 1..=order {
        acc = acc * alpha / rat_int(n as i64);
        coeffs.push(acc.clone());
    }
    TruncSeries::from_coeffs(coeffs)
}

/// `sin(c t)` truncated.
pub fn sin_at(c: &Rat, order: usize) -> TruncSeries<Rat> {
    let mut s = TruncSeries::zero(&rat_int(0), order);
    let mut k = 0usize;
    while 2 * k + 1 <= order {
        let sign = if k % 2 == 0 { rat_int(1) } else { rat_int(-1) };
        let coeff = sign * crate::ring::ring_pow(c, 2 * k + 1) / factorial(2 * k + 1);
        s.coeffs[2 * k + 1] = coeff;
        k += 1;
    }
    s
}

/// `cos(c t)` truncated.
pub fn cos_at(c: &Rat, order: usize) -> TruncSeries<Rat> {
    let mut s = TruncSeries::zero(&rat_int(0), order);
    let mut k = 0usize;
    while 2 * k <= order {
        let sign = if k % 2 == 0 { rat_int(1) } else { rat_int(-1) };
        let coeff = sign * crate::ring::ring_pow(c, 2 * k) / factorial(2 * k);
        s.coeffs[2 * k] = coeff;
        k += 1;
    }
    s
}

/// `t tan(t/2)`, the exponential generating function of the Genocchi
/// numbers.
pub fn t_tan_half(order: usize) -> TruncSeries<Rat> {
    let sin = sin_at(&rat(1, 2), order);
    let cos = cos_at(&rat(1, 2), order);
    sin.div(&cos).expect("cos has unit constant term").shift_up(1)
}

/// The rising-factorial ratio `prod (num_i)_k / prod (den_j)_k` as an exact
/// rational; panics on a vanishing denominator factor.
pub fn poch_ratio(num: &[Rat], den: &[Rat], k: usize) -> Rat {
    let mut r = rat_int(1);
    for p in num {
        r *= pochhammer(p, k);
    }
    for p in den {
        let d = pochhammer(p, k);
        assert!(!num_traits::Zero::is_zero(&d), "pochhammer pole in ratio");
        r /= d;
    }
    r
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rat {
        rat(n, d)
    }

    #[test]
    fn geometric_reciprocal() {
        // 1/(1 - t) at order 3
        let one_minus_t =
            TruncSeries::from_coeffs(vec![rat_int(1), rat_int(-1), rat_int(0), rat_int(0)]);
        let inv = one_minus_t.reciprocal().unwrap();
        assert_eq!(inv.coeffs(), &[rat_int(1), rat_int(1), rat_int(1), rat_int(1)]);
        assert_eq!(inv, TruncSeries::geometric(&rat_int(1), 3));
    }

    #[test]
    fn exp_of_t() {
        let t = TruncSeries::var(&rat_int(0), 3);
        let e = t.exp().unwrap();
        assert_eq!(e.coeffs(), &[rat_int(1), rat_int(1), q(1, 2), q(1, 6)]);
    }

    #[test]
    fn compose_geometric_with_2t() {
        // 1/(1-s) at s = 2t, order 2 -> 1 + 2t + 4t^2
        let outer = TruncSeries::geometric(&rat_int(1), 2);
        let inner = TruncSeries::var(&rat_int(0), 2).scale(&rat_int(2));
        let c = outer.compose(&inner).unwrap();
        assert_eq!(c.coeffs(), &[rat_int(1), rat_int(2), rat_int(4)]);
    }

    #[test]
    fn reciprocal_rejects_zero_constant() {
        let t = TruncSeries::<Rat>::var(&rat_int(0), 2);
        assert_eq!(t.reciprocal(), Err(FpsError::NonInvertibleConstantTerm));
    }

    #[test]
    fn compose_rejects_unit_constant() {
        let outer = TruncSeries::geometric(&rat_int(1), 2);
        let inner = TruncSeries::one(&rat_int(0), 2);
        assert_eq!(
            outer.compose(&inner),
            Err(FpsError::NonzeroConstantTermInComposition)
        );
    }

    #[test]
    fn egf_transform_geometric_is_exp() {
        let geo = TruncSeries::geometric(&rat_int(1), 5);
        assert_eq!(geo.egf_transform(), exp_at(&rat_int(1), 5));
    }

    #[test]
    fn egf_transform_shifted_geometric() {
        // t/(1-t) maps to e^t - 1
        let geo = TruncSeries::geometric(&rat_int(1), 6).shift_up(1);
        let expected = exp_at(&rat_int(1), 6).sub(&TruncSeries::one(&rat_int(0), 6));
        assert_eq!(geo.egf_transform(), expected);
    }

    #[test]
    fn egf_transform_even_product() {
        // t^2/(1-t^2) maps to (2 sinh(t/2))^2 / 2! = (e^t - 2 + e^{-t})/2
        let order = 4;
        let geo_t2 = TruncSeries::from_coeffs(vec![
            rat_int(0),
            rat_int(0),
            rat_int(1),
            rat_int(0),
            rat_int(1),
        ]);
        let expected = exp_at(&rat_int(1), order)
            .add(&exp_at(&rat_int(-1), order))
            .sub(&TruncSeries::constant(rat_int(2), order))
            .scale(&q(1, 2));
        assert_eq!(geo_t2.egf_transform(), expected);
    }

    #[test]
    fn gauss_series_log_coefficients() {
        // 2F1(1,1;2;t) = sum t^n/(n+1)
        let t = TruncSeries::var(&rat_int(0), 6);
        let h = hyper_series(&[rat_int(1), rat_int(1)], &[rat_int(2)], &t).unwrap();
        for n in 0..=6 {
            assert_eq!(h.coeff(n), q(1, n as i64 + 1));
        }
    }

    #[test]
    fn hyper_zero_argument() {
        let z = TruncSeries::zero(&rat_int(0), 5);
        let h = hyper_series(
            &[q(1, 3), q(1, 5), q(1, 7)],
            &[q(31, 21), q(1, 2)],
            &z,
        )
        .unwrap();
        assert_eq!(h, TruncSeries::one(&rat_int(0), 5));
    }

    #[test]
    fn hyper_detects_denominator_pole() {
        let t = TruncSeries::var(&rat_int(0), 5);
        let err = hyper_series(&[rat_int(1)], &[rat_int(-2)], &t).unwrap_err();
        assert!(matches!(err, FpsError::DenominatorParameterPole(_)));
    }

    #[test]
    fn cos_ratio_special_case() {
        // cos(a t/2)/cos(t/2) = 2F1((1-a)/2, (1+a)/2; 1/2; sin^2(t/2)) at a = 1/3
        let order = 8;
        let a = q(1, 3);
        let lhs = cos_at(&(a.clone() / rat_int(2)), order)
            .div(&cos_at(&q(1, 2), order))
            .unwrap();
        let rhs = hyper_series(
            &[
                (rat_int(1) - a.clone()) / rat_int(2),
                (rat_int(1) + a) / rat_int(2),
            ],
            &[q(1, 2)],
            &trig_arg(TrigArg::SinHalfSq, order),
        )
        .unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn trig_arg_values() {
        let s = trig_arg(TrigArg::SinHalfSq, 4);
        assert_eq!(
            s.coeffs(),
            &[rat_int(0), rat_int(0), q(1, 4), rat_int(0), q(-1, 48)]
        );
        let s = trig_arg(TrigArg::TwoSinHalf, 3);
        assert_eq!(s.coeffs(), &[rat_int(0), rat_int(1), rat_int(0), q(-1, 24)]);
        let s = trig_arg(TrigArg::OneMinusExpNeg, 3);
        assert_eq!(s.coeffs(), &[rat_int(0), rat_int(1), q(-1, 2), q(1, 6)]);
    }

    #[test]
    fn exp_inverse_pair() {
        let f = TruncSeries::from_coeffs(vec![rat_int(0), q(2, 3), q(-1, 4), rat_int(5), q(1, 7)]);
        let product = f.exp().unwrap().mul(&f.neg().exp().unwrap());
        assert_eq!(product, TruncSeries::one(&rat_int(0), 4));
    }
}
