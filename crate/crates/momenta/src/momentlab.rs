//! Linear moment functionals, monic orthogonal polynomials from three-term
//! recurrences, moment shifting, and the Newton-basis expansion machinery.
//!
//! Polynomials in the distinguished variable are dense coefficient vectors
//! ([`UnivPoly`]) over the coefficient ring, so the same code serves exact
//! rational specializations and fully symbolic parameters.

use thiserror::Error;

use crate::fps::TruncSeries;
use crate::ring::{binomial, ring_pow, Rat, Ring};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum MomentError {
    #[error("polynomial degree {degree} exceeds the {available} stored moments")]
    DegreeExceedsMoments { degree: usize, available: usize },
    #[error("recurrence depth {depth} cannot produce {requested} polynomials")]
    InsufficientDepth { requested: usize, depth: usize },
}

/// Dense univariate polynomial over a coefficient ring; index = degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnivPoly<R: Ring> {
    coeffs: Vec<R>,
}

impl<R: Ring> UnivPoly<R> {
    pub fn from_coeffs(mut coeffs: Vec<R>) -> Self {
        while coeffs.len() > 1 && coeffs.last().unwrap().is_zero() {
            coeffs.pop();
        }
        assert!(!coeffs.is_empty());
        UnivPoly { coeffs }
    }

    pub fn zero(proto: &R) -> Self {
        UnivPoly {
            coeffs: vec![proto.zero_like()],
        }
    }

    pub fn constant(value: R) -> Self {
        UnivPoly { coeffs: vec![value] }
    }

    pub fn one(proto: &R) -> Self {
        Self::constant(proto.one_like())
    }

    /// The monomial `x`.
    pub fn x(proto: &R) -> Self {
        UnivPoly {
            coeffs: vec![proto.zero_like(), proto.one_like()],
        }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Ring::is_zero)
    }

    pub fn coeff(&self, k: usize) -> R {
        if k < self.coeffs.len() {
            self.coeffs[k].clone()
        } else {
            self.coeffs[0].zero_like()
        }
    }

    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    fn proto(&self) -> &R {
        &self.coeffs[0]
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k).add_ref(&rhs.coeff(k))).collect();
        Self::from_coeffs(coeffs)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|k| self.coeff(k).sub_ref(&rhs.coeff(k))).collect();
        Self::from_coeffs(coeffs)
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        let zero = self.proto().zero_like();
        let mut coeffs = vec![zero; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].add_ref(&a.mul_ref(b));
            }
        }
        Self::from_coeffs(coeffs)
    }

    pub fn scale(&self, c: &R) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a.mul_ref(c)).collect())
    }

    /// `(x - shift) * self`.
    pub fn mul_x_minus(&self, shift: &R) -> Self {
        let mut coeffs = vec![self.proto().zero_like(); self.coeffs.len() + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            coeffs[i + 1] = coeffs[i + 1].add_ref(a);
            coeffs[i] = coeffs[i].sub_ref(&a.mul_ref(shift));
        }
        Self::from_coeffs(coeffs)
    }

    pub fn eval(&self, point: &R) -> R {
        let mut acc = self.coeffs.last().unwrap().clone();
        for c in self.coeffs.iter().rev().skip(1) {
            acc = acc.mul_ref(point).add_ref(c);
        }
        acc
    }

    /// Synthetic division by the monic linear factor `x + node`; returns
    /// `(quotient, remainder)`.
    pub fn div_monic_linear(&self, node: &R) -> (Self, R) {
        if self.coeffs.len() == 1 {
            return (Self::zero(self.proto()), self.coeffs[0].clone());
        }
        let mut quot = vec![self.proto().zero_like(); self.coeffs.len() - 1];
        let mut carry = self.coeffs.last().unwrap().clone();
        for k in (0..self.coeffs.len() - 1).rev() {
            quot[k] = carry.clone();
            carry = self.coeffs[k].sub_ref(&carry.mul_ref(node));
        }
        (Self::from_coeffs(quot), carry)
    }

    /// Substitutes `x -> x + d`.
    pub fn shift_argument(&self, d: &R) -> Self {
        let mut result = Self::constant(self.coeffs.last().unwrap().clone());
        let shift = d.neg_ref();
        for c in self.coeffs.iter().rev().skip(1) {
            result = result.mul_x_minus(&shift);
            result.coeffs[0] = result.coeffs[0].add_ref(c);
        }
        result
    }
}

/// Finite moment sequence acting linearly on polynomials in one
/// distinguished variable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MomentFunctional<R: Ring> {
    moments: Vec<R>,
    variable: String,
}

impl<R: Ring> MomentFunctional<R> {
    pub fn new(moments: Vec<R>, variable: impl Into<String>) -> Self {
        assert!(!moments.is_empty());
        MomentFunctional {
            moments,
            variable: variable.into(),
        }
    }

    pub fn moments(&self) -> &[R] {
        &self.moments
    }

    pub fn moment(&self, n: usize) -> R {
        self.moments[n].clone()
    }

    pub fn variable(&self) -> &str {
        &self.variable
    }

    /// Highest stored moment index.
    pub fn max_index(&self) -> usize {
        self.moments.len() - 1
    }

    /// Applies the functional: `sum coeffs_k(p) mu_k`.
    pub fn apply(&self, p: &UnivPoly<R>) -> Result<R, MomentError> {
        if p.degree() > self.max_index() && !p.is_zero() {
            return Err(MomentError::DegreeExceedsMoments {
                degree: p.degree(),
                available: self.moments.len(),
            });
        }
        let mut acc = self.moments[0].zero_like();
        for (k, c) in p.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            acc = acc.add_ref(&c.mul_ref(&self.moments[k]));
        }
        Ok(acc)
    }

    /// Moments of the same functional acting on `p(x + d)`:
    /// `nu_n = sum_k C(n,k) (-d)^{n-k} mu_k`.
    pub fn shift(&self, d: &R) -> Self {
        let neg_d = d.neg_ref();
        let nu = (0..self.moments.len())
            .map(|n| {
                let mut acc = self.moments[0].zero_like();
                for (k, mu) in self.moments.iter().enumerate().take(n + 1) {
                    let b = mu.from_rat_like(&binomial(n as i64, k as i64));
                    let pow = ring_pow(&neg_d, n - k);
                    acc = acc.add_ref(&b.mul_ref(&pow).mul_ref(mu));
                }
                acc
            })
            .collect();
        MomentFunctional {
            moments: nu,
            variable: self.variable.clone(),
        }
    }

    /// Serializes as `{"variable": ..., "moments": [...]}`.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "variable": self.variable,
            "moments": self.moments.iter().map(|m| m.to_string()).collect::<Vec<_>>(),
        })
    }
}

/// Monic three-term recurrence `P_{n+1} = (x - b_n) P_n - lambda_n P_{n-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThreeTermRecurrence<R: Ring> {
    pub b: Vec<R>,
    pub lambda: Vec<R>,
}

impl<R: Ring> ThreeTermRecurrence<R> {
    pub fn new(b: Vec<R>, lambda: Vec<R>) -> Self {
        assert_eq!(b.len(), lambda.len() + 1, "need len(b) = len(lambda) + 1");
        ThreeTermRecurrence { b, lambda }
    }

    pub fn depth(&self) -> usize {
        self.b.len()
    }
}

/// Monic orthogonal polynomials `P_0..P_{n_max}` from a three-term
/// recurrence.
pub fn monic_polys<R: Ring>(
    rec: &ThreeTermRecurrence<R>,
    n_max: usize,
) -> Result<Vec<UnivPoly<R>>, MomentError> {
    if n_max > rec.depth() {
        return Err(MomentError::InsufficientDepth {
            requested: n_max,
            depth: rec.depth(),
        });
    }
    let proto = &rec.b[0];
    let mut polys = Vec::with_capacity(n_max + 1);
    polys.push(UnivPoly::one(proto));
    if n_max == 0 {
        return Ok(polys);
    }
    polys.push(UnivPoly::x(proto).sub(&UnivPoly::constant(rec.b[0].clone())));
    for n in 1..n_max {
        let next = polys[n]
            .mul_x_minus(&rec.b[n])
            .sub(&polys[n - 1].scale(&rec.lambda[n - 1]));
        polys.push(next);
    }
    Ok(polys)
}

/// Mixed moments `sigma_{n,k} = L(P_n x^k)` for the monic family generated
/// by a three-term recurrence, computed row by row through
/// `sigma_{n,k} = sigma_{n-1,k+1} - b_{n-1} sigma_{n-1,k} - l_{n-1} sigma_{n-2,k}`
/// without ever forming a polynomial product. Row `n` is valid for
/// `k <= max_index - n`; entries beyond that are zero-filled.
pub fn mixed_moments<R: Ring>(
    mu: &MomentFunctional<R>,
    rec: &ThreeTermRecurrence<R>,
    n_max: usize,
) -> Vec<Vec<R>> {
    assert!(n_max <= rec.depth());
    let top = mu.max_index();
    assert!(top >= n_max, "need moments through index {n_max}");
    let zero = mu.moment(0).zero_like();
    let mut rows: Vec<Vec<R>> = Vec::with_capacity(n_max + 1);
    rows.push(mu.moments().to_vec());
    for n in 1..=n_max {
        let mut row = vec![zero.clone(); top + 1];
        for k in 0..=(top - n) {
            let mut v = rows[n - 1][k + 1].sub_ref(&rec.b[n - 1].mul_ref(&rows[n - 1][k]));
            if n >= 2 {
                v = v.sub_ref(&rec.lambda[n - 2].mul_ref(&rows[n - 2][k]));
            }
            row[k] = v;
        }
        rows.push(row);
    }
    rows
}

/// Per-pair orthogonality verdict for a family of polynomials against a
/// functional.
#[derive(Clone, Debug)]
pub struct OrthReport {
    /// `(m, n, passed)` for each checked pair.
    pub pairs: Vec<(usize, usize, bool)>,
    /// First index with a vanishing diagonal, if any (a legitimately
    /// terminating functional).
    pub truncated_at: Option<usize>,
}

impl OrthReport {
    pub fn all_passed(&self) -> bool {
        self.pairs.iter().all(|&(_, _, ok)| ok)
    }
}

/// Checks `L(P_m P_n) = 0` for `m != n` and `L(P_n^2) = norms[n]`.
pub fn orthogonality_check<R: Ring>(
    functional: &MomentFunctional<R>,
    polys: &[UnivPoly<R>],
    norms: &[R],
) -> Result<OrthReport, MomentError> {
    assert_eq!(polys.len(), norms.len());
    let mut pairs = Vec::new();
    let mut truncated_at = None;
    for m in 0..polys.len() {
        for n in m..polys.len() {
            let value = functional.apply(&polys[m].mul(&polys[n]))?;
            let ok = if m == n {
                if value.is_zero() && truncated_at.is_none() {
                    truncated_at = Some(n);
                }
                value == norms[n]
            } else {
                value.is_zero()
            };
            pairs.push((m, n, ok));
        }
    }
    Ok(OrthReport { pairs, truncated_at })
}

/// Expansion coefficients of `x^n` in the Newton basis attached to the
/// nodes: `x^n = sum_k c_k (x+a_0)...(x+a_{k-1})`.
///
/// Iterated synthetic division; repeated nodes are fine.
pub fn newton_expand<R: Ring>(n: usize, nodes: &[R]) -> Vec<R> {
    assert!(nodes.len() >= n, "need {n} nodes");
    let proto = if nodes.is_empty() {
        return vec![];
    } else {
        &nodes[0]
    };
    let mut p = UnivPoly::one(proto);
    for _ in 0..n {
        p = p.mul(&UnivPoly::x(proto));
    }
    let mut coeffs = Vec::with_capacity(n + 1);
    for node in nodes.iter().take(n) {
        let (q, r) = p.div_monic_linear(node);
        coeffs.push(r);
        p = q;
    }
    debug_assert_eq!(p.degree(), 0);
    coeffs.push(p.coeff(0));
    coeffs
}

/// Newton-basis product `(x+a_0)...(x+a_{k-1})`.
pub fn newton_basis_poly<R: Ring>(nodes: &[R], k: usize) -> UnivPoly<R> {
    assert!(k <= nodes.len());
    if nodes.is_empty() {
        panic!("need at least one node for a prototype");
    }
    let mut p = UnivPoly::one(&nodes[0]);
    for node in nodes.iter().take(k) {
        p = p.mul_x_minus(&node.neg_ref());
    }
    p
}

/// Ordinary generating function of the moments of the functional determined
/// by its Newton-basis values: `sum_n v_n t^n / prod_{j<=n} (1 + a_j t)`.
///
/// The coefficient of `t^n` is `L(x^n)` for the functional with
/// `L((x+a_0)...(x+a_{n-1})) = v_n`.
pub fn moment_ogf<R: Ring>(values: &[R], nodes: &[R]) -> TruncSeries<R> {
    assert!(!values.is_empty());
    assert!(nodes.len() >= values.len(), "need a node per value");
    let order = values.len() - 1;
    let proto = &values[0];
    let mut acc = TruncSeries::zero(proto, order);
    let mut denom = TruncSeries::one(proto, order);
    for (n, v) in values.iter().enumerate() {
        denom = denom.mul(&TruncSeries::geometric(&nodes[n].neg_ref(), order));
        acc = acc.add(&denom.scale(v).shift_up(n));
    }
    acc
}

/// Truncated-series form of the indefinite-sum identity behind the Newton
/// moment expansion: the partial sum through `m` equals
/// `(1/(1-x t)) [1 - (x+a_0)...(x+a_m) t^{m+1} / prod_{j<=m}(1+a_j t)]`.
pub fn nicole_partial_sum_check(m: usize, x0: &Rat, nodes: &[Rat], order: usize) -> bool {
    assert!(nodes.len() > m);
    assert!(order >= m + 1);
    let one = TruncSeries::one(x0, order);

    let mut lhs = TruncSeries::zero(x0, order);
    let mut denom = one.clone();
    let mut basis_value = Rat::from_integer(1.into());
    for n in 0..=m {
        denom = denom.mul(&TruncSeries::geometric(&-&nodes[n], order));
        lhs = lhs.add(&denom.scale(&basis_value).shift_up(n));
        basis_value *= x0 + &nodes[n];
    }
    // after the loop, basis_value = (x0+a_0)...(x0+a_m) and denom carries
    // prod_{j<=m} 1/(1+a_j t)
    let tail = denom.scale(&basis_value).shift_up(m + 1);
    let rhs = TruncSeries::geometric(x0, order).mul(&one.sub(&tail));
    lhs == rhs
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{rat, rat_int};

    #[test]
    fn monic_poly_single_step() {
        let rec = ThreeTermRecurrence::new(vec![rat(5, 3)], vec![]);
        let polys = monic_polys(&rec, 1).unwrap();
        assert_eq!(polys[1].coeffs(), &[rat(-5, 3), rat_int(1)]);
        assert!(matches!(
            monic_polys(&rec, 2),
            Err(MomentError::InsufficientDepth { .. })
        ));
    }

    #[test]
    fn apply_functional_basics() {
        let mu = MomentFunctional::new(vec![rat_int(1), rat_int(2), rat_int(5)], "x");
        let p = UnivPoly::from_coeffs(vec![rat_int(3), rat_int(0), rat_int(1)]);
        // 3*mu_0 + mu_2 = 8
        assert_eq!(mu.apply(&p).unwrap(), rat_int(8));
        let too_big = UnivPoly::from_coeffs(vec![rat_int(0); 4]
            .into_iter()
            .chain([rat_int(1)])
            .collect::<Vec<_>>());
        assert!(matches!(
            mu.apply(&too_big),
            Err(MomentError::DegreeExceedsMoments { .. })
        ));
    }

    #[test]
    fn linearity_on_random_polys() {
        let mu = MomentFunctional::new(
            vec![rat_int(1), rat(1, 2), rat(7, 3), rat(-2, 5), rat_int(4)],
            "x",
        );
        let p = UnivPoly::from_coeffs(vec![rat(1, 3), rat_int(-2), rat(5, 7), rat_int(1)]);
        let q = UnivPoly::from_coeffs(vec![rat_int(2), rat(3, 4), rat_int(0), rat(-1, 2)]);
        let c = rat(9, 4);
        assert_eq!(
            mu.apply(&p.add(&q)).unwrap(),
            mu.apply(&p).unwrap() + mu.apply(&q).unwrap()
        );
        assert_eq!(
            mu.apply(&p.scale(&c)).unwrap(),
            mu.apply(&p).unwrap() * c
        );
    }

    #[test]
    fn shift_by_zero_is_identity_and_involution() {
        let mu = MomentFunctional::new(
            (0..10).map(|n| rat(n * n + 1, n + 1)).collect(),
            "x",
        );
        assert_eq!(mu.shift(&rat_int(0)), mu);
        let d = rat(3, 7);
        assert_eq!(mu.shift(&d).shift(&-&d), mu);
    }

    #[test]
    fn newton_expand_examples() {
        // x = (x + a0) - a0
        let a0 = rat(2, 5);
        let c = newton_expand(1, &[a0.clone()]);
        assert_eq!(c, vec![-a0, rat_int(1)]);
        // x^2 = (x)(x+1) - x with nodes (0, 1)
        let c = newton_expand(2, &[rat_int(0), rat_int(1)]);
        assert_eq!(c, vec![rat_int(0), rat_int(-1), rat_int(1)]);
    }

    #[test]
    fn newton_expand_reconstructs_monomial() {
        let nodes: Vec<Rat> = vec![
            rat(1, 2),
            rat(-2, 3),
            rat_int(3),
            rat(5, 7),
            rat(-1, 4),
            rat_int(0),
        ];
        for n in 0..=6usize {
            let c = newton_expand(n, &nodes);
            let mut acc = UnivPoly::zero(&rat_int(0));
            for (k, ck) in c.iter().enumerate() {
                acc = acc.add(&newton_basis_poly(&nodes, k).scale(ck));
            }
            let mut xn = UnivPoly::one(&rat_int(0));
            for _ in 0..n {
                xn = xn.mul(&UnivPoly::x(&rat_int(0)));
            }
            assert_eq!(acc, xn);
        }
    }

    #[test]
    fn newton_expand_repeated_nodes() {
        let nodes = vec![rat(1, 2); 5];
        let c = newton_expand(4, &nodes);
        let mut acc = UnivPoly::zero(&rat_int(0));
        for (k, ck) in c.iter().enumerate() {
            acc = acc.add(&newton_basis_poly(&nodes, k).scale(ck));
        }
        let mut x4 = UnivPoly::one(&rat_int(0));
        for _ in 0..4 {
            x4 = x4.mul(&UnivPoly::x(&rat_int(0)));
        }
        assert_eq!(acc, x4);
    }

    #[test]
    fn moment_ogf_point_mass_row() {
        // v_n = 1, 0, 0, ... gives 1/(1 + a_0 t)
        let nodes: Vec<Rat> = (0..5).map(|j| rat(j + 2, 3)).collect();
        let mut values = vec![rat_int(0); 5];
        values[0] = rat_int(1);
        let ogf = moment_ogf(&values, &nodes);
        assert_eq!(ogf, TruncSeries::geometric(&-rat(2, 3), 4));
    }

    #[test]
    fn moment_ogf_full_point_mass() {
        // v_n = (x0+a_0)...(x0+a_{n-1}) makes coefficient n equal x0^n
        let x0 = rat(2, 3);
        let order = 8;
        let nodes: Vec<Rat> = (0..=order as i64).map(rat_int).collect();
        let mut values = Vec::new();
        let mut v = rat_int(1);
        for n in 0..=order {
            values.push(v.clone());
            v *= &x0 + rat_int(n as i64);
        }
        let ogf = moment_ogf(&values, &nodes);
        for n in 0..=order {
            assert_eq!(ogf.coeff(n), ring_pow(&x0, n));
        }
    }

    #[test]
    fn nicole_partial_sums() {
        // m = 0 is plain algebra: 1/(1+a0 t) = (1/(1-xt))(1 - (x+a0)t/(1+a0 t))
        assert!(nicole_partial_sum_check(0, &rat(1, 3), &[rat(4, 5)], 6));
        assert!(nicole_partial_sum_check(
            3,
            &rat(1, 2),
            &[rat_int(1), rat_int(2), rat_int(3), rat_int(4)],
            8
        ));
        assert!(nicole_partial_sum_check(
            5,
            &rat(-3, 7),
            &[
                rat(1, 2),
                rat(-2, 5),
                rat_int(2),
                rat(7, 3),
                rat(1, 6),
                rat_int(-1)
            ],
            9
        ));
    }

    #[test]
    fn shift_argument_matches_expansion() {
        let p = UnivPoly::from_coeffs(vec![rat_int(1), rat(-1, 2), rat_int(3)]);
        let d = rat(2, 7);
        let shifted = p.shift_argument(&d);
        for point in [rat_int(0), rat(1, 3), rat(-4, 5)] {
            assert_eq!(shifted.eval(&point), p.eval(&(&point + &d)));
        }
    }
}
