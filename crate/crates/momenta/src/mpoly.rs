//! Sparse multivariate polynomials over exact rationals.
//!
//! Variables are declared up front in a [`VarSet`]; every polynomial carries
//! a handle to its set. Terms live in a `BTreeMap` keyed by exponent vectors
//! under graded-lexicographic order, zero coefficients are never stored, so
//! structural equality is mathematical equality.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Signed, Zero};

use crate::ring::{Rat, Ring};

/// Ordered set of variable names shared by a family of polynomials.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VarSet(Arc<Vec<String>>);

impl VarSet {
    pub fn new<I, S>(names: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let mut seen = names.clone();
        seen.sort();
        seen.dedup();
        assert_eq!(seen.len(), names.len(), "duplicate variable name");
        VarSet(Arc::new(names))
    }

    pub fn names(&self) -> &[String] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.iter().position(|v| v == name)
    }

    /// The polynomial `name` as an element of this set.
    pub fn var(&self, name: &str) -> MPoly {
        let i = self
            .index_of(name)
            .unwrap_or_else(|| panic!("unknown variable {name:?}"));
        MPoly::from_terms(self.clone(), vec![(Monomial::unit(i), Rat::one())])
    }

    /// A constant polynomial in this set.
    pub fn constant(&self, value: Rat) -> MPoly {
        MPoly::from_terms(self.clone(), vec![(Monomial::constant(), value)])
    }

    pub fn zero(&self) -> MPoly {
        MPoly {
            vars: self.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn one(&self) -> MPoly {
        self.constant(Rat::one())
    }

    pub fn int(&self, n: i64) -> MPoly {
        self.constant(crate::ring::rat_int(n))
    }
}

/// Exponent vector packed into a `u64`, one byte per declared variable
/// (at most 8 variables, each exponent below 128 so sums never carry).
/// Variable 0 sits in the most significant byte, making the numeric order
/// of `packed` the lexicographic order of the exponent vector.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Monomial {
    degree: u32,
    packed: u64,
}

const EXP_LIMIT: u16 = 127;

impl Monomial {
    fn constant() -> Monomial {
        Monomial { degree: 0, packed: 0 }
    }

    fn from_exps(exps: &[u16]) -> Monomial {
        assert!(exps.len() <= 8, "at most 8 variables");
        let mut packed = 0u64;
        let mut degree = 0u32;
        for (i, &e) in exps.iter().enumerate() {
            assert!(e <= EXP_LIMIT, "exponent {e} exceeds the packed limit");
            packed |= (e as u64) << (8 * (7 - i));
            degree += e as u32;
        }
        Monomial { degree, packed }
    }

    fn unit(i: usize) -> Monomial {
        Monomial {
            degree: 1,
            packed: 1u64 << (8 * (7 - i)),
        }
    }

    pub fn exp(&self, i: usize) -> u16 {
        ((self.packed >> (8 * (7 - i))) & 0xff) as u16
    }

    pub fn total_degree(&self) -> u32 {
        self.degree
    }

    fn with_var_zeroed(&self, i: usize) -> Monomial {
        let e = self.exp(i);
        Monomial {
            degree: self.degree - e as u32,
            packed: self.packed & !(0xffu64 << (8 * (7 - i))),
        }
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        let packed = self.packed + other.packed;
        // no byte may carry into its neighbour
        debug_assert_eq!((self.packed ^ other.packed ^ packed) & 0x0101_0101_0101_0100, 0);
        Monomial {
            degree: self.degree + other.degree,
            packed,
        }
    }

    fn divides(&self, other: &Monomial) -> bool {
        if self.degree > other.degree {
            return false;
        }
        (0..8).all(|i| self.exp(i) <= other.exp(i))
    }

    fn div(&self, other: &Monomial) -> Monomial {
        Monomial {
            degree: self.degree - other.degree,
            packed: self.packed - other.packed,
        }
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        // graded-lexicographic: total degree first, then lex on exponents
        self.degree
            .cmp(&other.degree)
            .then_with(|| self.packed.cmp(&other.packed))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse multivariate polynomial with rational coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MPoly {
    vars: VarSet,
    terms: BTreeMap<Monomial, Rat>,
}

impl MPoly {
    fn from_terms(vars: VarSet, entries: Vec<(Monomial, Rat)>) -> Self {
        let mut terms: BTreeMap<Monomial, Rat> = BTreeMap::new();
        for (m, c) in entries {
            let slot = terms.entry(m).or_insert_with(Rat::zero);
            *slot += c;
        }
        terms.retain(|_, c| !Zero::is_zero(c));
        MPoly { vars, terms }
    }

    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::total_degree).max().unwrap_or(0)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rat)> {
        self.terms.iter()
    }

    /// Coefficient of the constant monomial.
    pub fn constant_term(&self) -> Rat {
        self.terms
            .get(&Monomial::constant())
            .cloned()
            .unwrap_or_else(Rat::zero)
    }

    /// Some(rational) when the polynomial is constant.
    pub fn as_constant(&self) -> Option<Rat> {
        match self.terms.len() {
            0 => Some(Rat::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                if m.total_degree() == 0 {
                    Some(c.clone())
                } else {
                    None
                }
            }
            _ => None,
        }
    }

    fn assert_same_vars(&self, other: &MPoly) {
        assert!(
            self.vars == other.vars,
            "mixed variable sets: {:?} vs {:?}",
            self.vars.names(),
            other.vars.names()
        );
    }

    pub fn add_poly(&self, other: &MPoly) -> MPoly {
        self.assert_same_vars(other);
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            let slot = terms.entry(m.clone()).or_insert_with(Rat::zero);
            *slot += c;
        }
        terms.retain(|_, c| !Zero::is_zero(c));
        MPoly {
            vars: self.vars.clone(),
            terms,
        }
    }

    pub fn sub_poly(&self, other: &MPoly) -> MPoly {
        self.assert_same_vars(other);
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            let slot = terms.entry(m.clone()).or_insert_with(Rat::zero);
            *slot -= c;
        }
        terms.retain(|_, c| !Zero::is_zero(c));
        MPoly {
            vars: self.vars.clone(),
            terms,
        }
    }

    pub fn neg_poly(&self) -> MPoly {
        MPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn mul_poly(&self, other: &MPoly) -> MPoly {
        self.assert_same_vars(other);
        let mut terms: BTreeMap<Monomial, Rat> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb);
                let slot = terms.entry(m).or_insert_with(Rat::zero);
                *slot += ca * cb;
            }
        }
        terms.retain(|_, c| !Zero::is_zero(c));
        MPoly {
            vars: self.vars.clone(),
            terms,
        }
    }

    pub fn scale(&self, c: &Rat) -> MPoly {
        if Zero::is_zero(c) {
            return self.vars.zero();
        }
        MPoly {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn pow(&self, exp: usize) -> MPoly {
        let mut result = self.vars.one();
        let mut acc = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul_poly(&acc);
            }
            e >>= 1;
            if e > 0 {
                acc = acc.mul_poly(&acc);
            }
        }
        result
    }

    /// Evaluates at a full rational point given in declared-variable order.
    pub fn eval(&self, point: &[Rat]) -> Rat {
        assert_eq!(point.len(), self.vars.len(), "point arity mismatch");
        let mut total = Rat::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (i, p) in point.iter().enumerate() {
                for _ in 0..m.exp(i) {
                    term *= p;
                }
            }
            total += term;
        }
        total
    }

    /// Replaces `name` by `replacement` (same variable set); the replacement
    /// may itself involve `name`.
    pub fn subst(&self, name: &str, replacement: &MPoly) -> MPoly {
        self.assert_same_vars(replacement);
        let idx = self
            .vars
            .index_of(name)
            .unwrap_or_else(|| panic!("unknown variable {name:?}"));
        let max_e = self.terms.keys().map(|m| m.exp(idx)).max().unwrap_or(0) as usize;
        // power cache for replacement^e
        let mut powers: Vec<MPoly> = Vec::with_capacity(max_e + 1);
        powers.push(self.vars.one());
        for e in 1..=max_e {
            powers.push(powers[e - 1].mul_poly(replacement));
        }
        let mut result = self.vars.zero();
        for (m, c) in &self.terms {
            let e = m.exp(idx) as usize;
            let base = MPoly::from_terms(self.vars.clone(), vec![(m.with_var_zeroed(idx), c.clone())]);
            result = result.add_poly(&base.mul_poly(&powers[e]));
        }
        result
    }

    /// Shifts one variable by an integer: `v -> v + k`.
    pub fn shift_var(&self, name: &str, k: i64) -> MPoly {
        if k == 0 {
            return self.clone();
        }
        let repl = self.vars.var(name).add_poly(&self.vars.int(k));
        self.subst(name, &repl)
    }

    /// Exact polynomial division; `None` when `divisor` is zero or the
    /// remainder is nonzero. Long division by leading terms under the
    /// graded-lex order.
    pub fn exact_div_poly(&self, divisor: &MPoly) -> Option<MPoly> {
        self.assert_same_vars(divisor);
        if divisor.terms.is_empty() {
            return None;
        }
        if let Some(c) = divisor.as_constant() {
            return Some(self.scale(&c.recip()));
        }
        let (dm, dc) = divisor.terms.iter().next_back().unwrap();
        let mut rem = self.clone();
        let mut quot = self.vars.zero();
        while !rem.terms.is_empty() {
            let (rm, rc) = rem.terms.iter().next_back().unwrap();
            if !dm.divides(rm) {
                return None;
            }
            let qm = rm.div(dm);
            let qc = rc / dc;
            let qterm = MPoly::from_terms(self.vars.clone(), vec![(qm, qc)]);
            rem = rem.sub_poly(&qterm.mul_poly(divisor));
            quot = quot.add_poly(&qterm);
        }
        Some(quot)
    }

    /// Coefficients of the powers of `name`: entry `e` is the polynomial
    /// (with `name`-exponent zero) multiplying `name^e`.
    pub fn coeffs_in(&self, name: &str) -> Vec<MPoly> {
        let idx = self
            .vars
            .index_of(name)
            .unwrap_or_else(|| panic!("unknown variable {name:?}"));
        let max_e = self.terms.keys().map(|m| m.exp(idx)).max().unwrap_or(0) as usize;
        let mut out = vec![self.vars.zero(); max_e + 1];
        for (m, c) in &self.terms {
            let e = m.exp(idx) as usize;
            out[e] = out[e].add_poly(&MPoly::from_terms(
                self.vars.clone(),
                vec![(m.with_var_zeroed(idx), c.clone())],
            ));
        }
        out
    }

    /// Serializes as a JSON map from monomial string (e.g. `"a^2*b"`) to
    /// coefficient string; the constant monomial is keyed `"1"`.
    pub fn to_json(&self) -> serde_json::Value {
        let mut map = serde_json::Map::new();
        for (m, c) in self.terms.iter().rev() {
            map.insert(self.monomial_string(m), serde_json::Value::String(c.to_string()));
        }
        serde_json::Value::Object(map)
    }

    fn monomial_string(&self, m: &Monomial) -> String {
        let parts: Vec<String> = (0..self.vars.len())
            .filter_map(|i| match m.exp(i) {
                0 => None,
                1 => Some(self.vars.names()[i].clone()),
                e => Some(format!("{}^{}", self.vars.names()[i], e)),
            })
            .collect();
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join("*")
        }
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        // highest terms first
        for (m, c) in self.terms.iter().rev() {
            let mono = self.monomial_string(m);
            let abs = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if mono == "1" {
                write!(f, "{abs}")?;
            } else if One::is_one(&abs) {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{abs}*{mono}")?;
            }
        }
        Ok(())
    }
}

impl Add for &MPoly {
    type Output = MPoly;
    fn add(self, rhs: &MPoly) -> MPoly {
        self.add_poly(rhs)
    }
}

impl Sub for &MPoly {
    type Output = MPoly;
    fn sub(self, rhs: &MPoly) -> MPoly {
        self.sub_poly(rhs)
    }
}

impl Mul for &MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &MPoly) -> MPoly {
        self.mul_poly(rhs)
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        self.neg_poly()
    }
}

impl Ring for MPoly {
    fn zero_like(&self) -> Self {
        self.vars.zero()
    }
    fn one_like(&self) -> Self {
        self.vars.one()
    }
    fn from_i64_like(&self, n: i64) -> Self {
        self.vars.int(n)
    }
    fn from_rat_like(&self, r: &Rat) -> Self {
        self.vars.constant(r.clone())
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn is_one(&self) -> bool {
        self.as_constant().map_or(false, |c| One::is_one(&c))
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        self.add_poly(rhs)
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self.sub_poly(rhs)
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self.mul_poly(rhs)
    }
    fn neg_ref(&self) -> Self {
        self.neg_poly()
    }
    fn exact_div(&self, rhs: &Self) -> Option<Self> {
        self.exact_div_poly(rhs)
    }
    fn inverse(&self) -> Option<Self> {
        let c = self.as_constant()?;
        if Zero::is_zero(&c) {
            None
        } else {
            Some(self.vars.constant(c.recip()))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{pochhammer, rat, rat_int};

    fn xy() -> VarSet {
        VarSet::new(["x", "y"])
    }

    #[test]
    fn canonical_form_drops_zero_terms() {
        let v = xy();
        let p = v.var("x").sub_poly(&v.var("x"));
        assert!(p.terms.is_empty());
        assert_eq!(p, v.zero());
    }

    #[test]
    fn display_graded_lex() {
        let v = xy();
        let x = v.var("x");
        let y = v.var("y");
        let p = x.pow(2).mul_poly(&y).scale(&rat_int(3)).add_poly(&y.scale(&rat(-1, 2))).add_poly(&v.one());
        assert_eq!(p.to_string(), "3*x^2*y - 1/2*y + 1");
    }

    #[test]
    fn eval_is_ring_homomorphism() {
        let v = xy();
        let x = v.var("x");
        let y = v.var("y");
        let p = x.pow(2).add_poly(&y.scale(&rat(3, 2)));
        let q = x.mul_poly(&y).sub_poly(&v.int(4));
        let point = [rat(2, 3), rat(-5, 7)];
        assert_eq!(
            p.mul_poly(&q).eval(&point),
            p.eval(&point) * q.eval(&point)
        );
        assert_eq!(
            p.add_poly(&q).eval(&point),
            p.eval(&point) + q.eval(&point)
        );
    }

    #[test]
    fn subst_shift() {
        let v = xy();
        let x = v.var("x");
        // (x^2) with x -> x+1 gives x^2 + 2x + 1
        let shifted = x.pow(2).shift_var("x", 1);
        let expected = x.pow(2).add_poly(&x.scale(&rat_int(2))).add_poly(&v.one());
        assert_eq!(shifted, expected);
    }

    #[test]
    fn symbolic_pochhammer_addition_law() {
        let v = VarSet::new(["x"]);
        let x = v.var("x");
        for m in 0..=5usize {
            for n in 0..=5usize {
                let lhs = pochhammer(&x, m + n);
                let shifted = x.add_poly(&v.int(m as i64));
                let rhs = pochhammer(&x, m).mul_poly(&pochhammer(&shifted, n));
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn exact_division() {
        let v = xy();
        let x = v.var("x");
        let y = v.var("y");
        let p = x.add_poly(&y).mul_poly(&x.sub_poly(&y.scale(&rat(1, 2))));
        assert_eq!(p.exact_div_poly(&x.add_poly(&y)).unwrap(), x.sub_poly(&y.scale(&rat(1, 2))));
        // x^2 + y is not divisible by x + y
        let q = x.pow(2).add_poly(&y);
        assert!(q.exact_div_poly(&x.add_poly(&y)).is_none());
        assert!(q.exact_div_poly(&v.zero()).is_none());
    }

    #[test]
    fn json_monomial_keys() {
        let v = VarSet::new(["a", "b"]);
        let p = v.var("a").pow(2).mul_poly(&v.var("b")).add_poly(&v.int(7));
        let json = p.to_json();
        assert_eq!(json["a^2*b"], "1");
        assert_eq!(json["1"], "7");
    }
}
