//! Askey-Wilson moments over exact rationals.
//!
//! With nodes `a_j = (q^{-j}/a + a q^j)/2` the Newton-type basis collapses:
//! `(x - a_0)...(x - a_{n-1}) = (-1)^n (2a)^{-n} q^{-C(n,2)} (az, a/z; q)_n`,
//! so the basis values of the moment functional are exact rationals and the
//! moments come out either as coefficients of the generating-function sum
//! or through the Newton expansion of `x^n`. The variable stays real: every
//! `(az, a/z; q)_n` product is expanded as
//! `prod_j (1 - 2 a q^j x + a^2 q^{2j})`.


use crate::families::FamilyError;
use crate::momentlab::{moment_ogf, newton_expand, MomentFunctional, UnivPoly};
use crate::random::{sample_point, seeded_rng};
use crate::report::Report;
use crate::ring::{qpochhammer, rat_int, ring_pow, Rat, Ring};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AwParams {
    pub q: Rat,
    pub a: Rat,
    pub b: Rat,
    pub c: Rat,
    pub d: Rat,
}

impl AwParams {
    pub fn new(q: Rat, a: Rat, b: Rat, c: Rat, d: Rat) -> Self {
        AwParams { q, a, b, c, d }
    }

    /// `a != 0`, `q != 0`, and `1 - abcd q^k != 0` through the working depth.
    pub fn validate(&self, depth: usize) -> Result<(), FamilyError> {
        if self.a.is_zero() {
            return Err(FamilyError::ParameterPole("a = 0".into()));
        }
        if self.q.is_zero() {
            return Err(FamilyError::ParameterPole("q = 0".into()));
        }
        let abcd = &self.a * &self.b * &self.c * &self.d;
        let mut qk = rat_int(1);
        for k in 0..=depth {
            if (rat_int(1) - &abcd * &qk).is_zero() {
                return Err(FamilyError::ParameterPole(format!("1 - abcd q^{k} = 0")));
            }
            qk *= &self.q;
        }
        Ok(())
    }

    /// Guards the q-shifted factorials appearing in the polynomial
    /// normalizations.
    fn validate_orthogonality(&self, depth: usize) -> Result<(), FamilyError> {
        self.validate(depth)?;
        let mut qk = rat_int(1);
        for k in 0..=depth {
            for (label, base) in [
                ("ab", &self.a * &self.b),
                ("ac", &self.a * &self.c),
                ("ad", &self.a * &self.d),
                ("q", self.q.clone()),
            ] {
                if (rat_int(1) - base * &qk).is_zero() {
                    return Err(FamilyError::ParameterPole(format!("1 - {label} q^{k} = 0")));
                }
            }
            qk *= &self.q;
        }
        Ok(())
    }
}

/// Nodes `a_j = (q^{-j}/a + a q^j) / 2`.
pub fn aw_nodes(p: &AwParams, n_max: usize) -> Vec<Rat> {
    let q_inv = p.q.recip();
    (0..=n_max)
        .map(|j| {
            (ring_pow(&q_inv, j) / &p.a + &p.a * ring_pow(&p.q, j)) / rat_int(2)
        })
        .collect()
}

/// Basis values `v_n = (ab, ac, ad; q)_n / (abcd; q)_n
/// (-1)^n (2a)^{-n} q^{-C(n,2)}`.
pub fn aw_newton_values(p: &AwParams, n_max: usize) -> Result<Vec<Rat>, FamilyError> {
    p.validate(n_max)?;
    let abcd = &p.a * &p.b * &p.c * &p.d;
    let two_a_inv = (rat_int(2) * &p.a).recip();
    let q_inv = p.q.recip();
    Ok((0..=n_max)
        .map(|n| {
            let sign = if n % 2 == 0 { rat_int(1) } else { rat_int(-1) };
            let choose2 = n * (n.saturating_sub(1)) / 2;
            qpochhammer(&(&p.a * &p.b), &p.q, n)
                * qpochhammer(&(&p.a * &p.c), &p.q, n)
                * qpochhammer(&(&p.a * &p.d), &p.q, n)
                / qpochhammer(&abcd, &p.q, n)
                * sign
                * ring_pow(&two_a_inv, n)
                * ring_pow(&q_inv, choose2)
        })
        .collect())
}

/// Moments through the generating-function sum
/// `sum_n v_n u^n / prod_{j<=n} (1 - a_j u)`.
pub fn aw_moments_series(p: &AwParams, n_max: usize) -> Result<Vec<Rat>, FamilyError> {
    let values = aw_newton_values(p, n_max)?;
    let nodes: Vec<Rat> = aw_nodes(p, n_max).into_iter().map(|a| -a).collect();
    Ok(moment_ogf(&values, &nodes).coeffs().to_vec())
}

/// Moments through the Newton expansion of `x^n` in the same nodes.
pub fn aw_moments_newton(p: &AwParams, n_max: usize) -> Result<Vec<Rat>, FamilyError> {
    let values = aw_newton_values(p, n_max)?;
    let nodes: Vec<Rat> = aw_nodes(p, n_max).into_iter().map(|a| -a).collect();
    Ok((0..=n_max)
        .map(|n| {
            newton_expand(n, &nodes)
                .iter()
                .zip(&values)
                .map(|(c, v)| c * v)
                .fold(rat_int(0), |acc, t| acc + t)
        })
        .collect())
}

/// The moment `L_q(x^n)`.
pub fn aw_moment(p: &AwParams, n: usize) -> Result<Rat, FamilyError> {
    Ok(aw_moments_series(p, n)?.pop().unwrap())
}

/// `(az, a/z; q)_n` as the real polynomial
/// `prod_{j<n} (1 - 2 a q^j x + a^2 q^{2j})` for any base parameter.
pub fn aw_pair_poly(base: &Rat, q: &Rat, n: usize) -> UnivPoly<Rat> {
    let mut poly = UnivPoly::one(&rat_int(0));
    let mut qj = rat_int(1);
    for _ in 0..n {
        let aj = base * &qj;
        let factor = UnivPoly::from_coeffs(vec![rat_int(1) + &aj * &aj, rat_int(-2) * &aj]);
        poly = poly.mul(&factor);
        qj *= q;
    }
    poly
}

/// Functional identities: the basis evaluation
/// `L_q((az, a/z; q)_n) = (ab, ac, ad; q)_n / (abcd; q)_n`, its mixed
/// two-parameter version, the two moment routes, the parameter-shift
/// property, and the `d = 0` degeneration.
pub fn aw_functional_checks(p: &AwParams, m_max: usize, n_max: usize) -> Result<Report, FamilyError> {
    let mut report = Report::new(format!(
        "aw-functional q={} a={} b={} c={} d={}",
        p.q, p.a, p.b, p.c, p.d
    ));
    let depth = 2 * (m_max + n_max) + 4;
    p.validate(depth)?;
    let moments = aw_moments_series(p, depth)?;
    let functional = MomentFunctional::new(moments.clone(), "x");
    let abcd = &p.a * &p.b * &p.c * &p.d;

    // route equivalence
    let newton = aw_moments_newton(p, 8.min(depth))?;
    for (n, value) in newton.iter().enumerate() {
        report.check_eq(format!("two moment routes, order {n}"), value, &moments[n]);
    }

    // basis evaluation
    for n in 0..=n_max {
        let poly = aw_pair_poly(&p.a, &p.q, n);
        let lhs = functional.apply(&poly).expect("enough moments");
        let rhs = qpochhammer(&(&p.a * &p.b), &p.q, n)
            * qpochhammer(&(&p.a * &p.c), &p.q, n)
            * qpochhammer(&(&p.a * &p.d), &p.q, n)
            / qpochhammer(&abcd, &p.q, n);
        report.check_eq(format!("basis evaluation, n={n}"), &lhs, &rhs);
    }

    // mixed two-parameter products
    for n in 0..=n_max.min(3) {
        for m in 0..=m_max.min(3) {
            let poly = aw_pair_poly(&p.a, &p.q, n).mul(&aw_pair_poly(&p.b, &p.q, m));
            let lhs = functional.apply(&poly).expect("enough moments");
            let rhs = qpochhammer(&(&p.a * &p.b), &p.q, m + n)
                * qpochhammer(&(&p.a * &p.c), &p.q, n)
                * qpochhammer(&(&p.a * &p.d), &p.q, n)
                * qpochhammer(&(&p.b * &p.c), &p.q, m)
                * qpochhammer(&(&p.b * &p.d), &p.q, m)
                / qpochhammer(&abcd, &p.q, m + n);
            report.check_eq(format!("mixed product, m={m} n={n}"), &lhs, &rhs);
        }
    }

    // shifting a to a q^n divides out the basis factor
    for n in 0..=3usize.min(n_max) {
        let shifted = AwParams::new(
            p.q.clone(),
            &p.a * ring_pow(&p.q, n),
            p.b.clone(),
            p.c.clone(),
            p.d.clone(),
        );
        if shifted.validate(depth).is_err() {
            continue;
        }
        let shifted_moments = aw_moments_series(&shifted, 2)?;
        let normalizer = qpochhammer(&(&p.a * &p.b), &p.q, n)
            * qpochhammer(&(&p.a * &p.c), &p.q, n)
            * qpochhammer(&(&p.a * &p.d), &p.q, n)
            / qpochhammer(&abcd, &p.q, n);
        for m in 0..=2usize {
            let mut poly = aw_pair_poly(&p.a, &p.q, n);
            for _ in 0..m {
                poly = poly.mul(&UnivPoly::x(&rat_int(0)));
            }
            let lhs = functional.apply(&poly).expect("enough moments") / &normalizer;
            report.check_eq(
                format!("parameter shift a -> a q^{n}, moment {m}"),
                &lhs,
                &shifted_moments[m],
            );
        }
    }

    // d = 0 degeneration: the same identities with the abcd factors trivial
    let degenerate = AwParams::new(p.q.clone(), p.a.clone(), p.b.clone(), p.c.clone(), rat_int(0));
    let deg_moments = aw_moments_series(&degenerate, depth)?;
    let deg_functional = MomentFunctional::new(deg_moments, "x");
    for n in 0..=3usize {
        for m in 0..=3usize {
            let poly = aw_pair_poly(&p.a, &p.q, n).mul(&aw_pair_poly(&p.b, &p.q, m));
            let lhs = deg_functional.apply(&poly).expect("enough moments");
            let rhs = qpochhammer(&(&p.a * &p.b), &p.q, m + n)
                * qpochhammer(&(&p.a * &p.c), &p.q, n)
                * qpochhammer(&(&p.b * &p.c), &p.q, m);
            report.check_eq(format!("degenerate mixed product, m={m} n={n}"), &lhs, &rhs);
        }
    }
    Ok(report)
}

/// The polynomial `p_n(x) = (ab, ac, ad; q)_n a^{-n} A_n(x)` with `A_n` the
/// terminating basic hypergeometric sum over the conjugate pair products.
pub fn aw_poly(p: &AwParams, n: usize) -> Result<UnivPoly<Rat>, FamilyError> {
    p.validate_orthogonality(n + 1)?;
    let abcd = &p.a * &p.b * &p.c * &p.d;
    let q_to_minus_n = ring_pow(&p.q.recip(), n);
    let lead = &abcd * ring_pow(&p.q, n) / &p.q; // abcd q^{n-1}
    let mut total = UnivPoly::zero(&rat_int(0));
    let mut ratio = rat_int(1);
    for k in 0..=n {
        let term_poly = aw_pair_poly(&p.a, &p.q, k);
        total = total.add(&term_poly.scale(&ratio));
        // extend the coefficient ratio by one step of the terminating sum
        let qk = ring_pow(&p.q, k);
        let num = (rat_int(1) - &q_to_minus_n * &qk) * (rat_int(1) - &lead * &qk);
        let den = (rat_int(1) - &p.a * &p.b * &qk)
            * (rat_int(1) - &p.a * &p.c * &qk)
            * (rat_int(1) - &p.a * &p.d * &qk)
            * (rat_int(1) - ring_pow(&p.q, k + 1));
        ratio = ratio * num * &p.q / den;
    }
    let norm = qpochhammer(&(&p.a * &p.b), &p.q, n)
        * qpochhammer(&(&p.a * &p.c), &p.q, n)
        * qpochhammer(&(&p.a * &p.d), &p.q, n)
        * ring_pow(&p.a.recip(), n);
    Ok(total.scale(&norm))
}

/// Small-degree orthogonality spot check: `L_q(p_m p_n) = 0` for `m != n`.
pub fn aw_orthogonality_spot(p: &AwParams, n_max: usize) -> Result<Report, FamilyError> {
    assert!(n_max <= 4);
    let mut report = Report::new(format!(
        "aw-orthogonality q={} a={} b={} c={} d={}",
        p.q, p.a, p.b, p.c, p.d
    ));
    p.validate_orthogonality(2 * n_max + 2)?;
    let moments = aw_moments_series(p, 2 * n_max + 2)?;
    let functional = MomentFunctional::new(moments, "x");
    report.check_eq("normalization", &functional.moment(0), &rat_int(1));
    let polys: Result<Vec<_>, _> = (0..=n_max).map(|n| aw_poly(p, n)).collect();
    let polys = polys?;
    for m in 0..=n_max {
        for n in (m + 1)..=n_max {
            let value = functional
                .apply(&polys[m].mul(&polys[n]))
                .expect("enough moments");
            report.check_eq(format!("L_q(p_{m} p_{n})"), &value, &rat_int(0));
        }
    }
    Ok(report)
}

/// The fixed rational parameter point used in the worked examples.
pub fn aw_example_point() -> AwParams {
    AwParams::new(
        crate::ring::rat(1, 2),
        crate::ring::rat(1, 3),
        crate::ring::rat(1, 5),
        crate::ring::rat(1, 7),
        crate::ring::rat(1, 11),
    )
}

/// Seeded random admissible parameter tuples `(q, a, b, c, d)`.
pub fn random_aw(rng: &mut rand_chacha::ChaCha8Rng, depth: usize) -> AwParams {
    let v = sample_point(rng, 5, |v| {
        let p = AwParams::new(
            v[0].clone(),
            v[1].clone(),
            v[2].clone(),
            v[3].clone(),
            v[4].clone(),
        );
        // |q| != 1 keeps every (x; q)_k factor away from roots of unity
        if (p.q.clone() * p.q.clone()) == rat_int(1) {
            return false;
        }
        p.validate_orthogonality(depth).is_ok()
    });
    AwParams::new(
        v[0].clone(),
        v[1].clone(),
        v[2].clone(),
        v[3].clone(),
        v[4].clone(),
    )
}

/// Runs the functional checks at the fixed example point and at seeded
/// random points.
pub fn aw_functional_suite(seed: u64, points: usize) -> Report {
    let mut report = Report::with_seed("aw-functional", seed);
    match aw_functional_checks(&aw_example_point(), 3, 6) {
        Ok(r) => report.merge(r),
        Err(e) => report.fail("fixed example point", e.to_string()),
    }
    let mut rng = seeded_rng(seed, "aw-functional");
    for _ in 0..points {
        let p = random_aw(&mut rng, 24);
        match aw_functional_checks(&p, 3, 6) {
            Ok(r) => report.merge(r),
            Err(e) => report.fail("random point", e.to_string()),
        }
    }
    report
}

/// Runs the orthogonality spot checks at the fixed example point and at
/// seeded random points.
pub fn aw_orthogonality_suite(seed: u64, points: usize, n_max: usize) -> Report {
    let mut report = Report::with_seed("aw-orthogonality", seed);
    match aw_orthogonality_spot(&aw_example_point(), n_max) {
        Ok(r) => report.merge(r),
        Err(e) => report.fail("fixed example point", e.to_string()),
    }
    let mut rng = seeded_rng(seed, "aw-orthogonality");
    for _ in 0..points {
        let p = random_aw(&mut rng, 2 * n_max + 4);
        match aw_orthogonality_spot(&p, n_max) {
            Ok(r) => report.merge(r),
            Err(e) => report.fail("random point", e.to_string()),
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::rat;

    #[test]
    fn normalization_and_first_moment() {
        let p = aw_example_point();
        assert_eq!(aw_moment(&p, 0).unwrap(), rat_int(1));
        // L_q(x) = [1 + a^2 - (1-ab)(1-ac)(1-ad)/(1-abcd)] / (2a)
        let abcd = &p.a * &p.b * &p.c * &p.d;
        let expected = (rat_int(1) + &p.a * &p.a
            - (rat_int(1) - &p.a * &p.b) * (rat_int(1) - &p.a * &p.c)
                * (rat_int(1) - &p.a * &p.d)
                / (rat_int(1) - abcd))
            / (rat_int(2) * &p.a);
        assert_eq!(aw_moment(&p, 1).unwrap(), expected);
    }

    #[test]
    fn route_agreement_at_example_point() {
        let p = aw_example_point();
        assert_eq!(
            aw_moments_series(&p, 8).unwrap(),
            aw_moments_newton(&p, 8).unwrap()
        );
    }

    #[test]
    fn invalid_parameters_rejected() {
        let p = AwParams::new(rat(1, 2), rat_int(0), rat(1, 2), rat(1, 3), rat(1, 5));
        assert!(matches!(p.validate(2), Err(FamilyError::ParameterPole(_))));
        let p = AwParams::new(rat_int(2), rat(1, 2), rat_int(1), rat_int(1), rat_int(1));
        // abcd q^k = 1 at k = 1
        assert!(matches!(p.validate(2), Err(FamilyError::ParameterPole(_))));
    }

    #[test]
    fn functional_checks_fixed_point() {
        let report = aw_functional_checks(&aw_example_point(), 2, 3).unwrap();
        assert!(report.passed(), "{}", report.render());
    }

    #[test]
    fn orthogonality_fixed_point() {
        let report = aw_orthogonality_spot(&aw_example_point(), 2).unwrap();
        assert!(report.passed(), "{}", report.render());
    }
}
