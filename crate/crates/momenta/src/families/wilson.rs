//! Wilson moments `w_n(a, b, c, d)` and their coherence checks.
//!
//! The moments satisfy the parameter-shift recurrence
//! `w_{n+1}(a) = (a+b)(a+c)(a+d)/(a+b+c+d) w_n(a+1) - a^2 w_n(a)`, computed
//! over a memoized `(shift, index)` triangle. Symbolically,
//! `w_n = P_n / (a+b+c+d)_n` with polynomial numerators `P_n`; identities
//! with parameter denominators are cleared to numerator form and checked in
//! the polynomial ring, the rest are checked at seeded random rational
//! points.


use crate::contfrac::{series_to_sfrac, JFrac, SFrac};
use crate::families::FamilyError;
use crate::fps::{hyper_series, sin_at, trig_arg, TrigArg, TruncSeries};
use crate::momentlab::{monic_polys, moment_ogf, MomentFunctional};
use crate::mpoly::{MPoly, VarSet};
use crate::random::{sample_point, seeded_rng};
use crate::report::Report;
use crate::ring::{factorial, pochhammer, rat, rat_int, Rat, Ring};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WilsonParams {
    pub a: Rat,
    pub b: Rat,
    pub c: Rat,
    pub d: Rat,
}

impl WilsonParams {
    pub fn new(a: Rat, b: Rat, c: Rat, d: Rat) -> Self {
        WilsonParams { a, b, c, d }
    }

    pub fn sum(&self) -> Rat {
        &self.a + &self.b + &self.c + &self.d
    }

    /// Guards `a+b+c+d+k != 0` for every shift depth used.
    fn guard_sum_shifts(&self, upto: usize) -> Result<(), FamilyError> {
        let s = self.sum();
        for k in 0..upto {
            if (&s + rat_int(k as i64)).is_zero() {
                return Err(FamilyError::ParameterPole(format!("a+b+c+d+{k} = 0")));
            }
        }
        Ok(())
    }
}

/// `w_0..w_{n_max}` by the shift recurrence over the `(shift, index)`
/// triangle.
pub fn wilson_moments(p: &WilsonParams, n_max: usize) -> Result<Vec<Rat>, FamilyError> {
    p.guard_sum_shifts(n_max)?;
    let s = p.sum();
    // tri[k] holds w_j(a+k) for j = 0..
    let mut tri: Vec<Vec<Rat>> = (0..=n_max).map(|_| vec![rat_int(1)]).collect();
    for j in 0..n_max {
        for k in 0..=(n_max - j - 1) {
            let ak = &p.a + rat_int(k as i64);
            let prefactor =
                (&ak + &p.b) * (&ak + &p.c) * (&ak + &p.d) / (&s + rat_int(k as i64));
            let next = &prefactor * &tri[k + 1][j] - &ak * &ak * &tri[k][j];
            tri[k].push(next);
        }
    }
    Ok(std::mem::take(&mut tri[0]))
}

/// Recurrence coefficient `A_n`; `None` on a vanishing denominator.
fn coeff_a(p: &WilsonParams, n: i64) -> Option<Rat> {
    let s = p.sum();
    let den = (&s + rat_int(2 * n - 1)) * (&s + rat_int(2 * n));
    if den.is_zero() {
        return None;
    }
    let num = (&s + rat_int(n - 1))
        * (&p.a + &p.b + rat_int(n))
        * (&p.a + &p.c + rat_int(n))
        * (&p.a + &p.d + rat_int(n));
    Some(num / den)
}

/// Recurrence coefficient `C_n`; `None` on a vanishing denominator.
fn coeff_c(p: &WilsonParams, n: i64) -> Option<Rat> {
    let s = p.sum();
    let den = (&s + rat_int(2 * n - 2)) * (&s + rat_int(2 * n - 1));
    if den.is_zero() {
        return None;
    }
    let num = rat_int(n)
        * (&p.b + &p.c + rat_int(n - 1))
        * (&p.b + &p.d + rat_int(n - 1))
        * (&p.c + &p.d + rat_int(n - 1));
    Some(num / den)
}

/// Closed-form J-fraction for the Wilson moments:
/// `g_n = A_n + C_n - a^2`, `b_n = A_{n-1} C_n`.
pub fn wilson_jfrac(p: &WilsonParams, depth: usize) -> Result<JFrac<Rat>, FamilyError> {
    assert!(depth >= 1);
    let a2 = &p.a * &p.a;
    let mut gammas = Vec::with_capacity(depth);
    let mut betas = Vec::with_capacity(depth - 1);
    for n in 0..depth as i64 {
        let an = coeff_a(p, n)
            .ok_or_else(|| FamilyError::ParameterPole(format!("2n+a+b+c+d vanishes at n={n}")))?;
        let cn = coeff_c(p, n)
            .ok_or_else(|| FamilyError::ParameterPole(format!("2n+a+b+c+d vanishes at n={n}")))?;
        gammas.push(&an + &cn - &a2);
        if n >= 1 {
            let an1 = coeff_a(p, n - 1).expect("checked above");
            betas.push(&an1 * &cn);
        }
    }
    Ok(JFrac::new(gammas, betas))
}

/// Closed-form S-fraction coefficients for `a = 0`:
/// odd `a_{2n+1} = (b+n)(c+n)(d+n)(b+c+d+n-1) / ((b+c+d+2n-1)(b+c+d+2n))`,
/// even `a_{2n+2} = (n+1)(b+c+n)(c+d+n)(b+d+n) / ((b+c+d+2n)(b+c+d+2n+1))`.
pub fn wilson_sfrac_a0(b: &Rat, c: &Rat, d: &Rat, depth: usize) -> Result<SFrac<Rat>, FamilyError> {
    let sigma = b + c + d;
    let mut alphas = Vec::with_capacity(depth);
    for i in 1..=depth {
        let n = ((i - 1) / 2) as i64;
        let alpha = if i % 2 == 1 {
            let den = (&sigma + rat_int(2 * n - 1)) * (&sigma + rat_int(2 * n));
            if den.is_zero() {
                return Err(FamilyError::ParameterPole(format!(
                    "b+c+d+{} or b+c+d+{} = 0",
                    2 * n - 1,
                    2 * n
                )));
            }
            (b + rat_int(n)) * (c + rat_int(n)) * (d + rat_int(n)) * (&sigma + rat_int(n - 1))
                / den
        } else {
            let den = (&sigma + rat_int(2 * n)) * (&sigma + rat_int(2 * n + 1));
            if den.is_zero() {
                return Err(FamilyError::ParameterPole(format!(
                    "b+c+d+{} or b+c+d+{} = 0",
                    2 * n,
                    2 * n + 1
                )));
            }
            rat_int(n + 1) * (b + c + rat_int(n)) * (c + d + rat_int(n)) * (b + d + rat_int(n))
                / den
        };
        alphas.push(alpha);
    }
    Ok(SFrac::new(alphas))
}

/// Ordinary generating function of the moments as the hypergeometric-style
/// sum `sum_n (a+b)_n (a+c)_n (a+d)_n t^n / [(a+b+c+d)_n prod_{l<=n} (1+(a+l)^2 t)]`.
pub fn wilson_ogf(p: &WilsonParams, order: usize) -> Result<TruncSeries<Rat>, FamilyError> {
    p.guard_sum_shifts(order)?;
    let s = p.sum();
    let mut values = Vec::with_capacity(order + 1);
    let mut nodes = Vec::with_capacity(order + 1);
    for n in 0..=order {
        let num = pochhammer(&(&p.a + &p.b), n)
            * pochhammer(&(&p.a + &p.c), n)
            * pochhammer(&(&p.a + &p.d), n);
        values.push(num / pochhammer(&s, n));
        let al = &p.a + rat_int(n as i64);
        nodes.push(&al * &al);
    }
    Ok(moment_ogf(&values, &nodes))
}

/// Orthogonality norm `L(W_n^2) = n! (a+b)_n (a+c)_n (a+d)_n (b+c)_n (b+d)_n (c+d)_n
/// / ((a+b+c+d+n-1)_n (a+b+c+d)_{2n})`.
pub fn wilson_norm(p: &WilsonParams, n: usize) -> Rat {
    let s = p.sum();
    let num = factorial(n)
        * pochhammer(&(&p.a + &p.b), n)
        * pochhammer(&(&p.a + &p.c), n)
        * pochhammer(&(&p.a + &p.d), n)
        * pochhammer(&(&p.b + &p.c), n)
        * pochhammer(&(&p.b + &p.d), n)
        * pochhammer(&(&p.c + &p.d), n);
    num / (pochhammer(&(&s + rat_int(n as i64 - 1)), n) * pochhammer(&s, 2 * n))
}

/// Variable set for the symbolic Wilson world.
pub fn wilson_vars() -> VarSet {
    VarSet::new(["a", "b", "c", "d", "y"])
}

/// Numerator triangle for the symbolic moments: entry `[k][j]` is the
/// polynomial `P_j` with `w_j(a+k) = P_j(a+k) / (a+b+c+d+k)_j`, built from
/// `P_{j+1}(a) = (a+b)(a+c)(a+d) P_j(a+1) - a^2 (a+b+c+d+j) P_j(a)`.
pub fn wilson_numerator_triangle(vars: &VarSet, n_max: usize) -> Vec<Vec<MPoly>> {
    let a = vars.var("a");
    let b = vars.var("b");
    let c = vars.var("c");
    let d = vars.var("d");
    let s = &(&(&a + &b) + &c) + &d;
    let mut tri: Vec<Vec<MPoly>> = (0..=n_max).map(|_| vec![vars.one()]).collect();
    for j in 0..n_max {
        for k in 0..=(n_max - j - 1) {
            let ak = &a + &vars.int(k as i64);
            let sk = &s + &vars.int(k as i64);
            let prefactor = &(&(&ak + &b) * &(&ak + &c)) * &(&ak + &d);
            let next = &(&prefactor * &tri[k + 1][j])
                - &(&(&(&ak * &ak) * &(&sk + &vars.int(j as i64))) * &tri[k][j]);
            tri[k].push(next);
        }
    }
    tri
}

/// Symbolic check of the functional identity
/// `L(y^n prod_{l<k} ((a+l)^2 + y)) = (a+b)_k (a+c)_k (a+d)_k / (a+b+c+d)_k w_n(a+k)`,
/// cleared of denominators: both sides are multiplied by `(a+b+c+d)_{n+k}`.
pub fn lemma_pair_product_check(n_max: usize, k_max: usize) -> Report {
    let mut report = Report::new("wilson-pair-moments");
    let vars = wilson_vars();
    let a = vars.var("a");
    let b = vars.var("b");
    let c = vars.var("c");
    let d = vars.var("d");
    let y = vars.var("y");
    let s = &(&(&a + &b) + &c) + &d;
    let tri = wilson_numerator_triangle(&vars, n_max + k_max);
    for n in 0..=n_max {
        for k in 0..=k_max {
            let mut poly = y.pow(n);
            for l in 0..k {
                let al = &a + &vars.int(l as i64);
                poly = &poly * &(&(&al * &al) + &y);
            }
            let coeffs = poly.coeffs_in("y");
            let mut lhs = vars.zero();
            for (j, cj) in coeffs.iter().enumerate() {
                if cj.is_zero() {
                    continue;
                }
                let shift = &s + &vars.int(j as i64);
                lhs = &lhs + &(&(cj * &tri[0][j]) * &pochhammer(&shift, n + k - j));
            }
            let rhs = &(&(&pochhammer(&(&a + &b), k) * &pochhammer(&(&a + &c), k))
                * &pochhammer(&(&a + &d), k))
                * &tri[k][n];
            report.check_eq(format!("shifted-moment identity n={n} k={k}"), &lhs, &rhs);
        }
    }
    report
}

/// Symbolic check of the mixed conjugate-pair product
/// `L(prod_{l<m}((a+l)^2+y) prod_{l<n}((b+l)^2+y)) =
///  (a+b)_{m+n} (a+c)_m (a+d)_m (b+c)_n (b+d)_n / (a+b+c+d)_{m+n}`,
/// cleared of denominators the same way.
pub fn mixed_pair_product_check(m_max: usize, n_max: usize) -> Report {
    let mut report = Report::new("wilson-mixed-moments");
    let vars = wilson_vars();
    let a = vars.var("a");
    let b = vars.var("b");
    let c = vars.var("c");
    let d = vars.var("d");
    let y = vars.var("y");
    let s = &(&(&a + &b) + &c) + &d;
    let tri = wilson_numerator_triangle(&vars, m_max + n_max);
    for m in 0..=m_max {
        for n in 0..=n_max {
            let mut poly = vars.one();
            for l in 0..m {
                let al = &a + &vars.int(l as i64);
                poly = &poly * &(&(&al * &al) + &y);
            }
            for l in 0..n {
                let bl = &b + &vars.int(l as i64);
                poly = &poly * &(&(&bl * &bl) + &y);
            }
            let coeffs = poly.coeffs_in("y");
            let mut lhs = vars.zero();
            for (j, cj) in coeffs.iter().enumerate() {
                if cj.is_zero() {
                    continue;
                }
                let shift = &s + &vars.int(j as i64);
                lhs = &lhs + &(&(cj * &tri[0][j]) * &pochhammer(&shift, m + n - j));
            }
            let rhs = &(&(&(&pochhammer(&(&a + &b), m + n) * &pochhammer(&(&a + &c), m))
                * &pochhammer(&(&a + &d), m))
                * &pochhammer(&(&b + &c), n))
                * &pochhammer(&(&b + &d), n);
            report.check_eq(format!("mixed pair product m={m} n={n}"), &lhs, &rhs);
        }
    }
    report
}

fn admissible_point(v: &[Rat], depth: usize) -> bool {
    let p = WilsonParams::new(v[0].clone(), v[1].clone(), v[2].clone(), v[3].clone());
    let s = p.sum();
    // every shifted-sum denominator through the working range must survive,
    // and the Hankel route needs nondegenerate recurrence coefficients
    for k in -2i64..=(2 * depth as i64 + 2) {
        if (&s + rat_int(k)).is_zero() {
            return false;
        }
    }
    for n in 0..=depth as i64 {
        match (coeff_a(&p, n), coeff_c(&p, n)) {
            (Some(an), Some(cn)) => {
                if an.is_zero() || (n >= 1 && cn.is_zero()) {
                    return false;
                }
            }
            _ => return false,
        }
    }
    // the a = 0 specialization must stay nondegenerate as well: all closed
    // S-fraction numerators and denominators through the depth
    let sigma = &p.b + &p.c + &p.d;
    for k in -2i64..=(2 * depth as i64 + 2) {
        if (&sigma + rat_int(k)).is_zero() {
            return false;
        }
    }
    for n in 0..=depth as i64 {
        for f in [
            &p.b + rat_int(n),
            &p.c + rat_int(n),
            &p.d + rat_int(n),
            &p.b + &p.c + rat_int(n),
            &p.c + &p.d + rat_int(n),
            &p.b + &p.d + rat_int(n),
        ] {
            if f.is_zero() {
                return false;
            }
        }
    }
    true
}

/// Random admissible Wilson parameters.
pub fn random_wilson(rng: &mut rand_chacha::ChaCha8Rng, depth: usize) -> WilsonParams {
    let v = sample_point(rng, 4, |v| admissible_point(v, depth));
    WilsonParams::new(v[0].clone(), v[1].clone(), v[2].clone(), v[3].clone())
}

/// Two-route coherence at seeded random rational parameters: the shift
/// recurrence, the closed-form J-fraction expansion, and the generating
/// function sum must agree through `t^depth`; at `a = 0` the inverted
/// S-fraction must match its closed form.
pub fn wilson_coherence_check(seed: u64, depth: usize, points: usize) -> Report {
    let mut report = Report::with_seed("wilson-coherence", seed);
    let mut rng = seeded_rng(seed, "wilson-coherence");
    for i in 0..points {
        let p = random_wilson(&mut rng, depth + 1);
        let moments = wilson_moments(&p, depth).expect("admissible point");
        let jf = wilson_jfrac(&p, depth + 1).expect("admissible point");
        let expanded = jf.to_series_checked(depth).expect("depth provisioned");
        report.check_eq(
            format!("recurrence vs J-fraction, point {i}"),
            &TruncSeries::from_coeffs(moments.clone()),
            &expanded,
        );
        let ogf = wilson_ogf(&p, depth).expect("admissible point");
        report.check_eq(
            format!("recurrence vs generating function, point {i}"),
            &TruncSeries::from_coeffs(moments),
            &ogf,
        );

        // a = 0 specialization: inverted S-fraction matches the closed form
        let p0 = WilsonParams::new(rat_int(0), p.b.clone(), p.c.clone(), p.d.clone());
        let m0 = wilson_moments(&p0, depth + 1).expect("admissible point");
        let mu = MomentFunctional::new(m0, "y");
        match (
            series_to_sfrac(&mu, depth),
            wilson_sfrac_a0(&p.b, &p.c, &p.d, depth),
        ) {
            (Ok(inverted), Ok(closed)) => {
                report.check_eq(format!("a=0 S-fraction closed form, point {i}"), &inverted, &closed);
            }
            (inv, closed) => {
                report.fail(
                    format!("a=0 S-fraction closed form, point {i}"),
                    format!("inversion: {inv:?}, closed form: {closed:?}"),
                );
            }
        }
    }
    report
}

/// Orthogonality of the recurrence-built monic polynomials against the
/// moment functional, with the closed-form diagonal, plus the coefficient
/// identity `b_n = [x^{n-1}] W_n - [x^n] W_{n+1}`.
pub fn wilson_orthogonality_check(seed: u64, n_max: usize, points: usize) -> Report {
    let mut report = Report::with_seed("wilson-orthogonality", seed);
    let mut rng = seeded_rng(seed, "wilson-orthogonality");
    for i in 0..points {
        let p = random_wilson(&mut rng, n_max + 2);
        let moments = wilson_moments(&p, 2 * n_max).expect("admissible point");
        let mu = MomentFunctional::new(moments, "y");
        let jf = wilson_jfrac(&p, n_max + 2).expect("admissible point");
        let rec = jf.to_recurrence();
        let polys = monic_polys(&rec, n_max).expect("depth provisioned");
        let norms: Vec<Rat> = (0..=n_max).map(|n| wilson_norm(&p, n)).collect();
        match crate::momentlab::orthogonality_check(&mu, &polys, &norms) {
            Ok(orth) => report.check(
                format!("orthogonality with closed-form diagonal, point {i}"),
                orth.all_passed(),
            ),
            Err(e) => report.fail(format!("orthogonality, point {i}"), e.to_string()),
        }
        // b_n = [x^{n-1}] W_n - [x^n] W_{n+1}
        let deep = monic_polys(&wilson_jfrac(&p, n_max + 2).unwrap().to_recurrence(), n_max + 1)
            .expect("depth provisioned");
        for n in 1..=n_max {
            let lhs = rec.b[n].clone();
            let rhs = deep[n].coeff(n - 1) - deep[n + 1].coeff(n);
            report.check_eq(format!("diagonal from coefficients n={n}, point {i}"), &lhs, &rhs);
        }
    }
    report
}

/// Exponential generating function identities for `a = 0` and `a = 1/2`:
///
/// `sum w_n(0) t^{2n}/(2n)! = 3F2(b, c, d; b+c+d, 1/2; sin^2(t/2))` and
/// `sum w_n(1/2) t^{2n+1}/(2n+1)! = 2 sin(t/2) 3F2(b+1/2, c+1/2, d+1/2;
/// b+c+d+1/2, 3/2; sin^2(t/2))`.
pub fn wilson_egf_check(a_half: bool, b: &Rat, c: &Rat, d: &Rat, order: usize) -> Report {
    let label = if a_half { "a=1/2" } else { "a=0" };
    let mut report = Report::new(format!("wilson-egf {label} b={b} c={c} d={d}"));
    let a = if a_half { rat(1, 2) } else { rat_int(0) };
    let p = WilsonParams::new(a, b.clone(), c.clone(), d.clone());
    let n_terms = order / 2;
    let moments = match wilson_moments(&p, n_terms) {
        Ok(m) => m,
        Err(e) => {
            report.fail("moment computation", e.to_string());
            return report;
        }
    };
    let mut lhs = TruncSeries::zero(&rat_int(0), order);
    let mut coeffs = vec![rat_int(0); order + 1];
    if a_half {
        for (n, w) in moments.iter().enumerate() {
            if 2 * n + 1 <= order {
                coeffs[2 * n + 1] = w / factorial(2 * n + 1);
            }
        }
    } else {
        for (n, w) in moments.iter().enumerate() {
            if 2 * n <= order {
                coeffs[2 * n] = w / factorial(2 * n);
            }
        }
    }
    lhs = lhs.add(&TruncSeries::from_coeffs(coeffs));

    let arg = trig_arg(TrigArg::SinHalfSq, order);
    let rhs = if a_half {
        let upper = [b + rat(1, 2), c + rat(1, 2), d + rat(1, 2)];
        let lower = [b + c + d + rat(1, 2), rat(3, 2)];
        match hyper_series(&upper, &lower, &arg) {
            Ok(h) => h.mul(&sin_at(&rat(1, 2), order).scale(&rat_int(2))),
            Err(e) => {
                report.fail("hypergeometric truncation", e.to_string());
                return report;
            }
        }
    } else {
        let upper = [b.clone(), c.clone(), d.clone()];
        let lower = [b + c + d, rat(1, 2)];
        match hyper_series(&upper, &lower, &arg) {
            Ok(h) => h,
            Err(e) => {
                report.fail("hypergeometric truncation", e.to_string());
                return report;
            }
        }
    };
    report.check_eq(format!("series equality to order {order}"), &lhs, &rhs);

    if !a_half {
        // order-2 coefficient by hand: w_1(0)/2 = bcd/(2(b+c+d))
        let w1_half = (b * c * d) / ((b + c + d) * rat_int(2));
        report.check_eq("order-2 coefficient", &lhs.coeff(2), &w1_half);
        report.check_eq("order-2 coefficient closed form", &rhs.coeff(2), &w1_half);
    }
    report
}

/// Sanity instance of the generating-function route used by the only
/// moment example small enough to expand by hand: `w_1 = gamma_0` of the
/// J-fraction, i.e. `(a+b)(a+c)(a+d)/(a+b+c+d) - a^2`.
pub fn wilson_first_moment(p: &WilsonParams) -> Result<Rat, FamilyError> {
    p.guard_sum_shifts(1)?;
    Ok((&p.a + &p.b) * (&p.a + &p.c) * (&p.a + &p.d) / p.sum() - &p.a * &p.a)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> WilsonParams {
        WilsonParams::new(rat(1, 2), rat(1, 3), rat(3, 4), rat(2, 5))
    }

    #[test]
    fn first_moments() {
        let p = sample();
        let m = wilson_moments(&p, 2).unwrap();
        assert_eq!(m[0], rat_int(1));
        assert_eq!(m[1], wilson_first_moment(&p).unwrap());
        // one recurrence step by hand
        let ap = WilsonParams::new(&p.a + rat_int(1), p.b.clone(), p.c.clone(), p.d.clone());
        let w1_shift = wilson_first_moment(&ap).unwrap();
        let expected = (&p.a + &p.b) * (&p.a + &p.c) * (&p.a + &p.d) / p.sum() * w1_shift
            - &p.a * &p.a * &m[1];
        assert_eq!(m[2], expected);
    }

    #[test]
    fn jfrac_leading_gamma_is_first_moment() {
        let p = sample();
        let jf = wilson_jfrac(&p, 2).unwrap();
        assert_eq!(jf.gammas()[0], wilson_first_moment(&p).unwrap());
        let series = jf.to_series_checked(1).unwrap();
        assert_eq!(series.coeff(0), rat_int(1));
        assert_eq!(series.coeff(1), wilson_first_moment(&p).unwrap());
    }

    #[test]
    fn pole_guard_fires() {
        let p = WilsonParams::new(rat_int(1), rat_int(1), rat_int(-1), rat_int(-1));
        assert!(matches!(
            wilson_moments(&p, 3),
            Err(FamilyError::ParameterPole(_))
        ));
    }

    #[test]
    fn ogf_matches_recurrence_small() {
        let p = sample();
        let m = wilson_moments(&p, 5).unwrap();
        let ogf = wilson_ogf(&p, 5).unwrap();
        assert_eq!(ogf.coeffs(), &m[..]);
    }

    #[test]
    fn symbolic_numerator_matches_specialization() {
        let vars = wilson_vars();
        let tri = wilson_numerator_triangle(&vars, 3);
        let p = sample();
        let s = p.sum();
        let point = [
            p.a.clone(),
            p.b.clone(),
            p.c.clone(),
            p.d.clone(),
            rat_int(0),
        ];
        let moments = wilson_moments(&p, 3).unwrap();
        for (j, m) in moments.iter().enumerate() {
            let denominator = pochhammer(&s, j);
            assert_eq!(tri[0][j].eval(&point), m * denominator);
        }
    }

    #[test]
    fn pair_product_identities_symbolic() {
        assert!(lemma_pair_product_check(2, 3).passed());
        assert!(mixed_pair_product_check(2, 2).passed());
    }

    #[test]
    fn coherence_at_seeded_points() {
        let report = wilson_coherence_check(17, 6, 2);
        assert!(report.passed(), "{}", report.render());
    }

    #[test]
    fn ogf_first_moment_is_w1() {
        let p = sample();
        let ogf = wilson_ogf(&p, 1).unwrap();
        assert_eq!(ogf.coeff(1), wilson_first_moment(&p).unwrap());
    }
}
