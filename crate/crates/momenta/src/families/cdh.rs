//! Continuous dual Hahn moments `mu_n(a, b, c)` and polynomials.
//!
//! The moments satisfy `mu_{n+1}(a) = (a+b)(a+c) mu_n(a+1) - a^2 mu_n(a)`
//! with `mu_0 = 1`; this is a polynomial recurrence, so the whole module is
//! generic over the coefficient ring and the key identities are checked
//! fully symbolically. Specializations: `mu_n(0,1,1)` are Genocchi numbers
//! `G_{2n+2}` and `mu_n(1,1,1) = G_{2n+4}`.

use crate::contfrac::{JFrac, SFrac};
use crate::families::sequences::{genocchi_upto, median_genocchi_upto};
use crate::fps::{hyper_series, sin_at, trig_arg, TrigArg, TruncSeries};
use crate::momentlab::{MomentFunctional, UnivPoly};
use crate::mpoly::{MPoly, VarSet};
use crate::report::Report;
use crate::ring::{binomial, factorial, pochhammer, rat, rat_int, Rat, Ring};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CdhParams<R: Ring> {
    pub a: R,
    pub b: R,
    pub c: R,
}

impl<R: Ring> CdhParams<R> {
    pub fn new(a: R, b: R, c: R) -> Self {
        CdhParams { a, b, c }
    }
}

impl CdhParams<Rat> {
    pub fn rational(a: Rat, b: Rat, c: Rat) -> Self {
        CdhParams { a, b, c }
    }
}

/// Variable set for the symbolic parameters.
pub fn cdh_vars() -> VarSet {
    VarSet::new(["a", "b", "c"])
}

/// Fully symbolic parameters over `cdh_vars()`.
pub fn cdh_symbolic() -> CdhParams<MPoly> {
    let vars = cdh_vars();
    CdhParams::new(vars.var("a"), vars.var("b"), vars.var("c"))
}

/// `mu_0..mu_{n_max}` over the memoized `(shift, index)` triangle.
pub fn cdh_moments<R: Ring>(p: &CdhParams<R>, n_max: usize) -> Vec<R> {
    let one = p.a.one_like();
    let mut tri: Vec<Vec<R>> = (0..=n_max).map(|_| vec![one.clone()]).collect();
    for j in 0..n_max {
        for k in 0..=(n_max - j - 1) {
            let ak = p.a.add_ref(&p.a.from_i64_like(k as i64));
            let prefactor = ak.add_ref(&p.b).mul_ref(&ak.add_ref(&p.c));
            let next = prefactor
                .mul_ref(&tri[k + 1][j])
                .sub_ref(&ak.mul_ref(&ak).mul_ref(&tri[k][j]));
            tri[k].push(next);
        }
    }
    std::mem::take(&mut tri[0])
}

/// Closed-form J-fraction:
/// `g_n = (a+n)(b+n) + (b+n)(c+n) + (c+n)(a+n) - n(n+1)`,
/// `b_n = n (a+b+n-1) (b+c+n-1) (c+a+n-1)`.
pub fn cdh_jfrac<R: Ring>(p: &CdhParams<R>, depth: usize) -> JFrac<R> {
    assert!(depth >= 1);
    let mut gammas = Vec::with_capacity(depth);
    let mut betas = Vec::with_capacity(depth - 1);
    for n in 0..depth as i64 {
        let an = p.a.add_ref(&p.a.from_i64_like(n));
        let bn = p.b.add_ref(&p.b.from_i64_like(n));
        let cn = p.c.add_ref(&p.c.from_i64_like(n));
        let gamma = an
            .mul_ref(&bn)
            .add_ref(&bn.mul_ref(&cn))
            .add_ref(&cn.mul_ref(&an))
            .sub_ref(&p.a.from_i64_like(n * (n + 1)));
        gammas.push(gamma);
        if n >= 1 {
            let ab = p.a.add_ref(&p.b).add_ref(&p.a.from_i64_like(n - 1));
            let bc = p.b.add_ref(&p.c).add_ref(&p.a.from_i64_like(n - 1));
            let ca = p.c.add_ref(&p.a).add_ref(&p.a.from_i64_like(n - 1));
            betas.push(p.a.from_i64_like(n).mul_ref(&ab).mul_ref(&bc).mul_ref(&ca));
        }
    }
    JFrac::new(gammas, betas)
}

/// S-fraction at `a = 0`: `a_{2n+1} = (b+n)(c+n)`, `a_{2n+2} = (n+1)(b+c+n)`.
pub fn cdh_sfrac_a0<R: Ring>(b: &R, c: &R, depth: usize) -> SFrac<R> {
    let alphas = (1..=depth)
        .map(|i| {
            let n = ((i - 1) / 2) as i64;
            if i % 2 == 1 {
                b.add_ref(&b.from_i64_like(n)).mul_ref(&c.add_ref(&c.from_i64_like(n)))
            } else {
                b.from_i64_like(n + 1)
                    .mul_ref(&b.add_ref(c).add_ref(&b.from_i64_like(n)))
            }
        })
        .collect();
    SFrac::new(alphas)
}

/// Monic polynomial `p_n` in the even variable, from the terminating sum
/// `p_n(y) = sum_k (-1)^{n-k} C(n,k) (a+b+k)_{n-k} (a+c+k)_{n-k}
///           prod_{l<k} ((a+l)^2 + y)`.
pub fn cdh_poly<R: Ring>(p: &CdhParams<R>, n: usize) -> UnivPoly<R> {
    let proto = &p.a;
    let mut total = UnivPoly::zero(proto);
    let mut basis = UnivPoly::one(proto);
    for k in 0..=n {
        let sign = if (n - k) % 2 == 0 { 1 } else { -1 };
        let coeff = proto
            .from_rat_like(&binomial(n as i64, k as i64))
            .mul_ref(&proto.from_i64_like(sign))
            .mul_ref(&pochhammer(
                &p.a.add_ref(&p.b).add_ref(&proto.from_i64_like(k as i64)),
                n - k,
            ))
            .mul_ref(&pochhammer(
                &p.a.add_ref(&p.c).add_ref(&proto.from_i64_like(k as i64)),
                n - k,
            ));
        total = total.add(&basis.scale(&coeff));
        // extend the basis product with ((a+k)^2 + y)
        let ak = p.a.add_ref(&proto.from_i64_like(k as i64));
        basis = basis.mul_x_minus(&ak.mul_ref(&ak).neg_ref());
    }
    total
}

/// Orthogonality norm `n! (a+b)_n (a+c)_n (b+c)_n`.
pub fn cdh_norm<R: Ring>(p: &CdhParams<R>, n: usize) -> R {
    p.a.from_rat_like(&factorial(n))
        .mul_ref(&pochhammer(&p.a.add_ref(&p.b), n))
        .mul_ref(&pochhammer(&p.a.add_ref(&p.c), n))
        .mul_ref(&pochhammer(&p.b.add_ref(&p.c), n))
}

/// Gandhi's identity: `mu_n(1,1,1) = G_{2n+4}`.
pub fn gandhi_check(n_max: usize) -> Report {
    let mut report = Report::new("gandhi");
    let p = CdhParams::rational(rat_int(1), rat_int(1), rat_int(1));
    let mu = cdh_moments(&p, n_max);
    let g = genocchi_upto(n_max + 1);
    for n in 0..=n_max {
        report.check_eq(format!("mu_{n}(1,1,1) = G_{}", 2 * n + 4), &mu[n], &g[n + 1]);
    }
    report
}

/// Genocchi identification: `mu_n(0,1,1) = G_{2n+2}`, plus the `a = 0`
/// S-fraction coefficients at `b = c = 1`.
pub fn genocchi_identification_check(n_max: usize) -> Report {
    let mut report = Report::new("cdh-genocchi");
    let p = CdhParams::rational(rat_int(0), rat_int(1), rat_int(1));
    let mu = cdh_moments(&p, n_max);
    let g = genocchi_upto(n_max);
    report.check_eq("mu_n(0,1,1) = G_{2n+2}", &mu, &g);
    let s = cdh_sfrac_a0(&rat_int(1), &rat_int(1), 2 * n_max + 2);
    for (k, alpha) in s.alphas().iter().enumerate().take(8) {
        let m = ((k + 2) / 2) as i64;
        let expected = if k % 2 == 0 { rat_int(m * m) } else { rat_int(m * (m + 1)) };
        report.check_eq(format!("S-fraction coefficient {}", k + 1), alpha, &expected);
    }
    report.check_eq(
        "S-fraction expansion reproduces the moments",
        &s.to_series_checked(n_max).unwrap(),
        &TruncSeries::from_coeffs(mu),
    );
    report
}

/// Fully symbolic two-route agreement: recurrence moments vs the closed
/// J-fraction expansion, in the polynomial ring over (a, b, c).
pub fn cdh_jfrac_symbolic_check(depth: usize) -> Report {
    let mut report = Report::new("cdh-jfrac-symbolic");
    let p = cdh_symbolic();
    let order = depth - 1;
    let mu = cdh_moments(&p, order);
    let jf = cdh_jfrac(&p, depth);
    let series = jf.to_series_checked(order).expect("depth provisioned");
    for (n, m) in mu.iter().enumerate() {
        report.check_eq(format!("moment {n}"), m, &series.coeff(n));
    }
    report
}

/// Fully symbolic orthogonality `L(p_m p_n) = n! (a+b)_n (a+c)_n (b+c)_n delta`.
pub fn cdh_orthogonality_symbolic_check(n_max: usize) -> Report {
    let mut report = Report::new("cdh-orthogonality-symbolic");
    let p = cdh_symbolic();
    let mu = MomentFunctional::new(cdh_moments(&p, 2 * n_max), "y");
    let polys: Vec<UnivPoly<MPoly>> = (0..=n_max).map(|n| cdh_poly(&p, n)).collect();
    let norms: Vec<MPoly> = (0..=n_max).map(|n| cdh_norm(&p, n)).collect();
    match crate::momentlab::orthogonality_check(&mu, &polys, &norms) {
        Ok(orth) => {
            for (m, n, ok) in &orth.pairs {
                report.check(format!("L(p_{m} p_{n})"), *ok);
            }
        }
        Err(e) => report.fail("orthogonality", e.to_string()),
    }
    report
}

/// Exponential generating function identities:
/// `sum mu_n(0,b,c) t^{2n}/(2n)! = 2F1(b, c; 1/2; sin^2(t/2))` and
/// `sum mu_n(1/2,b,c) t^{2n+1}/(2n+1)! = 2 sin(t/2) 2F1(b+1/2, c+1/2; 3/2; sin^2(t/2))`.
pub fn cdh_egf_check(a_half: bool, b: &Rat, c: &Rat, order: usize) -> Report {
    let label = if a_half { "a=1/2" } else { "a=0" };
    let mut report = Report::new(format!("cdh-egf {label} b={b} c={c}"));
    let a = if a_half { rat(1, 2) } else { rat_int(0) };
    let p = CdhParams::rational(a, b.clone(), c.clone());
    let mu = cdh_moments(&p, order / 2);
    let mut coeffs = vec![rat_int(0); order + 1];
    for (n, m) in mu.iter().enumerate() {
        let idx = if a_half { 2 * n + 1 } else { 2 * n };
        if idx <= order {
            coeffs[idx] = m / factorial(idx);
        }
    }
    let lhs = TruncSeries::from_coeffs(coeffs);
    let arg = trig_arg(TrigArg::SinHalfSq, order);
    let rhs = if a_half {
        let h = hyper_series(&[b + rat(1, 2), c + rat(1, 2)], &[rat(3, 2)], &arg);
        match h {
            Ok(h) => h.mul(&sin_at(&rat(1, 2), order).scale(&rat_int(2))),
            Err(e) => {
                report.fail("hypergeometric truncation", e.to_string());
                return report;
            }
        }
    } else {
        match hyper_series(&[b.clone(), c.clone()], &[rat(1, 2)], &arg) {
            Ok(h) => h,
            Err(e) => {
                report.fail("hypergeometric truncation", e.to_string());
                return report;
            }
        }
    };
    report.check_eq(format!("series equality to order {order}"), &lhs, &rhs);
    report
}

/// The Genocchi exponential generating function pair:
/// `1 + sum G_{2n+2} t^{2n}/(2n)! = 2F1(1, 1; 1/2; sin^2(t/2))
///  = sec^2(t/2) 2F1(1, -1/2; 1/2; -tan^2(t/2))`.
pub fn genocchi_egf_pair_check(order: usize) -> Report {
    let mut report = Report::new("genocchi-egf-pair");
    let g = genocchi_upto(order / 2);
    let mut coeffs = vec![rat_int(0); order + 1];
    for (n, gn) in g.iter().enumerate() {
        if 2 * n <= order {
            coeffs[2 * n] = gn / factorial(2 * n);
        }
    }
    let lhs = TruncSeries::from_coeffs(coeffs);
    let gauss = hyper_series(
        &[rat_int(1), rat_int(1)],
        &[rat(1, 2)],
        &trig_arg(TrigArg::SinHalfSq, order),
    )
    .unwrap();
    report.check_eq("Gauss form", &lhs, &gauss);

    // sec^2(t/2) and -tan^2(t/2) are exact rational series
    let cos = crate::fps::cos_at(&rat(1, 2), order);
    let sec2 = cos.mul(&cos).reciprocal().unwrap();
    let tan2 = sin_at(&rat(1, 2), order)
        .div(&cos)
        .unwrap();
    let neg_tan2 = tan2.mul(&tan2).neg();
    let pfaff = hyper_series(&[rat_int(1), rat(-1, 2)], &[rat(1, 2)], &neg_tan2)
        .unwrap()
        .mul(&sec2);
    report.check_eq("transformed secant form", &lhs, &pfaff);
    report
}

/// The two classical closed 2F1 evaluations with argument `sin^2(t/2)`:
/// `cos(at/2)/cos(t/2)` with lower parameter 1/2 and
/// `sin(at/2)/(a sin(t/2))` with lower parameter 3/2.
pub fn trig_special_check(a: &Rat, order: usize) -> Report {
    let mut report = Report::new(format!("cdh-trig-specials a={a}"));
    let arg = trig_arg(TrigArg::SinHalfSq, order);
    let upper = [
        (rat_int(1) - a) / rat_int(2),
        (rat_int(1) + a) / rat_int(2),
    ];
    let half_a = a / rat_int(2);

    let cos_lhs = crate::fps::cos_at(&half_a, order)
        .div(&crate::fps::cos_at(&rat(1, 2), order))
        .unwrap();
    let cos_rhs = hyper_series(&upper, &[rat(1, 2)], &arg).unwrap();
    report.check_eq("cosine ratio", &cos_lhs, &cos_rhs);

    // numerator and denominator both vanish at t = 0: divide out one t first
    let num = sin_at(&half_a, order).shift_down(1);
    let den = sin_at(&rat(1, 2), order).scale(a).shift_down(1);
    let sin_lhs = num.div(&den).unwrap();
    let sin_rhs = hyper_series(&upper, &[rat(3, 2)], &arg)
        .unwrap()
        .truncate(order - 1);
    report.check_eq("sine ratio", &sin_lhs, &sin_rhs);
    report
}

/// Median Genocchi bridge: shifting the `(1/2, 1/2, 1/2)` moments by
/// `d = -1/4` yields `H_1, H_3, H_5, ...`.
pub fn median_shift_check(n_max: usize) -> Report {
    let mut report = Report::new("cdh-median-shift");
    let p = CdhParams::rational(rat(1, 2), rat(1, 2), rat(1, 2));
    let mu = MomentFunctional::new(cdh_moments(&p, n_max), "y");
    let shifted = mu.shift(&rat(-1, 4));
    let h = median_genocchi_upto(n_max);
    for n in 0..=n_max {
        report.check_eq(
            format!("shifted moment {n} equals H_{}", 2 * n + 1),
            &shifted.moment(n),
            &h[n],
        );
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mpoly::VarSet;

    #[test]
    fn first_moment_symbolic() {
        let p = cdh_symbolic();
        let mu = cdh_moments(&p, 1);
        let vars = cdh_vars();
        let expected = &(&vars.var("a") + &vars.var("b")) * &(&vars.var("a") + &vars.var("c"));
        let expected = &expected - &vars.var("a").pow(2);
        assert_eq!(mu[1], expected);
    }

    #[test]
    fn printed_small_polynomials() {
        let p = cdh_symbolic();
        let vars = cdh_vars();
        let (a, b, c) = (vars.var("a"), vars.var("b"), vars.var("c"));
        let p1 = cdh_poly(&p, 1);
        // p_1(y) = y - (ab + bc + ca)
        let e2 = &(&(&a * &b) + &(&b * &c)) + &(&c * &a);
        assert_eq!(p1.coeff(1), vars.one());
        assert_eq!(p1.coeff(0), e2.neg_poly());

        // p_2(y) = y^2 - [1 + 2 e1 + 2 e2] y + e2^2 + e1 e2 + e3 + e2
        let p2 = cdh_poly(&p, 2);
        let e1 = &(&a + &b) + &c;
        let e3 = &(&a * &b) * &c;
        let lin = &(&vars.one() + &e1.scale(&rat_int(2))) + &e2.scale(&rat_int(2));
        let cst = &(&(&e2.pow(2) + &(&e1 * &e2)) + &e3) + &e2;
        assert_eq!(p2.coeff(2), vars.one());
        assert_eq!(p2.coeff(1), lin.neg_poly());
        assert_eq!(p2.coeff(0), cst);
    }

    #[test]
    fn gandhi_small() {
        let report = gandhi_check(4);
        assert!(report.passed(), "{}", report.render());
        // mu_1(1,1,1) = 4 mu_0(2,1,1) - 1 = 3
        let p = CdhParams::rational(rat_int(1), rat_int(1), rat_int(1));
        assert_eq!(cdh_moments(&p, 1)[1], rat_int(3));
    }

    #[test]
    fn genocchi_identification_small() {
        let report = genocchi_identification_check(6);
        assert!(report.passed(), "{}", report.render());
    }

    #[test]
    fn jfrac_symbolic_small() {
        let report = cdh_jfrac_symbolic_check(4);
        assert!(report.passed(), "{}", report.render());
    }

    #[test]
    fn orthogonality_symbolic_small() {
        let report = cdh_orthogonality_symbolic_check(2);
        assert!(report.passed(), "{}", report.render());
    }

    #[test]
    fn egf_identities_small() {
        assert!(cdh_egf_check(false, &rat_int(1), &rat_int(1), 8).passed());
        assert!(cdh_egf_check(true, &rat(1, 3), &rat(2, 5), 9).passed());
        assert!(genocchi_egf_pair_check(8).passed());
        assert!(trig_special_check(&rat(1, 3), 8).passed());
    }

    #[test]
    fn median_shift_small() {
        let report = median_shift_check(5);
        assert!(report.passed(), "{}", report.render());
    }

    #[test]
    fn vars_are_fixed() {
        assert_eq!(cdh_vars(), VarSet::new(["a", "b", "c"]));
    }
}
