//! Property suites over random rational data.

use momenta::contfrac::{
    contract, dyck_moments, motzkin_moments, series_to_jfrac, ContractionKind, JFrac, SFrac,
};
use momenta::fps::TruncSeries;
use momenta::momentlab::MomentFunctional;
use momenta::mpoly::VarSet;
use momenta::ring::{pochhammer, qpochhammer, rat, Rat, Ring};
use proptest::prelude::*;

fn arb_rat() -> impl Strategy<Value = Rat> {
    (-20i64..=20, 1i64..=9).prop_map(|(n, d)| rat(n, d))
}

fn arb_nonzero_rat() -> impl Strategy<Value = Rat> {
    arb_rat().prop_filter("nonzero", |r| !Ring::is_zero(r))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn pochhammer_addition_law(base in arb_rat(), m in 0usize..=10, n in 0usize..=10) {
        let lhs = pochhammer(&base, m + n);
        let shifted = &base + rat(m as i64, 1);
        let rhs = pochhammer(&base, m) * pochhammer(&shifted, n);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn qpochhammer_addition_law(a in arb_rat(), q in arb_rat(), m in 0usize..=8, n in 0usize..=8) {
        let lhs = qpochhammer(&a, &q, m + n);
        let shifted = &a * momenta::ring::ring_pow(&q, m);
        let rhs = qpochhammer(&a, &q, m) * qpochhammer(&shifted, &q, n);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn mpoly_eval_is_homomorphism(
        coeffs_p in proptest::collection::vec((arb_rat(), 0u16..4, 0u16..4), 1..6),
        coeffs_q in proptest::collection::vec((arb_rat(), 0u16..4, 0u16..4), 1..6),
        x in arb_rat(),
        y in arb_rat(),
    ) {
        let vars = VarSet::new(["x", "y"]);
        let build = |terms: &[(Rat, u16, u16)]| {
            let mut p = vars.zero();
            for (c, ex, ey) in terms {
                let term = vars.var("x").pow(*ex as usize).mul_poly(&vars.var("y").pow(*ey as usize));
                p = p.add_poly(&term.scale(c));
            }
            p
        };
        let p = build(&coeffs_p);
        let q = build(&coeffs_q);
        let point = [x, y];
        prop_assert_eq!(p.mul_poly(&q).eval(&point), p.eval(&point) * q.eval(&point));
        prop_assert_eq!(p.add_poly(&q).eval(&point), p.eval(&point) + q.eval(&point));
    }

    #[test]
    fn exp_contract(coeffs in proptest::collection::vec(arb_rat(), 8)) {
        let mut full = vec![rat(0, 1)];
        full.extend(coeffs);
        let f = TruncSeries::from_coeffs(full);
        let product = f.exp().unwrap().mul(&f.neg().exp().unwrap());
        prop_assert_eq!(product, TruncSeries::one(&rat(0, 1), 8));
    }

    #[test]
    fn reciprocal_contract(c0 in arb_nonzero_rat(), rest in proptest::collection::vec(arb_rat(), 7)) {
        let mut coeffs = vec![c0];
        coeffs.extend(rest);
        let f = TruncSeries::from_coeffs(coeffs);
        prop_assert_eq!(f.mul(&f.reciprocal().unwrap()), TruncSeries::one(&rat(0, 1), 7));
    }

    #[test]
    fn contraction_coherence(alphas in proptest::collection::vec(arb_rat(), 14)) {
        let s = SFrac::new(alphas);
        let reference = s.to_series(6);
        let even = contract(&s, ContractionKind::Even).unwrap();
        let odd = contract(&s, ContractionKind::Odd).unwrap();
        prop_assert_eq!(even.to_series(6), reference.clone());
        prop_assert_eq!(odd.to_series(6), reference);
    }

    #[test]
    fn lattice_oracles(
        gammas in proptest::collection::vec(arb_rat(), 7),
        betas in proptest::collection::vec(arb_rat(), 6),
        alphas in proptest::collection::vec(arb_rat(), 7),
    ) {
        let j = JFrac::new(gammas, betas);
        prop_assert_eq!(&motzkin_moments(&j, 6)[..], j.to_series_checked(6).unwrap().coeffs());
        let s = SFrac::new(alphas);
        prop_assert_eq!(&dyck_moments(&s, 6)[..], s.to_series_checked(6).unwrap().coeffs());
    }

    #[test]
    fn moment_shift_involution(moments in proptest::collection::vec(arb_rat(), 1..10), d in arb_rat()) {
        let mu = MomentFunctional::new(moments, "x");
        prop_assert_eq!(mu.shift(&d).shift(&(-&d)), mu);
    }

    #[test]
    fn jfrac_roundtrip_when_nonsingular(moments in proptest::collection::vec(arb_nonzero_rat(), 7)) {
        // the expansion is normalized to constant term 1, so compare after
        // scaling by mu_0
        let mu = MomentFunctional::new(moments.clone(), "x");
        if let Ok(jf) = series_to_jfrac(&mu, 3) {
            let series = jf.to_series(5).scale(&moments[0]);
            prop_assert_eq!(series.coeffs(), &moments[..6]);
        }
    }
}
