//! S- and J-fractions: expansion to power series, contraction transforms,
//! inversion of a moment sequence into continued-fraction coefficients,
//! Hankel determinants, and the weighted lattice-path oracles.
//!
//! A stored fraction is a finite prefix. `to_series` expands it exactly as a
//! terminating fraction; `to_series_checked` additionally enforces the
//! depth-to-order contract (depth >= order + 1) under which the prefix of an
//! infinite fraction is guaranteed to reproduce the same coefficients.

use thiserror::Error;

use crate::fps::TruncSeries;
use crate::momentlab::{MomentFunctional, ThreeTermRecurrence};
use crate::ring::Ring;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CfError {
    #[error("depth {depth} is insufficient (need {needed})")]
    InsufficientDepth { depth: usize, needed: usize },
    #[error("expansion denominator has a non-invertible constant term")]
    NonInvertibleDenominator,
    #[error("Hankel determinant vanishes at depth {0}; coefficients undefined")]
    SingularHankel(usize),
    #[error("S-fraction coefficient alpha_{0} is zero with a nonzero remainder")]
    ZeroAlphaCoefficient(usize),
    #[error("moment mu_0 must be 1 for an S-fraction")]
    NonUnitLeadingMoment,
    #[error("coefficient is not exactly representable in the coefficient ring")]
    NonExactCoefficient,
}

/// Stieltjes fraction `1/(1 - a_1 t/(1 - a_2 t/(1 - ...)))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SFrac<R: Ring> {
    alphas: Vec<R>,
}

impl<R: Ring> SFrac<R> {
    pub fn new(alphas: Vec<R>) -> Self {
        assert!(!alphas.is_empty(), "need at least one coefficient");
        SFrac { alphas }
    }

    /// Coefficients `a_1..a_d`.
    pub fn alphas(&self) -> &[R] {
        &self.alphas
    }

    /// 1-based coefficient accessor.
    pub fn alpha(&self, k: usize) -> R {
        self.alphas[k - 1].clone()
    }

    pub fn depth(&self) -> usize {
        self.alphas.len()
    }

    /// Exact expansion of the terminating fraction, bottom-up; level k only
    /// needs the inner levels to order `order - k`.
    pub fn to_series(&self, order: usize) -> TruncSeries<R> {
        let proto = &self.alphas[0];
        let d = self.depth();
        // level d (innermost) is needed to the smallest order
        let mut inner = TruncSeries::one(proto, order.saturating_sub(d));
        for (k, alpha) in self.alphas.iter().enumerate().rev() {
            let ord = order.saturating_sub(k); // level index k is 0-based here
            let mut coeffs = vec![proto.zero_like(); ord + 1];
            for j in 0..ord {
                coeffs[j + 1] = alpha.mul_ref(&inner.coeff(j)).neg_ref();
            }
            coeffs[0] = proto.one_like();
            let denom = TruncSeries::from_coeffs(coeffs);
            inner = denom.reciprocal().expect("unit constant term");
        }
        inner
    }

    /// Expansion with the depth contract: a depth-d prefix of an infinite
    /// fraction is exact through `t^N` only when `d >= N + 1`.
    pub fn to_series_checked(&self, order: usize) -> Result<TruncSeries<R>, CfError> {
        if self.depth() < order + 1 {
            return Err(CfError::InsufficientDepth {
                depth: self.depth(),
                needed: order + 1,
            });
        }
        Ok(self.to_series(order))
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "kind": "s",
            "alphas": self.alphas.iter().map(|a| a.to_string()).collect::<Vec<_>>(),
        })
    }
}

/// Jacobi fraction `1/(1 - g_0 t - b_1 t^2/(1 - g_1 t - b_2 t^2/...))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JFrac<R: Ring> {
    gammas: Vec<R>,
    betas: Vec<R>,
}

impl<R: Ring> JFrac<R> {
    pub fn new(gammas: Vec<R>, betas: Vec<R>) -> Self {
        assert!(!gammas.is_empty(), "need at least one diagonal coefficient");
        assert_eq!(gammas.len(), betas.len() + 1, "need len(gammas) = len(betas) + 1");
        JFrac { gammas, betas }
    }

    /// Diagonal coefficients `g_0..g_{d-1}`.
    pub fn gammas(&self) -> &[R] {
        &self.gammas
    }

    /// Subdiagonal products `b_1..b_{d-1}`.
    pub fn betas(&self) -> &[R] {
        &self.betas
    }

    pub fn depth(&self) -> usize {
        self.gammas.len()
    }

    /// Exact expansion of the terminating fraction, bottom-up; level k only
    /// needs the inner levels to order `order - 2k`.
    pub fn to_series(&self, order: usize) -> TruncSeries<R> {
        let proto = &self.gammas[0];
        let d = self.depth();
        let deepest_ord = order.saturating_sub(2 * (d - 1));
        let mut inner = {
            let mut coeffs = vec![proto.zero_like(); deepest_ord + 1];
            coeffs[0] = proto.one_like();
            if deepest_ord >= 1 {
                coeffs[1] = self.gammas[d - 1].neg_ref();
            }
            TruncSeries::from_coeffs(coeffs)
                .reciprocal()
                .expect("unit constant term")
        };
        for level in (0..d.saturating_sub(1)).rev() {
            let ord = order.saturating_sub(2 * level);
            // 1 - gamma t - beta t^2 * inner, assembled at this level's order
            let mut coeffs = vec![proto.zero_like(); ord + 1];
            coeffs[0] = proto.one_like();
            if ord >= 1 {
                coeffs[1] = self.gammas[level].neg_ref();
            }
            for j in 0..ord.saturating_sub(1) {
                coeffs[j + 2] =
                    coeffs[j + 2].sub_ref(&self.betas[level].mul_ref(&inner.coeff(j)));
            }
            let denom = TruncSeries::from_coeffs(coeffs);
            inner = denom.reciprocal().expect("unit constant term");
        }
        inner
    }

    /// Expansion with the depth contract (depth >= order + 1); one level of
    /// over-provision relative to what the coefficients strictly determine.
    pub fn to_series_checked(&self, order: usize) -> Result<TruncSeries<R>, CfError> {
        if self.depth() < order + 1 {
            return Err(CfError::InsufficientDepth {
                depth: self.depth(),
                needed: order + 1,
            });
        }
        Ok(self.to_series(order))
    }

    pub fn to_recurrence(&self) -> ThreeTermRecurrence<R> {
        ThreeTermRecurrence::new(self.gammas.clone(), self.betas.clone())
    }

    pub fn from_recurrence(rec: &ThreeTermRecurrence<R>) -> Self {
        JFrac::new(rec.b.clone(), rec.lambda.clone())
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "kind": "j",
            "gammas": self.gammas.iter().map(|a| a.to_string()).collect::<Vec<_>>(),
            "betas": self.betas.iter().map(|a| a.to_string()).collect::<Vec<_>>(),
        })
    }
}

/// Result of contracting an S-fraction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Contraction<R: Ring> {
    /// `S(t) = J(t)`.
    Even(JFrac<R>),
    /// `S(t) = 1 + leading * t * J(t)`.
    Odd { leading: R, tail: JFrac<R> },
}

impl<R: Ring> Contraction<R> {
    pub fn jfrac(&self) -> &JFrac<R> {
        match self {
            Contraction::Even(j) => j,
            Contraction::Odd { tail, .. } => tail,
        }
    }

    /// Series of the contracted form, including the odd kind's wrapper.
    pub fn to_series(&self, order: usize) -> TruncSeries<R> {
        match self {
            Contraction::Even(j) => j.to_series(order),
            Contraction::Odd { leading, tail } => {
                let inner = tail.to_series(order).scale(leading).shift_up(1);
                TruncSeries::one(leading, order).add(&inner)
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ContractionKind {
    Even,
    Odd,
}

/// Classical contraction of an S-fraction into a J-fraction.
///
/// Even: `g_0 = a_1`, `g_n = a_{2n} + a_{2n+1}`, `b_n = a_{2n-1} a_{2n}`.
/// Odd: `S = 1 + a_1 t J(t; g'..)` with `g'_0 = a_1 + a_2`,
/// `g'_n = a_{2n+1} + a_{2n+2}`, `b'_n = a_{2n} a_{2n+1}`.
pub fn contract<R: Ring>(s: &SFrac<R>, kind: ContractionKind) -> Result<Contraction<R>, CfError> {
    let d = s.depth();
    if d < 2 {
        return Err(CfError::InsufficientDepth { depth: d, needed: 2 });
    }
    match kind {
        ContractionKind::Even => {
            let levels = (d - 1) / 2;
            let mut gammas = vec![s.alpha(1)];
            let mut betas = Vec::new();
            for n in 1..=levels {
                gammas.push(s.alpha(2 * n).add_ref(&s.alpha(2 * n + 1)));
                betas.push(s.alpha(2 * n - 1).mul_ref(&s.alpha(2 * n)));
            }
            Ok(Contraction::Even(JFrac::new(gammas, betas)))
        }
        ContractionKind::Odd => {
            let levels = (d - 2) / 2;
            let mut gammas = vec![s.alpha(1).add_ref(&s.alpha(2))];
            let mut betas = Vec::new();
            for n in 1..=levels {
                gammas.push(s.alpha(2 * n + 1).add_ref(&s.alpha(2 * n + 2)));
                betas.push(s.alpha(2 * n).mul_ref(&s.alpha(2 * n + 1)));
            }
            Ok(Contraction::Odd {
                leading: s.alpha(1),
                tail: JFrac::new(gammas, betas),
            })
        }
    }
}

/// Inverts a moment sequence into J-fraction coefficients by
/// Gram-Schmidt against the functional, organized through the mixed moments
/// `sigma_{n,k} = L(P_n x^k)` so no explicit polynomial products are formed:
///
/// `sigma_{n,k} = sigma_{n-1,k+1} - b_{n-1} sigma_{n-1,k} - l_{n-1} sigma_{n-2,k}`
/// with `b_n = sigma_{n,n+1}/sigma_{n,n} - sigma_{n-1,n}/sigma_{n-1,n-1}` and
/// `l_n = sigma_{n,n}/sigma_{n-1,n-1}`.
///
/// A vanishing `sigma_{n,n}` with the whole remaining row zero means the
/// functional terminates (a finite point mass); the remaining coefficients
/// are zero. A vanishing `sigma_{n,n}` with a nonzero remainder is a
/// genuinely singular Hankel determinant.
pub fn series_to_jfrac<R: Ring>(
    mu: &MomentFunctional<R>,
    depth: usize,
) -> Result<JFrac<R>, CfError> {
    assert!(depth >= 1);
    let n_max = mu.max_index();
    if n_max < 2 * depth - 1 {
        return Err(CfError::InsufficientDepth {
            depth: (n_max + 1) / 2,
            needed: depth,
        });
    }
    let zero = mu.moment(0).zero_like();
    let mut prev: Vec<R> = vec![zero.clone(); n_max + 2];
    let mut curr: Vec<R> = mu.moments().to_vec();
    curr.push(zero.clone());

    let mut gammas: Vec<R> = Vec::with_capacity(depth);
    let mut betas: Vec<R> = Vec::with_capacity(depth - 1);
    let mut prev_diag = zero.one_like();
    let mut terminated = false;

    for n in 0..depth {
        let hi = n_max - n; // sigma_{n,k} valid for k <= hi
        let diag = curr[n].clone();
        if diag.is_zero() {
            // a vanishing diagonal with the whole remaining row zero is a
            // legitimately terminating functional; mu_0 = 0 never is
            if n > 0 && curr[n..=hi].iter().all(Ring::is_zero) {
                terminated = true;
            } else {
                return Err(CfError::SingularHankel(n + 1));
            }
        }
        if terminated {
            gammas.push(zero.clone());
            if n > 0 {
                betas.push(zero.clone());
            }
            continue;
        }
        let b_n = if n == 0 {
            curr[1].exact_div(&curr[0]).ok_or(CfError::NonExactCoefficient)?
        } else {
            let first = curr[n + 1]
                .exact_div(&diag)
                .ok_or(CfError::NonExactCoefficient)?;
            let second = prev[n]
                .exact_div(&prev_diag)
                .ok_or(CfError::NonExactCoefficient)?;
            first.sub_ref(&second)
        };
        if n > 0 {
            let lambda_n = diag
                .exact_div(&prev_diag)
                .ok_or(CfError::NonExactCoefficient)?;
            betas.push(lambda_n);
        }
        gammas.push(b_n.clone());

        if n + 1 < depth {
            // roll sigma rows forward
            let lambda_next = if n == 0 { zero.clone() } else { betas[n - 1].clone() };
            let mut next: Vec<R> = vec![zero.clone(); n_max + 2];
            for k in (n + 1)..=(n_max - (n + 1)) {
                let mut v = curr[k + 1].sub_ref(&b_n.mul_ref(&curr[k]));
                if !lambda_next.is_zero() {
                    v = v.sub_ref(&lambda_next.mul_ref(&prev[k]));
                }
                next[k] = v;
            }
            prev_diag = diag;
            prev = std::mem::replace(&mut curr, next);
        }
    }
    Ok(JFrac::new(gammas, betas))
}

/// Inverts a moment sequence (with `mu_0 = 1`) into S-fraction
/// coefficients by repeatedly peeling one level: for `f = 1/(1 - a t g)`
/// with `g(0) = 1`, the series `u = 1 - 1/f` equals `a t g`.
pub fn series_to_sfrac<R: Ring>(
    mu: &MomentFunctional<R>,
    depth: usize,
) -> Result<SFrac<R>, CfError> {
    assert!(depth >= 1);
    if !mu.moment(0).is_one() {
        return Err(CfError::NonUnitLeadingMoment);
    }
    let n_max = mu.max_index();
    if n_max < depth {
        return Err(CfError::InsufficientDepth {
            depth: n_max,
            needed: depth,
        });
    }
    let mut f = TruncSeries::from_coeffs(mu.moments().to_vec());
    let mut alphas = Vec::with_capacity(depth);
    for k in 1..=depth {
        let inv = f.reciprocal().map_err(|_| CfError::NonInvertibleDenominator)?;
        let u = TruncSeries::one(&mu.moment(0), f.order()).sub(&inv);
        if u.is_zero() {
            alphas.resize(depth, mu.moment(0).zero_like());
            break;
        }
        let alpha = u.coeff(1);
        if alpha.is_zero() {
            return Err(CfError::ZeroAlphaCoefficient(k));
        }
        let inv_alpha = alpha.inverse().ok_or(CfError::NonExactCoefficient)?;
        f = u.shift_down(1).scale(&inv_alpha);
        alphas.push(alpha);
    }
    Ok(SFrac::new(alphas))
}

/// Determinant of the `n x n` Hankel matrix `(mu_{i+j})`, by fraction-free
/// (Bareiss) elimination so it stays exact over polynomial rings too.
pub fn hankel_det<R: Ring>(mu: &MomentFunctional<R>, n: usize) -> R {
    let one = mu.moment(0).one_like();
    if n == 0 {
        return one;
    }
    assert!(
        mu.max_index() >= 2 * n - 2,
        "need moments through index {}",
        2 * n - 2
    );
    let mut m: Vec<Vec<R>> = (0..n)
        .map(|i| (0..n).map(|j| mu.moment(i + j)).collect())
        .collect();
    let mut sign_flip = false;
    let mut prev_pivot = one;
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    sign_flip = !sign_flip;
                }
                None => return mu.moment(0).zero_like(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = m[k][k].mul_ref(&m[i][j]).sub_ref(&m[i][k].mul_ref(&m[k][j]));
                m[i][j] = num
                    .exact_div(&prev_pivot)
                    .expect("Bareiss division is exact over an integral domain");
            }
        }
        prev_pivot = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if sign_flip {
        det.neg_ref()
    } else {
        det
    }
}

/// Weighted Motzkin-path oracle for a J-fraction: the order-n coefficient
/// equals the weighted count of paths of length n from height 0 to 0, with
/// level weight `gamma_h` at height h and fall weight `beta_h` from height h.
pub fn motzkin_moments<R: Ring>(j: &JFrac<R>, order: usize) -> Vec<R> {
    let zero = j.gammas()[0].zero_like();
    let d = j.depth();
    let mut layer = vec![zero.clone(); d + 1];
    layer[0] = zero.one_like();
    let mut out = Vec::with_capacity(order + 1);
    out.push(layer[0].clone());
    for _ in 0..order {
        let mut next = vec![zero.clone(); d + 1];
        for h in 0..d {
            if layer[h].is_zero() {
                continue;
            }
            // level step
            next[h] = next[h].add_ref(&layer[h].mul_ref(&j.gammas()[h]));
            // rise (weight 1), capped at the deepest stored level
            if h + 1 < d {
                next[h + 1] = next[h + 1].add_ref(&layer[h]);
            }
            // fall carries beta_h
            if h >= 1 {
                next[h - 1] = next[h - 1].add_ref(&layer[h].mul_ref(&j.betas()[h - 1]));
            }
        }
        layer = next;
        out.push(layer[0].clone());
    }
    out
}

/// Weighted Dyck-path oracle for an S-fraction: the order-n coefficient
/// equals the weighted count of paths of length 2n, a fall from height h
/// carrying weight `alpha_h`.
pub fn dyck_moments<R: Ring>(s: &SFrac<R>, order: usize) -> Vec<R> {
    let zero = s.alphas()[0].zero_like();
    let d = s.depth();
    let mut layer = vec![zero.clone(); d + 1];
    layer[0] = zero.one_like();
    let mut out = Vec::with_capacity(order + 1);
    out.push(layer[0].clone());
    for _ in 0..order {
        // two half-steps per t power
        for _ in 0..2 {
            let mut next = vec![zero.clone(); d + 1];
            for h in 0..=d {
                if layer[h].is_zero() {
                    continue;
                }
                if h + 1 <= d {
                    next[h + 1] = next[h + 1].add_ref(&layer[h]);
                }
                if h >= 1 {
                    next[h - 1] = next[h - 1].add_ref(&layer[h].mul_ref(&s.alphas()[h - 1]));
                }
            }
            layer = next;
        }
        out.push(layer[0].clone());
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{rat, rat_int, Rat};

    fn genocchi_sfrac(depth: usize) -> SFrac<Rat> {
        // 1^2, 1*2, 2^2, 2*3, 3^2, 3*4, ...
        let alphas = (1..=depth)
            .map(|k| {
                let m = ((k + 1) / 2) as i64;
                if k % 2 == 1 {
                    rat_int(m * m)
                } else {
                    rat_int(m * (m + 1))
                }
            })
            .collect();
        SFrac::new(alphas)
    }

    fn median_sfrac(depth: usize) -> SFrac<Rat> {
        // 1^2, 1^2, 2^2, 2^2, 3^2, 3^2, ...
        let alphas = (1..=depth)
            .map(|k| {
                let m = ((k + 1) / 2) as i64;
                rat_int(m * m)
            })
            .collect();
        SFrac::new(alphas)
    }

    #[test]
    fn genocchi_expansion() {
        let s = genocchi_sfrac(8);
        let series = s.to_series_checked(5).unwrap();
        let expected: Vec<Rat> = [1, 1, 3, 17, 155, 2073].map(rat_int).into();
        assert_eq!(series.coeffs(), &expected);
    }

    #[test]
    fn median_genocchi_expansion() {
        let s = median_sfrac(9);
        let series = s.to_series_checked(6).unwrap();
        let expected: Vec<Rat> = [1, 1, 2, 8, 56, 608, 9440].map(rat_int).into();
        assert_eq!(series.coeffs(), &expected);
    }

    #[test]
    fn geometric_jfrac() {
        let j = JFrac::new(vec![rat(2, 3)], vec![]);
        let series = j.to_series(4);
        assert_eq!(series, TruncSeries::geometric(&rat(2, 3), 4));
    }

    #[test]
    fn checked_expansion_depth_contract() {
        let s = genocchi_sfrac(4);
        assert!(matches!(
            s.to_series_checked(5),
            Err(CfError::InsufficientDepth { .. })
        ));
        let j = JFrac::new(vec![rat_int(1)], vec![]);
        assert!(matches!(
            j.to_series_checked(2),
            Err(CfError::InsufficientDepth { .. })
        ));
    }

    #[test]
    fn single_alpha_even_contraction() {
        let s = SFrac::new(vec![rat(5, 7), rat_int(0)]);
        let c = contract(&s, ContractionKind::Even).unwrap();
        match &c {
            Contraction::Even(j) => {
                assert_eq!(j.gammas(), &[rat(5, 7)]);
            }
            _ => unreachable!(),
        }
        assert!(matches!(
            contract(&SFrac::new(vec![rat_int(1)]), ContractionKind::Even),
            Err(CfError::InsufficientDepth { .. })
        ));
    }

    #[test]
    fn median_contractions() {
        // even contraction of the median S-fraction gives
        // g_n = n^2 + (n+1)^2, b_n = n^4
        let s = median_sfrac(20);
        let even = contract(&s, ContractionKind::Even).unwrap();
        let j = even.jfrac();
        for (n, g) in j.gammas().iter().enumerate().take(6) {
            let n = n as i64;
            assert_eq!(*g, rat_int(n * n + (n + 1) * (n + 1)));
        }
        for (i, b) in j.betas().iter().enumerate().take(5) {
            let n = (i + 1) as i64;
            assert_eq!(*b, rat_int(n * n * n * n));
        }
        // odd contraction gives the 2 n^2 / (n(n+1))^2 pattern
        let odd = contract(&s, ContractionKind::Odd).unwrap();
        match &odd {
            Contraction::Odd { leading, tail } => {
                assert_eq!(*leading, rat_int(1));
                for (n, g) in tail.gammas().iter().enumerate().take(6) {
                    let m = (n + 1) as i64;
                    assert_eq!(*g, rat_int(2 * m * m));
                }
                for (i, b) in tail.betas().iter().enumerate().take(5) {
                    let m = (i + 1) as i64;
                    assert_eq!(*b, rat_int(m * m * (m + 1) * (m + 1)));
                }
            }
            _ => unreachable!(),
        }
        // both contractions reproduce the parent series
        let reference = s.to_series(8);
        assert_eq!(even.to_series(8), reference);
        assert_eq!(odd.to_series(8), reference);
    }

    #[test]
    fn jfrac_inversion_point_mass() {
        let c = rat(3, 5);
        let moments: Vec<Rat> = (0..10).map(|n| crate::ring::ring_pow(&c, n)).collect();
        let mu = MomentFunctional::new(moments, "x");
        let j = series_to_jfrac(&mu, 4).unwrap();
        assert_eq!(j.gammas()[0], c);
        assert!(j.betas().iter().all(|b| b.is_zero()));
        assert!(j.gammas()[1..].iter().all(|g| g.is_zero()));
    }

    #[test]
    fn jfrac_inversion_genocchi_matches_contraction() {
        let derived = contract(&genocchi_sfrac(16), ContractionKind::Even).unwrap();
        let moments = genocchi_sfrac(20).to_series(9);
        let mu = MomentFunctional::new(moments.coeffs().to_vec(), "x");
        let j = series_to_jfrac(&mu, 4).unwrap();
        assert_eq!(j.gammas()[0], rat_int(1));
        assert_eq!(j.betas()[0], rat_int(2));
        assert_eq!(j.gammas()[1], rat_int(6));
        assert_eq!(j.betas()[1], derived.jfrac().betas()[1]);
        assert_eq!(&j.gammas()[..4], &derived.jfrac().gammas()[..4]);
    }

    #[test]
    fn jfrac_inversion_detects_singular_hankel() {
        let mu = MomentFunctional::new(
            vec![rat_int(1), rat_int(1), rat_int(1), rat_int(2), rat_int(5), rat_int(9)],
            "x",
        );
        assert_eq!(series_to_jfrac(&mu, 3), Err(CfError::SingularHankel(2)));
    }

    #[test]
    fn sfrac_inversion_genocchi() {
        let moments = genocchi_sfrac(20).to_series(9);
        let mu = MomentFunctional::new(moments.coeffs().to_vec(), "x");
        let s = series_to_sfrac(&mu, 8).unwrap();
        assert_eq!(s.alphas(), &genocchi_sfrac(8).alphas()[..]);
    }

    #[test]
    fn sfrac_inversion_point_mass_terminates() {
        let c = rat(3, 5);
        let moments: Vec<Rat> = (0..6).map(|n| crate::ring::ring_pow(&c, n)).collect();
        let mu = MomentFunctional::new(moments, "x");
        let s = series_to_sfrac(&mu, 4).unwrap();
        assert_eq!(s.alphas()[0], c);
        assert_eq!(s.alphas()[1], rat_int(0));
        assert!(s.alphas()[1..].iter().all(Ring::is_zero));
    }

    #[test]
    fn sfrac_inversion_zero_alpha_error() {
        let mu = MomentFunctional::new(
            vec![rat_int(1), rat_int(0), rat_int(1), rat_int(0), rat_int(1)],
            "x",
        );
        assert_eq!(series_to_sfrac(&mu, 3), Err(CfError::ZeroAlphaCoefficient(1)));
        let mu = MomentFunctional::new(vec![rat_int(2), rat_int(0)], "x");
        assert_eq!(series_to_sfrac(&mu, 1), Err(CfError::NonUnitLeadingMoment));
    }

    #[test]
    fn hankel_values() {
        let mu = MomentFunctional::new(vec![rat_int(1)], "x");
        assert_eq!(hankel_det(&mu, 1), rat_int(1));

        let g = genocchi_sfrac(20).to_series(6);
        let mu = MomentFunctional::new(g.coeffs().to_vec(), "x");
        // direct cofactor expansion of the 3x3 case as an independent route
        let m: Vec<Vec<Rat>> = (0..3)
            .map(|i| (0..3).map(|j| mu.moment(i + j)).collect())
            .collect();
        let direct = &m[0][0] * (&m[1][1] * &m[2][2] - &m[1][2] * &m[2][1])
            - &m[0][1] * (&m[1][0] * &m[2][2] - &m[1][2] * &m[2][0])
            + &m[0][2] * (&m[1][0] * &m[2][1] - &m[1][1] * &m[2][0]);
        assert_eq!(hankel_det(&mu, 3), direct);
        // product formula: prod_{k=1}^{n-1} lambda_k^{n-k} with l_1 = 2, l_2 = 24
        assert_eq!(hankel_det(&mu, 2), rat_int(2));
        assert_eq!(hankel_det(&mu, 3), rat_int(2 * 2 * 24));

        let c = rat(3, 4);
        let rank1: Vec<Rat> = (0..4).map(|n| crate::ring::ring_pow(&c, n)).collect();
        let mu = MomentFunctional::new(rank1, "x");
        assert_eq!(hankel_det(&mu, 2), rat_int(0));
    }

    #[test]
    fn lattice_oracles_match_expansion() {
        let j = JFrac::new(
            vec![rat(1, 2), rat(-2, 3), rat_int(3), rat(5, 7)],
            vec![rat_int(2), rat(-1, 5), rat(3, 2)],
        );
        let dp = motzkin_moments(&j, 3);
        assert_eq!(dp, j.to_series_checked(3).unwrap().coeffs());

        let s = genocchi_sfrac(7);
        let dp = dyck_moments(&s, 6);
        assert_eq!(dp, s.to_series_checked(6).unwrap().coeffs());
    }
}
