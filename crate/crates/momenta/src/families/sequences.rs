//! Integer-sequence oracles: Bernoulli, Genocchi and median Genocchi
//! numbers, each computed from its defining recurrence or alternating
//! binomial sum, independently of the continued-fraction machinery they
//! cross-check.

use num_traits::Signed;
use thiserror::Error;

use crate::fps::{t_tan_half, TruncSeries};
use crate::ring::{binomial, factorial, rat_int, Rat};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SequenceError {
    #[error("Genocchi numbers are indexed by even integers >= 2, got {0}")]
    OddIndex(i64),
}

/// Bernoulli numbers `B_0..B_n` (convention `B_1 = -1/2`, matching
/// `t/(e^t - 1)`), from `sum_k C(n+1, k) B_k = 0`.
pub fn bernoulli_upto(n: usize) -> Vec<Rat> {
    let mut b: Vec<Rat> = Vec::with_capacity(n + 1);
    b.push(rat_int(1));
    for m in 1..=n {
        let mut acc = rat_int(0);
        for (k, bk) in b.iter().enumerate() {
            acc += binomial(m as i64 + 1, k as i64) * bk;
        }
        b.push(-acc / binomial(m as i64 + 1, m as i64));
    }
    b
}

/// The n-th Bernoulli number.
pub fn bernoulli(n: usize) -> Rat {
    bernoulli_upto(n).pop().unwrap()
}

/// Genocchi number `G_n` for even `n >= 2`, via `G_{2m} = 2 (2^{2m} - 1) |B_{2m}|`.
pub fn genocchi(n: i64) -> Result<Rat, SequenceError> {
    if n < 2 || n % 2 != 0 {
        return Err(SequenceError::OddIndex(n));
    }
    let m = (n / 2) as usize;
    let b = bernoulli(2 * m).abs();
    let pow = Rat::from_integer(num_bigint::BigInt::from(2).pow(2 * m as u32));
    Ok(rat_int(2) * (pow - rat_int(1)) * b)
}

/// The sequence `G_2, G_4, ..., G_{2n+2}` (the moments of the Genocchi
/// fixtures: entry k is `G_{2k+2}`).
pub fn genocchi_upto(n: usize) -> Vec<Rat> {
    (0..=n).map(|k| genocchi(2 * k as i64 + 2).unwrap()).collect()
}

/// Median Genocchi number `H_{2n+1}`: `H_1 = 1` and for `n >= 1`
/// `H_{2n+1} = sum_{k>=1} (-1)^{k-1} C(n, 2k-1) G_{2n+2-2k}`.
pub fn median_genocchi(n: usize) -> Rat {
    if n == 0 {
        return rat_int(1);
    }
    let mut acc = rat_int(0);
    let mut k: i64 = 1;
    while 2 * k - 1 <= n as i64 {
        let g_index = 2 * n as i64 + 2 - 2 * k;
        let g = genocchi(g_index).expect("even index >= 2");
        let sign = if (k - 1) % 2 == 0 { rat_int(1) } else { rat_int(-1) };
        acc += sign * binomial(n as i64, 2 * k - 1) * g;
        k += 1;
    }
    acc
}

/// `H_1, H_3, ..., H_{2n+1}`.
pub fn median_genocchi_upto(n: usize) -> Vec<Rat> {
    (0..=n).map(median_genocchi).collect()
}

/// Exponential generating function `sum G_n t^n / n! = t tan(t/2)`,
/// truncated; used as an independent route to the Genocchi numbers.
pub fn genocchi_egf(order: usize) -> TruncSeries<Rat> {
    t_tan_half(order)
}

/// Reads `G_{2k+2}` for `k = 0..` off the EGF route.
pub fn genocchi_from_egf(n: usize) -> Vec<Rat> {
    let order = 2 * n + 2;
    let egf = genocchi_egf(order);
    (0..=n)
        .map(|k| egf.coeff(2 * k + 2) * factorial(2 * k + 2))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::rat;

    #[test]
    fn bernoulli_values() {
        let b = bernoulli_upto(12);
        assert_eq!(b[0], rat_int(1));
        assert_eq!(b[1], rat(-1, 2));
        assert_eq!(b[2], rat(1, 6));
        assert_eq!(b[3], rat_int(0));
        assert_eq!(b[4], rat(-1, 30));
        assert_eq!(b[12], rat(-691, 2730));
    }

    #[test]
    fn genocchi_values() {
        let g: Vec<Rat> = genocchi_upto(5);
        assert_eq!(g, [1, 1, 3, 17, 155, 2073].map(rat_int).to_vec());
        // direct substitution: G_4 = 2 (2^4 - 1) |B_4| = 2 * 15 * 1/30
        assert_eq!(rat_int(2) * rat_int(15) * rat(1, 30), rat_int(1));
        assert_eq!(genocchi(4).unwrap(), rat_int(1));
        assert!(matches!(genocchi(5), Err(SequenceError::OddIndex(5))));
        assert!(matches!(genocchi(0), Err(SequenceError::OddIndex(0))));
    }

    #[test]
    fn genocchi_egf_route() {
        // G_n vanishes at odd n and n = 0; even entries match the recurrence
        let egf = genocchi_egf(14);
        assert_eq!(egf.coeff(0), rat_int(0));
        for k in 0..=6usize {
            if 2 * k + 1 <= 14 {
                assert_eq!(egf.coeff(2 * k + 1), rat_int(0));
            }
        }
        assert_eq!(genocchi_from_egf(6), genocchi_upto(6));
    }

    #[test]
    fn median_genocchi_values() {
        assert_eq!(
            median_genocchi_upto(6),
            [1, 1, 2, 8, 56, 608, 9440].map(rat_int).to_vec()
        );
        // n = 4 by hand: C(4,1) G_8 - C(4,3) G_6 = 4*17 - 4*3
        assert_eq!(median_genocchi(4), rat_int(4 * 17 - 4 * 3));
    }
}
