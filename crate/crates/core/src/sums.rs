//! Alternating convolutions of super Catalan numbers.
//!
//! All sums share the summand `(-1)^k binom(n-2t, k-t) S(k,l) S(n-k,l)` over
//! `t <= k <= n-t`, reweighted per sum:
//!
//! | sum            | weight                                   |
//! |----------------|------------------------------------------|
//! | `psi_t`        | 1                                        |
//! | `p_sum`        | `n-t-k`                                  |
//! | `r_sum`        | `(2l+1)/(k+l+1)`                         |
//! | `r_prime_sum`  | `(2l+1)/((k+l+1)(n-k+l+1))`              |
//! | `r_dprime_sum` | `(2l+1)(n-k)/((k+l+1)(n-k+l+1))`         |
//! | `t_sum`        | `(n-t-k)(2l+1)/(k+l+1)`                  |
//!
//! The auxiliary sums carry per-term denominators and are returned as
//! [`Rational`] even where a lemma makes them integral.

use num_traits::{Pow, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{choose, from_integer, ratio, sign, Integer, Rational};
use crate::supercat::super_catalan;

/// Parameters of `Psi(n, m, l)` and, with a truncation, `Psi_t(n, l)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConvolutionParams {
    pub n: u64,
    pub m: u32,
    pub l: u64,
    pub t: Option<u64>,
}

impl ConvolutionParams {
    pub fn new(n: u64, m: u32, l: u64) -> Result<Self> {
        if m == 0 {
            return Err(Error::domain("binomial power m must be at least 1"));
        }
        Ok(ConvolutionParams { n, m, l, t: None })
    }

    pub fn truncated(n: u64, t: u64, l: u64) -> Result<Self> {
        check_truncation(n, t)?;
        Ok(ConvolutionParams { n, m: 1, l, t: Some(t) })
    }
}

fn check_truncation(n: u64, t: u64) -> Result<()> {
    if t > n / 2 {
        return Err(Error::domain(format!(
            "truncation requires t <= floor(n/2), got t={t}, n={n}"
        )));
    }
    Ok(())
}

/// `(-1)^k binom(n-2t, k-t) S(k,l) S(n-k,l)` for `t <= k <= n-t`.
fn base_term(n: u64, t: u64, l: u64, k: u64) -> Result<Integer> {
    Ok(sign(k) * choose(n - 2 * t, k - t) * super_catalan(k, l)? * super_catalan(n - k, l)?)
}

fn weighted_rational(
    n: u64,
    t: u64,
    l: u64,
    weight: impl Fn(u64) -> Rational,
) -> Result<Rational> {
    check_truncation(n, t)?;
    let mut acc = Rational::zero();
    for k in t..=n - t {
        acc += weight(k) * from_integer(base_term(n, t, l, k)?);
    }
    Ok(acc)
}

/// `Psi(n, m, l) = sum_{k=0}^{n} (-1)^k binom(n,k)^m S(k,l) S(n-k,l)`.
pub fn psi(n: u64, m: u32, l: u64) -> Result<Integer> {
    if m == 0 {
        return Err(Error::domain("binomial power m must be at least 1"));
    }
    let mut acc = Integer::zero();
    for k in 0..=n {
        let b: Integer = choose(n, k).pow(m);
        acc += sign(k) * b * super_catalan(k, l)? * super_catalan(n - k, l)?;
    }
    Ok(acc)
}

/// `Psi_t(n, l) = sum_{k=t}^{n-t} (-1)^k binom(n-2t, k-t) S(k,l) S(n-k,l)`.
pub fn psi_t(n: u64, t: u64, l: u64) -> Result<Integer> {
    check_truncation(n, t)?;
    (t..=n - t).try_fold(Integer::zero(), |acc, k| Ok(acc + base_term(n, t, l, k)?))
}

/// `P_t(n, l)`: the truncated sum weighted by `n - t - k`.
pub fn p_sum(n: u64, t: u64, l: u64) -> Result<Integer> {
    check_truncation(n, t)?;
    (t..=n - t).try_fold(Integer::zero(), |acc, k| {
        Ok(acc + base_term(n, t, l, k)? * (n - t - k))
    })
}

/// `R_t(n, l)`: weight `(2l+1)/(k+l+1)`.
pub fn r_sum(n: u64, t: u64, l: u64) -> Result<Rational> {
    weighted_rational(n, t, l, |k| ratio(2 * l + 1, k + l + 1))
}

/// `R'_t(n, l)`: weight `(2l+1)/((k+l+1)(n-k+l+1))`.
pub fn r_prime_sum(n: u64, t: u64, l: u64) -> Result<Rational> {
    weighted_rational(n, t, l, |k| {
        ratio(2 * l + 1, (k + l + 1) * (n - k + l + 1))
    })
}

/// `R''_t(n, l)`: weight `(2l+1)(n-k)/((k+l+1)(n-k+l+1))`.
pub fn r_dprime_sum(n: u64, t: u64, l: u64) -> Result<Rational> {
    weighted_rational(n, t, l, |k| {
        ratio((2 * l + 1) * (n - k), (k + l + 1) * (n - k + l + 1))
    })
}

/// `T_t(n, l)`: weight `(n-t-k)(2l+1)/(k+l+1)`.
pub fn t_sum(n: u64, t: u64, l: u64) -> Result<Rational> {
    weighted_rational(n, t, l, |k| {
        ratio((n - t - k) * (2 * l + 1), k + l + 1)
    })
}

/// The shifted representation of `T_t(n, l)` for `2t < n`:
///
/// ```text
/// 2(n-2t)(2l+1) sum_{k=t}^{n-1-t} (-1)^k (2n-2k-1)/((k+l+1)(n-k+l))
///               binom(n-1-2t, k-t) S(k,l) S(n-1-k,l)
/// ```
pub fn t_sum_shifted(n: u64, t: u64, l: u64) -> Result<Rational> {
    if 2 * t >= n {
        return Err(Error::domain(format!("requires 2t < n, got t={t}, n={n}")));
    }
    let mut acc = Rational::zero();
    for k in t..n - t {
        let w = ratio(2 * n - 2 * k - 1, (k + l + 1) * (n - k + l));
        acc += w * from_integer(base_term(n - 1, t, l, k)?);
    }
    Ok(acc * from_integer(Integer::from(2 * (n - 2 * t) * (2 * l + 1))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn int(v: i64) -> Integer {
        Integer::from(v)
    }

    fn q(n: i64, d: i64) -> Rational {
        ratio(n, d)
    }

    #[test]
    fn psi_examples() {
        assert_eq!(psi(2, 1, 0).unwrap(), int(4));
        assert_eq!(psi(3, 2, 5).unwrap(), int(0));
        assert_eq!(psi(2, 3, 0).unwrap(), int(-20));
        assert_eq!(psi(8, 1, 2).unwrap(), int(8624));
        assert!(psi(2, 0, 0).is_err());
    }

    #[test]
    fn psi_t_examples() {
        assert_eq!(psi_t(4, 1, 0).unwrap(), int(-8));
        assert_eq!(psi_t(5, 2, 7).unwrap(), int(0));
        assert_eq!(psi_t(2, 1, 0).unwrap(), int(-4));
    }

    #[test]
    fn truncation_out_of_range_is_rejected() {
        assert!(matches!(psi_t(4, 3, 0), Err(Error::Domain(_))));
        assert!(matches!(r_sum(3, 2, 0), Err(Error::Domain(_))));
        assert!(ConvolutionParams::truncated(5, 3, 0).is_err());
        assert!(ConvolutionParams::new(5, 0, 0).is_err());
        assert!(t_sum_shifted(4, 2, 0).is_err());
    }

    #[test]
    fn p_sum_examples() {
        assert_eq!(p_sum(2, 0, 0).unwrap(), int(4));
        assert_eq!(p_sum(2, 1, 0).unwrap(), int(0));
        assert_eq!(p_sum(4, 0, 0).unwrap(), int(72));
    }

    #[test]
    fn r_sum_examples() {
        assert_eq!(r_sum(2, 0, 0).unwrap(), q(4, 1));
        assert_eq!(r_sum(1, 0, 0).unwrap(), q(1, 1));
        assert_eq!(r_sum(0, 0, 0).unwrap(), q(1, 1));
    }

    #[test]
    fn r_prime_examples() {
        assert_eq!(r_prime_sum(2, 0, 0).unwrap(), q(2, 1));
        assert_eq!(r_prime_sum(0, 0, 0).unwrap(), q(1, 1));
        // 3 - 8/3 + 3, from the term-by-term Fraction oracle
        assert_eq!(r_prime_sum(2, 0, 1).unwrap(), q(10, 3));
    }

    #[test]
    fn r_dprime_examples() {
        assert_eq!(r_dprime_sum(2, 0, 0).unwrap(), q(2, 1));
        assert_eq!(r_dprime_sum(0, 0, 0).unwrap(), q(0, 1));
        assert_eq!(r_dprime_sum(4, 1, 0).unwrap(), q(-4, 1));
        assert_eq!(
            r_dprime_sum(4, 1, 0).unwrap(),
            r_prime_sum(4, 1, 0).unwrap() * q(2, 1)
        );
    }

    #[test]
    fn t_sum_examples() {
        assert_eq!(t_sum(2, 0, 0).unwrap(), q(8, 1));
        assert_eq!(t_sum(2, 1, 0).unwrap(), q(0, 1));
        assert_eq!(t_sum(3, 1, 0).unwrap(), q(-6, 1));
        assert_eq!(t_sum(3, 1, 0).unwrap(), r_sum(3, 1, 0).unwrap() * q(3, 1));
    }

    #[test]
    fn untruncated_window_is_psi_with_power_one() {
        for n in 0..=14 {
            for l in 0..=5 {
                assert_eq!(psi_t(n, 0, l).unwrap(), psi(n, 1, l).unwrap());
            }
        }
    }

    #[test]
    fn shifted_t_form_holds() {
        for n in 1..=12u64 {
            for t in 0..=(n - 1) / 2 {
                for l in 0..=4 {
                    assert_eq!(t_sum_shifted(n, t, l).unwrap(), t_sum(n, t, l).unwrap());
                }
            }
        }
    }

    proptest! {
        #[test]
        fn odd_length_sums_vanish(half in 1u64..=10, m in 1u32..=4, l in 0u64..=6, t_seed in 0u64..100) {
            let n = 2 * half - 1;
            prop_assert!(psi(n, m, l).unwrap().is_zero());
            let t = t_seed % (n / 2 + 1);
            prop_assert!(psi_t(n, t, l).unwrap().is_zero());
        }

        #[test]
        fn weighted_sums_decompose(n in 0u64..=12, t_seed in 0u64..100, l in 0u64..=6) {
            let t = t_seed % (n / 2 + 1);
            let psi_v = from_integer(psi_t(n, t, l).unwrap());
            let r = r_sum(n, t, l).unwrap();
            let lhs = t_sum(n, t, l).unwrap();
            let rhs = r * from_integer(Integer::from(n + l + 1 - t)) - psi_v * from_integer(Integer::from(2 * l + 1));
            prop_assert_eq!(lhs, rhs);
        }
    }
}
