//! Exact integer and rational arithmetic plus the combinatorial primitives
//! the rest of the crate is built on.
//!
//! [`Integer`] and [`Rational`] are arbitrary precision and never round.
//! Binomial coefficients follow the convention `binom(n, k) = 0` whenever
//! `k < 0` or `k > n`, so shifted and bilateral sums need no edge cases.

use std::sync::LazyLock;

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision signed integer.
pub type Integer = BigInt;

/// Exact fraction, always stored reduced with a positive denominator.
pub type Rational = BigRational;

/// Rows of the shared Pascal table consulted by [`choose`].
const SHARED_PASCAL_ROWS: u64 = 192;

static SHARED_PASCAL: LazyLock<PascalTable> =
    LazyLock::new(|| PascalTable::new(SHARED_PASCAL_ROWS - 1));

/// `n!`.
pub fn factorial(n: u64) -> Integer {
    (2..=n).fold(Integer::one(), |acc, i| acc * i)
}

/// `binom(n, k)` for any integer `k`; zero outside `0 <= k <= n`.
///
/// A negative upper index is rejected.
pub fn binomial(n: i64, k: i64) -> Result<Integer> {
    if n < 0 {
        return Err(Error::NegativeUpperIndex(n));
    }
    if k < 0 || k > n {
        return Ok(Integer::zero());
    }
    Ok(choose(n as u64, k as u64))
}

/// `binom(2n, n)`.
pub fn central_binomial(n: u64) -> Integer {
    choose(2 * n, n)
}

/// Non-negative binomial with the zero convention for `k > n`.
///
/// Small arguments are served from a shared Pascal table, larger ones by
/// the multiplicative formula.
pub fn choose(n: u64, k: u64) -> Integer {
    if k > n {
        return Integer::zero();
    }
    if n < SHARED_PASCAL_ROWS {
        return SHARED_PASCAL.get(n, k);
    }
    binomial_multiplicative(n, k)
}

/// Multiplicative formula with a running exact division; each partial
/// product `binom(n-k+i, i)` is itself an integer.
pub fn binomial_multiplicative(n: u64, k: u64) -> Integer {
    if k > n {
        return Integer::zero();
    }
    let k = k.min(n - k);
    let mut acc = Integer::one();
    for i in 1..=k {
        acc *= n - k + i;
        acc /= i;
    }
    acc
}

/// `(-1)^e` as an Integer.
pub fn sign(e: u64) -> Integer {
    if e.is_multiple_of(2) {
        Integer::one()
    } else {
        -Integer::one()
    }
}

/// Exact quotient `num / den`, failing with an integrity error when the
/// division leaves a remainder.
pub fn exact_div(num: &Integer, den: &Integer, context: &'static str) -> Result<Integer> {
    if den.is_zero() {
        return Err(Error::integrity(context, "division by zero"));
    }
    let (q, r) = num.div_rem(den);
    if !r.is_zero() {
        return Err(Error::integrity(
            context,
            format!("{num} is not divisible by {den} (remainder {r})"),
        ));
    }
    Ok(q)
}

/// The Integer value of a Rational known to be integral.
pub fn rational_to_integer(value: &Rational, context: &'static str) -> Result<Integer> {
    if value.is_integer() {
        Ok(value.to_integer())
    } else {
        Err(Error::integrity(context, format!("{value} is not an integer")))
    }
}

pub fn ratio(num: impl Into<Integer>, den: impl Into<Integer>) -> Rational {
    Rational::new(num.into(), den.into())
}

pub fn from_integer(value: Integer) -> Rational {
    Rational::from_integer(value)
}

/// Decimal rendering: integers plainly, non-integral rationals as `p/q`.
pub fn render_rational(value: &Rational) -> String {
    if value.is_integer() {
        value.to_integer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}

/// True when `divisor` divides `value` exactly. `divisor` must be non-zero.
pub fn divides(divisor: &Integer, value: &Integer) -> bool {
    value.mod_floor(&divisor.abs()).is_zero()
}

/// Pascal's triangle up to a fixed row, built once and read-only afterwards,
/// so it can be shared freely between threads.
#[derive(Debug, Clone)]
pub struct PascalTable {
    rows: Vec<Vec<Integer>>,
}

impl PascalTable {
    /// Rows `0..=max_n`.
    pub fn new(max_n: u64) -> Self {
        let mut rows: Vec<Vec<Integer>> = Vec::with_capacity(max_n as usize + 1);
        for n in 0..=max_n as usize {
            let row = (0..=n)
                .map(|k| {
                    if k == 0 || k == n {
                        Integer::one()
                    } else {
                        &rows[n - 1][k - 1] + &rows[n - 1][k]
                    }
                })
                .collect();
            rows.push(row);
        }
        PascalTable { rows }
    }

    pub fn max_n(&self) -> u64 {
        self.rows.len() as u64 - 1
    }

    /// `binom(n, k)`, zero for `k > n`. Rows beyond the table fall back to
    /// the multiplicative formula.
    pub fn get(&self, n: u64, k: u64) -> Integer {
        match self.rows.get(n as usize) {
            Some(row) => row.get(k as usize).cloned().unwrap_or_default(),
            None => binomial_multiplicative(n, k),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn int(v: i64) -> Integer {
        Integer::from(v)
    }

    #[test]
    fn factorial_values() {
        assert_eq!(factorial(0), int(1));
        assert_eq!(factorial(1), int(1));
        let oracle: u64 = (1..=5).product();
        assert_eq!(factorial(5), int(oracle as i64));
        assert_eq!(factorial(20), int(2_432_902_008_176_640_000));
    }

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial(4, 2).unwrap(), int(6));
        assert_eq!(binomial(5, 0).unwrap(), int(1));
        assert_eq!(binomial(3, 7).unwrap(), int(0));
        assert_eq!(binomial(3, -1).unwrap(), int(0));
        assert_eq!(binomial(0, 0).unwrap(), int(1));
    }

    #[test]
    fn binomial_rejects_negative_upper_index() {
        assert_eq!(binomial(-1, 0), Err(Error::NegativeUpperIndex(-1)));
    }

    #[test]
    fn central_binomial_examples() {
        assert_eq!(central_binomial(0), int(1));
        assert_eq!(central_binomial(2), int(6));
        assert_eq!(central_binomial(4), int(70));
    }

    #[test]
    fn large_binomial_matches_known_value() {
        // outside the shared table
        let expected: Integer = "98913082887808032681188722800".parse().unwrap();
        assert_eq!(binomial_multiplicative(100, 49), expected);
        let expected: Integer =
            "297242911333923795640059429176065863139989673213703918037987737481286092000"
                .parse()
                .unwrap();
        assert_eq!(choose(1000, 42), expected);
    }

    #[test]
    fn pascal_table_agrees_with_multiplicative() {
        let table = PascalTable::new(80);
        assert_eq!(table.max_n(), 80);
        for n in 0..=80 {
            for k in 0..=n + 2 {
                assert_eq!(table.get(n, k), binomial_multiplicative(n, k), "({n},{k})");
            }
        }
        assert_eq!(table.get(90, 45), binomial_multiplicative(90, 45));
    }

    #[test]
    fn pascal_rule_and_symmetry() {
        for n in 1..=64i64 {
            for k in 0..=n {
                let b = binomial(n, k).unwrap();
                assert_eq!(b, binomial(n - 1, k - 1).unwrap() + binomial(n - 1, k).unwrap());
                assert_eq!(b, binomial(n, n - k).unwrap());
            }
        }
    }

    #[test]
    fn central_binomial_doubling_recurrence() {
        for l in 0..=64u64 {
            assert_eq!(
                central_binomial(l + 1) * (l + 1),
                central_binomial(l) * 2 * (2 * l + 1)
            );
        }
    }

    #[test]
    fn subcommittee_identity() {
        // binom(n-j, j+u) binom(n-2j-u, u) = binom(n-j, u) binom(n-j-u, j+u)
        for n in 0..=40i64 {
            for j in 0..=n / 2 {
                for u in 0..=n - 2 * j {
                    let lhs = binomial(n - j, j + u).unwrap() * binomial(n - 2 * j - u, u).unwrap();
                    let rhs = binomial(n - j, u).unwrap() * binomial(n - j - u, j + u).unwrap();
                    assert_eq!(lhs, rhs, "n={n} j={j} u={u}");
                }
            }
        }
    }

    #[test]
    fn exact_div_reports_remainder() {
        assert_eq!(exact_div(&int(12), &int(4), "t").unwrap(), int(3));
        assert_eq!(exact_div(&int(-12), &int(4), "t").unwrap(), int(-3));
        assert!(matches!(
            exact_div(&int(13), &int(4), "t"),
            Err(Error::Integrity { .. })
        ));
        assert!(exact_div(&int(1), &int(0), "t").is_err());
    }

    #[test]
    fn rational_rendering() {
        assert_eq!(render_rational(&ratio(8, 2)), "4");
        assert_eq!(render_rational(&ratio(-10, 6)), "-5/3");
        assert_eq!(render_rational(&ratio(0, 7)), "0");
    }

    #[test]
    fn divisibility_helper() {
        assert!(divides(&int(28), &int(8624)));
        assert!(!divides(&int(70), &int(8624)));
        assert!(divides(&int(-7), &int(-14)));
        assert!(divides(&int(5), &int(0)));
    }

    fn small_fraction() -> impl Strategy<Value = Rational> {
        (-1000i64..1000, 1i64..1000).prop_map(|(n, d)| ratio(n, d))
    }

    proptest! {
        #[test]
        fn rational_add_sub_roundtrip(a in small_fraction(), b in small_fraction()) {
            prop_assert_eq!(&(&a + &b) - &b, a);
        }

        #[test]
        fn rational_always_normalized(n in -10_000i64..10_000, d in -500i64..500) {
            prop_assume!(d != 0);
            let r = ratio(n, d);
            prop_assert!(r.denom().is_positive());
            prop_assert!(r.numer().gcd(r.denom()).is_one());
            let again = Rational::new(r.numer().clone(), r.denom().clone());
            prop_assert_eq!(again, r);
        }

        #[test]
        fn integral_rational_equals_integer(v in -100_000i64..100_000, d in 1i64..50) {
            let r = ratio(v * d, d);
            prop_assert_eq!(r.clone(), from_integer(int(v)));
            prop_assert_eq!(rational_to_integer(&r, "t").unwrap(), int(v));
        }
    }
}
