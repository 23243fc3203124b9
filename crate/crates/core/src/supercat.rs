//! Super Catalan numbers `S(n, l)`, Catalan numbers and the closed form
//! `phi(2n, l, t)` of the truncated convolution.

use std::collections::HashMap;
use std::sync::LazyLock;

use num_traits::Zero;
use parking_lot::RwLock;

use crate::error::{Error, Result};
use crate::exactnum::{central_binomial, choose, exact_div, factorial, sign, Integer};

/// The pair `(n, l)` indexing `S(n, l)`: `n` is the position, `l` the order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NLIndex {
    pub n: u64,
    pub l: u64,
}

impl NLIndex {
    pub fn new(n: u64, l: u64) -> Self {
        NLIndex { n, l }
    }

    pub fn swapped(self) -> Self {
        NLIndex { n: self.l, l: self.n }
    }
}

/// Arguments of `phi(2n, l, t)`; requires `t <= n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PhiParams {
    n: u64,
    l: u64,
    t: u64,
}

impl PhiParams {
    pub fn new(n: u64, l: u64, t: u64) -> Result<Self> {
        if t > n {
            return Err(Error::domain(format!("phi requires t <= n, got t={t}, n={n}")));
        }
        Ok(PhiParams { n, l, t })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn l(&self) -> u64 {
        self.l
    }

    pub fn t(&self) -> u64 {
        self.t
    }
}

/// `binom(2n,n) binom(2l,l) / binom(n+l,n)` with the remainder checked.
pub fn super_catalan_ratio(idx: NLIndex) -> Result<Integer> {
    let NLIndex { n, l } = idx;
    let num = central_binomial(n) * central_binomial(l);
    exact_div(&num, &choose(n + l, n), "super_catalan_ratio")
}

/// `(2n)! (2l)! / (n! l! (n+l)!)`.
pub fn super_catalan_factorial(idx: NLIndex) -> Result<Integer> {
    let NLIndex { n, l } = idx;
    let num = factorial(2 * n) * factorial(2 * l);
    let den = factorial(n) * factorial(l) * factorial(n + l);
    exact_div(&num, &den, "super_catalan_factorial")
}

/// von Szily's bilateral sum `sum_k (-1)^k binom(2n, n+k) binom(2l, l+k)`.
///
/// Terms with `|k| > min(n, l)` vanish, so only that window is summed.
pub fn super_catalan_von_szily(idx: NLIndex) -> Integer {
    let NLIndex { n, l } = idx;
    let w = n.min(l);
    let mut acc = Integer::zero();
    for k in 0..=w {
        let term = choose(2 * n, n + k) * choose(2 * l, l + k);
        if k == 0 {
            acc += term;
        } else {
            // k and -k contribute equally
            acc += sign(k) * term * 2u32;
        }
    }
    acc
}

static SUPER_CATALAN_MEMO: LazyLock<RwLock<HashMap<NLIndex, Integer>>> =
    LazyLock::new(|| RwLock::new(HashMap::new()));

/// `S(n, l)` through a process-wide memo. Safe under concurrent use; each
/// key is written at most once.
pub fn super_catalan(n: u64, l: u64) -> Result<Integer> {
    // S is symmetric, so cache under the ordered key.
    let key = if n <= l { NLIndex::new(n, l) } else { NLIndex::new(l, n) };
    if let Some(v) = SUPER_CATALAN_MEMO.read().get(&key) {
        return Ok(v.clone());
    }
    let value = super_catalan_ratio(key)?;
    let mut memo = SUPER_CATALAN_MEMO.write();
    Ok(memo.entry(key).or_insert(value).clone())
}

/// `C_n = binom(2n, n) / (n + 1)`.
pub fn catalan(n: u64) -> Result<Integer> {
    exact_div(&central_binomial(n), &Integer::from(n + 1), "catalan")
}

/// Closed form of the truncated convolution `Psi_t(2n, l)`:
///
/// ```text
/// (-1)^t binom(2l,l) binom(2t,t) binom(2(n+l-t),n+l-t) binom(2n,n) binom(2n-2t,n-t)
///        / ( binom(n+l,n) binom(2n+l-t,n) binom(n,t) )
/// ```
///
/// Numerator and denominator are formed in full and divided once.
pub fn phi(p: PhiParams) -> Result<Integer> {
    let PhiParams { n, l, t } = p;
    let num = central_binomial(l)
        * central_binomial(t)
        * central_binomial(n + l - t)
        * central_binomial(n)
        * central_binomial(n - t);
    let den = choose(n + l, n) * choose(2 * n + l - t, n) * choose(n, t);
    Ok(sign(t) * exact_div(&num, &den, "phi")?)
}

/// `phi(2n, 0, t)` in its reduced form
/// `(-1)^t binom(2t,t) binom(2n,n) binom(2n-2t,n-t) / binom(2n-t,t)`.
pub fn phi_order_zero(n: u64, t: u64) -> Result<Integer> {
    if t > n {
        return Err(Error::domain(format!("requires t <= n, got t={t}, n={n}")));
    }
    let num = central_binomial(t) * central_binomial(n) * central_binomial(n - t);
    Ok(sign(t) * exact_div(&num, &choose(2 * n - t, t), "phi_order_zero")?)
}

pub fn is_even(v: &Integer) -> bool {
    (v % 2u32).is_zero()
}
