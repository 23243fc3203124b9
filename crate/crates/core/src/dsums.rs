//! The method of D sums.
//!
//! For a power sum `A(n, m, l) = sum_k binom(n,k)^m F(n,k,l)` the D sums are
//!
//! ```text
//! D_A(n, j, t; l) = sum_{u=0}^{n-2j} binom(n-j, u) binom(n-j, j+u) binom(n, j+u)^t F(n, j+u, l)
//! ```
//!
//! with `A(n, m, l) = D_A(n, 0, m-2; l)` for `m >= 2`. The engine here is
//! generic over the summand; [`PsiSummand`] instantiates it for the
//! alternating super Catalan convolution and the rest of the module builds
//! the constructive divisibility pipeline for `Psi(2n, m, l)` on top.

use num_traits::{Pow, Zero};

use crate::error::{Error, Result};
use crate::exactnum::{
    central_binomial, choose, exact_div, from_integer, ratio, rational_to_integer, sign, Integer,
    Rational,
};
use crate::supercat::super_catalan;

/// An integer-valued summand `F(n, k, l)` for `0 <= k <= n`. Implementations
/// must be deterministic.
pub trait SummandFunction: Send + Sync {
    fn name(&self) -> &'static str;

    fn eval(&self, n: u64, k: u64, l: u64) -> Result<Integer>;
}

/// `F(n, k, l) = (-1)^k S(k, l) S(n-k, l)`.
#[derive(Debug, Clone, Copy, Default)]
pub struct PsiSummand;

impl SummandFunction for PsiSummand {
    fn name(&self) -> &'static str {
        "psi"
    }

    fn eval(&self, n: u64, k: u64, l: u64) -> Result<Integer> {
        Ok(sign(k) * super_catalan(k, l)? * super_catalan(n - k, l)?)
    }
}

/// `F = 1`, giving the plain power sums `sum_k binom(n,k)^m`.
#[derive(Debug, Clone, Copy, Default)]
pub struct UnitSummand;

impl SummandFunction for UnitSummand {
    fn name(&self) -> &'static str {
        "unit"
    }

    fn eval(&self, _n: u64, _k: u64, _l: u64) -> Result<Integer> {
        Ok(Integer::from(1))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct DSumParams {
    n: u64,
    j: u64,
    t: u64,
    l: u64,
}

impl DSumParams {
    pub fn new(n: u64, j: u64, t: u64, l: u64) -> Result<Self> {
        if j > n / 2 {
            return Err(Error::domain(format!(
                "D sums require j <= floor(n/2), got j={j}, n={n}"
            )));
        }
        Ok(DSumParams { n, j, t, l })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn j(&self) -> u64 {
        self.j
    }

    pub fn t(&self) -> u64 {
        self.t
    }

    pub fn l(&self) -> u64 {
        self.l
    }
}

/// Direct evaluation of `D_A(n, j, t; l)`.
pub fn d_sum_direct<F: SummandFunction + ?Sized>(f: &F, p: DSumParams) -> Result<Integer> {
    let DSumParams { n, j, t, l } = p;
    let mut acc = Integer::zero();
    for u in 0..=n - 2 * j {
        let k = j + u;
        let b: Integer = choose(n, k).pow(t as u32);
        acc += choose(n - j, u) * choose(n - j, k) * b * f.eval(n, k, l)?;
    }
    Ok(acc)
}

/// `D_A(n, j, t; l)` from level `t - 1`:
/// `sum_{u=0}^{floor((n-2j)/2)} binom(n, j+u) binom(n-j, u) D_A(n, j+u, t-1; l)`.
pub fn d_sum_step<F: SummandFunction + ?Sized>(f: &F, p: DSumParams) -> Result<Integer> {
    let DSumParams { n, j, t, l } = p;
    if t == 0 {
        return Err(Error::domain("the D-sum step computes level t from t-1 and needs t >= 1"));
    }
    let mut acc = Integer::zero();
    for u in 0..=(n - 2 * j) / 2 {
        let lower = d_sum_direct(f, DSumParams::new(n, j + u, t - 1, l)?)?;
        acc += choose(n, j + u) * choose(n - j, u) * lower;
    }
    Ok(acc)
}

/// `A_t(n, l) = sum_{k=t}^{n-t} binom(n-2t, k-t) F(n, k, l)`.
pub fn a_t<F: SummandFunction + ?Sized>(f: &F, n: u64, t: u64, l: u64) -> Result<Integer> {
    if t > n / 2 {
        return Err(Error::domain(format!(
            "A_t requires t <= floor(n/2), got t={t}, n={n}"
        )));
    }
    let mut acc = Integer::zero();
    for k in t..=n - t {
        acc += choose(n - 2 * t, k - t) * f.eval(n, k, l)?;
    }
    Ok(acc)
}

/// `D_A(n, j, 0; l)` through the windowed sums:
/// `sum_u binom(n-j, u) binom(n-j-u, j+u) A_{j+u}(n, l)`.
pub fn d_sum_base<F: SummandFunction + ?Sized>(f: &F, n: u64, j: u64, l: u64) -> Result<Integer> {
    DSumParams::new(n, j, 0, l)?;
    let mut acc = Integer::zero();
    for u in 0..=(n - 2 * j) / 2 {
        acc += choose(n - j, u) * choose(n - j - u, j + u) * a_t(f, n, j + u, l)?;
    }
    Ok(acc)
}

/// `D_A(n, j, 0; l)` in its nested double-sum form:
/// `sum_u binom(n-j, j+u) binom(n-2j-u, u) sum_v binom(n-2j-2u, v) F(n, j+u+v, l)`.
pub fn d_sum_base_nested<F: SummandFunction + ?Sized>(
    f: &F,
    n: u64,
    j: u64,
    l: u64,
) -> Result<Integer> {
    DSumParams::new(n, j, 0, l)?;
    let mut acc = Integer::zero();
    for u in 0..=(n - 2 * j) / 2 {
        let width = n - 2 * j - 2 * u;
        let mut inner = Integer::zero();
        for v in 0..=width {
            inner += choose(width, v) * f.eval(n, j + u + v, l)?;
        }
        acc += choose(n - j, j + u) * choose(n - 2 * j - u, u) * inner;
    }
    Ok(acc)
}

fn check_s(n: u64, s: u64) -> Result<()> {
    if s > n {
        return Err(Error::domain(format!("Q sums require s <= n, got s={s}, n={n}")));
    }
    Ok(())
}

/// `Q(n, s, l) = sum_{v=0}^{n-s} (-1)^v binom(2(s+v), s+v) binom(2(n+l-s-v), n+l-s-v)
/// binom(n-s, v) / binom(2n+l-s-v, n)`.
pub fn q_sum(n: u64, s: u64, l: u64) -> Result<Rational> {
    check_s(n, s)?;
    let mut acc = Rational::zero();
    for v in 0..=n - s {
        let num = sign(v)
            * central_binomial(s + v)
            * central_binomial(n + l - s - v)
            * choose(n - s, v);
        acc += ratio(num, choose(2 * n + l - s - v, n));
    }
    Ok(acc)
}

/// `binom(2n, n) Q(n, s, l)`, asserted integral.
pub fn q_scaled(n: u64, s: u64, l: u64) -> Result<Integer> {
    let scaled = q_sum(n, s, l)? * from_integer(central_binomial(n));
    rational_to_integer(&scaled, "q_scaled")
}

/// `binom(2n, n) Q(n, s, l)` as the integer combination
/// `sum_v (-1)^v binom(2(s+v), s+v) binom(n-s, v) S(n, n+l-s-v)`.
pub fn q_scaled_super_catalan(n: u64, s: u64, l: u64) -> Result<Integer> {
    check_s(n, s)?;
    let mut acc = Integer::zero();
    for v in 0..=n - s {
        acc += sign(v) * central_binomial(s + v) * choose(n - s, v) * super_catalan(n, n + l - s - v)?;
    }
    Ok(acc)
}

/// A value together with an explicit factorisation `value = s_factor * cofactor`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness<C> {
    pub value: Integer,
    pub s_factor: Integer,
    pub cofactor: C,
}

fn check_j_le_n(n: u64, j: u64) -> Result<()> {
    if j > n {
        return Err(Error::domain(format!("requires j <= n, got j={j}, n={n}")));
    }
    Ok(())
}

/// Closed form of `D_Psi(2n, j, 0; l)` with `S(n, l)` factored out:
///
/// ```text
/// S(n,l) sum_{u=0}^{n-j} (-1)^{j+u} binom(2(j+u),j+u) binom(2(n+l-j-u),n+l-j-u)
///        binom(2n-j,n) binom(n-j,u) / binom(2n+l-j-u,n)
/// ```
///
/// The cofactor is rational in general; the product is checked to be the
/// integer obtained by direct evaluation.
pub fn d_psi_base_closed(n: u64, j: u64, l: u64) -> Result<Witness<Rational>> {
    check_j_le_n(n, j)?;
    let mut cofactor = Rational::zero();
    for u in 0..=n - j {
        let num = sign(j + u)
            * central_binomial(j + u)
            * central_binomial(n + l - j - u)
            * choose(2 * n - j, n)
            * choose(n - j, u);
        cofactor += ratio(num, choose(2 * n + l - j - u, n));
    }
    let s_factor = super_catalan(n, l)?;
    let value = rational_to_integer(&(&cofactor * from_integer(s_factor.clone())), "d_psi_base_closed")?;
    let direct = d_sum_direct(&PsiSummand, DSumParams::new(2 * n, j, 0, l)?)?;
    if value != direct {
        return Err(Error::integrity(
            "d_psi_base_closed",
            format!("closed form {value} differs from direct evaluation {direct}"),
        ));
    }
    Ok(Witness {
        value,
        s_factor,
        cofactor,
    })
}

/// Integer cofactor of `D_Psi(2n, j, 1; l) / S(n, l)`:
/// `(-1)^j sum_{u=0}^{n-j} (-1)^u binom(2n-j, u) binom(n, j+u) binom(2n,n) Q(n, j+u, l)`.
pub fn level1_cofactor(n: u64, j: u64, l: u64) -> Result<Integer> {
    check_j_le_n(n, j)?;
    let mut acc = Integer::zero();
    for u in 0..=n - j {
        acc += sign(u) * choose(2 * n - j, u) * choose(n, j + u) * q_scaled(n, j + u, l)?;
    }
    Ok(sign(j) * acc)
}

/// `D_Psi(2n, j, 1; l)` with its `S(n, l)` divisibility witness, checked
/// against direct evaluation.
pub fn d_psi_level1(n: u64, j: u64, l: u64) -> Result<Witness<Integer>> {
    let cofactor = level1_cofactor(n, j, l)?;
    let s_factor = super_catalan(n, l)?;
    let value = &s_factor * &cofactor;
    let direct = d_sum_direct(&PsiSummand, DSumParams::new(2 * n, j, 1, l)?)?;
    if value != direct {
        return Err(Error::integrity(
            "d_psi_level1",
            format!("witness product {value} differs from direct evaluation {direct}"),
        ));
    }
    Ok(Witness {
        value,
        s_factor,
        cofactor,
    })
}

/// Quotients `D_Psi(2n, j, t; l) / S(n, l)` for `t = 1..=max_level` and
/// `0 <= j <= n`, propagated level by level through the D-sum step from
/// the level-1 witnesses. No quotient is obtained by dividing.
#[derive(Debug, Clone)]
pub struct WitnessTable {
    n: u64,
    l: u64,
    // levels[t - 1][j]
    levels: Vec<Vec<Integer>>,
}

impl WitnessTable {
    pub fn build(n: u64, l: u64, max_level: u64) -> Result<Self> {
        let mut levels = Vec::with_capacity(max_level as usize);
        if max_level >= 1 {
            let first = (0..=n)
                .map(|j| level1_cofactor(n, j, l))
                .collect::<Result<Vec<_>>>()?;
            levels.push(first);
        }
        for _ in 2..=max_level {
            let prev: &Vec<Integer> = levels.last().expect("level 1 present");
            let next = (0..=n)
                .map(|j| {
                    (0..=n - j).fold(Integer::zero(), |acc, u| {
                        acc + choose(2 * n, j + u) * choose(2 * n - j, u) * &prev[(j + u) as usize]
                    })
                })
                .collect();
            levels.push(next);
        }
        Ok(WitnessTable { n, l, levels })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn l(&self) -> u64 {
        self.l
    }

    pub fn max_level(&self) -> u64 {
        self.levels.len() as u64
    }

    /// Quotient at level `t >= 1` and `j <= n`.
    pub fn quotient(&self, j: u64, t: u64) -> Option<&Integer> {
        if t == 0 {
            return None;
        }
        self.levels.get(t as usize - 1)?.get(j as usize)
    }
}

/// Cofactor of `Psi(2n, 2, l) = S(n, l) sum_{u=0}^{n} (-1)^u binom(2u,u) S(n, n+l-u) binom(n,u)`.
pub fn psi_square_cofactor(n: u64, l: u64) -> Result<Integer> {
    let mut acc = Integer::zero();
    for u in 0..=n {
        acc += sign(u) * central_binomial(u) * super_catalan(n, n + l - u)? * choose(n, u);
    }
    Ok(acc)
}

/// `Psi(2n, m, l) / S(n, l)` built constructively: the product form for
/// `m = 1`, the square cofactor for `m = 2` and propagated D-sum witnesses
/// for `m >= 3`.
pub fn psi_quotient_witness(n: u64, m: u32, l: u64) -> Result<Integer> {
    match m {
        0 => Err(Error::domain("binomial power m must be at least 1")),
        1 => super_catalan(n + l, n),
        2 => psi_square_cofactor(n, l),
        _ => {
            let level = u64::from(m) - 2;
            let table = WitnessTable::build(n, l, level)?;
            Ok(table.quotient(0, level).expect("level built").clone())
        }
    }
}

/// `binom(2n-t, t) Psi_t(2n, l)` in closed form:
/// `(-1)^t binom(2l,l) binom(2t,t) binom(2(n+l-t),n+l-t) binom(2n,n) binom(2n-t,n)
///  / (binom(n+l,n) binom(2n+l-t,n))`.
pub fn psi_t_scaled_closed(n: u64, t: u64, l: u64) -> Result<Integer> {
    if t > n {
        return Err(Error::domain(format!("requires t <= n, got t={t}, n={n}")));
    }
    let num = central_binomial(l)
        * central_binomial(t)
        * central_binomial(n + l - t)
        * central_binomial(n)
        * choose(2 * n - t, n);
    let den = choose(n + l, n) * choose(2 * n + l - t, n);
    Ok(sign(t) * exact_div(&num, &den, "psi_t_scaled_closed")?)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DivisibilityOutcome {
    Divisible { quotient: Integer },
    NotDivisible { remainder: Integer },
}

impl DivisibilityOutcome {
    pub fn is_divisible(&self) -> bool {
        matches!(self, DivisibilityOutcome::Divisible { .. })
    }

    /// Non-negative remainder, zero when divisible.
    pub fn remainder(&self) -> Integer {
        match self {
            DivisibilityOutcome::Divisible { .. } => Integer::zero(),
            DivisibilityOutcome::NotDivisible { remainder } => remainder.clone(),
        }
    }
}

/// Divides `value` by a non-zero `divisor`, reporting the floor remainder on failure.
pub fn check_divisibility(value: &Integer, divisor: &Integer) -> Result<DivisibilityOutcome> {
    use num_integer::Integer as _;
    if divisor.is_zero() {
        return Err(Error::domain("divisor must be non-zero"));
    }
    let (quotient, remainder) = value.div_mod_floor(divisor);
    Ok(if remainder.is_zero() {
        DivisibilityOutcome::Divisible { quotient }
    } else {
        DivisibilityOutcome::NotDivisible { remainder }
    })
}

/// Whether `S(n, l)` divides `Psi(2n, m, l)`, with the quotient or remainder.
pub fn psi_divisibility_check(n: u64, m: u32, l: u64) -> Result<DivisibilityOutcome> {
    let value = crate::sums::psi(2 * n, m, l)?;
    check_divisibility(&value, &super_catalan(n, l)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sums::{psi, psi_t};

    fn int(v: i64) -> Integer {
        Integer::from(v)
    }

    fn dp(n: u64, j: u64, t: u64, l: u64) -> DSumParams {
        DSumParams::new(n, j, t, l).unwrap()
    }

    #[test]
    fn direct_examples() {
        assert_eq!(d_sum_direct(&PsiSummand, dp(2, 0, 0, 0)).unwrap(), int(-4));
        assert_eq!(d_sum_direct(&PsiSummand, dp(2, 1, 0, 0)).unwrap(), int(-4));
        assert_eq!(d_sum_direct(&PsiSummand, dp(2, 0, 1, 0)).unwrap(), int(-20));
        assert_eq!(psi(2, 2, 0).unwrap(), int(-4));
    }

    #[test]
    fn params_reject_large_j() {
        assert!(matches!(DSumParams::new(5, 3, 0, 0), Err(Error::Domain(_))));
        assert!(d_sum_base(&PsiSummand, 3, 2, 0).is_err());
        assert!(a_t(&UnitSummand, 3, 2, 0).is_err());
    }

    #[test]
    fn step_examples() {
        assert_eq!(d_sum_step(&PsiSummand, dp(2, 0, 1, 0)).unwrap(), int(-20));
        assert_eq!(d_sum_step(&PsiSummand, dp(2, 1, 1, 0)).unwrap(), int(-8));
        assert_eq!(d_sum_step(&PsiSummand, dp(0, 0, 1, 0)).unwrap(), int(1));
        assert!(d_sum_step(&PsiSummand, dp(2, 0, 0, 0)).is_err());
    }

    #[test]
    fn a_t_examples() {
        assert_eq!(a_t(&PsiSummand, 2, 0, 0).unwrap(), int(4));
        assert_eq!(a_t(&PsiSummand, 2, 1, 0).unwrap(), int(-4));
        assert_eq!(a_t(&PsiSummand, 4, 1, 0).unwrap(), int(-8));
        for n in 0..=10 {
            for t in 0..=n / 2 {
                assert_eq!(a_t(&PsiSummand, n, t, 3).unwrap(), psi_t(n, t, 3).unwrap());
            }
        }
    }

    #[test]
    fn base_examples() {
        assert_eq!(d_sum_base(&PsiSummand, 2, 0, 0).unwrap(), int(-4));
        assert_eq!(d_sum_base(&PsiSummand, 2, 1, 0).unwrap(), int(-4));
        assert_eq!(d_sum_base(&PsiSummand, 0, 0, 0).unwrap(), int(1));
        assert_eq!(d_sum_base_nested(&PsiSummand, 2, 0, 0).unwrap(), int(-4));
    }

    #[test]
    fn unit_summand_gives_power_sums() {
        // sum_k binom(n,k)^m, checked against plain loops
        for n in 0..=10u64 {
            for m in 2..=5u32 {
                let expected: Integer = (0..=n).map(|k| choose(n, k).pow(m)).sum();
                assert_eq!(d_sum_direct(&UnitSummand, dp(n, 0, u64::from(m) - 2, 0)).unwrap(), expected);
            }
        }
    }

    #[test]
    fn q_examples() {
        assert_eq!(q_sum(1, 0, 0).unwrap(), ratio(-1, 1));
        // single v = 0 term: binom(2,1) binom(0,0) binom(0,0) / binom(1,1)
        assert_eq!(q_sum(1, 1, 0).unwrap(), ratio(2, 1));
        assert_eq!(q_sum(0, 0, 0).unwrap(), ratio(1, 1));
        assert!(q_sum(1, 2, 0).is_err());
    }

    #[test]
    fn q_scaled_examples() {
        assert_eq!(q_scaled(1, 0, 0).unwrap(), int(-2));
        assert_eq!(q_scaled(0, 0, 0).unwrap(), int(1));
        assert_eq!(q_scaled(1, 1, 0).unwrap(), int(4));
        for n in 0..=8 {
            for s in 0..=n {
                for l in 0..=4 {
                    assert_eq!(q_scaled(n, s, l).unwrap(), q_scaled_super_catalan(n, s, l).unwrap());
                }
            }
        }
    }

    #[test]
    fn base_closed_examples() {
        let w = d_psi_base_closed(1, 0, 0).unwrap();
        assert_eq!((w.value, w.cofactor), (int(-4), ratio(-2, 1)));
        let w = d_psi_base_closed(1, 1, 0).unwrap();
        assert_eq!((w.value, w.cofactor), (int(-4), ratio(-2, 1)));
        let w = d_psi_base_closed(0, 0, 0).unwrap();
        assert_eq!((w.value, w.cofactor), (int(1), ratio(1, 1)));
        assert!(d_psi_base_closed(1, 2, 0).is_err());
    }

    #[test]
    fn level1_examples() {
        let w = d_psi_level1(1, 0, 0).unwrap();
        assert_eq!((w.value, w.s_factor, w.cofactor), (int(-20), int(2), int(-10)));
        let w = d_psi_level1(1, 1, 0).unwrap();
        assert_eq!((w.value, w.cofactor), (int(-8), int(-4)));
        let w = d_psi_level1(0, 0, 0).unwrap();
        assert_eq!((w.value, w.cofactor), (int(1), int(1)));
    }

    #[test]
    fn witness_table_matches_direct_evaluation() {
        for n in 0..=6 {
            for l in 0..=3 {
                let table = WitnessTable::build(n, l, 3).unwrap();
                let s = super_catalan(n, l).unwrap();
                for t in 1..=3 {
                    for j in 0..=n {
                        let direct = d_sum_direct(&PsiSummand, dp(2 * n, j, t, l)).unwrap();
                        assert_eq!(&s * table.quotient(j, t).unwrap(), direct, "n={n} l={l} t={t} j={j}");
                    }
                }
                assert!(table.quotient(0, 0).is_none());
                assert!(table.quotient(0, 4).is_none());
            }
        }
    }

    #[test]
    fn divisibility_examples() {
        assert_eq!(
            psi_divisibility_check(4, 1, 2).unwrap(),
            DivisibilityOutcome::Divisible { quotient: int(308) }
        );
        assert_eq!(
            psi_divisibility_check(1, 3, 0).unwrap(),
            DivisibilityOutcome::Divisible { quotient: int(-10) }
        );
        assert_eq!(
            psi_divisibility_check(0, 5, 9).unwrap(),
            DivisibilityOutcome::Divisible { quotient: central_binomial(9) }
        );
        let remark = check_divisibility(&psi(8, 1, 2).unwrap(), &choose(8, 4)).unwrap();
        assert_eq!(remark, DivisibilityOutcome::NotDivisible { remainder: int(14) });
        assert_eq!(remark.remainder(), int(14));
        assert!(check_divisibility(&int(3), &int(0)).is_err());
    }

    #[test]
    fn witness_quotients_match_division() {
        for n in 0..=6 {
            for l in 0..=4 {
                for m in 1..=5 {
                    let q = psi_quotient_witness(n, m, l).unwrap();
                    match psi_divisibility_check(n, m, l).unwrap() {
                        DivisibilityOutcome::Divisible { quotient } => assert_eq!(q, quotient),
                        other => panic!("not divisible at n={n} m={m} l={l}: {other:?}"),
                    }
                }
            }
        }
        assert!(psi_quotient_witness(1, 0, 0).is_err());
    }

    #[test]
    fn scaled_closed_form_matches_truncated_sum() {
        for n in 0..=8 {
            for t in 0..=n {
                for l in 0..=4 {
                    assert_eq!(
                        psi_t_scaled_closed(n, t, l).unwrap(),
                        choose(2 * n - t, t) * psi_t(2 * n, t, l).unwrap()
                    );
                }
            }
        }
    }
}
