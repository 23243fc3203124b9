//! Every checkable claim as a named identity with an exact domain.
//!
//! Identities with rational coefficients are stated with denominators
//! cleared, so each check is a plain equality of exact values. Where an
//! identity is indexed by `n`, the meaning of `n` is given in its
//! description (e.g. `thm2` checks `Psi_t(2n, l)` while `eq20` takes the
//! raw odd length).

use std::sync::LazyLock;

use num_integer::Integer as _;
use num_traits::{Pow, Zero};

use crate::dsums::{
    a_t, d_psi_base_closed, d_sum_base, d_sum_base_nested, d_sum_direct, d_sum_step,
    level1_cofactor, psi_quotient_witness, psi_square_cofactor, psi_t_scaled_closed, q_scaled,
    q_scaled_super_catalan, DSumParams, PsiSummand, SummandFunction, UnitSummand, WitnessTable,
};
use crate::error::Result;
use crate::exactnum::{
    central_binomial, choose, exact_div, from_integer, render_rational, sign, Integer, Rational,
};
use crate::sums::{p_sum, psi, psi_t, r_dprime_sum, r_prime_sum, r_sum, t_sum, t_sum_shifted};
use crate::supercat::{
    catalan, phi, phi_order_zero, super_catalan, super_catalan_factorial, super_catalan_ratio,
    super_catalan_von_szily, NLIndex, PhiParams,
};

use super::report::Point;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Param {
    N,
    L,
    T,
    M,
    J,
}

/// Parameter values with unused ones set to zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Args {
    pub n: u64,
    pub l: u64,
    pub t: u64,
    pub m: u64,
    pub j: u64,
}

impl From<&Point> for Args {
    fn from(p: &Point) -> Self {
        Args {
            n: p.n.unwrap_or(0),
            l: p.l.unwrap_or(0),
            t: p.t.unwrap_or(0),
            m: p.m.unwrap_or(0),
            j: p.j.unwrap_or(0),
        }
    }
}

/// What a checker computed. Divisibility evaluations are rendered as the
/// remainder against `0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Evaluation {
    Equal { lhs: String, rhs: String },
    Divides { dividend: Integer, divisor: Integer },
    NotDivides { dividend: Integer, divisor: Integer },
}

impl Evaluation {
    pub fn ints(lhs: Integer, rhs: Integer) -> Self {
        Evaluation::Equal {
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        }
    }

    pub fn rationals(lhs: Rational, rhs: Rational) -> Self {
        Evaluation::Equal {
            lhs: render_rational(&lhs),
            rhs: render_rational(&rhs),
        }
    }

    pub(crate) fn remainder(dividend: &Integer, divisor: &Integer) -> Integer {
        dividend.mod_floor(&num_traits::Signed::abs(divisor))
    }
}

pub type DomainFn = fn(&Args) -> std::result::Result<(), String>;
pub type CheckFn = fn(&Args) -> Result<Evaluation>;

pub struct IdentitySpec {
    pub id: &'static str,
    pub description: &'static str,
    pub params: &'static [Param],
    pub domain: DomainFn,
    pub check: CheckFn,
}

impl std::fmt::Debug for IdentitySpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("IdentitySpec")
            .field("id", &self.id)
            .field("params", &self.params)
            .finish()
    }
}

impl IdentitySpec {
    pub fn uses(&self, p: Param) -> bool {
        self.params.contains(&p)
    }

    /// The point restricted to this identity's parameters.
    pub fn project(&self, point: &Point) -> Point {
        Point {
            n: point.n.filter(|_| self.uses(Param::N)),
            l: point.l.filter(|_| self.uses(Param::L)),
            t: point.t.filter(|_| self.uses(Param::T)),
            m: point.m.filter(|_| self.uses(Param::M)),
            j: point.j.filter(|_| self.uses(Param::J)),
        }
    }

    /// `Ok` when `point` carries every parameter and satisfies the domain.
    pub fn admits(&self, point: &Point) -> std::result::Result<(), String> {
        let present = [
            (Param::N, point.n, "n"),
            (Param::L, point.l, "l"),
            (Param::T, point.t, "t"),
            (Param::M, point.m, "m"),
            (Param::J, point.j, "j"),
        ];
        for (p, v, name) in present {
            if self.uses(p) && v.is_none() {
                return Err(format!("missing parameter {name}"));
            }
        }
        (self.domain)(&Args::from(point))
    }
}

fn any(_: &Args) -> std::result::Result<(), String> {
    Ok(())
}

fn require(cond: bool, msg: &str) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.to_string())
    }
}

fn int(v: u64) -> Integer {
    Integer::from(v)
}

fn rat(v: Integer) -> Rational {
    from_integer(v)
}

fn m32(a: &Args) -> u32 {
    a.m as u32
}

fn s(n: u64, l: u64) -> Result<Integer> {
    super_catalan(n, l)
}

fn dp(n: u64, j: u64, t: u64, l: u64) -> Result<DSumParams> {
    DSumParams::new(n, j, t, l)
}

fn power_sum<F: SummandFunction>(f: &F, n: u64, m: u32, l: u64) -> Result<Integer> {
    let mut acc = Integer::zero();
    for k in 0..=n {
        let b: Integer = choose(n, k).pow(m);
        acc += b * f.eval(n, k, l)?;
    }
    Ok(acc)
}

fn eq12<F: SummandFunction>(f: &F, a: &Args) -> Result<Evaluation> {
    Ok(Evaluation::ints(
        power_sum(f, a.n, m32(a), a.l)?,
        d_sum_direct(f, dp(a.n, 0, a.m - 2, a.l)?)?,
    ))
}

fn eq13<F: SummandFunction>(f: &F, a: &Args) -> Result<Evaluation> {
    let p = dp(a.n, a.j, a.t, a.l)?;
    Ok(Evaluation::ints(d_sum_step(f, p)?, d_sum_direct(f, p)?))
}

fn eq14<F: SummandFunction>(f: &F, a: &Args) -> Result<Evaluation> {
    Ok(Evaluation::ints(
        d_sum_base_nested(f, a.n, a.j, a.l)?,
        d_sum_direct(f, dp(a.n, a.j, 0, a.l)?)?,
    ))
}

fn eq17<F: SummandFunction>(f: &F, a: &Args) -> Result<Evaluation> {
    Ok(Evaluation::ints(
        d_sum_base(f, a.n, a.j, a.l)?,
        d_sum_direct(f, dp(a.n, a.j, 0, a.l)?)?,
    ))
}

fn d_window(a: &Args) -> std::result::Result<(), String> {
    require(a.j <= a.n / 2, "requires j <= floor(n/2)")
}

fn t_le_n(a: &Args) -> std::result::Result<(), String> {
    require(a.t <= a.n, "requires t <= n")
}

fn t_lt_n(a: &Args) -> std::result::Result<(), String> {
    require(a.t < a.n, "requires t < n (so n >= 1)")
}

fn j_le_n(a: &Args) -> std::result::Result<(), String> {
    require(a.j <= a.n, "requires j <= n")
}

fn window_raw(a: &Args) -> std::result::Result<(), String> {
    require(2 * a.t <= a.n, "requires t <= floor(n/2)")
}

fn window_strict(a: &Args) -> std::result::Result<(), String> {
    require(2 * a.t < a.n, "requires 2t < n")
}

fn m_ge2(a: &Args) -> std::result::Result<(), String> {
    require(a.m >= 2, "requires m >= 2")
}

fn l_ge1(a: &Args) -> std::result::Result<(), String> {
    require(a.l >= 1, "requires l >= 1")
}

use Param::{J, L, M, N, T};

static REGISTRY: LazyLock<Vec<IdentitySpec>> = LazyLock::new(|| {
    vec![
        // super Catalan numbers
        IdentitySpec {
            id: "vonszily",
            description: "S(n,l) by von Szily's bilateral sum equals the factorial formula",
            params: &[N, L],
            domain: any,
            check: |a| {
                let idx = NLIndex::new(a.n, a.l);
                Ok(Evaluation::ints(super_catalan_von_szily(idx), super_catalan_factorial(idx)?))
            },
        },
        IdentitySpec {
            id: "ratio",
            description: "S(n,l) by the binomial ratio equals the factorial formula",
            params: &[N, L],
            domain: any,
            check: |a| {
                let idx = NLIndex::new(a.n, a.l);
                Ok(Evaluation::ints(super_catalan_ratio(idx)?, super_catalan_factorial(idx)?))
            },
        },
        IdentitySpec {
            id: "symmetry",
            description: "S(n,l) = S(l,n)",
            params: &[N, L],
            domain: any,
            check: |a| {
                Ok(Evaluation::ints(
                    super_catalan_ratio(NLIndex::new(a.n, a.l))?,
                    super_catalan_ratio(NLIndex::new(a.l, a.n))?,
                ))
            },
        },
        IdentitySpec {
            id: "parity",
            description: "S(n,l) mod 2 is 0 except S(0,0) = 1",
            params: &[N, L],
            domain: any,
            check: |a| {
                let expected = u64::from((a.n, a.l) == (0, 0));
                Ok(Evaluation::ints(s(a.n, a.l)? % 2u32, int(expected)))
            },
        },
        IdentitySpec {
            id: "anchor_l0",
            description: "S(n,0) = binom(2n,n)",
            params: &[N],
            domain: any,
            check: |a| Ok(Evaluation::ints(s(a.n, 0)?, central_binomial(a.n))),
        },
        IdentitySpec {
            id: "anchor_l1",
            description: "S(n,1) = 2 C_n",
            params: &[N],
            domain: any,
            check: |a| Ok(Evaluation::ints(s(a.n, 1)?, catalan(a.n)? * 2u32)),
        },
        IdentitySpec {
            id: "eq33",
            description: "l binom(2l,l) = 2(2l-1) binom(2l-2,l-1) for l >= 1",
            params: &[L],
            domain: l_ge1,
            check: |a| {
                Ok(Evaluation::ints(
                    central_binomial(a.l) * a.l,
                    central_binomial(a.l - 1) * (2 * (2 * a.l - 1)),
                ))
            },
        },
        // convolution identities
        IdentitySpec {
            id: "thm1",
            description: "Psi(2n,1,l) = S(n,l) S(n+l,n)",
            params: &[N, L],
            domain: any,
            check: |a| {
                Ok(Evaluation::ints(psi(2 * a.n, 1, a.l)?, s(a.n, a.l)? * s(a.n + a.l, a.n)?))
            },
        },
        IdentitySpec {
            id: "eq2",
            description: "sum_k (-1)^k binom(2n,k) binom(2k,k) binom(4n-2k,2n-k) = binom(2n,n)^2",
            params: &[N],
            domain: any,
            check: |a| {
                let n = a.n;
                let lhs = (0..=2 * n).fold(Integer::zero(), |acc, k| {
                    acc + sign(k) * choose(2 * n, k) * central_binomial(k) * central_binomial(2 * n - k)
                });
                let c = central_binomial(n);
                Ok(Evaluation::ints(lhs, &c * &c))
            },
        },
        IdentitySpec {
            id: "eq3",
            description: "sum_k (-1)^k binom(2n,k) C_k C_{2n-k} = C_n binom(2n,n)",
            params: &[N],
            domain: any,
            check: |a| {
                let n = a.n;
                let mut lhs = Integer::zero();
                for k in 0..=2 * n {
                    lhs += sign(k) * choose(2 * n, k) * catalan(k)? * catalan(2 * n - k)?;
                }
                Ok(Evaluation::ints(lhs, catalan(n)? * central_binomial(n)))
            },
        },
        IdentitySpec {
            id: "thm2",
            description: "Psi_t(2n,l) = phi(2n,l,t) for t <= n",
            params: &[N, L, T],
            domain: t_le_n,
            check: |a| {
                Ok(Evaluation::ints(
                    psi_t(2 * a.n, a.t, a.l)?,
                    phi(PhiParams::new(a.n, a.l, a.t)?)?,
                ))
            },
        },
        IdentitySpec {
            id: "eq8",
            description: "l = 0 case of thm2 in explicit binomials",
            params: &[N, T],
            domain: t_le_n,
            check: |a| {
                let (n, t) = (a.n, a.t);
                let lhs = (t..=2 * n - t).fold(Integer::zero(), |acc, k| {
                    acc + sign(k)
                        * choose(2 * n - 2 * t, k - t)
                        * central_binomial(k)
                        * central_binomial(2 * n - k)
                });
                Ok(Evaluation::ints(lhs, phi_order_zero(n, t)?))
            },
        },
        IdentitySpec {
            id: "eq9",
            description: "l = 1 case of thm2 with Catalan numbers",
            params: &[N, T],
            domain: t_le_n,
            check: |a| {
                let (n, t) = (a.n, a.t);
                let mut lhs = Integer::zero();
                for k in t..=2 * n - t {
                    lhs += sign(k) * choose(2 * n - 2 * t, k - t) * catalan(k)? * catalan(2 * n - k)?;
                }
                let num = sign(t) * catalan(n)? * central_binomial(t) * central_binomial(n - t);
                let rhs = exact_div(&num, &choose(2 * n + 1 - t, t), "eq9")?;
                Ok(Evaluation::ints(lhs, rhs))
            },
        },
        IdentitySpec {
            id: "eq18",
            description: "A_t(2n,l) for the Psi summand equals phi(2n,l,t)",
            params: &[N, L, T],
            domain: t_le_n,
            check: |a| {
                Ok(Evaluation::ints(
                    a_t(&PsiSummand, 2 * a.n, a.t, a.l)?,
                    phi(PhiParams::new(a.n, a.l, a.t)?)?,
                ))
            },
        },
        IdentitySpec {
            id: "eq20",
            description: "Psi_t(n,l) = 0 for odd n (n is the raw length)",
            params: &[N, L, T],
            domain: |a| {
                require(a.n % 2 == 1, "requires odd n")?;
                window_raw(a)
            },
            check: |a| Ok(Evaluation::ints(psi_t(a.n, a.t, a.l)?, Integer::zero())),
        },
        IdentitySpec {
            id: "psi_odd",
            description: "Psi(n,m,l) = 0 for odd n (n is the raw length)",
            params: &[N, L, M],
            domain: |a| require(a.n % 2 == 1, "requires odd n"),
            check: |a| Ok(Evaluation::ints(psi(a.n, m32(a), a.l)?, Integer::zero())),
        },
        IdentitySpec {
            id: "eq22",
            description: "Psi_n(2n,l) = (-1)^n S(n,l)^2",
            params: &[N, L],
            domain: any,
            check: |a| {
                let sv = s(a.n, a.l)?;
                Ok(Evaluation::ints(psi_t(2 * a.n, a.n, a.l)?, sign(a.n) * &sv * &sv))
            },
        },
        // auxiliary sums
        IdentitySpec {
            id: "eq28",
            description: "P_t(2n,l) = (n-t) Psi_t(2n,l)",
            params: &[N, L, T],
            domain: t_le_n,
            check: |a| {
                Ok(Evaluation::ints(
                    p_sum(2 * a.n, a.t, a.l)?,
                    psi_t(2 * a.n, a.t, a.l)? * (a.n - a.t),
                ))
            },
        },
        IdentitySpec {
            id: "eq29",
            description: "(n+l+1) R'_t(2n,l) = R_t(2n,l)",
            params: &[N, L, T],
            domain: t_le_n,
            check: |a| {
                Ok(Evaluation::rationals(
                    r_prime_sum(2 * a.n, a.t, a.l)? * rat(int(a.n + a.l + 1)),
                    r_sum(2 * a.n, a.t, a.l)?,
                ))
            },
        },
        IdentitySpec {
            id: "eq47",
            description: "P_t(n,l) = 4(n-2t) Psi_t(n-1,l) + (-1)^n 2(n-2t) R_t(n-1,l) for 2t < n (raw n)",
            params: &[N, L, T],
            domain: window_strict,
            check: |a| {
                let (n, t, l) = (a.n, a.t, a.l);
                let w = n - 2 * t;
                let rhs = rat(psi_t(n - 1, t, l)? * (4 * w))
                    + r_sum(n - 1, t, l)? * rat(sign(n) * (2 * w));
                Ok(Evaluation::rationals(rat(p_sum(n, t, l)?), rhs))
            },
        },
        IdentitySpec {
            id: "eq51",
            description: "T_t(n,l) = (n+l+1-t) R_t(n,l) - (2l+1) Psi_t(n,l) (raw n)",
            params: &[N, L, T],
            domain: window_raw,
            check: |a| {
                let (n, t, l) = (a.n, a.t, a.l);
                let rhs = r_sum(n, t, l)? * rat(int(n + l + 1 - t))
                    - rat(psi_t(n, t, l)? * (2 * l + 1));
                Ok(Evaluation::rationals(t_sum(n, t, l)?, rhs))
            },
        },
        IdentitySpec {
            id: "eq53",
            description: "T_t(n,l) by its shifted sum over n-1 (signed form) for 2t < n (raw n)",
            params: &[N, L, T],
            domain: window_strict,
            check: |a| {
                Ok(Evaluation::rationals(t_sum(a.n, a.t, a.l)?, t_sum_shifted(a.n, a.t, a.l)?))
            },
        },
        IdentitySpec {
            id: "eq56",
            description: "T_t(n,l) = 4(n-2t) R''_t(n-1,l) + 2(n-2t) R'_t(n-1,l) for 2t < n (raw n)",
            params: &[N, L, T],
            domain: window_strict,
            check: |a| {
                let (n, t, l) = (a.n, a.t, a.l);
                let w = n - 2 * t;
                let rhs = r_dprime_sum(n - 1, t, l)? * rat(int(4 * w))
                    + r_prime_sum(n - 1, t, l)? * rat(int(2 * w));
                Ok(Evaluation::rationals(t_sum(n, t, l)?, rhs))
            },
        },
        IdentitySpec {
            id: "eq58",
            description: "R''_t(2n,l) = n R'_t(2n,l)",
            params: &[N, L, T],
            domain: t_le_n,
            check: |a| {
                Ok(Evaluation::rationals(
                    r_dprime_sum(2 * a.n, a.t, a.l)?,
                    r_prime_sum(2 * a.n, a.t, a.l)? * rat(int(a.n)),
                ))
            },
        },
        IdentitySpec {
            id: "lemma1",
            description: "2(2n-1-2t)(2n-1) Psi_t(2n-2,l+1) = (2n+l-t)(2l+1) Psi_t(2n,l) for t < n",
            params: &[N, L, T],
            domain: t_lt_n,
            check: |a| {
                let (n, t, l) = (a.n, a.t, a.l);
                Ok(Evaluation::ints(
                    psi_t(2 * n - 2, t, l + 1)? * (2 * (2 * n - 1 - 2 * t) * (2 * n - 1)),
                    psi_t(2 * n, t, l)? * ((2 * n + l - t) * (2 * l + 1)),
                ))
            },
        },
        IdentitySpec {
            id: "lemma2",
            description: "4(2l+1) R_t(2n,l) = (n+l+1) Psi_t(2n,l+1) for t <= n",
            params: &[N, L, T],
            domain: t_le_n,
            check: |a| {
                let (n, t, l) = (a.n, a.t, a.l);
                Ok(Evaluation::rationals(
                    r_sum(2 * n, t, l)? * rat(int(4 * (2 * l + 1))),
                    rat(psi_t(2 * n, t, l + 1)? * (n + l + 1)),
                ))
            },
        },
        IdentitySpec {
            id: "lemma3",
            description: "Psi_t(2n,l) = 4 R_t(2n-1,l) for t < n",
            params: &[N, L, T],
            domain: t_lt_n,
            check: |a| {
                Ok(Evaluation::rationals(
                    rat(psi_t(2 * a.n, a.t, a.l)?),
                    r_sum(2 * a.n - 1, a.t, a.l)? * rat(int(4)),
                ))
            },
        },
        IdentitySpec {
            id: "lemma4",
            description: "(2n+l-t)(n+l) R_t(2n-1,l) = 2(2n-1-2t)(2n-1) R_t(2n-2,l) for t < n",
            params: &[N, L, T],
            domain: t_lt_n,
            check: |a| {
                let (n, t, l) = (a.n, a.t, a.l);
                Ok(Evaluation::rationals(
                    r_sum(2 * n - 1, t, l)? * rat(int((2 * n + l - t) * (n + l))),
                    r_sum(2 * n - 2, t, l)? * rat(int(2 * (2 * n - 1 - 2 * t) * (2 * n - 1))),
                ))
            },
        },
        IdentitySpec {
            id: "eq64",
            description: "2(2n+1-2t)(2n+1) Psi_t(2n,l+1) = (2n+2+l-t)(2l+1) Psi_t(2n+2,l) for t < n",
            params: &[N, L, T],
            domain: t_lt_n,
            check: |a| {
                let (n, t, l) = (a.n, a.t, a.l);
                Ok(Evaluation::ints(
                    psi_t(2 * n, t, l + 1)? * (2 * (2 * n + 1 - 2 * t) * (2 * n + 1)),
                    psi_t(2 * n + 2, t, l)? * ((2 * n + 2 + l - t) * (2 * l + 1)),
                ))
            },
        },
        IdentitySpec {
            id: "eq64phi",
            description: "phi satisfies the same recurrence: 2(2n+1-2t)(2n+1) phi(2n,l+1,t) = (2n+2+l-t)(2l+1) phi(2n+2,l,t)",
            params: &[N, L, T],
            domain: t_lt_n,
            check: |a| {
                let (n, t, l) = (a.n, a.t, a.l);
                Ok(Evaluation::ints(
                    phi(PhiParams::new(n, l + 1, t)?)? * (2 * (2 * n + 1 - 2 * t) * (2 * n + 1)),
                    phi(PhiParams::new(n + 1, l, t)?)? * ((2 * n + 2 + l - t) * (2 * l + 1)),
                ))
            },
        },
        IdentitySpec {
            id: "eq67",
            description: "phi(2n,0,t) reduces to (-1)^t binom(2t,t) binom(2n,n) binom(2n-2t,n-t) / binom(2n-t,t)",
            params: &[N, T],
            domain: t_le_n,
            check: |a| {
                Ok(Evaluation::ints(
                    phi(PhiParams::new(a.n, 0, a.t)?)?,
                    phi_order_zero(a.n, a.t)?,
                ))
            },
        },
        IdentitySpec {
            id: "eq68",
            description: "phi(2n,l,n) = (-1)^n S(n,l)^2",
            params: &[N, L],
            domain: any,
            check: |a| {
                let sv = s(a.n, a.l)?;
                Ok(Evaluation::ints(phi(PhiParams::new(a.n, a.l, a.n)?)?, sign(a.n) * &sv * &sv))
            },
        },
        IdentitySpec {
            id: "remark1",
            description: "Psi(2n,1,l) = binom(2l,l) binom(2(n+l),n+l) binom(2n,n) / binom(2n+l,l)",
            params: &[N, L],
            domain: any,
            check: |a| {
                let (n, l) = (a.n, a.l);
                let num = central_binomial(l) * central_binomial(n + l) * central_binomial(n);
                let rhs = exact_div(&num, &choose(2 * n + l, l), "remark1")?;
                Ok(Evaluation::ints(psi(2 * n, 1, l)?, rhs))
            },
        },
        IdentitySpec {
            id: "eq91",
            description: "binom(2n+l,n) binom(n+l,n) = binom(2n+l,l) binom(2n,n)",
            params: &[N, L],
            domain: any,
            check: |a| {
                let (n, l) = (a.n, a.l);
                Ok(Evaluation::ints(
                    choose(2 * n + l, n) * choose(n + l, n),
                    choose(2 * n + l, l) * central_binomial(n),
                ))
            },
        },
        // D sums; n is the D-sum length argument here
        IdentitySpec {
            id: "eq12",
            description: "Psi(n,m,l) = D_Psi(n,0,m-2;l) for m >= 2",
            params: &[N, L, M],
            domain: m_ge2,
            check: |a| eq12(&PsiSummand, a),
        },
        IdentitySpec {
            id: "eq12_unit",
            description: "sum_k binom(n,k)^m = D_1(n,0,m-2) for m >= 2",
            params: &[N, M],
            domain: m_ge2,
            check: |a| eq12(&UnitSummand, a),
        },
        IdentitySpec {
            id: "eq13",
            description: "D-sum step recurrence from level t-1 equals direct D_Psi(n,j,t;l), t >= 1",
            params: &[N, L, T, J],
            domain: |a| {
                d_window(a)?;
                require(a.t >= 1, "requires t >= 1")
            },
            check: |a| eq13(&PsiSummand, a),
        },
        IdentitySpec {
            id: "eq13_unit",
            description: "D-sum step recurrence for F = 1, t >= 1",
            params: &[N, T, J],
            domain: |a| {
                d_window(a)?;
                require(a.t >= 1, "requires t >= 1")
            },
            check: |a| eq13(&UnitSummand, a),
        },
        IdentitySpec {
            id: "eq14",
            description: "nested double-sum form of D_Psi(n,j,0;l) equals direct evaluation",
            params: &[N, L, J],
            domain: d_window,
            check: |a| eq14(&PsiSummand, a),
        },
        IdentitySpec {
            id: "eq14_unit",
            description: "nested double-sum form of D_1(n,j,0) equals direct evaluation",
            params: &[N, J],
            domain: d_window,
            check: |a| eq14(&UnitSummand, a),
        },
        IdentitySpec {
            id: "eq17",
            description: "A_t form of D_Psi(n,j,0;l) equals direct evaluation",
            params: &[N, L, J],
            domain: d_window,
            check: |a| eq17(&PsiSummand, a),
        },
        IdentitySpec {
            id: "eq17_unit",
            description: "A_t form of D_1(n,j,0) equals direct evaluation",
            params: &[N, J],
            domain: d_window,
            check: |a| eq17(&UnitSummand, a),
        },
        // divisibility pipeline; n is half the convolution length
        IdentitySpec {
            id: "eq93",
            description: "D_Psi(2n,j,0;l) = sum_u binom(2n-j,u) binom(2n-j-u,j+u) Psi_{j+u}(2n,l)",
            params: &[N, L, J],
            domain: j_le_n,
            check: |a| {
                let (n, j, l) = (a.n, a.j, a.l);
                let mut lhs = Integer::zero();
                for u in 0..=n - j {
                    lhs += choose(2 * n - j, u) * choose(2 * n - j - u, j + u) * psi_t(2 * n, j + u, l)?;
                }
                Ok(Evaluation::ints(lhs, d_sum_direct(&PsiSummand, dp(2 * n, j, 0, l)?)?))
            },
        },
        IdentitySpec {
            id: "eq94",
            description: "binom(2n-t,t) Psi_t(2n,l) equals its closed form",
            params: &[N, L, T],
            domain: t_le_n,
            check: |a| {
                let (n, t, l) = (a.n, a.t, a.l);
                Ok(Evaluation::ints(
                    choose(2 * n - t, t) * psi_t(2 * n, t, l)?,
                    psi_t_scaled_closed(n, t, l)?,
                ))
            },
        },
        IdentitySpec {
            id: "eq101",
            description: "S(n,l) times the closed cofactor equals direct D_Psi(2n,j,0;l)",
            params: &[N, L, J],
            domain: j_le_n,
            check: |a| {
                let w = d_psi_base_closed(a.n, a.j, a.l)?;
                let product = w.cofactor * rat(w.s_factor);
                Ok(Evaluation::rationals(
                    product,
                    rat(d_sum_direct(&PsiSummand, dp(2 * a.n, a.j, 0, a.l)?)?),
                ))
            },
        },
        IdentitySpec {
            id: "eq104",
            description: "Psi(2n,2,l) = S(n,l) sum_u (-1)^u binom(2u,u) S(n,n+l-u) binom(n,u)",
            params: &[N, L],
            domain: any,
            check: |a| {
                Ok(Evaluation::ints(
                    psi(2 * a.n, 2, a.l)?,
                    s(a.n, a.l)? * psi_square_cofactor(a.n, a.l)?,
                ))
            },
        },
        IdentitySpec {
            id: "eq112",
            description: "S(n,l) times the integer level-1 cofactor equals direct D_Psi(2n,j,1;l)",
            params: &[N, L, J],
            domain: j_le_n,
            check: |a| {
                Ok(Evaluation::ints(
                    s(a.n, a.l)? * level1_cofactor(a.n, a.j, a.l)?,
                    d_sum_direct(&PsiSummand, dp(2 * a.n, a.j, 1, a.l)?)?,
                ))
            },
        },
        IdentitySpec {
            id: "eq114",
            description: "binom(2n,n) Q(n,j,l) equals its super Catalan expansion (j plays s)",
            params: &[N, L, J],
            domain: j_le_n,
            check: |a| {
                Ok(Evaluation::ints(
                    q_scaled(a.n, a.j, a.l)?,
                    q_scaled_super_catalan(a.n, a.j, a.l)?,
                ))
            },
        },
        IdentitySpec {
            id: "dlevel1",
            description: "S(n,l) divides D_Psi(2n,j,1;l)",
            params: &[N, L, J],
            domain: j_le_n,
            check: |a| {
                Ok(Evaluation::Divides {
                    dividend: d_sum_direct(&PsiSummand, dp(2 * a.n, a.j, 1, a.l)?)?,
                    divisor: s(a.n, a.l)?,
                })
            },
        },
        IdentitySpec {
            id: "dlevelt",
            description: "propagated witness quotient times S(n,l) equals direct D_Psi(2n,j,t;l), t >= 1",
            params: &[N, L, T, J],
            domain: |a| {
                j_le_n(a)?;
                require(a.t >= 1, "requires t >= 1")
            },
            check: |a| {
                let table = WitnessTable::build(a.n, a.l, a.t)?;
                let q = table.quotient(a.j, a.t).expect("level and j in range").clone();
                Ok(Evaluation::ints(
                    s(a.n, a.l)? * q,
                    d_sum_direct(&PsiSummand, dp(2 * a.n, a.j, a.t, a.l)?)?,
                ))
            },
        },
        IdentitySpec {
            id: "thm3",
            description: "S(n,l) divides Psi(2n,m,l)",
            params: &[N, L, M],
            domain: any,
            check: |a| {
                Ok(Evaluation::Divides {
                    dividend: psi(2 * a.n, m32(a), a.l)?,
                    divisor: s(a.n, a.l)?,
                })
            },
        },
        IdentitySpec {
            id: "thm3witness",
            description: "constructive quotient Psi(2n,m,l)/S(n,l) matches direct division",
            params: &[N, L, M],
            domain: any,
            check: |a| {
                let direct = exact_div(&psi(2 * a.n, m32(a), a.l)?, &s(a.n, a.l)?, "thm3witness")?;
                Ok(Evaluation::ints(psi_quotient_witness(a.n, m32(a), a.l)?, direct))
            },
        },
        IdentitySpec {
            id: "remark2",
            description: "2 S(n,l) divides Psi(2n,2,l) for l >= 1",
            params: &[N, L],
            domain: l_ge1,
            check: |a| {
                Ok(Evaluation::Divides {
                    dividend: psi(2 * a.n, 2, a.l)?,
                    divisor: s(a.n, a.l)? * 2u32,
                })
            },
        },
        IdentitySpec {
            id: "remark3",
            description: "2 S(n,l) divides Psi(2n,m,l) for l >= 1",
            params: &[N, L, M],
            domain: l_ge1,
            check: |a| {
                Ok(Evaluation::Divides {
                    dividend: psi(2 * a.n, m32(a), a.l)?,
                    divisor: s(a.n, a.l)? * 2u32,
                })
            },
        },
        IdentitySpec {
            id: "remark3_level1",
            description: "2 S(n,l) divides D_Psi(2n,j,1;l) for l >= 1",
            params: &[N, L, J],
            domain: |a| {
                j_le_n(a)?;
                l_ge1(a)
            },
            check: |a| {
                Ok(Evaluation::Divides {
                    dividend: d_sum_direct(&PsiSummand, dp(2 * a.n, a.j, 1, a.l)?)?,
                    divisor: s(a.n, a.l)? * 2u32,
                })
            },
        },
        IdentitySpec {
            id: "remark4",
            description: "binom(8,4) does not divide Psi(8,1,2) (only n=4, m=1, l=2)",
            params: &[N, L, M],
            domain: |a| require((a.n, a.m, a.l) == (4, 1, 2), "defined only at n=4, m=1, l=2"),
            check: |a| {
                Ok(Evaluation::NotDivides {
                    dividend: psi(2 * a.n, m32(a), a.l)?,
                    divisor: central_binomial(a.n),
                })
            },
        },
        IdentitySpec {
            id: "remark4_l01",
            description: "binom(2n,n) divides Psi(2n,m,l) for l in {0,1}",
            params: &[N, L, M],
            domain: |a| require(a.l <= 1, "requires l <= 1"),
            check: |a| {
                Ok(Evaluation::Divides {
                    dividend: psi(2 * a.n, m32(a), a.l)?,
                    divisor: central_binomial(a.n),
                })
            },
        },
    ]
});

/// All registered identities, in registration order.
pub fn registry() -> &'static [IdentitySpec] {
    &REGISTRY
}

pub fn lookup(id: &str) -> Option<&'static IdentitySpec> {
    registry().iter().find(|s| s.id == id)
}
