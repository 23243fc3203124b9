use num_traits::{Signed, Zero};
use proptest::prelude::*;

use supercat::dsums::{
    a_t, d_sum_base, d_sum_base_nested, d_sum_direct, d_sum_step, psi_quotient_witness, DSumParams,
    SummandFunction, UnitSummand,
};
use supercat::sums::{psi, psi_t};
use supercat::supercat::{phi, super_catalan, PhiParams};
use supercat::{Integer, Result};

fn fact(n: u64) -> i128 {
    (1..=n as i128).product()
}

fn binom(n: u64, k: u64) -> i128 {
    if k > n {
        return 0;
    }
    fact(n) / (fact(k) * fact(n - k))
}

fn s_oracle(n: u64, l: u64) -> i128 {
    fact(2 * n) * fact(2 * l) / (fact(n) * fact(l) * fact(n + l))
}

/// An arbitrary signed polynomial summand, to exercise the D-sum
/// recurrences away from the two built-in summands.
struct Poly;

impl SummandFunction for Poly {
    fn name(&self) -> &'static str {
        "poly"
    }

    fn eval(&self, n: u64, k: u64, l: u64) -> Result<Integer> {
        let (n, k, l) = (n as i64, k as i64, l as i64);
        let v = k * k - 3 * k * l + 2 * n - 7 + l;
        Ok(Integer::from(if k % 2 == 0 { v } else { -v }))
    }
}

fn d_point() -> impl Strategy<Value = (u64, u64, u64)> {
    (0u64..=14, 0u64..=5).prop_flat_map(|(n, l)| (Just(n), 0..=n / 2, Just(l)))
}

proptest! {
    #[test]
    fn step_recurrence_for_any_summand((n, j, l) in d_point(), t in 1u64..=4) {
        let p = DSumParams::new(n, j, t, l).unwrap();
        prop_assert_eq!(d_sum_step(&Poly, p).unwrap(), d_sum_direct(&Poly, p).unwrap());
    }

    #[test]
    fn base_forms_agree_for_any_summand((n, j, l) in d_point()) {
        let direct = d_sum_direct(&Poly, DSumParams::new(n, j, 0, l).unwrap()).unwrap();
        prop_assert_eq!(d_sum_base(&Poly, n, j, l).unwrap(), direct.clone());
        prop_assert_eq!(d_sum_base_nested(&Poly, n, j, l).unwrap(), direct);
    }

    #[test]
    fn a_t_is_a_windowed_sum(n in 0u64..=14, l in 0u64..=4) {
        let t = n / 3;
        let want: i128 = (t..=n - t)
            .map(|k| binom(n - 2 * t, k - t) * i128::try_from(Poly.eval(n, k, l).unwrap()).unwrap())
            .sum();
        prop_assert_eq!(a_t(&Poly, n, t, l).unwrap(), Integer::from(want));
    }

    #[test]
    fn unit_d_sums_are_binomial_power_sums(n in 0u64..=12, t in 0u64..=3) {
        let want: i128 = (0..=n).map(|k| binom(n, k).pow(t as u32 + 2)).sum();
        let got = d_sum_direct(&UnitSummand, DSumParams::new(n, 0, t, 0).unwrap()).unwrap();
        prop_assert_eq!(got, Integer::from(want));
    }

    #[test]
    fn psi_matches_machine_oracle(n in 0u64..=14, m in 1u32..=3, l in 0u64..=4) {
        let want: i128 = (0..=n)
            .map(|k| {
                let sign = if k % 2 == 0 { 1 } else { -1 };
                sign * binom(n, k).pow(m) * s_oracle(k, l) * s_oracle(n - k, l)
            })
            .sum();
        prop_assert_eq!(psi(n, m, l).unwrap(), Integer::from(want));
    }

    #[test]
    fn odd_length_convolutions_vanish(h in 0u64..=12, m in 1u32..=4, l in 0u64..=6) {
        prop_assert!(psi(2 * h + 1, m, l).unwrap().is_zero());
    }

    #[test]
    fn truncated_sums_match_closed_form(n in 0u64..=12, l in 0u64..=6, frac in 0.0f64..=1.0) {
        let t = (frac * n as f64).floor() as u64;
        let closed = phi(PhiParams::new(n, l, t).unwrap()).unwrap();
        prop_assert_eq!(psi_t(2 * n, t, l).unwrap(), closed);
    }

    #[test]
    fn witness_quotients_reconstruct_psi(n in 0u64..=9, m in 1u32..=5, l in 0u64..=5) {
        let q = psi_quotient_witness(n, m, l).unwrap();
        let s = super_catalan(n, l).unwrap();
        prop_assert_eq!(q * s, psi(2 * n, m, l).unwrap());
    }

    #[test]
    fn super_catalan_positive_and_symmetric(n in 0u64..=40, l in 0u64..=40) {
        let s = super_catalan(n, l).unwrap();
        prop_assert!(s.is_positive());
        prop_assert_eq!(&s, &super_catalan(l, n).unwrap());
        if n <= 10 && l <= 10 {
            prop_assert_eq!(s, Integer::from(s_oracle(n, l)));
        }
    }
}

#[test]
fn product_formula_anchor() {
    assert_eq!(psi(8, 1, 2).unwrap(), Integer::from(8624));
    assert_eq!(super_catalan(4, 2).unwrap() * super_catalan(6, 4).unwrap(), Integer::from(8624));
}

#[test]
fn truncated_sum_rejects_wide_windows() {
    assert!(PhiParams::new(2, 0, 3).is_err());
    assert!(DSumParams::new(5, 3, 0, 0).is_err());
}
