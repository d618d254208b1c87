use std::f64::consts::PI;

use proptest::prelude::*;
use wallis_core::gamma::{gamma_ratio, kazarinoff_bounds, ln_gamma_ratio, log_gamma, quartic_root_bounds, GammaRatioQuery};
use wallis_core::integrals::{beta_trig_integral, rational_moment, RationalMomentQuery};
use wallis_core::series::{a_seq, scaled_a_deficit, sum_b_partial, GeneralizedParams};
use wallis_core::variational::{
    exact_energy, expectation_energy_closed, optimal_param_closed, Potential, TrialFamily, TrialSpec,
};

fn family() -> impl Strategy<Value = TrialFamily> {
    prop_oneof![Just(TrialFamily::Gaussian), Just(TrialFamily::Lorentz)]
}

fn potential() -> impl Strategy<Value = Potential> {
    prop_oneof![Just(Potential::Coulomb), Just(Potential::HarmonicOscillator)]
}

proptest! {
    #[test]
    fn log_gamma_recurrence(x in 1e-3f64..150.0) {
        let lhs = log_gamma(x + 1.0).unwrap();
        let rhs = log_gamma(x).unwrap() + x.ln();
        prop_assert!((lhs - rhs).abs() <= 1e-13 * lhs.abs().max(1.0));
    }

    #[test]
    fn gamma_ratio_is_antisymmetric(x in 0.1f64..1e6, a in 0.0f64..3.0, b in 0.0f64..3.0) {
        let ab = ln_gamma_ratio(x, a, b).unwrap();
        let ba = ln_gamma_ratio(x, b, a).unwrap();
        prop_assert!((ab + ba).abs() <= 4.0 * f64::EPSILON * (1.0 + ab.abs()));
    }

    #[test]
    fn gamma_ratio_chains(x in 0.1f64..1e4, a in 0.0f64..2.0, b in 0.0f64..2.0, c in 0.0f64..2.0) {
        let ab = ln_gamma_ratio(x, a, b).unwrap();
        let bc = ln_gamma_ratio(x, b, c).unwrap();
        let ac = ln_gamma_ratio(x, a, c).unwrap();
        prop_assert!((ab + bc - ac).abs() <= 1e-13 * (1.0 + ab.abs() + bc.abs()));
    }

    #[test]
    fn gamma_ratio_recurrence(x in 0.01f64..100.0) {
        let r = gamma_ratio(GammaRatioQuery::new(x, 1.0, 0.0).unwrap()).unwrap();
        prop_assert!((r / x - 1.0).abs() < 1e-13);
    }

    #[test]
    fn kazarinoff_holds(n in 1u64..10_000_000) {
        prop_assert!(kazarinoff_bounds(n).unwrap().satisfied());
    }

    #[test]
    fn quartic_sandwich_holds(x in 0.06f64..1e7) {
        prop_assert!(quartic_root_bounds(x).unwrap().satisfied());
    }

    #[test]
    fn scaled_a_sandwich(n in 1u64..100_000_000) {
        let d = scaled_a_deficit(n).unwrap();
        prop_assert!(d > 0.0 && d < 1.0 / (4.0 * n as f64 + 2.0));
    }

    #[test]
    fn a_seq_decreases(n in 1u64..1_000_000) {
        prop_assert!(a_seq(n + 1).unwrap() < a_seq(n).unwrap());
    }

    #[test]
    fn two_parameter_tail_is_bounded(m in -0.95f64..3.0, k in -0.95f64..3.0, n in 1u64..5000) {
        prop_assume!((2.0 * (k - m) + 1.0).abs() > 1e-3);
        let p = GeneralizedParams::new(m, k).unwrap();
        prop_assert!(sum_b_partial(p, n).unwrap().within_tail_bound());
    }

    #[test]
    fn rational_moment_is_a_beta(m in -0.9f64..10.0, extra in 0.01f64..10.0) {
        let n = (m + 1.0) / 2.0 + extra;
        let q = RationalMomentQuery::new(m, n).unwrap();
        let p = (m + 1.0) / 2.0;
        let lhs = rational_moment(q).unwrap();
        let rhs = beta_trig_integral(p, n - p).unwrap();
        prop_assert!((lhs / rhs - 1.0).abs() < 1e-13);
    }

    #[test]
    fn beta_trig_is_symmetric(p in 0.01f64..50.0, q in 0.01f64..50.0) {
        prop_assert_eq!(beta_trig_integral(p, q).unwrap(), beta_trig_integral(q, p).unwrap());
    }

    #[test]
    fn energy_is_an_upper_bound(fam in family(), pot in potential(), l in 1u64..200, log_scale in -3.0f64..3.0) {
        let p = optimal_param_closed(fam, pot, l).unwrap() * log_scale.exp();
        let e = expectation_energy_closed(TrialSpec::new(fam, l, p).unwrap(), pot).unwrap();
        prop_assert!(e >= exact_energy(pot, l));
    }

    #[test]
    fn optimum_is_a_minimum(fam in family(), pot in potential(), l in 1u64..200, log_scale in -3.0f64..3.0) {
        let p0 = optimal_param_closed(fam, pot, l).unwrap();
        let e = |p| expectation_energy_closed(TrialSpec::new(fam, l, p).unwrap(), pot).unwrap();
        let at_opt = e(p0);
        prop_assert!(e(p0 * log_scale.exp()) >= at_opt * (1.0 - 1e-15f64.copysign(at_opt)));
    }
}

#[test]
fn gaussian_coulomb_at_l0() {
    let e = expectation_energy_closed(TrialSpec::new(TrialFamily::Gaussian, 0, 8.0 / (9.0 * PI)).unwrap(), Potential::Coulomb)
        .unwrap();
    assert!((e / (-4.0 / (3.0 * PI)) - 1.0).abs() < 1e-14);
}
