//! The invariant suite behind `wallis verify`.
//!
//! Every check compares two independent routes to the same number (or tests
//! a strict inequality) and reports the worst case it saw.

use std::f64::consts::PI;

use crate::error::Result;
use crate::gamma::{
    gamma_ratio, kazarinoff_bounds, quartic_root_bounds, wallis_ratio, wendel_deviation, GammaRatioQuery,
};
use crate::integrals::{
    beta_trig_integral, check_integral, coulomb_to_norm_ratio, gaussian_moment, lorentz_coulomb_integral,
    lorentz_coulomb_integral_gamma_form, lorentz_norm_integral, rational_moment, G_rational, IntegralFamily,
    RationalMomentQuery,
};
use crate::series::{
    a_seq, b_seq, scaled_a, scaled_a_deficit, sum_a_recurrence_with, sum_b_direct, sum_b_partial,
    wallis_partial_product, GeneralizedParams,
};
use crate::variational::{
    exact_energy, expectation_energy_closed, lorentz_coulomb_ratio_via_scaled_a, lorentz_oscillator_ratio_squared,
    min_l, optimal_param_closed, variational_energy, Method, Potential, TrialFamily, TrialSpec,
};

/// Name of the cross-check between the telescoped partial sum of `a_n` and
/// its term-by-term sum.
pub const SUM_A_CROSS_CHECK: &str = "partial sum s_n = 4n^2 a_n - 3 a_1 matches direct sum";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Profile {
    #[default]
    Strict,
    /// Every tolerance multiplied by 100.
    Relaxed,
}

impl Profile {
    pub fn factor(self) -> f64 {
        match self {
            Self::Strict => 1.0,
            Self::Relaxed => 100.0,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VerifyConfig {
    pub profile: Profile,
    /// Coefficient of `a_1` in the telescoped partial sum; 3 is correct.
    /// Other values exist to show the suite can fail.
    pub a1_coefficient: f64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            profile: Profile::Strict,
            a1_coefficient: 3.0,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

/// The (m, k) grid used for the two-parameter family.
pub fn generalized_grid() -> Vec<GeneralizedParams> {
    const AXIS: [f64; 5] = [-0.4, 0.0, 0.5, 1.0, 2.3];
    AXIS.iter()
        .flat_map(|&m| AXIS.iter().map(move |&k| (m, k)))
        .filter(|&(m, k)| k - m != -0.5)
        .map(|(m, k)| GeneralizedParams::new(m, k).expect("grid avoids k - m = -1/2"))
        .collect()
}

/// `per_decade` log-spaced points in `[lo, hi]`, both ends included.
pub fn log_grid(lo: f64, hi: f64, per_decade: usize) -> Vec<f64> {
    let decades = (hi / lo).log10();
    let steps = (decades * per_decade as f64).round().max(1.0) as usize;
    (0..=steps)
        .map(|i| match i {
            0 => lo,
            i if i == steps => hi,
            i => lo * 10f64.powf(decades * i as f64 / steps as f64),
        })
        .collect()
}

/// Integer version of [`log_grid`], deduplicated.
pub fn log_grid_u64(lo: u64, hi: u64, per_decade: usize) -> Vec<u64> {
    let mut v: Vec<u64> = log_grid(lo as f64, hi as f64, per_decade)
        .into_iter()
        .map(|x| x.round() as u64)
        .collect();
    v.dedup();
    v
}

fn rel(a: f64, b: f64) -> f64 {
    if a == b {
        0.0
    } else {
        ((a - b) / b).abs()
    }
}

/// Tracks the worst relative error over a check.
struct Worst {
    err: f64,
    at: String,
}

impl Worst {
    fn new() -> Self {
        Self {
            err: f64::NEG_INFINITY,
            at: String::new(),
        }
    }

    fn see(&mut self, err: f64, at: impl FnOnce() -> String) {
        if self.err.is_nan() {
            return;
        }
        if !(err <= self.err) {
            self.err = err;
            self.at = at();
        }
    }

    fn outcome(self, name: &'static str, tol: f64) -> CheckOutcome {
        CheckOutcome {
            name,
            passed: self.err <= tol,
            detail: format!("worst relative error {:.3e} at {} (tol {tol:.1e})", self.err, self.at),
        }
    }
}

/// Counts violations of a strict inequality.
struct Violations {
    checked: usize,
    first: Option<String>,
    count: usize,
}

impl Violations {
    fn new() -> Self {
        Self {
            checked: 0,
            first: None,
            count: 0,
        }
    }

    fn see(&mut self, ok: bool, at: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.count += 1;
            self.first.get_or_insert_with(at);
        }
    }

    fn outcome(self, name: &'static str) -> CheckOutcome {
        CheckOutcome {
            name,
            passed: self.count == 0,
            detail: match self.first {
                None => format!("{} cases hold", self.checked),
                Some(at) => format!("{} of {} cases violated, first at {at}", self.count, self.checked),
            },
        }
    }
}

fn run(name: &'static str, body: impl FnOnce() -> Result<CheckOutcome>) -> CheckOutcome {
    body().unwrap_or_else(|e| CheckOutcome {
        name,
        passed: false,
        detail: format!("error: {e}"),
    })
}

fn gamma_checks(f: f64) -> Vec<CheckOutcome> {
    vec![
        run("gamma recurrence G(x+1)/G(x) = x", || {
            let mut w = Worst::new();
            for x in log_grid(1e-3, 100.0, 20) {
                let r = gamma_ratio(GammaRatioQuery::new(x, 1.0, 0.0)?)?;
                w.see(rel(r, x), || format!("x={x}"));
            }
            Ok(w.outcome("gamma recurrence G(x+1)/G(x) = x", 1e-13 * f))
        }),
        run("wallis ratio W_n sqrt(pi) G(n+1)/G(n+1/2) = 1", || {
            let mut w = Worst::new();
            for n in 1..=10_000u64 {
                let r = gamma_ratio(GammaRatioQuery::new(n as f64, 1.0, 0.5)?)?;
                w.see(rel(wallis_ratio(n) * PI.sqrt() * r, 1.0), || format!("n={n}"));
            }
            Ok(w.outcome("wallis ratio W_n sqrt(pi) G(n+1)/G(n+1/2) = 1", 1e-12 * f))
        }),
        run("kazarinoff sandwich", || {
            let mut v = Violations::new();
            let grid = (1..=1000u64).chain(log_grid_u64(1000, 1_000_000, 20));
            for n in grid {
                let b = kazarinoff_bounds(n)?;
                v.see(b.satisfied(), || format!("n={n}"));
            }
            Ok(v.outcome("kazarinoff sandwich"))
        }),
        run("quartic-root sandwich", || {
            let mut v = Violations::new();
            for x in log_grid(0.2, 1e5, 20) {
                let b = quartic_root_bounds(x)?;
                v.see(b.satisfied(), || format!("x={x}"));
            }
            Ok(v.outcome("quartic-root sandwich"))
        }),
        run("wendel deviation vanishes at s = 0 and s = 1 and shrinks with x", || {
            let mut v = Violations::new();
            for x in [0.5, 1.0, 10.0, 1e3, 1e6] {
                v.see(wendel_deviation(x, 0.0)? == 0.0, || format!("s=0 x={x}"));
                v.see(wendel_deviation(x, 1.0)?.abs() <= 4.0 * f64::EPSILON * f, || format!("s=1 x={x}"));
            }
            for s in [0.25, 0.5, 0.75] {
                let mut prev = f64::INFINITY;
                for k in 1..=6 {
                    let d = wendel_deviation(10f64.powi(k), s)?.abs();
                    v.see(d <= prev, || format!("s={s} x=1e{k}"));
                    prev = d;
                }
            }
            v.see(wendel_deviation(1e6, 0.5)?.abs() < 1e-6, || "x=1e6 s=0.5".into());
            Ok(v.outcome("wendel deviation vanishes at s = 0 and s = 1 and shrinks with x"))
        }),
        run("stirling ratio G(x+a)/G(x+b) x^(b-a) -> 1", || {
            let mut v = Violations::new();
            let axis = [0.0, 0.5, 1.0, 1.5, 2.0];
            for x in log_grid(100.0, 1e8, 5) {
                for a in axis {
                    for b in axis {
                        let r = gamma_ratio(GammaRatioQuery::new(x, a, b)?)? * x.powf(b - a);
                        v.see((r - 1.0).abs() < 10.0 / x, || format!("x={x} a={a} b={b}"));
                    }
                }
            }
            Ok(v.outcome("stirling ratio G(x+a)/G(x+b) x^(b-a) -> 1"))
        }),
    ]
}

fn series_checks(f: f64, a1_coefficient: f64) -> Vec<CheckOutcome> {
    vec![
        run("a_n recurrence 4n^2 a_n = 4(n-1)^2 a_(n-1) + a_n", || {
            let mut w = Worst::new();
            let mut prev = a_seq(1)?;
            for n in 2..=10_000u64 {
                let a = a_seq(n)?;
                let nf = n as f64;
                let lhs = 4.0 * nf * nf * a;
                let rhs = 4.0 * (nf - 1.0) * (nf - 1.0) * prev + a;
                w.see(rel(lhs, rhs), || format!("n={n}"));
                prev = a;
            }
            Ok(w.outcome("a_n recurrence 4n^2 a_n = 4(n-1)^2 a_(n-1) + a_n", 1e-12 * f))
        }),
        run("b_n recurrence over the m-k grid", || {
            let mut w = Worst::new();
            for p in generalized_grid() {
                let c = p.prefactor_denominator();
                let mut prev = b_seq(p, 1)?;
                for n in 2..=2000u64 {
                    let b = b_seq(p, n)?;
                    let nf = n as f64;
                    let lhs = 4.0 * (nf + p.m()) * (nf + p.k()) * b;
                    let rhs = 4.0 * (nf - 1.0 + p.m()) * (nf - 1.0 + p.k()) * prev + c * b;
                    w.see(rel(lhs, rhs), || format!("m={} k={} n={n}", p.m(), p.k()));
                    prev = b;
                }
            }
            Ok(w.outcome("b_n recurrence over the m-k grid", 1e-12 * f))
        }),
        run("scaled a_n sandwich 0 < 1 - n^2 a_n < 1/(4n+2)", || {
            let mut v = Violations::new();
            for n in log_grid_u64(1, 1_000_000, 20) {
                let d = scaled_a_deficit(n)?;
                v.see(d > 0.0 && d < 1.0 / (4.0 * n as f64 + 2.0), || format!("n={n}"));
            }
            Ok(v.outcome("scaled a_n sandwich 0 < 1 - n^2 a_n < 1/(4n+2)"))
        }),
        run("wallis product sandwich 0 < pi/2 - P_n < (pi/2)/(4n+2)", || {
            let mut v = Violations::new();
            for n in [1u64, 10, 100, 1000, 10_000, 100_000, 1_000_000] {
                let gap = PI / 2.0 - wallis_partial_product(n);
                v.see(gap > 0.0 && gap < PI / 2.0 / (4.0 * n as f64 + 2.0), || format!("n={n}"));
            }
            Ok(v.outcome("wallis product sandwich 0 < pi/2 - P_n < (pi/2)/(4n+2)"))
        }),
        run("P_n and n^2 a_n increase while a_n decreases", || {
            let mut v = Violations::new();
            let (mut p0, mut a0, mut s0) = (wallis_partial_product(1), a_seq(1)?, scaled_a(1)?);
            for n in 2..=2000u64 {
                let (p, a, s) = (wallis_partial_product(n), a_seq(n)?, scaled_a(n)?);
                v.see(p > p0 && a < a0 && s > s0, || format!("n={n}"));
                (p0, a0, s0) = (p, a, s);
            }
            Ok(v.outcome("P_n and n^2 a_n increase while a_n decreases"))
        }),
        run(SUM_A_CROSS_CHECK, || {
            let mut w = Worst::new();
            let mut direct = crate::sum::NeumaierSum::new();
            for n in 1..=10_000u64 {
                direct += a_seq(n)?;
                let s = sum_a_recurrence_with(n, a1_coefficient)?;
                w.see(rel(s.value, direct.value()), || format!("n={n}"));
            }
            Ok(w.outcome(SUM_A_CROSS_CHECK, 1e-12 * f))
        }),
        run("partial sum of a_n within tail bound of 4 - 8/pi", || {
            let mut v = Violations::new();
            for n in log_grid_u64(1, 1_000_000, 5) {
                let s = sum_a_recurrence_with(n, a1_coefficient)?;
                let r = s.remainder().unwrap_or(f64::NAN).abs();
                v.see(r <= s.tail_bound && r < 4.0 / (4.0 * n as f64 + 2.0), || format!("n={n}"));
            }
            Ok(v.outcome("partial sum of a_n within tail bound of 4 - 8/pi"))
        }),
        run("generalized partial sum matches direct sum", || {
            let mut w = Worst::new();
            for p in generalized_grid() {
                let s = sum_b_partial(p, 2000)?;
                w.see(rel(s.value, sum_b_direct(p, 2000)?), || format!("m={} k={}", p.m(), p.k()));
            }
            Ok(w.outcome("generalized partial sum matches direct sum", 1e-10 * f))
        }),
        run("generalized closed form within tail bound", || {
            let mut v = Violations::new();
            for p in generalized_grid() {
                let s = sum_b_partial(p, 2000)?;
                v.see(s.within_tail_bound(), || format!("m={} k={}", p.m(), p.k()));
            }
            Ok(v.outcome("generalized closed form within tail bound"))
        }),
    ]
}

fn integral_checks(f: f64) -> Vec<CheckOutcome> {
    vec![
        run("gaussian moment recurrence I_m = (m-1)/2 I_(m-2)", || {
            let mut w = Worst::new();
            for m in 2..=60u64 {
                let rhs = (m as f64 - 1.0) / 2.0 * gaussian_moment(m - 2);
                w.see(rel(gaussian_moment(m), rhs), || format!("m={m}"));
            }
            Ok(w.outcome("gaussian moment recurrence I_m = (m-1)/2 I_(m-2)", 1e-14 * f))
        }),
        run("G_(l+1) = (pi/2) W_l", || {
            let mut w = Worst::new();
            for l in 0..=300u64 {
                w.see(rel(G_rational(l), PI / 2.0 * wallis_ratio(l)), || format!("l={l}"));
            }
            Ok(w.outcome("G_(l+1) = (pi/2) W_l", 1e-12 * f))
        }),
        run("rational moment equals trigonometric beta integral", || {
            let mut w = Worst::new();
            for m in [-0.5, 0.0, 0.5, 1.0, 2.0, 3.5, 7.0, 12.0] {
                for n in [0.5, 1.0, 1.5, 2.0, 3.0, 5.0, 8.5, 20.0] {
                    let Ok(q) = RationalMomentQuery::new(m, n) else {
                        continue;
                    };
                    let p = (m + 1.0) / 2.0;
                    w.see(rel(rational_moment(q)?, beta_trig_integral(p, n - p)?), || format!("m={m} n={n}"));
                }
            }
            Ok(w.outcome("rational moment equals trigonometric beta integral", 1e-13 * f))
        }),
        run("lorentz norm integral reduces to G_(l+1)/2^(2l+1)", || {
            let mut w = Worst::new();
            for l in 0..=300u64 {
                let want = G_rational(l) * 0.5f64.powi(2 * l as i32 + 1);
                w.see(rel(lorentz_norm_integral(l), want), || format!("l={l}"));
            }
            Ok(w.outcome("lorentz norm integral reduces to G_(l+1)/2^(2l+1)", 1e-13 * f))
        }),
        run("lorentz coulomb integral matches its duplication form", || {
            let mut w = Worst::new();
            for l in 0..=84u64 {
                w.see(rel(lorentz_coulomb_integral(l), lorentz_coulomb_integral_gamma_form(l)), || {
                    format!("l={l}")
                });
            }
            Ok(w.outcome("lorentz coulomb integral matches its duplication form", 1e-13 * f))
        }),
        run("coulomb-to-norm quotient 1/((l+1/2) pi W_l^2)", || {
            let mut w = Worst::new();
            for l in 0..=100u64 {
                let q = lorentz_coulomb_integral(l) / lorentz_norm_integral(l);
                w.see(rel(coulomb_to_norm_ratio(l), q), || format!("l={l}"));
            }
            Ok(w.outcome("coulomb-to-norm quotient 1/((l+1/2) pi W_l^2)", 1e-13 * f))
        }),
        run("closed-form integrals match quadrature", || {
            let mut w = Worst::new();
            let cases = (0..=12u64)
                .map(|m| (IntegralFamily::GaussianMoment, m))
                .chain((0..=15).map(|l| (IntegralFamily::RationalG, l)))
                .chain((0..=15).map(|l| (IntegralFamily::LorentzNorm, l)))
                .chain((0..=15).map(|l| (IntegralFamily::LorentzCoulomb, l)));
            for (family, index) in cases {
                let c = check_integral(family, index, 1e-12)?;
                w.see(c.rel_error(), || format!("{} index {index}", family.label()));
            }
            Ok(w.outcome("closed-form integrals match quadrature", 1e-9 * f))
        }),
    ]
}

const FAMILIES: [TrialFamily; 2] = [TrialFamily::Gaussian, TrialFamily::Lorentz];
const POTENTIALS: [Potential; 2] = [Potential::Coulomb, Potential::HarmonicOscillator];

fn combinations() -> impl Iterator<Item = (TrialFamily, Potential)> {
    FAMILIES.into_iter().flat_map(|fam| POTENTIALS.into_iter().map(move |pot| (fam, pot)))
}

fn variational_checks(f: f64) -> Vec<CheckOutcome> {
    vec![
        run("variational upper bound on the parameter grid", || {
            let mut v = Violations::new();
            for (family, pot) in combinations() {
                for l in min_l(family, pot)..=50 {
                    let p0 = optimal_param_closed(family, pot, l)?;
                    let exact = exact_energy(pot, l);
                    for i in -20..=20 {
                        let e = expectation_energy_closed(TrialSpec::new(family, l, p0 * 10f64.powf(i as f64 / 10.0))?, pot)?;
                        let exact_trial = family == TrialFamily::Gaussian && pot == Potential::HarmonicOscillator && i == 0;
                        let ok = if exact_trial { e == exact } else { e > exact };
                        v.see(ok, || format!("{} {} l={l} step={i}", family.label(), pot.label()));
                    }
                }
            }
            Ok(v.outcome("variational upper bound on the parameter grid"))
        }),
        run("closed-form optimum is stationary", || {
            let mut w = Worst::new();
            for (family, pot) in combinations() {
                for l in min_l(family, pot)..=50 {
                    let p = optimal_param_closed(family, pot, l)?;
                    let h = 1e-6 * p;
                    let e = |q| expectation_energy_closed(TrialSpec { family, l, param: q }, pot);
                    let deriv = (e(p + h)? - e(p - h)?) / (2.0 * h);
                    let scale = e(p)?.abs() / p;
                    w.see((deriv / scale).abs(), || format!("{} {} l={l}", family.label(), pot.label()));
                }
            }
            Ok(w.outcome("closed-form optimum is stationary", 1e-6 * f))
        }),
        run("numeric minimisation agrees with closed form", || {
            let mut w = Worst::new();
            for (family, pot) in combinations() {
                for l in min_l(family, pot)..=20 {
                    let c = variational_energy(family, pot, l, Method::ClosedForm)?;
                    let n = variational_energy(family, pot, l, Method::Numeric)?;
                    w.see(rel(n.value, c.value), || format!("{} {} l={l}", family.label(), pot.label()));
                }
            }
            Ok(w.outcome("numeric minimisation agrees with closed form", 1e-6 * f))
        }),
        run("gaussian coulomb ratio equals (2/pi) P_(l+1)", || {
            let mut w = Worst::new();
            for l in 0..=2000u64 {
                let r = variational_energy(TrialFamily::Gaussian, Potential::Coulomb, l, Method::ClosedForm)?;
                w.see(rel(r.ratio_to_exact, 2.0 / PI * wallis_partial_product(l + 1)), || format!("l={l}"));
            }
            Ok(w.outcome("gaussian coulomb ratio equals (2/pi) P_(l+1)", 1e-12 * f))
        }),
        run("lorentz coulomb ratio identity through n^2 a_n", || {
            let mut w = Worst::new();
            for l in 0..=2000u64 {
                let r = variational_energy(TrialFamily::Lorentz, Potential::Coulomb, l, Method::ClosedForm)?;
                w.see(rel(r.ratio_to_exact, lorentz_coulomb_ratio_via_scaled_a(l)?), || format!("l={l}"));
            }
            Ok(w.outcome("lorentz coulomb ratio identity through n^2 a_n", 1e-12 * f))
        }),
        run("lorentz oscillator ratio squared in (1, 1 + 3/l) and decreasing", || {
            let mut v = Violations::new();
            let mut prev = f64::INFINITY;
            for l in 2..=10_000u64 {
                let q = lorentz_oscillator_ratio_squared(l)?;
                v.see(q > 1.0 && q < 1.0 + 3.0 / l as f64 && q < prev, || format!("l={l}"));
                prev = q;
            }
            Ok(v.outcome("lorentz oscillator ratio squared in (1, 1 + 3/l) and decreasing"))
        }),
        run("gaussian oscillator reproduces l + 3/2", || {
            let mut w = Worst::new();
            for l in 0..=20u64 {
                let e = variational_energy(TrialFamily::Gaussian, Potential::HarmonicOscillator, l, Method::ClosedForm)?;
                w.see(rel(e.value, l as f64 + 1.5), || format!("l={l}"));
            }
            Ok(w.outcome("gaussian oscillator reproduces l + 3/2", 1e-12 * f))
        }),
    ]
}

/// Runs every check and returns one outcome per invariant, in a fixed order.
pub fn run_all(config: &VerifyConfig) -> Vec<CheckOutcome> {
    let f = config.profile.factor();
    let mut out = gamma_checks(f);
    out.extend(series_checks(f, config.a1_coefficient));
    out.extend(integral_checks(f));
    out.extend(variational_checks(f));
    out
}
