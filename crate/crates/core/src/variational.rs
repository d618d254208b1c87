//! Variational ground levels at fixed orbital number `l` for the Coulomb
//! and oscillator potentials.
//!
//! Two trial families are supported, with radial factors
//!
//! * Gaussian: `R(r) = r^l e^{−αr²}`
//! * Lorentz:  `R(r) = r^l / (a² + r²)^{l+1}`
//!
//! Every energy is available on two independent paths. [`Method::ClosedForm`]
//! evaluates the gamma-function expressions for `⟨H⟩` and its minimiser.
//! [`Method::Numeric`] integrates the radial expectation value by quadrature
//! and minimises it by golden-section search.

use crate::error::{domain, Error, Result};
use crate::gamma::{
    half_step_ratio, ln_gamma_ratio_unchecked, quartic_lower_radicand, quartic_ratio_residual, BoundsTriple,
};
use crate::minimize::golden_section_log;
use crate::quadrature::SemiInfinite;
use crate::sum::NeumaierSum;

/// Physical constants, all fixed to one (atomic units for hydrogen,
/// oscillator units for the harmonic well).
#[derive(Debug, Clone, Copy)]
pub struct UnitsConvention;

impl UnitsConvention {
    pub const HBAR: f64 = 1.0;
    pub const MASS: f64 = 1.0;
    pub const CHARGE_SQ: f64 = 1.0;
    pub const OMEGA: f64 = 1.0;
}

type U = UnitsConvention;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TrialFamily {
    Gaussian,
    Lorentz,
}

impl TrialFamily {
    pub fn label(self) -> &'static str {
        match self {
            Self::Gaussian => "gaussian",
            Self::Lorentz => "lorentz",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Potential {
    /// `V(r) = −e²/r`
    Coulomb,
    /// `V(r) = ½ m ω² r²`
    HarmonicOscillator,
}

impl Potential {
    pub fn label(self) -> &'static str {
        match self {
            Self::Coulomb => "coulomb",
            Self::HarmonicOscillator => "oscillator",
        }
    }

    /// `V(r)`.
    pub fn value(self, r: f64) -> f64 {
        match self {
            Self::Coulomb => -U::CHARGE_SQ / r,
            Self::HarmonicOscillator => 0.5 * U::MASS * U::OMEGA * U::OMEGA * r * r,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    ClosedForm,
    Numeric,
}

impl Method {
    pub fn label(self) -> &'static str {
        match self {
            Self::ClosedForm => "closed",
            Self::Numeric => "numeric",
        }
    }
}

/// A trial function: family, orbital number and scale (`α` or `a`).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrialSpec {
    pub family: TrialFamily,
    pub l: u64,
    pub param: f64,
}

impl TrialSpec {
    pub fn new(family: TrialFamily, l: u64, param: f64) -> Result<Self> {
        let spec = Self { family, l, param };
        spec.check_param()?;
        Ok(spec)
    }

    fn check_param(&self) -> Result<()> {
        if self.param > 0.0 && self.param.is_finite() {
            Ok(())
        } else {
            Err(domain(
                "TrialSpec",
                format!("scale parameter must be positive and finite, got {}", self.param),
            ))
        }
    }

    /// Checks the trial function against `pot`: the parameter must be positive and
    /// `⟨r²⟩` must exist for a Lorentz trial in the oscillator.
    pub fn validate(&self, pot: Potential) -> Result<()> {
        self.check_param()?;
        check_combination(self.family, pot, self.l)
    }

    /// `ln R(r)`.
    fn log_radial(&self, r: f64) -> f64 {
        let l = self.l as f64;
        match self.family {
            TrialFamily::Gaussian => l * r.ln() - self.param * r * r,
            TrialFamily::Lorentz => {
                let a = self.param;
                let t = r / a;
                l * r.ln() - (l + 1.0) * (2.0 * a.ln() + (t * t).ln_1p())
            }
        }
    }

    /// `r R′(r) / R(r)`.
    fn log_derivative(&self, r: f64) -> f64 {
        let l = self.l as f64;
        match self.family {
            TrialFamily::Gaussian => l - 2.0 * self.param * r * r,
            TrialFamily::Lorentz => {
                let t = r / self.param;
                let t2 = t * t;
                l - 2.0 * (l + 1.0) * t2 / (1.0 + t2)
            }
        }
    }

    /// Radius near the peak of `R² r²`.
    fn bulk_scale(&self) -> f64 {
        match self.family {
            TrialFamily::Gaussian => ((self.l as f64 + 1.0) / (2.0 * self.param)).sqrt(),
            TrialFamily::Lorentz => self.param,
        }
    }
}

fn check_combination(family: TrialFamily, pot: Potential, l: u64) -> Result<()> {
    if family == TrialFamily::Lorentz && pot == Potential::HarmonicOscillator && l == 0 {
        return Err(Error::Divergence {
            what: "lorentz trial in the oscillator",
            reason: "<r^2> diverges for l = 0 (needs l >= 1)".into(),
        });
    }
    Ok(())
}

/// An optimised variational energy with its exact counterpart.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnergyEstimate {
    pub value: f64,
    pub optimal_param: f64,
    pub method: Method,
    pub exact_reference: f64,
    pub ratio_to_exact: f64,
}

/// `Γ(l+1)/Γ(l+3/2)`.
fn gaussian_coulomb_gamma(l: f64) -> f64 {
    ln_gamma_ratio_unchecked(l, 1.0, 1.5).exp()
}

/// Coefficients `(K, C)` of `⟨H⟩ = K/a² − C/a` for the Lorentz trial in the
/// Coulomb potential.
fn lorentz_coulomb_coefficients(l: f64) -> (f64, f64) {
    let g = lorentz_g(l);
    let k = U::HBAR * U::HBAR / U::MASS * (l + 1.0) * (l + 0.5) / 2.0;
    (k, U::CHARGE_SQ * g * g / (l + 0.5))
}

/// `Γ(l+1)/Γ(l+1/2)`.
fn lorentz_g(l: f64) -> f64 {
    half_step_ratio(l)
}

/// Coefficients `(K, P)` of `⟨H⟩ = K/a² + P a²` for the Lorentz trial in
/// the oscillator; `⟨r²⟩ = a²(l+3/2)/(l−1/2)`.
fn lorentz_oscillator_coefficients(l: f64) -> (f64, f64) {
    let k = U::HBAR * U::HBAR / U::MASS * (l + 1.0) * (l + 0.5) / 2.0;
    let p = 0.5 * U::MASS * U::OMEGA * U::OMEGA * (l + 1.5) / (l - 0.5);
    (k, p)
}

/// `⟨H⟩` from the closed forms.
///
/// * Gaussian, Coulomb: `α(l+3/2) − √(2α) Γ(l+1)/Γ(l+3/2)`
/// * Lorentz, Coulomb: `(l+1)(l+1/2)/(2a²) − [Γ(l+1)/Γ(l+1/2)]² / ((l+1/2) a)`
/// * Gaussian, oscillator: `(l+3/2)(α + 1/(4α))`
/// * Lorentz, oscillator: `(l+1)(l+1/2)/(2a²) + a²(l+3/2)/(2(l−1/2))`
pub fn expectation_energy_closed(spec: TrialSpec, pot: Potential) -> Result<f64> {
    spec.validate(pot)?;
    let l = spec.l as f64;
    let p = spec.param;
    let kinetic_gauss = U::HBAR * U::HBAR / U::MASS * p * (l + 1.5);
    Ok(match (spec.family, pot) {
        (TrialFamily::Gaussian, Potential::Coulomb) => {
            kinetic_gauss - U::CHARGE_SQ * (2.0 * p).sqrt() * gaussian_coulomb_gamma(l)
        }
        (TrialFamily::Gaussian, Potential::HarmonicOscillator) => {
            // ⟨r²⟩ = (l+3/2)/(2α)
            kinetic_gauss + 0.5 * U::MASS * U::OMEGA * U::OMEGA * (l + 1.5) / (2.0 * p)
        }
        (TrialFamily::Lorentz, Potential::Coulomb) => {
            let (k, c) = lorentz_coulomb_coefficients(l);
            k / (p * p) - c / p
        }
        (TrialFamily::Lorentz, Potential::HarmonicOscillator) => {
            let (k, q) = lorentz_oscillator_coefficients(l);
            k / (p * p) + q * p * p
        }
    })
}

/// Stationary point of [`expectation_energy_closed`] in the scale parameter.
pub fn optimal_param_closed(family: TrialFamily, pot: Potential, l: u64) -> Result<f64> {
    check_combination(family, pot, l)?;
    let lf = l as f64;
    Ok(match (family, pot) {
        (TrialFamily::Gaussian, Potential::Coulomb) => {
            let g = gaussian_coulomb_gamma(lf);
            U::MASS * U::CHARGE_SQ * U::MASS * U::CHARGE_SQ / (U::HBAR.powi(4)) * g * g
                / (2.0 * (lf + 1.5) * (lf + 1.5))
        }
        (TrialFamily::Gaussian, Potential::HarmonicOscillator) => 0.5 * U::MASS * U::OMEGA / U::HBAR,
        (TrialFamily::Lorentz, Potential::Coulomb) => {
            let (k, c) = lorentz_coulomb_coefficients(lf);
            2.0 * k / c
        }
        (TrialFamily::Lorentz, Potential::HarmonicOscillator) => {
            let (k, q) = lorentz_oscillator_coefficients(lf);
            (k / q).sqrt().sqrt()
        }
    })
}

/// Minimum of [`expectation_energy_closed`], written out directly.
fn closed_minimum(family: TrialFamily, pot: Potential, l: f64) -> f64 {
    match (family, pot) {
        (TrialFamily::Gaussian, Potential::Coulomb) => {
            let g = gaussian_coulomb_gamma(l);
            -0.5 * U::MASS * U::CHARGE_SQ * U::CHARGE_SQ / (U::HBAR * U::HBAR) * g * g / (l + 1.5)
        }
        (TrialFamily::Gaussian, Potential::HarmonicOscillator) => U::HBAR * U::OMEGA * (l + 1.5),
        (TrialFamily::Lorentz, Potential::Coulomb) => {
            let g = lorentz_g(l);
            let g2 = g * g;
            -0.5 * U::MASS * U::CHARGE_SQ * U::CHARGE_SQ / (U::HBAR * U::HBAR) * g2 * g2
                / ((l + 1.0) * (l + 0.5).powi(3))
        }
        (TrialFamily::Lorentz, Potential::HarmonicOscillator) => {
            U::HBAR * U::OMEGA * ((l + 1.0) * (l + 0.5) * (l + 1.5) / (l - 0.5)).sqrt()
        }
    }
}

/// Exact lowest level at orbital number `l`: `−1/(2(l+1)²)` for Coulomb,
/// `l + 3/2` for the oscillator.
pub fn exact_energy(pot: Potential, l: u64) -> f64 {
    let l = l as f64;
    match pot {
        Potential::Coulomb => {
            let n = l + 1.0;
            -U::MASS * U::CHARGE_SQ * U::CHARGE_SQ / (2.0 * U::HBAR * U::HBAR * n * n)
        }
        Potential::HarmonicOscillator => U::HBAR * U::OMEGA * (l + 1.5),
    }
}

/// Default relative tolerance of each quadrature in the numeric path.
pub const NUMERIC_TOL: f64 = 1e-12;

/// `⟨H⟩` by quadrature, with the kinetic term in first-derivative form:
/// `∫ (½R′²r² + ½l(l+1)R² + V R² r²) dr / ∫ R² r² dr`.
///
/// `tol` is the relative tolerance of each of the two integrals.
pub fn expectation_energy_numeric(spec: TrialSpec, pot: Potential, tol: f64) -> Result<f64> {
    spec.validate(pot)?;
    if !(tol > 0.0) {
        return Err(domain("expectation_energy_numeric", format!("tolerance must be positive, got {tol}")));
    }
    let s = spec.bulk_scale();
    let log_ref = spec.log_radial(s);
    let centrifugal = (spec.l * (spec.l + 1)) as f64;
    let kinetic_scale = 0.5 * U::HBAR * U::HBAR / U::MASS;
    // R(r)² normalised to one at the bulk scale.
    let weight = |r: f64| (2.0 * (spec.log_radial(r) - log_ref)).exp();
    let quad = SemiInfinite::default()
        .with_abs_tol(f64::MIN_POSITIVE)
        .with_rel_tol(tol)
        .with_scale(s);
    let numerator = quad.integrate(|r| {
        let w = weight(r);
        if w == 0.0 {
            return 0.0;
        }
        let d = spec.log_derivative(r);
        w * (kinetic_scale * (d * d + centrifugal) + pot.value(r) * r * r)
    })?;
    let denominator = quad.integrate(|r| {
        let w = weight(r);
        if w == 0.0 {
            0.0
        } else {
            w * r * r
        }
    })?;
    Ok(numerator.value / denominator.value)
}

/// Width of the golden-section bracket, in `ln(param)`, at which the numeric
/// minimiser stops.
const MINIMISER_LOG_WIDTH: f64 = 1e-10;

/// Optimised variational energy at orbital number `l`.
pub fn variational_energy(family: TrialFamily, pot: Potential, l: u64, method: Method) -> Result<EnergyEstimate> {
    check_combination(family, pot, l)?;
    let seed = optimal_param_closed(family, pot, l)?;
    let (value, optimal_param) = match method {
        Method::ClosedForm => (closed_minimum(family, pot, l as f64), seed),
        Method::Numeric => {
            let m = golden_section_log(
                |p| expectation_energy_numeric(TrialSpec { family, l, param: p }, pot, NUMERIC_TOL),
                seed / 10.0,
                seed * 10.0,
                MINIMISER_LOG_WIDTH,
            )?;
            (m.value, m.argmin)
        }
    };
    let exact_reference = exact_energy(pot, l);
    Ok(EnergyEstimate {
        value,
        optimal_param,
        method,
        exact_reference,
        ratio_to_exact: value / exact_reference,
    })
}

/// Smallest `l` for which the combination is defined.
pub fn min_l(family: TrialFamily, pot: Potential) -> u64 {
    match (family, pot) {
        (TrialFamily::Lorentz, Potential::HarmonicOscillator) => 1,
        _ => 0,
    }
}

/// `(l, E_var/E_exact)` from the closed forms, for `l` from [`min_l`] to
/// `l_max`.
pub fn ratio_sequence(family: TrialFamily, pot: Potential, l_max: u64) -> Result<Vec<(u64, f64)>> {
    if l_max == 0 {
        return Err(domain("ratio_sequence", "l_max must be at least 1"));
    }
    (min_l(family, pot)..=l_max)
        .map(|l| variational_energy(family, pot, l, Method::ClosedForm).map(|e| (l, e.ratio_to_exact)))
        .collect()
}

/// `E_var/E_exact` for Lorentz–Coulomb written through `n²a_n`:
/// `((n−1/2)(n+1/2)²/n³)·(n²a_n)²` with `n = l+1`.
pub fn lorentz_coulomb_ratio_via_scaled_a(l: u64) -> Result<f64> {
    let n = l as f64 + 1.0;
    let s = crate::series::scaled_a(l + 1)?;
    Ok((n - 0.5) * (n + 0.5) * (n + 0.5) / (n * n * n) * s * s)
}

/// `E_var²/E_exact²` for Lorentz–oscillator: `(l+1)(l+1/2)/((l+3/2)(l−1/2))`.
pub fn lorentz_oscillator_ratio_squared(l: u64) -> Result<f64> {
    check_combination(TrialFamily::Lorentz, Potential::HarmonicOscillator, l)?;
    let l = l as f64;
    Ok((l + 1.0) * (l + 0.5) / ((l + 1.5) * (l - 0.5)))
}

/// Brackets `Σ_{l=0..l_max} E_l` for the Lorentz trial in the Coulomb
/// potential.
///
/// `E_l = −½ r(l)⁴ / ((l+1)(l+1/2)³)` with `r(l) = Γ(l+1)/Γ(l+1/2)`, and each
/// `r(l)⁴` for `l ≥ 1` is replaced by the radicands of the quartic-root
/// sandwich. The `l = 0` term `−4/π²` enters exactly, so `l_max = 0` is
/// rejected: there is nothing to bracket.
pub fn lorentz_coulomb_energy_sum_bounds(l_max: u64) -> Result<BoundsTriple> {
    if l_max == 0 {
        return Err(domain("lorentz_coulomb_energy_sum_bounds", "l_max must be at least 1"));
    }
    let scale = 0.5 * U::MASS * U::CHARGE_SQ * U::CHARGE_SQ / (U::HBAR * U::HBAR);
    let first = closed_minimum(TrialFamily::Lorentz, Potential::Coulomb, 0.0);
    let (mut lower, mut value, mut upper) = (NeumaierSum::new(), NeumaierSum::new(), NeumaierSum::new());
    let (mut lower_gap, mut upper_gap) = (NeumaierSum::new(), NeumaierSum::new());
    lower += first;
    value += first;
    upper += first;
    for l in 1..=l_max {
        let x = l as f64;
        let d = scale / ((x + 1.0) * (x + 0.5).powi(3));
        let (lo4, hi4) = (quartic_lower_radicand(x), x * x + 0.5 * x + 0.125);
        // The energy is −d·r⁴, so the larger radicand gives the lower bound.
        lower += -d * hi4;
        upper += -d * lo4;
        value += closed_minimum(TrialFamily::Lorentz, Potential::Coulomb, x);
        let rho = quartic_ratio_residual(x);
        lower_gap += -d * rho;
        upper_gap += d * (rho + 1.0 / (128.0 * x));
    }
    Ok(BoundsTriple {
        lower: lower.value(),
        value: value.value(),
        upper: upper.value(),
        lower_gap: lower_gap.value(),
        upper_gap: upper_gap.value(),
    })
}

#[cfg(test)]
mod tests {
    use std::f64::consts::PI;

    use super::*;
    use crate::integrals::{gaussian_moment, rational_moment, RationalMomentQuery};
    use crate::series::{scaled_a, wallis_partial_product};

    const FAMILIES: [TrialFamily; 2] = [TrialFamily::Gaussian, TrialFamily::Lorentz];
    const POTENTIALS: [Potential; 2] = [Potential::Coulomb, Potential::HarmonicOscillator];

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    fn spec(family: TrialFamily, l: u64, param: f64) -> TrialSpec {
        TrialSpec::new(family, l, param).unwrap()
    }

    #[test]
    fn closed_expectation_examples() {
        let e = expectation_energy_closed(spec(TrialFamily::Gaussian, 0, 1.0), Potential::Coulomb).unwrap();
        assert!(rel(e, 1.5 - 2.0f64.sqrt() * 2.0 / PI.sqrt()) < 1e-14);
        assert!((e + 0.095_769_121_605_731).abs() < 1e-14);
        let e = expectation_energy_closed(spec(TrialFamily::Lorentz, 0, 1.0), Potential::Coulomb).unwrap();
        assert!(rel(e, 0.25 - 2.0 / PI) < 1e-15);
    }

    #[test]
    fn oscillator_forms_match_moment_ratios() {
        // ⟨r²⟩ and the kinetic term assembled from the moment integrals.
        for l in 1..=40u64 {
            let lf = l as f64;
            let alpha = 0.37;
            let r2 = gaussian_moment(2 * l + 4) / (2.0 * alpha * gaussian_moment(2 * l + 2));
            let e = expectation_energy_closed(spec(TrialFamily::Gaussian, l, alpha), Potential::HarmonicOscillator)
                .unwrap();
            assert!(rel(e, alpha * (lf + 1.5) + 0.5 * r2) < 1e-13, "l={l}");

            let a = 1.7;
            let e_ = 2.0 * lf + 2.0;
            let im = |m: f64| rational_moment(RationalMomentQuery { m, n: e_ }).unwrap();
            let r2 = a * a * im(e_ + 2.0) / im(e_);
            let e = expectation_energy_closed(spec(TrialFamily::Lorentz, l, a), Potential::HarmonicOscillator).unwrap();
            assert!(rel(e, (lf + 1.0) * (lf + 0.5) / (2.0 * a * a) + 0.5 * r2) < 1e-12, "l={l}");
        }
    }

    #[test]
    fn numeric_expectation_examples() {
        let cases = [
            (TrialFamily::Gaussian, 0, 1.0, Potential::Coulomb),
            (TrialFamily::Lorentz, 1, 2.0, Potential::Coulomb),
            (TrialFamily::Gaussian, 3, 0.5, Potential::HarmonicOscillator),
            (TrialFamily::Lorentz, 2, 0.8, Potential::HarmonicOscillator),
        ];
        for (family, l, p, pot) in cases {
            let s = spec(family, l, p);
            let closed = expectation_energy_closed(s, pot).unwrap();
            let numeric = expectation_energy_numeric(s, pot, NUMERIC_TOL).unwrap();
            assert!(rel(numeric, closed) < 1e-8, "{family:?} {pot:?} l={l}: {numeric} vs {closed}");
        }
    }

    #[test]
    fn numeric_expectation_over_parameter_range() {
        for family in FAMILIES {
            for pot in POTENTIALS {
                for l in [min_l(family, pot), 5, 20] {
                    let p0 = optimal_param_closed(family, pot, l).unwrap();
                    for f in [0.01, 0.1, 1.0, 10.0, 100.0] {
                        let s = spec(family, l, p0 * f);
                        let closed = expectation_energy_closed(s, pot).unwrap();
                        let numeric = expectation_energy_numeric(s, pot, NUMERIC_TOL).unwrap();
                        assert!(rel(numeric, closed) < 1e-8, "{family:?} {pot:?} l={l} x{f}");
                    }
                }
            }
        }
    }

    #[test]
    fn lorentz_oscillator_l0_diverges() {
        let s = spec(TrialFamily::Lorentz, 0, 1.0);
        let pot = Potential::HarmonicOscillator;
        assert!(matches!(expectation_energy_closed(s, pot), Err(Error::Divergence { .. })));
        assert!(matches!(expectation_energy_numeric(s, pot, 1e-10), Err(Error::Divergence { .. })));
        assert!(matches!(
            variational_energy(TrialFamily::Lorentz, pot, 0, Method::ClosedForm),
            Err(Error::Divergence { .. })
        ));
        assert!(TrialSpec::new(TrialFamily::Gaussian, 0, 0.0).is_err());
        assert!(TrialSpec::new(TrialFamily::Gaussian, 0, f64::NAN).is_err());
    }

    #[test]
    fn optimal_param_examples() {
        let a = optimal_param_closed(TrialFamily::Gaussian, Potential::Coulomb, 0).unwrap();
        assert!(rel(a, 8.0 / (9.0 * PI)) < 1e-14);
        for l in 0..10 {
            assert_eq!(optimal_param_closed(TrialFamily::Gaussian, Potential::HarmonicOscillator, l).unwrap(), 0.5);
        }
        let a = optimal_param_closed(TrialFamily::Lorentz, Potential::Coulomb, 0).unwrap();
        assert!(rel(a, PI / 4.0) < 1e-14);
    }

    #[test]
    fn optimum_reproduces_closed_minimum() {
        for family in FAMILIES {
            for pot in POTENTIALS {
                for l in min_l(family, pot)..=50 {
                    let p = optimal_param_closed(family, pot, l).unwrap();
                    let at_opt = expectation_energy_closed(spec(family, l, p), pot).unwrap();
                    let e = variational_energy(family, pot, l, Method::ClosedForm).unwrap();
                    assert!(rel(at_opt, e.value) < 1e-13, "{family:?} {pot:?} l={l}");
                }
            }
        }
    }

    #[test]
    fn variational_energy_examples() {
        let e = variational_energy(TrialFamily::Gaussian, Potential::Coulomb, 0, Method::ClosedForm).unwrap();
        assert!(rel(e.value, -4.0 / (3.0 * PI)) < 1e-14);
        assert_eq!(e.exact_reference, -0.5);
        assert!(rel(e.ratio_to_exact, 8.0 / (3.0 * PI)) < 1e-14);
        let e = variational_energy(TrialFamily::Lorentz, Potential::Coulomb, 0, Method::ClosedForm).unwrap();
        assert!(rel(e.value, -4.0 / (PI * PI)) < 1e-14);
        let e = variational_energy(TrialFamily::Lorentz, Potential::HarmonicOscillator, 1, Method::ClosedForm).unwrap();
        assert!(rel(e.value, 15.0f64.sqrt()) < 1e-15);
        assert_eq!(e.exact_reference, 2.5);
    }

    #[test]
    fn exact_energy_examples() {
        assert_eq!(exact_energy(Potential::Coulomb, 0), -0.5);
        assert!(rel(exact_energy(Potential::Coulomb, 2), -1.0 / 18.0) < 1e-16);
        assert_eq!(exact_energy(Potential::HarmonicOscillator, 4), 5.5);
    }

    #[test]
    fn ratio_sequence_examples() {
        let g = ratio_sequence(TrialFamily::Gaussian, Potential::Coulomb, 5).unwrap();
        assert_eq!(g[0].0, 0);
        assert!(rel(g[0].1, 8.0 / (3.0 * PI)) < 1e-14);
        let lz = ratio_sequence(TrialFamily::Lorentz, Potential::Coulomb, 5).unwrap();
        assert!(rel(lz[0].1, 8.0 / (PI * PI)) < 1e-14);
        for (_, r) in ratio_sequence(TrialFamily::Gaussian, Potential::HarmonicOscillator, 20).unwrap() {
            assert_eq!(r, 1.0);
        }
        let lo = ratio_sequence(TrialFamily::Lorentz, Potential::HarmonicOscillator, 5).unwrap();
        assert_eq!(lo[0].0, 1);
        assert!(ratio_sequence(TrialFamily::Gaussian, Potential::Coulomb, 0).is_err());
    }

    #[test]
    fn ratio_sequences_are_monotone_toward_one() {
        for family in FAMILIES {
            for pot in POTENTIALS {
                let seq = ratio_sequence(family, pot, 200).unwrap();
                for w in seq.windows(2) {
                    let (d0, d1) = ((w[0].1 - 1.0).abs(), (w[1].1 - 1.0).abs());
                    assert!(d1 <= d0, "{family:?} {pot:?} l={}", w[1].0);
                }
            }
        }
    }

    #[test]
    fn gaussian_coulomb_ratio_is_wallis() {
        for l in 0..=2000u64 {
            let r = variational_energy(TrialFamily::Gaussian, Potential::Coulomb, l, Method::ClosedForm)
                .unwrap()
                .ratio_to_exact;
            assert!(rel(r, scaled_a(l + 1).unwrap()) < 1e-13, "l={l}");
            assert!(rel(r, 2.0 / PI * wallis_partial_product(l + 1)) < 1e-12, "l={l}");
        }
    }

    #[test]
    fn lorentz_coulomb_ratio_identity() {
        for l in 0..=2000u64 {
            let r = variational_energy(TrialFamily::Lorentz, Potential::Coulomb, l, Method::ClosedForm)
                .unwrap()
                .ratio_to_exact;
            assert!(rel(r, lorentz_coulomb_ratio_via_scaled_a(l).unwrap()) < 1e-12, "l={l}");
        }
    }

    #[test]
    fn lorentz_oscillator_asymptotic() {
        let mut prev = f64::INFINITY;
        for l in 2..=1000u64 {
            let q = lorentz_oscillator_ratio_squared(l).unwrap();
            assert!(q > 1.0 && q < 1.0 + 3.0 / l as f64, "l={l}");
            assert!(q < prev);
            prev = q;
            let r = variational_energy(TrialFamily::Lorentz, Potential::HarmonicOscillator, l, Method::ClosedForm)
                .unwrap()
                .ratio_to_exact;
            assert!(rel(r * r, q) < 1e-14, "l={l}");
        }
    }

    #[test]
    fn upper_bound_on_parameter_grid() {
        for family in FAMILIES {
            for pot in POTENTIALS {
                for l in min_l(family, pot)..=50 {
                    let p0 = optimal_param_closed(family, pot, l).unwrap();
                    let exact = exact_energy(pot, l);
                    for i in -20..=20 {
                        let p = p0 * 10f64.powf(i as f64 / 10.0);
                        let e = expectation_energy_closed(spec(family, l, p), pot).unwrap();
                        let exact_trial = family == TrialFamily::Gaussian && pot == Potential::HarmonicOscillator && i == 0;
                        if exact_trial {
                            assert_eq!(e, exact);
                        } else {
                            assert!(e > exact, "{family:?} {pot:?} l={l} i={i}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn closed_forms_are_stationary() {
        for family in FAMILIES {
            for pot in POTENTIALS {
                for l in min_l(family, pot)..=50 {
                    let p = optimal_param_closed(family, pot, l).unwrap();
                    let h = 1e-6 * p;
                    let e = |q| expectation_energy_closed(spec(family, l, q), pot).unwrap();
                    let deriv = (e(p + h) - e(p - h)) / (2.0 * h);
                    // Relative to the energy scale E/p.
                    let scale = e(p).abs() / p;
                    assert!((deriv / scale).abs() < 1e-6, "{family:?} {pot:?} l={l}");
                }
            }
        }
    }

    #[test]
    fn numeric_path_agrees_with_closed_form() {
        for family in FAMILIES {
            for pot in POTENTIALS {
                for l in [min_l(family, pot), 3, 20] {
                    let c = variational_energy(family, pot, l, Method::ClosedForm).unwrap();
                    let n = variational_energy(family, pot, l, Method::Numeric).unwrap();
                    assert_eq!(n.method, Method::Numeric);
                    assert!(rel(n.value, c.value) < 1e-6, "{family:?} {pot:?} l={l}");
                    assert!(n.value >= c.value * (1.0 + 1e-12f64.copysign(c.value)) || rel(n.value, c.value) < 1e-11);
                    assert!(rel(n.optimal_param, c.optimal_param) < 1e-3);
                }
            }
        }
    }

    #[test]
    fn lorentz_energy_sum_is_bracketed() {
        assert!(lorentz_coulomb_energy_sum_bounds(0).is_err());
        for l_max in [1u64, 2, 5, 50, 1000] {
            let b = lorentz_coulomb_energy_sum_bounds(l_max).unwrap();
            assert!(b.satisfied(), "l_max={l_max}: {b:?}");
            assert!(b.lower <= b.value && b.value <= b.upper);
            let direct: f64 = (0..=l_max)
                .map(|l| variational_energy(TrialFamily::Lorentz, Potential::Coulomb, l, Method::ClosedForm).unwrap().value)
                .sum();
            assert!(rel(b.value, direct) < 1e-13);
            assert!(((b.value - b.lower) - b.lower_gap).abs() < 1e-14);
            assert!(((b.upper - b.value) - b.upper_gap).abs() < 1e-14);
        }
    }
}
