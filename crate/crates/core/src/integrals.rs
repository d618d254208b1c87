//! Closed forms for the radial integrals behind both trial functions, and
//! the literal integrands used to check them by quadrature.
//!
//! * `I_m = ∫₀^∞ x^m e^{−x²} dx = Γ((m+1)/2)/2`
//! * `I_{m,n} = ∫₀^∞ x^m/(1+x²)^n dx = Γ((m+1)/2) Γ(n−(m+1)/2) / (2Γ(n))`
//! * `G_{l+1} = ∫₀^∞ dx/(1+x²)^{l+1} = (π/2) W_l`
//! * `I_{2l+2,2l+2} = π W_l / 2^{2l+2}` (normalisation of the Lorentz trial function)
//! * `I_{2l+1,2l+2} = (l!)² / (2 (2l+1)!)` (its Coulomb matrix element)

use std::f64::consts::PI;

use crate::error::{domain, Result};
use crate::gamma::{ln_gamma_positive, ln_gamma_ratio_unchecked, wallis_ratio};
use crate::quadrature::{QuadratureResult, SemiInfinite};

/// Largest `n` with `n!` finite in `f64`.
const FACTORIAL_MAX: u64 = 170;

/// `Γ(j/2)` for a positive integer `j`: exact running products while the
/// result stays finite, log-gamma beyond.
pub fn gamma_half_integer(j: u64) -> f64 {
    assert!(j > 0, "gamma_half_integer needs a positive argument");
    if j > 2 * FACTORIAL_MAX + 2 {
        return ln_gamma_positive(j as f64 / 2.0).exp();
    }
    if j.is_multiple_of(2) {
        // Γ(k) = (k-1)!
        (1..j / 2).fold(1.0, |acc, i| acc * i as f64)
    } else {
        // Γ(k + 1/2) = √π ∏_{i=1..k} (i − 1/2)
        (1..=j / 2).fold(PI.sqrt(), |acc, i| acc * (i as f64 - 0.5))
    }
}

/// `I_m = ∫₀^∞ x^m e^{−x²} dx = Γ((m+1)/2)/2`.
pub fn gaussian_moment(m: u64) -> f64 {
    0.5 * gamma_half_integer(m + 1)
}

/// `ln B(p, q)` with the larger argument handled as a gamma ratio.
fn ln_beta(p: f64, q: f64) -> f64 {
    let (s, t) = if p < q { (p, q) } else { (q, p) };
    ln_gamma_positive(s) + ln_gamma_ratio_unchecked(t, 0.0, s)
}

/// `∫₀^{π/2} sin^{2p−1}θ cos^{2q−1}θ dθ = Γ(p)Γ(q)/(2Γ(p+q))`.
pub fn beta_trig_integral(p: f64, q: f64) -> Result<f64> {
    if !(p > 0.0 && q > 0.0) || !p.is_finite() || !q.is_finite() {
        return Err(domain(
            "beta_trig_integral",
            format!("p and q must be positive, got p={p}, q={q}"),
        ));
    }
    Ok(0.5 * ln_beta(p, q).exp())
}

/// Exponents `(m, n)` of `∫₀^∞ x^m/(1+x²)^n dx`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RationalMomentQuery {
    pub m: f64,
    pub n: f64,
}

impl RationalMomentQuery {
    /// Convergent iff `m > −1` (at zero) and `2n − m > 1` (at infinity).
    pub fn new(m: f64, n: f64) -> Result<Self> {
        if !(m > -1.0) || !m.is_finite() {
            return Err(domain("rational_moment", format!("diverges at 0: need m > -1, got m={m}")));
        }
        if !(2.0 * n - m > 1.0) || !n.is_finite() {
            return Err(domain(
                "rational_moment",
                format!("diverges at infinity: need 2n - m > 1, got m={m}, n={n}"),
            ));
        }
        Ok(Self { m, n })
    }
}

/// `I_{m,n} = Γ((m+1)/2) Γ(n−(m+1)/2) / (2Γ(n))`, reached through the
/// substitution `x = tan θ` in [`beta_trig_integral`].
pub fn rational_moment(q: RationalMomentQuery) -> Result<f64> {
    let q = RationalMomentQuery::new(q.m, q.n)?;
    let p = (q.m + 1.0) / 2.0;
    beta_trig_integral(p, q.n - p)
}

/// `G_{l+1} = ∫₀^∞ dx/(1+x²)^{l+1}` by the recurrence
/// `G_{j+1} = (2j−1)/(2j) G_j` from `G_1 = π/2`.
#[allow(non_snake_case)]
pub fn G_rational(l: u64) -> f64 {
    (1..=l).fold(PI / 2.0, |g, j| {
        let j = j as f64;
        g * (2.0 * j - 1.0) / (2.0 * j)
    })
}

/// `I_{2l+2,2l+2} = π W_l / 2^{2l+2}`.
pub fn lorentz_norm_integral(l: u64) -> f64 {
    PI * wallis_ratio(l) * 0.5f64.powi(2 * l as i32 + 2)
}

/// `I_{2l+1,2l+2} = (l!)² / (2 (2l+1)!)`.
pub fn lorentz_coulomb_integral(l: u64) -> f64 {
    if 2 * l < FACTORIAL_MAX {
        // (l!)²/(2l+1)! = [∏_{j=1..l} j/(l+j)] / (2l+1)
        let lf = l as f64;
        let prod = (1..=l).fold(1.0, |acc, j| acc * j as f64 / (lf + j as f64));
        0.5 * prod / (2.0 * lf + 1.0)
    } else {
        // Duplication: (l!)²/(2l+1)! = √π Γ(l+1) / (2^{2l+1} Γ(l+3/2))
        lorentz_coulomb_integral_gamma_form(l)
    }
}

/// The duplication-formula form `√π Γ(l+1) / (2^{2l+2} Γ(l+3/2))` of
/// [`lorentz_coulomb_integral`].
pub fn lorentz_coulomb_integral_gamma_form(l: u64) -> f64 {
    let lf = l as f64;
    PI.sqrt() * ln_gamma_ratio_unchecked(lf, 1.0, 1.5).exp() * 0.5f64.powi(2 * l as i32 + 2)
}

/// `I_{2l+1,2l+2} / I_{2l+2,2l+2} = 1/((l+1/2) π W_l²)`.
pub fn coulomb_to_norm_ratio(l: u64) -> f64 {
    let w = wallis_ratio(l);
    1.0 / ((l as f64 + 0.5) * PI * w * w)
}

/// `x^m e^{−x²}`, evaluated in log form so it cannot overflow.
pub fn gaussian_integrand(m: u64) -> impl Fn(f64) -> f64 {
    move |x: f64| {
        if x == 0.0 {
            return if m == 0 { 1.0 } else { 0.0 };
        }
        (m as f64 * x.ln() - x * x).exp()
    }
}

/// `x^m/(1+x²)^n`, evaluated in log form.
pub fn rational_integrand(m: f64, n: f64) -> impl Fn(f64) -> f64 {
    move |x: f64| {
        if x == 0.0 {
            return if m == 0.0 { 1.0 } else { 0.0 };
        }
        (m * x.ln() - n * (x * x).ln_1p()).exp()
    }
}

/// Which closed form an [`IntegralCheck`] row certifies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IntegralFamily {
    /// `I_m` for Gaussian moments.
    GaussianMoment,
    /// `G_{l+1}`.
    RationalG,
    /// `I_{2l+2,2l+2}`.
    LorentzNorm,
    /// `I_{2l+1,2l+2}`.
    LorentzCoulomb,
}

impl IntegralFamily {
    pub fn label(self) -> &'static str {
        match self {
            Self::GaussianMoment => "gaussian_moment",
            Self::RationalG => "G_rational",
            Self::LorentzNorm => "lorentz_norm",
            Self::LorentzCoulomb => "lorentz_coulomb",
        }
    }
}

/// A closed form paired with the quadrature of its literal integrand.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IntegralCheck {
    pub family: IntegralFamily,
    pub index: u64,
    pub closed_form: f64,
    pub quadrature: QuadratureResult,
}

impl IntegralCheck {
    pub fn abs_error(&self) -> f64 {
        (self.quadrature.value - self.closed_form).abs()
    }

    pub fn rel_error(&self) -> f64 {
        self.abs_error() / self.closed_form.abs()
    }
}

/// Quadrature of the literal integrand for one closed form, at relative
/// tolerance `rel_tol`.
pub fn check_integral(family: IntegralFamily, index: u64, rel_tol: f64) -> Result<IntegralCheck> {
    let quad = SemiInfinite::default()
        .with_abs_tol(f64::MIN_POSITIVE)
        .with_rel_tol(rel_tol);
    let (closed_form, quadrature) = match family {
        IntegralFamily::GaussianMoment => (gaussian_moment(index), quad.integrate(gaussian_integrand(index))?),
        IntegralFamily::RationalG => (
            G_rational(index),
            quad.integrate(rational_integrand(0.0, index as f64 + 1.0))?,
        ),
        IntegralFamily::LorentzNorm => {
            let e = 2.0 * index as f64 + 2.0;
            (lorentz_norm_integral(index), quad.integrate(rational_integrand(e, e))?)
        }
        IntegralFamily::LorentzCoulomb => {
            let e = 2.0 * index as f64 + 2.0;
            (lorentz_coulomb_integral(index), quad.integrate(rational_integrand(e - 1.0, e))?)
        }
    };
    Ok(IntegralCheck {
        family,
        index,
        closed_form,
        quadrature,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    #[test]
    fn gaussian_moment_examples() {
        assert!(rel(gaussian_moment(0), PI.sqrt() / 2.0) < 1e-15);
        assert_eq!(gaussian_moment(1), 0.5);
        assert_eq!(gaussian_moment(3), 0.5);
    }

    #[test]
    fn gaussian_moment_recurrence() {
        for m in 2..=60u64 {
            let lhs = gaussian_moment(m);
            let rhs = (m as f64 - 1.0) / 2.0 * gaussian_moment(m - 2);
            assert!(rel(lhs, rhs) < 1e-14, "m={m}");
        }
    }

    #[test]
    fn gamma_half_integer_matches_log_gamma() {
        for j in 1..=340u64 {
            let want = ln_gamma_positive(j as f64 / 2.0);
            let got = gamma_half_integer(j).ln();
            assert!((got - want).abs() < 1e-13 * want.abs().max(1.0), "j={j}");
        }
    }

    #[test]
    fn rational_moment_examples() {
        let r = |m, n| rational_moment(RationalMomentQuery { m, n }).unwrap();
        assert!(rel(r(0.0, 1.0), PI / 2.0) < 1e-15);
        assert!(rel(r(2.0, 2.0), PI / 4.0) < 1e-15);
        assert!(rel(r(1.0, 2.0), 0.5) < 1e-15);
        assert!(rational_moment(RationalMomentQuery { m: 2.0, n: 1.0 }).is_err());
        assert!(RationalMomentQuery::new(-1.0, 3.0).is_err());
    }

    #[test]
    fn beta_trig_examples() {
        assert!(rel(beta_trig_integral(0.5, 0.5).unwrap(), PI / 2.0) < 1e-15);
        assert!(rel(beta_trig_integral(1.0, 1.0).unwrap(), 0.5) < 1e-15);
        assert!(rel(beta_trig_integral(1.5, 0.5).unwrap(), PI / 4.0) < 1e-15);
        assert!(beta_trig_integral(0.0, 1.0).is_err());
    }

    #[test]
    fn g_rational_examples() {
        assert_eq!(G_rational(0), PI / 2.0);
        assert!(rel(G_rational(1), PI / 4.0) < 1e-16);
        assert!(rel(G_rational(2), 3.0 * PI / 16.0) < 1e-16);
        for l in 0..=300 {
            assert!(rel(G_rational(l), PI / 2.0 * wallis_ratio(l)) < 1e-12, "l={l}");
        }
    }

    #[test]
    fn lorentz_norm_examples() {
        assert!(rel(lorentz_norm_integral(0), PI / 4.0) < 1e-16);
        assert!(rel(lorentz_norm_integral(1), PI / 32.0) < 1e-16);
        assert!(rel(lorentz_norm_integral(2), 3.0 * PI / 512.0) < 1e-16);
        for l in 0..=60u64 {
            let e = 2.0 * l as f64 + 2.0;
            let rm = rational_moment(RationalMomentQuery { m: e, n: e }).unwrap();
            assert!(rel(lorentz_norm_integral(l), rm) < 1e-13, "l={l}");
            // I_{2l+2,2l+2} = G_{l+1} / 2^{2l+1}
            assert!(rel(lorentz_norm_integral(l), G_rational(l) * 0.5f64.powi(2 * l as i32 + 1)) < 1e-13);
        }
    }

    #[test]
    fn lorentz_coulomb_examples() {
        assert_eq!(lorentz_coulomb_integral(0), 0.5);
        assert!(rel(lorentz_coulomb_integral(1), 1.0 / 12.0) < 1e-15);
        assert!(rel(lorentz_coulomb_integral(2), 1.0 / 60.0) < 1e-15);
        for l in 0..=200u64 {
            let a = lorentz_coulomb_integral(l);
            let b = lorentz_coulomb_integral_gamma_form(l);
            assert!(rel(a, b) < 1e-13, "l={l}: {a:e} vs {b:e}");
        }
        assert!(rel(lorentz_coulomb_integral(100), 2.74721479253669472e-62) < 1e-13);
        assert!(rel(lorentz_coulomb_integral(300), 6.1576450881850324827e-183) < 1e-13);
    }

    #[test]
    fn coulomb_to_norm_examples() {
        assert!(rel(coulomb_to_norm_ratio(0), 2.0 / PI) < 1e-15);
        assert!(rel(coulomb_to_norm_ratio(1), 8.0 / (3.0 * PI)) < 1e-15);
        for l in 0..=100u64 {
            let q = lorentz_coulomb_integral(l) / lorentz_norm_integral(l);
            assert!(rel(coulomb_to_norm_ratio(l), q) < 1e-13, "l={l}");
        }
    }

    #[test]
    fn closed_forms_match_quadrature() {
        let families = [
            IntegralFamily::GaussianMoment,
            IntegralFamily::RationalG,
            IntegralFamily::LorentzNorm,
            IntegralFamily::LorentzCoulomb,
        ];
        for family in families {
            for l in 0..=15 {
                let c = check_integral(family, l, 1e-12).unwrap();
                assert!(c.rel_error() < 1e-9, "{family:?} l={l}: rel {:e}", c.rel_error());
                assert!(c.abs_error() <= (1e-9 * c.closed_form).max(10.0 * c.quadrature.abs_error_estimate));
            }
        }
    }
}
