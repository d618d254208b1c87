//! Log-gamma, gamma-function ratios, the Wallis ratio and the classical
//! bounds on `Γ(x+1)/Γ(x+1/2)`.
//!
//! Everything here is built on a single primitive, [`log_gamma`], and its
//! companion [`ln_gamma_ratio`], which evaluates `ln Γ(x+a) − ln Γ(x+b)`
//! without ever forming the two large logarithms separately. The bound checks
//! ([`kazarinoff_bounds`], [`quartic_root_bounds`]) go one step further and
//! compute the gaps between the bounds and the ratio from asymptotic residual
//! series, because for large arguments those gaps are far below the
//! resolution of `f64`.

use std::f64::consts::PI;
use std::sync::OnceLock;

use crate::error::{domain, Result};

/// Euler–Mascheroni constant.
const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// `B_2, B_4, …, B_20` as exact rationals.
const BERNOULLI_EVEN: [(f64, f64); 10] = [
    (1.0, 6.0),
    (-1.0, 30.0),
    (1.0, 42.0),
    (-1.0, 30.0),
    (5.0, 66.0),
    (-691.0, 2730.0),
    (7.0, 6.0),
    (-3617.0, 510.0),
    (43867.0, 798.0),
    (-174611.0, 330.0),
];

/// Below this argument `ln Γ` is reduced onto `[1.5, 2.5)`; above it the
/// Stirling series is used.
const STIRLING_MIN: f64 = 20.0;

/// Threshold above which the residual series for `Γ(x+1)/Γ(x+1/2)` are used.
const RESIDUAL_SERIES_MIN: f64 = 32.0;

/// Number of terms kept from the power series of `ln Γ(2+z)` about `z = 0`.
const ZETA_TERMS: usize = 40;

fn bernoulli(j: usize) -> f64 {
    let (p, q) = BERNOULLI_EVEN[j - 1];
    p / q
}

/// `ζ(k) − 1` for `k = 0..ZETA_TERMS` (entries 0 and 1 unused), by
/// Euler–Maclaurin summation with ten explicit terms.
fn zeta_minus_one() -> &'static [f64; ZETA_TERMS] {
    static TABLE: OnceLock<[f64; ZETA_TERMS]> = OnceLock::new();
    TABLE.get_or_init(|| {
        const N: f64 = 10.0;
        let mut table = [0.0; ZETA_TERMS];
        for (k, slot) in table.iter_mut().enumerate().skip(2) {
            let s = k as f64;
            // Tail corrections, smallest first.
            let mut tail = 0.0;
            let mut terms = Vec::with_capacity(8);
            // rising = s (s+1) ... (s+2j-2), fact = (2j)!
            let mut rising = s;
            let mut fact = 2.0;
            for j in 1..=8 {
                terms.push(bernoulli(j) / fact * rising * N.powf(-s - 2.0 * j as f64 + 1.0));
                rising *= (s + 2.0 * j as f64 - 1.0) * (s + 2.0 * j as f64);
                fact *= (2.0 * j as f64 + 1.0) * (2.0 * j as f64 + 2.0);
            }
            for t in terms.iter().rev() {
                tail += t;
            }
            tail += 0.5 * N.powf(-s);
            tail += N.powf(1.0 - s) / (s - 1.0);
            let mut head = 0.0;
            for n in (2..10).rev() {
                head += (n as f64).powf(-s);
            }
            *slot = head + tail;
        }
        table
    })
}

/// `ln Γ(2+z)` for `|z| ≤ 1/2`.
fn ln_gamma_2p(z: f64) -> f64 {
    let zeta = zeta_minus_one();
    // sum_{k>=2} (-1)^k (ζ(k)-1) z^k / k, Horner from the top.
    let mut acc = 0.0;
    for k in (2..ZETA_TERMS).rev() {
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        acc = acc * z + sign * zeta[k] / k as f64;
    }
    z * (1.0 - EULER_GAMMA) + acc * z * z
}

/// `ln Γ(1+z)` for `|z| ≤ 1/2`.
fn ln_gamma_1p(z: f64) -> f64 {
    ln_gamma_2p(z) - z.ln_1p()
}

/// `Σ_j B_{2j} / (2j(2j−1) x^{2j−1})`, the tail of the Stirling series.
fn stirling_correction(x: f64) -> f64 {
    let inv = 1.0 / x;
    let inv2 = inv * inv;
    let mut corr = 0.0;
    for j in (1..=BERNOULLI_EVEN.len()).rev() {
        let m = 2.0 * j as f64;
        corr = corr * inv2 + bernoulli(j) / (m * (m - 1.0));
    }
    corr * inv
}

/// Stirling series, valid (to full precision) for `x ≥ STIRLING_MIN`.
fn ln_gamma_stirling(x: f64) -> f64 {
    (x - 0.5) * x.ln() - x + 0.5 * (2.0 * PI).ln() + stirling_correction(x)
}

pub(crate) fn ln_gamma_positive(x: f64) -> f64 {
    debug_assert!(x > 0.0);
    if x < 0.5 {
        ln_gamma_1p(x) - x.ln()
    } else if x < 1.5 {
        ln_gamma_1p(x - 1.0)
    } else if x < 2.5 {
        ln_gamma_2p(x - 2.0)
    } else if x < STIRLING_MIN {
        // Γ(x) = (x-1)(x-2)...(y) Γ(y) with y in [1.5, 2.5)
        let mut y = x;
        let mut prod = 1.0;
        while y >= 2.5 {
            y -= 1.0;
            prod *= y;
        }
        prod.ln() + ln_gamma_2p(y - 2.0)
    } else {
        ln_gamma_stirling(x)
    }
}

/// Natural logarithm of the gamma function for positive arguments.
///
/// Accurate to a few units in the last place (relative) on `[1e-3, 1e8]`,
/// including near the zeros at `x = 1` and `x = 2`.
pub fn log_gamma(x: f64) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(domain("log_gamma", format!("argument must be positive and finite, got {x}")));
    }
    Ok(ln_gamma_positive(x))
}

/// A query for the ratio `Γ(x+a)/Γ(x+b)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GammaRatioQuery {
    pub x: f64,
    pub a: f64,
    pub b: f64,
}

impl GammaRatioQuery {
    pub fn new(x: f64, a: f64, b: f64) -> Result<Self> {
        let q = Self { x, a, b };
        q.validate()?;
        Ok(q)
    }

    fn validate(&self) -> Result<()> {
        let (u, v) = (self.x + self.a, self.x + self.b);
        if !(u > 0.0 && v > 0.0) || !u.is_finite() || !v.is_finite() {
            return Err(domain(
                "gamma_ratio",
                format!("pole or invalid argument: x+a = {u}, x+b = {v}"),
            ));
        }
        Ok(())
    }
}

/// `ln Γ(V+d) − ln Γ(V)` for `V, V+d ≥ STIRLING_MIN`, by differencing the
/// Stirling series term by term.
fn stirling_difference(v: f64, d: f64) -> f64 {
    let t = (d / v).ln_1p(); // ln(U/V)
    let mut main = (v + d - 0.5) * t + d * v.ln() - d;
    // sum_j c_j (U^{1-2j} - V^{1-2j}),  U^{-m} - V^{-m} = V^{-m} expm1(-m t)
    let inv2 = 1.0 / (v * v);
    let mut vpow = 1.0 / v;
    for j in 1..=BERNOULLI_EVEN.len() {
        let m = 2.0 * j as f64;
        let c = bernoulli(j) / (m * (m - 1.0));
        main += c * vpow * (-(m - 1.0) * t).exp_m1();
        vpow *= inv2;
    }
    main
}

/// `ln Γ(x+a) − ln Γ(x+b)` evaluated without cancellation between two large
/// logarithms.
///
/// Both arguments are shifted upward until they exceed the Stirling threshold;
/// each shift contributes `ln((x+a+j)/(x+b+j))`, and the remaining difference
/// is taken from the Stirling series with the offset `a − b` kept exact.
pub fn ln_gamma_ratio(x: f64, a: f64, b: f64) -> Result<f64> {
    GammaRatioQuery { x, a, b }.validate()?;
    Ok(ln_gamma_ratio_unchecked(x, a, b))
}

pub(crate) fn ln_gamma_ratio_unchecked(x: f64, a: f64, b: f64) -> f64 {
    let d = a - b;
    if d == 0.0 {
        return 0.0;
    }
    let u = x + a;
    let v = x + b;
    let low = u.min(v);
    let shift = if low < STIRLING_MIN {
        (STIRLING_MIN - low).ceil() as usize
    } else {
        0
    };
    let mut acc = 0.0;
    for j in 0..shift {
        let vj = v + j as f64;
        let r = d / vj;
        acc -= if r.abs() < 0.5 {
            r.ln_1p()
        } else {
            ((u + j as f64) / vj).ln()
        };
    }
    acc + stirling_difference(v + shift as f64, d)
}

/// `Γ(x+a)/Γ(x+b)`, computed in log space.
pub fn gamma_ratio(q: GammaRatioQuery) -> Result<f64> {
    q.validate()?;
    Ok(ln_gamma_ratio_unchecked(q.x, q.a, q.b).exp())
}

/// Largest `n` for which [`wallis_ratio`] uses the running double-factorial
/// product.
pub const WALLIS_PRODUCT_MAX: u64 = 150;

/// Running product `∏_{k=1..n} (2k−1)/(2k)`.
pub fn wallis_ratio_product(n: u64) -> f64 {
    (1..=n).fold(1.0, |acc, k| {
        let k = k as f64;
        acc * (2.0 * k - 1.0) / (2.0 * k)
    })
}

/// Gamma form `Γ(n+1/2)/(√π Γ(n+1))`.
pub fn wallis_ratio_gamma(n: u64) -> f64 {
    ln_gamma_ratio_unchecked(n as f64, 0.5, 1.0).exp() / PI.sqrt()
}

/// The Wallis ratio `W_n = (2n−1)!!/(2n)!!`.
pub fn wallis_ratio(n: u64) -> f64 {
    if n <= WALLIS_PRODUCT_MAX {
        wallis_ratio_product(n)
    } else {
        wallis_ratio_gamma(n)
    }
}

/// A (lower, value, upper) sandwich together with accurately computed gaps.
///
/// `lower`, `value` and `upper` are the rounded `f64` values. For large
/// arguments they may coincide after rounding even though the inequality is
/// strict, so the verdict is taken from `lower_gap = value − lower` and
/// `upper_gap = upper − value`, which are evaluated without cancellation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundsTriple {
    pub lower: f64,
    pub value: f64,
    pub upper: f64,
    pub lower_gap: f64,
    pub upper_gap: f64,
}

impl BoundsTriple {
    /// Strict sandwich; a zero gap counts as a violation.
    pub fn satisfied(&self) -> bool {
        self.lower_gap > 0.0 && self.upper_gap > 0.0
    }

    pub fn width(&self) -> f64 {
        self.lower_gap + self.upper_gap
    }
}

/// Coefficients of `r(x)² − x − 1/4 = Σ c_k x^{-k}`, `r(x) = Γ(x+1)/Γ(x+1/2)`.
const SQUARE_RESIDUAL: [(f64, f64); 14] = [
    (1.0, 32.0),
    (-1.0, 128.0),
    (-5.0, 2048.0),
    (23.0, 8192.0),
    (53.0, 65536.0),
    (-593.0, 262144.0),
    (-5165.0, 8388608.0),
    (110123.0, 33554432.0),
    (231743.0, 268435456.0),
    (-8113223.0, 1073741824.0),
    (-33497425.0, 17179869184.0),
    (1744764499.0, 68719476736.0),
    (3563384029.0, 549755813888.0),
    (-258115578289.0, 2199023255552.0),
];

/// Coefficients of `r(x)⁴ − x² − x/2 − 1/8 = Σ d_k x^{-k-1}` (k from 1).
const QUARTIC_RESIDUAL: [(f64, f64); 14] = [
    (-1.0, 128.0),
    (1.0, 256.0),
    (3.0, 1024.0),
    (-1.0, 256.0),
    (-77.0, 32768.0),
    (399.0, 65536.0),
    (883.0, 262144.0),
    (-947.0, 65536.0),
    (-32229.0, 4194304.0),
    (413521.0, 8388608.0),
    (861439.0, 33554432.0),
    (-964047.0, 4194304.0),
    (-254015869.0, 2147483648.0),
    (6043611355.0, 4294967296.0),
];

fn inverse_power_series(coeffs: &[(f64, f64)], inv: f64) -> f64 {
    coeffs
        .iter()
        .rev()
        .fold(0.0, |acc, &(p, q)| acc * inv + p / q)
}

/// `Γ(x+1)/Γ(x+1/2)`.
pub(crate) fn half_step_ratio(x: f64) -> f64 {
    ln_gamma_ratio_unchecked(x, 1.0, 0.5).exp()
}

/// `r(x)² − (x + 1/4)` with `r(x) = Γ(x+1)/Γ(x+1/2)`, accurate in relative
/// terms for all `x > 0`.
pub fn square_ratio_residual(x: f64) -> f64 {
    if x >= RESIDUAL_SERIES_MIN {
        let inv = 1.0 / x;
        inverse_power_series(&SQUARE_RESIDUAL, inv) * inv
    } else {
        let r = half_step_ratio(x);
        r * r - x - 0.25
    }
}

/// `r(x)⁴ − (x² + x/2 + 1/8)` with `r(x) = Γ(x+1)/Γ(x+1/2)`.
pub fn quartic_ratio_residual(x: f64) -> f64 {
    if x >= RESIDUAL_SERIES_MIN {
        let inv = 1.0 / x;
        inverse_power_series(&QUARTIC_RESIDUAL, inv) * inv * inv
    } else {
        let r2 = half_step_ratio(x).powi(2);
        r2 * r2 - (x * x + 0.5 * x + 0.125)
    }
}

/// Kazarinoff's double inequality `√(n+1/4) < Γ(n+1)/Γ(n+1/2) < √(n+1/2)`.
pub fn kazarinoff_bounds(n: u64) -> Result<BoundsTriple> {
    if n == 0 {
        return Err(domain("kazarinoff_bounds", "n must be at least 1"));
    }
    let x = n as f64;
    let value = half_step_ratio(x);
    let lower = (x + 0.25).sqrt();
    let upper = (x + 0.5).sqrt();
    let sigma = square_ratio_residual(x);
    // value² − lower² = σ,  upper² − value² = 1/4 − σ
    Ok(BoundsTriple {
        lower,
        value,
        upper,
        lower_gap: sigma / (value + lower),
        upper_gap: (0.25 - sigma) / (upper + value),
    })
}

/// Smallest `x` accepted by [`quartic_root_bounds`]. The lower radicand
/// `x² + x/2 + 1/8 − 1/(128x)` changes sign near `x ≈ 0.0508`.
pub fn quartic_lower_radicand(x: f64) -> f64 {
    x * x + 0.5 * x + 0.125 - 1.0 / (128.0 * x)
}

/// The quartic-root sandwich
/// `(x²+x/2+1/8−1/(128x))^{1/4} < Γ(x+1)/Γ(x+1/2) < (x²+x/2+1/8)^{1/4}`.
///
/// Rejects `x` where the lower radicand is not positive.
pub fn quartic_root_bounds(x: f64) -> Result<BoundsTriple> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(domain("quartic_root_bounds", format!("x must be positive, got {x}")));
    }
    let lo4 = quartic_lower_radicand(x);
    if !(lo4 > 0.0) {
        return Err(domain(
            "quartic_root_bounds",
            format!("lower radicand {lo4:e} is not positive at x = {x}"),
        ));
    }
    let hi4 = x * x + 0.5 * x + 0.125;
    let value = half_step_ratio(x);
    let lower = lo4.sqrt().sqrt();
    let upper = hi4.sqrt().sqrt();
    let rho = quartic_ratio_residual(x);
    // a⁴ − b⁴ = (a − b)(a + b)(a² + b²)
    let lower_gap = (rho + 1.0 / (128.0 * x)) / ((value + lower) * (value * value + lower * lower));
    let upper_gap = -rho / ((upper + value) * (upper * upper + value * value));
    Ok(BoundsTriple {
        lower,
        value,
        upper,
        lower_gap,
        upper_gap,
    })
}

/// `Γ(x+s)/(x^s Γ(x)) − 1`, which tends to zero as `x → ∞` for fixed `s`.
pub fn wendel_deviation(x: f64, s: f64) -> Result<f64> {
    if !(x > 0.0) {
        return Err(domain("wendel_deviation", format!("x must be positive, got {x}")));
    }
    let lr = ln_gamma_ratio(x, s, 0.0)?;
    Ok((lr - s * x.ln()).exp_m1())
}

/// Relative residual of Legendre's duplication formula
/// `Γ(2l+1) = 2^{2l} Γ(l+1) Γ(l+1/2)/√π`, evaluated in log space.
///
/// For `l ≥ 20` every gamma is expanded in its Stirling series and the
/// logarithms are regrouped through `ln(2l+1) = ln 2 + ln(l+1/2)` before
/// summing, so the `O(l ln l)` parts cancel exactly instead of in rounding.
pub fn duplication_residual(l: u64) -> f64 {
    let lf = l as f64;
    let log_residual = if lf + 0.5 >= STIRLING_MIN {
        let main = 0.5 - (lf + 0.5) * (1.0 / (2.0 * lf + 1.0)).ln_1p();
        main + stirling_correction(2.0 * lf + 1.0) - stirling_correction(lf + 1.0) - stirling_correction(lf + 0.5)
    } else {
        ln_gamma_positive(2.0 * lf + 1.0)
            - (2.0 * lf * std::f64::consts::LN_2
                + ln_gamma_positive(lf + 1.0)
                + ln_gamma_positive(lf + 0.5)
                - 0.5 * PI.ln())
    };
    log_residual.exp_m1()
}
