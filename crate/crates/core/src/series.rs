//! Wallis partial products, the sequences `a_n` and `b_n`, and their
//! partial sums.
//!
//! With `a_n = [Γ(n)/Γ(n+1/2)]² / (n+1/2)` the partial sums telescope:
//! `4n²a_n = 4(n−1)²a_{n−1} + a_n`, so `s_n = 4n²a_n − 3a_1` and, since
//! `n²a_n → 1`, `Σ a_n = 4 − 8/π`. The two-parameter family
//! `b_n = Γ(n+m)Γ(n+k) / (Γ(n+m+1/2)Γ(n+k+3/2))` telescopes the same way.
//!
//! Every closed partial-sum formula here has a companion that adds the terms
//! one by one ([`sum_a_direct`], [`sum_b_direct`]) so the two can be compared.

use std::f64::consts::PI;

use crate::error::{domain, Result};
use crate::gamma::{ln_gamma_ratio_unchecked, square_ratio_residual};
use crate::sum::NeumaierSum;

/// Relative rounding allowance folded into the reported tail bounds, which
/// are otherwise exact remainders.
const TAIL_ROUNDING: f64 = 16.0 * f64::EPSILON;

/// A finite partial sum with its limit (when one is known in closed form)
/// and a bound on the distance between the two.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PartialSum {
    pub n_terms: u64,
    pub value: f64,
    pub closed_form_limit: Option<f64>,
    pub tail_bound: f64,
}

impl PartialSum {
    /// `closed_form_limit − value`, when a limit is known.
    pub fn remainder(&self) -> Option<f64> {
        self.closed_form_limit.map(|l| l - self.value)
    }

    /// Checks `|limit − value| ≤ tail_bound`.
    pub fn within_tail_bound(&self) -> bool {
        match self.remainder() {
            Some(r) => r.abs() <= self.tail_bound,
            None => true,
        }
    }
}

fn require_positive(what: &'static str, n: u64) -> Result<f64> {
    if n == 0 {
        Err(domain(what, "n must be at least 1"))
    } else {
        Ok(n as f64)
    }
}

/// `P_n = ∏_{j=1..n} (2j)²/((2j−1)(2j+1))`, which increases to `π/2`.
///
/// Each factor is `1 + 1/(4j²−1)`; the logarithms are accumulated with
/// compensated summation, so the product keeps full precision for `n`
/// in the millions.
pub fn wallis_partial_product(n: u64) -> f64 {
    let log: NeumaierSum = (1..=n)
        .map(|j| {
            let j = j as f64;
            (1.0 / (4.0 * j * j - 1.0)).ln_1p()
        })
        .collect();
    log.value().exp()
}

/// `a_n = [Γ(n)/Γ(n+1/2)]² / (n+1/2)`.
pub fn a_seq(n: u64) -> Result<f64> {
    let x = require_positive("a_seq", n)?;
    Ok((2.0 * ln_gamma_ratio_unchecked(x, 0.0, 0.5)).exp() / (x + 0.5))
}

/// `1 − n²a_n`, evaluated without cancellation.
pub fn scaled_a_deficit(n: u64) -> Result<f64> {
    let x = require_positive("scaled_a", n)?;
    // n²a_n = r²/(n+1/2) with r² = n + 1/4 + σ(n)
    Ok((0.25 - square_ratio_residual(x)) / (x + 0.5))
}

/// `n²a_n = [Γ(n+1)/Γ(n+1/2)]² / (n+1/2)`; increases to 1.
pub fn scaled_a(n: u64) -> Result<f64> {
    Ok(1.0 - scaled_a_deficit(n)?)
}

/// Partial sum `s_n` from the telescoped formula `4n²a_n − c·a_1`, with the
/// coefficient exposed so the verification suite can perturb it.
pub(crate) fn sum_a_recurrence_with(n: u64, a1_coefficient: f64) -> Result<PartialSum> {
    let deficit = scaled_a_deficit(n)?;
    let a1 = a_seq(1)?;
    let value = 4.0 * (1.0 - deficit) - a1_coefficient * a1;
    let limit = 4.0 - 8.0 / PI;
    Ok(PartialSum {
        n_terms: n,
        value,
        closed_form_limit: Some(limit),
        // Exact remainder: 4 − 4n²a_n.
        tail_bound: 4.0 * deficit + TAIL_ROUNDING * limit,
    })
}

/// `s_n = Σ_{i≤n} a_i = 4n²a_n − 3a_1`, with limit `4 − 8/π`.
pub fn sum_a_recurrence(n: u64) -> Result<PartialSum> {
    sum_a_recurrence_with(n, 3.0)
}

/// `Σ_{i≤n} a_i` added term by term.
pub fn sum_a_direct(n: u64) -> Result<f64> {
    require_positive("sum_a_direct", n)?;
    let mut acc = NeumaierSum::new();
    for i in 1..=n {
        acc += a_seq(i)?;
    }
    Ok(acc.value())
}

/// Parameters `(m, k)` of the generalised sequence `b_n`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GeneralizedParams {
    m: f64,
    k: f64,
}

impl GeneralizedParams {
    /// Requires `m > −1`, `k > −1` and `2(k−m)+1 ≠ 0`.
    pub fn new(m: f64, k: f64) -> Result<Self> {
        if !(m > -1.0) || !m.is_finite() {
            return Err(domain("GeneralizedParams", format!("m must exceed -1, got {m}")));
        }
        if !(k > -1.0) || !k.is_finite() {
            return Err(domain("GeneralizedParams", format!("k must exceed -1, got {k}")));
        }
        if 2.0 * (k - m) + 1.0 == 0.0 {
            return Err(domain(
                "GeneralizedParams",
                format!("2(k-m)+1 must be nonzero (k - m = -1/2 for m={m}, k={k})"),
            ));
        }
        Ok(Self { m, k })
    }

    pub fn m(&self) -> f64 {
        self.m
    }

    pub fn k(&self) -> f64 {
        self.k
    }

    /// `2(k−m)+1`.
    pub fn prefactor_denominator(&self) -> f64 {
        2.0 * (self.k - self.m) + 1.0
    }
}

/// `b_n = Γ(n+m)Γ(n+k) / (Γ(n+m+1/2)Γ(n+k+3/2))`.
pub fn b_seq(p: GeneralizedParams, n: u64) -> Result<f64> {
    let x = require_positive("b_seq", n)?;
    let ln = ln_gamma_ratio_unchecked(x, p.m, p.m + 0.5) + ln_gamma_ratio_unchecked(x, p.k, p.k + 1.5);
    Ok(ln.exp())
}

/// Exact partial sum `Σ_{i≤n} b_i` from the telescoped formula
/// `4(n+m)(n+k)/c · b_n − [4(m+1)(k+1)/c − 1]·b_1`, `c = 2(k−m)+1`.
pub fn sum_b_partial(p: GeneralizedParams, n: u64) -> Result<PartialSum> {
    let x = require_positive("sum_b_partial", n)?;
    let c = p.prefactor_denominator();
    let bn = b_seq(p, n)?;
    let b1 = b_seq(p, 1)?;
    let head = 4.0 * (x + p.m) * (x + p.k) / c * bn;
    let value = head - (4.0 * (p.m + 1.0) * (p.k + 1.0) / c - 1.0) * b1;
    let limit = sum_b_closed(p);
    // limit − value = (4/c)(1 − (n+m)(n+k)b_n)
    let remainder = 4.0 / c * (1.0 - (x + p.m) * (x + p.k) * bn);
    Ok(PartialSum {
        n_terms: n,
        value,
        closed_form_limit: Some(limit),
        tail_bound: remainder.abs() + TAIL_ROUNDING * (limit.abs() + head.abs()),
    })
}

/// `Σ_{i≤n} b_i` added term by term.
pub fn sum_b_direct(p: GeneralizedParams, n: u64) -> Result<f64> {
    require_positive("sum_b_direct", n)?;
    let mut acc = NeumaierSum::new();
    for i in 1..=n {
        acc += b_seq(p, i)?;
    }
    Ok(acc.value())
}

/// `Σ_{n≥1} b_n = 4/(2(k−m)+1) · [1 − Γ(m+1)Γ(k+1)/(Γ(m+1/2)Γ(k+3/2))]`.
///
/// Evaluated as `4/c · [1 − (m+1/2)(k+3/2) b_1]`, which is the same
/// expression after `Γ(x+1) = xΓ(x)` and keeps every gamma argument positive
/// on the whole parameter domain (including `−1 < m ≤ −1/2`).
pub fn sum_b_closed(p: GeneralizedParams) -> f64 {
    let c = p.prefactor_denominator();
    let b1 = (ln_gamma_ratio_unchecked(1.0, p.m, p.m + 0.5) + ln_gamma_ratio_unchecked(1.0, p.k, p.k + 1.5)).exp();
    4.0 / c * (1.0 - (p.m + 0.5) * (p.k + 1.5) * b1)
}
