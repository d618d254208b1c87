//! Numerical integration over `[0, ∞)`.
//!
//! The half line is mapped onto `[0, 1)` by `x = s·t/(1−t)` and the unit
//! interval is handled with tanh-sinh nodes. Written in the node variable `u`
//! the composition is `x(u) = s·exp(π sinh u)` with weight `π cosh u · x(u)`,
//! which is evaluated directly so neither endpoint loses precision. Each level
//! halves the step and reuses every earlier node; the error estimate is the
//! difference between the last two levels.

use std::f64::consts::PI;

use crate::error::{Error, Result};

/// Outcome of a quadrature run.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureResult {
    pub value: f64,
    pub abs_error_estimate: f64,
    pub evaluations: usize,
}

/// Half-width of the node range in `u`; `x` spans `s·[e^{-85.7}, e^{85.7}]`.
const U_MAX: f64 = 4.0;

/// Integrand values that are not finite are taken as zero when `x/s` lies
/// outside `[1/TAIL_SPAN, TAIL_SPAN]` (an overflowing tail), and are an error
/// anywhere else.
const TAIL_SPAN: f64 = 1e20;

/// Configurable integrator on `[0, ∞)`.
#[derive(Debug, Clone, Copy)]
pub struct SemiInfinite {
    /// Absolute tolerance on the difference between successive levels.
    pub abs_tol: f64,
    /// Relative tolerance; convergence needs `diff ≤ max(abs_tol, rel_tol·|I|)`.
    pub rel_tol: f64,
    /// Length scale `s` of the map; put it near the bulk of the integrand.
    pub scale: f64,
    /// Step at level `L` is `2^{-L}`.
    pub max_level: u32,
}

impl Default for SemiInfinite {
    fn default() -> Self {
        Self {
            abs_tol: 1e-12,
            rel_tol: 0.0,
            scale: 1.0,
            max_level: 12,
        }
    }
}

impl SemiInfinite {
    pub fn with_abs_tol(mut self, tol: f64) -> Self {
        self.abs_tol = tol;
        self
    }

    pub fn with_rel_tol(mut self, tol: f64) -> Self {
        self.rel_tol = tol;
        self
    }

    pub fn with_scale(mut self, scale: f64) -> Self {
        self.scale = scale;
        self
    }

    fn term<F: Fn(f64) -> f64>(&self, f: &F, u: f64) -> Result<f64> {
        let ratio = (PI * u.sinh()).exp();
        let x = self.scale * ratio;
        let w = PI * u.cosh() * x;
        let fx = f(x);
        let t = w * fx;
        if t.is_finite() {
            Ok(t)
        } else if !(1.0 / TAIL_SPAN..=TAIL_SPAN).contains(&ratio) {
            Ok(0.0)
        } else {
            Err(Error::Domain {
                what: "quad_semiinfinite",
                reason: format!("integrand is not finite at x = {x:e} (f = {fx})"),
            })
        }
    }

    /// Integrates `f` over `[0, ∞)`.
    pub fn integrate<F: Fn(f64) -> f64>(&self, f: F) -> Result<QuadratureResult> {
        if !(self.scale > 0.0) || !self.scale.is_finite() {
            return Err(Error::Domain {
                what: "quad_semiinfinite",
                reason: format!("scale must be positive, got {}", self.scale),
            });
        }
        // Level 0: unit step.
        let mut evaluations = 0usize;
        let mut sum = self.term(&f, 0.0)?;
        evaluations += 1;
        let mut k = 1.0;
        while k <= U_MAX {
            sum += self.term(&f, k)? + self.term(&f, -k)?;
            evaluations += 2;
            k += 1.0;
        }
        let mut h = 1.0;
        let mut estimate = h * sum;
        let mut diff = f64::INFINITY;

        for level in 1..=self.max_level {
            h *= 0.5;
            // New nodes are the odd multiples of h.
            let mut fresh = 0.0;
            let mut u = h;
            while u <= U_MAX {
                fresh += self.term(&f, u)? + self.term(&f, -u)?;
                evaluations += 2;
                u += 2.0 * h;
            }
            sum += fresh;
            let next = h * sum;
            diff = (next - estimate).abs();
            estimate = next;
            if level >= 3 && diff <= self.abs_tol.max(self.rel_tol * estimate.abs()) {
                return Ok(QuadratureResult {
                    value: estimate,
                    abs_error_estimate: diff,
                    evaluations,
                });
            }
        }
        Err(Error::Convergence {
            what: "quad_semiinfinite",
            best: estimate,
            error_estimate: diff,
        })
    }
}

/// Integrates `f` over `[0, ∞)` to absolute tolerance `tol`.
pub fn quad_semiinfinite<F: Fn(f64) -> f64>(f: F, tol: f64) -> Result<QuadratureResult> {
    if !(tol > 0.0) {
        return Err(Error::Domain {
            what: "quad_semiinfinite",
            reason: format!("tolerance must be positive, got {tol}"),
        });
    }
    SemiInfinite::default().with_abs_tol(tol).integrate(f)
}
