//! Golden-section search for smooth unimodal functions of a positive
//! parameter, carried out in `ln p`.

use crate::error::{domain, Result};

/// `(√5 − 1)/2`.
const INV_PHI: f64 = 0.618_033_988_749_894_8;

/// Location and value of a minimum.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Minimum {
    pub argmin: f64,
    pub value: f64,
    pub evaluations: usize,
}

/// Minimises `f` over `[lo, hi]` (both positive) by golden-section search on
/// `ln p`, stopping once the bracket is narrower than `log_width` in `ln p`.
pub fn golden_section_log<F>(mut f: F, lo: f64, hi: f64, log_width: f64) -> Result<Minimum>
where
    F: FnMut(f64) -> Result<f64>,
{
    if !(lo > 0.0 && hi > lo && hi.is_finite()) {
        return Err(domain(
            "golden_section_log",
            format!("need 0 < lo < hi, got [{lo}, {hi}]"),
        ));
    }
    if !(log_width > 0.0) {
        return Err(domain("golden_section_log", format!("width must be positive, got {log_width}")));
    }
    let (mut a, mut b) = (lo.ln(), hi.ln());
    let mut c = b - INV_PHI * (b - a);
    let mut d = a + INV_PHI * (b - a);
    let mut fc = f(c.exp())?;
    let mut fd = f(d.exp())?;
    let mut evaluations = 2;
    while b - a > log_width {
        if fc <= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - INV_PHI * (b - a);
            fc = f(c.exp())?;
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + INV_PHI * (b - a);
            fd = f(d.exp())?;
        }
        evaluations += 1;
    }
    let (x, value) = if fc <= fd { (c, fc) } else { (d, fd) };
    Ok(Minimum {
        argmin: x.exp(),
        value,
        evaluations,
    })
}
