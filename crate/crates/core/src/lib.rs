//! Gamma-function ratios, the Wallis product and its telescoping series,
//! closed-form radial integrals, and variational energy levels for hydrogen
//! and the 3D oscillator.
//!
//! ```
//! use wallis_core::gamma::kazarinoff_bounds;
//!
//! assert!(kazarinoff_bounds(1000).unwrap().satisfied());
//! ```

pub mod error;
pub mod gamma;
pub mod integrals;
pub mod minimize;
pub mod quadrature;
pub mod series;
pub mod sum;
pub mod variational;
pub mod verify;

pub use error::{Error, Result};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/gamma-ratios.md")]
    mod gamma_ratios {}
    #[doc = include_str!("../../../book/src/wallis-series.md")]
    mod wallis_series {}
    #[doc = include_str!("../../../book/src/integrals.md")]
    mod integrals {}
    #[doc = include_str!("../../../book/src/variational.md")]
    mod variational {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
