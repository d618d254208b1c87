use std::f64::consts::PI;

use anyhow::{bail, Result};
use clap::ValueEnum;
use wallis_core::gamma::{kazarinoff_bounds, quartic_root_bounds, wendel_deviation, BoundsTriple};
use wallis_core::integrals::{check_integral, IntegralFamily};
use wallis_core::series::{sum_a_direct, sum_a_recurrence, sum_b_direct, sum_b_partial, wallis_partial_product, GeneralizedParams};
use wallis_core::variational::{
    lorentz_coulomb_energy_sum_bounds, min_l, variational_energy, Method, Potential, TrialFamily,
};
use wallis_core::verify::{run_all, Profile, VerifyConfig};

use crate::report::{Cell, ReportRow, Table};
use crate::selector::{is_single, parse_indices, parse_reals};

/// A rendered table and whether every row met its check.
pub struct Outcome {
    pub table: Table,
    pub ok: bool,
    pub failures: Vec<String>,
}

impl Outcome {
    fn from_report(rows: Vec<ReportRow>, failures: Vec<String>) -> Self {
        Self {
            table: Table::from_report(&rows),
            ok: failures.is_empty(),
            failures,
        }
    }
}

pub fn pi(n: &str) -> Result<Outcome> {
    let mut rows = Vec::new();
    let mut failures = Vec::new();
    for n in parse_indices(n)? {
        if n == 0 {
            bail!("n must be at least 1");
        }
        let row = ReportRow::new("wallis_pi", n, 2.0 * wallis_partial_product(n), PI).bound(PI / (4.0 * n as f64 + 2.0));
        if !row.within_bound() {
            failures.push(format!("n={n}: error {:e} outside envelope", row.abs_error()));
        }
        rows.push(row);
    }
    Ok(Outcome::from_report(rows, failures))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SumMode {
    /// Σ a_n with limit 4 − 8/π.
    Simple,
    /// Σ b_n for parameters m and k.
    General,
}

pub fn sum(mode: SumMode, m: f64, k: f64, n: &str, tol: Option<f64>) -> Result<Outcome> {
    let tol = tol.unwrap_or(1e-10);
    let params = match mode {
        SumMode::Simple => None,
        SumMode::General => Some(GeneralizedParams::new(m, k)?),
    };
    let mut rows = Vec::new();
    let mut failures = Vec::new();
    for n in parse_indices(n)? {
        let (label, partial, direct) = match params {
            None => ("sum_a", sum_a_recurrence(n)?, sum_a_direct(n)?),
            Some(p) => ("sum_b", sum_b_partial(p, n)?, sum_b_direct(p, n)?),
        };
        let row = ReportRow::new(label, n, partial.value, direct)
            .bound(tol * direct.abs())
            .with("limit", partial.closed_form_limit)
            .with("remainder", partial.remainder())
            .with("tail_bound", partial.tail_bound)
            .with("within_tail_bound", partial.within_tail_bound());
        if !row.within_bound() && row.abs_error() != 0.0 {
            failures.push(format!("n={n}: recurrence and direct sums differ by {:e}", row.abs_error()));
        }
        if !partial.within_tail_bound() {
            failures.push(format!("n={n}: limit outside the tail bound"));
        }
        rows.push(row);
    }
    Ok(Outcome::from_report(rows, failures))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Gaussian,
    Lorentz,
}

impl From<FamilyArg> for TrialFamily {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::Gaussian => TrialFamily::Gaussian,
            FamilyArg::Lorentz => TrialFamily::Lorentz,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PotentialArg {
    Coulomb,
    Oscillator,
}

impl From<PotentialArg> for Potential {
    fn from(p: PotentialArg) -> Self {
        match p {
            PotentialArg::Coulomb => Potential::Coulomb,
            PotentialArg::Oscillator => Potential::HarmonicOscillator,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Closed,
    Numeric,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Closed => Method::ClosedForm,
            MethodArg::Numeric => Method::Numeric,
        }
    }
}

pub fn variational(
    family: TrialFamily,
    pot: Potential,
    l_max: &str,
    l_min: Option<u64>,
    method: Method,
) -> Result<Outcome> {
    let lowest = min_l(family, pot);
    let ls: Vec<u64> = if is_single(l_max) {
        let top = parse_indices(l_max)?[0];
        (l_min.unwrap_or(lowest)..=top).collect()
    } else {
        parse_indices(l_max)?
    };
    if let Some(&bad) = ls.iter().find(|&&l| l < lowest) {
        bail!(
            "the {} trial in the {} potential needs l >= {lowest} (<r^2> diverges at l = {bad}); use --l-min {lowest}",
            family.label(),
            pot.label()
        );
    }
    if ls.is_empty() {
        bail!("no l values selected");
    }
    let label = format!("{}_{}_{}", family.label(), pot.label(), method.label());
    let mut rows = Vec::new();
    let mut failures = Vec::new();
    for l in ls {
        let e = variational_energy(family, pot, l, method)?;
        let mut row = ReportRow::new(label.clone(), l, e.value, e.exact_reference)
            .with("ratio", e.ratio_to_exact)
            .with("one_minus_ratio", 1.0 - e.ratio_to_exact)
            .with("optimal_param", e.optimal_param);
        if family == TrialFamily::Gaussian && pot == Potential::Coulomb {
            // 1 − ratio < 1/(4n+2) with n = l+1
            row = row.bound(e.exact_reference.abs() / (4.0 * (l as f64 + 1.0) + 2.0));
        }
        if !row.within_bound() {
            failures.push(format!("l={l}: error {:e} outside envelope", row.abs_error()));
        }
        rows.push(row);
    }
    Ok(Outcome::from_report(rows, failures))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BoundKind {
    /// √(n+1/4) < Γ(n+1)/Γ(n+1/2) < √(n+1/2)
    Kazarinoff,
    /// Quartic-root sandwich for Γ(x+1)/Γ(x+1/2).
    Quartic,
    /// Γ(x+s)/(x^s Γ(x)) − 1 within ±tol.
    Wendel,
    /// Brackets Σ_{l≤L} of the Lorentz–Coulomb energies.
    LorentzSum,
}

impl BoundKind {
    fn label(self) -> &'static str {
        match self {
            Self::Kazarinoff => "kazarinoff",
            Self::Quartic => "quartic",
            Self::Wendel => "wendel",
            Self::LorentzSum => "lorentz_sum",
        }
    }

    pub fn default_grid(self) -> &'static str {
        match self {
            Self::Kazarinoff => "1,2,5,10,100,1000,1e4,1e5,1e6",
            Self::Quartic => "0.06,0.2,0.5,1,2,10,100,1e3,1e4,1e5",
            Self::Wendel => "1e6,1e7,1e8,1e9",
            Self::LorentzSum => "1,2,5,10,100,1000",
        }
    }
}

pub fn bounds(kind: BoundKind, grid: &str, s: f64, tol: Option<f64>) -> Result<Outcome> {
    let tol = tol.unwrap_or(1e-6);
    let xs = match kind {
        BoundKind::Kazarinoff | BoundKind::LorentzSum => parse_indices(grid)?.into_iter().map(|n| n as f64).collect(),
        BoundKind::Quartic | BoundKind::Wendel => parse_reals(grid)?,
    };
    let mut table = Table::new(vec![
        "kind",
        "x",
        "s",
        "lower",
        "value",
        "upper",
        "lower_gap",
        "upper_gap",
        "satisfied",
        "error",
    ]);
    let mut failures = Vec::new();
    for x in xs {
        let triple = match kind {
            BoundKind::Kazarinoff => kazarinoff_bounds(x as u64),
            BoundKind::Quartic => quartic_root_bounds(x),
            BoundKind::Wendel => wendel_deviation(x, s).map(|d| BoundsTriple {
                lower: -tol,
                value: d,
                upper: tol,
                lower_gap: d + tol,
                upper_gap: tol - d,
            }),
            BoundKind::LorentzSum => lorentz_coulomb_energy_sum_bounds(x as u64),
        };
        let s_cell = if kind == BoundKind::Wendel { Cell::Real(s) } else { Cell::Empty };
        let mut row = vec![Cell::from(kind.label()), Cell::Real(x), s_cell];
        match triple {
            Ok(b) => {
                if !b.satisfied() {
                    failures.push(format!("{} x={x}: sandwich violated", kind.label()));
                }
                row.extend([b.lower, b.value, b.upper, b.lower_gap, b.upper_gap].map(Cell::Real));
                row.push(Cell::Flag(b.satisfied()));
                row.push(Cell::Empty);
            }
            Err(e) => {
                failures.push(format!("{} x={x}: {e}", kind.label()));
                row.extend([Cell::Empty, Cell::Empty, Cell::Empty, Cell::Empty, Cell::Empty]);
                row.push(Cell::Flag(false));
                row.push(Cell::Text(e.to_string()));
            }
        }
        table.push(row);
    }
    Ok(Outcome {
        table,
        ok: failures.is_empty(),
        failures,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum IntegralArg {
    All,
    /// ∫ x^m e^{−x²} dx
    GaussianMoment,
    /// ∫ dx/(1+x²)^{l+1}
    RationalG,
    /// ∫ x^{2l+2}/(1+x²)^{2l+2} dx
    LorentzNorm,
    /// ∫ x^{2l+1}/(1+x²)^{2l+2} dx
    LorentzCoulomb,
}

pub fn integrals(which: IntegralArg, l: &str, tol: Option<f64>) -> Result<Outcome> {
    let tol = tol.unwrap_or(1e-9);
    let families: Vec<IntegralFamily> = match which {
        IntegralArg::All => vec![
            IntegralFamily::GaussianMoment,
            IntegralFamily::RationalG,
            IntegralFamily::LorentzNorm,
            IntegralFamily::LorentzCoulomb,
        ],
        IntegralArg::GaussianMoment => vec![IntegralFamily::GaussianMoment],
        IntegralArg::RationalG => vec![IntegralFamily::RationalG],
        IntegralArg::LorentzNorm => vec![IntegralFamily::LorentzNorm],
        IntegralArg::LorentzCoulomb => vec![IntegralFamily::LorentzCoulomb],
    };
    let indices = parse_indices(l)?;
    let mut rows = Vec::new();
    let mut failures = Vec::new();
    for family in families {
        for &index in &indices {
            let c = check_integral(family, index, (tol * 1e-3).max(1e-14))?;
            let bound = (tol * c.closed_form.abs()).max(10.0 * c.quadrature.abs_error_estimate);
            let row = ReportRow::new(family.label(), index, c.quadrature.value, c.closed_form)
                .bound(bound)
                .with("rel_error", c.rel_error())
                .with("quad_error_estimate", c.quadrature.abs_error_estimate)
                .with("evaluations", c.quadrature.evaluations as u64);
            if !row.within_bound() && row.abs_error() != 0.0 {
                failures.push(format!("{} index {index}: quadrature misses closed form", family.label()));
            }
            rows.push(row);
        }
    }
    Ok(Outcome::from_report(rows, failures))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ProfileArg {
    Strict,
    Relaxed,
}

pub fn verify(profile: ProfileArg, a1_coefficient: f64) -> Outcome {
    let config = VerifyConfig {
        profile: match profile {
            ProfileArg::Strict => Profile::Strict,
            ProfileArg::Relaxed => Profile::Relaxed,
        },
        a1_coefficient,
    };
    let mut table = Table::new(vec!["check", "status", "detail"]);
    let mut failures = Vec::new();
    for o in run_all(&config) {
        if !o.passed {
            failures.push(o.name.to_owned());
        }
        table.push(vec![
            Cell::from(o.name),
            Cell::from(if o.passed { "PASS" } else { "FAIL" }),
            Cell::Text(o.detail),
        ]);
    }
    Outcome {
        table,
        ok: failures.is_empty(),
        failures,
    }
}
