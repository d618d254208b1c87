//! Row selectors: `7`, `1,10,1e6` or `start:stop:step` (stop inclusive).

use anyhow::{bail, Context, Result};

fn parse_number(s: &str) -> Result<f64> {
    let v: f64 = s.trim().parse().with_context(|| format!("'{s}' is not a number"))?;
    if !v.is_finite() {
        bail!("'{s}' is not finite");
    }
    Ok(v)
}

fn to_index(v: f64) -> Result<u64> {
    if v < 0.0 || v.fract() != 0.0 || v > 2f64.powi(53) {
        bail!("{v} is not a nonnegative integer");
    }
    Ok(v as u64)
}

/// Parses a selector into real values.
pub fn parse_reals(spec: &str) -> Result<Vec<f64>> {
    let spec = spec.trim();
    if spec.is_empty() {
        bail!("empty selector");
    }
    if spec.contains(':') {
        let parts: Vec<&str> = spec.split(':').collect();
        let [start, stop, step] = parts[..] else {
            bail!("range '{spec}' must look like start:stop:step");
        };
        let (start, stop, step) = (parse_number(start)?, parse_number(stop)?, parse_number(step)?);
        if !(step > 0.0) {
            bail!("range step must be positive, got {step}");
        }
        if stop < start {
            bail!("range stop {stop} is below start {start}");
        }
        let count = ((stop - start) / step * (1.0 + 1e-12)).floor() as u64;
        if count > 10_000_000 {
            bail!("range '{spec}' has more than 10^7 entries");
        }
        return Ok((0..=count).map(|i| start + i as f64 * step).collect());
    }
    spec.split(',').map(parse_number).collect()
}

/// Parses a selector into nonnegative integers.
pub fn parse_indices(spec: &str) -> Result<Vec<u64>> {
    parse_reals(spec)?
        .into_iter()
        .map(to_index)
        .collect::<Result<_>>()
        .with_context(|| format!("in selector '{spec}'"))
}

/// True when the selector names a single value rather than a list or range.
pub fn is_single(spec: &str) -> bool {
    !spec.contains(':') && !spec.contains(',')
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_list_and_range() {
        assert_eq!(parse_indices("7").unwrap(), vec![7]);
        assert_eq!(parse_indices("1, 10,1e6").unwrap(), vec![1, 10, 1_000_000]);
        assert_eq!(parse_indices("0:10:5").unwrap(), vec![0, 5, 10]);
        assert_eq!(parse_indices("1:10:4").unwrap(), vec![1, 5, 9]);
        assert_eq!(parse_reals("0.1:0.3:0.1").unwrap().len(), 3);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(parse_indices("1.5").is_err());
        assert!(parse_indices("-1").is_err());
        assert!(parse_indices("x").is_err());
        assert!(parse_indices("1:2").is_err());
        assert!(parse_indices("5:1:1").is_err());
        assert!(parse_indices("1:5:0").is_err());
        assert!(parse_reals("").is_err());
        assert!(parse_reals("inf").is_err());
    }
}
