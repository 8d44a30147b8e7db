//! Number formatting shared by text and JSON output.

use ihara_core::QuadExt;

/// `x` rounded to `sig` significant digits, positional notation, trailing
/// zeros removed.
pub fn sig_f64(x: f64, sig: usize) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let magnitude = x.abs().log10().floor() as i64;
    let places = (sig as i64 - 1 - magnitude).max(0) as usize;
    trim_zeros(format!("{x:.places$}"))
}

/// Exact value rounded to `sig` significant digits.
pub fn sig_exact(x: &QuadExt, sig: usize) -> String {
    let approx = x.to_f64();
    if approx == 0.0 {
        return trim_zeros(x.to_decimal(sig));
    }
    let magnitude = approx.abs().log10().floor() as i64;
    let places = (sig as i64 - 1 - magnitude).max(0) as usize;
    trim_zeros(x.to_decimal(places))
}

fn trim_zeros(s: String) -> String {
    if !s.contains('.') {
        return s;
    }
    let t = s.trim_end_matches('0').trim_end_matches('.');
    if t == "-0" {
        "0".into()
    } else {
        t.into()
    }
}

/// Parses `0.0625`, `1e-3`, or power literals such as `2^-4`.
pub fn parse_epsilon(s: &str) -> Result<f64, String> {
    let s = s.trim();
    let value = match s.split_once('^') {
        Some((base, exp)) => {
            let base: f64 = base
                .trim()
                .parse()
                .map_err(|_| format!("bad base in '{s}'"))?;
            let exp: f64 = exp
                .trim()
                .parse()
                .map_err(|_| format!("bad exponent in '{s}'"))?;
            base.powf(exp)
        }
        None => s.parse().map_err(|_| format!("'{s}' is not a number"))?,
    };
    if value.is_finite() && value > 0.0 {
        Ok(value)
    } else {
        Err(format!("epsilon must be positive, got '{s}'"))
    }
}

/// Inclusive index range: `4`, `2..6` or `2..=6`.
pub fn parse_k_range(s: &str) -> Result<(u64, u64), String> {
    let parse = |t: &str| {
        t.trim()
            .parse::<u64>()
            .map_err(|_| format!("'{t}' is not a positive integer"))
    };
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (parse(a)?, parse(b.trim_start_matches('='))?),
        None => {
            let k = parse(s)?;
            (k, k)
        }
    };
    if lo == 0 || hi < lo {
        return Err(format!("invalid range '{s}'"));
    }
    Ok((lo, hi))
}

#[cfg(test)]
mod tests {
    use super::*;
    use ihara_core::numeric::ratio;

    #[test]
    fn significant_digits() {
        assert_eq!(sig_f64(2.1213203435596424, 10), "2.121320344");
        assert_eq!(sig_f64(2.000001238, 10), "2.000001238");
        assert_eq!(sig_f64(2.0, 10), "2");
        assert_eq!(sig_f64(-1234.5678, 6), "-1234.57");
        assert_eq!(sig_exact(&QuadExt::rational(ratio(-9, 4), 2), 10), "-2.25");
        assert_eq!(sig_exact(&QuadExt::rational(ratio(31, 2), 2), 10), "15.5");
        assert_eq!(sig_exact(&QuadExt::from_ints(0, 1, 2), 10), "1.414213562");
    }

    #[test]
    fn epsilons() {
        assert_eq!(parse_epsilon("0.0625").unwrap(), 0.0625);
        assert_eq!(parse_epsilon("2^-4").unwrap(), 0.0625);
        assert_eq!(parse_epsilon("2^-10").unwrap(), 2f64.powi(-10));
        assert!(parse_epsilon("0").is_err());
        assert!(parse_epsilon("-0.5").is_err());
        assert!(parse_epsilon("abc").is_err());
    }

    #[test]
    fn ranges() {
        assert_eq!(parse_k_range("4").unwrap(), (4, 4));
        assert_eq!(parse_k_range("2..6").unwrap(), (2, 6));
        assert_eq!(parse_k_range("2..=6").unwrap(), (2, 6));
        assert!(parse_k_range("0").is_err());
        assert!(parse_k_range("6..2").is_err());
    }
}
