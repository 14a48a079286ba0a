//! Fixed-precision number formatting shared by the CSV and JSON writers.

/// Significant digits of every floating-point output.
pub const SIGNIFICANT_DIGITS: usize = 12;

/// `x` with twelve significant digits, trailing zeros trimmed.
///
/// Fixed notation is used for decimal exponents in `[-5, 12)`, scientific
/// notation otherwise.
pub fn sig(x: f64) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return format!("{x}");
    }
    let sci = format!("{:.*e}", SIGNIFICANT_DIGITS - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent");
    let exp: i32 = exp.parse().expect("integer exponent");
    if (-5..SIGNIFICANT_DIGITS as i32).contains(&exp) {
        let decimals = (SIGNIFICANT_DIGITS as i32 - 1 - exp).max(0) as usize;
        trim(format!("{x:.decimals$}"))
    } else {
        format!("{}e{exp}", trim(mantissa.to_string()))
    }
}

fn trim(mut s: String) -> String {
    if s.contains('.') {
        while s.ends_with('0') {
            s.pop();
        }
        if s.ends_with('.') {
            s.pop();
        }
    }
    s
}

/// `x` rounded to twelve significant digits, for JSON emission.
pub fn round(x: f64) -> f64 {
    let v: f64 = sig(x).parse().unwrap_or(x);
    if v == 0.0 {
        0.0
    } else {
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formats() {
        assert_eq!(sig(0.5), "0.5");
        assert_eq!(sig(1.0), "1");
        assert_eq!(sig(-0.0), "0");
        assert_eq!(sig(std::f64::consts::PI / 3.0), "1.0471975512");
        assert_eq!(sig(0.830951315989), "0.830951315989");
        assert_eq!(sig(13922.4), "13922.4");
        assert_eq!(sig(1.5e-9), "1.5e-9");
        assert_eq!(sig(-2.5e-7), "-2.5e-7");
        assert_eq!(sig(123456789012345.0), "1.23456789012e14");
        assert_eq!(sig(0.00012345678901234), "0.000123456789012");
    }

    #[test]
    fn rounding_is_idempotent() {
        for x in [0.1 + 0.2, 2.0 / 3.0, 1e-30, -7.25, 0.27323906] {
            assert_eq!(round(round(x)), round(x));
            assert_eq!(sig(round(x)), sig(x));
        }
    }
}
