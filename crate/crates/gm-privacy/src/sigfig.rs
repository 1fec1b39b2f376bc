//! Fixed-significant-digit numeric formatting for machine-readable output.
//!
//! All CSV and JSON emitters round to 12 significant digits and print the
//! shortest decimal form of the rounded value. Rounding first keeps goldens
//! stable: quantities like `1 - 0.8` format as `0.2` instead of leaking the
//! binary representation `0.19999999999999996`.

/// Number of significant digits used by every machine-readable emitter.
pub const MACHINE_DIGITS: usize = 12;

/// Formats `x` rounded to `digits` significant digits, trimming trailing
/// zeros. Values with decimal exponent outside `[-5, 15]` use scientific
/// notation (`1.5e-9`); everything else is plain decimal.
pub fn format_sig(x: f64, digits: usize) -> String {
    assert!((1..=17).contains(&digits), "digits must be in 1..=17");
    if x == 0.0 {
        return "0".to_string();
    }
    if x.is_nan() {
        return "NaN".to_string();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf" } else { "-inf" }.to_string();
    }

    // `{:.*e}` rounds the mantissa to the requested digit count.
    let sci = format!("{:.*e}", digits - 1, x);
    let (mantissa, exp) = sci
        .split_once('e')
        .expect("exponential format always contains 'e'");
    let exp: i32 = exp.parse().expect("exponent is an integer");

    let (sign, mantissa) = match mantissa.strip_prefix('-') {
        Some(rest) => ("-", rest),
        None => ("", mantissa),
    };
    // Digits without the decimal point, e.g. "2.00000000000" -> "200000000000".
    let raw: String = mantissa.chars().filter(|c| *c != '.').collect();
    let raw = raw.trim_end_matches('0');
    // Rounding can produce a bare "0" mantissa only for x == 0, handled above.
    let raw = if raw.is_empty() { "0" } else { raw };

    if !(-5..=15).contains(&exp) {
        return if raw.len() == 1 {
            format!("{sign}{raw}e{exp}")
        } else {
            format!("{sign}{}.{}e{exp}", &raw[..1], &raw[1..])
        };
    }

    let mut out = String::from(sign);
    if exp < 0 {
        out.push_str("0.");
        for _ in 0..(-exp - 1) {
            out.push('0');
        }
        out.push_str(raw);
    } else {
        let int_len = exp as usize + 1;
        if raw.len() <= int_len {
            out.push_str(raw);
            for _ in 0..(int_len - raw.len()) {
                out.push('0');
            }
        } else {
            out.push_str(&raw[..int_len]);
            out.push('.');
            out.push_str(&raw[int_len..]);
        }
    }
    out
}

/// `x` rounded to `digits` significant digits, as a float. Used to sanitize
/// values before JSON serialization so the machine formats agree.
pub fn round_sig(x: f64, digits: usize) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    format!("{:.*e}", digits - 1, x)
        .parse()
        .expect("rounded exponential form parses back")
}

/// Shorthand for the machine-output precision.
pub fn fmt12(x: f64) -> String {
    format_sig(x, MACHINE_DIGITS)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn masks_binary_representation_noise() {
        assert_eq!(format_sig(1.0 - 0.8, 12), "0.2");
        assert_eq!(format_sig(0.1 + 0.2, 12), "0.3");
    }

    #[test]
    fn trims_trailing_zeros() {
        assert_eq!(format_sig(1.0, 12), "1");
        assert_eq!(format_sig(15.0, 12), "15");
        assert_eq!(format_sig(0.125, 12), "0.125");
        assert_eq!(format_sig(-0.5, 12), "-0.5");
        assert_eq!(format_sig(120.0, 12), "120");
    }

    #[test]
    fn zero_and_signed_zero() {
        assert_eq!(format_sig(0.0, 12), "0");
        assert_eq!(format_sig(-0.0, 12), "0");
    }

    #[test]
    fn small_magnitudes() {
        assert_eq!(format_sig(0.00669285092428486, 12), "0.00669285092428");
        assert_eq!(format_sig(1e-7, 12), "1e-7");
        assert_eq!(format_sig(1.5e-9, 12), "1.5e-9");
    }

    #[test]
    fn large_magnitudes() {
        assert_eq!(format_sig(123456789012345.0, 12), "123456789012000");
        assert_eq!(format_sig(1e16, 12), "1e16");
    }

    #[test]
    fn rounds_at_the_digit_boundary() {
        assert_eq!(format_sig(0.1234567890127, 12), "0.123456789013");
        // Mantissa overflow 9.99... -> 1.0e+1 handled by the exponent.
        assert_eq!(format_sig(9.999999999996, 12), "10");
    }

    #[test]
    fn round_sig_agrees_with_format() {
        for &x in &[1.0 - 0.8, 0.3, -7.25, 1.2345678901234e-3, 1e20] {
            let rounded = round_sig(x, 12);
            assert_eq!(format_sig(rounded, 12), format_sig(x, 12));
        }
    }

    #[test]
    fn non_finite_values() {
        assert_eq!(format_sig(f64::NAN, 12), "NaN");
        assert_eq!(format_sig(f64::INFINITY, 12), "inf");
        assert_eq!(format_sig(f64::NEG_INFINITY, 12), "-inf");
    }
}
