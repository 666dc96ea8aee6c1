//! Exact rational values.
//!
//! All simplex points, gaps and epsilon thresholds are `ExactRatio`s; no
//! floating point participates in any comparison. Decimal rendering exists
//! only for display and is produced by integer long division.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational, kept in lowest terms with positive
/// denominator (the backing type canonicalizes on construction).
pub type ExactRatio = BigRational;

/// Parses `"p/q"` or a plain integer `"k"` into an exact rational.
pub fn parse_ratio(s: &str) -> Result<ExactRatio> {
    let s = s.trim();
    let mk_err = || Error::Usage(format!("malformed rational {s:?}; expected \"p/q\" or \"k\""));
    match s.split_once('/') {
        Some((p, q)) => {
            let num: BigInt = p.trim().parse().map_err(|_| mk_err())?;
            let den: BigInt = q.trim().parse().map_err(|_| mk_err())?;
            if den.is_zero() {
                return Err(Error::Usage(format!("zero denominator in rational {s:?}")));
            }
            Ok(BigRational::new(num, den))
        }
        None => {
            let num: BigInt = s.parse().map_err(|_| mk_err())?;
            Ok(BigRational::from_integer(num))
        }
    }
}

/// Renders an exact rational as `"p/q"`, or `"p"` when integral.
pub fn ratio_to_string(r: &ExactRatio) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Renders a rational as a decimal string with `sig` significant digits,
/// computed purely with integer arithmetic (round half away from zero).
/// Intended for human-readable columns; the exact rational stays
/// authoritative.
pub fn ratio_to_decimal(r: &ExactRatio, sig: usize) -> String {
    assert!(sig >= 1);
    if r.is_zero() {
        return "0".to_string();
    }
    let neg = r.is_negative();
    let num = r.numer().abs();
    let den = r.denom().clone();

    // Position of the leading digit: shift until num*10^shift >= den, or
    // count integer digits when num/den >= 1.
    let int_part = &num / &den;
    let int_digits = if int_part.is_zero() {
        0
    } else {
        int_part.to_string().len() as i64
    };
    let lead_exp = if int_digits > 0 {
        int_digits
    } else {
        // 10^(1-lead) <= num/den < 10^(2-lead) ... find the first nonzero
        // decimal place.
        let mut shift: i64 = 0;
        let mut scaled = num.clone();
        while &scaled < &den {
            scaled *= 10;
            shift += 1;
        }
        1 - shift
    };

    // We want `sig` digits starting at the leading digit, so scale so that
    // floor gives sig digits, then round by the remainder.
    let drop = lead_exp - sig as i64; // digits to the right of the kept block
    let (scaled_num, scaled_den) = if drop >= 0 {
        (num.clone(), &den * BigInt::from(10u8).pow(drop as u32))
    } else {
        (&num * BigInt::from(10u8).pow((-drop) as u32), den.clone())
    };
    let mut digits = &scaled_num / &scaled_den;
    let rem = &scaled_num - &digits * &scaled_den;
    if &rem * 2 >= scaled_den {
        digits += 1;
    }
    let mut ds = digits.to_string();
    // Rounding may carry into an extra digit (e.g. 999.5 -> 1000).
    let mut exp = lead_exp;
    if ds.len() > sig {
        exp += 1;
        ds.truncate(sig);
    }

    let mut out = String::new();
    if neg {
        out.push('-');
    }
    if exp >= sig as i64 {
        // Integral with trailing zeros.
        out.push_str(&ds);
        for _ in 0..(exp - sig as i64) {
            out.push('0');
        }
    } else if exp >= 1 {
        out.push_str(&ds[..exp as usize]);
        out.push('.');
        out.push_str(&ds[exp as usize..]);
    } else {
        out.push_str("0.");
        for _ in 0..(-exp) {
            out.push('0');
        }
        out.push_str(&ds);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    #[test]
    fn parse_accepts_fraction_and_integer() {
        assert_eq!(parse_ratio("3/4").unwrap(), BigRational::new(3.into(), 4.into()));
        assert_eq!(parse_ratio("-7").unwrap(), BigRational::from_integer((-7).into()));
        assert_eq!(parse_ratio(" 10/20 ").unwrap(), BigRational::new(1.into(), 2.into()));
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(parse_ratio("1/0").is_err());
        assert!(parse_ratio("a/b").is_err());
        assert!(parse_ratio("1.5").is_err());
        assert!(parse_ratio("").is_err());
    }

    #[test]
    fn canonical_form() {
        let r = parse_ratio("4/-6").unwrap();
        assert_eq!(r.numer(), &BigInt::from(-2));
        assert_eq!(r.denom(), &BigInt::from(3));
        assert_eq!(ratio_to_string(&r), "-2/3");
        assert_eq!(ratio_to_string(&BigRational::one()), "1");
    }

    #[test]
    fn decimal_rendering() {
        // 95182/245025 = 0.38845832... (leading fraction < 1)
        let r = BigRational::new(95182.into(), 245025.into());
        assert_eq!(ratio_to_decimal(&r, 12), "0.388458320580");
        assert_eq!(ratio_to_decimal(&BigRational::new(3.into(), 2.into()), 3), "1.50");
        assert_eq!(ratio_to_decimal(&BigRational::new(1.into(), 256.into()), 4), "0.003906");
        assert_eq!(ratio_to_decimal(&BigRational::new((-1).into(), 3.into()), 5), "-0.33333");
        assert_eq!(ratio_to_decimal(&BigRational::from_integer(1024.into()), 2), "1000");
        assert_eq!(ratio_to_decimal(&BigRational::new(1999.into(), 2.into()), 3), "1000");
        assert_eq!(ratio_to_decimal(&BigRational::zero(), 12), "0");
    }
}
