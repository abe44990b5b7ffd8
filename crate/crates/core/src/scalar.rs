//! Exact complex-rational scalars.
//!
//! Every coefficient in the symbolic layer is a `Complex<BigRational>`, so
//! identities are decided by exact comparison, never by a float threshold.
//! `BigRational` keeps fractions reduced, which makes equality a plain
//! structural comparison.

use num::complex::Complex;
use num::{BigInt, BigRational, One, Signed, ToPrimitive, Zero};

pub type Rational = BigRational;
pub type ScalarC = Complex<Rational>;

pub fn rat_i64(k: i64) -> Rational {
    BigRational::from_integer(BigInt::from(k))
}

pub fn rat_ratio(num: i64, den: i64) -> Rational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn sc_zero() -> ScalarC {
    Complex::new(Rational::zero(), Rational::zero())
}

pub fn sc_one() -> ScalarC {
    Complex::new(Rational::one(), Rational::zero())
}

pub fn sc_i64(k: i64) -> ScalarC {
    Complex::new(rat_i64(k), Rational::zero())
}

pub fn sc_ratio(num: i64, den: i64) -> ScalarC {
    Complex::new(rat_ratio(num, den), Rational::zero())
}

/// The imaginary unit.
pub fn sc_i() -> ScalarC {
    Complex::new(Rational::zero(), Rational::one())
}

pub fn sc_from_rat(r: Rational) -> ScalarC {
    Complex::new(r, Rational::zero())
}

pub fn sc_is_zero(s: &ScalarC) -> bool {
    s.re.is_zero() && s.im.is_zero()
}

/// Exact-to-float conversion, `None` when the imaginary part is nonzero.
pub fn sc_to_f64(s: &ScalarC) -> Option<f64> {
    if !s.im.is_zero() {
        return None;
    }
    s.re.to_f64()
}

/// Canonical printed form, parseable by the expression grammar:
/// `0`, `3/2`, `i`, `-i`, `3*i`, `(1/2-3*i)`.
pub fn fmt_scalar(s: &ScalarC) -> String {
    if sc_is_zero(s) {
        return "0".to_string();
    }
    if s.im.is_zero() {
        return format!("{}", s.re);
    }
    if s.re.is_zero() {
        return fmt_imag(&s.im);
    }
    let im_abs = s.im.abs();
    let sign = if s.im.is_negative() { "-" } else { "+" };
    format!("({}{}{})", s.re, sign, fmt_imag(&im_abs))
}

fn fmt_imag(im: &Rational) -> String {
    if im.is_one() {
        "i".to_string()
    } else if (-im.clone()).is_one() {
        "-i".to_string()
    } else {
        format!("{}*i", im)
    }
}

/// Splits a coefficient into a leading sign and a multiplicative factor for
/// term printing. The factor is empty when the magnitude is one.
pub fn fmt_scalar_factor(s: &ScalarC) -> (bool, String) {
    if s.im.is_zero() {
        let neg = s.re.is_negative();
        let mag = s.re.abs();
        if mag.is_one() {
            (neg, String::new())
        } else {
            (neg, format!("{}", mag))
        }
    } else if s.re.is_zero() {
        let neg = s.im.is_negative();
        let mag = s.im.abs();
        if mag.is_one() {
            (neg, "i".to_string())
        } else {
            (neg, format!("{}*i", mag))
        }
    } else {
        // Mixed real/imaginary coefficients keep their sign inside parentheses.
        (false, fmt_scalar(s))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rationals_reduce() {
        assert_eq!(rat_ratio(2, 4), rat_ratio(1, 2));
        assert_eq!(rat_ratio(-3, -6), rat_ratio(1, 2));
    }

    #[test]
    fn scalar_formatting() {
        assert_eq!(fmt_scalar(&sc_zero()), "0");
        assert_eq!(fmt_scalar(&sc_ratio(3, 2)), "3/2");
        assert_eq!(fmt_scalar(&sc_i()), "i");
        assert_eq!(fmt_scalar(&(-sc_i())), "-i");
        let mixed = sc_ratio(1, 2) - sc_i() * sc_i64(3);
        assert_eq!(fmt_scalar(&mixed), "(1/2-3*i)");
    }

    #[test]
    fn factor_form() {
        assert_eq!(fmt_scalar_factor(&sc_one()), (false, String::new()));
        assert_eq!(fmt_scalar_factor(&sc_i64(-1)), (true, String::new()));
        assert_eq!(fmt_scalar_factor(&sc_i64(-3)), (true, "3".to_string()));
        assert_eq!(fmt_scalar_factor(&sc_i()), (false, "i".to_string()));
    }
}
