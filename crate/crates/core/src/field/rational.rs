use std::cmp::Ordering;

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::{FieldError, Scalar};

/// Arbitrary-precision fraction. `num_rational` keeps it reduced with a
/// positive denominator, which is exactly the canonical form we serialize.
pub type Rational = BigRational;

impl Scalar for Rational {
    const EXACT: bool = true;

    fn zero_like(&self) -> Self {
        Rational::zero()
    }

    fn one_like(&self) -> Self {
        Rational::one()
    }

    fn from_i64_like(&self, n: i64) -> Self {
        Rational::from_integer(BigInt::from(n))
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }

    fn inverse(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }

    fn square_roots(&self) -> Vec<Self> {
        if Zero::is_zero(self) {
            return vec![Rational::zero()];
        }
        if self.is_negative() {
            return Vec::new();
        }
        // Reduced form: a rational square needs square numerator and denominator.
        match (exact_isqrt(self.numer()), exact_isqrt(self.denom())) {
            (Some(n), Some(d)) => {
                let r = Rational::new(n, d);
                vec![-r.clone(), r]
            }
            _ => Vec::new(),
        }
    }

    fn canonical_cmp(&self, other: &Self) -> Ordering {
        self.cmp(other)
    }

    fn to_f64(&self) -> Option<f64> {
        ToPrimitive::to_f64(self)
    }

    fn field_name(&self) -> String {
        "rational".to_string()
    }
}

fn exact_isqrt(n: &BigInt) -> Option<BigInt> {
    if n.sign() == Sign::Minus {
        return None;
    }
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

/// Parses `num`, `num/den`, with an optional leading `-` or `−`.
pub fn parse_rational(input: &str) -> Result<Rational, FieldError> {
    let s = input.trim();
    let (negative, body) = if let Some(rest) = s.strip_prefix('-') {
        (true, rest)
    } else if let Some(rest) = s.strip_prefix('\u{2212}') {
        (true, rest)
    } else {
        (false, s)
    };
    let (num, den) = match body.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (body, None),
    };
    let num = parse_digits(input, num)?;
    let den = match den {
        Some(d) => parse_digits(input, d)?,
        None => BigInt::one(),
    };
    if den.is_zero() {
        return Err(FieldError::DivisionByZero);
    }
    let value = Rational::new(num, den);
    Ok(if negative { -value } else { value })
}

fn parse_digits(input: &str, digits: &str) -> Result<BigInt, FieldError> {
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(FieldError::parse(input, "expected digits"));
    }
    digits
        .parse::<BigInt>()
        .map_err(|e| FieldError::parse(input, e.to_string()))
}
