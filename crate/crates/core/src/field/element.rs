use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use super::{parse_rational, FieldError, Fp, PrimeField, Rational, Scalar};

/// Which field a computation runs over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Rational,
    Prime(PrimeField),
}

impl FieldSpec {
    pub fn prime(modulus: u64) -> Result<Self, FieldError> {
        PrimeField::new(modulus).map(FieldSpec::Prime)
    }

    pub fn is_rational(&self) -> bool {
        matches!(self, FieldSpec::Rational)
    }

    pub fn zero(&self) -> FieldElement {
        self.from_i64(0)
    }

    pub fn from_i64(&self, n: i64) -> FieldElement {
        match self {
            FieldSpec::Rational => FieldElement::Rational(Rational::from_integer(n.into())),
            FieldSpec::Prime(f) => FieldElement::Prime(f.element(n)),
        }
    }

    /// Maps a rational into this field. Fails when the denominator is
    /// divisible by the characteristic.
    pub fn from_rational(&self, q: &Rational) -> Result<FieldElement, FieldError> {
        match self {
            FieldSpec::Rational => Ok(FieldElement::Rational(q.clone())),
            FieldSpec::Prime(f) => {
                let p = BigInt::from(f.modulus());
                let reduce = |n: &BigInt| {
                    let r = n.mod_floor(&p).to_i64().expect("residue fits in i64");
                    f.element(r)
                };
                let num = reduce(q.numer());
                let den = reduce(q.denom());
                num.checked_div(&den).map(FieldElement::Prime)
            }
        }
    }

    /// Parses a value typed by a user into this field. Accepts the rational
    /// grammar (`-3/4`) and, for prime fields, `r mod p` with a matching `p`.
    pub fn parse_value(&self, input: &str) -> Result<FieldElement, FieldError> {
        if input.contains("mod") {
            let element: FieldElement = input.parse()?;
            if element.field() != *self {
                return Err(FieldError::FieldMismatch {
                    left: self.to_string(),
                    right: element.field().to_string(),
                });
            }
            return Ok(element);
        }
        self.from_rational(&parse_rational(input)?)
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rational => f.write_str("rational"),
            FieldSpec::Prime(p) => write!(f, "{p}"),
        }
    }
}

impl FromStr for FieldSpec {
    type Err = FieldError;

    /// `rational` or `fp:<p>`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("rational") || s == "Q" {
            return Ok(FieldSpec::Rational);
        }
        let digits = s
            .strip_prefix("fp:")
            .or_else(|| s.strip_prefix("Fp:"))
            .ok_or_else(|| FieldError::parse(s, "expected `rational` or `fp:<prime>`"))?;
        let p: u64 = digits
            .parse()
            .map_err(|_| FieldError::parse(s, "modulus is not an unsigned integer"))?;
        FieldSpec::prime(p)
    }
}

/// An exact element of a runtime-selected field.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum FieldElement {
    Rational(Rational),
    Prime(Fp),
}

impl FieldElement {
    pub fn rational(num: i64, den: i64) -> Result<Self, FieldError> {
        if den == 0 {
            return Err(FieldError::DivisionByZero);
        }
        Ok(FieldElement::Rational(Rational::new(num.into(), den.into())))
    }

    pub fn field(&self) -> FieldSpec {
        match self {
            FieldElement::Rational(_) => FieldSpec::Rational,
            FieldElement::Prime(x) => FieldSpec::Prime(x.field()),
        }
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            FieldElement::Rational(q) => Some(q),
            FieldElement::Prime(_) => None,
        }
    }

    fn mismatch(&self, other: &Self) -> FieldError {
        FieldError::FieldMismatch {
            left: self.field().to_string(),
            right: other.field().to_string(),
        }
    }

    pub fn checked_add(&self, rhs: &Self) -> Result<Self, FieldError> {
        self.zip(rhs, |a, b| a + b, |a, b| a + b)
    }

    pub fn checked_sub(&self, rhs: &Self) -> Result<Self, FieldError> {
        self.zip(rhs, |a, b| a - b, |a, b| a - b)
    }

    pub fn checked_mul(&self, rhs: &Self) -> Result<Self, FieldError> {
        self.zip(rhs, |a, b| a * b, |a, b| a * b)
    }

    fn zip(
        &self,
        rhs: &Self,
        on_q: impl FnOnce(&Rational, &Rational) -> Rational,
        on_p: impl FnOnce(Fp, Fp) -> Fp,
    ) -> Result<Self, FieldError> {
        match (self, rhs) {
            (FieldElement::Rational(a), FieldElement::Rational(b)) => {
                Ok(FieldElement::Rational(on_q(a, b)))
            }
            (FieldElement::Prime(a), FieldElement::Prime(b)) if a.compatible(b) => {
                Ok(FieldElement::Prime(on_p(*a, *b)))
            }
            _ => Err(self.mismatch(rhs)),
        }
    }
}

impl From<Rational> for FieldElement {
    fn from(q: Rational) -> Self {
        FieldElement::Rational(q)
    }
}

impl From<Fp> for FieldElement {
    fn from(x: Fp) -> Self {
        FieldElement::Prime(x)
    }
}

/// `num/den`, `num` when the denominator is one, or `r mod p`. Negative
/// rationals use an ASCII `-`.
impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldElement::Rational(q) => write!(f, "{q}"),
            FieldElement::Prime(x) => write!(f, "{x}"),
        }
    }
}

impl FromStr for FieldElement {
    type Err = FieldError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let Some((residue, modulus)) = s.split_once(" mod ") else {
            return parse_rational(s).map(FieldElement::Rational);
        };
        let modulus: u64 = modulus
            .trim()
            .parse()
            .map_err(|_| FieldError::parse(s, "modulus is not an unsigned integer"))?;
        let field = PrimeField::new(modulus)?;
        let residue = parse_rational(residue)?;
        if !residue.is_integer() {
            return Err(FieldError::parse(s, "residue must be an integer"));
        }
        FieldSpec::Prime(field).from_rational(&residue)
    }
}

impl Add for FieldElement {
    type Output = FieldElement;

    fn add(self, rhs: Self) -> Self {
        self.checked_add(&rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Sub for FieldElement {
    type Output = FieldElement;

    fn sub(self, rhs: Self) -> Self {
        self.checked_sub(&rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Mul for FieldElement {
    type Output = FieldElement;

    fn mul(self, rhs: Self) -> Self {
        self.checked_mul(&rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;

    fn neg(self) -> Self {
        match self {
            FieldElement::Rational(q) => FieldElement::Rational(-q),
            FieldElement::Prime(x) => FieldElement::Prime(-x),
        }
    }
}

impl Scalar for FieldElement {
    const EXACT: bool = true;

    fn zero_like(&self) -> Self {
        self.field().zero()
    }

    fn one_like(&self) -> Self {
        self.field().from_i64(1)
    }

    fn from_i64_like(&self, n: i64) -> Self {
        self.field().from_i64(n)
    }

    fn is_zero(&self) -> bool {
        match self {
            FieldElement::Rational(q) => Scalar::is_zero(q),
            FieldElement::Prime(x) => x.is_zero(),
        }
    }

    fn inverse(&self) -> Option<Self> {
        match self {
            FieldElement::Rational(q) => q.inverse().map(FieldElement::Rational),
            FieldElement::Prime(x) => x.inverse().map(FieldElement::Prime),
        }
    }

    fn square_roots(&self) -> Vec<Self> {
        match self {
            FieldElement::Rational(q) => q.square_roots().into_iter().map(Into::into).collect(),
            FieldElement::Prime(x) => x.square_roots().into_iter().map(Into::into).collect(),
        }
    }

    fn canonical_cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (FieldElement::Rational(a), FieldElement::Rational(b)) => a.cmp(b),
            (FieldElement::Prime(a), FieldElement::Prime(b)) => a.canonical_cmp(b),
            (FieldElement::Rational(_), FieldElement::Prime(_)) => Ordering::Less,
            (FieldElement::Prime(_), FieldElement::Rational(_)) => Ordering::Greater,
        }
    }

    fn to_f64(&self) -> Option<f64> {
        match self {
            FieldElement::Rational(q) => Scalar::to_f64(q),
            FieldElement::Prime(_) => None,
        }
    }

    fn compatible(&self, other: &Self) -> bool {
        self.field() == other.field()
    }

    fn field_name(&self) -> String {
        self.field().to_string()
    }
}
