use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{FieldError, Scalar};

/// Deterministic Miller-Rabin, exact for every `u64`.
pub fn is_prime(n: u64) -> bool {
    const WITNESSES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &p in &WITNESSES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for &a in &WITNESSES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// A validated odd prime modulus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PrimeField {
    modulus: u64,
}

impl PrimeField {
    pub fn new(modulus: u64) -> Result<Self, FieldError> {
        if modulus == 2 {
            return Err(FieldError::InvalidModulus {
                modulus,
                reason: "characteristic two is not supported",
            });
        }
        if !is_prime(modulus) {
            return Err(FieldError::InvalidModulus {
                modulus,
                reason: "modulus must be an odd prime",
            });
        }
        Ok(PrimeField { modulus })
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn element(&self, n: i64) -> Fp {
        let m = self.modulus as i128;
        let r = (n as i128).rem_euclid(m);
        Fp {
            value: r as u64,
            modulus: self.modulus,
        }
    }

    pub fn zero(&self) -> Fp {
        self.element(0)
    }

    pub fn one(&self) -> Fp {
        self.element(1)
    }

    /// Every element, in residue order.
    pub fn elements(&self) -> impl Iterator<Item = Fp> + '_ {
        (0..self.modulus).map(move |value| Fp {
            value,
            modulus: self.modulus,
        })
    }
}

impl fmt::Display for PrimeField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "fp:{}", self.modulus)
    }
}

/// Canonical residue in `[0, p)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Fp {
    value: u64,
    modulus: u64,
}

impl Fp {
    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn field(&self) -> PrimeField {
        PrimeField {
            modulus: self.modulus,
        }
    }

    pub fn pow(&self, exp: u64) -> Fp {
        self.with(pow_mod(self.value, exp, self.modulus))
    }

    /// Legendre symbol as an element: 0, 1 or p - 1.
    pub fn euler_criterion(&self) -> u64 {
        pow_mod(self.value, (self.modulus - 1) / 2, self.modulus)
    }

    pub fn is_square(&self) -> bool {
        self.value == 0 || self.euler_criterion() == 1
    }

    fn with(&self, value: u64) -> Fp {
        Fp {
            value,
            modulus: self.modulus,
        }
    }

    fn check(&self, other: &Fp) {
        assert_eq!(
            self.modulus, other.modulus,
            "field mismatch: mod {} vs mod {}",
            self.modulus, other.modulus
        );
    }

    /// Tonelli-Shanks. Caller guarantees `self` is a nonzero square.
    fn tonelli_shanks(&self) -> u64 {
        let p = self.modulus;
        let n = self.value;
        if p % 4 == 3 {
            return pow_mod(n, (p + 1) / 4, p);
        }
        let mut q = p - 1;
        let mut s = 0u32;
        while q.is_multiple_of(2) {
            q /= 2;
            s += 1;
        }
        let z = (2..p)
            .find(|&z| pow_mod(z, (p - 1) / 2, p) == p - 1)
            .expect("an odd prime has a quadratic non-residue");
        let mut m = s;
        let mut c = pow_mod(z, q, p);
        let mut t = pow_mod(n, q, p);
        let mut r = pow_mod(n, q.div_ceil(2), p);
        while t != 1 {
            let mut i = 0;
            let mut t2 = t;
            while t2 != 1 {
                t2 = mul_mod(t2, t2, p);
                i += 1;
            }
            let b = pow_mod(c, 1u64 << (m - i - 1), p);
            m = i;
            c = mul_mod(b, b, p);
            t = mul_mod(t, c, p);
            r = mul_mod(r, b, p);
        }
        r
    }
}

impl fmt::Display for Fp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod {}", self.value, self.modulus)
    }
}

impl Add for Fp {
    type Output = Fp;

    fn add(self, rhs: Fp) -> Fp {
        self.check(&rhs);
        let s = (self.value as u128 + rhs.value as u128) % self.modulus as u128;
        self.with(s as u64)
    }
}

impl Sub for Fp {
    type Output = Fp;

    fn sub(self, rhs: Fp) -> Fp {
        self.check(&rhs);
        self + (-rhs)
    }
}

impl Mul for Fp {
    type Output = Fp;

    fn mul(self, rhs: Fp) -> Fp {
        self.check(&rhs);
        self.with(mul_mod(self.value, rhs.value, self.modulus))
    }
}

impl Neg for Fp {
    type Output = Fp;

    fn neg(self) -> Fp {
        if self.value == 0 {
            self
        } else {
            self.with(self.modulus - self.value)
        }
    }
}

impl Scalar for Fp {
    const EXACT: bool = true;

    fn zero_like(&self) -> Self {
        self.with(0)
    }

    fn one_like(&self) -> Self {
        self.with(1)
    }

    fn from_i64_like(&self, n: i64) -> Self {
        self.field().element(n)
    }

    fn is_zero(&self) -> bool {
        self.value == 0
    }

    fn inverse(&self) -> Option<Self> {
        (self.value != 0).then(|| self.pow(self.modulus - 2))
    }

    fn square_roots(&self) -> Vec<Self> {
        if self.value == 0 {
            return vec![*self];
        }
        if self.euler_criterion() != 1 {
            return Vec::new();
        }
        let r = self.tonelli_shanks();
        let (lo, hi) = if r < self.modulus - r {
            (r, self.modulus - r)
        } else {
            (self.modulus - r, r)
        };
        vec![self.with(lo), self.with(hi)]
    }

    fn canonical_cmp(&self, other: &Self) -> Ordering {
        (self.modulus, self.value).cmp(&(other.modulus, other.value))
    }

    /// Prime-field elements have no embedding in the reals.
    fn to_f64(&self) -> Option<f64> {
        None
    }

    fn compatible(&self, other: &Self) -> bool {
        self.modulus == other.modulus
    }

    fn field_name(&self) -> String {
        self.field().to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality() {
        let small: Vec<u64> = (0..60).filter(|&n| is_prime(n)).collect();
        assert_eq!(
            small,
            vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]
        );
        assert!(is_prime(18_446_744_073_709_551_557));
        assert!(!is_prime(3_215_031_751)); // strong pseudoprime to bases 2, 3, 5, 7
        assert!(!is_prime(561));
    }

    #[test]
    fn rejects_bad_moduli() {
        assert!(matches!(
            PrimeField::new(2),
            Err(FieldError::InvalidModulus { modulus: 2, .. })
        ));
        assert!(PrimeField::new(15).is_err());
        assert!(PrimeField::new(1).is_err());
        assert!(PrimeField::new(0).is_err());
        assert!(PrimeField::new(13).is_ok());
    }

    #[test]
    fn arithmetic_mod_13() {
        let f = PrimeField::new(13).unwrap();
        assert_eq!(f.element(7) * f.element(8), f.element(4));
        assert_eq!(f.element(-1), f.element(12));
        assert_eq!(f.element(5) - f.element(9), f.element(9));
        assert_eq!(f.element(3).inverse(), Some(f.element(9)));
        assert_eq!(f.zero().inverse(), None);
    }

    #[test]
    fn square_roots_match_brute_force() {
        for p in [3u64, 5, 7, 13, 17, 41, 97, 113, 257] {
            let f = PrimeField::new(p).unwrap();
            for a in f.elements() {
                let expected: Vec<Fp> = f.elements().filter(|x| *x * *x == a).collect();
                assert_eq!(a.square_roots(), expected, "a = {a}");
            }
        }
    }

    #[test]
    fn three_mod_thirteen() {
        let f = PrimeField::new(13).unwrap();
        assert_eq!(f.element(3).square_roots(), vec![f.element(4), f.element(9)]);
    }

    #[test]
    fn large_modulus_square_roots() {
        let f = PrimeField::new(18_446_744_073_709_551_557).unwrap();
        let x = f.element(123_456_789_012_345);
        let roots = (x * x).square_roots();
        assert_eq!(roots.len(), 2);
        assert!(roots.contains(&x));
        assert!(roots.contains(&-x));
    }

    #[test]
    #[should_panic(expected = "field mismatch")]
    fn mixing_fields_panics_in_operators() {
        let a = PrimeField::new(13).unwrap().one();
        let b = PrimeField::new(17).unwrap().one();
        let _ = a + b;
    }
}
