use alloc::string::ToString;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Exact coefficient field of a polynomial ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CoeffField {
    Rationals,
    /// Integers modulo a prime.
    Prime(u64),
}

/// Field elements are carried as rationals; over `F_p` they are kept as
/// integers in `[0, p)`.
pub type Coeff = BigRational;

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut r = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    r
}

/// Deterministic Miller–Rabin for 64-bit integers.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let (mut d, mut s) = (n - 1, 0);
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
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

impl CoeffField {
    pub fn prime(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(Self::Prime(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    /// Maps a rational into the field.
    pub fn reduce(&self, x: &BigRational) -> Result<Coeff> {
        match *self {
            Self::Rationals => Ok(x.clone()),
            Self::Prime(p) => {
                let p = BigInt::from(p);
                let den = x.denom().mod_floor(&p);
                if den.is_zero() {
                    return Err(Error::CoefficientNotDefined(x.to_string()));
                }
                // p is prime, so den^(p-2) is the inverse
                let inv = den.modpow(&(&p - BigInt::from(2)), &p);
                let v = (x.numer() * inv).mod_floor(&p);
                Ok(BigRational::from_integer(v))
            }
        }
    }

    pub fn from_int(&self, x: i64) -> Coeff {
        self.reduce(&BigRational::from_integer(x.into()))
            .expect("integers are defined over every field")
    }

    pub fn one(&self) -> Coeff {
        BigRational::one()
    }

    pub fn add(&self, a: &Coeff, b: &Coeff) -> Coeff {
        self.normalize(a + b)
    }

    pub fn sub(&self, a: &Coeff, b: &Coeff) -> Coeff {
        self.normalize(a - b)
    }

    pub fn mul(&self, a: &Coeff, b: &Coeff) -> Coeff {
        self.normalize(a * b)
    }

    pub fn neg(&self, a: &Coeff) -> Coeff {
        self.normalize(-a)
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self, a: &Coeff) -> Option<Coeff> {
        if a.is_zero() {
            return None;
        }
        Some(self.reduce(&a.recip()).expect("nonzero field elements are invertible"))
    }

    fn normalize(&self, x: BigRational) -> Coeff {
        match self {
            Self::Rationals => x,
            Self::Prime(_) => self.reduce(&x).expect("closed under ring operations"),
        }
    }
}

impl fmt::Display for CoeffField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Rationals => write!(f, "QQ"),
            Self::Prime(p) => write!(f, "GF({p})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primality() {
        let small: alloc::vec::Vec<u64> = (0..60).filter(|&n| is_prime(n)).collect();
        assert_eq!(small, [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]);
        assert!(is_prime(101));
        assert!(is_prime(18446744073709551557));
        assert!(!is_prime(3215031751));
        assert!(CoeffField::prime(100).is_err());
    }

    #[test]
    fn prime_field_arithmetic() {
        let f = CoeffField::prime(101).unwrap();
        let half = f.reduce(&BigRational::new(1.into(), 2.into())).unwrap();
        assert_eq!(half, BigRational::from_integer(51.into()));
        assert_eq!(f.mul(&half, &f.from_int(2)), f.one());
        assert_eq!(f.add(&f.from_int(100), &f.from_int(1)), BigRational::zero());
        assert_eq!(f.neg(&f.from_int(1)), f.from_int(100));
        let inv = f.inv(&f.from_int(3)).unwrap();
        assert_eq!(f.mul(&inv, &f.from_int(3)), f.one());
        assert!(f.reduce(&BigRational::new(1.into(), 101.into())).is_err());
    }
}
