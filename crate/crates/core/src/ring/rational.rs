use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{Ring, RingDescriptor};
use crate::error::RingError;

/// The rationals. `BigRational` keeps every value reduced with a positive
/// denominator, which is the canonical form equality relies on.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Rationals;

impl Rationals {
    pub fn ratio(&self, num: i64, den: i64) -> BigRational {
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }
}

impl Ring for Rationals {
    type Elem = BigRational;

    fn descriptor(&self) -> RingDescriptor {
        RingDescriptor::Rational
    }

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }

    fn one(&self) -> BigRational {
        BigRational::one()
    }

    fn from_i64(&self, value: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(value))
    }

    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }

    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }

    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }

    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }

    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }

    fn contains(&self, a: &BigRational) -> bool {
        a.denom().is_positive() && a.numer().gcd(a.denom()).is_one()
    }

    fn characteristic(&self) -> u64 {
        0
    }

    fn is_field(&self) -> bool {
        true
    }

    fn inverse(&self, a: &BigRational) -> Result<BigRational, RingError> {
        if a.is_zero() {
            return Err(RingError::NotInvertible { ring: self.descriptor(), elem: "0".into() });
        }
        Ok(a.recip())
    }

    fn format(&self, a: &BigRational) -> String {
        if a.is_integer() {
            a.numer().to_string()
        } else {
            format!("{}/{}", a.numer(), a.denom())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalized_products() {
        let q = Rationals;
        let p = q.mul(&q.ratio(2, 3), &q.ratio(3, 4));
        assert_eq!(p, q.ratio(1, 2));
        assert_eq!(q.format(&p), "1/2");
        assert_eq!(q.format(&q.ratio(4, -2)), "-2");
        assert!(q.contains(&q.ratio(6, -4)));
    }

    #[test]
    fn inverse() {
        let q = Rationals;
        assert_eq!(q.inverse(&q.ratio(2, 3)).unwrap(), q.ratio(3, 2));
        assert!(q.inverse(&q.zero()).is_err());
    }

    #[test]
    fn non_canonical_rejected() {
        let q = Rationals;
        let raw = BigRational::new_raw(BigInt::from(2), BigInt::from(4));
        assert!(q.try_mul(&raw, &q.one()).is_err());
    }
}
