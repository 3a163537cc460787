use std::fmt;

use super::{Ring, RingDescriptor};
use crate::error::RingError;

/// A modulus `m >= 2`, with primality decided once at construction.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Modulus {
    value: u64,
    prime: bool,
}

impl Modulus {
    pub fn new(value: u64) -> Result<Self, RingError> {
        if value < 2 {
            return Err(RingError::BadDescriptor {
                text: format!("mod:{value}"),
                reason: "modulus must be at least 2".into(),
            });
        }
        Ok(Modulus { value, prime: is_prime(value) })
    }

    pub fn get(self) -> u64 {
        self.value
    }

    pub fn is_prime(self) -> bool {
        self.prime
    }
}

impl fmt::Debug for Modulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
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

/// Deterministic Miller-Rabin; these bases cover all of u64.
fn is_prime(n: u64) -> bool {
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for p in BASES {
        if n % p == 0 {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in BASES {
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

/// Integers modulo `m`. Residues are kept in `[0, m)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Zmod {
    modulus: Modulus,
}

impl From<Modulus> for Zmod {
    fn from(modulus: Modulus) -> Self {
        Zmod { modulus }
    }
}

impl Zmod {
    pub fn new(m: u64) -> Result<Self, RingError> {
        Modulus::new(m).map(Zmod::from)
    }

    pub fn modulus(&self) -> u64 {
        self.modulus.get()
    }

    /// Reduces any signed integer into `[0, m)`.
    pub fn reduce_i128(&self, v: i128) -> u64 {
        v.rem_euclid(self.modulus() as i128) as u64
    }
}

impl Ring for Zmod {
    type Elem = u64;

    fn descriptor(&self) -> RingDescriptor {
        RingDescriptor::Modular(self.modulus)
    }

    fn zero(&self) -> u64 {
        0
    }

    fn one(&self) -> u64 {
        1
    }

    fn from_i64(&self, value: i64) -> u64 {
        self.reduce_i128(value as i128)
    }

    fn add(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 + *b as u128) % self.modulus() as u128) as u64
    }

    fn sub(&self, a: &u64, b: &u64) -> u64 {
        let m = self.modulus();
        if a >= b {
            a - b
        } else {
            m - (b - a)
        }
    }

    fn mul(&self, a: &u64, b: &u64) -> u64 {
        mul_mod(*a, *b, self.modulus())
    }

    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.modulus() - a
        }
    }

    fn contains(&self, a: &u64) -> bool {
        *a < self.modulus()
    }

    fn characteristic(&self) -> u64 {
        self.modulus()
    }

    fn is_field(&self) -> bool {
        self.modulus.is_prime()
    }

    fn inverse(&self, a: &u64) -> Result<u64, RingError> {
        if !self.is_field() {
            return Err(RingError::NotAField(self.descriptor()));
        }
        if *a == 0 {
            return Err(RingError::NotInvertible { ring: self.descriptor(), elem: "0".into() });
        }
        // a^(p-2) for prime p
        Ok(pow_mod(*a, self.modulus() - 2, self.modulus()))
    }

    fn format(&self, a: &u64) -> String {
        a.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let z4 = Zmod::new(4).unwrap();
        assert_eq!(z4.add(&3, &3), 2);
        assert_eq!(z4.mul(&2, &2), 0);
        assert_eq!(z4.sub(&1, &3), 2);
        assert_eq!(z4.neg(&1), 3);
        assert_eq!(z4.from_i64(-1), 3);
    }

    #[test]
    fn inverses() {
        let z5 = Zmod::new(5).unwrap();
        assert_eq!(z5.inverse(&2).unwrap(), 3);
        assert!(matches!(z5.inverse(&0), Err(RingError::NotInvertible { .. })));
        let z4 = Zmod::new(4).unwrap();
        assert!(matches!(z4.inverse(&2), Err(RingError::NotAField(_))));
    }

    #[test]
    fn mismatched_residue_is_rejected() {
        let z4 = Zmod::new(4).unwrap();
        assert!(matches!(z4.try_add(&5, &1), Err(RingError::Mismatch { .. })));
        assert_eq!(z4.try_add(&3, &3), Ok(2));
    }

    #[test]
    fn primality() {
        let small: Vec<u64> = (0..60).filter(|&n| is_prime(n)).collect();
        assert_eq!(small, [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53, 59]);
        assert!(is_prime(1_000_000_007));
        assert!(is_prime(18_446_744_073_709_551_557));
        assert!(!is_prime(3_215_031_751)); // strong pseudoprime to bases 2,3,5,7
    }

    #[test]
    fn large_modulus_no_overflow() {
        let z = Zmod::new(u64::MAX - 58).unwrap(); // prime
        let a = z.modulus() - 1;
        assert_eq!(z.mul(&a, &a), 1);
        assert_eq!(z.add(&a, &a), z.modulus() - 2);
    }
}
