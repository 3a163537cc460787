//! Commutative rings with unit.
//!
//! Every algorithm in this crate is generic over [`Ring`]. Elements are plain
//! values in canonical form, so equality of elements is equality in the ring.
//! The concrete rings are [`Integers`], [`Zmod`], [`Rationals`] and
//! [`PolyRing`]; [`Counted`] wraps any of them to record operation counts and
//! dependency depth.

mod counted;
mod integer;
mod modular;
mod poly;
mod rational;

use std::fmt;
use std::str::FromStr;

use crate::error::RingError;

pub use counted::{Counted, OpStats, Tracked};
pub use integer::Integers;
pub use modular::{Modulus, Zmod};
pub use poly::{Monomial, Poly, PolyRing};
pub use rational::Rationals;

pub trait Ring: Clone + fmt::Debug + Send + Sync {
    type Elem: Clone + PartialEq + fmt::Debug + Send + Sync;

    fn descriptor(&self) -> RingDescriptor;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    /// Image of an integer under the unique ring map from Z.
    fn from_i64(&self, value: i64) -> Self::Elem;

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;

    fn is_zero(&self, a: &Self::Elem) -> bool {
        *a == self.zero()
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    /// True when `a` is a canonical element of this ring.
    fn contains(&self, a: &Self::Elem) -> bool;

    /// 0 for characteristic zero.
    fn characteristic(&self) -> u64;

    fn is_field(&self) -> bool {
        false
    }

    fn inverse(&self, a: &Self::Elem) -> Result<Self::Elem, RingError> {
        let _ = a;
        Err(RingError::NotAField(self.descriptor()))
    }

    /// Canonical textual form.
    fn format(&self, a: &Self::Elem) -> String;

    fn check(&self, a: &Self::Elem) -> Result<(), RingError> {
        if self.contains(a) {
            Ok(())
        } else {
            Err(RingError::Mismatch { ring: self.descriptor(), elem: format!("{a:?}") })
        }
    }

    fn try_add(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem, RingError> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.add(a, b))
    }

    fn try_sub(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem, RingError> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.sub(a, b))
    }

    fn try_mul(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem, RingError> {
        self.check(a)?;
        self.check(b)?;
        Ok(self.mul(a, b))
    }

    /// `(-1)^k · a`. Negation is free in the operation model, so this never
    /// counts as an operation.
    fn signed(&self, a: &Self::Elem, k: usize) -> Self::Elem {
        if k % 2 == 0 {
            a.clone()
        } else {
            self.neg(a)
        }
    }
}

/// Runtime name of a ring, as written on the command line and in matrix files:
/// `int`, `mod:<m>`, `rat` or `poly:<v1,v2,...>`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum RingDescriptor {
    Integer,
    Modular(Modulus),
    Rational,
    Polynomial(Vec<String>),
}

impl RingDescriptor {
    /// True when the ring is a field (rationals or a prime modulus).
    pub fn is_field(&self) -> bool {
        match self {
            RingDescriptor::Rational => true,
            RingDescriptor::Modular(m) => m.is_prime(),
            _ => false,
        }
    }
}

impl fmt::Display for RingDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingDescriptor::Integer => f.write_str("int"),
            RingDescriptor::Modular(m) => write!(f, "mod:{}", m.get()),
            RingDescriptor::Rational => f.write_str("rat"),
            RingDescriptor::Polynomial(vars) => write!(f, "poly:{}", vars.join(",")),
        }
    }
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl FromStr for RingDescriptor {
    type Err = RingError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let bad = |reason: &str| RingError::BadDescriptor {
            text: text.to_string(),
            reason: reason.to_string(),
        };
        let s = text.trim();
        match s {
            "int" => return Ok(RingDescriptor::Integer),
            "rat" => return Ok(RingDescriptor::Rational),
            _ => {}
        }
        if let Some(m) = s.strip_prefix("mod:") {
            let m: u64 = m.trim().parse().map_err(|_| bad("modulus must be an integer"))?;
            return Modulus::new(m).map(RingDescriptor::Modular).map_err(|_| bad("modulus must be at least 2"));
        }
        if let Some(vars) = s.strip_prefix("poly:") {
            let vars: Vec<String> = vars.split(',').map(|v| v.trim().to_string()).collect();
            if vars.iter().any(|v| !is_identifier(v)) {
                return Err(bad("variable names must be identifiers"));
            }
            for (i, v) in vars.iter().enumerate() {
                if vars[..i].contains(v) {
                    return Err(bad("variable names must be distinct"));
                }
            }
            return Ok(RingDescriptor::Polynomial(vars));
        }
        Err(bad("expected int, mod:<m>, rat or poly:<v1,v2,...>"))
    }
}

/// Binds `$ring` to the concrete ring named by a [`RingDescriptor`] and
/// evaluates `$body` once per ring type.
///
/// ```
/// use ringdet::{with_ring, ring::{Ring, RingDescriptor}};
/// let desc: RingDescriptor = "mod:5".parse().unwrap();
/// let text = with_ring!(&desc, |r| r.format(&r.from_i64(7)));
/// assert_eq!(text, "2");
/// ```
#[macro_export]
macro_rules! with_ring {
    ($desc:expr, |$ring:ident| $body:expr) => {
        match $desc {
            $crate::ring::RingDescriptor::Integer => {
                let $ring = $crate::ring::Integers;
                $body
            }
            $crate::ring::RingDescriptor::Modular(m) => {
                let $ring = $crate::ring::Zmod::from(*m);
                $body
            }
            $crate::ring::RingDescriptor::Rational => {
                let $ring = $crate::ring::Rationals;
                $body
            }
            $crate::ring::RingDescriptor::Polynomial(vars) => {
                let $ring = $crate::ring::PolyRing::new(vars.clone());
                $body
            }
        }
    };
}
