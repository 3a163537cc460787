use std::fmt;
use std::str::FromStr;

use crate::baselines::{charpoly_csanky, det_berkowitz, det_chio, det_permutation, PERMUTATION_LIMIT};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::pipeline::{char_poly, determinant, CharPoly};
use crate::ring::Ring;

/// Selectable determinant algorithms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Algorithm {
    /// The division-free truncated-series formula.
    Formula,
    Permutation,
    Chio,
    Berkowitz,
    Csanky,
}

impl Algorithm {
    pub const ALL: [Algorithm; 5] =
        [Algorithm::Formula, Algorithm::Permutation, Algorithm::Chio, Algorithm::Berkowitz, Algorithm::Csanky];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Formula => "formula",
            Algorithm::Permutation => "permutation",
            Algorithm::Chio => "chio",
            Algorithm::Berkowitz => "berkowitz",
            Algorithm::Csanky => "csanky",
        }
    }

    pub fn produces_char_poly(self) -> bool {
        matches!(self, Algorithm::Formula | Algorithm::Berkowitz | Algorithm::Csanky)
    }

    /// Refuses up front when the algorithm cannot run on `ring` at order `n`.
    pub fn check<R: Ring>(self, ring: &R, n: usize) -> Result<()> {
        let refuse = |reason: String| Err(Error::Refused { algorithm: self.name(), reason });
        match self {
            Algorithm::Permutation if n > PERMUTATION_LIMIT => {
                refuse(format!("n = {n} exceeds the permutation oracle limit of {PERMUTATION_LIMIT}"))
            }
            Algorithm::Chio if !ring.is_field() => refuse(format!(
                "division-based; needs a field (rat or a prime modulus), but {} is not one",
                ring.descriptor()
            )),
            Algorithm::Csanky => {
                let p = ring.characteristic();
                if !ring.is_field() || (p != 0 && p <= n as u64) {
                    refuse(format!(
                        "needs a field of characteristic 0 or a prime p > n; {} with n = {n} does not qualify",
                        ring.descriptor()
                    ))
                } else {
                    Ok(())
                }
            }
            _ => Ok(()),
        }
    }

    pub fn determinant<R: Ring>(self, ring: &R, a: &Matrix<R::Elem>) -> Result<R::Elem> {
        match self {
            Algorithm::Formula => determinant(ring, a),
            Algorithm::Permutation => det_permutation(ring, a),
            Algorithm::Chio => det_chio(ring, a),
            Algorithm::Berkowitz => Ok(det_berkowitz(ring, a)?.determinant(ring)),
            Algorithm::Csanky => Ok(charpoly_csanky(ring, a)?.determinant(ring)),
        }
    }

    pub fn char_poly<R: Ring>(self, ring: &R, a: &Matrix<R::Elem>) -> Result<CharPoly<R::Elem>> {
        match self {
            Algorithm::Formula => char_poly(ring, a),
            Algorithm::Berkowitz => det_berkowitz(ring, a),
            Algorithm::Csanky => charpoly_csanky(ring, a),
            Algorithm::Permutation | Algorithm::Chio => Err(Error::Refused {
                algorithm: self.name(),
                reason: "computes only the determinant, not the characteristic polynomial".into(),
            }),
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Algorithm::ALL
            .into_iter()
            .find(|a| a.name() == s.trim())
            .ok_or_else(|| Error::Usage(format!("unknown algorithm `{s}` (formula, permutation, chio, berkowitz, csanky)")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{Integers, Rationals, Zmod};

    #[test]
    fn names_round_trip() {
        for a in Algorithm::ALL {
            assert_eq!(a.name().parse::<Algorithm>().unwrap(), a);
        }
        assert!("gauss".parse::<Algorithm>().is_err());
    }

    #[test]
    fn guards() {
        let z3 = Zmod::new(3).unwrap();
        assert!(Algorithm::Csanky.check(&z3, 2).is_ok());
        assert!(Algorithm::Csanky.check(&z3, 3).is_err());
        assert!(Algorithm::Csanky.check(&Rationals, 30).is_ok());
        assert!(Algorithm::Chio.check(&Integers, 2).is_err());
        assert!(Algorithm::Permutation.check(&Integers, 9).is_ok());
        assert!(Algorithm::Permutation.check(&Integers, 12).is_err());
        assert!(Algorithm::Formula.check(&Zmod::new(4).unwrap(), 50).is_ok());
    }
}
