//! Reproducible random elements and matrices.

use num_bigint::BigInt;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::linalg::Matrix;
use crate::ring::{Integers, Monomial, Poly, PolyRing, Rationals, Ring, Zmod};

/// Small random elements: integers in `[-9, 9]`, uniform residues, rationals
/// `p/q` with `p` in `[-9, 9]` and `q` in `[1, 9]`, and short polynomials.
pub trait Sample: Ring {
    fn sample<G: Rng + ?Sized>(&self, rng: &mut G) -> Self::Elem;
}

impl Sample for Integers {
    fn sample<G: Rng + ?Sized>(&self, rng: &mut G) -> BigInt {
        BigInt::from(rng.gen_range(-9i64..=9))
    }
}

impl Sample for Zmod {
    fn sample<G: Rng + ?Sized>(&self, rng: &mut G) -> u64 {
        rng.gen_range(0..self.modulus())
    }
}

impl Sample for Rationals {
    fn sample<G: Rng + ?Sized>(&self, rng: &mut G) -> Self::Elem {
        self.ratio(rng.gen_range(-9..=9), rng.gen_range(1..=9))
    }
}

impl Sample for PolyRing {
    fn sample<G: Rng + ?Sized>(&self, rng: &mut G) -> Poly {
        let nvars = self.vars().len();
        let terms = rng.gen_range(0..=3);
        Poly::from_terms((0..terms).map(|_| {
            let e = (0..nvars).map(|_| rng.gen_range(0..=2)).collect();
            (Monomial(e), BigInt::from(rng.gen_range(-3i64..=3)))
        }))
    }
}

/// Generator for size `n` under `seed`; distinct sizes get independent streams.
pub fn rng_for(seed: u64, n: usize) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ (n as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

pub fn random_matrix<R: Sample, G: Rng + ?Sized>(ring: &R, n: usize, rng: &mut G) -> Matrix<R::Elem> {
    Matrix::from_fn(n, n, |_, _| ring.sample(rng))
}

/// Integer entries in `[-9, 9]` mapped into `ring`.
pub fn random_small_int_matrix<R: Ring, G: Rng + ?Sized>(ring: &R, n: usize, rng: &mut G) -> Matrix<R::Elem> {
    Matrix::from_fn(n, n, |_, _| ring.from_i64(rng.gen_range(-9..=9)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reproducible() {
        let z = Integers;
        let a = random_matrix(&z, 5, &mut rng_for(7, 5));
        let b = random_matrix(&z, 5, &mut rng_for(7, 5));
        let c = random_matrix(&z, 5, &mut rng_for(8, 5));
        assert_eq!(a, b);
        assert_ne!(a, c);
    }

    #[test]
    fn samples_are_canonical() {
        let mut rng = rng_for(1, 1);
        let p = PolyRing::new(vec!["x".into(), "y".into()]);
        let z6 = Zmod::new(6).unwrap();
        for _ in 0..200 {
            assert!(p.contains(&p.sample(&mut rng)));
            assert!(z6.contains(&z6.sample(&mut rng)));
            assert!(Rationals.contains(&Rationals.sample(&mut rng)));
        }
    }
}
