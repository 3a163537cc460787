//! Division-free determinant and characteristic polynomial.
//!
//! With `d(x) = det(I - xA)` (the characteristic polynomial with its
//! coefficients reversed),
//!
//! ```text
//! d(x) = ( prod_{k=1..n} sum_{j=0..n} ((A_k)^j)_{k,k} x^j )^-1   in R[x]_n
//! det(A) = (-1)^n <x^n> d(x)
//! ```
//!
//! where `A_k` is the leading `k`x`k` block. The bottom-right entries of the
//! powers come from [`diag_entries_of_powers`]; the `n` factors are
//! multiplied by a balanced tree and the unic product is inverted with
//! [`tp_unic_reciprocal`]. Only ring additions, subtractions and
//! multiplications are used.

use crate::baselines::det_permutation;
use crate::error::{Error, Result};
use crate::linalg::{diag_entries_of_powers, leading_submatrix, Matrix};
use crate::par;
use crate::ring::Ring;
use crate::series::{tp_coeff, tp_mul, tp_unic_reciprocal, TruncPoly};

/// Monic characteristic polynomial `det(xI - A)`, coefficients ascending.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharPoly<E> {
    coeffs: Vec<E>,
}

impl<E: Clone> CharPoly<E> {
    /// `coeffs` ascending, `c_0 .. c_n`; the last one must be one.
    pub fn new<R: Ring<Elem = E>>(ring: &R, coeffs: Vec<E>) -> Result<Self> {
        match coeffs.last() {
            Some(lead) if ring.is_one(lead) => Ok(CharPoly { coeffs }),
            _ => Err(Error::Usage("characteristic polynomial must be monic".into())),
        }
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[E] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &E {
        &self.coeffs[k]
    }

    /// `(-1)^n c_0`.
    pub fn determinant<R: Ring<Elem = E>>(&self, ring: &R) -> E {
        ring.signed(&self.coeffs[0], self.degree())
    }

    /// Descending-degree rendering, e.g. `x^2 - 5*x + 6`.
    pub fn display<R: Ring<Elem = E>>(&self, ring: &R, var: &str) -> String {
        let mut out = String::new();
        for j in (0..self.coeffs.len()).rev() {
            let c = &self.coeffs[j];
            if ring.is_zero(c) {
                continue;
            }
            let text = ring.format(c);
            let pow = match j {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{j}"),
            };
            let (negative, body) = if j > 0 && text.contains(' ') {
                (false, format!("({text})*{pow}"))
            } else {
                let (neg, mag) = match text.strip_prefix('-') {
                    Some(rest) => (true, rest.to_string()),
                    None => (false, text.clone()),
                };
                let body = match (j, mag.as_str()) {
                    (0, _) => mag,
                    (_, "1") => pow,
                    _ => format!("{mag}*{pow}"),
                };
                (neg, body)
            };
            if out.is_empty() {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            out.push_str(&body);
        }
        out
    }
}

/// `Σ_{j=0..n} ((A_k)^j)_{k,k} x^j` at cap `n`.
pub fn factor_poly<R: Ring>(ring: &R, a: &Matrix<R::Elem>, k: usize) -> Result<TruncPoly<R::Elem>> {
    let n = a.require_square("factor_poly")?;
    let block = leading_submatrix(a, k)?;
    TruncPoly::new(diag_entries_of_powers(ring, &block, n)?.entries)
}

/// Product by a balanced tree: pairs, then pairs of pairs, and so on.
pub fn balanced_product<R: Ring>(ring: &R, factors: Vec<TruncPoly<R::Elem>>) -> Result<TruncPoly<R::Elem>> {
    if factors.is_empty() {
        return Err(Error::EmptyProduct);
    }
    let mut level = factors;
    while level.len() > 1 {
        let pairs = level.len() / 2;
        let mut next = par::map_indexed(pairs, |i| tp_mul(ring, &level[2 * i], &level[2 * i + 1]))
            .into_iter()
            .collect::<Result<Vec<_>>>()?;
        if level.len() % 2 == 1 {
            next.push(level.pop().expect("odd level"));
        }
        level = next;
    }
    Ok(level.pop().expect("nonempty"))
}

/// `d(x) = det(I - xA)` at cap `n`. Always unic.
pub fn rev_charpoly<R: Ring>(ring: &R, a: &Matrix<R::Elem>) -> Result<TruncPoly<R::Elem>> {
    let n = a.require_square("rev_charpoly")?;
    if n == 0 {
        return Ok(TruncPoly::one(ring, 0));
    }
    let factors = par::map_indexed(n, |i| factor_poly(ring, a, i + 1))
        .into_iter()
        .collect::<Result<Vec<_>>>()?;
    let product = balanced_product(ring, factors)?;
    tp_unic_reciprocal(ring, &product)
}

/// The determinant, using only ring operations. `det` of the empty matrix is 1.
pub fn determinant<R: Ring>(ring: &R, a: &Matrix<R::Elem>) -> Result<R::Elem> {
    let n = a.require_square("determinant")?;
    let d = rev_charpoly(ring, a)?;
    Ok(ring.signed(&tp_coeff(&d, n)?, n))
}

pub fn char_poly<R: Ring>(ring: &R, a: &Matrix<R::Elem>) -> Result<CharPoly<R::Elem>> {
    a.require_square("char_poly")?;
    let mut coeffs = rev_charpoly(ring, a)?.into_coeffs();
    coeffs.reverse();
    Ok(CharPoly { coeffs })
}

/// Entry `(i, j)` (zero-based) of `C^-1` from the adjugate,
/// `(-1)^(i+j) det(C[j,i]) det(C)^-1`, with minors from the permutation
/// expansion. Field rings only.
pub fn adjugate_inverse_entry<R: Ring>(ring: &R, c: &Matrix<R::Elem>, i: usize, j: usize) -> Result<R::Elem> {
    let det = det_permutation(ring, c)?;
    let cofactor = ring.signed(&det_permutation(ring, &c.minor(j, i))?, i + j);
    Ok(ring.mul(&cofactor, &ring.inverse(&det)?))
}

/// Checks `det(B)^-1 = prod_k ((B_k)^-1)_{k,k}` over a field.
///
/// A singular leading block is reported as
/// [`Error::HypothesisNotSatisfied`], distinct from `Ok(false)`.
pub fn verify_telescoping<R: Ring>(ring: &R, b: &Matrix<R::Elem>) -> Result<bool> {
    let n = b.require_square("verify_telescoping")?;
    if !ring.is_field() {
        return Err(Error::Refused {
            algorithm: "telescoping",
            reason: format!("needs a field (rat or a prime modulus), got {}", ring.descriptor()),
        });
    }
    let mut product = ring.one();
    for k in 1..=n {
        let block = leading_submatrix(b, k)?;
        if ring.is_zero(&det_permutation(ring, &block)?) {
            return Err(Error::HypothesisNotSatisfied { order: k });
        }
        let entry = adjugate_inverse_entry(ring, &block, k - 1, k - 1)?;
        product = ring.mul(&product, &entry);
    }
    let det = det_permutation(ring, b)?;
    Ok(product == ring.inverse(&det)?)
}
