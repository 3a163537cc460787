//! Reference algorithms: permutation expansion, Chió condensation,
//! Berkowitz and Csanky.

use crate::error::{Error, Result};
use crate::linalg::{inner_product, matrix_powers, row_powers, tree_sum, Matrix};
use crate::pipeline::CharPoly;
use crate::ring::Ring;

/// Largest order the permutation expansion accepts (9! = 362880 terms).
pub const PERMUTATION_LIMIT: usize = 9;

/// `Σ_π sign(π) Π_i A_{i,π(i)}` over all permutations in lexicographic
/// order. The sign is tracked incrementally: a step of the lexicographic
/// successor is one transposition plus a reversal of the suffix.
pub fn det_permutation<R: Ring>(ring: &R, a: &Matrix<R::Elem>) -> Result<R::Elem> {
    let n = a.require_square("det_permutation")?;
    if n > PERMUTATION_LIMIT {
        return Err(Error::Refused {
            algorithm: "permutation",
            reason: format!("n = {n} exceeds the permutation oracle limit of {PERMUTATION_LIMIT}"),
        });
    }
    if n == 0 {
        return Ok(ring.one());
    }
    let mut perm: Vec<usize> = (0..n).collect();
    let mut odd = false;
    let mut total = ring.zero();
    loop {
        let mut term = a.get(0, perm[0]).clone();
        for (i, &p) in perm.iter().enumerate().skip(1) {
            term = ring.mul(&term, a.get(i, p));
        }
        total = if odd { ring.sub(&total, &term) } else { ring.add(&total, &term) };

        let Some(i) = (0..n - 1).rev().find(|&i| perm[i] < perm[i + 1]) else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| perm[j] > perm[i]).expect("successor exists");
        perm.swap(i, j);
        perm[i + 1..].reverse();
        let suffix = n - i - 1;
        if (1 + suffix / 2) % 2 == 1 {
            odd = !odd;
        }
    }
    Ok(total)
}

fn require_field<R: Ring>(ring: &R, algorithm: &'static str) -> Result<()> {
    if ring.is_field() {
        Ok(())
    } else {
        Err(Error::Refused {
            algorithm,
            reason: format!(
                "division-based; needs a field (rat or a prime modulus), but {} is not one",
                ring.descriptor()
            ),
        })
    }
}

/// Chió condensation: `det(A) = det(B) / A_11^(n-2)` with
/// `B_ij = A_11 A_ij - A_i1 A_1j`. A zero pivot is replaced by swapping in a
/// lower row (flipping the sign); an all-zero first column gives 0.
pub fn det_chio<R: Ring>(ring: &R, a: &Matrix<R::Elem>) -> Result<R::Elem> {
    let n = a.require_square("det_chio")?;
    require_field(ring, "chio")?;
    if n == 0 {
        return Ok(ring.one());
    }
    let mut m = a.clone();
    let mut negate = false;
    let mut divisor = ring.one();
    while m.rows() > 1 {
        let size = m.rows();
        if ring.is_zero(m.get(0, 0)) {
            match (1..size).find(|&i| !ring.is_zero(m.get(i, 0))) {
                Some(i) => {
                    m.swap_rows(0, i);
                    negate = !negate;
                }
                None => return Ok(ring.zero()),
            }
        }
        let pivot = m.get(0, 0).clone();
        for _ in 0..size - 2 {
            divisor = ring.mul(&divisor, &pivot);
        }
        m = Matrix::from_fn(size - 1, size - 1, |i, j| {
            let (i, j) = (i + 1, j + 1);
            ring.sub(&ring.mul(&pivot, m.get(i, j)), &ring.mul(m.get(i, 0), m.get(0, j)))
        });
    }
    let det = ring.mul(m.get(0, 0), &ring.inverse(&divisor)?);
    Ok(if negate { ring.neg(&det) } else { det })
}

/// Berkowitz: starting from the bottom-right entry, each step borders the
/// current block `B` with `a = A_ii`, row `r` and column `s`, and maps the
/// characteristic coefficients of `B` through the `(k+1)`x`k` lower-triangular
/// Toeplitz matrix with first column `1, -a, -rs, -rBs, ..., -rB^(k-2)s`.
/// The `rB^t` rows come from block doubling. Division-free.
pub fn det_berkowitz<R: Ring>(ring: &R, a: &Matrix<R::Elem>) -> Result<CharPoly<R::Elem>> {
    let n = a.require_square("det_berkowitz")?;
    if n == 0 {
        return CharPoly::new(ring, vec![ring.one()]);
    }
    // descending: coeffs[0] is the leading 1
    let mut coeffs = vec![ring.one(), ring.neg(a.get(n - 1, n - 1))];
    for i in (0..n - 1).rev() {
        let k = n - i;
        let r: Vec<R::Elem> = a.row(i)[i + 1..].to_vec();
        let s: Vec<R::Elem> = (i + 1..n).map(|t| a.get(t, i).clone()).collect();
        let b = Matrix::from_fn(k - 1, k - 1, |x, y| a.get(i + 1 + x, i + 1 + y).clone());
        let (rows, _) = row_powers(ring, &r, &b, k - 2)?;

        let mut column = Vec::with_capacity(k + 1);
        column.push(ring.one());
        column.push(ring.neg(a.get(i, i)));
        column.extend(rows.iter().map(|row| ring.neg(&inner_product(ring, row.iter().zip(&s)))));

        // (k+1)x k Toeplitz times the previous k coefficients; the unit
        // diagonal contributes without a multiplication.
        let next: Vec<R::Elem> = (0..=k)
            .map(|row| {
                let mut terms: Vec<R::Elem> = (0..k.min(row + 1))
                    .filter(|&j| j != row)
                    .map(|j| ring.mul(&column[row - j], &coeffs[j]))
                    .collect();
                if row < k {
                    terms.push(coeffs[row].clone());
                }
                tree_sum(ring, terms)
            })
            .collect();
        coeffs = next;
    }
    coeffs.reverse();
    CharPoly::new(ring, coeffs)
}

/// Csanky: power sums `p_k = Tr(A^k)` and Newton's identities
/// `k c_(n-k) = -(p_k + Σ_{i<k} c_(n-i) p_(k-i))`. Needs to divide by
/// `1..n`, so the ring must be a field of characteristic 0 or a prime `p > n`.
pub fn charpoly_csanky<R: Ring>(ring: &R, a: &Matrix<R::Elem>) -> Result<CharPoly<R::Elem>> {
    let n = a.require_square("charpoly_csanky")?;
    let p = ring.characteristic();
    if !ring.is_field() || (p != 0 && p <= n as u64) {
        return Err(Error::Refused {
            algorithm: "csanky",
            reason: format!(
                "needs a field of characteristic 0 or a prime p > n; {} with n = {n} does not qualify",
                ring.descriptor()
            ),
        });
    }
    let powers = matrix_powers(ring, a, n)?;
    let traces: Vec<R::Elem> = powers.iter().map(|m| tree_sum(ring, (0..n).map(|i| m.get(i, i).clone()).collect())).collect();

    // desc[i] = c_(n-i)
    let mut desc = vec![ring.one()];
    for k in 1..=n {
        let mut terms = vec![traces[k].clone()];
        terms.extend((1..k).map(|i| ring.mul(&desc[i], &traces[k - i])));
        let rhs = ring.neg(&tree_sum(ring, terms));
        let inv_k = ring.inverse(&ring.from_i64(k as i64))?;
        desc.push(ring.mul(&rhs, &inv_k));
    }
    desc.reverse();
    CharPoly::new(ring, desc)
}
