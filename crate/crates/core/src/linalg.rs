//! Dense matrices over a generic ring.

use crate::doubling::powers_by_doubling;
use crate::error::{Error, Result};
use crate::par;
use crate::ring::Ring;

/// Row-major dense matrix. Dimensions may be zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix<E> {
    rows: usize,
    cols: usize,
    entries: Vec<E>,
}

impl<E: Clone> Matrix<E> {
    pub fn from_vec(rows: usize, cols: usize, entries: Vec<E>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "{} entries for a {rows}x{cols} matrix",
                entries.len()
            )));
        }
        Ok(Matrix { rows, cols, entries })
    }

    pub fn from_rows(rows: Vec<Vec<E>>) -> Result<Self> {
        let n = rows.len();
        let cols = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().position(|r| r.len() != cols) {
            return Err(Error::Dimension(format!(
                "row {bad} has {} entries, expected {cols}",
                rows[bad].len()
            )));
        }
        Ok(Matrix { rows: n, cols, entries: rows.into_iter().flatten().collect() })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> E) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Matrix { rows, cols, entries }
    }

    pub fn identity<R: Ring<Elem = E>>(ring: &R, n: usize) -> Self {
        Matrix::from_fn(n, n, |i, j| if i == j { ring.one() } else { ring.zero() })
    }

    pub fn zeros<R: Ring<Elem = E>>(ring: &R, rows: usize, cols: usize) -> Self {
        Matrix::from_fn(rows, cols, |_, _| ring.zero())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Zero-based access.
    pub fn get(&self, i: usize, j: usize) -> &E {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: E) {
        self.entries[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[E] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn entries(&self) -> &[E] {
        &self.entries
    }

    pub fn to_rows(&self) -> Vec<Vec<E>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        Matrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn map<F: Clone>(&self, f: impl FnMut(&E) -> F) -> Matrix<F> {
        Matrix { rows: self.rows, cols: self.cols, entries: self.entries.iter().map(f).collect() }
    }

    /// Copy with row `skip_row` and column `skip_col` deleted.
    pub fn minor(&self, skip_row: usize, skip_col: usize) -> Self {
        let rows: Vec<Vec<E>> = (0..self.rows)
            .filter(|&i| i != skip_row)
            .map(|i| {
                self.row(i)
                    .iter()
                    .enumerate()
                    .filter(|&(j, _)| j != skip_col)
                    .map(|(_, e)| e.clone())
                    .collect()
            })
            .collect();
        Matrix { rows: self.rows - 1, cols: self.cols - 1, entries: rows.into_iter().flatten().collect() }
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    pub(crate) fn require_square(&self, what: &str) -> Result<usize> {
        if self.is_square() {
            Ok(self.rows)
        } else {
            Err(Error::Dimension(format!("{what} needs a square matrix, got {}x{}", self.rows, self.cols)))
        }
    }
}

/// Sums by a balanced binary tree, so `n` terms take `ceil(log2 n)` levels.
pub fn tree_sum<R: Ring>(ring: &R, mut terms: Vec<R::Elem>) -> R::Elem {
    if terms.is_empty() {
        return ring.zero();
    }
    while terms.len() > 1 {
        let mut next = Vec::with_capacity(terms.len().div_ceil(2));
        let mut it = terms.into_iter();
        while let Some(a) = it.next() {
            match it.next() {
                Some(b) => next.push(ring.add(&a, &b)),
                None => next.push(a),
            }
        }
        terms = next;
    }
    terms.pop().expect("nonempty")
}

/// `Σ a_i b_i`: all products in one stage, then a balanced sum.
pub fn inner_product<'a, R: Ring>(
    ring: &R,
    pairs: impl Iterator<Item = (&'a R::Elem, &'a R::Elem)>,
) -> R::Elem
where
    R::Elem: 'a,
{
    tree_sum(ring, pairs.map(|(a, b)| ring.mul(a, b)).collect())
}

/// Work below which products stay on the calling thread.
const PAR_THRESHOLD: usize = 1 << 12;

/// Naive product; every entry is an independent balanced inner product.
pub fn mat_mul<R: Ring>(ring: &R, a: &Matrix<R::Elem>, b: &Matrix<R::Elem>) -> Result<Matrix<R::Elem>> {
    if a.cols != b.rows {
        return Err(Error::Dimension(format!(
            "cannot multiply {}x{} by {}x{}",
            a.rows, a.cols, b.rows, b.cols
        )));
    }
    let (rows, cols, inner) = (a.rows, b.cols, a.cols);
    let entry = |idx: usize| {
        let (i, j) = (idx / cols, idx % cols);
        let col = (0..inner).map(|t| b.get(t, j));
        inner_product(ring, a.row(i).iter().zip(col))
    };
    let entries = if rows * cols * inner >= PAR_THRESHOLD {
        par::map_indexed(rows * cols, entry)
    } else {
        (0..rows * cols).map(entry).collect()
    };
    Ok(Matrix { rows, cols, entries })
}

/// The upper-left `k`x`k` block.
pub fn leading_submatrix<E: Clone>(a: &Matrix<E>, k: usize) -> Result<Matrix<E>> {
    let n = a.require_square("leading_submatrix")?;
    if k == 0 || k > n {
        return Err(Error::OutOfRange { index: k, limit: n });
    }
    Ok(Matrix::from_fn(k, k, |i, j| a.get(i, j).clone()))
}

/// Result of [`diag_entries_of_powers`].
#[derive(Clone, Debug, PartialEq)]
pub struct PowerDiagonals<E> {
    /// `entries[j]` is the bottom-right entry of `A^j`.
    pub entries: Vec<E>,
    /// Matrix products performed.
    pub products: usize,
}

/// Bottom-right entries of `A^0, A^1, ..., A^maxdeg`.
///
/// Only last rows `v A^j` are tracked (`v` the last unit row vector). Each
/// round squares the current power `A^t`, reads `v A^(2t)` off its last row,
/// and multiplies the block of rows `v A^1 .. v A^(t'-1)` by `A^(2t)` in one
/// rectangular product, so about `2 log2(maxdeg)` products are needed.
pub fn diag_entries_of_powers<R: Ring>(
    ring: &R,
    a: &Matrix<R::Elem>,
    maxdeg: usize,
) -> Result<PowerDiagonals<R::Elem>> {
    let k = a.require_square("diag_entries_of_powers")?;
    if k == 0 {
        return Err(Error::Dimension("diag_entries_of_powers needs a nonempty matrix".into()));
    }
    let last = k - 1;
    let mut entries = vec![ring.one()];
    let mut products = 0;
    if maxdeg == 0 {
        return Ok(PowerDiagonals { entries, products });
    }

    // rows[j - 1] = v A^j
    let mut rows: Vec<Vec<R::Elem>> = vec![a.row(last).to_vec()];
    let mut power = a.clone();
    let mut top = 1;
    while rows.len() < maxdeg {
        power = mat_mul(ring, &power, &power)?;
        products += 1;
        top *= 2;
        rows.push(power.row(last).to_vec());
        let want = (maxdeg - rows.len()).min(top - 1);
        if want > 0 {
            let block = Matrix::from_rows(rows[..want].to_vec())?;
            let next = mat_mul(ring, &block, &power)?;
            products += 1;
            rows.extend(next.to_rows());
        }
    }
    entries.extend(rows.into_iter().map(|mut r| r.swap_remove(last)));
    Ok(PowerDiagonals { entries, products })
}

/// Rows `x B^0, x B^1, ..., x B^maxpow` for an arbitrary row vector `x`, by
/// the same block-doubling as [`diag_entries_of_powers`]. Returns the rows
/// and the number of matrix products.
pub fn row_powers<R: Ring>(
    ring: &R,
    x: &[R::Elem],
    b: &Matrix<R::Elem>,
    maxpow: usize,
) -> Result<(Vec<Vec<R::Elem>>, usize)> {
    let m = b.require_square("row_powers")?;
    if x.len() != m {
        return Err(Error::Dimension(format!("row of length {} against {m}x{m}", x.len())));
    }
    let mut rows = vec![x.to_vec()];
    let mut products = 0;
    if maxpow == 0 {
        return Ok((rows, products));
    }
    // power = B^span; rows holds exponents 0..span at the top of each round
    let mut power = b.clone();
    let mut span = 1;
    loop {
        let want = (maxpow + 1 - rows.len()).min(span);
        let block = Matrix::from_rows(rows[..want].to_vec())?;
        rows.extend(mat_mul(ring, &block, &power)?.to_rows());
        products += 1;
        if rows.len() > maxpow {
            break;
        }
        power = mat_mul(ring, &power, &power)?;
        products += 1;
        span *= 2;
    }
    Ok((rows, products))
}

/// `A^0 ..= A^maxpow` by power doubling.
pub fn matrix_powers<R: Ring>(ring: &R, a: &Matrix<R::Elem>, maxpow: usize) -> Result<Vec<Matrix<R::Elem>>> {
    let n = a.require_square("matrix_powers")?;
    powers_by_doubling(Matrix::identity(ring, n), a.clone(), maxpow, |x, y| mat_mul(ring, x, y))
}

/// `Σ c_i A^i` with coefficients in ascending order.
pub fn eval_matrix_poly<R: Ring>(ring: &R, coeffs: &[R::Elem], a: &Matrix<R::Elem>) -> Result<Matrix<R::Elem>> {
    let n = a.require_square("eval_matrix_poly")?;
    let powers = matrix_powers(ring, a, coeffs.len().saturating_sub(1))?;
    Ok(Matrix::from_fn(n, n, |i, j| {
        let terms = coeffs.iter().zip(&powers).map(|(c, p)| ring.mul(c, p.get(i, j))).collect();
        tree_sum(ring, terms)
    }))
}
