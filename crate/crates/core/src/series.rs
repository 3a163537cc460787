//! Truncated polynomials: the ring `S[x]_N = S[[x]] / (x^(N+1))`.

use crate::doubling::powers_by_doubling;
use crate::error::{Error, Result};
use crate::linalg::tree_sum;
use crate::par;
use crate::ring::Ring;

/// Polynomial of degree at most `cap`; coefficient `j` multiplies `x^j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncPoly<E> {
    coeffs: Vec<E>,
}

impl<E: Clone> TruncPoly<E> {
    /// Cap is `coeffs.len() - 1`.
    pub fn new(coeffs: Vec<E>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::Usage("a truncated polynomial needs at least one coefficient".into()));
        }
        Ok(TruncPoly { coeffs })
    }

    /// Pads with zeros or truncates to `cap`.
    pub fn from_coeffs<R: Ring<Elem = E>>(ring: &R, mut coeffs: Vec<E>, cap: usize) -> Self {
        coeffs.resize(cap + 1, ring.zero());
        TruncPoly { coeffs }
    }

    pub fn zero<R: Ring<Elem = E>>(ring: &R, cap: usize) -> Self {
        TruncPoly { coeffs: vec![ring.zero(); cap + 1] }
    }

    pub fn one<R: Ring<Elem = E>>(ring: &R, cap: usize) -> Self {
        let mut p = Self::zero(ring, cap);
        p.coeffs[0] = ring.one();
        p
    }

    pub fn cap(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[E] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<E> {
        self.coeffs
    }

    pub fn is_unic<R: Ring<Elem = E>>(&self, ring: &R) -> bool {
        ring.is_one(&self.coeffs[0])
    }

    /// Drops every coefficient above `cap`.
    pub fn truncate(&self, cap: usize) -> Self {
        assert!(cap <= self.cap(), "truncate can only lower the cap");
        TruncPoly { coeffs: self.coeffs[..=cap].to_vec() }
    }

    /// Ascending-degree rendering, e.g. `1 - (a + d)*x + (a*d - b*c)*x^2`.
    pub fn display<R: Ring<Elem = E>>(&self, ring: &R, var: &str) -> String {
        let mut out = String::new();
        for (j, c) in self.coeffs.iter().enumerate() {
            if ring.is_zero(c) {
                continue;
            }
            let text = ring.format(c);
            if j > 0 && text.contains(' ') {
                push_term(&mut out, false, &format!("({text})*{}", power(var, j)));
                continue;
            }
            let (negative, mag) = match text.strip_prefix('-') {
                Some(rest) => (true, rest),
                None => (false, text.as_str()),
            };
            let body = match (j, mag) {
                (0, _) => mag.to_string(),
                (_, "1") => power(var, j),
                _ => format!("{mag}*{}", power(var, j)),
            };
            push_term(&mut out, negative, &body);
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

fn power(var: &str, j: usize) -> String {
    if j == 1 {
        var.to_string()
    } else {
        format!("{var}^{j}")
    }
}

fn push_term(out: &mut String, negative: bool, body: &str) {
    if out.is_empty() {
        if negative {
            out.push('-');
        }
    } else {
        out.push_str(if negative { " - " } else { " + " });
    }
    out.push_str(body);
}

fn same_cap<E>(p: &TruncPoly<E>, q: &TruncPoly<E>) -> Result<usize> {
    if p.coeffs.len() != q.coeffs.len() {
        return Err(Error::CapMismatch { left: p.coeffs.len() - 1, right: q.coeffs.len() - 1 });
    }
    Ok(p.coeffs.len() - 1)
}

pub fn tp_add<R: Ring>(ring: &R, p: &TruncPoly<R::Elem>, q: &TruncPoly<R::Elem>) -> Result<TruncPoly<R::Elem>> {
    same_cap(p, q)?;
    Ok(TruncPoly { coeffs: p.coeffs.iter().zip(&q.coeffs).map(|(a, b)| ring.add(a, b)).collect() })
}

pub fn tp_sub<R: Ring>(ring: &R, p: &TruncPoly<R::Elem>, q: &TruncPoly<R::Elem>) -> Result<TruncPoly<R::Elem>> {
    same_cap(p, q)?;
    Ok(TruncPoly { coeffs: p.coeffs.iter().zip(&q.coeffs).map(|(a, b)| ring.sub(a, b)).collect() })
}

/// Truncated product. Coefficient `k` is `Σ p_i q_(k-i)`, summed by a
/// balanced tree; terms above the cap are never formed.
pub fn tp_mul<R: Ring>(ring: &R, p: &TruncPoly<R::Elem>, q: &TruncPoly<R::Elem>) -> Result<TruncPoly<R::Elem>> {
    let cap = same_cap(p, q)?;
    let coeff = |k: usize| {
        let terms = (0..=k).map(|i| ring.mul(&p.coeffs[i], &q.coeffs[k - i])).collect();
        tree_sum(ring, terms)
    };
    let coeffs = if cap >= 16 { par::map_indexed(cap + 1, coeff) } else { (0..=cap).map(coeff).collect() };
    Ok(TruncPoly { coeffs })
}

/// `[p^0, p^1, ..., p^maxpow]` in `O(log maxpow)` rounds of two
/// multiplication stages each.
pub fn tp_powers_all<R: Ring>(ring: &R, p: &TruncPoly<R::Elem>, maxpow: usize) -> Result<Vec<TruncPoly<R::Elem>>> {
    powers_by_doubling(TruncPoly::one(ring, p.cap()), p.clone(), maxpow, |a, b| tp_mul(ring, a, b))
}

/// Inverse of a unic `p`: with `q = 1 - p`, `p^-1 = Σ_{j=0..N} q^j`, exact at
/// cap `N` because `q^(N+1)` lies in `(x^(N+1))`.
pub fn tp_unic_reciprocal<R: Ring>(ring: &R, p: &TruncPoly<R::Elem>) -> Result<TruncPoly<R::Elem>> {
    if !p.is_unic(ring) {
        return Err(Error::NotUnic);
    }
    let cap = p.cap();
    let q = tp_sub(ring, &TruncPoly::one(ring, cap), p)?;
    let powers = tp_powers_all(ring, &q, cap)?;
    let coeffs = par::map_indexed(cap + 1, |k| tree_sum(ring, powers.iter().map(|pw| pw.coeffs[k].clone()).collect()));
    Ok(TruncPoly { coeffs })
}

pub fn tp_coeff<E: Clone>(p: &TruncPoly<E>, k: usize) -> Result<E> {
    p.coeffs.get(k).cloned().ok_or(Error::OutOfRange { index: k, limit: p.cap() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{Integers, PolyRing, Zmod};
    use num_bigint::BigInt;

    fn ints(cs: &[i64]) -> TruncPoly<BigInt> {
        TruncPoly::new(cs.iter().map(|&c| BigInt::from(c)).collect()).unwrap()
    }

    #[test]
    fn add_sub() {
        let z = Integers;
        assert_eq!(tp_add(&z, &ints(&[1, 1]), &ints(&[1, -1])).unwrap(), ints(&[2, 0]));
        let p = ints(&[3, 0, 5]);
        assert_eq!(tp_add(&z, &p, &TruncPoly::zero(&z, 2)).unwrap(), p);
        assert_eq!(tp_sub(&z, &p, &p).unwrap(), TruncPoly::zero(&z, 2));
    }

    #[test]
    fn cap_mismatch() {
        let z = Integers;
        let e = tp_mul(&z, &ints(&[1, 1]), &ints(&[1, 1, 1])).unwrap_err();
        assert_eq!(e, Error::CapMismatch { left: 1, right: 2 });
        assert!(tp_add(&z, &ints(&[1]), &ints(&[1, 1])).is_err());
    }

    #[test]
    fn products_truncate() {
        let z = Integers;
        assert_eq!(tp_mul(&z, &ints(&[1, 1, 0]), &ints(&[1, -1, 0])).unwrap(), ints(&[1, 0, -1]));
        assert_eq!(tp_mul(&z, &ints(&[1, 1]), &ints(&[1, -1])).unwrap(), ints(&[1, 0]));
    }

    #[test]
    fn powers() {
        let z = Integers;
        let ps = tp_powers_all(&z, &ints(&[1, 1, 0]), 2).unwrap();
        assert_eq!(ps, vec![ints(&[1, 0, 0]), ints(&[1, 1, 0]), ints(&[1, 2, 1])]);
        assert_eq!(tp_powers_all(&z, &ints(&[7, 3]), 0).unwrap(), vec![ints(&[1, 0])]);
        let xs = tp_powers_all(&z, &ints(&[0, 1, 0]), 3).unwrap();
        assert_eq!(xs, vec![ints(&[1, 0, 0]), ints(&[0, 1, 0]), ints(&[0, 0, 1]), ints(&[0, 0, 0])]);
    }

    #[test]
    fn reciprocals() {
        let z = Integers;
        assert_eq!(tp_unic_reciprocal(&z, &ints(&[1, -1, 0, 0])).unwrap(), ints(&[1, 1, 1, 1]));
        assert_eq!(tp_unic_reciprocal(&z, &ints(&[1])).unwrap(), ints(&[1]));
        let r = tp_unic_reciprocal(&z, &ints(&[1, 1, 0])).unwrap();
        assert_eq!(r, ints(&[1, -1, 1]));
        assert_eq!(tp_mul(&z, &r, &ints(&[1, 1, 0])).unwrap(), ints(&[1, 0, 0]));
        assert_eq!(tp_unic_reciprocal(&z, &ints(&[2, 1])), Err(Error::NotUnic));
    }

    #[test]
    fn reciprocal_over_composite_modulus() {
        let z6 = Zmod::new(6).unwrap();
        let p = TruncPoly::new(vec![1, 4, 3, 5]).unwrap();
        let r = tp_unic_reciprocal(&z6, &p).unwrap();
        assert_eq!(tp_mul(&z6, &p, &r).unwrap(), TruncPoly::one(&z6, 3));
    }

    #[test]
    fn coefficients() {
        let p = PolyRing::new(["a", "b", "c", "d"].map(String::from).to_vec());
        let (a, b, c, d) = (p.var(0), p.var(1), p.var(2), p.var(3));
        let trace = p.add(&a, &d);
        let det = p.sub(&p.mul(&a, &d), &p.mul(&b, &c));
        let poly = TruncPoly::new(vec![p.one(), p.neg(&trace), det.clone()]).unwrap();
        assert_eq!(tp_coeff(&poly, 0).unwrap(), p.one());
        assert_eq!(tp_coeff(&poly, 2).unwrap(), det);
        assert_eq!(p.format(&tp_coeff(&poly, 1).unwrap()), "-a - d");
        assert_eq!(tp_coeff(&poly, 3), Err(Error::OutOfRange { index: 3, limit: 2 }));
        assert_eq!(poly.display(&p, "x"), "1 + (-a - d)*x + (a*d - b*c)*x^2");
    }

    #[test]
    fn display_integers() {
        let z = Integers;
        assert_eq!(ints(&[1, -2, 1]).display(&z, "x"), "1 - 2*x + x^2");
        assert_eq!(ints(&[0, 0]).display(&z, "x"), "0");
        assert_eq!(ints(&[-1, 0, -1]).display(&z, "t"), "-1 - t^2");
    }
}
