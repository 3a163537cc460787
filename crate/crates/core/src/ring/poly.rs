use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt::Write;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{Ring, RingDescriptor};

/// Exponent vector, one entry per variable.
///
/// Ordered by total degree, then lexicographically by exponents, so the
/// largest monomial in graded-lex order sorts last.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn degree(&self) -> u64 {
        self.0.iter().map(|&e| e as u64).sum()
    }

    fn times(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial with integer coefficients. Zero coefficients are never
/// stored.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Poly {
    terms: BTreeMap<Monomial, BigInt>,
}

impl Poly {
    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, BigInt)>) -> Poly {
        let mut p = Poly::default();
        for (m, c) in terms {
            p.accumulate(m, c);
        }
        p
    }

    /// Terms in descending graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter().rev()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn accumulate(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }
}

/// Polynomials in named variables over the integers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyRing {
    vars: Arc<[String]>,
}

impl PolyRing {
    pub fn new(vars: Vec<String>) -> Self {
        PolyRing { vars: vars.into() }
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn constant(&self, c: BigInt) -> Poly {
        Poly::from_terms([(Monomial(vec![0; self.vars.len()]), c)])
    }

    /// The variable at `index` as a polynomial.
    pub fn var(&self, index: usize) -> Poly {
        let mut e = vec![0; self.vars.len()];
        e[index] = 1;
        Poly::from_terms([(Monomial(e), BigInt::one())])
    }

    pub fn var_named(&self, name: &str) -> Option<Poly> {
        self.vars.iter().position(|v| v == name).map(|i| self.var(i))
    }

    fn format_monomial(&self, m: &Monomial) -> String {
        let mut parts = Vec::new();
        for (name, &e) in self.vars.iter().zip(&m.0) {
            match e {
                0 => {}
                1 => parts.push(name.clone()),
                _ => parts.push(format!("{name}^{e}")),
            }
        }
        parts.join("*")
    }
}

impl Ring for PolyRing {
    type Elem = Poly;

    fn descriptor(&self) -> RingDescriptor {
        RingDescriptor::Polynomial(self.vars.to_vec())
    }

    fn zero(&self) -> Poly {
        Poly::default()
    }

    fn one(&self) -> Poly {
        self.constant(BigInt::one())
    }

    fn from_i64(&self, value: i64) -> Poly {
        self.constant(BigInt::from(value))
    }

    fn add(&self, a: &Poly, b: &Poly) -> Poly {
        let mut r = a.clone();
        for (m, c) in &b.terms {
            r.accumulate(m.clone(), c.clone());
        }
        r
    }

    fn sub(&self, a: &Poly, b: &Poly) -> Poly {
        let mut r = a.clone();
        for (m, c) in &b.terms {
            r.accumulate(m.clone(), -c);
        }
        r
    }

    fn mul(&self, a: &Poly, b: &Poly) -> Poly {
        let mut r = Poly::default();
        for (ma, ca) in &a.terms {
            for (mb, cb) in &b.terms {
                r.accumulate(ma.times(mb), ca * cb);
            }
        }
        r
    }

    fn neg(&self, a: &Poly) -> Poly {
        Poly { terms: a.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }

    fn is_zero(&self, a: &Poly) -> bool {
        a.is_zero()
    }

    fn contains(&self, a: &Poly) -> bool {
        a.terms.iter().all(|(m, c)| m.0.len() == self.vars.len() && !c.is_zero())
    }

    fn characteristic(&self) -> u64 {
        0
    }

    /// Graded-lex order, `*` for products: `a*d - b*c`.
    fn format(&self, a: &Poly) -> String {
        if a.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (m, c)) in a.terms().enumerate() {
            let mono = self.format_monomial(m);
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    out.push('-');
                }
            } else {
                out.push_str(if c.is_negative() { " - " } else { " + " });
            }
            if mono.is_empty() {
                let _ = write!(out, "{mag}");
            } else if mag.is_one() {
                out.push_str(&mono);
            } else {
                let _ = write!(out, "{mag}*{mono}");
            }
        }
        out
    }
}
