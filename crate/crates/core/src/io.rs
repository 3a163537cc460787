//! JSON matrix files:
//!
//! ```json
//! {"ring":"int","rows":2,"cols":2,"entries":[[1,2],[3,4]]}
//! ```
//!
//! Integers are numbers or decimal strings, residues are integers (reduced
//! on input), rationals are `"p/q"` strings, and polynomials are term lists
//! `[[coeff, [e1, e2, ...]], ...]`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::ring::{Integers, Monomial, Poly, PolyRing, Rationals, Ring, RingDescriptor, Zmod};

/// Conversion between ring elements and JSON values.
pub trait EntryCodec: Ring {
    fn decode_entry(&self, value: &Value) -> std::result::Result<Self::Elem, String>;
    fn encode_entry(&self, elem: &Self::Elem) -> Value;
}

fn parse_bigint(value: &Value) -> std::result::Result<BigInt, String> {
    match value {
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(BigInt::from(i))
            } else if let Some(u) = n.as_u64() {
                Ok(BigInt::from(u))
            } else {
                Err(format!("{n} is not an integer (write large integers as decimal strings)"))
            }
        }
        Value::String(s) => s.trim().parse().map_err(|_| format!("`{s}` is not a decimal integer")),
        other => Err(format!("expected an integer, found {other}")),
    }
}

fn bigint_value(v: &BigInt) -> Value {
    match v.to_i64() {
        Some(i) => Value::from(i),
        None => Value::String(v.to_string()),
    }
}

impl EntryCodec for Integers {
    fn decode_entry(&self, value: &Value) -> std::result::Result<BigInt, String> {
        parse_bigint(value)
    }

    fn encode_entry(&self, elem: &BigInt) -> Value {
        bigint_value(elem)
    }
}

impl EntryCodec for Zmod {
    fn decode_entry(&self, value: &Value) -> std::result::Result<u64, String> {
        let v = parse_bigint(value)?;
        let m = BigInt::from(self.modulus());
        let r = ((v % &m) + &m) % &m;
        Ok(r.to_u64().expect("residue below modulus"))
    }

    fn encode_entry(&self, elem: &u64) -> Value {
        Value::from(*elem)
    }
}

impl EntryCodec for Rationals {
    fn decode_entry(&self, value: &Value) -> std::result::Result<BigRational, String> {
        if let Value::String(s) = value {
            if let Some((p, q)) = s.split_once('/') {
                let p: BigInt = p.trim().parse().map_err(|_| format!("bad numerator in `{s}`"))?;
                let q: BigInt = q.trim().parse().map_err(|_| format!("bad denominator in `{s}`"))?;
                if q.is_zero() {
                    return Err(format!("zero denominator in `{s}`"));
                }
                return Ok(BigRational::new(p, q));
            }
        }
        parse_bigint(value).map(BigRational::from_integer)
    }

    fn encode_entry(&self, elem: &BigRational) -> Value {
        Value::String(self.format(elem))
    }
}

impl EntryCodec for PolyRing {
    fn decode_entry(&self, value: &Value) -> std::result::Result<Poly, String> {
        let terms = match value {
            Value::Array(terms) => terms,
            Value::Number(_) => return parse_bigint(value).map(|c| self.constant(c)),
            other => return Err(format!("expected a term list [[coeff, [exponents]], ...], found {other}")),
        };
        let mut out = Vec::with_capacity(terms.len());
        for (t, term) in terms.iter().enumerate() {
            let pair = term.as_array().filter(|p| p.len() == 2).ok_or_else(|| format!("term {t} is not [coeff, [exponents]]"))?;
            let coeff = parse_bigint(&pair[0]).map_err(|e| format!("term {t}: {e}"))?;
            let exps = pair[1].as_array().ok_or_else(|| format!("term {t}: exponents must be an array"))?;
            if exps.len() != self.vars().len() {
                return Err(format!("term {t}: {} exponents for {} variables", exps.len(), self.vars().len()));
            }
            let exps = exps
                .iter()
                .map(|e| e.as_u64().and_then(|e| u32::try_from(e).ok()).ok_or_else(|| format!("term {t}: bad exponent {e}")))
                .collect::<std::result::Result<Vec<u32>, String>>()?;
            out.push((Monomial(exps), coeff));
        }
        Ok(Poly::from_terms(out))
    }

    fn encode_entry(&self, elem: &Poly) -> Value {
        Value::Array(
            elem.terms()
                .map(|(m, c)| Value::Array(vec![bigint_value(c), Value::from(m.0.clone())]))
                .collect(),
        )
    }
}

/// On-disk matrix. `ring` may be omitted when the ring is given elsewhere.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MatrixDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ring: Option<String>,
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<Value>>,
}

impl MatrixDocument {
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text)
            .map_err(|e| Error::parse(format!("line {} column {}", e.line(), e.column()), e.to_string()))
    }

    /// Bare row list, as accepted inline: `[[1,2],[3,4]]`.
    pub fn parse_rows(text: &str) -> Result<Self> {
        let entries: Vec<Vec<Value>> = serde_json::from_str(text)
            .map_err(|e| Error::parse(format!("column {}", e.column()), e.to_string()))?;
        let rows = entries.len();
        let cols = entries.first().map_or(0, Vec::len);
        Ok(MatrixDocument { ring: None, rows, cols, entries })
    }

    pub fn descriptor(&self) -> Result<Option<RingDescriptor>> {
        self.ring
            .as_deref()
            .map(|r| r.parse().map_err(|e: crate::error::RingError| Error::parse("ring", e.to_string())))
            .transpose()
    }

    pub fn decode<R: EntryCodec>(&self, ring: &R) -> Result<Matrix<R::Elem>> {
        if self.entries.len() != self.rows {
            return Err(Error::parse("entries", format!("{} rows listed, header says {}", self.entries.len(), self.rows)));
        }
        let mut flat = Vec::with_capacity(self.rows * self.cols);
        for (i, row) in self.entries.iter().enumerate() {
            if row.len() != self.cols {
                return Err(Error::parse(format!("entries[{i}]"), format!("{} entries, header says {}", row.len(), self.cols)));
            }
            for (j, v) in row.iter().enumerate() {
                flat.push(ring.decode_entry(v).map_err(|m| Error::parse(format!("entries[{i}][{j}]"), m))?);
            }
        }
        Matrix::from_vec(self.rows, self.cols, flat)
    }

    pub fn encode<R: EntryCodec>(ring: &R, m: &Matrix<R::Elem>) -> Self {
        MatrixDocument {
            ring: Some(ring.descriptor().to_string()),
            rows: m.rows(),
            cols: m.cols(),
            entries: (0..m.rows()).map(|i| m.row(i).iter().map(|e| ring.encode_entry(e)).collect()).collect(),
        }
    }

    /// Canonical single-line form.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("documents always serialize")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn integer_document() {
        let doc = MatrixDocument::parse(r#"{"ring":"int","rows":2,"cols":2,"entries":[[1,"2"],[3,-4]]}"#).unwrap();
        assert_eq!(doc.descriptor().unwrap(), Some(RingDescriptor::Integer));
        let m = doc.decode(&Integers).unwrap();
        assert_eq!(m.get(0, 1), &BigInt::from(2));
        assert_eq!(MatrixDocument::encode(&Integers, &m).to_json(), r#"{"ring":"int","rows":2,"cols":2,"entries":[[1,2],[3,-4]]}"#);
    }

    #[test]
    fn big_integers_as_strings() {
        let doc = MatrixDocument::parse_rows(r#"[["123456789012345678901234567890"]]"#).unwrap();
        let m = doc.decode(&Integers).unwrap();
        let back = MatrixDocument::encode(&Integers, &m);
        assert_eq!(back.entries[0][0], Value::String("123456789012345678901234567890".into()));
        assert!(MatrixDocument::parse_rows("[[1.5]]").unwrap().decode(&Integers).is_err());
    }

    #[test]
    fn rationals_and_residues() {
        let doc = MatrixDocument::parse_rows(r#"[["2/4", 3], ["-1/3", "5"]]"#).unwrap();
        let m = doc.decode(&Rationals).unwrap();
        assert_eq!(m.get(0, 0), &Rationals.ratio(1, 2));
        assert_eq!(MatrixDocument::encode(&Rationals, &m).entries[0], vec![Value::from("1/2"), Value::from("3")]);
        assert!(MatrixDocument::parse_rows(r#"[["1/0"]]"#).unwrap().decode(&Rationals).is_err());
        let z4 = Zmod::new(4).unwrap();
        let m = MatrixDocument::parse_rows("[[7, -1]]").unwrap().decode(&z4).unwrap();
        assert_eq!(m.entries(), [3, 3]);
    }

    #[test]
    fn polynomial_terms() {
        let p = PolyRing::new(vec!["a".into(), "b".into()]);
        let m = MatrixDocument::parse_rows("[[[[1,[1,0]],[-2,[0,2]]], 5]]").unwrap().decode(&p).unwrap();
        assert_eq!(p.format(m.get(0, 0)), "-2*b^2 + a");
        assert_eq!(p.format(m.get(0, 1)), "5");
        let bad = MatrixDocument::parse_rows("[[[[1,[1]]]]]").unwrap().decode(&p).unwrap_err();
        assert!(matches!(bad, Error::Parse { ref location, .. } if location == "entries[0][0]"), "{bad}");
    }

    #[test]
    fn shape_errors_are_located() {
        let doc = MatrixDocument::parse(r#"{"rows":2,"cols":2,"entries":[[1,2],[3]]}"#).unwrap();
        let e = doc.decode(&Integers).unwrap_err();
        assert!(matches!(e, Error::Parse { ref location, .. } if location == "entries[1]"));
        let e = MatrixDocument::parse("{\"rows\": 2,\n \"cols\": }").unwrap_err();
        assert!(e.to_string().contains("line 2"), "{e}");
    }
}
