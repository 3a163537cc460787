//! Cross-algorithm agreement checks on a single matrix.

use std::fmt;

use crate::algorithm::Algorithm;
use crate::baselines::PERMUTATION_LIMIT;
use crate::error::Error;
use crate::linalg::{eval_matrix_poly, Matrix};
use crate::pipeline::{char_poly, determinant, verify_telescoping};
use crate::ring::{Counted, Ring};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail(String),
    /// The check does not apply; the tag says why (`hypothesis`, `field`,
    /// `size`, `characteristic`).
    Skipped(&'static str),
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Status::Pass => f.write_str("PASS"),
            Status::Fail(_) => f.write_str("FAIL"),
            Status::Skipped(why) => write!(f, "SKIPPED({why})"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub status: Status,
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:<24} {}", self.status.to_string(), self.name)?;
        if let Status::Fail(detail) = &self.status {
            write!(f, ": {detail}")?;
        }
        Ok(())
    }
}

fn compare<R: Ring>(ring: &R, a: &R::Elem, b: &R::Elem) -> Status {
    if a == b {
        Status::Pass
    } else {
        Status::Fail(format!("{} != {}", ring.format(a), ring.format(b)))
    }
}

fn skip_reason(e: &Error, n: usize) -> &'static str {
    match e {
        Error::HypothesisNotSatisfied { .. } => "hypothesis",
        _ if n > PERMUTATION_LIMIT => "size",
        Error::Refused { algorithm: "csanky", .. } => "characteristic",
        _ => "field",
    }
}

/// Runs every applicable check. Errors from the division-free formula itself
/// are failures; refusals of the baselines are skips.
pub fn run_checks<R: Ring>(ring: &R, a: &Matrix<R::Elem>) -> Vec<Check> {
    let mut out = Vec::new();
    let n = a.rows();
    let det = match determinant(ring, a) {
        Ok(d) => d,
        Err(e) => {
            out.push(Check { name: "formula determinant", status: Status::Fail(e.to_string()) });
            return out;
        }
    };
    let cp = char_poly(ring, a).expect("determinant succeeded on the same matrix");

    for (name, algo) in [
        ("det formula = permutation", Algorithm::Permutation),
        ("det formula = berkowitz", Algorithm::Berkowitz),
        ("det formula = chio", Algorithm::Chio),
        ("det formula = csanky", Algorithm::Csanky),
    ] {
        let status = match algo.check(ring, n).and_then(|_| algo.determinant(ring, a)) {
            Ok(other) => compare(ring, &det, &other),
            Err(e) => Status::Skipped(skip_reason(&e, n)),
        };
        out.push(Check { name, status });
    }

    for (name, algo) in [
        ("charpoly formula = berkowitz", Algorithm::Berkowitz),
        ("charpoly formula = csanky", Algorithm::Csanky),
    ] {
        let status = match algo.check(ring, n).and_then(|_| algo.char_poly(ring, a)) {
            Ok(other) if other == cp => Status::Pass,
            Ok(other) => Status::Fail(format!("{} != {}", cp.display(ring, "x"), other.display(ring, "x"))),
            Err(e) => Status::Skipped(skip_reason(&e, n)),
        };
        out.push(Check { name, status });
    }

    out.push(Check {
        name: "charpoly c_0 = (-1)^n det",
        status: compare(ring, &cp.determinant(ring), &det),
    });

    let cayley = match eval_matrix_poly(ring, cp.coeffs(), a) {
        Ok(m) if m == Matrix::zeros(ring, n, n) => Status::Pass,
        Ok(_) => Status::Fail("c(A) is not the zero matrix".into()),
        Err(e) => Status::Fail(e.to_string()),
    };
    out.push(Check { name: "cayley-hamilton c(A) = 0", status: cayley });

    let counted = Counted::new(ring.clone()).trapping_inverse();
    let lifted = a.map(|e| counted.lift(e.clone()));
    let division_free = match determinant(&counted, &lifted) {
        Ok(d) if counted.stats().inverses == 0 => compare(ring, &d.value, &det),
        Ok(_) => Status::Fail("formula called field inversion".into()),
        Err(e) => Status::Fail(e.to_string()),
    };
    out.push(Check { name: "formula is division-free", status: division_free });

    let telescoping = if n > PERMUTATION_LIMIT {
        Status::Skipped("size")
    } else {
        match verify_telescoping(ring, a) {
            Ok(true) => Status::Pass,
            Ok(false) => Status::Fail("identity violated".into()),
            Err(e) => Status::Skipped(skip_reason(&e, n)),
        }
    };
    out.push(Check { name: "telescoping inverse-minor product", status: telescoping });
    out
}

pub fn all_passed(checks: &[Check]) -> bool {
    checks.iter().all(|c| !matches!(c.status, Status::Fail(_)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::random::{random_matrix, rng_for};
    use crate::ring::{Rationals, Zmod};

    #[test]
    fn identity_over_rationals_all_pass() {
        let q = Rationals;
        let checks = run_checks(&q, &Matrix::identity(&q, 5));
        for c in &checks {
            assert_eq!(c.status, Status::Pass, "{c}");
        }
    }

    #[test]
    fn swap_skips_telescoping() {
        let q = Rationals;
        let swap = Matrix::from_fn(2, 2, |i, j| q.from_i64((i != j) as i64));
        let checks = run_checks(&q, &swap);
        let tele = checks.iter().find(|c| c.name.starts_with("telescoping")).unwrap();
        assert_eq!(tele.status, Status::Skipped("hypothesis"));
        assert!(checks.iter().filter(|c| c.name.starts_with("det")).all(|c| c.status == Status::Pass));
        assert!(all_passed(&checks));
    }

    #[test]
    fn zero_divisor_ring_skips_field_checks() {
        let z6 = Zmod::new(6).unwrap();
        let a = random_matrix(&z6, 4, &mut rng_for(11, 4));
        let checks = run_checks(&z6, &a);
        let status = |name: &str| checks.iter().find(|c| c.name == name).unwrap().status.clone();
        assert_eq!(status("det formula = permutation"), Status::Pass);
        assert_eq!(status("det formula = berkowitz"), Status::Pass);
        assert_eq!(status("det formula = chio"), Status::Skipped("field"));
        assert_eq!(status("det formula = csanky"), Status::Skipped("characteristic"));
        assert_eq!(status("telescoping inverse-minor product"), Status::Skipped("field"));
        assert!(all_passed(&checks));
    }

    #[test]
    fn line_format() {
        let c = Check { name: "x", status: Status::Skipped("hypothesis") };
        assert_eq!(c.to_string(), "SKIPPED(hypothesis)      x");
    }
}
