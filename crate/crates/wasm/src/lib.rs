//! Browser bindings. Every export takes and returns plain strings; results are
//! JSON objects `{"ok": true, ...}` or `{"ok": false, "error": ..., "code": 2|3}`
//! with the CLI's exit-code meaning.

use serde::Serialize;
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use ringdet::io::{EntryCodec, MatrixDocument};
use ringdet::random::Sample;
use ringdet::report::{run_scaling, ScalingRow};
use ringdet::ring::Counted;
use ringdet::{with_ring, Algorithm, Error, ErrorKind, Matrix, RingDescriptor};

#[derive(Serialize)]
struct Failure {
    ok: bool,
    error: String,
    code: u8,
}

fn respond(result: Result<Value, Error>) -> String {
    match result {
        Ok(mut v) => {
            v["ok"] = Value::Bool(true);
            v.to_string()
        }
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::Usage => 2,
                ErrorKind::Refusal => 3,
            };
            serde_json::to_string(&Failure { ok: false, error: e.to_string(), code }).expect("failure serializes")
        }
    }
}

fn parse_ring(ring: &str) -> Result<RingDescriptor, Error> {
    ring.parse().map_err(Error::Ring)
}

fn decode<R: EntryCodec>(ring: &R, rows: &str) -> Result<Matrix<R::Elem>, Error> {
    let m = MatrixDocument::parse_rows(rows)?.decode(ring)?;
    if !m.is_square() {
        return Err(Error::Dimension(format!("matrix is {}x{}, not square", m.rows(), m.cols())));
    }
    Ok(m)
}

fn det_in<R: EntryCodec>(ring: &R, rows: &str, algo: Algorithm) -> Result<Value, Error> {
    let a = decode(ring, rows)?;
    algo.check(ring, a.rows())?;
    let counted = Counted::new(ring.clone());
    let det = algo.determinant(&counted, &a.map(|e| counted.lift(e.clone())))?;
    Ok(json!({
        "determinant": ring.format(&det.value),
        "stats": counted.stats(),
    }))
}

fn charpoly_in<R: EntryCodec>(ring: &R, rows: &str, algo: Algorithm) -> Result<Value, Error> {
    let a = decode(ring, rows)?;
    algo.check(ring, a.rows())?;
    let cp = algo.char_poly(ring, &a)?;
    Ok(json!({
        "charpoly": cp.display(ring, "x"),
        "coefficients": cp.coeffs().iter().map(|c| ring.format(c)).collect::<Vec<_>>(),
    }))
}

/// Determinant of a row-list matrix (`[[1,2],[3,4]]`, entries in the matrix
/// file format of `ring`), with the operation counts of the run.
#[wasm_bindgen]
pub fn determinant(ring: &str, rows: &str, algo: &str) -> String {
    respond(parse_ring(ring).and_then(|desc| {
        let algo: Algorithm = algo.parse()?;
        with_ring!(&desc, |r| det_in(&r, rows, algo))
    }))
}

/// Characteristic polynomial `det(xI - A)`.
#[wasm_bindgen]
pub fn charpoly(ring: &str, rows: &str, algo: &str) -> String {
    respond(parse_ring(ring).and_then(|desc| {
        let algo: Algorithm = algo.parse()?;
        with_ring!(&desc, |r| charpoly_in(&r, rows, algo))
    }))
}

fn scaling_in<R: Sample>(ring: &R, algos: &[Algorithm], sizes: &[usize], seed: u64) -> Result<Vec<ScalingRow>, Error> {
    for algo in algos {
        for &n in sizes {
            algo.check(ring, n)?;
        }
    }
    let mut rows = Vec::new();
    for &algo in algos {
        rows.extend(run_scaling(algo, sizes, ring, seed)?);
    }
    Ok(rows)
}

/// Operation counts and depth for comma-separated `algos` over
/// comma-separated ascending `sizes`; `rows` holds one record per run.
#[wasm_bindgen]
pub fn scaling(ring: &str, algos: &str, sizes: &str, seed: u32) -> String {
    respond((|| {
        let desc = parse_ring(ring)?;
        let algos = algos.split(',').map(str::parse).collect::<Result<Vec<Algorithm>, _>>()?;
        let sizes = sizes
            .split(',')
            .map(|s| s.trim().parse::<usize>().map_err(|_| Error::Usage(format!("bad size `{s}`"))))
            .collect::<Result<Vec<_>, _>>()?;
        let rows = with_ring!(&desc, |r| scaling_in(&r, &algos, &sizes, u64::from(seed)))?;
        Ok(json!({ "rows": rows }))
    })())
}
