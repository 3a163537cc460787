//! Instrumented scaling runs: operation counts and stage depth per size.

use serde::Serialize;

use crate::algorithm::Algorithm;
use crate::error::{Error, Result};
use crate::random::{random_matrix, rng_for, Sample};
use crate::ring::Counted;

/// One measured run. `ms` is wall time and purely informational.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ScalingRow {
    pub algo: String,
    pub n: usize,
    pub adds: u64,
    pub subs: u64,
    pub muls: u64,
    pub depth: u32,
    pub ms: f64,
}

#[cfg(not(target_arch = "wasm32"))]
fn timed<T>(f: impl FnOnce() -> T) -> (T, f64) {
    let start = std::time::Instant::now();
    let out = f();
    (out, (start.elapsed().as_secs_f64() * 1e6).round() / 1e3)
}

#[cfg(target_arch = "wasm32")]
fn timed<T>(f: impl FnOnce() -> T) -> (T, f64) {
    (f(), 0.0)
}

/// Runs `algorithm` on one seeded random matrix per size, each under its own
/// counters.
pub fn run_scaling<R: Sample>(algorithm: Algorithm, sizes: &[usize], ring: &R, seed: u64) -> Result<Vec<ScalingRow>> {
    if sizes.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::Usage("sizes must be sorted ascending".into()));
    }
    for &n in sizes {
        algorithm.check(ring, n)?;
    }
    sizes
        .iter()
        .map(|&n| {
            let plain = random_matrix(ring, n, &mut rng_for(seed, n));
            let counted = Counted::new(ring.clone());
            let lifted = plain.map(|e| counted.lift(e.clone()));
            let (det, ms) = timed(|| algorithm.determinant(&counted, &lifted));
            det?;
            let stats = counted.stats();
            Ok(ScalingRow {
                algo: algorithm.name().to_string(),
                n,
                adds: stats.adds,
                subs: stats.subs,
                muls: stats.muls,
                depth: stats.depth,
                ms,
            })
        })
        .collect()
}

/// CSV with header `algo,n,adds,subs,muls,depth,ms`.
pub fn to_csv(rows: &[ScalingRow]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    for row in rows {
        w.serialize(row).expect("in-memory csv write");
    }
    if rows.is_empty() {
        w.write_record(["algo", "n", "adds", "subs", "muls", "depth", "ms"]).expect("in-memory csv write");
    }
    String::from_utf8(w.into_inner().expect("flush")).expect("csv is utf-8")
}

pub fn to_json(rows: &[ScalingRow]) -> String {
    serde_json::to_string_pretty(rows).expect("rows serialize")
}

/// Least-squares slope of `ln(muls)` against `ln(n)`, rounded to two
/// decimals.
pub fn fit_loglog_slope(rows: &[ScalingRow]) -> Result<f64> {
    if rows.len() < 3 {
        return Err(Error::Usage(format!("slope fit needs at least 3 rows, got {}", rows.len())));
    }
    if rows.iter().any(|r| r.algo != rows[0].algo) {
        return Err(Error::Usage("slope fit needs rows from a single algorithm".into()));
    }
    if rows.iter().any(|r| r.n == 0 || r.muls == 0) {
        return Err(Error::Usage("slope fit needs positive n and multiplication counts".into()));
    }
    let pts: Vec<(f64, f64)> = rows.iter().map(|r| ((r.n as f64).ln(), (r.muls as f64).ln())).collect();
    let k = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / k;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / k;
    let sxy: f64 = pts.iter().map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = pts.iter().map(|(x, _)| (x - mx) * (x - mx)).sum();
    if sxx == 0.0 {
        return Err(Error::Usage("slope fit needs at least two distinct sizes".into()));
    }
    Ok((sxy / sxx * 100.0).round() / 100.0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{Integers, Zmod};

    fn synthetic(power: u32) -> Vec<ScalingRow> {
        [2usize, 4, 8, 16]
            .iter()
            .map(|&n| ScalingRow {
                algo: "synthetic".into(),
                n,
                adds: 0,
                subs: 0,
                muls: (n as u64).pow(power),
                depth: 1,
                ms: 0.0,
            })
            .collect()
    }

    #[test]
    fn exact_slopes() {
        assert_eq!(fit_loglog_slope(&synthetic(4)).unwrap(), 4.0);
        assert_eq!(fit_loglog_slope(&synthetic(3)).unwrap(), 3.0);
        assert!(fit_loglog_slope(&synthetic(3)[..2]).is_err());
    }

    #[test]
    fn csv_header_and_rows() {
        let rows = run_scaling(Algorithm::Formula, &[1, 2], &Integers, 7).unwrap();
        let text = to_csv(&rows);
        let mut lines = text.lines();
        assert_eq!(lines.next(), Some("algo,n,adds,subs,muls,depth,ms"));
        assert!(lines.next().unwrap().starts_with("formula,1,"));
        assert_eq!(to_csv(&[]).trim(), "algo,n,adds,subs,muls,depth,ms");
    }

    #[test]
    fn guards_and_order() {
        assert!(matches!(run_scaling(Algorithm::Permutation, &[12], &Integers, 1), Err(Error::Refused { .. })));
        assert!(matches!(run_scaling(Algorithm::Formula, &[4, 2], &Integers, 1), Err(Error::Usage(_))));
        let z4 = Zmod::new(4).unwrap();
        assert!(run_scaling(Algorithm::Chio, &[2], &z4, 1).is_err());
    }

    #[test]
    fn one_by_one_formula() {
        let rows = run_scaling(Algorithm::Formula, &[1], &Integers, 3).unwrap();
        assert_eq!(rows[0].n, 1);
        assert!(rows[0].depth >= 1 && rows[0].depth <= 4, "{:?}", rows[0]);
    }

    #[test]
    fn depth_over_log_squared_is_bounded() {
        let z101 = Zmod::new(101).unwrap();
        let rows = run_scaling(Algorithm::Formula, &[4, 8, 16, 32], &z101, 5).unwrap();
        let norm: Vec<f64> = rows
            .iter()
            .map(|r| r.depth as f64 / f64::from((r.n as f64).log2().ceil() as u32).powi(2))
            .collect();
        assert!(norm.iter().all(|&c| c <= 12.0), "{norm:?}");
        assert!(norm.iter().all(|&c| c <= 2.0 * norm[0]), "{norm:?}");
    }
}
