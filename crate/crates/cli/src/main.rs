use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use ringdet::checks::{all_passed, run_checks};
use ringdet::io::{EntryCodec, MatrixDocument};
use ringdet::random::{random_matrix, rng_for, Sample};
use ringdet::report::{run_scaling, to_csv, to_json, ScalingRow};
use ringdet::{par, with_ring, Algorithm, Error, ErrorKind, Matrix, RingDescriptor};

/// Exact determinants and characteristic polynomials over commutative rings.
#[derive(Parser, Debug)]
#[command(name = "ringdet", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the determinant.
    Det(Compute),
    /// Print the characteristic polynomial det(xI - A).
    Charpoly(Compute),
    /// Cross-check every applicable algorithm on one matrix.
    Verify(Verify),
    /// Count operations and stage depth on seeded random matrices.
    Bench(Bench),
}

#[derive(Args, Debug)]
struct Source {
    /// Matrix file in the JSON matrix format.
    #[arg(conflicts_with = "matrix")]
    file: Option<PathBuf>,
    /// Inline integer matrix, e.g. "[[1,2],[3,4]]".
    #[arg(long)]
    matrix: Option<String>,
    /// int | mod:<m> | rat | poly:<v1,...>
    #[arg(long)]
    ring: Option<String>,
    /// Echo the parsed matrix as canonical JSON and exit.
    #[arg(long)]
    emit_matrix: bool,
}

#[derive(Args, Debug)]
struct Compute {
    #[command(flatten)]
    source: Source,
    #[arg(long, default_value = "formula")]
    algo: String,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args, Debug)]
struct Verify {
    #[command(flatten)]
    source: Source,
    /// Use a seeded random n x n matrix instead of an input.
    #[arg(long, conflicts_with_all = ["file", "matrix"])]
    random: Option<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args, Debug)]
struct Bench {
    /// Comma-separated algorithm names.
    #[arg(long, default_value = "formula")]
    algo: String,
    /// Comma-separated ascending sizes.
    #[arg(long, value_delimiter = ',', required = true)]
    sizes: Vec<usize>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value = "int")]
    ring: String,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

fn parse_ring(text: &str) -> Result<RingDescriptor, Error> {
    text.parse().map_err(Error::Ring)
}

enum Input {
    Doc(MatrixDocument),
    Random { n: usize, seed: u64 },
}

/// Settles the ring and the matrix source. Inline matrices are integer-only;
/// a ring named both in the file and on the command line must agree.
fn resolve(source: &Source, random: Option<(usize, u64)>) -> Result<(RingDescriptor, Input), Error> {
    let flag = source.ring.as_deref().map(parse_ring).transpose()?;
    if let Some((n, seed)) = random {
        return Ok((flag.unwrap_or(RingDescriptor::Integer), Input::Random { n, seed }));
    }
    if let Some(inline) = &source.matrix {
        if matches!(flag, Some(ref r) if *r != RingDescriptor::Integer) {
            return Err(Error::Usage("--matrix takes integer entries only; use a matrix file for other rings".into()));
        }
        return Ok((RingDescriptor::Integer, Input::Doc(MatrixDocument::parse_rows(inline)?)));
    }
    let path = source
        .file
        .as_ref()
        .ok_or_else(|| Error::Usage("no matrix given: pass a FILE, --matrix or --random".into()))?;
    let text = std::fs::read_to_string(path).map_err(|e| Error::Usage(format!("cannot read {}: {e}", path.display())))?;
    let doc = MatrixDocument::parse(&text)?;
    let ring = match (flag, doc.descriptor()?) {
        (Some(f), Some(d)) if f != d => {
            return Err(Error::Usage(format!("--ring {f} disagrees with the file's ring {d}")));
        }
        (Some(r), _) | (None, Some(r)) => r,
        (None, None) => RingDescriptor::Integer,
    };
    Ok((ring, Input::Doc(doc)))
}

fn load<R: Sample + EntryCodec>(ring: &R, input: &Input) -> Result<Matrix<R::Elem>, Error> {
    let m = match input {
        Input::Doc(doc) => doc.decode(ring)?,
        Input::Random { n, seed } => random_matrix(ring, *n, &mut rng_for(*seed, *n)),
    };
    if !m.is_square() {
        return Err(Error::Dimension(format!("matrix is {}x{}, not square", m.rows(), m.cols())));
    }
    Ok(m)
}

fn compute<R: Sample + EntryCodec>(ring: &R, input: &Input, cmd: &Command) -> Result<(String, bool), Error> {
    let a = load(ring, input)?;
    let n = a.rows();
    match cmd {
        Command::Det(c) | Command::Charpoly(c) if c.source.emit_matrix => {
            Ok((MatrixDocument::encode(ring, &a).to_json(), true))
        }
        Command::Verify(v) if v.source.emit_matrix => Ok((MatrixDocument::encode(ring, &a).to_json(), true)),
        Command::Det(c) => {
            let algo: Algorithm = c.algo.parse()?;
            algo.check(ring, n)?;
            let d = ring.format(&algo.determinant(ring, &a)?);
            Ok(match c.format {
                Format::Json => {
                    let v = json!({"ring": ring.descriptor().to_string(), "algo": algo.name(), "n": n, "determinant": d});
                    (v.to_string(), true)
                }
                _ => (d, true),
            })
        }
        Command::Charpoly(c) => {
            let algo: Algorithm = c.algo.parse()?;
            algo.check(ring, n)?;
            let cp = algo.char_poly(ring, &a)?;
            Ok(match c.format {
                Format::Json => {
                    let coeffs: Vec<String> = cp.coeffs().iter().map(|e| ring.format(e)).collect();
                    let v = json!({
                        "ring": ring.descriptor().to_string(),
                        "algo": algo.name(),
                        "n": n,
                        "charpoly": cp.display(ring, "x"),
                        "coefficients": coeffs,
                    });
                    (v.to_string(), true)
                }
                _ => (cp.display(ring, "x"), true),
            })
        }
        Command::Verify(v) => {
            let checks = run_checks(ring, &a);
            let ok = all_passed(&checks);
            let text = match v.format {
                Format::Json => {
                    let rows: Vec<_> = checks.iter().map(|c| json!({"check": c.name, "status": c.status.to_string()})).collect();
                    json!({"ring": ring.descriptor().to_string(), "n": n, "passed": ok, "checks": rows}).to_string()
                }
                _ => checks.iter().map(|c| c.to_string()).collect::<Vec<_>>().join("\n"),
            };
            Ok((text, ok))
        }
        Command::Bench(_) => unreachable!("bench has no matrix input"),
    }
}

fn bench(b: &Bench) -> Result<String, Error> {
    let ring = parse_ring(&b.ring)?;
    let algos = b.algo.split(',').map(str::parse).collect::<Result<Vec<Algorithm>, _>>()?;
    with_ring!(&ring, |r| {
        for algo in &algos {
            for &n in &b.sizes {
                algo.check(&r, n)?;
            }
        }
        let mut rows: Vec<ScalingRow> = Vec::new();
        for algo in &algos {
            rows.extend(run_scaling(*algo, &b.sizes, &r, b.seed)?);
        }
        Ok(match b.format {
            Format::Json => to_json(&rows),
            _ => to_csv(&rows).trim_end().to_string(),
        })
    })
}

fn run(cli: &Cli) -> Result<(String, bool), Error> {
    match &cli.command {
        Command::Bench(b) => bench(b).map(|s| (s, true)),
        cmd @ (Command::Det(c) | Command::Charpoly(c)) => {
            let (ring, input) = resolve(&c.source, None)?;
            with_ring!(&ring, |r| compute(&r, &input, cmd))
        }
        cmd @ Command::Verify(v) => {
            let (ring, input) = resolve(&v.source, v.random.map(|n| (n, v.seed)))?;
            with_ring!(&ring, |r| compute(&r, &input, cmd))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match par::with_thread_cap(par::thread_cap_from_env(), || run(&cli)) {
        Ok((text, ok)) => {
            println!("{text}");
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(e) => {
            eprintln!("ringdet: {e}");
            ExitCode::from(match e.kind() {
                ErrorKind::Usage => 2,
                ErrorKind::Refusal => 3,
            })
        }
    }
}
