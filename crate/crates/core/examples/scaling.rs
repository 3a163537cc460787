//! Prints a scaling table for the formula and Berkowitz over Z/101.

use ringdet::report::{fit_loglog_slope, run_scaling, to_csv};
use ringdet::ring::Zmod;
use ringdet::Algorithm;

fn main() {
    let ring = Zmod::new(101).unwrap();
    for algo in [Algorithm::Formula, Algorithm::Berkowitz] {
        let rows = run_scaling(algo, &[8, 16, 32, 64], &ring, 2024).unwrap();
        print!("{}", to_csv(&rows));
        println!("slope {:.2}", fit_loglog_slope(&rows).unwrap());
    }
}
