//! Run the full law suite on one backend and print the report.
//!
//! `cargo run --release --example law_suite -- [backend] [seed]`
//! defaults to `gauss` with seed 42.

use qcat::laws::{run_suite, LawBounds};
use qcat::scalar::{Bool, Cx64, F2, F5, Gauss, Rat, Sqrt2Ext};

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let backend = args.first().map(String::as_str).unwrap_or("gauss");
    let seed: u64 = args.get(1).and_then(|s| s.parse().ok()).unwrap_or(42);
    let bounds = LawBounds {
        max_size: 3,
        trials: 100,
    };
    let report = match backend {
        "bool" => run_suite::<Bool>(&bounds, seed),
        "rat" => run_suite::<Rat>(&bounds, seed),
        "gauss" => run_suite::<Gauss>(&bounds, seed),
        "f2" => run_suite::<F2>(&bounds, seed),
        "f5" => run_suite::<F5>(&bounds, seed),
        "qsqrt2" => run_suite::<Sqrt2Ext>(&bounds, seed),
        "cplx64" => run_suite::<Cx64>(&bounds, seed),
        other => {
            eprintln!("unknown backend `{other}`");
            std::process::exit(2);
        }
    };
    print!("{report}");
    for f in report.failures() {
        if let Some(w) = &f.witness {
            eprintln!("--- {} ---\n{w}", f.id);
        }
    }
    if !report.failures().is_empty() {
        std::process::exit(3);
    }
}
