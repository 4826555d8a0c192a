//! Thin command-line front end over the qcat library.
//!
//! Exit codes: 0 success, 1 evaluation error, 2 usage/syntax error,
//! 3 law failure.

use qcat::dsl::{eval, parse, pretty, Workspace};
use qcat::error::QcatError;
use qcat::format::{parse_arrow, peek_backend, print_arrow};
use qcat::laws::{all_laws, run_suite_filtered, LawBounds, LawGroup};
use qcat::mixed::{build_cloner, verify_cloner, CloneOutcome};
use qcat::object::split_labels;
use qcat::scalar::{Bool, Cx64, F2, F5, Gauss, Rat, Scalar, Sqrt2Ext};
use qcat::{Arrow, FinObject};
use std::collections::BTreeMap;
use std::io::{BufRead, Write};
use std::process::ExitCode;

const USAGE: &str = "\
qcat: exact matrix categories over involutive commutative semirings

usage:
  qcat laws list
  qcat laws run --backend <id> [--max-size K] [--trials N] [--seed S] [--law <id>] [--witness-dir D]
  qcat unit-laws --backend <id> [--trials N] [--seed S]
  qcat tensor-laws --backend <id> [--trials N] [--seed S]
  qcat biprod-laws --backend <id> [--trials N] [--seed S]
  qcat born --input <arrow-file>
  qcat spectra --input <arrow-file>
  qcat clone-check --backend <id> --object <labels> [--candidate <arrow-file>]
  qcat eval --backend <id> [--workspace <dir>] \"<term>\"
  qcat repl --backend <id> [--workspace <dir>]

backends: bool | rat | gauss | f2 | f5 | qsqrt2 | cplx64";

/// Instantiate a generic entry point at the backend named on the command
/// line.
macro_rules! dispatch {
    ($backend:expr, $func:ident ( $($arg:expr),* )) => {
        match $backend {
            "bool" => $func::<Bool>($($arg),*),
            "rat" => $func::<Rat>($($arg),*),
            "gauss" => $func::<Gauss>($($arg),*),
            "f2" => $func::<F2>($($arg),*),
            "f5" => $func::<F5>($($arg),*),
            "qsqrt2" => $func::<Sqrt2Ext>($($arg),*),
            "cplx64" => $func::<Cx64>($($arg),*),
            other => Err(QcatError::UnknownBackend(other.to_string())),
        }
    };
}

struct Args {
    flags: BTreeMap<String, String>,
    positional: Vec<String>,
}

fn parse_args(args: &[String]) -> Result<Args, String> {
    let mut flags = BTreeMap::new();
    let mut positional = Vec::new();
    let mut i = 0;
    while i < args.len() {
        if let Some(name) = args[i].strip_prefix("--") {
            let value = args
                .get(i + 1)
                .ok_or_else(|| format!("flag --{name} needs a value"))?;
            flags.insert(name.to_string(), value.clone());
            i += 2;
        } else {
            positional.push(args[i].clone());
            i += 1;
        }
    }
    Ok(Args { flags, positional })
}

impl Args {
    fn backend(&self) -> Result<&str, String> {
        self.flags
            .get("backend")
            .map(String::as_str)
            .ok_or_else(|| "missing --backend".into())
    }

    fn u64_flag(&self, name: &str, default: u64) -> Result<u64, String> {
        match self.flags.get(name) {
            Some(v) => v.parse().map_err(|_| format!("--{name} expects an integer")),
            None => Ok(default),
        }
    }

    fn bounds(&self) -> Result<LawBounds, String> {
        Ok(LawBounds {
            max_size: self.u64_flag("max-size", 3)? as usize,
            trials: self.u64_flag("trials", 200)? as u32,
        })
    }
}

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().skip(1).collect();
    match run(&argv) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(argv: &[String]) -> Result<ExitCode, String> {
    let Some(command) = argv.first().map(String::as_str) else {
        println!("{USAGE}");
        return Ok(ExitCode::from(2));
    };
    let args = parse_args(&argv[1..])?;
    match command {
        "laws" => laws_command(&args),
        "unit-laws" => group_laws(&args, &[LawGroup::Adjoint, LawGroup::Unit]),
        "tensor-laws" => group_laws(&args, &[LawGroup::Tensor]),
        "biprod-laws" => group_laws(&args, &[LawGroup::Biproduct, LawGroup::Interaction]),
        "born" => born_command(&args).map_err(|e| e.to_string()),
        "spectra" => spectra_command(&args).map_err(|e| e.to_string()),
        "clone-check" => {
            let backend = args.backend()?;
            dispatch!(backend, clone_check(&args)).map_err(|e| e.to_string())
        }
        "eval" => {
            let backend = args.backend()?;
            match dispatch!(backend, eval_command(&args)) {
                Ok(code) => Ok(code),
                Err(e @ QcatError::SyntaxError { .. }) => {
                    eprintln!("error: {e}");
                    Ok(ExitCode::from(2))
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    Ok(ExitCode::from(1))
                }
            }
        }
        "repl" => {
            let backend = args.backend()?;
            dispatch!(backend, repl_command(&args)).map_err(|e| e.to_string())
        }
        "help" | "--help" | "-h" => {
            println!("{USAGE}");
            Ok(ExitCode::SUCCESS)
        }
        other => Err(format!("unknown command `{other}`\n{USAGE}")),
    }
}

fn laws_command(args: &Args) -> Result<ExitCode, String> {
    match args.positional.first().map(String::as_str) {
        Some("list") => {
            for law in all_laws::<Rat>() {
                println!("{:<24} {:<12} {}", law.id, law.group.name(), law.statement);
            }
            Ok(ExitCode::SUCCESS)
        }
        Some("run") => {
            let backend = args.backend()?;
            let bounds = args.bounds()?;
            let seed = args.u64_flag("seed", 42)?;
            let law = args.flags.get("law").map(String::as_str);
            let report = dispatch!(backend, run_report(&bounds, seed, law, None))
                .map_err(|e| e.to_string())?;
            emit_report(report, args)
        }
        _ => Err("usage: qcat laws <list|run> ...".into()),
    }
}

fn group_laws(args: &Args, groups: &[LawGroup]) -> Result<ExitCode, String> {
    let backend = args.backend()?;
    let bounds = args.bounds()?;
    let seed = args.u64_flag("seed", 42)?;
    let report = dispatch!(backend, run_report(&bounds, seed, None, Some(groups)))
        .map_err(|e| e.to_string())?;
    emit_report(report, args)
}

fn run_report<S: Scalar>(
    bounds: &LawBounds,
    seed: u64,
    law: Option<&str>,
    groups: Option<&[LawGroup]>,
) -> qcat::Result<qcat::laws::LawReport> {
    run_suite_filtered::<S>(bounds, seed, law, groups)
}

fn emit_report(report: qcat::laws::LawReport, args: &Args) -> Result<ExitCode, String> {
    print!("{report}");
    let failures = report.failures();
    if failures.is_empty() {
        return Ok(ExitCode::SUCCESS);
    }
    if let Some(dir) = args.flags.get("witness-dir") {
        std::fs::create_dir_all(dir).map_err(|e| e.to_string())?;
        for f in &failures {
            if let Some(w) = &f.witness {
                let path = format!("{dir}/{}.witness", f.id);
                std::fs::write(&path, w).map_err(|e| e.to_string())?;
                eprintln!("witness written to {path}");
            }
        }
    } else {
        for f in &failures {
            if let Some(w) = &f.witness {
                eprintln!("--- {} ---\n{w}", f.id);
            }
        }
    }
    Ok(ExitCode::from(3))
}

fn read_input(args: &Args) -> qcat::Result<String> {
    let path = args
        .flags
        .get("input")
        .ok_or_else(|| QcatError::BadArrowFile("missing --input <file>".into()))?;
    std::fs::read_to_string(path).map_err(|e| QcatError::BadArrowFile(format!("{path}: {e}")))
}

fn born_command(args: &Args) -> qcat::Result<ExitCode> {
    let text = read_input(args)?;
    let backend = peek_backend(&text)?;
    fn go<S: Scalar>(text: &str) -> qcat::Result<ExitCode> {
        let named = parse_arrow::<S>(text)?;
        let (a, b) = qcat::biproduct::infer_sum_components(named.arrow.cod()).ok_or_else(|| {
            QcatError::BadArrowFile("codomain labels must carry L:/R: sum tags".into())
        })?;
        let ds = qcat::biproduct::direct_sum::<S>(&a, &b);
        let d = qcat::biproduct::born_decompose(&named.arrow, &ds)?;
        print!("{}", print_arrow("left_part", &d.left_part));
        print!("{}", print_arrow("right_part", &d.right_part));
        println!("sqnorm-left={}", d.sqnorm_left);
        println!("sqnorm-right={}", d.sqnorm_right);
        println!("sqnorm-total={}", d.sqnorm_total);
        Ok(ExitCode::SUCCESS)
    }
    dispatch!(backend.as_str(), go(&text))
}

fn spectra_command(args: &Args) -> qcat::Result<ExitCode> {
    let text = read_input(args)?;
    let backend = peek_backend(&text)?;
    fn go<S: Scalar>(text: &str) -> qcat::Result<ExitCode> {
        let named = parse_arrow::<S>(text)?;
        let (a, b) = qcat::tensor::infer_tensor_factors(named.arrow.cod()).ok_or_else(|| {
            QcatError::BadArrowFile("codomain labels must be pairs (a,b)".into())
        })?;
        let left = qcat::mixed::partial_trace_left(&a, &b, &named.arrow)?;
        let right = qcat::mixed::partial_trace_right(&a, &b, &named.arrow)?;
        let pa = qcat::charpoly::charpoly(&left.matrix)?;
        let pb = qcat::charpoly::charpoly(&right.matrix)?;
        println!("charpoly-left: {pa}");
        println!("charpoly-right: {pb}");
        let matched = qcat::mixed::spectra_match(&a, &b, &named.arrow)?;
        println!("nonzero-spectra-match: {matched}");
        Ok(ExitCode::SUCCESS)
    }
    dispatch!(backend.as_str(), go(&text))
}

fn clone_check<S: Scalar>(args: &Args) -> qcat::Result<ExitCode> {
    let labels = args
        .flags
        .get("object")
        .ok_or_else(|| QcatError::PreconditionViolated("missing --object <labels>".into()))?;
    let object = FinObject::new(split_labels(labels))?;
    let outcome = if let Some(path) = args.flags.get("candidate") {
        let text = std::fs::read_to_string(path)
            .map_err(|e| QcatError::BadArrowFile(format!("{path}: {e}")))?;
        let named = parse_arrow::<S>(&text)?;
        // the ancilla is whatever the candidate's domain says it is
        let (_, ancilla) = qcat::tensor::infer_tensor_factors(named.arrow.dom())
            .ok_or_else(|| QcatError::BadArrowFile("candidate domain must be A (x) W".into()))?;
        let w = qcat::unit::point_prep::<S>(&ancilla, &ancilla.labels()[0].clone())?;
        verify_cloner(&object, &named.arrow, &w)?
    } else if object.len() == 1 {
        let cloner = build_cloner::<S>(&object)?;
        print!("{}", print_arrow("cloner", &cloner.arrow));
        verify_cloner(&object, &cloner.arrow, &cloner.ancilla_prep)?
    } else {
        // no candidate supplied: try the classical copy relabelling, the
        // obvious best attempt, and report where it fails
        let ancilla = FinObject::from_names(&["w"]);
        let dom = qcat::tensor::tensor_object(&object, &ancilla);
        let cod = qcat::tensor::tensor_object(
            &qcat::tensor::tensor_object(&object, &object),
            &ancilla,
        );
        let map: Vec<usize> = (0..object.len()).map(|i| i * object.len() + i).collect();
        let candidate: Arrow<S> = Arrow::functional(&dom, &cod, &map)?;
        print!("{}", print_arrow("copy_candidate", &candidate));
        let w = qcat::unit::point_prep::<S>(&ancilla, "w")?;
        verify_cloner(&object, &candidate, &w)?
    };
    match outcome {
        CloneOutcome::Ok => {
            println!("clone-check: Ok");
            Ok(ExitCode::SUCCESS)
        }
        CloneOutcome::Counterexample(cw) => {
            println!("clone-check: Counterexample");
            print!("{}", print_arrow("probe", &cw.probe));
            print!("{}", print_arrow("lhs", &cw.lhs));
            print!("{}", print_arrow("rhs", &cw.rhs));
            Ok(ExitCode::from(3))
        }
    }
}

fn load_workspace<S: Scalar>(args: &Args) -> qcat::Result<Workspace<S>> {
    let mut ws = Workspace::new();
    if let Some(dir) = args.flags.get("workspace") {
        ws.load_dir(std::path::Path::new(dir))?;
    }
    Ok(ws)
}

fn eval_command<S: Scalar>(args: &Args) -> qcat::Result<ExitCode> {
    let term_text = args
        .positional
        .first()
        .ok_or_else(|| QcatError::PreconditionViolated("missing term argument".into()))?;
    let ws = load_workspace::<S>(args)?;
    let term = parse(term_text)?;
    let arrow = eval(&term, &ws)?;
    print!("{}", print_arrow("result", &arrow));
    Ok(ExitCode::SUCCESS)
}

fn repl_command<S: Scalar>(args: &Args) -> qcat::Result<ExitCode> {
    let mut ws = load_workspace::<S>(args)?;
    let stdin = std::io::stdin();
    let mut out = std::io::stdout();
    println!(
        "qcat repl on backend {} (:q quits, `object A : a,b` declares, `let f = <term>` binds)",
        S::BACKEND
    );
    loop {
        print!("> ");
        let _ = out.flush();
        let mut line = String::new();
        if stdin.lock().read_line(&mut line).unwrap_or(0) == 0 {
            return Ok(ExitCode::SUCCESS);
        }
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        if line == ":q" || line == ":quit" {
            return Ok(ExitCode::SUCCESS);
        }
        if let Err(e) = repl_line(&mut ws, line) {
            eprintln!("error: {e}");
        }
    }
}

fn repl_line<S: Scalar>(ws: &mut Workspace<S>, line: &str) -> qcat::Result<()> {
    if line.starts_with("object ") {
        ws.load_text(line)?;
        return Ok(());
    }
    if let Some(rest) = line.strip_prefix("let ") {
        let (name, term_text) = rest.split_once('=').ok_or_else(|| {
            QcatError::PreconditionViolated("let needs `let name = term`".into())
        })?;
        let term = parse(term_text)?;
        let arrow = eval(&term, ws)?;
        print!("{}", print_arrow(name.trim(), &arrow));
        ws.insert_arrow(name.trim(), arrow);
        return Ok(());
    }
    let term = parse(line)?;
    println!("parsed: {}", pretty(&term));
    let arrow = eval(&term, ws)?;
    print!("{}", print_arrow("result", &arrow));
    Ok(())
}
