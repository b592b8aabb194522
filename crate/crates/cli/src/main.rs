use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use serde_json::{json, Value};

use temper_core::pairdb::{
    corpus_dir, load_corpus, parse_module_for, run_suite, verify_record, Report, RunReport, SuiteOptions, SUITES,
};
use temper_core::pvcore::PvValue;
use temper_core::rat;
use temper_core::{compute_pv, SemisimpleAlg};

/// Exact rho-function bounds and temperedness checks.
#[derive(Parser)]
#[command(name = "temper", version)]
struct Cli {
    #[command(flatten)]
    out: Output,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Output {
    /// Print JSON instead of aligned text.
    #[arg(long, global = true)]
    json: bool,
    /// Add decimal approximations next to exact values.
    #[arg(long, global = true)]
    pretty: bool,
    /// Worker threads for suite runs (default: all cores).
    #[arg(long, global = true, value_name = "N")]
    jobs: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Compute p_V for a module of a semisimple algebra.
    Pv {
        /// Simple factors, e.g. `A1+C3`.
        #[arg(long)]
        algebra: String,
        /// Module expression, e.g. `ext0(3)@1` or `std@1 x std@2 + trivial(1)`.
        #[arg(long)]
        rep: String,
    },
    /// Check the pairs of a corpus file against their recorded verdicts.
    CheckPair {
        /// Corpus file; bare names are also looked up in the corpus directory.
        #[arg(long)]
        corpus: PathBuf,
        /// Only check this record.
        #[arg(long)]
        id: Option<String>,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long, value_parser = clap::builder::PossibleValuesParser::new(SUITES))]
        suite: String,
        /// Parameter bound for generated families.
        #[arg(long, default_value_t = SuiteOptions::default().bound)]
        bound: usize,
        /// Random vectors per "any X" witness claim.
        #[arg(long, default_value_t = SuiteOptions::default().samples)]
        samples: usize,
    },
}

const PLACES: usize = 6;

fn with_decimal(exact: &str, pretty: bool) -> String {
    match (pretty, PvValue::parse(exact)) {
        (true, Ok(PvValue::Finite(r))) if !r.is_integer() => format!("{exact} ~{}", rat::decimal(&r, PLACES)),
        _ => exact.to_string(),
    }
}

fn decimal_value(exact: &str) -> Option<Value> {
    match PvValue::parse(exact).ok()? {
        PvValue::Finite(r) => Some(Value::String(rat::decimal(&r, PLACES))),
        PvValue::Infinite => None,
    }
}

fn resolve_corpus(path: &Path) -> PathBuf {
    if path.exists() || path.is_absolute() {
        return path.to_path_buf();
    }
    let alt = corpus_dir().join(path);
    if alt.exists() {
        alt
    } else {
        path.to_path_buf()
    }
}

fn cmd_pv(out: &Output, algebra: &str, rep: &str) -> Result<ExitCode, String> {
    let alg: SemisimpleAlg = algebra.parse().map_err(|e| format!("--algebra: {e}"))?;
    let spec = parse_module_for(rep, &alg).map_err(|e| format!("--rep: {e}"))?;
    let r = compute_pv(&alg, &spec).map_err(|e| e.to_string())?;
    let p = r.value.to_string();
    if out.json {
        let mut v = json!({
            "command": format!("pv --algebra {algebra} --rep {rep}"),
            "algebra": alg.to_string(),
            "rep": spec.to_string(),
            "p": p,
            "ratio": rat::fmt(&r.ratio),
            "minimizer": r.minimizer.to_strings(),
            "dim": r.dim_v,
        });
        if out.pretty {
            if let Some(d) = decimal_value(&p) {
                v["p_decimal"] = d;
            }
        }
        println!("{}", serde_json::to_string_pretty(&v).unwrap());
    } else {
        println!("p          {}", with_decimal(&p, out.pretty));
        println!("minimizer  {}", r.minimizer);
        println!("dim        {}", r.dim_v);
    }
    Ok(ExitCode::SUCCESS)
}

fn print_report(out: &Output, report: &RunReport) {
    if out.json {
        let mut v = serde_json::to_value(report).unwrap();
        if out.pretty {
            for it in v["items"].as_array_mut().into_iter().flatten() {
                if let Some(d) = it.get("p").and_then(Value::as_str).and_then(decimal_value) {
                    it["p_decimal"] = d;
                }
            }
        }
        println!("{}", serde_json::to_string_pretty(&v).unwrap());
        return;
    }
    let rows: Vec<[String; 6]> = report.items.iter().map(|it| text_row(it, out.pretty)).collect();
    let header = ["id", "status", "expected", "computed", "p", "witness"].map(String::from);
    let mut width = header.clone().map(|h| h.len());
    for r in &rows {
        for (w, c) in width.iter_mut().zip(r) {
            *w = (*w).max(c.chars().count());
        }
    }
    let line = |r: &[String; 6]| {
        let cells: Vec<String> = r.iter().zip(&width).map(|(c, w)| format!("{c:<w$}")).collect();
        println!("{}", cells.join("  ").trim_end());
    };
    line(&header);
    for (r, it) in rows.iter().zip(&report.items) {
        line(r);
        if let Some(d) = &it.detail {
            println!("    {d}");
        }
    }
    let s = &report.summary;
    println!("{}: {} agree, {} disagree, {} error", report.command, s.agree, s.disagree, s.error);
}

fn text_row(it: &Report, pretty: bool) -> [String; 6] {
    [
        it.id.clone(),
        serde_json::to_value(it.status).unwrap().as_str().unwrap_or_default().to_string(),
        it.expected.clone(),
        it.computed.clone(),
        it.p.as_deref().map(|p| with_decimal(p, pretty)).unwrap_or_default(),
        it.witness.as_ref().map(|w| format!("({})", w.join(", "))).unwrap_or_default(),
    ]
}

fn finish(out: &Output, report: &RunReport) -> ExitCode {
    print_report(out, report);
    if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn cmd_check_pair(out: &Output, corpus: &Path, id: Option<&str>) -> Result<ExitCode, String> {
    let path = resolve_corpus(corpus);
    let recs = load_corpus(&path).map_err(|e| e.to_string())?;
    let selected: Vec<_> = match id {
        Some(id) => {
            let r: Vec<_> = recs.iter().filter(|r| r.id == id).collect();
            if r.is_empty() {
                return Err(format!("{}: no record with id `{id}`", path.display()));
            }
            r
        }
        None => recs.iter().collect(),
    };
    let items: Vec<Report> = selected.par_iter().map(|r| verify_record(r)).collect();
    let mut command = format!("check-pair --corpus {}", corpus.display());
    if let Some(id) = id {
        command.push_str(&format!(" --id {id}"));
    }
    Ok(finish(out, &RunReport::new(command, items)))
}

fn cmd_verify(out: &Output, suite: &str, bound: usize, samples: usize) -> Result<ExitCode, String> {
    let opts = SuiteOptions { bound, samples, ..SuiteOptions::default() };
    let report = run_suite(suite, &opts).map_err(|e| e.to_string())?;
    Ok(finish(out, &report))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.out.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("temper: --jobs: {e}");
            return ExitCode::from(2);
        }
    }
    let started = std::time::Instant::now();
    let res = match &cli.command {
        Command::Pv { algebra, rep } => cmd_pv(&cli.out, algebra, rep),
        Command::CheckPair { corpus, id } => cmd_check_pair(&cli.out, corpus, id.as_deref()),
        Command::Verify { suite, bound, samples } => cmd_verify(&cli.out, suite, *bound, *samples),
    };
    match res {
        Ok(code) => {
            if !cli.out.json && !matches!(cli.command, Command::Pv { .. }) {
                eprintln!("wall time {:.2}s", started.elapsed().as_secs_f64());
            }
            code
        }
        Err(e) => {
            eprintln!("temper: {e}");
            ExitCode::from(2)
        }
    }
}
