use std::path::PathBuf;
use std::process::ExitCode;
use std::sync::mpsc;
use std::thread;
use std::time::{Duration, Instant};

use clap::Parser;

use prefenum::dispatch::{dispatch, AlgorithmKind, MLS_MIS_THRESHOLD, ORIENTED_MLS_THRESHOLD};
use prefenum::error::Error;
use prefenum::mls::{FamilyKind, MlsConfig};
use prefenum::oriented::phi;
use prefenum::report::RunReport;
use prefenum::{formats, generate, ArgumentationFramework, SearchStats, VertexSet};

/// Enumerates all preferred extensions of a directed argumentation
/// framework.
#[derive(Parser)]
#[command(name = "prefenum", version)]
struct Args {
    /// Input file with the framework.
    #[arg(long, conflicts_with = "generate")]
    input: Option<PathBuf>,

    /// Input file format.
    #[arg(long, default_value = "apx", value_parser = ["apx", "tgf"])]
    format: String,

    /// Enumeration algorithm; `auto` dispatches on the 2-cycle fraction.
    #[arg(long, default_value = "auto",
          value_parser = ["auto", "oracle", "mis", "oriented", "mls", "mase2k"])]
    algorithm: String,

    /// Print only the number of preferred extensions.
    #[arg(long, conflicts_with = "list")]
    count_only: bool,

    /// Emit a JSON run report line.
    #[arg(long)]
    stats: bool,

    /// Generate an instance instead of reading one: KIND:PARAMS, one of
    /// bidirTriangles:K, twoCycles:K, Fn:N, orientedTriangle:K,
    /// randomDigraph:N,ARCPROB,TWOCYCLEFRACTION, fromCnf:PATH,
    /// lowerBound:N,R.
    #[arg(long)]
    generate: Option<String>,

    /// Seed for randomized generators and families.
    #[arg(long, default_value_t = 0)]
    seed: u64,

    /// Set-containing family construction for the mls algorithm.
    #[arg(long, default_value = "exhaustive", value_parser = ["exhaustive", "random"])]
    mls_family: String,

    /// Print each extension as sorted labels in braces, one per line.
    #[arg(long)]
    list: bool,

    /// Print the per-algorithm running-time bases over r as CSV and exit.
    #[arg(long)]
    emit_thresholds: bool,

    /// Largest accepted vertex count; bigger inputs exit with code 2.
    #[arg(long, default_value_t = 64)]
    max_n: usize,

    /// Wall-clock budget in seconds; exceeding it exits with code 2.
    #[arg(long, default_value_t = 300)]
    time_limit: u64,
}

fn exit_code_for(err: &Error) -> u8 {
    match err {
        Error::OracleLimit { .. } | Error::ResourceCap(_) => 2,
        _ => 1,
    }
}

fn emit_thresholds() {
    let p = phi();
    let mls_base = |r: f64| {
        (1.0 + 2f64.powf(0.25) - 2f64.powf(-0.5)).powf(r)
            * (2.0 - 2f64.powf(-0.5)).powf(1.0 - r)
    };
    let mis_base = 3f64.powf(1.0 / 3.0);
    println!("r,base_oriented,base_mls,base_mis");
    for step in 0..=100 {
        let r = step as f64 / 100.0;
        // Oriented route: phi^(2r) * phi^(1-r) = phi^(1+r).
        println!(
            "{:.2},{:.6},{:.6},{:.6}",
            r,
            p.powf(1.0 + r),
            mls_base(r),
            mis_base
        );
    }
    let _ = (ORIENTED_MLS_THRESHOLD, MLS_MIS_THRESHOLD);
}

fn load_framework(args: &Args) -> Result<(ArgumentationFramework, String), Error> {
    if let Some(spec) = &args.generate {
        let af = generate::generate(spec, args.seed)?;
        return Ok((af, spec.clone()));
    }
    let path = args.input.as_ref().ok_or_else(|| {
        Error::InvalidParams("provide either --input or --generate".into())
    })?;
    let text = std::fs::read_to_string(path)?;
    let af = match args.format.as_str() {
        "tgf" => formats::parse_tgf(&text)?,
        _ => formats::parse_apx(&text)?,
    };
    Ok((af, path.display().to_string()))
}

fn sorted_labels(af: &ArgumentationFramework, ext: &VertexSet) -> Vec<String> {
    let mut labels: Vec<String> = ext.iter().map(|v| af.label(v).to_string()).collect();
    labels.sort();
    labels
}

fn run(args: &Args) -> Result<(), Error> {
    let (af, instance) = load_framework(args)?;
    if af.n() > args.max_n {
        return Err(Error::ResourceCap(format!(
            "instance has {} vertices, --max-n is {}",
            af.n(),
            args.max_n
        )));
    }
    let mode = AlgorithmKind::parse(&args.algorithm).unwrap();
    let config = MlsConfig {
        family: match args.mls_family.as_str() {
            "random" => FamilyKind::Random,
            _ => FamilyKind::Exhaustive,
        },
        seed: args.seed,
        ..MlsConfig::default()
    };

    let started = Instant::now();
    let (tx, rx) = mpsc::channel();
    let worker_af = af.clone();
    thread::spawn(move || {
        let _ = tx.send(dispatch(&worker_af, mode, &config));
    });
    type Outcome = (Vec<VertexSet>, SearchStats, &'static str);
    let (extensions, stats, algorithm): Outcome =
        match rx.recv_timeout(Duration::from_secs(args.time_limit)) {
            Ok(result) => result?,
            Err(_) => {
                return Err(Error::ResourceCap(format!(
                    "wall-clock budget of {} s exceeded",
                    args.time_limit
                )))
            }
        };
    let wall_ms = started.elapsed().as_secs_f64() * 1000.0;

    if args.list && !args.count_only {
        let mut lines: Vec<(usize, Vec<String>)> = extensions
            .iter()
            .map(|e| (e.len(), sorted_labels(&af, e)))
            .collect();
        lines.sort();
        for (_, labels) in lines {
            println!("{{{}}}", labels.join(","));
        }
    } else {
        println!("{}", extensions.len());
    }
    if args.stats {
        let report = RunReport {
            instance,
            algorithm: algorithm.to_string(),
            n: af.n(),
            r: if af.n() == 0 {
                0.0
            } else {
                af.resolution_order() as f64 / af.n() as f64
            },
            extension_count: extensions.len(),
            stats,
            wall_ms,
        };
        println!("{}", serde_json::to_string(&report).expect("report serializes"));
    }
    Ok(())
}

fn main() -> ExitCode {
    let args = Args::parse();
    if args.emit_thresholds {
        emit_thresholds();
        return ExitCode::SUCCESS;
    }
    match run(&args) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(exit_code_for(&err))
        }
    }
}
