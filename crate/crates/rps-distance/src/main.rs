use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use rps_distance::{
    build_matrix, enumerate_pes, maxent_weights, pes_size, repro, rps_distance, Correction,
    DistanceRequest, Error, FrameOfDiscernment, MatrixKind, MatrixParams, Measure, PmfDocument,
    UniversePolicy,
};

#[derive(Parser)]
#[command(
    name = "rpsdist",
    about = "Distances between random permutation sets",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Distance between two named mass functions from a JSON document
    Dist(DistArgs),
    /// Max-entropy depth weights for a given orness
    Weights(WeightsArgs),
    /// Build a weighting matrix and print or save it as CSV
    Matrix(MatrixArgs),
    /// Recompute the bundled reference tables and report mismatches
    Reproduce(ReproduceArgs),
}

#[derive(Args)]
struct DistArgs {
    /// JSON document with the frame and named mass functions
    file: PathBuf,
    /// Name of the first mass function
    a: String,
    /// Name of the second mass function
    b: String,
    #[arg(long, value_enum, default_value_t = MeasureArg::Cumulative)]
    measure: MeasureArg,
    /// Orness in [0, 1]
    #[arg(long, default_value_t = 0.5)]
    orn: f64,
    /// Global depth cap for the cumulative measure
    #[arg(long)]
    t: Option<usize>,
    #[arg(long, value_enum, default_value_t = UniverseArg::FocalUnion)]
    universe: UniverseArg,
    #[arg(long, value_enum, default_value_t = CorrectionArg::Auto)]
    correction: CorrectionArg,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Args)]
struct WeightsArgs {
    /// Number of weights
    #[arg(long)]
    n: usize,
    /// Orness in [0, 1]
    #[arg(long)]
    orn: f64,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Args)]
struct MatrixArgs {
    /// JSON document; the universe is the union of all focal events
    #[arg(long, conflicts_with = "full_pes")]
    input: Option<PathBuf>,
    /// Span every permutation event of an N-element frame instead
    #[arg(long, value_name = "N")]
    full_pes: Option<usize>,
    #[arg(long, value_enum, default_value_t = KindArg::Cumulative)]
    kind: KindArg,
    #[arg(long, default_value_t = 0.5)]
    orn: f64,
    #[arg(long)]
    t: Option<usize>,
    /// Write the CSV here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
    /// Permit full event spaces beyond 6 elements (thousands of events)
    #[arg(long)]
    allow_large: bool,
}

#[derive(Args)]
struct ReproduceArgs {
    /// "all" or a comma-separated subset of table ids
    #[arg(long, default_value = "all")]
    tables: String,
    /// Directory for per-table CSV reports
    #[arg(long)]
    out: Option<PathBuf>,
    /// Include the slowest reference rows
    #[arg(long)]
    long: bool,
}

#[derive(Clone, Copy, ValueEnum)]
enum MeasureArg {
    Cumulative,
    OrderedDegree,
    Jousselme,
}

#[derive(Clone, Copy, ValueEnum)]
enum UniverseArg {
    FocalUnion,
    FullPes,
}

#[derive(Clone, Copy, ValueEnum)]
enum CorrectionArg {
    Auto,
    Always,
    Never,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    #[value(alias = "d")]
    Jaccard,
    #[value(alias = "rd")]
    OrderedDegree,
    #[value(alias = "cd")]
    Cumulative,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::IndefiniteMatrix { .. } => ExitCode::from(3),
                _ => ExitCode::from(2),
            }
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Dist(args) => dist(args),
        Command::Weights(args) => weights(args),
        Command::Matrix(args) => matrix(args),
        Command::Reproduce(args) => reproduce(args),
    }
}

fn dist(args: DistArgs) -> Result<ExitCode, Error> {
    let doc = PmfDocument::from_json(&fs::read_to_string(&args.file)?)?;
    let a = doc.resolve(&args.a)?;
    let b = doc.resolve(&args.b)?;
    let req = DistanceRequest {
        pmf_a: &a,
        pmf_b: &b,
        measure: match args.measure {
            MeasureArg::Cumulative => Measure::CumulativeJaccard,
            MeasureArg::OrderedDegree => Measure::OrderedDegree,
            MeasureArg::Jousselme => Measure::JousselmeOnForgottenOrder,
        },
        orn: args.orn,
        t_global: args.t,
        universe_policy: match args.universe {
            UniverseArg::FocalUnion => UniversePolicy::FocalUnion,
            UniverseArg::FullPes => UniversePolicy::FullPes,
        },
        correction: match args.correction {
            CorrectionArg::Auto => Correction::Auto,
            CorrectionArg::Always => Correction::Always,
            CorrectionArg::Never => Correction::Never,
        },
    };
    let result = rps_distance(&req)?;
    let d = &result.diagnostics;
    match args.format {
        Format::Json => {
            let lambda = match d.lambda_min {
                Some(l) => format!("{l}"),
                None => "null".to_string(),
            };
            println!(
                "{{\"value\": {}, \"lambda_min\": {}, \"corrected\": {}, \"universe_size\": {}}}",
                result.value, lambda, d.corrected, d.universe_size
            );
        }
        Format::Csv => {
            println!("value,lambda_min,corrected,universe_size");
            let lambda = d.lambda_min.map(|l| l.to_string()).unwrap_or_default();
            println!(
                "{},{},{},{}",
                result.value, lambda, d.corrected, d.universe_size
            );
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn weights(args: WeightsArgs) -> Result<ExitCode, Error> {
    let w = maxent_weights(args.n, args.orn)?;
    let achieved = rps_distance::orness(&w);
    match args.format {
        Format::Json => {
            let body: Vec<String> = w.as_slice().iter().map(|x| x.to_string()).collect();
            println!(
                "{{\"n\": {}, \"orn\": {}, \"achieved_orness\": {}, \"weights\": [{}]}}",
                args.n,
                args.orn,
                achieved,
                body.join(", ")
            );
        }
        Format::Csv => {
            println!("depth,weight");
            for (i, x) in w.as_slice().iter().enumerate() {
                println!("{},{:.6}", i + 1, x);
            }
            println!("orness,{achieved:.6}");
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn matrix(args: MatrixArgs) -> Result<ExitCode, Error> {
    let (frame, universe) = match (&args.input, args.full_pes) {
        (Some(path), None) => {
            let doc = PmfDocument::from_json(&fs::read_to_string(path)?)?;
            let frame = doc.frame()?;
            let pmfs: Vec<_> = doc.resolve_all()?.into_iter().map(|(_, p)| p).collect();
            let refs: Vec<&_> = pmfs.iter().collect();
            let v = rps_distance::mass::vectorize(&refs, UniversePolicy::FocalUnion)?;
            (frame, v.universe)
        }
        (None, Some(n)) => {
            if n > 7 {
                return Err(Error::InvalidParameter(format!(
                    "a {n}-element frame spans {} events; 7 is the supported maximum",
                    pes_size(n.min(20))
                )));
            }
            if n == 7 && !args.allow_large {
                return Err(Error::InvalidParameter(format!(
                    "a 7-element frame spans {} events; pass --allow-large to proceed",
                    pes_size(7)
                )));
            }
            let frame = FrameOfDiscernment::new(n)?;
            let universe = enumerate_pes(&frame)?;
            (frame, universe)
        }
        _ => {
            return Err(Error::InvalidParameter(
                "pass exactly one of --input or --full-pes".into(),
            ))
        }
    };
    let kind = match args.kind {
        KindArg::Jaccard => MatrixKind::Jaccard,
        KindArg::OrderedDegree => MatrixKind::OrderedDegreeProduct,
        KindArg::Cumulative => MatrixKind::CumulativeJaccard,
    };
    let m = build_matrix(
        universe,
        kind,
        MatrixParams {
            orn: args.orn,
            t_global: args.t,
        },
    )?;
    let csv = m.to_csv(&frame);
    match args.out {
        Some(path) => {
            fs::write(path, csv)?;
            println!("lambda_min,{}", m.min_eigenvalue());
        }
        None => {
            print!("{csv}");
            // keep stdout a clean CSV; diagnostics go to stderr
            eprintln!("lambda_min,{}", m.min_eigenvalue());
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn reproduce(args: ReproduceArgs) -> Result<ExitCode, Error> {
    let ids: Vec<String> = if args.tables == "all" {
        repro::TABLE_IDS.iter().map(|s| s.to_string()).collect()
    } else {
        args.tables
            .split(',')
            .map(|s| s.trim().to_string())
            .collect()
    };
    if let Some(dir) = &args.out {
        fs::create_dir_all(dir)?;
    }
    let mut all_passed = true;
    for id in &ids {
        let report = repro::run_table(id, args.long)?;
        let passed = report.passed();
        all_passed &= passed;
        println!(
            "{}: {} ({}/{} rows)",
            id,
            if passed { "pass" } else { "FAIL" },
            report.rows.iter().filter(|r| r.passed()).count(),
            report.rows.len()
        );
        for r in report.failures() {
            println!(
                "  {}: expected {:.4}, computed {:.6}",
                r.label, r.expected, r.computed
            );
        }
        if let Some(dir) = &args.out {
            fs::write(dir.join(format!("{id}.csv")), report.to_csv())?;
        }
    }
    Ok(if all_passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    })
}
