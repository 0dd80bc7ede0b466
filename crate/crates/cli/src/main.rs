use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use owa_rank::formats::{self, load_dataset, parse_rankings, parse_truths, read_file, write_file};
use owa_rank::method::parse_custom_quantifier;
use owa_rank::{pipeline, render, AppError, MethodSpec, Result};
use owa_rank_core::aggregation::{AggregationMethod, PasConfig};
use owa_rank_core::dataset::RankerRoster;
use owa_rank_core::weighting::{most_preferred_first_weights, quantifier_weights};

/// Consensus ranking with ordered weighted averaging.
#[derive(Parser)]
#[command(name = "owa-rank", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print an OWA weight vector.
    Weights(WeightsArgs),
    /// Fuse every course of a dataset into a consensus ranking.
    Aggregate(AggregateArgs),
    /// Score predicted rankings against ground-truth rankings.
    Evaluate(EvaluateArgs),
    /// Run several methods on a dataset and compare them against ground truth.
    Compare(CompareArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Markdown,
}

#[derive(Args)]
struct MethodArgs {
    /// pas, mpf, quantifier:<most|at-least-half|as-many-as-possible>,
    /// quantifier:a=<x>,b=<y>, or `quantifier` together with --quantifier
    #[arg(long)]
    method: String,
    /// Custom quantifier knots for `--method quantifier`, as a=<x>,b=<y>
    #[arg(long)]
    quantifier: Option<String>,
}

impl MethodArgs {
    fn spec(&self) -> Result<MethodSpec> {
        match (self.method.as_str(), &self.quantifier) {
            ("quantifier", Some(q)) => Ok(MethodSpec::new(AggregationMethod::Quantifier(
                parse_custom_quantifier(q)?,
            ))),
            ("quantifier", None) => Err(AppError::Usage(
                "--method quantifier needs --quantifier a=<x>,b=<y>".into(),
            )),
            (_, Some(_)) => Err(AppError::Usage(
                "--quantifier only applies to --method quantifier".into(),
            )),
            (token, None) => token.parse(),
        }
    }
}

#[derive(Args)]
struct WeightsArgs {
    #[command(flatten)]
    method: MethodArgs,
    /// Number of rankers (u)
    #[arg(long, conflicts_with = "criteria")]
    rankers: Option<usize>,
    /// Number of criteria (m)
    #[arg(long)]
    criteria: Option<usize>,
    #[arg(long, value_enum, default_value = "markdown")]
    format: Format,
}

#[derive(Args)]
struct DatasetArgs {
    /// Dataset file, JSON or `.csv`
    #[arg(long)]
    input: PathBuf,
    /// Ranker order, best first, as a comma-separated list (overrides the file)
    #[arg(long, value_delimiter = ',')]
    roster: Option<Vec<String>>,
    /// Positional score decrement per rank position
    #[arg(long, default_value_t = PasConfig::DEFAULT_STEP)]
    pas_step: f64,
}

impl DatasetArgs {
    fn load(&self) -> Result<owa_rank_core::dataset::RankingDataset> {
        load_dataset(&self.input, self.roster.clone().map(RankerRoster::new))
    }

    fn pas(&self) -> Result<PasConfig> {
        PasConfig::with_step(self.pas_step).map_err(|e| AppError::Usage(e.to_string()))
    }
}

#[derive(Args)]
struct AggregateArgs {
    #[command(flatten)]
    dataset: DatasetArgs,
    #[command(flatten)]
    method: MethodArgs,
    /// Directory receiving one ranking JSON per course
    #[arg(long)]
    output: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Args)]
struct EvaluateArgs {
    /// Ranking JSON produced by `aggregate` (one ranking or an array)
    #[arg(long, alias = "input")]
    predicted: PathBuf,
    /// Ground-truth JSON (one object or an array)
    #[arg(long)]
    truth: PathBuf,
    #[arg(long, default_value_t = 10)]
    k: usize,
    /// Write the JSON report here
    #[arg(long)]
    output: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "markdown")]
    format: Format,
}

#[derive(Args)]
struct CompareArgs {
    #[command(flatten)]
    dataset: DatasetArgs,
    /// Ground-truth JSON (one object or an array)
    #[arg(long)]
    truth: PathBuf,
    /// Methods to compare; defaults to PAS and the four OWA variants
    #[arg(long, num_args = 1..)]
    methods: Option<Vec<String>>,
    /// Label of the method the others are compared against
    #[arg(long, default_value = "mpf")]
    proposed: String,
    #[arg(long, default_value_t = 10)]
    k: usize,
    /// Write the JSON report here
    #[arg(long)]
    output: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "markdown")]
    format: Format,
}

fn check_k(k: usize) -> Result<()> {
    if k == 0 {
        return Err(AppError::Usage("--k must be at least 1".into()));
    }
    Ok(())
}

fn weights(args: WeightsArgs) -> Result<String> {
    let spec = args.method.spec()?;
    let count = args
        .rankers
        .or(args.criteria)
        .ok_or_else(|| AppError::Usage("pass --rankers <u> or --criteria <m>".into()))?;
    let w = match &spec.method {
        AggregationMethod::Pas => {
            return Err(AppError::Usage(
                "pas is unweighted; pick mpf or a quantifier".into(),
            ))
        }
        AggregationMethod::MostPreferredFirst => most_preferred_first_weights(count),
        AggregationMethod::Quantifier(q) => quantifier_weights(q, count),
    }
    .map_err(|e| AppError::Usage(e.to_string()))?;
    Ok(match args.format {
        Format::Markdown => render::weights(&w),
        Format::Json => {
            let exact = w
                .rational()
                .map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>());
            let mut out = serde_json::to_string_pretty(&serde_json::json!({
                "method": w.provenance(),
                "weights": w.as_slice(),
                "exact": exact,
            }))
            .expect("json values serialize");
            out.push('\n');
            out
        }
    })
}

fn slug(name: &str) -> String {
    let s: String = name
        .chars()
        .map(|c| {
            if c.is_alphanumeric() {
                c.to_ascii_lowercase()
            } else {
                '-'
            }
        })
        .collect();
    let s = s.trim_matches('-').to_string();
    if s.is_empty() {
        "course".into()
    } else {
        s
    }
}

fn write_rankings(
    dir: &Path,
    rankings: &[owa_rank_core::aggregation::AggregatedRanking],
) -> Result<()> {
    fs::create_dir_all(dir).map_err(|source| AppError::Io {
        path: dir.to_path_buf(),
        source,
    })?;
    let mut used: Vec<String> = Vec::new();
    for r in rankings {
        let base = slug(&r.course);
        let mut name = base.clone();
        let mut n = 2;
        while used.contains(&name) {
            name = format!("{base}-{n}");
            n += 1;
        }
        write_file(
            &dir.join(format!("{name}.json")),
            &formats::ranking_to_json(r),
        )?;
        used.push(name);
    }
    Ok(())
}

fn aggregate(args: AggregateArgs) -> Result<String> {
    let spec = args.method.spec()?.with_pas(args.dataset.pas()?);
    let dataset = args.dataset.load()?;
    let rankings = pipeline::aggregate_dataset(&dataset, &spec)?;
    if let Some(dir) = &args.output {
        write_rankings(dir, &rankings)?;
    }
    Ok(match args.format {
        Format::Json if args.output.is_some() => String::new(),
        Format::Json => formats::rankings_to_json(&rankings),
        Format::Markdown => rankings
            .iter()
            .map(render::ranking)
            .collect::<Vec<_>>()
            .join("\n"),
    })
}

fn evaluate(args: EvaluateArgs) -> Result<String> {
    check_k(args.k)?;
    let predicted = parse_rankings(
        &args.predicted.display().to_string(),
        &read_file(&args.predicted)?,
    )?;
    let truths = parse_truths(&args.truth.display().to_string(), &read_file(&args.truth)?)?;
    let reports = predicted
        .iter()
        .map(|p| {
            let truth = match truths.as_slice() {
                [only] => only,
                many => many.iter().find(|t| t.course == p.course).ok_or_else(|| {
                    AppError::Validation(vec![format!("no ground truth for course {:?}", p.course)])
                })?,
            };
            pipeline::evaluate_ranking(p, truth, args.k)
        })
        .collect::<Result<Vec<_>>>()?;
    let json = formats::reports_to_json(&reports);
    if let Some(path) = &args.output {
        write_file(path, &json)?;
    }
    Ok(match args.format {
        Format::Markdown => reports
            .iter()
            .map(render::report)
            .collect::<Vec<_>>()
            .join("\n"),
        Format::Json => json,
    })
}

fn compare(args: CompareArgs) -> Result<String> {
    check_k(args.k)?;
    let pas = args.dataset.pas()?;
    let methods = match &args.methods {
        Some(tokens) => tokens
            .iter()
            .map(|t| t.parse::<MethodSpec>())
            .collect::<Result<Vec<_>>>()?,
        None => MethodSpec::standard_roster(),
    };
    let methods: Vec<MethodSpec> = methods.into_iter().map(|m| m.with_pas(pas)).collect();
    let proposed = args
        .proposed
        .parse::<MethodSpec>()
        .map(|m| m.label())
        .unwrap_or_else(|_| args.proposed.clone());
    let dataset = args.dataset.load()?;
    let truths = parse_truths(&args.truth.display().to_string(), &read_file(&args.truth)?)?;
    let report = pipeline::compare(&dataset, &truths, &methods, &proposed, args.k)?;
    let json = report.to_json();
    if let Some(path) = &args.output {
        write_file(path, &json)?;
    }
    Ok(match args.format {
        Format::Json => json,
        Format::Markdown => render::comparison(&report),
    })
}

fn run(cli: Cli) -> Result<String> {
    match cli.command {
        Command::Weights(a) => weights(a),
        Command::Aggregate(a) => aggregate(a),
        Command::Evaluate(a) => evaluate(a),
        Command::Compare(a) => compare(a),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
