use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use qmark_core::bijections::{fishhook_m_trace, fishhook_trace, BijectionTrace};
use qmark_core::identities::{
    ag_table, comb_registry, default_jobs, find_comb, find_series, registry, run_suite, suite_tsv,
    verify_combinatorial, verify_inequality, verify_marked_sum, verify_series, witness_sets, Params, Status,
    VerificationReport, VerifyError,
};
use qmark_core::partitions::{ConstraintSet, Partition};
use qmark_core::qseries::to_machine;

#[derive(Parser)]
#[command(name = "qmark", version, about = "Verify marked and shifted partition identities")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, ValueEnum)]
enum Map {
    Fh,
    Fhm,
}

#[derive(Clone, Copy, ValueEnum)]
enum Side {
    Lhs,
    Rhs,
}

#[derive(Args, Default)]
struct ParamArgs {
    #[arg(long = "M")]
    m: Option<usize>,
    #[arg(long)]
    k: Option<usize>,
    #[arg(long)]
    a: Option<usize>,
    #[arg(long = "N")]
    n_shift: Option<usize>,
    /// Integer value of q for the q-analogue of Euler's theorem.
    #[arg(long)]
    q: Option<usize>,
    /// Fixed partition, e.g. "6,1" or "4,1^3".
    #[arg(long)]
    lambda: Option<String>,
    #[arg(long)]
    theta: Option<String>,
    /// Integer parameters as "M=4,N=8"; explicit flags win.
    #[arg(long)]
    params: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Verify one identity or theorem at one parameter set.
    Verify {
        #[arg(long)]
        id: String,
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long)]
        cutoff: Option<usize>,
        #[arg(long)]
        nmax: Option<usize>,
        /// Part set modulus for `marked-sum`.
        #[arg(long, default_value_t = 5)]
        modulus: usize,
        /// Allowed residues for `marked-sum`, comma separated.
        #[arg(long, default_value = "1,4")]
        residues: String,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Run every registered check and print a TSV summary.
    Suite {
        #[arg(long)]
        nmax: Option<usize>,
        #[arg(long)]
        cutoff: Option<usize>,
        /// Print one JSON report per job instead of the TSV summary.
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Print both equinumerous sets of a combinatorial theorem at (n, k).
    Witness {
        #[arg(long)]
        theorem: String,
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long = "n")]
        n: usize,
        /// Marker count; read from --k for theorems without an Andrews-Gordon k.
        #[arg(long = "j")]
        j: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Reproduce the Andrews-Gordon refinement table.
    Table {
        #[arg(long)]
        theorem: String,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        a: usize,
        #[arg(long = "M")]
        m: usize,
        #[arg(long = "n")]
        n: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Apply the fishhook map or its marked variant.
    Bijection {
        #[arg(long, value_enum)]
        map: Map,
        #[arg(long = "M")]
        m: Option<usize>,
        #[arg(long)]
        input: String,
        #[arg(long)]
        trace: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Dump one side of a series identity in the machine format.
    Series {
        #[arg(long)]
        id: String,
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long)]
        cutoff: Option<usize>,
        #[arg(long, value_enum, default_value_t = Side::Lhs)]
        side: Side,
    },
}

enum Failure {
    Usage(String),
    Hypothesis(String),
    Runtime(String),
}

impl From<VerifyError> for Failure {
    fn from(e: VerifyError) -> Self {
        match e {
            VerifyError::Hypothesis { .. } => Failure::Hypothesis(e.to_string()),
            VerifyError::UnknownId { .. } | VerifyError::MissingParam { .. } | VerifyError::NoCombinatorialPair(_) => {
                Failure::Usage(e.to_string())
            }
            VerifyError::Partition(_) => Failure::Usage(e.to_string()),
            _ => Failure::Runtime(e.to_string()),
        }
    }
}

fn parse_partition(flag: &str, s: &str) -> Result<Partition, Failure> {
    s.parse().map_err(|e| Failure::Usage(format!("--{flag}: {e}")))
}

impl ParamArgs {
    fn build(&self) -> Result<Params, Failure> {
        let mut p = Params::none();
        if let Some(list) = &self.params {
            for item in list.split(',').map(str::trim).filter(|s| !s.is_empty()) {
                let (key, value) = item
                    .split_once('=')
                    .ok_or_else(|| Failure::Usage(format!("--params: expected key=value, got {item:?}")))?;
                let v: usize = value
                    .parse()
                    .map_err(|_| Failure::Usage(format!("--params: {key} must be a non-negative integer")))?;
                match key {
                    "M" => p.m = Some(v),
                    "k" => p.k = Some(v),
                    "a" => p.a = Some(v),
                    "N" => p.n_shift = Some(v),
                    "q" => p.base = Some(v),
                    _ => return Err(Failure::Usage(format!("--params: unknown parameter {key:?}"))),
                }
            }
        }
        p.m = self.m.or(p.m);
        p.k = self.k.or(p.k);
        p.a = self.a.or(p.a);
        p.n_shift = self.n_shift.or(p.n_shift);
        p.base = self.q.or(p.base);
        if let Some(l) = &self.lambda {
            p.lambda = Some(parse_partition("lambda", l)?);
        }
        if let Some(t) = &self.theta {
            p.theta = Some(parse_partition("theta", t)?);
        }
        Ok(p)
    }
}

fn all_ids() -> Vec<String> {
    let mut ids: Vec<String> = registry().iter().map(|s| s.id.to_string()).collect();
    ids.extend(comb_registry().iter().map(|s| s.id.to_string()));
    ids.extend(["marked-sum".to_string(), "inequality".to_string()]);
    ids
}

fn unknown(id: &str) -> Failure {
    Failure::from(VerifyError::UnknownId { id: id.to_string(), known: all_ids() })
}

fn required(id: &str, name: &str, v: Option<usize>) -> Result<usize, Failure> {
    v.ok_or_else(|| Failure::from(VerifyError::MissingParam { id: id.into(), name: name.into() }))
}

fn canonical_theorem(id: &str) -> &str {
    match id {
        "ag-comb" | "agcomb" => "agcombm",
        other => other,
    }
}

fn print_report(r: &VerificationReport, format: Format) {
    match format {
        Format::Json => println!("{}", serde_json::to_string(r).expect("report serializes")),
        Format::Text => {
            print!("{}", suite_tsv(std::slice::from_ref(r)));
            for n in &r.notes {
                println!("# {n}");
            }
        }
    }
}

fn report_code(r: &VerificationReport) -> ExitCode {
    match r.status {
        Status::Pass => ExitCode::SUCCESS,
        Status::Fail => ExitCode::from(1),
        Status::Rejected => ExitCode::from(3),
    }
}

#[allow(clippy::too_many_arguments)]
fn verify(
    id: &str,
    params: &ParamArgs,
    cutoff: Option<usize>,
    nmax: Option<usize>,
    modulus: usize,
    residues: &str,
    format: Format,
) -> Result<ExitCode, Failure> {
    let p = params.build()?;
    let report = match id {
        "marked-sum" => {
            let lambda = p.lambda.as_ref().ok_or_else(|| {
                Failure::from(VerifyError::MissingParam { id: id.into(), name: "lambda".into() })
            })?;
            let rs: Vec<usize> = residues
                .split(',')
                .map(|r| r.trim().parse())
                .collect::<Result<_, _>>()
                .map_err(|_| Failure::Usage("--residues: expected comma separated integers".into()))?;
            let set = ConstraintSet::residues(modulus, &rs).map_err(|e| Failure::Usage(format!("--residues: {e}")))?;
            verify_marked_sum(lambda, &set, cutoff.unwrap_or(40))?
        }
        "inequality" => {
            let m = required(id, "M", p.m)?;
            let missing = |name: &str| Failure::from(VerifyError::MissingParam { id: id.into(), name: name.into() });
            let lambda = p.lambda.as_ref().ok_or_else(|| missing("lambda"))?;
            let theta = p.theta.as_ref().ok_or_else(|| missing("theta"))?;
            verify_inequality(m, lambda, theta, nmax.or(cutoff).unwrap_or(60))?
        }
        _ => {
            if let Ok(spec) = find_series(id) {
                verify_series(id, &p, cutoff.unwrap_or(spec.default_cutoff))?
            } else {
                let id = canonical_theorem(id);
                let spec = find_comb(id).map_err(|_| unknown(id))?;
                verify_combinatorial(id, &p, nmax.unwrap_or(spec.default_n_max))?
            }
        }
    };
    print_report(&report, format);
    Ok(report_code(&report))
}

fn witness(theorem: &str, params: &ParamArgs, n: usize, j: Option<usize>, format: Format) -> Result<ExitCode, Failure> {
    let id = canonical_theorem(theorem);
    let spec = find_comb(id)?;
    let mut p = params.build()?;
    let k = if spec.params.contains(&"k") {
        required(id, "j", j)?
    } else {
        j.or(p.k.take()).unwrap_or(0)
    };
    let (left, right) = witness_sets(id, &p, n, k)?;
    match format {
        Format::Json => {
            let v = serde_json::json!({
                "theorem": id,
                "params": p,
                "n": n,
                "k": k,
                "left": left,
                "right": right,
            });
            println!("{v}");
        }
        Format::Text => {
            for (name, side) in [("left", &left), ("right", &right)] {
                println!("{name} ({}):", side.len());
                for mu in side {
                    println!("  {}", mu.to_multiplicity_string());
                }
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn table(theorem: &str, k: usize, a: usize, m: usize, n: usize, format: Format) -> Result<ExitCode, Failure> {
    if canonical_theorem(theorem) != "agcombm" {
        return Err(Failure::Usage(format!("--theorem: tables exist only for ag-comb, got {theorem:?}")));
    }
    let t = ag_table(k, a, m, n)?;
    match format {
        Format::Json => println!("{}", serde_json::to_string(&t).expect("table serializes")),
        Format::Text => println!("{t}"),
    }
    Ok(if t.distributions_agree() { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn bijection(map: Map, m: Option<usize>, input: &str, trace: bool, format: Format) -> Result<ExitCode, Failure> {
    let lambda = parse_partition("input", input)?;
    let result: BijectionTrace = match map {
        Map::Fh => fishhook_trace(&lambda),
        Map::Fhm => {
            let m = m.ok_or_else(|| Failure::Usage("--M is required for --map fhm".into()))?;
            fishhook_m_trace(&lambda, m)
        }
    }
    .map_err(|e| Failure::Usage(format!("--input: {e}")))?;
    match (format, trace) {
        (Format::Json, true) => println!("{}", serde_json::to_string(&result).expect("trace serializes")),
        (Format::Json, false) => println!("{}", serde_json::to_string(&result.output).expect("partition serializes")),
        (Format::Text, _) => {
            println!("{}", result.output.to_multiplicity_string());
            if trace {
                for step in &result.steps {
                    println!("  {}", serde_json::to_string(step).expect("step serializes"));
                }
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn series(id: &str, params: &ParamArgs, cutoff: Option<usize>, side: Side) -> Result<ExitCode, Failure> {
    let spec = find_series(id)?;
    let p = params.build()?;
    let cutoff = cutoff.unwrap_or(spec.default_cutoff);
    let s = match side {
        Side::Lhs => spec.lhs(&p, cutoff)?,
        Side::Rhs => spec.rhs(&p, cutoff)?,
    };
    println!("{}", to_machine(&s));
    Ok(ExitCode::SUCCESS)
}

fn suite(nmax: Option<usize>, cutoff: Option<usize>, format: Format) -> Result<ExitCode, Failure> {
    let reports = run_suite(&default_jobs(nmax, cutoff))?;
    match format {
        Format::Json => {
            for r in &reports {
                println!("{}", serde_json::to_string(r).expect("report serializes"));
            }
        }
        Format::Text => print!("{}", suite_tsv(&reports)),
    }
    let failed = reports.iter().filter(|r| !r.passed()).count();
    eprintln!("{} jobs, {} passed, {} not passed", reports.len(), reports.len() - failed, failed);
    Ok(if failed == 0 { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Verify {
            id,
            params,
            cutoff,
            nmax,
            modulus,
            residues,
            format,
        } => verify(id, params, *cutoff, *nmax, *modulus, residues, *format),
        Command::Suite { nmax, cutoff, format } => suite(*nmax, *cutoff, *format),
        Command::Witness {
            theorem,
            params,
            n,
            j,
            format,
        } => witness(theorem, params, *n, *j, *format),
        Command::Table {
            theorem,
            k,
            a,
            m,
            n,
            format,
        } => table(theorem, *k, *a, *m, *n, *format),
        Command::Bijection {
            map,
            m,
            input,
            trace,
            format,
        } => bijection(*map, *m, input, *trace, *format),
        Command::Series {
            id,
            params,
            cutoff,
            side,
        } => series(id, params, *cutoff, *side),
    };
    match outcome {
        Ok(code) => code,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Hypothesis(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
        Err(Failure::Runtime(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}
