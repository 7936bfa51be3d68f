//! `giambelli` command-line front end.
//!
//! Exit status: 0 when everything checked matched, 2 when a mismatch was
//! found, 1 on usage or input errors.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use giambelli::arith::JsonCoeff;
use giambelli::giambelli::{build_matrix, canonical_kind};
use giambelli::oracles::{count_ssyt, q_weight_ssyt};
use giambelli::outside::{
    build_decomposition, canonical_decomposition, enumerate_decompositions, sample_decompositions,
    DecompositionKind, DirectionVector, OutsideDecomposition,
};
use giambelli::shapes::{Partition, SkewShape};
use giambelli::smith::{verify_theorem, TheoremReport, VerifyOptions, DEFAULT_MINOR_BOUND};
use giambelli::specialize::{
    specialized_skew_schur, substitute_y_as_q_power, PhiT, QDiamond, QHat, Specialization,
};
use giambelli::{Field, Poly, Rational, RationalFunction};

#[derive(Parser)]
#[command(name = "giambelli", version, about = "Smith forms of specialized Giambelli-type matrices")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Worker threads for sweeps (defaults to the number of CPUs).
    #[arg(long, global = true, env = "GIAMBELLI_THREADS")]
    threads: Option<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Spec {
    PhiT,
    QHat,
    QDiamond,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    Horizontal,
    Hook,
    Rim,
}

impl From<Kind> for DecompositionKind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::Horizontal => DecompositionKind::Horizontal,
            Kind::Hook => DecompositionKind::Hook,
            Kind::Rim => DecompositionKind::Rim,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Smith form of one specialized matrix, compared with the prediction.
    Snf(SnfArgs),
    /// Lists outside decompositions in lexicographic direction order.
    ListDecompositions(ListArgs),
    /// Sweeps all partitions up to a size.
    Verify(VerifyArgs),
    /// Checks the tableau and minor-gcd oracles against the algebra.
    OracleCheck(OracleArgs),
}

#[derive(Args)]
#[command(group(clap::ArgGroup::new("selector").required(true).args(["kind", "direction"])))]
struct SnfArgs {
    /// Comma-separated parts, e.g. `3,2,1`.
    #[arg(long)]
    partition: String,
    #[arg(long, value_enum)]
    kind: Option<Kind>,
    /// `U`/`R` string by increasing content, of length `λ_1 + ℓ(λ) - 2`.
    #[arg(long)]
    direction: Option<String>,
    #[arg(long, value_enum, default_value_t = Spec::PhiT)]
    spec: Spec,
    /// Print the matrix too.
    #[arg(long)]
    show_matrix: bool,
    /// Cross-check with the gcd of minors.
    #[arg(long)]
    oracle: bool,
    #[arg(long)]
    report_both_predictions: bool,
}

#[derive(Args)]
struct ListArgs {
    #[arg(long)]
    partition: String,
    #[arg(long)]
    limit: Option<usize>,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    max_size: u64,
    /// Repeatable; each specialization gets its own sweep.
    #[arg(long, value_enum, default_values_t = [Spec::PhiT])]
    spec: Vec<Spec>,
    /// Random decompositions per partition, on top of the canonical ones.
    #[arg(long, default_value_t = 0)]
    random_decomps: usize,
    /// Seed for the ChaCha8 generator that picks random decompositions.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Also compare q-diamond Smith forms with the monic (1 - q^c y) form.
    #[arg(long)]
    report_both_predictions: bool,
    /// Cross-check every matrix of order <= --minor-bound with the gcd of minors.
    #[arg(long)]
    oracle: bool,
    #[arg(long, default_value_t = DEFAULT_MINOR_BOUND)]
    minor_bound: usize,
    /// Compare determinants with the hook-content formula for q-specializations as well.
    #[arg(long)]
    check_determinant: bool,
}

#[derive(Args)]
struct OracleArgs {
    /// Bound on the outer shape size.
    #[arg(long, default_value_t = 5)]
    max_size: usize,
    #[arg(long, default_value_t = 4)]
    max_t: usize,
    /// Largest order for the minor-gcd comparison.
    #[arg(long, default_value_t = 5)]
    minor_bound: usize,
}

/// Everything that makes the command exit 1.
struct UsageError(String);

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

type CmdResult = Result<bool, UsageError>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    if let Some(n) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    }
    let result = match &cli.command {
        Command::Snf(a) => cmd_snf(a, cli.format),
        Command::ListDecompositions(a) => cmd_list(a, cli.format),
        Command::Verify(a) => cmd_verify(a, cli.format),
        Command::OracleCheck(a) => cmd_oracle(a, cli.format),
    };
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(2),
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

/// Canonical JSON: keys sorted, so re-serializing parsed output is identical.
fn print_json<T: Serialize>(v: &T) {
    let value = serde_json::to_value(v).expect("serializable");
    println!("{}", serde_json::to_string_pretty(&value).expect("serializable"));
}

fn parse_partition(s: &str) -> Result<Partition, UsageError> {
    let p: Partition = s.parse()?;
    if p.is_empty() {
        return Err(UsageError("partition must be nonempty".into()));
    }
    Ok(p)
}

fn render<F: Field + JsonCoeff>(values: &[Value], var: &str) -> String {
    let polys: Vec<String> = values
        .iter()
        .map(|v| Poly::<F>::from_json(v).map_or_else(|_| v.to_string(), |p| p.display(var)))
        .collect();
    format!("[{}]", polys.join(", "))
}

fn decomposition_label(dec: &OutsideDecomposition) -> String {
    let dir = dec.direction().to_string();
    let dir = if dir.is_empty() { "-".to_string() } else { dir };
    match canonical_kind(dec) {
        Some(k) => format!("{dir} ({k})"),
        None => dir,
    }
}

// ---- snf ----

fn cmd_snf(a: &SnfArgs, format: Format) -> CmdResult {
    let p = parse_partition(&a.partition)?;
    let dec = match (&a.direction, a.kind) {
        (Some(d), _) => build_decomposition(&p, &DirectionVector::parse(&p, d)?)?,
        (None, Some(k)) => canonical_decomposition(&p, k.into())?,
        (None, None) => unreachable!("clap enforces the selector group"),
    };
    match a.spec {
        Spec::PhiT => snf_with(&PhiT::new(), &dec, a, format),
        Spec::QHat => snf_with(&QHat::new(), &dec, a, format),
        Spec::QDiamond => snf_with(&QDiamond::new(), &dec, a, format),
    }
}

fn snf_with<S: Specialization>(s: &S, dec: &OutsideDecomposition, a: &SnfArgs, format: Format) -> CmdResult {
    let options = VerifyOptions {
        minor_oracle: a.oracle,
        report_alternative: a.report_both_predictions,
        ..Default::default()
    };
    let report = verify_theorem(dec, s, &options)?;
    let matrix = a.show_matrix.then(|| build_matrix(dec, s));
    match format {
        Format::Json => {
            let mut v = serde_json::to_value(&report)?;
            if let Some(m) = &matrix {
                v["matrix"] = serde_json::to_value(m.to_json())?;
            }
            print_json(&v);
        }
        Format::Text => {
            let var = s.variable();
            println!("partition:      {}", dec.shape());
            println!("decomposition:  {}", decomposition_label(dec));
            println!("specialization: {}", report.specialization);
            if let Some(m) = &matrix {
                println!("matrix:");
                for i in 0..m.order() {
                    let row: Vec<String> = (0..m.order()).map(|j| m.entries()[(i, j)].display(var)).collect();
                    println!("  [{}]", row.join(", "));
                }
            }
            println!("snf:            {}", render::<S::Coeff>(&report.snf, var));
            println!("predicted:      {}", render::<S::Coeff>(&report.predicted, var));
            if let Some(alt) = &report.alt_predicted {
                println!("alternative:    {}", render::<S::Coeff>(alt, var));
                println!("alt match:      {}", report.alt_match == Some(true));
            }
            if let Some(d) = report.determinant_matches {
                println!("determinant:    {}", if d { "matches" } else { "differs" });
            }
            if let Some(o) = report.oracle_match {
                println!("minor oracle:   {}", if o { "agrees" } else { "disagrees" });
            }
            println!("match:          {}", report.matches);
        }
    }
    Ok(report.passed())
}

// ---- list-decompositions ----

#[derive(Serialize)]
struct Listed {
    direction: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    kind: Option<&'static str>,
    strips: Vec<Vec<[i64; 2]>>,
}

fn cmd_list(a: &ListArgs, format: Format) -> CmdResult {
    let p = parse_partition(&a.partition)?;
    let decs: Vec<OutsideDecomposition> = enumerate_decompositions(&p)?
        .take(a.limit.unwrap_or(usize::MAX))
        .collect();
    let total = 1u128 << (p.part(1) + p.len() - 2);
    match format {
        Format::Json => {
            let listed: Vec<Listed> = decs
                .iter()
                .map(|d| Listed {
                    direction: d.direction().to_string(),
                    kind: canonical_kind(d).map(DecompositionKind::name),
                    strips: d
                        .strips()
                        .iter()
                        .map(|s| s.cells().iter().map(|&c| c.into()).collect())
                        .collect(),
                })
                .collect();
            print_json(&json!({
                "partition": p.parts(),
                "total": total.to_string(),
                "listed": listed.len(),
                "decompositions": listed,
            }));
        }
        Format::Text => {
            println!("{p}: {total} outside decompositions");
            for d in &decs {
                let strips: Vec<String> = d
                    .strips()
                    .iter()
                    .map(|s| {
                        let cells: Vec<String> = s.cells().iter().map(ToString::to_string).collect();
                        format!("{{{}}}", cells.join(" "))
                    })
                    .collect();
                println!("  {:<24} {}", decomposition_label(d), strips.join(" "));
            }
        }
    }
    Ok(true)
}

// ---- verify ----

#[derive(Serialize)]
struct InstanceFlags {
    partition: Vec<usize>,
    decomposition: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    kind: Option<String>,
    specialization: String,
    #[serde(rename = "match")]
    matches: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    alt_match: Option<bool>,
}

#[derive(Serialize)]
struct SpecSummary {
    specialization: String,
    total: usize,
    matched: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    alt_matched: Option<usize>,
}

#[derive(Serialize)]
struct VerifySummary {
    max_size: u64,
    random_decomps: usize,
    seed: u64,
    total: usize,
    matched: usize,
    mismatched: Vec<TheoremReport>,
    by_specialization: Vec<SpecSummary>,
    #[serde(skip_serializing_if = "Option::is_none")]
    instances: Option<Vec<InstanceFlags>>,
}

fn sweep<S: Specialization>(s: &S, decs: &[OutsideDecomposition], options: &VerifyOptions) -> Result<Vec<TheoremReport>, UsageError> {
    decs.par_iter()
        .map(|d| verify_theorem(d, s, options).map_err(UsageError::from))
        .collect()
}

fn cmd_verify(a: &VerifyArgs, format: Format) -> CmdResult {
    let partitions = Partition::all_up_to(a.max_size as usize);
    let mut decs = Vec::new();
    for (i, p) in partitions.iter().enumerate() {
        // every kind counts as an instance, even where two coincide
        let canonical: Vec<OutsideDecomposition> = DecompositionKind::ALL
            .iter()
            .map(|&k| canonical_decomposition(p, k))
            .collect::<Result<_, _>>()?;
        let extra: Vec<OutsideDecomposition> = sample_decompositions(p, a.random_decomps, a.seed.wrapping_add(i as u64))?
            .into_iter()
            .filter(|d| !canonical.contains(d))
            .collect();
        decs.extend(canonical);
        decs.extend(extra);
    }
    let mut specs = a.spec.clone();
    specs.dedup();
    let mut reports = Vec::new();
    let mut by_spec = Vec::new();
    for spec in specs {
        let options = VerifyOptions {
            minor_oracle: a.oracle,
            minor_bound: a.minor_bound,
            report_alternative: a.report_both_predictions,
            check_determinant: spec == Spec::PhiT || a.check_determinant,
        };
        let batch = match spec {
            Spec::PhiT => sweep(&PhiT::new(), &decs, &options)?,
            Spec::QHat => sweep(&QHat::new(), &decs, &options)?,
            Spec::QDiamond => sweep(&QDiamond::new(), &decs, &options)?,
        };
        let has_alt = batch.iter().any(|r| r.alt_match.is_some());
        by_spec.push(SpecSummary {
            specialization: batch.first().map(|r| r.specialization.clone()).unwrap_or_default(),
            total: batch.len(),
            matched: batch.iter().filter(|r| r.passed()).count(),
            alt_matched: has_alt.then(|| batch.iter().filter(|r| r.alt_match == Some(true)).count()),
        });
        reports.extend(batch);
    }

    let instances = a.report_both_predictions.then(|| {
        reports
            .iter()
            .map(|r| InstanceFlags {
                partition: r.partition.clone(),
                decomposition: r.decomposition.clone(),
                kind: r.kind.clone(),
                specialization: r.specialization.clone(),
                matches: r.matches,
                alt_match: r.alt_match,
            })
            .collect::<Vec<_>>()
    });
    let total = reports.len();
    let mismatched: Vec<TheoremReport> = reports.into_iter().filter(|r| !r.passed()).collect();
    let summary = VerifySummary {
        max_size: a.max_size,
        random_decomps: a.random_decomps,
        seed: a.seed,
        total,
        matched: total - mismatched.len(),
        mismatched,
        by_specialization: by_spec,
        instances,
    };
    let ok = summary.mismatched.is_empty();
    match format {
        Format::Json => print_json(&summary),
        Format::Text => {
            for s in &summary.by_specialization {
                print!("{}: {}/{} matched", s.specialization, s.matched, s.total);
                if let Some(alt) = s.alt_matched {
                    print!(", alternative form matched {alt}/{}", s.total);
                }
                println!();
            }
            if let Some(instances) = &summary.instances {
                for i in instances {
                    let alt = i.alt_match.map_or("-".to_string(), |b| b.to_string());
                    println!(
                        "  {:?} {} {} match={} alt_match={alt}",
                        i.partition,
                        if i.decomposition.is_empty() { "-" } else { &i.decomposition },
                        i.specialization,
                        i.matches
                    );
                }
            }
            for r in &summary.mismatched {
                println!("MISMATCH {:?} {} {}", r.partition, r.decomposition, r.specialization);
            }
            println!("total {}, matched {}", summary.total, summary.matched);
        }
    }
    Ok(ok)
}

// ---- oracle-check ----

#[derive(Serialize)]
struct OracleSummary {
    tableau_checks: usize,
    minor_checks: usize,
    total: usize,
    matched: usize,
    mismatched: Vec<String>,
}

fn cmd_oracle(a: &OracleArgs, format: Format) -> CmdResult {
    let mut shapes = Vec::new();
    for outer in Partition::all_up_to(a.max_size) {
        for inner in outer.subpartitions() {
            shapes.push(SkewShape::new(outer.clone(), inner)?);
        }
    }
    let (phi, hat) = (PhiT::new(), QHat::new());
    let tableau: Vec<Option<String>> = shapes
        .par_iter()
        .flat_map_iter(|shape| {
            let a_phi = specialized_skew_schur(&phi, shape);
            let a_hat = specialized_skew_schur(&hat, shape);
            (0..=a.max_t).map(move |t| {
                let count = Rational::from_integer(count_ssyt(shape, t).into());
                let weight = RationalFunction::from_poly(q_weight_ssyt(shape, t));
                let ok = a_phi.eval(&Rational::from_integer((t as i64).into())) == count
                    && substitute_y_as_q_power(&a_hat, t as u32) == weight;
                (!ok).then(|| format!("tableaux {shape} t={t}"))
            })
        })
        .collect();

    let options = VerifyOptions {
        minor_oracle: true,
        minor_bound: a.minor_bound,
        report_alternative: false,
        check_determinant: false,
    };
    let decs: Vec<OutsideDecomposition> = Partition::all_up_to(a.max_size)
        .iter()
        .flat_map(|p| DecompositionKind::ALL.map(|k| canonical_decomposition(p, k)))
        .collect::<Result<_, _>>()?;
    let mut minor = Vec::new();
    for r in sweep(&phi, &decs, &options)?.into_iter().chain(sweep(&hat, &decs, &options)?) {
        if r.oracle_checked {
            minor.push((r.oracle_match == Some(true)).then_some(()).ok_or_else(|| {
                format!("minor gcd {:?} {} {}", r.partition, r.decomposition, r.specialization)
            }));
        }
    }

    let mut mismatched: Vec<String> = tableau.iter().flatten().cloned().collect();
    mismatched.extend(minor.iter().filter_map(|r| r.clone().err()));
    let total = tableau.len() + minor.len();
    let summary = OracleSummary {
        tableau_checks: tableau.len(),
        minor_checks: minor.len(),
        total,
        matched: total - mismatched.len(),
        mismatched,
    };
    let ok = summary.mismatched.is_empty();
    match format {
        Format::Json => print_json(&summary),
        Format::Text => {
            println!("tableau oracle: {} checks", summary.tableau_checks);
            println!("minor-gcd oracle: {} matrices", summary.minor_checks);
            for m in &summary.mismatched {
                println!("MISMATCH {m}");
            }
            println!("total {}, matched {}", summary.total, summary.matched);
        }
    }
    Ok(ok)
}
