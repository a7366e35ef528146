//! `pinv`: enumerate partition families, trace the involutions, print
//! pairing tables, and verify the weighted theorems and q-series identities.
//!
//! Exit status is 0 on success, 1 when a verification fails and 2 on a
//! usage error (bad flags, or a partition outside the requested family).

use std::fmt::Write as _;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use pinv::involution::{b_to_pair, pair_table, phi, psi_do_trace, psi_q, PsiTrace};
use pinv::modular::ModularDiagram;
use pinv::weight::verify_theorem;
use pinv::{CaseTag, FamilySpec, Identity, PairState, Partition, Side, Theorem};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use serde::{Deserialize, Serialize};

#[derive(Parser)]
#[command(name = "pinv", version, about = "Partition involutions and partial theta identities")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the members of a family of a given weight.
    Enumerate {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long)]
        n: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Apply one involution step and show the intermediate values.
    Involute {
        #[arg(long, value_enum)]
        map: MapKind,
        #[arg(long, default_value_t = 1)]
        m: u32,
        /// Comma-separated parts, largest first. Without it a member of
        /// weight `--n` is drawn at random using `--seed`.
        #[arg(long, value_parser = parse_partition)]
        partition: Option<Partition>,
        /// The second partition of the pair, for `--map phi`.
        #[arg(long, value_parser = parse_partition)]
        sigma: Option<Partition>,
        #[arg(long)]
        n: Option<u64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Print every orbit of the family's involution at one weight.
    PairTable {
        #[command(flatten)]
        family: FamilyArgs,
        #[arg(long)]
        n: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Check a weighted partition theorem for every n up to `--nmax`.
    Verify {
        /// T3.1, T3.2, T4.1, T5.1, T6.1, AndrewsProblem, T8.2 or T8.2(m).
        #[arg(long)]
        theorem: String,
        #[arg(long)]
        nmax: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Compare both sides of a q-series identity up to q^N, or print one side.
    Series {
        #[arg(long)]
        identity: String,
        #[arg(long, default_value_t = 1)]
        m: u32,
        #[arg(long = "N")]
        order: usize,
        /// Print this side instead of comparing.
        #[arg(long, value_enum)]
        side: Option<SideArg>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Draw the 2m-modular diagram of a partition.
    Render {
        #[arg(long, value_parser = parse_partition)]
        partition: Partition,
        #[arg(long, default_value_t = 1)]
        m: u32,
        #[arg(long, value_enum, default_value_t = RenderFormat::Text)]
        format: RenderFormat,
    },
}

#[derive(clap::Args)]
struct FamilyArgs {
    #[arg(long, value_enum)]
    family: FamilyArg,
    #[arg(long, default_value_t = 1)]
    m: u32,
}

impl FamilyArgs {
    fn spec(&self) -> FamilySpec {
        let m = self.m;
        match self.family {
            FamilyArg::Distinct => FamilySpec::AllDistinct,
            FamilyArg::Pdo => FamilySpec::Pdo { m },
            FamilyArg::Q => FamilySpec::Q,
            FamilyArg::A => FamilySpec::A { m },
            FamilyArg::B => FamilySpec::B { m },
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FamilyArg {
    Distinct,
    Pdo,
    Q,
    A,
    B,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum RenderFormat {
    Text,
    Json,
    Svg,
}

#[derive(Clone, Copy, ValueEnum)]
enum SideArg {
    Lhs,
    Rhs,
}

#[derive(Clone, Copy, ValueEnum)]
#[value(rename_all = "snake_case")]
enum MapKind {
    Phi,
    PsiDo,
    PsiQ,
    BPair,
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    let s = s.trim();
    if s.is_empty() || s == "()" {
        return Ok(Partition::empty());
    }
    let parts = s
        .split(',')
        .map(|x| x.trim().parse::<i64>().map_err(|e| format!("bad part `{x}`: {e}")))
        .collect::<Result<Vec<_>, _>>()?;
    if parts.windows(2).any(|w| w[0] < w[1]) {
        return Err("parts must be listed largest first".into());
    }
    Partition::new(parts).map_err(|e| e.to_string())
}

/// JSON form of a pair `(pi, sigma)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairJson {
    pub pi: Partition,
    pub sigma: Partition,
}

impl From<&PairState> for PairJson {
    fn from(s: &PairState) -> Self {
        PairJson { pi: s.pi.clone(), sigma: s.sigma.clone() }
    }
}

/// Trace of one step of `psi_do` or `psi_q`. `case` is only present for
/// `psi_q` and `extract` only when a pair was formed; `phi_case` is null
/// when there is no pair or the pair is fixed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartitionTrace {
    pub input: Partition,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub case: Option<CaseTag>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub extract: Option<PairJson>,
    pub phi_case: Option<CaseTag>,
    pub image: Option<Partition>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PhiTrace {
    pub input: PairJson,
    pub phi_case: Option<CaseTag>,
    pub image: Option<PairJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BPairTrace {
    pub input: Partition,
    pub k: usize,
    pub core: Partition,
    pub h: Partition,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesReport {
    pub identity: String,
    pub m: u32,
    #[serde(rename = "N")]
    pub order: usize,
    pub equal: bool,
    pub discrepancy: Option<DiscrepancyJson>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiscrepancyJson {
    pub degree: usize,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DiagramJson {
    pub partition: Partition,
    pub m: u32,
    pub rows: Vec<Vec<u32>>,
}

/// A failed run: `Usage` maps to exit 2, `Failed` to exit 1. Both carry the
/// text to print.
enum Failure {
    Usage(String),
    Failed(String),
}

impl From<pinv::Error> for Failure {
    fn from(e: pinv::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type RunResult = Result<String, Failure>;

fn json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("serializable") + "\n"
}

fn lines<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items.into_iter().map(|x| x.to_string() + "\n").collect()
}

fn enumerate(family: FamilySpec, n: u64, format: Format) -> RunResult {
    let members = family.enumerate(n)?;
    Ok(match format {
        Format::Text => lines(&members),
        Format::Json => json(&members),
    })
}

fn trace_psi_do(t: &PsiTrace) -> PartitionTrace {
    PartitionTrace {
        input: t.input.clone(),
        case: None,
        extract: Some(PairJson::from(&t.extracted)),
        phi_case: t.phi.case(),
        image: t.image.clone(),
    }
}

fn trace_psi_q(lambda: &Partition, m: u32) -> Result<PartitionTrace, Failure> {
    let outcome = psi_q(lambda, m)?;
    let mut trace =
        PartitionTrace { input: lambda.clone(), case: outcome.case(), extract: None, phi_case: None, image: None };
    let through_pairs = lambda.has_zero() && lambda.stats().second_smallest.is_some_and(|s| s % 2 == 1);
    if through_pairs {
        let inner = psi_do_trace(&lambda.without_zero(), m)?;
        trace.extract = Some(PairJson::from(&inner.extracted));
        trace.phi_case = inner.phi.case();
    }
    trace.image = outcome.image().cloned();
    Ok(trace)
}

fn partition_trace_text(t: &PartitionTrace) -> String {
    let mut out = format!("input: {}\n", t.input);
    if let Some(case) = t.case {
        writeln!(out, "case: {case}").unwrap();
    }
    if let Some(pair) = &t.extract {
        writeln!(out, "extract: pi = {}, sigma = {}", pair.pi, pair.sigma).unwrap();
        let phi = t.phi_case.map_or("fixed".to_string(), |c| c.to_string());
        writeln!(out, "phi: {phi}").unwrap();
    }
    let image = t.image.as_ref().map_or("fixed".to_string(), ToString::to_string);
    writeln!(out, "image: {image}").unwrap();
    out
}

fn pick(family: FamilySpec, n: Option<u64>, seed: u64) -> Result<Partition, Failure> {
    let n = n.ok_or_else(|| Failure::Usage("either --partition or --n is required".into()))?;
    let members = family.enumerate(n)?;
    let mut rng = StdRng::seed_from_u64(seed);
    members.choose(&mut rng).cloned().ok_or_else(|| Failure::Usage(format!("{family} has no member of weight {n}")))
}

#[allow(clippy::too_many_arguments)]
fn involute(
    map: MapKind,
    m: u32,
    partition: Option<Partition>,
    sigma: Option<Partition>,
    n: Option<u64>,
    seed: u64,
    format: Format,
) -> RunResult {
    if m == 0 {
        return Err(pinv::Error::ZeroModulus.into());
    }
    let input = |family| match &partition {
        Some(p) => Ok(p.clone()),
        None => pick(family, n, seed),
    };
    match map {
        MapKind::PsiDo => {
            let t = trace_psi_do(&psi_do_trace(&input(FamilySpec::Pdo { m })?, m)?);
            Ok(if format == Format::Json { json(&t) } else { partition_trace_text(&t) })
        }
        MapKind::PsiQ => {
            let t = trace_psi_q(&input(FamilySpec::A { m })?, m)?;
            Ok(if format == Format::Json { json(&t) } else { partition_trace_text(&t) })
        }
        MapKind::Phi => {
            let pi = partition.ok_or_else(|| Failure::Usage("--map phi needs --partition".into()))?;
            let state = PairState::new(pi, sigma.unwrap_or_default(), m)?;
            let outcome = phi(&state)?;
            let t = PhiTrace {
                input: PairJson::from(&state),
                phi_case: outcome.case(),
                image: outcome.image().map(PairJson::from),
            };
            Ok(match format {
                Format::Json => json(&t),
                Format::Text => {
                    let image = match &t.image {
                        Some(p) => format!("pi = {}, sigma = {}", p.pi, p.sigma),
                        None => "fixed".into(),
                    };
                    let case = t.phi_case.map_or("fixed".to_string(), |c| c.to_string());
                    format!("input: pi = {}, sigma = {}\nphi: {case}\nimage: {image}\n", state.pi, state.sigma)
                }
            })
        }
        MapKind::BPair => {
            let mu = input(FamilySpec::B { m })?;
            let (k, h) = b_to_pair(&mu, m)?;
            let t = BPairTrace { input: mu, k, core: pinv::triangular(k), h };
            Ok(match format {
                Format::Json => json(&t),
                Format::Text => format!("input: {}\ncore: {}\nh: {}\n", t.input, t.core, t.h),
            })
        }
    }
}

fn table(family: FamilySpec, n: u64, format: Format) -> RunResult {
    if !matches!(family, FamilySpec::Pdo { .. } | FamilySpec::Q | FamilySpec::A { .. }) {
        return Err(Failure::Usage(format!("{family} has no involution; use pdo, q or a")));
    }
    let rows = pair_table(family, n)?;
    Ok(match format {
        Format::Text => lines(&rows),
        Format::Json => json(&rows),
    })
}

fn verify(theorem: &str, n_max: u64, format: Format) -> RunResult {
    let theorem: Theorem = theorem.parse()?;
    if n_max == 0 {
        return Err(Failure::Usage("--nmax must be at least 1".into()));
    }
    let report = verify_theorem(theorem, n_max)?;
    let out = match format {
        Format::Json => json(&report),
        Format::Text => {
            let mut out = String::new();
            for e in &report.entries {
                writeln!(out, "{}: {} | {} | {}", e.n, e.lhs, e.rhs, if e.ok { "ok" } else { "FAIL" }).unwrap();
            }
            writeln!(out, "{} n<={}: {}", report.theorem, n_max, if report.pass { "pass" } else { "fail" }).unwrap();
            out
        }
    };
    if report.pass {
        Ok(out)
    } else {
        Err(Failure::Failed(out))
    }
}

fn series(identity: &str, m: u32, order: usize, side: Option<SideArg>, format: Format) -> RunResult {
    let id = Identity::parse(identity, m)?;
    if let Some(side) = side {
        let side = match side {
            SideArg::Lhs => Side::Lhs,
            SideArg::Rhs => Side::Rhs,
        };
        let s = id.build(side, order)?;
        return Ok(match format {
            Format::Text => s.to_text(),
            Format::Json => json(&s.coeffs().iter().map(ToString::to_string).collect::<Vec<_>>()),
        });
    }
    let lhs = id.build(Side::Lhs, order)?;
    let rhs = id.build(Side::Rhs, order)?;
    let d = lhs.first_discrepancy(&rhs)?;
    let report = SeriesReport {
        identity: id.name().to_string(),
        m,
        order,
        equal: d.is_none(),
        discrepancy: d.map(|d| DiscrepancyJson { degree: d.degree, lhs: d.left.to_string(), rhs: d.right.to_string() }),
    };
    let out = match format {
        Format::Json => json(&report),
        Format::Text => match &report.discrepancy {
            None => format!("{} (m={m}) N={order}: equal\n", report.identity),
            Some(d) => {
                format!("{} (m={m}) N={order}: differ at q^{}: {} vs {}\n", report.identity, d.degree, d.lhs, d.rhs)
            }
        },
    };
    if report.equal {
        Ok(out)
    } else {
        Err(Failure::Failed(out))
    }
}

const CELL: usize = 24;

fn svg(diagram: &ModularDiagram) -> String {
    let rows = diagram.rows();
    let width = rows.iter().map(Vec::len).max().unwrap_or(0) * CELL;
    let height = rows.len() * CELL;
    let mut out = format!(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{}\" height=\"{}\" font-family=\"monospace\" font-size=\"12\">\n",
        width + 2,
        height + 2
    );
    for (i, row) in rows.iter().enumerate() {
        for (j, cell) in row.iter().enumerate() {
            let (x, y) = (j * CELL + 1, i * CELL + 1);
            writeln!(
                out,
                "<rect x=\"{x}\" y=\"{y}\" width=\"{CELL}\" height=\"{CELL}\" fill=\"none\" stroke=\"black\"/>\
                 <text x=\"{}\" y=\"{}\" text-anchor=\"middle\">{cell}</text>",
                x + CELL / 2,
                y + CELL / 2 + 4
            )
            .unwrap();
        }
    }
    out.push_str("</svg>\n");
    out
}

fn render(partition: &Partition, m: u32, format: RenderFormat) -> RunResult {
    let diagram = ModularDiagram::build(partition, m)?;
    Ok(match format {
        RenderFormat::Text if partition.is_empty() => String::new(),
        RenderFormat::Text => diagram.to_string() + "\n",
        RenderFormat::Json => json(&DiagramJson { partition: partition.clone(), m, rows: diagram.rows().to_vec() }),
        RenderFormat::Svg => svg(&diagram),
    })
}

fn run(cli: Cli) -> RunResult {
    match cli.command {
        Command::Enumerate { family, n, format } => enumerate(family.spec(), n, format),
        Command::Involute { map, m, partition, sigma, n, seed, format } => {
            involute(map, m, partition, sigma, n, seed, format)
        }
        Command::PairTable { family, n, format } => table(family.spec(), n, format),
        Command::Verify { theorem, nmax, format } => verify(&theorem, nmax, format),
        Command::Series { identity, m, order, side, format } => series(&identity, m, order, side, format),
        Command::Render { partition, m, format } => render(&partition, m, format),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(Failure::Failed(out)) => {
            print!("{out}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
