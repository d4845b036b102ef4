mod report;

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use plates_core::checks::{self, Check, Context, Group, Outcome, Status};
use plates_core::cone::{self, ConeH, ConeV};
use plates_core::lattice::{self, LatticePointSet};
use plates_core::poly::{parse_rational, Rational};
use plates_core::pt_sum::{self, CyclicSubwordConstraintSet, PositionConstraintSet};

use report::Report;

#[derive(Parser)]
#[command(
    name = "plates",
    version,
    about = "Exact verification of Parke-Taylor, plate and invariant-polynomial identities"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write the root-edge graph as DOT (polytope edges only).
    #[arg(long, global = true)]
    dot: Option<PathBuf>,
    /// JSON list of six-coordinate points for the Jacobian checks.
    #[arg(long = "seed-points", global = true)]
    seed_points: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run a verification suite.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        /// Run a single case of the suite.
        #[arg(long)]
        case: Option<String>,
    },
    /// Orbit polytopes and lattice growth.
    #[command(subcommand)]
    Polytope(PolytopeCommand),
    /// Constrained Parke-Taylor sums from a constraint file.
    #[command(subcommand)]
    Sum(SumCommand),
    /// Cones in H- and V-description.
    #[command(subcommand)]
    Cone(ConeCommand),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    All,
    PtSum,
    Relations,
    Straightening,
    Rep,
    Jacobian,
    Segre,
    Igusa,
    Plate,
    Corollary,
    Polytope,
}

impl Suite {
    fn group(self) -> Option<Group> {
        match self {
            Suite::All => None,
            Suite::PtSum => Some(Group::PtSum),
            Suite::Relations => Some(Group::Relations),
            Suite::Straightening => Some(Group::Straightening),
            Suite::Rep => Some(Group::Rep),
            Suite::Jacobian => Some(Group::Jacobian),
            Suite::Segre => Some(Group::Segre),
            Suite::Igusa => Some(Group::Igusa),
            Suite::Plate => Some(Group::Plate),
            Suite::Corollary => Some(Group::Corollary),
            Suite::Polytope => Some(Group::Polytope),
        }
    }
}

#[derive(Debug, Subcommand)]
enum PolytopeCommand {
    /// Root-edge graph of an orbit polytope.
    Edges {
        #[arg(long, value_enum)]
        target: Target,
    },
    /// Word-length growth of both generator sets and dilation counts.
    Growth {
        #[arg(long, default_value_t = 8)]
        depth: usize,
        #[arg(long, default_value_t = 5)]
        dilations: usize,
    },
    /// Image under summing coordinates over blocks.
    Lumping {
        #[arg(long, value_enum)]
        target: Target,
        /// Blocks such as `1,2;3,4;5,6`; defaults to consecutive blocks.
        #[arg(long)]
        blocks: Option<String>,
    },
    /// Newton-polytope supports against wreath orbits.
    Support,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Target {
    CPolytope,
    WeightPerm,
    Sl4,
    Permutohedron3,
    Permutohedron4,
}

impl Target {
    fn points(self) -> LatticePointSet {
        match self {
            Target::CPolytope => lattice::c_polytope(),
            Target::WeightPerm => lattice::weight_permutohedron(),
            Target::Sl4 => lattice::sl4_polytope(),
            Target::Permutohedron3 => lattice::permutohedron_vertices(3),
            Target::Permutohedron4 => lattice::permutohedron_vertices(4),
        }
    }

    fn base_vertex(self) -> Vec<i64> {
        match self {
            Target::CPolytope => lattice::C_VERTEX.to_vec(),
            Target::WeightPerm => lattice::WEIGHT_VERTEX.to_vec(),
            Target::Sl4 => lattice::SL4_VERTEX.to_vec(),
            Target::Permutohedron3 => vec![0, 1, 2],
            Target::Permutohedron4 => vec![0, 1, 2, 3],
        }
    }

    fn default_blocks(self) -> Vec<Vec<usize>> {
        match self {
            Target::Sl4 => lattice::consecutive_blocks(3, 4),
            Target::CPolytope | Target::WeightPerm => lattice::consecutive_blocks(2, 3),
            Target::Permutohedron3 => lattice::consecutive_blocks(1, 3),
            Target::Permutohedron4 => lattice::consecutive_blocks(1, 4),
        }
    }

    fn name(self) -> &'static str {
        match self {
            Target::CPolytope => "c-polytope",
            Target::WeightPerm => "weight-perm",
            Target::Sl4 => "sl4",
            Target::Permutohedron3 => "permutohedron3",
            Target::Permutohedron4 => "permutohedron4",
        }
    }
}

#[derive(Debug, Subcommand)]
enum SumCommand {
    /// Position-constrained sum over nine labels.
    Nine {
        #[arg(long)]
        constraints: PathBuf,
    },
    /// Position-constrained sum for any number of labels.
    Positions {
        #[arg(long)]
        constraints: PathBuf,
    },
    /// Sum over cyclic orders containing the given oriented triples.
    Cyclic {
        #[arg(long)]
        constraints: PathBuf,
    },
}

#[derive(Debug, Subcommand)]
enum ConeCommand {
    /// The six-variable nonplanar plate in both descriptions.
    Plate,
    /// Extreme rays of a cone given as `{"ineq": …, "eq": …}`.
    Rays {
        #[arg(long)]
        input: PathBuf,
    },
    /// Whether an H-cone and a V-cone coincide.
    Equal {
        #[arg(long = "h")]
        h: PathBuf,
        #[arg(long = "v")]
        v: PathBuf,
    },
}

/// A failure before any check ran: bad input or flags.
struct UsageError(String);

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

type Run<T> = Result<T, UsageError>;

fn read(path: &Path) -> Run<String> {
    fs::read_to_string(path).map_err(|e| UsageError(format!("{}: {e}", path.display())))
}

fn parse_points(text: &str) -> Run<Vec<Vec<Rational>>> {
    let raw: Vec<Vec<Value>> = serde_json::from_str(text)?;
    let mut points = Vec::new();
    for row in raw {
        if row.len() != 6 {
            return Err(UsageError(format!(
                "seed point needs 6 coordinates, got {}",
                row.len()
            )));
        }
        let pt = row
            .iter()
            .map(|v| match v {
                Value::String(s) => parse_rational(s).map_err(UsageError::from),
                Value::Number(n) => n
                    .as_i64()
                    .map(|i| Rational::from_integer(i.into()))
                    .ok_or_else(|| UsageError(format!("{n} is not an integer; use \"p/q\""))),
                other => Err(UsageError(format!("bad coordinate {other}"))),
            })
            .collect::<Run<Vec<_>>>()?;
        points.push(pt);
    }
    if points.is_empty() {
        return Err(UsageError("seed point file is empty".into()));
    }
    Ok(points)
}

fn outcome(name: &str, pass: bool, witness: String, start: Instant) -> Outcome {
    Outcome {
        name: name.into(),
        status: if pass { Status::Pass } else { Status::Fail },
        witness: Some(witness),
        wall_millis: start.elapsed().as_millis() as u64,
    }
}

struct Invocation {
    inputs: Vec<String>,
    entries: Vec<Outcome>,
    data: Option<Value>,
    dot: Option<String>,
}

impl Invocation {
    fn new() -> Self {
        Invocation {
            inputs: Vec::new(),
            entries: Vec::new(),
            data: None,
            dot: None,
        }
    }
}

fn verify(suite: Suite, case: Option<&str>, ctx: &Context) -> Run<Vec<Outcome>> {
    let selected: Vec<Check> = checks::registry()
        .into_iter()
        .filter(|c| suite.group().is_none_or(|g| c.group == g))
        .collect();
    let selected = match case {
        None => selected,
        Some(case) => {
            let hit: Vec<Check> = selected
                .iter()
                .copied()
                .filter(|c| c.case == case)
                .collect();
            if hit.is_empty() {
                let known: Vec<&str> = selected.iter().map(|c| c.case).collect();
                return Err(UsageError(format!(
                    "unknown case {case}; known cases: {}",
                    known.join(", ")
                )));
            }
            hit
        }
    };
    Ok(checks::run_all(&selected, ctx))
}

fn polytope(cmd: &PolytopeCommand, inv: &mut Invocation) -> Run<()> {
    match cmd {
        PolytopeCommand::Edges { target } => {
            let pts = target.points();
            let graph = lattice::root_edge_graph(&pts);
            let base = target.base_vertex();
            let dirs: Vec<String> = graph
                .edge_directions(&base)
                .unwrap_or_default()
                .iter()
                .map(|(i, j)| format!("e{i}-e{j}"))
                .collect();
            inv.data = Some(json!({
                "target": target.name(),
                "vertexCount": graph.vertices.len(),
                "edgeCount": graph.edges.len(),
                "onCommonSphere": pts.on_common_sphere(),
                "baseVertex": base,
                "edgeDirections": dirs,
                "fourCycles": lattice::four_cycle_affine_rank(&graph),
            }));
            inv.dot = Some(graph.to_dot());
        }
        PolytopeCommand::Growth { depth, dilations } => {
            let start = Instant::now();
            let g = lattice::growth_comparison(*depth, *dilations)?;
            let pass = g.sequences_coincide && !g.conventions_matching_target.is_empty();
            let witness = format!(
                "coincide {}; matching {:?}; differing: {}",
                g.sequences_coincide,
                g.conventions_matching_target,
                g.discrepancies.join("; ")
            );
            inv.entries
                .push(outcome("polytope/growth", pass, witness, start));
            inv.data = Some(serde_json::to_value(&g)?);
        }
        PolytopeCommand::Lumping { target, blocks } => {
            let blocks = match blocks {
                Some(text) => parse_blocks(text)?,
                None => target.default_blocks(),
            };
            let image = lattice::lumping_projection(&target.points(), &blocks)?;
            let perm = lattice::permutohedron_vertices(image.dimension);
            inv.data = Some(json!({
                "target": target.name(),
                "blocks": blocks,
                "imageSize": image.len(),
                "isPermutohedron": image == perm,
                "image": image.points,
            }));
        }
        PolytopeCommand::Support => {
            inv.entries = ["polytope/support-six", "polytope/support-twelve"]
                .iter()
                .map(|n| {
                    checks::find(n)
                        .expect("registered")
                        .run(&Context::default())
                })
                .collect();
        }
    }
    Ok(())
}

fn parse_blocks(text: &str) -> Run<Vec<Vec<usize>>> {
    text.split(';')
        .map(|b| {
            b.split(',')
                .map(|l| l.trim().parse::<usize>().map_err(UsageError::from))
                .collect()
        })
        .collect()
}

fn sum(cmd: &SumCommand, inv: &mut Invocation) -> Run<()> {
    let start = Instant::now();
    match cmd {
        SumCommand::Nine { constraints } | SumCommand::Positions { constraints } => {
            let text = read(constraints)?;
            inv.inputs.push(text.clone());
            let c = PositionConstraintSet::from_json(&text)?;
            if matches!(cmd, SumCommand::Nine { .. }) && c.n != 9 {
                return Err(UsageError(format!("expected n = 9, got {}", c.n)));
            }
            let (report, agrees) = checks::constrained_sum_with_oracle(&c)?;
            inv.entries.push(outcome(
                "sum/pointwise-oracle",
                agrees,
                format!(
                    "{} terms, {} classes",
                    report.term_count, report.class_count
                ),
                start,
            ));
            inv.data = Some(report.to_json());
        }
        SumCommand::Cyclic { constraints } => {
            let text = read(constraints)?;
            inv.inputs.push(text.clone());
            let c = CyclicSubwordConstraintSet::from_json(&text)?;
            let n = c.size();
            let cycles = pt_sum::enumerate_cycles_with_subcycles(n, &c)?;
            if cycles.is_empty() {
                return Err(UsageError(
                    "no cyclic order satisfies the constraints".into(),
                ));
            }
            let total = pt_sum::pt_sum(&cycles)?;
            let point = checks::distinct_point(n);
            let agrees = total.evaluate(&point)? == checks::direct_pt_value(&cycles, &point);
            let root = pt_sum::verify_square_numerator(&total);
            inv.entries.push(outcome(
                "sum/pointwise-oracle",
                agrees,
                format!("{} cyclic orders", cycles.len()),
                start,
            ));
            inv.data = Some(json!({
                "n": n,
                "cycles": cycles,
                "sum": total.to_json(),
                "squareRoot": root.map(|r| json!({
                    "root": r.root.to_text(),
                    "sign": r.sign,
                    "pairing": r.candidate.map(|p| p.to_string()),
                })),
            }));
        }
    }
    Ok(())
}

fn cone_command(cmd: &ConeCommand, inv: &mut Invocation) -> Run<()> {
    match cmd {
        ConeCommand::Plate => {
            let h = cone::nonplanar_plate();
            let v = cone::extreme_rays(&h)?;
            inv.data = Some(json!({
                "h": {"ineq": h.ineq, "eq": h.eq},
                "v": {"rays": v.rays},
            }));
            inv.entries = [
                "plate/extreme-rays",
                "plate/cone-equal",
                "plate/x12-redundant",
            ]
            .iter()
            .map(|n| {
                checks::find(n)
                    .expect("registered")
                    .run(&Context::default())
            })
            .collect();
        }
        ConeCommand::Rays { input } => {
            let text = read(input)?;
            inv.inputs.push(text.clone());
            let h = ConeH::from_json(&text)?;
            let v = cone::extreme_rays(&h)?;
            inv.data = Some(json!({"rays": v.rays}));
        }
        ConeCommand::Equal { h, v } => {
            let start = Instant::now();
            let (ht, vt) = (read(h)?, read(v)?);
            inv.inputs.push(ht.clone());
            inv.inputs.push(vt.clone());
            let hc = ConeH::from_json(&ht)?;
            let vc = ConeV::from_json(&vt)?;
            let equal = cone::cone_equal(&hc, &vc)?;
            inv.entries.push(outcome(
                "cone/equal",
                equal,
                format!("equal {equal}"),
                start,
            ));
        }
    }
    Ok(())
}

fn run(cli: &Cli) -> Run<Invocation> {
    let mut ctx = Context::default();
    let mut seed_input = None;
    if let Some(path) = &cli.seed_points {
        let text = read(path)?;
        ctx.jacobian_points = parse_points(&text)?;
        seed_input = Some(text);
    }
    let is_edges = matches!(
        cli.command,
        Command::Polytope(PolytopeCommand::Edges { .. })
    );
    if cli.dot.is_some() && !is_edges {
        return Err(UsageError("--dot applies only to `polytope edges`".into()));
    }
    let mut inv = match &cli.command {
        Command::Verify { suite, case } => {
            let mut inv = Invocation::new();
            inv.entries = verify(*suite, case.as_deref(), &ctx)?;
            inv
        }
        Command::Polytope(cmd) => {
            let mut inv = Invocation::new();
            polytope(cmd, &mut inv)?;
            inv
        }
        Command::Sum(cmd) => {
            let mut inv = Invocation::new();
            sum(cmd, &mut inv)?;
            inv
        }
        Command::Cone(cmd) => {
            let mut inv = Invocation::new();
            cone_command(cmd, &mut inv)?;
            inv
        }
    };
    if let Some(text) = seed_input {
        inv.inputs.push(text);
    }
    Ok(inv)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let inv = match run(&cli) {
        Ok(inv) => inv,
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };
    if let (Some(path), Some(dot)) = (&cli.dot, &inv.dot) {
        if let Err(e) = fs::write(path, dot) {
            eprintln!("error: {}: {e}", path.display());
            return ExitCode::from(2);
        }
    }
    let command = format!("{:?}", cli.command);
    let report = Report::new(&command, &inv.inputs, inv.entries, inv.data);
    let text = match cli.format {
        Format::Json => report.to_json() + "\n",
        Format::Text => report.to_text(),
    };
    // A closed pipe downstream is not an error of the verification.
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
    if report.any_failed() {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}
