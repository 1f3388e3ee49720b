//! Command-line front end: input parsing, subcommand dispatch and JSON reports.

use std::fs;
use std::num::NonZeroUsize;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use conwalk::io::{parse_edge_list, parse_generators, parse_graph_json, GraphFile};
use conwalk::{
    automorphism_group, blowup_cycle_family, check_blowup_hypotheses, check_census, check_conditions,
    consistent_cycle_orbits, find_trivial_walk_4valent, find_trivial_walk_exhaustive, find_trivial_walk_wps,
    group_from_generators, local_group, property_r_by_chase, property_r_by_shunt_group, shunts, verify_generation,
    weakly_p_subregular, wreath_group, Graph, PermutationGroup, Walk,
};

pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_CAP: i32 = 2;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Domain(#[from] conwalk::Error),
    #[error("cannot read {path}: {source}")]
    Read { path: PathBuf, source: std::io::Error },
    #[error("cannot write {path}: {source}")]
    Write { path: PathBuf, source: std::io::Error },
}

impl CliError {
    pub fn code(&self) -> &'static str {
        match self {
            CliError::Domain(e) => e.code(),
            CliError::Read { .. } => "read_failed",
            CliError::Write { .. } => "write_failed",
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Domain(e) if e.is_cap() => EXIT_CAP,
            _ => EXIT_DOMAIN,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "conwalk",
    version,
    about = "Consistent walks and cycles in vertex-transitive graphs"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct Common {
    /// Named graph (`petersen`, `hypercube:3`, `blowup:2:cycle:4`, ..) or a JSON / edge-list file.
    #[arg(long)]
    pub graph: String,
    /// Generators of the group to use instead of the full automorphism group.
    #[arg(long)]
    pub group_file: Option<PathBuf>,
    /// Write the report here instead of standard output.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, default_value_t = NonZeroUsize::new(conwalk::DEFAULT_GROUP_CAP).unwrap())]
    pub cap_group: NonZeroUsize,
    #[arg(long, default_value_t = NonZeroUsize::new(conwalk::DEFAULT_ORBIT_CAP).unwrap())]
    pub cap_orbit: NonZeroUsize,
    #[arg(long, default_value_t = NonZeroUsize::new(conwalk::DEFAULT_DEPTH_CAP).unwrap())]
    pub cap_depth: NonZeroUsize,
    /// Emit JSON (the only format).
    #[arg(long, default_value_t = true)]
    pub json: bool,
    /// Add wall-clock timings to the report.
    #[arg(long)]
    pub timing: bool,
    /// Worker threads for parallel sweeps.
    #[arg(long, env = "CW_THREADS")]
    pub threads: Option<NonZeroUsize>,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// Census of consistent-cycle orbits.
    Orbits {
        #[command(flatten)]
        common: Common,
    },
    /// Search for a consistent walk with trivial stabilizer.
    TrivialWalk {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value_t = TrivialMethod::Auto)]
        method: TrivialMethod,
    },
    /// Weakly p-subregular test of the local action at a vertex.
    WpsCheck {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 0)]
        vertex: usize,
    },
    /// Lifted cycle family of a lexicographic blow-up.
    BlowupDemo {
        #[command(flatten)]
        common: Common,
        #[arg(long, default_value_t = 2)]
        m: usize,
        /// Group acting on the blow-up.
        #[arg(long, value_enum, default_value_t = BlowupGroup::Full)]
        blowup_group: BlowupGroup,
    },
    /// Shunt generating set from overlap-maximal cycle representatives.
    Generators {
        #[command(flatten)]
        common: Common,
    },
    /// Property (R) of a consistent walk.
    PropertyR {
        #[command(flatten)]
        common: Common,
        /// Comma-separated vertices.
        #[arg(long, value_delimiter = ',', required = true)]
        walk: Vec<usize>,
        /// Vertex the chase looks for a chain to; defaults to the first vertex of the walk.
        #[arg(long)]
        target: Option<usize>,
        #[arg(long, value_enum, default_value_t = RMethod::Both)]
        method: RMethod,
    },
}

impl Command {
    pub fn common(&self) -> &Common {
        match self {
            Command::Orbits { common }
            | Command::TrivialWalk { common, .. }
            | Command::WpsCheck { common, .. }
            | Command::BlowupDemo { common, .. }
            | Command::Generators { common }
            | Command::PropertyR { common, .. } => common,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TrivialMethod {
    Wps,
    #[value(name = "4valent")]
    #[serde(rename = "4valent")]
    FourValent,
    Auto,
    Exhaustive,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BlowupGroup {
    /// Full automorphism group of the blow-up.
    Full,
    /// Wreath product of the base group with the fiber symmetric groups.
    Wreath,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RMethod {
    Chase,
    ShuntGroup,
    Both,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "value", rename_all = "lowercase")]
pub enum GraphSource {
    Named(String),
    File(PathBuf),
}

impl GraphSource {
    /// An existing file wins over a named spec of the same spelling.
    pub fn resolve(arg: &str) -> GraphSource {
        if Path::new(arg).is_file() {
            GraphSource::File(PathBuf::from(arg))
        } else {
            GraphSource::Named(arg.to_string())
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Caps {
    pub group: NonZeroUsize,
    pub orbit: NonZeroUsize,
    pub depth: NonZeroUsize,
}

impl Default for Caps {
    fn default() -> Caps {
        Caps {
            group: NonZeroUsize::new(conwalk::DEFAULT_GROUP_CAP).unwrap(),
            orbit: NonZeroUsize::new(conwalk::DEFAULT_ORBIT_CAP).unwrap(),
            depth: NonZeroUsize::new(conwalk::DEFAULT_DEPTH_CAP).unwrap(),
        }
    }
}

/// Subcommand and its own flags, echoed in the report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "subcommand", rename_all = "kebab-case")]
pub enum Task {
    Orbits,
    TrivialWalk {
        method: TrivialMethod,
    },
    WpsCheck {
        vertex: usize,
    },
    BlowupDemo {
        m: usize,
        blowup_group: BlowupGroup,
    },
    Generators,
    PropertyR {
        walk: Vec<usize>,
        target: Option<usize>,
        method: RMethod,
    },
}

impl Task {
    pub fn name(&self) -> &'static str {
        match self {
            Task::Orbits => "orbits",
            Task::TrivialWalk { .. } => "trivial-walk",
            Task::WpsCheck { .. } => "wps-check",
            Task::BlowupDemo { .. } => "blowup-demo",
            Task::Generators => "generators",
            Task::PropertyR { .. } => "property-r",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunConfig {
    pub graph: GraphSource,
    pub group_file: Option<PathBuf>,
    pub task: Task,
    pub caps: Caps,
    #[serde(skip)]
    pub out: Option<PathBuf>,
    #[serde(skip)]
    pub timing: bool,
}

impl RunConfig {
    pub fn new(graph: GraphSource, task: Task) -> RunConfig {
        RunConfig {
            graph,
            group_file: None,
            task,
            caps: Caps::default(),
            out: None,
            timing: false,
        }
    }

    pub fn from_command(command: &Command) -> RunConfig {
        let c = command.common();
        let task = match command {
            Command::Orbits { .. } => Task::Orbits,
            Command::TrivialWalk { method, .. } => Task::TrivialWalk { method: *method },
            Command::WpsCheck { vertex, .. } => Task::WpsCheck { vertex: *vertex },
            Command::BlowupDemo { m, blowup_group, .. } => Task::BlowupDemo {
                m: *m,
                blowup_group: *blowup_group,
            },
            Command::Generators { .. } => Task::Generators,
            Command::PropertyR {
                walk, target, method, ..
            } => Task::PropertyR {
                walk: walk.clone(),
                target: *target,
                method: *method,
            },
        };
        RunConfig {
            graph: GraphSource::resolve(&c.graph),
            group_file: c.group_file.clone(),
            task,
            caps: Caps {
                group: c.cap_group,
                orbit: c.cap_orbit,
                depth: c.cap_depth,
            },
            out: c.out.clone(),
            timing: c.timing,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum GroupSource {
    Automorphisms,
    Generators,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputEcho {
    pub graph: GraphSource,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub group_file: Option<PathBuf>,
    /// SHA-256 of the canonical JSON form of the graph.
    pub graph_hash: String,
    pub vertices: usize,
    pub edges: usize,
    pub group_source: GroupSource,
    pub group_order: usize,
    pub caps: Caps,
    pub task: Task,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Timing {
    pub input_ms: f64,
    pub compute_ms: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub subcommand: String,
    pub tool_version: String,
    pub input: InputEcho,
    pub result: serde_json::Value,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing: Option<Timing>,
}

impl Report {
    /// The configuration that reproduces this report.
    pub fn config(&self) -> RunConfig {
        RunConfig {
            graph: self.input.graph.clone(),
            group_file: self.input.group_file.clone(),
            task: self.input.task.clone(),
            caps: self.input.caps,
            out: None,
            timing: false,
        }
    }
}

pub fn graph_hash(graph: &Graph) -> String {
    let canonical = serde_json::to_vec(&GraphFile::from_graph(graph, None)).expect("graph serializes");
    hex::encode(Sha256::digest(&canonical))
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Read {
        path: path.to_path_buf(),
        source,
    })
}

/// Loads the graph and the group acting on it.
///
/// The group comes from the group file if one is given, else from generators
/// embedded in a JSON graph, else it is the full automorphism group. Supplied
/// generators must be automorphisms.
pub fn parse_inputs(config: &RunConfig) -> Result<(Graph, PermutationGroup, GroupSource), CliError> {
    let (graph, embedded) = match &config.graph {
        GraphSource::Named(spec) => (conwalk::named_graph(spec)?, None),
        GraphSource::File(path) => {
            let text = read(path)?;
            let is_json = path.extension().is_some_and(|e| e == "json") || text.trim_start().starts_with('{');
            if is_json {
                parse_graph_json(&text)?
            } else {
                (parse_edge_list(&text)?, None)
            }
        }
    };
    let supplied = match &config.group_file {
        Some(path) => Some(parse_generators(&read(path)?)?),
        None => embedded,
    };
    let cap = config.caps.group.get();
    let (group, source) = match supplied {
        Some(gens) => (group_from_generators(&graph, gens, cap)?, GroupSource::Generators),
        None => (automorphism_group(&graph, cap)?, GroupSource::Automorphisms),
    };
    Ok((graph, group, source))
}

/// Runs one subcommand and assembles its report.
pub fn run(config: &RunConfig) -> Result<Report, CliError> {
    let start = Instant::now();
    let (graph, group, group_source) = parse_inputs(config)?;
    let parsed = Instant::now();
    let result = dispatch(config, &graph, &group)?;
    let done = Instant::now();
    Ok(Report {
        subcommand: config.task.name().to_string(),
        tool_version: env!("CARGO_PKG_VERSION").to_string(),
        input: InputEcho {
            graph: config.graph.clone(),
            group_file: config.group_file.clone(),
            graph_hash: graph_hash(&graph),
            vertices: graph.vertex_count(),
            edges: graph.edge_count(),
            group_source,
            group_order: group.order(),
            caps: config.caps,
            task: config.task.clone(),
        },
        result,
        timing: config.timing.then(|| Timing {
            input_ms: (parsed - start).as_secs_f64() * 1e3,
            compute_ms: (done - parsed).as_secs_f64() * 1e3,
        }),
    })
}

fn to_value<T: Serialize>(value: &T) -> serde_json::Value {
    serde_json::to_value(value).expect("report payloads serialize")
}

fn dispatch(config: &RunConfig, graph: &Graph, group: &PermutationGroup) -> Result<serde_json::Value, CliError> {
    let caps = config.caps;
    let value = match &config.task {
        Task::Orbits => {
            let census = consistent_cycle_orbits(group, graph)?;
            serde_json::json!({
                "vertex_transitive": census.vertex_transitive,
                "valence": graph.valence(),
                "cycle_count": census.cycle_count(),
                "orbits": census.table,
            })
        }
        Task::TrivialWalk { method } => {
            let found = match method {
                TrivialMethod::Wps => find_trivial_walk_wps(group, graph)?,
                TrivialMethod::FourValent => find_trivial_walk_4valent(group, graph)?,
                TrivialMethod::Exhaustive => {
                    find_trivial_walk_exhaustive(group, graph, caps.depth.get(), caps.orbit.get())?
                }
                TrivialMethod::Auto => match find_trivial_walk_wps(group, graph) {
                    Err(conwalk::Error::NoWitness) if graph.valence() == Some(4) => {
                        find_trivial_walk_4valent(group, graph)?
                    }
                    other => other?,
                },
            };
            to_value(&found)
        }
        Task::WpsCheck { vertex } => {
            if *vertex >= graph.vertex_count() {
                return Err(conwalk::Error::VertexOutOfRange {
                    vertex: *vertex,
                    count: graph.vertex_count(),
                }
                .into());
            }
            let local = local_group(group, graph, *vertex)?;
            let witness = weakly_p_subregular(&local)?;
            serde_json::json!({
                "vertex": vertex,
                "neighborhood": local.domain,
                "local_order": local.group.order(),
                "kernel_order": local.kernel_order(),
                "witness": witness,
            })
        }
        Task::BlowupDemo { m, blowup_group } => {
            let hypotheses = check_blowup_hypotheses(graph, caps.group.get())?;
            let family = blowup_cycle_family(graph, group, *m)?;
            let big = match blowup_group {
                BlowupGroup::Full => automorphism_group(&family.blowup.graph, caps.group.get())?,
                BlowupGroup::Wreath => wreath_group(&family.blowup, group, caps.group.get())?,
            };
            let census = consistent_cycle_orbits(&big, &family.blowup.graph)?;
            serde_json::json!({
                "hypotheses": hypotheses,
                "blowup_vertices": family.blowup.graph.vertex_count(),
                "blowup_group_order": big.order(),
                "family": family,
                "orbits": census.table,
                "family_orbits": family.orbit_indices(&census),
                "covers_all_orbits": family.covers_all_orbits(&census),
                "no_trivial_stabilizer": check_census(&census),
            })
        }
        Task::Generators => to_value(&verify_generation(group, graph)?),
        Task::PropertyR { walk, target, method } => {
            let walk = Walk::new(graph, walk.clone())?;
            let target = target.unwrap_or(walk.first());
            let by_group = matches!(method, RMethod::ShuntGroup | RMethod::Both)
                .then(|| property_r_by_shunt_group(group, &walk))
                .transpose()?;
            let by_chase = matches!(method, RMethod::Chase | RMethod::Both)
                .then(|| property_r_by_chase(group, &walk, target))
                .transpose()?;
            let agree = match (&by_group, &by_chase) {
                (Some(a), Some(b)) => Some(a.verdict == b.verdict),
                _ => None,
            };
            let conditions = match shunts(group, &walk).first() {
                Some(g) if walk.len() >= 2 => Some(check_conditions(group, &walk, g)?),
                _ => None,
            };
            serde_json::json!({
                "walk": walk,
                "shunt_group": by_group,
                "chase": by_chase,
                "agree": agree,
                "conditions": conditions,
            })
        }
    };
    Ok(value)
}

/// Serializes a report the way the binary prints it.
pub fn render(report: &Report) -> String {
    let mut text = serde_json::to_string_pretty(report).expect("reports serialize");
    text.push('\n');
    text
}

/// Writes the report to the configured output, or returns it for standard output.
pub fn emit(config: &RunConfig, report: &Report) -> Result<Option<String>, CliError> {
    let text = render(report);
    match &config.out {
        Some(path) => {
            fs::write(path, text).map_err(|source| CliError::Write {
                path: path.clone(),
                source,
            })?;
            Ok(None)
        }
        None => Ok(Some(text)),
    }
}

/// Error body printed on standard error.
pub fn error_json(err: &CliError) -> String {
    serde_json::json!({ "error": { "code": err.code(), "message": err.to_string() } }).to_string()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph_sources_resolve() {
        assert_eq!(GraphSource::resolve("petersen"), GraphSource::Named("petersen".into()));
        assert_eq!(
            GraphSource::resolve("Cargo.toml"),
            GraphSource::File("Cargo.toml".into())
        );
    }

    #[test]
    fn hash_ignores_edge_order() {
        let a = Graph::from_edges(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
        let b = Graph::from_edges(3, &[(2, 0), (1, 0), (2, 1)]).unwrap();
        assert_eq!(graph_hash(&a), graph_hash(&b));
        assert_eq!(graph_hash(&a).len(), 64);
    }

    #[test]
    fn exit_codes() {
        assert_eq!(
            CliError::from(conwalk::Error::CapExceeded { cap: 3 }).exit_code(),
            EXIT_CAP
        );
        assert_eq!(CliError::from(conwalk::Error::DepthExhausted(3)).exit_code(), EXIT_CAP);
        assert_eq!(CliError::from(conwalk::Error::NotConsistent).exit_code(), EXIT_DOMAIN);
    }

    #[test]
    fn orbits_on_petersen() {
        let report = run(&RunConfig::new(GraphSource::Named("petersen".into()), Task::Orbits)).unwrap();
        assert_eq!(report.input.group_order, 120);
        assert_eq!(report.result["orbits"].as_array().unwrap().len(), 3);
    }
}
