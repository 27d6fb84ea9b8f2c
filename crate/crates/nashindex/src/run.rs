//! Subcommands on a parsed problem file.

use std::collections::BTreeMap;
use std::time::Instant;

use nashindex_core::arith::{parse_poly, Poly};
use nashindex_core::bases::{Budget, Dimension, DEFAULT_SATURATION_CAP};
use nashindex_core::index::{homological_index, IndexOptions, IndexReport};
use nashindex_core::nash::isolated_zero_check;
use nashindex_core::oracles::{branch_count, classical_milnor, graph_restriction_milnor, PencilSpec};
use nashindex_core::Error as CoreError;
use serde::Serialize;

use crate::problem::{ParseError, ProblemFile};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Index,
    Milnor,
    Check,
    BranchCount,
}

/// Command line settings; each overrides the corresponding file entry.
#[derive(Clone, Debug, Default)]
pub struct Flags {
    pub json: bool,
    pub linear: Option<String>,
    pub bound_override: Option<u32>,
    pub force: bool,
    pub work_limit: Option<u64>,
}

#[derive(Debug, thiserror::Error)]
pub enum RunError {
    #[error("{0}")]
    Parse(#[from] ParseError),
    #[error("{0}")]
    Core(#[from] CoreError),
    #[error("{0}")]
    Usage(String),
}

impl RunError {
    /// 2 when the mathematics rules the input out, 3 when a cap or work
    /// limit was hit, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        match self {
            RunError::Core(e) if e.is_precondition() => 2,
            RunError::Core(e) if e.is_resource() => 3,
            _ => 1,
        }
    }
}

/// The structured form of an index run.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IndexJson {
    pub schema: u32,
    pub index: i64,
    pub chi: i64,
    pub sign_exponent: usize,
    pub twist_bound: u32,
    pub homology_dims: BTreeMap<String, usize>,
    pub nash_ideal_size: usize,
    pub elapsed_ms: u64,
}

impl IndexJson {
    pub fn new(r: &IndexReport, elapsed_ms: u64) -> IndexJson {
        IndexJson {
            schema: SCHEMA_VERSION,
            index: r.index,
            chi: r.chi,
            sign_exponent: r.sign_exponent,
            twist_bound: r.twist_bound,
            homology_dims: r.homology_dims.iter().map(|(k, v)| (k.to_string(), *v)).collect(),
            nash_ideal_size: r.nash_ideal_size,
            elapsed_ms,
        }
    }
}

#[derive(Serialize)]
struct MilnorJson {
    schema: u32,
    mu: usize,
    elapsed_ms: u64,
}

#[derive(Serialize)]
struct CheckJson {
    schema: u32,
    isolated: bool,
    dimension: Option<usize>,
    elapsed_ms: u64,
}

#[derive(Serialize)]
struct CountJson {
    schema: u32,
    count: usize,
    elapsed_ms: u64,
}

fn to_json<T: Serialize>(v: &T) -> String {
    serde_json::to_string_pretty(v).expect("report serializes")
}

fn function(file: &ProblemFile) -> Result<&Poly, RunError> {
    file.function().ok_or_else(|| CoreError::InvalidInput("this command needs `function`".into()).into())
}

/// Writes `h = 0` as `x_v = g` when `h` is `c x_v` plus terms free of `x_v`.
fn as_graph(h: &Poly) -> Option<(usize, Poly)> {
    let n = h.ring().nvars();
    (0..n).rev().find_map(|v| {
        let (c, m) = h.terms().find(|(_, m)| m.deg() == 1 && m.exp(v) == 1)?;
        let rest = h - &Poly::from_terms(h.ring(), [(c.clone(), *m)]);
        if rest.terms().any(|(_, m)| m.exp(v) > 0) {
            return None;
        }
        Some((v, rest.scale(&-c.inv())))
    })
}

/// Milnor number of the function on the hypersurface, which must be absent
/// or a graph over a coordinate hyperplane.
pub fn milnor(file: &ProblemFile, budget: &Budget) -> Result<usize, RunError> {
    let f = function(file)?;
    match &file.hypersurface {
        None => Ok(classical_milnor(f, budget)?),
        Some(h) => {
            let graph = as_graph(h).ok_or_else(|| {
                CoreError::InvalidInput("milnor needs a hypersurface of the form x_i = g(other variables)".into())
            })?;
            Ok(graph_restriction_milnor(f, &[graph], budget)?)
        }
    }
}

fn index_options(file: &ProblemFile, flags: &Flags) -> IndexOptions {
    IndexOptions {
        bound_override: flags.bound_override.or(file.bound),
        force: flags.force,
        work_limit: flags.work_limit.or(file.work_limit),
        saturation_cap: file.saturation_cap.unwrap_or(DEFAULT_SATURATION_CAP),
        ..IndexOptions::default()
    }
}

/// Runs `cmd` and renders its report.
pub fn run(cmd: Command, file: &ProblemFile, flags: &Flags) -> Result<String, RunError> {
    let start = Instant::now();
    let elapsed = || start.elapsed().as_millis() as u64;
    let work_limit = flags.work_limit.or(file.work_limit);
    let budget = Budget::new(work_limit);
    match cmd {
        Command::Index => {
            let report = homological_index(&file.problem()?, &index_options(file, flags))?;
            Ok(if flags.json { to_json(&IndexJson::new(&report, elapsed())) } else { format!("index = {}", report.index) })
        }
        Command::Milnor => {
            let mu = milnor(file, &budget)?;
            Ok(if flags.json {
                to_json(&MilnorJson { schema: SCHEMA_VERSION, mu, elapsed_ms: elapsed() })
            } else {
                format!("mu = {mu}")
            })
        }
        Command::Check => {
            let cap = file.saturation_cap.unwrap_or(DEFAULT_SATURATION_CAP);
            let check = isolated_zero_check(&file.problem()?, cap, &budget)?;
            let dimension = match check.dimension {
                Dimension::Finite(d) => Some(d),
                Dimension::Infinite => None,
            };
            Ok(if flags.json {
                to_json(&CheckJson { schema: SCHEMA_VERSION, isolated: check.isolated, dimension, elapsed_ms: elapsed() })
            } else {
                let dim = dimension.map_or("infinite".to_string(), |d| d.to_string());
                format!("isolated = {}\ndimension = {dim}", check.isolated)
            })
        }
        Command::BranchCount => {
            let a = file.ctx.a_ring();
            let l = match &flags.linear {
                Some(text) => parse_poly(a, text).map_err(|e| RunError::Usage(format!("--linear: {e}")))?,
                None => file.linear.clone().ok_or_else(|| RunError::Usage("branch-count needs --linear or `linear`".into()))?,
            };
            let h = file.hypersurface.clone().ok_or_else(|| CoreError::InvalidInput("missing hypersurface".into()))?;
            let spec = PencilSpec::new(h, function(file)?.clone(), l, file.sing.clone())?;
            let count = branch_count(&spec, &budget)?;
            Ok(if flags.json {
                to_json(&CountJson { schema: SCHEMA_VERSION, count, elapsed_ms: elapsed() })
            } else {
                format!("count = {count}")
            })
        }
    }
}
