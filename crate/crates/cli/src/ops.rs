//! Operations shared by the subcommands and the pipeline runner.

use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use hypergirth::geometry::{GeometrySpec, GreedyParams, GreedyReport};
use hypergirth::girth::{girth_oracle_with_budget, Girth, GirthReport};
use hypergirth::transform::{
    neighborhood_hypergraph, path_template, single_edge_template, split_edges, substitute_edges,
    SubstitutionPlan,
};
use hypergirth::{girth_bipartite, girth_hypergraph, Hypergraph, VertexId};
use num_bigint::BigUint;

use crate::artifact::Artifact;
use crate::error::CliError;

/// Template argument of `substitute`: `edge:<r>`, `path:<len>:<r>` or
/// `file:<path>`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TemplateSpec {
    Edge(usize),
    Path { len: usize, r: usize },
    File(PathBuf),
}

impl FromStr for TemplateSpec {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || CliError::Parse(format!("bad template {s:?}; use edge:R, path:LEN:R or file:PATH"));
        let num = |t: &str| parse_count(t).map_err(|_| bad());
        let parts: Vec<&str> = s.splitn(2, ':').collect();
        match parts.as_slice() {
            ["edge", r] => Ok(TemplateSpec::Edge(num(r)?)),
            ["path", rest] => {
                let (len, r) = rest.split_once(':').ok_or_else(bad)?;
                Ok(TemplateSpec::Path {
                    len: num(len)?,
                    r: num(r)?,
                })
            }
            ["file", p] if !p.is_empty() => Ok(TemplateSpec::File(PathBuf::from(p))),
            _ => Err(bad()),
        }
    }
}

impl fmt::Display for TemplateSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TemplateSpec::Edge(r) => write!(f, "edge:{r}"),
            TemplateSpec::Path { len, r } => write!(f, "path:{len}:{r}"),
            TemplateSpec::File(p) => write!(f, "file:{}", p.display()),
        }
    }
}

impl TemplateSpec {
    /// Builds the template; `file:` paths resolve against `base`.
    pub fn load(&self, base: &Path) -> Result<Hypergraph, CliError> {
        match self {
            TemplateSpec::Edge(r) if *r >= 1 => Ok(single_edge_template(*r)),
            TemplateSpec::Edge(r) => Err(CliError::Precondition(format!("edge template size {r} must be >= 1"))),
            TemplateSpec::Path { len, r } => path_template(*len, *r).ok_or_else(|| {
                CliError::Precondition(format!("path template needs len >= 1 and r >= 2, got {len}:{r}"))
            }),
            TemplateSpec::File(p) => Artifact::load(&base.join(p))?.expect_hyper("template"),
        }
    }
}

/// Canonical decimal `usize`.
pub fn parse_count(tok: &str) -> Result<usize, CliError> {
    let canonical = !tok.is_empty()
        && tok.bytes().all(|b| b.is_ascii_digit())
        && (tok == "0" || !tok.starts_with('0'));
    let bad = || CliError::Parse(format!("expected a canonical decimal, found {tok:?}"));
    if !canonical {
        return Err(bad());
    }
    tok.parse().map_err(|_| bad())
}

/// Canonical decimal big integer.
pub fn parse_big(tok: &str) -> Result<BigUint, CliError> {
    let canonical = !tok.is_empty()
        && tok.bytes().all(|b| b.is_ascii_digit())
        && (tok == "0" || !tok.starts_with('0'));
    if !canonical {
        return Err(CliError::Parse(format!("expected a canonical decimal, found {tok:?}")));
    }
    Ok(tok.parse().expect("checked digits"))
}

/// One pipeline step or CLI transformation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Op {
    Gen(GeometrySpec),
    Nbhd,
    Substitute { template: TemplateSpec, k: usize },
    Split { r: usize },
    Pad { to: BigUint },
    Verify { oracle_max: Option<u32> },
}

impl Op {
    /// Recipe spelling, e.g. `split r 2`.
    pub fn recipe_form(&self) -> String {
        match self {
            Op::Gen(spec) => format!("gen {}", gen_words(spec, false)),
            Op::Nbhd => "nbhd".into(),
            Op::Substitute { template, k } => format!("substitute template {template} k {k}"),
            Op::Split { r } => format!("split r {r}"),
            Op::Pad { to } => format!("pad to {to}"),
            Op::Verify { oracle_max: None } => "verify".into(),
            Op::Verify { oracle_max: Some(l) } => format!("verify oracle {l}"),
        }
    }

    /// Equivalent command line reading `input` and writing `output`.
    pub fn command(&self, input: &str, output: &str) -> String {
        match self {
            Op::Gen(spec) => format!("hypergirth gen {} -o {output}", gen_words(spec, true)),
            Op::Nbhd => format!("hypergirth transform nbhd {input} -o {output}"),
            Op::Substitute { template, k } => {
                format!("hypergirth transform substitute {input} --template {template} --k {k} -o {output}")
            }
            Op::Split { r } => format!("hypergirth transform split {input} --r {r} -o {output}"),
            Op::Pad { to } => format!("hypergirth transform pad {input} --to {to} -o {output}"),
            Op::Verify { oracle_max } => girth_command(input, *oracle_max),
        }
    }

    pub fn produces_output(&self) -> bool {
        !matches!(self, Op::Verify { .. })
    }
}

pub fn girth_command(input: &str, oracle_max: Option<u32>) -> String {
    match oracle_max {
        Some(l) => format!("hypergirth girth {input} --oracle-max {l}"),
        None => format!("hypergirth girth {input}"),
    }
}

fn gen_words(spec: &GeometrySpec, flags: bool) -> String {
    let dash = if flags { "--" } else { "" };
    match spec {
        GeometrySpec::Plane { q } => format!("plane {dash}q {q}"),
        GeometrySpec::Quadrangle { q } => format!("quadrangle {dash}q {q}"),
        GeometrySpec::Hexagon { q } => format!("hexagon {dash}q {q}"),
        GeometrySpec::Greedy(p) => format!(
            "greedy {dash}left {} {dash}right {} {dash}deg {} {dash}girth {} {dash}seed {}",
            p.n_left, p.n_right, p.right_degree, p.target_girth, p.seed
        ),
    }
}

/// What applying an [`Op`] produced.
#[derive(Debug, Clone)]
pub struct Applied {
    pub artifact: Artifact,
    /// Edge count the operation predicts, where it makes a prediction.
    pub predicted_edges: Option<usize>,
    pub greedy: Option<GreedyReport>,
    /// Non-fatal remarks, such as edges too small to split.
    pub notes: Vec<String>,
}

/// Applies `op` to `input`; `Gen` ignores `input`, every other op needs it.
/// `Verify` passes its input through after checking it.
pub fn apply(op: &Op, input: Option<Artifact>, base: &Path, oracle_budget: usize) -> Result<Applied, CliError> {
    let mut input = input;
    let mut need = |what: &str| -> Result<Artifact, CliError> {
        input
            .take()
            .ok_or_else(|| CliError::Precondition(format!("{what} needs an input")))
    };
    let plain = |artifact: Artifact, predicted_edges: Option<usize>| Applied {
        artifact,
        predicted_edges,
        greedy: None,
        notes: Vec::new(),
    };
    match op {
        Op::Gen(spec) => {
            let (g, greedy) = spec.build()?;
            Ok(Applied {
                artifact: Artifact::Bip(g),
                predicted_edges: None,
                greedy,
                notes: Vec::new(),
            })
        }
        Op::Nbhd => {
            let g = need("nbhd")?.expect_bip("nbhd")?;
            let predicted = g.right_degrees().iter().filter(|&&d| d > 0).count();
            Ok(plain(Artifact::Hyper(neighborhood_hypergraph(&g)?), Some(predicted)))
        }
        Op::Substitute { template, k } => {
            let host = need("substitute")?.expect_hyper("substitute")?;
            let template = template.load(base)?;
            let plan = SubstitutionPlan::new(host, template, *k)?;
            let predicted = plan.predicted_edges();
            Ok(plain(Artifact::Hyper(substitute_edges(&plan)?), Some(predicted)))
        }
        Op::Split { r } => {
            let h = need("split")?.expect_hyper("split")?;
            let predicted = h.edges().iter().map(|e| e.len() / (*r).max(1)).sum();
            let out = split_edges(&h, *r)?;
            let mut applied = plain(Artifact::Hyper(out.hypergraph.clone()), Some(predicted));
            if out.skipped_edges > 0 {
                applied
                    .notes
                    .push(format!("{} edges smaller than {r} produced nothing", out.skipped_edges));
            }
            if out.is_empty_warning() {
                applied.notes.push("split produced no edges".into());
            }
            Ok(applied)
        }
        Op::Pad { to } => {
            let h = need("pad")?.expect_hyper("pad")?;
            let edges = h.num_edges();
            Ok(plain(Artifact::Hyper(pad(&h, to)?), Some(edges)))
        }
        Op::Verify { oracle_max } => {
            let a = need("verify")?;
            let mut applied = plain(a.clone(), None);
            if let Some(l) = oracle_max {
                let checked = check_with_oracle(&a, *l, oracle_budget, false)?;
                applied.notes.push(format!("oracle {} agrees", checked.oracle.girth));
            }
            Ok(applied)
        }
    }
}

/// Adds isolated vertices up to `to`.
pub fn pad(h: &Hypergraph, to: &BigUint) -> Result<Hypergraph, CliError> {
    let n = usize::try_from(to)
        .ok()
        .filter(|&n| VertexId::try_from(n).is_ok())
        .ok_or_else(|| CliError::Resource(format!("cannot materialize {to} vertices")))?;
    h.with_num_vertices(n).ok_or_else(|| {
        CliError::Precondition(format!(
            "pad target {n} is below the current {} vertices",
            h.num_vertices()
        ))
    })
}

pub fn girth_of(a: &Artifact) -> GirthReport {
    match a {
        Artifact::Hyper(h) => girth_hypergraph(h),
        Artifact::Bip(g) => girth_bipartite(g),
    }
}

/// Lowest girth acceptable for an artifact under a hypergraph girth
/// target: bipartite graphs must reach twice the target.
pub fn required_girth(a: &Artifact, target: u32) -> u32 {
    match a {
        Artifact::Hyper(_) => target,
        Artifact::Bip(_) => 2 * target,
    }
}

/// A bipartite graph as the 2-uniform hypergraph of its edges, left `u` as
/// `u` and right `v` as `n_left + v`. Its hypergraph cycles are exactly the
/// graph's cycles.
fn as_two_uniform(a: &Artifact) -> Hypergraph {
    match a {
        Artifact::Hyper(h) => h.clone(),
        Artifact::Bip(g) => {
            let shift = g.n_left() as VertexId;
            let edges = g.incidences().iter().map(|&(u, v)| vec![u, shift + v]).collect();
            Hypergraph::new(g.n_left() + g.n_right(), edges).expect("incidences are distinct")
        }
    }
}

pub struct OracleCheck {
    pub fast: GirthReport,
    pub oracle: GirthReport,
}

fn agree(fast: Girth, oracle: Girth) -> bool {
    match oracle {
        Girth::NoneUpTo(l) => matches!(fast, Girth::Infinite) || fast.finite().is_some_and(|g| g > l),
        exact => fast == exact,
    }
}

/// Runs the fast path and the exhaustive oracle and fails unless they
/// agree. `corrupt` adds one to the fast answer, to exercise the mismatch
/// path.
pub fn check_with_oracle(a: &Artifact, max_len: u32, budget: usize, corrupt: bool) -> Result<OracleCheck, CliError> {
    let mut fast = girth_of(a);
    if corrupt {
        fast.girth = match fast.girth {
            Girth::Finite(g) => Girth::Finite(g + 1),
            _ => Girth::Finite(3),
        };
    }
    let oracle = girth_oracle_with_budget(&as_two_uniform(a), max_len, budget)?;
    if !agree(fast.girth, oracle.girth) {
        return Err(CliError::Verification(format!(
            "girth mismatch: fast path {} but oracle {}",
            fast.girth, oracle.girth
        )));
    }
    Ok(OracleCheck { fast, oracle })
}

pub fn greedy_spec(n_left: usize, n_right: usize, right_degree: usize, target_girth: u32, seed: u64) -> GeometrySpec {
    GeometrySpec::Greedy(GreedyParams {
        n_left,
        n_right,
        right_degree,
        target_girth,
        seed,
    })
}
