//! Subcommand bodies. Each writes its normal output to `out` and notes to
//! `err`, so tests can drive them without a process.

use std::io::Write;
use std::path::{Path, PathBuf};

use hypergirth::geometry::GeometrySpec;
use hypergirth::planner::{
    certificate, check_sandwich_hexagon, check_sandwich_octagon, plan_parameters_hexagon,
    plan_parameters_octagon, reverify, theorem_bound, Certificate,
};
use hypergirth::format::{sniff, FileKind};
use num_bigint::BigUint;

use crate::artifact::{read_text, write_text, Artifact};
use crate::error::CliError;
use crate::ops::{apply, check_with_oracle, girth_of, Op};
use crate::pipeline::{reverify_report, run_pipeline, PipelineOptions};

/// Stream pair handed to every command.
pub struct Streams<'a> {
    pub out: &'a mut dyn Write,
    pub err: &'a mut dyn Write,
}

fn put(w: &mut dyn Write, text: &str) -> Result<(), CliError> {
    w.write_all(text.as_bytes())
        .map_err(|e| CliError::io(Path::new("<output>"), e))
}

/// Writes `text` to `path`, or to `out` when there is no path or it is `-`.
fn deliver(path: Option<&Path>, text: &str, out: &mut dyn Write) -> Result<(), CliError> {
    match path {
        Some(p) if p != Path::new("-") => write_text(p, text),
        _ => put(out, text),
    }
}

pub fn gen(spec: &GeometrySpec, output: Option<&Path>, report: Option<&Path>, io: &mut Streams) -> Result<(), CliError> {
    let applied = apply(&Op::Gen(*spec), None, Path::new("."), 0)?;
    deliver(output, &applied.artifact.serialize(), io.out)?;
    if let Some(g) = applied.greedy {
        let text = format!("{g}\n");
        match report {
            Some(p) => write_text(p, &text)?,
            None => put(io.err, &text)?,
        }
    }
    Ok(())
}

pub fn transform(op: &Op, input: &Path, output: Option<&Path>, io: &mut Streams) -> Result<(), CliError> {
    let a = Artifact::load(input)?;
    let base = input.parent().unwrap_or(Path::new("."));
    let applied = apply(op, Some(a), base, 0).map_err(|e| e.context(&op.recipe_form()))?;
    deliver(output, &applied.artifact.serialize(), io.out)?;
    for n in &applied.notes {
        put(io.err, &format!("note: {n}\n"))?;
    }
    Ok(())
}

pub fn girth(input: &Path, oracle_max: Option<u32>, budget: usize, corrupt: bool, io: &mut Streams) -> Result<(), CliError> {
    let a = Artifact::load(input)?;
    let (report, oracle) = match oracle_max {
        Some(l) => {
            let c = check_with_oracle(&a, l, budget, corrupt)?;
            (c.fast, Some(c.oracle))
        }
        None => (girth_of(&a), None),
    };
    let mut text = format!("girth {}\n", report.girth);
    if let Some(w) = &report.witness {
        text += &format!("witness {w}\n");
    }
    if let Some(o) = oracle {
        text += &format!("oracle {} agree\n", o.girth);
    }
    put(io.out, &text)
}

/// Arguments of `plan`: either a target vertex count `N` or explicit
/// `(m, n)`.
#[derive(Debug, Clone)]
pub struct PlanArgs {
    pub girth: u32,
    pub p: Option<u64>,
    pub r: u64,
    pub n_target: Option<BigUint>,
    pub m: Option<u64>,
    pub n: Option<u64>,
    pub cert: Option<PathBuf>,
}

pub fn plan(args: &PlanArgs, io: &mut Streams) -> Result<(), CliError> {
    let p = match (args.girth, args.p) {
        (6, Some(p)) => p,
        (6, None) => return Err(CliError::Parse("girth 6 needs --p".into())),
        (8, p) => {
            if p.is_some_and(|p| p != 2) {
                put(io.err, "note: girth 8 always uses p = 2\n")?;
            }
            2
        }
        (g, _) => {
            return Err(CliError::Precondition(format!(
                "planning exists for girth 6 and 8, not {g}"
            )))
        }
    };
    let mut text = String::new();
    let (m, n) = match (&args.n_target, args.m, args.n) {
        (Some(target), None, None) => {
            let plan = if args.girth == 6 {
                plan_parameters_hexagon(p, args.r, target)?
            } else {
                plan_parameters_octagon(args.r, target)?
            };
            let sandwich = if args.girth == 6 {
                check_sandwich_hexagon(p, plan.m, plan.n, target)
            } else {
                check_sandwich_octagon(plan.m, plan.n, target)
            };
            if !sandwich {
                return Err(CliError::Verification(format!(
                    "sandwich re-check failed at m {} n {}",
                    plan.m, plan.n
                )));
            }
            text += &format!("plan girth {} p {p} r {} N {target}\n", args.girth, args.r);
            text += &format!(
                "seed m-star {} n-star {} N-star {}\n",
                plan.seed.m_star, plan.seed.n_star, plan.seed.value
            );
            text += &format!("params m {} n {}\nsandwich ok\n", plan.m, plan.n);
            (plan.m, plan.n)
        }
        (None, Some(m), Some(n)) => {
            text += &format!("plan girth {} p {p} r {}\nparams m {m} n {n}\n", args.girth, args.r);
            (m, n)
        }
        _ => return Err(CliError::Parse("give either --N or both --m and --n".into())),
    };

    let cert = certificate(p, m, n, args.r, args.girth)?;
    text += &summary(&cert, args.n_target.as_ref());
    if let Some(target) = &args.n_target {
        let t = theorem_bound(args.girth, p, target)?;
        text += &format!("theorem-exponent {:.12}\n", t.exponent);
        text += &format!("theorem-constant {:.12}\n", t.constant);
    }
    text += &format!("certificate {}\n", cert.status());
    put(io.out, &text)?;
    match &args.cert {
        Some(path) => write_text(path, &cert.serialize())?,
        None => put(io.out, &cert.serialize())?,
    }
    if !cert.is_valid() {
        let failed: Vec<&str> = cert.failures().map(|c| c.name.as_str()).collect();
        return Err(CliError::Verification(format!(
            "certificate INVALID: failed {}",
            failed.join(", ")
        )));
    }
    Ok(())
}

fn summary(cert: &Certificate, n_target: Option<&BigUint>) -> String {
    let mut s = String::new();
    let Some(v) = cert.value("V_n") else {
        return s;
    };
    s += &format!("vertices {v}\n");
    if let Some(target) = n_target {
        let v: BigUint = v.parse().expect("certificate values are decimal");
        if *target >= v {
            s += &format!("pad {}\n", target - v);
        }
    }
    for key in ["E_n-bound", "split-factor"] {
        if let Some(x) = cert.value(key) {
            s += &format!("{key} {x}\n");
        }
    }
    if let Some(e) = cert.value("final-edges") {
        s += &format!("final-edges-digits {}\n", e.len());
    }
    s
}

pub fn pipeline(recipe: &Path, opts: &PipelineOptions, io: &mut Streams) -> Result<(), CliError> {
    let report = run_pipeline(recipe, opts)?;
    put(io.out, &report.render(opts.with_timings))
}

/// Summarizes or re-verifies any artifact this tool writes.
pub fn report(path: &Path, io: &mut Streams) -> Result<(), CliError> {
    let text = read_text(path)?;
    if text.starts_with("pipeline 1\n") {
        return put(io.out, &reverify_report(path)?);
    }
    if text.starts_with("cert 1\n") {
        let cert = reverify(&text)?;
        return put(
            io.out,
            &format!("certificate reproduced, status {}\n", cert.status()),
        );
    }
    let a = match sniff(&text) {
        Some(FileKind::Hypergraph | FileKind::Bipartite) => Artifact::parse(&text)?,
        None => {
            return Err(CliError::Parse(format!(
                "{}: not a hypergraph, bipartite graph, certificate or pipeline report",
                path.display()
            )))
        }
    };
    let structure = match &a {
        Artifact::Hyper(h) => format!("hypergraph {}\n", hypergirth::validate(h)),
        Artifact::Bip(g) => format!(
            "bipartite left {} right {} incidences {} biregular {}\n",
            g.n_left(),
            g.n_right(),
            g.num_incidences(),
            g.biregularity()
                .map_or("none".to_string(), |(l, r)| format!("{l},{r}"))
        ),
    };
    put(io.out, &format!("{structure}girth {}\n", girth_of(&a).girth))
}
