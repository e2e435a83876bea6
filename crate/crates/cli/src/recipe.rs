//! Line-oriented pipeline recipes.
//!
//! ```text
//! # comments and blank lines are ignored
//! target 6
//! stage gen greedy left 400 right 30 deg 21 girth 12 seed 1
//! stage nbhd
//! stage substitute template path:3:3 k 3
//! stage verify
//! certify girth 6 p 5 m 2 n 1 r 3
//! ```
//!
//! `target` is a hypergraph girth; bipartite stages must reach twice it.
//! The first stage is a `gen` and no later stage is. `certify` is optional.

use std::path::Path;

use hypergirth::geometry::GeometrySpec;

use crate::error::CliError;
use crate::ops::{greedy_spec, parse_big, parse_count, Op, TemplateSpec};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertifyArgs {
    pub girth: u32,
    pub p: u64,
    pub m: u64,
    pub n: u64,
    pub r: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Stage {
    /// 1-based line in the recipe text.
    pub line: usize,
    pub op: Op,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Recipe {
    pub target: u32,
    pub stages: Vec<Stage>,
    pub certify: Option<CertifyArgs>,
}

fn err(line: usize, message: impl std::fmt::Display) -> CliError {
    CliError::Parse(format!("recipe line {line}: {message}"))
}

/// Checks `words` is `k1 v1 k2 v2 ...` for exactly `keys` and returns the
/// values.
fn key_values<'a>(words: &[&'a str], keys: &[&str], line: usize) -> Result<Vec<&'a str>, CliError> {
    let expected = keys.iter().map(|k| format!("{k} <value>")).collect::<Vec<_>>().join(" ");
    if words.len() != 2 * keys.len() || words.iter().step_by(2).zip(keys).any(|(w, k)| w != k) {
        return Err(err(line, format!("expected `{expected}`")));
    }
    Ok(words.iter().skip(1).step_by(2).copied().collect())
}

fn num<T: TryFrom<usize>>(tok: &str, line: usize) -> Result<T, CliError> {
    let n = parse_count(tok).map_err(|e| err(line, e))?;
    T::try_from(n).map_err(|_| err(line, format!("{tok} out of range")))
}

fn parse_op(words: &[&str], line: usize) -> Result<Op, CliError> {
    let (&name, rest) = words
        .split_first()
        .ok_or_else(|| err(line, "empty stage"))?;
    match name {
        "gen" => {
            let (&kind, args) = rest
                .split_first()
                .ok_or_else(|| err(line, "gen needs a geometry"))?;
            let spec = match kind {
                "plane" | "quadrangle" | "hexagon" => {
                    let q = num(key_values(args, &["q"], line)?[0], line)?;
                    match kind {
                        "plane" => GeometrySpec::Plane { q },
                        "quadrangle" => GeometrySpec::Quadrangle { q },
                        _ => GeometrySpec::Hexagon { q },
                    }
                }
                "greedy" => {
                    let v = key_values(args, &["left", "right", "deg", "girth", "seed"], line)?;
                    greedy_spec(
                        num(v[0], line)?,
                        num(v[1], line)?,
                        num(v[2], line)?,
                        num(v[3], line)?,
                        num(v[4], line)?,
                    )
                }
                other => return Err(err(line, format!("unknown geometry {other:?}"))),
            };
            Ok(Op::Gen(spec))
        }
        "nbhd" => {
            key_values(rest, &[], line)?;
            Ok(Op::Nbhd)
        }
        "substitute" => {
            let v = key_values(rest, &["template", "k"], line)?;
            let template: TemplateSpec = v[0].parse().map_err(|e| err(line, e))?;
            Ok(Op::Substitute {
                template,
                k: num(v[1], line)?,
            })
        }
        "split" => Ok(Op::Split {
            r: num(key_values(rest, &["r"], line)?[0], line)?,
        }),
        "pad" => {
            let to = key_values(rest, &["to"], line)?[0];
            Ok(Op::Pad {
                to: parse_big(to).map_err(|e| err(line, e))?,
            })
        }
        "verify" => {
            if rest.is_empty() {
                return Ok(Op::Verify { oracle_max: None });
            }
            let l = key_values(rest, &["oracle"], line)?[0];
            Ok(Op::Verify {
                oracle_max: Some(num(l, line)?),
            })
        }
        other => Err(err(line, format!("unknown stage op {other:?}"))),
    }
}

impl Recipe {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        let mut target = None;
        let mut stages: Vec<Stage> = Vec::new();
        let mut certify = None;
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let words: Vec<&str> = content.split_whitespace().collect();
            match words[0] {
                "target" => {
                    if target.is_some() {
                        return Err(err(line, "second `target` line"));
                    }
                    if words.len() != 2 {
                        return Err(err(line, "expected `target <girth>`"));
                    }
                    target = Some(num::<u32>(words[1], line)?);
                }
                "stage" => {
                    let op = parse_op(&words[1..], line)?;
                    let is_gen = matches!(op, Op::Gen(_));
                    if stages.is_empty() != is_gen {
                        return Err(err(line, "a recipe starts with exactly one `gen` stage"));
                    }
                    stages.push(Stage { line, op });
                }
                "certify" => {
                    if certify.is_some() {
                        return Err(err(line, "second `certify` line"));
                    }
                    let v = key_values(&words[1..], &["girth", "p", "m", "n", "r"], line)?;
                    certify = Some(CertifyArgs {
                        girth: num(v[0], line)?,
                        p: num(v[1], line)?,
                        m: num(v[2], line)?,
                        n: num(v[3], line)?,
                        r: num(v[4], line)?,
                    });
                }
                other => return Err(err(line, format!("unknown directive {other:?}"))),
            }
        }
        let target = target.ok_or_else(|| CliError::Parse("recipe has no `target` line".into()))?;
        if stages.is_empty() {
            return Err(CliError::Parse("recipe has no stages".into()));
        }
        Ok(Recipe {
            target,
            stages,
            certify,
        })
    }

    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = crate::artifact::read_text(path)?;
        Recipe::parse(&text).map_err(|e| e.context(&path.display().to_string()))
    }

    /// Canonical text: one directive per line, no comments.
    pub fn to_text(&self) -> String {
        let mut out = format!("target {}\n", self.target);
        for s in &self.stages {
            out += &format!("stage {}\n", s.op.recipe_form());
        }
        if let Some(c) = &self.certify {
            out += &format!(
                "certify girth {} p {} m {} n {} r {}\n",
                c.girth, c.p, c.m, c.n, c.r
            );
        }
        out
    }
}
