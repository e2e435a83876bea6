//! Recipe execution and the pipeline report.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use hypergirth::format::write_hypergraph;
use hypergirth::planner::{certificate, Status};
use hypergirth::{validate, Girth};

use crate::artifact::{read_text, write_text, Artifact};
use crate::error::CliError;
use crate::ops::{apply, girth_command, girth_of, required_girth, Op, TemplateSpec};
use crate::recipe::{CertifyArgs, Recipe};

pub const RECIPE_FILE: &str = "recipe.txt";
pub const REPORT_FILE: &str = "report.txt";
pub const CERT_FILE: &str = "certificate.txt";

#[derive(Debug, Clone)]
pub struct PipelineOptions {
    pub out_dir: PathBuf,
    pub with_timings: bool,
    pub oracle_budget: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StageRecord {
    pub index: usize,
    pub recipe_form: String,
    pub command: String,
    /// File name inside the output directory.
    pub output: Option<String>,
    pub structure: String,
    pub predicted_edges: Option<usize>,
    /// Edges of a hypergraph, incidences of a bipartite graph.
    pub actual_edges: usize,
    /// `edges` or `incidences`, matching `actual_edges`.
    pub size_label: &'static str,
    pub girth: Girth,
    pub required_girth: u32,
    pub girth_command: String,
    pub notes: Vec<String>,
    pub millis: u128,
}

impl StageRecord {
    pub fn girth_ok(&self) -> bool {
        self.girth.at_least(self.required_girth)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CertificateRecord {
    pub file: String,
    pub status: Status,
    pub command: String,
}

/// Everything a pipeline run claims, each claim paired with the command
/// that reproduces it from inside the output directory.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PipelineReport {
    pub target: u32,
    pub stages: Vec<StageRecord>,
    pub certificate: Option<CertificateRecord>,
    /// Set when a stage fell below the girth target.
    pub failed_stage: Option<usize>,
}

impl PipelineReport {
    pub fn final_output(&self) -> Option<&str> {
        self.stages.iter().rev().find_map(|s| s.output.as_deref())
    }

    pub fn render(&self, with_timings: bool) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "pipeline 1");
        let _ = writeln!(out, "recipe {RECIPE_FILE}");
        let _ = writeln!(out, "command hypergirth pipeline {RECIPE_FILE} --out-dir .");
        let _ = writeln!(out, "target {}", self.target);
        for s in &self.stages {
            let _ = writeln!(out, "stage {} {}", s.index, s.recipe_form);
            let _ = writeln!(out, "  command {}", s.command);
            if let Some(o) = &s.output {
                let _ = writeln!(out, "  output {o}");
            }
            let _ = writeln!(out, "  structure {}", s.structure);
            let predicted = s.predicted_edges.map_or("-".to_string(), |p| p.to_string());
            let _ = writeln!(out, "  {} predicted {predicted} actual {}", s.size_label, s.actual_edges);
            let verdict = if s.girth_ok() { "ok" } else { "FAIL" };
            let _ = writeln!(out, "  girth {} required {} {verdict}", s.girth, s.required_girth);
            let _ = writeln!(out, "  girth-command {}", s.girth_command);
            for n in &s.notes {
                let _ = writeln!(out, "  note {n}");
            }
            if with_timings {
                let _ = writeln!(out, "  time-ms {}", s.millis);
            }
        }
        if let Some(c) = &self.certificate {
            let _ = writeln!(out, "certificate {} {}", c.file, c.status);
            let _ = writeln!(out, "  command {}", c.command);
        }
        if let Some(f) = self.final_output() {
            let _ = writeln!(out, "final {f}");
        }
        match self.failed_stage {
            Some(i) => {
                let _ = writeln!(out, "status failed at stage {i}");
            }
            None => {
                let _ = writeln!(out, "status ok");
            }
        }
        out
    }
}

fn structure_line(a: &Artifact) -> String {
    match a {
        Artifact::Hyper(h) => validate(h).to_string(),
        Artifact::Bip(g) => {
            let bireg = g
                .biregularity()
                .map_or("none".to_string(), |(l, r)| format!("{l},{r}"));
            format!(
                "left {} right {} incidences {} biregular {bireg}",
                g.n_left(),
                g.n_right(),
                g.num_incidences()
            )
        }
    }
}

fn size(a: &Artifact) -> (usize, &'static str) {
    match a {
        Artifact::Hyper(h) => (h.num_edges(), "edges"),
        Artifact::Bip(g) => (g.num_incidences(), "incidences"),
    }
}

/// Copies `file:` templates into the output directory under fixed names so
/// the recorded commands only reference files inside it.
fn localize_templates(recipe: &mut Recipe, base: &Path, out_dir: &Path) -> Result<(), CliError> {
    for (i, stage) in recipe.stages.iter_mut().enumerate() {
        if let Op::Substitute { template, .. } = &mut stage.op {
            if let TemplateSpec::File(_) = template {
                let h = template.load(base)?;
                let name = format!("template-{:02}.hgt", i + 1);
                write_text(&out_dir.join(&name), &write_hypergraph(&h))?;
                *template = TemplateSpec::File(PathBuf::from(name));
            }
        }
    }
    Ok(())
}

fn certify_command(c: &CertifyArgs) -> String {
    format!(
        "hypergirth plan --girth {} --p {} --r {} --m {} --n {} --cert {CERT_FILE}",
        c.girth, c.p, c.r, c.m, c.n
    )
}

/// Runs `recipe_path` into `opts.out_dir`, writing every stage output, the
/// canonical recipe and the report there. A girth regression stops the run
/// after writing a report that marks the failing stage.
pub fn run_pipeline(recipe_path: &Path, opts: &PipelineOptions) -> Result<PipelineReport, CliError> {
    let mut recipe = Recipe::load(recipe_path)?;
    let base = recipe_path.parent().unwrap_or(Path::new("."));
    let out_dir = &opts.out_dir;
    fs::create_dir_all(out_dir).map_err(|e| CliError::io(out_dir, e))?;
    localize_templates(&mut recipe, base, out_dir)?;
    write_text(&out_dir.join(RECIPE_FILE), &recipe.to_text())?;

    let mut report = PipelineReport {
        target: recipe.target,
        stages: Vec::new(),
        certificate: None,
        failed_stage: None,
    };
    let finish = |report: &PipelineReport| {
        write_text(&out_dir.join(REPORT_FILE), &report.render(opts.with_timings))
    };

    let mut current: Option<Artifact> = None;
    let mut current_file = String::new();
    for (i, stage) in recipe.stages.iter().enumerate() {
        let index = i + 1;
        let started = Instant::now();
        let context = format!("stage {index} (recipe line {}: {})", stage.line, stage.op.recipe_form());
        let applied = apply(&stage.op, current.take(), out_dir, opts.oracle_budget)
            .map_err(|e| e.context(&context))?;
        let output = stage.op.produces_output().then(|| {
            format!("stage-{index:02}.{}", applied.artifact.extension())
        });
        if let Some(name) = &output {
            write_text(&out_dir.join(name), &applied.artifact.serialize())?;
        }
        let output_name = output.clone().unwrap_or_else(|| current_file.clone());
        let girth = girth_of(&applied.artifact).girth;
        let required = required_girth(&applied.artifact, recipe.target);
        let (actual_edges, size_label) = size(&applied.artifact);
        let mut notes = applied.notes;
        if let Some(g) = &applied.greedy {
            notes.push(format!("greedy incidences {} shortfall {}", g.incidences, g.shortfall));
        }
        let record = StageRecord {
            index,
            recipe_form: stage.op.recipe_form(),
            command: stage.op.command(&current_file, &output_name),
            output,
            structure: structure_line(&applied.artifact),
            predicted_edges: applied.predicted_edges,
            actual_edges,
            size_label,
            girth,
            required_girth: required,
            girth_command: girth_command(&output_name, None),
            notes,
            millis: started.elapsed().as_millis(),
        };
        let ok = record.girth_ok();
        report.stages.push(record);
        if !ok {
            report.failed_stage = Some(index);
            finish(&report)?;
            return Err(CliError::Verification(format!(
                "{context}: girth {girth} is below the required {required}"
            )));
        }
        current_file = output_name;
        current = Some(applied.artifact);
    }

    if let Some(c) = &recipe.certify {
        let cert = certificate(c.p, c.m, c.n, c.r, c.girth)?;
        write_text(&out_dir.join(CERT_FILE), &cert.serialize())?;
        report.certificate = Some(CertificateRecord {
            file: CERT_FILE.into(),
            status: cert.status(),
            command: certify_command(c),
        });
        if !cert.is_valid() {
            finish(&report)?;
            return Err(CliError::Verification("certificate is INVALID".into()));
        }
    }
    finish(&report)?;
    Ok(report)
}

/// Re-runs the recipe next to `report_path` into a scratch directory and
/// checks the report and every stage file come out byte-identical.
pub fn reverify_report(report_path: &Path) -> Result<String, CliError> {
    let dir = report_path.parent().unwrap_or(Path::new("."));
    let original = read_text(report_path)?;
    let scratch = dir.join(format!(".reverify-{}", std::process::id()));
    let opts = PipelineOptions {
        out_dir: scratch.clone(),
        with_timings: false,
        oracle_budget: hypergirth::girth::DEFAULT_ORACLE_INCIDENCES,
    };
    let result = run_pipeline(&dir.join(RECIPE_FILE), &opts).and_then(|report| {
        let strip = |t: &str| -> String {
            t.lines()
                .filter(|l| !l.starts_with("  time-ms "))
                .map(|l| format!("{l}\n"))
                .collect()
        };
        if strip(&original) != report.render(false) {
            return Err(CliError::Verification("re-run report differs".into()));
        }
        let mut files: Vec<String> = report.stages.iter().filter_map(|s| s.output.clone()).collect();
        if report.certificate.is_some() {
            files.push(CERT_FILE.into());
        }
        for f in &files {
            if read_text(&dir.join(f))? != read_text(&scratch.join(f))? {
                return Err(CliError::Verification(format!("re-run output {f} differs")));
            }
        }
        Ok(format!("report reproduced: {} stages, {} files\n", report.stages.len(), files.len()))
    });
    let _ = fs::remove_dir_all(&scratch);
    result
}
