//! `wexlat gen | lattice | verify`.

use std::ffi::OsString;
use std::io::Write as _;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::auslander::{build_algebra, build_ext_bimodule};
use crate::category_file::CategoryFile;
use crate::checks::{
    check_baer, check_bifunctor, check_module_laws, check_obscure, check_projective_vanishing,
    check_realization, check_roundtrip, CheckResult,
};
use crate::error::{Error, Result};
use crate::exactness::CompositionBudget;
use crate::lattice::{enumerate_submodules_with, EnumerationOptions};
use crate::report::{analyze, analyze_file, Analysis, AnalysisOptions, Report};

pub const BUDGET_ENV: &str = "WEXLAT_BUDGET";
pub const WORKERS_ENV: &str = "WEXLAT_WORKERS";

#[derive(Debug, Parser)]
#[command(
    name = "wexlat",
    version,
    about = "Lattices of weakly exact structures on representation-finite quiver categories"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Prime field; for `lattice` and `verify` the file's matrices are read modulo this prime.
    #[arg(long, global = true, value_parser = parse_field)]
    pub field: Option<u32>,
    /// Upper bound on vectors visited by the general enumerator.
    #[arg(long, global = true, env = BUDGET_ENV)]
    pub budget: Option<u128>,
    /// Worker threads (default: all cores).
    #[arg(long, global = true, env = WORKERS_ENV)]
    pub workers: Option<usize>,
    /// Seed for sampled checks.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write a type-A category file.
    Gen(GenArgs),
    /// Enumerate the sub-bimodule lattice and write the report and DOT graph.
    Lattice(LatticeArgs),
    /// Run named checks on a category file.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Args)]
pub struct GenArgs {
    /// Number of vertices.
    #[arg(long = "type-a", value_name = "N")]
    pub n: usize,
    /// One `R` (k -> k+1) or `L` (k+1 -> k) per arrow; default all `R`.
    #[arg(long)]
    pub orientation: Option<String>,
    /// Output path; stdout when omitted.
    #[arg(short, long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct LatticeArgs {
    pub input: PathBuf,
    /// Report path (`-` for stdout). Written to stdout when neither output is given.
    #[arg(long)]
    pub json: Option<PathBuf>,
    /// DOT path (`-` for stdout).
    #[arg(long)]
    pub dot: Option<PathBuf>,
    /// Restrict the DOT graph to closed nodes and their covers.
    #[arg(long)]
    pub closed_only: bool,
    /// Skip the middle-exactness and composition oracles.
    #[arg(long)]
    pub skip_oracles: bool,
    /// Action depth for composition candidates.
    #[arg(long, default_value_t = CompositionBudget::default().depth)]
    pub depth: usize,
    /// Skip the modularity check above this many nodes.
    #[arg(long, default_value_t = AnalysisOptions::default().modularity_limit)]
    pub modularity_limit: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, ValueEnum, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckName {
    Roundtrip,
    Baer,
    Realization,
    Bifunctor,
    Projective,
    Module,
    Obscure,
    Oracles,
    Lattice,
    FieldStability,
    All,
}

#[derive(Debug, Clone, Args)]
pub struct VerifyArgs {
    pub input: PathBuf,
    /// Comma-separated checks.
    #[arg(long, value_delimiter = ',', default_value = "all")]
    pub checks: Vec<CheckName>,
    /// Write results as JSON (`-` for stdout).
    #[arg(long)]
    pub json: Option<PathBuf>,
    /// Baer pairs per block above which a seeded sample is drawn.
    #[arg(long, default_value_t = 4096)]
    pub baer_cap: usize,
}

fn parse_field(s: &str) -> std::result::Result<u32, String> {
    match s.parse::<u32>() {
        Ok(p @ (2 | 3 | 5 | 7)) => Ok(p),
        _ => Err(format!("field must be one of 2, 3, 5, 7 (got {s})")),
    }
}

/// Parses `args`, runs the command, and returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match execute(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("wexlat: {e}");
            e.exit_code()
        }
    }
}

pub fn execute(cli: &Cli) -> Result<i32> {
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(w) = cli.workers {
        if w == 0 {
            return Err(Error::Validation("--workers must be positive".into()));
        }
        pool = pool.num_threads(w);
    }
    let pool = pool
        .build()
        .map_err(|e| Error::Internal(format!("thread pool: {e}")))?;
    pool.install(|| match &cli.command {
        Command::Gen(a) => {
            let file = cmd_gen(a, cli.field.unwrap_or(2))?;
            write_output(a.out.as_deref(), &file.to_json())?;
            Ok(0)
        }
        Command::Lattice(a) => {
            let out = cmd_lattice(&load(&a.input, cli.field)?, a, budget(cli))?;
            let mut wrote = false;
            if let Some(p) = &a.json {
                write_output(Some(p), &out.json)?;
                wrote = true;
            }
            if let Some(p) = &a.dot {
                write_output(Some(p), &out.dot)?;
                wrote = true;
            }
            if !wrote {
                write_output(None, &out.json)?;
            }
            let r = &out.report;
            eprintln!(
                "{} nodes, {} covers, {} closed",
                r.lattice.node_count, r.lattice.hasse_edge_count, r.closed.count
            );
            if !r.checks.disagreements.is_empty() {
                eprintln!("oracles disagree on nodes {:?}", r.checks.disagreements);
                return Ok(4);
            }
            Ok(0)
        }
        Command::Verify(a) => {
            let file = load(&a.input, cli.field)?;
            let results = cmd_verify(&file, &a.checks, cli.seed, a.baer_cap, budget(cli))?;
            for r in &results {
                match &r.failure {
                    None => println!("PASS {} ({} cases)", r.name, r.cases),
                    Some(f) => println!("FAIL {} ({} cases): {f}", r.name, r.cases),
                }
            }
            if let Some(p) = &a.json {
                let mut s = serde_json::to_string_pretty(&results)?;
                s.push('\n');
                write_output(Some(p), &s)?;
            }
            Ok(if results.iter().all(|r| r.passed) {
                0
            } else {
                1
            })
        }
    })
}

fn budget(cli: &Cli) -> u128 {
    cli.budget.unwrap_or(crate::lattice::DEFAULT_BUDGET)
}

fn load(path: &Path, field: Option<u32>) -> Result<CategoryFile> {
    let mut f = CategoryFile::load(path)?;
    if let Some(p) = field {
        f.field = p;
    }
    Ok(f)
}

fn write_output(path: Option<&Path>, text: &str) -> Result<()> {
    match path {
        Some(p) if p != Path::new("-") => std::fs::write(p, text)?,
        _ => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes())?;
            out.flush()?;
        }
    }
    Ok(())
}

pub fn cmd_gen(args: &GenArgs, field: u32) -> Result<CategoryFile> {
    if args.n == 0 {
        return Err(Error::Validation(
            "--type-a needs at least one vertex".into(),
        ));
    }
    let orientation = args
        .orientation
        .clone()
        .unwrap_or_else(|| "R".repeat(args.n - 1));
    CategoryFile::type_a(args.n, &orientation, field)
}

pub struct LatticeOutput {
    pub analysis: Analysis,
    pub report: Report,
    pub json: String,
    pub dot: String,
}

pub fn cmd_lattice(file: &CategoryFile, args: &LatticeArgs, budget: u128) -> Result<LatticeOutput> {
    let analysis = analyze_file(
        file,
        AnalysisOptions {
            budget,
            oracles: !args.skip_oracles,
            composition_depth: args.depth,
            modularity_limit: args.modularity_limit,
            ..Default::default()
        },
    )?;
    let report = analysis.report();
    let json = report.to_json();
    let dot = analysis.dot(args.closed_only);
    Ok(LatticeOutput {
        analysis,
        report,
        json,
        dot,
    })
}

/// Lattice invariants compared across fields.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LatticeShape {
    pub field: u32,
    pub global_dim: usize,
    pub nodes: usize,
    pub closed: usize,
    pub hasse_edges: usize,
    pub dims: Vec<usize>,
}

impl LatticeShape {
    fn same_as(&self, o: &Self) -> bool {
        (
            self.global_dim,
            self.nodes,
            self.closed,
            self.hasse_edges,
            &self.dims,
        ) == (o.global_dim, o.nodes, o.closed, o.hasse_edges, &o.dims)
    }
}

pub fn lattice_shape(file: &CategoryFile, p: u32, budget: u128) -> Result<LatticeShape> {
    let a = analyze(
        &file.to_category_over(p)?,
        AnalysisOptions {
            budget,
            oracles: false,
            modularity_limit: 0,
            ..Default::default()
        },
    )?;
    let mut dims = a.lattice.dims().to_vec();
    dims.sort_unstable();
    Ok(LatticeShape {
        field: p,
        global_dim: a.bimodule.global_dim(),
        nodes: a.lattice.len(),
        closed: a.closedness.closed_nodes().len(),
        hasse_edges: a.lattice.hasse().len(),
        dims,
    })
}

pub const STABILITY_FIELDS: [u32; 3] = [2, 3, 5];

pub fn check_field_stability(file: &CategoryFile, budget: u128) -> Result<CheckResult> {
    let shapes = STABILITY_FIELDS
        .iter()
        .map(|&p| lattice_shape(file, p, budget))
        .collect::<Result<Vec<_>>>()?;
    let failure = shapes
        .iter()
        .skip(1)
        .find(|s| !s.same_as(&shapes[0]))
        .map(|s| {
            format!(
                "p={}: G={} nodes={} closed={} covers={}; p={}: G={} nodes={} closed={} covers={}",
                shapes[0].field,
                shapes[0].global_dim,
                shapes[0].nodes,
                shapes[0].closed,
                shapes[0].hasse_edges,
                s.field,
                s.global_dim,
                s.nodes,
                s.closed,
                s.hasse_edges
            )
        });
    Ok(CheckResult {
        name: "field-stability".into(),
        passed: failure.is_none(),
        cases: shapes.len(),
        failure,
    })
}

fn result(name: &str, cases: usize, failure: Option<String>) -> CheckResult {
    CheckResult {
        name: name.into(),
        passed: failure.is_none(),
        cases,
        failure,
    }
}

/// Runs the selected checks in a fixed order.
pub fn cmd_verify(
    file: &CategoryFile,
    checks: &[CheckName],
    seed: u64,
    baer_cap: usize,
    budget: u128,
) -> Result<Vec<CheckResult>> {
    let mut selected: Vec<CheckName> = if checks.contains(&CheckName::All) {
        CheckName::value_variants()
            .iter()
            .copied()
            .filter(|c| *c != CheckName::All)
            .collect()
    } else {
        checks.to_vec()
    };
    selected.sort_unstable();
    selected.dedup();
    let b = build_ext_bimodule(build_algebra(&file.to_category()?)?)?;
    let needs_lattice = selected.iter().any(|c| matches!(c, CheckName::Obscure));
    let lattice = if needs_lattice {
        Some(enumerate_submodules_with(
            &b,
            EnumerationOptions {
                budget,
                force_general: false,
            },
        )?)
    } else {
        None
    };
    let needs_analysis = selected
        .iter()
        .any(|c| matches!(c, CheckName::Oracles | CheckName::Lattice));
    let analysis = if needs_analysis {
        Some(analyze_file(
            file,
            AnalysisOptions {
                budget,
                oracles: selected.contains(&CheckName::Oracles),
                ..Default::default()
            },
        )?)
    } else {
        None
    };
    let mut out = Vec::new();
    for c in selected {
        match c {
            CheckName::Roundtrip => out.push(check_roundtrip(&b)?),
            CheckName::Baer => out.push(check_baer(&b, seed, baer_cap)?),
            CheckName::Realization => out.push(check_realization(&b)?),
            CheckName::Bifunctor => out.push(check_bifunctor(&b)?),
            CheckName::Projective => out.push(check_projective_vanishing(&b)?),
            CheckName::Module => out.push(check_module_laws(&b)?),
            CheckName::Obscure => out.push(check_obscure(&b, lattice.as_ref().expect("lattice"))?),
            CheckName::Oracles => {
                let a = analysis.as_ref().expect("analysis");
                let (_, _, bad) = a.agreement();
                out.push(result(
                    "oracles",
                    a.lattice.len(),
                    (!bad.is_empty()).then(|| format!("disagreement on nodes {bad:?}")),
                ));
            }
            CheckName::Lattice => {
                let a = analysis.as_ref().expect("analysis");
                out.push(result(
                    "modular",
                    a.lattice.len(),
                    match &a.modular {
                        None => Some(format!(
                            "skipped: {} nodes exceed the modularity limit",
                            a.lattice.len()
                        )),
                        Some(Ok(())) => None,
                        Some(Err(w)) => Some(format!("witness r={} s={} t={}", w.r, w.s, w.t)),
                    },
                ));
                out.push(result(
                    "boolean",
                    a.closedness.closed_nodes().len(),
                    (!a.boolean.ok).then(|| {
                        a.boolean
                            .failure
                            .clone()
                            .unwrap_or_else(|| "closed sublattice is not boolean".into())
                    }),
                ));
                out.push(result(
                    "atoms",
                    a.lattice.atoms().len(),
                    (!a.atoms_ok).then(|| "atoms differ from socle lines".to_string()),
                ));
            }
            CheckName::FieldStability => out.push(check_field_stability(file, budget)?),
            CheckName::All => {}
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_global_flags() {
        let cli = Cli::try_parse_from(["wexlat", "gen", "--type-a", "3", "--field", "5"]).unwrap();
        assert_eq!(cli.field, Some(5));
        assert!(Cli::try_parse_from(["wexlat", "gen", "--type-a", "3", "--field", "4"]).is_err());
        let cli = Cli::try_parse_from(["wexlat", "verify", "x.json", "--checks", "baer,obscure"])
            .unwrap();
        match cli.command {
            Command::Verify(v) => assert_eq!(v.checks, vec![CheckName::Baer, CheckName::Obscure]),
            _ => panic!(),
        }
    }

    #[test]
    fn gen_sizes() {
        let g = |n, o: Option<&str>| GenArgs {
            n,
            orientation: o.map(String::from),
            out: None,
        };
        assert_eq!(cmd_gen(&g(1, None), 2).unwrap().indecomposables.len(), 1);
        assert_eq!(
            cmd_gen(&g(3, Some("RL")), 2).unwrap().indecomposables.len(),
            6
        );
        assert!(cmd_gen(&g(3, Some("R")), 2).is_err());
        assert!(cmd_gen(&g(0, None), 2).is_err());
    }
}
