//! Command-line front end for `tfpoly`.
//!
//! [`run`] does all the work and returns the process exit code, so tests can
//! drive it with an in-memory writer and a stubbed verifier.

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use anyhow::{Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;
use tfpoly::verify::corpus;
use tfpoly::{
    count, enumerate_classes, example_report, parse_graph, Budget, CountQuery, Family, Filter, GroupShape,
    IdentityReport, MultiGraph, Orientation, PolynomialReport, Relation,
};

pub const EXIT_OK: u8 = 0;
pub const EXIT_ERROR: u8 = 1;
pub const EXIT_FAILED: u8 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "tfpoly", version, about = "Complementary tension-flow polynomials of multigraphs")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,

    /// Edge limit for orientation sweeps and subset expansions.
    #[arg(long, global = true, value_name = "EDGES")]
    pub budget: Option<usize>,

    /// Edge limit for equivalence-class construction.
    #[arg(long, global = true, value_name = "EDGES")]
    pub class_budget: Option<usize>,

    /// Limit on candidate lattice points per box enumeration.
    #[arg(long, global = true, value_name = "N")]
    pub max_candidates: Option<u64>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print every graph-level polynomial.
    Polys {
        /// Graph file, or `-` for standard input.
        file: PathBuf,
    },
    /// Evaluate one counting function.
    Count {
        file: PathBuf,
        /// Family name, e.g. kappa_mod, kappa_bar_int, tau_local.
        #[arg(long)]
        family: Family,
        #[arg(long)]
        p: u64,
        #[arg(long)]
        q: u64,
        /// Tension group as a list of cyclic orders, e.g. `2,2`.
        #[arg(long)]
        group: Option<GroupShape>,
        /// Flow group as a list of cyclic orders.
        #[arg(long)]
        flow_group: Option<GroupShape>,
        /// Flip string selecting the orientation for local families.
        #[arg(long)]
        orientation: Option<String>,
    },
    /// Partition orientations into equivalence classes.
    Classes {
        file: PathBuf,
        /// cut, eulerian or cut-eulerian.
        #[arg(long)]
        relation: Relation,
        /// all, acyclic or totally-cyclic.
        #[arg(long, default_value = "all")]
        filter: Filter,
    },
    /// Check every identity on one graph; exit 2 if any fails.
    Verify { file: PathBuf },
    /// Check every identity on all small multigraphs; exit 2 if any fails.
    Corpus {
        #[arg(long)]
        max_edges: usize,
        /// Include graphs with loops.
        #[arg(long)]
        loops: bool,
    },
    /// Reproduce the five-edge worked example.
    Example,
}

/// Per-graph identity checker, replaceable in tests.
pub type Verifier<'a> = &'a (dyn Fn(&MultiGraph, &Budget) -> IdentityReport + Sync);

impl Cli {
    pub fn budget(&self) -> Budget {
        let mut b = Budget::default();
        if let Some(e) = self.budget {
            b.max_orientation_edges = e;
            b.max_subset_edges = e;
        }
        if let Some(e) = self.class_budget {
            b.max_class_edges = e;
        }
        if let Some(n) = self.max_candidates {
            b.max_candidates = n;
        }
        b
    }
}

fn read_graph(path: &Path) -> Result<MultiGraph> {
    let text = if path == Path::new("-") {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        s
    } else {
        fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?
    };
    parse_graph(&text).with_context(|| format!("in {}", path.display()))
}

fn to_json(value: &impl serde::Serialize) -> Result<String> {
    Ok(serde_json::to_string(value)? + "\n")
}

fn report_text(reports: &[(MultiGraph, IdentityReport)]) -> String {
    let mut out = String::new();
    let mut failing = 0;
    for (g, r) in reports {
        if !r.all_pass() {
            failing += 1;
            out.push_str(&format!("graph:\n{g}{r}\n"));
        }
    }
    out.push_str(&format!("{} graphs checked, {failing} with failures\n", reports.len()));
    out
}

/// Runs one command, writing its output to `out`, and returns the exit code.
pub fn run_with(cli: &Cli, verifier: Verifier, out: &mut dyn Write) -> Result<u8> {
    let budget = cli.budget();
    let json = cli.format == Format::Json;
    let (text, code) = match &cli.command {
        Command::Polys { file } => {
            let g = read_graph(file)?;
            let report = PolynomialReport::compute(&g, &budget)?;
            (if json { to_json(&report)? } else { report.to_string() }, EXIT_OK)
        }
        Command::Count { file, family, p, q, group, flow_group, orientation } => {
            let g = read_graph(file)?;
            let mut query = CountQuery::new(*family, *p, *q).with_groups(group.clone(), flow_group.clone());
            if let Some(bits) = orientation {
                query.orientation = Some(Orientation::parse(&g, bits)?);
            }
            let n = count(&g, &query, &budget)?;
            let text = if json {
                to_json(&json!({ "family": family, "p": p, "q": q, "count": n }))?
            } else {
                format!("{n}\n")
            };
            (text, EXIT_OK)
        }
        Command::Classes { file, relation, filter } => {
            let g = read_graph(file)?;
            let part = enumerate_classes(&g, *relation, *filter, &budget)?;
            let reps: Vec<String> = part.representatives.iter().map(Orientation::to_string).collect();
            let text = if json {
                to_json(&json!({
                    "relation": relation,
                    "filter": filter.to_string(),
                    "classes": part.len(),
                    "sizes": part.sizes(),
                    "representatives": reps,
                }))?
            } else {
                let mut s = format!("{} classes\n", part.len());
                for (size, rep) in part.sizes().iter().zip(&reps) {
                    s.push_str(&format!("{rep} size {size}\n"));
                }
                s
            };
            (text, EXIT_OK)
        }
        Command::Verify { file } => {
            let g = read_graph(file)?;
            let report = verifier(&g, &budget);
            let code = if report.all_pass() { EXIT_OK } else { EXIT_FAILED };
            (if json { to_json(&report)? } else { report.to_string() }, code)
        }
        Command::Corpus { max_edges, loops } => {
            use rayon::prelude::*;
            let reports: Vec<(MultiGraph, IdentityReport)> = corpus(*max_edges, *loops)
                .into_par_iter()
                .map(|g| {
                    let r = verifier(&g, &budget);
                    (g, r)
                })
                .collect();
            let code = if reports.iter().all(|(_, r)| r.all_pass()) { EXIT_OK } else { EXIT_FAILED };
            let text = if json {
                let list: Vec<_> =
                    reports.iter().map(|(g, r)| json!({ "graph": g.to_string(), "report": r })).collect();
                to_json(&list)?
            } else {
                report_text(&reports)
            };
            (text, code)
        }
        Command::Example => {
            let text = example_report(&budget)?;
            (if json { to_json(&json!({ "example": text }))? } else { text }, EXIT_OK)
        }
    };
    out.write_all(text.as_bytes())?;
    out.flush()?;
    Ok(code)
}

/// [`run_with`] using the library verifier.
pub fn run(cli: &Cli, out: &mut dyn Write) -> Result<u8> {
    run_with(cli, &tfpoly::verify_graph, out)
}
