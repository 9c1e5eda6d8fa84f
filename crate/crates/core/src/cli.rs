//! The `chromstab` command line.
//!
//! Exit status: 0 on success, 1 when `verify` finds a failing claim, 2 for
//! usage and input errors.

use std::fs;
use std::io::{self, Read, Write};
use std::path::Path;

use clap::{Parser, Subcommand, ValueEnum};

use crate::coloring::t_star;
use crate::graph::{connectivity, enumerate_labeled_graphs, generate, FamilySpec, Graph};
use crate::io::{format_edgelist, format_graph6, parse_edgelist, parse_graph6, WitnessCertificate};
use crate::stability::{domination_of_max_degree, es, lookup, vs, vs_omega, Witness};
use crate::verify::{render_reports, run_suite, Scale, Status};

/// Invariants computed by `invariant` beyond the stability registry.
const EXTRA_INVARIANTS: [&str; 4] = ["t_star", "connectivity", "gamma_max_degree", "vs_omega"];

#[derive(Debug, Parser)]
#[command(
    name = "chromstab",
    version,
    about = "Exact vertex stability numbers of small graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print one invariant of a graph.
    Invariant {
        #[arg(long)]
        rho: String,
        /// graph6 string, file path, or `-` for stdin.
        graph: String,
    },
    /// Print vs_ρ (or es_ρ with --edges) and a minimum witness.
    Stability {
        #[arg(long)]
        rho: String,
        #[arg(long)]
        edges: bool,
        graph: String,
    },
    /// Emit a witness certificate for vs_ρ.
    Witness {
        #[arg(long)]
        rho: String,
        #[arg(long)]
        json: bool,
        graph: String,
    },
    /// Run the claim suite and print the traceability table.
    Verify {
        /// Comma-separated claim ids; all claims when omitted.
        #[arg(long, value_delimiter = ',')]
        claims: Option<Vec<String>>,
        #[arg(long, default_value_t = 5)]
        max_n: usize,
        /// Labelled corpus order, at most min(max_n, 6); defaults to min(max_n, 5).
        #[arg(long)]
        labeled_max_n: Option<usize>,
    },
    /// Print a member of a named family.
    Gen {
        #[arg(long)]
        family: String,
        #[arg(long, value_delimiter = ',', num_args = 1..)]
        params: Vec<usize>,
        #[arg(long, value_enum, default_value_t = Format::Graph6)]
        format: Format,
    },
    /// Print every labelled graph on n vertices, one graph6 per line.
    Corpus {
        #[arg(long)]
        n: usize,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Graph6,
    Edgelist,
}

struct Usage(String);

impl<E: std::fmt::Display> From<E> for Usage {
    fn from(e: E) -> Self {
        Usage(e.to_string())
    }
}

/// Reads a graph from a graph6 literal, a file, or stdin (`-`). Text whose
/// first token is a number is an edge list, anything else graph6.
fn read_graph(arg: &str) -> Result<Graph, Usage> {
    let text = if arg == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        s
    } else if Path::new(arg).is_file() {
        fs::read_to_string(arg).map_err(|e| Usage(format!("{arg}: {e}")))?
    } else {
        return Ok(parse_graph6(arg)?);
    };
    let starts_numeric = text
        .trim_start()
        .chars()
        .next()
        .is_some_and(|c| c.is_ascii_digit());
    if starts_numeric {
        return Ok(parse_edgelist(&text)?);
    }
    let mut lines = text
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty());
    let Some((i, first)) = lines.next() else {
        return Err(Usage("no graph in input".into()));
    };
    if let Some((j, _)) = lines.next() {
        return Err(Usage(format!(
            "line {}: expected a single graph6 line",
            j + 1
        )));
    }
    parse_graph6(first).map_err(|e| Usage(format!("line {}: {e}", i + 1)))
}

fn invariant(rho: &str, g: &Graph) -> Result<usize, Usage> {
    match rho {
        "t_star" => Ok(t_star(g)?),
        "connectivity" => Ok(connectivity(g)?),
        "gamma_max_degree" => Ok(domination_of_max_degree(g)?.value),
        "vs_omega" => Ok(vs_omega(g)?),
        _ => lookup(rho).map(|d| d.evaluate(g)).map_err(|e| {
            Usage(format!(
                "{e}; also available: {}",
                EXTRA_INVARIANTS.join(", ")
            ))
        }),
    }
}

fn execute(cmd: Command, out: &mut dyn Write) -> Result<i32, Usage> {
    match cmd {
        Command::Invariant { rho, graph } => {
            let g = read_graph(&graph)?;
            writeln!(out, "{}", invariant(&rho, &g)?)?;
        }
        Command::Stability { rho, edges, graph } => {
            let g = read_graph(&graph)?;
            let d = lookup(&rho)?;
            let r = if edges { es(&g, &d) } else { vs(&g, &d) };
            let (label, witness) = match &r.witness {
                Witness::Vertices(s) => ("vs", s.to_string()),
                Witness::Edges(e) => ("es", format!("{e:?}")),
            };
            writeln!(
                out,
                "{label}={} witness={witness} rho_before={} rho_after={}{}",
                r.value,
                r.rho_before,
                r.rho_after,
                if r.emptied { " emptied" } else { "" }
            )?;
        }
        Command::Witness { rho, json, graph } => {
            let g = read_graph(&graph)?;
            let cert = WitnessCertificate::build(&g, &lookup(&rho)?)?;
            if json {
                writeln!(out, "{}", serde_json::to_string(&cert)?)?;
            } else {
                writeln!(out, "graph {}", cert.input_graph)?;
                writeln!(out, "vs_{} = {}", cert.invariant, cert.stability_value)?;
                writeln!(out, "remove {:?}", cert.removal_set)?;
                writeln!(out, "{} -> {}", cert.rho_before, cert.rho_after)?;
                if let Some(c) = &cert.coloring {
                    writeln!(out, "coloring k={} {:?}", c.k(), c.colors())?;
                }
            }
        }
        Command::Verify {
            claims,
            max_n,
            labeled_max_n,
        } => {
            let scale = match labeled_max_n {
                Some(l) => Scale::with_labeled(max_n, l)?,
                None => Scale::new(max_n)?,
            };
            let reports = run_suite(&scale, claims.as_deref())?;
            out.write_all(render_reports(&reports).as_bytes())?;
            if reports.iter().any(|r| r.status == Status::Fail) {
                return Ok(1);
            }
        }
        Command::Gen {
            family,
            params,
            format,
        } => {
            let g = generate(&FamilySpec::from_tag(&family, &params)?)?;
            match format {
                Format::Graph6 => writeln!(out, "{}", format_graph6(&g)?)?,
                Format::Edgelist => writeln!(out, "{}", format_edgelist(&g))?,
            }
        }
        Command::Corpus { n } => {
            for g in enumerate_labeled_graphs(n)? {
                writeln!(out, "{}", format_graph6(&g)?)?;
            }
        }
    }
    Ok(0)
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = write!(err, "{text}");
                2
            } else {
                let _ = write!(out, "{text}");
                0
            };
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}
