//! Command-line front end. [`run`] holds all the logic so that it can be
//! tested in-process; `main` only forwards arguments and streams.

pub mod graph6;

use std::fmt::Write as _;
use std::fs;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use ugqsym::enumeration::{
    counts_by_edges, counts_by_nodes, filter_connected, generate_by_edges, generate_by_nodes,
    generate_connected_by_edges,
};
use ugqsym::hopf::{basis, coproduct};
use ugqsym::invariants::{
    deck_on, invariant_vector_with, iso_test, kelly_check_on, separating_family, smallest_graphs,
    subgraph_count_matrix, vectors_to_csv,
};
use ugqsym::series::{evaluate, expand};
use ugqsym::{graph, Algebra, CanonGraph, Error, HopfElement, LabeledGraph, Limits};

use graph6::{decode_graph6, encode_graph6};

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "ugqsym",
    version,
    about = "Subgraph-counting series on unlabeled graphs"
)]
struct Cli {
    /// Node bound for algebra operations and enumeration.
    #[arg(long, global = true, env = "UGQSYM_MAX_NODES")]
    max_nodes: Option<usize>,
    /// Edge bound for enumeration by edges and binomials.
    #[arg(long, global = true, env = "UGQSYM_MAX_EDGES")]
    max_edges: Option<usize>,
    /// Emit JSON instead of plain text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Canonical form of an edge list read from stdin ("i j" per line).
    Canon,
    /// Number of subgraphs of HOST isomorphic to PATTERN.
    Eval {
        #[arg(long)]
        pattern: String,
        #[arg(long)]
        host: String,
    },
    /// Product M_A * M_B.
    Product { a: String, b: String },
    /// Coproduct of M_G.
    Coproduct { graph: String },
    /// Antipode of M_G.
    Antipode { graph: String },
    /// binom(M_K2, n) expanded in the M basis.
    Binom { n: usize },
    /// Whether two graphs are isomorphic, decided by invariant vectors.
    Iso { a: String, b: String },
    /// Invariant vectors as CSV, one row per host.
    Vector(VectorArgs),
    /// Vertex-deleted cards of a host, as graph6 lines.
    Deck {
        graph: String,
        /// Nominal node count (defaults to the graph's own).
        #[arg(long)]
        n: Option<usize>,
    },
    /// Kelly's identity for PATTERN inside HOST.
    Kelly {
        #[arg(long)]
        pattern: String,
        #[arg(long)]
        host: String,
        #[arg(long)]
        n: Option<usize>,
    },
    /// Table of M_G(H) over the smallest graphs, "." for zero.
    Matrix {
        #[arg(long, default_value_t = 23)]
        max: usize,
    },
    /// Monomials of M_G with labels up to N.
    Series {
        graph: String,
        #[arg(long = "max-label")]
        max_label: usize,
    },
    /// Lists graphs by edge or node count, as graph6 lines.
    Generate(GenerateArgs),
}

#[derive(Debug, Args)]
struct VectorArgs {
    /// Hosts given inline.
    graphs: Vec<String>,
    /// File of graph6 lines, "-" for stdin.
    #[arg(long)]
    input: Option<String>,
    /// Host node count (defaults to the largest host).
    #[arg(long)]
    n: Option<usize>,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false, id = "size")]
struct GenerateSize {
    #[arg(long, group = "size")]
    edges: Option<usize>,
    #[arg(long, group = "size")]
    nodes: Option<usize>,
}

#[derive(Debug, Args)]
struct GenerateArgs {
    #[command(flatten)]
    size: GenerateSize,
    /// Keep connected graphs only.
    #[arg(long)]
    connected: bool,
    /// Print the count series 0..=size as a JSON array instead.
    #[arg(long)]
    counts: bool,
}

/// A parsed graph argument with its nominal node count.
struct GraphArg {
    graph: CanonGraph,
    nodes: usize,
}

/// Edge lists (`1-2,2-3`) contain digits, graph6 strings never do.
fn parse_graph(text: &str) -> ugqsym::Result<GraphArg> {
    let text = text.trim();
    if text.bytes().any(|b| b.is_ascii_digit()) {
        let mut pairs = Vec::new();
        let mut offset = 0;
        for item in text.split(',') {
            let bad = || Error::parse(offset, format!("bad edge {item:?}"));
            let (i, j) = item.trim().split_once('-').ok_or_else(bad)?;
            let i: u32 = i.trim().parse().map_err(|_| bad())?;
            let j: u32 = j.trim().parse().map_err(|_| bad())?;
            if i == 0 || j == 0 || i == j {
                return Err(bad());
            }
            pairs.push((i, j));
            offset += item.len() + 1;
        }
        let graph = graph::canonical(&LabeledGraph::from_edges(pairs)?)?;
        let nodes = graph.node_count();
        Ok(GraphArg { graph, nodes })
    } else {
        let (graph, nodes) = decode_graph6(text)?;
        Ok(GraphArg { graph, nodes })
    }
}

fn read_graph_lines(source: &str, stdin: &str) -> Result<Vec<GraphArg>, Failure> {
    let text = if source == "-" {
        stdin.to_string()
    } else {
        fs::read_to_string(source)
            .map_err(|e| Failure::Usage(format!("cannot read {source}: {e}")))?
    };
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| parse_graph(l).map_err(Failure::from))
        .collect()
}

enum Failure {
    Lib(Error),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

fn plain_edges(g: &CanonGraph) -> String {
    g.edges().map(|(i, j)| format!("{i} {j}\n")).collect()
}

fn element_output(e: &HopfElement, as_json: bool) -> String {
    if as_json {
        format!("{}\n", e.to_json())
    } else {
        format!("{e}\n")
    }
}

fn pretty(v: Value) -> String {
    format!("{v}\n")
}

/// Runs one command line (`args[0]` is the program name) against the given
/// standard input.
pub fn run<I, T>(args: I, stdin: &str) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if code == EXIT_OK {
                Outcome {
                    stdout: text,
                    stderr: String::new(),
                    code,
                }
            } else {
                Outcome {
                    stdout: String::new(),
                    stderr: text,
                    code,
                }
            };
        }
    };
    match execute(&cli, stdin) {
        Ok(stdout) => Outcome {
            stdout,
            stderr: String::new(),
            code: EXIT_OK,
        },
        Err(Failure::Usage(msg)) => Outcome {
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
            code: EXIT_USAGE,
        },
        Err(Failure::Lib(e)) => {
            let code = match e {
                Error::Parse { .. } => EXIT_USAGE,
                Error::Domain(_) | Error::Capacity { .. } => EXIT_DOMAIN,
            };
            Outcome {
                stdout: String::new(),
                stderr: format!("error: {e}\n"),
                code,
            }
        }
    }
}

fn limits_of(cli: &Cli) -> Limits {
    let mut limits = Limits::default();
    if let Some(n) = cli.max_nodes {
        limits.max_nodes = n;
        limits.max_generated_nodes = n;
    }
    if let Some(m) = cli.max_edges {
        limits.max_edges = m;
    }
    limits
}

fn execute(cli: &Cli, stdin: &str) -> Result<String, Failure> {
    let limits = limits_of(cli);
    let algebra = Algebra::new(limits);
    let js = cli.json;
    let out = match &cli.command {
        Command::Canon => {
            let g = graph::canonical(&LabeledGraph::parse_edge_list(stdin)?)?;
            if js {
                pretty(json!(g))
            } else {
                plain_edges(&g)
            }
        }
        Command::Eval { pattern, host } => {
            let p = parse_graph(pattern)?.graph;
            let h = parse_graph(host)?.graph;
            let count = evaluate(&p, &h);
            if js {
                pretty(json!({ "pattern": p, "host": h, "count": count }))
            } else {
                format!("{count}\n")
            }
        }
        Command::Product { a, b } => {
            let a = basis(&parse_graph(a)?.graph);
            let b = basis(&parse_graph(b)?.graph);
            element_output(&algebra.multiply(&a, &b)?, js)
        }
        Command::Coproduct { graph } => {
            let t = coproduct(&basis(&parse_graph(graph)?.graph));
            if js {
                pretty(t.to_json())
            } else {
                format!("{t}\n")
            }
        }
        Command::Antipode { graph } => {
            let g = parse_graph(graph)?.graph;
            element_output(&algebra.antipode(&basis(&g))?, js)
        }
        Command::Binom { n } => element_output(&algebra.binomial_of_edge(*n)?, js),
        Command::Iso { a, b } => {
            let same = iso_test(&parse_graph(a)?.graph, &parse_graph(b)?.graph, &limits)?;
            if js {
                pretty(json!({ "isomorphic": same }))
            } else {
                format!("{same}\n")
            }
        }
        Command::Vector(args) => vector(args, stdin, &limits, js)?,
        Command::Deck { graph, n } => {
            let g = parse_graph(graph)?;
            let d = deck_on(&g.graph, n.unwrap_or(g.nodes))?;
            if js {
                pretty(json!(d))
            } else {
                let mut s = String::new();
                for card in &d.cards {
                    s.push_str(&encode_graph6(card, d.card_nodes())?);
                    s.push('\n');
                }
                s
            }
        }
        Command::Kelly { pattern, host, n } => {
            let p = parse_graph(pattern)?.graph;
            let h = parse_graph(host)?;
            let k = kelly_check_on(&p, &h.graph, n.unwrap_or(h.nodes))?;
            if js {
                pretty(json!(k))
            } else {
                let verdict = |b: bool| if b { "holds" } else { "fails" };
                format!(
                    "(n-r)*M_G(H) = {}\nsum M_G(H_i) = {}\nidentity {}\nprinted orientation: M_G(H) = {}, (n-r)*sum M_G(H_i) = {}, {}\n",
                    k.lhs,
                    k.rhs,
                    verdict(k.holds),
                    k.printed_lhs,
                    k.printed_rhs,
                    verdict(k.printed_holds)
                )
            }
        }
        Command::Matrix { max } => {
            let graphs = smallest_graphs(*max, &limits)?;
            let rows = subgraph_count_matrix(&graphs);
            if js {
                pretty(json!({ "graphs": graphs, "rows": rows }))
            } else {
                render_matrix(&rows)
            }
        }
        Command::Series { graph, max_label } => {
            let s = expand(&parse_graph(graph)?.graph, *max_label, &limits)?;
            if js {
                pretty(json!(s))
            } else {
                s.monomials.iter().map(|m| format!("{m}\n")).collect()
            }
        }
        Command::Generate(args) => generate(args, &limits, js)?,
    };
    Ok(out)
}

/// Rows of space-separated counts with "." for zero; only the lower
/// triangle is printed.
pub fn render_matrix(rows: &[Vec<u64>]) -> String {
    let mut out = String::new();
    for (r, row) in rows.iter().enumerate() {
        let cells: Vec<String> = row[..=r]
            .iter()
            .map(|&x| if x == 0 { ".".into() } else { x.to_string() })
            .collect();
        let _ = writeln!(out, "{}", cells.join(" "));
    }
    out
}

fn vector(args: &VectorArgs, stdin: &str, limits: &Limits, js: bool) -> Result<String, Failure> {
    let mut hosts: Vec<GraphArg> = args
        .graphs
        .iter()
        .map(|s| parse_graph(s))
        .collect::<Result<_, _>>()?;
    if let Some(src) = &args.input {
        hosts.extend(read_graph_lines(src, stdin)?);
    }
    if hosts.is_empty() {
        return Err(Failure::Usage("no hosts given".into()));
    }
    let n = args
        .n
        .unwrap_or_else(|| hosts.iter().map(|h| h.nodes).max().unwrap_or(2))
        .max(2);
    let family = separating_family(n, limits)?;
    let vectors = hosts
        .iter()
        .map(|h| invariant_vector_with(&h.graph, n, &family))
        .collect::<Result<Vec<_>, _>>()?;
    if js {
        Ok(pretty(json!(vectors)))
    } else {
        let graphs: Vec<CanonGraph> = hosts.into_iter().map(|h| h.graph).collect();
        Ok(vectors_to_csv(&graphs, &vectors))
    }
}

fn generate(args: &GenerateArgs, limits: &Limits, js: bool) -> Result<String, Failure> {
    if args.counts {
        let (all, connected) = match (args.size.edges, args.size.nodes) {
            (Some(m), _) if args.connected => {
                let mut series = vec![1u64];
                for k in 1..=m {
                    series.push(generate_connected_by_edges(k, limits)?.len() as u64);
                }
                return Ok(pretty(json!(series)));
            }
            (Some(m), _) => counts_by_edges(m, limits)?,
            (_, Some(n)) => counts_by_nodes(n, limits)?,
            _ => unreachable!("clap requires one size"),
        };
        let series = if args.connected { connected } else { all };
        return Ok(pretty(json!(series)));
    }
    let (graphs, nodes) = match (args.size.edges, args.size.nodes) {
        (Some(m), _) if args.connected => (generate_connected_by_edges(m, limits)?, None),
        (Some(m), _) => (generate_by_edges(m, limits)?, None),
        (_, Some(n)) => (generate_by_nodes(n, limits)?, Some(n)),
        _ => unreachable!("clap requires one size"),
    };
    let graphs = if args.connected {
        filter_connected(&graphs)
    } else {
        graphs
    };
    if js {
        return Ok(pretty(json!(graphs)));
    }
    let mut out = String::new();
    for g in &graphs {
        out.push_str(&encode_graph6(g, nodes.unwrap_or(g.node_count()))?);
        out.push('\n');
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn graph_arguments() {
        let k3 = parse_graph("Bw").unwrap();
        assert_eq!((k3.graph.edge_count(), k3.nodes), (3, 3));
        let p = parse_graph("2-3, 1-2").unwrap();
        assert_eq!(p.graph.to_string(), "[1-2,1-3]");
        assert!(matches!(
            parse_graph("1-2,x"),
            Err(Error::Parse { offset: 4, .. })
        ));
        assert!(matches!(parse_graph("1-1"), Err(Error::Parse { .. })));
    }

    #[test]
    fn matrix_rendering() {
        assert_eq!(render_matrix(&[vec![1, 0], vec![2, 1]]), "1\n2 1\n");
        assert_eq!(
            render_matrix(&[vec![1, 0, 0], vec![0, 1, 0], vec![3, 0, 1]]),
            "1\n. 1\n3 . 1\n"
        );
    }
}
