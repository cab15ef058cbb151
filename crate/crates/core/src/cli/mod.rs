//! The `sesqui` command line.
//!
//! Every subcommand reads JSON (from a file argument or standard input),
//! writes one JSON document to standard output and maps its verdict onto the
//! exit status: 0 for pass or found, 1 for fail, exhausted or an unmet
//! precondition, 2 for usage errors and malformed input.

pub mod certificate;

use crate::acceptance::{self, Config};
use crate::error::Error;
use crate::graphs::{
    classify_regularity, complete_multipartite, cycle_complement, disjoint_cycles, hypercube, parse_edge_list, Figure,
    Graph,
};
use crate::hoffman::{verify_reduced_representation, HoffmanGraph, ReducedRepresentation};
use crate::lattice::{detect_mates, find_norm3_representation, sts_from_representation, verify_integrable};
use crate::lattice::{IntegralRepresentation, SearchStatus};
use crate::spectra::{spectrum, EXTERNAL_TOLERANCE};
use crate::steiner::{block_graph, construct_sts, sts_srg_params, verify_sts, TripleSystem};
use certificate::{Certificate, Claim};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};
use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

/// Default node budget for `rep find`.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

#[derive(Parser, Debug)]
#[command(name = "sesqui", version, about = "Sesqui-regular graphs, norm-3 representations and Hoffman graphs")]
struct Cli {
    /// Seed for every random choice.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Node budget for the representation search.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    budget: u64,
    /// Tolerance for floating-point verdicts and for rounding reported eigenvalues.
    #[arg(long, global = true, default_value_t = EXTERNAL_TOLERANCE)]
    tolerance: f64,
    /// Directory receiving certificates, keyed by the subject's SHA-256.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Leave the timestamp out of certificates.
    #[arg(long, global = true)]
    no_timestamp: bool,
    /// Output format for commands that emit a graph.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Dot,
    Edges,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a graph from one of the named families.
    Construct {
        #[command(subcommand)]
        family: Family,
    },
    /// Print a drawn example graph (fig3 is a Hoffman graph).
    Gallery { name: String },
    /// Regularity report: regular, sesqui-regular, strongly regular.
    Classify { input: Option<PathBuf> },
    /// Ascending adjacency eigenvalues.
    Spectrum { input: Option<PathBuf> },
    /// Steiner triple systems.
    Sts {
        #[command(subcommand)]
        op: StsOp,
    },
    /// Integral representations.
    Rep {
        #[command(subcommand)]
        op: RepOp,
    },
    /// Hoffman graphs.
    Hoffman {
        #[command(subcommand)]
        op: HoffmanOp,
    },
    /// Run the acceptance criteria.
    Accept {
        /// Criterion id, tag or name fragment.
        #[arg(long)]
        filter: Option<String>,
        /// STS JSON replacing the constructed system of the same order.
        #[arg(long)]
        sts_fixture: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
enum Family {
    /// `parts` independent sets of `size` vertices, all cross pairs adjacent.
    Multipartite { parts: usize, size: usize },
    /// Complement of disjoint cycles, lengths given as `4,4`.
    CycleComplement { lengths: String },
    /// The `d`-dimensional hypercube.
    Cube { d: u32 },
    /// Disjoint cycles, lengths given as `3,5`.
    Cycles { lengths: String },
}

#[derive(Subcommand, Debug)]
enum StsOp {
    /// A Steiner triple system on `v` points.
    Construct { v: usize },
    /// Check that every pair lies in exactly one block.
    Verify { input: Option<PathBuf> },
    /// The graph on blocks meeting in exactly one point.
    Blockgraph { input: Option<PathBuf> },
    /// Strongly regular parameters of the block graph.
    Params { v: usize },
}

#[derive(Subcommand, Debug)]
enum RepOp {
    /// Check a representation (or a search outcome) against a graph.
    Verify {
        #[arg(long)]
        graph: PathBuf,
        input: Option<PathBuf>,
        #[arg(long, default_value_t = 1)]
        scale: u32,
    },
    /// Search for a norm-3 representation with `s = 1`.
    Find { input: Option<PathBuf> },
    /// Vertices whose vectors share a support.
    Mates { input: Option<PathBuf> },
    /// Recover the Steiner triple system behind a mate-free representation.
    ReconstructSts {
        #[arg(long)]
        graph: PathBuf,
        input: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
enum HoffmanOp {
    SpecialMatrix {
        input: Option<PathBuf>,
    },
    SpecialGraph {
        input: Option<PathBuf>,
    },
    /// Smallest eigenvalue of the special matrix.
    Eigen {
        input: Option<PathBuf>,
    },
    Decompose {
        input: Option<PathBuf>,
    },
    /// Check a reduced representation; `--t` overrides the stored norm.
    VerifyReduced {
        #[arg(long)]
        graph: PathBuf,
        input: Option<PathBuf>,
        #[arg(long, allow_hyphen_values = true)]
        t: Option<i64>,
    },
}

/// Failure classes with their exit status.
#[derive(Debug)]
enum Failure {
    /// Unreadable or unparsable input, or an invalid argument value (exit 2).
    Input(String),
    /// A well-formed request whose preconditions do not hold (exit 1).
    Rejected(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_)
            | Error::Json(_)
            | Error::Io(_)
            | Error::InvalidParameter(_)
            | Error::Inadmissible(_)
            | Error::CycleTooShort(_)
            | Error::EmptyGraph
            | Error::UnknownFixture(_)
            | Error::InvalidBudget => Failure::Input(e.to_string()),
            other => Failure::Rejected(other.to_string()),
        }
    }
}

type Run<T> = std::result::Result<T, Failure>;

/// A command's result before it reaches the streams.
struct Report {
    body: String,
    exit: i32,
    /// Subject bytes and claims, written when `--out` is set.
    certificate: Option<(Vec<u8>, Vec<Claim>)>,
}

impl Report {
    fn json<T: Serialize>(value: &T, exit: i32) -> Self {
        Report { body: to_json(value), exit, certificate: None }
    }

    fn certify(mut self, subject: Vec<u8>, claims: Vec<Claim>) -> Self {
        self.certificate = Some((subject, claims));
        self
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("library types serialize")
}

fn claim(
    property: &str,
    module: &str,
    operation: &str,
    verdict: Value,
    parameters: Value,
    tolerance: Option<f64>,
) -> Claim {
    Claim {
        property: property.into(),
        module: module.into(),
        operation: operation.into(),
        verdict,
        parameters,
        tolerance,
    }
}

/// Entry point used by the binary; reads standard input and writes to the
/// standard streams.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let stdin = std::io::stdin();
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run(args, &mut stdin.lock(), &mut stdout.lock(), &mut stderr.lock())
}

/// Parses `args` (including the program name) and runs the command against
/// the given streams, returning the exit status.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                let _ = write!(stderr, "{e}");
                2
            } else {
                let _ = write!(stdout, "{e}");
                0
            };
            return code;
        }
    };
    let mut ctx = Context { cli: &cli, stdin, stderr };
    match ctx.dispatch() {
        Ok(report) => {
            let _ = writeln!(stdout, "{}", report.body);
            if let (Some(dir), Some((subject, claims))) = (&cli.out, report.certificate) {
                let cert = Certificate::new(&subject, claims, !cli.no_timestamp);
                if let Err(e) = certificate::persist(dir, command_name(&cli.command), &subject, &cert) {
                    let _ = writeln!(ctx.stderr, "error: cannot write certificate: {e}");
                    return 2;
                }
            }
            report.exit
        }
        Err(Failure::Input(msg)) => {
            let _ = writeln!(ctx.stderr, "error: {msg}");
            2
        }
        Err(Failure::Rejected(msg)) => {
            let _ = writeln!(ctx.stderr, "error: {msg}");
            1
        }
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Construct { .. } => "construct",
        Command::Gallery { .. } => "gallery",
        Command::Classify { .. } => "classify",
        Command::Spectrum { .. } => "spectrum",
        Command::Sts { op } => match op {
            StsOp::Construct { .. } => "sts-construct",
            StsOp::Verify { .. } => "sts-verify",
            StsOp::Blockgraph { .. } => "sts-blockgraph",
            StsOp::Params { .. } => "sts-params",
        },
        Command::Rep { op } => match op {
            RepOp::Verify { .. } => "rep-verify",
            RepOp::Find { .. } => "rep-find",
            RepOp::Mates { .. } => "rep-mates",
            RepOp::ReconstructSts { .. } => "rep-reconstruct-sts",
        },
        Command::Hoffman { op } => match op {
            HoffmanOp::SpecialMatrix { .. } => "hoffman-special-matrix",
            HoffmanOp::SpecialGraph { .. } => "hoffman-special-graph",
            HoffmanOp::Eigen { .. } => "hoffman-eigen",
            HoffmanOp::Decompose { .. } => "hoffman-decompose",
            HoffmanOp::VerifyReduced { .. } => "hoffman-verify-reduced",
        },
        Command::Accept { .. } => "accept",
    }
}

struct Context<'a> {
    cli: &'a Cli,
    stdin: &'a mut dyn Read,
    stderr: &'a mut dyn Write,
}

impl Context<'_> {
    /// File contents, or standard input when `path` is absent or `-`.
    fn read(&mut self, path: Option<&Path>) -> Run<String> {
        match path {
            Some(p) if p != Path::new("-") => {
                std::fs::read_to_string(p).map_err(|e| Failure::Input(format!("cannot read {}: {e}", p.display())))
            }
            _ => {
                let mut text = String::new();
                self.stdin
                    .read_to_string(&mut text)
                    .map_err(|e| Failure::Input(format!("cannot read standard input: {e}")))?;
                Ok(text)
            }
        }
    }

    /// A graph as JSON or, when the text is not a JSON object, as an edge list.
    fn graph(&mut self, path: Option<&Path>) -> Run<Graph> {
        let text = self.read(path)?;
        if text.trim_start().starts_with('{') {
            parse_json(&text, "graph")
        } else {
            Ok(parse_edge_list(&text)?)
        }
    }

    /// A Hoffman graph; a plain graph is read as one without fat vertices.
    fn hoffman(&mut self, path: Option<&Path>) -> Run<HoffmanGraph> {
        let text = self.read(path)?;
        let value: Value = parse_json(&text, "Hoffman graph")?;
        if value.get("n_slim").is_some() {
            from_value(value, "Hoffman graph")
        } else {
            Ok(HoffmanGraph::from_graph(&from_value::<Graph>(value, "graph")?))
        }
    }

    fn sts(&mut self, path: Option<&Path>) -> Run<TripleSystem> {
        let text = self.read(path)?;
        parse_json(&text, "triple system")
    }

    /// A representation, or the `representation` field of a search outcome.
    fn representation(&mut self, path: Option<&Path>) -> Run<IntegralRepresentation> {
        let text = self.read(path)?;
        let value: Value = parse_json(&text, "representation")?;
        match value.get("status") {
            Some(status) => match value.get("representation") {
                Some(r) if !r.is_null() => from_value(r.clone(), "representation"),
                _ => Err(Failure::Rejected(format!("search outcome {status} carries no representation"))),
            },
            None => from_value(value, "representation"),
        }
    }

    fn dispatch(&mut self) -> Run<Report> {
        let cli = self.cli;
        match &cli.command {
            Command::Construct { family } => {
                let g = match family {
                    Family::Multipartite { parts, size } => complete_multipartite(*parts, *size)?,
                    Family::CycleComplement { lengths } => cycle_complement(&parse_lengths(lengths)?)?,
                    Family::Cube { d } => hypercube(*d)?,
                    Family::Cycles { lengths } => disjoint_cycles(&parse_lengths(lengths)?)?,
                };
                Ok(self.emit_graph(&g))
            }
            Command::Gallery { name } => {
                if name == "fig3" {
                    let h = HoffmanGraph::figure3();
                    return Ok(match cli.format {
                        Format::Json => Report::json(&h, 0),
                        _ => self.emit_graph(h.graph()),
                    });
                }
                let figure: Figure = name.parse().map_err(|e: Error| Failure::Input(e.to_string()))?;
                Ok(self.emit_graph(&figure.graph()))
            }
            Command::Classify { input } => {
                let g = self.graph(input.as_deref())?;
                let report = classify_regularity(&g);
                let claims = vec![
                    claim("sesqui_regular", "graphs", "classify_regularity", json!(report.sesqui), json!({}), None),
                    claim("strongly_regular", "graphs", "classify_regularity", json!(report.srg), json!({}), None),
                ];
                Ok(Report::json(&report, 0).certify(to_json(&g).into_bytes(), claims))
            }
            Command::Spectrum { input } => {
                let g = self.graph(input.as_deref())?;
                let eigenvalues: Vec<f64> = spectrum(&g).into_iter().map(|x| snap(x, cli.tolerance)).collect();
                let lambda_min = eigenvalues[0];
                let claims = vec![claim(
                    "smallest_eigenvalue",
                    "spectra",
                    "spectrum",
                    json!(lambda_min),
                    json!({}),
                    Some(cli.tolerance),
                )];
                Ok(Report::json(&json!({ "eigenvalues": eigenvalues, "lambda_min": lambda_min }), 0)
                    .certify(to_json(&g).into_bytes(), claims))
            }
            Command::Sts { op } => self.sts_command(op),
            Command::Rep { op } => self.rep_command(op),
            Command::Hoffman { op } => self.hoffman_command(op),
            Command::Accept { filter, sts_fixture } => {
                let sts_override = match sts_fixture {
                    Some(p) => Some(self.sts(Some(p))?),
                    None => None,
                };
                let config = Config { seed: cli.seed, sts_override };
                let results = acceptance::run(&config, filter.as_deref());
                for r in &results {
                    let _ = writeln!(self.stderr, "{}", r.line());
                }
                let passed = results.iter().all(|r| r.passed);
                let claims = results
                    .iter()
                    .map(|r| {
                        claim(
                            r.name,
                            "acceptance",
                            "run",
                            json!(r.passed),
                            json!({ "id": r.id, "seed": cli.seed }),
                            None,
                        )
                    })
                    .collect();
                let subject = to_json(&json!({ "filter": filter, "seed": cli.seed, "fixture": config.sts_override }));
                Ok(Report::json(&results, if passed { 0 } else { 1 }).certify(subject.into_bytes(), claims))
            }
        }
    }

    fn emit_graph(&self, g: &Graph) -> Report {
        let body = match self.cli.format {
            Format::Json => to_json(g),
            Format::Dot => g.to_dot().trim_end().to_string(),
            Format::Edges => g.to_edge_list().trim_end().to_string(),
        };
        Report { body, exit: 0, certificate: None }
    }

    fn sts_command(&mut self, op: &StsOp) -> Run<Report> {
        match op {
            StsOp::Construct { v } => Ok(Report::json(&construct_sts(*v)?, 0)),
            StsOp::Verify { input } => {
                let t = self.sts(input.as_deref())?;
                let report = verify_sts(&t);
                let claims = vec![claim("steiner", "steiner", "verify_sts", json!(report.pass), json!({}), None)];
                Ok(Report::json(&report, exit_for(report.pass)).certify(to_json(&t).into_bytes(), claims))
            }
            StsOp::Blockgraph { input } => {
                let t = self.sts(input.as_deref())?;
                let g = block_graph(&t)?;
                Ok(self.emit_graph(&g))
            }
            StsOp::Params { v } => Ok(Report::json(&sts_srg_params(*v)?, 0)),
        }
    }

    fn rep_command(&mut self, op: &RepOp) -> Run<Report> {
        let cli = self.cli;
        match op {
            RepOp::Verify { graph, input, scale } => {
                let g = self.graph(Some(graph))?;
                let r = self.representation(input.as_deref())?;
                let report = verify_integrable(&g, &r, *scale)?;
                let claims = vec![claim(
                    "integrable",
                    "lattice",
                    "verify_integrable",
                    json!(report.pass),
                    json!({ "s": scale, "norm": r.target_norm() }),
                    None,
                )];
                let subject = to_json(&json!({ "graph": g, "representation": r }));
                Ok(Report::json(&report, exit_for(report.pass)).certify(subject.into_bytes(), claims))
            }
            RepOp::Find { input } => {
                let g = self.graph(input.as_deref())?;
                let outcome = find_norm3_representation(&g, cli.budget)?;
                let found = outcome.status == SearchStatus::Found;
                let claims = vec![claim(
                    "norm3_representation",
                    "lattice",
                    "find_norm3_representation",
                    json!(outcome.status),
                    json!({ "budget": cli.budget, "representation": outcome.representation }),
                    None,
                )];
                Ok(Report::json(&outcome, exit_for(found)).certify(to_json(&g).into_bytes(), claims))
            }
            RepOp::Mates { input } => {
                let r = self.representation(input.as_deref())?;
                Ok(Report::json(&detect_mates(&r)?, 0))
            }
            RepOp::ReconstructSts { graph, input } => {
                let g = self.graph(Some(graph))?;
                let r = self.representation(input.as_deref())?;
                Ok(Report::json(&sts_from_representation(&g, &r)?, 0))
            }
        }
    }

    fn hoffman_command(&mut self, op: &HoffmanOp) -> Run<Report> {
        let cli = self.cli;
        match op {
            HoffmanOp::SpecialMatrix { input } => {
                Ok(Report::json(&self.hoffman(input.as_deref())?.special_matrix().rows(), 0))
            }
            HoffmanOp::SpecialGraph { input } => Ok(Report::json(&self.hoffman(input.as_deref())?.special_graph(), 0)),
            HoffmanOp::Eigen { input } => {
                let h = self.hoffman(input.as_deref())?;
                let lambda_min = snap(h.smallest_eigenvalue(), cli.tolerance);
                let claims = vec![claim(
                    "smallest_eigenvalue",
                    "hoffman",
                    "smallest_eigenvalue",
                    json!(lambda_min),
                    json!({}),
                    Some(cli.tolerance),
                )];
                Ok(Report::json(&json!({ "lambda_min": lambda_min }), 0).certify(to_json(&h).into_bytes(), claims))
            }
            HoffmanOp::Decompose { input } => {
                let h = self.hoffman(input.as_deref())?;
                let factors = h.decompose();
                let indecomposable = factors.len() == 1;
                let claims =
                    vec![claim("indecomposable", "hoffman", "decompose", json!(indecomposable), json!({}), None)];
                Ok(Report::json(&json!({ "indecomposable": indecomposable, "factors": factors }), 0)
                    .certify(to_json(&h).into_bytes(), claims))
            }
            HoffmanOp::VerifyReduced { graph, input, t } => {
                let h = self.hoffman(Some(graph))?;
                let text = self.read(input.as_deref())?;
                let psi: ReducedRepresentation = parse_json(&text, "reduced representation")?;
                let t = t.unwrap_or(psi.t());
                let report = verify_reduced_representation(&h, &psi, t)?;
                let claims = vec![claim(
                    "reduced_representation",
                    "hoffman",
                    "verify_reduced_representation",
                    json!(report.pass),
                    json!({ "t": t }),
                    None,
                )];
                let subject = to_json(&json!({ "hoffman": h, "representation": psi }));
                Ok(Report::json(&report, exit_for(report.pass)).certify(subject.into_bytes(), claims))
            }
        }
    }
}

fn exit_for(pass: bool) -> i32 {
    if pass {
        0
    } else {
        1
    }
}

/// Reports an eigenvalue within `tolerance` of an integer as that integer.
fn snap(x: f64, tolerance: f64) -> f64 {
    let r = x.round();
    if (x - r).abs() <= tolerance {
        r + 0.0
    } else {
        x
    }
}

fn parse_lengths(s: &str) -> Run<Vec<usize>> {
    s.split(',')
        .map(|p| p.trim().parse::<usize>().map_err(|_| Failure::Input(format!("invalid cycle length `{p}` in `{s}`"))))
        .collect()
}

fn parse_json<T: serde::de::DeserializeOwned>(text: &str, what: &str) -> Run<T> {
    serde_json::from_str(text).map_err(|e| Failure::Input(format!("malformed {what}: {e}")))
}

fn from_value<T: serde::de::DeserializeOwned>(value: Value, what: &str) -> Run<T> {
    serde_json::from_value(value).map_err(|e| Failure::Input(format!("malformed {what}: {e}")))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str], stdin: &str) -> (i32, String, String) {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let argv = std::iter::once("sesqui").chain(args.iter().copied());
        let code = run(argv, &mut stdin.as_bytes(), &mut out, &mut err);
        (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
    }

    #[test]
    fn snapping() {
        assert_eq!(snap(-4.000000000001, 1e-8), -4.0);
        assert_eq!(snap(-0.0000000001, 1e-8).to_string(), "0");
        assert_eq!(snap(-2.5, 1e-8), -2.5);
    }

    #[test]
    fn lengths() {
        assert_eq!(parse_lengths("4,4").unwrap(), vec![4, 4]);
        assert!(parse_lengths("4,x").is_err());
    }

    #[test]
    fn eigen_of_figure3() {
        let (_, fig3, _) = call(&["gallery", "fig3"], "");
        let (code, out, _) = call(&["hoffman", "eigen"], &fig3);
        assert_eq!(code, 0);
        assert_eq!(out.trim(), r#"{"lambda_min":-4.0}"#);
    }

    #[test]
    fn malformed_input_is_usage_error() {
        let (code, out, err) = call(&["classify"], "{\"n\": 2, \"edges\": [[0, 5]]}");
        assert_eq!(code, 2);
        assert!(out.is_empty());
        assert!(err.contains("malformed graph"), "{err}");
        assert_eq!(call(&["frobnicate"], "").0, 2);
    }

    #[test]
    fn exit_classes() {
        assert_eq!(call(&["construct", "multipartite", "0", "3"], "").0, 2);
        assert_eq!(call(&["sts", "construct", "8"], "").0, 2);
        let (code, _, err) = call(&["rep", "find"], r#"{"n":2,"edges":[]}"#);
        assert_eq!(code, 1, "{err}");
    }
}
