//! Argument parsing and dispatch for the `drg` binary.

use std::ffi::OsString;
use std::io::{Read, Write};

use clap::{Parser, Subcommand, ValueEnum};
use drg_core::{
    build_graph, family_array, parse_array_raw, spectrum_crosscheck, verify_drg, FamilySpec,
    GraphKind, IntersectionArray, Scheme, DEFAULT_MAX_VERTICES,
};
use serde::Serialize;

use crate::catalog_io::{builtin_records, parse_records, run_catalog, to_jsonl};
use crate::report::AnalysisReport;
use crate::suites::{self, SuiteSummary};

/// Environment variable capping the size of constructed graphs.
pub const MAX_VERTICES_VAR: &str = "DRG_MAX_VERTICES";

/// Exit status: everything requested holds.
pub const EXIT_OK: i32 = 0;
/// Exit status: an infeasible array, failed check or expectation mismatch.
pub const EXIT_FAIL: i32 = 1;
/// Exit status: unreadable input.
pub const EXIT_PARSE: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(
    name = "drg",
    version,
    about = "Exact analysis of distance-regular graph parameters"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Analyze an intersection array `b0,…,b(d-1);c1,…,cd`.
    Analyze {
        array: String,
        /// Fail unless the array has exactly this many Q-polynomial structures.
        #[arg(long)]
        expect_q: Option<usize>,
    },
    /// Generate and analyze a named family member.
    Family {
        #[command(subcommand)]
        family: FamilyArg,
        #[arg(long, global = true)]
        expect_q: Option<usize>,
    },
    /// Construct a graph, certify distance-regularity and check its spectrum.
    BuildGraph {
        #[command(subcommand)]
        kind: GraphArg,
        /// Print the edge list.
        #[arg(long, global = true)]
        edges: bool,
    },
    /// Run a verification suite.
    Verify {
        #[command(subcommand)]
        suite: SuiteArg,
    },
    /// Evaluate a JSON-lines catalog (`-` or no file reads standard input).
    Catalog {
        file: Option<String>,
        /// Use the built-in catalog instead of an input file.
        #[arg(long, conflicts_with = "file")]
        builtin: bool,
        /// Print the built-in catalog as JSON lines and exit.
        #[arg(long, conflicts_with_all = ["file", "builtin"])]
        dump_builtin: bool,
    },
}

#[derive(Debug, Clone, Copy, Subcommand)]
pub enum FamilyArg {
    /// Hamming cube H(d,2).
    Hamming { d: u32 },
    /// Halved n-cube.
    HalvedCube { n: u32 },
    /// Folded n-cube.
    FoldedCube { n: u32 },
    /// Dual polar graph 2A_(2d-1)(q).
    DualPolar { d: u32, q: u64 },
    /// Hadamard graph of order 2γ.
    Hadamard { gamma: u64 },
    /// The formally self-dual array with parameter μ.
    Selfdual { mu: u64 },
    /// Taylor array {k, k-a1-1, 1; 1, k-a1-1, k}.
    Taylor { k: u64, a1: u64 },
    /// The n-gon.
    Polygon { n: u32 },
    /// Johnson graph J(n,e).
    Johnson { n: u32, e: u32 },
}

impl From<FamilyArg> for FamilySpec {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::Hamming { d } => FamilySpec::Hamming { d },
            FamilyArg::HalvedCube { n } => FamilySpec::HalvedCube { n },
            FamilyArg::FoldedCube { n } => FamilySpec::FoldedCube { n },
            FamilyArg::DualPolar { d, q } => FamilySpec::DualPolar2A { d, q },
            FamilyArg::Hadamard { gamma } => FamilySpec::Hadamard { gamma },
            FamilyArg::Selfdual { mu } => FamilySpec::SelfDual { mu },
            FamilyArg::Taylor { k, a1 } => FamilySpec::Taylor { k, a1 },
            FamilyArg::Polygon { n } => FamilySpec::Polygon { n },
            FamilyArg::Johnson { n, e } => FamilySpec::Johnson { n, e },
        }
    }
}

#[derive(Debug, Clone, Copy, Subcommand)]
pub enum GraphArg {
    /// The d-cube.
    Hypercube { d: u32 },
    /// Halved n-cube.
    HalvedCube { n: u32 },
    /// Folded n-cube.
    FoldedCube { n: u32 },
    /// Hadamard graph of the Sylvester matrix of order 2^k.
    Hadamard { k: u32 },
    /// The n-cycle.
    Cycle { n: usize },
    /// Complement of K_(k+1) × K_2.
    TaylorComplement { k: usize },
}

impl From<GraphArg> for GraphKind {
    fn from(g: GraphArg) -> Self {
        match g {
            GraphArg::Hypercube { d } => GraphKind::Hypercube { d },
            GraphArg::HalvedCube { n } => GraphKind::HalvedCube { n },
            GraphArg::FoldedCube { n } => GraphKind::FoldedCube { n },
            GraphArg::Hadamard { k } => GraphKind::Hadamard { k },
            GraphArg::Cycle { n } => GraphKind::Cycle { n },
            GraphArg::TaylorComplement { k } => GraphKind::TaylorComplement { k },
        }
    }
}

/// Comma-separated integers and inclusive ranges, e.g. `2..5` or `1,2,4`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntList(pub Vec<u64>);

impl std::str::FromStr for IntList {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut out = Vec::new();
        for part in s.split(',').map(str::trim) {
            let num = |t: &str| {
                t.trim()
                    .parse::<u64>()
                    .map_err(|_| format!("invalid integer {t:?}"))
            };
            match part.split_once("..") {
                Some((lo, hi)) => {
                    let hi = hi.strip_prefix('=').unwrap_or(hi);
                    let (lo, hi) = (num(lo)?, num(hi)?);
                    if lo > hi {
                        return Err(format!("empty range {part:?}"));
                    }
                    out.extend(lo..=hi);
                }
                None => out.push(num(part)?),
            }
        }
        Ok(IntList(out))
    }
}

impl std::fmt::Display for IntList {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join(","))
    }
}

fn list(values: &[u64]) -> IntList {
    IntList(values.to_vec())
}

#[derive(Debug, Subcommand)]
pub enum SuiteArg {
    /// Q-structure counts of the listed twice Q-polynomial families.
    Thm3 {
        #[arg(long, default_value_t = 4)]
        d: u32,
        /// Prime powers for the dual polar graphs.
        #[arg(long, default_value_t = list(&[2, 3]))]
        q: IntList,
        /// Hadamard graph parameters (diameter 4 only).
        #[arg(long, default_value_t = list(&[2, 4]))]
        gamma: IntList,
    },
    /// The formally self-dual family refutation.
    Selfdual {
        #[arg(long, default_value_t = list(&[2, 3, 4, 5]))]
        mu: IntList,
    },
    /// Core tight twice Q-polynomial identities.
    Identities {
        #[arg(long, default_value_t = list(&[2, 3, 4, 5, 6, 7, 8, 9, 10]))]
        theta2: IntList,
        #[arg(long, default_value_t = list(&[2, 3, 4, 5]))]
        mu: IntList,
    },
    /// Graph constructions certified against the exact spectrum.
    Oracle {
        #[arg(long, default_value_t = 5)]
        max_d: u32,
    },
    /// Q-structure counts of polygons.
    Ngon {
        #[arg(long, default_value_t = list(&[4, 5, 6, 7, 8]))]
        n: IntList,
    },
}

/// Reads the vertex cap from the environment.
pub fn max_vertices() -> Result<usize, String> {
    match std::env::var(MAX_VERTICES_VAR) {
        Err(std::env::VarError::NotPresent) => Ok(DEFAULT_MAX_VERTICES),
        Err(e) => Err(format!("{MAX_VERTICES_VAR}: {e}")),
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| format!("{MAX_VERTICES_VAR}={v:?} is not a non-negative integer")),
    }
}

#[derive(Debug, Serialize)]
struct GraphOutput {
    provenance: String,
    vertices: usize,
    edges: usize,
    distance_regular: bool,
    array: Option<String>,
    failure: Option<String>,
    annihilates: Option<bool>,
    traces_match: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    edge_list: Option<String>,
}

struct Io<'a> {
    format: Format,
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

impl Io<'_> {
    fn error(&mut self, msg: impl std::fmt::Display) {
        let _ = writeln!(self.err, "drg: {msg}");
    }
}

fn analyze(io: &mut Io, arr: &IntersectionArray, expect_q: Option<usize>) -> i32 {
    let report = AnalysisReport::analyze(arr);
    let _ = match io.format {
        Format::Json => writeln!(io.out, "{}", report.to_json()),
        Format::Text => write!(io.out, "{}", report.render_text()),
    };
    let mut code = if report.feasible { EXIT_OK } else { EXIT_FAIL };
    if let Some(want) = expect_q {
        if report.q_structure_count() != want {
            io.error(format!(
                "expected {want} Q-polynomial structures, found {}",
                report.q_structure_count()
            ));
            code = EXIT_FAIL;
        }
    }
    code
}

fn build(io: &mut Io, kind: GraphKind, edges: bool) -> i32 {
    let cap = match max_vertices() {
        Ok(c) => c,
        Err(e) => {
            io.error(e);
            return EXIT_PARSE;
        }
    };
    let g = match build_graph(&kind, cap) {
        Ok(g) => g,
        Err(e) => {
            io.error(e);
            return EXIT_FAIL;
        }
    };
    let mut out = GraphOutput {
        provenance: g.provenance.clone(),
        vertices: g.vertex_count(),
        edges: g.edges().count(),
        distance_regular: false,
        array: None,
        failure: None,
        annihilates: None,
        traces_match: None,
        edge_list: edges.then(|| g.edge_list()),
    };
    match verify_drg(&g) {
        Err(e) => out.failure = Some(format!("{e:?}")),
        Ok(arr) => {
            out.distance_regular = true;
            out.array = Some(arr.to_string());
            match Scheme::new(&arr) {
                Ok(s) => {
                    let check = spectrum_crosscheck(&g, &s.spectrum);
                    out.annihilates = Some(check.annihilates);
                    out.traces_match = Some(
                        !check.overflow
                            && check.traces.iter().all(|(_, t, e)| e.as_ref() == Some(t)),
                    );
                }
                Err(e) => out.failure = Some(e.to_string()),
            }
        }
    }
    let passed =
        out.distance_regular && out.annihilates == Some(true) && out.traces_match == Some(true);
    let _ = match io.format {
        Format::Json => writeln!(
            io.out,
            "{}",
            serde_json::to_string_pretty(&out).expect("serializes")
        ),
        Format::Text => {
            let mut s = format!(
                "{}: {} vertices, {} edges\n",
                out.provenance, out.vertices, out.edges
            );
            match &out.array {
                Some(a) => s += &format!("distance-regular with array {{{a}}}\n"),
                None => s += "not distance-regular\n",
            }
            if let Some(f) = &out.failure {
                s += &format!("failure: {f}\n");
            }
            if let (Some(a), Some(t)) = (out.annihilates, out.traces_match) {
                s += &format!("minimal polynomial annihilates A: {a}\ntrace moments match: {t}\n");
            }
            if let Some(e) = &out.edge_list {
                s += e;
                if !e.ends_with('\n') {
                    s.push('\n');
                }
            }
            write!(io.out, "{s}")
        }
    };
    if passed {
        EXIT_OK
    } else {
        EXIT_FAIL
    }
}

fn verify(io: &mut Io, suite: SuiteArg) -> i32 {
    let summary: SuiteSummary = match suite {
        SuiteArg::Thm3 { d, q, gamma } => suites::thm3(d, &q.0, &gamma.0),
        SuiteArg::Selfdual { mu } => suites::selfdual(&mu.0),
        SuiteArg::Identities { theta2, mu } => suites::identities(&theta2.0, &mu.0),
        SuiteArg::Oracle { max_d } => match max_vertices() {
            Ok(cap) => suites::oracle(max_d, cap),
            Err(e) => {
                io.error(e);
                return EXIT_PARSE;
            }
        },
        SuiteArg::Ngon { n } => match n
            .0
            .iter()
            .map(|&v| u32::try_from(v))
            .collect::<Result<Vec<_>, _>>()
        {
            Ok(ns) => suites::ngon(&ns),
            Err(e) => {
                io.error(e);
                return EXIT_PARSE;
            }
        },
    };
    let _ = match io.format {
        Format::Json => writeln!(
            io.out,
            "{}",
            serde_json::to_string_pretty(&summary).expect("serializes")
        ),
        Format::Text => write!(io.out, "{}", summary.render_text()),
    };
    if summary.passed {
        EXIT_OK
    } else {
        EXIT_FAIL
    }
}

fn catalog(
    io: &mut Io,
    input: &mut dyn Read,
    file: Option<String>,
    builtin: bool,
    dump: bool,
) -> i32 {
    if dump {
        let _ = write!(io.out, "{}", to_jsonl(&builtin_records()));
        return EXIT_OK;
    }
    let text = if builtin {
        to_jsonl(&builtin_records())
    } else {
        let mut text = String::new();
        let read = match file.as_deref() {
            None | Some("-") => input.read_to_string(&mut text).map(|_| ()),
            Some(path) => std::fs::read_to_string(path).map(|t| text = t),
        };
        if let Err(e) = read {
            io.error(e);
            return EXIT_PARSE;
        }
        text
    };
    let records = match parse_records(&text) {
        Ok(r) => r,
        Err(e) => {
            io.error(e);
            return EXIT_PARSE;
        }
    };
    let results = run_catalog(&records);
    let _ = match io.format {
        Format::Json => write!(io.out, "{}", to_jsonl(&results)),
        Format::Text => {
            let mut s = String::new();
            for r in &results {
                let q = r.q_structures.map_or("-".to_string(), |q| q.to_string());
                s += &format!(
                    "{} {} {{{}}}: feasible {}, Q-structures {q}",
                    if r.passed { "PASS" } else { "FAIL" },
                    r.name,
                    r.array,
                    r.feasible
                );
                for m in r.mismatches.iter().chain(&r.property_failures) {
                    s += &format!("; {m}");
                }
                s.push('\n');
            }
            let failed = results.iter().filter(|r| !r.passed).count();
            s += &format!("{} entries, {failed} failures\n", results.len());
            write!(io.out, "{s}")
        }
    };
    if results.iter().all(|r| r.passed) {
        EXIT_OK
    } else {
        EXIT_FAIL
    }
}

/// Parses `args` (including the program name) and runs the command,
/// returning the process exit status.
pub fn run<I, T>(args: I, input: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let informational = !e.use_stderr();
            let _ = if informational {
                write!(out, "{e}")
            } else {
                write!(err, "{e}")
            };
            return if informational { EXIT_OK } else { EXIT_PARSE };
        }
    };
    let mut io = Io {
        format: cli.format,
        out,
        err,
    };
    match cli.command {
        Command::Analyze { array, expect_q } => match parse_array_raw(&array) {
            Ok(arr) => analyze(&mut io, &arr, expect_q),
            Err(e) => {
                io.error(format!("cannot parse {array:?}: {e}"));
                EXIT_PARSE
            }
        },
        Command::Family { family, expect_q } => match family_array(&family.into()) {
            Ok(arr) => analyze(&mut io, &arr, expect_q),
            Err(e) => {
                io.error(e);
                EXIT_PARSE
            }
        },
        Command::BuildGraph { kind, edges } => build(&mut io, kind.into(), edges),
        Command::Verify { suite } => verify(&mut io, suite),
        Command::Catalog {
            file,
            builtin,
            dump_builtin,
        } => catalog(&mut io, input, file, builtin, dump_builtin),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str], stdin: &str) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let code = run(
            std::iter::once("drg").chain(args.iter().copied()),
            &mut stdin.as_bytes(),
            &mut out,
            &mut err,
        );
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn analyze_exit_codes() {
        assert_eq!(run_args(&["analyze", "4,3,2,1;1,2,3,4"], "").0, EXIT_OK);
        assert_eq!(
            run_args(&["analyze", "4,3,2,1;1,2,3,4", "--expect-q", "1"], "").0,
            EXIT_FAIL
        );
        assert_eq!(run_args(&["analyze", "3,2;1,2"], "").0, EXIT_FAIL);
        assert_eq!(run_args(&["analyze", "3,2,x;1"], "").0, EXIT_PARSE);
        assert_eq!(run_args(&["analyze"], "").0, EXIT_PARSE);
    }

    #[test]
    fn family_and_suite_dispatch() {
        let (code, out, _) = run_args(&["family", "selfdual", "2", "--expect-q", "2"], "");
        assert_eq!(code, EXIT_OK, "{out}");
        assert!(out.contains("10,5,4,2"));
        let (code, out, _) = run_args(&["--format", "json", "verify", "ngon", "--n", "5,7"], "");
        assert_eq!(code, EXIT_OK);
        let s: SuiteSummary = serde_json::from_str(&out).unwrap();
        assert_eq!(s.cases.len(), 2);
        let (code, out, _) = run_args(
            &["--format", "json", "verify", "selfdual", "--mu", "2..3"],
            "",
        );
        assert_eq!(code, EXIT_OK);
        let s: SuiteSummary = serde_json::from_str(&out).unwrap();
        assert_eq!(s.cases.len(), 2);
    }

    #[test]
    fn integer_lists_and_ranges() {
        assert_eq!("2..5".parse::<IntList>().unwrap().0, [2, 3, 4, 5]);
        assert_eq!("1,2,4".parse::<IntList>().unwrap().0, [1, 2, 4]);
        assert_eq!("1, 3..=4".parse::<IntList>().unwrap().0, [1, 3, 4]);
        assert!("5..2".parse::<IntList>().is_err());
        assert!("x".parse::<IntList>().is_err());
        assert_eq!(list(&[2, 3]).to_string(), "2,3");
    }

    #[test]
    fn contract_examples() {
        assert_eq!(
            run_args(&["analyze", "4,3,2,1;1,2,3,4", "--expect-q", "2"], "").0,
            EXIT_OK
        );
        assert_eq!(
            run_args(&["analyze", "16,9,4,1;1,4,9,16", "--expect-q", "2"], "").0,
            EXIT_FAIL
        );
        assert_eq!(run_args(&["analyze", "3,2;1,4"], "").0, EXIT_FAIL);
        assert_eq!(
            run_args(
                &["verify", "thm3", "--d", "4", "--q", "2,3", "--gamma", "1,2,4"],
                ""
            )
            .0,
            EXIT_OK
        );
        assert_eq!(
            run_args(&["verify", "selfdual", "--mu", "2..5"], "").0,
            EXIT_OK
        );
    }

    #[test]
    fn catalog_from_stdin() {
        let (code, out, _) = run_args(
            &["catalog", "--format", "json"],
            "{\"name\":\"K4\",\"array\":\"3;1\",\"expect\":{\"q_structures\":1}}\n",
        );
        assert_eq!(code, EXIT_OK, "{out}");
        assert_eq!(out.lines().count(), 1);
        assert_eq!(run_args(&["catalog"], "not json\n").0, EXIT_PARSE);
    }
}
