//! Command-line front end. [`run`] does no I/O itself so it can be tested
//! directly; `main` prints the outcome and exits with its status.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::time::Instant;

use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::graph_words::{CommutationGraph, Word, MAX_VERTICES};
use crate::p6::{GeneratorSource, P6Catalog, P6Generator};
use crate::q_subgroup::{GeneratorKind, QCatalog};
use crate::twin_braids::{is_pure, permutation_of, shuffle_word, ShuffleTriple};
use crate::verify::{self, literal_pair_form_report, CheckResult};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "planar-braids",
    version,
    about = "Planar braid groups and the pure twin group on six strands"
)]
struct Cli {
    /// Seed for randomized suites.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Machine-readable output.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Normal form of a word in the twin group on n strands.
    Nf { n: usize, word: String },
    /// Permutation of a word and whether it is pure.
    Perm { n: usize, word: String },
    /// Shuffle braid for a triple such as 136.
    Shuffle { triple: String },
    /// Decompose a pure six-strand word into F71 * (Z^2)^{*20}.
    Decompose {
        word: Option<String>,
        /// Also print the braid word rebuilt from the normal form.
        #[arg(long)]
        realize: bool,
        /// Dump the generator catalog.
        #[arg(long)]
        catalog: bool,
    },
    /// Run invariant suites.
    Verify {
        #[command(subcommand)]
        suite: Suite,
    },
}

#[derive(Debug, Subcommand)]
enum Suite {
    Words,
    Table1,
    Prop4,
    Kernel,
    Prop6,
    Theorem2,
    /// First homology of the pure twin group on n strands.
    H1 {
        n: usize,
    },
    All,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CommandOutcome {
    pub status: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Serialize)]
struct Record {
    check: String,
    expected: Option<String>,
    actual: String,
    pass: bool,
}

impl From<CheckResult> for Record {
    fn from(r: CheckResult) -> Self {
        Record {
            check: r.check,
            expected: Some(r.expected),
            actual: r.actual,
            pass: r.pass,
        }
    }
}

fn info(check: &str, actual: impl ToString) -> Record {
    Record {
        check: check.to_string(),
        expected: None,
        actual: actual.to_string(),
        pass: true,
    }
}

struct Report {
    command: String,
    inputs: Value,
    records: Vec<Record>,
    human: String,
    stderr: String,
    status: i32,
    extra: Option<(&'static str, Value)>,
}

impl Report {
    fn new(command: &str, inputs: Value) -> Self {
        Report {
            command: command.to_string(),
            inputs,
            records: Vec::new(),
            human: String::new(),
            stderr: String::new(),
            status: EXIT_OK,
            extra: None,
        }
    }
}

fn usage_error(e: &Error) -> CommandOutcome {
    CommandOutcome {
        status: EXIT_USAGE,
        stdout: String::new(),
        stderr: format!("error: {e}\n\nRun with --help for usage.\n"),
    }
}

fn twin_graph(n: usize) -> Result<CommutationGraph> {
    if !(1..=MAX_VERTICES + 1).contains(&n) {
        return Err(Error::TooManyVertices {
            got: n,
            max: MAX_VERTICES + 1,
        });
    }
    Ok(CommutationGraph::twin(n))
}

fn parse_word(graph: &CommutationGraph, text: &str) -> Result<Word> {
    let w: Word = text.parse()?;
    graph.check_word(&w)?;
    Ok(w)
}

/// Parses `argv` (including the program name) and runs the command.
pub fn run<I, T>(argv: I) -> CommandOutcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let status = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            return if status == EXIT_OK {
                CommandOutcome {
                    status,
                    stdout: text,
                    stderr: String::new(),
                }
            } else {
                CommandOutcome {
                    status,
                    stdout: String::new(),
                    stderr: text,
                }
            };
        }
    };
    let start = Instant::now();
    let report = match dispatch(&cli) {
        Ok(r) => r,
        Err(e) => return usage_error(&e),
    };
    let elapsed_ms = start.elapsed().as_millis();
    if cli.json {
        let mut payload = json!({
            "command": report.command,
            "inputs": report.inputs,
            "results": report.records,
            "elapsed_ms": elapsed_ms,
        });
        if let Some((key, value)) = report.extra {
            payload[key] = value;
        }
        let mut stdout = serde_json::to_string_pretty(&payload).expect("serializable");
        stdout.push('\n');
        CommandOutcome {
            status: report.status,
            stdout,
            stderr: String::new(),
        }
    } else {
        let mut stderr = report.stderr;
        let _ = writeln!(stderr, "elapsed: {elapsed_ms} ms");
        CommandOutcome {
            status: report.status,
            stdout: report.human,
            stderr,
        }
    }
}

fn dispatch(cli: &Cli) -> Result<Report> {
    match &cli.command {
        Command::Nf { n, word } => {
            let graph = twin_graph(*n)?;
            let w = parse_word(&graph, word)?;
            let nf = graph.normal_form(&w)?;
            let mut r = Report::new("nf", json!({ "n": n, "word": w.to_string() }));
            r.human = format!("{nf}\n");
            r.records.push(info("normal_form", nf));
            Ok(r)
        }
        Command::Perm { n, word } => {
            let graph = twin_graph(*n)?;
            let w = parse_word(&graph, word)?;
            let p = permutation_of(*n, &w)?;
            let images: Vec<String> = p.images().iter().map(|x| x.to_string()).collect();
            let pure = is_pure(*n, &w)?;
            let mut r = Report::new("perm", json!({ "n": n, "word": w.to_string() }));
            r.human = format!("images: {}\npure: {pure}\n", images.join(" "));
            r.records.push(info("images", images.join(" ")));
            r.records.push(info("pure", pure));
            Ok(r)
        }
        Command::Shuffle { triple } => {
            let t: ShuffleTriple = triple.parse()?;
            let w = shuffle_word(t);
            let mut r = Report::new("shuffle", json!({ "triple": t.to_string() }));
            r.human = format!("{w}\n");
            r.records.push(info("word", &w));
            r.records.push(info(
                "permutation",
                t.permutation()
                    .images()
                    .iter()
                    .map(|x| x.to_string())
                    .collect::<Vec<_>>()
                    .join(" "),
            ));
            Ok(r)
        }
        Command::Decompose { word, realize, catalog } => decompose(word.as_deref(), *realize, *catalog),
        Command::Verify { suite } => run_verify(suite, cli.seed),
    }
}

fn decompose(word: Option<&str>, realize: bool, catalog: bool) -> Result<Report> {
    let c = P6Catalog::get();
    let mut r = Report::new(
        "decompose",
        json!({ "word": word, "realize": realize, "catalog": catalog }),
    );
    if word.is_none() && !catalog {
        return Err(Error::Parse {
            what: "decompose arguments (a word or --catalog)",
            input: String::new(),
        });
    }
    if let Some(text) = word {
        let graph = CommutationGraph::twin(6);
        let w = parse_word(&graph, text)?;
        let nf = c.decompose(&w)?;
        if nf.is_empty() {
            r.human.push_str("e\n");
        }
        for s in nf.syllables() {
            let _ = writeln!(r.human, "{}", c.format_syllable(s));
        }
        r.records.push(info("normal_form", &nf));
        if realize {
            let back = c.realize(&nf);
            let ok = graph.equal(&back, &w)?;
            let _ = writeln!(r.human, "realized: {back}");
            let _ = writeln!(r.human, "round trip: {}", if ok { "ok" } else { "MISMATCH" });
            r.records.push(Record {
                check: "round_trip".into(),
                expected: Some(w.to_string()),
                actual: back.to_string(),
                pass: ok,
            });
            if !ok {
                r.status = EXIT_CHECK_FAILED;
            }
        }
    }
    if catalog {
        let (lines, records) = catalog_export(c);
        r.human.push_str(&lines);
        r.extra = Some(("catalog", records));
    }
    Ok(r)
}

fn source_text(source: &GeneratorSource) -> String {
    match source {
        GeneratorSource::QPrime(id) => format!("Q′#{id}"),
        GeneratorSource::QDouble(id) => format!("Q″#{id}"),
        GeneratorSource::Bridge(alpha) => format!("x{alpha}"),
    }
}

fn kind_text(kind: GeneratorKind) -> &'static str {
    match kind {
        GeneratorKind::Free => "free",
        GeneratorKind::PairG => "pair_g",
        GeneratorKind::PairH => "pair_h",
    }
}

fn generator_record(g: &P6Generator, name: String) -> Value {
    let a_word = match g.source {
        GeneratorSource::QPrime(id) | GeneratorSource::QDouble(id) => {
            Some(QCatalog::get().generators[id].word.to_string())
        }
        GeneratorSource::Bridge(_) => None,
    };
    json!({
        "name": name,
        "id": g.id,
        "kind": kind_text(g.kind),
        "source": source_text(&g.source),
        "pair_triple": g.pair_triple.map(|t| t.to_string()),
        "a_word": a_word,
        "realization": g.realization.to_string(),
    })
}

fn catalog_export(c: &P6Catalog) -> (String, Value) {
    let mut lines = String::new();
    let mut records = Vec::new();
    for g in &c.free {
        let name = format!("F{}", g.id);
        let _ = writeln!(lines, "{name} free {} : {}", source_text(&g.source), g.realization);
        records.push(generator_record(g, name));
    }
    for p in &c.pairs {
        for (part, g) in [("g", &p.g), ("h", &p.h)] {
            let name = format!("P{}.{part}", p.triple);
            let conj: Vec<String> = p.conjugator().iter().map(|s| c.format_syllable(s)).collect();
            let via = if conj.is_empty() {
                String::new()
            } else {
                format!(" (conjugate by {})", conj.join(" "))
            };
            let _ = writeln!(
                lines,
                "{name} {} {}{via} : {}",
                kind_text(g.kind),
                source_text(&g.source),
                g.realization
            );
            records.push(generator_record(g, name));
        }
    }
    let (pure, commuting, distinct) = literal_pair_form_report();
    let _ = writeln!(lines, "pairs are (q⁻¹·g·q, q⁻¹·h·q): 20/20 commuting, 40 distinct");
    let _ = writeln!(
        lines,
        "(q·g·q⁻¹, q·h·q⁻¹): {pure}/20 pure, {commuting}/20 commuting, {distinct} distinct braids"
    );
    let forms = json!({
        "adopted": "q^-1 g q",
        "literal_q_g_q_inverse": { "pure_pairs": pure, "commuting_pairs": commuting, "distinct_braids": distinct },
    });
    (lines, json!({ "generators": records, "conjugation_forms": forms }))
}

fn suite_summary(name: &str, results: &[CheckResult]) -> String {
    let passed = results.iter().filter(|r| r.pass).count();
    let verdict = if passed == results.len() { "OK" } else { "FAILED" };
    if name == "prop6" {
        if let Some(summary) = results.iter().find(|r| r.check == "summary") {
            return format!("{} — {verdict}", summary.actual);
        }
    }
    format!("{name}: {passed}/{} checks passed — {verdict}", results.len())
}

fn run_verify(suite: &Suite, seed: u64) -> Result<Report> {
    let (label, names): (String, Vec<&str>) = match suite {
        Suite::Words => ("words".into(), vec!["words"]),
        Suite::Table1 => ("table1".into(), vec!["table1"]),
        Suite::Prop4 => ("prop4".into(), vec!["prop4"]),
        Suite::Kernel => ("kernel".into(), vec!["kernel"]),
        Suite::Prop6 => ("prop6".into(), vec!["prop6"]),
        Suite::Theorem2 => ("theorem2".into(), vec!["theorem2"]),
        Suite::H1 { n } => (format!("h1 {n}"), vec!["h1"]),
        Suite::All => ("all".into(), verify::SUITES.to_vec()),
    };
    let mut r = Report::new("verify", json!({ "suite": label, "seed": seed }));
    for name in names {
        let start = Instant::now();
        let results = match suite {
            Suite::H1 { n } => verify::h1_suite(*n)?,
            _ => verify::run_suite(name, seed)?,
        };
        let _ = writeln!(r.stderr, "{name}: {} ms", start.elapsed().as_millis());
        for res in &results {
            if res.pass {
                let _ = writeln!(r.human, "PASS {name}: {} = {}", res.check, res.actual);
            } else {
                let _ = writeln!(
                    r.human,
                    "FAIL {name}: {} expected {}, got {}",
                    res.check, res.expected, res.actual
                );
            }
        }
        let _ = writeln!(r.human, "{}", suite_summary(name, &results));
        if results.iter().any(|x| !x.pass) {
            r.status = EXIT_CHECK_FAILED;
        }
        r.records.extend(results.into_iter().map(|mut x| {
            x.check = format!("{name}: {}", x.check);
            Record::from(x)
        }));
    }
    Ok(r)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run_args(args: &[&str]) -> CommandOutcome {
        run(std::iter::once("planar-braids").chain(args.iter().copied()))
    }

    #[test]
    fn nf_example() {
        let out = run_args(&["nf", "6", "1 3 1"]);
        assert_eq!((out.status, out.stdout.as_str()), (0, "3\n"));
    }

    #[test]
    fn decompose_example() {
        let out = run_args(&["decompose", "1 2 1 2 1 2"]);
        assert_eq!((out.status, out.stdout.as_str()), (0, "P123[g^1 h^0]\n"));
    }

    #[test]
    fn prop6_summary() {
        let out = run_args(&["verify", "prop6"]);
        assert_eq!(out.status, 0);
        assert!(out.stdout.ends_with("free=18 pairs=10 — OK\n"), "{}", out.stdout);
    }

    #[test]
    fn usage_errors() {
        assert_eq!(run_args(&["frobnicate"]).status, EXIT_USAGE);
        assert_eq!(run_args(&["nf", "6", "1 x"]).status, EXIT_USAGE);
        assert_eq!(run_args(&["nf", "6", "7"]).status, EXIT_USAGE);
        assert_eq!(run_args(&["decompose", "1"]).status, EXIT_USAGE);
        assert_eq!(run_args(&["decompose"]).status, EXIT_USAGE);
        assert_eq!(run_args(&["--help"]).status, EXIT_OK);
    }
}
