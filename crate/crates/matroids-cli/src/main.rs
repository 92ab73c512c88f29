//! Command-line surface over the matroid library.
//!
//! Exit codes are a scriptable contract: 0 = the report verdict is
//! `pass`, 1 = `fail`, 2 = anything else (error, not-applicable,
//! indeterminate). Commands read one matroid file from a path or `-`
//! (standard input) and compose through pipes.

use clap::{Args, Parser, Subcommand, ValueEnum};
use matroids::analysis::{
    contraction_goodness, odd_cocircuit_audit, theorem_verifier, triangle_census, AuditWitness,
    CocircuitClause, ContractionFailure, ElementGoodness,
};
use matroids::connectivity::{
    find_4fans, find_separation, is_internally_4_connected, is_n_connected, Decision, SearchBudget,
    SearchOutcome, SearchStrategy, SeparationKind, SeparationWitness,
};
use matroids::constructions::{catalog, graphic, CatalogId, GraphSpec};
use matroids::io::{parse_matroid, render_matroid};
use matroids::{BinaryMatroid, ElementSet, Error};
use serde_json::{json, Value};
use std::io::Read;
use std::process::ExitCode;
use std::time::Duration;

#[derive(Parser)]
#[command(name = "matroids", version, about = "Binary matroid toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Emit a catalog matroid (or the cycle matroid of an edge list)
    Gen {
        /// Catalog id: f7, f7dual, mk4, mk5, mk5dual, mk33, mk33dual,
        /// pg22/pg32/pg42, ag32, wheel (with --n), section6-g/n/m
        id: Option<String>,
        /// Rim size for `wheel`
        #[arg(long)]
        n: Option<usize>,
        /// Build from an edge-list file (`u v label` lines) instead
        #[arg(long, conflicts_with = "id")]
        edges: Option<String>,
    },
    /// Decide a structural property; exit 0/1/2 = pass/fail/other
    Check {
        kind: CheckKind,
        #[arg(default_value = "-")]
        input: String,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Verify the minimum count of contractible elements
    Theorem {
        #[arg(default_value = "-")]
        input: String,
        /// Scan only these elements (comma separated); partial scans
        /// report per-element verdicts for external aggregation
        #[arg(long, value_delimiter = ',')]
        elements: Vec<String>,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// Apply an operation and emit the resulting matroid file
    Transform {
        op: TransformOp,
        #[arg(default_value = "-")]
        input: String,
        /// Elements for delete/contract/restrict (comma separated)
        #[arg(short, long, value_delimiter = ',')]
        elements: Vec<String>,
    },
    /// Search for a bounded-λ separation with side minimums
    Separations {
        #[arg(default_value = "-")]
        input: String,
        /// Bound on the connectivity function of the returned side
        #[arg(long, default_value_t = 2)]
        lambda: usize,
        /// Minimum size of both sides
        #[arg(long, default_value_t = 4)]
        min_side: usize,
        #[command(flatten)]
        search: SearchArgs,
    },
    /// List triangles, triads, cocircuits, or 4-fans
    Enumerate {
        kind: EnumerateKind,
        #[arg(default_value = "-")]
        input: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum CheckKind {
    /// Internally 4-connected
    I4c,
    /// 3-connected
    #[value(name = "3conn")]
    ThreeConn,
    /// No cocircuit of odd size (hypothesis-gated audit)
    NoOddCocircuits,
    /// Every element in exactly three triangles
    Census3,
}

#[derive(Clone, Copy, ValueEnum)]
enum TransformOp {
    Dual,
    Delete,
    Contract,
    Simplify,
    Restrict,
}

#[derive(Clone, Copy, ValueEnum)]
enum EnumerateKind {
    Triangles,
    Triads,
    Cocircuits,
    Fans,
}

#[derive(Clone, Copy, ValueEnum)]
enum StrategyArg {
    Bnb,
    Exhaustive,
}

#[derive(Args)]
struct SearchArgs {
    /// Node limit per search
    #[arg(long, default_value_t = 1_000_000_000)]
    budget_nodes: u64,
    /// Wall-clock limit per search, in seconds
    #[arg(long, default_value_t = 3600)]
    budget_seconds: u64,
    #[arg(long, value_enum, default_value_t = StrategyArg::Bnb)]
    strategy: StrategyArg,
    /// Worker threads for element scans (searches stay sequential)
    #[arg(long, default_value_t = 1)]
    threads: usize,
    /// Byte-stable mode: sequential exhaustive search, least witness
    #[arg(long)]
    canonical: bool,
}

impl SearchArgs {
    fn budget(&self) -> SearchBudget {
        SearchBudget {
            strategy: if self.canonical {
                SearchStrategy::Exhaustive
            } else {
                match self.strategy {
                    StrategyArg::Bnb => SearchStrategy::BranchAndBound,
                    StrategyArg::Exhaustive => SearchStrategy::Exhaustive,
                }
            },
            node_limit: self.budget_nodes,
            time_limit: Duration::from_secs(self.budget_seconds),
        }
    }

    fn threads(&self) -> usize {
        if self.canonical {
            1
        } else {
            self.threads.max(1)
        }
    }
}

/// Verdict of a report, mapped onto the exit-code contract.
#[derive(Clone, Copy, PartialEq, Eq)]
enum Verdict {
    Pass,
    Fail,
    NotApplicable,
    Indeterminate,
}

impl Verdict {
    fn label(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::NotApplicable => "not-applicable",
            Verdict::Indeterminate => "indeterminate",
        }
    }

    fn exit(self) -> ExitCode {
        match self {
            Verdict::Pass => ExitCode::SUCCESS,
            Verdict::Fail => ExitCode::from(1),
            _ => ExitCode::from(2),
        }
    }
}

/// Accumulates the human-readable report and its JSON mirror.
struct Report {
    text: String,
    json: serde_json::Map<String, Value>,
}

impl Report {
    fn new(command: &str, input: &str) -> Self {
        let mut report = Report {
            text: String::new(),
            json: serde_json::Map::new(),
        };
        report.text.push_str(&format!("command: {command}\n"));
        report.text.push_str(&format!("input: {input}\n"));
        report.json.insert("command".into(), json!(command));
        report.json.insert("input".into(), json!(input));
        report
    }

    fn verdict(&mut self, v: Verdict) {
        self.text.push_str(&format!("verdict: {}\n", v.label()));
        self.json.insert("verdict".into(), json!(v.label()));
    }

    fn line(&mut self, key: &str, text_value: impl std::fmt::Display, json_value: Value) {
        self.text.push_str(&format!("{key}: {text_value}\n"));
        self.json.insert(key.replace('-', "_"), json_value);
    }

    fn block(&mut self, header: &str, fields: &[(&str, String)]) {
        self.text.push_str(&format!("{header}:\n"));
        for (k, v) in fields {
            self.text.push_str(&format!("  {k}: {v}\n"));
        }
    }

    fn notes(&mut self, notes: &[String]) {
        for n in notes {
            self.text.push_str(&format!("note: {n}\n"));
        }
        if !notes.is_empty() {
            self.json.insert("notes".into(), json!(notes));
        }
    }

    fn json_field(&mut self, key: &str, value: Value) {
        self.json.insert(key.into(), value);
    }

    fn finish(self, verdict: Verdict) -> ExitCode {
        print!("{}", self.text);
        println!("json: {}", Value::Object(self.json));
        verdict.exit()
    }
}

fn labels_of(m: &BinaryMatroid, set: ElementSet) -> Vec<String> {
    set.iter().map(|e| m.label(e).to_string()).collect()
}

fn joined(labels: &[String]) -> String {
    labels.join(" ")
}

fn kind_label(kind: SeparationKind) -> String {
    match kind {
        SeparationKind::KSeparation(k) => format!("{k}-separation"),
        SeparationKind::Violator43 => "violator-4-3".into(),
        SeparationKind::Fan4 => "fan-4".into(),
        SeparationKind::Sequential => "sequential".into(),
    }
}

fn witness_fields(
    m: &BinaryMatroid,
    w: &SeparationWitness,
) -> (Vec<(&'static str, String)>, Value) {
    let side_x = labels_of(m, w.side_x);
    let side_y = labels_of(m, m.ground_set().difference(w.side_x));
    let fields = vec![
        ("kind", kind_label(w.kind)),
        ("lambda", w.lambda.to_string()),
        ("sizes", format!("{} {}", w.sizes.0, w.sizes.1)),
        ("side-x", joined(&side_x)),
        ("side-y", joined(&side_y)),
    ];
    let json = json!({
        "kind": kind_label(w.kind),
        "lambda": w.lambda,
        "sizes": [w.sizes.0, w.sizes.1],
        "side_x": side_x,
        "side_y": side_y,
    });
    (fields, json)
}

fn read_input(path: &str) -> Result<String, Error> {
    if path == "-" {
        let mut buffer = String::new();
        std::io::stdin()
            .read_to_string(&mut buffer)
            .map_err(|e| Error::InvalidInput(format!("reading standard input: {e}")))?;
        Ok(buffer)
    } else {
        std::fs::read_to_string(path)
            .map_err(|e| Error::InvalidInput(format!("reading `{path}`: {e}")))
    }
}

fn load_matroid(path: &str) -> Result<BinaryMatroid, Error> {
    parse_matroid(&read_input(path)?)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Gen { id, n, edges } => cmd_gen(id, n, edges),
        Command::Check {
            kind,
            input,
            search,
        } => in_pool(&search, || cmd_check(kind, &input, &search)),
        Command::Theorem {
            input,
            elements,
            search,
        } => in_pool(&search, || cmd_theorem(&input, &elements, &search)),
        Command::Transform {
            op,
            input,
            elements,
        } => cmd_transform(op, &input, &elements),
        Command::Separations {
            input,
            lambda,
            min_side,
            search,
        } => in_pool(&search, || {
            cmd_separations(&input, lambda, min_side, &search)
        }),
        Command::Enumerate { kind, input } => cmd_enumerate(kind, &input),
    }
}

fn in_pool<F>(search: &SearchArgs, body: F) -> Result<ExitCode, Error>
where
    F: FnOnce() -> Result<ExitCode, Error> + Send,
{
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(search.threads())
        .build()
        .map_err(|e| Error::InvalidInput(format!("thread pool: {e}")))?;
    pool.install(body)
}

fn cmd_gen(id: Option<String>, n: Option<usize>, edges: Option<String>) -> Result<ExitCode, Error> {
    let matroid = match (id, edges) {
        (Some(name), None) => {
            let id = match (name.as_str(), n) {
                ("wheel", Some(n)) => CatalogId::Wheel(n),
                ("wheel", None) => {
                    return Err(Error::InvalidInput("`gen wheel` requires --n".into()))
                }
                (_, Some(_)) => {
                    return Err(Error::InvalidInput("--n is only valid with `wheel`".into()))
                }
                (other, None) => CatalogId::parse(other)?,
            };
            catalog(&id)?
        }
        (None, Some(path)) => {
            let spec = GraphSpec::parse_edge_list(&read_input(&path)?)?;
            graphic(&spec)?
        }
        (None, None) => {
            return Err(Error::InvalidInput(
                "`gen` needs a catalog id or --edges <path>".into(),
            ))
        }
        (Some(_), Some(_)) => unreachable!("clap conflicts_with"),
    };
    print!("{}", render_matroid(&matroid));
    Ok(ExitCode::SUCCESS)
}

fn cmd_check(kind: CheckKind, input: &str, search: &SearchArgs) -> Result<ExitCode, Error> {
    let m = load_matroid(input)?;
    let budget = search.budget();
    let command = format!(
        "check {}",
        match kind {
            CheckKind::I4c => "i4c",
            CheckKind::ThreeConn => "3conn",
            CheckKind::NoOddCocircuits => "no-odd-cocircuits",
            CheckKind::Census3 => "census3",
        }
    );
    let mut report = Report::new(&command, input);
    let verdict = match kind {
        CheckKind::I4c | CheckKind::ThreeConn => {
            let decision = match kind {
                CheckKind::I4c => is_internally_4_connected(&m, &budget),
                _ => is_n_connected(&m, 3, &budget)?,
            };
            match decision {
                Decision::Holds => {
                    report.verdict(Verdict::Pass);
                    report.json_field("witnesses", json!([]));
                    Verdict::Pass
                }
                Decision::Fails(w) => {
                    report.verdict(Verdict::Fail);
                    let (fields, jw) = witness_fields(&m, &w);
                    report.block("witness", &fields);
                    report.json_field("witnesses", json!([jw]));
                    Verdict::Fail
                }
                Decision::Indeterminate => {
                    report.verdict(Verdict::Indeterminate);
                    report.notes(&["search budget exhausted".into()]);
                    Verdict::Indeterminate
                }
            }
        }
        CheckKind::NoOddCocircuits => {
            let audit = odd_cocircuit_audit(&m, &budget)?;
            let verdict = match audit.passed {
                Some(true) => Verdict::Pass,
                Some(false) => Verdict::Fail,
                None => Verdict::NotApplicable,
            };
            report.verdict(verdict);
            report.notes(&audit.notes);
            let mut sets = Vec::new();
            for w in &audit.witnesses {
                if let AuditWitness::OddCocircuit(c) = w {
                    let labels = labels_of(&m, *c);
                    report.block(
                        "witness",
                        &[
                            ("kind", "odd-cocircuit".into()),
                            ("elements", joined(&labels)),
                        ],
                    );
                    sets.push(json!({ "kind": "odd-cocircuit", "elements": labels }));
                }
            }
            report.json_field("witnesses", Value::Array(sets));
            verdict
        }
        CheckKind::Census3 => {
            let census = triangle_census(&m);
            let verdict = if census.uniform_k == Some(3) {
                Verdict::Pass
            } else {
                Verdict::Fail
            };
            report.verdict(verdict);
            report.line(
                "total-triangles",
                census.total_triangles,
                json!(census.total_triangles),
            );
            report.line(
                "uniform",
                census
                    .uniform_k
                    .map_or("none".to_string(), |k| k.to_string()),
                json!(census.uniform_k),
            );
            let mut off = Vec::new();
            for (e, &c) in census.per_element.iter().enumerate() {
                if c != 3 {
                    report
                        .text
                        .push_str(&format!("element {}: {} triangles\n", m.label(e), c));
                    off.push(json!({ "element": m.label(e), "count": c }));
                }
            }
            report.json_field("off_census", Value::Array(off));
            verdict
        }
    };
    Ok(report.finish(verdict))
}

fn contraction_failure_fields(
    m: &BinaryMatroid,
    element: usize,
    failure: &ContractionFailure,
) -> (Vec<(&'static str, String)>, Value) {
    let (si, _) = m.si_contract(element).expect("witnessed element");
    match failure {
        ContractionFailure::NotThreeConnected(w) | ContractionFailure::Violator(w) => {
            let (mut fields, mut jw) = witness_fields(&si, w);
            let what = if matches!(failure, ContractionFailure::Violator(_)) {
                "si-contraction-violator"
            } else {
                "si-contraction-not-3-connected"
            };
            fields.insert(0, ("failure", what.into()));
            fields.insert(1, ("element", m.label(element).to_string()));
            let obj = jw.as_object_mut().expect("witness json is an object");
            obj.insert("failure".into(), json!(what));
            obj.insert("element".into(), json!(m.label(element)));
            (fields, jw)
        }
        ContractionFailure::HasTriads(triads) => {
            let rendered: Vec<String> =
                triads.iter().map(|t| joined(&labels_of(&si, *t))).collect();
            let fields = vec![
                ("failure", "si-contraction-has-triads".to_string()),
                ("element", m.label(element).to_string()),
                ("triads", rendered.join(", ")),
            ];
            let jw = json!({
                "failure": "si-contraction-has-triads",
                "element": m.label(element),
                "triads": triads.iter().map(|t| labels_of(&si, *t)).collect::<Vec<_>>(),
            });
            (fields, jw)
        }
    }
}

fn cmd_theorem(input: &str, elements: &[String], search: &SearchArgs) -> Result<ExitCode, Error> {
    let m = load_matroid(input)?;
    let budget = search.budget();
    let mut report = Report::new("theorem", input);
    if !elements.is_empty() {
        // partial, resumable scan: per-element verdicts only
        let mut indices = Vec::new();
        for l in elements {
            indices.push(m.index_of(l)?);
        }
        let mut any_unknown = false;
        let mut json_elements = Vec::new();
        for e in indices {
            let (verdict_text, jw) = match contraction_goodness(&m, e, &budget) {
                ElementGoodness::Good => (
                    "good".to_string(),
                    json!({ "element": m.label(e), "verdict": "good" }),
                ),
                ElementGoodness::Bad(f) => {
                    let (fields, jw) = contraction_failure_fields(&m, e, &f);
                    report.block("witness", &fields);
                    let mut obj = json!({ "element": m.label(e), "verdict": "bad" });
                    obj.as_object_mut().unwrap().insert("failure".into(), jw);
                    ("bad".to_string(), obj)
                }
                ElementGoodness::Unknown => {
                    any_unknown = true;
                    (
                        "unknown".to_string(),
                        json!({ "element": m.label(e), "verdict": "unknown" }),
                    )
                }
            };
            report
                .text
                .push_str(&format!("element {}: {}\n", m.label(e), verdict_text));
            json_elements.push(jw);
        }
        report.json_field("elements", Value::Array(json_elements));
        report.notes(&["partial scan; aggregate element verdicts externally".into()]);
        let verdict = if any_unknown {
            Verdict::Indeterminate
        } else {
            Verdict::Pass
        };
        report.verdict(verdict);
        return Ok(report.finish(verdict));
    }

    let theorem = theorem_verifier(&m, &budget)?;
    let verdict = if !theorem.hypotheses_ok {
        Verdict::NotApplicable
    } else if theorem.indeterminate() {
        Verdict::Indeterminate
    } else if theorem.verdict_ok() {
        Verdict::Pass
    } else {
        Verdict::Fail
    };
    report.verdict(verdict);
    report.line(
        "hypotheses",
        if theorem.hypotheses_ok {
            "ok"
        } else {
            "failed"
        },
        json!(theorem.hypotheses_ok),
    );
    report.notes(&theorem.hypothesis_notes);
    if theorem.hypotheses_ok {
        let good = labels_of(&m, theorem.good);
        report.line("good-count", good.len(), json!(good.len()));
        report.line("good", joined(&good), json!(good));
        let bad: Vec<String> = theorem
            .bad
            .iter()
            .map(|(e, _)| m.label(*e).to_string())
            .collect();
        report.line("bad", joined(&bad), json!(bad));
        if !theorem.unknown.is_empty() {
            let unknown = labels_of(&m, theorem.unknown);
            report.line("unknown", joined(&unknown), json!(unknown));
        }
        report.line(
            "min4",
            if theorem.min4_ok { "ok" } else { "violated" },
            json!(theorem.min4_ok),
        );
        let (clause_text, clause_json) = match &theorem.cocircuit_clause {
            CocircuitClause::NotTriggered => ("not-triggered".to_string(), json!("not-triggered")),
            CocircuitClause::Satisfied(c) => {
                let labels = labels_of(&m, *c);
                (
                    format!("satisfied-with {}", joined(&labels)),
                    json!({ "satisfied_with": labels }),
                )
            }
            CocircuitClause::Violated => ("violated".to_string(), json!("violated")),
            CocircuitClause::AmbiguousSize5 => {
                ("ambiguous-size-5".to_string(), json!("ambiguous-size-5"))
            }
        };
        report.line("cocircuit-clause", clause_text, clause_json);
        let mut json_bad = Vec::new();
        for (e, failure) in &theorem.bad {
            let (fields, jw) = contraction_failure_fields(&m, *e, failure);
            report.block("witness", &fields);
            json_bad.push(jw);
        }
        report.json_field("witnesses", Value::Array(json_bad));
    }
    Ok(report.finish(verdict))
}

fn cmd_transform(op: TransformOp, input: &str, elements: &[String]) -> Result<ExitCode, Error> {
    let m = load_matroid(input)?;
    let needs_elements = matches!(
        op,
        TransformOp::Delete | TransformOp::Contract | TransformOp::Restrict
    );
    if needs_elements && elements.is_empty() {
        return Err(Error::InvalidInput(
            "this transform requires -e <labels>".into(),
        ));
    }
    if !needs_elements && !elements.is_empty() {
        return Err(Error::InvalidInput(
            "this transform takes no elements".into(),
        ));
    }
    let result = match op {
        TransformOp::Dual => m.dual(),
        TransformOp::Simplify => m.simplify().0,
        TransformOp::Delete => m.delete(m.parse_set(elements)?),
        TransformOp::Contract => m.contract(m.parse_set(elements)?),
        TransformOp::Restrict => m.restrict(m.parse_set(elements)?),
    };
    print!("{}", render_matroid(&result));
    Ok(ExitCode::SUCCESS)
}

fn cmd_separations(
    input: &str,
    lambda: usize,
    min_side: usize,
    search: &SearchArgs,
) -> Result<ExitCode, Error> {
    let m = load_matroid(input)?;
    let budget = search.budget();
    let mut report = Report::new("separations", input);
    report.line("lambda-bound", lambda, json!(lambda));
    report.line("min-side", min_side, json!(min_side));
    let verdict = match find_separation(&m, lambda, min_side, min_side, &budget) {
        SearchOutcome::Found(w) => {
            report.verdict(Verdict::Pass);
            let (fields, jw) = witness_fields(&m, &w);
            report.block("witness", &fields);
            report.json_field("witnesses", json!([jw]));
            Verdict::Pass
        }
        SearchOutcome::NotFound => {
            report.verdict(Verdict::Fail);
            report.line("witness", "none", json!(null));
            report.json_field("witnesses", json!([]));
            Verdict::Fail
        }
        SearchOutcome::Indeterminate => {
            report.verdict(Verdict::Indeterminate);
            report.notes(&["search budget exhausted".into()]);
            Verdict::Indeterminate
        }
    };
    Ok(report.finish(verdict))
}

fn cmd_enumerate(kind: EnumerateKind, input: &str) -> Result<ExitCode, Error> {
    let m = load_matroid(input)?;
    let command = format!(
        "enumerate {}",
        match kind {
            EnumerateKind::Triangles => "triangles",
            EnumerateKind::Triads => "triads",
            EnumerateKind::Cocircuits => "cocircuits",
            EnumerateKind::Fans => "fans",
        }
    );
    let mut report = Report::new(&command, input);
    match kind {
        EnumerateKind::Fans => {
            let fans = find_4fans(&m);
            report.line("count", fans.len(), json!(fans.len()));
            let mut items = Vec::new();
            for (triangle, triad) in &fans {
                let t = labels_of(&m, *triangle);
                let s = labels_of(&m, *triad);
                report
                    .text
                    .push_str(&format!("fan: {} / {}\n", joined(&t), joined(&s)));
                items.push(json!({ "triangle": t, "triad": s }));
            }
            report.json_field("fans", Value::Array(items));
        }
        _ => {
            let sets: Vec<ElementSet> = match kind {
                EnumerateKind::Triangles => m.triangles().sets().to_vec(),
                EnumerateKind::Triads => m.triads().sets().to_vec(),
                EnumerateKind::Cocircuits => m.cocircuits()?,
                EnumerateKind::Fans => unreachable!(),
            };
            report.line("count", sets.len(), json!(sets.len()));
            let mut items = Vec::new();
            for s in &sets {
                let labels = labels_of(&m, *s);
                report.text.push_str(&format!("set: {}\n", joined(&labels)));
                items.push(json!(labels));
            }
            report.json_field("sets", Value::Array(items));
        }
    }
    report.verdict(Verdict::Pass);
    Ok(report.finish(Verdict::Pass))
}
