//! The `agq` command-line interface.
//!
//! Exit codes: 0 = success (and "isomorphic" for `compare`); 1 =
//! validation failure, failed verification or non-isomorphic; 2 = usage
//! or parse error; 3 = the search budget ran out before a verdict.
//! All reports are deterministic functions of the input files.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};

use crate::brauer::configuration_of_pair;
use crate::cut::{admissible_cut_count, admissible_cuts, cut_algebra, AdmissibleCut};
use crate::hypergraph::{hypergraph_of, hypergraphs_isomorphic};
use crate::iso::{pairs_isomorphic, IsoOutcome, DEFAULT_BUDGET};
use crate::pair::DefiningPair;
use crate::presentation::Presentation;
use crate::render;
use crate::star::star;
use crate::text::{parse, print_pair, print_presentation, PairInput, SourceFile};
use crate::trivial::verify_star_iso;

const EXIT_OK: i32 = 0;
const EXIT_FAIL: i32 = 1;
const EXIT_USAGE: i32 = 2;
const EXIT_UNDECIDED: i32 = 3;

#[derive(Parser)]
#[command(
    name = "agq",
    version,
    about = "Computations with almost gentle algebras: validation, trivial extensions, admissible cuts and hypergraph invariants",
    disable_help_subcommand = true
)]
struct Cli {
    /// Emit reports as JSON instead of text
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse a file and check the almost gentle / defining-pair axioms
    Validate { file: PathBuf },
    /// Report dimension, maximal paths and verdicts
    Info { file: PathBuf },
    /// Print the defining pair of the trivial extension of an algebra
    Trivext {
        file: PathBuf,
        /// Write the pair to a file instead of standard output
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Enumerate or apply admissible cuts of a defining pair
    Cuts {
        file: PathBuf,
        /// List every admissible cut
        #[arg(long)]
        list: bool,
        /// Cut the listed arrows (comma-separated) and print the algebra
        #[arg(long, value_name = "A1,A2,...")]
        apply: Option<String>,
    },
    /// The oriented hypergraph of an algebra (for a pair file: its
    /// Brauer configuration)
    Hypergraph {
        file: PathBuf,
        /// Emit DOT for graph viewers
        #[arg(long)]
        dot: bool,
    },
    /// Decide whether two algebras have isomorphic trivial extensions
    /// (two pair files: whether the pairs are isomorphic)
    Compare {
        file1: PathBuf,
        file2: PathBuf,
        /// Node budget for the backtracking search
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
    },
    /// Check that the cycle relations of star(A) present the trivial
    /// extension T(A)
    Verify { file: PathBuf },
}

/// Runs the CLI on the given arguments, writing to the supplied streams,
/// and returns the exit code.
pub fn run(
    args: impl IntoIterator<Item = String>,
    out: &mut impl std::io::Write,
    err: &mut impl std::io::Write,
) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version requests are successes; writes to closed
            // pipes have nowhere to be reported, so ignore them.
            let ok = e.use_stderr();
            let _ = if ok { write!(err, "{e}") } else { write!(out, "{e}") };
            return if ok { EXIT_USAGE } else { EXIT_OK };
        }
    };
    let json = cli.json;
    let mut stdout = String::new();
    let mut stderr = String::new();
    let code = dispatch(cli, json, &mut stdout, &mut stderr);
    let _ = out.write_all(stdout.as_bytes());
    let _ = err.write_all(stderr.as_bytes());
    code
}

fn dispatch(cli: Cli, json: bool, out: &mut String, err: &mut String) -> i32 {
    macro_rules! load {
        ($file:expr) => {
            match load(&$file, err) {
                Ok(src) => src,
                Err(code) => return code,
            }
        };
    }
    match cli.command {
        Command::Validate { file } => cmd_validate(load!(file), json, out),
        Command::Info { file } => cmd_info(load!(file), json, out, err),
        Command::Trivext { file, output } => {
            cmd_trivext(load!(file), output.as_deref(), json, out, err)
        }
        Command::Cuts { file, list, apply } => {
            cmd_cuts(load!(file), list, apply.as_deref(), json, out, err)
        }
        Command::Hypergraph { file, dot } => {
            if dot && json {
                err.push_str("--dot and --json are mutually exclusive\n");
                return EXIT_USAGE;
            }
            cmd_hypergraph(load!(file), dot, json, out, err)
        }
        Command::Compare { file1, file2, budget } => {
            let left = load!(file1);
            let right = load!(file2);
            cmd_compare(left, right, budget, json, out, err)
        }
        Command::Verify { file } => cmd_verify(load!(file), json, out, err),
    }
}

/// Reads and parses a file, mapping I/O and syntax problems to exit 2.
fn load(path: &Path, err: &mut String) -> Result<Loaded, i32> {
    let text = std::fs::read_to_string(path).map_err(|e| {
        let _ = writeln!(err, "{}: {e}", path.display());
        EXIT_USAGE
    })?;
    match parse(&text) {
        Ok(source) => Ok(Loaded { path: path.to_path_buf(), source }),
        Err(e) => {
            let _ = writeln!(err, "{}: {e}", path.display());
            Err(EXIT_USAGE)
        }
    }
}

struct Loaded {
    path: PathBuf,
    source: SourceFile,
}

impl Loaded {
    /// The presentation in the file, or exit 2 for pair files.
    fn presentation(self, err: &mut String) -> Result<Presentation, i32> {
        match self.source {
            SourceFile::Presentation(p) => Ok(p),
            SourceFile::Pair(_) => {
                let _ = writeln!(
                    err,
                    "{}: expected an algebra file, found `cycle` lines",
                    self.path.display()
                );
                Err(EXIT_USAGE)
            }
        }
    }

    /// The pair input in the file, or exit 2 for algebra files.
    fn pair_input(self, err: &mut String) -> Result<PairInput, i32> {
        match self.source {
            SourceFile::Pair(p) => Ok(p),
            SourceFile::Presentation(_) => {
                let _ = writeln!(
                    err,
                    "{}: expected a defining-pair file with `cycle` lines",
                    self.path.display()
                );
                Err(EXIT_USAGE)
            }
        }
    }
}

/// An almost gentle presentation, or exit 1 with the problems printed.
fn require_almost_gentle(p: Presentation, err: &mut String) -> Result<Presentation, i32> {
    let r = p.validate();
    if r.is_almost_gentle {
        return Ok(p);
    }
    let _ = writeln!(err, "{}: not almost gentle", describe(p.name()));
    for problem in render::validation_problems(p.quiver(), &r) {
        let _ = writeln!(err, "  {problem}");
    }
    Err(EXIT_FAIL)
}

/// A valid defining pair, or exit 1 with the violations printed.
fn require_pair(input: &PairInput, err: &mut String) -> Result<DefiningPair, i32> {
    let report = input.validate();
    match report.pair {
        Some(ref pair) => Ok(pair.clone()),
        None => {
            let _ = writeln!(err, "{}: not a defining pair", describe(input.name.as_deref()));
            for v in &report.violations {
                let _ =
                    writeln!(err, "  {}", render::pair_violation_text(&input.quiver, &report, v));
            }
            Err(EXIT_FAIL)
        }
    }
}

fn describe(name: Option<&str>) -> String {
    match name {
        Some(n) => format!("algebra {n}"),
        None => "the input".to_string(),
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn emit_json(out: &mut String, doc: &serde_json::Value) {
    let _ = writeln!(out, "{}", serde_json::to_string_pretty(doc).expect("serializable"));
}

fn cmd_validate(src: Loaded, json: bool, out: &mut String) -> i32 {
    match src.source {
        SourceFile::Presentation(p) => {
            let r = p.validate();
            if json {
                emit_json(out, &render::validation_json(&p, &r));
            } else {
                let _ = writeln!(
                    out,
                    "{}: {}",
                    describe(p.name()),
                    if r.is_almost_gentle { "almost gentle" } else { "not almost gentle" }
                );
                let _ = writeln!(out, "  gentle: {}", yes_no(r.is_gentle));
                let _ =
                    writeln!(out, "  finite dimensional: {}", yes_no(r.is_finite_dimensional));
                for problem in render::validation_problems(p.quiver(), &r) {
                    let _ = writeln!(out, "  problem: {problem}");
                }
            }
            if r.is_almost_gentle {
                EXIT_OK
            } else {
                EXIT_FAIL
            }
        }
        SourceFile::Pair(input) => {
            let report = input.validate();
            if json {
                emit_json(
                    out,
                    &render::pair_report_json(input.name.as_deref(), &input.quiver, &report),
                );
            } else {
                let _ = writeln!(
                    out,
                    "{}: {}",
                    describe(input.name.as_deref()),
                    if report.is_valid() { "defining pair" } else { "not a defining pair" }
                );
                for class in &report.classes {
                    let _ = writeln!(
                        out,
                        "  cycle {} (length {}, multiplicity {})",
                        class.representative().display(&input.quiver),
                        class.len(),
                        class.multiplicity()
                    );
                }
                for v in &report.violations {
                    let _ = writeln!(
                        out,
                        "  problem: {}",
                        render::pair_violation_text(&input.quiver, &report, v)
                    );
                }
                for w in &report.warnings {
                    let _ = writeln!(out, "  note: {w}");
                }
            }
            if report.is_valid() {
                EXIT_OK
            } else {
                EXIT_FAIL
            }
        }
    }
}

fn cmd_info(src: Loaded, json: bool, out: &mut String, err: &mut String) -> i32 {
    match src.source {
        SourceFile::Presentation(p) => {
            let p = match require_almost_gentle(p, err) {
                Ok(p) => p,
                Err(code) => return code,
            };
            let r = p.validate();
            if !r.is_finite_dimensional {
                let _ = writeln!(err, "{}: infinite-dimensional", describe(p.name()));
                for problem in render::validation_problems(p.quiver(), &r) {
                    let _ = writeln!(err, "  {problem}");
                }
                return EXIT_FAIL;
            }
            let q = p.quiver();
            let maximal = p.maximal_paths().expect("validated above");
            let dimension = p.dimension().expect("validated above");
            let finite_gldim = p.has_finite_global_dimension().expect("validated above");
            if json {
                let mut doc = render::validation_json(&p, &r);
                doc["kind"] = "info".into();
                doc["dimension"] = dimension.into();
                doc["maximal_paths"] = maximal
                    .iter()
                    .map(|m| m.path.display(q))
                    .collect::<Vec<_>>()
                    .into();
                doc["finite_global_dimension"] = finite_gldim.into();
                emit_json(out, &doc);
            } else {
                let _ = writeln!(out, "{}", describe(p.name()));
                let _ = writeln!(
                    out,
                    "  vertices: {}, arrows: {}, relations: {}",
                    q.vertex_count(),
                    q.arrow_count(),
                    p.relation_count()
                );
                let _ = writeln!(out, "  dimension: {dimension}");
                let _ = writeln!(out, "  maximal paths: {}", maximal.len());
                for m in &maximal {
                    let _ = writeln!(out, "    {}", m.path.display(q));
                }
                let _ = writeln!(out, "  gentle: {}", yes_no(r.is_gentle));
                let _ =
                    writeln!(out, "  finite global dimension: {}", yes_no(finite_gldim));
            }
            EXIT_OK
        }
        SourceFile::Pair(input) => {
            let pair = match require_pair(&input, err) {
                Ok(pair) => pair,
                Err(code) => return code,
            };
            let relations = crate::pair::relations_of_pair(&pair);
            if json {
                let mut doc = render::pair_json(&pair);
                doc["kind"] = "info".into();
                doc["cuts"] = admissible_cut_count(&pair).into();
                doc["relations"] = serde_json::json!({
                    "type1": relations.type1.len(),
                    "type2": relations.type2.len(),
                    "type3": relations.type3.len(),
                });
                emit_json(out, &doc);
            } else {
                let q = pair.quiver();
                let _ = writeln!(out, "{}", describe(pair.name()));
                let _ = writeln!(
                    out,
                    "  vertices: {}, arrows: {}, cycle classes: {}",
                    q.vertex_count(),
                    q.arrow_count(),
                    pair.classes().len()
                );
                for class in pair.classes() {
                    let _ = writeln!(
                        out,
                        "    cycle {} (length {}, multiplicity {})",
                        class.representative().display(q),
                        class.len(),
                        class.multiplicity()
                    );
                }
                let _ = writeln!(
                    out,
                    "  relations: {} of type 1, {} of type 2, {} of type 3",
                    relations.type1.len(),
                    relations.type2.len(),
                    relations.type3.len()
                );
                let _ = writeln!(out, "  admissible cuts: {}", admissible_cut_count(&pair));
            }
            EXIT_OK
        }
    }
}

fn cmd_trivext(
    src: Loaded,
    output: Option<&Path>,
    json: bool,
    out: &mut String,
    err: &mut String,
) -> i32 {
    let p = match src.presentation(err).and_then(|p| require_almost_gentle(p, err)) {
        Ok(p) => p,
        Err(code) => return code,
    };
    let sa = match star(&p) {
        Ok(sa) => sa,
        Err(e) => {
            let _ = writeln!(err, "{}: {e}", describe(p.name()));
            return EXIT_FAIL;
        }
    };
    let rendered = if json {
        serde_json::to_string_pretty(&render::pair_json(&sa.pair)).expect("serializable") + "\n"
    } else {
        print_pair(&sa.pair)
    };
    match output {
        Some(path) => {
            if let Err(e) = std::fs::write(path, rendered) {
                let _ = writeln!(err, "{}: {e}", path.display());
                return EXIT_USAGE;
            }
        }
        None => out.push_str(&rendered),
    }
    EXIT_OK
}

fn cmd_cuts(
    src: Loaded,
    list: bool,
    apply: Option<&str>,
    json: bool,
    out: &mut String,
    err: &mut String,
) -> i32 {
    if list == apply.is_some() {
        err.push_str("cuts needs exactly one of --list or --apply\n");
        return EXIT_USAGE;
    }
    let input = match src.pair_input(err) {
        Ok(input) => input,
        Err(code) => return code,
    };
    let pair = match require_pair(&input, err) {
        Ok(pair) => pair,
        Err(code) => return code,
    };
    let q = pair.quiver();
    if list {
        let cuts: Vec<AdmissibleCut> = admissible_cuts(&pair).collect();
        if json {
            let doc = serde_json::json!({
                "format": 1,
                "kind": "cuts",
                "name": pair.name(),
                "cuts": cuts
                    .iter()
                    .map(|c| c.arrows.iter().map(|&a| q.arrow_name(a)).collect::<Vec<_>>())
                    .collect::<Vec<_>>(),
            });
            emit_json(out, &doc);
        } else {
            for cut in &cuts {
                let _ = writeln!(out, "{}", cut.display(q));
            }
            let _ = writeln!(out, "{} cuts", cuts.len());
        }
        return EXIT_OK;
    }

    let names: Vec<&str> = apply.expect("checked above").split(',').collect();
    let cut = match AdmissibleCut::from_names(&pair, &names) {
        Ok(cut) => cut,
        Err(e) => {
            let _ = writeln!(err, "{}: {e}", describe(pair.name()));
            return EXIT_FAIL;
        }
    };
    match cut_algebra(&pair, &cut) {
        Ok(algebra) => {
            if json {
                let r = algebra.validate();
                emit_json(out, &render::validation_json(&algebra, &r));
            } else {
                out.push_str(&print_presentation(&algebra));
            }
            EXIT_OK
        }
        Err(e) => {
            let _ = writeln!(err, "{}: {e}", describe(pair.name()));
            EXIT_FAIL
        }
    }
}

fn cmd_hypergraph(src: Loaded, dot: bool, json: bool, out: &mut String, err: &mut String) -> i32 {
    match src.source {
        SourceFile::Presentation(p) => {
            let p = match require_almost_gentle(p, err) {
                Ok(p) => p,
                Err(code) => return code,
            };
            let h = hypergraph_of(&p).expect("validated above");
            if dot {
                out.push_str(&render::hypergraph_dot(p.name(), &h));
            } else if json {
                emit_json(out, &render::hypergraph_json(p.name(), &h));
            } else {
                let _ = writeln!(out, "{}: oriented hypergraph", describe(p.name()));
                for (x, v) in h.vertices.iter().enumerate() {
                    let orientation: Vec<&str> = h.orientations[x]
                        .iter()
                        .map(|&e| h.hyperedges[e].label.as_str())
                        .collect();
                    let _ = writeln!(
                        out,
                        "  vertex {}: {} ({}) orientation ({})",
                        x + 1,
                        v.label,
                        match v.kind {
                            crate::hypergraph::HVertexKind::MaximalPath { .. } => "maximal path",
                            crate::hypergraph::HVertexKind::Truncation { .. } => "truncation",
                        },
                        orientation.join(", ")
                    );
                }
                for e in &h.hyperedges {
                    let members: Vec<String> =
                        e.members.iter().map(|&x| (x + 1).to_string()).collect();
                    let _ = writeln!(out, "  V_{} = {{{}}}", e.label, members.join(", "));
                }
            }
            EXIT_OK
        }
        SourceFile::Pair(input) => {
            let pair = match require_pair(&input, err) {
                Ok(pair) => pair,
                Err(code) => return code,
            };
            let q = pair.quiver();
            let c = configuration_of_pair(&pair);
            let class_labels: Vec<String> =
                pair.classes().iter().map(|k| k.representative().display(q)).collect();
            let polygon_labels = q.vertex_names().to_vec();
            if dot {
                out.push_str(&render::configuration_dot(
                    pair.name(),
                    &c,
                    &class_labels,
                    &polygon_labels,
                ));
            } else if json {
                emit_json(
                    out,
                    &render::configuration_json(pair.name(), &c, &class_labels, &polygon_labels),
                );
            } else {
                let _ = writeln!(out, "{}: Brauer configuration", describe(pair.name()));
                for (i, label) in class_labels.iter().enumerate() {
                    let orientation: Vec<&str> = c.orientations[i]
                        .iter()
                        .map(|&v| polygon_labels[v].as_str())
                        .collect();
                    let _ = writeln!(
                        out,
                        "  vertex {}: {} (multiplicity {}) orientation ({})",
                        i + 1,
                        label,
                        c.multiplicities[i],
                        orientation.join(", ")
                    );
                }
                for (v, polygon) in c.polygons.iter().enumerate() {
                    let members: Vec<String> =
                        polygon.iter().map(|&i| (i + 1).to_string()).collect();
                    let _ = writeln!(
                        out,
                        "  V_{} = {{{}}}",
                        polygon_labels[v],
                        members.join(", ")
                    );
                }
            }
            EXIT_OK
        }
    }
}

fn cmd_compare(
    left: Loaded,
    right: Loaded,
    budget: u64,
    json: bool,
    out: &mut String,
    err: &mut String,
) -> i32 {
    match (left.source, right.source) {
        (SourceFile::Presentation(a), SourceFile::Presentation(b)) => {
            let a = match require_almost_gentle(a, err) {
                Ok(a) => a,
                Err(code) => return code,
            };
            let b = match require_almost_gentle(b, err) {
                Ok(b) => b,
                Err(code) => return code,
            };
            let ha = hypergraph_of(&a).expect("validated above");
            let hb = hypergraph_of(&b).expect("validated above");
            let outcome = hypergraphs_isomorphic(&ha, &hb, budget);
            let (verdict, code) = match &outcome {
                IsoOutcome::Iso(_) => ("trivial extensions isomorphic", EXIT_OK),
                IsoOutcome::NonIso => ("trivial extensions not isomorphic", EXIT_FAIL),
                IsoOutcome::Undecided => ("undecided: search budget exhausted", EXIT_UNDECIDED),
            };
            if json {
                let witness = outcome.witness().map(|w| {
                    serde_json::json!({
                        "vertices": ha
                            .vertices
                            .iter()
                            .zip(&w.vertex_map)
                            .map(|(v, &y)| [v.label.clone(), hb.vertices[y].label.clone()])
                            .collect::<Vec<_>>(),
                        "hyperedges": ha
                            .hyperedges
                            .iter()
                            .zip(&w.edge_map)
                            .map(|(e, &f)| [e.label.clone(), hb.hyperedges[f].label.clone()])
                            .collect::<Vec<_>>(),
                    })
                });
                emit_json(
                    out,
                    &serde_json::json!({
                        "format": 1,
                        "kind": "compare",
                        "left": a.name(),
                        "right": b.name(),
                        "verdict": verdict,
                        "isomorphic": outcome.is_iso(),
                        "witness": witness,
                    }),
                );
            } else {
                let _ = writeln!(out, "{verdict}");
                if let Some(w) = outcome.witness() {
                    for (v, &y) in ha.vertices.iter().zip(&w.vertex_map) {
                        let _ = writeln!(out, "  {} -> {}", v.label, hb.vertices[y].label);
                    }
                    for (e, &f) in ha.hyperedges.iter().zip(&w.edge_map) {
                        let _ =
                            writeln!(out, "  V_{} -> V_{}", e.label, hb.hyperedges[f].label);
                    }
                }
            }
            code
        }
        (SourceFile::Pair(a), SourceFile::Pair(b)) => {
            let pa = match require_pair(&a, err) {
                Ok(p) => p,
                Err(code) => return code,
            };
            let pb = match require_pair(&b, err) {
                Ok(p) => p,
                Err(code) => return code,
            };
            let outcome = pairs_isomorphic(&pa, &pb, budget);
            let (verdict, code) = match &outcome {
                IsoOutcome::Iso(_) => ("defining pairs isomorphic", EXIT_OK),
                IsoOutcome::NonIso => ("defining pairs not isomorphic", EXIT_FAIL),
                IsoOutcome::Undecided => ("undecided: search budget exhausted", EXIT_UNDECIDED),
            };
            let (qa, qb) = (pa.quiver(), pb.quiver());
            if json {
                let witness = outcome.witness().map(|w| {
                    serde_json::json!({
                        "vertices": qa
                            .vertex_ids()
                            .map(|v| [qa.vertex_name(v), qb.vertex_name(w.vertex_map[v.0])])
                            .collect::<Vec<_>>(),
                        "arrows": qa
                            .arrow_ids()
                            .map(|a| [qa.arrow_name(a), qb.arrow_name(w.arrow_map[a.0])])
                            .collect::<Vec<_>>(),
                    })
                });
                emit_json(
                    out,
                    &serde_json::json!({
                        "format": 1,
                        "kind": "compare",
                        "left": pa.name(),
                        "right": pb.name(),
                        "verdict": verdict,
                        "isomorphic": outcome.is_iso(),
                        "witness": witness,
                    }),
                );
            } else {
                let _ = writeln!(out, "{verdict}");
                if let Some(w) = outcome.witness() {
                    for v in qa.vertex_ids() {
                        let _ = writeln!(
                            out,
                            "  {} -> {}",
                            qa.vertex_name(v),
                            qb.vertex_name(w.vertex_map[v.0])
                        );
                    }
                    for a in qa.arrow_ids() {
                        let _ = writeln!(
                            out,
                            "  {} -> {}",
                            qa.arrow_name(a),
                            qb.arrow_name(w.arrow_map[a.0])
                        );
                    }
                }
            }
            code
        }
        _ => {
            err.push_str("compare needs two files of the same kind (two algebras or two pairs)\n");
            EXIT_USAGE
        }
    }
}

fn cmd_verify(src: Loaded, json: bool, out: &mut String, err: &mut String) -> i32 {
    let p = match src.presentation(err).and_then(|p| require_almost_gentle(p, err)) {
        Ok(p) => p,
        Err(code) => return code,
    };
    let report = match verify_star_iso(&p) {
        Ok(report) => report,
        Err(e) => {
            let _ = writeln!(err, "{}: {e}", describe(p.name()));
            return EXIT_FAIL;
        }
    };
    if json {
        emit_json(out, &render::verify_json(p.name(), &report));
    } else {
        let _ = writeln!(
            out,
            "{}: star presentation {} the trivial extension",
            describe(p.name()),
            if report.passed { "matches" } else { "DOES NOT match" }
        );
        let _ = writeln!(
            out,
            "  dimensions: star {} / trivial extension {}",
            report.star_dimension, report.trivial_dimension
        );
        let _ = writeln!(
            out,
            "  relations checked: {} of type 1, {} of type 2, {} of type 3",
            report.type1_checked, report.type2_checked, report.type3_checked
        );
        let _ = writeln!(
            out,
            "  socle checks: {} rotations; generated {} of {} basis elements",
            report.rotations_checked, report.generated, report.trivial_dimension
        );
        for f in report
            .type1_failures
            .iter()
            .chain(&report.type2_failures)
            .chain(&report.type3_failures)
            .chain(&report.socle_failures)
        {
            let _ = writeln!(out, "  failure: {f}");
        }
    }
    if report.passed {
        EXIT_OK
    } else {
        EXIT_FAIL
    }
}
