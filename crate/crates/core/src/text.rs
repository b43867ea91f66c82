//! The presentation language: a line-oriented text format for quivers
//! with relations or with cycle families, plus canonical printers.
//!
//! ```text
//! # comments run to the end of the line
//! algebra NAME            # optional, at most once
//! vertices ID ID ...      # may repeat; declares in order
//! arrow ID SRC TGT
//! rel A B                 # the relation A·B = 0
//! cycle [mult=N] ID ...   # a simple cycle; mult defaults to 1
//! ```
//!
//! A file with at least one `cycle` line describes a defining pair,
//! otherwise a presentation; the two kinds of line cannot be mixed.
//! Identifiers may not contain whitespace, `#` or `=`, and everything
//! must be declared before use. All diagnostics carry 1-based line and
//! byte-column positions.

use std::collections::HashMap;
use std::fmt;

use crate::pair::{validate_pair, PairReport, SimpleCycle};
use crate::presentation::Presentation;
use crate::quiver::{ArrowId, Quiver};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for ParseError {}

/// The cycles of a pair file, before axiom checking.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PairInput {
    pub name: Option<String>,
    pub quiver: Quiver,
    pub cycles: Vec<(SimpleCycle, u32)>,
}

impl PairInput {
    /// Runs the D0–D4 axiom checks on the parsed cycles.
    pub fn validate(&self) -> PairReport {
        validate_pair(self.name.as_deref(), &self.quiver, &self.cycles)
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum SourceFile {
    Presentation(Presentation),
    Pair(PairInput),
}

impl SourceFile {
    pub fn name(&self) -> Option<&str> {
        match self {
            SourceFile::Presentation(p) => p.name(),
            SourceFile::Pair(p) => p.name.as_deref(),
        }
    }
}

struct Cursor {
    line: usize,
    column: usize,
}

fn err(at: Cursor, message: impl Into<String>) -> ParseError {
    ParseError { line: at.line, column: at.column, message: message.into() }
}

/// Splits a line into `(byte column, token)` pairs, dropping comments.
fn tokenize(line: &str) -> Vec<(usize, &str)> {
    let effective = match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    };
    let mut tokens = Vec::new();
    let mut start = None;
    for (i, ch) in effective.char_indices() {
        if ch.is_whitespace() {
            if let Some(s) = start.take() {
                tokens.push((s + 1, &effective[s..i]));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        tokens.push((s + 1, &effective[s..]));
    }
    tokens
}

fn check_identifier(tok: &str, at: Cursor) -> Result<(), ParseError> {
    if tok.contains('=') {
        return Err(err(at, format!("identifier `{tok}` may not contain `=`")));
    }
    Ok(())
}

/// Parses the text format. A file containing a `cycle` line yields a
/// [`SourceFile::Pair`], anything else a [`SourceFile::Presentation`].
pub fn parse(text: &str) -> Result<SourceFile, ParseError> {
    let mut name: Option<String> = None;
    let mut vertices: Vec<String> = Vec::new();
    let mut vertex_index: HashMap<String, usize> = HashMap::new();
    let mut arrows: Vec<(String, usize, usize)> = Vec::new();
    let mut arrow_index: HashMap<String, usize> = HashMap::new();
    let mut relations: Vec<(usize, usize)> = Vec::new();
    let mut cycles: Vec<(Vec<usize>, u32)> = Vec::new();
    let mut first_rel_line = None;
    let mut first_cycle_line = None;

    for (line_no, raw) in text.lines().enumerate() {
        let line_no = line_no + 1;
        let at = |column: usize| Cursor { line: line_no, column };
        let tokens = tokenize(raw);
        let Some(&(head_col, head)) = tokens.first() else { continue };
        let args = &tokens[1..];

        match head {
            "algebra" => {
                let [(col, arg)] = args else {
                    return Err(err(at(head_col), "`algebra` takes exactly one name"));
                };
                check_identifier(arg, at(*col))?;
                if name.is_some() {
                    return Err(err(at(head_col), "`algebra` was already given"));
                }
                name = Some(arg.to_string());
            }
            "vertices" => {
                if args.is_empty() {
                    return Err(err(at(head_col), "`vertices` needs at least one identifier"));
                }
                for &(col, v) in args {
                    check_identifier(v, at(col))?;
                    if vertex_index.contains_key(v) {
                        return Err(err(at(col), format!("duplicate vertex `{v}`")));
                    }
                    vertex_index.insert(v.to_string(), vertices.len());
                    vertices.push(v.to_string());
                }
            }
            "arrow" => {
                let [(name_col, a), (src_col, src), (tgt_col, tgt)] = args else {
                    return Err(err(at(head_col), "`arrow` takes a name, a source and a target"));
                };
                check_identifier(a, at(*name_col))?;
                if arrow_index.contains_key(*a) {
                    return Err(err(at(*name_col), format!("duplicate arrow `{a}`")));
                }
                let &s = vertex_index
                    .get(*src)
                    .ok_or_else(|| err(at(*src_col), format!("unknown vertex `{src}`")))?;
                let &t = vertex_index
                    .get(*tgt)
                    .ok_or_else(|| err(at(*tgt_col), format!("unknown vertex `{tgt}`")))?;
                arrow_index.insert(a.to_string(), arrows.len());
                arrows.push((a.to_string(), s, t));
            }
            "rel" => {
                if let Some(cycle_line) = first_cycle_line {
                    return Err(err(
                        at(head_col),
                        format!("`rel` cannot be mixed with the `cycle` on line {cycle_line}"),
                    ));
                }
                first_rel_line.get_or_insert(line_no);
                let [(a_col, a), (b_col, b)] = args else {
                    return Err(err(at(head_col), "`rel` takes exactly two arrows"));
                };
                let &ai = arrow_index
                    .get(*a)
                    .ok_or_else(|| err(at(*a_col), format!("unknown arrow `{a}`")))?;
                let &bi = arrow_index
                    .get(*b)
                    .ok_or_else(|| err(at(*b_col), format!("unknown arrow `{b}`")))?;
                if arrows[ai].2 != arrows[bi].1 {
                    return Err(err(
                        at(*b_col),
                        format!(
                            "`{a}` ends at `{}` but `{b}` starts at `{}`: the relation does not compose",
                            vertices[arrows[ai].2], vertices[arrows[bi].1]
                        ),
                    ));
                }
                if relations.contains(&(ai, bi)) {
                    return Err(err(at(*a_col), format!("duplicate relation `{a} {b}`")));
                }
                relations.push((ai, bi));
            }
            "cycle" => {
                if let Some(rel_line) = first_rel_line {
                    return Err(err(
                        at(head_col),
                        format!("`cycle` cannot be mixed with the `rel` on line {rel_line}"),
                    ));
                }
                first_cycle_line.get_or_insert(line_no);
                let mut args = args;
                let mut mult = 1u32;
                if let Some(&(col, tok)) = args.first() {
                    if let Some(rest) = tok.strip_prefix("mult=") {
                        mult = rest.parse().map_err(|_| {
                            err(at(col), format!("`{tok}` is not a positive multiplicity"))
                        })?;
                        if mult == 0 {
                            return Err(err(at(col), "multiplicity must be at least 1"));
                        }
                        args = &args[1..];
                    }
                }
                if args.is_empty() {
                    return Err(err(at(head_col), "`cycle` needs at least one arrow"));
                }
                let mut ids = Vec::with_capacity(args.len());
                for &(col, a) in args {
                    check_identifier(a, at(col))?;
                    let &ai = arrow_index
                        .get(a)
                        .ok_or_else(|| err(at(col), format!("unknown arrow `{a}`")))?;
                    if ids.contains(&ai) {
                        return Err(err(at(col), format!("arrow `{a}` repeats within the cycle")));
                    }
                    ids.push(ai);
                }
                for i in 0..ids.len() {
                    let j = (i + 1) % ids.len();
                    if arrows[ids[i]].2 != arrows[ids[j]].1 {
                        let (col, tok) = args[j];
                        return Err(err(
                            at(col),
                            format!(
                                "cycle breaks: `{}` ends at `{}` but `{tok}` starts at `{}`",
                                args[i].1, vertices[arrows[ids[i]].2], vertices[arrows[ids[j]].1]
                            ),
                        ));
                    }
                }
                cycles.push((ids, mult));
            }
            other => {
                return Err(err(
                    at(head_col),
                    format!(
                        "unknown directive `{other}` (expected algebra, vertices, arrow, rel or cycle)"
                    ),
                ));
            }
        }
    }

    let vertex_refs: Vec<&str> = vertices.iter().map(|s| s.as_str()).collect();
    let arrow_decls: Vec<(&str, &str, &str)> = arrows
        .iter()
        .map(|(n, s, t)| (n.as_str(), vertex_refs[*s], vertex_refs[*t]))
        .collect();
    let quiver = Quiver::new(&vertex_refs, &arrow_decls).expect("parser pre-checked declarations");

    if first_cycle_line.is_some() {
        let cycles = cycles
            .into_iter()
            .map(|(ids, mult)| {
                let cycle = SimpleCycle::new(&quiver, ids.into_iter().map(ArrowId).collect())
                    .expect("parser pre-checked cycles");
                (cycle, mult)
            })
            .collect();
        Ok(SourceFile::Pair(PairInput { name, quiver, cycles }))
    } else {
        let relations = relations.into_iter().map(|(a, b)| (ArrowId(a), ArrowId(b))).collect();
        let p = Presentation::new(quiver, relations)
            .expect("parser pre-checked relations")
            .with_name(name);
        Ok(SourceFile::Presentation(p))
    }
}

/// Prints a presentation in the text format; `parse` returns it
/// structurally unchanged. Relations are emitted in declaration-index
/// order, so the output is canonical for the object.
pub fn print_presentation(p: &Presentation) -> String {
    let q = p.quiver();
    let mut out = String::new();
    if let Some(name) = p.name() {
        out.push_str(&format!("algebra {name}\n"));
    }
    push_quiver(&mut out, q);
    for (a, b) in p.relations() {
        out.push_str(&format!("rel {} {}\n", q.arrow_name(a), q.arrow_name(b)));
    }
    out
}

/// Prints a defining pair: one `cycle` line per class, using the
/// canonical rotation, with `mult=` only when it is not 1.
pub fn print_pair(pair: &crate::pair::DefiningPair) -> String {
    let q = pair.quiver();
    let mut out = String::new();
    if let Some(name) = pair.name() {
        out.push_str(&format!("algebra {name}\n"));
    }
    push_quiver(&mut out, q);
    for class in pair.classes() {
        out.push_str("cycle ");
        if class.multiplicity() != 1 {
            out.push_str(&format!("mult={} ", class.multiplicity()));
        }
        let names: Vec<&str> =
            class.representative().arrows().iter().map(|&a| q.arrow_name(a)).collect();
        out.push_str(&names.join(" "));
        out.push('\n');
    }
    out
}

fn push_quiver(out: &mut String, q: &Quiver) {
    if q.vertex_count() > 0 {
        out.push_str("vertices ");
        out.push_str(
            &q.vertex_names().iter().map(|s| s.as_str()).collect::<Vec<_>>().join(" "),
        );
        out.push('\n');
    }
    for a in q.arrow_ids() {
        out.push_str(&format!(
            "arrow {} {} {}\n",
            q.arrow_name(a),
            q.vertex_name(q.source(a)),
            q.vertex_name(q.target(a))
        ));
    }
}
