//! JSON and DOT serialization of reports and invariants.
//!
//! Every JSON document carries a top-level `"format": 1` key. Key order
//! comes from `serde_json`'s sorted maps and array order from the
//! underlying data, so identical inputs serialize byte-identically.

use serde_json::{json, Value};

use crate::brauer::BrauerConfiguration;
use crate::hypergraph::{HVertexKind, OrientedHypergraph};
use crate::pair::{DefiningPair, PairReport, PairViolation};
use crate::presentation::{Presentation, S1Violation, Side, StructuralError, ValidationReport};
use crate::quiver::Quiver;
use crate::trivial::StarIsoReport;

fn quiver_json(q: &Quiver) -> Value {
    json!({
        "vertices": q.vertex_names(),
        "arrows": q
            .arrow_ids()
            .map(|a| json!({
                "name": q.arrow_name(a),
                "source": q.vertex_name(q.source(a)),
                "target": q.vertex_name(q.target(a)),
            }))
            .collect::<Vec<_>>(),
    })
}

/// Renders a structural problem with arrow/vertex names filled in.
pub fn structural_text(q: &Quiver, e: &StructuralError) -> String {
    match e {
        StructuralError::NonComposableRelation(a, b) => format!(
            "relation `{} {}` does not compose",
            q.arrow_name(*a),
            q.arrow_name(*b)
        ),
        StructuralError::IsolatedVertex(v) => {
            format!("vertex `{}` has no arrows", q.vertex_name(*v))
        }
        StructuralError::Disconnected => "the quiver is not connected".to_string(),
    }
}

pub fn s1_text(q: &Quiver, v: &S1Violation) -> String {
    let candidates: Vec<&str> = v.candidates.iter().map(|&a| q.arrow_name(a)).collect();
    let side = match v.side {
        Side::Successor => "successors",
        Side::Predecessor => "predecessors",
    };
    format!(
        "arrow `{}` has {} relation-free {side}: {}",
        q.arrow_name(v.arrow),
        v.candidates.len(),
        candidates.join(", ")
    )
}

pub fn cycle_text(q: &Quiver, cycle: &[crate::quiver::ArrowId]) -> String {
    cycle.iter().map(|&a| q.arrow_name(a)).collect::<Vec<_>>().join("*")
}

/// All problems of a validation report as display strings.
pub fn validation_problems(q: &Quiver, r: &ValidationReport) -> Vec<String> {
    let mut out = Vec::new();
    for e in &r.structural {
        out.push(structural_text(q, e));
    }
    for v in &r.s1_violations {
        out.push(s1_text(q, v));
    }
    for cycle in &r.unrelieved_cycles {
        out.push(format!(
            "the cycle {} survives the relations, so the algebra is infinite-dimensional",
            cycle_text(q, cycle)
        ));
    }
    out
}

pub fn validation_json(p: &Presentation, r: &ValidationReport) -> Value {
    json!({
        "format": 1,
        "kind": "presentation",
        "name": p.name(),
        "quiver": quiver_json(p.quiver()),
        "relations": p
            .relations()
            .map(|(a, b)| [p.quiver().arrow_name(a), p.quiver().arrow_name(b)])
            .collect::<Vec<_>>(),
        "almost_gentle": r.is_almost_gentle,
        "gentle": r.is_gentle,
        "finite_dimensional": r.is_finite_dimensional,
        "problems": validation_problems(p.quiver(), r),
    })
}

pub fn pair_violation_text(q: &Quiver, report: &PairReport, v: &PairViolation) -> String {
    let class_name =
        |i: usize| report.classes[i].representative().display(q);
    match v {
        PairViolation::LoopNeedsHigherMultiplicity { class } => format!(
            "cycle {} is a loop, so its multiplicity must be at least 2",
            class_name(*class)
        ),
        PairViolation::MultiplicityConflict { class, seen } => format!(
            "cycle {} was given conflicting multiplicities {:?}",
            class_name(*class),
            seen
        ),
        PairViolation::UncoveredArrow(a) => {
            format!("arrow `{}` lies on no cycle", q.arrow_name(*a))
        }
        PairViolation::ArrowInTwoClasses { arrow, classes } => format!(
            "arrow `{}` lies on two cycles: {} and {}",
            q.arrow_name(*arrow),
            class_name(classes.0),
            class_name(classes.1)
        ),
    }
}

pub fn pair_report_json(name: Option<&str>, q: &Quiver, report: &PairReport) -> Value {
    json!({
        "format": 1,
        "kind": "pair",
        "name": name,
        "quiver": quiver_json(q),
        "classes": report
            .classes
            .iter()
            .map(|c| json!({
                "cycle": c.representative().display(q),
                "length": c.len(),
                "multiplicity": c.multiplicity(),
            }))
            .collect::<Vec<_>>(),
        "valid": report.is_valid(),
        "problems": report
            .violations
            .iter()
            .map(|v| pair_violation_text(q, report, v))
            .collect::<Vec<_>>(),
        "warnings": report.warnings,
    })
}

pub fn pair_json(pair: &DefiningPair) -> Value {
    let q = pair.quiver();
    json!({
        "format": 1,
        "kind": "pair",
        "name": pair.name(),
        "quiver": quiver_json(q),
        "classes": pair
            .classes()
            .iter()
            .map(|c| json!({
                "cycle": c.representative().display(q),
                "length": c.len(),
                "multiplicity": c.multiplicity(),
            }))
            .collect::<Vec<_>>(),
    })
}

pub fn hypergraph_json(name: Option<&str>, h: &OrientedHypergraph) -> Value {
    json!({
        "format": 1,
        "kind": "hypergraph",
        "name": name,
        "vertices": h
            .vertices
            .iter()
            .zip(&h.orientations)
            .map(|(v, orientation)| json!({
                "label": v.label,
                "kind": match v.kind {
                    HVertexKind::MaximalPath { .. } => "maximal_path",
                    HVertexKind::Truncation { .. } => "truncation",
                },
                "multiplicity": v.multiplicity,
                "orientation": orientation,
            }))
            .collect::<Vec<_>>(),
        "hyperedges": h
            .hyperedges
            .iter()
            .map(|e| json!({"vertex": e.label, "members": e.members}))
            .collect::<Vec<_>>(),
    })
}

/// `polygon_labels` are the quiver vertex names, `class_labels` the
/// cycle displays (or maximal paths) the configuration vertices stand
/// for.
pub fn configuration_json(
    name: Option<&str>,
    c: &BrauerConfiguration,
    class_labels: &[String],
    polygon_labels: &[String],
) -> Value {
    json!({
        "format": 1,
        "kind": "configuration",
        "name": name,
        "vertices": c
            .multiplicities
            .iter()
            .zip(class_labels)
            .zip(&c.orientations)
            .map(|((m, label), orientation)| json!({
                "label": label,
                "multiplicity": m,
                "orientation": orientation,
            }))
            .collect::<Vec<_>>(),
        "polygons": c
            .polygons
            .iter()
            .zip(polygon_labels)
            .map(|(members, label)| json!({"vertex": label, "members": members}))
            .collect::<Vec<_>>(),
    })
}

pub fn verify_json(name: Option<&str>, r: &StarIsoReport) -> Value {
    json!({
        "format": 1,
        "kind": "verify",
        "name": name,
        "passed": r.passed,
        "star_dimension": r.star_dimension,
        "trivial_extension_dimension": r.trivial_dimension,
        "generated": r.generated,
        "rotations_checked": r.rotations_checked,
        "checked": {
            "type1": r.type1_checked,
            "type2": r.type2_checked,
            "type3": r.type3_checked,
        },
        "failures": {
            "type1": r.type1_failures,
            "type2": r.type2_failures,
            "type3": r.type3_failures,
            "socle": r.socle_failures,
        },
    })
}

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

fn dot_graph(
    name: Option<&str>,
    round_nodes: &[String],
    box_nodes: &[String],
    orientations: &[Vec<usize>],
) -> String {
    let mut out = String::new();
    out.push_str(&format!("digraph \"{}\" {{\n", dot_escape(name.unwrap_or("hypergraph"))));
    out.push_str("  rankdir=LR;\n");
    out.push_str("  node [shape=ellipse];\n");
    for (i, label) in round_nodes.iter().enumerate() {
        out.push_str(&format!("  x{i} [label=\"{}\"];\n", dot_escape(label)));
    }
    out.push_str("  node [shape=box];\n");
    for (i, label) in box_nodes.iter().enumerate() {
        out.push_str(&format!("  V{i} [label=\"{}\"];\n", dot_escape(label)));
    }
    for (i, orientation) in orientations.iter().enumerate() {
        for (pos, &e) in orientation.iter().enumerate() {
            out.push_str(&format!("  x{i} -> V{e} [label=\"{pos}\"];\n"));
        }
    }
    out.push_str("}\n");
    out
}

/// DOT export: h-vertices as ellipses, hyperedges as boxes, one
/// position-labeled edge per orientation slot.
pub fn hypergraph_dot(name: Option<&str>, h: &OrientedHypergraph) -> String {
    let round: Vec<String> = h.vertices.iter().map(|v| v.label.clone()).collect();
    let boxes: Vec<String> = h.hyperedges.iter().map(|e| e.label.clone()).collect();
    dot_graph(name, &round, &boxes, &h.orientations)
}

/// DOT export of a configuration, with the same conventions.
pub fn configuration_dot(
    name: Option<&str>,
    c: &BrauerConfiguration,
    class_labels: &[String],
    polygon_labels: &[String],
) -> String {
    dot_graph(name, class_labels, polygon_labels, &c.orientations)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brauer::configuration_of_pair;
    use crate::hypergraph::hypergraph_of;
    use crate::sample;
    use crate::star::star;

    #[test]
    fn json_documents_carry_the_format_key() {
        let p = sample::ag1();
        let r = p.validate();
        for doc in [
            validation_json(&p, &r),
            hypergraph_json(p.name(), &hypergraph_of(&p).unwrap()),
            verify_json(p.name(), &crate::trivial::verify_star_iso(&p).unwrap()),
        ] {
            assert_eq!(doc["format"], 1, "{doc}");
        }
    }

    #[test]
    fn dot_output_shape() {
        let p = sample::ag1();
        let dot = hypergraph_dot(p.name(), &hypergraph_of(&p).unwrap());
        assert!(dot.starts_with("digraph \"ag1\" {"));
        assert!(dot.contains("x0 [label=\"a1*a2*a3\"];"));
        assert!(dot.contains("V2 [label=\"v3\"];"));
        assert!(dot.contains("x3 -> V2 [label=\"0\"];"));
        assert!(dot.ends_with("}\n"));
        // Hypergraph and configuration exports agree on shared nodes.
        let s = star(&p).unwrap();
        let c = configuration_of_pair(&s.pair);
        let labels: Vec<String> =
            s.pair.classes().iter().map(|k| k.representative().display(s.quiver())).collect();
        let names = s.quiver().vertex_names().to_vec();
        let cfg = configuration_dot(p.name(), &c, &labels, &names);
        assert!(cfg.contains("x0 [label=\"a1*a2*a3*a_m1\"];"));
    }

    #[test]
    fn validation_json_reports_problems() {
        let p = crate::presentation::Presentation::from_names(
            None,
            &["u", "v"],
            &[("a", "u", "v"), ("b", "u", "v"), ("c", "v", "u")],
            &[],
        );
        let r = p.validate();
        let doc = validation_json(&p, &r);
        assert_eq!(doc["almost_gentle"], false);
        let problems = doc["problems"].as_array().unwrap();
        assert!(!problems.is_empty());
    }
}
