//! Quiver presentations `KQ/I` whose ideal is generated by length-two
//! paths, and the path combinatorics available when the presentation is
//! almost gentle.
//!
//! The conditions checked by [`Presentation::validate`]:
//!
//! * structural soundness: relations compose, no isolated vertices, the
//!   underlying graph is connected;
//! * (S1) every arrow `a` admits at most one arrow `b` with `ab ∉ I` and
//!   at most one arrow `c` with `ca ∉ I`;
//! * finite dimension: no oriented cycle of arrows avoids the relations.
//!
//! A presentation passing all three is *almost gentle*; it is *gentle*
//! when additionally every arrow has at most one relation successor and
//! predecessor (S2) and every vertex meets at most two incoming and two
//! outgoing arrows (S3).
//!
//! For an almost gentle presentation every arrow lies on exactly one
//! maximal path, and the nontrivial paths avoiding the relations are
//! precisely the subpaths of maximal paths. That gives the closed
//! dimension formula checked against enumeration in [`Presentation::dimension`].

use std::collections::BTreeSet;
use std::fmt;

use crate::quiver::{ArrowId, Path, Quiver, VertexId};

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PresentationError {
    #[error("relation arrow index {0} out of range")]
    UnknownArrow(usize),
    #[error("duplicate relation `{0} {1}`")]
    DuplicateRelation(String, String),
}

/// A quiver together with a set of length-two monomial relations.
///
/// The relation `(a, b)` stands for the path `a·b` lying in the ideal.
/// Non-composable relation pairs are representable — [`Presentation::validate`]
/// reports them as structural errors — but duplicates are rejected at
/// construction.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Presentation {
    name: Option<String>,
    quiver: Quiver,
    relations: BTreeSet<(ArrowId, ArrowId)>,
}

impl Presentation {
    pub fn new(
        quiver: Quiver,
        relations: Vec<(ArrowId, ArrowId)>,
    ) -> Result<Self, PresentationError> {
        let mut set = BTreeSet::new();
        for (a, b) in relations {
            for x in [a, b] {
                if x.0 >= quiver.arrow_count() {
                    return Err(PresentationError::UnknownArrow(x.0));
                }
            }
            if !set.insert((a, b)) {
                return Err(PresentationError::DuplicateRelation(
                    quiver.arrow_name(a).to_string(),
                    quiver.arrow_name(b).to_string(),
                ));
            }
        }
        Ok(Presentation { name: None, quiver, relations: set })
    }

    /// Convenience constructor resolving every identifier by name.
    pub fn from_names(
        name: Option<&str>,
        vertices: &[&str],
        arrows: &[(&str, &str, &str)],
        relations: &[(&str, &str)],
    ) -> Self {
        let quiver = Quiver::new(vertices, arrows).expect("well-formed quiver");
        let rels = relations
            .iter()
            .map(|(a, b)| {
                (
                    quiver.arrow_id(a).expect("known arrow"),
                    quiver.arrow_id(b).expect("known arrow"),
                )
            })
            .collect();
        let mut p = Presentation::new(quiver, rels).expect("well-formed relations");
        p.name = name.map(|n| n.to_string());
        p
    }

    pub fn with_name(mut self, name: Option<String>) -> Self {
        self.name = name;
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn relations(&self) -> impl Iterator<Item = (ArrowId, ArrowId)> + '_ {
        self.relations.iter().copied()
    }

    pub fn relation_count(&self) -> usize {
        self.relations.len()
    }

    pub fn is_relation(&self, a: ArrowId, b: ArrowId) -> bool {
        self.relations.contains(&(a, b))
    }

    /// Checks the structural, (S1) and finite-dimension conditions and
    /// derives the almost gentle / gentle verdicts. Problems are
    /// reported, never thrown.
    pub fn validate(&self) -> ValidationReport {
        let q = &self.quiver;
        let mut structural = Vec::new();

        for &(a, b) in &self.relations {
            if !q.composable(a, b) {
                structural.push(StructuralError::NonComposableRelation(a, b));
            }
        }
        if q.vertex_count() > 1 {
            for v in q.vertex_ids() {
                let isolated = q
                    .arrow_ids()
                    .all(|a| q.source(a) != v && q.target(a) != v);
                if isolated {
                    structural.push(StructuralError::IsolatedVertex(v));
                }
            }
            if !q.is_connected() {
                structural.push(StructuralError::Disconnected);
            }
        }

        let mut s1_violations = Vec::new();
        for a in q.arrow_ids() {
            let succ: Vec<ArrowId> = q
                .arrow_ids()
                .filter(|&b| q.composable(a, b) && !self.is_relation(a, b))
                .collect();
            if succ.len() > 1 {
                s1_violations.push(S1Violation {
                    arrow: a,
                    side: Side::Successor,
                    candidates: succ,
                });
            }
            let pred: Vec<ArrowId> = q
                .arrow_ids()
                .filter(|&c| q.composable(c, a) && !self.is_relation(c, a))
                .collect();
            if pred.len() > 1 {
                s1_violations.push(S1Violation {
                    arrow: a,
                    side: Side::Predecessor,
                    candidates: pred,
                });
            }
        }

        // A path avoiding the relations can be extended forever exactly
        // when the graph on arrows with edges `a → b` for composable
        // non-relations has a directed cycle.
        let unrelieved_cycles = directed_cycles(q.arrow_count(), |a, b| {
            q.composable(ArrowId(a), ArrowId(b)) && !self.is_relation(ArrowId(a), ArrowId(b))
        });
        let is_finite_dimensional = unrelieved_cycles.is_empty();

        let is_almost_gentle =
            structural.is_empty() && s1_violations.is_empty() && is_finite_dimensional;

        let mut gentle_extra = true;
        for a in q.arrow_ids() {
            let rel_succ = q
                .arrow_ids()
                .filter(|&b| q.composable(a, b) && self.is_relation(a, b))
                .count();
            let rel_pred = q
                .arrow_ids()
                .filter(|&c| q.composable(c, a) && self.is_relation(c, a))
                .count();
            if rel_succ > 1 || rel_pred > 1 {
                gentle_extra = false; // (S2)
            }
        }
        for v in q.vertex_ids() {
            if q.arrows_from(v).len() > 2 || q.arrows_into(v).len() > 2 {
                gentle_extra = false; // (S3)
            }
        }

        ValidationReport {
            structural,
            s1_violations,
            unrelieved_cycles,
            is_finite_dimensional,
            is_almost_gentle,
            is_gentle: is_almost_gentle && gentle_extra,
        }
    }

    fn require_almost_gentle(&self) -> Result<(), AlgebraError> {
        let report = self.validate();
        if report.is_almost_gentle {
            Ok(())
        } else {
            Err(AlgebraError::NotAlmostGentle(Box::new(report)))
        }
    }

    fn check_arrow(&self, a: ArrowId) -> Result<(), AlgebraError> {
        if a.0 < self.quiver.arrow_count() {
            Ok(())
        } else {
            Err(AlgebraError::UnknownArrow(a.0))
        }
    }

    // σ and τ lookups for presentations already known to satisfy (S1).
    fn sigma(&self, a: ArrowId) -> Option<ArrowId> {
        self.quiver
            .arrow_ids()
            .find(|&b| self.quiver.composable(a, b) && !self.is_relation(a, b))
    }

    fn tau(&self, a: ArrowId) -> Option<ArrowId> {
        self.quiver
            .arrow_ids()
            .find(|&c| self.quiver.composable(c, a) && !self.is_relation(c, a))
    }

    /// The unique arrow `b` with `ab ∉ I`, or `None` for the end marker.
    pub fn successor(&self, a: ArrowId) -> Result<Option<ArrowId>, AlgebraError> {
        self.check_arrow(a)?;
        self.require_almost_gentle()?;
        Ok(self.sigma(a))
    }

    /// The unique arrow `c` with `ca ∉ I`, or `None` for the end marker.
    pub fn predecessor(&self, a: ArrowId) -> Result<Option<ArrowId>, AlgebraError> {
        self.check_arrow(a)?;
        self.require_almost_gentle()?;
        Ok(self.tau(a))
    }

    /// The maximal paths, each arrow appearing in exactly one of them,
    /// sorted by the index of their first arrow.
    pub fn maximal_paths(&self) -> Result<Vec<MaximalPath>, AlgebraError> {
        self.require_almost_gentle()?;
        let m = self.quiver.arrow_count();
        let mut owner: Vec<Option<usize>> = vec![None; m];
        let mut raw: Vec<Vec<ArrowId>> = Vec::new();
        for a in self.quiver.arrow_ids() {
            if owner[a.0].is_some() {
                continue;
            }
            let mut first = a;
            let mut steps = 0usize;
            while let Some(p) = self.tau(first) {
                first = p;
                steps += 1;
                if steps > m {
                    return Err(AlgebraError::Internal(
                        "predecessor chain does not terminate".into(),
                    ));
                }
            }
            let mut arrows = vec![first];
            let mut cur = first;
            while let Some(n) = self.sigma(cur) {
                arrows.push(n);
                cur = n;
                if arrows.len() > m {
                    return Err(AlgebraError::Internal(
                        "successor chain does not terminate".into(),
                    ));
                }
            }
            let idx = raw.len();
            for &x in &arrows {
                if owner[x.0].is_some() {
                    return Err(AlgebraError::Internal(format!(
                        "arrow `{}` lies on two maximal paths",
                        self.quiver.arrow_name(x)
                    )));
                }
                owner[x.0] = Some(idx);
            }
            raw.push(arrows);
        }
        if owner.iter().any(|o| o.is_none()) {
            return Err(AlgebraError::Internal(
                "an arrow lies on no maximal path".into(),
            ));
        }
        raw.sort_by_key(|arrows| arrows[0]);
        let mut out = Vec::with_capacity(raw.len());
        for (index, arrows) in raw.into_iter().enumerate() {
            let path = Path::from_arrows(&self.quiver, arrows)
                .map_err(|e| AlgebraError::Internal(format!("broken maximal path: {e}")))?;
            out.push(MaximalPath { index, path });
        }
        Ok(out)
    }

    /// The monomial basis: trivial paths followed by every subpath of a
    /// maximal path, ordered by (length, maximal path, start position).
    pub fn basis(&self) -> Result<Vec<Path>, AlgebraError> {
        let maximal = self.maximal_paths()?;
        let mut basis: Vec<Path> = self.quiver.vertex_ids().map(Path::trivial).collect();
        let longest = maximal.iter().map(|m| m.path.len()).max().unwrap_or(0);
        for len in 1..=longest {
            for m in &maximal {
                if m.path.len() < len {
                    continue;
                }
                for from in 0..=(m.path.len() - len) {
                    basis.push(m.path.subpath(&self.quiver, from, len));
                }
            }
        }
        Ok(basis)
    }

    /// `dim_K A`, computed both from the closed formula
    /// `|Q_0| + Σ_m ℓ(m)(ℓ(m)+1)/2` and by counting the basis.
    pub fn dimension(&self) -> Result<usize, AlgebraError> {
        let maximal = self.maximal_paths()?;
        let formula = self.quiver.vertex_count()
            + maximal
                .iter()
                .map(|m| m.path.len() * (m.path.len() + 1) / 2)
                .sum::<usize>();
        let enumerated = self.basis()?.len();
        if formula != enumerated {
            return Err(AlgebraError::Internal(format!(
                "dimension formula gives {formula} but the basis has {enumerated} elements"
            )));
        }
        Ok(formula)
    }

    /// The global dimension is finite exactly when no oriented cycle of
    /// arrows consists entirely of relation pairs.
    pub fn has_finite_global_dimension(&self) -> Result<bool, AlgebraError> {
        self.require_almost_gentle()?;
        let q = &self.quiver;
        let cycles = directed_cycles(q.arrow_count(), |a, b| {
            self.is_relation(ArrowId(a), ArrowId(b))
        });
        Ok(cycles.is_empty())
    }

    /// Independent oracle: enumerates all paths of length at most
    /// `max_len` containing no consecutive relation pair, by
    /// breadth-first extension. Requires only finite dimensionality,
    /// not (S1).
    pub fn brute_force_basis(&self, max_len: usize) -> Result<Vec<Path>, AlgebraError> {
        if !self.validate().is_finite_dimensional {
            return Err(AlgebraError::InfiniteDimensional);
        }
        let q = &self.quiver;
        let mut out: Vec<Path> = q.vertex_ids().map(Path::trivial).collect();
        let mut frontier = out.clone();
        for _ in 1..=max_len {
            let mut next = Vec::new();
            for p in &frontier {
                for b in q.arrows_from(p.target()) {
                    if let Some(last) = p.last_arrow() {
                        if self.is_relation(last, b) {
                            continue;
                        }
                    }
                    let ext = Path::from_arrows(
                        q,
                        p.arrows().iter().copied().chain([b]).collect(),
                    )
                    .expect("extension is composable");
                    next.push(ext);
                }
            }
            if next.is_empty() {
                break;
            }
            out.extend(next.iter().cloned());
            frontier = next;
        }
        Ok(out)
    }
}

/// A maximal path together with its canonical index.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MaximalPath {
    pub index: usize,
    pub path: Path,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Side {
    Successor,
    Predecessor,
}

/// An arrow with more than one relation-free continuation on one side.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct S1Violation {
    pub arrow: ArrowId,
    pub side: Side,
    pub candidates: Vec<ArrowId>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum StructuralError {
    NonComposableRelation(ArrowId, ArrowId),
    IsolatedVertex(VertexId),
    Disconnected,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ValidationReport {
    pub structural: Vec<StructuralError>,
    pub s1_violations: Vec<S1Violation>,
    /// Oriented arrow cycles avoiding the relations (witnesses of
    /// infinite dimension), one per offending strongly connected part.
    pub unrelieved_cycles: Vec<Vec<ArrowId>>,
    pub is_finite_dimensional: bool,
    pub is_almost_gentle: bool,
    pub is_gentle: bool,
}

impl ValidationReport {
    /// One-line summary used in error messages.
    pub fn summary(&self) -> String {
        let mut parts = Vec::new();
        if !self.structural.is_empty() {
            parts.push(format!("{} structural error(s)", self.structural.len()));
        }
        if !self.s1_violations.is_empty() {
            parts.push(format!("{} (S1) violation(s)", self.s1_violations.len()));
        }
        if !self.is_finite_dimensional {
            parts.push("infinite-dimensional".to_string());
        }
        if parts.is_empty() {
            parts.push("ok".to_string());
        }
        parts.join(", ")
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.summary())
    }
}

#[derive(Debug, Error)]
pub enum AlgebraError {
    #[error("presentation is not almost gentle: {}", .0.summary())]
    NotAlmostGentle(Box<ValidationReport>),
    #[error("presentation is not finite-dimensional")]
    InfiniteDimensional,
    #[error("arrow index {0} out of range")]
    UnknownArrow(usize),
    #[error("element `{0}` does not belong to this algebra's basis")]
    ForeignBasisElement(String),
    #[error("cycle class {0} has multiplicity {1}; cuts require multiplicity 1")]
    MultiplicityNotOne(usize, u32),
    #[error("search budget exhausted")]
    BudgetExhausted,
    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

/// Finds directed cycles in the graph on `n` nodes whose edges are given
/// by `edge`, reporting one witness cycle per back edge met in a
/// depth-first sweep (deterministic in node order).
fn directed_cycles(n: usize, edge: impl Fn(usize, usize) -> bool) -> Vec<Vec<ArrowId>> {
    #[derive(Clone, Copy, PartialEq)]
    enum Color {
        White,
        Gray,
        Black,
    }
    let mut color = vec![Color::White; n];
    let mut stack: Vec<usize> = Vec::new();
    let mut cycles = Vec::new();

    fn visit(
        u: usize,
        n: usize,
        edge: &impl Fn(usize, usize) -> bool,
        color: &mut [Color],
        stack: &mut Vec<usize>,
        cycles: &mut Vec<Vec<ArrowId>>,
    ) {
        color[u] = Color::Gray;
        stack.push(u);
        for v in 0..n {
            if !edge(u, v) {
                continue;
            }
            match color[v] {
                Color::White => visit(v, n, edge, color, stack, cycles),
                Color::Gray => {
                    let from = stack.iter().position(|&x| x == v).unwrap();
                    cycles.push(stack[from..].iter().map(|&x| ArrowId(x)).collect());
                }
                Color::Black => {}
            }
        }
        stack.pop();
        color[u] = Color::Black;
    }

    for u in 0..n {
        if color[u] == Color::White {
            visit(u, n, &edge, &mut color, &mut stack, &mut cycles);
        }
    }
    cycles
}
