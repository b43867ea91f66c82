//! Defining pairs: a quiver together with a family of simple oriented
//! cycles closed under rotation and a multiplicity function constant on
//! rotation classes.
//!
//! The axioms checked by [`validate_pair`]:
//!
//! * (D0) a loop forming a cycle on its own needs multiplicity at least 2;
//! * (D1) the family is closed under cyclic rotation — missing rotations
//!   are completed automatically, with a warning;
//! * (D2) multiplicity is constant on each rotation class;
//! * (D3) every arrow of the quiver lies on some cycle;
//! * (D4) no arrow lies on two distinct rotation classes.
//!
//! A valid pair determines quadratic relations of three kinds
//! ([`relations_of_pair`]): differences `C^{μ(C)} − C'^{μ(C')}` of cycle
//! powers based at a common vertex (type 1), the monomials `C^{μ(C)}·a`
//! for each cycle `C` with first arrow `a` (type 2), and every composable
//! two-arrow path that is not a consecutive step of any cycle (type 3).

use std::collections::HashMap;

use thiserror::Error;

use crate::quiver::{ArrowId, Path, Quiver, VertexId};

/// Lexicographically minimal rotation of a nonempty sequence.
pub(crate) fn min_rotation<T: Ord + Clone>(xs: &[T]) -> Vec<T> {
    let mut best: Option<Vec<T>> = None;
    for k in 0..xs.len() {
        let mut rot = Vec::with_capacity(xs.len());
        rot.extend_from_slice(&xs[k..]);
        rot.extend_from_slice(&xs[..k]);
        if best.as_ref().is_none_or(|b| rot < *b) {
            best = Some(rot);
        }
    }
    best.expect("nonempty sequence")
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CycleError {
    #[error("a cycle needs at least one arrow")]
    Empty,
    #[error("arrow index {0} out of range")]
    UnknownArrow(usize),
    #[error("cycle breaks between positions {0} and {1}: `{2}` does not compose with `{3}`")]
    NotComposable(usize, usize, String, String),
    #[error("arrow `{0}` repeats within the cycle")]
    RepeatedArrow(String),
}

/// A simple oriented cycle: a cyclically composable arrow sequence with
/// no repeated arrow. Two rotations of the same cycle are different
/// `SimpleCycle` values; [`SimpleCycle::same_class`] tests rotation
/// equivalence.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct SimpleCycle {
    arrows: Vec<ArrowId>,
}

impl SimpleCycle {
    pub fn new(q: &Quiver, arrows: Vec<ArrowId>) -> Result<Self, CycleError> {
        if arrows.is_empty() {
            return Err(CycleError::Empty);
        }
        for &a in &arrows {
            if a.0 >= q.arrow_count() {
                return Err(CycleError::UnknownArrow(a.0));
            }
        }
        for i in 0..arrows.len() {
            let j = (i + 1) % arrows.len();
            if !q.composable(arrows[i], arrows[j]) {
                return Err(CycleError::NotComposable(
                    i,
                    j,
                    q.arrow_name(arrows[i]).to_string(),
                    q.arrow_name(arrows[j]).to_string(),
                ));
            }
        }
        for (i, &a) in arrows.iter().enumerate() {
            if arrows[..i].contains(&a) {
                return Err(CycleError::RepeatedArrow(q.arrow_name(a).to_string()));
            }
        }
        Ok(SimpleCycle { arrows })
    }

    /// Resolves arrow names; panics on unknown names (test helper).
    pub fn from_names(q: &Quiver, names: &[&str]) -> Result<Self, CycleError> {
        let arrows = names
            .iter()
            .map(|n| q.arrow_id(n).expect("known arrow name"))
            .collect();
        SimpleCycle::new(q, arrows)
    }

    /// The number of arrows; at least 1 by construction.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.arrows.len()
    }

    pub fn arrows(&self) -> &[ArrowId] {
        &self.arrows
    }

    /// The base vertex: the source of the first arrow.
    pub fn base(&self, q: &Quiver) -> VertexId {
        q.source(self.arrows[0])
    }

    /// Rotation moving the arrow at position `k` to the front.
    pub fn rotate(&self, k: usize) -> SimpleCycle {
        let k = k % self.arrows.len();
        let mut arrows = Vec::with_capacity(self.arrows.len());
        arrows.extend_from_slice(&self.arrows[k..]);
        arrows.extend_from_slice(&self.arrows[..k]);
        SimpleCycle { arrows }
    }

    /// Rotation with the lexicographically minimal arrow-index sequence.
    pub fn canonical(&self) -> SimpleCycle {
        SimpleCycle { arrows: min_rotation(&self.arrows) }
    }

    pub fn same_class(&self, other: &SimpleCycle) -> bool {
        self.len() == other.len() && self.canonical() == other.canonical()
    }

    /// The cyclically consecutive arrow pairs; a length-1 cycle yields
    /// its loop paired with itself.
    pub fn consecutive_pairs(&self) -> Vec<(ArrowId, ArrowId)> {
        (0..self.arrows.len())
            .map(|i| (self.arrows[i], self.arrows[(i + 1) % self.arrows.len()]))
            .collect()
    }

    /// The cycle read as a linear path from its base vertex.
    pub fn as_path(&self, q: &Quiver) -> Path {
        Path::from_arrows(q, self.arrows.clone()).expect("cycles compose")
    }

    pub fn display(&self, q: &Quiver) -> String {
        self.arrows
            .iter()
            .map(|&a| q.arrow_name(a))
            .collect::<Vec<_>>()
            .join("*")
    }
}

/// A rotation class of simple cycles with its multiplicity.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CycleClass {
    representative: SimpleCycle,
    multiplicity: u32,
}

impl CycleClass {
    pub fn representative(&self) -> &SimpleCycle {
        &self.representative
    }

    pub fn multiplicity(&self) -> u32 {
        self.multiplicity
    }

    /// The cycle length; at least 1 by construction.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.representative.len()
    }

    /// All rotations, starting from the canonical representative.
    pub fn rotations(&self) -> Vec<SimpleCycle> {
        (0..self.len()).map(|k| self.representative.rotate(k)).collect()
    }

    pub fn contains_arrow(&self, a: ArrowId) -> bool {
        self.representative.arrows().contains(&a)
    }
}

/// A quiver with a valid family of cycles: the result of
/// [`validate_pair`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DefiningPair {
    name: Option<String>,
    quiver: Quiver,
    classes: Vec<CycleClass>,
}

impl DefiningPair {
    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn with_name(mut self, name: Option<String>) -> Self {
        self.name = name;
        self
    }

    pub fn quiver(&self) -> &Quiver {
        &self.quiver
    }

    pub fn classes(&self) -> &[CycleClass] {
        &self.classes
    }

    /// The rotation of class `class` whose first arrow sits `offset`
    /// steps into the canonical representative.
    pub fn rotation(&self, class: usize, offset: usize) -> SimpleCycle {
        self.classes[class].representative().rotate(offset)
    }

    /// All rotations as `(class, offset)` references, in class order.
    pub fn all_rotations(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (c, class) in self.classes.iter().enumerate() {
            for k in 0..class.len() {
                out.push((c, k));
            }
        }
        out
    }

    /// The class containing `a`, if any.
    pub fn class_of_arrow(&self, a: ArrowId) -> Option<usize> {
        self.classes.iter().position(|c| c.contains_arrow(a))
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum PairViolation {
    /// (D0) A single-loop cycle with multiplicity 1.
    LoopNeedsHigherMultiplicity { class: usize },
    /// (D2) The rotations of one class were given different multiplicities.
    MultiplicityConflict { class: usize, seen: Vec<u32> },
    /// (D3) An arrow lying on no cycle.
    UncoveredArrow(ArrowId),
    /// (D4) An arrow lying on two distinct classes.
    ArrowInTwoClasses { arrow: ArrowId, classes: (usize, usize) },
}

/// Everything [`validate_pair`] found: the grouped classes (always), the
/// violations and warnings, and the pair itself when the axioms hold.
#[derive(Clone, Debug)]
pub struct PairReport {
    pub classes: Vec<CycleClass>,
    pub violations: Vec<PairViolation>,
    pub warnings: Vec<String>,
    pub pair: Option<DefiningPair>,
}

impl PairReport {
    pub fn is_valid(&self) -> bool {
        self.pair.is_some()
    }
}

/// Groups the given cycles into rotation classes and checks axioms
/// (D0)–(D4). Classes are ordered by first appearance in the input;
/// each is represented by its lexicographically minimal rotation.
pub fn validate_pair(
    name: Option<&str>,
    quiver: &Quiver,
    cycles: &[(SimpleCycle, u32)],
) -> PairReport {
    let mut classes: Vec<CycleClass> = Vec::new();
    let mut mults_seen: Vec<Vec<u32>> = Vec::new();
    let mut rotations_seen: Vec<Vec<SimpleCycle>> = Vec::new();
    let mut key_to_class: HashMap<Vec<ArrowId>, usize> = HashMap::new();
    let mut warnings = Vec::new();

    for (cycle, mult) in cycles {
        let canonical = cycle.canonical();
        let key = canonical.arrows().to_vec();
        match key_to_class.get(&key) {
            Some(&idx) => {
                if rotations_seen[idx].contains(cycle) {
                    warnings.push(format!(
                        "cycle {} appears more than once",
                        cycle.display(quiver)
                    ));
                }
                rotations_seen[idx].push(cycle.clone());
                mults_seen[idx].push(*mult);
            }
            None => {
                let idx = classes.len();
                key_to_class.insert(key, idx);
                classes.push(CycleClass { representative: canonical, multiplicity: *mult });
                mults_seen.push(vec![*mult]);
                rotations_seen.push(vec![cycle.clone()]);
            }
        }
    }

    let mut violations = Vec::new();
    for (idx, class) in classes.iter().enumerate() {
        let mut distinct = mults_seen[idx].clone();
        distinct.sort_unstable();
        distinct.dedup();
        if distinct.len() > 1 {
            violations.push(PairViolation::MultiplicityConflict { class: idx, seen: distinct });
        }
        if class.len() == 1 && class.multiplicity() < 2 {
            violations.push(PairViolation::LoopNeedsHigherMultiplicity { class: idx });
        }
        let mut seen = rotations_seen[idx].clone();
        seen.dedup();
        if seen.len() < class.len() {
            warnings.push(format!(
                "rotation closure completed for cycle {}",
                class.representative().display(quiver)
            ));
        }
    }

    for a in quiver.arrow_ids() {
        let owners: Vec<usize> = classes
            .iter()
            .enumerate()
            .filter(|(_, c)| c.contains_arrow(a))
            .map(|(i, _)| i)
            .collect();
        match owners.len() {
            0 => violations.push(PairViolation::UncoveredArrow(a)),
            1 => {}
            _ => violations.push(PairViolation::ArrowInTwoClasses {
                arrow: a,
                classes: (owners[0], owners[1]),
            }),
        }
    }

    let pair = if violations.is_empty() {
        Some(DefiningPair {
            name: name.map(|n| n.to_string()),
            quiver: quiver.clone(),
            classes: classes.clone(),
        })
    } else {
        None
    };
    PairReport { classes, violations, warnings, pair }
}

/// A type-1 relation: the difference of the powers of two distinct
/// cycles based at the same vertex. Rotations are referenced as
/// `(class, offset)` pairs resolvable through [`DefiningPair::rotation`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Type1Relation {
    pub vertex: VertexId,
    pub left: (usize, usize),
    pub right: (usize, usize),
}

/// A type-2 relation: `C^{μ(C)} · a` for the rotation `C` at
/// `(class, offset)` with first arrow `a`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Type2Relation {
    pub class: usize,
    pub offset: usize,
}

/// The quadratic relations determined by a defining pair.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PairRelations {
    pub type1: Vec<Type1Relation>,
    pub type2: Vec<Type2Relation>,
    /// Composable arrow pairs that are not consecutive on any cycle.
    pub type3: Vec<(ArrowId, ArrowId)>,
}

/// Enumerates the three relation families of a valid pair, in a stable
/// order: type 1 by vertex then rotation pairs, type 2 by class and
/// offset, type 3 by arrow indices.
pub fn relations_of_pair(pair: &DefiningPair) -> PairRelations {
    let q = pair.quiver();

    let mut type1 = Vec::new();
    for v in q.vertex_ids() {
        let based: Vec<(usize, usize)> = pair
            .all_rotations()
            .into_iter()
            .filter(|&(c, k)| pair.rotation(c, k).base(q) == v)
            .collect();
        for i in 0..based.len() {
            for j in (i + 1)..based.len() {
                type1.push(Type1Relation { vertex: v, left: based[i], right: based[j] });
            }
        }
    }

    let type2 = pair
        .all_rotations()
        .into_iter()
        .map(|(class, offset)| Type2Relation { class, offset })
        .collect();

    let mut on_cycle: Vec<(ArrowId, ArrowId)> = pair
        .classes()
        .iter()
        .flat_map(|c| c.representative().consecutive_pairs())
        .collect();
    on_cycle.sort_unstable();
    let mut type3 = Vec::new();
    for a in q.arrow_ids() {
        for b in q.arrow_ids() {
            if q.composable(a, b) && on_cycle.binary_search(&(a, b)).is_err() {
                type3.push((a, b));
            }
        }
    }

    PairRelations { type1, type2, type3 }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn two_cycle_quiver() -> Quiver {
        Quiver::new(&["u", "v"], &[("a", "u", "v"), ("b", "v", "u")]).unwrap()
    }

    #[test]
    fn cycles_enforce_shape() {
        let q = two_cycle_quiver();
        assert!(SimpleCycle::from_names(&q, &["a", "b"]).is_ok());
        assert!(matches!(
            SimpleCycle::from_names(&q, &["a", "a"]),
            Err(CycleError::NotComposable(..))
        ));
        assert!(matches!(SimpleCycle::new(&q, vec![]), Err(CycleError::Empty)));
        // a alone does not close up.
        assert!(matches!(
            SimpleCycle::from_names(&q, &["a"]),
            Err(CycleError::NotComposable(..))
        ));
        let q2 = Quiver::new(
            &["u", "v"],
            &[("a", "u", "v"), ("b", "v", "u"), ("c", "u", "v")],
        )
        .unwrap();
        // a b a would repeat a; a b c b repeats b.
        assert!(matches!(
            SimpleCycle::from_names(&q2, &["a", "b", "a", "b"]),
            Err(CycleError::RepeatedArrow(_))
        ));
    }

    #[test]
    fn canonical_rotation_is_lex_minimal() {
        let q = Quiver::new(
            &["u", "v", "w"],
            &[("p", "v", "w"), ("r", "w", "u"), ("s", "u", "v")],
        )
        .unwrap();
        let c = SimpleCycle::from_names(&q, &["r", "s", "p"]).unwrap();
        assert_eq!(c.canonical().display(&q), "p*r*s");
        assert!(c.same_class(&SimpleCycle::from_names(&q, &["s", "p", "r"]).unwrap()));
        assert_eq!(c.rotate(1).display(&q), "s*p*r");
        assert_eq!(c.base(&q), q.vertex_id("w").unwrap());
    }

    #[test]
    fn axioms_catch_bad_families() {
        let q = Quiver::new(&["v"], &[("x", "v", "v")]).unwrap();
        let x = SimpleCycle::from_names(&q, &["x"]).unwrap();

        // D0: a loop cycle with multiplicity 1.
        let r = validate_pair(None, &q, &[(x.clone(), 1)]);
        assert_eq!(
            r.violations,
            vec![PairViolation::LoopNeedsHigherMultiplicity { class: 0 }]
        );
        assert!(!r.is_valid());
        assert!(validate_pair(None, &q, &[(x.clone(), 2)]).is_valid());

        // D2: conflicting multiplicities for rotations of one class.
        let q2 = two_cycle_quiver();
        let ab = SimpleCycle::from_names(&q2, &["a", "b"]).unwrap();
        let ba = SimpleCycle::from_names(&q2, &["b", "a"]).unwrap();
        let r = validate_pair(None, &q2, &[(ab.clone(), 1), (ba.clone(), 2)]);
        assert_eq!(
            r.violations,
            vec![PairViolation::MultiplicityConflict { class: 0, seen: vec![1, 2] }]
        );

        // D3: the arrow c is covered by no cycle.
        let q3 = Quiver::new(
            &["u", "v"],
            &[("a", "u", "v"), ("b", "v", "u"), ("c", "v", "v")],
        )
        .unwrap();
        let ab3 = SimpleCycle::from_names(&q3, &["a", "b"]).unwrap();
        let r = validate_pair(None, &q3, &[(ab3, 1)]);
        assert_eq!(
            r.violations,
            vec![PairViolation::UncoveredArrow(q3.arrow_id("c").unwrap())]
        );

        // D4: a lies on two distinct classes.
        let q4 = Quiver::new(
            &["u", "v"],
            &[("a", "u", "v"), ("b", "v", "u"), ("c", "v", "u")],
        )
        .unwrap();
        let r = validate_pair(
            None,
            &q4,
            &[
                (SimpleCycle::from_names(&q4, &["a", "b"]).unwrap(), 1),
                (SimpleCycle::from_names(&q4, &["a", "c"]).unwrap(), 1),
            ],
        );
        assert_eq!(
            r.violations,
            vec![PairViolation::ArrowInTwoClasses {
                arrow: q4.arrow_id("a").unwrap(),
                classes: (0, 1),
            }]
        );
    }

    #[test]
    fn rotation_closure_is_completed_with_a_warning() {
        let q = two_cycle_quiver();
        let ab = SimpleCycle::from_names(&q, &["a", "b"]).unwrap();
        let ba = SimpleCycle::from_names(&q, &["b", "a"]).unwrap();

        let r = validate_pair(None, &q, &[(ab.clone(), 1)]);
        assert!(r.is_valid());
        assert_eq!(r.warnings.len(), 1);
        assert!(r.warnings[0].contains("rotation closure"));

        // Listing all rotations produces one class and no warning.
        let r = validate_pair(None, &q, &[(ab.clone(), 1), (ba.clone(), 1)]);
        assert!(r.is_valid());
        assert!(r.warnings.is_empty());
        let pair = r.pair.unwrap();
        assert_eq!(pair.classes().len(), 1);
        assert_eq!(pair.classes()[0].representative().display(&q), "a*b");
        assert_eq!(pair.class_of_arrow(q.arrow_id("b").unwrap()), Some(0));
    }

    #[test]
    fn relations_of_the_two_cycle_star_shape() {
        // The star of the 2-cycle algebra: u ⇄ v with doubled arrows.
        let q = Quiver::new(
            &["u", "v"],
            &[
                ("a", "u", "v"),
                ("b", "v", "u"),
                ("a_m1", "v", "u"),
                ("a_m2", "u", "v"),
            ],
        )
        .unwrap();
        let c1 = SimpleCycle::from_names(&q, &["a", "a_m1"]).unwrap();
        let c2 = SimpleCycle::from_names(&q, &["b", "a_m2"]).unwrap();
        let pair = validate_pair(None, &q, &[(c1, 1), (c2, 1)]).pair.unwrap();
        let rels = relations_of_pair(&pair);

        // Two rotations based at u and two at v give one pair each.
        assert_eq!(rels.type1.len(), 2);
        assert_eq!(rels.type2.len(), 4);
        let a = q.arrow_id("a").unwrap();
        let b = q.arrow_id("b").unwrap();
        let m1 = q.arrow_id("a_m1").unwrap();
        let m2 = q.arrow_id("a_m2").unwrap();
        assert_eq!(rels.type3, vec![(a, b), (b, a), (m1, m2), (m2, m1)]);
    }

    #[test]
    fn loop_star_shape_has_one_type1_pair() {
        // One loop x with one extra arrow closing the cycle x·a_m1.
        let q = Quiver::new(&["v"], &[("x", "v", "v"), ("a_m1", "v", "v")]).unwrap();
        let c = SimpleCycle::from_names(&q, &["x", "a_m1"]).unwrap();
        let pair = validate_pair(None, &q, &[(c, 1)]).pair.unwrap();
        let rels = relations_of_pair(&pair);
        assert_eq!(rels.type1.len(), 1);
        let t1 = &rels.type1[0];
        assert_eq!(pair.rotation(t1.left.0, t1.left.1).display(&q), "x*a_m1");
        assert_eq!(pair.rotation(t1.right.0, t1.right.1).display(&q), "a_m1*x");
        assert_eq!(rels.type2.len(), 2);
        let x = q.arrow_id("x").unwrap();
        let m = q.arrow_id("a_m1").unwrap();
        assert_eq!(rels.type3, vec![(x, x), (m, m)]);
    }
}
