//! The star algebra of an almost gentle presentation: the quiver
//! presentation of its trivial extension.
//!
//! For each maximal path `m: s(m) → t(m)` a new arrow `a_m: t(m) → s(m)`
//! closes `m` into a simple cycle `C_m = m · a_m`. The cycles `C_m`
//! (closed under rotation, all multiplicities 1) form a defining pair on
//! the enlarged quiver, and the relations of that pair present the
//! trivial extension.

use crate::pair::{relations_of_pair, validate_pair, DefiningPair, PairRelations, SimpleCycle};
use crate::presentation::{AlgebraError, MaximalPath, Presentation};
use crate::quiver::{ArrowId, Quiver};

/// The result of [`star`]: the enlarged quiver (inside `pair`), the
/// cycle classes, the generated relations, and the bookkeeping tying
/// each new arrow to its maximal path.
#[derive(Clone, Debug)]
pub struct StarAlgebra {
    pub origin: Presentation,
    /// Maximal paths of the origin, in canonical order.
    pub maximal: Vec<MaximalPath>,
    /// `new_arrows[i]` is the arrow `a_{m_i}` in the star quiver.
    pub new_arrows: Vec<ArrowId>,
    /// Class `i` is the rotation class of `m_i · a_{m_i}`.
    pub pair: DefiningPair,
    pub relations: PairRelations,
}

impl StarAlgebra {
    pub fn quiver(&self) -> &Quiver {
        self.pair.quiver()
    }
}

/// Builds the star algebra of an almost gentle presentation.
///
/// New arrows are named `a_m1, a_m2, …` after the canonical index of
/// their maximal path; a trailing underscore is appended on the rare
/// collision with an existing arrow name.
pub fn star(p: &Presentation) -> Result<StarAlgebra, AlgebraError> {
    let maximal = p.maximal_paths()?;
    let q = p.quiver();

    let vertices: Vec<&str> = q.vertex_names().iter().map(|s| s.as_str()).collect();
    let mut arrows: Vec<(String, String, String)> = q
        .arrows()
        .iter()
        .map(|a| {
            (
                a.name.clone(),
                q.vertex_name(a.source).to_string(),
                q.vertex_name(a.target).to_string(),
            )
        })
        .collect();
    let mut taken: Vec<String> = arrows.iter().map(|(n, _, _)| n.clone()).collect();
    let mut new_names = Vec::with_capacity(maximal.len());
    for m in &maximal {
        let mut name = format!("a_m{}", m.index + 1);
        while taken.contains(&name) {
            name.push('_');
        }
        taken.push(name.clone());
        // a_m runs against m, from t(m) back to s(m).
        arrows.push((
            name.clone(),
            q.vertex_name(m.path.target()).to_string(),
            q.vertex_name(m.path.source()).to_string(),
        ));
        new_names.push(name);
    }
    let star_quiver = Quiver::new(
        &vertices,
        &arrows
            .iter()
            .map(|(n, s, t)| (n.as_str(), s.as_str(), t.as_str()))
            .collect::<Vec<_>>(),
    )
    .map_err(|e| AlgebraError::Internal(format!("star quiver: {e}")))?;

    let mut new_arrows = Vec::with_capacity(maximal.len());
    let mut cycles = Vec::with_capacity(maximal.len());
    for (m, name) in maximal.iter().zip(&new_names) {
        let a_m = star_quiver
            .arrow_id(name)
            .expect("new arrow was just declared");
        new_arrows.push(a_m);
        let mut cycle_arrows: Vec<ArrowId> = m.path.arrows().to_vec();
        cycle_arrows.push(a_m);
        let cycle = SimpleCycle::new(&star_quiver, cycle_arrows)
            .map_err(|e| AlgebraError::Internal(format!("cycle of maximal path: {e}")))?;
        cycles.push((cycle, 1));
    }

    let report = validate_pair(p.name(), &star_quiver, &cycles);
    let pair = report.pair.ok_or_else(|| {
        AlgebraError::Internal(format!(
            "star cycles violate the pair axioms: {:?}",
            report.violations
        ))
    })?;
    let relations = relations_of_pair(&pair);

    Ok(StarAlgebra { origin: p.clone(), maximal, new_arrows, pair, relations })
}

/// `dim_K A* = 2·|Q_0| + Σ_m ℓ(m)(ℓ(m)+1)`, cross-checked against
/// `2·dim_K A`.
pub fn star_dimension(p: &Presentation) -> Result<usize, AlgebraError> {
    let maximal = p.maximal_paths()?;
    let formula = 2 * p.quiver().vertex_count()
        + maximal
            .iter()
            .map(|m| m.path.len() * (m.path.len() + 1))
            .sum::<usize>();
    let doubled = 2 * p.dimension()?;
    if formula != doubled {
        return Err(AlgebraError::Internal(format!(
            "star dimension formula gives {formula}, twice the dimension is {doubled}"
        )));
    }
    Ok(formula)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ag1() -> Presentation {
        Presentation::from_names(
            Some("ag1"),
            &["v1", "v2", "v3"],
            &[
                ("a1", "v1", "v1"),
                ("a2", "v1", "v2"),
                ("a3", "v2", "v1"),
                ("b", "v2", "v1"),
                ("c", "v2", "v3"),
            ],
            &[
                ("a2", "b"),
                ("a2", "c"),
                ("a3", "a1"),
                ("b", "a1"),
                ("b", "a2"),
                ("a1", "a1"),
                ("a3", "a2"),
            ],
        )
    }

    #[test]
    fn lin_star_is_the_two_cycle() {
        let p = Presentation::from_names(Some("lin"), &["u", "v"], &[("a", "u", "v")], &[]);
        let s = star(&p).unwrap();
        let q = s.quiver();
        assert_eq!(q.arrow_count(), 2);
        let a_m1 = q.arrow_id("a_m1").unwrap();
        assert_eq!(q.vertex_name(q.source(a_m1)), "v");
        assert_eq!(q.vertex_name(q.target(a_m1)), "u");
        assert_eq!(s.pair.classes().len(), 1);
        assert_eq!(s.pair.classes()[0].len(), 2);
        assert_eq!(s.pair.classes()[0].multiplicity(), 1);
        assert!(s.relations.type3.is_empty());
        assert_eq!(star_dimension(&p).unwrap(), 6);
    }

    #[test]
    fn loop_star_doubles_the_loop() {
        let p =
            Presentation::from_names(Some("loop"), &["v"], &[("x", "v", "v")], &[("x", "x")]);
        let s = star(&p).unwrap();
        let q = s.quiver();
        assert_eq!(q.arrow_count(), 2);
        assert_eq!(s.pair.classes().len(), 1);
        assert_eq!(s.relations.type1.len(), 1);
        assert_eq!(star_dimension(&p).unwrap(), 4);
    }

    #[test]
    fn ag1_star_shape() {
        let p = ag1();
        let s = star(&p).unwrap();
        let q = s.quiver();
        assert_eq!(q.arrow_count(), 8);
        for (name, src, tgt) in [("a_m1", "v1", "v1"), ("a_m2", "v1", "v2"), ("a_m3", "v3", "v2")] {
            let a = q.arrow_id(name).unwrap();
            // a_m: t(m) → s(m)
            assert_eq!(q.vertex_name(q.source(a)), src, "{name} source");
            assert_eq!(q.vertex_name(q.target(a)), tgt, "{name} target");
        }
        let lens: Vec<usize> = s.pair.classes().iter().map(|c| c.len()).collect();
        assert_eq!(lens, vec![4, 2, 2]);
        assert_eq!(star_dimension(&p).unwrap(), 22);

        // Four rotations based at v1, three at v2, one at v3.
        assert_eq!(s.relations.type1.len(), 6 + 3);
        assert_eq!(s.relations.type2.len(), 8);
    }

    #[test]
    fn new_arrow_names_avoid_collisions() {
        let p = Presentation::from_names(
            None,
            &["u", "v"],
            &[("a_m1", "u", "v")],
            &[],
        );
        let s = star(&p).unwrap();
        let names: Vec<&str> = s.quiver().arrows().iter().map(|a| a.name.as_str()).collect();
        assert_eq!(names, vec!["a_m1", "a_m1_"]);
    }
}
