//! Brauer configurations of defining pairs.
//!
//! A defining pair `(Q, 𝒯, μ)` determines a Brauer configuration: one
//! configuration vertex `α_i` per cycle class (decorated with the class
//! multiplicity), one polygon `V_v` per quiver vertex, where `α_i`
//! occurs in `V_v` once for every arrow of class `i` with source `v`,
//! and a cyclic orientation at each `α_i` reading off the polygons at
//! the sources around the cycle.
//!
//! The struct is label-free — pure index data — so that two
//! configurations compare equal exactly when they agree after the
//! canonical identifications (class `i` ↔ class `i`, vertex `v` ↔
//! vertex `v`). Cyclic sequences are stored rotated to their
//! lexicographic minimum, which makes `==` rotation-insensitive.

use crate::pair::{min_rotation, DefiningPair};

/// The Brauer configuration of a defining pair, in index form.
///
/// * configuration vertex `i` = cycle class `i` of the pair;
/// * polygon `v` = quiver vertex `v`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BrauerConfiguration {
    /// `ν(α_i)`, the multiplicity of each configuration vertex.
    pub multiplicities: Vec<u32>,
    /// One polygon per quiver vertex: the sorted multiset of
    /// configuration vertices occurring at it.
    pub polygons: Vec<Vec<usize>>,
    /// One cyclic sequence of polygon indices per configuration vertex,
    /// following the class cycle's arrow sources; normalized to the
    /// lexicographically minimal rotation.
    pub orientations: Vec<Vec<usize>>,
}

impl BrauerConfiguration {
    /// The total number of occurrences of configuration vertex `i`
    /// across all polygons (equals the class's cycle length).
    pub fn valency(&self, i: usize) -> usize {
        self.polygons
            .iter()
            .map(|v| v.iter().filter(|&&x| x == i).count())
            .sum()
    }
}

/// Builds the Brauer configuration of a defining pair.
pub fn configuration_of_pair(pair: &DefiningPair) -> BrauerConfiguration {
    let q = pair.quiver();
    let multiplicities = pair.classes().iter().map(|c| c.multiplicity()).collect();

    let mut polygons = vec![Vec::new(); q.vertex_count()];
    let mut orientations = Vec::with_capacity(pair.classes().len());
    for (i, class) in pair.classes().iter().enumerate() {
        let sources: Vec<usize> = class
            .representative()
            .arrows()
            .iter()
            .map(|&a| q.source(a).0)
            .collect();
        for &v in &sources {
            polygons[v].push(i);
        }
        orientations.push(min_rotation(&sources));
    }
    for polygon in &mut polygons {
        polygon.sort_unstable();
    }

    BrauerConfiguration { multiplicities, polygons, orientations }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sample::{ag1, ag2};
    use crate::star::star;

    #[test]
    fn loop_configuration() {
        let c = configuration_of_pair(&star(&crate::sample::loop_algebra()).unwrap().pair);
        assert_eq!(c.multiplicities, vec![1]);
        assert_eq!(c.polygons, vec![vec![0, 0]]);
        assert_eq!(c.orientations, vec![vec![0, 0]]);
        assert_eq!(c.valency(0), 2);
    }

    #[test]
    fn lin_configuration() {
        let c = configuration_of_pair(&star(&crate::sample::lin()).unwrap().pair);
        assert_eq!(c.multiplicities, vec![1]);
        assert_eq!(c.polygons, vec![vec![0], vec![0]]);
        assert_eq!(c.orientations, vec![vec![0, 1]]);
    }

    #[test]
    fn ag1_configuration() {
        let c = configuration_of_pair(&star(&ag1()).unwrap().pair);
        assert_eq!(c.multiplicities, vec![1, 1, 1]);
        // V_{v1} = {α1, α1, α1, α2}, V_{v2} = {α1, α2, α3}, V_{v3} = {α3}.
        assert_eq!(c.polygons, vec![vec![0, 0, 0, 1], vec![0, 1, 2], vec![2]]);
        // Orientation at α1 follows (V_{v1}, V_{v1}, V_{v2}, V_{v1}),
        // stored at its minimal rotation.
        assert_eq!(c.orientations[0], vec![0, 0, 0, 1]);
        assert_eq!(c.orientations[1], vec![0, 1]);
        assert_eq!(c.orientations[2], vec![1, 2]);
        // Valency of a class equals its cycle length.
        assert_eq!(c.valency(0), 4);
        assert_eq!(c.valency(1), 2);
        assert_eq!(c.valency(2), 2);
    }

    #[test]
    fn ag1_and_ag2_have_equal_configurations() {
        let c1 = configuration_of_pair(&star(&ag1()).unwrap().pair);
        let c2 = configuration_of_pair(&star(&ag2()).unwrap().pair);
        assert_eq!(c1, c2);
    }

    #[test]
    fn orientation_reads_back_the_cycle_sources() {
        // The orientation at a class, as a cyclic word, is the source
        // sequence of its cycle.
        let s = star(&ag1()).unwrap();
        let c = configuration_of_pair(&s.pair);
        for (i, class) in s.pair.classes().iter().enumerate() {
            let sources: Vec<usize> = class
                .representative()
                .arrows()
                .iter()
                .map(|&a| s.quiver().source(a).0)
                .collect();
            assert_eq!(c.orientations[i], min_rotation(&sources));
            assert_eq!(c.orientations[i].len(), class.len());
        }
    }
}
