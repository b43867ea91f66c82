//! The oriented decorated hypergraph of an almost gentle algebra, built
//! directly from the maximal paths — no detour through the trivial
//! extension — together with an exact isomorphism test.
//!
//! Vertices are the maximal paths plus one *truncation* vertex for each
//! quiver vertex that lies in only one maximal-path position; hyperedges
//! correspond to quiver vertices. Reducing the hypergraph (dropping the
//! truncation vertices) recovers the Brauer configuration of the star
//! pair on the nose, so two algebras have isomorphic hypergraphs exactly
//! when their trivial extensions are isomorphic.

use crate::brauer::BrauerConfiguration;
use crate::iso::{Budget, IsoOutcome};
use crate::pair::min_rotation;
use crate::presentation::{AlgebraError, Presentation};
use crate::quiver::VertexId;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum HVertexKind {
    /// The `index`-th maximal path of the algebra.
    MaximalPath { index: usize },
    /// The trivial path at a quiver vertex lying in a unique
    /// maximal-path position.
    Truncation { vertex: VertexId },
}

impl HVertexKind {
    fn tag(&self) -> u8 {
        match self {
            HVertexKind::MaximalPath { .. } => 0,
            HVertexKind::Truncation { .. } => 1,
        }
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HVertex {
    pub kind: HVertexKind,
    /// Human-readable form of the underlying path (for reports).
    pub label: String,
    /// The decoration; identically 1 for hypergraphs of algebras.
    pub multiplicity: u32,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Hyperedge {
    /// The quiver vertex this hyperedge came from.
    pub label: String,
    /// Sorted h-vertex indices, with repeats for multiplicity.
    pub members: Vec<usize>,
}

impl Hyperedge {
    /// The multiplicity of h-vertex `x` in this hyperedge.
    pub fn count(&self, x: usize) -> usize {
        self.members.iter().filter(|&&m| m == x).count()
    }

    /// Total size counted with multiplicity.
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OrientedHypergraph {
    pub vertices: Vec<HVertex>,
    /// One hyperedge per quiver vertex, in quiver order.
    pub hyperedges: Vec<Hyperedge>,
    /// Per h-vertex, the cyclic sequence of hyperedge indices around it,
    /// normalized to its lexicographically minimal rotation. Length
    /// `ℓ(p) + 1` at a maximal path `p`, length 1 at a truncation
    /// vertex.
    pub orientations: Vec<Vec<usize>>,
}

/// The quiver vertices lying in a unique maximal-path position: sources
/// of a single arrow with no incoming arrow, targets of a single arrow
/// with no outgoing arrow, or vertices with exactly one arrow in and
/// one out composing to a non-relation.
pub fn truncation_vertices(p: &Presentation) -> Vec<VertexId> {
    let q = p.quiver();
    q.vertex_ids()
        .filter(|&v| {
            let ins = q.arrows_into(v);
            let outs = q.arrows_from(v);
            match (ins.as_slice(), outs.as_slice()) {
                ([], [_]) => true,
                ([_], []) => true,
                ([a], [b]) => !p.is_relation(*a, *b),
                _ => false,
            }
        })
        .collect()
}

/// Builds the oriented hypergraph of an almost gentle algebra.
///
/// Vertex `v` occurs in the hyperedge of a maximal path once per
/// occurrence in its vertex sequence, both endpoints counted; truncation
/// vertices contribute themselves to their own hyperedge once.
pub fn hypergraph_of(p: &Presentation) -> Result<OrientedHypergraph, AlgebraError> {
    let q = p.quiver();
    let maximal = p.maximal_paths()?;
    let truncation = truncation_vertices(p);

    let mut vertices = Vec::with_capacity(maximal.len() + truncation.len());
    let mut orientations = Vec::with_capacity(vertices.capacity());
    let mut edge_members = vec![Vec::new(); q.vertex_count()];

    for m in &maximal {
        let seq: Vec<usize> = m.path.vertex_sequence(q).iter().map(|v| v.0).collect();
        for &v in &seq {
            edge_members[v].push(vertices.len());
        }
        orientations.push(min_rotation(&seq));
        vertices.push(HVertex {
            kind: HVertexKind::MaximalPath { index: m.index },
            label: m.path.display(q),
            multiplicity: 1,
        });
    }
    for &v in &truncation {
        edge_members[v.0].push(vertices.len());
        orientations.push(vec![v.0]);
        vertices.push(HVertex {
            kind: HVertexKind::Truncation { vertex: v },
            label: format!("e_{}", q.vertex_name(v)),
            multiplicity: 1,
        });
    }

    let hyperedges = edge_members
        .into_iter()
        .zip(q.vertex_names())
        .map(|(mut members, name)| {
            members.sort_unstable();
            Hyperedge { label: name.clone(), members }
        })
        .collect();

    Ok(OrientedHypergraph { vertices, hyperedges, orientations })
}

/// Drops the truncation vertices, leaving the Brauer configuration of
/// the star pair: configuration vertex `i` = maximal path `i` = cycle
/// class `i`, polygon `v` = hyperedge `v`.
pub fn reduce_to_configuration(h: &OrientedHypergraph) -> BrauerConfiguration {
    let kept: Vec<usize> = h
        .vertices
        .iter()
        .enumerate()
        .filter(|(_, x)| matches!(x.kind, HVertexKind::MaximalPath { .. }))
        .map(|(i, _)| i)
        .collect();
    // Maximal-path vertices come first, so the index renaming is the
    // identity on the kept range; dropping larger indices suffices.
    let bound = kept.len();
    debug_assert!(kept.iter().copied().eq(0..bound));

    BrauerConfiguration {
        multiplicities: kept.iter().map(|&i| h.vertices[i].multiplicity).collect(),
        polygons: h
            .hyperedges
            .iter()
            .map(|e| e.members.iter().copied().filter(|&m| m < bound).collect())
            .collect(),
        orientations: kept.iter().map(|&i| h.orientations[i].clone()).collect(),
    }
}

/// An isomorphism of oriented hypergraphs: `vertex_map[x]` and
/// `edge_map[e]` are images in the right-hand hypergraph.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HypergraphIso {
    pub vertex_map: Vec<usize>,
    pub edge_map: Vec<usize>,
}

/// An isomorphism-invariant normal form; unequal signatures give a
/// cheap negative answer before any search.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HypergraphSignature {
    maximal: usize,
    truncation: usize,
    /// Per hyperedge, sorted: the sorted multiset of member profiles
    /// (kind tag, decoration, orientation length, multiplicity in edge).
    edges: Vec<Vec<(u8, u32, usize, usize)>>,
    /// Per h-vertex, sorted: kind tag, decoration, and the minimal
    /// rotation of the orientation with each hyperedge replaced by its
    /// size.
    vertices: Vec<(u8, u32, Vec<usize>)>,
}

/// Computes the invariant signature of a hypergraph.
pub fn signature(h: &OrientedHypergraph) -> HypergraphSignature {
    let or_size_word = |x: usize| -> Vec<usize> {
        let word: Vec<usize> = h.orientations[x].iter().map(|&e| h.hyperedges[e].size()).collect();
        min_rotation(&word)
    };
    let mut edges: Vec<Vec<(u8, u32, usize, usize)>> = h
        .hyperedges
        .iter()
        .map(|e| {
            let mut profile: Vec<(u8, u32, usize, usize)> = e
                .members
                .iter()
                .map(|&x| {
                    (
                        h.vertices[x].kind.tag(),
                        h.vertices[x].multiplicity,
                        h.orientations[x].len(),
                        e.count(x),
                    )
                })
                .collect();
            profile.sort_unstable();
            profile
        })
        .collect();
    edges.sort();
    let mut vertices: Vec<(u8, u32, Vec<usize>)> = (0..h.vertices.len())
        .map(|x| (h.vertices[x].kind.tag(), h.vertices[x].multiplicity, or_size_word(x)))
        .collect();
    vertices.sort();
    HypergraphSignature {
        maximal: h.vertices.iter().filter(|v| v.kind.tag() == 0).count(),
        truncation: h.vertices.iter().filter(|v| v.kind.tag() == 1).count(),
        edges,
        vertices,
    }
}

/// Exact isomorphism test: signature pre-filter, then backtracking over
/// hyperedge bijections; for each complete edge map the compatible
/// vertex assignments form a bipartite graph whose perfect matchings
/// are exactly the isomorphisms extending the edge map, so a maximum
/// matching decides the branch.
pub fn hypergraphs_isomorphic(
    h1: &OrientedHypergraph,
    h2: &OrientedHypergraph,
    budget: u64,
) -> IsoOutcome<HypergraphIso> {
    if h1.vertices.len() != h2.vertices.len() || h1.hyperedges.len() != h2.hyperedges.len() {
        return IsoOutcome::NonIso;
    }
    if signature(h1) != signature(h2) {
        return IsoOutcome::NonIso;
    }

    let n_edges = h1.hyperedges.len();
    let mut budget = Budget { left: budget };

    // Local edge profiles (must match under any isomorphism).
    let edge_profile = |h: &OrientedHypergraph, e: usize| -> Vec<(u8, u32, usize, usize)> {
        let mut p: Vec<(u8, u32, usize, usize)> = h.hyperedges[e]
            .members
            .iter()
            .map(|&x| {
                (
                    h.vertices[x].kind.tag(),
                    h.vertices[x].multiplicity,
                    h.orientations[x].len(),
                    h.hyperedges[e].count(x),
                )
            })
            .collect();
        p.sort_unstable();
        p
    };
    let right_profiles: Vec<_> = (0..n_edges).map(|e| edge_profile(h2, e)).collect();
    let candidates: Vec<Vec<usize>> = (0..n_edges)
        .map(|e| {
            let p = edge_profile(h1, e);
            (0..n_edges).filter(|&f| right_profiles[f] == p).collect()
        })
        .collect();

    // Most-constrained edge first.
    let mut order: Vec<usize> = (0..n_edges).collect();
    order.sort_by_key(|&e| (candidates[e].len(), e));

    #[allow(clippy::too_many_arguments)]
    fn extend(
        h1: &OrientedHypergraph,
        h2: &OrientedHypergraph,
        order: &[usize],
        candidates: &[Vec<usize>],
        emap: &mut [usize],
        used: &mut [bool],
        depth: usize,
        budget: &mut Budget,
    ) -> Result<Option<HypergraphIso>, ()> {
        if depth == order.len() {
            return Ok(match_vertices(h1, h2, emap, budget)?.map(|vertex_map| HypergraphIso {
                vertex_map,
                edge_map: emap.to_vec(),
            }));
        }
        let e = order[depth];
        for &f in &candidates[e] {
            if used[f] {
                continue;
            }
            if !budget.spend() {
                return Err(());
            }
            emap[e] = f;
            used[f] = true;
            if let Some(iso) = extend(h1, h2, order, candidates, emap, used, depth + 1, budget)? {
                return Ok(Some(iso));
            }
            used[f] = false;
            emap[e] = usize::MAX;
        }
        Ok(None)
    }

    let mut emap = vec![usize::MAX; n_edges];
    let mut used = vec![false; n_edges];
    match extend(h1, h2, &order, &candidates, &mut emap, &mut used, 0, &mut budget) {
        Ok(Some(iso)) => IsoOutcome::Iso(iso),
        Ok(None) => IsoOutcome::NonIso,
        Err(()) => IsoOutcome::Undecided,
    }
}

/// With the edge map fixed, vertex `x` can map to `y` iff kinds,
/// decorations, per-edge incidence multiplicities and the rotated
/// orientation all agree — constraints local to `(x, y)`. A perfect
/// matching of this compatibility relation is therefore exactly a valid
/// vertex bijection.
fn match_vertices(
    h1: &OrientedHypergraph,
    h2: &OrientedHypergraph,
    emap: &[usize],
    budget: &mut Budget,
) -> Result<Option<Vec<usize>>, ()> {
    let n = h1.vertices.len();
    let mut compat: Vec<Vec<usize>> = Vec::with_capacity(n);
    for x in 0..n {
        let mapped: Vec<usize> = h1.orientations[x].iter().map(|&e| emap[e]).collect();
        let mapped = min_rotation(&mapped);
        let mut row = Vec::new();
        for y in 0..n {
            if !budget.spend() {
                return Err(());
            }
            let ok = h1.vertices[x].kind.tag() == h2.vertices[y].kind.tag()
                && h1.vertices[x].multiplicity == h2.vertices[y].multiplicity
                && mapped == h2.orientations[y]
                && (0..emap.len()).all(|e| {
                    h1.hyperedges[e].count(x) == h2.hyperedges[emap[e]].count(y)
                });
            if ok {
                row.push(y);
            }
        }
        if row.is_empty() {
            return Ok(None);
        }
        compat.push(row);
    }

    // Kuhn's augmenting-path matching.
    let mut matched_right: Vec<Option<usize>> = vec![None; n];
    let mut vertex_map = vec![usize::MAX; n];
    fn augment(
        x: usize,
        compat: &[Vec<usize>],
        seen: &mut [bool],
        matched_right: &mut [Option<usize>],
    ) -> bool {
        for &y in &compat[x] {
            if seen[y] {
                continue;
            }
            seen[y] = true;
            if matched_right[y].is_none()
                || augment(matched_right[y].unwrap(), compat, seen, matched_right)
            {
                matched_right[y] = Some(x);
                return true;
            }
        }
        false
    }
    for x in 0..n {
        if !budget.spend() {
            return Err(());
        }
        let mut seen = vec![false; n];
        if !augment(x, &compat, &mut seen, &mut matched_right) {
            return Ok(None);
        }
    }
    for (y, x) in matched_right.iter().enumerate() {
        vertex_map[x.expect("perfect matching")] = y;
    }
    Ok(Some(vertex_map))
}

/// Independently validates a claimed hypergraph isomorphism.
pub fn check_hypergraph_iso(
    h1: &OrientedHypergraph,
    h2: &OrientedHypergraph,
    iso: &HypergraphIso,
) -> bool {
    let n = h1.vertices.len();
    let k = h1.hyperedges.len();
    if h2.vertices.len() != n || h2.hyperedges.len() != k {
        return false;
    }
    if iso.vertex_map.len() != n || iso.edge_map.len() != k {
        return false;
    }
    let mut seen_v = vec![false; n];
    for &y in &iso.vertex_map {
        if y >= n || seen_v[y] {
            return false;
        }
        seen_v[y] = true;
    }
    let mut seen_e = vec![false; k];
    for &f in &iso.edge_map {
        if f >= k || seen_e[f] {
            return false;
        }
        seen_e[f] = true;
    }
    for x in 0..n {
        let y = iso.vertex_map[x];
        if h1.vertices[x].kind.tag() != h2.vertices[y].kind.tag()
            || h1.vertices[x].multiplicity != h2.vertices[y].multiplicity
        {
            return false;
        }
        let mapped: Vec<usize> =
            h1.orientations[x].iter().map(|&e| iso.edge_map[e]).collect();
        if min_rotation(&mapped) != h2.orientations[y] {
            return false;
        }
    }
    for e in 0..k {
        let f = iso.edge_map[e];
        for x in 0..n {
            if h1.hyperedges[e].count(x) != h2.hyperedges[f].count(iso.vertex_map[x]) {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::brauer::configuration_of_pair;
    use crate::iso::DEFAULT_BUDGET;
    use crate::sample::{ag1, ag2, lin, loop_algebra};
    use crate::star::star;

    #[test]
    fn truncation_conditions() {
        // AG1: v3 is the target of exactly one arrow with nothing out.
        let t = truncation_vertices(&ag1());
        assert_eq!(t, vec![VertexId(2)]);
        // LIN: u (source only) and v (target only).
        assert_eq!(truncation_vertices(&lin()), vec![VertexId(0), VertexId(1)]);
        // LOOP: the vertex has one arrow in and out but xx ∈ I.
        assert_eq!(truncation_vertices(&loop_algebra()), vec![]);
    }

    #[test]
    fn truncation_matches_unique_occurrence() {
        // A vertex is a truncation vertex exactly when it occurs once
        // across all maximal-path vertex sequences.
        for p in [lin(), loop_algebra(), ag1(), ag2()] {
            let q = p.quiver();
            let mut occurrences = vec![0usize; q.vertex_count()];
            for m in p.maximal_paths().unwrap() {
                for v in m.path.vertex_sequence(q) {
                    occurrences[v.0] += 1;
                }
            }
            let t = truncation_vertices(&p);
            for v in q.vertex_ids() {
                assert_eq!(t.contains(&v), occurrences[v.0] == 1, "vertex {v:?} of {:?}", p.name());
            }
        }
    }

    #[test]
    fn ag1_hypergraph() {
        let h = hypergraph_of(&ag1()).unwrap();
        let labels: Vec<&str> = h.vertices.iter().map(|x| x.label.as_str()).collect();
        assert_eq!(labels, vec!["a1*a2*a3", "b", "c", "e_v3"]);
        assert_eq!(h.hyperedges[0].members, vec![0, 0, 0, 1]);
        assert_eq!(h.hyperedges[1].members, vec![0, 1, 2]);
        assert_eq!(h.hyperedges[2].members, vec![2, 3]);
        // Orientation at a1*a2*a3: (V1, V1, V2, V1) up to rotation.
        assert_eq!(h.orientations[0], vec![0, 0, 0, 1]);
        assert_eq!(h.orientations[3], vec![2]);
    }

    #[test]
    fn lin_and_loop_hypergraphs() {
        let h = hypergraph_of(&lin()).unwrap();
        let labels: Vec<&str> = h.vertices.iter().map(|x| x.label.as_str()).collect();
        assert_eq!(labels, vec!["a", "e_u", "e_v"]);
        assert_eq!(h.hyperedges[0].members, vec![0, 1]);
        assert_eq!(h.hyperedges[1].members, vec![0, 2]);

        let h = hypergraph_of(&loop_algebra()).unwrap();
        assert_eq!(h.vertices.len(), 1);
        assert_eq!(h.hyperedges[0].members, vec![0, 0]);
        assert_eq!(h.orientations[0], vec![0, 0]);
    }

    #[test]
    fn reduction_agrees_with_the_star_configuration() {
        for p in [lin(), loop_algebra(), ag1(), ag2()] {
            let h = hypergraph_of(&p).unwrap();
            let reduced = reduce_to_configuration(&h);
            let direct = configuration_of_pair(&star(&p).unwrap().pair);
            assert_eq!(reduced, direct, "for {:?}", p.name());
        }
    }

    #[test]
    fn ag1_and_ag2_are_isomorphic() {
        let h1 = hypergraph_of(&ag1()).unwrap();
        let h2 = hypergraph_of(&ag2()).unwrap();
        let out = hypergraphs_isomorphic(&h1, &h2, DEFAULT_BUDGET);
        let iso = out.witness().expect("iso");
        assert!(check_hypergraph_iso(&h1, &h2, iso));
        // The identity on indices happens to work for these fixtures.
        assert_eq!(iso.vertex_map, vec![0, 1, 2, 3]);
        assert_eq!(iso.edge_map, vec![0, 1, 2]);
    }

    #[test]
    fn self_isomorphism_and_easy_rejections() {
        let h = hypergraph_of(&ag1()).unwrap();
        let out = hypergraphs_isomorphic(&h, &h, DEFAULT_BUDGET);
        assert!(check_hypergraph_iso(&h, &h, out.witness().unwrap()));

        let l = hypergraph_of(&lin()).unwrap();
        let o = hypergraph_of(&loop_algebra()).unwrap();
        assert_eq!(hypergraphs_isomorphic(&l, &o, DEFAULT_BUDGET), IsoOutcome::NonIso);
        assert!(signature(&l) != signature(&o));
    }

    #[test]
    fn orientation_lengths() {
        for p in [lin(), loop_algebra(), ag1(), ag2()] {
            let h = hypergraph_of(&p).unwrap();
            let maximal = p.maximal_paths().unwrap();
            for (x, v) in h.vertices.iter().enumerate() {
                match v.kind {
                    HVertexKind::MaximalPath { index } => {
                        assert_eq!(h.orientations[x].len(), maximal[index].path.len() + 1)
                    }
                    HVertexKind::Truncation { .. } => assert_eq!(h.orientations[x].len(), 1),
                }
            }
            for e in &h.hyperedges {
                assert!(e.size() >= 2, "hyperedge {} of {:?}", e.label, p.name());
            }
        }
    }

    #[test]
    fn tiny_budget_gives_undecided() {
        let h1 = hypergraph_of(&ag1()).unwrap();
        let h2 = hypergraph_of(&ag2()).unwrap();
        assert_eq!(hypergraphs_isomorphic(&h1, &h2, 1), IsoOutcome::Undecided);
    }
}
