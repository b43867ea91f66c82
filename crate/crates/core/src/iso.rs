//! Isomorphism of presentations and of defining pairs: backtracking over
//! vertex and arrow bijections with signature pruning and an explicit
//! node budget.
//!
//! Both searches are exact. A result of [`IsoOutcome::NonIso`] means the
//! whole (pruned) space was exhausted; [`IsoOutcome::Undecided`] means
//! the budget ran out first and nothing is claimed either way.

use crate::pair::DefiningPair;
use crate::presentation::Presentation;
use crate::quiver::{ArrowId, Quiver, VertexId};

/// Default node budget for the backtracking searches; desk-size inputs
/// stay far below it.
pub const DEFAULT_BUDGET: u64 = 1_000_000;

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum IsoOutcome<W> {
    Iso(W),
    NonIso,
    Undecided,
}

impl<W> IsoOutcome<W> {
    pub fn is_iso(&self) -> bool {
        matches!(self, IsoOutcome::Iso(_))
    }

    pub fn witness(&self) -> Option<&W> {
        match self {
            IsoOutcome::Iso(w) => Some(w),
            _ => None,
        }
    }
}

/// A quiver isomorphism: `vertex_map[v]` and `arrow_map[a]` give the
/// images in the right-hand object.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PresentationIso {
    pub vertex_map: Vec<VertexId>,
    pub arrow_map: Vec<ArrowId>,
}

pub(crate) struct Budget {
    pub(crate) left: u64,
}

impl Budget {
    pub(crate) fn spend(&mut self) -> bool {
        if self.left == 0 {
            false
        } else {
            self.left -= 1;
            true
        }
    }
}

// (out-degree, in-degree, extra invariant) per vertex; the extra slot
// counts relations composing at the vertex for presentations and is 0
// for pairs.
fn vertex_signatures(q: &Quiver, extra: impl Fn(VertexId) -> usize) -> Vec<(usize, usize, usize)> {
    q.vertex_ids()
        .map(|v| (q.arrows_from(v).len(), q.arrows_into(v).len(), extra(v)))
        .collect()
}

fn sorted<T: Ord + Clone>(xs: &[T]) -> Vec<T> {
    let mut ys = xs.to_vec();
    ys.sort();
    ys
}

/// The generic quiver-bijection search. `accept` sees the completed
/// vertex and arrow maps and decides whether the extra structure is
/// carried over.
fn quiver_iso_search(
    left: &Quiver,
    right: &Quiver,
    left_sig: &[(usize, usize, usize)],
    right_sig: &[(usize, usize, usize)],
    accept: &impl Fn(&[usize], &[usize]) -> bool,
    budget: &mut Budget,
) -> Result<Option<PresentationIso>, ()> {
    let n = left.vertex_count();
    // Most-constrained vertices first: rare signatures, high degree.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| {
        let freq = right_sig.iter().filter(|s| **s == left_sig[v]).count();
        (freq, std::cmp::Reverse(left_sig[v].0 + left_sig[v].1), v)
    });

    let mut vmap = vec![usize::MAX; n];
    let mut used_v = vec![false; n];
    let mut amap = vec![usize::MAX; left.arrow_count()];
    let mut used_a = vec![false; left.arrow_count()];

    #[allow(clippy::too_many_arguments)]
    fn assign_arrows(
        left: &Quiver,
        right: &Quiver,
        vmap: &[usize],
        amap: &mut [usize],
        used_a: &mut [bool],
        next: usize,
        accept: &impl Fn(&[usize], &[usize]) -> bool,
        budget: &mut Budget,
    ) -> Result<Option<()>, ()> {
        if next == left.arrow_count() {
            return Ok(accept(vmap, amap).then_some(()));
        }
        let a = ArrowId(next);
        let src = vmap[left.source(a).0];
        let tgt = vmap[left.target(a).0];
        for b in right.arrow_ids() {
            if used_a[b.0] || right.source(b).0 != src || right.target(b).0 != tgt {
                continue;
            }
            if !budget.spend() {
                return Err(());
            }
            amap[next] = b.0;
            used_a[b.0] = true;
            if let Some(()) =
                assign_arrows(left, right, vmap, amap, used_a, next + 1, accept, budget)?
            {
                return Ok(Some(()));
            }
            used_a[b.0] = false;
            amap[next] = usize::MAX;
        }
        Ok(None)
    }

    #[allow(clippy::too_many_arguments)]
    fn assign_vertices(
        left: &Quiver,
        right: &Quiver,
        left_sig: &[(usize, usize, usize)],
        right_sig: &[(usize, usize, usize)],
        order: &[usize],
        depth: usize,
        vmap: &mut [usize],
        used_v: &mut [bool],
        amap: &mut [usize],
        used_a: &mut [bool],
        accept: &impl Fn(&[usize], &[usize]) -> bool,
        budget: &mut Budget,
    ) -> Result<Option<()>, ()> {
        if depth == order.len() {
            return assign_arrows(left, right, vmap, amap, used_a, 0, accept, budget);
        }
        let v = order[depth];
        for w in 0..right.vertex_count() {
            if used_v[w] || right_sig[w] != left_sig[v] {
                continue;
            }
            if !budget.spend() {
                return Err(());
            }
            vmap[v] = w;
            used_v[w] = true;
            if let Some(()) = assign_vertices(
                left, right, left_sig, right_sig, order, depth + 1, vmap, used_v, amap,
                used_a, accept, budget,
            )? {
                return Ok(Some(()));
            }
            used_v[w] = false;
            vmap[v] = usize::MAX;
        }
        Ok(None)
    }

    match assign_vertices(
        left, right, left_sig, right_sig, &order, 0, &mut vmap, &mut used_v, &mut amap,
        &mut used_a, accept, budget,
    )? {
        Some(()) => Ok(Some(PresentationIso {
            vertex_map: vmap.into_iter().map(VertexId).collect(),
            arrow_map: amap.into_iter().map(ArrowId).collect(),
        })),
        None => Ok(None),
    }
}

/// Searches for an isomorphism of presentations: a quiver isomorphism
/// carrying the relation set of `p` bijectively onto that of `q`.
pub fn presentations_isomorphic(
    p: &Presentation,
    q: &Presentation,
    budget: u64,
) -> IsoOutcome<PresentationIso> {
    let (lq, rq) = (p.quiver(), q.quiver());
    if lq.vertex_count() != rq.vertex_count()
        || lq.arrow_count() != rq.arrow_count()
        || p.relation_count() != q.relation_count()
    {
        return IsoOutcome::NonIso;
    }
    let left_sig =
        vertex_signatures(lq, |v| p.relations().filter(|&(a, _)| lq.target(a) == v).count());
    let right_sig =
        vertex_signatures(rq, |v| q.relations().filter(|&(a, _)| rq.target(a) == v).count());
    if sorted(&left_sig) != sorted(&right_sig) {
        return IsoOutcome::NonIso;
    }

    let accept = |_vmap: &[usize], amap: &[usize]| {
        p.relations()
            .all(|(a, b)| q.is_relation(ArrowId(amap[a.0]), ArrowId(amap[b.0])))
    };
    let mut budget = Budget { left: budget };
    match quiver_iso_search(lq, rq, &left_sig, &right_sig, &accept, &mut budget) {
        Err(()) => IsoOutcome::Undecided,
        Ok(Some(w)) => IsoOutcome::Iso(w),
        Ok(None) => IsoOutcome::NonIso,
    }
}

/// Searches for an isomorphism of defining pairs: a quiver isomorphism
/// matching cycle classes bijectively, multiplicities included.
pub fn pairs_isomorphic(
    x: &DefiningPair,
    y: &DefiningPair,
    budget: u64,
) -> IsoOutcome<PresentationIso> {
    let (lq, rq) = (x.quiver(), y.quiver());
    if lq.vertex_count() != rq.vertex_count()
        || lq.arrow_count() != rq.arrow_count()
        || x.classes().len() != y.classes().len()
    {
        return IsoOutcome::NonIso;
    }
    let mut lens_x: Vec<(usize, u32)> = x
        .classes()
        .iter()
        .map(|c| (c.len(), c.multiplicity()))
        .collect();
    let mut lens_y: Vec<(usize, u32)> = y
        .classes()
        .iter()
        .map(|c| (c.len(), c.multiplicity()))
        .collect();
    lens_x.sort_unstable();
    lens_y.sort_unstable();
    if lens_x != lens_y {
        return IsoOutcome::NonIso;
    }

    let left_sig = vertex_signatures(lq, |_| 0);
    let right_sig = vertex_signatures(rq, |_| 0);
    if sorted(&left_sig) != sorted(&right_sig) {
        return IsoOutcome::NonIso;
    }

    let accept = |_vmap: &[usize], amap: &[usize]| {
        // Each mapped class must land on a class of y with the same
        // multiplicity; distinct classes have distinct canonical keys,
        // so hitting all of them is automatic once each is hit.
        x.classes().iter().all(|cx| {
            let mapped: Vec<ArrowId> = cx
                .representative()
                .arrows()
                .iter()
                .map(|a| ArrowId(amap[a.0]))
                .collect();
            let key = crate::pair::min_rotation(&mapped);
            y.classes().iter().any(|cy| {
                cy.representative().arrows() == key.as_slice()
                    && cy.multiplicity() == cx.multiplicity()
            })
        })
    };
    let mut budget = Budget { left: budget };
    match quiver_iso_search(lq, rq, &left_sig, &right_sig, &accept, &mut budget) {
        Err(()) => IsoOutcome::Undecided,
        Ok(Some(w)) => IsoOutcome::Iso(w),
        Ok(None) => IsoOutcome::NonIso,
    }
}

/// Checks a claimed presentation isomorphism, for use as a test oracle.
pub fn check_presentation_iso(p: &Presentation, q: &Presentation, iso: &PresentationIso) -> bool {
    let (lq, rq) = (p.quiver(), q.quiver());
    if iso.vertex_map.len() != lq.vertex_count() || iso.arrow_map.len() != lq.arrow_count() {
        return false;
    }
    let mut seen_v = vec![false; rq.vertex_count()];
    for &v in &iso.vertex_map {
        if v.0 >= seen_v.len() || seen_v[v.0] {
            return false;
        }
        seen_v[v.0] = true;
    }
    let mut seen_a = vec![false; rq.arrow_count()];
    for &a in &iso.arrow_map {
        if a.0 >= seen_a.len() || seen_a[a.0] {
            return false;
        }
        seen_a[a.0] = true;
    }
    for a in lq.arrow_ids() {
        let img = iso.arrow_map[a.0];
        if rq.source(img) != iso.vertex_map[lq.source(a).0]
            || rq.target(img) != iso.vertex_map[lq.target(a).0]
        {
            return false;
        }
    }
    if lq.vertex_count() != rq.vertex_count()
        || lq.arrow_count() != rq.arrow_count()
        || p.relation_count() != q.relation_count()
    {
        return false;
    }
    p.relations()
        .all(|(a, b)| q.is_relation(iso.arrow_map[a.0], iso.arrow_map[b.0]))
}

/// Checks a claimed pair isomorphism, for use as a test oracle.
pub fn check_pair_iso(x: &DefiningPair, y: &DefiningPair, iso: &PresentationIso) -> bool {
    let (lq, rq) = (x.quiver(), y.quiver());
    if iso.vertex_map.len() != lq.vertex_count()
        || iso.arrow_map.len() != lq.arrow_count()
        || x.classes().len() != y.classes().len()
    {
        return false;
    }
    for a in lq.arrow_ids() {
        let img = iso.arrow_map[a.0];
        if img.0 >= rq.arrow_count()
            || rq.source(img) != iso.vertex_map[lq.source(a).0]
            || rq.target(img) != iso.vertex_map[lq.target(a).0]
        {
            return false;
        }
    }
    x.classes().iter().all(|cx| {
        let mapped: Vec<ArrowId> = cx
            .representative()
            .arrows()
            .iter()
            .map(|a| iso.arrow_map[a.0])
            .collect();
        let key = crate::pair::min_rotation(&mapped);
        y.classes().iter().any(|cy| {
            cy.representative().arrows() == key.as_slice()
                && cy.multiplicity() == cx.multiplicity()
        })
    })
}
