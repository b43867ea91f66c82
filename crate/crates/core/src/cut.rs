//! Admissible cuts of a defining pair: one arrow removed from each cycle
//! class. Cutting the pair of a star algebra recovers almost gentle
//! presentations, and every multiplicity-one pair arises that way.
//!
//! The two round trips worth remembering (exercised by the tests and the
//! acceptance suite):
//!
//! * cutting the star pair of `A` along the new arrows `{a_m}` returns
//!   the presentation of `A` identically;
//! * for any admissible cut `D` of a multiplicity-one pair `(Q, 𝒯)`, the
//!   star pair of the cut algebra is isomorphic to `(Q, 𝒯)` again.

use thiserror::Error;

use crate::pair::DefiningPair;
use crate::presentation::Presentation;
use crate::quiver::{ArrowId, Quiver};
use crate::star::StarAlgebra;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CutError {
    #[error("unknown arrow `{0}`")]
    UnknownArrow(String),
    #[error("a cut picks one arrow per class: expected {expected}, got {got}")]
    WrongSize { expected: usize, got: usize },
    #[error("class {0} has no arrow in the cut")]
    MissingClass(usize),
    #[error("class {0} has {1} arrows in the cut")]
    OverfullClass(usize, usize),
    #[error("cycle class {0} has multiplicity {1}; cuts require multiplicity 1")]
    MultiplicityNotOne(usize, u32),
}

/// An admissible cut: `arrows[i]` is the chosen arrow of class `i`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct AdmissibleCut {
    pub arrows: Vec<ArrowId>,
}

impl AdmissibleCut {
    /// Builds a cut from an unordered arrow set, checking that it meets
    /// every class exactly once.
    pub fn from_arrows(pair: &DefiningPair, arrows: &[ArrowId]) -> Result<Self, CutError> {
        if arrows.len() != pair.classes().len() {
            return Err(CutError::WrongSize {
                expected: pair.classes().len(),
                got: arrows.len(),
            });
        }
        let mut chosen = vec![Vec::new(); pair.classes().len()];
        for &a in arrows {
            match pair.class_of_arrow(a) {
                Some(c) => chosen[c].push(a),
                None => {
                    return Err(CutError::UnknownArrow(
                        pair.quiver().arrow_name(a).to_string(),
                    ))
                }
            }
        }
        let mut ordered = Vec::with_capacity(chosen.len());
        for (c, picks) in chosen.iter().enumerate() {
            match picks.as_slice() {
                [] => return Err(CutError::MissingClass(c)),
                [a] => ordered.push(*a),
                more => return Err(CutError::OverfullClass(c, more.len())),
            }
        }
        Ok(AdmissibleCut { arrows: ordered })
    }

    pub fn from_names(pair: &DefiningPair, names: &[&str]) -> Result<Self, CutError> {
        let arrows = names
            .iter()
            .map(|n| {
                pair.quiver()
                    .arrow_id(n)
                    .ok_or_else(|| CutError::UnknownArrow(n.to_string()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        AdmissibleCut::from_arrows(pair, &arrows)
    }

    pub fn contains(&self, a: ArrowId) -> bool {
        self.arrows.contains(&a)
    }

    pub fn display(&self, q: &Quiver) -> String {
        self.arrows
            .iter()
            .map(|&a| q.arrow_name(a))
            .collect::<Vec<_>>()
            .join(" ")
    }
}

/// The number of admissible cuts: the product of the class lengths.
pub fn admissible_cut_count(pair: &DefiningPair) -> u64 {
    pair.classes()
        .iter()
        .map(|c| c.len() as u64)
        .product()
}

/// Lazily enumerates all admissible cuts, in odometer order over the
/// classes (the first class varies slowest), choices taken in
/// canonical-rotation arrow order.
pub fn admissible_cuts(pair: &DefiningPair) -> AdmissibleCuts<'_> {
    AdmissibleCuts { pair, state: vec![0; pair.classes().len()], done: false }
}

pub struct AdmissibleCuts<'a> {
    pair: &'a DefiningPair,
    state: Vec<usize>,
    done: bool,
}

impl Iterator for AdmissibleCuts<'_> {
    type Item = AdmissibleCut;

    fn next(&mut self) -> Option<AdmissibleCut> {
        if self.done {
            return None;
        }
        let arrows = self
            .state
            .iter()
            .enumerate()
            .map(|(c, &k)| self.pair.classes()[c].representative().arrows()[k])
            .collect();
        // Advance the odometer, last class fastest.
        let mut i = self.state.len();
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            self.state[i] += 1;
            if self.state[i] < self.pair.classes()[i].len() {
                break;
            }
            self.state[i] = 0;
        }
        Some(AdmissibleCut { arrows })
    }
}

/// Removes the cut arrows and forms the quadratic monomial relations
/// `{ab : a, b ∉ D, ab composable, ab not a consecutive step of any
/// cycle}`. Requires every multiplicity to be 1.
pub fn cut_algebra(pair: &DefiningPair, cut: &AdmissibleCut) -> Result<Presentation, CutError> {
    for (c, class) in pair.classes().iter().enumerate() {
        if class.multiplicity() != 1 {
            return Err(CutError::MultiplicityNotOne(c, class.multiplicity()));
        }
    }
    // Re-validate the cut against this pair (cheap, and keeps the
    // operation total on its own inputs).
    let cut = AdmissibleCut::from_arrows(pair, &cut.arrows)?;

    let q = pair.quiver();
    let vertices: Vec<&str> = q.vertex_names().iter().map(|s| s.as_str()).collect();
    let kept: Vec<ArrowId> = q.arrow_ids().filter(|&a| !cut.contains(a)).collect();
    let arrows: Vec<(String, String, String)> = kept
        .iter()
        .map(|&a| {
            (
                q.arrow_name(a).to_string(),
                q.vertex_name(q.source(a)).to_string(),
                q.vertex_name(q.target(a)).to_string(),
            )
        })
        .collect();
    let sub = Quiver::new(
        &vertices,
        &arrows
            .iter()
            .map(|(n, s, t)| (n.as_str(), s.as_str(), t.as_str()))
            .collect::<Vec<_>>(),
    )
    .expect("sub-quiver of a valid quiver");

    let mut on_cycle: Vec<(ArrowId, ArrowId)> = pair
        .classes()
        .iter()
        .flat_map(|c| c.representative().consecutive_pairs())
        .collect();
    on_cycle.sort_unstable();

    let mut relations = Vec::new();
    for (i, &a) in kept.iter().enumerate() {
        for (j, &b) in kept.iter().enumerate() {
            if q.composable(a, b) && on_cycle.binary_search(&(a, b)).is_err() {
                relations.push((ArrowId(i), ArrowId(j)));
            }
        }
    }
    let p = Presentation::new(sub, relations)
        .expect("relations of a cut are unique and in range")
        .with_name(pair.name().map(|n| n.to_string()));
    Ok(p)
}

/// The canonical cut of a star pair: all the new arrows `{a_m}`.
pub fn canonical_cut(sa: &StarAlgebra) -> AdmissibleCut {
    AdmissibleCut { arrows: sa.new_arrows.clone() }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::iso::{check_pair_iso, pairs_isomorphic, DEFAULT_BUDGET};
    use crate::sample::ag1;
    use crate::star::star;

    #[test]
    fn counts_and_enumerates_cuts() {
        let s = star(&ag1()).unwrap();
        assert_eq!(admissible_cut_count(&s.pair), 16);
        let cuts: Vec<AdmissibleCut> = admissible_cuts(&s.pair).collect();
        assert_eq!(cuts.len(), 16);
        // Each cut picks one arrow per class; all cuts are distinct.
        for cut in &cuts {
            assert_eq!(cut.arrows.len(), 3);
        }
        let mut dedup = cuts.clone();
        dedup.dedup();
        assert_eq!(dedup.len(), 16);
    }

    #[test]
    fn canonical_cut_restores_the_presentation_identically() {
        for p in [crate::sample::lin(), crate::sample::loop_algebra(), ag1()] {
            let s = star(&p).unwrap();
            let back = cut_algebra(&s.pair, &canonical_cut(&s)).unwrap();
            assert_eq!(back, p, "canonical cut must undo star for {:?}", p.name());
        }
    }

    #[test]
    fn the_documented_noncanonical_cut_of_ag1() {
        let p = ag1();
        let s = star(&p).unwrap();
        let cut = AdmissibleCut::from_names(&s.pair, &["a1", "a_m2", "a_m3"]).unwrap();
        let out = cut_algebra(&s.pair, &cut).unwrap();
        let r = out.validate();
        assert!(r.is_almost_gentle);
        assert_eq!(out.dimension().unwrap(), 11);
        let shown: Vec<String> = out
            .maximal_paths()
            .unwrap()
            .iter()
            .map(|m| m.path.display(out.quiver()))
            .collect();
        assert_eq!(shown, vec!["a2*a3*a_m1", "b", "c"]);
    }

    #[test]
    fn every_cut_re_extends_to_the_same_pair() {
        let p = ag1();
        let s = star(&p).unwrap();
        for cut in admissible_cuts(&s.pair) {
            let algebra = cut_algebra(&s.pair, &cut).unwrap();
            assert!(algebra.validate().is_almost_gentle, "cut {}", cut.display(s.quiver()));
            let re = star(&algebra).unwrap();
            let out = pairs_isomorphic(&re.pair, &s.pair, DEFAULT_BUDGET);
            let w = out.witness().unwrap_or_else(|| {
                panic!("re-extension after cut {} must give an isomorphic pair", cut.display(s.quiver()))
            });
            assert!(check_pair_iso(&re.pair, &s.pair, w));
        }
    }

    #[test]
    fn loop_cut_returns_a_selfinjective_loop() {
        let s = star(&crate::sample::loop_algebra()).unwrap();
        let other = AdmissibleCut::from_names(&s.pair, &["x"]).unwrap();
        let out = cut_algebra(&s.pair, &other).unwrap();
        assert_eq!(out.quiver().arrow_count(), 1);
        assert_eq!(out.quiver().arrow_name(ArrowId(0)), "a_m1");
        assert_eq!(out.relation_count(), 1);
    }

    #[test]
    fn bad_cuts_are_rejected() {
        let s = star(&ag1()).unwrap();
        assert!(matches!(
            AdmissibleCut::from_names(&s.pair, &["a1"]),
            Err(CutError::WrongSize { expected: 3, got: 1 })
        ));
        // Two arrows from the big class, none from class 2.
        assert!(matches!(
            AdmissibleCut::from_names(&s.pair, &["a1", "a2", "a_m3"]),
            Err(CutError::MissingClass(1)) | Err(CutError::OverfullClass(0, 2))
        ));
        assert!(matches!(
            AdmissibleCut::from_names(&s.pair, &["nope", "a_m2", "a_m3"]),
            Err(CutError::UnknownArrow(_))
        ));
    }

    #[test]
    fn multiplicities_block_cutting() {
        let q = Quiver::new(&["v"], &[("x", "v", "v")]).unwrap();
        let c = crate::pair::SimpleCycle::from_names(&q, &["x"]).unwrap();
        let pair = crate::pair::validate_pair(None, &q, &[(c, 2)]).pair.unwrap();
        let cut = AdmissibleCut { arrows: vec![ArrowId(0)] };
        assert_eq!(
            cut_algebra(&pair, &cut),
            Err(CutError::MultiplicityNotOne(0, 2))
        );
    }
}
