//! Acceptance suite: one test per claim the library is sold on, each
//! printing a single pass line (failures panic, so every criterion
//! reports exactly one pass/fail line).

use std::process::Command;

use agq::{
    admissible_cuts, canonical_cut, configuration_of_pair, cut_algebra, hypergraph_of,
    hypergraphs_isomorphic, pairs_isomorphic, print_presentation, reduce_to_configuration,
    sample::{ag1, ag2, corpus, random_almost_gentle},
    signature, star, star_dimension, validate_pair, verify_star_iso, HVertexKind, IsoOutcome,
    Presentation, SimpleCycle, DEFAULT_BUDGET,
};
use rand_chacha::{rand_core::SeedableRng, ChaCha8Rng};

/// The shared instance set: the five named examples plus 500 generated
/// presentations of at most 8 vertices and 12 arrows.
fn instances() -> Vec<Presentation> {
    let mut all = corpus();
    let mut rng = ChaCha8Rng::seed_from_u64(0x5EED);
    for _ in 0..500 {
        all.push(random_almost_gentle(&mut rng, 8, 12));
    }
    all
}

fn fixture(name: &str) -> String {
    format!("{}/fixtures/{}", env!("CARGO_MANIFEST_DIR"), name)
}

#[test]
fn criterion_01_dimension_formula_matches_brute_force() {
    for p in &instances() {
        let dim = p.dimension().expect("finite-dimensional instance");
        let bound = p.quiver().arrow_count().max(1);
        let brute = p.brute_force_basis(bound).expect("brute force oracle");
        assert_eq!(
            dim,
            brute.len(),
            "formula and path enumeration disagree on {:?}",
            p.name()
        );
    }
    assert_eq!(ag1().dimension().unwrap(), 11);
    assert_eq!(ag2().dimension().unwrap(), 11);
    println!("criterion  1: dimension formula matches the brute-force basis — pass");
}

#[test]
fn criterion_02_star_dimension_doubles() {
    for p in &instances() {
        let dim = p.dimension().unwrap();
        assert_eq!(
            star_dimension(p).unwrap(),
            2 * dim,
            "star dimension is not twice the dimension on {:?}",
            p.name()
        );
    }
    assert_eq!(star_dimension(&ag1()).unwrap(), 22);
    println!("criterion  2: the star algebra doubles the dimension — pass");
}

#[test]
fn criterion_03_star_pair_is_a_defining_pair() {
    for p in &instances() {
        let sa = star(p).unwrap();
        let cycles: Vec<(SimpleCycle, u32)> = sa
            .pair
            .classes()
            .iter()
            .map(|c| (c.representative().clone(), c.multiplicity()))
            .collect();
        let report = validate_pair(sa.pair.name(), sa.pair.quiver(), &cycles);
        assert!(
            report.violations.is_empty() && report.pair.is_some(),
            "star pair fails validation on {:?}: {:?}",
            p.name(),
            report.violations
        );
    }
    let sa = star(&ag1()).unwrap();
    let lengths: Vec<usize> = sa.pair.classes().iter().map(|c| c.len()).collect();
    assert_eq!(lengths, vec![4, 2, 2]);
    println!("criterion  3: every star pair satisfies the defining-pair axioms — pass");
}

#[test]
fn criterion_04_star_presents_the_trivial_extension() {
    for p in &instances() {
        let report = verify_star_iso(p).unwrap();
        assert!(
            report.passed,
            "verification failed on {:?}: type1 {:?} type2 {:?} type3 {:?} socle {:?}",
            p.name(),
            report.type1_failures,
            report.type2_failures,
            report.type3_failures,
            report.socle_failures
        );
        assert!(report.type1_failures.is_empty());
        assert!(report.type2_failures.is_empty());
        assert!(report.type3_failures.is_empty());
        assert_eq!(report.generated, 2 * p.dimension().unwrap());
    }
    println!("criterion  4: arrow images satisfy all relations and generate T(A) — pass");
}

#[test]
fn criterion_05_canonical_cut_recovers_the_algebra() {
    for p in &instances() {
        let sa = star(p).unwrap();
        let back = cut_algebra(&sa.pair, &canonical_cut(&sa)).unwrap();
        assert_eq!(&back, p, "cut algebra differs structurally on {:?}", p.name());
        assert_eq!(
            print_presentation(&back),
            print_presentation(p),
            "canonical print differs on {:?}",
            p.name()
        );
    }
    println!("criterion  5: the canonical cut prints back the original byte for byte — pass");
}

#[test]
fn criterion_06_every_cut_re_extends_to_the_same_pair() {
    let four = corpus();
    let mut ag1_cuts = 0usize;
    for p in four.iter().take(4) {
        let sa = star(p).unwrap();
        for cut in admissible_cuts(&sa.pair) {
            let quotient = cut_algebra(&sa.pair, &cut).unwrap();
            if p.name() == Some("ag1") {
                ag1_cuts += 1;
                assert_eq!(quotient.dimension().unwrap(), 11);
                assert_eq!(quotient.quiver().vertex_count(), 3);
            }
            let re = star(&quotient).unwrap();
            let outcome = pairs_isomorphic(&re.pair, &sa.pair, DEFAULT_BUDGET);
            let witness = outcome
                .witness()
                .unwrap_or_else(|| panic!("cut {} does not re-extend", cut.display(sa.quiver())));
            assert!(agq::check_pair_iso(&re.pair, &sa.pair, witness));
        }
    }
    assert_eq!(ag1_cuts, 16);
    println!("criterion  6: all admissible cuts re-extend to isomorphic pairs — pass");
}

#[test]
fn criterion_07_hypergraph_reduces_to_the_brauer_configuration() {
    for p in &instances() {
        let h = hypergraph_of(p).unwrap();
        let sa = star(p).unwrap();
        assert_eq!(
            reduce_to_configuration(&h),
            configuration_of_pair(&sa.pair),
            "hypergraph reduction disagrees with the configuration on {:?}",
            p.name()
        );
    }
    println!("criterion  7: hypergraph reduction equals the trivial extension's configuration — pass");
}

#[test]
fn criterion_08_worked_example_compares_isomorphic() {
    let out = Command::new(env!("CARGO_BIN_EXE_agq"))
        .args(["compare", &fixture("ag1.alg"), &fixture("ag2.alg")])
        .output()
        .expect("binary runs");
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert_eq!(out.status.code(), Some(0), "compare did not exit 0: {stdout}");
    assert!(stdout.contains("isomorphic"), "no verdict in: {stdout}");
    assert!(stdout.contains("->"), "no explicit witness in: {stdout}");

    let hyper = Command::new(env!("CARGO_BIN_EXE_agq"))
        .args(["hypergraph", &fixture("ag1.alg")])
        .output()
        .expect("binary runs");
    let text = String::from_utf8(hyper.stdout).unwrap();
    assert!(text.contains("V_v1 = {1, 1, 1, 2}"), "V_v1 wrong in: {text}");
    assert!(text.contains("V_v2 = {1, 2, 3}"), "V_v2 wrong in: {text}");
    assert!(text.contains("V_v3 = {3, 4}"), "V_v3 wrong in: {text}");

    let h = hypergraph_of(&ag1()).unwrap();
    let members: Vec<&[usize]> = h.hyperedges.iter().map(|e| e.members.as_slice()).collect();
    assert_eq!(members, vec![&[0, 0, 0, 1][..], &[0, 1, 2][..], &[2, 3][..]]);
    println!("criterion  8: the worked example compares isomorphic with a printed witness — pass");
}

#[test]
fn criterion_09_signature_distinct_pairs_are_rejected() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xD15C);
    let pool: Vec<_> = (0..40)
        .map(|_| {
            let p = random_almost_gentle(&mut rng, 8, 12);
            let h = hypergraph_of(&p).unwrap();
            let s = signature(&h);
            (h, s)
        })
        .collect();
    let mut rejected = 0usize;
    'outer: for i in 0..pool.len() {
        for j in i + 1..pool.len() {
            if pool[i].1 == pool[j].1 {
                continue;
            }
            assert!(
                matches!(
                    hypergraphs_isomorphic(&pool[i].0, &pool[j].0, DEFAULT_BUDGET),
                    IsoOutcome::NonIso
                ),
                "instances {i} and {j} have different signatures but were not rejected"
            );
            rejected += 1;
            if rejected >= 120 {
                break 'outer;
            }
        }
    }
    assert!(rejected >= 50, "only {rejected} signature-distinct pairs found");
    println!("criterion  9: {rejected} signature-distinct pairs all report non-isomorphic — pass");
}

#[test]
fn criterion_10_structural_properties_hold_everywhere() {
    for p in &instances() {
        // Arrows partition into maximal paths, none repeated.
        let maximal = p.maximal_paths().unwrap();
        let mut seen = vec![0usize; p.quiver().arrow_count()];
        for m in &maximal {
            let mut inside = std::collections::BTreeSet::new();
            for &a in m.path.arrows() {
                assert!(inside.insert(a), "repeated arrow inside a maximal path");
                seen[a.0] += 1;
            }
        }
        assert!(
            seen.iter().all(|&c| c == 1),
            "arrows do not partition into maximal paths on {:?}",
            p.name()
        );

        // Hyperedges all have total multiplicity at least two, and
        // orientation lengths follow the path lengths.
        let h = hypergraph_of(p).unwrap();
        for e in &h.hyperedges {
            assert!(e.members.len() >= 2, "undersized hyperedge {}", e.label);
        }
        for (v, orientation) in h.vertices.iter().zip(&h.orientations) {
            match v.kind {
                HVertexKind::MaximalPath { index } => {
                    assert_eq!(orientation.len(), maximal[index].path.len() + 1)
                }
                HVertexKind::Truncation { .. } => assert_eq!(orientation.len(), 1),
            }
        }
    }
    println!("criterion 10: partition, hyperedge, and orientation invariants hold — pass");
}
