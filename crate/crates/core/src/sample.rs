//! A small corpus of named almost gentle algebras plus a seeded random
//! generator, used throughout the test suites and handy at the REPL.

use rand_chacha::rand_core::RngCore;
use rand_chacha::ChaCha8Rng;

use crate::presentation::Presentation;

/// `u → v`, no relations. Gentle, dimension 3.
pub fn lin() -> Presentation {
    Presentation::from_names(Some("lin"), &["u", "v"], &[("a", "u", "v")], &[])
}

/// One loop `x` with `xx = 0`: the algebra `K[x]/(x²)`.
pub fn loop_algebra() -> Presentation {
    Presentation::from_names(Some("loop"), &["v"], &[("x", "v", "v")], &[("x", "x")])
}

/// The oriented 2-cycle with both compositions zero.
pub fn a2cyc() -> Presentation {
    Presentation::from_names(
        Some("a2cyc"),
        &["u", "v"],
        &[("a", "u", "v"), ("b", "v", "u")],
        &[("a", "b"), ("b", "a")],
    )
}

/// Three vertices, five arrows (one loop), seven relations; maximal
/// paths `a1 a2 a3`, `b`, `c`; dimension 11.
pub fn ag1() -> Presentation {
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

/// Two loops and two parallel arrows at `v1`; same maximal-path shape
/// and hypergraph as [`ag1`], but a non-isomorphic algebra.
pub fn ag2() -> Presentation {
    Presentation::from_names(
        Some("ag2"),
        &["v1", "v2", "v3"],
        &[
            ("a1", "v1", "v1"),
            ("a2", "v1", "v1"),
            ("a3", "v1", "v2"),
            ("b", "v1", "v2"),
            ("c", "v3", "v2"),
        ],
        &[
            ("a1", "a3"),
            ("a1", "b"),
            ("a2", "a1"),
            ("a2", "b"),
            ("a1", "a1"),
            ("a2", "a2"),
        ],
    )
}

/// The five named algebras, in a fixed order.
pub fn corpus() -> Vec<Presentation> {
    vec![lin(), loop_algebra(), a2cyc(), ag1(), ag2()]
}

fn pick(rng: &mut ChaCha8Rng, n: usize) -> usize {
    debug_assert!(n > 0);
    (rng.next_u64() % n as u64) as usize
}

fn shuffle<T>(rng: &mut ChaCha8Rng, xs: &mut [T]) {
    for i in (1..xs.len()).rev() {
        xs.swap(i, pick(rng, i + 1));
    }
}

/// Generates a connected almost gentle presentation with at most
/// `max_vertices` vertices and `max_arrows` arrows (and at least one
/// arrow). Deterministic in the generator state.
///
/// Construction: a random spanning tree plus extra random arrows, then
/// at each vertex a random partial matching of incoming against
/// outgoing arrows — matched compositions survive, all others become
/// relations, which is exactly condition (S1) — and finally one match
/// per cycle of the successor graph is demoted to a relation so the
/// algebra is finite-dimensional.
pub fn random_almost_gentle(
    rng: &mut ChaCha8Rng,
    max_vertices: usize,
    max_arrows: usize,
) -> Presentation {
    assert!(max_vertices >= 1 && max_arrows >= 1);
    let n = 1 + pick(rng, max_vertices);
    let min_arrows = std::cmp::max(n.saturating_sub(1), 1);
    let max_arrows = std::cmp::max(min_arrows, max_arrows);
    let m = min_arrows + pick(rng, max_arrows - min_arrows + 1);

    // Spanning tree first (weak connectivity), then free arrows.
    let mut endpoints: Vec<(usize, usize)> = Vec::with_capacity(m);
    for i in 1..n {
        let j = pick(rng, i);
        if pick(rng, 2) == 0 {
            endpoints.push((j, i));
        } else {
            endpoints.push((i, j));
        }
    }
    while endpoints.len() < m {
        endpoints.push((pick(rng, n), pick(rng, n)));
    }

    // Random partial matching of ins against outs at each vertex; a
    // matched pair (a, b) means ab survives, everything else composable
    // at the vertex is a relation.
    let mut matched: Vec<(usize, usize)> = Vec::new();
    for v in 0..n {
        let mut ins: Vec<usize> =
            (0..m).filter(|&a| endpoints[a].1 == v).collect();
        let mut outs: Vec<usize> =
            (0..m).filter(|&a| endpoints[a].0 == v).collect();
        shuffle(rng, &mut ins);
        shuffle(rng, &mut outs);
        let most = std::cmp::min(ins.len(), outs.len());
        if most == 0 {
            continue;
        }
        let k = pick(rng, most + 1);
        matched.extend(ins[..k].iter().copied().zip(outs[..k].iter().copied()));
    }

    // The successor graph (a → b for matched ab) is a partial
    // permutation, so its cycles are disjoint; break each one.
    let succ: std::collections::HashMap<usize, usize> = matched.iter().copied().collect();
    let mut on_kept_cycle = vec![false; m];
    let mut color = vec![0u8; m]; // 0 unseen, 1 open, 2 closed
    for start in 0..m {
        if color[start] != 0 {
            continue;
        }
        let mut trail = Vec::new();
        let mut a = start;
        loop {
            color[a] = 1;
            trail.push(a);
            match succ.get(&a) {
                Some(&b) if color[b] == 0 => a = b,
                Some(&b) if color[b] == 1 => {
                    // Found a cycle through b; mark its first edge.
                    on_kept_cycle[b] = true;
                    break;
                }
                _ => break,
            }
        }
        for a in trail {
            color[a] = 2;
        }
    }
    matched.retain(|&(a, _)| !on_kept_cycle[a]);

    let vertex_names: Vec<String> = (1..=n).map(|i| format!("v{i}")).collect();
    let arrow_names: Vec<String> = (1..=m).map(|i| format!("a{i}")).collect();
    let arrows: Vec<(&str, &str, &str)> = (0..m)
        .map(|a| {
            (
                arrow_names[a].as_str(),
                vertex_names[endpoints[a].0].as_str(),
                vertex_names[endpoints[a].1].as_str(),
            )
        })
        .collect();

    let keep: std::collections::HashSet<(usize, usize)> = matched.into_iter().collect();
    let relations: Vec<(&str, &str)> = (0..m)
        .flat_map(|a| (0..m).map(move |b| (a, b)))
        .filter(|&(a, b)| endpoints[a].1 == endpoints[b].0 && !keep.contains(&(a, b)))
        .map(|(a, b)| (arrow_names[a].as_str(), arrow_names[b].as_str()))
        .collect();

    let names: Vec<&str> = vertex_names.iter().map(|s| s.as_str()).collect();
    Presentation::from_names(None, &names, &arrows, &relations)
}
