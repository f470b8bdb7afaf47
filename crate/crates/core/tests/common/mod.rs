#![allow(dead_code)]

use itertools::Itertools;
use rand::seq::SliceRandom;
use rand::Rng;
use triplesys::system::all_triples;
use triplesys::{Embedding, PatternKind, Triple, TripleSystem};

/// Each triple kept independently with probability `p`.
pub fn random_host<R: Rng>(rng: &mut R, n: usize, p: f64) -> TripleSystem {
    let edges: Vec<Triple> = all_triples(n).filter(|_| rng.gen_bool(p)).collect();
    TripleSystem::new(n, edges).unwrap()
}

/// First injective map in lexicographic order carrying every pattern edge
/// onto a host edge, found by trying all of them.
pub fn naive_embedding(host: &TripleSystem, kind: PatternKind) -> Option<Embedding> {
    let pattern = kind.pattern();
    (0..host.n()).permutations(pattern.vertex_count).find_map(|map| {
        pattern
            .edges
            .iter()
            .all(|&[a, b, c]| host.contains_edge(map[a], map[b], map[c]))
            .then(|| Embedding::new(kind, map))
    })
}

/// Minimum positive co-degree by counting, for every pair, the edges that
/// contain it.
pub fn scanned_min_codegree(host: &TripleSystem) -> Option<usize> {
    let n = host.n();
    let mut best = None;
    for u in 0..n {
        for v in u + 1..n {
            let d = host.edges().iter().filter(|e| e.contains(&u) && e.contains(&v)).count();
            if d > 0 && best.is_none_or(|b| d < b) {
                best = Some(d);
            }
        }
    }
    best
}

/// Deletes edges of the complete host in random order, skipping any deletion
/// that would drop `δ₂⁺` below `threshold`, until `deletions` succeeded or
/// every triple was tried.
pub fn dense_host<R: Rng>(rng: &mut R, n: usize, threshold: usize, deletions: usize) -> TripleSystem {
    let mut order: Vec<Triple> = all_triples(n).collect();
    order.shuffle(rng);
    let mut host = TripleSystem::complete(n).unwrap();
    let mut removed = 0;
    for t in order {
        if removed == deletions {
            break;
        }
        if let Some(next) = host.without_edge(t) {
            if next.min_positive_codegree().is_some_and(|d| d >= threshold) {
                host = next;
                removed += 1;
            }
        }
    }
    host
}

/// Host on `n <= 6` vertices whose edge set is the bit mask `mask` over
/// lexicographically ordered triples.
pub fn host_from_mask(n: usize, mask: u64) -> TripleSystem {
    let edges: Vec<Triple> = all_triples(n)
        .enumerate()
        .filter(|(i, _)| mask >> i & 1 == 1)
        .map(|(_, t)| t)
        .collect();
    TripleSystem::new(n, edges).unwrap()
}
