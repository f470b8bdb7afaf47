#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;
use triplesys::system::all_triples;
use triplesys::{Embedding, PatternKind, Triple, TripleSystem};

pub fn random_host<R: Rng>(rng: &mut R, n: usize, p: f64) -> TripleSystem {
    let edges: Vec<Triple> = all_triples(n).filter(|_| rng.gen_bool(p)).collect();
    TripleSystem::new(n, edges).unwrap()
}

/// Lexicographically first injective map carrying every pattern edge onto a
/// host edge, by depth-first enumeration of all injective maps.
pub fn naive_embedding(host: &TripleSystem, kind: PatternKind) -> Option<Embedding> {
    fn extend(host: &TripleSystem, kind: PatternKind, map: &mut Vec<usize>) -> bool {
        let pattern = kind.pattern();
        if map.len() == pattern.vertex_count {
            return pattern.edges.iter().all(|&[a, b, c]| host.contains_edge(map[a], map[b], map[c]));
        }
        for v in 0..host.n() {
            if map.contains(&v) {
                continue;
            }
            map.push(v);
            if extend(host, kind, map) {
                return true;
            }
            map.pop();
        }
        false
    }
    let mut map = Vec::new();
    extend(host, kind, &mut map).then(|| Embedding::new(kind, map))
}

pub fn scanned_min_codegree(host: &TripleSystem) -> Option<usize> {
    let n = host.n();
    (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .map(|(u, v)| host.edges().iter().filter(|e| e.contains(&u) && e.contains(&v)).count())
        .filter(|&d| d > 0)
        .min()
}

/// Random deletions from the complete host, each kept only if `δ₂⁺` stays
/// at least `threshold`.
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
