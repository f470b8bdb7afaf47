//! Hill climbing on `δ₂⁺` over pattern-free hosts.

use std::cmp::Reverse;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Error;
use crate::pattern::{embedding_through, PatternKind};
use crate::system::{all_triples, theorem_value, NeighborhoodMatrix, Triple, TripleSystem};

use super::exact::seed_construction;

pub const MIN_LOCAL_VERTICES: usize = 8;
pub const MAX_LOCAL_VERTICES: usize = 24;

#[derive(Clone, Debug)]
pub struct LocalSearchResult {
    pub host: TripleSystem,
    pub min_positive_codegree: Option<usize>,
    pub accepted_moves: u64,
}

/// Co-degree histogram over all pairs, kept in sync with single-edge
/// toggles.
struct Histogram {
    n: usize,
    codegree: Vec<usize>,
    count: Vec<usize>,
}

impl Histogram {
    fn new(host: &TripleSystem) -> Self {
        let n = host.n();
        let mut codegree = vec![0; n * n];
        let mut count = vec![0; n.max(2) - 1];
        for u in 0..n {
            for v in u + 1..n {
                let d = host.codegree(u, v);
                codegree[u * n + v] = d;
                count[d] += 1;
            }
        }
        Histogram { n, codegree, count }
    }

    fn shift(&mut self, [a, b, c]: Triple, up: bool) {
        for (u, v) in [(a, b), (a, c), (b, c)] {
            let slot = &mut self.codegree[u * self.n + v];
            self.count[*slot] -= 1;
            if up {
                *slot += 1;
            } else {
                *slot -= 1;
            }
            self.count[*slot] += 1;
        }
    }

    /// `(δ₂⁺, number of pairs attaining it)`, compared so that larger
    /// minimum co-degree and then fewer tight pairs is better.
    fn objective(&self) -> (usize, Reverse<usize>) {
        match self.count.iter().enumerate().skip(1).find(|(_, &c)| c > 0) {
            Some((d, &c)) => (d, Reverse(c)),
            None => (0, Reverse(usize::MAX)),
        }
    }
}

/// Starts from the pattern's k-partite construction and toggles single
/// triples at random, keeping a move when the host stays pattern-free and
/// non-empty and the objective does not get worse. Deterministic in `seed`.
///
/// A pattern-free host whose `δ₂⁺` exceeds the proven extremal value is
/// reported as [`Error::TheoremFalsified`].
pub fn local_search_lower_bound(
    n: usize,
    pattern: PatternKind,
    budget: u64,
    seed: u64,
) -> Result<LocalSearchResult, Error> {
    if !(MIN_LOCAL_VERTICES..=MAX_LOCAL_VERTICES).contains(&n) {
        return Err(Error::OutOfRange {
            what: "vertex count for local search",
            value: n,
            min: MIN_LOCAL_VERTICES,
            max: MAX_LOCAL_VERTICES,
        });
    }
    let start = seed_construction(n, pattern)?;
    let triples: Vec<Triple> = all_triples(n).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut matrix = NeighborhoodMatrix::new(n);
    for &t in start.edges() {
        matrix.insert(t);
    }
    let mut histogram = Histogram::new(&start);
    let mut edges = start.edge_count();
    let mut current = histogram.objective();
    let mut accepted_moves = 0;

    for _ in 0..budget {
        let t = triples[rng.gen_range(0..triples.len())];
        let present = matrix.get(t[0], t[1]).contains(t[2]);
        if present {
            if edges == 1 {
                continue;
            }
            matrix.remove(t);
        } else {
            matrix.insert(t);
            if embedding_through(&matrix, pattern, t).is_some() {
                matrix.remove(t);
                continue;
            }
        }
        histogram.shift(t, !present);
        let next = histogram.objective();
        if next >= current {
            current = next;
            edges = if present { edges - 1 } else { edges + 1 };
            accepted_moves += 1;
        } else {
            histogram.shift(t, present);
            if present {
                matrix.insert(t);
            } else {
                matrix.remove(t);
            }
        }
    }

    let host = TripleSystem::from_matrix(matrix);
    let delta = host.min_positive_codegree();
    if let (Ok(bound), Some(found)) = (theorem_value(n, pattern), delta) {
        if found > bound {
            return Err(Error::TheoremFalsified {
                n,
                pattern,
                found,
                bound,
            });
        }
    }
    Ok(LocalSearchResult {
        host,
        min_positive_codegree: delta,
        accepted_moves,
    })
}
