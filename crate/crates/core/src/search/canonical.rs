use crate::error::Error;
use crate::system::{all_triples, TripleSystem};

/// Largest host accepted by [`canonical_key`].
pub const MAX_CANONICAL_VERTICES: usize = 7;

/// Relabeling-invariant key of a host on at most 7 vertices: the minimum,
/// over all vertex permutations, of the edge set encoded as a bit string
/// (bit `t` set iff the `t`-th triple in lexicographic order is an edge).
/// Equal keys hold exactly for isomorphic hosts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CanonicalForm {
    pub n: u8,
    pub bits: u64,
}

pub(crate) struct TripleIndex {
    n: usize,
    index: Vec<u8>,
}

impl TripleIndex {
    pub(crate) fn new(n: usize) -> Self {
        let mut index = vec![u8::MAX; n * n * n];
        for (t, [a, b, c]) in all_triples(n).enumerate() {
            for [x, y, z] in [[a, b, c], [a, c, b], [b, a, c], [b, c, a], [c, a, b], [c, b, a]] {
                index[(x * n + y) * n + z] = t as u8;
            }
        }
        TripleIndex { n, index }
    }

    #[inline]
    pub(crate) fn get(&self, a: usize, b: usize, c: usize) -> usize {
        self.index[(a * self.n + b) * self.n + c] as usize
    }
}

/// Encodes `edges` under every permutation of `0..n` and keeps the minimum.
pub(crate) fn min_encoding(n: usize, edges: &[[usize; 3]], index: &TripleIndex) -> u64 {
    let mut perm: Vec<usize> = (0..n).collect();
    let encode = |perm: &[usize]| {
        edges
            .iter()
            .fold(0u64, |acc, &[a, b, c]| acc | 1 << index.get(perm[a], perm[b], perm[c]))
    };
    let mut best = encode(&perm);
    // Heap's algorithm, iterative.
    let mut counters = vec![0usize; n];
    let mut i = 1;
    while i < n {
        if counters[i] < i {
            let j = if i % 2 == 0 { 0 } else { counters[i] };
            perm.swap(j, i);
            best = best.min(encode(&perm));
            counters[i] += 1;
            i = 1;
        } else {
            counters[i] = 0;
            i += 1;
        }
    }
    best
}

pub fn canonical_key(host: &TripleSystem) -> Result<CanonicalForm, Error> {
    let n = host.n();
    if n > MAX_CANONICAL_VERTICES {
        return Err(Error::OutOfRange {
            what: "vertex count for an exact canonical key",
            value: n,
            min: 0,
            max: MAX_CANONICAL_VERTICES,
        });
    }
    let index = TripleIndex::new(n);
    Ok(CanonicalForm {
        n: n as u8,
        bits: min_encoding(n, host.edges(), &index),
    })
}
