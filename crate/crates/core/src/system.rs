//! 3-uniform hypergraphs, pair neighborhoods and co-degree invariants.
//!
//! A [`TripleSystem`] keeps its edges twice: once as a sorted list of
//! triples for deterministic iteration, and once as an `n x n` matrix of
//! [`VertexSet`]s where entry `(u, v)` is `N(u, v)`, the set of vertices `w`
//! such that `{u, v, w}` is an edge. The diagonal is always empty.

use std::fmt;

use crate::error::Error;
use crate::pattern::PatternKind;
use crate::vertex_set::VertexSet;

/// Largest supported vertex count; every vertex set fits one `u64`.
pub const MAX_VERTICES: usize = 64;

/// An edge, stored with its vertices in ascending order.
pub type Triple = [usize; 3];

/// Read access to pair neighborhoods. Implemented by [`TripleSystem`] and by
/// the mutable work states used during search.
pub trait Neighborhoods {
    fn order(&self) -> usize;

    /// `N(u, v)`; empty when `u == v`.
    fn neighborhood(&self, u: usize, v: usize) -> VertexSet;

    fn has_edge(&self, a: usize, b: usize, c: usize) -> bool {
        self.neighborhood(a, b).contains(c)
    }
}

/// Sorts a triple and rejects repeated vertices.
pub fn normalize_triple(t: [usize; 3]) -> Option<Triple> {
    let mut t = t;
    t.sort_unstable();
    (t[0] != t[1] && t[1] != t[2]).then_some(t)
}

/// Dense neighborhood matrix, shared by the immutable host type and the
/// search states.
#[derive(Clone, PartialEq, Eq)]
pub(crate) struct NeighborhoodMatrix {
    n: usize,
    cells: Vec<VertexSet>,
}

impl NeighborhoodMatrix {
    pub(crate) fn new(n: usize) -> Self {
        NeighborhoodMatrix {
            n,
            cells: vec![VertexSet::EMPTY; n * n],
        }
    }

    #[inline]
    pub(crate) fn get(&self, u: usize, v: usize) -> VertexSet {
        self.cells[u * self.n + v]
    }

    pub(crate) fn insert(&mut self, [a, b, c]: Triple) {
        let n = self.n;
        for (x, y, z) in [(a, b, c), (a, c, b), (b, c, a)] {
            self.cells[x * n + y].insert(z);
            self.cells[y * n + x].insert(z);
        }
    }

    pub(crate) fn remove(&mut self, [a, b, c]: Triple) {
        let n = self.n;
        for (x, y, z) in [(a, b, c), (a, c, b), (b, c, a)] {
            self.cells[x * n + y].remove(z);
            self.cells[y * n + x].remove(z);
        }
    }
}

impl Neighborhoods for NeighborhoodMatrix {
    fn order(&self) -> usize {
        self.n
    }

    fn neighborhood(&self, u: usize, v: usize) -> VertexSet {
        self.get(u, v)
    }
}

/// An `n`-vertex 3-uniform hypergraph on the vertex set `{0, ..., n - 1}`.
#[derive(Clone, PartialEq, Eq)]
pub struct TripleSystem {
    edges: Vec<Triple>,
    nbr: NeighborhoodMatrix,
}

impl TripleSystem {
    /// Builds a hypergraph, validating every edge. Vertex order inside an edge
    /// is irrelevant; duplicates (after sorting) are rejected.
    pub fn new<I>(n: usize, edges: I) -> Result<Self, Error>
    where
        I: IntoIterator<Item = [usize; 3]>,
    {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        let mut nbr = NeighborhoodMatrix::new(n);
        let mut list = Vec::new();
        for raw in edges {
            if raw.iter().any(|&v| v >= n) {
                return Err(Error::VertexOutOfRange { edge: raw, n });
            }
            let t = normalize_triple(raw).ok_or(Error::DegenerateEdge(raw))?;
            if nbr.get(t[0], t[1]).contains(t[2]) {
                return Err(Error::DuplicateEdge(t));
            }
            nbr.insert(t);
            list.push(t);
        }
        list.sort_unstable();
        Ok(TripleSystem { edges: list, nbr })
    }

    pub fn empty(n: usize) -> Result<Self, Error> {
        TripleSystem::new(n, std::iter::empty())
    }

    /// All `C(n, 3)` triples.
    pub fn complete(n: usize) -> Result<Self, Error> {
        TripleSystem::new(n, all_triples(n))
    }

    pub(crate) fn from_matrix(nbr: NeighborhoodMatrix) -> Self {
        let n = nbr.n;
        let edges = all_triples(n)
            .filter(|&[a, b, c]| nbr.get(a, b).contains(c))
            .collect();
        TripleSystem { edges, nbr }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.nbr.n
    }

    /// Edges in ascending lexicographic order.
    pub fn edges(&self) -> &[Triple] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn is_edgeless(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    pub fn contains_edge(&self, a: usize, b: usize, c: usize) -> bool {
        let n = self.n();
        a < n && b < n && c < n && self.nbr.get(a, b).contains(c)
    }

    /// `N(u, v)`. Panics if either vertex is out of range.
    #[inline]
    pub fn neighborhood(&self, u: usize, v: usize) -> VertexSet {
        self.nbr.get(u, v)
    }

    #[inline]
    pub fn codegree(&self, u: usize, v: usize) -> usize {
        self.nbr.get(u, v).len()
    }

    /// Do the four vertices span all four triples?
    pub fn is_k4(&self, [a, b, c, d]: [usize; 4]) -> bool {
        let set: VertexSet = [a, b, c, d].into_iter().collect();
        set.len() == 4
            && self.contains_edge(a, b, c)
            && self.contains_edge(a, b, d)
            && self.contains_edge(a, c, d)
            && self.contains_edge(b, c, d)
    }

    /// Copy with edge `t` removed; returns `None` if `t` is not an edge.
    pub fn without_edge(&self, t: [usize; 3]) -> Option<TripleSystem> {
        let t = normalize_triple(t)?;
        let pos = self.edges.binary_search(&t).ok()?;
        let mut next = self.clone();
        next.edges.remove(pos);
        next.nbr.remove(t);
        Some(next)
    }

    /// Image of the hypergraph under `perm`, which maps old vertex `v` to
    /// `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<TripleSystem, Error> {
        let n = self.n();
        let image: VertexSet = perm.iter().copied().filter(|&v| v < n).collect();
        if perm.len() != n || image.len() != n {
            return Err(Error::NotAPermutation(n));
        }
        TripleSystem::new(
            n,
            self.edges.iter().map(|&[a, b, c]| [perm[a], perm[b], perm[c]]),
        )
    }

    pub fn codegree_table(&self) -> CodegreeTable<'_> {
        build_codegree_table(self)
    }

    pub fn min_positive_codegree(&self) -> Option<usize> {
        min_positive_codegree(self)
    }
}

impl Neighborhoods for TripleSystem {
    fn order(&self) -> usize {
        self.n()
    }

    fn neighborhood(&self, u: usize, v: usize) -> VertexSet {
        self.nbr.get(u, v)
    }
}

impl fmt::Debug for TripleSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("TripleSystem")
            .field("n", &self.n())
            .field("edges", &self.edges)
            .finish()
    }
}

/// All `C(n, 3)` triples in lexicographic order.
pub fn all_triples(n: usize) -> impl Iterator<Item = Triple> {
    (0..n).flat_map(move |a| {
        (a + 1..n).flat_map(move |b| (b + 1..n).map(move |c| [a, b, c]))
    })
}

/// All unordered pairs `(u, v)` with `u < v < n`, lexicographic.
pub fn all_pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |u| (u + 1..n).map(move |v| (u, v)))
}

/// Pair neighborhoods of a host together with its co-degree summary.
#[derive(Clone, Debug)]
pub struct CodegreeTable<'a> {
    host: &'a TripleSystem,
    support: Vec<(usize, usize)>,
    min_positive: Option<usize>,
    max_positive: Option<usize>,
}

impl<'a> CodegreeTable<'a> {
    pub fn host(&self) -> &'a TripleSystem {
        self.host
    }

    pub fn neighborhood(&self, u: usize, v: usize) -> VertexSet {
        self.host.neighborhood(u, v)
    }

    /// Pairs `(u, v)`, `u < v`, with non-empty neighborhood.
    pub fn support_pairs(&self) -> &[(usize, usize)] {
        &self.support
    }

    /// Minimum positive co-degree; `None` exactly when the host is edgeless.
    pub fn min_positive_codegree(&self) -> Option<usize> {
        self.min_positive
    }

    pub fn max_positive_codegree(&self) -> Option<usize> {
        self.max_positive
    }

    /// Minimum co-degree over all pairs, zeros included. `None` when there
    /// are fewer than two vertices.
    pub fn min_codegree(&self) -> Option<usize> {
        all_pairs(self.host.n())
            .map(|(u, v)| self.host.codegree(u, v))
            .min()
    }
}

pub fn build_codegree_table(host: &TripleSystem) -> CodegreeTable<'_> {
    let support: Vec<_> = all_pairs(host.n())
        .filter(|&(u, v)| !host.neighborhood(u, v).is_empty())
        .collect();
    let degrees = support.iter().map(|&(u, v)| host.codegree(u, v));
    CodegreeTable {
        host,
        min_positive: degrees.clone().min(),
        max_positive: degrees.max(),
        support,
    }
}

pub fn min_positive_codegree(host: &TripleSystem) -> Option<usize> {
    all_pairs(host.n())
        .map(|(u, v)| host.codegree(u, v))
        .filter(|&d| d > 0)
        .min()
}

/// An ordered partition of `{0, ..., n - 1}` into disjoint parts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartitionSpec {
    parts: Vec<VertexSet>,
}

impl PartitionSpec {
    pub fn new(n: usize, parts: Vec<VertexSet>) -> Result<Self, Error> {
        let mut seen = VertexSet::EMPTY;
        for part in &parts {
            if !part.is_disjoint(seen) {
                return Err(Error::InvalidPartitionParts(n));
            }
            seen = seen.union(*part);
        }
        if seen != VertexSet::full(n) || n > MAX_VERTICES {
            return Err(Error::InvalidPartitionParts(n));
        }
        Ok(PartitionSpec { parts })
    }

    pub fn parts(&self) -> &[VertexSet] {
        &self.parts
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.parts.iter().map(|p| p.len()).collect()
    }

    pub fn is_balanced(&self) -> bool {
        let sizes = self.sizes();
        match (sizes.iter().min(), sizes.iter().max()) {
            (Some(lo), Some(hi)) => hi - lo <= 1,
            _ => true,
        }
    }

    pub fn part_of(&self, v: usize) -> Option<usize> {
        self.parts.iter().position(|p| p.contains(v))
    }
}

/// The complete balanced `k`-partite 3-graph on `n` vertices. Larger parts
/// come first and vertices are assigned to parts in ascending order.
pub fn construct_complete_k_partite(
    n: usize,
    k: usize,
) -> Result<(TripleSystem, PartitionSpec), Error> {
    if k < 3 || n < k || n > MAX_VERTICES {
        return Err(Error::InvalidConstruction { n, k });
    }
    let (base, extra) = (n / k, n % k);
    let mut parts = Vec::with_capacity(k);
    let mut next = 0;
    for idx in 0..k {
        let size = base + usize::from(idx < extra);
        parts.push((next..next + size).collect::<VertexSet>());
        next += size;
    }
    let partition = PartitionSpec::new(n, parts)?;
    let part_of: Vec<usize> = (0..n)
        .map(|v| partition.part_of(v).expect("partition covers every vertex"))
        .collect();
    let host = TripleSystem::new(
        n,
        all_triples(n).filter(|&[a, b, c]| {
            part_of[a] != part_of[b] && part_of[a] != part_of[c] && part_of[b] != part_of[c]
        }),
    )?;
    Ok((host, partition))
}

/// The exact positive co-degree Turán number for `n >= 6`: `floor(n/3)` for
/// C5-minus and K4-minus; for C5, `2k` when `n = 4k, 4k+1, 4k+2` and `2k+1`
/// when `n = 4k+3`.
pub fn theorem_value(n: usize, family: PatternKind) -> Result<usize, Error> {
    if n < 6 {
        return Err(Error::BelowTheoremRange(n));
    }
    match family {
        PatternKind::C5Minus | PatternKind::K4Minus => Ok(n / 3),
        PatternKind::C5 => {
            let k = n / 4;
            Ok(if n % 4 == 3 { 2 * k + 1 } else { 2 * k })
        }
        PatternKind::K4 | PatternKind::F32 => Err(Error::NoClosedForm(family)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k_partite(n: usize, k: usize) -> TripleSystem {
        construct_complete_k_partite(n, k).unwrap().0
    }

    #[test]
    fn single_edge_table() {
        let h = TripleSystem::new(3, [[2, 0, 1]]).unwrap();
        let table = h.codegree_table();
        assert_eq!(table.min_positive_codegree(), Some(1));
        assert_eq!(table.support_pairs(), &[(0, 1), (0, 2), (1, 2)]);
        assert_eq!(h.edges(), &[[0, 1, 2]]);
    }

    #[test]
    fn complete_five_has_codegree_three() {
        let h = TripleSystem::complete(5).unwrap();
        assert_eq!(h.edge_count(), 10);
        assert_eq!(h.min_positive_codegree(), Some(3));
        assert_eq!(h.codegree_table().min_codegree(), Some(3));
    }

    #[test]
    fn balanced_three_partite_nine() {
        assert_eq!(k_partite(9, 3).min_positive_codegree(), Some(3));
    }

    #[test]
    fn four_partite_values() {
        assert_eq!(k_partite(7, 4).min_positive_codegree(), Some(3));
        assert_eq!(k_partite(8, 4).min_positive_codegree(), Some(4));
        assert_eq!(k_partite(11, 4).min_positive_codegree(), Some(5));
    }

    #[test]
    fn edgeless_is_undefined() {
        let h = TripleSystem::empty(10).unwrap();
        assert_eq!(h.min_positive_codegree(), None);
        let table = h.codegree_table();
        assert_eq!(table.min_positive_codegree(), None);
        assert!(table.support_pairs().is_empty());
        assert_eq!(table.min_codegree(), Some(0));
    }

    #[test]
    fn construction_layout() {
        let (h, parts) = construct_complete_k_partite(6, 3).unwrap();
        assert_eq!(parts.sizes(), vec![2, 2, 2]);
        assert_eq!(parts.parts()[0].to_vec(), vec![0, 1]);
        assert_eq!(parts.parts()[2].to_vec(), vec![4, 5]);
        assert_eq!(h.edge_count(), 8);
        assert_eq!(h.min_positive_codegree(), Some(2));

        let (k4, parts) = construct_complete_k_partite(4, 4).unwrap();
        assert_eq!(parts.sizes(), vec![1, 1, 1, 1]);
        assert_eq!(k4.edge_count(), 4);
        assert!(k4.is_k4([0, 1, 2, 3]));

        let (_, parts) = construct_complete_k_partite(7, 4).unwrap();
        assert_eq!(parts.sizes(), vec![2, 2, 2, 1]);
        assert!(parts.is_balanced());
    }

    #[test]
    fn construction_rejects_bad_ranges() {
        assert_eq!(
            construct_complete_k_partite(2, 3).unwrap_err(),
            Error::InvalidConstruction { n: 2, k: 3 }
        );
        assert!(construct_complete_k_partite(5, 2).is_err());
        assert!(construct_complete_k_partite(65, 4).is_err());
    }

    #[test]
    fn theorem_values() {
        assert_eq!(theorem_value(6, PatternKind::C5Minus), Ok(2));
        assert_eq!(theorem_value(6, PatternKind::C5), Ok(2));
        assert_eq!(theorem_value(7, PatternKind::C5), Ok(3));
        assert_eq!(theorem_value(10, PatternKind::C5), Ok(4));
        assert_eq!(theorem_value(12, PatternKind::K4Minus), Ok(4));
        assert_eq!(theorem_value(5, PatternKind::C5), Err(Error::BelowTheoremRange(5)));
        assert!(theorem_value(9, PatternKind::F32).is_err());
    }

    #[test]
    fn rejects_invalid_edges() {
        assert!(matches!(
            TripleSystem::new(3, [[0, 1, 3]]),
            Err(Error::VertexOutOfRange { .. })
        ));
        assert!(matches!(
            TripleSystem::new(3, [[0, 1, 1]]),
            Err(Error::DegenerateEdge(_))
        ));
        assert_eq!(
            TripleSystem::new(4, [[0, 1, 2], [2, 1, 0]]),
            Err(Error::DuplicateEdge([0, 1, 2]))
        );
        assert_eq!(TripleSystem::empty(65), Err(Error::TooManyVertices(65)));
    }

    #[test]
    fn without_edge_and_relabel() {
        let h = TripleSystem::complete(4).unwrap();
        let g = h.without_edge([3, 1, 2]).unwrap();
        assert_eq!(g.edge_count(), 3);
        assert!(!g.contains_edge(1, 2, 3));
        assert!(g.without_edge([1, 2, 3]).is_none());

        let r = g.relabel(&[3, 2, 1, 0]).unwrap();
        assert!(!r.contains_edge(0, 1, 2));
        assert!(r.contains_edge(1, 2, 3));
        assert!(g.relabel(&[0, 0, 1, 2]).is_err());
    }

    #[test]
    fn partition_validation() {
        let parts = vec![VertexSet::from_bits(0b011), VertexSet::from_bits(0b110)];
        assert!(PartitionSpec::new(3, parts).is_err());
        let parts = vec![VertexSet::from_bits(0b001), VertexSet::from_bits(0b010)];
        assert!(PartitionSpec::new(3, parts).is_err());
    }
}
