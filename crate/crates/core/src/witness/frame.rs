use crate::pattern::{validate_embedding, Embedding, PatternKind};
use crate::system::TripleSystem;
use crate::vertex_set::VertexSet;

use super::{Contradiction, WitnessError};

/// The six index pairs of a four-vertex base, lexicographic.
pub(crate) const PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

/// The three perfect matchings of the base indices.
pub(crate) const OPPOSITE: [[(usize, usize); 2]; 3] = [
    [(0, 1), (2, 3)],
    [(0, 2), (1, 3)],
    [(0, 3), (1, 2)],
];

/// Indices other than `i`, ascending.
pub(crate) fn others(i: usize) -> [usize; 3] {
    let mut out = [0; 3];
    for (slot, x) in out.iter_mut().zip((0..4).filter(|&x| x != i)) {
        *slot = x;
    }
    out
}

/// The two indices outside `{i, j}`, ascending.
pub(crate) fn complement(i: usize, j: usize) -> (usize, usize) {
    let mut rest = (0..4).filter(|&x| x != i && x != j);
    (rest.next().unwrap(), rest.next().unwrap())
}

/// A K4 base `(v_0, v_1, v_2, v_3)` with its pair neighborhoods and the sets
///
/// * `A_i = N(v_j, v_k) ∩ N(v_k, v_l) ∩ N(v_l, v_j)` and
/// * `B_i = N(v_i, v_j) ∩ N(v_i, v_k) ∩ N(v_i, v_l)`
///
/// where `{j, k, l}` are the other three indices. The sets are always bound
/// to this base; a different K4 gets its own frame.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct K4Frame {
    pub base: [usize; 4],
    nbr: [[VertexSet; 4]; 4],
    pub a_sets: [VertexSet; 4],
    pub b_sets: [VertexSet; 4],
}

impl K4Frame {
    pub fn new(host: &TripleSystem, base: [usize; 4]) -> Result<Self, WitnessError> {
        if base.iter().any(|&v| v >= host.n()) || !host.is_k4(base) {
            return Err(WitnessError::PreconditionViolated(format!(
                "{base:?} does not span a K4"
            )));
        }
        let mut nbr = [[VertexSet::EMPTY; 4]; 4];
        for i in 0..4 {
            for j in 0..4 {
                nbr[i][j] = host.neighborhood(base[i], base[j]);
            }
        }
        let mut a_sets = [VertexSet::EMPTY; 4];
        let mut b_sets = [VertexSet::EMPTY; 4];
        for i in 0..4 {
            let [j, k, l] = others(i);
            a_sets[i] = nbr[j][k].intersection(nbr[k][l]).intersection(nbr[l][j]);
            b_sets[i] = nbr[i][j].intersection(nbr[i][k]).intersection(nbr[i][l]);
        }
        Ok(K4Frame {
            base,
            nbr,
            a_sets,
            b_sets,
        })
    }

    /// `N(v_i, v_j)` for base indices `i, j`.
    pub fn pair(&self, i: usize, j: usize) -> VertexSet {
        self.nbr[i][j]
    }

    pub fn base_set(&self) -> VertexSet {
        self.base.into_iter().collect()
    }

    /// How many of the six base-pair neighborhoods contain `v`.
    pub fn membership(&self, v: usize) -> usize {
        PAIRS
            .iter()
            .filter(|&&(i, j)| self.nbr[i][j].contains(v))
            .count()
    }

    /// Base indices whose B-set is non-empty.
    pub fn nonempty_b(&self) -> Vec<usize> {
        (0..4).filter(|&i| !self.b_sets[i].is_empty()).collect()
    }

    /// If `v` lies in both neighborhoods of some opposite pair and in one
    /// further base-pair neighborhood, the five vertices carry a C5.
    pub(crate) fn doubled_pair_c5(&self, host: &TripleSystem, v: usize) -> Option<Embedding> {
        for [(i, j), (k, l)] in OPPOSITE {
            if !(self.nbr[i][j].contains(v) && self.nbr[k][l].contains(v)) {
                continue;
            }
            for (x, y) in [(i, k), (i, l), (j, k), (j, l)] {
                if !self.nbr[x][y].contains(v) {
                    continue;
                }
                let before = if x == i { j } else { i };
                let after = if y == k { l } else { k };
                // edges: (before x v), (x v y), (v y after), (y after before), (after before x)
                let b = self.base;
                let e = Embedding::new(PatternKind::C5, vec![b[before], b[x], v, b[y], b[after]]);
                if validate_embedding(host, &e) {
                    return Some(e);
                }
            }
        }
        None
    }

    pub(crate) fn describe(&self, c: Contradiction) -> Contradiction {
        let mut c = c;
        for (i, j) in PAIRS {
            c = c.with(format!("N(v{i},v{j})"), self.nbr[i][j]);
        }
        for i in 0..4 {
            c = c
                .with(format!("A{i}"), self.a_sets[i])
                .with(format!("B{i}"), self.b_sets[i]);
        }
        c
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::system::construct_complete_k_partite;

    #[test]
    fn index_helpers() {
        assert_eq!(others(0), [1, 2, 3]);
        assert_eq!(others(2), [0, 1, 3]);
        assert_eq!(complement(1, 3), (0, 2));
        assert_eq!(complement(2, 0), (1, 3));
    }

    #[test]
    fn four_partite_frame_recovers_parts() {
        let (h, parts) = construct_complete_k_partite(8, 4).unwrap();
        let frame = K4Frame::new(&h, [0, 2, 4, 6]).unwrap();
        for i in 0..4 {
            assert_eq!(frame.a_sets[i], parts.parts()[i]);
            assert!(frame.b_sets[i].is_empty());
        }
        for v in 0..8 {
            assert_eq!(frame.membership(v), 3);
            assert!(frame.doubled_pair_c5(&h, v).is_none());
        }
        assert!(K4Frame::new(&h, [0, 1, 2, 4]).is_err());
    }

    #[test]
    fn doubled_pair_yields_c5() {
        let h = TripleSystem::complete(5).unwrap();
        let frame = K4Frame::new(&h, [0, 1, 2, 3]).unwrap();
        let e = frame.doubled_pair_c5(&h, 4).unwrap();
        assert!(validate_embedding(&h, &e));
    }
}
