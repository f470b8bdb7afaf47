//! Catalog of small forbidden configurations and injective embedding search.
//!
//! Containment is non-induced: an embedding only requires the pattern's
//! edges to be present among the image vertices.

use std::fmt;
use std::str::FromStr;

use crate::system::{Neighborhoods, Triple, TripleSystem};
use crate::vertex_set::VertexSet;

/// Catalog entries. Vertices `a, b, c, d, e` are numbered `0..5`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PatternKind {
    /// `{abc, bcd, cda}`
    K4Minus,
    /// `{abc, bcd, cda, dab}`
    K4,
    /// `{abc, bcd, cde, dea}`
    C5Minus,
    /// `{abc, bcd, cde, dea, eab}`
    C5,
    /// `{abc, ade, bde, cde}`
    F32,
}

impl PatternKind {
    pub const ALL: [PatternKind; 5] = [
        PatternKind::K4Minus,
        PatternKind::K4,
        PatternKind::C5Minus,
        PatternKind::C5,
        PatternKind::F32,
    ];

    pub fn name(self) -> &'static str {
        match self {
            PatternKind::K4Minus => "k4minus",
            PatternKind::K4 => "k4",
            PatternKind::C5Minus => "c5minus",
            PatternKind::C5 => "c5",
            PatternKind::F32 => "f32",
        }
    }

    pub fn pattern(self) -> &'static Pattern {
        match self {
            PatternKind::K4Minus => &K4_MINUS,
            PatternKind::K4 => &K4,
            PatternKind::C5Minus => &C5_MINUS,
            PatternKind::C5 => &C5,
            PatternKind::F32 => &F32,
        }
    }
}

impl fmt::Display for PatternKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown pattern `{0}` (expected one of k4minus, k4, c5minus, c5, f32)")]
pub struct UnknownPattern(pub String);

impl FromStr for PatternKind {
    type Err = UnknownPattern;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let lowered = s.trim().to_ascii_lowercase();
        PatternKind::ALL
            .into_iter()
            .find(|kind| kind.name() == lowered)
            .ok_or_else(|| UnknownPattern(s.to_string()))
    }
}

#[derive(Debug, PartialEq, Eq)]
pub struct Pattern {
    pub kind: PatternKind,
    pub vertex_count: usize,
    pub edges: &'static [Triple],
}

static K4_MINUS: Pattern = Pattern {
    kind: PatternKind::K4Minus,
    vertex_count: 4,
    edges: &[[0, 1, 2], [1, 2, 3], [0, 2, 3]],
};

static K4: Pattern = Pattern {
    kind: PatternKind::K4,
    vertex_count: 4,
    edges: &[[0, 1, 2], [1, 2, 3], [0, 2, 3], [0, 1, 3]],
};

static C5_MINUS: Pattern = Pattern {
    kind: PatternKind::C5Minus,
    vertex_count: 5,
    edges: &[[0, 1, 2], [1, 2, 3], [2, 3, 4], [0, 3, 4]],
};

static C5: Pattern = Pattern {
    kind: PatternKind::C5,
    vertex_count: 5,
    edges: &[[0, 1, 2], [1, 2, 3], [2, 3, 4], [0, 3, 4], [0, 1, 4]],
};

static F32: Pattern = Pattern {
    kind: PatternKind::F32,
    vertex_count: 5,
    edges: &[[0, 1, 2], [0, 3, 4], [1, 3, 4], [2, 3, 4]],
};

/// An injective map from pattern vertices to host vertices; `map[x]` is the
/// image of pattern vertex `x`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Embedding {
    pub kind: PatternKind,
    pub map: Vec<usize>,
}

impl Embedding {
    pub fn new(kind: PatternKind, map: Vec<usize>) -> Self {
        Embedding { kind, map }
    }

    /// Images of the pattern edges, each sorted, in pattern edge order.
    /// Entries referencing missing map slots are skipped.
    pub fn image_edges(&self) -> Vec<Triple> {
        self.kind
            .pattern()
            .edges
            .iter()
            .filter_map(|&[x, y, z]| {
                let mut t = [*self.map.get(x)?, *self.map.get(y)?, *self.map.get(z)?];
                t.sort_unstable();
                Some(t)
            })
            .collect()
    }
}

/// Checks injectivity, range and the presence of every image edge.
pub fn validate_embedding(host: &TripleSystem, e: &Embedding) -> bool {
    validate_in(host, e)
}

pub(crate) fn validate_in<G: Neighborhoods>(g: &G, e: &Embedding) -> bool {
    let pattern = e.kind.pattern();
    if e.map.len() != pattern.vertex_count || e.map.iter().any(|&v| v >= g.order()) {
        return false;
    }
    let image: VertexSet = e.map.iter().copied().collect();
    image.len() == e.map.len()
        && pattern
            .edges
            .iter()
            .all(|&[x, y, z]| g.has_edge(e.map[x], e.map[y], e.map[z]))
}

/// Lexicographically least embedding of `kind` into `host` (ordered by the
/// tuple `(map[0], map[1], ...)`), or `None` if the host is free of it.
pub fn find_embedding(host: &TripleSystem, kind: PatternKind) -> Option<Embedding> {
    find_embedding_in(host, kind)
}

pub fn is_free(host: &TripleSystem, kind: PatternKind) -> bool {
    find_embedding(host, kind).is_none()
}

pub(crate) fn find_embedding_in<G: Neighborhoods>(g: &G, kind: PatternKind) -> Option<Embedding> {
    let pattern = kind.pattern();
    let order: Vec<usize> = (0..pattern.vertex_count).collect();
    Matcher::new(g, pattern, &order).run(&[])
}

/// Some embedding in which `triple` (an edge of `g`) is the image of a
/// pattern edge. Used to test whether adding one edge creates a copy.
pub(crate) fn embedding_through<G: Neighborhoods>(
    g: &G,
    kind: PatternKind,
    triple: Triple,
) -> Option<Embedding> {
    let pattern = kind.pattern();
    const ARRANGEMENTS: [[usize; 3]; 6] =
        [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    for &edge in pattern.edges {
        let mut order: Vec<usize> = edge.to_vec();
        order.extend((0..pattern.vertex_count).filter(|x| !edge.contains(x)));
        let matcher = Matcher::new(g, pattern, &order);
        for arrangement in ARRANGEMENTS {
            let fixed = arrangement.map(|slot| triple[slot]);
            if let Some(found) = matcher.run(&fixed) {
                return Some(found);
            }
        }
    }
    None
}

struct Step {
    vertex: usize,
    /// Earlier pattern-vertex pairs closing an edge with this vertex.
    closing: Vec<(usize, usize)>,
    /// Earlier pattern vertices sharing an edge with this vertex whose third
    /// vertex comes later; the images must have positive co-degree.
    touching: Vec<usize>,
}

struct Matcher<'a, G> {
    g: &'a G,
    kind: PatternKind,
    steps: Vec<Step>,
}

impl<'a, G: Neighborhoods> Matcher<'a, G> {
    fn new(g: &'a G, pattern: &'static Pattern, order: &[usize]) -> Self {
        let mut position = [usize::MAX; 8];
        for (pos, &x) in order.iter().enumerate() {
            position[x] = pos;
        }
        let steps = order
            .iter()
            .enumerate()
            .map(|(pos, &x)| {
                let mut closing = Vec::new();
                let mut touching = Vec::new();
                for edge in pattern.edges.iter().filter(|e| e.contains(&x)) {
                    let others: Vec<usize> = edge.iter().copied().filter(|&y| y != x).collect();
                    let (y, z) = (others[0], others[1]);
                    match (position[y] < pos, position[z] < pos) {
                        (true, true) => closing.push((y, z)),
                        (true, false) => touching.push(y),
                        (false, true) => touching.push(z),
                        (false, false) => {}
                    }
                }
                touching.sort_unstable();
                touching.dedup();
                Step {
                    vertex: x,
                    closing,
                    touching,
                }
            })
            .collect();
        Matcher {
            g,
            kind: pattern.kind,
            steps,
        }
    }

    /// `fixed[i]` pins the image of the `i`-th vertex in the search order.
    fn run(&self, fixed: &[usize]) -> Option<Embedding> {
        let mut map = vec![usize::MAX; self.steps.len()];
        self.extend(0, &mut map, VertexSet::EMPTY, fixed)
            .then(|| Embedding::new(self.kind, map))
    }

    fn extend(&self, depth: usize, map: &mut [usize], used: VertexSet, fixed: &[usize]) -> bool {
        let Some(step) = self.steps.get(depth) else {
            return true;
        };
        let n = self.g.order();
        let mut candidates = match fixed.get(depth) {
            Some(&v) if v < n => VertexSet::singleton(v),
            Some(_) => return false,
            None => VertexSet::full(n),
        }
        .difference(used);
        for &(y, z) in &step.closing {
            candidates = candidates.intersection(self.g.neighborhood(map[y], map[z]));
        }
        for c in candidates {
            if step
                .touching
                .iter()
                .any(|&y| self.g.neighborhood(map[y], c).difference(used).is_empty())
            {
                continue;
            }
            map[step.vertex] = c;
            if self.extend(depth + 1, map, used.with(c), fixed) {
                return true;
            }
        }
        map[step.vertex] = usize::MAX;
        false
    }
}
