//! Exact positive co-degree Turán numbers for `4 <= n <= 7`.
//!
//! The decision problem "is there an `F`-free host with `δ₂⁺ >= k`" is
//! solved by a depth-first search that first fixes every pair as *dead*
//! (co-degree 0) or *live* (co-degree at least `k`) and only then decides the
//! triples left open inside the live skeleton. Propagation after every
//! assignment:
//!
//! * a dead pair closes all its open triples;
//! * a live pair with fewer than `k` present-or-open triples fails, and one
//!   with exactly `k` forces all of them present;
//! * a pair with a present triple is live; an undecided pair that can no
//!   longer reach `k` is dead;
//! * adding a triple that completes a copy of `F` fails.
//!
//! Symmetry: the sub-hypergraph induced on the first `min(n, 5)` vertices is
//! enumerated up to isomorphism (one representative per canonical key), and
//! each representative seeds an independent search. Seeds may be processed
//! by parallel workers; the reported host always comes from the
//! lowest-indexed successful seed, so results do not depend on the worker
//! count.

use std::collections::HashSet;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::time::{Duration, Instant};

use rayon::prelude::*;

use crate::error::Error;
use crate::pattern::{embedding_through, find_embedding_in, is_free, PatternKind};
use crate::system::{all_pairs, all_triples, construct_complete_k_partite, Neighborhoods, TripleSystem};
use crate::vertex_set::VertexSet;

use super::canonical::{min_encoding, TripleIndex};

pub const MIN_EXACT_VERTICES: usize = 4;
pub const MAX_EXACT_VERTICES: usize = 7;
const SEED_VERTICES: usize = 5;
const MAX_TRIPLES: usize = 35;
const MAX_PAIRS: usize = 21;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecisionRecord {
    pub k: usize,
    pub found: bool,
    pub nodes: u64,
}

#[derive(Clone, Debug)]
pub struct SearchOutcome {
    pub n: usize,
    pub pattern: PatternKind,
    pub value: usize,
    pub extremal: TripleSystem,
    pub nodes_explored: u64,
    pub elapsed: Duration,
    pub decisions: Vec<DecisionRecord>,
}

#[derive(Clone, Debug)]
pub struct Decision {
    pub host: Option<TripleSystem>,
    pub nodes: u64,
}

/// The lower-bound construction the search ascends from: the complete
/// balanced 4-partite host for C5, 3-partite otherwise. Both are free of
/// their pattern.
pub fn seed_construction(n: usize, pattern: PatternKind) -> Result<TripleSystem, Error> {
    let parts = if pattern == PatternKind::C5 { 4 } else { 3 };
    Ok(construct_complete_k_partite(n, parts)?.0)
}

fn check_range(n: usize) -> Result<(), Error> {
    if (MIN_EXACT_VERTICES..=MAX_EXACT_VERTICES).contains(&n) {
        Ok(())
    } else {
        Err(Error::OutOfRange {
            what: "vertex count for exact search",
            value: n,
            min: MIN_EXACT_VERTICES,
            max: MAX_EXACT_VERTICES,
        })
    }
}

pub fn exact_copos_ex(n: usize, pattern: PatternKind) -> Result<SearchOutcome, Error> {
    exact_copos_ex_with_jobs(n, pattern, 1)
}

/// Ascends from the construction's `δ₂⁺` until the decision search exhausts.
pub fn exact_copos_ex_with_jobs(n: usize, pattern: PatternKind, jobs: usize) -> Result<SearchOutcome, Error> {
    check_range(n)?;
    let start = Instant::now();
    let mut extremal = seed_construction(n, pattern)?;
    debug_assert!(is_free(&extremal, pattern));
    let mut value = extremal.min_positive_codegree().unwrap_or(0);
    let problem = Problem::new(n, pattern);
    let mut decisions = Vec::new();
    let mut nodes_explored = 0;
    loop {
        let decision = problem.decide(value + 1, jobs);
        nodes_explored += decision.nodes;
        decisions.push(DecisionRecord {
            k: value + 1,
            found: decision.host.is_some(),
            nodes: decision.nodes,
        });
        match decision.host {
            Some(host) => {
                value = host.min_positive_codegree().expect("solutions are non-empty");
                extremal = host;
            }
            None => break,
        }
    }
    Ok(SearchOutcome {
        n,
        pattern,
        value,
        extremal,
        nodes_explored,
        elapsed: start.elapsed(),
        decisions,
    })
}

/// Is there a non-empty `pattern`-free host on `n` vertices with
/// `δ₂⁺ >= k`? Returns one if so.
pub fn decide_min_codegree(n: usize, pattern: PatternKind, k: usize, jobs: usize) -> Result<Decision, Error> {
    check_range(n)?;
    Ok(Problem::new(n, pattern).decide(k, jobs))
}

struct Problem {
    n: usize,
    pattern: PatternKind,
    triples: Vec<[usize; 3]>,
    triple_pairs: Vec<[usize; 3]>,
    pair_triples: Vec<Vec<usize>>,
    seed_vertices: usize,
}

impl Problem {
    fn new(n: usize, pattern: PatternKind) -> Self {
        let mut pair_index = vec![usize::MAX; n * n];
        for (p, (u, v)) in all_pairs(n).enumerate() {
            pair_index[u * n + v] = p;
            pair_index[v * n + u] = p;
        }
        let triples: Vec<[usize; 3]> = all_triples(n).collect();
        let triple_pairs: Vec<[usize; 3]> = triples
            .iter()
            .map(|&[a, b, c]| [pair_index[a * n + b], pair_index[a * n + c], pair_index[b * n + c]])
            .collect();
        let mut pair_triples = vec![Vec::new(); n * (n - 1) / 2];
        for (t, pairs) in triple_pairs.iter().enumerate() {
            for &p in pairs {
                pair_triples[p].push(t);
            }
        }
        Problem {
            n,
            pattern,
            triples,
            triple_pairs,
            pair_triples,
            seed_vertices: n.min(SEED_VERTICES),
        }
    }

    /// Pattern-free hosts on the first `seed_vertices` vertices, one per
    /// isomorphism class, ordered by canonical key.
    fn seeds(&self) -> Vec<Vec<[usize; 3]>> {
        let m = self.seed_vertices;
        let inner: Vec<[usize; 3]> = all_triples(m).collect();
        let index = TripleIndex::new(m);
        let mut seen = HashSet::new();
        let mut reps = Vec::new();
        for mask in 0u64..1 << inner.len() {
            let edges: Vec<[usize; 3]> = VertexSet::from_bits(mask).iter().map(|t| inner[t]).collect();
            let key = min_encoding(m, &edges, &index);
            if !seen.insert(key) {
                continue;
            }
            let host = TripleSystem::new(m, edges.iter().copied()).expect("valid triples");
            if find_embedding_in(&host, self.pattern).is_none() {
                reps.push((key, edges));
            }
        }
        reps.sort_unstable_by_key(|(key, _)| *key);
        reps.into_iter().map(|(_, edges)| edges).collect()
    }

    fn decide(&self, k: usize, jobs: usize) -> Decision {
        if k == 0 {
            return Decision {
                host: Some(TripleSystem::empty(self.n).expect("n <= 7")),
                nodes: 0,
            };
        }
        let seeds = self.seeds();
        let winner = AtomicUsize::new(usize::MAX);
        let run = |(idx, seed): (usize, &Vec<[usize; 3]>)| {
            let mut search = Search {
                problem: self,
                k,
                nodes: 0,
                seed_index: idx,
                winner: &winner,
            };
            let result = search.run_seed(seed);
            if let Outcome::Found(_) = result {
                winner.fetch_min(idx, Ordering::SeqCst);
            }
            (idx, result, search.nodes)
        };
        let results: Vec<(usize, Outcome, u64)> = if jobs <= 1 {
            seeds.iter().enumerate().map(run).collect()
        } else {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(jobs)
                .build()
                .expect("thread pool");
            pool.install(|| seeds.par_iter().enumerate().map(run).collect())
        };
        let best = winner.load(Ordering::SeqCst);
        let nodes = results
            .iter()
            .filter(|(idx, _, _)| *idx <= best)
            .map(|(_, _, nodes)| nodes)
            .sum();
        let host = results.into_iter().find_map(|(idx, outcome, _)| match outcome {
            Outcome::Found(state) if idx == best => Some(state.to_host(self)),
            _ => None,
        });
        if let Some(h) = &host {
            debug_assert!(is_free(h, self.pattern));
            debug_assert!(h.min_positive_codegree().is_some_and(|d| d >= k));
        }
        Decision { host, nodes }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Tri {
    Open,
    In,
    Out,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Mode {
    Undecided,
    Dead,
    Live,
}

#[derive(Clone)]
struct State {
    n: usize,
    tri: [Tri; MAX_TRIPLES],
    mode: [Mode; MAX_PAIRS],
    present: [u8; MAX_PAIRS],
    open: [u8; MAX_PAIRS],
    nbr: [VertexSet; MAX_EXACT_VERTICES * MAX_EXACT_VERTICES],
    edges: usize,
}

impl Neighborhoods for State {
    fn order(&self) -> usize {
        self.n
    }

    fn neighborhood(&self, u: usize, v: usize) -> VertexSet {
        self.nbr[u * MAX_EXACT_VERTICES + v]
    }
}

impl State {
    fn new(problem: &Problem) -> Self {
        let mut open = [0u8; MAX_PAIRS];
        for (p, list) in problem.pair_triples.iter().enumerate() {
            open[p] = list.len() as u8;
        }
        State {
            n: problem.n,
            tri: [Tri::Open; MAX_TRIPLES],
            mode: [Mode::Undecided; MAX_PAIRS],
            present: [0; MAX_PAIRS],
            open,
            nbr: [VertexSet::EMPTY; MAX_EXACT_VERTICES * MAX_EXACT_VERTICES],
            edges: 0,
        }
    }

    fn to_host(&self, problem: &Problem) -> TripleSystem {
        let edges = problem
            .triples
            .iter()
            .enumerate()
            .filter(|(t, _)| self.tri[*t] == Tri::In)
            .map(|(_, &t)| t);
        TripleSystem::new(problem.n, edges).expect("valid triples")
    }

    fn link(&mut self, [a, b, c]: [usize; 3]) {
        const W: usize = MAX_EXACT_VERTICES;
        for (x, y, z) in [(a, b, c), (a, c, b), (b, c, a)] {
            self.nbr[x * W + y].insert(z);
            self.nbr[y * W + x].insert(z);
        }
    }

    /// Sets an open triple; returns false on an immediate conflict. Touched
    /// pairs are queued for propagation.
    fn assign(&mut self, problem: &Problem, t: usize, value: Tri, queue: &mut Vec<usize>) -> bool {
        debug_assert_eq!(self.tri[t], Tri::Open);
        self.tri[t] = value;
        for &p in &problem.triple_pairs[t] {
            self.open[p] -= 1;
            queue.push(p);
        }
        if value == Tri::In {
            for &p in &problem.triple_pairs[t] {
                self.present[p] += 1;
                match self.mode[p] {
                    Mode::Dead => return false,
                    Mode::Undecided => self.mode[p] = Mode::Live,
                    Mode::Live => {}
                }
            }
            self.edges += 1;
            let triple = problem.triples[t];
            self.link(triple);
            if embedding_through(self, problem.pattern, triple).is_some() {
                return false;
            }
        }
        true
    }

    fn set_mode(&mut self, p: usize, mode: Mode, queue: &mut Vec<usize>) {
        self.mode[p] = mode;
        queue.push(p);
    }

    fn propagate(&mut self, problem: &Problem, k: usize, queue: &mut Vec<usize>) -> bool {
        while let Some(p) = queue.pop() {
            let (present, open) = (self.present[p] as usize, self.open[p] as usize);
            match self.mode[p] {
                Mode::Dead => {
                    if present > 0 {
                        return false;
                    }
                    for &t in &problem.pair_triples[p] {
                        if self.tri[t] == Tri::Open && !self.assign(problem, t, Tri::Out, queue) {
                            return false;
                        }
                    }
                }
                Mode::Live => {
                    if present + open < k {
                        return false;
                    }
                    if present + open == k && open > 0 {
                        for &t in &problem.pair_triples[p] {
                            if self.tri[t] == Tri::Open && !self.assign(problem, t, Tri::In, queue) {
                                return false;
                            }
                        }
                    }
                }
                Mode::Undecided => {
                    if present > 0 {
                        self.set_mode(p, Mode::Live, queue);
                    } else if open < k {
                        self.set_mode(p, Mode::Dead, queue);
                    }
                }
            }
        }
        true
    }
}

enum Outcome {
    Found(Box<State>),
    Exhausted,
    Aborted,
}

struct Search<'a> {
    problem: &'a Problem,
    k: usize,
    nodes: u64,
    seed_index: usize,
    winner: &'a AtomicUsize,
}

impl Search<'_> {
    fn run_seed(&mut self, seed: &[[usize; 3]]) -> Outcome {
        if self.seed_index > self.winner.load(Ordering::Relaxed) {
            return Outcome::Aborted;
        }
        self.nodes += 1;
        let problem = self.problem;
        let m = problem.seed_vertices;
        let mut state = State::new(problem);
        let mut queue = Vec::new();
        for (t, triple) in problem.triples.iter().enumerate() {
            if triple[2] >= m {
                continue;
            }
            let value = if seed.contains(triple) { Tri::In } else { Tri::Out };
            if !state.assign(problem, t, value, &mut queue) {
                return Outcome::Exhausted;
            }
        }
        queue.extend(0..problem.pair_triples.len());
        if !state.propagate(problem, self.k, &mut queue) {
            return Outcome::Exhausted;
        }
        self.dfs(state)
    }

    fn dfs(&mut self, state: State) -> Outcome {
        self.nodes += 1;
        if self.nodes % 4096 == 0 && self.seed_index > self.winner.load(Ordering::Relaxed) {
            return Outcome::Aborted;
        }
        let problem = self.problem;
        if let Some(p) = state.mode[..problem.pair_triples.len()]
            .iter()
            .position(|&m| m == Mode::Undecided)
        {
            for mode in [Mode::Live, Mode::Dead] {
                let mut child = state.clone();
                let mut queue = Vec::new();
                child.set_mode(p, mode, &mut queue);
                if child.propagate(problem, self.k, &mut queue) {
                    match self.dfs(child) {
                        Outcome::Exhausted => {}
                        other => return other,
                    }
                }
            }
            return Outcome::Exhausted;
        }
        if let Some(t) = state.tri[..problem.triples.len()]
            .iter()
            .position(|&x| x == Tri::Open)
        {
            for value in [Tri::In, Tri::Out] {
                let mut child = state.clone();
                let mut queue = Vec::new();
                if child.assign(problem, t, value, &mut queue) && child.propagate(problem, self.k, &mut queue) {
                    match self.dfs(child) {
                        Outcome::Exhausted => {}
                        other => return other,
                    }
                }
            }
            return Outcome::Exhausted;
        }
        let complete = state.edges > 0
            && (0..problem.pair_triples.len()).all(|p| {
                let present = state.present[p] as usize;
                present == 0 || present >= self.k
            });
        if complete {
            Outcome::Found(Box::new(state))
        } else {
            Outcome::Exhausted
        }
    }
}
