//! Literal checks of the structural facts about a K4 base in a host with
//! minimum positive co-degree exactly `n/2`.
//!
//! Indices below are base positions `0..4`; `{i, j, k, l}` always denotes
//! the four positions in some order. Facts 6 to 10 additionally assume that
//! exactly one B-set, `B_i`, is non-empty.

use std::fmt;

use crate::pattern::{validate_embedding, Embedding, PatternKind};
use crate::system::TripleSystem;
use crate::vertex_set::VertexSet;

use super::frame::{others, K4Frame, OPPOSITE, PAIRS};
use super::WitnessError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Fact {
    /// Each `|N(v_i, v_j)| = n/2`; every vertex lies in exactly 3 of the six.
    ExactlyThree = 1,
    /// `N(v_i, v_j) = V \ N(v_k, v_l)`.
    OppositeComplement = 2,
    /// `a ∈ A_i`, `b ∈ A_j` implies `N(a, b) = N(v_i, v_j)`.
    ANeighborhoods = 3,
    /// `|A_i| - |B_i|` takes one common value `q`.
    CommonDifference = 4,
    /// For `a ∈ B_i`: `N(a, v_j)` misses `A_k ∪ B_k`, and
    /// `|A_i| + |A_j| + |B_i| + |B_j| >= n/2 + 1`.
    BNeighborhoods = 5,
    /// `n = 4q + 2r`, `|A_i| > n/4 > |A_j|`, `N(a, b) = ∅` inside `A_j`.
    SingleB = 6,
    /// `N(a, v_j) = ∅` iff `a ∈ A_j`.
    EmptyLinkIffA = 7,
    /// Every `a ∈ B_i` has a partner `b ∈ B_i` with `a, v_i, v_j, b` a K4.
    K4Partner = 8,
    /// For such a K4 `v_i, v_j, a, b`, the B-set of `v_i` relative to it is
    /// non-empty.
    SecondaryB = 9,
    /// `a ~ b` iff `N(a, b) = ∅` is an equivalence relation on `B_i`.
    Equivalence = 10,
}

impl Fact {
    pub const ALL: [Fact; 10] = [
        Fact::ExactlyThree,
        Fact::OppositeComplement,
        Fact::ANeighborhoods,
        Fact::CommonDifference,
        Fact::BNeighborhoods,
        Fact::SingleB,
        Fact::EmptyLinkIffA,
        Fact::K4Partner,
        Fact::SecondaryB,
        Fact::Equivalence,
    ];

    pub fn number(self) -> u8 {
        self as u8
    }

    pub fn from_number(id: u8) -> Option<Fact> {
        Fact::ALL.into_iter().find(|f| f.number() == id)
    }
}

impl fmt::Display for Fact {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "fact {}", self.number())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactReport {
    pub fact: Fact,
    /// Whether the fact's hypotheses hold for this host and base. When they
    /// do not, the statement is not evaluated and `holds` is false.
    pub applicable: bool,
    pub holds: bool,
    pub detail: String,
    pub counterexample: Option<Vec<usize>>,
    pub c5_found: Option<Embedding>,
}

impl FactReport {
    fn new(fact: Fact) -> Self {
        FactReport {
            fact,
            applicable: true,
            holds: true,
            detail: String::new(),
            counterexample: None,
            c5_found: None,
        }
    }

    fn not_applicable(fact: Fact, why: impl Into<String>) -> Self {
        FactReport {
            applicable: false,
            holds: false,
            detail: why.into(),
            ..FactReport::new(fact)
        }
    }

    fn fail(mut self, detail: impl Into<String>, witness: Vec<usize>) -> Self {
        self.holds = false;
        self.detail = detail.into();
        self.counterexample = Some(witness);
        self
    }

    /// Holds, or does not apply.
    pub fn is_ok(&self) -> bool {
        self.holds || !self.applicable
    }
}

pub fn check_fact(host: &TripleSystem, base: [usize; 4], fact: Fact) -> Result<FactReport, WitnessError> {
    let frame = K4Frame::new(host, base)?;
    Ok(check_with_frame(host, &frame, fact))
}

pub(super) fn check_with_frame(host: &TripleSystem, frame: &K4Frame, fact: Fact) -> FactReport {
    let n = host.n();
    let half_degree = n % 2 == 0 && host.min_positive_codegree() == Some(n / 2);
    if !half_degree {
        return FactReport::not_applicable(fact, "minimum positive co-degree is not n/2");
    }
    let split = match frame.nonempty_b()[..] {
        [i] => Some(i),
        _ => None,
    };
    match fact {
        Fact::ExactlyThree => exactly_three(host, frame),
        Fact::OppositeComplement => opposite_complement(host, frame),
        Fact::ANeighborhoods => a_neighborhoods(host, frame),
        Fact::CommonDifference => common_difference(frame),
        Fact::BNeighborhoods => b_neighborhoods(host, frame),
        _ => match split {
            None => FactReport::not_applicable(fact, "needs exactly one non-empty B-set"),
            Some(i) => match fact {
                Fact::SingleB => single_b(host, frame, i),
                Fact::EmptyLinkIffA => empty_link_iff_a(host, frame, i),
                Fact::K4Partner => k4_partner(host, frame, i),
                Fact::SecondaryB => secondary_b(host, frame, i),
                _ => equivalence(host, frame, i),
            },
        },
    }
}

fn exactly_three(host: &TripleSystem, frame: &K4Frame) -> FactReport {
    let report = FactReport::new(Fact::ExactlyThree);
    let half = host.n() / 2;
    for (i, j) in PAIRS {
        let size = frame.pair(i, j).len();
        if size != half {
            return report.fail(
                format!("|N(v{i},v{j})| = {size}, expected {half}"),
                vec![frame.base[i], frame.base[j]],
            );
        }
    }
    for v in 0..host.n() {
        let count = frame.membership(v);
        if count != 3 {
            let mut report = report.fail(format!("vertex {v} lies in {count} of the six sets"), vec![v]);
            report.c5_found = frame.doubled_pair_c5(host, v);
            return report;
        }
    }
    report
}

fn opposite_complement(host: &TripleSystem, frame: &K4Frame) -> FactReport {
    let report = FactReport::new(Fact::OppositeComplement);
    let all = host.vertices();
    for [(i, j), (k, l)] in OPPOSITE {
        let expected = all.difference(frame.pair(k, l));
        let actual = frame.pair(i, j);
        if let Some(v) = actual.union(expected).difference(actual.intersection(expected)).first() {
            let mut report = report.fail(
                format!("vertex {v} breaks N(v{i},v{j}) = V \\ N(v{k},v{l})"),
                vec![v],
            );
            report.c5_found = frame.doubled_pair_c5(host, v);
            return report;
        }
    }
    report
}

fn a_neighborhoods(host: &TripleSystem, frame: &K4Frame) -> FactReport {
    let report = FactReport::new(Fact::ANeighborhoods);
    for (i, j) in PAIRS {
        let target = frame.pair(i, j);
        for a in frame.a_sets[i] {
            for b in frame.a_sets[j] {
                if host.neighborhood(a, b) != target {
                    return report.fail(
                        format!("N({a},{b}) differs from N(v{i},v{j}) = {target}"),
                        vec![a, b],
                    );
                }
            }
        }
    }
    report
}

fn common_difference(frame: &K4Frame) -> FactReport {
    let mut report = FactReport::new(Fact::CommonDifference);
    let diffs: Vec<i64> = (0..4)
        .map(|i| frame.a_sets[i].len() as i64 - frame.b_sets[i].len() as i64)
        .collect();
    if diffs.iter().any(|&d| d != diffs[0]) {
        return report.fail(format!("|A_i| - |B_i| = {diffs:?}"), frame.base.to_vec());
    }
    report.detail = format!("q = {}", diffs[0]);
    report
}

fn b_neighborhoods(host: &TripleSystem, frame: &K4Frame) -> FactReport {
    let report = FactReport::new(Fact::BNeighborhoods);
    let half = host.n() / 2;
    let v = frame.base;
    for i in 0..4 {
        for a in frame.b_sets[i] {
            for j in others(i) {
                for k in (0..4).filter(|&k| k != i && k != j) {
                    let link = host.neighborhood(a, v[j]);
                    if let Some(b) = link.intersection(frame.b_sets[k]).first() {
                        let mut report = report.fail(
                            format!("{b} ∈ N({a}, v{j}) ∩ B{k} for {a} ∈ B{i}"),
                            vec![a, v[j], b],
                        );
                        // (a v_i v_k), (v_i v_k b), (v_k b v_j), (b v_j a), (v_j a v_i)
                        let e = Embedding::new(PatternKind::C5, vec![a, v[i], v[k], b, v[j]]);
                        report.c5_found = validate_embedding(host, &e).then_some(e);
                        return report;
                    }
                    if let Some(b) = link.intersection(frame.a_sets[k]).first() {
                        return report.fail(
                            format!("{b} ∈ N({a}, v{j}) ∩ A{k} for {a} ∈ B{i}"),
                            vec![a, v[j], b],
                        );
                    }
                }
            }
        }
        if frame.b_sets[i].is_empty() {
            continue;
        }
        for j in others(i) {
            let total = frame.a_sets[i].len()
                + frame.a_sets[j].len()
                + frame.b_sets[i].len()
                + frame.b_sets[j].len();
            if total < half + 1 {
                return report.fail(
                    format!("|A{i}| + |A{j}| + |B{i}| + |B{j}| = {total} < n/2 + 1"),
                    vec![v[i], v[j]],
                );
            }
        }
    }
    report
}

fn single_b(host: &TripleSystem, frame: &K4Frame, i: usize) -> FactReport {
    let mut report = FactReport::new(Fact::SingleB);
    let n = host.n();
    let r = frame.b_sets[i].len();
    let big = frame.a_sets[i].len();
    let q = big as i64 - r as i64;
    if q < 0 || n as i64 != 4 * q + 2 * r as i64 {
        return report.fail(format!("n = {n} but q = {q}, r = {r}"), frame.base.to_vec());
    }
    if 4 * big <= n {
        return report.fail(format!("|A{i}| = {big} is not above n/4"), vec![frame.base[i]]);
    }
    for j in others(i) {
        let small = frame.a_sets[j];
        if 4 * small.len() >= n {
            return report.fail(
                format!("|A{j}| = {} is not below n/4", small.len()),
                vec![frame.base[j]],
            );
        }
        for a in small {
            for b in small.iter().filter(|&b| b > a) {
                if !host.neighborhood(a, b).is_empty() {
                    return report.fail(format!("N({a},{b}) is non-empty inside A{j}"), vec![a, b]);
                }
            }
        }
    }
    report.detail = format!("q = {q}, r = {r}");
    report
}

fn empty_link_iff_a(host: &TripleSystem, frame: &K4Frame, i: usize) -> FactReport {
    let report = FactReport::new(Fact::EmptyLinkIffA);
    for j in others(i) {
        let vj = frame.base[j];
        for a in 0..host.n() {
            if host.neighborhood(a, vj).is_empty() != frame.a_sets[j].contains(a) {
                return report.fail(
                    format!("N({a}, v{j}) empty disagrees with membership in A{j}"),
                    vec![a, vj],
                );
            }
        }
    }
    report
}

/// Least `b ∈ B_i` with `a, v_i, v_j, b` spanning a K4.
pub(super) fn k4_partner(host: &TripleSystem, frame: &K4Frame, i: usize) -> FactReport {
    let report = FactReport::new(Fact::K4Partner);
    for a in frame.b_sets[i] {
        for j in others(i) {
            if partner(host, frame, i, j, a).is_none() {
                return report.fail(
                    format!("{a} ∈ B{i} has no K4 partner with v{i}, v{j}"),
                    vec![a, frame.base[i], frame.base[j]],
                );
            }
        }
    }
    report
}

pub(super) fn partner(host: &TripleSystem, frame: &K4Frame, i: usize, j: usize, a: usize) -> Option<usize> {
    let (vi, vj) = (frame.base[i], frame.base[j]);
    frame.b_sets[i]
        .intersection(host.neighborhood(a, vi))
        .intersection(host.neighborhood(a, vj))
        .iter()
        .find(|&b| host.is_k4([vi, vj, a, b]))
}

fn secondary_b(host: &TripleSystem, frame: &K4Frame, i: usize) -> FactReport {
    let report = FactReport::new(Fact::SecondaryB);
    let b_i = frame.b_sets[i];
    for j in others(i) {
        let (vi, vj) = (frame.base[i], frame.base[j]);
        for x in b_i {
            for y in b_i.iter().filter(|&y| y > x) {
                if !host.is_k4([vi, vj, x, y]) {
                    continue;
                }
                let secondary = K4Frame::new(host, [vi, vj, x, y]).expect("checked K4");
                if secondary.b_sets[0].is_empty() {
                    return report.fail(
                        format!("B-set of v{i} relative to (v{i}, v{j}, {x}, {y}) is empty"),
                        vec![vi, vj, x, y],
                    );
                }
            }
        }
    }
    report
}

fn equivalence(host: &TripleSystem, frame: &K4Frame, i: usize) -> FactReport {
    let report = FactReport::new(Fact::Equivalence);
    let b_i = frame.b_sets[i];
    let related = |x: usize, y: usize| host.neighborhood(x, y).is_empty();
    for x in b_i {
        for y in b_i.iter().filter(|&y| y != x && related(x, y)) {
            for z in b_i.iter().filter(|&z| z != x && related(y, z)) {
                if !related(x, z) {
                    return report.fail(format!("{x} ~ {y} ~ {z} but not {x} ~ {z}"), vec![x, y, z]);
                }
            }
        }
    }
    report
}

/// `~`-classes of `set`, ordered by least element.
pub(super) fn classes(host: &TripleSystem, set: VertexSet) -> Vec<VertexSet> {
    let mut remaining = set;
    let mut out = Vec::new();
    while let Some(x) = remaining.first() {
        let class: VertexSet = remaining
            .iter()
            .filter(|&y| host.neighborhood(x, y).is_empty())
            .collect();
        remaining = remaining.difference(class);
        out.push(class);
    }
    out
}
