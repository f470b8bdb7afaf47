use crate::pattern::{find_embedding, validate_embedding, Embedding, PatternKind};
use crate::system::TripleSystem;
use crate::vertex_set::VertexSet;

use super::frame::{complement, K4Frame, PAIRS};
use super::{Contradiction, WitnessError};

/// Checks `n >= 6` and `δ₂⁺ >= floor(n / divisor) + 1`, returning `δ₂⁺`.
fn require_above(host: &TripleSystem, divisor: usize) -> Result<usize, WitnessError> {
    let n = host.n();
    if n < 6 {
        return Err(WitnessError::PreconditionViolated(format!(
            "need n >= 6, got n = {n}"
        )));
    }
    let threshold = n / divisor + 1;
    match host.min_positive_codegree() {
        Some(delta) if delta >= threshold => Ok(delta),
        Some(delta) => Err(WitnessError::PreconditionViolated(format!(
            "minimum positive co-degree {delta} is not above n/{divisor} (need at least {threshold})"
        ))),
        None => Err(WitnessError::PreconditionViolated(
            "host has no edges".to_string(),
        )),
    }
}

/// A K4-minus `v0v1v2, v0v1v3, v0v2v3` with apex `v0`. The catalog pattern
/// `{abc, bcd, cda}` has apex `c`.
pub(super) fn k4minus_base(host: &TripleSystem) -> Result<[usize; 4], WitnessError> {
    let found = find_embedding(host, PatternKind::K4Minus).ok_or_else(|| {
        Contradiction::new("no K4-minus although δ₂⁺ exceeds n/3", &[])
            .with("n", host.n())
            .with("min positive co-degree", format!("{:?}", host.min_positive_codegree()))
            .into_error()
    })?;
    let m = &found.map;
    Ok([m[2], m[0], m[1], m[3]])
}

fn finish(
    host: &TripleSystem,
    kind: PatternKind,
    map: Vec<usize>,
    step: &str,
    base: &[usize],
) -> Result<Embedding, WitnessError> {
    let e = Embedding::new(kind, map);
    if validate_embedding(host, &e) {
        Ok(e)
    } else {
        Err(Contradiction::new(step, base)
            .with("proposed map", format!("{:?}", e.map))
            .into_error())
    }
}

fn first_outside(base: &[usize; 4], n: usize, pred: impl Fn(usize) -> bool) -> Option<usize> {
    let outside = VertexSet::full(n).difference(base.iter().copied().collect());
    outside.iter().find(|&v| pred(v))
}

/// Replays the C5-minus argument on a host with `n >= 6` and
/// `δ₂⁺ > n/3`, returning a validated C5-minus embedding.
pub fn find_c5minus_witness(host: &TripleSystem) -> Result<Embedding, WitnessError> {
    require_above(host, 3)?;
    let v = k4minus_base(host)?;
    let n = host.n();
    let nb = |i: usize, j: usize| host.neighborhood(v[i], v[j]);

    if !host.contains_edge(v[1], v[2], v[3]) {
        // v1v2v3 missing: a fifth vertex lies in two of N(v1,v0), N(v1,v2), N(v1,v3).
        let sets = [nb(1, 0), nb(1, 2), nb(1, 3)];
        let hits = |x: usize| sets.iter().filter(|s| s.contains(x)).count();
        let v5 = first_outside(&v, n, |x| hits(x) >= 2).ok_or_else(|| {
            Contradiction::new("no fifth vertex in two neighborhoods of v1", &v)
                .with("N(v1,v0)", sets[0])
                .with("N(v1,v2)", sets[1])
                .with("N(v1,v3)", sets[2])
                .into_error()
        })?;
        let map = if sets[0].contains(v5) && sets[1].contains(v5) {
            vec![v[2], v[3], v[0], v[1], v5]
        } else if sets[0].contains(v5) && sets[2].contains(v5) {
            vec![v[3], v[2], v[0], v[1], v5]
        } else {
            vec![v[3], v[0], v[2], v[1], v5]
        };
        return finish(host, PatternKind::C5Minus, map, "C5-minus from K4-minus base", &v);
    }

    // The base spans a K4. M(i,j) = N(vi,vj) minus the other two base vertices.
    let m_sets: Vec<VertexSet> = PAIRS
        .iter()
        .map(|&(i, j)| {
            let (k, l) = complement(i, j);
            nb(i, j).without(v[k]).without(v[l])
        })
        .collect();
    let hits = |x: usize| m_sets.iter().filter(|s| s.contains(x)).count();
    let v5 = first_outside(&v, n, |x| hits(x) >= 2).ok_or_else(|| {
        let mut c = Contradiction::new("no fifth vertex in two M sets", &v);
        for (&(i, j), set) in PAIRS.iter().zip(&m_sets) {
            c = c.with(format!("M({i},{j})"), set);
        }
        c.into_error()
    })?;
    let holding: Vec<(usize, usize)> = PAIRS
        .iter()
        .zip(&m_sets)
        .filter(|(_, s)| s.contains(v5))
        .map(|(&p, _)| p)
        .collect();

    // Overlapping index pairs take precedence over disjoint ones.
    for (a, &p) in holding.iter().enumerate() {
        for &q in &holding[a + 1..] {
            let shared = [p.0, p.1].into_iter().find(|x| *x == q.0 || *x == q.1);
            if let Some(s) = shared {
                let t = if p.0 == s { p.1 } else { p.0 };
                let u = if q.0 == s { q.1 } else { q.0 };
                let w = (0..4).find(|&x| x != s && x != t && x != u).unwrap();
                let map = vec![v[u], v[w], v[t], v[s], v5];
                return finish(host, PatternKind::C5Minus, map, "C5-minus from overlapping M sets", &v);
            }
        }
    }
    let (p, q) = (holding[0], holding[1]);
    let map = vec![v5, v[p.0], v[p.1], v[q.0], v[q.1]];
    finish(host, PatternKind::C5Minus, map, "C5-minus from disjoint M sets", &v)
}

/// Replays the C5 argument on a host with `n >= 6` and `δ₂⁺ > n/2`,
/// returning a validated C5 embedding.
pub fn find_c5_witness(host: &TripleSystem) -> Result<Embedding, WitnessError> {
    require_above(host, 2)?;
    match find_embedding(host, PatternKind::K4) {
        Some(k4) => c5_from_k4(host, [k4.map[0], k4.map[1], k4.map[2], k4.map[3]]),
        None => c5_without_k4(host),
    }
}

/// A fifth vertex in at least four of the six base-pair neighborhoods of a
/// K4 closes a C5 through a doubled opposite pair.
fn c5_from_k4(host: &TripleSystem, base: [usize; 4]) -> Result<Embedding, WitnessError> {
    let frame = K4Frame::new(host, base)?;
    let v5 = first_outside(&base, host.n(), |x| frame.membership(x) >= 4)
        .ok_or_else(|| frame.describe(Contradiction::new("no fifth vertex in four neighborhoods of the K4", &base)).into_error())?;
    frame.doubled_pair_c5(host, v5).ok_or_else(|| {
        frame
            .describe(Contradiction::new("no doubled opposite pair", &base).with("v5", v5))
            .into_error()
    })
}

/// K4-free hosts with `δ₂⁺ >= n/2`: extend a K4-minus base by a vertex lying
/// in four of its six pair neighborhoods.
pub(super) fn c5_without_k4(host: &TripleSystem) -> Result<Embedding, WitnessError> {
    let v = k4minus_base(host)?;
    let nb = |i: usize, j: usize| host.neighborhood(v[i], v[j]);
    let hits = |x: usize| PAIRS.iter().filter(|&&(i, j)| nb(i, j).contains(x)).count();
    let v5 = first_outside(&v, host.n(), |x| hits(x) >= 4).ok_or_else(|| {
        let mut c = Contradiction::new("no fifth vertex in four neighborhoods of the K4-minus", &v);
        for (i, j) in PAIRS {
            c = c.with(format!("N(v{i},v{j})"), nb(i, j));
        }
        c.into_error()
    })?;
    let apex: Vec<usize> = (1..4).filter(|&a| nb(0, a).contains(v5)).collect();
    let map = match apex[..] {
        [a, b] => {
            let c = (1..4).find(|&x| x != a && x != b).unwrap();
            vec![v[c], v5, v[b], v[0], v[a]]
        }
        [a] => {
            let (x, y) = match a {
                1 => (2, 3),
                2 => (1, 3),
                _ => (1, 2),
            };
            vec![v[0], v[a], v5, v[y], v[x]]
        }
        _ => {
            return Err(Contradiction::new("fifth vertex meets the apex pairs impossibly often", &v)
                .with("v5", v5)
                .with("apex pairs containing v5", apex.len())
                .into_error())
        }
    };
    finish(host, PatternKind::C5, map, "C5 from K4-free base", &v)
}
