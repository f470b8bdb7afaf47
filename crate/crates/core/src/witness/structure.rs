//! The boundary case `δ₂⁺ = n/2` for C5: either exhibit a C5 or certify
//! that the host's structure forces `4 | n`.

use crate::pattern::{find_embedding, validate_embedding, Embedding, PatternKind};
use crate::system::TripleSystem;
use crate::vertex_set::VertexSet;

use super::extract::c5_without_k4;
use super::facts::{check_with_frame, classes, partner, Fact, FactReport};
use super::frame::{others, K4Frame};
use super::{Contradiction, WitnessError};

/// Data certifying `n ≡ 0 (mod 4)` for a host with `δ₂⁺ = n/2` around one
/// K4 base.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructureCertificate {
    pub n: usize,
    pub base: [usize; 4],
    pub a_sets: [VertexSet; 4],
    pub b_sets: [VertexSet; 4],
    /// `|A_j|` for the base indices whose B-set is empty.
    pub q: usize,
    /// Size of the unique non-empty B-set, or 0.
    pub r0: usize,
    /// Base index of the non-empty B-set, if any.
    pub split: Option<usize>,
    /// `~`-classes of the non-empty B-set, ordered by least element.
    pub classes: Vec<VertexSet>,
    /// `pairing[c]` is the index of the class paired with class `c`.
    pub pairing: Vec<usize>,
}

impl StructureCertificate {
    /// Re-derives everything from the host and checks every certificate
    /// invariant, ending with `n ≡ 0 (mod 4)`.
    pub fn verify(&self, host: &TripleSystem) -> Result<(), String> {
        let n = host.n();
        if self.n != n {
            return Err(format!("certificate is for n = {}, host has n = {n}", self.n));
        }
        let frame = K4Frame::new(host, self.base).map_err(|e| e.to_string())?;
        if frame.a_sets != self.a_sets || frame.b_sets != self.b_sets {
            return Err("A/B sets do not match the host".into());
        }
        let mut seen = VertexSet::EMPTY;
        for set in self.a_sets.iter().chain(&self.b_sets) {
            if !set.is_disjoint(seen) {
                return Err("A/B sets overlap".into());
            }
            seen = seen.union(*set);
        }
        if seen != host.vertices() {
            return Err("A/B sets do not cover the vertex set".into());
        }
        for i in 0..4 {
            if !self.a_sets[i].contains(self.base[i]) {
                return Err(format!("v{i} is not in A{i}"));
            }
        }
        let nonempty = frame.nonempty_b();
        match (self.split, &nonempty[..]) {
            (None, []) => {
                if self.r0 != 0 || !self.classes.is_empty() || !self.pairing.is_empty() {
                    return Err("class data present although every B-set is empty".into());
                }
                if self.a_sets.iter().any(|a| a.len() != self.q) || n != 4 * self.q {
                    return Err(format!("n = {n} is not 4q with q = {}", self.q));
                }
            }
            (Some(i), [only]) if i == *only => self.verify_split(host, &frame, i)?,
            _ => return Err(format!("non-empty B-sets at {nonempty:?}, certificate says {:?}", self.split)),
        }
        if n % 4 != 0 {
            return Err(format!("n = {n} is not divisible by 4"));
        }
        Ok(())
    }

    fn verify_split(&self, host: &TripleSystem, frame: &K4Frame, i: usize) -> Result<(), String> {
        let n = host.n();
        let b_i = self.b_sets[i];
        if self.r0 != b_i.len() {
            return Err(format!("r0 = {} but |B{i}| = {}", self.r0, b_i.len()));
        }
        if others(i).iter().any(|&j| self.a_sets[j].len() != self.q) {
            return Err(format!("some |A_j| with j != {i} differs from q = {}", self.q));
        }
        if n != 4 * self.q + 2 * self.r0 {
            return Err(format!("n = {n} is not 4q + 2r0"));
        }
        if self.r0 % 2 != 0 {
            return Err(format!("r0 = {} is odd", self.r0));
        }
        if self.classes != classes(host, b_i) {
            return Err("classes are not the ~-classes of the B-set".into());
        }
        if self.pairing.len() != self.classes.len() {
            return Err("pairing length differs from the number of classes".into());
        }
        let j = others(i)[0];
        let (vi, vj) = (frame.base[i], frame.base[j]);
        for (c, class) in self.classes.iter().enumerate() {
            let image = *self
                .pairing
                .get(c)
                .filter(|&&d| d < self.classes.len())
                .ok_or("pairing index out of range")?;
            if image == c || self.pairing[image] != c {
                return Err(format!("pairing is not a fixed-point-free involution at class {c}"));
            }
            if self.classes[image].len() != class.len() {
                return Err(format!("class {c} and its partner differ in size"));
            }
            for x in *class {
                for y in b_i {
                    if host.is_k4([vi, vj, x, y]) != self.classes[image].contains(y) {
                        return Err(format!("K4 partners of {x} are not exactly class {image}"));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn conclusion(&self) -> &'static str {
        "n divisible by 4"
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HalfDegreeOutcome {
    C5(Embedding),
    Structure(StructureCertificate),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HalfDegreeAnalysis {
    pub outcome: HalfDegreeOutcome,
    /// Fact reports produced on the primary base, in order.
    pub reports: Vec<FactReport>,
}

impl HalfDegreeAnalysis {
    /// Facts that applied to the primary base and were checked.
    pub fn facts_exercised(&self) -> Vec<Fact> {
        self.reports
            .iter()
            .filter(|r| r.applicable)
            .map(|r| r.fact)
            .collect()
    }
}

/// Analyzes a host with `n` even and `δ₂⁺ = n/2`.
///
/// K4-free hosts go through the K4-minus extension and yield a C5. Otherwise
/// the lexicographically least K4 becomes the base; the facts are checked in
/// order and the first failure is turned into a C5 (from the failing
/// configuration when it carries one, else from a direct search). If every
/// fact holds, the A/B partition, the `~`-classes and their pairing are
/// assembled into a [`StructureCertificate`].
pub fn analyze_half_degree(host: &TripleSystem) -> Result<HalfDegreeAnalysis, WitnessError> {
    let n = host.n();
    match host.min_positive_codegree() {
        Some(delta) if n % 2 == 0 && delta == n / 2 => {}
        other => {
            return Err(WitnessError::PreconditionViolated(format!(
                "need n even and minimum positive co-degree n/2; n = {n}, got {other:?}"
            )))
        }
    }
    let Some(k4) = find_embedding(host, PatternKind::K4) else {
        let e = c5_without_k4(host)?;
        return Ok(HalfDegreeAnalysis {
            outcome: HalfDegreeOutcome::C5(e),
            reports: Vec::new(),
        });
    };
    let base = [k4.map[0], k4.map[1], k4.map[2], k4.map[3]];
    let frame = K4Frame::new(host, base)?;
    let mut reports = Vec::new();

    for fact in &Fact::ALL[..5] {
        let report = check_with_frame(host, &frame, *fact);
        let ok = report.is_ok();
        reports.push(report);
        if !ok {
            return fallback(host, &frame, reports);
        }
    }

    let nonempty = frame.nonempty_b();
    let Some(&i) = nonempty.first() else {
        let certificate = StructureCertificate {
            n,
            base,
            a_sets: frame.a_sets,
            b_sets: frame.b_sets,
            q: frame.a_sets[0].len(),
            r0: 0,
            split: None,
            classes: Vec::new(),
            pairing: Vec::new(),
        };
        return finish(host, &frame, certificate, reports);
    };
    if nonempty.len() > 1 {
        // Ruled out by the size bounds once facts 1 to 5 hold.
        return fallback(host, &frame, reports);
    }

    for fact in &Fact::ALL[5..] {
        let report = check_with_frame(host, &frame, *fact);
        let ok = report.is_ok();
        reports.push(report);
        if !ok {
            return fallback(host, &frame, reports);
        }
    }

    let b_i = frame.b_sets[i];
    let class_list = classes(host, b_i);
    let class_of = |v: usize| class_list.iter().position(|c| c.contains(v));
    let j = others(i)[0];
    let mut pairing = Vec::with_capacity(class_list.len());
    for class in &class_list {
        let a = class.first().expect("classes are non-empty");
        let Some(b) = partner(host, &frame, i, j, a) else {
            return fallback(host, &frame, reports);
        };
        // The secondary base (v_i, v_j, a, b) gets its own A/B sets.
        let secondary = K4Frame::new(host, [frame.base[i], frame.base[j], a, b])?;
        let image = class_of(b).expect("partner lies in the B-set");
        if secondary.b_sets[0].is_empty()
            || secondary.a_sets[2] != *class
            || secondary.a_sets[3] != class_list[image]
        {
            return fallback(host, &frame, reports);
        }
        pairing.push(image);
    }

    let certificate = StructureCertificate {
        n,
        base,
        a_sets: frame.a_sets,
        b_sets: frame.b_sets,
        q: frame.a_sets[j].len(),
        r0: b_i.len(),
        split: Some(i),
        classes: class_list,
        pairing,
    };
    finish(host, &frame, certificate, reports)
}

fn finish(
    host: &TripleSystem,
    frame: &K4Frame,
    certificate: StructureCertificate,
    reports: Vec<FactReport>,
) -> Result<HalfDegreeAnalysis, WitnessError> {
    match certificate.verify(host) {
        Ok(()) => Ok(HalfDegreeAnalysis {
            outcome: HalfDegreeOutcome::Structure(certificate),
            reports,
        }),
        Err(why) => {
            if let Some(e) = find_embedding(host, PatternKind::C5) {
                return Ok(HalfDegreeAnalysis {
                    outcome: HalfDegreeOutcome::C5(e),
                    reports,
                });
            }
            Err(frame
                .describe(Contradiction::new("structure certificate failed verification", &frame.base))
                .with("reason", why)
                .into_error())
        }
    }
}

/// A fact or pairing step failed. Prefer the C5 carried by the failing
/// report, then any C5 in the host; otherwise the failure contradicts the
/// C5-free structure theory.
fn fallback(
    host: &TripleSystem,
    frame: &K4Frame,
    reports: Vec<FactReport>,
) -> Result<HalfDegreeAnalysis, WitnessError> {
    let carried = reports
        .last()
        .and_then(|r| r.c5_found.clone())
        .filter(|e| validate_embedding(host, e));
    if let Some(e) = carried.or_else(|| find_embedding(host, PatternKind::C5)) {
        return Ok(HalfDegreeAnalysis {
            outcome: HalfDegreeOutcome::C5(e),
            reports,
        });
    }
    let mut c = frame.describe(Contradiction::new("a structural step failed in a C5-free host", &frame.base));
    if let Some(last) = reports.last() {
        c = c
            .with("fact", last.fact)
            .with("detail", &last.detail)
            .with("counterexample", format!("{:?}", last.counterexample));
    }
    Err(c.into_error())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::system::construct_complete_k_partite;

    #[test]
    fn k4_on_four_vertices() {
        let h = TripleSystem::complete(4).unwrap();
        let analysis = analyze_half_degree(&h).unwrap();
        let HalfDegreeOutcome::Structure(cert) = analysis.outcome else {
            panic!("expected a structure certificate");
        };
        assert_eq!(cert.q, 1);
        assert_eq!(cert.r0, 0);
        for i in 0..4 {
            assert_eq!(cert.a_sets[i], VertexSet::singleton(cert.base[i]));
            assert!(cert.b_sets[i].is_empty());
        }
        assert!(cert.verify(&h).is_ok());
    }

    #[test]
    fn four_partite_eight() {
        let (h, parts) = construct_complete_k_partite(8, 4).unwrap();
        let analysis = analyze_half_degree(&h).unwrap();
        let HalfDegreeOutcome::Structure(cert) = &analysis.outcome else {
            panic!("expected a structure certificate");
        };
        assert_eq!(cert.base, [0, 2, 4, 6]);
        assert_eq!(cert.a_sets.to_vec(), parts.parts().to_vec());
        assert_eq!(cert.q, 2);
        assert_eq!(analysis.facts_exercised().len(), 5);
    }

    #[test]
    fn preconditions() {
        let (h10, _) = construct_complete_k_partite(10, 4).unwrap();
        assert!(matches!(
            analyze_half_degree(&h10),
            Err(WitnessError::PreconditionViolated(_))
        ));
        let (h6, _) = construct_complete_k_partite(6, 3).unwrap();
        assert!(matches!(
            analyze_half_degree(&h6),
            Err(WitnessError::PreconditionViolated(_))
        ));
    }

    #[test]
    fn tampered_certificate_fails() {
        let (h, _) = construct_complete_k_partite(8, 4).unwrap();
        let HalfDegreeOutcome::Structure(cert) = analyze_half_degree(&h).unwrap().outcome else {
            panic!();
        };
        let mut bad = cert.clone();
        bad.q = 3;
        assert!(bad.verify(&h).is_err());
        let mut bad = cert.clone();
        bad.a_sets.swap(0, 1);
        assert!(bad.verify(&h).is_err());
        let mut bad = cert;
        bad.split = Some(0);
        assert!(bad.verify(&h).is_err());
    }
}
