//! JSON certificates for embeddings and structure analyses.

use serde::{Deserialize, Serialize};
use thiserror::Error;
use triplesys::witness::StructureCertificate;
use triplesys::{validate_embedding, Embedding, PatternKind, Triple, TripleSystem, VertexSet};

pub const STRUCTURE_CONCLUSION: &str = "n divisible by 4";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "lowercase", deny_unknown_fields)]
pub enum CertificateJson {
    Embedding {
        pattern: String,
        map: Vec<usize>,
        edges: Vec<Triple>,
    },
    Structure {
        n: usize,
        base: [usize; 4],
        #[serde(rename = "A")]
        a: [Vec<usize>; 4],
        #[serde(rename = "B")]
        b: [Vec<usize>; 4],
        q: usize,
        r0: usize,
        classes: Vec<Vec<usize>>,
        pairing: Vec<usize>,
        conclusion: String,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CertificateError {
    #[error("malformed certificate: {0}")]
    Malformed(String),
    #[error("certificate does not hold for this host: {0}")]
    Invalid(String),
}

/// A certificate that has been checked against a host.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Validated {
    Embedding(Embedding),
    Structure(StructureCertificate),
}

impl CertificateJson {
    pub fn from_embedding(e: &Embedding) -> Self {
        CertificateJson::Embedding {
            pattern: e.kind.name().to_string(),
            map: e.map.clone(),
            edges: e.image_edges(),
        }
    }

    pub fn from_structure(c: &StructureCertificate) -> Self {
        CertificateJson::Structure {
            n: c.n,
            base: c.base,
            a: c.a_sets.map(|s| s.to_vec()),
            b: c.b_sets.map(|s| s.to_vec()),
            q: c.q,
            r0: c.r0,
            classes: c.classes.iter().map(|s| s.to_vec()).collect(),
            pairing: c.pairing.clone(),
            conclusion: STRUCTURE_CONCLUSION.to_string(),
        }
    }

    pub fn to_json(&self) -> String {
        let mut text = serde_json::to_string(self).expect("certificates serialize");
        text.push('\n');
        text
    }

    pub fn from_json(text: &str) -> Result<Self, CertificateError> {
        serde_json::from_str(text).map_err(|e| CertificateError::Malformed(e.to_string()))
    }

    /// Rebuilds the certificate and checks it against `host`.
    pub fn validate(&self, host: &TripleSystem) -> Result<Validated, CertificateError> {
        match self {
            CertificateJson::Embedding { pattern, map, edges } => {
                let kind: PatternKind = pattern.parse().map_err(|e| CertificateError::Malformed(format!("{e}")))?;
                let e = Embedding::new(kind, map.clone());
                if map.len() != kind.pattern().vertex_count || map.iter().any(|&v| v >= host.n()) {
                    return Err(CertificateError::Invalid(format!("map {map:?} does not fit {kind} in the host")));
                }
                if e.image_edges() != *edges {
                    return Err(CertificateError::Invalid("listed edges are not the images of the pattern edges".into()));
                }
                if !validate_embedding(host, &e) {
                    return Err(CertificateError::Invalid(format!("{map:?} is not an embedding of {kind}")));
                }
                Ok(Validated::Embedding(e))
            }
            CertificateJson::Structure {
                n,
                base,
                a,
                b,
                q,
                r0,
                classes,
                pairing,
                conclusion,
            } => {
                if conclusion != STRUCTURE_CONCLUSION {
                    return Err(CertificateError::Malformed(format!("unexpected conclusion {conclusion:?}")));
                }
                let set = |vs: &Vec<usize>| -> Result<VertexSet, CertificateError> {
                    if vs.iter().any(|&v| v >= host.n()) || vs.windows(2).any(|w| w[0] >= w[1]) {
                        return Err(CertificateError::Invalid(format!("{vs:?} is not an ascending vertex list")));
                    }
                    Ok(vs.iter().copied().collect())
                };
                let a_sets = [set(&a[0])?, set(&a[1])?, set(&a[2])?, set(&a[3])?];
                let b_sets = [set(&b[0])?, set(&b[1])?, set(&b[2])?, set(&b[3])?];
                let cert = StructureCertificate {
                    n: *n,
                    base: *base,
                    a_sets,
                    b_sets,
                    q: *q,
                    r0: *r0,
                    split: b_sets.iter().position(|s| !s.is_empty()),
                    classes: classes.iter().map(set).collect::<Result<_, _>>()?,
                    pairing: pairing.clone(),
                };
                cert.verify(host).map_err(CertificateError::Invalid)?;
                Ok(Validated::Structure(cert))
            }
        }
    }
}
