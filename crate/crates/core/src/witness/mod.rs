//! Witness extraction by replaying the upper-bound arguments.
//!
//! Every extractor walks the same case analysis a reader would follow by
//! hand: find a K4-minus (or K4) base, scan for a fifth vertex lying in
//! enough pair neighborhoods of the base, and read off the forbidden
//! configuration. Returned embeddings are always validated against the host.
//!
//! A step that cannot find the vertex or set it is guaranteed to exist
//! reports [`WitnessError::InternalContradiction`] with the full local state.
//! On a host that satisfies the precondition this can only happen if the
//! underlying extremal result is false, so tests assert that it never fires.

mod extract;
mod facts;
mod frame;
mod structure;

use std::fmt;

use thiserror::Error;

pub use extract::{find_c5_witness, find_c5minus_witness};
pub use facts::{check_fact, Fact, FactReport};
pub use frame::K4Frame;
pub use structure::{analyze_half_degree, HalfDegreeAnalysis, HalfDegreeOutcome, StructureCertificate};

#[derive(Debug, Clone, Error)]
pub enum WitnessError {
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("internal contradiction: {0}")]
    InternalContradiction(Box<Contradiction>),
}

/// Local state captured when a guaranteed step fails.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Contradiction {
    pub step: String,
    pub base: Vec<usize>,
    pub state: Vec<(String, String)>,
}

impl Contradiction {
    pub(crate) fn new(step: impl Into<String>, base: &[usize]) -> Self {
        Contradiction {
            step: step.into(),
            base: base.to_vec(),
            state: Vec::new(),
        }
    }

    pub(crate) fn with(mut self, key: impl Into<String>, value: impl fmt::Display) -> Self {
        self.state.push((key.into(), value.to_string()));
        self
    }

    pub(crate) fn into_error(self) -> WitnessError {
        WitnessError::InternalContradiction(Box::new(self))
    }
}

impl fmt::Display for Contradiction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (base {:?})", self.step, self.base)?;
        for (key, value) in &self.state {
            write!(f, "\n  {key} = {value}")?;
        }
        Ok(())
    }
}
