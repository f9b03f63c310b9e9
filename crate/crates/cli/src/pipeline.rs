//! Per-module reports: Stanley's inequality and its certification through a
//! regular sequence of variables.

use serde::Serialize;
use stanley::{
    depth, sdepth_with, Characteristic, ExponentVector, QuotientModule, Result, SearchConfig,
    StanleyDecomposition,
};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConjectureReport {
    pub sdepth: usize,
    pub depth: usize,
    pub holds: bool,
}

/// Computes both invariants and reports whether `sdepth ≥ depth`.
pub fn conjecture_check(
    module: &QuotientModule,
    characteristic: Characteristic,
    config: &SearchConfig,
) -> Result<ConjectureReport> {
    let s = sdepth_with(module, None, config)?.value;
    let d = depth(module, characteristic)?.depth;
    Ok(ConjectureReport {
        sdepth: s,
        depth: d,
        holds: s >= d,
    })
}

#[derive(Debug, Clone)]
pub enum Certificate {
    Decomposition(StanleyDecomposition),
    /// The regular sequence of variables is shorter than the depth.
    Inapplicable { sequence_length: usize },
}

#[derive(Debug, Clone)]
pub struct CertifyReport {
    /// The depth of the module.
    pub t: usize,
    /// Variable indices, regular in turn.
    pub sequence: Vec<usize>,
    pub certificate: Certificate,
}

impl CertifyReport {
    /// Stanley depth of the certificate, when there is one.
    pub fn certified_sdepth(&self) -> Option<usize> {
        match &self.certificate {
            Certificate::Decomposition(d) => d.sdepth(),
            Certificate::Inapplicable { .. } => None,
        }
    }
}

/// Certifies `sdepth M ≥ depth M` when `M` has a regular sequence of `t =
/// depth M` variables.
///
/// `M` is cut down by the first `t` variables of the sequence, the reduced
/// module is decomposed exactly, and the decomposition is lifted back one
/// variable at a time. Every intermediate decomposition is validated.
pub fn cor_main_certify(
    module: &QuotientModule,
    characteristic: Characteristic,
    config: &SearchConfig,
) -> Result<CertifyReport> {
    let t = depth(module, characteristic)?.depth;
    let sequence = module.variable_regular_sequence()?;
    if sequence.len() < t {
        return Ok(CertifyReport {
            t,
            certificate: Certificate::Inapplicable {
                sequence_length: sequence.len(),
            },
            sequence,
        });
    }
    let mut tower = vec![module.clone()];
    for &k in &sequence[..t] {
        let last = tower.last().expect("nonempty");
        let next = last.quotient_by_monomial(&ExponentVector::variable(module.arity(), k))?;
        tower.push(next);
    }
    let mut decomposition = sdepth_with(tower.last().expect("nonempty"), None, config)?
        .decomposition()?;
    decomposition.validate()?;
    for (level, &k) in sequence[..t].iter().enumerate().rev() {
        decomposition = decomposition.lift_regular_variable(&tower[level], k)?;
    }
    decomposition.validate()?;
    Ok(CertifyReport {
        t,
        sequence,
        certificate: Certificate::Decomposition(decomposition),
    })
}
