//! Workbench around the `stanley` crate: model and decomposition files, the
//! result cache, the certification pipeline and the regression corpus.

pub mod cache;
pub mod corpus;
pub mod generator;
pub mod model;
pub mod pipeline;
pub mod properties;

pub use cache::{Cache, CacheKey, CacheRecord, ENGINE_VERSION};
pub use corpus::{corpus_run, CorpusError, CorpusReport};
pub use model::{parse_chain, parse_decomposition, parse_model, Model, ModelError, Variables};
pub use pipeline::{conjecture_check, cor_main_certify, Certificate, CertifyReport, ConjectureReport};
pub use properties::{run_properties, PropertyReport};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/certification.md")]
    mod certification {}
    #[doc = include_str!("../../../book/src/cli.md")]
    mod cli {}
}
