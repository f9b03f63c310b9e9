//! Depth and Stanley depth of monomial quotient modules `T/B` over
//! `K[x_1, …, x_n]`, with machine-checked Stanley decompositions.
//!
//! * [`monomial`]: exponent vectors, monomial ideals and quotient modules.
//! * [`decomp`]: Stanley spaces and decompositions, the validator and the
//!   constructive transformations (restrict, lift, tensor, chain).
//! * [`sdepth`]: exact Stanley depth via interval partitions.
//! * [`depth`]: depth via multigraded Koszul homology.
//! * [`linalg`]: exact ranks over ℚ and prime fields.
//!
//! ```
//! use stanley::{sdepth_exact, MonomialIdeal, QuotientModule};
//!
//! let m = QuotientModule::ideal(MonomialIdeal::maximal(3));
//! let result = sdepth_exact(&m)?;
//! assert_eq!(result.value, 2);
//! assert_eq!(result.decomposition()?.validate()?, 2);
//! # Ok::<(), stanley::Error>(())
//! ```

pub mod decomp;
pub mod depth;
mod error;
pub mod linalg;
pub mod monomial;
pub mod sdepth;

pub use decomp::{StanleyDecomposition, StanleySpace};
pub use depth::{depth, koszul_slice_ranks, DepthResult, KoszulSlice};
pub use error::{Error, Result};
pub use linalg::Characteristic;
pub use monomial::{ExponentVector, MonomialIdeal, QuotientModule};
pub use sdepth::{
    box_invariance_check, partition_to_decomposition, sdepth_exact, sdepth_with,
    CharacteristicPoset, IntervalPartition, SdepthResult, SearchConfig,
};

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/monomials.md")]
    mod monomials {}
    #[doc = include_str!("../../../book/src/decompositions.md")]
    mod decompositions {}
    #[doc = include_str!("../../../book/src/sdepth.md")]
    mod sdepth {}
    #[doc = include_str!("../../../book/src/depth.md")]
    mod depth {}
}
