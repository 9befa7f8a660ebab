//! The universal enveloping algebra `U(𝔤_ℂ)` over `ℚ(i)[ν_1, …, ν_r]`.
//!
//! Elements are kept in PBW normal form relative to a [`PbwOrder`]. The
//! rewrite `xy → yx + [x,y]` on adjacent inversions is confluent and
//! terminating; the engine evaluates it by memoized insertion of one letter
//! into a sorted word, and [`PbwOrder::reduce_with_strategy`] exposes the raw
//! system for arbitrary reduction strategies.

mod center;
mod coproduct;
mod element;
mod order;

pub use center::{
    casimir, center_basis, gelfand_invariant, require_central, verify_central, Casimir, Centrality,
    CENTER_SOLVE_LIMIT,
};
pub use coproduct::{coproduct, counit, Tensor};
pub use element::UeaElement;
pub use order::{Letter, LetterDef, Linear, OrderKind, Part, PbwOrder, Word};
