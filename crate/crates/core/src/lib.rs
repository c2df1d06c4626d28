//! Exact combinatorial checks for equigenerated monomial ideals.
//!
//! The crate decides the polymatroidal exchange property, checks linear
//! quotients for generator orderings induced by lex and revlex under every
//! order of the variables, computes graded Betti numbers over the rationals,
//! and runs exhaustive or seeded random sweeps comparing those properties.
//!
//! ```
//! use polymat_core::{parse_ideal, is_polymatroidal, has_lq_all_orders, OrderKind, PermBudget};
//!
//! let i = parse_ideal("x1*x3^2 + x1^2*x3 + x1*x2*x3 + x2^2*x3", None).unwrap();
//! assert!(!is_polymatroidal(&i).unwrap());
//! assert!(!has_lq_all_orders(&i, OrderKind::Lex, PermBudget::default()).unwrap());
//! ```

pub mod betti;
pub mod error;
pub mod harness;
pub mod ideal;
pub mod lexsegment;
pub mod monomial;
pub mod parse;
pub mod polymatroid;
pub mod quotients;

pub use betti::{graded_betti, has_linear_resolution, taylor_strand_betti, BettiTable};
pub use error::{Error, Result};
pub use ideal::{make_ideal, MonomialIdeal};
pub use lexsegment::{
    final_segment_ideal, is_completely_lexsegment, lexsegment, linear_segment_criterion,
    linear_segment_criterion_full, monomials_of_degree, shadow, MonomialSet,
};
pub use monomial::{lex_compare, revlex_compare, Monomial, OrderKind, VariableOrder};
pub use parse::{parse_ideal, parse_monomial, IdealJson};
pub use polymatroid::{
    is_matroidal, is_polymatroidal, polymatroidal_failure, pure_colon_exchange_failure,
    satisfies_symmetric_exchange, symmetric_exchange_failure, ExchangeWitness,
};
pub use quotients::{
    conjecture_probe, has_linear_quotients, has_lq_all_orders,
    has_quotients_with_linear_resolution, linear_quotients_failure, lq_all_orders_failure,
    qwlr_failure, sort_generators, theorem_equivalence, ConjectureVerdict, GeneratorSequence,
    LqFailure, OrderFailure, PermBudget, QwlrFailure, TheoremVerdict,
};

/// Serde adapter writing zero-based variable indices one-based.
pub(crate) mod one_based {
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(i: &usize, s: S) -> Result<S::Ok, S::Error> {
        (i + 1).serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<usize, D::Error> {
        let v = usize::deserialize(d)?;
        v.checked_sub(1)
            .ok_or_else(|| serde::de::Error::custom("variable indices start at 1"))
    }
}
