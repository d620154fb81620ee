pub mod catalog;
pub mod cli;
pub mod embdim3;
pub mod error;
pub mod factorization;
pub mod families;
pub mod lengths;
pub mod presentation;
pub mod search;
pub mod semigroup;
pub mod verify;
mod union_find;

pub use error::{Error, Result};
pub use factorization::{factorizations_of, Factorization, Factorizer};
pub use lengths::{
    delta_bound, delta_of_element, delta_semigroup, length_set, DeltaScan, DeltaSet, LengthScanner,
    LengthSet, Lengths,
};
pub use presentation::{
    betti_candidates, betti_elements, is_uniquely_presented, minimal_presentation, r_classes,
    verify_presentation, BettiRecord, BettiScan, PresentationRelation, RClassPartition,
};
pub use semigroup::{parse_generators, Construction, GapProfile, NumericalSemigroup};
