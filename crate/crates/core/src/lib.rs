//! t-metric Mahler measures of rational numbers.
//!
//! For a nonzero rational `α` the engine enumerates the factorizations of
//! `α` into coprime rational parts, keeps the measure tuples that are not
//! dominated for any `t > 0`, and takes the lower envelope of their `L^t`
//! norms. The result equals `M_t(α)` provided the infimum over all
//! factorizations is attained by rational parts; every result carries an
//! `assumes_conjecture` flag recording that assumption.

pub mod cli;
pub mod envelope;
pub mod error;
pub mod factorization;
pub mod rational;
pub mod tuples;

pub use envelope::{
    attaining_tuples, check_axioms, find_crossings, integer_closed_form, mt_measure, profile,
    AxiomReport, CrossingPoint, Envelope, EnvelopeConfig, EnvelopeProfile, Piece,
};
pub use error::{Error, Result};
pub use factorization::{
    enumerate_representations, multiplicative_partitions, part_count_bound, Part, Representation,
};
pub use rational::{mahler_measure, ReducedRational};
pub use tuples::{
    dominates, log_power_sum, measure_tuple, norm_t, prune_minimal, Exponent, MeasureTuple,
};
