//! Exact characteristic-number computations on the rational oriented
//! cobordism ring.
//!
//! The crate is layered bottom-up:
//!
//! * [`exact`]: big rationals, integer partitions and fraction-free linear
//!   algebra over the rationals.
//! * [`symfunc`]: truncated power series, elementary/monomial symmetric
//!   function transition matrices and multiplicative sequences (genera).
//! * [`cobordism`]: the generators `K3` and `HP^k`, products of cobordism
//!   classes through their characteristic numbers, Thom's basis criterion
//!   and the characterization check for the Â-genus.

pub mod cobordism;
pub mod error;
pub mod exact;
pub mod symfunc;

pub use cobordism::{
    kummer_class, p_to_s, point_class, product, product_p_basis_oracle, product_s, s_to_p,
    s_top_number, BasisCertificate, CobordismClass, CobordismRing, SNumberVector,
    VerificationReport, DEFAULT_MAX_WEIGHT,
};
pub use error::{Error, Result};
pub use exact::{
    partition_index, partition_splittings, partitions_of, Partition, PartitionVector, Rational,
    RationalMatrix,
};
pub use symfunc::{
    ahat_series, e_to_m_matrix, evaluate_genus, l_series, m_to_e_matrix, msequence_polynomial,
    GenusPolynomial, PowerSeries, TransitionMatrix,
};
