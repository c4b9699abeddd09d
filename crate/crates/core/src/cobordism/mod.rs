//! Rational oriented cobordism through characteristic numbers.
//!
//! A class of dimension `4k` is stored as its vector of Pontrjagin numbers.
//! Products go through s-numbers, the basis products `N^{λ1} × N^{λ2} × ...`
//! give the basis matrices, and [`CobordismRing::verify_characterization`]
//! computes the common kernel of all basis products except `(K3)^k`.

mod class;
mod ring;
mod verify;

pub use class::{
    kummer_class, p_to_s, point_class, product, product_p_basis_oracle, product_s, s_to_p,
    s_top_number, CobordismClass, SNumberVector, KUMMER_P1,
};
pub use ring::{BasisCertificate, CobordismRing, DEFAULT_MAX_WEIGHT};
pub use verify::VerificationReport;
