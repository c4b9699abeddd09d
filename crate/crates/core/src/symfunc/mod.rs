//! Power series, symmetric-function transition matrices and multiplicative
//! sequences.
//!
//! Grading: `z` and each Pontrjagin class `p_i` count with weight `i`, so the
//! degree-`k` genus polynomial is the weight-`k` part of `Π Q(x_j)`. The factor
//! of four relating weight to real dimension lives in the cobordism layer.

mod msequence;
mod series;
mod transition;

pub use msequence::{evaluate_genus, msequence_polynomial, GenusPolynomial};
pub use series::{ahat_series, l_series, PowerSeries};
pub use transition::{e_to_m_matrix, m_to_e_matrix, TransitionMatrix};
