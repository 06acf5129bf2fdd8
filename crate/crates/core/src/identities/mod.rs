//! Reverse plane partitions against non-intersecting path families: the
//! bijection, the weight system built from a Toda solution, and the
//! multiplicative partition-function identities.

mod alpha;
mod bijection;
mod mu;
mod specialized;
mod weights;

pub use alpha::{AlphaClause, AlphaGrid};
pub use bijection::{lp_to_rpp, partition_lattice, rpp_to_lp};
pub use mu::{mu_check, specialized_solution, MuReading};
pub use specialized::{
    gansner_bound, gansner_check, gansner_check_at, gansner_lhs_truncated, gansner_rhs_truncated,
    macmahon_check, macmahon_lhs, macmahon_rhs, pf_x_check, pf_x_lhs, pf_x_lhs_direct, pf_x_rhs,
    q_check, q_rhs, q_rhs_series, q_weight, q_weight_explicit, rpp_cell_sum, series_x_to_q,
    weight_x, weight_x_parts, weight_x_series, x_to_q, XWeightParts,
};
pub use weights::{
    frozen_product, pf_check, pf_lhs, pf_rhs, random_sample, rpp_weight, sample_window,
    weight_transport_check,
};
