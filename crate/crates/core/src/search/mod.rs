//! Experiments: integral points and Hall ratios on `y^2 = x^3 + d`, small
//! point and generator discovery, the lattice census of length-bounded
//! points, and the independence checks for `y^2 = x^3 - N x`.

mod generators;
mod gm;
mod integral;
mod lattice;

pub use generators::{approx_canonical_height, choose_generators, find_relation, small_rational_point_search, torsion_order,
    torsion_points,
};
pub use gm::{gm_hypotheses_check, GmReport};
pub use integral::{hall_ratio, hall_scan, integral_points_mordell, HallRecord, IntegralSolution};
pub use lattice::{
    lattice_length_search, length_one_denominators, Argmax, Coverage, LatticeSearch, SearchReport, SearchRow,
};
