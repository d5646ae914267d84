//! Connection planning over antenna towers and devices.

mod assign;
mod matrix;
mod oracle;
mod search;
mod tour;

pub use assign::{
    assign_devices, uncovered_ids, Assignment, Deployment, LinkParams, Site, TowerGain, MIN_LINK_DISTANCE_M,
};
pub use matrix::{distance_matrix, DistanceMatrix};
pub use oracle::{brute_force_optimal, BRUTE_FORCE_MAX};
pub use search::{stochastic_search, Annealing, SearchConfig, TopologyPlan};
pub use tour::{
    best_two_exchange, is_two_opt_optimal, nearest_neighbor_init, reversal_delta, tour_length, two_opt_descent,
    validate_permutation, Objective, IMPROVEMENT_EPS,
};
