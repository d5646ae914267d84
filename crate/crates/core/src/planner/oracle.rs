use crate::error::{Error, Result};

use super::tour::{is_two_opt_optimal, route_length};
use super::{DistanceMatrix, Objective, TopologyPlan};

/// Largest instance the exhaustive oracle accepts.
pub const BRUTE_FORCE_MAX: usize = 10;

/// Advances `v` to its next lexicographic permutation; false after the last.
fn next_permutation(v: &mut [usize]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// Globally shortest order by exhaustive enumeration. Closed tours fix node
/// 0 first to quotient out rotations. The lexicographically first optimum is
/// returned.
pub fn brute_force_optimal(matrix: &DistanceMatrix, objective: Objective) -> Result<TopologyPlan> {
    let n = matrix.len();
    if n == 0 {
        return Err(Error::Input("cannot search an empty instance".into()));
    }
    if n > BRUTE_FORCE_MAX {
        return Err(Error::SizeGuard {
            n,
            max: BRUTE_FORCE_MAX,
        });
    }
    let fixed = usize::from(objective == Objective::ClosedTour);
    let mut order: Vec<usize> = (0..n).collect();
    let mut best = order.clone();
    let mut best_len = route_length(&order, matrix, objective);
    let mut evaluations = 1u64;
    while next_permutation(&mut order[fixed..]) {
        evaluations += 1;
        let len = route_length(&order, matrix, objective);
        if len < best_len {
            best_len = len;
            best.copy_from_slice(&order);
        }
    }
    Ok(TopologyPlan {
        locally_optimal: is_two_opt_optimal(&best, matrix, objective),
        order: best,
        total_length: best_len,
        objective,
        evaluations,
        restarts_used: 0,
    })
}
