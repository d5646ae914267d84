use crate::error::{Error, Result};

use super::DistanceMatrix;

/// Moves must shorten the route by more than this (metres) to be applied.
pub const IMPROVEMENT_EPS: f64 = 1e-9;

/// What a visit order is scored as.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Objective {
    /// Hamiltonian path: n - 1 edges.
    #[default]
    OpenPath,
    /// Closed tour: the path plus the edge back to the start.
    ClosedTour,
}

pub fn validate_permutation(order: &[usize], n: usize) -> Result<()> {
    if order.len() != n {
        return Err(Error::Input(format!("order has {} entries, expected {n}", order.len())));
    }
    let mut seen = vec![false; n];
    for &v in order {
        if v >= n || seen[v] {
            return Err(Error::Input(format!("order is not a permutation of 0..{n}")));
        }
        seen[v] = true;
    }
    Ok(())
}

pub(crate) fn route_length(order: &[usize], matrix: &DistanceMatrix, objective: Objective) -> f64 {
    let mut total: f64 = order.windows(2).map(|w| matrix.get(w[0], w[1])).sum();
    if objective == Objective::ClosedTour && order.len() > 1 {
        total += matrix.get(order[order.len() - 1], order[0]);
    }
    total
}

/// Total length of `order` under `objective`.
pub fn tour_length(order: &[usize], matrix: &DistanceMatrix, objective: Objective) -> Result<f64> {
    validate_permutation(order, matrix.len())?;
    Ok(route_length(order, matrix, objective))
}

/// Greedy construction: always move to the closest unvisited node, lowest
/// index on ties.
pub fn nearest_neighbor_init(matrix: &DistanceMatrix, start: usize) -> Result<Vec<usize>> {
    let n = matrix.len();
    if start >= n {
        return Err(Error::Input(format!("start {start} out of range for {n} nodes")));
    }
    let mut visited = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut current = start;
    visited[start] = true;
    order.push(start);
    while order.len() < n {
        let mut next = usize::MAX;
        let mut best = f64::INFINITY;
        for (j, &d) in matrix.row(current).iter().enumerate() {
            if !visited[j] && d < best {
                best = d;
                next = j;
            }
        }
        visited[next] = true;
        order.push(next);
        current = next;
    }
    Ok(order)
}

/// Change in length from reversing `order[i..=j]` (`i < j`).
pub fn reversal_delta(order: &[usize], i: usize, j: usize, matrix: &DistanceMatrix, objective: Objective) -> f64 {
    let n = order.len();
    let closed = objective == Objective::ClosedTour;
    if closed && i == 0 && j == n - 1 {
        return 0.0;
    }
    let a = order[i];
    let b = order[j];
    let prev = if i > 0 {
        Some(order[i - 1])
    } else if closed {
        Some(order[n - 1])
    } else {
        None
    };
    let next = if j + 1 < n {
        Some(order[j + 1])
    } else if closed {
        Some(order[0])
    } else {
        None
    };
    let mut delta = 0.0;
    if let Some(p) = prev {
        delta += matrix.get(p, b) - matrix.get(p, a);
    }
    if let Some(q) = next {
        delta += matrix.get(a, q) - matrix.get(b, q);
    }
    delta
}

/// In-place first-improvement 2-opt. Scans `i` ascending then `j`
/// ascending, applies the first move that gains more than
/// [`IMPROVEMENT_EPS`] and restarts the scan. Returns the number of move
/// evaluations.
pub(crate) fn descend(order: &mut [usize], matrix: &DistanceMatrix, objective: Objective) -> u64 {
    let n = order.len();
    let mut evaluations = 0u64;
    if n < 3 {
        return evaluations;
    }
    'scan: loop {
        for i in 0..n - 1 {
            for j in (i + 1)..n {
                evaluations += 1;
                if reversal_delta(order, i, j, matrix, objective) < -IMPROVEMENT_EPS {
                    order[i..=j].reverse();
                    continue 'scan;
                }
            }
        }
        return evaluations;
    }
}

/// 2-opt local descent from `order`.
pub fn two_opt_descent(order: &[usize], matrix: &DistanceMatrix, objective: Objective) -> Result<Vec<usize>> {
    validate_permutation(order, matrix.len())?;
    let mut out = order.to_vec();
    descend(&mut out, matrix, objective);
    Ok(out)
}

/// Best segment reversal over all `C(n, 2)` pairs, if any gains more than
/// [`IMPROVEMENT_EPS`]. Returns `(i, j, delta)`.
pub fn best_two_exchange(
    order: &[usize],
    matrix: &DistanceMatrix,
    objective: Objective,
) -> Option<(usize, usize, f64)> {
    let n = order.len();
    let mut best: Option<(usize, usize, f64)> = None;
    for i in 0..n.saturating_sub(1) {
        for j in (i + 1)..n {
            let d = reversal_delta(order, i, j, matrix, objective);
            if d < -IMPROVEMENT_EPS && best.is_none_or(|(_, _, b)| d < b) {
                best = Some((i, j, d));
            }
        }
    }
    best
}

/// Local-optimality certificate: no segment reversal improves `order`.
pub fn is_two_opt_optimal(order: &[usize], matrix: &DistanceMatrix, objective: Objective) -> bool {
    best_two_exchange(order, matrix, objective).is_none()
}
