use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};

use super::tour::{descend, is_two_opt_optimal, nearest_neighbor_init, reversal_delta, route_length};
use super::{DistanceMatrix, Objective};

/// Annealing stops once the temperature falls below this fraction of its
/// starting value.
const FREEZE_RATIO: f64 = 1e-3;

/// Metropolis walk over segment reversals with geometric cooling.
///
/// Temperatures are relative to the mean pairwise distance of the instance.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Annealing {
    pub t_initial: f64,
    pub cooling: f64,
    pub steps_per_temp: usize,
}

impl Default for Annealing {
    fn default() -> Self {
        Annealing {
            t_initial: 0.5,
            cooling: 0.95,
            steps_per_temp: 100,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SearchConfig {
    pub objective: Objective,
    /// Random restarts, each seeded with `seed + restart_index`.
    pub restarts: usize,
    pub seed: u64,
    pub annealing: Option<Annealing>,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            objective: Objective::OpenPath,
            restarts: 20,
            seed: 0,
            annealing: None,
        }
    }
}

impl SearchConfig {
    pub fn validate(&self) -> Result<()> {
        if self.restarts < 1 {
            return Err(Error::validation("restarts", "must be >= 1"));
        }
        if let Some(a) = self.annealing {
            if !(a.cooling > 0.0 && a.cooling < 1.0) {
                return Err(Error::validation(
                    "cooling",
                    format!("must lie in (0, 1) (got {})", a.cooling),
                ));
            }
            if !(a.t_initial > 0.0) || !a.t_initial.is_finite() {
                return Err(Error::validation(
                    "t_initial",
                    format!("must be > 0 (got {})", a.t_initial),
                ));
            }
            if a.steps_per_temp < 1 {
                return Err(Error::validation("steps_per_temp", "must be >= 1"));
            }
        }
        Ok(())
    }
}

/// Result of a search: the visit order and how it was found.
#[derive(Clone, Debug, PartialEq)]
pub struct TopologyPlan {
    pub order: Vec<usize>,
    pub total_length: f64,
    pub objective: Objective,
    /// Move evaluations (or enumerated permutations for the oracle).
    pub evaluations: u64,
    pub restarts_used: usize,
    pub locally_optimal: bool,
}

struct Candidate {
    order: Vec<usize>,
    length: f64,
    evaluations: u64,
}

fn anneal(
    order: &mut Vec<usize>,
    matrix: &DistanceMatrix,
    objective: Objective,
    schedule: &Annealing,
    rng: &mut ChaCha8Rng,
) -> u64 {
    let n = order.len();
    let scale = matrix.mean_distance();
    if n < 3 || scale <= 0.0 {
        return 0;
    }
    let mut evaluations = 0u64;
    let mut current = route_length(order, matrix, objective);
    let mut best = order.clone();
    let mut best_len = current;
    let mut t = schedule.t_initial * scale;
    let t_stop = t * FREEZE_RATIO;
    while t > t_stop {
        for _ in 0..schedule.steps_per_temp {
            let a = rng.gen_range(0..n);
            let mut b = rng.gen_range(0..n - 1);
            if b >= a {
                b += 1;
            }
            let (i, j) = if a < b { (a, b) } else { (b, a) };
            evaluations += 1;
            let delta = reversal_delta(order, i, j, matrix, objective);
            if delta <= 0.0 || rng.gen::<f64>() < (-delta / t).exp() {
                order[i..=j].reverse();
                current += delta;
                if current < best_len - super::tour::IMPROVEMENT_EPS {
                    best_len = current;
                    best.copy_from_slice(order);
                }
            }
        }
        t *= schedule.cooling;
    }
    *order = best;
    evaluations
}

fn run_restart(matrix: &DistanceMatrix, config: &SearchConfig, index: usize) -> Candidate {
    let n = matrix.len();
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed.wrapping_add(index as u64));
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut rng);
    let mut evaluations = 0;
    if let Some(schedule) = &config.annealing {
        evaluations += anneal(&mut order, matrix, config.objective, schedule, &mut rng);
    }
    evaluations += descend(&mut order, matrix, config.objective);
    let length = route_length(&order, matrix, config.objective);
    Candidate {
        order,
        length,
        evaluations,
    }
}

/// Stochastic local search for the shortest visit order.
///
/// The nearest-neighbour tour from node 0 after 2-opt descent seeds the
/// incumbent. Each restart `r` then draws a random permutation from a
/// ChaCha8 stream seeded with `seed + r`, optionally anneals it, and descends
/// to a 2-opt local optimum. Restarts run in parallel; the best candidate is
/// chosen with ties going to the earliest (incumbent first, then restart
/// index), so the result does not depend on scheduling.
pub fn stochastic_search(matrix: &DistanceMatrix, config: &SearchConfig) -> Result<TopologyPlan> {
    config.validate()?;
    let n = matrix.len();
    if n == 0 {
        return Err(Error::Input("cannot search an empty instance".into()));
    }

    let mut incumbent = {
        let mut order = nearest_neighbor_init(matrix, 0)?;
        let evaluations = descend(&mut order, matrix, config.objective);
        let length = route_length(&order, matrix, config.objective);
        Candidate {
            order,
            length,
            evaluations,
        }
    };

    let candidates: Vec<Candidate> = (0..config.restarts)
        .into_par_iter()
        .map(|r| run_restart(matrix, config, r))
        .collect();

    let mut evaluations = incumbent.evaluations;
    for c in candidates {
        evaluations += c.evaluations;
        if c.length < incumbent.length {
            incumbent = c;
        }
    }

    Ok(TopologyPlan {
        locally_optimal: is_two_opt_optimal(&incumbent.order, matrix, config.objective),
        order: incumbent.order,
        total_length: incumbent.length,
        objective: config.objective,
        evaluations,
        restarts_used: config.restarts,
    })
}
