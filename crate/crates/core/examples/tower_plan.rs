//! Plans the shortest tower chain with restart 2-opt and checks it against brute force.

use patchsls::planner::{
    brute_force_optimal, distance_matrix, is_two_opt_optimal, stochastic_search, Annealing, Objective, SearchConfig,
};

fn main() -> patchsls::Result<()> {
    let towers = [
        (0.0, 0.0),
        (420.0, 80.0),
        (150.0, 610.0),
        (900.0, 300.0),
        (610.0, 720.0),
        (300.0, 260.0),
        (820.0, 900.0),
        (60.0, 980.0),
    ];
    let m = distance_matrix(&towers)?;

    for objective in [Objective::OpenPath, Objective::ClosedTour] {
        let config = SearchConfig {
            objective,
            seed: 7,
            ..SearchConfig::default()
        };
        let plan = stochastic_search(&m, &config)?;
        let best = brute_force_optimal(&m, objective)?;
        println!("{objective:?}");
        println!("  order        {:?}", plan.order);
        println!(
            "  length       {:.3} m (optimum {:.3} m)",
            plan.total_length, best.total_length
        );
        println!("  evaluations  {}", plan.evaluations);
        println!("  2-opt audit  {}", is_two_opt_optimal(&plan.order, &m, objective));
    }

    let annealed = stochastic_search(
        &m,
        &SearchConfig {
            restarts: 4,
            annealing: Some(Annealing::default()),
            ..SearchConfig::default()
        },
    )?;
    println!("annealed open path {:.3} m", annealed.total_length);
    Ok(())
}
