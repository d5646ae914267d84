use patchsls::planner::{
    best_two_exchange, brute_force_optimal, distance_matrix, stochastic_search, tour_length, two_opt_descent,
    Annealing, Objective, SearchConfig,
};
use proptest::prelude::*;

fn points(max_n: usize) -> impl Strategy<Value = Vec<(f64, f64)>> {
    prop::collection::vec((-1e3f64..1e3, -1e3f64..1e3), 1..max_n)
}

fn objective() -> impl Strategy<Value = Objective> {
    prop_oneof![Just(Objective::OpenPath), Just(Objective::ClosedTour)]
}

proptest! {
    #[test]
    fn descent_never_lengthens(pts in points(40), obj in objective(), perm_seed in any::<u64>()) {
        let m = distance_matrix(&pts).unwrap();
        let mut order: Vec<usize> = (0..pts.len()).collect();
        // cheap deterministic shuffle
        let mut s = perm_seed;
        for i in (1..order.len()).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            order.swap(i, (s >> 33) as usize % (i + 1));
        }
        let before = tour_length(&order, &m, obj).unwrap();
        let after_order = two_opt_descent(&order, &m, obj).unwrap();
        prop_assert!(tour_length(&after_order, &m, obj).unwrap() <= before + 1e-9);
        prop_assert!(best_two_exchange(&after_order, &m, obj).is_none());
    }

    #[test]
    fn plans_are_certified_and_recomputable(pts in points(30), obj in objective(), seed in any::<u64>(), anneal in any::<bool>()) {
        let m = distance_matrix(&pts).unwrap();
        let cfg = SearchConfig {
            objective: obj,
            restarts: 4,
            seed,
            annealing: anneal.then_some(Annealing { t_initial: 0.3, cooling: 0.8, steps_per_temp: 20 }),
        };
        let plan = stochastic_search(&m, &cfg).unwrap();
        prop_assert!(plan.locally_optimal);
        prop_assert!(best_two_exchange(&plan.order, &m, obj).is_none());
        prop_assert!((tour_length(&plan.order, &m, obj).unwrap() - plan.total_length).abs() < 1e-9);
        prop_assert_eq!(stochastic_search(&m, &cfg).unwrap(), plan);
    }

    #[test]
    fn search_never_beats_the_oracle(pts in points(8), obj in objective(), seed in any::<u64>()) {
        let m = distance_matrix(&pts).unwrap();
        let plan = stochastic_search(&m, &SearchConfig { objective: obj, restarts: 5, seed, annealing: None }).unwrap();
        let best = brute_force_optimal(&m, obj).unwrap();
        prop_assert!(plan.total_length >= best.total_length - 1e-9);
    }

    #[test]
    fn scaling_coordinates_scales_length(pts in points(8), s in 0.01f64..100.0, obj in objective()) {
        let m = distance_matrix(&pts).unwrap();
        let scaled: Vec<(f64, f64)> = pts.iter().map(|&(x, y)| (x * s, y * s)).collect();
        let ms = distance_matrix(&scaled).unwrap();
        let a = brute_force_optimal(&m, obj).unwrap();
        let b = brute_force_optimal(&ms, obj).unwrap();
        prop_assert!((b.total_length - s * a.total_length).abs() <= 1e-9 * (1.0 + b.total_length));
        // the original optimum stays optimal after scaling
        let a_scaled = tour_length(&a.order, &ms, obj).unwrap();
        prop_assert!((a_scaled - b.total_length).abs() <= 1e-9 * (1.0 + b.total_length));
    }
}

#[test]
fn scale_equivariance_keeps_unique_optimum() {
    // irregular pentagon with a unique optimal tour
    let pts = [(0.0, 0.0), (4.0, 0.5), (5.0, 3.0), (2.0, 5.5), (-1.0, 3.0)];
    let m = distance_matrix(&pts).unwrap();
    let cfg = SearchConfig {
        objective: Objective::ClosedTour,
        restarts: 10,
        seed: 3,
        annealing: None,
    };
    let edges = |order: &[usize]| {
        let mut e: Vec<(usize, usize)> = (0..order.len())
            .map(|i| {
                let (a, b) = (order[i], order[(i + 1) % order.len()]);
                (a.min(b), a.max(b))
            })
            .collect();
        e.sort();
        e
    };
    let base = stochastic_search(&m, &cfg).unwrap();
    for s in [0.001, 0.5, 7.0, 1e4] {
        let scaled: Vec<(f64, f64)> = pts.iter().map(|&(x, y)| (x * s, y * s)).collect();
        let p = stochastic_search(&distance_matrix(&scaled).unwrap(), &cfg).unwrap();
        assert!((p.total_length - s * base.total_length).abs() < 1e-9 * (1.0 + p.total_length));
        assert_eq!(edges(&p.order), edges(&base.order));
    }
}
