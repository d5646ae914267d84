//! One check per acceptance criterion. Each test prints a single
//! `PASS`/`FAIL` line; run with `--nocapture` to see them.

use std::path::Path;
use std::process::Command;
use std::time::{Duration, Instant};

use patchsls::design::{
    compute_delta_l, compute_eps_eff, compute_resonant_length, compute_width, design_patch, microstrip_impedance,
    synthesize_feed_width, DesignMode, DesignRequest, SubstrateSpec,
};
use patchsls::em::{directivity, far_field, fspl, sweep, PatternCut};
use patchsls::planner::{
    brute_force_optimal, distance_matrix, is_two_opt_optimal, stochastic_search, Objective, SearchConfig,
};
use patchsls::{Frequency, Length};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const C: f64 = 3.0e8;

struct Check {
    failures: Vec<String>,
}

impl Check {
    fn new() -> Self {
        Check { failures: Vec::new() }
    }

    fn near(&mut self, what: &str, got: f64, want: f64, tol: f64) {
        if (got - want).abs().is_nan() || (got - want).abs() > tol {
            self.failures.push(format!("{what}: {got} not within {tol} of {want}"));
        }
    }

    fn that(&mut self, what: &str, ok: bool) {
        if !ok {
            self.failures.push(what.to_string());
        }
    }

    fn within(&mut self, what: &str, elapsed: Duration, budget: Duration) {
        self.that(&format!("{what} took {elapsed:?}, budget {budget:?}"), elapsed < budget);
    }

    fn report(self, id: u32, title: &str, detail: String) {
        if self.failures.is_empty() {
            println!("PASS  criterion {id}: {title} ({detail})");
        } else {
            println!("FAIL  criterion {id}: {title} ({detail})");
            panic!("criterion {id} failed:\n  {}", self.failures.join("\n  "));
        }
    }
}

fn fr4_request(ghz: f64, mode: DesignMode) -> DesignRequest {
    DesignRequest::new(Frequency::from_ghz(ghz), SubstrateSpec::fr4(), mode)
}

#[test]
fn criterion_1_table_reproduction() {
    let mut c = Check::new();
    let request = fr4_request(2.45, DesignMode::PaperGeometry);
    let start = Instant::now();
    let g = design_patch(&request).unwrap();
    let elapsed = start.elapsed();
    c.near("W", g.width.mm(), 36.27, 0.05);
    c.near("L", g.length.mm(), 72.54, 0.10);
    // "Exact" up to the rounding of 3 * 1.6e-3 in binary floating point.
    c.near("Fi", g.inset_depth.mm(), 4.8, 1e-12);
    c.near("Gpf", g.inset_gap.mm(), 1.0, 1e-12);
    c.that("Lg = 2L", g.ground_length.m() == 2.0 * g.length.m());
    c.that("Wg = 2W", g.ground_width.m() == 2.0 * g.width.m());
    c.within("design_patch", elapsed, Duration::from_millis(1));
    let detail = format!("W={:.3} L={:.3} mm in {elapsed:?}", g.width.mm(), g.length.mm());
    c.report(1, "table reproduction", detail);
}

#[test]
fn criterion_2_formula_audit() {
    // Hand evaluation of the closed forms, written out independently of the library.
    let (er, h) = (4.7_f64, 1.6e-3_f64);
    let hand_w = |f: f64| C / (2.0 * f * ((er + 1.0) / 2.0).sqrt());
    let w = 36.27e-3;
    let hand_eeff = (er + 1.0) / 2.0 + (er - 1.0) / 2.0 / (1.0 + 12.0 * h / w).sqrt();
    let hand_dl = 0.412 * h * (hand_eeff + 0.3) * (w / h + 0.264) / ((hand_eeff - 0.258) * (w / h + 0.8));
    let hand_l = C / (2.0 * 2.45e9 * hand_eeff.sqrt()) - 2.0 * hand_dl;

    let mut c = Check::new();
    let w24 = compute_width(Frequency::from_ghz(2.4), er).unwrap().mm();
    let eeff = compute_eps_eff(er, Length::from_mm(1.6), Length::from_mm(36.27)).unwrap();
    let dl = compute_delta_l(Length::from_mm(1.6), eeff, Length::from_mm(36.27))
        .unwrap()
        .mm();
    let l = compute_resonant_length(Frequency::from_ghz(2.45), eeff, Length::from_mm(dl))
        .unwrap()
        .physical
        .mm();

    c.near("W(2.4 GHz)", w24, 37.02, 0.05);
    c.near("eps_eff", eeff, 4.346, 0.005);
    c.near("delta L", dl, 0.732, 0.005);
    c.near("resonant L", l, 27.90, 0.05);
    c.near("W vs hand", w24, hand_w(2.4e9) * 1e3, 1e-9);
    c.near("eps_eff vs hand", eeff, hand_eeff, 1e-12);
    c.near("delta L vs hand", dl, hand_dl * 1e3, 1e-9);
    c.near("L vs hand", l, hand_l * 1e3, 1e-9);
    let detail = format!("W24={w24:.3} eeff={eeff:.4} dL={dl:.4} L={l:.3}");
    c.report(2, "formula audit", detail);
}

#[test]
fn criterion_3_feed_synthesis() {
    let mut c = Check::new();
    let h = Length::from_mm(1.6);
    let wf = synthesize_feed_width(50.0, 4.7, h).unwrap();
    c.near("Wf(50 ohm)", wf.mm(), 2.932, 0.10);
    let mut worst = 0.0_f64;
    for z0 in [25.0, 50.0, 75.0, 100.0] {
        let w = synthesize_feed_width(z0, 4.7, h).unwrap();
        let back = microstrip_impedance(w, 4.7, h);
        worst = worst.max((back - z0).abs());
        c.near(&format!("round trip {z0} ohm"), back, z0, 0.5);
    }
    c.report(
        3,
        "feed synthesis",
        format!("Wf={:.3} mm, worst round trip {worst:.3} ohm", wf.mm()),
    );
}

#[test]
fn criterion_4_surrogate_self_consistency() {
    let mut c = Check::new();
    let g = design_patch(&fr4_request(2.45, DesignMode::ResonantGeometry)).unwrap();
    let start = Instant::now();
    let s = sweep(&g, Frequency::from_ghz(2.4), Frequency::from_ghz(24.0), 500).unwrap();
    let elapsed = start.elapsed();
    let f_min = s.frequencies[s.min_s11_index()].ghz();
    c.that("500 sweep points", s.len() == 500);
    c.near("min |S11| frequency", f_min, 2.45, 0.05 * 2.45);
    c.that("VSWR >= 1 everywhere", s.vswr.iter().all(|&v| v >= 1.0));
    c.within("sweep", elapsed, Duration::from_secs(1));
    c.report(
        4,
        "surrogate self-consistency",
        format!("min S11 at {f_min:.4} GHz, {elapsed:?}"),
    );
}

#[test]
fn criterion_5_pattern_properties() {
    let mut c = Check::new();
    // The resonant geometry is the design that actually radiates in its
    // fundamental mode at 2.45 GHz; the L = 2W table geometry places the
    // slots ~0.6 wavelengths apart and is reported alongside for reference.
    let g = design_patch(&fr4_request(2.45, DesignMode::ResonantGeometry)).unwrap();
    let f = Frequency::from_ghz(2.45);
    let table = design_patch(&fr4_request(2.45, DesignMode::PaperGeometry)).unwrap();
    let d_table = directivity(&far_field(&table, f, 91, 72).unwrap()).unwrap();
    let start = Instant::now();
    let p = far_field(&g, f, 91, 72).unwrap();
    let d = directivity(&p).unwrap();
    let fine = far_field(&g, f, 181, 144).unwrap();
    let d_fine = directivity(&fine).unwrap();
    let elapsed = start.elapsed();

    c.that("broadside equals 1", p.at(0, 0) == 1.0);
    c.that("maximum is 1", p.intensity.iter().cloned().fold(0.0, f64::max) == 1.0);
    let mut asym = 0.0_f64;
    for i in 0..p.n_theta() {
        for j in 0..p.n_phi() {
            asym = asym.max((p.at(i, j) - p.mirrored(i, j)).abs());
        }
    }
    c.that(&format!("phi mirror symmetry {asym:e}"), asym <= 1e-12);
    c.that(&format!("directivity {d:.3} dBi in [5, 10]"), (5.0..=10.0).contains(&d));
    let linear = |dbi: f64| 10f64.powf(dbi / 10.0);
    let change = (linear(d_fine) - linear(d)).abs() / linear(d);
    c.that(&format!("grid doubling change {change:e}"), change < 0.01);
    c.that(
        "E-plane cut defined",
        p.cut_intensity(PatternCut::EPlane, 0.0).is_some(),
    );
    c.within("pattern + directivity", elapsed, Duration::from_secs(5));
    c.report(
        5,
        "pattern properties",
        format!(
            "D={d:.3} dBi, doubling {:.4}%, {elapsed:?}; table geometry D={d_table:.3} dBi",
            100.0 * change
        ),
    );
}

#[test]
fn criterion_6_sls_oracle_equivalence() {
    let mut c = Check::new();
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let (mut matches, mut shorter, mut audit_failures) = (0, 0, 0);
    let start = Instant::now();
    for instance in 0..100u64 {
        let n = rng.gen_range(4..=9);
        let points: Vec<(f64, f64)> = (0..n)
            .map(|_| (rng.gen_range(0.0..1000.0), rng.gen_range(0.0..1000.0)))
            .collect();
        let m = distance_matrix(&points).unwrap();
        let config = SearchConfig {
            seed: instance,
            restarts: 20,
            ..SearchConfig::default()
        };
        let plan = stochastic_search(&m, &config).unwrap();
        let best = brute_force_optimal(&m, config.objective).unwrap();
        if (plan.total_length - best.total_length).abs() <= 1e-9 {
            matches += 1;
        }
        if plan.total_length < best.total_length - 1e-9 {
            shorter += 1;
        }
        if !is_two_opt_optimal(&plan.order, &m, Objective::OpenPath) {
            audit_failures += 1;
        }
    }
    let elapsed = start.elapsed();
    c.that(&format!("{matches}/100 match the oracle"), matches >= 95);
    c.that(&format!("{shorter} plans beat the oracle"), shorter == 0);
    c.that(
        &format!("{audit_failures} plans fail the 2-exchange audit"),
        audit_failures == 0,
    );
    c.within("100 instances", elapsed, Duration::from_secs(30));
    c.report(
        6,
        "SLS oracle equivalence",
        format!("{matches}/100 optimal, {elapsed:?}"),
    );
}

#[test]
fn criterion_7_metric_properties() {
    let mut c = Check::new();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut worst = 0.0_f64;
    for _ in 0..1000 {
        let n = rng.gen_range(2..=12);
        let scale = 10f64.powi(rng.gen_range(-1..=4));
        let points: Vec<(f64, f64)> = (0..n)
            .map(|_| (rng.gen_range(-scale..scale), rng.gen_range(-scale..scale)))
            .collect();
        let m = distance_matrix(&points).unwrap();
        for i in 0..n {
            worst = worst.max(m.get(i, i).abs());
            for j in 0..n {
                worst = worst.max((m.get(i, j) - m.get(j, i)).abs());
                for k in 0..n {
                    worst = worst.max(m.get(i, k) - (m.get(i, j) + m.get(j, k)));
                }
            }
        }
    }
    c.that(&format!("worst violation {worst:e}"), worst <= 1e-9);
    c.report(
        7,
        "metric properties",
        format!("1000 matrices, worst violation {worst:e} m"),
    );
}

#[test]
fn criterion_8_determinism() {
    let mut c = Check::new();
    let scenarios = Path::new(env!("CARGO_MANIFEST_DIR")).join("scenarios");
    let dir = tempfile::tempdir().unwrap();
    let commands: [(&str, &str, &[&str]); 5] = [
        ("design", "fr4_paper.toml", &[]),
        ("sweep", "fr4_resonant.toml", &[]),
        ("pattern", "fr4_paper.toml", &[]),
        ("plan", "towers.toml", &["--seed", "11"]),
        ("plan", "unit_square.toml", &["--seed", "3"]),
    ];
    let run = |cmd: &str, scenario: &str, extra: &[&str], tag: usize| -> (Vec<u8>, Vec<u8>) {
        let out_path = dir.path().join(format!("{cmd}_{tag}.csv"));
        let out = Command::new(env!("CARGO_BIN_EXE_patchsls"))
            .arg(cmd)
            .arg("--scenario")
            .arg(scenarios.join(scenario))
            .arg("--out")
            .arg(&out_path)
            .args(extra)
            .output()
            .unwrap();
        assert!(
            out.status.success(),
            "{cmd} {scenario}: {}",
            String::from_utf8_lossy(&out.stderr)
        );
        (out.stdout, std::fs::read(&out_path).unwrap_or_default())
    };
    for (k, (cmd, scenario, extra)) in commands.iter().enumerate() {
        let first = run(cmd, scenario, extra, 2 * k);
        let second = run(cmd, scenario, extra, 2 * k + 1);
        c.that(&format!("{cmd} {scenario} stdout differs"), first.0 == second.0);
        c.that(&format!("{cmd} {scenario} file differs"), first.1 == second.1);
    }
    c.report(
        8,
        "determinism",
        format!("{} command runs compared byte-for-byte", commands.len()),
    );
}

#[test]
fn criterion_9_link_budget() {
    let mut c = Check::new();
    let f = Frequency::from_ghz(2.45);
    let one = fspl(1.0, f).unwrap();
    let two = fspl(2.0, f).unwrap();
    c.near("fspl(1 m)", one, 40.22, 0.01);
    c.near("doubling", two - one, 6.02, 0.01);
    c.report(
        9,
        "link budget",
        format!("fspl={one:.4} dB, doubling +{:.4} dB", two - one),
    );
}
