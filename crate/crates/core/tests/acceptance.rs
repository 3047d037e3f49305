//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Run with `cargo test -p spinchain-core --test acceptance`.

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use spinchain_core::analysis::{critical_temperatures, detect_revival};
use spinchain_core::entanglement::{family_gap, oracle_thermal_concurrence};
use spinchain_core::spectrum::XAngles;
use spinchain_core::thermal::x_thermal_entries;
use spinchain_core::{
    analytic_spectrum, build_hamiltonian, build_hamiltonian_x, couplings_from_mean_anisotropy,
    critical_b_nonuniform, critical_b_uniform, critical_dm_strength, gibbs_state,
    ground_state_concurrence_x, hermitian_eigensolve, thermal_concurrence, MeanAnisotropy,
    ModelParams, SweepAxis, SweepParam, SweepSpec, Temperature,
};

const SEED: u64 = 0x5eed_c0c0;

struct Outcome {
    id: &'static str,
    title: &'static str,
    pass: bool,
    detail: String,
    elapsed: Duration,
}

fn run(id: &'static str, title: &'static str, f: impl FnOnce() -> (bool, String)) -> Outcome {
    let start = Instant::now();
    let (pass, detail) = f();
    let elapsed = start.elapsed();
    let o = Outcome {
        id,
        title,
        pass,
        detail,
        elapsed,
    };
    println!(
        "[{}] {} {}: {} ({:.2?})",
        if o.pass { "PASS" } else { "FAIL" },
        o.id,
        o.title,
        o.detail,
        o.elapsed
    );
    o
}

fn temp(t: f64) -> Temperature {
    Temperature::new(t).unwrap()
}

fn random_params(rng: &mut ChaCha8Rng, x: bool) -> ModelParams {
    let v: [f64; 6] = std::array::from_fn(|_| rng.random_range(-3.0..3.0));
    if x {
        ModelParams::x(v[0], v[1], v[2], v[3], v[4], v[5])
    } else {
        ModelParams::z(v[0], v[1], v[2], v[3], v[4], v[5])
    }
}

fn random_temperature(rng: &mut ChaCha8Rng) -> f64 {
    rng.random_range(0.05f64.ln()..10f64.ln()).exp()
}

/// Draw set shared by criteria 2 and 3.
fn draws(n: usize) -> Vec<(ModelParams, f64)> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    (0..n)
        .map(|_| {
            let x = rng.random_bool(0.5);
            let p = random_params(&mut rng, x);
            (p, random_temperature(&mut rng))
        })
        .collect()
}

fn c(p: &ModelParams, t: f64) -> f64 {
    thermal_concurrence(p, temp(t)).unwrap().value()
}

fn critical_constants() -> (bool, String) {
    let dc = critical_dm_strength(&ModelParams::x(0.8, 0.5, 0.2, 0.0, 3.0, 1.5)).unwrap();
    let bc = critical_b_uniform(&ModelParams::x(0.8, 0.5, 0.2, 1.0, 0.0, 1.5)).unwrap();
    let bn = critical_b_nonuniform(&ModelParams::x(0.8, 0.5, 0.2, 1.6, 3.0, 0.0)).unwrap();
    let ok = |v: Option<f64>, want: f64| v.is_some_and(|v| (v - want).abs() <= 0.01);
    let pass = ok(dc, 1.575) && ok(bc, 2.63) && ok(bn, 1.47);
    (
        pass,
        format!("D_xc={dc:?} (1.575±0.01), B_xc={bc:?} (2.63±0.01), b_xc={bn:?} (1.47±0.01)"),
    )
}

fn oracle_equivalence(set: &[(ModelParams, f64)]) -> (bool, String) {
    let mut worst = 0.0f64;
    for (p, t) in set {
        let oracle = oracle_thermal_concurrence(p, temp(*t)).unwrap().value();
        worst = worst.max((c(p, *t) - oracle).abs());
    }
    (worst <= 1e-8, format!("{} draws, max |Δ| = {worst:.3e} (≤ 1e-8)", set.len()))
}

fn spectrum_equivalence(set: &[(ModelParams, f64)]) -> (bool, String) {
    let mut worst = 0.0f64;
    for (p, _) in set {
        let a = analytic_spectrum(p).unwrap().eigenvalues;
        let b = hermitian_eigensolve(&build_hamiltonian(p).unwrap()).unwrap().eigenvalues;
        for (x, y) in a.iter().zip(&b) {
            worst = worst.max((x - y).abs());
        }
    }
    (worst <= 1e-10, format!("{} draws, max |ΔE| = {worst:.3e} (≤ 1e-10)", set.len()))
}

fn axis_duality() -> (bool, String) {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 4);
    let mut worst = 0.0f64;
    for _ in 0..1000 {
        let p = random_params(&mut rng, true);
        let t = random_temperature(&mut rng);
        let cp = p.couplings;
        let f = p.fields;
        let dual = ModelParams::z(cp.j_y, cp.j_z, cp.j_x, f.d, f.b_uniform, f.b_nonuniform);
        worst = worst.max((c(&p, t) - c(&dual, t)).abs());
    }
    (worst <= 1e-10, format!("1000 draws, max |C_x − C_z(J_y,J_z,J_x)| = {worst:.3e} (≤ 1e-10)"))
}

fn zero_temperature() -> (bool, String) {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 5);
    let (mut accepted, mut drawn, mut worst) = (0, 0, 0.0f64);
    while accepted < 1000 {
        drawn += 1;
        let p = random_params(&mut rng, true);
        let a = XAngles::new(&p).unwrap();
        if (p.couplings.j_x - 0.5 * (a.w1 - a.w2)).abs() < 0.05 {
            continue;
        }
        accepted += 1;
        let g = ground_state_concurrence_x(&p).unwrap().value();
        worst = worst.max((g - c(&p, 1e-3)).abs());
    }
    (
        worst <= 1e-5,
        format!("1000 draws ({drawn} drawn), max |C(0) − C(1e-3)| = {worst:.3e} (≤ 1e-5)"),
    )
}

fn plateau() -> (bool, String) {
    let (jy, jz) = couplings_from_mean_anisotropy(MeanAnisotropy::new(0.5, 0.8));
    let at = |b: f64| ModelParams::x(-1.0, jy, jz, 0.0, 1.0, b);
    let g = |b: f64| ground_state_concurrence_x(&at(b)).unwrap().value();
    let level = g(0.01);
    // largest jump on a fine b grid
    let step = 1e-4;
    let (mut jump_at, mut jump) = (f64::NAN, 0.0);
    let mut prev = g(0.01);
    for i in 1..=29_900 {
        let b = 0.01 + step * i as f64;
        let cur = g(b);
        if (cur - prev).abs() > jump {
            jump = (cur - prev).abs();
            jump_at = b - 0.5 * step;
        }
        prev = cur;
    }
    let bc = critical_b_nonuniform(&at(0.0)).unwrap().unwrap_or(f64::NAN);
    let pass = (level - 0.37139).abs() <= 1e-3 && (jump_at - bc).abs() <= 1e-3;
    (
        pass,
        format!("C(b=0.01) = {level:.6} (0.37139±1e-3), jump of {jump:.3} at b≈{jump_at:.5} vs b_xc = {bc:.5} (±1e-3)"),
    )
}

fn dm_comparison() -> (bool, String) {
    let cx = c(&ModelParams::x(1.0, 0.5, 0.2, 3.0, 0.0, 0.0), 3.0);
    let cz = c(&ModelParams::z(1.0, 0.5, 0.2, 3.0, 0.0, 0.0), 3.0);
    (cx > cz && cz > 0.0, format!("C_x = {cx:.6} > C_z = {cz:.6} > 0"))
}

fn dm_critical_temperature() -> (bool, String) {
    let tx = critical_temperatures(&ModelParams::x(1.0, 0.5, 0.2, 3.0, 0.0, 0.0), 20.0).unwrap();
    let tz = critical_temperatures(&ModelParams::z(1.0, 0.5, 0.2, 3.0, 0.0, 0.0), 20.0).unwrap();
    let pass = tx.len() == 1 && tz.len() == 1 && tx[0] > tz[0];
    (pass, format!("T_c x-model {tx:?} > z-model {tz:?}"))
}

fn field_revival() -> (bool, String) {
    let sweep_b = |p: ModelParams| {
        let axis = SweepAxis::linspace(SweepParam::B, 0.0, 4.0, 401).unwrap();
        detect_revival(&SweepSpec::new(p, 0.1, axis, None).unwrap(), 1e-9).unwrap()
    };
    let rz = sweep_b(ModelParams::z(1.0, 0.8, 0.2, 0.0, 0.0, 0.0));
    let rx = sweep_b(ModelParams::x(1.0, 0.8, 0.2, 0.0, 0.0, 0.0));
    let pass = rz.has_revival() && rx.has_revival() && rx.onset() > rz.onset();
    (pass, format!("revival onset B_z = {:?}, B_x = {:?}", rz.onset(), rx.onset()))
}

fn temperature_revival() -> (bool, String) {
    let p = ModelParams::x(0.8, 0.5, 0.2, 1.0, 3.0, 1.5);
    let ts = critical_temperatures(&p, 10.0).unwrap();
    let pass = ts.len() == 2 && {
        let mid = (ts[0] * ts[1]).sqrt();
        let below = 0.5 * ts[0];
        c(&p, mid) > 1e-9
            && c(&p, below) > 1e-9
            && c(&p, 1.5 * ts[1]) <= 1e-9
            && family_gap(&p, temp(below)).unwrap() * family_gap(&p, temp(mid)).unwrap() < 0.0
    };
    (pass, format!("T_c = {ts:?}, entangled between"))
}

fn x_state_pattern() -> (bool, String) {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED + 8);
    let mut worst = 0.0f64;
    for _ in 0..1000 {
        let p = random_params(&mut rng, true);
        let t = temp(random_temperature(&mut rng));
        let es = hermitian_eigensolve(&build_hamiltonian_x(&p).unwrap()).unwrap();
        let rho = gibbs_state(&es, t).unwrap();
        let r = |i: usize, j: usize| rho.get(i, j);
        let pattern = [
            (r(0, 0) - r(3, 3)).norm(),
            (r(1, 1) - r(2, 2)).norm(),
            (r(0, 3) - r(3, 0)).norm(),
            r(0, 3).im.abs(),
            (r(1, 2) - r(2, 1)).norm(),
            r(1, 2).im.abs(),
            (r(1, 0) - r(2, 3)).norm(),
            (r(2, 0) - r(1, 3)).norm(),
        ];
        let closed = x_thermal_entries(&p, t).unwrap().to_matrix();
        let entrywise = (0..16).map(|k| (closed[k / 4][k % 4] - r(k / 4, k % 4)).norm());
        worst = pattern.into_iter().chain(entrywise).fold(worst, f64::max);
    }
    (worst <= 1e-12, format!("1000 draws, max pattern/entry defect = {worst:.3e} (≤ 1e-12)"))
}

fn main() {
    let mut outcomes = Vec::new();

    let o = run("AC1", "critical constants", critical_constants);
    let slow = o.elapsed > Duration::from_secs(1);
    outcomes.push(o);
    outcomes.push(run("AC1", "critical constants runtime", || {
        (!slow, "under 1 s".to_string())
    }));

    let set = draws(10_000);
    let o = run("AC2", "oracle equivalence", || oracle_equivalence(&set));
    let secs = o.elapsed;
    outcomes.push(o);
    outcomes.push(run("AC2", "oracle equivalence runtime", || {
        (secs < Duration::from_secs(30), format!("{secs:.2?} (< 30 s)"))
    }));
    outcomes.push(run("AC3", "spectrum equivalence", || spectrum_equivalence(&set)));
    outcomes.push(run("AC4", "axis duality", axis_duality));
    outcomes.push(run("AC5", "zero-temperature consistency", zero_temperature));
    outcomes.push(run("AC6", "ground-state plateau and discontinuity", plateau));
    outcomes.push(run("AC7", "(a) x-axis DM entangles more at T=3", dm_comparison));
    outcomes.push(run("AC7", "(b) x-axis DM has higher T_c", dm_critical_temperature));
    outcomes.push(run("AC7", "(c) field revival, later onset for x", field_revival));
    outcomes.push(run("AC7", "(d) two critical temperatures with revival", temperature_revival));
    outcomes.push(run("AC8", "x-axis Gibbs state entry pattern", x_state_pattern));

    let failed = outcomes.iter().filter(|o| !o.pass).count();
    println!("acceptance: {} passed, {failed} failed", outcomes.len() - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
