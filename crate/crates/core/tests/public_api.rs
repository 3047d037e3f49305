use approx::assert_abs_diff_eq;
use proptest::prelude::*;
use spinchain_core::analysis::{evaluate_point, verify_sweep};
use spinchain_core::entanglement::oracle_thermal_concurrence;
use spinchain_core::{
    analytic_spectrum, build_hamiltonian, concurrence_mixed, critical_b_nonuniform, critical_temperatures,
    gibbs_state, ground_state_concurrence_x, hermitian_eigensolve, sweep, thermal_concurrence, Axis,
    ModelParams, SweepAxis, SweepParam, SweepSpec, Temperature,
};

#[test]
fn gibbs_route_matches_closed_form() {
    let p = ModelParams::z(1.0, 0.3, -0.4, 0.7, 1.1, 0.6);
    let t = Temperature::new(0.9).unwrap();
    let h = build_hamiltonian(&p).unwrap();
    let rho = gibbs_state(&hermitian_eigensolve(&h).unwrap(), t).unwrap();
    assert_abs_diff_eq!(rho.trace(), 1.0, epsilon = 1e-13);
    assert_abs_diff_eq!(
        concurrence_mixed(&rho).unwrap().value(),
        thermal_concurrence(&p, t).unwrap().value(),
        epsilon = 1e-12
    );
}

#[test]
fn low_temperature_approaches_ground_state() {
    let p = ModelParams::x(0.8, 0.5, 0.2, 1.0, 3.0, 0.7);
    let g = ground_state_concurrence_x(&p).unwrap().value();
    let c = thermal_concurrence(&p, Temperature::new(1e-3).unwrap()).unwrap().value();
    assert_abs_diff_eq!(g, c, epsilon = 1e-10);
    assert_eq!(evaluate_point(&p, 0.0).unwrap(), g);
}

#[test]
fn ground_concurrence_drops_to_zero_past_critical_field() {
    let base = ModelParams::x(-1.0, 0.9, 0.1, 0.0, 1.0, 0.0);
    let bc = critical_b_nonuniform(&base).unwrap().unwrap();
    let at = |b: f64| {
        let mut p = base;
        p.fields.b_nonuniform = b;
        ground_state_concurrence_x(&p).unwrap().value()
    };
    assert_abs_diff_eq!(at(bc - 1e-6), at(0.0), epsilon = 1e-12);
    assert!(at(bc - 1e-6) - at(bc + 1e-6) > 0.1);
}

#[test]
fn critical_temperatures_bracket_sign_change() {
    let p = ModelParams::x(0.8, 0.5, 0.2, 1.0, 3.0, 1.5);
    let tc = critical_temperatures(&p, 6.0).unwrap();
    assert_eq!(tc.len(), 2);
    let c = |t: f64| thermal_concurrence(&p, Temperature::new(t).unwrap()).unwrap().value();
    assert!(c(tc[0] * 0.9) > 0.0 && c(tc[1] * 1.1) == 0.0);
    // the first one is a touch point, concurrence revives right after it
    assert!(c(0.5 * (tc[0] + tc[1])) > 0.0);
}

#[test]
fn surface_sweep_round_trip() {
    let spec = SweepSpec::new(
        ModelParams::z(1.0, 0.5, 0.2, 0.0, 1.0, 0.5),
        1.0,
        SweepAxis::linspace(SweepParam::D, 0.0, 2.0, 9).unwrap(),
        Some(SweepAxis::linspace(SweepParam::T, 0.05, 3.0, 7).unwrap()),
    )
    .unwrap();
    let r = sweep(&spec).unwrap();
    assert_eq!(r.rows.len(), 63);
    let csv = r.to_csv();
    assert!(csv.starts_with("D,T,concurrence\n"));
    assert_eq!(csv.lines().count(), 64);
    let v = verify_sweep(&r, 1).unwrap();
    assert!(v.passed(), "{v:?}");
    assert_eq!(v.checked, 63);
}

#[test]
fn rejects_invalid_input() {
    assert!(Temperature::new(-1.0).is_err());
    assert!(Temperature::new(f64::NAN).is_err());
    assert!(SweepAxis::linspace(SweepParam::D, 1.0, 0.0, 5).is_err());
    assert!("w".parse::<Axis>().is_err());
    let z = ModelParams::z(1.0, 1.0, 1.0, 0.0, 0.0, 0.0);
    assert!(evaluate_point(&z, 0.0).is_err());
}

fn params() -> impl Strategy<Value = ModelParams> {
    (prop::array::uniform6(-3.0..3.0f64), any::<bool>()).prop_map(|(v, x)| {
        let p = ModelParams::z(v[0], v[1], v[2], v[3], v[4], v[5]);
        if x { p.with_axis(Axis::X) } else { p }
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn closed_form_agrees_with_oracle(p in params(), lt in -3.0..2.5f64) {
        let t = Temperature::new(lt.exp()).unwrap();
        let a = thermal_concurrence(&p, t).unwrap().value();
        let b = oracle_thermal_concurrence(&p, t).unwrap().value();
        prop_assert!((a - b).abs() < 1e-8, "{a} vs {b}");
        prop_assert!((0.0..=1.0).contains(&a));
    }

    #[test]
    fn spectra_agree(p in params()) {
        let a = analytic_spectrum(&p).unwrap().eigenvalues;
        let b = hermitian_eigensolve(&build_hamiltonian(&p).unwrap()).unwrap().eigenvalues;
        for (x, y) in a.iter().zip(&b) {
            prop_assert!((x - y).abs() < 1e-10);
        }
    }

    #[test]
    fn hot_limit_is_separable(p in params()) {
        let c = thermal_concurrence(&p, Temperature::new(1e6).unwrap()).unwrap().value();
        prop_assert_eq!(c, 0.0);
    }
}
