//! Standalone property suite: structural identities that must hold for
//! arbitrary windows and parameters, exercised with random inputs.

use gabor_frames::kframe::{build_model, s_hg_matrix};
use gabor_frames::zak::{stored_k_span, zak_point, zak_unitarity_residual};
use gabor_frames::{CorrelationTable, GaborSystem, Window};
use nalgebra::DMatrix;
use num_complex::Complex64;
use proptest::prelude::*;
use std::f64::consts::TAU;

fn window_strategy(max_len: usize) -> impl Strategy<Value = Window> {
    (
        -6i64..6,
        prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), 1..=max_len),
    )
        .prop_map(|(offset, pairs)| {
            Window::new(offset, pairs.into_iter().map(|(re, im)| Complex64::new(re, im)).collect())
        })
}

fn system_strategy() -> impl Strategy<Value = GaborSystem> {
    (1i64..=4, 1i64..=5, prop::collection::vec(window_strategy(5), 1..=3)).prop_filter_map(
        "nonzero window family",
        |(m, n, windows)| {
            if windows.iter().all(|w| w.is_zero()) {
                None
            } else {
                GaborSystem::on_full_line(m, n, windows).ok()
            }
        },
    )
}

proptest! {
    #[test]
    fn zak_quasiperiodicity(
        w in window_strategy(6),
        m in 1i64..=4,
        j in -5i64..5,
        theta in 0.0f64..1.0,
    ) {
        let base = zak_point(&w, m, j, theta);
        let shifted = zak_point(&w, m, j + m, theta);
        let phase = Complex64::from_polar(1.0, -TAU * theta);
        prop_assert!((shifted - phase * base).norm() <= 1e-12);
        let wrapped = zak_point(&w, m, j, theta + 1.0);
        prop_assert!((wrapped - base).norm() <= 1e-12);
    }

    #[test]
    fn zak_unitarity(w in window_strategy(8), m in 1i64..=4) {
        prop_assume!(!w.is_zero());
        let grid = (2 * stored_k_span(&w, m) + 3) as usize;
        let residual = zak_unitarity_residual(&w, m, grid).unwrap();
        prop_assert!(residual <= 1e-12, "residual {residual}");
    }

    #[test]
    fn table_is_translation_periodic(sys in system_strategy(), j in -8i64..8) {
        let table = CorrelationTable::auto(&sys);
        let n = sys.translation_step();
        for k in -table.band_radius()..=table.band_radius() {
            let a = table.entry(j, k);
            let b = table.entry(j + n, k);
            prop_assert!((a - b).norm() <= 1e-12);
        }
    }

    #[test]
    fn autocorrelation_band_is_hermitian(sys in system_strategy(), j in -8i64..8) {
        let table = CorrelationTable::auto(&sys);
        let m = sys.modulation_order();
        for k in -table.band_radius()..=table.band_radius() {
            let lhs = table.entry(j + k * m, -k);
            let rhs = table.entry(j, k).conj();
            prop_assert!((lhs - rhs).norm() <= 1e-12);
        }
    }

    #[test]
    fn energy_identity_randomized(sys in system_strategy(), f in window_strategy(7)) {
        prop_assume!(!f.is_zero());
        let table = CorrelationTable::auto(&sys);
        let direct = sys.analysis_energy(&f);
        let via_table = table.energy(&f).unwrap();
        prop_assert!((direct - via_table).abs() <= 1e-10 * direct.abs().max(1.0));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]
    #[test]
    fn mixed_operator_commutes_with_time_frequency_shifts(
        g in window_strategy(4),
        h in window_strategy(4),
        m in 1i64..=2,
        n in 1i64..=2,
    ) {
        prop_assume!(!g.is_zero() && !h.is_zero());
        let sys_g = GaborSystem::on_full_line(m, n, vec![g]).unwrap();
        let sys_h = GaborSystem::on_full_line(m, n, vec![h]).unwrap();
        let model_g = build_model(&sys_g, 3);
        let model_h = build_model(&sys_h, 3);
        let s = s_hg_matrix(&model_g, &model_h).unwrap().matrix;
        let p = model_g.period() as usize;
        let modulation = DMatrix::from_fn(p, p, |i, j| {
            if i == j {
                Complex64::from_polar(1.0, TAU * i as f64 / m as f64)
            } else {
                Complex64::ZERO
            }
        });
        let translation = DMatrix::from_fn(p, p, |i, j| {
            if (i as i64 - j as i64).rem_euclid(p as i64) == n {
                Complex64::new(1.0, 0.0)
            } else {
                Complex64::ZERO
            }
        });
        prop_assert!((&s * &modulation - &modulation * &s).norm() <= 1e-10);
        prop_assert!((&s * &translation - &translation * &s).norm() <= 1e-10);
    }
}
