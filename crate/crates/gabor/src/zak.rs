//! Discrete Zak transform `z_M f(j, theta) = sum_k f(j + kM) e^{2 pi i k theta}`
//! and the Zak-side frame and completeness characterizations for the critical
//! cases `N = M` and `N = LM`.

use num_complex::Complex64;

use crate::error::{GaborError, Result};
use crate::frame_analysis::DEFAULT_TOL;
use crate::signal::{div_ceil, div_floor, phase, GaborSystem, Window};

/// Exact Zak-transform value at one point; the sum is finite for finitely
/// supported windows.
pub fn zak_point(f: &Window, big_m: i64, j: i64, theta: f64) -> Complex64 {
    assert!(big_m >= 1);
    let Some((lo, hi)) = f.support() else {
        return Complex64::ZERO;
    };
    let k_lo = div_ceil(lo - j, big_m);
    let k_hi = div_floor(hi - j, big_m);
    (k_lo..=k_hi)
        .map(|k| f.value(j + k * big_m) * phase(k as f64 * theta))
        .sum()
}

/// Zak samples of one window on the fundamental domain `N_M x {t/T}`.
#[derive(Debug, Clone)]
pub struct ZakGrid {
    big_m: i64,
    grid_size: usize,
    /// `samples[j][t] = z(j, t/T)`.
    samples: Vec<Vec<Complex64>>,
}

impl ZakGrid {
    pub fn modulation_order(&self) -> i64 {
        self.big_m
    }

    pub fn grid_size(&self) -> usize {
        self.grid_size
    }

    pub fn sample(&self, j: usize, t: usize) -> Complex64 {
        self.samples[j][t]
    }
}

/// Samples `z_M f` at `theta = t/T`, exactly at each grid node.
pub fn zak_grid(f: &Window, big_m: i64, grid_size: usize) -> ZakGrid {
    assert!(grid_size >= 1);
    let samples = (0..big_m)
        .map(|j| {
            (0..grid_size)
                .map(|t| zak_point(f, big_m, j, t as f64 / grid_size as f64))
                .collect()
        })
        .collect();
    ZakGrid { big_m, grid_size, samples }
}

/// Span of modulation-block indices carrying stored samples, maximized over
/// residues. Governs the degree of `|z|^2` as a trigonometric polynomial.
pub fn stored_k_span(f: &Window, big_m: i64) -> i64 {
    match f.support() {
        None => 0,
        Some((lo, hi)) => div_floor(hi, big_m) - div_ceil(lo - (big_m - 1), big_m),
    }
}

/// Default grid size: exact quadrature plus dense extremum sampling for the
/// trigonometric polynomials at hand.
pub fn default_grid_size(sys: &GaborSystem) -> usize {
    let span = sys
        .windows()
        .iter()
        .map(|w| stored_k_span(w, sys.modulation_order()))
        .max()
        .unwrap_or(0);
    64usize.max(4 * span as usize + 1)
}

/// `sum_l |z_M g_l(j, t/T)|^2` over the fundamental grid.
fn energy_grid(sys: &GaborSystem, grid_size: usize) -> Vec<Vec<f64>> {
    let big_m = sys.modulation_order();
    let grids: Vec<ZakGrid> = sys.windows().iter().map(|w| zak_grid(w, big_m, grid_size)).collect();
    (0..big_m as usize)
        .map(|j| {
            (0..grid_size)
                .map(|t| grids.iter().map(|g| g.sample(j, t).norm_sqr()).sum())
                .collect()
        })
        .collect()
}

fn require_critical_case(sys: &GaborSystem) -> Result<()> {
    if sys.translation_step() != sys.modulation_order() {
        return Err(GaborError::ShapeViolation(format!(
            "Zak characterization needs N = M; got N = {}, M = {}",
            sys.translation_step(),
            sys.modulation_order()
        )));
    }
    if !sys.set().is_full_line() {
        return Err(GaborError::UnsupportedSet(
            "Zak characterization is stated on the full line".into(),
        ));
    }
    Ok(())
}

/// Frame bounds in the critical case `N = M`:
/// `A/M <= sum_l |z_M g_l|^2 <= B/M` characterizes the frame property, so the
/// grid extrema of `M sum_l |z|^2` estimate the optimal bounds. Verdicts are
/// grid-resolution limited; the integrand per residue is a trigonometric
/// polynomial, so a dense grid is faithful.
pub fn frame_check_nm(sys: &GaborSystem, grid_size: usize) -> Result<(f64, f64, bool)> {
    require_critical_case(sys)?;
    let big_m = sys.modulation_order() as f64;
    let energies = energy_grid(sys, grid_size);
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for row in &energies {
        for &e in row {
            lo = lo.min(big_m * e);
            hi = hi.max(big_m * e);
        }
    }
    Ok((lo, hi, lo > DEFAULT_TOL))
}

/// Completeness in the critical case `N = M`: for finitely supported windows
/// each `z_M g_l(j, .)` is a trigonometric polynomial, which vanishes on a set
/// of positive measure only if it vanishes identically. The system is complete
/// iff every residue class `j + M Z` meets the support of some window.
pub fn completeness_check_nm(sys: &GaborSystem) -> Result<bool> {
    require_critical_case(sys)?;
    let big_m = sys.modulation_order();
    let covered = |j: i64| {
        sys.windows().iter().any(|w| {
            w.samples()
                .any(|(i, v)| v != Complex64::ZERO && (i - j).rem_euclid(big_m) == 0)
        })
    };
    Ok((0..big_m).all(covered))
}

/// No-common-zero check for `sum_l |z_M g_l|^2` at resolution `T`, refined by
/// doubling the grid until two consecutive resolutions agree.
pub fn common_zero_check(sys: &GaborSystem, grid_size: usize) -> Result<bool> {
    require_critical_case(sys)?;
    let min_energy = |t: usize| -> f64 {
        energy_grid(sys, t)
            .iter()
            .flatten()
            .copied()
            .fold(f64::INFINITY, f64::min)
    };
    let mut t = grid_size;
    let mut verdict = min_energy(t) > DEFAULT_TOL;
    for _ in 0..4 {
        t *= 2;
        let refined = min_energy(t) > DEFAULT_TOL;
        if refined == verdict {
            return Ok(verdict);
        }
        verdict = refined;
    }
    Ok(verdict)
}

/// Necessary condition for frame bounds `(A, B)` at critical density
/// `N = LM`: `LA/M <= sum_l |z_M g_l|^2 <= LB/M` on the grid. `false` refutes
/// the claim that `(A, B)` are Riesz-basis bounds.
pub fn necessary_check_nlm(sys: &GaborSystem, a: f64, b: f64, grid_size: usize) -> Result<bool> {
    let l = sys.window_count() as i64;
    let big_m = sys.modulation_order();
    if sys.translation_step() != l * big_m {
        return Err(GaborError::ShapeViolation(format!(
            "necessary check needs N = LM; got N = {}, LM = {}",
            sys.translation_step(),
            l * big_m
        )));
    }
    if !sys.set().is_full_line() {
        return Err(GaborError::UnsupportedSet(
            "Zak characterization is stated on the full line".into(),
        ));
    }
    let lo = l as f64 * a / big_m as f64;
    let hi = l as f64 * b / big_m as f64;
    Ok(energy_grid(sys, grid_size)
        .iter()
        .flatten()
        .all(|&e| lo - DEFAULT_TOL <= e && e <= hi + DEFAULT_TOL))
}

/// Forced Zak zeros of odd (`f(-k) = -f(k)`) and even (`f(-k) = f(k)`)
/// windows: odd windows vanish at `(0, 0)` and `(0, 1/2)`, plus `(M/2, 0)`
/// for even `M`; even windows vanish at `(M/2, 1/2)` for even `M`. Windows
/// with neither symmetry force no zeros.
pub fn symmetry_zeros(f: &Window, big_m: i64) -> Vec<(i64, f64)> {
    assert!(big_m >= 1);
    let symmetric = |sign: f64| {
        f.samples().all(|(j, v)| (f.value(-j) - sign * v).norm() <= 1e-14)
    };
    if f.is_zero() || symmetric(-1.0) {
        let mut zeros = vec![(0, 0.0), (0, 0.5)];
        if big_m % 2 == 0 {
            zeros.push((big_m / 2, 0.0));
        }
        zeros
    } else if symmetric(1.0) && big_m % 2 == 0 {
        vec![(big_m / 2, 0.5)]
    } else {
        Vec::new()
    }
}

/// Quadrature check of Zak unitarity:
/// `|sum_j (1/T) sum_t |z(j, t/T)|^2 - ||f||^2|`. The integrand is a
/// trigonometric polynomial of degree at most the stored k-span, so the
/// uniform grid integrates it exactly once `T >= 2 span + 1`; the residual is
/// then pure floating-point noise.
pub fn zak_unitarity_residual(f: &Window, big_m: i64, grid_size: usize) -> Result<f64> {
    let required = 2 * stored_k_span(f, big_m) as usize + 1;
    if grid_size < required {
        return Err(GaborError::GridTooCoarse { t: grid_size, required });
    }
    let grid = zak_grid(f, big_m, grid_size);
    let mut mass = 0.0;
    for j in 0..big_m as usize {
        for t in 0..grid_size {
            mass += grid.sample(j, t).norm_sqr();
        }
    }
    Ok((mass / grid_size as f64 - f.norm_sq()).abs())
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn odd_pair() -> Window {
        Window::delta(1).sub(&Window::delta(-1))
    }

    #[test]
    fn zak_point_examples() {
        let d0 = Window::delta(0);
        for theta in [0.0, 0.3, 0.97] {
            assert_abs_diff_eq!((zak_point(&d0, 2, 0, theta) - 1.0).norm(), 0.0, epsilon = 1e-15);
            assert_abs_diff_eq!(zak_point(&d0, 2, 1, theta).norm(), 0.0, epsilon = 1e-15);
        }
        let s = 1.0 / 2f64.sqrt();
        let two_block = Window::from_real(0, &[s, 0.0, s]);
        assert_abs_diff_eq!(zak_point(&two_block, 2, 0, 0.5).norm(), 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(zak_point(&odd_pair(), 2, 1, 0.0).norm(), 0.0, epsilon = 1e-15);
    }

    #[test]
    fn zak_grid_examples() {
        let g = zak_grid(&Window::delta(0), 1, 4);
        for t in 0..4 {
            assert_abs_diff_eq!((g.sample(0, t) - 1.0).norm(), 0.0, epsilon = 1e-15);
        }
        let big_m = 3;
        let flat = Window::scaled_indicator(0, big_m, 1.0 / (big_m as f64).sqrt());
        let g = zak_grid(&flat, big_m, 5);
        for j in 0..big_m as usize {
            for t in 0..5 {
                assert_abs_diff_eq!(
                    (g.sample(j, t) - 1.0 / (big_m as f64).sqrt()).norm(),
                    0.0,
                    epsilon = 1e-15
                );
            }
        }
        let big_m = 2;
        let w = Window::delta(0).add(&Window::delta(big_m));
        let g = zak_grid(&w, big_m, 4);
        for t in 0..4 {
            let expected = Complex64::new(1.0, 0.0) + Complex64::new(0.0, 1.0).powu(t as u32);
            assert_abs_diff_eq!((g.sample(0, t) - expected).norm(), 0.0, epsilon = 1e-14);
        }
    }

    #[test]
    fn frame_check_examples() {
        let s = 1.0 / 2f64.sqrt();
        let sys = GaborSystem::on_full_line(2, 2, vec![Window::from_real(0, &[s, s])]).unwrap();
        let (a, b, frame) = frame_check_nm(&sys, 64).unwrap();
        assert_abs_diff_eq!(a, 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(b, 1.0, epsilon = 1e-12);
        assert!(frame);

        let sys = GaborSystem::on_full_line(2, 2, vec![odd_pair()]).unwrap();
        let (a, _, frame) = frame_check_nm(&sys, 64).unwrap();
        assert_abs_diff_eq!(a, 0.0, epsilon = 1e-15);
        assert!(!frame);

        // truncated Gaussian with odd M: tail below 1e-14 of the norm
        let gauss = Window::truncated_gaussian(1.0, 8);
        let sys = GaborSystem::on_full_line(3, 3, vec![gauss]).unwrap();
        let (a, b, frame) = frame_check_nm(&sys, default_grid_size(&sys)).unwrap();
        assert!(frame, "Gaussian system must be a frame; got A = {a}, B = {b}");
    }

    #[test]
    fn frame_check_rejects_wrong_shapes() {
        let sys = GaborSystem::on_full_line(2, 3, vec![Window::delta(0)]).unwrap();
        assert!(frame_check_nm(&sys, 16).is_err());
    }

    #[test]
    fn completeness_examples() {
        let both = GaborSystem::on_full_line(2, 2, vec![Window::delta(0), Window::delta(1)]).unwrap();
        assert!(completeness_check_nm(&both).unwrap());
        let half = GaborSystem::on_full_line(2, 2, vec![Window::delta(0)]).unwrap();
        assert!(!completeness_check_nm(&half).unwrap());
        let unit = GaborSystem::on_full_line(1, 1, vec![Window::delta(0)]).unwrap();
        assert!(completeness_check_nm(&unit).unwrap());
    }

    #[test]
    fn incomplete_systems_have_vanishing_lower_bound() {
        let half = GaborSystem::on_full_line(2, 2, vec![Window::delta(0)]).unwrap();
        assert!(!completeness_check_nm(&half).unwrap());
        let (a, _, frame) = frame_check_nm(&half, 64).unwrap();
        assert!(a <= DEFAULT_TOL && !frame);
    }

    #[test]
    fn common_zero_examples() {
        // g_0 covers residue 0 everywhere and has a zero at (1, 0); g_1 = d_1 covers it
        let g0 = Window::from_real(0, &[1.0, 1.0, 0.0, -1.0]);
        let covered =
            GaborSystem::on_full_line(2, 2, vec![g0.clone(), Window::delta(1)]).unwrap();
        assert!(common_zero_check(&covered, 16).unwrap());
        let alone = GaborSystem::on_full_line(2, 2, vec![odd_pair()]).unwrap();
        assert!(!common_zero_check(&alone, 16).unwrap());
        let unit = GaborSystem::on_full_line(1, 1, vec![Window::delta(0)]).unwrap();
        assert!(common_zero_check(&unit, 16).unwrap());
    }

    #[test]
    fn necessary_check_examples() {
        let example_b = crate::fixtures::example_b();
        assert!(necessary_check_nlm(&example_b, 1.0, 1.0, 64).unwrap());
        let mut windows = example_b.windows().to_vec();
        windows[2] = Window::zero();
        let gutted = GaborSystem::on_full_line(4, 12, windows).unwrap();
        assert!(!necessary_check_nlm(&gutted, 1.0, 1.0, 64).unwrap());
        let unit = GaborSystem::on_full_line(1, 1, vec![Window::delta(0)]).unwrap();
        assert!(necessary_check_nlm(&unit, 1.0, 1.0, 16).unwrap());
        let sys = GaborSystem::on_full_line(2, 3, vec![Window::delta(0)]).unwrap();
        assert!(necessary_check_nlm(&sys, 1.0, 1.0, 16).is_err());
    }

    #[test]
    fn symmetry_zero_examples() {
        let zeros = symmetry_zeros(&odd_pair(), 2);
        assert_eq!(zeros, vec![(0, 0.0), (0, 0.5), (1, 0.0)]);
        let even = Window::delta(1).add(&Window::delta(-1));
        assert_eq!(symmetry_zeros(&even, 2), vec![(1, 0.5)]);
        assert!(symmetry_zeros(&Window::from_real(0, &[1.0, 1.0]), 2).is_empty());
        // every reported location is an actual zero
        for (w, m) in [(odd_pair(), 2i64), (even.clone(), 2), (odd_pair(), 4), (even, 4)] {
            for (j, theta) in symmetry_zeros(&w, m) {
                assert!(
                    zak_point(&w, m, j, theta).norm() <= 1e-12,
                    "claimed zero at ({j}, {theta}) fails"
                );
            }
        }
    }

    #[test]
    fn unitarity_examples() {
        assert_abs_diff_eq!(zak_unitarity_residual(&Window::delta(0), 2, 8).unwrap(), 0.0, epsilon = 1e-15);
        let s = 1.0 / 2f64.sqrt();
        let w = Window::from_real(0, &[s, 0.0, s]);
        assert!(zak_unitarity_residual(&w, 2, 8).unwrap() <= 1e-12);
        let taps = Window::from_real(-4, &[0.3, -1.2, 0.0, 2.2, 0.7, -0.1, 0.9, 1.4, -2.0, 0.5]);
        assert!(zak_unitarity_residual(&taps, 3, 32).unwrap() <= 1e-12);
        assert!(matches!(
            zak_unitarity_residual(&taps, 1, 3),
            Err(GaborError::GridTooCoarse { .. })
        ));
    }

    #[test]
    fn quasiperiodicity() {
        let w = Window::new(
            -2,
            vec![
                Complex64::new(0.3, -0.4),
                Complex64::new(1.0, 0.2),
                Complex64::new(-0.7, 0.0),
                Complex64::new(0.0, 1.5),
                Complex64::new(0.8, -0.9),
            ],
        );
        for big_m in [1i64, 2, 3] {
            for j in -3..4 {
                for theta in [0.0, 0.21, 0.5, 0.83] {
                    let lhs = zak_point(&w, big_m, j + big_m, theta);
                    let rhs = phase(-theta) * zak_point(&w, big_m, j, theta);
                    assert_abs_diff_eq!((lhs - rhs).norm(), 0.0, epsilon = 1e-12);
                    let wrapped = zak_point(&w, big_m, j, theta + 1.0);
                    assert_abs_diff_eq!(
                        (wrapped - zak_point(&w, big_m, j, theta)).norm(),
                        0.0,
                        epsilon = 1e-12
                    );
                }
            }
        }
    }
}
