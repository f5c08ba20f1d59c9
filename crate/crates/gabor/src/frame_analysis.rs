//! Frame, Bessel, Parseval, Riesz, orthonormal and dual verdicts computed
//! from correlation tables, plus the banded frame-operator machinery and a
//! randomized Rayleigh-quotient oracle.

use num_complex::Complex64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::correlation::CorrelationTable;
use crate::error::{GaborError, Result};
use crate::signal::{GaborSystem, Window};

/// Default tolerance for equality-type checks. Sums here are short finite
/// sums in double precision, so this leaves a wide margin.
pub const DEFAULT_TOL: f64 = 1e-10;

/// Aggregated verdicts for one system.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FrameReport {
    pub bessel_bound: Option<f64>,
    pub lower_bound: Option<f64>,
    pub is_bessel: bool,
    /// Frame verdict by the sufficient bound test. `false` means the test was
    /// inconclusive, not that the system is no frame.
    pub is_frame_sufficient: bool,
    pub is_parseval: bool,
    pub is_riesz: bool,
    pub is_orthonormal: bool,
    pub density_ok: bool,
    pub card_set_period: i64,
    pub window_modulation_product: i64,
}

/// Sufficient frame bounds from the banded table:
/// `B = M max_j sum_k |G_k(j)|`, `A = M min_j (G_0(j) - sum_{k!=0} |G_k(j)|)`.
///
/// `is_frame = A > 0` is sufficient only; `A <= 0` is inconclusive.
pub fn sufficient_bounds(t: &CorrelationTable) -> (f64, f64, bool, bool) {
    let big_m = t.modulation_order() as f64;
    let mut a = f64::INFINITY;
    let mut b = f64::NEG_INFINITY;
    for j in t.row_indices() {
        let diag = t.entry(j, 0).re;
        let mut abs_sum = 0.0;
        let mut off_sum = 0.0;
        for k in -t.band_radius()..=t.band_radius() {
            let mag = t.entry(j, k).norm();
            abs_sum += mag;
            if k != 0 {
                off_sum += mag;
            }
        }
        a = a.min(big_m * (diag - off_sum));
        b = b.max(big_m * abs_sum);
    }
    (a, b, b.is_finite(), a > 0.0)
}

/// Necessary diagonal condition for candidate frame bounds `(A, B)`:
/// `A/M <= G_0(j) <= B/M` on every residue. `false` refutes the candidates.
pub fn necessary_diagonal_check(t: &CorrelationTable, a: f64, b: f64) -> bool {
    let big_m = t.modulation_order() as f64;
    t.row_indices().all(|j| {
        let d = t.entry(j, 0).re;
        a / big_m <= d + DEFAULT_TOL && d <= b / big_m + DEFAULT_TOL
    })
}

/// Parseval characterization: diagonal `1/M`, off-diagonal zero.
pub fn parseval_check(t: &CorrelationTable, tol: f64) -> bool {
    diagonal_identity_check(t, tol)
}

/// Dual characterization on a cross table of two Bessel systems: identical in
/// form to the Parseval check, applied to the mixed table.
pub fn dual_check(tc: &CorrelationTable, tol: f64) -> bool {
    diagonal_identity_check(tc, tol)
}

fn diagonal_identity_check(t: &CorrelationTable, tol: f64) -> bool {
    let target = 1.0 / t.modulation_order() as f64;
    t.row_indices().all(|j| {
        (t.entry(j, 0) - target).norm() <= tol
            && (-t.band_radius()..=t.band_radius())
                .filter(|&k| k != 0)
                .all(|k| t.entry(j, k).norm() <= tol)
    })
}

/// Density condition `card(S_N) <= LM` and the Riesz dichotomy
/// `frame + card(S_N) = LM`. The Riesz verdict presumes an affirmative
/// frame verdict; density alone never implies Riesz.
pub fn density_and_riesz(sys: &GaborSystem, is_frame: bool) -> (bool, bool) {
    let card = sys.set().truncation_cardinality(sys.translation_step());
    let lm = sys.window_count() as i64 * sys.modulation_order();
    (card <= lm, is_frame && card == lm)
}

/// Orthonormal-basis check via two equivalent forms: Parseval + density
/// `card(S_N) = LM`, cross-validated against Parseval + unit window norms.
/// The forms disagreeing signals a bug in the caller's inputs.
pub fn orthonormal_check(sys: &GaborSystem, t: &CorrelationTable, tol: f64) -> Result<bool> {
    let parseval = parseval_check(t, tol);
    let card = sys.set().truncation_cardinality(sys.translation_step());
    let lm = sys.window_count() as i64 * sys.modulation_order();
    let by_density = parseval && card == lm;
    let by_norms = parseval
        && sys.windows().iter().all(|w| (w.norm() - 1.0).abs() <= tol.max(1e-12));
    if by_density != by_norms {
        return Err(GaborError::FormDisagreement(format!(
            "density form says {by_density}, unit-norm form says {by_norms}"
        )));
    }
    Ok(by_density)
}

/// Optimal-form frame bounds in the narrow-support regime
/// (`|supp(g_l)| < M` for every window): `A = M min_j G_0(j)`,
/// `B = M max_j G_0(j)`; the frame inequality is then an equivalence.
pub fn narrow_support_frame(sys: &GaborSystem, t: &CorrelationTable) -> Result<(f64, f64, bool)> {
    require_narrow_support(sys)?;
    let big_m = t.modulation_order() as f64;
    let mut a = f64::INFINITY;
    let mut b = f64::NEG_INFINITY;
    for j in t.row_indices() {
        let d = t.entry(j, 0).re;
        a = a.min(big_m * d);
        b = b.max(big_m * d);
    }
    Ok((a, b, a > 0.0))
}

fn require_narrow_support(sys: &GaborSystem) -> Result<()> {
    for (index, w) in sys.windows().iter().enumerate() {
        let width = w.support_width();
        if !w.is_zero() && width >= sys.modulation_order() {
            return Err(GaborError::SupportTooWide { index, width, m: sys.modulation_order() });
        }
    }
    Ok(())
}

/// Applies the inverse frame operator in the narrow-support regime:
/// pointwise division by `M G_0(j)`.
pub fn apply_inverse_frame_operator_narrow(t: &CorrelationTable, f: &Window) -> Result<Window> {
    let big_m = t.modulation_order() as f64;
    for j in t.row_indices() {
        let d = t.entry(j, 0).re;
        if d <= 0.0 {
            return Err(GaborError::SingularDiagonal { j, value: d });
        }
    }
    let Some((lo, hi)) = f.support() else {
        return Ok(Window::zero());
    };
    let values = (lo..=hi)
        .map(|j| {
            let d = t.entry(j, 0).re;
            if d > 0.0 {
                f.value(j) / (big_m * d)
            } else {
                Complex64::ZERO
            }
        })
        .collect();
    Ok(Window::new(lo, values))
}

/// Perturbation bound: for a frame `g` with bounds `(A, B)` and a candidate
/// family `h`, computes `R = M max_j sum_k |G^{d,d}_k(j)|` of the difference
/// system `d = g - h`. When `R < A` the perturbed system is a frame with
/// bounds `(A(1 - sqrt(R/A))^2, B(1 + sqrt(R/B))^2)`; otherwise the test is
/// inconclusive and `None` is returned.
pub fn perturbation_bound(
    sys_g: &GaborSystem,
    sys_h: &GaborSystem,
    a: f64,
    b: f64,
) -> Result<Option<(f64, f64, f64)>> {
    if !sys_g.same_parameters(sys_h) {
        return Err(GaborError::ParameterMismatch("perturbation requires equal parameters".into()));
    }
    let diffs: Vec<Window> = sys_g
        .windows()
        .iter()
        .zip(sys_h.windows())
        .map(|(g, h)| g.sub(h))
        .collect();
    let diff_sys = GaborSystem::new(
        sys_g.modulation_order(),
        sys_g.translation_step(),
        sys_g.set().clone(),
        diffs,
    )?;
    let t = CorrelationTable::auto(&diff_sys);
    let big_m = t.modulation_order() as f64;
    let r = t
        .row_indices()
        .map(|j| {
            big_m
                * (-t.band_radius()..=t.band_radius())
                    .map(|k| t.entry(j, k).norm())
                    .sum::<f64>()
        })
        .fold(0.0f64, f64::max);
    if r >= a {
        return Ok(None);
    }
    let a_new = a * (1.0 - (r / a).sqrt()).powi(2);
    let b_new = b * (1.0 + (r / b).sqrt()).powi(2);
    Ok(Some((a_new, b_new, r)))
}

/// Randomized Rayleigh-quotient oracle: min and max of
/// `sum |<f, atom>|^2 / ||f||^2` over random finitely supported signals with
/// support in the set intersected with `[-radius, radius]`. Deterministic for
/// a fixed seed.
pub fn randomized_rayleigh_bounds(
    sys: &GaborSystem,
    trials: usize,
    support_radius: i64,
    seed: u64,
) -> (f64, f64) {
    assert!(trials >= 1);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let candidates = sys.set().members_in(-support_radius, support_radius);
    assert!(!candidates.is_empty(), "no set members within the support radius");
    let mut min_ratio = f64::INFINITY;
    let mut max_ratio = f64::NEG_INFINITY;
    for _ in 0..trials {
        let f = random_signal(&mut rng, &candidates);
        let norm_sq = f.norm_sq();
        if norm_sq == 0.0 {
            continue;
        }
        let ratio = sys.analysis_energy(&f) / norm_sq;
        min_ratio = min_ratio.min(ratio);
        max_ratio = max_ratio.max(ratio);
    }
    (min_ratio, max_ratio)
}

/// Random signal on a candidate index list: a uniformly chosen subset of
/// points with complex standard-normal amplitudes.
pub(crate) fn random_signal(rng: &mut impl Rng, candidates: &[i64]) -> Window {
    let count = rng.gen_range(1..=candidates.len().min(8));
    let mut picked: Vec<i64> = Vec::with_capacity(count);
    while picked.len() < count {
        let j = candidates[rng.gen_range(0..candidates.len())];
        if !picked.contains(&j) {
            picked.push(j);
        }
    }
    picked.sort_unstable();
    let lo = picked[0];
    let hi = picked[picked.len() - 1];
    let values = (lo..=hi)
        .map(|j| {
            if picked.contains(&j) {
                Complex64::new(standard_normal(rng), standard_normal(rng))
            } else {
                Complex64::ZERO
            }
        })
        .collect();
    Window::new(lo, values)
}

/// Box-Muller standard normal from the given generator.
fn standard_normal(rng: &mut impl Rng) -> f64 {
    let u1: f64 = rng.gen_range(f64::EPSILON..1.0);
    let u2: f64 = rng.gen();
    (-2.0 * u1.ln()).sqrt() * (std::f64::consts::TAU * u2).cos()
}

/// Full report combining the table-based verdicts for one system.
pub fn analyze(sys: &GaborSystem, tol: f64) -> Result<FrameReport> {
    let t = CorrelationTable::auto(sys);
    let (a, b, is_bessel, is_frame) = sufficient_bounds(&t);
    let is_parseval = parseval_check(&t, tol);
    let (density_ok, is_riesz) = density_and_riesz(sys, is_frame || is_parseval);
    let is_orthonormal = orthonormal_check(sys, &t, tol)?;
    Ok(FrameReport {
        bessel_bound: is_bessel.then_some(b),
        lower_bound: is_frame.then_some(a),
        is_bessel,
        is_frame_sufficient: is_frame,
        is_parseval,
        is_riesz,
        is_orthonormal,
        density_ok,
        card_set_period: sys.set().truncation_cardinality(sys.translation_step()),
        window_modulation_product: sys.window_count() as i64 * sys.modulation_order(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{example_a, example_b, wide_window_system};
    use approx::assert_abs_diff_eq;
    use num_complex::Complex64;

    #[test]
    fn example_a_bounds_are_unity() {
        let t = CorrelationTable::auto(&example_a());
        let (a, b, bessel, frame) = sufficient_bounds(&t);
        assert_abs_diff_eq!(a, 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(b, 1.0, epsilon = 1e-12);
        assert!(bessel && frame);
    }

    #[test]
    fn delta_system_bounds() {
        let sys = GaborSystem::on_full_line(1, 1, vec![Window::delta(0)]).unwrap();
        let t = CorrelationTable::auto(&sys);
        let (a, b, _, frame) = sufficient_bounds(&t);
        assert_abs_diff_eq!(a, 1.0, epsilon = 1e-15);
        assert_abs_diff_eq!(b, 1.0, epsilon = 1e-15);
        assert!(frame);
    }

    #[test]
    fn wide_window_test_is_inconclusive() {
        let t = CorrelationTable::auto(&wide_window_system());
        let (a, b, bessel, frame) = sufficient_bounds(&t);
        assert_abs_diff_eq!(a, 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(b, 8.0, epsilon = 1e-15);
        assert!(bessel);
        assert!(!frame);
    }

    #[test]
    fn diagonal_check_examples() {
        let t = CorrelationTable::auto(&example_a());
        assert!(necessary_diagonal_check(&t, 1.0, 1.0));
        assert!(!necessary_diagonal_check(&t, 1.5, 2.0));
        let d = CorrelationTable::auto(
            &GaborSystem::on_full_line(1, 1, vec![Window::delta(0)]).unwrap(),
        );
        assert!(necessary_diagonal_check(&d, 1.0, 1.0));
    }

    #[test]
    fn parseval_examples() {
        // example A's diagonal is (1/sqrt 2)^2, one ulp off 1/2
        assert!(parseval_check(&CorrelationTable::auto(&example_a()), 1e-15));
        // example B's samples are exactly representable: bit-exact match
        assert!(parseval_check(&CorrelationTable::auto(&example_b()), 0.0));
        let s = 1.0 / 2f64.sqrt();
        let doubled = GaborSystem::on_full_line(
            2,
            3,
            vec![Window::from_real(0, &[s, s]), Window::from_real(2, &[2.0 * s])],
        )
        .unwrap();
        assert!(!parseval_check(&CorrelationTable::auto(&doubled), 1e-10));
    }

    #[test]
    fn dual_examples() {
        let a = example_a();
        let self_dual = CorrelationTable::cross(&a, &a).unwrap();
        assert!(dual_check(&self_dual, 1e-10));
        let deltas = GaborSystem::on_full_line(1, 1, vec![Window::delta(0)]).unwrap();
        assert!(dual_check(&CorrelationTable::cross(&deltas, &deltas).unwrap(), 1e-10));
        let doubled = GaborSystem::new(
            a.modulation_order(),
            a.translation_step(),
            a.set().clone(),
            a.windows().iter().map(|w| w.scale(Complex64::new(2.0, 0.0))).collect(),
        )
        .unwrap();
        assert!(!dual_check(&CorrelationTable::cross(&a, &doubled).unwrap(), 1e-10));
    }

    #[test]
    fn density_and_riesz_examples() {
        assert_eq!(density_and_riesz(&example_a(), true), (true, false));
        assert_eq!(density_and_riesz(&example_b(), true), (true, true));
        let sparse = GaborSystem::on_full_line(2, 3, vec![Window::delta(0)]).unwrap();
        let (density_ok, _) = density_and_riesz(&sparse, false);
        assert!(!density_ok);
    }

    #[test]
    fn orthonormal_examples() {
        let b = example_b();
        assert!(orthonormal_check(&b, &CorrelationTable::auto(&b), 1e-10).unwrap());
        let a = example_a();
        assert!(!orthonormal_check(&a, &CorrelationTable::auto(&a), 1e-10).unwrap());
        let d = GaborSystem::on_full_line(1, 1, vec![Window::delta(0)]).unwrap();
        assert!(orthonormal_check(&d, &CorrelationTable::auto(&d), 1e-10).unwrap());
    }

    #[test]
    fn narrow_support_examples() {
        let a = example_a();
        let (lo, hi, frame) = narrow_support_frame(&a, &CorrelationTable::auto(&a)).unwrap();
        assert_abs_diff_eq!(lo, 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(hi, 1.0, epsilon = 1e-12);
        assert!(frame);

        let c = 2.0;
        let s = 1.0 / 2f64.sqrt();
        let scaled = GaborSystem::on_full_line(
            2,
            3,
            vec![Window::from_real(0, &[c * s, c * s]), Window::from_real(2, &[s])],
        )
        .unwrap();
        let (lo, hi, frame) = narrow_support_frame(&scaled, &CorrelationTable::auto(&scaled)).unwrap();
        assert_abs_diff_eq!(lo, 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(hi, c * c, epsilon = 1e-12);
        assert!(frame);

        let gap = GaborSystem::on_full_line(2, 2, vec![Window::delta(0)]).unwrap();
        let (lo, _, frame) = narrow_support_frame(&gap, &CorrelationTable::auto(&gap)).unwrap();
        assert_abs_diff_eq!(lo, 0.0, epsilon = 1e-15);
        assert!(!frame);

        assert!(narrow_support_frame(&wide_window_system(), &CorrelationTable::auto(&wide_window_system())).is_err());
    }

    #[test]
    fn frame_operator_is_identity_for_parseval() {
        let t = CorrelationTable::auto(&example_a());
        let f = Window::new(
            -1,
            vec![Complex64::new(0.5, -0.2), Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.3)],
        );
        let sf = t.apply_operator(&f);
        for j in -3..5 {
            assert_abs_diff_eq!((sf.value(j) - f.value(j)).norm(), 0.0, epsilon = 1e-12);
        }
        assert!(t.apply_operator(&Window::zero()).is_zero());
    }

    #[test]
    fn frame_operator_matches_synthesis_of_analysis() {
        let sys = wide_window_system();
        let t = CorrelationTable::auto(&sys);
        let f = Window::delta(0);
        let direct = sys.synthesize(&sys.analysis_coefficients(&f)).unwrap();
        let banded = t.apply_operator(&f);
        for j in -6..8 {
            assert_abs_diff_eq!((banded.value(j) - direct.value(j)).norm(), 0.0, epsilon = 1e-10);
        }
    }

    #[test]
    fn inverse_operator_examples() {
        let a = example_a();
        let t = CorrelationTable::auto(&a);
        let f = Window::from_real(-2, &[0.3, 0.0, -1.0, 2.0]);
        let inv = apply_inverse_frame_operator_narrow(&t, &f).unwrap();
        for j in -4..4 {
            assert_abs_diff_eq!((inv.value(j) - f.value(j)).norm(), 0.0, epsilon = 1e-12);
        }

        let c = 2.0;
        let s = 1.0 / 2f64.sqrt();
        let scaled = GaborSystem::on_full_line(
            2,
            3,
            vec![Window::from_real(0, &[c * s, c * s]), Window::from_real(2, &[s])],
        )
        .unwrap();
        let t2 = CorrelationTable::auto(&scaled);
        let inv = apply_inverse_frame_operator_narrow(&t2, &Window::delta(0)).unwrap();
        assert_abs_diff_eq!(inv.value(0).re, 0.25, epsilon = 1e-12);

        let gap = GaborSystem::on_full_line(2, 2, vec![Window::delta(0)]).unwrap();
        assert!(apply_inverse_frame_operator_narrow(
            &CorrelationTable::auto(&gap),
            &Window::delta(0)
        )
        .is_err());
    }

    #[test]
    fn perturbation_examples() {
        let a = example_a();
        let same = perturbation_bound(&a, &a, 1.0, 1.0).unwrap().unwrap();
        assert_abs_diff_eq!(same.2, 0.0, epsilon = 1e-15);
        assert_abs_diff_eq!(same.0, 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(same.1, 1.0, epsilon = 1e-12);

        let eps = 0.1;
        let shrunk = GaborSystem::new(
            a.modulation_order(),
            a.translation_step(),
            a.set().clone(),
            a.windows()
                .iter()
                .map(|w| w.scale(Complex64::new(1.0 - eps, 0.0)))
                .collect(),
        )
        .unwrap();
        let (a_new, b_new, r) = perturbation_bound(&a, &shrunk, 1.0, 1.0).unwrap().unwrap();
        assert_abs_diff_eq!(r, eps * eps, epsilon = 1e-12);
        assert_abs_diff_eq!(a_new, 0.81, epsilon = 1e-12);
        assert_abs_diff_eq!(b_new, 1.21, epsilon = 1e-12);

        let flipped = GaborSystem::new(
            a.modulation_order(),
            a.translation_step(),
            a.set().clone(),
            a.windows()
                .iter()
                .map(|w| w.scale(Complex64::new(-1.0, 0.0)))
                .collect(),
        )
        .unwrap();
        // difference 2g has R = 4 >= A: inconclusive
        assert!(perturbation_bound(&a, &flipped, 1.0, 1.0).unwrap().is_none());
    }

    #[test]
    fn rayleigh_oracle_examples() {
        let (lo, hi) = randomized_rayleigh_bounds(&example_a(), 50, 6, 7);
        assert_abs_diff_eq!(lo, 1.0, epsilon = 1e-10);
        assert_abs_diff_eq!(hi, 1.0, epsilon = 1e-10);

        let d = GaborSystem::on_full_line(1, 1, vec![Window::delta(0)]).unwrap();
        let (lo, hi) = randomized_rayleigh_bounds(&d, 20, 4, 1);
        assert_abs_diff_eq!(lo, 1.0, epsilon = 1e-10);
        assert_abs_diff_eq!(hi, 1.0, epsilon = 1e-10);

        let gap = GaborSystem::on_full_line(2, 2, vec![Window::delta(0)]).unwrap();
        let (lo, _) = randomized_rayleigh_bounds(&gap, 400, 4, 3);
        assert!(lo < 1e-6, "odd-supported signals must drive the ratio to zero, got {lo}");
    }

    #[test]
    fn report_for_example_a() {
        let r = analyze(&example_a(), 1e-10).unwrap();
        assert!(r.is_frame_sufficient && r.is_parseval && r.density_ok);
        assert!(!r.is_riesz && !r.is_orthonormal);
        assert_eq!(r.card_set_period, 3);
        assert_eq!(r.window_modulation_product, 4);
    }
}
