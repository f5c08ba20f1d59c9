//! Shared random generators for the integration test suites.

use gabor_frames::{GaborSystem, Window};
use num_complex::Complex64;
use rand::Rng;

/// Random nonzero window with support inside `[-radius, radius]`.
pub fn random_window(rng: &mut impl Rng, radius: i64, max_len: usize) -> Window {
    loop {
        let len = rng.gen_range(1..=max_len);
        let offset = rng.gen_range(-radius..=radius - len as i64 + 1);
        let values: Vec<Complex64> = (0..len)
            .map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
            .collect();
        let w = Window::new(offset, values);
        if !w.is_zero() {
            return w;
        }
    }
}

/// Random full-line system with small parameters.
pub fn random_system(rng: &mut impl Rng) -> GaborSystem {
    let l = rng.gen_range(1..=3);
    let m = rng.gen_range(1..=4);
    let n = rng.gen_range(1..=5);
    let windows = (0..l).map(|_| random_window(rng, 6, 5)).collect();
    GaborSystem::on_full_line(m, n, windows).expect("small full-line system")
}

/// Random finitely supported test signal.
pub fn random_signal(rng: &mut impl Rng, radius: i64) -> Window {
    random_window(rng, radius, 7)
}

/// Largest pointwise deviation of two windows over their joint support plus
/// a margin.
pub fn max_pointwise_gap(a: &Window, b: &Window, margin: i64) -> f64 {
    let bounds = |w: &Window| w.support().unwrap_or((0, 0));
    let (a_lo, a_hi) = bounds(a);
    let (b_lo, b_hi) = bounds(b);
    let lo = a_lo.min(b_lo) - margin;
    let hi = a_hi.max(b_hi) + margin;
    (lo..=hi)
        .map(|j| (a.value(j) - b.value(j)).norm())
        .fold(0.0, f64::max)
}
