//! Explicit constructions: Parseval frames whenever `N <= LM`, orthonormal
//! bases at critical density `N = LM`, and completion of a Bessel pair to a
//! dual frame pair by appending auxiliary windows.

use crate::correlation::CorrelationTable;
use crate::error::{GaborError, Result};
use crate::periodic_set::PeriodicSet;
use crate::signal::{GaborSystem, Window};

/// Parseval frame on the full line with `L` windows, modulation order `M` and
/// translation step `N`, for any `N <= LM`.
///
/// The first `floor(N/M)` windows are `1/sqrt(M)`-scaled indicators of
/// consecutive full M-blocks of `{0, ..., N-1}`; one more window covers the
/// leftover partial block; any remaining windows are zero.
pub fn construct_parseval(l: usize, m: i64, n: i64) -> Result<GaborSystem> {
    if l == 0 || m < 1 || n < 1 {
        return Err(GaborError::ShapeViolation(format!(
            "L = {l}, M = {m}, N = {n} must be positive"
        )));
    }
    if n > l as i64 * m {
        return Err(GaborError::DensityViolation { n, lm: l as i64 * m });
    }
    let scale = 1.0 / (m as f64).sqrt();
    let full_blocks = n / m;
    let mut windows = Vec::with_capacity(l);
    for block in 0..full_blocks {
        windows.push(Window::scaled_indicator(block * m, m, scale));
    }
    let leftover = n - full_blocks * m;
    if leftover > 0 {
        windows.push(Window::scaled_indicator(full_blocks * m, leftover, scale));
    }
    while windows.len() < l {
        windows.push(Window::zero());
    }
    GaborSystem::new(m, n, PeriodicSet::full_line(), windows)
}

/// Orthonormal basis on the full line: requires the critical density
/// `N = LM` and tiles `{0, ..., N-1}` by `L` full M-blocks.
pub fn construct_orthonormal(l: usize, m: i64, n: i64) -> Result<GaborSystem> {
    if n != l as i64 * m {
        return Err(GaborError::ShapeViolation(format!(
            "orthonormal basis needs N = LM; got N = {n}, LM = {}",
            l as i64 * m
        )));
    }
    construct_parseval(l, m, n)
}

/// Exact-arithmetic Parseval certificate for indicator-built systems.
///
/// Float comparison cannot certify `G_0 = 1/M` when `1/sqrt(M)` is not
/// exactly representable, so this check works symbolically instead: every
/// nonzero sample must be bit-identical to the canonical `1/sqrt(M)` value
/// (its square is then exactly `1/M` by intent), every residue class mod N
/// must be covered by exactly one sample across all windows and translates,
/// and no window may contain two samples a nonzero multiple of M apart
/// (which kills all off-diagonal correlations). All three conditions are
/// decided in integer arithmetic.
pub fn exact_parseval_certificate(sys: &GaborSystem) -> bool {
    if !sys.set().is_full_line() {
        return false;
    }
    let big_m = sys.modulation_order();
    let step = sys.translation_step();
    let scale = 1.0 / (big_m as f64).sqrt();
    let mut coverage = vec![0i64; step as usize];
    for w in sys.windows() {
        let mut support = Vec::new();
        for (j, v) in w.samples() {
            if v == num_complex::Complex64::ZERO {
                continue;
            }
            if v.re != scale || v.im != 0.0 {
                return false;
            }
            support.push(j);
        }
        for (i, &p) in support.iter().enumerate() {
            coverage[p.rem_euclid(step) as usize] += 1;
            for &q in &support[i + 1..] {
                if (q - p) % big_m == 0 {
                    return false;
                }
            }
        }
    }
    coverage.iter().all(|&c| c == 1)
}

/// Completes two Bessel systems `g`, `h` with equal parameters on the full
/// line to a dual frame pair by appending `K = ceil(N/M)` windows each:
/// the auxiliary Parseval windows on the `g` side, and their image under
/// `I - U_h theta_g` on the `h` side.
pub fn dual_completion(
    sys_g: &GaborSystem,
    sys_h: &GaborSystem,
) -> Result<(GaborSystem, GaborSystem)> {
    if !sys_g.same_parameters(sys_h) {
        return Err(GaborError::ParameterMismatch(
            "dual completion requires equal L, M, N and set".into(),
        ));
    }
    if !sys_g.set().is_full_line() {
        return Err(GaborError::UnsupportedSet(
            "dual completion is defined on the full line".into(),
        ));
    }
    let big_m = sys_g.modulation_order();
    let step = sys_g.translation_step();
    let k = (step + big_m - 1) / big_m;
    let auxiliary = construct_parseval(k as usize, big_m, step)?;
    // mixed operator f -> sum <f, g-atoms> h-atoms
    let mixed = CorrelationTable::cross(sys_g, sys_h)?;

    let mut extended_g = sys_g.windows().to_vec();
    let mut extended_h = sys_h.windows().to_vec();
    for aux in auxiliary.windows() {
        extended_g.push(aux.clone());
        extended_h.push(aux.sub(&mixed.apply_operator(aux)));
    }
    let set = sys_g.set().clone();
    Ok((
        GaborSystem::new(big_m, step, set.clone(), extended_g)?,
        GaborSystem::new(big_m, step, set, extended_h)?,
    ))
}
