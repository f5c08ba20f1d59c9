//! Finite periodized model of a Gabor system on `Z_P` and the K-frame
//! machinery: spectral frame bounds, Douglas range checks, K-frame verdicts,
//! mixed operators `S_{h,g}`, minimal-norm K-duals and K-minimality.
//!
//! The model is a computable witness for the corresponding statements on the
//! bi-infinite line; verdicts are always relative to the chosen period `P`.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{GaborError, Result};
use crate::signal::{div_ceil, div_floor, phase, AtomIndex, GaborSystem};

/// Numerical-rank threshold relative to the largest singular value.
pub const RANK_TOL: f64 = 1e-9;

const VERIFY_SEED: u64 = 0x6b64;

/// Periodized synthesis matrix of a Gabor system on `Z_P`.
#[derive(Debug, Clone)]
pub struct FiniteModel {
    period: i64,
    modulation_order: i64,
    translation_step: i64,
    window_count: usize,
    /// Indices of set members inside one model period.
    set_rows: Vec<usize>,
    /// `P x (L * M * P/N)`; columns are periodized atoms, ordered with the
    /// window index outermost, then the translation, then the modulation.
    synthesis: DMatrix<Complex64>,
}

/// Bounded operator on the model space, given as a dense `P x P` matrix.
#[derive(Debug, Clone)]
pub struct KOperator {
    pub matrix: DMatrix<Complex64>,
}

impl KOperator {
    pub fn identity(p: usize) -> Self {
        Self { matrix: DMatrix::identity(p, p) }
    }

    pub fn zero(p: usize) -> Self {
        Self { matrix: DMatrix::zeros(p, p) }
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.iter().all(|v| *v == Complex64::ZERO)
    }
}

/// Verdict of [`kframe_verdict`].
#[derive(Debug, Clone)]
pub struct KFrameVerdict {
    pub is_kframe: bool,
    /// Optimal lower bound; absent when the range check fails or `K = 0`.
    pub a_opt: Option<f64>,
    pub b: f64,
    /// `K = 0` makes every lower bound valid; flagged instead of `A = inf`.
    pub zero_operator: bool,
}

impl FiniteModel {
    pub fn period(&self) -> i64 {
        self.period
    }

    pub fn modulation_order(&self) -> i64 {
        self.modulation_order
    }

    pub fn translation_step(&self) -> i64 {
        self.translation_step
    }

    pub fn window_count(&self) -> usize {
        self.window_count
    }

    pub fn atom_count(&self) -> usize {
        self.synthesis.ncols()
    }

    pub fn synthesis(&self) -> &DMatrix<Complex64> {
        &self.synthesis
    }

    pub fn set_rows(&self) -> &[usize] {
        &self.set_rows
    }

    /// Atom index of one synthesis column (window outermost, then
    /// translation, then modulation).
    pub fn column_atom(&self, column: usize) -> AtomIndex {
        let m_count = self.modulation_order as usize;
        let n_count = (self.period / self.translation_step) as usize;
        let m = column % m_count;
        let n = (column / m_count) % n_count;
        let l = column / (m_count * n_count);
        AtomIndex { l, n: n as i64, m: m as i64 }
    }

    /// `S = U U^H`, the model frame operator.
    pub fn frame_operator(&self) -> DMatrix<Complex64> {
        &self.synthesis * self.synthesis.adjoint()
    }

    /// Model analysis coefficients `U^H x`.
    pub fn analysis(&self, x: &DVector<Complex64>) -> DVector<Complex64> {
        self.synthesis.adjoint() * x
    }
}

fn lcm(a: i64, b: i64) -> i64 {
    a / gcd(a, b) * b
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 { a } else { gcd(b, a % b) }
}

/// Builds the periodized model with `P = periods * lcm(M, N, set period)`.
pub fn build_model(sys: &GaborSystem, periods: i64) -> FiniteModel {
    assert!(periods >= 1);
    let big_m = sys.modulation_order();
    let step = sys.translation_step();
    let p = periods * lcm(lcm(big_m, step), sys.set().period());
    let n_count = p / step;
    let atom_count = sys.window_count() * n_count as usize * big_m as usize;
    let mut synthesis = DMatrix::zeros(p as usize, atom_count);
    let mut column = 0;
    for g in sys.windows() {
        for n in 0..n_count {
            for m in 0..big_m {
                for j in 0..p {
                    // periodization sum_r g(j - nN + rP), with the modulation
                    // phase P-periodic because M divides P
                    let mut acc = Complex64::ZERO;
                    if let Some((lo, hi)) = g.support() {
                        let base = j - n * step;
                        for r in div_ceil(lo - base, p)..=div_floor(hi - base, p) {
                            acc += g.value(base + r * p);
                        }
                    }
                    synthesis[(j as usize, column)] =
                        acc * phase(m as f64 / big_m as f64 * j as f64);
                }
                column += 1;
            }
        }
    }
    let set_rows = (0..p)
        .filter(|&j| sys.set().contains(j))
        .map(|j| j as usize)
        .collect();
    FiniteModel {
        period: p,
        modulation_order: big_m,
        translation_step: step,
        window_count: sys.window_count(),
        set_rows,
        synthesis,
    }
}

fn hermitian_eigenvalues(matrix: &DMatrix<Complex64>) -> Vec<f64> {
    matrix.clone().symmetric_eigen().eigenvalues.iter().copied().collect()
}

/// Extreme eigenvalues of `U U^H` restricted to the rows of the index set.
pub fn spectral_frame_bounds(model: &FiniteModel) -> (f64, f64) {
    let s = model.frame_operator();
    let rows = &model.set_rows;
    let restricted = DMatrix::from_fn(rows.len(), rows.len(), |i, j| s[(rows[i], rows[j])]);
    let eigen = hermitian_eigenvalues(&restricted);
    let lo = eigen.iter().copied().fold(f64::INFINITY, f64::min);
    let hi = eigen.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    (lo.max(0.0), hi.max(0.0))
}

fn check_dimensions(model: &FiniteModel, k: &KOperator) -> Result<()> {
    let p = model.period as usize;
    if k.matrix.nrows() != p || k.matrix.ncols() != p {
        return Err(GaborError::DimensionMismatch(format!(
            "operator is {}x{}, model period is {p}",
            k.matrix.nrows(),
            k.matrix.ncols()
        )));
    }
    Ok(())
}

/// Orthogonal projector onto `range(U)` via a rank-revealing SVD.
fn range_projector(u: &DMatrix<Complex64>, tol: f64) -> DMatrix<Complex64> {
    let svd = u.clone().svd(true, false);
    let u_left = svd.u.expect("left singular vectors requested");
    let sigma_max = svd.singular_values.iter().copied().fold(0.0f64, f64::max);
    let threshold = tol * sigma_max.max(1.0);
    let rank_cols: Vec<usize> = svd
        .singular_values
        .iter()
        .enumerate()
        .filter(|(_, &s)| s > threshold)
        .map(|(i, _)| i)
        .collect();
    let basis = u_left.select_columns(&rank_cols);
    &basis * basis.adjoint()
}

/// Douglas criterion `range(K) subset range(U)`: residual
/// `||(I - Pi_U) K|| <= tol`, scaled by `max(1, ||K||)`.
pub fn douglas_range_check(model: &FiniteModel, k: &KOperator, tol: f64) -> Result<bool> {
    check_dimensions(model, k)?;
    let projector = range_projector(&model.synthesis, RANK_TOL);
    let residual = &k.matrix - &projector * &k.matrix;
    Ok(residual.norm() <= tol.max(RANK_TOL) * k.matrix.norm().max(1.0))
}

/// Moore-Penrose pseudoinverse of a Hermitian PSD matrix via its
/// eigendecomposition, zeroing eigenvalues below `tol * lambda_max`.
fn hermitian_pinv(matrix: &DMatrix<Complex64>, tol: f64) -> DMatrix<Complex64> {
    let eigen = matrix.clone().symmetric_eigen();
    let lambda_max = eigen.eigenvalues.iter().copied().fold(0.0f64, f64::max);
    let threshold = tol * lambda_max.max(1.0);
    let q = &eigen.eigenvectors;
    let inv = DMatrix::from_fn(q.ncols(), q.ncols(), |i, j| {
        if i == j && eigen.eigenvalues[i] > threshold {
            Complex64::new(1.0 / eigen.eigenvalues[i], 0.0)
        } else {
            Complex64::ZERO
        }
    });
    q * inv * q.adjoint()
}

/// K-frame verdict: the range inclusion decides the property; the upper bound
/// is the top eigenvalue of `U U^H`; the optimal lower bound is
/// `1 / lambda_max(K^H (U U^H)^+ K)`.
pub fn kframe_verdict(model: &FiniteModel, k: &KOperator, tol: f64) -> Result<KFrameVerdict> {
    check_dimensions(model, k)?;
    let s = model.frame_operator();
    let b = hermitian_eigenvalues(&s).into_iter().fold(0.0f64, f64::max);
    if k.is_zero() {
        return Ok(KFrameVerdict { is_kframe: true, a_opt: None, b, zero_operator: true });
    }
    let is_kframe = douglas_range_check(model, k, tol)?;
    if !is_kframe {
        return Ok(KFrameVerdict { is_kframe: false, a_opt: None, b, zero_operator: false });
    }
    let quad = k.matrix.adjoint() * hermitian_pinv(&s, RANK_TOL) * &k.matrix;
    let lambda = hermitian_eigenvalues(&quad).into_iter().fold(0.0f64, f64::max);
    let a_opt = (lambda > 0.0).then(|| 1.0 / lambda);
    Ok(KFrameVerdict { is_kframe: true, a_opt, b, zero_operator: false })
}

/// Mixed frame operator `S_{h,g} = U_g U_h^H` of two models over the same
/// space and atom indexing.
pub fn s_hg_matrix(model_g: &FiniteModel, model_h: &FiniteModel) -> Result<KOperator> {
    if model_g.period != model_h.period || model_g.atom_count() != model_h.atom_count() {
        return Err(GaborError::DimensionMismatch(format!(
            "models differ: P {} vs {}, atoms {} vs {}",
            model_g.period,
            model_h.period,
            model_g.atom_count(),
            model_h.atom_count()
        )));
    }
    Ok(KOperator { matrix: &model_g.synthesis * model_h.synthesis.adjoint() })
}

/// Minimal-norm K-dual family: with `L = U^+ K`, the vectors `f_i = L^H e_i`
/// satisfy `K x = sum_i <x, f_i> atom_i`. The factorization and the
/// reconstruction identity are verified numerically before returning.
pub fn k_dual_minimal_norm(
    model: &FiniteModel,
    k: &KOperator,
    tol: f64,
) -> Result<Vec<DVector<Complex64>>> {
    check_dimensions(model, k)?;
    if !douglas_range_check(model, k, tol)? {
        return Err(GaborError::RangeViolation(
            "range(K) is not contained in range(U)".into(),
        ));
    }
    let u = &model.synthesis;
    let pinv = u
        .clone()
        .svd(true, true)
        .pseudo_inverse(RANK_TOL)
        .expect("pseudo-inverse of a finite matrix");
    let factor = &pinv * &k.matrix;
    let scale = tol.max(RANK_TOL) * k.matrix.norm().max(1.0);
    let factor_residual = (u * &factor - &k.matrix).norm();
    if factor_residual > scale {
        return Err(GaborError::RangeViolation(format!(
            "factorization residual {factor_residual:.3e} exceeds {scale:.3e}"
        )));
    }
    let duals: Vec<DVector<Complex64>> =
        (0..model.atom_count()).map(|i| factor.row(i).adjoint()).collect();
    // reconstruction spot-check on random vectors
    let mut rng = ChaCha8Rng::seed_from_u64(VERIFY_SEED);
    for _ in 0..20 {
        let x = random_vector(&mut rng, model.period as usize);
        if !reconstructs(model, &k.matrix, &duals, &x, scale) {
            return Err(GaborError::RangeViolation(
                "K-dual reconstruction check failed".into(),
            ));
        }
    }
    Ok(duals)
}

fn reconstructs(
    model: &FiniteModel,
    target: &DMatrix<Complex64>,
    duals: &[DVector<Complex64>],
    x: &DVector<Complex64>,
    tol: f64,
) -> bool {
    let coefficients =
        DVector::from_iterator(duals.len(), duals.iter().map(|f| f.dotc(x)));
    let rebuilt = &model.synthesis * coefficients;
    (rebuilt - target * x).norm() <= tol * x.norm().max(1.0)
}

/// Checks that `{M^H f_i}` is a `K M`-dual family for a verified K-dual
/// family `{f_i}`, by randomized reconstruction of `K M`.
pub fn km_composition_check(
    model: &FiniteModel,
    k: &KOperator,
    m_op: &KOperator,
    kduals: &[DVector<Complex64>],
    tol: f64,
) -> Result<bool> {
    check_dimensions(model, k)?;
    check_dimensions(model, m_op)?;
    let km = &k.matrix * &m_op.matrix;
    let km_operator = KOperator { matrix: km.clone() };
    if !douglas_range_check(model, &km_operator, tol)? {
        return Err(GaborError::RangeViolation(
            "range(KM) escapes range(U) despite K passing".into(),
        ));
    }
    let composed: Vec<DVector<Complex64>> =
        kduals.iter().map(|f| m_op.matrix.adjoint() * f).collect();
    let scale = tol.max(RANK_TOL) * km.norm().max(1.0);
    let mut rng = ChaCha8Rng::seed_from_u64(VERIFY_SEED ^ 1);
    Ok((0..20).all(|_| {
        let x = random_vector(&mut rng, model.period as usize);
        reconstructs(model, &km, &composed, &x, scale)
    }))
}

/// K-minimality: the synthesis matrix has full column rank, so the K-dual is
/// unique.
pub fn k_minimality_check(model: &FiniteModel, tol: f64) -> bool {
    let svd = model.synthesis.clone().svd(false, false);
    let sigma_max = svd.singular_values.iter().copied().fold(0.0f64, f64::max);
    let sigma_min = svd.singular_values.iter().copied().fold(f64::INFINITY, f64::min);
    model.synthesis.ncols() <= model.synthesis.nrows()
        && sigma_min > tol.max(RANK_TOL) * sigma_max.max(1.0)
}

fn random_vector(rng: &mut impl Rng, len: usize) -> DVector<Complex64> {
    DVector::from_iterator(
        len,
        (0..len).map(|_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))),
    )
}
