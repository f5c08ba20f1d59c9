//! Finitely supported complex sequences and multi-window Gabor systems.
//!
//! A `Window` is a compactly supported sequence stored densely from its first
//! nonzero sample. A `GaborSystem` holds the parameters (L, M, N, set) and the
//! window family; its atoms are the modulated translates of the windows.

use num_complex::Complex64;
use std::f64::consts::TAU;

use crate::error::{GaborError, Result};
use crate::periodic_set::PeriodicSet;

/// A finitely supported complex sequence, stored as offset + dense values.
///
/// Canonical form: leading and trailing stored values are nonzero. The zero
/// sequence is stored with an empty value list.
#[derive(Debug, Clone, PartialEq)]
pub struct Window {
    offset: i64,
    values: Vec<Complex64>,
}

impl Window {
    /// Builds a window, trimming exactly-zero samples from both edges.
    pub fn new(offset: i64, values: Vec<Complex64>) -> Self {
        Self::with_threshold(offset, values, 0.0)
    }

    /// Builds a window, trimming edge samples with magnitude <= `threshold`.
    /// A threshold of 0.0 trims exact zeros only.
    pub fn with_threshold(offset: i64, values: Vec<Complex64>, threshold: f64) -> Self {
        let lead = values.iter().take_while(|v| v.norm() <= threshold).count();
        let trail = values[lead..]
            .iter()
            .rev()
            .take_while(|v| v.norm() <= threshold)
            .count();
        let trimmed: Vec<Complex64> = values[lead..values.len() - trail].to_vec();
        if trimmed.is_empty() {
            Self { offset: 0, values: Vec::new() }
        } else {
            Self { offset: offset + lead as i64, values: trimmed }
        }
    }

    pub fn zero() -> Self {
        Self { offset: 0, values: Vec::new() }
    }

    /// The unit impulse at position `j`.
    pub fn delta(j: i64) -> Self {
        Self { offset: j, values: vec![Complex64::new(1.0, 0.0)] }
    }

    /// Real-valued window from samples starting at `offset`.
    pub fn from_real(offset: i64, samples: &[f64]) -> Self {
        Self::new(offset, samples.iter().map(|&x| Complex64::new(x, 0.0)).collect())
    }

    /// `1/sqrt(M)`-scaled indicator of `{start, ..., start+len-1}`.
    pub fn scaled_indicator(start: i64, len: i64, scale: f64) -> Self {
        Self::new(start, vec![Complex64::new(scale, 0.0); len as usize])
    }

    /// Truncated Gaussian `e^{-r k^2}` for `|k| <= radius`.
    pub fn truncated_gaussian(rate: f64, radius: i64) -> Self {
        let values = (-radius..=radius)
            .map(|k| Complex64::new((-rate * (k * k) as f64).exp(), 0.0))
            .collect();
        Self::new(-radius, values)
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_empty()
    }

    /// Inclusive support bounds, or `None` for the zero window.
    pub fn support(&self) -> Option<(i64, i64)> {
        if self.values.is_empty() {
            None
        } else {
            Some((self.offset, self.offset + self.values.len() as i64 - 1))
        }
    }

    /// `max supp - min supp`, the paper-style support width. Zero for the
    /// zero window and for impulses.
    pub fn support_width(&self) -> i64 {
        match self.support() {
            Some((lo, hi)) => hi - lo,
            None => 0,
        }
    }

    pub fn value(&self, j: i64) -> Complex64 {
        let idx = j - self.offset;
        if idx < 0 || idx >= self.values.len() as i64 {
            Complex64::ZERO
        } else {
            self.values[idx as usize]
        }
    }

    /// Iterates over `(index, value)` pairs of the stored range.
    pub fn samples(&self) -> impl Iterator<Item = (i64, Complex64)> + '_ {
        self.values.iter().enumerate().map(|(i, &v)| (self.offset + i as i64, v))
    }

    pub fn norm_sq(&self) -> f64 {
        self.values.iter().map(|v| v.norm_sqr()).sum()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sq().sqrt()
    }

    /// Pointwise multiplication by `e^{2 pi i (m/M) j}`.
    pub fn modulate(&self, m: i64, big_m: i64) -> Self {
        assert!(big_m >= 1);
        let values = self
            .samples()
            .map(|(j, v)| phase(m as f64 / big_m as f64 * j as f64) * v)
            .collect();
        Self { offset: self.offset, values }
    }

    /// Shifts the sequence so that `result(j) = self(j - shift)`.
    pub fn translate(&self, shift: i64) -> Self {
        Self { offset: self.offset + shift, values: self.values.clone() }
    }

    pub fn scale(&self, c: Complex64) -> Self {
        Self::new(self.offset, self.values.iter().map(|v| c * v).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        self.combine(other, Complex64::new(1.0, 0.0))
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.combine(other, Complex64::new(-1.0, 0.0))
    }

    fn combine(&self, other: &Self, factor: Complex64) -> Self {
        match (self.support(), other.support()) {
            (None, None) => Self::zero(),
            (Some(_), None) => self.clone(),
            (None, Some(_)) => other.scale(factor),
            (Some((a_lo, a_hi)), Some((b_lo, b_hi))) => {
                let lo = a_lo.min(b_lo);
                let hi = a_hi.max(b_hi);
                let values = (lo..=hi).map(|j| self.value(j) + factor * other.value(j)).collect();
                Self::new(lo, values)
            }
        }
    }

    /// Support containment check against a periodic set.
    pub fn supported_in(&self, set: &PeriodicSet) -> bool {
        self.samples().all(|(j, v)| v == Complex64::ZERO || set.contains(j))
    }
}

pub(crate) fn phase(turns: f64) -> Complex64 {
    Complex64::from_polar(1.0, TAU * turns)
}

/// Standard l^2 pairing `sum_j a(j) conj(b(j))` over the overlapping support.
pub fn inner_product(a: &Window, b: &Window) -> Complex64 {
    let (Some((a_lo, a_hi)), Some((b_lo, b_hi))) = (a.support(), b.support()) else {
        return Complex64::ZERO;
    };
    let lo = a_lo.max(b_lo);
    let hi = a_hi.min(b_hi);
    (lo..=hi).map(|j| a.value(j) * b.value(j).conj()).sum()
}

/// Index of one atom `E_{m/M} T_{nN} g_l` of a Gabor system.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AtomIndex {
    pub l: usize,
    pub n: i64,
    pub m: i64,
}

/// A multi-window discrete Gabor system on an N-periodic set.
#[derive(Debug, Clone)]
pub struct GaborSystem {
    modulation_order: i64,
    translation_step: i64,
    set: PeriodicSet,
    windows: Vec<Window>,
}

impl GaborSystem {
    /// Builds a system from parameters `(M, N)`, the index set and the windows.
    ///
    /// The set period must equal N or divide it (in which case the set is
    /// re-expressed with period N). Every window must be supported in the set.
    pub fn new(
        modulation_order: i64,
        translation_step: i64,
        set: PeriodicSet,
        windows: Vec<Window>,
    ) -> Result<Self> {
        if modulation_order < 1 || translation_step < 1 {
            return Err(GaborError::ShapeViolation(format!(
                "M = {modulation_order}, N = {translation_step} must be positive"
            )));
        }
        if windows.is_empty() {
            return Err(GaborError::ShapeViolation("window list is empty".into()));
        }
        let set = if set.period() == translation_step {
            set
        } else if translation_step % set.period() == 0 {
            set.with_period(translation_step)?
        } else {
            return Err(GaborError::InvalidSet(format!(
                "set period {} does not divide N = {}",
                set.period(),
                translation_step
            )));
        };
        for (l, w) in windows.iter().enumerate() {
            if !w.supported_in(&set) {
                return Err(GaborError::InvalidSet(format!(
                    "window {l} has support outside the set"
                )));
            }
        }
        Ok(Self { modulation_order, translation_step, set, windows })
    }

    /// Convenience constructor on the full line.
    pub fn on_full_line(modulation_order: i64, translation_step: i64, windows: Vec<Window>) -> Result<Self> {
        Self::new(modulation_order, translation_step, PeriodicSet::full_line(), windows)
    }

    pub fn window_count(&self) -> usize {
        self.windows.len()
    }

    pub fn modulation_order(&self) -> i64 {
        self.modulation_order
    }

    pub fn translation_step(&self) -> i64 {
        self.translation_step
    }

    pub fn set(&self) -> &PeriodicSet {
        &self.set
    }

    pub fn windows(&self) -> &[Window] {
        &self.windows
    }

    pub fn window(&self, l: usize) -> &Window {
        &self.windows[l]
    }

    /// True when the two systems share `(L, M, N, set)`.
    pub fn same_parameters(&self, other: &Self) -> bool {
        self.window_count() == other.window_count()
            && self.modulation_order == other.modulation_order
            && self.translation_step == other.translation_step
            && self.set == other.set
    }

    /// The atom `E_{m/M} T_{nN} g_l`.
    pub fn atom(&self, idx: AtomIndex) -> Result<Window> {
        if idx.l >= self.windows.len() || idx.m < 0 || idx.m >= self.modulation_order {
            return Err(GaborError::InvalidAtom(format!(
                "l = {}, m = {} outside (L = {}, M = {})",
                idx.l,
                idx.m,
                self.windows.len(),
                self.modulation_order
            )));
        }
        Ok(self.windows[idx.l]
            .translate(idx.n * self.translation_step)
            .modulate(idx.m, self.modulation_order))
    }

    /// All analysis coefficients `<f, E_{m/M} T_{nN} g_l>` over the finitely
    /// many translations whose shifted support meets `supp(f)`.
    ///
    /// Entries are ordered `(l, n, m)`; coefficients that happen to vanish are
    /// kept so the enumeration range is explicit.
    pub fn analysis_coefficients(&self, f: &Window) -> Vec<(AtomIndex, Complex64)> {
        let mut out = Vec::new();
        let Some((f_lo, f_hi)) = f.support() else {
            return out;
        };
        let step = self.translation_step;
        let big_m = self.modulation_order;
        for (l, g) in self.windows.iter().enumerate() {
            let Some((g_lo, g_hi)) = g.support() else {
                continue;
            };
            // overlap requires g_lo + nN <= f_hi and g_hi + nN >= f_lo
            let n_lo = div_ceil(f_lo - g_hi, step);
            let n_hi = div_floor(f_hi - g_lo, step);
            for n in n_lo..=n_hi {
                // products f(j) conj(g(j - nN)) over the overlap window
                let lo = f_lo.max(g_lo + n * step);
                let hi = f_hi.min(g_hi + n * step);
                let products: Vec<(i64, Complex64)> = (lo..=hi)
                    .map(|j| (j, f.value(j) * g.value(j - n * step).conj()))
                    .collect();
                for m in 0..big_m {
                    let coef: Complex64 = products
                        .iter()
                        .map(|&(j, p)| p * phase(-(m as f64) / big_m as f64 * j as f64))
                        .sum();
                    out.push((AtomIndex { l, n, m }, coef));
                }
            }
        }
        out
    }

    /// Total analysis energy `sum |<f, atom>|^2`, by direct enumeration.
    pub fn analysis_energy(&self, f: &Window) -> f64 {
        self.analysis_coefficients(f).iter().map(|(_, c)| c.norm_sqr()).sum()
    }

    /// Synthesis `sum coefficients[i] * atom_i` over a finite coefficient list.
    pub fn synthesize(&self, coefficients: &[(AtomIndex, Complex64)]) -> Result<Window> {
        let mut acc = Window::zero();
        for &(idx, c) in coefficients {
            if c == Complex64::ZERO {
                continue;
            }
            acc = acc.add(&self.atom(idx)?.scale(c));
        }
        Ok(acc)
    }
}

pub(crate) fn div_floor(a: i64, b: i64) -> i64 {
    a.div_euclid(b)
}

pub(crate) fn div_ceil(a: i64, b: i64) -> i64 {
    -(-a).div_euclid(b)
}
