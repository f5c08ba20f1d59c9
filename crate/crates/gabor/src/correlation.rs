//! Band-limited cross-correlation tables of window families.
//!
//! The table entry at `(j, k)` is
//! `G_k(j) = sum_l sum_n h_l(j - nN) conj(g_l(j + kM - nN))`,
//! computed exactly over the finite supports. Rows exist only for residues of
//! the index set inside one translation period; everything else follows by
//! N-periodicity or vanishes. The diagonal `k = 0` and the off-diagonal band
//! carry all the frame, Parseval, dual and orthonormality verdicts.

use num_complex::Complex64;
use std::collections::BTreeMap;

use crate::error::{GaborError, Result};
use crate::periodic_set::PeriodicSet;
use crate::signal::{div_ceil, div_floor, GaborSystem, Window};

#[derive(Debug, Clone)]
pub struct CorrelationTable {
    modulation_order: i64,
    translation_step: i64,
    window_count: usize,
    set: PeriodicSet,
    band_radius: i64,
    /// Row per residue `j` in the set's fundamental domain; each row stores
    /// entries for `k` in `-band_radius..=band_radius`.
    rows: BTreeMap<i64, Vec<Complex64>>,
}

impl CorrelationTable {
    /// Table of the mixed operator `f -> sum <f, g-atoms> h-atoms`: analysis
    /// with `analysis_sys` (g), synthesis with `synthesis_sys` (h).
    pub fn cross(analysis_sys: &GaborSystem, synthesis_sys: &GaborSystem) -> Result<Self> {
        if !analysis_sys.same_parameters(synthesis_sys) {
            return Err(GaborError::ParameterMismatch(
                "correlation requires equal L, M, N and set".into(),
            ));
        }
        let big_m = analysis_sys.modulation_order();
        let step = analysis_sys.translation_step();
        let set = analysis_sys.set().clone();

        // Band: G_k vanishes unless kM lies in [min supp g - max supp h,
        //                                       max supp g - min supp h].
        let mut band_radius = 0i64;
        for (g, h) in analysis_sys.windows().iter().zip(synthesis_sys.windows()) {
            if let (Some((g_lo, g_hi)), Some((h_lo, h_hi))) = (g.support(), h.support()) {
                let k_lo = div_ceil(g_lo - h_hi, big_m);
                let k_hi = div_floor(g_hi - h_lo, big_m);
                band_radius = band_radius.max(k_lo.abs()).max(k_hi.abs());
            }
        }

        let mut rows = BTreeMap::new();
        for &j in set.residues() {
            let mut row = vec![Complex64::ZERO; (2 * band_radius + 1) as usize];
            for (g, h) in analysis_sys.windows().iter().zip(synthesis_sys.windows()) {
                let (Some((g_lo, g_hi)), Some((h_lo, h_hi))) = (g.support(), h.support()) else {
                    continue;
                };
                for k in -band_radius..=band_radius {
                    // n must put j - nN inside supp(h) and j + kM - nN inside supp(g)
                    let n_lo = div_ceil(j - h_hi, step).max(div_ceil(j + k * big_m - g_hi, step));
                    let n_hi = div_floor(j - h_lo, step).min(div_floor(j + k * big_m - g_lo, step));
                    let mut acc = Complex64::ZERO;
                    for n in n_lo..=n_hi {
                        acc += h.value(j - n * step) * g.value(j + k * big_m - n * step).conj();
                    }
                    row[(k + band_radius) as usize] += acc;
                }
            }
            rows.insert(j, row);
        }
        Ok(Self {
            modulation_order: big_m,
            translation_step: step,
            window_count: analysis_sys.window_count(),
            set,
            band_radius,
            rows,
        })
    }

    /// Autocorrelation table of a system against itself.
    pub fn auto(sys: &GaborSystem) -> Self {
        Self::cross(sys, sys).expect("a system always matches its own parameters")
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

    pub fn set(&self) -> &PeriodicSet {
        &self.set
    }

    pub fn band_radius(&self) -> i64 {
        self.band_radius
    }

    /// Entry `G_k(j)` for arbitrary integers: zero off the set or off the
    /// band, N-periodic in `j`.
    pub fn entry(&self, j: i64, k: i64) -> Complex64 {
        if k.abs() > self.band_radius || !self.set.contains(j) {
            return Complex64::ZERO;
        }
        let row = &self.rows[&j.rem_euclid(self.translation_step)];
        row[(k + self.band_radius) as usize]
    }

    /// Residues carrying table rows (the set's fundamental domain).
    pub fn row_indices(&self) -> impl Iterator<Item = i64> + '_ {
        self.rows.keys().copied()
    }

    /// Analysis energy `sum |<f, atom>|^2` evaluated through the table
    /// (autocorrelation tables only): `M sum_j G_0(j) |f(j)|^2 +
    /// M sum_{k != 0} sum_j G_k(j) f(j + kM) conj(f(j))`, i.e. `<Sf, f>`
    /// with the banded operator of this table.
    pub fn energy(&self, f: &Window) -> Result<f64> {
        let tol = 1e-12;
        let mut acc = Complex64::ZERO;
        for (j, v) in f.samples() {
            if v == Complex64::ZERO {
                continue;
            }
            for k in -self.band_radius..=self.band_radius {
                let g = self.entry(j, k);
                if g == Complex64::ZERO {
                    continue;
                }
                acc += g * f.value(j + k * self.modulation_order) * v.conj();
            }
        }
        acc *= self.modulation_order as f64;
        if acc.im.abs() > tol * acc.re.abs().max(1.0) {
            return Err(GaborError::ImaginaryResidue { residue: acc.im.abs(), tol });
        }
        Ok(acc.re)
    }

    /// Banded application of the mixed frame operator:
    /// `(Sf)(j) = M sum_k G_k(j) f(j + kM)`.
    pub fn apply_operator(&self, f: &Window) -> Window {
        let Some((f_lo, f_hi)) = f.support() else {
            return Window::zero();
        };
        let reach = self.band_radius * self.modulation_order;
        let lo = f_lo - reach;
        let hi = f_hi + reach;
        let values = (lo..=hi)
            .map(|j| {
                let mut acc = Complex64::ZERO;
                for k in -self.band_radius..=self.band_radius {
                    let g = self.entry(j, k);
                    if g != Complex64::ZERO {
                        acc += g * f.value(j + k * self.modulation_order);
                    }
                }
                acc * self.modulation_order as f64
            })
            .collect();
        Window::new(lo, values)
    }

    /// Recomputes one entry by brute force over explicit index ranges.
    /// Test oracle; independent of the banded storage.
    pub fn brute_force_entry(
        analysis_sys: &GaborSystem,
        synthesis_sys: &GaborSystem,
        j: i64,
        k: i64,
    ) -> Complex64 {
        let big_m = analysis_sys.modulation_order();
        let step = analysis_sys.translation_step();
        let mut acc = Complex64::ZERO;
        for (g, h) in analysis_sys.windows().iter().zip(synthesis_sys.windows()) {
            let (Some((_, h_hi)), Some((h_lo, _))) = (h.support(), h.support()) else {
                continue;
            };
            let n_lo = div_ceil(j - h_hi, step) - 1;
            let n_hi = div_floor(j - h_lo, step) + 1;
            for n in n_lo..=n_hi {
                acc += h.value(j - n * step) * g.value(j + k * big_m - n * step).conj();
            }
        }
        acc
    }
}
