//! Analysis of multi-window Gabor systems on periodic subsets of the integers.
//!
//! The crate decides and quantifies frame-theoretic properties — Bessel,
//! frame, Parseval, Riesz, orthonormal, dual and K-frame — for systems of
//! modulated translates of finitely supported windows. Verdicts come from
//! band-limited correlation tables, the discrete Zak transform, and a finite
//! periodized matrix model; each route is cross-checked against brute-force
//! oracles in the test suite.

pub mod cli;
pub mod constructor;
pub mod correlation;
pub mod error;
pub mod frame_analysis;
pub mod io;
pub mod kframe;
pub mod periodic_set;
pub mod signal;
pub mod zak;

pub use correlation::CorrelationTable;
pub use error::{GaborError, Result};
pub use frame_analysis::FrameReport;
pub use periodic_set::PeriodicSet;
pub use signal::{inner_product, AtomIndex, GaborSystem, Window};

/// Shared example systems used across module tests.
#[cfg(test)]
pub(crate) mod fixtures {
    use crate::signal::{GaborSystem, Window};

    /// Two-window Parseval frame with L=2, M=2, N=3:
    /// `g_0 = (1/sqrt 2)(d_0 + d_1)`, `g_1 = (1/sqrt 2) d_2`.
    pub(crate) fn example_a() -> GaborSystem {
        let s = 1.0 / 2f64.sqrt();
        GaborSystem::on_full_line(
            2,
            3,
            vec![Window::from_real(0, &[s, s]), Window::from_real(2, &[s])],
        )
        .unwrap()
    }

    /// Orthonormal basis with L=3, M=4, N=12: `g_l = (1/2) 1_{[4l, 4l+4)}`.
    pub(crate) fn example_b() -> GaborSystem {
        let windows = (0..3).map(|l| Window::scaled_indicator(4 * l, 4, 0.5)).collect();
        GaborSystem::on_full_line(4, 12, windows).unwrap()
    }

    /// One window spanning two modulation blocks: L=1, M=2, N=2,
    /// `g = d_0 + d_2`. The sufficient frame test is inconclusive here.
    pub(crate) fn wide_window_system() -> GaborSystem {
        GaborSystem::on_full_line(2, 2, vec![Window::from_real(0, &[1.0, 0.0, 1.0])]).unwrap()
    }
}
