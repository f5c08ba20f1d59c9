//! Estimate frame bounds of a system three ways: the sufficient band test,
//! the finite-model spectrum, and a randomized Rayleigh-quotient oracle.

use gabor_frames::frame_analysis::{randomized_rayleigh_bounds, sufficient_bounds};
use gabor_frames::kframe::{build_model, spectral_frame_bounds};
use gabor_frames::{CorrelationTable, GaborSystem, Window};

fn main() {
    // one window covering a 2-block with unequal weights: a frame, not tight
    let sys = GaborSystem::on_full_line(
        2,
        2,
        vec![Window::from_real(0, &[0.9, 0.5])],
    )
    .unwrap();

    let table = CorrelationTable::auto(&sys);
    let (a, b, bessel, frame) = sufficient_bounds(&table);
    println!("band test     : A = {a:.6}, B = {b:.6} (bessel {bessel}, frame {frame})");

    let (sa, sb) = spectral_frame_bounds(&build_model(&sys, 8));
    println!("model spectrum: A = {sa:.6}, B = {sb:.6}");

    let (lo, hi) = randomized_rayleigh_bounds(&sys, 2000, 16, 42);
    println!("rayleigh range: [{lo:.6}, {hi:.6}] (always inside the true bounds)");
}
