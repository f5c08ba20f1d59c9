//! Apply the frame operator two ways: banded (through the correlation table)
//! and by full synthesis-after-analysis, and invert it in the narrow-support
//! regime.

use gabor_frames::frame_analysis::apply_inverse_frame_operator_narrow;
use gabor_frames::{CorrelationTable, GaborSystem, Window};

fn main() {
    let sys = GaborSystem::on_full_line(
        2,
        2,
        vec![Window::from_real(0, &[0.9, 0.5])],
    )
    .unwrap();
    let table = CorrelationTable::auto(&sys);
    println!("band radius: {} (operator couples j with j +/- kM)", table.band_radius());

    let f = Window::from_real(-2, &[1.0, 0.0, -0.5, 2.0]);
    let banded = table.apply_operator(&f);
    let direct = sys.synthesize(&sys.analysis_coefficients(&f)).unwrap();
    println!("   j     (Sf)(j) banded    (Sf)(j) direct");
    for j in -3..4 {
        println!("  {j:3}    {:12.8}      {:12.8}", banded.value(j).re, direct.value(j).re);
    }

    // |supp g| < M, so S is diagonal and inversion is pointwise
    let recovered = apply_inverse_frame_operator_narrow(&table, &banded).unwrap();
    let error: f64 = (-4..6)
        .map(|j| (recovered.value(j) - f.value(j)).norm())
        .fold(0.0, f64::max);
    println!("max |S^-1(Sf) - f| = {error:.3e}");
}
