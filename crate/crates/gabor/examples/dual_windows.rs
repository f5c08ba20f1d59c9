//! Complete an arbitrary Bessel pair to a dual frame pair by appending
//! windows, then reconstruct a signal through the completed pair.

use gabor_frames::constructor::dual_completion;
use gabor_frames::frame_analysis::dual_check;
use gabor_frames::{CorrelationTable, GaborSystem, Window};

fn main() {
    // a pair that is nowhere near dual on its own
    let g = GaborSystem::on_full_line(2, 3, vec![Window::from_real(0, &[0.4, 0.2])]).unwrap();
    let h = GaborSystem::on_full_line(2, 3, vec![Window::from_real(1, &[0.3])]).unwrap();
    let before = CorrelationTable::cross(&g, &h).unwrap();
    println!("pair dual before completion: {}", dual_check(&before, 1e-10));

    let (g_ext, h_ext) = dual_completion(&g, &h).unwrap();
    println!(
        "completed: {} -> {} windows each",
        g.window_count(),
        g_ext.window_count()
    );
    let after = CorrelationTable::cross(&h_ext, &g_ext).unwrap();
    println!("pair dual after completion : {}", dual_check(&after, 1e-10));

    // reconstruction f = sum <f, h-atoms> g-atoms
    let f = Window::from_real(-1, &[0.7, -0.1, 1.3]);
    let rebuilt = g_ext.synthesize(&h_ext.analysis_coefficients(&f)).unwrap();
    let error: f64 = (-3..4)
        .map(|j| (rebuilt.value(j) - f.value(j)).norm())
        .fold(0.0, f64::max);
    println!("max reconstruction error   : {error:.3e}");
}
