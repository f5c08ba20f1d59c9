//! Zak-transform diagnostics at critical density N = M: frame bounds from
//! the Zak energy, forced zeros of symmetric windows, and unitarity.

use gabor_frames::zak::{
    frame_check_nm, symmetry_zeros, zak_point, zak_unitarity_residual,
};
use gabor_frames::{GaborSystem, Window};

fn main() {
    // a Gaussian window works at odd M but fails at even M
    let gauss = Window::truncated_gaussian(1.0, 8);
    for m in [3i64, 2] {
        let sys = GaborSystem::on_full_line(m, m, vec![gauss.clone()]).unwrap();
        let (a, b, is_frame) = frame_check_nm(&sys, 256).unwrap();
        println!("M = N = {m}: A = {a:.6}, B = {b:.6}, frame = {is_frame}");
    }

    // an odd window has forced Zak zeros, which kill the lower bound
    let odd = Window::delta(1).sub(&Window::delta(-1));
    println!("forced zeros of an odd window at M = 2:");
    for (j, theta) in symmetry_zeros(&odd, 2) {
        let value = zak_point(&odd, 2, j, theta).norm();
        println!("  z({j}, {theta}) -> |z| = {value:.2e}");
    }

    let residual = zak_unitarity_residual(&gauss, 3, 64).unwrap();
    println!("unitarity residual of the Gaussian: {residual:.2e}");
}
