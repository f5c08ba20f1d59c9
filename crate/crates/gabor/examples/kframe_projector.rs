//! K-frame analysis in the finite periodized model: drop one window from an
//! orthonormal basis and show the remainder is a Parseval K-frame for the
//! projector onto its span, with a unique (minimal) K-dual.

use gabor_frames::constructor::construct_orthonormal;
use gabor_frames::kframe::{
    build_model, douglas_range_check, k_dual_minimal_norm, k_minimality_check, kframe_verdict,
    KOperator,
};
use gabor_frames::GaborSystem;

fn main() {
    let full = construct_orthonormal(3, 4, 12).unwrap();
    let partial = GaborSystem::on_full_line(4, 12, full.windows()[..2].to_vec()).unwrap();
    let model = build_model(&partial, 1);
    println!(
        "model: P = {}, atoms = {} (rank-deficient in C^{})",
        model.period(),
        model.atom_count(),
        model.period()
    );

    // the identity is out of reach: range(U) has dimension 8 < 12
    let identity = KOperator::identity(12);
    println!(
        "range(I) inside range(U): {}",
        douglas_range_check(&model, &identity, 1e-9).unwrap()
    );

    // but the projector onto the atom span is reproduced exactly
    let projector = KOperator { matrix: model.frame_operator() };
    let verdict = kframe_verdict(&model, &projector, 1e-9).unwrap();
    println!(
        "projector K: is_kframe = {}, A_opt = {:?}, B = {}",
        verdict.is_kframe, verdict.a_opt, verdict.b
    );
    println!("K-minimal (unique K-dual): {}", k_minimality_check(&model, 1e-9));

    let duals = k_dual_minimal_norm(&model, &projector, 1e-9).unwrap();
    println!("K-dual family of {} vectors verified by reconstruction", duals.len());
}
