//! Build an orthonormal Gabor basis at critical density N = LM and confirm
//! orthonormality both by the correlation table and by raw inner products.

use gabor_frames::constructor::construct_orthonormal;
use gabor_frames::frame_analysis::{density_and_riesz, orthonormal_check};
use gabor_frames::{inner_product, AtomIndex, CorrelationTable};

fn main() {
    let sys = construct_orthonormal(3, 4, 12).unwrap();
    let table = CorrelationTable::auto(&sys);
    println!("orthonormal basis check: {}", orthonormal_check(&sys, &table, 0.0).unwrap());
    let (density_ok, riesz) = density_and_riesz(&sys, true);
    println!("density card(S_N) <= LM: {density_ok}; riesz basis: {riesz}");

    // spot-check pairwise inner products of a few atoms
    let atoms = [
        AtomIndex { l: 0, n: 0, m: 0 },
        AtomIndex { l: 0, n: 0, m: 1 },
        AtomIndex { l: 1, n: 0, m: 0 },
        AtomIndex { l: 2, n: -1, m: 3 },
    ];
    for a in atoms {
        for b in atoms {
            let ip = inner_product(&sys.atom(a).unwrap(), &sys.atom(b).unwrap());
            print!(" {:5.2}", ip.re);
        }
        println!();
    }
}
