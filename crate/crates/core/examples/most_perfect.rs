//! Most perfect squares: the block construction of the 6×6 example, the
//! vector form γΣᵀ + Σδᵀ, extraction, and parasymmetry.

use symalg::construct::{extract_mps_vectors, make_mps_block, make_mps_vectors, mps_full};
use symalg::verify::parasymmetry_check;
use symalg::{Matrix, Scalar, Vector};

fn main() -> symalg::Result<()> {
    let a = Vector::from_ints(&[1, -2, 1]);
    let b = Vector::from_ints(&[-2, 4, -2]);
    let z = Matrix::from_int_rows(&[&[1, 0, -1], &[-1, 0, 1], &[1, 0, -1]]);
    let m = make_mps_block(&a, &b, &z)?.scale(&Scalar::from_int(2));
    println!("2 X [[O, aΣᵀ], [Σbᵀ, Z]] X =\n{m}");

    let (gamma, delta) = extract_mps_vectors(&m)?;
    println!("γ = {:?}\nδ = {:?}", gamma.entries(), delta.entries());
    assert_eq!(make_mps_vectors(&gamma, &delta)?, m);
    println!("rank {}", m.rank());

    let g = mps_full(&Vector::from_ints(&[1, 2]));
    let d = mps_full(&Vector::from_ints(&[0, 1]));
    for (label, d) in [("independent", d), ("dependent", g.scale(&Scalar::from_int(3)))] {
        let r = parasymmetry_check(&g, &d)?;
        println!("{label}: M² symmetric = {}, γ,δ dependent = {}", r.square_symmetric, r.dependent);
    }
    Ok(())
}
