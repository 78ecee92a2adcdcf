//! Classify a few matrices: the 6×6 most perfect square, E_4, and a generic 2×2.

use symalg::predicates::render_report;
use symalg::{classify, Matrix};

fn main() -> symalg::Result<()> {
    let mps = Matrix::from_int_rows(&[
        &[-2, 3, 0, -4, 5, -2],
        &[1, -2, -1, 5, -6, 3],
        &[-2, 3, 0, -4, 5, -2],
        &[4, -5, 2, 2, -3, 0],
        &[-5, 6, -3, -1, 2, 1],
        &[4, -5, 2, 2, -3, 0],
    ]);
    for (name, m) in [
        ("most perfect 6x6", mps),
        ("E_4", Matrix::ones(4, 4)),
        ("[[1,2],[3,4]]", Matrix::from_int_rows(&[&[1, 2], &[3, 4]])),
    ] {
        println!("{name}\n{m}");
        print!("{}", render_report(&classify(&m)?));
        println!();
    }
    Ok(())
}
