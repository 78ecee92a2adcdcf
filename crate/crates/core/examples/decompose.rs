//! Split one matrix along all four direct sums and check each part.

use symalg::decompose::split;
use symalg::{Matrix, SplitKind};

fn main() -> symalg::Result<()> {
    let m = Matrix::from_int_rows(&[&[3, 1, 4, 1], &[5, 9, 2, 6], &[5, 3, 5, 8], &[9, 7, 9, 3]]);
    println!("M =\n{m}");
    for kind in SplitKind::ALL {
        let pair = split(&m, kind)?;
        let (even, odd) = kind.spaces();
        println!("{kind:?}: even part in {even}: {}, odd part in {odd}: {}", even.contains(&pair.even_part)?, odd.contains(&pair.odd_part)?);
        println!("{}", pair.odd_part);
        assert_eq!(pair.recombine(), m);
    }
    Ok(())
}
