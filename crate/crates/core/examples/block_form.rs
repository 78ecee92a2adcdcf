//! Block representation X M X and its named sub-blocks.

use symalg::{from_block, to_block, BlockViews, Matrix};

fn main() -> symalg::Result<()> {
    for n in [4, 5] {
        let m = Matrix::ones(n, n);
        let b = to_block(&m)?;
        println!("X E_{n} X =\n{}", b.conjugate());
        if let BlockViews::Odd { alpha, v, .. } = b.views() {
            println!("centre entry α = {}, column v = {:?}\n", alpha.pretty(), v.entries());
        }
        assert_eq!(from_block(&b), m);
    }
    Ok(())
}
