//! Dimension probes, one grading law and the reversible-square identities.

use symalg::predicates::Space;
use symalg::verify::{dimension_probe, grading_check, r_complement_dimensions, rv_equals_av, GradingPair};

fn main() -> symalg::Result<()> {
    for n in 2..=6 {
        let s = dimension_probe(Space::S, n, 0)?;
        let v = dimension_probe(Space::V, n, 0)?;
        println!("n = {n}: dim S = {} (n²−2n+2 = {}), dim V = {} (2n−2 = {})", s.nullity, n * n - 2 * n + 2, v.nullity, 2 * n - 2);
    }
    let g = grading_check(GradingPair::Sv, 5, 200, 1)?;
    println!("{} at n = 5: {} failures over {} trials", GradingPair::Sv.name(), g.failure_count, g.trials);
    for n in 2..=6 {
        let c = r_complement_dimensions(n)?;
        println!("n = {n}: RV = AV {}, dim R = {}, complement {}, intersection {}", rv_equals_av(n)?, c.dim_r, c.dim_complement, c.dim_intersection);
    }
    Ok(())
}
