//! Random members of every space, each confirmed by its membership predicate.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use symalg::construct::{random_member, Kind};

fn main() -> symalg::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    for kind in Kind::ALL {
        let n = if kind.requires_even() { 4 } else { 5 };
        let m = random_member(kind, n, &mut rng)?;
        println!("{kind} (n = {n}), in {}: {}\n{m}", kind.space(), kind.space().contains(&m)?);
    }
    Ok(())
}
