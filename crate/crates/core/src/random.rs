//! Seeded, platform-stable random digraphs.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::digraph::{Builder, Digraph, Kind};
use crate::error::GraphError;

/// Generator used for every sampled digraph and derived random choice.
pub type SampleRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SampleRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// SplitMix64 finalizer.
fn mix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Deterministic child seed for a position in a sampling grid.
pub fn derive_seed(base: u64, path: &[u64]) -> u64 {
    path.iter().fold(mix(base), |acc, &p| mix(acc ^ mix(p)))
}

fn check_probability(p: f64) -> Result<(), GraphError> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(GraphError::BadProbability(p))
    }
}

/// Each of the `2a²` cross-side arcs is kept independently with probability
/// `p`, decided in canonical arc order.
pub fn random_bipartite(a: usize, p: f64, seed: u64) -> Result<Digraph, GraphError> {
    check_probability(p)?;
    let mut b = Builder::new(Kind::Bipartite { a })?;
    let mut rng = rng(seed);
    for u in 0..2 * a {
        let heads = if u < a { a..2 * a } else { 0..a };
        for v in heads {
            if rng.gen_bool(p) {
                b.add_index(u, v)?;
            }
        }
    }
    Ok(b.finish())
}

/// Each of the `n(n-1)` ordered pairs is an arc with probability `p`.
pub fn random_general(n: usize, p: f64, seed: u64) -> Result<Digraph, GraphError> {
    check_probability(p)?;
    let mut b = Builder::new(Kind::General { n })?;
    let mut rng = rng(seed);
    for u in 0..n {
        for v in 0..n {
            if u != v && rng.gen_bool(p) {
                b.add_index(u, v)?;
            }
        }
    }
    Ok(b.finish())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::format::serialize;

    #[test]
    fn extremes() {
        assert_eq!(random_bipartite(4, 0.0, 3).unwrap().arc_count(), 0);
        assert_eq!(random_bipartite(4, 1.0, 3).unwrap().arc_count(), 32);
        assert_eq!(random_general(5, 1.0, 3).unwrap().arc_count(), 20);
        assert!(random_bipartite(4, 1.5, 3).is_err());
        assert!(random_bipartite(4, f64::NAN, 3).is_err());
    }

    #[test]
    fn deterministic() {
        let a = serialize(&random_bipartite(4, 0.5, 7).unwrap());
        let b = serialize(&random_bipartite(4, 0.5, 7).unwrap());
        assert_eq!(a, b);
        assert_ne!(a, serialize(&random_bipartite(4, 0.5, 8).unwrap()));
    }

    #[test]
    fn derived_seeds_differ_by_position() {
        let s = derive_seed(1, &[4, 0, 0]);
        assert_eq!(s, derive_seed(1, &[4, 0, 0]));
        assert_ne!(s, derive_seed(1, &[4, 0, 1]));
        assert_ne!(s, derive_seed(1, &[0, 4, 0]));
        assert_ne!(s, derive_seed(2, &[4, 0, 0]));
    }
}
