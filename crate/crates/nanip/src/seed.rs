//! Deterministic randomness plumbing.
//!
//! Every randomized operation in this crate takes an explicit [`Seed`] and
//! derives its generator through [`rng_from_seed`], so identical seeds and
//! arguments always reproduce identical output. There is no global RNG state.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Seed for randomized operations.
pub type Seed = u64;

/// Builds the stream cipher RNG used throughout the crate.
pub fn rng_from_seed(seed: Seed) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Derives an independent child seed from a master seed and a context path,
/// e.g. `derive_seed(master, &[2, m, instance, run])`. Each component of a
/// larger experiment gets its own reproducible stream, so any single piece
/// can be re-run in isolation.
///
/// This is a fixed-point mixing construction (splitmix-style finalizer), not
/// a cryptographic KDF; its contract is stability and good dispersion.
pub fn derive_seed(master: Seed, parts: &[u64]) -> Seed {
    const GAMMA: u64 = 0x9e37_79b9_7f4a_7c15;
    let mut state = mix(master ^ GAMMA);
    for (i, &part) in parts.iter().enumerate() {
        state = mix(state ^ part.wrapping_add(GAMMA.wrapping_mul(i as u64 + 1)));
    }
    state
}

fn mix(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::Rng;

    #[test]
    fn same_seed_same_stream() {
        let a: u64 = rng_from_seed(42).random();
        let b: u64 = rng_from_seed(42).random();
        assert_eq!(a, b);
        let c: u64 = rng_from_seed(43).random();
        assert_ne!(a, c);
    }

    #[test]
    fn derive_is_deterministic_and_context_sensitive() {
        assert_eq!(derive_seed(42, &[1, 2, 3]), derive_seed(42, &[1, 2, 3]));
        assert_ne!(derive_seed(42, &[1, 2, 3]), derive_seed(42, &[1, 2, 4]));
        assert_ne!(derive_seed(42, &[1, 2, 3]), derive_seed(43, &[1, 2, 3]));
        assert_ne!(derive_seed(42, &[1, 2]), derive_seed(42, &[2, 1]));
        assert_ne!(derive_seed(42, &[]), derive_seed(42, &[0]));
    }
}
