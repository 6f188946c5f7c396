//! Shared property-test setup.

#![allow(dead_code)]

use proptest::prelude::*;
use proptest::test_runner::RngSeed;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use poisson_forge::exactnum::{rat, ExtScalar, Rational};
use poisson_forge::sample::SEED_ENV;

/// `cases` per property; `POISSON_FORGE_SEED` pins the generator.
pub fn config(cases: u32) -> ProptestConfig {
    let rng_seed = match std::env::var(SEED_ENV).ok().and_then(|s| s.trim().parse().ok()) {
        Some(seed) => RngSeed::Fixed(seed),
        None => RngSeed::Random,
    };
    ProptestConfig { cases, rng_seed, failure_persistence: None, ..ProptestConfig::default() }
}

/// Generator for the library's structured samplers.
pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn rational(bound: i64) -> impl Strategy<Value = Rational> {
    (-bound..=bound, 1..=bound).prop_map(|(n, d)| rat(n, d))
}

pub fn ext(bound: i64) -> impl Strategy<Value = ExtScalar> {
    [rational(bound), rational(bound), rational(bound), rational(bound)]
        .prop_map(|[a, b, c, d]| ExtScalar::new(a, b, c, d))
}
