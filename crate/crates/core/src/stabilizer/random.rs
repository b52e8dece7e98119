//! Seeded generation of compatible jets.
//!
//! Genericity in the dimension counts is an open condition; it is
//! realized here by sampling integer coefficients on a basis of the
//! compatible subspace (fully symmetric lowered tensors per degree) and
//! raising with the standard symplectic matrix, so every sample passes
//! the compatibility check by construction.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{monomials_of_degree, rat};
use crate::jets::{ConnectionJet, FedosovJet};
use crate::stabilizer::witness::LoweredBuilder;
use crate::Result;

/// Default bound for sampled coefficients: small integers keep
/// elimination fast without making degeneracy likely.
pub const DEFAULT_COEFFICIENT_BOUND: u32 = 5;

/// Deterministic compatible jet of order k: same (n, k, seed, bound)
/// always yields the same jet. Coefficients of the lowered basis are
/// uniform integers in [-bound, bound].
pub fn random_compatible_jet(n: usize, k: usize, seed: u64, bound: u32) -> Result<FedosovJet> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let d = 2 * n;
    let mut components = Vec::with_capacity(k + 1);
    for m in 0..=k {
        let mut builder = LoweredBuilder::new(n, m);
        for a in 1..=d {
            for b in a..=d {
                for c in b..=d {
                    for mono in monomials_of_degree(d, m) {
                        let v = rng.gen_range(-(bound as i64)..=bound as i64);
                        if v != 0 {
                            builder.set_lowered(a, b, c, mono, rat(v));
                        }
                    }
                }
            }
        }
        components.push(builder.raise());
    }
    FedosovJet::new(ConnectionJet::from_components(n, components)?)
}

/// Number of free coefficients of a compatible component of degree m:
/// C(2n+2, 3) symmetric triples times the monomial count.
pub fn compatible_component_dimension(n: usize, m: usize) -> crate::algebra::Int {
    crate::algebra::binomial((2 * n + 2) as u64, 3)
        * crate::algebra::binomial((2 * n + m - 1) as u64, (2 * n - 1) as i64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::jets::check_fedosov_jet;
    use num_traits::ToPrimitive;

    #[test]
    fn samples_are_valid_and_deterministic() {
        for n in 1..=2 {
            for k in 0..=2 {
                let a = random_compatible_jet(n, k, 7, 5).unwrap();
                let b = random_compatible_jet(n, k, 7, 5).unwrap();
                assert_eq!(a, b, "same seed, same jet");
                assert!(check_fedosov_jet(&a).is_valid());
                let c = random_compatible_jet(n, k, 8, 5).unwrap();
                assert_ne!(a, c, "different seed, different jet");
            }
        }
    }

    #[test]
    fn free_coefficient_counts() {
        // n=1 degree 0: the four symmetric lowered 3-tensors in 2 variables
        assert_eq!(compatible_component_dimension(1, 0).to_usize().unwrap(), 4);
        // n=2: 20 at degree 0, 80 at degree 1
        assert_eq!(compatible_component_dimension(2, 0).to_usize().unwrap(), 20);
        assert_eq!(compatible_component_dimension(2, 1).to_usize().unwrap(), 80);
    }

    #[test]
    fn lowered_support_matches_free_count() {
        // every lowered slot is free: filling all of them with ones gives
        // a valid jet whose lowered map has exactly that many entries
        use crate::jets::lowered_map;
        let jet = random_compatible_jet(2, 1, 3, 5).unwrap();
        let m0 = lowered_map(jet.form(), jet.connection().component(0));
        assert!(m0.len() <= 20);
        let m1 = lowered_map(jet.form(), jet.connection().component(1));
        assert!(m1.len() <= 80);
    }
}
