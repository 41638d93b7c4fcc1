use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::FiniteRing;
use crate::error::{Axiom, Error, Result};
use crate::limits::Limits;
use crate::set::Elem;

/// How thoroughly the element-level laws were checked.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Validation {
    /// Every pair and triple was checked.
    Exhaustive,
    /// Pairs or triples were sampled above the exhaustive caps.
    Sampled,
    /// Built by a construction that preserves the laws; not re-checked.
    Trusted,
}

pub(crate) const SAMPLE_SEED: u64 = 0x5eed_0f_a11;

fn violation(ring: &FiniteRing, axiom: Axiom, xs: &[Elem]) -> Error {
    Error::AxiomViolation {
        axiom,
        witness: xs.iter().map(|&x| ring.coords(x)).collect(),
    }
}

pub(crate) fn check_ring_laws(ring: &FiniteRing, limits: &Limits) -> Result<Validation> {
    let n = ring.size() as Elem;
    let one = ring.one();
    for x in 0..n {
        if ring.mul(one, x) != x {
            return Err(violation(ring, Axiom::Identity, &[one, x]));
        }
    }
    let mut level = Validation::Exhaustive;
    let mut rng = ChaCha8Rng::seed_from_u64(SAMPLE_SEED);

    let pair = |a: Elem, b: Elem| -> Result<()> {
        if ring.mul(a, b) != ring.mul(b, a) {
            return Err(violation(ring, Axiom::Commutativity, &[a, b]));
        }
        Ok(())
    };
    if ring.size() <= limits.exhaustive_pairs {
        for a in 0..n {
            for b in a + 1..n {
                pair(a, b)?;
            }
        }
    } else {
        level = Validation::Sampled;
        for _ in 0..limits.samples {
            pair(rng.random_range(0..n), rng.random_range(0..n))?;
        }
    }

    let triple = |a: Elem, b: Elem, c: Elem| -> Result<()> {
        if ring.mul(ring.mul(a, b), c) != ring.mul(a, ring.mul(b, c)) {
            return Err(violation(ring, Axiom::Associativity, &[a, b, c]));
        }
        if ring.mul(a, ring.add(b, c)) != ring.add(ring.mul(a, b), ring.mul(a, c)) {
            return Err(violation(ring, Axiom::Distributivity, &[a, b, c]));
        }
        Ok(())
    };
    if ring.size() <= limits.exhaustive_triples {
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    triple(a, b, c)?;
                }
            }
        }
    } else {
        level = Validation::Sampled;
        for _ in 0..limits.samples {
            triple(
                rng.random_range(0..n),
                rng.random_range(0..n),
                rng.random_range(0..n),
            )?;
        }
    }
    Ok(level)
}
