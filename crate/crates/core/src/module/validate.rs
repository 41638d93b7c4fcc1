use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::FiniteModule;
use crate::error::{Axiom, Error, Result};
use crate::limits::Limits;
use crate::set::Elem;

const SAMPLE_SEED: u64 = 0x5eed_0f_a12;

pub(crate) fn check_module_laws(m: &FiniteModule, limits: &Limits) -> Result<()> {
    let ring = m.ring();
    let rn = ring.size() as Elem;
    let mn = m.size() as Elem;
    let fail = |axiom, r: &[Elem], x: &[Elem]| Error::AxiomViolation {
        axiom,
        witness: r
            .iter()
            .map(|&r| ring.coords(r))
            .chain(x.iter().map(|&x| m.coords(x)))
            .collect(),
    };
    for x in 0..mn {
        if m.act(ring.one(), x) != x {
            return Err(fail(Axiom::Unitality, &[ring.one()], &[x]));
        }
    }
    let check = |r: Elem, s: Elem, x: Elem, y: Elem| -> Result<()> {
        if m.act(ring.add(r, s), x) != m.add(m.act(r, x), m.act(s, x)) {
            return Err(fail(Axiom::Bilinearity, &[r, s], &[x]));
        }
        if m.act(r, m.add(x, y)) != m.add(m.act(r, x), m.act(r, y)) {
            return Err(fail(Axiom::Bilinearity, &[r], &[x, y]));
        }
        if m.act(ring.mul(r, s), x) != m.act(r, m.act(s, x)) {
            return Err(fail(Axiom::ActionAssociativity, &[r, s], &[x]));
        }
        Ok(())
    };
    let cube = limits.exhaustive_triples.saturating_pow(3);
    let work = (rn as usize)
        .saturating_mul(rn as usize)
        .saturating_mul(mn as usize);
    if work <= cube {
        for r in 0..rn {
            for s in 0..rn {
                for x in 0..mn {
                    // pairs (x, y) are covered by letting y range with s's index
                    let y = ((s as usize + x as usize) % mn as usize) as Elem;
                    check(r, s, x, y)?;
                }
            }
        }
        for r in 0..rn {
            for x in 0..mn {
                for y in 0..mn {
                    if m.act(r, m.add(x, y)) != m.add(m.act(r, x), m.act(r, y)) {
                        return Err(fail(Axiom::Bilinearity, &[r], &[x, y]));
                    }
                }
            }
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(SAMPLE_SEED);
        for _ in 0..limits.samples {
            check(
                rng.random_range(0..rn),
                rng.random_range(0..rn),
                rng.random_range(0..mn),
                rng.random_range(0..mn),
            )?;
        }
    }
    Ok(())
}
