//! Deterministic parameter sampling for the congruence cases.
//!
//! Every draw derives from (seed, case id, p), so any reported failure is
//! reproducible from the command line alone. Boundary-adjacent residues
//! (1, -1, 2, -2) are forced in first when eligible; remaining draws are
//! rejection-sampled against the case's eligibility predicate, falling back
//! to a full scan of the residue space for small spaces.

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub struct ParamSampler {
    rng: ChaCha8Rng,
}

fn fnv(seed: u64, case_id: &str, p: u64) -> u64 {
    let mut h: u64 = 0xcbf29ce484222325;
    let mut eat = |b: u8| {
        h ^= b as u64;
        h = h.wrapping_mul(0x100000001b3);
    };
    for b in seed.to_le_bytes() {
        eat(b);
    }
    for b in case_id.bytes() {
        eat(b);
    }
    for b in p.to_le_bytes() {
        eat(b);
    }
    h
}

impl ParamSampler {
    pub fn new(seed: u64, case_id: &str, p: u64) -> Self {
        ParamSampler {
            rng: ChaCha8Rng::seed_from_u64(fnv(seed, case_id, p)),
        }
    }

    /// `count` residues in [0, space) satisfying `eligible`, boundary values
    /// first. Returns fewer (possibly none) when the eligible set is smaller.
    pub fn residues(
        &mut self,
        count: usize,
        space: u64,
        eligible: impl Fn(u64) -> bool,
    ) -> Vec<u64> {
        let mut out: Vec<u64> = Vec::with_capacity(count);
        for b in [1u64, space - 1, 2, space - 2] {
            if out.len() < count && b < space && eligible(b) && !out.contains(&b) {
                out.push(b);
            }
        }
        let mut misses = 0usize;
        while out.len() < count && misses < 64 * count {
            let v = self.rng.gen_range(0..space);
            if eligible(v) && !out.contains(&v) {
                out.push(v);
            } else {
                misses += 1;
            }
        }
        if out.len() < count && space <= 1 << 16 {
            for v in 0..space {
                if out.len() >= count {
                    break;
                }
                if eligible(v) && !out.contains(&v) {
                    out.push(v);
                }
            }
        }
        out
    }

    /// `count` pairs in [0, space)^2 satisfying `eligible`.
    pub fn pairs(
        &mut self,
        count: usize,
        space: u64,
        eligible: impl Fn(u64, u64) -> bool,
    ) -> Vec<(u64, u64)> {
        let mut out: Vec<(u64, u64)> = Vec::with_capacity(count);
        for b in [
            (1u64, 1u64),
            (space - 1, 1),
            (2, space - 2),
            (space - 2, 2),
        ] {
            if out.len() < count && b.0 < space && b.1 < space && eligible(b.0, b.1)
                && !out.contains(&b)
            {
                out.push(b);
            }
        }
        let mut misses = 0usize;
        while out.len() < count && misses < 64 * count {
            let v = (self.rng.gen_range(0..space), self.rng.gen_range(0..space));
            if eligible(v.0, v.1) && !out.contains(&v) {
                out.push(v);
            } else {
                misses += 1;
            }
        }
        out
    }

    /// A vector of `len` uniform residues in [0, modulus): the random
    /// p-adic sequences of the transform lemmas.
    pub fn residue_vec(&mut self, len: usize, modulus: u64) -> Vec<u64> {
        (0..len).map(|_| self.rng.gen_range(0..modulus)).collect()
    }
}
