//! Seeded random instances for the property suite.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use stanley::{ExponentVector, MonomialIdeal};

pub const MAX_ARITY: usize = 4;
pub const MAX_EXPONENT: u32 = 3;
pub const MAX_GENERATORS: usize = 6;

/// Deterministic source of small monomial ideals.
#[derive(Debug, Clone)]
pub struct Generator {
    rng: ChaCha8Rng,
}

impl Generator {
    pub fn new(seed: u64) -> Self {
        Generator {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn arity(&mut self) -> usize {
        self.rng.gen_range(1..=MAX_ARITY)
    }

    pub fn index(&mut self, n: usize) -> usize {
        self.rng.gen_range(0..n)
    }

    pub fn coin(&mut self) -> bool {
        self.rng.gen_bool(0.5)
    }

    /// A monomial other than 1.
    pub fn monomial(&mut self, arity: usize) -> ExponentVector {
        loop {
            let e: Vec<u32> = (0..arity)
                .map(|_| self.rng.gen_range(0..=MAX_EXPONENT))
                .collect();
            if e.iter().any(|&x| x > 0) {
                return e.into();
            }
        }
    }

    /// A proper monomial ideal with at most `MAX_GENERATORS` generators,
    /// possibly zero.
    pub fn ideal(&mut self, arity: usize) -> MonomialIdeal {
        let count = self.rng.gen_range(0..=MAX_GENERATORS);
        let gens = (0..count).map(|_| self.monomial(arity)).collect();
        MonomialIdeal::new(arity, gens).expect("arity matches")
    }

    /// A nonzero proper ideal.
    pub fn nonzero_ideal(&mut self, arity: usize) -> MonomialIdeal {
        loop {
            let i = self.ideal(arity);
            if !i.is_zero() {
                return i;
            }
        }
    }

    /// A monomial complete intersection: `m ≤ min(3, n)` generators with
    /// pairwise disjoint supports. Returns the ideal and `m`.
    pub fn complete_intersection(&mut self, arity: usize) -> (MonomialIdeal, usize) {
        let m = self.rng.gen_range(1..=arity.min(3));
        // assign every variable to one of the m generators or to none
        loop {
            let owner: Vec<Option<usize>> = (0..arity)
                .map(|_| {
                    let o = self.rng.gen_range(0..=m);
                    (o < m).then_some(o)
                })
                .collect();
            if (0..m).any(|g| !owner.contains(&Some(g))) {
                continue;
            }
            let gens = (0..m)
                .map(|g| {
                    owner
                        .iter()
                        .map(|&o| {
                            if o == Some(g) {
                                self.rng.gen_range(1..=MAX_EXPONENT)
                            } else {
                                0
                            }
                        })
                        .collect::<Vec<u32>>()
                        .into()
                })
                .collect();
            return (MonomialIdeal::new(arity, gens).expect("arity matches"), m);
        }
    }
}
