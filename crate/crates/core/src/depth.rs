//! Depth and projective dimension of `T/B` from multigraded Koszul homology.
//!
//! In multidegree `a` the Koszul complex `K(x; M)` has, in homological degree
//! `i`, one basis element `e_T` for every `i`-subset `T` of the variables with
//! `a - ε_T` a monomial of `M`. The differential sends `e_T` to
//! `Σ_{j∈T} sign(j,T) x_j e_{T∖j}`, so every slice is a small complex of
//! `{-1, 0, 1}` matrices. The projective dimension is the largest `i` with
//! `H_i(x; M) ≠ 0` and `depth = n - pd`.

use rayon::prelude::*;
use serde::Serialize;

use crate::decomp::advance;
use crate::error::{Error, Result};
use crate::linalg::{Characteristic, IntMatrix};
use crate::monomial::{ExponentVector, QuotientModule};

/// Degree `a` part of the Koszul complex of a monomial quotient module.
#[derive(Debug, Clone)]
pub struct KoszulSlice {
    degree: ExponentVector,
    /// `bases[i]` lists the subsets `T` (as bitmasks) with `|T| = i`.
    bases: Vec<Vec<u64>>,
    /// `boundaries[i]` is `∂_i : K_i → K_{i-1}` with rows indexed by `bases[i-1]`
    /// and columns by `bases[i]`; `boundaries[0]` is empty.
    boundaries: Vec<IntMatrix>,
}

/// `(-1)^{#{t ∈ T : t < j}}`
fn sign(j: usize, t: u64) -> i64 {
    if (t & ((1u64 << j) - 1)).count_ones() % 2 == 0 {
        1
    } else {
        -1
    }
}

fn shifted_member(module: &QuotientModule, a: &[u32], t: u64, scratch: &mut [u32]) -> bool {
    for (j, (s, &e)) in scratch.iter_mut().zip(a).enumerate() {
        let drop = ((t >> j) & 1) as u32;
        if e < drop {
            return false;
        }
        *s = e - drop;
    }
    module.member_slice(scratch)
}

impl KoszulSlice {
    pub fn new(module: &QuotientModule, degree: &ExponentVector) -> Result<Self> {
        degree.check_arity(module.arity())?;
        module.require_nonzero()?;
        let n = module.arity();
        if n >= 64 {
            return Err(Error::InvalidInput("Koszul slices support at most 63 variables".into()));
        }
        let a = degree.as_slice();
        let support: u64 = a
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .fold(0, |m, (j, _)| m | (1 << j));
        let mut bases = vec![Vec::new(); n + 1];
        let mut scratch = vec![0u32; n];
        // subsets of the support, in increasing numeric order
        let mut t: u64 = 0;
        loop {
            if shifted_member(module, a, t, &mut scratch) {
                bases[t.count_ones() as usize].push(t);
            }
            if t == support {
                break;
            }
            t = (t.wrapping_sub(support)) & support;
        }
        for b in &mut bases {
            b.sort_unstable();
        }
        let mut boundaries = vec![IntMatrix::zeros(0, bases[0].len())];
        for i in 1..=n {
            let rows = &bases[i - 1];
            let cols = &bases[i];
            let mut m = IntMatrix::zeros(rows.len(), cols.len());
            for (c, &tc) in cols.iter().enumerate() {
                for j in 0..n {
                    if (tc >> j) & 1 == 0 {
                        continue;
                    }
                    let face = tc & !(1 << j);
                    if let Ok(r) = rows.binary_search(&face) {
                        m.set(r, c, sign(j, tc));
                    }
                }
            }
            boundaries.push(m);
        }
        Ok(KoszulSlice {
            degree: degree.clone(),
            bases,
            boundaries,
        })
    }

    pub fn degree(&self) -> &ExponentVector {
        &self.degree
    }

    pub fn basis(&self, i: usize) -> &[u64] {
        &self.bases[i]
    }

    /// `∂_i`, for `1 <= i <= n`.
    pub fn boundary(&self, i: usize) -> &IntMatrix {
        &self.boundaries[i]
    }

    pub fn is_empty(&self) -> bool {
        self.bases.iter().all(Vec::is_empty)
    }

    /// Whether `∂_{i} ∘ ∂_{i+1} = 0` for every `i`.
    pub fn is_complex(&self) -> bool {
        (1..self.boundaries.len() - 1)
            .all(|i| self.boundaries[i].mul(&self.boundaries[i + 1]).is_zero())
    }

    /// Dimensions of `H_0, …, H_n` in this degree.
    pub fn homology(&self, characteristic: Characteristic) -> Vec<usize> {
        let n = self.bases.len() - 1;
        let ranks: Vec<usize> = (0..=n + 1)
            .map(|i| {
                if i == 0 || i > n {
                    0
                } else {
                    self.boundaries[i].rank(characteristic)
                }
            })
            .collect();
        (0..=n)
            .map(|i| self.bases[i].len() - ranks[i] - ranks[i + 1])
            .collect()
    }
}

/// Koszul homology dimensions `dim H_i(x; M)_a` for `i = 0..=n`.
pub fn koszul_slice_ranks(
    module: &QuotientModule,
    degree: &ExponentVector,
    characteristic: Characteristic,
) -> Result<Vec<usize>> {
    Ok(KoszulSlice::new(module, degree)?.homology(characteristic))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DepthResult {
    pub depth: usize,
    pub projective_dimension: usize,
    /// Lexicographically least degree carrying the top nonvanishing homology,
    /// with its homological index.
    pub witness: (ExponentVector, usize),
    pub characteristic: Characteristic,
}

/// Depth of `T/B` over a field of the given characteristic.
///
/// All Betti degrees of `T/B` lie in the lcm lattice of the generators of `T`
/// and `B`, so scanning the box `[0, g]` at the default corner is enough.
/// Degrees are processed in parallel on the current rayon pool.
pub fn depth(module: &QuotientModule, characteristic: Characteristic) -> Result<DepthResult> {
    module.require_nonzero()?;
    let n = module.arity();
    let corner = module.default_corner();
    let mut degrees = Vec::new();
    let mut point = vec![0u32; n];
    loop {
        degrees.push(ExponentVector::new(point.clone()));
        if !advance(&mut point, corner.as_slice()) {
            break;
        }
    }
    let per_degree: Vec<Option<(usize, ExponentVector)>> = degrees
        .into_par_iter()
        .map(|a| {
            let slice = KoszulSlice::new(module, &a)?;
            if slice.is_empty() {
                return Ok(None);
            }
            let h = slice.homology(characteristic);
            Ok(h.iter().rposition(|&d| d > 0).map(|i| (i, a)))
        })
        .collect::<Result<_>>()?;
    let (pd, witness) = per_degree
        .into_iter()
        .flatten()
        .max_by(|(i, a), (j, b)| i.cmp(j).then_with(|| b.cmp(a)))
        .ok_or(Error::ZeroModule)?;
    Ok(DepthResult {
        depth: n - pd,
        projective_dimension: pd,
        witness: (witness, pd),
        characteristic,
    })
}
