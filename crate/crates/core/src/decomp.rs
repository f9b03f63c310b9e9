//! Stanley spaces, Stanley decompositions and the transformations between
//! them: restriction modulo a variable, lifting along a regular variable,
//! tensor products over disjoint variable blocks and concatenation along a
//! chain of ideals.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::monomial::{ExponentVector, MonomialIdeal, QuotientModule};

/// The Stanley space `m·K[Z]`: all monomials `m·v` with `v` a monomial in the
/// variables of `Z`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct StanleySpace {
    rep: ExponentVector,
    zset: BTreeSet<usize>,
}

impl StanleySpace {
    pub fn new(rep: ExponentVector, zset: impl IntoIterator<Item = usize>) -> Result<Self> {
        let zset: BTreeSet<usize> = zset.into_iter().collect();
        if let Some(&k) = zset.iter().find(|&&k| k >= rep.arity()) {
            return Err(Error::VariableOutOfRange {
                index: k,
                arity: rep.arity(),
            });
        }
        Ok(StanleySpace { rep, zset })
    }

    pub fn rep(&self) -> &ExponentVector {
        &self.rep
    }

    pub fn zset(&self) -> &BTreeSet<usize> {
        &self.zset
    }

    pub fn dim(&self) -> usize {
        self.zset.len()
    }

    pub fn arity(&self) -> usize {
        self.rep.arity()
    }

    pub fn contains(&self, a: &ExponentVector) -> Result<bool> {
        a.check_arity(self.arity())?;
        Ok(self.contains_slice(a.as_slice()))
    }

    pub(crate) fn contains_slice(&self, a: &[u32]) -> bool {
        self.rep.as_slice().iter().zip(a).enumerate().all(|(j, (&r, &x))| {
            if self.zset.contains(&j) {
                x >= r
            } else {
                x == r
            }
        })
    }
}

impl fmt::Display for StanleySpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}·K[", self.rep)?;
        for (i, k) in self.zset.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "x{}", k + 1)?;
        }
        write!(f, "]")
    }
}

/// A claimed Stanley decomposition of a monomial quotient module.
///
/// Construction only checks arities; [`validate`](Self::validate) decides
/// whether the spaces really partition the monomials of the target.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StanleyDecomposition {
    target: QuotientModule,
    spaces: Vec<StanleySpace>,
}

impl StanleyDecomposition {
    pub fn new(target: QuotientModule, spaces: Vec<StanleySpace>) -> Result<Self> {
        for sp in &spaces {
            sp.rep.check_arity(target.arity())?;
        }
        Ok(StanleyDecomposition { target, spaces })
    }

    pub fn target(&self) -> &QuotientModule {
        &self.target
    }

    pub fn spaces(&self) -> &[StanleySpace] {
        &self.spaces
    }

    /// Minimum space dimension, without validating. `None` for an empty list.
    pub fn sdepth(&self) -> Option<usize> {
        self.spaces.iter().map(StanleySpace::dim).min()
    }

    /// Truncation box used by [`validate`](Self::validate): one more than the
    /// largest exponent named anywhere in the instance, per coordinate.
    pub fn validation_bound(&self) -> ExponentVector {
        let mut b = self.target.default_corner();
        for sp in &self.spaces {
            b = b.lcm(&sp.rep);
        }
        b.as_slice().iter().map(|e| e + 1).collect::<Vec<_>>().into()
    }

    /// Checks that the spaces partition the monomials of the target and
    /// returns the Stanley depth of the decomposition.
    ///
    /// Membership in every ideal and every space depends on coordinate `j`
    /// only through `min(a_j, B_j)` once `B_j` exceeds every exponent in the
    /// instance, so enumerating the box `[0, B]` decides the question.
    pub fn validate(&self) -> Result<usize> {
        self.target.require_nonzero()?;
        for sp in &self.spaces {
            if !self.target.member_slice(sp.rep.as_slice()) {
                return Err(Error::OutsideTarget {
                    witness: sp.rep.clone(),
                });
            }
        }
        let bound = self.validation_bound();
        let mut point = vec![0u32; bound.arity()];
        loop {
            self.check_point(&point)?;
            if !advance(&mut point, bound.as_slice()) {
                break;
            }
        }
        Ok(self.sdepth().expect("nonzero target has at least one space"))
    }

    fn check_point(&self, a: &[u32]) -> Result<()> {
        let mut owner: Option<usize> = None;
        for (i, sp) in self.spaces.iter().enumerate() {
            if sp.contains_slice(a) {
                if let Some(first) = owner {
                    return Err(Error::Overlap {
                        witness: a.to_vec().into(),
                        first,
                        second: i,
                    });
                }
                owner = Some(i);
            }
        }
        match (self.target.member_slice(a), owner) {
            (true, None) => Err(Error::NotCovered {
                witness: a.to_vec().into(),
            }),
            (false, Some(_)) => Err(Error::OutsideTarget {
                witness: a.to_vec().into(),
            }),
            _ => Ok(()),
        }
    }

    /// From a decomposition of `T/B`, builds one of
    /// `T/(B + (x_k) ∩ T)` (for `S/I` this is `S/(I, x_k)`).
    ///
    /// Spaces whose representative is divisible by `x_k` are dropped and `x_k`
    /// is removed from the others. The depth drops by at most one.
    pub fn restrict_mod_variable(&self, k: usize) -> Result<StanleyDecomposition> {
        self.target.check_variable(k)?;
        self.validate()
            .map_err(|e| Error::InvalidInput(format!("decomposition does not validate: {e}")))?;
        let target = self.target.adjoin_variable(k)?;
        let spaces = self
            .spaces
            .iter()
            .filter(|sp| sp.rep.get(k) == 0)
            .map(|sp| StanleySpace {
                rep: sp.rep.clone(),
                zset: sp.zset.iter().copied().filter(|&j| j != k).collect(),
            })
            .collect();
        let out = StanleyDecomposition { target, spaces };
        out.validate()?;
        Ok(out)
    }

    /// Lifts a decomposition of `M/x_kM` to one of `M`, for `x_k` regular on
    /// `M`, by adding `x_k` to every space.
    ///
    /// `self` must decompose `module.quotient_by_monomial(x_k)`; the result
    /// has depth exactly one more.
    pub fn lift_regular_variable(
        &self,
        module: &QuotientModule,
        k: usize,
    ) -> Result<StanleyDecomposition> {
        module.check_variable(k)?;
        if !module.variable_is_regular(k) {
            return Err(Error::NotRegular { index: k });
        }
        let expected = module.quotient_by_monomial(&ExponentVector::variable(module.arity(), k))?;
        if self.target != expected {
            return Err(Error::InvalidInput(format!(
                "decomposition target {} is not M/x_kM = {}",
                self.target, expected
            )));
        }
        if self.spaces.iter().any(|sp| sp.zset.contains(&k)) {
            return Err(Error::InvalidInput(format!(
                "variable {k} already occurs in a space"
            )));
        }
        self.validate()
            .map_err(|e| Error::InvalidInput(format!("decomposition does not validate: {e}")))?;
        let spaces = self
            .spaces
            .iter()
            .map(|sp| {
                let mut zset = sp.zset.clone();
                zset.insert(k);
                StanleySpace {
                    rep: sp.rep.clone(),
                    zset,
                }
            })
            .collect();
        let out = StanleyDecomposition {
            target: module.clone(),
            spaces,
        };
        out.validate()?;
        Ok(out)
    }

    /// Product decomposition of `S/(IS, JS)` from decompositions of `S₁/I`
    /// and `S₂/J`; the variables of `other` are numbered after those of `self`.
    pub fn tensor(&self, other: &StanleyDecomposition) -> Result<StanleyDecomposition> {
        for d in [self, other] {
            if !d.target.is_cyclic() {
                return Err(Error::InvalidInput(
                    "tensor expects decompositions of cyclic modules S/I".into(),
                ));
            }
            d.validate()
                .map_err(|e| Error::InvalidInput(format!("factor does not validate: {e}")))?;
        }
        let n = self.target.arity();
        let arity = n + other.target.arity();
        let bottom = self
            .target
            .bottom()
            .embed(arity, 0)?
            .sum(&other.target.bottom().embed(arity, n)?)?;
        let target = QuotientModule::cyclic(bottom);
        let mut spaces = Vec::with_capacity(self.spaces.len() * other.spaces.len());
        for u in &self.spaces {
            for v in &other.spaces {
                let mut rep = u.rep.as_slice().to_vec();
                rep.extend_from_slice(v.rep.as_slice());
                let zset = u
                    .zset
                    .iter()
                    .copied()
                    .chain(v.zset.iter().map(|j| j + n))
                    .collect();
                spaces.push(StanleySpace {
                    rep: rep.into(),
                    zset,
                });
            }
        }
        let out = StanleyDecomposition { target, spaces };
        out.validate()?;
        Ok(out)
    }

    /// Joins decompositions of the successive quotients `T_i/T_{i-1}` of a chain
    /// `T_0 ⊆ T_1 ⊆ … ⊆ T_r` into one decomposition of `T_r/T_0`.
    pub fn chain_concat(
        chain: &[MonomialIdeal],
        decomps: &[StanleyDecomposition],
    ) -> Result<StanleyDecomposition> {
        if chain.len() < 2 || decomps.len() != chain.len() - 1 {
            return Err(Error::InvalidInput(format!(
                "a chain of {} ideals needs {} decompositions, got {}",
                chain.len(),
                chain.len().saturating_sub(1),
                decomps.len()
            )));
        }
        for (i, pair) in chain.windows(2).enumerate() {
            if !pair[0].is_subset_of(&pair[1])? {
                return Err(Error::ChainBroken { index: i + 1 });
            }
        }
        let mut spaces = Vec::new();
        for (i, d) in decomps.iter().enumerate() {
            if d.target.top() != &chain[i + 1] || d.target.bottom() != &chain[i] {
                return Err(Error::InvalidInput(format!(
                    "decomposition {} is not over T_{}/T_{}",
                    i + 1,
                    i + 1,
                    i
                )));
            }
            d.validate().map_err(|e| {
                Error::InvalidInput(format!("decomposition {} does not validate: {e}", i + 1))
            })?;
            spaces.extend(d.spaces.iter().cloned());
        }
        let target = QuotientModule::new(chain[chain.len() - 1].clone(), chain[0].clone())?;
        let out = StanleyDecomposition { target, spaces };
        out.validate()?;
        Ok(out)
    }
}

/// Steps `point` to the next vector of the box `[0, bound]` in mixed radix.
/// Returns false after the last point.
pub(crate) fn advance(point: &mut [u32], bound: &[u32]) -> bool {
    for (p, &b) in point.iter_mut().zip(bound) {
        if *p < b {
            *p += 1;
            return true;
        }
        *p = 0;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(rep: &[u32], z: &[usize]) -> StanleySpace {
        StanleySpace::new(rep.to_vec().into(), z.iter().copied()).unwrap()
    }

    fn ideal(arity: usize, gens: &[&[u32]]) -> MonomialIdeal {
        MonomialIdeal::new(arity, gens.iter().map(|g| g.to_vec().into()).collect()).unwrap()
    }

    /// Independent check: count, for every point of a generous box, the
    /// spaces containing it using plain divisibility arithmetic.
    fn brute_force_ok(d: &StanleyDecomposition, bound: u32) -> bool {
        let n = d.target().arity();
        let total = (bound as usize + 1).pow(n as u32);
        for idx in 0..total {
            let mut a = vec![0u32; n];
            let mut r = idx;
            for x in a.iter_mut() {
                *x = (r % (bound as usize + 1)) as u32;
                r /= bound as usize + 1;
            }
            let in_top = d.target().top().gens().iter().any(|g| {
                g.as_slice().iter().zip(&a).all(|(x, y)| x <= y)
            });
            let in_bottom = d.target().bottom().gens().iter().any(|g| {
                g.as_slice().iter().zip(&a).all(|(x, y)| x <= y)
            });
            let hits = d
                .spaces()
                .iter()
                .filter(|s| {
                    (0..n).all(|j| {
                        let r = s.rep().get(j);
                        if s.zset().contains(&j) {
                            a[j] >= r
                        } else {
                            a[j] == r
                        }
                    })
                })
                .count();
            let want = usize::from(in_top && !in_bottom);
            if hits != want {
                return false;
            }
        }
        true
    }

    fn maximal_ideal_decomposition() -> StanleyDecomposition {
        StanleyDecomposition::new(
            QuotientModule::ideal(MonomialIdeal::maximal(3)),
            vec![
                sp(&[0, 0, 1], &[0, 2]),
                sp(&[1, 0, 0], &[0, 1]),
                sp(&[0, 1, 0], &[1, 2]),
                sp(&[1, 1, 1], &[0, 1, 2]),
            ],
        )
        .unwrap()
    }

    #[test]
    fn space_membership() {
        assert!(sp(&[0, 0], &[0, 1]).contains(&vec![3, 1].into()).unwrap());
        assert!(!sp(&[0, 0, 1], &[0, 2]).contains(&vec![1, 1, 0].into()).unwrap());
        assert!(sp(&[1, 1, 1], &[0, 1, 2])
            .contains(&vec![2, 3, 4].into())
            .unwrap());
        assert!(sp(&[1, 1], &[0]).contains(&vec![1].into()).is_err());
    }

    #[test]
    fn space_rejects_out_of_range_variable() {
        assert!(StanleySpace::new(vec![0, 0].into(), [2]).is_err());
    }

    #[test]
    fn validates_maximal_ideal_decomposition() {
        let d = maximal_ideal_decomposition();
        assert_eq!(d.validate().unwrap(), 2);
        assert!(brute_force_ok(&d, 3));
    }

    #[test]
    fn rejects_malformed_decomposition() {
        let m = QuotientModule::ideal(MonomialIdeal::maximal(3));
        // x·K[x,y,z] ⊕ y·K[y,z] ⊕ z·K[z] is a genuine decomposition of depth 1
        let good = StanleyDecomposition::new(
            m.clone(),
            vec![sp(&[1, 0, 0], &[0, 1, 2]), sp(&[0, 1, 0], &[1, 2]), sp(&[0, 0, 1], &[2])],
        )
        .unwrap();
        assert_eq!(good.validate().unwrap(), 1);
        assert!(brute_force_ok(&good, 3));

        let doubled = StanleyDecomposition::new(
            m.clone(),
            vec![sp(&[1, 0, 0], &[0, 1, 2]), sp(&[0, 1, 0], &[0, 1, 2]), sp(&[0, 0, 1], &[2])],
        )
        .unwrap();
        assert!(matches!(doubled.validate(), Err(Error::Overlap { .. })));
        assert!(!brute_force_ok(&doubled, 3));

        let gap = StanleyDecomposition::new(
            m,
            vec![sp(&[1, 0, 0], &[0, 1, 2]), sp(&[0, 1, 0], &[1]), sp(&[0, 0, 1], &[2])],
        )
        .unwrap();
        assert_eq!(
            gap.validate().unwrap_err(),
            Error::NotCovered { witness: vec![0, 1, 1].into() }
        );
        assert!(!brute_force_ok(&gap, 3));

        let overlap = StanleyDecomposition::new(
            QuotientModule::ring(1),
            vec![sp(&[0], &[0]), sp(&[1], &[0])],
        )
        .unwrap();
        match overlap.validate() {
            Err(Error::Overlap { witness, first, second }) => {
                assert_eq!(witness, vec![1].into());
                assert_eq!((first, second), (0, 1));
            }
            other => panic!("expected overlap, got {other:?}"),
        }

        let outside = StanleyDecomposition::new(
            QuotientModule::cyclic(ideal(1, &[&[2]])),
            vec![sp(&[0], &[0])],
        )
        .unwrap();
        assert!(matches!(outside.validate(), Err(Error::OutsideTarget { .. })));

        let rep_outside = StanleyDecomposition::new(
            QuotientModule::cyclic(ideal(1, &[&[1]])),
            vec![sp(&[0], &[]), sp(&[1], &[])],
        )
        .unwrap();
        assert_eq!(
            rep_outside.validate().unwrap_err(),
            Error::OutsideTarget { witness: vec![1].into() }
        );
    }

    #[test]
    fn validates_cyclic_atp_factor() {
        let i = ideal(4, &[&[1, 0, 1, 0], &[1, 0, 0, 1], &[0, 1, 1, 0], &[0, 1, 0, 1]]);
        let d = StanleyDecomposition::new(
            QuotientModule::cyclic(i),
            vec![
                sp(&[0, 0, 0, 0], &[0, 1]),
                sp(&[0, 0, 1, 0], &[2]),
                sp(&[0, 0, 0, 1], &[2, 3]),
            ],
        )
        .unwrap();
        assert_eq!(d.validate().unwrap(), 1);
        assert!(brute_force_ok(&d, 2));
    }

    #[test]
    fn restrict_examples() {
        let d = StanleyDecomposition::new(QuotientModule::ring(3), vec![sp(&[0, 0, 0], &[0, 1, 2])])
            .unwrap();
        let r = d.restrict_mod_variable(2).unwrap();
        assert_eq!(r.target(), &QuotientModule::cyclic(ideal(3, &[&[0, 0, 1]])));
        assert_eq!(r.spaces(), &[sp(&[0, 0, 0], &[0, 1])]);
        assert_eq!(r.validate().unwrap(), 2);

        // S/(xy) = K[x,z] ⊕ y·K[y,z]; modulo x: K[z] ⊕ y·K[y,z]
        let d = StanleyDecomposition::new(
            QuotientModule::cyclic(ideal(3, &[&[1, 1, 0]])),
            vec![sp(&[0, 0, 0], &[0, 2]), sp(&[0, 1, 0], &[1, 2])],
        )
        .unwrap();
        assert_eq!(d.validate().unwrap(), 2);
        let r = d.restrict_mod_variable(0).unwrap();
        assert_eq!(r.target(), &QuotientModule::cyclic(ideal(3, &[&[1, 0, 0]])));
        assert_eq!(r.spaces(), &[sp(&[0, 0, 0], &[2]), sp(&[0, 1, 0], &[1, 2])]);
        assert_eq!(r.validate().unwrap(), 1);
        assert!(brute_force_ok(&r, 3));

        let k = StanleyDecomposition::new(
            QuotientModule::cyclic(MonomialIdeal::maximal(2)),
            vec![sp(&[0, 0], &[])],
        )
        .unwrap();
        let r = k.restrict_mod_variable(0).unwrap();
        assert_eq!(r.spaces(), k.spaces());
        assert_eq!(r.validate().unwrap(), 0);
    }

    #[test]
    fn restrict_rejects_invalid_input() {
        let bad = StanleyDecomposition::new(QuotientModule::ring(2), vec![sp(&[0, 0], &[0])]).unwrap();
        assert!(matches!(
            bad.restrict_mod_variable(1),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn lift_examples() {
        let q = QuotientModule::ring(1);
        let dq = StanleyDecomposition::new(QuotientModule::cyclic(ideal(1, &[&[1]])), vec![sp(&[0], &[])])
            .unwrap();
        let lifted = dq.lift_regular_variable(&q, 0).unwrap();
        assert_eq!(lifted.spaces(), &[sp(&[0], &[0])]);
        assert_eq!(lifted.validate().unwrap(), 1);

        // S/(xy) lifted along z from K[x,y]/(xy) = K[x] ⊕ y·K[y]
        let q = QuotientModule::cyclic(ideal(3, &[&[1, 1, 0]]));
        let dq = StanleyDecomposition::new(
            q.quotient_by_monomial(&vec![0, 0, 1].into()).unwrap(),
            vec![sp(&[0, 0, 0], &[0]), sp(&[0, 1, 0], &[1])],
        )
        .unwrap();
        assert_eq!(dq.validate().unwrap(), 1);
        let lifted = dq.lift_regular_variable(&q, 2).unwrap();
        assert_eq!(lifted.spaces(), &[sp(&[0, 0, 0], &[0, 2]), sp(&[0, 1, 0], &[1, 2])]);
        assert_eq!(lifted.validate().unwrap(), 2);
    }

    #[test]
    fn lift_of_maximal_ideal_is_valid_but_not_optimal() {
        // M = (x,y,z), M/xM = (x,y,z)/(x²,xy,xz) has depth-0 decomposition
        let m = QuotientModule::ideal(MonomialIdeal::maximal(3));
        let mx = m.quotient_by_monomial(&vec![1, 0, 0].into()).unwrap();
        let dq = StanleyDecomposition::new(
            mx.clone(),
            vec![sp(&[1, 0, 0], &[]), sp(&[0, 1, 0], &[1]), sp(&[0, 0, 1], &[1, 2])],
        )
        .unwrap();
        assert_eq!(dq.validate().unwrap(), 0);
        let lifted = dq.lift_regular_variable(&m, 0).unwrap();
        assert_eq!(lifted.validate().unwrap(), 1);

        // A decomposition of the x-free part only, i.e. of the adjoin-variable
        // quotient, misses the monomials x^a and is refused.
        let adjoined = m.adjoin_variable(0).unwrap();
        let partial = StanleyDecomposition::new(
            adjoined,
            vec![sp(&[0, 1, 0], &[1]), sp(&[0, 0, 1], &[1, 2])],
        )
        .unwrap();
        assert!(partial.validate().is_ok());
        assert!(matches!(
            partial.lift_regular_variable(&m, 0),
            Err(Error::InvalidInput(_))
        ));
        // Forcing the spaces onto M directly shows the gap.
        let forced = StanleyDecomposition::new(
            m.clone(),
            vec![sp(&[0, 1, 0], &[0, 1]), sp(&[0, 0, 1], &[0, 1, 2])],
        )
        .unwrap();
        assert!(matches!(forced.validate(), Err(Error::NotCovered { .. })));
    }

    #[test]
    fn lift_requires_regularity() {
        let q = QuotientModule::cyclic(ideal(2, &[&[2, 0], &[1, 1]]));
        let dq = StanleyDecomposition::new(
            q.quotient_by_monomial(&vec![1, 0].into()).unwrap(),
            vec![sp(&[0, 0], &[1])],
        )
        .unwrap();
        assert_eq!(
            dq.lift_regular_variable(&q, 0).unwrap_err(),
            Error::NotRegular { index: 0 }
        );
    }

    #[test]
    fn tensor_examples() {
        let xsq = QuotientModule::cyclic(ideal(1, &[&[2]]));
        let d = StanleyDecomposition::new(xsq, vec![sp(&[0], &[]), sp(&[1], &[])]).unwrap();
        let t = d.tensor(&d).unwrap();
        assert_eq!(t.spaces().len(), 4);
        assert_eq!(t.target(), &QuotientModule::cyclic(ideal(2, &[&[2, 0], &[0, 2]])));
        assert_eq!(t.validate().unwrap(), 0);

        let free = StanleyDecomposition::new(QuotientModule::ring(1), vec![sp(&[0], &[0])]).unwrap();
        let t = free.tensor(&free).unwrap();
        assert_eq!(t.spaces(), &[sp(&[0, 0], &[0, 1])]);
    }

    #[test]
    fn tensor_of_atp_factors() {
        let factor = || {
            let i = ideal(4, &[&[1, 0, 1, 0], &[1, 0, 0, 1], &[0, 1, 1, 0], &[0, 1, 0, 1]]);
            StanleyDecomposition::new(
                QuotientModule::cyclic(i),
                vec![
                    sp(&[0, 0, 0, 0], &[0, 1]),
                    sp(&[0, 0, 1, 0], &[2]),
                    sp(&[0, 0, 0, 1], &[2, 3]),
                ],
            )
            .unwrap()
        };
        let t = factor().tensor(&factor()).unwrap();
        assert_eq!(t.spaces().len(), 9);
        assert_eq!(t.validate().unwrap(), 2);
    }

    #[test]
    fn chain_examples() {
        let xy = ideal(2, &[&[1, 1]]);
        let zero = MonomialIdeal::zero(2);
        let unit = MonomialIdeal::unit(2);
        let d1 = StanleyDecomposition::new(
            QuotientModule::new(xy.clone(), zero.clone()).unwrap(),
            vec![sp(&[1, 1], &[0, 1])],
        )
        .unwrap();
        let d2 = StanleyDecomposition::new(
            QuotientModule::cyclic(xy.clone()),
            vec![sp(&[0, 0], &[0]), sp(&[0, 1], &[1])],
        )
        .unwrap();
        let chain = [zero.clone(), xy.clone(), unit.clone()];
        let c = StanleyDecomposition::chain_concat(&chain, &[d1.clone(), d2.clone()]).unwrap();
        assert_eq!(c.spaces().len(), 3);
        assert_eq!(c.target(), &QuotientModule::ring(2));
        assert_eq!(c.validate().unwrap(), 1);

        let single = StanleyDecomposition::chain_concat(&[zero.clone(), xy.clone()], &[d1.clone()]).unwrap();
        assert_eq!(single, d1);

        let broken = [xy.clone(), zero.clone(), unit];
        assert_eq!(
            StanleyDecomposition::chain_concat(&broken, &[d1.clone(), d2]).unwrap_err(),
            Error::ChainBroken { index: 1 }
        );
    }

    #[test]
    fn chain_with_nested_ideals() {
        // I = (xy, y²) ⊆ J = I + (x²) ⊆ S
        let i = ideal(2, &[&[1, 1], &[0, 2]]);
        let j = ideal(2, &[&[1, 1], &[0, 2], &[2, 0]]);
        let unit = MonomialIdeal::unit(2);
        let jd = StanleyDecomposition::new(
            QuotientModule::new(j.clone(), i.clone()).unwrap(),
            vec![sp(&[2, 0], &[0])],
        )
        .unwrap();
        assert_eq!(jd.validate().unwrap(), 1);
        let sd = StanleyDecomposition::new(
            QuotientModule::cyclic(j.clone()),
            vec![sp(&[0, 0], &[]), sp(&[1, 0], &[]), sp(&[0, 1], &[])],
        )
        .unwrap();
        assert_eq!(sd.validate().unwrap(), 0);
        let c = StanleyDecomposition::chain_concat(&[i.clone(), j, unit], &[jd, sd]).unwrap();
        assert_eq!(c.target(), &QuotientModule::cyclic(i));
        assert_eq!(c.validate().unwrap(), 0);
        assert!(brute_force_ok(&c, 4));
    }
}
