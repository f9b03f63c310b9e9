//! Monomials, monomial ideals and monomial quotient modules `T/B`.
//!
//! A monomial is stored as its exponent vector. Ideals keep a minimal,
//! lexicographically sorted generating set so that equal ideals compare and
//! serialize identically. Variable indices are 0-based throughout the API.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Exponent vector of a monomial `x^a` in a ring of fixed arity.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ExponentVector(Vec<u32>);

impl ExponentVector {
    pub fn new(entries: Vec<u32>) -> Self {
        ExponentVector(entries)
    }

    /// The monomial 1.
    pub fn one(arity: usize) -> Self {
        ExponentVector(vec![0; arity])
    }

    /// The variable `x_k`.
    pub fn variable(arity: usize, k: usize) -> Self {
        let mut v = vec![0; arity];
        v[k] = 1;
        ExponentVector(v)
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn get(&self, j: usize) -> u32 {
        self.0[j]
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Indices of variables with positive exponent.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(j, _)| j)
    }

    /// Componentwise `self <= other`, i.e. `self` divides `other`.
    pub fn divides(&self, other: &ExponentVector) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &ExponentVector) -> ExponentVector {
        ExponentVector(self.0.iter().zip(&other.0).map(|(&a, &b)| a.max(b)).collect())
    }

    pub fn mul(&self, other: &ExponentVector) -> ExponentVector {
        ExponentVector(self.0.iter().zip(&other.0).map(|(&a, &b)| a + b).collect())
    }

    /// Truncated difference `(self - other)^+`.
    pub fn saturating_sub(&self, other: &ExponentVector) -> ExponentVector {
        ExponentVector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(&a, &b)| a.saturating_sub(b))
                .collect(),
        )
    }

    pub(crate) fn check_arity(&self, arity: usize) -> Result<()> {
        if self.arity() != arity {
            return Err(Error::ArityMismatch {
                expected: arity,
                found: self.arity(),
            });
        }
        Ok(())
    }
}

impl From<Vec<u32>> for ExponentVector {
    fn from(v: Vec<u32>) -> Self {
        ExponentVector(v)
    }
}

impl<const N: usize> From<[u32; N]> for ExponentVector {
    fn from(v: [u32; N]) -> Self {
        ExponentVector(v.to_vec())
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

/// A monomial ideal given by its minimal generators.
///
/// The zero ideal has no generators; the unit ideal is generated by the
/// monomial 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct MonomialIdeal {
    arity: usize,
    gens: Vec<ExponentVector>,
}

fn minimalize(mut gens: Vec<ExponentVector>) -> Vec<ExponentVector> {
    // Sorting by degree first means a divisor is always seen before its multiples.
    gens.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)));
    gens.dedup();
    let mut kept: Vec<ExponentVector> = Vec::with_capacity(gens.len());
    for g in gens {
        if !kept.iter().any(|k| k.divides(&g)) {
            kept.push(g);
        }
    }
    kept.sort();
    kept
}

impl MonomialIdeal {
    /// Builds the ideal generated by `raw_gens`, dropping redundant generators.
    pub fn new(arity: usize, raw_gens: Vec<ExponentVector>) -> Result<Self> {
        for g in &raw_gens {
            g.check_arity(arity)?;
        }
        Ok(MonomialIdeal {
            arity,
            gens: minimalize(raw_gens),
        })
    }

    pub fn from_exponents<I, V>(arity: usize, gens: I) -> Result<Self>
    where
        I: IntoIterator<Item = V>,
        V: Into<ExponentVector>,
    {
        Self::new(arity, gens.into_iter().map(Into::into).collect())
    }

    pub fn zero(arity: usize) -> Self {
        MonomialIdeal {
            arity,
            gens: Vec::new(),
        }
    }

    pub fn unit(arity: usize) -> Self {
        MonomialIdeal {
            arity,
            gens: vec![ExponentVector::one(arity)],
        }
    }

    /// The ideal `(x_k)`.
    pub fn variable(arity: usize, k: usize) -> Self {
        MonomialIdeal {
            arity,
            gens: vec![ExponentVector::variable(arity, k)],
        }
    }

    /// The maximal ideal `(x_1, ..., x_n)`.
    pub fn maximal(arity: usize) -> Self {
        MonomialIdeal::new(
            arity,
            (0..arity).map(|k| ExponentVector::variable(arity, k)).collect(),
        )
        .expect("arity is consistent")
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn gens(&self) -> &[ExponentVector] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.len() == 1 && self.gens[0].is_one()
    }

    fn check_same_arity(&self, other: &MonomialIdeal) -> Result<()> {
        if self.arity != other.arity {
            return Err(Error::ArityMismatch {
                expected: self.arity,
                found: other.arity,
            });
        }
        Ok(())
    }

    pub fn contains(&self, a: &ExponentVector) -> Result<bool> {
        a.check_arity(self.arity)?;
        Ok(self.contains_unchecked(a))
    }

    pub(crate) fn contains_unchecked(&self, a: &ExponentVector) -> bool {
        self.contains_slice(a.as_slice())
    }

    pub(crate) fn contains_slice(&self, a: &[u32]) -> bool {
        self.gens
            .iter()
            .any(|g| g.0.iter().zip(a).all(|(x, y)| x <= y))
    }

    /// `self ⊆ other`, decided on generators.
    pub fn is_subset_of(&self, other: &MonomialIdeal) -> Result<bool> {
        self.check_same_arity(other)?;
        Ok(self.gens.iter().all(|g| other.contains_unchecked(g)))
    }

    pub fn sum(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_same_arity(other)?;
        let gens = self.gens.iter().chain(&other.gens).cloned().collect();
        Ok(MonomialIdeal {
            arity: self.arity,
            gens: minimalize(gens),
        })
    }

    pub fn intersect(&self, other: &MonomialIdeal) -> Result<MonomialIdeal> {
        self.check_same_arity(other)?;
        let gens = self
            .gens
            .iter()
            .flat_map(|a| other.gens.iter().map(move |b| a.lcm(b)))
            .collect();
        Ok(MonomialIdeal {
            arity: self.arity,
            gens: minimalize(gens),
        })
    }

    /// The colon ideal `(I : u)`.
    pub fn colon(&self, u: &ExponentVector) -> Result<MonomialIdeal> {
        u.check_arity(self.arity)?;
        let gens = self.gens.iter().map(|g| g.saturating_sub(u)).collect();
        Ok(MonomialIdeal {
            arity: self.arity,
            gens: minimalize(gens),
        })
    }

    /// The ideal `u·I`.
    pub fn scale(&self, u: &ExponentVector) -> Result<MonomialIdeal> {
        u.check_arity(self.arity)?;
        Ok(MonomialIdeal {
            arity: self.arity,
            gens: self.gens.iter().map(|g| g.mul(u)).collect(),
        })
    }

    /// Re-embeds the ideal into a ring with `arity` variables, mapping
    /// variable `j` to `j + offset`.
    pub fn embed(&self, arity: usize, offset: usize) -> Result<MonomialIdeal> {
        if offset + self.arity > arity {
            return Err(Error::ArityMismatch {
                expected: arity,
                found: offset + self.arity,
            });
        }
        let gens = self
            .gens
            .iter()
            .map(|g| {
                let mut v = vec![0; arity];
                v[offset..offset + self.arity].copy_from_slice(g.as_slice());
                ExponentVector(v)
            })
            .collect();
        Ok(MonomialIdeal {
            arity,
            gens: minimalize(gens),
        })
    }

    /// Largest exponent of each variable over all generators.
    pub fn max_exponents(&self) -> ExponentVector {
        let mut out = vec![0; self.arity];
        for g in &self.gens {
            for (o, &e) in out.iter_mut().zip(g.as_slice()) {
                *o = (*o).max(e);
            }
        }
        ExponentVector(out)
    }
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ">")
    }
}

/// The module `top/bottom` for monomial ideals `bottom ⊆ top`.
///
/// Its monomials, which form a K-basis, are those in `top` but not in `bottom`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct QuotientModule {
    top: MonomialIdeal,
    bottom: MonomialIdeal,
}

impl QuotientModule {
    pub fn new(top: MonomialIdeal, bottom: MonomialIdeal) -> Result<Self> {
        top.check_same_arity(&bottom)?;
        if let Some(g) = bottom.gens.iter().find(|g| !top.contains_unchecked(g)) {
            return Err(Error::ContainmentViolated { witness: g.clone() });
        }
        Ok(QuotientModule { top, bottom })
    }

    /// `S/I`.
    pub fn cyclic(bottom: MonomialIdeal) -> Self {
        QuotientModule {
            top: MonomialIdeal::unit(bottom.arity),
            bottom,
        }
    }

    /// The ideal `I` as a module.
    pub fn ideal(top: MonomialIdeal) -> Self {
        QuotientModule {
            bottom: MonomialIdeal::zero(top.arity),
            top,
        }
    }

    /// The free module `S` itself.
    pub fn ring(arity: usize) -> Self {
        Self::cyclic(MonomialIdeal::zero(arity))
    }

    pub fn arity(&self) -> usize {
        self.top.arity
    }

    pub fn top(&self) -> &MonomialIdeal {
        &self.top
    }

    pub fn bottom(&self) -> &MonomialIdeal {
        &self.bottom
    }

    pub fn is_cyclic(&self) -> bool {
        self.top.is_unit()
    }

    pub fn is_zero(&self) -> bool {
        self.top.gens.iter().all(|g| self.bottom.contains_unchecked(g))
    }

    pub(crate) fn require_nonzero(&self) -> Result<()> {
        if self.is_zero() {
            return Err(Error::ZeroModule);
        }
        Ok(())
    }

    pub(crate) fn check_variable(&self, k: usize) -> Result<()> {
        if k >= self.arity() {
            return Err(Error::VariableOutOfRange {
                index: k,
                arity: self.arity(),
            });
        }
        Ok(())
    }

    /// Whether the monomial `a` is a nonzero basis element of the module.
    pub fn member(&self, a: &ExponentVector) -> Result<bool> {
        a.check_arity(self.arity())?;
        Ok(self.member_slice(a.as_slice()))
    }

    pub(crate) fn member_slice(&self, a: &[u32]) -> bool {
        self.top.contains_slice(a) && !self.bottom.contains_slice(a)
    }

    /// `M/uM`, i.e. `top / (bottom + u·top)`.
    pub fn quotient_by_monomial(&self, u: &ExponentVector) -> Result<QuotientModule> {
        u.check_arity(self.arity())?;
        if u.is_one() {
            return Err(Error::UnitMonomial);
        }
        let bottom = self.bottom.sum(&self.top.scale(u)?)?;
        Ok(QuotientModule {
            top: self.top.clone(),
            bottom,
        })
    }

    /// `top / (bottom + (x_k) ∩ top)`: kills every monomial divisible by `x_k`.
    ///
    /// For `S/I` this is `S/(I, x_k)` and agrees with
    /// [`quotient_by_monomial`](Self::quotient_by_monomial) at `x_k`.
    pub fn adjoin_variable(&self, k: usize) -> Result<QuotientModule> {
        self.check_variable(k)?;
        let killed = MonomialIdeal::variable(self.arity(), k).intersect(&self.top)?;
        Ok(QuotientModule {
            top: self.top.clone(),
            bottom: self.bottom.sum(&killed)?,
        })
    }

    /// Whether multiplication by `u` is injective on the module.
    ///
    /// A monomial is regular iff each variable of its support is, and `x_k`
    /// is regular iff `(bottom : x_k) ∩ top ⊆ bottom`.
    pub fn is_regular(&self, u: &ExponentVector) -> Result<bool> {
        u.check_arity(self.arity())?;
        if u.is_one() {
            return Err(Error::UnitMonomial);
        }
        for k in u.support() {
            if !self.variable_is_regular(k) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub(crate) fn variable_is_regular(&self, k: usize) -> bool {
        let x = ExponentVector::variable(self.arity(), k);
        let colon = self.bottom.colon(&x).expect("arity matches");
        let lifted = colon.intersect(&self.top).expect("arity matches");
        lifted.gens.iter().all(|g| self.bottom.contains_unchecked(g))
    }

    /// A maximal sequence of variables, regular in turn on `M`, `M/x_{k1}M`, ...
    ///
    /// Indices are scanned in ascending order and the scan restarts after each
    /// success, so the result is deterministic.
    pub fn variable_regular_sequence(&self) -> Result<Vec<usize>> {
        self.require_nonzero()?;
        let mut seq = Vec::new();
        let mut current = self.clone();
        'outer: loop {
            for k in 0..self.arity() {
                if seq.contains(&k) || !current.variable_is_regular(k) {
                    continue;
                }
                let next = current.quotient_by_monomial(&ExponentVector::variable(self.arity(), k))?;
                if next.is_zero() {
                    continue;
                }
                seq.push(k);
                current = next;
                continue 'outer;
            }
            break;
        }
        Ok(seq)
    }

    /// Default characteristic box: the componentwise maximum exponent over
    /// the generators of `top` and `bottom`.
    pub fn default_corner(&self) -> ExponentVector {
        self.top.max_exponents().lcm(&self.bottom.max_exponents())
    }
}

impl fmt::Display for QuotientModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} / {}", self.top, self.bottom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ev<const N: usize>(a: [u32; N]) -> ExponentVector {
        a.into()
    }

    fn ideal<const N: usize>(gens: &[[u32; N]]) -> MonomialIdeal {
        MonomialIdeal::from_exponents(N, gens.iter().copied()).unwrap()
    }

    fn brute_member(gens: &[ExponentVector], a: &[u32]) -> bool {
        gens.iter()
            .any(|g| g.as_slice().iter().zip(a).all(|(x, y)| x <= y))
    }

    fn box_points(arity: usize, bound: u32) -> Vec<Vec<u32>> {
        let mut out = vec![vec![]];
        for _ in 0..arity {
            out = out
                .into_iter()
                .flat_map(|p| {
                    (0..=bound).map(move |e| {
                        let mut q = p.clone();
                        q.push(e);
                        q
                    })
                })
                .collect();
        }
        out
    }

    #[test]
    fn construct_minimalizes() {
        let i = ideal(&[[2, 0], [1, 0]]);
        assert_eq!(i.gens(), &[ev([1, 0])]);
        assert!(MonomialIdeal::new(2, vec![]).unwrap().is_zero());
        let atp = ideal(&[[1, 0, 1, 0], [1, 0, 0, 1], [0, 1, 1, 0], [0, 1, 0, 1]]);
        assert_eq!(atp.gens().len(), 4);
    }

    #[test]
    fn construct_rejects_wrong_arity() {
        let err = MonomialIdeal::new(2, vec![ev([1, 0, 0])]).unwrap_err();
        assert_eq!(err, Error::ArityMismatch { expected: 2, found: 3 });
    }

    #[test]
    fn canonical_order_is_lexicographic() {
        let a = ideal(&[[0, 2], [1, 1], [2, 0]]);
        let b = ideal(&[[2, 0], [0, 2], [1, 1]]);
        assert_eq!(a, b);
        assert_eq!(a.gens(), &[ev([0, 2]), ev([1, 1]), ev([2, 0])]);
    }

    #[test]
    fn membership() {
        let xy = ideal(&[[1, 1, 0]]);
        assert!(xy.contains(&ev([1, 1, 1])).unwrap());
        assert!(!MonomialIdeal::zero(3).contains(&ev([4, 4, 4])).unwrap());
        let i = ideal(&[[2, 0], [1, 1]]);
        assert!(!i.contains(&ev([1, 0])).unwrap());
        assert!(i.contains(&ev([1, 0, 0])).is_err());
    }

    #[test]
    fn sum_examples() {
        assert_eq!(ideal(&[[1, 1]]).sum(&ideal(&[[1, 0]])).unwrap(), ideal(&[[1, 0]]));
        let i = ideal(&[[1, 1], [0, 2]]);
        assert_eq!(i.sum(&MonomialIdeal::zero(2)).unwrap(), i);
        let j = i.sum(&ideal(&[[2, 0]])).unwrap();
        assert_eq!(j.gens(), &[ev([0, 2]), ev([1, 1]), ev([2, 0])]);
    }

    #[test]
    fn intersect_examples() {
        // (x,y) ∩ (z,t); expected checked against box enumeration below
        let xy = ideal(&[[1, 0, 0, 0], [0, 1, 0, 0]]);
        let yz = ideal(&[[0, 1, 0, 0], [0, 0, 1, 0]]);
        let zt = ideal(&[[0, 0, 1, 0], [0, 0, 0, 1]]);
        let got = xy.intersect(&zt).unwrap();
        let expected = ideal(&[[1, 0, 1, 0], [1, 0, 0, 1], [0, 1, 1, 0], [0, 1, 0, 1]]);
        assert_eq!(got, expected);
        for p in box_points(4, 1) {
            let want = brute_member(xy.gens(), &p) && brute_member(zt.gens(), &p);
            assert_eq!(brute_member(expected.gens(), &p), want);
        }

        let triple = xy.intersect(&yz).unwrap().intersect(&zt).unwrap();
        let expected = ideal(&[[1, 0, 1, 0], [0, 1, 1, 0], [0, 1, 0, 1]]);
        assert_eq!(triple, expected);
        for p in box_points(4, 1) {
            let want = brute_member(xy.gens(), &p)
                && brute_member(yz.gens(), &p)
                && brute_member(zt.gens(), &p);
            assert_eq!(brute_member(expected.gens(), &p), want);
        }

        assert_eq!(xy.intersect(&MonomialIdeal::unit(4)).unwrap(), xy);
    }

    #[test]
    fn colon_examples() {
        let i = ideal(&[[2, 0, 0], [1, 1, 0]]);
        assert_eq!(i.colon(&ExponentVector::one(3)).unwrap(), i);
        let got = i.colon(&ev([1, 0, 0])).unwrap();
        assert_eq!(got, ideal(&[[1, 0, 0], [0, 1, 0]]));
        // brute force: a ∈ (I:x) iff x·a ∈ I
        for p in box_points(3, 2) {
            let shifted = ev([p[0] + 1, p[1], p[2]]);
            assert_eq!(
                got.contains(&ExponentVector::new(p.clone())).unwrap(),
                i.contains(&shifted).unwrap()
            );
        }
        let xy = ideal(&[[1, 1, 0]]);
        assert_eq!(xy.colon(&ev([0, 0, 1])).unwrap(), xy);
    }

    #[test]
    fn quotient_member_examples() {
        let q = QuotientModule::cyclic(ideal(&[[1, 1]]));
        assert!(q.member(&ev([1, 0])).unwrap());

        let top = ideal(&[[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0]]);
        let d1 = QuotientModule::new(top.clone(), ideal(&[[1, 0, 0, 1]])).unwrap();
        assert!(d1.member(&ev([1, 0, 0, 0])).unwrap());
        assert!(!d1.member(&ev([1, 0, 0, 1])).unwrap());

        let same = QuotientModule::new(top.clone(), top).unwrap();
        assert!(same.is_zero());
        for p in box_points(4, 2) {
            assert!(!same.member(&ExponentVector::new(p)).unwrap());
        }
    }

    #[test]
    fn containment_is_enforced() {
        let err = QuotientModule::new(ideal(&[[1, 0]]), ideal(&[[0, 1]])).unwrap_err();
        assert!(matches!(err, Error::ContainmentViolated { .. }));
    }

    #[test]
    fn quotient_by_monomial_examples() {
        let m = QuotientModule::ideal(MonomialIdeal::maximal(3));
        let q = m.quotient_by_monomial(&ev([1, 0, 0])).unwrap();
        assert_eq!(q.bottom(), &ideal(&[[2, 0, 0], [1, 1, 0], [1, 0, 1]]));
        assert_eq!(q.top(), m.top());

        let top = ideal(&[[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0]]);
        let d1 = QuotientModule::new(top, ideal(&[[1, 0, 0, 1]])).unwrap();
        let q = d1.quotient_by_monomial(&ev([1, 0, 0, 0])).unwrap();
        assert_eq!(
            q.bottom(),
            &ideal(&[[2, 0, 0, 0], [1, 1, 0, 0], [1, 0, 1, 0], [1, 0, 0, 1]])
        );

        let s = QuotientModule::ring(1);
        assert_eq!(
            s.quotient_by_monomial(&ev([1])).unwrap(),
            QuotientModule::cyclic(ideal(&[[1]]))
        );
        assert_eq!(
            s.quotient_by_monomial(&ev([0])).unwrap_err(),
            Error::UnitMonomial
        );
    }

    #[test]
    fn modes_agree_on_cyclic_modules() {
        let q = QuotientModule::cyclic(ideal(&[[1, 1, 0], [0, 2, 1]]));
        for k in 0..3 {
            assert_eq!(
                q.adjoin_variable(k).unwrap(),
                q.quotient_by_monomial(&ExponentVector::variable(3, k)).unwrap()
            );
        }
    }

    #[test]
    fn regularity_examples() {
        let m = QuotientModule::ideal(MonomialIdeal::maximal(3));
        assert!(m.is_regular(&ev([1, 0, 0])).unwrap());

        let top = ideal(&[[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0]]);
        let q = QuotientModule::new(top, ideal(&[[1, 1, 0, 0]])).unwrap();
        assert!(q.is_regular(&ev([0, 0, 1, 0])).unwrap());
        assert!(q.is_regular(&ev([0, 0, 0, 1])).unwrap());
        assert!(!q.is_regular(&ev([1, 0, 0, 0])).unwrap());
        assert!(q.is_regular(&ev([0, 0, 2, 3])).unwrap());
        assert!(!q.is_regular(&ev([1, 0, 2, 3])).unwrap());

        let r = QuotientModule::cyclic(ideal(&[[2, 0], [1, 1]]));
        assert!(!r.is_regular(&ev([1, 0])).unwrap());
        assert_eq!(r.is_regular(&ev([0, 0])).unwrap_err(), Error::UnitMonomial);
    }

    #[test]
    fn regular_sequence_examples() {
        assert_eq!(
            QuotientModule::ring(3).variable_regular_sequence().unwrap(),
            vec![0, 1, 2]
        );
        let top = ideal(&[[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0]]);
        let q = QuotientModule::new(top, ideal(&[[1, 1, 0, 0]])).unwrap();
        assert_eq!(q.variable_regular_sequence().unwrap(), vec![2, 3]);
        let r = QuotientModule::cyclic(ideal(&[
            [2, 0, 0, 0],
            [1, 1, 0, 0],
            [1, 0, 1, 0],
            [1, 0, 0, 1],
        ]));
        assert!(r.variable_regular_sequence().unwrap().is_empty());
        let zero = QuotientModule::cyclic(MonomialIdeal::unit(2));
        assert_eq!(zero.variable_regular_sequence().unwrap_err(), Error::ZeroModule);
    }

    #[test]
    fn embed_shifts_variables() {
        let i = ideal(&[[1, 1]]);
        let e = i.embed(4, 2).unwrap();
        assert_eq!(e.gens(), &[ev([0, 0, 1, 1])]);
    }
}
