//! Exact Stanley depth through interval partitions of the characteristic poset.
//!
//! For `M = T/B` and a corner `g` dominating every generator exponent, the
//! characteristic poset is the set of monomials of `M` inside the box `[0, g]`.
//! A partition of it into intervals `[lo, hi]` has value `min ρ(hi)`, where
//! `ρ(b)` counts the coordinates with `b_j = g_j`, and the Stanley depth of `M`
//! is the largest value of such a partition.
//!
//! Deciding whether some partition reaches a threshold `s` is an exact-cover
//! problem. Splitting an interval along a coordinate never lowers `ρ` below
//! `s` as long as the split keeps at least `s` saturated coordinates, so it is
//! enough to search intervals with `hi_j ∈ {lo_j, g_j}` and exactly
//! `max(0, s - #{j : lo_j = g_j})` coordinates raised to the corner.

use std::collections::HashSet;

use serde::Serialize;

use crate::decomp::{advance, StanleyDecomposition, StanleySpace};
use crate::error::{Error, Result};
use crate::monomial::{ExponentVector, QuotientModule};

pub const DEFAULT_NODE_BUDGET: u64 = 100_000_000;

/// The monomials of a module inside the box `[0, g]`, indexed densely.
#[derive(Debug, Clone)]
pub struct CharacteristicPoset {
    module: QuotientModule,
    corner: ExponentVector,
    strides: Vec<usize>,
    /// box index -> position in `elems`
    position: Vec<Option<usize>>,
    /// box indices of the elements, ascending (a linear extension of `≤`)
    elems: Vec<usize>,
}

impl CharacteristicPoset {
    /// Builds the poset at `corner`, or at the module's default corner.
    pub fn build(module: &QuotientModule, corner: Option<&ExponentVector>) -> Result<Self> {
        module.require_nonzero()?;
        let required = module.default_corner();
        let corner = match corner {
            Some(g) => {
                g.check_arity(module.arity())?;
                if !required.divides(g) {
                    return Err(Error::BadBox {
                        corner: g.clone(),
                        required,
                    });
                }
                g.clone()
            }
            None => required,
        };
        let mut strides = Vec::with_capacity(corner.arity());
        let mut size = 1usize;
        for &g in corner.as_slice() {
            strides.push(size);
            size = size
                .checked_mul(g as usize + 1)
                .ok_or_else(|| Error::InvalidInput("characteristic box too large".into()))?;
        }
        let mut position = vec![None; size];
        let mut elems = Vec::new();
        let mut point = vec![0u32; corner.arity()];
        let mut idx = 0usize;
        loop {
            if module.member_slice(&point) {
                position[idx] = Some(elems.len());
                elems.push(idx);
            }
            if !advance(&mut point, corner.as_slice()) {
                break;
            }
            idx += 1;
        }
        Ok(CharacteristicPoset {
            module: module.clone(),
            corner,
            strides,
            position,
            elems,
        })
    }

    pub fn module(&self) -> &QuotientModule {
        &self.module
    }

    pub fn corner(&self) -> &ExponentVector {
        &self.corner
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    fn index_of(&self, a: &[u32]) -> usize {
        a.iter().zip(&self.strides).map(|(&e, &s)| e as usize * s).sum()
    }

    fn point_of(&self, mut idx: usize) -> Vec<u32> {
        self.corner
            .as_slice()
            .iter()
            .map(|&g| {
                let e = idx % (g as usize + 1);
                idx /= g as usize + 1;
                e as u32
            })
            .collect()
    }

    fn in_box(&self, a: &[u32]) -> bool {
        a.iter().zip(self.corner.as_slice()).all(|(x, g)| x <= g)
    }

    pub fn contains(&self, a: &ExponentVector) -> bool {
        a.arity() == self.corner.arity()
            && self.in_box(a.as_slice())
            && self.position[self.index_of(a.as_slice())].is_some()
    }

    /// Elements in ascending dense-index order.
    pub fn elements(&self) -> impl Iterator<Item = ExponentVector> + '_ {
        self.elems.iter().map(|&i| self.point_of(i).into())
    }

    /// `ρ(b) = #{j : b_j = g_j}`.
    pub fn rho(&self, b: &ExponentVector) -> usize {
        b.as_slice()
            .iter()
            .zip(self.corner.as_slice())
            .filter(|(x, g)| x == g)
            .count()
    }

    /// Positions of all points of `[lo, hi]`, or `None` if one of them is
    /// not an element.
    fn interval_positions(&self, lo: &[u32], hi: &[u32]) -> Option<Vec<usize>> {
        let extent: Vec<u32> = hi.iter().zip(lo).map(|(h, l)| h - l).collect();
        let mut offset = vec![0u32; lo.len()];
        let mut out = Vec::new();
        loop {
            let idx: usize = lo
                .iter()
                .zip(&offset)
                .zip(&self.strides)
                .map(|((&l, &o), &s)| (l + o) as usize * s)
                .sum();
            out.push(self.position[idx]?);
            if !advance(&mut offset, &extent) {
                break;
            }
        }
        Some(out)
    }
}

/// A partition of a characteristic poset into intervals `[lo, hi]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IntervalPartition {
    intervals: Vec<(ExponentVector, ExponentVector)>,
}

impl IntervalPartition {
    pub fn new(intervals: Vec<(ExponentVector, ExponentVector)>) -> Self {
        IntervalPartition { intervals }
    }

    pub fn intervals(&self) -> &[(ExponentVector, ExponentVector)] {
        &self.intervals
    }

    /// Checks that the intervals lie in the poset and partition it.
    pub fn check(&self, poset: &CharacteristicPoset) -> Result<()> {
        let mut seen = vec![false; poset.len()];
        for (lo, hi) in &self.intervals {
            if lo.arity() != poset.corner.arity() || hi.arity() != poset.corner.arity() {
                return Err(Error::InvalidPartition(format!("interval [{lo}, {hi}] has wrong arity")));
            }
            if !lo.divides(hi) || !poset.in_box(hi.as_slice()) {
                return Err(Error::InvalidPartition(format!(
                    "[{lo}, {hi}] is not an interval of the box"
                )));
            }
            let positions = poset
                .interval_positions(lo.as_slice(), hi.as_slice())
                .ok_or_else(|| {
                    Error::InvalidPartition(format!("[{lo}, {hi}] leaves the poset"))
                })?;
            for p in positions {
                if std::mem::replace(&mut seen[p], true) {
                    return Err(Error::InvalidPartition(format!(
                        "element {} is covered twice",
                        ExponentVector::from(poset.point_of(poset.elems[p]))
                    )));
                }
            }
        }
        if let Some(p) = seen.iter().position(|s| !s) {
            return Err(Error::InvalidPartition(format!(
                "element {} is not covered",
                ExponentVector::from(poset.point_of(poset.elems[p]))
            )));
        }
        Ok(())
    }

    /// `min ρ(hi)` over the intervals.
    pub fn value(&self, poset: &CharacteristicPoset) -> Option<usize> {
        self.intervals.iter().map(|(_, hi)| poset.rho(hi)).min()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchConfig {
    pub node_budget: u64,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            node_budget: DEFAULT_NODE_BUDGET,
        }
    }
}

#[derive(Debug, Clone)]
pub struct SdepthResult {
    pub value: usize,
    pub partition: IntervalPartition,
    pub poset: CharacteristicPoset,
    /// Search nodes expanded over all thresholds.
    pub nodes: u64,
}

impl SdepthResult {
    /// The certificate as a Stanley decomposition of the module.
    pub fn decomposition(&self) -> Result<StanleyDecomposition> {
        partition_to_decomposition(&self.partition, &self.poset)
    }
}

/// Exact Stanley depth at the default corner and node budget.
pub fn sdepth_exact(module: &QuotientModule) -> Result<SdepthResult> {
    sdepth_with(module, None, &SearchConfig::default())
}

/// Exact Stanley depth with an explicit corner and node budget.
///
/// Thresholds are tried in increasing order up to a cheap upper bound; the
/// last feasible one is the Stanley depth, and the failed search one level
/// above is exhaustive.
pub fn sdepth_with(
    module: &QuotientModule,
    corner: Option<&ExponentVector>,
    config: &SearchConfig,
) -> Result<SdepthResult> {
    let poset = CharacteristicPoset::build(module, corner)?;
    let cap = upper_bound(&poset);
    let mut nodes = 0;
    let mut best: Option<(usize, IntervalPartition)> = None;
    for s in 0..=cap {
        let mut search = Search::new(&poset, s, config.node_budget.saturating_sub(nodes));
        let found = search.run();
        nodes += search.nodes;
        let found = found.map_err(|e| match e {
            Error::SearchLimitExceeded { .. } => Error::SearchLimitExceeded {
                budget: config.node_budget,
            },
            other => other,
        });
        match found? {
            Some(p) => best = Some((s, p)),
            None => break,
        }
    }
    let (value, partition) = best.expect("threshold 0 is always feasible");
    debug_assert_eq!(partition.value(&poset), Some(value));
    Ok(SdepthResult {
        value,
        partition,
        poset,
        nodes,
    })
}

/// Largest dimension of an interval starting at a minimal element, minimized
/// over the minimal elements. Every partition uses such an interval.
fn upper_bound(poset: &CharacteristicPoset) -> usize {
    let n = poset.corner.arity();
    let mut cap = n;
    for &idx in &poset.elems {
        let lo = poset.point_of(idx);
        let minimal = (0..n).all(|j| {
            if lo[j] == 0 {
                return true;
            }
            let mut below = lo.clone();
            below[j] -= 1;
            poset.position[poset.index_of(&below)].is_none()
        });
        if !minimal {
            continue;
        }
        let fixed = poset.rho(&lo.clone().into());
        let free: Vec<usize> = (0..n).filter(|&j| lo[j] < poset.corner.get(j)).collect();
        let best = (0..=free.len())
            .rev()
            .find(|&k| !intervals_at(poset, &lo, &free, k).is_empty())
            .unwrap_or(0);
        cap = cap.min(fixed + best);
    }
    cap
}

/// Intervals `[lo, hi]` inside the poset raising exactly `k` free coordinates
/// to the corner, largest first; ties keep the lexicographic subset order.
fn intervals_at(
    poset: &CharacteristicPoset,
    lo: &[u32],
    free: &[usize],
    k: usize,
) -> Vec<(Vec<u32>, Vec<usize>)> {
    let mut out = Vec::new();
    for_each_subset(free, k, &mut |z| {
        let mut hi = lo.to_vec();
        for &j in z {
            hi[j] = poset.corner.get(j);
        }
        if let Some(pos) = poset.interval_positions(lo, &hi) {
            out.push((hi, pos));
        }
    });
    out.sort_by(|a, b| b.1.len().cmp(&a.1.len()));
    out
}

fn for_each_subset(items: &[usize], k: usize, f: &mut dyn FnMut(&[usize])) {
    fn go(items: &[usize], k: usize, start: usize, acc: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if acc.len() == k {
            f(acc);
            return;
        }
        for i in start..items.len() {
            if items.len() - i < k - acc.len() {
                break;
            }
            acc.push(items[i]);
            go(items, k, i + 1, acc, f);
            acc.pop();
        }
    }
    go(items, k, 0, &mut Vec::with_capacity(k), f);
}

struct Candidate {
    hi: Vec<u32>,
    mask: Vec<u64>,
}

struct Search<'a> {
    poset: &'a CharacteristicPoset,
    words: usize,
    /// candidates[p]: intervals with lower corner at element p
    candidates: Vec<Vec<Candidate>>,
    /// for every element, the (start, candidate) pairs containing it
    containing: Vec<Vec<(usize, usize)>>,
    failed: HashSet<Vec<u64>>,
    chosen: Vec<(usize, usize)>,
    nodes: u64,
    budget: u64,
}

impl<'a> Search<'a> {
    fn new(poset: &'a CharacteristicPoset, threshold: usize, budget: u64) -> Self {
        let m = poset.len();
        let words = m.div_ceil(64).max(1);
        let n = poset.corner.arity();
        let mut candidates = Vec::with_capacity(m);
        let mut containing = vec![Vec::new(); m];
        for (p, &idx) in poset.elems.iter().enumerate() {
            let lo = poset.point_of(idx);
            let fixed = (0..n).filter(|&j| lo[j] == poset.corner.get(j)).count();
            let free: Vec<usize> = (0..n).filter(|&j| lo[j] < poset.corner.get(j)).collect();
            let need = threshold.saturating_sub(fixed);
            let list: Vec<Candidate> = if need > free.len() {
                Vec::new()
            } else {
                intervals_at(poset, &lo, &free, need)
                    .into_iter()
                    .map(|(hi, pos)| {
                        let mut mask = vec![0u64; words];
                        for q in pos {
                            mask[q / 64] |= 1 << (q % 64);
                        }
                        Candidate { hi, mask }
                    })
                    .collect()
            };
            for (c, cand) in list.iter().enumerate() {
                for q in bits(&cand.mask) {
                    containing[q].push((p, c));
                }
            }
            candidates.push(list);
        }
        Search {
            poset,
            words,
            candidates,
            containing,
            failed: HashSet::new(),
            chosen: Vec::new(),
            nodes: 0,
            budget,
        }
    }

    fn run(&mut self) -> Result<Option<IntervalPartition>> {
        if self.containing.iter().any(Vec::is_empty) {
            return Ok(None);
        }
        let mut covered = vec![0u64; self.words];
        if !self.dfs(&mut covered)? {
            return Ok(None);
        }
        let mut intervals: Vec<(ExponentVector, ExponentVector)> = self
            .chosen
            .iter()
            .map(|&(p, c)| {
                (
                    self.poset.point_of(self.poset.elems[p]).into(),
                    self.candidates[p][c].hi.clone().into(),
                )
            })
            .collect();
        intervals.sort();
        Ok(Some(IntervalPartition::new(intervals)))
    }

    fn first_uncovered(&self, covered: &[u64]) -> Option<usize> {
        let m = self.poset.len();
        for (w, &word) in covered.iter().enumerate() {
            let free = !word;
            if free != 0 {
                let p = w * 64 + free.trailing_zeros() as usize;
                return (p < m).then_some(p);
            }
        }
        None
    }

    fn disjoint(a: &[u64], b: &[u64]) -> bool {
        a.iter().zip(b).all(|(x, y)| x & y == 0)
    }

    /// Every uncovered element must still lie in some interval that avoids
    /// the covered set.
    fn coverable(&self, covered: &[u64]) -> bool {
        (0..self.poset.len())
            .filter(|&q| covered[q / 64] >> (q % 64) & 1 == 0)
            .all(|q| {
                self.containing[q]
                    .iter()
                    .any(|&(p, c)| Self::disjoint(&self.candidates[p][c].mask, covered))
            })
    }

    fn dfs(&mut self, covered: &mut Vec<u64>) -> Result<bool> {
        let Some(p) = self.first_uncovered(covered) else {
            return Ok(true);
        };
        if self.failed.contains(covered.as_slice()) {
            return Ok(false);
        }
        self.nodes += 1;
        if self.nodes > self.budget {
            return Err(Error::SearchLimitExceeded {
                budget: self.budget,
            });
        }
        if self.coverable(covered) {
            // p is the least uncovered element in a linear extension, so any
            // interval covering it must start at it.
            for c in 0..self.candidates[p].len() {
                if !Self::disjoint(&self.candidates[p][c].mask, covered) {
                    continue;
                }
                for (w, m) in covered.iter_mut().zip(&self.candidates[p][c].mask) {
                    *w |= m;
                }
                self.chosen.push((p, c));
                if self.dfs(covered)? {
                    return Ok(true);
                }
                self.chosen.pop();
                for (w, m) in covered.iter_mut().zip(&self.candidates[p][c].mask) {
                    *w &= !m;
                }
            }
        }
        self.failed.insert(covered.clone());
        Ok(false)
    }
}

fn bits(mask: &[u64]) -> impl Iterator<Item = usize> + '_ {
    mask.iter().enumerate().flat_map(|(w, &word)| {
        (0..64).filter(move |b| word >> b & 1 == 1).map(move |b| w * 64 + b)
    })
}

/// Turns an interval partition into a Stanley decomposition.
///
/// The interval `[lo, hi]` contributes the spaces `c·K[Z]` with
/// `Z = {j : hi_j = g_j}` and `c ∈ [lo, hi]` agreeing with `lo` on `Z`. For
/// intervals with `hi_j ∈ {lo_j, g_j}`, as produced by the search, this is the
/// single space `lo·K[Z]`.
pub fn partition_to_decomposition(
    partition: &IntervalPartition,
    poset: &CharacteristicPoset,
) -> Result<StanleyDecomposition> {
    partition.check(poset)?;
    let g = poset.corner.as_slice();
    let mut spaces = Vec::new();
    for (lo, hi) in &partition.intervals {
        let zset: Vec<usize> = (0..g.len()).filter(|&j| hi.get(j) == g[j]).collect();
        let extent: Vec<u32> = (0..g.len())
            .map(|j| if zset.contains(&j) { 0 } else { hi.get(j) - lo.get(j) })
            .collect();
        let mut offset = vec![0u32; g.len()];
        loop {
            let rep: Vec<u32> = lo.as_slice().iter().zip(&offset).map(|(l, o)| l + o).collect();
            spaces.push(StanleySpace::new(rep.into(), zset.iter().copied())?);
            if !advance(&mut offset, &extent) {
                break;
            }
        }
    }
    StanleyDecomposition::new(poset.module.clone(), spaces)
}

/// Whether the exact Stanley depth is the same at corners `g1 ≤ g2`.
pub fn box_invariance_check(
    module: &QuotientModule,
    g1: &ExponentVector,
    g2: &ExponentVector,
    config: &SearchConfig,
) -> Result<bool> {
    g1.check_arity(module.arity())?;
    g2.check_arity(module.arity())?;
    if !g1.divides(g2) {
        return Err(Error::BadBox {
            corner: g2.clone(),
            required: g1.clone(),
        });
    }
    let a = sdepth_with(module, Some(g1), config)?.value;
    let b = sdepth_with(module, Some(g2), config)?.value;
    Ok(a == b)
}
