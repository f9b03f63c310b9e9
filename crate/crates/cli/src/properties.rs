//! The randomized property suite.
//!
//! Every family draws its own instance from a generator seeded by
//! `(seed, instance, family)`, so results do not depend on the order in which
//! instances run or on the number of worker threads.

use rayon::prelude::*;
use serde::Serialize;
use stanley::{
    box_invariance_check, depth, sdepth_exact, Characteristic, ExponentVector, MonomialIdeal,
    QuotientModule, SearchConfig, StanleyDecomposition,
};

use crate::generator::Generator;
use crate::pipeline::{cor_main_certify, Certificate};

/// `Ok(true)` checked, `Ok(false)` hypothesis not met, `Err` a failure.
type Check = std::result::Result<bool, String>;

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn engine<T>(r: stanley::Result<T>) -> std::result::Result<T, String> {
    r.map_err(|e| format!("engine error: {e}"))
}

/// Exact Stanley depth with its certificate checked.
fn sd(q: &QuotientModule) -> std::result::Result<(usize, StanleyDecomposition), String> {
    let r = engine(sdepth_exact(q))?;
    let d = engine(r.decomposition())?;
    let v = engine(d.validate())?;
    ensure!(v == r.value, "certificate of {q} validates to {v}, search said {}", r.value);
    Ok((r.value, d))
}

fn dp(q: &QuotientModule) -> std::result::Result<usize, String> {
    Ok(engine(depth(q, Characteristic::Zero))?.depth)
}

fn x(n: usize, k: usize) -> ExponentVector {
    ExponentVector::variable(n, k)
}

/// A nonzero `T/B` with `B = T ∩ I` for a random `I`; `T` is the unit ideal
/// half of the time.
fn general_module(g: &mut Generator, n: usize) -> QuotientModule {
    loop {
        let top = if g.coin() {
            MonomialIdeal::unit(n)
        } else {
            g.nonzero_ideal(n)
        };
        let bottom = top.intersect(&g.ideal(n)).expect("arity matches");
        let q = QuotientModule::new(top, bottom).expect("bottom is inside top");
        if !q.is_zero() {
            return q;
        }
    }
}

/// A variable regular on `q`, scanning from a random start.
fn regular_variable(g: &mut Generator, q: &QuotientModule) -> Option<usize> {
    let n = q.arity();
    let start = g.index(n);
    (0..n)
        .map(|i| (start + i) % n)
        .find(|&k| q.is_regular(&x(n, k)).unwrap_or(false))
}

fn restrict_drops_at_most_one(g: &mut Generator) -> Check {
    let n = g.arity();
    let q = QuotientModule::cyclic(g.ideal(n));
    let k = g.index(n);
    let (s, d) = sd(&q)?;
    let reduced = engine(q.adjoin_variable(k))?;
    let (s_red, _) = sd(&reduced)?;
    ensure!(s_red + 1 >= s, "sdepth {reduced} = {s_red} < sdepth {q} - 1 = {s} - 1");
    let r = engine(d.restrict_mod_variable(k))?;
    ensure!(r.target() == &reduced, "restricted target is {}", r.target());
    let v = engine(r.validate())?;
    ensure!(v + 1 >= s && v <= s_red, "restriction of {q} along x{} has sdepth {v}", k + 1);
    Ok(true)
}

fn regular_variable_equality(g: &mut Generator) -> Check {
    let n = g.arity();
    let q = QuotientModule::cyclic(g.ideal(n));
    let Some(k) = regular_variable(g, &q) else {
        return Ok(false);
    };
    let (s, _) = sd(&q)?;
    let (s_red, _) = sd(&engine(q.adjoin_variable(k))?)?;
    ensure!(s_red + 1 == s, "{q}, x{} regular: sdepth {s} but reduced {s_red}", k + 1);
    Ok(true)
}

fn lift_adds_one(g: &mut Generator) -> Check {
    let n = g.arity();
    let q = general_module(g, n);
    let Some(k) = regular_variable(g, &q) else {
        return Ok(false);
    };
    let reduced = engine(q.quotient_by_monomial(&x(n, k)))?;
    let (s_red, d_red) = sd(&reduced)?;
    let (s, _) = sd(&q)?;
    ensure!(s_red < s, "{q}: sdepth M/xM = {s_red} is not below sdepth M = {s}");
    let lifted = engine(d_red.lift_regular_variable(&q, k))?;
    let v = engine(lifted.validate())?;
    ensure!(v == s_red + 1, "lift along x{} of {reduced} has sdepth {v}", k + 1);
    Ok(true)
}

fn depth_mod_variable(g: &mut Generator) -> Check {
    let n = g.arity();
    let q = QuotientModule::cyclic(g.ideal(n));
    let k = g.index(n);
    let d = dp(&q)?;
    let d_red = dp(&engine(q.adjoin_variable(k))?)?;
    ensure!(d_red + 1 >= d, "{q}: depth {d}, depth mod x{} = {d_red}", k + 1);
    Ok(true)
}

fn depth_of_colon(g: &mut Generator) -> Check {
    let n = g.arity();
    let i = g.ideal(n);
    let u = g.monomial(n);
    if engine(i.contains(&u))? {
        return Ok(false);
    }
    let d = dp(&QuotientModule::cyclic(i.clone()))?;
    let c = engine(i.colon(&u))?;
    let dc = dp(&QuotientModule::cyclic(c.clone()))?;
    ensure!(dc >= d, "depth S/{c} = {dc} < depth S/{i} = {d}");
    Ok(true)
}

fn short_exact_sequence(g: &mut Generator) -> Check {
    let n = g.arity();
    let i = g.ideal(n);
    let k = g.index(n);
    if engine(i.contains(&x(n, k)))? {
        return Ok(false);
    }
    let m_mod = QuotientModule::cyclic(i.clone());
    let u = dp(&QuotientModule::cyclic(engine(i.colon(&x(n, k)))?))?;
    let m = dp(&m_mod)?;
    let nn = dp(&engine(m_mod.adjoin_variable(k))?)?;
    ensure!(u >= m.min(nn + 1), "{i}, x{}: depths U={u} M={m} N={nn}", k + 1);
    if m < nn {
        ensure!(u == m, "{i}, x{}: depth M < depth N but U={u} M={m}", k + 1);
    }
    if m > nn {
        ensure!(u == nn + 1, "{i}, x{}: depth M > depth N but U={u} N={nn}", k + 1);
    }
    Ok(true)
}

fn filtration_minimum(g: &mut Generator) -> Check {
    let n = g.arity();
    let i = g.ideal(n);
    let j = engine(i.sum(&g.nonzero_ideal(n)))?;
    let t = if g.coin() {
        MonomialIdeal::unit(n)
    } else {
        engine(j.sum(&g.nonzero_ideal(n)))?
    };
    let lower = engine(QuotientModule::new(j.clone(), i.clone()))?;
    let upper = engine(QuotientModule::new(t.clone(), j.clone()))?;
    if lower.is_zero() || upper.is_zero() {
        return Ok(false);
    }
    let whole = engine(QuotientModule::new(t.clone(), i.clone()))?;
    let (s_lower, d_lower) = sd(&lower)?;
    let (s_upper, d_upper) = sd(&upper)?;
    let (s_whole, _) = sd(&whole)?;
    let floor = s_lower.min(s_upper);
    ensure!(s_whole >= floor, "sdepth {whole} = {s_whole} < min({s_lower}, {s_upper})");
    let glued = engine(StanleyDecomposition::chain_concat(&[i, j, t], &[d_lower, d_upper]))?;
    let v = engine(glued.validate())?;
    ensure!(v == floor, "chain decomposition of {whole} has sdepth {v}, expected {floor}");
    Ok(true)
}

fn block_product(g: &mut Generator) -> Check {
    let a = g.index(3) + 1;
    let b = g.index(4 - a) + 1;
    let i = g.ideal(a);
    let j = g.ideal(b);
    let (s1, d1) = sd(&QuotientModule::cyclic(i.clone()))?;
    let (s2, d2) = sd(&QuotientModule::cyclic(j.clone()))?;
    let both = engine(engine(i.embed(a + b, 0))?.sum(&engine(j.embed(a + b, a))?))?;
    let product = QuotientModule::cyclic(both);
    let (s, _) = sd(&product)?;
    ensure!(s1 + s2 <= s, "sdepth {product} = {s} < {s1} + {s2}");
    let t = engine(d1.tensor(&d2))?;
    ensure!(t.target() == &product, "tensor target is {}", t.target());
    let v = engine(t.validate())?;
    ensure!(v == s1 + s2, "tensor decomposition has sdepth {v}, expected {}", s1 + s2);
    let (e1, e2) = (dp(&QuotientModule::cyclic(i))?, dp(&QuotientModule::cyclic(j))?);
    let e = dp(&product)?;
    ensure!(e == e1 + e2, "depth {product} = {e} but factors give {e1} + {e2}");
    Ok(true)
}

fn complete_intersection(g: &mut Generator) -> Check {
    let n = g.arity();
    let (i, m) = g.complete_intersection(n);
    let (s, _) = sd(&QuotientModule::cyclic(i.clone()))?;
    ensure!(s == n - m, "sdepth S/{i} = {s}, expected {}", n - m);
    let (si, _) = sd(&QuotientModule::ideal(i.clone()))?;
    ensure!(si > n - m, "sdepth {i} = {si}, expected at least {}", n - m + 1);
    Ok(true)
}

fn full_sdepth_is_free(g: &mut Generator) -> Check {
    let n = g.arity();
    let i = if g.index(4) == 0 {
        MonomialIdeal::zero(n)
    } else {
        g.ideal(n)
    };
    let (s, d) = sd(&QuotientModule::cyclic(i.clone()))?;
    ensure!((s == n) == i.is_zero(), "sdepth S/{i} = {s} with n = {n}");
    if s == n {
        ensure!(d.spaces().len() == 1, "free module split into {} spaces", d.spaces().len());
    }
    Ok(true)
}

fn box_invariance(g: &mut Generator) -> Check {
    let n = g.arity();
    let q = general_module(g, n);
    let g1 = q.default_corner();
    let mut bigger = g1.as_slice().to_vec();
    bigger[g.index(n)] += 1;
    let same = engine(box_invariance_check(&q, &g1, &bigger.clone().into(), &SearchConfig::default()))?;
    ensure!(same, "{q}: sdepth differs between corners {g1} and {:?}", bigger);
    Ok(true)
}

fn regular_monomial(g: &mut Generator) -> Check {
    let n = g.arity();
    let i = g.ideal(n);
    let q = QuotientModule::cyclic(i.clone());
    let regular: Vec<usize> = (0..n).filter(|&k| q.is_regular(&x(n, k)).unwrap_or(false)).collect();
    if regular.is_empty() {
        return Ok(false);
    }
    let raw = g.monomial(n);
    let mut u = vec![0u32; n];
    for &k in &regular {
        u[k] = raw.get(k);
    }
    if u.iter().all(|&e| e == 0) {
        u[regular[0]] = 1;
    }
    let u = ExponentVector::from(u);
    ensure!(engine(q.is_regular(&u))?, "{u} built from regular variables is not regular on {q}");
    let with_u = engine(i.sum(&engine(MonomialIdeal::new(n, vec![u.clone()]))?))?;
    let (s, _) = sd(&q)?;
    let (s_u, _) = sd(&QuotientModule::cyclic(with_u.clone()))?;
    ensure!(s_u + 1 >= s, "sdepth S/{with_u} = {s_u} < sdepth S/{i} - 1 = {s} - 1");
    Ok(true)
}

fn regular_reduction_depth(g: &mut Generator) -> Check {
    let n = g.arity();
    let q = general_module(g, n);
    let Some(k) = regular_variable(g, &q) else {
        return Ok(false);
    };
    let d = dp(&q)?;
    let d_red = dp(&engine(q.quotient_by_monomial(&x(n, k)))?)?;
    ensure!(d_red + 1 == d, "{q}: depth {d}, depth mod x{} = {d_red}", k + 1);
    Ok(true)
}

fn characteristic_monotone(g: &mut Generator) -> Check {
    let n = g.arity();
    let q = general_module(g, n);
    let r0 = engine(depth(&q, Characteristic::Zero))?;
    ensure!(r0.depth + r0.projective_dimension == n, "{q}: depth + pd != n");
    for p in [2, 3] {
        let rp = engine(depth(&q, Characteristic::Prime(p)))?;
        ensure!(rp.depth <= r0.depth, "{q}: depth in char {p} is {} > {}", rp.depth, r0.depth);
    }
    Ok(true)
}

fn certify(g: &mut Generator) -> Check {
    let n = g.arity();
    let q = general_module(g, n);
    let r = engine(cor_main_certify(&q, Characteristic::Zero, &SearchConfig::default()))?;
    match &r.certificate {
        Certificate::Decomposition(d) => {
            ensure!(d.target() == &q, "certificate target is {}", d.target());
            let v = engine(d.validate())?;
            ensure!(v >= r.t, "{q}: certificate sdepth {v} < depth {}", r.t);
            Ok(true)
        }
        Certificate::Inapplicable { .. } => Ok(false),
    }
}

type Family = (&'static str, fn(&mut Generator) -> Check);

pub const FAMILIES: &[Family] = &[
    ("restrict-drops-at-most-one", restrict_drops_at_most_one),
    ("regular-variable-equality", regular_variable_equality),
    ("lift-adds-one", lift_adds_one),
    ("depth-mod-variable", depth_mod_variable),
    ("depth-of-colon", depth_of_colon),
    ("short-exact-sequence", short_exact_sequence),
    ("filtration-minimum", filtration_minimum),
    ("block-product", block_product),
    ("complete-intersection", complete_intersection),
    ("full-sdepth-is-free", full_sdepth_is_free),
    ("box-invariance", box_invariance),
    ("regular-monomial", regular_monomial),
    ("regular-reduction-depth", regular_reduction_depth),
    ("characteristic-monotone", characteristic_monotone),
    ("certify", certify),
];

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyTally {
    pub name: &'static str,
    pub checked: usize,
    pub skipped: usize,
    pub failures: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PropertyReport {
    pub seed: u64,
    pub instances: usize,
    pub families: Vec<FamilyTally>,
}

impl PropertyReport {
    pub fn passed(&self) -> bool {
        self.families.iter().all(|f| f.failures.is_empty())
    }
}

fn instance_seed(seed: u64, instance: usize, family: usize) -> u64 {
    seed.wrapping_mul(0x9E37_79B9_7F4A_7C15)
        .wrapping_add((instance as u64) << 8)
        .wrapping_add(family as u64)
}

/// Runs every family on `instances` random instances.
pub fn run_properties(seed: u64, instances: usize) -> PropertyReport {
    let outcomes: Vec<Vec<Check>> = (0..instances)
        .into_par_iter()
        .map(|i| {
            FAMILIES
                .iter()
                .enumerate()
                .map(|(f, (_, check))| check(&mut Generator::new(instance_seed(seed, i, f))))
                .collect()
        })
        .collect();
    let families = FAMILIES
        .iter()
        .enumerate()
        .map(|(f, (name, _))| {
            let mut tally = FamilyTally {
                name,
                checked: 0,
                skipped: 0,
                failures: Vec::new(),
            };
            for (i, row) in outcomes.iter().enumerate() {
                match &row[f] {
                    Ok(true) => tally.checked += 1,
                    Ok(false) => tally.skipped += 1,
                    Err(msg) => tally.failures.push(format!("instance {i}: {msg}")),
                }
            }
            tally
        })
        .collect();
    PropertyReport {
        seed,
        instances,
        families,
    }
}
