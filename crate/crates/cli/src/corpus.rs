//! Regression corpus: the worked examples, the property suite and the
//! characteristic-dependent stress instance.

use std::fmt::Write as _;
use std::time::{Duration, Instant};

use serde::Serialize;
use stanley::{
    depth, sdepth_exact, Characteristic, MonomialIdeal, QuotientModule, StanleyDecomposition,
    StanleySpace,
};
use thiserror::Error;

use crate::pipeline::{cor_main_certify, Certificate};
use crate::properties::run_properties;

pub const PROPERTY_INSTANCES: usize = 200;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CorpusError {
    #[error("unknown suite {0:?} (expected paper, properties or stress)")]
    SuiteUnknown(String),
}

#[derive(Debug, Clone, Serialize)]
pub struct CriterionResult {
    pub id: u32,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    #[serde(skip)]
    pub elapsed: Duration,
}

#[derive(Debug, Clone, Serialize)]
pub struct CorpusReport {
    pub suite: String,
    pub criteria: Vec<CriterionResult>,
}

impl CorpusReport {
    pub fn passed(&self) -> bool {
        self.criteria.iter().all(|c| c.passed)
    }

    /// Machine-readable table. Timings are left out so that the output is
    /// identical across runs.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in &self.criteria {
            let _ = writeln!(
                out,
                "{} criterion {:>2} {:<28} {:>9.3}s  {}",
                if c.passed { "PASS" } else { "FAIL" },
                c.id,
                c.name,
                c.elapsed.as_secs_f64(),
                c.detail
            );
        }
        let passed = self.criteria.iter().filter(|c| c.passed).count();
        let _ = writeln!(out, "{}: {}/{} passed", self.suite, passed, self.criteria.len());
        out
    }
}

type Outcome = std::result::Result<String, String>;

fn engine<T>(r: stanley::Result<T>) -> std::result::Result<T, String> {
    r.map_err(|e| format!("engine error: {e}"))
}

fn expect_eq<T: PartialEq + std::fmt::Debug>(what: &str, got: T, want: T) -> std::result::Result<(), String> {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: got {got:?}, expected {want:?}"))
    }
}

fn ideal<const N: usize>(gens: &[[u32; N]]) -> MonomialIdeal {
    MonomialIdeal::from_exponents(N, gens.iter().copied()).expect("valid generators")
}

fn sdepth_of(q: &QuotientModule) -> std::result::Result<usize, String> {
    let r = engine(sdepth_exact(q))?;
    let v = engine(engine(r.decomposition())?.validate())?;
    expect_eq("certificate value", v, r.value)?;
    Ok(r.value)
}

fn depth0(q: &QuotientModule) -> std::result::Result<usize, String> {
    Ok(engine(depth(q, Characteristic::Zero))?.depth)
}

/// `z·K[x,z] ⊕ x·K[x,y] ⊕ y·K[y,z] ⊕ xyz·K[x,y,z]` for the ideal `(x, y, z)`.
pub fn maximal_ideal_decomposition() -> StanleyDecomposition {
    let sp = |rep: [u32; 3], vars: &[usize]| StanleySpace::new(rep.into(), vars.iter().copied()).expect("valid space");
    StanleyDecomposition::new(
        QuotientModule::ideal(MonomialIdeal::maximal(3)),
        vec![
            sp([0, 0, 1], &[0, 2]),
            sp([1, 0, 0], &[0, 1]),
            sp([0, 1, 0], &[1, 2]),
            sp([1, 1, 1], &[0, 1, 2]),
        ],
    )
    .expect("arity matches")
}

/// `(x1x3, x1x4, x2x3, x2x4)` on four of `arity` variables starting at `offset`.
pub fn block_ideal(arity: usize, offset: usize) -> MonomialIdeal {
    let base = ideal(&[[1, 0, 1, 0], [1, 0, 0, 1], [0, 1, 1, 0], [0, 1, 0, 1]]);
    base.embed(arity, offset).expect("block fits")
}

/// `S/(IS, JS)` in eight variables, `I` and `J` copies of [`block_ideal`].
pub fn product_module() -> QuotientModule {
    QuotientModule::cyclic(block_ideal(8, 0).sum(&block_ideal(8, 4)).expect("same arity"))
}

/// The seventeen-space decomposition of [`product_module`].
pub fn product_decomposition() -> StanleyDecomposition {
    // (representative variables, space variables), numbered from 1
    let spaces: [(&[usize], &[usize]); 17] = [
        (&[], &[1, 2, 5]),
        (&[3], &[3, 5, 6]),
        (&[4], &[4, 5, 6]),
        (&[6], &[1, 2, 6]),
        (&[7], &[1, 2, 7]),
        (&[8], &[1, 2, 8]),
        (&[3, 4], &[3, 4, 5]),
        (&[3, 7], &[3, 7, 8]),
        (&[3, 8], &[3, 4, 8]),
        (&[4, 7], &[3, 4, 7]),
        (&[4, 8], &[4, 7, 8]),
        (&[5, 6], &[1, 5, 6]),
        (&[7, 8], &[1, 7, 8]),
        (&[2, 5, 6], &[1, 2, 5, 6]),
        (&[3, 4, 6], &[3, 4, 5, 6]),
        (&[2, 7, 8], &[1, 2, 7, 8]),
        (&[3, 4, 7, 8], &[3, 4, 7, 8]),
    ];
    let spaces = spaces
        .iter()
        .map(|(rep, vars)| {
            let mut e = vec![0u32; 8];
            for &r in *rep {
                e[r - 1] += 1;
            }
            StanleySpace::new(e.into(), vars.iter().map(|v| v - 1)).expect("valid space")
        })
        .collect();
    StanleyDecomposition::new(product_module(), spaces).expect("arity matches")
}

/// Facets of the six-vertex triangulation of the real projective plane.
pub const RP2_FACETS: [[usize; 3]; 10] = [
    [1, 2, 3],
    [1, 3, 4],
    [1, 4, 5],
    [1, 5, 6],
    [1, 2, 6],
    [2, 3, 5],
    [2, 4, 5],
    [2, 4, 6],
    [3, 4, 6],
    [3, 5, 6],
];

/// Stanley-Reisner ideal of [`RP2_FACETS`]: every edge is a face, so the
/// minimal nonfaces are the ten triangles that are not facets.
pub fn rp2_ideal() -> MonomialIdeal {
    let mut gens = Vec::new();
    for a in 1..=6 {
        for b in a + 1..=6 {
            for c in b + 1..=6 {
                if !RP2_FACETS.contains(&[a, b, c]) {
                    let mut e = vec![0u32; 6];
                    for v in [a, b, c] {
                        e[v - 1] = 1;
                    }
                    gens.push(e.into());
                }
            }
        }
    }
    MonomialIdeal::new(6, gens).expect("arity matches")
}

fn criterion_1() -> Outcome {
    let m = QuotientModule::ideal(MonomialIdeal::maximal(3));
    expect_eq("sdepth (x,y,z)", sdepth_of(&m)?, 2)?;
    let mx = engine(m.quotient_by_monomial(&[1, 0, 0].into()))?;
    expect_eq("bottom of M/xM", mx.bottom(), &ideal(&[[2, 0, 0], [1, 1, 0], [1, 0, 1]]))?;
    expect_eq("sdepth M/xM", sdepth_of(&mx)?, 0)?;
    expect_eq("4-space decomposition", engine(maximal_ideal_decomposition().validate())?, 2)?;
    Ok("sdepth M = 2, sdepth M/xM = 0, 4-space decomposition validates at 2".into())
}

fn criterion_2() -> Outcome {
    expect_eq("sdepth S", sdepth_of(&QuotientModule::ring(3))?, 3)?;
    let k = QuotientModule::cyclic(MonomialIdeal::maximal(3));
    expect_eq("sdepth S/(x,y,z)", sdepth_of(&k)?, 0)?;
    Ok("sdepth S = 3, sdepth K = 0".into())
}

fn criterion_3() -> Outcome {
    let i = ideal(&[[1, 1], [0, 2]]);
    let j = i.sum(&ideal(&[[2, 0]])).expect("same arity");
    let ji = engine(QuotientModule::new(j.clone(), i.clone()))?;
    expect_eq("sdepth J/I", sdepth_of(&ji)?, 1)?;
    expect_eq("sdepth I", sdepth_of(&QuotientModule::ideal(i))?, 1)?;
    expect_eq("sdepth J", sdepth_of(&QuotientModule::ideal(j))?, 1)?;
    Ok("sdepth J/I = sdepth I = sdepth J = 1".into())
}

fn criterion_4() -> Outcome {
    expect_eq("17-space decomposition", engine(product_decomposition().validate())?, 3)?;
    let s1 = sdepth_of(&QuotientModule::cyclic(block_ideal(4, 0)))?;
    expect_eq("sdepth S1/I", s1, 1)?;
    let s = sdepth_of(&product_module())?;
    if s < 3 || s <= 2 * s1 {
        return Err(format!("sdepth S/(IS,JS) = {s}, expected at least 3"));
    }
    Ok(format!("17 spaces validate at 3; factors 1 + 1; exact product sdepth {s}"))
}

fn criterion_5() -> Outcome {
    let top = ideal(&[[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0]]);
    let m = engine(QuotientModule::new(top.clone(), ideal(&[[1, 0, 0, 1]])))?;
    expect_eq("depth M", depth0(&m)?, 2)?;
    let mx = engine(QuotientModule::new(
        top,
        ideal(&[[2, 0, 0, 0], [1, 1, 0, 0], [1, 0, 1, 0], [1, 0, 0, 1]]),
    ))?;
    expect_eq("M/xM", engine(m.quotient_by_monomial(&[1, 0, 0, 0].into()))?, mx.clone())?;
    expect_eq("depth M/xM", depth0(&mx)?, 0)?;
    Ok("depth M = 2, depth M/xM = 0".into())
}

fn criterion_6() -> Outcome {
    let r = QuotientModule::cyclic(ideal(&[[2, 0, 0, 0], [1, 1, 0, 0], [1, 0, 1, 0], [1, 0, 0, 1]]));
    expect_eq("depth R", depth0(&r)?, 0)?;
    let r1 = QuotientModule::cyclic(ideal(&[[1, 0, 0, 0]]));
    expect_eq("depth S/(x1)", depth0(&r1)?, 3)?;
    Ok("depth R = 0, depth R/x1R = 3".into())
}

fn criterion_7() -> Outcome {
    let xy = ideal(&[[1, 0, 0, 0], [0, 1, 0, 0]]);
    let yz = ideal(&[[0, 1, 0, 0], [0, 0, 1, 0]]);
    let zt = ideal(&[[0, 0, 1, 0], [0, 0, 0, 1]]);
    let i = engine(engine(xy.intersect(&yz))?.intersect(&zt))?;
    let j = engine(xy.intersect(&zt))?;
    expect_eq("I", &i, &ideal(&[[1, 0, 1, 0], [0, 1, 1, 0], [0, 1, 0, 1]]))?;
    expect_eq("J", &j, &ideal(&[[1, 0, 1, 0], [1, 0, 0, 1], [0, 1, 1, 0], [0, 1, 0, 1]]))?;
    expect_eq("depth S/I", depth0(&QuotientModule::cyclic(i))?, 2)?;
    expect_eq("depth S/J", depth0(&QuotientModule::cyclic(j))?, 1)?;
    Ok("depth S/J = 1 < 2 = depth S/I".into())
}

fn criterion_8() -> Outcome {
    let top = ideal(&[[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0]]);
    let m = engine(QuotientModule::new(top, ideal(&[[1, 1, 0, 0]])))?;
    let r = engine(cor_main_certify(&m, Characteristic::Zero, &Default::default()))?;
    expect_eq("t", r.t, 2)?;
    expect_eq("sequence", r.sequence.as_slice(), &[2, 3][..])?;
    let Certificate::Decomposition(d) = &r.certificate else {
        return Err("no certificate".into());
    };
    expect_eq("certificate target", d.target(), &m)?;
    let v = engine(d.validate())?;
    if v < 2 {
        return Err(format!("certificate sdepth {v} < 2"));
    }
    Ok(format!("sequence [z,t], t = 2, certificate of {} spaces validates at {v}", d.spaces().len()))
}

fn criterion_9(seed: u64) -> Outcome {
    let report = run_properties(seed, PROPERTY_INSTANCES);
    let checked: usize = report.families.iter().map(|f| f.checked).sum();
    let failures: Vec<String> = report
        .families
        .iter()
        .flat_map(|f| f.failures.iter().map(move |m| format!("{}: {m}", f.name)))
        .collect();
    if failures.is_empty() {
        Ok(format!(
            "seed {seed}, {} instances, {} families, {checked} checks",
            report.instances,
            report.families.len()
        ))
    } else {
        Err(format!("{} failures; first: {}", failures.len(), failures[0]))
    }
}

fn criterion_10() -> Outcome {
    let q = QuotientModule::cyclic(rp2_ideal());
    expect_eq("depth in characteristic 0", depth0(&q)?, 3)?;
    let d2 = engine(depth(&q, Characteristic::Prime(2)))?.depth;
    expect_eq("depth in characteristic 2", d2, 2)?;
    Ok("RP^2: depth 3 in characteristic 0, 2 in characteristic 2".into())
}

fn run(id: u32, name: &'static str, budget: Duration, f: impl FnOnce() -> Outcome) -> CriterionResult {
    let start = Instant::now();
    let outcome = f();
    let elapsed = start.elapsed();
    let (passed, detail) = match outcome {
        Ok(d) if elapsed <= budget => (true, d),
        Ok(d) => (false, format!("{d}; over the {}s budget", budget.as_secs())),
        Err(e) => (false, e),
    };
    CriterionResult {
        id,
        name,
        passed,
        detail,
        elapsed,
    }
}

pub const SUITES: [&str; 3] = ["paper", "properties", "stress"];

/// Runs a named suite. `seed` only affects the property suite.
pub fn corpus_run(suite: &str, seed: u64) -> Result<CorpusReport, CorpusError> {
    let secs = Duration::from_secs;
    let criteria = match suite {
        "paper" => vec![
            run(1, "maximal ideal sdepth", secs(1), criterion_1),
            run(2, "free module and field", secs(1), criterion_2),
            run(3, "sdepth J/I, I, J", secs(1), criterion_3),
            run(4, "product of block ideals", secs(120), criterion_4),
            run(5, "depth of M and M/xM", secs(5), criterion_5),
            run(6, "depth of (x1^2,x1x2,...)", secs(5), criterion_6),
            run(7, "depth of intersections", secs(5), criterion_7),
            run(8, "certified regular reduction", secs(10), criterion_8),
        ],
        "properties" => vec![run(9, "property suite", secs(600), || criterion_9(seed))],
        "stress" => vec![run(10, "projective plane", secs(60), criterion_10)],
        other => return Err(CorpusError::SuiteUnknown(other.to_string())),
    };
    Ok(CorpusReport {
        suite: suite.to_string(),
        criteria,
    })
}
