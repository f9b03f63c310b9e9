use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand};
use serde_json::json;
use stanley::{
    depth, sdepth_with, Characteristic, ExponentVector, SearchConfig, StanleyDecomposition,
};
use workbench::model::{NamedDecomposition, Variables};
use workbench::{
    conjecture_check, cor_main_certify, corpus_run, parse_chain, parse_decomposition, parse_model,
    Cache, CacheKey, Certificate, Model, ModelError, ENGINE_VERSION,
};

#[derive(Parser)]
#[command(name = "stanley", version, about = "Depth and Stanley depth of monomial quotient modules")]
struct Cli {
    #[command(flatten)]
    shared: Shared,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Shared {
    /// Model, decomposition or chain file (JSON)
    #[arg(long, short, global = true)]
    input: Option<PathBuf>,
    /// Field characteristic: 0 or a prime
    #[arg(long = "char", global = true, default_value_t = 0)]
    characteristic: u32,
    /// Corner of the characteristic box, e.g. 1,2,1
    #[arg(long = "box", global = true, value_delimiter = ',')]
    corner: Option<Vec<u32>>,
    /// Worker threads for the engines
    #[arg(long, global = true)]
    workers: Option<usize>,
    /// JSONL result cache
    #[arg(long, global = true)]
    cache: Option<PathBuf>,
    /// Write the decomposition certificate to this file
    #[arg(long, global = true)]
    emit_certificate: Option<PathBuf>,
    /// Search node budget for exact Stanley depth
    #[arg(long, global = true, default_value_t = stanley::sdepth::DEFAULT_NODE_BUDGET)]
    node_budget: u64,
    /// Seed for the property suite
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Print JSON instead of text
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Exact Stanley depth of a model
    Sdepth,
    /// Depth of a model
    Depth,
    /// Validate a decomposition file and print its Stanley depth
    Validate,
    /// Decomposition of T/(B + (x)∩T) from one of T/B
    Restrict {
        #[arg(long)]
        var: String,
    },
    /// Decomposition of M from one of M/xM, x regular on M
    Lift {
        /// Model file for M
        #[arg(long)]
        module: PathBuf,
        #[arg(long)]
        var: String,
    },
    /// Product decomposition over the disjoint union of the variables
    Tensor {
        /// Second decomposition file
        #[arg(long)]
        other: PathBuf,
    },
    /// Glue the decompositions of a chain file
    Chain,
    /// Report sdepth, depth and whether sdepth ≥ depth
    Conjecture,
    /// Certify sdepth ≥ depth through a regular sequence of variables
    Certify,
    /// Run a corpus suite: paper, properties or stress
    Corpus { suite: String },
}

/// Failure classes, mapped to exit codes 1, 2 and 3.
enum Failure {
    Input(anyhow::Error),
    Validation(String),
    Resource(String),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        if let Some(m) = e.downcast_ref::<ModelError>() {
            if let ModelError::Algebra(inner) = m {
                return Failure::from(inner.clone());
            }
            return Failure::Input(e);
        }
        match e.downcast::<stanley::Error>() {
            Ok(inner) => Failure::from(inner),
            Err(e) => Failure::Input(e),
        }
    }
}

impl From<stanley::Error> for Failure {
    fn from(e: stanley::Error) -> Self {
        use stanley::Error::*;
        match e {
            SearchLimitExceeded { .. } => Failure::Resource(e.to_string()),
            NotCovered { .. } | Overlap { .. } | OutsideTarget { .. } | ChainBroken { .. }
            | InvalidPartition(_) => Failure::Validation(e.to_string()),
            other => Failure::Input(other.into()),
        }
    }
}

impl From<ModelError> for Failure {
    fn from(e: ModelError) -> Self {
        Failure::from(anyhow::Error::from(e))
    }
}

type Outcome<T = ()> = Result<T, Failure>;

fn read(path: &Path) -> Outcome<String> {
    Ok(fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?)
}

fn input(shared: &Shared) -> Outcome<String> {
    let path = shared
        .input
        .as_ref()
        .ok_or_else(|| Failure::Input(anyhow::anyhow!("--input FILE is required")))?;
    read(path)
}

fn characteristic(shared: &Shared) -> Outcome<Characteristic> {
    Characteristic::from_u32(shared.characteristic).ok_or_else(|| {
        Failure::Input(anyhow::anyhow!(
            "--char must be 0 or a prime, got {}",
            shared.characteristic
        ))
    })
}

fn config(shared: &Shared) -> SearchConfig {
    SearchConfig {
        node_budget: shared.node_budget,
    }
}

fn emit(shared: &Shared, named: &NamedDecomposition) -> Outcome {
    if let Some(path) = &shared.emit_certificate {
        fs::write(path, named.to_json_pretty() + "\n")
            .with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(())
}

fn print(shared: &Shared, value: serde_json::Value, text: String) {
    if shared.json {
        println!("{value}");
    } else {
        println!("{text}");
    }
}

fn sdepth_cmd(shared: &Shared) -> Outcome {
    let model = parse_model(&input(shared)?)?;
    let corner = shared.corner.clone().map(ExponentVector::from);
    let canonical = model.to_json();
    let compute = || -> anyhow::Result<(u64, Option<serde_json::Value>)> {
        let r = sdepth_with(&model.module, corner.as_ref(), &config(shared))?;
        let named = NamedDecomposition {
            vars: model.vars.clone(),
            decomposition: r.decomposition()?,
        };
        Ok((r.value as u64, Some(serde_json::to_value(named.to_file())?)))
    };
    let (value, certificate, hit) = match &shared.cache {
        Some(path) => {
            let mut cache = Cache::open(path)?;
            let key = CacheKey {
                op: "sdepth",
                model: &canonical,
                characteristic: 0,
                corner: shared.corner.as_deref(),
                engine: ENGINE_VERSION,
            };
            let (r, hit) = cache.get_or_compute(&key, compute)?;
            (r.value, r.certificate, hit)
        }
        None => {
            let (v, c) = compute()?;
            (v, c, false)
        }
    };
    if let (Some(path), Some(cert)) = (&shared.emit_certificate, &certificate) {
        let text = serde_json::to_string_pretty(cert).expect("json value");
        fs::write(path, text + "\n").with_context(|| format!("writing {}", path.display()))?;
    }
    print(
        shared,
        json!({"sdepth": value, "cached": hit}),
        format!("sdepth {value}"),
    );
    Ok(())
}

fn depth_cmd(shared: &Shared) -> Outcome {
    let model = parse_model(&input(shared)?)?;
    let ch = characteristic(shared)?;
    let canonical = model.to_json();
    let compute = || -> anyhow::Result<(u64, Option<serde_json::Value>)> {
        let r = depth(&model.module, ch)?;
        let witness = json!({"degree": r.witness.0, "index": r.witness.1});
        Ok((r.depth as u64, Some(witness)))
    };
    let (value, witness, hit) = match &shared.cache {
        Some(path) => {
            let mut cache = Cache::open(path)?;
            let key = CacheKey {
                op: "depth",
                model: &canonical,
                characteristic: ch.value(),
                corner: None,
                engine: ENGINE_VERSION,
            };
            let (r, hit) = cache.get_or_compute(&key, compute)?;
            (r.value, r.certificate, hit)
        }
        None => {
            let (v, w) = compute()?;
            (v, w, false)
        }
    };
    let n = model.vars.len() as u64;
    print(
        shared,
        json!({
            "depth": value,
            "projective_dimension": n - value,
            "characteristic": ch.value(),
            "witness": witness,
            "cached": hit,
        }),
        format!("depth {value} (char {ch}, projective dimension {})", n - value),
    );
    Ok(())
}

fn report_decomposition(shared: &Shared, named: &NamedDecomposition) -> Outcome {
    let value = named.decomposition.validate()?;
    emit(shared, named)?;
    if shared.emit_certificate.is_none() && !shared.json {
        println!("{}", named.to_json_pretty());
    }
    print(
        shared,
        json!({"valid": true, "sdepth": value, "spaces": named.decomposition.spaces().len()}),
        format!("valid, sdepth {value}"),
    );
    Ok(())
}

fn validate_cmd(shared: &Shared) -> Outcome {
    let named = parse_decomposition(&input(shared)?)?;
    let value = named.decomposition.validate()?;
    print(
        shared,
        json!({"valid": true, "sdepth": value}),
        format!("valid, sdepth {value}"),
    );
    Ok(())
}

fn restrict_cmd(shared: &Shared, var: &str) -> Outcome {
    let named = parse_decomposition(&input(shared)?)?;
    let k = named.vars.index_of(var)?;
    let decomposition = named.decomposition.restrict_mod_variable(k)?;
    report_decomposition(shared, &NamedDecomposition { vars: named.vars, decomposition })
}

fn lift_cmd(shared: &Shared, module: &Path, var: &str) -> Outcome {
    let named = parse_decomposition(&input(shared)?)?;
    let model: Model = parse_model(&read(module)?)?;
    if model.vars != named.vars {
        return Err(Failure::Input(anyhow::anyhow!(
            "the module and the decomposition use different variables"
        )));
    }
    let k = named.vars.index_of(var)?;
    let decomposition = named.decomposition.lift_regular_variable(&model.module, k)?;
    report_decomposition(shared, &NamedDecomposition { vars: named.vars, decomposition })
}

fn tensor_cmd(shared: &Shared, other: &Path) -> Outcome {
    let a = parse_decomposition(&input(shared)?)?;
    let b = parse_decomposition(&read(other)?)?;
    let names: Vec<String> = a.vars.names().iter().chain(b.vars.names()).cloned().collect();
    let vars = Variables::new(names)?;
    let decomposition = a.decomposition.tensor(&b.decomposition)?;
    report_decomposition(shared, &NamedDecomposition { vars, decomposition })
}

fn chain_cmd(shared: &Shared) -> Outcome {
    let parsed = parse_chain(&input(shared)?)?;
    let decomposition: StanleyDecomposition =
        StanleyDecomposition::chain_concat(&parsed.chain, &parsed.decompositions)?;
    report_decomposition(shared, &NamedDecomposition { vars: parsed.vars, decomposition })
}

fn conjecture_cmd(shared: &Shared) -> Outcome {
    let model = parse_model(&input(shared)?)?;
    let r = conjecture_check(&model.module, characteristic(shared)?, &config(shared))?;
    print(
        shared,
        serde_json::to_value(&r).expect("report serializes"),
        format!("sdepth {}, depth {}, sdepth >= depth: {}", r.sdepth, r.depth, r.holds),
    );
    Ok(())
}

fn certify_cmd(shared: &Shared) -> Outcome {
    let model = parse_model(&input(shared)?)?;
    let r = cor_main_certify(&model.module, characteristic(shared)?, &config(shared))?;
    let sequence: Vec<&str> = r.sequence.iter().map(|&k| model.vars.name(k)).collect();
    match &r.certificate {
        Certificate::Decomposition(d) => {
            let named = NamedDecomposition {
                vars: model.vars.clone(),
                decomposition: d.clone(),
            };
            emit(shared, &named)?;
            let value = d.validate()?;
            print(
                shared,
                json!({"t": r.t, "sequence": sequence, "certified_sdepth": value, "applicable": true}),
                format!(
                    "depth {}, regular sequence [{}], certificate validates with sdepth {value}",
                    r.t,
                    sequence.join(",")
                ),
            );
        }
        Certificate::Inapplicable { sequence_length } => print(
            shared,
            json!({"t": r.t, "sequence": sequence, "applicable": false}),
            format!(
                "depth {} but the regular sequence of variables has length {sequence_length}: inapplicable",
                r.t
            ),
        ),
    }
    Ok(())
}

fn corpus_cmd(shared: &Shared, suite: &str) -> Outcome {
    let report = corpus_run(suite, shared.seed).map_err(|e| Failure::Input(e.into()))?;
    if shared.json {
        println!("{}", report.to_json());
    } else {
        print!("{}", report.to_text());
    }
    if report.passed() {
        Ok(())
    } else {
        Err(Failure::Validation(format!("suite {suite} failed")))
    }
}

fn run(cli: &Cli) -> Outcome {
    if let Some(n) = cli.shared.workers {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .context("configuring worker threads")?;
    }
    let shared = &cli.shared;
    match &cli.command {
        Command::Sdepth => sdepth_cmd(shared),
        Command::Depth => depth_cmd(shared),
        Command::Validate => validate_cmd(shared),
        Command::Restrict { var } => restrict_cmd(shared, var),
        Command::Lift { module, var } => lift_cmd(shared, module, var),
        Command::Tensor { other } => tensor_cmd(shared, other),
        Command::Chain => chain_cmd(shared),
        Command::Conjecture => conjecture_cmd(shared),
        Command::Certify => certify_cmd(shared),
        Command::Corpus { suite } => corpus_cmd(shared, suite),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Input(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
        Err(Failure::Validation(msg)) => {
            eprintln!("validation failed: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Resource(msg)) => {
            eprintln!("resource limit: {msg}");
            ExitCode::from(3)
        }
    }
}
