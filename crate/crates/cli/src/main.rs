use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use celltree::census::{enumerate_forests_capped, for_each_rooted_forest, DEFAULT_CAP};
use celltree::complex::io::{parse, write_cellular, write_simplicial};
use celltree::complex::{ChainComplex, WeightAssignment};
use celltree::critical::{critical_group, sequence_order_check};
use celltree::families::*;
use celltree::homology::{homology, is_z_apc};
use celltree::matrix_forest::{rooted_forest_polynomial, rooted_forest_polynomial_weighted, tau};
use celltree::sampling::{WeightSampler, GENERATOR};
use celltree::verify::{self, Suite, VerifyConfig, DEFAULT_SAMPLES, DEFAULT_SEED};
use celltree::Error;
use clap::{Parser, Subcommand};
use num_bigint::BigInt;

#[derive(Parser, Debug)]
#[command(name = "celltree", version, about = "Exact spanning-tree counts of cell complexes")]
struct Cli {
    /// Seed for sampled weights.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Largest number of candidate subsets a brute-force enumeration may visit.
    #[arg(long, global = true, default_value_t = DEFAULT_CAP)]
    cap: u64,
    /// Write the report to this file instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Write a family instance in the interchange format.
    ///
    /// Families: simplex-skeleton N D, named NAME, hypercube N,
    /// colorful N1 N2 ..., shifted GEN ..., ferrers PART ...,
    /// uniform-matroid R N.
    Gen {
        family: String,
        params: Vec<String>,
    },
    /// Forest count of the k-skeleton by one method.
    Tau {
        file: PathBuf,
        /// Dimension of the forests; defaults to the top dimension.
        #[arg(long)]
        k: Option<usize>,
        /// reduced, reduced-acyclic, pseudodet, alternating, covolume, lyons,
        /// lyons-spectral, algebraic-weighted, weighted-alternating, graph or
        /// oracle.
        #[arg(long, default_value = "reduced")]
        method: String,
        /// Weight file (`dim index p/q` lines), or `random` to sample every
        /// cell from the seed.
        #[arg(long)]
        weights: Option<String>,
    },
    /// Integer homology in every dimension.
    Homology { file: PathBuf },
    /// Critical groups and the cut/flow order relations.
    Critical {
        file: PathBuf,
        /// Only the critical group in this dimension.
        #[arg(long)]
        k: Option<usize>,
    },
    /// The rooted-forest polynomial det(L + z Id) of the k-skeleton.
    RootedPoly {
        file: PathBuf,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        weights: Option<String>,
        /// Also enumerate rooted forests and compare.
        #[arg(long)]
        check: bool,
    },
    /// Run a verification suite: families, theorems, critical, duality or all.
    Verify {
        suite: String,
        /// Weight samples per weighted identity.
        #[arg(long, default_value_t = DEFAULT_SAMPLES)]
        samples: usize,
    },
}

/// Failure modes, mapped to exit codes.
enum Failure {
    Mismatch(String),
    Usage(String),
    Cap(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Mismatch(_) => 1,
            Failure::Usage(_) => 2,
            Failure::Cap(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Mismatch(m) | Failure::Usage(m) | Failure::Cap(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::CapExceeded { .. } => Failure::Cap(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

type Outcome<T> = Result<T, Failure>;

/// Report text, plus a failure to signal after the report is written.
struct Output {
    text: String,
    failure: Option<Failure>,
}

impl From<String> for Output {
    fn from(text: String) -> Self {
        Self { text, failure: None }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let result = run(&cli).and_then(|out| {
        let header = format!("# seed {} cap {}\n", cli.seed, cli.cap);
        let text = if out.text.starts_with("# verify") {
            out.text
        } else {
            header + &out.text
        };
        match &cli.out {
            Some(path) => fs::write(path, &text)
                .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display())))?,
            None => print!("{text}"),
        }
        out.failure.map_or(Ok(()), Err)
    });
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}

fn run(cli: &Cli) -> Outcome<Output> {
    match &cli.command {
        Command::Gen { family, params } => Ok(cmd_gen(family, params)?.into()),
        Command::Tau {
            file,
            k,
            method,
            weights,
        } => Ok(cmd_tau(cli, file, *k, method, weights.as_deref())?.into()),
        Command::Homology { file } => Ok(cmd_homology(file)?.into()),
        Command::Critical { file, k } => Ok(cmd_critical(file, *k)?.into()),
        Command::RootedPoly {
            file,
            k,
            weights,
            check,
        } => cmd_rooted_poly(cli, file, *k, weights.as_deref(), *check),
        Command::Verify { suite, samples } => cmd_verify(cli, suite, *samples),
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn number<T: std::str::FromStr>(s: &str, what: &str) -> Outcome<T> {
    s.parse()
        .map_err(|_| usage(format!("bad parameter {what}: {s}")))
}

fn arity(family: &str, params: &[String], n: usize) -> Outcome<()> {
    if params.len() != n {
        return Err(usage(format!(
            "{family} takes {n} parameter(s), got {}",
            params.len()
        )));
    }
    Ok(())
}

/// A shifted-complex generator: digits `236` or a comma list `2,3,6`.
fn generator(s: &str) -> Outcome<Vec<u32>> {
    if s.contains(',') {
        s.split(',').map(|v| number(v, "generator")).collect()
    } else {
        s.chars()
            .map(|c| c.to_digit(10).ok_or_else(|| usage(format!("bad generator {s}"))))
            .collect()
    }
}

fn cmd_gen(family: &str, params: &[String]) -> Outcome<String> {
    let text = match family {
        "simplex-skeleton" => {
            arity(family, params, 2)?;
            write_simplicial(&simplex_skeleton(number(&params[0], "N")?, number(&params[1], "D")?)?)
        }
        "named" => {
            arity(family, params, 1)?;
            match params[0].as_str() {
                "bipyramid" => write_simplicial(&named::bipyramid()),
                "rp2_six_vertex" => write_simplicial(&named::rp2_six_vertex()),
                "annulus" => write_simplicial(&named::annulus()),
                "moebius" => write_simplicial(&named::moebius()),
                other => write_cellular(&named_complex(other)?),
            }
        }
        "hypercube" => {
            arity(family, params, 1)?;
            write_cellular(&hypercube_complex(number(&params[0], "N")?)?)
        }
        "colorful" => {
            let sizes: Vec<u32> = params.iter().map(|p| number(p, "size")).collect::<Outcome<_>>()?;
            if sizes.is_empty() {
                return Err(usage("colorful needs at least one color class size"));
            }
            write_simplicial(&complete_colorful(&sizes)?)
        }
        "shifted" => {
            let gens: Vec<Vec<u32>> = params.iter().map(|p| generator(p)).collect::<Outcome<_>>()?;
            if gens.is_empty() {
                return Err(usage("shifted needs at least one generator"));
            }
            write_simplicial(&shifted_complex(&gens)?)
        }
        "ferrers" => {
            let parts: Vec<usize> = params.iter().map(|p| number(p, "part")).collect::<Outcome<_>>()?;
            write_simplicial(&ferrers_graph(&Partition::new(parts)?)?)
        }
        "uniform-matroid" => {
            arity(family, params, 2)?;
            let m = Matroid::uniform(number(&params[0], "R")?, number(&params[1], "N")?)?;
            write_simplicial(&m.independence_complex()?)
        }
        other => return Err(usage(format!("unknown family {other}"))),
    };
    Ok(text)
}

fn load(path: &PathBuf) -> Outcome<ChainComplex> {
    let text = fs::read_to_string(path)
        .map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
    Ok(parse(&text)?.to_chain_complex())
}

fn skeleton(x: ChainComplex, k: Option<usize>) -> Outcome<ChainComplex> {
    match k {
        None => Ok(x),
        Some(k) if k == x.dim() => Ok(x),
        Some(k) => Ok(x.skeleton(k)?),
    }
}

/// Weights from a file, or sampled on every cell when `arg` is `random`.
fn load_weights(cli: &Cli, x: &ChainComplex, arg: Option<&str>) -> Outcome<(Option<WeightAssignment>, String)> {
    match arg {
        None => Ok((None, "none".into())),
        Some("random") => {
            let dims: Vec<usize> = (0..=x.dim()).collect();
            let w = WeightSampler::new(cli.seed).assignment(x, &dims)?;
            Ok((Some(w), format!("sampled {GENERATOR} seed {}", cli.seed)))
        }
        Some(path) => {
            let text = fs::read_to_string(path).map_err(|e| usage(format!("cannot read {path}: {e}")))?;
            Ok((Some(WeightAssignment::parse(&text)?), format!("file {path}")))
        }
    }
}

fn hypotheses(x: &ChainComplex) -> Outcome<String> {
    let mut out = String::new();
    for k in 0..=x.dim() {
        out.push_str(&format!("hypothesis {}\n", homology(x, k)?));
    }
    out.push_str(&format!("hypothesis z-apc {}\n", if is_z_apc(x) { "yes" } else { "no" }));
    Ok(out)
}

fn cmd_tau(cli: &Cli, file: &PathBuf, k: Option<usize>, method: &str, weights: Option<&str>) -> Outcome<String> {
    let x = skeleton(load(file)?, k)?;
    let (w, source) = load_weights(cli, &x, weights)?;
    let mut out = format!("file {}\nk {}\nweights {source}\n", file.display(), x.dim());
    out.push_str(&hypotheses(&x)?);
    if method == "oracle" {
        let census = enumerate_forests_capped(&x, x.dim(), cli.cap)?;
        let value = match &w {
            Some(w) => census.weighted_tau(&x, w)?.to_string(),
            None => census.tau().to_string(),
        };
        out.push_str(&format!("method oracle\nvalue {value}\nforests {}\n", census.len()));
        return Ok(out);
    }
    let report = tau(&x, method.parse()?, w.as_ref())?;
    out.push_str(&report.serialize());
    Ok(out)
}

fn cmd_homology(file: &PathBuf) -> Outcome<String> {
    let x = load(file)?;
    let mut out = format!("file {}\n", file.display());
    for k in 0..=x.dim() {
        let h = homology(&x, k)?;
        out.push_str(&format!("{h}\n"));
    }
    out.push_str(&format!("z-apc {}\n", if is_z_apc(&x) { "yes" } else { "no" }));
    Ok(out)
}

fn cmd_critical(file: &PathBuf, k: Option<usize>) -> Outcome<String> {
    let x = load(file)?;
    let mut out = format!("file {}\n", file.display());
    let dims: Vec<usize> = match k {
        Some(k) => vec![k],
        None => (0..x.dim()).collect(),
    };
    for i in dims {
        let g = critical_group(&x, i)?;
        let order = g.order().map_or("infinite".to_string(), |o| o.to_string());
        out.push_str(&format!("K_{i} {g}\norder {order}\nfactors {}\n", g.serialize()));
    }
    if k.is_none() && x.dim() > 0 {
        out.push_str(&sequence_order_check(&x)?.serialize());
    }
    Ok(out)
}

fn cmd_rooted_poly(
    cli: &Cli,
    file: &PathBuf,
    k: Option<usize>,
    weights: Option<&str>,
    check: bool,
) -> Outcome<Output> {
    let x = skeleton(load(file)?, k)?;
    let (w, source) = load_weights(cli, &x, weights)?;
    let mut out = format!("file {}\nk {}\nweights {source}\n", file.display(), x.dim());
    let coefficients: Vec<String> = match &w {
        Some(w) => {
            let p = rooted_forest_polynomial_weighted(&x, w)?;
            out.push_str(&format!("polynomial {p}\n"));
            p.coefficients.iter().map(ToString::to_string).collect()
        }
        None => {
            let p = rooted_forest_polynomial(&x)?;
            out.push_str(&format!("polynomial {p}\n"));
            p.coefficients.iter().map(ToString::to_string).collect()
        }
    };
    out.push_str(&format!("coefficients {}\n", coefficients.join(" ")));
    let mut failure = None;
    if check {
        if w.is_some() {
            return Err(usage("--check compares unweighted counts only"));
        }
        let n = x.num_cells(x.dim() as isize - 1);
        let mut brute = vec![BigInt::from(0); n + 1];
        for_each_rooted_forest(&x, cli.cap, |_, s, t| brute[n - s.len()] += &t * &t)?;
        let brute: Vec<String> = brute.iter().map(ToString::to_string).collect();
        let agree = brute == coefficients;
        out.push_str(&format!("enumerated {}\nagree {agree}\n", brute.join(" ")));
        if !agree {
            failure = Some(Failure::Mismatch("rooted-forest enumeration disagrees".into()));
        }
    }
    Ok(Output { text: out, failure })
}

fn cmd_verify(cli: &Cli, suite: &str, samples: usize) -> Outcome<Output> {
    let suites = Suite::parse_selection(suite)?;
    let config = VerifyConfig {
        seed: cli.seed,
        cap: cli.cap,
        samples,
    };
    let report = verify::run(&suites, &config);
    let failure = (!report.passed()).then(|| {
        Failure::Mismatch(format!("{} mismatches", report.count(verify::Status::Fail)))
    });
    Ok(Output {
        text: report.render(),
        failure,
    })
}
