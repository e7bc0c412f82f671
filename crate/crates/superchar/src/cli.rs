//! Command-line front end: JSON in, JSON out, deterministic output.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_traits::Zero;
use serde::Serialize;

use crate::base::{
    base_from_word, check_pr1, default_base, dynkin_diagram, is_mixed, odd_reflect,
    satisfies_coro_hypothesis, satisfies_pr2, word_of_base, Base, BaseForest, BaseKind,
};
use crate::datum::{AlgebraDesc, RootDatum};
use crate::dominance::{enumerate_y, is_dominant_integrable_closed, is_dominant_integrable_in};
use crate::error::Error;
use crate::json::{parse_weight, ElementJson, WeightJson};
use crate::short::{compute_b_in, decompose};
use crate::weight::Weight;
use crate::xi::{
    ev_condition, in_a, in_r, is_w_invariant, string_violation, sv_condition, Lattice, RingElement,
    Sign,
};

#[derive(Parser)]
#[command(
    name = "superchar",
    about = "Exact character-ring computations for classical Lie superalgebras",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the root datum: roots with parity and isotropy, simple even
    /// roots, and the isotropic set.
    Describe(AlgebraArg),
    /// Enumerate the compatible bases with diagrams and property flags.
    Bases {
        #[command(flatten)]
        algebra: AlgebraArg,
        /// Start from this ε/δ word instead of the default mixed base.
        #[arg(long)]
        from_word: Option<String>,
    },
    /// Apply one odd reflection to a base.
    Reflect {
        #[command(flatten)]
        algebra: AlgebraArg,
        #[command(flatten)]
        base: BaseArg,
        /// Index into Σ_iso of the reflecting root.
        #[arg(long, conflicts_with = "beta")]
        beta_index: Option<usize>,
        /// The reflecting root as a weight.
        #[arg(long)]
        beta: Option<String>,
    },
    /// Decide dominance and dominant-integrability of a weight.
    Dominant {
        #[command(flatten)]
        algebra: AlgebraArg,
        #[command(flatten)]
        base: BaseArg,
        #[arg(long)]
        weight: String,
        /// Use the closed-form criterion (requires the single-reflection
        /// hypothesis of the base).
        #[arg(long)]
        closed_form: bool,
    },
    /// Enumerate the dominant weights strictly below a given one.
    Yset {
        #[command(flatten)]
        algebra: AlgebraArg,
        #[command(flatten)]
        base: BaseArg,
        #[arg(long)]
        weight: String,
    },
    /// Solve for the short-basis element b_λ.
    Bshort {
        #[command(flatten)]
        algebra: AlgebraArg,
        #[command(flatten)]
        base: BaseArg,
        #[arg(long)]
        weight: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run a membership test on a ring element read from JSON.
    Check {
        /// Path of the element file.
        #[arg(long = "in")]
        input: PathBuf,
        #[arg(long, value_enum)]
        test: CheckKind,
        #[arg(long, value_enum, default_value_t = LatticeArg::Full)]
        lattice: LatticeArg,
        /// Loop over all isotropic roots instead of a transversal.
        #[arg(long)]
        all_beta: bool,
        /// Isotropic root for the string/differential/evaluation tests.
        #[arg(long)]
        beta: Option<String>,
        /// Auxiliary weight ω for the differential/evaluation tests.
        #[arg(long)]
        omega: Option<String>,
        /// Sign for the differential test: "+" or "-".
        #[arg(long, default_value = "-")]
        sign: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Decompose a ring element against the short basis.
    Decompose {
        #[arg(long = "in")]
        input: PathBuf,
        #[command(flatten)]
        base: BaseArg,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the acceptance suite and print a pass/fail table.
    Suite,
}

#[derive(Args)]
struct AlgebraArg {
    /// Algebra descriptor: JSON or shorthand like gl(2|1), osp(3|2), q(2).
    #[arg(long)]
    algebra: String,
}

#[derive(Args)]
struct BaseArg {
    /// Base selector: "mixed", "distinguished", an ε/δ word, or an index
    /// into the canonical enumeration.
    #[arg(long, default_value = "mixed")]
    base: String,
}

#[derive(Clone, Copy, ValueEnum)]
enum CheckKind {
    #[value(name = "A", alias = "a")]
    A,
    #[value(name = "R", alias = "r")]
    R,
    #[value(name = "W", alias = "w")]
    W,
    String,
    Sv,
    Ev,
}

#[derive(Clone, Copy, ValueEnum)]
enum LatticeArg {
    Full,
    Int,
    Half,
}

impl From<LatticeArg> for Lattice {
    fn from(l: LatticeArg) -> Lattice {
        match l {
            LatticeArg::Full => Lattice::Full,
            LatticeArg::Int => Lattice::Integral,
            LatticeArg::Half => Lattice::HalfIntegral,
        }
    }
}

fn resolve_base(datum: &RootDatum, spec: &str) -> Result<Base, Error> {
    match spec {
        "mixed" => default_base(datum, BaseKind::Mixed),
        "distinguished" | "dist" => default_base(datum, BaseKind::Distinguished),
        s if !s.is_empty() && s.chars().all(|c| matches!(c, 'e' | 'd' | 'ε' | 'δ')) => {
            base_from_word(datum, s)
        }
        s => {
            let index: usize = s
                .parse()
                .map_err(|_| Error::InvalidBase(format!("unknown base selector {s:?}")))?;
            let start = default_base(datum, BaseKind::Mixed)?;
            let forest = BaseForest::new(datum, &start)?;
            forest
                .bases()
                .get(index)
                .cloned()
                .ok_or_else(|| Error::InvalidBase(format!("index {index} out of range")))
        }
    }
}

#[derive(Serialize)]
struct RootJson {
    weight: WeightJson,
    even: bool,
    odd: bool,
    isotropic: bool,
}

#[derive(Serialize)]
struct DescribeJson {
    algebra: AlgebraDesc,
    eps_len: usize,
    delta_len: usize,
    cartan_extended: bool,
    roots: Vec<RootJson>,
    pi: Vec<WeightJson>,
    delta_iso: Vec<WeightJson>,
}

#[derive(Serialize)]
struct BaseJson {
    index: usize,
    sigma: Vec<WeightJson>,
    #[serde(skip_serializing_if = "Option::is_none")]
    word: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    diagram: Option<String>,
    pr1: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pr2: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    coro: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    mixed: Option<bool>,
}

#[derive(Serialize)]
struct DominantJson {
    weight: WeightJson,
    dominant_pi: bool,
    dominant_integrable: bool,
    criterion: &'static str,
}

#[derive(Serialize)]
struct YsetJson {
    lambda: WeightJson,
    y: Vec<WeightJson>,
}

#[derive(Serialize)]
struct BshortJson {
    lambda: WeightJson,
    element: ElementJson,
    solution_dim: usize,
    integral: bool,
}

#[derive(Serialize)]
struct CheckJson {
    test: String,
    pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    counterexample: Option<String>,
}

#[derive(Serialize)]
struct DecomposeEntryJson {
    lambda: WeightJson,
    coeff: [i64; 2],
}

#[derive(Serialize)]
struct DecomposeJson {
    coefficients: Vec<DecomposeEntryJson>,
    remainder: ElementJson,
}

fn emit<T: Serialize>(value: &T, out: Option<&PathBuf>) -> Result<(), Error> {
    let text = serde_json::to_string_pretty(value)?;
    match out {
        Some(path) => {
            let mut f = std::fs::File::create(path)?;
            writeln!(f, "{text}")?;
        }
        None => println!("{text}"),
    }
    Ok(())
}

fn base_report(datum: &RootDatum, index: usize, base: &Base) -> Result<BaseJson, Error> {
    let km = datum.family().is_kac_moody();
    let (diagram, pr2, coro, mixed) = if km {
        (
            Some(dynkin_diagram(datum, base)?.ascii()),
            Some(satisfies_pr2(datum, base)?.0),
            Some(satisfies_coro_hypothesis(datum, base)?),
            Some(is_mixed(datum, base)?),
        )
    } else {
        (None, None, None, None)
    };
    Ok(BaseJson {
        index,
        sigma: base.sigma().iter().map(WeightJson::from_weight).collect(),
        word: word_of_base(datum, base),
        diagram,
        pr1: check_pr1(datum, base)?,
        pr2,
        coro,
        mixed,
    })
}

fn load_element(path: &PathBuf) -> Result<(RootDatum, RingElement), Error> {
    let text = std::fs::read_to_string(path)?;
    let parsed: ElementJson = serde_json::from_str(&text)?;
    let datum = RootDatum::build(parsed.algebra)?;
    let element = parsed.to_element(&datum)?;
    Ok((datum, element))
}

fn run_command(cli: Cli) -> Result<i32, Error> {
    match cli.command {
        Command::Describe(arg) => {
            let datum = RootDatum::build(AlgebraDesc::parse(&arg.algebra)?)?;
            let (m, n) = datum.weight_dims();
            let doc = DescribeJson {
                algebra: datum.descriptor(),
                eps_len: m,
                delta_len: n,
                cartan_extended: datum.cartan_extended(),
                roots: datum
                    .roots()
                    .iter()
                    .map(|r| RootJson {
                        weight: WeightJson::from_weight(&r.weight),
                        even: r.even,
                        odd: r.odd,
                        isotropic: r.isotropic,
                    })
                    .collect(),
                pi: datum.pi().iter().map(WeightJson::from_weight).collect(),
                delta_iso: datum.delta_iso().map(WeightJson::from_weight).collect(),
            };
            emit(&doc, None)?;
            Ok(0)
        }
        Command::Bases { algebra, from_word } => {
            let datum = RootDatum::build(AlgebraDesc::parse(&algebra.algebra)?)?;
            let start = match &from_word {
                Some(w) => base_from_word(&datum, w)?,
                None => default_base(&datum, BaseKind::Mixed)?,
            };
            let forest = BaseForest::new(&datum, &start)?;
            let mut docs = Vec::new();
            for (i, b) in forest.bases().iter().enumerate() {
                docs.push(base_report(&datum, i, b)?);
            }
            emit(&docs, None)?;
            Ok(0)
        }
        Command::Reflect {
            algebra,
            base,
            beta_index,
            beta,
        } => {
            let datum = RootDatum::build(AlgebraDesc::parse(&algebra.algebra)?)?;
            let b = resolve_base(&datum, &base.base)?;
            let beta = match (beta_index, beta) {
                (Some(i), None) => b
                    .sigma_iso()
                    .get(i)
                    .cloned()
                    .ok_or_else(|| Error::NotIsotropic(format!("Σ_iso index {i}")))?,
                (None, Some(w)) => parse_weight(&datum, &w)?,
                _ => {
                    return Err(Error::Unsupported(
                        "give exactly one of --beta-index / --beta".to_string(),
                    ))
                }
            };
            let reflected = odd_reflect(&datum, &b, &beta)?;
            let doc = base_report(&datum, 0, &reflected)?;
            emit(&doc, None)?;
            Ok(0)
        }
        Command::Dominant {
            algebra,
            base,
            weight,
            closed_form,
        } => {
            let datum = RootDatum::build(AlgebraDesc::parse(&algebra.algebra)?)?;
            let b = resolve_base(&datum, &base.base)?;
            let lam = parse_weight(&datum, &weight)?;
            let (verdict, criterion) = if closed_form {
                (
                    is_dominant_integrable_closed(&datum, &b, &lam)?,
                    "closed-form",
                )
            } else {
                let forest = BaseForest::new(&datum, &b)?;
                (
                    is_dominant_integrable_in(&datum, &forest, &lam)?,
                    "base-tracking",
                )
            };
            let doc = DominantJson {
                weight: WeightJson::from_weight(&lam),
                dominant_pi: datum.is_dominant_pi(&lam)?,
                dominant_integrable: verdict,
                criterion,
            };
            emit(&doc, None)?;
            Ok(if verdict { 0 } else { 1 })
        }
        Command::Yset {
            algebra,
            base,
            weight,
        } => {
            let datum = RootDatum::build(AlgebraDesc::parse(&algebra.algebra)?)?;
            let b = resolve_base(&datum, &base.base)?;
            let lam = parse_weight(&datum, &weight)?;
            let y = enumerate_y(&datum, &b, &lam)?;
            let doc = YsetJson {
                lambda: WeightJson::from_weight(&lam),
                y: y.iter().map(WeightJson::from_weight).collect(),
            };
            emit(&doc, None)?;
            Ok(0)
        }
        Command::Bshort {
            algebra,
            base,
            weight,
            out,
        } => {
            let datum = RootDatum::build(AlgebraDesc::parse(&algebra.algebra)?)?;
            let b = resolve_base(&datum, &base.base)?;
            let lam = parse_weight(&datum, &weight)?;
            let forest = BaseForest::new(&datum, &b)?;
            let solved = compute_b_in(&datum, &forest, &lam)?;
            let doc = BshortJson {
                lambda: WeightJson::from_weight(&solved.lambda),
                element: ElementJson::from_element(&solved.element),
                solution_dim: solved.solution_dim,
                integral: solved.integral,
            };
            emit(&doc, out.as_ref())?;
            Ok(0)
        }
        Command::Check {
            input,
            test,
            lattice,
            all_beta,
            beta,
            omega,
            sign,
            out,
        } => {
            let (datum, x) = load_element(&input)?;
            let lattice: Lattice = lattice.into();
            let beta = match beta {
                Some(w) => Some(parse_weight(&datum, &w)?),
                None => datum.iso_transversal()?.into_iter().next(),
            };
            let need_beta = || {
                beta.clone()
                    .ok_or_else(|| Error::NotIsotropic("no isotropic roots".to_string()))
            };
            let sign = match sign.as_str() {
                "+" | "plus" => Sign::Plus,
                "-" | "minus" => Sign::Minus,
                other => {
                    return Err(Error::Unsupported(format!("sign {other:?}")));
                }
            };
            let omega_weight = |datum: &RootDatum, beta: &Weight| -> Result<Weight, Error> {
                match &omega {
                    Some(w) => parse_weight(datum, w),
                    None => {
                        let (m, n) = datum.weight_dims();
                        for k in 0..(m + n) {
                            let w = if k < m {
                                datum.eps(k)
                            } else {
                                datum.delta(k - m)
                            };
                            if !datum.pair_hbeta(&w, beta)?.is_zero() {
                                return Ok(w);
                            }
                        }
                        Err(Error::SupportViolation(
                            "no coordinate weight pairs nontrivially with β".to_string(),
                        ))
                    }
                }
            };
            let (kind, pass, counterexample) = match test {
                CheckKind::A => {
                    let pass = in_a(&datum, &x, lattice, all_beta)?;
                    let mut why = None;
                    if !pass {
                        if !in_r(&datum, &x, lattice)? {
                            why = Some("element leaves R(P)".to_string());
                        } else if !is_w_invariant(&datum, &x)? {
                            why = Some("element is not W-invariant".to_string());
                        } else {
                            for b in datum.iso_transversal()? {
                                if let Some(v) = string_violation(&datum, &x, &b)? {
                                    why = Some(format!(
                                        "charged line {} + Z{} sums to {}",
                                        v.base_point, v.beta, v.sum
                                    ));
                                    break;
                                }
                            }
                        }
                    }
                    ("A", pass, why)
                }
                CheckKind::R => ("R", in_r(&datum, &x, lattice)?, None),
                CheckKind::W => ("W", is_w_invariant(&datum, &x)?, None),
                CheckKind::String => {
                    let b = need_beta()?;
                    match string_violation(&datum, &x, &b)? {
                        None => ("string", true, None),
                        Some(v) => (
                            "string",
                            false,
                            Some(format!(
                                "charged line {} + Z{} sums to {}",
                                v.base_point, v.beta, v.sum
                            )),
                        ),
                    }
                }
                CheckKind::Sv => {
                    let b = need_beta()?;
                    let om = omega_weight(&datum, &b)?;
                    ("sv", sv_condition(&datum, &x, &b, &om, sign)?, None)
                }
                CheckKind::Ev => {
                    let b = need_beta()?;
                    let om = omega_weight(&datum, &b)?;
                    ("ev", ev_condition(&datum, &x, &b, &om)?, None)
                }
            };
            let doc = CheckJson {
                test: kind.to_string(),
                pass,
                counterexample,
            };
            emit(&doc, out.as_ref())?;
            Ok(0)
        }
        Command::Decompose { input, base, out } => {
            let (datum, x) = load_element(&input)?;
            let b = resolve_base(&datum, &base.base)?;
            let forest = BaseForest::new(&datum, &b)?;
            let (coeffs, remainder) = decompose(&datum, &forest, &x)?;
            let doc = DecomposeJson {
                coefficients: coeffs
                    .iter()
                    .map(|(lam, c)| DecomposeEntryJson {
                        lambda: WeightJson::from_weight(lam),
                        coeff: [c.a, c.b],
                    })
                    .collect(),
                remainder: ElementJson::from_element(&remainder),
            };
            emit(&doc, out.as_ref())?;
            Ok(0)
        }
        Command::Suite => {
            let seed = crate::suite::seed_from_env();
            let reports = crate::suite::run_all(seed);
            let mut failures = 0;
            for r in &reports {
                println!(
                    "criterion {:>2}: {}  {}  [{}]",
                    r.id,
                    if r.pass { "PASS" } else { "FAIL" },
                    r.name,
                    r.detail
                );
                if !r.pass {
                    failures += 1;
                }
            }
            println!(
                "{} of {} criteria passed (seed {seed})",
                reports.len() - failures,
                reports.len()
            );
            Ok(if failures == 0 { 0 } else { 1 })
        }
    }
}

/// Entry point shared by the binary and the CLI tests. Returns the process
/// exit code; errors print to stderr.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            // clap's exit semantics: help/version go to stdout and succeed.
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    match run_command(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}
