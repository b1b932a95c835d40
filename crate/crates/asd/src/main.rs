use std::path::PathBuf;
use std::process::ExitCode;

use asd_core::basis::{check_axioms, classify, Classification, SearchBound, Universe};
use asd_core::instances::finite::FiniteBasis;
use asd_core::instances::ideal::{is_rounded_ideal, point_ideal, principal};
use asd_core::instances::interval::IntervalBasis;
use asd_core::matrices::{preserves, validate_matrix, Connective, Matrix, MatrixError};
use asd_core::nucleus::{
    check_nucleus_laws, check_recovery, points_theorem_check, NucleusError, NucleusOptions, PredicateClass,
    DEFAULT_MAX_CARD, JOIN_LAW, MEET_LAW,
};
use asd_core::rational::{lit, parse_rational, ratio, Q};
use asd_core::realcalc::{evaluate, parse_expr, EvalError, DEFAULT_MAX_DEPTH};
use asd_core::report::{AxiomReport, Failure};
use clap::{Args, Parser, Subcommand};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

mod load;

use load::{load_matrix, resolve_basis, LoadedMatrix, NamedBasis, Space};

const PASS: u8 = 0;
const REFUTED: u8 = 1;
const USAGE: u8 = 2;
const EXHAUSTED: u8 = 3;

#[derive(Parser)]
#[command(
    name = "asd",
    version,
    about = "Abstract bases, nuclei, matrices and exact real evaluation"
)]
struct Cli {
    #[command(flatten)]
    bound: BoundArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct BoundArgs {
    /// Refinement levels tried by witness searches after level 0.
    #[arg(long, global = true)]
    levels: Option<u32>,
    /// Candidates examined per witness search.
    #[arg(long, global = true)]
    max_candidates: Option<usize>,
}

impl BoundArgs {
    fn bound(&self) -> SearchBound {
        let d = SearchBound::default();
        SearchBound {
            levels: self.levels.unwrap_or(d.levels),
            max_candidates: self.max_candidates.unwrap_or(d.max_candidates),
        }
    }
}

fn rational(s: &str) -> Result<Q, String> {
    parse_rational(s).map_err(|e| e.to_string())
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate an expression in `x` at a rational point to within ε.
    Eval {
        expr: String,
        #[arg(long, value_parser = rational, allow_hyphen_values = true)]
        at: Q,
        #[arg(long, value_parser = rational)]
        eps: Q,
        #[arg(long, default_value_t = DEFAULT_MAX_DEPTH)]
        max_depth: u32,
        #[arg(long)]
        json: bool,
    },
    /// Check the abstract-basis rules.
    CheckBasis {
        basis: String,
        /// Sample this many tuples instead of walking a finite carrier.
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long, conflicts_with = "samples")]
        exhaustive: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Check the nucleus laws on a finite basis.
    CheckNucleus {
        basis: String,
        #[arg(long, default_value_t = DEFAULT_MAX_CARD)]
        max_card: usize,
        /// Sample this many pairs of predicates instead of enumerating.
        #[arg(long)]
        sampled: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Quantify over every predicate, not only the monotone ones.
        #[arg(long)]
        arbitrary: bool,
    },
    /// Check points: admissibility against rounded homomorphisms on finite
    /// bases, rounded point ideals on interval bases.
    CheckPoints {
        basis: String,
        /// Points to check on an interval basis; random ones when absent.
        #[arg(long = "at", value_parser = rational, allow_hyphen_values = true)]
        at: Vec<Q>,
        #[arg(long, default_value_t = 20)]
        points: usize,
        /// Codes sampled per point.
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Validate a matrix file.
    ValidateMatrix {
        file: PathBuf,
        /// Sample this many pairs instead of walking finite carriers.
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Also check preservation of a connective: top, bot, meet or join.
        #[arg(long = "preserves", value_parser = connective)]
        connectives: Vec<Connective>,
    },
}

fn connective(s: &str) -> Result<Connective, String> {
    Connective::parse(s).ok_or_else(|| format!("`{s}` is not one of top, bot, meet, join"))
}

/// Default sample count for bases and matrices without a finite carrier.
const SAMPLES: usize = 10_000;
const MATRIX_SAMPLES: usize = 1000;

fn verdict(rep: &AxiomReport) -> u8 {
    if rep.passed() {
        PASS
    } else if rep.refutations() > 0 {
        REFUTED
    } else {
        EXHAUSTED
    }
}

/// Refutation outranks exhaustion, which outranks a pass.
fn worse(a: u8, b: u8) -> u8 {
    if a == REFUTED || b == REFUTED {
        REFUTED
    } else {
        a.max(b)
    }
}

fn usage(msg: impl std::fmt::Display) -> u8 {
    eprintln!("error: {msg}");
    USAGE
}

fn yes(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn print_class(c: Classification) {
    println!("compact: {}, filter: {}", yes(c.compact), yes(c.filter));
}

fn eval(expr: &str, at: &Q, eps: &Q, max_depth: u32, json: bool) -> u8 {
    let e = match parse_expr(expr) {
        Ok(e) => e,
        Err(err) => {
            let col = expr.get(..err.offset()).map_or(err.offset(), |s| s.chars().count());
            eprintln!("error: {err}\n  {expr}\n  {}^", " ".repeat(col));
            return USAGE;
        }
    };
    match evaluate(&e, at, eps, max_depth) {
        Ok(ev) => {
            if json {
                let v = serde_json::json!({
                    "expr": expr,
                    "at": lit(at),
                    "eps": lit(eps),
                    "lower": lit(&ev.interval.lower),
                    "upper": lit(&ev.interval.upper),
                    "depth": ev.depth,
                });
                println!("{v}");
            } else {
                println!("{}", ev.interval);
            }
            PASS
        }
        Err(EvalError::NonPositiveEps) => usage("--eps must be positive"),
        Err(err @ EvalError::DepthExhausted(_)) => {
            eprintln!("error: {err}");
            EXHAUSTED
        }
    }
}

fn check_basis(b: NamedBasis, samples: Option<usize>, exhaustive: bool, seed: u64, bound: SearchBound) -> u8 {
    let universe = match samples {
        Some(count) => Universe::Random { count, seed },
        None => Universe::Exhaustive,
    };
    let (rep, class) = match &b.space {
        Space::Finite(fb) => {
            println!("basis {}: {} codes", b.name, fb.size());
            let rep = check_axioms(fb, universe, bound).expect("finite carrier");
            (rep, classify(fb, Universe::Exhaustive))
        }
        Space::Interval(ib) => {
            if exhaustive {
                return usage(format!("`{}` has no finite carrier; use --samples", b.name));
            }
            let count = samples.unwrap_or(SAMPLES);
            println!("basis {}: {ib}, {count} samples, seed {seed}", b.name);
            let rep = check_axioms(ib, Universe::Random { count, seed }, bound).expect("sampled check");
            (
                rep,
                classify(
                    ib,
                    Universe::Random {
                        count: count.min(1000),
                        seed,
                    },
                ),
            )
        }
    };
    println!("{rep}");
    print_class(class);
    verdict(&rep)
}

fn finite_only(b: NamedBasis, what: &str) -> Result<FiniteBasis, u8> {
    match b.space {
        Space::Finite(fb) => Ok(fb),
        Space::Interval(_) => Err(usage(format!("{what} needs a finite basis; `{}` is spatial", b.name))),
    }
}

fn nucleus_error(e: NucleusError) -> u8 {
    match e {
        NucleusError::CarrierTooLarge { size, cap } => usage(format!(
            "carrier has {size} codes but exhaustive checks stop at {cap}; try --sampled N"
        )),
        NucleusError::AxiomsFail(rules) => {
            eprintln!("error: basis fails its axioms ({rules})");
            REFUTED
        }
        other => usage(other),
    }
}

fn check_nucleus(fb: &FiniteBasis, opts: NucleusOptions) -> u8 {
    let rep = match check_nucleus_laws(fb, opts) {
        Ok(rep) => rep,
        Err(e) => return nucleus_error(e),
    };
    println!("{rep}");
    for c in &rep.counterexamples {
        if c.kind == Failure::Refuted && (c.rule == MEET_LAW || c.rule == JOIN_LAW) {
            println!("counterexample {} (Φ, Ψ, ξ) = ({})", c.rule, c.codes.join(", "));
        }
    }
    verdict(&rep)
}

fn check_finite_points(fb: &FiniteBasis, bound: SearchBound) -> u8 {
    let mut rep = match points_theorem_check(fb) {
        Ok(rep) => rep,
        Err(e) => return nucleus_error(e),
    };
    match check_recovery(fb) {
        Ok(r) => rep.merge(r),
        Err(e) => return nucleus_error(e),
    }
    for n in 0..fb.size() {
        let r = is_rounded_ideal(fb, &principal(fb, n), Universe::Exhaustive, bound).expect("finite carrier");
        rep.merge(r);
    }
    println!("{rep}");
    verdict(&rep)
}

fn random_point(ib: &IntervalBasis, rng: &mut ChaCha8Rng) -> Q {
    let d = rng.gen_range(1..=16);
    let lo = if ib.in_space(&ratio(-1, 1)) { -8 * d } else { 0 };
    let hi = if ib.in_space(&ratio(2, 1)) { 8 * d } else { d };
    ratio(rng.gen_range(lo..=hi), d)
}

fn check_interval_points(
    ib: &IntervalBasis,
    at: Vec<Q>,
    points: usize,
    samples: usize,
    seed: u64,
    bound: SearchBound,
) -> u8 {
    let xs = if at.is_empty() {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        (0..points).map(|_| random_point(ib, &mut rng)).collect()
    } else {
        at
    };
    let mut worst = PASS;
    for (i, x) in xs.into_iter().enumerate() {
        let xi = match point_ideal(ib, x) {
            Ok(xi) => xi,
            Err(e) => return usage(e),
        };
        let universe = Universe::Random {
            count: samples,
            seed: seed.wrapping_add(i as u64),
        };
        let rep = is_rounded_ideal(ib, &xi, universe, bound).expect("sampled check");
        let v = verdict(&rep);
        if v == PASS {
            println!("{}: PASS", xi.name);
        } else {
            println!("{}:\n{rep}", xi.name);
        }
        worst = worse(worst, v);
    }
    println!("{}", if worst == PASS { "PASS" } else { "FAIL" });
    worst
}

fn run_matrix<M: Matrix + ?Sized>(
    mx: &M,
    universe: Universe,
    bound: SearchBound,
    cs: &[Connective],
) -> Result<AxiomReport, MatrixError> {
    let mut rep = validate_matrix(mx, universe, bound)?;
    for &c in cs {
        rep.merge(preserves(mx, c, universe, bound)?);
    }
    Ok(rep)
}

fn validate(mx: LoadedMatrix, samples: Option<usize>, seed: u64, bound: SearchBound, cs: &[Connective]) -> u8 {
    let sampled = Universe::Random {
        count: samples.unwrap_or(MATRIX_SAMPLES),
        seed,
    };
    let finite = |count: Option<usize>| match count {
        Some(count) => Universe::Random { count, seed },
        None => Universe::Exhaustive,
    };
    let (name, rep) = match &mx {
        LoadedMatrix::Real(m) => (m.name(), run_matrix(m, sampled, bound, cs)),
        LoadedMatrix::Binary(m) => (m.name(), run_matrix(m, sampled, bound, cs)),
        LoadedMatrix::Finite(m) => (m.name(), run_matrix(m, finite(samples), bound, cs)),
        LoadedMatrix::FiniteIdentity(m) => (m.name(), run_matrix(m, finite(samples), bound, cs)),
    };
    match rep {
        Ok(rep) => {
            println!("matrix {name}");
            println!("{rep}");
            verdict(&rep)
        }
        Err(e) => usage(e),
    }
}

fn run(cli: Cli) -> u8 {
    let bound = cli.bound.bound();
    let basis = |arg: &str| resolve_basis(arg, None).map_err(usage);
    match cli.command {
        Command::Eval {
            expr,
            at,
            eps,
            max_depth,
            json,
        } => eval(&expr, &at, &eps, max_depth, json),
        Command::CheckBasis {
            basis: arg,
            samples,
            exhaustive,
            seed,
        } => match basis(&arg) {
            Ok(b) => check_basis(b, samples, exhaustive, seed, bound),
            Err(code) => code,
        },
        Command::CheckNucleus {
            basis: arg,
            max_card,
            sampled,
            seed,
            arbitrary,
        } => {
            let fb = match basis(&arg).and_then(|b| finite_only(b, "check-nucleus")) {
                Ok(fb) => fb,
                Err(code) => return code,
            };
            let class = if arbitrary {
                PredicateClass::Arbitrary
            } else {
                PredicateClass::Monotone
            };
            let opts = NucleusOptions {
                max_card,
                class,
                sampled: sampled.map(|n| (n, seed)),
            };
            check_nucleus(&fb, opts)
        }
        Command::CheckPoints {
            basis: arg,
            at,
            points,
            samples,
            seed,
        } => match basis(&arg) {
            Ok(NamedBasis {
                space: Space::Finite(fb),
                ..
            }) => {
                if !at.is_empty() {
                    return usage("--at only applies to interval bases");
                }
                check_finite_points(&fb, bound)
            }
            Ok(NamedBasis {
                space: Space::Interval(ib),
                ..
            }) => check_interval_points(&ib, at, points, samples, seed, bound),
            Err(code) => code,
        },
        Command::ValidateMatrix {
            file,
            samples,
            seed,
            connectives,
        } => match load_matrix(&file) {
            Ok(mx) => validate(mx, samples, seed, bound, &connectives),
            Err(e) => usage(e),
        },
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { USAGE } else { PASS });
        }
    };
    ExitCode::from(run(cli))
}
