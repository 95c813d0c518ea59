//! JSON front end. Every response is a JSON object with `status` and, on failure,
//! `error_kind` and `message`. Exit codes: 0 success, 1 usage or malformed input,
//! 2 domain error or failed suite.

use std::io::Read;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;
use serde_json::{json, Map, Value};

use ulocal::bruhat::{symmetric_unit_census, verify_presentation, Sl2Star};
use ulocal::error::max_enum_from_env;
use ulocal::json::{
    elem_from_json, elem_to_json, transvections_to_json, vector_from_json, vector_to_json, word_from_json, word_to_json,
    ElemJson, LetterJson, MatJson,
};
use ulocal::localring::{Ring, RingSpec};
use ulocal::matform::{invertible_matrices, FormSpace, Mat};
use ulocal::reduce::{det_image, norm_one_decompose, ReductionContext};
use ulocal::suite::run_suite;
use ulocal::transvect::{perfectness_check, sp_factor, su_factor, witt_extend};
use ulocal::weil::{gauss_sum, mu, verify_weil, AdditiveCharacter, WeilRep};
use ulocal::Error;

#[derive(Parser)]
#[command(name = "ulocal", version, about = "Unitary groups over finite local rings, JSON in and out")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Ring properties and quotients.
    #[command(subcommand)]
    Ring(RingCmd),
    /// Bruhat factorization, word reduction and presentation checks.
    #[command(subcommand)]
    Bruhat(BruhatCmd),
    /// Quadratic Gauss sum of a primitive character.
    Gauss(GaussArgs),
    /// Weil representation operators and verification.
    #[command(subcommand)]
    Weil(WeilCmd),
    /// Transvection factorization of special unitary matrices.
    #[command(subcommand)]
    Su(FactorCmd),
    /// Transvection factorization of symplectic matrices.
    #[command(subcommand)]
    Sp(FactorCmd),
    /// Completion of symplectic sets.
    #[command(subcommand)]
    Witt(WittCmd),
    /// Perfectness of the group generated by transvections.
    #[command(subcommand)]
    Perfect(PerfectCmd),
    /// Projection to quotients and lifting.
    #[command(subcommand)]
    Reduce(ReduceCmd),
    /// Run a named verification suite.
    Suite { name: String },
}

#[derive(Args)]
struct RingArg {
    /// `Z/25`, `F25`, `GR(25,2)`, `Z/5[t]/(t^2)`, optionally `:<involution>`, or a JSON ring spec.
    #[arg(long)]
    ring: String,
}

#[derive(Args)]
struct InputArg {
    /// JSON input file, `-` for standard input.
    #[arg(long, default_value = "-")]
    input: String,
}

#[derive(Subcommand)]
enum RingCmd {
    Info(RingArg),
    Quotient {
        #[command(flatten)]
        ring: RingArg,
        /// Ideal generator as a JSON coefficient array, repeatable.
        #[arg(long = "gen", required = true)]
        gens: Vec<String>,
    },
}

#[derive(Subcommand)]
enum BruhatCmd {
    /// Factor a matrix given as JSON.
    Factor(InputArg),
    /// Rewrite a word given as a JSON array of letters.
    Reduce {
        #[command(flatten)]
        ring: RingArg,
        #[arg(long, default_value_t = 1)]
        m: usize,
        #[command(flatten)]
        input: InputArg,
    },
    Verify {
        #[command(flatten)]
        ring: RingArg,
        #[arg(long, default_value_t = 1)]
        m: usize,
        #[arg(long, default_value_t = 1000)]
        words: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    Census {
        #[command(flatten)]
        ring: RingArg,
        #[arg(long, default_value_t = 1)]
        m: usize,
    },
}

#[derive(Args)]
struct GaussArgs {
    #[command(flatten)]
    ring: RingArg,
    /// Character parameter as a JSON coefficient array.
    #[arg(long, default_value = "[1]")]
    lambda: String,
}

#[derive(Subcommand)]
enum WeilCmd {
    /// Generator operators and, optionally, operators of matrices read from `--input`.
    Build {
        #[command(flatten)]
        ring: RingArg,
        #[arg(long, default_value_t = 1)]
        n: usize,
        #[arg(long, default_value = "[1]")]
        lambda: String,
        /// JSON array of matrices whose operators are also emitted.
        #[arg(long)]
        input: Option<String>,
        /// Write the operator table here instead of standard output.
        #[arg(long)]
        out: Option<String>,
    },
    Verify {
        #[command(flatten)]
        ring: RingArg,
        #[arg(long, default_value_t = 1)]
        n: usize,
        #[arg(long, default_value = "[1]")]
        lambda: String,
        #[arg(long, default_value_t = 500)]
        samples: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
}

#[derive(Subcommand)]
enum FactorCmd {
    Factor(InputArg),
}

#[derive(Subcommand)]
enum WittCmd {
    /// Extend a JSON array of vectors `[x_1, y_1, ..., x_k, y_k]`.
    Extend {
        #[command(flatten)]
        ring: RingArg,
        #[arg(long)]
        m: usize,
        #[command(flatten)]
        input: InputArg,
    },
}

#[derive(Subcommand)]
enum PerfectCmd {
    Check {
        #[command(flatten)]
        ring: RingArg,
        #[arg(long, default_value_t = 1)]
        m: usize,
    },
}

#[derive(Args)]
struct QuotientArgs {
    #[command(flatten)]
    ring: RingArg,
    /// Ideal generator as a JSON coefficient array, repeatable.
    #[arg(long = "gen", required = true)]
    gens: Vec<String>,
}

#[derive(Subcommand)]
enum ReduceCmd {
    /// Project a source matrix.
    Project {
        #[command(flatten)]
        quotient: QuotientArgs,
        #[command(flatten)]
        input: InputArg,
    },
    /// Lift a target matrix in the unitary group.
    Lift {
        #[command(flatten)]
        quotient: QuotientArgs,
        #[command(flatten)]
        input: InputArg,
    },
    DetImage {
        #[command(flatten)]
        ring: RingArg,
        #[arg(long, default_value_t = 1)]
        m: usize,
    },
    NormOne {
        #[command(flatten)]
        ring: RingArg,
        /// Element as a JSON coefficient array.
        #[arg(long)]
        elem: String,
    },
}

/// Failure of a request: usage and schema problems exit with 1, domain errors with 2.
enum Failure {
    Usage(String),
    Domain(Error),
    SuiteFailed(Value),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::SchemaError(m) => Failure::Usage(m),
            e => Failure::Domain(e),
        }
    }
}

type Outcome = Result<Value, Failure>;

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("reports serialize")
}

fn parse_json<T: serde::de::DeserializeOwned>(text: &str, what: &str) -> Result<T, Failure> {
    serde_json::from_str(text).map_err(|e| Failure::Usage(format!("malformed {what}: {e}")))
}

fn read_input(path: &str) -> Result<String, Failure> {
    let mut s = String::new();
    if path == "-" {
        std::io::stdin().read_to_string(&mut s).map_err(|e| Failure::Usage(format!("reading standard input: {e}")))?;
    } else {
        s = std::fs::read_to_string(path).map_err(|e| Failure::Usage(format!("reading {path}: {e}")))?;
    }
    Ok(s)
}

fn ring(arg: &RingArg) -> Result<Ring, Failure> {
    let spec: RingSpec = arg.ring.parse().map_err(|e: Error| match e {
        Error::SchemaError(m) => Failure::Usage(m),
        e => Failure::Domain(e),
    })?;
    Ok(Ring::with_cap(spec, max_enum_from_env())?)
}

fn elem_arg(r: &Ring, text: &str) -> Result<ulocal::localring::Elem, Failure> {
    let e: ElemJson = parse_json(text, "element")?;
    Ok(elem_from_json(r, &e)?)
}

fn matrix_input(input: &InputArg) -> Result<Mat, Failure> {
    let m: MatJson = parse_json(&read_input(&input.input)?, "matrix")?;
    Ok(m.to_mat(max_enum_from_env())?)
}

fn context(q: &QuotientArgs, m: usize) -> Result<ReductionContext, Failure> {
    let r = ring(&q.ring)?;
    let gens = q.gens.iter().map(|g| elem_arg(&r, g)).collect::<Result<Vec<_>, _>>()?;
    Ok(ReductionContext::new(&r, &gens, m)?)
}

fn square_half(x: &Mat) -> Result<usize, Failure> {
    if x.rows() != x.cols() || !x.rows().is_multiple_of(2) || x.rows() == 0 {
        return Err(Failure::Domain(Error::DimMismatch("expected a square matrix of even size".into())));
    }
    Ok(x.rows() / 2)
}

fn ring_cmd(cmd: &RingCmd) -> Outcome {
    match cmd {
        RingCmd::Info(arg) => {
            let r = ring(arg)?;
            let minimal = r.minimal_ideal().map(|i| i.len() as u64).ok();
            Ok(json!({
                "ring": r.spec(),
                "display": r.to_string(),
                "size": r.size(),
                "q": r.q(),
                "units": r.units().len(),
                "fixed_ring_size": r.fixed_ring().size(),
                "d": r.fixed_ring_exponent(),
                "ramification": r.classify_ramification(),
                "unique_minimal_ideal_size": minimal,
            }))
        }
        RingCmd::Quotient { ring: arg, gens } => {
            let r = ring(arg)?;
            let gens = gens.iter().map(|g| elem_arg(&r, g)).collect::<Result<Vec<_>, _>>()?;
            let q = r.quotient(&gens)?;
            Ok(json!({
                "source": r.spec(),
                "target": q.target().spec(),
                "ideal_size": r.ideal(&gens).len(),
                "target_size": q.target().size(),
            }))
        }
    }
}

fn bruhat_cmd(cmd: &BruhatCmd) -> Outcome {
    match cmd {
        BruhatCmd::Factor(input) => {
            let x = matrix_input(input)?;
            let g = Sl2Star::new(x.ring(), square_half(&x)?);
            let word = g.factor(&x)?;
            Ok(json!({"word": word_to_json(&word), "z_length": word.z_length()}))
        }
        BruhatCmd::Reduce { ring: arg, m, input } => {
            let r = ring(arg)?;
            let letters: Vec<LetterJson> = parse_json(&read_input(&input.input)?, "word")?;
            let g = Sl2Star::new(&r, *m);
            g.check_hypotheses()?;
            let word = word_from_json(&r, &letters)?;
            let (reduced, steps) = g.reduce_traced(&word)?;
            Ok(json!({"word": word_to_json(&reduced), "z_length": reduced.z_length(), "steps": steps}))
        }
        BruhatCmd::Verify { ring: arg, m, words, seed } => Ok(to_value(&verify_presentation(&ring(arg)?, *m, *words, *seed)?)),
        BruhatCmd::Census { ring: arg, m } => Ok(to_value(&symmetric_unit_census(&ring(arg)?, *m)?)),
    }
}

/// Primitive character with `q > 3`, as required by the Weil construction.
fn weil_character(r: &Ring, lambda: &str) -> Result<AdditiveCharacter, Failure> {
    if r.q() <= 3 {
        return Err(Failure::Domain(Error::HypothesisViolated(format!("residue field of size {} needs q > 3", r.q()))));
    }
    let c = elem_arg(r, lambda)?;
    let l = AdditiveCharacter::new(r, c);
    if !l.is_primitive()? {
        return Err(Failure::Domain(Error::NotPrimitive));
    }
    Ok(l)
}

fn gauss_cmd(args: &GaussArgs) -> Outcome {
    let r = ring(&args.ring)?;
    let l = weil_character(&r, &args.lambda)?;
    let g = gauss_sum(&l)?;
    let m1 = mu(&r, r.from_int(-1))?;
    let square = &g * &g;
    let want = ulocal::cyclo::CycNum::from_int(l.conductor(), m1 * r.size() as i64);
    Ok(json!({
        "lambda": elem_to_json(&r, l.parameter()),
        "gauss": ulocal::cyclo::CycNumJson::from(&g),
        "square": ulocal::cyclo::CycNumJson::from(&square),
        "mu_minus_one": m1,
        "square_identity": square == want,
    }))
}

fn weil_cmd(cmd: &WeilCmd) -> Outcome {
    match cmd {
        WeilCmd::Build { ring: arg, n, lambda, input, out } => {
            let r = ring(arg)?;
            let l = weil_character(&r, lambda)?;
            let w = WeilRep::new(&r, *n, l.parameter())?;
            let g = w.group();
            let mut ops = Map::new();
            ops.insert("w".into(), to_value(&w.weyl_op().to_json()));
            ops.insert("sigma".into(), to_value(&w.sigma_op().to_json()));
            let mut hs = Vec::new();
            for t in invertible_matrices(&r, *n)? {
                hs.push(json!({"t": MatJson::from_mat(&t), "op": w.h_op(&t)?.to_operator().to_json()}));
            }
            let mut us = Vec::new();
            for s in g.symmetric()? {
                us.push(json!({"r": MatJson::from_mat(s), "op": w.u_op(s)?.to_operator().to_json()}));
            }
            ops.insert("h".into(), Value::Array(hs));
            ops.insert("u".into(), Value::Array(us));
            if let Some(path) = input {
                let mats: Vec<MatJson> = parse_json(&read_input(path)?, "matrix list")?;
                let mut els = Vec::new();
                for m in &mats {
                    let x = m.to_mat_over(&r)?;
                    els.push(json!({"g": m, "op": w.operator(&x)?.to_json()}));
                }
                ops.insert("elements".into(), Value::Array(els));
            }
            let table = json!({
                "n": n,
                "dim": w.dim(),
                "lambda": elem_to_json(&r, l.parameter()),
                "gauss": ulocal::cyclo::CycNumJson::from(w.gauss()),
                "operators": ops,
            });
            match out {
                Some(path) => {
                    let text = serde_json::to_string(&table).expect("table serializes");
                    std::fs::write(path, text).map_err(|e| Failure::Usage(format!("writing {path}: {e}")))?;
                    Ok(json!({"out": path, "dim": w.dim()}))
                }
                None => Ok(table),
            }
        }
        WeilCmd::Verify { ring: arg, n, lambda, samples, seed } => {
            let r = ring(arg)?;
            let l = weil_character(&r, lambda)?;
            Ok(to_value(&verify_weil(&r, *n, l.parameter(), *samples, *seed)?))
        }
    }
}

fn factor_cmd(cmd: &FactorCmd, symplectic: bool) -> Outcome {
    let FactorCmd::Factor(input) = cmd;
    let x = matrix_input(input)?;
    let space = FormSpace::new(x.ring(), square_half(&x)?);
    let word = if symplectic { sp_factor(&space, &x)? } else { su_factor(&space, &x)? };
    Ok(json!({"word": transvections_to_json(x.ring(), &word), "letters": word.len()}))
}

fn witt_cmd(cmd: &WittCmd) -> Outcome {
    let WittCmd::Extend { ring: arg, m, input } = cmd;
    let r = ring(arg)?;
    let vectors: Vec<Vec<ElemJson>> = parse_json(&read_input(&input.input)?, "vector list")?;
    let partial = vectors.iter().map(|v| vector_from_json(&r, v)).collect::<Result<Vec<_>, _>>()?;
    let space = FormSpace::new(&r, *m);
    let basis = witt_extend(&space, &partial)?;
    Ok(json!({"basis": basis.iter().map(|v| vector_to_json(&r, v)).collect::<Vec<_>>()}))
}

fn reduce_cmd(cmd: &ReduceCmd) -> Outcome {
    match cmd {
        ReduceCmd::Project { quotient, input } => {
            let x = matrix_input(input)?;
            let ctx = context(quotient, square_half(&x)?)?;
            Ok(json!({"matrix": MatJson::from_mat(&ctx.project_matrix(&x)?)}))
        }
        ReduceCmd::Lift { quotient, input } => {
            let m: MatJson = parse_json(&read_input(&input.input)?, "matrix")?;
            let ctx = context(quotient, m.rows / 2)?;
            let z = m.to_mat_over(ctx.target().ring())?;
            square_half(&z)?;
            let x = ctx.lift_u(&z)?;
            Ok(json!({"matrix": MatJson::from_mat(&x)}))
        }
        ReduceCmd::DetImage { ring: arg, m } => Ok(to_value(&det_image(&ring(arg)?, *m)?)),
        ReduceCmd::NormOne { ring: arg, elem } => {
            let r = ring(arg)?;
            let a = elem_arg(&r, elem)?;
            let b = norm_one_decompose(&r, a)?;
            Ok(json!({"a": elem_to_json(&r, a), "b": elem_to_json(&r, b)}))
        }
    }
}

fn suite_cmd(name: &str) -> Outcome {
    let start = Instant::now();
    let rep = run_suite(name)?;
    eprintln!("suite {name}: {:.3} s", start.elapsed().as_secs_f64());
    let v = to_value(&rep);
    if rep.ok {
        Ok(v)
    } else {
        Err(Failure::SuiteFailed(v))
    }
}

fn dispatch(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Ring(c) => ring_cmd(c),
        Command::Bruhat(c) => bruhat_cmd(c),
        Command::Gauss(a) => gauss_cmd(a),
        Command::Weil(c) => weil_cmd(c),
        Command::Su(c) => factor_cmd(c, false),
        Command::Sp(c) => factor_cmd(c, true),
        Command::Witt(c) => witt_cmd(c),
        Command::Perfect(PerfectCmd::Check { ring: arg, m }) => Ok(to_value(&perfectness_check(&ring(arg)?, *m)?)),
        Command::Reduce(c) => reduce_cmd(c),
        Command::Suite { name } => suite_cmd(name),
    }
}

fn emit(v: &Value) {
    println!("{}", serde_json::to_string(v).expect("response serializes"));
}

fn error_envelope(kind: &str, message: &str) -> Value {
    json!({"status": "error", "error_kind": kind, "message": message})
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return ExitCode::SUCCESS;
            }
            emit(&error_envelope("UsageError", e.to_string().trim()));
            return ExitCode::from(1);
        }
    };
    match dispatch(&cli) {
        Ok(Value::Object(mut body)) => {
            let mut v = Map::new();
            v.insert("status".into(), json!("ok"));
            v.insert("error_kind".into(), Value::Null);
            v.append(&mut body);
            emit(&Value::Object(v));
            ExitCode::SUCCESS
        }
        Ok(other) => {
            emit(&json!({"status": "ok", "error_kind": null, "result": other}));
            ExitCode::SUCCESS
        }
        Err(Failure::Usage(m)) => {
            emit(&error_envelope("SchemaError", &m));
            ExitCode::from(1)
        }
        Err(Failure::Domain(e)) => {
            emit(&error_envelope(e.kind(), &e.to_string()));
            ExitCode::from(2)
        }
        Err(Failure::SuiteFailed(report)) => {
            let mut v = error_envelope("ClaimFailed", "at least one claim failed");
            v["report"] = report;
            emit(&v);
            ExitCode::from(2)
        }
    }
}
