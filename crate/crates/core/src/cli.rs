//! Command-line front end.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fs;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::algebra::{parse, AlgebraParams};
use crate::analysis::{
    central_character, eigenspaces, exhaustive_invariant_search, field_eigenvalues, is_irreducible_with_budget,
    verify_relations, Check, Report, Verdict, DEFAULT_BUDGET,
};
use crate::error::{Error, Result};
use crate::field::make_field;
use crate::iso::{criterion_iso, find_intertwiner_with};
use crate::reps::{build_rep, matrix_json, sample_spec, Family, RepSpec, Representation};

const EXIT_OK: i32 = 0;
const EXIT_FAIL: i32 = 1;
const EXIT_USAGE: i32 = 2;
const EXIT_INCONCLUSIVE: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "cherednik", version, about = "Representations of rank-1 trigonometric Cherednik algebras over GF(p^m)")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build a family representation and write it as JSON.
    Build(RepArgs),
    /// Check the four defining relations.
    Verify(RepArgs),
    /// Scalars of the central elements.
    Central(RepArgs),
    /// Eigenspaces of y (or of X or s).
    Eigen {
        #[command(flatten)]
        rep: RepArgs,
        #[arg(long, value_enum, default_value_t = Operator::Y)]
        operator: Operator,
    },
    /// Irreducibility verdict with a witness when reducible.
    Irreducible {
        #[command(flatten)]
        rep: RepArgs,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: usize,
        /// Use the exhaustive line search instead of the randomized test.
        #[arg(long)]
        exhaustive: bool,
    },
    /// Decide isomorphism of two representations.
    Iso {
        #[command(flatten)]
        algebra: AlgebraArgs,
        #[command(flatten)]
        common: CommonArgs,
        /// Inline spec (e.g. `V12:theta=1`) or path to a spec or representation JSON file.
        left: String,
        right: String,
    },
    /// PBW normal form of an expression in X, Xinv, s, y.
    NormalForm {
        #[command(flatten)]
        algebra: AlgebraArgs,
        #[command(flatten)]
        common: CommonArgs,
        expression: String,
    },
    /// Census of sampled instances of every admissible family.
    Classify {
        #[command(flatten)]
        algebra: AlgebraArgs,
        #[command(flatten)]
        common: CommonArgs,
        /// Parameter tuples sampled per family.
        #[arg(long, default_value_t = 5)]
        samples: usize,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Operator {
    Y,
    X,
    S,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Tsv,
}

#[derive(Args, Debug)]
struct AlgebraArgs {
    /// Characteristic.
    #[arg(long)]
    p: Option<i64>,
    /// Extension degree.
    #[arg(long, default_value_t = 1)]
    m: i64,
    /// 0 or 1.
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    t: String,
    /// Field literal: an integer, or `c0,c1,...` when m > 1.
    #[arg(long, default_value = "0", allow_hyphen_values = true)]
    k: String,
}

#[derive(Args, Debug)]
struct CommonArgs {
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Write the report here instead of standard output.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct RepArgs {
    #[command(flatten)]
    algebra: AlgebraArgs,
    #[command(flatten)]
    common: CommonArgs,
    #[arg(long)]
    family: Option<String>,
    /// Load a representation JSON file instead of building a family.
    #[arg(long, conflicts_with = "family")]
    input: Option<PathBuf>,
    #[arg(long, allow_hyphen_values = true)]
    beta: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    a: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    b: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    mu: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    d: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    theta: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    c: Option<String>,
}

/// Output of one command: the artifact and the exit code.
struct Outcome {
    json: Value,
    tsv: String,
    code: i32,
}

impl Outcome {
    fn report(report: &Report) -> Self {
        Outcome { json: report.to_json(), tsv: report.to_tsv(), code: report_code(report) }
    }
}

fn report_code(report: &Report) -> i32 {
    match report.status() {
        crate::analysis::Status::Pass => EXIT_OK,
        crate::analysis::Status::Fail => EXIT_FAIL,
        crate::analysis::Status::Inconclusive => EXIT_INCONCLUSIVE,
    }
}

/// Parses `argv` (program name first), runs the command and returns the
/// process exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    let common = match &cli.command {
        Command::Build(r) | Command::Verify(r) | Command::Central(r) => &r.common,
        Command::Eigen { rep, .. } | Command::Irreducible { rep, .. } => &rep.common,
        Command::Iso { common, .. } | Command::NormalForm { common, .. } | Command::Classify { common, .. } => common,
    };
    let (format, output) = (common.format, common.output.clone());
    let outcome = match execute(&cli.command) {
        Ok(o) => o,
        Err(Error::Inconclusive(n)) => {
            eprintln!("inconclusive after {n} attempts");
            return EXIT_INCONCLUSIVE;
        }
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_USAGE;
        }
    };
    let text = match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&outcome.json).expect("JSON values serialize");
            s.push('\n');
            s
        }
        Format::Tsv => outcome.tsv,
    };
    match output {
        Some(path) => {
            if let Err(e) = fs::write(&path, text) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return EXIT_USAGE;
            }
        }
        None => print!("{text}"),
    }
    outcome.code
}

fn algebra_params(args: &AlgebraArgs) -> Result<AlgebraParams> {
    let p = args.p.ok_or_else(|| Error::BadParameter("--p is required".into()))?;
    let f = make_field(p, args.m)?;
    let t = f.parse_literal(&args.t)?;
    let k = f.parse_literal(&args.k)?;
    AlgebraParams::new(&f, t, k)
}

fn rep_from_args(args: &RepArgs) -> Result<Representation> {
    if let Some(path) = &args.input {
        return Representation::from_json(&read_json(path)?);
    }
    let spec = spec_from_args(args)?;
    build_rep(&spec)
}

fn spec_from_args(args: &RepArgs) -> Result<RepSpec> {
    let params = algebra_params(&args.algebra)?;
    let fam: Family = args
        .family
        .as_deref()
        .ok_or_else(|| Error::BadParameter("--family or --input is required".into()))?
        .parse()?;
    let f = params.field();
    let mut given = BTreeMap::new();
    for (name, value) in [
        ("beta", &args.beta),
        ("a", &args.a),
        ("b", &args.b),
        ("mu", &args.mu),
        ("d", &args.d),
        ("theta", &args.theta),
        ("c", &args.c),
    ] {
        if let Some(v) = value {
            given.insert(name.to_string(), f.parse_literal(v)?);
        }
    }
    RepSpec::from_named(&params, fam, &given)
}

fn read_json(path: &PathBuf) -> Result<Value> {
    let text = fs::read_to_string(path).map_err(|e| Error::Format(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Error::Format(format!("{}: {e}", path.display())))
}

fn execute(cmd: &Command) -> Result<Outcome> {
    match cmd {
        Command::Build(args) => {
            let rep = rep_from_args(args)?;
            Ok(Outcome { json: rep.to_json(), tsv: rep_tsv(&rep), code: EXIT_OK })
        }
        Command::Verify(args) => Ok(Outcome::report(&verify_relations(&rep_from_args(args)?))),
        Command::Central(args) => central(&rep_from_args(args)?),
        Command::Eigen { rep, operator } => eigen(&rep_from_args(rep)?, *operator),
        Command::Irreducible { rep, budget, exhaustive } => {
            let r = rep_from_args(rep)?;
            let verdict = if *exhaustive {
                exhaustive_invariant_search(&r)?
            } else {
                is_irreducible_with_budget(&r, rep.common.seed, *budget)?
            };
            let f = r.field();
            let tsv = match &verdict {
                Verdict::Irreducible => "verdict\tirreducible\n".to_string(),
                Verdict::Reducible(w) => format!("verdict\treducible\nwitness_dim\t{}\n", w.len()),
            };
            Ok(Outcome { json: verdict.to_json(f), tsv, code: EXIT_OK })
        }
        Command::Iso { algebra, common, left, right } => iso(algebra, common, left, right),
        Command::NormalForm { algebra, expression, .. } => {
            let params = algebra_params(algebra)?;
            let elem = parse(expression, &params)?;
            let text = elem.to_string();
            Ok(Outcome {
                json: json!({"expression": expression, "normal_form": text, "terms": elem.to_json()}),
                tsv: format!("{text}\n"),
                code: EXIT_OK,
            })
        }
        Command::Classify { algebra, common, samples } => classify(&algebra_params(algebra)?, common.seed, *samples),
    }
}

fn rep_tsv(rep: &Representation) -> String {
    let f = rep.field();
    let mut out = String::from("generator\trow\tentries\n");
    for (name, m) in [("X", rep.x()), ("Xinv", rep.x_inv()), ("s", rep.s()), ("y", rep.y())] {
        for i in 0..m.rows() {
            let row: Vec<String> = m.row(i).iter().map(|&x| f.format(x)).collect();
            out.push_str(&format!("{name}\t{i}\t{}\n", row.join(" ")));
        }
    }
    out
}

fn central(rep: &Representation) -> Result<Outcome> {
    let f = rep.field();
    match central_character(rep) {
        Ok(cc) => {
            let tsv = std::iter::once("element\tvalue\n".to_string())
                .chain(cc.assignments.iter().map(|(n, _, c)| format!("{n}\t{}\n", f.format(*c))))
                .collect();
            Ok(Outcome { json: cc.to_json(f), tsv, code: EXIT_OK })
        }
        Err(Error::NotScalar(name)) => {
            let mut report = Report::default();
            report.push(Check::new(format!("{name} acts as a scalar"), false));
            Ok(Outcome::report(&report))
        }
        Err(e) => Err(e),
    }
}

fn eigen(rep: &Representation, op: Operator) -> Result<Outcome> {
    let f = rep.field();
    let m = match op {
        Operator::Y => rep.y(),
        Operator::X => rep.x(),
        Operator::S => rep.s(),
    };
    let candidates = match (op, rep.weight_candidates()) {
        (Operator::Y, Some(w)) => w,
        _ => field_eigenvalues(m),
    };
    let reports = eigenspaces(rep, m, &candidates)?;
    let mut tsv = String::from("eigenvalue\teig_dim\tgen_dim\n");
    for r in &reports {
        tsv.push_str(&format!("{}\t{}\t{}\n", f.format(r.eigenvalue), r.eig_dim, r.gen_dim));
    }
    let json = Value::Array(reports.iter().map(|r| r.to_json(f)).collect());
    Ok(Outcome { json, tsv, code: EXIT_OK })
}

enum Operand {
    Spec(RepSpec),
    Rep(Box<Representation>),
}

fn operand(params: Option<&AlgebraParams>, text: &str) -> Result<Operand> {
    let path = PathBuf::from(text);
    if path.is_file() {
        let v = read_json(&path)?;
        if v.get("mats").is_some() {
            let rep = Representation::from_json(&v)?;
            return Ok(match rep.spec() {
                Some(s) => Operand::Spec(s.clone()),
                None => Operand::Rep(Box::new(rep)),
            });
        }
        return Ok(Operand::Spec(RepSpec::from_json(&v)?));
    }
    let params = params.ok_or_else(|| Error::BadParameter("inline specs need --p, --t and --k".into()))?;
    Ok(Operand::Spec(RepSpec::parse_inline(params, text)?))
}

fn iso(algebra: &AlgebraArgs, common: &CommonArgs, left: &str, right: &str) -> Result<Outcome> {
    let params = match algebra.p {
        Some(_) => Some(algebra_params(algebra)?),
        None => None,
    };
    let (l, r) = (operand(params.as_ref(), left)?, operand(params.as_ref(), right)?);
    let to_rep = |o: &Operand| match o {
        Operand::Spec(s) => build_rep(s),
        Operand::Rep(r) => Ok((**r).clone()),
    };
    let (r1, r2) = (to_rep(&l)?, to_rep(&r)?);
    let oracle = find_intertwiner_with(&r1, &r2, common.seed, crate::iso::DEFAULT_BUDGET)?;
    let closed = match (&l, &r) {
        (Operand::Spec(a), Operand::Spec(b)) => Some(criterion_iso(a, b)?),
        _ => None,
    };
    let agree = closed.as_ref().is_none_or(|c| c.isomorphic == oracle.isomorphic);
    let verdict = if oracle.isomorphic { "isomorphic" } else { "non-isomorphic" };
    let mut json = json!({
        "verdict": verdict,
        "isomorphic": oracle.isomorphic,
        "criterion": closed.as_ref().map_or(oracle.criterion.clone(), |c| c.criterion.clone()),
        "search": oracle.criterion,
        "criterion_isomorphic": closed.as_ref().map(|c| c.isomorphic),
        "agree": agree,
    });
    if let Some(m) = &oracle.intertwiner {
        json["intertwiner"] = matrix_json(m.field(), m);
    }
    let mut tsv = format!("verdict\t{verdict}\n");
    if let Some(c) = &closed {
        tsv.push_str(&format!("criterion\t{}\t{}\n", c.criterion, c.isomorphic));
    }
    tsv.push_str(&format!("agree\t{agree}\n"));
    Ok(Outcome { json, tsv, code: if agree { EXIT_OK } else { EXIT_FAIL } })
}

fn classify(params: &AlgebraParams, seed: u64, samples: usize) -> Result<Outcome> {
    let f = params.field();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut rows: BTreeMap<String, Value> = BTreeMap::new();
    let mut code = EXIT_OK;
    for fam in Family::ALL {
        for _ in 0..samples {
            let Some(spec) = sample_spec(params, fam, &mut rng) else { break };
            let key = spec.key();
            if rows.contains_key(&key) {
                continue;
            }
            let row = match build_rep(&spec) {
                Ok(rep) => {
                    let irreducible = match is_irreducible_with_budget(&rep, seed, DEFAULT_BUDGET) {
                        Ok(Verdict::Irreducible) => "irreducible",
                        Ok(Verdict::Reducible(_)) => "reducible",
                        Err(Error::Inconclusive(_)) => {
                            code = code.max(EXIT_INCONCLUSIVE);
                            "inconclusive"
                        }
                        Err(e) => return Err(e),
                    };
                    let central = match central_character(&rep) {
                        Ok(cc) => cc.to_json(f),
                        Err(_) => Value::Null,
                    };
                    json!({"key": key, "family": fam.to_string(), "dim": rep.dim(), "irreducible": irreducible, "central": central})
                }
                Err(e) => {
                    code = EXIT_FAIL;
                    json!({"key": key, "family": fam.to_string(), "error": e.to_string()})
                }
            };
            rows.insert(key, row);
        }
    }
    let mut tsv = String::from("key\tfamily\tdim\tirreducible\tcentral\n");
    for row in rows.values() {
        let central = match row["central"].as_array() {
            Some(items) => items
                .iter()
                .map(|c| format!("{}={}", c["name"].as_str().unwrap_or(""), format_coeffs(&c["value"])))
                .collect::<Vec<_>>()
                .join(" "),
            None => String::new(),
        };
        tsv.push_str(&format!(
            "{}\t{}\t{}\t{}\t{}\n",
            row["key"].as_str().unwrap_or(""),
            row["family"].as_str().unwrap_or(""),
            row["dim"],
            row["irreducible"].as_str().unwrap_or(row["error"].as_str().unwrap_or("")),
            central
        ));
    }
    Ok(Outcome { json: Value::Array(rows.into_values().collect()), tsv, code })
}

fn format_coeffs(v: &Value) -> String {
    match v.as_array() {
        Some(c) if c.len() == 1 => c[0].to_string(),
        Some(c) => format!("[{}]", c.iter().map(Value::to_string).collect::<Vec<_>>().join(",")),
        None => String::new(),
    }
}
