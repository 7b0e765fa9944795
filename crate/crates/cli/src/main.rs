//! Command-line front end: homology, Leray numbers, Stanley-Reisner
//! invariants, nerves, generators, and randomized theorem verification.

use std::fs;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use leray_core::io::{self, AlgebraInput};
use leray_core::{
    betti_table, check_terai, check_theorem_mono, check_theorem_proj, complex_of_ideal,
    helly_number, leray_number_detailed, leray_number_via_links_detailed,
    mayer_vietoris_check, nerve, join_example_family, random_flag, random_lm,
    reduced_betti, regularity, verify_theorem1, verify_theorem2, FieldSpec, PairCheck,
    Probability, SetFamily, SimplicialComplex, SplitMix64, VertexSet,
};

/// Exact invariants of simplicial complexes and squarefree monomial ideals.
#[derive(Parser)]
#[command(name = "leray", version, about)]
struct Cli {
    /// Coefficient field: gf:<prime> or q
    #[arg(long, global = true, default_value = "gf:2")]
    field: String,

    /// Emit JSON instead of plain text
    #[arg(long, global = true)]
    json: bool,

    /// Override the per-command ground-size cap
    #[arg(long, global = true, value_name = "CAP")]
    max_n: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Reduced homology of a complex, one line per nonzero degree
    Homology { file: PathBuf },
    /// Leray number of a complex, by either or both characterizations
    Leray {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Method::Both)]
        method: Method,
    },
    /// Graded Betti numbers of the associated squarefree monomial ideal
    Betti { file: PathBuf },
    /// Castelnuovo-Mumford regularity of the associated ideal
    Reg { file: PathBuf },
    /// Projective dimensions of the quotient ring and of the ideal
    Pd { file: PathBuf },
    /// Alexander dual, printed in the same format as the input
    Dual { file: PathBuf },
    /// Nerve complex of a set family
    Nerve { file: PathBuf },
    /// Helly number of a set family
    Helly { file: PathBuf },
    /// Write or print a generated complex
    Gen {
        #[command(subcommand)]
        model: GenCommand,
    },
    /// Check a theorem or identity on files or a random corpus
    Verify {
        #[arg(value_enum)]
        check: Check,
        /// First input file (.cplx, .ideal, or .fam depending on the check)
        #[arg(long)]
        file: Option<PathBuf>,
        /// Second input file for pair checks
        #[arg(long)]
        file2: Option<PathBuf>,
        /// Random corpus instead of files: n=<n> trials=<t> model=<lm|flag> seed=<s>
        #[arg(long, num_args = 0.., value_name = "KEY=VALUE")]
        random: Option<Vec<String>>,
        #[arg(long, value_enum, default_value_t = Report::Text)]
        report: Report,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Induced,
    Links,
    Both,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Report {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Check {
    /// Intersection homology bound and its two proof steps
    Thm1,
    /// Leray bounds for intersections and unions
    Thm2,
    /// Regularity bounds for sums and intersections of ideals
    Mono,
    /// Projective-dimension bounds for the same operations
    Proj,
    /// pd of the quotient equals reg of the Alexander dual's ideal
    Terai,
    /// Mayer-Vietoris rank inequalities and the Euler identity
    Mv,
    /// Helly number against 1 + Leray number of the nerve
    Helly,
    /// Agreement of the two Leray-number characterizations
    Folk,
}

impl Check {
    fn name(self) -> &'static str {
        match self {
            Check::Thm1 => "thm1",
            Check::Thm2 => "thm2",
            Check::Mono => "mono",
            Check::Proj => "proj",
            Check::Terai => "terai",
            Check::Mv => "mv",
            Check::Helly => "helly",
            Check::Folk => "folk",
        }
    }

    fn needs_pair(self) -> bool {
        matches!(self, Check::Thm1 | Check::Mono | Check::Proj | Check::Mv)
    }
}

#[derive(Subcommand)]
enum GenCommand {
    /// Full (d-1)-skeleton plus random d-faces
    Lm {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        /// Face probability, as a decimal or a fraction like 3/8
        #[arg(long, default_value = "1/2")]
        p: Probability,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output path; stdout when absent
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Clique complex of a random graph
    Flag {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "1/2")]
        p: Probability,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// A complex from the joined-spheres family on blocks of given sizes
    Joinexample {
        /// Block sizes, comma separated, e.g. 3,3
        #[arg(long, value_delimiter = ',')]
        blocks: Vec<usize>,
        #[arg(long, value_enum, default_value_t = Part::Intersection)]
        part: Part,
        /// Factor index when --part factor
        #[arg(long, default_value_t = 0)]
        index: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Part {
    Intersection,
    Union,
    Factor,
}

type AppError = Box<dyn std::error::Error>;

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = if err.use_stderr() { 1 } else { 0 };
            let _ = err.print();
            std::process::exit(code);
        }
    };
    match run(cli) {
        Ok(code) => std::process::exit(code),
        Err(err) => {
            eprintln!("error: {err}");
            std::process::exit(1);
        }
    }
}

fn run(cli: Cli) -> Result<i32, AppError> {
    let field = FieldSpec::from_str(&cli.field)?;
    match cli.command {
        Command::Homology { file } => {
            let x = load_complex(&file)?;
            check_cap(x.ground_size(), cap(cli.max_n, 24)?)?;
            let betti = reduced_betti(&x, field);
            if cli.json {
                let entries: Vec<_> = betti.support().map(|(d, v)| json!([d, v])).collect();
                println!("{}", serde_json::to_string_pretty(&json!({
                    "field": field.to_string(),
                    "betti": entries,
                }))?);
            } else if betti.is_zero() {
                println!("h~ = 0");
            } else {
                for (d, v) in betti.support() {
                    println!("h~[{d}] = {v}");
                }
            }
            Ok(0)
        }
        Command::Leray { file, method } => {
            let x = load_complex(&file)?;
            check_cap(x.ground_size(), cap(cli.max_n, 14)?)?;
            cmd_leray(&x, method, field, cli.json)
        }
        Command::Betti { file } => {
            let x = load_complex(&file)?;
            check_cap(x.ground_size(), cap(cli.max_n, 14)?)?;
            let table = betti_table(&x, field)?;
            if cli.json {
                let entries: Vec<_> =
                    table.entries().map(|((i, j), v)| json!([i, j, v])).collect();
                println!("{}", serde_json::to_string_pretty(&entries)?);
            } else if table.is_empty() {
                println!("zero ideal: no graded Betti numbers");
            } else {
                for ((i, j), v) in table.entries() {
                    println!("beta[{i},{j}] = {v}");
                }
            }
            Ok(0)
        }
        Command::Reg { file } => {
            let x = load_complex(&file)?;
            check_cap(x.ground_size(), cap(cli.max_n, 14)?)?;
            let reg = regularity(&x, field)?;
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&json!({ "reg": reg }))?);
            } else {
                match reg {
                    Some(r) => println!("reg = {r}"),
                    None => println!("reg undefined (zero ideal)"),
                }
            }
            Ok(0)
        }
        Command::Pd { file } => {
            let x = load_complex(&file)?;
            check_cap(x.ground_size(), cap(cli.max_n, 14)?)?;
            let quotient = leray_core::projective_dimension_quotient(&x, field)?;
            let ideal = quotient.checked_sub(1);
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&json!({
                    "pd_quotient": quotient,
                    "pd_ideal": ideal,
                }))?);
            } else {
                println!("pd(S/I) = {quotient}");
                match ideal {
                    Some(p) => println!("pd(I) = {p}"),
                    None => println!("pd(I) undefined (zero ideal)"),
                }
            }
            Ok(0)
        }
        Command::Dual { file } => {
            let x = load_complex(&file)?;
            check_cap(x.ground_size(), cap(cli.max_n, 24)?)?;
            let dual = x.alexander_dual()?;
            print_complex(&dual, cli.json);
            Ok(0)
        }
        Command::Nerve { file } => {
            let fam = load_family(&file)?;
            check_cap(fam.len(), cap(cli.max_n, 16)?)?;
            print_complex(&nerve(&fam)?, cli.json);
            Ok(0)
        }
        Command::Helly { file } => {
            let fam = load_family(&file)?;
            check_cap(fam.len(), cap(cli.max_n, 16)?)?;
            let h = helly_number(&fam);
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&json!({ "helly": h }))?);
            } else {
                println!("h = {h}");
            }
            Ok(0)
        }
        Command::Gen { model } => cmd_gen(model, cli.json),
        Command::Verify { check, file, file2, random, report } => {
            let report = if cli.json { Report::Json } else { report };
            cmd_verify(check, file, file2, random, report, field, cli.max_n)
        }
    }
}

/// Effective cap: explicit flag, then LERAY_MAX_N, then the default.
fn cap(flag: Option<usize>, default: usize) -> Result<usize, AppError> {
    if let Some(c) = flag {
        return Ok(c);
    }
    match std::env::var("LERAY_MAX_N") {
        Ok(v) => v
            .parse()
            .map_err(|_| format!("LERAY_MAX_N is set to `{v}`, not a number").into()),
        Err(_) => Ok(default),
    }
}

fn check_cap(size: usize, cap: usize) -> Result<(), AppError> {
    if size > cap {
        return Err(format!(
            "input size {size} exceeds the cap {cap} for this command; raise it with --max-n or LERAY_MAX_N"
        )
        .into());
    }
    Ok(())
}

fn read_file(path: &Path) -> Result<String, AppError> {
    fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()).into())
}

/// A complex from a .cplx file (text or JSON) or an .ideal file.
fn load_complex(path: &Path) -> Result<SimplicialComplex, AppError> {
    let src = read_file(path)?;
    match io::parse_algebra_input(&src).map_err(|e| format!("{}: {e}", path.display()))? {
        AlgebraInput::Complex(x) => Ok(x),
        AlgebraInput::Ideal(ideal) => Ok(complex_of_ideal(&ideal)),
    }
}

fn load_family(path: &Path) -> Result<SetFamily, AppError> {
    let src = read_file(path)?;
    io::parse_family_text(&src).map_err(|e| format!("{}: {e}", path.display()).into())
}

fn print_complex(x: &SimplicialComplex, as_json: bool) {
    if as_json {
        println!("{}", io::complex_to_json(x));
    } else {
        print!("{}", io::complex_to_text(x));
    }
}

fn witness_text(kind: Method, witness: &Option<(VertexSet, i64)>) -> String {
    match witness {
        None => String::new(),
        Some((set, degree)) => match kind {
            Method::Induced => format!("; h~[{degree}] of the subcomplex on {set} is nonzero"),
            _ => format!("; h~[{degree}] of the link of {set} is nonzero"),
        },
    }
}

fn witness_json(witness: &Option<(VertexSet, i64)>) -> serde_json::Value {
    match witness {
        None => serde_json::Value::Null,
        Some((set, degree)) => json!({
            "set": set.vertices().collect::<Vec<_>>(),
            "degree": degree,
        }),
    }
}

fn cmd_leray(
    x: &SimplicialComplex,
    method: Method,
    field: FieldSpec,
    as_json: bool,
) -> Result<i32, AppError> {
    let induced = match method {
        Method::Induced | Method::Both => Some(leray_number_detailed(x, field)?),
        Method::Links => None,
    };
    let links = match method {
        Method::Links | Method::Both => Some(leray_number_via_links_detailed(x, field)?),
        Method::Induced => None,
    };
    let agree = match (&induced, &links) {
        (Some(a), Some(b)) => a.value == b.value,
        _ => true,
    };
    if as_json {
        let mut methods = serde_json::Map::new();
        if let Some(det) = &induced {
            methods.insert(
                "induced".into(),
                json!({ "L": det.value, "witness": witness_json(&det.witness) }),
            );
        }
        if let Some(det) = &links {
            methods.insert(
                "links".into(),
                json!({ "L": det.value, "witness": witness_json(&det.witness) }),
            );
        }
        println!("{}", serde_json::to_string_pretty(&json!({
            "methods": methods,
            "agree": agree,
        }))?);
    } else {
        if let Some(det) = &induced {
            println!("L = {} (induced{})", det.value, witness_text(Method::Induced, &det.witness));
        }
        if let Some(det) = &links {
            println!("L = {} (links{})", det.value, witness_text(Method::Links, &det.witness));
        }
        if !agree {
            eprintln!("mismatch between the two characterizations");
        }
    }
    Ok(if agree { 0 } else { 2 })
}

fn cmd_gen(model: GenCommand, as_json: bool) -> Result<i32, AppError> {
    let (x, out) = match model {
        GenCommand::Lm { n, d, p, seed, out } => (random_lm(n, d, p, seed)?, out),
        GenCommand::Flag { n, p, seed, out } => (random_flag(n, p, seed)?, out),
        GenCommand::Joinexample { blocks, part, index, out } => {
            let family = join_example_family(&blocks)?;
            let x = match part {
                Part::Factor => family
                    .get(index)
                    .cloned()
                    .ok_or_else(|| format!("factor index {index} out of range"))?,
                Part::Intersection => {
                    let mut acc = family[0].clone();
                    for x in &family[1..] {
                        acc = acc.intersection(x)?;
                    }
                    acc
                }
                Part::Union => {
                    let mut acc = family[0].clone();
                    for x in &family[1..] {
                        acc = acc.union(x)?;
                    }
                    acc
                }
            };
            (x, out)
        }
    };
    let rendered =
        if as_json { io::complex_to_json(&x) + "\n" } else { io::complex_to_text(&x) };
    match out {
        Some(path) => fs::write(&path, rendered)
            .map_err(|e| format!("{}: {e}", path.display()))?,
        None => print!("{rendered}"),
    }
    Ok(0)
}

// ---- verify ----------------------------------------------------------

#[derive(Clone, Copy)]
enum Model {
    Lm,
    Flag,
}

struct RandomSpec {
    n: usize,
    trials: usize,
    seed: u64,
    model: Option<Model>,
}

fn parse_random_spec(tokens: &[String]) -> Result<RandomSpec, AppError> {
    let mut spec = RandomSpec { n: 6, trials: 100, seed: 0, model: None };
    for tok in tokens {
        let (key, value) = tok
            .split_once('=')
            .ok_or_else(|| format!("expected key=value after --random, got `{tok}`"))?;
        match key {
            "n" => spec.n = value.parse().map_err(|_| format!("bad n `{value}`"))?,
            "trials" => {
                spec.trials = value.parse().map_err(|_| format!("bad trials `{value}`"))?
            }
            "seed" => spec.seed = value.parse().map_err(|_| format!("bad seed `{value}`"))?,
            "model" => {
                spec.model = Some(match value {
                    "lm" => Model::Lm,
                    "flag" => Model::Flag,
                    other => return Err(format!("unknown model `{other}`").into()),
                })
            }
            other => return Err(format!("unknown random parameter `{other}`").into()),
        }
    }
    if spec.n < 2 {
        return Err("random generation needs n >= 2".into());
    }
    Ok(spec)
}

enum TrialInput {
    Single(SimplicialComplex),
    Pair(SimplicialComplex, SimplicialComplex),
    Family(SetFamily),
}

fn gen_one(rng: &mut SplitMix64, n: usize, model: Model) -> SimplicialComplex {
    let trial_seed = rng.next_u64();
    let p = Probability::new(rng.below(17), 16).unwrap();
    match model {
        Model::Lm => {
            let d = 1 + rng.below(n as u64 - 1) as usize;
            random_lm(n, d, p, trial_seed).unwrap()
        }
        Model::Flag => random_flag(n, p, trial_seed).unwrap(),
    }
}

fn random_input(check: Check, spec: &RandomSpec, rng: &mut SplitMix64, t: usize) -> TrialInput {
    if check == Check::Helly {
        let ground = spec.n.min(leray_core::MAX_GROUND);
        let count = 1 + rng.below(8) as usize;
        let sets: Vec<VertexSet> = (0..count)
            .map(|_| VertexSet::from_bits(rng.below(1u64 << ground) as u32))
            .collect();
        return TrialInput::Family(SetFamily::new(ground, sets).unwrap());
    }
    let pick = |slot: usize| match spec.model {
        Some(m) => m,
        None => {
            if (t + slot) % 2 == 0 {
                Model::Lm
            } else {
                Model::Flag
            }
        }
    };
    let mut x = gen_one(rng, spec.n, pick(0));
    if check == Check::Terai {
        // the dual only exists away from the full simplex
        while x.is_full_simplex() {
            x = gen_one(rng, spec.n, pick(0));
        }
    }
    if check.needs_pair() || check == Check::Thm2 {
        let y = gen_one(rng, spec.n, pick(1));
        TrialInput::Pair(x, y)
    } else {
        TrialInput::Single(x)
    }
}

struct Violation {
    inequality: String,
    k: Option<i64>,
    values: serde_json::Value,
}

struct Trial {
    index: usize,
    ok: bool,
    detail: String,
    violation: Option<Violation>,
    input: TrialInput,
}

fn run_check(
    check: Check,
    input: &TrialInput,
    field: FieldSpec,
) -> Result<(bool, String, Option<Violation>), AppError> {
    match (check, input) {
        (Check::Thm1, TrialInput::Pair(x, y)) => {
            let report = verify_theorem1(x, y, field)?;
            match report.first_violation() {
                None => Ok((true, format!("{} levels hold", report.levels.len()), None)),
                Some(level) => {
                    let (inequality, detail) = if !level.bound_ok {
                        (
                            "h~[k-1](X cap Y) <= sum over faces of Y of h~[i-1](X[s])*h~[j-1](lk(Y,s))",
                            format!("k = {}: lhs {} > rhs {}", level.k, level.lhs, level.rhs),
                        )
                    } else if !level.les_ok {
                        (
                            "h~[k-1](X cap Y) <= h~[k-1](Y) + h[k](Y, X cap Y)",
                            format!(
                                "k = {}: lhs {} > {} + {}",
                                level.k, level.lhs, level.y_term, level.relative
                            ),
                        )
                    } else {
                        (
                            "h[k](Y, X cap Y) <= sum of E1[p,q] over p+q=k",
                            format!(
                                "k = {}: relative {} > diagonal {}",
                                level.k, level.relative, level.e1_diagonal
                            ),
                        )
                    };
                    Ok((false, detail, Some(Violation {
                        inequality: inequality.into(),
                        k: Some(level.k as i64),
                        values: json!({
                            "lhs": level.lhs,
                            "rhs": level.rhs,
                            "y_term": level.y_term,
                            "relative": level.relative,
                            "e1_diagonal": level.e1_diagonal,
                        }),
                    })))
                }
            }
        }
        (Check::Thm2, TrialInput::Pair(x, y)) => {
            let report = verify_theorem2(&[x.clone(), y.clone()], field)?;
            thm2_outcome(report)
        }
        (Check::Thm2, TrialInput::Single(x)) => {
            let report = verify_theorem2(std::slice::from_ref(x), field)?;
            thm2_outcome(report)
        }
        (Check::Mono, TrialInput::Pair(x, y)) => {
            let outcome = check_theorem_mono(x, y, field)?;
            pair_outcome(
                outcome,
                "reg",
                "reg(I_X + I_Y) <= reg(I_X) + reg(I_Y) - 1",
                "reg(intersect(I_X, I_Y)) <= reg(I_X) + reg(I_Y)",
            )
        }
        (Check::Proj, TrialInput::Pair(x, y)) => {
            let outcome = check_theorem_proj(x, y, field)?;
            pair_outcome(
                outcome,
                "pd",
                "pd(I_X + I_Y) <= pd(I_X) + pd(I_Y) + 1",
                "pd(intersect(I_X, I_Y)) <= pd(I_X) + pd(I_Y)",
            )
        }
        (Check::Terai, TrialInput::Single(x)) => {
            let values = check_terai(x, field)?;
            let detail =
                format!("pd(S/I) {} vs reg of dual ideal {}", values.pd_quotient, values.reg_dual);
            if values.ok() {
                Ok((true, detail, None))
            } else {
                Ok((false, detail.clone(), Some(Violation {
                    inequality: "pd(S/I_X) = reg(I of the Alexander dual)".into(),
                    k: None,
                    values: json!({
                        "pd_quotient": values.pd_quotient,
                        "reg_dual": values.reg_dual,
                    }),
                })))
            }
        }
        (Check::Mv, TrialInput::Pair(x, y)) => {
            let report = mayer_vietoris_check(x, y, field)?;
            if report.all_ok() {
                return Ok((true, format!("{} levels hold, Euler identity exact", report.levels.len()), None));
            }
            if !report.euler_ok() {
                return Ok((
                    false,
                    format!("Euler identity broken: {} != {}", report.euler_lhs, report.euler_rhs),
                    Some(Violation {
                        inequality: "chi(X) + chi(Y) = chi(X cup Y) + chi(X cap Y)".into(),
                        k: None,
                        values: json!({ "lhs": report.euler_lhs, "rhs": report.euler_rhs }),
                    }),
                ));
            }
            let level = report.levels.iter().find(|l| !(l.union_ok && l.inter_ok)).unwrap();
            let inequality = if !level.union_ok {
                "h~[k](X cup Y) <= h~[k](X) + h~[k](Y) + h~[k-1](X cap Y)"
            } else {
                "h~[k-1](X cap Y) <= h~[k-1](X) + h~[k-1](Y) + h~[k](X cup Y)"
            };
            Ok((
                false,
                format!("rank inequality broken at k = {}", level.k),
                Some(Violation {
                    inequality: inequality.into(),
                    k: Some(level.k),
                    values: json!({
                        "union_k": level.union_k,
                        "x_k": level.x_k,
                        "y_k": level.y_k,
                        "inter_below": level.inter_below,
                    }),
                }),
            ))
        }
        (Check::Helly, TrialInput::Family(fam)) => {
            let h = helly_number(fam);
            let l = leray_number_detailed(&nerve(fam)?, field)?.value;
            let detail = format!("h {} <= 1 + L(nerve) {}", h, 1 + l);
            if h <= 1 + l {
                Ok((true, detail, None))
            } else {
                Ok((false, detail.clone(), Some(Violation {
                    inequality: "h(F) <= 1 + L(nerve(F))".into(),
                    k: None,
                    values: json!({ "helly": h, "nerve_leray": l }),
                })))
            }
        }
        (Check::Folk, TrialInput::Single(x)) => {
            let induced = leray_number_detailed(x, field)?.value;
            let links = leray_number_via_links_detailed(x, field)?.value;
            let detail = format!("L {} (induced) vs {} (links)", induced, links);
            if induced == links {
                Ok((true, detail, None))
            } else {
                Ok((false, detail.clone(), Some(Violation {
                    inequality: "induced-subcomplex and link characterizations agree".into(),
                    k: None,
                    values: json!({ "induced": induced, "links": links }),
                })))
            }
        }
        _ => Err(format!("check `{}` got an unsupported input shape", check.name()).into()),
    }
}

fn thm2_outcome(
    report: leray_core::TheoremTwoReport,
) -> Result<(bool, String, Option<Violation>), AppError> {
    let detail = format!(
        "L(inter) {} <= {}, L(union) {} <= {}",
        report.leray_intersection,
        report.intersection_bound,
        report.leray_union,
        report.union_bound
    );
    if report.all_ok() {
        return Ok((true, detail, None));
    }
    let inequality = if !report.intersection_ok() {
        "L(intersection) <= sum of L(X_i)"
    } else {
        "L(union) <= sum of L(X_i) + r - 1"
    };
    Ok((false, detail.clone(), Some(Violation {
        inequality: inequality.into(),
        k: None,
        values: json!({
            "leray_each": report.leray_each,
            "leray_intersection": report.leray_intersection,
            "leray_union": report.leray_union,
        }),
    })))
}

fn pair_outcome(
    outcome: PairCheck,
    quantity: &str,
    intersection_name: &str,
    union_name: &str,
) -> Result<(bool, String, Option<Violation>), AppError> {
    match outcome {
        PairCheck::Skipped { reason } => Ok((true, format!("skipped: {reason}"), None)),
        PairCheck::Checked(v) => {
            let detail = format!(
                "{quantity} of sum-ideal {} and intersection-ideal {} against {} and {}",
                v.lhs_intersection, v.lhs_union, v.rhs_x, v.rhs_y
            );
            if v.intersection_ok && v.union_ok {
                return Ok((true, detail, None));
            }
            let inequality =
                if !v.intersection_ok { intersection_name } else { union_name };
            Ok((false, detail.clone(), Some(Violation {
                inequality: inequality.into(),
                k: None,
                values: json!({
                    "lhs_intersection": v.lhs_intersection,
                    "lhs_union": v.lhs_union,
                    "rhs_x": v.rhs_x,
                    "rhs_y": v.rhs_y,
                }),
            })))
        }
    }
}

/// Write the offending inputs and a manifest next to the working directory.
fn dump_counterexample(
    check: Check,
    field: FieldSpec,
    trial: &Trial,
) -> Result<PathBuf, AppError> {
    let violation = trial.violation.as_ref().expect("dump requires a violation");
    let dir = PathBuf::from(format!("counterexample-{}", check.name()));
    fs::create_dir_all(&dir)?;
    let mut files = Vec::new();
    match &trial.input {
        TrialInput::Single(x) => {
            fs::write(dir.join("x.cplx"), io::complex_to_text(x))?;
            files.push("x.cplx");
        }
        TrialInput::Pair(x, y) => {
            fs::write(dir.join("x.cplx"), io::complex_to_text(x))?;
            fs::write(dir.join("y.cplx"), io::complex_to_text(y))?;
            files.push("x.cplx");
            files.push("y.cplx");
        }
        TrialInput::Family(fam) => {
            fs::write(dir.join("family.fam"), io::family_to_text(fam))?;
            files.push("family.fam");
        }
    }
    let manifest = json!({
        "check": check.name(),
        "field": field.to_string(),
        "trial": trial.index,
        "inequality": violation.inequality,
        "k": violation.k,
        "values": violation.values,
        "files": files,
    });
    fs::write(dir.join("manifest.json"), serde_json::to_string_pretty(&manifest)? + "\n")?;
    Ok(dir)
}

fn cmd_verify(
    check: Check,
    file: Option<PathBuf>,
    file2: Option<PathBuf>,
    random: Option<Vec<String>>,
    report: Report,
    field: FieldSpec,
    max_n: Option<usize>,
) -> Result<i32, AppError> {
    let cap_default = if check == Check::Helly { 16 } else { 14 };
    let cap = cap(max_n, cap_default)?;

    let mut trials = Vec::new();
    match (&random, &file) {
        (Some(tokens), _) => {
            let spec = parse_random_spec(tokens)?;
            check_cap(spec.n, cap)?;
            let mut rng = SplitMix64::new(spec.seed);
            for t in 0..spec.trials {
                let input = random_input(check, &spec, &mut rng, t);
                let (ok, detail, violation) = run_check(check, &input, field)?;
                trials.push(Trial { index: t, ok, detail, violation, input });
            }
        }
        (None, Some(path)) => {
            let input = if check == Check::Helly {
                let fam = load_family(path)?;
                check_cap(fam.len(), cap)?;
                TrialInput::Family(fam)
            } else {
                let x = load_complex(path)?;
                check_cap(x.ground_size(), cap)?;
                match &file2 {
                    Some(second) => {
                        let y = load_complex(second)?;
                        check_cap(y.ground_size(), cap)?;
                        TrialInput::Pair(x, y)
                    }
                    None if check.needs_pair() => {
                        return Err(
                            format!("check `{}` needs --file2", check.name()).into()
                        );
                    }
                    None => TrialInput::Single(x),
                }
            };
            let (ok, detail, violation) = run_check(check, &input, field)?;
            trials.push(Trial { index: 0, ok, detail, violation, input });
        }
        (None, None) => {
            return Err("verify needs --file or --random".into());
        }
    }

    let violations = trials.iter().filter(|t| !t.ok).count();
    let dump_dir = match trials.iter().find(|t| !t.ok) {
        Some(first_bad) => Some(dump_counterexample(check, field, first_bad)?),
        None => None,
    };

    match report {
        Report::Text => {
            for t in &trials {
                if t.ok {
                    println!("trial {}: ok — {}", t.index, t.detail);
                } else {
                    println!("trial {}: VIOLATION — {}", t.index, t.detail);
                }
            }
            println!("{}: {} trials, {} violations", check.name(), trials.len(), violations);
            if let Some(dir) = &dump_dir {
                eprintln!("counterexample written to {}", dir.display());
            }
        }
        Report::Json => {
            let results: Vec<_> = trials
                .iter()
                .map(|t| json!({ "trial": t.index, "ok": t.ok, "detail": t.detail }))
                .collect();
            println!("{}", serde_json::to_string_pretty(&json!({
                "check": check.name(),
                "field": field.to_string(),
                "trials": trials.len(),
                "violations": violations,
                "results": results,
                "counterexample": dump_dir.as_ref().map(|d| d.display().to_string()),
            }))?);
        }
    }
    Ok(if violations > 0 { 2 } else { 0 })
}
