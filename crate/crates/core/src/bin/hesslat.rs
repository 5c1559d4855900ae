use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};
use serde_json::json;

use hesslat::finquad::discriminant_form;
use hesslat::lattice::Lattice;
use hesslat::linalg::IntMatrix;
use hesslat::suite::{run_suite, Suite};
use hesslat::sylvester::{
    delta_sing, eckardt_section, evaluate_quadrics, parse_lambda, singular_locus_check, sylvester_cubic,
    verify_hessian_identity,
};
use hesslat::Error;

const PASS: u8 = 0;
const FAIL: u8 = 1;
const USAGE: u8 = 2;
const DOMAIN: u8 = 3;

#[derive(Parser)]
#[command(name = "hesslat", version, about = "Lattice, discriminant-form and Hessian quartic verifications")]
struct Cli {
    /// Worker threads for parallel enumerations (HESSLAT_THREADS overrides).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Machine-readable output.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a named verification suite.
    Verify {
        #[arg(value_enum)]
        suite: SuiteArg,
        /// Include the long enumerations.
        #[arg(long)]
        deep: bool,
    },
    /// Inspect a lattice given by a Gram matrix file `{"gram": [[...]]}`.
    Lattice {
        #[arg(value_enum)]
        action: LatticeAction,
        #[arg(long)]
        gram: PathBuf,
        /// Target norm for `shortvec`.
        #[arg(long, allow_hyphen_values = true)]
        norm: Option<i64>,
    },
    /// Hessian quartic checks for a cubic in pentahedral form.
    Sylvester {
        /// Five comma-separated nonzero rationals, e.g. 1,1,2,3,5.
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
        #[arg(value_enum, default_value = "all")]
        checks: Vec<SylvesterCheck>,
    },
    /// Evaluate the fifteen quadrics (l_i - l_j)(l_k - l_l).
    Quadrics {
        #[arg(long, allow_hyphen_values = true)]
        lambda: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum SuiteArg {
    Lattice,
    Finquad,
    Config,
    Restriction,
    Sylvester,
    All,
}

impl From<SuiteArg> for Suite {
    fn from(s: SuiteArg) -> Suite {
        match s {
            SuiteArg::Lattice => Suite::Lattice,
            SuiteArg::Finquad => Suite::Finquad,
            SuiteArg::Config => Suite::Config,
            SuiteArg::Restriction => Suite::Restriction,
            SuiteArg::Sylvester => Suite::Sylvester,
            SuiteArg::All => Suite::All,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum LatticeAction {
    Info,
    Shortvec,
    Discform,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SylvesterCheck {
    Nodes,
    Lines,
    Hessid,
    Delta,
    Eckardt,
    All,
}

#[derive(Deserialize, Serialize)]
struct GramFile {
    gram: Vec<Vec<i64>>,
}

/// Maps library errors to exit codes: parse problems are usage errors,
/// everything about the mathematical input is a domain error.
fn exit_for(e: &Error) -> u8 {
    match e {
        Error::Parse(_) | Error::Json(_) | Error::Io(_) => USAGE,
        Error::CheckFailed(_) => FAIL,
        _ => DOMAIN,
    }
}

fn fail(e: Error) -> ExitCode {
    eprintln!("error: {e}");
    ExitCode::from(exit_for(&e))
}

fn configure_threads(flag: Option<usize>) {
    let env = std::env::var("HESSLAT_THREADS").ok().and_then(|v| v.parse::<usize>().ok());
    if let Some(n) = env.or(flag).filter(|&n| n > 0) {
        // only fails if a global pool already exists
        let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    configure_threads(cli.threads);
    let result = match cli.command {
        Command::Verify { suite, deep } => verify(suite.into(), deep, cli.json),
        Command::Lattice { action, gram, norm } => lattice(action, &gram, norm, cli.json),
        Command::Sylvester { lambda, checks } => sylvester(&lambda, &checks, cli.json),
        Command::Quadrics { lambda } => quadrics(&lambda, cli.json),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(e) => fail(e),
    }
}

fn verify(suite: Suite, deep: bool, as_json: bool) -> Result<u8, Error> {
    let report = run_suite(suite, deep);
    if as_json {
        println!("{}", serde_json::to_string_pretty(&report)?);
    } else {
        println!("{report}");
    }
    Ok(if report.passed() { PASS } else { FAIL })
}

fn read_gram(path: &PathBuf) -> Result<Lattice, Error> {
    let text = fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    let file: GramFile = serde_json::from_str(&text)?;
    let m = IntMatrix::from_rows(&file.gram).map_err(|e| Error::Parse(e.to_string()))?;
    if !m.is_square() {
        return Err(Error::Parse(format!("Gram matrix is {}x{}", m.rows(), m.cols())));
    }
    if !m.is_symmetric() {
        return Err(Error::Parse("Gram matrix is not symmetric".into()));
    }
    let l = Lattice::new(m)?;
    if let Some(index) = (0..l.rank()).find(|&i| l.gram().get(i, i) % 2 != BigInt::from(0)) {
        return Err(Error::OddLattice { index });
    }
    Ok(l)
}

fn lattice(action: LatticeAction, path: &PathBuf, norm: Option<i64>, as_json: bool) -> Result<u8, Error> {
    let l = read_gram(path)?;
    match action {
        LatticeAction::Info => {
            let (p, n) = l.signature();
            if as_json {
                let v = json!({"rank": l.rank(), "signature": [p, n], "determinant": l.determinant().to_string()});
                println!("{}", serde_json::to_string_pretty(&v)?);
            } else {
                println!("rank {}\nsignature ({p},{n})\ndeterminant {}", l.rank(), l.determinant());
            }
        }
        LatticeAction::Shortvec => {
            let norm = norm.ok_or_else(|| Error::Parse("shortvec needs --norm".into()))?;
            let vs = l.short_vectors(&BigInt::from(norm))?;
            if as_json {
                let rows: Vec<Vec<String>> = vs.iter().map(|v| v.iter().map(ToString::to_string).collect()).collect();
                println!("{}", serde_json::to_string_pretty(&json!({"norm": norm, "count": vs.len(), "vectors": rows}))?);
            } else {
                for v in &vs {
                    println!("{}", v.iter().map(ToString::to_string).collect::<Vec<_>>().join(" "));
                }
                println!("{} vectors of norm {norm}", vs.len());
            }
        }
        LatticeAction::Discform => {
            let q = discriminant_form(&l)?;
            if as_json {
                println!("{}", serde_json::to_string_pretty(&q.to_json())?);
            } else {
                print!("{q}");
                for ((o, v), n) in q.census()? {
                    println!("  order {o}, q = {v}: {n}");
                }
            }
        }
    }
    Ok(PASS)
}

fn sylvester(lambda: &str, checks: &[SylvesterCheck], as_json: bool) -> Result<u8, Error> {
    let lam = parse_lambda(lambda)?;
    let d = sylvester_cubic(&lam)?;
    let want = |c: SylvesterCheck| checks.contains(&c) || checks.contains(&SylvesterCheck::All);
    let mut out = serde_json::Map::new();
    let mut ok = true;
    let mut lines = Vec::new();
    if want(SylvesterCheck::Hessid) {
        match verify_hessian_identity(&d) {
            Ok(c) => {
                lines.push(format!("hessid: Hess(F) = {c} * P"));
                out.insert("hessid".into(), json!({"proportional": true, "constant": c.to_string()}));
            }
            Err(e) => {
                ok = false;
                lines.push(format!("hessid: FAIL ({e})"));
                out.insert("hessid".into(), json!({"proportional": false}));
            }
        }
    }
    if want(SylvesterCheck::Nodes) || want(SylvesterCheck::Lines) {
        let rep = singular_locus_check(&d)?;
        if want(SylvesterCheck::Nodes) {
            let n = rep.nodes.iter().filter(|x| x.singular).count();
            ok &= n == 10 && rep.sample_gradient_nonzero;
            lines.push(format!("nodes: {n}/10 singular"));
            out.insert("nodes".into(), serde_json::to_value(&rep.nodes)?);
        }
        if want(SylvesterCheck::Lines) {
            let n = rep.lines.iter().filter(|x| x.contained).count();
            ok &= n == 10;
            lines.push(format!("lines: {n}/10 contained"));
            out.insert("lines".into(), serde_json::to_value(&rep.lines)?);
        }
    }
    if want(SylvesterCheck::Delta) {
        let ds = delta_sing(&lam)?;
        if ds.vanishes {
            lines.push("delta: 0, warning: the Hessian quartic has a singular point besides the ten nodes".into());
        } else {
            lines.push(format!("delta: {} (cleared {})", ds.product, ds.cleared));
        }
        out.insert("delta".into(), serde_json::to_value(&ds)?);
    }
    if want(SylvesterCheck::Eckardt) {
        let mut reports = Vec::new();
        for i in 1..=5 {
            for j in i + 1..=5 {
                if lam[i - 1] == lam[j - 1] {
                    let e = eckardt_section(&d, i, j)?;
                    ok &= e.passes();
                    lines.push(format!(
                        "eckardt ({i},{j}): section = l{i}{j}^2 * conic of rank {}, node p{}{}{} on its singular locus: {}",
                        e.conic_rank.map_or("?".into(), |r| r.to_string()),
                        e.node[0],
                        e.node[1],
                        e.node[2],
                        if e.passes() { "yes" } else { "no" }
                    ));
                    reports.push(e);
                }
            }
        }
        if reports.is_empty() {
            lines.push("eckardt: no equal coefficients, no Eckardt plane to check".into());
        }
        out.insert("eckardt".into(), serde_json::to_value(&reports)?);
    }
    if as_json {
        out.insert("lambda".into(), json!(lam.iter().map(ToString::to_string).collect::<Vec<_>>()));
        out.insert("pass".into(), json!(ok));
        println!("{}", serde_json::to_string_pretty(&out)?);
    } else {
        for l in lines {
            println!("{l}");
        }
    }
    Ok(if ok { PASS } else { FAIL })
}

fn quadrics(lambda: &str, as_json: bool) -> Result<u8, Error> {
    let lam = parse_lambda(lambda)?;
    if let Some(i) = lam.iter().position(|x| x == &num_rational::BigRational::from_integer(0.into())) {
        return Err(Error::ZeroCoefficient { index: i + 1 });
    }
    let values = evaluate_quadrics(&lam)?;
    if as_json {
        println!("{}", serde_json::to_string_pretty(&values)?);
        return Ok(PASS);
    }
    for q in &values {
        let (p, r) = (q.first, q.second);
        let flag = match q.eckardt_pairs.len() {
            0 => String::new(),
            1 => format!("  Eckardt point (l{} = l{})", q.eckardt_pairs[0].0, q.eckardt_pairs[0].1),
            _ => "  two Eckardt points".to_string(),
        };
        println!(
            "V(b{}{}, b{}{})  (l{}-l{})(l{}-l{}) = {}{flag}",
            p.0, p.1, r.0, r.1, p.0, p.1, r.0, r.1, q.value
        );
    }
    Ok(PASS)
}
