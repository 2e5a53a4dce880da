use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use qcag::fock::{fock_matrix_rep, fock_module};
use qcag::matrep::{defining_rep_classical, vector_rep_quantum, MatrixRep};
use qcag::morphisms::{
    cag_from_chevalley_classical, cag_from_chevalley_quantum, chevalley_from_cag_classical,
    chevalley_from_cag_quantum, coproduct_of, CoproductMode, GenMap,
};
use qcag::presentations::{classical_cag, classical_chevalley, quantum_cag, quantum_chevalley};
use qcag::verify::{
    check_identity, classical_limit_check, probe_21d_range, quantum_cag_rep, quantum_combined_rep,
    quantum_tensor_rep, round_trip_check, sign_flipped_21c, verify_named_consequences, verify_presentation,
    Direction, IdentityId, Status, VerificationReport,
};
use qcag::{QMode, RatFunc, Rational, Specialize};
use serde_json::json;

use crate::parser::{parse_any, parse_expr, ExprAST};
use crate::selftest::run_selftest;
use crate::CliError;

/// Largest symbolic ranks attempted before refusing.
pub const SYMBOLIC_VECTOR_MAX_N: usize = 4;
pub const SYMBOLIC_TENSOR_MAX_N: usize = 3;

#[derive(Debug, Parser)]
#[command(name = "qcag", version, about = "Exact verification of Chevalley and CAG presentations of U[sl(n+1)] and U_q[sl(n+1)]")]
pub struct Cli {
    /// Output encoding; `verify` defaults to json, everything else to text.
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Write the output to this file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Use `(x)` instead of `⊗` in text output.
    #[arg(long, global = true)]
    pub ascii: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check that every relation of a suite vanishes in a representation.
    Verify(VerifyArgs),
    /// Rewrite an expression through a generator map.
    Convert(ConvertArgs),
    /// Expand the coproduct of a generator.
    Coproduct(CoproductArgs),
    /// Describe an order-p Fock module.
    Fock(FockArgs),
    /// Check the bracket identities in the free algebra.
    Identity(IdentityArgs),
    /// Tabulate which instances of the triple relation vanish.
    #[command(name = "probe-21d")]
    Probe21d(ProbeArgs),
    /// Randomized property checks with a recorded seed.
    Selftest(SelftestArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    #[value(alias = "cl-chevalley")]
    ClassicalChevalley,
    #[value(alias = "cl-cag")]
    ClassicalCag,
    #[value(alias = "q-chevalley")]
    QuantumChevalley,
    #[value(alias = "q-cag")]
    QuantumCag,
    /// Mixed, Serre-consequence and Cartan-pairing relations.
    #[value(alias = "named")]
    NamedConsequences,
    /// Chevalley -> CAG -> Chevalley on generator matrices.
    RoundTrip,
    /// Quantum CAG relations at q = 1 on a classical representation.
    ClassicalLimit,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum)]
    pub algebra: Suite,
    #[arg(long)]
    pub n: usize,
    /// defining | vector | tensor | fock:P
    #[arg(long)]
    pub rep: Option<String>,
    /// `symbolic` or a rational value such as 3/2.
    #[arg(long, default_value = "symbolic")]
    pub q: String,
    /// Use every triple relation and all pairwise commutations (classical CAG).
    #[arg(long)]
    pub extended: bool,
    /// Negative control: reverse the sign of the L-term in the Cartan pairing.
    #[arg(long)]
    pub corrupt: bool,
    /// Do not truncate residuals.
    #[arg(long)]
    pub full_residuals: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum AlgebraName {
    #[value(name = "cl-chevalley", alias = "classical-chevalley")]
    ClChevalley,
    #[value(name = "cl-cag", alias = "classical-cag")]
    ClCag,
    #[value(name = "q-chevalley", alias = "quantum-chevalley")]
    QChevalley,
    #[value(name = "q-cag", alias = "quantum-cag")]
    QCag,
}

#[derive(Debug, Args)]
pub struct ConvertArgs {
    #[arg(long, value_enum)]
    pub from: AlgebraName,
    #[arg(long, value_enum)]
    pub to: AlgebraName,
    #[arg(long, allow_hyphen_values = true)]
    pub expr: String,
    /// Rank; defaults to the largest index in the expression.
    #[arg(long)]
    pub n: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    /// Closed form over the a/L alphabet when one is known, raw otherwise.
    Auto,
    Raw,
    Cag,
}

#[derive(Debug, Args)]
pub struct CoproductArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, allow_hyphen_values = true)]
    pub gen: String,
    #[arg(long, value_enum, default_value = "auto")]
    pub mode: ModeArg,
}

#[derive(Debug, Args)]
pub struct FockArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long)]
    pub p: u32,
    /// Include the sparse generator matrices.
    #[arg(long)]
    pub dump: bool,
}

#[derive(Debug, Args)]
pub struct IdentityArgs {
    /// 16a, 16b, 23 or all
    #[arg(long, default_value = "all")]
    pub id: String,
    /// Negative control: break the hypothesis or parameter condition.
    #[arg(long)]
    pub corrupt: bool,
}

#[derive(Debug, Args)]
pub struct ProbeArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, default_value = "symbolic")]
    pub q: String,
    /// vector | tensor
    #[arg(long, default_value = "vector")]
    pub rep: String,
}

#[derive(Debug, Args)]
pub struct SelftestArgs {
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 64)]
    pub cases: usize,
}

/// Rendered output and process exit status.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub text: String,
    pub exit: i32,
}

impl Output {
    fn new(text: String, ok: bool) -> Self {
        Output { text, exit: if ok { 0 } else { 1 } }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum RepChoice {
    Defining,
    Vector,
    Tensor,
    Fock(u32),
}

fn parse_rep(s: &str) -> Result<RepChoice, CliError> {
    match s {
        "defining" => Ok(RepChoice::Defining),
        "vector" => Ok(RepChoice::Vector),
        "tensor" => Ok(RepChoice::Tensor),
        _ => s
            .strip_prefix("fock:")
            .and_then(|p| p.parse().ok())
            .map(RepChoice::Fock)
            .ok_or_else(|| CliError::Usage(format!("unknown representation `{s}`; use defining, vector, tensor or fock:P"))),
    }
}

pub fn parse_q(s: &str) -> Result<QMode, CliError> {
    if s == "symbolic" {
        return Ok(QMode::Symbolic);
    }
    let v: Rational = s
        .parse()
        .map_err(|_| CliError::Usage(format!("--q must be `symbolic` or a rational number, got `{s}`")))?;
    let mode = QMode::Numeric(v);
    mode.check_generic()?;
    Ok(mode)
}

fn render_report(report: VerificationReport, format: Format, full: bool) -> Output {
    let report = if full { report.with_full_residuals() } else { report };
    let ok = report.all_zero();
    let text = match format {
        Format::Json => serde_json::to_string_pretty(&report.to_json()).expect("json"),
        Format::Text => report.to_text(),
    };
    Output::new(text, ok)
}

fn check_size(n: usize, mode: &QMode, rep: &RepChoice) -> Result<(), CliError> {
    if *mode != QMode::Symbolic {
        return Ok(());
    }
    let limit = match rep {
        RepChoice::Tensor => SYMBOLIC_TENSOR_MAX_N,
        _ => SYMBOLIC_VECTOR_MAX_N,
    };
    if n > limit {
        return Err(CliError::Refused(format!(
            "symbolic q with this representation is limited to n <= {limit}; \
             rerun with a numeric value such as --q 3/2"
        )));
    }
    Ok(())
}

fn classical_rep(n: usize, rep: &RepChoice) -> Result<MatrixRep<Rational>, CliError> {
    match rep {
        RepChoice::Defining => Ok(defining_rep_classical(n)?),
        RepChoice::Fock(p) => Ok(fock_matrix_rep(&fock_module(n, *p)?)?),
        other => Err(CliError::Usage(format!("{other:?} is not a classical representation; use defining or fock:P"))),
    }
}

fn quantum_run<S: Specialize>(args: &VerifyArgs, mode: &QMode, rep: &RepChoice) -> Result<VerificationReport, CliError> {
    let n = args.n;
    let built = match rep {
        RepChoice::Vector => quantum_combined_rep::<S>(n, mode)?,
        RepChoice::Tensor => quantum_tensor_rep::<S>(n, mode)?,
        other => return Err(CliError::Usage(format!("{other:?} is not a quantum representation; use vector or tensor"))),
    };
    let report = match args.algebra {
        Suite::QuantumChevalley => verify_presentation(&quantum_chevalley(n)?, &built)?,
        Suite::QuantumCag => {
            let pres = if args.corrupt { sign_flipped_21c(n)? } else { quantum_cag(n)? };
            verify_presentation(&pres, &built)?
        }
        Suite::NamedConsequences => verify_named_consequences(n, &built)?,
        Suite::RoundTrip => round_trip_check(Direction::Quantum, n, &vector_rep_quantum::<S>(n, mode)?)?,
        _ => unreachable!("classical suites are handled separately"),
    };
    Ok(report)
}

fn cmd_verify(args: &VerifyArgs, format: Format) -> Result<Output, CliError> {
    let n = args.n;
    if n < 1 {
        return Err(qcag::Error::InvalidRank(n).into());
    }
    if args.corrupt && args.algebra != Suite::QuantumCag {
        return Err(CliError::Usage("--corrupt is only available for the quantum CAG suite".into()));
    }
    let classical_suite = matches!(args.algebra, Suite::ClassicalChevalley | Suite::ClassicalCag | Suite::ClassicalLimit);
    let default_rep = match args.algebra {
        Suite::ClassicalChevalley | Suite::ClassicalCag | Suite::ClassicalLimit => "defining",
        _ => "vector",
    };
    let rep = parse_rep(args.rep.as_deref().unwrap_or(default_rep))?;
    let report = if classical_suite {
        let r = classical_rep(n, &rep)?;
        match args.algebra {
            Suite::ClassicalChevalley => verify_presentation(&classical_chevalley(n)?, &r)?,
            Suite::ClassicalCag => verify_presentation(&classical_cag(n, args.extended)?, &r)?,
            _ => classical_limit_check(n, &r)?,
        }
    } else if args.algebra == Suite::RoundTrip && rep == RepChoice::Defining {
        round_trip_check(Direction::Classical, n, &defining_rep_classical::<Rational>(n)?)?
    } else {
        let mode = parse_q(&args.q)?;
        check_size(n, &mode, &rep)?;
        match mode {
            QMode::Symbolic => quantum_run::<RatFunc>(args, &mode, &rep)?,
            QMode::Numeric(_) => quantum_run::<Rational>(args, &mode, &rep)?,
        }
    };
    Ok(render_report(report, format, args.full_residuals))
}

fn genmap_for(from: AlgebraName, to: AlgebraName, n: usize) -> Result<GenMap<RatFunc>, CliError> {
    use AlgebraName::*;
    Ok(match (from, to) {
        (ClCag, ClChevalley) => cag_from_chevalley_classical(n)?,
        (ClChevalley, ClCag) => chevalley_from_cag_classical(n)?,
        (QCag, QChevalley) => cag_from_chevalley_quantum(n)?,
        (QChevalley, QCag) => chevalley_from_cag_quantum(n)?,
        _ => return Err(CliError::Usage(format!("no map from {from:?} to {to:?}"))),
    })
}

fn cmd_convert(args: &ConvertArgs, format: Format) -> Result<Output, CliError> {
    let n = match args.n {
        Some(n) => n,
        None => (parse_any(&args.expr)?.max_index() as usize).max(1),
    };
    let map = genmap_for(args.from, args.to, n)?;
    let ast = parse_expr(&args.expr, &map.source, Some(n))?;
    let image = map.apply(&ast.lower())?;
    let text = match format {
        Format::Text => format!("{image}\n"),
        Format::Json => serde_json::to_string_pretty(&json!({
            "n": n,
            "map": map.name,
            "expr": args.expr,
            "image": image.to_string(),
        }))
        .expect("json"),
    };
    Ok(Output::new(text, true))
}

fn cmd_coproduct(args: &CoproductArgs, format: Format, ascii: bool) -> Result<Output, CliError> {
    let gen = match parse_any(&args.gen)? {
        ExprAST::Gen(g) => g,
        _ => return Err(CliError::Usage(format!("`{}` is not a single generator", args.gen))),
    };
    let index = gen.index().unwrap_or(0) as usize;
    if index < 1 || index > args.n {
        return Err(qcag::Error::IndexOutOfRange { index, n: args.n }.into());
    }
    let raw = coproduct_of(args.n, gen, CoproductMode::Raw)?;
    let cag = match args.mode {
        ModeArg::Raw => None,
        ModeArg::Cag => Some(coproduct_of(args.n, gen, CoproductMode::Cag)?),
        ModeArg::Auto => coproduct_of(args.n, gen, CoproductMode::Cag).ok(),
    };
    let is_cag_symbol = matches!(
        gen,
        qcag::GenSymbol::Aplus(_) | qcag::GenSymbol::Aminus(_) | qcag::GenSymbol::L(_) | qcag::GenSymbol::Lbar(_)
    );
    let sep = if ascii { "(x)" } else { "⊗" };
    let chosen = match (&cag, is_cag_symbol) {
        (Some(t), true) => ("cag", t),
        _ => ("raw", &raw),
    };
    let text = match format {
        Format::Text => format!("{}\n", chosen.1.to_text(sep)),
        Format::Json => serde_json::to_string_pretty(&json!({
            "n": args.n,
            "gen": gen.to_string(),
            "raw": raw.to_text(sep),
            "cag": cag.filter(|_| is_cag_symbol).map(|t| t.to_text(sep)),
        }))
        .expect("json"),
    };
    Ok(Output::new(text, true))
}

fn cmd_fock(args: &FockArgs, format: Format) -> Result<Output, CliError> {
    let module = fock_module(args.n, args.p)?;
    let text = match format {
        Format::Json => {
            let mut v = module.to_json()?;
            if !args.dump {
                v.as_object_mut().expect("object").remove("matrices");
            }
            serde_json::to_string_pretty(&v).expect("json")
        }
        Format::Text => {
            let mut s = format!(
                "n={} p={}\ndimension: {}\nvacuum: {}\n",
                args.n,
                args.p,
                module.dimension(),
                module.vacuum()
            );
            if args.dump {
                let basis: Vec<String> = module.basis().iter().map(|b| b.to_string()).collect();
                s.push_str(&format!("basis: {}\n", basis.join(" ")));
                let rep = fock_matrix_rep::<Rational>(&module)?;
                for (g, m) in rep.matrices() {
                    let entries: Vec<String> = m.nonzero_entries().map(|(r, c, x)| format!("({r},{c},{x})")).collect();
                    s.push_str(&format!("{g}: [{}]\n", entries.join(" ")));
                }
            }
            s
        }
    };
    Ok(Output::new(text, true))
}

fn cmd_identity(args: &IdentityArgs, format: Format) -> Result<Output, CliError> {
    let ids: Vec<IdentityId> = if args.id == "all" {
        IdentityId::ALL.to_vec()
    } else {
        vec![IdentityId::parse(&args.id)
            .ok_or_else(|| CliError::Usage(format!("unknown identity `{}`; use 16a, 16b, 23 or all", args.id)))?]
    };
    let results: Vec<_> = ids.into_iter().map(|id| check_identity(id, args.corrupt)).collect();
    let ok = results.iter().all(|r| r.holds);
    let text = match format {
        Format::Json => serde_json::to_string_pretty(&results).expect("json"),
        Format::Text => results
            .iter()
            .map(|r| {
                let tag = if r.corrupted { " (corrupted condition)" } else { "" };
                if r.holds {
                    format!("{}{tag}: holds\n", r.id.as_str())
                } else {
                    format!("{}{tag}: FAILS, residual {}\n", r.id.as_str(), r.residual)
                }
            })
            .collect(),
    };
    Ok(Output::new(text, ok))
}

fn probe_rows<S: Specialize>(n: usize, mode: &QMode, rep: &RepChoice) -> Result<Vec<qcag::verify::ProbeRow>, CliError> {
    let built = match rep {
        RepChoice::Vector => quantum_cag_rep::<S>(n, mode)?,
        RepChoice::Tensor => quantum_tensor_rep::<S>(n, mode)?,
        other => return Err(CliError::Usage(format!("{other:?} is not supported by probe-21d; use vector or tensor"))),
    };
    Ok(probe_21d_range(n, &built)?)
}

fn cmd_probe(args: &ProbeArgs, format: Format) -> Result<Output, CliError> {
    let mode = parse_q(&args.q)?;
    let rep = parse_rep(&args.rep)?;
    check_size(args.n, &mode, &rep)?;
    let rows = match mode {
        QMode::Symbolic => probe_rows::<RatFunc>(args.n, &mode, &rep)?,
        QMode::Numeric(_) => probe_rows::<Rational>(args.n, &mode, &rep)?,
    };
    let ok = rows.iter().all(|r| r.status == Status::Zero);
    let text = match format {
        Format::Json => serde_json::to_string_pretty(&json!({
            "n": args.n,
            "representation": args.rep,
            "q": mode.label(),
            "rows": rows,
        }))
        .expect("json"),
        Format::Text => {
            let mut s = format!("n={} rep={} q={}\n   i  xi  eta   j  status\n", args.n, args.rep, mode.label());
            for r in &rows {
                let status = if r.status == Status::Zero { "zero" } else { "nonzero" };
                s.push_str(&format!("{:>4} {:>3} {:>4} {:>3}  {status}\n", r.i, r.xi, r.eta, r.j));
            }
            s
        }
    };
    Ok(Output::new(text, ok))
}

/// Run a parsed command line.
pub fn run(cli: &Cli) -> Result<Output, CliError> {
    let text_default = cli.format.unwrap_or(Format::Text);
    match &cli.command {
        Command::Verify(a) => cmd_verify(a, cli.format.unwrap_or(Format::Json)),
        Command::Convert(a) => cmd_convert(a, text_default),
        Command::Coproduct(a) => cmd_coproduct(a, text_default, cli.ascii),
        Command::Fock(a) => cmd_fock(a, text_default),
        Command::Identity(a) => cmd_identity(a, text_default),
        Command::Probe21d(a) => cmd_probe(a, text_default),
        Command::Selftest(a) => run_selftest(a.seed, a.cases, text_default),
    }
}
