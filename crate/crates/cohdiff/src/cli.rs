//! The `cohdiff` command. Every failure maps to one exit code:
//!
//! | code | meaning |
//! |------|---------|
//! | 0 | success |
//! | 1 | parse or type error in a program |
//! | 2 | fuel exhausted during reduction |
//! | 3 | invalid model file or interpretation |
//! | 4 | a law or theorem is violated |
//! | 5 | usage or IO error |

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use cohdiff_core::ccdc::corrupt::{CorruptedSampler, CorruptedSigma};
use cohdiff_core::ccdc::laws::{check_axioms, LawConfig, LawReport};
use cohdiff_core::ccdc::Ccdc;
use cohdiff_core::pcs::{Pcs, PcsError, PcsSampler};
use cohdiff_core::polycdc::{check_cdc_axioms, PolyCdc, PolySampler};
use cohdiff_core::rational::{self, Rational};
use cohdiff_core::rewrite::{normalize, DEFAULT_FUEL};
use cohdiff_core::semantics::fixtures::{pcs_model, poly_model, GROUND};
use cohdiff_core::semantics::generate::{projected_derivative, random_case, GenConfig};
use cohdiff_core::semantics::{check_diff_theorem, check_invariance, InvarianceError, Model, SemanticsError, Verdict};
use cohdiff_core::syntax::{differentiate, typecheck, Context, Function, Term, TypeError};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::model_file::{load_model, ModelError};
use crate::program::{parse_program, Program, TermDecl};
use crate::SyntaxError;

pub const EXIT_OK: i32 = 0;
pub const EXIT_PROGRAM: i32 = 1;
pub const EXIT_FUEL: i32 = 2;
pub const EXIT_MODEL: i32 = 3;
pub const EXIT_VIOLATION: i32 = 4;
pub const EXIT_USAGE: i32 = 5;

#[derive(Parser, Debug)]
#[command(name = "cohdiff", version, about = "Exact coherent differentiation: typing, derivatives, reduction and model checking")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Parse and typecheck a program, printing the type of every term.
    Check { file: PathBuf },
    /// Print the derivative of a term with respect to one of its variables.
    Diff {
        file: PathBuf,
        #[arg(long)]
        term: String,
        #[arg(long = "var")]
        var: String,
    },
    /// Normalize a term, optionally printing every step.
    Reduce {
        file: PathBuf,
        #[arg(long)]
        term: String,
        #[arg(long, env = "COHDIFF_FUEL", default_value_t = DEFAULT_FUEL)]
        fuel: usize,
        #[arg(long)]
        trace: bool,
    },
    /// Evaluate a term in a PCS model at a point of its context.
    Eval {
        file: PathBuf,
        model: PathBuf,
        #[arg(long)]
        term: String,
        /// `VAR=v0,v1,..` coordinates of one variable; missing variables are zero.
        #[arg(long = "at")]
        at: Vec<String>,
    },
    /// Run the law suite on a backend.
    Laws {
        #[arg(long, value_enum, default_value_t = LawBackend::Pcs)]
        backend: LawBackend,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        cases: usize,
    },
    /// Check the differential and invariance theorems on generated terms,
    /// or on the terms of a program interpreted in a model file.
    Theorems {
        #[arg(long, value_enum, default_value_t = Backend::Pcs)]
        backend: Backend,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        cases: usize,
        /// Maximum depth of generated terms.
        #[arg(long, default_value_t = 5)]
        depth: usize,
        #[arg(long, env = "COHDIFF_FUEL", default_value_t = DEFAULT_FUEL)]
        fuel: usize,
        /// A program and a PCS model file; replaces the generated terms.
        #[arg(num_args = 2, value_names = ["FILE", "MODEL"])]
        files: Vec<PathBuf>,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum Backend {
    Pcs,
    Poly,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
enum LawBackend {
    Pcs,
    Poly,
    /// PCS with a broken sum, as a negative control.
    Corrupted,
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{0}")]
    Usage(String),
    #[error("{path}:{source}")]
    Syntax { path: PathBuf, source: SyntaxError },
    #[error("term {term}: {source}")]
    Type { term: String, source: TypeError },
    #[error("fuel exhausted after {0} steps")]
    Fuel(usize),
    #[error("{0}")]
    Model(String),
    #[error("{0}")]
    Violation(String),
}

impl CliError {
    fn code(&self) -> i32 {
        match self {
            CliError::Io { .. } | CliError::Usage(_) => EXIT_USAGE,
            CliError::Syntax { .. } | CliError::Type { .. } => EXIT_PROGRAM,
            CliError::Fuel(_) => EXIT_FUEL,
            CliError::Model(_) => EXIT_MODEL,
            CliError::Violation(_) => EXIT_VIOLATION,
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(source: std::io::Error) -> Self {
        CliError::Io { path: PathBuf::from("<output>"), source }
    }
}

/// Semantic errors are model errors, except typing errors in the program.
fn semantic(term: &str, e: SemanticsError) -> CliError {
    match e {
        SemanticsError::Type(source) => CliError::Type { term: term.to_string(), source },
        e => CliError::Model(format!("term {term}: {e}")),
    }
}

type Res<T = ()> = Result<T, CliError>;

/// Runs the command line `args` (program name first) and returns the exit
/// code. Reports go to `out`, diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let help = matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion);
            let _ = if help { write!(out, "{}", e.render()) } else { write!(err, "{}", e.render()) };
            return if help { EXIT_OK } else { EXIT_USAGE };
        }
    };
    match dispatch(cli.command, out) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.code()
        }
    }
}

fn dispatch(command: Command, out: &mut dyn Write) -> Res {
    match command {
        Command::Check { file } => check(&file, out),
        Command::Diff { file, term, var } => diff(&file, &term, &var, out),
        Command::Reduce { file, term, fuel, trace } => reduce(&file, &term, fuel, trace, out),
        Command::Eval { file, model, term, at } => eval(&file, &model, &term, &at, out),
        Command::Laws { backend, seed, cases } => laws(backend, seed, cases, out),
        Command::Theorems { backend, seed, cases, depth, fuel, files } => match files.as_slice() {
            [file, model] => theorems_on_file(file, model, fuel, out),
            _ => theorems(backend, seed, cases, depth, fuel, out),
        },
    }
}

fn read(path: &Path) -> Res<String> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })
}

fn load_program(path: &Path) -> Res<Program> {
    parse_program(&read(path)?).map_err(|source| CliError::Syntax { path: path.to_path_buf(), source })
}

fn find<'a>(program: &'a Program, name: &str) -> Res<&'a TermDecl> {
    program.term(name).ok_or_else(|| CliError::Usage(format!("no term named {name}")))
}

fn check(file: &Path, out: &mut dyn Write) -> Res {
    let program = load_program(file)?;
    let mut first_error = None;
    for (name, ty) in program.signature.functions() {
        writeln!(out, "fn {name} : {ty}")?;
    }
    for decl in &program.terms {
        match typecheck(&program.signature, &decl.ctx, &decl.term) {
            Ok(ty) => writeln!(out, "term {} : {ty}", decl.name)?,
            Err(e) => {
                writeln!(out, "term {} : ill-typed ({e})", decl.name)?;
                first_error.get_or_insert(CliError::Type { term: decl.name.clone(), source: e });
            }
        }
    }
    first_error.map_or(Ok(()), Err)
}

fn diff(file: &Path, term: &str, var: &str, out: &mut dyn Write) -> Res {
    let program = load_program(file)?;
    let decl = find(&program, term)?;
    if decl.ctx.get(var).is_none() {
        return Err(CliError::Usage(format!("{var} is not in the context of {term}")));
    }
    let typed = |ctx: &Context, t: &Term| {
        typecheck(&program.signature, ctx, t).map_err(|source| CliError::Type { term: term.to_string(), source })
    };
    typed(&decl.ctx, &decl.term)?;
    let dt = differentiate(&decl.term, var);
    let ctx = decl.ctx.differentiate(var);
    let ty = typed(&ctx, &dt)?;
    writeln!(out, "d {term} / d {var} = {dt}")?;
    writeln!(out, "  [{ctx}] : {ty}")?;
    Ok(())
}

fn reduce(file: &Path, term: &str, fuel: usize, trace: bool, out: &mut dyn Write) -> Res {
    let program = load_program(file)?;
    let decl = find(&program, term)?;
    match normalize(&decl.term, fuel) {
        Ok(n) => {
            if trace {
                write!(out, "{}", n.trace)?;
            }
            writeln!(out, "=> {}", n.result)?;
            Ok(())
        }
        Err(e) => {
            write!(out, "{}", e.trace)?;
            Err(CliError::Fuel(e.fuel))
        }
    }
}

fn parse_point(model: &Model<Pcs>, ctx: &Context, at: &[String]) -> Res<Vec<Rational>> {
    let slots = model.interp_slots(ctx).map_err(|e| semantic("point", e))?;
    let mut coords: Vec<Vec<Rational>> = slots.iter().map(|s| vec![Rational::default(); s.size()]).collect();
    for arg in at {
        let (var, values) = arg
            .split_once('=')
            .ok_or_else(|| CliError::Usage(format!("--at {arg}: expected VAR=v0,v1,..")))?;
        let k = ctx
            .position(var.trim())
            .ok_or_else(|| CliError::Usage(format!("--at {arg}: {var} is not in the context")))?;
        let values: Vec<Rational> = values
            .split(',')
            .map(|v| rational::parse(v).ok_or_else(|| CliError::Usage(format!("--at {arg}: invalid rational {v}"))))
            .collect::<Res<_>>()?;
        if values.len() != coords[k].len() {
            return Err(CliError::Usage(format!("--at {arg}: {var} has {} coordinates", coords[k].len())));
        }
        coords[k] = values;
    }
    Ok(coords.concat())
}

fn eval(file: &Path, model_path: &Path, term: &str, at: &[String], out: &mut dyn Write) -> Res {
    let program = load_program(file)?;
    let model = load_model(&read(model_path)?, &program.signature).map_err(|e| model_error(model_path, e))?;
    let decl = find(&program, term)?;
    let f = model.interp_term(&decl.ctx, &decl.term).map_err(|e| semantic(term, e))?;
    let point = parse_point(&model, &decl.ctx, at)?;
    let value = model.inst.eval(&f, &point).map_err(|e| match e {
        PcsError::NotInSpace(_) | PcsError::Length { .. } => CliError::Usage(format!("--at: {e}")),
        e => CliError::Model(e.to_string()),
    })?;
    let cod = model.inst.codomain(&f);
    for (b, v) in value.iter().enumerate() {
        writeln!(out, "{} = {}", cod.atom_label(b), rational::format(v))?;
    }
    Ok(())
}

fn model_error(path: &Path, e: ModelError) -> CliError {
    CliError::Model(format!("{}:{e}", path.display()))
}

fn report_laws(report: &LawReport, out: &mut dyn Write) -> Res {
    write!(out, "{report}")?;
    let failed: Vec<&str> = report.failures().map(|o| o.name.as_str()).collect();
    if failed.is_empty() {
        Ok(())
    } else {
        Err(CliError::Violation(format!("laws failed: {}", failed.join(", "))))
    }
}

fn laws(backend: LawBackend, seed: u64, cases: usize, out: &mut dyn Write) -> Res {
    let config = LawConfig { cases, seed, ..LawConfig::default() };
    let report = match backend {
        LawBackend::Pcs => check_axioms(&Pcs::default(), &mut PcsSampler::new(seed), &config),
        LawBackend::Poly => check_axioms(&PolyCdc::default(), &mut PolySampler::new(seed), &config)
            .merge(check_cdc_axioms(cases, seed)),
        LawBackend::Corrupted => {
            check_axioms(&CorruptedSigma(Pcs::default()), &mut CorruptedSampler(PcsSampler::new(seed)), &config)
        }
    };
    report_laws(&report, out)
}

#[derive(Default)]
struct Tally {
    differential: usize,
    invariance: usize,
    violations: Vec<Verdict>,
}

impl Tally {
    fn record(&mut self, v: Verdict) {
        if v.theorem == cohdiff_core::semantics::DIFFERENTIAL {
            self.differential += 1;
        } else {
            self.invariance += 1;
        }
        if !v.holds {
            self.violations.push(v);
        }
    }

    fn finish(self, out: &mut dyn Write) -> Res {
        for v in &self.violations {
            writeln!(out, "{v}")?;
        }
        for (name, cases) in [
            (cohdiff_core::semantics::DIFFERENTIAL, self.differential),
            (cohdiff_core::semantics::INVARIANCE, self.invariance),
        ] {
            let bad = self.violations.iter().filter(|v| v.theorem == name).count();
            let status = if bad == 0 { "HOLDS" } else { "VIOLATED" };
            writeln!(out, "THEOREM {name} {status} cases={cases} violations={bad}")?;
        }
        if self.violations.is_empty() {
            Ok(())
        } else {
            Err(CliError::Violation(format!("{} theorem instances violated", self.violations.len())))
        }
    }
}

fn invariance<I: Ccdc>(model: &Model<I>, ctx: &Context, t: &Term, fuel: usize, label: &str) -> Res<Verdict> {
    match check_invariance(model, ctx, t, fuel) {
        Ok((v, _)) => Ok(v),
        Err(InvarianceError::Fuel(e)) => Err(CliError::Fuel(e.fuel)),
        Err(InvarianceError::Semantics(e)) => Err(semantic(label, e)),
    }
}

fn generated<I: Ccdc>(model: &Model<I>, seed: u64, cases: usize, depth: usize, fuel: usize, out: &mut dyn Write) -> Res {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let config = GenConfig { max_depth: depth, ..GenConfig::default() };
    let mut tally = Tally::default();
    for k in 0..cases {
        let case = random_case(&mut rng, model.signature(), GROUND, &config);
        let label = format!("case {k}");
        let v = check_diff_theorem(model, &case.ctx, &case.x, &case.a, &case.t).map_err(|e| semantic(&label, e))?;
        tally.record(v);
        tally.record(invariance(model, &case.full_context(), &case.t, fuel, &label)?);
        let (ctx, t) = projected_derivative(&case, (k % 2) as u8);
        tally.record(invariance(model, &ctx, &t, fuel, &label)?);
    }
    tally.finish(out)
}

fn theorems(backend: Backend, seed: u64, cases: usize, depth: usize, fuel: usize, out: &mut dyn Write) -> Res {
    match backend {
        Backend::Pcs => generated(&pcs_model(), seed, cases, depth, fuel, out),
        Backend::Poly => generated(&poly_model(), seed, cases, depth, fuel, out),
    }
}

fn theorems_on_file(file: &Path, model_path: &Path, fuel: usize, out: &mut dyn Write) -> Res {
    let program = load_program(file)?;
    let model = load_model(&read(model_path)?, &program.signature).map_err(|e| model_error(model_path, e))?;
    let mut tally = Tally::default();
    for decl in &program.terms {
        let name = &decl.name;
        tally.record(invariance(&model, &decl.ctx, &decl.term, fuel, name)?);
        for (k, (x, a)) in decl.ctx.entries().iter().enumerate() {
            let rest = Context::from_entries(
                decl.ctx.entries().iter().enumerate().filter(|&(j, _)| j != k).map(|(_, e)| e.clone()).collect(),
            );
            // The theorem is stated with x last in the context.
            if k + 1 == decl.ctx.len() {
                let v = check_diff_theorem(&model, &rest, x, a, &decl.term).map_err(|e| semantic(name, e))?;
                tally.record(v);
            }
            let dt = differentiate(&decl.term, x);
            let ctx = decl.ctx.differentiate(x);
            for i in 0..2 {
                let t = Term::builtin(Function::Dproj(i), 0, dt.clone());
                tally.record(invariance(&model, &ctx, &t, fuel, name)?);
            }
        }
    }
    tally.finish(out)
}
