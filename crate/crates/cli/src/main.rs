//! Command-line front end for iomlab.

use std::fs;
use std::io::Write as _;
use std::ops::ControlFlow;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use iomlab::axioms::{check_axiom_with, classify_with, in_class, CheckMode};
use iomlab::bank::{run_bank, run_bank_enumerated, TheoremBankReport};
use iomlab::enumerate::{enumerate_models, for_each_model, EnumerationTask, DEFAULT_MAX_SIZE};
use iomlab::format::{
    parse_algtab, parse_ortlat, parse_statement_file, write_algtab, write_ortlat,
};
use iomlab::render::{render, RenderFormat};
use iomlab::structure::{center, commutor, complements, ElementSubset};
use iomlab::term::{evaluate, parse_statement, parse_term, Compiled};
use iomlab::transform::{from_ortholattice, to_ortholattice};
use iomlab::{AlgebraClass, AxiomId, Error, FiniteAlgebra};

const AFTER_HELP: &str = "\
TERMS
  x' is x -> 0, the negation x*. Postfix, binds tightest.
  x & y is the meet ((x' -> y') -> y')'; x | y is the join (x -> y) -> y.
    & and | share one level and must be parenthesized when mixed.
  x -> y is implication, right-associative, binds loosest.
  0 and 1 are the constants; variables are identifiers such as x, y1, z_2.

STATEMENTS
  lhs = rhs                 an identity
  x <= y, x <=q y, x <=l y  relations: x -> y = 1; x = x & y; x = (x -> y')'
  x C y                     commutation: x = (x -> y') -> (x -> y)'
  H1, H2 |- C               quasi-identity with premises H1, H2 and conclusion C
  Statement files hold one statement per line, optionally labelled as
  `label: statement`; # starts a comment.

ALGTAB FILES (.alg)
  algtab 1
  n 4
  elems 0 a a* 1
  one 1
  zero 0
  1  1  1  1      # n rows; row r, column c holds r -> c
  a* 1  a* 1
  a  a  1  1
  0  a  a* 1

ORTLAT FILES (.ort)
  The same five header lines with `ortlat 1`, then `meet` and n rows, an
  optional `join` and n rows, and `ortho` followed by n names.

CLASSES
  be, bbe, invbe, implinvbe, ioml, iboolean

EXIT STATUS
  0 success, 1 some check failed, 2 usage or input error";

#[derive(Parser)]
#[command(
    name = "iomlab",
    version,
    about = "Finite implicative-orthomodular lattices and BE algebras"
)]
#[command(after_long_help = AFTER_HELP)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check selected axioms on an algebra
    Check {
        file: PathBuf,
        /// Comma-separated axiom ids, e.g. be1,be4,involutive,iom
        #[arg(long, value_delimiter = ',', required = true)]
        axioms: Vec<String>,
        #[command(flatten)]
        mode: ModeArgs,
    },
    /// Report every axiom family and the classes the algebra belongs to
    Classify {
        file: PathBuf,
        #[command(flatten)]
        mode: ModeArgs,
    },
    /// Check statements, or evaluate a term, on an algebra
    Eval {
        file: PathBuf,
        /// Statements to check
        statements: Vec<String>,
        /// Statement file to check
        #[arg(long = "file", short = 'f')]
        statement_file: Option<PathBuf>,
        /// Term to evaluate instead of checking statements
        #[arg(long, conflicts_with_all = ["statements", "statement_file"])]
        term: Option<String>,
        /// Variable assignment for --term, e.g. x=a,y=b*
        #[arg(long, value_delimiter = ',', requires = "term")]
        assign: Vec<String>,
    },
    /// Enumerate models of a class
    Enumerate {
        #[arg(long)]
        size: usize,
        #[arg(long)]
        class: AlgebraClass,
        /// One representative per isomorphism class
        #[arg(long)]
        modulo_iso: bool,
        /// Write each model to <dir>/<class>_<n>_<seq>.alg
        #[arg(long)]
        emit: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_MAX_SIZE)]
        max_size: usize,
        /// Keep only models on which this statement fails
        #[arg(long)]
        refute: Option<String>,
    },
    /// Print the center: elements commuting with everything
    Center { file: PathBuf },
    /// Print the elements commuting with every element of a subset
    Commutor {
        file: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        subset: Vec<String>,
    },
    /// Print the complements of an element
    Complements {
        file: PathBuf,
        #[arg(long)]
        element: String,
    },
    /// Convert between algtab and ortlat files
    Convert {
        file: PathBuf,
        #[arg(long, value_parser = ["alg", "oml"])]
        to: String,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
    /// Run the theorem bank on an algebra or on enumerated models
    Report {
        #[arg(required_unless_present = "enumerate", conflicts_with = "enumerate")]
        file: Option<PathBuf>,
        #[arg(long, requires = "class")]
        enumerate: bool,
        #[arg(long)]
        class: Option<AlgebraClass>,
        #[arg(long, default_value_t = 6)]
        max_size: usize,
    },
    /// Write the <=l Hasse diagram and the commutation graph
    Render {
        file: PathBuf,
        #[arg(long, default_value_t = RenderFormat::Text)]
        format: RenderFormat,
        #[arg(long, short)]
        output: Option<PathBuf>,
    },
}

#[derive(Args)]
struct ModeArgs {
    /// Check IDIS through IDIV on IOMLs instead of expanding every triple
    #[arg(long)]
    fast: bool,
}

impl ModeArgs {
    fn mode(&self) -> CheckMode {
        if self.fast {
            CheckMode::Fast
        } else {
            CheckMode::Full
        }
    }
}

/// A failed invocation: bad input, or a check that did not pass.
enum Failure {
    Usage(String),
    Checks,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<(), Failure>;

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn with_path<T>(path: &Path, r: iomlab::Result<T>) -> Result<T, Failure> {
    r.map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn load(path: &Path) -> Result<FiniteAlgebra, Failure> {
    with_path(path, parse_algtab(&read(path)?))
}

fn verdict(ok: bool) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(Failure::Checks)
    }
}

fn output(path: Option<&Path>, text: &str) -> Outcome {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| usage(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn check(file: &Path, axioms: &[String], mode: CheckMode) -> Outcome {
    let ids = axioms
        .iter()
        .map(|s| s.trim().parse::<AxiomId>().map_err(usage))
        .collect::<Result<Vec<_>, _>>()?;
    let a = load(file)?;
    let mut all = true;
    for id in ids {
        let v = check_axiom_with(&a, id, mode);
        all &= v.holds;
        if v.holds {
            println!("{} PASS", id.name());
        } else {
            println!("{} FAIL {}", id.name(), v.describe(&a));
        }
    }
    verdict(all)
}

fn classify(file: &Path, mode: CheckMode) -> Outcome {
    let a = load(file)?;
    let report = classify_with(&a, mode);
    for line in report.lines(&a) {
        println!("{line}");
    }
    if report.degenerate {
        println!("degenerate 0 = 1");
    }
    let labels: Vec<&str> = report.labels().iter().map(|c| c.label()).collect();
    println!(
        "classes {}",
        if labels.is_empty() {
            "none".to_string()
        } else {
            labels.join(" ")
        }
    );
    Ok(())
}

fn eval(
    file: &Path,
    statements: &[String],
    statement_file: Option<&Path>,
    term: Option<&str>,
    assign: &[String],
) -> Outcome {
    let a = load(file)?;
    if let Some(t) = term {
        let t = parse_term(t).map_err(|e| usage(e.to_string()))?;
        let mut env = std::collections::HashMap::new();
        for pair in assign {
            let (var, name) = pair
                .split_once('=')
                .ok_or_else(|| usage(format!("expected var=element, got `{pair}`")))?;
            env.insert(var.trim().to_string(), a.element(name.trim())?);
        }
        println!("{}", a.name(evaluate(&t, &a, &env)?));
        return Ok(());
    }
    let mut items = Vec::new();
    for s in statements {
        items.push((
            s.clone(),
            parse_statement(s).map_err(|e| usage(e.to_string()))?,
        ));
    }
    if let Some(path) = statement_file {
        for line in with_path(path, parse_statement_file(&read(path)?))? {
            let label = line.label.unwrap_or_else(|| line.statement.to_string());
            items.push((label, line.statement));
        }
    }
    if items.is_empty() {
        return Err(usage("eval needs a statement, --file or --term"));
    }
    let mut all = true;
    for (label, stmt) in items {
        let v = Compiled::new(&stmt)?.check(&a);
        all &= v.holds;
        if v.holds {
            println!("{label} PASS");
        } else {
            println!("{label} FAIL {}", v.describe(&a));
        }
    }
    verdict(all)
}

fn enumerate(
    size: usize,
    class: AlgebraClass,
    modulo_iso: bool,
    emit: Option<&Path>,
    max_size: usize,
    refute: Option<&str>,
) -> Outcome {
    let mut task = EnumerationTask::new(size, class)
        .modulo_iso(modulo_iso)
        .max_size(max_size);
    if let Some(s) = refute {
        task = task.refuting(parse_statement(s).map_err(|e| usage(e.to_string()))?);
    }
    task.validate()?;
    if let Some(dir) = emit {
        fs::create_dir_all(dir).map_err(|e| usage(format!("{}: {e}", dir.display())))?;
    }
    let mut count = 0usize;
    let mut io_error = None;
    if emit.is_some() && !modulo_iso {
        // Labelled output is sorted so file numbering is reproducible.
        for m in enumerate_models(&task)? {
            count += 1;
            emit_model(emit, class, size, count, &m)?;
        }
    } else {
        for_each_model(&task, |m| {
            count += 1;
            match emit_model(emit, class, size, count, &m) {
                Ok(()) => ControlFlow::Continue(()),
                Err(e) => {
                    io_error = Some(e);
                    ControlFlow::Break(())
                }
            }
        })?;
    }
    if let Some(e) = io_error {
        return Err(e);
    }
    println!("count={count}");
    Ok(())
}

fn emit_model(
    dir: Option<&Path>,
    class: AlgebraClass,
    size: usize,
    seq: usize,
    m: &FiniteAlgebra,
) -> Outcome {
    let Some(dir) = dir else { return Ok(()) };
    let path = dir.join(format!("{}_{size}_{seq}.alg", class.short_name()));
    fs::write(&path, write_algtab(m)).map_err(|e| usage(format!("{}: {e}", path.display())))
}

/// Structure queries are defined on any algebra, but the theory behind them
/// is about IOMLs, so other inputs get a warning on stderr.
fn load_for_structure(path: &Path) -> Result<FiniteAlgebra, Failure> {
    let a = load(path)?;
    if !in_class(&a, AlgebraClass::Ioml) {
        eprintln!("iomlab: warning: {} is not an IOML", path.display());
    }
    Ok(a)
}

fn print_subset(s: &ElementSubset<'_>) {
    println!("{}", s.names().join(" "));
}

fn convert(file: &Path, to: &str, out: Option<&Path>) -> Outcome {
    let text = read(file)?;
    let magic = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| !l.is_empty())
        .and_then(|l| l.split_whitespace().next())
        .unwrap_or("");
    let converted = match (magic, to) {
        ("algtab", "oml") => write_ortlat(&with_path(
            file,
            parse_algtab(&text).and_then(|a| to_ortholattice(&a)),
        )?),
        ("algtab", _) => write_algtab(&with_path(file, parse_algtab(&text))?),
        ("ortlat", "alg") => write_algtab(&with_path(
            file,
            parse_ortlat(&text).and_then(|l| from_ortholattice(&l)),
        )?),
        ("ortlat", _) => write_ortlat(&with_path(file, parse_ortlat(&text))?),
        _ => {
            return Err(usage(format!(
                "{}: line 1: expected `algtab 1` or `ortlat 1` header",
                file.display()
            )))
        }
    };
    output(out, &converted)
}

fn report(file: Option<&Path>, class: Option<AlgebraClass>, max_size: usize) -> Outcome {
    let r: TheoremBankReport = match (file, class) {
        (Some(f), _) => run_bank(&load(f)?),
        (None, Some(c)) => {
            EnumerationTask::new(max_size.max(2), c).validate()?;
            run_bank_enumerated(c, max_size)?
        }
        (None, None) => return Err(usage("report needs a file or --enumerate --class")),
    };
    print!("{}", r.render());
    verdict(r.all_passed())
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Check { file, axioms, mode } => check(&file, &axioms, mode.mode()),
        Command::Classify { file, mode } => classify(&file, mode.mode()),
        Command::Eval {
            file,
            statements,
            statement_file,
            term,
            assign,
        } => eval(
            &file,
            &statements,
            statement_file.as_deref(),
            term.as_deref(),
            &assign,
        ),
        Command::Enumerate {
            size,
            class,
            modulo_iso,
            emit,
            max_size,
            refute,
        } => enumerate(
            size,
            class,
            modulo_iso,
            emit.as_deref(),
            max_size,
            refute.as_deref(),
        ),
        Command::Center { file } => {
            let a = load_for_structure(&file)?;
            print_subset(&center(&a));
            Ok(())
        }
        Command::Commutor { file, subset } => {
            let a = load_for_structure(&file)?;
            let y = ElementSubset::from_names(&a, &subset)?;
            print_subset(&commutor(&a, &y)?);
            Ok(())
        }
        Command::Complements { file, element } => {
            let a = load_for_structure(&file)?;
            print_subset(&complements(&a, a.element(&element)?));
            Ok(())
        }
        Command::Convert { file, to, output } => convert(&file, &to, output.as_deref()),
        Command::Report {
            file,
            class,
            max_size,
            ..
        } => report(file.as_deref(), class, max_size),
        Command::Render {
            file,
            format,
            output: out,
        } => {
            let a = load(&file)?;
            let name = file
                .file_stem()
                .and_then(|s| s.to_str())
                .unwrap_or("algebra");
            output(out.as_deref(), &render(&a, name, format))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let rendered = e.to_string();
            let first = rendered.lines().next().unwrap_or("invalid arguments");
            eprintln!("iomlab: {}", first.trim_start_matches("error: "));
            return ExitCode::from(2);
        }
    };
    let result = run(cli);
    let _ = std::io::stdout().flush();
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Checks) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("iomlab: {msg}");
            ExitCode::from(2)
        }
    }
}
