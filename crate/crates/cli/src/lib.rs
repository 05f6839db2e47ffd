//! Command-line front end for `freerack-core`.
//!
//! [`run`] parses arguments, dispatches one command and returns what would be
//! printed together with the exit code: 0 on success, 2 for syntax errors,
//! 3 for semantic errors and 4 when a bounded search gives up.

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Parser, Subcommand};
use freerack_core::{
    rack::check_axioms,
    subrack::{
        closure, express_over_basis, lift_basis, rack_member, Basis, Expressed, MembershipAnswer,
        NonMemberReason, SearchLimit,
    },
    syntax::parse_element_list,
    Alphabet, Error, RackElement, RackExpr, WordMode,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub mod files;
pub mod sample;

/// Exit code for malformed input.
pub const EXIT_SYNTAX: i32 = 2;
/// Exit code for well-formed input that is rejected.
pub const EXIT_SEMANTIC: i32 = 3;
/// Exit code when a bounded search ends without an answer.
pub const EXIT_UNKNOWN: i32 = 4;

/// Symbolic computation in free racks and quandles.
#[derive(Debug, Parser)]
#[command(name = "freerack", version)]
pub struct Cli {
    /// Comma-separated generator names.
    #[arg(long, global = true, default_value = "a,b,c")]
    pub alphabet: String,
    /// Word mode: free or involutory.
    #[arg(long, global = true, default_value = "free")]
    pub mode: WordMode,
    /// Word-length bound for closures and membership, depth bound for
    /// normal-form search.
    #[arg(long, global = true, default_value_t = 8,
          value_parser = clap::value_parser!(u16).range(1..))]
    pub bound: u16,
    #[command(subcommand)]
    pub command: Command,
}

/// The commands.
#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate an expression to an element literal.
    Eval {
        /// Expression such as `a^2 |> (b; c)`.
        expr: String,
    },
    /// Compare two expressions.
    Eq {
        #[allow(missing_docs)]
        left: String,
        #[allow(missing_docs)]
        right: String,
    },
    /// Print the fiber exponent and class of an expression's value.
    Canon {
        #[allow(missing_docs)]
        expr: String,
    },
    /// Decide membership in the subrack generated by `--gens`.
    Member {
        #[allow(missing_docs)]
        expr: String,
        /// Comma-separated element literals.
        #[arg(long)]
        gens: String,
    },
    /// List the bounded closure of `--gens`.
    Closure {
        /// Comma-separated element literals.
        #[arg(long)]
        gens: String,
    },
    /// Replace each class by its fiber-canonical preimage.
    BasisLift {
        /// Comma-separated element literals.
        #[arg(long, conflicts_with = "file", required_unless_present = "file")]
        gens: Option<String>,
        /// File with one element literal per line.
        #[arg(long)]
        file: Option<PathBuf>,
    },
    /// Write an element in normal form over a basis.
    Express {
        #[allow(missing_docs)]
        expr: String,
        /// Comma-separated basis literals.
        #[arg(
            long,
            conflicts_with = "basis_file",
            required_unless_present = "basis_file"
        )]
        basis: Option<String>,
        /// File with one basis literal per line.
        #[arg(long)]
        basis_file: Option<PathBuf>,
    },
    /// Check the rack axioms on seeded random triples.
    AxiomsCheck {
        /// Number of triples.
        #[arg(long, default_value_t = 1000)]
        samples: usize,
        /// Random seed.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Maximum word length of sampled elements.
        #[arg(long, default_value_t = 8)]
        max_len: usize,
    },
}

/// Failures of a command.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    /// An error from the core library.
    #[error(transparent)]
    Core(#[from] Error),
    /// A core error on a given line of an input file.
    #[error("line {line}: {source}")]
    Line {
        #[allow(missing_docs)]
        line: usize,
        #[allow(missing_docs)]
        source: Error,
    },
    /// A file that could not be read.
    #[error("cannot read {path}: {source}")]
    Io {
        #[allow(missing_docs)]
        path: String,
        #[allow(missing_docs)]
        source: std::io::Error,
    },
}

impl CliError {
    /// The process exit code for this error.
    pub fn exit_code(&self) -> i32 {
        let core = match self {
            CliError::Core(e) | CliError::Line { source: e, .. } => e,
            CliError::Io { .. } => return EXIT_SEMANTIC,
        };
        match core {
            Error::Syntax { .. } | Error::InvalidAlphabet(_) => EXIT_SYNTAX,
            _ => EXIT_SEMANTIC,
        }
    }
}

/// Result of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    /// Exit code.
    pub code: i32,
    /// Text for standard output.
    pub stdout: String,
    /// Text for standard error.
    pub stderr: String,
}

struct Context {
    alphabet: Alphabet,
    mode: WordMode,
    bound: usize,
}

impl Context {
    fn expr(&self, text: &str) -> Result<RackElement, CliError> {
        Ok(RackExpr::parse(&self.alphabet, self.mode, text)?.evaluate(self.mode)?)
    }

    fn list(&self, text: &str) -> Result<Vec<RackElement>, CliError> {
        Ok(parse_element_list(&self.alphabet, self.mode, text)?)
    }

    fn show(&self, e: &RackElement) -> String {
        e.display(&self.alphabet).to_string()
    }

    fn elements(
        &self,
        inline: Option<&str>,
        file: Option<&PathBuf>,
    ) -> Result<Vec<RackElement>, CliError> {
        match (inline, file) {
            (Some(text), _) => self.list(text),
            (None, Some(path)) => files::read_elements(&self.alphabet, self.mode, path),
            (None, None) => Ok(Vec::new()),
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Output {
                    code: EXIT_SYNTAX,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Output {
                    code: 0,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    match execute(&cli) {
        Ok((code, stdout)) => Output {
            code,
            stdout,
            stderr: String::new(),
        },
        Err(e) => Output {
            code: e.exit_code(),
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

/// Runs a parsed command, returning the exit code and standard output.
pub fn execute(cli: &Cli) -> Result<(i32, String), CliError> {
    let alphabet = Alphabet::new(cli.alphabet.split(',').map(str::trim))?;
    let cx = Context {
        alphabet,
        mode: cli.mode,
        bound: usize::from(cli.bound),
    };
    let ok = |text: String| Ok((0, text));
    match &cli.command {
        Command::Eval { expr } => ok(format!("{}\n", cx.show(&cx.expr(expr)?))),
        Command::Eq { left, right } => {
            let same = cx.expr(left)? == cx.expr(right)?;
            ok(format!("{}\n", if same { "equal" } else { "distinct" }))
        }
        Command::Canon { expr } => {
            let (n, class) = cx.expr(expr)?.decompose();
            ok(format!("n={n}, class={}\n", class.display(&cx.alphabet)))
        }
        Command::Member { expr, gens } => {
            let e = cx.expr(expr)?;
            let gens = cx.list(gens)?;
            Ok(match rack_member(&e, &gens, cx.bound)? {
                MembershipAnswer::Member(w) => {
                    (0, format!("member: {}\n", w.display(&cx.alphabet)))
                }
                MembershipAnswer::NonMember(NonMemberReason::BaseNotGenerated(g)) => (
                    0,
                    format!(
                        "non-member: no generator has base {}\n",
                        cx.alphabet.name(g)
                    ),
                ),
                MembershipAnswer::NonMember(NonMemberReason::ClosureSaturated { size }) => (
                    0,
                    format!("non-member: outside the complete subquandle of size {size}\n"),
                ),
                MembershipAnswer::Unknown { bound } => (
                    EXIT_UNKNOWN,
                    format!("unknown: not reached within length bound {bound}\n"),
                ),
            })
        }
        Command::Closure { gens } => {
            let set = closure(&cx.list(gens)?, cx.bound)?;
            let mut keyed: Vec<_> = set
                .elements
                .iter()
                .map(|e| {
                    let (n, class) = e.decompose();
                    ((class, n), e)
                })
                .collect();
            keyed.sort_by(|a, b| a.0.cmp(&b.0));
            let mut out = String::new();
            for (_, e) in keyed {
                out.push_str(&cx.show(e));
                out.push('\n');
            }
            ok(out)
        }
        Command::BasisLift { gens, file } => {
            let classes: Vec<_> = cx
                .elements(gens.as_deref(), file.as_ref())?
                .iter()
                .map(RackElement::project)
                .collect();
            let basis = lift_basis(&classes)?;
            ok(files::format_elements(&cx.alphabet, basis.elements()))
        }
        Command::Express {
            expr,
            basis,
            basis_file,
        } => {
            let e = cx.expr(expr)?;
            let basis = Basis::new(cx.elements(basis.as_deref(), basis_file.as_ref())?)?;
            Ok(match express_over_basis(&e, &basis, cx.bound)? {
                Expressed::Found(nf) => {
                    (0, format!("{}\n", nf.to_expr(&basis).display(&cx.alphabet)))
                }
                Expressed::NotInSpan => (0, "not in span\n".to_string()),
                Expressed::Unknown(SearchLimit::Depth) => (
                    EXIT_UNKNOWN,
                    format!("unknown: no normal form within depth {}\n", cx.bound),
                ),
                Expressed::Unknown(SearchLimit::Budget) => (
                    EXIT_UNKNOWN,
                    "unknown: search budget exhausted\n".to_string(),
                ),
            })
        }
        Command::AxiomsCheck {
            samples,
            seed,
            max_len,
        } => {
            let mut rng = ChaCha8Rng::seed_from_u64(*seed);
            let k = cx.alphabet.len();
            let mut draw = || sample::element(&mut rng, k, *max_len, cx.mode);
            let triples: Vec<_> = (0..*samples).map(|_| (draw(), draw(), draw())).collect();
            let report = check_axioms(&triples)?;
            let Some(v) = report.violations.first() else {
                return ok("ok\n".to_string());
            };
            let (x, y, z) = &triples[v.index];
            Ok((
                EXIT_SEMANTIC,
                format!(
                    "counterexample: {} x={} y={} z={}: {} != {}\n",
                    v.law.name(),
                    cx.show(x),
                    cx.show(y),
                    cx.show(z),
                    cx.show(&v.left),
                    cx.show(&v.right)
                ),
            ))
        }
    }
}
