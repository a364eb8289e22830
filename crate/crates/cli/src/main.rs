//! `mtc`: command-line front end for mtc-core.
//!
//! Exit status is 0 when every requested check passes, 1 when a check fails
//! and 2 for usage errors (bad flags, unknown categories, malformed words).

mod output;

use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use mtc_core::cobordism::{self, ArityError, Evaluator};
use mtc_core::genus::{validate_fr, FrData, GenusEngine};
use mtc_core::source::load_category;
use mtc_core::verlinde::{genus_dim_bruteforce, genus_dim_formula, verify_reverse, verify_verlinde};
use mtc_core::{CategoryData, Error, Report, DEFAULT_TOL, INTEGER_TOL};

use output::{emit_report, Emit};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(name = "mtc", version, about = "Checks Verlinde-type identities on (pre)modular category data")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value = "text", global = true)]
    format: Format,
    /// Numerical tolerance (defaults to MTC_TOLERANCE, then 1e-9).
    #[arg(long, global = true)]
    tol: Option<f64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List builtin categories.
    List,
    /// Structural checks on category data, optionally F/R coherence too.
    Validate {
        category: String,
        /// Also check pentagon and hexagons with the builtin F/R tables.
        #[arg(long)]
        coherence: bool,
        /// F/R tables as JSON (implies --coherence).
        #[arg(long)]
        fr: Option<String>,
    },
    /// Verlinde formula and its reverse form.
    Verlinde { category: String },
    /// Dimension of the genus-g space with insertions, by formula and by fusion.
    Genus {
        category: String,
        #[arg(short, long)]
        g: u32,
        /// Comma-separated insertion labels.
        #[arg(short, long, value_delimiter = ',')]
        insertions: Vec<String>,
    },
    /// Evaluate a cobordism word.
    Eval {
        category: String,
        expr: String,
        /// Comma-separated input labels; prints the image instead of the matrix.
        #[arg(long, value_delimiter = ',')]
        apply: Option<Vec<String>>,
    },
    /// Exchange identities and both Frobenius structures.
    Props { category: String },
    /// Generalized Verlinde identities on genus-g handlebodies.
    Handlebody {
        category: String,
        #[arg(short, long)]
        g: usize,
        /// F/R tables as JSON; builtin tables otherwise.
        #[arg(long)]
        fr: Option<String>,
    },
}

/// Anything that should end the run with status 2.
#[derive(Debug)]
enum Usage {
    Core(Error),
    Message(String),
    Parse { text: String, err: Error },
}

impl From<Error> for Usage {
    fn from(e: Error) -> Self {
        Usage::Core(e)
    }
}

fn tolerance(flag: Option<f64>) -> Result<f64, Usage> {
    let tol = match flag {
        Some(t) => t,
        None => match std::env::var("MTC_TOLERANCE") {
            Ok(v) => v
                .trim()
                .parse()
                .map_err(|_| Usage::Message(format!("MTC_TOLERANCE is not a number: `{v}`")))?,
            Err(_) => DEFAULT_TOL,
        },
    };
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(Usage::Message(format!("tolerance must be positive, got {tol}")));
    }
    Ok(tol)
}

fn labels(cat: &CategoryData, names: &[String]) -> Result<Vec<usize>, Usage> {
    names
        .iter()
        .filter(|s| !s.trim().is_empty())
        .map(|n| {
            cat.label_index(n)
                .ok_or_else(|| Usage::Message(format!("`{n}` is not a label of {} (labels: {})", cat.name(), cat.labels().join(", "))))
        })
        .collect()
}

fn fr_data(cat: &CategoryData, path: Option<&str>) -> Result<FrData, Usage> {
    Ok(match path {
        Some(p) => FrData::from_json_file(cat, p)?,
        None => FrData::builtin(cat)?,
    })
}

fn run(cli: Cli) -> Result<bool, Usage> {
    let tol = tolerance(cli.tol)?;
    let out = Emit::new(cli.format);
    match cli.command {
        Command::List => {
            output::emit_list(&out);
            Ok(true)
        }
        Command::Validate { category, coherence, fr } => {
            let cat = load_category(&category)?;
            let mut rep = cat.validate(tol);
            if coherence || fr.is_some() {
                let data = fr_data(&cat, fr.as_deref())?;
                rep.extend(validate_fr(&cat, &data, tol)?);
            }
            let modular = cat.is_modular(tol);
            emit_report(&out, &format!("{} (rank {}, {})", cat.name(), cat.rank(), if modular { "modular" } else { "premodular" }), &rep);
            Ok(rep.passed())
        }
        Command::Verlinde { category } => {
            let cat = load_category(&category)?;
            let forward = verify_verlinde(&cat, tol);
            let reverse = verify_reverse(&cat, tol);
            output::emit_verlinde(&out, &cat, tol, &forward, &reverse);
            Ok(forward.passed() && reverse.passed())
        }
        Command::Genus { category, g, insertions } => {
            let cat = load_category(&category)?;
            let ins = labels(&cat, &insertions)?;
            let formula = genus_dim_formula(&cat, g, &ins, tol)?;
            let brute = genus_dim_bruteforce(&cat, g, &ins)?;
            let int_tol = INTEGER_TOL.max(tol);
            let residual = (formula - brute as f64).norm();
            let passed = residual < int_tol && (formula - formula.re.round()).norm() < int_tol;
            output::emit_genus(&out, &cat, g, &ins, formula, brute, residual, passed);
            Ok(passed)
        }
        Command::Eval { category, expr, apply } => {
            let cat = load_category(&category)?;
            let parsed = cobordism::parse(&expr).map_err(|e| Usage::Parse { text: expr.clone(), err: e.into() })?;
            let ev = Evaluator::new(&cat, tol);
            let map = ev.eval(&parsed).map_err(|e| Usage::Parse { text: expr.clone(), err: e })?;
            match apply {
                Some(names) => {
                    let input = labels(&cat, &names)?;
                    let image = map.apply_labels(&input)?;
                    output::emit_image(&out, &cat, &map, &input, image.as_slice());
                }
                None => output::emit_map(&out, &cat, &parsed.to_string(), &map),
            }
            Ok(true)
        }
        Command::Props { category } => {
            let cat = load_category(&category)?;
            let rep = cobordism::proposition_suite(&cat, tol)?;
            emit_report(&out, cat.name(), &rep);
            Ok(rep.passed())
        }
        Command::Handlebody { category, g, fr } => {
            let cat = load_category(&category)?;
            let data = fr_data(&cat, fr.as_deref())?;
            let engine = GenusEngine::new(&cat, &data)?;
            let mut rep = Report::new();
            if g == 1 {
                rep.extend(engine.verify_genus_one_reduction(tol)?);
            }
            rep.extend(engine.verify_handlebody_verlinde(g, tol)?);
            emit_report(&out, &format!("{} genus {g}", cat.name()), &rep);
            Ok(rep.passed())
        }
    }
}

fn report_usage(u: Usage) {
    match u {
        Usage::Core(e) => eprintln!("error: {e}"),
        Usage::Message(m) => eprintln!("error: {m}"),
        Usage::Parse { text, err } => {
            let pos = match &err {
                Error::Parse(p) => Some(p.pos),
                Error::Arity(ArityError::Compose { pos, .. }) => Some(*pos),
                _ => None,
            };
            eprintln!("error: {err}");
            if let Some(pos) = pos {
                let col = text.get(..pos).map_or(pos, |s| s.chars().count());
                eprintln!("  {text}");
                eprintln!("  {}^", " ".repeat(col));
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(u) => {
            report_usage(u);
            ExitCode::from(2)
        }
    }
}
