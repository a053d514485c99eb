use std::fmt::Display;
use std::process::ExitCode;

use asympoly::bases::{basis_polynomial, BasisId, BasisIndex};
use asympoly::combinat::Permutation;
use asympoly::expand::expand_element;
use asympoly::products::{conjecture_harness_reiner_shimozono, multiply};
use asympoly::tableaux::{enumerate_for_index, enumerate_for_permutation, ObjectKind};
use asympoly::verify::{run_suite, Suite};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

#[derive(Parser)]
#[command(name = "asympoly", version, about = "Polynomial bases, expansions and products")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Structured,
}

#[derive(Subcommand)]
enum Command {
    /// Print a basis element in canonical text form.
    Basis {
        #[arg(long)]
        id: BasisId,
        #[arg(long)]
        index: String,
        #[arg(long)]
        n: usize,
    },
    /// Expand a basis element in another basis.
    Expand {
        #[arg(long)]
        source: BasisId,
        #[arg(long)]
        index: String,
        #[arg(long)]
        target: BasisId,
        #[arg(long)]
        n: usize,
    },
    /// Structure constants of a product of two basis elements.
    Multiply {
        #[arg(long)]
        basis: BasisId,
        #[arg(long)]
        a: String,
        #[arg(long)]
        b: String,
        #[arg(long)]
        n: Option<usize>,
    },
    /// List combinatorial objects with their weights.
    Enumerate {
        #[arg(long)]
        object: ObjectKind,
        #[arg(long, conflicts_with = "index")]
        perm: Option<Permutation>,
        #[arg(long)]
        index: Option<String>,
        #[arg(long)]
        n: Option<usize>,
    },
    /// Run verification sweeps.
    Verify {
        #[arg(long, default_value = "all")]
        suite: Suite,
        #[arg(long, default_value_t = 3)]
        max_entry: u32,
        #[arg(long, default_value_t = 4)]
        max_len: usize,
    },
    /// Run a conjecture harness.
    Conjecture {
        #[arg(long)]
        name: ConjectureName,
        #[arg(long, default_value_t = 2)]
        max_entry: u32,
        #[arg(long, default_value_t = 3)]
        max_len: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ConjectureName {
    ReinerShimozono,
}

enum Failure {
    Usage(String),
    Verification,
}

impl From<asympoly::Error> for Failure {
    fn from(e: asympoly::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn emit<T: Serialize + Display>(format: Format, value: &T) -> Result<(), Failure> {
    match format {
        Format::Text => print!("{value}"),
        Format::Structured => {
            let json = serde_json::to_string_pretty(value).map_err(|e| Failure::Usage(e.to_string()))?;
            println!("{json}");
        }
    }
    Ok(())
}

fn verdict(ok: bool) -> Result<(), Failure> {
    if ok {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

#[derive(Serialize)]
struct Listing<T: Serialize> {
    items: Vec<T>,
}

impl<T: Serialize + Display> Display for Listing<T> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        self.items.iter().try_for_each(|x| write!(f, "{x}"))
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let format = cli.format;
    match cli.command {
        Command::Basis { id, index, n } => {
            let index = BasisIndex::parse(id, &index)?;
            let f = basis_polynomial(id, &index, n)?;
            match format {
                Format::Text => print!("{}", f.to_canonical_text()),
                Format::Structured => emit(format, &*f)?,
            }
            Ok(())
        }
        Command::Expand {
            source,
            index,
            target,
            n,
        } => {
            let index = BasisIndex::parse(source, &index)?;
            let e = expand_element(source, &index, target, n)?;
            emit(format, &e)?;
            verdict(e.is_match())
        }
        Command::Multiply { basis, a, b, n } => {
            let a = BasisIndex::parse(basis, &a)?;
            let b = BasisIndex::parse(basis, &b)?;
            let r = multiply(basis, &a, &b, n)?;
            emit(format, &r)?;
            verdict(r.is_match())
        }
        Command::Enumerate {
            object,
            perm,
            index,
            n,
        } => {
            let items = match (perm, index) {
                (Some(p), None) => enumerate_for_permutation(object, &p, n)?,
                (None, Some(i)) => enumerate_for_index(object, &i, n)?,
                _ => return Err(Failure::Usage("enumerate needs --perm or --index".into())),
            };
            let lines: Vec<String> = items.iter().map(|o| format!("{o}\n")).collect();
            match format {
                Format::Text => print!("{}", lines.concat()),
                Format::Structured => emit(format, &Listing { items })?,
            }
            Ok(())
        }
        Command::Verify {
            suite,
            max_entry,
            max_len,
        } => {
            let reports = run_suite(suite, max_entry, max_len);
            let ok = reports.iter().all(|r| r.is_ok());
            emit(format, &Listing { items: reports })?;
            if format == Format::Text {
                println!("{}", if ok { "OK" } else { "MISMATCH" });
            }
            verdict(ok)
        }
        Command::Conjecture {
            name: ConjectureName::ReinerShimozono,
            max_entry,
            max_len,
        } => {
            let r = conjecture_harness_reiner_shimozono(max_entry, max_len)?;
            emit(format, &r)?;
            verdict(r.holds())
        }
    }
}

fn configure_threads() -> Result<(), Failure> {
    let Ok(value) = std::env::var("ASYMPOLY_THREADS") else {
        return Ok(());
    };
    let threads: usize = value
        .parse()
        .ok()
        .filter(|&t| t > 0)
        .ok_or_else(|| Failure::Usage(format!("ASYMPOLY_THREADS must be a positive integer, got {value:?}")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| Failure::Usage(e.to_string()))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let text = e.to_string();
            let line = text.lines().next().unwrap_or("invalid arguments");
            eprintln!("{line}");
            return ExitCode::from(2);
        }
    };
    match configure_threads().and_then(|()| run(cli)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
