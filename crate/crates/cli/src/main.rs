//! `lalg`: command-line workbench for finite pre-L-algebras and L-algebras.

mod commands;
mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand};
use lalg_core::suite::MAX_ORDER_ENV;
use lalg_core::Kind;

use commands::{CliError, Output};

#[derive(Debug, Parser)]
#[command(name = "lalg", version, about = "Finite pre-L-algebras and L-algebras")]
struct Cli {
    /// Print human-readable text instead of JSON.
    #[arg(long, global = true)]
    pretty: bool,

    /// Order bound for exhaustive suites (1 to 5, default 4).
    #[arg(long, global = true, env = MAX_ORDER_ENV)]
    max_order: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Input {
    /// Algebra document (JSON); `-` reads standard input.
    file: PathBuf,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check the defining laws.
    Check {
        #[command(flatten)]
        input: Input,
        /// Kind to check against; defaults to the document's `kind`, else `l`.
        #[arg(long)]
        kind: Option<Kind>,
    },
    /// List all ideals, or the ideal generated by a set.
    Ideals {
        #[command(flatten)]
        input: Input,
        /// Generators, e.g. `x,1`.
        #[arg(long)]
        closure: Option<String>,
    },
    /// List all congruences.
    Congruences {
        #[command(flatten)]
        input: Input,
    },
    /// Quotient by an ideal's congruence or by an explicit congruence.
    #[command(group(ArgGroup::new("by").required(true).args(["ideal", "congruence"])))]
    Quotient {
        #[command(flatten)]
        input: Input,
        /// Ideal `I`; the quotient is by `x ∼ y ⇔ x·y, y·x ∈ I`.
        #[arg(long)]
        ideal: Option<String>,
        /// Class label per element, e.g. `0,1,1,0`.
        #[arg(long)]
        congruence: Option<String>,
    },
    /// The universal L-algebra quotient.
    Reflect {
        #[command(flatten)]
        input: Input,
    },
    /// Verify the laws of the ideal/congruence correspondence.
    Galois {
        #[command(flatten)]
        input: Input,
    },
    /// Ideal or congruence lattice.
    #[command(group(ArgGroup::new("which").required(true).args(["ideals", "congruences"])))]
    Lattice {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        ideals: bool,
        #[arg(long)]
        congruences: bool,
        /// Emit a Graphviz Hasse diagram.
        #[arg(long)]
        dot: bool,
    },
    /// Commutator of two ideals.
    Commutator {
        #[command(flatten)]
        input: Input,
        #[arg(short = 'i', long = "left")]
        i: String,
        #[arg(short = 'j', long = "right")]
        j: String,
    },
    /// Prime spectrum with its topology.
    Spectrum {
        #[command(flatten)]
        input: Input,
        /// Emit the specialization order as Graphviz.
        #[arg(long)]
        dot: bool,
    },
    /// Categorical properties: permutability, terms, cokernels.
    CatCheck {
        #[command(flatten)]
        input: Input,
        /// Every check (the default when no check is selected).
        #[arg(long)]
        all: bool,
        /// Congruence permutability.
        #[arg(long)]
        permutability: bool,
        /// Permutability at the unit.
        #[arg(long)]
        at_one: bool,
        /// Every projection onto an L-algebra quotient is a cokernel.
        #[arg(long)]
        cokernel: bool,
        /// Subtractive terms and 1-regularity.
        #[arg(long)]
        terms: bool,
    },
    /// Enumerate algebras of one order up to isomorphism.
    Enumerate {
        #[arg(short = 'n', long)]
        order: usize,
        #[arg(long)]
        kind: Kind,
        /// Directory for one document per class plus `manifest.json`.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Reproduce every worked example and the structural laws.
    PaperSuite {
        /// Directory holding table1.json, table2.json and two_element.json.
        #[arg(long)]
        fixtures: Option<PathBuf>,
    },
}

fn run(cli: Cli) -> Result<Output, CliError> {
    use commands as c;
    match cli.command {
        Command::Check { input, kind } => c::check(&c::load(&input.file)?, kind),
        Command::Ideals { input, closure } => c::ideals(&c::load(&input.file)?, closure.as_deref()),
        Command::Congruences { input } => c::congruences(&c::load(&input.file)?),
        Command::Quotient {
            input,
            ideal,
            congruence,
        } => c::quotient(
            &c::load(&input.file)?,
            ideal.as_deref(),
            congruence.as_deref(),
        ),
        Command::Reflect { input } => c::reflect(&c::load(&input.file)?),
        Command::Galois { input } => c::galois(&c::load(&input.file)?),
        Command::Lattice {
            input, ideals, dot, ..
        } => c::lattice(&c::load(&input.file)?, ideals, dot),
        Command::Commutator { input, i, j } => c::commutator(&c::load(&input.file)?, &i, &j),
        Command::Spectrum { input, dot } => c::spectrum(&c::load(&input.file)?, dot),
        Command::CatCheck {
            input,
            all,
            permutability,
            at_one,
            cokernel,
            terms,
        } => {
            let none = !(permutability || at_one || cokernel || terms);
            let sel = c::CatSelection {
                permutability: all || none || permutability,
                at_one: all || none || at_one,
                cokernel,
                cokernel_if_l: all || none,
                terms: all || none || terms,
            };
            c::cat_check(&c::load(&input.file)?, sel)
        }
        Command::Enumerate { order, kind, out } => c::enumerate(order, kind, out.as_deref()),
        Command::PaperSuite { fixtures } => c::paper_suite(cli.max_order, fixtures),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let pretty = cli.pretty;
    match run(cli) {
        Ok(out) => out.emit(pretty),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
