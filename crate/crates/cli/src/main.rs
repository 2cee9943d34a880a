//! `numsemi` command-line front end. Every subcommand prints either plain
//! text or, with `--json`, a single envelope `{command, inputs, result}`.
//!
//! Exit codes: 0 success, 1 a verification check failed, 2 a domain
//! precondition failed (gcd, pair validity, table cap), 3 a parse error.

mod commands;
mod output;

use std::process::ExitCode;

use clap::{Parser, Subcommand};

pub const MAX_BOUND_ENV: &str = "SEMIGROUP_MAX_BOUND";

#[derive(Debug, Parser)]
#[command(
    name = "numsemi",
    version,
    about = "Numerical semigroups, gap polynomials and Hilbert series"
)]
pub struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Frobenius number and genus of S(A).
    Frobenius {
        #[arg(required = true, allow_negative_numbers = true)]
        generators: Vec<i64>,
        /// Also list the gaps.
        #[arg(long)]
        gaps: bool,
        /// Print a representation of n, or report that n is a gap.
        #[arg(long, value_name = "N")]
        witness: Option<u64>,
    },
    /// List the gaps of S(A).
    Gaps {
        #[arg(required = true, allow_negative_numbers = true)]
        generators: Vec<i64>,
    },
    /// Gap polynomial f_A, g_A and the reciprocal of f_A.
    GapPoly {
        #[arg(required = true, allow_negative_numbers = true)]
        generators: Vec<i64>,
    },
    /// Run the polynomial, series and rank-nullity checks for a pair.
    Verify {
        #[arg(allow_negative_numbers = true)]
        a: Option<i64>,
        #[arg(allow_negative_numbers = true)]
        b: Option<i64>,
        /// Check every coprime pair 2 <= a < b <= B instead.
        #[arg(long, value_name = "B", conflicts_with_all = ["a", "b"])]
        sweep: Option<u64>,
    },
    /// Divide g by x^b - y^a and test kernel membership both ways.
    Divide {
        g: String,
        #[arg(allow_negative_numbers = true)]
        a: i64,
        #[arg(allow_negative_numbers = true)]
        b: i64,
    },
    /// Image of g under x -> t^a, y -> t^b and kernel membership.
    Kernel {
        g: String,
        #[arg(allow_negative_numbers = true)]
        a: i64,
        #[arg(allow_negative_numbers = true)]
        b: i64,
    },
    /// Expand a Hilbert series to order N.
    Hilbert {
        /// full_ring_degree, full_ring_frobenius, semigroup_ring, kernel or univariate.
        which: String,
        /// Use `-` when the series does not depend on the pair.
        a: String,
        b: String,
        order_pos: Option<usize>,
        #[arg(long = "order", value_name = "N")]
        order: Option<usize>,
    },
    /// Tabulate dim E_n = dim R_n + dim K_n.
    RankNullity {
        #[arg(allow_negative_numbers = true)]
        a: i64,
        #[arg(allow_negative_numbers = true)]
        b: i64,
        /// Largest n to tabulate; defaults to 3ab.
        #[arg(long, value_name = "N")]
        order: Option<u64>,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(3) } else { ExitCode::SUCCESS };
        }
    };
    let max_cells = match commands::max_cells_from_env() {
        Ok(v) => v,
        Err(e) => return e.report(),
    };
    match commands::run(&cli, max_cells) {
        Ok(out) => {
            print!("{}", out.render(cli.json));
            if out.all_passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => e.report(),
    }
}
