use clap::error::ErrorKind;
use clap::{Parser, Subcommand};

use orthostep_cli::commands::{self, CmdOutput};
use orthostep_cli::output::Format;

fn parse_period(s: &str) -> Result<u64, String> {
    let v: u64 = s.parse().map_err(|_| format!("'{s}' is not an integer"))?;
    if v == 0 {
        return Err("periods must be positive".into());
    }
    Ok(v)
}

#[derive(Parser)]
#[command(
    name = "orthostep",
    version,
    about = "Exact orthogonal step functions for integer period tuples"
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Build the orthogonal step profile of 1 to 4 periods
    Compute {
        #[arg(required = true, num_args = 1..=4, value_parser = parse_period)]
        periods: Vec<u64>,
        /// Output format
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Construction strategy: product, chain or oracle
        #[arg(long, default_value = "product")]
        strategy: String,
        /// Oracle scan bound in original units (oracle strategy only)
        #[arg(long)]
        lmax: Option<u64>,
    },
    /// Predict the sign class of the three-period profile from gcds alone
    Predict {
        #[arg(required = true, num_args = 3, value_parser = parse_period)]
        periods: Vec<u64>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Build a profile and cross-check it against the brute-force oracle
    Verify {
        #[arg(required = true, num_args = 2..=4, value_parser = parse_period)]
        periods: Vec<u64>,
        /// Oracle scan bound in original units (default: sum of the periods)
        #[arg(long)]
        lmax: Option<u64>,
        /// Builder-side strategy: product or chain
        #[arg(long, default_value = "product")]
        strategy: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run the brute-force minimal-length nullspace search on its own
    Oracle {
        #[arg(required = true, num_args = 1..=4, value_parser = parse_period)]
        periods: Vec<u64>,
        /// Scan bound in original units (default: sum of the periods)
        #[arg(long)]
        lmax: Option<u64>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Classify every tuple with 2 <= Ti <= bound, deduplicated up to
    /// permutation and common scaling
    Scan {
        /// Tuple arity: 3 or 4
        #[arg(long)]
        n: u64,
        /// Upper bound on each period (caps: 60 for n=3, 24 for n=4)
        #[arg(long)]
        bound: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Build the sign-changing family (abc, abd, acd, bcd) from pairwise
    /// coprime 1 < a < b < c < d
    Family {
        #[arg(required = true, num_args = 4)]
        parameters: Vec<u64>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

fn run(cmd: Cmd) -> Result<CmdOutput, orthostep::Error> {
    match cmd {
        Cmd::Compute {
            periods,
            format,
            strategy,
            lmax,
        } => commands::cmd_compute(&periods, format, &strategy, lmax),
        Cmd::Predict { periods, format } => commands::cmd_predict(&periods, format),
        Cmd::Verify {
            periods,
            lmax,
            strategy,
            format,
        } => commands::cmd_verify(&periods, format, &strategy, lmax),
        Cmd::Oracle {
            periods,
            lmax,
            format,
        } => commands::cmd_oracle(&periods, format, lmax),
        Cmd::Scan { n, bound, format } => commands::cmd_scan(n, bound, format),
        Cmd::Family { parameters, format } => commands::cmd_family(&parameters, format),
    }
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => commands::EXIT_OK,
                _ => commands::EXIT_USAGE,
            };
            let _ = err.print();
            std::process::exit(code);
        }
    };
    match run(cli.command) {
        Ok(output) => {
            print!("{}", output.stdout);
            std::process::exit(output.exit);
        }
        Err(err) => {
            eprintln!("error: {err}");
            std::process::exit(commands::exit_code(&err));
        }
    }
}
