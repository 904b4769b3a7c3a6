//! `torusdeg`: construct, verify, and measure torus-polynomial
//! approximations of Boolean functions with exact rational arithmetic.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or input error,
//! 3 size cap exceeded.

mod error;
mod io;
mod run;
mod sweep;

use clap::{Parser, Subcommand};
use std::path::PathBuf;

#[derive(Parser)]
#[command(name = "torusdeg", version, about)]
struct Cli {
    #[command(subcommand)]
    cmd: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a symmetric approximator of the weight-w indicator
    ConstructDelta {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        w: usize,
        /// error budget as an exact rational, e.g. 1/4
        #[arg(long)]
        eps: String,
        /// write the polynomial as canonical JSON
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Emit the degree-(2k-1) modulus-amplifying polynomial A_k
    Amplify {
        #[arg(long)]
        k: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Lift a {0,1}-valued polynomial over F_p to a torus polynomial
    Lift {
        /// field polynomial JSON file
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value = "1/2")]
        alpha: String,
        #[arg(long)]
        eps: String,
        /// apply F -> F^(p-1) first to force {0,1} range
        #[arg(long)]
        force_range: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Compose a distribution over field polynomials into one approximator
    Compose {
        /// distribution JSON file
        #[arg(long)]
        input: PathBuf,
        /// target Boolean function JSON file
        #[arg(long)]
        function: PathBuf,
        #[arg(long)]
        eps: String,
        /// sample count; default ceil(4n / eps^2)
        #[arg(long)]
        m: Option<usize>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 16)]
        attempts: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Truncate coefficients to t dyadic digits, producing a nonclassical
    /// polynomial
    RoundNonclassical {
        /// multilinear polynomial JSON file
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        t: u32,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Divide a certified integer polynomial by 2^(k+1) on the torus
    AccLift {
        /// certificate JSON file
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Derive a weight-w indicator approximator from a majority approximator
    ReduceMajority {
        /// symmetric polynomial over 2n+1 variables approximating majority
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        w: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Recompute the approximation error of a polynomial file
    Verify {
        #[arg(long)]
        poly: PathBuf,
        #[arg(long)]
        function: PathBuf,
        #[arg(long, default_value = "1/2")]
        alpha: String,
        /// exit 1 if the recomputed error exceeds this bound
        #[arg(long)]
        eps: Option<String>,
    },
    /// Exact minimal approximation degree on a small instance
    Degree {
        #[arg(long)]
        function: PathBuf,
        /// `symmetric` or `multilinear`
        #[arg(long, default_value = "symmetric")]
        basis: String,
        #[arg(long, default_value = "1/2")]
        alpha: String,
        #[arg(long)]
        eps: String,
        /// largest degree to try; defaults to the basis cap
        #[arg(long)]
        d_max: Option<usize>,
        /// override the variable-count cap
        #[arg(long)]
        max_n: Option<usize>,
        /// override the degree cap
        #[arg(long)]
        max_d: Option<usize>,
        /// write the degree certificate as JSON
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Exact-integer replay of the symmetric counting lower bound
    CountingBound {
        #[arg(long)]
        n: u64,
    },
    /// Run the delta construction over a parameter grid and tabulate
    /// re-verified errors
    Sweep {
        /// comma-separated variable counts, e.g. 8,16,32
        #[arg(long)]
        n_list: String,
        /// comma-separated weights; default all weights 0..=n
        #[arg(long)]
        w_list: Option<String>,
        /// comma-separated rationals, e.g. 1/2,1/4
        #[arg(long)]
        eps_list: String,
        /// also compute exact oracle degrees where caps allow
        #[arg(long)]
        oracle: bool,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out_csv: Option<PathBuf>,
        #[arg(long)]
        out_json: Option<PathBuf>,
    },
}

fn dispatch(cmd: Command) -> error::Result<()> {
    match cmd {
        Command::ConstructDelta { n, w, eps, out } => run::construct_delta(n, w, &eps, &out),
        Command::Amplify { k, out } => run::amplify(k, &out),
        Command::Lift { input, alpha, eps, force_range, out } => {
            run::lift(&input, &alpha, &eps, force_range, &out)
        }
        Command::Compose { input, function, eps, m, seed, attempts, out } => {
            run::compose(&input, &function, &eps, m, seed, attempts, &out)
        }
        Command::RoundNonclassical { input, t, out } => run::round_nonclassical(&input, t, &out),
        Command::AccLift { input, out } => run::acc_lift_cmd(&input, &out),
        Command::ReduceMajority { input, w, out } => run::reduce_majority(&input, w, &out),
        Command::Verify { poly, function, alpha, eps } => {
            run::verify(&poly, &function, &alpha, &eps)
        }
        Command::Degree { function, basis, alpha, eps, d_max, max_n, max_d, out } => {
            run::degree(&function, &basis, &alpha, &eps, d_max, max_n, max_d, &out)
        }
        Command::CountingBound { n } => run::counting_bound(n),
        Command::Sweep { n_list, w_list, eps_list, oracle, seed, out_csv, out_json } => {
            sweep::sweep(&n_list, &w_list, &eps_list, oracle, seed, &out_csv, &out_json)
        }
    }
}

fn main() {
    let cli = Cli::parse(); // clap exits with code 2 on usage errors
    if let Err(e) = dispatch(cli.cmd) {
        eprintln!("error: {e}");
        std::process::exit(e.exit_code());
    }
}
