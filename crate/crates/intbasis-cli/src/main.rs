use clap::{Parser, Subcommand, ValueEnum};
use intbasis_cli::{parse_ring, run, Command, Format, Job};
use std::process::ExitCode;

#[derive(Parser, Debug)]
#[command(name = "intbasis", version, about = "Triangular integral bases and ideal bases over Z and F_q[t]")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
    /// Base ring: z or fq[t]
    #[arg(long, global = true, default_value = "z")]
    ring: String,
    /// Field size for fq[t] (a prime)
    #[arg(long, global = true)]
    q: Option<u64>,
    /// Defining polynomial, or a file containing it
    #[arg(short = 'f', long = "poly", global = true)]
    poly: Option<String>,
    /// A prime (repeatable): the primes of the index, or the prime for p-basis and om-show
    #[arg(long = "prime", global = true)]
    primes: Vec<String>,
    /// Squarefree factor of disc(f) with its exponent, as m,e
    #[arg(long = "delta-factor", global = true)]
    delta_factors: Vec<String>,
    /// Squarefree factor of the index with its exponent, as m,e
    #[arg(long = "d-factor", global = true)]
    d_factors: Vec<String>,
    /// Prime ideal exponent, as p:ordinal:exp (ideal-basis)
    #[arg(long = "ideal", global = true, allow_hyphen_values = true)]
    ideal: Vec<String>,
    #[arg(long, global = true, value_enum, default_value_t = OutFormat::Text)]
    format: OutFormat,
    /// Re-check the result with independent oracles
    #[arg(long, global = true)]
    certify: bool,
    /// Seed for randomized certification checks
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Worker threads for per-prime work
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
}

#[derive(Subcommand, Debug, Clone, Copy)]
enum Cmd {
    /// Triangular integral basis of the maximal order
    IntegralBasis,
    /// Reduced local basis at one prime
    PBasis,
    /// Basis of a fractional ideal given by prime-ideal exponents
    IdealBasis,
    /// OM representation, frames and invariants at one prime
    OmShow,
}

#[derive(ValueEnum, Debug, Clone, Copy)]
enum OutFormat {
    Json,
    Text,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = (|| {
        let ring = parse_ring(&cli.ring, cli.q)?;
        let poly = cli.poly.clone().ok_or_else(|| intbasis::Error::Input("missing -f <polynomial>".into()))?;
        let job = Job {
            command: match cli.command {
                Cmd::IntegralBasis => Command::IntegralBasis,
                Cmd::PBasis => Command::PBasis,
                Cmd::IdealBasis => Command::IdealBasis,
                Cmd::OmShow => Command::OmShow,
            },
            ring,
            poly,
            primes: cli.primes.clone(),
            delta_factors: cli.delta_factors.clone(),
            d_factors: cli.d_factors.clone(),
            ideal: cli.ideal.clone(),
            format: match cli.format {
                OutFormat::Json => Format::Json,
                OutFormat::Text => Format::Text,
            },
            certify: cli.certify,
            seed: cli.seed,
            jobs: cli.jobs,
        };
        run(&job)
    })();
    match result {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
