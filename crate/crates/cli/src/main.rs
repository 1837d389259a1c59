//! `ncs`: key generation, encryption, key exchange, attacks and growth
//! measurement over file-based platforms.
//!
//! Exit codes: 0 success, 1 I/O failure, 2 malformed input, 3 retry budget
//! exhausted, 4 ciphertext rejected, 5 search budget exhausted.

mod commands;
mod failure;
mod files;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::failure::Failure;

#[derive(Parser, Debug)]
#[command(name = "ncs", version, about = "Conjugacy-based encryption toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Generate a key pair into PREFIX.pub and PREFIX.sec.
    Keygen(KeygenArgs),
    /// Encrypt a message file under a public key.
    Encrypt(EncryptArgs),
    /// Decrypt a ciphertext; prints the message or `reject`.
    Decrypt(DecryptArgs),
    /// Run a full key exchange in-process and write its transcript.
    Exchange(ExchangeArgs),
    /// Recover a secret from a public key by brute-force search.
    Attack(AttackArgs),
    /// Tabulate ball sizes in the Cayley graph.
    Growth(GrowthArgs),
    /// Time group operations on seeded random inputs.
    Bench(BenchArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Scheme {
    Kk06,
    Pcke,
    Ccs,
    Ncs,
}

#[derive(Args, Debug)]
pub struct Common {
    /// Platform file (`ccs-params` file for the classical scheme).
    #[arg(long)]
    pub platform: PathBuf,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
}

#[derive(Args, Debug)]
pub struct SearchArgs {
    /// Longest conjugator word tried.
    #[arg(long, default_value_t = 8)]
    pub budget_len: usize,
    /// Most distinct elements visited per search.
    #[arg(long, default_value_t = 1_000_000)]
    pub budget_states: usize,
    /// Largest exponent tried by the power-conjugacy attack.
    #[arg(long, default_value_t = 8)]
    pub budget_power: u64,
}

#[derive(Args, Debug)]
pub struct KeygenArgs {
    #[command(flatten)]
    pub common: Common,
    #[arg(long, value_enum)]
    pub scheme: Scheme,
    /// Output prefix.
    #[arg(long)]
    pub out: PathBuf,
    /// Base element `g` as a word (power-conjugacy scheme).
    #[arg(long)]
    pub element: Option<String>,
    /// Secret exponent `n` (power-conjugacy scheme).
    #[arg(long, default_value_t = 1)]
    pub n: u64,
}

#[derive(Args, Debug)]
pub struct EncryptArgs {
    #[command(flatten)]
    pub common: Common,
    #[arg(long, value_enum)]
    pub scheme: Scheme,
    /// Public key file.
    #[arg(long)]
    pub key: PathBuf,
    /// Message file.
    #[arg(long, conflicts_with = "message", required_unless_present = "message")]
    pub r#in: Option<PathBuf>,
    /// Message given inline: a word over the generators, or an integer for
    /// the classical scheme.
    #[arg(long)]
    pub message: Option<String>,
    #[arg(long)]
    pub out: PathBuf,
    /// Message exponent `m` (power-conjugacy scheme).
    #[arg(long, default_value_t = 1)]
    pub m: u64,
}

#[derive(Args, Debug)]
pub struct DecryptArgs {
    #[command(flatten)]
    pub common: Common,
    #[arg(long, value_enum)]
    pub scheme: Scheme,
    /// Secret key file.
    #[arg(long)]
    pub key: PathBuf,
    /// Ciphertext file.
    #[arg(long)]
    pub r#in: PathBuf,
    /// Also write the recovered message file here.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[command(flatten)]
    pub search: SearchArgs,
}

#[derive(Args, Debug)]
pub struct ExchangeArgs {
    #[command(flatten)]
    pub common: Common,
    #[arg(long, value_enum)]
    pub scheme: Scheme,
    #[arg(long)]
    pub out: PathBuf,
    /// Base element `g` as a word (power-conjugacy scheme).
    #[arg(long)]
    pub element: Option<String>,
    #[arg(long, default_value_t = 1)]
    pub n: u64,
    #[arg(long, default_value_t = 1)]
    pub m: u64,
    #[command(flatten)]
    pub search: SearchArgs,
}

#[derive(Args, Debug)]
pub struct AttackArgs {
    #[command(flatten)]
    pub common: Common,
    #[arg(long, value_enum)]
    pub scheme: Scheme,
    /// Public key file under attack.
    #[arg(long)]
    pub key: PathBuf,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[command(flatten)]
    pub search: SearchArgs,
}

#[derive(Args, Debug)]
pub struct GrowthArgs {
    #[command(flatten)]
    pub common: Common,
    #[arg(long)]
    pub radius: usize,
    #[arg(long, default_value_t = 1_000_000)]
    pub budget_states: usize,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct BenchArgs {
    #[command(flatten)]
    pub common: Common,
    /// One of `mul`, `conj`, `collect`.
    #[arg(long, default_value = "mul")]
    pub op: String,
    #[arg(long, default_value_t = 1000)]
    pub trials: usize,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let result = match cli.command {
        Command::Keygen(a) => commands::keygen(&a),
        Command::Encrypt(a) => commands::encrypt(&a),
        Command::Decrypt(a) => commands::decrypt(&a),
        Command::Exchange(a) => commands::exchange(&a),
        Command::Attack(a) => commands::attack(&a),
        Command::Growth(a) => commands::growth(&a),
        Command::Bench(a) => commands::bench(&a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Reject) => {
            println!("reject");
            ExitCode::from(4)
        }
        Err(f) => {
            eprintln!("error: {f}");
            ExitCode::from(f.code())
        }
    }
}
