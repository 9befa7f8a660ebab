//! Batch command-line surface. Every command prints one [`CommandResult`]
//! to stdout; `--out` writes the payload alone, which is byte-stable.

mod commands;

pub use commands::center_element;

use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::error::Error;

#[derive(Debug, Parser)]
#[command(name = "cartan-lift", version, about = "Exact Cartan-invariance operators for split sl_n")]
pub struct Cli {
    /// Write the payload JSON to this file.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build and certify the annihilating pair (H_part, J) of a center element.
    Annihilator {
        #[arg(long)]
        algebra: String,
        /// casimir | gelfand:<k> | solve:<d>
        #[arg(long)]
        center: String,
        /// formal, or comma-separated Gaussian rationals ν(h_1),…,ν(h_r)
        #[arg(long, default_value = "formal")]
        nu: String,
    },
    /// Span of the gradients P′(ν̃) of Harish-Chandra images.
    Span {
        #[arg(long)]
        algebra: String,
        /// Degrees of the Gelfand invariants used, e.g. 2,3
        #[arg(long, value_delimiter = ',')]
        degrees: Vec<usize>,
        #[arg(long)]
        nu: String,
    },
    /// Run one of the SL₂ model checks.
    ModelCheck {
        #[arg(long, value_enum)]
        check: ModelCheckKind,
        #[arg(long = "N", default_value_t = 16)]
        n: usize,
    },
    /// Check an element given as JSON.
    Verify {
        #[arg(long)]
        algebra: String,
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_enum)]
        what: VerifyKind,
    },
    /// Emit a center element as JSON.
    Element {
        #[arg(long)]
        algebra: String,
        #[arg(long)]
        center: String,
        #[arg(long, value_enum, default_value_t = OrderArg::Pr)]
        order: OrderArg,
    },
    /// Emit the algebra descriptor.
    Algebra {
        #[arg(long)]
        algebra: String,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModelCheckKind {
    ActOracle,
    DualDelta,
    Annihilation,
    #[value(name = "pX-span")]
    PxSpan,
    Fejer,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum VerifyKind {
    Central,
    HcInvariant,
    PrB,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OrderArg {
    Pr,
    B,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Ok,
    CertificationFailure,
    InvalidInput,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::CertificationFailure => 1,
            Status::InvalidInput => 2,
        }
    }

    fn from_flag(ok: bool) -> Self {
        if ok {
            Status::Ok
        } else {
            Status::CertificationFailure
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CommandResult {
    pub status: Status,
    pub payload: serde_json::Value,
    pub timing_ms: u64,
}

fn error_status(e: &Error) -> Status {
    match e {
        Error::CertificationFailure { .. }
        | Error::NotCentral { .. }
        | Error::InvarianceViolation(_)
        | Error::Uncertified => Status::CertificationFailure,
        _ => Status::InvalidInput,
    }
}

pub fn run(cli: &Cli) -> CommandResult {
    let start = Instant::now();
    let outcome = match &cli.command {
        Command::Annihilator { algebra, center, nu } => commands::annihilator(algebra, center, nu),
        Command::Span { algebra, degrees, nu } => commands::span(algebra, degrees, nu),
        Command::ModelCheck { check, n } => commands::model_check(*check, *n),
        Command::Verify { algebra, input, what } => commands::verify(algebra, input, *what),
        Command::Element { algebra, center, order } => commands::element(algebra, center, *order),
        Command::Algebra { algebra } => commands::algebra(algebra),
    };
    let (status, payload) = match outcome {
        Ok((ok, payload)) => (Status::from_flag(ok), payload),
        Err(e) => (
            error_status(&e),
            serde_json::json!({ "error": e.to_string() }),
        ),
    };
    let timing_ms = start.elapsed().as_millis() as u64;
    log::info!("{:?} finished with {:?} in {timing_ms} ms", cli.command, status);
    CommandResult {
        status,
        payload,
        timing_ms,
    }
}
