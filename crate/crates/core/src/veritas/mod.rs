//! Claim suites: each claim pairs an expected value with a computed one,
//! and suites are rows of a static registry rather than code paths.

mod context;
mod registry;
mod report;

pub use registry::{claim_table, ClaimDef};
pub use report::{render_table, write_report, Report};

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use serde_json::Value;
use thiserror::Error;

use crate::exec::{map_collect, ExecMode};
use context::Ctx;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum VeritasError {
    #[error("unknown suite `{0}`")]
    UnknownSuite(String),
    #[error("{0} exceeds the desk cap (pass --unsafe-cap to override)")]
    CapExceeded(String),
    #[error("io: {0}")]
    Io(String),
    #[error("{0}")]
    Computation(String),
}

/// Where an expected value comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Provenance {
    /// Stated in the reference text.
    Reference,
    /// Worked out from stated formulas.
    Derived,
    /// Immediate from definitions.
    Trivial,
}

#[derive(Clone, Debug, Serialize)]
pub struct ClaimResult {
    pub suite: String,
    pub id: String,
    pub anchor: String,
    pub inputs: String,
    pub expected: Value,
    pub provenance: Provenance,
    pub computed: Value,
    pub pass: bool,
    /// Left out of the JSON so reports stay byte-identical across runs.
    #[serde(skip)]
    pub runtime_ms: u128,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Hermitian { l: u64 },
    Quotient { l: u64, n: u64 },
    Suzuki { s: u32 },
    Ovoid { s: u32 },
    AllDesk,
}

/// The suites `all-desk` expands to.
pub const DESK_SUITES: &[Suite] = &[
    Suite::Hermitian { l: 2 },
    Suite::Hermitian { l: 3 },
    Suite::Hermitian { l: 4 },
    Suite::Hermitian { l: 5 },
    Suite::Quotient { l: 3, n: 2 },
    Suite::Quotient { l: 5, n: 2 },
    Suite::Quotient { l: 5, n: 3 },
    Suite::Suzuki { s: 1 },
    Suite::Suzuki { s: 2 },
    Suite::Ovoid { s: 1 },
    Suite::Ovoid { s: 2 },
];

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Suite::Hermitian { l } => write!(f, "hermitian {l}"),
            Suite::Quotient { l, n } => write!(f, "quotient {l} {n}"),
            Suite::Suzuki { s } => write!(f, "suzuki {s}"),
            Suite::Ovoid { s } => write!(f, "ovoid {s}"),
            Suite::AllDesk => write!(f, "all-desk"),
        }
    }
}

impl FromStr for Suite {
    type Err = VeritasError;

    /// Accepts `hermitian 3`, `hermitian:3`, `quotient 5 2`, `all-desk`.
    fn from_str(s: &str) -> Result<Suite, VeritasError> {
        let bad = || VeritasError::UnknownSuite(s.to_string());
        let parts: Vec<&str> = s.split(|c: char| c == ':' || c.is_whitespace()).filter(|p| !p.is_empty()).collect();
        let num = |i: usize| -> Result<u64, VeritasError> { parts.get(i).and_then(|p| p.parse().ok()).ok_or_else(bad) };
        let suite = match parts.first().copied() {
            Some("hermitian") if parts.len() == 2 => Suite::Hermitian { l: num(1)? },
            Some("quotient") if parts.len() == 3 => Suite::Quotient { l: num(1)?, n: num(2)? },
            Some("suzuki") if parts.len() == 2 => Suite::Suzuki { s: num(1)? as u32 },
            Some("ovoid") if parts.len() == 2 => Suite::Ovoid { s: num(1)? as u32 },
            Some("all-desk") if parts.len() == 1 => Suite::AllDesk,
            _ => return Err(bad()),
        };
        Ok(suite)
    }
}

impl Suite {
    /// Desk caps: `l <= 5`, `s <= 2`.
    pub fn check_cap(&self) -> Result<(), VeritasError> {
        match *self {
            Suite::Hermitian { l } | Suite::Quotient { l, .. } if l > 5 => Err(VeritasError::CapExceeded(format!("l = {l}"))),
            Suite::Suzuki { s } | Suite::Ovoid { s } if s > 2 => Err(VeritasError::CapExceeded(format!("s = {s}"))),
            _ => Ok(()),
        }
    }

    /// File-name friendly form.
    pub fn slug(&self) -> String {
        self.to_string().replace(' ', "-")
    }
}

#[derive(Clone, Copy, Debug, Default)]
pub struct SuiteOptions {
    pub unsafe_cap: bool,
    pub mode: ExecMode,
}

/// Runs every registry row that applies to `suite`, in registry order.
pub fn run_suite(suite: Suite, opts: &SuiteOptions) -> Result<Vec<ClaimResult>, VeritasError> {
    if suite == Suite::AllDesk {
        let mut out = Vec::new();
        for s in DESK_SUITES {
            out.extend(run_suite(*s, opts)?);
        }
        return Ok(out);
    }
    if !opts.unsafe_cap {
        suite.check_cap()?;
    }
    let ctx = Ctx::new(suite, opts.mode)?;
    let rows: Vec<&ClaimDef> = claim_table().iter().filter(|c| (c.applies)(&ctx)).collect();
    Ok(map_collect(opts.mode, &rows, |c| c.run(&ctx)))
}
