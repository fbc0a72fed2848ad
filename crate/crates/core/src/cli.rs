//! Command-line front end. Results go to the data stream only once a command
//! has fully succeeded; diagnostics go to the error stream.
//!
//! Exit status: 0 on success, 1 if any verification report fails or a
//! computation errors, 2 on usage errors (including non-dominant weights).

use std::ffi::OsString;
use std::io::Write;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::canonical::{b_matrix, canonical_element, format_aj};
use crate::error::Error;
use crate::gamma::gamma_map;
use crate::kclass::{aj_class, straighten, Basis, KClass};
use crate::laurent::LaurentPoly;
use crate::rootsys::{RootSystem, Weight};
use crate::verify::{dashboard, verify_mcgovern, VerificationReport};

/// Default verification bound on `⟨λ,2ρ^∨⟩`.
pub const DEFAULT_BOUND: i64 = 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Tsv,
}

/// Which class of the input weight `gamma` expands.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ClassKind {
    /// `C(λ)`
    Canonical,
    /// `AJ(λ)`
    Aj,
    /// `e^λ`
    E,
}

#[derive(Debug, Parser)]
#[command(name = "nilcone", version, about = "Canonical basis of the K-group of the nilpotent cone")]
pub struct CliConfig {
    /// Root system, e.g. A2, B2, G2.
    #[arg(long, global = true)]
    pub system: Option<String>,

    #[arg(long, global = true, value_enum, default_value = "json")]
    pub format: Format,

    /// Weight in fundamental-weight coordinates, e.g. "3,0".
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub weight: Option<Weight>,

    /// Largest ⟨μ,2ρ^∨⟩ retained by gamma [default: 4·⟨λ,2ρ^∨⟩].
    #[arg(long, global = true)]
    pub cutoff: Option<i64>,

    /// Largest ⟨λ,2ρ^∨⟩ swept by bmatrix and verify.
    #[arg(long, global = true, default_value_t = DEFAULT_BOUND)]
    pub bound: i64,

    /// Worker threads [default: all cores].
    #[arg(long, global = true)]
    pub threads: Option<usize>,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// C(λ) in the AJ and e bases.
    Canonical,
    /// b-polynomials over all dominant weights up to --bound, or below --weight.
    Bmatrix,
    /// Truncated Γ of C(λ), AJ(λ) or e^λ.
    Gamma {
        #[arg(long, value_enum, default_value = "canonical")]
        class: ClassKind,
    },
    /// Expands e^λ for an arbitrary weight in the dominant e-basis.
    Straighten,
    /// McGovern classes of all nilpotent orbits.
    Mcgovern,
    /// Every applicable verification check.
    Verify,
}

enum Failure {
    Usage(String),
    Compute(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::RootSystem(_) => Failure::Usage(e.to_string()),
            _ => Failure::Compute(e.to_string()),
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let config = match CliConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    run_config(&config, out, err)
}

pub fn run_config(config: &CliConfig, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let pool = match rayon::ThreadPoolBuilder::new()
        .num_threads(config.threads.unwrap_or(0))
        .build()
    {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return 2;
        }
    };
    let mut buf = Vec::new();
    let result = pool.install(|| execute(config, &mut buf));
    match result {
        Ok(all_passed) => {
            if out.write_all(&buf).and_then(|_| out.flush()).is_err() {
                return 1;
            }
            if all_passed {
                0
            } else {
                1
            }
        }
        Err(Failure::Usage(m)) => {
            let _ = writeln!(err, "error: {m}");
            2
        }
        Err(Failure::Compute(m)) => {
            let _ = writeln!(err, "error: {m}");
            1
        }
    }
}

fn required_weight(config: &CliConfig, rs: &RootSystem) -> Result<Weight, Failure> {
    let w = config
        .weight
        .clone()
        .ok_or_else(|| Failure::Usage("this command needs --weight".into()))?;
    rs.check_rank(&w).map_err(Error::from)?;
    Ok(w)
}

/// Writes the command's output to `buf`; returns whether every report passed.
fn execute(config: &CliConfig, buf: &mut Vec<u8>) -> Result<bool, Failure> {
    let system = config
        .system
        .as_deref()
        .ok_or_else(|| Failure::Usage("--system is required".into()))?;
    let rs = Arc::new(RootSystem::from_label(system).map_err(Error::from)?);
    let label = rs.label().to_string();
    let mut lines: Vec<String> = Vec::new();
    let mut all_passed = true;
    match &config.command {
        Command::Canonical => {
            let lambda = required_weight(config, &rs)?;
            let c = canonical_element(&rs, &lambda)?;
            lines.push(match config.format {
                Format::Tsv => format!("{}\t{}", format_aj(&rs, &c.aj_coords), c.format(Basis::E)),
                Format::Json => json!({
                    "system": label,
                    "lambda": lambda.coords(),
                    "aj": c.e_coords.to_json(Basis::AJ),
                    "e": c.e_coords.to_json(Basis::E),
                })
                .to_string(),
            });
        }
        Command::Bmatrix => {
            let weights = match &config.weight {
                Some(w) => rs.dominant_weights_below(w).map_err(Error::from)?,
                None => rs.dominant_weights_up_to(config.bound),
            };
            let m = b_matrix(&rs, &weights)?;
            match config.format {
                Format::Tsv => lines.push(m.to_tsv().trim_end().to_string()),
                Format::Json => lines.push(m.to_json(&label).to_string()),
            }
        }
        Command::Gamma { class } => {
            let lambda = required_weight(config, &rs)?;
            rs.check_dominant(&lambda).map_err(Error::from)?;
            let x = match class {
                ClassKind::Canonical => canonical_element(&rs, &lambda)?.e_coords,
                ClassKind::Aj => aj_class(&rs, &lambda)?,
                ClassKind::E => KClass::basis(&rs, &lambda, LaurentPoly::one())?,
            };
            let cutoff = config.cutoff.unwrap_or(4 * rs.height(&lambda));
            let g = gamma_map(&x, cutoff);
            lines.push(match config.format {
                Format::Tsv => g.to_string(),
                Format::Json => g.to_json().to_string(),
            });
        }
        Command::Straighten => {
            let lambda = required_weight(config, &rs)?;
            let x = straighten(&rs, &lambda)?;
            lines.push(match config.format {
                Format::Tsv => x.format(Basis::E),
                Format::Json => x.to_json(Basis::E).to_string(),
            });
        }
        Command::Mcgovern | Command::Verify => {
            let reports: Vec<VerificationReport> = if matches!(config.command, Command::Mcgovern) {
                rs.orbit_table().map_err(Error::from)?;
                verify_mcgovern(&rs)
            } else {
                dashboard(&rs, config.bound)
            };
            all_passed = reports.iter().all(VerificationReport::passed);
            if config.format == Format::Tsv {
                lines.push("check\tsystem\tstatus\tlambda\tdetail".into());
            }
            for r in &reports {
                lines.push(match config.format {
                    Format::Tsv => r.to_tsv(),
                    Format::Json => r.to_json().to_string(),
                });
            }
        }
    }
    for l in lines {
        buf.extend_from_slice(l.as_bytes());
        buf.push(b'\n');
    }
    Ok(all_passed)
}
