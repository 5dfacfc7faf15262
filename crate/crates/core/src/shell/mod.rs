//! Command-line plumbing: pairing files, the expression language, run
//! configuration and the verification report.

pub mod expr;
pub mod pairing;
mod verify;

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

pub use expr::{eval_str, evaluate, parse_expression, Expr, Func, Node, Value};
pub use pairing::{load_alphabet, parse_pairing_file};
pub use verify::{run_verification_suite, CheckLine, Status, VerificationReport};

use crate::error::{Error, Result};
use crate::kernel::{format_coeff, Alphabet, Coeff};

/// Where the active alphabet comes from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlphabetSource {
    Stuffle,
    Zero,
    File(PathBuf),
}

impl FromStr for AlphabetSource {
    type Err = std::convert::Infallible;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Ok(match s {
            "builtin:stuffle" => AlphabetSource::Stuffle,
            "builtin:zero" => AlphabetSource::Zero,
            path => AlphabetSource::File(path.into()),
        })
    }
}

impl fmt::Display for AlphabetSource {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlphabetSource::Stuffle => write!(f, "builtin:stuffle"),
            AlphabetSource::Zero => write!(f, "builtin:zero"),
            AlphabetSource::File(p) => write!(f, "{}", p.display()),
        }
    }
}

impl AlphabetSource {
    pub fn load(&self) -> Result<Alphabet> {
        match self {
            AlphabetSource::Stuffle => Ok(Alphabet::stuffle()),
            AlphabetSource::Zero => Ok(Alphabet::zero_bracket()),
            AlphabetSource::File(path) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| Error::Config(format!("cannot read pairing file {}: {e}", path.display())))?;
                load_alphabet(&text)
            }
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum OutputFormat {
    #[default]
    Canonical,
    Tabular,
    Quiet,
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "canonical" => Ok(OutputFormat::Canonical),
            "tabular" => Ok(OutputFormat::Tabular),
            "quiet" => Ok(OutputFormat::Quiet),
            other => Err(Error::Config(format!("unknown output format `{other}`"))),
        }
    }
}

/// Exact rational from `p`, `-p` or `p/q`.
pub fn parse_lambda(text: &str) -> Result<Coeff> {
    Coeff::from_str(text.trim()).map_err(|e| Error::Config(format!("bad rational `{text}`: {e}")))
}

#[derive(Clone, Debug, PartialEq)]
pub struct RunConfig {
    pub alphabet: AlphabetSource,
    pub lambda: Coeff,
    pub max_degree: u32,
    pub max_length: usize,
    pub seed: u64,
    pub format: OutputFormat,
    /// Adds a row that checks a weight-0 operator against the configured λ.
    pub negative_control: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            alphabet: AlphabetSource::Stuffle,
            lambda: Coeff::from_integer(1.into()),
            max_degree: 5,
            max_length: 4,
            seed: 0,
            format: OutputFormat::Canonical,
            negative_control: false,
        }
    }
}

impl RunConfig {
    pub fn validate(&self) -> Result<()> {
        if self.max_degree == 0 || self.max_length == 0 {
            return Err(Error::Config("degree and length bounds must be positive".into()));
        }
        Ok(())
    }

    pub fn describe(&self) -> String {
        format!(
            "alphabet={} lambda={} max-degree={} max-length={} seed={}",
            self.alphabet,
            format_coeff(&self.lambda),
            self.max_degree,
            self.max_length,
            self.seed
        )
    }
}

/// Renders an evaluation result in the requested format.
pub fn render_value(value: &Value, format: OutputFormat) -> String {
    match format {
        OutputFormat::Quiet => String::new(),
        OutputFormat::Canonical => format!("{value}\n"),
        OutputFormat::Tabular => {
            let mut out = String::new();
            match value {
                Value::Element(e) => {
                    for (w, c) in e.iter() {
                        out += &format!("{}\t{w}\n", format_coeff(c));
                    }
                }
                Value::Tensor(t) => {
                    for ((u, v), c) in t.iter() {
                        out += &format!("{}\t{u}\t{v}\n", format_coeff(c));
                    }
                }
                other => out += &format!("{other}\n"),
            }
            out
        }
    }
}
