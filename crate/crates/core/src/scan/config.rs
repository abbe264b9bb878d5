use serde::{Deserialize, Serialize};
use std::path::PathBuf;
use std::str::FromStr;
use thiserror::Error;

pub const DEFAULT_GRID_N: usize = 256;

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("config: {0}")]
    Parse(#[from] toml::de::Error),
    #[error("axis `{axis}`: {message}")]
    Axis { axis: &'static str, message: String },
    #[error("missing required axis `{0}`")]
    Missing(&'static str),
    #[error("{0}")]
    Invalid(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OutputFormat {
    #[default]
    Csv,
    Json,
}

impl FromStr for OutputFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "csv" => Ok(OutputFormat::Csv),
            "json" => Ok(OutputFormat::Json),
            other => Err(format!("unknown format `{other}` (expected csv or json)")),
        }
    }
}

/// One axis of the grid, as written in a config file or on the command line.
///
/// Accepted spellings: a number (`3.0`), a list (`[1.0, 2.0]`), or a string
/// holding either a comma list (`"1,2,3"`), an inclusive linear range
/// `"from:to:count"`, or nothing (`""`, an empty axis).
#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(untagged)]
pub enum AxisSpec {
    Value(f64),
    List(Vec<f64>),
    Text(String),
}

impl AxisSpec {
    pub fn values(&self, axis: &'static str) -> Result<Vec<f64>, ConfigError> {
        let err = |message: String| ConfigError::Axis { axis, message };
        let mut v = match self {
            AxisSpec::Value(x) => vec![*x],
            AxisSpec::List(xs) => xs.clone(),
            AxisSpec::Text(s) => parse_axis_text(s).map_err(err)?,
        };
        if let Some(bad) = v.iter().find(|x| !x.is_finite()) {
            return Err(err(format!("non-finite value {bad}")));
        }
        v.sort_by(f64::total_cmp);
        v.dedup();
        Ok(v)
    }
}

fn parse_axis_text(s: &str) -> Result<Vec<f64>, String> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    let num = |t: &str| {
        t.trim()
            .parse::<f64>()
            .map_err(|e| format!("`{}`: {e}", t.trim()))
    };
    if s.contains(':') {
        let parts: Vec<&str> = s.split(':').collect();
        if parts.len() != 3 {
            return Err(format!("range `{s}` must look like from:to:count"));
        }
        let (from, to) = (num(parts[0])?, num(parts[1])?);
        let count: usize = parts[2]
            .trim()
            .parse()
            .map_err(|e| format!("count `{}`: {e}", parts[2].trim()))?;
        if count == 0 {
            return Err(format!("range `{s}` needs a resolution of at least 1"));
        }
        if count == 1 {
            return Ok(vec![from]);
        }
        let step = (to - from) / (count - 1) as f64;
        return Ok((0..count)
            .map(|i| if i + 1 == count { to } else { from + step * i as f64 })
            .collect());
    }
    s.split(',').map(num).collect()
}

/// Raw scan configuration; see [`ScanConfig::validate`].
#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScanConfig {
    pub lambda: Option<AxisSpec>,
    pub m: Option<AxisSpec>,
    pub q: Option<AxisSpec>,
    pub a: Option<AxisSpec>,
    #[serde(default = "default_grid_n")]
    pub grid_n: usize,
    pub out: Option<PathBuf>,
    #[serde(default)]
    pub format: OutputFormat,
    #[serde(default)]
    pub strict: bool,
    pub jobs: Option<usize>,
}

fn default_grid_n() -> usize {
    DEFAULT_GRID_N
}

impl ScanConfig {
    pub fn from_toml_str(s: &str) -> Result<Self, ConfigError> {
        Ok(toml::from_str(s)?)
    }

    /// Builds from a key-value table (file contents with flag overrides
    /// already merged in).
    pub fn from_table(table: toml::Table) -> Result<Self, ConfigError> {
        Ok(ScanConfig::deserialize(toml::Value::Table(table))?)
    }

    pub fn validate(&self) -> Result<ScanGrid, ConfigError> {
        let lambda = self
            .lambda
            .as_ref()
            .ok_or(ConfigError::Missing("lambda"))?
            .values("lambda")?;
        let m = self
            .m
            .as_ref()
            .ok_or(ConfigError::Missing("m"))?
            .values("m")?;
        let q = match &self.q {
            Some(s) => s.values("q")?,
            None => vec![0.0],
        };
        let a = match &self.a {
            Some(s) => s.values("a")?,
            None => vec![0.0],
        };
        let positive = |axis, v: &[f64]| match v.iter().find(|x| **x <= 0.0) {
            Some(x) => Err(ConfigError::Axis {
                axis,
                message: format!("values must be positive, got {x}"),
            }),
            None => Ok(()),
        };
        let non_negative = |axis, v: &[f64]| match v.iter().find(|x| **x < 0.0) {
            Some(x) => Err(ConfigError::Axis {
                axis,
                message: format!("values must be non-negative, got {x}"),
            }),
            None => Ok(()),
        };
        positive("lambda", &lambda)?;
        positive("m", &m)?;
        non_negative("q", &q)?;
        non_negative("a", &a)?;
        if self.grid_n < crate::axisym_eigensolver::MIN_GRID {
            return Err(ConfigError::Invalid(format!(
                "grid_n must be at least {}, got {}",
                crate::axisym_eigensolver::MIN_GRID,
                self.grid_n
            )));
        }
        if self.jobs == Some(0) {
            return Err(ConfigError::Invalid("jobs must be at least 1".into()));
        }
        Ok(ScanGrid {
            lambda,
            m,
            q,
            a,
            grid_n: self.grid_n,
        })
    }
}

/// Validated, sorted axes.
#[derive(Debug, Clone, PartialEq)]
pub struct ScanGrid {
    pub lambda: Vec<f64>,
    pub m: Vec<f64>,
    pub q: Vec<f64>,
    pub a: Vec<f64>,
    pub grid_n: usize,
}

impl ScanGrid {
    /// Grid points in lexicographic `(Λ, m, q, a)` order.
    pub fn points(&self) -> Vec<[f64; 4]> {
        let mut out = Vec::with_capacity(self.lambda.len() * self.m.len() * self.q.len() * self.a.len());
        for &l in &self.lambda {
            for &m in &self.m {
                for &q in &self.q {
                    for &a in &self.a {
                        out.push([l, m, q, a]);
                    }
                }
            }
        }
        out
    }
}
