//! Versioned configuration files in JSON or CSV.
//!
//! JSON layout:
//!
//! ```json
//! {"format": "qcontext-configuration", "version": 1, "n": 2, "source": "mermin-square",
//!  "points": ["XI", "IX", "XX"], "contexts": [[0, 1, 2]], "signs": [1]}
//! ```
//!
//! Points are Pauli strings; bit strings `a1 b1 … an bn` such as `"0110"` are
//! accepted on input. `signs` is optional and is checked against the computed
//! signs unless `trust_signs` is set.
//!
//! The CSV variant holds one record per line, keyed by its first field:
//! `format`, `version`, `n`, `source`, `trust_signs`, then `point,<index>,<label>`
//! and `context,<index>,<sign or empty>,<point>,<point>,…`.

use std::fmt;
use std::path::Path;
use std::str::FromStr;

use anyhow::{anyhow, bail, ensure, Context, Result};
use qcontext::pauli::{self, PauliObservable, Sign};
use qcontext::{Gf2Vector, QuantumConfiguration};
use serde::{Deserialize, Serialize};

pub const FORMAT_NAME: &str = "qcontext-configuration";
pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum FileFormat {
    Json,
    Csv,
}

impl FileFormat {
    pub fn extension(self) -> &'static str {
        match self {
            FileFormat::Json => "json",
            FileFormat::Csv => "csv",
        }
    }

    /// `.csv` selects CSV; anything else is read as JSON.
    pub fn from_path(path: &Path) -> Self {
        match path.extension().and_then(|e| e.to_str()) {
            Some(e) if e.eq_ignore_ascii_case("csv") => FileFormat::Csv,
            _ => FileFormat::Json,
        }
    }
}

impl fmt::Display for FileFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.extension())
    }
}

fn is_false(b: &bool) -> bool {
    !*b
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConfigurationFile {
    pub format: String,
    pub version: u32,
    pub n: usize,
    #[serde(default)]
    pub source: String,
    pub points: Vec<String>,
    pub contexts: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub signs: Option<Vec<i8>>,
    #[serde(default, skip_serializing_if = "is_false")]
    pub trust_signs: bool,
}

impl ConfigurationFile {
    /// File contents for `config`, with its context signs written out.
    pub fn from_configuration(config: &QuantumConfiguration) -> Result<Self> {
        let signs = config
            .context_signs()?
            .iter()
            .map(|s| s.as_i8().ok_or_else(|| anyhow!("context sign is not real")))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            format: FORMAT_NAME.to_string(),
            version: FORMAT_VERSION,
            n: config.n(),
            source: config.source().to_string(),
            points: (0..config.num_points()).map(|i| config.label(i)).collect(),
            contexts: config.contexts().to_vec(),
            signs: Some(signs),
            trust_signs: config.trusted_signs().is_some(),
        })
    }

    /// Validates the file and builds the configuration it describes.
    pub fn to_configuration(&self) -> Result<QuantumConfiguration> {
        ensure!(
            self.format == FORMAT_NAME,
            "unknown format {:?}, expected {FORMAT_NAME:?}",
            self.format
        );
        ensure!(
            self.version == FORMAT_VERSION,
            "unsupported format version {}, expected {FORMAT_VERSION}",
            self.version
        );
        let points = self
            .points
            .iter()
            .enumerate()
            .map(|(i, p)| parse_point(p, self.n).with_context(|| format!("point {i}")))
            .collect::<Result<Vec<_>>>()?;
        let signs = self
            .signs
            .as_ref()
            .map(|s| {
                s.iter()
                    .enumerate()
                    .map(|(i, &v)| sign_from_int(v).with_context(|| format!("sign {i}")))
                    .collect()
            })
            .transpose()?;
        let source = self.source.clone();
        if self.trust_signs {
            let signs = signs.ok_or_else(|| anyhow!("trust_signs is set but no signs are given"))?;
            return Ok(QuantumConfiguration::with_trusted_signs(
                self.n,
                points,
                self.contexts.clone(),
                signs,
                source,
            )?);
        }
        let config = QuantumConfiguration::new(self.n, points, self.contexts.clone(), source)?;
        if let Some(signs) = signs {
            config.verify_signs(&signs)?;
        }
        Ok(config)
    }

    pub fn to_json(&self) -> Result<String> {
        let mut s = serde_json::to_string_pretty(self)?;
        s.push('\n');
        Ok(s)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn to_csv(&self) -> Result<String> {
        let mut w = csv::WriterBuilder::new().flexible(true).from_writer(Vec::new());
        w.write_record(["format", &self.format])?;
        w.write_record(["version", &self.version.to_string()])?;
        w.write_record(["n", &self.n.to_string()])?;
        w.write_record(["source", &self.source])?;
        w.write_record(["trust_signs", if self.trust_signs { "true" } else { "false" }])?;
        for (i, p) in self.points.iter().enumerate() {
            w.write_record(["point", &i.to_string(), p])?;
        }
        for (i, ctx) in self.contexts.iter().enumerate() {
            let sign = self
                .signs
                .as_ref()
                .and_then(|s| s.get(i))
                .map_or(String::new(), |v| v.to_string());
            let mut record = vec!["context".to_string(), i.to_string(), sign];
            record.extend(ctx.iter().map(|p| p.to_string()));
            w.write_record(&record)?;
        }
        Ok(String::from_utf8(w.into_inner()?)?)
    }

    pub fn from_csv(text: &str) -> Result<Self> {
        let mut r = csv::ReaderBuilder::new()
            .has_headers(false)
            .flexible(true)
            .from_reader(text.as_bytes());
        let mut format = None;
        let mut version = None;
        let mut n = None;
        let mut source = String::new();
        let mut trust_signs = false;
        let mut points: Vec<String> = Vec::new();
        let mut contexts = Vec::new();
        let mut signs: Vec<Option<i8>> = Vec::new();
        for (line, record) in r.records().enumerate() {
            let record = record?;
            let line = line + 1;
            let field = |k: usize| record.get(k).ok_or_else(|| anyhow!("line {line}: missing field {k}"));
            let index = |k: usize, expected: usize| -> Result<()> {
                let i: usize = parse_field(field(k)?, line)?;
                ensure!(
                    i == expected,
                    "line {line}: index {i} out of sequence, expected {expected}"
                );
                Ok(())
            };
            match field(0)? {
                "format" => format = Some(field(1)?.to_string()),
                "version" => version = Some(parse_field(field(1)?, line)?),
                "n" => n = Some(parse_field(field(1)?, line)?),
                "source" => source = field(1)?.to_string(),
                "trust_signs" => trust_signs = parse_field(field(1)?, line)?,
                "point" => {
                    index(1, points.len())?;
                    points.push(field(2)?.to_string());
                }
                "context" => {
                    index(1, contexts.len())?;
                    let sign = field(2)?;
                    signs.push(if sign.is_empty() {
                        None
                    } else {
                        Some(parse_field(sign, line)?)
                    });
                    let members = (3..record.len())
                        .map(|k| parse_field(field(k)?, line))
                        .collect::<Result<Vec<usize>>>()?;
                    contexts.push(members);
                }
                other => bail!("line {line}: unknown record type {other:?}"),
            }
        }
        let signs = if signs.iter().all(Option::is_none) {
            None
        } else {
            Some(
                signs
                    .into_iter()
                    .enumerate()
                    .map(|(i, s)| s.ok_or_else(|| anyhow!("context {i} has no sign while others do")))
                    .collect::<Result<Vec<_>>>()?,
            )
        };
        Ok(Self {
            format: format.ok_or_else(|| anyhow!("missing format record"))?,
            version: version.ok_or_else(|| anyhow!("missing version record"))?,
            n: n.ok_or_else(|| anyhow!("missing n record"))?,
            source,
            points,
            contexts,
            signs,
            trust_signs,
        })
    }

    pub fn render(&self, format: FileFormat) -> Result<String> {
        match format {
            FileFormat::Json => self.to_json(),
            FileFormat::Csv => self.to_csv(),
        }
    }

    pub fn parse(text: &str, format: FileFormat) -> Result<Self> {
        match format {
            FileFormat::Json => Self::from_json(text),
            FileFormat::Csv => Self::from_csv(text),
        }
    }

    pub fn read(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        Self::parse(&text, FileFormat::from_path(path)).with_context(|| format!("parsing {}", path.display()))
    }
}

fn parse_field<T: FromStr>(s: &str, line: usize) -> Result<T>
where
    T::Err: fmt::Display,
{
    s.trim().parse().map_err(|e| anyhow!("line {line}: {s:?}: {e}"))
}

fn sign_from_int(v: i8) -> Result<Sign> {
    match v {
        1 => Ok(Sign::Plus),
        -1 => Ok(Sign::Minus),
        other => bail!("sign must be 1 or -1, got {other}"),
    }
}

/// A point given either as a Pauli string or as a bit string of length `2n`.
pub fn parse_point(s: &str, n: usize) -> Result<Gf2Vector> {
    let s = s.trim();
    if !s.is_empty() && s.chars().all(|c| c == '0' || c == '1') {
        ensure!(
            s.len() == 2 * n,
            "bit string {s:?} has length {}, expected {}",
            s.len(),
            2 * n
        );
        return Gf2Vector::parse_bits(s).ok_or_else(|| anyhow!("invalid bit string {s:?}"));
    }
    let o: PauliObservable = s.parse().map_err(|e: pauli::PauliError| anyhow!("{s:?}: {e}"))?;
    ensure!(o.phase_exp() == 0, "point {s:?} carries a phase");
    ensure!(o.n() == n, "point {s:?} acts on {} qubits, expected {n}", o.n());
    Ok(o.coords().clone())
}
