//! One parser for every unit-suffixed CLI value: bias fields (`0.57G` or
//! `0.79MHz`), wire cross-sections (`10x2.15` in µm) and numeric ranges
//! (`1:100` or `4.2:300:150`).

use chipnoise_core::geometry::SlabGeometry;
use chipnoise_core::noise::BiasField;

#[derive(Debug, thiserror::Error, PartialEq)]
#[error("{0}")]
pub struct ParseError(pub String);

fn bad(what: &str, input: &str, hint: &str) -> ParseError {
    ParseError(format!("cannot parse {what} `{input}`: {hint}"))
}

fn parse_f64(what: &str, s: &str) -> Result<f64, ParseError> {
    s.trim()
        .parse::<f64>()
        .map_err(|_| bad(what, s, "expected a number"))
}

/// `0.57G` (gauss) or `0.79MHz` (Larmor frequency); a bare number means
/// gauss.
pub fn parse_bias_field(input: &str) -> Result<BiasField, ParseError> {
    let s = input.trim();
    if let Some(mhz) = s.strip_suffix("MHz") {
        return Ok(BiasField::LarmorMhz(parse_f64("frequency", mhz)?));
    }
    if let Some(gauss) = s.strip_suffix('G') {
        return Ok(BiasField::Gauss(parse_f64("bias field", gauss)?));
    }
    Ok(BiasField::Gauss(parse_f64("bias field", s)?))
}

/// `WIDTHxTHICKNESS` in µm, e.g. `10x2.15`.
pub fn parse_wire(input: &str) -> Result<SlabGeometry, ParseError> {
    let (w, t) = input
        .trim()
        .split_once('x')
        .ok_or_else(|| bad("wire cross-section", input, "expected WIDTHxTHICKNESS in um"))?;
    SlabGeometry::new(parse_f64("wire width", w)?, parse_f64("wire thickness", t)?)
        .map_err(|e| bad("wire cross-section", input, &e.to_string()))
}

/// How range samples are distributed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Spacing {
    Linear,
    Log,
}

/// A single value or an inclusive `lo:hi[:count]` range.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ValueOrRange {
    Single(f64),
    Range { lo: f64, hi: f64, count: Option<usize> },
}

pub fn parse_value_or_range(input: &str) -> Result<ValueOrRange, ParseError> {
    let s = input.trim();
    let parts: Vec<&str> = s.split(':').collect();
    match parts.as_slice() {
        [one] => Ok(ValueOrRange::Single(parse_f64("value", one)?)),
        [lo, hi] => Ok(ValueOrRange::Range {
            lo: parse_f64("range start", lo)?,
            hi: parse_f64("range end", hi)?,
            count: None,
        }),
        [lo, hi, n] => {
            let count: usize = n
                .trim()
                .parse()
                .map_err(|_| bad("range count", s, "expected an integer point count"))?;
            Ok(ValueOrRange::Range {
                lo: parse_f64("range start", lo)?,
                hi: parse_f64("range end", hi)?,
                count: Some(count),
            })
        }
        _ => Err(bad("range", input, "expected VALUE or LO:HI[:COUNT]")),
    }
}

impl ValueOrRange {
    /// Materialize the grid. Ranges default to `default_count` points with
    /// the given spacing; a single value yields one point.
    pub fn grid(&self, spacing: Spacing, default_count: usize) -> Result<Vec<f64>, ParseError> {
        match *self {
            ValueOrRange::Single(v) => Ok(vec![v]),
            ValueOrRange::Range { lo, hi, count } => {
                let n = count.unwrap_or(default_count);
                if n < 2 {
                    return Err(ParseError("range needs at least 2 points".into()));
                }
                if !(hi > lo) {
                    return Err(ParseError(format!("range end {hi} must exceed start {lo}")));
                }
                if spacing == Spacing::Log && !(lo > 0.0) {
                    return Err(ParseError("log-spaced range needs a positive start".into()));
                }
                let mut out = Vec::with_capacity(n);
                for i in 0..n {
                    let s = i as f64 / (n - 1) as f64;
                    let v = match spacing {
                        Spacing::Linear => lo + (hi - lo) * s,
                        Spacing::Log => lo * (hi / lo).powf(s),
                    };
                    out.push(v);
                }
                Ok(out)
            }
        }
    }
}

/// `SOLVENT:SOLUTE:X` with x in at.%, e.g. `Ag:Au:5`.
#[derive(Debug, Clone, PartialEq)]
pub struct AlloyArg {
    pub solvent: String,
    pub solute: String,
    pub x_at_pct: f64,
}

pub fn parse_alloy(input: &str) -> Result<AlloyArg, ParseError> {
    let parts: Vec<&str> = input.trim().split(':').collect();
    let [solvent, solute, x] = parts.as_slice() else {
        return Err(bad("alloy", input, "expected SOLVENT:SOLUTE:X(at.%)"));
    };
    Ok(AlloyArg {
        solvent: (*solvent).to_owned(),
        solute: (*solute).to_owned(),
        x_at_pct: parse_f64("alloy concentration", x)?,
    })
}

/// Either a pure metal name (`Cu`) or an alloy triple (`Ag:Au:6`).
#[derive(Debug, Clone, PartialEq)]
pub enum WireMaterial {
    Metal(String),
    Alloy(AlloyArg),
}

pub fn parse_wire_material(input: &str) -> Result<WireMaterial, ParseError> {
    if input.contains(':') {
        Ok(WireMaterial::Alloy(parse_alloy(input)?))
    } else {
        Ok(WireMaterial::Metal(input.trim().to_owned()))
    }
}
