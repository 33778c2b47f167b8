//! Deterministic table emission: CSV (RFC-4180 style, header row with unit
//! annotations) and JSON (array of row objects). Floats are always printed
//! with 9 significant digits so identical invocations are byte-identical.

use std::io::{self, Write};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Num(f64),
    Text(String),
    Flag(bool),
}

impl From<f64> for Cell {
    fn from(x: f64) -> Self {
        Cell::Num(x)
    }
}

impl From<&str> for Cell {
    fn from(s: &str) -> Self {
        Cell::Text(s.to_owned())
    }
}

impl From<String> for Cell {
    fn from(s: String) -> Self {
        Cell::Text(s)
    }
}

impl From<bool> for Cell {
    fn from(b: bool) -> Self {
        Cell::Flag(b)
    }
}

/// Column-ordered table; headers carry the units.
#[derive(Debug, Clone, Default)]
pub struct Table {
    pub headers: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new<S: Into<String>>(headers: impl IntoIterator<Item = S>) -> Self {
        Self {
            headers: headers.into_iter().map(Into::into).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push_row(&mut self, row: Vec<Cell>) {
        debug_assert_eq!(row.len(), self.headers.len());
        self.rows.push(row);
    }

    pub fn write(&self, format: Format, out: &mut dyn Write) -> io::Result<()> {
        match format {
            Format::Csv => self.write_csv(out),
            Format::Json => self.write_json(out),
        }
    }

    fn write_csv(&self, out: &mut dyn Write) -> io::Result<()> {
        writeln!(out, "{}", self.headers.iter().map(|h| csv_escape(h)).collect::<Vec<_>>().join(","))?;
        for row in &self.rows {
            let line = row
                .iter()
                .map(|c| match c {
                    Cell::Num(x) => fmt_g9(*x),
                    Cell::Text(s) => csv_escape(s),
                    Cell::Flag(b) => b.to_string(),
                })
                .collect::<Vec<_>>()
                .join(",");
            writeln!(out, "{line}")?;
        }
        Ok(())
    }

    fn write_json(&self, out: &mut dyn Write) -> io::Result<()> {
        writeln!(out, "[")?;
        for (i, row) in self.rows.iter().enumerate() {
            let fields = self
                .headers
                .iter()
                .zip(row)
                .map(|(h, c)| {
                    let value = match c {
                        Cell::Num(x) if x.is_finite() => fmt_g9(*x),
                        Cell::Num(x) => format!("\"{}\"", fmt_g9(*x)),
                        Cell::Text(s) => json_string(s),
                        Cell::Flag(b) => b.to_string(),
                    };
                    format!("{}: {}", json_string(h), value)
                })
                .collect::<Vec<_>>()
                .join(", ");
            let comma = if i + 1 == self.rows.len() { "" } else { "," };
            writeln!(out, "  {{{fields}}}{comma}")?;
        }
        writeln!(out, "]")
    }
}

fn csv_escape(field: &str) -> String {
    if field.contains([',', '"', '\n']) {
        format!("\"{}\"", field.replace('"', "\"\""))
    } else {
        field.to_owned()
    }
}

fn json_string(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for ch in s.chars() {
        match ch {
            '"' => out.push_str("\\\""),
            '\\' => out.push_str("\\\\"),
            '\n' => out.push_str("\\n"),
            c if (c as u32) < 0x20 => out.push_str(&format!("\\u{:04x}", c as u32)),
            c => out.push(c),
        }
    }
    out.push('"');
    out
}

/// Fixed 9-significant-digit float formatting: plain decimal for moderate
/// exponents, scientific otherwise. `1.7 → "1.70000000"`,
/// `0.017 → "0.0170000000"`, `5.3e-12 → "5.30000000e-12"`.
pub fn fmt_g9(x: f64) -> String {
    if x == 0.0 {
        return "0.00000000".to_owned();
    }
    if x.is_nan() {
        return "nan".to_owned();
    }
    if x.is_infinite() {
        return if x > 0.0 { "inf" } else { "-inf" }.to_owned();
    }
    let sci = format!("{x:.8e}");
    let epos = sci.find('e').expect("scientific format");
    let exp: i32 = sci[epos + 1..].parse().expect("exponent");
    if (-4..=8).contains(&exp) {
        let decimals = (8 - exp).max(0) as usize;
        format!("{x:.decimals$}")
    } else {
        sci
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nine_significant_digits() {
        assert_eq!(fmt_g9(1.7), "1.70000000");
        assert_eq!(fmt_g9(0.017), "0.0170000000");
        assert_eq!(fmt_g9(73.8279929), "73.8279929");
        assert_eq!(fmt_g9(-2.5), "-2.50000000");
        assert_eq!(fmt_g9(0.0), "0.00000000");
        assert_eq!(fmt_g9(123456789.0), "123456789");
        assert_eq!(fmt_g9(5.3e-12), "5.30000000e-12");
        assert_eq!(fmt_g9(1.25e14), "1.25000000e14");
    }

    #[test]
    fn formatted_floats_parse_back() {
        for &x in &[1.7, 0.017, 5.3e-12, 1.25e14, -44.03, 2.364] {
            let s = fmt_g9(x);
            let back: f64 = s.parse().unwrap();
            assert!((back - x).abs() <= 1e-8 * x.abs());
        }
    }

    #[test]
    fn csv_output_shape() {
        let mut t = Table::new(["T_K", "label", "ok"]);
        t.push_row(vec![4.2.into(), "Cu".into(), true.into()]);
        let mut buf = Vec::new();
        t.write(Format::Csv, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text, "T_K,label,ok\n4.20000000,Cu,true\n");
    }

    #[test]
    fn json_output_parses_and_quotes_nonfinite() {
        let mut t = Table::new(["x", "tau_s"]);
        t.push_row(vec![1.0.into(), f64::INFINITY.into()]);
        t.push_row(vec![2.0.into(), 2.5.into()]);
        let mut buf = Vec::new();
        t.write(Format::Json, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let parsed: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(parsed[0]["tau_s"], "inf");
        assert!((parsed[1]["x"].as_f64().unwrap() - 2.0).abs() < 1e-12);
    }

    #[test]
    fn identical_tables_serialize_identically() {
        let build = || {
            let mut t = Table::new(["a", "b"]);
            t.push_row(vec![0.1.into(), 0.2.into()]);
            t
        };
        let mut b1 = Vec::new();
        let mut b2 = Vec::new();
        build().write(Format::Csv, &mut b1).unwrap();
        build().write(Format::Csv, &mut b2).unwrap();
        assert_eq!(b1, b2);
    }
}
