use clap::ValueEnum;
use knar_core::{Poly, Rat};
use serde_json::{Map, Value};
use std::time::Duration;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Plain,
    Json,
    Csv,
    Latex,
}

/// One command's worth of output, prerendered per format so the emit path
/// stays trivial and the json rendering is byte-stable under round-trips.
pub struct Report {
    pub command: &'static str,
    pub method: &'static str,
    /// query echo in insertion order (json sorts keys itself)
    pub query: Vec<(&'static str, Value)>,
    /// the canonical (j, value) table; exact integers as decimal strings
    pub values: Vec<(i64, String)>,
    /// command-specific top-level json fields
    pub extras: Vec<(&'static str, Value)>,
    pub plain: String,
    pub latex: String,
    /// csv body rows under the header `section,index,value`
    pub csv: Vec<[String; 3]>,
}

impl Report {
    pub fn render(&self, format: Format, elapsed: Option<Duration>) -> String {
        match format {
            Format::Plain => {
                let mut out = self.plain.clone();
                if let Some(d) = elapsed {
                    out.push_str(&format!("# elapsed {} us\n", d.as_micros()));
                }
                out
            }
            Format::Json => {
                let mut top = Map::new();
                let mut query = Map::new();
                query.insert("command".into(), Value::from(self.command));
                for (key, val) in &self.query {
                    query.insert((*key).into(), val.clone());
                }
                top.insert("query".into(), Value::Object(query));
                let rows: Vec<Value> = self
                    .values
                    .iter()
                    .map(|(j, v)| {
                        let mut row = Map::new();
                        row.insert("j".into(), Value::from(*j));
                        row.insert("value".into(), Value::from(v.clone()));
                        Value::Object(row)
                    })
                    .collect();
                top.insert("values".into(), Value::Array(rows));
                for (key, val) in &self.extras {
                    top.insert((*key).into(), val.clone());
                }
                let mut meta = Map::new();
                meta.insert("method".into(), Value::from(self.method));
                if let Some(d) = elapsed {
                    let mut timings = Map::new();
                    timings.insert("elapsed_us".into(), Value::from(d.as_micros() as u64));
                    meta.insert("timings".into(), Value::Object(timings));
                }
                top.insert("meta".into(), Value::Object(meta));
                let mut text = serde_json::to_string_pretty(&Value::Object(top))
                    .expect("json rendering cannot fail");
                text.push('\n');
                text
            }
            Format::Csv => {
                let mut out = String::from("section,index,value\n");
                for [section, index, value] in &self.csv {
                    out.push_str(&format!(
                        "{},{},{}\n",
                        csv_field(section),
                        csv_field(index),
                        csv_field(value)
                    ));
                }
                if let Some(d) = elapsed {
                    out.push_str(&format!("meta,elapsed_us,{}\n", d.as_micros()));
                }
                out
            }
            Format::Latex => {
                let mut out = self.latex.clone();
                if let Some(d) = elapsed {
                    out.push_str(&format!("% elapsed {} us\n", d.as_micros()));
                }
                out
            }
        }
    }
}

/// Exact decimal rendering: plain integer, or `p/q` for a non-integer.
pub fn rat_str(r: &Rat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// RFC-4180 quoting for fields containing separators or quotes.
pub fn csv_field(s: &str) -> String {
    if s.contains(',') || s.contains('"') || s.contains('\n') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

/// LaTeX rendering of a polynomial, ascending powers, `\tfrac` for rational
/// coefficients.
pub fn poly_latex(p: &Poly, var: &str) -> String {
    use num::{One, Signed, Zero};
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, c) in p.coeffs().iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(if c.is_negative() { " - " } else { " + " });
        }
        let show_coeff = i == 0 || !mag.is_one();
        if show_coeff {
            if mag.is_integer() {
                out.push_str(&mag.numer().to_string());
            } else {
                out.push_str(&format!("\\tfrac{{{}}}{{{}}}", mag.numer(), mag.denom()));
            }
        }
        if i > 0 {
            if show_coeff {
                out.push_str("\\,");
            }
            out.push_str(var);
            if i > 1 {
                out.push_str(&format!("^{{{i}}}"));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use knar_core::exact::rat;

    #[test]
    fn rational_rendering() {
        assert_eq!(rat_str(&rat(7, 1)), "7");
        assert_eq!(rat_str(&rat(-3, 2)), "-3/2");
    }

    #[test]
    fn csv_quoting() {
        assert_eq!(csv_field("plain"), "plain");
        assert_eq!(csv_field("a,b"), "\"a,b\"");
        assert_eq!(csv_field("say \"hi\""), "\"say \"\"hi\"\"\"");
    }

    #[test]
    fn latex_polynomial() {
        let p = Poly::from_coeffs(vec![rat(15120, 1), rat(-864, 1), rat(-144, 1)]);
        assert_eq!(poly_latex(&p, "t"), "15120 - 864\\,t - 144\\,t^{2}");
        let q = Poly::from_coeffs(vec![rat(1, 2), rat(1, 1)]);
        assert_eq!(poly_latex(&q, "j"), "\\tfrac{1}{2} + j");
    }
}
