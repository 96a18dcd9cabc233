//! Rendering: CSV (UTF-8, `\n` line endings, mandatory header row),
//! JSON, and plain key/value text with 12 significant digits.

use std::io::Write;

use serde::Serialize;

use hbk_core::{Error, Result};

use crate::commands::{FigureRow, TableRow};

/// Output format selector.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Csv,
    Json,
}

/// 12 significant digits; scientific notation outside a readable range.
pub fn sig12(x: f64) -> String {
    if x == 0.0 {
        return "0".to_string();
    }
    if !x.is_finite() {
        return format!("{x}");
    }
    let mag = x.abs().log10().floor() as i32;
    if !(-5..12).contains(&mag) {
        return format!("{:.11e}", x);
    }
    let decimals = (11 - mag).max(0) as usize;
    format!("{:.*}", decimals, x)
}

fn io_err(e: impl std::fmt::Display) -> Error {
    Error::Parameter(format!("output error: {e}"))
}

/// Serializes rows as CSV with the header taken from the struct fields.
pub fn write_csv<S: Serialize, W: Write>(rows: &[S], out: W) -> Result<()> {
    let mut w = csv::WriterBuilder::new().has_headers(true).from_writer(out);
    for row in rows {
        w.serialize(row).map_err(io_err)?;
    }
    w.flush().map_err(io_err)?;
    Ok(())
}

/// Pretty JSON plus a trailing newline.
pub fn write_json<S: Serialize, W: Write>(value: &S, mut out: W) -> Result<()> {
    let text = serde_json::to_string_pretty(value).map_err(io_err)?;
    writeln!(out, "{text}").map_err(io_err)?;
    Ok(())
}

/// `key value` lines for single-result commands.
pub fn write_kv<W: Write>(pairs: &[(&str, String)], mut out: W) -> Result<()> {
    for (k, v) in pairs {
        writeln!(out, "{k} {v}").map_err(io_err)?;
    }
    Ok(())
}

/// Table rows with r_f rendered at exactly six decimals.
pub fn write_tables_csv<W: Write>(rows: &[TableRow], mut out: W) -> Result<()> {
    writeln!(out, "alpha,zeta,n,r_f,residual,iterations").map_err(io_err)?;
    for row in rows {
        writeln!(
            out,
            "{},{},{},{:.6},{},{}",
            row.alpha, row.zeta, row.n, row.r_f, row.residual, row.iterations
        )
        .map_err(io_err)?;
    }
    Ok(())
}

/// Figure rows in long format.
pub fn write_figure_csv<W: Write>(rows: &[FigureRow], mut out: W) -> Result<()> {
    writeln!(out, "n,r,F").map_err(io_err)?;
    for row in rows {
        writeln!(out, "{},{},{}", row.n, row.r, row.f).map_err(io_err)?;
    }
    Ok(())
}

/// Parses tables CSV back into rows (round-trip checks).
pub fn read_tables_csv(text: &str) -> Result<Vec<TableRow>> {
    let mut rows = Vec::new();
    let mut reader = csv::ReaderBuilder::new()
        .has_headers(true)
        .from_reader(text.as_bytes());
    for record in reader.deserialize::<TableRow>() {
        rows.push(record.map_err(io_err)?);
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sig12_renders_twelve_digits() {
        assert_eq!(sig12(0.38655498902), "0.386554989020");
        assert_eq!(sig12(0.0), "0");
        assert_eq!(sig12(2.0), "2.00000000000");
        assert!(sig12(8.3e-12).contains('e'));
    }

    #[test]
    fn tables_csv_round_trips_exactly() {
        let rows = vec![
            TableRow {
                alpha: 0.5,
                zeta: 0.5,
                n: 1,
                r_f: 0.386555,
                residual: 8.26e-12,
                iterations: 33,
            },
            TableRow {
                alpha: 0.5,
                zeta: 1.0 / 2000.0,
                n: 1000,
                r_f: 0.5,
                residual: 1e-11,
                iterations: 34,
            },
        ];
        let mut buf = Vec::new();
        write_tables_csv(&rows, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(text.starts_with("alpha,zeta,n,r_f,residual,iterations\n"));
        assert!(text.ends_with('\n'));
        assert!(!text.contains('\r'));
        let parsed = read_tables_csv(&text).unwrap();
        assert_eq!(parsed, rows);
    }
}
