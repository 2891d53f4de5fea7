use std::io::{Read, Write};

use serde::Serialize;

use crate::error::Result;

use super::{ComparisonRow, PlotSeries, SweepReport};

pub const CSV_DIGITS: usize = 12;

/// Shortest "%.{digits}g"-style rendering: fixed notation for moderate
/// exponents, scientific otherwise, trailing zeros removed.
pub fn format_significant(x: f64, digits: usize) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let digits = digits.max(1);
    let sci = format!("{:.*e}", digits - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent present");
    let exp: i32 = exp.parse().expect("integer exponent");
    if exp < -5 || exp >= digits as i32 {
        let mantissa = trim_zeros(mantissa);
        return format!("{mantissa}e{exp}");
    }
    let decimals = (digits as i32 - 1 - exp).max(0) as usize;
    trim_zeros(&format!("{:.*}", decimals, x)).to_owned()
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

fn num(x: Option<f64>) -> String {
    x.map(|v| format_significant(v, CSV_DIGITS))
        .unwrap_or_default()
}

const HEADER: [&str; 9] = [
    "B", "l", "s", "j", "A_N", "A_PhI", "delta_A", "residual", "C_abs",
];

/// Comparison table as CSV; missing values are empty fields.
pub fn write_csv<W: Write>(rows: &[ComparisonRow], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(HEADER)?;
    for r in rows {
        w.write_record([
            format_significant(r.b, CSV_DIGITS),
            r.l.to_string(),
            r.s.to_string(),
            r.j.to_string(),
            num(r.a_n),
            num(r.a_phi),
            num(r.delta_a),
            num(r.residual),
            num(r.c_abs),
        ])?;
    }
    w.flush()?;
    Ok(())
}

pub fn read_csv<R: Read>(input: R) -> Result<Vec<ComparisonRow>> {
    let mut r = csv::Reader::from_reader(input);
    r.deserialize().map(|row| row.map_err(Into::into)).collect()
}

/// Pretty JSON of any serializable diagnostics (one object per case for a sweep).
pub fn write_json<W: Write, S: Serialize + ?Sized>(value: &S, out: W) -> Result<()> {
    serde_json::to_writer_pretty(out, value)?;
    Ok(())
}

pub fn write_sweep_json<W: Write>(report: &SweepReport, out: W) -> Result<()> {
    write_json(&report.cases, out)
}

/// Plot data in long form: B, l, j, s, delta_A.
pub fn write_plot_csv<W: Write>(series: &[PlotSeries], out: W) -> Result<()> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(["B", "l", "j", "s", "delta_A"])?;
    for p in series {
        for &(s, d) in &p.points {
            w.write_record([
                format_significant(p.b, CSV_DIGITS),
                p.l.to_string(),
                p.j.to_string(),
                s.to_string(),
                format_significant(d, CSV_DIGITS),
            ])?;
        }
    }
    w.flush()?;
    Ok(())
}
