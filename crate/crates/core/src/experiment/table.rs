use std::io::{Read, Write};
use std::path::Path;

use super::ResultRow;
use crate::error::{MarketError, Result};

pub const HEADER: [&str; 14] = [
    "culture",
    "procedure",
    "n",
    "rep",
    "seed",
    "ark",
    "mrk",
    "ark_opt_noir",
    "mrk_opt_noir",
    "ratio_ark",
    "ratio_mrk",
    "num_deals",
    "max_deal_size",
    "mean_deal_size",
];

/// Formats `x` with 6 significant digits in the style of C's `%g`.
pub fn format_float(x: f64) -> String {
    if x == 0.0 || !x.is_finite() {
        return if x == 0.0 { "0".into() } else { x.to_string() };
    }
    let scientific = format!("{x:.5e}");
    let (mantissa, exponent) = scientific.split_once('e').expect("exponent present");
    let exponent: i32 = exponent.parse().expect("integer exponent");
    let trim = |s: &str| -> String {
        if s.contains('.') {
            s.trim_end_matches('0').trim_end_matches('.').to_string()
        } else {
            s.to_string()
        }
    };
    if !(-4..6).contains(&exponent) {
        let sign = if exponent < 0 { '-' } else { '+' };
        format!("{}e{}{:02}", trim(mantissa), sign, exponent.abs())
    } else {
        trim(&format!("{:.*}", (5 - exponent) as usize, x))
    }
}

fn io_error(path: &Path, e: impl std::fmt::Display) -> MarketError {
    MarketError::InvalidArgument(format!("{}: {e}", path.display()))
}

pub fn write_csv<W: Write>(rows: &[ResultRow], writer: W) -> std::result::Result<(), csv::Error> {
    let mut out = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(writer);
    out.write_record(HEADER)?;
    for r in rows {
        out.write_record([
            r.culture.clone(),
            r.procedure.clone(),
            r.n.to_string(),
            r.rep.to_string(),
            r.seed.to_string(),
            r.ark.to_string(),
            r.mrk.to_string(),
            r.ark_opt_noir.to_string(),
            r.mrk_opt_noir.to_string(),
            format_float(r.ratio_ark),
            format_float(r.ratio_mrk),
            r.num_deals.to_string(),
            r.max_deal_size.to_string(),
            format_float(r.mean_deal_size),
        ])?;
    }
    out.flush()?;
    Ok(())
}

/// Writes the rows as CSV with the [`HEADER`] columns and LF line endings.
pub fn emit_csv(rows: &[ResultRow], path: &Path) -> Result<()> {
    let file = std::fs::File::create(path).map_err(|e| io_error(path, e))?;
    write_csv(rows, std::io::BufWriter::new(file)).map_err(|e| io_error(path, e))
}

fn num<T: std::str::FromStr>(s: &str, line: usize, column: &str) -> Result<T> {
    s.parse().map_err(|_| MarketError::Parse { line, message: format!("bad {column} `{s}`") })
}

pub fn read_csv<R: Read>(reader: R) -> Result<Vec<ResultRow>> {
    let mut input = csv::Reader::from_reader(reader);
    let header = input.headers().map_err(|e| MarketError::Parse { line: 1, message: e.to_string() })?;
    if header.iter().ne(HEADER) {
        return Err(MarketError::Parse { line: 1, message: "unexpected header".into() });
    }
    let mut rows = Vec::new();
    for (i, record) in input.records().enumerate() {
        let line = i + 2;
        let record = record.map_err(|e| MarketError::Parse { line, message: e.to_string() })?;
        let f = |k: usize| record.get(k).unwrap_or_default();
        rows.push(ResultRow {
            culture: f(0).to_string(),
            procedure: f(1).to_string(),
            n: num(f(2), line, HEADER[2])?,
            rep: num(f(3), line, HEADER[3])?,
            seed: num(f(4), line, HEADER[4])?,
            ark: num(f(5), line, HEADER[5])?,
            mrk: num(f(6), line, HEADER[6])?,
            ark_opt_noir: num(f(7), line, HEADER[7])?,
            mrk_opt_noir: num(f(8), line, HEADER[8])?,
            ratio_ark: num(f(9), line, HEADER[9])?,
            ratio_mrk: num(f(10), line, HEADER[10])?,
            num_deals: num(f(11), line, HEADER[11])?,
            max_deal_size: num(f(12), line, HEADER[12])?,
            mean_deal_size: num(f(13), line, HEADER[13])?,
        });
    }
    Ok(rows)
}

pub fn parse_csv(path: &Path) -> Result<Vec<ResultRow>> {
    let file = std::fs::File::open(path).map_err(|e| io_error(path, e))?;
    read_csv(file)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn six_significant_digits() {
        assert_eq!(format_float(1.0), "1");
        assert_eq!(format_float(0.75), "0.75");
        assert_eq!(format_float(2.0 / 3.0), "0.666667");
        assert_eq!(format_float(59.0 / 30.0), "1.96667");
        assert_eq!(format_float(123456.7), "123457");
        assert_eq!(format_float(999999.7), "1e+06");
        assert_eq!(format_float(0.0001234567), "0.000123457");
        assert_eq!(format_float(0.00001234567), "1.23457e-05");
        assert_eq!(format_float(0.0), "0");
    }

    fn row(culture: &str, ratio: f64) -> ResultRow {
        ResultRow {
            culture: culture.into(),
            procedure: "c2-u".into(),
            n: 6,
            rep: 3,
            seed: u64::MAX,
            ark: 30,
            mrk: 4,
            ark_opt_noir: 32,
            mrk_opt_noir: 5,
            ratio_ark: ratio,
            ratio_mrk: 0.8,
            num_deals: 7,
            max_deal_size: 2,
            mean_deal_size: 2.0,
        }
    }

    #[test]
    fn round_trip_and_quoting() {
        let rows = vec![row("ic-sp", 0.9375), row("odd, \"name\"", 0.5)];
        let mut bytes = Vec::new();
        write_csv(&rows, &mut bytes).unwrap();
        let text = String::from_utf8(bytes.clone()).unwrap();
        assert!(text.starts_with("culture,procedure,n,rep,seed,ark,mrk,ark_opt_noir,mrk_opt_noir,ratio_ark,ratio_mrk,num_deals,max_deal_size,mean_deal_size\n"));
        assert!(!text.contains('\r'));
        assert!(text.contains("\"odd, \"\"name\"\"\""));
        assert_eq!(read_csv(bytes.as_slice()).unwrap(), rows);
    }

    #[test]
    fn empty_rows_give_header_only() {
        let mut bytes = Vec::new();
        write_csv(&[], &mut bytes).unwrap();
        assert_eq!(bytes.iter().filter(|&&b| b == b'\n').count(), 1);
        assert!(read_csv(bytes.as_slice()).unwrap().is_empty());
    }
}
