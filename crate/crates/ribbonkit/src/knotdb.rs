//! Tabulated knots: CSV ingestion, validation, and rendering.
//!
//! A knot record couples a normalized Alexander class with the classical
//! invariants that feed the bound engine ([`crate::bounds`]) and with the
//! published ribbon-number interval `rmin..=rmax`.  Upper bounds always come
//! from explicit constructions, so they carry citations; the only lower
//! bounds stored as data are externally asserted ones, also cited.
//!
//! [`load_csv`] validates every row: the Alexander class must evaluate to
//! `±1` at `1`, the recorded determinant must be positive, odd, and equal to
//! `|Δ(-1)|`, bound values and citations must come in pairs, and the interval
//! must be ordered.  Two curated tables ship with the crate
//! ([`table_one`], [`table_two`]).

use std::collections::BTreeMap;
use std::io::{Read, Write};

use num_bigint::BigInt;
use num_traits::One;
use thiserror::Error;

use crate::bounds::KnotFacts;
use crate::laurent::AlexClass;

/// Error raised while reading or writing knot tables.
#[derive(Debug, Error)]
pub enum DbError {
    /// Low-level CSV failure.
    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),
    /// The table as a whole is malformed (missing columns, ...).
    #[error("table format error: {0}")]
    Format(String),
    /// A single row violates a validation rule.
    #[error("record `{name}`: {message}")]
    Row {
        /// The offending row's name (or position when the name is missing).
        name: String,
        /// What went wrong.
        message: String,
    },
    /// Underlying I/O failure.
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

/// One tabulated knot.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KnotRecord {
    /// Knot name (`*` marks a mirror in connected sums).
    pub name: String,
    /// Normalized Alexander class.
    pub alex: AlexClass,
    /// Determinant `|Δ(-1)|`.
    pub det: BigInt,
    /// Seifert genus, when recorded.
    pub genus: Option<u32>,
    /// Crosscap number, when recorded.
    pub crosscap: Option<u32>,
    /// Unknotting number, when recorded.
    pub unknotting: Option<u32>,
    /// Whether the knot is nontrivial despite a trivial Alexander class.
    pub nontrivial: bool,
    /// Ribbon-number upper bound with its citation.
    pub upper: Option<(u32, String)>,
    /// Externally asserted lower bound with its citation.
    pub lower: Option<(u32, String)>,
    /// Smallest published candidate for the ribbon number.
    pub rmin: u32,
    /// Largest published candidate for the ribbon number.
    pub rmax: u32,
}

impl KnotRecord {
    /// The invariants of this record in the shape the bound engine takes.
    pub fn facts(&self) -> KnotFacts {
        KnotFacts {
            alex: self.alex.clone(),
            genus: self.genus,
            crosscap: self.crosscap,
            unknotting: self.unknotting,
            nontrivial: self.nontrivial,
            asserted_lower: self.lower.clone(),
        }
    }

    /// The published interval as displayed text: `"3"` or `"4, 5"`.
    pub fn interval_text(&self) -> String {
        (self.rmin..=self.rmax)
            .map(|r| r.to_string())
            .collect::<Vec<_>>()
            .join(", ")
    }
}

const COLUMNS: [&str; 13] = [
    "name",
    "alex",
    "det",
    "genus",
    "crosscap",
    "unknotting",
    "nontrivial",
    "upper",
    "upper_cite",
    "lower",
    "lower_cite",
    "rmin",
    "rmax",
];

fn row_error(name: &str, message: impl Into<String>) -> DbError {
    DbError::Row {
        name: name.to_string(),
        message: message.into(),
    }
}

fn parse_opt_u32(name: &str, column: &str, cell: &str) -> Result<Option<u32>, DbError> {
    if cell.is_empty() {
        return Ok(None);
    }
    cell.parse::<u32>()
        .map(Some)
        .map_err(|_| row_error(name, format!("column `{column}` has bad value `{cell}`")))
}

fn parse_u32(name: &str, column: &str, cell: &str) -> Result<u32, DbError> {
    parse_opt_u32(name, column, cell)?
        .ok_or_else(|| row_error(name, format!("column `{column}` must not be empty")))
}

/// Reads and validates a knot table.
///
/// Lines starting with `#` are comments; the header row must contain every
/// column of the schema.  Each data row is validated independently and
/// reported by name on failure.
pub fn load_csv<R: Read>(reader: R) -> Result<Vec<KnotRecord>, DbError> {
    let mut csv_reader = csv::ReaderBuilder::new()
        .comment(Some(b'#'))
        .trim(csv::Trim::All)
        .from_reader(reader);
    let headers = csv_reader.headers()?.clone();
    let mut index: BTreeMap<&str, usize> = BTreeMap::new();
    for (i, header) in headers.iter().enumerate() {
        index.insert(header, i);
    }
    for column in COLUMNS {
        if !index.contains_key(column) {
            return Err(DbError::Format(format!("missing column `{column}`")));
        }
    }
    let mut records = Vec::new();
    for (row, result) in csv_reader.records().enumerate() {
        let record = result?;
        let cell = |column: &str| record.get(index[column]).unwrap_or("");
        let name = if cell("name").is_empty() {
            format!("row {}", row + 1)
        } else {
            cell("name").to_string()
        };

        let alex: AlexClass = cell("alex")
            .parse()
            .map_err(|e| row_error(&name, format!("bad alexander class: {e}")))?;
        let unit = alex.eval_at_one();
        if unit != BigInt::one() && unit != -BigInt::one() {
            return Err(row_error(
                &name,
                format!("alexander class evaluates to {unit} at 1; expected ±1"),
            ));
        }

        let det: BigInt = cell("det")
            .parse()
            .map_err(|_| row_error(&name, format!("bad determinant `{}`", cell("det"))))?;
        if det <= BigInt::ZERO || (&det % 2) == BigInt::ZERO {
            return Err(row_error(
                &name,
                format!("determinant {det} must be positive and odd"),
            ));
        }
        let expected = alex.determinant();
        if det != expected {
            return Err(row_error(
                &name,
                format!("determinant {det} does not match |Δ(-1)| = {expected}"),
            ));
        }

        let genus = parse_opt_u32(&name, "genus", cell("genus"))?;
        let crosscap = parse_opt_u32(&name, "crosscap", cell("crosscap"))?;
        let unknotting = parse_opt_u32(&name, "unknotting", cell("unknotting"))?;
        let nontrivial = match cell("nontrivial") {
            "" | "0" => false,
            "1" => true,
            other => {
                return Err(row_error(
                    &name,
                    format!("column `nontrivial` must be empty, 0, or 1; found `{other}`"),
                ))
            }
        };

        let bound_pair = |column: &str,
                          cite_column: &str|
         -> Result<Option<(u32, String)>, DbError> {
            let value = parse_opt_u32(&name, column, cell(column))?;
            let cite = cell(cite_column);
            match (value, cite.is_empty()) {
                (Some(v), false) => Ok(Some((v, cite.to_string()))),
                (None, true) => Ok(None),
                _ => Err(row_error(
                    &name,
                    format!("columns `{column}` and `{cite_column}` must be filled together"),
                )),
            }
        };
        let upper = bound_pair("upper", "upper_cite")?;
        let lower = bound_pair("lower", "lower_cite")?;

        let rmin = parse_u32(&name, "rmin", cell("rmin"))?;
        let rmax = parse_u32(&name, "rmax", cell("rmax"))?;
        if rmin > rmax {
            return Err(row_error(&name, format!("interval {rmin}..{rmax} is inverted")));
        }
        if let Some((value, _)) = &upper {
            if *value != rmax {
                return Err(row_error(
                    &name,
                    format!("upper bound {value} disagrees with rmax {rmax}"),
                ));
            }
        }
        if let Some((value, _)) = &lower {
            if *value > rmin {
                return Err(row_error(
                    &name,
                    format!("asserted lower bound {value} exceeds rmin {rmin}"),
                ));
            }
        }

        records.push(KnotRecord {
            name: name.clone(),
            alex,
            det,
            genus,
            crosscap,
            unknotting,
            nontrivial,
            upper,
            lower,
            rmin,
            rmax,
        });
    }
    Ok(records)
}

/// Writes records in the same CSV schema [`load_csv`] reads.
pub fn emit_csv<W: Write>(records: &[KnotRecord], writer: W) -> Result<(), DbError> {
    let mut csv_writer = csv::Writer::from_writer(writer);
    csv_writer.write_record(COLUMNS)?;
    let opt = |value: Option<u32>| value.map(|v| v.to_string()).unwrap_or_default();
    for record in records {
        let (upper, upper_cite) = match &record.upper {
            Some((value, cite)) => (value.to_string(), cite.clone()),
            None => (String::new(), String::new()),
        };
        let (lower, lower_cite) = match &record.lower {
            Some((value, cite)) => (value.to_string(), cite.clone()),
            None => (String::new(), String::new()),
        };
        csv_writer.write_record([
            record.name.as_str(),
            &record.alex.to_string(),
            &record.det.to_string(),
            &opt(record.genus),
            &opt(record.crosscap),
            &opt(record.unknotting),
            if record.nontrivial { "1" } else { "" },
            &upper,
            &upper_cite,
            &lower,
            &lower_cite,
            &record.rmin.to_string(),
            &record.rmax.to_string(),
        ])?;
    }
    csv_writer.flush()?;
    Ok(())
}

/// Renders records as an aligned text table.
pub fn emit_table<W: Write>(records: &[KnotRecord], mut writer: W) -> Result<(), DbError> {
    let headers = ["name", "alexander", "det", "genus", "crosscap", "ribbon", "upper bound from"];
    let mut rows: Vec<[String; 7]> = Vec::with_capacity(records.len());
    for record in records {
        let opt = |value: Option<u32>| value.map(|v| v.to_string()).unwrap_or_default();
        rows.push([
            record.name.clone(),
            record.alex.to_string(),
            record.det.to_string(),
            opt(record.genus),
            opt(record.crosscap),
            record.interval_text(),
            record
                .upper
                .as_ref()
                .map(|(_, cite)| cite.clone())
                .unwrap_or_default(),
        ]);
    }
    let mut widths: Vec<usize> = headers.iter().map(|h| h.len()).collect();
    for row in &rows {
        for (width, cell) in widths.iter_mut().zip(row.iter()) {
            *width = (*width).max(cell.len());
        }
    }
    let render = |cells: &[String], writer: &mut W| -> std::io::Result<()> {
        let line = cells
            .iter()
            .zip(&widths)
            .map(|(cell, width)| format!("{cell:<width$}"))
            .collect::<Vec<_>>()
            .join("  ");
        writeln!(writer, "{}", line.trim_end())
    };
    render(
        &headers.iter().map(|h| h.to_string()).collect::<Vec<_>>(),
        &mut writer,
    )?;
    let rule: Vec<String> = widths.iter().map(|w| "-".repeat(*w)).collect();
    render(&rule, &mut writer)?;
    for row in &rows {
        render(row, &mut writer)?;
    }
    Ok(())
}

/// The bundled table of ribbon knots with at most ten crossings.
pub fn table_one() -> Vec<KnotRecord> {
    load_csv(include_str!("../data/table1.csv").as_bytes()).expect("bundled table one is valid")
}

/// The bundled table of ribbon knots with eleven crossings.
pub fn table_two() -> Vec<KnotRecord> {
    load_csv(include_str!("../data/table2.csv").as_bytes()).expect("bundled table two is valid")
}

/// Both bundled tables, concatenated.
pub fn bundled_records() -> Vec<KnotRecord> {
    let mut records = table_one();
    records.extend(table_two());
    records
}
