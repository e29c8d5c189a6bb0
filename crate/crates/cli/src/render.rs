use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use abcensus::{Exact, OrderSpectrum};

use crate::{CliError, CliResult};

/// `p/q` in lowest terms, `p` alone when `q = 1`.
pub fn render_rational<C: Exact>(r: &Ratio<C>) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// A header plus rows of exact decimal cells.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    /// One `delta,o_delta,c_delta` row per order, then a `total` row.
    pub fn from_spectrum<C: Exact>(s: &OrderSpectrum<C>) -> CliResult<Self> {
        let mut rows: Vec<Vec<String>> = s
            .entries()
            .iter()
            .map(|e| vec![e.delta.to_string(), e.elements.to_string(), e.cyclic.to_string()])
            .collect();
        rows.push(vec![
            "total".into(),
            s.order_sum().to_string(),
            s.cyclic_total()?.to_string(),
        ]);
        Ok(Table {
            header: vec!["delta".into(), "o_delta".into(), "c_delta".into()],
            rows,
        })
    }

    pub fn to_csv(&self) -> CliResult<String> {
        let mut w = csv::WriterBuilder::new()
            .terminator(csv::Terminator::Any(b'\n'))
            .from_writer(Vec::new());
        let to_io = |e: csv::Error| CliError::Io(std::io::Error::other(e));
        w.write_record(&self.header).map_err(to_io)?;
        for row in &self.rows {
            w.write_record(row).map_err(to_io)?;
        }
        let bytes = w.into_inner().map_err(|e| CliError::Io(e.into_error()))?;
        Ok(String::from_utf8(bytes).expect("csv of ascii cells"))
    }

    pub fn from_csv(text: &str) -> CliResult<Self> {
        let mut r = csv::ReaderBuilder::new().from_reader(text.as_bytes());
        let to_io = |e: csv::Error| CliError::Io(std::io::Error::other(e));
        let header = r.headers().map_err(to_io)?.iter().map(String::from).collect();
        let rows = r
            .records()
            .map(|rec| Ok(rec.map_err(to_io)?.iter().map(String::from).collect()))
            .collect::<CliResult<Vec<Vec<String>>>>()?;
        Ok(Table { header, rows })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumEntryJson {
    pub delta: String,
    pub o: String,
    pub c: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumTotalsJson {
    pub order_sum: String,
    pub cyclic_total: String,
}

/// JSON form of a spectrum; counts are decimal strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpectrumJson {
    pub spec: Vec<u64>,
    pub exponent: String,
    pub entries: Vec<SpectrumEntryJson>,
    pub totals: SpectrumTotalsJson,
}

impl SpectrumJson {
    pub fn from_spectrum<C: Exact>(s: &OrderSpectrum<C>) -> CliResult<Self> {
        Ok(SpectrumJson {
            spec: s.spec().orders().to_vec(),
            exponent: s.spec().exponent().to_string(),
            entries: s
                .entries()
                .iter()
                .map(|e| SpectrumEntryJson {
                    delta: e.delta.to_string(),
                    o: e.elements.to_string(),
                    c: e.cyclic.to_string(),
                })
                .collect(),
            totals: SpectrumTotalsJson {
                order_sum: s.order_sum().to_string(),
                cyclic_total: s.cyclic_total()?.to_string(),
            },
        })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data") + "\n"
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub args: Vec<String>,
    pub value: String,
}

/// JSON form of a table: the quantity, the variable names and one row per cell.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableJson {
    pub quantity: String,
    pub variables: Vec<String>,
    pub rows: Vec<TableRow>,
}

impl TableJson {
    pub fn new(quantity: &str, table: &Table) -> Self {
        let arity = table.header.len() - 1;
        TableJson {
            quantity: quantity.to_string(),
            variables: table.header[..arity].to_vec(),
            rows: table
                .rows
                .iter()
                .map(|row| TableRow {
                    args: row[..arity].to_vec(),
                    value: row[arity].clone(),
                })
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data") + "\n"
    }
}
