use std::ops::RangeInclusive;

use abcensus::spectra::GroupSpec;
use abcensus::{Exact, Limits};

use crate::render::Table;
use crate::{evaluate, CliError, CliResult, Format, Quantity};

/// Parses `a..b` (inclusive) or a single `a`; bounds are at least 1.
pub fn parse_range(s: &str) -> CliResult<RangeInclusive<u64>> {
    let bad = || CliError::Usage(format!("invalid range {s:?}; expected a..b with 1 <= a <= b"));
    let num = |t: &str| {
        if t.is_empty() || !t.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        t.parse::<u64>().map_err(|_| bad())
    };
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (num(a)?, num(b)?),
        None => {
            let a = num(s)?;
            (a, a)
        }
    };
    if lo == 0 || lo > hi {
        return Err(bad());
    }
    Ok(lo..=hi)
}

/// A quantity evaluated over a grid of inclusive ranges, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableRequest {
    pub quantity: Quantity,
    pub ranges: Vec<RangeInclusive<u64>>,
    pub format: Format,
    pub r: Option<u32>,
    pub delta: Option<u64>,
}

impl TableRequest {
    pub fn new(
        quantity: Quantity,
        ranges: &[String],
        format: Format,
        r: Option<u32>,
        delta: Option<u64>,
        cap: u128,
    ) -> CliResult<Self> {
        let ranges = ranges.iter().map(|s| parse_range(s)).collect::<CliResult<Vec<_>>>()?;
        let arity_ok = match quantity {
            Quantity::CyclicRank2 | Quantity::Subgroups => ranges.len() == 2,
            Quantity::Jordan => ranges.len() == 1,
            _ => !ranges.is_empty(),
        };
        if !arity_ok {
            return Err(CliError::Usage(format!(
                "{} does not take {} ranges",
                quantity.name(),
                ranges.len()
            )));
        }
        if quantity.needs_delta() != delta.is_some() {
            return Err(CliError::Usage("--delta is required exactly for o_delta and c_delta".into()));
        }
        if (quantity == Quantity::Jordan) != r.is_some() {
            return Err(CliError::Usage("--r is required exactly for phi_r".into()));
        }
        let cells = ranges
            .iter()
            .map(|r| (r.end() - r.start() + 1) as u128)
            .fold(1u128, |a, b| a.saturating_mul(b));
        if cells > cap {
            return Err(abcensus::Error::CapExceeded {
                what: "table cell count",
                subject: ranges
                    .iter()
                    .map(|r| format!("{}..{}", r.start(), r.end()))
                    .collect::<Vec<_>>()
                    .join(" "),
                count: cells,
                cap,
            }
            .into());
        }
        Ok(TableRequest {
            quantity,
            ranges,
            format,
            r,
            delta,
        })
    }

    fn header(&self) -> Vec<String> {
        let mut h: Vec<String> = if self.quantity == Quantity::Jordan {
            vec!["n".into()]
        } else {
            (1..=self.ranges.len()).map(|i| format!("n{i}")).collect()
        };
        h.push("value".into());
        h
    }

    fn cell<C: Exact>(&self, args: &[u64], limits: &Limits) -> CliResult<String> {
        let spec = GroupSpec::new(args.to_vec())?;
        if let Some(delta) = self.delta {
            if spec.exponent() % delta != 0 {
                return Ok("0".into());
            }
        }
        evaluate::<C>(self.quantity, &spec, self.delta, self.r, limits)
    }

    pub fn evaluate<C: Exact>(&self, limits: &Limits) -> CliResult<Table> {
        let mut rows = Vec::new();
        let mut args: Vec<u64> = self.ranges.iter().map(|r| *r.start()).collect();
        'grid: loop {
            let mut row: Vec<String> = args.iter().map(u64::to_string).collect();
            row.push(self.cell::<C>(&args, limits)?);
            rows.push(row);
            let mut k = args.len();
            loop {
                if k == 0 {
                    break 'grid;
                }
                k -= 1;
                if args[k] < *self.ranges[k].end() {
                    args[k] += 1;
                    break;
                }
                args[k] = *self.ranges[k].start();
            }
        }
        Ok(Table {
            header: self.header(),
            rows,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn strings(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn ranges() {
        assert_eq!(parse_range("1..4").unwrap(), 1..=4);
        assert_eq!(parse_range("7").unwrap(), 7..=7);
        for bad in ["0..3", "4..1", "a..b", "1..", "..3", "1...3", "-1..2", ""] {
            assert!(parse_range(bad).is_err(), "{bad}");
        }
    }

    #[test]
    fn subgroup_grid() {
        let req = TableRequest::new(Quantity::Subgroups, &strings(&["1..4", "1..4"]), Format::Csv, None, None, 100).unwrap();
        let t = req.evaluate::<u128>(&Limits::DEFAULT).unwrap();
        assert_eq!(t.rows.len(), 16);
        assert_eq!(t.rows[5], strings(&["2", "2", "5"]));
        assert_eq!(t.rows[0], strings(&["1", "1", "1"]));
    }

    #[test]
    fn jordan_column() {
        let req = TableRequest::new(Quantity::Jordan, &strings(&["1..6"]), Format::Csv, Some(2), None, 100).unwrap();
        let t = req.evaluate::<u128>(&Limits::DEFAULT).unwrap();
        let values: Vec<&str> = t.rows.iter().map(|r| r[1].as_str()).collect();
        assert_eq!(values, ["1", "3", "8", "12", "24", "24"]);
        assert_eq!(t.header, strings(&["n", "value"]));
    }

    #[test]
    fn delta_cells_outside_the_exponent_are_zero() {
        let req = TableRequest::new(Quantity::Elements, &strings(&["1..4"]), Format::Csv, None, Some(2), 100).unwrap();
        let t = req.evaluate::<u128>(&Limits::DEFAULT).unwrap();
        let values: Vec<&str> = t.rows.iter().map(|r| r[1].as_str()).collect();
        assert_eq!(values, ["0", "1", "0", "1"]);
    }

    #[test]
    fn request_validation() {
        let r = |q, ranges: &[&str], rr, d, cap| TableRequest::new(q, &strings(ranges), Format::Csv, rr, d, cap);
        assert!(matches!(r(Quantity::Subgroups, &["1..4"], None, None, 100), Err(CliError::Usage(_))));
        assert!(matches!(r(Quantity::Jordan, &["1..4"], None, None, 100), Err(CliError::Usage(_))));
        assert!(matches!(r(Quantity::Elements, &["1..4"], None, None, 100), Err(CliError::Usage(_))));
        let err = r(Quantity::Cyclic, &["1..1000", "1..1000"], None, None, 1000).unwrap_err();
        assert_eq!(err.exit_code(), 4);
    }
}
