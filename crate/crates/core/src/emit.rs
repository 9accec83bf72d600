//! CSV and aligned-table output.

use std::str::FromStr;

use crate::census::{CensusReport, FiberRecord, PennerReport};
use crate::conegeom::IntegralClass;
use crate::dilatation::{RealInterval, RootInterval};
use crate::error::{Error, Result};
use crate::lattice::CountReport;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Table,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "csv" => Ok(Format::Csv),
            "table" => Ok(Format::Table),
            other => Err(Error::InvalidArgument(format!(
                "unknown format {other:?} (expected csv or table)"
            ))),
        }
    }
}

/// A header and rows of cells.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(header: &[&str]) -> Self {
        Table {
            header: header.iter().map(|s| s.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Csv => self.to_csv(),
            Format::Table => self.to_aligned(),
        }
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&self.header).expect("writing to memory");
        for row in &self.rows {
            w.write_record(row).expect("writing to memory");
        }
        String::from_utf8(w.into_inner().expect("writing to memory")).expect("cells are UTF-8")
    }

    pub fn from_csv(text: &str) -> Result<Table> {
        let mut r = csv::Reader::from_reader(text.as_bytes());
        let header = r
            .headers()
            .map_err(|e| Error::InvalidArgument(e.to_string()))?
            .iter()
            .map(str::to_string)
            .collect();
        let rows = r
            .records()
            .map(|rec| {
                rec.map(|rec| rec.iter().map(str::to_string).collect())
                    .map_err(|e| Error::InvalidArgument(e.to_string()))
            })
            .collect::<Result<_>>()?;
        Ok(Table { header, rows })
    }

    /// Right-aligned columns separated by two spaces.
    pub fn to_aligned(&self) -> String {
        let mut widths: Vec<usize> = self.header.iter().map(|h| h.chars().count()).collect();
        for row in &self.rows {
            for (w, cell) in widths.iter_mut().zip(row) {
                *w = (*w).max(cell.chars().count());
            }
        }
        let line = |cells: &[String]| -> String {
            let parts: Vec<String> = cells
                .iter()
                .zip(&widths)
                .map(|(c, w)| format!("{c:>w$}"))
                .collect();
            parts.join("  ")
        };
        let mut out = line(&self.header);
        out.push('\n');
        for row in &self.rows {
            out.push_str(&line(row));
            out.push('\n');
        }
        out
    }
}

pub fn census_table(report: &CensusReport) -> Table {
    let mut t = Table::new(&["genus", "count_raw", "count_orbits", "undecided", "upper_bound"]);
    for row in &report.rows {
        t.push(vec![
            row.genus.to_string(),
            row.count_raw().to_string(),
            row.count_orbits.to_string(),
            row.undecided().to_string(),
            row.upper_bound.to_string(),
        ]);
    }
    t
}

const RECORD_HEADER: [&str; 8] = [
    "status",
    "genus",
    "class",
    "norm",
    "punctures",
    "lambda",
    "log_lambda",
    "normalized",
];

/// Every member and borderline record of a census, at full precision.
pub fn records_table(report: &CensusReport) -> Table {
    let mut t = Table::new(&RECORD_HEADER);
    for row in &report.rows {
        for (status, recs) in [("member", &row.members), ("undecided", &row.borderline)] {
            for rec in recs {
                t.push(record_cells(status, rec));
            }
        }
    }
    t
}

pub fn record_cells(status: &str, rec: &FiberRecord) -> Vec<String> {
    vec![
        status.to_string(),
        rec.genus.to_string(),
        rec.class.to_string(),
        rec.norm.to_string(),
        rec.punctures.to_string(),
        rec.lambda.to_string(),
        rec.log_lambda.to_string(),
        rec.normalized.to_string(),
    ]
}

/// Reads back a records table written by [`records_table`].
pub fn parse_records(text: &str) -> Result<Vec<(String, FiberRecord)>> {
    let table = Table::from_csv(text)?;
    if table.header != RECORD_HEADER {
        return Err(Error::InvalidArgument(format!(
            "unexpected header {:?}",
            table.header
        )));
    }
    let int = |s: &str| -> Result<i64> {
        s.parse()
            .map_err(|_| Error::InvalidArgument(format!("not an integer: {s:?}")))
    };
    table
        .rows
        .iter()
        .map(|r| {
            if r.len() != RECORD_HEADER.len() {
                return Err(Error::InvalidArgument(format!("row has {} cells", r.len())));
            }
            Ok((
                r[0].clone(),
                FiberRecord {
                    genus: int(&r[1])?,
                    class: IntegralClass::from_str(&r[2])?,
                    norm: int(&r[3])?,
                    punctures: int(&r[4])?,
                    lambda: RootInterval::from_str(&r[5])?,
                    log_lambda: RealInterval::from_str(&r[6])?,
                    normalized: RealInterval::from_str(&r[7])?,
                },
            ))
        })
        .collect()
}

pub fn count_table(reports: &[CountReport]) -> Table {
    let mut t = Table::new(&["g", "total", "primitive_exact", "primitive_ie", "lower_bound"]);
    for r in reports {
        t.push(vec![
            r.genus.to_string(),
            r.total.to_string(),
            r.primitive_exact.to_string(),
            r.primitive_ie.to_string(),
            r.lower_bound.map(|b| format!("{b:.6}")).unwrap_or_default(),
        ]);
    }
    t
}

pub fn penner_table(report: &PennerReport) -> Table {
    let mut t = Table::new(&["g", "class", "status", "norm_log_lambda", "distance"]);
    for e in &report.entries {
        match &e.outcome {
            Ok(rec) => t.push(vec![
                e.g.to_string(),
                e.class.to_string(),
                "fiber".into(),
                rec.norm_log_lambda().to_string(),
                format!("{:.3e}", report.distance(rec)),
            ]),
            Err(reason) => t.push(vec![
                e.g.to_string(),
                e.class.to_string(),
                reason.clone(),
                String::new(),
                String::new(),
            ]),
        }
    }
    t
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::census::run_census;
    use crate::manifold::load;
    use crate::rational::parse_rational;
    use num_bigint::BigInt;
    use num_rational::BigRational;
    use proptest::prelude::*;

    #[test]
    fn empty_census_has_header_only() {
        let m = load("synthetic_square.json").unwrap();
        let r = run_census(&m, 1.0, 2..=2, &parse_rational("1e-9").unwrap()).unwrap();
        assert_eq!(
            records_table(&r).to_csv(),
            "status,genus,class,norm,punctures,lambda,log_lambda,normalized\n"
        );
        let mut empty = r.clone();
        empty.rows.clear();
        assert_eq!(
            census_table(&empty).to_csv(),
            "genus,count_raw,count_orbits,undecided,upper_bound\n"
        );
    }

    #[test]
    fn census_csv_and_records_round_trip() {
        let m = load("synthetic_square.json").unwrap();
        let r = run_census(&m, 2.0, 2..=6, &parse_rational("1e-9").unwrap()).unwrap();
        let csv = census_table(&r).to_csv();
        assert!(csv.starts_with("genus,count_raw,count_orbits,undecided,upper_bound\n2,1,1,0,49\n"));
        let text = records_table(&r).to_csv();
        // Classes contain commas and must be quoted.
        assert!(text.contains("\"(1,0)\""));
        let back = parse_records(&text).unwrap();
        let original: Vec<FiberRecord> = r.rows.iter().flat_map(|row| row.members.clone()).collect();
        assert_eq!(back.into_iter().map(|(_, rec)| rec).collect::<Vec<_>>(), original);
    }

    #[test]
    fn aligned_table_columns() {
        let mut t = Table::new(&["a", "long_header"]);
        t.push(vec!["12345".into(), "1".into()]);
        assert_eq!(t.to_aligned(), "    a  long_header\n12345            1\n");
    }

    fn arb_record() -> impl Strategy<Value = FiberRecord> {
        (
            proptest::collection::vec(-1000i64..1000, 1..5),
            0i64..500,
            0i64..10,
            1i64..1_000_000,
            1i64..1_000_000,
            0i64..1_000_000,
            -1e6f64..1e6,
            0f64..10.0,
        )
            .prop_map(|(coords, genus, punctures, p, q, extra, lo, width)| {
                let lo_r = BigRational::new(BigInt::from(p), BigInt::from(q));
                let hi_r = &lo_r + BigRational::new(BigInt::from(extra), BigInt::from(q + 1));
                FiberRecord {
                    class: IntegralClass::new(coords),
                    norm: 2 * genus - 2,
                    genus,
                    punctures,
                    lambda: RootInterval::new(lo_r, hi_r),
                    log_lambda: RealInterval::new(lo, lo + width),
                    normalized: RealInterval::new(lo * 3.0, lo * 3.0 + width),
                }
            })
    }

    proptest! {
        #[test]
        fn records_survive_csv(recs in proptest::collection::vec(arb_record(), 0..8)) {
            let mut t = Table::new(&RECORD_HEADER);
            for r in &recs {
                t.push(record_cells("member", r));
            }
            let back: Vec<FiberRecord> = parse_records(&t.to_csv()).unwrap().into_iter().map(|(_, r)| r).collect();
            prop_assert_eq!(back, recs);
        }

        #[test]
        fn arbitrary_cells_survive_csv(cells in proptest::collection::vec(proptest::collection::vec("[ -~\n\"]{0,12}", 3), 0..6)) {
            let mut t = Table::new(&["x", "y", "z"]);
            for row in &cells {
                t.push(row.clone());
            }
            let back = Table::from_csv(&t.to_csv()).unwrap();
            prop_assert_eq!(back, t);
        }
    }
}
