//! Root-discriminant lower-bound tables (Odlyzko-style bounds).
//!
//! A table is a list of rows `(T, B)`, each certifying that every number
//! field of the table's kind (conditional on GRH or not, totally real or
//! not) with degree ≥ `T` has root discriminant ≥ `B`.  The two queries
//! are the inverse directions of that statement:
//!
//! * [`DiscriminantTable::max_degree`] — given a proof that the root
//!   discriminant is *strictly below* `rd_upper`, the largest degree not
//!   excluded by any row;
//! * [`DiscriminantTable::min_root_disc`] — the best lower bound the table
//!   gives at a fixed degree (1.000 when no row applies).
//!
//! Three tables ship with the crate; [`DiscriminantTable::load`] reads the
//! same format from disk so sharper tables can be substituted.

use std::path::Path;
use std::str::FromStr;
use std::sync::OnceLock;

use thiserror::Error;

use crate::exact::Decimal3;

#[derive(Debug, Error)]
pub enum OdlyzkoError {
    #[error("cannot read table: {0}")]
    Io(#[from] std::io::Error),
    #[error("table line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("table has no `#grh=<0|1> totally_real=<0|1>` header line")]
    MissingHeader,
    #[error("table rows must have strictly increasing degrees and nondecreasing bounds (line {line})")]
    NotMonotonic { line: usize },
    #[error("no bundled table for grh={grh}, totally_real={totally_real}")]
    NoBundledTable { grh: bool, totally_real: bool },
    #[error("table certifies nothing above root discriminant {max}, queried with {queried}")]
    OutOfRange { max: Decimal3, queried: Decimal3 },
    #[error("root-discriminant query {0} is below 1.000, where no field exists anyway")]
    QueryBelowOne(Decimal3),
}

/// One certified implication: degree ≥ `min_degree` forces root
/// discriminant ≥ `rd_bound`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TableRow {
    pub min_degree: u32,
    pub rd_bound: Decimal3,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiscriminantTable {
    grh: bool,
    totally_real: bool,
    rows: Vec<TableRow>,
}

static GRH_GENERAL: OnceLock<DiscriminantTable> = OnceLock::new();
static GRH_TOTALLY_REAL: OnceLock<DiscriminantTable> = OnceLock::new();
static UNCONDITIONAL_GENERAL: OnceLock<DiscriminantTable> = OnceLock::new();

impl DiscriminantTable {
    /// Parse the on-disk format: `#` comment lines, one
    /// `#grh=<0|1> totally_real=<0|1>` header, then `degree,bound` rows.
    pub fn parse(text: &str) -> Result<DiscriminantTable, OdlyzkoError> {
        let mut header: Option<(bool, bool)> = None;
        let mut rows: Vec<TableRow> = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let trimmed = raw.trim();
            if trimmed.is_empty() {
                continue;
            }
            if let Some(rest) = trimmed.strip_prefix('#') {
                if let Some(h) = parse_header(rest) {
                    if header.replace(h).is_some() {
                        return Err(OdlyzkoError::Parse {
                            line,
                            message: "duplicate header".into(),
                        });
                    }
                }
                continue;
            }
            let (deg_text, bound_text) =
                trimmed.split_once(',').ok_or_else(|| OdlyzkoError::Parse {
                    line,
                    message: format!("expected `degree,bound`, got {trimmed:?}"),
                })?;
            let min_degree: u32 =
                deg_text.trim().parse().map_err(|e| OdlyzkoError::Parse {
                    line,
                    message: format!("bad degree: {e}"),
                })?;
            let rd_bound =
                Decimal3::from_str(bound_text.trim()).map_err(|e| OdlyzkoError::Parse {
                    line,
                    message: format!("bad bound: {e}"),
                })?;
            if min_degree == 0 || rd_bound < Decimal3::ONE {
                return Err(OdlyzkoError::Parse {
                    line,
                    message: "degree must be positive and bound at least 1.000".into(),
                });
            }
            if let Some(prev) = rows.last() {
                if min_degree <= prev.min_degree || rd_bound < prev.rd_bound {
                    return Err(OdlyzkoError::NotMonotonic { line });
                }
            }
            rows.push(TableRow { min_degree, rd_bound });
        }
        let (grh, totally_real) = header.ok_or(OdlyzkoError::MissingHeader)?;
        Ok(DiscriminantTable { grh, totally_real, rows })
    }

    pub fn load(path: &Path) -> Result<DiscriminantTable, OdlyzkoError> {
        DiscriminantTable::parse(&std::fs::read_to_string(path)?)
    }

    /// The table shipped with the crate for this hypothesis pair.  There is
    /// no bundled unconditional totally-real table.
    pub fn bundled(
        grh: bool,
        totally_real: bool,
    ) -> Result<&'static DiscriminantTable, OdlyzkoError> {
        let (cell, text) = match (grh, totally_real) {
            (true, false) => (&GRH_GENERAL, include_str!("../data/grh_general.tbl")),
            (true, true) => (
                &GRH_TOTALLY_REAL,
                include_str!("../data/grh_totally_real.tbl"),
            ),
            (false, false) => (
                &UNCONDITIONAL_GENERAL,
                include_str!("../data/unconditional_general.tbl"),
            ),
            (false, true) => {
                return Err(OdlyzkoError::NoBundledTable { grh, totally_real })
            }
        };
        Ok(cell.get_or_init(|| {
            DiscriminantTable::parse(text).expect("bundled table is well-formed")
        }))
    }

    /// Conventional file name for this hypothesis pair, used when loading
    /// replacement tables from a directory.
    pub fn file_name(grh: bool, totally_real: bool) -> &'static str {
        match (grh, totally_real) {
            (true, false) => "grh_general.tbl",
            (true, true) => "grh_totally_real.tbl",
            (false, false) => "unconditional_general.tbl",
            (false, true) => "unconditional_totally_real.tbl",
        }
    }

    pub fn grh(&self) -> bool {
        self.grh
    }

    pub fn totally_real(&self) -> bool {
        self.totally_real
    }

    pub fn rows(&self) -> &[TableRow] {
        &self.rows
    }

    /// Largest degree compatible with root discriminant < `rd_upper`.
    ///
    /// A row `(T, B)` with `B ≥ rd_upper` excludes every degree ≥ `T`
    /// (equality excludes too: the hypothesis is strict).  Fails when even
    /// the last row certifies less than `rd_upper` — a sharper table is
    /// needed, silently returning the last row would be unsound.
    pub fn max_degree(&self, rd_upper: Decimal3) -> Result<u32, OdlyzkoError> {
        if rd_upper < Decimal3::ONE {
            return Err(OdlyzkoError::QueryBelowOne(rd_upper));
        }
        self.rows
            .iter()
            .find(|row| row.rd_bound >= rd_upper)
            .map(|row| row.min_degree - 1)
            .ok_or_else(|| OdlyzkoError::OutOfRange {
                max: self.rows.last().map(|r| r.rd_bound).unwrap_or(Decimal3::ONE),
                queried: rd_upper,
            })
    }

    /// Best root-discriminant lower bound at `degree`; 1.000 when the table
    /// has nothing to say (every root discriminant is at least 1).
    pub fn min_root_disc(&self, degree: u32) -> Decimal3 {
        self.rows
            .iter()
            .take_while(|row| row.min_degree <= degree)
            .last()
            .map(|row| row.rd_bound)
            .unwrap_or(Decimal3::ONE)
    }
}

fn parse_header(rest: &str) -> Option<(bool, bool)> {
    // Header shape: `grh=<0|1> totally_real=<0|1>` immediately after `#`.
    let mut grh = None;
    let mut totally_real = None;
    for field in rest.split_whitespace() {
        let (key, value) = field.split_once('=')?;
        let parsed = match value {
            "0" => false,
            "1" => true,
            _ => return None,
        };
        match key {
            "grh" => grh = Some(parsed),
            "totally_real" => totally_real = Some(parsed),
            _ => return None,
        }
    }
    Some((grh?, totally_real?))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn d(millis: i64) -> Decimal3 {
        Decimal3::from_millis(millis)
    }

    #[test]
    fn bundled_tables_parse_and_carry_flags() {
        let general = DiscriminantTable::bundled(true, false).unwrap();
        assert!(general.grh() && !general.totally_real());
        assert_eq!(general.rows().len(), 5);

        let real = DiscriminantTable::bundled(true, true).unwrap();
        assert!(real.grh() && real.totally_real());
        assert_eq!(real.rows().len(), 7);

        let unconditional = DiscriminantTable::bundled(false, false).unwrap();
        assert!(!unconditional.grh() && !unconditional.totally_real());
        assert_eq!(unconditional.rows().len(), 5);

        assert!(matches!(
            DiscriminantTable::bundled(false, true),
            Err(OdlyzkoError::NoBundledTable { .. })
        ));
    }

    #[test]
    fn max_degree_anchor_implications() {
        let general = DiscriminantTable::bundled(true, false).unwrap();
        assert_eq!(general.max_degree(d(32_000)).unwrap(), 4799);
        assert_eq!(general.max_degree(d(28_110)).unwrap(), 839);
        assert_eq!(general.max_degree(d(27_328)).unwrap(), 659);
        assert_eq!(general.max_degree(d(22_612)).unwrap(), 199);
        assert_eq!(general.max_degree(d(15_945)).unwrap(), 55);

        let real = DiscriminantTable::bundled(true, true).unwrap();
        assert_eq!(real.max_degree(d(128_000)).unwrap(), 4799);
        assert_eq!(real.max_degree(d(81_000)).unwrap(), 279);
        assert_eq!(real.max_degree(d(76_110)).unwrap(), 219);
        assert_eq!(real.max_degree(d(55_814)).unwrap(), 87);
        assert_eq!(real.max_degree(d(38_165)).unwrap(), 39);
        assert_eq!(real.max_degree(d(25_417)).unwrap(), 20);
        assert_eq!(real.max_degree(d(22_565)).unwrap(), 17);

        let unconditional = DiscriminantTable::bundled(false, false).unwrap();
        assert_eq!(unconditional.max_degree(d(15_589)).unwrap(), 79);
        assert_eq!(unconditional.max_degree(d(12_792)).unwrap(), 39);
        assert_eq!(unconditional.max_degree(d(8_000)).unwrap(), 13);
        assert_eq!(unconditional.max_degree(d(3_000)).unwrap(), 3);
        assert_eq!(unconditional.max_degree(d(2_000)).unwrap(), 2);
    }

    #[test]
    fn max_degree_between_rows_and_out_of_range() {
        let general = DiscriminantTable::bundled(true, false).unwrap();
        // Strictly between two bounds: the higher row is the first to apply.
        assert_eq!(general.max_degree(d(16_000)).unwrap(), 199);
        assert_eq!(general.max_degree(d(1_000)).unwrap(), 55);
        assert!(matches!(
            general.max_degree(d(32_001)),
            Err(OdlyzkoError::OutOfRange { .. })
        ));
        assert!(matches!(
            general.max_degree(d(999)),
            Err(OdlyzkoError::QueryBelowOne(_))
        ));
    }

    #[test]
    fn min_root_disc_lookup() {
        let general = DiscriminantTable::bundled(true, false).unwrap();
        assert_eq!(general.min_root_disc(55), Decimal3::ONE);
        assert_eq!(general.min_root_disc(56), d(15_945));
        assert_eq!(general.min_root_disc(200), d(22_612));
        assert_eq!(general.min_root_disc(4799), d(28_110));
        assert_eq!(general.min_root_disc(1_000_000), d(32_000));

        let real = DiscriminantTable::bundled(true, true).unwrap();
        assert_eq!(real.min_root_disc(17), Decimal3::ONE);
        assert_eq!(real.min_root_disc(18), d(22_565));
    }

    #[test]
    fn parse_rejects_malformed_tables() {
        assert!(matches!(
            DiscriminantTable::parse("56,15.945\n"),
            Err(OdlyzkoError::MissingHeader)
        ));
        assert!(matches!(
            DiscriminantTable::parse("#grh=1 totally_real=0\n56\n"),
            Err(OdlyzkoError::Parse { line: 2, .. })
        ));
        assert!(matches!(
            DiscriminantTable::parse("#grh=1 totally_real=0\n56,abc\n"),
            Err(OdlyzkoError::Parse { line: 2, .. })
        ));
        assert!(matches!(
            DiscriminantTable::parse("#grh=1 totally_real=0\n56,15.945\n40,16.000\n"),
            Err(OdlyzkoError::NotMonotonic { line: 3 })
        ));
        assert!(matches!(
            DiscriminantTable::parse("#grh=1 totally_real=0\n56,15.945\n60,15.000\n"),
            Err(OdlyzkoError::NotMonotonic { line: 3 })
        ));
        assert!(matches!(
            DiscriminantTable::parse("#grh=1 totally_real=0\n0,15.945\n"),
            Err(OdlyzkoError::Parse { line: 2, .. })
        ));
        assert!(matches!(
            DiscriminantTable::parse("#grh=1 totally_real=0\n#grh=1 totally_real=0\n"),
            Err(OdlyzkoError::Parse { line: 2, .. })
        ));
    }

    #[test]
    fn empty_table_parses_but_certifies_nothing() {
        let table = DiscriminantTable::parse("#grh=0 totally_real=0\n").unwrap();
        assert_eq!(table.min_root_disc(100), Decimal3::ONE);
        assert!(matches!(
            table.max_degree(d(2_000)),
            Err(OdlyzkoError::OutOfRange { .. })
        ));
    }

    #[test]
    fn load_round_trips_through_disk() {
        let dir = std::env::temp_dir().join("ramproof-odlyzko-test");
        std::fs::create_dir_all(&dir).unwrap();
        let path = dir.join("grh_general.tbl");
        std::fs::write(&path, include_str!("../data/grh_general.tbl")).unwrap();
        let loaded = DiscriminantTable::load(&path).unwrap();
        assert_eq!(&loaded, DiscriminantTable::bundled(true, false).unwrap());
        assert!(matches!(
            DiscriminantTable::load(&dir.join("missing.tbl")),
            Err(OdlyzkoError::Io(_))
        ));
    }
}
