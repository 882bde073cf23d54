//! The iterative non-existence driver.
//!
//! One iteration: given a degree cap `nmax`, sieve the candidate degrees,
//! minimise the subtracted profile term over them, round the resulting
//! exponent bound up ([`dec_ceil`]), convert it to a root-discriminant
//! bound (`p^C`, rounded up again), and read the next degree cap off the
//! discriminant table.  Iterate until the candidate set is empty
//! ([`ProofOutcome::Empty`] — no field survives) or the cap stops
//! shrinking ([`ProofOutcome::Residual`] — the listed degrees withstand
//! this argument and need separate treatment).
//!
//! Row 0 uses the profile-free bound `N + 1 + N/(p−1)`, valid before any
//! degree information exists.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::bounds::{self, BoundsError};
use crate::exact::{dec_ceil, pow_upper, Decimal3, ExactError, Rational};
use crate::odlyzko::{DiscriminantTable, OdlyzkoError};
use crate::sieve::DegreeConstraints;

#[derive(Debug, Error)]
pub enum FixpointError {
    #[error(transparent)]
    Bounds(#[from] BoundsError),
    #[error(transparent)]
    Exact(#[from] ExactError),
    #[error(transparent)]
    Odlyzko(#[from] OdlyzkoError),
    #[error("request is for p = {request}, constraints are for p = {constraints}")]
    MismatchedPrime { request: u32, constraints: u32 },
    #[error("table is for grh={table_grh}, totally_real={table_real}; request wants grh={request_grh}, totally_real={request_real}")]
    TableMismatch {
        table_grh: bool,
        table_real: bool,
        request_grh: bool,
        request_real: bool,
    },
    #[error("p-length {p_length} exceeds the maximum {allowed} for representations of dimension {max_dimension}")]
    LengthVsDimension { p_length: u32, max_dimension: u32, allowed: u32 },
}

/// What to prove: the prime, the p-length of the image, the discriminant
/// hypotheses, and the degree sieve.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProofRequest {
    pub p: u32,
    pub p_length: u32,
    pub grh: bool,
    pub totally_real: bool,
    pub constraints: DegreeConstraints,
    /// Dimension of the representation, when known; bounds the admissible
    /// p-length (a unipotent subgroup of `GL_d` has class below `2^length`).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_dimension: Option<u32>,
}

/// One row of the computation: the cap that went in, the minimising
/// degree, and the bounds that came out.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IterationRow {
    /// Degree cap in force during this iteration; `None` for row 0.
    pub nmax_in: Option<u32>,
    /// Minimum of the subtracted profile term, `None` for row 0.
    pub min_value: Option<Rational>,
    /// Degree attaining the minimum.
    pub argmin_degree: Option<u32>,
    /// Exponent bound: root discriminant < p^`c_upper`.
    pub c_upper: Decimal3,
    /// Root-discriminant bound, rounded up.
    pub rd_upper: Decimal3,
    /// Largest degree the table leaves open under `rd_upper`.
    pub nmax_out: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ProofOutcome {
    /// No candidate degree survives: the representation does not exist.
    Empty,
    /// These degrees resist the iteration and need a separate argument.
    Residual(Vec<u32>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProofTrace {
    pub request: ProofRequest,
    pub rows: Vec<IterationRow>,
    pub outcome: ProofOutcome,
}

impl ProofTrace {
    /// The strict degree bounds in row order, ending with the final one:
    /// `[280, 88, 40, 21]` reads "n < 280, then n < 88, …".
    pub fn bound_chain(&self) -> Vec<u32> {
        self.rows.iter().map(|row| row.nmax_out + 1).collect()
    }
}

/// Run the iteration against an explicit discriminant table (its
/// hypotheses must match the request).
pub fn run(request: &ProofRequest, table: &DiscriminantTable) -> Result<ProofTrace, FixpointError> {
    if request.p != request.constraints.p() {
        return Err(FixpointError::MismatchedPrime {
            request: request.p,
            constraints: request.constraints.p(),
        });
    }
    if table.grh() != request.grh || table.totally_real() != request.totally_real {
        return Err(FixpointError::TableMismatch {
            table_grh: table.grh(),
            table_real: table.totally_real(),
            request_grh: request.grh,
            request_real: request.totally_real,
        });
    }
    if let Some(d) = request.max_dimension {
        let allowed = ceil_log2(d.max(1));
        if request.p_length > allowed {
            return Err(FixpointError::LengthVsDimension {
                p_length: request.p_length,
                max_dimension: d,
                allowed,
            });
        }
    }

    let base = bounds::c_base(request.p, request.p_length);
    let mut rows = Vec::new();

    let c0 = dec_ceil(base, 3);
    let rd0 = pow_upper(request.p, c0, 3)?;
    let nmax0 = table.max_degree(rd0)?;
    rows.push(IterationRow {
        nmax_in: None,
        min_value: None,
        argmin_degree: None,
        c_upper: c0,
        rd_upper: rd0,
        nmax_out: nmax0,
    });

    let mut nmax = nmax0;
    loop {
        let candidates = request.constraints.candidate_degrees(nmax);
        if candidates.is_empty() {
            return Ok(ProofTrace {
                request: request.clone(),
                rows,
                outcome: ProofOutcome::Empty,
            });
        }
        let minimum = bounds::min_over_degrees(&candidates, request.p, request.p_length)?;
        let c = dec_ceil(base - minimum.value, 3);
        let rd = pow_upper(request.p, c, 3)?;
        let next = table.max_degree(rd)?;
        if next >= nmax {
            // The bound stopped shrinking; everything still in play is residual.
            return Ok(ProofTrace {
                request: request.clone(),
                rows,
                outcome: ProofOutcome::Residual(candidates),
            });
        }
        rows.push(IterationRow {
            nmax_in: Some(nmax),
            min_value: Some(minimum.value),
            argmin_degree: Some(minimum.degree),
            c_upper: c,
            rd_upper: rd,
            nmax_out: next,
        });
        nmax = next;
    }
}

/// [`run`] against the bundled table for the request's hypotheses.
pub fn run_bundled(request: &ProofRequest) -> Result<ProofTrace, FixpointError> {
    run(request, DiscriminantTable::bundled(request.grh, request.totally_real)?)
}

fn ceil_log2(d: u32) -> u32 {
    32 - (d - 1).leading_zeros()
}

/// Render the iteration as the four-column bound table.
///
/// Columns: strict degree bound in force (`inf` on row 0), minimised
/// profile term (`?` on row 0), exponent bound, root-discriminant bound.
/// A trailing row carries the final degree bound.  Columns are
/// left-aligned and two spaces apart; integer decimals print bare.
pub fn render_text(trace: &ProofTrace) -> String {
    let mut grid: Vec<[String; 4]> = Vec::new();
    grid.push(["n<".into(), "min".into(), "C<".into(), "rd<".into()]);
    for row in &trace.rows {
        grid.push([
            row.nmax_in.map_or_else(|| "inf".into(), |n| (n + 1).to_string()),
            row.min_value.map_or_else(|| "?".into(), |m| m.to_string()),
            row.c_upper.to_trimmed_string(),
            row.rd_upper.to_trimmed_string(),
        ]);
    }
    if let Some(last) = trace.rows.last() {
        grid.push([(last.nmax_out + 1).to_string(), String::new(), String::new(), String::new()]);
    }

    let mut widths = [0usize; 4];
    for row in &grid {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let mut out = String::new();
    for row in &grid {
        let mut line = String::new();
        for (cell, width) in row.iter().zip(widths) {
            if !line.is_empty() {
                line.push_str("  ");
            }
            line.push_str(cell);
            line.extend(std::iter::repeat_n(' ', width - cell.len()));
        }
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

/// Lossless JSON form of a trace (see [`render_json`]'s row schema);
/// [`parse_json`] inverts it.
#[derive(Serialize, Deserialize)]
struct RowJson {
    nmax_in: Option<u32>,
    min_num: Option<i64>,
    min_den: Option<i64>,
    argmin: Option<u32>,
    c_upper: String,
    rd_upper: String,
    nmax_out: u32,
}

#[derive(Serialize, Deserialize)]
struct TraceJson {
    request: ProofRequest,
    rows: Vec<RowJson>,
    outcome: ProofOutcome,
}

pub fn render_json(trace: &ProofTrace) -> String {
    let rows = trace
        .rows
        .iter()
        .map(|row| RowJson {
            nmax_in: row.nmax_in,
            min_num: row.min_value.map(|m| {
                i64::try_from(m.numerator()).expect("trace minima fit in i64")
            }),
            min_den: row.min_value.map(|m| {
                i64::try_from(m.denominator()).expect("trace minima fit in i64")
            }),
            argmin: row.argmin_degree,
            c_upper: row.c_upper.to_string(),
            rd_upper: row.rd_upper.to_string(),
            nmax_out: row.nmax_out,
        })
        .collect();
    let json = TraceJson { request: trace.request.clone(), rows, outcome: trace.outcome.clone() };
    let mut text = serde_json::to_string_pretty(&json).expect("trace serialises");
    text.push('\n');
    text
}

#[derive(Debug, Error)]
pub enum TraceParseError {
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error("row {index}: numerator and denominator must be both present or both absent")]
    HalfRational { index: usize },
    #[error("row {index}: {text:?} is not a three-place decimal")]
    BadDecimal { index: usize, text: String },
}

pub fn parse_json(text: &str) -> Result<ProofTrace, TraceParseError> {
    let json: TraceJson = serde_json::from_str(text)?;
    let mut rows = Vec::with_capacity(json.rows.len());
    for (index, row) in json.rows.into_iter().enumerate() {
        let min_value = match (row.min_num, row.min_den) {
            (Some(n), Some(d)) => Some(Rational::new(n as i128, d as i128)),
            (None, None) => None,
            _ => return Err(TraceParseError::HalfRational { index }),
        };
        let parse = |text: &str| {
            text.parse::<Decimal3>().map_err(|_| TraceParseError::BadDecimal {
                index,
                text: text.to_owned(),
            })
        };
        rows.push(IterationRow {
            nmax_in: row.nmax_in,
            min_value,
            argmin_degree: row.argmin,
            c_upper: parse(&row.c_upper)?,
            rd_upper: parse(&row.rd_upper)?,
            nmax_out: row.nmax_out,
        });
    }
    Ok(ProofTrace { request: json.request, rows, outcome: json.outcome })
}
