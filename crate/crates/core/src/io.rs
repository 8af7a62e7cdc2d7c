//! Text and JSON formats.
//!
//! Ideal files hold one generator per line, either as an exponent triple
//! `a b c` or as a monomial such as `x^3*y*z^2` (factors may be omitted).
//! Blank lines and lines starting with `#` are skipped.
//!
//! Resolutions serialize to JSON with a fixed key order. Matrix entries are
//! `[row, col, coeff, [a, b, c]]` with the coefficient as a string such as
//! `"-1"` or `"3/2"`. All indices are zero-based.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::analysis::AnalysisReport;
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::{Coeff, Monomial, ScalarMonomial, MAX_EXPONENT};
use crate::resolution::{Entry, FreeResolution, SparseMatrix};
use crate::verify::Certificate;

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn parse_exponent(text: &str, line: usize) -> Result<u32> {
    let value: u64 = text
        .trim()
        .parse()
        .map_err(|_| parse_error(line, format!("bad exponent {text:?}")))?;
    if value > MAX_EXPONENT as u64 {
        return Err(Error::ExponentOverflow(value, MAX_EXPONENT));
    }
    Ok(value as u32)
}

/// Parses one generator written as `a b c` or as a product of powers.
pub fn parse_monomial(text: &str, line: usize) -> Result<Monomial> {
    let text = text.trim();
    let fields: Vec<&str> = text.split_whitespace().collect();
    if fields.len() == 3 && fields.iter().all(|f| f.bytes().all(|b| b.is_ascii_digit())) {
        return Ok(Monomial::new(
            parse_exponent(fields[0], line)?,
            parse_exponent(fields[1], line)?,
            parse_exponent(fields[2], line)?,
        ));
    }
    if text == "1" {
        return Ok(Monomial::ONE);
    }
    let mut exps = [0u64; 3];
    let mut seen = [false; 3];
    for factor in text.split('*') {
        let factor = factor.trim();
        let (var, power) = match factor.split_once('^') {
            Some((v, p)) => (v.trim(), Some(p)),
            None => (factor, None),
        };
        let slot = match var {
            "x" => 0,
            "y" => 1,
            "z" => 2,
            _ => return Err(parse_error(line, format!("unknown factor {factor:?}"))),
        };
        if seen[slot] {
            return Err(parse_error(line, format!("variable {var} repeated")));
        }
        seen[slot] = true;
        exps[slot] = match power {
            Some(p) => parse_exponent(p, line)? as u64,
            None => 1,
        };
    }
    Monomial::try_new(exps[0], exps[1], exps[2])
}

/// Generators listed in an ideal file, in file order, before minimalization.
pub fn parse_generators(text: &str) -> Result<Vec<Monomial>> {
    let mut gens = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        gens.push(parse_monomial(line, k + 1)?);
    }
    Ok(gens)
}

/// Parses an ideal file. With `keep_order` the generators stay in file
/// order; otherwise they are sorted canonically.
pub fn parse_ideal(text: &str, keep_order: bool) -> Result<MonomialIdeal> {
    let gens = parse_generators(text)?;
    if keep_order {
        MonomialIdeal::with_input_order(&gens)
    } else {
        MonomialIdeal::minimalize_generators(&gens)
    }
}

/// One generator per line in the monomial notation.
pub fn format_ideal(ideal: &MonomialIdeal) -> String {
    ideal.gens().iter().map(|g| format!("{g}\n")).collect()
}

#[derive(Serialize, Deserialize)]
struct MatrixJson {
    rows: usize,
    cols: usize,
    row_degrees: Vec<Monomial>,
    col_degrees: Vec<Monomial>,
    entries: Vec<(usize, usize, String, Monomial)>,
}

#[derive(Serialize, Deserialize)]
struct ResolutionJson {
    ideal: Vec<Monomial>,
    betti: [usize; 4],
    f1: MatrixJson,
    f2: MatrixJson,
    f3: MatrixJson,
    provenance2: Vec<(usize, usize)>,
    #[serde(default)]
    provenance3: Vec<Vec<usize>>,
}

fn matrix_to_json(m: &SparseMatrix) -> MatrixJson {
    MatrixJson {
        rows: m.rows(),
        cols: m.cols(),
        row_degrees: m.row_degrees().to_vec(),
        col_degrees: m.col_degrees().to_vec(),
        entries: m
            .entries()
            .iter()
            .map(|e| (e.row, e.col, e.value.coeff().to_string(), e.value.mono()))
            .collect(),
    }
}

fn json_error(message: impl Into<String>) -> Error {
    Error::Json(message.into())
}

fn matrix_from_json(name: &str, m: MatrixJson) -> Result<SparseMatrix> {
    if m.rows != m.row_degrees.len() || m.cols != m.col_degrees.len() {
        return Err(json_error(format!(
            "{name}: dimensions disagree with degree labels"
        )));
    }
    let mut entries = Vec::with_capacity(m.entries.len());
    for (row, col, coeff, mono) in m.entries {
        if row >= m.rows || col >= m.cols {
            return Err(json_error(format!(
                "{name}: entry ({row}, {col}) out of range"
            )));
        }
        let c = Coeff::from_str(coeff.trim())
            .map_err(|_| json_error(format!("{name}: bad coefficient {coeff:?}")))?;
        entries.push(Entry {
            row,
            col,
            value: ScalarMonomial::new(c, mono),
        });
    }
    Ok(SparseMatrix::new(m.row_degrees, m.col_degrees, entries))
}

pub fn resolution_to_json(res: &FreeResolution) -> String {
    let doc = ResolutionJson {
        ideal: res.ideal.gens().to_vec(),
        betti: res.ranks(),
        f1: matrix_to_json(&res.f1),
        f2: matrix_to_json(&res.f2),
        f3: matrix_to_json(&res.f3),
        provenance2: res.provenance2.clone(),
        provenance3: res.provenance3.clone(),
    };
    let mut out = serde_json::to_string_pretty(&doc).expect("plain data serializes");
    out.push('\n');
    out
}

pub fn resolution_from_json(text: &str) -> Result<FreeResolution> {
    let doc: ResolutionJson = serde_json::from_str(text).map_err(|e| json_error(e.to_string()))?;
    let ideal = MonomialIdeal::with_input_order(&doc.ideal)?;
    if ideal.gens() != doc.ideal.as_slice() {
        return Err(json_error("ideal generators are not minimal"));
    }
    let res = FreeResolution {
        ideal,
        f1: matrix_from_json("f1", doc.f1)?,
        f2: matrix_from_json("f2", doc.f2)?,
        f3: matrix_from_json("f3", doc.f3)?,
        provenance2: doc.provenance2,
        provenance3: doc.provenance3,
    };
    if res.ranks() != doc.betti {
        return Err(json_error(format!(
            "betti {:?} disagrees with matrix sizes {:?}",
            doc.betti,
            res.ranks()
        )));
    }
    if res.provenance2.len() != res.f2.cols()
        || res.provenance2.iter().any(|&(i, j)| i >= j || j >= res.n())
    {
        return Err(json_error(
            "provenance2 does not describe the columns of f2",
        ));
    }
    Ok(res)
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut out = serde_json::to_string_pretty(value).expect("plain data serializes");
    out.push('\n');
    out
}

fn sigma_label(pair: (usize, usize)) -> String {
    format!("s{}.{}", pair.0 + 1, pair.1 + 1)
}

fn tau_label(triple: &[usize]) -> String {
    let parts: Vec<String> = triple.iter().map(|i| (i + 1).to_string()).collect();
    format!("t{}", parts.join("."))
}

/// Fixed-width table: a header row, then one row per matrix row.
fn render_table(
    title: &str,
    row_labels: &[String],
    col_labels: &[String],
    m: &SparseMatrix,
) -> String {
    let mut cells = vec![vec![String::from("0"); m.cols()]; m.rows()];
    for e in m.entries() {
        cells[e.row][e.col] = e.value.to_string();
    }
    let label_w = row_labels.iter().map(String::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..m.cols())
        .map(|c| {
            cells
                .iter()
                .map(|r| r[c].len())
                .chain([col_labels[c].len()])
                .max()
                .unwrap_or(1)
        })
        .collect();
    let mut out = format!("{title} ({} x {})\n", m.rows(), m.cols());
    let _ = write!(out, "{:label_w$}", "");
    for (c, l) in col_labels.iter().enumerate() {
        let _ = write!(out, "  {:>w$}", l, w = widths[c]);
    }
    out.push('\n');
    for (r, row) in cells.iter().enumerate() {
        let _ = write!(out, "{:<label_w$}", row_labels[r]);
        for (c, cell) in row.iter().enumerate() {
            let _ = write!(out, "  {:>w$}", cell, w = widths[c]);
        }
        out.push('\n');
    }
    out
}

/// Human-readable rendering. Generators and syzygies are numbered from 1
/// here, as `s2.5` for the pair of generators 2 and 5.
pub fn render_resolution(res: &FreeResolution) -> String {
    let [b0, b1, b2, b3] = res.ranks();
    let mut out = format!("ideal: {}\nbetti: ({b0}, {b1}, {b2}, {b3})\n\n", res.ideal);
    let gens: Vec<String> = (0..res.n()).map(|i| format!("e{}", i + 1)).collect();
    let sigmas: Vec<String> = res.provenance2.iter().map(|&p| sigma_label(p)).collect();
    let taus: Vec<String> = if res.provenance3.len() == res.m() {
        res.provenance3.iter().map(|t| tau_label(t)).collect()
    } else {
        (0..res.m()).map(|k| format!("t{}", k + 1)).collect()
    };
    out += &render_table("f1", &[String::from("1")], &gens, &res.f1);
    out.push('\n');
    out += &render_table("f2", &gens, &sigmas, &res.f2);
    out.push('\n');
    out += &render_table("f3", &sigmas, &taus, &res.f3);
    out
}

fn positions(ps: &[(usize, usize)]) -> String {
    let items: Vec<String> = ps.iter().map(|(r, c)| format!("({r},{c})")).collect();
    items.join(" ")
}

pub fn render_report(report: &AnalysisReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "n                      {}", report.n);
    let _ = writeln!(out, "m                      {}", report.m);
    let _ = writeln!(out, "generic                {}", report.generic);
    let _ = writeln!(out, "m-primary              {}", report.m_primary);
    let f2 = &report.f2_entries_from_ideal;
    let _ = writeln!(
        out,
        "f2 entries from I      {}  {}",
        f2.count,
        positions(&f2.positions)
    );
    let f3 = &report.f3_entries_from_ideal;
    let common = f3
        .common
        .map(|c| format!("  all equal to {c}"))
        .unwrap_or_default();
    let _ = writeln!(
        out,
        "f3 entries from I      {}{common}  {}",
        f3.count,
        positions(&f3.positions)
    );
    let supports: Vec<String> = report
        .f3_column_support
        .iter()
        .map(usize::to_string)
        .collect();
    let _ = writeln!(out, "f3 column supports     [{}]", supports.join(", "));
    let flag = if report.rows_normalized {
        ""
    } else {
        "  (NOT-NORMALIZED)"
    };
    let _ = writeln!(
        out,
        "f3 rows inside I       {}{flag}",
        report.f3_rows_in_ideal
    );
    for c in &report.shared_degree_columns {
        let pair = c
            .pair
            .map(|(i, j)| format!("row {} from generators {} and {}", c.row.unwrap_or(0), i, j))
            .unwrap_or_else(|| String::from("no shared-degree row"));
        let _ = writeln!(out, "wide f3 column {:<7} {pair}", c.column);
    }
    out.push('\n');
    let _ = writeln!(out, "{:<22} verdict", "check");
    for (name, v) in report.verdicts.named() {
        let _ = writeln!(out, "{name:<22} {}", v.as_str());
    }
    out
}

pub fn render_certificate(cert: &Certificate) -> String {
    let mark = |b: bool| if b { "ok" } else { "FAILED" };
    let [r1, r2, r3] = cert.rank_table;
    format!(
        "complex      {}\nexactness    {}\nminimality   {}\nmultigrade   {}\nranks        ({r1}, {r2}, {r3})\npoints used  {}\n",
        mark(cert.complex_ok),
        mark(cert.exactness_ok),
        mark(cert.minimality_ok),
        mark(cert.multigrade_ok),
        cert.evaluation_points_used,
    )
}
