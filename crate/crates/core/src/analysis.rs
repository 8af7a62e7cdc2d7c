//! Structural checks on a resolution: how many entries come from the ideal,
//! which monomials they are, and the shape of the `f3` columns.
//!
//! Checks whose hypotheses fail report [`Verdict::NotApplicable`] rather
//! than passing or failing.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;
use crate::resolution::{FreeResolution, SparseMatrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    Fail,
    NotApplicable,
}

impl Verdict {
    pub fn from_bool(ok: bool) -> Self {
        if ok {
            Verdict::Pass
        } else {
            Verdict::Fail
        }
    }

    pub fn is_fail(self) -> bool {
        self == Verdict::Fail
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::NotApplicable => "n/a",
        }
    }
}

/// Entries of a matrix whose monomial lies in the ideal.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EntryCount {
    pub count: usize,
    /// `(row, col)` of each such entry, in column-major order.
    pub positions: Vec<(usize, usize)>,
    /// The monomial shared by all such entries, when there is exactly one.
    pub common: Option<Monomial>,
}

pub fn entries_from_ideal(matrix: &SparseMatrix, ideal: &MonomialIdeal) -> EntryCount {
    let hits: Vec<_> = matrix
        .entries()
        .iter()
        .filter(|e| ideal.contains(&e.value.mono()))
        .collect();
    let common = match hits.first() {
        Some(first) if hits.iter().all(|e| e.value.mono() == first.value.mono()) => {
            Some(first.value.mono())
        }
        _ => None,
    };
    EntryCount {
        count: hits.len(),
        positions: hits.iter().map(|e| (e.row, e.col)).collect(),
        common,
    }
}

/// The usual standing hypotheses: m-primary with `n >= 4`.
fn in_range(ideal: &MonomialIdeal) -> bool {
    ideal.is_m_primary() && ideal.len() >= 4
}

/// `f2` has at most `2n - 2` entries from the ideal.
pub fn check_f2_bound(res: &FreeResolution) -> Verdict {
    if !in_range(&res.ideal) {
        return Verdict::NotApplicable;
    }
    let n = res.n();
    Verdict::from_bool(entries_from_ideal(&res.f2, &res.ideal).count <= 2 * n - 2)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct F3GenericVerdicts {
    /// Every `f3` entry is a pure power.
    pub pure_power: Verdict,
    /// All `f3` entries from the ideal are the same monomial.
    pub one_pure: Verdict,
    /// At most `n - 2` entries of `f3` come from the ideal.
    pub bound_n_minus_2: Verdict,
}

/// Checks on `f3` for a generic ideal. The counting checks need `n >= 4`
/// and `m >= 2`.
pub fn check_f3_generic_suite(res: &FreeResolution) -> Result<F3GenericVerdicts> {
    let ideal = &res.ideal;
    if !ideal.is_generic() {
        return Err(Error::NotGeneric);
    }
    if !ideal.is_m_primary() {
        return Ok(F3GenericVerdicts {
            pure_power: Verdict::NotApplicable,
            one_pure: Verdict::NotApplicable,
            bound_n_minus_2: Verdict::NotApplicable,
        });
    }
    let pure_power = Verdict::from_bool(
        res.f3
            .entries()
            .iter()
            .all(|e| e.value.mono().is_pure_power()),
    );
    if res.n() < 4 || res.m() < 2 {
        return Ok(F3GenericVerdicts {
            pure_power,
            one_pure: Verdict::NotApplicable,
            bound_n_minus_2: Verdict::NotApplicable,
        });
    }
    let found = entries_from_ideal(&res.f3, ideal);
    Ok(F3GenericVerdicts {
        pure_power,
        one_pure: Verdict::from_bool(found.count == 0 || found.common.is_some()),
        bound_n_minus_2: Verdict::from_bool(found.count <= res.n() - 2),
    })
}

/// Number of nonzero entries in each column of `f3`.
pub fn f3_column_support(res: &FreeResolution) -> Vec<usize> {
    res.f3.column_supports()
}

/// Three nonzero entries, each a pure power, in three different variables.
fn is_pure_triple(matrix: &SparseMatrix, col: usize) -> bool {
    let vars: Vec<Option<usize>> = matrix
        .column(col)
        .map(|e| e.value.mono().pure_power_variable())
        .collect();
    vars.len() == 3
        && vars.iter().all(Option::is_some)
        && vars[0] != vars[1]
        && vars[0] != vars[2]
        && vars[1] != vars[2]
}

/// For m-primary ideals: generic exactly when every `f3` column has three
/// entries, and every three-entry column is three pure powers in distinct
/// variables.
pub fn check_column_support(res: &FreeResolution) -> Verdict {
    if !res.ideal.is_m_primary() {
        return Verdict::NotApplicable;
    }
    let supports = f3_column_support(res);
    let all_three = supports.iter().all(|&s| s == 3);
    let triples_pure = supports
        .iter()
        .enumerate()
        .filter(|&(_, &s)| s == 3)
        .all(|(c, _)| is_pure_triple(&res.f3, c));
    Verdict::from_bool(res.ideal.is_generic() == all_three && triples_pure)
}

/// Rows of `f3` with at least one nonzero entry, all of which lie in the
/// ideal. No row operations are applied first.
pub fn rows_contained_in_ideal(res: &FreeResolution) -> usize {
    (0..res.f3.rows())
        .filter(|&r| {
            let mut row = res.f3.row(r).peekable();
            row.peek().is_some() && row.all(|e| res.ideal.contains(&e.value.mono()))
        })
        .count()
}

/// An `f3` column with more than three entries together with a row whose
/// generator pair shares a positive exponent, if one exists.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SharedDegreeColumn {
    pub column: usize,
    pub row: Option<usize>,
    pub pair: Option<(usize, usize)>,
}

pub fn locate_shared_degree_columns(res: &FreeResolution) -> Vec<SharedDegreeColumn> {
    let supports = f3_column_support(res);
    supports
        .iter()
        .enumerate()
        .filter(|&(_, &s)| s > 3)
        .map(|(column, _)| {
            let hit = res.f3.column(column).map(|e| e.row).find(|&r| {
                res.provenance2.get(r).is_some_and(|&(i, j)| {
                    res.ideal.gen(i).shares_positive_degree(&res.ideal.gen(j))
                })
            });
            SharedDegreeColumn {
                column,
                row: hit,
                pair: hit.map(|r| res.provenance2[r]),
            }
        })
        .collect()
}

/// For generic m-primary ideals with `n >= 5`: `f3` has `n - 2` entries
/// from the ideal exactly when `f2` has `2n - 2`.
pub fn check_sharp_equality(res: &FreeResolution) -> Verdict {
    let n = res.n();
    if !in_range(&res.ideal) || n < 5 || !res.ideal.is_generic() {
        return Verdict::NotApplicable;
    }
    let f3_sharp = entries_from_ideal(&res.f3, &res.ideal).count == n - 2;
    let f2_sharp = entries_from_ideal(&res.f2, &res.ideal).count == 2 * n - 2;
    Verdict::from_bool(f3_sharp == f2_sharp)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdicts {
    pub f2_bound: Verdict,
    pub f3_pure_power: Verdict,
    pub f3_one_pure: Verdict,
    pub f3_bound: Verdict,
    pub column_support: Verdict,
    pub rows_bound: Verdict,
    pub shared_degree: Verdict,
    pub sharp_equality: Verdict,
}

impl Verdicts {
    pub fn named(&self) -> [(&'static str, Verdict); 8] {
        [
            ("f2_bound", self.f2_bound),
            ("f3_pure_power", self.f3_pure_power),
            ("f3_one_pure", self.f3_one_pure),
            ("f3_bound", self.f3_bound),
            ("column_support", self.column_support),
            ("rows_bound", self.rows_bound),
            ("shared_degree", self.shared_degree),
            ("sharp_equality", self.sharp_equality),
        ]
    }

    pub fn any_fail(&self) -> bool {
        self.named().iter().any(|(_, v)| v.is_fail())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub n: usize,
    pub m: usize,
    pub generic: bool,
    pub m_primary: bool,
    pub f2_entries_from_ideal: EntryCount,
    pub f3_entries_from_ideal: EntryCount,
    pub f3_column_support: Vec<usize>,
    pub f3_rows_in_ideal: usize,
    /// False for non-generic ideals: the row count is taken as is.
    pub rows_normalized: bool,
    pub shared_degree_columns: Vec<SharedDegreeColumn>,
    pub verdicts: Verdicts,
}

impl AnalysisReport {
    pub fn has_failure(&self) -> bool {
        self.verdicts.any_fail()
    }
}

pub fn analyze(res: &FreeResolution) -> AnalysisReport {
    let ideal = &res.ideal;
    let generic = ideal.is_generic();
    let m_primary = ideal.is_m_primary();
    let na = F3GenericVerdicts {
        pure_power: Verdict::NotApplicable,
        one_pure: Verdict::NotApplicable,
        bound_n_minus_2: Verdict::NotApplicable,
    };
    let f3_suite = check_f3_generic_suite(res).unwrap_or(na);
    let rows = rows_contained_in_ideal(res);
    let rows_bound = if generic && in_range(ideal) && res.m() >= 2 {
        Verdict::from_bool(rows <= res.n() - 2)
    } else {
        Verdict::NotApplicable
    };
    let shared = locate_shared_degree_columns(res);
    let shared_degree = if shared.is_empty() {
        Verdict::NotApplicable
    } else {
        Verdict::from_bool(shared.iter().all(|c| c.pair.is_some()))
    };
    AnalysisReport {
        n: res.n(),
        m: res.m(),
        generic,
        m_primary,
        f2_entries_from_ideal: entries_from_ideal(&res.f2, ideal),
        f3_entries_from_ideal: entries_from_ideal(&res.f3, ideal),
        f3_column_support: f3_column_support(res),
        f3_rows_in_ideal: rows,
        rows_normalized: generic,
        shared_degree_columns: shared,
        verdicts: Verdicts {
            f2_bound: check_f2_bound(res),
            f3_pure_power: f3_suite.pure_power,
            f3_one_pure: f3_suite.one_pure,
            f3_bound: f3_suite.bound_n_minus_2,
            column_support: check_column_support(res),
            rows_bound,
            shared_degree,
            sharp_equality: check_sharp_equality(res),
        },
    }
}
