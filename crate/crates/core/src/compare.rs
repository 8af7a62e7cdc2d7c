//! Equivalence of resolutions up to column permutation (within equal
//! multidegree) and column sign.

use crate::monomial::ScalarMonomial;
use crate::resolution::{FreeResolution, SparseMatrix};

/// A column of `actual` matched to each column of `expected`, with the sign
/// relating them (`actual = sign * expected`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColumnMatch {
    pub target: Vec<usize>,
    pub sign: Vec<i64>,
}

/// Matches columns of `expected` to columns of `actual`. Row `r` of
/// `expected` corresponds to row `row_map[r]` of `actual`, scaled by
/// `row_sign[r]`.
pub fn match_columns(
    expected: &SparseMatrix,
    actual: &SparseMatrix,
    row_map: &[usize],
    row_sign: &[i64],
) -> Option<ColumnMatch> {
    if expected.rows() != actual.rows() || expected.cols() != actual.cols() {
        return None;
    }
    let mut used = vec![false; actual.cols()];
    let mut target = Vec::with_capacity(expected.cols());
    let mut sign = Vec::with_capacity(expected.cols());
    for c in 0..expected.cols() {
        let mut moved = vec![ScalarMonomial::zero(); actual.rows()];
        for e in expected.column(c) {
            let v = e.value.clone();
            moved[row_map[e.row]] = if row_sign[e.row] < 0 { -v } else { v };
        }
        let negated: Vec<ScalarMonomial> = moved.iter().map(|v| -v.clone()).collect();
        let hit = (0..actual.cols()).find_map(|a| {
            if used[a] || actual.col_degrees()[a] != expected.col_degrees()[c] {
                return None;
            }
            let col = actual.dense_column(a);
            if col == moved {
                Some((a, 1))
            } else if col == negated {
                Some((a, -1))
            } else {
                None
            }
        })?;
        used[hit.0] = true;
        target.push(hit.0);
        sign.push(hit.1);
    }
    Some(ColumnMatch { target, sign })
}

/// `f1` equal, `f2` and `f3` equal up to column permutation within
/// multidegree and column sign (with `f3` rows following the `f2` match).
pub fn equivalent(expected: &FreeResolution, actual: &FreeResolution) -> bool {
    if expected.f1 != actual.f1 {
        return false;
    }
    let n = expected.f1.cols();
    let identity: Vec<usize> = (0..n).collect();
    let Some(m2) = match_columns(&expected.f2, &actual.f2, &identity, &vec![1; n]) else {
        return false;
    };
    match_columns(&expected.f3, &actual.f3, &m2.target, &m2.sign).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::MonomialIdeal;
    use crate::taylor::{resolve, resolve_with, ColumnOrdering, ResolveOptions};

    #[test]
    fn reordering_columns_is_equivalent() {
        let msq = MonomialIdeal::maximal_power(2);
        let a = resolve(&msq).unwrap();
        let b = resolve_with(
            &msq,
            &ResolveOptions {
                ordering: ColumnOrdering::GrevlexFirst,
                ..Default::default()
            },
        )
        .unwrap();
        assert!(equivalent(&a, &b));
        assert!(equivalent(&b, &a));
    }

    #[test]
    fn a_changed_entry_is_not_equivalent() {
        let msq = MonomialIdeal::maximal_power(2);
        let a = resolve(&msq).unwrap();
        let mut b = a.clone();
        let e = b.f3.entries()[0].clone();
        b.f3.set(e.row, e.col, ScalarMonomial::from_int(2, e.value.mono()));
        assert!(!equivalent(&a, &b));
        let mut c = a.clone();
        c.f3.negate_column(1);
        assert!(equivalent(&a, &c));
    }
}
