//! Third syzygies
//! `tau_ijk = (m_ijk/m_ij) e_|ij| - (m_ijk/m_ik) e_|ik| + (m_ijk/m_jk) e_|jk|`,
//! where `|ij|` is the column of `f2` holding `sigma_ij`.

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::{Monomial, Poly, ScalarMonomial};
use crate::par::Execution;
use crate::resolution::{Entry, FreeResolution, SparseMatrix};
use crate::scarf::scarf_complex;
use crate::syzygy::s_pair;
use crate::taylor::HARD_CAP;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ThirdSyzygy {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    /// Columns of `f2` holding `sigma_ij`, `sigma_ik`, `sigma_jk`.
    pub rows: [usize; 3],
    /// Signs `+, -, +` in the order `ij, ik, jk`.
    pub entries: [ScalarMonomial; 3],
    pub multidegree: Monomial,
}

fn check_triple(ideal: &MonomialIdeal, i: usize, j: usize, k: usize) -> Result<()> {
    for x in [i, j, k] {
        ideal.check_index(x)?;
    }
    if i >= j {
        return Err(Error::NotOrdered(i, j));
    }
    if j >= k {
        return Err(Error::NotOrdered(j, k));
    }
    Ok(())
}

/// Quotients `m_ijk / m_ij`, `m_ijk / m_ik`, `m_ijk / m_jk`.
fn quotients(ideal: &MonomialIdeal, i: usize, j: usize, k: usize) -> (Monomial, [Monomial; 3]) {
    let top = ideal.lcm3(i, j, k);
    let q = |a, b| {
        top.checked_div(&ideal.lcm2(a, b))
            .expect("pair lcm divides triple lcm")
    };
    (top, [q(i, j), q(i, k), q(j, k)])
}

pub fn tau(
    ideal: &MonomialIdeal,
    res: &FreeResolution,
    i: usize,
    j: usize,
    k: usize,
) -> Result<ThirdSyzygy> {
    check_triple(ideal, i, j, k)?;
    let row = |a, b| {
        res.f2_column_of(a, b)
            .ok_or(Error::MissingSecondSyzygy(a, b))
    };
    let rows = [row(i, j)?, row(i, k)?, row(j, k)?];
    let (top, q) = quotients(ideal, i, j, k);
    Ok(ThirdSyzygy {
        i,
        j,
        k,
        rows,
        entries: [
            ScalarMonomial::from_int(1, q[0]),
            ScalarMonomial::from_int(-1, q[1]),
            ScalarMonomial::from_int(1, q[2]),
        ],
        multidegree: top,
    })
}

/// `(m_ijk/m_ij) sigma_ij - (m_ijk/m_ik) sigma_ik + (m_ijk/m_jk) sigma_jk`
/// expanded in `R^n`. Always zero.
pub fn scarf_identity_residual(
    ideal: &MonomialIdeal,
    i: usize,
    j: usize,
    k: usize,
) -> Result<Vec<Poly>> {
    check_triple(ideal, i, j, k)?;
    let (_, q) = quotients(ideal, i, j, k);
    let mut out = vec![Poly::zero(); ideal.len()];
    for ((a, b), (sign, mult)) in
        [(i, j), (i, k), (j, k)]
            .into_iter()
            .zip([(1, q[0]), (-1, q[1]), (1, q[2])])
    {
        let s = s_pair(ideal, a, b)?;
        let factor = ScalarMonomial::from_int(sign, mult);
        out[b] += &factor.checked_mul(&s.entry_j)?;
        out[a] += &factor.checked_mul(&s.entry_i)?;
    }
    Ok(out)
}

/// Smallest `i` outside `{j, k, l}` such that all six pairs among
/// `{i, j, k, l}` are columns of `f2` and `m_ijk`, `m_ijl`, `m_ikl` all
/// strictly divide `m_jkl`. Such an `i` makes `tau_jkl` non-minimal.
pub fn tau_nonminimality_witness(
    ideal: &MonomialIdeal,
    res: &FreeResolution,
    j: usize,
    k: usize,
    l: usize,
) -> Option<usize> {
    let top = ideal.lcm3(j, k, l);
    let has = |a: usize, b: usize| res.f2_column_of(a.min(b), a.max(b)).is_some();
    (0..ideal.len()).find(|&i| {
        i != j
            && i != k
            && i != l
            && has(i, j)
            && has(i, k)
            && has(i, l)
            && has(j, k)
            && has(j, l)
            && has(k, l)
            && ideal.lcm3(i, j, k).strictly_divides(&top)
            && ideal.lcm3(i, j, l).strictly_divides(&top)
            && ideal.lcm3(i, k, l).strictly_divides(&top)
    })
}

/// `f3` of a generic ideal: one `tau` column per Scarf triangle, in
/// dictionary order of the triangles.
pub fn assemble_f3_generic(ideal: &MonomialIdeal, res: &FreeResolution) -> Result<SparseMatrix> {
    if !ideal.is_generic() {
        return Err(Error::NotGeneric);
    }
    let scarf = scarf_complex(ideal, HARD_CAP, Execution::Sequential)?;
    let mut degrees = Vec::new();
    let mut entries = Vec::new();
    for (col, tri) in scarf.triangles().into_iter().enumerate() {
        let t = tau(ideal, res, tri[0], tri[1], tri[2])?;
        degrees.push(t.multidegree);
        for (row, value) in t.rows.into_iter().zip(t.entries) {
            entries.push(Entry { row, col, value });
        }
    }
    Ok(SparseMatrix::new(
        res.f2.col_degrees().to_vec(),
        degrees,
        entries,
    ))
}
