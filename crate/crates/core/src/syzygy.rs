//! S-pair second syzygies `sigma_ij = (m_ij/m_j) e_j - (m_ij/m_i) e_i` and
//! the local minimality criteria built from strict divisibility of lcms.
//!
//! The set of minimal second syzygies used by a resolution is whatever the
//! Taylor reduction keeps; the functions here are independent cross-checks.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::{Monomial, ScalarMonomial};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SecondSyzygy {
    pub i: usize,
    pub j: usize,
    /// `+ m_ij / m_j`, the coefficient of `e_j`.
    pub entry_j: ScalarMonomial,
    /// `- m_ij / m_i`, the coefficient of `e_i`.
    pub entry_i: ScalarMonomial,
    pub multidegree: Monomial,
}

/// `sigma_ij` for zero-based `i < j`.
pub fn s_pair(ideal: &MonomialIdeal, i: usize, j: usize) -> Result<SecondSyzygy> {
    ideal.check_index(i)?;
    ideal.check_index(j)?;
    if i >= j {
        return Err(Error::NotOrdered(i, j));
    }
    let (mi, mj) = (ideal.gen(i), ideal.gen(j));
    let mij = mi.lcm(&mj);
    Ok(SecondSyzygy {
        i,
        j,
        entry_j: ScalarMonomial::from_int(1, mij.checked_div(&mj).expect("m_j | m_ij")),
        entry_i: ScalarMonomial::from_int(-1, mij.checked_div(&mi).expect("m_i | m_ij")),
        multidegree: mij,
    })
}

/// Dictionary order on index pairs.
pub fn sigma_cmp(s1: &SecondSyzygy, s2: &SecondSyzygy) -> Ordering {
    (s1.i, s1.j).cmp(&(s2.i, s2.j))
}

/// Smallest `k` with both `m_ik` and `m_jk` strictly dividing `m_ij`.
///
/// When such a `k` exists `sigma_ij` is a combination of `sigma_ik` and
/// `sigma_jk` with non-unit coefficients, hence not minimal.
pub fn nonminimality_witness(ideal: &MonomialIdeal, i: usize, j: usize) -> Option<usize> {
    let mij = ideal.lcm2(i, j);
    (0..ideal.len()).find(|&k| {
        k != i
            && k != j
            && ideal.lcm2(i, k).strictly_divides(&mij)
            && ideal.lcm2(j, k).strictly_divides(&mij)
    })
}

/// For generic ideals, `sigma_ij` is minimal exactly when no witness exists.
pub fn is_minimal_pair_generic(ideal: &MonomialIdeal, i: usize, j: usize) -> Result<bool> {
    ideal.check_index(i)?;
    ideal.check_index(j)?;
    if !ideal.is_generic() {
        return Err(Error::NotGeneric);
    }
    Ok(nonminimality_witness(ideal, i, j).is_none())
}

/// Some generator other than `m_i`, `m_j` strictly divides `m_ij`.
pub fn has_strict_divisor(ideal: &MonomialIdeal, i: usize, j: usize) -> bool {
    let mij = ideal.lcm2(i, j);
    ideal
        .gens()
        .iter()
        .enumerate()
        .any(|(k, g)| k != i && k != j && g.strictly_divides(&mij))
}
