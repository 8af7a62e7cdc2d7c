//! Certification of a resolution: it is a complex, it is exact by the rank
//! criterion, it is minimal, and every entry is multigraded-homogeneous.
//!
//! Ranks are computed by evaluating the matrices at random points modulo a
//! large prime. A rank at a point never exceeds the rank over the fraction
//! field, so the maximum over several points is taken.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monomial::{Monomial, Poly};
use crate::resolution::{FreeResolution, SparseMatrix};

/// `2^31 - 1`.
pub const PRIME_31: u64 = (1 << 31) - 1;
/// `2^61 - 1`.
pub const PRIME_61: u64 = (1 << 61) - 1;
/// Evaluation points per prime and round.
pub const POINTS_PER_ROUND: usize = 3;
/// Fresh rounds of points before giving up on a rank deficit.
pub const MAX_ROUNDS: usize = 4;
pub const DEFAULT_EVAL_SEED: u64 = 0x5eed_0fba_5e11;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Certificate {
    pub complex_ok: bool,
    pub exactness_ok: bool,
    pub minimality_ok: bool,
    pub multigrade_ok: bool,
    /// Ranks of `f1`, `f2`, `f3`.
    pub rank_table: [usize; 3],
    pub evaluation_points_used: usize,
}

impl Certificate {
    pub fn all_ok(&self) -> bool {
        self.complex_ok && self.exactness_ok && self.minimality_ok && self.multigrade_ok
    }
}

/// `A * B` entrywise as polynomials.
fn product(a: &SparseMatrix, b: &SparseMatrix) -> Result<Vec<Vec<Poly>>> {
    let mut out = vec![vec![Poly::zero(); b.cols()]; a.rows()];
    for eb in b.entries() {
        for ea in a.entries().iter().filter(|e| e.col == eb.row) {
            out[ea.row][eb.col] += &ea.value.checked_mul(&eb.value)?;
        }
    }
    Ok(out)
}

fn composes_to_zero(a: &SparseMatrix, b: &SparseMatrix) -> bool {
    a.cols() == b.rows() && product(a, b).is_ok_and(|p| p.iter().flatten().all(Poly::is_zero))
}

/// `f1 * f2 = 0` and `f2 * f3 = 0`.
pub fn check_complex(res: &FreeResolution) -> bool {
    composes_to_zero(&res.f1, &res.f2) && composes_to_zero(&res.f2, &res.f3)
}

/// No entry of any differential is a nonzero constant.
pub fn check_minimality(res: &FreeResolution) -> bool {
    [&res.f1, &res.f2, &res.f3]
        .iter()
        .all(|m| m.entries().iter().all(|e| !e.value.is_unit()))
}

fn homogeneous(m: &SparseMatrix) -> bool {
    m.entries().iter().all(|e| {
        e.value
            .mono()
            .checked_mul(&m.row_degrees()[e.row])
            .is_ok_and(|d| d == m.col_degrees()[e.col])
    })
}

/// Every entry equals `col_degree / row_degree`, and the labels of
/// consecutive matrices agree.
pub fn check_multigrade(res: &FreeResolution) -> bool {
    res.f1.row_degrees() == [Monomial::ONE]
        && res.f1.col_degrees() == res.f2.row_degrees()
        && res.f2.col_degrees() == res.f3.row_degrees()
        && homogeneous(&res.f1)
        && homogeneous(&res.f2)
        && homogeneous(&res.f3)
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

fn int_mod(n: &BigInt, p: u64) -> u64 {
    let p = BigInt::from(p);
    let mut r = n % &p;
    if r.is_negative() {
        r += &p;
    }
    r.to_u64().expect("reduced below p")
}

/// Rank of `m` evaluated at `point` modulo the prime `p`.
pub fn rank_at(m: &SparseMatrix, point: [u64; 3], p: u64) -> Option<usize> {
    let mut dense = vec![vec![0u64; m.cols()]; m.rows()];
    for e in m.entries() {
        let c = e.value.coeff();
        let den = int_mod(c.denom(), p);
        if den == 0 {
            return None;
        }
        let mut v = mul_mod(int_mod(c.numer(), p), inv_mod(den, p), p);
        for (x, k) in point.iter().zip(e.value.mono().exponents()) {
            v = mul_mod(v, pow_mod(*x, k as u64, p), p);
        }
        dense[e.row][e.col] = v;
    }
    let (rows, cols) = (m.rows(), m.cols());
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows).find(|&r| dense[r][col] != 0) else {
            continue;
        };
        dense.swap(rank, pivot);
        let inv = inv_mod(dense[rank][col], p);
        let (top, below) = dense.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        for row in below {
            let f = mul_mod(row[col], inv, p);
            if f == 0 {
                continue;
            }
            for (dst, &src) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                *dst = (*dst + p - mul_mod(f, src, p)) % p;
            }
        }
        rank += 1;
    }
    Some(rank)
}

/// Ranks of `f1, f2, f3` as the maximum over `POINTS_PER_ROUND` random
/// points per round, modulo `p`. Stops early once the expected ranks are
/// reached.
fn sampled_ranks(
    res: &FreeResolution,
    p: u64,
    rng: &mut ChaCha8Rng,
    expected: [usize; 3],
) -> ([usize; 3], usize) {
    let mut best = [0usize; 3];
    let mut used = 0;
    for _ in 0..MAX_ROUNDS {
        for _ in 0..POINTS_PER_ROUND {
            let point = [
                rng.gen_range(1..p),
                rng.gen_range(1..p),
                rng.gen_range(1..p),
            ];
            used += 1;
            for (slot, m) in best.iter_mut().zip([&res.f1, &res.f2, &res.f3]) {
                if let Some(r) = rank_at(m, point, p) {
                    *slot = (*slot).max(r);
                }
            }
        }
        if best == expected {
            break;
        }
    }
    (best, used)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankReport {
    pub exact: bool,
    pub ranks: [usize; 3],
    pub points_used: usize,
}

/// Rank criterion: `rank f1 = 1`, `rank f2 = n - 1`, `rank f3 = m`, hence
/// `rank f2 + rank f3 = rank F_2`. Checked modulo two primes.
pub fn check_exactness_ranks(res: &FreeResolution, seed: u64) -> Result<RankReport> {
    let n = res.f1.cols();
    let m = res.f3.cols();
    let expected = [1, n.saturating_sub(1), m];
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (r31, used31) = sampled_ranks(res, PRIME_31, &mut rng, expected);
    let (r61, used61) = sampled_ranks(res, PRIME_61, &mut rng, expected);
    let points_used = used31 + used61;
    let shape_ok = res.f1.rows() == 1 && res.f2.rows() == n && res.f3.rows() == res.f2.cols();
    let meets = |r: [usize; 3]| r == expected && r[1] + r[2] == res.f2.cols();
    if meets(r31) != meets(r61) && r31 != r61 {
        // one prime reached the expected ranks and the other never did
        return Err(Error::DegenerateEvaluation);
    }
    Ok(RankReport {
        exact: shape_ok && meets(r31) && meets(r61),
        ranks: r61,
        points_used,
    })
}

/// Runs all four checks. The rank check is only attempted on a complex.
pub fn certify(res: &FreeResolution, seed: u64) -> Certificate {
    let complex_ok = check_complex(res);
    let (exactness_ok, rank_table, evaluation_points_used) = if complex_ok {
        match check_exactness_ranks(res, seed) {
            Ok(r) => (r.exact, r.ranks, r.points_used),
            Err(_) => (false, [0; 3], 0),
        }
    } else {
        (false, [0; 3], 0)
    };
    Certificate {
        complex_ok,
        exactness_ok,
        minimality_ok: check_minimality(res),
        multigrade_ok: check_multigrade(res),
        rank_table,
        evaluation_points_used,
    }
}

/// The four corruption classes the checks are designed to catch.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mutation {
    /// Flip the sign of one `f2` entry.
    FlipSign,
    /// Append a copy of the first `f3` column.
    DuplicateColumn,
    /// Replace one `f3` entry by a nonzero constant.
    UnitEntry,
    /// Multiply one `f2` entry by `x`.
    ShiftDegree,
}

impl Mutation {
    pub const ALL: [Mutation; 4] = [
        Mutation::FlipSign,
        Mutation::DuplicateColumn,
        Mutation::UnitEntry,
        Mutation::ShiftDegree,
    ];

    pub fn apply(self, res: &FreeResolution) -> FreeResolution {
        let mut out = res.clone();
        match self {
            Mutation::FlipSign => {
                let e = out.f2.entries()[0].clone();
                out.f2.set(e.row, e.col, -e.value);
            }
            Mutation::DuplicateColumn => {
                let copy: Vec<_> = out.f3.column(0).map(|e| (e.row, e.value.clone())).collect();
                let degree = out.f3.col_degrees()[0];
                out.f3.push_column(degree, copy);
            }
            Mutation::UnitEntry => {
                let e = out.f3.entries()[0].clone();
                out.f3.set(
                    e.row,
                    e.col,
                    crate::monomial::ScalarMonomial::new(e.value.coeff().clone(), Monomial::ONE),
                );
            }
            Mutation::ShiftDegree => {
                let e = out.f2.entries()[0].clone();
                let shifted = e
                    .value
                    .mono()
                    .checked_mul(&Monomial::x(1))
                    .expect("small exponents");
                out.f2.set(
                    e.row,
                    e.col,
                    crate::monomial::ScalarMonomial::new(e.value.coeff().clone(), shifted),
                );
            }
        }
        out
    }

    /// Whether the check designed for this corruption rejects `res`.
    pub fn is_caught(self, res: &FreeResolution, seed: u64) -> bool {
        match self {
            Mutation::FlipSign => !check_complex(res),
            Mutation::DuplicateColumn => !check_exactness_ranks(res, seed).is_ok_and(|r| r.exact),
            Mutation::UnitEntry => !check_minimality(res),
            Mutation::ShiftDegree => !check_multigrade(res),
        }
    }
}
