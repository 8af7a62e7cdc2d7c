//! The Taylor complex of a monomial ideal and its reduction to the minimal
//! free resolution by cancelling unit entries.
//!
//! Basis elements of the Taylor complex are subsets `S` of generator
//! indices, encoded as bitmasks, labelled by `m_S = lcm(m_s : s in S)`. The
//! differential is
//!
//! ```text
//! d(e_S) = sum_{s in S} (-1)^(pos(s)+1) * (m_S / m_{S-s}) * e_{S-s}
//! ```
//!
//! with `pos` the 1-based position of `s` in `S`. Every entry is
//! `label(col) / label(row)`, so only coefficients are stored while
//! cancelling.
//!
//! Unit entries only join basis elements with equal labels. The reduction
//! therefore runs strand by strand (one strand per label), and inside a
//! strand always cancels the unit entry whose lower-degree element is
//! smallest: lower homological degree first, then the dictionary order on
//! the subset, then the dictionary order on the upper element. For pairs
//! this removes the smallest second syzygies first, so the surviving `f2`
//! columns are the largest ones possible.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::{coeff, Coeff, Monomial, ScalarMonomial};
use crate::resolution::{first_differential, Entry, FreeResolution, SparseMatrix};

/// Default bound on the number of generators (2^14 Taylor basis elements).
pub const DEFAULT_CAP: usize = 14;
/// Generator bound that no configuration may exceed.
pub const HARD_CAP: usize = 20;

/// How columns of `f2` (and, induced, of `f3`) are ordered.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum ColumnOrdering {
    /// Dictionary order on the generator indices.
    #[default]
    DictionaryFirst,
    /// Grevlex order on the column multidegree, ties broken by indices.
    GrevlexFirst,
}

/// Tie-break used when choosing which unit entry to cancel.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum PivotOrder {
    /// Cancel against the smallest lower-degree element.
    #[default]
    Smallest,
    /// Reverse dictionary order inside each homological degree.
    Largest,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ResolveOptions {
    pub ordering: ColumnOrdering,
    pub pivot_order: PivotOrder,
    pub cap: usize,
}

impl Default for ResolveOptions {
    fn default() -> Self {
        ResolveOptions {
            ordering: ColumnOrdering::DictionaryFirst,
            pivot_order: PivotOrder::Smallest,
            cap: DEFAULT_CAP,
        }
    }
}

/// Indices of the set bits of `mask`, ascending.
pub fn subset_indices(mask: u32) -> Vec<usize> {
    (0..32).filter(|&i| mask & (1 << i) != 0).collect()
}

pub fn mask_of(indices: &[usize]) -> u32 {
    indices.iter().fold(0, |acc, &i| acc | (1 << i))
}

/// Subsets by size, then in dictionary order of their sorted indices.
pub fn subset_cmp(a: u32, b: u32) -> Ordering {
    match a.count_ones().cmp(&b.count_ones()) {
        Ordering::Equal => {}
        ord => return ord,
    }
    let diff = a ^ b;
    if diff == 0 {
        return Ordering::Equal;
    }
    let lowest = diff & diff.wrapping_neg();
    if a & lowest != 0 {
        Ordering::Less
    } else {
        Ordering::Greater
    }
}

/// The full Taylor complex on the generators of an ideal.
#[derive(Clone, Debug)]
pub struct TaylorComplex {
    ideal: MonomialIdeal,
    labels: Vec<Monomial>,
}

impl TaylorComplex {
    pub fn new(ideal: &MonomialIdeal, cap: usize) -> Result<Self> {
        let n = ideal.len();
        let cap = cap.min(HARD_CAP);
        if n > cap {
            return Err(Error::TooManyGenerators { n, cap });
        }
        let mut labels = vec![Monomial::ONE; 1 << n];
        for mask in 1u32..(1 << n) {
            let low = mask.trailing_zeros() as usize;
            labels[mask as usize] = labels[(mask & (mask - 1)) as usize].lcm(&ideal.gen(low));
        }
        Ok(TaylorComplex {
            ideal: ideal.clone(),
            labels,
        })
    }

    pub fn ideal(&self) -> &MonomialIdeal {
        &self.ideal
    }

    pub fn label(&self, mask: u32) -> Monomial {
        self.labels[mask as usize]
    }

    /// All `p`-subsets in dictionary order.
    pub fn basis(&self, p: usize) -> Vec<u32> {
        let mut out: Vec<u32> = (0..self.labels.len() as u32)
            .filter(|m| m.count_ones() as usize == p)
            .collect();
        out.sort_by(|a, b| subset_cmp(*a, *b));
        out
    }

    /// Signed faces of `e_S`: `(S - s, (-1)^(pos+1))`.
    pub fn boundary(mask: u32) -> impl Iterator<Item = (u32, i64)> {
        subset_indices(mask)
            .into_iter()
            .enumerate()
            .map(move |(pos, s)| (mask & !(1 << s), if pos % 2 == 0 { 1 } else { -1 }))
    }

    /// The differential `d_p : F_p -> F_{p-1}` as a matrix on the dictionary
    /// ordered bases.
    pub fn differential(&self, p: usize) -> SparseMatrix {
        assert!(p >= 1, "d_0 is not part of the complex");
        let rows = self.basis(p - 1);
        let cols = self.basis(p);
        let row_index: HashMap<u32, usize> =
            rows.iter().enumerate().map(|(i, &m)| (m, i)).collect();
        let mut entries = Vec::new();
        for (c, &mask) in cols.iter().enumerate() {
            let top = self.label(mask);
            for (face, sign) in Self::boundary(mask) {
                let mono = top
                    .checked_div(&self.label(face))
                    .expect("lcm of a subset divides lcm of the superset");
                entries.push(Entry {
                    row: row_index[&face],
                    col: c,
                    value: ScalarMonomial::from_int(sign, mono),
                });
            }
        }
        SparseMatrix::new(
            rows.iter().map(|&m| self.label(m)).collect(),
            cols.iter().map(|&m| self.label(m)).collect(),
            entries,
        )
    }

    /// The unreduced differentials `d_1, d_2, d_3` packed as a resolution
    /// shaped value. Not minimal in general.
    pub fn unminimized(&self) -> FreeResolution {
        let pairs = self.basis(2);
        let triples = self.basis(3);
        FreeResolution {
            ideal: self.ideal.clone(),
            f1: first_differential(&self.ideal),
            f2: self.differential(2),
            f3: self.differential(3),
            provenance2: pairs
                .iter()
                .map(|&m| {
                    let ix = subset_indices(m);
                    (ix[0], ix[1])
                })
                .collect(),
            provenance3: triples.iter().map(|&m| subset_indices(m)).collect(),
        }
    }

    /// Cancels every unit entry and returns the minimal resolution.
    pub fn minimalize(&self, opts: &ResolveOptions) -> Result<FreeResolution> {
        let mut work = Reduction::new(self);
        let mut strands: BTreeMap<Monomial, Vec<u32>> = BTreeMap::new();
        for mask in 1u32..(self.labels.len() as u32) {
            if mask.count_ones() >= 2 {
                strands.entry(self.label(mask)).or_default().push(mask);
            }
        }
        for members in strands.values() {
            if members.len() < 2 {
                continue;
            }
            while let Some((a, b)) = work.best_pivot(members, opts.pivot_order) {
                work.cancel(a, b);
            }
        }
        work.into_resolution(opts)
    }
}

/// Mutable state of the cancellation.
struct Reduction<'a> {
    complex: &'a TaylorComplex,
    alive: Vec<bool>,
    /// `cols[S]`: entries of `d(e_S)` keyed by row subset.
    cols: Vec<BTreeMap<u32, Coeff>>,
    /// `rows[T]`: subsets whose column has an entry in row `T`.
    rows: Vec<BTreeSet<u32>>,
}

impl<'a> Reduction<'a> {
    fn new(complex: &'a TaylorComplex) -> Self {
        let size = complex.labels.len();
        let mut cols = vec![BTreeMap::new(); size];
        let mut rows = vec![BTreeSet::new(); size];
        for mask in 1u32..(size as u32) {
            if mask.count_ones() < 2 {
                continue;
            }
            for (face, sign) in TaylorComplex::boundary(mask) {
                cols[mask as usize].insert(face, coeff(sign));
                rows[face as usize].insert(mask);
            }
        }
        Reduction {
            complex,
            alive: vec![true; size],
            cols,
            rows,
        }
    }

    /// Smallest unit entry `(lower, upper)` inside one strand.
    fn best_pivot(&self, strand: &[u32], order: PivotOrder) -> Option<(u32, u32)> {
        let mut best: Option<(u32, u32)> = None;
        for &upper in strand {
            if !self.alive[upper as usize] || upper.count_ones() < 3 {
                continue;
            }
            let label = self.complex.label(upper);
            for (&lower, value) in &self.cols[upper as usize] {
                if value.is_zero()
                    || !self.alive[lower as usize]
                    || self.complex.label(lower) != label
                {
                    continue;
                }
                let better = match best {
                    None => true,
                    Some((bl, bu)) => pivot_cmp((lower, upper), (bl, bu), order) == Ordering::Less,
                };
                if better {
                    best = Some((lower, upper));
                }
            }
        }
        best
    }

    /// Gaussian elimination of the unit entry `d(e_upper)[lower]`.
    fn cancel(&mut self, lower: u32, upper: u32) {
        let (a, b) = (lower as usize, upper as usize);
        let unit = self.cols[b][&lower].clone();
        let col_b: Vec<(u32, Coeff)> = self.cols[b]
            .iter()
            .filter(|(&r, _)| r != lower)
            .map(|(&r, v)| (r, v.clone()))
            .collect();
        let row_a: Vec<u32> = self.rows[a]
            .iter()
            .copied()
            .filter(|&c| c != upper)
            .collect();

        for &c in &row_a {
            let factor = self.cols[c as usize][&lower].clone() / &unit;
            for (r, v) in &col_b {
                let slot = self.cols[c as usize].entry(*r).or_insert_with(Coeff::zero);
                *slot -= v * &factor;
                if slot.is_zero() {
                    self.cols[c as usize].remove(r);
                    self.rows[*r as usize].remove(&c);
                } else {
                    self.rows[*r as usize].insert(c);
                }
            }
            self.cols[c as usize].remove(&lower);
        }
        self.rows[a].clear();
        // d(e_upper) disappears
        for r in std::mem::take(&mut self.cols[b]).into_keys() {
            self.rows[r as usize].remove(&upper);
        }
        // the lower element's own column and the upper element's row vanish
        for r in std::mem::take(&mut self.cols[a]).into_keys() {
            self.rows[r as usize].remove(&lower);
        }
        for c in std::mem::take(&mut self.rows[b]) {
            self.cols[c as usize].remove(&upper);
        }
        self.alive[a] = false;
        self.alive[b] = false;
    }

    fn into_resolution(self, opts: &ResolveOptions) -> Result<FreeResolution> {
        let complex = self.complex;
        let ideal = &complex.ideal;
        let n = ideal.len();
        let survivors = |p: u32| -> Vec<u32> {
            (1u32..(complex.labels.len() as u32))
                .filter(|&m| m.count_ones() == p && self.alive[m as usize])
                .collect()
        };
        if let Some(left) = (1u32..(complex.labels.len() as u32))
            .find(|&m| m.count_ones() >= 4 && self.alive[m as usize])
        {
            return Err(Error::Internal(format!(
                "basis element {:?} of homological degree {} survived",
                subset_indices(left),
                left.count_ones()
            )));
        }

        let order = |v: &mut Vec<u32>| match opts.ordering {
            ColumnOrdering::DictionaryFirst => v.sort_by(|a, b| subset_cmp(*a, *b)),
            ColumnOrdering::GrevlexFirst => v.sort_by(|a, b| {
                complex
                    .label(*a)
                    .cmp(&complex.label(*b))
                    .then(subset_cmp(*a, *b))
            }),
        };
        let mut pairs = survivors(2);
        let mut triples = survivors(3);
        order(&mut pairs);
        order(&mut triples);

        let entry =
            |row_mask: u32, col_mask: u32, row: usize, col: usize, c: &Coeff| -> Result<Entry> {
                let mono = complex
                    .label(col_mask)
                    .checked_div(&complex.label(row_mask))
                    .ok_or(Error::InternalNonHomogeneous { row, col })?;
                Ok(Entry {
                    row,
                    col,
                    value: ScalarMonomial::new(c.clone(), mono),
                })
            };

        let mut f2_entries = Vec::new();
        for (col, &mask) in pairs.iter().enumerate() {
            for (&r, c) in &self.cols[mask as usize] {
                f2_entries.push(entry(r, mask, r.trailing_zeros() as usize, col, c)?);
            }
        }
        let pair_row: HashMap<u32, usize> =
            pairs.iter().enumerate().map(|(i, &m)| (m, i)).collect();
        let mut f3_entries = Vec::new();
        for (col, &mask) in triples.iter().enumerate() {
            let mut column = Vec::new();
            for (&r, c) in &self.cols[mask as usize] {
                let row = *pair_row.get(&r).ok_or_else(|| {
                    Error::Internal(format!("f3 column {col} points at a cancelled pair"))
                })?;
                column.push(entry(r, mask, row, col, c)?);
            }
            column.sort_by_key(|e| e.row);
            if column
                .first()
                .is_some_and(|e| e.value.coeff().is_negative())
            {
                for e in &mut column {
                    e.value = -e.value.clone();
                }
            }
            f3_entries.extend(column);
        }

        let f2 = SparseMatrix::new(
            ideal.gens().to_vec(),
            pairs.iter().map(|&m| complex.label(m)).collect(),
            f2_entries,
        );
        let f3 = SparseMatrix::new(
            pairs.iter().map(|&m| complex.label(m)).collect(),
            triples.iter().map(|&m| complex.label(m)).collect(),
            f3_entries,
        );
        let res = FreeResolution {
            ideal: ideal.clone(),
            f1: first_differential(ideal),
            f2,
            f3,
            provenance2: pairs
                .iter()
                .map(|&m| {
                    let ix = subset_indices(m);
                    (ix[0], ix[1])
                })
                .collect(),
            provenance3: triples.iter().map(|&m| subset_indices(m)).collect(),
        };
        if res.f2.cols() + 1 != n + res.f3.cols() {
            return Err(Error::Internal(format!(
                "rank shape broken: n = {n}, f2 has {} columns, f3 has {}",
                res.f2.cols(),
                res.f3.cols()
            )));
        }
        Ok(res)
    }
}

fn pivot_cmp(x: (u32, u32), y: (u32, u32), order: PivotOrder) -> Ordering {
    let degree = x.0.count_ones().cmp(&y.0.count_ones());
    let within = subset_cmp(x.0, y.0).then(subset_cmp(x.1, y.1));
    degree.then(match order {
        PivotOrder::Smallest => within,
        PivotOrder::Largest => within.reverse(),
    })
}

/// Minimal free resolution of `R/I` with the given options.
pub fn resolve_with(ideal: &MonomialIdeal, opts: &ResolveOptions) -> Result<FreeResolution> {
    TaylorComplex::new(ideal, opts.cap)?.minimalize(opts)
}

/// Minimal free resolution of `R/I` with default options.
pub fn resolve(ideal: &MonomialIdeal) -> Result<FreeResolution> {
    resolve_with(ideal, &ResolveOptions::default())
}
