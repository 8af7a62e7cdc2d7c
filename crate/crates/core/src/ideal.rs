//! Monomial ideals given by their minimal generators.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::monomial::Monomial;

/// Sample budget for [`MonomialIdeal::random_artinian`].
pub const RANDOM_ATTEMPTS: usize = 2_000;
/// Fresh draws of the pure powers before giving up.
pub const RANDOM_RESTARTS: usize = 64;

/// A monomial ideal in `k[x, y, z]`, stored as its minimal generators.
///
/// Generators are pairwise incomparable under divisibility. The canonical
/// order is ascending grevlex; [`MonomialIdeal::with_input_order`] keeps the
/// caller's order instead.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialIdeal {
    gens: Vec<Monomial>,
}

impl MonomialIdeal {
    /// Minimal generators of the ideal spanned by `raw`, in canonical order.
    pub fn minimalize_generators(raw: &[Monomial]) -> Result<Self> {
        let mut gens = minimal_subset(raw)?;
        // stable, so equal monomials (already deduplicated) never tie anyway
        gens.sort();
        Ok(MonomialIdeal { gens })
    }

    /// Minimal generators of `raw`, keeping the first occurrence order.
    pub fn with_input_order(raw: &[Monomial]) -> Result<Self> {
        Ok(MonomialIdeal {
            gens: minimal_subset(raw)?,
        })
    }

    /// `m^d`, the `d`-th power of the maximal ideal, in canonical order.
    pub fn maximal_power(d: u32) -> Self {
        let mut raw = Vec::new();
        for a in 0..=d {
            for b in 0..=(d - a) {
                raw.push(Monomial::new(a, b, d - a - b));
            }
        }
        MonomialIdeal::minimalize_generators(&raw).expect("d >= 1 gives a proper ideal")
    }

    pub fn gens(&self) -> &[Monomial] {
        &self.gens
    }

    pub fn gen(&self, i: usize) -> Monomial {
        self.gens[i]
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub(crate) fn check_index(&self, i: usize) -> Result<()> {
        if i >= self.gens.len() {
            Err(Error::IndexOutOfRange {
                index: i,
                n: self.gens.len(),
            })
        } else {
            Ok(())
        }
    }

    /// `lcm(m_i, m_j)`.
    pub fn lcm2(&self, i: usize, j: usize) -> Monomial {
        self.gens[i].lcm(&self.gens[j])
    }

    /// `lcm(m_i, m_j, m_k)`.
    pub fn lcm3(&self, i: usize, j: usize, k: usize) -> Monomial {
        self.gens[i].lcm(&self.gens[j]).lcm(&self.gens[k])
    }

    /// The generators contain a pure power of each of x, y and z.
    pub fn is_m_primary(&self) -> bool {
        let mut seen = [false; 3];
        for g in &self.gens {
            if let Some(v) = g.pure_power_variable() {
                seen[v] = true;
            }
        }
        seen.iter().all(|&s| s)
    }

    /// Some generator divides `m`.
    pub fn contains(&self, m: &Monomial) -> bool {
        self.gens.iter().any(|g| g.divides(m))
    }

    /// Whenever two generators share a positive exponent in some variable,
    /// a third generator strongly divides their lcm.
    pub fn is_generic(&self) -> bool {
        self.non_generic_pairs().next().is_none()
    }

    /// Pairs `(i, j)`, `i < j`, that share a positive degree but have no
    /// strong divisor of `m_ij` among the other generators.
    pub fn non_generic_pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.gens.len();
        (0..n)
            .flat_map(move |i| ((i + 1)..n).map(move |j| (i, j)))
            .filter(move |&(i, j)| {
                let (mi, mj) = (self.gens[i], self.gens[j]);
                if !mi.shares_positive_degree(&mj) {
                    return false;
                }
                let mij = mi.lcm(&mj);
                !(0..n).any(|k| k != i && k != j && self.gens[k].strongly_divides(&mij))
            })
    }

    /// Deterministic random m-primary ideal with exactly `n` minimal
    /// generators.
    ///
    /// Pure powers `x^a, y^b, z^c` with exponents in `[2, max_exp]` come
    /// first; mixed monomials are then drawn uniformly from `[0, max_exp]^3`
    /// off the coordinate axes until `n` minimal generators remain. When
    /// that stalls, the pure powers are drawn again.
    pub fn random_artinian(seed: u64, n: usize, max_exp: u32) -> Result<Self> {
        if n < 4 {
            return Err(Error::InvalidParameter(format!(
                "random ideals need n >= 4 (got {n})"
            )));
        }
        if max_exp < 2 {
            return Err(Error::InvalidParameter(format!(
                "random ideals need max_exp >= 2 (got {max_exp})"
            )));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..RANDOM_RESTARTS {
            let mut gens = vec![
                Monomial::x(rng.gen_range(2..=max_exp)),
                Monomial::y(rng.gen_range(2..=max_exp)),
                Monomial::z(rng.gen_range(2..=max_exp)),
            ];
            for _ in 0..RANDOM_ATTEMPTS {
                if gens.len() == n {
                    break;
                }
                let cand = Monomial::new(
                    rng.gen_range(0..=max_exp),
                    rng.gen_range(0..=max_exp),
                    rng.gen_range(0..=max_exp),
                );
                if cand.support_size() < 2 || gens.iter().any(|g| g.divides(&cand)) {
                    continue;
                }
                gens.retain(|g| !cand.divides(g));
                gens.push(cand);
            }
            if gens.len() == n {
                return MonomialIdeal::minimalize_generators(&gens);
            }
        }
        Err(Error::GenerationExhausted {
            n,
            attempts: RANDOM_ATTEMPTS * RANDOM_RESTARTS,
        })
    }
}

fn minimal_subset(raw: &[Monomial]) -> Result<Vec<Monomial>> {
    if raw.is_empty() {
        return Err(Error::EmptyInput);
    }
    if raw.iter().any(Monomial::is_one) {
        return Err(Error::UnitIdeal);
    }
    let mut out: Vec<Monomial> = Vec::with_capacity(raw.len());
    for (idx, m) in raw.iter().enumerate() {
        if out.contains(m) {
            continue;
        }
        let dominated = raw
            .iter()
            .enumerate()
            .any(|(other_idx, g)| other_idx != idx && g.strictly_divides(m));
        if !dominated {
            out.push(*m);
        }
    }
    Ok(out)
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ">")
    }
}
