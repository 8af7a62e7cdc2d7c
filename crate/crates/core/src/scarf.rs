//! Buchberger graph and Scarf complex of a monomial ideal.

use std::collections::{BTreeSet, HashMap};
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;
use crate::par::{self, Execution};
use crate::resolution::FreeResolution;
use crate::taylor::{subset_indices, HARD_CAP};

/// Edge `(i, j)` exactly when no generator strongly divides `m_ij`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BuchbergerGraph {
    pub n: usize,
    pub edges: BTreeSet<(usize, usize)>,
}

pub fn buchberger_graph(ideal: &MonomialIdeal) -> BuchbergerGraph {
    let n = ideal.len();
    let mut edges = BTreeSet::new();
    for i in 0..n {
        for j in (i + 1)..n {
            let mij = ideal.lcm2(i, j);
            if !ideal.gens().iter().any(|g| g.strongly_divides(&mij)) {
                edges.insert((i, j));
            }
        }
    }
    BuchbergerGraph { n, edges }
}

impl BuchbergerGraph {
    /// Graphviz rendering with vertices labelled by their generators.
    pub fn to_dot(&self, ideal: &MonomialIdeal) -> String {
        let mut out = String::from("graph buchberger {\n");
        for (i, g) in ideal.gens().iter().enumerate() {
            let _ = writeln!(out, "  {i} [label=\"{g}\"];");
        }
        for (i, j) in &self.edges {
            let _ = writeln!(out, "  {i} -- {j};");
        }
        out.push_str("}\n");
        out
    }
}

/// Subsets of generators whose lcm is attained by no other subset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScarfComplex {
    pub n: usize,
    /// Faces with one, two or three vertices, each sorted, listed by size
    /// and then in dictionary order.
    pub faces: Vec<Vec<usize>>,
    /// Faces with four or more vertices.
    pub larger: Vec<Vec<usize>>,
}

impl ScarfComplex {
    pub fn vertices(&self) -> impl Iterator<Item = &Vec<usize>> {
        self.faces.iter().filter(|f| f.len() == 1)
    }

    pub fn edges(&self) -> BTreeSet<(usize, usize)> {
        self.faces
            .iter()
            .filter(|f| f.len() == 2)
            .map(|f| (f[0], f[1]))
            .collect()
    }

    pub fn triangles(&self) -> BTreeSet<Vec<usize>> {
        self.faces
            .iter()
            .filter(|f| f.len() == 3)
            .cloned()
            .collect()
    }

    /// Every proper nonempty subset of a face is a face.
    pub fn is_downward_closed(&self) -> bool {
        let all: BTreeSet<&Vec<usize>> = self.faces.iter().chain(&self.larger).collect();
        all.iter().all(|face| {
            (0..face.len()).all(|drop| {
                if face.len() == 1 {
                    return true;
                }
                let sub: Vec<usize> = face
                    .iter()
                    .enumerate()
                    .filter(|&(k, _)| k != drop)
                    .map(|(_, &v)| v)
                    .collect();
                all.contains(&sub)
            })
        })
    }
}

/// Scans all `2^n` subsets for unique lcms.
pub fn scarf_complex(ideal: &MonomialIdeal, cap: usize, exec: Execution) -> Result<ScarfComplex> {
    let n = ideal.len();
    let cap = cap.min(HARD_CAP);
    if n > cap {
        return Err(Error::TooManyGenerators { n, cap });
    }
    let total = 1usize << n;
    let mut labels = vec![Monomial::ONE; total];
    for mask in 1..total {
        let low = mask.trailing_zeros() as usize;
        labels[mask] = labels[mask & (mask - 1)].lcm(&ideal.gen(low));
    }
    let counts: HashMap<Monomial, u32> = par::fold_chunks(
        total - 1,
        4096,
        exec,
        |range| {
            let mut local: HashMap<Monomial, u32> = HashMap::new();
            for k in range {
                *local.entry(labels[k + 1]).or_default() += 1;
            }
            local
        },
        |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_default() += v;
            }
            a
        },
    );
    let mut unique: Vec<u32> = par::fold_chunks(
        total - 1,
        4096,
        exec,
        |range| {
            range
                .map(|k| k + 1)
                .filter(|&mask| counts[&labels[mask]] == 1)
                .map(|mask| mask as u32)
                .collect::<Vec<u32>>()
        },
        |mut a, mut b| {
            a.append(&mut b);
            a
        },
    );
    unique.sort_by(|a, b| crate::taylor::subset_cmp(*a, *b));
    let (faces, larger) = unique
        .into_iter()
        .map(subset_indices)
        .partition(|f| f.len() <= 3);
    Ok(ScarfComplex { n, faces, larger })
}

/// Euler count of the Buchberger graph as a planar triangulation:
/// `n - (n + m - 1) + (m + 1) = 2`, together with `|Buch| = n + m - 1` and
/// `#triangles(Scarf) = m`.
pub fn euler_check(ideal: &MonomialIdeal, res: &FreeResolution) -> Result<bool> {
    if !ideal.is_generic() {
        return Err(Error::NotGeneric);
    }
    if !ideal.is_m_primary() {
        return Err(Error::NotMPrimary);
    }
    let [_, n, edges, faces] = res.ranks();
    let euler = n as i64 - edges as i64 + (faces as i64 + 1) == 2;
    let buch = buchberger_graph(ideal);
    let scarf = scarf_complex(ideal, HARD_CAP, Execution::Sequential)?;
    Ok(euler && buch.edges.len() == edges && scarf.triangles().len() == faces)
}
