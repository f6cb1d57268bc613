//! Biclique coverings of complete graphs and their correspondence with
//! string families: vertex `v` gets symbol 0 at coordinate `i` if it lies
//! in `L_i`, 1 if in `R_i` and `*` otherwise.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::family::{Family, FamilyError};
use crate::strings::{Symbol, TernaryString};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BicliqueError {
    #[error("biclique {index}: vertex {vertex} out of range 0..{n}")]
    VertexOutOfRange { index: usize, vertex: usize, n: usize },
    #[error("biclique {index}: vertex {vertex} on both sides")]
    Overlap { index: usize, vertex: usize },
    #[error("vertices {0} and {1} are indistinguishable")]
    Indistinguishable(usize, usize),
    #[error(transparent)]
    Family(#[from] FamilyError),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Biclique {
    #[serde(rename = "L")]
    pub left: Vec<usize>,
    #[serde(rename = "R")]
    pub right: Vec<usize>,
}

#[derive(Deserialize)]
struct RawCover {
    n: usize,
    bicliques: Vec<Biclique>,
}

/// `d` bicliques `(L_i, R_i)` on the vertex set `{0, ..., n-1}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawCover")]
pub struct BicliqueCover {
    n: usize,
    bicliques: Vec<Biclique>,
}

impl TryFrom<RawCover> for BicliqueCover {
    type Error = BicliqueError;

    fn try_from(raw: RawCover) -> Result<Self, Self::Error> {
        BicliqueCover::new(raw.n, raw.bicliques)
    }
}

impl BicliqueCover {
    pub fn new(n: usize, bicliques: Vec<Biclique>) -> Result<Self, BicliqueError> {
        for (index, b) in bicliques.iter().enumerate() {
            let mut side = vec![None; n];
            for (vs, tag) in [(&b.left, false), (&b.right, true)] {
                for &vertex in vs {
                    if vertex >= n {
                        return Err(BicliqueError::VertexOutOfRange { index, vertex, n });
                    }
                    if side[vertex].is_some_and(|t| t != tag) {
                        return Err(BicliqueError::Overlap { index, vertex });
                    }
                    side[vertex] = Some(tag);
                }
            }
        }
        Ok(BicliqueCover { n, bicliques })
    }

    /// One vertex per member, in member order; one biclique per coordinate.
    pub fn from_family(family: &Family) -> Self {
        let bicliques = (1..=family.dim())
            .map(|i| {
                let mut b = Biclique {
                    left: Vec::new(),
                    right: Vec::new(),
                };
                for (v, x) in family.iter().enumerate() {
                    match x.symbol(i).unwrap() {
                        Symbol::Zero => b.left.push(v),
                        Symbol::One => b.right.push(v),
                        Symbol::Joker => {}
                    }
                }
                b
            })
            .collect();
        BicliqueCover {
            n: family.len(),
            bicliques,
        }
    }

    /// Inverse of [`BicliqueCover::from_family`]; fails when two vertices
    /// receive the same string.
    pub fn to_family(&self) -> Result<Family, BicliqueError> {
        let d = self.bicliques.len();
        let mut symbols = vec![vec![Symbol::Joker; d]; self.n];
        for (i, b) in self.bicliques.iter().enumerate() {
            for &v in &b.left {
                symbols[v][i] = Symbol::Zero;
            }
            for &v in &b.right {
                symbols[v][i] = Symbol::One;
            }
        }
        let members: Vec<TernaryString> = symbols.iter().map(|s| TernaryString::from_symbols(s)).collect();
        let mut first_seen = std::collections::HashMap::new();
        for (v, x) in members.iter().enumerate() {
            if let Some(&u) = first_seen.get(x) {
                return Err(BicliqueError::Indistinguishable(u, v));
            }
            first_seen.insert(x, v);
        }
        Ok(Family::new(d, members)?)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn bicliques(&self) -> &[Biclique] {
        &self.bicliques
    }

    /// `mult[u][v]`: number of bicliques containing edge `uv`.
    pub fn multiplicities(&self) -> Vec<Vec<usize>> {
        let mut mult = vec![vec![0; self.n]; self.n];
        for b in &self.bicliques {
            for &u in &b.left {
                for &v in &b.right {
                    mult[u][v] += 1;
                    mult[v][u] += 1;
                }
            }
        }
        mult
    }

    /// Checks that every edge of `K_n` is covered between 1 and `k` times.
    pub fn verify(&self, k: usize) -> CoverReport {
        let mult = self.multiplicities();
        let mut histogram = BTreeMap::new();
        let mut bad_edges = Vec::new();
        for (u, row) in mult.iter().enumerate() {
            for (v, &m) in row.iter().enumerate().skip(u + 1) {
                *histogram.entry(m).or_insert(0) += 1;
                if m == 0 || m > k {
                    bad_edges.push([u, v, m]);
                }
            }
        }
        CoverReport {
            valid: bad_edges.is_empty(),
            histogram,
            bad_edges,
        }
    }
}

/// Edge-multiplicity summary of a cover.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CoverReport {
    pub valid: bool,
    /// multiplicity -> number of edges
    pub histogram: BTreeMap<usize, usize>,
    /// `[u, v, multiplicity]` for edges outside `[1, k]`.
    pub bad_edges: Vec<[usize; 3]>,
}
