//! Reduced simplicial homology and graded Betti numbers of Stanley-Reisner rings.
//!
//! Betti numbers come from Hochster's formula
//! `β_{i,σ}(R/I_Δ) = dim H̃_{|σ|-i-1}(Δ|σ; K)`, summed over `σ ⊆ V` with `|σ| = j`.
//! One sweep over all `2^n` restrictions yields the whole graded table, hence projective
//! dimension, regularity and (by Auslander-Buchsbaum) depth.

use std::collections::HashMap;
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::complex::{SimplicialComplex, DEFAULT_FACE_LIMIT};
use crate::error::{Error, Result};
use crate::face::{maximal_faces, Face};
use crate::linalg::Field;

/// Largest ambient vertex count accepted by the Hochster sweep.
pub const BETTI_VERTEX_LIMIT: usize = 16;

/// `dims[k]` is `dim_K H̃_{k-1}`, for `k - 1 = -1 ..= dim Δ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomologyProfile {
    pub dims: Vec<u64>,
}

impl HomologyProfile {
    /// `dim H̃_i`, zero outside the stored range.
    pub fn get(&self, i: isize) -> u64 {
        if i < -1 {
            return 0;
        }
        self.dims.get((i + 1) as usize).copied().unwrap_or(0)
    }

    pub fn is_acyclic(&self) -> bool {
        self.dims.iter().all(|&x| x == 0)
    }
}

/// Graded Betti numbers `β_{i,j}` of `R/I_Δ`, `0 <= i, j <= n`.
#[derive(Clone, PartialEq, Eq, Serialize)]
pub struct BettiTable {
    n: usize,
    entries: Vec<Vec<u64>>,
}

impl BettiTable {
    pub fn get(&self, i: usize, j: usize) -> u64 {
        self.entries.get(i).and_then(|r| r.get(j)).copied().unwrap_or(0)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Nonzero entries `(i, j, β_{i,j})` in order of `i`, then `j`.
    pub fn nonzero(&self) -> Vec<(usize, usize, u64)> {
        let mut out = Vec::new();
        for (i, row) in self.entries.iter().enumerate() {
            for (j, &b) in row.iter().enumerate() {
                if b != 0 {
                    out.push((i, j, b));
                }
            }
        }
        out
    }

    pub fn total(&self, i: usize) -> u64 {
        self.entries.get(i).map_or(0, |r| r.iter().sum())
    }

    /// `pd(R/I_Δ) = max{i : β_{i,j} ≠ 0}`.
    pub fn proj_dim(&self) -> usize {
        self.nonzero().iter().map(|&(i, _, _)| i).max().unwrap_or(0)
    }

    /// `reg(R/I_Δ) = max{j - i : β_{i,j} ≠ 0}`.
    pub fn regularity(&self) -> usize {
        self.nonzero().iter().map(|&(i, j, _)| j - i).max().unwrap_or(0)
    }

    /// True when `I_Δ = 0`, i.e. the table is just `β_{0,0}`.
    pub fn is_zero_ideal(&self) -> bool {
        self.nonzero() == [(0, 0, 1)]
    }
}

impl fmt::Display for BettiTable {
    /// Macaulay2-style layout: row `j - i`, column `i`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pd = self.proj_dim();
        let reg = self.regularity();
        write!(f, "{:>6}", "")?;
        for i in 0..=pd {
            write!(f, " {i:>5}")?;
        }
        writeln!(f)?;
        write!(f, "{:>6}", "total:")?;
        for i in 0..=pd {
            write!(f, " {:>5}", self.total(i))?;
        }
        writeln!(f)?;
        for row in 0..=reg {
            write!(f, "{:>5}:", row)?;
            for i in 0..=pd {
                match self.get(i, i + row) {
                    0 => write!(f, " {:>5}", ".")?,
                    b => write!(f, " {b:>5}")?,
                }
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

impl fmt::Debug for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BettiTable{:?}", self.nonzero())
    }
}

/// Homological computations over a fixed field with a face-count bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Engine {
    pub field: Field,
    pub face_limit: usize,
}

impl Default for Engine {
    fn default() -> Self {
        Engine { field: Field::Rationals, face_limit: DEFAULT_FACE_LIMIT }
    }
}

impl Engine {
    pub fn new(field: Field) -> Self {
        Engine { field, ..Engine::default() }
    }

    pub fn with_face_limit(mut self, face_limit: usize) -> Self {
        self.face_limit = face_limit;
        self
    }

    pub fn reduced_homology(&self, complex: &SimplicialComplex) -> Result<HomologyProfile> {
        self.homology_of_facets(complex.facets())
    }

    /// Reduced homology of the complex generated by `facets`, via boundary-map ranks.
    pub(crate) fn homology_of_facets(&self, facets: &[Face]) -> Result<HomologyProfile> {
        let d = facets.iter().map(|f| f.len()).max().unwrap_or(0);
        let faces = crate::complex::face_set(facets, self.face_limit)?;
        let mut by_size: Vec<Vec<Face>> = vec![Vec::new(); d + 1];
        for f in faces {
            by_size[f.len()].push(f);
        }
        for g in &mut by_size {
            g.sort();
        }
        // ranks[s] = rank of the boundary from size-s faces to size-(s-1) faces
        let mut ranks = vec![0usize; d + 2];
        for s in 1..=d {
            let index: HashMap<Face, usize> =
                by_size[s - 1].iter().enumerate().map(|(i, f)| (*f, i)).collect();
            let rows: Vec<Vec<i64>> = by_size[s]
                .iter()
                .map(|f| {
                    let mut row = vec![0i64; by_size[s - 1].len()];
                    for (pos, v) in f.iter().enumerate() {
                        let sign = if pos % 2 == 0 { 1 } else { -1 };
                        row[index[&f.without(v)]] = sign;
                    }
                    row
                })
                .collect();
            ranks[s] = self.field.rank(rows);
        }
        let dims = (0..=d)
            .map(|s| (by_size[s].len() - ranks[s] - ranks[s + 1]) as u64)
            .collect();
        Ok(HomologyProfile { dims })
    }

    /// Graded Betti table of `R/I_Δ` over `R = K[x_1..x_n]` by Hochster's formula.
    pub fn betti_table(&self, complex: &SimplicialComplex) -> Result<BettiTable> {
        let n = complex.n();
        if n > BETTI_VERTEX_LIMIT {
            return Err(Error::TooLarge { what: "Betti table", n, limit: BETTI_VERTEX_LIMIT });
        }
        // distinct restrictions share one homology computation
        let mut families: HashMap<Vec<Face>, Vec<usize>> = HashMap::new();
        for sigma in Face::full(n).subsets() {
            let fs = maximal_faces(complex.facets().iter().map(|f| f.intersection(sigma)).collect());
            families.entry(fs).or_default().push(sigma.len());
        }
        let mut work: Vec<(Vec<Face>, Vec<usize>)> = families.into_iter().collect();
        work.sort();
        let profiles: Vec<Result<HomologyProfile>> =
            work.par_iter().map(|(fs, _)| self.homology_of_facets(fs)).collect();
        let mut entries = vec![vec![0u64; n + 1]; n + 1];
        for ((_, sizes), profile) in work.iter().zip(profiles) {
            let profile = profile?;
            for &j in sizes {
                for (k, &h) in profile.dims.iter().enumerate() {
                    // H̃_{k-1} contributes to i = j - (k - 1) - 1 = j - k
                    if h != 0 {
                        entries[j - k][j] += h;
                    }
                }
            }
        }
        Ok(BettiTable { n, entries })
    }

    pub fn proj_dim(&self, complex: &SimplicialComplex) -> Result<usize> {
        Ok(self.betti_table(complex)?.proj_dim())
    }

    /// `reg(R/I_Δ)`.
    pub fn regularity_ring(&self, complex: &SimplicialComplex) -> Result<usize> {
        Ok(self.betti_table(complex)?.regularity())
    }

    /// `reg(I_Δ) = reg(R/I_Δ) + 1`; undefined for the zero ideal.
    pub fn regularity_ideal(&self, complex: &SimplicialComplex) -> Result<usize> {
        let table = self.betti_table(complex)?;
        if table.is_zero_ideal() {
            return Err(Error::ZeroIdeal);
        }
        Ok(table.regularity() + 1)
    }

    /// `depth R/I_Δ = n - pd(R/I_Δ)` (Auslander-Buchsbaum).
    pub fn depth(&self, complex: &SimplicialComplex) -> Result<usize> {
        Ok(complex.n() - self.proj_dim(complex)?)
    }
}

/// `dim K[Δ] = dim Δ + 1`.
pub fn krull_dim(complex: &SimplicialComplex) -> usize {
    complex.d()
}
