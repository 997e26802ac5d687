//! Cohen-Macaulay and almost Cohen-Macaulay tests, Hilbert series, and the h-vector
//! criteria for quasi-forests.

use std::collections::{BTreeSet, HashMap};

use rayon::prelude::*;
use serde::Serialize;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::face::Face;
use crate::graph::Graph;
use crate::homology::{krull_dim, Engine};
use crate::quasiforest::quasi_forest_order;

/// `H(t) = (h_0 + .. + h_s t^s) / (1 - t)^d`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HilbertSeries {
    /// Trailing zeros stripped; degree `s = numerator.len() - 1`.
    pub numerator: Vec<i64>,
    pub denominator_exponent: usize,
}

impl HilbertSeries {
    pub fn degree(&self) -> usize {
        self.numerator.len() - 1
    }

    /// `a = s - d`, the degree of the series as a rational function.
    pub fn a_invariant(&self) -> i64 {
        self.degree() as i64 - self.denominator_exponent as i64
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FrobergBound {
    pub f_top: u64,
    pub bound: u64,
    pub equality: bool,
}

pub fn hilbert_series(complex: &SimplicialComplex) -> Result<HilbertSeries> {
    let h = complex.f_vector()?.h_vector();
    Ok(HilbertSeries { numerator: h.stripped(), denominator_exponent: complex.d() })
}

pub fn a_invariant(complex: &SimplicialComplex) -> Result<i64> {
    Ok(hilbert_series(complex)?.a_invariant())
}

fn require_quasi_forest(complex: &SimplicialComplex) -> Result<()> {
    match quasi_forest_order(complex) {
        Some(_) => Ok(()),
        None => Err(Error::NotQuasiForest),
    }
}

/// For a quasi-forest: Cohen-Macaulay iff `h_2 = .. = h_d = 0`.
pub fn qf_cm_by_hvector(complex: &SimplicialComplex) -> Result<bool> {
    require_quasi_forest(complex)?;
    let h = complex.f_vector()?.h_vector();
    Ok(h.0.iter().skip(2).all(|&x| x == 0))
}

/// For a quasi-forest: almost Cohen-Macaulay iff `h_2 <= 0` and `h_3 = .. = h_d = 0`.
pub fn qf_almost_cm_by_hvector(complex: &SimplicialComplex) -> Result<bool> {
    require_quasi_forest(complex)?;
    let h = complex.f_vector()?.h_vector();
    Ok(h.get(2) <= 0 && h.0.iter().skip(3).all(|&x| x == 0))
}

impl Engine {
    /// Reisner's criterion: every link (including `lk ∅ = Δ`) has vanishing reduced
    /// homology below its top dimension.
    pub fn reisner(&self, complex: &SimplicialComplex) -> Result<bool> {
        let faces: Vec<Face> = complex.all_faces_within(self.face_limit)?.into_iter().flatten().collect();
        // links of faces sharing a facet family are computed once
        let links: BTreeSet<Vec<Face>> = faces.iter().map(|f| complex.link_facets(*f)).collect();
        let links: Vec<Vec<Face>> = links.into_iter().collect();
        let ok: Result<Vec<bool>> = links
            .par_iter()
            .map(|lk| {
                let top = lk.iter().map(|f| f.dim()).max().unwrap_or(-1);
                let h = self.homology_of_facets(lk)?;
                Ok((-1..top).all(|i| h.get(i) == 0))
            })
            .collect();
        Ok(ok?.into_iter().all(|b| b))
    }

    /// Cohen-Macaulay test; `depth = dim` and Reisner's criterion must agree.
    pub fn is_cm(&self, complex: &SimplicialComplex) -> Result<bool> {
        let by_depth = self.depth(complex)? == krull_dim(complex);
        let by_links = self.reisner(complex)?;
        if by_depth != by_links {
            return Err(Error::OracleDisagreement(format!(
                "depth = dim gives {by_depth}, Reisner gives {by_links} for {complex:?}"
            )));
        }
        Ok(by_depth)
    }

    /// `depth >= dim - 1`.
    pub fn is_almost_cm(&self, complex: &SimplicialComplex) -> Result<bool> {
        Ok(self.depth(complex)? + 1 >= krull_dim(complex))
    }

    /// `f_{d-1} <= n - d + 1` for a quasi-forest, with equality iff Cohen-Macaulay.
    pub fn froberg_bound_check(&self, complex: &SimplicialComplex) -> Result<FrobergBound> {
        require_quasi_forest(complex)?;
        let f = complex.f_vector()?;
        let d = complex.d();
        let f_top = f.get(d as isize - 1);
        let n = complex.support().len();
        let bound = (n + 1 - d) as u64;
        let equality = f_top == bound;
        if f_top > bound {
            return Err(Error::OracleDisagreement(format!("f_(d-1) = {f_top} exceeds n - d + 1 = {bound}")));
        }
        let cm = self.is_cm(complex)?;
        if cm != equality {
            return Err(Error::OracleDisagreement(format!("bound equality {equality} but Cohen-Macaulay {cm}")));
        }
        Ok(FrobergBound { f_top, bound, equality })
    }

    /// For a Ferrers graph on parts of equal size `m`: `Ind(G)` is Cohen-Macaulay iff its
    /// Hilbert series is `(1 + m t) / (1 - t)^m`. Both sides are computed and must agree;
    /// the returned value is the Cohen-Macaulay verdict.
    pub fn ferrers_cm_criterion(&self, graph: &Graph, xs: &[usize], ys: &[usize]) -> Result<bool> {
        if xs.len() != ys.len() {
            return Err(Error::UnbalancedParts(xs.len(), ys.len()));
        }
        if graph.is_ferrers(xs, ys)?.is_none() {
            return Err(Error::NotFerrers);
        }
        let m = xs.len();
        let ind = graph.independence_complex()?;
        let cm = self.is_cm(&ind)?;
        let series = hilbert_series(&ind)?;
        let expected = HilbertSeries { numerator: vec![1, m as i64], denominator_exponent: m };
        let matches = series == expected;
        if cm != matches {
            return Err(Error::OracleDisagreement(format!(
                "Ferrers graph: Cohen-Macaulay {cm} but Hilbert series {series:?}"
            )));
        }
        Ok(cm)
    }
}

/// Vertex bound for [`is_vertex_decomposable`].
pub const VERTEX_DECOMPOSABLE_LIMIT: usize = 12;

/// Recursive shedding-vertex test with memoization on facet families.
pub fn is_vertex_decomposable(complex: &SimplicialComplex) -> Result<bool> {
    let n = complex.support().len();
    if n > VERTEX_DECOMPOSABLE_LIMIT {
        return Err(Error::TooLarge { what: "vertex decomposability", n, limit: VERTEX_DECOMPOSABLE_LIMIT });
    }
    let mut memo = HashMap::new();
    Ok(vd(complex, &mut memo))
}

fn vd(complex: &SimplicialComplex, memo: &mut HashMap<Vec<Face>, bool>) -> bool {
    if complex.is_simplex() {
        return true;
    }
    if let Some(&b) = memo.get(complex.facets()) {
        return b;
    }
    let result = complex.support().iter().any(|v| {
        let deletion = SimplicialComplex::generated_by(complex.n(), complex.deletion_facets(v));
        // no facet of the deletion may be a face of the link
        let shedding = deletion.facets().iter().all(|g| !complex.contains(g.with(v)));
        if !shedding {
            return false;
        }
        let link = SimplicialComplex::generated_by(complex.n(), complex.link_facets(Face::singleton(v)));
        vd(&deletion, memo) && vd(&link, memo)
    });
    memo.insert(complex.facets().to_vec(), result);
    result
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gamma() -> SimplicialComplex {
        SimplicialComplex::from_facets([[0, 1, 2], [1, 3, 5], [2, 3, 4], [1, 2, 3]], 6).unwrap()
    }

    fn ind_cycle(n: usize) -> SimplicialComplex {
        Graph::cycle_graph(n).unwrap().independence_complex().unwrap()
    }

    #[test]
    fn cm_examples() {
        let e = Engine::default();
        assert!(e.is_cm(&gamma()).unwrap());
        assert!(e.is_cm(&ind_cycle(5)).unwrap());
        assert!(!e.is_cm(&ind_cycle(6)).unwrap());
        assert!(e.is_almost_cm(&ind_cycle(6)).unwrap());
        assert!(!e.is_almost_cm(&ind_cycle(10)).unwrap());
        assert!(e.is_cm(&SimplicialComplex::simplex(3)).unwrap());
    }

    #[test]
    fn hilbert_examples() {
        let s = hilbert_series(&gamma()).unwrap();
        assert_eq!(s.numerator, vec![1, 3]);
        assert_eq!(s.denominator_exponent, 3);
        assert_eq!(s.a_invariant(), -2);
        let simplex = hilbert_series(&SimplicialComplex::simplex(4)).unwrap();
        assert_eq!((simplex.numerator.clone(), simplex.a_invariant()), (vec![1], -4));
    }

    #[test]
    fn hvector_criteria_examples() {
        assert!(qf_cm_by_hvector(&gamma()).unwrap());
        let k22 = Graph::from_edges(4, [(0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        let ind = k22.independence_complex().unwrap();
        assert_eq!(ind.f_vector().unwrap().h_vector().0, vec![1, 2, -1]);
        assert!(!qf_cm_by_hvector(&ind).unwrap());
        assert!(qf_almost_cm_by_hvector(&ind).unwrap());
        let cone = gamma().cone();
        assert_eq!(cone.f_vector().unwrap().h_vector().0, vec![1, 3, 0, 0, 0]);
        assert!(qf_cm_by_hvector(&cone).unwrap());
        assert!(Engine::default().is_cm(&cone).unwrap());
        let delta = SimplicialComplex::from_facets([[0, 1, 2], [1, 3, 5], [2, 3, 4]], 6).unwrap();
        assert_eq!(qf_cm_by_hvector(&delta), Err(Error::NotQuasiForest));
    }

    #[test]
    fn froberg_examples() {
        let e = Engine::default();
        assert_eq!(e.froberg_bound_check(&gamma()).unwrap(), FrobergBound { f_top: 4, bound: 4, equality: true });
        let ind_c4 = ind_cycle(4);
        assert_eq!(e.froberg_bound_check(&ind_c4).unwrap(), FrobergBound { f_top: 2, bound: 3, equality: false });
        let s = SimplicialComplex::simplex(5);
        assert_eq!(e.froberg_bound_check(&s).unwrap(), FrobergBound { f_top: 1, bound: 1, equality: true });
    }

    #[test]
    fn ferrers_examples() {
        let e = Engine::default();
        let tri = Graph::from_edges(4, [(0, 2), (0, 3), (1, 2)]).unwrap();
        assert!(e.ferrers_cm_criterion(&tri, &[0, 1], &[2, 3]).unwrap());
        let ind = tri.independence_complex().unwrap();
        assert_eq!(hilbert_series(&ind).unwrap().numerator, vec![1, 2]);
        let k22 = Graph::from_edges(4, [(0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        assert!(!e.ferrers_cm_criterion(&k22, &[0, 1], &[2, 3]).unwrap());
        assert_eq!(hilbert_series(&k22.independence_complex().unwrap()).unwrap().numerator, vec![1, 2, -1]);
        let k11 = Graph::from_edges(2, [(0, 1)]).unwrap();
        assert!(e.ferrers_cm_criterion(&k11, &[0], &[1]).unwrap());
        let k12 = Graph::from_edges(3, [(0, 1), (0, 2)]).unwrap();
        assert_eq!(e.ferrers_cm_criterion(&k12, &[0], &[1, 2]), Err(Error::UnbalancedParts(1, 2)));
        let matching = Graph::from_edges(4, [(0, 2), (1, 3)]).unwrap();
        assert_eq!(e.ferrers_cm_criterion(&matching, &[0, 1], &[2, 3]), Err(Error::NotFerrers));
    }

    #[test]
    fn vertex_decomposable_examples() {
        assert!(is_vertex_decomposable(&SimplicialComplex::simplex(4)).unwrap());
        assert!(is_vertex_decomposable(&ind_cycle(5)).unwrap());
        // two disjoint edges: pure and disconnected, so not even Cohen-Macaulay
        assert!(!is_vertex_decomposable(&ind_cycle(4)).unwrap());
        let glued = SimplicialComplex::from_facets([[0, 1, 2], [1, 2, 3]], 4).unwrap();
        assert!(is_vertex_decomposable(&glued).unwrap());
        // pure, but the triangles meet in a vertex only: not shellable
        let bowtie = SimplicialComplex::from_facets([[0, 1, 2], [2, 3, 4]], 5).unwrap();
        assert!(!is_vertex_decomposable(&bowtie).unwrap());
        // two disjoint triangles are not shellable, hence not vertex decomposable
        let two = SimplicialComplex::from_facets([[0, 1, 2], [3, 4, 5]], 6).unwrap();
        assert!(!is_vertex_decomposable(&two).unwrap());
    }
}
