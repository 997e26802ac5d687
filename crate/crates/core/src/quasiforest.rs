//! Leaves, leaf orders, forests, and the cycle/point obstructions to quasi-forests.
//!
//! A complex is a quasi-forest iff it admits a leaf order. Equivalently it is flag with a
//! chordal 1-skeleton, equivalently it has no simplicial `k`-cycle and no simplicial
//! `k`-point, equivalently `reg(I_Δ) = 2` (outside the simplex case). [`is_quasi_forest`]
//! computes every route and refuses to answer if they disagree.

use std::ops::ControlFlow;

use serde::Serialize;

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::face::Face;
use crate::graph::Graph;
use crate::homology::{Engine, BETTI_VERTEX_LIMIT};

/// Facet order in which every facet is a leaf of the complex generated by it and its
/// predecessors.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LeafOrder {
    pub order: Vec<Face>,
}

impl LeafOrder {
    pub fn verify(&self, complex: &SimplicialComplex) -> bool {
        let mut sorted = self.order.clone();
        sorted.sort();
        if sorted != complex.facets() {
            return false;
        }
        (0..self.order.len()).all(|i| leaf_branch(&self.order[..=i], i).is_some())
    }
}

/// Simplicial `k`-cycle: an induced cycle of the 1-skeleton meeting each facet in at most
/// two vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SkWitness {
    pub cycle: Vec<usize>,
}

impl SkWitness {
    pub fn k(&self) -> usize {
        self.cycle.len()
    }

    pub fn verify(&self, complex: &SimplicialComplex) -> bool {
        let g = Graph::one_skeleton(complex);
        let w = crate::graph::CycleWitness { vertices: self.cycle.clone(), chordless: true };
        let set = w.vertex_set();
        w.verify(&g) && complex.facets().iter().all(|f| f.intersection(set).len() <= 2)
    }
}

/// Simplicial `k`-point. The `k = 2` case is, by convention, a simplicial 3-cycle.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PkWitness {
    Point { apex: usize, base: Face },
    Triangle(SkWitness),
}

impl PkWitness {
    pub fn k(&self) -> usize {
        match self {
            PkWitness::Point { base, .. } => base.len(),
            PkWitness::Triangle(_) => 2,
        }
    }

    pub fn verify(&self, complex: &SimplicialComplex) -> bool {
        match self {
            PkWitness::Point { apex, base } => is_point(complex, *apex, *base),
            PkWitness::Triangle(s) => s.k() == 3 && s.verify(complex),
        }
    }
}

/// `{t} ∪ B \ {b} ∈ Δ` for every `b ∈ B`, and `{t} ∪ B ∉ Δ`, with `|B| >= 3`.
fn is_point(complex: &SimplicialComplex, apex: usize, base: Face) -> bool {
    base.len() >= 3
        && !base.contains(apex)
        && !complex.contains(base.with(apex))
        && base.iter().all(|b| complex.contains(base.without(b).with(apex)))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Obstruction {
    Cycle(SkWitness),
    Point(PkWitness),
}

/// Booleans reported by each characterization.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MethodAgreement {
    pub leaf_order: bool,
    pub flag_and_chordal: bool,
    pub no_cycle_or_point: bool,
    /// `reg(I_Δ) = 2`; absent for the simplex (zero ideal) or above the Betti vertex limit.
    pub regularity_two: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuasiForestVerdict {
    pub positive: Option<LeafOrder>,
    pub negative: Option<Obstruction>,
    pub methods: MethodAgreement,
}

impl QuasiForestVerdict {
    pub fn is_quasi_forest(&self) -> bool {
        self.positive.is_some()
    }
}

/// A branch for `family[idx]`: a facet `M ≠ F` with `N ∩ F ⊆ M ∩ F` for all `N ≠ F`.
/// The first such `M` in `family` order; `None` if `F` is not a leaf. A lone facet is a
/// leaf without branch, reported as `Some(None)`.
fn leaf_branch(family: &[Face], idx: usize) -> Option<Option<Face>> {
    let f = family[idx];
    if family.len() == 1 {
        return Some(None);
    }
    let others = || family.iter().enumerate().filter(move |&(j, _)| j != idx).map(|(_, n)| *n);
    let need = others().fold(Face::EMPTY, |acc, n| acc.union(n.intersection(f)));
    // every N ∩ F lies in M ∩ F iff their union does
    others().find(|m| need.is_subset(m.intersection(f))).map(Some)
}

/// Leaf test. Returns `Some(branch)` when `facet` is a leaf; a lone facet has no branch.
pub fn is_leaf(complex: &SimplicialComplex, facet: Face) -> Result<Option<Option<Face>>> {
    let idx = complex
        .facets()
        .iter()
        .position(|f| *f == facet)
        .ok_or_else(|| Error::NotAFacet(facet.to_vec()))?;
    Ok(leaf_branch(complex.facets(), idx))
}

/// Vertices of `facet` lying in no other facet.
pub fn free_vertices(complex: &SimplicialComplex, facet: Face) -> Result<Face> {
    if !complex.is_facet(facet) {
        return Err(Error::NotAFacet(facet.to_vec()));
    }
    let others = complex.facets().iter().filter(|f| **f != facet).fold(Face::EMPTY, |a, f| a.union(*f));
    Ok(facet.difference(others))
}

/// Greedy leaf removal: repeatedly delete the first leaf in canonical order. Returns the
/// removal sequence reversed, or `None` if some stage has no leaf.
pub fn greedy_leaf_order(complex: &SimplicialComplex) -> Option<LeafOrder> {
    let mut family = complex.facets().to_vec();
    let mut removed = Vec::with_capacity(family.len());
    while family.len() > 1 {
        let idx = (0..family.len()).find(|&i| leaf_branch(&family, i).is_some())?;
        removed.push(family.remove(idx));
    }
    removed.extend(family);
    removed.reverse();
    Some(LeafOrder { order: removed })
}

/// Facet count bound for the exhaustive leaf-order search.
pub const EXHAUSTIVE_ORDER_LIMIT: usize = 10;

/// Depth-first search over removal sequences; complete but exponential.
pub fn exhaustive_leaf_order(complex: &SimplicialComplex) -> Result<Option<LeafOrder>> {
    let r = complex.facets().len();
    if r > EXHAUSTIVE_ORDER_LIMIT {
        return Err(Error::TooManyFacets { r, limit: EXHAUSTIVE_ORDER_LIMIT });
    }
    fn go(family: &mut Vec<Face>, removed: &mut Vec<Face>) -> bool {
        if family.len() <= 1 {
            return true;
        }
        for i in 0..family.len() {
            if leaf_branch(family, i).is_some() {
                let f = family.remove(i);
                removed.push(f);
                if go(family, removed) {
                    return true;
                }
                removed.pop();
                family.insert(i, f);
            }
        }
        false
    }
    let mut family = complex.facets().to_vec();
    let mut removed = Vec::new();
    if !go(&mut family, &mut removed) {
        return Ok(None);
    }
    removed.extend(family);
    removed.reverse();
    Ok(Some(LeafOrder { order: removed }))
}

/// Greedy order, with the exhaustive search as a fallback when it fails on small inputs.
pub fn quasi_forest_order(complex: &SimplicialComplex) -> Option<LeafOrder> {
    greedy_leaf_order(complex)
        .or_else(|| exhaustive_leaf_order(complex).ok().flatten())
}

/// Facet count bound for [`is_forest`].
pub const FOREST_FACET_LIMIT: usize = 20;

/// Forest test: every nonempty subfamily of facets has a leaf. Subfamilies are scanned by
/// size, then in lexicographic order of facet indices; the first leafless one is returned.
pub fn is_forest(complex: &SimplicialComplex) -> Result<Option<Vec<Face>>> {
    let facets = complex.facets();
    let r = facets.len();
    if r > FOREST_FACET_LIMIT {
        return Err(Error::TooManyFacets { r, limit: FOREST_FACET_LIMIT });
    }
    // families of size <= 2 always have a leaf
    for size in 3..=r {
        let mut found = None;
        for_each_combination(r, size, |idx| {
            let family: Vec<Face> = idx.iter().map(|&i| facets[i]).collect();
            if (0..family.len()).all(|i| leaf_branch(&family, i).is_none()) {
                found = Some(family);
                return ControlFlow::Break(());
            }
            ControlFlow::Continue(())
        });
        if found.is_some() {
            return Ok(found);
        }
    }
    Ok(None)
}

fn for_each_combination(r: usize, k: usize, mut f: impl FnMut(&[usize]) -> ControlFlow<()>) {
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        if f(&idx).is_break() {
            return;
        }
        let Some(i) = (0..k).rev().find(|&i| idx[i] != i + r - k) else { return };
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Cap on induced cycles inspected by [`find_sk`].
pub const CYCLE_SEARCH_LIMIT: usize = 10_000_000;

/// First simplicial `k`-cycle (`k >= 3`) in induced-cycle visiting order.
pub fn find_sk(complex: &SimplicialComplex) -> Result<Option<SkWitness>> {
    let g = Graph::one_skeleton(complex);
    let mut seen = 0usize;
    let mut over = false;
    let hit = g.find_induced_cycle(g.n(), |c| {
        seen += 1;
        if seen > CYCLE_SEARCH_LIMIT {
            over = true;
            return true;
        }
        let set = Face::from_indices(c.iter().copied());
        complex.facets().iter().all(|f| f.intersection(set).len() <= 2)
    });
    if over {
        return Err(Error::SizeLimit { what: "enumerating induced cycles", limit: CYCLE_SEARCH_LIMIT });
    }
    Ok(hit.map(|w| SkWitness { cycle: w.vertices }))
}

/// Simplicial `k`-point search through the minimal nonfaces.
///
/// For each minimal nonface `N` with `|N| >= 3` in canonical order: the first apex `t ∉ N`
/// making `(t, N)` a point, else (for `|N| >= 4`) apex `min N` with base `N \ min N`.
/// With no such point, a simplicial 3-cycle is reported as the `k = 2` point.
pub fn find_pk(complex: &SimplicialComplex) -> Result<Option<PkWitness>> {
    if let Some(p) = find_point_via_nonfaces(complex)? {
        return Ok(Some(p));
    }
    Ok(find_triangle(complex).map(PkWitness::Triangle))
}

fn find_point_via_nonfaces(complex: &SimplicialComplex) -> Result<Option<PkWitness>> {
    for nonface in complex.minimal_nonfaces()? {
        if nonface.len() < 3 {
            continue;
        }
        let outside = complex.support().difference(nonface);
        if let Some(apex) = outside.iter().find(|&t| is_point(complex, t, nonface)) {
            return Ok(Some(PkWitness::Point { apex, base: nonface }));
        }
        if nonface.len() >= 4 {
            let apex = nonface.min().expect("nonempty");
            return Ok(Some(PkWitness::Point { apex, base: nonface.without(apex) }));
        }
    }
    Ok(None)
}

/// A triangle of the 1-skeleton that is not a face.
fn find_triangle(complex: &SimplicialComplex) -> Option<SkWitness> {
    let g = Graph::one_skeleton(complex);
    for a in 0..g.n() {
        for b in g.neighbors(a).iter().filter(|&b| b > a) {
            for c in g.neighbors(a).intersection(g.neighbors(b)).iter().filter(|&c| c > b) {
                if !complex.contains(Face::from_indices([a, b, c])) {
                    return Some(SkWitness { cycle: vec![a, b, c] });
                }
            }
        }
    }
    None
}

/// Vertex bound for [`find_pk_bruteforce`].
pub const BRUTE_FORCE_POINT_LIMIT: usize = 14;

/// Definition-level search for a simplicial `k`-point with `k >= 3`: every apex against
/// every base set of size at least three.
pub fn find_pk_bruteforce(complex: &SimplicialComplex) -> Result<Option<PkWitness>> {
    let n = complex.n();
    if n > BRUTE_FORCE_POINT_LIMIT {
        return Err(Error::TooLarge { what: "brute-force point search", n, limit: BRUTE_FORCE_POINT_LIMIT });
    }
    for apex in 0..n {
        let rest = complex.vertex_set().without(apex);
        let mut bases: Vec<Face> = rest.subsets().filter(|b| b.len() >= 3).collect();
        bases.sort();
        if let Some(base) = bases.into_iter().find(|b| is_point(complex, apex, *b)) {
            return Ok(Some(PkWitness::Point { apex, base }));
        }
    }
    Ok(None)
}

/// Quasi-forest decision by all available characterizations, with a certificate.
pub fn is_quasi_forest(complex: &SimplicialComplex) -> Result<QuasiForestVerdict> {
    let order = quasi_forest_order(complex);
    if let Some(o) = &order {
        if !o.verify(complex) {
            return Err(Error::OracleDisagreement("leaf order failed re-verification".into()));
        }
    }

    let flag = complex.is_flag()?.is_none();
    let chordal = Graph::one_skeleton(complex).is_chordal();

    let sk = find_sk(complex)?;
    let pk = find_pk(complex)?;
    for w in sk.iter() {
        if !w.verify(complex) {
            return Err(Error::OracleDisagreement(format!("invalid cycle witness {w:?}")));
        }
    }
    for w in pk.iter() {
        if !w.verify(complex) {
            return Err(Error::OracleDisagreement(format!("invalid point witness {w:?}")));
        }
    }
    if complex.n() <= BRUTE_FORCE_POINT_LIMIT {
        let via_nonfaces = find_point_via_nonfaces(complex)?.is_some();
        let brute = find_pk_bruteforce(complex)?.is_some();
        if via_nonfaces != brute {
            return Err(Error::OracleDisagreement(format!(
                "point search via nonfaces ({via_nonfaces}) and by definition ({brute}) differ"
            )));
        }
    }

    let regularity_two = if complex.n() <= BETTI_VERTEX_LIMIT && !complex.is_full_simplex() {
        Some(Engine::default().regularity_ideal(complex)? == 2)
    } else {
        None
    };

    let methods = MethodAgreement {
        leaf_order: order.is_some(),
        flag_and_chordal: flag && chordal,
        no_cycle_or_point: sk.is_none() && pk.is_none(),
        regularity_two,
    };
    let answer = methods.leaf_order;
    // a simplex with ghost vertices is a quasi-forest whose ideal is generated by variables
    let reg_agrees = match methods.regularity_two {
        Some(r) => r == answer || (complex.is_simplex() && answer),
        None => true,
    };
    if methods.flag_and_chordal != answer || methods.no_cycle_or_point != answer || !reg_agrees {
        return Err(Error::OracleDisagreement(format!("quasi-forest characterizations differ: {methods:?}")));
    }

    let negative = if answer {
        None
    } else {
        match pk {
            Some(p @ PkWitness::Point { .. }) => Some(Obstruction::Point(p)),
            other => sk.map(Obstruction::Cycle).or(other.map(Obstruction::Point)),
        }
    };
    Ok(QuasiForestVerdict { positive: order, negative, methods })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn delta() -> SimplicialComplex {
        SimplicialComplex::from_facets([[0, 1, 2], [1, 3, 5], [2, 3, 4]], 6).unwrap()
    }

    fn gamma() -> SimplicialComplex {
        SimplicialComplex::from_facets([[0, 1, 2], [1, 3, 5], [2, 3, 4], [1, 2, 3]], 6).unwrap()
    }

    fn theta() -> SimplicialComplex {
        SimplicialComplex::from_facets([[0, 1, 3], [0, 2, 3], [1, 2, 3]], 4).unwrap()
    }

    fn f(v: &[usize]) -> Face {
        Face::from_indices(v.iter().copied())
    }

    /// Brute-force branch search straight from the definition.
    fn leaf_by_definition(family: &[Face], facet: Face) -> bool {
        if family.len() == 1 {
            return true;
        }
        family.iter().filter(|m| **m != facet).any(|m| {
            family
                .iter()
                .filter(|n| **n != facet)
                .all(|n| n.intersection(facet).is_subset(m.intersection(facet)))
        })
    }

    #[test]
    fn leaf_examples() {
        let d = delta();
        let a = f(&[0, 1, 2]);
        // the other facets meet it in {x2} and {x3}, and no facet holds both
        assert!(!leaf_by_definition(d.facets(), a));
        assert_eq!(is_leaf(&d, a).unwrap(), None);
        let g = gamma();
        assert_eq!(is_leaf(&g, a).unwrap(), Some(Some(f(&[1, 2, 3]))));
        let s = SimplicialComplex::simplex(3);
        assert_eq!(is_leaf(&s, Face::full(3)).unwrap(), Some(None));
        assert!(matches!(is_leaf(&g, f(&[0, 1])), Err(Error::NotAFacet(_))));
    }

    #[test]
    fn leaves_agree_with_definition_on_named_complexes() {
        for c in [delta(), gamma(), theta()] {
            for &facet in c.facets() {
                assert_eq!(is_leaf(&c, facet).unwrap().is_some(), leaf_by_definition(c.facets(), facet));
            }
        }
    }

    #[test]
    fn free_vertex_examples() {
        assert_eq!(free_vertices(&theta(), f(&[0, 1, 3])).unwrap(), Face::EMPTY);
        assert_eq!(free_vertices(&delta(), f(&[0, 1, 2])).unwrap(), f(&[0]));
        let s = SimplicialComplex::simplex(4);
        assert_eq!(free_vertices(&s, Face::full(4)).unwrap(), Face::full(4));
    }

    #[test]
    fn order_examples() {
        let o = quasi_forest_order(&gamma()).unwrap();
        assert!(o.verify(&gamma()));
        assert_eq!(o.order.len(), 4);
        assert!(quasi_forest_order(&delta()).is_none());
        let s = SimplicialComplex::simplex(3);
        assert_eq!(quasi_forest_order(&s).unwrap().order, vec![Face::full(3)]);
    }

    #[test]
    fn forest_examples() {
        assert_eq!(is_forest(&gamma()).unwrap(), Some(delta().facets().to_vec()));
        let ind_c4 = SimplicialComplex::from_facets([[0, 2], [1, 3]], 4).unwrap();
        assert_eq!(is_forest(&ind_c4).unwrap(), None);
        assert_eq!(is_forest(&SimplicialComplex::simplex(2)).unwrap(), None);
    }

    #[test]
    fn combinations_in_order() {
        let mut seen = Vec::new();
        for_each_combination(4, 2, |c| {
            seen.push(c.to_vec());
            ControlFlow::Continue(())
        });
        assert_eq!(seen, vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]);
    }

    #[test]
    fn sk_examples() {
        assert_eq!(find_sk(&delta()).unwrap(), Some(SkWitness { cycle: vec![1, 2, 3] }));
        assert_eq!(find_sk(&gamma()).unwrap(), None);
        assert_eq!(find_sk(&theta()).unwrap(), Some(SkWitness { cycle: vec![0, 1, 2] }));
    }

    #[test]
    fn pk_examples() {
        let p = find_pk(&theta()).unwrap().unwrap();
        assert_eq!(p, PkWitness::Point { apex: 3, base: f(&[0, 1, 2]) });
        assert_eq!(p.k(), 3);
        assert!(p.verify(&theta()));
        assert_eq!(find_pk(&gamma()).unwrap(), None);
        assert_eq!(find_pk(&SimplicialComplex::simplex(4)).unwrap(), None);
        // Delta has only the 2-point given by its simplicial 3-cycle
        assert_eq!(find_pk(&delta()).unwrap(), Some(PkWitness::Triangle(SkWitness { cycle: vec![1, 2, 3] })));
        assert_eq!(find_pk_bruteforce(&theta()).unwrap(), Some(PkWitness::Point { apex: 3, base: f(&[0, 1, 2]) }));
        assert_eq!(find_pk_bruteforce(&delta()).unwrap(), None);
    }

    #[test]
    fn large_nonface_gives_point() {
        // boundary of the 3-simplex: minimal nonface of size 4
        let b = SimplicialComplex::from_facets([[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]], 4).unwrap();
        let p = find_pk(&b).unwrap().unwrap();
        assert_eq!(p, PkWitness::Point { apex: 0, base: f(&[1, 2, 3]) });
        assert!(p.verify(&b));
    }

    #[test]
    fn verdict_examples() {
        let v = is_quasi_forest(&gamma()).unwrap();
        assert!(v.is_quasi_forest());
        assert!(v.positive.unwrap().verify(&gamma()));
        let v = is_quasi_forest(&theta()).unwrap();
        assert_eq!(v.negative, Some(Obstruction::Point(PkWitness::Point { apex: 3, base: f(&[0, 1, 2]) })));
        let v = is_quasi_forest(&delta()).unwrap();
        assert_eq!(v.negative, Some(Obstruction::Cycle(SkWitness { cycle: vec![1, 2, 3] })));
        let v = is_quasi_forest(&SimplicialComplex::simplex(3)).unwrap();
        assert!(v.is_quasi_forest());
        assert_eq!(v.methods.regularity_two, None);
    }

    #[test]
    fn cycle_graph_independence_complexes() {
        for k in 3..=10 {
            let ind = Graph::cycle_graph(k).unwrap().independence_complex().unwrap();
            let v = is_quasi_forest(&ind).unwrap();
            assert_eq!(v.is_quasi_forest(), k <= 4, "k = {k}");
        }
    }
}
