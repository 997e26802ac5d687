//! Simple graphs on at most 64 vertices and the graph/complex dictionary.

use std::collections::VecDeque;
use std::fmt;
use std::ops::ControlFlow;

use serde::Serialize;

use crate::complex::{default_label, SimplicialComplex, DEFAULT_FACE_LIMIT};
use crate::error::{Error, Result};
use crate::face::{Face, MAX_VERTICES};

/// Simple undirected graph with bitmask adjacency.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<u64>,
    labels: Vec<String>,
}

/// A closed walk `v_1 .. v_k v_1` through distinct vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CycleWitness {
    pub vertices: Vec<usize>,
    pub chordless: bool,
}

impl CycleWitness {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertex_set(&self) -> Face {
        Face::from_indices(self.vertices.iter().copied())
    }

    /// Re-check the witness against `g`.
    pub fn verify(&self, g: &Graph) -> bool {
        let k = self.vertices.len();
        if k < 3 || self.vertex_set().len() != k || self.vertices.iter().any(|&v| v >= g.n()) {
            return false;
        }
        let closes = (0..k).all(|i| g.has_edge(self.vertices[i], self.vertices[(i + 1) % k]));
        if !closes {
            return false;
        }
        if self.chordless {
            let set = self.vertex_set();
            return self.vertices.iter().all(|&v| g.neighbors(v).intersection(set).len() == 2);
        }
        true
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Chordality {
    /// Perfect elimination ordering: each vertex's later neighbours form a clique.
    Chordal { peo: Vec<usize> },
    Hole(CycleWitness),
}

impl Chordality {
    pub fn is_chordal(&self) -> bool {
        matches!(self, Chordality::Chordal { .. })
    }
}

/// Result of a Ferrers test: the sorted orders of the two parts that exhibit the staircase.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FerrersLabeling {
    pub x_order: Vec<usize>,
    pub y_order: Vec<usize>,
    /// `partition[i]` is the degree of `x_order[i]`.
    pub partition: Vec<usize>,
}

pub const DEFAULT_BERGE_LIMIT: usize = 10;

impl Graph {
    pub fn new(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices { n, max: MAX_VERTICES });
        }
        Ok(Graph { adj: vec![0; n], labels: (0..n).map(default_label).collect() })
    }

    pub fn from_edges<I: IntoIterator<Item = (usize, usize)>>(n: usize, edges: I) -> Result<Self> {
        let mut g = Graph::new(n)?;
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.n();
        for x in [u, v] {
            if x >= n {
                return Err(Error::IndexOutOfRange { index: x, n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        self.adj[u] |= 1 << v;
        self.adj[v] |= 1 << u;
        Ok(())
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.n());
        self.labels = labels;
        self
    }

    pub fn complete(n: usize) -> Result<Self> {
        Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
    }

    pub fn cycle_graph(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::TooSmall { what: "cycle graph", n, min: 3 });
        }
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    /// The path `x_1 x_2 .. x_n` with `n - 1` edges.
    pub fn path_graph(n: usize) -> Result<Self> {
        if n < 1 {
            return Err(Error::TooSmall { what: "path graph", n, min: 1 });
        }
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    pub fn neighbors(&self, v: usize) -> Face {
        Face::from_bits(self.adj[v])
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn vertex_set(&self) -> Face {
        Face::full(self.n())
    }

    /// Edges `(u, v)` with `u < v` in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n())
            .flat_map(|u| self.neighbors(u).iter().filter(move |&v| v > u).map(move |v| (u, v)))
            .collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn is_independent(&self, set: Face) -> bool {
        set.iter().all(|v| self.neighbors(v).intersection(set).is_empty())
    }

    pub fn is_clique(&self, set: Face) -> bool {
        set.iter().all(|v| set.without(v).is_subset(self.neighbors(v)))
    }

    pub fn complement(&self) -> Graph {
        let full = self.vertex_set();
        let adj = (0..self.n()).map(|v| full.without(v).difference(self.neighbors(v)).bits());
        Graph { adj: adj.collect(), labels: self.labels.clone() }
    }

    pub fn induced_subgraph(&self, set: Face) -> (Graph, Vec<usize>) {
        let keep = set.to_vec();
        let mut map = vec![None; self.n()];
        for (new, &old) in keep.iter().enumerate() {
            map[old] = Some(new);
        }
        let adj = keep.iter().map(|&v| self.neighbors(v).map(&map).bits()).collect();
        let labels = keep.iter().map(|&v| self.labels[v].clone()).collect();
        (Graph { adj, labels }, keep)
    }

    /// Maximal cliques in canonical order (Bron-Kerbosch with pivoting).
    pub fn maximal_cliques(&self, limit: usize) -> Result<Vec<Face>> {
        let mut out = Vec::new();
        self.bron_kerbosch(Face::EMPTY, self.vertex_set(), Face::EMPTY, &mut out, limit)?;
        out.sort();
        Ok(out)
    }

    fn bron_kerbosch(
        &self,
        r: Face,
        mut p: Face,
        mut x: Face,
        out: &mut Vec<Face>,
        limit: usize,
    ) -> Result<()> {
        if p.is_empty() && x.is_empty() {
            out.push(r);
            if out.len() > limit {
                return Err(Error::SizeLimit { what: "enumerating maximal cliques", limit });
            }
            return Ok(());
        }
        let pivot = p
            .union(x)
            .iter()
            .max_by_key(|&u| (self.neighbors(u).intersection(p).len(), std::cmp::Reverse(u)))
            .expect("p or x nonempty");
        for v in p.difference(self.neighbors(pivot)).iter() {
            let nv = self.neighbors(v);
            self.bron_kerbosch(r.with(v), p.intersection(nv), x.intersection(nv), out, limit)?;
            p = p.without(v);
            x = x.with(v);
        }
        Ok(())
    }

    /// `Ind(G)`: facets are the maximal independent sets.
    pub fn independence_complex(&self) -> Result<SimplicialComplex> {
        let facets = self.complement().maximal_cliques(DEFAULT_FACE_LIMIT)?;
        Ok(SimplicialComplex::generated_by(self.n(), facets).with_labels(self.labels.clone()))
    }

    /// `Δ(G)`: facets are the maximal cliques.
    pub fn clique_complex(&self) -> Result<SimplicialComplex> {
        let facets = self.maximal_cliques(DEFAULT_FACE_LIMIT)?;
        Ok(SimplicialComplex::generated_by(self.n(), facets).with_labels(self.labels.clone()))
    }

    /// The graph of 1-faces of `Δ` on its full vertex set.
    pub fn one_skeleton(complex: &SimplicialComplex) -> Graph {
        let mut g = Graph::new(complex.n()).expect("complex fits");
        for f in complex.facets() {
            for u in f.iter() {
                g.adj[u] |= f.without(u).bits();
            }
        }
        g.labels = complex.labels().to_vec();
        g
    }

    /// Maximum-cardinality search visiting order, ties broken by smallest index.
    pub fn maximum_cardinality_search(&self) -> Vec<usize> {
        let n = self.n();
        let mut weight = vec![0usize; n];
        let mut unvisited = self.vertex_set();
        let mut order = Vec::with_capacity(n);
        while let Some(first) = unvisited.min() {
            let v = unvisited.iter().fold(first, |best, u| if weight[u] > weight[best] { u } else { best });
            order.push(v);
            unvisited = unvisited.without(v);
            for u in self.neighbors(v).intersection(unvisited).iter() {
                weight[u] += 1;
            }
        }
        order
    }

    /// Check that each vertex's later neighbours in `order` form a clique.
    pub fn is_perfect_elimination_ordering(&self, order: &[usize]) -> bool {
        let mut later = self.vertex_set();
        if order.len() != self.n() || Face::from_indices(order.iter().copied()) != later {
            return false;
        }
        for &v in order {
            later = later.without(v);
            if !self.is_clique(self.neighbors(v).intersection(later)) {
                return false;
            }
        }
        true
    }

    /// Chordality by maximum-cardinality search and elimination-order verification. A failed
    /// verification is turned into a chordless cycle of length at least four.
    pub fn chordality(&self) -> Chordality {
        let mut peo = self.maximum_cardinality_search();
        peo.reverse();
        if self.is_perfect_elimination_ordering(&peo) {
            return Chordality::Chordal { peo };
        }
        let hole = self.extract_hole().expect("non-chordal graph has a hole");
        Chordality::Hole(hole)
    }

    pub fn is_chordal(&self) -> bool {
        self.chordality().is_chordal()
    }

    /// A chordless cycle of length >= 4, if any: for a vertex `v` with non-adjacent neighbours
    /// `u < w`, a shortest `u`-`w` path avoiding the rest of `N[v]` closes one.
    fn extract_hole(&self) -> Option<CycleWitness> {
        for v in 0..self.n() {
            let nv = self.neighbors(v);
            for u in nv.iter() {
                for w in nv.iter().filter(|&w| w > u && !self.has_edge(u, w)) {
                    let blocked = nv.with(v).without(u).without(w);
                    if let Some(path) = self.shortest_path(u, w, blocked) {
                        let mut vertices = vec![v];
                        vertices.extend(path);
                        return Some(CycleWitness { vertices, chordless: true });
                    }
                }
            }
        }
        None
    }

    fn shortest_path(&self, from: usize, to: usize, blocked: Face) -> Option<Vec<usize>> {
        let mut prev = vec![usize::MAX; self.n()];
        let mut seen = blocked.with(from);
        let mut queue = VecDeque::from([from]);
        while let Some(x) = queue.pop_front() {
            if x == to {
                let mut path = vec![to];
                let mut cur = to;
                while cur != from {
                    cur = prev[cur];
                    path.push(cur);
                }
                path.reverse();
                return Some(path);
            }
            for y in self.neighbors(x).difference(seen).iter() {
                seen = seen.with(y);
                prev[y] = x;
                queue.push_back(y);
            }
        }
        None
    }

    /// Visit every induced cycle of length `>= 3` and `<= max_len` once.
    ///
    /// Cycles are reported as `v_0 v_1 .. v_{k-1}` with `v_0` the minimum and `v_1 < v_{k-1}`;
    /// the visiting order is lexicographic in that sequence.
    pub fn for_each_induced_cycle<B>(
        &self,
        max_len: usize,
        mut visit: impl FnMut(&[usize]) -> ControlFlow<B>,
    ) -> Option<B> {
        let mut path = Vec::with_capacity(max_len);
        for s in 0..self.n() {
            path.clear();
            path.push(s);
            let allowed = Face::from_bits(u64::MAX << s).intersection(self.vertex_set()).without(s);
            if let ControlFlow::Break(b) = self.extend_chordless(&mut path, allowed, Face::EMPTY, max_len, &mut visit) {
                return Some(b);
            }
        }
        None
    }

    /// `path` is chordless; `forbidden` holds the neighbours of its interior vertices
    /// (excluding the last one).
    fn extend_chordless<B>(
        &self,
        path: &mut Vec<usize>,
        allowed: Face,
        forbidden: Face,
        max_len: usize,
        visit: &mut impl FnMut(&[usize]) -> ControlFlow<B>,
    ) -> ControlFlow<B> {
        let s = path[0];
        let last = *path.last().expect("nonempty");
        let on_path = Face::from_indices(path.iter().copied());
        let candidates = self.neighbors(last).intersection(allowed).difference(on_path).difference(forbidden);
        for w in candidates.iter() {
            if path.len() >= 2 && self.has_edge(w, s) {
                // closes a cycle; keep one orientation
                if path[1] < w {
                    path.push(w);
                    let flow = visit(path);
                    path.pop();
                    flow?;
                }
                continue;
            }
            if path.len() + 1 >= max_len {
                continue;
            }
            let next_forbidden = if path.len() >= 2 { forbidden.union(self.neighbors(last)) } else { forbidden };
            path.push(w);
            let flow = self.extend_chordless(path, allowed, next_forbidden, max_len, visit);
            path.pop();
            flow?;
        }
        ControlFlow::Continue(())
    }

    /// All induced cycles with length in `min_len..=max_len`, in visiting order.
    pub fn induced_cycles(&self, min_len: usize, max_len: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        self.for_each_induced_cycle::<()>(max_len, |c| {
            if c.len() >= min_len {
                out.push(c.to_vec());
            }
            ControlFlow::Continue(())
        });
        out
    }

    /// First induced cycle with length in `min_len..=max_len`.
    pub fn find_chordless_cycle(&self, min_len: usize, max_len: usize) -> Option<CycleWitness> {
        self.find_induced_cycle(max_len, |c| c.len() >= min_len)
    }

    pub(crate) fn find_induced_cycle(
        &self,
        max_len: usize,
        mut accept: impl FnMut(&[usize]) -> bool,
    ) -> Option<CycleWitness> {
        self.for_each_induced_cycle(max_len, |c| {
            if accept(c) {
                ControlFlow::Break(CycleWitness { vertices: c.to_vec(), chordless: true })
            } else {
                ControlFlow::Continue(())
            }
        })
    }

    /// Gap-freeness by edge pairs. A gap is a pair of disjoint edges with no edge between them.
    /// The result is cross-checked against the induced-`C_4` search in the complement.
    pub fn is_gap_free(&self) -> Result<Option<((usize, usize), (usize, usize))>> {
        let gap = self.find_gap();
        let c4 = self.complement().find_chordless_cycle(4, 4);
        if gap.is_some() != c4.is_some() {
            return Err(Error::OracleDisagreement(format!(
                "gap search found {gap:?} but complement induced C4 search found {c4:?}"
            )));
        }
        Ok(gap)
    }

    fn find_gap(&self) -> Option<((usize, usize), (usize, usize))> {
        let edges = self.edges();
        for (i, &(x, y)) in edges.iter().enumerate() {
            let reach = self.neighbors(x).union(self.neighbors(y)).with(x).with(y);
            for &(z, u) in &edges[i + 1..] {
                if !reach.contains(z) && !reach.contains(u) {
                    return Some(((x, y), (z, u)));
                }
            }
        }
        None
    }

    /// Ferrers recognition for the bipartition `(xs, ys)`: sort both sides by degree
    /// (descending, ties by index) and check that every `x` sees a prefix of the sorted `ys`.
    pub fn is_ferrers(&self, xs: &[usize], ys: &[usize]) -> Result<Option<FerrersLabeling>> {
        let n = self.n();
        let xset = Face::from_indices(xs.iter().copied());
        let yset = Face::from_indices(ys.iter().copied());
        for &v in xs.iter().chain(ys) {
            if v >= n {
                return Err(Error::IndexOutOfRange { index: v, n });
            }
        }
        let partitions = xset.len() == xs.len()
            && yset.len() == ys.len()
            && xset.intersection(yset).is_empty()
            && xset.union(yset) == self.vertex_set();
        if !partitions {
            return Err(Error::InvalidPartition);
        }
        for (u, v) in self.edges() {
            if xset.contains(u) == xset.contains(v) {
                return Err(Error::NotBipartitePartition(u, v));
            }
        }
        let by_degree = |part: &[usize]| {
            let mut p = part.to_vec();
            p.sort_by_key(|&v| (std::cmp::Reverse(self.degree(v)), v));
            p
        };
        let x_order = by_degree(xs);
        let y_order = by_degree(ys);
        let mut partition = Vec::with_capacity(x_order.len());
        for &x in &x_order {
            let deg = self.degree(x);
            let prefix = Face::from_indices(y_order[..deg].iter().copied());
            if self.neighbors(x) != prefix {
                return Ok(None);
            }
            partition.push(deg);
        }
        Ok(Some(FerrersLabeling { x_order, y_order, partition }))
    }

    /// Berge test by brute-force odd-hole search in `G` and its complement.
    /// Returns the first odd hole found (in `G`, then in the complement).
    pub fn is_berge(&self, n_limit: usize) -> Result<Option<OddHole>> {
        if self.n() > n_limit {
            return Err(Error::TooLarge { what: "Berge check", n: self.n(), limit: n_limit });
        }
        let odd = |c: &[usize]| c.len() >= 5 && c.len() % 2 == 1;
        if let Some(c) = self.find_induced_cycle(self.n(), odd) {
            return Ok(Some(OddHole { in_complement: false, cycle: c }));
        }
        if let Some(c) = self.complement().find_induced_cycle(self.n(), odd) {
            return Ok(Some(OddHole { in_complement: true, cycle: c }));
        }
        Ok(None)
    }

    /// Maximum independent set size by branch and bound.
    pub fn independence_number(&self) -> Result<usize> {
        if self.n() > 32 {
            return Err(Error::TooLarge { what: "independence number", n: self.n(), limit: 32 });
        }
        Ok(self.max_independent(self.vertex_set()))
    }

    fn max_independent(&self, candidates: Face) -> usize {
        let Some(v) = candidates.iter().max_by_key(|&u| (self.neighbors(u).intersection(candidates).len(), std::cmp::Reverse(u))) else {
            return 0;
        };
        let nv = self.neighbors(v).intersection(candidates);
        if nv.is_empty() {
            // an isolated candidate always belongs to some maximum set
            return 1 + self.max_independent(candidates.without(v));
        }
        let take = 1 + self.max_independent(candidates.difference(nv).without(v));
        if take > candidates.len() - 1 {
            return take;
        }
        take.max(self.max_independent(candidates.without(v)))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OddHole {
    pub in_complement: bool,
    pub cycle: CycleWitness,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n(), self.edges())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(n: usize) -> Graph {
        Graph::cycle_graph(n).unwrap()
    }

    fn isomorphic(a: &Graph, b: &Graph) -> bool {
        fn perms(n: usize) -> Vec<Vec<usize>> {
            if n == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for p in perms(n - 1) {
                for i in 0..=p.len() {
                    let mut q = p.clone();
                    q.insert(i, n - 1);
                    out.push(q);
                }
            }
            out
        }
        a.n() == b.n()
            && perms(a.n())
                .iter()
                .any(|p| a.edges().iter().all(|&(u, v)| b.has_edge(p[u], p[v])) && a.edge_count() == b.edge_count())
    }

    #[test]
    fn complement_examples() {
        assert_eq!(c(4).complement().edges(), vec![(0, 2), (1, 3)]);
        assert_eq!(c(5).complement().complement(), c(5));
        assert!(isomorphic(&c(5).complement(), &c(5)));
        assert!(!isomorphic(&c(6).complement(), &c(6)));
    }

    #[test]
    fn independence_complex_examples() {
        let ind4 = c(4).independence_complex().unwrap();
        assert_eq!(ind4.facet_lists(), vec![vec![0, 2], vec![1, 3]]);
        let ind3 = c(3).independence_complex().unwrap();
        assert_eq!(ind3.facet_lists(), vec![vec![0], vec![1], vec![2]]);
        let empty = Graph::new(3).unwrap().independence_complex().unwrap();
        assert_eq!(empty, SimplicialComplex::simplex(3));
    }

    #[test]
    fn clique_complex_examples() {
        assert_eq!(Graph::complete(3).unwrap().clique_complex().unwrap(), SimplicialComplex::simplex(3));
        let c4 = c(4).clique_complex().unwrap();
        assert_eq!(c4.facet_lists(), vec![vec![0, 1], vec![0, 3], vec![1, 2], vec![2, 3]]);
        assert_eq!(c(5).clique_complex().unwrap(), c(5).complement().independence_complex().unwrap());
    }

    #[test]
    fn one_skeleton_examples() {
        let g = c(6);
        assert_eq!(Graph::one_skeleton(&g.independence_complex().unwrap()), g.complement());
        assert_eq!(Graph::one_skeleton(&SimplicialComplex::simplex(4)), Graph::complete(4).unwrap());
        let delta = SimplicialComplex::from_facets([[0, 1, 2], [1, 3, 5], [2, 3, 4]], 6).unwrap();
        assert_eq!(Graph::one_skeleton(&delta).edge_count(), 9);
    }

    #[test]
    fn chordality_examples() {
        match c(4).chordality() {
            Chordality::Hole(w) => {
                assert_eq!(w.len(), 4);
                assert!(w.verify(&c(4)));
            }
            other => panic!("C4 reported {other:?}"),
        }
        let tree = Graph::from_edges(6, [(0, 1), (0, 2), (2, 3), (2, 4), (4, 5)]).unwrap();
        match tree.chordality() {
            Chordality::Chordal { peo } => assert!(tree.is_perfect_elimination_ordering(&peo)),
            other => panic!("tree reported {other:?}"),
        }
        assert!(!c(5).complement().is_chordal());
        assert!(Graph::complete(5).unwrap().is_chordal());
    }

    #[test]
    fn chordless_cycles() {
        let w = c(7).find_chordless_cycle(5, 7).unwrap();
        assert_eq!(w.vertices, vec![0, 1, 2, 3, 4, 5, 6]);
        assert!(Graph::complete(5).unwrap().find_chordless_cycle(4, 5).is_none());
        let w = c(6).complement().find_chordless_cycle(4, 4).unwrap();
        assert!(w.verify(&c(6).complement()));
        assert_eq!(w.len(), 4);
    }

    #[test]
    fn induced_cycles_are_unique_and_chordless() {
        let g = c(6).complement();
        let cycles = g.induced_cycles(3, 6);
        let mut sets: Vec<u64> = cycles.iter().map(|c| Face::from_indices(c.iter().copied()).bits()).collect();
        sets.sort();
        sets.dedup();
        assert_eq!(sets.len(), cycles.len());
        for cyc in &cycles {
            assert!(CycleWitness { vertices: cyc.clone(), chordless: true }.verify(&g));
        }
        // complement of C6 is the triangular prism: 2 triangles and 3 induced squares
        assert_eq!(cycles.iter().filter(|c| c.len() == 3).count(), 2);
        assert_eq!(cycles.iter().filter(|c| c.len() == 4).count(), 3);
    }

    #[test]
    fn gap_free_examples() {
        let two = Graph::from_edges(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(two.is_gap_free().unwrap(), Some(((0, 1), (2, 3))));
        assert_eq!(Graph::complete(5).unwrap().is_gap_free().unwrap(), None);
        assert_eq!(c(4).complement().complement().is_gap_free().unwrap(), None);
    }

    #[test]
    fn ferrers_examples() {
        let k22 = Graph::from_edges(4, [(0, 2), (0, 3), (1, 2), (1, 3)]).unwrap();
        assert!(k22.is_ferrers(&[0, 1], &[2, 3]).unwrap().is_some());
        let matching = Graph::from_edges(4, [(0, 2), (1, 3)]).unwrap();
        assert!(matching.is_ferrers(&[0, 1], &[2, 3]).unwrap().is_none());
        // x1y1, x1y2, x2y1 with x = {0,1}, y = {2,3}
        let tri = Graph::from_edges(4, [(0, 2), (0, 3), (1, 2)]).unwrap();
        let lab = tri.is_ferrers(&[0, 1], &[2, 3]).unwrap().unwrap();
        assert_eq!(lab.partition, vec![2, 1]);
        assert_eq!(tri.is_ferrers(&[0, 2], &[1, 3]), Err(Error::NotBipartitePartition(0, 2)));
    }

    #[test]
    fn berge_examples() {
        let hole = c(5).is_berge(DEFAULT_BERGE_LIMIT).unwrap().unwrap();
        assert_eq!(hole.cycle.vertices, vec![0, 1, 2, 3, 4]);
        assert!(!hole.in_complement);
        assert!(c(7).complement().is_berge(DEFAULT_BERGE_LIMIT).unwrap().is_some());
        let k33 = Graph::from_edges(6, (0..3).flat_map(|u| (3..6).map(move |v| (u, v)))).unwrap();
        assert!(k33.is_berge(DEFAULT_BERGE_LIMIT).unwrap().is_none());
        assert!(c(11).is_berge(DEFAULT_BERGE_LIMIT).is_err());
    }

    #[test]
    fn independence_numbers() {
        assert_eq!(c(9).independence_number().unwrap(), 4);
        assert_eq!(Graph::complete(6).unwrap().independence_number().unwrap(), 1);
        assert_eq!(Graph::path_graph(6).unwrap().independence_number().unwrap(), 3);
        assert_eq!(Graph::new(0).unwrap().independence_number().unwrap(), 0);
    }

    #[test]
    fn constructors() {
        assert_eq!(c(3), Graph::complete(3).unwrap());
        assert_eq!(Graph::path_graph(2).unwrap().edges(), vec![(0, 1)]);
        assert_eq!(c(4).complement().edge_count(), 2);
        assert!(Graph::cycle_graph(2).is_err());
        assert!(Graph::path_graph(0).is_err());
        assert_eq!(Graph::from_edges(2, [(1, 1)]), Err(Error::SelfLoop(1)));
    }
}
