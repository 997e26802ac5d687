//! Test corpora: exhaustive small complexes and graphs, and seeded random families.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::complex::SimplicialComplex;
use crate::face::Face;
use crate::graph::Graph;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Every simplicial complex on exactly `n` vertices (all used), as antichains of nonempty
/// subsets covering `{0, .., n-1}`. Feasible for `n <= 5`.
pub fn all_complexes(n: usize) -> Vec<SimplicialComplex> {
    assert!((1..=6).contains(&n), "exhaustive enumeration only for 1..=6 vertices");
    let subsets: Vec<Face> = Face::full(n).subsets().filter(|s| !s.is_empty()).collect();
    let mut out = Vec::new();
    let mut chosen = Vec::new();
    antichains(&subsets, 0, &mut chosen, &mut |family| {
        let cover = family.iter().fold(Face::EMPTY, |a, f| a.union(*f));
        if cover == Face::full(n) {
            out.push(SimplicialComplex::generated_by(n, family.iter().copied()));
        }
    });
    out.sort_by(|a, b| a.facets().cmp(b.facets()));
    out
}

fn antichains(subsets: &[Face], from: usize, chosen: &mut Vec<Face>, visit: &mut impl FnMut(&[Face])) {
    if !chosen.is_empty() {
        visit(chosen);
    }
    for i in from..subsets.len() {
        let s = subsets[i];
        if chosen.iter().all(|c| !c.is_subset(s) && !s.is_subset(*c)) {
            chosen.push(s);
            antichains(subsets, i + 1, chosen, visit);
            chosen.pop();
        }
    }
}

/// All complexes on `1..=max_n` vertices.
pub fn all_complexes_up_to(max_n: usize) -> Vec<SimplicialComplex> {
    (1..=max_n).flat_map(all_complexes).collect()
}

/// Every labelled graph on `n` vertices.
pub fn all_graphs(n: usize) -> Vec<Graph> {
    assert!(n <= 6, "exhaustive enumeration only up to 6 vertices");
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    (0u64..1 << pairs.len())
        .map(|mask| {
            let edges = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, e)| *e);
            Graph::from_edges(n, edges).expect("valid edges")
        })
        .collect()
}

pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut g = Graph::new(n).expect("vertex count within bounds");
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v).expect("distinct vertices");
            }
        }
    }
    g
}

/// Random antichain on `n` vertices; vertices left uncovered become singleton facets.
pub fn random_antichain_complex(rng: &mut impl Rng, n: usize) -> SimplicialComplex {
    let count = rng.gen_range(1..=n + 2);
    let mut faces: Vec<Face> = (0..count)
        .map(|_| {
            let size = rng.gen_range(1..=n.min(4));
            let mut vs: Vec<usize> = (0..n).collect();
            vs.shuffle(rng);
            Face::from_indices(vs[..size].iter().copied())
        })
        .collect();
    let cover = faces.iter().fold(Face::EMPTY, |a, f| a.union(*f));
    faces.extend(Face::full(n).difference(cover).iter().map(Face::singleton));
    SimplicialComplex::generated_by(n, faces)
}

/// Half random antichains, half clique complexes of random graphs (which are flag, so the
/// quasi-forest question is nontrivial).
pub fn random_complexes(seed: u64, count: usize, min_n: usize, max_n: usize) -> Vec<SimplicialComplex> {
    let mut rng = rng(seed);
    (0..count)
        .map(|i| {
            let n = rng.gen_range(min_n..=max_n);
            if i % 2 == 0 {
                random_antichain_complex(&mut rng, n)
            } else {
                let p = rng.gen_range(0.3..0.8);
                random_graph(&mut rng, n, p).clique_complex().expect("small graph")
            }
        })
        .collect()
}

/// Random quasi-forest by leaf attachment: each new facet is a proper subset of an existing
/// facet plus at least one new vertex. Vertices are renumbered at random at the end.
pub fn random_quasi_forest(rng: &mut impl Rng, n: usize) -> SimplicialComplex {
    assert!(n >= 2);
    let first = rng.gen_range(1..=3.min(n - 1));
    let mut facets = vec![Face::full(first)];
    let mut used = first;
    while used < n {
        let m = facets[rng.gen_range(0..facets.len())];
        let members = m.to_vec();
        let keep = rng.gen_range(0..members.len());
        let mut shuffled = members.clone();
        shuffled.shuffle(rng);
        let base = Face::from_indices(shuffled[..keep].iter().copied());
        let fresh = rng.gen_range(1..=2.min(n - used));
        let f = (used..used + fresh).fold(base, |f, v| f.with(v));
        used += fresh;
        facets.push(f);
    }
    let mut perm: Vec<Option<usize>> = (0..n).map(Some).collect();
    perm.shuffle(rng);
    SimplicialComplex::generated_by(n, facets.iter().map(|f| f.map(&perm)))
}

pub fn random_quasi_forests(seed: u64, count: usize, min_n: usize, max_n: usize) -> Vec<SimplicialComplex> {
    let mut rng = rng(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(min_n..=max_n);
            random_quasi_forest(&mut rng, n)
        })
        .collect()
}

/// A Ferrers graph with parts of sizes `a` and `b` and no isolated vertices, under a random
/// labelling. Returns the graph and its parts.
pub fn random_ferrers(rng: &mut impl Rng, a: usize, b: usize) -> (Graph, Vec<usize>, Vec<usize>) {
    assert!(a >= 1 && b >= 1);
    // nonincreasing row lengths with the first row full
    let mut rows: Vec<usize> = (0..a).map(|i| if i == 0 { b } else { rng.gen_range(1..=b) }).collect();
    rows.sort_unstable_by(|x, y| y.cmp(x));
    let mut perm: Vec<usize> = (0..a + b).collect();
    perm.shuffle(rng);
    let xs: Vec<usize> = perm[..a].to_vec();
    let ys: Vec<usize> = perm[a..].to_vec();
    let edges = rows.iter().enumerate().flat_map(|(i, &len)| (0..len).map(move |j| (i, j)));
    let edges: Vec<(usize, usize)> = edges.map(|(i, j)| (xs[i], ys[j])).collect();
    let g = Graph::from_edges(a + b, edges).expect("valid edges");
    let (mut xs, mut ys) = (xs, ys);
    xs.sort_unstable();
    ys.sort_unstable();
    (g, xs, ys)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quasiforest::greedy_leaf_order;

    #[test]
    fn exhaustive_counts() {
        // complexes on a labelled vertex set with every vertex used
        assert_eq!(all_complexes(1).len(), 1);
        assert_eq!(all_complexes(2).len(), 2);
        assert_eq!(all_complexes(3).len(), 9);
        assert_eq!(all_graphs(4).len(), 64);
    }

    #[test]
    fn exhaustive_complexes_use_every_vertex() {
        for c in all_complexes(4) {
            assert_eq!(c.ghost_vertices().count(), 0);
            assert_eq!(SimplicialComplex::from_facets(c.facet_lists(), 4).unwrap(), c);
        }
    }

    #[test]
    fn attached_complexes_are_quasi_forests() {
        let mut r = rng(7);
        for _ in 0..200 {
            let n = r.gen_range(4..=9);
            let c = random_quasi_forest(&mut r, n);
            assert_eq!(c.ghost_vertices().count(), 0);
            assert!(greedy_leaf_order(&c).is_some(), "{c:?}");
        }
    }

    #[test]
    fn ferrers_generator_output_is_ferrers() {
        let mut r = rng(11);
        for _ in 0..100 {
            let (a, b) = (r.gen_range(1..=4), r.gen_range(1..=4));
            let (g, xs, ys) = random_ferrers(&mut r, a, b);
            assert!((0..g.n()).all(|v| g.degree(v) > 0));
            assert!(g.is_ferrers(&xs, &ys).unwrap().is_some());
        }
    }

    #[test]
    fn seeded_corpora_are_reproducible() {
        assert_eq!(random_complexes(3, 20, 6, 8), random_complexes(3, 20, 6, 8));
    }
}
