//! Simplicial complexes stored by their facets.

use std::collections::HashSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::face::{maximal_faces, Face, MAX_VERTICES};

/// Default bound on the number of faces any enumeration may produce.
pub const DEFAULT_FACE_LIMIT: usize = 1 << 24;

/// A simplicial complex on the ambient vertex set `{0, .., n-1}`.
///
/// Complexes built with [`SimplicialComplex::from_facets`] use every vertex. Complexes derived
/// from other complexes (Alexander duals, skeleta, restrictions) keep the ambient vertex set of
/// their parent, so some vertices may fail to be faces; such *ghost* vertices contribute a
/// linear generator to the Stanley-Reisner ideal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SimplicialComplex {
    n: usize,
    facets: Vec<Face>,
    labels: Vec<String>,
}

pub fn default_label(index: usize) -> String {
    format!("x{}", index + 1)
}

fn default_labels(n: usize) -> Vec<String> {
    (0..n).map(default_label).collect()
}

impl SimplicialComplex {
    /// Build a complex from facet lists over `n` vertices, dropping dominated sets.
    pub fn from_facets<I, S>(facet_lists: I, n: usize) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<[usize]>,
    {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices { n, max: MAX_VERTICES });
        }
        let mut faces = Vec::new();
        for list in facet_lists {
            let list = list.as_ref();
            if let Some(&index) = list.iter().find(|&&v| v >= n) {
                return Err(Error::IndexOutOfRange { index, n });
            }
            faces.push(Face::from_indices(list.iter().copied()));
        }
        if faces.is_empty() {
            return Err(Error::EmptyInput);
        }
        let complex = Self::generated_by(n, faces);
        if let Some(v) = complex.ghost_vertices().min() {
            return Err(Error::UnusedVertex(v));
        }
        Ok(complex)
    }

    /// The complex generated by `faces` over `n` ambient vertices. Vertices covered by no face
    /// are ghosts. An empty generator list yields the irrelevant complex `{∅}`.
    pub fn generated_by<I: IntoIterator<Item = Face>>(n: usize, faces: I) -> Self {
        assert!(n <= MAX_VERTICES, "at most {MAX_VERTICES} vertices supported");
        let full = Face::full(n);
        let mut faces: Vec<Face> = faces.into_iter().collect();
        assert!(faces.iter().all(|f| f.is_subset(full)), "face outside vertex set");
        if faces.is_empty() {
            faces.push(Face::EMPTY);
        }
        SimplicialComplex { n, facets: maximal_faces(faces), labels: default_labels(n) }
    }

    /// The full simplex on `n` vertices.
    pub fn simplex(n: usize) -> Self {
        Self::generated_by(n, [Face::full(n)])
    }

    /// The irrelevant complex `{∅}` with `n` ghost vertices.
    pub fn irrelevant(n: usize) -> Self {
        Self::generated_by(n, [])
    }

    /// Complex whose Stanley-Reisner ideal is generated by the given square-free monomials
    /// (each given by its support). Enumerates all `2^n` vertex subsets.
    pub fn from_nonfaces<I, S>(generators: I, n: usize) -> Result<Self>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<[usize]>,
    {
        if n > 24 {
            return Err(Error::TooLarge { what: "nonface enumeration", n, limit: 24 });
        }
        let mut gens = Vec::new();
        for g in generators {
            let g = g.as_ref();
            if let Some(&index) = g.iter().find(|&&v| v >= n) {
                return Err(Error::IndexOutOfRange { index, n });
            }
            gens.push(Face::from_indices(g.iter().copied()));
        }
        let faces: Vec<Face> = Face::full(n)
            .subsets()
            .filter(|s| !gens.iter().any(|g| g.is_subset(*s)))
            .collect();
        if faces.is_empty() {
            // the unit ideal has no complex
            return Err(Error::EmptyInput);
        }
        Ok(Self::generated_by(n, faces))
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.n, "one label per vertex");
        self.labels = labels;
        self
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    pub fn facet_lists(&self) -> Vec<Vec<usize>> {
        self.facets.iter().map(|f| f.to_vec()).collect()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn vertex_set(&self) -> Face {
        Face::full(self.n)
    }

    /// Union of all facets: the vertices that are actually faces.
    pub fn support(&self) -> Face {
        self.facets.iter().fold(Face::EMPTY, |acc, f| acc.union(*f))
    }

    pub fn ghost_vertices(&self) -> crate::face::Members {
        self.vertex_set().difference(self.support()).iter()
    }

    /// `d = max |F|`, so `dim Δ = d - 1`.
    pub fn d(&self) -> usize {
        self.facets.iter().map(|f| f.len()).max().unwrap_or(0)
    }

    pub fn dim(&self) -> isize {
        self.d() as isize - 1
    }

    pub fn is_pure(&self) -> bool {
        self.facets.windows(2).all(|w| w[0].len() == w[1].len())
    }

    pub fn is_simplex(&self) -> bool {
        self.facets.len() == 1
    }

    pub fn is_full_simplex(&self) -> bool {
        self.facets == [self.vertex_set()]
    }

    pub fn contains(&self, face: Face) -> bool {
        self.facets.iter().any(|f| face.is_subset(*f))
    }

    pub fn is_facet(&self, face: Face) -> bool {
        self.facets.binary_search(&face).is_ok()
    }

    /// Every face, grouped by dimension: entry `k` holds the faces of dimension `k - 1`.
    pub fn all_faces(&self) -> Result<Vec<Vec<Face>>> {
        self.all_faces_within(DEFAULT_FACE_LIMIT)
    }

    pub fn all_faces_within(&self, limit: usize) -> Result<Vec<Vec<Face>>> {
        let faces = face_set(&self.facets, limit)?;
        let mut grouped = vec![Vec::new(); self.d() + 1];
        for f in faces {
            grouped[f.len()].push(f);
        }
        for g in &mut grouped {
            g.sort();
        }
        Ok(grouped)
    }

    pub fn f_vector(&self) -> Result<FVector> {
        let grouped = self.all_faces()?;
        Ok(FVector(grouped.iter().map(|g| g.len() as u64).collect()))
    }

    /// The complex generated by the faces of dimension exactly `i`.
    pub fn pure_skeleton(&self, i: isize) -> Result<Self> {
        if i < -1 || i > self.dim() {
            return Err(Error::DimensionOutOfRange { requested: i, max: self.dim() });
        }
        let k = (i + 1) as usize;
        let mut faces = HashSet::new();
        for f in &self.facets {
            if f.len() >= k {
                faces.extend(f.subsets().filter(|s| s.len() == k));
            }
        }
        Ok(Self::generated_by(self.n, faces).with_labels(self.labels.clone()))
    }

    /// Facets of the link of `face`, over the ambient vertex set.
    pub(crate) fn link_facets(&self, face: Face) -> Vec<Face> {
        let fs: Vec<Face> = self
            .facets
            .iter()
            .filter(|m| face.is_subset(**m))
            .map(|m| m.difference(face))
            .collect();
        maximal_faces(fs)
    }

    /// Facets of the deletion `{F ∈ Δ : v ∉ F}`, over the ambient vertex set.
    pub(crate) fn deletion_facets(&self, v: usize) -> Vec<Face> {
        maximal_faces(self.facets.iter().map(|m| m.without(v)).collect())
    }

    /// `lk_Δ(F) = {G ∈ Δ : G ∪ F ∈ Δ, G ∩ F = ∅}`, renumbered onto its used vertices.
    /// The returned map sends new indices to old ones.
    pub fn link(&self, face: Face) -> Result<(Self, Vec<usize>)> {
        if !face.is_subset(self.vertex_set()) || !self.contains(face) {
            return Err(Error::NotAFace(face.to_vec()));
        }
        let sub = Self { n: self.n, facets: self.link_facets(face), labels: self.labels.clone() };
        Ok(sub.compress())
    }

    /// `Δ \ v = {F ∈ Δ : v ∉ F}`, renumbered onto its used vertices.
    pub fn deletion(&self, v: usize) -> Result<(Self, Vec<usize>)> {
        if v >= self.n {
            return Err(Error::IndexOutOfRange { index: v, n: self.n });
        }
        let sub = Self { n: self.n, facets: self.deletion_facets(v), labels: self.labels.clone() };
        Ok(sub.compress())
    }

    /// Induced subcomplex `Δ|σ = {F ∈ Δ : F ⊆ σ}` over the ambient vertex set.
    pub fn restriction(&self, sigma: Face) -> Self {
        let fs = self.facets.iter().map(|f| f.intersection(sigma)).collect();
        Self { n: self.n, facets: maximal_faces(fs), labels: self.labels.clone() }
    }

    /// Drop ghost vertices, renumbering the rest in increasing order.
    pub fn compress(&self) -> (Self, Vec<usize>) {
        let used: Vec<usize> = self.support().to_vec();
        let mut map = vec![None; self.n];
        for (new, &old) in used.iter().enumerate() {
            map[old] = Some(new);
        }
        let facets = maximal_faces(self.facets.iter().map(|f| f.map(&map)).collect());
        let labels = used.iter().map(|&v| self.labels[v].clone()).collect();
        (Self { n: used.len(), facets, labels }, used)
    }

    /// Inclusion-minimal subsets of the vertex set that are not faces, in canonical order.
    /// These are the supports of the minimal generators of `I_Δ`.
    pub fn minimal_nonfaces(&self) -> Result<Vec<Face>> {
        self.minimal_nonfaces_within(DEFAULT_FACE_LIMIT)
    }

    pub fn minimal_nonfaces_within(&self, limit: usize) -> Result<Vec<Face>> {
        let faces = face_set(&self.facets, limit)?;
        let mut out = Vec::new();
        // each minimal nonface N is G ∪ {v} with v = max N and G = N \ v a face
        for &g in &faces {
            let start = g.max().map_or(0, |m| m + 1);
            for v in start..self.n {
                let cand = g.with(v);
                if faces.contains(&cand) {
                    continue;
                }
                if g.iter().all(|u| faces.contains(&cand.without(u))) {
                    out.push(cand);
                }
            }
        }
        out.sort();
        Ok(out)
    }

    /// Flag test. On failure returns the first minimal nonface with at least three vertices.
    pub fn is_flag(&self) -> Result<Option<Face>> {
        Ok(self.minimal_nonfaces()?.into_iter().find(|f| f.len() >= 3))
    }

    /// `Δ∨ = {V \ F : F ∉ Δ}`.
    pub fn alexander_dual(&self) -> Result<Self> {
        if self.is_full_simplex() {
            return Err(Error::FullSimplex);
        }
        let v = self.vertex_set();
        let facets = self.minimal_nonfaces()?.into_iter().map(|m| v.difference(m));
        Ok(Self::generated_by(self.n, facets).with_labels(self.labels.clone()))
    }

    /// The complex generated by complements of facets.
    pub fn complement_complex(&self) -> Result<Self> {
        let v = self.vertex_set();
        if self.facets.contains(&v) {
            return Err(Error::FullSimplex);
        }
        let facets = self.facets.iter().map(|f| v.difference(*f));
        Ok(Self::generated_by(self.n, facets).with_labels(self.labels.clone()))
    }

    /// Cone over `Δ` with a new apex vertex `n`.
    pub fn cone(&self) -> Self {
        let apex = self.n;
        let mut labels = self.labels.clone();
        labels.push(default_label(apex));
        let facets = self.facets.iter().map(|f| f.with(apex));
        Self::generated_by(self.n + 1, facets).with_labels(labels)
    }

    /// Relabel vertices by a permutation (`perm[old] = new`).
    pub fn permute(&self, perm: &[usize]) -> Self {
        assert_eq!(perm.len(), self.n);
        let map: Vec<Option<usize>> = perm.iter().map(|&p| Some(p)).collect();
        let mut labels = vec![String::new(); self.n];
        for (old, &new) in perm.iter().enumerate() {
            labels[new] = self.labels[old].clone();
        }
        let facets = self.facets.iter().map(|f| f.map(&map));
        Self::generated_by(self.n, facets).with_labels(labels)
    }

    pub fn display_face(&self, face: Face) -> String {
        let names: Vec<&str> = face.iter().map(|v| self.label(v)).collect();
        format!("{{{}}}", names.join(","))
    }
}

impl fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SimplicialComplex(n={}, facets={:?})", self.n, self.facets)
    }
}

/// All faces of the complex generated by `facets`, including the empty face.
pub(crate) fn face_set(facets: &[Face], limit: usize) -> Result<HashSet<Face>> {
    let mut faces = HashSet::new();
    for f in facets {
        if f.len() >= 63 || (1usize << f.len()) > limit {
            return Err(Error::SizeLimit { what: "enumerating faces", limit });
        }
        for s in f.subsets() {
            faces.insert(s);
        }
        if faces.len() > limit {
            return Err(Error::SizeLimit { what: "enumerating faces", limit });
        }
    }
    Ok(faces)
}

/// Face counts `(f_{-1}, f_0, .., f_{d-1})`.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct FVector(pub Vec<u64>);

impl FVector {
    /// `d`, one more than the dimension.
    pub fn d(&self) -> usize {
        self.0.len() - 1
    }

    /// Number of faces of dimension `i`, for `i >= -1`.
    pub fn get(&self, i: isize) -> u64 {
        self.0.get((i + 1) as usize).copied().unwrap_or(0)
    }

    /// `(f_0, .., f_{d-1})`, the conventional display form.
    pub fn proper(&self) -> &[u64] {
        &self.0[1..]
    }

    /// Coefficients of `Σ_i f_{i-1} t^i (1-t)^{d-i}`, length `d + 1`.
    pub fn h_vector(&self) -> HVector {
        let d = self.d();
        let mut h = vec![0i64; d + 1];
        for (k, hk) in h.iter_mut().enumerate() {
            let mut acc = 0i64;
            for i in 0..=k {
                let sign = if (k - i) % 2 == 0 { 1 } else { -1 };
                acc += sign * binomial((d - i) as u64, (k - i) as u64) as i64 * self.0[i] as i64;
            }
            *hk = acc;
        }
        HVector(h)
    }
}

/// `(h_0, .., h_d)`, trailing zeros kept.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct HVector(pub Vec<i64>);

impl HVector {
    pub fn get(&self, i: usize) -> i64 {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// Degree of the h-polynomial after stripping trailing zeros.
    pub fn degree(&self) -> usize {
        self.0.iter().rposition(|&x| x != 0).unwrap_or(0)
    }

    pub fn stripped(&self) -> Vec<i64> {
        self.0[..=self.degree()].to_vec()
    }

    pub fn sum(&self) -> i64 {
        self.0.iter().sum()
    }
}

pub(crate) fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
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

    #[test]
    fn from_facets_examples() {
        let d = delta();
        assert_eq!(d.facets().len(), 3);
        let s = SimplicialComplex::from_facets([vec![0, 1], vec![0, 1, 2]], 3).unwrap();
        assert_eq!(s.facet_lists(), vec![vec![0, 1, 2]]);
        let p = SimplicialComplex::from_facets([[0], [1]], 2).unwrap();
        assert_eq!(p.facets().len(), 2);
        assert_eq!(p.dim(), 0);
    }

    #[test]
    fn from_facets_errors() {
        let none: [[usize; 1]; 0] = [];
        assert_eq!(SimplicialComplex::from_facets(none, 2), Err(Error::EmptyInput));
        assert_eq!(SimplicialComplex::from_facets([[0, 1]], 3), Err(Error::UnusedVertex(2)));
        assert_eq!(
            SimplicialComplex::from_facets([[0, 3]], 3),
            Err(Error::IndexOutOfRange { index: 3, n: 3 })
        );
    }

    #[test]
    fn canonical_order_makes_equal() {
        let a = SimplicialComplex::from_facets([[2, 3, 4], [0, 1, 2], [1, 3, 5]], 6).unwrap();
        assert_eq!(a, delta());
        let again = SimplicialComplex::from_facets(delta().facet_lists(), 6).unwrap();
        assert_eq!(again, delta());
    }

    #[test]
    fn face_counts() {
        let s = SimplicialComplex::simplex(3);
        assert_eq!(s.all_faces().unwrap().iter().map(Vec::len).sum::<usize>(), 8);
        let two = SimplicialComplex::from_facets([[0, 2], [1, 3]], 4).unwrap();
        let g = two.all_faces().unwrap();
        assert_eq!(g.iter().map(Vec::len).collect::<Vec<_>>(), vec![1, 4, 2]);
        assert_eq!(s.f_vector().unwrap().proper(), &[3, 3, 1]);
    }

    #[test]
    fn face_limit_is_an_error() {
        let s = SimplicialComplex::simplex(10);
        assert!(matches!(s.all_faces_within(100), Err(Error::SizeLimit { .. })));
    }

    #[test]
    fn simplex_h_vector() {
        let h = SimplicialComplex::simplex(3).f_vector().unwrap().h_vector();
        assert_eq!(h.0, vec![1, 0, 0, 0]);
        assert_eq!(h.degree(), 0);
    }

    #[test]
    fn skeleton() {
        let s = SimplicialComplex::simplex(3).pure_skeleton(0).unwrap();
        assert_eq!(s.facet_lists(), vec![vec![0], vec![1], vec![2]]);
        let d = delta();
        let top = d.pure_skeleton(d.dim()).unwrap();
        assert_eq!(top, d);
        assert!(d.pure_skeleton(3).is_err());
        assert!(d.pure_skeleton(-2).is_err());
        assert_eq!(d.pure_skeleton(-1).unwrap().facets(), &[Face::EMPTY]);
    }

    #[test]
    fn link_and_deletion() {
        let theta = theta();
        let (lk, map) = theta.link(Face::singleton(3)).unwrap();
        assert_eq!(map, vec![0, 1, 2]);
        assert_eq!(lk.facet_lists(), vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
        let (same, _) = delta().link(Face::EMPTY).unwrap();
        assert_eq!(same, delta());
        let (del, map) = SimplicialComplex::simplex(3).deletion(2).unwrap();
        assert_eq!(del, SimplicialComplex::simplex(2));
        assert_eq!(map, vec![0, 1]);
        assert!(matches!(delta().link(Face::from_indices([0, 4])), Err(Error::NotAFace(_))));
        let (lk, _) = delta().link(Face::from_indices([0, 1, 2])).unwrap();
        assert_eq!(lk.n(), 0);
        assert_eq!(lk.facets(), &[Face::EMPTY]);
    }

    #[test]
    fn minimal_nonfaces_examples() {
        assert_eq!(theta().minimal_nonfaces().unwrap(), vec![Face::from_indices([0, 1, 2])]);
        let c4 = SimplicialComplex::from_facets([[0, 2], [1, 3]], 4).unwrap();
        assert_eq!(
            c4.minimal_nonfaces().unwrap(),
            vec![
                Face::from_indices([0, 1]),
                Face::from_indices([0, 3]),
                Face::from_indices([1, 2]),
                Face::from_indices([2, 3]),
            ]
        );
        assert!(SimplicialComplex::simplex(4).minimal_nonfaces().unwrap().is_empty());
    }

    #[test]
    fn flag_examples() {
        assert_eq!(gamma().is_flag().unwrap(), None);
        assert_eq!(theta().is_flag().unwrap(), Some(Face::from_indices([0, 1, 2])));
        assert_eq!(SimplicialComplex::simplex(5).is_flag().unwrap(), None);
    }

    #[test]
    fn alexander_dual_examples() {
        let c4 = SimplicialComplex::from_facets([[0, 2], [1, 3]], 4).unwrap();
        let dual = c4.alexander_dual().unwrap();
        assert_eq!(
            dual.minimal_nonfaces().unwrap(),
            vec![Face::from_indices([0, 2]), Face::from_indices([1, 3])]
        );
        assert_eq!(delta().alexander_dual().unwrap().alexander_dual().unwrap(), delta());
        // boundary of the triangle has the single nonface {0,1,2}
        let boundary = SimplicialComplex::from_facets([[0, 1], [0, 2], [1, 2]], 3).unwrap();
        assert_eq!(boundary.alexander_dual().unwrap(), SimplicialComplex::irrelevant(3));
        let points = SimplicialComplex::from_facets([[0], [1], [2]], 3).unwrap();
        assert_eq!(points.alexander_dual().unwrap(), points);
        assert_eq!(SimplicialComplex::simplex(3).alexander_dual(), Err(Error::FullSimplex));
    }

    #[test]
    fn complement_examples() {
        let c = delta().complement_complex().unwrap();
        assert_eq!(c.facet_lists(), vec![vec![0, 1, 5], vec![0, 2, 4], vec![3, 4, 5]]);
        assert_eq!(c.complement_complex().unwrap(), delta());
        let p = SimplicialComplex::from_facets([[0], [1]], 2).unwrap();
        assert_eq!(p.complement_complex().unwrap(), p);
        assert_eq!(SimplicialComplex::simplex(2).complement_complex(), Err(Error::FullSimplex));
    }

    #[test]
    fn nonface_constructor() {
        let c = SimplicialComplex::from_nonfaces([[0, 2], [1, 3]], 4).unwrap();
        assert_eq!(c.facet_lists(), vec![vec![0, 1], vec![0, 3], vec![1, 2], vec![2, 3]]);
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), 10);
        assert_eq!(binomial(3, 5), 0);
        assert_eq!(binomial(0, 0), 1);
    }
}
