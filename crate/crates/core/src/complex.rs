//! Canonical facet-list representation of finite abstract simplicial complexes
//! and the face-level operations used throughout the library: link, star,
//! antistar, join, missing faces, stellar edge subdivision and edge contraction.

use std::collections::{BTreeSet, HashSet};

use itertools::Itertools;

use crate::error::{Error, Result};

pub type Vertex = u32;
/// A face: sorted list of positive vertex labels.
pub type Face = Vec<Vertex>;

/// A finite abstract simplicial complex, stored by its inclusion-maximal
/// faces. The stored form is canonical: faces sorted internally, facet list
/// sorted lexicographically, every listed vertex on some facet.
///
/// The complex `{∅}` (empty face only) is representable and returned by
/// operations such as the link of a facet; see [`SimplicialComplex::empty`].
/// The void complex is not representable.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SimplicialComplex {
    facets: Vec<Face>,
    vertices: Vec<Vertex>,
}

impl std::fmt::Debug for SimplicialComplex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Complex{:?}", self.facets)
    }
}

impl SimplicialComplex {
    /// The complex `{∅}`: dimension −1, f-vector (1).
    pub fn empty() -> Self {
        SimplicialComplex {
            facets: vec![vec![]],
            vertices: vec![],
        }
    }

    /// Build the canonical form from an arbitrary list of faces. Duplicates
    /// are removed, non-maximal sets absorbed, labels and facets sorted.
    pub fn from_facets<I, F>(raw: I) -> Result<Self>
    where
        I: IntoIterator<Item = F>,
        F: IntoIterator<Item = Vertex>,
    {
        let mut sets: Vec<Face> = Vec::new();
        for face in raw {
            let mut f: Face = face.into_iter().collect();
            if f.contains(&0) {
                return Err(Error::BadLabel(0));
            }
            f.sort_unstable();
            f.dedup();
            sets.push(f);
        }
        if sets.is_empty() {
            return Err(Error::EmptyInput);
        }
        sets.sort_unstable();
        sets.dedup();
        // drop sets contained in another
        let mut facets: Vec<Face> = Vec::new();
        for (i, f) in sets.iter().enumerate() {
            let maximal = sets
                .iter()
                .enumerate()
                .all(|(j, g)| j == i || !is_subset(f, g) || f == g);
            if maximal {
                facets.push(f.clone());
            }
        }
        let vertices: Vec<Vertex> = facets.iter().flatten().copied().sorted().dedup().collect();
        if facets.is_empty() {
            facets.push(vec![]);
        }
        Ok(SimplicialComplex { facets, vertices })
    }

    pub fn facets(&self) -> &[Face] {
        &self.facets
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn n_vertices(&self) -> usize {
        self.vertices.len()
    }

    /// Dimension; −1 for `{∅}`.
    pub fn dim(&self) -> i64 {
        self.facets.iter().map(|f| f.len() as i64 - 1).max().unwrap()
    }

    pub fn is_empty_complex(&self) -> bool {
        self.facets.len() == 1 && self.facets[0].is_empty()
    }

    fn vertex_index(&self, v: Vertex) -> Option<usize> {
        self.vertices.binary_search(&v).ok()
    }

    fn face_mask(&self, face: &[Vertex]) -> Option<u64> {
        let mut m = 0u64;
        for &v in face {
            m |= 1u64 << self.vertex_index(v)?;
        }
        Some(m)
    }

    fn mask_to_face(&self, mut m: u64) -> Face {
        let mut f = Face::new();
        while m != 0 {
            let i = m.trailing_zeros() as usize;
            f.push(self.vertices[i]);
            m &= m - 1;
        }
        f
    }

    /// All faces of the downward closure as bitmasks over the vertex list,
    /// including the empty face (mask 0).
    pub fn closure_masks(&self) -> HashSet<u64> {
        assert!(self.n_vertices() <= 64, "complex too large for mask enumeration");
        let mut seen: HashSet<u64> = HashSet::new();
        for facet in &self.facets {
            let m = self.face_mask(facet).unwrap();
            // iterate over all submasks of m
            let mut s = m;
            loop {
                seen.insert(s);
                if s == 0 {
                    break;
                }
                s = (s - 1) & m;
            }
        }
        seen
    }

    /// Faces of dimension `j` (so `j = -1` gives the empty face), sorted
    /// lexicographically.
    pub fn faces_of_dim(&self, j: i64) -> Vec<Face> {
        let k = (j + 1) as u32;
        self.closure_masks()
            .into_iter()
            .filter(|m| m.count_ones() == k)
            .map(|m| self.mask_to_face(m))
            .sorted()
            .collect()
    }

    /// All faces including the empty face, by increasing size then lex.
    pub fn all_faces(&self) -> Vec<Face> {
        self.closure_masks()
            .into_iter()
            .map(|m| self.mask_to_face(m))
            .sorted_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)))
            .collect()
    }

    pub fn contains_face(&self, face: &[Vertex]) -> bool {
        debug_assert!(face.windows(2).all(|w| w[0] < w[1]));
        self.facets.iter().any(|g| is_subset(face, g))
    }

    /// Exact face counts `(f_{-1}, f_0, ..., f_d)`.
    pub fn f_vector(&self) -> FVector {
        let d = self.dim();
        let mut counts = vec![0i64; (d + 2) as usize];
        for m in self.closure_masks() {
            counts[m.count_ones() as usize] += 1;
        }
        FVector(counts)
    }

    /// `lk(F, Δ) = {T ∈ Δ : T ∩ F = ∅, T ∪ F ∈ Δ}`.
    pub fn link(&self, face: &[Vertex]) -> Result<Self> {
        let face = sorted_face(face);
        if !self.contains_face(&face) {
            return Err(Error::NotAFace(face));
        }
        if face.is_empty() {
            return Ok(self.clone());
        }
        let facets: Vec<Face> = self
            .facets
            .iter()
            .filter(|g| is_subset(&face, g))
            .map(|g| set_minus(g, &face))
            .collect();
        SimplicialComplex::from_facets(facets)
    }

    /// The open star: all faces containing `F`, by increasing size then lex.
    pub fn star_faces(&self, face: &[Vertex]) -> Result<Vec<Face>> {
        let face = sorted_face(face);
        if !self.contains_face(&face) {
            return Err(Error::NotAFace(face));
        }
        Ok(self
            .all_faces()
            .into_iter()
            .filter(|t| is_subset(&face, t))
            .collect())
    }

    /// `antist(F, Δ) = {T ∈ Δ : F ⊄ T}` for nonempty `F`.
    pub fn antistar(&self, face: &[Vertex]) -> Result<Self> {
        let face = sorted_face(face);
        if face.is_empty() {
            return Err(Error::BadParams("antistar of the empty face is void".into()));
        }
        let mut facets: Vec<Face> = Vec::new();
        for g in &self.facets {
            if !is_subset(&face, g) {
                facets.push(g.clone());
            } else {
                for &x in &face {
                    facets.push(g.iter().copied().filter(|&y| y != x).collect());
                }
            }
        }
        SimplicialComplex::from_facets(facets)
    }

    /// Join; labels of `other` are offset by the maximum label of `self`.
    pub fn join(&self, other: &SimplicialComplex) -> Self {
        let offset = self.vertices.last().copied().unwrap_or(0);
        let mut facets = Vec::with_capacity(self.facets.len() * other.facets.len());
        for g in &self.facets {
            for h in &other.facets {
                let mut f = g.clone();
                f.extend(h.iter().map(|&v| v + offset));
                facets.push(f);
            }
        }
        SimplicialComplex::from_facets(facets).unwrap()
    }

    /// Join with two isolated points (the fresh points get the top labels).
    pub fn suspension(&self) -> Self {
        let two_points = SimplicialComplex::from_facets([vec![1], vec![2]]).unwrap();
        self.join(&two_points)
    }

    /// All inclusion-minimal non-faces, by increasing size then lex. A set
    /// `F` of size `k+1` is missing iff `F ∉ Δ` and all its `k`-subsets are
    /// faces; supersets of a missing face fail that test automatically.
    pub fn missing_faces(&self) -> Vec<Face> {
        assert!(self.n_vertices() <= 64);
        let faces = self.closure_masks();
        let n = self.n_vertices();
        let mut missing = Vec::new();
        let top = (self.dim() + 2) as usize;
        for k in 2..=top.min(n) {
            for combo in (0..n).combinations(k) {
                let m: u64 = combo.iter().map(|&i| 1u64 << i).sum();
                if faces.contains(&m) {
                    continue;
                }
                let boundary_in = combo
                    .iter()
                    .all(|&i| faces.contains(&(m & !(1u64 << i))));
                if boundary_in {
                    missing.push(combo.iter().map(|&i| self.vertices[i]).collect());
                }
            }
        }
        missing
    }

    /// Largest dimension of a missing face; 0 when there is none.
    pub fn max_missing_dim(&self) -> i64 {
        self.missing_faces()
            .iter()
            .map(|f| f.len() as i64 - 1)
            .max()
            .unwrap_or(0)
    }

    /// Flag ⇔ every missing face is an edge.
    pub fn is_flag(&self) -> bool {
        self.max_missing_dim() <= 1
    }

    /// Stellar subdivision of the edge `e`: the fresh vertex gets label
    /// `max + 1`; each facet `G ⊇ e` is replaced by `(G∖{u})∪{w}` and
    /// `(G∖{v})∪{w}`.
    pub fn subdivide_edge(&self, e: &[Vertex]) -> Result<Self> {
        let e = sorted_face(e);
        if e.len() != 2 || !self.contains_face(&e) {
            return Err(Error::NotAFace(e));
        }
        let w = *self.vertices.last().unwrap() + 1;
        let mut facets = Vec::new();
        for g in &self.facets {
            if !is_subset(&e, g) {
                facets.push(g.clone());
            } else {
                for &x in &e {
                    let mut f: Face = g.iter().copied().filter(|&y| y != x).collect();
                    f.push(w);
                    facets.push(f);
                }
            }
        }
        SimplicialComplex::from_facets(facets)
    }

    /// Whether `lk(u) ∩ lk(v) = lk({u,v})` as face sets.
    pub fn link_condition_holds(&self, u: Vertex, v: Vertex) -> Result<bool> {
        let e = sorted_face(&[u, v]);
        if !self.contains_face(&e) {
            return Err(Error::NotAFace(e));
        }
        let lku: BTreeSet<Face> = self.link(&[u])?.all_faces().into_iter().collect();
        let lkv: BTreeSet<Face> = self.link(&[v])?.all_faces().into_iter().collect();
        let lke: BTreeSet<Face> = self.link(&e)?.all_faces().into_iter().collect();
        Ok(lku.intersection(&lkv).all(|f| lke.contains(f))
            && lke.iter().all(|f| lku.contains(f) && lkv.contains(f)))
    }

    /// Whether the edge `{u,v}` lies on an induced 4-cycle.
    pub fn edge_in_induced_4cycle(&self, u: Vertex, v: Vertex) -> Result<bool> {
        let e = sorted_face(&[u, v]);
        if !self.contains_face(&e) {
            return Err(Error::NotAFace(e));
        }
        let others: Vec<Vertex> = self
            .vertices
            .iter()
            .copied()
            .filter(|&x| x != u && x != v)
            .collect();
        // cycle u - v - w - x - u, with diagonals uw and vx absent
        for &w in &others {
            for &x in &others {
                if w == x {
                    continue;
                }
                let has = |a: Vertex, b: Vertex| self.contains_face(&sorted_face(&[a, b]));
                if has(v, w) && has(w, x) && has(x, u) && !has(u, w) && !has(v, x) {
                    return Ok(true);
                }
            }
        }
        Ok(false)
    }

    /// Contract the edge `{u,v}`, identifying `v` into `u`. Requires the
    /// link condition `lk(u) ∩ lk(v) = lk(e)`.
    pub fn contract_edge(&self, u: Vertex, v: Vertex) -> Result<Self> {
        let e = sorted_face(&[u, v]);
        if !self.link_condition_holds(u, v)? {
            return Err(Error::LinkConditionViolated(e));
        }
        let facets: Vec<Face> = self
            .facets
            .iter()
            .map(|g| {
                if g.contains(&v) {
                    let mut f: Face = g.iter().copied().filter(|&y| y != v).collect();
                    if !f.contains(&u) {
                        f.push(u);
                    }
                    f
                } else {
                    g.clone()
                }
            })
            .collect();
        SimplicialComplex::from_facets(facets)
    }

    /// Relabel vertices to the dense range `1..=n`, preserving label order.
    pub fn relabel_dense(&self) -> Self {
        let facets: Vec<Face> = self
            .facets
            .iter()
            .map(|g| {
                g.iter()
                    .map(|v| (self.vertex_index(*v).unwrap() + 1) as Vertex)
                    .collect()
            })
            .collect();
        SimplicialComplex::from_facets(facets).unwrap()
    }
}

/// Exact face counts `(f_{-1}, f_0, ..., f_d)`; `entries()[j+1]` is `f_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FVector(pub Vec<i64>);

impl FVector {
    /// `f_j`, with `f_{-1} = 1` and zero outside the stored range.
    pub fn f(&self, j: i64) -> i64 {
        if j < -1 {
            return 0;
        }
        *self.0.get((j + 1) as usize).unwrap_or(&0)
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn dim(&self) -> i64 {
        self.0.len() as i64 - 2
    }

    /// Coefficients of the face generating polynomial `Σ_j f_{j-1} t^j`.
    pub fn polynomial_coeffs(&self) -> Vec<i64> {
        self.0.clone()
    }
}

fn sorted_face(face: &[Vertex]) -> Face {
    let mut f = face.to_vec();
    f.sort_unstable();
    f.dedup();
    f
}

fn is_subset(a: &[Vertex], b: &[Vertex]) -> bool {
    // both sorted
    let mut it = b.iter();
    a.iter().all(|x| it.any(|y| y == x))
}

fn set_minus(a: &[Vertex], b: &[Vertex]) -> Face {
    a.iter().copied().filter(|x| !b.contains(x)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cx(facets: &[&[Vertex]]) -> SimplicialComplex {
        SimplicialComplex::from_facets(facets.iter().map(|f| f.to_vec())).unwrap()
    }

    #[test]
    fn canonical_form() {
        let c = cx(&[&[2, 1], &[2, 3], &[1, 2]]);
        assert_eq!(c.facets(), &[vec![1, 2], vec![2, 3]]);
        let c = cx(&[&[1, 2, 3], &[1, 2]]);
        assert_eq!(c.facets(), &[vec![1, 2, 3]]);
        let c = cx(&[&[1], &[2]]);
        assert_eq!(c.dim(), 0);
        assert_eq!(c.n_vertices(), 2);
    }

    #[test]
    fn from_facets_errors() {
        assert_eq!(
            SimplicialComplex::from_facets(Vec::<Vec<u32>>::new()),
            Err(Error::EmptyInput)
        );
        assert_eq!(
            SimplicialComplex::from_facets([vec![0u32, 1]]),
            Err(Error::BadLabel(0))
        );
    }

    #[test]
    fn canonical_idempotent() {
        let c = cx(&[&[1, 2], &[2, 3], &[3, 1]]);
        let again = SimplicialComplex::from_facets(c.facets().to_vec()).unwrap();
        assert_eq!(c, again);
    }

    #[test]
    fn f_vector_basics() {
        assert_eq!(cx(&[&[1, 2], &[2, 3], &[1, 3]]).f_vector().entries(), &[1, 3, 3]);
        // octahedron = 3-fold join of two points
        let two = cx(&[&[1], &[2]]);
        let oct = two.join(&two).join(&two);
        assert_eq!(oct.f_vector().entries(), &[1, 6, 12, 8]);
    }

    #[test]
    fn link_star_antistar() {
        let two = cx(&[&[1], &[2]]);
        let oct = two.join(&two).join(&two);
        let lk = oct.link(&[1]).unwrap();
        assert_eq!(lk.f_vector().entries(), &[1, 4, 4]); // 4-cycle
        // link of the empty face is the identity
        assert_eq!(oct.link(&[]).unwrap(), oct);
        // antistar of a vertex in the 3-cycle
        let tri = cx(&[&[1, 2], &[2, 3], &[1, 3]]);
        let a = tri.antistar(&[1]).unwrap();
        assert_eq!(a.facets(), &[vec![2, 3]]);
        assert!(tri.link(&[1, 2, 3]).is_err());
        // vertex decomposition f_j(Δ) = f_{j-1}(lk(v)) + f_j(antist(v))
        let f = oct.f_vector();
        let flk = oct.link(&[1]).unwrap().f_vector();
        let fast = oct.antistar(&[1]).unwrap().f_vector();
        for j in -1..=2 {
            assert_eq!(f.f(j), flk.f(j - 1) + fast.f(j));
        }
    }

    #[test]
    fn link_of_facet_is_empty_complex() {
        let tri = cx(&[&[1, 2], &[2, 3], &[1, 3]]);
        let lk = tri.link(&[1, 2]).unwrap();
        assert!(lk.is_empty_complex());
        assert_eq!(lk.dim(), -1);
        assert_eq!(lk.f_vector().entries(), &[1]);
    }

    #[test]
    fn join_and_suspension() {
        let two = cx(&[&[1], &[2]]);
        let four_cycle = two.join(&two);
        assert_eq!(four_cycle.f_vector().entries(), &[1, 4, 4]);
        let oct = four_cycle.suspension();
        let oct2 = two.join(&two).join(&two);
        assert_eq!(oct.relabel_dense().f_vector(), oct2.f_vector());
        assert_eq!(oct.f_vector().entries(), &[1, 6, 12, 8]);
    }

    #[test]
    fn missing_faces_basics() {
        let four_cycle = cx(&[&[1, 2], &[2, 3], &[3, 4], &[1, 4]]);
        assert_eq!(four_cycle.missing_faces(), vec![vec![1, 3], vec![2, 4]]);
        assert_eq!(four_cycle.max_missing_dim(), 1);
        assert!(four_cycle.is_flag());
        let tri = cx(&[&[1, 2], &[2, 3], &[1, 3]]);
        assert_eq!(tri.missing_faces(), vec![vec![1, 2, 3]]);
        assert_eq!(tri.max_missing_dim(), 2);
        assert!(!tri.is_flag());
    }

    #[test]
    fn subdivide_edge_cases() {
        let four_cycle = cx(&[&[1, 2], &[2, 3], &[3, 4], &[1, 4]]);
        let five = four_cycle.subdivide_edge(&[1, 2]).unwrap();
        assert_eq!(five.f_vector().entries(), &[1, 5, 5]);
        let two = cx(&[&[1], &[2]]);
        let oct = two.join(&two).join(&two);
        let sub = oct.subdivide_edge(&[1, 3]).unwrap();
        assert_eq!(sub.f_vector().entries(), &[1, 7, 15, 10]);
        assert!(sub.is_flag());
        assert!(oct.subdivide_edge(&[1, 2]).is_err()); // {1,2} is a missing edge
    }

    #[test]
    fn contract_edge_cases() {
        let five = cx(&[&[1, 2], &[2, 3], &[3, 4], &[4, 5], &[1, 5]]);
        let four = five.contract_edge(1, 2).unwrap();
        assert_eq!(four.f_vector().entries(), &[1, 4, 4]);
        // contracting a chord whose endpoints sit opposite on a 4-cycle
        // pinches the circle: both diagonal neighbors are shared
        let chorded = cx(&[&[1, 3], &[3, 2], &[1, 4], &[4, 2], &[1, 2]]);
        assert_eq!(
            chorded.contract_edge(1, 2),
            Err(Error::LinkConditionViolated(vec![1, 2]))
        );
        let four_cycle = cx(&[&[1, 2], &[2, 3], &[3, 4], &[1, 4]]);
        assert!(four_cycle.edge_in_induced_4cycle(1, 2).unwrap());
        let five_cycle = cx(&[&[1, 2], &[2, 3], &[3, 4], &[4, 5], &[1, 5]]);
        assert!(!five_cycle.edge_in_induced_4cycle(1, 2).unwrap());
    }

    #[test]
    fn subdivide_then_contract_restores() {
        let two = cx(&[&[1], &[2]]);
        let oct = two.join(&two).join(&two);
        let sub = oct.subdivide_edge(&[1, 3]).unwrap();
        let back = sub.contract_edge(1, 7).unwrap();
        assert_eq!(back, oct);
    }
}
