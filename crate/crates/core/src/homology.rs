//! Exact reduced simplicial homology and cohomology over the integers,
//! homology-sphere and family-membership predicates, and the Alexander-dual
//! complex built on the set of missing faces.
//!
//! Conventions: the augmentation is always included, so `H̃_{-1}({∅}) = ℤ`
//! and `H̃_{-1} = 0` for every nonempty complex.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;

use crate::complex::{Face, SimplicialComplex};
use crate::error::{Error, Result};
use crate::matrix::{smith_normal_form, IntegerMatrix};

/// Reduced homology per dimension, from −1 up to `dim(Δ)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyProfile {
    /// `betti[j + 1]` is the rank of `H̃_j`.
    betti: Vec<i64>,
    /// `torsion[j + 1]` are the invariant factors > 1 of `H̃_j`.
    torsion: Vec<Vec<BigInt>>,
}

impl HomologyProfile {
    pub fn betti_at(&self, j: i64) -> i64 {
        if j < -1 {
            return 0;
        }
        self.betti.get((j + 1) as usize).copied().unwrap_or(0)
    }

    pub fn torsion_at(&self, j: i64) -> &[BigInt] {
        if j < -1 {
            return &[];
        }
        self.torsion
            .get((j + 1) as usize)
            .map(|v| v.as_slice())
            .unwrap_or(&[])
    }

    pub fn top_dim(&self) -> i64 {
        self.betti.len() as i64 - 2
    }

    /// Whether this is the profile of `S^m` (with `S^{-1} = {∅}`).
    pub fn is_sphere_profile(&self, m: i64) -> bool {
        if self.betti_at(m) != 1 {
            return false;
        }
        (-1..=self.top_dim())
            .all(|j| (j == m || self.betti_at(j) == 0) && self.torsion_at(j).is_empty())
    }

    pub fn is_trivial(&self) -> bool {
        (-1..=self.top_dim()).all(|j| self.betti_at(j) == 0 && self.torsion_at(j).is_empty())
    }

    /// Betti numbers for dimensions `0..=dim`; reduced, so `betti_at(-1)` is
    /// dropped unless the profile is that of `{∅}`.
    pub fn betti_vec(&self) -> Vec<i64> {
        self.betti.iter().copied().skip(1).collect()
    }

    pub fn torsion_u64(&self) -> Vec<(i64, Vec<u64>)> {
        (-1..=self.top_dim())
            .filter(|&j| !self.torsion_at(j).is_empty())
            .map(|j| {
                (
                    j,
                    self.torsion_at(j)
                        .iter()
                        .map(|t| u64::try_from(t).expect("torsion factor exceeds u64"))
                        .collect(),
                )
            })
            .collect()
    }
}

/// Boundary matrix `∂_j` of the augmented chain complex: rows are the
/// `(j-1)`-faces, columns the `j`-faces, both in lex order. `∂_0` maps every
/// vertex to the empty face.
pub fn boundary_matrix(cx: &SimplicialComplex, j: i64) -> IntegerMatrix {
    let rows_faces = cx.faces_of_dim(j - 1);
    let cols_faces = cx.faces_of_dim(j);
    let index: HashMap<&Face, usize> = rows_faces.iter().zip(0..).collect();
    let mut m = IntegerMatrix::zero(rows_faces.len(), cols_faces.len());
    for (c, face) in cols_faces.iter().enumerate() {
        for k in 0..face.len() {
            let mut sub = face.clone();
            sub.remove(k);
            let r = index[&sub];
            let sign = if k % 2 == 0 { 1 } else { -1 };
            m.set(r, c, BigInt::from(sign));
        }
    }
    m
}

/// Reduced integral homology via Smith normal form of the boundary maps.
pub fn reduced_homology(cx: &SimplicialComplex) -> HomologyProfile {
    let d = cx.dim();
    // rank and invariant factors of ∂_j for j = 0..=d, plus zero maps at the ends
    let mut rank = vec![0usize; (d + 3) as usize]; // rank[j+1] = rank ∂_j
    let mut factors: Vec<Vec<BigInt>> = vec![vec![]; (d + 3) as usize];
    for j in 0..=d {
        let (r, f) = smith_normal_form(&boundary_matrix(cx, j));
        rank[(j + 1) as usize] = r;
        factors[(j + 1) as usize] = f;
    }
    let mut betti = Vec::new();
    let mut torsion = Vec::new();
    for j in -1..=d {
        let c_j = cx.faces_of_dim(j).len() as i64;
        let b = c_j - rank[(j + 1) as usize] as i64 - *rank.get((j + 2) as usize).unwrap_or(&0) as i64;
        betti.push(b);
        let t: Vec<BigInt> = factors
            .get((j + 2) as usize)
            .map(|f| f.iter().filter(|x| !x.is_one()).cloned().collect())
            .unwrap_or_default();
        torsion.push(t);
    }
    HomologyProfile { betti, torsion }
}

/// Reduced integral cohomology, computed as homology of the transposed
/// (co)chain complex: `H̃^k = ker ∂_k^T / im ∂_{k+1}^T`... i.e. the free part
/// agrees with `H̃_k` and the torsion of `H̃^k` equals that of `H̃_{k-1}`.
/// Indexing mirrors [`HomologyProfile`]: entry `k+1` describes `H̃^k`.
pub fn reduced_cohomology(cx: &SimplicialComplex) -> HomologyProfile {
    let d = cx.dim();
    let mut rank = vec![0usize; (d + 3) as usize];
    let mut factors: Vec<Vec<BigInt>> = vec![vec![]; (d + 3) as usize];
    for j in 0..=d {
        let (r, f) = smith_normal_form(&boundary_matrix(cx, j).transpose());
        rank[(j + 1) as usize] = r;
        factors[(j + 1) as usize] = f;
    }
    let mut betti = Vec::new();
    let mut torsion = Vec::new();
    for k in -1..=d {
        let c_k = cx.faces_of_dim(k).len() as i64;
        let b = c_k - rank[(k + 1) as usize] as i64 - *rank.get((k + 2) as usize).unwrap_or(&0) as i64;
        betti.push(b);
        // coboundary into degree k is the transpose of ∂_k
        let t: Vec<BigInt> = factors
            .get((k + 1) as usize)
            .map(|f| f.iter().filter(|x| !x.is_one()).cloned().collect())
            .unwrap_or_default();
        torsion.push(t);
    }
    HomologyProfile { betti, torsion }
}

/// True iff the link of every face `F` (including `∅`) has the reduced
/// homology of `S^{dim(Δ)-|F|}`. Enumerates every face; exponential in the
/// complex size, desk scale only.
pub fn is_homology_sphere(cx: &SimplicialComplex) -> bool {
    let d = cx.dim();
    cx.all_faces().iter().all(|f| {
        let lk = cx.link(f).unwrap();
        reduced_homology(&lk).is_sphere_profile(d - f.len() as i64)
    })
}

/// The Alexander-dual complex: one vertex per missing face of `Δ` (numbered
/// in their canonical order), a nonempty collection of missing faces being a
/// face iff the union of its members is not the whole vertex set.
pub fn gamma_complex(cx: &SimplicialComplex) -> Result<SimplicialComplex> {
    let missing = cx.missing_faces();
    if missing.is_empty() {
        return Err(Error::IsSimplex);
    }
    // maximal admissible collections: for each vertex v, all missing faces
    // avoiding v
    let mut facets: Vec<Vec<u32>> = Vec::new();
    for &v in cx.vertices() {
        let s: Vec<u32> = missing
            .iter()
            .enumerate()
            .filter(|(_, f)| !f.contains(&v))
            .map(|(i, _)| (i + 1) as u32)
            .collect();
        if !s.is_empty() {
            facets.push(s);
        }
    }
    if facets.is_empty() {
        return Ok(SimplicialComplex::empty());
    }
    SimplicialComplex::from_facets(facets)
}

/// Check `H̃_j(Δ) ≅ H̃^{n-j-3}(Γ)` for all `j` (betti and torsion, with the
/// cohomology torsion living one degree above its homology counterpart).
pub fn alexander_duality_check(cx: &SimplicialComplex) -> Result<bool> {
    let gamma = gamma_complex(cx)?;
    let h = reduced_homology(cx);
    let ch = reduced_cohomology(&gamma);
    let n = cx.n_vertices() as i64;
    for j in -1..=n {
        let k = n - j - 3;
        if h.betti_at(j) != ch.betti_at(k) || h.torsion_at(j) != ch.torsion_at(k) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Membership report for the families `C(i,d)` and `HS(i,d,n)`.
#[derive(Clone, Debug, Serialize)]
pub struct Classification {
    pub dim: i64,
    pub n: usize,
    pub max_missing_dim: i64,
    pub i: i64,
    pub top_homology_nonzero: bool,
    /// `Δ ∈ C(i,d)`: dimension `d`, `H̃_d ≠ 0`, no missing face of dim > i.
    pub in_c_id: bool,
    pub is_homology_sphere: bool,
    /// `Δ ∈ HS(i,d,n)`: homology sphere with the missing-face bound.
    pub in_hs_idn: bool,
    pub is_flag: bool,
}

pub fn classify(cx: &SimplicialComplex, i: i64) -> Result<Classification> {
    if i < 1 {
        return Err(Error::BadParams("classify needs i >= 1".into()));
    }
    let dim = cx.dim();
    let profile = reduced_homology(cx);
    let top_nonzero = profile.betti_at(dim) != 0 || !profile.torsion_at(dim).is_empty();
    let mmd = cx.max_missing_dim();
    let hs = is_homology_sphere(cx);
    Ok(Classification {
        dim,
        n: cx.n_vertices(),
        max_missing_dim: mmd,
        i,
        top_homology_nonzero: top_nonzero,
        in_c_id: top_nonzero && mmd <= i,
        is_homology_sphere: hs,
        in_hs_idn: hs && mmd <= i,
        is_flag: cx.is_flag(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cx(facets: &[&[u32]]) -> SimplicialComplex {
        SimplicialComplex::from_facets(facets.iter().map(|f| f.to_vec())).unwrap()
    }

    fn octahedron() -> SimplicialComplex {
        let two = cx(&[&[1], &[2]]);
        two.join(&two).join(&two)
    }

    fn rp2() -> SimplicialComplex {
        cx(&[
            &[1, 2, 5],
            &[1, 2, 6],
            &[1, 3, 4],
            &[1, 3, 6],
            &[1, 4, 5],
            &[2, 3, 4],
            &[2, 3, 5],
            &[2, 4, 6],
            &[3, 5, 6],
            &[4, 5, 6],
        ])
    }

    #[test]
    fn homology_of_spheres_and_circle() {
        let h = reduced_homology(&octahedron());
        assert_eq!(h.betti_vec(), vec![0, 0, 1]);
        assert!(h.torsion_u64().is_empty());
        let four_cycle = cx(&[&[1, 2], &[2, 3], &[3, 4], &[1, 4]]);
        assert_eq!(reduced_homology(&four_cycle).betti_vec(), vec![0, 1]);
    }

    #[test]
    fn homology_of_projective_plane() {
        let h = reduced_homology(&rp2());
        assert_eq!(h.betti_vec(), vec![0, 0, 0]);
        assert_eq!(h.torsion_u64(), vec![(1, vec![2])]);
    }

    #[test]
    fn empty_complex_profile() {
        let h = reduced_homology(&SimplicialComplex::empty());
        assert_eq!(h.betti_at(-1), 1);
        assert!(h.is_sphere_profile(-1));
    }

    #[test]
    fn homology_sphere_predicate() {
        let simplex_boundary = cx(&[&[1, 2, 3], &[1, 2, 4], &[1, 3, 4], &[2, 3, 4]]);
        assert!(is_homology_sphere(&simplex_boundary));
        assert!(is_homology_sphere(&octahedron()));
        assert!(!is_homology_sphere(&rp2()));
        // two disjoint triangle boundaries: link of ∅ already fails
        let two_triangles = cx(&[
            &[1, 2], &[2, 3], &[1, 3], &[4, 5], &[5, 6], &[4, 6],
        ]);
        assert!(!is_homology_sphere(&two_triangles));
    }

    #[test]
    fn gamma_complex_small_cases() {
        // two points: the single missing face is the whole vertex set
        let two = cx(&[&[1], &[2]]);
        let g = gamma_complex(&two).unwrap();
        assert!(g.is_empty_complex());
        assert!(alexander_duality_check(&two).unwrap());
        // 4-cycle: two diagonals, their union covers V
        let four_cycle = cx(&[&[1, 2], &[2, 3], &[3, 4], &[1, 4]]);
        let g = gamma_complex(&four_cycle).unwrap();
        assert_eq!(g.facets(), &[vec![1], vec![2]]);
        assert!(alexander_duality_check(&four_cycle).unwrap());
        // 5-cycle: five diagonals
        let five_cycle = cx(&[&[1, 2], &[2, 3], &[3, 4], &[4, 5], &[1, 5]]);
        assert_eq!(gamma_complex(&five_cycle).unwrap().n_vertices(), 5);
        assert!(alexander_duality_check(&five_cycle).unwrap());
        // full simplex has no missing face
        let simplex = cx(&[&[1, 2, 3]]);
        assert_eq!(gamma_complex(&simplex), Err(Error::IsSimplex));
    }

    #[test]
    fn classify_small_cases() {
        let c = classify(&octahedron(), 1).unwrap();
        assert!(c.in_c_id && c.in_hs_idn && c.is_flag);
        assert_eq!((c.dim, c.n), (2, 6));
        let tri = cx(&[&[1, 2], &[2, 3], &[1, 3]]);
        let c1 = classify(&tri, 1).unwrap();
        assert!(!c1.in_c_id); // missing 2-face
        let c2 = classify(&tri, 2).unwrap();
        assert!(c2.in_c_id);
    }

    #[test]
    fn boundary_of_boundary_is_zero() {
        let oct = octahedron();
        for j in 1..=oct.dim() {
            let a = boundary_matrix(&oct, j - 1);
            let b = boundary_matrix(&oct, j);
            // compose: every column of b maps to zero under a
            for c in 0..b.cols {
                for r in 0..a.rows {
                    let mut acc = BigInt::from(0);
                    for k in 0..a.cols {
                        acc += a.get(r, k) * b.get(k, c);
                    }
                    assert_eq!(acc, BigInt::from(0));
                }
            }
        }
    }
}
