//! The extremal complexes: joins of simplex boundaries `S(i,d)`, stacked
//! spheres `Sk(d,n)`, the minimizer candidates `S(i,d,n)`, and the MPW
//! coefficient tables `a_{k,d}`, `b_{k,d}`.

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::polyvec::qr_decompose;

/// `∂σ^m`: boundary of the m-simplex on labels `1..=m+1`.
pub fn simplex_boundary(m: i64) -> Result<SimplicialComplex> {
    if m < 0 {
        return Err(Error::BadParams(format!("simplex boundary needs m >= 0; got {m}")));
    }
    if m == 0 {
        return Ok(SimplicialComplex::empty());
    }
    let verts: Vec<u32> = (1..=(m + 1) as u32).collect();
    let facets: Vec<Vec<u32>> = verts
        .iter()
        .map(|&skip| verts.iter().copied().filter(|&v| v != skip).collect())
        .collect();
    SimplicialComplex::from_facets(facets)
}

/// Boundary of the `(d+1)`-dimensional crosspolytope: the `(d+1)`-fold join
/// of two-point complexes. Equals `S(1, d)`.
pub fn crosspolytope_boundary(d: i64) -> Result<SimplicialComplex> {
    construct_s(1, d)
}

/// `S(i,d) = ∂σ^i * ... * ∂σ^i * ∂σ^r` with `q` copies of `∂σ^i`, where
/// `d+1 = qi + r`. For `i > d+1` this is `∂σ^{d+1}`.
pub fn construct_s(i: i64, d: i64) -> Result<SimplicialComplex> {
    if i < 1 || d < -1 {
        return Err(Error::BadParams(format!("construct_s needs i >= 1, d >= -1; got i={i}, d={d}")));
    }
    if d == -1 {
        return Ok(SimplicialComplex::empty());
    }
    let (q, r) = qr_decompose(d, i)?;
    let factor = simplex_boundary(i)?;
    let mut acc = simplex_boundary(r)?;
    for _ in 0..q {
        acc = factor.join(&acc);
    }
    Ok(acc)
}

/// A stacked d-sphere with n vertices: start from `∂σ^{d+1}` and repeatedly
/// replace the lexicographically smallest facet by the cone of a fresh vertex
/// over its boundary. The combinatorial type is fixed by this site rule; the
/// f-vector is independent of it.
pub fn stacked_sphere(d: i64, n: i64) -> Result<SimplicialComplex> {
    if d < 0 {
        return Err(Error::BadParams(format!("stacked_sphere needs d >= 0; got {d}")));
    }
    if n < d + 2 {
        return Err(Error::TooFewVertices {
            n: n.max(0) as usize,
            min: (d + 2) as usize,
        });
    }
    if d == 0 && n > 2 {
        return Err(Error::BadParams("a 0-sphere has exactly two vertices".into()));
    }
    let mut cx = simplex_boundary(d + 1)?;
    for step in 0..(n - d - 2) {
        let target = cx.facets()[0].clone();
        let w = (d + 2 + step + 1) as u32;
        let mut facets: Vec<Vec<u32>> = cx.facets()[1..].to_vec();
        for &skip in &target {
            let mut f: Vec<u32> = target.iter().copied().filter(|&v| v != skip).collect();
            f.push(w);
            facets.push(f);
        }
        cx = SimplicialComplex::from_facets(facets)?;
    }
    Ok(cx)
}

/// `S(i,d,n)`: `q` copies of `∂σ^i` joined with `Sk(r-1, n-q(i+1))`, except
/// that for `r = 1` and `n > q(i+1)+2` the last copy of `∂σ^i` is traded for
/// a stacked i-sphere: `q-1` copies joined with `Sk(i, n-(q-1)(i+1))`.
pub fn construct_s_idn(i: i64, d: i64, n: i64) -> Result<SimplicialComplex> {
    if i < 1 || d < 0 {
        return Err(Error::BadParams(format!("construct_s_idn needs i >= 1, d >= 0; got i={i}, d={d}")));
    }
    let (q, r) = qr_decompose(d, i)?;
    if n < d + q + 2 {
        return Err(Error::TooFewVertices {
            n: n.max(0) as usize,
            min: (d + q + 2) as usize,
        });
    }
    let factor = simplex_boundary(i)?;
    let (copies, sphere) = if r == 1 && n > q * (i + 1) + 2 {
        (q - 1, stacked_sphere(i, n - (q - 1) * (i + 1))?)
    } else {
        (q, stacked_sphere(r - 1, n - q * (i + 1))?)
    };
    let mut acc = sphere;
    for _ in 0..copies {
        acc = factor.join(&acc);
    }
    let acc = acc.relabel_dense();
    // cheap post-construction sanity: dimension, vertex count, missing-face bound
    if acc.dim() != d || acc.n_vertices() as i64 != n || acc.max_missing_dim() > i {
        return Err(Error::BadParams(format!(
            "construct_s_idn produced an invalid complex for i={i}, d={d}, n={n}"
        )));
    }
    Ok(acc)
}

/// MPW coefficient tables: `f_k(S(1,d,n)) = a_{k,d}·n − b_{k,d}`.
#[derive(Clone, Debug)]
pub struct MpwCoefficients {
    k_max: usize,
    d_max: usize,
    a: Vec<Vec<i64>>, // a[k][d], valid for 1 <= k <= d
    b: Vec<Vec<i64>>,
}

impl MpwCoefficients {
    pub fn a(&self, k: usize, d: usize) -> i64 {
        self.a[k][d]
    }

    pub fn b(&self, k: usize, d: usize) -> i64 {
        self.b[k][d]
    }

    pub fn k_max(&self) -> usize {
        self.k_max
    }

    pub fn d_max(&self) -> usize {
        self.d_max
    }
}

fn binom(n: i64, k: i64) -> i64 {
    if k < 0 || k > n.max(0) {
        return 0;
    }
    // Pascal, exact
    let mut row = vec![1i64];
    for _ in 0..n {
        let mut next = vec![1i64];
        for w in row.windows(2) {
            next.push(w[0] + w[1]);
        }
        next.push(1);
        row = next;
    }
    row[k as usize]
}

/// Closed form `a_{k,d} = 2^{k-1}[C(d-1,k)+C(d,k)]`.
pub fn mpw_a_closed(k: i64, d: i64) -> i64 {
    (1i64 << (k - 1)) * (binom(d - 1, k) + binom(d, k))
}

/// Closed form `b_{k,d} = 2^k((d+1)[C(d-1,k)+C(d,k)] − 2C(d+1,k+1))`.
pub fn mpw_b_closed(k: i64, d: i64) -> i64 {
    (1i64 << k) * ((d + 1) * (binom(d - 1, k) + binom(d, k)) - 2 * binom(d + 1, k + 1))
}

/// Fill the tables from the base row `a_{1,d} = 2d−1`, `b_{1,d} = 2(d+1)(d−1)`
/// by the recurrences `(k+1)a_{k,d} = 2(2d−1)a_{k−1,d−1} − b_{k−1,d−1}` and
/// `(k+1)b_{k,d} = 4(d+1)(d−1)a_{k−1,d−1}`, and assert agreement with the
/// closed forms for `1 < k < d`.
pub fn mpw_coefficients(k_max: usize, d_max: usize) -> Result<MpwCoefficients> {
    if k_max < 1 || d_max < 1 {
        return Err(Error::BadParams("mpw_coefficients needs k_max, d_max >= 1".into()));
    }
    let mut a = vec![vec![0i64; d_max + 1]; k_max + 1];
    let mut b = vec![vec![0i64; d_max + 1]; k_max + 1];
    for d in 1..=d_max {
        let di = d as i64;
        a[1][d] = 2 * di - 1;
        b[1][d] = 2 * (di + 1) * (di - 1);
    }
    for k in 2..=k_max {
        for d in k..=d_max {
            let ki = k as i64;
            let di = d as i64;
            let num_a = 2 * (2 * di - 1) * a[k - 1][d - 1] - b[k - 1][d - 1];
            let num_b = 4 * (di + 1) * (di - 1) * a[k - 1][d - 1];
            if num_a % (ki + 1) != 0 || num_b % (ki + 1) != 0 {
                return Err(Error::RecurrenceClosedFormMismatch { k, d });
            }
            a[k][d] = num_a / (ki + 1);
            b[k][d] = num_b / (ki + 1);
            if k < d && (a[k][d] != mpw_a_closed(ki, di) || b[k][d] != mpw_b_closed(ki, di)) {
                return Err(Error::RecurrenceClosedFormMismatch { k, d });
            }
        }
    }
    Ok(MpwCoefficients { k_max, d_max, a, b })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::complex::FVector;

    #[test]
    fn s_id_base_cases() {
        let oct = construct_s(1, 2).unwrap();
        assert_eq!(oct.f_vector().entries(), &[1, 6, 12, 8]);
        let s24 = construct_s(2, 4).unwrap();
        assert_eq!(s24.f_vector().entries(), &[1, 8, 27, 48, 45, 18]);
        // q = 0: boundary of the (d+1)-simplex
        let s = construct_s(4, 3).unwrap();
        assert_eq!(s, simplex_boundary(4).unwrap());
        // f_0 = d + q + 2
        for d in 0..=8i64 {
            for i in 1..=(d + 1) {
                let (q, _) = qr_decompose(d, i).unwrap();
                let s = construct_s(i, d).unwrap();
                assert_eq!(s.n_vertices() as i64, d + q + 2, "i={i} d={d}");
            }
        }
    }

    #[test]
    fn s_id_missing_face_dims() {
        for d in 1..=4i64 {
            for i in 1..=(d + 1) {
                let s = construct_s(i, d).unwrap();
                let expect = if i <= d { i } else { d + 1 };
                assert_eq!(s.max_missing_dim(), expect, "i={i} d={d}");
            }
        }
    }

    #[test]
    fn stacked_sphere_f_vectors() {
        assert_eq!(stacked_sphere(2, 4).unwrap(), simplex_boundary(3).unwrap());
        assert_eq!(stacked_sphere(2, 5).unwrap().f_vector().entries(), &[1, 5, 9, 6]);
        for m in 3..=8 {
            let f = stacked_sphere(1, m).unwrap().f_vector();
            assert_eq!(f.entries(), &[1, m, m]); // m-cycle
        }
        assert!(stacked_sphere(2, 3).is_err());
    }

    #[test]
    fn s_idn_cases() {
        let oct = construct_s_idn(1, 2, 6).unwrap();
        assert_eq!(oct, construct_s(1, 2).unwrap().relabel_dense());
        // suspension of a pentagon
        let s127 = construct_s_idn(1, 2, 7).unwrap();
        assert_eq!(s127.f_vector().entries(), &[1, 7, 15, 10]);
        assert!(s127.is_flag());
        // S(d-1,d) = S(d-1,d,d+3)
        for d in 3..=5i64 {
            let lhs = construct_s(d - 1, d).unwrap().relabel_dense();
            let rhs = construct_s_idn(d - 1, d, d + 3).unwrap();
            assert_eq!(lhs, rhs, "d={d}");
        }
        assert!(matches!(
            construct_s_idn(1, 2, 5),
            Err(Error::TooFewVertices { .. })
        ));
    }

    #[test]
    fn mpw_base_and_small_cases() {
        let t = mpw_coefficients(5, 6).unwrap();
        for d in 1..=6usize {
            assert_eq!(t.a(1, d), 2 * d as i64 - 1);
            assert_eq!(t.b(1, d), 2 * (d as i64 + 1) * (d as i64 - 1));
        }
        // k=1, d=2: f_1(S(1,2,n)) = 3n - 6
        assert_eq!(t.a(1, 2), 3);
        assert_eq!(t.b(1, 2), 6);
        let oct = construct_s_idn(1, 2, 6).unwrap();
        assert_eq!(oct.f_vector().f(1), 3 * 6 - 6);
        // k=2, d=3: a = 8
        assert_eq!(t.a(2, 3), 8);
        let s138 = construct_s_idn(1, 3, 8).unwrap();
        assert_eq!(s138.f_vector().f(2), 8 * 8 - t.b(2, 3));
    }

    #[test]
    fn mpw_against_constructions() {
        let t = mpw_coefficients(4, 4).unwrap();
        for d in 2..=4usize {
            // i = 1 gives q = d, so the smallest feasible n is 2d + 2
            for n in (2 * d as i64 + 2)..=(2 * d as i64 + 5) {
                let cx = construct_s_idn(1, d as i64, n).unwrap();
                let f: FVector = cx.f_vector();
                for k in 1..=d {
                    assert_eq!(
                        f.f(k as i64),
                        t.a(k, d) * n - t.b(k, d),
                        "k={k} d={d} n={n}"
                    );
                }
            }
        }
    }
}
