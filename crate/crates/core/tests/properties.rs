//! Randomized invariants over small complexes and parameter ranges.

use proptest::prelude::*;

use lbt_core::complex::{FVector, SimplicialComplex};
use lbt_core::constructions::{construct_s, construct_s_idn, simplex_boundary, stacked_sphere};
use lbt_core::homology::reduced_homology;
use lbt_core::polyvec::{basis_b, f_to_h, g_of_h, h_to_f, qr_decompose, g_expand, SymPoly};

fn arb_complex() -> impl Strategy<Value = SimplicialComplex> {
    prop::collection::vec(prop::collection::btree_set(1u32..=7, 1..=4), 1..=8).prop_map(|sets| {
        let facets: Vec<Vec<u32>> = sets.into_iter().map(|s| s.into_iter().collect()).collect();
        SimplicialComplex::from_facets(facets).unwrap()
    })
}

/// A small constructed sphere: S(i,d) or a stacked sphere.
fn arb_sphere() -> impl Strategy<Value = SimplicialComplex> {
    prop_oneof![
        (0i64..=4).prop_flat_map(|d| (Just(d), 1..=(d + 1)))
            .prop_map(|(d, i)| construct_s(i, d).unwrap()),
        (1i64..=3).prop_flat_map(|d| (Just(d), (d + 2)..=(d + 6)))
            .prop_map(|(d, n)| stacked_sphere(d, n).unwrap()),
    ]
}

proptest! {
    #[test]
    fn canonical_idempotence(cx in arb_complex()) {
        let again = SimplicialComplex::from_facets(cx.facets().to_vec()).unwrap();
        prop_assert_eq!(again, cx);
    }

    #[test]
    fn f_h_round_trip(f in prop::collection::vec(-50i64..=50, 0..=7)) {
        let mut entries = vec![1];
        entries.extend(f);
        let fv = FVector(entries);
        prop_assert_eq!(h_to_f(&f_to_h(&fv)), fv);
    }

    #[test]
    fn join_face_polynomials_multiply(a in arb_complex(), b in arb_complex()) {
        let j = a.join(&b);
        let pa = SymPoly::new(a.f_vector().polynomial_coeffs());
        let pb = SymPoly::new(b.f_vector().polynomial_coeffs());
        let pj = SymPoly::new(j.f_vector().polynomial_coeffs());
        prop_assert_eq!(pa.mul(&pb), pj);
    }

    #[test]
    fn join_missing_faces_are_disjoint_union(a in arb_complex(), b in arb_complex()) {
        let j = a.join(&b);
        let offset = *a.vertices().last().unwrap();
        let mut expected: Vec<Vec<u32>> = a.missing_faces();
        expected.extend(
            b.missing_faces()
                .into_iter()
                .map(|f| f.into_iter().map(|v| v + offset).collect::<Vec<u32>>()),
        );
        expected.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
        prop_assert_eq!(j.missing_faces(), expected);
    }

    #[test]
    fn vertex_decomposition(cx in arb_complex()) {
        for &v in cx.vertices() {
            let lk = cx.link(&[v]).unwrap();
            let ast = cx.antistar(&[v]).unwrap();
            for j in 0..=cx.dim() {
                prop_assert_eq!(
                    cx.f_vector().f(j),
                    lk.f_vector().f(j - 1) + ast.f_vector().f(j)
                );
            }
        }
    }

    #[test]
    fn link_preserves_missing_face_bound(cx in arb_complex()) {
        let i = cx.max_missing_dim();
        for &v in cx.vertices() {
            let lk = cx.link(&[v]).unwrap();
            prop_assert!(lk.max_missing_dim() <= i.max(1));
        }
    }

    #[test]
    fn euler_poincare(cx in arb_complex()) {
        let h = reduced_homology(&cx);
        let f = cx.f_vector();
        let mut lhs = 0i64;
        let mut rhs = 0i64;
        for j in -1..=cx.dim() {
            let sign = if (j + 1) % 2 == 0 { 1 } else { -1 };
            lhs += sign * f.f(j);
            rhs += sign * h.betti_at(j);
        }
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn dehn_sommerville_for_spheres(cx in arb_sphere()) {
        let h = f_to_h(&cx.f_vector());
        prop_assert!(h.is_symmetric());
    }

    #[test]
    fn kunneth_for_sphere_joins(a in 1i64..=3, b in 1i64..=3) {
        let j = simplex_boundary(a + 1).unwrap().join(&simplex_boundary(b + 1).unwrap());
        let h = reduced_homology(&j);
        let top = a + b + 1;
        for k in -1..=top {
            prop_assert_eq!(h.betti_at(k), if k == top { 1 } else { 0 });
            prop_assert!(h.torsion_at(k).is_empty());
        }
    }

    #[test]
    fn g_of_equality_family_vanishes(d in 1i64..=5, i_off in 0i64..=4, n_off in 0i64..=4) {
        let i = 1 + i_off.min(d - 1).max(0);
        let (q, _) = qr_decompose(d, i).unwrap();
        let n = d + q + 2 + n_off;
        let cx = construct_s_idn(i, d, n).unwrap();
        let g = g_of_h(&f_to_h(&cx.f_vector()), i).unwrap();
        prop_assert_eq!(g.entries[0], 1);
        for j in 2..g.entries.len() {
            prop_assert_eq!(g.entries[j], 0);
        }
    }

    #[test]
    fn expansion_hierarchy_is_transitive(
        d in 1i64..=11,
        i_raw in 1i64..=10,
        g_tail in prop::collection::vec(0i64..=4, 6),
    ) {
        let i = i_raw.min(d); // 1 <= i < d+1
        let basis = basis_b(d, i).unwrap();
        // a nonnegative combination with g_0 = 1 is a valid g^(i)-input
        let mut h = SymPoly::zero();
        for (j, p) in basis.iter().enumerate() {
            let gj = if j == 0 { 1 } else { g_tail[(j - 1) % g_tail.len()] };
            h = h.add(&p.scale(gj));
        }
        let g_up = g_expand(&h, d, i + 1).unwrap();
        for (j, &c) in g_up.entries.iter().enumerate() {
            prop_assert!(c >= 0, "negative g^{{({})}}_{} = {}", i + 1, j, c);
        }
    }
}
