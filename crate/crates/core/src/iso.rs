//! Combinatorial isomorphism testing by backtracking over vertex maps with
//! degree/link-invariant pruning. Adequate at a dozen vertices; exponential
//! in the worst case.

use std::collections::BTreeSet;

use crate::complex::{Face, SimplicialComplex};

/// Per-vertex invariant: 1-skeleton degree and multiset of incident facet sizes.
fn vertex_signature(cx: &SimplicialComplex, v: u32) -> (usize, Vec<usize>) {
    let deg = cx
        .vertices()
        .iter()
        .filter(|&&u| u != v && cx.contains_face(&sorted_pair(u, v)))
        .count();
    let mut sizes: Vec<usize> = cx
        .facets()
        .iter()
        .filter(|f| f.contains(&v))
        .map(|f| f.len())
        .collect();
    sizes.sort_unstable();
    (deg, sizes)
}

fn sorted_pair(a: u32, b: u32) -> Face {
    if a < b {
        vec![a, b]
    } else {
        vec![b, a]
    }
}

pub fn are_isomorphic(a: &SimplicialComplex, b: &SimplicialComplex) -> bool {
    let a = a.relabel_dense();
    let b = b.relabel_dense();
    if a.n_vertices() != b.n_vertices() || a.f_vector() != b.f_vector() {
        return false;
    }
    let n = a.n_vertices();
    let sig_a: Vec<_> = (1..=n as u32).map(|v| vertex_signature(&a, v)).collect();
    let sig_b: Vec<_> = (1..=n as u32).map(|v| vertex_signature(&b, v)).collect();
    {
        let mut sa = sig_a.clone();
        let mut sb = sig_b.clone();
        sa.sort();
        sb.sort();
        if sa != sb {
            return false;
        }
    }
    let facets_b: BTreeSet<Face> = b.facets().iter().cloned().collect();
    // map[v-1] = image of v in b, 0 = unassigned
    let mut map = vec![0u32; n];
    let mut used = vec![false; n + 1];
    backtrack(&a, &facets_b, &sig_a, &sig_b, &mut map, &mut used, 0)
}

fn backtrack(
    a: &SimplicialComplex,
    facets_b: &BTreeSet<Face>,
    sig_a: &[(usize, Vec<usize>)],
    sig_b: &[(usize, Vec<usize>)],
    map: &mut Vec<u32>,
    used: &mut Vec<bool>,
    depth: usize,
) -> bool {
    let n = map.len();
    if depth == n {
        // full facet check
        return a.facets().iter().all(|f| {
            let mut img: Face = f.iter().map(|&v| map[(v - 1) as usize]).collect();
            img.sort_unstable();
            facets_b.contains(&img)
        });
    }
    let v = depth as u32 + 1;
    for w in 1..=n as u32 {
        if used[w as usize] || sig_a[depth] != sig_b[(w - 1) as usize] {
            continue;
        }
        // partial consistency: edges among assigned vertices must map to edges
        let ok = (1..v).all(|u| {
            let e_a = a.contains_face(&sorted_pair(u, v));
            let img = sorted_pair(map[(u - 1) as usize], w);
            let e_b = facets_b.iter().any(|f| {
                img.iter().all(|x| f.contains(x))
            });
            e_a == e_b
        });
        if !ok {
            continue;
        }
        map[depth] = w;
        used[w as usize] = true;
        if backtrack(a, facets_b, sig_a, sig_b, map, used, depth + 1) {
            return true;
        }
        used[w as usize] = false;
        map[depth] = 0;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cx(facets: &[&[u32]]) -> SimplicialComplex {
        SimplicialComplex::from_facets(facets.iter().map(|f| f.to_vec())).unwrap()
    }

    #[test]
    fn cycles() {
        let c1 = cx(&[&[1, 2], &[2, 3], &[3, 4], &[1, 4]]);
        let c2 = cx(&[&[1, 3], &[3, 2], &[2, 4], &[1, 4]]);
        assert!(are_isomorphic(&c1, &c2));
        let c5 = cx(&[&[1, 2], &[2, 3], &[3, 4], &[4, 5], &[1, 5]]);
        assert!(!are_isomorphic(&c1, &c5));
    }

    #[test]
    fn octahedron_relabelings() {
        let two = cx(&[&[1], &[2]]);
        let oct = two.join(&two).join(&two);
        // same complex with a permuted antipodal structure
        let perm = cx(&[
            &[1, 2, 3], &[1, 2, 6], &[1, 5, 3], &[1, 5, 6],
            &[4, 2, 3], &[4, 2, 6], &[4, 5, 3], &[4, 5, 6],
        ]);
        assert!(are_isomorphic(&oct, &perm));
        // bipyramid over a triangle has the same f-vector pattern only when... it does not: (5,9,6)
        let bipyr = cx(&[&[1, 2], &[2, 3], &[1, 3]]).suspension();
        assert!(!are_isomorphic(&oct, &bipyr));
    }
}
