mod common;

use common::{blowup_dim, free_module_dims, graph_dim, inversion_poincare};
use gkm_modular::cohomology::{equivariant_piece, hilbert_numerator, ordinary_dims_checked, GradedSolutionSpace};
use gkm_modular::gkm::{build_blowup, build_graph, Side};
use gkm_modular::hessenberg::{enumerate_hessenberg, find_modular_triples, HessenbergFunction};

fn kind_c_triples(n: usize) -> Vec<gkm_modular::hessenberg::ModularTriple> {
    enumerate_hessenberg(n)
        .iter()
        .flat_map(|h| find_modular_triples(h).unwrap())
        .filter(|t| t.c_params().is_some())
        .collect()
}

#[test]
fn slice_dims_match_multiplication_oracle() {
    for n in 1..=3 {
        for h in enumerate_hessenberg(n) {
            for side in [Side::X, Side::Y] {
                let g = build_graph(&h, side).unwrap();
                let s = GradedSolutionSpace::compute(&g, h.dimension(), 1, None).unwrap();
                let full = s.full_dims();
                for (k, &d) in full.iter().enumerate() {
                    assert_eq!(d, graph_dim(&g, k), "{h} {side} k={k}");
                    assert_eq!(equivariant_piece(&g, k).dim(), d, "{h} {side} k={k}");
                }
            }
        }
    }
}

#[test]
fn blowup_dims_match_multiplication_oracle() {
    for t in kind_c_triples(3) {
        for side in [Side::X, Side::Y] {
            let b = build_blowup(&t, side).unwrap();
            let s = GradedSolutionSpace::compute(&b, t.plus.dimension(), 1, None).unwrap();
            for (k, &d) in s.full_dims().iter().enumerate() {
                assert_eq!(d, blowup_dim(&b, k), "{} {side} k={k}", t.h);
                assert_eq!(equivariant_piece(&b, k).dim(), d);
            }
        }
    }
}

#[test]
fn size_four_low_degrees_match_oracle() {
    let hs: Vec<HessenbergFunction> = ["2,3,4,4", "3,3,4,4", "4,4,4,4"].iter().map(|s| s.parse().unwrap()).collect();
    for h in &hs {
        let g = build_graph(h, Side::X).unwrap();
        let s = GradedSolutionSpace::compute(&g, h.dimension(), 1, None).unwrap();
        for k in 0..=2 {
            assert_eq!(s.full_dims()[k], graph_dim(&g, k), "{h} k={k}");
        }
    }
    let t = kind_c_triples(4).into_iter().next().unwrap();
    let b = build_blowup(&t, Side::Y).unwrap();
    let s = GradedSolutionSpace::compute(&b, t.plus.dimension(), 1, None).unwrap();
    for k in 0..=2 {
        assert_eq!(s.full_dims()[k], blowup_dim(&b, k), "k={k}");
    }
}

#[test]
fn numerators_match_inversion_count() {
    for n in 1..=4 {
        for h in enumerate_hessenberg(n) {
            let expected = inversion_poincare(&h);
            for side in [Side::X, Side::Y] {
                let g = build_graph(&h, side).unwrap();
                let s = GradedSolutionSpace::compute(&g, h.dimension(), 1, None).unwrap();
                assert_eq!(hilbert_numerator(&s).unwrap(), expected, "{h} {side}");
                assert_eq!(ordinary_dims_checked(&s).unwrap().iter().map(|&d| d as i64).collect::<Vec<_>>(), expected);
                assert_eq!(s.full_dims(), free_module_dims(&expected, n, h.dimension() + 1));
            }
        }
    }
}
