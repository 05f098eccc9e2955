//! One line per acceptance criterion; exits nonzero if any fails.

mod common;

use std::process::ExitCode;
use std::time::Instant;

use common::{blowup_dim, free_module_dims, graph_dim, inversion_poincare, q_factorial};
use gkm_modular::cohomology::{graded_character_checked, hilbert_numerator, ordinary_dims_checked, Action, GradedSolutionSpace};
use gkm_modular::coloring::{
    check_csf_decomposition, check_llt_decomposition, check_modular_law_csf, check_modular_law_llt, csf_q, llt,
};
use gkm_modular::gkm::{as_kind_c, augment_blowup, build_blowup, build_graph, two_independence_check, Side};
use gkm_modular::hessenberg::{enumerate_hessenberg, find_modular_triples, transpose, HessenbergFunction, ModularTriple};
use gkm_modular::modular::{check_corollary_modular_law, check_theorem_1_1, check_theorem_1_2, check_theorem_main, graph_frobenius, TripleContext};
use gkm_modular::symfun::{Basis, GradedSymmetricFunction};

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn h(s: &str) -> HessenbergFunction {
    s.parse().unwrap()
}

fn all_triples(n: usize) -> Vec<ModularTriple> {
    enumerate_hessenberg(n).iter().flat_map(|h| find_modular_triples(h).unwrap()).collect()
}

fn kind_c(n: usize) -> Vec<ModularTriple> {
    all_triples(n).into_iter().filter(|t| t.c_params().is_some()).collect()
}

fn action(side: Side) -> Action {
    match side {
        Side::X => Action::Dot,
        Side::Y => Action::Dagger,
    }
}

fn space(h: &HessenbergFunction, side: Side) -> GradedSolutionSpace {
    GradedSolutionSpace::compute(&build_graph(h, side).unwrap(), h.dimension(), 1, None).unwrap()
}

fn sym(basis: Basis, terms: &[(usize, &[usize], i64)]) -> GradedSymmetricFunction {
    let mut g = GradedSymmetricFunction::zero(3, basis);
    for k in 0..=2 {
        let ts: Vec<(&[usize], i64)> = terms.iter().filter(|t| t.0 == k).map(|t| (t.1, t.2)).collect();
        g.set(k, gkm_modular::symfun::SymmetricFunction::from_i64_terms(3, basis, &ts));
    }
    g
}

fn criterion_1() -> Outcome {
    let mut count = 0;
    for n in 2..=4 {
        for hf in enumerate_hessenberg(n) {
            let r = check_theorem_1_1(&hf, 1, None).map_err(|e| format!("{hf}: {e}"))?;
            ensure(r.holds, || format!("{hf}: omega csf_q differs from the dot Frobenius series"))?;
            count += 1;
        }
    }
    ensure(count == 21, || format!("{count} functions, expected 21"))?;
    let hf = h("2,3,3");
    let named = sym(Basis::H, &[(0, &[3], 1), (1, &[3], 1), (1, &[2, 1], 1), (2, &[3], 1)]);
    let colors = csf_q(&hf).unwrap().omega().unwrap();
    let graph = graph_frobenius(&hf, Side::X, 1, None).unwrap();
    ensure(colors.equals(&named).unwrap() && graph.equals(&named).unwrap(), || "named instance (2,3,3) differs".into())?;
    let b = hilbert_numerator(&space(&hf, Side::X)).unwrap();
    let g = build_graph(&hf, Side::X).unwrap();
    let rank_oracle: Vec<usize> = (0..=3).map(|k| graph_dim(&g, k)).collect();
    ensure(b == vec![1, 4, 1] && rank_oracle == free_module_dims(&[1, 4, 1], 3, 3), || format!("Betti numerator {b:?}, rank oracle {rank_oracle:?}"))?;
    Ok(format!("{count} functions; (2,3,3) = (1+q+q^2)h3 + q h21, numerator 1+4q+q^2"))
}

fn criterion_2() -> Outcome {
    let mut count = 0;
    for n in 2..=4 {
        for hf in enumerate_hessenberg(n) {
            let r = check_theorem_1_2(&hf, 1, None).map_err(|e| format!("{hf}: {e}"))?;
            ensure(r.holds, || format!("{hf}: llt differs from the dagger Frobenius series"))?;
            count += 1;
        }
    }
    let hf = h("2,3,3");
    let named = sym(
        Basis::M,
        &[(0, &[3], 1), (0, &[2, 1], 1), (0, &[1, 1, 1], 1), (1, &[2, 1], 2), (1, &[1, 1, 1], 4), (2, &[1, 1, 1], 1)],
    );
    let colors = llt(&hf).unwrap();
    let graph = graph_frobenius(&hf, Side::Y, 1, None).unwrap();
    ensure(colors.equals(&named).unwrap() && graph.equals(&named).unwrap(), || "named instance (2,3,3) differs".into())?;
    Ok(format!("{count} functions; llt(2,3,3) = m3 + (1+2q)m21 + (1+4q+q^2)m111"))
}

fn criterion_3() -> Outcome {
    let (mut laws, mut refined) = (0, 0);
    for n in 2..=5 {
        for t in all_triples(n) {
            let name = format!("({}) < ({}) < ({})", t.minus, t.h, t.plus);
            ensure(check_modular_law_llt(&t).unwrap(), || format!("LLT law fails at {name}"))?;
            ensure(check_modular_law_csf(&t).unwrap(), || format!("csf law fails at {name}"))?;
            laws += 2;
            if n <= 4 {
                let c = as_kind_c(&t);
                for check in check_llt_decomposition(&c, n).unwrap().into_iter().chain(check_csf_decomposition(&c, n).unwrap()) {
                    ensure(check.holds, || format!("{} fails at {name}", check.name))?;
                    refined += 1;
                }
            }
        }
    }
    Ok(format!("{laws} modular laws (n <= 5), {refined} refined identities (n <= 4)"))
}

fn criterion_4() -> Outcome {
    let mut triples = kind_c(3);
    let n3 = triples.len();
    let n4 = kind_c(4);
    ensure(n4.len() >= 3, || "fewer than three kind-C triples at n = 4".into())?;
    triples.extend(n4);
    let mut degrees = 0;
    for t in &triples {
        for side in [Side::X, Side::Y] {
            let ctx = TripleContext::new(t, side).and_then(|c| c.with_spaces(None)).map_err(|e| e.to_string())?;
            let r = check_theorem_main(&ctx, ctx.max_degree).map_err(|e| e.to_string())?;
            ensure(r.passed(), || format!("({}) side {side}: {}", t.h, r.failures[0]))?;
            degrees += r.degrees.len();
        }
    }
    Ok(format!("{n3} triples at n = 3 and {} at n = 4, both sides, {degrees} degree checks", triples.len() - n3))
}

fn criterion_5() -> Outcome {
    let mut count = 0;
    for n in 2..=4 {
        for t in kind_c(n) {
            for side in [Side::X, Side::Y] {
                let ctx = TripleContext::new(&t, side).and_then(|c| c.with_spaces(None)).map_err(|e| e.to_string())?;
                let r = check_corollary_modular_law(&ctx).map_err(|e| e.to_string())?;
                ensure(r.holds, || format!("({}) side {side}", t.h))?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} (triple, side) pairs"))
}

fn criterion_6() -> Outcome {
    let fact = |n: usize| (1..=n as i64).product::<i64>();
    let mut blowups = 0;
    for n in 1..=4 {
        for hf in enumerate_hessenberg(n) {
            for side in [Side::X, Side::Y] {
                let b = hilbert_numerator(&space(&hf, side)).map_err(|e| e.to_string())?;
                ensure(b.iter().sum::<i64>() == fact(n), || format!("{hf} {side}: total {}", b.iter().sum::<i64>()))?;
                if side == Side::X {
                    let mut r = b.clone();
                    r.reverse();
                    ensure(r == b, || format!("{hf}: {b:?} is not palindromic"))?;
                }
                let g = build_graph(&hf, side).unwrap();
                ensure(two_independence_check(&g).is_ok(), || format!("{hf} {side} is not 2-independent"))?;
            }
            let ht = transpose(&hf);
            for side in [Side::X, Side::Y] {
                let (a, b) = (graph_frobenius(&hf, side, 1, None).unwrap(), graph_frobenius(&ht, side, 1, None).unwrap());
                ensure(a.equals(&b).unwrap(), || format!("{hf} {side}: transpose changes the Frobenius series"))?;
            }
        }
        let full = HessenbergFunction::full(n);
        let direct = ordinary_dims_checked(&space(&full, Side::X)).map_err(|e| e.to_string())?;
        ensure(
            direct.iter().map(|&d| d as i64).collect::<Vec<_>>() == q_factorial(n),
            || format!("n = {n}: direct quotient {direct:?} is not [n]_q!"),
        )?;
        ensure(inversion_poincare(&full) == q_factorial(n), || "inversion oracle disagrees with [n]_q!".into())?;
        for t in kind_c(n) {
            for side in [Side::X, Side::Y] {
                let bl = build_blowup(&t, side).unwrap();
                let s = GradedSolutionSpace::compute(&bl, t.plus.dimension(), 1, None).unwrap();
                let b = hilbert_numerator(&s).map_err(|e| e.to_string())?;
                ensure(b.iter().sum::<i64>() == 2 * fact(n), || format!("blow-up ({}) {side}: total {}", t.h, b.iter().sum::<i64>()))?;
                let w = two_independence_check(&bl.graph).err().ok_or_else(|| format!("blow-up ({}) {side} is 2-independent", t.h))?;
                let ends = |e: usize| {
                    let edge = &bl.graph.edges()[e];
                    if edge.u == w.vertex { edge.v } else { edge.u }
                };
                let (a, c) = (ends(w.edges.0), ends(w.edges.1));
                let in_quad = bl.quads.iter().any(|q| [w.vertex, a, c].iter().all(|v| q.vertices.contains(v)));
                ensure(in_quad, || format!("blow-up ({}) {side}: witness is not in a 4-gon", t.h))?;
                if n == 3 && side == Side::X {
                    let aug = augment_blowup(&bl).unwrap();
                    let sa = GradedSolutionSpace::compute(&aug, t.plus.dimension(), 1, None).unwrap();
                    ensure(sa.full_dims() == s.full_dims(), || format!("augmentation changes dimensions at ({})", t.h))?;
                    let oracle: Vec<usize> = (0..=t.plus.dimension() + 1).map(|k| blowup_dim(&aug, k)).collect();
                    ensure(oracle == s.full_dims(), || "rank oracle disagrees on the augmented graph".into())?;
                }
                blowups += 1;
            }
        }
    }
    Ok(format!("totals, palindromes, [n]_q!, transposes and 2-independence for n <= 4; {blowups} blow-ups"))
}

fn criterion_7() -> Outcome {
    let mut count = 0;
    let mut run = |s: &GradedSolutionSpace, side: Side, what: &str| -> Result<(), String> {
        graded_character_checked(s, action(side)).map_err(|e| format!("{what} {side}: {e}"))?;
        count += 1;
        Ok(())
    };
    for n in 1..=3 {
        for hf in enumerate_hessenberg(n) {
            for side in [Side::X, Side::Y] {
                run(&space(&hf, side), side, &hf.to_string())?;
            }
        }
        for t in kind_c(n) {
            for side in [Side::X, Side::Y] {
                let bl = build_blowup(&t, side).unwrap();
                let s = GradedSolutionSpace::compute(&bl, t.plus.dimension(), 1, None).unwrap();
                run(&s, side, &format!("blow-up ({})", t.h))?;
            }
        }
    }
    for s in ["2,3,4,4", "3,3,4,4", "2,4,4,4", "4,4,4,4"] {
        for side in [Side::X, Side::Y] {
            run(&space(&h(s), side), side, s)?;
        }
    }
    let t = kind_c(4).into_iter().find(|t| t.h.to_string() == "3,4,4,4").unwrap();
    for side in [Side::X, Side::Y] {
        let bl = build_blowup(&t, side).unwrap();
        let s = GradedSolutionSpace::compute(&bl, t.plus.dimension(), 1, None).unwrap();
        run(&s, side, "blow-up (3,4,4,4)")?;
    }
    Ok(format!("{count} instances agree"))
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 7] = [
        ("omega csf_q = dot Frobenius series of G_X, n <= 4", criterion_1),
        ("llt = dagger Frobenius series of G_Y, n <= 4", criterion_2),
        ("combinatorial modular laws and refined identities", criterion_3),
        ("phi + psi! and eta + rho! are equivariant isomorphisms", criterion_4),
        ("geometric modular law on both sides, n <= 4", criterion_5),
        ("structural invariants", criterion_6),
        ("series and direct characters agree", criterion_7),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        match f() {
            Ok(detail) => println!("PASS criterion {} ({name}): {detail} [{:.1}s]", i + 1, t.elapsed().as_secs_f64()),
            Err(e) => {
                failed += 1;
                println!("FAIL criterion {} ({name}): {e}", i + 1);
            }
        }
    }
    println!("acceptance: {}/7 criteria passed", 7 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
