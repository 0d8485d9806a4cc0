use proptest::prelude::*;
use weightgb::betti::{monomial_betti, truncated_betti};
use weightgb::bounds::{binomial, bound_a, bound_b, castelnuovo};
use weightgb::groebner::{apply_row, buchberger, colon_ideal, ideal_membership, same_ideal, syzygy_generators};
use weightgb::homog::{eval_y0, eval_y1, homogenize, strip_y};
use weightgb::lambda::{build_lambda, lambda_dim, lcm_sets, SplitGenerator};
use weightgb::oracle::{hilbert_function, ideal_component_basis, initial_component, same_span, syzygy_counts};
use weightgb::order::{initial_form_matrix, initial_form_weight, omega_h_matrix, refine_to_weight, weight_compare};
use weightgb::poly::{bidegree, default_names, dim_graded, parse_poly};
use weightgb::relative::{relative_gb, RelGbConfig, RelGbState};
use weightgb::sample::{random_ideal, random_monomial_ideal, random_sparse_form, random_weight, rng};
use weightgb::{BigUint, Field, FpPoly, Monomial, MonomialOrder, Poly, QPoly, F32003, Q};

fn cfg(cases: u32) -> ProptestConfig {
    ProptestConfig {
        cases,
        ..ProptestConfig::default()
    }
}

fn form(n: usize, d: u32, terms: usize, seed: u64) -> FpPoly {
    random_sparse_form(n, d, terms, &mut rng(seed))
}

fn leading(f: &FpPoly, ord: MonomialOrder) -> (Monomial, F32003) {
    f.terms()
        .iter()
        .max_by(|a, b| ord.compare(&a.0, &b.0))
        .cloned()
        .expect("nonzero")
}

fn s_poly(f: &FpPoly, g: &FpPoly, ord: MonomialOrder) -> FpPoly {
    let (mf, cf) = leading(f, ord);
    let (mg, cg) = leading(g, ord);
    let l = mf.lcm(&mg);
    let a = f.mul_term(&l.quotient(&mf).unwrap(), &cg);
    let b = g.mul_term(&l.quotient(&mg).unwrap(), &cf);
    &a - &b
}

proptest! {
    #![proptest_config(cfg(64))]

    #[test]
    fn degree_and_bidegree_add(n in 2usize..5, d1 in 1u32..4, d2 in 1u32..4, seed in any::<u64>()) {
        let f = form(n, d1, 3, seed);
        let g = form(n, d2, 3, seed ^ 1);
        prop_assert_eq!((&f * &g).degree(), Some(d1 + d2));
        let h = 1 + (seed as usize) % (n - 1);
        let mf = Poly::monomial(f.terms()[0].0.clone());
        let mg: FpPoly = Poly::monomial(g.terms()[0].0.clone());
        let sum = &bidegree(&mf, h).unwrap() + &bidegree(&mg, h).unwrap();
        prop_assert_eq!(bidegree(&(&mf * &mg), h).unwrap(), sum);
    }

    #[test]
    fn print_parse_round_trip(n in 1usize..5, d in 0u32..5, terms in 1usize..6, seed in any::<u64>()) {
        let names = default_names(n);
        let f = form(n, d, terms, seed);
        let text = f.display_with(&names).to_string();
        prop_assert_eq!(parse_poly::<F32003>(&text, &names).unwrap(), f);
        let q: QPoly = Poly::from_terms(n, vec![
            (Monomial::var(n, 0).pow(d), Q::from_i64((seed % 7) as i64 + 7) / Q::from_i64(3)),
            (Monomial::var(n, n - 1).pow(d), Q::from_i64(-((seed % 5) as i64) - 1)),
        ]);
        prop_assume!(n > 1 || d == 0);
        let text = q.display_with(&names).to_string();
        prop_assert_eq!(parse_poly::<weightgb::Q>(&text, &names).unwrap(), q);
    }

    #[test]
    fn initial_form_is_multiplicative(n in 2usize..5, seed in any::<u64>()) {
        let mut r = rng(seed);
        let w = random_weight(n, 4, &mut r);
        let f = form(n, 2, 3, seed);
        let g = form(n, 3, 3, seed ^ 7);
        let lhs = initial_form_weight(&(&f * &g), &w).unwrap();
        let rhs = &initial_form_weight(&f, &w).unwrap() * &initial_form_weight(&g, &w).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn refinement_matches_matrix(n in 2usize..5, d in 1u32..5, seed in any::<u64>()) {
        let h = 1 + (seed as usize) % (n - 1);
        let m = omega_h_matrix(n, h).unwrap();
        let f = form(n, d, 5, seed);
        let mons: Vec<Monomial> = f.support().cloned().collect();
        let w = refine_to_weight(&m, &mons).unwrap();
        prop_assert_eq!(initial_form_matrix(&f, &m).unwrap(), initial_form_weight(&f, &w).unwrap());
    }

    #[test]
    fn omega_one_full_refinement_is_degrevlex(n in 2usize..5, d in 1u32..5, seed in any::<u64>()) {
        let m = omega_h_matrix(n, 1).unwrap();
        let f = form(n, d, 6, seed);
        let init = initial_form_matrix(&f, &m).unwrap();
        prop_assert_eq!(init.len(), 1);
        prop_assert_eq!(&init.terms()[0], f.leading().unwrap());
    }

    #[test]
    fn weight_compare_is_total_preorder(n in 1usize..5, seed in any::<u64>()) {
        let mut r = rng(seed);
        let w = random_weight(n, 3, &mut r);
        let ms: Vec<Monomial> = (0..3).map(|k| weightgb::sample::random_monomial(n, 2 + k % 2, &mut r)).collect();
        use std::cmp::Ordering::*;
        for a in &ms {
            prop_assert_eq!(weight_compare(a, a, &w), Equal);
            for b in &ms {
                prop_assert_eq!(weight_compare(a, b, &w), weight_compare(b, a, &w).reverse());
                for c in &ms {
                    if weight_compare(a, b, &w) != Greater && weight_compare(b, c, &w) != Greater {
                        prop_assert_ne!(weight_compare(a, c, &w), Greater);
                    }
                }
            }
        }
    }

    #[test]
    fn dim_graded_counts_monomials(h in 1usize..6, d in 0u32..11) {
        prop_assert_eq!(dim_graded(h, i64::from(d)), BigUint::from(Monomial::all_of_degree(h, d).len()));
    }
}

proptest! {
    #![proptest_config(cfg(24))]

    #[test]
    fn buchberger_criterion_and_ideal_equality(n in 2usize..4, count in 1usize..4, seed in any::<u64>(), deglex in any::<bool>()) {
        let ord = if deglex { MonomialOrder::DegLex } else { MonomialOrder::DegRevLex };
        let gens: Vec<FpPoly> = random_ideal(n, count, 3, &mut rng(seed));
        let gb = buchberger(&gens, ord).unwrap();
        for (a, f) in gb.gens().iter().enumerate() {
            for g in &gb.gens()[a + 1..] {
                prop_assert!(gb.normal_form(&s_poly(f, g, ord)).is_zero());
            }
        }
        for g in &gens {
            prop_assert!(gb.contains(g));
        }
        for g in gb.gens() {
            prop_assert!(ideal_membership(g, &gens, MonomialOrder::DegRevLex).unwrap());
        }
    }

    #[test]
    fn syzygies_are_exact_and_complete(n in 2usize..4, count in 2usize..4, seed in any::<u64>()) {
        let gens: Vec<FpPoly> = random_ideal(n, count, 2, &mut rng(seed));
        let syz = syzygy_generators(&gens, MonomialOrder::DegRevLex).unwrap();
        for row in &syz.rows {
            prop_assert!(apply_row(row, &gens).is_zero());
        }
        for d in 0..=5u32 {
            let (dim_kernel, _) = syzygy_counts(&gens, d).unwrap();
            let mut vectors: Vec<Vec<FpPoly>> = Vec::new();
            for (row, &deg) in syz.rows.iter().zip(&syz.degrees) {
                if deg as u32 > d {
                    continue;
                }
                for m in Monomial::all_of_degree(n, d - deg as u32) {
                    vectors.push(row.iter().map(|p| p.mul_term(&m, &F32003::new(1))).collect());
                }
            }
            prop_assert_eq!(vector_rank(&gens, d, &vectors), dim_kernel);
        }
    }

    #[test]
    fn colon_contains_ideal(n in 2usize..4, seed in any::<u64>()) {
        let gens: Vec<FpPoly> = random_monomial_ideal(n, 3, 3, &mut rng(seed));
        let g = Poly::var(n, 0);
        let c = colon_ideal(&gens, &g, MonomialOrder::DegRevLex).unwrap();
        for f in &gens {
            prop_assert!(ideal_membership(f, &c, MonomialOrder::DegRevLex).unwrap());
        }
        for f in &c {
            prop_assert!(ideal_membership(&(f * &g), &gens, MonomialOrder::DegRevLex).unwrap());
        }
    }

    #[test]
    fn homogenization_identities(n in 1usize..5, d in 0u32..5, seed in any::<u64>()) {
        let mut r = rng(seed);
        let w = random_weight(n, 5, &mut r);
        let g = form(n, d, 4, seed);
        let hg = homogenize(&g, &w).unwrap();
        prop_assert_eq!(eval_y1(&hg), g.clone());
        prop_assert_eq!(eval_y0(&hg), initial_form_weight(&g, &w).unwrap());
        prop_assert_eq!(hg.deg_x(), Some(d));
        let (a, psi) = strip_y(&hg.mul_y(3)).unwrap();
        prop_assert!(a >= 3);
        prop_assert_eq!(strip_y(&psi).unwrap().0, 0);
    }

    #[test]
    fn relative_gb_invariants(n in 2usize..5, count in 1usize..4, seed in any::<u64>()) {
        let mut r = rng(seed);
        let gens: Vec<FpPoly> = random_ideal(n, count, 3, &mut r);
        let w = random_weight(n, 4, &mut r);
        let cap = 6;
        let rel = relative_gb(&gens, &w, &RelGbConfig::capped(Some(cap))).unwrap();
        prop_assert!(rel.minimal);
        for (k, p) in rel.initial_gens.iter().enumerate() {
            let others: Vec<FpPoly> = rel.initial_gens.iter().enumerate().filter(|(i, _)| *i != k).map(|(_, q)| q.clone()).collect();
            prop_assert!(others.is_empty() || !ideal_membership(p, &others, MonomialOrder::DegRevLex).unwrap());
        }
        prop_assert!(same_ideal(&rel.gb, &gens, MonomialOrder::DegRevLex).unwrap());
        for g in &gens {
            let init = initial_form_weight(g, &w).unwrap();
            prop_assert!(ideal_membership(&init, &rel.initial_gens, MonomialOrder::DegRevLex).unwrap());
        }
        for d in 0..=cap {
            let ours = ideal_component_basis(&rel.initial_gens, d).unwrap();
            let theirs = initial_component(&gens, &w, d).unwrap();
            prop_assert!(same_span(n, d, &ours, &theirs).unwrap());
        }
    }

    #[test]
    fn ideal_chain_grows(n in 2usize..4, count in 2usize..4, seed in any::<u64>()) {
        let mut r = rng(seed);
        let gens: Vec<FpPoly> = random_ideal(n, count, 3, &mut r);
        let w = random_weight(n, 4, &mut r);
        let mut state = RelGbState::new(&gens, &w, Some(6)).unwrap();
        for _ in 0..16 {
            let before: Vec<_> = state.generators().to_vec();
            let (_, stable) = state.iterate().unwrap();
            for g in &before {
                prop_assert!(state.contains(g));
            }
            if stable {
                prop_assert_eq!(before.len(), state.generators().len());
                break;
            }
            prop_assert!(state.generators().len() > before.len());
        }
    }
}

fn vector_rank(gens: &[FpPoly], d: u32, vectors: &[Vec<FpPoly>]) -> usize {
    // rank of homogeneous syzygy vectors of degree d, each flattened over (component, monomial)
    let n = gens[0].nvars();
    let mut cols: Vec<(usize, Monomial)> = Vec::new();
    for (i, g) in gens.iter().enumerate() {
        let dg = g.degree().unwrap_or(0);
        if dg <= d {
            for m in Monomial::all_of_degree(n, d - dg) {
                cols.push((i, m));
            }
        }
    }
    let rows: Vec<Vec<F32003>> = vectors
        .iter()
        .map(|v| {
            cols.iter()
                .map(|(i, m)| v[*i].coefficient(m))
                .collect()
        })
        .collect();
    if rows.is_empty() {
        return 0;
    }
    weightgb::linalg::Matrix::from_rows(cols.len(), rows).rank()
}

fn split_gens(n: usize, h: usize, seed: u64, count: usize) -> Vec<SplitGenerator<F32003>> {
    let mut r = rng(seed);
    (0..count)
        .map(|i| {
            let e = (seed as u32 + i as u32) % 3;
            let gbar = random_sparse_form::<F32003, _>(h, e, 2, &mut r).resized(n);
            let mut ex = vec![0u32; h];
            ex.extend_from_slice(weightgb::sample::random_monomial(n - h, 1 + (i as u32 % 2), &mut r).exponents());
            SplitGenerator::new(gbar, Monomial::from_exponents(&ex), h, i).unwrap()
        })
        .collect()
}

proptest! {
    #![proptest_config(cfg(48))]

    #[test]
    fn lambda_invariants(n in 3usize..6, count in 1usize..5, seed in any::<u64>(), j in 0i64..8) {
        let h = 1 + (seed as usize) % (n - 1);
        let g = split_gens(n, h, seed, count);
        let l = build_lambda(&g, h);
        let full = lcm_sets(&g.iter().map(|s| s.m.clone()).collect::<Vec<_>>());
        for k in 1..count {
            let prefix = lcm_sets(&g[..k].iter().map(|s| s.m.clone()).collect::<Vec<_>>());
            prop_assert_eq!(&prefix[..], &full[..k]);
            let shorter = build_lambda(&g[..k], h);
            if g[k..].iter().all(|s| i64::from(s.degree()) <= j) {
                prop_assert!(lambda_dim(&shorter, j) <= lambda_dim(&l, j));
            }
        }
        let below = l.gamma.iter().filter(|s| i64::from(s.degree()) <= j).count();
        prop_assert!(BigUint::from(below) <= lambda_dim(&l, j));
    }

    #[test]
    fn bound_identities(h in 1u64..40, j in 1u32..6) {
        prop_assert_eq!(bound_a(h, j + 1), bound_a(h, j).pow(2) * BigUint::from(h).pow(3));
        prop_assert!(bound_b(h) >= castelnuovo(h));
    }

    #[test]
    fn castelnuovo_large_h(h in 1u64..1_000_000) {
        prop_assert!(bound_b(h) >= castelnuovo(h));
    }
}

proptest! {
    #![proptest_config(cfg(20))]

    #[test]
    fn taylor_and_koszul_agree(n in 2usize..5, count in 1usize..6, seed in any::<u64>()) {
        let gens: Vec<FpPoly> = random_monomial_ideal(n, count, 3, &mut rng(seed));
        let a = monomial_betti(&gens, 2, 6).unwrap();
        let b = truncated_betti(&gens, 2, 6).unwrap();
        prop_assert_eq!(a, b);
    }

    #[test]
    fn taylor_bound(n in 2usize..5, count in 1usize..7, seed in any::<u64>()) {
        let gens: Vec<FpPoly> = random_monomial_ideal(n, count, 4, &mut rng(seed));
        let t = monomial_betti(&gens, 3, 7).unwrap();
        for j in 0..=4u32 {
            let base = BigUint::from(t.get_le(0, j).unwrap());
            for i in 0..=3u32 {
                prop_assert!(BigUint::from(t.get_le(i, i + j).unwrap()) <= binomial(&base, u64::from(i) + 1));
            }
        }
    }

    #[test]
    fn betti_independent_of_presentation(n in 2usize..4, count in 1usize..4, seed in any::<u64>()) {
        let gens: Vec<FpPoly> = random_ideal(n, count, 3, &mut rng(seed));
        let gb = buchberger(&gens, MonomialOrder::DegRevLex).unwrap();
        prop_assert_eq!(
            truncated_betti(&gens, 2, 6).unwrap(),
            truncated_betti(gb.gens(), 2, 6).unwrap()
        );
    }

    #[test]
    fn betti_alternating_sum_matches_hilbert(n in 2usize..4, count in 1usize..4, seed in any::<u64>()) {
        let gens: Vec<FpPoly> = random_ideal(n, count, 2, &mut rng(seed));
        let max_j = 5;
        let t = truncated_betti(&gens, n as u32, max_j).unwrap();
        let hf = hilbert_function(&gens, max_j).unwrap();
        for j in 0..=max_j {
            // sum_i (-1)^i beta_{i,j}(S/I) dim S_{d-j} = HF(S/I)(d)
            let mut lhs: i128 = 0;
            for jj in 0..=j {
                let mut c: i128 = if jj == 0 { 1 } else { 0 };
                for i in 0..=n as u32 {
                    let b = i128::from(t.get(i, jj).unwrap_or(0));
                    c += if i % 2 == 0 { -b } else { b };
                }
                let s: i128 = Monomial::all_of_degree(n, j - jj).len() as i128;
                lhs += c * s;
            }
            prop_assert_eq!(lhs, hf[j as usize] as i128);
        }
    }
}
