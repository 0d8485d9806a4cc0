//! The ten acceptance criteria, one report line each.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::Rng;
use weightgb::betti::{aci_comparison, aci_construct, monomial_betti, semicontinuity_check};
use weightgb::bounds::{
    bound_a, bound_b, bound_thm48, castelnuovo, load_corpus, verify_item, BoundReport, CorpusItem, VerifyConfig,
};
use weightgb::groebner::{height, same_ideal};
use weightgb::lambda::{lambda_count_check, prop33_check, sample_lambda_pair, sample_prop33_instance};
use weightgb::oracle::{ideal_component_basis, ideal_dims, initial_component, same_span};
use weightgb::order::{initial_form_matrix, omega_h_matrix, omega_h_weight};
use weightgb::relative::{prop24_check, relative_gb, RelGbConfig};
use weightgb::sample::{
    coordinate_intersection, random_coordinate_pair, random_form, random_ideal, random_linear_change,
    random_monomial_ideal, random_weight, rng, substitute,
};
use weightgb::{BigUint, FpPoly, MonomialOrder, Poly, F32003};

type Outcome = std::result::Result<String, String>;

fn corpus_item(name: &str) -> CorpusItem {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/../../corpus");
    let corpus = load_corpus(path).expect("bundled corpus");
    corpus
        .items
        .into_iter()
        .find(|it| it.id == name)
        .unwrap_or_else(|| panic!("corpus item {name}"))
}

fn beta(r: &BoundReport, i: u32, j: u32) -> Option<u64> {
    r.betti.as_ref().and_then(|t| t.get(i, j))
}

fn check_named(r: &BoundReport, name: &str, j: u32) -> Option<(BigUint, BigUint, bool)> {
    r.checks
        .iter()
        .find(|c| c.bound_name == name && c.j == j && c.i == 0)
        .map(|c| (c.computed.clone(), c.bound.clone(), c.ok))
}

fn tables() -> VerifyConfig {
    VerifyConfig {
        tables: true,
        ..Default::default()
    }
}

fn criterion_1() -> Outcome {
    let mut notes = Vec::new();
    for (h, name) in [(2u64, "ex_radical_h2"), (3, "ex_radical_h3")] {
        let start = Instant::now();
        let r = verify_item(&corpus_item(name), None, &tables());
        let elapsed = start.elapsed();
        if !r.ok() {
            return Err(format!("{name}: report failed: {r:?}"));
        }
        let b02 = beta(&r, 0, 2).ok_or("missing beta_02")?;
        if b02 != h * h {
            return Err(format!("{name}: beta_02 = {b02}, expected {}", h * h));
        }
        let b = check_named(&r, "bound_B", 2).ok_or("no bound_B check")?;
        let a = check_named(&r, "bound_A", 2).ok_or("no bound_A check")?;
        if b.1 != bound_b(h) || a.1 != bound_a(h, 2) || !a.2 || !b.2 {
            return Err(format!("{name}: bound checks {a:?} {b:?}"));
        }
        if elapsed > Duration::from_secs(5) {
            return Err(format!("{name}: took {elapsed:?}"));
        }
        notes.push(format!("h={h}: beta_02={b02} <= {} and <= {}", b.1, a.1));
    }
    Ok(notes.join("; "))
}

fn criterion_2() -> Outcome {
    let start = Instant::now();
    let r = verify_item(&corpus_item("real_prime"), None, &tables());
    let elapsed = start.elapsed();
    if !r.ok() || r.field != "QQ" {
        return Err(format!("report failed: {r:?}"));
    }
    let (b01, b02) = (beta(&r, 0, 1), beta(&r, 0, 2));
    if b01 != Some(0) || b02 != Some(4) {
        return Err(format!("beta_01 = {b01:?}, beta_02 = {b02:?}"));
    }
    let b = check_named(&r, "bound_B", 2).ok_or("no bound_B check")?;
    let c = r.castelnuovo.as_ref().ok_or("no Castelnuovo flag")?;
    if b.1 != BigUint::from(10u32) || !b.2 || c.bound != castelnuovo(2) || c.bound != BigUint::from(3u32) || !c.exceeded {
        return Err(format!("bound_B {b:?}, castelnuovo {c:?}"));
    }
    if elapsed > Duration::from_secs(5) {
        return Err(format!("took {elapsed:?}"));
    }
    Ok(format!("beta_01=0, beta_02=4 <= 10, 4 > 3 flagged ({elapsed:.2?})"))
}

fn oracle_agrees(gens: &[FpPoly], w: &weightgb::WeightOrder, cap: u32) -> std::result::Result<(), String> {
    let n = w.nvars();
    let rel = relative_gb(gens, w, &RelGbConfig::capped(Some(cap))).map_err(|e| e.to_string())?;
    for d in 0..=cap {
        let ours = ideal_component_basis(&rel.initial_gens, d).map_err(|e| e.to_string())?;
        let theirs = initial_component(gens, w, d).map_err(|e| e.to_string())?;
        if !same_span(n, d, &ours, &theirs).map_err(|e| e.to_string())? {
            return Err(format!("degree {d}: {} vs {} basis elements", ours.len(), theirs.len()));
        }
    }
    Ok(())
}

fn criterion_3() -> Outcome {
    let mut runs = 0;
    for seed in 0..24u64 {
        let mut r = rng(3000 + seed);
        let n = r.gen_range(2..=4);
        let count = r.gen_range(1..=3);
        let gens: Vec<FpPoly> = random_ideal(n, count, 3, &mut r);
        let w = random_weight(n, 5, &mut r);
        oracle_agrees(&gens, &w, 8).map_err(|e| format!("seed {seed}, random weight {:?}: {e}", w.omega()))?;
        let h = r.gen_range(1..n);
        let wh = omega_h_weight(n, h, 8).map_err(|e| e.to_string())?;
        oracle_agrees(&gens, &wh, 8).map_err(|e| format!("seed {seed}, Omega_{h}: {e}"))?;
        runs += 2;
    }
    Ok(format!("{runs} runs over 24 ideals, components equal for d <= 8"))
}

fn criterion_4() -> Outcome {
    let mut done = 0;
    let mut seed = 0u64;
    while done < 20 {
        seed += 1;
        let mut r = rng(4000 + seed);
        let n = r.gen_range(3..=5);
        let h = r.gen_range(1..=3.min(n - 1));
        let change = random_linear_change::<F32003, _>(n, &mut r);
        let f: Vec<FpPoly> = (0..h)
            .map(|_| {
                let d = r.gen_range(1..=3);
                substitute(&random_form(n, d, &mut r), &change)
            })
            .collect();
        if height(&f).map_err(|e| e.to_string())? != h as i64 {
            continue;
        }
        let tail: Vec<FpPoly> = (h..n).map(|i| Poly::var(n, i)).collect();
        let mut gens = f.clone();
        gens.extend(tail.iter().cloned());
        let cap = f.iter().filter_map(|p| p.degree()).max().unwrap_or(1) + 2;
        let matrix = omega_h_matrix(n, h).map_err(|e| e.to_string())?;
        let w = omega_h_weight(n, h, cap).map_err(|e| e.to_string())?;
        let lead: Vec<FpPoly> = f
            .iter()
            .map(|p| initial_form_matrix(p, &matrix))
            .collect::<weightgb::Result<_>>()
            .map_err(|e| e.to_string())?;
        let mut expected = lead.clone();
        expected.extend(tail);
        let rel = relative_gb(&gens, &w, &RelGbConfig::capped(Some(cap))).map_err(|e| e.to_string())?;
        if !same_ideal(&rel.initial_gens, &expected, MonomialOrder::DegRevLex).map_err(|e| e.to_string())? {
            return Err(format!("seed {seed}: initial ideal differs from (in f, x_tail)"));
        }
        if ideal_dims(&rel.initial_gens, cap).map_err(|e| e.to_string())?
            != ideal_dims(&gens, cap).map_err(|e| e.to_string())?
        {
            return Err(format!("seed {seed}: Hilbert functions differ"));
        }
        if lead.iter().any(|p| p.support().any(|m| m.exponents()[h..].iter().any(|&e| e > 0))) {
            return Err(format!("seed {seed}: an initial form leaves the first {h} variables"));
        }
        if height(&lead).map_err(|e| e.to_string())? != h as i64 {
            return Err(format!("seed {seed}: initial forms are not a regular sequence"));
        }
        done += 1;
    }
    Ok(format!("{done} regular sequences ({} seeds drawn)", seed))
}

fn criterion_5() -> Outcome {
    let mut max_ratio = (BigUint::from(0u32), BigUint::from(1u32));
    for seed in 0..60u64 {
        let mut r = rng(5000 + seed);
        let n = r.gen_range(3..=5);
        let h = r.gen_range(1..n);
        let j = r.gen_range(1..=4);
        let (g1, g2) = sample_lambda_pair::<F32003, _>(n, h, j, &mut r);
        let rep = lambda_count_check(&g1, &g2, j, h).map_err(|e| format!("seed {seed}: {e}"))?;
        if !rep.ok {
            return Err(format!("seed {seed}: {} > {}", rep.lambda_next, rep.rhs));
        }
        if &rep.lambda_next * &max_ratio.1 > &max_ratio.0 * &rep.rhs {
            max_ratio = (rep.lambda_next.clone(), rep.rhs.clone());
        }
    }
    Ok(format!("60 pairs, tightest lambda_(j+1)/rhs = {}/{}", max_ratio.0, max_ratio.1))
}

fn criterion_6() -> Outcome {
    for seed in 0..20u64 {
        let mut r = rng(6000 + seed);
        let n = r.gen_range(3..=4);
        let h = r.gen_range(1..n.min(3));
        let (phi, gamma, d, j) = sample_prop33_instance::<F32003, _>(n, h, &mut r);
        let rep = prop33_check(&phi, &gamma, d, j, h).map_err(|e| format!("bound lambda seed {seed}: {e}"))?;
        if !rep.ok {
            return Err(format!("bound lambda seed {seed}: beta1 {} > lambda {}", rep.beta1, rep.lambda));
        }
    }
    for seed in 0..20u64 {
        let mut r = rng(6500 + seed);
        let n = r.gen_range(2..=4);
        let count = r.gen_range(1..=3);
        let input: Vec<FpPoly> = random_ideal(n, count, 3, &mut r);
        let w = random_weight(n, 4, &mut r);
        let cap = input.iter().filter_map(|p| p.degree()).max().unwrap_or(1) + 1;
        let gens = relative_gb(&input, &w, &RelGbConfig::capped(Some(cap)))
            .map_err(|e| e.to_string())?
            .gb;
        let rep = prop24_check(&gens, &w).map_err(|e| format!("upper bound seed {seed}: {e}"))?;
        if !rep.ok {
            return Err(format!("upper bound seed {seed}: {rep:?}"));
        }
    }
    Ok("20 + 20 instances".into())
}

fn criterion_7() -> Outcome {
    let mut done = 0;
    let mut seed = 0u64;
    while done < 12 {
        seed += 1;
        let mut r = rng(7000 + seed);
        let h = r.gen_range(2..=3);
        let n = r.gen_range(h + 2..=2 * h);
        let (a, b) = random_coordinate_pair(n, h, &mut r);
        if a.iter().filter(|i| !b.contains(i)).count() < 2 {
            continue;
        }
        let gens: Vec<FpPoly> = coordinate_intersection(n, &a, &b);
        let inst = aci_construct(&gens, &[], None, seed).map_err(|e| format!("seed {seed} {a:?} {b:?}: {e}"))?;
        let rows = aci_comparison(&inst, 4).map_err(|e| e.to_string())?;
        if let Some((j, x, y)) = rows.iter().find(|(_, x, y)| x != y) {
            return Err(format!("seed {seed}: j = {j}: beta_0j(I) = {x}, beta_1,D+j = {y}"));
        }
        done += 1;
    }
    Ok(format!("{done} intersections, equality for j <= 4"))
}

fn criterion_8() -> Outcome {
    for seed in 0..24u64 {
        let mut r = rng(8000 + seed);
        let n = r.gen_range(2..=4);
        let count = r.gen_range(2..=6);
        let gens: Vec<FpPoly> = random_monomial_ideal(n, count, 4, &mut r);
        let t = monomial_betti(&gens, 3, 3 + 4).map_err(|e| e.to_string())?;
        for j in 0..=4u32 {
            let base = t.get_le(0, j).unwrap_or(0);
            for i in 0..=3u32 {
                let lhs = t.get_le(i, i + j).unwrap_or(0);
                let rhs = weightgb::bounds::binomial(&BigUint::from(base), u64::from(i) + 1);
                if BigUint::from(lhs) > rhs {
                    return Err(format!("seed {seed}: beta_(i={i}, <={}) = {lhs} > C({base}, {})", i + j, i + 1));
                }
            }
        }
    }
    Ok("24 monomial ideals, i <= 3, j <= 4".into())
}

fn criterion_9() -> Outcome {
    let mut strict = 0;
    for seed in 0..20u64 {
        let mut r = rng(9000 + seed);
        let n = r.gen_range(2..=4);
        let count = r.gen_range(1..=3);
        let gens: Vec<FpPoly> = random_ideal(n, count, 3, &mut r);
        let w = random_weight(n, 4, &mut r);
        let rep = semicontinuity_check(&gens, &w, 1, 8).map_err(|e| format!("seed {seed}: {e}"))?;
        if !rep.ok() {
            return Err(format!("seed {seed}: violations at {:?}", rep.violations));
        }
        if rep.ideal != rep.initial {
            strict += 1;
        }
    }
    Ok(format!("20 seeds, window (1, 8), {strict} with a strict jump"))
}

fn criterion_10() -> Outcome {
    let start = Instant::now();
    if bound_a(2, 3) != BigUint::from(8192u32) {
        return Err(format!("bound_A(2,3) = {}", bound_a(2, 3)));
    }
    let t = bound_thm48(2, 0, 0).map_err(|e| e.to_string())?;
    if t != BigUint::from(6u32) {
        return Err(format!("bound_thm48(2,0,0) = {t}"));
    }
    for h in 1..=5u64 {
        for j in 1..=6u32 {
            let e = (1u64 << (j + 1)) - 3;
            if (1u64 << (j + 2)) - 3 != 2 * e + 3 {
                return Err(format!("exponent identity fails at j = {j}"));
            }
            if bound_a(h, j + 1) != bound_a(h, j).pow(2) * BigUint::from(h).pow(3) {
                return Err(format!("recurrence fails at h = {h}, j = {j}"));
            }
        }
    }
    if start.elapsed() > Duration::from_secs(1) {
        return Err(format!("took {:?}", start.elapsed()));
    }
    Ok("bound_A(2,3)=8192, bound_thm48(2,0,0)=6, bound_A(h,j+1) = bound_A(h,j)^2 * h^3 for h <= 5, 1 <= j <= 6".into())
}

fn main() -> ExitCode {
    if std::env::args().any(|a| a == "--list") {
        for k in 1..=10 {
            println!("criterion_{k}: test");
        }
        return ExitCode::SUCCESS;
    }
    let criteria: [(u32, fn() -> Outcome); 10] = [
        (1, criterion_1),
        (2, criterion_2),
        (3, criterion_3),
        (4, criterion_4),
        (5, criterion_5),
        (6, criterion_6),
        (7, criterion_7),
        (8, criterion_8),
        (9, criterion_9),
        (10, criterion_10),
    ];
    let mut failed = 0;
    for (k, f) in criteria {
        let start = Instant::now();
        let res = std::panic::catch_unwind(f).unwrap_or_else(|_| Err("panicked".into()));
        let secs = start.elapsed().as_secs_f64();
        match res {
            Ok(msg) => println!("criterion {k:>2}: PASS ({secs:.2}s) {msg}"),
            Err(msg) => {
                failed += 1;
                println!("criterion {k:>2}: FAIL ({secs:.2}s) {msg}");
            }
        }
    }
    println!("{} of 10 criteria passed", 10 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
