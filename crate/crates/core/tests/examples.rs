use std::path::Path;

use weightgb::betti::betti_table;
use weightgb::bounds::load_corpus;
use weightgb::oracle::{ideal_component_basis, initial_component, same_span};
use weightgb::order::{initial_form_weight, omega_h_weight};
use weightgb::poly::{default_names, parse_poly};
use weightgb::relative::{prop24_check, relative_gb, RelGbConfig};
use weightgb::{with_field, Field, FpPoly, Poly, QPoly, WeightOrder};

fn corpus_dir() -> &'static Path {
    Path::new(concat!(env!("CARGO_MANIFEST_DIR"), "/../../corpus"))
}

fn fp(v: &[&str], n: usize) -> Vec<FpPoly> {
    v.iter().map(|s| parse_poly(s, &default_names(n)).unwrap()).collect()
}

fn round_trip<F: Field>(file: &weightgb::ideal_file::IdealFile) -> weightgb::Result<()> {
    for p in file.polys::<F>()? {
        let text = file.ring.print(&p);
        assert_eq!(file.ring.parse::<F>(&text)?, p, "{text}");
    }
    Ok(())
}

#[test]
fn corpus_polynomials_round_trip() {
    let corpus = load_corpus(corpus_dir()).unwrap();
    assert!(!corpus.items.is_empty());
    for it in &corpus.items {
        with_field!(it.file.field(), K => round_trip::<K>(&it.file)).unwrap();
    }
}

#[test]
fn omega_two_example_against_oracle() {
    let gens = fp(&["x1*x3 + x2^2", "x1*x4"], 4);
    let w = omega_h_weight(4, 2, 8).unwrap();
    let rel = relative_gb(&gens, &w, &RelGbConfig::capped(Some(8))).unwrap();
    for d in 0..=8 {
        let ours = ideal_component_basis(&rel.initial_gens, d).unwrap();
        let theirs = initial_component(&gens, &w, d).unwrap();
        assert!(same_span(4, d, &ours, &theirs).unwrap(), "degree {d}");
    }
}

#[test]
fn real_prime_over_rationals() {
    let names: Vec<String> = ["a", "b", "c", "d"].iter().map(|s| s.to_string()).collect();
    let gens: Vec<QPoly> = ["a^2 + c^2", "b^2 + d^2", "a*d - b*c", "a*b + c*d"]
        .iter()
        .map(|s| parse_poly(s, &names).unwrap())
        .collect();
    let t = betti_table(&gens, 2, 4).unwrap();
    assert_eq!(t.get(0, 1), Some(0));
    assert_eq!(t.get(0, 2), Some(4));
    assert_eq!(t.get(1, 3), Some(4));
    assert_eq!(t.get(2, 4), Some(1));
}

#[test]
fn single_polynomial_gb_is_itself() {
    let f: QPoly = parse_poly("2*x1^2 - x2*x3", &default_names(3)).unwrap();
    let w = WeightOrder::new(vec![1, 0, 0]);
    let rel = relative_gb(std::slice::from_ref(&f), &w, &RelGbConfig::default()).unwrap();
    assert_eq!(rel.gb, vec![f.monic()]);
    assert_eq!(rel.initial_gens, vec![initial_form_weight(&f, &w).unwrap().monic()]);
}

#[test]
fn upper_bound_for_regular_sequence_in_first_variables() {
    let gens = fp(&["x1^2 + x1*x2", "x2^2"], 4);
    let w = WeightOrder::new(vec![2, 1, 1, 0]);
    let r = prop24_check(&gens, &w).unwrap();
    assert_eq!((r.beta0, r.beta1), (0, 0));
    assert!(r.ok);
}

#[test]
fn upper_bound_on_monomials() {
    let gens = fp(&["x1*x2", "x2*x3", "x3*x4", "x1^2"], 4);
    let w = WeightOrder::new(vec![1, 2, 3, 4]);
    let r = prop24_check(&gens, &w).unwrap();
    assert!(r.ok, "{r:?}");
    assert!(r.beta1 > 0);
}

#[test]
fn truncated_run_parks_high_generators() {
    let gens: Vec<FpPoly> = vec![
        Poly::var(3, 0) * Poly::var(3, 1),
        parse_poly("x3^4", &default_names(3)).unwrap(),
    ];
    let rel = relative_gb(&gens, &WeightOrder::new(vec![1, 1, 1]), &RelGbConfig::capped(Some(3))).unwrap();
    assert_eq!(rel.parked.len(), 1);
    assert_eq!(rel.initial_gens.len(), 1);
}
