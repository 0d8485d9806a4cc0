//! Seeded random instances.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::field::Field;
use crate::order::WeightOrder;
use crate::poly::{Monomial, Poly};

pub type SeededRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SeededRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A form of degree `d` with every monomial present.
pub fn random_form<F: Field, R: Rng + ?Sized>(n: usize, d: u32, rng: &mut R) -> Poly<F> {
    Poly::from_terms(
        n,
        Monomial::all_of_degree(n, d)
            .into_iter()
            .map(|m| (m, F::random_nonzero(rng))),
    )
}

/// A form of degree `d` with at most `terms` distinct monomials; never zero.
pub fn random_sparse_form<F: Field, R: Rng + ?Sized>(n: usize, d: u32, terms: usize, rng: &mut R) -> Poly<F> {
    let mons = Monomial::all_of_degree(n, d);
    let k = terms.clamp(1, mons.len());
    Poly::from_terms(
        n,
        mons.choose_multiple(rng, k)
            .map(|m| (m.clone(), F::random_nonzero(rng))),
    )
}

pub fn random_monomial<R: Rng + ?Sized>(n: usize, d: u32, rng: &mut R) -> Monomial {
    let mut e = vec![0u32; n];
    for _ in 0..d {
        e[rng.gen_range(0..n)] += 1;
    }
    Monomial::from_exponents(&e)
}

pub fn random_linear_form<F: Field, R: Rng + ?Sized>(n: usize, rng: &mut R) -> Poly<F> {
    random_form(n, 1, rng)
}

/// A random element of degree `d` of the ideal generated by `gens`.
pub fn random_element<F: Field, R: Rng + ?Sized>(gens: &[Poly<F>], d: u32, rng: &mut R) -> Option<Poly<F>> {
    let mut acc: Option<Poly<F>> = None;
    for g in gens {
        let Some(dg) = g.degree() else { continue };
        if g.is_zero() || dg > d {
            continue;
        }
        let n = g.nvars();
        for m in Monomial::all_of_degree(n, d - dg) {
            let t = g.mul_term(&m, &F::random_nonzero(rng));
            acc = Some(match acc {
                None => t,
                Some(a) => &a + &t,
            });
        }
    }
    acc.filter(|p| !p.is_zero())
}

/// `f(images)`: the substitution `x_i -> images[i]`.
pub fn substitute<F: Field>(f: &Poly<F>, images: &[Poly<F>]) -> Poly<F> {
    let n = images.first().map(|p| p.nvars()).unwrap_or(f.nvars());
    let mut out = Poly::zero(n);
    for (m, c) in f.terms() {
        let mut t = Poly::constant(n, c.clone());
        for (i, &e) in m.exponents().iter().enumerate() {
            if e > 0 {
                t = &t * &images[i].pow(e);
            }
        }
        out = &out + &t;
    }
    out
}

/// Images of the variables under a random invertible linear change of
/// coordinates (a product of random unit lower and upper triangular factors).
pub fn random_linear_change<F: Field, R: Rng + ?Sized>(n: usize, rng: &mut R) -> Vec<Poly<F>> {
    let mut lower = vec![vec![F::zero(); n]; n];
    let mut upper = vec![vec![F::zero(); n]; n];
    for i in 0..n {
        for j in 0..n {
            if i == j {
                lower[i][j] = F::one();
                upper[i][j] = F::random_nonzero(rng);
            } else if j < i {
                lower[i][j] = F::random_nonzero(rng);
            } else {
                upper[i][j] = F::random_nonzero(rng);
            }
        }
    }
    (0..n)
        .map(|i| {
            let terms = (0..n).map(|j| {
                let c = (0..n).fold(F::zero(), |acc, k| acc + lower[i][k].clone() * upper[k][j].clone());
                (Monomial::var(n, j), c)
            });
            Poly::from_terms(n, terms)
        })
        .collect()
}

pub fn random_weight<R: Rng + ?Sized>(n: usize, max: u64, rng: &mut R) -> WeightOrder {
    WeightOrder::new((0..n).map(|_| rng.gen_range(0..=max)).collect())
}

/// `count` random forms of two to four terms, degrees in `1..=max_deg`.
pub fn random_ideal<F: Field, R: Rng + ?Sized>(n: usize, count: usize, max_deg: u32, rng: &mut R) -> Vec<Poly<F>> {
    (0..count)
        .map(|_| {
            let d = rng.gen_range(1..=max_deg);
            let terms = rng.gen_range(2..=4);
            random_sparse_form(n, d, terms, rng)
        })
        .collect()
}

/// `count` random monomials with degrees in `1..=max_deg`.
pub fn random_monomial_ideal<F: Field, R: Rng + ?Sized>(n: usize, count: usize, max_deg: u32, rng: &mut R) -> Vec<Poly<F>> {
    (0..count)
        .map(|_| {
            let d = rng.gen_range(1..=max_deg);
            Poly::monomial(random_monomial(n, d, rng))
        })
        .collect()
}

/// Generators of `(x_i : i in a) ∩ (x_j : j in b)`.
pub fn coordinate_intersection<F: Field>(n: usize, a: &[usize], b: &[usize]) -> Vec<Poly<F>> {
    let mut out = Vec::new();
    for &i in a {
        if b.contains(&i) {
            out.push(Poly::var(n, i));
        }
    }
    for &i in a.iter().filter(|i| !b.contains(i)) {
        for &j in b.iter().filter(|j| !a.contains(j)) {
            out.push(Poly::monomial(Monomial::var(n, i).mul(&Monomial::var(n, j))));
        }
    }
    out
}

/// Two distinct random `h`-subsets of the variables.
pub fn random_coordinate_pair<R: Rng + ?Sized>(n: usize, h: usize, rng: &mut R) -> (Vec<usize>, Vec<usize>) {
    let all: Vec<usize> = (0..n).collect();
    loop {
        let mut a: Vec<usize> = all.choose_multiple(rng, h).copied().collect();
        let mut b: Vec<usize> = all.choose_multiple(rng, h).copied().collect();
        a.sort_unstable();
        b.sort_unstable();
        if a != b {
            return (a, b);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Fp;

    type F = Fp<32003>;

    #[test]
    fn seeded_is_deterministic() {
        let a: Vec<Poly<F>> = random_ideal(3, 3, 3, &mut rng(7));
        let b: Vec<Poly<F>> = random_ideal(3, 3, 3, &mut rng(7));
        assert_eq!(a, b);
        assert!(a.iter().all(|p| p.is_homogeneous() && !p.is_zero()));
    }

    #[test]
    fn substitution_by_identity() {
        let mut r = rng(1);
        let f: Poly<F> = random_form(3, 3, &mut r);
        let id: Vec<Poly<F>> = (0..3).map(|i| Poly::var(3, i)).collect();
        assert_eq!(substitute(&f, &id), f);
        let change = random_linear_change::<F, _>(3, &mut r);
        let g = substitute(&f, &change);
        assert_eq!(g.degree(), Some(3));
        assert!(g.is_homogeneous());
    }

    #[test]
    fn coordinate_intersections() {
        let g: Vec<Poly<F>> = coordinate_intersection(4, &[0, 1], &[2, 3]);
        assert_eq!(g.len(), 4);
        let g: Vec<Poly<F>> = coordinate_intersection(4, &[0, 1], &[1, 2]);
        assert_eq!(g.len(), 2);
    }
}
