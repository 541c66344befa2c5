//! Brute-force reference implementations and randomized samplers, used by
//! the test suites to cross-check the structure-based deciders in
//! [`modring`](crate::modring) and [`units`](crate::units) against raw
//! definitions. Gated behind the `oracles` feature; not a stable API.
//!
//! The deciders here deliberately avoid the factorization shortcuts the
//! main modules rely on: nilpotency is decided by iterating powers, unit
//! status by searching for an inverse, and polynomial inverses by a
//! complete bounded coefficient search.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use rand::Rng;

use crate::modring::RingSpec;
use crate::polyring::{
    enumerate_polynomials, monomials_up_to, EnumerationBudgetError, Monomial, Polynomial,
};

/// Nilpotency by definition: some power of `value` vanishes. Iterates
/// `c, c^2, ...` for `n` steps, which covers every nilpotent residue since
/// the nilpotency index never exceeds `log2(n)`.
pub fn nilpotent_by_power_iteration(ring: &RingSpec, value: u64) -> bool {
    let c = ring.residue(value);
    let mut power = c;
    for _ in 0..ring.modulus() {
        if power.is_zero() {
            return true;
        }
        power = power * c;
    }
    false
}

/// Unit status by definition: exhaustive search for a multiplicative
/// inverse, returning it when found.
pub fn unit_by_exhaustive_search(ring: &RingSpec, value: u64) -> Option<u64> {
    let c = ring.residue(value);
    let one = ring.one();
    ring.residues().find(|&b| c * b == one).map(|b| b.value())
}

/// Unit-group exponent by definition: the least `e >= 1` with `u^e = 1`
/// for every unit `u`, found by trying each `e` in turn.
pub fn exponent_by_definition(ring: &RingSpec) -> u64 {
    let units: Vec<_> = ring.units().collect();
    let one = ring.one();
    (1..)
        .find(|&e| units.iter().all(|u| u.pow(e) == one))
        .expect("the group order is such an exponent")
}

/// A degree bound through which [`find_inverse_bounded`] is exhaustive for
/// inverses of units of total degree at most 2: the geometric-series
/// inverse has degree at most `deg(f) * (max_exponent - 1)`, padded by 2.
pub fn inverse_search_degree_bound(ring: &RingSpec) -> u32 {
    2 * ring.max_exponent().saturating_sub(1) + 2
}

/// Complete bounded inverse search, independent of the unit theory: looks
/// for `g` of total degree at most `degree_bound` with `f * g = 1` by
/// assigning coefficients of `g` monomial by monomial in ascending
/// graded-lex order and brute-forcing each coefficient over `0..n`.
///
/// The coefficient of `f * g` at a monomial `mu` involves only
/// `g`-coefficients at divisors of `mu`, which precede `mu` in the order
/// and are already assigned; a partial assignment is pruned exactly when
/// such a fully determined coefficient differs from the coefficient of 1.
/// Pruned branches are therefore genuinely infeasible and `None` means no
/// inverse of the searched degree exists.
pub fn find_inverse_bounded(f: &Polynomial, degree_bound: u32) -> Option<Polynomial> {
    let ring = f.ring();
    let vars = f.vars();
    let monomials = monomials_up_to(vars, degree_bound);
    let position: BTreeMap<&Monomial, usize> =
        monomials.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let f_terms: Vec<(&Monomial, u64)> = f.terms().map(|(m, c)| (m, c.value())).collect();
    let mut coefficients = vec![0u64; monomials.len()];

    // The coefficient of f*g at monomials[i], given assignments 0..=i.
    let product_coefficient = |i: usize, coefficients: &[u64]| -> u64 {
        let ring = f.ring();
        let mu = &monomials[i];
        let mut sum = ring.zero();
        for (alpha, c) in &f_terms {
            let divides = alpha
                .exponents()
                .iter()
                .zip(mu.exponents())
                .all(|(&a, &m)| a <= m);
            if !divides {
                continue;
            }
            let beta = Monomial::from_exponents(
                mu.exponents()
                    .iter()
                    .zip(alpha.exponents())
                    .map(|(&m, &a)| m - a)
                    .collect(),
            );
            let g_coefficient = coefficients[position[&beta]];
            sum = sum + ring.residue(*c) * ring.residue(g_coefficient);
        }
        sum.value()
    };

    fn search(
        f: &Polynomial,
        monomials: &[Monomial],
        coefficients: &mut Vec<u64>,
        product_coefficient: &dyn Fn(usize, &[u64]) -> u64,
        depth: usize,
    ) -> bool {
        let ring = f.ring();
        let n = ring.modulus();
        if depth == monomials.len() {
            // Incremental checks covered products up to the degree bound;
            // verify the coefficients beyond it with the full product.
            let g = Polynomial::from_terms(
                ring,
                f.vars(),
                monomials
                    .iter()
                    .zip(coefficients.iter())
                    .map(|(m, &c)| (m.clone(), c)),
            );
            return (f * &g) == Polynomial::one(ring, f.vars());
        }
        let target = if monomials[depth].is_constant() { 1 % n } else { 0 };
        for candidate in 0..n {
            coefficients[depth] = candidate;
            if product_coefficient(depth, coefficients) == target
                && search(f, monomials, coefficients, product_coefficient, depth + 1)
            {
                return true;
            }
        }
        coefficients[depth] = 0;
        false
    }

    if search(f, &monomials, &mut coefficients, &product_coefficient, 0) {
        Some(Polynomial::from_terms(
            ring,
            vars,
            monomials
                .iter()
                .zip(&coefficients)
                .map(|(m, &c)| (m.clone(), c)),
        ))
    } else {
        None
    }
}

/// Inverse search by full enumeration of the bounded-degree space; slower
/// than [`find_inverse_bounded`] but with no pruning logic to trust. Used
/// to validate the pruned search on small rings.
pub fn find_inverse_naive(
    f: &Polynomial,
    degree_bound: u32,
    budget: u64,
) -> Result<Option<Polynomial>, EnumerationBudgetError> {
    let ring = f.ring();
    let one = Polynomial::one(ring, f.vars());
    Ok(enumerate_polynomials(ring, f.vars(), degree_bound, budget)?
        .find(|g| (f * g) == one))
}

/// A uniformly random residue value.
pub fn random_residue(ring: &RingSpec, rng: &mut impl Rng) -> u64 {
    rng.gen_range(0..ring.modulus())
}

/// A uniformly random unit value, by rejection sampling.
pub fn random_unit_residue(ring: &RingSpec, rng: &mut impl Rng) -> u64 {
    loop {
        let v = rng.gen_range(0..ring.modulus());
        if ring.is_unit(ring.residue(v)) {
            return v;
        }
    }
}

/// A polynomial with uniformly random coefficients on every monomial of
/// total degree at most `degree_bound`.
pub fn random_polynomial(
    ring: &RingSpec,
    vars: usize,
    degree_bound: u32,
    rng: &mut impl Rng,
) -> Polynomial {
    let terms = monomials_up_to(vars, degree_bound)
        .into_iter()
        .map(|m| (m, rng.gen_range(0..ring.modulus())))
        .collect::<Vec<_>>();
    Polynomial::from_terms(ring, vars, terms)
}

/// A random polynomial all of whose coefficients are nilpotent, i.e.
/// uniformly random multiples of the radical.
pub fn random_nilpotent_polynomial(
    ring: &RingSpec,
    vars: usize,
    degree_bound: u32,
    rng: &mut impl Rng,
) -> Polynomial {
    let radical = ring.radical();
    let multiples = ring.modulus() / radical;
    let terms = monomials_up_to(vars, degree_bound)
        .into_iter()
        .map(|m| (m, radical * rng.gen_range(0..multiples)))
        .collect::<Vec<_>>();
    Polynomial::from_terms(ring, vars, terms)
}

/// A random unit: a random unit constant plus a random nilpotent
/// polynomial.
pub fn random_unit_polynomial(
    ring: &RingSpec,
    vars: usize,
    degree_bound: u32,
    rng: &mut impl Rng,
) -> Polynomial {
    let unit = Polynomial::constant(ring, vars, random_unit_residue(ring, rng));
    &unit + &random_nilpotent_polynomial(ring, vars, degree_bound, rng)
}
