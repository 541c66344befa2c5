//! Cross-checks of the structure-based deciders against brute-force
//! reference implementations that work straight from definitions.

use diag12_core::modring::RingSpec;
use diag12_core::oracle;
use diag12_core::polyring::{enumerate_polynomials, polynomial_count, Polynomial};
use diag12_core::units::{invert_unit, is_unit_poly, nilpotency_index};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn ring(n: u64) -> RingSpec {
    RingSpec::new(n).unwrap()
}

#[test]
fn nilpotency_matches_power_iteration() {
    for n in 1..=300 {
        let ring = ring(n);
        for c in 0..n {
            assert_eq!(
                ring.is_nilpotent(ring.residue(c)),
                oracle::nilpotent_by_power_iteration(&ring, c),
                "n = {n}, c = {c}"
            );
        }
    }
}

#[test]
fn unit_status_matches_exhaustive_inverse_search() {
    for n in 1..=300 {
        let ring = ring(n);
        for c in 0..n {
            let r = ring.residue(c);
            let found = oracle::unit_by_exhaustive_search(&ring, c);
            assert_eq!(ring.is_unit(r), found.is_some(), "n = {n}, c = {c}");
            assert_eq!(
                ring.inverse(r),
                found.map(|b| ring.residue(b)),
                "inverses are unique, so both searches must agree: n = {n}, c = {c}"
            );
        }
    }
}

#[test]
fn unit_group_exponent_matches_definition() {
    for n in 1..=100 {
        let ring = ring(n);
        assert_eq!(
            ring.unit_group_exponent(),
            oracle::exponent_by_definition(&ring),
            "n = {n}"
        );
    }
}

#[test]
fn exponent_at_most_2_iff_n_divides_24() {
    for n in 1..=200 {
        let ring = ring(n);
        assert_eq!(
            ring.unit_group_exponent() <= 2,
            24 % n == 0,
            "n = {n}"
        );
    }
}

#[test]
fn unit_recognition_matches_bounded_inverse_search() {
    for n in [2, 3, 4, 6, 9] {
        let ring = ring(n);
        let bound = oracle::inverse_search_degree_bound(&ring);
        for f in enumerate_polynomials(&ring, 1, 2, 10_000).unwrap() {
            let found = oracle::find_inverse_bounded(&f, bound);
            assert_eq!(is_unit_poly(&f), found.is_some(), "n = {n}, f = {f}");
            if let Some(inverse) = found {
                let certificate = invert_unit(&f).unwrap();
                assert_eq!(
                    certificate.inverse(),
                    &inverse,
                    "inverses are unique: n = {n}, f = {f}"
                );
            }
        }
    }
}

#[test]
fn unit_recognition_matches_bounded_inverse_search_two_variables() {
    let ring = ring(4);
    let bound = oracle::inverse_search_degree_bound(&ring);
    for f in enumerate_polynomials(&ring, 2, 1, 10_000).unwrap() {
        assert_eq!(
            is_unit_poly(&f),
            oracle::find_inverse_bounded(&f, bound).is_some(),
            "f = {f}"
        );
    }
}

#[test]
fn bounded_search_matches_naive_enumeration() {
    for n in [2, 3, 4, 6] {
        let ring = ring(n);
        let bound = oracle::inverse_search_degree_bound(&ring);
        for f in enumerate_polynomials(&ring, 1, 1, 10_000).unwrap() {
            let bounded = oracle::find_inverse_bounded(&f, bound);
            let naive = oracle::find_inverse_naive(&f, bound, 10_000_000).unwrap();
            assert_eq!(
                bounded.is_some(),
                naive.is_some(),
                "n = {n}, f = {f}"
            );
            if let (Some(a), Some(b)) = (bounded, naive) {
                assert_eq!(a, b, "inverses are unique: n = {n}, f = {f}");
            }
        }
    }
}

#[test]
fn random_unit_sampler_produces_invertible_units() {
    for n in [4, 8, 12, 24] {
        let ring = ring(n);
        let mut rng = ChaCha8Rng::seed_from_u64(7 * n);
        for _ in 0..500 {
            let f = oracle::random_unit_polynomial(&ring, 2, 3, &mut rng);
            assert!(is_unit_poly(&f), "n = {n}, f = {f}");
            let certificate = invert_unit(&f).unwrap();
            assert!(certificate.verify());
            assert!(certificate.nilpotency_index() < ring.max_exponent());
        }
    }
}

#[test]
fn random_nilpotent_sampler_produces_nilpotents() {
    for n in [4, 8, 12, 24] {
        let ring = ring(n);
        let mut rng = ChaCha8Rng::seed_from_u64(n);
        for _ in 0..500 {
            let g = oracle::random_nilpotent_polynomial(&ring, 2, 3, &mut rng);
            let k = nilpotency_index(&g).expect("all coefficients are nilpotent");
            assert!(g.pow(k + 1).is_zero());
            assert!(g.pow(ring.max_exponent()).is_zero());
        }
    }
}

#[test]
fn enumeration_size_matches_count_formula() {
    for (n, vars, degree) in [(2, 2, 2), (3, 1, 3), (5, 1, 2), (1, 3, 4), (4, 2, 1)] {
        let ring = ring(n);
        let actual = enumerate_polynomials(&ring, vars, degree, 1_000_000)
            .unwrap()
            .count() as u128;
        assert_eq!(
            polynomial_count(n, vars, degree),
            Some(actual),
            "n = {n}, vars = {vars}, degree = {degree}"
        );
    }
}

#[test]
fn zero_is_only_invertible_in_the_zero_ring() {
    let trivial = ring(1);
    let zero = Polynomial::zero(&trivial, 2);
    assert!(is_unit_poly(&zero));
    let certificate = invert_unit(&zero).unwrap();
    assert!(certificate.inverse().is_zero());
    assert_eq!(certificate.nilpotency_index(), 0);

    let zero = Polynomial::zero(&ring(8), 1);
    assert!(oracle::find_inverse_bounded(&zero, 4).is_none());
}
