//! Acceptance suite: one test per acceptance criterion, each printing a
//! single pass/fail line (run with `--nocapture` to see them) and each
//! holding a runtime limit pinned next to the test.
//!
//! Criteria 1 and 3 drive the compiled binary; the rest exercise the
//! library against the independent oracles.

use std::panic::UnwindSafe;
use std::process::Output;
use std::time::{Duration, Instant};

use diag12::render::{ReportDoc, SurveyDoc, WitnessDoc};
use diag12_core::diagonal::{
    check_poly_enumeration, check_poly_theorem, check_zn_involution, check_zn_table,
    check_zn_theorem, DEFAULT_TABLE_BUDGET,
};
use diag12_core::modring::RingSpec;
use diag12_core::oracle;
use diag12_core::polyring::{enumerate_polynomials, Polynomial, DEFAULT_ENUMERATION_BUDGET};
use diag12_core::units::{constant_term_hom, invert_unit, is_unit_poly, reduce_mod_prime};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn criterion<F>(number: u32, name: &str, limit: Duration, body: F)
where
    F: FnOnce() + UnwindSafe,
{
    let start = Instant::now();
    let outcome = std::panic::catch_unwind(body);
    let elapsed = start.elapsed();
    let passed = outcome.is_ok() && elapsed <= limit;
    println!(
        "acceptance {number} ({name}): {} in {elapsed:.2?} (limit {limit:?})",
        if passed { "PASS" } else { "FAIL" }
    );
    if let Err(panic) = outcome {
        std::panic::resume_unwind(panic);
    }
    assert!(
        elapsed <= limit,
        "criterion {number} exceeded its runtime limit: {elapsed:?} > {limit:?}"
    );
}

fn run_binary(args: &[&str]) -> Output {
    let output = std::process::Command::new(env!("CARGO_BIN_EXE_diag12"))
        .args(args)
        .output()
        .expect("the diag12 binary runs");
    assert!(
        output.status.code().is_some(),
        "the binary exited abnormally"
    );
    output
}

fn parse_poly(text: &str, ring: &RingSpec, vars: usize) -> Polynomial {
    let body = text
        .strip_suffix(&format!(" (mod {})", ring.modulus()))
        .unwrap_or(text);
    Polynomial::parse(body, ring, vars).expect("witness text parses back")
}

/// Criterion 1: for moduli 8 and 24 the tool exhibits a unit of total
/// degree at most 2 whose square is not 1, and the exhibited square is
/// exact.
#[test]
fn acceptance_1_exhibits_non_involutive_units_at_8_and_24() {
    criterion(
        1,
        "non-involutive units at moduli 8 and 24",
        Duration::from_secs(5),
        || {
            let expected = [
                (8u64, "2*x1 + 1 (mod 8)", "4*x1^2 + 4*x1 + 1 (mod 8)"),
                (24, "6*x1 + 1 (mod 24)", "12*x1^2 + 12*x1 + 1 (mod 24)"),
            ];
            for (n, unit_text, square_text) in expected {
                let n_text = n.to_string();
                let output = run_binary(&[
                    "check", &n_text, "--poly", "--method", "enumerate", "--json",
                ]);
                assert_eq!(output.status.code(), Some(1), "modulus {n}");
                let doc: ReportDoc =
                    serde_json::from_slice(&output.stdout).expect("report JSON parses");
                assert!(!doc.verdict, "modulus {n}");
                assert_eq!(doc.method, "ENUMERATION");
                let Some(WitnessDoc::Unit { unit, square }) = doc.witness else {
                    panic!("modulus {n}: expected a unit witness");
                };
                assert_eq!(unit.as_str(), Some(unit_text));
                assert_eq!(square.as_str(), Some(square_text));

                let ring = RingSpec::new(n).unwrap();
                let u = parse_poly(unit_text, &ring, 1);
                assert!(u.total_degree() <= diag12_core::polyring::Degree::Finite(2));
                assert!(is_unit_poly(&u), "modulus {n}: witness must be a unit");
                let u_squared = &u * &u;
                assert_ne!(u_squared, Polynomial::one(&ring, 1), "modulus {n}");
                assert_eq!(u_squared, parse_poly(square_text, &ring, 1));
            }
        },
    );
}

/// Criterion 2: exhaustive enumeration up to total degree 2 confirms the
/// property for every n dividing 12 with one and with two variables, and
/// agrees with the divisibility criterion.
#[test]
fn acceptance_2_enumeration_confirms_divisors_of_12() {
    criterion(
        2,
        "degree-2 enumeration for n | 12, one and two variables",
        Duration::from_secs(60),
        || {
            for n in [1u64, 2, 3, 4, 6, 12] {
                let ring = RingSpec::new(n).unwrap();
                for vars in [1usize, 2] {
                    let report =
                        check_poly_enumeration(&ring, vars, 2, DEFAULT_ENUMERATION_BUDGET)
                            .expect("within the enumeration budget");
                    assert!(report.verdict(), "n = {n}, vars = {vars}");
                    assert!(report.verify(), "n = {n}, vars = {vars}");
                    let theorem = check_poly_theorem(&ring, vars);
                    assert_eq!(report.verdict(), theorem.verdict(), "n = {n}, vars = {vars}");
                }
            }
        },
    );
}

/// Criterion 3: surveying all moduli up to 200 yields exactly the divisors
/// of 24 as positives.
#[test]
fn acceptance_3_survey_to_200_finds_the_divisors_of_24() {
    criterion(
        3,
        "survey of Z_n up to 200",
        Duration::from_secs(5),
        || {
            let output = run_binary(&["survey", "--max-n", "200", "--json"]);
            assert_eq!(output.status.code(), Some(0));
            let doc: SurveyDoc =
                serde_json::from_slice(&output.stdout).expect("survey JSON parses");
            assert_eq!(doc.positives, vec![1, 2, 3, 4, 6, 8, 12, 24]);
            assert_eq!(doc.reports.len(), 200);
            for report in &doc.reports {
                assert_eq!(report.verdict, 24 % report.ring.n == 0, "n = {}", report.ring.n);
            }
        },
    );
}

/// Criterion 4: over one variable, the unit decision procedure agrees with
/// a complete bounded inverse search on every polynomial of total degree
/// at most 2, for each modulus in {2, 3, 4, 6, 8, 12, 24}.
#[test]
fn acceptance_4_unit_decisions_match_complete_inverse_search() {
    criterion(
        4,
        "unit decisions vs complete inverse search, degree <= 2",
        Duration::from_secs(120),
        || {
            let expected_bounds = [(2u64, 2u32), (3, 2), (4, 4), (6, 2), (8, 6), (12, 4), (24, 6)];
            for (n, expected_bound) in expected_bounds {
                let ring = RingSpec::new(n).unwrap();
                let bound = oracle::inverse_search_degree_bound(&ring);
                assert_eq!(bound, expected_bound, "n = {n}");
                let polynomials = enumerate_polynomials(&ring, 1, 2, DEFAULT_ENUMERATION_BUDGET)
                    .expect("within the enumeration budget");
                for f in polynomials {
                    let claimed = is_unit_poly(&f);
                    let searched = oracle::find_inverse_bounded(&f, bound);
                    assert_eq!(claimed, searched.is_some(), "n = {n}, f = {f}");
                    if let Some(inverse) = searched {
                        let certificate = invert_unit(&f).expect("decider says unit");
                        assert_eq!(certificate.inverse(), &inverse, "n = {n}, f = {f}");
                    }
                }
            }
        },
    );
}

/// Criterion 5: ten thousand random units per modulus in {4, 8, 12, 24}
/// invert exactly, with certified nilpotency index below the largest prime
/// exponent of the modulus.
#[test]
fn acceptance_5_random_units_invert_exactly() {
    criterion(
        5,
        "random unit inversion, 10^4 units per modulus",
        Duration::from_secs(30),
        || {
            for n in [4u64, 8, 12, 24] {
                let ring = RingSpec::new(n).unwrap();
                let mut rng = ChaCha8Rng::seed_from_u64(1000 + n);
                for _ in 0..10_000 {
                    let f = oracle::random_unit_polynomial(&ring, 2, 3, &mut rng);
                    let certificate = invert_unit(&f).expect("sampled polynomials are units");
                    assert!(certificate.verify(), "n = {n}, f = {f}");
                    let product = certificate.polynomial() * certificate.inverse();
                    assert_eq!(product, Polynomial::one(&ring, 2), "n = {n}, f = {f}");
                    assert!(
                        certificate.nilpotency_index() < ring.max_exponent(),
                        "n = {n}, f = {f}"
                    );
                }
            }
        },
    );
}

/// Criterion 6: for every modulus up to 200, the table scan, the
/// involution scan, and the divisibility criterion give the same verdict,
/// and the verdict matches whether the unit group has exponent at most 2.
#[test]
fn acceptance_6_residue_ring_methods_agree_to_200() {
    criterion(
        6,
        "table, involution, and divisibility verdicts to 200",
        Duration::from_secs(5),
        || {
            for n in 1..=200u64 {
                let ring = RingSpec::new(n).unwrap();
                let table = check_zn_table(&ring, DEFAULT_TABLE_BUDGET).unwrap();
                let involution = check_zn_involution(&ring, DEFAULT_TABLE_BUDGET).unwrap();
                let theorem = check_zn_theorem(&ring);
                assert_eq!(table.verdict(), involution.verdict(), "n = {n}");
                assert_eq!(table.verdict(), theorem.verdict(), "n = {n}");
                assert!(table.verify() && involution.verify() && theorem.verify(), "n = {n}");
                assert_eq!(
                    table.verdict(),
                    ring.unit_group_exponent() <= 2,
                    "n = {n}"
                );
            }
        },
    );
}

/// Criterion 7: the constant-term map and reduction modulo each prime
/// divisor respect addition and multiplication on random pairs, and carry
/// units to units.
#[test]
fn acceptance_7_coefficient_maps_are_ring_homomorphisms() {
    criterion(
        7,
        "homomorphism laws on random polynomial pairs",
        Duration::from_secs(10),
        || {
            for n in [4u64, 8, 12, 24] {
                let ring = RingSpec::new(n).unwrap();
                let mut rng = ChaCha8Rng::seed_from_u64(7000 + n);
                for _ in 0..1_000 {
                    let f = oracle::random_polynomial(&ring, 2, 3, &mut rng);
                    let g = oracle::random_polynomial(&ring, 2, 3, &mut rng);
                    let sum = &f + &g;
                    let product = &f * &g;
                    assert_eq!(
                        constant_term_hom(&sum),
                        constant_term_hom(&f) + constant_term_hom(&g)
                    );
                    assert_eq!(
                        constant_term_hom(&product),
                        constant_term_hom(&f) * constant_term_hom(&g)
                    );
                    for &(p, _) in ring.factorization() {
                        let fp = reduce_mod_prime(&f, p).unwrap();
                        let gp = reduce_mod_prime(&g, p).unwrap();
                        assert_eq!(reduce_mod_prime(&sum, p).unwrap(), &fp + &gp);
                        assert_eq!(reduce_mod_prime(&product, p).unwrap(), &fp * &gp);
                    }
                    let u = oracle::random_unit_polynomial(&ring, 2, 3, &mut rng);
                    for &(p, _) in ring.factorization() {
                        let up = reduce_mod_prime(&u, p).unwrap();
                        assert!(up.total_degree() <= diag12_core::polyring::Degree::Finite(0));
                        assert!(is_unit_poly(&up), "units reduce to units mod {p}");
                    }
                }
            }
        },
    );
}
