//! Units of `Z_n[x1..xm]`: recognition, certified inversion, involutions,
//! and homomorphisms into smaller coefficient rings.
//!
//! A polynomial is a unit exactly when its constant term is a unit of `Z_n`
//! and every other coefficient is nilpotent. Writing such an `f` as `u + g`
//! with `u` the constant term and `g` the nilpotent part, the inverse is the
//! finite geometric series
//!
//! ```text
//! f^-1 = u^-1 * (1 - g*u^-1 + (g*u^-1)^2 - ... +- (g*u^-1)^k)
//! ```
//!
//! truncated at the nilpotency index `k` of `g` (the largest power of `g`
//! that is nonzero). [`invert_unit`] returns a [`UnitCertificate`] carrying
//! `f`, the inverse, and `k`; the product `f * f^-1 = 1` is re-verified when
//! the certificate is built, so a certificate cannot exist for a non-unit.

use core::fmt;

use crate::modring::{is_prime, Residue, RingSpec};
use crate::polyring::{Monomial, Polynomial};

/// Why a polynomial is not a unit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NonUnitError {
    /// The constant term is not invertible in the coefficient ring.
    ConstantTermNotUnit { constant: u64, modulus: u64 },
    /// A non-constant coefficient is not nilpotent. Reported for the
    /// graded-lex smallest offending monomial.
    CoefficientNotNilpotent {
        coefficient: u64,
        monomial: Monomial,
        modulus: u64,
    },
}

impl fmt::Display for NonUnitError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NonUnitError::ConstantTermNotUnit { constant, modulus } => {
                write!(f, "constant term {constant} is not a unit mod {modulus}")
            }
            NonUnitError::CoefficientNotNilpotent {
                coefficient,
                monomial,
                modulus,
            } => write!(
                f,
                "coefficient {coefficient} of {monomial} is not nilpotent mod {modulus}"
            ),
        }
    }
}

/// A non-nilpotent coefficient found where a nilpotent polynomial was
/// required; reported for the graded-lex smallest offending monomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NonNilpotentError {
    pub coefficient: u64,
    pub monomial: Monomial,
    pub modulus: u64,
}

impl fmt::Display for NonNilpotentError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "coefficient {} of {} is not nilpotent mod {}",
            self.coefficient, self.monomial, self.modulus
        )
    }
}

impl From<NonNilpotentError> for NonUnitError {
    fn from(e: NonNilpotentError) -> Self {
        NonUnitError::CoefficientNotNilpotent {
            coefficient: e.coefficient,
            monomial: e.monomial,
            modulus: e.modulus,
        }
    }
}

fn classify_unit(f: &Polynomial) -> Result<(), NonUnitError> {
    let ring = f.ring();
    let constant = f.constant_coefficient();
    if !ring.is_unit(constant) {
        return Err(NonUnitError::ConstantTermNotUnit {
            constant: constant.value(),
            modulus: ring.modulus(),
        });
    }
    for (monomial, coefficient) in f.terms() {
        if !monomial.is_constant() && !ring.is_nilpotent(coefficient) {
            return Err(NonUnitError::CoefficientNotNilpotent {
                coefficient: coefficient.value(),
                monomial: monomial.clone(),
                modulus: ring.modulus(),
            });
        }
    }
    Ok(())
}

/// Whether `f` is a unit: unit constant term, all other coefficients
/// nilpotent. In `Z_1[x..]` the zero polynomial is the unit 1 = 0.
pub fn is_unit_poly(f: &Polynomial) -> bool {
    classify_unit(f).is_ok()
}

/// `f` minus its constant term.
pub fn nilpotent_part(f: &Polynomial) -> Polynomial {
    let constant = Polynomial::constant(f.ring(), f.vars(), f.constant_coefficient().value());
    f - &constant
}

/// The nilpotency index of a nilpotent polynomial `g`: the largest `k` with
/// `g^k != 0` (so `g^(k+1) = 0`), and 0 for `g = 0`.
///
/// Errors if some coefficient of `g` is not nilpotent. For nilpotent `g` the
/// index is below the ring's `max_exponent`, which bounds the loop; that
/// bound failing would be an internal arithmetic bug and panics.
pub fn nilpotency_index(g: &Polynomial) -> Result<u32, NonNilpotentError> {
    let ring = g.ring();
    for (monomial, coefficient) in g.terms() {
        if !ring.is_nilpotent(coefficient) {
            return Err(NonNilpotentError {
                coefficient: coefficient.value(),
                monomial: monomial.clone(),
                modulus: ring.modulus(),
            });
        }
    }
    if g.is_zero() {
        return Ok(0);
    }
    let mut power = g.clone();
    let mut k = 1;
    loop {
        let next = &power * g;
        if next.is_zero() {
            return Ok(k);
        }
        power = next;
        k += 1;
        assert!(
            k < ring.max_exponent(),
            "nilpotency index reached the max_exponent bound"
        );
    }
}

/// A verified inverse: `polynomial() * inverse() = 1` holds by construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnitCertificate {
    polynomial: Polynomial,
    inverse: Polynomial,
    nilpotency_index: u32,
}

impl UnitCertificate {
    pub fn polynomial(&self) -> &Polynomial {
        &self.polynomial
    }

    pub fn inverse(&self) -> &Polynomial {
        &self.inverse
    }

    /// The nilpotency index of the nilpotent part of the inverted
    /// polynomial, i.e. the truncation point of the geometric series.
    pub fn nilpotency_index(&self) -> u32 {
        self.nilpotency_index
    }

    /// Recomputes the defining product; true unless the certificate was
    /// corrupted after construction.
    pub fn verify(&self) -> bool {
        let one = Polynomial::one(self.polynomial.ring(), self.polynomial.vars());
        &self.polynomial * &self.inverse == one
    }
}

/// Inverts a unit via the geometric series of its nilpotent part, returning
/// a certificate with the series truncation point.
pub fn invert_unit(f: &Polynomial) -> Result<UnitCertificate, NonUnitError> {
    classify_unit(f)?;
    let ring = f.ring();
    let vars = f.vars();
    let constant_inverse = ring
        .inverse(f.constant_coefficient())
        .expect("constant term verified to be a unit");
    let g = nilpotent_part(f);
    let k = nilpotency_index(&g).expect("non-constant coefficients verified nilpotent");
    // Alternating sum over powers of t = g * u^-1, truncated at t^(k+1) = 0.
    let t = &g * constant_inverse;
    let mut series = Polynomial::one(ring, vars);
    let mut power = Polynomial::one(ring, vars);
    for i in 1..=k {
        power = &power * &t;
        if i % 2 == 1 {
            series = &series - &power;
        } else {
            series = &series + &power;
        }
    }
    let inverse = &series * constant_inverse;
    let certificate = UnitCertificate {
        polynomial: f.clone(),
        inverse,
        nilpotency_index: k,
    };
    assert!(
        certificate.verify(),
        "geometric series inversion failed to verify"
    );
    Ok(certificate)
}

/// Whether `f * f = 1`.
pub fn is_involution(f: &Polynomial) -> bool {
    f * f == Polynomial::one(f.ring(), f.vars())
}

/// The constant-term evaluation `Z_n[x1..xm] -> Z_n`, i.e. `f(0, ..., 0)`.
/// A ring homomorphism.
pub fn constant_term_hom(f: &Polynomial) -> Residue {
    f.constant_coefficient()
}

/// Failure modes of [`reduce_mod_prime`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PrimeReductionError {
    NotPrime(u64),
    NotADivisor { p: u64, n: u64 },
}

impl fmt::Display for PrimeReductionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PrimeReductionError::NotPrime(p) => write!(f, "{p} is not prime"),
            PrimeReductionError::NotADivisor { p, n } => {
                write!(f, "{p} does not divide the modulus {n}")
            }
        }
    }
}

/// The coefficientwise reduction `Z_n[x1..xm] -> Z_p[x1..xm]` for a prime
/// `p` dividing `n`. A ring homomorphism; units map to units, and since
/// `Z_p` has no nonzero nilpotents, units map to nonzero constants.
pub fn reduce_mod_prime(f: &Polynomial, p: u64) -> Result<Polynomial, PrimeReductionError> {
    if !is_prime(p) {
        return Err(PrimeReductionError::NotPrime(p));
    }
    let n = f.ring().modulus();
    if !n.is_multiple_of(p) {
        return Err(PrimeReductionError::NotADivisor { p, n });
    }
    let target = RingSpec::new(p).expect("primes are valid moduli");
    Ok(Polynomial::from_terms(
        &target,
        f.vars(),
        f.terms().map(|(m, c)| (m.clone(), c.value() % p)),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn ring(n: u64) -> RingSpec {
        RingSpec::new(n).unwrap()
    }

    fn poly(text: &str, n: u64, vars: usize) -> Polynomial {
        Polynomial::parse(text, &ring(n), vars).unwrap()
    }

    #[test]
    fn recognizes_units_mod_8() {
        assert!(is_unit_poly(&poly("2*x1 + 1", 8, 1)));
        assert!(is_unit_poly(&poly("4*x1^2 + 6*x1 + 3", 8, 1)));
        assert!(!is_unit_poly(&poly("x1 + 1", 8, 1)), "1 is not nilpotent mod 8");
        assert!(!is_unit_poly(&poly("2*x1 + 2", 8, 1)), "constant 2 is not a unit");
        assert!(!is_unit_poly(&poly("2*x1", 8, 1)));
    }

    #[test]
    fn recognizes_units_mod_12() {
        assert!(is_unit_poly(&poly("6*x1*x2 + 7", 12, 2)));
        assert!(!is_unit_poly(&poly("4*x1 + 1", 12, 1)), "4 is not nilpotent mod 12");
    }

    #[test]
    fn unit_errors_name_the_first_offender() {
        let err = invert_unit(&poly("3*x1 + 1", 8, 1)).unwrap_err();
        assert_eq!(err.to_string(), "coefficient 3 of x1 is not nilpotent mod 8");
        let err = invert_unit(&poly("2*x1 + 4", 8, 1)).unwrap_err();
        assert_eq!(err.to_string(), "constant term 4 is not a unit mod 8");
        let err = invert_unit(&poly("4*x1^2 + 3*x1 + 1", 12, 1)).unwrap_err();
        assert_eq!(
            err.to_string(),
            "coefficient 3 of x1 is not nilpotent mod 12",
            "the graded-lex smallest offender is reported"
        );
    }

    #[test]
    fn zero_polynomial_is_unit_only_mod_1() {
        assert!(is_unit_poly(&Polynomial::zero(&ring(1), 3)));
        assert!(!is_unit_poly(&Polynomial::zero(&ring(8), 1)));
    }

    #[test]
    fn nilpotent_part_strips_the_constant() {
        let f = poly("4*x1^2 + 2*x1 + 3", 8, 1);
        assert_eq!(nilpotent_part(&f), poly("4*x1^2 + 2*x1", 8, 1));
        assert!(nilpotent_part(&poly("5", 8, 1)).is_zero());
    }

    #[test]
    fn nilpotency_indices() {
        assert_eq!(nilpotency_index(&poly("2*x1", 8, 1)), Ok(2), "4*x1^2 != 0, 8*x1^3 = 0");
        assert_eq!(nilpotency_index(&poly("4*x1", 8, 1)), Ok(1));
        assert_eq!(nilpotency_index(&poly("6*x1", 12, 1)), Ok(1));
        assert_eq!(nilpotency_index(&Polynomial::zero(&ring(8), 1)), Ok(0));
        assert_eq!(nilpotency_index(&Polynomial::zero(&ring(1), 2)), Ok(0));
        let err = nilpotency_index(&poly("2*x1 + x2", 8, 2)).unwrap_err();
        assert_eq!(err.to_string(), "coefficient 1 of x2 is not nilpotent mod 8");
    }

    #[test]
    fn inverts_the_mod_8_counterexample() {
        let cert = invert_unit(&poly("2*x1 + 1", 8, 1)).unwrap();
        assert_eq!(cert.inverse().to_string(), "4*x1^2 + 6*x1 + 1 (mod 8)");
        assert_eq!(cert.nilpotency_index(), 2);
        assert!(cert.verify());
    }

    #[test]
    fn inverts_the_mod_24_counterexample() {
        let cert = invert_unit(&poly("6*x1 + 1", 24, 1)).unwrap();
        assert_eq!(cert.inverse().to_string(), "12*x1^2 + 18*x1 + 1 (mod 24)");
        assert_eq!(cert.nilpotency_index(), 2);
    }

    #[test]
    fn inverts_constants_with_zero_index() {
        let cert = invert_unit(&poly("5", 12, 1)).unwrap();
        assert_eq!(cert.inverse().to_string(), "5 (mod 12)");
        assert_eq!(cert.nilpotency_index(), 0);
    }

    #[test]
    fn inverts_multivariate_units() {
        let f = poly("6*x1*x2 + 6*x1 + 6*x2^2 + 5", 12, 2);
        let cert = invert_unit(&f).unwrap();
        assert_eq!(&f * cert.inverse(), Polynomial::one(&ring(12), 2));
    }

    #[test]
    fn involutions_mod_8() {
        assert!(is_involution(&poly("4*x1 + 1", 8, 1)));
        assert!(is_involution(&poly("4*x1^2 + 4*x1 + 7", 8, 1)));
        assert!(!is_involution(&poly("2*x1 + 1", 8, 1)));
        assert!(!is_involution(&poly("2", 8, 1)), "non-units are never involutions");
    }

    #[test]
    fn constant_term_hom_is_evaluation_at_zero() {
        let f = poly("4*x1^2 + 2*x1 + 3", 8, 1);
        assert_eq!(constant_term_hom(&f), ring(8).residue(3));
        assert_eq!(constant_term_hom(&Polynomial::zero(&ring(8), 1)), ring(8).zero());
    }

    #[test]
    fn reduce_mod_prime_reduces_coefficients() {
        let f = poly("4*x1^2 + 2*x1 + 3", 12, 1);
        let reduced = reduce_mod_prime(&f, 3).unwrap();
        assert_eq!(reduced, poly("x1^2 + 2*x1", 3, 1));
        let reduced = reduce_mod_prime(&f, 2).unwrap();
        assert_eq!(reduced, poly("1", 2, 1));
    }

    #[test]
    fn reduce_mod_prime_rejects_bad_primes() {
        let f = poly("x1", 12, 1);
        assert_eq!(reduce_mod_prime(&f, 4), Err(PrimeReductionError::NotPrime(4)));
        assert_eq!(
            reduce_mod_prime(&f, 5),
            Err(PrimeReductionError::NotADivisor { p: 5, n: 12 })
        );
    }

    #[test]
    fn certificate_survives_round_trip() {
        let f = poly("6*x1^2 + 6*x1 + 11", 12, 1);
        let cert = invert_unit(&f).unwrap();
        let back = invert_unit(cert.inverse()).unwrap();
        assert_eq!(back.inverse(), &f, "inverting the inverse returns f");
    }
}
