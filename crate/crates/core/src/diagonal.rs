//! Deciders for the diagonal property of multiplication tables.
//!
//! A ring's multiplication table has the *diagonal property* when 1 appears
//! only on the diagonal: `a * b = 1` implies `a = b`. Equivalently every
//! unit is an involution (`u * u = 1`); a failing pair `(a, a^-1)` is
//! exactly a non-involutive unit and its inverse.
//!
//! For `Z_n` the property holds iff `n` divides 24. For the polynomial
//! rings `Z_n[x1..xm]` (any `m >= 1`) it holds iff `n` divides 12: the
//! moduli 8 and 24 lose the property when variables arrive, witnessed by
//! the units `2*x1 + 1 (mod 8)` and `6*x1 + 1 (mod 24)`, whose squares are
//! not 1. Each decider returns a [`DiagonalReport`] whose witness is
//! verified at construction time, so downstream consumers can trust a
//! negative verdict without re-deriving it.

use alloc::vec::Vec;
use core::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::modring::{mul_mod, RingSpec};
use crate::polyring::{
    enumerate_polynomials, monomials_up_to, EnumerationBudgetError, Monomial, Polynomial,
};
use crate::units::{is_involution, is_unit_poly};

/// Default ceiling on the modulus for full-table and unit scans over `Z_n`.
pub const DEFAULT_TABLE_BUDGET: u64 = 100_000;

/// Refusal to scan `Z_n`: the modulus exceeds the table budget.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TableBudgetError {
    pub n: u64,
    pub budget: u64,
}

impl fmt::Display for TableBudgetError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "table scan refused: modulus {} exceeds the budget of {}",
            self.n, self.budget
        )
    }
}

/// How a verdict was reached.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DecisionMethod {
    /// Full `n x n` multiplication table scan of `Z_n`.
    TableScan,
    /// Scan of the units of `Z_n` for a non-involution.
    InvolutionScan,
    /// The divisor criterion: `n | 24` for `Z_n`, `n | 12` for `Z_n[x..]`.
    Theorem,
    /// Exhaustive bounded-degree enumeration of `Z_n[x..]`.
    Enumeration,
}

impl DecisionMethod {
    pub fn as_str(&self) -> &'static str {
        match self {
            DecisionMethod::TableScan => "TABLE_SCAN",
            DecisionMethod::InvolutionScan => "INVOLUTION_SCAN",
            DecisionMethod::Theorem => "THEOREM",
            DecisionMethod::Enumeration => "ENUMERATION",
        }
    }
}

impl fmt::Display for DecisionMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// The ring a report speaks about: `Z_n` when `vars` is `None`, otherwise
/// `Z_n[x1..x(vars)]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RingDescription {
    pub n: u64,
    pub vars: Option<usize>,
}

impl fmt::Display for RingDescription {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Z_{}", self.n)?;
        if let Some(vars) = self.vars {
            write!(f, "[")?;
            for i in 0..vars {
                if i > 0 {
                    write!(f, ",")?;
                }
                write!(f, "x{}", i + 1)?;
            }
            write!(f, "]")?;
        }
        Ok(())
    }
}

/// Evidence that 1 appears off the diagonal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// `a * b = 1` in `Z_n` with `a != b`.
    ResiduePair { a: u64, b: u64 },
    /// A unit of `Z_n` whose square is not 1.
    NonInvolutiveResidue { unit: u64 },
    /// `a * b = 1` in `Z_n[x..]` with `a != b`.
    PolynomialPair { a: Polynomial, b: Polynomial },
    /// A unit of `Z_n[x..]` whose square is not 1.
    NonInvolutiveUnit { unit: Polynomial },
}

impl Witness {
    /// Recomputes the defining property of the witness against the given
    /// ring description.
    pub fn verify(&self, description: &RingDescription) -> bool {
        let Ok(ring) = RingSpec::new(description.n) else {
            return false;
        };
        match self {
            Witness::ResiduePair { a, b } => {
                description.vars.is_none()
                    && *a < description.n.max(1)
                    && *b < description.n.max(1)
                    && a != b
                    && mul_mod(*a, *b, description.n) == 1 % description.n
            }
            Witness::NonInvolutiveResidue { unit } => {
                let u = ring.residue(*unit);
                description.vars.is_none()
                    && *unit < description.n
                    && ring.is_unit(u)
                    && u * u != ring.one()
            }
            Witness::PolynomialPair { a, b } => {
                description.vars == Some(a.vars())
                    && a.ring() == &ring
                    && b.ring() == &ring
                    && b.vars() == a.vars()
                    && a != b
                    && a * b == Polynomial::one(&ring, a.vars())
            }
            Witness::NonInvolutiveUnit { unit } => {
                description.vars == Some(unit.vars())
                    && unit.ring() == &ring
                    && is_unit_poly(unit)
                    && !is_involution(unit)
            }
        }
    }
}

/// Outcome of a diagonal-property decision.
///
/// Invariants, enforced at construction: a negative verdict carries a
/// witness that verifies against the ring description; a positive verdict
/// carries none; `search_bound` is present exactly for the enumeration
/// method, recording that a positive verdict only covers total degrees up
/// to that bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagonalReport {
    ring: RingDescription,
    verdict: bool,
    method: DecisionMethod,
    witness: Option<Witness>,
    search_bound: Option<u32>,
}

impl DiagonalReport {
    fn new(
        ring: RingDescription,
        verdict: bool,
        method: DecisionMethod,
        witness: Option<Witness>,
        search_bound: Option<u32>,
    ) -> Self {
        let report = DiagonalReport {
            ring,
            verdict,
            method,
            witness,
            search_bound,
        };
        assert!(report.verify(), "constructed an inconsistent report");
        report
    }

    pub fn ring(&self) -> &RingDescription {
        &self.ring
    }

    /// True when 1 appears only on the diagonal.
    pub fn verdict(&self) -> bool {
        self.verdict
    }

    pub fn method(&self) -> DecisionMethod {
        self.method
    }

    pub fn witness(&self) -> Option<&Witness> {
        self.witness.as_ref()
    }

    /// For the enumeration method, the total-degree bound the search
    /// covered; `None` for the exact methods.
    pub fn search_bound(&self) -> Option<u32> {
        self.search_bound
    }

    /// Rechecks the structural invariants and the witness arithmetic.
    pub fn verify(&self) -> bool {
        let witness_ok = match (self.verdict, &self.witness) {
            (true, None) => true,
            (true, Some(_)) => false,
            (false, None) => false,
            (false, Some(w)) => w.verify(&self.ring),
        };
        let bound_ok = (self.method == DecisionMethod::Enumeration) == self.search_bound.is_some();
        witness_ok && bound_ok
    }
}

fn check_table_budget(ring: &RingSpec, budget: u64) -> Result<(), TableBudgetError> {
    if ring.modulus() > budget {
        Err(TableBudgetError {
            n: ring.modulus(),
            budget,
        })
    } else {
        Ok(())
    }
}

/// Decides the diagonal property of `Z_n` by scanning the full `n x n`
/// multiplication table. The witness, if any, is the row-major first
/// off-diagonal pair multiplying to 1.
pub fn check_zn_table(ring: &RingSpec, budget: u64) -> Result<DiagonalReport, TableBudgetError> {
    check_table_budget(ring, budget)?;
    let n = ring.modulus();
    let description = RingDescription { n, vars: None };
    let one = 1 % n;
    for a in 0..n {
        for b in 0..n {
            if a != b && mul_mod(a, b, n) == one {
                return Ok(DiagonalReport::new(
                    description,
                    false,
                    DecisionMethod::TableScan,
                    Some(Witness::ResiduePair { a, b }),
                    None,
                ));
            }
        }
    }
    Ok(DiagonalReport::new(
        description,
        true,
        DecisionMethod::TableScan,
        None,
        None,
    ))
}

/// Decides the diagonal property of `Z_n` by scanning its units for a
/// non-involution. The witness, if any, is the smallest such unit.
pub fn check_zn_involution(
    ring: &RingSpec,
    budget: u64,
) -> Result<DiagonalReport, TableBudgetError> {
    check_table_budget(ring, budget)?;
    let description = RingDescription {
        n: ring.modulus(),
        vars: None,
    };
    let one = ring.one();
    for u in ring.units() {
        if u * u != one {
            return Ok(DiagonalReport::new(
                description,
                false,
                DecisionMethod::InvolutionScan,
                Some(Witness::NonInvolutiveResidue { unit: u.value() }),
                None,
            ));
        }
    }
    Ok(DiagonalReport::new(
        description,
        true,
        DecisionMethod::InvolutionScan,
        None,
        None,
    ))
}

/// The smallest unit of `Z_n` whose square is not 1. Exists iff `n` does
/// not divide 24.
fn smallest_non_involutive_unit(ring: &RingSpec) -> Option<u64> {
    let one = ring.one();
    ring.units().find(|&u| u * u != one).map(|u| u.value())
}

/// Decides the diagonal property of `Z_n` by the divisor criterion
/// `n | 24`. A negative verdict carries the smallest non-involutive unit
/// paired with its inverse.
pub fn check_zn_theorem(ring: &RingSpec) -> DiagonalReport {
    let n = ring.modulus();
    let description = RingDescription { n, vars: None };
    if 24 % n == 0 {
        return DiagonalReport::new(description, true, DecisionMethod::Theorem, None, None);
    }
    let a = smallest_non_involutive_unit(ring)
        .expect("a modulus not dividing 24 has a non-involutive unit");
    let b = ring
        .inverse(ring.residue(a))
        .expect("non-involutive units are units")
        .value();
    DiagonalReport::new(
        description,
        false,
        DecisionMethod::Theorem,
        Some(Witness::ResiduePair { a, b }),
        None,
    )
}

/// Rejection reason for [`counterexample_unit`]: only the moduli 8 and 24
/// carry a canonical counterexample.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct NoCounterexampleError {
    pub n: u64,
}

impl fmt::Display for NoCounterexampleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "no counterexample unit is defined for modulus {} (known moduli: 8 and 24)",
            self.n
        )
    }
}

/// The canonical non-involutive unit of `Z_n[x1..xm]` for the two moduli
/// that divide 24 but not 12: `2*x1 + 1` for `n = 8` and `6*x1 + 1` for
/// `n = 24`.
pub fn counterexample_unit(
    ring: &RingSpec,
    vars: usize,
) -> Result<Polynomial, NoCounterexampleError> {
    let coefficient = match ring.modulus() {
        8 => 2,
        24 => 6,
        n => return Err(NoCounterexampleError { n }),
    };
    let unit = Polynomial::from_terms(
        ring,
        vars,
        [
            (Monomial::constant(vars), 1),
            (Monomial::variable(vars, 0), coefficient),
        ],
    );
    debug_assert!(is_unit_poly(&unit) && !is_involution(&unit));
    Ok(unit)
}

/// Decides the diagonal property of `Z_n[x1..x(vars)]` by the divisor
/// criterion `n | 12`. Negative verdicts carry a non-involutive unit: the
/// canonical counterexample for `n` in {8, 24}, otherwise the smallest
/// non-involutive constant unit.
pub fn check_poly_theorem(ring: &RingSpec, vars: usize) -> DiagonalReport {
    assert!(vars >= 1, "variable count must be positive");
    let n = ring.modulus();
    let description = RingDescription { n, vars: Some(vars) };
    if 12 % n == 0 {
        return DiagonalReport::new(description, true, DecisionMethod::Theorem, None, None);
    }
    let unit = match counterexample_unit(ring, vars) {
        Ok(unit) => unit,
        Err(_) => {
            // n divides neither 12 nor 24, so Z_n itself already has a
            // non-involutive unit and it stays one as a constant.
            let a = smallest_non_involutive_unit(ring)
                .expect("a modulus not dividing 24 has a non-involutive unit");
            Polynomial::constant(ring, vars, a)
        }
    };
    DiagonalReport::new(
        description,
        false,
        DecisionMethod::Theorem,
        Some(Witness::NonInvolutiveUnit { unit }),
        None,
    )
}

/// Decides the diagonal property of `Z_n[x1..x(vars)]` restricted to total
/// degree at most `degree_bound`, by exhaustively enumerating that space
/// and testing every unit for involution. The witness, if any, is the
/// first non-involutive unit in enumeration order. A positive verdict
/// certifies only the searched range, which the report records in
/// `search_bound`.
pub fn check_poly_enumeration(
    ring: &RingSpec,
    vars: usize,
    degree_bound: u32,
    budget: u64,
) -> Result<DiagonalReport, EnumerationBudgetError> {
    let description = RingDescription {
        n: ring.modulus(),
        vars: Some(vars),
    };
    for f in enumerate_polynomials(ring, vars, degree_bound, budget)? {
        if is_unit_poly(&f) && !is_involution(&f) {
            return Ok(DiagonalReport::new(
                description,
                false,
                DecisionMethod::Enumeration,
                Some(Witness::NonInvolutiveUnit { unit: f }),
                Some(degree_bound),
            ));
        }
    }
    Ok(DiagonalReport::new(
        description,
        true,
        DecisionMethod::Enumeration,
        None,
        Some(degree_bound),
    ))
}

/// Random units of `Z_n[x1..xm]` in the structured form `radical * h + r`
/// with `h` a random polynomial of bounded degree and `r` a random unit of
/// `Z_n`: for `n = 4` these are `2h +- 1`, for `n = 12` they are `6h + r`.
/// Every unit of those rings has this shape, and the stream is
/// deterministic in the seed.
///
/// # Panics
///
/// Panics if the modulus is not 4 or 12, the moduli whose units this form
/// describes.
#[derive(Debug, Clone)]
pub struct StructuredUnitGenerator {
    ring: RingSpec,
    vars: usize,
    monomials: Vec<Monomial>,
    unit_values: Vec<u64>,
    rng: ChaCha8Rng,
}

impl StructuredUnitGenerator {
    pub fn new(ring: &RingSpec, vars: usize, degree_bound: u32, seed: u64) -> Self {
        assert!(
            matches!(ring.modulus(), 4 | 12),
            "structured unit form is defined for moduli 4 and 12"
        );
        StructuredUnitGenerator {
            ring: ring.clone(),
            vars,
            monomials: monomials_up_to(vars, degree_bound),
            unit_values: ring.units().map(|u| u.value()).collect(),
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }
}

impl Iterator for StructuredUnitGenerator {
    type Item = Polynomial;

    /// Draws the constant unit `r` first, then one coefficient of `h` per
    /// monomial in ascending graded-lex order.
    fn next(&mut self) -> Option<Polynomial> {
        let n = self.ring.modulus();
        let radical = self.ring.radical();
        let r = self.unit_values[self.rng.gen_range(0..self.unit_values.len())];
        let mut terms = Vec::with_capacity(self.monomials.len());
        for monomial in &self.monomials {
            let h = self.rng.gen_range(0..n);
            let mut coefficient = mul_mod(radical, h, n);
            if monomial.is_constant() {
                coefficient = (coefficient + r) % n;
            }
            terms.push((monomial.clone(), coefficient));
        }
        Some(Polynomial::from_terms(&self.ring, self.vars, terms))
    }
}

/// Cross-checks that the diagonal property restricts from the polynomial
/// ring to its subring of constants: it must never hold for `Z_n[x..]`
/// (decided by the divisor criterion) while failing for `Z_n` (decided by
/// an independent table scan). Returns whether the implication holds.
pub fn subring_restriction_check(ring: &RingSpec, budget: u64) -> Result<bool, TableBudgetError> {
    let poly_verdict = 12 % ring.modulus() == 0;
    let zn_verdict = check_zn_table(ring, budget)?.verdict();
    Ok(!poly_verdict || zn_verdict)
}
