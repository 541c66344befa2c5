//! Sparse multivariate polynomials over `Z_n` in canonical form.
//!
//! A [`Polynomial`] is a finite map from [`Monomial`]s to nonzero canonical
//! residues; equality is exact equality of those term maps (plus modulus and
//! variable count). Monomials are ordered graded-lexicographically: total
//! degree first, ties broken lexicographically with `x1 > x2 > ...`. Term
//! iteration is ascending in that order; display is descending.
//!
//! The text format produced by `Display` and accepted by
//! [`Polynomial::parse`] looks like `4*x1^2 + 4*x1 + 1 (mod 8)`: terms in
//! descending graded-lex order joined by `+`, unit coefficients omitted on
//! non-constant monomials, first exponents omitted, and an optional modulus
//! trailer. There is no `-`; coefficients are canonical residues.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use crate::modring::{mul_mod, Residue, RingSpec};

/// A power product `x1^e1 * ... * xm^em`, stored as its exponent vector.
///
/// The vector length is the ambient variable count `m >= 1`; monomials of
/// different arity never meet in one polynomial and comparing them panics.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exponents: Vec<u32>,
}

impl Monomial {
    /// The constant monomial 1 in `m` variables.
    pub fn constant(vars: usize) -> Self {
        assert!(vars >= 1, "variable count must be positive");
        Monomial {
            exponents: vec![0; vars],
        }
    }

    /// The single variable `x(index+1)`: `index` is zero-based, so
    /// `variable(m, 0)` is `x1`.
    pub fn variable(vars: usize, index: usize) -> Self {
        let mut m = Monomial::constant(vars);
        assert!(index < vars, "variable index out of range");
        m.exponents[index] = 1;
        m
    }

    pub fn from_exponents(exponents: Vec<u32>) -> Self {
        assert!(!exponents.is_empty(), "variable count must be positive");
        Monomial { exponents }
    }

    pub fn vars(&self) -> usize {
        self.exponents.len()
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn total_degree(&self) -> u32 {
        let sum: u64 = self.exponents.iter().map(|&e| e as u64).sum();
        u32::try_from(sum).expect("total degree overflow")
    }

    pub fn is_constant(&self) -> bool {
        self.exponents.iter().all(|&e| e == 0)
    }

    /// The product monomial, i.e. componentwise exponent sum.
    pub fn mul(&self, other: &Monomial) -> Monomial {
        assert_eq!(self.vars(), other.vars(), "monomial arity mismatch");
        Monomial {
            exponents: self
                .exponents
                .iter()
                .zip(&other.exponents)
                .map(|(&a, &b)| a.checked_add(b).expect("exponent overflow"))
                .collect(),
        }
    }
}

impl Ord for Monomial {
    /// Graded-lexicographic order: lower total degree first, ties broken by
    /// the exponent vector read left to right (so `x1` beats `x2` at equal
    /// degree).
    fn cmp(&self, other: &Self) -> Ordering {
        assert_eq!(self.vars(), other.vars(), "monomial arity mismatch");
        (self.total_degree(), &self.exponents).cmp(&(other.total_degree(), &other.exponents))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_constant() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.exponents.iter().enumerate() {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            write!(f, "x{}", i + 1)?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        Ok(())
    }
}

/// Total degree of a polynomial; the zero polynomial has degree
/// `NegInfinity`, which is below every finite degree and absorbs addition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    NegInfinity,
    Finite(u32),
}

impl Add for Degree {
    type Output = Degree;

    fn add(self, rhs: Degree) -> Degree {
        match (self, rhs) {
            (Degree::Finite(a), Degree::Finite(b)) => Degree::Finite(a + b),
            _ => Degree::NegInfinity,
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInfinity => write!(f, "-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

/// An element of `Z_n[x1..xm]` in canonical form: no zero coefficients are
/// stored and every stored coefficient is a canonical residue.
///
/// The ring travels with the value, so results of arithmetic are always
/// well-typed; combining polynomials over different moduli or different
/// variable counts panics.
#[derive(Debug, Clone)]
pub struct Polynomial {
    ring: RingSpec,
    vars: usize,
    terms: BTreeMap<Monomial, u64>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        self.ring == other.ring && self.vars == other.vars && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl Polynomial {
    pub fn zero(ring: &RingSpec, vars: usize) -> Self {
        assert!(vars >= 1, "variable count must be positive");
        Polynomial {
            ring: ring.clone(),
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(ring: &RingSpec, vars: usize, value: u64) -> Self {
        Polynomial::from_terms(ring, vars, [(Monomial::constant(vars), value)])
    }

    pub fn one(ring: &RingSpec, vars: usize) -> Self {
        Polynomial::constant(ring, vars, 1)
    }

    /// The polynomial `x(index+1)` (zero-based `index`, like
    /// [`Monomial::variable`]).
    pub fn variable(ring: &RingSpec, vars: usize, index: usize) -> Self {
        Polynomial::from_terms(ring, vars, [(Monomial::variable(vars, index), 1)])
    }

    /// Builds a polynomial from `(monomial, coefficient)` pairs, reducing
    /// coefficients mod `n`, summing repeated monomials, and dropping zeros.
    ///
    /// # Panics
    ///
    /// Panics if any monomial's arity differs from `vars`.
    pub fn from_terms(
        ring: &RingSpec,
        vars: usize,
        terms: impl IntoIterator<Item = (Monomial, u64)>,
    ) -> Self {
        assert!(vars >= 1, "variable count must be positive");
        let n = ring.modulus();
        let mut map: BTreeMap<Monomial, u64> = BTreeMap::new();
        for (monomial, coefficient) in terms {
            assert_eq!(monomial.vars(), vars, "monomial arity mismatch");
            let entry = map.entry(monomial).or_insert(0);
            // Both summands are below n <= 2^63, so the sum fits in u64.
            *entry = (*entry + coefficient % n) % n;
        }
        map.retain(|_, &mut c| c != 0);
        Polynomial {
            ring: ring.clone(),
            vars,
            terms: map,
        }
    }

    pub fn ring(&self) -> &RingSpec {
        &self.ring
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, Residue)> + '_ {
        self.terms.iter().map(|(m, &c)| (m, self.ring.residue(c)))
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// The coefficient at `monomial` (zero if absent).
    pub fn coefficient(&self, monomial: &Monomial) -> Residue {
        assert_eq!(monomial.vars(), self.vars, "monomial arity mismatch");
        self.ring.residue(self.terms.get(monomial).copied().unwrap_or(0))
    }

    pub fn constant_coefficient(&self) -> Residue {
        self.coefficient(&Monomial::constant(self.vars))
    }

    pub fn total_degree(&self) -> Degree {
        self.terms
            .keys()
            .next_back()
            .map_or(Degree::NegInfinity, |m| Degree::Finite(m.total_degree()))
    }

    /// `self^exp` by repeated squaring; `f^0 = 1` for every `f`, including
    /// `f = 0`.
    pub fn pow(&self, exp: u32) -> Polynomial {
        let mut result = Polynomial::one(&self.ring, self.vars);
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    fn check_compatible(&self, other: &Polynomial) {
        assert_eq!(
            self.ring.modulus(),
            other.ring.modulus(),
            "cannot combine polynomials over different moduli"
        );
        assert_eq!(
            self.vars, other.vars,
            "cannot combine polynomials with different variable counts"
        );
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.check_compatible(rhs);
        let n = self.ring.modulus();
        let mut terms = self.terms.clone();
        for (monomial, &coefficient) in &rhs.terms {
            let entry = terms.entry(monomial.clone()).or_insert(0);
            *entry = (*entry + coefficient) % n;
        }
        terms.retain(|_, &mut c| c != 0);
        Polynomial {
            ring: self.ring.clone(),
            vars: self.vars,
            terms,
        }
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self + &(-rhs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        let n = self.ring.modulus();
        // Stored coefficients are in 1..n, so n - c is again in 1..n and no
        // new zeros appear.
        let terms = self
            .terms
            .iter()
            .map(|(m, &c)| (m.clone(), n - c))
            .collect();
        Polynomial {
            ring: self.ring.clone(),
            vars: self.vars,
            terms,
        }
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.check_compatible(rhs);
        let n = self.ring.modulus();
        let mut terms: BTreeMap<Monomial, u64> = BTreeMap::new();
        for (ma, &ca) in &self.terms {
            for (mb, &cb) in &rhs.terms {
                let entry = terms.entry(ma.mul(mb)).or_insert(0);
                *entry = (*entry + mul_mod(ca, cb, n)) % n;
            }
        }
        terms.retain(|_, &mut c| c != 0);
        Polynomial {
            ring: self.ring.clone(),
            vars: self.vars,
            terms,
        }
    }
}

/// Scaling by a residue of the same modulus.
impl Mul<Residue> for &Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: Residue) -> Polynomial {
        assert_eq!(
            rhs.modulus(),
            self.ring.modulus(),
            "scalar belongs to a different ring"
        );
        let n = self.ring.modulus();
        let mut terms: BTreeMap<Monomial, u64> = self
            .terms
            .iter()
            .map(|(m, &c)| (m.clone(), mul_mod(c, rhs.value(), n)))
            .collect();
        terms.retain(|_, &mut c| c != 0);
        Polynomial {
            ring: self.ring.clone(),
            vars: self.vars,
            terms,
        }
    }
}

impl Add for Polynomial {
    type Output = Polynomial;

    fn add(self, rhs: Polynomial) -> Polynomial {
        &self + &rhs
    }
}

impl Sub for Polynomial {
    type Output = Polynomial;

    fn sub(self, rhs: Polynomial) -> Polynomial {
        &self - &rhs
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;

    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl Neg for Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        -&self
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            write!(f, "0")?;
        } else {
            for (i, (monomial, &coefficient)) in self.terms.iter().rev().enumerate() {
                if i > 0 {
                    write!(f, " + ")?;
                }
                if monomial.is_constant() {
                    write!(f, "{coefficient}")?;
                } else if coefficient == 1 {
                    write!(f, "{monomial}")?;
                } else {
                    write!(f, "{coefficient}*{monomial}")?;
                }
            }
        }
        write!(f, " (mod {})", self.ring.modulus())
    }
}

/// Why a polynomial text failed to parse.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParseError {
    /// No terms at all (empty or all-whitespace input).
    Empty,
    /// A character that fits no token, with its byte offset.
    UnexpectedChar { at: usize, found: char },
    /// The input ended where a number or term was required.
    UnexpectedEnd,
    /// Variable index outside `1..=vars`.
    VariableOutOfRange { index: u64, vars: usize },
    /// A term whose factors do not form `number`s and `variable[^number]`s.
    MalformedTerm,
    /// A numeric literal too large for the coefficient type.
    CoefficientOverflow,
    /// An exponent too large for the exponent type.
    ExponentOverflow,
    /// A `(mod k)` trailer naming a different modulus than the target ring.
    ModulusMismatch { found: u64, expected: u64 },
    /// A malformed `(mod k)` trailer.
    BadModTrailer,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ParseError::Empty => write!(f, "empty polynomial text"),
            ParseError::UnexpectedChar { at, found } => {
                write!(f, "unexpected character {found:?} at byte {at}")
            }
            ParseError::UnexpectedEnd => write!(f, "unexpected end of input"),
            ParseError::MalformedTerm => write!(f, "malformed term"),
            ParseError::VariableOutOfRange { index, vars } => {
                write!(f, "variable index {index} out of range 1..={vars}")
            }
            ParseError::CoefficientOverflow => write!(f, "coefficient literal too large"),
            ParseError::ExponentOverflow => write!(f, "exponent literal too large"),
            ParseError::ModulusMismatch { found, expected } => {
                write!(f, "modulus {found} in text does not match ring modulus {expected}")
            }
            ParseError::BadModTrailer => write!(f, "malformed (mod n) trailer"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Token {
    Plus,
    Star,
    Caret,
    Number(u64),
    Variable(u64),
}

fn tokenize(text: &str) -> Result<Vec<Token>, ParseError> {
    let mut tokens = Vec::new();
    let bytes = text.as_bytes();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i] as char;
        match c {
            ' ' | '\t' => i += 1,
            '+' => {
                tokens.push(Token::Plus);
                i += 1;
            }
            '*' => {
                tokens.push(Token::Star);
                i += 1;
            }
            '^' => {
                tokens.push(Token::Caret);
                i += 1;
            }
            '0'..='9' => {
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let value: u64 = text[start..i]
                    .parse()
                    .map_err(|_| ParseError::CoefficientOverflow)?;
                tokens.push(Token::Number(value));
            }
            'x' => {
                i += 1;
                let start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                if start == i {
                    return Err(ParseError::UnexpectedChar { at: start - 1, found: 'x' });
                }
                let index: u64 = text[start..i]
                    .parse()
                    .map_err(|_| ParseError::CoefficientOverflow)?;
                tokens.push(Token::Variable(index));
            }
            other => return Err(ParseError::UnexpectedChar { at: i, found: other }),
        }
    }
    Ok(tokens)
}

/// Splits an optional `(mod k)` trailer off the end of `text`, returning the
/// remaining head and the modulus if one was present.
fn split_mod_trailer(text: &str) -> Result<(&str, Option<u64>), ParseError> {
    let trimmed = text.trim_end();
    if !trimmed.ends_with(')') {
        return Ok((text, None));
    }
    let open = trimmed.rfind('(').ok_or(ParseError::BadModTrailer)?;
    let inside = &trimmed[open + 1..trimmed.len() - 1];
    let inside = inside.trim();
    let rest = inside.strip_prefix("mod").ok_or(ParseError::BadModTrailer)?;
    let number = rest.trim();
    if number.is_empty() || !number.bytes().all(|b| b.is_ascii_digit()) {
        return Err(ParseError::BadModTrailer);
    }
    let modulus: u64 = number.parse().map_err(|_| ParseError::BadModTrailer)?;
    Ok((&trimmed[..open], Some(modulus)))
}

impl Polynomial {
    /// Parses the canonical text format (and harmless generalizations of it:
    /// extra whitespace, repeated monomials, multiple numeric factors).
    /// Coefficients are reduced mod `n`; a `(mod k)` trailer must name the
    /// ring's own modulus.
    pub fn parse(text: &str, ring: &RingSpec, vars: usize) -> Result<Polynomial, ParseError> {
        assert!(vars >= 1, "variable count must be positive");
        let (head, trailer) = split_mod_trailer(text)?;
        if let Some(found) = trailer {
            if found != ring.modulus() {
                return Err(ParseError::ModulusMismatch {
                    found,
                    expected: ring.modulus(),
                });
            }
        }
        let tokens = tokenize(head)?;
        if tokens.is_empty() {
            return Err(ParseError::Empty);
        }
        let n = ring.modulus();
        let mut terms: Vec<(Monomial, u64)> = Vec::new();
        // Terms are '+'-separated products of numeric and variable factors.
        for chunk in tokens.split(|t| *t == Token::Plus) {
            if chunk.is_empty() {
                return Err(ParseError::UnexpectedEnd);
            }
            let mut coefficient: u64 = 1 % n;
            let mut exponents = vec![0u32; vars];
            for factor in chunk.split(|t| *t == Token::Star) {
                match factor {
                    [Token::Number(value)] => {
                        coefficient = mul_mod(coefficient, *value % n, n);
                    }
                    [Token::Variable(index)] | [Token::Variable(index), Token::Caret, Token::Number(_)] =>
                    {
                        let exponent = match factor {
                            [_, Token::Caret, Token::Number(e)] => {
                                u32::try_from(*e).map_err(|_| ParseError::ExponentOverflow)?
                            }
                            _ => 1,
                        };
                        if *index == 0 || *index > vars as u64 {
                            return Err(ParseError::VariableOutOfRange {
                                index: *index,
                                vars,
                            });
                        }
                        let slot = &mut exponents[(*index - 1) as usize];
                        *slot = slot.checked_add(exponent).ok_or(ParseError::ExponentOverflow)?;
                    }
                    [] => return Err(ParseError::UnexpectedEnd),
                    _ => return Err(ParseError::MalformedTerm),
                }
            }
            terms.push((Monomial::from_exponents(exponents), coefficient));
        }
        Ok(Polynomial::from_terms(ring, vars, terms))
    }
}

/// All monomials in `vars` variables of total degree at most
/// `max_total_degree`, in ascending graded-lex order.
pub fn monomials_up_to(vars: usize, max_total_degree: u32) -> Vec<Monomial> {
    assert!(vars >= 1, "variable count must be positive");
    let mut result = Vec::new();
    let mut exponents = vec![0u32; vars];
    loop {
        let degree: u64 = exponents.iter().map(|&e| e as u64).sum();
        if degree <= max_total_degree as u64 {
            result.push(Monomial::from_exponents(exponents.clone()));
        }
        // Odometer over 0..=max_total_degree per position; the grlex sort
        // below fixes the order.
        let mut i = 0;
        loop {
            if i == vars {
                result.sort();
                return result;
            }
            if exponents[i] < max_total_degree {
                exponents[i] += 1;
                break;
            }
            exponents[i] = 0;
            i += 1;
        }
    }
}

/// Number of polynomials in `vars` variables of total degree at most
/// `max_total_degree` over `Z_n`, i.e. `n^C(vars + d, d)`; `None` on
/// overflow of `u128`.
pub fn polynomial_count(n: u64, vars: usize, max_total_degree: u32) -> Option<u128> {
    if n == 1 {
        return Some(1);
    }
    let monomials = binomial(vars as u128 + max_total_degree as u128, max_total_degree as u128)?;
    // n >= 2, so this loop overflows (and exits) after at most 128 steps.
    let mut count: u128 = 1;
    for _ in 0..monomials {
        count = count.checked_mul(n as u128)?;
    }
    Some(count)
}

fn binomial(n: u128, k: u128) -> Option<u128> {
    let k = k.min(n - k);
    let mut result: u128 = 1;
    for i in 0..k {
        result = result.checked_mul(n - i)?;
        result /= i + 1;
    }
    Some(result)
}

/// Default ceiling on the number of polynomials an exhaustive enumeration
/// may visit.
pub const DEFAULT_ENUMERATION_BUDGET: u64 = 10_000_000;

/// Refusal to enumerate: the space is larger than the budget allows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumerationBudgetError {
    /// Exact size of the space, or `None` if it overflows even `u128`.
    pub count: Option<u128>,
    pub budget: u64,
}

impl fmt::Display for EnumerationBudgetError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.count {
            Some(count) => write!(
                f,
                "enumeration refused: {count} polynomials exceed the budget of {}",
                self.budget
            ),
            None => write!(
                f,
                "enumeration refused: the space overflows u128 and exceeds the budget of {}",
                self.budget
            ),
        }
    }
}

/// Exhaustive enumeration of all polynomials in `vars` variables of total
/// degree at most `max_total_degree` over the given ring, refused up front
/// if the space exceeds `budget`.
///
/// Order: the zero polynomial first, then counting up coefficient vectors
/// with the constant coefficient varying fastest and the coefficient of the
/// graded-lex largest monomial varying slowest. Every polynomial appears
/// exactly once.
pub fn enumerate_polynomials(
    ring: &RingSpec,
    vars: usize,
    max_total_degree: u32,
    budget: u64,
) -> Result<PolynomialEnumeration, EnumerationBudgetError> {
    let count = polynomial_count(ring.modulus(), vars, max_total_degree);
    match count {
        Some(c) if c <= budget as u128 => Ok(PolynomialEnumeration {
            ring: ring.clone(),
            vars,
            monomials: monomials_up_to(vars, max_total_degree),
            coefficients: Vec::new(),
            done: false,
        }),
        _ => Err(EnumerationBudgetError { count, budget }),
    }
}

/// Iterator over a bounded-degree coefficient space; see
/// [`enumerate_polynomials`].
#[derive(Debug, Clone)]
pub struct PolynomialEnumeration {
    ring: RingSpec,
    vars: usize,
    /// Ascending graded-lex; `coefficients[i]` belongs to `monomials[i]`.
    monomials: Vec<Monomial>,
    coefficients: Vec<u64>,
    done: bool,
}

impl PolynomialEnumeration {
    fn materialize(&self) -> Polynomial {
        Polynomial::from_terms(
            &self.ring,
            self.vars,
            self.monomials
                .iter()
                .zip(&self.coefficients)
                .filter(|(_, &c)| c != 0)
                .map(|(m, &c)| (m.clone(), c)),
        )
    }

    fn advance(&mut self) {
        let n = self.ring.modulus();
        for slot in self.coefficients.iter_mut() {
            *slot += 1;
            if *slot < n {
                return;
            }
            *slot = 0;
        }
        self.done = true;
    }
}

impl Iterator for PolynomialEnumeration {
    type Item = Polynomial;

    fn next(&mut self) -> Option<Polynomial> {
        if self.done {
            return None;
        }
        if self.coefficients.is_empty() {
            self.coefficients = vec![0; self.monomials.len()];
        } else {
            self.advance();
            if self.done {
                return None;
            }
        }
        Some(self.materialize())
    }
}
