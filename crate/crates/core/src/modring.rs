//! The coefficient ring `Z_n` of integers modulo `n`.
//!
//! [`RingSpec`] fixes a modulus together with its prime factorization; the
//! derived radical (product of the distinct primes) and largest prime
//! exponent drive every nilpotency and unit decision in the crate. A residue
//! `c` is nilpotent iff the radical divides `c`, and for nilpotent `c` the
//! power `c^max_exponent` already vanishes. [`Residue`] is a canonical
//! least-nonnegative representative; mixing residues of different moduli in
//! arithmetic is a programming error and panics.

use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

/// Largest admissible modulus. Capping at `2^63 - 1` keeps `a + b` for
/// reduced `a, b` representable in `u64`; products go through `u128`.
pub const MAX_MODULUS: u64 = i64::MAX as u64;

/// Rejection reasons for [`RingSpec::new`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RingError {
    /// `n = 0` would be the integers, which are out of scope.
    ZeroModulus,
    /// The requested modulus exceeds [`MAX_MODULUS`].
    ModulusTooLarge(u64),
}

impl fmt::Display for RingError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingError::ZeroModulus => write!(f, "modulus must be at least 1"),
            RingError::ModulusTooLarge(n) => {
                write!(f, "modulus {n} exceeds the supported maximum {MAX_MODULUS}")
            }
        }
    }
}

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

fn lcm(a: u64, b: u64) -> u64 {
    if a == 0 || b == 0 {
        0
    } else {
        a / gcd(a, b) * b
    }
}

/// `a * b mod n` without overflow for any `a, b < n <= 2^63 - 1`.
pub(crate) fn mul_mod(a: u64, b: u64, n: u64) -> u64 {
    (a as u128 * b as u128 % n as u128) as u64
}

/// Deterministic primality by trial division; adequate for the modulus
/// sizes this crate targets.
pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    if p.is_multiple_of(2) {
        return p == 2;
    }
    let mut d = 3u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut factors = Vec::new();
    let mut push = |p: u64, e: u32| {
        if e > 0 {
            factors.push((p, e));
        }
    };
    let mut e = 0;
    while n.is_multiple_of(2) {
        n /= 2;
        e += 1;
    }
    push(2, e);
    let mut d = 3u64;
    while d * d <= n {
        let mut e = 0;
        while n.is_multiple_of(d) {
            n /= d;
            e += 1;
        }
        push(d, e);
        d += 2;
    }
    if n > 1 {
        push(n, 1);
    }
    factors
}

/// A modulus `n >= 1` together with its factored structure.
///
/// Cloning is cheap: the factorization is shared. Two specs are equal iff
/// their moduli are equal. For `n = 1` the factorization is empty, the
/// radical is 1, and the largest exponent is 0; the sole residue 0 equals 1
/// and is simultaneously a unit and nilpotent, which every predicate here
/// reflects without special casing.
#[derive(Debug, Clone)]
pub struct RingSpec {
    n: u64,
    radical: u64,
    max_exponent: u32,
    factorization: Arc<[(u64, u32)]>,
}

impl PartialEq for RingSpec {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n
    }
}

impl Eq for RingSpec {}

impl RingSpec {
    /// Builds the ring `Z_n`, factoring `n` by trial division.
    pub fn new(n: u64) -> Result<Self, RingError> {
        if n == 0 {
            return Err(RingError::ZeroModulus);
        }
        if n > MAX_MODULUS {
            return Err(RingError::ModulusTooLarge(n));
        }
        let factorization = factorize(n);
        let radical = factorization.iter().map(|&(p, _)| p).product();
        let max_exponent = factorization.iter().map(|&(_, e)| e).max().unwrap_or(0);
        Ok(RingSpec {
            n,
            radical,
            max_exponent,
            factorization: factorization.into(),
        })
    }

    pub fn modulus(&self) -> u64 {
        self.n
    }

    /// Prime factorization of the modulus, primes ascending. Empty for `n = 1`.
    pub fn factorization(&self) -> &[(u64, u32)] {
        &self.factorization
    }

    /// Product of the distinct primes dividing the modulus (1 for `n = 1`).
    pub fn radical(&self) -> u64 {
        self.radical
    }

    /// Largest exponent in the factorization (0 for `n = 1`). For every
    /// nilpotent residue `c`, `c^max_exponent = 0`.
    pub fn max_exponent(&self) -> u32 {
        self.max_exponent
    }

    /// The residue class of `value`, reduced to its canonical representative.
    pub fn residue(&self, value: u64) -> Residue {
        Residue {
            value: value % self.n,
            modulus: self.n,
        }
    }

    pub fn zero(&self) -> Residue {
        self.residue(0)
    }

    pub fn one(&self) -> Residue {
        self.residue(1)
    }

    /// All residues `0..n` in ascending order. The iterator is lazy; callers
    /// scanning it exhaustively are responsible for budgeting.
    pub fn residues(&self) -> impl Iterator<Item = Residue> + '_ {
        (0..self.n).map(move |v| self.residue(v))
    }

    /// The units of `Z_n` in ascending order of representative.
    pub fn units(&self) -> impl Iterator<Item = Residue> + '_ {
        self.residues().filter(move |r| self.is_unit(*r))
    }

    /// Whether `r` is nilpotent, decided by divisibility by the radical.
    ///
    /// # Panics
    ///
    /// Panics if `r` belongs to a different modulus.
    pub fn is_nilpotent(&self, r: Residue) -> bool {
        assert_eq!(r.modulus, self.n, "residue belongs to a different ring");
        r.value.is_multiple_of(self.radical)
    }

    /// Whether `r` is invertible, decided by `gcd(r, n) = 1`.
    ///
    /// # Panics
    ///
    /// Panics if `r` belongs to a different modulus.
    pub fn is_unit(&self, r: Residue) -> bool {
        assert_eq!(r.modulus, self.n, "residue belongs to a different ring");
        gcd(r.value, self.n) == 1
    }

    /// The multiplicative inverse of `r`, if `r` is a unit.
    pub fn inverse(&self, r: Residue) -> Option<Residue> {
        assert_eq!(r.modulus, self.n, "residue belongs to a different ring");
        if self.n == 1 {
            return Some(self.zero());
        }
        let (mut old_r, mut rem) = (r.value as i128, self.n as i128);
        let (mut old_s, mut s) = (1i128, 0i128);
        while rem != 0 {
            let q = old_r / rem;
            (old_r, rem) = (rem, old_r - q * rem);
            (old_s, s) = (s, old_s - q * s);
        }
        if old_r != 1 {
            return None;
        }
        Some(self.residue(old_s.rem_euclid(self.n as i128) as u64))
    }

    /// The exponent of the unit group: the least `e >= 1` with `u^e = 1` for
    /// every unit `u`, computed as the lcm of the orders of all units.
    ///
    /// Runs in time roughly `n * average order`; intended for moderate `n`.
    pub fn unit_group_exponent(&self) -> u64 {
        let one = self.one();
        let mut exponent = 1u64;
        for u in self.units() {
            let mut power = u;
            let mut order = 1u64;
            while power != one {
                power = power * u;
                order += 1;
                assert!(order <= self.n, "order of a unit exceeded the group size");
            }
            exponent = lcm(exponent, order);
        }
        exponent
    }
}

/// An element of `Z_n` in canonical form: `value < modulus` always holds.
///
/// Arithmetic between residues of different moduli panics; there is no
/// implicit coercion.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Residue {
    value: u64,
    modulus: u64,
}

impl Residue {
    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    /// `self^exp` by repeated squaring; `r^0 = 1` for every `r`.
    pub fn pow(&self, exp: u64) -> Residue {
        let mut result = Residue {
            value: 1 % self.modulus,
            modulus: self.modulus,
        };
        let mut base = *self;
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = result * base;
            }
            e >>= 1;
            if e > 0 {
                base = base * base;
            }
        }
        result
    }
}

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

fn check_same_modulus(a: Residue, b: Residue) {
    assert_eq!(
        a.modulus, b.modulus,
        "cannot combine residues of different moduli"
    );
}

impl Add for Residue {
    type Output = Residue;

    fn add(self, rhs: Residue) -> Residue {
        check_same_modulus(self, rhs);
        // value + rhs.value < 2 * modulus <= 2^64, and MAX_MODULUS keeps the
        // sum representable.
        Residue {
            value: (self.value + rhs.value) % self.modulus,
            modulus: self.modulus,
        }
    }
}

impl Sub for Residue {
    type Output = Residue;

    fn sub(self, rhs: Residue) -> Residue {
        check_same_modulus(self, rhs);
        self + (-rhs)
    }
}

impl Mul for Residue {
    type Output = Residue;

    fn mul(self, rhs: Residue) -> Residue {
        check_same_modulus(self, rhs);
        Residue {
            value: mul_mod(self.value, rhs.value, self.modulus),
            modulus: self.modulus,
        }
    }
}

impl Neg for Residue {
    type Output = Residue;

    fn neg(self) -> Residue {
        Residue {
            value: if self.value == 0 {
                0
            } else {
                self.modulus - self.value
            },
            modulus: self.modulus,
        }
    }
}
