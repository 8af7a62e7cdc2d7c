//! Monomials `x^a y^b z^c` in three variables, single-term matrix entries,
//! and a small sparse polynomial type used for exact checks.
//!
//! The term order is graded reverse lexicographic with `x < y < z`; it is
//! the `Ord` implementation of [`Monomial`].

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{AddAssign, Neg};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest exponent accepted anywhere in the library.
pub const MAX_EXPONENT: u32 = 1_000_000;

/// Exact rational coefficient.
pub type Coeff = BigRational;

pub fn coeff(n: i64) -> Coeff {
    BigRational::from_integer(BigInt::from(n))
}

/// The monomial `x^a y^b z^c`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(from = "[u32; 3]", into = "[u32; 3]")]
pub struct Monomial {
    pub a: u32,
    pub b: u32,
    pub c: u32,
}

impl From<[u32; 3]> for Monomial {
    fn from(e: [u32; 3]) -> Self {
        Monomial::new(e[0], e[1], e[2])
    }
}

impl From<Monomial> for [u32; 3] {
    fn from(m: Monomial) -> Self {
        m.exponents()
    }
}

impl Monomial {
    pub const ONE: Monomial = Monomial { a: 0, b: 0, c: 0 };

    pub const fn new(a: u32, b: u32, c: u32) -> Self {
        Monomial { a, b, c }
    }

    /// Builds a monomial, rejecting exponents above [`MAX_EXPONENT`].
    pub fn try_new(a: u64, b: u64, c: u64) -> Result<Self> {
        for e in [a, b, c] {
            if e > MAX_EXPONENT as u64 {
                return Err(Error::ExponentOverflow(e, MAX_EXPONENT));
            }
        }
        Ok(Monomial::new(a as u32, b as u32, c as u32))
    }

    pub const fn x(e: u32) -> Self {
        Monomial::new(e, 0, 0)
    }

    pub const fn y(e: u32) -> Self {
        Monomial::new(0, e, 0)
    }

    pub const fn z(e: u32) -> Self {
        Monomial::new(0, 0, e)
    }

    pub fn exponents(&self) -> [u32; 3] {
        [self.a, self.b, self.c]
    }

    pub fn degree(&self) -> u64 {
        self.a as u64 + self.b as u64 + self.c as u64
    }

    pub fn is_one(&self) -> bool {
        *self == Monomial::ONE
    }

    /// Number of variables with a positive exponent.
    pub fn support_size(&self) -> usize {
        self.exponents().iter().filter(|&&e| e > 0).count()
    }

    /// Exactly one positive exponent.
    pub fn is_pure_power(&self) -> bool {
        self.support_size() == 1
    }

    /// Index (0 = x, 1 = y, 2 = z) of the variable of a pure power.
    pub fn pure_power_variable(&self) -> Option<usize> {
        if !self.is_pure_power() {
            return None;
        }
        self.exponents().iter().position(|&e| e > 0)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial::new(
            self.a.max(other.a),
            self.b.max(other.b),
            self.c.max(other.c),
        )
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial::new(
            self.a.min(other.a),
            self.b.min(other.b),
            self.c.min(other.c),
        )
    }

    /// `self | other`.
    pub fn divides(&self, other: &Monomial) -> bool {
        self.a <= other.a && self.b <= other.b && self.c <= other.c
    }

    /// `self | other` and `self != other`.
    pub fn strictly_divides(&self, other: &Monomial) -> bool {
        self.divides(other) && self != other
    }

    /// `self` divides `other / v` for every variable `v` dividing `other`.
    pub fn strongly_divides(&self, other: &Monomial) -> bool {
        self.exponents()
            .iter()
            .zip(other.exponents())
            .all(|(&mine, theirs)| if theirs > 0 { mine < theirs } else { mine == 0 })
    }

    /// `self / divisor`, or `None` when the division is not exact.
    pub fn checked_div(&self, divisor: &Monomial) -> Option<Monomial> {
        if divisor.divides(self) {
            Some(Monomial::new(
                self.a - divisor.a,
                self.b - divisor.b,
                self.c - divisor.c,
            ))
        } else {
            None
        }
    }

    pub fn checked_mul(&self, other: &Monomial) -> Result<Monomial> {
        Monomial::try_new(
            self.a as u64 + other.a as u64,
            self.b as u64 + other.b as u64,
            self.c as u64 + other.c as u64,
        )
    }

    /// True when the two monomials have the same positive exponent in some
    /// variable.
    pub fn shares_positive_degree(&self, other: &Monomial) -> bool {
        self.exponents()
            .iter()
            .zip(other.exponents())
            .any(|(&p, q)| p > 0 && p == q)
    }
}

/// Graded reverse lexicographic comparison with `x < y < z`.
///
/// Higher total degree is greater. On a tie, the monomial for which the
/// first nonzero coordinate of `self - other` (scanning x, y, z) is
/// negative is the greater one.
pub fn grevlex_cmp(m1: &Monomial, m2: &Monomial) -> Ordering {
    match m1.degree().cmp(&m2.degree()) {
        Ordering::Equal => {}
        ord => return ord,
    }
    for (p, q) in m1.exponents().iter().zip(m2.exponents()) {
        match p.cmp(&q) {
            Ordering::Equal => continue,
            // a smaller exponent in the earliest variable makes it greater
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
        }
    }
    Ordering::Equal
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        grevlex_cmp(self, other)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (name, e) in ["x", "y", "z"].iter().zip(self.exponents()) {
            if e == 0 {
                continue;
            }
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{name}")?;
            } else {
                write!(f, "{name}^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A single-term matrix entry `coeff * mono`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ScalarMonomial {
    coeff: Coeff,
    mono: Monomial,
}

impl ScalarMonomial {
    /// Zero coefficients are stored canonically as `0 * 1`.
    pub fn new(coeff: Coeff, mono: Monomial) -> Self {
        if coeff.is_zero() {
            Self::zero()
        } else {
            ScalarMonomial { coeff, mono }
        }
    }

    pub fn from_int(c: i64, mono: Monomial) -> Self {
        Self::new(coeff(c), mono)
    }

    pub fn zero() -> Self {
        ScalarMonomial {
            coeff: Coeff::zero(),
            mono: Monomial::ONE,
        }
    }

    pub fn coeff(&self) -> &Coeff {
        &self.coeff
    }

    pub fn mono(&self) -> Monomial {
        self.mono
    }

    pub fn is_zero(&self) -> bool {
        self.coeff.is_zero()
    }

    /// A nonzero constant.
    pub fn is_unit(&self) -> bool {
        !self.is_zero() && self.mono.is_one()
    }

    pub fn is_negative(&self) -> bool {
        self.coeff.is_negative()
    }

    pub fn checked_mul(&self, other: &ScalarMonomial) -> Result<ScalarMonomial> {
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero());
        }
        Ok(ScalarMonomial::new(
            &self.coeff * &other.coeff,
            self.mono.checked_mul(&other.mono)?,
        ))
    }
}

impl Neg for ScalarMonomial {
    type Output = ScalarMonomial;
    fn neg(self) -> ScalarMonomial {
        ScalarMonomial::new(-self.coeff, self.mono)
    }
}

impl fmt::Display for ScalarMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        if self.mono.is_one() {
            return write!(f, "{}", self.coeff);
        }
        if self.coeff.is_one() {
            write!(f, "{}", self.mono)
        } else if (-&self.coeff).is_one() {
            write!(f, "-{}", self.mono)
        } else {
            write!(f, "{}*{}", self.coeff, self.mono)
        }
    }
}

impl fmt::Debug for ScalarMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Sparse polynomial with exact rational coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Poly {
    terms: BTreeMap<Monomial, Coeff>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Coeff)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, term: &ScalarMonomial) {
        if term.is_zero() {
            return;
        }
        let slot = self.terms.entry(term.mono()).or_insert_with(Coeff::zero);
        *slot += term.coeff();
        if slot.is_zero() {
            self.terms.remove(&term.mono());
        }
    }
}

impl AddAssign<&ScalarMonomial> for Poly {
    fn add_assign(&mut self, rhs: &ScalarMonomial) {
        self.add_term(rhs);
    }
}
