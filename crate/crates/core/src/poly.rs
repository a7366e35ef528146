//! Polynomials in the formal variable `a` with arbitrary-precision integer
//! coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// Sparse polynomial in `a`; exponent to coefficient, zero coefficients never stored.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct APoly {
    terms: BTreeMap<u32, BigInt>,
}

impl APoly {
    pub fn zero() -> Self {
        APoly::default()
    }

    pub fn one() -> Self {
        APoly::constant(1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        APoly::monomial(c, 0)
    }

    /// `c * a^exp`.
    pub fn monomial(c: impl Into<BigInt>, exp: u32) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        APoly { terms }
    }

    /// `(-1)^sign_exp * a^exp`.
    pub fn signed_monomial(sign_exp: usize, exp: u32) -> Self {
        APoly::monomial(if sign_exp.is_multiple_of(2) { 1 } else { -1 }, exp)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exp: u32) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().next_back().copied()
    }

    /// `(exponent, coefficient)` pairs in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (u32, &BigInt)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    /// Adds `c * a^exp` in place.
    pub fn add_term(&mut self, exp: u32, c: &BigInt) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_default();
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }

    /// Adds `factor * other` in place.
    pub fn add_scaled(&mut self, other: &APoly, factor: &APoly) {
        for (&fe, fc) in &factor.terms {
            for (&oe, oc) in &other.terms {
                self.add_term(fe + oe, &(fc * oc));
            }
        }
    }

    /// Evaluates at `a = value`.
    pub fn eval(&self, value: &BigInt) -> BigInt {
        self.terms.iter().map(|(&e, c)| c * num_traits::pow(value.clone(), e as usize)).sum()
    }

    /// Substitutes `a = value`, giving a constant polynomial.
    pub fn substitute(&self, value: i64) -> APoly {
        APoly::constant(self.eval(&BigInt::from(value)))
    }
}

impl From<i64> for APoly {
    fn from(c: i64) -> Self {
        APoly::constant(c)
    }
}

impl AddAssign<&APoly> for APoly {
    fn add_assign(&mut self, rhs: &APoly) {
        for (&e, c) in &rhs.terms {
            self.add_term(e, c);
        }
    }
}

impl SubAssign<&APoly> for APoly {
    fn sub_assign(&mut self, rhs: &APoly) {
        for (&e, c) in &rhs.terms {
            self.add_term(e, &-c);
        }
    }
}

impl Add for &APoly {
    type Output = APoly;
    fn add(self, rhs: &APoly) -> APoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for APoly {
    type Output = APoly;
    fn add(mut self, rhs: APoly) -> APoly {
        self += &rhs;
        self
    }
}

impl Sub for &APoly {
    type Output = APoly;
    fn sub(self, rhs: &APoly) -> APoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for APoly {
    type Output = APoly;
    fn sub(mut self, rhs: APoly) -> APoly {
        self -= &rhs;
        self
    }
}

impl Mul for &APoly {
    type Output = APoly;
    fn mul(self, rhs: &APoly) -> APoly {
        let mut out = APoly::zero();
        out.add_scaled(self, rhs);
        out
    }
}

impl Mul for APoly {
    type Output = APoly;
    fn mul(self, rhs: APoly) -> APoly {
        &self * &rhs
    }
}

impl Neg for APoly {
    type Output = APoly;
    fn neg(mut self) -> APoly {
        for c in self.terms.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Neg for &APoly {
    type Output = APoly;
    fn neg(self) -> APoly {
        -self.clone()
    }
}

impl std::iter::Sum for APoly {
    fn sum<I: Iterator<Item = APoly>>(iter: I) -> APoly {
        iter.fold(APoly::zero(), |acc, p| acc + p)
    }
}

/// Highest power first: `2a^3 - a + 1`, `-a^5`, `0`.
impl fmt::Display for APoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (&e, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mag = c.abs();
            if e == 0 {
                write!(f, "{mag}")?;
                continue;
            }
            if !mag.is_one() {
                write!(f, "{mag}")?;
            }
            if e == 1 {
                f.write_str("a")?;
            } else {
                write!(f, "a^{e}")?;
            }
        }
        Ok(())
    }
}
