//! Power series in `q`, truncated at a fixed degree, whose coefficients are
//! polynomials in `a`.

use std::fmt;

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::family::FamilySpec;
use crate::poly::APoly;
use crate::weight::{weighted_sum, WeightKind};

/// Coefficients of `q^0 ..= q^order`; everything above `order` is discarded.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<APoly>,
}

/// The lowest degree at which two series differ.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Discrepancy {
    pub degree: usize,
    pub left: APoly,
    pub right: APoly,
}

impl fmt::Display for Discrepancy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "q^{}: {} vs {}", self.degree, self.left, self.right)
    }
}

impl TruncatedSeries {
    pub fn zero(order: usize) -> Self {
        TruncatedSeries { coeffs: vec![APoly::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        TruncatedSeries::monomial(order, 0, APoly::one())
    }

    /// `c * q^degree`, or zero if the degree is past the truncation.
    pub fn monomial(order: usize, degree: usize, c: APoly) -> Self {
        let mut s = TruncatedSeries::zero(order);
        if degree <= order {
            s.coeffs[degree] = c;
        }
        s
    }

    pub fn from_coeffs(coeffs: Vec<APoly>) -> Self {
        assert!(!coeffs.is_empty(), "a truncated series keeps at least the constant term");
        TruncatedSeries { coeffs }
    }

    /// The truncation degree `N`.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, degree: usize) -> &APoly {
        &self.coeffs[degree]
    }

    pub fn coeffs(&self) -> &[APoly] {
        &self.coeffs
    }

    fn same_order(&self, other: &Self) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::MismatchedTruncation(self.order(), other.order()));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.same_order(other)?;
        Ok(TruncatedSeries { coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(x, y)| x + y).collect() })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        TruncatedSeries { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    /// Full truncated Cauchy product.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.same_order(other)?;
        let order = self.order();
        let mut out = TruncatedSeries::zero(order);
        for (i, x) in self.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in other.coeffs[..=order - i].iter().enumerate() {
                out.coeffs[i + j].add_scaled(y, x);
            }
        }
        Ok(out)
    }

    /// Multiplies in place by the polynomial `sum c * q^d` over `factor`.
    pub fn mul_sparse(&mut self, factor: &[(usize, APoly)]) {
        for n in (0..self.coeffs.len()).rev() {
            let mut acc = APoly::zero();
            for (d, c) in factor {
                if *d <= n {
                    acc.add_scaled(&self.coeffs[n - d], c);
                }
            }
            self.coeffs[n] = acc;
        }
    }

    /// Multiplies in place by `1 + c * q^degree`.
    pub fn mul_binomial(&mut self, degree: usize, c: &APoly) {
        if degree > self.order() {
            return;
        }
        self.mul_sparse(&[(0, APoly::one()), (degree, c.clone())]);
    }

    /// Multiplies in place by `1 / (1 - c * q^degree)`, `degree >= 1`.
    pub fn div_one_minus(&mut self, degree: usize, c: &APoly) -> Result<()> {
        if degree == 0 {
            return Err(Error::DivergentAtQ0);
        }
        for n in degree..self.coeffs.len() {
            let (lower, upper) = self.coeffs.split_at_mut(n);
            upper[0].add_scaled(&lower[n - degree], c);
        }
        Ok(())
    }

    /// Multiplies by `c * q^degree`.
    pub fn shifted(&self, degree: usize, c: &APoly) -> Self {
        let order = self.order();
        let mut out = TruncatedSeries::zero(order);
        if degree <= order {
            for n in degree..=order {
                out.coeffs[n] = &self.coeffs[n - degree] * c;
            }
        }
        out
    }

    /// In-place `self += c * q^degree * other`.
    pub fn add_shifted(&mut self, other: &Self, degree: usize, c: &APoly) -> Result<()> {
        self.same_order(other)?;
        for n in degree..self.coeffs.len() {
            let (src, dst) = (&other.coeffs[n - degree], &mut self.coeffs[n]);
            dst.add_scaled(src, c);
        }
        Ok(())
    }

    /// Substitutes a numeric value for `a` in every coefficient.
    pub fn substitute(&self, a: i64) -> Self {
        TruncatedSeries { coeffs: self.coeffs.iter().map(|c| c.substitute(a)).collect() }
    }

    /// Exact comparison; `Ok(None)` when equal.
    pub fn first_discrepancy(&self, other: &Self) -> Result<Option<Discrepancy>> {
        self.same_order(other)?;
        Ok(self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .enumerate()
            .find(|(_, (x, y))| x != y)
            .map(|(degree, (x, y))| Discrepancy { degree, left: x.clone(), right: y.clone() }))
    }

    /// Largest `a`-degree appearing at each `q`-degree never exceeds the `q`-degree.
    pub fn a_degree_bounded(&self) -> bool {
        self.coeffs.iter().enumerate().all(|(n, c)| c.degree().is_none_or(|d| d as usize <= n))
    }

    /// One line per degree, `n: <coefficient>`.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (n, c) in self.coeffs.iter().enumerate() {
            out.push_str(&format!("{n}: {c}\n"));
        }
        out
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// A factor `x = sign * a^a_exp * q^q_shift` of a q-shifted factorial.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PochhammerBase {
    pub sign: i8,
    pub a_exp: u32,
    pub q_shift: usize,
}

impl PochhammerBase {
    pub fn q(q_shift: usize) -> Self {
        PochhammerBase { sign: 1, a_exp: 0, q_shift }
    }

    pub fn aq(q_shift: usize) -> Self {
        PochhammerBase { sign: 1, a_exp: 1, q_shift }
    }

    pub fn negated(self) -> Self {
        PochhammerBase { sign: -self.sign, ..self }
    }

    fn coefficient(&self) -> APoly {
        APoly::monomial(i64::from(self.sign), self.a_exp)
    }
}

/// `(x; q^step)_terms = prod_{j < terms} (1 - x q^(j*step))`; `terms = None`
/// is the infinite product, cut where the factor degree passes `order`.
pub fn pochhammer(base: PochhammerBase, step: usize, terms: Option<usize>, order: usize) -> Result<TruncatedSeries> {
    if step == 0 {
        return Err(Error::Invariant("q-shifted factorial with step 0".into()));
    }
    if terms.is_none() && base.q_shift == 0 {
        return Err(Error::DivergentAtQ0);
    }
    let minus_x = -base.coefficient();
    let mut out = TruncatedSeries::one(order);
    let mut j = 0;
    while terms.is_none_or(|t| j < t) {
        let degree = base.q_shift + j * step;
        if degree > order {
            break;
        }
        if degree == 0 {
            let factor = APoly::one() + minus_x.clone();
            out = out.shifted(0, &factor);
        } else {
            out.mul_binomial(degree, &minus_x);
        }
        j += 1;
    }
    Ok(out)
}

/// The q-series identities that can be checked coefficient by coefficient.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Identity {
    /// `1 + sum_k (-q;q)_{k-1} (-a)^k q^{k(k+1)/2} / (aq^2;q^2)_k = sum_k (-a)^k q^{k^2}`.
    Ramanujan,
    /// `sum_n q^{2n} (q^{2n+2};q^2)_inf (aq^{2n+1};q^2)_inf = sum_k (-a)^k q^{k^2}`.
    AndrewsTheta,
    /// The `2m` version of `AndrewsTheta`, whose right side carries
    /// `prod_{j<=k} (1 + q^{2j} + ... + q^{2(m-1)j})`.
    General { m: u32 },
    /// `General` at `a = -1`.
    AndrewsM { m: u32 },
    /// `sum_{n>=1} -a q^{2n-1} (q^{2n};q^2)_inf (aq^{2n+1};q^2)_inf = sum_{k>=1} (-a)^k q^{k^2}`.
    AlladiAlt,
    /// `AndrewsTheta` at `a = -1`.
    AndrewsProblemSeries,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Lhs,
    Rhs,
}

impl Identity {
    pub const NAMES: [&'static str; 6] =
        ["Ramanujan", "AndrewsTheta", "General", "AndrewsM", "AlladiAlt", "AndrewsProblemSeries"];

    /// Parses an identity name; `m` is used by the families that take one.
    pub fn parse(name: &str, m: u32) -> Result<Self> {
        if m == 0 {
            return Err(Error::ZeroModulus);
        }
        Ok(match name {
            "Ramanujan" => Identity::Ramanujan,
            "AndrewsTheta" => Identity::AndrewsTheta,
            "General" => Identity::General { m },
            "AndrewsM" => Identity::AndrewsM { m },
            "AlladiAlt" => Identity::AlladiAlt,
            "AndrewsProblemSeries" => Identity::AndrewsProblemSeries,
            other => return Err(Error::UnknownIdentity(other.to_string())),
        })
    }

    pub fn name(&self) -> &'static str {
        match self {
            Identity::Ramanujan => "Ramanujan",
            Identity::AndrewsTheta => "AndrewsTheta",
            Identity::General { .. } => "General",
            Identity::AndrewsM { .. } => "AndrewsM",
            Identity::AlladiAlt => "AlladiAlt",
            Identity::AndrewsProblemSeries => "AndrewsProblemSeries",
        }
    }

    pub fn build(&self, side: Side, order: usize) -> Result<TruncatedSeries> {
        let a = APoly::monomial(1, 1);
        let minus_one = APoly::constant(-1);
        let series = match (self, side) {
            (Identity::Ramanujan, Side::Lhs) => ramanujan_lhs(order)?,
            (Identity::Ramanujan | Identity::AndrewsTheta, Side::Rhs) => theta_sum(order, &-a, 0),
            (Identity::AlladiAlt, Side::Rhs) => theta_sum(order, &-a, 1),
            (Identity::AndrewsProblemSeries, Side::Rhs) => theta_sum(order, &APoly::one(), 0),
            (Identity::AndrewsTheta, Side::Lhs) => modular_product_sum(order, 1, &a),
            (Identity::AndrewsProblemSeries, Side::Lhs) => modular_product_sum(order, 1, &minus_one),
            (Identity::General { m }, Side::Lhs) => modular_product_sum(order, *m, &a),
            (Identity::AndrewsM { m }, Side::Lhs) => modular_product_sum(order, *m, &minus_one),
            (Identity::General { m }, Side::Rhs) => restricted_theta_sum(order, *m, &-a),
            (Identity::AndrewsM { m }, Side::Rhs) => restricted_theta_sum(order, *m, &APoly::one()),
            (Identity::AlladiAlt, Side::Lhs) => odd_start_product_sum(order, &a),
        };
        if !series.a_degree_bounded() {
            return Err(Error::Invariant(format!("{} {side:?}: a-degree exceeds q-degree", self.name())));
        }
        Ok(series)
    }
}

/// `sum_{k >= start} x^k q^{k^2}`.
fn theta_sum(order: usize, x: &APoly, start: usize) -> TruncatedSeries {
    let mut out = TruncatedSeries::zero(order);
    let mut power = APoly::one();
    for _ in 0..start {
        power = &power * x;
    }
    let mut k = start;
    while k * k <= order {
        out.coeffs[k * k] += &power;
        power = &power * x;
        k += 1;
    }
    out
}

/// `1 + sum_{k>=1} x^k q^{k^2} prod_{j=1}^{k} (1 + q^{2j} + ... + q^{2(m-1)j})`.
fn restricted_theta_sum(order: usize, m: u32, x: &APoly) -> TruncatedSeries {
    let mut out = TruncatedSeries::one(order);
    let mut product = TruncatedSeries::one(order);
    let mut power = APoly::one();
    let mut k = 1;
    while k * k <= order {
        let factor: Vec<(usize, APoly)> = (0..m as usize).map(|r| (2 * r * k, APoly::one())).collect();
        product.mul_sparse(&factor);
        power = &power * x;
        out.add_shifted(&product, k * k, &power).expect("same order");
        k += 1;
    }
    out
}

/// `sum_{n>=0} q^{2mn} (q^{2mn+2m}; q^{2m})_inf (x q^{2mn+1}; q^2)_inf`.
///
/// Built from the top `n` down: each step multiplies the running product by
/// `(1 - q^{2m(n+1)})` and the `m` odd factors `(1 - x q^{2mn+1+2j})`.
fn modular_product_sum(order: usize, m: u32, x: &APoly) -> TruncatedSeries {
    let step = 2 * m as usize;
    let minus_x = -x;
    let minus_one = APoly::constant(-1);
    let mut out = TruncatedSeries::zero(order);
    let mut running = TruncatedSeries::one(order);
    let top = order / step;
    for n in (0..=top).rev() {
        running.mul_binomial(step * (n + 1), &minus_one);
        for j in 0..m as usize {
            running.mul_binomial(step * n + 1 + 2 * j, &minus_x);
        }
        out.add_shifted(&running, step * n, &APoly::one()).expect("same order");
    }
    out
}

/// `sum_{n>=1} -x q^{2n-1} (q^{2n}; q^2)_inf (x q^{2n+1}; q^2)_inf`.
fn odd_start_product_sum(order: usize, x: &APoly) -> TruncatedSeries {
    let minus_x = -x;
    let minus_one = APoly::constant(-1);
    let mut out = TruncatedSeries::zero(order);
    let mut running = TruncatedSeries::one(order);
    let top = order.div_ceil(2);
    for n in (1..=top).rev() {
        running.mul_binomial(2 * n, &minus_one);
        running.mul_binomial(2 * n + 1, &minus_x);
        out.add_shifted(&running, 2 * n - 1, &minus_x).expect("same order");
    }
    out
}

/// `1 + sum_{k>=1} (-q;q)_{k-1} (-a)^k q^{k(k+1)/2} / (aq^2;q^2)_k`.
fn ramanujan_lhs(order: usize) -> Result<TruncatedSeries> {
    let a = APoly::monomial(1, 1);
    let mut out = TruncatedSeries::one(order);
    // running = (-q;q)_{k-1} / (aq^2;q^2)_k
    let mut running = TruncatedSeries::one(order);
    let mut coeff = APoly::one();
    let mut k = 1;
    while k * (k + 1) / 2 <= order {
        if k > 1 {
            running.mul_binomial(k - 1, &APoly::one());
        }
        running.div_one_minus(2 * k, &a)?;
        coeff = &coeff * &-&a;
        out.add_shifted(&running, k * (k + 1) / 2, &coeff)?;
        k += 1;
    }
    Ok(out)
}

/// The series whose `q^n` coefficient is the weighted sum of the family's
/// members of weight `n`.
pub fn series_from_enumeration(family: FamilySpec, kind: WeightKind, order: usize) -> Result<TruncatedSeries> {
    let coeffs = (0..=order as u64).into_par_iter().map(|n| weighted_sum(family, n, kind)).collect::<Result<_>>()?;
    Ok(TruncatedSeries { coeffs })
}

/// Integer coefficients of a series with constant `a`-polynomials, for
/// display of specialized series.
pub fn constant_coefficients(s: &TruncatedSeries) -> Option<Vec<BigInt>> {
    s.coeffs().iter().map(|c| if c.degree().unwrap_or(0) == 0 { Some(c.coeff(0)) } else { None }).collect()
}
