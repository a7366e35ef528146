//! The sign-reversing involutions and the triangular-core bijection.
//!
//! * [`phi`] acts on pairs `(pi, sigma)` drawn from `Dk { k, m } x Ek { k, m }`.
//! * [`psi_do`] acts on `Pdo { m }`: it splits a partition into such a pair
//!   ([`extract`]), applies `phi`, and glues the result back ([`assemble`]).
//! * [`psi_q`] acts on `A { m }` (for `m = 1`, on `Q`) by adding or removing
//!   a zero part, deferring to `psi_do` when neither applies.
//! * [`b_to_pair`] / [`pair_to_b`] split a member of `B { m }` into a
//!   triangular partition and a member of `Hkm`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::family::{ensure_member, FamilySpec};
use crate::modular::{delete_leg_hook, insert_leg_hook, leg_hooks, modular_conjugate};
use crate::partition::{triangular, Partition};

/// Which rule of an involution produced an image.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CaseTag {
    A1,
    A2,
    B1,
    B2,
    #[serde(rename = "psi-i")]
    PsiI,
    #[serde(rename = "psi-ii")]
    PsiII,
    #[serde(rename = "psi-iii")]
    PsiIII,
}

impl CaseTag {
    /// The case the image is sent back through.
    pub fn partner(self) -> CaseTag {
        match self {
            CaseTag::A1 => CaseTag::A2,
            CaseTag::A2 => CaseTag::A1,
            CaseTag::B1 => CaseTag::B2,
            CaseTag::B2 => CaseTag::B1,
            CaseTag::PsiI => CaseTag::PsiII,
            CaseTag::PsiII => CaseTag::PsiI,
            CaseTag::PsiIII => CaseTag::PsiIII,
        }
    }
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CaseTag::A1 => "A1",
            CaseTag::A2 => "A2",
            CaseTag::B1 => "B1",
            CaseTag::B2 => "B2",
            CaseTag::PsiI => "psi-i",
            CaseTag::PsiII => "psi-ii",
            CaseTag::PsiIII => "psi-iii",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome<T> {
    Image { value: T, case: CaseTag },
    FixedPoint,
}

impl<T> Outcome<T> {
    pub fn image(&self) -> Option<&T> {
        match self {
            Outcome::Image { value, .. } => Some(value),
            Outcome::FixedPoint => None,
        }
    }

    pub fn case(&self) -> Option<CaseTag> {
        match self {
            Outcome::Image { case, .. } => Some(*case),
            Outcome::FixedPoint => None,
        }
    }

    pub fn is_fixed(&self) -> bool {
        matches!(self, Outcome::FixedPoint)
    }

    fn map<U>(self, f: impl FnOnce(T) -> U) -> Outcome<U> {
        match self {
            Outcome::Image { value, case } => Outcome::Image { value: f(value), case },
            Outcome::FixedPoint => Outcome::FixedPoint,
        }
    }
}

/// A pair `(pi, sigma)` in `Dk { k, m } x Ek { k, m }` with `k` the number
/// of parts of `pi`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct PairState {
    pub pi: Partition,
    pub sigma: Partition,
    #[serde(skip)]
    pub m: u32,
}

impl PairState {
    pub fn new(pi: Partition, sigma: Partition, m: u32) -> Result<Self> {
        let state = PairState { pi, sigma, m };
        state.check()?;
        Ok(state)
    }

    pub fn k(&self) -> usize {
        self.pi.len()
    }

    pub fn weight(&self) -> u64 {
        self.pi.weight() + self.sigma.weight()
    }

    fn check(&self) -> Result<()> {
        if self.m == 0 {
            return Err(Error::ZeroModulus);
        }
        ensure_member(&self.pi, FamilySpec::Dk { k: self.k(), m: self.m })?;
        ensure_member(&self.sigma, FamilySpec::Ek { k: self.k(), m: self.m })
    }
}

impl fmt::Display for PairState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.pi, self.sigma)
    }
}

fn prepend(sigma: &Partition, part: u32) -> Partition {
    let mut parts = sigma.parts().to_vec();
    parts.push(part);
    Partition::from_parts(parts).expect("positive parts")
}

fn drop_largest(sigma: &Partition) -> Partition {
    Partition::from_sorted(sigma.parts()[1..].to_vec())
}

/// The pair involution. Cases are tried in the order A1, A2, B1, B2; a pair
/// matching none of them is the fixed point, which requires `pi` to have no
/// even part and `sigma` to be empty.
pub fn phi(state: &PairState) -> Result<Outcome<PairState>> {
    state.check()?;
    let PairState { pi, sigma, m } = state;
    let (m, k) = (*m, state.k());
    let top_sigma = sigma.largest().unwrap_or(0);

    let hooks = leg_hooks(pi, k, m)?;
    // rows are distinct, so the highest valid hook is unique
    let chosen = hooks.iter().filter(|h| h.deletion_valid).max_by_key(|h| h.row);

    let (value, case) = match chosen {
        Some(hook) if hook.length >= top_sigma => {
            let rest = delete_leg_hook(pi, hook.row, m)?;
            (PairState { pi: rest, sigma: prepend(sigma, hook.length), m }, CaseTag::A1)
        }
        Some(_) => (insert_as_hook(pi, sigma, m)?, CaseTag::A2),
        None if u64::from(pi.largest().unwrap_or(0)) + u64::from(2 * m) < u64::from(top_sigma) => {
            (insert_as_hook(pi, sigma, m)?, CaseTag::A2)
        }
        None => {
            let top_even = pi.parts().iter().copied().find(|p| p % 2 == 0).unwrap_or(0);
            if top_even > 0 && top_even >= top_sigma {
                let mut parts = pi.parts().to_vec();
                parts.retain(|&p| p != top_even);
                let pi = Partition::from_sorted(parts);
                (PairState { pi, sigma: prepend(sigma, top_even), m }, CaseTag::B1)
            } else if !sigma.is_empty() {
                let mut parts = pi.parts().to_vec();
                parts.push(top_sigma);
                let pi = Partition::from_parts(parts)?;
                (PairState { pi, sigma: drop_largest(sigma), m }, CaseTag::B2)
            } else {
                return Ok(Outcome::FixedPoint);
            }
        }
    };
    value.check().map_err(|e| Error::Invariant(format!("phi{state} via {case} left the domain: {e}")))?;
    Ok(Outcome::Image { value, case })
}

fn insert_as_hook(pi: &Partition, sigma: &Partition, m: u32) -> Result<PairState> {
    let top = sigma.largest().unwrap_or(0);
    let (pi, _) = insert_leg_hook(pi, top, m)?;
    Ok(PairState { pi, sigma: drop_largest(sigma), m })
}

/// Splits `lambda` in `Pdo { m }` into a pair: for `t = k, ..., 1` the gap
/// below part `t` is reduced into `1..=2m` by taking a multiple of `2m` off
/// the top `t` parts, each `2m` removed becoming a part `2m*t` of `sigma`.
pub fn extract(lambda: &Partition, m: u32) -> Result<PairState> {
    ensure_member(lambda, FamilySpec::Pdo { m })?;
    let step = 2 * m;
    let mut pi = lambda.parts().to_vec();
    let mut sigma = Vec::new();
    let k = pi.len();
    for t in (1..=k).rev() {
        let below = if t < k { pi[t] } else { 0 };
        let strips = (pi[t - 1] - below - 1) / step;
        for p in &mut pi[..t] {
            *p -= strips * step;
        }
        sigma.extend(std::iter::repeat_n(step * t as u32, strips as usize));
    }
    let state = PairState { pi: Partition::from_sorted(pi), sigma: Partition::from_sorted(sigma), m };
    state.check().map_err(|e| Error::Invariant(format!("extract({lambda}) left the domain: {e}")))?;
    Ok(state)
}

/// Inverse of [`extract`]: `pi` plus the `2m`-modular conjugate of `sigma`.
pub fn assemble(state: &PairState) -> Result<Partition> {
    let conj = modular_conjugate(&state.sigma, state.m)?;
    Ok(state.pi.add(&conj))
}

/// Every intermediate value of one application of [`psi_do`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PsiTrace {
    pub input: Partition,
    pub extracted: PairState,
    pub phi: Outcome<PairState>,
    pub image: Option<Partition>,
}

pub fn psi_do_trace(lambda: &Partition, m: u32) -> Result<PsiTrace> {
    let extracted = extract(lambda, m)?;
    let phi = phi(&extracted)?;
    let image = phi.image().map(assemble).transpose()?;
    Ok(PsiTrace { input: lambda.clone(), extracted, phi, image })
}

/// The involution on `Pdo { m }`. Its fixed points are the members of
/// `B { m }`; for `m = 1` that is the triangular partitions.
pub fn psi_do(lambda: &Partition, m: u32) -> Result<Outcome<Partition>> {
    let trace = psi_do_trace(lambda, m)?;
    Ok(match (trace.image, trace.phi.case()) {
        (Some(value), Some(case)) => Outcome::Image { value, case },
        _ => Outcome::FixedPoint,
    })
}

/// The involution on `A { m }`:
/// a zero part is appended when absent, dropped when the next smallest part
/// is even, and otherwise the positive parts go through [`psi_do`].
/// `(0)` itself is fixed.
pub fn psi_q(lambda: &Partition, m: u32) -> Result<Outcome<Partition>> {
    ensure_member(lambda, FamilySpec::A { m })?;
    let stats = lambda.stats();
    if stats.smallest != Some(0) {
        return Ok(Outcome::Image { value: lambda.with_zero()?, case: CaseTag::PsiII });
    }
    match stats.second_smallest {
        None => Ok(Outcome::FixedPoint),
        Some(ss) if ss % 2 == 0 => Ok(Outcome::Image { value: lambda.without_zero(), case: CaseTag::PsiI }),
        Some(_) => {
            let inner = psi_do(&lambda.without_zero(), m)?;
            match inner {
                Outcome::FixedPoint => Ok(Outcome::FixedPoint),
                Outcome::Image { value, .. } => Ok(Outcome::Image { value: value.with_zero()?, case: CaseTag::PsiIII }),
            }
        }
    }
}

/// Splits `mu` in `B { m }` into `T_k` and a member of `Hkm { k, m }`.
///
/// Repeatedly takes the lowest row `i` whose drop to the next row is
/// `2j > 2`, strips `2(j-1)` columns of height `i`, and records each as a
/// row of length `i`. The bottom row is measured against a virtual row
/// `-1`, so the residue is exactly the triangular partition.
pub fn b_to_pair(mu: &Partition, m: u32) -> Result<(usize, Partition)> {
    ensure_member(mu, FamilySpec::B { m })?;
    let k = mu.len();
    let mut rows: Vec<u32> = mu.parts().to_vec();
    let mut strips = Vec::new();
    loop {
        let drop = |i: usize| {
            if i < k {
                rows[i - 1] - rows[i]
            } else {
                rows[k - 1] + 1
            }
        };
        let Some(i) = (1..=k).rev().find(|&i| drop(i) > 2) else { break };
        let width = drop(i) - 2;
        for r in &mut rows[..i] {
            *r -= width;
        }
        strips.extend(std::iter::repeat_n(i as u32, width as usize));
    }
    if rows != triangular(k).parts() {
        return Err(Error::Invariant(format!("{mu} did not reduce to a triangular partition")));
    }
    let h = Partition::from_parts(strips)?;
    ensure_member(&h, FamilySpec::Hkm { k, m }).map_err(|e| Error::Invariant(e.to_string()))?;
    Ok((k, h))
}

/// Inverse of [`b_to_pair`]: `T_k` plus the conjugate of `h`.
pub fn pair_to_b(k: usize, h: &Partition, m: u32) -> Result<Partition> {
    ensure_member(h, FamilySpec::Hkm { k, m })?;
    Ok(triangular(k).add(&h.conjugate()?))
}

/// Applies `psi_do` or `psi_q` according to the family. Other families have
/// no involution here.
pub fn involute(lambda: &Partition, family: FamilySpec) -> Result<Outcome<Partition>> {
    match family {
        FamilySpec::Pdo { m } => psi_do(lambda, m),
        FamilySpec::Q => psi_q(lambda, 1),
        FamilySpec::A { m } => psi_q(lambda, m),
        other => Err(Error::UnsupportedFamily { family: other.to_string() }),
    }
}

/// One line of a pairing table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum TableRow {
    Pair { left: Partition, right: Partition, case: CaseTag },
    Fixed { partition: Partition },
}

impl fmt::Display for TableRow {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TableRow::Pair { left, right, .. } => write!(f, "{left} <-> {right}"),
            TableRow::Fixed { partition } => write!(f, "fixed: {partition}"),
        }
    }
}

/// The orbits of the family's involution at weight `n`. Each pair is written
/// with the member of positive sign on the left (even length on `Pdo`, odd
/// length on `Q` and `A`); pairs come in decreasing order of their left
/// member, followed by the fixed points.
pub fn pair_table(family: FamilySpec, n: u64) -> Result<Vec<TableRow>> {
    let positive = |p: &Partition| match family {
        FamilySpec::Pdo { .. } => p.len().is_multiple_of(2),
        _ => p.len() % 2 == 1,
    };
    let mut pairs = Vec::new();
    let mut fixed = Vec::new();
    for p in family.enumerate(n)? {
        match involute(&p, family)? {
            Outcome::FixedPoint => fixed.push(TableRow::Fixed { partition: p }),
            Outcome::Image { value, case } if positive(&p) => {
                pairs.push(TableRow::Pair { left: p, right: value, case })
            }
            Outcome::Image { .. } => {}
        }
    }
    pairs.extend(fixed);
    Ok(pairs)
}

impl Outcome<PairState> {
    /// Assembles a pair outcome back into a partition outcome.
    pub fn assembled(self) -> Result<Outcome<Partition>> {
        match self.map(|s| assemble(&s)) {
            Outcome::Image { value, case } => Ok(Outcome::Image { value: value?, case }),
            Outcome::FixedPoint => Ok(Outcome::FixedPoint),
        }
    }
}
