//! Signed weights on partitions and the exhaustive checks of the weighted
//! partition theorems built from them.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::family::FamilySpec;
use crate::involution::{involute, Outcome};
use crate::partition::{exact_sqrt, Partition};
use crate::poly::APoly;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WeightKind {
    /// `(-1)^l * a^(sum of ceil(gap/2))`, gaps taken down to a virtual zero part.
    Gap,
    /// `(-1)^l * a^(number of odd parts)`.
    Odd,
    /// `(-1)^(l-1) * a^(number of odd parts)`, on partitions into distinct
    /// nonnegative parts with even smallest part.
    EvenSmallest,
    /// Same formula as `EvenSmallest`, on the `2m`-restricted family.
    A1,
    /// `(-a)^l`, on distinct odd parts.
    A2,
    /// `(-1)^l`.
    SignOnly,
}

impl WeightKind {
    fn applies_to(self, p: &Partition) -> bool {
        match self {
            WeightKind::Gap | WeightKind::Odd => FamilySpec::Pdo { m: 1 }.contains(p),
            WeightKind::EvenSmallest | WeightKind::A1 => FamilySpec::Q.contains(p),
            WeightKind::A2 => !p.has_zero() && p.is_distinct() && p.parts().iter().all(|x| x % 2 == 1),
            WeightKind::SignOnly => true,
        }
    }
}

impl fmt::Display for WeightKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

fn gap_exponent(p: &Partition) -> u32 {
    let parts = p.parts();
    (0..parts.len())
        .map(|i| {
            let below = parts.get(i + 1).copied().unwrap_or(0);
            (parts[i] - below).div_ceil(2)
        })
        .sum()
}

pub fn weight(p: &Partition, kind: WeightKind) -> Result<APoly> {
    if !kind.applies_to(p) {
        return Err(Error::WrongFamilyForWeight { partition: p.to_string(), kind: kind.to_string() });
    }
    let len = p.len();
    let odd = p.odd_len() as u32;
    Ok(match kind {
        WeightKind::Gap => APoly::signed_monomial(len, gap_exponent(p)),
        WeightKind::Odd => APoly::signed_monomial(len, odd),
        // len >= 1 on these families
        WeightKind::EvenSmallest | WeightKind::A1 => APoly::signed_monomial(len + 1, odd),
        WeightKind::A2 => APoly::signed_monomial(len, len as u32),
        WeightKind::SignOnly => APoly::signed_monomial(len, 0),
    })
}

pub fn weighted_sum(family: FamilySpec, n: u64, kind: WeightKind) -> Result<APoly> {
    let mut total = APoly::zero();
    for p in family.enumerate(n)? {
        total += &weight(&p, kind)?;
    }
    Ok(total)
}

/// `(-a)^k` when `n = k^2`, zero otherwise; `SignOnly` gives `(-1)^k`.
pub fn rhs_square(n: u64, kind: WeightKind) -> APoly {
    match exact_sqrt(n) {
        None => APoly::zero(),
        Some(k) if kind == WeightKind::SignOnly => APoly::signed_monomial(k as usize, 0),
        Some(k) => APoly::signed_monomial(k as usize, k as u32),
    }
}

/// Walks every orbit of the family's involution at weight `n`, checking
/// that paired partitions carry opposite weights and that the map is
/// self-inverse, and returns the total weight of the fixed points.
pub fn fixed_point_sum(family: FamilySpec, n: u64, kind: WeightKind) -> Result<APoly> {
    let mut fixed = APoly::zero();
    for p in family.enumerate(n)? {
        let w = weight(&p, kind)?;
        match involute(&p, family)? {
            Outcome::FixedPoint => fixed += &w,
            Outcome::Image { value, case } => {
                if !family.contains(&value) || value.weight() != n {
                    return Err(Error::Invariant(format!("{p} -> {value} ({case}) leaves {family} at weight {n}")));
                }
                if weight(&value, kind)? != -&w {
                    return Err(Error::Invariant(format!("{p} -> {value} ({case}) is not sign-reversing for {kind}")));
                }
                let back = involute(&value, family)?;
                if back.image() != Some(&p) {
                    return Err(Error::Invariant(format!("{p} -> {value} -> {back:?}")));
                }
            }
        }
    }
    Ok(fixed)
}

/// The weighted partition theorems that can be checked by enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Theorem {
    /// Signed count `sum (-1)^l` over `Pdo` vanishes off the squares.
    SignCensus,
    /// The same census read as (even-length count) - (odd-length count).
    ParityCounts,
    /// Gap-weight sum over `Pdo`.
    GapWeight,
    /// Odd-part weight sum over `Pdo`.
    OddWeight,
    /// Even-smallest weight sum over `Q`.
    EvenSmallest,
    /// `q_o(n) - q_e(n)` over `Q`, split by parity of the number of even parts.
    EvenPartParity,
    /// The `A { m }` weight sum equals the `B { m }` weight sum.
    ModularWeights { m: u32 },
}

impl Theorem {
    /// The identifier used in reports and on the command line.
    pub fn id(&self) -> String {
        match self {
            Theorem::SignCensus => "T3.1".into(),
            Theorem::ParityCounts => "T3.2".into(),
            Theorem::GapWeight => "T4.1".into(),
            Theorem::OddWeight => "T5.1".into(),
            Theorem::EvenSmallest => "T6.1".into(),
            Theorem::EvenPartParity => "AndrewsProblem".into(),
            Theorem::ModularWeights { m } => format!("T8.2({m})"),
        }
    }

    /// Both sides at weight `n`.
    pub fn sides(&self, n: u64) -> Result<(APoly, APoly)> {
        let pdo = FamilySpec::Pdo { m: 1 };
        Ok(match *self {
            Theorem::SignCensus => (weighted_sum(pdo, n, WeightKind::SignOnly)?, rhs_square(n, WeightKind::SignOnly)),
            Theorem::ParityCounts => {
                let (even, odd) = count_by_parity(pdo, n, Partition::len)?;
                (APoly::constant(even - odd), rhs_square(n, WeightKind::SignOnly))
            }
            Theorem::GapWeight => (weighted_sum(pdo, n, WeightKind::Gap)?, rhs_square(n, WeightKind::Gap)),
            Theorem::OddWeight => (weighted_sum(pdo, n, WeightKind::Odd)?, rhs_square(n, WeightKind::Odd)),
            Theorem::EvenSmallest => {
                (weighted_sum(FamilySpec::Q, n, WeightKind::EvenSmallest)?, rhs_square(n, WeightKind::EvenSmallest))
            }
            Theorem::EvenPartParity => {
                let (q_even, q_odd) = count_by_parity(FamilySpec::Q, n, Partition::even_len)?;
                let rhs = if exact_sqrt(n).is_some() { 1 } else { 0 };
                (APoly::constant(q_odd - q_even), APoly::constant(rhs))
            }
            Theorem::ModularWeights { m } => (
                weighted_sum(FamilySpec::A { m }, n, WeightKind::A1)?,
                weighted_sum(FamilySpec::B { m }, n, WeightKind::A2)?,
            ),
        })
    }
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.id())
    }
}

/// Accepts the report identifiers; `T8.2` alone means `m = 1`.
impl FromStr for Theorem {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "T3.1" => Theorem::SignCensus,
            "T3.2" => Theorem::ParityCounts,
            "T4.1" => Theorem::GapWeight,
            "T5.1" => Theorem::OddWeight,
            "T6.1" => Theorem::EvenSmallest,
            "AndrewsProblem" => Theorem::EvenPartParity,
            "T8.2" => Theorem::ModularWeights { m: 1 },
            _ => {
                let m = s
                    .strip_prefix("T8.2(")
                    .and_then(|r| r.strip_suffix(')'))
                    .and_then(|m| m.parse::<u32>().ok())
                    .filter(|&m| m >= 1)
                    .ok_or_else(|| Error::UnknownTheorem(s.to_string()))?;
                Theorem::ModularWeights { m }
            }
        })
    }
}

/// Counts members whose statistic is even and odd, in that order.
pub fn count_by_parity(family: FamilySpec, n: u64, stat: fn(&Partition) -> usize) -> Result<(BigInt, BigInt)> {
    let members = family.enumerate(n)?;
    let even = members.iter().filter(|p| stat(p).is_multiple_of(2)).count();
    Ok((BigInt::from(even), BigInt::from(members.len() - even)))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportEntry {
    pub n: u64,
    pub lhs: String,
    pub rhs: String,
    pub ok: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub theorem: String,
    pub n_max: u64,
    pub entries: Vec<ReportEntry>,
    pub pass: bool,
}

impl Report {
    pub fn failures(&self) -> impl Iterator<Item = &ReportEntry> {
        self.entries.iter().filter(|e| !e.ok)
    }
}

/// Checks `theorem` for every `1 <= n <= n_max`. The values of `n` are
/// processed in parallel; entries come back in increasing `n`.
pub fn verify_theorem(theorem: Theorem, n_max: u64) -> Result<Report> {
    let entries = (1..=n_max)
        .into_par_iter()
        .map(|n| {
            let (lhs, rhs) = theorem.sides(n)?;
            Ok(ReportEntry { n, ok: lhs == rhs, lhs: lhs.to_string(), rhs: rhs.to_string() })
        })
        .collect::<Result<Vec<_>>>()?;
    let pass = entries.iter().all(|e| e.ok);
    Ok(Report { theorem: theorem.id(), n_max, entries, pass })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;
    use crate::partition::triangular;

    fn mono(c: i64, e: u32) -> APoly {
        APoly::monomial(c, e)
    }

    #[test]
    fn gap_weights_at_ten() {
        let cases = [
            (part![9, 1], mono(1, 5)),
            (part![7, 3], mono(1, 4)),
            (part![4, 3, 2, 1], mono(1, 4)),
            (part![7, 2, 1], mono(-1, 5)),
            (part![6, 3, 1], mono(-1, 4)),
            (part![5, 4, 1], mono(-1, 4)),
        ];
        for (p, w) in cases {
            assert_eq!(weight(&p, WeightKind::Gap).unwrap(), w, "{p}");
        }
        for k in 0..8 {
            assert_eq!(weight(&triangular(k), WeightKind::Gap).unwrap(), APoly::signed_monomial(k, k as u32));
        }
    }

    #[test]
    fn even_smallest_weights() {
        assert_eq!(weight(&part![5, 3, 2], WeightKind::EvenSmallest).unwrap(), mono(1, 2));
        assert_eq!(weight(&part![5, 3, 2, 0], WeightKind::EvenSmallest).unwrap(), mono(-1, 2));
        assert_eq!(weight(&part![10, 0], WeightKind::EvenSmallest).unwrap(), mono(-1, 0));
        assert_eq!(weight(&part![9, 1, 0], WeightKind::EvenSmallest).unwrap(), mono(1, 2));
        assert!(matches!(weight(&part![9, 1], WeightKind::EvenSmallest), Err(Error::WrongFamilyForWeight { .. })));
        assert!(matches!(weight(&part![4, 2], WeightKind::Gap), Err(Error::WrongFamilyForWeight { .. })));
    }

    #[test]
    fn sums_and_rhs() {
        assert!(weighted_sum(FamilySpec::Pdo { m: 1 }, 10, WeightKind::Gap).unwrap().is_zero());
        assert_eq!(weighted_sum(FamilySpec::Pdo { m: 1 }, 9, WeightKind::SignOnly).unwrap(), APoly::constant(-1));
        let q9 = weighted_sum(FamilySpec::Q, 9, WeightKind::EvenSmallest).unwrap();
        assert_eq!(q9.substitute(-1), APoly::constant(1));
        assert_eq!(rhs_square(16, WeightKind::Odd), mono(1, 4));
        assert!(rhs_square(10, WeightKind::Gap).is_zero());
        assert_eq!(rhs_square(9, WeightKind::SignOnly), APoly::constant(-1));
    }

    #[test]
    fn parity_counts_at_nine() {
        let (even, odd) = count_by_parity(FamilySpec::Pdo { m: 1 }, 9, Partition::len).unwrap();
        assert_eq!((even, odd), (BigInt::from(2), BigInt::from(3)));
        let (q_e, q_o) = count_by_parity(FamilySpec::Q, 9, Partition::even_len).unwrap();
        assert_eq!((q_e, q_o), (BigInt::from(5), BigInt::from(6)));
    }

    #[test]
    fn theorem_ids_round_trip() {
        for t in [
            Theorem::SignCensus,
            Theorem::ParityCounts,
            Theorem::GapWeight,
            Theorem::OddWeight,
            Theorem::EvenSmallest,
            Theorem::EvenPartParity,
            Theorem::ModularWeights { m: 3 },
        ] {
            assert_eq!(t.id().parse::<Theorem>().unwrap(), t);
        }
        assert_eq!("T8.2".parse::<Theorem>().unwrap(), Theorem::ModularWeights { m: 1 });
        assert!("T9.9".parse::<Theorem>().is_err());
        assert!("T8.2(0)".parse::<Theorem>().is_err());
    }

    #[test]
    fn small_reports() {
        let r = verify_theorem(Theorem::ParityCounts, 9).unwrap();
        assert!(r.pass);
        assert_eq!(r.entries[8], ReportEntry { n: 9, lhs: "-1".into(), rhs: "-1".into(), ok: true });
        let r = verify_theorem(Theorem::EvenSmallest, 10).unwrap();
        assert!(r.pass);
        assert_eq!(r.entries.len(), 10);
    }

    #[test]
    fn fixed_points_carry_the_sum() {
        for n in 0..=30 {
            let pdo = FamilySpec::Pdo { m: 1 };
            for kind in [WeightKind::Gap, WeightKind::Odd, WeightKind::SignOnly] {
                assert_eq!(fixed_point_sum(pdo, n, kind).unwrap(), weighted_sum(pdo, n, kind).unwrap());
            }
        }
    }
}
