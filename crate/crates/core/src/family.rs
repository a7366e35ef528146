//! The partition families the involutions act on, with exact membership
//! predicates and exhaustive enumerators.

use std::fmt;

use crate::error::{Error, Result};
use crate::partition::Partition;

/// A family of partitions.
///
/// `m` is the modulus parameter (the diagrams involved are `2m`-modular);
/// `k` is a part count or a part-size bound depending on the family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FamilySpec {
    /// Distinct positive parts.
    AllDistinct,
    /// Distinct positive parts, smallest part odd, every even part a
    /// multiple of `2m`. `Pdo { m: 1 }` is the plain "smallest part odd"
    /// family.
    Pdo { m: u32 },
    /// Distinct nonnegative parts with even smallest part. Same as `A { m: 1 }`.
    Q,
    /// Distinct nonnegative parts, smallest part even, every even part a
    /// multiple of `2m`.
    A { m: u32 },
    /// Distinct odd parts whose consecutive differences (and smallest part)
    /// are at most `2m`.
    B { m: u32 },
    /// `k` distinct positive parts, smallest odd, consecutive differences
    /// (and smallest part) at most `2m`, even parts multiples of `2m`.
    Dk { k: usize, m: u32 },
    /// Parts that are multiples of `2m`, none exceeding `2mk`; repetition allowed.
    Ek { k: usize, m: u32 },
    /// Parts at most `k`, every multiplicity even and below `2m`.
    Hkm { k: usize, m: u32 },
}

impl FamilySpec {
    pub fn modulus_param(&self) -> u32 {
        match *self {
            FamilySpec::AllDistinct | FamilySpec::Q => 1,
            FamilySpec::Pdo { m }
            | FamilySpec::A { m }
            | FamilySpec::B { m }
            | FamilySpec::Dk { m, .. }
            | FamilySpec::Ek { m, .. }
            | FamilySpec::Hkm { m, .. } => m,
        }
    }

    fn validate(&self) -> Result<()> {
        if self.modulus_param() == 0 {
            return Err(Error::ZeroModulus);
        }
        Ok(())
    }

    /// Exact membership test. Always false for `m = 0`.
    pub fn contains(&self, p: &Partition) -> bool {
        if self.validate().is_err() {
            return false;
        }
        let parts = p.parts();
        match *self {
            FamilySpec::AllDistinct => !p.has_zero() && p.is_distinct(),
            FamilySpec::Pdo { m } => {
                !p.has_zero()
                    && p.is_distinct()
                    && p.smallest().is_none_or(|s| s % 2 == 1)
                    && even_parts_divisible(parts, m)
            }
            FamilySpec::Q => FamilySpec::A { m: 1 }.contains(p),
            FamilySpec::A { m } => {
                p.is_distinct() && p.smallest().is_some_and(|s| s % 2 == 0) && even_parts_divisible(parts, m)
            }
            FamilySpec::B { m } => {
                !p.has_zero() && p.is_distinct() && parts.iter().all(|&x| x % 2 == 1) && gaps_at_most(parts, 2 * m)
            }
            FamilySpec::Dk { k, m } => {
                p.len() == k
                    && !p.has_zero()
                    && p.is_distinct()
                    && p.smallest().is_none_or(|s| s % 2 == 1)
                    && gaps_at_most(parts, 2 * m)
                    && even_parts_divisible(parts, m)
            }
            FamilySpec::Ek { k, m } => {
                !p.has_zero()
                    && parts.iter().all(|&x| x % (2 * m) == 0)
                    && p.largest().is_none_or(|l| u64::from(l) <= 2 * u64::from(m) * k as u64)
            }
            FamilySpec::Hkm { k, m } => {
                if p.has_zero() || p.largest().is_some_and(|l| l as usize > k) {
                    return false;
                }
                multiplicities(parts).all(|(_, mult)| mult % 2 == 0 && mult < 2 * m as usize)
            }
        }
    }

    /// All members of weight `n`, in lexicographically decreasing order.
    pub fn enumerate(&self, n: u64) -> Result<Vec<Partition>> {
        self.validate()?;
        let n = u32::try_from(n).map_err(|_| Error::UnsupportedFamily { family: format!("{self} at weight {n}") })?;
        let mut out: Vec<Partition> = Vec::new();
        let mut push = |parts: &[u32]| out.push(Partition::from_sorted(parts.to_vec()));
        match *self {
            FamilySpec::AllDistinct => distinct_parts(n, n, usize::MAX, &|_| true, &mut push),
            FamilySpec::Pdo { m } => {
                let allowed = |x: u32| x % 2 == 1 || x.is_multiple_of(2 * m);
                distinct_parts(n, n, usize::MAX, &allowed, &mut |parts| {
                    if parts.last().is_none_or(|s| s % 2 == 1) {
                        push(parts)
                    }
                })
            }
            FamilySpec::Q | FamilySpec::A { .. } => {
                let m = self.modulus_param();
                let allowed = |x: u32| x % 2 == 1 || x.is_multiple_of(2 * m);
                distinct_parts(n, n, usize::MAX, &allowed, &mut |parts| {
                    if parts.last().is_some_and(|s| s % 2 == 0) {
                        push(parts);
                    }
                    let mut with_zero = parts.to_vec();
                    with_zero.push(0);
                    push(&with_zero);
                })
            }
            FamilySpec::B { m } => distinct_parts(n, n, usize::MAX, &|x| x % 2 == 1, &mut |parts| {
                if gaps_at_most(parts, 2 * m) {
                    push(parts)
                }
            }),
            FamilySpec::Dk { k, m } => {
                let allowed = |x: u32| x % 2 == 1 || x.is_multiple_of(2 * m);
                distinct_parts(n, n, k, &allowed, &mut |parts| {
                    if parts.len() == k && parts.last().is_none_or(|s| s % 2 == 1) && gaps_at_most(parts, 2 * m) {
                        push(parts)
                    }
                })
            }
            FamilySpec::Ek { k, m } => {
                let step = 2 * m;
                let cap = u64::from(step) * k as u64;
                let max = n.min(u32::try_from(cap).unwrap_or(u32::MAX));
                multiples(n, max - max % step, step, &mut Vec::new(), &mut push)
            }
            FamilySpec::Hkm { k, m } => {
                let top = u32::try_from(k).unwrap_or(u32::MAX).min(n.max(1));
                bounded_multiplicity(n, top, 2 * m - 2, &mut Vec::new(), &mut push)
            }
        }
        out.sort_unstable_by(|a, b| b.cmp(a));
        Ok(out)
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            FamilySpec::AllDistinct => write!(f, "D"),
            FamilySpec::Pdo { m } => write!(f, "Pdo(m={m})"),
            FamilySpec::Q => write!(f, "Q"),
            FamilySpec::A { m } => write!(f, "A(m={m})"),
            FamilySpec::B { m } => write!(f, "B(m={m})"),
            FamilySpec::Dk { k, m } => write!(f, "D(k={k},m={m})"),
            FamilySpec::Ek { k, m } => write!(f, "E(k={k},m={m})"),
            FamilySpec::Hkm { k, m } => write!(f, "H(k={k},m={m})"),
        }
    }
}

pub(crate) fn ensure_member(p: &Partition, family: FamilySpec) -> Result<()> {
    if family.contains(p) {
        Ok(())
    } else {
        Err(Error::NotInFamily { partition: p.to_string(), family: family.to_string() })
    }
}

fn even_parts_divisible(parts: &[u32], m: u32) -> bool {
    parts.iter().all(|&x| x % 2 == 1 || x % (2 * m) == 0)
}

/// Consecutive differences, including the last part against 0, are all at most `bound`.
fn gaps_at_most(parts: &[u32], bound: u32) -> bool {
    parts.windows(2).all(|w| w[0] - w[1] <= bound) && parts.last().is_none_or(|&s| s <= bound)
}

fn multiplicities(parts: &[u32]) -> impl Iterator<Item = (u32, usize)> + '_ {
    parts.chunk_by(|a, b| a == b).map(|run| (run[0], run.len()))
}

/// Visits every strictly decreasing sequence of allowed positive parts, each
/// at most `max`, summing to `n` and having at most `max_len` parts.
fn distinct_parts(n: u32, max: u32, max_len: usize, allowed: &dyn Fn(u32) -> bool, visit: &mut dyn FnMut(&[u32])) {
    fn go(
        rest: u32,
        max: u32,
        max_len: usize,
        allowed: &dyn Fn(u32) -> bool,
        stack: &mut Vec<u32>,
        visit: &mut dyn FnMut(&[u32]),
    ) {
        if rest == 0 {
            visit(stack);
            return;
        }
        if stack.len() >= max_len {
            return;
        }
        // parts max, max-1, ..., 1 sum to at most max(max+1)/2
        if u64::from(max) * u64::from(max + 1) / 2 < u64::from(rest) {
            return;
        }
        for p in (1..=max.min(rest)).rev() {
            if !allowed(p) {
                continue;
            }
            stack.push(p);
            go(rest - p, p - 1, max_len, allowed, stack, visit);
            stack.pop();
        }
    }
    go(n, max, max_len, allowed, &mut Vec::new(), visit)
}

/// Weakly decreasing sequences of multiples of `step`, each at most `max`.
fn multiples(rest: u32, max: u32, step: u32, stack: &mut Vec<u32>, visit: &mut dyn FnMut(&[u32])) {
    if rest == 0 {
        visit(stack);
        return;
    }
    let mut p = max.min(rest - rest % step);
    while p >= step {
        stack.push(p);
        multiples(rest - p, p, step, stack, visit);
        stack.pop();
        p -= step;
    }
}

/// Partitions with parts at most `top` whose multiplicities are even and at
/// most `max_mult`.
fn bounded_multiplicity(rest: u32, top: u32, max_mult: u32, stack: &mut Vec<u32>, visit: &mut dyn FnMut(&[u32])) {
    if rest == 0 {
        visit(stack);
        return;
    }
    if top == 0 {
        return;
    }
    let mut mult = 0;
    while mult <= max_mult && mult * top <= rest {
        for _ in 0..mult {
            stack.push(top);
        }
        bounded_multiplicity(rest - mult * top, top - 1, max_mult, stack, visit);
        for _ in 0..mult {
            stack.pop();
        }
        mult += 2;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::part;

    fn strings(ps: &[Partition]) -> Vec<String> {
        ps.iter().map(|p| p.to_string()).collect()
    }

    #[test]
    fn membership_examples() {
        assert!(FamilySpec::Dk { k: 5, m: 1 }.contains(&part![6, 5, 3, 2, 1]));
        assert!(FamilySpec::B { m: 3 }.contains(&part![19, 15, 9, 5, 3]));
        assert!(!FamilySpec::Pdo { m: 1 }.contains(&part![4, 2]));
        assert!(FamilySpec::Pdo { m: 1 }.contains(&Partition::empty()));
        assert!(!FamilySpec::Q.contains(&Partition::empty()));
        assert!(FamilySpec::Q.contains(&part![0]));
        assert!(FamilySpec::A { m: 2 }.contains(&part![20, 16, 11, 5, 3, 0]));
        assert!(!FamilySpec::A { m: 2 }.contains(&part![20, 18, 11, 5, 3, 0]));
        assert!(FamilySpec::Ek { k: 3, m: 1 }.contains(&part![6, 6, 2]));
        assert!(!FamilySpec::Ek { k: 3, m: 1 }.contains(&part![8]));
        assert!(FamilySpec::Hkm { k: 5, m: 3 }.contains(&part![5, 5, 3, 3, 2, 2, 2, 2, 1, 1]));
        assert!(!FamilySpec::Hkm { k: 5, m: 2 }.contains(&part![2, 2, 2, 2]));
        assert!(!FamilySpec::Dk { k: 3, m: 1 }.contains(&part![7, 5, 3]));
        assert!(!FamilySpec::Pdo { m: 0 }.contains(&part![1]));
    }

    #[test]
    fn pdo_ten() {
        let got = FamilySpec::Pdo { m: 1 }.enumerate(10).unwrap();
        assert_eq!(strings(&got), ["9+1", "7+3", "7+2+1", "6+3+1", "5+4+1", "4+3+2+1"]);
        assert_eq!(FamilySpec::Pdo { m: 1 }.enumerate(0).unwrap(), vec![Partition::empty()]);
    }

    #[test]
    fn q_ten_and_nine() {
        let got = FamilySpec::Q.enumerate(10).unwrap();
        let mut expected = vec![
            "10",
            "8+2",
            "6+4",
            "5+3+2",
            "10+0",
            "8+2+0",
            "6+4+0",
            "5+3+2+0",
            "9+1+0",
            "7+3+0",
            "4+3+2+1+0",
            "7+2+1+0",
            "6+3+1+0",
            "5+4+1+0",
        ];
        let mut got = strings(&got);
        got.sort();
        expected.sort();
        assert_eq!(got, expected);

        let nine = FamilySpec::Q.enumerate(9).unwrap();
        assert_eq!(nine.len(), 11);
        assert_eq!(nine.iter().filter(|p| p.even_len() % 2 == 0).count(), 5);
        assert_eq!(FamilySpec::Q.enumerate(0).unwrap(), vec![part![0]]);
    }

    #[test]
    fn enumeration_is_lexicographically_decreasing() {
        let got = FamilySpec::A { m: 2 }.enumerate(30).unwrap();
        assert!(got.windows(2).all(|w| w[0] > w[1]));
    }

    #[test]
    fn small_families() {
        assert_eq!(strings(&FamilySpec::Ek { k: 2, m: 1 }.enumerate(6).unwrap()), ["4+2", "2+2+2"]);
        assert_eq!(FamilySpec::Ek { k: 0, m: 1 }.enumerate(0).unwrap(), vec![Partition::empty()]);
        assert!(FamilySpec::Ek { k: 0, m: 1 }.enumerate(2).unwrap().is_empty());
        assert_eq!(strings(&FamilySpec::Hkm { k: 2, m: 2 }.enumerate(6).unwrap()), ["2+2+1+1"]);
        assert_eq!(strings(&FamilySpec::Dk { k: 3, m: 1 }.enumerate(8).unwrap()), ["4+3+1"]);
        assert!(FamilySpec::Dk { k: 3, m: 1 }.enumerate(10).unwrap().is_empty());
        assert_eq!(strings(&FamilySpec::B { m: 2 }.enumerate(6).unwrap()), ["5+1"]);
        assert_eq!(FamilySpec::A { m: 0 }.enumerate(3), Err(Error::ZeroModulus));
    }
}
