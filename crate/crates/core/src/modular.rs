//! `2m`-modular diagrams and the leg hooks cut out of them.
//!
//! In the `2m`-modular diagram of a partition every cell of a row holds `2m`
//! except the last, which holds the residue in `1..=2m`. The leg hook of row
//! `i` is that row together with the first-column cells of the rows above
//! it. Its length is the sum of its cells and its height is `i`.

use std::fmt;

use crate::error::{Error, Result};
use crate::family::{ensure_member, FamilySpec};
use crate::partition::Partition;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModularDiagram {
    source: Partition,
    modulus: u32,
    rows: Vec<Vec<u32>>,
}

impl ModularDiagram {
    pub fn build(lambda: &Partition, m: u32) -> Result<Self> {
        if m == 0 {
            return Err(Error::ZeroModulus);
        }
        if lambda.has_zero() {
            return Err(Error::ZeroPartPresent(lambda.to_string()));
        }
        let modulus = 2 * m;
        let rows = lambda
            .parts()
            .iter()
            .map(|&p| {
                let full = ((p - 1) / modulus) as usize;
                let mut row = vec![modulus; full];
                row.push((p - 1) % modulus + 1);
                row
            })
            .collect();
        Ok(ModularDiagram { source: lambda.clone(), modulus, rows })
    }

    pub fn source(&self) -> &Partition {
        &self.source
    }

    /// The cell value `2m`.
    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }
}

/// One row per line, cells separated by single spaces.
impl fmt::Display for ModularDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                f.write_str("\n")?;
            }
            let cells: Vec<String> = row.iter().map(u32::to_string).collect();
            f.write_str(&cells.join(" "))?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ModularHook {
    /// 1-based row index, which is also the hook height.
    pub row: usize,
    pub length: u32,
    pub deletion_valid: bool,
}

impl ModularHook {
    pub fn height(&self) -> usize {
        self.row
    }
}

/// The leg hooks of every even part of `pi` below the first row, ordered by
/// row. `pi` must lie in `Dk { k, m }`.
pub fn leg_hooks(pi: &Partition, k: usize, m: u32) -> Result<Vec<ModularHook>> {
    ensure_member(pi, FamilySpec::Dk { k, m })?;
    let smaller = FamilySpec::Dk { k: k.saturating_sub(1), m };
    let mut hooks = Vec::new();
    for (idx, &part) in pi.parts().iter().enumerate().skip(1) {
        if part % 2 != 0 {
            continue;
        }
        let row = idx + 1;
        let length = part + 2 * m * idx as u32;
        let deletion_valid = delete_leg_hook(pi, row, m).is_ok_and(|rest| smaller.contains(&rest));
        hooks.push(ModularHook { row, length, deletion_valid });
    }
    Ok(hooks)
}

/// Removes the leg hook of row `row` (1-based): drops that part and takes
/// `2m` off every part above it. The rows keep their order, so the shortened
/// rows above must not drop below the row that follows the hook; the result
/// may still contain repeated parts.
pub fn delete_leg_hook(pi: &Partition, row: usize, m: u32) -> Result<Partition> {
    let step = 2 * m;
    let bad_row = || Error::InvalidHookRow { partition: pi.to_string(), row };
    if row < 2 || row > pi.len() || !pi.part(row).is_multiple_of(2) || pi.part(row) == 0 {
        return Err(bad_row());
    }
    let parts = pi.parts();
    // the first-column cell of each row above must be a full 2m cell
    if parts[..row - 1].iter().any(|&p| p <= step) {
        return Err(bad_row());
    }
    let mut out: Vec<u32> = parts[..row - 1].iter().map(|&p| p - step).collect();
    if row < parts.len() && out[row - 2] < parts[row] {
        return Err(bad_row());
    }
    out.extend_from_slice(&parts[row..]);
    Ok(Partition::from_sorted(out))
}

/// Inserts a leg hook of length `length`: for the largest row count `i`
/// that keeps the result strictly decreasing with every drop (down to the
/// new part's successor) at most `2m`, adds `2m` to the top `i` parts and
/// places `length - 2m*i` as a new part directly below them. The new part
/// is never placed last.
///
/// Returns the new partition and the row the hook now occupies.
pub fn insert_leg_hook(pi: &Partition, length: u32, m: u32) -> Result<(Partition, usize)> {
    let step = 2 * m;
    let no_position = || Error::NoValidPosition { partition: pi.to_string(), length };
    if length < 2 || !length.is_multiple_of(2) {
        return Err(no_position());
    }
    let parts = pi.parts();
    let place = |rows: usize| -> Option<Vec<u32>> {
        let reach = u64::from(step) * rows as u64;
        if reach >= u64::from(length) {
            return None;
        }
        let new_part = length - reach as u32;
        let above = parts[rows - 1] + step;
        let below = parts[rows];
        let fits = new_part > below && new_part - below <= step && above > new_part && above - new_part <= step;
        fits.then(|| {
            let mut out: Vec<u32> = parts[..rows].iter().map(|&p| p + step).collect();
            out.push(new_part);
            out.extend_from_slice(&parts[rows..]);
            out
        })
    };
    let (rows, out) = (1..pi.len()).rev().find_map(|i| place(i).map(|out| (i, out))).ok_or_else(no_position)?;
    Ok((Partition::from_sorted(out), rows + 1))
}

/// The `2m`-modular conjugate of a partition whose parts are all multiples
/// of `2m`: part `j` of the result is `2m` times the number of parts that are
/// at least `2m*j`.
pub fn modular_conjugate(sigma: &Partition, m: u32) -> Result<Partition> {
    if m == 0 {
        return Err(Error::ZeroModulus);
    }
    let step = 2 * m;
    if let Some(&part) = sigma.parts().iter().find(|&&p| p % step != 0 || p == 0) {
        return Err(Error::NotMultipleOfModulus { part, modulus: step });
    }
    let columns = sigma.largest().unwrap_or(0) / step;
    let parts = (1..=columns).map(|j| step * sigma.parts().iter().filter(|&&p| p >= step * j).count() as u32).collect();
    Ok(Partition::from_sorted(parts))
}
