//! Sign-reversing involutions on partitions into distinct parts whose fixed
//! points are counted by the squares, the weights they preserve, and exact
//! truncated q-series for the identities those weights encode.
//!
//! The pieces, bottom up:
//!
//! * [`partition`] and [`family`]: partitions, the families they are drawn
//!   from, membership and enumeration.
//! * [`modular`]: `2m`-modular diagrams and leg hooks.
//! * [`involution`]: the pair involution, its lift to partitions with odd
//!   smallest part, the zero-part variant, and the triangular-core bijection.
//! * [`poly`] and [`weight`]: polynomials in `a`, signed weights, and
//!   exhaustive verification of weighted sums.
//! * [`series`]: truncated power series and both sides of each identity.
//!
//! ```
//! use pinv::involution::psi_do;
//! use pinv::{part, FamilySpec};
//!
//! // the odd-smallest partitions of 9 pair off except for 5+3+1
//! let pdo = FamilySpec::Pdo { m: 1 };
//! let fixed: Vec<_> =
//!     pdo.enumerate(9).unwrap().into_iter().filter(|p| psi_do(p, 1).unwrap().is_fixed()).collect();
//! assert_eq!(fixed, [part![5, 3, 1]]);
//! ```

pub mod error;
pub mod family;
pub mod involution;
pub mod modular;
pub mod partition;
pub mod poly;
pub mod series;
pub mod weight;

pub use error::{Error, Result};
pub use family::FamilySpec;
pub use involution::{CaseTag, Outcome, PairState};
pub use partition::{triangular, Partition, Stats};
pub use poly::APoly;
pub use series::{Identity, Side, TruncatedSeries};
pub use weight::{Theorem, WeightKind};
