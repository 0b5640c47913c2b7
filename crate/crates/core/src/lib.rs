//! Finite-structure workbench for ordered Ehresmann semigroups and
//! Ehresmann-ordered categories.
//!
//! Every structure lives on a carrier `0..n` of canonical indices; display
//! names are metadata. The crate is split along the two sides of the
//! correspondence:
//!
//! * [`semigroup`] holds biunary semigroups `(S, ·, D, R)` and decides the
//!   equational and quasi-equational laws on them.
//! * [`order`] and [`orders`] hold partial orders, the derived orders
//!   `≤ₗ`, `≤ᵣ`, `≤ₑ`, the Ehresmann-order axioms and the exhaustive order search.
//! * [`category`] holds finite ordered categories, restriction and
//!   corestriction, the biaction, the pseudoproduct and the round trip.
//! * [`zoo`] builds named examples, relation generators and the exhaustive
//!   enumerator of small Ehresmann semigroups.
//! * [`format`] reads and writes the line-oriented structure file format.
//! * [`sweep`] runs the theorem sweeps over enumerated structures.
//!
//! Every check returns a [`LawReport`]; a failing report carries the
//! lexicographically least failing instance as its witness.

pub mod category;
pub mod error;
pub mod format;
pub mod law;
pub mod order;
pub mod orders;
pub mod par;
pub mod semigroup;
pub mod sweep;
pub mod zoo;

pub use category::{Biaction, Category, CategoryLaw, FunctorCandidate, OrderedCategory};
pub use error::{Error, Result};
pub use law::LawReport;
pub use order::PartialOrder;
pub use orders::{DerivedOrders, OrderLaw, OrderedSemigroup};
pub use semigroup::{FiniteBiunarySemigroup, HomCandidate, ProjectionSet, SemigroupLaw};
pub use zoo::ZooEntry;
