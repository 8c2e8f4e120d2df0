//! Mahonian statistics on words and partitions: Foata's bijection, ballot
//! and excess statistics, rank-based partition maps, generating functions,
//! and a catalogue of checkable equidistribution results.

pub mod bijections;
pub mod error;
pub mod family;
pub mod foata;
pub mod genfun;
pub mod partition;
pub mod poly;
pub mod verify;
pub mod word;

pub use error::{Error, Result};
pub use family::Family;
pub use foata::{phi, phi_inverse};
pub use partition::{Partition, PartitionSet};
pub use poly::{LaurentPoly, Var};
pub use word::{Composition, Letter, Word};
