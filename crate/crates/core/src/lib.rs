//! Parking functions, distinguished bases of `A_n` and the structures
//! attached to them: braid group actions, exceptional sequences of the
//! equioriented quiver and chains of non-crossing partitions.

pub mod bijection;
pub mod braid;
pub mod dbasis;
pub mod error;
mod linalg;
pub mod noncrossing;
pub mod parking;
pub mod quiver;
pub mod render;
pub mod roots;
pub mod verify;

pub use dbasis::{validate, Arc, ArcDiagram, DistinguishedBasis};
pub use error::{BasisViolation, Error, Result};
pub use parking::{DyckPath, ParkingDiagram, ParkingFunction};
pub use roots::{cartan, seifert, support_relation, Root, SignedRoot, SupportRelation};
