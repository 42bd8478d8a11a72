//! Lecture hall partitions, balanced flush abacus diagrams and bounded
//! partitions, with the weight-preserving bijections between them.
//!
//! ```
//! use lecture_hall::{abacus, LectureHallPartition};
//!
//! let lambda = LectureHallPartition::new(vec![0, 1, 4, 8, 14, 30]).unwrap();
//! let a = abacus::encode(&lambda).unwrap();
//! assert_eq!(a.defining_beads(), &[-2, 2, 8, 12, 16, 30]);
//! let p = abacus::to_bounded(&a);
//! assert_eq!(p.parts(), &[2, 4, 6, 7, 8, 9, 9, 12]);
//! assert_eq!(p.weight(), lambda.weight());
//! ```

pub mod abacus;
pub mod cli;
pub mod enumerate;
pub mod oracle;
pub mod partition;
pub mod render;
pub mod series;

pub use abacus::{AbacusDiagram, AbacusError, PlacementError, PositionGeometry};
pub use enumerate::{enumerate_bounded, enumerate_lecture_hall};
pub use partition::{
    ceiling_stats, is_bounded, is_lecture_hall, weight, BoundedPartition, CeilingVector, LectureHallPartition,
    PartitionError,
};
pub use series::{Bounds, Exponent, TruncatedSeries};
