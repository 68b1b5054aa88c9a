//! Combinatorial models for minimal length coset representatives of the
//! affine quotients C~/C, B~/B, B~/D and D~/D: mirrored permutations,
//! abacus diagrams, root lattice points, symmetric cores, bounded
//! partitions and canonical reduced words.

pub mod abacus;
pub mod cores;
pub mod error;
pub mod group;
pub mod oracle;
pub mod peeling;
pub mod perm;
pub mod poset;
pub mod registry;
pub mod render;
pub mod root;

pub use abacus::{Abacus, Position};
pub use cores::{BoxCoord, CorePartition, ResidueValue};
pub use error::{Error, Result};
pub use group::{Family, Generator, GroupContext};
pub use peeling::{BoundedPartition, BoxSet, Offsets, Word};
pub use perm::{DescentClass, MirroredPermutation};
pub use registry::{convert, ElementDescriptor, LengthMethod, Representation};
pub use root::RootPoint;
