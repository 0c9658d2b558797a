//! Exact computation of weighted Dynkin diagrams of nilpotent orbits, Satake
//! diagrams of real simple Lie algebras, and the spanning property relating
//! them.

pub mod error;
pub mod nilorbits;
pub mod pairs;
pub mod rational;
pub mod rootcore;
pub mod satake;
pub mod sl2oracle;
pub mod spanverify;

pub use error::{Error, Result};
pub use rational::{Rational, RationalSubspace};
pub use rootcore::{
    build_root_system, iota_fixed_subspace, opposition_involution, DiagramInvolution, Family,
    RootSystemData, SimpleType, WeightedDiagram,
};
