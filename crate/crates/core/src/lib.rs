//! Fusion rings: axiom checking, Frobenius-Perron dimensions, gradings,
//! subrings, isomorphism search, catalog constructions and classification
//! of extensions of rank-two fusion rings.

pub mod catalog;
pub mod classify;
pub mod cli;
pub mod group;
pub mod numerics;
pub mod ring;
pub mod structure;

pub use group::FiniteGroup;
pub use ring::{FusionRing, RingElement, Subring};
