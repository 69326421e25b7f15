//! Exact computations in the Hecke algebras of Gelfand-Graev representations
//! of the adjoint groups `PGL3(q)` (type A2) and `SO5(q)` (type B2).
//!
//! Everything is exact: field elements are table-driven residues, character
//! values live in `Q(ζ_p)`, and group elements are Bruhat normal forms.

#![no_std]

extern crate alloc;

pub mod chevalley;
pub mod cyclo;
pub mod gf;
pub mod hecke;
pub mod intersect;
pub mod oracle;
pub mod rootsys;

pub use chevalley::{Atom, ChevalleyError, Group, GroupElem, Torus, Unipotent};
pub use cyclo::{CycloNum, Rational};
pub use gf::{Field, Fq, FqElem, GfError};
pub use hecke::{BasisElem, Hecke, HeckeError, HeckeVec};
pub use rootsys::{CartanType, Root, RootIdx, RootSystem, WeylElem};
