//! Exact enumeration of doubly periodic lozenge tilings of the triangular
//! lattice.
//!
//! Points of the ambient lattice are integer pairs `(λ1, λ2)` meaning
//! `λ1·u + λ2·v`. A sublattice of periods is given by a [`Basis`]; every
//! computation canonicalizes it to its triangular [`HnfForm`] and works on
//! the `a·b` cells of the fundamental domain.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

mod error;

pub mod flips;
pub mod heights;
pub mod kasteleyn;
pub mod lattice;
pub mod poly;
pub mod quotients;
pub mod tiling;
pub mod typegeom;

pub use crate::error::{Error, Result};
pub use crate::heights::{Fingerprint, HeightField, Step};
pub use crate::lattice::{Basis, Cell, HnfForm, Point};
pub use crate::poly::{Monomial, Poly, PolyMatrix};
pub use crate::tiling::{Orientation, Tiling, TilingType};
pub use crate::typegeom::FundamentalTriangle;
