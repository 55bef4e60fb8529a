//! Universal partial words, cycles, families, matrices, and tori.
//!
//! A partial object uses a wildcard symbol (`*` in text form) alongside an
//! alphabet; it is *universal* for a space of words or matrices when every
//! element of that space is covered exactly once. This crate provides:
//!
//! - exact coverage verification for words, cycles, grids, and families
//!   ([`words`], [`grids`], [`families`]);
//! - De Bruijn cycle, alternating-cycle, and perfect-necklace generators
//!   ([`generate`]);
//! - torus constructions from upcycles and from families, a window locator,
//!   and the alphabet-lifting pipeline ([`construct`]);
//! - slicing of upcycles into families and exhaustive slicing enumeration
//!   ([`families`]);
//! - an exhaustive backtracking search for small upmatrices and uptori
//!   ([`search`]);
//! - plain-text and PPM image I/O ([`io`], [`render`]) and a built-in corpus
//!   of published examples ([`fixtures`]).

pub mod construct;
pub mod error;
pub mod families;
pub mod fixtures;
pub mod generate;
pub mod grids;
pub mod io;
pub mod ledger;
pub mod render;
pub mod search;
pub mod words;

pub use error::{Error, Result};
