//! Finite quandles and racks: validation, inner automorphism groups, orbit
//! and mesh decompositions, subquandle lattices, Smith-normal-form based
//! constructors, and finite probes of towers and limits.
//!
//! Elements are `0..n` internally. Files and command-line sets use 1-based
//! labels.

pub mod cli;
pub mod constructors;
pub mod enumerate;
pub mod error;
pub mod format;
pub mod inner;
pub mod iso;
pub mod lattice;
pub mod limits;
pub mod mesh;
pub mod perm;
pub mod quandle;
pub mod set;

pub use error::{Error, Result};
pub use quandle::{check_homomorphism, validate_table, Direction, ElementMap, FiniteQuandle};
pub use set::ElementSet;

/// Every quandle of order `1..=max_order` up to isomorphism, in order.
pub fn corpus(max_order: usize) -> Result<Vec<FiniteQuandle>> {
    let mut out = Vec::new();
    for n in 1..=max_order {
        out.extend(enumerate::enumerate_quandles(n)?);
    }
    Ok(out)
}
