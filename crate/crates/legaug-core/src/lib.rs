//! Core combinatorics for Legendrian knots in plat position.
//!
//! The crate turns a plat-position front diagram into its Chekanov–Eliashberg
//! differential graded algebra with Laurent coefficients in base-point
//! variables, enumerates ρ-graded normal rulings and augmentations, and
//! implements the constructive passage between the two through dipped
//! diagrams.
//!
//! Everything here is `no_std` and only needs an allocator; file formats,
//! the command-line front end and parallel drivers live in the companion
//! `legaug` crate.
//!
//! ```
//! use legaug_core::diagram::FrontDiagram;
//! use legaug_core::dga::{build_ce_dga, BasePoints};
//!
//! let trefoil = FrontDiagram::parse("plat 2: 2 2 2").unwrap();
//! let inv = trefoil.classical_invariants();
//! assert_eq!((inv.tb, inv.r), (1, 0));
//!
//! let dga = build_ce_dga(&trefoil, BasePoints::Single);
//! assert_eq!(dga.differential_text("q1"), "+1*t^1*[] +1*[c1] +1*[c3] +1*[c1,c2,c3]");
//! ```
#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod algebra;
pub mod augment;
pub mod correspond;
pub mod dga;
pub mod diagram;
pub mod error;
pub mod lift;
pub mod rulings;

pub use error::Error;
