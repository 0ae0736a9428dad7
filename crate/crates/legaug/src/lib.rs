//! File formats, parallel drivers and the `legaug` command-line tool on top
//! of [`legaug_core`].
//!
//! Inputs are plat fronts (`plat 2: 2 2 2`) or DGA dumps, either as text or
//! JSON; see [`input::Input::parse`]. Output is text or JSON with sorted
//! keys, and is deterministic.
//!
//! ```
//! use legaug::input::Input;
//!
//! let input = Input::parse("plat 2: 2 2 2").unwrap();
//! let dga = input.dga();
//! let augs = legaug::parallel::enumerate_augmentations(
//!     &dga,
//!     legaug_core::algebra::FieldSpec::Prime(2),
//!     0,
//!     1_000_000,
//!     None,
//! )
//! .unwrap();
//! assert_eq!(augs.len(), 5);
//! ```

pub mod cli;
pub mod error;
pub mod formats;
pub mod input;
pub mod parallel;

pub use error::CliError;
