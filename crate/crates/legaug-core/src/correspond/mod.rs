//! Dipped diagrams and the constructive correspondence between
//! augmentations and normal rulings.

pub mod construct;
pub mod dipped;
pub mod engine;
pub mod table;

pub use construct::{
    augmentation_to_ruling, check_property_r, construct_odd_variety_augmentation, ruling_to_dipped_augmentation, solve_dipped, to_per_cusp,
    undip_augmentation, RulingWitness,
};
pub use dipped::{BpLocation, DippedLayout, ExtraBasePoint, GenKey};
pub use engine::{BasePointMove, DippedAugmentation, Stage};
