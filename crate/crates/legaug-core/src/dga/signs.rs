//! The orientation-sign convention used throughout the crate.
//!
//! Signs depend on the crossing kind and on whether its two strands point
//! the same horizontal way ("positive" crossings). Entries are ordered
//! `[Left, Right, Top, Bottom]`.

use super::resolve::{CrossingKind, SignConvention};
use crate::diagram::Direction;

const PLAIN: [i8; 4] = [1, 1, 1, 1];
const BOTTOM: [i8; 4] = [1, 1, 1, -1];
const RIGHT: [i8; 4] = [1, -1, 1, 1];

/// The standard convention: positive original and b-lattice crossings are
/// shaded on the bottom quadrant; negative b-lattice crossings and positive
/// a-lattice crossings on the right quadrant; all other quadrants carry `+1`.
pub fn standard() -> SignConvention {
    let mut conv = SignConvention::trivial();
    for dir in [Direction::Right, Direction::Left] {
        conv.set(CrossingKind::Original, true, dir, BOTTOM);
        conv.set(CrossingKind::Original, false, dir, PLAIN);
        conv.set(CrossingKind::Cusp, true, dir, PLAIN);
        conv.set(CrossingKind::Cusp, false, dir, PLAIN);
        conv.set(CrossingKind::LatticeB, true, dir, BOTTOM);
        conv.set(CrossingKind::LatticeB, false, dir, RIGHT);
        conv.set(CrossingKind::LatticeA, true, dir, RIGHT);
        conv.set(CrossingKind::LatticeA, false, dir, PLAIN);
    }
    conv
}
