//! What each ruling configuration puts into the dip right after an augmented
//! crossing `c_j`: nonzero b-lattice values and extra base points.
//!
//! Strands are named relative to the slice right after `c_j`: `I` and `I1`
//! are the crossing strands (positions `i`, `i+1`), `L` is paired with `I`
//! and `K` with `I1`. Values are monomials in `ε(c_j)` and the values of
//! the previous dip's a-lattice, `a^{j−1}`, read at the same positions.
//! The signs of b-values are fixed per instance by the Property (R) and
//! `ε∘∂ = 0` checks, trying the listed sign first.

use alloc::vec;
use alloc::vec::Vec;

use crate::rulings::{Configuration, CrossingConfig, RulingState};

/// A strand at the slice of a dip.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Strand {
    I,
    I1,
    L,
    K,
}

/// Where an added base point goes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Place {
    /// Between `c_j` and the b-lattice.
    LeftOfDip,
    /// In the a-lattice, left of every `a^j_{X,s}` of its strand `X`.
    InDip,
}

/// `ε(b^j_{pair}) = ε(c_j)^{c_exp} · Π ε(a^{j−1}_{q})^{e}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BValue {
    pub pair: (Strand, Strand),
    pub c_exp: i64,
    pub factors: Vec<((Strand, Strand), i64)>,
}

/// The dip recipe for one configuration.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Recipe {
    pub b_values: Vec<BValue>,
    pub base_points: Vec<(Strand, Place)>,
}

use Strand::{I, I1, K, L};

/// The recipe for an augmented crossing with the given configuration.
pub fn recipe(config: CrossingConfig) -> Recipe {
    let pos = config.positive;
    let b = |pair, c_exp, factors: Vec<((Strand, Strand), i64)>| BValue { pair, c_exp, factors };
    match config.config {
        Configuration::A => Recipe {
            b_values: vec![b((I1, I), -1, vec![])],
            base_points: if pos {
                vec![(I, Place::LeftOfDip)]
            } else {
                vec![(I1, Place::LeftOfDip), (I1, Place::InDip)]
            },
        },
        Configuration::B => Recipe {
            b_values: vec![b((L, K), -1, vec![((I1, K), 1), ((I, L), -1)]), b((I1, I), -1, vec![])],
            base_points: if pos {
                vec![(I, Place::InDip)]
            } else {
                vec![(K, Place::InDip), (I1, Place::InDip), (I1, Place::InDip)]
            },
        },
        Configuration::C => Recipe {
            b_values: vec![b((L, K), -1, vec![((L, I), 1), ((K, I1), -1)]), b((I1, I), -1, vec![])],
            base_points: if pos {
                vec![(I, Place::InDip)]
            } else {
                vec![(L, Place::InDip), (I, Place::InDip), (I, Place::InDip)]
            },
        },
        Configuration::D | Configuration::PassOther => Recipe::default(),
        Configuration::E => Recipe { b_values: vec![b((L, K), 1, vec![((I, K), 1), ((I1, L), -1)])], base_points: vec![] },
        Configuration::F => Recipe { b_values: vec![b((L, K), 1, vec![((L, I1), 1), ((K, I), -1)])], base_points: vec![] },
    }
}

/// 1-based labels of the named strands at a crossing in position `i`
/// (0-based), given the pairing after the crossing.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Slice {
    pub i: usize,
    pub l: usize,
    pub k: usize,
}

impl Slice {
    pub fn new(i: usize, after: &RulingState) -> Slice {
        Slice { i: i + 1, l: after.partner(i) + 1, k: after.partner(i + 1) + 1 }
    }

    pub fn label(&self, s: Strand) -> usize {
        match s {
            I => self.i,
            I1 => self.i + 1,
            L => self.l,
            K => self.k,
        }
    }

    /// `(r, s)` with `r > s`.
    pub fn pair(&self, p: (Strand, Strand)) -> (usize, usize) {
        let (x, y) = (self.label(p.0), self.label(p.1));
        (x.max(y), x.min(y))
    }
}
