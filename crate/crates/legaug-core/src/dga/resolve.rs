//! The Lagrangian resolution of a plat front as a left-to-right sequence of
//! events between the smoothed left cusps and the looped right cusps.
//!
//! The same representation carries dipped diagrams: lattice crossings are
//! just more crossing events, and extra base points are more marks.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::algebra::GenId;
use crate::diagram::{Direction, FrontDiagram};

/// The four quadrants at a crossing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Quadrant {
    Left = 0,
    Right = 1,
    Top = 2,
    Bottom = 3,
}

/// Where a crossing came from; this fixes its Reeb signs and grading rule.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CrossingKind {
    /// A crossing of the front.
    Original,
    /// The crossing in the loop replacing a right cusp.
    Cusp,
    /// Left crossing of a dip pair (strand pushed down).
    LatticeB,
    /// Right crossing of a dip pair (strand coming back up).
    LatticeA,
}

impl CrossingKind {
    /// Whether a disk corner in quadrant `q` is a positive (Reeb) corner.
    pub fn reeb_positive(self, q: Quadrant) -> bool {
        let horizontal = matches!(q, Quadrant::Left | Quadrant::Right);
        match self {
            CrossingKind::LatticeA => !horizontal,
            _ => horizontal,
        }
    }

    fn index(self) -> usize {
        match self {
            CrossingKind::Original => 0,
            CrossingKind::Cusp => 1,
            CrossingKind::LatticeB => 2,
            CrossingKind::LatticeA => 3,
        }
    }
}

/// A crossing event: strands at positions `pos` and `pos+1` swap.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Crossing {
    pub gen: GenId,
    pub pos: usize,
    pub kind: CrossingKind,
    /// Orientation sign of each quadrant, indexed by [`Quadrant`].
    pub signs: [i8; 4],
}

/// One column of the resolved diagram.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Event {
    Crossing(Crossing),
    /// Base point for variable `var` on the strand at position `pos`.
    BasePoint { var: usize, pos: usize },
}

/// Orientation signs per crossing class.
///
/// A class is the crossing kind, whether the two strands point the same
/// horizontal way, and the direction of the strand entering from the lower
/// left. Entries are indexed by [`Quadrant`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignConvention {
    pub table: [[[[i8; 4]; 2]; 2]; 4],
}

impl SignConvention {
    pub fn signs(&self, kind: CrossingKind, same_direction: bool, lower_dir: Direction) -> [i8; 4] {
        let s = if same_direction { 0 } else { 1 };
        let d = if lower_dir == Direction::Right { 0 } else { 1 };
        self.table[kind.index()][s][d]
    }

    pub fn set(&mut self, kind: CrossingKind, same_direction: bool, lower_dir: Direction, signs: [i8; 4]) {
        let s = if same_direction { 0 } else { 1 };
        let d = if lower_dir == Direction::Right { 0 } else { 1 };
        self.table[kind.index()][s][d] = signs;
    }

    /// Every quadrant `+1`.
    pub fn trivial() -> Self {
        SignConvention { table: [[[[1; 4]; 2]; 2]; 4] }
    }
}

impl Default for SignConvention {
    fn default() -> Self {
        super::signs::standard()
    }
}

/// Generator metadata carried alongside the events.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorInfo {
    pub name: String,
    pub grading: i64,
}

/// A resolved (possibly dipped) plat diagram.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResolvedDiagram {
    /// Number of strand positions.
    pub width: usize,
    /// Columns from left to right, after the left caps and before the right caps.
    pub events: Vec<Event>,
    /// Direction of each strand, indexed by its left position.
    pub strand_dirs: Vec<Direction>,
    /// Maslov potential of each strand, indexed by its left position.
    pub strand_mu: Vec<i64>,
    /// Generators indexed by [`GenId`].
    pub generators: Vec<GeneratorInfo>,
    /// Base-point variable names and gradings.
    pub variables: Vec<GeneratorInfo>,
}

/// Where the base points of a plain resolution go.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BasePoints {
    /// One base point `t` on the loop of the top right cusp.
    Single,
    /// Base points `t1..tm` on the right-cusp loops, numbered top to bottom.
    PerCusp,
}

impl ResolvedDiagram {
    /// Strand occupying each position after the first `upto` events.
    pub fn positions_before(&self, upto: usize) -> Vec<usize> {
        let mut cur: Vec<usize> = (0..self.width).collect();
        for ev in &self.events[..upto] {
            if let Event::Crossing(c) = ev {
                cur.swap(c.pos, c.pos + 1);
            }
        }
        cur
    }

    /// Crossing-event index of each generator.
    pub fn event_of(&self) -> Vec<usize> {
        let mut out = alloc::vec![usize::MAX; self.generators.len()];
        for (e, ev) in self.events.iter().enumerate() {
            if let Event::Crossing(c) = ev {
                out[c.gen] = e;
            }
        }
        out
    }

    /// Sign class of every generator: kind, whether both strands point the
    /// same way, and the direction of the strand entering from the lower left.
    pub fn crossing_classes(&self) -> Vec<(CrossingKind, bool, Direction)> {
        let mut out = alloc::vec![(CrossingKind::Original, true, Direction::Right); self.generators.len()];
        let mut cur: Vec<usize> = (0..self.width).collect();
        for ev in &self.events {
            if let Event::Crossing(c) = ev {
                let lo = cur[c.pos];
                let hi = cur[c.pos + 1];
                out[c.gen] = (c.kind, self.strand_dirs[lo] == self.strand_dirs[hi], self.strand_dirs[lo]);
                cur.swap(c.pos, c.pos + 1);
            }
        }
        out
    }

    /// Recomputes every crossing's orientation signs from a convention.
    pub fn apply_signs(&mut self, conv: &SignConvention) {
        let mut cur: Vec<usize> = (0..self.width).collect();
        for ev in self.events.iter_mut() {
            if let Event::Crossing(c) = ev {
                let lo = cur[c.pos];
                let hi = cur[c.pos + 1];
                let same = self.strand_dirs[lo] == self.strand_dirs[hi];
                c.signs = conv.signs(c.kind, same, self.strand_dirs[lo]);
                cur.swap(c.pos, c.pos + 1);
            }
        }
    }

    /// Recomputes every crossing's grading from the strand potentials.
    pub fn apply_gradings(&mut self) {
        let mut cur: Vec<usize> = (0..self.width).collect();
        for ev in &self.events {
            if let Event::Crossing(c) = ev {
                let lo = self.strand_mu[cur[c.pos]];
                let hi = self.strand_mu[cur[c.pos + 1]];
                self.generators[c.gen].grading = match c.kind {
                    CrossingKind::Original | CrossingKind::LatticeB | CrossingKind::Cusp => hi - lo,
                    CrossingKind::LatticeA => lo - hi - 1,
                };
                cur.swap(c.pos, c.pos + 1);
            }
        }
    }
}

/// Name of the base-point variable `var` when there are `count` of them.
pub fn variable_name(var: usize, count: usize) -> String {
    if count == 1 {
        String::from("t")
    } else {
        format!("t{}", var + 1)
    }
}

/// Ng's resolution of a plat front: crossings `c1..cn`, then for each right
/// cusp (top to bottom) its crossing `q_k` followed by the loop, with the
/// requested base points on the loops.
pub fn resolve(diagram: &FrontDiagram, base_points: BasePoints, conv: &SignConvention) -> ResolvedDiagram {
    let m = diagram.m;
    let width = diagram.width();
    let orientation = diagram.orientation();
    let mu = diagram.maslov_potential();
    let r = diagram.classical_invariants().r;
    let mut generators = Vec::new();
    let mut events = Vec::new();
    for (j, &p) in diagram.word.iter().enumerate() {
        generators.push(GeneratorInfo { name: format!("c{}", j + 1), grading: 0 });
        events.push(Event::Crossing(Crossing { gen: j, pos: p - 1, kind: CrossingKind::Original, signs: [1; 4] }));
    }
    let nvars = match base_points {
        BasePoints::Single => 1,
        BasePoints::PerCusp => m,
    };
    for k in 0..m {
        let gen = generators.len();
        generators.push(GeneratorInfo { name: format!("q{}", k + 1), grading: 1 });
        let pos = width - 2 - 2 * k;
        events.push(Event::Crossing(Crossing { gen, pos, kind: CrossingKind::Cusp, signs: [1; 4] }));
        if k < nvars {
            events.push(Event::BasePoint { var: k, pos: pos + 1 });
        }
    }
    let variables = (0..nvars)
        .map(|v| GeneratorInfo { name: variable_name(v, nvars), grading: if v == 0 { -2 * r } else { 0 } })
        .collect();
    let mut res = ResolvedDiagram {
        width,
        events,
        strand_dirs: orientation.dirs.clone(),
        strand_mu: mu.values.clone(),
        generators,
        variables,
    };
    res.apply_signs(conv);
    res.apply_gradings();
    res
}
