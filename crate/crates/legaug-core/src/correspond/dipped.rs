//! Dipped diagrams: a dip (a b-lattice followed by an a-lattice) in every
//! gap between consecutive original crossings, plus extra base points.
//!
//! Dip `k` sits just right of `c_k` (dip 0 is left of `c_1`). Inside it every
//! strand `r` is pushed below every lower strand `s` by a type-II move,
//! creating `b^k_{rs}` on the left and `a^k_{rs}` on the right. Strand labels
//! `r, s` are 1-based positions at the slice right after `c_k`. Pairs are
//! created in lexicographic order `(2,1), (3,1), (3,2), (4,1), …`; each new
//! pair is innermost, so the b-lattice lists pairs in creation order and the
//! a-lattice in reverse.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::dga::resolve::{Crossing, CrossingKind, Event, GeneratorInfo, ResolvedDiagram, SignConvention};
use crate::diagram::FrontDiagram;

/// Stable identity of a generator of a (partially) dipped diagram.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GenKey {
    /// Original crossing `c_j`, 1-based.
    C(usize),
    /// Right-cusp crossing `q_k`, 1-based from the top.
    Q(usize),
    /// `b^k_{rs}`.
    B(usize, usize, usize),
    /// `a^k_{rs}`.
    A(usize, usize, usize),
}

impl GenKey {
    pub fn name(&self) -> alloc::string::String {
        match *self {
            GenKey::C(j) => format!("c{j}"),
            GenKey::Q(k) => format!("q{k}"),
            GenKey::B(k, r, s) => format!("b{k}_{r}_{s}"),
            GenKey::A(k, r, s) => format!("a{k}_{r}_{s}"),
        }
    }
}

/// Where an added base point sits relative to its dip.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BpLocation {
    /// Between `c_k` and the b-lattice of dip `k`.
    LeftOfDip,
    /// In the a-lattice of dip `k` on strand `X`, just left of
    /// `a^k_{X,past}` (and so of every `a^k_{X,s}` with `s ≤ past`).
    /// `past = 0`, or a pair not yet created, means right of the dip.
    InDip { past: usize },
}

/// An extra base point.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ExtraBasePoint {
    pub var: usize,
    pub dip: usize,
    /// 1-based strand label at the slice of the dip.
    pub strand: usize,
    pub location: BpLocation,
}

/// All lattice pairs `(r, s)` of a dip on `width` strands in creation order.
pub fn pair_order(width: usize) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for r in 2..=width {
        for s in 1..r {
            out.push((r, s));
        }
    }
    out
}

/// Geometry of a dipped diagram: how many pairs of each dip exist and the
/// extra base points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DippedLayout {
    pub diagram: FrontDiagram,
    /// `filled[k]` pairs of dip `k` exist, a prefix of [`pair_order`];
    /// `None` means the dip has not been started (no gap at all).
    pub filled: Vec<Option<usize>>,
    /// Whether each right cusp carries its own base point `t_k`.
    pub cusp_base_points: bool,
    pub extra: Vec<ExtraBasePoint>,
}

impl DippedLayout {
    /// No dips yet, one base point per right cusp.
    pub fn undipped(diagram: &FrontDiagram) -> Self {
        DippedLayout { diagram: diagram.clone(), filled: vec![None; diagram.n() + 1], cusp_base_points: true, extra: Vec::new() }
    }

    /// Every dip complete.
    pub fn full(diagram: &FrontDiagram) -> Self {
        let total = pair_order(diagram.width()).len();
        DippedLayout { diagram: diagram.clone(), filled: vec![Some(total); diagram.n() + 1], cusp_base_points: true, extra: Vec::new() }
    }

    pub fn variable_count(&self) -> usize {
        let cusp = if self.cusp_base_points { self.diagram.m } else { 1 };
        cusp + self.extra.len()
    }

    /// Builds the resolved diagram and the key of every generator.
    pub fn resolve(&self, conv: &SignConvention) -> (ResolvedDiagram, Vec<GenKey>) {
        let d = &self.diagram;
        let width = d.width();
        let m = d.m;
        let mut keys: Vec<GenKey> = Vec::new();
        let mut events: Vec<Event> = Vec::new();
        let push = |events: &mut Vec<Event>, keys: &mut Vec<GenKey>, key: GenKey, pos: usize, kind| {
            let gen = keys.len();
            keys.push(key);
            events.push(Event::Crossing(Crossing { gen, pos, kind, signs: [1; 4] }));
        };
        let order = pair_order(width);
        for k in 0..=d.n() {
            if k >= 1 {
                let p = d.word[k - 1] - 1;
                push(&mut events, &mut keys, GenKey::C(k), p, CrossingKind::Original);
            }
            let Some(count) = self.filled[k] else { continue };
            for bp in self.extra.iter().filter(|b| b.dip == k && b.location == BpLocation::LeftOfDip) {
                events.push(Event::BasePoint { var: bp.var, pos: bp.strand - 1 });
            }
            let present = &order[..count];
            // label[x] = strand label (1-based) of the strand at position x
            let mut label: Vec<usize> = (1..=width).collect();
            let position_of = |label: &Vec<usize>, r: usize| label.iter().position(|&x| x == r).expect("label");
            for &(r, s) in present {
                let pr = position_of(&label, r);
                let ps = position_of(&label, s);
                debug_assert_eq!(pr, ps + 1);
                push(&mut events, &mut keys, GenKey::B(k, r, s), ps, CrossingKind::LatticeB);
                label.swap(ps, pr);
            }
            let mut in_dip: Vec<&ExtraBasePoint> =
                self.extra.iter().filter(|b| b.dip == k && matches!(b.location, BpLocation::InDip { .. })).collect();
            for &(r, s) in present.iter().rev() {
                in_dip.retain(|bp| {
                    if bp.location == (BpLocation::InDip { past: s }) && bp.strand == r {
                        events.push(Event::BasePoint { var: bp.var, pos: position_of(&label, bp.strand) });
                        false
                    } else {
                        true
                    }
                });
                let pr = position_of(&label, r);
                let ps = position_of(&label, s);
                debug_assert_eq!(ps, pr + 1);
                push(&mut events, &mut keys, GenKey::A(k, r, s), pr, CrossingKind::LatticeA);
                label.swap(ps, pr);
            }
            for bp in in_dip {
                events.push(Event::BasePoint { var: bp.var, pos: bp.strand - 1 });
            }
        }
        let ncusp_vars = if self.cusp_base_points { m } else { 1 };
        for k in 0..m {
            let pos = width - 2 - 2 * k;
            push(&mut events, &mut keys, GenKey::Q(k + 1), pos, CrossingKind::Cusp);
            if k < ncusp_vars {
                events.push(Event::BasePoint { var: k, pos: pos + 1 });
            }
        }
        let nvars = self.variable_count();
        let r = d.classical_invariants().r;
        let variables = (0..nvars)
            .map(|v| GeneratorInfo {
                name: if nvars == 1 { "t".into() } else { format!("t{}", v + 1) },
                grading: if v == 0 { -2 * r } else { 0 },
            })
            .collect();
        let generators = keys.iter().map(|k| GeneratorInfo { name: k.name(), grading: 0 }).collect();
        let mut res = ResolvedDiagram {
            width,
            events,
            strand_dirs: d.orientation().dirs,
            strand_mu: d.maslov_potential().values,
            generators,
            variables,
        };
        res.apply_signs(conv);
        res.apply_gradings();
        (res, keys)
    }
}
