//! Enumeration of embedded disks by sweeping a vertical interval.
//!
//! A disk meets every column in one interval `[lo, hi]` of strand
//! positions. Starting from its positive corner the interval is pushed left
//! and right event by event; at each crossing touching the boundary the
//! sweep either passes through or turns a (negative) corner. Left ends close
//! smoothly on a left cap, right ends on a right-cusp loop.

use alloc::vec;
use alloc::vec::Vec;

use super::resolve::{Crossing, Event, Quadrant, ResolvedDiagram};
use crate::algebra::{GenId, Monomial};
use crate::diagram::Direction;

/// An embedded disk contributing a term to a differential.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Disk {
    /// Generator at the positive corner.
    pub positive: GenId,
    /// Quadrant covered at the positive corner.
    pub quadrant: Quadrant,
    /// Negative corners in counterclockwise order after the positive one.
    pub negatives: Vec<GenId>,
    /// Quadrant covered at each negative corner, aligned with `negatives`.
    pub negative_quadrants: Vec<Quadrant>,
    /// Product of the orientation signs of all corners.
    pub sign: i64,
    /// Signed base-point counts along the boundary.
    pub texp: Monomial,
}

#[derive(Debug, Clone, Default)]
struct Half {
    /// Corners on the lower boundary as (event index, generator).
    lower: Vec<(usize, GenId)>,
    /// Corners on the upper boundary as (event index, generator).
    upper: Vec<(usize, GenId)>,
    /// Corner closing the far end, if it is a crossing rather than a cap.
    end: Option<(usize, GenId)>,
    sign: i64,
    texp: Vec<i64>,
}

struct Sweeper<'a> {
    res: &'a ResolvedDiagram,
    /// Strand position arrays before each event.
    columns: Vec<Vec<usize>>,
    nvars: usize,
}

impl<'a> Sweeper<'a> {
    fn new(res: &'a ResolvedDiagram) -> Self {
        let mut columns = Vec::with_capacity(res.events.len() + 1);
        let mut cur: Vec<usize> = (0..res.width).collect();
        for ev in &res.events {
            columns.push(cur.clone());
            if let Event::Crossing(c) = ev {
                cur.swap(c.pos, c.pos + 1);
            }
        }
        columns.push(cur);
        Sweeper { res, columns, nvars: res.variables.len() }
    }

    fn base_point(&self, e: usize, var: usize, pos: usize, lo: usize, hi: usize, half: &mut Half) {
        // Counterclockwise: lower boundary runs rightward, upper leftward.
        let dir = self.res.strand_dirs[self.columns[e][pos]];
        if pos == lo {
            half.texp[var] += if dir == Direction::Right { 1 } else { -1 };
        } else if pos == hi {
            half.texp[var] += if dir == Direction::Left { 1 } else { -1 };
        }
    }

    /// Sweep leftward through events `< e` with the interval valid just left of event `e`.
    fn left(&self, e: usize, lo: usize, hi: usize, half: Half, out: &mut Vec<Half>) {
        if e == 0 {
            if lo % 2 == 0 && hi == lo + 1 {
                out.push(half);
            }
            return;
        }
        let idx = e - 1;
        match &self.res.events[idx] {
            Event::BasePoint { var, pos } => {
                let mut h = half;
                self.base_point(idx, *var, *pos, lo, hi, &mut h);
                self.left(idx, lo, hi, h, out);
            }
            Event::Crossing(c) => self.left_crossing(idx, c, lo, hi, half, out),
        }
    }

    fn left_crossing(&self, idx: usize, c: &Crossing, lo: usize, hi: usize, half: Half, out: &mut Vec<Half>) {
        let j = c.pos;
        if j == lo && j + 1 == hi {
            // Both boundaries meet: the disk ends here covering the right quadrant.
            if !c.kind.reeb_positive(Quadrant::Right) {
                let mut h = half;
                h.sign *= c.signs[Quadrant::Right as usize] as i64;
                h.end = Some((idx, c.gen));
                out.push(h);
            }
            return;
        }
        if j + 1 < lo || j > hi || (lo < j && j + 1 < hi) {
            self.left(idx, lo, hi, half, out);
            return;
        }
        if j + 1 == lo {
            if !c.kind.reeb_positive(Quadrant::Top) {
                let mut h = half.clone();
                h.sign *= c.signs[Quadrant::Top as usize] as i64;
                h.lower.push((idx, c.gen));
                self.left(idx, lo, hi, h, out);
            }
            self.left(idx, j, hi, half, out);
        } else if j == lo {
            self.left(idx, j + 1, hi, half, out);
        } else if j == hi {
            if !c.kind.reeb_positive(Quadrant::Bottom) {
                let mut h = half.clone();
                h.sign *= c.signs[Quadrant::Bottom as usize] as i64;
                h.upper.push((idx, c.gen));
                self.left(idx, lo, hi, h, out);
            }
            self.left(idx, lo, j + 1, half, out);
        } else {
            // j + 1 == hi
            self.left(idx, lo, j, half, out);
        }
    }

    /// Sweep rightward through events `> e` with the interval valid just right of event `e`.
    fn right(&self, e: usize, lo: usize, hi: usize, half: Half, out: &mut Vec<Half>) {
        let idx = e + 1;
        if idx == self.res.events.len() {
            if lo % 2 == 0 && hi == lo + 1 {
                out.push(half);
            }
            return;
        }
        match &self.res.events[idx] {
            Event::BasePoint { var, pos } => {
                let mut h = half;
                self.base_point(idx, *var, *pos, lo, hi, &mut h);
                self.right(idx, lo, hi, h, out);
            }
            Event::Crossing(c) => self.right_crossing(idx, c, lo, hi, half, out),
        }
    }

    fn right_crossing(&self, idx: usize, c: &Crossing, lo: usize, hi: usize, half: Half, out: &mut Vec<Half>) {
        let j = c.pos;
        if j == lo && j + 1 == hi {
            if !c.kind.reeb_positive(Quadrant::Left) {
                let mut h = half;
                h.sign *= c.signs[Quadrant::Left as usize] as i64;
                h.end = Some((idx, c.gen));
                out.push(h);
            }
            return;
        }
        if j + 1 < lo || j > hi || (lo < j && j + 1 < hi) {
            self.right(idx, lo, hi, half, out);
            return;
        }
        if j + 1 == lo {
            if !c.kind.reeb_positive(Quadrant::Top) {
                let mut h = half.clone();
                h.sign *= c.signs[Quadrant::Top as usize] as i64;
                h.lower.push((idx, c.gen));
                self.right(idx, lo, hi, h, out);
            }
            self.right(idx, j, hi, half, out);
        } else if j == lo {
            self.right(idx, j + 1, hi, half, out);
        } else if j == hi {
            if !c.kind.reeb_positive(Quadrant::Bottom) {
                let mut h = half.clone();
                h.sign *= c.signs[Quadrant::Bottom as usize] as i64;
                h.upper.push((idx, c.gen));
                self.right(idx, lo, hi, h, out);
            }
            self.right(idx, lo, j + 1, half, out);
        } else {
            self.right(idx, lo, j, half, out);
        }
    }

    fn empty(&self) -> Half {
        Half { sign: 1, texp: vec![0; self.nvars], ..Half::default() }
    }

    fn disks_at(&self, e: usize, c: &Crossing) -> Vec<Disk> {
        let mut disks = Vec::new();
        let i = c.pos;
        let width = self.res.width;
        for q in [Quadrant::Left, Quadrant::Right, Quadrant::Top, Quadrant::Bottom] {
            if !c.kind.reeb_positive(q) {
                continue;
            }
            let s = c.signs[q as usize] as i64;
            match q {
                Quadrant::Left => {
                    let mut halves = Vec::new();
                    self.left(e, i, i + 1, self.empty(), &mut halves);
                    for h in halves {
                        disks.push(self.assemble(e, c, q, s, &h, &self.corner_half(e, c.gen)));
                    }
                }
                Quadrant::Right => {
                    let mut halves = Vec::new();
                    self.right(e, i, i + 1, self.empty(), &mut halves);
                    for h in halves {
                        disks.push(self.assemble(e, c, q, s, &self.corner_half(e, c.gen), &h));
                    }
                }
                Quadrant::Top => {
                    for hi in i + 2..width {
                        let mut ls = Vec::new();
                        self.left(e, i + 1, hi, self.empty(), &mut ls);
                        if ls.is_empty() {
                            continue;
                        }
                        let mut rs = Vec::new();
                        self.right(e, i + 1, hi, self.empty(), &mut rs);
                        for l in &ls {
                            for r in &rs {
                                disks.push(self.assemble(e, c, q, s, l, r));
                            }
                        }
                    }
                }
                Quadrant::Bottom => {
                    for lo in 0..i {
                        let mut ls = Vec::new();
                        self.left(e, lo, i, self.empty(), &mut ls);
                        if ls.is_empty() {
                            continue;
                        }
                        let mut rs = Vec::new();
                        self.right(e, lo, i, self.empty(), &mut rs);
                        for l in &ls {
                            for r in &rs {
                                disks.push(self.assemble(e, c, q, s, l, r));
                            }
                        }
                    }
                }
            }
        }
        disks
    }

    /// The trivial half on the side of a horizontal positive corner.
    fn corner_half(&self, e: usize, gen: GenId) -> Half {
        let mut h = self.empty();
        h.end = Some((e, gen));
        h
    }

    /// Glues a left and a right half at the positive corner (event `pe`) and
    /// reads off the counterclockwise word, sign and exponents.
    fn assemble(&self, pe: usize, c: &Crossing, q: Quadrant, pos_sign: i64, left: &Half, right: &Half) -> Disk {
        // Counterclockwise cyclic corner order: lower corners by increasing
        // x, the right end, upper corners by decreasing x, the left end.
        let mut lower: Vec<(usize, GenId)> = left.lower.iter().chain(right.lower.iter()).copied().collect();
        let mut upper: Vec<(usize, GenId)> = left.upper.iter().chain(right.upper.iter()).copied().collect();
        match q {
            Quadrant::Top => lower.push((pe, c.gen)),
            Quadrant::Bottom => upper.push((pe, c.gen)),
            _ => {}
        }
        lower.sort_by_key(|x| x.0);
        upper.sort_by_key(|x| core::cmp::Reverse(x.0));
        let mut cycle: Vec<(usize, GenId, Quadrant)> = lower.iter().map(|&(e, g)| (e, g, Quadrant::Top)).collect();
        cycle.extend(right.end.map(|(e, g)| (e, g, Quadrant::Left)));
        cycle.extend(upper.iter().map(|&(e, g)| (e, g, Quadrant::Bottom)));
        cycle.extend(left.end.map(|(e, g)| (e, g, Quadrant::Right)));
        let start = cycle.iter().position(|x| x.0 == pe).expect("positive corner present");
        let n = cycle.len();
        let rest: Vec<(usize, GenId, Quadrant)> = (1..n).map(|k| cycle[(start + k) % n]).collect();
        let negatives = rest.iter().map(|x| x.1).collect();
        let negative_quadrants = rest.iter().map(|x| x.2).collect();
        let texp: Vec<i64> = (0..self.nvars).map(|v| left.texp[v] + right.texp[v]).collect();
        Disk {
            positive: c.gen,
            quadrant: q,
            negatives,
            negative_quadrants,
            sign: pos_sign * left.sign * right.sign,
            texp: Monomial::from_exponents(texp),
        }
    }
}

/// All disks with positive corner at `gen`.
pub fn enumerate_disks(res: &ResolvedDiagram, gen: GenId) -> Vec<Disk> {
    let sw = Sweeper::new(res);
    for (e, ev) in res.events.iter().enumerate() {
        if let Event::Crossing(c) = ev {
            if c.gen == gen {
                return sw.disks_at(e, c);
            }
        }
    }
    Vec::new()
}

/// Disks for every generator, indexed by generator.
pub fn enumerate_all_disks(res: &ResolvedDiagram) -> Vec<Vec<Disk>> {
    let sw = Sweeper::new(res);
    let mut out = vec![Vec::new(); res.generators.len()];
    for (e, ev) in res.events.iter().enumerate() {
        if let Event::Crossing(c) = ev {
            out[c.gen] = sw.disks_at(e, c);
        }
    }
    out
}
