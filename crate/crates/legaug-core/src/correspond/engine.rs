//! Augmentations carried through the moves that build and dismantle a dipped
//! diagram.
//!
//! A [`DippedAugmentation`] is an augmentation of the DGA of some
//! [`DippedLayout`]. Each move rebuilds the DGA of the new layout and
//! transports the augmentation:
//!
//! * a type-II move creating the pair `b, a` with `∂b = u·a + v` sets
//!   `ε(b) = β`, `ε(a) = −ε(u)⁻¹ε(v)`, and corrects every generator `y` whose
//!   differential mentions `a` (dependencies first) by
//!   `ε(u)⁻¹ Σ coef·ε(t^n)·(−1)^{|Q|}·ε(Q)·β·ε(R)` over the terms `t^n·Q a R`;
//!   the inverse move subtracts the same sum;
//! * moving a base point across a crossing multiplies that crossing's value
//!   by `ε(t)^{±1}`; for `ε(t) = −1` this just negates it. Base points are
//!   moved by walking along the knot, and each move is recorded with the
//!   crossings it changed.
//!
//! Every move finishes by checking `ε∘∂ = 0` on the new DGA.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::dipped::{pair_order, BpLocation, DippedLayout, ExtraBasePoint, GenKey};
use crate::algebra::{AlgebraElement, FieldSpec, FieldValue, GenId, Monomial};
use crate::augment::{check_augmentation, Augmentation, Provenance};
use crate::dga::resolve::{Crossing, Event, ResolvedDiagram, SignConvention};
use crate::dga::CeDga;
use crate::diagram::Direction;
use crate::error::Error;

/// A layout together with its resolution and DGA.
#[derive(Debug, Clone)]
pub struct Stage {
    pub layout: DippedLayout,
    pub res: ResolvedDiagram,
    pub keys: Vec<GenKey>,
    pub dga: CeDga,
    index: BTreeMap<GenKey, GenId>,
}

impl Stage {
    pub fn new(layout: DippedLayout) -> Stage {
        let (res, keys) = layout.resolve(&SignConvention::default());
        let dga = CeDga::from_resolved(&res);
        let index = keys.iter().enumerate().map(|(g, &k)| (k, g)).collect();
        Stage { layout, res, keys, dga, index }
    }

    pub fn id(&self, key: GenKey) -> Option<GenId> {
        self.index.get(&key).copied()
    }

    fn require(&self, key: GenKey) -> Result<GenId, Error> {
        self.id(key).ok_or_else(|| Error::Internal(format!("missing generator {}", key.name())))
    }
}

/// A point on the knot: position `pos` in the gap before the `slot`-th
/// crossing event. Crossing sequences do not change when base points move,
/// so anchors are comparable across layouts that differ only in base points.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct Anchor {
    slot: usize,
    pos: usize,
}

fn crossings(res: &ResolvedDiagram) -> Vec<&Crossing> {
    res.events
        .iter()
        .filter_map(|e| match e {
            Event::Crossing(c) => Some(c),
            Event::BasePoint { .. } => None,
        })
        .collect()
}

fn anchor_of(res: &ResolvedDiagram, var: usize) -> Option<Anchor> {
    let mut slot = 0;
    for e in &res.events {
        match *e {
            Event::Crossing(_) => slot += 1,
            Event::BasePoint { var: v, pos } if v == var => return Some(Anchor { slot, pos }),
            Event::BasePoint { .. } => {}
        }
    }
    None
}

/// Walks along the knot from `from`, starting rightward, until one of
/// `stops` is reached. Returns, per crossing passed, the exponent `σ = ±1`
/// such that the moved DGA is the old one under `c ↦ t^σ c`, and the index
/// of the stop.
///
/// `σ = +1` exactly when "the walk follows the knot's orientation" agrees
/// with "the walker is on the strand running from lower left to upper right".
fn walk(res: &ResolvedDiagram, from: Anchor, stops: &[Anchor]) -> Result<(Vec<(GenId, i64)>, usize), Error> {
    let cs = crossings(res);
    let n = cs.len();
    let mut cur: Vec<usize> = (0..res.width).collect();
    for c in &cs[..from.slot] {
        cur.swap(c.pos, c.pos + 1);
    }
    let follows = res.strand_dirs[cur[from.pos]] == Direction::Right;
    let mut passed = Vec::new();
    let (mut slot, mut x, mut right) = (from.slot, from.pos, true);
    let cross = |c: &Crossing, x: &mut usize, right: bool, passed: &mut Vec<(GenId, i64)>| {
        if *x == c.pos || *x == c.pos + 1 {
            let rising = right == (*x == c.pos);
            passed.push((c.gen, if rising == follows { 1 } else { -1 }));
            *x = if *x == c.pos { c.pos + 1 } else { c.pos };
        }
    };
    let limit = 4 * (n + 2) * (res.width + 1);
    for _ in 0..limit {
        if right {
            if slot == n {
                x ^= 1;
                right = false;
            } else {
                cross(cs[slot], &mut x, true, &mut passed);
                slot += 1;
            }
        } else if slot == 0 {
            x ^= 1;
            right = true;
        } else {
            cross(cs[slot - 1], &mut x, false, &mut passed);
            slot -= 1;
        }
        if let Some(k) = stops.iter().position(|s| s.slot == slot && s.pos == x) {
            return Ok((passed, k));
        }
    }
    Err(Error::Internal(String::from("base-point walk did not terminate")))
}

/// A recorded base-point move.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BasePointMove {
    pub var: usize,
    pub description: String,
    /// Crossings whose value was multiplied by `ε(t_var)^e`, with `e`.
    pub shifts: Vec<(GenKey, i64)>,
}

/// An augmentation of the DGA of a dipped layout.
#[derive(Debug, Clone)]
pub struct DippedAugmentation {
    pub stage: Stage,
    pub field: FieldSpec,
    pub rho: u32,
    pub values: Vec<FieldValue>,
    pub tvalues: Vec<FieldValue>,
    /// Every base-point move made so far.
    pub moves: Vec<BasePointMove>,
}

fn eval_mono(mono: &Monomial, t: &[FieldValue], field: FieldSpec) -> Result<FieldValue, Error> {
    let mut v = field.one();
    for (i, &e) in mono.exponents().iter().enumerate() {
        if e != 0 {
            let ti = t.get(i).ok_or_else(|| Error::MissingValue(format!("t{}", i + 1)))?;
            v = v.mul(&ti.pow(e).ok_or_else(|| Error::ZeroUnit(format!("t{}", i + 1)))?);
        }
    }
    Ok(v)
}

fn eval_word(word: &[GenId], values: &[FieldValue], field: FieldSpec) -> FieldValue {
    word.iter().fold(field.one(), |acc, &g| acc.mul(&values[g]))
}

/// Generators in an order where every generator follows all generators in
/// its differential.
fn topological_order(dga: &CeDga) -> Result<Vec<GenId>, Error> {
    let n = dga.len();
    let deps: Vec<Vec<GenId>> = dga
        .differentials
        .iter()
        .map(|d| {
            let mut v: Vec<GenId> = d.generators().collect();
            v.sort_unstable();
            v.dedup();
            v
        })
        .collect();
    // 0 = unvisited, 1 = on stack, 2 = done
    let mut mark = vec![0u8; n];
    let mut order = Vec::with_capacity(n);
    for root in 0..n {
        if mark[root] != 0 {
            continue;
        }
        let mut stack = vec![(root, 0usize)];
        mark[root] = 1;
        while let Some(&mut (g, ref mut next)) = stack.last_mut() {
            if *next < deps[g].len() {
                let h = deps[g][*next];
                *next += 1;
                match mark[h] {
                    0 => {
                        mark[h] = 1;
                        stack.push((h, 0));
                    }
                    1 => return Err(Error::Internal(String::from("differential is not triangular"))),
                    _ => {}
                }
            } else {
                mark[g] = 2;
                order.push(g);
                stack.pop();
            }
        }
    }
    Ok(order)
}

/// The bigon term `u·a` of `∂b` and the remaining terms `v`.
fn split_bigon(db: &AlgebraElement, a: GenId) -> Result<((i64, Monomial), AlgebraElement), Error> {
    let mut u = None;
    let mut v = AlgebraElement::zero();
    for (c, m, w) in db.terms() {
        if w == [a] {
            if u.is_some() {
                return Err(Error::Internal(String::from("two bigon terms")));
            }
            u = Some((c, m.clone()));
        } else if w.contains(&a) {
            return Err(Error::Internal(String::from("new crossing appears in a longer term of its partner")));
        } else {
            v.add_term(c, m.clone(), w.to_vec());
        }
    }
    let u = u.ok_or_else(|| Error::Internal(String::from("no bigon term")))?;
    Ok((u, v))
}

impl DippedAugmentation {
    /// Starts from an augmentation of the undipped diagram with one base
    /// point per right cusp.
    pub fn from_per_cusp(layout: DippedLayout, aug: &Augmentation) -> Result<Self, Error> {
        let stage = Stage::new(layout);
        let d = DippedAugmentation {
            stage,
            field: aug.field,
            rho: aug.rho,
            values: aug.values.clone(),
            tvalues: aug.tvalues.clone(),
            moves: Vec::new(),
        };
        d.check()?;
        Ok(d)
    }

    /// Value of a generator (zero when it does not exist).
    pub fn value(&self, key: GenKey) -> FieldValue {
        match self.stage.id(key) {
            Some(g) => self.values[g].clone(),
            None => self.field.zero(),
        }
    }

    /// The plain augmentation of the current DGA.
    pub fn augmentation(&self, provenance: Provenance) -> Augmentation {
        Augmentation {
            field: self.field,
            rho: self.rho,
            values: self.values.clone(),
            tvalues: self.tvalues.clone(),
            provenance,
        }
    }

    /// `ε∘∂ = 0` and the grading condition on the current DGA.
    pub fn check(&self) -> Result<(), Error> {
        check_augmentation(&self.stage.dga, &self.augmentation(Provenance::Constructed))
    }

    /// Values carried over to a new stage by generator key.
    fn transfer(&self, new: &Stage) -> Vec<FieldValue> {
        new.keys.iter().map(|&k| self.value(k)).collect()
    }

    fn replace(&mut self, stage: Stage, values: Vec<FieldValue>) {
        self.stage = stage;
        self.values = values;
    }

    /// `ε(u)⁻¹ Σ coef·ε(t^n)·(−1)^{|Q|}·ε(Q)·ε(b)·ε(R)` over the terms of
    /// `∂y` containing `a`, or `None` when there are none.
    fn correction(
        &self,
        dga: &CeDga,
        y: GenId,
        a: GenId,
        b: GenId,
        values: &[FieldValue],
        u_inv: &FieldValue,
    ) -> Result<Option<FieldValue>, Error> {
        let mut total: Option<FieldValue> = None;
        for (c, m, w) in dga.differentials[y].terms() {
            let Some(p) = w.iter().position(|&g| g == a) else { continue };
            if w[p + 1..].contains(&a) {
                return Err(Error::Internal(format!("{} appears twice in a term", dga.gen_names[a])));
            }
            let q_grading: i64 = w[..p].iter().map(|&g| dga.gradings[g]).sum();
            let mut term = self.field.from_i64(if q_grading.rem_euclid(2) == 0 { c } else { -c });
            term = term.mul(&eval_mono(m, &self.tvalues, self.field)?);
            term = term.mul(&eval_word(&w[..p], values, self.field));
            term = term.mul(&values[b]);
            term = term.mul(&eval_word(&w[p + 1..], values, self.field));
            total = Some(match total {
                Some(t) => t.add(&term),
                None => term,
            });
        }
        Ok(total.map(|t| t.mul(u_inv)))
    }

    fn bigon(&self, stage: &Stage, b: GenId, a: GenId) -> Result<(FieldValue, AlgebraElement), Error> {
        let ((c, m), v) = split_bigon(&stage.dga.differentials[b], a)?;
        let eu = self.field.from_i64(c).mul(&eval_mono(&m, &self.tvalues, self.field)?);
        let u_inv = eu.inv().ok_or_else(|| Error::Internal(String::from("bigon coefficient vanishes")))?;
        Ok((u_inv, v))
    }

    /// Opens dip `k` (no crossings yet) so base points can be placed there.
    pub fn open_dip(&mut self, k: usize) -> Result<(), Error> {
        let mut layout = self.stage.layout.clone();
        if layout.filled[k].is_none() {
            layout.filled[k] = Some(0);
            let stage = Stage::new(layout);
            let values = self.transfer(&stage);
            self.replace(stage, values);
        }
        Ok(())
    }

    /// Creates the next pair of dip `k` by a type-II move with `ε(b) = β`.
    /// Returns the pair.
    pub fn push_pair(&mut self, k: usize, beta: FieldValue) -> Result<(usize, usize), Error> {
        let mut layout = self.stage.layout.clone();
        let count = layout.filled[k].unwrap_or(0);
        let order = pair_order(layout.diagram.width());
        let &(r, s) = order.get(count).ok_or_else(|| Error::Internal(format!("dip {k} is already complete")))?;
        layout.filled[k] = Some(count + 1);
        let new = Stage::new(layout);
        let a = new.require(GenKey::A(k, r, s))?;
        let b = new.require(GenKey::B(k, r, s))?;
        let mut values = self.transfer(&new);
        let (u_inv, v) = self.bigon(&new, b, a)?;
        let ev = v.evaluate(&values, &self.tvalues, self.field)?;
        values[a] = ev.mul(&u_inv).neg();
        values[b] = beta;
        for y in topological_order(&new.dga)? {
            if y == a || y == b {
                continue;
            }
            if let Some(corr) = self.correction(&new.dga, y, a, b, &values, &u_inv)? {
                values[y] = values[y].add(&corr);
            }
        }
        self.replace(new, values);
        self.check()?;
        Ok((r, s))
    }

    /// Removes the last pair of dip `k` by the inverse type-II move.
    pub fn pop_pair(&mut self, k: usize) -> Result<(), Error> {
        let mut layout = self.stage.layout.clone();
        let count = layout.filled[k].unwrap_or(0);
        if count == 0 {
            return Err(Error::Internal(format!("dip {k} has no pairs")));
        }
        let (r, s) = pair_order(layout.diagram.width())[count - 1];
        layout.filled[k] = Some(count - 1);
        let a = self.stage.require(GenKey::A(k, r, s))?;
        let b = self.stage.require(GenKey::B(k, r, s))?;
        let (u_inv, _) = self.bigon(&self.stage, b, a)?;
        let mut corrected = self.values.clone();
        for y in 0..self.stage.dga.len() {
            if y == a || y == b {
                continue;
            }
            if let Some(corr) = self.correction(&self.stage.dga, y, a, b, &self.values, &u_inv)? {
                corrected[y] = corrected[y].sub(&corr);
            }
        }
        let old = Stage::new(layout);
        let values = old.keys.iter().map(|&key| corrected[self.stage.index[&key]].clone()).collect();
        self.replace(old, values);
        self.check()
    }

    fn cusp_anchors(&self, res: &ResolvedDiagram) -> Result<Vec<Anchor>, Error> {
        (0..self.stage.layout.diagram.m)
            .map(|k| anchor_of(res, k).ok_or_else(|| Error::Internal(format!("no base point on cusp {}", k + 1))))
            .collect()
    }

    /// Pulls the augmentation back along the move: every passed crossing is
    /// multiplied by `ε(t_var)^{−σ}`. Records the move.
    fn shift(&mut self, passed: &[(GenId, i64)], var: usize, description: String) -> Result<(), Error> {
        let mut total: BTreeMap<GenId, i64> = BTreeMap::new();
        for &(g, e) in passed {
            *total.entry(g).or_insert(0) -= e;
        }
        let tv = self.tvalues[var].clone();
        let mut shifts = Vec::new();
        for (&g, &e) in &total {
            if e != 0 {
                let f = tv.pow(e).ok_or_else(|| Error::ZeroUnit(format!("t{}", var + 1)))?;
                self.values[g] = self.values[g].mul(&f);
                shifts.push((self.stage.keys[g], e));
            }
        }
        self.moves.push(BasePointMove { var, description, shifts });
        Ok(())
    }

    /// Splits a new base point with value `−1` off the right cusp its strand
    /// runs into, negating that cusp's variable, and walks it to `location`.
    /// Returns the new variable's index.
    pub fn add_base_point(&mut self, dip: usize, strand: usize, location: BpLocation) -> Result<usize, Error> {
        let mut layout = self.stage.layout.clone();
        let var = layout.variable_count();
        layout.extra.push(ExtraBasePoint { var, dip, strand, location });
        let new = Stage::new(layout);
        let from = anchor_of(&new.res, var).ok_or_else(|| Error::Internal(String::from("new base point not placed")))?;
        let stops = self.cusp_anchors(&new.res)?;
        let (passed, cusp) = walk(&new.res, from, &stops)?;
        let values = self.transfer(&new);
        self.replace(new, values);
        self.tvalues.push(self.field.from_i64(-1));
        self.tvalues[cusp] = self.tvalues[cusp].neg();
        self.shift(&passed, var, format!("t{} from cusp {} to strand {strand} at dip {dip}", var + 1, cusp + 1))?;
        self.check()?;
        Ok(var)
    }

    /// Moves an extra base point to a new location in its dip.
    pub fn move_base_point(&mut self, var: usize, location: BpLocation) -> Result<(), Error> {
        let mut layout = self.stage.layout.clone();
        let bp = layout
            .extra
            .iter_mut()
            .find(|b| b.var == var)
            .ok_or_else(|| Error::Internal(format!("t{} is not an extra base point", var + 1)))?;
        bp.location = location;
        let (strand, dip) = (bp.strand, bp.dip);
        let to = anchor_of(&self.stage.res, var).ok_or_else(|| Error::Internal(String::from("base point missing")))?;
        let new = Stage::new(layout);
        let from = anchor_of(&new.res, var).ok_or_else(|| Error::Internal(String::from("base point missing")))?;
        let (passed, _) = walk(&new.res, from, &[to])?;
        let values = self.transfer(&new);
        self.replace(new, values);
        self.shift(&passed, var, format!("t{} along strand {strand} within dip {dip}", var + 1))?;
        self.check()
    }

    /// Walks an extra base point back to the right cusp its strand runs
    /// into and merges it with that cusp's base point.
    pub fn retract_base_point(&mut self, var: usize) -> Result<(), Error> {
        let from = anchor_of(&self.stage.res, var).ok_or_else(|| Error::Internal(String::from("base point missing")))?;
        let stops = self.cusp_anchors(&self.stage.res)?;
        let (passed, cusp) = walk(&self.stage.res, from, &stops)?;
        self.shift(&passed, var, format!("t{} back to cusp {}", var + 1, cusp + 1))?;
        let tv = self.tvalues.remove(var);
        self.tvalues[cusp] = self.tvalues[cusp].mul(&tv);
        let mut layout = self.stage.layout.clone();
        layout.extra.retain(|b| b.var != var);
        for b in layout.extra.iter_mut() {
            if b.var > var {
                b.var -= 1;
            }
        }
        let new = Stage::new(layout);
        let values = self.transfer(&new);
        self.replace(new, values);
        self.check()
    }

    /// Moves the value of cusp base point `from` onto cusp base point `to`,
    /// leaving `ε(t_from) = 1`.
    pub fn transfer_cusp_value(&mut self, from: usize, to: usize) -> Result<(), Error> {
        let start = anchor_of(&self.stage.res, from).ok_or_else(|| Error::Internal(String::from("base point missing")))?;
        let end = anchor_of(&self.stage.res, to).ok_or_else(|| Error::Internal(String::from("base point missing")))?;
        let (passed, _) = walk(&self.stage.res, start, &[end])?;
        self.shift(&passed, from, format!("t{} onto t{}", from + 1, to + 1))?;
        self.tvalues[to] = self.tvalues[to].mul(&self.tvalues[from]);
        self.tvalues[from] = self.field.one();
        self.check()
    }

    /// Merges every right-cusp base point into the one on the top cusp.
    /// Needs no extra base points.
    pub fn merge_cusp_base_points(&mut self) -> Result<(), Error> {
        if !self.stage.layout.extra.is_empty() {
            return Err(Error::Internal(String::from("extra base points remain")));
        }
        if !self.stage.layout.cusp_base_points {
            return Ok(());
        }
        for k in 1..self.stage.layout.diagram.m {
            self.transfer_cusp_value(k, 0)?;
        }
        self.tvalues.truncate(1);
        let mut layout = self.stage.layout.clone();
        layout.cusp_base_points = false;
        let new = Stage::new(layout);
        let values = self.transfer(&new);
        self.replace(new, values);
        self.check()
    }
}
