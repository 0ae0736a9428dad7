//! The two constructive directions between augmentations and normal
//! rulings, and undipping.
//!
//! * [`augmentation_to_ruling`] dips the diagram from left to right. At each
//!   crossing it switches the ruling exactly when the current augmentation
//!   value is nonzero and the switch is normal. It then builds the next dip
//!   from the configuration's recipe, transporting the augmentation through
//!   every move.
//! * [`ruling_to_dipped_augmentation`] writes down a dipped augmentation
//!   directly. It augments the switches, places the recipe's b-values and
//!   base points, and solves each `ε(∂b) = 0` for its partner `a`.
//! * [`undip_augmentation`] undoes the dips and base points, giving an
//!   augmentation of the original single-base-point DGA.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::dipped::{pair_order, BpLocation, DippedLayout, ExtraBasePoint, GenKey};
use super::engine::{DippedAugmentation, Stage};
use super::table::{recipe, Place, Recipe, Slice};
use crate::algebra::{FieldSpec, FieldValue};
use crate::augment::{check_augmentation, Augmentation, Provenance};
use crate::dga::{build_ce_dga, BasePoints};
use crate::diagram::FrontDiagram;
use crate::error::Error;
use crate::rulings::{classify, ruling_from_switches, switch_allowed, Configuration, NormalRuling, RulingState};

/// Result of [`augmentation_to_ruling`].
#[derive(Debug, Clone)]
pub struct RulingWitness {
    pub ruling: NormalRuling,
    pub dipped: DippedAugmentation,
    /// Crossings (1-based) whose b-values needed signs other than the
    /// recipe's, with the sign pattern used.
    pub sign_choices: Vec<(usize, Vec<bool>)>,
}

/// Rewrites a single-base-point augmentation for one base point per right
/// cusp, carrying `ε(t)` from the top cusp to the bottom one.
pub fn to_per_cusp(diagram: &FrontDiagram, aug: &Augmentation) -> Result<DippedAugmentation, Error> {
    let mut start = aug.clone();
    let single = start.tvalues.len() == 1;
    if single {
        start.tvalues.resize(diagram.m, aug.field.one());
    }
    let mut st = DippedAugmentation::from_per_cusp(DippedLayout::undipped(diagram), &start)?;
    if single && diagram.m > 1 {
        st.transfer_cusp_value(0, diagram.m - 1)?;
    }
    Ok(st)
}

fn sign_patterns(n: usize) -> Vec<Vec<bool>> {
    (0..1usize << n).map(|mask| (0..n).map(|b| mask >> b & 1 == 1).collect()).collect()
}

fn b_values(
    recipe: &Recipe,
    slice: &Slice,
    c: &FieldValue,
    signs: &[bool],
    prev_a: impl Fn(usize, usize) -> FieldValue,
) -> Result<BTreeMap<(usize, usize), FieldValue>, Error> {
    let mut out = BTreeMap::new();
    for (bv, &neg) in recipe.b_values.iter().zip(signs) {
        let mut v = c.pow(bv.c_exp).ok_or_else(|| Error::Internal(String::from("augmented crossing has value 0")))?;
        for &(q, e) in &bv.factors {
            let (r, s) = slice.pair(q);
            let a = prev_a(r, s);
            v = v.mul(&a.pow(e).ok_or_else(|| Error::Internal(format!("a_{r}_{s} of the previous dip vanishes")))?);
        }
        out.insert(slice.pair(bv.pair), if neg { v.neg() } else { v });
    }
    Ok(out)
}

fn property_r(values: impl Fn(usize, usize) -> FieldValue, width: usize, state: &RulingState) -> bool {
    pair_order(width).into_iter().all(|(r, s)| !values(r, s).is_zero() == (state.partner(r - 1) == s - 1))
}

/// Checks Property (R) for dip `k`: `a^k_{rs}` is nonzero exactly when `r`
/// and `s` are paired.
pub fn check_property_r(d: &DippedAugmentation, k: usize, state: &RulingState) -> Result<(), Error> {
    let width = d.stage.layout.diagram.width();
    if property_r(|r, s| d.value(GenKey::A(k, r, s)), width, state) {
        Ok(())
    } else {
        Err(Error::Internal(format!("Property (R) fails at dip {k}")))
    }
}

fn build_dip(
    st: &mut DippedAugmentation,
    j: usize,
    recipe: &Recipe,
    bvals: &BTreeMap<(usize, usize), FieldValue>,
    slice: Option<&Slice>,
) -> Result<(), Error> {
    st.open_dip(j)?;
    let mut in_dip = Vec::new();
    if let Some(slice) = slice {
        for &(s, place) in &recipe.base_points {
            let label = slice.label(s);
            match place {
                Place::LeftOfDip => {
                    st.add_base_point(j, label, BpLocation::LeftOfDip)?;
                }
                Place::InDip => {
                    let v = st.add_base_point(j, label, BpLocation::InDip { past: 0 })?;
                    in_dip.push((v, label));
                }
            }
        }
    }
    let width = st.stage.layout.diagram.width();
    for &(r, s) in &pair_order(width) {
        let beta = bvals.get(&(r, s)).cloned().unwrap_or_else(|| st.field.zero());
        st.push_pair(j, beta)?;
        for &(v, x) in &in_dip {
            if x == r {
                st.move_base_point(v, BpLocation::InDip { past: s })?;
            }
        }
    }
    Ok(())
}

/// Builds a normal ruling from an augmentation by dipping the diagram.
///
/// `aug` may use one base point or one per right cusp.
pub fn augmentation_to_ruling(diagram: &FrontDiagram, aug: &Augmentation) -> Result<RulingWitness, Error> {
    let kind = if aug.tvalues.len() == 1 { BasePoints::Single } else { BasePoints::PerCusp };
    check_augmentation(&build_ce_dga(diagram, kind), aug)?;
    let mut st = to_per_cusp(diagram, aug)?;
    let width = diagram.width();
    let mut state = RulingState::cusps(width);
    build_dip(&mut st, 0, &Recipe::default(), &BTreeMap::new(), None)?;
    check_property_r(&st, 0, &state)?;
    let orientation = diagram.orientation();
    let mut switches = Vec::new();
    let mut sign_choices = Vec::new();
    for j in 1..=diagram.n() {
        let i = diagram.crossing_pos(j - 1);
        let c = st.value(GenKey::C(j));
        let augmented = !c.is_zero();
        let switch = augmented && switch_allowed(&state, i);
        let config = classify(&state, i, switch, diagram.crossing_sign(j - 1, &orientation) > 0);
        if state.partner(i) == i + 1 {
            return Err(Error::Internal(format!("c{j} joins paired strands")));
        }
        if augmented && config.config == Configuration::PassOther {
            return Err(Error::Internal(format!("c{j} is augmented but cannot switch")));
        }
        let after = if switch { state.clone() } else { state.pass(i) };
        let slice = Slice::new(i, &after);
        let rec = if augmented { recipe(config) } else { Recipe::default() };
        let mut done = None;
        let mut last_err = None;
        for signs in sign_patterns(rec.b_values.len()) {
            let mut trial = st.clone();
            let result = b_values(&rec, &slice, &c, &signs, |r, s| trial.value(GenKey::A(j - 1, r, s)))
                .and_then(|bv| build_dip(&mut trial, j, &rec, &bv, Some(&slice)))
                .and_then(|_| check_property_r(&trial, j, &after));
            match result {
                Ok(()) => {
                    done = Some((trial, signs));
                    break;
                }
                Err(e) => last_err = Some(e),
            }
        }
        let Some((trial, signs)) = done else {
            return Err(last_err.unwrap_or_else(|| Error::Internal(format!("no dip for c{j}"))));
        };
        if signs.iter().any(|&s| s) {
            sign_choices.push((j, signs));
        }
        st = trial;
        if switch {
            switches.push(j - 1);
        }
        state = after;
    }
    let ruling = ruling_from_switches(diagram, aug.rho, &switches)?;
    Ok(RulingWitness { ruling, dipped: st, sign_choices })
}

/// Layout with every dip complete and the recipe's base points at their
/// final places for the crossings with nonzero `cvals`.
fn constructed_layout(diagram: &FrontDiagram, ruling: &NormalRuling, cvals: &[FieldValue]) -> DippedLayout {
    let mut layout = DippedLayout::full(diagram);
    for j in 1..=diagram.n() {
        if cvals[j - 1].is_zero() {
            continue;
        }
        let slice = Slice::new(diagram.crossing_pos(j - 1), &ruling.states[j]);
        for &(s, place) in &recipe(ruling.configs[j - 1]).base_points {
            let strand = slice.label(s);
            let location = match place {
                Place::LeftOfDip => BpLocation::LeftOfDip,
                Place::InDip => BpLocation::InDip { past: strand.saturating_sub(1) },
            };
            let var = layout.variable_count();
            layout.extra.push(ExtraBasePoint { var, dip: j, strand, location });
        }
    }
    layout
}

/// Solves `ε∘∂ = 0` on a fully dipped diagram given the values of the
/// original crossings: b-values from the recipes, a-values from their
/// partners' differentials, right-cusp base points last.
pub fn solve_dipped(
    diagram: &FrontDiagram,
    ruling: &NormalRuling,
    cvals: &[FieldValue],
    field: FieldSpec,
    rho: u32,
) -> Result<DippedAugmentation, Error> {
    let n = diagram.n();
    let m = diagram.m;
    let width = diagram.width();
    if cvals.len() != n {
        return Err(Error::Internal(String::from("one value per crossing expected")));
    }
    for j in 0..n {
        let c = ruling.configs[j];
        if !cvals[j].is_zero() && c.config == Configuration::PassOther {
            return Err(Error::InvalidRuling(format!("c{} is augmented but neither switched nor interlaced", j + 1)));
        }
        if c.is_switch() && cvals[j].is_zero() {
            return Err(Error::InvalidRuling(format!("switch c{} needs a nonzero value", j + 1)));
        }
    }
    let stage = Stage::new(constructed_layout(diagram, ruling, cvals));
    let nvars = stage.layout.variable_count();
    let dga = &stage.dga;
    let mut values = vec![field.zero(); dga.len()];
    let mut known = vec![false; dga.len()];
    let mut tvalues = vec![field.from_i64(-1); nvars];
    let mut tknown = vec![false; nvars];
    for t in tknown.iter_mut().skip(m) {
        *t = true;
    }
    for (g, key) in stage.keys.iter().enumerate() {
        match *key {
            GenKey::C(j) => {
                values[g] = cvals[j - 1].clone();
                known[g] = true;
            }
            GenKey::Q(_) => known[g] = true,
            _ => {}
        }
    }
    let order = pair_order(width);
    let id = |k: GenKey| stage.id(k).expect("full layout");
    let ready = |g: usize, known: &[bool], tknown: &[bool]| {
        dga.differentials[g].terms().all(|(_, mono, w)| {
            w.iter().all(|&x| known[x]) && mono.exponents().iter().enumerate().all(|(i, &e)| e == 0 || tknown[i])
        })
    };
    for j in 0..=n {
        let (rec, slice, c) = if j == 0 || cvals[j - 1].is_zero() {
            (Recipe::default(), None, field.zero())
        } else {
            (
                recipe(ruling.configs[j - 1]),
                Some(Slice::new(diagram.crossing_pos(j - 1), &ruling.states[j])),
                cvals[j - 1].clone(),
            )
        };
        let mut solved = None;
        for signs in sign_patterns(rec.b_values.len()) {
            let mut vals = values.clone();
            let mut kn = known.clone();
            let bvals = match &slice {
                Some(sl) => match b_values(&rec, sl, &c, &signs, |r, s| vals[id(GenKey::A(j - 1, r, s))].clone()) {
                    Ok(b) => b,
                    Err(_) => continue,
                },
                None => BTreeMap::new(),
            };
            for &(r, s) in &order {
                let b = id(GenKey::B(j, r, s));
                vals[b] = bvals.get(&(r, s)).cloned().unwrap_or_else(|| field.zero());
                kn[b] = true;
            }
            let mut pending: Vec<(usize, usize)> = order.clone();
            while !pending.is_empty() {
                let before = pending.len();
                let mut rest = Vec::new();
                for &(r, s) in &pending {
                    let a = id(GenKey::A(j, r, s));
                    let b = id(GenKey::B(j, r, s));
                    let mut u = None;
                    let mut ok = true;
                    let mut acc = field.zero();
                    for (coef, mono, w) in dga.differentials[b].terms() {
                        let mut x = field.from_i64(coef);
                        for (i, &e) in mono.exponents().iter().enumerate() {
                            if e != 0 {
                                if !tknown[i] {
                                    ok = false;
                                }
                                x = x.mul(&tvalues[i].pow(e).expect("unit"));
                            }
                        }
                        if w == [a] {
                            u = Some(x);
                            continue;
                        }
                        if w.iter().any(|&g| !kn[g]) {
                            ok = false;
                            break;
                        }
                        acc = acc.add(&w.iter().fold(x, |p, &g| p.mul(&vals[g])));
                    }
                    match (ok, u) {
                        (true, Some(u)) => {
                            vals[a] = acc.mul(&u.inv().expect("unit")).neg();
                            kn[a] = true;
                        }
                        _ => rest.push((r, s)),
                    }
                }
                if rest.len() == before {
                    return Err(Error::Internal(format!("cannot solve the a-lattice of dip {j}")));
                }
                pending = rest;
            }
            let consistent = (0..dga.len()).filter(|&g| ready(g, &kn, &tknown)).all(|g| {
                dga.differentials[g].evaluate(&vals, &tvalues, field).map(|v| v.is_zero()).unwrap_or(false)
            });
            let state = &ruling.states[j];
            if consistent && property_r(|r, s| vals[id(GenKey::A(j, r, s))].clone(), width, state) {
                solved = Some((vals, kn));
                break;
            }
        }
        let (vals, kn) = solved.ok_or_else(|| Error::Internal(format!("no consistent values for dip {j}")))?;
        values = vals;
        known = kn;
    }
    // right-cusp base points: each appears in some equation with everything
    // else known, to the power ±1
    for _ in 0..m {
        for var in 0..m {
            if tknown[var] {
                continue;
            }
            // prefer the cusp equations ∂q, then anything else
            let mut gens: Vec<usize> = (0..dga.len()).filter(|&g| matches!(stage.keys[g], GenKey::Q(_))).collect();
            gens.extend((0..dga.len()).filter(|&g| !matches!(stage.keys[g], GenKey::Q(_))));
            for g in gens {
                let d = &dga.differentials[g];
                let mut lin = field.zero();
                let mut rest = field.zero();
                let mut exp = 0i64;
                let mut usable = d.terms().any(|(_, mono, _)| mono.exponent(var) != 0);
                for (coef, mono, w) in d.terms() {
                    let mut x = field.from_i64(coef);
                    for (i, &e) in mono.exponents().iter().enumerate() {
                        if e != 0 && i != var {
                            if !tknown[i] {
                                usable = false;
                            }
                            x = x.mul(&tvalues[i].pow(e).expect("unit"));
                        }
                    }
                    if w.iter().any(|&h| !known[h]) {
                        usable = false;
                    }
                    let x = w.iter().fold(x, |p, &h| p.mul(&values[h]));
                    match mono.exponent(var) {
                        0 => rest = rest.add(&x),
                        e => {
                            if exp != 0 && e != exp {
                                usable = false;
                            }
                            exp = e;
                            lin = lin.add(&x);
                        }
                    }
                }
                if !usable || lin.is_zero() || rest.is_zero() || exp.abs() != 1 {
                    continue;
                }
                let power = rest.neg().mul(&lin.inv().expect("nonzero"));
                tvalues[var] = power.pow(exp).expect("nonzero");
                tknown[var] = true;
                break;
            }
        }
    }
    if let Some(var) = tknown.iter().position(|&k| !k) {
        return Err(Error::Internal(format!("cannot solve for t{}", var + 1)));
    }
    let st = DippedAugmentation { stage, field, rho, values, tvalues, moves: Vec::new() };
    st.check()?;
    Ok(st)
}

/// The dipped augmentation of a ruling: value `1` at the switches.
pub fn ruling_to_dipped_augmentation(
    diagram: &FrontDiagram,
    ruling: &NormalRuling,
    field: FieldSpec,
    rho: u32,
) -> Result<DippedAugmentation, Error> {
    let cvals: Vec<FieldValue> =
        (0..diagram.n()).map(|j| if ruling.switches.contains(&j) { field.one() } else { field.zero() }).collect();
    solve_dipped(diagram, ruling, &cvals, field, rho)
}

/// Removes every extra base point and dip and merges the cusp base points,
/// giving an augmentation of the single-base-point DGA of the diagram.
pub fn undip_augmentation(dipped: &DippedAugmentation) -> Result<Augmentation, Error> {
    let mut st = dipped.clone();
    while let Some(var) = st.stage.layout.extra.iter().map(|b| b.var).max() {
        st.retract_base_point(var)?;
    }
    let n = st.stage.layout.diagram.n();
    for k in (0..=n).rev() {
        while st.stage.layout.filled[k].unwrap_or(0) > 0 {
            st.pop_pair(k)?;
        }
    }
    st.merge_cusp_base_points()?;
    let diagram = &st.stage.layout.diagram;
    let plain = build_ce_dga(diagram, BasePoints::Single);
    if plain.gen_names != st.stage.dga.gen_names || plain.differentials != st.stage.dga.differentials {
        return Err(Error::Internal(String::from("undipped DGA differs from the original")));
    }
    let aug = st.augmentation(Provenance::Constructed);
    check_augmentation(&plain, &aug)?;
    Ok(aug)
}

/// For odd ρ and an unoriented ruling: an augmentation of the original DGA
/// with `ε(t) = −x²`.
///
/// Every switch gets `1` except the last negative switch `c_k`, which gets
/// `x^{±1}`. The exponent is the orientation sign of the strand paired with
/// `i+1` for −(a)/−(c) and of strand `i` for −(b) (`+1` when it points
/// right).
pub fn construct_odd_variety_augmentation(
    diagram: &FrontDiagram,
    ruling: &NormalRuling,
    x: &FieldValue,
    rho: u32,
) -> Result<Augmentation, Error> {
    if rho % 2 == 0 {
        return Err(Error::Rho { rho, two_r: 2 * diagram.classical_invariants().r });
    }
    if x.is_zero() {
        return Err(Error::ZeroUnit(String::from("x")));
    }
    let field = x.spec();
    let k = ruling
        .switches
        .iter()
        .copied()
        .filter(|&j| !ruling.configs[j].positive)
        .max()
        .ok_or(Error::OrientedRuling)?;
    let after = &ruling.states[k + 1];
    let i = diagram.crossing_pos(k);
    let strand_pos = match ruling.configs[k].config {
        Configuration::B => i,
        _ => after.partner(i + 1),
    };
    let strand = diagram.slices()[k + 1][strand_pos];
    let exp = if diagram.orientation().dirs[strand] == crate::diagram::Direction::Right { 1 } else { -1 };
    let mut cvals: Vec<FieldValue> =
        (0..diagram.n()).map(|j| if ruling.switches.contains(&j) { field.one() } else { field.zero() }).collect();
    cvals[k] = x.pow(exp).expect("nonzero");
    let dipped = solve_dipped(diagram, ruling, &cvals, field, rho)?;
    let mut aug = undip_augmentation(&dipped)?;
    aug.provenance = Provenance::Constructed;
    let target = x.mul(x).neg();
    if aug.tvalues[0] != target {
        return Err(Error::Internal(format!("constructed ε(t) = {} instead of {target}", aug.tvalues[0])));
    }
    Ok(aug)
}
