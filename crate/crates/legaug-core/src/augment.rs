//! ρ-graded augmentations: verification over any field and exhaustive
//! search over prime fields.
//!
//! The search assigns the base-point variables first (over `F*`) and then
//! every generator whose grading is divisible by ρ, checking each
//! `ε(∂g) = 0` as soon as all of its letters have values.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::{FieldSpec, FieldValue, GenId};
use crate::dga::CeDga;
use crate::error::Error;
use crate::rulings::rho_divides;

/// Default cap on the number of candidate assignments.
pub const DEFAULT_BUDGET: u128 = 100_000_000;

/// How an augmentation was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Provenance {
    BruteForce,
    Constructed,
    Lifted,
    Given,
}

/// A map from the DGA to a field, stored by generator and variable index.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Augmentation {
    pub field: FieldSpec,
    pub rho: u32,
    pub values: Vec<FieldValue>,
    pub tvalues: Vec<FieldValue>,
    pub provenance: Provenance,
}

impl Augmentation {
    /// `ε(t_1 ⋯ t_s)`.
    pub fn t_product(&self) -> FieldValue {
        self.tvalues.iter().fold(self.field.one(), |acc, v| acc.mul(v))
    }

    /// Value of the named generator.
    pub fn value_of(&self, dga: &CeDga, name: &str) -> Option<&FieldValue> {
        dga.index_of(name).map(|g| &self.values[g])
    }
}

/// Checks that ρ divides `2r` of the DGA.
pub fn check_rho(dga: &CeDga, rho: u32) -> Result<(), Error> {
    let two_r = dga.two_r();
    if rho_divides(rho, two_r) {
        Ok(())
    } else {
        Err(Error::Rho { rho, two_r })
    }
}

/// Explains why a candidate fails to be an augmentation.
pub fn check_augmentation(dga: &CeDga, aug: &Augmentation) -> Result<(), Error> {
    if aug.values.len() != dga.len() || aug.tvalues.len() != dga.var_names.len() {
        return Err(Error::NotAugmentation(format!(
            "expected {} generator and {} variable values",
            dga.len(),
            dga.var_names.len()
        )));
    }
    for (i, t) in aug.tvalues.iter().enumerate() {
        if t.is_zero() {
            return Err(Error::ZeroUnit(dga.var_names[i].clone()));
        }
    }
    for (g, v) in aug.values.iter().enumerate() {
        if !v.is_zero() && !rho_divides(aug.rho, dga.gradings[g]) {
            return Err(Error::NotAugmentation(format!(
                "{} has grading {} not divisible by {} but value {v}",
                dga.gen_names[g], dga.gradings[g], aug.rho
            )));
        }
    }
    for (g, d) in dga.differentials.iter().enumerate() {
        let v = d.evaluate(&aug.values, &aug.tvalues, aug.field)?;
        if !v.is_zero() {
            return Err(Error::NotAugmentation(format!("ε(∂{}) = {v}", dga.gen_names[g])));
        }
    }
    Ok(())
}

/// Support condition plus `ε∘∂ = 0` on every generator.
pub fn is_augmentation(dga: &CeDga, aug: &Augmentation) -> bool {
    check_augmentation(dga, aug).is_ok()
}

#[derive(Debug, Clone)]
struct Term {
    coef: u64,
    tpow: Vec<(usize, i64)>,
    letters: Vec<usize>,
}

#[derive(Debug, Clone)]
struct Equation {
    terms: Vec<Term>,
}

/// A prepared exhaustive search over `F_p`.
#[derive(Debug, Clone)]
pub struct AugmentationSearch {
    p: u64,
    rho: u32,
    nvars: usize,
    ngens: usize,
    /// Generator of each non-variable unknown.
    eligible: Vec<GenId>,
    /// Equations to check right after unknown `u` is assigned.
    ready: Vec<Vec<Equation>>,
    /// Equations without unknowns; nonzero ones kill the search.
    constant_fail: bool,
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(a: u64, mut e: u64, p: u64) -> u64 {
    let mut base = a % p;
    let mut r = 1 % p;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, base, p);
        }
        base = mul_mod(base, base, p);
        e >>= 1;
    }
    r
}

impl AugmentationSearch {
    pub fn new(dga: &CeDga, field: FieldSpec, rho: u32) -> Result<Self, Error> {
        let FieldSpec::Prime(p) = field else { return Err(Error::InfiniteField) };
        check_rho(dga, rho)?;
        let nvars = dga.var_names.len();
        let eligible: Vec<GenId> = (0..dga.len()).filter(|&g| rho_divides(rho, dga.gradings[g])).collect();
        let mut unknown_of = vec![None; dga.len()];
        for (k, &g) in eligible.iter().enumerate() {
            unknown_of[g] = Some(nvars + k);
        }
        let total = nvars + eligible.len();
        let mut ready: Vec<Vec<Equation>> = vec![Vec::new(); total];
        let mut constant_fail = false;
        for d in &dga.differentials {
            let mut terms = Vec::new();
            let mut last: Option<usize> = None;
            'term: for (c, mono, word) in d.terms() {
                let mut letters = Vec::with_capacity(word.len());
                for &g in word {
                    match unknown_of[g] {
                        Some(u) => letters.push(u),
                        None => continue 'term,
                    }
                }
                let coef = c.rem_euclid(p as i64) as u64;
                if coef == 0 {
                    continue;
                }
                let tpow: Vec<(usize, i64)> =
                    mono.exponents().iter().enumerate().filter(|(_, &e)| e != 0).map(|(i, &e)| (i, e)).collect();
                for &u in letters.iter().chain(tpow.iter().map(|(i, _)| i)) {
                    last = Some(last.map_or(u, |l: usize| l.max(u)));
                }
                terms.push(Term { coef, tpow, letters });
            }
            let eq = Equation { terms };
            match last {
                Some(u) => ready[u].push(eq),
                None => {
                    let s: u64 = eq.terms.iter().fold(0, |acc, t| (acc + t.coef) % p);
                    if s != 0 {
                        constant_fail = true;
                    }
                }
            }
        }
        Ok(AugmentationSearch { p, rho, nvars, ngens: dga.len(), eligible, ready, constant_fail })
    }

    /// Number of candidate assignments, `p^e · (p−1)^s`.
    pub fn space(&self) -> u128 {
        let p = self.p as u128;
        let mut n: u128 = 1;
        for _ in 0..self.eligible.len() {
            n = n.saturating_mul(p);
        }
        for _ in 0..self.nvars {
            n = n.saturating_mul(p - 1);
        }
        n
    }

    pub fn check_budget(&self, budget: u128) -> Result<(), Error> {
        let needed = self.space();
        if needed > budget {
            Err(Error::Budget { needed, budget })
        } else {
            Ok(())
        }
    }

    fn domain(&self, u: usize) -> core::ops::Range<u64> {
        if u < self.nvars {
            1..self.p
        } else {
            0..self.p
        }
    }

    /// Values the first unknown ranges over; the search splits into one
    /// independent branch per value.
    pub fn branches(&self) -> Vec<u64> {
        if self.nvars + self.eligible.len() == 0 {
            vec![0]
        } else {
            self.domain(0).collect()
        }
    }

    /// All augmentations whose first unknown takes the value `first`.
    pub fn run_branch(&self, first: u64) -> Vec<Augmentation> {
        let mut out = Vec::new();
        if self.constant_fail {
            return out;
        }
        let total = self.nvars + self.eligible.len();
        let mut vals = vec![0u64; total];
        let mut inv = vec![0u64; self.nvars];
        if total == 0 {
            self.emit(&vals, &mut out);
            return out;
        }
        self.assign(0, first, &mut vals, &mut inv, &mut out);
        out
    }

    /// The whole search, sequentially.
    pub fn run(&self) -> Vec<Augmentation> {
        self.branches().into_iter().flat_map(|b| self.run_branch(b)).collect()
    }

    fn assign(&self, u: usize, v: u64, vals: &mut [u64], inv: &mut [u64], out: &mut Vec<Augmentation>) {
        vals[u] = v;
        if u < self.nvars {
            inv[u] = pow_mod(v, self.p - 2, self.p);
        }
        if !self.ready[u].iter().all(|eq| self.eval(eq, vals, inv) == 0) {
            return;
        }
        let next = u + 1;
        if next == vals.len() {
            self.emit(vals, out);
            return;
        }
        for w in self.domain(next) {
            self.assign(next, w, vals, inv, out);
        }
    }

    fn eval(&self, eq: &Equation, vals: &[u64], inv: &[u64]) -> u64 {
        let p = self.p;
        let mut acc = 0u64;
        for t in &eq.terms {
            let mut x = t.coef;
            for &(i, e) in &t.tpow {
                let base = if e < 0 { inv[i] } else { vals[i] };
                x = mul_mod(x, pow_mod(base, e.unsigned_abs(), p), p);
            }
            for &l in &t.letters {
                if x == 0 {
                    break;
                }
                x = mul_mod(x, vals[l], p);
            }
            acc = (acc + x) % p;
        }
        acc
    }

    fn emit(&self, vals: &[u64], out: &mut Vec<Augmentation>) {
        let p = self.p;
        let mut values = vec![FieldValue::Mod { value: 0, p }; self.ngens];
        for (k, &g) in self.eligible.iter().enumerate() {
            values[g] = FieldValue::Mod { value: vals[self.nvars + k], p };
        }
        let tvalues = vals[..self.nvars].iter().map(|&value| FieldValue::Mod { value, p }).collect();
        out.push(Augmentation { field: FieldSpec::Prime(p), rho: self.rho, values, tvalues, provenance: Provenance::BruteForce });
    }
}

/// Every ρ-graded augmentation over `F_p`, in lexicographic order of
/// (variable values, generator values).
pub fn enumerate_augmentations(dga: &CeDga, field: FieldSpec, rho: u32, budget: u128) -> Result<Vec<Augmentation>, Error> {
    let search = AugmentationSearch::new(dga, field, rho)?;
    search.check_budget(budget)?;
    Ok(search.run())
}

/// The attained values of `ε(t_1⋯t_s)`, sorted and deduplicated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AugmentationVariety {
    pub rho: u32,
    pub field: FieldSpec,
    pub values: Vec<FieldValue>,
}

impl AugmentationVariety {
    pub fn from_augmentations(field: FieldSpec, rho: u32, augs: &[Augmentation]) -> Self {
        let mut values: Vec<FieldValue> = augs.iter().map(|a| a.t_product()).collect();
        values.sort_by_key(|v| v.to_i64());
        values.dedup();
        AugmentationVariety { rho, field, values }
    }

    /// Residues of the attained values.
    pub fn residues(&self) -> Vec<i64> {
        self.values.iter().filter_map(|v| v.to_i64()).collect()
    }
}

pub fn augmentation_variety(dga: &CeDga, field: FieldSpec, rho: u32, budget: u128) -> Result<AugmentationVariety, Error> {
    let augs = enumerate_augmentations(dga, field, rho, budget)?;
    Ok(AugmentationVariety::from_augmentations(field, rho, &augs))
}
