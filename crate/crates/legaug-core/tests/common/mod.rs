//! Independent oracles shared by the integration tests: exhaustive ruling
//! and augmentation searches, a direct evaluator and a ∂²/degree checker
//! that only read the raw differentials.

#![allow(dead_code)]

use std::collections::BTreeMap;

use legaug_core::algebra::{FieldSpec, FieldValue};
use legaug_core::augment::Augmentation;
use legaug_core::dga::CeDga;
use legaug_core::diagram::FrontDiagram;
use rand::Rng;

/// A random single-component front with `m` in `ms` and `n` in `ns` crossings.
pub fn random_front<R: Rng>(rng: &mut R, ms: std::ops::RangeInclusive<usize>, ns: std::ops::RangeInclusive<usize>) -> FrontDiagram {
    loop {
        let m = rng.gen_range(ms.clone());
        let n = rng.gen_range(ns.clone());
        let word: Vec<usize> = (0..n).map(|_| rng.gen_range(1..2 * m)).collect();
        if let Ok(d) = FrontDiagram::new("random", m, word) {
            return d;
        }
    }
}

pub fn divides(rho: u32, g: i64) -> bool {
    if rho == 0 {
        g == 0
    } else {
        g.rem_euclid(rho as i64) == 0
    }
}

fn interlaced(p: (usize, usize), q: (usize, usize)) -> bool {
    let (a, b) = (p.0.min(p.1), p.0.max(p.1));
    let (c, d) = (q.0.min(q.1), q.0.max(q.1));
    (a < c && c < b && b < d) || (c < a && a < d && d < b)
}

/// Every switch set (0-based, increasing) that gives a ρ-graded normal
/// ruling, found by trying all `2^n` subsets.
pub fn brute_rulings(d: &FrontDiagram, dga: &CeDga, rho: u32) -> Vec<Vec<usize>> {
    let n = d.word.len();
    let w = 2 * d.m;
    let cusps: Vec<usize> = (0..w).map(|x| x ^ 1).collect();
    let mut out = Vec::new();
    'subsets: for mask in 0u64..(1 << n) {
        let mut partner = cusps.clone();
        for j in 0..n {
            let i = d.word[j] - 1;
            if partner[i] == i + 1 {
                continue 'subsets;
            }
            if mask >> j & 1 == 1 {
                let g = dga.gradings[dga.index_of(&format!("c{}", j + 1)).unwrap()];
                if !divides(rho, g) || interlaced((i, partner[i]), (i + 1, partner[i + 1])) {
                    continue 'subsets;
                }
            } else {
                let tau = |x: usize| if x == i { i + 1 } else if x == i + 1 { i } else { x };
                let mut next = vec![0; w];
                for x in 0..w {
                    next[tau(x)] = tau(partner[x]);
                }
                partner = next;
            }
        }
        if partner == cusps {
            out.push((0..n).filter(|j| mask >> j & 1 == 1).collect());
        }
    }
    out
}

fn pow_mod(a: u64, mut e: u64, p: u64) -> u64 {
    let (mut base, mut r) = (a % p, 1 % p);
    while e > 0 {
        if e & 1 == 1 {
            r = r * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    r
}

/// `ε(∂g)` for every generator, over `F_p`, with `t_i ↦ tvals[i]`.
pub fn residues_mod(dga: &CeDga, vals: &[u64], tvals: &[u64], p: u64) -> Vec<u64> {
    dga.differentials
        .iter()
        .map(|d| {
            let mut acc = 0u64;
            for (c, mono, word) in d.terms() {
                let mut x = (c.rem_euclid(p as i64)) as u64;
                for (i, &e) in mono.exponents().iter().enumerate() {
                    let base = if e >= 0 { tvals[i] } else { pow_mod(tvals[i], p - 2, p) };
                    x = x * pow_mod(base, e.unsigned_abs(), p) % p;
                }
                for &g in word {
                    x = x * vals[g] % p;
                }
                acc = (acc + x) % p;
            }
            acc
        })
        .collect()
}

/// Every ρ-graded augmentation over `F_p` by naive enumeration, as
/// `(generator values, variable values)` in canonical residues.
pub fn brute_augmentations(dga: &CeDga, p: u64, rho: u32) -> Vec<(Vec<u64>, Vec<u64>)> {
    let eligible: Vec<usize> = (0..dga.len()).filter(|&g| divides(rho, dga.gradings[g])).collect();
    let nv = dga.var_names.len();
    let mut out = Vec::new();
    let total = (p - 1).pow(nv as u32) * p.pow(eligible.len() as u32);
    for code in 0..total {
        let mut c = code;
        let mut tvals = vec![0u64; nv];
        for t in tvals.iter_mut() {
            *t = c % (p - 1) + 1;
            c /= p - 1;
        }
        let mut vals = vec![0u64; dga.len()];
        for &g in &eligible {
            vals[g] = c % p;
            c /= p;
        }
        if residues_mod(dga, &vals, &tvals, p).iter().all(|&r| r == 0) {
            out.push((vals, tvals));
        }
    }
    out.sort();
    out
}

/// `ε(∂g)` for every generator, over any field, straight from the terms.
pub fn residues(dga: &CeDga, vals: &[FieldValue], tvals: &[FieldValue], field: FieldSpec) -> Vec<FieldValue> {
    dga.differentials
        .iter()
        .map(|d| {
            let mut acc = field.zero();
            for (c, mono, word) in d.terms() {
                let mut x = field.from_i64(c);
                for (i, &e) in mono.exponents().iter().enumerate() {
                    if e != 0 {
                        x = x.mul(&tvals[i].pow(e).expect("unit"));
                    }
                }
                for &g in word {
                    x = x.mul(&vals[g]);
                }
                acc = acc.add(&x);
            }
            acc
        })
        .collect()
}

/// `ε∘∂ = 0`, every variable a unit, and zero on generators whose grading
/// is not divisible by ρ.
pub fn is_augmentation(dga: &CeDga, aug: &Augmentation) -> bool {
    aug.values.len() == dga.len()
        && aug.tvalues.len() == dga.var_names.len()
        && aug.tvalues.iter().all(|t| !t.is_zero())
        && (0..dga.len()).all(|g| aug.values[g].is_zero() || divides(aug.rho, dga.gradings[g]))
        && residues(dga, &aug.values, &aug.tvalues, aug.field).iter().all(|r| r.is_zero())
}

type Key = (Vec<i64>, Vec<usize>);

fn add_term(acc: &mut BTreeMap<Key, i64>, c: i64, mono: Vec<i64>, word: Vec<usize>) {
    let mut mono = mono;
    while mono.last() == Some(&0) {
        mono.pop();
    }
    let e = acc.entry((mono, word)).or_insert(0);
    *e += c;
}

fn mono_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0; a.len().max(b.len())];
    for (i, &x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, &x) in b.iter().enumerate() {
        out[i] += x;
    }
    out
}

/// Checks that every term of `∂g` has degree `|g| − 1` and that `∂²g = 0`,
/// using the signed Leibniz rule on the raw terms. Returns the first
/// offending generator's name.
pub fn check_d_squared_and_degree(dga: &CeDga) -> Result<(), String> {
    for g in 0..dga.len() {
        for (_, mono, word) in dga.differentials[g].terms() {
            let deg: i64 = word.iter().map(|&h| dga.gradings[h]).sum::<i64>()
                + mono.exponents().iter().enumerate().map(|(i, e)| e * dga.var_gradings[i]).sum::<i64>();
            if deg != dga.gradings[g] - 1 {
                return Err(format!("degree of a term of d{}", dga.gen_names[g]));
            }
        }
        let mut acc: BTreeMap<Key, i64> = BTreeMap::new();
        for (c, mono, word) in dga.differentials[g].terms() {
            let mut prefix = 0i64;
            for (k, &h) in word.iter().enumerate() {
                let sign = if prefix.rem_euclid(2) == 0 { 1 } else { -1 };
                for (c2, m2, w2) in dga.differentials[h].terms() {
                    let mut w = word[..k].to_vec();
                    w.extend_from_slice(w2);
                    w.extend_from_slice(&word[k + 1..]);
                    add_term(&mut acc, sign * c * c2, mono_mul(mono.exponents(), m2.exponents()), w);
                }
                prefix += dga.gradings[h];
            }
        }
        if acc.values().any(|&c| c != 0) {
            return Err(format!("d^2 {} != 0", dga.gen_names[g]));
        }
    }
    Ok(())
}
