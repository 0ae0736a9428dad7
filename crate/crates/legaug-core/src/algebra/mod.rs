//! The noncommutative free unital algebra over `Z[t_1^{±1},…,t_s^{±1}]`.
//!
//! Generators are plain indices ([`GenId`]); names only matter when an
//! element is printed or parsed. Terms are kept in a canonical order —
//! words shortest first and then lexicographically by generator index,
//! monomials by exponent sequence — so equal elements serialize
//! identically.

pub mod field;

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::error::Error;
pub use field::{FieldSpec, FieldValue};

/// Index of a generator inside its DGA.
pub type GenId = usize;

/// A Laurent monomial `t_1^{e_1}⋯t_s^{e_s}`, stored without trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<i64>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    /// `t_var^exp`.
    pub fn var(var: usize, exp: i64) -> Self {
        let mut v = alloc::vec![0; var + 1];
        v[var] = exp;
        Monomial::from_exponents(v)
    }

    pub fn from_exponents(mut v: Vec<i64>) -> Self {
        while v.last() == Some(&0) {
            v.pop();
        }
        Monomial(v)
    }

    pub fn exponent(&self, var: usize) -> i64 {
        self.0.get(var).copied().unwrap_or(0)
    }

    pub fn exponents(&self) -> &[i64] {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let n = self.0.len().max(other.0.len());
        Monomial::from_exponents((0..n).map(|i| self.exponent(i) + other.exponent(i)).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        let n = self.0.len().max(other.0.len());
        for i in 0..n {
            match self.exponent(i).cmp(&other.exponent(i)) {
                Ordering::Equal => {}
                o => return o,
            }
        }
        Ordering::Equal
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A word in the generators; the empty word is the unit.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(pub Vec<GenId>);

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A finite sum of `coefficient · monomial · word` terms in canonical form.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct AlgebraElement {
    terms: BTreeMap<(Word, Monomial), i64>,
}

impl AlgebraElement {
    pub fn zero() -> Self {
        AlgebraElement::default()
    }

    pub fn one() -> Self {
        AlgebraElement::term(1, Monomial::one(), Vec::new())
    }

    pub fn generator(g: GenId) -> Self {
        AlgebraElement::term(1, Monomial::one(), alloc::vec![g])
    }

    pub fn term(coef: i64, mono: Monomial, word: Vec<GenId>) -> Self {
        let mut e = AlgebraElement::zero();
        e.add_term(coef, mono, word);
        e
    }

    /// Adds `coef · mono · word` in place, merging and dropping zeros.
    pub fn add_term(&mut self, coef: i64, mono: Monomial, word: Vec<GenId>) {
        if coef == 0 {
            return;
        }
        let key = (Word(word), mono);
        let entry = self.terms.entry(key.clone()).or_insert(0);
        *entry += coef;
        if *entry == 0 {
            self.terms.remove(&key);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical order as `(coefficient, monomial, word)`.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &Monomial, &[GenId])> {
        self.terms.iter().map(|((w, m), c)| (*c, m, w.0.as_slice()))
    }

    pub fn add(&self, other: &AlgebraElement) -> AlgebraElement {
        let mut out = self.clone();
        out.add_assign(other);
        out
    }

    pub fn add_assign(&mut self, other: &AlgebraElement) {
        for (c, m, w) in other.terms() {
            self.add_term(c, m.clone(), w.to_vec());
        }
    }

    pub fn scale(&self, k: i64) -> AlgebraElement {
        let mut out = AlgebraElement::zero();
        for (c, m, w) in self.terms() {
            out.add_term(c * k, m.clone(), w.to_vec());
        }
        out
    }

    pub fn neg(&self) -> AlgebraElement {
        self.scale(-1)
    }

    pub fn sub(&self, other: &AlgebraElement) -> AlgebraElement {
        self.add(&other.neg())
    }

    /// Product: monomials multiply (they are central), words concatenate.
    pub fn mul(&self, other: &AlgebraElement) -> AlgebraElement {
        let mut out = AlgebraElement::zero();
        for (c1, m1, w1) in self.terms() {
            for (c2, m2, w2) in other.terms() {
                let mut w = w1.to_vec();
                w.extend_from_slice(w2);
                out.add_term(c1 * c2, m1.mul(m2), w);
            }
        }
        out
    }

    /// Generators occurring anywhere in the element.
    pub fn generators(&self) -> impl Iterator<Item = GenId> + '_ {
        self.terms().flat_map(|(_, _, w)| w.iter().copied())
    }

    /// Ring-homomorphic evaluation into a field. `values[g]` is the value of
    /// generator `g`, `tvals[i]` that of `t_i`.
    pub fn evaluate(&self, values: &[FieldValue], tvals: &[FieldValue], field: FieldSpec) -> Result<FieldValue, Error> {
        let mut acc = field.zero();
        for (c, m, w) in self.terms() {
            let mut v = field.from_i64(c);
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let t = tvals.get(i).ok_or_else(|| Error::MissingValue(format!("t{}", i + 1)))?;
                if t.is_zero() {
                    return Err(Error::ZeroUnit(format!("t{}", i + 1)));
                }
                v = v.mul(&t.pow(e).expect("nonzero"));
            }
            for &g in w {
                let x = values.get(g).ok_or_else(|| Error::MissingValue(format!("generator #{g}")))?;
                v = v.mul(x);
            }
            acc = acc.add(&v);
        }
        Ok(acc)
    }

    /// Replaces every `t_i` by `1` and reduces coefficients mod 2.
    pub fn reduce_mod2(&self) -> AlgebraElement {
        let mut out = AlgebraElement::zero();
        for (c, _, w) in self.terms() {
            out.add_term(c, Monomial::one(), w.to_vec());
        }
        let mut reduced = AlgebraElement::zero();
        for (c, m, w) in out.terms() {
            reduced.add_term(c.rem_euclid(2), m.clone(), w.to_vec());
        }
        reduced
    }

    /// Serializes with the given generator and variable names, e.g.
    /// `+1*t^1*[] +1*[c1] -1*[c3,c2,c1]`; the zero element prints as `0`.
    pub fn to_text(&self, gen_names: &[String], var_names: &[String]) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut parts = Vec::with_capacity(self.len());
        for (c, m, w) in self.terms() {
            let mut s = if c < 0 { format!("-{}", -c) } else { format!("+{c}") };
            for (i, &e) in m.exponents().iter().enumerate() {
                if e != 0 {
                    s.push_str(&format!("*{}^{}", var_names[i], e));
                }
            }
            s.push_str("*[");
            let names: Vec<&str> = w.iter().map(|&g| gen_names[g].as_str()).collect();
            s.push_str(&names.join(","));
            s.push(']');
            parts.push(s);
        }
        parts.join(" ")
    }

    /// Inverse of [`AlgebraElement::to_text`].
    pub fn parse(text: &str, gen_names: &[String], var_names: &[String]) -> Result<AlgebraElement, Error> {
        let err = |m: String| Error::Syntax { line: 1, message: m };
        let mut out = AlgebraElement::zero();
        let t = text.trim();
        if t == "0" {
            return Ok(out);
        }
        for tok in t.split_whitespace() {
            let mut factors = tok.split('*');
            let coef_text = factors.next().ok_or_else(|| err(format!("empty term `{tok}`")))?;
            let coef: i64 = coef_text
                .trim_start_matches('+')
                .parse()
                .map_err(|_| err(format!("bad coefficient in `{tok}`")))?;
            let mut exps: Vec<i64> = alloc::vec![0; var_names.len()];
            let mut word = None;
            for f in factors {
                if let Some(inner) = f.strip_prefix('[') {
                    let inner = inner.strip_suffix(']').ok_or_else(|| err(format!("unclosed word in `{tok}`")))?;
                    let mut w = Vec::new();
                    for name in inner.split(',').filter(|s| !s.is_empty()) {
                        let g = gen_names
                            .iter()
                            .position(|n| n == name)
                            .ok_or_else(|| err(format!("unknown generator `{name}`")))?;
                        w.push(g);
                    }
                    word = Some(w);
                } else {
                    let (name, e) = f.split_once('^').ok_or_else(|| err(format!("bad factor `{f}`")))?;
                    let i = var_names
                        .iter()
                        .position(|n| n == name)
                        .ok_or_else(|| err(format!("unknown variable `{name}`")))?;
                    exps[i] += e.parse::<i64>().map_err(|_| err(format!("bad exponent `{e}`")))?;
                }
            }
            let word = word.ok_or_else(|| err(format!("term `{tok}` has no word")))?;
            out.add_term(coef, Monomial::from_exponents(exps), word);
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn names() -> (Vec<String>, Vec<String>) {
        (vec!["c1".into(), "c2".into(), "c3".into()], vec!["t".into()])
    }

    #[test]
    fn noncommutative_product() {
        let (g, v) = names();
        let x = AlgebraElement::generator(0).add(&AlgebraElement::generator(2));
        let y = AlgebraElement::generator(0).sub(&AlgebraElement::generator(2));
        assert_eq!(x.mul(&y).to_text(&g, &v), "+1*[c1,c1] -1*[c1,c3] +1*[c3,c1] -1*[c3,c3]");
    }

    #[test]
    fn text_round_trip() {
        let (g, v) = names();
        let s = "+1*t^1*[] +1*[c1] +1*[c3] +1*[c1,c2,c3]";
        assert_eq!(AlgebraElement::parse(s, &g, &v).unwrap().to_text(&g, &v), s);
    }
}
