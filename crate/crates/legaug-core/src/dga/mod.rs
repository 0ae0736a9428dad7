//! The Chekanov–Eliashberg DGA of a resolved plat diagram.

pub mod disks;
pub mod resolve;
pub mod signs;

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::algebra::{AlgebraElement, GenId, Monomial};
use crate::diagram::FrontDiagram;
use crate::error::Error;
pub use disks::{enumerate_all_disks, enumerate_disks, Disk};
pub use resolve::{resolve, BasePoints, CrossingKind, Event, GeneratorInfo, Quadrant, ResolvedDiagram, SignConvention};

/// A semi-free DGA over `Z[t_1^{±1},…,t_s^{±1}]` with integer gradings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CeDga {
    pub gen_names: Vec<String>,
    pub gradings: Vec<i64>,
    pub var_names: Vec<String>,
    pub var_gradings: Vec<i64>,
    /// `differentials[g]` is `∂g`.
    pub differentials: Vec<AlgebraElement>,
}

/// A generator on which `∂²` fails, with the surviving terms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DSquaredWitness {
    pub generator: GenId,
    pub residue: AlgebraElement,
}

impl CeDga {
    /// Assembles the DGA from the disks of a resolved diagram.
    pub fn from_resolved(res: &ResolvedDiagram) -> CeDga {
        let all = enumerate_all_disks(res);
        let differentials = all
            .iter()
            .map(|disks| {
                let mut d = AlgebraElement::zero();
                for disk in disks {
                    d.add_term(disk.sign, disk.texp.clone(), disk.negatives.clone());
                }
                d
            })
            .collect();
        CeDga {
            gen_names: res.generators.iter().map(|g| g.name.clone()).collect(),
            gradings: res.generators.iter().map(|g| g.grading).collect(),
            var_names: res.variables.iter().map(|v| v.name.clone()).collect(),
            var_gradings: res.variables.iter().map(|v| v.grading).collect(),
            differentials,
        }
    }

    pub fn len(&self) -> usize {
        self.gen_names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gen_names.is_empty()
    }

    pub fn index_of(&self, name: &str) -> Option<GenId> {
        self.gen_names.iter().position(|n| n == name)
    }

    /// Serialized differential of the named generator.
    pub fn differential_text(&self, name: &str) -> String {
        match self.index_of(name) {
            Some(g) => self.element_text(&self.differentials[g]),
            None => String::new(),
        }
    }

    pub fn element_text(&self, x: &AlgebraElement) -> String {
        x.to_text(&self.gen_names, &self.var_names)
    }

    /// Grading of a single term.
    pub fn term_grading(&self, mono: &Monomial, word: &[GenId]) -> i64 {
        let w: i64 = word.iter().map(|&g| self.gradings[g]).sum();
        let t: i64 = mono.exponents().iter().enumerate().map(|(i, e)| e * self.var_gradings[i]).sum();
        w + t
    }

    /// `∂` of an arbitrary element via the signed Leibniz rule.
    pub fn d(&self, x: &AlgebraElement) -> AlgebraElement {
        let mut out = AlgebraElement::zero();
        for (c, m, w) in x.terms() {
            let mut prefix_grading = 0i64;
            for (k, &g) in w.iter().enumerate() {
                let sign = if prefix_grading.rem_euclid(2) == 0 { c } else { -c };
                for (c2, m2, w2) in self.differentials[g].terms() {
                    let mut word = w[..k].to_vec();
                    word.extend_from_slice(w2);
                    word.extend_from_slice(&w[k + 1..]);
                    out.add_term(sign * c2, m.mul(m2), word);
                }
                prefix_grading += self.gradings[g];
            }
        }
        out
    }

    /// Checks `∂² = 0` on every generator.
    pub fn verify_d_squared(&self) -> Result<(), DSquaredWitness> {
        for g in 0..self.len() {
            let dd = self.d(&self.differentials[g]);
            if !dd.is_zero() {
                return Err(DSquaredWitness { generator: g, residue: dd });
            }
        }
        Ok(())
    }

    /// Checks that every term of `∂g` has grading `|g| - 1`.
    pub fn verify_gradings(&self) -> Result<(), Error> {
        for g in 0..self.len() {
            for (_, m, w) in self.differentials[g].terms() {
                let found = self.term_grading(m, w);
                if found != self.gradings[g] - 1 {
                    let mut single = AlgebraElement::zero();
                    single.add_term(1, m.clone(), w.to_vec());
                    return Err(Error::Grading {
                        generator: self.gen_names[g].clone(),
                        term: self.element_text(&single),
                        found,
                        expected: self.gradings[g] - 1,
                    });
                }
            }
        }
        Ok(())
    }

    /// Runs both structural checks, reporting failures as errors.
    pub fn validate(&self) -> Result<(), Error> {
        self.verify_gradings()?;
        self.verify_d_squared().map_err(|w| Error::DSquared {
            generator: self.gen_names[w.generator].clone(),
            residue: self.element_text(&w.residue),
        })
    }

    /// Rotation-number–free check: `2r` recovered from the first variable's grading.
    pub fn two_r(&self) -> i64 {
        self.var_gradings.first().map(|g| g.abs()).unwrap_or(0)
    }

    /// Adjoins a stabilizing pair `e1, e2` with `∂e2 = e1` and `|e2| = i`.
    pub fn stabilize(&self, i: i64) -> CeDga {
        let mut out = self.clone();
        let e1 = out.len();
        out.gen_names.push(format!("e1_{}", e1));
        out.gradings.push(i - 1);
        out.differentials.push(AlgebraElement::zero());
        out.gen_names.push(format!("e2_{}", e1));
        out.gradings.push(i);
        out.differentials.push(AlgebraElement::generator(e1));
        out
    }

    /// Text dump: a header line per variable and one line per generator,
    /// `name grading | differential`.
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        for (v, g) in self.var_names.iter().zip(&self.var_gradings) {
            s.push_str(&format!("var {v} {g}\n"));
        }
        for g in 0..self.len() {
            s.push_str(&format!(
                "gen {} {} | {}\n",
                self.gen_names[g],
                self.gradings[g],
                self.element_text(&self.differentials[g])
            ));
        }
        s
    }

    /// Parses [`CeDga::to_text`] output and validates it.
    pub fn parse(text: &str) -> Result<CeDga, Error> {
        let mut var_names = Vec::new();
        let mut var_gradings = Vec::new();
        let mut gens: Vec<(String, i64, String, usize)> = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let lineno = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |m: &str| Error::Syntax { line: lineno, message: m.to_string() };
            if let Some(rest) = line.strip_prefix("var ") {
                let mut it = rest.split_whitespace();
                let name = it.next().ok_or_else(|| err("missing variable name"))?;
                let grading = it
                    .next()
                    .and_then(|g| g.parse::<i64>().ok())
                    .ok_or_else(|| err("missing variable grading"))?;
                var_names.push(name.to_string());
                var_gradings.push(grading);
            } else if let Some(rest) = line.strip_prefix("gen ") {
                let (head, diff) = rest.split_once('|').ok_or_else(|| err("missing `|`"))?;
                let mut it = head.split_whitespace();
                let name = it.next().ok_or_else(|| err("missing generator name"))?;
                let grading = it
                    .next()
                    .and_then(|g| g.parse::<i64>().ok())
                    .ok_or_else(|| err("missing generator grading"))?;
                gens.push((name.to_string(), grading, diff.trim().to_string(), lineno));
            } else {
                return Err(err("expected `var` or `gen`"));
            }
        }
        let gen_names: Vec<String> = gens.iter().map(|g| g.0.clone()).collect();
        let mut differentials = Vec::with_capacity(gens.len());
        for (_, _, diff, lineno) in &gens {
            let d = AlgebraElement::parse(diff, &gen_names, &var_names).map_err(|e| match e {
                Error::Syntax { message, .. } => Error::Syntax { line: *lineno, message },
                other => other,
            })?;
            differentials.push(d);
        }
        let dga = CeDga { gen_names, gradings: gens.iter().map(|g| g.1).collect(), var_names, var_gradings, differentials };
        dga.validate()?;
        Ok(dga)
    }

    /// Reduction mod 2 with every `t_i` set to 1.
    pub fn reduce_mod2(&self) -> CeDga {
        let mut out = self.clone();
        out.differentials = self.differentials.iter().map(|d| d.reduce_mod2()).collect();
        out.var_names.clear();
        out.var_gradings.clear();
        out
    }
}

/// The DGA of a plat front with the given base points and the standard
/// sign convention.
pub fn build_ce_dga(diagram: &FrontDiagram, base_points: BasePoints) -> CeDga {
    let res = resolve(diagram, base_points, &SignConvention::default());
    CeDga::from_resolved(&res)
}

impl core::fmt::Display for DSquaredWitness {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "generator #{}: {} surviving terms", self.generator, self.residue.len())
    }
}

/// Convenience: renders a term list for error messages.
pub fn describe(dga: &CeDga, x: &AlgebraElement) -> String {
    dga.element_text(x).to_string()
}
