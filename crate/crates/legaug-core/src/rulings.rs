//! ρ-graded normal rulings of plat fronts.
//!
//! A ruling is recorded slice by slice as a fixed-point-free involution on
//! strand positions. Sweeping left to right, a crossing whose strands are
//! paired with each other kills the branch; otherwise the pairing either
//! passes through the crossing (conjugation by the transposition) or, when
//! the two pairs are disjoint or nested and ρ divides the grading, switches.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::diagram::FrontDiagram;
use crate::error::Error;

/// Pairing of strand positions at one slice: `pair[x]` is the partner of `x`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RulingState(pub Vec<usize>);

impl RulingState {
    /// The pairing `(1 2)(3 4)…` of the cusps.
    pub fn cusps(width: usize) -> Self {
        RulingState((0..width).map(|x| x ^ 1).collect())
    }

    pub fn partner(&self, x: usize) -> usize {
        self.0[x]
    }

    /// The state after the pair paths pass through a crossing at `i`.
    pub fn pass(&self, i: usize) -> Self {
        let swap = |x: usize| if x == i { i + 1 } else if x == i + 1 { i } else { x };
        let mut out = alloc::vec![0; self.0.len()];
        for x in 0..self.0.len() {
            out[swap(x)] = swap(self.0[x]);
        }
        RulingState(out)
    }

    /// Pairs as `(lower, upper)` sorted by lower end.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        (0..self.0.len()).filter(|&x| self.0[x] > x).map(|x| (x, self.0[x])).collect()
    }

    /// Number of interlaced pairs of pairs.
    pub fn interlaced_count(&self) -> usize {
        let pairs = self.pairs();
        let mut n = 0;
        for (k, &(a, b)) in pairs.iter().enumerate() {
            for &(c, d) in &pairs[k + 1..] {
                if interlaced((a, b), (c, d)) {
                    n += 1;
                }
            }
        }
        n
    }
}

fn interlaced(p: (usize, usize), q: (usize, usize)) -> bool {
    let (a, b) = p;
    let (c, d) = q;
    (a < c && c < b && b < d) || (c < a && a < d && d < b)
}

/// Local picture of the ruling at a crossing.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Configuration {
    /// Switch; companions on opposite sides.
    A,
    /// Switch; both companions below.
    B,
    /// Switch; both companions above.
    C,
    /// Pass from interlaced pairs; companions on opposite sides afterwards.
    D,
    /// Pass from interlaced pairs; both companions below.
    E,
    /// Pass from interlaced pairs; both companions above.
    F,
    /// Pass from disjoint or nested pairs.
    PassOther,
}

/// Configuration together with the crossing's topological sign.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct CrossingConfig {
    pub config: Configuration,
    pub positive: bool,
}

impl CrossingConfig {
    pub fn is_switch(&self) -> bool {
        matches!(self.config, Configuration::A | Configuration::B | Configuration::C)
    }
}

impl fmt::Display for CrossingConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = if self.positive { '+' } else { '-' };
        let c = match self.config {
            Configuration::A => "(a)",
            Configuration::B => "(b)",
            Configuration::C => "(c)",
            Configuration::D => "(d)",
            Configuration::E => "(e)",
            Configuration::F => "(f)",
            Configuration::PassOther => return write!(f, "pass"),
        };
        write!(f, "{s}{c}")
    }
}

/// A normal ruling of a plat front.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NormalRuling {
    /// 0-based indices of the switched crossings, increasing.
    pub switches: Vec<usize>,
    /// `states[k]` is the pairing right after crossing `k` (`states[0]` at the left cusps).
    pub states: Vec<RulingState>,
    /// Configuration of every crossing.
    pub configs: Vec<CrossingConfig>,
}

/// Classifies crossing position `i` given the pairing just before it.
pub fn classify(before: &RulingState, i: usize, switch: bool, positive: bool) -> CrossingConfig {
    let lo = before.partner(i);
    let hi = before.partner(i + 1);
    let config = if switch {
        match (lo < i, hi > i + 1) {
            (true, true) => Configuration::A,
            (true, false) => Configuration::B,
            _ => Configuration::C,
        }
    } else if interlaced((i.min(lo), i.max(lo)), ((i + 1).min(hi), (i + 1).max(hi))) {
        match (lo < i, hi < i) {
            (true, true) => Configuration::E,
            (false, false) => Configuration::F,
            _ => Configuration::D,
        }
    } else {
        Configuration::PassOther
    };
    CrossingConfig { config, positive }
}

/// Whether a switch at position `i` is normal: the two pairs through `i`,
/// `i+1` are disjoint or nested.
pub fn switch_allowed(state: &RulingState, i: usize) -> bool {
    let a = state.partner(i);
    let b = state.partner(i + 1);
    if a == i + 1 {
        return false;
    }
    !interlaced((i.min(a), i.max(a)), ((i + 1).min(b), (i + 1).max(b)))
}

/// Checks that ρ divides twice the rotation number.
pub fn check_rho(diagram: &FrontDiagram, rho: u32) -> Result<(), Error> {
    let two_r = 2 * diagram.classical_invariants().r;
    let ok = if rho == 0 { two_r == 0 } else { two_r % rho as i64 == 0 };
    if ok {
        Ok(())
    } else {
        Err(Error::Rho { rho, two_r })
    }
}

/// Whether ρ divides `g` (for ρ = 0: `g == 0`).
pub fn rho_divides(rho: u32, g: i64) -> bool {
    if rho == 0 {
        g == 0
    } else {
        g.rem_euclid(rho as i64) == 0
    }
}

/// Every ρ-graded normal ruling, in depth-first order (pass before switch).
pub fn enumerate_rulings(diagram: &FrontDiagram, rho: u32) -> Result<Vec<NormalRuling>, Error> {
    check_rho(diagram, rho)?;
    let orientation = diagram.orientation();
    let mu = diagram.maslov_potential();
    let n = diagram.n();
    let gradings: Vec<i64> = (0..n).map(|j| diagram.crossing_grading(j, &mu)).collect();
    let signs: Vec<bool> = (0..n).map(|j| diagram.crossing_sign(j, &orientation) > 0).collect();
    let mut out = Vec::new();
    let mut states = alloc::vec![RulingState::cusps(diagram.width())];
    let mut configs = Vec::new();
    let mut switches = Vec::new();
    dfs(diagram, rho, &gradings, &signs, &mut states, &mut configs, &mut switches, &mut out);
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn dfs(
    d: &FrontDiagram,
    rho: u32,
    gradings: &[i64],
    signs: &[bool],
    states: &mut Vec<RulingState>,
    configs: &mut Vec<CrossingConfig>,
    switches: &mut Vec<usize>,
    out: &mut Vec<NormalRuling>,
) {
    let j = configs.len();
    let state = states.last().expect("nonempty").clone();
    if j == d.n() {
        if state == RulingState::cusps(d.width()) {
            out.push(NormalRuling { switches: switches.clone(), states: states.clone(), configs: configs.clone() });
        }
        return;
    }
    let i = d.crossing_pos(j);
    if state.partner(i) == i + 1 {
        return;
    }
    states.push(state.pass(i));
    configs.push(classify(&state, i, false, signs[j]));
    dfs(d, rho, gradings, signs, states, configs, switches, out);
    configs.pop();
    states.pop();
    if switch_allowed(&state, i) && rho_divides(rho, gradings[j]) {
        states.push(state.clone());
        configs.push(classify(&state, i, true, signs[j]));
        switches.push(j);
        dfs(d, rho, gradings, signs, states, configs, switches, out);
        switches.pop();
        configs.pop();
        states.pop();
    }
}

/// Rebuilds a ruling from its switch set, checking validity.
pub fn ruling_from_switches(diagram: &FrontDiagram, rho: u32, switches: &[usize]) -> Result<NormalRuling, Error> {
    check_rho(diagram, rho)?;
    let orientation = diagram.orientation();
    let mu = diagram.maslov_potential();
    let mut state = RulingState::cusps(diagram.width());
    let mut states = alloc::vec![state.clone()];
    let mut configs = Vec::new();
    for j in 0..diagram.n() {
        let i = diagram.crossing_pos(j);
        if state.partner(i) == i + 1 {
            return Err(Error::InvalidRuling(format!("crossing c{} joins paired strands", j + 1)));
        }
        let positive = diagram.crossing_sign(j, &orientation) > 0;
        let switch = switches.contains(&j);
        if switch {
            if !switch_allowed(&state, i) {
                return Err(Error::InvalidRuling(format!("switch at c{} is not normal", j + 1)));
            }
            if !rho_divides(rho, diagram.crossing_grading(j, &mu)) {
                return Err(Error::InvalidRuling(format!("switch at c{} has grading not divisible by {rho}", j + 1)));
            }
            configs.push(classify(&state, i, true, positive));
        } else {
            configs.push(classify(&state, i, false, positive));
            state = state.pass(i);
        }
        states.push(state.clone());
    }
    if state != RulingState::cusps(diagram.width()) {
        return Err(Error::InvalidRuling(String::from("pairing does not match the right cusps")));
    }
    let mut sw = switches.to_vec();
    sw.sort_unstable();
    Ok(NormalRuling { switches: sw, states, configs })
}

impl NormalRuling {
    /// No switched negative crossing.
    pub fn is_oriented(&self) -> bool {
        !self.configs.iter().any(|c| c.is_switch() && !c.positive)
    }

    /// Number of switches with configuration −(a).
    pub fn negative_a_count(&self) -> usize {
        self.configs.iter().filter(|c| c.config == Configuration::A && !c.positive).count()
    }

    /// `m + s + a₋` is odd.
    pub fn parity_check(&self, diagram: &FrontDiagram) -> bool {
        (diagram.m + self.switches.len() + self.negative_a_count()) % 2 == 1
    }

    /// Interlaced-pair count at every slice.
    pub fn interlaced_counts(&self) -> Vec<usize> {
        self.states.iter().map(|s| s.interlaced_count()).collect()
    }

    /// One line per slice listing the pairs, 1-based.
    pub fn render(&self) -> String {
        let mut s = String::new();
        for (k, st) in self.states.iter().enumerate() {
            let pairs: Vec<String> = st.pairs().iter().map(|(a, b)| format!("({} {})", a + 1, b + 1)).collect();
            let label = if k == 0 { String::from("cusps") } else { format!("c{k}") };
            let mark = if k > 0 && self.switches.contains(&(k - 1)) { " switch" } else { "" };
            s.push_str(&format!("{label:>6}{mark:7} {}\n", pairs.join(" ")));
        }
        s
    }
}

/// `Σ z^{s(R) - m}` as exponent → coefficient.
pub fn ruling_count_polynomial(diagram: &FrontDiagram, rho: u32) -> Result<BTreeMap<i64, u64>, Error> {
    let mut poly = BTreeMap::new();
    for r in enumerate_rulings(diagram, rho)? {
        *poly.entry(r.switches.len() as i64 - diagram.m as i64).or_insert(0) += 1;
    }
    Ok(poly)
}

/// Renders a ruling polynomial like `2z^-1 + z`; the zero polynomial is `0`.
pub fn format_polynomial(poly: &BTreeMap<i64, u64>) -> String {
    if poly.is_empty() {
        return String::from("0");
    }
    let terms: Vec<String> = poly
        .iter()
        .map(|(&e, &c)| {
            let coef = if c == 1 && e != 0 { String::new() } else { format!("{c}") };
            match e {
                0 => format!("{c}"),
                1 => format!("{coef}z"),
                _ => format!("{coef}z^{e}"),
            }
        })
        .collect();
    terms.join(" + ")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pass_conjugates() {
        let s = RulingState::cusps(4).pass(1);
        assert_eq!(s.pairs(), alloc::vec![(0, 2), (1, 3)]);
        assert_eq!(s.interlaced_count(), 1);
    }
}
