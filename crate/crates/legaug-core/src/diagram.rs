//! Plat-position front diagrams: parsing, tracing, orientation, Maslov
//! potential and the classical invariants `tb` and `r`.
//!
//! Positions are numbered from the bottom. Internally everything is 0-based:
//! a crossing stored as `i` exchanges the strands at positions `i` and `i+1`.
//! A *strand* is identified by the position at which it leaves the left
//! cusps; since the left cusps all sit at one x-coordinate, strand `s` is
//! the arc that starts at left position `s` and runs to the right cusps.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::error::Error;

/// A front in plat position: `m` left cusps, `m` right cusps and a word of
/// crossing positions read left to right.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FrontDiagram {
    /// Free-text label.
    pub name: String,
    /// Number of left (and right) cusps.
    pub m: usize,
    /// 1-based crossing positions: entry `p` crosses strands `p` and `p+1`.
    pub word: Vec<usize>,
}

/// Horizontal direction of an oriented strand.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Direction {
    Right,
    Left,
}

impl Direction {
    pub fn flip(self) -> Self {
        match self {
            Direction::Right => Direction::Left,
            Direction::Left => Direction::Right,
        }
    }
}

/// Orientation of a knot front: one direction per strand.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orientation {
    /// `dirs[s]` is the direction of strand `s`.
    pub dirs: Vec<Direction>,
}

/// Maslov potential with its single jump placed on the loop of the top
/// right cusp.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaslovPotential {
    /// `values[s]` is the potential of strand `s`.
    pub values: Vec<i64>,
    /// Twice the rotation number; the potential is well defined modulo this.
    pub modulus: i64,
}

/// Thurston–Bennequin and rotation numbers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClassicalInvariants {
    pub tb: i64,
    pub r: i64,
}

impl FrontDiagram {
    /// Validates and builds a diagram from 1-based crossing positions.
    pub fn new(name: impl Into<String>, m: usize, word: Vec<usize>) -> Result<Self, Error> {
        if m == 0 {
            return Err(Error::Syntax { line: 1, message: "m must be positive".to_string() });
        }
        for (index, &p) in word.iter().enumerate() {
            if p == 0 || p > 2 * m - 1 {
                return Err(Error::CrossingRange { index: index + 1, position: p, max: 2 * m - 1 });
            }
        }
        let d = FrontDiagram { name: name.into(), m, word };
        let components = d.component_count();
        if components != 1 {
            return Err(Error::MultiComponent { components });
        }
        Ok(d)
    }

    /// Parses `plat <m>: <p1> <p2> ...`. Blank lines and lines starting with
    /// `#` are ignored; a `# name: <label>` comment sets the name.
    pub fn parse(text: &str) -> Result<Self, Error> {
        let mut name = String::new();
        let mut found: Option<(usize, usize, Vec<usize>)> = None;
        for (idx, raw) in text.lines().enumerate() {
            let line = raw.trim();
            let lineno = idx + 1;
            if line.is_empty() {
                continue;
            }
            if let Some(comment) = line.strip_prefix('#') {
                if let Some(label) = comment.trim().strip_prefix("name:") {
                    name = label.trim().to_string();
                }
                continue;
            }
            if found.is_some() {
                return Err(Error::Syntax { line: lineno, message: "more than one plat line".to_string() });
            }
            let rest = line
                .strip_prefix("plat")
                .ok_or_else(|| Error::Syntax { line: lineno, message: "expected `plat <m>: ...`".to_string() })?;
            let (m_text, word_text) = rest
                .split_once(':')
                .ok_or_else(|| Error::Syntax { line: lineno, message: "missing `:`".to_string() })?;
            let m: usize = m_text
                .trim()
                .parse()
                .map_err(|_| Error::Syntax { line: lineno, message: format!("bad cusp count `{}`", m_text.trim()) })?;
            let mut word = Vec::new();
            for tok in word_text.split_whitespace() {
                let p: usize = tok
                    .parse()
                    .map_err(|_| Error::Syntax { line: lineno, message: format!("bad crossing `{tok}`") })?;
                word.push(p);
            }
            found = Some((lineno, m, word));
        }
        let (_, m, word) = found.ok_or(Error::Syntax { line: 1, message: "no plat line".to_string() })?;
        FrontDiagram::new(name, m, word)
    }

    /// Canonical one-line text form; `parse` inverts it (up to the name).
    pub fn to_plat_string(&self) -> String {
        let mut s = format!("plat {}:", self.m);
        for p in &self.word {
            s.push(' ');
            s.push_str(&p.to_string());
        }
        s
    }

    /// Number of strand positions, `2m`.
    pub fn width(&self) -> usize {
        2 * self.m
    }

    /// Number of original crossings.
    pub fn n(&self) -> usize {
        self.word.len()
    }

    /// 0-based lower position of crossing `j` (0-based).
    pub fn crossing_pos(&self, j: usize) -> usize {
        self.word[j] - 1
    }

    /// `slices()[k][pos]` is the strand at `pos` after the first `k` crossings.
    pub fn slices(&self) -> Vec<Vec<usize>> {
        let mut cur: Vec<usize> = (0..self.width()).collect();
        let mut out = Vec::with_capacity(self.n() + 1);
        out.push(cur.clone());
        for &p in &self.word {
            cur.swap(p - 1, p);
            out.push(cur.clone());
        }
        out
    }

    /// Strand occupying each position at the right cusps.
    pub fn right_end(&self) -> Vec<usize> {
        let mut cur: Vec<usize> = (0..self.width()).collect();
        for &p in &self.word {
            cur.swap(p - 1, p);
        }
        cur
    }

    /// Number of link components.
    pub fn component_count(&self) -> usize {
        let w = self.width();
        let end = self.right_end();
        let mut end_pos = vec![0; w];
        for (pos, &s) in end.iter().enumerate() {
            end_pos[s] = pos;
        }
        let mut seen = vec![false; w];
        let mut count = 0;
        for start in 0..w {
            if seen[start] {
                continue;
            }
            count += 1;
            let mut s = start;
            loop {
                seen[s] = true;
                // right cap, then back along the partner strand to its left cap
                let partner = end[end_pos[s] ^ 1];
                seen[partner] = true;
                s = partner ^ 1;
                if seen[s] {
                    break;
                }
            }
        }
        count
    }

    /// Sequence of strands visited walking the knot from strand 0 rightward,
    /// together with the direction each is traversed.
    fn trace(&self) -> Vec<(usize, Direction)> {
        let w = self.width();
        let end = self.right_end();
        let mut end_pos = vec![0; w];
        for (pos, &s) in end.iter().enumerate() {
            end_pos[s] = pos;
        }
        let mut out = Vec::with_capacity(w);
        let mut s = 0;
        loop {
            out.push((s, Direction::Right));
            let back = end[end_pos[s] ^ 1];
            out.push((back, Direction::Left));
            s = back ^ 1;
            if s == 0 {
                break;
            }
        }
        out
    }

    /// The normalized orientation: the strand leaving the bottom left cusp
    /// points rightward.
    pub fn orientation(&self) -> Orientation {
        let mut dirs = vec![Direction::Right; self.width()];
        for (s, d) in self.trace() {
            dirs[s] = d;
        }
        Orientation { dirs }
    }

    /// Topological sign of crossing `j`: `+1` when both strands point the
    /// same horizontal way.
    pub fn crossing_sign(&self, j: usize, orientation: &Orientation) -> i64 {
        let slices = self.slices();
        let i = self.crossing_pos(j);
        let (lo, hi) = (slices[j][i], slices[j][i + 1]);
        if orientation.dirs[lo] == orientation.dirs[hi] {
            1
        } else {
            -1
        }
    }

    /// `tb` and `r` for the given orientation.
    pub fn classical_invariants_with(&self, orientation: &Orientation) -> ClassicalInvariants {
        let writhe: i64 = (0..self.n()).map(|j| self.crossing_sign(j, orientation)).sum();
        let end = self.right_end();
        let mut down = 0i64;
        let mut up = 0i64;
        for k in 0..self.m {
            // left cusp k: lower strand 2k; it points right iff the cusp points down
            if orientation.dirs[2 * k] == Direction::Right {
                down += 1;
            } else {
                up += 1;
            }
            // right cusp: lower strand pointing right means the cusp points up
            if orientation.dirs[end[2 * k]] == Direction::Right {
                up += 1;
            } else {
                down += 1;
            }
        }
        ClassicalInvariants { tb: writhe - self.m as i64, r: (down - up) / 2 }
    }

    /// `tb` and `r` for the normalized orientation.
    pub fn classical_invariants(&self) -> ClassicalInvariants {
        self.classical_invariants_with(&self.orientation())
    }

    /// Maslov potential, continuous everywhere except on the loop of the
    /// top right cusp. The lower strand of that cusp has potential 0.
    pub fn maslov_potential(&self) -> MaslovPotential {
        let w = self.width();
        let end = self.right_end();
        let mut end_pos = vec![0; w];
        for (pos, &s) in end.iter().enumerate() {
            end_pos[s] = pos;
        }
        let mut values = vec![0i64; w];
        // Walk from the lower strand of the top right cusp leftward, crossing
        // every cusp except the top right one.
        let start = end[w - 2];
        let mut s = start;
        let mut mu = 0i64;
        loop {
            values[s] = mu;
            // left cusp: from s to s^1
            let t = s ^ 1;
            mu += if t > s { 1 } else { -1 };
            values[t] = mu;
            // right cusp from t to its partner
            let pos = end_pos[t];
            if pos / 2 == self.m - 1 {
                break;
            }
            let partner_pos = pos ^ 1;
            mu += if partner_pos > pos { 1 } else { -1 };
            s = end[partner_pos];
        }
        let r = self.classical_invariants().r;
        MaslovPotential { values, modulus: 2 * r.abs() }
    }

    /// Integer grading of crossing `j`: potential of the strand that enters
    /// from above minus that of the strand entering from below.
    pub fn crossing_grading(&self, j: usize, mu: &MaslovPotential) -> i64 {
        let slices = self.slices();
        let i = self.crossing_pos(j);
        mu.values[slices[j][i + 1]] - mu.values[slices[j][i]]
    }
}
