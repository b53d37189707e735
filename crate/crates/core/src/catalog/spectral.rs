//! Spectral types of linear equations.
//!
//! A spectral type is a comma-separated list of local types, one per
//! singular point. A local type is a sequence of parts, each either a digit
//! or a parenthesized group; nesting depth gives the Poincare rank and a
//! subscript `_k` (or `_{k}`) on an outermost group gives the ramification
//! index:
//!
//! ```text
//! type  := local (',' local)*
//! local := item+
//! item  := digit | '(' item+ ')' sub?
//! sub   := '_' digit | '_{' digit+ '}'
//! ```

use std::fmt;

use num_traits::Zero;
use thiserror::Error;

use crate::algebra::{format_q, parse_q, Q};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SpectralError {
    #[error("parse error at {pos}: {msg}")]
    Parse { pos: usize, msg: String },
    #[error("point {point}: level {level} is not a coarsening of level {}", level + 1)]
    Refinement { point: usize, level: usize },
    #[error("point {point} has size {found}, expected {expected}")]
    SizeMismatch { point: usize, expected: u32, found: u32 },
}

/// Refinement sequence at one point, outermost partition first.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalType {
    pub levels: Vec<Vec<u32>>,
    pub q: u32,
}

impl LocalType {
    /// Nesting depth L.
    pub fn depth(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn size(&self) -> u32 {
        self.levels[0].iter().sum()
    }

    /// Poincare rank plus one, L/q + 1.
    pub fn pattern_value(&self) -> Q {
        Q::new((self.depth() as i64).into(), (self.q as i64).into()) + Q::from_integer(1.into())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpectralType {
    pub points: Vec<LocalType>,
}

impl SpectralType {
    /// Builds a type from explicit levels, checking refinement and sizes.
    pub fn from_levels(points: Vec<LocalType>) -> Result<SpectralType, SpectralError> {
        let mut size = None;
        for (i, p) in points.iter().enumerate() {
            for l in 0..p.depth() {
                if !coarsens(&p.levels[l], &p.levels[l + 1]) {
                    return Err(SpectralError::Refinement { point: i, level: l });
                }
            }
            let s = p.size();
            match size {
                None => size = Some(s),
                Some(e) if e != s => {
                    return Err(SpectralError::SizeMismatch {
                        point: i,
                        expected: e,
                        found: s,
                    })
                }
                _ => {}
            }
        }
        Ok(SpectralType { points })
    }

    /// Matrix size m.
    pub fn size(&self) -> u32 {
        self.points.first().map_or(0, |p| p.size())
    }
}

impl fmt::Display for LocalType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.levels.iter().map(|l| partition_string(l)).collect();
        write!(f, "{}", parts.join("/"))?;
        if self.q > 1 {
            write!(f, " (q={})", self.q)?;
        }
        Ok(())
    }
}

/// Parts as digits when all are below ten, comma-separated otherwise.
pub fn partition_string(p: &[u32]) -> String {
    if p.iter().all(|&k| k < 10) {
        p.iter().map(|k| k.to_string()).collect()
    } else {
        p.iter().map(|k| k.to_string()).collect::<Vec<_>>().join(",")
    }
}

/// True when `coarse` is obtained by summing disjoint groups of parts of `fine`.
fn coarsens(coarse: &[u32], fine: &[u32]) -> bool {
    if coarse.iter().sum::<u32>() != fine.iter().sum::<u32>() {
        return false;
    }
    let mut fine = fine.to_vec();
    fine.sort_unstable_by(|a, b| b.cmp(a));
    let mut bins = coarse.to_vec();
    fn place(i: usize, fine: &[u32], bins: &mut [u32]) -> bool {
        if i == fine.len() {
            return bins.iter().all(|&b| b == 0);
        }
        for j in 0..bins.len() {
            if bins[j] >= fine[i] && !bins[..j].contains(&bins[j]) {
                bins[j] -= fine[i];
                if place(i + 1, fine, bins) {
                    return true;
                }
                bins[j] += fine[i];
            }
        }
        false
    }
    place(0, &fine, &mut bins)
}

#[derive(Debug)]
enum Item {
    Part(u32),
    Group(Vec<Item>, u32),
}

impl Item {
    fn size(&self) -> u32 {
        match self {
            Item::Part(k) => *k,
            Item::Group(cs, q) => q * cs.iter().map(Item::size).sum::<u32>(),
        }
    }

    fn depth(&self) -> usize {
        match self {
            Item::Part(_) => 0,
            Item::Group(cs, _) => 1 + cs.iter().map(Item::depth).max().unwrap_or(0),
        }
    }

    /// Part sizes at nesting level `k`, with ramified groups scaling their parts.
    fn level(&self, k: usize, scale: u32, out: &mut Vec<u32>) {
        match self {
            Item::Group(cs, q) if k > 0 => {
                for c in cs {
                    c.level(k - 1, scale * q, out);
                }
            }
            _ => out.push(scale * self.size()),
        }
    }
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: &str) -> Result<T, SpectralError> {
        Err(SpectralError::Parse {
            pos: self.pos,
            msg: msg.to_string(),
        })
    }

    fn peek(&self) -> Option<u8> {
        self.s.get(self.pos).copied()
    }

    fn number(&mut self) -> Result<u32, SpectralError> {
        let start = self.pos;
        while matches!(self.peek(), Some(b'0'..=b'9')) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.err("expected a number");
        }
        let v: u32 = std::str::from_utf8(&self.s[start..self.pos]).unwrap().parse().unwrap_or(0);
        if v == 0 {
            self.pos = start;
            return self.err("ramification index must be positive");
        }
        Ok(v)
    }

    fn items(&mut self, top: bool) -> Result<Vec<Item>, SpectralError> {
        let mut out = Vec::new();
        loop {
            match self.peek() {
                Some(b'1'..=b'9') => {
                    out.push(Item::Part((self.s[self.pos] - b'0') as u32));
                    self.pos += 1;
                }
                Some(b'0') => return self.err("parts must be positive"),
                Some(b'(') => {
                    self.pos += 1;
                    let inner = self.items(false)?;
                    if inner.is_empty() {
                        return self.err("empty group");
                    }
                    if self.peek() != Some(b')') {
                        return self.err("expected ')'");
                    }
                    self.pos += 1;
                    let mut q = 1;
                    if self.peek() == Some(b'_') {
                        if !top {
                            return self.err("subscript on an inner group");
                        }
                        self.pos += 1;
                        if self.peek() == Some(b'{') {
                            self.pos += 1;
                            q = self.number()?;
                            if self.peek() != Some(b'}') {
                                return self.err("expected '}'");
                            }
                            self.pos += 1;
                        } else if matches!(self.peek(), Some(b'1'..=b'9')) {
                            q = (self.s[self.pos] - b'0') as u32;
                            self.pos += 1;
                        } else {
                            return self.err("expected a ramification index");
                        }
                    }
                    out.push(Item::Group(inner, q));
                }
                _ => return Ok(out),
            }
        }
    }
}

pub fn parse_spectral_type(s: &str) -> Result<SpectralType, SpectralError> {
    let mut p = Parser { s: s.as_bytes(), pos: 0 };
    let mut points = Vec::new();
    loop {
        let start = p.pos;
        let items = p.items(true)?;
        if items.is_empty() {
            return p.err(if p.peek().is_none() && start > 0 { "trailing comma" } else { "expected a local type" });
        }
        let mut q = 1;
        for it in &items {
            if let Item::Group(_, k) = it {
                if *k > 1 && q > 1 && *k != q {
                    p.pos = start;
                    return p.err("conflicting ramification indices");
                }
                q = q.max(*k);
            }
        }
        let depth = items.iter().map(Item::depth).max().unwrap_or(0);
        let levels = (0..=depth)
            .map(|k| {
                let mut out = Vec::new();
                for it in &items {
                    it.level(k, 1, &mut out);
                }
                out.sort_unstable_by(|a, b| b.cmp(a));
                out
            })
            .collect();
        points.push(LocalType { levels, q });
        match p.peek() {
            None => break,
            Some(b',') => p.pos += 1,
            Some(_) => return p.err("unexpected character"),
        }
    }
    SpectralType::from_levels(points)
}

/// Poincare rank plus one at each point.
pub fn singularity_pattern(t: &SpectralType) -> Vec<Q> {
    t.points.iter().map(LocalType::pattern_value).collect()
}

/// Parses a label such as "2+3/2+1".
pub fn parse_pattern_label(s: &str) -> Option<Vec<Q>> {
    s.split('+').map(|x| parse_q(x.trim()).filter(|v| !v.is_zero())).collect()
}

/// Equality of patterns up to the order of the points.
pub fn same_pattern(a: &[Q], b: &[Q]) -> bool {
    let (mut a, mut b) = (a.to_vec(), b.to_vec());
    a.sort();
    b.sort();
    a == b
}

pub fn format_pattern(p: &[Q]) -> String {
    p.iter().map(format_q).collect::<Vec<_>>().join("+")
}
