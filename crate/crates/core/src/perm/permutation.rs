//! Permutations of `{1..n}`, stored 0-based, acting on the right.
//!
//! The product `a.then(b)` sends a point `p` to `(p^a)^b`, so words are read
//! left to right. This matches the right actions used throughout the crate.

use std::fmt;

use crate::error::{Error, ParseError, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    /// Builds a permutation from 0-based images.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        if images.is_empty() {
            return Err(Error::ZeroDegree);
        }
        let n = images.len();
        let mut seen = vec![false; n];
        for &p in &images {
            if p >= n || std::mem::replace(&mut seen[p], true) {
                return Err(Error::InvalidPermutation(format!(
                    "images {images:?} are not a bijection on 0..{n}"
                )));
            }
        }
        Ok(Permutation {
            images: images.into_iter().map(|p| p as u32).collect(),
        })
    }

    /// Builds a permutation of the given degree from 1-based cycles. Cycles
    /// are composed left to right, so `[[1,2],[2,3]]` is `(1,2)` followed by
    /// `(2,3)`.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        if degree == 0 {
            return Err(Error::ZeroDegree);
        }
        let mut perm = Permutation::identity(degree);
        for cycle in cycles {
            let mut single = Permutation::identity(degree);
            for (i, &p) in cycle.iter().enumerate() {
                if p == 0 || p > degree {
                    return Err(Error::InvalidPermutation(format!(
                        "point {p} outside 1..={degree}"
                    )));
                }
                if cycle[..i].contains(&p) {
                    return Err(Error::InvalidPermutation(format!(
                        "point {p} repeated inside a cycle"
                    )));
                }
                let next = cycle[(i + 1) % cycle.len()];
                single.images[p - 1] = (next - 1) as u32;
            }
            perm = perm.then(&single);
        }
        Ok(perm)
    }

    /// Parses cycle notation such as `(1,2,3)(4,5)` or `()`.
    pub fn parse(text: &str, degree: usize) -> Result<Self> {
        let cycles = parse_cycles(text)?;
        Permutation::from_cycles(degree, &cycles)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the 0-based point `p`.
    #[inline]
    pub fn apply(&self, p: usize) -> usize {
        self.images[p] as usize
    }

    pub fn images(&self) -> impl Iterator<Item = usize> + '_ {
        self.images.iter().map(|&p| p as usize)
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: self.images.iter().map(|&p| other.images[p as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u32; self.images.len()];
        for (i, &p) in self.images.iter().enumerate() {
            images[p as usize] = i as u32;
        }
        Permutation { images }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &p)| i as u32 == p)
    }

    pub fn pow(&self, mut k: u64) -> Permutation {
        let mut base = self.clone();
        let mut acc = Permutation::identity(self.degree());
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.then(&base);
            }
            base = base.then(&base);
            k >>= 1;
        }
        acc
    }

    /// Nontrivial cycles as 1-based point lists, each starting at its least point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.apply(start) == start {
                continue;
            }
            let mut cycle = Vec::new();
            let mut p = start;
            while !seen[p] {
                seen[p] = true;
                cycle.push(p + 1);
                p = self.apply(p);
            }
            out.push(cycle);
        }
        out
    }

    /// The same permutation on a larger point set, fixing the new points.
    pub fn extend(&self, degree: usize) -> Permutation {
        let mut images = self.images.clone();
        images.extend(self.images.len() as u32..degree as u32);
        Permutation { images }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return f.write_str("()");
        }
        for cycle in cycles {
            f.write_str("(")?;
            for (i, p) in cycle.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{p}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation[{}; {}]", self.degree(), self)
    }
}

/// Largest point accepted by the cycle parser. Keeps hostile input from
/// requesting absurd degrees.
pub const MAX_POINT: usize = 1 << 16;

/// Parses a product of cycles in 1-based cycle notation. Whitespace is
/// ignored; `()` denotes the identity. Columns in errors are 1-based and
/// count characters.
pub fn parse_cycles(text: &str) -> Result<Vec<Vec<usize>>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut pos = 0;
    let skip_ws = |pos: &mut usize| {
        while *pos < chars.len() && chars[*pos].is_whitespace() {
            *pos += 1;
        }
    };
    let mut cycles = Vec::new();
    skip_ws(&mut pos);
    if pos == chars.len() {
        return Err(ParseError::new(pos + 1, "expected '('"));
    }
    while pos < chars.len() {
        if chars[pos] != '(' {
            return Err(ParseError::new(pos + 1, format!("expected '(', found {:?}", chars[pos])));
        }
        pos += 1;
        skip_ws(&mut pos);
        let mut cycle = Vec::new();
        if pos < chars.len() && chars[pos] == ')' {
            pos += 1;
            skip_ws(&mut pos);
            continue;
        }
        loop {
            skip_ws(&mut pos);
            let start = pos;
            let mut value: usize = 0;
            while pos < chars.len() && chars[pos].is_ascii_digit() {
                value = value * 10 + chars[pos].to_digit(10).unwrap() as usize;
                if value > MAX_POINT {
                    return Err(ParseError::new(start + 1, "point too large"));
                }
                pos += 1;
            }
            if pos == start {
                return Err(ParseError::new(pos + 1, "expected a point"));
            }
            if value == 0 {
                return Err(ParseError::new(start + 1, "points are numbered from 1"));
            }
            cycle.push(value);
            skip_ws(&mut pos);
            match chars.get(pos) {
                Some(',') => pos += 1,
                Some(')') => {
                    pos += 1;
                    break;
                }
                Some(c) => {
                    return Err(ParseError::new(pos + 1, format!("expected ',' or ')', found {c:?}")))
                }
                None => return Err(ParseError::new(pos + 1, "unterminated cycle")),
            }
        }
        if cycle.len() > 1 {
            cycles.push(cycle);
        }
        skip_ws(&mut pos);
    }
    Ok(cycles)
}
