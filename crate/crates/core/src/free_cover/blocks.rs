use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::free_cover::CoverPair;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Block {
    /// One sheet, fixed by `x`.
    A,
    /// Two consecutive sheets exchanged by `x`.
    B,
}

/// Which point of a leading `B` block is the basepoint.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Basepoint {
    /// The first sheet of the first block.
    Default,
    /// The second sheet of a leading `B`.
    Alt,
}

/// A cyclic word in the blocks `A` and `B` together with a basepoint choice.
///
/// Written as the letters, with a `:alt` suffix for the second basepoint of
/// a leading `B`, e.g. `BAAAA` or `BAAAA:alt`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BlockSequence {
    word: Vec<Block>,
    basepoint: Basepoint,
}

impl BlockSequence {
    pub fn new(word: Vec<Block>, basepoint: Basepoint) -> Result<Self> {
        if word.is_empty() {
            return Err(Error::InvalidBlockSequence("empty word".into()));
        }
        if basepoint == Basepoint::Alt && word[0] != Block::B {
            return Err(Error::InvalidBlockSequence(
                "the alternative basepoint needs a leading B".into(),
            ));
        }
        Ok(BlockSequence { word, basepoint })
    }

    pub fn word(&self) -> &[Block] {
        &self.word
    }

    pub fn basepoint(&self) -> Basepoint {
        self.basepoint
    }

    pub fn a(&self) -> usize {
        self.word.iter().filter(|&&b| b == Block::A).count()
    }

    pub fn b(&self) -> usize {
        self.word.len() - self.a()
    }

    /// `a + 2b`.
    pub fn n(&self) -> usize {
        self.a() + 2 * self.b()
    }

    /// Both letters occur.
    pub fn is_admissible(&self) -> bool {
        self.a() >= 1 && self.b() >= 1
    }
}

impl FromStr for BlockSequence {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let text = text.trim();
        let (letters, basepoint) = match text.split_once(':') {
            None => (text, Basepoint::Default),
            Some((w, "alt")) => (w, Basepoint::Alt),
            Some((w, "default")) => (w, Basepoint::Default),
            Some((_, other)) => {
                return Err(Error::InvalidBlockSequence(format!(
                    "unknown basepoint {other:?}; expected alt or default"
                )))
            }
        };
        let word = letters
            .chars()
            .enumerate()
            .map(|(i, c)| match c {
                'A' | 'a' => Ok(Block::A),
                'B' | 'b' => Ok(Block::B),
                _ => Err(Error::InvalidBlockSequence(format!(
                    "column {}: expected A or B, found {c:?}",
                    i + 1
                ))),
            })
            .collect::<Result<Vec<_>>>()?;
        BlockSequence::new(word, basepoint)
    }
}

impl fmt::Display for BlockSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.word {
            f.write_str(match b {
                Block::A => "A",
                Block::B => "B",
            })?;
        }
        if self.basepoint == Basepoint::Alt {
            f.write_str(":alt")?;
        }
        Ok(())
    }
}

impl fmt::Debug for BlockSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BlockSequence({self})")
    }
}

/// The cover of a block sequence.
///
/// Sheets are numbered along the cyclic chain of blocks. `y` moves every
/// sheet to the next one, so `sigma_y = (1 2 … n)`. An `A` sheet is fixed by
/// `x`; the two sheets `i, i+1` of a `B` are exchanged by `x`, which makes
/// `i+1` a fixed point of `xy`.
pub fn cover_from_blocks(seq: &BlockSequence) -> CoverPair {
    let n = seq.n();
    let mut x: Vec<usize> = (0..n).collect();
    let mut pos = 0;
    for block in seq.word() {
        match block {
            Block::A => pos += 1,
            Block::B => {
                x.swap(pos, pos + 1);
                pos += 2;
            }
        }
    }
    let y: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
    let basepoint = match seq.basepoint() {
        Basepoint::Default => 0,
        Basepoint::Alt => 1,
    };
    CoverPair::from_images_unchecked(x, y, basepoint)
}

fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    (0..k).fold(BigInt::one(), |acc, i| acc * BigInt::from(n - i) / BigInt::from(i + 1))
}

/// The closed-form count
/// `Σ_{k=1}^{⌊(n-1)/2⌋} C(n-k-1, k) + 2 Σ_{k=1}^{⌊(n-3)/2⌋} C(n-k-1, k-1)`.
pub fn c_formula(n: usize) -> Result<BigInt> {
    if n < 3 {
        return Err(Error::IndexOutOfRange {
            n,
            min: 3,
            max: usize::MAX,
        });
    }
    let n = n as i64;
    let first: BigInt = (1..=(n - 1) / 2).map(|k| binomial(n - k - 1, k)).sum();
    let second: BigInt = (1..=(n - 3) / 2).map(|k| binomial(n - k - 1, k - 1)).sum();
    Ok(first + BigInt::from(2) * second)
}

/// The number of admissible sequences with `a + 2b = n`, counting both
/// basepoints of a leading `B`:
/// `Σ_{k=1}^{⌊(n-1)/2⌋} (C(n-k-1, k) + 2 C(n-k-1, k-1))`.
///
/// This is what [`enumerate_block_covers`] produces. It differs from
/// [`c_formula`] by the `k = ⌊(n-1)/2⌋` term of the second sum.
pub fn block_cover_count(n: usize) -> BigInt {
    let n = n as i64;
    (1..=(n - 1) / 2)
        .map(|k| binomial(n - k - 1, k) + BigInt::from(2) * binomial(n - k - 1, k - 1))
        .sum()
}

/// Every admissible sequence with `a + 2b = n` and each legal basepoint,
/// ordered by word (A before B) and then basepoint.
pub fn enumerate_block_covers(n: usize) -> Result<Vec<(BlockSequence, CoverPair)>> {
    if n < 3 {
        return Err(Error::IndexOutOfRange {
            n,
            min: 3,
            max: usize::MAX,
        });
    }
    let mut words = Vec::new();
    let mut current = Vec::new();
    fn extend(remaining: usize, current: &mut Vec<Block>, words: &mut Vec<Vec<Block>>) {
        if remaining == 0 {
            words.push(current.clone());
            return;
        }
        current.push(Block::A);
        extend(remaining - 1, current, words);
        current.pop();
        if remaining >= 2 {
            current.push(Block::B);
            extend(remaining - 2, current, words);
            current.pop();
        }
    }
    extend(n, &mut current, &mut words);
    let mut out = Vec::new();
    for word in words {
        let leading_b = word[0] == Block::B;
        let seq = BlockSequence::new(word.clone(), Basepoint::Default)?;
        if !seq.is_admissible() {
            continue;
        }
        out.push((seq.clone(), cover_from_blocks(&seq)));
        if leading_b {
            let alt = BlockSequence::new(word, Basepoint::Alt)?;
            out.push((alt.clone(), cover_from_blocks(&alt)));
        }
    }
    Ok(out)
}
