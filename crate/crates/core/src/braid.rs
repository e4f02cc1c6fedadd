//! Braid words and the alternating block braids
//! `prod_j (s1^{p1j} s2^{-p2j} s3^{p3j} ...)`.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BraidError {
    #[error("a braid needs at least 2 strands, got {0}")]
    TooFewStrands(usize),
    #[error("generator index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },
    #[error("syllable exponent must be nonzero")]
    ZeroExponent,
    #[error("a block braid needs at least one block")]
    NoBlocks,
    #[error("block {block} has {got} entries, expected {expected}")]
    BlockWidth {
        block: usize,
        got: usize,
        expected: usize,
    },
    #[error("block magnitudes must be >= 1")]
    ZeroMagnitude,
    #[error("cannot parse {what}: {text:?}")]
    Parse { what: &'static str, text: String },
}

/// `sigma_index^exponent`
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Syllable {
    pub index: usize,
    pub exponent: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BraidWord {
    strands: usize,
    syllables: Vec<Syllable>,
}

impl BraidWord {
    pub fn new(strands: usize, syllables: Vec<Syllable>) -> Result<Self, BraidError> {
        if strands < 2 {
            return Err(BraidError::TooFewStrands(strands));
        }
        for s in &syllables {
            if s.index == 0 || s.index >= strands {
                return Err(BraidError::IndexOutOfRange {
                    index: s.index,
                    max: strands - 1,
                });
            }
            if s.exponent == 0 {
                return Err(BraidError::ZeroExponent);
            }
        }
        Ok(BraidWord { strands, syllables })
    }

    pub fn from_pairs(strands: usize, pairs: &[(usize, i64)]) -> Result<Self, BraidError> {
        let syllables = pairs
            .iter()
            .map(|&(index, exponent)| Syllable { index, exponent })
            .collect();
        Self::new(strands, syllables)
    }

    pub fn empty(strands: usize) -> Result<Self, BraidError> {
        Self::new(strands, Vec::new())
    }

    /// Parses `"s1^3 s2^-2 s3"`. Whitespace separated; a missing exponent means 1.
    pub fn parse(strands: usize, text: &str) -> Result<Self, BraidError> {
        let bad = || BraidError::Parse {
            what: "braid word",
            text: text.to_string(),
        };
        let mut syllables = Vec::new();
        for tok in text.split_whitespace() {
            let body = tok
                .strip_prefix('s')
                .or_else(|| tok.strip_prefix('σ'))
                .ok_or_else(bad)?;
            let (idx, exp) = match body.split_once('^') {
                Some((i, e)) => (i, e.parse::<i64>().map_err(|_| bad())?),
                None => (body, 1),
            };
            let index = idx.parse::<usize>().map_err(|_| bad())?;
            syllables.push(Syllable {
                index,
                exponent: exp,
            });
        }
        Self::new(strands, syllables)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn syllables(&self) -> &[Syllable] {
        &self.syllables
    }

    pub fn exponent_sum(&self) -> i64 {
        self.syllables.iter().map(|s| s.exponent).sum()
    }

    pub fn mirror(&self) -> BraidWord {
        BraidWord {
            strands: self.strands,
            syllables: self
                .syllables
                .iter()
                .map(|s| Syllable {
                    index: s.index,
                    exponent: -s.exponent,
                })
                .collect(),
        }
    }

    /// Appends `other` (same strand count assumed by construction).
    pub fn concat(&self, other: &BraidWord) -> BraidWord {
        let mut syllables = self.syllables.clone();
        syllables.extend_from_slice(&other.syllables);
        BraidWord {
            strands: self.strands.max(other.strands),
            syllables,
        }
    }

    /// The same word viewed in `B_strands` for a larger strand count.
    pub fn with_strands(&self, strands: usize) -> Result<BraidWord, BraidError> {
        BraidWord::new(strands, self.syllables.clone())
    }

    /// Permutation of the strands induced by the word (`perm[k]` is where strand `k` ends).
    pub fn permutation(&self) -> Vec<usize> {
        let mut perm: Vec<usize> = (0..self.strands).collect();
        for s in &self.syllables {
            if s.exponent.rem_euclid(2) == 1 {
                perm.swap(s.index - 1, s.index);
            }
        }
        perm
    }

    /// Number of components of the closure.
    pub fn closure_components(&self) -> usize {
        let perm = self.permutation();
        let mut seen = vec![false; perm.len()];
        let mut cycles = 0;
        for start in 0..perm.len() {
            if seen[start] {
                continue;
            }
            cycles += 1;
            let mut k = start;
            while !seen[k] {
                seen[k] = true;
                k = perm[k];
            }
        }
        cycles
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, s) in self.syllables.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "s{}^{}", s.index, s.exponent)?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }

    pub fn parse(text: &str) -> Result<Sign, BraidError> {
        match text.trim() {
            "+" | "+1" | "1" | "pos" | "positive" => Ok(Sign::Positive),
            "-" | "-1" | "neg" | "negative" => Ok(Sign::Negative),
            other => Err(BraidError::Parse {
                what: "sign",
                text: other.to_string(),
            }),
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Positive => "+",
            Sign::Negative => "-",
        })
    }
}

/// Alternating block braid on `strands` strands. Block `j` is
/// `s1^{e p_{1j}} s2^{-e p_{2j}} ... ` where `e` is the global sign and the
/// stored magnitudes are all at least 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BlockBraid {
    strands: usize,
    /// One row per block, `strands - 1` entries each.
    magnitudes: Vec<Vec<u64>>,
    sign: Sign,
}

impl BlockBraid {
    pub fn new(strands: usize, magnitudes: Vec<Vec<u64>>, sign: Sign) -> Result<Self, BraidError> {
        if strands < 2 {
            return Err(BraidError::TooFewStrands(strands));
        }
        if magnitudes.is_empty() {
            return Err(BraidError::NoBlocks);
        }
        for (j, row) in magnitudes.iter().enumerate() {
            if row.len() != strands - 1 {
                return Err(BraidError::BlockWidth {
                    block: j + 1,
                    got: row.len(),
                    expected: strands - 1,
                });
            }
            if row.contains(&0) {
                return Err(BraidError::ZeroMagnitude);
            }
        }
        Ok(BlockBraid {
            strands,
            magnitudes,
            sign,
        })
    }

    /// Parses block syntax `"3,2,5;1,1,2"` (blocks separated by `;`).
    pub fn parse(strands: usize, blocks: &str, sign: Sign) -> Result<Self, BraidError> {
        let bad = || BraidError::Parse {
            what: "blocks",
            text: blocks.to_string(),
        };
        let magnitudes = blocks
            .split(';')
            .map(|block| {
                block
                    .split(',')
                    .map(|v| v.trim().parse::<u64>().map_err(|_| bad()))
                    .collect::<Result<Vec<_>, _>>()
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(strands, magnitudes, sign)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn blocks(&self) -> usize {
        self.magnitudes.len()
    }

    pub fn magnitudes(&self) -> &[Vec<u64>] {
        &self.magnitudes
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }

    pub fn min_magnitude(&self) -> u64 {
        self.magnitudes.iter().flatten().copied().min().unwrap_or(0)
    }

    /// Signed exponent of generator `index` (1-based) in block `block` (0-based).
    pub fn signed_entry(&self, block: usize, index: usize) -> i64 {
        let alt = if index % 2 == 1 { 1 } else { -1 };
        self.sign.as_i64() * alt * self.magnitudes[block][index - 1] as i64
    }

    pub fn expand(&self) -> BraidWord {
        let syllables = (0..self.blocks())
            .flat_map(|j| {
                (1..self.strands).map(move |i| Syllable {
                    index: i,
                    exponent: self.signed_entry(j, i),
                })
            })
            .collect();
        BraidWord {
            strands: self.strands,
            syllables,
        }
    }

    pub fn mirror(&self) -> BlockBraid {
        BlockBraid {
            strands: self.strands,
            magnitudes: self.magnitudes.clone(),
            sign: self.sign.flip(),
        }
    }

    /// Block syntax, inverse of [`BlockBraid::parse`].
    pub fn blocks_string(&self) -> String {
        self.magnitudes
            .iter()
            .map(|row| {
                row.iter()
                    .map(u64::to_string)
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect::<Vec<_>>()
            .join(";")
    }
}
