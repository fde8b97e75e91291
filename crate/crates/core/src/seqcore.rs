//! Outdegree sequences.
//!
//! A [`MatchingCode`] is the 0/1 outdegree sequence `b_1..b_2n` of a plane
//! perfect matching on `2n` convex vertices (every edge directed from the
//! lower to the higher index). A [`TriangulationCode`] is the outdegree
//! sequence `d_1..d_n` of a triangulation on `n + 2` convex points, where
//! hull edges are not counted except `p_1 p_{n+2}`.
//!
//! Both families are in bijection through [`b_to_d`] and [`d_to_b`]. All
//! indices in error values are 1-based.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CodeError {
    #[error("empty sequence")]
    Empty,
    #[error("entry {position} is {value}, expected 0 or 1")]
    NotBinary { position: usize, value: u8 },
    #[error("ballot condition violated at prefix {prefix}")]
    BallotViolated { prefix: usize },
    #[error("unbalanced sequence: {ones} ones and {zeros} zeros")]
    Unbalanced { ones: usize, zeros: usize },
    #[error("suffix condition violated at suffix length {suffix}")]
    SuffixViolated { suffix: usize },
    #[error("degrees sum to {sum}, expected {expected}")]
    SumMismatch { sum: usize, expected: usize },
    #[error("cannot parse {0:?}")]
    Parse(String),
}

/// Checks the ballot invariants, reporting the first violation.
pub fn check_ballot(bits: &[u8]) -> Result<(), CodeError> {
    if bits.is_empty() {
        return Err(CodeError::Empty);
    }
    let mut ones = 0usize;
    for (idx, &b) in bits.iter().enumerate() {
        match b {
            0 => {}
            1 => ones += 1,
            value => {
                return Err(CodeError::NotBinary {
                    position: idx + 1,
                    value,
                })
            }
        }
        let prefix = idx + 1;
        if 2 * ones < prefix {
            return Err(CodeError::BallotViolated { prefix });
        }
    }
    let zeros = bits.len() - ones;
    if ones != zeros {
        return Err(CodeError::Unbalanced { ones, zeros });
    }
    Ok(())
}

/// True iff `bits` is a balanced ballot sequence of positive length.
pub fn is_ballot(bits: &[u8]) -> bool {
    check_ballot(bits).is_ok()
}

/// Checks the triangulation-code invariants, reporting the first violation.
pub fn check_tri_code(degrees: &[usize]) -> Result<(), CodeError> {
    let n = degrees.len();
    if n == 0 {
        return Err(CodeError::Empty);
    }
    let mut suffix_sum = 0usize;
    for (len, &d) in degrees.iter().rev().enumerate() {
        suffix_sum += d;
        if suffix_sum > len + 1 {
            return Err(CodeError::SuffixViolated { suffix: len + 1 });
        }
    }
    if suffix_sum != n {
        return Err(CodeError::SumMismatch {
            sum: suffix_sum,
            expected: n,
        });
    }
    Ok(())
}

pub fn is_valid_tri_code(degrees: &[usize]) -> bool {
    check_tri_code(degrees).is_ok()
}

/// Ballot sequence of length `2n`; always valid once constructed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MatchingCode {
    bits: Vec<u8>,
}

impl MatchingCode {
    pub fn new(bits: Vec<u8>) -> Result<Self, CodeError> {
        check_ballot(&bits)?;
        Ok(Self { bits })
    }

    /// Caller guarantees the ballot invariants.
    pub(crate) fn from_bits_unchecked(bits: Vec<u8>) -> Self {
        debug_assert!(is_ballot(&bits));
        Self { bits }
    }

    pub fn n(&self) -> usize {
        self.bits.len() / 2
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    pub fn bits(&self) -> &[u8] {
        &self.bits
    }

    pub fn into_bits(self) -> Vec<u8> {
        self.bits
    }

    /// Text form with `|` between consecutive blocks of `k` entries.
    ///
    /// Falls back to the plain form when `k` is zero or does not divide the
    /// length.
    pub fn display_blocks(&self, k: usize) -> String {
        if k == 0 || !self.bits.len().is_multiple_of(k) {
            return self.to_string();
        }
        let mut out = String::with_capacity(self.bits.len() + self.bits.len() / k);
        for (idx, chunk) in self.bits.chunks(k).enumerate() {
            if idx > 0 {
                out.push('|');
            }
            out.extend(chunk.iter().map(|&b| if b == 1 { '1' } else { '0' }));
        }
        out
    }
}

impl fmt::Display for MatchingCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self
            .bits
            .iter()
            .map(|&b| if b == 1 { '1' } else { '0' })
            .collect();
        f.write_str(&s)
    }
}

impl FromStr for MatchingCode {
    type Err = CodeError;

    /// Accepts `0`/`1` digits; `|` separators and surrounding whitespace are
    /// ignored.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut bits = Vec::with_capacity(s.len());
        for ch in s.trim().chars() {
            match ch {
                '0' => bits.push(0),
                '1' => bits.push(1),
                '|' => {}
                _ => return Err(CodeError::Parse(s.trim().to_string())),
            }
        }
        Self::new(bits)
    }
}

/// Outdegrees `d_1..d_n` of a triangulation on `n + 2` points.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TriangulationCode {
    degrees: Vec<usize>,
}

impl TriangulationCode {
    pub fn new(degrees: Vec<usize>) -> Result<Self, CodeError> {
        check_tri_code(&degrees)?;
        Ok(Self { degrees })
    }

    pub(crate) fn from_degrees_unchecked(degrees: Vec<usize>) -> Self {
        debug_assert!(is_valid_tri_code(&degrees));
        Self { degrees }
    }

    pub fn n(&self) -> usize {
        self.degrees.len()
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }
}

impl fmt::Display for TriangulationCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (idx, d) in self.degrees.iter().enumerate() {
            if idx > 0 {
                f.write_str(",")?;
            }
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

impl FromStr for TriangulationCode {
    type Err = CodeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.is_empty() {
            return Err(CodeError::Empty);
        }
        let degrees = s
            .split(',')
            .map(|part| {
                part.trim()
                    .parse::<usize>()
                    .map_err(|_| CodeError::Parse(s.to_string()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Self::new(degrees)
    }
}

/// `d_1` counts the 1s before the first 0; `d_i` counts the 1s between the
/// `(i-1)`-st and the `i`-th 0.
pub fn b_to_d(code: &MatchingCode) -> TriangulationCode {
    let mut degrees = Vec::with_capacity(code.n());
    let mut run = 0usize;
    for &b in code.bits() {
        if b == 1 {
            run += 1;
        } else {
            degrees.push(run);
            run = 0;
        }
    }
    TriangulationCode::from_degrees_unchecked(degrees)
}

/// Emits `d_i` ones followed by a single zero for each `i` in order.
pub fn d_to_b(code: &TriangulationCode) -> MatchingCode {
    let mut bits = Vec::with_capacity(2 * code.n());
    for &d in code.degrees() {
        bits.extend(std::iter::repeat_n(1, d));
        bits.push(0);
    }
    MatchingCode::from_bits_unchecked(bits)
}
