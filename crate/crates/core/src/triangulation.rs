//! Triangulations of `n + 2` convex points and their outdegree codec.
//!
//! Counted edges are the diagonals plus the hull edge `p_1 p_{n+2}`; all other
//! hull edges are implicit and never stored.

use crate::polygon::{canonical_diagonals, Edge, PolygonError};
use crate::seqcore::{CodeError, TriangulationCode};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Triangulation {
    npoints: usize,
    diagonals: Vec<Edge>,
}

impl Triangulation {
    pub fn new(npoints: usize, diagonals: &[Edge]) -> Result<Self, PolygonError> {
        let diagonals = canonical_diagonals(npoints, diagonals)?;
        let expected = npoints - 3;
        if diagonals.len() != expected {
            return Err(PolygonError::DiagonalCount {
                expected,
                found: diagonals.len(),
            });
        }
        Ok(Self { npoints, diagonals })
    }

    pub(crate) fn from_sorted_unchecked(npoints: usize, diagonals: Vec<Edge>) -> Self {
        Self { npoints, diagonals }
    }

    pub fn npoints(&self) -> usize {
        self.npoints
    }

    /// `n` in the `n + 2` point convention.
    pub fn n(&self) -> usize {
        self.npoints - 2
    }

    pub fn diagonals(&self) -> &[Edge] {
        &self.diagonals
    }

    pub fn contains(&self, edge: Edge) -> bool {
        self.diagonals.binary_search(&edge).is_ok()
    }
}

/// Push/pop counters of one decoder run, initialization excluded.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct StackStats {
    pub pushes: usize,
    pub pops: usize,
    pub emitted: usize,
}

pub fn encode_triangulation(t: &Triangulation) -> TriangulationCode {
    let n = t.n();
    let mut degrees = vec![0usize; n];
    degrees[0] = 1; // p_1 p_{n+2}
    for &(a, _) in t.diagonals() {
        degrees[a - 1] += 1;
    }
    TriangulationCode::from_degrees_unchecked(degrees)
}

pub fn decode_triangulation(code: &TriangulationCode) -> Triangulation {
    decode_degrees(code.degrees())
        .map(|(t, _)| t)
        .expect("valid triangulation code")
}

pub fn decode_triangulation_counted(code: &TriangulationCode) -> (Triangulation, StackStats) {
    decode_degrees(code.degrees()).expect("valid triangulation code")
}

/// Runs the stack decoder on raw degrees.
///
/// The stack starts as `[n+2, n+1]`; degrees are consumed from `d_n` down to
/// `d_1`. Each of the `d_i` pops emits `p_i p_l` for the new top `l`, then `i`
/// is pushed. A pop that would empty the stack is reported as a suffix
/// violation, and a terminal stack other than `[n+2, 1]` as a sum mismatch.
pub fn decode_degrees(degrees: &[usize]) -> Result<(Triangulation, StackStats), CodeError> {
    let n = degrees.len();
    if n == 0 {
        return Err(CodeError::Empty);
    }
    let npoints = n + 2;
    let mut stack = Vec::with_capacity(n + 2);
    stack.push(npoints);
    stack.push(n + 1);
    let mut stats = StackStats::default();
    let mut diagonals = Vec::with_capacity(n - 1);
    for i in (1..=n).rev() {
        for _ in 0..degrees[i - 1] {
            if stack.len() < 2 {
                return Err(CodeError::SuffixViolated { suffix: n + 1 - i });
            }
            stack.pop();
            stats.pops += 1;
            let l = *stack.last().expect("checked above");
            stats.emitted += 1;
            if !(i == 1 && l == npoints) {
                diagonals.push((i, l));
            }
        }
        stack.push(i);
        stats.pushes += 1;
    }
    if stack != [npoints, 1] {
        let sum: usize = degrees.iter().sum();
        return Err(CodeError::SumMismatch { sum, expected: n });
    }
    diagonals.sort_unstable();
    Ok((
        Triangulation::from_sorted_unchecked(npoints, diagonals),
        stats,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tri(npoints: usize, diagonals: &[Edge]) -> Triangulation {
        Triangulation::new(npoints, diagonals).unwrap()
    }

    fn dcode(v: &[usize]) -> TriangulationCode {
        TriangulationCode::new(v.to_vec()).unwrap()
    }

    #[test]
    fn encode_examples() {
        assert_eq!(
            encode_triangulation(&tri(5, &[(1, 3), (1, 4)])).degrees(),
            &[3, 0, 0]
        );
        assert_eq!(
            encode_triangulation(&tri(5, &[(2, 5), (3, 5)])).degrees(),
            &[1, 1, 1]
        );
        assert_eq!(
            encode_triangulation(&tri(5, &[(1, 3), (3, 5)])).degrees(),
            &[2, 0, 1]
        );
    }

    #[test]
    fn decode_examples() {
        assert_eq!(
            decode_triangulation(&dcode(&[3, 0, 0])).diagonals(),
            &[(1, 3), (1, 4)]
        );
        assert_eq!(
            decode_triangulation(&dcode(&[1, 1, 1])).diagonals(),
            &[(2, 5), (3, 5)]
        );
        let t = decode_triangulation(&dcode(&[2, 1, 1, 0]));
        assert_eq!(t.npoints(), 6);
        assert_eq!(t.diagonals(), &[(1, 5), (2, 5), (3, 5)]);
    }

    #[test]
    fn decoder_counts() {
        let (_, stats) = decode_triangulation_counted(&dcode(&[2, 1, 1, 0]));
        assert_eq!(
            stats,
            StackStats {
                pushes: 4,
                pops: 4,
                emitted: 4
            }
        );
    }

    #[test]
    fn decoder_rejects_invalid_degrees() {
        assert_eq!(
            decode_degrees(&[0, 1, 2]).unwrap_err(),
            CodeError::SuffixViolated { suffix: 1 }
        );
        assert!(matches!(
            decode_degrees(&[1, 1, 0]).unwrap_err(),
            CodeError::SumMismatch { .. }
        ));
        assert_eq!(decode_degrees(&[]).unwrap_err(), CodeError::Empty);
    }

    #[test]
    fn rejects_non_maximal() {
        assert_eq!(
            Triangulation::new(5, &[(1, 3)]),
            Err(PolygonError::DiagonalCount {
                expected: 2,
                found: 1
            })
        );
        assert!(matches!(
            Triangulation::new(6, &[(1, 4), (2, 5), (3, 6)]),
            Err(PolygonError::Crossing { .. })
        ));
    }
}
