//! Plane perfect matchings on `2n` convex vertices and their bitonic
//! `k`-colorings.

use thiserror::Error;

use crate::polygon::Edge;
use crate::seqcore::MatchingCode;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatchingError {
    #[error("a matching needs n >= 1")]
    Empty,
    #[error("expected {expected} edges, found {found}")]
    EdgeCount { expected: usize, found: usize },
    #[error("edge ({}, {}) is not a pair of distinct vertices in 1..={max}", .edge.0, .edge.1)]
    OutOfRange { edge: Edge, max: usize },
    #[error("vertex {0} is covered more than once")]
    Repeated(usize),
    #[error("edges ({}, {}) and ({}, {}) cross", .first.0, .first.1, .second.0, .second.1)]
    Crossing { first: Edge, second: Edge },
    #[error("color count {k} does not divide n = {n}")]
    ColorCount { k: usize, n: usize },
    #[error("edge ({}, {}) is bichromatic for k = {k}", .edge.0, .edge.1)]
    Bichromatic { edge: Edge, k: usize },
}

/// A plane perfect matching; edges are stored as `(smaller, larger)` sorted by
/// the smaller endpoint.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Matching {
    n: usize,
    edges: Vec<Edge>,
}

impl Matching {
    pub fn new(n: usize, edges: Vec<Edge>) -> Result<Self, MatchingError> {
        if n == 0 {
            return Err(MatchingError::Empty);
        }
        if edges.len() != n {
            return Err(MatchingError::EdgeCount {
                expected: n,
                found: edges.len(),
            });
        }
        let max = 2 * n;
        let mut partner = vec![0usize; max + 1];
        let mut edges: Vec<Edge> = edges
            .into_iter()
            .map(|(a, b)| if a <= b { (a, b) } else { (b, a) })
            .collect();
        for &edge in &edges {
            let (a, b) = edge;
            if a == 0 || b > max || a == b {
                return Err(MatchingError::OutOfRange { edge, max });
            }
            for v in [a, b] {
                if partner[v] != 0 {
                    return Err(MatchingError::Repeated(v));
                }
            }
            partner[a] = b;
            partner[b] = a;
        }
        // n distinct edges over 2n distinct vertices: perfect.
        let mut open: Vec<usize> = Vec::with_capacity(n);
        for v in 1..=max {
            let w = partner[v];
            if w > v {
                open.push(v);
            } else {
                let top = open.pop().expect("partner opened earlier");
                if top != w {
                    return Err(MatchingError::Crossing {
                        first: (w, v),
                        second: (top, partner[top]),
                    });
                }
            }
        }
        edges.sort_unstable();
        Ok(Self { n, edges })
    }

    pub(crate) fn from_sorted_unchecked(n: usize, edges: Vec<Edge>) -> Self {
        Self { n, edges }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// `partner[v]` for `v` in `1..=2n`; index 0 is unused.
    pub fn partners(&self) -> Vec<usize> {
        let mut partner = vec![0usize; 2 * self.n + 1];
        for &(a, b) in &self.edges {
            partner[a] = b;
            partner[b] = a;
        }
        partner
    }
}

/// Bitonic color of vertex `i`: `c_1..c_k, c_k..c_1` repeated.
pub fn color_of(i: usize, k: usize) -> usize {
    assert!(i >= 1 && k >= 1, "color_of needs i >= 1 and k >= 1");
    let q = (i - 1) % (2 * k);
    if q < k {
        q + 1
    } else {
        2 * k - q
    }
}

/// Stack decoder: push on 1, on 0 pop `l` and emit `(l, i)`.
pub fn decode_matching(code: &MatchingCode) -> Matching {
    let n = code.n();
    let mut stack = Vec::with_capacity(n);
    let mut edges = Vec::with_capacity(n);
    for (idx, &b) in code.bits().iter().enumerate() {
        let i = idx + 1;
        if b == 1 {
            stack.push(i);
        } else {
            let l = stack.pop().expect("ballot sequence");
            edges.push((l, i));
        }
    }
    edges.sort_unstable();
    Matching::from_sorted_unchecked(n, edges)
}

/// `b_i = 1` iff `v_i` is the smaller endpoint of its edge.
pub fn encode_matching(m: &Matching) -> MatchingCode {
    let mut bits = vec![0u8; 2 * m.n()];
    for &(a, _) in m.edges() {
        bits[a - 1] = 1;
    }
    MatchingCode::from_bits_unchecked(bits)
}

/// A matching whose edges are all monochromatic under [`color_of`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColoredMatching {
    base: Matching,
    k: usize,
}

impl ColoredMatching {
    pub fn new(base: Matching, k: usize) -> Result<Self, MatchingError> {
        if k == 0 || !base.n().is_multiple_of(k) {
            return Err(MatchingError::ColorCount { k, n: base.n() });
        }
        if let Some(edge) = find_bichromatic_witness(&base, k) {
            return Err(MatchingError::Bichromatic { edge, k });
        }
        Ok(Self { base, k })
    }

    pub(crate) fn new_unchecked(base: Matching, k: usize) -> Self {
        Self { base, k }
    }

    pub fn matching(&self) -> &Matching {
        &self.base
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn into_matching(self) -> Matching {
        self.base
    }
}

/// True iff no block of `k` consecutive entries has a 1 before a 0.
pub fn has_valid_blocks(code: &MatchingCode, k: usize) -> Result<bool, MatchingError> {
    if k == 0 || !code.n().is_multiple_of(k) {
        return Err(MatchingError::ColorCount { k, n: code.n() });
    }
    Ok(code
        .bits()
        .chunks(k)
        .all(|block| block.windows(2).all(|w| w[0] <= w[1])))
}

/// The shortest bichromatic edge (ties broken by smaller start), if any.
pub fn find_bichromatic_witness(m: &Matching, k: usize) -> Option<Edge> {
    m.edges()
        .iter()
        .copied()
        .filter(|&(a, b)| color_of(a, k) != color_of(b, k))
        .min_by_key(|&(a, b)| (b - a, a))
}

/// True iff every edge is monochromatic; false when `k` does not divide `n`.
pub fn is_k_colored(m: &Matching, k: usize) -> bool {
    k >= 1
        && m.n().is_multiple_of(k)
        && m.edges()
            .iter()
            .all(|&(a, b)| color_of(a, k) == color_of(b, k))
}

/// Linear check that `code` is the outdegree sequence of a `k`-colored
/// matching, by running the stack decoder and coloring each emitted edge.
pub fn is_k_color_valid_code(code: &MatchingCode, k: usize) -> bool {
    if k == 0 || !code.n().is_multiple_of(k) {
        return false;
    }
    let mut stack = Vec::with_capacity(code.n());
    for (idx, &b) in code.bits().iter().enumerate() {
        let i = idx + 1;
        if b == 1 {
            stack.push(i);
        } else {
            let l = stack.pop().expect("ballot sequence");
            if color_of(l, k) != color_of(i, k) {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn code(s: &str) -> MatchingCode {
        s.parse().unwrap()
    }

    #[test]
    fn bitonic_colors() {
        assert_eq!(color_of(1, 3), 1);
        assert_eq!(color_of(3, 3), 3);
        assert_eq!(color_of(4, 3), 3);
        assert_eq!(color_of(7, 3), 1);
        let pattern: Vec<usize> = (1..=12).map(|i| color_of(i, 3)).collect();
        assert_eq!(pattern, vec![1, 2, 3, 3, 2, 1, 1, 2, 3, 3, 2, 1]);
        assert!((1..=10).all(|i| color_of(i, 1) == 1));
    }

    #[test]
    fn decode_examples() {
        assert_eq!(
            decode_matching(&code("111000")).edges(),
            &[(1, 6), (2, 5), (3, 4)]
        );
        assert_eq!(
            decode_matching(&code("101010")).edges(),
            &[(1, 2), (3, 4), (5, 6)]
        );
        assert_eq!(
            decode_matching(&code("11010100")).edges(),
            &[(1, 8), (2, 3), (4, 5), (6, 7)]
        );
    }

    #[test]
    fn encode_examples() {
        let m = Matching::new(3, vec![(1, 6), (2, 5), (3, 4)]).unwrap();
        assert_eq!(encode_matching(&m).to_string(), "111000");
        let u2 = Matching::new(6, vec![(2, 3), (10, 11), (1, 12), (4, 9), (5, 8), (6, 7)]).unwrap();
        assert_eq!(encode_matching(&u2).to_string(), "110111000100");
        let m = Matching::new(4, vec![(2, 3), (1, 4), (6, 7), (5, 8)]).unwrap();
        assert_eq!(encode_matching(&m).to_string(), "11001100");
    }

    #[test]
    fn rejects_invalid_matchings() {
        assert_eq!(
            Matching::new(2, vec![(1, 3), (2, 4)]),
            Err(MatchingError::Crossing {
                first: (1, 3),
                second: (2, 4)
            })
        );
        assert_eq!(
            Matching::new(2, vec![(1, 2), (2, 3)]),
            Err(MatchingError::Repeated(2))
        );
        assert!(matches!(
            Matching::new(2, vec![(1, 2)]),
            Err(MatchingError::EdgeCount { .. })
        ));
        assert!(matches!(
            Matching::new(1, vec![(1, 3)]),
            Err(MatchingError::OutOfRange { .. })
        ));
        assert_eq!(Matching::new(0, vec![]), Err(MatchingError::Empty));
        // Reversed pairs are normalized.
        let m = Matching::new(2, vec![(4, 1), (3, 2)]).unwrap();
        assert_eq!(m.edges(), &[(1, 4), (2, 3)]);
    }

    #[test]
    fn block_examples() {
        assert_eq!(has_valid_blocks(&code("11110000"), 2), Ok(true));
        assert_eq!(has_valid_blocks(&code("1010"), 2), Ok(false));
        assert_eq!(has_valid_blocks(&code("11010100"), 2), Ok(true));
        assert_eq!(
            has_valid_blocks(&code("111000"), 2),
            Err(MatchingError::ColorCount { k: 2, n: 3 })
        );
    }

    #[test]
    fn witness_examples() {
        let m = decode_matching(&code("11110000"));
        assert_eq!(find_bichromatic_witness(&m, 2), None);
        assert!(is_k_colored(&m, 2));

        let m = decode_matching(&code("110100110100"));
        assert_eq!(
            m.edges(),
            &[(1, 6), (2, 3), (4, 5), (7, 12), (8, 9), (10, 11)]
        );
        assert_eq!(find_bichromatic_witness(&m, 2), Some((1, 6)));
        assert!(!is_k_colored(&m, 2));

        let m = decode_matching(&code("1010"));
        assert_eq!(find_bichromatic_witness(&m, 2), Some((1, 2)));
    }

    #[test]
    fn one_color_is_unconstrained() {
        for s in ["10", "1100", "101010", "110100", "11010100"] {
            let c = code(s);
            assert!(is_k_colored(&decode_matching(&c), 1));
            assert!(is_k_color_valid_code(&c, 1));
        }
    }

    #[test]
    fn colored_matching_constructor() {
        let m = decode_matching(&code("11010100"));
        assert!(ColoredMatching::new(m.clone(), 2).is_ok());
        assert_eq!(
            ColoredMatching::new(m.clone(), 3),
            Err(MatchingError::ColorCount { k: 3, n: 4 })
        );
        let bad = decode_matching(&code("1010"));
        assert_eq!(
            ColoredMatching::new(bad, 2),
            Err(MatchingError::Bichromatic { edge: (1, 2), k: 2 })
        );
    }
}
