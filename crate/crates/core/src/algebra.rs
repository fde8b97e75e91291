//! Temperley-Lieb and Fuss-Catalan diagrams with unit loop weight.
//!
//! A diagram on `n` strands is a plane perfect matching of `2n` vertices.
//! The top row is `v_1..v_n` left to right and the bottom row continues
//! clockwise, so the vertex under `v_j` is `v_{2n+1-j}`.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::matching::{color_of, find_bichromatic_witness, Matching, MatchingError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error(transparent)]
    Matching(#[from] MatchingError),
    #[error("generator index {i} outside 1..={max}")]
    Index { i: usize, max: usize },
    #[error("arc count {l} outside 1..={k}")]
    ArcCount { l: usize, k: usize },
    #[error("diagrams on {left} and {right} strands cannot be composed")]
    SizeMismatch { left: usize, right: usize },
    #[error("diagrams with color counts {left:?} and {right:?} cannot be composed")]
    ColorMismatch {
        left: Option<usize>,
        right: Option<usize>,
    },
    #[error("invalid word: {0}")]
    Word(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Diagram {
    pairing: Matching,
    k: Option<usize>,
}

impl Diagram {
    /// Wraps a matching on `2n` vertices; with `Some(k)` every pair must be
    /// monochromatic under the bitonic coloring.
    pub fn new(pairing: Matching, k: Option<usize>) -> Result<Self, AlgebraError> {
        if let Some(k) = k {
            if k == 0 || !pairing.n().is_multiple_of(k) {
                return Err(MatchingError::ColorCount { k, n: pairing.n() }.into());
            }
            if let Some(edge) = find_bichromatic_witness(&pairing, k) {
                return Err(MatchingError::Bichromatic { edge, k }.into());
            }
        }
        Ok(Self { pairing, k })
    }

    /// Strand count `n`.
    pub fn rows(&self) -> usize {
        self.pairing.n()
    }

    pub fn k(&self) -> Option<usize> {
        self.k
    }

    pub fn pairing(&self) -> &Matching {
        &self.pairing
    }

    /// Number of pairs `{j, 2n+1-j}`.
    pub fn propagating(&self) -> usize {
        let n = self.rows();
        self.pairing
            .edges()
            .iter()
            .filter(|&&(a, b)| a + b == 2 * n + 1)
            .count()
    }
}

fn from_pairs(n: usize, k: Option<usize>, partner: &[usize]) -> Diagram {
    let edges = (1..=2 * n)
        .filter(|&v| partner[v] > v)
        .map(|v| (v, partner[v]))
        .collect();
    let pairing = Matching::new(n, edges).expect("composition preserves planarity");
    Diagram { pairing, k }
}

pub fn identity_diagram(n: usize) -> Diagram {
    assert!(n >= 1, "identity needs n >= 1");
    let edges = (1..=n).map(|j| (j, 2 * n + 1 - j)).collect();
    Diagram {
        pairing: Matching::new(n, edges).expect("nested lines"),
        k: None,
    }
}

/// `u_i` of TL_n: arcs `{i, i+1}` and `{2n-i, 2n-i+1}`.
pub fn tl_generator(n: usize, i: usize) -> Result<Diagram, AlgebraError> {
    if n < 2 || i == 0 || i >= n {
        return Err(AlgebraError::Index {
            i,
            max: n.saturating_sub(1),
        });
    }
    let mut partner: Vec<usize> = (0..=2 * n).map(|v| 2 * n + 1 - v).collect();
    for (a, b) in [(i, i + 1), (2 * n - i, 2 * n - i + 1)] {
        partner[a] = b;
        partner[b] = a;
    }
    Ok(from_pairs(n, None, &partner))
}

/// `u_i^{(l)}` on `n = mk` strands: `l` nested arcs around the top gap
/// between `v_{ki}` and `v_{ki+1}`, mirrored on the bottom row.
///
/// For `i = m` both arc families coincide with propagating lines, so the
/// result is the identity.
pub fn fc_generator(m: usize, k: usize, i: usize, l: usize) -> Result<Diagram, AlgebraError> {
    if m == 0 || i == 0 || i > m {
        return Err(AlgebraError::Index { i, max: m });
    }
    if k == 0 || l == 0 || l > k {
        return Err(AlgebraError::ArcCount { l, k });
    }
    let n = m * k;
    let c = k * i;
    let mut partner: Vec<usize> = (0..=2 * n).map(|v| 2 * n + 1 - v).collect();
    for j in 1..=l {
        let (a, b) = (c + 1 - j, c + j);
        partner[a] = b;
        partner[b] = a;
        let (a, b) = (2 * n - c + 1 - j, 2 * n - c + j);
        partner[a] = b;
        partner[b] = a;
    }
    let d = from_pairs(n, Some(k), &partner);
    debug_assert!(find_bichromatic_witness(d.pairing(), k).is_none());
    Ok(d)
}

/// Stacks `top` over `bottom` and returns the product with its loop count.
pub fn compose(top: &Diagram, bottom: &Diagram) -> Result<(Diagram, usize), AlgebraError> {
    let n = top.rows();
    if bottom.rows() != n {
        return Err(AlgebraError::SizeMismatch {
            left: n,
            right: bottom.rows(),
        });
    }
    if top.k != bottom.k {
        return Err(AlgebraError::ColorMismatch {
            left: top.k,
            right: bottom.k,
        });
    }
    let p1 = top.pairing.partners();
    let p2 = bottom.pairing.partners();
    let mirror = |v: usize| 2 * n + 1 - v;
    // seen[j]: middle slot j (top of `bottom`, bottom of `top`) traversed.
    let mut seen = vec![false; n + 1];
    let mut out = vec![0usize; 2 * n + 1];

    // Walk from a middle slot entering `bottom` at its top vertex j; returns
    // the exposed endpoint reached (an output label), or None on a loop.
    let walk = |mut j: usize, mut in_bottom: bool, seen: &mut [bool]| -> Option<usize> {
        loop {
            if seen[j] {
                return None;
            }
            seen[j] = true;
            if in_bottom {
                let z = p2[j];
                if z > n {
                    return Some(z);
                }
                j = z;
                in_bottom = false;
            } else {
                let y = p1[mirror(j)];
                if y <= n {
                    return Some(y);
                }
                j = mirror(y);
                in_bottom = true;
            }
        }
    };

    for v in 1..=2 * n {
        if out[v] != 0 {
            continue;
        }
        let end = if v <= n {
            let y = p1[v];
            if y <= n {
                y
            } else {
                walk(mirror(y), true, &mut seen).expect("open path")
            }
        } else {
            let z = p2[v];
            if z > n {
                z
            } else {
                walk(z, false, &mut seen).expect("open path")
            }
        };
        out[v] = end;
        out[end] = v;
    }
    let mut loops = 0;
    for j in 1..=n {
        if !seen[j] {
            walk(j, true, &mut seen);
            loops += 1;
        }
    }
    Ok((from_pairs(n, top.k, &out), loops))
}

/// Which algebra a word is evaluated in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// TL_n, generators `u_1..u_{n-1}`.
    TemperleyLieb { n: usize },
    /// Fuss-Catalan on `mk` strands, generators `u_i^{(l)}`.
    FussCatalan { m: usize, k: usize },
}

impl Family {
    pub fn strands(&self) -> usize {
        match *self {
            Family::TemperleyLieb { n } => n,
            Family::FussCatalan { m, k } => m * k,
        }
    }

    pub fn identity(&self) -> Diagram {
        let mut d = identity_diagram(self.strands());
        if let Family::FussCatalan { k, .. } = *self {
            d.k = Some(k);
        }
        d
    }

    pub fn generator(&self, letter: Letter) -> Result<Diagram, AlgebraError> {
        match (*self, letter.l) {
            (Family::TemperleyLieb { n }, None) => tl_generator(n, letter.i),
            (Family::TemperleyLieb { .. }, Some(_)) => Err(AlgebraError::Word(format!(
                "{letter} carries an arc count outside a colored algebra"
            ))),
            (Family::FussCatalan { .. }, None) => {
                Err(AlgebraError::Word(format!("{letter} needs an arc count")))
            }
            (Family::FussCatalan { m, k }, Some(0)) => {
                if letter.i == 0 || letter.i > m {
                    Err(AlgebraError::Index {
                        i: letter.i,
                        max: m,
                    })
                } else {
                    let _ = k;
                    Ok(self.identity())
                }
            }
            (Family::FussCatalan { m, k }, Some(l)) => fc_generator(m, k, letter.i, l),
        }
    }

    /// Every generator of the family; `u_i^{(0)}` is left out.
    pub fn generators(&self) -> Vec<Letter> {
        match *self {
            Family::TemperleyLieb { n } => (1..n).map(|i| Letter { i, l: None }).collect(),
            Family::FussCatalan { m, k } => (1..=m)
                .flat_map(|i| (1..=k).map(move |l| Letter { i, l: Some(l) }))
                .collect(),
        }
    }
}

/// One generator symbol, `u3` or `u2^(1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Letter {
    pub i: usize,
    pub l: Option<usize>,
}

impl Letter {
    pub fn tl(i: usize) -> Self {
        Self { i, l: None }
    }

    pub fn fc(i: usize, l: usize) -> Self {
        Self { i, l: Some(l) }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.l {
            None => write!(f, "u{}", self.i),
            Some(l) => write!(f, "u{}^({})", self.i, l),
        }
    }
}

impl FromStr for Letter {
    type Err = AlgebraError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || AlgebraError::Word(format!("cannot parse generator {s:?}"));
        let rest = s.strip_prefix('u').ok_or_else(bad)?;
        let (index, arcs) = match rest.split_once('^') {
            Some((index, arcs)) => {
                let arcs = arcs
                    .strip_prefix('(')
                    .and_then(|a| a.strip_suffix(')'))
                    .unwrap_or(arcs);
                (index, Some(arcs.parse::<usize>().map_err(|_| bad())?))
            }
            None => (rest, None),
        };
        let i = index.parse::<usize>().map_err(|_| bad())?;
        Ok(Letter { i, l: arcs })
    }
}

/// A product of generators, read left to right as top to bottom.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(pub Vec<Letter>);

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("I");
        }
        for (idx, letter) in self.0.iter().enumerate() {
            if idx > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{letter}")?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = AlgebraError;

    /// Whitespace or `*` separated letters; `I` or an empty string is the
    /// identity.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.split(|c: char| c.is_whitespace() || c == '*')
            .filter(|t| !t.is_empty() && *t != "I")
            .map(str::parse)
            .collect::<Result<Vec<_>, _>>()
            .map(Word)
    }
}

/// Evaluates a word and returns the product with the total loop count.
pub fn evaluate(family: Family, word: &Word) -> Result<(Diagram, usize), AlgebraError> {
    let mut acc = family.identity();
    let mut loops = 0;
    for &letter in &word.0 {
        let (next, extra) = compose(&acc, &family.generator(letter)?)?;
        acc = next;
        loops += extra;
    }
    Ok((acc, loops))
}

/// The defining relations, named by shape.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Relation {
    /// `u_i u_i = u_i`.
    Idempotent,
    /// `u_i u_j = u_j u_i` for `|i - j| > 1`.
    FarCommute,
    /// `u_i u_{i+1} u_i = u_i`.
    BraidUp,
    /// `u_{i+1} u_i u_{i+1} = u_{i+1}`.
    BraidDown,
    /// `u_i^{(p)} u_i^{(q)} = u_i^{(q)} u_i^{(p)} = u_i^{(q)}` for `p <= q`.
    Absorb,
    /// Colored generators commute when far apart or when `p + q <= k`.
    Commute,
    /// Adjacent colored generators with `p + q > k`.
    Cubic,
}

impl Relation {
    pub fn name(self) -> &'static str {
        match self {
            Relation::Idempotent => "idempotent",
            Relation::FarCommute => "far-commute",
            Relation::BraidUp => "braid-up",
            Relation::BraidDown => "braid-down",
            Relation::Absorb => "absorb",
            Relation::Commute => "commute",
            Relation::Cubic => "cubic",
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One instance of a defining relation, checked as diagram equality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationCheck {
    pub relation: Relation,
    pub lhs: Word,
    pub rhs: Word,
    pub holds: bool,
}

impl fmt::Display for RelationCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verdict = if self.holds { "ok" } else { "FAILS" };
        write!(
            f,
            "{}: {} = {}: {verdict}",
            self.relation, self.lhs, self.rhs
        )
    }
}

fn check(family: Family, relation: Relation, lhs: Vec<Letter>, rhs: Vec<Letter>) -> RelationCheck {
    let (lhs, rhs) = (Word(lhs), Word(rhs));
    let left = evaluate(family, &lhs).expect("generators in range").0;
    let right = evaluate(family, &rhs).expect("generators in range").0;
    RelationCheck {
        relation,
        holds: left == right,
        lhs,
        rhs,
    }
}

/// The Temperley-Lieb relations of TL_n for every admissible index.
pub fn tl_relations(n: usize) -> Vec<RelationCheck> {
    let family = Family::TemperleyLieb { n };
    let u = Letter::tl;
    let mut out = Vec::new();
    for i in 1..n {
        out.push(check(
            family,
            Relation::Idempotent,
            vec![u(i), u(i)],
            vec![u(i)],
        ));
    }
    for i in 1..n {
        for j in 1..n {
            if i.abs_diff(j) > 1 {
                out.push(check(
                    family,
                    Relation::FarCommute,
                    vec![u(i), u(j)],
                    vec![u(j), u(i)],
                ));
            }
        }
    }
    for i in 1..n.saturating_sub(1) {
        out.push(check(
            family,
            Relation::BraidUp,
            vec![u(i), u(i + 1), u(i)],
            vec![u(i)],
        ));
        out.push(check(
            family,
            Relation::BraidDown,
            vec![u(i + 1), u(i), u(i + 1)],
            vec![u(i + 1)],
        ));
    }
    out
}

/// The colored relations over generators `u_i^{(l)}` with `i < m`.
///
/// `u_m^{(l)}` is the identity and is left out. The cubic relation is
/// checked in the form `u_i^{(p)} u_j^{(q)} u_i^{(p)} = u_i^{(p)} u_j^{(k-p)}`
/// for `j = i ± 1`, `p + q > k`; with `k = 1` it is the braid relation.
pub fn fc_relations(m: usize, k: usize) -> Vec<RelationCheck> {
    let family = Family::FussCatalan { m, k };
    let u = Letter::fc;
    let mut out = Vec::new();
    let indices = 1..m;
    for i in indices.clone() {
        for p in 1..=k {
            for q in p..=k {
                out.push(check(
                    family,
                    Relation::Absorb,
                    vec![u(i, p), u(i, q)],
                    vec![u(i, q)],
                ));
                out.push(check(
                    family,
                    Relation::Absorb,
                    vec![u(i, q), u(i, p)],
                    vec![u(i, q)],
                ));
            }
        }
    }
    for i in indices.clone() {
        for j in indices.clone() {
            let far = i.abs_diff(j) > 1;
            let near = i.abs_diff(j) == 1;
            for p in 1..=k {
                for q in 1..=k {
                    if far || (near && p + q <= k) {
                        out.push(check(
                            family,
                            Relation::Commute,
                            vec![u(i, p), u(j, q)],
                            vec![u(j, q), u(i, p)],
                        ));
                    } else if near {
                        let mut rhs = vec![u(i, p)];
                        if p < k {
                            rhs.push(u(j, k - p));
                        }
                        out.push(check(
                            family,
                            Relation::Cubic,
                            vec![u(i, p), u(j, q), u(i, p)],
                            rhs,
                        ));
                    }
                }
            }
        }
    }
    out
}

/// The cubic relation read as the two-factor identity
/// `u_i^{(p)} u_j^{(q)} = u_i^{(p)} u_j^{(k-p)}`, `j = i ± 1 < m`, `p + q > k`.
pub fn fc_cubic_two_factor(m: usize, k: usize) -> Vec<RelationCheck> {
    let family = Family::FussCatalan { m, k };
    let u = Letter::fc;
    let mut out = Vec::new();
    for i in 1..m {
        for j in [i.wrapping_sub(1), i + 1] {
            if j == 0 || j >= m {
                continue;
            }
            for p in 1..=k {
                for q in (k + 1 - p)..=k {
                    let mut rhs = vec![u(i, p)];
                    if p < k {
                        rhs.push(u(j, k - p));
                    }
                    out.push(check(family, Relation::Cubic, vec![u(i, p), u(j, q)], rhs));
                }
            }
        }
    }
    out
}

/// All distinct diagrams reachable from the identity by right
/// multiplication with generators, in breadth-first order.
pub fn monoid_closure(family: Family) -> Vec<Diagram> {
    let generators: Vec<Diagram> = family
        .generators()
        .into_iter()
        .map(|g| family.generator(g).expect("in range"))
        .collect();
    let mut seen = std::collections::HashSet::new();
    let mut order = vec![family.identity()];
    seen.insert(order[0].clone());
    let mut head = 0;
    while head < order.len() {
        let current = order[head].clone();
        head += 1;
        for g in &generators {
            let (next, _) = compose(&current, g).expect("same family");
            if seen.insert(next.clone()) {
                order.push(next);
            }
        }
    }
    order
}

/// Color of the innermost top arc of `u_i^{(l)}`.
pub fn innermost_color(k: usize, i: usize) -> usize {
    color_of(k * i, k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matching::encode_matching;
    use crate::oracle::fuss_catalan;

    fn edges(d: &Diagram) -> Vec<(usize, usize)> {
        d.pairing().edges().to_vec()
    }

    /// Loop count by union-find over both diagrams' vertices.
    fn loops_by_union_find(top: &Diagram, bottom: &Diagram) -> usize {
        let n = top.rows();
        let mut parent: Vec<usize> = (0..4 * n).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut x = x;
            while p[x] != r {
                let next = p[x];
                p[x] = r;
                x = next;
            }
            r
        }
        let mut union = |a: usize, b: usize| {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            parent[ra] = rb;
        };
        for &(a, b) in top.pairing().edges() {
            union(a - 1, b - 1);
        }
        for &(a, b) in bottom.pairing().edges() {
            union(2 * n + a - 1, 2 * n + b - 1);
        }
        for j in 1..=n {
            union(2 * n - j, 2 * n + j - 1);
        }
        let exposed: std::collections::HashSet<usize> = (0..n)
            .chain(3 * n..4 * n)
            .map(|v| find(&mut parent, v))
            .collect();
        let all: std::collections::HashSet<usize> =
            (0..4 * n).map(|v| find(&mut parent, v)).collect();
        all.len() - exposed.len()
    }

    #[test]
    fn identity_examples() {
        assert_eq!(edges(&identity_diagram(1)), vec![(1, 2)]);
        assert_eq!(edges(&identity_diagram(3)), vec![(1, 6), (2, 5), (3, 4)]);
        assert_eq!(
            encode_matching(identity_diagram(6).pairing()).to_string(),
            "111111000000"
        );
    }

    #[test]
    fn tl_generator_examples() {
        assert_eq!(
            edges(&tl_generator(6, 2).unwrap()),
            vec![(1, 12), (2, 3), (4, 9), (5, 8), (6, 7), (10, 11)]
        );
        assert_eq!(edges(&tl_generator(2, 1).unwrap()), vec![(1, 2), (3, 4)]);
        assert_eq!(
            edges(&tl_generator(3, 2).unwrap()),
            vec![(1, 6), (2, 3), (4, 5)]
        );
        assert_eq!(
            tl_generator(3, 3).unwrap_err(),
            AlgebraError::Index { i: 3, max: 2 }
        );
        assert!(tl_generator(3, 0).is_err());
    }

    #[test]
    fn fc_generator_examples() {
        assert_eq!(
            edges(&fc_generator(2, 3, 1, 1).unwrap()),
            vec![(1, 12), (2, 11), (3, 4), (5, 8), (6, 7), (9, 10)]
        );
        assert_eq!(
            edges(&fc_generator(2, 3, 1, 3).unwrap()),
            vec![(1, 6), (2, 5), (3, 4), (7, 12), (8, 11), (9, 10)]
        );
        assert!(fc_generator(2, 3, 3, 1).is_err());
        assert!(fc_generator(2, 3, 1, 4).is_err());
    }

    #[test]
    fn last_fc_generator_is_identity() {
        for (m, k) in [(1, 1), (2, 2), (2, 3), (3, 2), (4, 1)] {
            for l in 1..=k {
                let d = fc_generator(m, k, m, l).unwrap();
                assert_eq!(edges(&d), edges(&identity_diagram(m * k)));
            }
        }
    }

    #[test]
    fn innermost_arc_colors() {
        for k in 1..=4 {
            for i in 1..=5 {
                let expected = if i % 2 == 0 { 1 } else { k };
                assert_eq!(innermost_color(k, i), expected);
            }
        }
    }

    #[test]
    fn compose_examples() {
        let u2 = tl_generator(6, 2).unwrap();
        let u3 = tl_generator(6, 3).unwrap();
        assert_eq!(compose(&u2, &u2).unwrap(), (u2.clone(), 1));
        let (u3u2, l1) = compose(&u3, &u2).unwrap();
        let (prod, l2) = compose(&u2, &u3u2).unwrap();
        assert_eq!((prod, l1 + l2), (u2.clone(), 0));
        let id = identity_diagram(6);
        assert_eq!(compose(&id, &u3).unwrap(), (u3.clone(), 0));
    }

    #[test]
    fn compose_rejects_mismatches() {
        let a = tl_generator(3, 1).unwrap();
        let b = tl_generator(4, 1).unwrap();
        assert_eq!(
            compose(&a, &b).unwrap_err(),
            AlgebraError::SizeMismatch { left: 3, right: 4 }
        );
        let c = fc_generator(3, 1, 1, 1).unwrap();
        assert!(matches!(
            compose(&a, &c).unwrap_err(),
            AlgebraError::ColorMismatch { .. }
        ));
    }

    #[test]
    fn loop_counts_agree_with_union_find() {
        for n in 2..=5 {
            let all = monoid_closure(Family::TemperleyLieb { n });
            for x in &all {
                for y in &all {
                    let (_, loops) = compose(x, y).unwrap();
                    assert_eq!(loops, loops_by_union_find(x, y));
                }
            }
        }
    }

    #[test]
    fn words_parse_and_print() {
        let w: Word = "u2 u3 u2".parse().unwrap();
        assert_eq!(w.0, vec![Letter::tl(2), Letter::tl(3), Letter::tl(2)]);
        let w: Word = "u1^(2) u2^(1)".parse().unwrap();
        assert_eq!(w.0, vec![Letter::fc(1, 2), Letter::fc(2, 1)]);
        assert_eq!(w.to_string(), "u1^(2) u2^(1)");
        assert_eq!("u1^2".parse::<Letter>().unwrap(), Letter::fc(1, 2));
        assert_eq!("I".parse::<Word>().unwrap(), Word::default());
        assert!("v1".parse::<Word>().is_err());
        assert!("u1^(x)".parse::<Word>().is_err());
    }

    #[test]
    fn evaluate_words() {
        let family = Family::TemperleyLieb { n: 6 };
        let (d, loops) = evaluate(family, &"u2 u2".parse().unwrap()).unwrap();
        assert_eq!((d, loops), (tl_generator(6, 2).unwrap(), 1));
        assert!(evaluate(family, &"u1^(1)".parse().unwrap()).is_err());
        let family = Family::FussCatalan { m: 2, k: 2 };
        let (d, _) = evaluate(family, &"u1^(0)".parse().unwrap()).unwrap();
        assert_eq!(d, family.identity());
    }

    #[test]
    fn tl_relations_hold() {
        for n in 2..=6 {
            let checks = tl_relations(n);
            assert!(checks.iter().all(|c| c.holds), "{checks:#?}");
        }
    }

    #[test]
    fn small_closures() {
        let sizes: Vec<usize> = (1..=4)
            .map(|n| monoid_closure(Family::TemperleyLieb { n }).len())
            .collect();
        assert_eq!(sizes, vec![1, 2, 5, 14]);
        assert_eq!(monoid_closure(Family::FussCatalan { m: 2, k: 2 }).len(), 3);
    }

    #[test]
    fn colored_closures_match_fuss_catalan() {
        for (m, k) in [(2, 3), (3, 2), (3, 3), (4, 2), (4, 1)] {
            let size = monoid_closure(Family::FussCatalan { m, k }).len();
            assert_eq!(
                size.to_string(),
                fuss_catalan(k as u64, m as u64).to_string(),
                "m={m} k={k}"
            );
        }
    }

    #[test]
    fn fc_relations_hold() {
        for (m, k) in [(2, 2), (2, 3), (3, 2), (3, 3), (4, 2)] {
            let checks = fc_relations(m, k);
            assert!(!checks.is_empty());
            assert!(checks.iter().all(|c| c.holds), "{checks:#?}");
        }
        assert!(fc_relations(3, 2)
            .iter()
            .any(|c| c.relation == Relation::Cubic));
    }

    #[test]
    fn two_factor_reading_fails() {
        let checks = fc_cubic_two_factor(3, 2);
        assert_eq!(checks.len(), 6);
        assert!(checks.iter().all(|c| !c.holds));
        // k = 1 would give u1 u2 = u1.
        let checks = fc_cubic_two_factor(3, 1);
        assert_eq!(
            checks[0].to_string(),
            "cubic: u1^(1) u2^(1) = u1^(1): FAILS"
        );
    }

    #[test]
    fn products_are_colored_and_plane() {
        let family = Family::FussCatalan { m: 3, k: 2 };
        let all = monoid_closure(family);
        for x in &all {
            for y in &all {
                let (d, _) = compose(x, y).unwrap();
                assert!(Diagram::new(d.pairing().clone(), Some(2)).is_ok());
            }
        }
    }
}
