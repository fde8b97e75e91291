//! Exact counting formulas and brute-force enumerators.
//!
//! The enumerators here never go through the codecs they are used to check:
//! ballots are generated lexicographically, matchings by choosing the
//! partner of the first vertex, and tilings by choosing the face on the hull
//! edge `p_1 p_N`.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigUint;
use num_traits::One;
use thiserror::Error;

use crate::matching::{decode_matching, is_k_colored, ColoredMatching, Matching};
use crate::polygon::Edge;
use crate::seqcore::MatchingCode;
use crate::tiling::Tiling;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("{what} = {requested} exceeds the configured limit {limit}")]
    LimitExceeded {
        what: &'static str,
        requested: usize,
        limit: usize,
    },
    #[error("invalid parameters: {0}")]
    Parameters(String),
}

/// Size limits for the exhaustive enumerators.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumLimits {
    pub max_ballot_n: usize,
    pub max_tiling_points: usize,
}

impl Default for EnumLimits {
    fn default() -> Self {
        Self {
            max_ballot_n: 10,
            max_tiling_points: 14,
        }
    }
}

pub fn binomial(n: u64, r: u64) -> BigUint {
    if r > n {
        return BigUint::default();
    }
    let r = r.min(n - r);
    let mut acc = BigUint::one();
    for j in 0..r {
        // acc * (n - j) is divisible by (j + 1) at every step.
        acc = acc * BigUint::from(n - j) / BigUint::from(j + 1);
    }
    acc
}

/// `C_n = binom(2n, n) / (n + 1)`.
pub fn catalan(n: u64) -> BigUint {
    binomial(2 * n, n) / BigUint::from(n + 1)
}

/// `f(k, m) = binom(km + m, m - 1) / m`, for `k, m >= 1`.
pub fn fuss_catalan(k: u64, m: u64) -> BigUint {
    assert!(k >= 1 && m >= 1, "fuss_catalan needs k, m >= 1");
    binomial(k * m + m, m - 1) / BigUint::from(m)
}

/// All ballot sequences of length `2n` in lexicographic order (0 < 1).
pub struct Ballots {
    n: usize,
    current: Option<Vec<u8>>,
}

impl Ballots {
    fn new(n: usize) -> Self {
        let current = (n > 0).then(|| smallest_completion(Vec::with_capacity(2 * n), n));
        Self { n, current }
    }
}

/// Extends a feasible prefix with the lexicographically smallest completion:
/// a 0 whenever the prefix has an unmatched 1, otherwise a 1.
fn smallest_completion(mut prefix: Vec<u8>, n: usize) -> Vec<u8> {
    let mut ones = prefix.iter().filter(|&&b| b == 1).count();
    let mut zeros = prefix.len() - ones;
    while prefix.len() < 2 * n {
        if zeros < ones {
            prefix.push(0);
            zeros += 1;
        } else {
            prefix.push(1);
            ones += 1;
        }
    }
    prefix
}

fn successor(bits: &[u8], n: usize) -> Option<Vec<u8>> {
    let mut ones = bits.iter().filter(|&&b| b == 1).count();
    for p in (0..bits.len()).rev() {
        if bits[p] == 1 {
            ones -= 1;
            continue;
        }
        // bits[..p] has `ones` ones; try placing a 1 at p.
        if ones < n {
            let mut next = bits[..p].to_vec();
            next.push(1);
            return Some(smallest_completion(next, n));
        }
    }
    None
}

impl Iterator for Ballots {
    type Item = MatchingCode;

    fn next(&mut self) -> Option<Self::Item> {
        let current = self.current.take()?;
        self.current = successor(&current, self.n);
        Some(MatchingCode::new(current).expect("generated ballot"))
    }
}

fn check_limit(what: &'static str, requested: usize, limit: usize) -> Result<(), OracleError> {
    if requested > limit {
        Err(OracleError::LimitExceeded {
            what,
            requested,
            limit,
        })
    } else {
        Ok(())
    }
}

pub fn enumerate_ballots(n: usize) -> Result<Ballots, OracleError> {
    enumerate_ballots_with(n, &EnumLimits::default())
}

pub fn enumerate_ballots_with(n: usize, limits: &EnumLimits) -> Result<Ballots, OracleError> {
    check_limit("n", n, limits.max_ballot_n)?;
    Ok(Ballots::new(n))
}

/// All plane perfect matchings on `2n` vertices, generated recursively by
/// the partner of the first vertex.
pub fn enumerate_matchings(n: usize) -> Result<impl Iterator<Item = Matching>, OracleError> {
    check_limit("n", n, EnumLimits::default().max_ballot_n)?;
    let mut memo: HashMap<usize, Vec<Vec<Edge>>> = HashMap::new();
    let all = if n == 0 {
        Vec::new()
    } else {
        matchings_of(n, &mut memo).clone()
    };
    Ok(all.into_iter().map(move |mut edges| {
        edges.sort_unstable();
        Matching::new(n, edges).expect("generated matching")
    }))
}

/// Matchings of vertices `1..=2n`.
fn matchings_of(n: usize, memo: &mut HashMap<usize, Vec<Vec<Edge>>>) -> &Vec<Vec<Edge>> {
    if !memo.contains_key(&n) {
        let mut out = Vec::new();
        if n == 0 {
            out.push(Vec::new());
        } else {
            for j in 1..=n {
                // v_1 pairs with v_{2j}; inside has j - 1 edges, outside n - j.
                let inside = matchings_of(j - 1, memo).clone();
                let outside = matchings_of(n - j, memo).clone();
                for a in &inside {
                    for b in &outside {
                        let mut edges = Vec::with_capacity(n);
                        edges.push((1, 2 * j));
                        edges.extend(a.iter().map(|&(x, y)| (x + 1, y + 1)));
                        edges.extend(b.iter().map(|&(x, y)| (x + 2 * j, y + 2 * j)));
                        out.push(edges);
                    }
                }
            }
        }
        memo.insert(n, out);
    }
    &memo[&n]
}

/// Ballots of length `2km` filtered to the `k`-colored ones.
pub fn enumerate_colored_matchings(
    k: usize,
    m: usize,
) -> Result<impl Iterator<Item = ColoredMatching>, OracleError> {
    enumerate_colored_matchings_with(k, m, &EnumLimits::default())
}

pub fn enumerate_colored_matchings_with(
    k: usize,
    m: usize,
    limits: &EnumLimits,
) -> Result<impl Iterator<Item = ColoredMatching>, OracleError> {
    if k == 0 || m == 0 {
        return Err(OracleError::Parameters(format!("k = {k}, m = {m}")));
    }
    let ballots = enumerate_ballots_with(k * m, limits)?;
    Ok(ballots.filter_map(move |code| {
        let matching = decode_matching(&code);
        is_k_colored(&matching, k).then(|| ColoredMatching::new(matching, k).expect("k-colored"))
    }))
}

/// Tilings of a polygon with `size` points `0..size`, root edge `(0, size-1)`.
struct SubTilings {
    t: usize,
    memo: HashMap<usize, Vec<Vec<Edge>>>,
}

impl SubTilings {
    fn get(&mut self, size: usize) -> &Vec<Vec<Edge>> {
        if !self.memo.contains_key(&size) {
            let mut out = Vec::new();
            if size == 2 {
                out.push(Vec::new());
            } else {
                for gaps in root_face_gaps(size, self.t) {
                    let parts: Vec<Vec<Vec<Edge>>> =
                        gaps.iter().map(|&g| self.get(g + 1).clone()).collect();
                    for choice in Odometer::new(parts.iter().map(Vec::len).collect()) {
                        out.push(assemble(&gaps, &parts, &choice, 0));
                    }
                }
            }
            self.memo.insert(size, out);
        }
        &self.memo[&size]
    }
}

/// Corner gaps `c_{j+1} - c_j` of the face on the root edge of a `size`-gon:
/// `t - 1` gaps summing to `size - 1`, each `1 (mod t - 2)`.
fn root_face_gaps(size: usize, t: usize) -> Vec<Vec<usize>> {
    fn rec(
        remaining: usize,
        slots: usize,
        step: usize,
        cur: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if slots == 0 {
            if remaining == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let mut g = 1;
        while g + (slots - 1) <= remaining {
            cur.push(g);
            rec(remaining - g, slots - 1, step, cur, out);
            cur.pop();
            g += step;
        }
    }
    let mut out = Vec::new();
    rec(size - 1, t - 1, t - 2, &mut Vec::new(), &mut out);
    out
}

fn assemble(
    gaps: &[usize],
    parts: &[Vec<Vec<Edge>>],
    choice: &[usize],
    offset: usize,
) -> Vec<Edge> {
    let mut edges = Vec::new();
    let mut corner = offset;
    for (j, &g) in gaps.iter().enumerate() {
        if g >= 2 {
            edges.push((corner, corner + g));
        }
        edges.extend(
            parts[j][choice[j]]
                .iter()
                .map(|&(a, b)| (a + corner, b + corner)),
        );
        corner += g;
    }
    edges
}

/// Mixed-radix counter over `radices`; yields nothing if any radix is 0.
struct Odometer {
    radices: Vec<usize>,
    current: Option<Vec<usize>>,
}

impl Odometer {
    fn new(radices: Vec<usize>) -> Self {
        let current = radices
            .iter()
            .all(|&r| r > 0)
            .then(|| vec![0; radices.len()]);
        Self { radices, current }
    }
}

impl Iterator for Odometer {
    type Item = Vec<usize>;

    fn next(&mut self) -> Option<Self::Item> {
        let current = self.current.take()?;
        let mut next = current.clone();
        let mut carried = true;
        for (digit, &radix) in next.iter_mut().zip(&self.radices).rev() {
            *digit += 1;
            if *digit < radix {
                carried = false;
                break;
            }
            *digit = 0;
        }
        if !carried {
            self.current = Some(next);
        }
        Some(current)
    }
}

/// Streams the `t`-gonal tilings of an `npoints`-gon. The face on the hull
/// edge `p_1 p_N` is chosen in every admissible way and the pockets between
/// its corners are filled from memoized smaller tilings.
pub struct Tilings {
    t: usize,
    npoints: usize,
    sub: SubTilings,
    gaps: std::vec::IntoIter<Vec<usize>>,
    current: Option<(Vec<usize>, Vec<Vec<Vec<Edge>>>, Odometer)>,
}

impl Iterator for Tilings {
    type Item = Tiling;

    fn next(&mut self) -> Option<Self::Item> {
        loop {
            if let Some((gaps, parts, odometer)) = self.current.as_mut() {
                if let Some(choice) = odometer.next() {
                    let mut edges: Vec<Edge> = assemble(gaps, parts, &choice, 1)
                        .into_iter()
                        .filter(|&e| e != (1, self.npoints))
                        .collect();
                    edges.sort_unstable();
                    return Some(Tiling::from_sorted_unchecked(self.t, self.npoints, edges));
                }
            }
            let gaps = self.gaps.next()?;
            let parts: Vec<Vec<Vec<Edge>>> =
                gaps.iter().map(|&g| self.sub.get(g + 1).clone()).collect();
            let odometer = Odometer::new(parts.iter().map(Vec::len).collect());
            self.current = Some((gaps, parts, odometer));
        }
    }
}

pub fn enumerate_tilings(t: usize, npoints: usize) -> Result<Tilings, OracleError> {
    enumerate_tilings_with(t, npoints, &EnumLimits::default())
}

pub fn enumerate_tilings_with(
    t: usize,
    npoints: usize,
    limits: &EnumLimits,
) -> Result<Tilings, OracleError> {
    if t < 3 || npoints < t || !(npoints - 2).is_multiple_of(t - 2) {
        return Err(OracleError::Parameters(format!(
            "no {t}-gonal tiling of {npoints} points"
        )));
    }
    check_limit("npoints", npoints, limits.max_tiling_points)?;
    let gaps = root_face_gaps(npoints, t);
    Ok(Tilings {
        t,
        npoints,
        sub: SubTilings {
            t,
            memo: HashMap::new(),
        },
        gaps: gaps.into_iter(),
        current: None,
    })
}

/// Triangulations of `npoints` points, as 3-gonal tilings.
pub fn enumerate_triangulations(
    npoints: usize,
) -> Result<impl Iterator<Item = crate::Triangulation>, OracleError> {
    Ok(enumerate_tilings(3, npoints)?
        .map(|t| crate::Triangulation::from_sorted_unchecked(t.npoints(), t.diagonals().to_vec())))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountRow {
    pub k: usize,
    pub m: usize,
    pub expected: BigUint,
    /// Enumerated `k`-colored matchings on `2km` vertices.
    pub matchings: BigUint,
    /// Enumerated `(k+2)`-gonal tilings of `km + 2` points.
    pub tilings: BigUint,
}

impl CountRow {
    pub fn agrees(&self) -> bool {
        self.expected == self.matchings && self.expected == self.tilings
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CountTable {
    pub rows: Vec<CountRow>,
}

impl CountTable {
    pub fn build(pairs: &[(usize, usize)], limits: &EnumLimits) -> Result<Self, OracleError> {
        let mut rows = Vec::with_capacity(pairs.len());
        for &(k, m) in pairs {
            let matchings = enumerate_colored_matchings_with(k, m, limits)?.count();
            let tilings = enumerate_tilings_with(k + 2, k * m + 2, limits)?.count();
            rows.push(CountRow {
                k,
                m,
                expected: fuss_catalan(k as u64, m as u64),
                matchings: BigUint::from(matchings),
                tilings: BigUint::from(tilings),
            });
        }
        Ok(Self { rows })
    }

    pub fn all_agree(&self) -> bool {
        self.rows.iter().all(CountRow::agrees)
    }
}

impl fmt::Display for CountTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "k\tm\tf(k,m)\tmatchings\ttilings")?;
        for row in &self.rows {
            writeln!(
                f,
                "{}\t{}\t{}\t{}\t{}",
                row.k, row.m, row.expected, row.matchings, row.tilings
            )?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn catalan_values() {
        let got: Vec<BigUint> = (0..=6).map(catalan).collect();
        let want: Vec<BigUint> = [1u32, 1, 2, 5, 14, 42, 132].map(BigUint::from).to_vec();
        assert_eq!(got, want);
        // Beyond 64 bits.
        assert_eq!(catalan(40).to_string(), "2622127042276492108820");
    }

    #[test]
    fn fuss_catalan_values() {
        assert_eq!(fuss_catalan(2, 2), BigUint::from(3u32));
        assert_eq!(fuss_catalan(3, 2), BigUint::from(4u32));
        assert_eq!(fuss_catalan(2, 4), BigUint::from(55u32));
        for m in 1..=10 {
            assert_eq!(fuss_catalan(1, m), catalan(m));
        }
    }

    #[test]
    fn ballots_small() {
        let strings = |n| -> Vec<String> {
            enumerate_ballots(n)
                .unwrap()
                .map(|c| c.to_string())
                .collect()
        };
        assert_eq!(strings(1), vec!["10"]);
        assert_eq!(strings(2), vec!["1010", "1100"]);
        assert_eq!(strings(3).len(), 5);
        let all = strings(4);
        let mut sorted = all.clone();
        sorted.sort();
        sorted.dedup();
        assert_eq!(all, sorted);
    }

    #[test]
    fn ballots_match_brute_force_filter() {
        for n in 1..=6 {
            let brute: Vec<Vec<u8>> = (0u32..1 << (2 * n))
                .map(|mask| {
                    (0..2 * n)
                        .rev()
                        .map(|j| ((mask >> j) & 1) as u8)
                        .collect::<Vec<u8>>()
                })
                .filter(|bits| crate::seqcore::is_ballot(bits))
                .collect();
            let gen: Vec<Vec<u8>> = enumerate_ballots(n)
                .unwrap()
                .map(|c| c.into_bits())
                .collect();
            assert_eq!(gen, brute, "n = {n}");
        }
    }

    #[test]
    fn limits_are_enforced() {
        assert!(matches!(
            enumerate_ballots(11),
            Err(OracleError::LimitExceeded { .. })
        ));
        let relaxed = EnumLimits {
            max_ballot_n: 11,
            ..EnumLimits::default()
        };
        assert!(enumerate_ballots_with(11, &relaxed).is_ok());
        assert!(matches!(
            enumerate_tilings(3, 15),
            Err(OracleError::LimitExceeded { .. })
        ));
        assert!(matches!(
            enumerate_tilings(4, 7),
            Err(OracleError::Parameters(_))
        ));
    }

    #[test]
    fn direct_matchings_count() {
        for n in 1..=7 {
            let all: Vec<Matching> = enumerate_matchings(n).unwrap().collect();
            let distinct: HashSet<&Matching> = all.iter().collect();
            assert_eq!(BigUint::from(all.len()), catalan(n as u64));
            assert_eq!(distinct.len(), all.len());
        }
    }

    #[test]
    fn colored_examples() {
        let codes: Vec<String> = enumerate_colored_matchings(2, 2)
            .unwrap()
            .map(|m| crate::matching::encode_matching(m.matching()).to_string())
            .collect();
        assert_eq!(codes, vec!["11001100", "11010100", "11110000"]);
        for k in 1..=4 {
            let only: Vec<String> = enumerate_colored_matchings(k, 1)
                .unwrap()
                .map(|m| crate::matching::encode_matching(m.matching()).to_string())
                .collect();
            assert_eq!(only, vec!["1".repeat(k) + &"0".repeat(k)]);
        }
        assert_eq!(enumerate_colored_matchings(1, 3).unwrap().count(), 5);
    }

    #[test]
    fn tiling_examples() {
        let hexagon: Vec<Vec<Edge>> = enumerate_tilings(4, 6)
            .unwrap()
            .map(|t| t.diagonals().to_vec())
            .collect();
        let set: HashSet<Vec<Edge>> = hexagon.iter().cloned().collect();
        assert_eq!(
            set,
            [vec![(1, 4)], vec![(2, 5)], vec![(3, 6)]]
                .into_iter()
                .collect()
        );
        assert_eq!(enumerate_tilings(3, 5).unwrap().count(), 5);
        assert_eq!(enumerate_tilings(5, 8).unwrap().count(), 4);
        assert_eq!(enumerate_tilings(4, 4).unwrap().count(), 1);
    }

    #[test]
    fn enumerated_tilings_are_valid_and_distinct() {
        for (t, npoints) in [(3, 9), (4, 10), (5, 11), (6, 10)] {
            let all: Vec<Tiling> = enumerate_tilings(t, npoints).unwrap().collect();
            for tiling in &all {
                assert_eq!(
                    &Tiling::new(t, npoints, tiling.diagonals()).unwrap(),
                    tiling
                );
            }
            let distinct: HashSet<&Tiling> = all.iter().collect();
            assert_eq!(distinct.len(), all.len());
            let k = (t - 2) as u64;
            let m = (npoints as u64 - 2) / k;
            assert_eq!(BigUint::from(all.len()), fuss_catalan(k, m));
        }
    }

    #[test]
    fn count_table_display() {
        let table = CountTable::build(&[(2, 2), (3, 2)], &EnumLimits::default()).unwrap();
        assert!(table.all_agree());
        let text = table.to_string();
        assert!(text.contains("2\t2\t3\t3\t3"));
        assert!(text.contains("3\t2\t4\t4\t4"));
    }
}
