//! Literal brute-force predicates shared by the integration tests.
#![allow(dead_code)]

use matchtile::matching::color_of;
use matchtile::tiling::ear_window;
use matchtile::{Edge, Matching, MatchingCode};

/// Block index (0-based) of vertex `v`.
pub fn block_of(v: usize, k: usize) -> usize {
    (v - 1) / k
}

/// The four witness properties of an edge `(s, e)`, evaluated literally.
pub fn witness_properties(m: &Matching, k: usize, (s, e): Edge) -> [bool; 4] {
    let (bs, be) = (block_of(s, k), block_of(e, k));
    let different_blocks = bs != be;
    let clean_inside = m
        .edges()
        .iter()
        .filter(|&&(a, b)| a > s && b < e)
        .all(|&(a, b)| color_of(a, k) == color_of(b, k));
    let odd_between = different_blocks && (be - bs - 1) % 2 == 1;
    let pos_s = (s - 1) % k + 1;
    let pos_e = (e - 1) % k + 1;
    let next_position = pos_e == pos_s + 1;
    [different_blocks, clean_inside, odd_between, next_position]
}

/// Edges satisfying all four witness properties.
pub fn witness_edges(m: &Matching, k: usize) -> Vec<Edge> {
    m.edges()
        .iter()
        .copied()
        .filter(|&edge| witness_properties(m, k, edge).iter().all(|&p| p))
        .collect()
}

/// First ear by pattern search: the smallest window start `j` whose
/// `2k + 1` entries equal the ear window for its block position, or `None`
/// when only the terminal `1^k 0^k` ear is present. Returns the ear's `r`.
pub fn first_ear_by_pattern(code: &MatchingCode, k: usize) -> (Option<usize>, usize) {
    let bits = code.bits();
    let len = bits.len();
    for j in 1..=len.saturating_sub(2 * k) {
        let i = (j - 1) % k + 1;
        if bits[j - 1..j + 2 * k] == ear_window(k, i)[..] {
            let r = bits[..j - 1].iter().filter(|&&b| b == 0).count() + 1;
            return (Some(j), r);
        }
    }
    let tail = &bits[len - 2 * k..];
    assert!(
        tail[..k].iter().all(|&b| b == 1) && tail[k..].iter().all(|&b| b == 0),
        "no ear in {code}"
    );
    (None, code.n() - k + 1)
}
