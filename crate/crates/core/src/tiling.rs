//! `t`-gonal tilings and the bijection with `k`-colored matchings, `t = k + 2`.
//!
//! Matching to tiling: the outdegree code `B` of a `k`-colored matching is the
//! code of a `k`-color valid triangulation. Its first `t`-ear is located by a
//! sliding-window scan (windows of `2k + 1` entries, weight = number of 1s),
//! cut off by deleting `2k` entries of `B`, and the ear-edge is recorded as a
//! diagonal of the tiling. The scan resumes `2k` entries before the removed
//! window, so the whole peel is linear.
//!
//! Tiling to matching: ears are re-attached top-down from the face incident
//! to `p_1 p_{n+2}`. Attaching an ear at boundary edge `p_r p_{r+1}` inserts
//! `k` ones and `k` zeros before the zero of that edge in a fixed pattern
//! that depends only on the zero's position inside its block.

use itertools::Itertools;
use thiserror::Error;

use crate::matching::{decode_matching, encode_matching, is_k_color_valid_code, ColoredMatching};
use crate::polygon::{
    canonical_diagonals, dual_faces, face_edges, faces_of, is_hull_edge, normalize, Edge,
    PolygonError,
};
use crate::seqcore::MatchingCode;
use crate::triangulation::Triangulation;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TilingError {
    #[error(transparent)]
    Polygon(#[from] PolygonError),
    #[error("face size must be at least 3, got {0}")]
    FaceSize(usize),
    #[error("color count {k} does not divide n = {n}")]
    ColorCount { k: usize, n: usize },
    #[error("code is not {k}-color valid")]
    NotColorValid { k: usize },
    #[error("the tiling has a single face, there is no removable ear")]
    SingleFace,
    #[error("boundary edge index {r} outside 1..={max}")]
    EdgeIndex { r: usize, max: usize },
    #[error("ear site does not match the code: {0}")]
    SiteMismatch(String),
    #[error("ear scan invariant violated at window {position}")]
    ScanInvariant { position: usize },
}

/// A dissection of a convex `(n + 2)`-gon into `t`-gons.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Tiling {
    t: usize,
    npoints: usize,
    diagonals: Vec<Edge>,
}

impl Tiling {
    pub fn new(t: usize, npoints: usize, diagonals: &[Edge]) -> Result<Self, TilingError> {
        if t < 3 {
            return Err(TilingError::FaceSize(t));
        }
        if npoints < t || !(npoints - 2).is_multiple_of(t - 2) {
            return Err(PolygonError::Incompatible { t, npoints }.into());
        }
        let diagonals = canonical_diagonals(npoints, diagonals)?;
        let expected = (npoints - 2) / (t - 2) - 1;
        if diagonals.len() != expected {
            return Err(PolygonError::DiagonalCount {
                expected,
                found: diagonals.len(),
            }
            .into());
        }
        if let Some(face) = faces_of(npoints, &diagonals)
            .into_iter()
            .find(|f| f.len() != t)
        {
            return Err(PolygonError::FaceSize { face, expected: t }.into());
        }
        Ok(Self {
            t,
            npoints,
            diagonals,
        })
    }

    pub(crate) fn from_sorted_unchecked(t: usize, npoints: usize, diagonals: Vec<Edge>) -> Self {
        Self {
            t,
            npoints,
            diagonals,
        }
    }

    pub fn t(&self) -> usize {
        self.t
    }

    /// Color count of the matching side, `t - 2`.
    pub fn k(&self) -> usize {
        self.t - 2
    }

    pub fn npoints(&self) -> usize {
        self.npoints
    }

    pub fn n(&self) -> usize {
        self.npoints - 2
    }

    pub fn diagonals(&self) -> &[Edge] {
        &self.diagonals
    }

    /// Bounded faces as clockwise corner lists, sorted lexicographically.
    pub fn faces(&self) -> Vec<Vec<usize>> {
        faces_of(self.npoints, &self.diagonals)
    }

    /// Cuts off the ear `face` and relabels the remaining points `1..`.
    /// Returns the smaller tiling and the index `r` of the boundary edge
    /// `p_r p_{r+1}` where the ear was attached, in the new labelling.
    pub fn remove_ear(&self, face: &[usize]) -> Result<(Tiling, usize), TilingError> {
        let first = face[0];
        let last = *face.last().expect("non-empty face");
        if self.diagonals.is_empty()
            || face.len() != self.t
            || face.windows(2).any(|w| w[1] != w[0] + 1)
            || self.diagonals.binary_search(&(first, last)).is_err()
        {
            return Err(TilingError::SiteMismatch(format!("{face:?} is not an ear")));
        }
        let removed = self.t - 2;
        let relabel = |p: usize| if p <= first { p } else { p - removed };
        let diagonals: Vec<Edge> = self
            .diagonals
            .iter()
            .filter(|&&d| d != (first, last))
            .map(|&(a, b)| (relabel(a), relabel(b)))
            .collect();
        let mut diagonals = diagonals;
        diagonals.sort_unstable();
        Ok((
            Tiling::from_sorted_unchecked(self.t, self.npoints - removed, diagonals),
            first,
        ))
    }
}

impl From<&Triangulation> for Tiling {
    fn from(tr: &Triangulation) -> Self {
        Tiling::from_sorted_unchecked(3, tr.npoints(), tr.diagonals().to_vec())
    }
}

/// The ear removed first by the peeling order: a leaf of the dual tree that
/// is not incident to `p_1 p_{n+2}`, with the smallest minimum corner.
pub fn find_ear(t: &Tiling) -> Result<Vec<usize>, TilingError> {
    let faces = t.faces();
    if faces.len() < 2 {
        return Err(TilingError::SingleFace);
    }
    let npoints = t.npoints();
    faces
        .into_iter()
        .filter(|f| {
            let inner = face_edges(f).filter(|&e| !is_hull_edge(npoints, e)).count();
            inner == 1 && !face_edges(f).any(|e| e == (1, npoints))
        })
        .min_by(|x, y| x[0].cmp(&y[0]).then_with(|| x.cmp(y)))
        .ok_or(TilingError::SingleFace)
}

/// Location of a `t`-ear in a matching code.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct EarSite {
    /// Start point of the ear-edge `p_r p_s`.
    pub r: usize,
    /// `r + t - 1`.
    pub s: usize,
    /// 1-based position where the ear's window `W` begins; `None` for the
    /// terminal ear `|1^k|0^k|` at the end of the code.
    pub window_start: Option<usize>,
    /// Position `i` of the window's first entry inside its block.
    pub shape: usize,
}

/// The ear window `(1^{k-i+1} | 0^{k-i+1}, 1^{i-1} | 0^i)` for block position
/// `i` (length `2k + 1`).
pub fn ear_window(k: usize, i: usize) -> Vec<u8> {
    let mut w = Vec::with_capacity(2 * k + 1);
    w.extend(std::iter::repeat_n(1, k - i + 1));
    w.extend(std::iter::repeat_n(0, k - i + 1));
    w.extend(std::iter::repeat_n(1, i - 1));
    w.extend(std::iter::repeat_n(0, i));
    w
}

fn check_color_valid(code: &MatchingCode, k: usize) -> Result<(), TilingError> {
    if k == 0 || !code.n().is_multiple_of(k) {
        return Err(TilingError::ColorCount { k, n: code.n() });
    }
    if !is_k_color_valid_code(code, k) {
        return Err(TilingError::NotColorValid { k });
    }
    Ok(())
}

/// First `t`-ear of a `k`-color valid code, by the sliding-window scan.
pub fn find_first_t_ear(code: &MatchingCode, k: usize) -> Result<EarSite, TilingError> {
    check_color_valid(code, k)?;
    let n = code.n();
    if n == k {
        return Ok(EarSite {
            r: 1,
            s: k + 2,
            window_start: None,
            shape: 1,
        });
    }
    let scanner = EarScanner::new(code.bits(), k);
    let head = scanner.head;
    let found = scanner.scan(1, head)?;
    Ok(scanner.site(found))
}

/// Removes the ear at `site`, returning the shortened code and the ear-edge.
pub fn remove_t_ear(
    code: &MatchingCode,
    site: &EarSite,
    k: usize,
) -> Result<(MatchingCode, Edge), TilingError> {
    if k == 0 || !code.n().is_multiple_of(k) {
        return Err(TilingError::ColorCount { k, n: code.n() });
    }
    if code.n() == k {
        return Err(TilingError::SingleFace);
    }
    let bits = code.bits();
    let len = bits.len();
    let (from, zeros_before) = match site.window_start {
        Some(j) => {
            if j == 0 || j + 2 * k > len {
                return Err(TilingError::SiteMismatch(format!(
                    "window {j} out of range"
                )));
            }
            let i = (j - 1) % k + 1;
            if bits[j - 1..j + 2 * k] != ear_window(k, i)[..] {
                return Err(TilingError::SiteMismatch(format!(
                    "no ear window at position {j}"
                )));
            }
            (j - 1, bits[..j - 1].iter().filter(|&&b| b == 0).count())
        }
        None => {
            let tail = &bits[len - 2 * k..];
            if tail.iter().take(k).any(|&b| b != 1) || tail.iter().skip(k).any(|&b| b != 0) {
                return Err(TilingError::SiteMismatch("no terminal ear".into()));
            }
            (len - 2 * k, code.n() - k)
        }
    };
    let r = zeros_before + 1;
    if site.r != r || site.s != r + k + 1 {
        return Err(TilingError::SiteMismatch(format!(
            "ear-edge ({}, {}) does not match window (expected ({}, {}))",
            site.r,
            site.s,
            r,
            r + k + 1
        )));
    }
    let mut out = Vec::with_capacity(len - 2 * k);
    out.extend_from_slice(&bits[..from]);
    out.extend_from_slice(&bits[from + 2 * k..]);
    Ok((MatchingCode::from_bits_unchecked(out), (r, r + k + 1)))
}

/// The `2k` entries inserted before a zero at block position `i`.
fn ear_insertion(k: usize, i: usize) -> impl Iterator<Item = u8> {
    std::iter::repeat_n(1, k - i + 1)
        .chain(std::iter::repeat_n(0, k - i + 1))
        .chain(std::iter::repeat_n(1, i - 1))
        .chain(std::iter::repeat_n(0, i - 1))
}

/// Attaches a `t`-ear at boundary edge `p_r p_{r+1}`, `1 <= r <= n + 1`.
pub fn extend_with_ear(
    code: &MatchingCode,
    r: usize,
    k: usize,
) -> Result<MatchingCode, TilingError> {
    check_color_valid(code, k)?;
    let n = code.n();
    if r == 0 || r > n + 1 {
        return Err(TilingError::EdgeIndex { r, max: n + 1 });
    }
    let bits = code.bits();
    let mut out = Vec::with_capacity(bits.len() + 2 * k);
    if r == n + 1 {
        out.extend_from_slice(bits);
        out.extend(std::iter::repeat_n(1, k));
        out.extend(std::iter::repeat_n(0, k));
    } else {
        let zero_pos = bits
            .iter()
            .enumerate()
            .filter(|(_, &b)| b == 0)
            .nth(r - 1)
            .map(|(idx, _)| idx)
            .expect("n zeros");
        let i = zero_pos % k + 1;
        out.extend_from_slice(&bits[..zero_pos]);
        out.extend(ear_insertion(k, i));
        out.extend_from_slice(&bits[zero_pos..]);
    }
    Ok(MatchingCode::from_bits_unchecked(out))
}

/// The tiling of a `k`-colored matching; linear in `n`.
pub fn matching_to_tiling(m: &ColoredMatching) -> Tiling {
    let k = m.k();
    let code = encode_matching(m.matching());
    let n = code.n();
    let npoints = n + 2;
    if n == k {
        return Tiling::from_sorted_unchecked(k + 2, npoints, Vec::new());
    }
    let mut scanner = EarScanner::new(code.bits(), k);
    let diagonals = scanner
        .peel_all()
        .expect("a k-colored matching always has a t-ear");
    Tiling::from_sorted_unchecked(k + 2, npoints, diagonals)
}

/// The `k`-colored matching of a tiling, `k = t - 2`; linear in `n`.
pub fn tiling_to_matching(t: &Tiling) -> ColoredMatching {
    let k = t.k();
    let faces = dual_faces(t.npoints(), t.diagonals());
    let mut children: Vec<Vec<usize>> = vec![Vec::new(); faces.len()];
    let mut root = 0;
    for (id, face) in faces.iter().enumerate() {
        match face.parent {
            Some(p) => children[p].push(id),
            None => root = id,
        }
    }
    let mut builder = EarBuilder::new(k, &faces[root].corners, t.npoints());
    let mut todo: Vec<usize> = children[root].iter().rev().copied().collect();
    while let Some(id) = todo.pop() {
        let corners = &faces[id].corners;
        builder.attach(corners[0], &corners[1..corners.len() - 1]);
        todo.extend(children[id].iter().rev().copied());
    }
    let code = MatchingCode::from_bits_unchecked(builder.bits());
    ColoredMatching::new_unchecked(decode_matching(&code), k)
}

/// Every `t`-gonal tiling whose diagonals are a subset of the triangulation's,
/// by brute force over diagonal subsets.
pub fn tilings_within(tr: &Triangulation, t: usize) -> Vec<Tiling> {
    if t < 3 || !tr.n().is_multiple_of(t - 2) {
        return Vec::new();
    }
    let wanted = tr.n() / (t - 2) - 1;
    tr.diagonals()
        .iter()
        .copied()
        .combinations(wanted)
        .filter(|subset| faces_of(tr.npoints(), subset).iter().all(|f| f.len() == t))
        .map(|subset| Tiling::from_sorted_unchecked(t, tr.npoints(), subset))
        .collect()
}

const NIL: usize = usize::MAX;

enum Found {
    Window { node: usize, pos: usize },
    Terminal,
}

/// Doubly linked view of a matching code with the original point labels
/// attached to its zeros. Block positions are fixed per node: removing `2k`
/// consecutive entries does not change any position modulo `k`.
struct EarScanner {
    k: usize,
    bit: Vec<u8>,
    block_pos: Vec<usize>,
    /// Original label of the point whose boundary edge this zero encodes.
    label: Vec<usize>,
    next: Vec<usize>,
    prev: Vec<usize>,
    head: usize,
    len: usize,
    /// Doubly linked list of the surviving points, indexed by original label.
    pnext: Vec<usize>,
    pprev: Vec<usize>,
}

impl EarScanner {
    fn new(bits: &[u8], k: usize) -> Self {
        let len = bits.len();
        let n = len / 2;
        let mut label = vec![0usize; len];
        let mut zeros = 0;
        for (idx, &b) in bits.iter().enumerate() {
            if b == 0 {
                zeros += 1;
                label[idx] = zeros;
            }
        }
        let npoints = n + 2;
        Self {
            k,
            bit: bits.to_vec(),
            block_pos: (0..len).map(|idx| idx % k + 1).collect(),
            label,
            next: (0..len)
                .map(|idx| if idx + 1 < len { idx + 1 } else { NIL })
                .collect(),
            prev: (0..len)
                .map(|idx| if idx > 0 { idx - 1 } else { NIL })
                .collect(),
            head: 0,
            len,
            pnext: (0..=npoints)
                .map(|p| if p >= 1 && p < npoints { p + 1 } else { NIL })
                .collect(),
            pprev: (0..=npoints)
                .map(|p| if p >= 2 { p - 1 } else { NIL })
                .collect(),
        }
    }

    fn step(&self, mut node: usize, count: usize) -> usize {
        for _ in 0..count {
            node = self.next[node];
        }
        node
    }

    /// `(last node, weight)` of the window starting at `node`.
    fn window(&self, node: usize) -> (usize, usize) {
        let mut end = node;
        let mut weight = self.bit[node] as usize;
        for _ in 0..2 * self.k {
            end = self.next[end];
            weight += self.bit[end] as usize;
        }
        (end, weight)
    }

    fn matches_window(&self, node: usize) -> bool {
        let pattern = ear_window(self.k, self.block_pos[node]);
        let mut cur = node;
        for (idx, &want) in pattern.iter().enumerate() {
            if idx > 0 {
                cur = self.next[cur];
            }
            if cur == NIL || self.bit[cur] != want {
                return false;
            }
        }
        true
    }

    fn tail_start(&self, from: usize, from_pos: usize) -> usize {
        self.step(from, self.len - 2 * self.k + 1 - from_pos)
    }

    fn matches_terminal(&self, tail: usize) -> bool {
        let mut cur = tail;
        for idx in 0..2 * self.k {
            let want = u8::from(idx < self.k);
            if cur == NIL || self.bit[cur] != want {
                return false;
            }
            cur = self.next[cur];
        }
        true
    }

    /// Scans windows from position `pos` (node `node`) for the first ear.
    ///
    /// Windows heavier than `k` are skipped. At a window of weight `k` that
    /// follows a heavier one: a window starting with 1 is an ear (case 1);
    /// otherwise it reads `|0^a 1^(k-a)|0^(k-a) 1^a|0` and the window `a`
    /// entries later is either heavier (resume after it), an ear, or past
    /// the last window, in which case the final two blocks are the ear. A
    /// window of weight `k` with no heavier predecessor (only possible right
    /// after a restart) is matched against the ear pattern directly.
    fn scan(&self, mut pos: usize, mut node: usize) -> Result<Found, TilingError> {
        let k = self.k;
        let last = self.len - 2 * k;
        let (mut end, mut weight) = self.window(node);
        let mut after_heavy = false;
        let advance = |pos: &mut usize, node: &mut usize, end: &mut usize, weight: &mut usize| {
            *weight -= self.bit[*node] as usize;
            *node = self.next[*node];
            *end = self.next[*end];
            *weight += self.bit[*end] as usize;
            *pos += 1;
        };
        loop {
            if weight != k || !after_heavy {
                if weight == k && self.matches_window(node) {
                    return Ok(Found::Window { node, pos });
                }
                if weight < k && after_heavy {
                    return Err(TilingError::ScanInvariant { position: pos });
                }
                after_heavy = weight > k;
                if pos == last {
                    return self.terminal(node, pos);
                }
                advance(&mut pos, &mut node, &mut end, &mut weight);
                continue;
            }
            if self.bit[node] == 1 {
                return if self.matches_window(node) {
                    Ok(Found::Window { node, pos })
                } else {
                    Err(TilingError::ScanInvariant { position: pos })
                };
            }
            if self.block_pos[node] != 1 {
                return Err(TilingError::ScanInvariant { position: pos });
            }
            let mut a = 0;
            let mut cur = node;
            while a < k && self.bit[cur] == 0 {
                a += 1;
                cur = self.next[cur];
            }
            if pos + a > last {
                return self.terminal(node, pos);
            }
            for _ in 0..a {
                advance(&mut pos, &mut node, &mut end, &mut weight);
            }
            if weight > k {
                if pos == last {
                    return self.terminal(node, pos);
                }
                advance(&mut pos, &mut node, &mut end, &mut weight);
                continue;
            }
            return if weight == k && self.matches_window(node) {
                Ok(Found::Window { node, pos })
            } else {
                Err(TilingError::ScanInvariant { position: pos })
            };
        }
    }

    fn terminal(&self, node: usize, pos: usize) -> Result<Found, TilingError> {
        if self.matches_terminal(self.tail_start(node, pos)) {
            Ok(Found::Terminal)
        } else {
            Err(TilingError::ScanInvariant { position: pos })
        }
    }

    /// The node of the first zero in the window starting at `node`.
    fn first_zero(&self, mut node: usize) -> usize {
        while self.bit[node] != 0 {
            node = self.next[node];
        }
        node
    }

    fn site(&self, found: Found) -> EarSite {
        let k = self.k;
        match found {
            Found::Window { node, pos } => {
                let r = self.label[self.first_zero(node)];
                EarSite {
                    r,
                    s: r + k + 1,
                    window_start: Some(pos),
                    shape: self.block_pos[node],
                }
            }
            Found::Terminal => {
                let n = self.len / 2;
                EarSite {
                    r: n + 1 - k,
                    s: n + 2,
                    window_start: None,
                    shape: 1,
                }
            }
        }
    }

    fn unlink(&mut self, first: usize, count: usize) -> usize {
        let before = self.prev[first];
        let after = self.step(first, count);
        if before == NIL {
            self.head = after;
        } else {
            self.next[before] = after;
        }
        if after != NIL {
            self.prev[after] = before;
        }
        self.len -= count;
        before
    }

    /// Removes points strictly between `r` and the point `k + 1` after it;
    /// returns the latter.
    fn cut_points(&mut self, r: usize) -> usize {
        let mut s = r;
        for _ in 0..=self.k {
            s = self.pnext[s];
        }
        self.pnext[r] = s;
        self.pprev[s] = r;
        s
    }

    /// Peels every ear and returns the tiling diagonals in original labels.
    fn peel_all(&mut self) -> Result<Vec<Edge>, TilingError> {
        let k = self.k;
        let mut diagonals = Vec::with_capacity(self.len / (2 * k));
        let mut pos = 1;
        let mut node = self.head;
        while self.len > 2 * k {
            let found = self.scan(pos, node)?;
            let (before, window_pos) = match found {
                Found::Window {
                    node: start,
                    pos: j,
                } => {
                    let first_zero = self.first_zero(start);
                    let r = self.label[first_zero];
                    let s = self.cut_points(r);
                    diagonals.push(normalize((r, s)));
                    let survivor = self.step(start, 2 * k);
                    self.label[survivor] = r;
                    (self.unlink(start, 2 * k), j)
                }
                Found::Terminal => {
                    let j = self.len - 2 * k + 1;
                    let start = self.step(self.head, j - 1);
                    let r = self.label[self.first_zero(start)];
                    let s = self.cut_points(r);
                    diagonals.push(normalize((r, s)));
                    (self.unlink(start, 2 * k), j)
                }
            };
            if self.len <= 2 * k {
                break;
            }
            // Resume at max(1, j - 2k).
            if window_pos <= 2 * k + 1 || before == NIL {
                pos = 1;
                node = self.head;
            } else {
                pos = window_pos - 2 * k;
                node = before;
                for _ in 0..2 * k - 1 {
                    node = self.prev[node];
                }
            }
            let last = self.len - 2 * k;
            if pos > last {
                let back = pos - last;
                for _ in 0..back {
                    node = self.prev[node];
                }
                pos = last;
            }
        }
        diagonals.sort_unstable();
        Ok(diagonals)
    }
}

/// Grows a code ear by ear. Each polygon boundary edge is keyed by its start
/// point; the edge into the last point has no zero.
pub(crate) struct EarBuilder {
    k: usize,
    bit: Vec<u8>,
    block_pos: Vec<usize>,
    next: Vec<usize>,
    prev: Vec<usize>,
    head: usize,
    tail: usize,
    zero_of: Vec<usize>,
}

impl EarBuilder {
    /// Starts from a single face with clockwise `corners`, the last of which
    /// is the polygon's final point.
    pub(crate) fn new(k: usize, corners: &[usize], label_capacity: usize) -> Self {
        debug_assert_eq!(corners.len(), k + 2);
        let mut builder = Self {
            k,
            bit: Vec::new(),
            block_pos: Vec::new(),
            next: Vec::new(),
            prev: Vec::new(),
            head: NIL,
            tail: NIL,
            zero_of: vec![NIL; label_capacity + 1],
        };
        for pos in 1..=k {
            builder.push_back(1, pos);
        }
        for (pos, &corner) in corners.iter().take(k).enumerate() {
            let node = builder.push_back(0, pos + 1);
            builder.set_zero(corner, node);
        }
        builder
    }

    fn set_zero(&mut self, label: usize, node: usize) {
        if label >= self.zero_of.len() {
            self.zero_of.resize(label + 1, NIL);
        }
        self.zero_of[label] = node;
    }

    fn alloc(&mut self, bit: u8, block_pos: usize) -> usize {
        self.bit.push(bit);
        self.block_pos.push(block_pos);
        self.next.push(NIL);
        self.prev.push(NIL);
        self.bit.len() - 1
    }

    fn push_back(&mut self, bit: u8, block_pos: usize) -> usize {
        let node = self.alloc(bit, block_pos);
        if self.tail == NIL {
            self.head = node;
        } else {
            self.next[self.tail] = node;
            self.prev[node] = self.tail;
        }
        self.tail = node;
        node
    }

    fn insert_before(&mut self, at: usize, bit: u8, block_pos: usize) -> usize {
        let node = self.alloc(bit, block_pos);
        let before = self.prev[at];
        self.prev[node] = before;
        self.next[node] = at;
        self.prev[at] = node;
        if before == NIL {
            self.head = node;
        } else {
            self.next[before] = node;
        }
        node
    }

    /// Attaches an ear on the boundary edge starting at `start`, with the
    /// `k` new points `interior` in clockwise order.
    pub(crate) fn attach(&mut self, start: usize, interior: &[usize]) {
        let k = self.k;
        debug_assert_eq!(interior.len(), k);
        let existing = self.zero_of.get(start).copied().unwrap_or(NIL);
        let mut new_zeros = Vec::with_capacity(k);
        if existing == NIL {
            for pos in 1..=k {
                self.push_back(1, pos);
            }
            for pos in 1..=k {
                new_zeros.push(self.push_back(0, pos));
            }
        } else {
            let i = self.block_pos[existing];
            let mut pos = i;
            for bit in ear_insertion(k, i) {
                let node = self.insert_before(existing, bit, pos);
                if bit == 0 {
                    new_zeros.push(node);
                }
                pos = pos % k + 1;
            }
            self.set_zero(interior[k - 1], existing);
        }
        let owners = std::iter::once(start).chain(interior[..k - 1].iter().copied());
        for (owner, node) in owners.zip(new_zeros) {
            self.set_zero(owner, node);
        }
    }

    pub(crate) fn bits(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(self.bit.len());
        let mut cur = self.head;
        while cur != NIL {
            out.push(self.bit[cur]);
            cur = self.next[cur];
        }
        out
    }
}

/// Quadratic reference implementations that follow the ear-peeling steps
/// literally; used to cross-check the linear routines.
pub mod reference {
    use super::*;

    /// Repeatedly scans from the start of the code and removes the first ear.
    pub fn matching_to_tiling_by_rescan(m: &ColoredMatching) -> Result<Tiling, TilingError> {
        let k = m.k();
        let mut code = encode_matching(m.matching());
        let npoints = code.n() + 2;
        let mut labels: Vec<usize> = (0..=npoints).collect();
        let mut diagonals = Vec::new();
        while code.n() > k {
            let site = find_first_t_ear(&code, k)?;
            let (shorter, (r, s)) = remove_t_ear(&code, &site, k)?;
            diagonals.push(normalize((labels[r], labels[s])));
            labels.drain(r + 1..s);
            code = shorter;
        }
        diagonals.sort_unstable();
        Ok(Tiling::from_sorted_unchecked(k + 2, npoints, diagonals))
    }

    /// Peels ears with [`find_ear`] onto a stack, then re-attaches them in
    /// reverse order with [`extend_with_ear`].
    pub fn tiling_to_matching_by_peeling(t: &Tiling) -> Result<ColoredMatching, TilingError> {
        let k = t.k();
        let mut current = t.clone();
        let mut cuts = Vec::new();
        while !current.diagonals().is_empty() {
            let ear = find_ear(&current)?;
            let (smaller, r) = current.remove_ear(&ear)?;
            cuts.push(r);
            current = smaller;
        }
        let mut bits = vec![1u8; k];
        bits.extend(std::iter::repeat_n(0, k));
        let mut code = MatchingCode::from_bits_unchecked(bits);
        while let Some(r) = cuts.pop() {
            code = extend_with_ear(&code, r, k)?;
        }
        Ok(ColoredMatching::new_unchecked(decode_matching(&code), k))
    }
}
