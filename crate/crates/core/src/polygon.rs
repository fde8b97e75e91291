//! Chord sets on convex polygons with points `p_1..p_N` in clockwise order.

use thiserror::Error;

/// An unordered pair of 1-based indices, stored with the smaller index first.
pub type Edge = (usize, usize);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolygonError {
    #[error("a polygon needs at least 3 points, got {0}")]
    TooFewPoints(usize),
    #[error("edge ({}, {}) has an endpoint outside 1..={npoints}", .edge.0, .edge.1)]
    OutOfRange { edge: Edge, npoints: usize },
    #[error("({}, {}) is a hull edge, not a diagonal", .0.0, .0.1)]
    HullEdge(Edge),
    #[error("diagonal ({}, {}) appears twice", .0.0, .0.1)]
    Duplicate(Edge),
    #[error("diagonals ({}, {}) and ({}, {}) cross", .first.0, .first.1, .second.0, .second.1)]
    Crossing { first: Edge, second: Edge },
    #[error("expected {expected} diagonals, found {found}")]
    DiagonalCount { expected: usize, found: usize },
    #[error("face {face:?} has {} corners, expected {expected}", .face.len())]
    FaceSize { face: Vec<usize>, expected: usize },
    #[error("face size {t} does not fit {npoints} points")]
    Incompatible { t: usize, npoints: usize },
}

pub(crate) fn normalize(edge: Edge) -> Edge {
    if edge.0 <= edge.1 {
        edge
    } else {
        (edge.1, edge.0)
    }
}

/// Normalizes, sorts and validates a diagonal set: in range, not a hull edge,
/// no duplicates, pairwise non-crossing.
pub fn canonical_diagonals(npoints: usize, diagonals: &[Edge]) -> Result<Vec<Edge>, PolygonError> {
    if npoints < 3 {
        return Err(PolygonError::TooFewPoints(npoints));
    }
    let mut out: Vec<Edge> = diagonals.iter().copied().map(normalize).collect();
    for &edge in &out {
        let (a, b) = edge;
        if a == 0 || b > npoints || a == b {
            return Err(PolygonError::OutOfRange { edge, npoints });
        }
        if b - a < 2 || (a == 1 && b == npoints) {
            return Err(PolygonError::HullEdge(edge));
        }
    }
    out.sort_unstable();
    for pair in out.windows(2) {
        if pair[0] == pair[1] {
            return Err(PolygonError::Duplicate(pair[0]));
        }
    }
    check_non_crossing(&out)?;
    Ok(out)
}

/// Laminar-interval test: chords `(a, b)` and `(c, d)` cross iff
/// `a < c < b < d`. Expects `sorted` in ascending order.
fn check_non_crossing(sorted: &[Edge]) -> Result<(), PolygonError> {
    // Visit by ascending start, longest first, so that a chord sharing its
    // start with an open one lies inside it.
    let mut order: Vec<Edge> = sorted.to_vec();
    order.sort_unstable_by(|x, y| x.0.cmp(&y.0).then(y.1.cmp(&x.1)));
    let mut open: Vec<Edge> = Vec::new();
    for &(c, d) in &order {
        while let Some(&(_, b)) = open.last() {
            if b <= c {
                open.pop();
            } else {
                break;
            }
        }
        if let Some(&top) = open.last() {
            if d > top.1 {
                return Err(PolygonError::Crossing {
                    first: top,
                    second: (c, d),
                });
            }
        }
        open.push((c, d));
    }
    Ok(())
}

/// A bounded face of a dissection together with its position in the dual
/// tree. The root face is the one incident to the hull edge `p_1 p_N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct DualFace {
    /// Corners in clockwise (ascending) order.
    pub corners: Vec<usize>,
    /// Face on the other side of the closing diagonal `(min, max)`; `None`
    /// for the root.
    pub parent: Option<usize>,
}

/// Bounded faces of a non-crossing dissection, each with its dual-tree
/// parent. Runs in `O(N + |diagonals|)`.
///
/// Points are swept in ascending order with a stack of points still visible
/// from the right. A diagonal `(u, v)` closes the face made of `u`, the
/// points popped above it, and `v`. Diagonals ending at the same `v` are
/// closed innermost (largest `u`) first.
pub(crate) fn dual_faces(npoints: usize, diagonals: &[Edge]) -> Vec<DualFace> {
    let mut closing: Vec<Vec<usize>> = vec![Vec::new(); npoints + 1];
    for &(a, b) in diagonals {
        closing[b].push(a);
    }
    for starts in &mut closing {
        starts.sort_unstable_by(|x, y| y.cmp(x));
    }

    let mut faces: Vec<DualFace> = Vec::with_capacity(diagonals.len() + 1);
    // (point, face hanging below the edge from the previous stack entry)
    let mut stack: Vec<(usize, Option<usize>)> = Vec::with_capacity(npoints);
    let mut popped: Vec<(usize, Option<usize>)> = Vec::new();
    for v in 1..=npoints {
        let mut pending: Option<usize> = None;
        for &u in &closing[v] {
            popped.clear();
            while let Some(&(p, below)) = stack.last() {
                if p == u {
                    break;
                }
                popped.push((p, below));
                stack.pop();
            }
            let id = faces.len();
            let mut corners = Vec::with_capacity(popped.len() + 2);
            corners.push(u);
            corners.extend(popped.iter().rev().map(|&(p, _)| p));
            corners.push(v);
            let children = popped.iter().filter_map(|&(_, below)| below).chain(pending);
            for child in children {
                faces[child].parent = Some(id);
            }
            faces.push(DualFace {
                corners,
                parent: None,
            });
            pending = Some(id);
        }
        stack.push((v, pending));
    }

    let root = faces.len();
    for child in stack.iter().filter_map(|&(_, below)| below) {
        faces[child].parent = Some(root);
    }
    faces.push(DualFace {
        corners: stack.iter().map(|&(p, _)| p).collect(),
        parent: None,
    });
    faces
}

/// Bounded faces as clockwise corner lists, sorted lexicographically.
pub fn faces_of(npoints: usize, diagonals: &[Edge]) -> Vec<Vec<usize>> {
    let mut faces: Vec<Vec<usize>> = dual_faces(npoints, diagonals)
        .into_iter()
        .map(|f| f.corners)
        .collect();
    faces.sort();
    faces
}

pub(crate) fn is_hull_edge(npoints: usize, edge: Edge) -> bool {
    let (a, b) = normalize(edge);
    b == a + 1 || (a == 1 && b == npoints)
}

/// The edges of a face given by its clockwise corners, wrap-around included.
pub(crate) fn face_edges(corners: &[usize]) -> impl Iterator<Item = Edge> + '_ {
    let len = corners.len();
    (0..len).map(move |j| normalize((corners[j], corners[(j + 1) % len])))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn crossing_detection() {
        assert!(canonical_diagonals(6, &[(1, 4), (2, 5)]).is_err());
        assert_eq!(
            canonical_diagonals(6, &[(2, 5), (1, 4)]),
            Err(PolygonError::Crossing {
                first: (1, 4),
                second: (2, 5)
            })
        );
        assert!(canonical_diagonals(6, &[(1, 3), (1, 4), (1, 5)]).is_ok());
        assert!(canonical_diagonals(6, &[(2, 4), (4, 6), (2, 6)]).is_ok());
        assert!(canonical_diagonals(8, &[(1, 5), (5, 8), (2, 4), (6, 8)]).is_ok());
    }

    #[test]
    fn rejects_bad_diagonals() {
        assert_eq!(
            canonical_diagonals(5, &[(1, 2)]),
            Err(PolygonError::HullEdge((1, 2)))
        );
        assert_eq!(
            canonical_diagonals(5, &[(5, 1)]),
            Err(PolygonError::HullEdge((1, 5)))
        );
        assert!(matches!(
            canonical_diagonals(5, &[(1, 7)]),
            Err(PolygonError::OutOfRange { .. })
        ));
        assert_eq!(
            canonical_diagonals(5, &[(1, 3), (3, 1)]),
            Err(PolygonError::Duplicate((1, 3)))
        );
        assert_eq!(
            canonical_diagonals(2, &[]),
            Err(PolygonError::TooFewPoints(2))
        );
    }

    #[test]
    fn face_examples() {
        assert_eq!(
            faces_of(6, &[(1, 4)]),
            vec![vec![1, 2, 3, 4], vec![1, 4, 5, 6]]
        );
        assert_eq!(
            faces_of(5, &[(1, 3), (1, 4)]),
            vec![vec![1, 2, 3], vec![1, 3, 4], vec![1, 4, 5]]
        );
        assert_eq!(faces_of(4, &[]), vec![vec![1, 2, 3, 4]]);
    }

    #[test]
    fn dual_tree_parents() {
        // Fan from p1 in a hexagon: a path in the dual tree.
        let faces = dual_faces(6, &[(1, 3), (1, 4), (1, 5)]);
        assert_eq!(faces.len(), 4);
        let root = faces.iter().position(|f| f.parent.is_none()).unwrap();
        assert_eq!(faces[root].corners, vec![1, 5, 6]);
        let total_corners: usize = faces.iter().map(|f| f.corners.len()).sum();
        assert_eq!(total_corners, 6 + 2 * 3);
        for f in &faces {
            if let Some(p) = f.parent {
                let closing = (f.corners[0], *f.corners.last().unwrap());
                assert!(face_edges(&faces[p].corners).any(|e| e == closing));
            }
        }
    }
}
