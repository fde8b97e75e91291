//! Explicit bijections between plane perfect `k`-colored matchings on `2n`
//! convex points and `(k+2)`-gonal tilings on `n + 2` convex points.
//!
//! - [`seqcore`]: ballot and triangulation outdegree sequences.
//! - [`matching`]: matchings, their stack codec and bitonic colorings.
//! - [`triangulation`]: triangulations and their stack codec.
//! - [`tiling`]: `t`-gonal tilings, ears, and the linear-time bijection.
//! - [`algebra`]: Temperley-Lieb / Fuss-Catalan diagrams at unit loop weight.
//! - [`oracle`]: exact counts and brute-force enumerations.
//! - [`envelope`]: JSON and text forms of every object kind.
//! - [`bench`]: random instances and conversion timings.
//!
//! All point and vertex indices are 1-based.

pub mod algebra;
pub mod bench;
pub mod envelope;
pub mod matching;
pub mod oracle;
pub mod polygon;
pub mod seqcore;
pub mod tiling;
pub mod triangulation;

pub use matching::{ColoredMatching, Matching};
pub use polygon::Edge;
pub use seqcore::{MatchingCode, TriangulationCode};
pub use tiling::Tiling;
pub use triangulation::Triangulation;
