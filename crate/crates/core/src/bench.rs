//! Random `k`-color valid instances and conversion timings.

use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::matching::{decode_matching, encode_matching, ColoredMatching};
use crate::seqcore::{b_to_d, d_to_b, MatchingCode};
use crate::tiling::{matching_to_tiling, tiling_to_matching, EarBuilder};
use crate::triangulation::{decode_triangulation, encode_triangulation};

/// Code of a random `k`-colored matching with `n = km`, grown from a single
/// `(k+2)`-gon by attaching `m - 1` ears at uniformly chosen boundary edges.
pub fn random_colored_code<R: Rng + ?Sized>(k: usize, m: usize, rng: &mut R) -> MatchingCode {
    assert!(k >= 1 && m >= 1, "k and m must be positive");
    let last = k + 2;
    let corners: Vec<usize> = (1..=last).collect();
    let mut builder = EarBuilder::new(k, &corners, k * m + 2);
    // Every point except the last starts a boundary edge.
    let mut starts: Vec<usize> = (1..last).collect();
    let mut fresh = last + 1;
    for _ in 1..m {
        let start = starts[rng.gen_range(0..starts.len())];
        let interior: Vec<usize> = (fresh..fresh + k).collect();
        fresh += k;
        builder.attach(start, &interior);
        starts.extend_from_slice(&interior);
    }
    MatchingCode::from_bits_unchecked(builder.bits())
}

pub fn random_colored_matching<R: Rng + ?Sized>(
    k: usize,
    m: usize,
    rng: &mut R,
) -> ColoredMatching {
    let code = random_colored_code(k, m, rng);
    ColoredMatching::new_unchecked(decode_matching(&code), k)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BenchConfig {
    /// Requested sizes `n`; each is rounded down to a multiple of `k`.
    pub sizes: Vec<usize>,
    pub k: usize,
    pub repetitions: usize,
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BenchRow {
    pub n: usize,
    pub k: usize,
    /// Median time of matching to triangulation (`k = 1`) or tiling.
    pub to_tiling: Duration,
    /// Median time of the reverse conversion.
    pub to_matching: Duration,
}

fn median(mut samples: Vec<Duration>) -> Duration {
    samples.sort_unstable();
    samples[samples.len() / 2]
}

/// Times both conversion directions for every size. Returns no rows when
/// `repetitions` is zero.
pub fn run_bench(config: &BenchConfig) -> Vec<BenchRow> {
    let k = config.k;
    assert!(k >= 1, "k must be positive");
    if config.repetitions == 0 {
        return Vec::new();
    }
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut rows = Vec::with_capacity(config.sizes.len());
    for &requested in &config.sizes {
        let m = (requested / k).max(1);
        let n = k * m;
        let matching = random_colored_matching(k, m, &mut rng);
        let mut forward = Vec::with_capacity(config.repetitions);
        let mut backward = Vec::with_capacity(config.repetitions);
        for _ in 0..config.repetitions {
            if k == 1 {
                let clock = Instant::now();
                let tri = decode_triangulation(&b_to_d(&encode_matching(matching.matching())));
                forward.push(clock.elapsed());
                let clock = Instant::now();
                let back = decode_matching(&d_to_b(&encode_triangulation(&tri)));
                backward.push(clock.elapsed());
                assert_eq!(&back, matching.matching(), "round trip");
            } else {
                let clock = Instant::now();
                let tiling = matching_to_tiling(&matching);
                forward.push(clock.elapsed());
                let clock = Instant::now();
                let back = tiling_to_matching(&tiling);
                backward.push(clock.elapsed());
                assert_eq!(back, matching, "round trip");
            }
        }
        rows.push(BenchRow {
            n,
            k,
            to_tiling: median(forward),
            to_matching: median(backward),
        });
    }
    rows
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matching::is_k_color_valid_code;

    #[test]
    fn random_codes_are_color_valid() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for k in 1..=4 {
            for m in 1..=30 {
                let code = random_colored_code(k, m, &mut rng);
                assert_eq!(code.n(), k * m);
                assert!(is_k_color_valid_code(&code, k), "k={k} m={m} {code}");
            }
        }
    }

    #[test]
    fn zero_repetitions_give_empty_table() {
        let rows = run_bench(&BenchConfig {
            sizes: vec![30, 60],
            k: 3,
            repetitions: 0,
            seed: 1,
        });
        assert!(rows.is_empty());
    }

    #[test]
    fn sizes_round_to_multiples_of_k() {
        let rows = run_bench(&BenchConfig {
            sizes: vec![100, 200],
            k: 3,
            repetitions: 1,
            seed: 1,
        });
        assert_eq!(rows.iter().map(|r| r.n).collect::<Vec<_>>(), vec![99, 198]);
    }
}
