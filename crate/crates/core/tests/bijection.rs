use std::collections::HashSet;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use matchtile::bench::random_colored_matching;
use matchtile::matching::{decode_matching, encode_matching};
use matchtile::oracle::{
    enumerate_colored_matchings, enumerate_matchings, enumerate_tilings, enumerate_triangulations,
};
use matchtile::seqcore::{b_to_d, d_to_b};
use matchtile::tiling::reference::{matching_to_tiling_by_rescan, tiling_to_matching_by_peeling};
use matchtile::tiling::{matching_to_tiling, tiling_to_matching};
use matchtile::triangulation::{decode_triangulation, encode_triangulation};
use matchtile::{ColoredMatching, Tiling};

const RANGES: [(usize, usize); 6] = [(2, 2), (2, 3), (2, 4), (3, 2), (3, 3), (4, 2)];

#[test]
fn uncolored_composites_are_identities() {
    for n in 1..=6 {
        let matchings: Vec<_> = enumerate_matchings(n).unwrap().collect();
        let mut images = HashSet::new();
        for m in &matchings {
            let tri = decode_triangulation(&b_to_d(&encode_matching(m)));
            assert_eq!(&decode_matching(&d_to_b(&encode_triangulation(&tri))), m);
            images.insert(tri);
        }
        let triangulations: HashSet<_> = enumerate_triangulations(n + 2).unwrap().collect();
        assert_eq!(images, triangulations, "n={n}");
        for tri in &triangulations {
            let m = decode_matching(&d_to_b(&encode_triangulation(tri)));
            assert_eq!(&decode_triangulation(&b_to_d(&encode_matching(&m))), tri);
        }
    }
}

#[test]
fn colored_composites_are_identities() {
    for (k, m) in RANGES {
        let matchings: Vec<ColoredMatching> = enumerate_colored_matchings(k, m).unwrap().collect();
        let tilings: HashSet<Tiling> = enumerate_tilings(k + 2, k * m + 2).unwrap().collect();
        let mut images = HashSet::new();
        for cm in &matchings {
            let t = matching_to_tiling(cm);
            assert_eq!(&tiling_to_matching(&t), cm);
            images.insert(t);
        }
        assert_eq!(images, tilings, "k={k} m={m}");
        for t in &tilings {
            assert_eq!(&matching_to_tiling(&tiling_to_matching(t)), t);
        }
    }
}

#[test]
fn linear_and_reference_agree_exhaustively() {
    for (k, m) in RANGES {
        for cm in enumerate_colored_matchings(k, m).unwrap() {
            let t = matching_to_tiling(&cm);
            assert_eq!(matching_to_tiling_by_rescan(&cm).unwrap(), t);
            assert_eq!(tiling_to_matching_by_peeling(&t).unwrap(), cm);
        }
    }
}

#[test]
fn linear_and_reference_agree_on_random_instances() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for k in 1..=5 {
        for m in [1, 2, 7, 30, 120] {
            for _ in 0..4 {
                let cm = random_colored_matching(k, m, &mut rng);
                let t = matching_to_tiling(&cm);
                assert_eq!(matching_to_tiling_by_rescan(&cm).unwrap(), t, "k={k} m={m}");
                assert_eq!(tiling_to_matching(&t), cm);
                assert_eq!(tiling_to_matching_by_peeling(&t).unwrap(), cm);
            }
        }
    }
}

#[test]
fn tilings_validate() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for k in 1..=4 {
        let cm = random_colored_matching(k, 50, &mut rng);
        let t = matching_to_tiling(&cm);
        let rebuilt = Tiling::new(t.t(), t.npoints(), t.diagonals()).unwrap();
        assert_eq!(rebuilt, t);
        assert!(ColoredMatching::new(cm.matching().clone(), k).is_ok());
    }
}
