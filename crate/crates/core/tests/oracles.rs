mod common;

use common::{host_from_mask, naive_embedding, random_host, scanned_min_codegree};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use triplesys::search::exact_copos_ex;
use triplesys::{
    construct_complete_k_partite, find_embedding, is_free, min_positive_codegree, theorem_value,
    validate_embedding, PatternKind, TripleSystem,
};

#[test]
fn embedding_search_matches_enumeration() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for round in 0..400 {
        let n = rng.gen_range(4..=8);
        let p = [0.15, 0.3, 0.5, 0.7][round % 4];
        let host = random_host(&mut rng, n, p);
        for kind in PatternKind::ALL {
            let fast = find_embedding(&host, kind);
            assert_eq!(fast, naive_embedding(&host, kind), "{kind} on {:?}", host.edges());
            if let Some(e) = fast {
                assert!(validate_embedding(&host, &e));
            }
        }
    }
}

#[test]
fn codegrees_match_edge_scan() {
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..300 {
        let n = rng.gen_range(3..=12);
        let p = rng.gen_range(0.0..0.6);
        let host = random_host(&mut rng, n, p);
        assert_eq!(min_positive_codegree(&host), scanned_min_codegree(&host));
        for u in 0..n {
            for v in 0..n {
                if u == v {
                    continue;
                }
                let scan = host.edges().iter().filter(|e| e.contains(&u) && e.contains(&v)).count();
                assert_eq!(host.codegree(u, v), scan);
                assert_eq!(host.neighborhood(u, v), host.neighborhood(v, u));
            }
        }
    }
}

#[test]
fn edgeless_host_has_no_positive_codegree() {
    assert_eq!(min_positive_codegree(&TripleSystem::empty(7).unwrap()), None);
}

/// Largest `δ₂⁺` over all pattern-free hosts on `n` vertices, by trying
/// every edge subset.
fn brute_force_value(n: usize, kind: PatternKind) -> usize {
    let triples = n * (n - 1) * (n - 2) / 6;
    let mut best = 0;
    for mask in 1u64..1 << triples {
        let host = host_from_mask(n, mask);
        let d = min_positive_codegree(&host).unwrap();
        if d > best && naive_embedding(&host, kind).is_none() {
            best = d;
        }
    }
    best
}

#[test]
fn exact_search_matches_brute_force_below_six() {
    for n in [4, 5] {
        for kind in PatternKind::ALL {
            assert_eq!(exact_copos_ex(n, kind).unwrap().value, brute_force_value(n, kind), "{kind} n={n}");
        }
    }
}

#[test]
fn exact_search_matches_brute_force_at_six() {
    for kind in PatternKind::ALL {
        let mut best = 0;
        for mask in 1u64..1 << 20 {
            let host = host_from_mask(6, mask);
            let d = min_positive_codegree(&host).unwrap();
            if d > best && is_free(&host, kind) {
                best = d;
            }
        }
        assert_eq!(exact_copos_ex(6, kind).unwrap().value, best, "{kind}");
    }
}

#[test]
fn closed_forms_match_stated_values() {
    assert_eq!(theorem_value(6, PatternKind::C5Minus), Ok(2));
    assert_eq!(theorem_value(6, PatternKind::C5), Ok(2));
    assert_eq!(theorem_value(7, PatternKind::C5), Ok(3));
    for n in 6..=40 {
        let k = n / 4;
        let c5 = if n % 4 == 3 { 2 * k + 1 } else { 2 * k };
        assert_eq!(theorem_value(n, PatternKind::C5), Ok(c5));
        assert_eq!(theorem_value(n, PatternKind::C5Minus), Ok(n / 3));
        assert_eq!(theorem_value(n, PatternKind::K4Minus), Ok(n / 3));
    }
    assert!(theorem_value(5, PatternKind::C5).is_err());
    assert!(theorem_value(9, PatternKind::K4).is_err());
    assert!(theorem_value(9, PatternKind::F32).is_err());
}

#[test]
fn constructions_attain_the_closed_forms() {
    for n in 6..=30 {
        let (tri, parts) = construct_complete_k_partite(n, 3).unwrap();
        assert_eq!(scanned_min_codegree(&tri), Some(n / 3));
        assert!(is_free(&tri, PatternKind::C5Minus));
        assert!(is_free(&tri, PatternKind::K4Minus));
        assert_eq!(tri.edge_count(), parts.sizes().iter().product::<usize>());

        let (quad, _) = construct_complete_k_partite(n, 4).unwrap();
        assert_eq!(scanned_min_codegree(&quad).unwrap(), theorem_value(n, PatternKind::C5).unwrap());
        assert!(is_free(&quad, PatternKind::C5));
    }
}

#[test]
fn four_partite_on_eleven_vertices() {
    let (h, parts) = construct_complete_k_partite(11, 4).unwrap();
    assert_eq!(parts.sizes(), vec![3, 3, 3, 2]);
    assert_eq!(h.min_positive_codegree(), Some(5));
}
