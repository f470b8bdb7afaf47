mod common;

use common::{dense_host, random_host};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use triplesys::witness::{
    analyze_half_degree, check_fact, find_c5_witness, find_c5minus_witness, Fact, HalfDegreeOutcome, K4Frame,
    WitnessError,
};
use triplesys::{construct_complete_k_partite, find_embedding, validate_embedding, PatternKind, TripleSystem};

/// A 12-vertex C5-free host with `δ₂⁺ = 6` whose base K4 on `0..4` has a
/// non-empty B-set, so the structure analysis has to pair up classes.
const SPLIT_HOST: &[[usize; 3]] = &[
    [0, 1, 2], [0, 1, 3], [0, 1, 4], [0, 1, 9], [0, 1, 10], [0, 1, 11], [0, 2, 3], [0, 2, 4],
    [0, 2, 9], [0, 2, 10], [0, 2, 11], [0, 3, 4], [0, 3, 9], [0, 3, 10], [0, 3, 11], [0, 4, 9],
    [0, 4, 10], [0, 4, 11], [0, 9, 10], [0, 9, 11], [0, 10, 11], [1, 2, 3], [1, 2, 5], [1, 2, 6],
    [1, 2, 7], [1, 2, 8], [1, 3, 5], [1, 3, 6], [1, 3, 7], [1, 3, 8], [1, 4, 5], [1, 4, 6],
    [1, 4, 7], [1, 4, 8], [1, 4, 11], [1, 5, 9], [1, 5, 10], [1, 5, 11], [1, 6, 9], [1, 6, 10],
    [1, 6, 11], [1, 7, 9], [1, 7, 10], [1, 7, 11], [1, 8, 9], [1, 8, 10], [1, 8, 11], [1, 9, 10],
    [2, 3, 5], [2, 3, 6], [2, 3, 7], [2, 3, 8], [2, 4, 5], [2, 4, 6], [2, 4, 7], [2, 4, 8],
    [2, 4, 10], [2, 5, 9], [2, 5, 10], [2, 5, 11], [2, 6, 9], [2, 6, 10], [2, 6, 11], [2, 7, 9],
    [2, 7, 10], [2, 7, 11], [2, 8, 9], [2, 8, 10], [2, 8, 11], [2, 9, 11], [3, 4, 5], [3, 4, 6],
    [3, 4, 7], [3, 4, 8], [3, 4, 9], [3, 5, 9], [3, 5, 10], [3, 5, 11], [3, 6, 9], [3, 6, 10],
    [3, 6, 11], [3, 7, 9], [3, 7, 10], [3, 7, 11], [3, 8, 9], [3, 8, 10], [3, 8, 11], [3, 10, 11],
    [4, 5, 9], [4, 5, 10], [4, 5, 11], [4, 6, 9], [4, 6, 10], [4, 6, 11], [4, 7, 9], [4, 7, 10],
    [4, 7, 11], [4, 8, 9], [4, 8, 10], [4, 8, 11], [5, 9, 10], [5, 9, 11], [5, 10, 11], [6, 9, 10],
    [6, 9, 11], [6, 10, 11], [7, 9, 10], [7, 9, 11], [7, 10, 11], [8, 9, 10], [8, 9, 11], [8, 10, 11],
];

fn precondition(r: Result<impl std::fmt::Debug, WitnessError>) -> bool {
    matches!(r, Err(WitnessError::PreconditionViolated(_)))
}

#[test]
fn sweep_random_dense_hosts() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for n in 6..=9 {
        let total = n * (n - 1) * (n - 2) / 6;
        for _ in 0..200 {
            let deletions = rng.gen_range(0..=total);
            let minus = dense_host(&mut rng, n, n / 3 + 1, deletions);
            let e = find_c5minus_witness(&minus).unwrap_or_else(|err| panic!("{err}\n{:?}", minus.edges()));
            assert_eq!(e.kind, PatternKind::C5Minus);
            assert!(validate_embedding(&minus, &e));

            let full = dense_host(&mut rng, n, n / 2 + 1, deletions);
            let e = find_c5_witness(&full).unwrap_or_else(|err| panic!("{err}\n{:?}", full.edges()));
            assert_eq!(e.kind, PatternKind::C5);
            assert!(validate_embedding(&full, &e));
        }
    }
}

#[test]
fn extractors_reject_extremal_constructions() {
    for n in 6..=20 {
        let (tri, _) = construct_complete_k_partite(n, 3).unwrap();
        assert!(precondition(find_c5minus_witness(&tri)));
        let (quad, _) = construct_complete_k_partite(n, 4).unwrap();
        assert!(precondition(find_c5_witness(&quad)));
    }
    assert!(precondition(find_c5_witness(&TripleSystem::complete(5).unwrap())));
    assert!(precondition(find_c5minus_witness(&TripleSystem::empty(8).unwrap())));
}

#[test]
fn extractors_agree_with_search_on_sparse_hosts() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut checked = 0;
    for _ in 0..3000 {
        let n = rng.gen_range(6..=9);
        let h = random_host(&mut rng, n, 0.8);
        let Some(d) = h.min_positive_codegree() else { continue };
        if d > n / 2 {
            assert!(find_embedding(&h, PatternKind::C5).is_some());
            assert!(validate_embedding(&h, &find_c5_witness(&h).unwrap()));
            checked += 1;
        }
        if d > n / 3 {
            assert!(validate_embedding(&h, &find_c5minus_witness(&h).unwrap()));
        }
    }
    assert!(checked > 0);
}

fn assert_partite_certificate(h: &TripleSystem, n: usize) {
    let analysis = analyze_half_degree(h).unwrap();
    let HalfDegreeOutcome::Structure(cert) = &analysis.outcome else {
        panic!("expected a structure certificate at n={n}");
    };
    cert.verify(h).unwrap();
    assert_eq!(cert.q, n / 4);
    assert_eq!(cert.r0, 0);
    assert!(cert.b_sets.iter().all(|b| b.is_empty()));
    assert!(cert.split.is_none());
    assert_eq!(cert.conclusion(), "n divisible by 4");
    for fact in Fact::ALL {
        let report = check_fact(h, cert.base, fact).unwrap();
        assert!(report.is_ok(), "{fact} at n={n}: {}", report.detail);
    }
}

#[test]
fn four_partite_hosts_certify_divisibility() {
    for n in [8, 12, 16] {
        let (h, parts) = construct_complete_k_partite(n, 4).unwrap();
        assert_partite_certificate(&h, n);
        let HalfDegreeOutcome::Structure(cert) = analyze_half_degree(&h).unwrap().outcome else { unreachable!() };
        let mut a_sets = cert.a_sets.to_vec();
        let mut expected = parts.parts().to_vec();
        a_sets.sort_by_key(|s| s.bits());
        expected.sort_by_key(|s| s.bits());
        assert_eq!(a_sets, expected);
    }
}

#[test]
fn complete_host_on_four_vertices_certifies() {
    let h = TripleSystem::complete(4).unwrap();
    assert_partite_certificate(&h, 4);
    let report = check_fact(&h, [0, 1, 2, 3], Fact::CommonDifference).unwrap();
    assert!(report.holds);
}

#[test]
fn nonempty_b_set_is_paired_into_a_certificate() {
    let h = TripleSystem::new(12, SPLIT_HOST.iter().copied()).unwrap();
    assert_eq!(h.min_positive_codegree(), Some(6));
    assert!(find_embedding(&h, PatternKind::C5).is_none());
    let frame = K4Frame::new(&h, [0, 1, 2, 3]).unwrap();
    assert_eq!(frame.nonempty_b(), vec![0]);

    let analysis = analyze_half_degree(&h).unwrap();
    assert_eq!(analysis.facts_exercised(), Fact::ALL.to_vec());
    let HalfDegreeOutcome::Structure(cert) = &analysis.outcome else {
        panic!("expected a structure certificate");
    };
    cert.verify(&h).unwrap();
    assert_eq!(cert.split, Some(0));
    assert_eq!((cert.q, cert.r0), (1, 4));
    assert_eq!(cert.n, 4 * cert.q + 2 * cert.r0);
    assert_eq!(cert.classes.len() % 2, 0);
    for (x, &y) in cert.pairing.iter().enumerate() {
        assert_ne!(x, y);
        assert_eq!(cert.pairing[y], x);
        assert_eq!(cert.classes[x].len(), cert.classes[y].len());
    }
    for fact in Fact::ALL {
        let report = check_fact(&h, cert.base, fact).unwrap();
        assert!(report.applicable && report.holds, "{fact}: {}", report.detail);
    }
}

#[test]
fn relabeled_split_host_still_certifies() {
    let h = TripleSystem::new(12, SPLIT_HOST.iter().copied()).unwrap();
    let perm = [7, 3, 11, 0, 5, 9, 1, 10, 2, 8, 4, 6];
    let g = h.relabel(&perm).unwrap();
    match analyze_half_degree(&g).unwrap().outcome {
        HalfDegreeOutcome::Structure(cert) => cert.verify(&g).unwrap(),
        HalfDegreeOutcome::C5(e) => panic!("C5-free host produced {e:?}"),
    }
}

#[test]
fn half_degree_hosts_never_contradict() {
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    let mut seen = 0;
    for _ in 0..400 {
        let n = [6, 8, 10][rng.gen_range(0..3)];
        let total = n * (n - 1) * (n - 2) / 6;
        let deletions = rng.gen_range(total / 2..=total);
        let h = dense_host(&mut rng, n, n / 2, deletions);
        if h.min_positive_codegree() != Some(n / 2) {
            continue;
        }
        seen += 1;
        match analyze_half_degree(&h) {
            Ok(a) => match a.outcome {
                HalfDegreeOutcome::C5(e) => assert!(validate_embedding(&h, &e)),
                HalfDegreeOutcome::Structure(cert) => {
                    cert.verify(&h).unwrap();
                    assert!(find_embedding(&h, PatternKind::C5).is_none());
                }
            },
            Err(err) => panic!("{err}\n{:?}", h.edges()),
        }
    }
    assert!(seen > 20, "only {seen} hosts at the boundary");
}

#[test]
fn half_degree_precondition() {
    let (h, _) = construct_complete_k_partite(6, 3).unwrap();
    assert!(precondition(analyze_half_degree(&h)));
    let (h, _) = construct_complete_k_partite(9, 4).unwrap();
    assert!(precondition(analyze_half_degree(&h)));
}
