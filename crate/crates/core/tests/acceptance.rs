//! End-to-end acceptance suite: one test per release criterion, each
//! emitting a single pass/fail line through the harness.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use toricwedge::charmap::{CharMatrix, Ring};
use toricwedge::complex::{cycle, SimplicialComplex};
use toricwedge::fanprops::{
    is_fan_giving, is_fan_giving_oracle, is_positive, todd_genus, OrientedSphere,
};
use toricwedge::galeview::{
    shephard_criterion, shephard_diagram, PointConfiguration,
};
use toricwedge::label::VertexLabel;
use toricwedge::liftkit::{lift_charmap, lift_unimodular, parity_equal};
use toricwedge::matrix::{det, identity, mat_mul, Int, IntMat};
use toricwedge::picard3::{
    cube_tower_member, heptagon_facet_complex, heptagon_obstruction_search,
    heptagon_obstruction_search_with, pentagon_candidates, pentagon_family,
    pentagon_lambda, pentagon_sweep, projectivity_sweep, PentagonFamilySpec,
};
use toricwedge::realcover::{
    cube_family_complex, dj_count_cube_formula, dj_count_pentagon_formula,
    enumerate_small_covers, heptagon_reference_maps, pentagon_polytope_complex,
    pentagon_reference_classes, FaceInput,
};

fn l(s: &str) -> VertexLabel {
    VertexLabel::parse(s).unwrap()
}

/// All length-`parts` compositions with the given total-sum bound.
fn compositions(parts: usize, sum_max: usize) -> Vec<Vec<u32>> {
    fn rec(parts: usize, budget: usize, acc: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if parts == 0 {
            out.push(acc.clone());
            return;
        }
        for x in 1..=budget.saturating_sub(parts - 1) {
            acc.push(x as u32);
            rec(parts - 1, budget - x, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    rec(parts, sum_max, &mut Vec::new(), &mut out);
    out
}

#[test]
fn criterion_01_pentagon_census_recovers_the_five_classes() {
    let k = cycle(5);
    let input = FaceInput::from_complex_auto(&k).unwrap();
    let census = enumerate_small_covers(&input);
    assert_eq!(census.count(), 5);
    let refs = pentagon_reference_classes();
    for r in &refs {
        assert!(
            census.matrices().iter().any(|m| m.dj_equal(r)),
            "reference class missing from the census"
        );
    }
}

#[test]
fn criterion_02_the_nineteen_matrices_over_1_2_1_2_2() {
    let k = SimplicialComplex::from_gale(&[1, 2, 1, 2, 2]).unwrap();
    let order: Vec<VertexLabel> = ["1", "2_1", "3", "4_1", "5_1", "2_2", "4_2", "5_2"]
        .iter()
        .map(|s| l(s))
        .collect();
    let input = FaceInput::from_complex(&k, &order).unwrap();
    let census = enumerate_small_covers(&input);
    assert_eq!(census.count(), 19);
    let printed: [[[u8; 3]; 5]; 19] = [
        [[0, 1, 1], [1, 0, 0], [1, 1, 0], [0, 1, 0], [0, 0, 1]],
        [[0, 1, 1], [1, 0, 0], [1, 1, 1], [0, 1, 0], [0, 0, 1]],
        [[0, 1, 1], [1, 0, 1], [1, 1, 0], [0, 1, 0], [0, 0, 1]],
        [[0, 1, 1], [1, 0, 1], [1, 1, 1], [0, 1, 0], [0, 0, 1]],
        [[0, 1, 1], [1, 0, 0], [1, 1, 1], [0, 1, 0], [1, 0, 1]],
        [[0, 1, 1], [1, 0, 0], [1, 1, 0], [0, 1, 0], [1, 1, 1]],
        [[0, 1, 1], [1, 0, 0], [1, 1, 1], [1, 1, 0], [0, 0, 1]],
        [[0, 1, 1], [1, 0, 0], [1, 1, 1], [1, 1, 0], [1, 0, 1]],
        [[1, 0, 1], [1, 0, 0], [0, 1, 1], [0, 1, 0], [0, 0, 1]],
        [[1, 0, 1], [1, 1, 0], [0, 1, 1], [0, 1, 0], [0, 0, 1]],
        [[1, 1, 1], [1, 0, 0], [0, 1, 1], [0, 1, 0], [0, 0, 1]],
        [[1, 1, 1], [1, 1, 0], [0, 1, 1], [0, 1, 0], [0, 0, 1]],
        [[1, 1, 1], [1, 0, 0], [0, 1, 1], [0, 1, 0], [1, 0, 1]],
        [[1, 0, 1], [1, 0, 0], [0, 1, 1], [1, 1, 1], [0, 0, 1]],
        [[1, 1, 1], [1, 0, 0], [0, 1, 1], [1, 1, 0], [0, 0, 1]],
        [[1, 1, 1], [1, 0, 0], [0, 1, 1], [1, 1, 0], [1, 0, 1]],
        [[1, 0, 1], [1, 0, 0], [1, 1, 0], [0, 1, 0], [0, 0, 1]],
        [[1, 0, 1], [1, 0, 0], [1, 1, 0], [0, 1, 0], [1, 1, 1]],
        [[1, 0, 1], [1, 0, 0], [1, 1, 0], [1, 1, 1], [0, 0, 1]],
    ];
    // Non-identity block of a member: rows over the three trailing columns.
    let blocks: Vec<[[u8; 3]; 5]> = census
        .members
        .iter()
        .map(|cols| {
            let mut b = [[0u8; 3]; 5];
            for (j, &col) in cols[5..].iter().enumerate() {
                for r in 0..5 {
                    b[r][j] = (col >> r & 1) as u8;
                }
            }
            b
        })
        .collect();
    // Identity prefixes are fixed, so count plus containment forces the two
    // sets to coincide.
    for p in &printed {
        assert!(blocks.contains(p), "printed block missing from the census");
    }
}

#[test]
fn criterion_03_pentagon_counts_match_the_closed_form() {
    for a in compositions(5, 9) {
        let a: [u32; 5] = a.try_into().unwrap();
        let k = pentagon_polytope_complex(&a).unwrap();
        let input = FaceInput::from_complex_auto(&k).unwrap();
        let census = enumerate_small_covers(&input);
        assert_eq!(
            census.count() as u128,
            dj_count_pentagon_formula(&a),
            "count mismatch at {a:?}"
        );
    }
}

#[test]
fn criterion_04_heptagon_censuses_have_exactly_two_members() {
    for a in compositions(7, 10) {
        let k = heptagon_facet_complex().k_of_j(&a).unwrap();
        let input = FaceInput::from_complex_auto(&k).unwrap();
        let census = enumerate_small_covers(&input);
        assert_eq!(census.count(), 2, "count mismatch at {a:?}");
    }
    let k = heptagon_facet_complex();
    let input = FaceInput::from_complex_auto(&k).unwrap();
    let census = enumerate_small_covers(&input);
    for r in heptagon_reference_maps() {
        assert!(
            census.matrices().iter().any(|m| m.dj_equal(&r)),
            "base heptagon map missing from the census"
        );
    }
}

#[test]
fn criterion_05_cube_counts_match_the_closed_form() {
    for n1 in 1..=3u32 {
        for n2 in 1..=3u32 {
            for n3 in 1..=3u32 {
                let n = [n1, n2, n3];
                let k = cube_family_complex(&n).unwrap();
                let input = FaceInput::from_complex_auto(&k).unwrap();
                let census = enumerate_small_covers(&input);
                assert_eq!(
                    census.count() as u128,
                    dj_count_cube_formula(&n),
                    "count mismatch at {n:?}"
                );
            }
        }
    }
}

#[test]
fn criterion_06_bounded_pentagon_classification_is_exhaustive() {
    let (count, types) = pentagon_sweep(4).unwrap();
    assert!(count > 0);
    assert!(!types.is_empty());
    // The surviving canonical types are pairwise inequivalent: the only
    // collisions are the rotation identifications already folded away.
    for (i, s) in types.iter().enumerate() {
        for t in types.iter().skip(i + 1) {
            assert!(
                !pentagon_lambda(s.rotation, s.d)
                    .dj_equal(&pentagon_lambda(t.rotation, t.d)),
                "unexpected collision between {s:?} and {t:?}"
            );
        }
    }
}

#[test]
fn criterion_07_heptagon_obstruction_has_no_bounded_solution() {
    assert!(heptagon_obstruction_search(10).is_empty());
    // Negative control: dropping the last determinant equation re-opens the
    // system already at a small bound.
    let mut active = [true; 9];
    active[8] = false;
    assert!(!heptagon_obstruction_search_with(3, active).is_empty());
}

#[test]
fn criterion_08_fan_giving_wedge_with_empty_shephard_region() {
    // Vertex labels here are the raw cyclic diagram positions, with the
    // first position doubled.
    let kw = SimplicialComplex::from_gale(&[2, 1, 1, 1, 1, 1, 1]).unwrap();
    let labels = ["1_1", "1_2", "2", "3", "4", "5", "6", "7"];
    let rows: [[i64; 8]; 5] = [
        [-16, 16, -1, 0, 0, 0, 0, 1],
        [-33, 83, -6, 0, 0, 0, 1, 0],
        [-37, 127, -10, 0, 0, 1, 0, 0],
        [-33, 123, -10, 0, 1, 0, 0, 0],
        [-13, 63, -6, 1, 0, 0, 0, 0],
    ];
    let row_refs: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
    let lambda = CharMatrix::from_rows(Ring::Z, &labels, &row_refs).unwrap();

    // The fan is complete but deliberately singular, so non-singularity is
    // not asserted.
    let os = OrientedSphere::orient(&kw).unwrap();
    assert!(is_fan_giving(&os, &lambda).unwrap());
    assert!(is_fan_giving_oracle(&kw, &lambda).unwrap());

    let rays = PointConfiguration::from_columns(&lambda).unwrap();
    let diagram = shephard_diagram(&rays).unwrap();
    let region = shephard_criterion(&kw, &diagram).unwrap();
    assert!(!region.nonempty, "the full region should be empty");

    // Deleting either copy of the wedged vertex leaves the diagram of the
    // corresponding projection, whose region is nonempty.
    for copy in ["1_1", "1_2"] {
        let link = kw.link(&l(copy)).unwrap();
        let sub = diagram.delete_point(&l(copy)).unwrap();
        let sub_region = shephard_criterion(&link, &sub).unwrap();
        assert!(sub_region.nonempty, "deletion at {copy} should be projective");
        assert!(sub_region.witness.is_some());
    }
}

#[test]
fn criterion_09_desk_scale_projectivity_sweeps_find_no_counterexample() {
    // Pentagon family: multiplicity sum at most 8, all parameters in
    // [-2, 2].
    let mut members = Vec::new();
    for a in compositions(5, 8) {
        let a: [usize; 5] = [
            a[0] as usize,
            a[1] as usize,
            a[2] as usize,
            a[3] as usize,
            a[4] as usize,
        ];
        for d in -2i64..=2 {
            for n1 in bounded_vectors(a[0], 2) {
                for n4 in bounded_vectors(a[3], 2) {
                    let spec = PentagonFamilySpec { a, d, n1: n1.clone(), n4 };
                    members.push(pentagon_family(&spec).unwrap());
                }
            }
        }
    }
    let report = projectivity_sweep(&members).unwrap();
    assert_eq!(report.total, members.len());
    assert!(report.non_projective.is_empty(), "pentagon family failed");

    // Triple tower family: factor dimensions at most 2, one hundred random
    // draws per shape.
    let mut rng = ChaCha8Rng::seed_from_u64(20240901);
    let mut towers = Vec::new();
    for n1 in 1..=2u32 {
        for n2 in 1..=2u32 {
            for n3 in 1..=2u32 {
                let free = n1 as usize + (n1 + n2) as usize;
                for _ in 0..100 {
                    let params: Vec<i64> =
                        (0..free).map(|_| rng.gen_range(-5..=5)).collect();
                    towers.push(cube_tower_member(&[n1, n2, n3], &params).unwrap());
                }
            }
        }
    }
    let report = projectivity_sweep(&towers).unwrap();
    assert!(report.non_projective.is_empty(), "tower family failed");
}

/// Vectors with a pinned zero head and remaining entries in `[-bound, bound]`.
fn bounded_vectors(len: usize, bound: i64) -> Vec<Vec<i64>> {
    let mut out = vec![vec![0i64]];
    for _ in 1..len {
        let mut next = Vec::new();
        for v in &out {
            for x in -bound..=bound {
                let mut w = v.clone();
                w.push(x);
                next.push(w);
            }
        }
        out = next;
    }
    out
}

/// A random product of elementary integer row operations.
fn random_unimodular(rng: &mut ChaCha8Rng, n: usize) -> IntMat {
    let mut u = identity(n);
    for _ in 0..6 {
        let i = rng.gen_range(0..n);
        let mut j = rng.gen_range(0..n);
        if n > 1 {
            while j == i {
                j = rng.gen_range(0..n);
            }
            let mut e = identity(n);
            e[i][j] = Int::from(rng.gen_range(-2i64..=2));
            u = mat_mul(&e, &u);
        }
    }
    u
}

#[test]
fn criterion_10_wedge_transport_round_trips_on_random_instances() {
    let mut rng = ChaCha8Rng::seed_from_u64(514);
    let base = cycle(5);
    let mut tested = 0usize;
    while tested < 500 {
        // A random family member over an iterated wedge of the 5-cycle,
        // with at least one doubled group to split at, scrambled by a
        // random basis change.
        let mut a = [1usize; 5];
        for x in a.iter_mut() {
            *x = rng.gen_range(1..=2);
        }
        let g = rng.gen_range(0..5);
        a[g] = 2;
        let m: usize = a.iter().sum();
        let d = rng.gen_range(-2i64..=2);
        let n1: Vec<i64> = (0..a[0])
            .map(|i| if i == 0 { 0 } else { rng.gen_range(-2..=2) })
            .collect();
        let n4: Vec<i64> = (0..a[3])
            .map(|i| if i == 0 { 0 } else { rng.gen_range(-2..=2) })
            .collect();
        let spec = PentagonFamilySpec { a, d, n1, n4 };
        let (w, lambda) = pentagon_family(&spec).unwrap();
        let lambda = lambda.transformed(&random_unimodular(&mut rng, m - 3));

        // Split group g: the two copies of its base vertex exhibit `w` as a
        // wedge over the complex with one fewer copy.
        let mut a_base: Vec<u32> = a.iter().map(|&x| x as u32).collect();
        a_base[g] -= 1;
        let kb = base.k_of_j(&a_base).unwrap();
        let gb = (g + 1).to_string();
        let v1 = VertexLabel::new(gb.clone(), 1);
        let v2 = VertexLabel::new(gb.clone(), 2);
        let down: BTreeMap<VertexLabel, VertexLabel> = (2..=a[g] as u32)
            .map(|c| {
                (VertexLabel::new(gb.clone(), c), VertexLabel::new(gb.clone(), c - 1))
            })
            .collect();

        let side1 = lambda.project(&w, &[v2.clone()]).unwrap();
        let side2 = lambda
            .project(&w, &[v1.clone()])
            .unwrap()
            .relabel(&down)
            .unwrap();
        let rebuilt =
            CharMatrix::wedge_reconstruct(&kb, &v1, &side1, &side2).unwrap();
        assert!(rebuilt.dj_equal(&lambda), "round trip failed for {spec:?}");

        // Flag transport between the wedge and its two projections.
        let os_w = OrientedSphere::orient(&w).unwrap();
        let os_b = OrientedSphere::orient(&kb).unwrap();
        let ns = lambda.is_nonsingular(&w).unwrap();
        let ns1 = side1.is_nonsingular(&kb).unwrap();
        let ns2 = side2.is_nonsingular(&kb).unwrap();
        assert_eq!(ns, ns1 && ns2);
        if ns {
            let pos = is_positive(&os_w, &lambda).unwrap();
            assert_eq!(
                pos,
                is_positive(&os_b, &side1).unwrap()
                    && is_positive(&os_b, &side2).unwrap()
            );
            let fan = is_fan_giving(&os_w, &lambda).unwrap();
            assert_eq!(
                fan,
                is_fan_giving(&os_b, &side1).unwrap()
                    && is_fan_giving(&os_b, &side2).unwrap()
            );
        }
        tested += 1;
    }
}

#[test]
fn criterion_11_todd_agreement_and_the_fan_oracle() {
    // Small-ray corpus: bounded pentagon candidates, the heptagon pair read
    // over the integers, and tower members.
    let mut corpus: Vec<(SimplicialComplex, CharMatrix)> = Vec::new();
    let pent = cycle(5);
    for lambda in pentagon_candidates(2) {
        if lambda.is_nonsingular(&pent).unwrap() {
            corpus.push((pent.clone(), lambda));
        }
    }
    let hep = heptagon_facet_complex();
    for m in heptagon_reference_maps() {
        let rows = m.as_gf2_rows();
        let int_rows: Vec<Vec<i64>> =
            rows.iter().map(|r| r.iter().map(|&x| x as i64).collect()).collect();
        let row_refs: Vec<&[i64]> = int_rows.iter().map(|r| r.as_slice()).collect();
        let labels: Vec<String> = m.labels().iter().map(|v| v.to_string()).collect();
        let label_refs: Vec<&str> = labels.iter().map(|s| s.as_str()).collect();
        let z = CharMatrix::from_rows(Ring::Z, &label_refs, &row_refs).unwrap();
        corpus.push((hep.clone(), z));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for n in [[1, 1, 1], [1, 2, 1], [2, 1, 1], [1, 1, 2], [2, 2, 1]] {
        let free = n[0] as usize + (n[0] + n[1]) as usize;
        for _ in 0..10 {
            let params: Vec<i64> = (0..free).map(|_| rng.gen_range(-4..=4)).collect();
            corpus.push(cube_tower_member(&n, &params).unwrap());
        }
    }

    for (k, lambda) in &corpus {
        assert!(k.vertex_count() <= 9);
        let os = OrientedSphere::orient(k).unwrap();
        // The genus evaluation itself cross-checks several generic
        // directions and fails loudly on disagreement.
        let genus = todd_genus(&os, lambda).unwrap();
        let fan = is_fan_giving(&os, lambda).unwrap();
        assert_eq!(fan, is_fan_giving_oracle(k, lambda).unwrap());
        if fan {
            assert_eq!(genus, 1);
        }
    }
}

#[test]
fn criterion_12_lifting_certificates_hold_across_the_corpora() {
    // Random odd-determinant matrices of every size up to eight.
    let mut rng = ChaCha8Rng::seed_from_u64(1234);
    let mut produced = 0usize;
    while produced < 100 {
        let n = rng.gen_range(1..=8usize);
        let a: IntMat = (0..n)
            .map(|_| (0..n).map(|_| Int::from(rng.gen_range(-9i64..=9))).collect())
            .collect();
        if det(&a).bit(0) {
            let b = lift_unimodular(&a).unwrap();
            assert_eq!(det(&b), Int::from(1));
            assert!(parity_equal(&a, &b));
            produced += 1;
        }
    }

    // Every census member over the small-corpus complexes lifts with a
    // mod-2 round trip.
    let mut complexes: Vec<SimplicialComplex> = Vec::new();
    for a in compositions(5, 7) {
        let a: [u32; 5] = a.try_into().unwrap();
        complexes.push(pentagon_polytope_complex(&a).unwrap());
    }
    complexes.push(heptagon_facet_complex());
    for n1 in 1..=2u32 {
        for n2 in 1..=2u32 {
            for n3 in 1..=2u32 {
                complexes.push(cube_family_complex(&[n1, n2, n3]).unwrap());
            }
        }
    }
    for k in &complexes {
        let input = FaceInput::from_complex_auto(k).unwrap();
        let census = enumerate_small_covers(&input);
        for member in census.matrices() {
            let cert = lift_charmap(&member, k).unwrap();
            assert!(cert.ok(), "lift failed for a member over {} vertices", k.vertex_count());
        }
    }
}
