//! Acceptance suite: one test per shipping criterion, each printing a
//! pass/fail line (visible with `cargo test --test acceptance -- --nocapture`).
//! All arithmetic checks are exact; the only tolerances are the stated
//! wall-clock budgets.

use std::time::Instant;

use num::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use wallchamber::linalg::{int, int_vec, rat_vec, Int, Rat};
use wallchamber::stability::tf_equivalent_bounded;
use wallchamber::walls::kronecker_wall_oracle;
use wallchamber::{chambers, Cone, DimVector, Quiver, SegmentHit, TfVerdict, WallTable, Weight};

fn dv(v: &[i64]) -> DimVector {
    DimVector::from_slice(v).unwrap()
}

fn report(criterion: u32, name: &str, started: Instant, budget_secs: f64) {
    let elapsed = started.elapsed().as_secs_f64();
    println!("criterion {criterion} ({name}): pass in {elapsed:.3}s (budget {budget_secs}s)");
    assert!(
        elapsed < budget_secs,
        "criterion {criterion} exceeded its {budget_secs}s budget: {elapsed:.3}s"
    );
}

#[test]
fn criterion_1_a2_walls_are_exact() {
    let started = Instant::now();
    let table = WallTable::new(Quiver::linear(2));

    let line = |axis: usize| {
        let mut e = vec![Int::zero(); 2];
        e[axis] = Int::from(1);
        Cone::from_int_generators(2, &[], &[e]).unwrap()
    };
    let w = table.wall(&dv(&[1, 0])).unwrap();
    assert!(w.set_eq(&line(1)).unwrap(), "wall of (1,0) must be R[P2]");
    let w = table.wall(&dv(&[0, 1])).unwrap();
    assert!(w.set_eq(&line(0)).unwrap(), "wall of (0,1) must be R[P1]");
    let w = table.wall(&dv(&[1, 1])).unwrap();
    let ray = Cone::from_int_generators(2, &[int_vec(&[1, -1])], &[]).unwrap();
    assert!(w.set_eq(&ray).unwrap(), "wall of (1,1) must be the ray [P1]-[P2]");

    report(1, "A2 walls", started, 1.0);
}

#[test]
fn criterion_2_kronecker_oracle_sweep() {
    let started = Instant::now();
    for m in 0..=3i64 {
        let table = WallTable::new(Quiver::kronecker(m as usize));
        let sweep = table.wall_sweep(12).unwrap();
        assert_eq!(sweep.len(), 90, "expected 13*14/2 - 1 vectors, got {}", sweep.len());
        for (d, wall) in sweep {
            let oracle = kronecker_wall_oracle(m, &d).unwrap();
            assert!(
                wall.set_eq(&oracle).unwrap(),
                "recursion disagrees with the closed form at m={m}, d={d}"
            );
        }
    }
    report(2, "kronecker oracle sweep", started, 10.0);
}

#[test]
fn criterion_3_a3_recursion_fixture() {
    let started = Instant::now();
    let table = WallTable::new(Quiver::linear(3));

    let expected_110 =
        Cone::from_int_generators(3, &[int_vec(&[1, -1, 0])], &[int_vec(&[0, 0, 1])]).unwrap();
    assert!(table.wall(&dv(&[1, 1, 0])).unwrap().set_eq(&expected_110).unwrap());

    let expected_011 =
        Cone::from_int_generators(3, &[int_vec(&[0, 1, -1])], &[int_vec(&[1, 0, 0])]).unwrap();
    assert!(table.wall(&dv(&[0, 1, 1])).unwrap().set_eq(&expected_011).unwrap());

    let expected_111 =
        Cone::from_int_generators(3, &[int_vec(&[1, -1, 0]), int_vec(&[0, 1, -1])], &[]).unwrap();
    assert!(table.wall(&dv(&[1, 1, 1])).unwrap().set_eq(&expected_111).unwrap());

    report(3, "A3 recursion fixture", started, 1.0);
}

#[test]
fn criterion_4_schur_classification() {
    let started = Instant::now();

    let a2 = WallTable::new(Quiver::linear(2));
    let r = a2.classify_schur(&dv(&[1, 1])).unwrap();
    assert!(r.is_schur && r.label.kind.as_str() == "real");

    let r = a2.classify_schur(&dv(&[2, 2])).unwrap();
    assert!(!r.is_schur && r.is_multiple_of_schur);

    let k3 = WallTable::new(Quiver::kronecker(3));
    let r = k3.classify_schur(&dv(&[2, 3])).unwrap();
    assert!(r.is_schur && r.label.kind.as_str() == "imaginary-nonisotropic");
    assert_eq!(r.wall_dim, 1);

    let k2 = WallTable::new(Quiver::kronecker(2));
    let r = k2.classify_schur(&dv(&[1, 1])).unwrap();
    assert!(r.is_schur && r.label.kind.as_str() == "isotropic");

    report(4, "schur classification", started, 1.0);
}

#[test]
fn criterion_5_chamber_counts_unimodularity_coverage() {
    let started = Instant::now();

    let cases: [(Quiver, usize); 4] = [
        (Quiver::linear(1), 2),
        (Quiver::linear(2), 5),
        (Quiver::no_arrows(2), 4),
        (Quiver::linear(3), 14),
    ];
    for (quiver, expected) in cases {
        let label = format!("{quiver:?}");
        let table = WallTable::new(quiver);
        let decomposition = chambers::enumerate_chambers(&table).unwrap();
        assert_eq!(decomposition.chambers.len(), expected, "{label}");
        for chamber in &decomposition.chambers {
            assert_eq!(chamber.g_matrix.len(), table.quiver().n(), "{label}: simplicial");
            assert_eq!(chamber.det.abs(), 1, "{label}: unimodular");
        }
        let unimodular = chambers::check_unimodular(&decomposition.chambers);
        assert!(unimodular.pass, "{label}: {:?}", unimodular.violations);
        let coverage = chambers::check_fan_coverage(&decomposition.chambers).unwrap();
        assert!(coverage.pass, "{label}: {:?}", coverage.issues);
    }

    report(5, "chamber counts + fan coverage", started, 30.0);
}

#[test]
fn criterion_6_tf_equivalence_properties() {
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(94);

    // pinned witness for the A2 pair
    let a2 = WallTable::new(Quiver::linear(2));
    let verdict = tf_equivalent_bounded(
        &a2,
        &Weight::from_ints(&[2, -1]),
        &Weight::from_ints(&[1, -2]),
        2,
    )
    .unwrap();
    match verdict {
        TfVerdict::NotEquivalent { witness_d, witness_hit, .. } => {
            assert_eq!(witness_d, dv(&[1, 1]));
            assert_eq!(witness_hit, SegmentHit::Point { t: Rat::new(int(1), int(2)) });
        }
        other => panic!("expected not_equivalent, got {other:?}"),
    }

    // 100 random interior pairs drawn from single chambers of A2 and A3
    let mut same_chamber_pairs = 0;
    for quiver in [Quiver::linear(2), Quiver::linear(3)] {
        let table = WallTable::new(quiver);
        let n = table.quiver().n();
        let bound = table
            .quiver()
            .positive_roots()
            .unwrap()
            .iter()
            .map(|d| d.total_degree())
            .max()
            .unwrap();
        let decomposition = chambers::enumerate_chambers(&table).unwrap();
        for _ in 0..50 {
            let chamber =
                &decomposition.chambers[rng.gen_range(0..decomposition.chambers.len())];
            let mut sample = || -> Weight {
                let mut point = vec![Rat::zero(); n];
                for ray in &chamber.g_matrix {
                    let c = Rat::new(int(rng.gen_range(1..=9)), int(rng.gen_range(1..=4)));
                    for (p, &r) in point.iter_mut().zip(ray) {
                        *p = &*p + &c * Rat::from_integer(Int::from(r));
                    }
                }
                Weight::new(point)
            };
            let (a, b) = (sample(), sample());
            let verdict = tf_equivalent_bounded(&table, &a, &b, bound).unwrap();
            assert_eq!(
                verdict.kind(),
                "equivalent_exact",
                "interior points of one chamber must be TF equivalent"
            );
            same_chamber_pairs += 1;
        }
    }
    assert_eq!(same_chamber_pairs, 100);

    // 1000 positive-scaling trials across fixtures are never separated
    let fixtures = [
        WallTable::new(Quiver::linear(2)),
        WallTable::new(Quiver::linear(3)),
        WallTable::new(Quiver::no_arrows(2)),
        WallTable::new(Quiver::kronecker(2)),
        WallTable::new(Quiver::kronecker(3)),
        WallTable::new(Quiver::wild_123()),
    ];
    let mut trials = 0;
    while trials < 1000 {
        let table = &fixtures[rng.gen_range(0..fixtures.len())];
        let n = table.quiver().n();
        let coords: Vec<Rat> = (0..n)
            .map(|_| Rat::new(int(rng.gen_range(-9..=9)), int(rng.gen_range(1..=4))))
            .collect();
        if coords.iter().all(Rat::is_zero) {
            continue;
        }
        let c = Rat::new(int(rng.gen_range(1..=12)), int(rng.gen_range(1..=6)));
        let scaled: Vec<Rat> = coords.iter().map(|x| x * &c).collect();
        let verdict =
            tf_equivalent_bounded(table, &Weight::new(coords), &Weight::new(scaled), 3).unwrap();
        assert!(
            verdict.is_equivalent(),
            "positive scaling can never cross a wall: {verdict:?}"
        );
        trials += 1;
    }

    report(6, "tf equivalence properties", started, 60.0);
}

#[test]
fn criterion_7_cone_kernel_property_suite() {
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(402);
    let mut cases = 0;

    fn random_vectors(rng: &mut ChaCha8Rng, n: usize, max: usize) -> Vec<Vec<Int>> {
        let count = rng.gen_range(0..=max);
        (0..count)
            .map(|_| (0..n).map(|_| Int::from(rng.gen_range(-3i64..=3))).collect())
            .collect()
    }

    while cases < 500 {
        let n = rng.gen_range(1..=4usize);
        let vectors = random_vectors(&mut rng, n, 6);
        let lines = random_vectors(&mut rng, n, 2);
        let c = if rng.gen_bool(0.5) {
            Cone::from_int_generators(n, &vectors, &lines).unwrap()
        } else {
            Cone::from_int_constraints(n, &vectors, &lines).unwrap()
        };

        // duality involution
        assert!(c.dual_cone().dual_cone().set_eq(&c).unwrap());

        // description coherence
        for r in c.rays() {
            assert!(c.eqs().iter().all(|e| wallchamber::linalg::dot(e, r).is_zero()));
            assert!(c.ineqs().iter().all(|a| !wallchamber::linalg::dot(a, r).is_negative()));
        }
        for l in c.lineality() {
            assert!(c
                .eqs()
                .iter()
                .chain(c.ineqs())
                .all(|v| wallchamber::linalg::dot(v, l).is_zero()));
        }

        // intersection / hull containment laws against a second cone
        let second = random_vectors(&mut rng, n, 4);
        let other = if rng.gen_bool(0.5) {
            Cone::from_int_generators(n, &second, &[]).unwrap()
        } else {
            Cone::from_int_constraints(n, &second, &[]).unwrap()
        };
        let meet = c.intersect(&other).unwrap();
        assert!(c.contains_cone(&meet).unwrap());
        assert!(other.contains_cone(&meet).unwrap());
        let hull = Cone::conic_hull(&[&c, &other]).unwrap();
        assert!(hull.contains_cone(&c).unwrap());
        assert!(hull.contains_cone(&other).unwrap());

        // segment classification agrees with 50-point sampling
        let p: Vec<i64> = (0..n).map(|_| rng.gen_range(-4i64..=4)).collect();
        let q: Vec<i64> = (0..n).map(|_| rng.gen_range(-4i64..=4)).collect();
        if p != q {
            let (pr, qr) = (rat_vec(&p), rat_vec(&q));
            let hit = c.segment_intersection(&pr, &qr).unwrap();
            for k in 0..=50 {
                let t = Rat::new(int(k), int(50));
                let point: Vec<Rat> = pr
                    .iter()
                    .zip(&qr)
                    .map(|(x, y)| x * (Rat::from_integer(Int::from(1)) - &t) + y * &t)
                    .collect();
                let inside = c.contains_point(&point).unwrap();
                let expected = match &hit {
                    SegmentHit::Empty => false,
                    SegmentHit::Full => true,
                    SegmentHit::Point { t: t0 } => &t == t0,
                    SegmentHit::SubSegment { t_lo, t_hi } => &t >= t_lo && &t <= t_hi,
                };
                assert_eq!(inside, expected, "sampling disagreement at t={k}/50");
            }
        }

        cases += 1;
    }

    report(7, "cone kernel property suite (500 cases)", started, 60.0);
}

#[test]
fn criterion_8_wild_slice_with_round_trip() {
    let started = Instant::now();

    let dir = tempfile::tempdir().unwrap();
    let quiver_path = dir.path().join("wild123.quiver");
    std::fs::write(&quiver_path, "vertices 3\narrow 1 2\narrow 1 2\narrow 2 3\n").unwrap();
    let svg_path = dir.path().join("wild123.svg");

    let argv: Vec<String> = [
        "wallchamber", "slice",
        "-q", quiver_path.to_str().unwrap(),
        "--bound", "8",
        "-o", svg_path.to_str().unwrap(),
    ]
    .iter()
    .map(|s| s.to_string())
    .collect();
    let mut out = Vec::new();
    let code = wallchamber_cli::run(&argv, &mut out);
    assert_eq!(code, 0, "{}", String::from_utf8_lossy(&out));

    let svg = std::fs::read_to_string(&svg_path).unwrap();
    assert!(svg.contains("total degree &#8804; 8"), "the truncation bound must be stated");

    let sidecar: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(dir.path().join("wild123.json")).unwrap())
            .unwrap();
    let walls = sidecar["walls"].as_array().unwrap();
    let has = |d: &[i64]| {
        walls
            .iter()
            .any(|w| w["d"] == serde_json::json!(d) && !w["vertices"].as_array().unwrap().is_empty())
    };
    // the three coordinate walls
    assert!(has(&[1, 0, 0]) && has(&[0, 1, 0]) && has(&[0, 0, 1]));
    // a wall of the A2 subquiver on vertices {2, 3}
    assert!(has(&[0, 1, 1]));
    // the sincere wall computed through the recursion
    assert!(has(&[1, 1, 1]));

    // round trip: every emitted barycentric vertex lies on its source wall
    let table = WallTable::new(Quiver::wild_123());
    let plane: Vec<Vec<Rat>> = sidecar["plane"]
        .as_array()
        .unwrap()
        .iter()
        .map(|p| {
            p.as_array()
                .unwrap()
                .iter()
                .map(|s| s.as_str().unwrap().parse::<Rat>().unwrap())
                .collect()
        })
        .collect();
    let mut vertices_checked = 0;
    for wall_entry in walls {
        let d_entries: Vec<i64> = wall_entry["d"]
            .as_array()
            .unwrap()
            .iter()
            .map(|x| x.as_i64().unwrap())
            .collect();
        let wall = table.wall(&dv(&d_entries)).unwrap();
        for vertex in wall_entry["vertices"].as_array().unwrap() {
            let bary: Vec<Rat> = vertex
                .as_array()
                .unwrap()
                .iter()
                .map(|s| s.as_str().unwrap().parse::<Rat>().unwrap())
                .collect();
            let ambient: Vec<Rat> = (0..3)
                .map(|i| {
                    &bary[0] * &plane[0][i] + &bary[1] * &plane[1][i] + &bary[2] * &plane[2][i]
                })
                .collect();
            assert!(
                wall.contains_point(&ambient).unwrap(),
                "vertex of d={d_entries:?} fails the round trip"
            );
            vertices_checked += 1;
        }
    }
    assert!(vertices_checked > 0);

    report(8, "wild 1=>2->3 slice round trip", started, 60.0);
}
