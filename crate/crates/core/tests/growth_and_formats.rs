mod common;

use std::collections::{HashSet, VecDeque};

use common::platforms;
use ncs_core::analysis::{ball_growth, bench, free_group_bound, AnalysisError, BenchOp, GrowthReport};
use ncs_core::format::{parse_int, parse_uint, strict_lines};
use ncs_core::matrix::MatGroup;
use ncs_core::pc::{catalog, d4_squared, PcPresentation, CATALOG};
use ncs_core::platform::parse_platform;
use ncs_core::{Group, Word};
use proptest::prelude::*;

type M3 = [[i128; 3]; 3];

fn m3_mul(a: &M3, b: &M3) -> M3 {
    let mut c = [[0; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            c[i][j] = (0..3).map(|k| a[i][k] * b[k][j]).sum();
        }
    }
    c
}

/// `B(r)` for the affine matrices of the matrix platform, by BFS over
/// `i128` matrices.
fn affine_balls(radius: usize) -> Vec<u64> {
    let gens: Vec<M3> = vec![
        [[1, 0, 1], [0, 1, 0], [0, 0, 1]],
        [[1, 0, -1], [0, 1, 0], [0, 0, 1]],
        [[1, 0, 0], [0, 1, 1], [0, 0, 1]],
        [[1, 0, 0], [0, 1, -1], [0, 0, 1]],
        [[2, 1, 0], [1, 1, 0], [0, 0, 1]],
        [[1, -1, 0], [-1, 2, 0], [0, 0, 1]],
    ];
    let id: M3 = [[1, 0, 0], [0, 1, 0], [0, 0, 1]];
    let mut seen = HashSet::from([id]);
    let mut frontier = VecDeque::from([id]);
    let mut sizes = vec![1u64];
    for _ in 0..radius {
        let mut next = VecDeque::new();
        for x in frontier {
            for g in &gens {
                let y = m3_mul(&x, g);
                if seen.insert(y) {
                    next.push_back(y);
                }
            }
        }
        sizes.push(seen.len() as u64);
        frontier = next;
    }
    sizes
}

#[test]
fn matrix_ball_sizes_match_affine_bfs() {
    let m = MatGroup::anosov();
    let report = ball_growth(&m, &m.generators(), 9, 1 << 20).unwrap();
    assert_eq!(report.ball_sizes, affine_balls(9));
    assert_eq!(&report.ball_sizes[..6], &[1, 7, 33, 103, 273, 663]);
}

#[test]
fn balls_are_monotone_and_below_the_free_bound() {
    for (name, g) in platforms() {
        let gens = g.generators();
        let report = ball_growth(&g, &gens, 5, 1 << 20).unwrap();
        assert_eq!(report.radii, (0..=5).collect::<Vec<_>>());
        assert_eq!(report.ball_sizes[0], 1);
        for (r, w) in report.ball_sizes.windows(2).enumerate() {
            assert!(w[0] <= w[1], "{name} r={r}");
            assert!(u128::from(w[1]) <= free_group_bound(gens.len() as u64, r as u32 + 1), "{name}");
        }
        if let Some(order) = match g.platform() {
            ncs_core::platform::Platform::Pc(p) => p.order(),
            ncs_core::platform::Platform::Mat(_) => None,
        } {
            let bound: u64 = order.try_into().unwrap();
            assert!(report.ball_sizes.iter().all(|&b| b <= bound), "{name}");
        }
    }
}

#[test]
fn finite_groups_saturate_at_their_order() {
    for (name, order) in [("d4", 8u64), ("q8", 8), ("heis3", 27)] {
        let g = catalog(name).unwrap();
        let report = ball_growth(&g, &g.generators(), 12, 1000).unwrap();
        assert_eq!(*report.ball_sizes.last().unwrap(), order, "{name}");
        assert_eq!(report.tail_ratio().unwrap(), 1.into());
    }
    let d = d4_squared();
    assert_eq!(*ball_growth(&d, &d.generators(), 12, 1000).unwrap().ball_sizes.last().unwrap(), 64);
}

#[test]
fn free_bound_values() {
    assert_eq!(free_group_bound(1, 3), 7);
    assert_eq!(free_group_bound(2, 2), 17);
    assert_eq!(free_group_bound(3, 3), 1 + 6 + 30 + 150);
    assert_eq!(free_group_bound(0, 5), 1);
    assert_eq!(free_group_bound(u64::MAX, 200), u128::MAX);
}

#[test]
fn growth_state_budget() {
    let m = MatGroup::anosov();
    assert!(matches!(ball_growth(&m, &m.generators(), 10, 100), Err(AnalysisError::StateBudget(100))));
}

#[test]
fn growth_report_text() {
    let report = GrowthReport::from_sizes(vec![1, 7, 33]);
    assert_eq!(report.to_string(), "r 0 1 -\nr 1 7 7\nr 2 33 33/7\n");
    assert_eq!(report.ratio_at(2), Some(num_rational::Ratio::new(33, 7)));
    assert_eq!(report.ratio_at(0), None);
    for bad in [
        "r 0 1 -\nr 1 7 6\n",
        "r 0 1 -\nr 2 7 7\n",
        "r 0 1 1\n",
        "r 0 1 -",
        "r 0 1 - \n",
        "r 0 01 -\n",
    ] {
        assert!(bad.parse::<GrowthReport>().is_err(), "{bad:?}");
    }
}

proptest! {
    #[test]
    fn growth_reports_round_trip(steps in prop::collection::vec(0u64..1000, 0..12)) {
        let mut sizes = vec![1u64];
        for s in steps {
            sizes.push(sizes.last().unwrap() + s);
        }
        let report = GrowthReport::from_sizes(sizes);
        prop_assert_eq!(report.to_string().parse::<GrowthReport>().unwrap(), report);
    }

    #[test]
    fn canonical_integers_round_trip(x in any::<i128>()) {
        let s = x.to_string();
        prop_assert_eq!(parse_int(&s).unwrap().to_string(), s.clone());
        let plus = format!("+{s}");
        prop_assert!(parse_int(&plus).is_err());
    }
}

#[test]
fn integer_parsing_is_strict() {
    for bad in ["", "-", "+1", "01", "-0", "-01", " 1", "1 ", "1_000", "0x10", "1e3"] {
        assert!(parse_int(bad).is_err(), "{bad:?}");
    }
    assert!(parse_uint("-1").is_err());
    assert!(strict_lines("a\r\n").is_err());
    assert!(strict_lines("a\nb").is_err());
    assert_eq!(strict_lines("a\nb\n").unwrap(), vec!["a", "b"]);
}

#[test]
fn presentations_round_trip_through_text() {
    let mut all: Vec<PcPresentation> = CATALOG.iter().map(|n| catalog(n).unwrap()).collect();
    all.push(d4_squared());
    for p in all {
        let text = p.to_string();
        let back: PcPresentation = text.parse().unwrap();
        assert_eq!(back.to_string(), text);
        let w: Word = "g2^3*g1*g2^-1".parse().unwrap();
        if p.len() >= 2 {
            assert_eq!(back.collect(&w).unwrap(), p.collect(&w).unwrap());
        }
    }
    for bad in [
        "n 0\n",
        "n 1\n",
        "n 1\norder 1 2\norder 1 2\n",
        "n 1\norder 2 2\n",
        "n 1\norder 1 2\npower 1 : g2\n",
        "n 1\norder 1 2\n\n",
        "order 1 2\n",
    ] {
        assert!(bad.parse::<PcPresentation>().is_err(), "{bad:?}");
    }
}

#[test]
fn matgroup_descriptors() {
    let m = MatGroup::anosov();
    assert_eq!(m.to_string(), "matgroup n=2\n2 1\n1 1\n");
    assert_eq!(m.to_string().parse::<MatGroup>().unwrap(), m);
    for bad in [
        "matgroup n=2\n2 2\n1 1\n",
        "matgroup n=2\n2 1\n",
        "matgroup n=2\n2 1\n1 1\n0 0\n",
        "matgroup n=2\n2  1\n1 1\n",
        "matgroup 2\n2 1\n1 1\n",
    ] {
        assert!(bad.parse::<MatGroup>().is_err(), "{bad:?}");
    }
}

#[test]
fn platform_files_reference_descriptors() {
    let dir = std::env::temp_dir().join(format!("ncs-platform-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    std::fs::write(dir.join("h.pres"), catalog("heisZ").unwrap().to_string()).unwrap();
    std::fs::write(dir.join("m.mat"), "matgroup n=2\n1 1\n0 1\n").unwrap();
    let pres = parse_platform("platform v1\ngroup presentation h.pres\nsecret g1\nrandom g3\nlength 4\n", Some(&dir)).unwrap();
    assert_eq!(pres.group.gen_count(), 3);
    assert_eq!(pres.word_length, 4);
    let mat = parse_platform("platform v1\ngroup matgroup m.mat\nsecret g3\nrandom g1\nretries 7\nlength 5\n", Some(&dir)).unwrap();
    assert_eq!(mat.retry_budget, 7);
    assert!(parse_platform("platform v1\ngroup matgroup missing.mat\nsecret g1\nrandom g1\nlength 1\n", Some(&dir)).is_err());
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn bench_digest_depends_only_on_inputs() {
    for (name, g) in platforms() {
        for op in [BenchOp::Mul, BenchOp::Conj, BenchOp::Collect] {
            let a = bench(&g, op, 50, 8, 3).unwrap();
            let b = bench(&g, op, 50, 8, 3).unwrap();
            assert_eq!(a.summary(), b.summary(), "{name} {op}");
            assert_eq!(a.digest.len(), 64);
            assert!(a.ops_per_second() > 0.0);
        }
    }
    let m = MatGroup::anosov();
    assert_ne!(bench(&m, BenchOp::Mul, 50, 8, 3).unwrap().digest, bench(&m, BenchOp::Mul, 50, 8, 4).unwrap().digest);
    assert!(bench(&m, BenchOp::Mul, 0, 8, 3).is_err());
    assert_eq!("conj".parse::<BenchOp>().unwrap(), BenchOp::Conj);
    assert!("div".parse::<BenchOp>().is_err());
}
