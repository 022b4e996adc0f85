use super::*;
use crate::gen::{monotone_path, rng_from, star_path};
use crate::geom::{hull_cycle, pt};
use crate::oracle;
use rand::Rng;

fn oracle_cycle(pts: &[Point]) -> Vec<Point> {
    hull_cycle(&oracle::hull::<I64Kernel>(pts))
}

/// Oracle comparison plus canonical-form check: the result must be
/// bit-identical to a from-scratch hull of the same ranks on its own tree.
fn check_query(idx: &SubpathHullIndex, arena: &mut Arena, i: usize, j: usize, ctx: &str) {
    let h = idx.subpath_hull(arena, i, j).expect("query in range");
    let seg = &idx.path[i..=j];
    let got = idx.enumerate(arena, &h).unwrap();
    assert_eq!(got, oracle_cycle(seg), "{ctx}: cycle of ({i}, {j})");
    let t = idx.tree_of(&h).unwrap();
    let ranks: Vec<u32> = seg.iter().map(|p| t.rank_of(p).unwrap()).collect();
    let fresh = t.build_from_ranks_in(arena, &ranks).unwrap();
    assert_eq!(
        t.snapshot(arena, &h).unwrap(),
        t.snapshot(arena, &fresh).unwrap(),
        "{ctx}: ({i}, {j}) not canonical"
    );
}

fn check_all_pairs(path: &[Point], ctx: &str) {
    let idx = SubpathHullIndex::build(path.to_vec()).unwrap();
    let mut arena = Arena::new();
    for i in 0..path.len() {
        for j in i..path.len() {
            check_query(&idx, &mut arena, i, j, ctx);
        }
        arena.reset();
    }
}

/// Monotone zigzag: x strictly increasing, y bouncing between two bands.
fn zigzag(n: usize) -> Vec<Point> {
    (0..n)
        .map(|i| pt(3 * i as i64, if i % 2 == 0 { (i % 5) as i64 } else { 40 - (i % 7) as i64 }))
        .collect()
}

#[test]
fn single_point_index() {
    let idx = SubpathHullIndex::build(vec![pt(5, 7)]).unwrap();
    assert_eq!(idx.n(), 1);
    let mut arena = Arena::new();
    let h = idx.subpath_hull(&mut arena, 0, 0).unwrap();
    assert!(h.is_singleton());
    assert_eq!(idx.enumerate(&mut arena, &h).unwrap(), vec![pt(5, 7)]);
    assert!(idx.subpath_hull(&mut arena, 0, 1).is_err());
}

#[test]
fn three_point_middle_hull() {
    let path = vec![pt(0, 0), pt(2, 3), pt(4, 1), pt(6, 4), pt(8, 0)];
    let idx = SubpathHullIndex::build(path).unwrap();
    let mut arena = Arena::new();
    let h = idx.subpath_hull(&mut arena, 1, 3).unwrap();
    assert_eq!(idx.enumerate(&mut arena, &h).unwrap(), vec![pt(2, 3), pt(4, 1), pt(6, 4)]);
}

#[test]
fn whole_path_equals_root_hull() {
    for (path, ctx) in [
        (zigzag(16), "zigzag 16"),
        (star_path(&mut rng_from(4), 200, 3000), "star 200"),
        (monotone_path(&mut rng_from(5), 7, 50), "monotone 7"),
    ] {
        let n = path.len();
        let idx = SubpathHullIndex::build(path.clone()).unwrap();
        let mut arena = Arena::new();
        let h = idx.subpath_hull(&mut arena, 0, n - 1).unwrap();
        assert_eq!(idx.enumerate(&mut arena, &h).unwrap(), oracle_cycle(&path), "{ctx}");
        let root = idx.psi_nodes().find(|&(a, b, _)| a == 0 && b == n as u32 - 1).unwrap().2;
        if h.tree_id() == root.tree_id() {
            let t = idx.tree();
            assert_eq!(
                t.snapshot(&mut arena, &h).unwrap(),
                t.snapshot(&mut arena, &root).unwrap(),
                "{ctx}: query differs from root hull"
            );
        }
    }
}

#[test]
fn psi_node_hulls_match_oracle() {
    for (path, ctx) in
        [(zigzag(16), "zigzag 16"), (star_path(&mut rng_from(11), 300, 5000), "star 300")]
    {
        let idx = SubpathHullIndex::build(path.clone()).unwrap();
        let mut arena = Arena::new();
        for (a, b, h) in idx.psi_nodes() {
            let got = idx.tree().enumerate_hull(&mut arena, &h).unwrap();
            assert_eq!(got, oracle_cycle(&path[a as usize..=b as usize]), "{ctx} span ({a}, {b})");
        }
    }
}

#[test]
fn exhaustive_small_paths() {
    check_all_pairs(&[pt(0, 0), pt(2, 3), pt(4, 1), pt(6, 4), pt(8, 0)], "five points");
    check_all_pairs(&zigzag(16), "zigzag 16");
    check_all_pairs(&zigzag(37), "zigzag 37");
    // straight collinear path: every hull degenerates to a segment
    let line: Vec<Point> = (0..20).map(|i| pt(2 * i, 3 * i)).collect();
    check_all_pairs(&line, "collinear 20");
    // collinear runs inside a bent path
    let bent: Vec<Point> =
        (0..10).map(|i| pt(i, 0)).chain((1..10).map(|i| pt(9, i))).collect();
    check_all_pairs(&bent, "bent 19");
    check_all_pairs(&star_path(&mut rng_from(2), 33, 60), "star 33");
    check_all_pairs(&monotone_path(&mut rng_from(3), 18, 40), "monotone 18");
    check_all_pairs(&star_path(&mut rng_from(9), 2, 10), "star 2");
    check_all_pairs(&star_path(&mut rng_from(10), 3, 10), "star 3");
}

#[test]
fn matches_oracle_random_paths() {
    let mut rng = rng_from(77);
    for n in [64usize, 256, 1024] {
        for seed in 0..4u64 {
            let path = if seed % 2 == 0 {
                star_path(&mut rng_from(100 + seed), n, 4 * n as i64)
            } else {
                monotone_path(&mut rng_from(100 + seed), n, 4 * n as i64)
            };
            let idx = SubpathHullIndex::build(path.clone()).unwrap();
            let mut arena = Arena::new();
            for q in 0..200 {
                // half the queries stay short to hit the nested index
                let span = if q % 2 == 0 { rng.gen_range(1..=n) } else { rng.gen_range(1..=8) };
                let i = rng.gen_range(0..=n - span);
                let j = i + span - 1;
                check_query(&idx, &mut arena, i, j, &format!("n {n} seed {seed}"));
                if q % 32 == 31 {
                    arena.reset();
                }
            }
        }
    }
}

#[test]
fn matches_oracle_large_star() {
    let n = 4096;
    let path = star_path(&mut rng_from(42), n, 20_000);
    let idx = SubpathHullIndex::build(path.clone()).unwrap();
    let mut arena = Arena::new();
    let mut rng = rng_from(43);
    for _ in 0..120 {
        let i = rng.gen_range(0..n);
        let j = rng.gen_range(i..n);
        let h = idx.subpath_hull(&mut arena, i, j).unwrap();
        let got = idx.enumerate(&mut arena, &h).unwrap();
        assert_eq!(got, oracle_cycle(&path[i..=j]), "({i}, {j})");
        arena.reset();
    }
}

#[test]
fn composition_matches_direct_query() {
    let n = 512;
    let path = star_path(&mut rng_from(8), n, 4000);
    let idx = SubpathHullIndex::build(path.clone()).unwrap();
    let mut arena = Arena::new();
    let mut rng = rng_from(88);
    for _ in 0..40 {
        let i = rng.gen_range(0..n - 1);
        let j = rng.gen_range(i + 1..n);
        let k = rng.gen_range(i..j);
        let whole = idx.subpath_hull(&mut arena, i, j).unwrap();
        let a = idx.subpath_hull(&mut arena, i, k).unwrap();
        let b = idx.subpath_hull(&mut arena, k + 1, j).unwrap();
        // point-set form, valid whichever trees the halves landed in
        let mut union = idx.enumerate(&mut arena, &a).unwrap();
        union.extend(idx.enumerate(&mut arena, &b).unwrap());
        assert_eq!(
            idx.enumerate(&mut arena, &whole).unwrap(),
            oracle_cycle(&union),
            "({i}, {k}, {j})"
        );
        // handle form whenever both halves live in the global tree
        if a.tree_id() == idx.tree().id() && b.tree_id() == idx.tree().id() {
            let m = idx.tree().merge_hulls_in(&mut arena, &a, &b).unwrap();
            assert_eq!(
                idx.tree().snapshot(&mut arena, &whole).unwrap(),
                idx.tree().snapshot(&mut arena, &m).unwrap(),
                "merge of ({i}, {k}) and ({}, {j})",
                k + 1
            );
        }
        arena.reset();
    }
}

#[test]
fn query_work_stays_logarithmic() {
    for nbits in [8u32, 10, 12, 14] {
        let n = 1usize << nbits;
        let path = star_path(&mut rng_from(nbits as u64), n, 8 * n as i64);
        let idx = SubpathHullIndex::build(path).unwrap();
        let mut arena = Arena::new();
        let mut rng = rng_from(900 + nbits as u64);
        let mut worst = 0u64;
        for q in 0..400 {
            let span = if q % 2 == 0 { rng.gen_range(1..=n) } else { rng.gen_range(1..=96) };
            let i = rng.gen_range(0..=n - span);
            let before = arena.counters.total();
            idx.subpath_hull(&mut arena, i, i + span - 1).unwrap();
            worst = worst.max(arena.counters.total() - before);
            if q % 64 == 63 {
                arena.reset();
            }
        }
        // measured worst/log2 n: 175, 188, 187, 172 — flat across sizes
        assert!(worst <= 200 * nbits as u64, "worst {worst} at nbits {nbits}");
    }
}

#[test]
fn space_stays_linear() {
    for nbits in [8u32, 10, 12, 14] {
        let n = 1usize << nbits;
        let path = star_path(&mut rng_from(50 + nbits as u64), n, 8 * n as i64);
        let idx = SubpathHullIndex::build(path).unwrap();
        let nodes = idx.epoch0_nodes();
        assert!(nodes <= 12 * n, "epoch-0 nodes {nodes} for n {n}");
        let (outer, inner) = idx.psi_counts();
        let l = ceil_log2(n).max(1) as usize;
        assert!(outer <= 4 * n / (l * l) + 1, "outer nodes {outer} for n {n}");
        assert!(inner <= 2 * n, "inner nodes {inner} for n {n}");
    }
}

#[test]
fn rejects_bad_input() {
    assert!(matches!(SubpathHullIndex::build(vec![]), Err(Error::InvalidInput(_))));
    assert!(matches!(
        SubpathHullIndex::build(vec![pt(0, 0), pt(1, 5), pt(0, 0)]),
        Err(Error::InvalidInput(_))
    ));
    // self-crossing bowtie
    assert!(matches!(
        SubpathHullIndex::build(vec![pt(0, 0), pt(4, 4), pt(4, 0), pt(0, 4)]),
        Err(Error::InvalidInput(_))
    ));
    let big = crate::geom::COORD_LIMIT + 1;
    assert!(matches!(
        SubpathHullIndex::build(vec![pt(0, 0), pt(big, 2)]),
        Err(Error::OutOfRange(_))
    ));

    let idx = SubpathHullIndex::build(zigzag(10)).unwrap();
    let mut arena = Arena::new();
    assert!(matches!(idx.subpath_hull(&mut arena, 3, 2), Err(Error::OutOfRange(_))));
    assert!(matches!(idx.subpath_hull(&mut arena, 0, 10), Err(Error::OutOfRange(_))));
    let other = SubpathHullIndex::build(zigzag(9)).unwrap();
    let h = other.subpath_hull(&mut arena, 0, 8).unwrap();
    assert!(matches!(idx.tree_of(&h), Err(Error::Mismatch(_))));
}

#[test]
fn results_support_hull_ops() {
    let n = 300;
    let path = star_path(&mut rng_from(6), n, 2000);
    let idx = SubpathHullIndex::build(path.clone()).unwrap();
    let mut arena = Arena::new();
    let mut rng = rng_from(66);
    for trial in 0..25 {
        // alternate wide (global tree) and narrow (nested tree) stretches
        let span = if trial % 2 == 0 { rng.gen_range(n / 2..=n) } else { rng.gen_range(1..=6) };
        let i = rng.gen_range(0..=n - span);
        let j = i + span - 1;
        let h = idx.subpath_hull(&mut arena, i, j).unwrap();
        let t = idx.tree_of(&h).unwrap();
        let cyc = t.enumerate_hull(&mut arena, &h).unwrap();
        let d = (rng.gen_range(-9i64..=9), rng.gen_range(-9i64..=9));
        if d != (0, 0) {
            assert_eq!(
                t.extreme_point(&mut arena, &h, &d).unwrap(),
                oracle::extreme::<I64Kernel>(&cyc, &d),
                "extreme ({i}, {j}) dir {d:?}"
            );
        }
        let q = pt(rng.gen_range(-3000..=3000), rng.gen_range(-3000..=3000));
        assert_eq!(
            t.tangents_from_point(&mut arena, &h, &q).unwrap(),
            oracle::tangents::<I64Kernel>(&cyc, &q),
            "tangents ({i}, {j}) from {q}"
        );
        arena.reset();
    }
}
