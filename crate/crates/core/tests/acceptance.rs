//! Acceptance run: one PASS/FAIL line per criterion.

use std::process::ExitCode;
use std::time::Instant;

use ats_core::gen::{
    assign_weights, grid_graph, heavy_weight, near_tree_planar, random_tree, random_triangulation,
    GenSpec, WeightMode,
};
use ats_core::graph::{components_without, default_beta, verify_separator, Graph, VertexId};
use ats_core::oracle::{min_balanced_separator, nearest_in_set_oracle, steiner_subtree_oracle};
use ats_core::pipeline::{
    branch_vertices, collapse_weights, compute_spanning_tree, decompose_paths, extra_edges,
    separate_default, steiner_subtree, RepairStep,
};
use ats_core::planar::lt_separator;
use ats_core::tree::tree_centroid;
use num_rational::Ratio;
use proptest::prelude::*;
use proptest::test_runner::{Config, TestCaseError, TestRunner};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

struct Report {
    failures: usize,
}

impl Report {
    fn line(&mut self, id: &str, pass: bool, detail: String) {
        if !pass {
            self.failures += 1;
        }
        println!("[{}] {id}: {detail}", if pass { "PASS" } else { "FAIL" });
    }
}

fn size_bound(r: i64) -> f64 {
    4.0 * ((r + 1) as f64).sqrt() + 2.0
}

fn size_bound_criterion(rep: &mut Report) {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut summary = Vec::new();
    for r in [1i64, 4, 16, 64, 256, 1024] {
        let mut worst = 0;
        for seed in 0..20 {
            let g = near_tree_planar(&GenSpec::unit(100_000, r, seed)).expect("feasible");
            let s = separate_default(&g).expect("connected planar input");
            let v = verify_separator(&g, &s.vertices, default_beta());
            worst = worst.max(s.vertices.len());
            if !v.passed || s.vertices.len() as f64 > size_bound(r) {
                failures.push(format!("r={r} seed={seed} |S|={}", s.vertices.len()));
            }
        }
        summary.push(format!("r={r}:{worst}/{:.1}", size_bound(r)));
    }
    rep.line(
        "1 size bound",
        failures.is_empty(),
        format!(
            "120 runs n=1e5, worst |S|/bound {}; failures {:?}; {:.1}s",
            summary.join(" "),
            failures,
            start.elapsed().as_secs_f64()
        ),
    );
}

fn oracle_criterion(rep: &mut Report) {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut failures = Vec::new();
    let (mut feasible, mut optimal) = (0, 0);
    for i in 0..200u64 {
        let n = rng.gen_range(4..=12usize);
        let max_r = (2 * n as i64 - 6).min(4);
        let r = rng.gen_range(0..=max_r);
        let mode = match i % 4 {
            0 => WeightMode::Unit,
            1 => WeightMode::UniformRandom { lo: 1, hi: 20 },
            2 => WeightMode::SingleHeavy(Ratio::new(7, 10)),
            _ => WeightMode::SingleHeavy(Ratio::new(11, 20)),
        };
        let spec = GenSpec {
            n,
            r,
            seed: i,
            weight_mode: mode,
        };
        let g = near_tree_planar(&spec).expect("within the planar edge bound");
        let o = min_balanced_separator(&g, default_beta(), n).expect("small graph");
        if !o.feasible {
            continue;
        }
        feasible += 1;
        let s = separate_default(&g).expect("connected planar input");
        if !verify_separator(&g, &s.vertices, default_beta()).passed {
            failures.push(format!("n={n} r={r} seed={i}"));
        }
        if Some(s.vertices.len()) == o.min_size {
            optimal += 1;
        }
    }
    rep.line(
        "2 oracle validity",
        failures.is_empty() && feasible == 200,
        format!(
            "{feasible}/200 certified feasible, failures {failures:?}, pipeline size equals oracle minimum on {optimal}; {:.1}s",
            start.elapsed().as_secs_f64()
        ),
    );
}

fn median(mut xs: Vec<f64>) -> f64 {
    xs.sort_by(f64::total_cmp);
    xs[xs.len() / 2]
}

/// Best of three runs, so a single scheduler hiccup does not decide it.
fn time_separate(g: &Graph) -> f64 {
    (0..3)
        .map(|_| {
            let t = Instant::now();
            let s = separate_default(g).expect("connected planar input");
            std::hint::black_box(s);
            t.elapsed().as_secs_f64()
        })
        .fold(f64::INFINITY, f64::min)
}

fn shuffled(g: &Graph, seed: u64) -> Graph {
    let mut perm: Vec<VertexId> = (0..g.n()).collect();
    perm.shuffle(&mut ChaCha8Rng::seed_from_u64(seed));
    let edges: Vec<_> = g.edges().map(|(u, v)| (perm[u], perm[v])).collect();
    let mut w = vec![0; g.n()];
    for v in 0..g.n() {
        w[perm[v]] = g.weight(v);
    }
    Graph::from_edges(g.n(), &edges, w).expect("relabeling keeps the graph simple")
}

fn linear_time_criterion(rep: &mut Report) {
    let start = Instant::now();
    let sizes = [10_000usize, 100_000, 1_000_000];
    let mut medians = Vec::new();
    let mut shuffled_medians = Vec::new();
    for &n in &sizes {
        let mut times = Vec::new();
        let mut shuffled_times = Vec::new();
        for seed in 0..5 {
            let g = near_tree_planar(&GenSpec::unit(n, 16, seed)).expect("feasible");
            times.push(time_separate(&g));
            shuffled_times.push(time_separate(&shuffled(&g, seed)));
        }
        medians.push(median(times));
        shuffled_medians.push(median(shuffled_times));
    }
    let ratios: Vec<f64> = medians.windows(2).map(|w| w[1] / w[0]).collect();
    let shuffled_ratios: Vec<f64> = shuffled_medians.windows(2).map(|w| w[1] / w[0]).collect();
    rep.line(
        "3 linear time",
        ratios.iter().all(|&x| x <= 13.0),
        format!(
            "median ms {:.2?}, growth per 10x {:.2?} (limit 13); {:.1}s",
            medians.iter().map(|t| t * 1e3).collect::<Vec<_>>(),
            ratios,
            start.elapsed().as_secs_f64()
        ),
    );
    println!(
        "[INFO] 3 linear time, randomly relabeled inputs: median ms {:.2?}, growth per 10x {:.2?}",
        shuffled_medians.iter().map(|t| t * 1e3).collect::<Vec<_>>(),
        shuffled_ratios
    );
}

fn star_with_chord() -> Vec<(VertexId, VertexId)> {
    let mut e: Vec<_> = (1..100).map(|i| (0, i)).collect();
    e.push((1, 2));
    e
}

fn degenerate_criterion(rep: &mut Report) {
    // Heavy leaf away from the chord: the lifted separator is the hub, which
    // leaves the heavy leaf alone in a component above 2/3.
    let f = Ratio::new(7u64, 10);
    let mut w = vec![1u64; 100];
    w[50] = heavy_weight(f, 99);
    let g = Graph::from_edges(100, &star_with_chord(), w).expect("valid star");
    let s = separate_default(&g).expect("connected planar input");
    let v = verify_separator(&g, &s.vertices, default_beta());
    let centroids = s
        .stats
        .repair_log
        .iter()
        .filter(|st| matches!(st, RepairStep::Centroid(_)))
        .count();
    let crafted_ok = s.stats.repairs >= 1 && centroids >= 1 && v.passed && s.vertices.len() <= 4;

    // Same graph through the generator's weight mode, every seed in 0..100.
    let base = Graph::unit(100, &star_with_chord()).expect("valid star");
    let mut bad_seeds = Vec::new();
    for seed in 0..100 {
        let g = assign_weights(&base, WeightMode::SingleHeavy(f), seed);
        let s = separate_default(&g).expect("connected planar input");
        let v = verify_separator(&g, &s.vertices, default_beta());
        if !v.passed || s.vertices.len() > 4 {
            bad_seeds.push(seed);
        }
    }
    rep.line(
        "4 degenerate branch",
        crafted_ok && bad_seeds.is_empty(),
        format!(
            "heavy weight {} on leaf 51: |S|={} repairs={} (centroid {}) max_frac={:.4}; seeded heavy vertex, 100 seeds, failing {:?}",
            heavy_weight(f, 99),
            s.vertices.len(),
            s.stats.repairs,
            centroids,
            v.max_fraction(),
            bad_seeds
        ),
    );
}

fn lt_criterion(rep: &mut Report) {
    let start = Instant::now();
    let mut failures = Vec::new();
    let mut grid_sizes = Vec::new();
    for a in [5usize, 10, 20, 30] {
        let g = grid_graph(a, a);
        let s = lt_separator(&g).expect("grid is planar");
        let ok = verify_separator(&g, &s.vertices, default_beta()).passed
            && s.vertices.len() as f64 <= 4.0 * (g.n() as f64).sqrt();
        grid_sizes.push(format!("{a}x{a}:{}", s.vertices.len()));
        if !ok {
            failures.push(format!("grid {a}"));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let mut worst_ratio: f64 = 0.0;
    for seed in 0..100 {
        let n = rng.gen_range(4..=200usize);
        let g = random_triangulation(n, seed);
        let s = lt_separator(&g).expect("triangulation is planar");
        let bound = 4.0 * (n as f64).sqrt();
        worst_ratio = worst_ratio.max(s.vertices.len() as f64 / bound);
        if !verify_separator(&g, &s.vertices, default_beta()).passed
            || s.vertices.len() as f64 > bound
        {
            failures.push(format!("triangulation n={n} seed={seed}"));
        }
    }
    rep.line(
        "5 LT standalone",
        failures.is_empty(),
        format!(
            "grids {}; 100 triangulations worst |S|/(4 sqrt n) {:.3}; failures {:?}; {:.1}s",
            grid_sizes.join(" "),
            worst_ratio,
            failures,
            start.elapsed().as_secs_f64()
        ),
    );
}

fn near_tree() -> impl Strategy<Value = Graph> {
    (2usize..80, 0i64..10, any::<u64>(), 0u8..3).prop_filter_map(
        "excess must fit a planar graph",
        |(n, r, seed, mode)| {
            let weight_mode = match mode {
                0 => WeightMode::Unit,
                1 => WeightMode::UniformRandom { lo: 0, hi: 9 },
                _ => WeightMode::SingleHeavy(Ratio::new(3, 4)),
            };
            near_tree_planar(&GenSpec {
                n,
                r,
                seed,
                weight_mode,
            })
            .ok()
        },
    )
}

fn check(
    name: &str,
    outcome: Result<(), proptest::test_runner::TestError<impl std::fmt::Debug>>,
) -> Result<(), String> {
    outcome.map_err(|e| format!("{name}: {e}"))
}

fn invariants_criterion(rep: &mut Report) {
    let start = Instant::now();
    let cases = 1000;
    let runner = || {
        TestRunner::new(Config {
            cases,
            failure_persistence: None,
            ..Config::default()
        })
    };
    let mut results: Vec<Result<(), String>> = Vec::new();

    results.push(check(
        "|R| = m - n + 1",
        runner().run(&near_tree(), |g| {
            let t = compute_spanning_tree(&g, 0).map_err(|e| TestCaseError::fail(e.to_string()))?;
            prop_assert_eq!(extra_edges(&g, &t).len() as i64, g.excess() + 1);
            Ok(())
        }),
    ));

    results.push(check(
        "|U| <= 4(r+1)",
        runner().run(&near_tree(), |g| {
            let t = compute_spanning_tree(&g, 0).unwrap();
            let r = extra_edges(&g, &t);
            let terminals = r.endpoints();
            let t1 = steiner_subtree(&t, &terminals).unwrap();
            let u = branch_vertices(&t1, &terminals);
            prop_assert!(u.len() as i64 <= 4 * (g.excess() + 1));
            Ok(())
        }),
    ));

    results.push(check(
        "sum of w' = W",
        runner().run(&near_tree(), |g| {
            let t = compute_spanning_tree(&g, 0).unwrap();
            let terminals = extra_edges(&g, &t).endpoints();
            let t1 = steiner_subtree(&t, &terminals).unwrap();
            let cw = collapse_weights(&g, &t, &t1);
            prop_assert_eq!(cw.wprime.iter().sum::<u64>(), g.total_weight());
            Ok(())
        }),
    ));

    results.push(check(
        "paths cover E(T1) edge-disjointly",
        runner().run(&near_tree(), |g| {
            let t = compute_spanning_tree(&g, 0).unwrap();
            let terminals = extra_edges(&g, &t).endpoints();
            let t1 = steiner_subtree(&t, &terminals).unwrap();
            let u = branch_vertices(&t1, &terminals);
            let pi = decompose_paths(&t1, &u);
            let mut covered: Vec<(VertexId, VertexId)> = pi
                .paths
                .iter()
                .flat_map(|p| p.windows(2).map(|w| (w[0].min(w[1]), w[0].max(w[1]))))
                .collect();
            covered.sort_unstable();
            prop_assert_eq!(covered, t1.edges.clone());
            Ok(())
        }),
    ));

    let weighted_tree = (
        1usize..120,
        any::<u64>(),
        proptest::collection::vec(0u64..50, 120),
    )
        .prop_map(|(n, seed, w)| random_tree(n, seed).with_weights(w[..n].to_vec()).unwrap());
    results.push(check(
        "centroid pieces <= W/2",
        runner().run(&weighted_tree, |g| {
            let all: Vec<VertexId> = (0..g.n()).collect();
            let c = tree_centroid(&g, &all).unwrap();
            let mut mask = vec![false; g.n()];
            mask[c] = true;
            let comps = components_without(&g, &mask);
            for &w in &comps.weight {
                prop_assert!(2 * w <= g.total_weight());
            }
            Ok(())
        }),
    ));

    let tree_and_terminals = (
        1usize..60,
        any::<u64>(),
        proptest::collection::vec(any::<prop::sample::Index>(), 1..8),
    );
    results.push(check(
        "steiner_subtree matches oracle",
        runner().run(&tree_and_terminals, |(n, seed, picks)| {
            let g = random_tree(n, seed);
            let t = compute_spanning_tree(&g, 0).unwrap();
            let terminals: Vec<VertexId> = picks.iter().map(|i| i.index(n)).collect();
            let t1 = steiner_subtree(&t, &terminals).unwrap();
            prop_assert_eq!(t1.members(), steiner_subtree_oracle(&t, &terminals));
            Ok(())
        }),
    ));

    results.push(check(
        "attach matches nearest_in_set oracle",
        runner().run(&near_tree(), |g| {
            let t = compute_spanning_tree(&g, 0).unwrap();
            let terminals = extra_edges(&g, &t).endpoints();
            let t1 = steiner_subtree(&t, &terminals).unwrap();
            let cw = collapse_weights(&g, &t, &t1);
            prop_assert_eq!(cw.attach, nearest_in_set_oracle(&t, &t1.members()));
            Ok(())
        }),
    ));

    let errors: Vec<String> = results.into_iter().filter_map(Result::err).collect();
    rep.line(
        "6 structural invariants",
        errors.is_empty(),
        format!(
            "7 properties x {cases} cases; failures {errors:?}; {:.1}s",
            start.elapsed().as_secs_f64()
        ),
    );
}

fn main() -> ExitCode {
    let mut rep = Report { failures: 0 };
    size_bound_criterion(&mut rep);
    oracle_criterion(&mut rep);
    linear_time_criterion(&mut rep);
    degenerate_criterion(&mut rep);
    lt_criterion(&mut rep);
    invariants_criterion(&mut rep);
    if rep.failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
