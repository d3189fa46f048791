//! Acceptance suite: one test per criterion, each printing a PASS/FAIL line.
//!
//! 1. chi formula == exhaustive search (full enumeration at n <= 5 plus a
//!    seeded sweep of >= 5000 structurally distinct instances at n <= 8)
//! 2. optimal_coloring always returns a valid optimal cover (1000 seeds,
//!    n <= 60)
//! 3. circulation feasibility == exhaustive enumeration on 10000 small
//!    instances, with strictly violating cuts on the infeasible ones
//! 4. find_kernel lands in the exhaustively enumerated kernel set, which is
//!    never empty (500 seeds, n <= 10)
//! 5. list coloring succeeds for every list assignment at desk scale
//!    (exhaustive palettes at n <= 6, C <= 3) and on 1000 seeded random
//!    instances (n <= 40)
//! 6. unit capacities reproduce edge coloring of bipartite multigraphs:
//!    chi == max degree, and max-degree-sized lists always suffice
//! 7. the matroid-pair <-> bipartite correspondence preserves independence
//!    both ways on all subsets (500 seeds, n <= 10)

use std::collections::HashSet;

use gpm_color::test_support::{brute_feasible_circulation, subsets};
use gpm_color::{
    brute_chi, brute_kernel, chi_of_pair, coloring_violations, is_feasible_circulation, list_color,
    optimal_coloring, random_instance, random_lists, solve_circulation, verify_list_coloring,
    violating_cut_check, Arc, BipartiteInstance, Bound, CirculationInstance, CirculationResult,
    GeneralizedPartitionMatroid, GeneratorParams, ListAssignment, MatroidPair, OrderedContext,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn conclude(criterion: &str, failures: usize, checked: usize) {
    let verdict = if failures == 0 { "PASS" } else { "FAIL" };
    println!("criterion {criterion}: {verdict} ({checked} checks, {failures} failures)");
    assert_eq!(failures, 0, "criterion {criterion} failed");
}

/// All partitions of 0..n into at most `max_blocks` nonempty labeled blocks.
fn labeled_partitions(n: usize, max_blocks: usize) -> Vec<Vec<Vec<usize>>> {
    fn go(
        n: usize,
        max_blocks: usize,
        v: usize,
        current: &mut Vec<Vec<usize>>,
        out: &mut Vec<Vec<Vec<usize>>>,
    ) {
        if v == n {
            out.push(current.clone());
            return;
        }
        for b in 0..current.len() {
            current[b].push(v);
            go(n, max_blocks, v + 1, current, out);
            current[b].pop();
        }
        if current.len() < max_blocks {
            current.push(vec![v]);
            go(n, max_blocks, v + 1, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    go(n, max_blocks, 0, &mut Vec::new(), &mut out);
    out
}

/// Every capacity vector over the given parts with entries `1..=max_cap`,
/// optionally capped by part size.
fn cap_choices(parts: &[Vec<usize>], max_cap: usize, cap_by_size: bool) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for part in parts {
        let top = if cap_by_size {
            max_cap.min(part.len())
        } else {
            max_cap
        };
        out = out
            .into_iter()
            .flat_map(|caps| {
                (1..=top).map(move |c| {
                    let mut caps = caps.clone();
                    caps.push(c);
                    caps
                })
            })
            .collect();
    }
    out
}

fn all_matroids(n: usize, max_parts: usize, max_cap: usize) -> Vec<GeneralizedPartitionMatroid> {
    let mut out = Vec::new();
    for parts in labeled_partitions(n, max_parts) {
        for caps in cap_choices(&parts, max_cap, false) {
            out.push(GeneralizedPartitionMatroid::new(n, parts.clone(), caps).unwrap());
        }
    }
    out
}

#[test]
fn criterion_1_formula_exactness() {
    let mut failures = 0;
    let mut checked = 0;

    // full enumeration at n <= 5
    for n in 1..=5 {
        let matroids = all_matroids(n, 3, 3);
        for m1 in &matroids {
            for m2 in &matroids {
                let pair = MatroidPair::new(m1.clone(), m2.clone()).unwrap();
                checked += 1;
                if chi_of_pair(&pair) != brute_chi(&pair).unwrap() {
                    failures += 1;
                }
            }
        }
    }

    // seeded sweep at n <= 8, counting structurally distinct instances
    let mut seen = HashSet::new();
    let mut seed = 0u64;
    while seen.len() < 5000 {
        assert!(
            seed < 50_000,
            "generator failed to reach 5000 distinct instances"
        );
        let n = 6 + (seed as usize) % 3;
        let pair = random_instance(&GeneratorParams {
            n_elements: n,
            max_parts_per_side: 3,
            max_cap: 3,
            seed,
        });
        seed += 1;
        let signature = format!(
            "{:?}|{:?}|{:?}|{:?}",
            pair.m1().parts(),
            pair.m1().caps(),
            pair.m2().parts(),
            pair.m2().caps()
        );
        if !seen.insert(signature) {
            continue;
        }
        checked += 1;
        if chi_of_pair(&pair) != brute_chi(&pair).unwrap() {
            failures += 1;
        }
    }

    conclude("1 (formula exactness)", failures, checked);
}

#[test]
fn criterion_2_constructive_optimality() {
    let mut failures = 0;
    let mut checked = 0;
    for seed in 0..1000u64 {
        let n = 1 + (seed as usize * 13) % 60;
        let pair = random_instance(&GeneratorParams {
            n_elements: n,
            max_parts_per_side: 1 + (seed as usize) % 8,
            max_cap: 1 + (seed as usize) % 4,
            seed,
        });
        let coloring = optimal_coloring(&pair);
        checked += 1;
        if !coloring_violations(&pair, &coloring).is_empty() {
            failures += 1;
            eprintln!("seed {seed}: invalid or suboptimal coloring");
        }
    }
    conclude("2 (constructive optimality)", failures, checked);
}

#[test]
fn criterion_3_hoffman_engine() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xC1AC);
    let mut failures = 0;
    let mut checked = 0;
    for _ in 0..10_000 {
        let n = rng.random_range(1..=5);
        let m = rng.random_range(0..=8);
        let arcs: Vec<Arc> = (0..m)
            .map(|_| {
                let lower = rng.random_range(0..=2);
                let upper = rng.random_range(lower..=2);
                Arc::bounded(rng.random_range(0..n), rng.random_range(0..n), lower, upper)
            })
            .collect();
        let inst = CirculationInstance::new(n, arcs).unwrap();
        let expected = brute_feasible_circulation(&inst);
        checked += 1;
        match solve_circulation(&inst).unwrap() {
            CirculationResult::Flow(flow) => {
                if !expected || !is_feasible_circulation(&inst, &flow) {
                    failures += 1;
                    eprintln!("bogus flow on {inst:?}");
                }
            }
            CirculationResult::Cut(cut) => {
                let strict = match violating_cut_check(&inst, &cut).unwrap() {
                    (lower_in, Bound::Finite(upper_out)) => lower_in > upper_out,
                    (_, Bound::Unbounded) => false,
                };
                if expected || !strict {
                    failures += 1;
                    eprintln!("bogus cut on {inst:?}");
                }
            }
        }
    }
    conclude("3 (circulation engine)", failures, checked);
}

#[test]
fn criterion_4_kernel_correctness() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x4E44);
    let mut failures = 0;
    let mut checked = 0;
    for seed in 0..500u64 {
        let n = 1 + (seed as usize) % 10;
        let pair = random_instance(&GeneratorParams {
            n_elements: n,
            max_parts_per_side: 4,
            max_cap: 3,
            seed,
        });
        let coloring = optimal_coloring(&pair);
        let ctx = OrderedContext::from_coloring(&pair, &coloring).unwrap();
        let full: Vec<usize> = (0..n).collect();
        let sub: Vec<usize> = (0..n).filter(|_| rng.random_range(0..3) > 0).collect();
        for ground in [full, sub] {
            checked += 1;
            let all = brute_kernel(&ctx, &ground).unwrap();
            if all.is_empty() {
                failures += 1;
                eprintln!("seed {seed}: no kernel exists on ground {ground:?}");
                continue;
            }
            let found = ctx.find_kernel(&ground).unwrap();
            if !all.contains(&found.kernel) {
                failures += 1;
                eprintln!(
                    "seed {seed}: solver kernel not among the {} brute kernels",
                    all.len()
                );
            }
        }
    }
    conclude("4 (kernel correctness)", failures, checked);
}

/// First-matroid shapes up to relabeling: consecutive blocks of
/// non-increasing sizes. The second matroid stays fully labeled, so every
/// pair structure at this size appears with at least one concrete labeling.
fn canonical_first_matroids(n: usize, max_cap: usize) -> Vec<GeneralizedPartitionMatroid> {
    let mut shapes = Vec::new();
    for a in 1..=n {
        for b in 0..=a {
            for c in 0..=b {
                if a + b + c == n {
                    let mut sizes = vec![a];
                    if b > 0 {
                        sizes.push(b);
                    }
                    if c > 0 {
                        sizes.push(c);
                    }
                    shapes.push(sizes);
                }
            }
        }
    }
    let mut out = Vec::new();
    for sizes in shapes {
        let mut parts = Vec::new();
        let mut next = 0;
        for &size in &sizes {
            parts.push((next..next + size).collect::<Vec<usize>>());
            next += size;
        }
        for caps in cap_choices(&parts, max_cap, true) {
            out.push(GeneralizedPartitionMatroid::new(n, parts.clone(), caps).unwrap());
        }
    }
    out
}

/// Runs every size-`c` list assignment from a `(c+1)`-token palette on one
/// instance (each element omits one palette token). Returns (checks, fails).
fn exhaust_lists_on(pair: &MatroidPair, c: usize) -> (usize, usize) {
    let n = pair.n_elements();
    let palette: Vec<String> = (0..=c).map(|t| format!("c{t}")).collect();
    let mut checked = 0;
    let mut failures = 0;
    let mut omit = vec![0usize; n];
    loop {
        let lists: Vec<Vec<String>> = omit
            .iter()
            .map(|&skip| {
                palette
                    .iter()
                    .enumerate()
                    .filter(|(t, _)| *t != skip)
                    .map(|(_, token)| token.clone())
                    .collect()
            })
            .collect();
        let la = ListAssignment::new(lists).unwrap();
        checked += 1;
        match list_color(pair, &la) {
            Ok(out) => {
                if !verify_list_coloring(pair, &la, &out).is_empty() {
                    failures += 1;
                }
            }
            Err(err) => {
                failures += 1;
                eprintln!("n={n} lists via {omit:?}: {err}");
            }
        }
        // advance the mixed-radix omission counter
        let mut pos = 0;
        while pos < n {
            omit[pos] += 1;
            if omit[pos] <= c {
                break;
            }
            omit[pos] = 0;
            pos += 1;
        }
        if pos == n {
            break;
        }
    }
    (checked, failures)
}

#[test]
fn criterion_5a_list_coloring_exhaustive() {
    use rayon::prelude::*;

    let mut pairs = Vec::new();
    for n in 1..=6usize {
        let firsts = canonical_first_matroids(n, 3);
        let seconds: Vec<GeneralizedPartitionMatroid> = labeled_partitions(n, 3)
            .into_iter()
            .flat_map(|parts| {
                cap_choices(&parts, 3, true).into_iter().map(move |caps| {
                    GeneralizedPartitionMatroid::new(n, parts.clone(), caps).unwrap()
                })
            })
            .collect();
        for m1 in &firsts {
            for m2 in &seconds {
                let pair = MatroidPair::new(m1.clone(), m2.clone()).unwrap();
                let c = chi_of_pair(&pair);
                if c <= 3 {
                    pairs.push((pair, c));
                }
            }
        }
    }

    let (checked, failures) = pairs
        .par_iter()
        .map(|(pair, c)| exhaust_lists_on(pair, *c))
        .reduce(|| (0, 0), |a, b| (a.0 + b.0, a.1 + b.1));

    println!("criterion 5a: exercised {} instances", pairs.len());
    conclude("5a (list coloring, exhaustive lists)", failures, checked);
}

#[test]
fn criterion_5b_list_coloring_randomized() {
    let mut failures = 0;
    let mut checked = 0;
    for seed in 0..1000u64 {
        let n = 1 + (seed as usize * 17) % 40;
        let pair = random_instance(&GeneratorParams {
            n_elements: n,
            max_parts_per_side: 1 + (seed as usize) % 6,
            max_cap: 1 + (seed as usize) % 4,
            seed,
        });
        let c = chi_of_pair(&pair);
        let palette = (c * (1 + (seed as usize) % 4)).max(c);
        let la = random_lists(n, c, palette, seed);
        checked += 1;
        match list_color(&pair, &la) {
            Ok(out) => {
                if !verify_list_coloring(&pair, &la, &out).is_empty() {
                    failures += 1;
                    eprintln!("seed {seed}: invalid assignment");
                }
            }
            Err(err) => {
                failures += 1;
                eprintln!("seed {seed}: {err}");
            }
        }
    }
    conclude("5b (list coloring, random lists)", failures, checked);
}

/// Random bipartite multigraph with unit capacities and no isolated
/// vertices, plus its maximum degree.
fn random_unit_bipartite(rng: &mut ChaCha8Rng) -> (BipartiteInstance, usize) {
    let n_left = rng.random_range(1..=5);
    let n_right = rng.random_range(1..=5);
    let m = rng.random_range(1..=20);
    let edges: Vec<(usize, usize)> = (0..m)
        .map(|_| (rng.random_range(0..n_left), rng.random_range(0..n_right)))
        .collect();
    // compact away isolated vertices
    let mut left_ids = vec![usize::MAX; n_left];
    let mut right_ids = vec![usize::MAX; n_right];
    let mut next_left = 0;
    let mut next_right = 0;
    let mut compacted = Vec::with_capacity(m);
    for (l, r) in edges {
        if left_ids[l] == usize::MAX {
            left_ids[l] = next_left;
            next_left += 1;
        }
        if right_ids[r] == usize::MAX {
            right_ids[r] = next_right;
            next_right += 1;
        }
        compacted.push((left_ids[l], right_ids[r]));
    }
    let graph = BipartiteInstance::new(vec![1; next_left], vec![1; next_right], compacted).unwrap();
    let mut degree = vec![0usize; next_left + next_right];
    for &(l, r) in graph.edges() {
        degree[l] += 1;
        degree[next_left + r] += 1;
    }
    let max_degree = degree.into_iter().max().unwrap();
    (graph, max_degree)
}

#[test]
fn criterion_6_unit_capacity_edge_coloring() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x6A16);
    let mut failures = 0;
    let mut checked = 0;
    for round in 0..300 {
        let (graph, max_degree) = random_unit_bipartite(&mut rng);
        let (pair, _) = graph.to_matroid_pair().unwrap();
        checked += 1;
        let mut bad = false;

        if chi_of_pair(&pair) != max_degree {
            eprintln!(
                "round {round}: chi {} != max degree {max_degree}",
                chi_of_pair(&pair)
            );
            bad = true;
        }
        if graph.n_edges() <= 12 && brute_chi(&pair).unwrap() != max_degree {
            eprintln!("round {round}: brute chi disagrees with max degree");
            bad = true;
        }
        let coloring = optimal_coloring(&pair);
        if !coloring_violations(&pair, &coloring).is_empty() {
            eprintln!("round {round}: invalid edge coloring");
            bad = true;
        }
        // every class must be a matching under unit capacities
        for class in coloring.classes() {
            if !graph.is_simple_b_matching(class).unwrap() {
                eprintln!("round {round}: class is not a matching");
                bad = true;
            }
        }
        let la = random_lists(graph.n_edges(), max_degree, 2 * max_degree, round as u64);
        match list_color(&pair, &la) {
            Ok(out) => {
                if !verify_list_coloring(&pair, &la, &out).is_empty() {
                    eprintln!("round {round}: invalid list edge coloring");
                    bad = true;
                }
            }
            Err(err) => {
                eprintln!("round {round}: list edge coloring failed: {err}");
                bad = true;
            }
        }
        if bad {
            failures += 1;
        }
    }
    conclude("6 (unit-capacity specialization)", failures, checked);
}

#[test]
fn criterion_7_correspondence_round_trip() {
    let mut failures = 0;
    let mut checked = 0;
    for seed in 0..500u64 {
        let n = 1 + (seed as usize) % 10;
        let pair = random_instance(&GeneratorParams {
            n_elements: n,
            max_parts_per_side: 4,
            max_cap: 3,
            seed: seed.wrapping_mul(31),
        });
        let (graph, edge_to_element) = pair.to_bipartite();
        let (pair_back, element_to_edge) = graph.to_matroid_pair().unwrap();
        let universe: Vec<usize> = (0..n).collect();
        let mut bad = false;
        for s in subsets(&universe) {
            let edge_set: Vec<usize> = (0..graph.n_edges())
                .filter(|&e| s.contains(&edge_to_element[e]))
                .collect();
            let original = pair.is_common_independent(&s).unwrap();
            if original != graph.is_simple_b_matching(&edge_set).unwrap() {
                bad = true;
                break;
            }
            // ground elements of the reconstructed pair are edge indices
            let mapped: Vec<usize> = s.iter().map(|&v| element_to_edge[v]).collect();
            if original != pair_back.is_common_independent(&mapped).unwrap() {
                bad = true;
                break;
            }
        }
        // graph -> pair -> graph keeps the multigraph shape
        let (graph_back, _) = pair_back.to_bipartite();
        if graph.canonical_edge_list() != graph_back.canonical_edge_list() {
            bad = true;
        }
        checked += 1;
        if bad {
            failures += 1;
            eprintln!("seed {seed}: correspondence broken");
        }
    }
    conclude("7 (correspondence round trip)", failures, checked);
}
