//! Brute-force ground truth and seeded instance generation. The exhaustive
//! searches are exact and guarded by hard size limits; they exist to check
//! the fast paths, never to replace them.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::chromatic::expansion_number;
use crate::error::{Error, Result};
use crate::kernel::OrderedContext;
use crate::listcolor::{verify_list_coloring, ListAssignment, ListColoringOutput};
use crate::matroid::{GeneralizedPartitionMatroid, MatroidPair};

const BRUTE_CHI_MAX: usize = 12;
const BRUTE_KERNEL_MAX: usize = 12;
const BRUTE_LIST_MAX_COMBINATIONS: u64 = 10_000_000;

/// Exact minimum number of common independent sets partitioning the ground
/// set, by exhaustive search. The search opens class k+1 only after class k
/// is nonempty and starts from the per-matroid pigeonhole lower bound
/// (a class takes at most cap-many elements from a part, so covering a part
/// needs at least size/cap classes).
pub fn brute_chi(p: &MatroidPair) -> Result<usize> {
    let n = p.n_elements();
    if n > BRUTE_CHI_MAX {
        return Err(Error::InstanceTooLarge {
            reason: format!("brute_chi accepts up to {BRUTE_CHI_MAX} elements, got {n}"),
        });
    }
    if n == 0 {
        return Ok(0);
    }
    let lower = expansion_number(p.m1())
        .ceil()
        .max(expansion_number(p.m2()).ceil()) as usize;
    for k in lower.max(1)..=n {
        if can_color_with(p, k) {
            return Ok(k);
        }
    }
    unreachable!("singleton classes always fit, so n classes suffice")
}

fn can_color_with(p: &MatroidPair, k: usize) -> bool {
    struct Search<'a> {
        p: &'a MatroidPair,
        k: usize,
        count1: Vec<Vec<usize>>,
        count2: Vec<Vec<usize>>,
    }
    impl Search<'_> {
        fn go(&mut self, v: usize, used: usize) -> bool {
            if v == self.p.n_elements() {
                return true;
            }
            let i = self.p.m1().part_of(v).expect("in range");
            let j = self.p.m2().part_of(v).expect("in range");
            // symmetry pruning: at most one fresh class is worth trying
            let limit = (used + 1).min(self.k);
            for class in 0..limit {
                if self.count1[class][i] < self.p.m1().cap(i)
                    && self.count2[class][j] < self.p.m2().cap(j)
                {
                    self.count1[class][i] += 1;
                    self.count2[class][j] += 1;
                    if self.go(v + 1, used.max(class + 1)) {
                        return true;
                    }
                    self.count1[class][i] -= 1;
                    self.count2[class][j] -= 1;
                }
            }
            false
        }
    }
    Search {
        p,
        k,
        count1: vec![vec![0; p.m1().n_parts()]; k],
        count2: vec![vec![0; p.m2().n_parts()]; k],
    }
    .go(0, 0)
}

/// Every kernel of the restriction to `ground`, by checking all subsets.
pub fn brute_kernel(ctx: &OrderedContext, ground: &[usize]) -> Result<Vec<Vec<usize>>> {
    let mut ground: Vec<usize> = ground.to_vec();
    ground.sort_unstable();
    ground.dedup();
    if ground.len() > BRUTE_KERNEL_MAX {
        return Err(Error::InstanceTooLarge {
            reason: format!(
                "brute_kernel accepts up to {BRUTE_KERNEL_MAX} ground elements, got {}",
                ground.len()
            ),
        });
    }
    let mut kernels = Vec::new();
    for mask in 0u32..(1 << ground.len()) {
        let candidate: Vec<usize> = ground
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &v)| v)
            .collect();
        if ctx.is_kernel(&candidate, &ground)? {
            kernels.push(candidate);
        }
    }
    Ok(kernels)
}

/// Some valid list coloring if one exists, by depth-first search over token
/// choices in element order (tokens tried in sorted order, so the result is
/// canonical). `None` means no valid assignment exists.
pub fn brute_list_color(
    p: &MatroidPair,
    la: &ListAssignment,
) -> Result<Option<ListColoringOutput>> {
    let n = p.n_elements();
    if la.len() != n {
        return Err(Error::ListCountMismatch {
            lists: la.len(),
            elements: n,
        });
    }
    let mut combinations: u64 = 1;
    for list in la.lists() {
        combinations = combinations.saturating_mul(list.len().max(1) as u64);
        if combinations > BRUTE_LIST_MAX_COMBINATIONS {
            return Err(Error::InstanceTooLarge {
                reason: format!(
                    "brute_list_color explores at most {BRUTE_LIST_MAX_COMBINATIONS} assignments"
                ),
            });
        }
    }
    let sorted_lists: Vec<Vec<String>> = la
        .lists()
        .iter()
        .map(|list| {
            let mut list = list.clone();
            list.sort();
            list
        })
        .collect();

    fn go(
        p: &MatroidPair,
        lists: &[Vec<String>],
        v: usize,
        chosen: &mut Vec<String>,
        // per-token per-part usage, both sides
        usage: &mut std::collections::HashMap<String, (Vec<usize>, Vec<usize>)>,
    ) -> bool {
        if v == lists.len() {
            return true;
        }
        let i = p.m1().part_of(v).expect("in range");
        let j = p.m2().part_of(v).expect("in range");
        for token in &lists[v] {
            let entry = usage
                .entry(token.clone())
                .or_insert_with(|| (vec![0; p.m1().n_parts()], vec![0; p.m2().n_parts()]));
            if entry.0[i] < p.m1().cap(i) && entry.1[j] < p.m2().cap(j) {
                entry.0[i] += 1;
                entry.1[j] += 1;
                chosen.push(token.clone());
                if go(p, lists, v + 1, chosen, usage) {
                    return true;
                }
                chosen.pop();
                let entry = usage.get_mut(token).expect("just inserted");
                entry.0[i] -= 1;
                entry.1[j] -= 1;
            }
        }
        false
    }

    let mut chosen = Vec::with_capacity(n);
    let mut usage = std::collections::HashMap::new();
    if go(p, &sorted_lists, 0, &mut chosen, &mut usage) {
        let out = ListColoringOutput::new(chosen);
        debug_assert!(verify_list_coloring(p, la, &out).is_empty());
        Ok(Some(out))
    } else {
        Ok(None)
    }
}

/// Shape parameters and seed for random pair generation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GeneratorParams {
    pub n_elements: usize,
    pub max_parts_per_side: usize,
    pub max_cap: usize,
    pub seed: u64,
}

/// A random valid pair, fully determined by the parameters. Each side gets
/// a uniform random partition into a random number of nonempty parts and
/// uniform capacities in `1..=max_cap`.
pub fn random_instance(gp: &GeneratorParams) -> MatroidPair {
    assert!(gp.n_elements >= 1, "need at least one element");
    assert!(gp.max_parts_per_side >= 1, "need at least one part");
    assert!(gp.max_cap >= 1, "capacities are positive");
    let mut rng = ChaCha8Rng::seed_from_u64(gp.seed);
    let m1 = random_matroid(gp, &mut rng);
    let m2 = random_matroid(gp, &mut rng);
    MatroidPair::new(m1, m2).expect("generated sides share the ground set")
}

fn random_matroid(gp: &GeneratorParams, rng: &mut ChaCha8Rng) -> GeneralizedPartitionMatroid {
    let n = gp.n_elements;
    let n_parts = rng.random_range(1..=gp.max_parts_per_side.min(n));
    let mut ids: Vec<usize> = (0..n).collect();
    ids.shuffle(rng);
    // cut the shuffled ids at n_parts - 1 distinct interior positions
    let mut positions: Vec<usize> = (1..n).collect();
    positions.shuffle(rng);
    let mut cuts: Vec<usize> = positions.into_iter().take(n_parts - 1).collect();
    cuts.push(0);
    cuts.push(n);
    cuts.sort_unstable();
    let parts: Vec<Vec<usize>> = cuts.windows(2).map(|w| ids[w[0]..w[1]].to_vec()).collect();
    let caps: Vec<usize> = (0..n_parts)
        .map(|_| rng.random_range(1..=gp.max_cap))
        .collect();
    GeneralizedPartitionMatroid::new(n, parts, caps).expect("generated partition is valid")
}

/// Seeded random lists: each element receives `list_len` distinct tokens
/// drawn from a palette of `palette_size` zero-padded names, sorted.
pub fn random_lists(n: usize, list_len: usize, palette_size: usize, seed: u64) -> ListAssignment {
    assert!(
        list_len <= palette_size,
        "palette too small for list length"
    );
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let lists: Vec<Vec<String>> = (0..n)
        .map(|_| {
            let mut picks = rand::seq::index::sample(&mut rng, palette_size, list_len).into_vec();
            picks.sort_unstable();
            picks.into_iter().map(|t| format!("c{t:03}")).collect()
        })
        .collect();
    ListAssignment::new(lists).expect("sampled tokens are distinct")
}
