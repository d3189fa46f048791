//! Small fixtures and enumeration helpers shared by unit, integration, and
//! acceptance tests.

use crate::circulation::{is_feasible_circulation, Bound, CirculationInstance};
use crate::matroid::{GeneralizedPartitionMatroid, MatroidPair};

/// Six-element reference pair: first matroid parts {0,1,2},{3,4,5} with caps
/// 1,2; second matroid parts {0,3},{1,4},{2,5} with caps 1,1,2.
pub fn e1_pair() -> MatroidPair {
    let m1 = GeneralizedPartitionMatroid::new(6, vec![vec![0, 1, 2], vec![3, 4, 5]], vec![1, 2])
        .unwrap();
    let m2 = GeneralizedPartitionMatroid::new(
        6,
        vec![vec![0, 3], vec![1, 4], vec![2, 5]],
        vec![1, 1, 2],
    )
    .unwrap();
    MatroidPair::new(m1, m2).unwrap()
}

/// All subsets of `base`, each sorted, in bitmask order. Panics above 20
/// elements; this is for exhaustive checks on small sets only.
pub fn subsets(base: &[usize]) -> Vec<Vec<usize>> {
    assert!(base.len() <= 20, "subset enumeration capped at 20 elements");
    let mut out = Vec::with_capacity(1 << base.len());
    for mask in 0u32..(1 << base.len()) {
        let mut s: Vec<usize> = base
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &v)| v)
            .collect();
        s.sort_unstable();
        out.push(s);
    }
    out
}

/// Exhaustive circulation feasibility: tries every integral assignment
/// within bounds. Requires finite bounds except on sink-to-source style
/// return arcs, where the bound is replaced by the sum of all finite ones.
pub fn brute_feasible_circulation(inst: &CirculationInstance) -> bool {
    let finite_total: u64 = inst
        .arcs
        .iter()
        .map(|a| match a.upper {
            Bound::Finite(c) => c,
            Bound::Unbounded => 0,
        })
        .sum();
    fn rec(
        inst: &CirculationInstance,
        cap_of: &dyn Fn(usize) -> u64,
        idx: usize,
        flow: &mut Vec<u64>,
    ) -> bool {
        if idx == inst.arcs.len() {
            return is_feasible_circulation(inst, flow);
        }
        for f in inst.arcs[idx].lower..=cap_of(idx) {
            flow.push(f);
            if rec(inst, cap_of, idx + 1, flow) {
                flow.pop();
                return true;
            }
            flow.pop();
        }
        false
    }
    let cap_of = |idx: usize| match inst.arcs[idx].upper {
        Bound::Finite(c) => c,
        Bound::Unbounded => finite_total,
    };
    rec(inst, &cap_of, 0, &mut Vec::new())
}
