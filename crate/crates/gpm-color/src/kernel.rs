//! Ordered pairs of generalized partition matroids and their kernels:
//! common independent sets dominating every element through one of the two
//! orders. Kernels are computed by deferred acceptance with part capacities
//! as quotas.

use crate::chromatic::Coloring;
use crate::error::{Error, Result};
use crate::matroid::MatroidPair;

/// Which of the pair's matroids (and its order) a predicate refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    M1,
    M2,
}

/// A matroid pair plus a labeling of the ground set by 1..=n. The first
/// order sorts by ascending label, the second by descending label.
#[derive(Debug, Clone)]
pub struct OrderedContext {
    pair: MatroidPair,
    labels: Vec<usize>,
}

impl OrderedContext {
    /// Builds a context from an explicit labeling, which must be a bijection
    /// onto 1..=n.
    pub fn new(pair: MatroidPair, labels: Vec<usize>) -> Result<Self> {
        let n = pair.n_elements();
        if labels.len() != n {
            return Err(Error::InvalidLabels {
                reason: format!("{} labels for {} elements", labels.len(), n),
            });
        }
        let mut seen = vec![false; n + 1];
        for (v, &label) in labels.iter().enumerate() {
            if label == 0 || label > n {
                return Err(Error::InvalidLabels {
                    reason: format!("element {v} has label {label}, expected 1..={n}"),
                });
            }
            if seen[label] {
                return Err(Error::InvalidLabels {
                    reason: format!("label {label} assigned twice"),
                });
            }
            seen[label] = true;
        }
        Ok(Self { pair, labels })
    }

    /// Canonical labeling from a complete valid coloring: the first class
    /// takes labels 1..=|N1| in ascending element order, the second class
    /// the next block, and so on.
    pub fn from_coloring(pair: &MatroidPair, coloring: &Coloring) -> Result<Self> {
        let n = pair.n_elements();
        let covered = crate::chromatic::validate_partial(pair, coloring)?;
        if let Some(v) = covered.iter().position(|&c| !c) {
            return Err(Error::IncompleteColoring { element: v });
        }
        let mut labels = vec![0usize; n];
        let mut next = 1;
        for class in coloring.classes() {
            // classes are kept sorted, so ids ascend within each block
            for &v in class {
                labels[v] = next;
                next += 1;
            }
        }
        Self::new(pair.clone(), labels)
    }

    pub fn pair(&self) -> &MatroidPair {
        &self.pair
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> usize {
        self.labels[v]
    }

    /// Strictly-before test in the given side's order.
    pub fn before(&self, side: Side, u: usize, v: usize) -> bool {
        match side {
            Side::M1 => self.labels[u] < self.labels[v],
            Side::M2 => self.labels[u] > self.labels[v],
        }
    }

    fn matroid(&self, side: Side) -> &crate::matroid::GeneralizedPartitionMatroid {
        match side {
            Side::M1 => self.pair.m1(),
            Side::M2 => self.pair.m2(),
        }
    }

    fn check_elements(&self, s: &[usize]) -> Result<()> {
        let n = self.pair.n_elements();
        for &v in s {
            if v >= n {
                return Err(Error::ElementOutOfRange {
                    element: v,
                    universe: n,
                });
            }
        }
        Ok(())
    }

    /// True iff `d` dominates `v` on the given side within `ground`:
    /// `v` is in `d`, or `d` holds at least cap-many elements of `v`'s part
    /// that all come strictly before `v` in the side's order. For
    /// generalized partition matroids this threshold test is equivalent to
    /// the existence of an independent blocking subset below `v`.
    pub fn dominates(&self, side: Side, d: &[usize], v: usize, ground: &[usize]) -> Result<bool> {
        self.check_elements(d)?;
        self.check_elements(ground)?;
        self.check_elements(&[v])?;
        if d.contains(&v) {
            return Ok(true);
        }
        let m = self.matroid(side);
        let part = m.part_of(v)?;
        let below = d
            .iter()
            .filter(|&&u| m.part_of(u).expect("checked") == part && self.before(side, u, v))
            .count();
        Ok(below >= m.cap(part))
    }

    /// True iff `k` is a kernel of the pair restricted to `ground`: a subset
    /// of `ground`, common independent, and dominating every element of
    /// `ground` on at least one side.
    pub fn is_kernel(&self, k: &[usize], ground: &[usize]) -> Result<bool> {
        self.check_elements(k)?;
        self.check_elements(ground)?;
        if !k.iter().all(|v| ground.contains(v)) {
            return Ok(false);
        }
        if !self.pair.is_common_independent(k)? {
            return Ok(false);
        }
        for &v in ground {
            if !self.dominates(Side::M1, k, v, ground)?
                && !self.dominates(Side::M2, k, v, ground)?
            {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Computes a kernel of the restriction to `ground` by deferred
    /// acceptance: each first-matroid part proposes its cap-many best
    /// unrejected elements in the first order; each second-matroid part
    /// retains its cap-many best proposals in the second order and
    /// permanently rejects the rest; repeat until a round makes no
    /// rejection. The output is verified before being returned.
    pub fn find_kernel(&self, ground: &[usize]) -> Result<KernelResult> {
        self.check_elements(ground)?;
        let mut ground: Vec<usize> = ground.to_vec();
        ground.sort_unstable();
        ground.dedup();

        let m1 = self.pair.m1();
        let m2 = self.pair.m2();

        // ground elements per first-matroid part, ascending label
        let mut proposers: Vec<Vec<usize>> = vec![Vec::new(); m1.n_parts()];
        for &v in &ground {
            proposers[m1.part_of(v)?].push(v);
        }
        for list in &mut proposers {
            list.sort_unstable_by_key(|&v| self.labels[v]);
        }

        let mut rejected = vec![false; self.pair.n_elements()];
        let mut rounds = 0;
        let kernel = loop {
            rounds += 1;
            let mut held: Vec<Vec<usize>> = vec![Vec::new(); m2.n_parts()];
            for (part, list) in proposers.iter().enumerate() {
                let quota = m1.cap(part);
                for &v in list.iter().filter(|&&v| !rejected[v]).take(quota) {
                    held[m2.part_of(v)?].push(v);
                }
            }
            let mut any_rejection = false;
            for (part, proposals) in held.iter_mut().enumerate() {
                let quota = m2.cap(part);
                if proposals.len() > quota {
                    // best in the second order = largest labels
                    proposals.sort_unstable_by_key(|&v| std::cmp::Reverse(self.labels[v]));
                    for &v in &proposals[quota..] {
                        rejected[v] = true;
                        any_rejection = true;
                    }
                    proposals.truncate(quota);
                }
            }
            if !any_rejection {
                let mut kernel: Vec<usize> = held.into_iter().flatten().collect();
                kernel.sort_unstable();
                break kernel;
            }
        };

        if !self.is_kernel(&kernel, &ground)? {
            return Err(Error::NoKernelFound);
        }
        Ok(KernelResult { kernel, rounds })
    }
}

/// A kernel plus the number of proposal rounds the search took.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelResult {
    pub kernel: Vec<usize>,
    pub rounds: usize,
}
