//! Expansion numbers, the chromatic-number formula for generalized partition
//! matroids, and the constructive optimal coloring: greedy packing plus a
//! two-class rerouting step driven by an integral circulation.

use std::cmp::Ordering;
use std::fmt;

use crate::circulation::{solve_circulation, Arc, Bound, CirculationInstance, CirculationResult};
use crate::error::{Error, Result};
use crate::matroid::{GeneralizedPartitionMatroid, MatroidPair};

/// Exact nonnegative rational, always in lowest terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Rational {
    num: u64,
    den: u64,
}

impl Rational {
    pub fn new(num: u64, den: u64) -> Self {
        assert!(den != 0, "zero denominator");
        let g = gcd(num, den).max(1);
        Self {
            num: num / g,
            den: den / g,
        }
    }

    pub fn zero() -> Self {
        Self { num: 0, den: 1 }
    }

    pub fn num(&self) -> u64 {
        self.num
    }

    pub fn den(&self) -> u64 {
        self.den
    }

    pub fn ceil(&self) -> u64 {
        self.num.div_ceil(self.den)
    }
}

fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.num as u128 * other.den as u128).cmp(&(other.num as u128 * self.den as u128))
    }
}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

/// Largest part-size-to-capacity ratio of the matroid.
pub fn expansion_number(m: &GeneralizedPartitionMatroid) -> Rational {
    m.parts()
        .iter()
        .zip(m.caps())
        .map(|(part, &cap)| Rational::new(part.len() as u64, cap as u64))
        .max()
        .unwrap_or_else(Rational::zero)
}

/// Minimum number of independent sets covering the ground set: the ceiling
/// of the expansion number.
pub fn chi_of_matroid(m: &GeneralizedPartitionMatroid) -> usize {
    expansion_number(m).ceil() as usize
}

/// Minimum number of common independent sets covering the ground set of the
/// pair: the larger of the two per-matroid values.
pub fn chi_of_pair(p: &MatroidPair) -> usize {
    chi_of_matroid(p.m1()).max(chi_of_matroid(p.m2()))
}

/// An ordered list of disjoint color classes. Complete when the classes
/// cover the whole ground set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    classes: Vec<Vec<usize>>,
}

impl Coloring {
    /// Wraps class lists, sorting each class. Disjointness and independence
    /// are properties of a coloring *for a pair*; see [`coloring_violations`].
    pub fn new(classes: Vec<Vec<usize>>) -> Self {
        let mut classes = classes;
        for class in &mut classes {
            class.sort_unstable();
        }
        Self { classes }
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn covered_count(&self) -> usize {
        self.classes.iter().map(Vec::len).sum()
    }

    /// The class containing `v`, if any.
    pub fn class_of(&self, v: usize) -> Option<usize> {
        self.classes
            .iter()
            .position(|class| class.binary_search(&v).is_ok())
    }
}

/// A defect in a coloring artifact, suitable for verification reports.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ColoringViolation {
    ElementOutOfRange {
        class: usize,
        element: usize,
    },
    DuplicateElement {
        element: usize,
    },
    PartOverfull {
        class: usize,
        matroid: u8,
        part: usize,
        count: usize,
        cap: usize,
    },
    ElementUncovered {
        element: usize,
    },
    NotOptimal {
        classes: usize,
        optimum: usize,
    },
}

impl fmt::Display for ColoringViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::ElementOutOfRange { class, element } => {
                write!(f, "class {class} contains out-of-range element {element}")
            }
            Self::DuplicateElement { element } => {
                write!(f, "element {element} appears more than once")
            }
            Self::PartOverfull {
                class,
                matroid,
                part,
                count,
                cap,
            } => write!(
                f,
                "class {class} takes {count} elements from part {part} of matroid {matroid} (cap {cap})"
            ),
            Self::ElementUncovered { element } => {
                write!(f, "element {element} is not covered by any class")
            }
            Self::NotOptimal { classes, optimum } => {
                write!(f, "coloring uses {classes} classes, optimum is {optimum}")
            }
        }
    }
}

/// Checks disjointness, per-class common independence, coverage, and class
/// count against the optimum. Empty result means the coloring is a valid
/// optimal decomposition.
pub fn coloring_violations(p: &MatroidPair, coloring: &Coloring) -> Vec<ColoringViolation> {
    let n = p.n_elements();
    let mut out = Vec::new();
    let mut seen = vec![false; n];
    for (k, class) in coloring.classes().iter().enumerate() {
        for &v in class {
            if v >= n {
                out.push(ColoringViolation::ElementOutOfRange {
                    class: k,
                    element: v,
                });
            } else if seen[v] {
                out.push(ColoringViolation::DuplicateElement { element: v });
            } else {
                seen[v] = true;
            }
        }
        let in_range: Vec<usize> = class.iter().copied().filter(|&v| v < n).collect();
        for (matroid, m) in [(1u8, p.m1()), (2u8, p.m2())] {
            let mut counts = vec![0usize; m.n_parts()];
            for &v in &in_range {
                counts[m.part_of(v).expect("checked in range")] += 1;
            }
            for (part, &count) in counts.iter().enumerate() {
                if count > m.cap(part) {
                    out.push(ColoringViolation::PartOverfull {
                        class: k,
                        matroid,
                        part,
                        count,
                        cap: m.cap(part),
                    });
                }
            }
        }
    }
    for (v, &covered) in seen.iter().enumerate() {
        if !covered {
            out.push(ColoringViolation::ElementUncovered { element: v });
        }
    }
    let optimum = chi_of_pair(p);
    if coloring.class_count() != optimum {
        out.push(ColoringViolation::NotOptimal {
            classes: coloring.class_count(),
            optimum,
        });
    }
    out
}

/// Validates a partial coloring: in-range, pairwise disjoint, each class
/// common independent. Coverage is not required. Returns the covered mask.
pub(crate) fn validate_partial(p: &MatroidPair, partial: &Coloring) -> Result<Vec<bool>> {
    let n = p.n_elements();
    let mut covered = vec![false; n];
    for (k, class) in partial.classes().iter().enumerate() {
        for &v in class {
            if v >= n {
                return Err(Error::ElementOutOfRange {
                    element: v,
                    universe: n,
                });
            }
            if covered[v] {
                return Err(Error::InvalidPartial {
                    reason: format!("element {v} appears in more than one class"),
                });
            }
            covered[v] = true;
        }
        if !p.is_common_independent(class)? {
            return Err(Error::InvalidPartial {
                reason: format!("class {k} is not common independent"),
            });
        }
    }
    Ok(covered)
}

/// Extends a partial coloring to cover one more element `v`, keeping the
/// class count and keeping every class common independent. Inserts directly
/// into the first class with room on both sides; otherwise reroutes two
/// classes through an integral circulation.
pub fn augment_once(p: &MatroidPair, partial: &Coloring, v: usize) -> Result<Coloring> {
    let n = p.n_elements();
    if v >= n {
        return Err(Error::ElementOutOfRange {
            element: v,
            universe: n,
        });
    }
    let covered = validate_partial(p, partial)?;
    if covered[v] {
        return Err(Error::AlreadyCovered { element: v });
    }

    let i_v = p.m1().part_of(v)?;
    let j_v = p.m2().part_of(v)?;
    let p_cap = p.m1().cap(i_v);
    let q_cap = p.m2().cap(j_v);

    let count_in = |class: &[usize], m: &GeneralizedPartitionMatroid, part: usize| {
        class
            .iter()
            .filter(|&&u| m.part_of(u).expect("validated") == part)
            .count()
    };

    let mut classes: Vec<Vec<usize>> = partial.classes().to_vec();
    let mut alpha = None;
    let mut beta = None;
    for (k, class) in classes.iter().enumerate() {
        let p_room = count_in(class, p.m1(), i_v) < p_cap;
        let q_room = count_in(class, p.m2(), j_v) < q_cap;
        if p_room && q_room {
            classes[k].push(v);
            return Ok(Coloring::new(classes));
        }
        if p_room && alpha.is_none() {
            alpha = Some(k);
        }
        if q_room && beta.is_none() {
            beta = Some(k);
        }
    }

    let short = || {
        Error::InvalidPartial {
        reason: format!(
            "no class has room for element {v}; the partial coloring has fewer classes than the optimum"
        ),
    }
    };
    let alpha = alpha.ok_or_else(short)?;
    let beta = beta.ok_or_else(short)?;
    debug_assert_ne!(alpha, beta, "joint room would have been a direct insert");

    let (m_set, n_set) = reroute_two_classes(p, &classes[alpha], &classes[beta], v)?;
    debug_assert!(p.is_common_independent(&m_set)?);
    debug_assert!(p.is_common_independent(&n_set)?);
    classes[alpha] = m_set;
    classes[beta] = n_set;
    Ok(Coloring::new(classes))
}

/// Repartitions `with_p_room` ∪ `with_q_room` ∪ {v} into two common
/// independent sets via a circulation on the two classes' part graph.
/// `with_p_room` must have room for `v` in its first-matroid part,
/// `with_q_room` room in its second-matroid part.
fn reroute_two_classes(
    p: &MatroidPair,
    with_p_room: &[usize],
    with_q_room: &[usize],
    v: usize,
) -> Result<(Vec<usize>, Vec<usize>)> {
    let (inst, element_arcs, extra_arc) = augment_digraph(p, with_p_room, with_q_room, v)?;
    let flow = match solve_circulation(&inst)? {
        CirculationResult::Flow(flow) => flow,
        CirculationResult::Cut(_) => return Err(Error::InternalInfeasible),
    };
    let mut chosen = Vec::new();
    let mut rest = Vec::new();
    for &(u, arc) in &element_arcs {
        if flow[arc] == 1 {
            chosen.push(u);
        } else {
            rest.push(u);
        }
    }
    if flow[extra_arc] == 1 {
        chosen.push(v);
    } else {
        rest.push(v);
    }
    Ok((chosen, rest))
}

/// Builds the augmentation digraph for the two classes and the new element:
/// one vertex per part touched by the classes on each side plus a source
/// feeding the first-matroid parts and a sink draining the second-matroid
/// parts, element arcs of capacity one between part vertices, and a
/// sink-to-source return arc. Star-arc lower bounds force enough elements
/// to stay in the chosen set for the leftover set to shrink within every
/// capacity; raising the bounds at `v`'s own parts by one makes room for it.
/// Returns the instance, the (element, arc index) pairs, and the arc index
/// for `v`.
#[allow(clippy::type_complexity)]
fn augment_digraph(
    p: &MatroidPair,
    class1: &[usize],
    class2: &[usize],
    v: usize,
) -> Result<(CirculationInstance, Vec<(usize, usize)>, usize)> {
    let m1 = p.m1();
    let m2 = p.m2();
    let i_v = m1.part_of(v)?;
    let j_v = m2.part_of(v)?;

    let mut members: Vec<usize> = class1.iter().chain(class2.iter()).copied().collect();
    members.sort_unstable();

    let mut left_parts: Vec<usize> = members.iter().map(|&u| m1.part_of(u).unwrap()).collect();
    left_parts.sort_unstable();
    left_parts.dedup();
    let mut right_parts: Vec<usize> = members.iter().map(|&u| m2.part_of(u).unwrap()).collect();
    right_parts.sort_unstable();
    right_parts.dedup();
    // the stuck-case preconditions put v's parts among the touched parts
    debug_assert!(left_parts.binary_search(&i_v).is_ok());
    debug_assert!(right_parts.binary_search(&j_v).is_ok());

    let left_index = |part: usize| left_parts.binary_search(&part).unwrap();
    let right_index = |part: usize| right_parts.binary_search(&part).unwrap();
    let n_left = left_parts.len();
    let n_right = right_parts.len();
    let source = n_left + n_right;
    let sink = source + 1;

    let mut arcs = Vec::new();
    let mut element_arcs = Vec::new();
    for &u in &members {
        let arc = arcs.len();
        arcs.push(Arc::bounded(
            left_index(m1.part_of(u).unwrap()),
            n_left + right_index(m2.part_of(u).unwrap()),
            0,
            1,
        ));
        element_arcs.push((u, arc));
    }
    let extra_arc = arcs.len();
    arcs.push(Arc::bounded(
        left_index(i_v),
        n_left + right_index(j_v),
        0,
        1,
    ));

    let degree_sum = |class: &[usize], m: &GeneralizedPartitionMatroid, part: usize| {
        class
            .iter()
            .filter(|&&u| m.part_of(u).unwrap() == part)
            .count() as u64
    };
    for (pos, &part) in left_parts.iter().enumerate() {
        let need =
            degree_sum(class1, m1, part) + degree_sum(class2, m1, part) + u64::from(part == i_v);
        let cap = m1.cap(part) as u64;
        // conservation forces nonnegative flow here, so the clamp is free
        arcs.push(Arc::bounded(source, pos, need.saturating_sub(cap), cap));
    }
    for (pos, &part) in right_parts.iter().enumerate() {
        let need =
            degree_sum(class1, m2, part) + degree_sum(class2, m2, part) + u64::from(part == j_v);
        let cap = m2.cap(part) as u64;
        arcs.push(Arc::bounded(
            n_left + pos,
            sink,
            need.saturating_sub(cap),
            cap,
        ));
    }
    arcs.push(Arc::new(sink, source, 0, Bound::Unbounded));

    let inst = CirculationInstance::new(sink + 1, arcs)?;
    Ok((inst, element_arcs, extra_arc))
}

/// A complete coloring with exactly [`chi_of_pair`] classes: greedy packing
/// in element order, then one augmentation per element the greedy pass
/// missed. Always succeeds on a valid pair.
pub fn optimal_coloring(p: &MatroidPair) -> Coloring {
    let c = chi_of_pair(p);
    let n = p.n_elements();
    let mut classes: Vec<Vec<usize>> = vec![Vec::new(); c];
    let mut count1: Vec<Vec<usize>> = vec![vec![0; p.m1().n_parts()]; c];
    let mut count2: Vec<Vec<usize>> = vec![vec![0; p.m2().n_parts()]; c];
    let mut missed = Vec::new();
    for v in 0..n {
        let i = p.m1().part_of(v).expect("in range");
        let j = p.m2().part_of(v).expect("in range");
        let slot = (0..c).find(|&k| count1[k][i] < p.m1().cap(i) && count2[k][j] < p.m2().cap(j));
        match slot {
            Some(k) => {
                classes[k].push(v);
                count1[k][i] += 1;
                count2[k][j] += 1;
            }
            None => missed.push(v),
        }
    }
    let mut coloring = Coloring::new(classes);
    for v in missed {
        coloring = augment_once(p, &coloring, v)
            .expect("augmentation cannot fail at the optimal class count");
    }
    coloring
}
