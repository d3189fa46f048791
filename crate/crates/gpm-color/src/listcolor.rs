//! List coloring of a matroid pair's common independent sets: whenever every
//! list has at least as many colors as the plain chromatic number, a full
//! assignment exists whose color fibers are all common independent. Each
//! round colors the kernel of the chosen color's eligible set.

use std::collections::BTreeMap;
use std::fmt;

use crate::chromatic::{chi_of_pair, optimal_coloring};
use crate::error::{Error, Result};
use crate::kernel::{OrderedContext, Side};
use crate::matroid::MatroidPair;

/// Per-element lists of permissible color tokens. Tokens are opaque strings
/// compared lexicographically; duplicates within one list are rejected.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ListAssignment {
    lists: Vec<Vec<String>>,
}

impl ListAssignment {
    pub fn new(lists: Vec<Vec<String>>) -> Result<Self> {
        for (v, list) in lists.iter().enumerate() {
            if list.len() <= 24 {
                for (i, a) in list.iter().enumerate() {
                    if list[i + 1..].contains(a) {
                        return Err(Error::DuplicateListColor {
                            element: v,
                            color: a.clone(),
                        });
                    }
                }
            } else {
                let mut sorted: Vec<&String> = list.iter().collect();
                sorted.sort();
                if let Some(pair) = sorted.windows(2).find(|w| w[0] == w[1]) {
                    return Err(Error::DuplicateListColor {
                        element: v,
                        color: pair[0].clone(),
                    });
                }
            }
        }
        Ok(Self { lists })
    }

    pub fn lists(&self) -> &[Vec<String>] {
        &self.lists
    }

    pub fn len(&self) -> usize {
        self.lists.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lists.is_empty()
    }
}

/// A chosen color token per element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ListColoringOutput {
    assignment: Vec<String>,
}

impl ListColoringOutput {
    pub fn new(assignment: Vec<String>) -> Self {
        Self { assignment }
    }

    pub fn assignment(&self) -> &[String] {
        &self.assignment
    }

    /// Elements per color token.
    pub fn fibers(&self) -> BTreeMap<&str, Vec<usize>> {
        let mut fibers: BTreeMap<&str, Vec<usize>> = BTreeMap::new();
        for (v, token) in self.assignment.iter().enumerate() {
            fibers.entry(token.as_str()).or_default().push(v);
        }
        fibers
    }
}

/// The elements of `ground` sharing `v`'s part that come strictly before
/// `v`, once per side: ascending labels for the first matroid's order,
/// descending for the second's.
pub fn gamma_sets(
    ctx: &OrderedContext,
    ground: &[usize],
    v: usize,
) -> Result<(Vec<usize>, Vec<usize>)> {
    let n = ctx.pair().n_elements();
    for &u in ground.iter().chain(std::iter::once(&v)) {
        if u >= n {
            return Err(Error::ElementOutOfRange {
                element: u,
                universe: n,
            });
        }
    }
    let i_v = ctx.pair().m1().part_of(v)?;
    let j_v = ctx.pair().m2().part_of(v)?;
    let mut first = Vec::new();
    let mut second = Vec::new();
    for &z in ground {
        if ctx.pair().m1().part_of(z)? == i_v && ctx.before(Side::M1, z, v) {
            first.push(z);
        }
        if ctx.pair().m2().part_of(z)? == j_v && ctx.before(Side::M2, z, v) {
            second.push(z);
        }
    }
    Ok((first, second))
}

/// Sizes of the two earlier-same-part sets, without materializing them.
fn gamma_counts(ctx: &OrderedContext, ground: &[usize], v: usize) -> (usize, usize) {
    let m1 = ctx.pair().m1();
    let m2 = ctx.pair().m2();
    let i_v = m1.part_of(v).expect("in range");
    let j_v = m2.part_of(v).expect("in range");
    let mut first = 0;
    let mut second = 0;
    for &z in ground {
        if m1.part_of(z).expect("in range") == i_v && ctx.before(Side::M1, z, v) {
            first += 1;
        }
        if m2.part_of(z).expect("in range") == j_v && ctx.before(Side::M2, z, v) {
            second += 1;
        }
    }
    (first, second)
}

/// Book-keeping carried through the recursion purely to assert the
/// correctness argument at runtime; the algorithm's choices never read it
/// beyond the list lengths it mirrors.
struct Ledger {
    t: Vec<usize>,
    upper: Vec<usize>,
}

impl Ledger {
    fn check(&self, ctx: &OrderedContext, alive: &[bool], working: &[Vec<String>]) -> Result<()> {
        let ground: Vec<usize> = (0..alive.len()).filter(|&v| alive[v]).collect();
        for &v in &ground {
            let t = self.t[v];
            let upper = self.upper[v];
            if t < 1 || t > upper {
                return Err(invariant(format!(
                    "element {v} has counters t={t}, T={upper} outside 1 <= t <= T"
                )));
            }
            if upper != working[v].len() {
                return Err(invariant(format!(
                    "element {v} has T={upper} but {} remaining colors",
                    working[v].len()
                )));
            }
            let (first, second) = gamma_counts(ctx, &ground, v);
            let p_cap = ctx.pair().m1().cap(ctx.pair().m1().part_of(v)?);
            let q_cap = ctx.pair().m2().cap(ctx.pair().m2().part_of(v)?);
            if first > t * p_cap - 1 {
                return Err(invariant(format!(
                    "element {v}: {first} earlier same-part elements on side 1 exceeds t*p-1 = {}",
                    t * p_cap - 1
                )));
            }
            if second > (upper - t) * q_cap + q_cap - 1 {
                return Err(invariant(format!(
                    "element {v}: {second} earlier same-part elements on side 2 exceeds (T-t+1)*q-1 = {}",
                    (upper - t) * q_cap + q_cap - 1
                )));
            }
        }
        Ok(())
    }
}

fn invariant(reason: String) -> Error {
    Error::InternalInvariantViolated { reason }
}

/// Produces a full assignment drawing each element's color from its own
/// list, with every fiber common independent. Requires every list to have
/// at least [`chi_of_pair`] colors.
///
/// Each round picks the element with the most remaining colors (smallest id
/// on ties) and its lexicographically smallest color, colors the kernel of
/// that color's eligible set, and strikes the color from the losers' lists.
pub fn list_color(p: &MatroidPair, la: &ListAssignment) -> Result<ListColoringOutput> {
    let n = p.n_elements();
    if la.len() != n {
        return Err(Error::ListCountMismatch {
            lists: la.len(),
            elements: n,
        });
    }
    let needed = chi_of_pair(p);
    let offenders: Vec<(usize, usize)> = la
        .lists()
        .iter()
        .enumerate()
        .filter(|(_, list)| list.len() < needed)
        .map(|(v, list)| (v, list.len()))
        .collect();
    if !offenders.is_empty() {
        return Err(Error::ListTooShort {
            required: needed,
            offenders,
        });
    }
    if n == 0 {
        return Ok(ListColoringOutput::new(Vec::new()));
    }

    let coloring = optimal_coloring(p);
    let ctx = OrderedContext::from_coloring(p, &coloring)?;

    // Work on each list's `needed` smallest tokens so the remaining-list
    // length tracks the ledger's upper counter exactly.
    let mut working: Vec<Vec<String>> = la
        .lists()
        .iter()
        .map(|list| {
            let mut list = list.clone();
            list.sort();
            list.truncate(needed);
            list
        })
        .collect();

    let mut ledger = Ledger {
        t: (0..n)
            .map(|v| coloring.class_of(v).expect("coloring is complete") + 1)
            .collect(),
        upper: vec![needed; n],
    };
    let mut alive = vec![true; n];
    let mut assignment: Vec<Option<String>> = vec![None; n];

    ledger.check(&ctx, &alive, &working)?;

    while let Some(chosen) = (0..n)
        .filter(|&v| alive[v])
        .max_by_key(|&v| (working[v].len(), std::cmp::Reverse(v)))
    {
        // lists are sorted, so the head is the smallest token
        let color = working[chosen]
            .first()
            .ok_or_else(|| invariant(format!("element {chosen} ran out of colors")))?
            .clone();
        let eligible: Vec<usize> = (0..n)
            .filter(|&v| alive[v] && working[v].binary_search(&color).is_ok())
            .collect();
        let kernel = ctx.find_kernel(&eligible)?.kernel;
        if kernel.is_empty() {
            return Err(invariant(format!(
                "empty kernel for a nonempty eligible set of color {color:?}"
            )));
        }
        for &v in &kernel {
            assignment[v] = Some(color.clone());
            alive[v] = false;
        }
        for &v in &eligible {
            if alive[v] {
                let pos = working[v]
                    .binary_search(&color)
                    .expect("eligible elements hold the color");
                working[v].remove(pos);
                if ctx.dominates(Side::M1, &kernel, v, &eligible)? {
                    if ledger.t[v] <= 1 {
                        return Err(invariant(format!(
                            "element {v} dominated on side 1 with t already 1"
                        )));
                    }
                    ledger.t[v] -= 1;
                    ledger.upper[v] -= 1;
                } else if ctx.dominates(Side::M2, &kernel, v, &eligible)? {
                    if ledger.upper[v] <= ledger.t[v] {
                        return Err(invariant(format!(
                            "element {v} dominated on side 2 with T already at t"
                        )));
                    }
                    ledger.upper[v] -= 1;
                } else {
                    return Err(invariant(format!(
                        "kernel does not dominate rejected element {v}"
                    )));
                }
            }
        }
        ledger.check(&ctx, &alive, &working)?;
    }

    let assignment = assignment
        .into_iter()
        .enumerate()
        .map(|(v, token)| token.ok_or_else(|| invariant(format!("element {v} left uncolored"))))
        .collect::<Result<Vec<String>>>()?;
    Ok(ListColoringOutput::new(assignment))
}

/// A defect in a list-coloring artifact.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ListColoringViolation {
    WrongLength {
        got: usize,
        want: usize,
    },
    TokenNotInList {
        element: usize,
        token: String,
    },
    FiberPartOverfull {
        token: String,
        matroid: u8,
        part: usize,
        count: usize,
        cap: usize,
    },
}

impl fmt::Display for ListColoringViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::WrongLength { got, want } => {
                write!(f, "assignment covers {got} elements, instance has {want}")
            }
            Self::TokenNotInList { element, token } => {
                write!(f, "element {element} is assigned {token:?}, absent from its list")
            }
            Self::FiberPartOverfull {
                token,
                matroid,
                part,
                count,
                cap,
            } => write!(
                f,
                "color {token:?} takes {count} elements from part {part} of matroid {matroid} (cap {cap})"
            ),
        }
    }
}

/// Checks that every element received a token from its own list and every
/// color fiber is common independent. Empty result means valid.
pub fn verify_list_coloring(
    p: &MatroidPair,
    la: &ListAssignment,
    out: &ListColoringOutput,
) -> Vec<ListColoringViolation> {
    let n = p.n_elements();
    let mut violations = Vec::new();
    if out.assignment().len() != n || la.len() != n {
        violations.push(ListColoringViolation::WrongLength {
            got: out.assignment().len(),
            want: n,
        });
    }
    for (v, token) in out.assignment().iter().enumerate().take(n) {
        let listed = la.lists().get(v).is_some_and(|list| list.contains(token));
        if !listed {
            violations.push(ListColoringViolation::TokenNotInList {
                element: v,
                token: token.clone(),
            });
        }
    }
    for (token, fiber) in out.fibers() {
        let fiber: Vec<usize> = fiber.into_iter().filter(|&v| v < n).collect();
        for (matroid, m) in [(1u8, p.m1()), (2u8, p.m2())] {
            let mut counts = vec![0usize; m.n_parts()];
            for &v in &fiber {
                counts[m.part_of(v).expect("filtered in range")] += 1;
            }
            for (part, &count) in counts.iter().enumerate() {
                if count > m.cap(part) {
                    violations.push(ListColoringViolation::FiberPartOverfull {
                        token: token.to_string(),
                        matroid,
                        part,
                        count,
                        cap: m.cap(part),
                    });
                }
            }
        }
    }
    violations
}
