//! Generalized partition matroids over a dense element universe, pairs of
//! them on a shared ground set, and the correspondence with bipartite
//! multigraphs carrying vertex capacities.

use crate::error::{Error, Result};

/// A matroid whose ground set `0..n_elements` is partitioned into parts,
/// each with a positive capacity. A set is independent when it meets every
/// part in at most that part's capacity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneralizedPartitionMatroid {
    n_elements: usize,
    parts: Vec<Vec<usize>>,
    caps: Vec<usize>,
    // part_of[v] = index of the part containing v
    part_of: Vec<usize>,
}

impl GeneralizedPartitionMatroid {
    /// Validates and builds a matroid. Parts must be disjoint, nonempty,
    /// cover the whole universe, and carry positive capacities.
    pub fn new(n_elements: usize, parts: Vec<Vec<usize>>, caps: Vec<usize>) -> Result<Self> {
        if parts.len() != caps.len() {
            return Err(Error::LengthMismatch {
                parts: parts.len(),
                caps: caps.len(),
            });
        }
        for (i, &cap) in caps.iter().enumerate() {
            if cap == 0 {
                return Err(Error::NonPositiveCap { part: i });
            }
        }
        let mut part_of = vec![usize::MAX; n_elements];
        for (i, part) in parts.iter().enumerate() {
            if part.is_empty() {
                return Err(Error::EmptyPart { part: i });
            }
            for &v in part {
                if v >= n_elements {
                    return Err(Error::ElementOutOfRange {
                        element: v,
                        universe: n_elements,
                    });
                }
                if part_of[v] != usize::MAX {
                    return Err(Error::OverlappingParts { element: v });
                }
                part_of[v] = i;
            }
        }
        if let Some(v) = part_of.iter().position(|&p| p == usize::MAX) {
            return Err(Error::UncoveredElement { element: v });
        }
        let mut parts = parts;
        for part in &mut parts {
            part.sort_unstable();
        }
        Ok(Self {
            n_elements,
            parts,
            caps,
            part_of,
        })
    }

    pub fn n_elements(&self) -> usize {
        self.n_elements
    }

    pub fn n_parts(&self) -> usize {
        self.parts.len()
    }

    pub fn parts(&self) -> &[Vec<usize>] {
        &self.parts
    }

    pub fn caps(&self) -> &[usize] {
        &self.caps
    }

    pub fn part(&self, i: usize) -> &[usize] {
        &self.parts[i]
    }

    pub fn cap(&self, i: usize) -> usize {
        self.caps[i]
    }

    /// Index of the part containing `v`.
    pub fn part_of(&self, v: usize) -> Result<usize> {
        if v >= self.n_elements {
            return Err(Error::ElementOutOfRange {
                element: v,
                universe: self.n_elements,
            });
        }
        Ok(self.part_of[v])
    }

    fn check_set(&self, s: &[usize]) -> Result<()> {
        for &v in s {
            if v >= self.n_elements {
                return Err(Error::ElementOutOfRange {
                    element: v,
                    universe: self.n_elements,
                });
            }
        }
        Ok(())
    }

    /// True iff `s` meets every part in at most its capacity.
    /// `s` is a set: element ids must be distinct.
    pub fn is_independent(&self, s: &[usize]) -> Result<bool> {
        self.check_set(s)?;
        let mut counts = vec![0usize; self.parts.len()];
        for &v in s {
            let i = self.part_of[v];
            counts[i] += 1;
            if counts[i] > self.caps[i] {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Elements spanned by `a`: within each part, `a`'s elements alone if
    /// fewer than the capacity, the whole part once the capacity is reached.
    /// Returns a sorted element list.
    pub fn span(&self, a: &[usize]) -> Result<Vec<usize>> {
        self.check_set(a)?;
        let mut counts = vec![0usize; self.parts.len()];
        for &v in a {
            counts[self.part_of[v]] += 1;
        }
        let mut out = Vec::new();
        for (i, &count) in counts.iter().enumerate() {
            if count >= self.caps[i] {
                out.extend_from_slice(&self.parts[i]);
            }
        }
        // parts below capacity contribute only a's own elements
        for &v in a {
            let i = self.part_of[v];
            if counts[i] < self.caps[i] {
                out.push(v);
            }
        }
        out.sort_unstable();
        out.dedup();
        Ok(out)
    }
}

/// Two generalized partition matroids on the same ground set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatroidPair {
    m1: GeneralizedPartitionMatroid,
    m2: GeneralizedPartitionMatroid,
}

impl MatroidPair {
    pub fn new(m1: GeneralizedPartitionMatroid, m2: GeneralizedPartitionMatroid) -> Result<Self> {
        if m1.n_elements() != m2.n_elements() {
            return Err(Error::GroundSetMismatch {
                left: m1.n_elements(),
                right: m2.n_elements(),
            });
        }
        Ok(Self { m1, m2 })
    }

    pub fn m1(&self) -> &GeneralizedPartitionMatroid {
        &self.m1
    }

    pub fn m2(&self) -> &GeneralizedPartitionMatroid {
        &self.m2
    }

    pub fn n_elements(&self) -> usize {
        self.m1.n_elements()
    }

    /// True iff `s` is independent in both matroids.
    pub fn is_common_independent(&self, s: &[usize]) -> Result<bool> {
        Ok(self.m1.is_independent(s)? && self.m2.is_independent(s)?)
    }

    /// Builds the bipartite multigraph whose left vertices are the parts of
    /// the first matroid (capacity = part capacity), right vertices the parts
    /// of the second, and one edge per ground-set element joining its two
    /// containing parts. Returns the graph and the edge-index -> element map.
    pub fn to_bipartite(&self) -> (BipartiteInstance, Vec<usize>) {
        let mut edges = Vec::with_capacity(self.n_elements());
        let mut edge_to_element = Vec::with_capacity(self.n_elements());
        for v in 0..self.n_elements() {
            edges.push((self.m1.part_of[v], self.m2.part_of[v]));
            edge_to_element.push(v);
        }
        let g = BipartiteInstance {
            left_caps: self.m1.caps.clone(),
            right_caps: self.m2.caps.clone(),
            edges,
        };
        (g, edge_to_element)
    }
}

/// Bipartite multigraph with positive vertex capacities. Parallel edges are
/// distinguished by their index into `edges`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteInstance {
    left_caps: Vec<usize>,
    right_caps: Vec<usize>,
    edges: Vec<(usize, usize)>,
}

impl BipartiteInstance {
    pub fn new(
        left_caps: Vec<usize>,
        right_caps: Vec<usize>,
        edges: Vec<(usize, usize)>,
    ) -> Result<Self> {
        for (i, &cap) in left_caps.iter().chain(right_caps.iter()).enumerate() {
            if cap == 0 {
                return Err(Error::NonPositiveCap { part: i });
            }
        }
        for &(l, r) in &edges {
            if l >= left_caps.len() {
                return Err(Error::VertexOutOfRange {
                    vertex: l,
                    vertices: left_caps.len(),
                });
            }
            if r >= right_caps.len() {
                return Err(Error::VertexOutOfRange {
                    vertex: r,
                    vertices: right_caps.len(),
                });
            }
        }
        Ok(Self {
            left_caps,
            right_caps,
            edges,
        })
    }

    pub fn n_left(&self) -> usize {
        self.left_caps.len()
    }

    pub fn n_right(&self) -> usize {
        self.right_caps.len()
    }

    pub fn left_caps(&self) -> &[usize] {
        &self.left_caps
    }

    pub fn right_caps(&self) -> &[usize] {
        &self.right_caps
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn n_edges(&self) -> usize {
        self.edges.len()
    }

    /// True iff the edge set `f` uses each vertex at most its capacity.
    /// `f` is a set of edge indices; indices must be distinct.
    pub fn is_simple_b_matching(&self, f: &[usize]) -> Result<bool> {
        let mut left_deg = vec![0usize; self.left_caps.len()];
        let mut right_deg = vec![0usize; self.right_caps.len()];
        for &e in f {
            if e >= self.edges.len() {
                return Err(Error::EdgeIndexOutOfRange {
                    index: e,
                    edges: self.edges.len(),
                });
            }
            let (l, r) = self.edges[e];
            left_deg[l] += 1;
            right_deg[r] += 1;
            if left_deg[l] > self.left_caps[l] || right_deg[r] > self.right_caps[r] {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// The reverse correspondence: ground set = edge indices; the first
    /// matroid's parts are the edge stars of left vertices with the vertex
    /// capacity, the second matroid's parts the stars of right vertices.
    /// Every vertex must have degree at least one. Returns the pair and the
    /// element-index -> edge-index map (the identity, kept for symmetry
    /// with [`MatroidPair::to_bipartite`]).
    pub fn to_matroid_pair(&self) -> Result<(MatroidPair, Vec<usize>)> {
        let mut left_stars: Vec<Vec<usize>> = vec![Vec::new(); self.left_caps.len()];
        let mut right_stars: Vec<Vec<usize>> = vec![Vec::new(); self.right_caps.len()];
        for (e, &(l, r)) in self.edges.iter().enumerate() {
            left_stars[l].push(e);
            right_stars[r].push(e);
        }
        if let Some(v) = left_stars.iter().position(|star| star.is_empty()) {
            return Err(Error::IsolatedVertex {
                vertex: v,
                side: "left",
            });
        }
        if let Some(v) = right_stars.iter().position(|star| star.is_empty()) {
            return Err(Error::IsolatedVertex {
                vertex: v,
                side: "right",
            });
        }
        let n = self.edges.len();
        let m1 = GeneralizedPartitionMatroid::new(n, left_stars, self.left_caps.clone())?;
        let m2 = GeneralizedPartitionMatroid::new(n, right_stars, self.right_caps.clone())?;
        let pair = MatroidPair::new(m1, m2)?;
        Ok((pair, (0..n).collect()))
    }

    /// Endpoint pairs sorted lexicographically; equal multisets of endpoint
    /// pairs mean the multigraphs are the same up to edge reindexing.
    pub fn canonical_edge_list(&self) -> Vec<(usize, usize)> {
        let mut edges = self.edges.clone();
        edges.sort_unstable();
        edges
    }
}
