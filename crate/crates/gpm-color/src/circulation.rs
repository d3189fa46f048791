//! Integral circulations with per-arc lower and upper bounds, solved by the
//! excess-node reduction to max flow. Infeasible instances yield a vertex
//! set whose demand strictly exceeds its outgoing capacity, checkable with
//! [`violating_cut_check`].

use crate::error::{Error, Result};

/// Upper bound of an arc.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Bound {
    Finite(u64),
    Unbounded,
}

impl Bound {
    fn at_least(&self, lower: u64) -> bool {
        match *self {
            Bound::Finite(c) => c >= lower,
            Bound::Unbounded => true,
        }
    }
}

/// Directed arc with a nonnegative lower bound and an upper bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Arc {
    pub tail: usize,
    pub head: usize,
    pub lower: u64,
    pub upper: Bound,
}

impl Arc {
    pub fn new(tail: usize, head: usize, lower: u64, upper: Bound) -> Self {
        Self {
            tail,
            head,
            lower,
            upper,
        }
    }

    pub fn bounded(tail: usize, head: usize, lower: u64, upper: u64) -> Self {
        Self::new(tail, head, lower, Bound::Finite(upper))
    }
}

/// Digraph with arc bounds; duplicate arcs are allowed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CirculationInstance {
    pub n_vertices: usize,
    pub arcs: Vec<Arc>,
}

impl CirculationInstance {
    pub fn new(n_vertices: usize, arcs: Vec<Arc>) -> Result<Self> {
        let inst = Self { n_vertices, arcs };
        inst.validate()?;
        Ok(inst)
    }

    fn validate(&self) -> Result<()> {
        for (i, a) in self.arcs.iter().enumerate() {
            if a.tail >= self.n_vertices || a.head >= self.n_vertices {
                return Err(Error::MalformedInstance {
                    reason: format!("arc {i} has an endpoint outside 0..{}", self.n_vertices),
                });
            }
            if !a.upper.at_least(a.lower) {
                return Err(Error::MalformedInstance {
                    reason: format!("arc {i} has lower bound above its upper bound"),
                });
            }
        }
        Ok(())
    }

    /// A finite stand-in for `Unbounded` that no feasible circulation can
    /// reach: one more than the sum of all finite bounds.
    fn unbounded_substitute(&self) -> u128 {
        let mut total: u128 = 1;
        for a in &self.arcs {
            total += a.lower as u128;
            if let Bound::Finite(c) = a.upper {
                total += c as u128;
            }
        }
        total
    }
}

/// Either an integral feasible circulation (one value per arc, in input
/// order) or a vertex set violating the feasibility inequality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CirculationResult {
    Flow(Vec<u64>),
    Cut(Vec<usize>),
}

/// Finds an integral circulation with `lower <= f <= upper` on every arc and
/// exact conservation at every vertex, or a witness cut `U` with
/// `sum of lower bounds into U > sum of upper bounds out of U`.
pub fn solve_circulation(inst: &CirculationInstance) -> Result<CirculationResult> {
    inst.validate()?;
    let big = inst.unbounded_substitute();
    let n = inst.n_vertices;

    // Excess-node reduction: saturate lower bounds, then repair the
    // imbalance through a max flow from a super source to a super sink.
    let source = n;
    let sink = n + 1;
    let mut net = FlowNetwork::new(n + 2);

    let arc_edges: Vec<usize> = inst
        .arcs
        .iter()
        .map(|a| {
            let residual_cap = match a.upper {
                Bound::Finite(c) => (c - a.lower) as u128,
                Bound::Unbounded => big - a.lower as u128,
            };
            net.add_edge(a.tail, a.head, residual_cap)
        })
        .collect();

    // excess[v] = (lower-bound inflow) - (lower-bound outflow)
    let mut excess = vec![0i128; n];
    for a in &inst.arcs {
        excess[a.head] += a.lower as i128;
        excess[a.tail] -= a.lower as i128;
    }
    let mut demand_total: u128 = 0;
    for (v, &e) in excess.iter().enumerate() {
        if e > 0 {
            net.add_edge(source, v, e as u128);
            demand_total += e as u128;
        } else if e < 0 {
            net.add_edge(v, sink, (-e) as u128);
        }
    }

    let pushed = net.max_flow(source, sink);
    if pushed == demand_total {
        let flow = arc_edges
            .iter()
            .zip(&inst.arcs)
            .map(|(&e, a)| a.lower + net.flow_on(e) as u64)
            .collect();
        Ok(CirculationResult::Flow(flow))
    } else {
        // Vertices on the source side of the min cut form a violating set.
        let reachable = net.residual_reachable(source);
        let cut: Vec<usize> = (0..n).filter(|&v| reachable[v]).collect();
        Ok(CirculationResult::Cut(cut))
    }
}

/// Evaluates both sides of the feasibility inequality for `u`: the sum of
/// lower bounds on arcs entering `u` and the sum of upper bounds on arcs
/// leaving it. A strict `>` between them certifies infeasibility.
pub fn violating_cut_check(inst: &CirculationInstance, u: &[usize]) -> Result<(u64, Bound)> {
    for &v in u {
        if v >= inst.n_vertices {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                vertices: inst.n_vertices,
            });
        }
    }
    let mut in_u = vec![false; inst.n_vertices];
    for &v in u {
        in_u[v] = true;
    }
    let mut lower_in: u64 = 0;
    let mut upper_out: u64 = 0;
    let mut unbounded_out = false;
    for a in &inst.arcs {
        if !in_u[a.tail] && in_u[a.head] {
            lower_in += a.lower;
        }
        if in_u[a.tail] && !in_u[a.head] {
            match a.upper {
                Bound::Finite(c) => upper_out += c,
                Bound::Unbounded => unbounded_out = true,
            }
        }
    }
    let upper = if unbounded_out {
        Bound::Unbounded
    } else {
        Bound::Finite(upper_out)
    };
    Ok((lower_in, upper))
}

/// True when the flow vector is within bounds on every arc and conserved at
/// every vertex.
pub fn is_feasible_circulation(inst: &CirculationInstance, flow: &[u64]) -> bool {
    if flow.len() != inst.arcs.len() {
        return false;
    }
    let mut balance = vec![0i128; inst.n_vertices];
    for (a, &f) in inst.arcs.iter().zip(flow) {
        if f < a.lower || !a.upper.at_least(f) {
            return false;
        }
        balance[a.head] += f as i128;
        balance[a.tail] -= f as i128;
    }
    balance.iter().all(|&b| b == 0)
}

/// Max flow via shortest augmenting paths on an adjacency-list residual
/// graph. Deterministic: arcs are scanned in insertion order.
struct FlowNetwork {
    // (to, capacity remaining, paired reverse edge)
    edges: Vec<(usize, u128, usize)>,
    adjacency: Vec<Vec<usize>>,
    initial_caps: Vec<u128>,
}

impl FlowNetwork {
    fn new(n: usize) -> Self {
        Self {
            edges: Vec::new(),
            adjacency: vec![Vec::new(); n],
            initial_caps: Vec::new(),
        }
    }

    fn add_edge(&mut self, from: usize, to: usize, cap: u128) -> usize {
        let id = self.edges.len();
        self.edges.push((to, cap, id + 1));
        self.edges.push((from, 0, id));
        self.adjacency[from].push(id);
        self.adjacency[to].push(id + 1);
        self.initial_caps.push(cap);
        self.initial_caps.push(0);
        id
    }

    fn flow_on(&self, edge: usize) -> u128 {
        self.initial_caps[edge] - self.edges[edge].1
    }

    fn max_flow(&mut self, source: usize, sink: usize) -> u128 {
        let mut total = 0u128;
        loop {
            let mut parent_edge = vec![usize::MAX; self.adjacency.len()];
            let mut queue = std::collections::VecDeque::new();
            let mut seen = vec![false; self.adjacency.len()];
            seen[source] = true;
            queue.push_back(source);
            'bfs: while let Some(v) = queue.pop_front() {
                for &e in &self.adjacency[v] {
                    let (to, cap, _) = self.edges[e];
                    if cap > 0 && !seen[to] {
                        seen[to] = true;
                        parent_edge[to] = e;
                        if to == sink {
                            break 'bfs;
                        }
                        queue.push_back(to);
                    }
                }
            }
            if !seen[sink] {
                return total;
            }
            let mut bottleneck = u128::MAX;
            let mut v = sink;
            while v != source {
                let e = parent_edge[v];
                bottleneck = bottleneck.min(self.edges[e].1);
                v = self.edges[self.edges[e].2].0;
            }
            let mut v = sink;
            while v != source {
                let e = parent_edge[v];
                self.edges[e].1 -= bottleneck;
                let rev = self.edges[e].2;
                self.edges[rev].1 += bottleneck;
                v = self.edges[rev].0;
            }
            total += bottleneck;
        }
    }

    fn residual_reachable(&self, from: usize) -> Vec<bool> {
        let mut seen = vec![false; self.adjacency.len()];
        let mut stack = vec![from];
        seen[from] = true;
        while let Some(v) = stack.pop() {
            for &e in &self.adjacency[v] {
                let (to, cap, _) = self.edges[e];
                if cap > 0 && !seen[to] {
                    seen[to] = true;
                    stack.push(to);
                }
            }
        }
        seen
    }
}
