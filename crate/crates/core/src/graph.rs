//! Containment graphs `G(A, B.B)` and short even cycles.
//!
//! Both colour classes are copies of `B`. Each `a ∈ A` contributes a single
//! edge `(b1, b2)` for the lexicographically smallest representation
//! `a = b1·b2` with `b1 ≤ b2`, so `E(G) = |A|` and `V(G) = 2|B|`. The edge
//! joins `b1` in the left copy to `b2` in the right copy.

use alloc::collections::VecDeque;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;
use num_traits::One;

use crate::arith::valuation;
use crate::elimination::SelectionResult;
use crate::error::invalid;
use crate::{Error, Result};

/// Values that can label vertices and edges of a containment graph.
pub trait GraphElement: Ord + Clone + fmt::Debug {
    /// Whether `a·b = target`.
    fn is_product(a: &Self, b: &Self, target: &Self) -> bool;

    /// Smallest `(i, j)`, `i ≤ j`, with `base[i]·base[j] = target`, where
    /// `base` is sorted and deduplicated.
    fn representation(base: &[Self], target: &Self) -> Option<(usize, usize)> {
        for i in 0..base.len() {
            for j in i..base.len() {
                if Self::is_product(&base[i], &base[j], target) {
                    return Some((i, j));
                }
            }
        }
        None
    }

    /// Whether `∏ lhs = ∏ rhs`, evaluated exactly.
    fn products_agree(lhs: &[&Self], rhs: &[&Self]) -> bool;
}

impl GraphElement for u128 {
    fn is_product(a: &Self, b: &Self, target: &Self) -> bool {
        a.checked_mul(*b) == Some(*target)
    }

    fn representation(base: &[Self], target: &Self) -> Option<(usize, usize)> {
        for (i, &b1) in base.iter().enumerate() {
            if b1 == 0 {
                if *target == 0 {
                    return Some((i, i));
                }
                continue;
            }
            if b1.checked_mul(b1).is_none_or(|sq| sq > *target) {
                break;
            }
            if target.is_multiple_of(b1) {
                if let Ok(j) = base[i..].binary_search(&(target / b1)) {
                    return Some((i, i + j));
                }
            }
        }
        None
    }

    fn products_agree(lhs: &[&Self], rhs: &[&Self]) -> bool {
        let prod = |xs: &[&u128]| {
            xs.iter()
                .fold(BigUint::one(), |acc, &&x| acc * BigUint::from(x))
        };
        prod(lhs) == prod(rhs)
    }
}

/// Bipartite multigraph with `left` + `right` vertices. Left vertex `i` has
/// id `i`, right vertex `j` has id `left + j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteMultigraph {
    left: usize,
    right: usize,
    edges: Vec<(usize, usize)>,
}

/// A cycle given by its vertex ids and the edge ids joining consecutive
/// vertices (`edges[i]` joins `vertices[i]` and `vertices[i + 1]`, cyclically).
/// A two-vertex cycle is a pair of parallel edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EvenCycle {
    pub vertices: Vec<usize>,
    pub edges: Vec<usize>,
}

impl EvenCycle {
    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Two parallel edges between the same pair of vertices.
    pub fn is_parallel_pair(&self) -> bool {
        self.edges.len() == 2
    }
}

impl BipartiteMultigraph {
    /// Edges are `(left index, right index)` pairs.
    pub fn new(left: usize, right: usize, edges: Vec<(usize, usize)>) -> Result<Self> {
        if let Some(&(u, v)) = edges.iter().find(|&&(u, v)| u >= left || v >= right) {
            return Err(invalid!(
                "edge ({u}, {v}) is outside a {left}×{right} bipartite graph"
            ));
        }
        Ok(BipartiteMultigraph { left, right, edges })
    }

    pub fn vertex_count(&self) -> usize {
        self.left + self.right
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn left_count(&self) -> usize {
        self.left
    }

    /// `(left index, right index)` of every edge, in insertion order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Vertex ids `(u, v)` of edge `e`.
    pub fn endpoints(&self, e: usize) -> (usize, usize) {
        let (u, v) = self.edges[e];
        (u, self.left + v)
    }

    /// `adjacency[v]` lists `(neighbour, edge id)`.
    pub fn adjacency(&self) -> Vec<Vec<(usize, usize)>> {
        let mut adj = vec![Vec::new(); self.vertex_count()];
        for e in 0..self.edges.len() {
            let (u, v) = self.endpoints(e);
            adj[u].push((v, e));
            adj[v].push((u, e));
        }
        adj
    }

    /// First pair of parallel edges, if any.
    pub fn parallel_pair(&self) -> Option<EvenCycle> {
        let mut order: Vec<usize> = (0..self.edges.len()).collect();
        order.sort_by_key(|&e| self.edges[e]);
        order.windows(2).find_map(|w| {
            (self.edges[w[0]] == self.edges[w[1]]).then(|| {
                let (u, v) = self.endpoints(w[0]);
                EvenCycle {
                    vertices: vec![u, v],
                    edges: vec![w[0], w[1]],
                }
            })
        })
    }

    /// Shortest cycle of length `≤ max_len`, `max_len` even and `≥ 4`.
    ///
    /// Parallel edges are reported first as a two-edge cycle. Otherwise a
    /// breadth-first search from every vertex finds the girth: a non-tree
    /// edge `(u, v)` closes a walk of length `dist(u) + dist(v) + 1`, and
    /// the minimum over all roots is attained by a simple cycle.
    pub fn shortest_even_cycle(&self, max_len: usize) -> Result<Option<EvenCycle>> {
        if max_len < 4 || !max_len.is_multiple_of(2) {
            return Err(invalid!(
                "max_len must be even and at least 4, got {max_len}"
            ));
        }
        if let Some(pair) = self.parallel_pair() {
            return Ok(Some(pair));
        }
        let adj = self.adjacency();
        let n = self.vertex_count();
        let mut best: Option<(usize, EvenCycle)> = None;
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![(usize::MAX, usize::MAX); n]; // (vertex, edge)
        let mut queue = VecDeque::new();
        for root in 0..n {
            let limit = best.as_ref().map_or(max_len, |(len, _)| len - 1);
            if limit < 4 {
                break;
            }
            dist.fill(usize::MAX);
            dist[root] = 0;
            queue.clear();
            queue.push_back(root);
            let mut found: Option<(usize, usize, usize, usize)> = None; // len, u, v, e
            while let Some(u) = queue.pop_front() {
                if 2 * dist[u] + 1 > limit {
                    break;
                }
                for &(v, e) in &adj[u] {
                    if parent[u].1 == e && u != root {
                        continue;
                    }
                    if dist[v] == usize::MAX {
                        dist[v] = dist[u] + 1;
                        parent[v] = (u, e);
                        queue.push_back(v);
                    } else if parent[v].1 != e || v == root {
                        let len = dist[u] + dist[v] + 1;
                        if len <= limit && found.is_none_or(|f| len < f.0) {
                            found = Some((len, u, v, e));
                        }
                    }
                }
            }
            if let Some((len, u, v, e)) = found {
                let cycle = close_cycle(root, u, v, e, &parent);
                debug_assert!(cycle.len() <= len);
                best = Some((cycle.len(), cycle));
            }
        }
        Ok(best.map(|(_, c)| c))
    }

    /// Whether the graph is a forest (no cycles at all).
    pub fn is_forest(&self) -> bool {
        if self.parallel_pair().is_some() {
            return false;
        }
        // union-find over vertices
        let mut root: Vec<usize> = (0..self.vertex_count()).collect();
        fn find(root: &mut [usize], mut x: usize) -> usize {
            while root[x] != x {
                root[x] = root[root[x]];
                x = root[x];
            }
            x
        }
        for e in 0..self.edges.len() {
            let (u, v) = self.endpoints(e);
            let (ru, rv) = (find(&mut root, u), find(&mut root, v));
            if ru == rv {
                return false;
            }
            root[ru] = rv;
        }
        true
    }
}

fn close_cycle(root: usize, u: usize, v: usize, e: usize, parent: &[(usize, usize)]) -> EvenCycle {
    // tree paths root -> x as (vertices, edges)
    let path_to = |mut x: usize| {
        let mut verts = vec![x];
        let mut edges = Vec::new();
        while x != root {
            let (p, pe) = parent[x];
            edges.push(pe);
            verts.push(p);
            x = p;
        }
        verts.reverse();
        edges.reverse();
        (verts, edges)
    };
    let (pu, eu) = path_to(u);
    let (pv, ev) = path_to(v);
    // drop the shared prefix so the walk u -e- v closes a simple cycle
    let shared = pu.iter().zip(&pv).take_while(|(a, b)| a == b).count() - 1;
    let mut vertices: Vec<usize> = pu[shared..].to_vec();
    let mut edges: Vec<usize> = eu[shared..].to_vec();
    edges.push(e);
    vertices.extend(pv[shared + 1..].iter().rev());
    edges.extend(ev[shared..].iter().rev());
    EvenCycle { vertices, edges }
}

/// One edge of a containment graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabelledEdge<'a, T> {
    pub b1: &'a T,
    pub b2: &'a T,
    pub label: &'a T,
    /// Position of the label in the progression `A`.
    pub index: usize,
}

/// `G(A, B.B)` with labels; see the module docs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContainmentGraph<T> {
    base: Vec<T>,
    labels: Vec<T>,
    graph: BipartiteMultigraph,
}

/// Builds the containment graph, failing on the first element of `A`
/// without a representation in `B.B`.
pub fn build_graph<T: GraphElement>(a: &[T], b: &[T]) -> Result<ContainmentGraph<T>> {
    let mut base = b.to_vec();
    base.sort();
    base.dedup();
    let mut edges = Vec::with_capacity(a.len());
    for x in a {
        let pair =
            T::representation(&base, x).ok_or_else(|| Error::NotInProductSet(format!("{x:?}")))?;
        edges.push(pair);
    }
    let n = base.len();
    Ok(ContainmentGraph {
        base,
        labels: a.to_vec(),
        graph: BipartiteMultigraph::new(n, n, edges)?,
    })
}

impl<T: GraphElement> ContainmentGraph<T> {
    /// Sorted, deduplicated `B`.
    pub fn base(&self) -> &[T] {
        &self.base
    }

    pub fn labels(&self) -> &[T] {
        &self.labels
    }

    pub fn graph(&self) -> &BipartiteMultigraph {
        &self.graph
    }

    /// `2|B|`.
    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    /// `|A|`.
    pub fn edge_count(&self) -> usize {
        self.graph.edge_count()
    }

    pub fn edge(&self, e: usize) -> LabelledEdge<'_, T> {
        let (i, j) = self.graph.edges()[e];
        LabelledEdge {
            b1: &self.base[i],
            b2: &self.base[j],
            label: &self.labels[e],
            index: e,
        }
    }

    pub fn edges(&self) -> impl Iterator<Item = LabelledEdge<'_, T>> + '_ {
        (0..self.edge_count()).map(|e| self.edge(e))
    }

    /// Element of `B` sitting at vertex id `v`.
    pub fn vertex_value(&self, v: usize) -> &T {
        &self.base[v % self.base.len()]
    }

    /// `E = |A|`, `V = 2|B|` and every edge's endpoints multiply to its label.
    pub fn accounting_holds(&self) -> bool {
        self.edge_count() == self.labels.len()
            && self.vertex_count() == 2 * self.base.len()
            && self.edges().all(|e| T::is_product(e.b1, e.b2, e.label))
    }

    /// Along a cycle, the labels at even positions multiply to the same value
    /// as the labels at odd positions.
    pub fn cycle_labels_balance(&self, cycle: &EvenCycle) -> bool {
        let even: Vec<&T> = cycle
            .edges
            .iter()
            .step_by(2)
            .map(|&e| &self.labels[e])
            .collect();
        let odd: Vec<&T> = cycle
            .edges
            .iter()
            .skip(1)
            .step_by(2)
            .map(|&e| &self.labels[e])
            .collect();
        T::products_agree(&even, &odd)
    }
}

/// Shortest cycle of length `≤ max_len` in a containment graph.
pub fn find_shortest_even_cycle<T: GraphElement>(
    g: &ContainmentGraph<T>,
    max_len: usize,
) -> Result<Option<EvenCycle>> {
    g.graph.shortest_even_cycle(max_len)
}

/// `ord_p` bookkeeping for one edge of a cycle found by
/// [`verify_acyclicity_argument`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderEntry {
    pub label: u128,
    pub order: u32,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AcyclicityVerdict {
    /// The graph is a forest, so `|A| = E < V = 2|B|`.
    Forest { edges: usize, vertices: usize },
    /// A cycle exists; `ledger` lists `ord_p(label)` along the cycle for the
    /// selected prime `p` of its first edge, next to `ord_p(D)`.
    Cycle {
        cycle: EvenCycle,
        prime: u128,
        scale_order: u32,
        ledger: Vec<OrderEntry>,
    },
}

impl AcyclicityVerdict {
    pub fn is_forest(&self) -> bool {
        matches!(self, AcyclicityVerdict::Forest { .. })
    }
}

/// Builds `G(D·A'', B.B)` for a unique-divisor selection and checks that it
/// has no cycles.
pub fn verify_acyclicity_argument(
    selection: &SelectionResult,
    scale: u64,
    base: &[u64],
) -> Result<AcyclicityVerdict> {
    if scale == 0 {
        return Err(invalid!("scale D must be positive"));
    }
    for pair in &selection.pairs {
        if pair.term % pair.prime != 0 {
            return Err(invalid!(
                "prime {} does not divide its term {}",
                pair.prime,
                pair.term
            ));
        }
        if let Some(other) = selection
            .pairs
            .iter()
            .find(|o| o.term != pair.term && o.term % pair.prime == 0)
        {
            return Err(invalid!(
                "prime {} divides both {} and {}",
                pair.prime,
                pair.term,
                other.term
            ));
        }
    }
    let a: Vec<u128> = selection
        .pairs
        .iter()
        .map(|p| {
            p.term
                .checked_mul(scale as u128)
                .ok_or_else(|| invalid!("D·{} overflows", p.term))
        })
        .collect::<Result<_>>()?;
    let b: Vec<u128> = base.iter().map(|&x| x as u128).collect();
    let g = build_graph(&a, &b)?;
    let span = g.vertex_count().max(4);
    let max_len = span + span % 2;
    match find_shortest_even_cycle(&g, max_len)? {
        None => Ok(AcyclicityVerdict::Forest {
            edges: g.edge_count(),
            vertices: g.vertex_count(),
        }),
        Some(cycle) => {
            let prime = selection.pairs[cycle.edges[0]].prime;
            let ledger = cycle
                .edges
                .iter()
                .map(|&e| OrderEntry {
                    label: g.labels[e],
                    order: valuation(prime, g.labels[e]),
                })
                .collect();
            Ok(AcyclicityVerdict::Cycle {
                cycle,
                prime,
                scale_order: valuation(prime, scale as u128),
                ledger,
            })
        }
    }
}

/// Edge density against the `n^{1+1/k}` scale of `C_{2k}`-free graphs.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EdgeBoundReport {
    pub vertices: usize,
    pub k: u32,
    pub edges: usize,
    /// `edges / n^{1 + 1/k}`.
    pub ratio: f64,
}

pub fn bondy_simonovits_report(vertices: usize, k: u32, edges: usize) -> Result<EdgeBoundReport> {
    if vertices == 0 || k < 2 {
        return Err(invalid!("need n ≥ 1 and k ≥ 2 (n={vertices}, k={k})"));
    }
    let scale = libm::pow(vertices as f64, 1.0 + 1.0 / k as f64);
    Ok(EdgeBoundReport {
        vertices,
        k,
        edges,
        ratio: edges as f64 / scale,
    })
}
