//! Finite simple graphs and their symmetry.

mod automorphism;
mod local;
mod named;

pub use automorphism::{automorphism_group, group_from_generators};
pub use local::{local_group, LocalAction};
pub use named::named_graph;

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::perm::{Permutation, PermutationGroup};

/// A validated finite simple graph on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<usize>>,
    matrix: Vec<bool>,
    connected: bool,
}

impl Graph {
    /// Validates an edge list: no loops, no repeated edges, at least three vertices.
    ///
    /// ```
    /// use conwalk::Graph;
    /// let triangle = Graph::from_edges(3, &[(0, 1), (1, 2), (2, 0)]).unwrap();
    /// assert!(triangle.is_connected());
    /// assert_eq!(triangle.valence(), Some(2));
    /// ```
    pub fn from_edges(vertex_count: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        if vertex_count < 3 {
            return Err(Error::TooFewVertices(vertex_count));
        }
        let n = vertex_count;
        let mut matrix = vec![false; n * n];
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, count: n });
                }
            }
            if u == v {
                return Err(Error::LoopEdge(u));
            }
            if matrix[u * n + v] {
                return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
            }
            matrix[u * n + v] = true;
            matrix[v * n + u] = true;
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        let mut graph = Graph {
            adjacency,
            matrix,
            connected: false,
        };
        graph.connected = graph.component_of(0).len() == n;
        Ok(graph)
    }

    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    #[inline]
    pub fn is_adjacent(&self, u: usize, v: usize) -> bool {
        self.matrix[u * self.vertex_count() + v]
    }

    pub fn is_connected(&self) -> bool {
        self.connected
    }

    /// The common degree if the graph is regular.
    pub fn valence(&self) -> Option<usize> {
        let d = self.degree(0);
        self.adjacency.iter().all(|l| l.len() == d).then_some(d)
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, l)| l.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
            .collect()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    fn component_of(&self, start: usize) -> Vec<usize> {
        let mut seen = vec![false; self.vertex_count()];
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        let mut out = vec![start];
        while let Some(u) = queue.pop_front() {
            for &w in &self.adjacency[u] {
                if !seen[w] {
                    seen[w] = true;
                    out.push(w);
                    queue.push_back(w);
                }
            }
        }
        out
    }

    pub fn is_automorphism(&self, p: &Permutation) -> bool {
        p.degree() == self.vertex_count()
            && self
                .edges()
                .iter()
                .all(|&(u, v)| self.is_adjacent(p.apply(u), p.apply(v)))
    }

    /// Whether consecutive entries of `vertices` are adjacent.
    pub fn is_walk(&self, vertices: &[usize]) -> bool {
        vertices.iter().all(|&v| v < self.vertex_count()) && vertices.windows(2).all(|w| self.is_adjacent(w[0], w[1]))
    }

    /// All `n`-arcs: walks of length `n` with no immediate reversal, in lexicographic order.
    pub fn n_arcs(&self, n: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut current = Vec::with_capacity(n + 1);
        for v in 0..self.vertex_count() {
            current.push(v);
            self.extend_arcs(n, &mut current, &mut out);
            current.pop();
        }
        out
    }

    fn extend_arcs(&self, n: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == n + 1 {
            out.push(current.clone());
            return;
        }
        let last = *current.last().unwrap();
        let before = current.len().checked_sub(2).map(|i| current[i]);
        for &w in &self.adjacency[last] {
            if Some(w) != before {
                current.push(w);
                self.extend_arcs(n, current, out);
                current.pop();
            }
        }
    }

    /// Length of a shortest cycle, if any.
    pub fn girth(&self) -> Option<usize> {
        let n = self.vertex_count();
        let mut best: Option<usize> = None;
        for s in 0..n {
            let mut dist = vec![usize::MAX; n];
            let mut parent = vec![usize::MAX; n];
            dist[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adjacency[u] {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        let len = dist[u] + dist[w] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }
}

/// Whether `group` is transitive on the `n`-arcs of `graph`.
pub fn is_n_arc_transitive(group: &PermutationGroup, graph: &Graph, n: usize) -> Result<bool> {
    assert!(n >= 1, "n-arcs need n >= 1");
    let arcs = graph.n_arcs(n);
    let Some(first) = arcs.first() else {
        return Err(Error::NoNArcs(n));
    };
    Ok(group.tuple_orbit(first).len() == arcs.len())
}

/// Whether `group` is transitive on vertices.
pub fn is_vertex_transitive(group: &PermutationGroup, graph: &Graph) -> bool {
    group.orbit(0).len() == graph.vertex_count()
}

/// Unordered pairs `(u, v)`, `u < v`, with identical neighborhoods.
pub fn twin_vertices(graph: &Graph) -> Vec<(usize, usize)> {
    let n = graph.vertex_count();
    let mut out = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if graph.neighbors(u) == graph.neighbors(v) {
                out.push((u, v));
            }
        }
    }
    out
}

/// The lexicographic product `Γ[K̄_m]` together with its vertex numbering.
///
/// Vertex `(v, i)` of the blow-up is point `v·m + i`.
#[derive(Debug, Clone)]
pub struct Blowup {
    pub graph: Graph,
    pub base_vertices: usize,
    pub m: usize,
}

impl Blowup {
    #[inline]
    pub fn point(&self, v: usize, i: usize) -> usize {
        v * self.m + i
    }

    #[inline]
    pub fn fiber(&self, point: usize) -> (usize, usize) {
        (point / self.m, point % self.m)
    }

    /// Twin classes induced by the construction: one per base vertex.
    pub fn fibers(&self) -> Vec<Vec<usize>> {
        (0..self.base_vertices)
            .map(|v| (0..self.m).map(|i| self.point(v, i)).collect())
            .collect()
    }
}

/// Replaces each vertex by an independent set of size `m`, joining fibers over adjacent vertices.
pub fn lex_blowup(base: &Graph, m: usize) -> Result<Blowup> {
    if m == 0 {
        return Err(Error::BadParameters("blow-up factor must be positive".into()));
    }
    let mut edges = Vec::new();
    for (u, v) in base.edges() {
        for i in 0..m {
            for j in 0..m {
                edges.push((u * m + i, v * m + j));
            }
        }
    }
    Ok(Blowup {
        graph: Graph::from_edges(base.vertex_count() * m, &edges)?,
        base_vertices: base.vertex_count(),
        m,
    })
}

/// Generators of the wreath subgroup `S_m ≀ G` acting on the blow-up.
///
/// The base generators act on the first coordinate; a transposition and an
/// `m`-cycle on the fiber over vertex 0 generate the fiber symmetric group,
/// whose conjugates under a transitive `G` cover every fiber.
pub fn wreath_generators(blowup: &Blowup, base_group: &PermutationGroup) -> Vec<Permutation> {
    let m = blowup.m;
    let total = blowup.graph.vertex_count();
    let mut gens = Vec::new();
    for g in base_group.generators() {
        let images = (0..total)
            .map(|p| {
                let (v, i) = blowup.fiber(p);
                blowup.point(g.apply(v), i)
            })
            .collect();
        gens.push(Permutation::from_images(images).expect("lifted automorphism is a bijection"));
    }
    if m >= 2 {
        gens.push(Permutation::transposition(
            total,
            blowup.point(0, 0),
            blowup.point(0, 1),
        ));
        let cycle: Vec<usize> = (0..m).map(|i| blowup.point(0, i)).collect();
        gens.push(Permutation::from_cycles(total, &[&cycle]).expect("fiber cycle is valid"));
    }
    gens
}
