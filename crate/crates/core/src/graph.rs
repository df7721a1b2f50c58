//! Simple undirected graphs with bitmask adjacency.
//!
//! Vertex sets are `u32` masks and edge sets are `u128` masks over the
//! canonical edge order, so a graph holds at most 32 vertices and 128 edges.
//! Exhaustive searches (cycles, automorphisms, colorings) are further capped
//! at [`SEARCH_LIMIT`] vertices.

use crate::error::{Error, Result};

pub type VertexSet = u32;
pub type EdgeSet = u128;

pub const MAX_VERTICES: usize = 32;
pub const MAX_EDGES: usize = 128;
pub const SEARCH_LIMIT: usize = 16;

pub(crate) fn check_search_limit(operation: &'static str, n: usize) -> Result<()> {
    if n > SEARCH_LIMIT {
        return Err(Error::SearchLimit {
            operation,
            found: n,
            limit: SEARCH_LIMIT,
        });
    }
    Ok(())
}

/// Iterate the indices of set bits in a vertex mask, lowest first.
pub fn vertices_of(set: VertexSet) -> impl Iterator<Item = usize> {
    let mut rest = set;
    std::iter::from_fn(move || {
        if rest == 0 {
            return None;
        }
        let v = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        Some(v)
    })
}

/// Iterate the indices of set bits in an edge mask, lowest first.
pub fn edges_of(set: EdgeSet) -> impl Iterator<Item = usize> {
    let mut rest = set;
    std::iter::from_fn(move || {
        if rest == 0 {
            return None;
        }
        let e = rest.trailing_zeros() as usize;
        rest &= rest - 1;
        Some(e)
    })
}

pub fn vertex_set<I: IntoIterator<Item = usize>>(vertices: I) -> VertexSet {
    vertices.into_iter().fold(0, |acc, v| acc | (1 << v))
}

pub fn edge_set<I: IntoIterator<Item = usize>>(edges: I) -> EdgeSet {
    edges.into_iter().fold(0, |acc, e| acc | (1u128 << e))
}

/// An undirected simple graph whose edge list is sorted lexicographically on
/// `(min, max)` endpoint pairs. Edge `i` of the list is bit `i` of every
/// [`EdgeSet`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<VertexSet>,
    stars: Vec<EdgeSet>,
    edge_ids: Vec<Option<u8>>,
}

impl Graph {
    pub fn new<I>(vertex_count: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if vertex_count > MAX_VERTICES {
            return Err(Error::TooManyVertices {
                found: vertex_count,
                limit: MAX_VERTICES,
            });
        }
        let mut list = Vec::new();
        for (u, v) in edges {
            for w in [u, v] {
                if w >= vertex_count {
                    return Err(Error::VertexOutOfRange {
                        vertex: w,
                        vertex_count,
                    });
                }
            }
            if u == v {
                return Err(Error::Loop(u));
            }
            list.push((u.min(v), u.max(v)));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge(w[0].0, w[0].1));
        }
        if list.len() > MAX_EDGES {
            return Err(Error::TooManyEdges {
                found: list.len(),
                limit: MAX_EDGES,
            });
        }

        let mut adjacency = vec![0; vertex_count];
        let mut stars = vec![0; vertex_count];
        let mut edge_ids = vec![None; vertex_count * vertex_count];
        for (i, &(u, v)) in list.iter().enumerate() {
            adjacency[u] |= 1 << v;
            adjacency[v] |= 1 << u;
            stars[u] |= 1u128 << i;
            stars[v] |= 1u128 << i;
            edge_ids[u * vertex_count + v] = Some(i as u8);
            edge_ids[v * vertex_count + u] = Some(i as u8);
        }
        Ok(Graph {
            n: vertex_count,
            edges: list,
            adjacency,
            stars,
            edge_ids,
        })
    }

    pub fn empty(vertex_count: usize) -> Result<Self> {
        Graph::new(vertex_count, [])
    }

    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::Unsupported(format!("cycle of length {n}")));
        }
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    pub fn path(n: usize) -> Result<Self> {
        Graph::new(n, (1..n).map(|i| (i - 1, i)))
    }

    pub fn complete(n: usize) -> Result<Self> {
        Graph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
    }

    /// `K_{a,b}` with parts `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Result<Self> {
        Graph::new(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))))
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, e: usize) -> (usize, usize) {
        self.edges[e]
    }

    pub fn all_vertices(&self) -> VertexSet {
        if self.n == 32 {
            u32::MAX
        } else {
            (1u32 << self.n) - 1
        }
    }

    pub fn all_edges(&self) -> EdgeSet {
        let m = self.edges.len();
        if m == 128 {
            u128::MAX
        } else {
            (1u128 << m) - 1
        }
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].count_ones() as usize
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn is_adjacent(&self, u: usize, v: usize) -> bool {
        self.adjacency[u] & (1 << v) != 0
    }

    /// Edges incident with `v`.
    pub fn star(&self, v: usize) -> EdgeSet {
        self.stars[v]
    }

    pub fn edge_id(&self, u: usize, v: usize) -> Option<usize> {
        if u >= self.n || v >= self.n {
            return None;
        }
        self.edge_ids[u * self.n + v].map(usize::from)
    }

    /// The cut `∂X`: edges with exactly one endpoint in `x`.
    pub fn cut(&self, x: VertexSet) -> EdgeSet {
        vertices_of(x).fold(0, |acc, v| acc ^ self.stars[v])
    }

    /// Edges with both endpoints in `x`.
    pub fn induced_edges(&self, x: VertexSet) -> EdgeSet {
        let touching = vertices_of(x).fold(0, |acc, v| acc | self.stars[v]);
        touching & !self.cut(x)
    }

    pub fn edge_endpoints(&self, edges: EdgeSet) -> VertexSet {
        edges_of(edges).fold(0, |acc, e| {
            let (u, v) = self.edges[e];
            acc | (1 << u) | (1 << v)
        })
    }

    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        self.adjacency[v] | (1 << v)
    }

    pub fn is_independent(&self, x: VertexSet) -> bool {
        vertices_of(x).all(|v| self.adjacency[v] & x == 0)
    }

    /// All independent vertex sets of size exactly `k`, in increasing mask
    /// order of their combinations.
    pub fn independent_sets(&self, k: usize) -> Vec<VertexSet> {
        let mut out = Vec::new();
        self.extend_independent(0, 0, k, &mut out);
        out
    }

    fn extend_independent(&self, start: usize, chosen: VertexSet, k: usize, out: &mut Vec<VertexSet>) {
        if chosen.count_ones() as usize == k {
            out.push(chosen);
            return;
        }
        for v in start..self.n {
            if self.adjacency[v] & chosen == 0 {
                self.extend_independent(v + 1, chosen | (1 << v), k, out);
            }
        }
    }

    /// Every independent set of every size, the empty set included.
    pub fn all_independent_sets(&self) -> Vec<VertexSet> {
        (0..=self.n).flat_map(|k| self.independent_sets(k)).collect()
    }

    pub fn is_matching(&self, edges: EdgeSet) -> bool {
        let mut seen: VertexSet = 0;
        for e in edges_of(edges) {
            let (u, v) = self.edges[e];
            let ends = (1 << u) | (1 << v);
            if seen & ends != 0 {
                return false;
            }
            seen |= ends;
        }
        true
    }

    /// Connected components restricted to `active` vertices, using only
    /// edges in `edges`. Components are listed by least vertex.
    pub fn components_within(&self, active: VertexSet, edges: EdgeSet) -> Vec<VertexSet> {
        let mut adjacency = vec![0; self.n];
        for e in edges_of(edges) {
            let (u, v) = self.edges[e];
            if active & (1 << u) != 0 && active & (1 << v) != 0 {
                adjacency[u] |= 1 << v;
                adjacency[v] |= 1 << u;
            }
        }
        let mut unseen = active;
        let mut out = Vec::new();
        while unseen != 0 {
            let root = unseen.trailing_zeros() as usize;
            let mut comp: VertexSet = 1 << root;
            let mut frontier = comp;
            while frontier != 0 {
                let next = vertices_of(frontier).fold(0, |acc, v| acc | adjacency[v]) & !comp;
                comp |= next;
                frontier = next;
            }
            unseen &= !comp;
            out.push(comp);
        }
        out
    }

    pub fn components(&self) -> Vec<VertexSet> {
        self.components_within(self.all_vertices(), self.all_edges())
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Breadth-first distances from `source`; `None` marks unreachable vertices.
    pub fn distances_from(&self, source: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        dist[source] = Some(0);
        let mut seen: VertexSet = 1 << source;
        let mut frontier = seen;
        let mut d = 0;
        while frontier != 0 {
            d += 1;
            let next = vertices_of(frontier).fold(0, |acc, v| acc | self.adjacency[v]) & !seen;
            for v in vertices_of(next) {
                dist[v] = Some(d);
            }
            seen |= next;
            frontier = next;
        }
        dist
    }

    /// Edge distance: 1 for adjacent edges, and `1 + d` where `d` is the least
    /// vertex distance between the two edges otherwise. Zero for `e == f`.
    pub fn edge_distance(&self, e: usize, f: usize) -> Option<usize> {
        if e == f {
            return Some(0);
        }
        let (a, b) = self.edges[e];
        let (c, d) = self.edges[f];
        let da = self.distances_from(a);
        let db = self.distances_from(b);
        [da[c], da[d], db[c], db[d]].into_iter().flatten().min().map(|m| m + 1)
    }

    pub fn is_bipartite(&self) -> bool {
        let mut side = vec![None; self.n];
        for comp in self.components() {
            let root = comp.trailing_zeros() as usize;
            side[root] = Some(false);
            let mut queue = vec![root];
            while let Some(u) = queue.pop() {
                let s = side[u].unwrap();
                for v in vertices_of(self.adjacency[u]) {
                    match side[v] {
                        None => {
                            side[v] = Some(!s);
                            queue.push(v);
                        }
                        Some(t) if t == s => return false,
                        _ => {}
                    }
                }
            }
        }
        true
    }

    /// The induced subgraph on the complement of `removed`, with vertices
    /// renumbered in increasing order. Returns the graph and, for each new
    /// vertex, its original id.
    pub fn delete_vertices(&self, removed: VertexSet) -> (Graph, Vec<usize>) {
        let kept: Vec<usize> = (0..self.n).filter(|v| removed & (1 << v) == 0).collect();
        let mut new_id = vec![usize::MAX; self.n];
        for (i, &v) in kept.iter().enumerate() {
            new_id[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| new_id[u] != usize::MAX && new_id[v] != usize::MAX)
            .map(|&(u, v)| (new_id[u], new_id[v]));
        let g = Graph::new(kept.len(), edges).expect("subgraph of a valid graph");
        (g, kept)
    }

    /// Contract every connected component of the spanning subgraph `(V, s)`
    /// to a single vertex.
    pub fn contract(&self, s: EdgeSet) -> ContractionResult {
        let s = s & self.all_edges();
        let origin = self.components_within(self.all_vertices(), s);
        let mut class_of = vec![0usize; self.n];
        for (i, &comp) in origin.iter().enumerate() {
            for v in vertices_of(comp) {
                class_of[v] = i;
            }
        }
        let mut has_loop = false;
        let mut quotient_edges = Vec::new();
        for (e, &(u, v)) in self.edges.iter().enumerate() {
            if s & (1u128 << e) != 0 {
                continue;
            }
            let (a, b) = (class_of[u], class_of[v]);
            if a == b {
                has_loop = true;
            } else {
                quotient_edges.push((a.min(b), a.max(b)));
            }
        }
        quotient_edges.sort_unstable();
        quotient_edges.dedup();
        let quotient = Graph::new(origin.len(), quotient_edges).expect("quotient is simple");
        ContractionResult {
            quotient,
            has_loop,
            origin,
        }
    }

    /// Whether the graph has a proper vertex coloring with `k` colors; on
    /// success returns one.
    pub fn find_coloring(&self, k: usize) -> Result<Option<Vec<usize>>> {
        check_search_limit("chromatic number", self.n)?;
        if self.n == 0 {
            return Ok(Some(Vec::new()));
        }
        if k == 0 {
            return Ok(None);
        }
        let mut colors = vec![usize::MAX; self.n];
        Ok(self.color_from(0, k, &mut colors).then_some(colors))
    }

    fn color_from(&self, v: usize, k: usize, colors: &mut [usize]) -> bool {
        if v == self.n {
            return true;
        }
        // Symmetry break: a new color may only be the next unused one.
        let used = colors[..v].iter().copied().max().map_or(0, |m| m + 1);
        for c in 0..k.min(used + 1) {
            let clash = vertices_of(self.adjacency[v] & ((1u32 << v) - 1)).any(|u| colors[u] == c);
            if !clash {
                colors[v] = c;
                if self.color_from(v + 1, k, colors) {
                    return true;
                }
            }
        }
        colors[v] = usize::MAX;
        false
    }

    pub fn chromatic_number(&self) -> Result<usize> {
        for k in 0..=self.n {
            if self.find_coloring(k)?.is_some() {
                return Ok(k);
            }
        }
        unreachable!("n colors always suffice")
    }
}

/// Result of contracting an edge set: the simple quotient graph, whether any
/// remaining edge became a loop, and the original vertices behind each
/// quotient vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContractionResult {
    pub quotient: Graph,
    pub has_loop: bool,
    pub origin: Vec<VertexSet>,
}

impl ContractionResult {
    pub fn from_contraction(&self, w: usize) -> bool {
        self.origin[w].count_ones() > 1
    }

    /// Chromatic number of the quotient, or `None` when a loop makes it
    /// uncolorable.
    pub fn chromatic_number(&self) -> Result<Option<usize>> {
        if self.has_loop {
            return Ok(None);
        }
        self.quotient.chromatic_number().map(Some)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(Graph::new(3, [(0, 0)]), Err(Error::Loop(0)));
        assert_eq!(Graph::new(3, [(0, 1), (1, 0)]), Err(Error::DuplicateEdge(0, 1)));
        assert!(matches!(
            Graph::new(3, [(0, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, .. })
        ));
    }

    #[test]
    fn edge_order_is_lexicographic() {
        let g = Graph::new(4, [(3, 2), (1, 0), (0, 2)]).unwrap();
        assert_eq!(g.edges(), &[(0, 1), (0, 2), (2, 3)]);
        assert_eq!(g.edge_id(2, 0), Some(1));
    }

    #[test]
    fn cut_of_empty_set_and_whole_set() {
        let g = Graph::complete(5).unwrap();
        assert_eq!(g.cut(0), 0);
        assert_eq!(g.cut(g.all_vertices()), 0);
        assert_eq!(g.cut(0b1).count_ones(), 4);
    }

    #[test]
    fn contract_nothing_is_identity() {
        let g = Graph::cycle(5).unwrap();
        let c = g.contract(0);
        assert!(!c.has_loop);
        assert_eq!(c.quotient, g);
    }

    #[test]
    fn contracting_a_cycle_minus_an_edge_leaves_a_loop() {
        let g = Graph::cycle(4).unwrap();
        let c = g.contract(g.all_edges() & !1);
        assert!(c.has_loop);
        assert_eq!(c.quotient.vertex_count(), 1);
        assert_eq!(c.chromatic_number().unwrap(), None);
    }

    #[test]
    fn chromatic_numbers_of_small_graphs() {
        assert_eq!(Graph::empty(0).unwrap().chromatic_number().unwrap(), 0);
        assert_eq!(Graph::empty(3).unwrap().chromatic_number().unwrap(), 1);
        assert_eq!(Graph::cycle(5).unwrap().chromatic_number().unwrap(), 3);
        assert_eq!(Graph::complete(5).unwrap().chromatic_number().unwrap(), 5);
        assert_eq!(Graph::complete_bipartite(3, 4).unwrap().chromatic_number().unwrap(), 2);
    }

    #[test]
    fn delete_vertices_renumbers() {
        let g = Graph::cycle(5).unwrap();
        let (h, kept) = g.delete_vertices(0b00100);
        assert_eq!(kept, vec![0, 1, 3, 4]);
        assert_eq!(h.edges(), &[(0, 1), (0, 3), (2, 3)]);
    }

    #[test]
    fn search_limit_is_enforced() {
        let g = Graph::empty(17).unwrap();
        assert!(matches!(g.chromatic_number(), Err(Error::SearchLimit { .. })));
    }
}
