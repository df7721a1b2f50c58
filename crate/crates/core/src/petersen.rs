//! The Petersen graph as the Kneser graph on 2-subsets of `{1,..,5}`.
//!
//! Vertices are the ten pairs in lexicographic order
//! `12, 13, 14, 15, 23, 24, 25, 34, 35, 45` with ids `0..10`, and two
//! vertices are adjacent exactly when their pairs are disjoint.

use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::cycles::{enumerate_cycles, Cycle};
use crate::error::{Error, Result};
use crate::graph::{edges_of, vertices_of, EdgeSet, Graph, VertexSet};
use crate::perm::Permutation;

pub const VERTICES: usize = 10;
pub const EDGES: usize = 15;
pub const ALL_EDGES: EdgeSet = (1 << EDGES) - 1;

/// Vertex ↔ pair correspondence. Pair elements are 0-based (`0..5`) and
/// shown 1-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PetersenLabeling {
    pairs: [(usize, usize); VERTICES],
}

impl PetersenLabeling {
    fn canonical() -> Self {
        let mut pairs = [(0, 0); VERTICES];
        let mut k = 0;
        for i in 0..5 {
            for j in i + 1..5 {
                pairs[k] = (i, j);
                k += 1;
            }
        }
        PetersenLabeling { pairs }
    }

    pub fn pair_of(&self, v: usize) -> (usize, usize) {
        self.pairs[v]
    }

    pub fn vertex_of(&self, i: usize, j: usize) -> usize {
        let key = (i.min(j), i.max(j));
        self.pairs
            .iter()
            .position(|&p| p == key)
            .expect("distinct elements of 0..5")
    }

    /// Vertex named by a 1-based pair such as `"34"`.
    pub fn parse_vertex(&self, name: &str) -> Option<usize> {
        let digits: Vec<usize> = name
            .trim()
            .chars()
            .map(|c| c.to_digit(10).map(|d| d as usize))
            .collect::<Option<_>>()?;
        match digits[..] {
            [i, j] if (1..=5).contains(&i) && (1..=5).contains(&j) && i != j => Some(self.vertex_of(i - 1, j - 1)),
            _ => None,
        }
    }

    pub fn vertex_name(&self, v: usize) -> String {
        let (i, j) = self.pairs[v];
        format!("{}{}", i + 1, j + 1)
    }

    /// Sorted vertex-pair list, e.g. `{13,24,25,34}`.
    pub fn set_name(&self, set: VertexSet) -> String {
        let names: Vec<String> = vertices_of(set).map(|v| self.vertex_name(v)).collect();
        format!("{{{}}}", names.join(","))
    }

    /// Parse a vertex-pair list such as `{34,25,13,24}` in any order.
    pub fn parse_set(&self, text: &str) -> Option<VertexSet> {
        let body = text.trim().strip_prefix('{')?.strip_suffix('}')?;
        if body.trim().is_empty() {
            return Some(0);
        }
        body.split(',').map(|s| self.parse_vertex(s).map(|v| 1 << v)).sum()
    }
}

/// The Petersen graph together with its labeling and precomputed structure.
#[derive(Debug)]
pub struct Petersen {
    graph: Arc<Graph>,
    labeling: PetersenLabeling,
    pentagons: Vec<Cycle>,
    hexagons: Vec<Cycle>,
    edge_distance: [[u8; EDGES]; EDGES],
}

/// The canonical Petersen graph and its labeling.
pub fn petersen() -> (Graph, PetersenLabeling) {
    let p = Petersen::get();
    (p.graph().clone(), p.labeling().clone())
}

impl Petersen {
    pub fn get() -> &'static Petersen {
        static INSTANCE: OnceLock<Petersen> = OnceLock::new();
        INSTANCE.get_or_init(Petersen::build)
    }

    fn build() -> Petersen {
        let labeling = PetersenLabeling::canonical();
        let mut edges = Vec::new();
        for u in 0..VERTICES {
            for v in u + 1..VERTICES {
                let (a, b) = labeling.pairs[u];
                let (c, d) = labeling.pairs[v];
                if a != c && a != d && b != c && b != d {
                    edges.push((u, v));
                }
            }
        }
        let graph = Graph::new(VERTICES, edges).expect("Petersen graph is simple");
        let cycles = enumerate_cycles(&graph, 6).expect("ten vertices");
        let pentagons = cycles.iter().filter(|c| c.len() == 5).cloned().collect();
        let hexagons = (0..VERTICES).map(|v| hexagon_avoiding(&graph, v)).collect();
        let mut edge_distance = [[0u8; EDGES]; EDGES];
        for (e, row) in edge_distance.iter_mut().enumerate() {
            for (f, d) in row.iter_mut().enumerate() {
                *d = graph.edge_distance(e, f).expect("connected") as u8;
            }
        }
        Petersen {
            graph: Arc::new(graph),
            labeling,
            pentagons,
            hexagons,
            edge_distance,
        }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn graph_arc(&self) -> Arc<Graph> {
        Arc::clone(&self.graph)
    }

    pub fn labeling(&self) -> &PetersenLabeling {
        &self.labeling
    }

    pub fn is_petersen(g: &Graph) -> bool {
        g == Petersen::get().graph()
    }

    pub fn vertex(&self, i: usize, j: usize) -> usize {
        self.labeling.vertex_of(i, j)
    }

    /// Edge between `v_{ij}` and `v_{kl}` for 1-based elements.
    pub fn edge_between(&self, ij: (usize, usize), kl: (usize, usize)) -> Option<usize> {
        let u = self.vertex(ij.0 - 1, ij.1 - 1);
        let v = self.vertex(kl.0 - 1, kl.1 - 1);
        self.graph.edge_id(u, v)
    }

    pub fn pentagons(&self) -> &[Cycle] {
        &self.pentagons
    }

    /// `H_v`, the hexagon on the six vertices outside `N[v]`.
    pub fn hexagon_of_vertex(&self, v: usize) -> &Cycle {
        &self.hexagons[v]
    }

    pub fn hexagons(&self) -> &[Cycle] {
        &self.hexagons
    }

    /// `X_m = {v_{im} : i ≠ m}`, a maximum independent set (0-based `m`).
    pub fn max_independent(&self, m: usize) -> VertexSet {
        (0..5)
            .filter(|&i| i != m)
            .fold(0, |acc, i| acc | (1 << self.vertex(i, m)))
    }

    /// `M_{3(m)} = E(P ∖ X_m)`, the three edges pairwise at distance 3.
    pub fn m3(&self, m: usize) -> EdgeSet {
        self.graph
            .induced_edges(self.graph.all_vertices() & !self.max_independent(m))
    }

    pub fn edge_distance(&self, e: usize, f: usize) -> usize {
        self.edge_distance[e][f] as usize
    }

    /// Automorphism of P induced by a permutation of `{1,..,5}`:
    /// `v_{ij} ↦ v_{i^base j^base}`.
    pub fn induced_permutation(&self, base: &Permutation) -> Result<Permutation> {
        if base.degree() != 5 {
            return Err(Error::DegreeMismatch {
                expected: 5,
                found: base.degree(),
            });
        }
        let images = (0..VERTICES)
            .map(|v| {
                let (i, j) = self.labeling.pairs[v];
                self.vertex(base.apply(i), base.apply(j))
            })
            .collect();
        Permutation::from_images(images)
    }

    /// The permutation of `{1,..,5}` inducing a Petersen automorphism, if
    /// `alpha` is one.
    pub fn base_permutation(&self, alpha: &Permutation) -> Option<Permutation> {
        if alpha.degree() != VERTICES {
            return None;
        }
        let images = (0..5)
            .map(|i| {
                let star = self.max_independent(i);
                let image = alpha.image_set(star);
                (0..5).find(|&j| self.max_independent(j) == image)
            })
            .collect::<Option<Vec<_>>>()?;
        let base = Permutation::from_images(images).ok()?;
        (self.induced_permutation(&base).ok()? == *alpha).then_some(base)
    }

    /// Classify a matching by the automorphism type of its edge set.
    pub fn classify_matching(&self, m: EdgeSet) -> Result<MatchingClass> {
        if m & !ALL_EDGES != 0 {
            return Err(Error::EdgeMaskOutOfRange(EDGES));
        }
        if !self.graph.is_matching(m) {
            return Err(Error::NotAMatching);
        }
        let edges: Vec<usize> = edges_of(m).collect();
        let class = match edges.len() {
            0 => MatchingClass::Empty,
            1 => MatchingClass::M1,
            2 => match self.edge_distance(edges[0], edges[1]) {
                2 => MatchingClass::M22,
                3 => MatchingClass::M23,
                _ => return Err(Error::UnclassifiedMatching),
            },
            3 => {
                let mut far = 0;
                for a in 0..3 {
                    for b in a + 1..3 {
                        if self.edge_distance(edges[a], edges[b]) == 3 {
                            far += 1;
                        }
                    }
                }
                match far {
                    3 => MatchingClass::M33,
                    1 => MatchingClass::M3Mixed,
                    0 if self.hexagons.iter().any(|h| h.edges() & m == m) => MatchingClass::M32,
                    0 => MatchingClass::M3Prime,
                    _ => return Err(Error::UnclassifiedMatching),
                }
            }
            4 => {
                let unmatched = self.graph.all_vertices() & !self.graph.edge_endpoints(m);
                let mut rest = vertices_of(unmatched);
                let (u, v) = (rest.next().unwrap(), rest.next().unwrap());
                if self.graph.is_adjacent(u, v) {
                    MatchingClass::M5MinusEdge
                } else {
                    MatchingClass::M4Prime
                }
            }
            5 => MatchingClass::M5,
            _ => return Err(Error::UnclassifiedMatching),
        };
        Ok(class)
    }

    /// All matchings of P as edge masks, in increasing mask order.
    pub fn matchings(&self) -> Vec<EdgeSet> {
        (0..=ALL_EDGES).filter(|&m| self.graph.is_matching(m)).collect()
    }
}

fn hexagon_avoiding(g: &Graph, v: usize) -> Cycle {
    let outside = g.all_vertices() & !g.closed_neighborhood(v);
    let start = outside.trailing_zeros() as usize;
    let mut order = vec![start];
    let mut prev = usize::MAX;
    let mut cur = start;
    loop {
        let next = vertices_of(g.neighbors(cur) & outside)
            .find(|&w| w != prev && (order.len() < 2 || w != order[order.len() - 2]))
            .expect("P minus N[v] is a hexagon");
        if next == start {
            break;
        }
        order.push(next);
        prev = cur;
        cur = next;
    }
    Cycle::new(g, &order).expect("walk closes a hexagon")
}

/// Automorphism types of matchings in the Petersen graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MatchingClass {
    Empty,
    M1,
    /// Two edges at distance 2.
    M22,
    /// Two edges at distance 3.
    M23,
    /// Alternate edges of a hexagon.
    M32,
    /// Three edges pairwise at distance 3; one of the five `M_{3(m)}`.
    M33,
    /// Three edges pairwise at distance 2 lying in no hexagon.
    M3Prime,
    /// Three edges with distances 2, 2 and 3.
    M3Mixed,
    /// Four edges whose two unmatched vertices are nonadjacent.
    M4Prime,
    /// Four edges whose two unmatched vertices are adjacent.
    M5MinusEdge,
    /// A perfect matching, the cut between two pentagons.
    M5,
}

impl MatchingClass {
    pub const ALL: [MatchingClass; 11] = [
        MatchingClass::Empty,
        MatchingClass::M1,
        MatchingClass::M22,
        MatchingClass::M23,
        MatchingClass::M32,
        MatchingClass::M33,
        MatchingClass::M3Prime,
        MatchingClass::M3Mixed,
        MatchingClass::M4Prime,
        MatchingClass::M5MinusEdge,
        MatchingClass::M5,
    ];
}

impl fmt::Display for MatchingClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            MatchingClass::Empty => "EMPTY",
            MatchingClass::M1 => "M1",
            MatchingClass::M22 => "M22",
            MatchingClass::M23 => "M23",
            MatchingClass::M32 => "M32",
            MatchingClass::M33 => "M33",
            MatchingClass::M3Prime => "M3PRIME",
            MatchingClass::M3Mixed => "M3_2_3",
            MatchingClass::M4Prime => "M4PRIME",
            MatchingClass::M5MinusEdge => "M5_MINUS_EDGE",
            MatchingClass::M5 => "M5",
        };
        f.write_str(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vertex_order_is_lexicographic_on_pairs() {
        let p = Petersen::get();
        let names: Vec<String> = (0..10).map(|v| p.labeling().vertex_name(v)).collect();
        assert_eq!(names, ["12", "13", "14", "15", "23", "24", "25", "34", "35", "45"]);
    }

    #[test]
    fn adjacency_is_disjointness() {
        let p = Petersen::get();
        let l = p.labeling();
        for u in 0..10 {
            for v in 0..10 {
                let (a, b) = l.pair_of(u);
                let (c, d) = l.pair_of(v);
                let disjoint = u != v && a != c && a != d && b != c && b != d;
                assert_eq!(p.graph().is_adjacent(u, v), disjoint);
            }
        }
    }

    #[test]
    fn hexagon_of_v45() {
        let p = Petersen::get();
        let l = p.labeling();
        let h = p.hexagon_of_vertex(l.parse_vertex("45").unwrap());
        assert_eq!(h.vertex_set(), l.parse_set("{14,15,24,25,34,35}").unwrap());
        assert_eq!(h.len(), 6);
        let h12 = p.hexagon_of_vertex(l.parse_vertex("12").unwrap());
        assert_eq!(h12.vertex_set(), l.parse_set("{13,25,14,23,15,24}").unwrap());
    }

    #[test]
    fn set_names_round_trip() {
        let l = Petersen::get().labeling();
        let z = l.parse_set("{34,25,13,24}").unwrap();
        assert_eq!(l.set_name(z), "{13,24,25,34}");
        assert_eq!(l.parse_set("{}"), Some(0));
        assert_eq!(l.parse_set("{12,66}"), None);
    }

    #[test]
    fn m3_of_5_is_the_three_disjoint_pairings_of_1234() {
        let p = Petersen::get();
        let m = p.m3(4);
        let expected = [((1, 2), (3, 4)), ((1, 3), (2, 4)), ((1, 4), (2, 3))]
            .iter()
            .fold(0, |acc, &(a, b)| acc | (1u128 << p.edge_between(a, b).unwrap()));
        assert_eq!(m, expected);
        assert_eq!(p.classify_matching(m).unwrap(), MatchingClass::M33);
    }

    #[test]
    fn classify_rejects_non_matchings() {
        let p = Petersen::get();
        let g = p.graph();
        assert_eq!(p.classify_matching(g.star(0)), Err(Error::NotAMatching));
        assert_eq!(p.classify_matching(1 << 15), Err(Error::EdgeMaskOutOfRange(15)));
    }

    #[test]
    fn induced_transposition_12() {
        let p = Petersen::get();
        let l = p.labeling();
        let a = p
            .induced_permutation(&Permutation::parse_cycles(5, "(12)").unwrap())
            .unwrap();
        let v = |s| l.parse_vertex(s).unwrap();
        assert_eq!(a.apply(v("13")), v("23"));
        for fixed in ["12", "34", "35", "45"] {
            assert_eq!(a.apply(v(fixed)), v(fixed));
        }
        assert_eq!(p.base_permutation(&a).unwrap().cycle_notation(), "(12)");
    }
}
