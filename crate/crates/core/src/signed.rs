//! Signed graphs, switching and balance.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Mul;
use std::sync::Arc;

use crate::automorphism::permute_edges;
use crate::cycles::{enumerate_cycles, Cycle};
use crate::error::{Error, Result};
use crate::graph::{edges_of, vertices_of, EdgeSet, Graph, VertexSet};
use crate::perm::Permutation;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn value(self) -> i32 {
        match self {
            Sign::Positive => 1,
            Sign::Negative => -1,
        }
    }

    pub fn is_negative(self) -> bool {
        self == Sign::Negative
    }

    fn from_negative(neg: bool) -> Sign {
        if neg {
            Sign::Negative
        } else {
            Sign::Positive
        }
    }
}

impl Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        Sign::from_negative(self.is_negative() != rhs.is_negative())
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(if self.is_negative() { "-" } else { "+" })
    }
}

/// A ±1 function on vertices, stored as the set of vertices where it is −1.
///
/// `ζ` and `−ζ` switch every signature of a connected graph identically;
/// [`SwitchingFunction::canonical_form`] picks one of the two per component.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SwitchingFunction {
    n: usize,
    set: VertexSet,
}

impl SwitchingFunction {
    pub fn new(n: usize, set: VertexSet) -> Result<Self> {
        if n < 32 && set >> n != 0 {
            return Err(Error::VertexOutOfRange {
                vertex: 31 - set.leading_zeros() as usize,
                vertex_count: n,
            });
        }
        Ok(SwitchingFunction { n, set })
    }

    pub fn identity(n: usize) -> Self {
        SwitchingFunction { n, set: 0 }
    }

    pub fn from_values(values: &[Sign]) -> Result<Self> {
        let set = values
            .iter()
            .enumerate()
            .filter(|(_, s)| s.is_negative())
            .fold(0, |acc, (v, _)| acc | (1 << v));
        SwitchingFunction::new(values.len(), set)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    /// The set `X` of vertices with value −1, so this function is `ζ_X`.
    pub fn set(&self) -> VertexSet {
        self.set
    }

    pub fn value(&self, v: usize) -> Sign {
        Sign::from_negative(self.set >> v & 1 == 1)
    }

    pub fn negate(&self) -> Self {
        SwitchingFunction {
            n: self.n,
            set: !self.set & full_set(self.n),
        }
    }

    /// Pointwise product `ζ₁ζ₂`.
    pub fn compose(&self, other: &SwitchingFunction) -> Self {
        SwitchingFunction {
            n: self.n,
            set: self.set ^ other.set,
        }
    }

    /// `ζ^α`, the function whose −1 set is `X^α`.
    pub fn image(&self, alpha: &Permutation) -> Self {
        SwitchingFunction {
            n: self.n,
            set: alpha.image_set(self.set),
        }
    }

    /// Representative with value +1 at the least vertex of every component.
    pub fn canonical_form(&self, g: &Graph) -> Self {
        let set = g.components().into_iter().fold(self.set, |set, comp| {
            if set >> comp.trailing_zeros() & 1 == 1 {
                set ^ comp
            } else {
                set
            }
        });
        SwitchingFunction { n: self.n, set }
    }

    /// Representative whose −1 set is as small as possible on every
    /// component, falling back to the canonical form on ties.
    pub fn small_form(&self, g: &Graph) -> Self {
        let canonical = self.canonical_form(g);
        let set = g.components().into_iter().fold(canonical.set, |set, comp| {
            let inside = (set & comp).count_ones();
            if 2 * inside > comp.count_ones() {
                set ^ comp
            } else {
                set
            }
        });
        SwitchingFunction { n: self.n, set }
    }

    /// Whether the two functions agree up to the kernel of `g`.
    pub fn equivalent(&self, other: &SwitchingFunction, g: &Graph) -> bool {
        self.canonical_form(g) == other.canonical_form(g)
    }
}

pub(crate) fn full_set(n: usize) -> VertexSet {
    if n >= 32 {
        u32::MAX
    } else {
        (1u32 << n) - 1
    }
}

/// Outcome of a balance test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Balance {
    /// Switching by this vertex set makes every edge positive; it and its
    /// complement form a bipartition with positive edges inside the parts
    /// and negative edges across.
    Balanced(VertexSet),
    /// A circle with negative sign product.
    Unbalanced(Cycle),
}

impl Balance {
    pub fn is_balanced(&self) -> bool {
        matches!(self, Balance::Balanced(_))
    }
}

/// A graph with a sign on every edge, stored as the mask of negative edges.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignedGraph {
    graph: Arc<Graph>,
    negative: EdgeSet,
}

impl SignedGraph {
    pub fn new(graph: Arc<Graph>, negative: EdgeSet) -> Result<Self> {
        if negative & !graph.all_edges() != 0 {
            return Err(Error::EdgeMaskOutOfRange(graph.edge_count()));
        }
        Ok(SignedGraph { graph, negative })
    }

    pub fn from_graph(graph: Graph, negative: EdgeSet) -> Result<Self> {
        SignedGraph::new(Arc::new(graph), negative)
    }

    pub fn all_positive(graph: Arc<Graph>) -> Self {
        SignedGraph { graph, negative: 0 }
    }

    pub fn all_negative(graph: Arc<Graph>) -> Self {
        let negative = graph.all_edges();
        SignedGraph { graph, negative }
    }

    /// Signs listed in canonical edge order.
    pub fn from_signs(graph: Arc<Graph>, signs: &[Sign]) -> Result<Self> {
        if signs.len() != graph.edge_count() {
            return Err(Error::EdgeMaskOutOfRange(graph.edge_count()));
        }
        let negative = signs
            .iter()
            .enumerate()
            .filter(|(_, s)| s.is_negative())
            .fold(0, |acc, (e, _)| acc | (1u128 << e));
        SignedGraph::new(graph, negative)
    }

    /// A signature of the canonical Petersen graph from its 15-bit mask.
    pub fn petersen(mask: u16) -> Result<Self> {
        SignedGraph::new(crate::petersen::Petersen::get().graph_arc(), mask as EdgeSet)
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn graph_arc(&self) -> Arc<Graph> {
        Arc::clone(&self.graph)
    }

    pub fn is_petersen(&self) -> bool {
        crate::petersen::Petersen::is_petersen(&self.graph)
    }

    /// The Petersen sign mask, if the underlying graph is the Petersen graph.
    pub fn petersen_mask(&self) -> Result<u16> {
        if self.is_petersen() {
            Ok(self.negative as u16)
        } else {
            Err(Error::NotPetersen)
        }
    }

    pub fn negative_edges(&self) -> EdgeSet {
        self.negative
    }

    pub fn positive_edges(&self) -> EdgeSet {
        self.graph.all_edges() & !self.negative
    }

    pub fn negative_count(&self) -> usize {
        self.negative.count_ones() as usize
    }

    pub fn sign(&self, e: usize) -> Sign {
        Sign::from_negative(self.negative >> e & 1 == 1)
    }

    pub fn signs(&self) -> Vec<Sign> {
        (0..self.graph.edge_count()).map(|e| self.sign(e)).collect()
    }

    fn with_negative(&self, negative: EdgeSet) -> Self {
        SignedGraph {
            graph: Arc::clone(&self.graph),
            negative,
        }
    }

    pub fn negate(&self) -> Self {
        self.with_negative(self.positive_edges())
    }

    /// `Σ^ζ`: every edge `uv` has its sign multiplied by `ζ(u)ζ(v)`.
    pub fn switch(&self, zeta: &SwitchingFunction) -> Self {
        self.switch_set(zeta.set())
    }

    /// Switch by `ζ_X`, i.e. negate the cut `∂X`.
    pub fn switch_set(&self, x: VertexSet) -> Self {
        self.with_negative(self.negative ^ self.graph.cut(x))
    }

    /// `Σ^α`, with `σ^α(u^α v^α) = σ(uv)`. `alpha` must be an automorphism of
    /// the underlying graph.
    pub fn permute(&self, alpha: &Permutation) -> Result<Self> {
        if alpha.degree() != self.graph.vertex_count() {
            return Err(Error::DegreeMismatch {
                expected: self.graph.vertex_count(),
                found: alpha.degree(),
            });
        }
        let preserves = self
            .graph
            .edges()
            .iter()
            .all(|&(u, v)| self.graph.is_adjacent(alpha.apply(u), alpha.apply(v)));
        if !preserves {
            return Err(Error::InvalidPermutation(format!(
                "{} is not an automorphism of the underlying graph",
                alpha.cycle_notation()
            )));
        }
        Ok(self.with_negative(permute_edges(&self.graph, alpha, self.negative)))
    }

    fn check_cycle(&self, c: &Cycle) -> Result<()> {
        let rebuilt = Cycle::new(&self.graph, c.vertices())?;
        if rebuilt.edges() != c.edges() {
            return Err(Error::NotACycle("edge set does not match this graph".into()));
        }
        Ok(())
    }

    pub fn sign_of_circle(&self, c: &Cycle) -> Result<Sign> {
        self.check_cycle(c)?;
        Ok(Sign::from_negative((c.edges() & self.negative).count_ones() % 2 == 1))
    }

    /// Balance test by sign-aware breadth-first labelling.
    pub fn balance(&self) -> Balance {
        let g = &self.graph;
        let n = g.vertex_count();
        let mut label = vec![None::<bool>; n];
        let mut parent = vec![usize::MAX; n];
        let mut switching: VertexSet = 0;
        for root in 0..n {
            if label[root].is_some() {
                continue;
            }
            label[root] = Some(false);
            let mut queue = vec![root];
            let mut k = 0;
            while k < queue.len() {
                let u = queue[k];
                k += 1;
                let lu = label[u].unwrap();
                for w in vertices_of(g.neighbors(u)) {
                    let e = g.edge_id(u, w).unwrap();
                    let want = lu ^ (self.negative >> e & 1 == 1);
                    match label[w] {
                        None => {
                            label[w] = Some(want);
                            parent[w] = u;
                            if want {
                                switching |= 1 << w;
                            }
                            queue.push(w);
                        }
                        Some(lw) if lw != want => {
                            return Balance::Unbalanced(self.tree_cycle(&parent, u, w));
                        }
                        Some(_) => {}
                    }
                }
            }
        }
        Balance::Balanced(switching)
    }

    /// The circle formed by the tree paths from `u` and `w` to their common
    /// ancestor together with the edge `uw`.
    fn tree_cycle(&self, parent: &[usize], u: usize, w: usize) -> Cycle {
        let ancestors = |mut x: usize| {
            let mut path = vec![x];
            while parent[x] != usize::MAX {
                x = parent[x];
                path.push(x);
            }
            path
        };
        let pu = ancestors(u);
        let pw = ancestors(w);
        let common = pu.iter().find(|x| pw.contains(x)).copied().unwrap();
        let mut seq: Vec<usize> = pu.iter().copied().take_while(|&x| x != common).collect();
        seq.push(common);
        let back: Vec<usize> = pw.iter().copied().take_while(|&x| x != common).collect();
        seq.extend(back.into_iter().rev());
        Cycle::new(&self.graph, &seq).expect("tree paths plus a non-tree edge form a circle")
    }

    pub fn is_balanced(&self) -> bool {
        is_balanced_within(&self.graph, self.negative, self.graph.all_vertices())
    }

    /// Every even circle positive and every odd circle negative.
    pub fn is_antibalanced(&self) -> bool {
        self.negate().is_balanced()
    }

    /// A switching function `ζ` with `self^ζ = other`, if there is one.
    pub fn switching_equivalence(&self, other: &SignedGraph) -> Result<Option<SwitchingFunction>> {
        if self.graph != other.graph {
            return Err(Error::GraphMismatch);
        }
        let difference = self.with_negative(self.negative ^ other.negative);
        Ok(match difference.balance() {
            Balance::Balanced(x) => Some(SwitchingFunction {
                n: self.graph.vertex_count(),
                set: x,
            }),
            Balance::Unbalanced(_) => None,
        })
    }

    /// `Σ ∖ W`, vertices renumbered; also returns the original ids.
    pub fn delete_vertices(&self, removed: VertexSet) -> (SignedGraph, Vec<usize>) {
        let (sub, kept) = self.graph.delete_vertices(removed);
        let negative = edges_of(self.negative)
            .filter_map(|e| {
                let (u, v) = self.graph.edge(e);
                let nu = kept.iter().position(|&x| x == u)?;
                let nv = kept.iter().position(|&x| x == v)?;
                sub.edge_id(nu, nv)
            })
            .fold(0, |acc, f| acc | (1u128 << f));
        (
            SignedGraph {
                graph: Arc::new(sub),
                negative,
            },
            kept,
        )
    }

    /// The spanning subgraph without the given edges, edges renumbered.
    pub fn delete_edges(&self, removed: EdgeSet) -> SignedGraph {
        let kept: Vec<usize> = (0..self.graph.edge_count()).filter(|e| removed >> e & 1 == 0).collect();
        let sub = Graph::new(self.graph.vertex_count(), kept.iter().map(|&e| self.graph.edge(e)))
            .expect("subgraph of a valid graph");
        let negative = kept
            .iter()
            .enumerate()
            .filter(|(_, &e)| self.negative >> e & 1 == 1)
            .fold(0, |acc, (i, _)| acc | (1u128 << i));
        SignedGraph {
            graph: Arc::new(sub),
            negative,
        }
    }

    /// Number of negative circles of each requested length.
    pub fn negative_circle_counts(&self, lengths: &[usize]) -> Result<BTreeMap<usize, usize>> {
        let longest = lengths.iter().copied().max().unwrap_or(0);
        let mut counts: BTreeMap<usize, usize> = lengths.iter().map(|&l| (l, 0)).collect();
        if longest < 3 {
            return Ok(counts);
        }
        for c in enumerate_cycles(&self.graph, longest)? {
            if let Some(count) = counts.get_mut(&c.len()) {
                if (c.edges() & self.negative).count_ones() % 2 == 1 {
                    *count += 1;
                }
            }
        }
        Ok(counts)
    }
}

/// Whether the signature `negative` restricted to the induced subgraph on
/// `active` is balanced.
pub fn is_balanced_within(g: &Graph, negative: EdgeSet, active: VertexSet) -> bool {
    let mut label: u32 = 0;
    let mut seen: u32 = 0;
    let mut stack = [0usize; 32];
    let mut remaining = active;
    while remaining != 0 {
        let root = remaining.trailing_zeros() as usize;
        seen |= 1 << root;
        remaining &= !(1 << root);
        let mut top = 1;
        stack[0] = root;
        while top > 0 {
            top -= 1;
            let u = stack[top];
            let lu = label >> u & 1;
            let mut nbrs = g.neighbors(u) & active;
            while nbrs != 0 {
                let w = nbrs.trailing_zeros() as usize;
                nbrs &= nbrs - 1;
                let e = g.edge_id(u, w).unwrap();
                let want = lu ^ (negative >> e & 1) as u32;
                if seen >> w & 1 == 1 {
                    if label >> w & 1 != want {
                        return false;
                    }
                } else {
                    seen |= 1 << w;
                    remaining &= !(1 << w);
                    label |= want << w;
                    stack[top] = w;
                    top += 1;
                }
            }
        }
    }
    true
}

impl fmt::Display for SignedGraph {
    /// Edge-list form: `n <count>` then one `u v ±` line per edge.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n {}", self.graph.vertex_count())?;
        for (e, &(u, v)) in self.graph.edges().iter().enumerate() {
            writeln!(f, "{u} {v} {}", self.sign(e))?;
        }
        Ok(())
    }
}
