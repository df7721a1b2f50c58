//! Clusterability, cluster number and inclusterability index.

use crate::cycles::Cycle;
use crate::error::{Error, Result};
use crate::graph::{edges_of, vertices_of, EdgeSet, Graph, VertexSet};
use crate::signed::SignedGraph;

/// Largest edge count accepted by the exact inclusterability search.
pub const MAX_CLUSTER_EDGES: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Clusterability {
    /// Clusters: positive edges inside, negative edges between.
    Clusterable(Vec<VertexSet>),
    /// A circle with exactly one negative edge.
    Inclusterable(Cycle),
}

impl Clusterability {
    pub fn is_clusterable(&self) -> bool {
        matches!(self, Clusterability::Clusterable(_))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClusterReport {
    pub clusterable: bool,
    pub clun: Option<usize>,
    pub q: usize,
    /// A minimum clustering when clusterable.
    pub clustering: Option<Vec<VertexSet>>,
    /// A minimum edge set whose deletion makes the signed graph clusterable.
    pub deletion: EdgeSet,
}

/// Clusterable iff contracting the positive edges leaves no loop, i.e. no
/// negative edge joins two vertices of one positive component. On success
/// the clusters come from a minimum proper coloring of the contraction,
/// pulled back along the contracted components.
pub fn is_clusterable(s: &SignedGraph) -> Result<Clusterability> {
    let g = s.graph();
    let contraction = g.contract(s.positive_edges());
    if contraction.has_loop {
        return Ok(Clusterability::Inclusterable(lonely_negative_circle(s)));
    }
    let k = contraction.quotient.chromatic_number()?;
    let coloring = contraction.quotient.find_coloring(k)?.expect("k colors suffice");
    let mut clusters = vec![0 as VertexSet; k];
    for (w, &c) in coloring.iter().enumerate() {
        clusters[c] |= contraction.origin[w];
    }
    Ok(Clusterability::Clusterable(clusters))
}

/// A negative edge inside a positive component closes, with a positive path
/// between its ends, a circle whose only negative edge is that edge.
fn lonely_negative_circle(s: &SignedGraph) -> Cycle {
    let g = s.graph();
    let positive = s.positive_edges();
    for e in edges_of(s.negative_edges()) {
        let (u, v) = g.edge(e);
        if let Some(path) = positive_path(g, positive, u, v) {
            return Cycle::new(g, &path).expect("path plus closing edge is a circle");
        }
    }
    unreachable!("a loop in the positive contraction has a positive path")
}

fn positive_path(g: &Graph, positive: EdgeSet, from: usize, to: usize) -> Option<Vec<usize>> {
    let mut parent = vec![usize::MAX; g.vertex_count()];
    let mut seen: VertexSet = 1 << from;
    let mut queue = vec![from];
    let mut k = 0;
    while k < queue.len() {
        let u = queue[k];
        k += 1;
        for w in vertices_of(g.neighbors(u) & !seen) {
            if positive >> g.edge_id(u, w).unwrap() & 1 == 1 {
                seen |= 1 << w;
                parent[w] = u;
                queue.push(w);
            }
        }
    }
    if seen >> to & 1 == 0 {
        return None;
    }
    let mut path = vec![to];
    while *path.last().unwrap() != from {
        path.push(parent[*path.last().unwrap()]);
    }
    Some(path)
}

/// `clun(Σ) = χ(|Σ|/E⁺)`, absent when `Σ` is not clusterable.
pub fn cluster_number(s: &SignedGraph) -> Result<Option<usize>> {
    s.graph().contract(s.positive_edges()).chromatic_number()
}

/// Loop test on the positive contraction after deleting `removed`.
fn clusterable_without(g: &Graph, negative: EdgeSet, removed: EdgeSet) -> bool {
    let live = g.all_edges() & !removed;
    let positive = live & !negative;
    let mut root: Vec<usize> = (0..g.vertex_count()).collect();
    fn find(root: &mut [usize], mut x: usize) -> usize {
        while root[x] != x {
            root[x] = root[root[x]];
            x = root[x];
        }
        x
    }
    for e in edges_of(positive) {
        let (u, v) = g.edge(e);
        let (a, b) = (find(&mut root, u), find(&mut root, v));
        root[a] = b;
    }
    edges_of(live & negative).all(|e| {
        let (u, v) = g.edge(e);
        find(&mut root, u) != find(&mut root, v)
    })
}

/// Fewest edge deletions making `s` clusterable, with a witness set found
/// first in lexicographic order of edge indices. Deleting every negative
/// edge always works, so the search stops at `|E⁻|`.
pub fn inclusterability_index(s: &SignedGraph) -> Result<(usize, EdgeSet)> {
    let g = s.graph();
    let m = g.edge_count();
    if m > MAX_CLUSTER_EDGES {
        return Err(Error::SearchLimit {
            operation: "inclusterability search",
            found: m,
            limit: MAX_CLUSTER_EDGES,
        });
    }
    let neg = s.negative_edges();
    for k in 0..=neg.count_ones() as usize {
        let mut idx: Vec<usize> = (0..k).collect();
        loop {
            let removed = idx.iter().fold(0u128, |acc, &e| acc | (1 << e));
            if clusterable_without(g, neg, removed) {
                return Ok((k, removed));
            }
            let Some(pos) = (0..k).rev().find(|&p| idx[p] < m - k + p) else {
                break;
            };
            idx[pos] += 1;
            for q in pos + 1..k {
                idx[q] = idx[q - 1] + 1;
            }
        }
    }
    unreachable!("deleting every negative edge leaves a clusterable graph")
}

pub fn cluster_report(s: &SignedGraph) -> Result<ClusterReport> {
    let clustering = match is_clusterable(s)? {
        Clusterability::Clusterable(c) => Some(c),
        Clusterability::Inclusterable(_) => None,
    };
    let (q, deletion) = inclusterability_index(s)?;
    Ok(ClusterReport {
        clusterable: clustering.is_some(),
        clun: clustering.as_ref().map(|c| c.len()),
        q,
        clustering,
        deletion,
    })
}

/// Largest inclusterability index over the given negative-edge masks.
pub fn max_inclusterability_over<I>(g: &Graph, masks: I) -> Result<usize>
where
    I: IntoIterator<Item = EdgeSet>,
{
    let g = std::sync::Arc::new(g.clone());
    let mut best = 0;
    for mask in masks {
        let s = SignedGraph::new(std::sync::Arc::clone(&g), mask)?;
        best = best.max(inclusterability_index(&s)?.0);
    }
    Ok(best)
}

/// Largest inclusterability index over all signatures of `g`. With
/// `cubic_shortcut` only signatures whose negative edges form a matching
/// are searched, which suffices when the maximum degree is at most 3.
pub fn max_inclusterability(g: &Graph, cubic_shortcut: bool) -> Result<usize> {
    let m = g.edge_count();
    if m > MAX_CLUSTER_EDGES {
        return Err(Error::SearchLimit {
            operation: "inclusterability search",
            found: m,
            limit: MAX_CLUSTER_EDGES,
        });
    }
    if cubic_shortcut && g.max_degree() > 3 {
        return Err(Error::NotSubcubic(g.max_degree()));
    }
    let all = 0u128..(1u128 << m);
    if cubic_shortcut {
        max_inclusterability_over(g, all.filter(|&mask| g.is_matching(mask)))
    } else {
        max_inclusterability_over(g, all)
    }
}
