//! Frustration index, frustration number and related counts.

use crate::error::Result;
use crate::graph::{check_search_limit, vertices_of, EdgeSet, VertexSet};
use crate::signed::{is_balanced_within, SignedGraph, SwitchingFunction};

/// Frustration index `l` and number `l₀` with witnesses: deleting
/// `witness_edges` or `witness_vertices` leaves a balanced signed graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FrustrationReport {
    pub l: usize,
    pub l0: usize,
    pub witness_edges: EdgeSet,
    pub witness_vertices: VertexSet,
    /// A switching whose negative edges are `witness_edges`.
    pub witness_switching: SwitchingFunction,
}

/// Vertices that may be switched while leaving the least vertex of each
/// component fixed, so every kernel class is visited once.
fn free_vertices(s: &SignedGraph) -> Vec<usize> {
    let roots: VertexSet = s
        .graph()
        .components()
        .iter()
        .fold(0, |acc, c| acc | (c & c.wrapping_neg()));
    vertices_of(s.graph().all_vertices() & !roots).collect()
}

/// Minimum number of negative edges over all switchings of `s`, with the
/// switching attaining it. Ties go to the least resulting negative mask.
pub fn frustration_index(s: &SignedGraph) -> Result<(usize, SwitchingFunction)> {
    let g = s.graph();
    check_search_limit("frustration index", g.vertex_count())?;
    let free = free_vertices(s);
    let mut mask = s.negative_edges();
    let mut set: VertexSet = 0;
    let mut best = (mask.count_ones(), mask, 0);
    // Gray code: step i flips the vertex at the position of i's lowest set bit.
    for i in 1u32..(1 << free.len()) {
        let v = free[i.trailing_zeros() as usize];
        mask ^= g.star(v);
        set ^= 1 << v;
        let key = (mask.count_ones(), mask);
        if key < (best.0, best.1) {
            best = (key.0, key.1, set);
        }
    }
    Ok((best.0 as usize, SwitchingFunction::new(g.vertex_count(), best.2)?))
}

/// Smallest vertex set whose deletion leaves `s` balanced, searched by
/// increasing size and then lexicographically.
pub fn frustration_number(s: &SignedGraph) -> Result<(usize, VertexSet)> {
    let g = s.graph();
    check_search_limit("frustration number", g.vertex_count())?;
    let n = g.vertex_count();
    let all = g.all_vertices();
    for k in 0..=n {
        if let Some(w) = first_subset(n, k, |w| is_balanced_within(g, s.negative_edges(), all & !w)) {
            return Ok((k, w));
        }
    }
    unreachable!("deleting every vertex leaves a balanced graph")
}

/// First `k`-subset of `0..n` in lexicographic order satisfying `pred`.
fn first_subset(n: usize, k: usize, mut pred: impl FnMut(VertexSet) -> bool) -> Option<VertexSet> {
    if k > n {
        return None;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        let set = idx.iter().fold(0u32, |acc, &i| acc | (1 << i));
        if pred(set) {
            return Some(set);
        }
        let pos = (0..k).rev().find(|&p| idx[p] < n - k + p)?;
        idx[pos] += 1;
        for q in pos + 1..k {
            idx[q] = idx[q - 1] + 1;
        }
    }
}

pub fn frustration_report(s: &SignedGraph) -> Result<FrustrationReport> {
    let (l, zeta) = frustration_index(s)?;
    let (l0, w) = frustration_number(s)?;
    Ok(FrustrationReport {
        l,
        l0,
        witness_edges: s.switch(&zeta).negative_edges(),
        witness_vertices: w,
        witness_switching: zeta,
    })
}

/// Whether `s` already has the fewest negative edges in its switching class.
pub fn is_minimal(s: &SignedGraph) -> Result<bool> {
    Ok(frustration_index(s)?.0 == s.negative_count())
}

/// A vertex set whose cut has more negative than positive edges, if any.
/// Switching it lowers the negative-edge count, so absence certifies
/// minimality. Returns the least such set in the kernel-canonical scan.
pub fn cut_dominance_check(s: &SignedGraph) -> Result<Option<VertexSet>> {
    let g = s.graph();
    check_search_limit("cut dominance", g.vertex_count())?;
    let free = free_vertices(s);
    let neg = s.negative_edges();
    let mut found = None;
    for i in 1u32..(1 << free.len()) {
        let x = vertices_of(i).fold(0u32, |acc, b| acc | (1 << free[b]));
        let cut = g.cut(x);
        if 2 * (cut & neg).count_ones() > cut.count_ones() && found.is_none_or(|f| x < f) {
            found = Some(x);
        }
    }
    Ok(found)
}

/// Number of independent `k`-sets `W` with `s ∖ W` balanced.
pub fn alpha_k(s: &SignedGraph, k: usize) -> Result<usize> {
    let g = s.graph();
    check_search_limit("independent set count", g.vertex_count())?;
    let all = g.all_vertices();
    Ok(g.independent_sets(k)
        .into_iter()
        .filter(|&w| is_balanced_within(g, s.negative_edges(), all & !w))
        .count())
}
