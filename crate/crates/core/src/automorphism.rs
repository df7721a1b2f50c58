//! Graph automorphisms by colour refinement and backtracking.

use crate::error::{Error, Result};
use crate::graph::{check_search_limit, vertices_of, Graph};
use crate::group::{FiniteGroup, MAX_GROUP_ORDER};
use crate::perm::Permutation;

/// Stable colouring under 1-dimensional Weisfeiler–Leman refinement,
/// starting from degrees. Colours are small integers; an automorphism must
/// preserve them.
fn refine(g: &Graph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut colors: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
    loop {
        let signatures: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nbr: Vec<usize> = vertices_of(g.neighbors(v)).map(|w| colors[w]).collect();
                nbr.sort_unstable();
                (colors[v], nbr)
            })
            .collect();
        let mut distinct = signatures.clone();
        distinct.sort();
        distinct.dedup();
        let next: Vec<usize> = signatures.iter().map(|s| distinct.binary_search(s).unwrap()).collect();
        let before = {
            let mut c = colors.clone();
            c.sort_unstable();
            c.dedup();
            c.len()
        };
        colors = next;
        if distinct.len() == before {
            return colors;
        }
    }
}

/// Every automorphism of `g`, identity first, then in lexicographic order
/// of image vectors.
pub fn automorphisms(g: &Graph) -> Result<Vec<Permutation>> {
    check_search_limit("automorphism search", g.vertex_count())?;
    let n = g.vertex_count();
    let colors = refine(g);
    // Visit vertices in breadth-first order so that each new vertex usually
    // has an already-mapped neighbour constraining it.
    let mut order = Vec::with_capacity(n);
    let mut placed = 0u32;
    for root in 0..n {
        if placed >> root & 1 == 1 {
            continue;
        }
        placed |= 1 << root;
        let start = order.len();
        order.push(root);
        let mut k = start;
        while k < order.len() {
            for w in vertices_of(g.neighbors(order[k]) & !placed) {
                placed |= 1 << w;
                order.push(w);
            }
            k += 1;
        }
    }
    let mut out = Vec::new();
    let mut images = vec![usize::MAX; n];
    search(g, &colors, &order, 0, 0, &mut images, &mut out)?;
    out.sort();
    Ok(out)
}

fn search(
    g: &Graph,
    colors: &[usize],
    order: &[usize],
    depth: usize,
    used: u32,
    images: &mut Vec<usize>,
    out: &mut Vec<Permutation>,
) -> Result<()> {
    if depth == order.len() {
        if out.len() == MAX_GROUP_ORDER {
            return Err(Error::SearchLimit {
                operation: "automorphism group order",
                found: MAX_GROUP_ORDER + 1,
                limit: MAX_GROUP_ORDER,
            });
        }
        out.push(Permutation::from_images(images.clone()).expect("bijection by construction"));
        return Ok(());
    }
    let v = order[depth];
    for w in 0..g.vertex_count() {
        if used >> w & 1 == 1 || colors[w] != colors[v] {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&u| g.is_adjacent(u, v) == g.is_adjacent(images[u], w));
        if consistent {
            images[v] = w;
            search(g, colors, order, depth + 1, used | (1 << w), images, out)?;
        }
    }
    images[v] = usize::MAX;
    Ok(())
}

/// `Aut g` as a group under left-to-right composition.
pub fn graph_automorphisms(g: &Graph) -> Result<FiniteGroup<Permutation>> {
    FiniteGroup::from_elements(automorphisms(g)?, |a, b| a * b)
}

/// Image of an edge set under a vertex permutation.
pub fn permute_edges(g: &Graph, alpha: &Permutation, edges: crate::graph::EdgeSet) -> crate::graph::EdgeSet {
    crate::graph::edges_of(edges).fold(0, |acc, e| {
        let (u, v) = g.edge(e);
        let f = g
            .edge_id(alpha.apply(u), alpha.apply(v))
            .expect("alpha is an automorphism of g");
        acc | (1u128 << f)
    })
}
