use crate::error::{Error, Result};
use crate::graph::{check_search_limit, EdgeSet, Graph, VertexSet};

/// A circle of a graph, stored as a vertex sequence starting at its least
/// vertex and continuing toward the smaller of that vertex's two cycle
/// neighbours.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cycle {
    vertices: Vec<usize>,
    edges: EdgeSet,
}

impl Cycle {
    pub fn new(g: &Graph, vertices: &[usize]) -> Result<Self> {
        let len = vertices.len();
        if len < 3 {
            return Err(Error::NotACycle(format!("length {len} < 3")));
        }
        let mut seen: VertexSet = 0;
        let mut edges: EdgeSet = 0;
        for (i, &v) in vertices.iter().enumerate() {
            if v >= g.vertex_count() {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    vertex_count: g.vertex_count(),
                });
            }
            if seen & (1 << v) != 0 {
                return Err(Error::NotACycle(format!("vertex {v} repeated")));
            }
            seen |= 1 << v;
            let w = vertices[(i + 1) % len];
            let e = g
                .edge_id(v, w)
                .ok_or_else(|| Error::NotACycle(format!("{v} and {w} are not adjacent")))?;
            edges |= 1u128 << e;
        }
        Ok(Cycle {
            vertices: canonical_rotation(vertices),
            edges,
        })
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn edges(&self) -> EdgeSet {
        self.edges
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.vertices.iter().fold(0, |acc, &v| acc | (1 << v))
    }
}

fn canonical_rotation(vertices: &[usize]) -> Vec<usize> {
    let len = vertices.len();
    let start = (0..len).min_by_key(|&i| vertices[i]).unwrap();
    let forward: Vec<usize> = (0..len).map(|i| vertices[(start + i) % len]).collect();
    if forward[1] <= forward[len - 1] {
        forward
    } else {
        let mut backward = vec![forward[0]];
        backward.extend(forward[1..].iter().rev());
        backward
    }
}

/// Every simple cycle of length at most `max_len`, each once, ordered by
/// length and then by canonical vertex sequence.
pub fn enumerate_cycles(g: &Graph, max_len: usize) -> Result<Vec<Cycle>> {
    check_search_limit("cycle enumeration", g.vertex_count())?;
    let mut out = Vec::new();
    let mut path = Vec::with_capacity(g.vertex_count());
    for start in 0..g.vertex_count() {
        path.clear();
        path.push(start);
        extend(g, start, 1 << start, max_len, &mut path, &mut out);
    }
    out.sort_by(|a, b| (a.len(), &a.vertices).cmp(&(b.len(), &b.vertices)));
    Ok(out)
}

fn extend(g: &Graph, start: usize, visited: VertexSet, max_len: usize, path: &mut Vec<usize>, out: &mut Vec<Cycle>) {
    let last = *path.last().unwrap();
    let nbrs = g.neighbors(last);
    if path.len() >= 3 && nbrs & (1 << start) != 0 && path[1] < last {
        let mut edges = g.star(start) & g.star(last);
        for w in path.windows(2) {
            edges |= 1u128 << g.edge_id(w[0], w[1]).unwrap();
        }
        out.push(Cycle {
            vertices: path.clone(),
            edges,
        });
    }
    if path.len() == max_len {
        return;
    }
    // Only vertices larger than the start, so each cycle is rooted at its minimum.
    let above = !((1u32 << start) | ((1u32 << start) - 1));
    let mut candidates = nbrs & !visited & above;
    while candidates != 0 {
        let w = candidates.trailing_zeros() as usize;
        candidates &= candidates - 1;
        path.push(w);
        extend(g, start, visited | (1 << w), max_len, path, out);
        path.pop();
    }
}
