//! Proper signed colorations: colors `0, ±1, .., ±k` with
//! `κ(w) ≠ σ(vw)κ(v)` on every edge `vw`.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::{check_search_limit, vertices_of, Graph};
use crate::signed::{SignedGraph, SwitchingFunction};

/// Largest number of color assignments an exhaustive count may face:
/// five colors on ten vertices.
pub const COLORING_BUDGET: u64 = 9_765_625;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloration {
    pub colors: Vec<i32>,
    pub k: usize,
}

impl Coloration {
    pub fn is_proper(&self, s: &SignedGraph) -> bool {
        let g = s.graph();
        self.colors.len() == g.vertex_count()
            && self.colors.iter().all(|c| c.unsigned_abs() as usize <= self.k)
            && g.edges().iter().enumerate().all(|(e, &(u, v))| {
                let sign = s.sign(e).value();
                self.colors[v] != sign * self.colors[u]
            })
    }

    pub fn is_zero_free(&self) -> bool {
        self.colors.iter().all(|&c| c != 0)
    }

    /// `ζκ`, proper for `Σ^ζ` whenever `κ` is proper for `Σ`.
    pub fn switch(&self, zeta: &SwitchingFunction) -> Coloration {
        Coloration {
            colors: self
                .colors
                .iter()
                .enumerate()
                .map(|(v, &c)| c * zeta.value(v).value())
                .collect(),
            k: self.k,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChromaticSummary {
    pub chi: usize,
    pub chi_star: usize,
    /// `(k, zero_free) → number of proper colorations`.
    pub counts: BTreeMap<(usize, bool), u64>,
}

fn palette(k: usize, zero_free: bool) -> Vec<i32> {
    let k = k as i32;
    (-k..=k).filter(|&c| !(zero_free && c == 0)).collect()
}

/// Breadth-first vertex order, so each vertex after the first in its
/// component meets an already colored neighbour.
fn search_order(g: &Graph) -> Vec<usize> {
    let mut order = Vec::with_capacity(g.vertex_count());
    let mut placed = 0u32;
    for root in 0..g.vertex_count() {
        if placed >> root & 1 == 1 {
            continue;
        }
        placed |= 1 << root;
        let mut k = order.len();
        order.push(root);
        while k < order.len() {
            for w in vertices_of(g.neighbors(order[k]) & !placed) {
                placed |= 1 << w;
                order.push(w);
            }
            k += 1;
        }
    }
    order
}

struct Search<'a> {
    s: &'a SignedGraph,
    order: Vec<usize>,
    palette: Vec<i32>,
    colors: Vec<i32>,
}

impl Search<'_> {
    fn allowed(&self, v: usize, c: i32, colored: u32) -> bool {
        let g = self.s.graph();
        vertices_of(g.neighbors(v) & colored).all(|u| {
            let e = g.edge_id(u, v).unwrap();
            c != self.s.sign(e).value() * self.colors[u]
        })
    }

    fn count(&mut self, depth: usize, colored: u32) -> u64 {
        if depth == self.order.len() {
            return 1;
        }
        let v = self.order[depth];
        let mut total = 0;
        for i in 0..self.palette.len() {
            let c = self.palette[i];
            if self.allowed(v, c, colored) {
                self.colors[v] = c;
                total += self.count(depth + 1, colored | (1 << v));
            }
        }
        total
    }

    fn find(&mut self, depth: usize, colored: u32) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let v = self.order[depth];
        for i in 0..self.palette.len() {
            let c = self.palette[i];
            if self.allowed(v, c, colored) {
                self.colors[v] = c;
                if self.find(depth + 1, colored | (1 << v)) {
                    return true;
                }
            }
        }
        false
    }
}

fn search(s: &SignedGraph, k: usize, zero_free: bool) -> Search<'_> {
    Search {
        s,
        order: search_order(s.graph()),
        palette: palette(k, zero_free),
        colors: vec![0; s.graph().vertex_count()],
    }
}

/// Number of proper `k`-colorations, zero-free or not: the chromatic
/// polynomial at `2k+1`, or the zero-free one at `2k`. Exhaustive, so the
/// number of raw assignments must stay within [`COLORING_BUDGET`].
pub fn count_colorations(s: &SignedGraph, k: usize, zero_free: bool) -> Result<u64> {
    let n = s.graph().vertex_count();
    let colors = palette(k, zero_free).len();
    let assignments = (colors as u64).checked_pow(n as u32);
    if assignments.is_none_or(|a| a > COLORING_BUDGET) {
        return Err(Error::ColoringBudget { colors, vertices: n });
    }
    Ok(search(s, k, zero_free).count(0, 0))
}

/// Some proper `k`-coloration, if one exists.
pub fn find_coloration(s: &SignedGraph, k: usize, zero_free: bool) -> Result<Option<Coloration>> {
    check_search_limit("coloration search", s.graph().vertex_count())?;
    let mut search = search(s, k, zero_free);
    Ok(search.find(0, 0).then_some(Coloration {
        colors: search.colors,
        k,
    }))
}

/// `(χ, χ*)`: the least `k` admitting a proper `k`-coloration, and the
/// least admitting a zero-free one.
pub fn chromatic_numbers(s: &SignedGraph) -> Result<(usize, usize)> {
    let n = s.graph().vertex_count();
    let least = |zero_free: bool| -> Result<usize> {
        for k in 0..=n {
            if find_coloration(s, k, zero_free)?.is_some() {
                return Ok(k);
            }
        }
        unreachable!("n distinct unsigned colors always suffice")
    };
    Ok((least(false)?, least(true)?))
}

/// Chromatic numbers plus counts at every `k` in `ks` with both flags.
pub fn chromatic_summary(s: &SignedGraph, ks: &[usize]) -> Result<ChromaticSummary> {
    let (chi, chi_star) = chromatic_numbers(s)?;
    let mut counts = BTreeMap::new();
    for &k in ks {
        for zero_free in [false, true] {
            counts.insert((k, zero_free), count_colorations(s, k, zero_free)?);
        }
    }
    Ok(ChromaticSummary { chi, chi_star, counts })
}

/// Both sides of `χ_Σ(2μ+1) = Σ_W χ*_{Σ∖W}(2μ)`, the sum over independent
/// vertex sets `W` (the vertices colored 0).
pub fn balanced_expansion(s: &SignedGraph, mu: usize) -> Result<(u64, u64)> {
    let left = count_colorations(s, mu, false)?;
    let mut right = 0;
    for w in s.graph().all_independent_sets() {
        let (rest, _) = s.delete_vertices(w);
        right += count_colorations(&rest, mu, true)?;
    }
    Ok((left, right))
}

pub fn balanced_expansion_check(s: &SignedGraph, mu: usize) -> Result<bool> {
    let (left, right) = balanced_expansion(s, mu)?;
    Ok(left == right)
}

/// `χ_Σ(3) − 120` for a Petersen signature, from the formula
/// `2α₀(−Σ) + 2α₁(−Σ) + 2α₂(−Σ) − 4c₆⁻(Σ)`.
pub fn chi3_difference(s: &SignedGraph) -> Result<i64> {
    let mask = s.petersen_mask()?;
    let neg = s.negate();
    let alphas: usize = (0..=2)
        .map(|k| crate::frustration::alpha_k(&neg, k))
        .sum::<Result<usize>>()?;
    let (_, c6) = crate::six::petersen_negative_circles(mask);
    Ok(2 * alphas as i64 - 4 * c6 as i64)
}

/// Proper coloration counts for `k ≤ 2` with and without zero agree for
/// `s` and `s^ζ`, and `κ ↦ ζκ` carries a proper coloration of `s` to one of
/// `s^ζ`.
pub fn switching_color_invariance_check(s: &SignedGraph, zeta: &SwitchingFunction) -> Result<bool> {
    let t = s.switch(zeta);
    for k in 1..=2 {
        for zero_free in [false, true] {
            if count_colorations(s, k, zero_free)? != count_colorations(&t, k, zero_free)? {
                return Ok(false);
            }
        }
    }
    for zero_free in [false, true] {
        if let Some(kappa) = find_coloration(s, 2, zero_free)? {
            if !kappa.switch(zeta).is_proper(&t) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
