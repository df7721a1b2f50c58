//! Switching permutations, signed automorphism groups and coset
//! representative systems.
//!
//! A switching permutation `(ζ_X, γ)` acts on a signature by switching with
//! `ζ_X` and then permuting by `γ`. Products read left to right:
//! `(ζ_X γ)(ζ_Y ξ) = (ζ_{X ⊕ Y^{γ⁻¹}}, γξ)` and `(ζ_X γ)⁻¹ = (ζ_{X^γ}, γ⁻¹)`.
//! These operations keep the literal switching set; call
//! [`SwitchingPermutation::canonical`] to compare modulo the kernel.

use std::fmt;

use crate::automorphism::automorphisms;
use crate::error::{Error, Result};
use crate::graph::{check_search_limit, edges_of, Graph, VertexSet};
use crate::group::FiniteGroup;
use crate::perm::Permutation;
use crate::petersen::Petersen;
use crate::signed::{full_set, SignedGraph, SwitchingFunction};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SwitchingPermutation {
    alpha: Permutation,
    zeta: SwitchingFunction,
}

impl SwitchingPermutation {
    pub fn new(zeta: SwitchingFunction, alpha: Permutation) -> Result<Self> {
        if zeta.vertex_count() != alpha.degree() {
            return Err(Error::DegreeMismatch {
                expected: zeta.vertex_count(),
                found: alpha.degree(),
            });
        }
        Ok(SwitchingPermutation { alpha, zeta })
    }

    pub fn from_set(set: VertexSet, alpha: Permutation) -> Result<Self> {
        let zeta = SwitchingFunction::new(alpha.degree(), set)?;
        SwitchingPermutation::new(zeta, alpha)
    }

    pub fn identity(n: usize) -> Self {
        SwitchingPermutation {
            alpha: Permutation::identity(n),
            zeta: SwitchingFunction::identity(n),
        }
    }

    /// A pure permutation `(ε, α)`.
    pub fn permutation(alpha: Permutation) -> Self {
        let n = alpha.degree();
        SwitchingPermutation {
            alpha,
            zeta: SwitchingFunction::identity(n),
        }
    }

    pub fn zeta(&self) -> &SwitchingFunction {
        &self.zeta
    }

    pub fn set(&self) -> VertexSet {
        self.zeta.set()
    }

    pub fn alpha(&self) -> &Permutation {
        &self.alpha
    }

    pub fn multiply(&self, other: &SwitchingPermutation) -> SwitchingPermutation {
        SwitchingPermutation {
            zeta: self.zeta.compose(&other.zeta.image(&self.alpha.inverse())),
            alpha: self.alpha.then(&other.alpha),
        }
    }

    pub fn inverse(&self) -> SwitchingPermutation {
        SwitchingPermutation {
            zeta: self.zeta.image(&self.alpha),
            alpha: self.alpha.inverse(),
        }
    }

    /// `ρ^λ = λ⁻¹ρλ = (ζ_{X^λ}, λ⁻¹γλ)` for a permutation λ.
    pub fn conjugate_by(&self, lambda: &Permutation) -> SwitchingPermutation {
        SwitchingPermutation {
            zeta: self.zeta.image(lambda),
            alpha: self.alpha.conjugate_by(lambda),
        }
    }

    /// `−ρ`: the same kernel class with the complementary switching set.
    pub fn negate(&self) -> SwitchingPermutation {
        SwitchingPermutation {
            zeta: self.zeta.negate(),
            alpha: self.alpha.clone(),
        }
    }

    /// Kernel-canonical representative on `g`.
    pub fn canonical(&self, g: &Graph) -> SwitchingPermutation {
        SwitchingPermutation {
            zeta: self.zeta.canonical_form(g),
            alpha: self.alpha.clone(),
        }
    }

    pub fn equivalent(&self, other: &SwitchingPermutation, g: &Graph) -> bool {
        self.alpha == other.alpha && self.zeta.equivalent(&other.zeta, g)
    }

    /// Switch by `ζ`, then permute by `α`.
    pub fn act(&self, s: &SignedGraph) -> Result<SignedGraph> {
        s.switch(&self.zeta).permute(&self.alpha)
    }

    pub fn fixes(&self, s: &SignedGraph) -> Result<bool> {
        Ok(self.act(s)? == *s)
    }

    /// Petersen notation: switching set as vertex pairs followed by the
    /// base permutation on `{1,..,5}`, e.g. `{13,24,25,34}(145)`.
    pub fn petersen_notation(&self) -> Option<String> {
        let p = Petersen::get();
        let base = p.base_permutation(&self.alpha)?;
        Some(format!(
            "{}{}",
            p.labeling().set_name(self.zeta.set()),
            base.cycle_notation()
        ))
    }
}

impl fmt::Display for SwitchingPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.petersen_notation() {
            Some(s) => f.write_str(&s),
            None => {
                let set: Vec<String> = crate::graph::vertices_of(self.zeta.set())
                    .map(|v| v.to_string())
                    .collect();
                write!(f, "{{{}}}{:?}", set.join(","), self.alpha.images())
            }
        }
    }
}

pub fn sp_multiply(a: &SwitchingPermutation, b: &SwitchingPermutation) -> SwitchingPermutation {
    a.multiply(b)
}

pub fn sp_inverse(a: &SwitchingPermutation) -> SwitchingPermutation {
    a.inverse()
}

/// Edge image table of a vertex permutation that is a graph automorphism.
fn edge_images(g: &Graph, alpha: &Permutation) -> Vec<usize> {
    g.edges()
        .iter()
        .map(|&(u, v)| g.edge_id(alpha.apply(u), alpha.apply(v)).expect("automorphism"))
        .collect()
}

/// `Aut Σ`: automorphisms of the underlying graph that preserve every sign.
pub fn aut_signed(s: &SignedGraph) -> Result<FiniteGroup<Permutation>> {
    let g = s.graph();
    let neg = s.negative_edges();
    let auts: Vec<Permutation> = automorphisms(g)?
        .into_iter()
        .filter(|a| {
            let images = edge_images(g, a);
            edges_of(neg).all(|e| neg >> images[e] & 1 == 1)
        })
        .collect();
    FiniteGroup::from_elements(auts, |a, b| a * b)
}

/// `SwAut Σ` by exhaustive scan: every kernel-canonical switching set `X`
/// paired with every automorphism `α` of the underlying graph, kept when
/// switching by `X` and then permuting by `α` returns `Σ`.
pub fn swaut(s: &SignedGraph) -> Result<FiniteGroup<SwitchingPermutation>> {
    let g = s.graph();
    check_search_limit("switching automorphism scan", g.vertex_count())?;
    let n = g.vertex_count();
    let roots: VertexSet = g.components().iter().fold(0, |acc, c| acc | (c & c.wrapping_neg()));
    let free: Vec<usize> = crate::graph::vertices_of(g.all_vertices() & !roots).collect();
    let switchings: Vec<(VertexSet, u128)> = (0u32..1 << free.len())
        .map(|i| {
            let x = crate::graph::vertices_of(i).fold(0u32, |acc, b| acc | (1 << free[b]));
            (x, g.cut(x))
        })
        .collect();
    let neg = s.negative_edges();
    let mut elements = Vec::new();
    for alpha in automorphisms(g)? {
        let images = edge_images(g, &alpha);
        for &(x, cut) in &switchings {
            let switched = neg ^ cut;
            let permuted = edges_of(switched).fold(0u128, |acc, e| acc | (1u128 << images[e]));
            if permuted == neg {
                elements.push(SwitchingPermutation {
                    zeta: SwitchingFunction::new(n, x)?,
                    alpha: alpha.clone(),
                });
            }
        }
    }
    elements.sort();
    FiniteGroup::from_elements(elements, |a, b| a.multiply(b).canonical(g))
}

/// The switching automorphism of `s` whose permutation part is `xi`, if
/// any. It is unique because the projection to `Aut Γ` is injective.
pub fn lift_permutation(s: &SignedGraph, xi: &Permutation) -> Result<Option<SwitchingPermutation>> {
    let target = s.permute(&xi.inverse())?;
    Ok(s.switching_equivalence(&target)?.map(|z| SwitchingPermutation {
        zeta: z.canonical_form(s.graph()),
        alpha: xi.clone(),
    }))
}

/// `(|Aut P| / |Aut Σ|, |Aut P| / |SwAut Σ|)`: the number of signatures
/// isomorphic to `Σ` and the number of switching classes switching
/// isomorphic to it.
pub fn orbit_counts(s: &SignedGraph) -> Result<(usize, usize)> {
    s.petersen_mask()?;
    let aut = aut_signed(s)?.order();
    let sw = swaut(s)?.order();
    Ok((120 / aut, 120 / sw))
}

/// One representative switching permutation per left coset of `Aut Σ` in
/// `SwAut Σ`. Representatives keep a literal switching set (at most half
/// the vertices), which is what gives products a definite sign.
#[derive(Debug, Clone)]
pub struct CosetSystem {
    n: usize,
    representatives: Vec<SwitchingPermutation>,
    subgroup: Vec<Permutation>,
    closed: bool,
}

/// `x = ±ρ_i α` with `ρ_i` a representative and `α ∈ Aut Σ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CosetDecomposition {
    pub rep: usize,
    pub negated: bool,
    pub alpha: Permutation,
}

/// `xy = ±ρ_U ν αβ` as produced by [`CosetSystem::general_product`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductDecomposition {
    pub rep: usize,
    pub negated: bool,
    pub nu: Permutation,
    pub alpha_beta: Permutation,
}

impl CosetSystem {
    /// Build a system from explicit representatives. Checks that they lie
    /// in `g`, that `h` embeds in `g`, and that the cosets they define
    /// partition `g`; closure under conjugation by `h` is recorded.
    pub fn from_representatives(
        g: &FiniteGroup<SwitchingPermutation>,
        h: &FiniteGroup<Permutation>,
        graph: &Graph,
        representatives: Vec<SwitchingPermutation>,
    ) -> Result<CosetSystem> {
        let n = graph.vertex_count();
        for alpha in h.elements() {
            if !g.contains(&SwitchingPermutation::permutation(alpha.clone()).canonical(graph)) {
                return Err(Error::NotASubgroup);
            }
        }
        let mut covered = vec![false; g.order()];
        for rep in &representatives {
            for alpha in h.elements() {
                let x = rep
                    .multiply(&SwitchingPermutation::permutation(alpha.clone()))
                    .canonical(graph);
                let i = g.index_of(&x).ok_or(Error::NotInGroup)?;
                if covered[i] {
                    return Err(Error::GroupAxiom("representatives share a coset".into()));
                }
                covered[i] = true;
            }
        }
        if covered.iter().any(|c| !c) {
            return Err(Error::GroupAxiom("representatives miss a coset".into()));
        }
        let subgroup = h.elements().to_vec();
        let closed = representatives
            .iter()
            .all(|r| subgroup.iter().all(|l| representatives.contains(&r.conjugate_by(l))));
        Ok(CosetSystem {
            n,
            representatives,
            subgroup,
            closed,
        })
    }

    pub fn representatives(&self) -> &[SwitchingPermutation] {
        &self.representatives
    }

    pub fn len(&self) -> usize {
        self.representatives.len()
    }

    pub fn is_empty(&self) -> bool {
        self.representatives.is_empty()
    }

    /// Whether `ρ^λ` is again a representative for every representative `ρ`
    /// and every `λ ∈ Aut Σ`, with identical switching sets.
    pub fn is_conjugation_closed(&self) -> bool {
        self.closed
    }

    pub fn subgroup(&self) -> &[Permutation] {
        &self.subgroup
    }

    /// Write `x` as `±ρ_i α`.
    pub fn decompose(&self, x: &SwitchingPermutation) -> Result<CosetDecomposition> {
        let full = full_set(self.n);
        for (i, rep) in self.representatives.iter().enumerate() {
            let negated = if x.set() == rep.set() {
                false
            } else if x.set() == full & !rep.set() {
                true
            } else {
                continue;
            };
            let alpha = rep.alpha.inverse().then(&x.alpha);
            if self.subgroup.contains(&alpha) {
                return Ok(CosetDecomposition { rep: i, negated, alpha });
            }
        }
        Err(Error::NotInGroup)
    }

    /// `±ρ_i · ν`, the element named by a representative, a sign and a
    /// permutation.
    pub fn compose(&self, rep: usize, negated: bool, nu: &Permutation) -> SwitchingPermutation {
        let r = &self.representatives[rep];
        let r = if negated { r.negate() } else { r.clone() };
        r.multiply(&SwitchingPermutation::permutation(nu.clone()))
    }

    /// Product of `ρ_X α` and `ρ_Y β` in the form `±ρ_U ν αβ` with
    /// `U = X ⊕ Y^{α⁻¹γ_X⁻¹}` and `ν = γ_U⁻¹ γ_X γ_Y^{α⁻¹} ∈ Aut Σ`.
    pub fn general_product(&self, x: (usize, &Permutation), y: (usize, &Permutation)) -> Result<ProductDecomposition> {
        if !self.closed {
            return Err(Error::NotConjugationClosed);
        }
        let (rx, alpha) = (&self.representatives[x.0], x.1);
        let (ry, beta) = (&self.representatives[y.0], y.1);
        if !self.subgroup.contains(alpha) || !self.subgroup.contains(beta) {
            return Err(Error::NotInGroup);
        }
        let shift = alpha.inverse().then(&rx.alpha.inverse());
        let u = rx.set() ^ shift.image_set(ry.set());
        let full = full_set(self.n);
        let (rep, negated) = self
            .representatives
            .iter()
            .enumerate()
            .find_map(|(i, r)| {
                if r.set() == u {
                    Some((i, false))
                } else if r.set() == full & !u {
                    Some((i, true))
                } else {
                    None
                }
            })
            .ok_or(Error::NotInGroup)?;
        let gamma_u = &self.representatives[rep].alpha;
        let nu = gamma_u
            .inverse()
            .then(&rx.alpha)
            .then(&ry.alpha.conjugate_by(&alpha.inverse()));
        if !self.subgroup.contains(&nu) {
            return Err(Error::NotInGroup);
        }
        Ok(ProductDecomposition {
            rep,
            negated,
            nu,
            alpha_beta: alpha.then(beta),
        })
    }

    pub fn recombine(&self, d: &ProductDecomposition) -> SwitchingPermutation {
        self.compose(d.rep, d.negated, &d.nu.then(&d.alpha_beta))
    }
}

/// Order key for literal switching sets: smaller sets first, then by mask.
fn set_key(x: VertexSet) -> (u32, VertexSet) {
    (x.count_ones(), x)
}

/// Choose a coset representative system for `h` in `g`.
///
/// Cosets are grouped into orbits under conjugation by `h`. In each orbit
/// the coset with the least small-form switching set is handled first: its
/// representative is the first element (by set, then permutation) fixed
/// under conjugation by the coset's stabilizer in `h`, and the rest of the
/// orbit receives its conjugates. The identity coset is represented by the
/// identity. Whether the result is conjugation-closed is reported, not
/// assumed.
pub fn coset_system(
    g: &FiniteGroup<SwitchingPermutation>,
    h: &FiniteGroup<Permutation>,
    graph: &Graph,
) -> Result<CosetSystem> {
    let n = graph.vertex_count();
    let full = full_set(n);
    for alpha in h.elements() {
        if !g.contains(&SwitchingPermutation::permutation(alpha.clone()).canonical(graph)) {
            return Err(Error::NotASubgroup);
        }
    }
    // Left cosets as sorted lists of element indices.
    let mut coset_of = vec![usize::MAX; g.order()];
    let mut cosets: Vec<Vec<usize>> = Vec::new();
    for i in 0..g.order() {
        if coset_of[i] != usize::MAX {
            continue;
        }
        let mut members: Vec<usize> = h
            .elements()
            .iter()
            .map(|a| {
                let x = g
                    .element(i)
                    .multiply(&SwitchingPermutation::permutation(a.clone()))
                    .canonical(graph);
                g.index_of(&x).expect("closed under multiplication")
            })
            .collect();
        members.sort_unstable();
        for &m in &members {
            coset_of[m] = cosets.len();
        }
        cosets.push(members);
    }
    // Literal small-form candidates per coset. With exactly half the
    // vertices switched both sets are kept.
    let candidates: Vec<Vec<SwitchingPermutation>> = cosets
        .iter()
        .map(|members| {
            let mut c: Vec<SwitchingPermutation> = Vec::new();
            for &m in members {
                let x = g.element(m);
                let small = SwitchingPermutation {
                    zeta: x.zeta.small_form(graph),
                    alpha: x.alpha.clone(),
                };
                if 2 * small.set().count_ones() as usize == n {
                    c.push(small.negate());
                }
                c.push(small);
            }
            c.sort_by(|a, b| (set_key(a.set()), &a.alpha).cmp(&(set_key(b.set()), &b.alpha)));
            c
        })
        .collect();
    let mut order: Vec<usize> = (0..cosets.len()).collect();
    order.sort_by_key(|&c| {
        let first = &candidates[c][0];
        (!first.alpha.is_identity() || first.set() != 0, set_key(first.set()), c)
    });
    let conj_coset = |c: usize, l: &Permutation| {
        let x = g.element(cosets[c][0]).conjugate_by(l).canonical(graph);
        coset_of[g.index_of(&x).expect("h is a subgroup of g")]
    };
    let mut chosen: Vec<Option<SwitchingPermutation>> = vec![None; cosets.len()];
    for &c in &order {
        if chosen[c].is_some() {
            continue;
        }
        let stabilizer: Vec<&Permutation> = h.elements().iter().filter(|l| conj_coset(c, l) == c).collect();
        let rep = candidates[c]
            .iter()
            .find(|r| stabilizer.iter().all(|l| r.conjugate_by(l) == **r))
            .or_else(|| {
                candidates[c]
                    .iter()
                    .find(|r| stabilizer.iter().all(|l| r.conjugate_by(l).equivalent(r, graph)))
            })
            .unwrap_or(&candidates[c][0])
            .clone();
        for l in h.elements() {
            let target = conj_coset(c, l);
            if chosen[target].is_none() {
                let mut image = rep.conjugate_by(l);
                // Keep the small side when conjugation lands on the large one.
                if 2 * image.set().count_ones() as usize > n {
                    image.zeta = SwitchingFunction::new(n, full & !image.set())?;
                }
                chosen[target] = Some(image);
            }
        }
    }
    let mut representatives: Vec<SwitchingPermutation> = order.iter().map(|&c| chosen[c].clone().unwrap()).collect();
    // Group each orbit's representatives together, identity first.
    representatives.sort_by(|a, b| (set_key(a.set()), &a.alpha).cmp(&(set_key(b.set()), &b.alpha)));
    CosetSystem::from_representatives(g, h, graph, representatives)
}
