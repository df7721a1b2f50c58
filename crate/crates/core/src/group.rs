//! Finite groups given by an explicit element list and Cayley table.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::hash::Hash;

use crate::error::{Error, Result};

/// Largest group accepted by [`FiniteGroup::from_elements`].
pub const MAX_GROUP_ORDER: usize = 1440;

/// Groups up to this order get a full associativity check; larger ones are
/// sampled.
const FULL_ASSOCIATIVITY_ORDER: usize = 128;

/// A finite group whose elements are stored explicitly. Indices into
/// [`FiniteGroup::elements`] are the currency of every operation.
#[derive(Debug, Clone)]
pub struct FiniteGroup<T> {
    elements: Vec<T>,
    index: HashMap<T, usize>,
    table: Vec<u16>,
    identity: usize,
    inverses: Vec<usize>,
}

impl<T: Clone + Eq + Hash> FiniteGroup<T> {
    /// Build a group from its full element list, checking closure, identity,
    /// inverses and associativity. Duplicates are rejected.
    pub fn from_elements<F>(elements: Vec<T>, mul: F) -> Result<Self>
    where
        F: Fn(&T, &T) -> T,
    {
        let n = elements.len();
        if n == 0 {
            return Err(Error::GroupAxiom("empty element list".into()));
        }
        if n > MAX_GROUP_ORDER {
            return Err(Error::SearchLimit {
                operation: "group construction",
                found: n,
                limit: MAX_GROUP_ORDER,
            });
        }
        let mut index = HashMap::with_capacity(n);
        for (i, x) in elements.iter().enumerate() {
            if index.insert(x.clone(), i).is_some() {
                return Err(Error::GroupAxiom(format!("element {i} listed twice")));
            }
        }
        let mut table = vec![0u16; n * n];
        for (i, a) in elements.iter().enumerate() {
            for (j, b) in elements.iter().enumerate() {
                let k = *index
                    .get(&mul(a, b))
                    .ok_or_else(|| Error::GroupAxiom(format!("product of {i} and {j} leaves the set")))?;
                table[i * n + j] = k as u16;
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| table[e * n + x] as usize == x && table[x * n + e] as usize == x))
            .ok_or_else(|| Error::GroupAxiom("no identity".into()))?;
        let mut inverses = vec![0; n];
        for (x, inv) in inverses.iter_mut().enumerate() {
            *inv = (0..n)
                .find(|&y| table[x * n + y] as usize == identity && table[y * n + x] as usize == identity)
                .ok_or_else(|| Error::GroupAxiom(format!("element {x} has no inverse")))?;
        }
        let group = FiniteGroup {
            elements,
            index,
            table,
            identity,
            inverses,
        };
        group.check_associativity()?;
        Ok(group)
    }

    fn check_associativity(&self) -> Result<()> {
        let n = self.order();
        let check = |a: usize, b: usize, c: usize| {
            if self.mul(self.mul(a, b), c) != self.mul(a, self.mul(b, c)) {
                Err(Error::GroupAxiom(format!("({a}{b}){c} != {a}({b}{c})")))
            } else {
                Ok(())
            }
        };
        if n <= FULL_ASSOCIATIVITY_ORDER {
            for a in 0..n {
                for b in 0..n {
                    for c in 0..n {
                        check(a, b, c)?;
                    }
                }
            }
        } else {
            // Deterministic sample of triples from a linear congruential walk.
            let mut state: u64 = 0x9E37_79B9_7F4A_7C15;
            for _ in 0..200_000 {
                state = state
                    .wrapping_mul(6364136223846793005)
                    .wrapping_add(1442695040888963407);
                let r = (state >> 16) as usize;
                check(r % n, (r / n) % n, (r / (n * n)) % n)?;
            }
        }
        Ok(())
    }

    pub fn index_of(&self, x: &T) -> Option<usize> {
        self.index.get(x).copied()
    }

    pub fn contains(&self, x: &T) -> bool {
        self.index.contains_key(x)
    }
}

impl<T> FiniteGroup<T> {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[T] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &T {
        &self.elements[i]
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order() + b] as usize
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverses[a]
    }

    /// `b⁻¹ a b`.
    pub fn conjugate(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(self.inverse(b), a), b)
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn is_abelian(&self) -> bool {
        let n = self.order();
        (0..n).all(|a| (a + 1..n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// Element order → number of elements of that order.
    pub fn order_histogram(&self) -> BTreeMap<usize, usize> {
        let mut h = BTreeMap::new();
        for a in 0..self.order() {
            *h.entry(self.element_order(a)).or_insert(0) += 1;
        }
        h
    }

    /// Whether the index set is a subgroup (nonempty and closed; finiteness
    /// gives inverses).
    pub fn is_subgroup(&self, members: &[usize]) -> bool {
        if members.is_empty() {
            return false;
        }
        let mut mark = vec![false; self.order()];
        for &m in members {
            mark[m] = true;
        }
        members.iter().all(|&a| members.iter().all(|&b| mark[self.mul(a, b)]))
    }

    /// The subgroup generated by `gens`, as a sorted index list.
    pub fn generated(&self, gens: &[usize]) -> Vec<usize> {
        let mut mark = vec![false; self.order()];
        mark[self.identity] = true;
        let mut members = vec![self.identity];
        let mut k = 0;
        while k < members.len() {
            let a = members[k];
            for &g in gens {
                let b = self.mul(a, g);
                if !mark[b] {
                    mark[b] = true;
                    members.push(b);
                }
            }
            k += 1;
        }
        members.sort_unstable();
        members
    }

    /// The subgroup on `members` as a group in its own right, elements in
    /// the given order.
    pub fn subgroup(&self, members: &[usize]) -> Result<FiniteGroup<T>>
    where
        T: Clone + Eq + Hash,
    {
        if !self.is_subgroup(members) {
            return Err(Error::NotASubgroup);
        }
        let pos: HashMap<usize, usize> = members.iter().enumerate().map(|(i, &m)| (m, i)).collect();
        let elements: Vec<T> = members.iter().map(|&m| self.elements[m].clone()).collect();
        FiniteGroup::from_elements(elements, |a, b| {
            let i = members[pos[&self.index_by_eq(a)]];
            let j = members[pos[&self.index_by_eq(b)]];
            self.elements[self.mul(i, j)].clone()
        })
    }

    fn index_by_eq(&self, x: &T) -> usize
    where
        T: Eq + Hash,
    {
        self.index[x]
    }

    /// Every subgroup, as bitsets over element indices. Cyclic subgroups are
    /// joined pairwise until no new subgroup appears.
    pub fn all_subgroups(&self) -> Result<Vec<u128>> {
        let n = self.order();
        if n > 128 {
            return Err(Error::SearchLimit {
                operation: "subgroup enumeration",
                found: n,
                limit: 128,
            });
        }
        let to_bits = |v: &[usize]| v.iter().fold(0u128, |acc, &i| acc | (1 << i));
        let mut cyclic: Vec<u128> = (0..n).map(|a| to_bits(&self.generated(&[a]))).collect();
        cyclic.sort_unstable();
        cyclic.dedup();
        let mut found: Vec<u128> = cyclic.clone();
        let mut seen: std::collections::HashSet<u128> = found.iter().copied().collect();
        let mut k = 0;
        while k < found.len() {
            let h = found[k];
            for &c in &cyclic {
                if c & !h == 0 {
                    continue;
                }
                let gens: Vec<usize> = (0..n).filter(|&i| (h | c) >> i & 1 == 1).collect();
                let joined = to_bits(&self.generated(&gens));
                if seen.insert(joined) {
                    found.push(joined);
                }
            }
            k += 1;
        }
        found.sort_by_key(|b| (b.count_ones(), *b));
        Ok(found)
    }

    /// Subgroups `K` with `K ∩ H = 1` and `|K||H| = |G|`, i.e. complements
    /// of `h` in the group.
    pub fn complements(&self, h: u128) -> Result<Vec<u128>> {
        let n = self.order();
        let hsize = h.count_ones() as usize;
        if !n.is_multiple_of(hsize) {
            return Err(Error::NotASubgroup);
        }
        let target = (n / hsize) as u32;
        let id = 1u128 << self.identity;
        Ok(self
            .all_subgroups()?
            .into_iter()
            .filter(|&k| k.count_ones() == target && k & h == id)
            .collect())
    }

    pub fn label(&self) -> GroupLabel {
        identify_group(self)
    }
}

/// Isomorphism types the identifier recognises. Anything else is reported
/// as `Other(order)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GroupLabel {
    Trivial,
    Z2,
    Z4,
    V4,
    S3,
    D4,
    Q8,
    S4,
    A5,
    S5,
    Other(usize),
}

impl fmt::Display for GroupLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupLabel::Trivial => f.write_str("1"),
            GroupLabel::Z2 => f.write_str("Z2"),
            GroupLabel::Z4 => f.write_str("Z4"),
            GroupLabel::V4 => f.write_str("V4"),
            GroupLabel::S3 => f.write_str("S3"),
            GroupLabel::D4 => f.write_str("D4"),
            GroupLabel::Q8 => f.write_str("Q8"),
            GroupLabel::S4 => f.write_str("S4"),
            GroupLabel::A5 => f.write_str("A5"),
            GroupLabel::S5 => f.write_str("S5"),
            GroupLabel::Other(n) => write!(f, "order-{n}"),
        }
    }
}

const S4_ORDERS: [(usize, usize); 4] = [(1, 1), (2, 9), (3, 8), (4, 6)];
const A5_ORDERS: [(usize, usize); 4] = [(1, 1), (2, 15), (3, 20), (5, 24)];
const S5_ORDERS: [(usize, usize); 6] = [(1, 1), (2, 25), (3, 20), (4, 30), (5, 24), (6, 20)];

/// Name the group by order, commutativity and its element-order histogram.
/// Among groups of orders 24, 60 and 120 these histograms single out S4,
/// A5 and S5.
pub fn identify_group<T>(g: &FiniteGroup<T>) -> GroupLabel {
    let n = g.order();
    let hist = g.order_histogram();
    let matches = |reference: &[(usize, usize)]| hist.iter().map(|(&k, &v)| (k, v)).eq(reference.iter().copied());
    let involutions = hist.get(&2).copied().unwrap_or(0);
    match n {
        1 => GroupLabel::Trivial,
        2 => GroupLabel::Z2,
        4 if hist.contains_key(&4) => GroupLabel::Z4,
        4 => GroupLabel::V4,
        6 if !g.is_abelian() => GroupLabel::S3,
        8 if !g.is_abelian() && involutions == 5 => GroupLabel::D4,
        8 if !g.is_abelian() && involutions == 1 => GroupLabel::Q8,
        24 if matches(&S4_ORDERS) => GroupLabel::S4,
        60 if matches(&A5_ORDERS) => GroupLabel::A5,
        120 if matches(&S5_ORDERS) => GroupLabel::S5,
        _ => GroupLabel::Other(n),
    }
}
