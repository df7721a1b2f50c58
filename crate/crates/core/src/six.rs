//! The six switching-isomorphism classes of signed Petersen graphs.

use std::fmt;
use std::sync::OnceLock;

use crate::error::Result;
use crate::petersen::{Petersen, ALL_EDGES};
use crate::signed::{SignedGraph, SwitchingFunction};

/// Switching-isomorphism class of a Petersen signature, named by its
/// minimal form: `+P`, one negative edge, two at distance 2 or 3, three
/// alternating on a hexagon, three pairwise at distance 3.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SixType {
    PlusP,
    P1,
    P22,
    P23,
    P32,
    P33,
}

impl SixType {
    /// Column order used by every table.
    pub const ALL: [SixType; 6] = [
        SixType::PlusP,
        SixType::P1,
        SixType::P22,
        SixType::P23,
        SixType::P32,
        SixType::P33,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SixType::PlusP => "+P",
            SixType::P1 => "P1",
            SixType::P22 => "P22",
            SixType::P23 => "P23",
            SixType::P32 => "P32",
            SixType::P33 => "P33",
        }
    }

    pub fn index(self) -> usize {
        self as usize
    }

    /// `(frustration index, negative pentagons)`, distinct across classes.
    pub fn fingerprint(self) -> (usize, usize) {
        match self {
            SixType::PlusP => (0, 0),
            SixType::P1 => (1, 4),
            SixType::P22 => (2, 6),
            SixType::P23 => (2, 8),
            SixType::P32 => (3, 6),
            SixType::P33 => (3, 12),
        }
    }

    pub fn from_fingerprint(l: usize, c5: usize) -> Option<SixType> {
        SixType::ALL.into_iter().find(|t| t.fingerprint() == (l, c5))
    }

    /// The standard minimal signature of the class. `P32` has its negative
    /// edges `v14v25, v15v34, v24v35` on the hexagon `H_45`, `P33` has
    /// `M_{3(5)}`, and the others take the least minimal mask in the class.
    pub fn standard_mask(self) -> u16 {
        tables().standard[self.index()]
    }

    pub fn standard(self) -> SignedGraph {
        SignedGraph::petersen(self.standard_mask()).expect("15-bit mask")
    }

    pub fn parse(name: &str) -> Option<SixType> {
        let key = name.trim();
        SixType::ALL
            .into_iter()
            .find(|t| t.name().eq_ignore_ascii_case(key) || (key == "P" && *t == SixType::PlusP))
    }
}

impl fmt::Display for SixType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

struct Tables {
    /// `∂X` for the 512 vertex sets avoiding vertex 0, indexed by `X >> 1`.
    cuts: Vec<u16>,
    pentagons: Vec<u16>,
    hexagons: Vec<u16>,
    standard: [u16; 6],
}

fn tables() -> &'static Tables {
    static TABLES: OnceLock<Tables> = OnceLock::new();
    TABLES.get_or_init(|| {
        let p = Petersen::get();
        let g = p.graph();
        let cuts = (0..512u32).map(|i| g.cut(i << 1) as u16).collect();
        let pentagons = p.pentagons().iter().map(|c| c.edges() as u16).collect();
        let hexagons = p.hexagons().iter().map(|c| c.edges() as u16).collect();
        let mut t = Tables {
            cuts,
            pentagons,
            hexagons,
            standard: [0; 6],
        };
        let edge = |a, b| 1u16 << p.edge_between(a, b).unwrap();
        t.standard[SixType::P32.index()] = edge((1, 4), (2, 5)) | edge((1, 5), (3, 4)) | edge((2, 4), (3, 5));
        t.standard[SixType::P33.index()] = p.m3(4) as u16;
        for ty in [SixType::PlusP, SixType::P1, SixType::P22, SixType::P23] {
            let l = ty.fingerprint().0;
            t.standard[ty.index()] = (0..=ALL_EDGES as u16)
                .find(|&m| m.count_ones() as usize == l && classify_with(&t, m) == ty)
                .unwrap();
        }
        t
    })
}

/// Minimum number of negative edges over all switchings, with the least
/// minimizing mask and the switching set producing it.
fn minimize(t: &Tables, mask: u16) -> (usize, u16, u32) {
    let mut best = (u32::MAX, u16::MAX, 0u32);
    for (i, &cut) in t.cuts.iter().enumerate() {
        let m = mask ^ cut;
        let key = (m.count_ones(), m);
        if key < (best.0, best.1) {
            best = (key.0, key.1, (i as u32) << 1);
        }
    }
    (best.0 as usize, best.1, best.2)
}

fn classify_with(t: &Tables, mask: u16) -> SixType {
    let l = t.cuts.iter().map(|&c| (mask ^ c).count_ones()).min().unwrap() as usize;
    let c5 = negative_pentagons_with(t, mask);
    SixType::from_fingerprint(l, c5).expect("every Petersen signature has one of six fingerprints")
}

fn negative_pentagons_with(t: &Tables, mask: u16) -> usize {
    t.pentagons
        .iter()
        .filter(|&&c| (c & mask).count_ones() % 2 == 1)
        .count()
}

/// Frustration index of a Petersen sign mask by scanning its 512 switchings.
pub fn petersen_frustration_index(mask: u16) -> usize {
    let t = tables();
    t.cuts.iter().map(|&c| (mask ^ c).count_ones()).min().unwrap() as usize
}

/// Numbers of negative pentagons and negative hexagons of a Petersen mask.
pub fn petersen_negative_circles(mask: u16) -> (usize, usize) {
    let t = tables();
    let c6 = t.hexagons.iter().filter(|&&c| (c & mask).count_ones() % 2 == 1).count();
    (negative_pentagons_with(t, mask), c6)
}

/// Class of a Petersen sign mask.
pub fn classify_mask(mask: u16) -> SixType {
    classify_with(tables(), mask & ALL_EDGES as u16)
}

/// Cut masks `∂X` for the 512 switching sets avoiding vertex 0.
pub fn petersen_cuts() -> &'static [u16] {
    &tables().cuts
}

pub fn classify_six(s: &SignedGraph) -> Result<SixType> {
    Ok(classify_mask(s.petersen_mask()?))
}

/// The switching of `s` with the fewest negative edges (least mask on
/// ties) and a switching function producing it.
pub fn minimal_representative(s: &SignedGraph) -> Result<(SignedGraph, SwitchingFunction)> {
    let mask = s.petersen_mask()?;
    let (_, best, x) = minimize(tables(), mask);
    let zeta = SwitchingFunction::new(10, x)?;
    Ok((SignedGraph::petersen(best)?, zeta))
}
