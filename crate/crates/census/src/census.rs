//! Exhaustive census of the 2^15 signatures of the Petersen graph.

use rayon::prelude::*;

use sigpet::coloring::{chromatic_numbers, count_colorations};
use sigpet::frustration::{frustration_index, frustration_number};
use sigpet::six::{classify_mask, petersen_cuts, petersen_frustration_index, petersen_negative_circles};
use sigpet::{max_inclusterability, Petersen, SignedGraph, SixType};

use crate::error::Result;

/// Environment variable holding the census worker count.
pub const THREADS_ENV: &str = "SIGPET_THREADS";

/// Invariants of one class, computed on its standard minimal signature.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClassInvariants {
    pub l: usize,
    pub l0: usize,
    pub c5: usize,
    pub c6: usize,
    pub chi: usize,
    pub chi_star: usize,
    pub chi3: u64,
}

impl ClassInvariants {
    pub fn of(s: &SignedGraph) -> Result<ClassInvariants> {
        let mask = s.petersen_mask()?;
        let (c5, c6) = petersen_negative_circles(mask);
        let (chi, chi_star) = chromatic_numbers(s)?;
        Ok(ClassInvariants {
            l: frustration_index(s)?.0,
            l0: frustration_number(s)?.0,
            c5,
            c6,
            chi,
            chi_star,
            chi3: count_colorations(s, 1, false)?,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassCensus {
    pub class: SixType,
    pub signatures: usize,
    pub switching_classes: usize,
    pub minimal_signatures: usize,
    pub representative: u16,
    pub invariants: ClassInvariants,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusReport {
    /// In class order.
    pub classes: Vec<ClassCensus>,
    pub total_signatures: usize,
    pub total_switching_classes: usize,
    /// Signatures with `l₀ ≠ l`.
    pub l0_mismatches: usize,
    pub max_inclusterability: usize,
}

#[derive(Debug, Clone, Default)]
struct Tally {
    signatures: [usize; 6],
    switching_classes: [usize; 6],
    minimal: [usize; 6],
    l0_mismatches: usize,
}

impl Tally {
    fn add(mut self, mask: u16) -> Tally {
        let class = classify_mask(mask).index();
        let l = petersen_frustration_index(mask);
        self.signatures[class] += 1;
        if mask.count_ones() as usize == l {
            self.minimal[class] += 1;
        }
        // Count each switching class once, at its least mask.
        if petersen_cuts().iter().all(|&c| mask ^ c >= mask) {
            self.switching_classes[class] += 1;
        }
        let s = SignedGraph::petersen(mask).expect("15-bit mask");
        let l0 = frustration_number(&s).expect("Petersen is within search limits").0;
        if l0 != l {
            self.l0_mismatches += 1;
        }
        self
    }

    fn merge(mut self, other: Tally) -> Tally {
        for i in 0..6 {
            self.signatures[i] += other.signatures[i];
            self.switching_classes[i] += other.switching_classes[i];
            self.minimal[i] += other.minimal[i];
        }
        self.l0_mismatches += other.l0_mismatches;
        self
    }
}

/// Worker pool sized by [`THREADS_ENV`], or rayon's default when unset.
pub fn thread_pool() -> rayon::ThreadPool {
    let threads = std::env::var(THREADS_ENV)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .unwrap_or(0);
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .expect("thread pool")
}

/// Classify every 15-bit mask and tally per class.
pub fn run_census() -> Result<CensusReport> {
    let tally = thread_pool().install(|| {
        (0..0x8000u16)
            .into_par_iter()
            .fold(Tally::default, Tally::add)
            .reduce(Tally::default, Tally::merge)
    });
    let mut classes = Vec::with_capacity(6);
    for t in SixType::ALL {
        let i = t.index();
        classes.push(ClassCensus {
            class: t,
            signatures: tally.signatures[i],
            switching_classes: tally.switching_classes[i],
            minimal_signatures: tally.minimal[i],
            representative: t.standard_mask(),
            invariants: ClassInvariants::of(&t.standard())?,
        });
    }
    Ok(CensusReport {
        total_signatures: tally.signatures.iter().sum(),
        total_switching_classes: tally.switching_classes.iter().sum(),
        classes,
        l0_mismatches: tally.l0_mismatches,
        max_inclusterability: max_inclusterability(Petersen::get().graph(), false)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tally_merge_is_addition() {
        let a = [0u16, 1, 0x7FFF].into_iter().fold(Tally::default(), Tally::add);
        let b = [3u16, 0x100].into_iter().fold(Tally::default(), Tally::add);
        let all = [0u16, 1, 0x7FFF, 3, 0x100]
            .into_iter()
            .fold(Tally::default(), Tally::add);
        let merged = a.merge(b);
        assert_eq!(merged.signatures, all.signatures);
        assert_eq!(merged.minimal, all.minimal);
        assert_eq!(merged.switching_classes, all.switching_classes);
    }

    #[test]
    fn invariants_of_p33() {
        let inv = ClassInvariants::of(&SixType::P33.standard()).unwrap();
        assert_eq!((inv.l, inv.l0, inv.c5, inv.c6), (3, 3, 12, 0));
        assert_eq!((inv.chi, inv.chi_star, inv.chi3), (1, 1, 202));
    }
}
