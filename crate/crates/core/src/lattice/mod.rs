//! The lattice of subquandles of a finite quandle.

mod chain;
mod dot;
mod strong;

use std::collections::{HashMap, HashSet};

pub use chain::{
    check_nested_strong_complement, explicit_chain_complement, removal_rewrite, ChainComplement,
    Letter,
};
pub use dot::to_dot;
pub use strong::{classify_strong_complement, is_strongly_complemented, StrongComplementReport};

use crate::quandle::FiniteQuandle;
use crate::set::ElementSet;
use crate::{Error, Result};

/// Default cap on the carrier size for lattice enumeration.
pub const DEFAULT_LATTICE_CAP: usize = 24;
const WARN_ABOVE: usize = 20;

/// Every subquandle of a quandle, including `∅` and the whole carrier,
/// sorted by size and then lexicographically.
#[derive(Clone, Debug)]
pub struct SubquandleLattice {
    quandle: FiniteQuandle,
    elements: Vec<ElementSet>,
    index: HashMap<ElementSet, usize>,
}

pub fn enumerate_subquandles(q: &FiniteQuandle) -> Result<SubquandleLattice> {
    enumerate_subquandles_with_cap(q, DEFAULT_LATTICE_CAP)
}

/// Closure search: every subquandle is reached from `∅` by repeatedly
/// adding one element and re-closing.
pub fn enumerate_subquandles_with_cap(q: &FiniteQuandle, cap: usize) -> Result<SubquandleLattice> {
    let n = q.size();
    if n > cap {
        return Err(Error::CapExceeded {
            what: "lattice carrier size",
            cap,
            got: n,
        });
    }
    if n > WARN_ABOVE {
        log::warn!("enumerating subquandles of a quandle of order {n}; this may be slow");
    }
    let empty = ElementSet::empty(n);
    let mut seen: HashSet<ElementSet> = HashSet::from([empty.clone()]);
    let mut frontier = vec![empty];
    while let Some(s) = frontier.pop() {
        for x in 0..n {
            if s.contains(x) {
                continue;
            }
            let mut seed = s.clone();
            seed.insert(x);
            let t = q.generated_subquandle(&seed);
            if seen.insert(t.clone()) {
                frontier.push(t);
            }
        }
    }
    let mut elements: Vec<ElementSet> = seen.into_iter().collect();
    elements.sort();
    let index = elements
        .iter()
        .enumerate()
        .map(|(i, s)| (s.clone(), i))
        .collect();
    Ok(SubquandleLattice {
        quandle: q.clone(),
        elements,
        index,
    })
}

pub fn meet(s1: &ElementSet, s2: &ElementSet) -> ElementSet {
    s1.intersection(s2)
}

pub fn join(q: &FiniteQuandle, s1: &ElementSet, s2: &ElementSet) -> ElementSet {
    q.generated_subquandle(&s1.union(s2))
}

/// Whether `c` complements `s` in the lattice of `q`.
pub fn is_complement(q: &FiniteQuandle, s: &ElementSet, c: &ElementSet) -> bool {
    s.is_disjoint(c) && join(q, s, c).is_full()
}

/// Every subquandle paired with the first complement found in lattice order.
#[derive(Clone, Debug)]
pub struct ComplementVerdict {
    pub complemented: bool,
    /// `(subquandle index, complement index)` into the lattice.
    pub witnesses: Vec<(usize, Option<usize>)>,
}

impl SubquandleLattice {
    pub fn quandle(&self) -> &FiniteQuandle {
        &self.quandle
    }

    pub fn elements(&self) -> &[ElementSet] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn position(&self, s: &ElementSet) -> Option<usize> {
        self.index.get(s).copied()
    }

    pub fn contains(&self, s: &ElementSet) -> bool {
        self.index.contains_key(s)
    }

    /// The least complement of `s` in (size, lexicographic) order.
    pub fn complement_search(&self, s: &ElementSet) -> Result<Option<ElementSet>> {
        if !self.contains(s) {
            return Err(Error::NotSubquandle(s.one_based()));
        }
        Ok(self.first_complement(s).map(|i| self.elements[i].clone()))
    }

    fn first_complement(&self, s: &ElementSet) -> Option<usize> {
        self.elements
            .iter()
            .position(|c| is_complement(&self.quandle, s, c))
    }

    /// Searches a complement for every subquandle.
    pub fn is_complemented(&self) -> ComplementVerdict {
        let witnesses: Vec<(usize, Option<usize>)> = self
            .elements
            .iter()
            .enumerate()
            .map(|(i, s)| (i, self.first_complement(s)))
            .collect();
        ComplementVerdict {
            complemented: witnesses.iter().all(|(_, c)| c.is_some()),
            witnesses,
        }
    }

    /// Proper subquandles not strictly contained in another proper one.
    pub fn maximal_subquandles(&self) -> Vec<ElementSet> {
        let proper: Vec<&ElementSet> = self.elements.iter().filter(|s| !s.is_full()).collect();
        proper
            .iter()
            .filter(|s| !proper.iter().any(|t| t.len() > s.len() && s.is_subset(t)))
            .map(|s| (*s).clone())
            .collect()
    }

    /// Covering pairs `(lower, upper)` of the inclusion order, by index.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (i, a) in self.elements.iter().enumerate() {
            let above: Vec<usize> = (i + 1..self.elements.len())
                .filter(|&j| self.elements[j].len() > a.len() && a.is_subset(&self.elements[j]))
                .collect();
            for &j in &above {
                let b = &self.elements[j];
                let between = above.iter().any(|&k| {
                    k != j && self.elements[k].len() < b.len() && self.elements[k].is_subset(b)
                });
                if !between {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// A complement of `r1` inside the lattice of `r1 ∨ r2` drawn from the
    /// subquandles contained in `r2`.
    pub fn complement_within_join(&self, r1: &ElementSet, r2: &ElementSet) -> Option<ElementSet> {
        let top = join(&self.quandle, r1, r2);
        self.elements
            .iter()
            .filter(|c| c.is_subset(r2) && c.is_disjoint(r1))
            .find(|c| join(&self.quandle, r1, c) == top)
            .cloned()
    }
}

/// Intersection of all maximal subquandles (the full carrier if there are none).
pub fn maximal_intersection(lattice: &SubquandleLattice) -> ElementSet {
    lattice
        .maximal_subquandles()
        .iter()
        .fold(ElementSet::full(lattice.quandle.size()), |acc, m| {
            acc.intersection(m)
        })
}
