//! Permutations of `{0..n-1}` and small explicitly materialized groups.
//!
//! Permutations act on the right: `x·(σ then τ) = τ(σ(x))`, matching the way
//! inner automorphisms act on a quandle.

use std::collections::{HashMap, VecDeque};
use std::fmt;

use crate::set::ElementSet;
use crate::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree).collect(),
        }
    }

    pub fn new(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &v in &images {
            if v >= n {
                return Err(Error::OutOfRange { index: v, size: n });
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::Malformed(format!("{images:?} is not a bijection")));
            }
        }
        Ok(Permutation { images })
    }

    /// 0-based transposition of `a` and `b`.
    pub fn transposition(degree: usize, a: usize, b: usize) -> Self {
        let mut images: Vec<usize> = (0..degree).collect();
        images.swap(a, b);
        Permutation { images }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    /// Apply `self`, then `next`.
    pub fn then(&self, next: &Permutation) -> Permutation {
        assert_eq!(self.degree(), next.degree(), "degree mismatch");
        Permutation {
            images: self.images.iter().map(|&x| next.images[x]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.degree()];
        for (x, &y) in self.images.iter().enumerate() {
            images[y] = x;
        }
        Permutation { images }
    }

    /// `g⁻¹ · self · g` in right-action order: apply `g⁻¹`, then `self`, then `g`.
    pub fn conjugate_by(&self, g: &Permutation) -> Permutation {
        g.inverse().then(self).then(g)
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| i == v)
    }

    pub fn image_of(&self, s: &ElementSet) -> ElementSet {
        ElementSet::from_members(s.carrier_size(), s.iter().map(|x| self.apply(x)))
    }

    /// Whether `self` maps `s` into itself (and hence onto it).
    pub fn preserves(&self, s: &ElementSet) -> bool {
        s.iter().all(|x| s.contains(self.apply(x)))
    }

    /// Restriction to an invariant subset, renumbered by `members` order.
    /// Returns `None` if the subset is not preserved.
    pub fn restrict(&self, members: &[usize]) -> Option<Permutation> {
        let mut local = HashMap::with_capacity(members.len());
        for (i, &m) in members.iter().enumerate() {
            local.insert(m, i);
        }
        let images: Option<Vec<usize>> = members
            .iter()
            .map(|&m| local.get(&self.apply(m)).copied())
            .collect();
        images.map(|images| Permutation { images })
    }

    /// Disjoint cycles of length ≥ 2, each starting at its least element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] || self.images[start] == start {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.images[start];
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.images[x];
            }
            out.push(cycle);
        }
        out
    }

    /// Cycle notation with labels from `label`.
    pub fn cycle_string(&self, label: impl Fn(usize) -> String) -> String {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return "()".into();
        }
        cycles
            .iter()
            .map(|c| {
                format!(
                    "({})",
                    c.iter().map(|&x| label(x)).collect::<Vec<_>>().join(" ")
                )
            })
            .collect()
    }
}

/// 1-based cycle notation, e.g. `(2 3)`; the identity prints as `()`.
impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.cycle_string(|x| (x + 1).to_string()))
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation{:?}", self.images)
    }
}

/// A sign on a symmetry letter in a word.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

/// A finitely generated permutation group with all elements materialized.
///
/// Elements are listed in breadth-first order from the identity; `words[i]`
/// is a shortest word in generator indices (positive letters, applied left
/// to right) reaching `elements[i]`.
#[derive(Clone, Debug)]
pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
    words: Vec<Vec<usize>>,
    index: HashMap<Permutation, usize>,
}

/// Default bound on materialized group orders.
pub const DEFAULT_GROUP_ORDER_CAP: usize = 1_000_000;

/// Breadth-first closure under right multiplication by generators.
pub fn generate_group(degree: usize, gens: &[Permutation]) -> Result<PermGroup> {
    generate_group_with_cap(degree, gens, DEFAULT_GROUP_ORDER_CAP)
}

pub fn generate_group_with_cap(
    degree: usize,
    gens: &[Permutation],
    cap: usize,
) -> Result<PermGroup> {
    if let Some(g) = gens.iter().find(|g| g.degree() != degree) {
        return Err(Error::Malformed(format!(
            "generator of degree {} in a group of degree {degree}",
            g.degree()
        )));
    }
    let id = Permutation::identity(degree);
    let mut elements = vec![id.clone()];
    let mut words = vec![Vec::new()];
    let mut index = HashMap::from([(id, 0usize)]);
    let mut queue = VecDeque::from([0usize]);
    while let Some(i) = queue.pop_front() {
        for (gi, g) in gens.iter().enumerate() {
            let next = elements[i].then(g);
            if index.contains_key(&next) {
                continue;
            }
            if elements.len() >= cap {
                return Err(Error::CapExceeded {
                    what: "group order",
                    cap,
                    got: elements.len() + 1,
                });
            }
            let mut w = words[i].clone();
            w.push(gi);
            index.insert(next.clone(), elements.len());
            queue.push_back(elements.len());
            elements.push(next);
            words.push(w);
        }
    }
    Ok(PermGroup {
        degree,
        generators: gens.to_vec(),
        elements,
        words,
        index,
    })
}

impl PermGroup {
    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn word(&self, i: usize) -> &[usize] {
        &self.words[i]
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.index.contains_key(p)
    }

    pub fn position(&self, p: &Permutation) -> Option<usize> {
        self.index.get(p).copied()
    }

    /// `self ≤ other` as sets of permutations.
    pub fn is_subgroup_of(&self, other: &PermGroup) -> bool {
        self.elements.iter().all(|e| other.contains(e))
    }

    /// Normality in `ambient`, checked on generators of `ambient` only.
    pub fn is_normal_in(&self, ambient: &PermGroup) -> bool {
        self.is_subgroup_of(ambient)
            && ambient.generators.iter().all(|a| {
                self.elements
                    .iter()
                    .all(|g| self.contains(&g.conjugate_by(a)))
            })
    }

    /// Orbit partition of `{0..degree-1}` under the group.
    pub fn orbits(&self) -> Vec<ElementSet> {
        let mut seen = ElementSet::empty(self.degree);
        let mut out = Vec::new();
        for x in 0..self.degree {
            if seen.contains(x) {
                continue;
            }
            let orbit =
                ElementSet::from_members(self.degree, self.elements.iter().map(|g| g.apply(x)));
            seen = seen.union(&orbit);
            out.push(orbit);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s3_from_transpositions() {
        let gens = [
            Permutation::transposition(3, 1, 2),
            Permutation::transposition(3, 0, 2),
            Permutation::transposition(3, 0, 1),
        ];
        let g = generate_group(3, &gens).unwrap();
        assert_eq!(g.order(), 6);
        for (i, e) in g.elements().iter().enumerate() {
            let rebuilt = g
                .word(i)
                .iter()
                .fold(Permutation::identity(3), |acc, &k| acc.then(&gens[k]));
            assert_eq!(&rebuilt, e);
        }
    }

    #[test]
    fn empty_generators_give_trivial_group() {
        assert_eq!(generate_group(4, &[]).unwrap().order(), 1);
    }

    #[test]
    fn commuting_involutions() {
        let gens = [
            Permutation::transposition(4, 1, 3),
            Permutation::transposition(4, 0, 2),
        ];
        assert_eq!(generate_group(4, &gens).unwrap().order(), 4);
    }

    #[test]
    fn order_cap() {
        let gens = [
            Permutation::transposition(5, 0, 1),
            Permutation::new(vec![1, 2, 3, 4, 0]).unwrap(),
        ];
        assert!(matches!(
            generate_group_with_cap(5, &gens, 50),
            Err(Error::CapExceeded { .. })
        ));
        assert_eq!(generate_group(5, &gens).unwrap().order(), 120);
    }

    #[test]
    fn cycle_notation() {
        assert_eq!(Permutation::transposition(3, 1, 2).to_string(), "(2 3)");
        assert_eq!(Permutation::identity(3).to_string(), "()");
        assert_eq!(
            Permutation::new(vec![1, 2, 0, 4, 3]).unwrap().to_string(),
            "(1 2 3)(4 5)"
        );
    }

    #[test]
    fn composition_is_right_action() {
        let a = Permutation::new(vec![1, 2, 0]).unwrap();
        let b = Permutation::transposition(3, 0, 1);
        // x=0: a sends to 1, then b sends to 0.
        assert_eq!(a.then(&b).apply(0), 0);
        assert!(a.then(&a.inverse()).is_identity());
    }

    #[test]
    fn restriction() {
        let p = Permutation::new(vec![2, 1, 0, 3]).unwrap();
        assert_eq!(p.restrict(&[0, 2]).unwrap().images(), &[1, 0]);
        assert!(p.restrict(&[0, 1]).is_none());
    }
}
