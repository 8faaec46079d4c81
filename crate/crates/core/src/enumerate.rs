//! Enumeration of all quandles of a given small order up to isomorphism.

use std::collections::HashMap;

use crate::iso::{are_isomorphic, canonical_form};
use crate::quandle::FiniteQuandle;
use crate::{Error, Result};

/// Default hard cap on the order accepted by [`enumerate_quandles`].
pub const DEFAULT_ENUMERATION_CAP: usize = 6;

const UNSET: usize = usize::MAX;

/// All quandles of order `n` up to isomorphism, as canonical tables in
/// ascending order of their row-major tables.
pub fn enumerate_quandles(n: usize) -> Result<Vec<FiniteQuandle>> {
    enumerate_quandles_with_cap(n, DEFAULT_ENUMERATION_CAP)
}

pub fn enumerate_quandles_with_cap(n: usize, cap: usize) -> Result<Vec<FiniteQuandle>> {
    if n == 0 {
        return Err(Error::Malformed("quandle order must be positive".into()));
    }
    if n > cap {
        return Err(Error::CapExceeded {
            what: "enumeration order",
            cap,
            got: n,
        });
    }

    let mut reps: Vec<FiniteQuandle> = Vec::new();
    let mut buckets: HashMap<Vec<usize>, Vec<usize>> = HashMap::new();
    let mut search = TableSearch::new(n);
    search.run(&mut |table| {
        let q = FiniteQuandle::from_fn(n, |x, y| table[x * n + y]).expect("search yields quandles");
        let key = class_invariant(&q);
        let bucket = buckets.entry(key).or_default();
        if !bucket.iter().any(|&i| are_isomorphic(&reps[i], &q)) {
            bucket.push(reps.len());
            reps.push(q);
        }
    });

    let mut canon: Vec<FiniteQuandle> = reps.iter().map(canonical_form).collect();
    canon.sort_by(|a, b| a.flat_table().cmp(b.flat_table()));
    Ok(canon)
}

/// Sorted multiset of per-column fixed-point counts and per-row fixed counts.
fn class_invariant(q: &FiniteQuandle) -> Vec<usize> {
    let n = q.size();
    let mut cols: Vec<usize> = (0..n)
        .map(|y| (0..n).filter(|&x| q.op(x, y) == x).count())
        .collect();
    let mut rows: Vec<usize> = (0..n)
        .map(|x| (0..n).filter(|&y| q.op(x, y) == x).count())
        .collect();
    cols.sort_unstable();
    rows.sort_unstable();
    cols.extend(rows);
    cols
}

/// Backtracking over cells with column-bijectivity and forced-value
/// propagation from right distributivity.
struct TableSearch {
    n: usize,
    cells: Vec<usize>,
    col_used: Vec<u64>,
    trail: Vec<usize>,
}

impl TableSearch {
    fn new(n: usize) -> Self {
        assert!(n <= 64);
        let mut s = TableSearch {
            n,
            cells: vec![UNSET; n * n],
            col_used: vec![0; n],
            trail: Vec::new(),
        };
        for x in 0..n {
            s.set(x, x, x);
        }
        s.trail.clear();
        s
    }

    fn get(&self, x: usize, y: usize) -> usize {
        self.cells[x * self.n + y]
    }

    fn set(&mut self, x: usize, y: usize, v: usize) -> bool {
        let bit = 1u64 << v;
        if self.col_used[y] & bit != 0 {
            return false;
        }
        self.col_used[y] |= bit;
        self.cells[x * self.n + y] = v;
        self.trail.push(x * self.n + y);
        true
    }

    fn undo_to(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let idx = self.trail.pop().unwrap();
            let y = idx % self.n;
            self.col_used[y] &= !(1u64 << self.cells[idx]);
            self.cells[idx] = UNSET;
        }
    }

    /// Forces `(x⊳y)⊳z = (x⊳z)⊳(y⊳z)` wherever one side is known and the
    /// other side's outer cell is the only unknown. False on contradiction.
    fn propagate(&mut self) -> bool {
        let n = self.n;
        loop {
            let mut changed = false;
            for x in 0..n {
                for y in 0..n {
                    let xy = self.get(x, y);
                    if xy == UNSET {
                        continue;
                    }
                    for z in 0..n {
                        let xz = self.get(x, z);
                        let yz = self.get(y, z);
                        if xz == UNSET || yz == UNSET {
                            continue;
                        }
                        let lhs = self.get(xy, z);
                        let rhs = self.get(xz, yz);
                        match (lhs == UNSET, rhs == UNSET) {
                            (false, false) => {
                                if lhs != rhs {
                                    return false;
                                }
                            }
                            (true, false) => {
                                if !self.set(xy, z, rhs) {
                                    return false;
                                }
                                changed = true;
                            }
                            (false, true) => {
                                if !self.set(xz, yz, lhs) {
                                    return false;
                                }
                                changed = true;
                            }
                            (true, true) => {}
                        }
                    }
                }
            }
            if !changed {
                return true;
            }
        }
    }

    fn run(&mut self, found: &mut dyn FnMut(&[usize])) {
        // Column-major: finish one symmetry before starting the next.
        let n = self.n;
        let next = (0..n * n)
            .map(|i| (i % n) * n + i / n)
            .find(|&idx| self.cells[idx] == UNSET);
        let Some(idx) = next else {
            found(&self.cells);
            return;
        };
        let (x, y) = (idx / n, idx % n);
        for v in 0..n {
            let mark = self.trail.len();
            if self.set(x, y, v) && self.propagate() {
                self.run(found);
            }
            self.undo_to(mark);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        let counts: Vec<usize> = (1..=4)
            .map(|n| enumerate_quandles(n).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 1, 3, 7]);
    }

    #[test]
    fn order_two_is_trivial() {
        let qs = enumerate_quandles(2).unwrap();
        assert_eq!(qs[0].rows(), vec![vec![0, 0], vec![1, 1]]);
    }

    #[test]
    fn cap_is_enforced() {
        assert!(matches!(
            enumerate_quandles(7),
            Err(Error::CapExceeded { .. })
        ));
        assert!(matches!(
            enumerate_quandles_with_cap(4, 3),
            Err(Error::CapExceeded { .. })
        ));
        assert!(enumerate_quandles(0).is_err());
    }
}
#[cfg(test)]
mod larger_orders {
    #[test]
    fn counts_five_and_six() {
        assert_eq!(super::enumerate_quandles(5).unwrap().len(), 22);
        assert_eq!(super::enumerate_quandles(6).unwrap().len(), 73);
    }
}
