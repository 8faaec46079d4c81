//! Isomorphism search between finite quandles and canonical forms.

use crate::quandle::{ElementMap, FiniteQuandle};

/// Per-element data preserved by every isomorphism.
fn element_invariants(q: &FiniteQuandle) -> Vec<(usize, usize, usize)> {
    let n = q.size();
    (0..n)
        .map(|e| {
            let column_fixed = (0..n).filter(|&x| q.op(x, e) == x).count();
            let row_fixed = (0..n).filter(|&y| q.op(e, y) == e).count();
            let order = symmetry_order(q, e);
            (column_fixed, row_fixed, order)
        })
        .collect()
}

fn symmetry_order(q: &FiniteQuandle, y: usize) -> usize {
    let n = q.size();
    let mut cur: Vec<usize> = (0..n).map(|x| q.op(x, y)).collect();
    let mut k = 1;
    while cur.iter().enumerate().any(|(i, &v)| i != v) {
        cur = cur.iter().map(|&x| q.op(x, y)).collect();
        k += 1;
    }
    k
}

struct Search<'a> {
    a: &'a FiniteQuandle,
    b: &'a FiniteQuandle,
    inv_a: Vec<(usize, usize, usize)>,
    inv_b: Vec<(usize, usize, usize)>,
    map: Vec<usize>,
    used: Vec<bool>,
    trail: Vec<usize>,
}

const UNSET: usize = usize::MAX;

impl<'a> Search<'a> {
    fn new(a: &'a FiniteQuandle, b: &'a FiniteQuandle) -> Self {
        let n = a.size();
        Search {
            a,
            b,
            inv_a: element_invariants(a),
            inv_b: element_invariants(b),
            map: vec![UNSET; n],
            used: vec![false; n],
            trail: Vec::new(),
        }
    }

    fn assign(&mut self, x: usize, y: usize) -> bool {
        if self.used[y] || self.inv_a[x] != self.inv_b[y] {
            return false;
        }
        self.map[x] = y;
        self.used[y] = true;
        self.trail.push(x);
        true
    }

    fn undo_to(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let x = self.trail.pop().unwrap();
            self.used[self.map[x]] = false;
            self.map[x] = UNSET;
        }
    }

    /// Derives every forced image from the current partial map. Returns false
    /// on contradiction.
    fn propagate(&mut self) -> bool {
        let n = self.a.size();
        let mut changed = true;
        while changed {
            changed = false;
            for x in 0..n {
                if self.map[x] == UNSET {
                    continue;
                }
                for y in 0..n {
                    if self.map[y] == UNSET {
                        continue;
                    }
                    let (hx, hy) = (self.map[x], self.map[y]);
                    for (src, dst) in [
                        (self.a.op(x, y), self.b.op(hx, hy)),
                        (self.a.inv_op(x, y), self.b.inv_op(hx, hy)),
                    ] {
                        match self.map[src] {
                            UNSET => {
                                if !self.assign(src, dst) {
                                    return false;
                                }
                                changed = true;
                            }
                            m if m != dst => return false,
                            _ => {}
                        }
                    }
                }
            }
        }
        true
    }

    /// Depth-first search over images in ascending order; calls `found` on
    /// each complete isomorphism and stops when it returns false.
    fn run(&mut self, found: &mut dyn FnMut(&[usize]) -> bool) -> bool {
        let Some(x) = self.map.iter().position(|&m| m == UNSET) else {
            return found(&self.map);
        };
        for y in 0..self.b.size() {
            let mark = self.trail.len();
            if self.assign(x, y) && self.propagate() && !self.run(found) {
                self.undo_to(mark);
                return false;
            }
            self.undo_to(mark);
        }
        true
    }
}

fn search_isomorphisms(
    a: &FiniteQuandle,
    b: &FiniteQuandle,
    found: &mut dyn FnMut(&[usize]) -> bool,
) {
    if a.size() != b.size() {
        return;
    }
    let mut s = Search::new(a, b);
    let mut ia = s.inv_a.clone();
    let mut ib = s.inv_b.clone();
    ia.sort_unstable();
    ib.sort_unstable();
    if ia != ib {
        return;
    }
    s.run(found);
}

/// The lexicographically least isomorphism `q1 → q2`, if one exists.
pub fn find_isomorphism(q1: &FiniteQuandle, q2: &FiniteQuandle) -> Option<ElementMap> {
    let mut result = None;
    search_isomorphisms(q1, q2, &mut |m| {
        result = Some(m.to_vec());
        false
    });
    result.map(|images| ElementMap::new(images, q2.size()).expect("isomorphism images in range"))
}

pub fn are_isomorphic(q1: &FiniteQuandle, q2: &FiniteQuandle) -> bool {
    find_isomorphism(q1, q2).is_some()
}

/// Every automorphism of `q`, in lexicographic order of image vectors.
pub fn automorphisms(q: &FiniteQuandle) -> Vec<Vec<usize>> {
    let mut all = Vec::new();
    search_isomorphisms(q, q, &mut |m| {
        all.push(m.to_vec());
        true
    });
    all
}

/// Minimal row-major table over all `n!` relabellings.
///
/// Exhaustive; intended for the small orders handled by enumeration.
pub fn canonical_form(q: &FiniteQuandle) -> FiniteQuandle {
    let n = q.size();
    let mut best: Option<FiniteQuandle> = None;
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        let candidate = q.relabel(&perm);
        if best
            .as_ref()
            .is_none_or(|b| candidate.flat_table() < b.flat_table())
        {
            best = Some(candidate);
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    best.expect("at least one relabelling")
}

/// Advances to the next permutation in lexicographic order.
pub(crate) fn next_permutation(p: &mut [usize]) -> bool {
    if p.len() < 2 {
        return false;
    }
    let Some(i) = (0..p.len() - 1).rev().find(|&i| p[i] < p[i + 1]) else {
        return false;
    };
    let j = (i + 1..p.len()).rev().find(|&j| p[j] > p[i]).unwrap();
    p.swap(i, j);
    p[i + 1..].reverse();
    true
}
