//! Finite quandles given by operation tables, and the basic operations on them.

use std::fmt;

use crate::set::ElementSet;
use crate::{Error, Result};

/// Which of the two quandle operations to apply.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    /// `x ⊳ y`
    Forward,
    /// `x ⊳⁻¹ y`
    Backward,
}

/// A validated finite rack or quandle on `{0..n-1}`.
///
/// `table[x][y] = x ⊳ y`. Every column `x ↦ x ⊳ y` is a permutation, and
/// `inv_table` holds the inverse permutations column-wise. Values are
/// immutable once built.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FiniteQuandle {
    size: usize,
    table: Vec<usize>,
    inv_table: Vec<usize>,
    is_quandle: bool,
    is_kei: bool,
}

/// One violated axiom together with a witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AxiomViolation {
    /// `x ⊳ x ≠ x`.
    Idempotence { x: usize, value: usize },
    /// Column `y` sends `x1` and `x2` to the same element.
    ColumnNotBijective {
        y: usize,
        x1: usize,
        x2: usize,
        value: usize,
    },
    /// `(x⊳y)⊳z ≠ (x⊳z)⊳(y⊳z)`.
    Distributivity { x: usize, y: usize, z: usize },
}

impl fmt::Display for AxiomViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // 1-based labels, matching the table file format.
        match *self {
            AxiomViolation::Idempotence { x, value } => {
                write!(f, "Q1 (idempotence): {0} ⊳ {0} = {1}", x + 1, value + 1)
            }
            AxiomViolation::ColumnNotBijective { y, x1, x2, value } => write!(
                f,
                "Q2 (right invertibility): column {} is not a bijection ({} ⊳ {} = {} ⊳ {} = {})",
                y + 1,
                x1 + 1,
                y + 1,
                x2 + 1,
                y + 1,
                value + 1
            ),
            AxiomViolation::Distributivity { x, y, z } => write!(
                f,
                "Q3 (right distributivity): fails at x={}, y={}, z={}",
                x + 1,
                y + 1,
                z + 1
            ),
        }
    }
}

/// Every axiom failure found while validating a table.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<AxiomViolation>,
}

impl ValidationReport {
    /// Fatal means the table is not even a rack (Q2 or Q3 fails).
    pub fn is_fatal(&self) -> bool {
        self.violations
            .iter()
            .any(|v| !matches!(v, AxiomViolation::Idempotence { .. }))
    }

    pub fn bad_columns(&self) -> Vec<usize> {
        let mut cols: Vec<usize> = self
            .violations
            .iter()
            .filter_map(|v| match v {
                AxiomViolation::ColumnNotBijective { y, .. } => Some(*y),
                _ => None,
            })
            .collect();
        cols.dedup();
        cols
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in &self.violations {
            writeln!(f, "  {v}")?;
        }
        Ok(())
    }
}

/// Checks the axioms on a raw square table with 0-based entries.
///
/// Racks (Q2 and Q3 but not Q1) are accepted with `is_quandle() == false`.
/// A non-bijective column or a distributivity failure yields
/// [`Error::Axioms`] listing each violated axiom with a witness.
pub fn validate_table(raw: &[Vec<usize>]) -> Result<FiniteQuandle> {
    let n = raw.len();
    if n == 0 {
        return Err(Error::Malformed("empty table".into()));
    }
    for (x, row) in raw.iter().enumerate() {
        if row.len() != n {
            return Err(Error::Malformed(format!(
                "row {} has {} entries, expected {n}",
                x + 1,
                row.len()
            )));
        }
        if let Some(&v) = row.iter().find(|&&v| v >= n) {
            return Err(Error::OutOfRange { index: v, size: n });
        }
    }

    let mut report = ValidationReport::default();
    let mut idempotence = Vec::new();
    for (x, row) in raw.iter().enumerate() {
        if row[x] != x {
            idempotence.push(AxiomViolation::Idempotence { x, value: row[x] });
        }
    }

    let mut inv_table = vec![0; n * n];
    for y in 0..n {
        let mut preimage = vec![usize::MAX; n];
        let mut bad = None;
        for (x, row) in raw.iter().enumerate() {
            let v = row[y];
            if preimage[v] != usize::MAX {
                bad.get_or_insert(AxiomViolation::ColumnNotBijective {
                    y,
                    x1: preimage[v],
                    x2: x,
                    value: v,
                });
            } else {
                preimage[v] = x;
            }
        }
        match bad {
            Some(v) => report.violations.push(v),
            None => {
                for (v, &x) in preimage.iter().enumerate() {
                    inv_table[v * n + y] = x;
                }
            }
        }
    }

    'q3: for x in 0..n {
        for y in 0..n {
            for z in 0..n {
                if raw[raw[x][y]][z] != raw[raw[x][z]][raw[y][z]] {
                    report
                        .violations
                        .push(AxiomViolation::Distributivity { x, y, z });
                    break 'q3;
                }
            }
        }
    }

    if report.is_fatal() {
        report.violations.extend(idempotence);
        return Err(Error::Axioms(report));
    }

    let table: Vec<usize> = raw.iter().flatten().copied().collect();
    let is_kei = (0..n).all(|x| (0..n).all(|y| table[table[x * n + y] * n + y] == x));
    Ok(FiniteQuandle {
        size: n,
        table,
        inv_table,
        is_quandle: idempotence.is_empty(),
        is_kei,
    })
}

impl FiniteQuandle {
    /// Builds from a table of 0-based entries. See [`validate_table`].
    pub fn from_rows(raw: &[Vec<usize>]) -> Result<Self> {
        validate_table(raw)
    }

    /// Builds from a closure `(x, y) ↦ x ⊳ y`.
    pub fn from_fn(n: usize, op: impl Fn(usize, usize) -> usize) -> Result<Self> {
        let raw: Vec<Vec<usize>> = (0..n).map(|x| (0..n).map(|y| op(x, y)).collect()).collect();
        validate_table(&raw)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn is_quandle(&self) -> bool {
        self.is_quandle
    }

    pub fn is_kei(&self) -> bool {
        self.is_kei
    }

    /// Fails with [`Error::NotAQuandle`] for racks.
    pub fn require_quandle(&self) -> Result<()> {
        if self.is_quandle {
            Ok(())
        } else {
            Err(Error::NotAQuandle)
        }
    }

    /// `x ⊳ y` without bounds reporting; panics on out-of-range indices.
    #[inline]
    pub fn op(&self, x: usize, y: usize) -> usize {
        self.table[x * self.size + y]
    }

    /// `x ⊳⁻¹ y`.
    #[inline]
    pub fn inv_op(&self, x: usize, y: usize) -> usize {
        self.inv_table[x * self.size + y]
    }

    pub fn evaluate(&self, x: usize, y: usize, dir: Direction) -> Result<usize> {
        for i in [x, y] {
            if i >= self.size {
                return Err(Error::OutOfRange {
                    index: i,
                    size: self.size,
                });
            }
        }
        Ok(match dir {
            Direction::Forward => self.op(x, y),
            Direction::Backward => self.inv_op(x, y),
        })
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table.chunks(self.size).map(|r| r.to_vec()).collect()
    }

    /// Row-major flattened table.
    pub fn flat_table(&self) -> &[usize] {
        &self.table
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.size
    }

    /// Least subset containing `seed` closed under `⊳` and `⊳⁻¹`.
    pub fn generated_subquandle(&self, seed: &ElementSet) -> ElementSet {
        assert_eq!(seed.carrier_size(), self.size);
        let mut closed = seed.clone();
        let mut members = seed.to_vec();
        // Each newly added element is combined with every earlier member, in
        // both positions and both directions.
        let mut next = 0;
        while next < members.len() {
            let a = members[next];
            let upto = next + 1;
            for i in 0..upto {
                let b = members[i];
                for v in [
                    self.op(a, b),
                    self.op(b, a),
                    self.inv_op(a, b),
                    self.inv_op(b, a),
                ] {
                    if closed.insert(v) {
                        members.push(v);
                    }
                }
            }
            next += 1;
        }
        closed
    }

    /// True iff `s` is closed under `⊳` (and, checked separately, `⊳⁻¹`).
    pub fn is_subquandle(&self, s: &ElementSet) -> bool {
        let members = s.to_vec();
        members.iter().all(|&a| {
            members
                .iter()
                .all(|&b| s.contains(self.op(a, b)) && s.contains(self.inv_op(a, b)))
        })
    }

    /// The quandle induced on a subquandle, renumbered `0..|s|-1` in ascending
    /// order of the original members. The returned vector maps new indices
    /// to original ones.
    pub fn induced(&self, s: &ElementSet) -> Result<(FiniteQuandle, Vec<usize>)> {
        if s.is_empty() {
            return Err(Error::Malformed(
                "cannot induce a quandle on the empty set".into(),
            ));
        }
        if !self.is_subquandle(s) {
            return Err(Error::NotSubquandle(s.one_based()));
        }
        let members = s.to_vec();
        let mut local = vec![usize::MAX; self.size];
        for (i, &m) in members.iter().enumerate() {
            local[m] = i;
        }
        let q =
            FiniteQuandle::from_fn(members.len(), |a, b| local[self.op(members[a], members[b])])?;
        Ok((q, members))
    }

    /// Applies a bijective relabelling `perm` (old → new) to the table.
    pub fn relabel(&self, perm: &[usize]) -> FiniteQuandle {
        let n = self.size;
        let mut table = vec![0; n * n];
        let mut inv_table = vec![0; n * n];
        for x in 0..n {
            for y in 0..n {
                table[perm[x] * n + perm[y]] = perm[self.op(x, y)];
                inv_table[perm[x] * n + perm[y]] = perm[self.inv_op(x, y)];
            }
        }
        FiniteQuandle {
            size: n,
            table,
            inv_table,
            ..*self
        }
    }
}

impl fmt::Debug for FiniteQuandle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "FiniteQuandle(n={}, quandle={}, kei={})",
            self.size, self.is_quandle, self.is_kei
        )?;
        for row in self.table.chunks(self.size) {
            writeln!(f, "  {row:?}")?;
        }
        Ok(())
    }
}

/// A total map between finite carriers.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ElementMap {
    codomain_size: usize,
    images: Vec<usize>,
}

impl ElementMap {
    pub fn new(images: Vec<usize>, codomain_size: usize) -> Result<Self> {
        if let Some(&v) = images.iter().find(|&&v| v >= codomain_size) {
            return Err(Error::OutOfRange {
                index: v,
                size: codomain_size,
            });
        }
        Ok(ElementMap {
            codomain_size,
            images,
        })
    }

    pub fn identity(n: usize) -> Self {
        ElementMap {
            codomain_size: n,
            images: (0..n).collect(),
        }
    }

    pub fn constant(domain_size: usize, codomain_size: usize, c: usize) -> Self {
        assert!(c < codomain_size);
        ElementMap {
            codomain_size,
            images: vec![c; domain_size],
        }
    }

    pub fn domain_size(&self) -> usize {
        self.images.len()
    }

    pub fn codomain_size(&self) -> usize {
        self.codomain_size
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    /// `self` then `next`, i.e. `x ↦ next(self(x))`.
    pub fn then(&self, next: &ElementMap) -> Result<ElementMap> {
        if self.codomain_size != next.domain_size() {
            return Err(Error::Malformed("maps do not compose".into()));
        }
        Ok(ElementMap {
            codomain_size: next.codomain_size,
            images: self.images.iter().map(|&x| next.apply(x)).collect(),
        })
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = vec![false; self.codomain_size];
        self.images
            .iter()
            .all(|&v| !std::mem::replace(&mut seen[v], true))
    }

    pub fn is_surjective(&self) -> bool {
        let mut seen = vec![false; self.codomain_size];
        for &v in &self.images {
            seen[v] = true;
        }
        seen.into_iter().all(|b| b)
    }

    pub fn image_of(&self, s: &ElementSet) -> ElementSet {
        ElementSet::from_members(self.codomain_size, s.iter().map(|x| self.apply(x)))
    }
}

/// True iff `h(x ⊳₁ y) = h(x) ⊳₂ h(y)` for all pairs.
pub fn check_homomorphism(q1: &FiniteQuandle, q2: &FiniteQuandle, h: &ElementMap) -> bool {
    homomorphism_witness(q1, q2, h).is_none()
}

/// The first pair `(x, y)` where `h` fails to be a homomorphism, if any.
/// Size mismatches are reported as `Some((domain, codomain))` of the map.
pub fn homomorphism_witness(
    q1: &FiniteQuandle,
    q2: &FiniteQuandle,
    h: &ElementMap,
) -> Option<(usize, usize)> {
    if h.domain_size() != q1.size() || h.codomain_size() != q2.size() {
        return Some((h.domain_size(), h.codomain_size()));
    }
    for x in q1.elements() {
        for y in q1.elements() {
            if h.apply(q1.op(x, y)) != q2.op(h.apply(x), h.apply(y)) {
                return Some((x, y));
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tait() -> FiniteQuandle {
        // Fig. 1 style table, shifted to 0-based.
        FiniteQuandle::from_rows(&[vec![0, 2, 1], vec![2, 1, 0], vec![1, 0, 2]]).unwrap()
    }

    fn tak(n: usize) -> FiniteQuandle {
        FiniteQuandle::from_fn(n, |x, y| (2 * y + n - x) % n).unwrap()
    }

    #[test]
    fn tait_is_kei() {
        let t = tait();
        assert!(t.is_quandle());
        assert!(t.is_kei());
    }

    #[test]
    fn identity_table_is_trivial_kei() {
        let q = FiniteQuandle::from_fn(3, |x, _| x).unwrap();
        assert!(q.is_quandle() && q.is_kei());
    }

    #[test]
    fn broken_column_is_reported() {
        // 1-based entry (1,2) changed from 3 to 1: column 2 now hits 1 twice.
        let err =
            FiniteQuandle::from_rows(&[vec![0, 0, 1], vec![2, 1, 0], vec![1, 0, 2]]).unwrap_err();
        match err {
            Error::Axioms(r) => {
                assert!(r.is_fatal());
                assert_eq!(r.bad_columns(), vec![1]);
            }
            e => panic!("unexpected {e:?}"),
        }
    }

    #[test]
    fn out_of_range_entry() {
        let err = FiniteQuandle::from_rows(&[vec![0, 5], vec![1, 1]]).unwrap_err();
        assert!(matches!(err, Error::OutOfRange { index: 5, size: 2 }));
    }

    #[test]
    fn rack_accepted_without_quandle_flag() {
        // Cyclic rack: x ⊳ y = x + 1 mod 3.
        let r = FiniteQuandle::from_fn(3, |x, _| (x + 1) % 3).unwrap();
        assert!(!r.is_quandle());
        assert!(r.require_quandle().is_err());
    }

    #[test]
    fn evaluate_examples() {
        let t = tait();
        // 1-based 1 ⊳ 2 = 3
        assert_eq!(t.evaluate(0, 1, Direction::Forward).unwrap(), 2);
        assert_eq!(tak(4).evaluate(1, 0, Direction::Forward).unwrap(), 3);
        assert!(t.evaluate(3, 0, Direction::Forward).is_err());
        for x in 0..3 {
            assert_eq!(t.evaluate(x, x, Direction::Forward).unwrap(), x);
        }
    }

    #[test]
    fn closure_examples() {
        let t = tait();
        let s = t.generated_subquandle(&ElementSet::from_members(3, [0, 1]));
        assert!(s.is_full());
        assert!(t.generated_subquandle(&ElementSet::empty(3)).is_empty());
        let q5 = tak(5);
        assert!(q5
            .generated_subquandle(&ElementSet::from_members(5, [0, 1]))
            .is_full());
    }

    #[test]
    fn subquandle_examples() {
        assert!(tak(4).is_subquandle(&ElementSet::from_members(4, [0, 2])));
        assert!(tait().is_subquandle(&ElementSet::empty(3)));
        assert!(!tait().is_subquandle(&ElementSet::from_members(3, [0, 1])));
    }

    #[test]
    fn homomorphism_examples() {
        let t = tait();
        assert!(check_homomorphism(&t, &t, &ElementMap::identity(3)));
        assert!(check_homomorphism(
            &t,
            &tak(5),
            &ElementMap::constant(3, 5, 2)
        ));
        let mod2 = ElementMap::new((0..4).map(|x| x % 2).collect(), 2).unwrap();
        assert!(check_homomorphism(&tak(4), &tak(2), &mod2));
        let swap = ElementMap::new(vec![1, 0, 2, 3], 4).unwrap();
        assert!(!check_homomorphism(&tak(4), &tak(4), &swap));
    }

    #[test]
    fn induced_renumbers() {
        let (sub, members) = tak(8)
            .induced(&ElementSet::from_members(8, [0, 2, 4, 6]))
            .unwrap();
        assert_eq!(members, vec![0, 2, 4, 6]);
        assert_eq!(sub, tak(4));
    }
}
