//! Standard quandle builders and the abelianization-style left adjoint of
//! the Takasaki construction.

mod adtak;
mod snf;

use std::fmt;

pub use adtak::{adtak, check_adjunction, relation_matrix, AdjunctionReport};
pub use snf::{smith_normal_form, IntegerMatrix, SmithForm};

use crate::iso::next_permutation;
use crate::perm::Permutation;
use crate::quandle::FiniteQuandle;
use crate::{Error, Result};

/// The trivial quandle `x ⊳ y = x` on `n` elements.
pub fn trivial(n: usize) -> Result<FiniteQuandle> {
    if n == 0 {
        return Err(Error::Malformed("trivial quandle needs n ≥ 1".into()));
    }
    FiniteQuandle::from_fn(n, |x, _| x)
}

/// A finitely generated abelian group `Z_{f1} ⊕ Z_{f2} ⊕ …`; a factor of 0
/// stands for an infinite cyclic summand.
///
/// Finite elements are mixed-radix tuples, encoded little-endian: index
/// `c_0 + f_0·(c_1 + f_1·(…))`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AbelianGroupSpec {
    factors: Vec<u64>,
}

impl AbelianGroupSpec {
    pub fn new(factors: Vec<u64>) -> Self {
        AbelianGroupSpec { factors }
    }

    /// `Z_n`.
    pub fn cyclic(n: u64) -> Self {
        AbelianGroupSpec { factors: vec![n] }
    }

    pub fn factors(&self) -> &[u64] {
        &self.factors
    }

    pub fn is_finite(&self) -> bool {
        self.factors.iter().all(|&f| f >= 1)
    }

    pub fn free_rank(&self) -> usize {
        self.factors.iter().filter(|&&f| f == 0).count()
    }

    /// Torsion factors greater than one, in stored order.
    pub fn torsion(&self) -> Vec<u64> {
        self.factors.iter().copied().filter(|&f| f > 1).collect()
    }

    /// Group order, or `None` when there is a free summand.
    pub fn order(&self) -> Option<usize> {
        if !self.is_finite() {
            return None;
        }
        Some(self.factors.iter().map(|&f| f as usize).product())
    }

    fn require_finite(&self) -> Result<usize> {
        self.order()
            .ok_or_else(|| Error::Malformed(format!("{self} is infinite")))
    }

    pub fn encode(&self, coords: &[u64]) -> usize {
        let mut idx = 0usize;
        for (&c, &f) in coords.iter().zip(&self.factors).rev() {
            idx = idx * f as usize + (c % f) as usize;
        }
        idx
    }

    pub fn decode(&self, mut idx: usize) -> Vec<u64> {
        self.factors
            .iter()
            .map(|&f| {
                let c = idx % f as usize;
                idx /= f as usize;
                c as u64
            })
            .collect()
    }

    pub fn add(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        a.iter()
            .zip(b)
            .zip(&self.factors)
            .map(|((&x, &y), &f)| (x + y) % f)
            .collect()
    }

    pub fn neg(&self, a: &[u64]) -> Vec<u64> {
        a.iter()
            .zip(&self.factors)
            .map(|(&x, &f)| (f - x % f) % f)
            .collect()
    }

    pub fn zero(&self) -> Vec<u64> {
        vec![0; self.factors.len()]
    }
}

impl fmt::Display for AbelianGroupSpec {
    /// E.g. `Z ⊕ Z3`; the trivial group prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = vec!["Z".to_string(); self.free_rank()];
        parts.extend(self.torsion().iter().map(|t| format!("Z{t}")));
        if parts.is_empty() {
            return f.write_str("0");
        }
        f.write_str(&parts.join(" ⊕ "))
    }
}

/// The Takasaki kei `x ⊳ y = 2y − x` on a finite abelian group.
pub fn takasaki(a: &AbelianGroupSpec) -> Result<FiniteQuandle> {
    let n = a.require_finite()?;
    if a.factors().is_empty() {
        return trivial(1);
    }
    let elems: Vec<Vec<u64>> = (0..n).map(|i| a.decode(i)).collect();
    FiniteQuandle::from_fn(n, |x, y| {
        let two_y = a.add(&elems[y], &elems[y]);
        a.encode(&a.add(&two_y, &a.neg(&elems[x])))
    })
}

/// A finite group by multiplication table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupTable {
    size: usize,
    product: Vec<usize>,
    inverse: Vec<usize>,
    identity: usize,
}

impl GroupTable {
    /// Validates associativity, identity and inverses of a 0-based table.
    pub fn new(product: &[Vec<usize>]) -> Result<Self> {
        let n = product.len();
        if n == 0 {
            return Err(Error::Malformed("empty group table".into()));
        }
        for row in product {
            if row.len() != n {
                return Err(Error::Malformed("group table is not square".into()));
            }
            if let Some(&v) = row.iter().find(|&&v| v >= n) {
                return Err(Error::OutOfRange { index: v, size: n });
            }
        }
        let p = |a: usize, b: usize| product[a][b];
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if p(p(a, b), c) != p(a, p(b, c)) {
                        return Err(Error::Malformed(format!(
                            "not associative at ({}, {}, {})",
                            a + 1,
                            b + 1,
                            c + 1
                        )));
                    }
                }
            }
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|a| p(e, a) == a && p(a, e) == a))
            .ok_or_else(|| Error::Malformed("no identity element".into()))?;
        let inverse = (0..n)
            .map(|a| {
                (0..n)
                    .find(|&b| p(a, b) == identity && p(b, a) == identity)
                    .ok_or_else(|| Error::Malformed(format!("element {} has no inverse", a + 1)))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(GroupTable {
            size: n,
            product: product.iter().flatten().copied().collect(),
            inverse,
            identity,
        })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.product[a * self.size + b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.product.chunks(self.size).map(|r| r.to_vec()).collect()
    }

    pub fn cyclic(n: usize) -> Result<Self> {
        Self::new(
            &(0..n)
                .map(|a| (0..n).map(|b| (a + b) % n).collect())
                .collect::<Vec<_>>(),
        )
    }

    pub fn from_abelian(a: &AbelianGroupSpec) -> Result<Self> {
        let n = a.require_finite()?;
        let rows: Vec<Vec<usize>> = (0..n)
            .map(|x| {
                (0..n)
                    .map(|y| a.encode(&a.add(&a.decode(x), &a.decode(y))))
                    .collect()
            })
            .collect();
        Self::new(&rows)
    }

    /// `S_n` with elements in lexicographic order of image vectors, so the
    /// identity is element 0. The product `a·b` applies `a` first.
    pub fn symmetric(n: usize) -> Result<Self> {
        if n == 0 || n > 6 {
            return Err(Error::CapExceeded {
                what: "symmetric group degree",
                cap: 6,
                got: n,
            });
        }
        let perms = all_permutations(n);
        let index: std::collections::HashMap<&Permutation, usize> =
            perms.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let rows: Vec<Vec<usize>> = perms
            .iter()
            .map(|a| perms.iter().map(|b| index[&a.then(b)]).collect())
            .collect();
        Self::new(&rows)
    }
}

fn all_permutations(n: usize) -> Vec<Permutation> {
    let mut p: Vec<usize> = (0..n).collect();
    let mut out = vec![Permutation::new(p.clone()).unwrap()];
    while next_permutation(&mut p) {
        out.push(Permutation::new(p.clone()).unwrap());
    }
    out
}

/// `Conj(G)` with right conjugation `x ⊳ y = y⁻¹ x y`.
pub fn conj(g: &GroupTable) -> Result<FiniteQuandle> {
    FiniteQuandle::from_fn(g.size(), |x, y| g.mul(g.mul(g.inv(y), x), y))
}

/// Transpositions `(a b)`, `a < b`, of `S_n` under conjugation, listed in
/// lexicographic order of `(a, b)`.
pub fn transposition_quandle(n: usize) -> Result<FiniteQuandle> {
    if !(2..=6).contains(&n) {
        return Err(Error::CapExceeded {
            what: "transposition quandle degree (2..=6)",
            cap: 6,
            got: n,
        });
    }
    let pairs = transpositions(n);
    let index = |a: usize, b: usize| {
        pairs
            .iter()
            .position(|&p| p == (a.min(b), a.max(b)))
            .unwrap()
    };
    FiniteQuandle::from_fn(pairs.len(), |x, y| {
        let (a, b) = pairs[x];
        let t = Permutation::transposition(n, pairs[y].0, pairs[y].1);
        index(t.apply(a), t.apply(b))
    })
}

/// The `(a, b)` pairs labelling [`transposition_quandle`] elements.
pub fn transpositions(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
        .collect()
}
