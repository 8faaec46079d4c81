//! Symmetries, inner and full automorphism groups, orbits and orbit closure.

use crate::iso::automorphisms;
use crate::perm::{generate_group, PermGroup, Permutation};
use crate::quandle::FiniteQuandle;
use crate::set::ElementSet;
use crate::{Error, Result};

/// Default order cap for [`aut_group`].
pub const DEFAULT_AUT_CAP: usize = 8;

/// The symmetry `S_y : x ↦ x ⊳ y`, i.e. column `y` of the table.
pub fn symmetry(q: &FiniteQuandle, y: usize) -> Permutation {
    Permutation::new(q.elements().map(|x| q.op(x, y)).collect()).expect("columns are bijective")
}

/// `S_y` for every `y`, indexed by `y`.
pub fn symmetries(q: &FiniteQuandle) -> Vec<Permutation> {
    q.elements().map(|y| symmetry(q, y)).collect()
}

/// `Inn(Q)`, generated by all symmetries. Generator `k` is `S_k`, so element
/// words are words in symmetries.
pub fn inn_group(q: &FiniteQuandle) -> Result<PermGroup> {
    generate_group(q.size(), &symmetries(q))
}

/// `Aut(Q)` by exhaustive search for bijective homomorphisms.
pub fn aut_group(q: &FiniteQuandle) -> Result<PermGroup> {
    aut_group_with_cap(q, DEFAULT_AUT_CAP)
}

pub fn aut_group_with_cap(q: &FiniteQuandle, cap: usize) -> Result<PermGroup> {
    if q.size() > cap {
        return Err(Error::CapExceeded {
            what: "automorphism search order",
            cap,
            got: q.size(),
        });
    }
    let gens: Vec<Permutation> = automorphisms(q)
        .into_iter()
        .map(|m| Permutation::new(m).expect("automorphisms are bijections"))
        .collect();
    generate_group(q.size(), &gens)
}

/// Orbits of the symmetry action, by union-find over generator images.
/// Sorted by least element.
pub fn orbits(q: &FiniteQuandle) -> Vec<ElementSet> {
    let n = q.size();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for y in 0..n {
        for x in 0..n {
            let (a, b) = (find(&mut parent, x), find(&mut parent, q.op(x, y)));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
    }
    let mut blocks: Vec<ElementSet> = Vec::new();
    let mut block_of_root = vec![usize::MAX; n];
    for x in 0..n {
        let r = find(&mut parent, x);
        if block_of_root[r] == usize::MAX {
            block_of_root[r] = blocks.len();
            blocks.push(ElementSet::empty(n));
        }
        blocks[block_of_root[r]].insert(x);
    }
    blocks
}

pub fn is_connected(q: &FiniteQuandle) -> bool {
    orbits(q).len() == 1
}

/// Union of the orbits of the members of `s`.
pub fn orbit_closure(q: &FiniteQuandle, s: &ElementSet) -> ElementSet {
    orbits(q)
        .into_iter()
        .filter(|o| !o.is_disjoint(s))
        .fold(ElementSet::empty(q.size()), |acc, o| acc.union(&o))
}

/// Evidence that `Inn(Q′)` is the quotient of `S_{Q′} = ⟨S_q : q ∈ Q′⟩` by
/// the kernel of restriction to `Q′`.
#[derive(Clone, Debug)]
pub struct SubquotientWitness {
    /// `S_{Q′}` acting on the ambient carrier.
    pub subgroup: PermGroup,
    /// Elements of `S_{Q′}` restricting to the identity on `Q′`.
    pub kernel: PermGroup,
    /// `Inn` of the induced quandle on `Q′` (renumbered).
    pub induced_inn: PermGroup,
    /// Induced-quandle index → ambient element.
    pub renumbering: Vec<usize>,
    /// `restriction[i]` is the index in `induced_inn` of the restriction of
    /// `subgroup.elements()[i]`.
    pub restriction: Vec<usize>,
}

impl SubquotientWitness {
    pub fn index(&self) -> usize {
        self.subgroup.order() / self.kernel.order()
    }
}

/// Builds and checks the restriction map `τ : S_{Q′} → Inn(Q′)`.
///
/// Fails with [`Error::Falsified`] if `τ` is not well defined, not a
/// homomorphism, not surjective, or if the order count does not match.
pub fn subquotient_witness(q: &FiniteQuandle, sub: &ElementSet) -> Result<SubquotientWitness> {
    q.require_quandle()?;
    if !q.is_subquandle(sub) {
        return Err(Error::NotSubquandle(sub.one_based()));
    }
    let members = sub.to_vec();
    let gens: Vec<Permutation> = members.iter().map(|&m| symmetry(q, m)).collect();
    let subgroup = generate_group(q.size(), &gens)?;

    let (induced_inn, induced_degree) = if members.is_empty() {
        (generate_group(0, &[])?, 0)
    } else {
        let (induced, _) = q.induced(sub)?;
        (inn_group(&induced)?, induced.size())
    };

    let mut restriction = Vec::with_capacity(subgroup.order());
    let mut kernel_elements = Vec::new();
    for (i, g) in subgroup.elements().iter().enumerate() {
        let r = g.restrict(&members).ok_or_else(|| {
            Error::Falsified(format!(
                "element {g} of S_Q' does not preserve {}",
                sub.one_based()
            ))
        })?;
        let pos = induced_inn.position(&r).ok_or_else(|| {
            Error::Falsified(format!(
                "restriction of {g} to {} is not inner",
                sub.one_based()
            ))
        })?;
        if r.is_identity() {
            kernel_elements.push(subgroup.elements()[i].clone());
        }
        restriction.push(pos);
    }
    debug_assert_eq!(induced_degree, members.len());

    // τ(a·s) = τ(a)·τ(s) for every element a and generator s.
    for (i, a) in subgroup.elements().iter().enumerate() {
        for s in subgroup.generators() {
            let j = subgroup.position(&a.then(s)).expect("group is closed");
            let s_idx = subgroup.position(s).expect("generator in group");
            let expected = induced_inn.elements()[restriction[i]]
                .then(&induced_inn.elements()[restriction[s_idx]]);
            if induced_inn.elements()[restriction[j]] != expected {
                return Err(Error::Falsified(format!(
                    "restriction is not multiplicative at {a} · {s}"
                )));
            }
        }
    }

    let mut fibre = vec![0usize; induced_inn.order()];
    for &r in &restriction {
        fibre[r] += 1;
    }
    if fibre.contains(&0) {
        return Err(Error::Falsified(
            "restriction onto Inn(Q') is not surjective".into(),
        ));
    }

    let kernel = generate_group(q.size(), &kernel_elements)?;
    if kernel.order() != kernel_elements.len() {
        return Err(Error::Falsified(
            "kernel of restriction is not closed".into(),
        ));
    }
    if !kernel.is_normal_in(&subgroup) {
        return Err(Error::Falsified(
            "kernel of restriction is not normal".into(),
        ));
    }
    if fibre.iter().any(|&c| c != kernel.order())
        || subgroup.order() != kernel.order() * induced_inn.order()
    {
        return Err(Error::Falsified(format!(
            "|S_Q'| = {} but |K| · |Inn(Q')| = {} · {}",
            subgroup.order(),
            kernel.order(),
            induced_inn.order()
        )));
    }

    Ok(SubquotientWitness {
        subgroup,
        kernel,
        induced_inn,
        renumbering: members,
        restriction,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tak(n: usize) -> FiniteQuandle {
        FiniteQuandle::from_fn(n, |x, y| (2 * y + n - x) % n).unwrap()
    }

    fn tait() -> FiniteQuandle {
        FiniteQuandle::from_rows(&[vec![0, 2, 1], vec![2, 1, 0], vec![1, 0, 2]]).unwrap()
    }

    fn trivial(n: usize) -> FiniteQuandle {
        FiniteQuandle::from_fn(n, |x, _| x).unwrap()
    }

    #[test]
    fn symmetry_examples() {
        assert_eq!(symmetry(&tait(), 0).to_string(), "(2 3)");
        assert!(symmetry(&trivial(4), 2).is_identity());
        assert_eq!(symmetry(&tak(4), 1).images(), &[2, 1, 0, 3]);
    }

    #[test]
    fn inner_group_orders() {
        assert_eq!(inn_group(&tait()).unwrap().order(), 6);
        assert_eq!(inn_group(&trivial(4)).unwrap().order(), 1);
        assert_eq!(inn_group(&tak(4)).unwrap().order(), 4);
    }

    #[test]
    fn inn_normal_in_aut() {
        for q in [tait(), tak(4), tak(5), trivial(3)] {
            let inn = inn_group(&q).unwrap();
            let aut = aut_group(&q).unwrap();
            assert!(inn.is_normal_in(&aut));
        }
        assert_eq!(aut_group(&tait()).unwrap().order(), 6);
    }

    #[test]
    fn aut_cap() {
        assert!(matches!(
            aut_group(&trivial(9)),
            Err(Error::CapExceeded { .. })
        ));
    }

    #[test]
    fn orbit_examples() {
        assert_eq!(orbits(&tait()).len(), 1);
        assert!(is_connected(&tait()));
        assert_eq!(orbits(&trivial(3)).len(), 3);
        let o: Vec<Vec<usize>> = orbits(&tak(4)).iter().map(|s| s.to_vec()).collect();
        assert_eq!(o, vec![vec![0, 2], vec![1, 3]]);
    }

    #[test]
    fn orbit_closure_examples() {
        let q = tak(8);
        assert_eq!(
            orbit_closure(&q, &ElementSet::from_members(8, [0, 4])).to_vec(),
            vec![0, 2, 4, 6]
        );
        assert!(orbit_closure(&q, &ElementSet::empty(8)).is_empty());
        assert!(orbit_closure(&tait(), &ElementSet::singleton(3, 0)).is_full());
    }

    #[test]
    fn subquotient_examples() {
        let w = subquotient_witness(&tak(4), &ElementSet::from_members(4, [0, 2])).unwrap();
        assert_eq!(
            (w.subgroup.order(), w.kernel.order(), w.induced_inn.order()),
            (2, 2, 1)
        );

        let q = tait();
        let w = subquotient_witness(&q, &ElementSet::full(3)).unwrap();
        assert_eq!(w.subgroup.order(), inn_group(&q).unwrap().order());
        assert_eq!(w.kernel.order(), 1);

        let w = subquotient_witness(&q, &ElementSet::singleton(3, 0)).unwrap();
        assert_eq!(
            (w.subgroup.order(), w.kernel.order(), w.induced_inn.order()),
            (2, 2, 1)
        );
    }

    #[test]
    fn subquotient_rejects_non_subquandle() {
        assert!(matches!(
            subquotient_witness(&tait(), &ElementSet::from_members(3, [0, 1])),
            Err(Error::NotSubquandle(_))
        ));
    }
}
