mod common;

use common::*;
use proptest::prelude::*;
use quandles::constructors::{smith_normal_form, IntegerMatrix};
use quandles::enumerate::enumerate_quandles;
use quandles::inner::{orbit_closure, orbits};
use quandles::iso::{are_isomorphic, canonical_form};
use quandles::lattice::{join, meet};
use quandles::limits::{factorial_tower, BoundedIntegerDihedral};
use quandles::{ElementSet, FiniteQuandle};

fn corpus() -> Vec<FiniteQuandle> {
    quandles::corpus(5).unwrap()
}

fn pick(index: usize) -> FiniteQuandle {
    let c = corpus();
    c[index % c.len()].clone()
}

fn subset(q: &FiniteQuandle, mask: u64) -> ElementSet {
    ElementSet::from_members(q.size(), (0..q.size()).filter(|&i| mask >> i & 1 == 1))
}

proptest! {
    #[test]
    fn closure_is_a_closure_operator(i in 0usize..34, a in 0u64..32, b in 0u64..32) {
        let q = pick(i);
        let (s, t) = (subset(&q, a), subset(&q, b));
        let cs = q.generated_subquandle(&s);
        prop_assert!(s.is_subset(&cs));
        prop_assert!(q.is_subquandle(&cs));
        prop_assert_eq!(q.generated_subquandle(&cs), cs.clone());
        if s.is_subset(&t) {
            prop_assert!(cs.is_subset(&q.generated_subquandle(&t)));
        }
        prop_assert_eq!(mask_of(&cs), closure(&table_of(&q), mask_of(&s)));
    }

    #[test]
    fn orbit_closure_is_a_closure_operator(i in 0usize..34, a in 0u64..32) {
        let q = pick(i);
        let s = subset(&q, a);
        let c = orbit_closure(&q, &s);
        prop_assert!(s.is_subset(&c));
        prop_assert_eq!(orbit_closure(&q, &c), c.clone());
        prop_assert!(q.is_subquandle(&c));
    }

    #[test]
    fn orbits_partition_the_carrier(i in 0usize..34) {
        let q = pick(i);
        let os = orbits(&q);
        prop_assert_eq!(os.iter().map(|o| o.len()).sum::<usize>(), q.size());
        for o in &os {
            let x = o.iter().next().unwrap();
            prop_assert_eq!(mask_of(o), orbit(&table_of(&q), x));
        }
    }

    #[test]
    fn meet_and_join_are_lattice_bounds(i in 0usize..34, a in 0u64..32, b in 0u64..32) {
        let q = pick(i);
        let s = q.generated_subquandle(&subset(&q, a));
        let t = q.generated_subquandle(&subset(&q, b));
        let m = meet(&s, &t);
        let j = join(&q, &s, &t);
        prop_assert!(q.is_subquandle(&m));
        prop_assert!(m.is_subset(&s) && m.is_subset(&t));
        prop_assert!(s.is_subset(&j) && t.is_subset(&j));
    }

    #[test]
    fn relabelling_preserves_isomorphism_class(i in 0usize..34, seed in any::<u64>()) {
        let q = pick(i);
        let n = q.size();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = seed;
        for k in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(k, (s >> 33) as usize % (k + 1));
        }
        let r = q.relabel(&perm);
        prop_assert!(are_isomorphic(&q, &r));
        prop_assert_eq!(canonical_form(&q), canonical_form(&r));
    }

    #[test]
    fn smith_form_transforms(rows in proptest::collection::vec(proptest::collection::vec(-6i64..7, 3), 1..5)) {
        let m = IntegerMatrix::from_rows(&rows);
        let snf = smith_normal_form(&m);
        let d = snf.left.mul(&m).mul(&snf.right);
        for r in 0..d.rows() {
            for c in 0..d.cols() {
                let expected = if r == c && r < snf.diagonal.len() { snf.diagonal[r].clone() } else { 0.into() };
                prop_assert_eq!(d[(r, c)].clone(), expected);
            }
        }
        prop_assert_eq!(snf.right.mul(&snf.right_inverse), IntegerMatrix::identity(3));
        let ours: Vec<i128> = snf.diagonal[..snf.rank].iter().map(|x| x.to_string().parse().unwrap()).collect();
        let wide = rows.iter().map(|r| r.iter().map(|&v| v as i128).collect()).collect();
        prop_assert_eq!(ours, oracle_invariant_factors(wide));
    }

    #[test]
    fn surrogate_growth_is_monotone(bound in 1i64..80, a in -10i64..10, b in -10i64..10, budget in 1usize..40) {
        let sur = BoundedIntegerDihedral::new(bound.max(a.abs()).max(b.abs())).unwrap();
        let r = sur.growth(&[a, b], budget).unwrap();
        prop_assert!(r.sizes.windows(2).all(|w| w[0] <= w[1]));
        if a != b {
            prop_assert!(!r.saturated());
        }
    }
}

#[test]
fn enumerated_quandles_satisfy_the_axioms() {
    for n in 1..=6 {
        for q in enumerate_quandles(n).unwrap() {
            let t = table_of(&q);
            assert!((0..n).all(|x| t[x][x] == x));
            assert!(right_distributive(&t));
        }
    }
}

#[test]
fn two_generated_subquandles_of_factorial_levels_divide_the_order() {
    let tower = factorial_tower(4).unwrap();
    for q in tower.levels() {
        let n = q.size();
        for x in 0..n {
            for y in 0..n {
                let s = q.generated_subquandle(&ElementSet::from_members(n, [x, y]));
                assert_eq!(n % s.len(), 0, "<{x},{y}> in Z{n} has size {}", s.len());
            }
        }
    }
}
