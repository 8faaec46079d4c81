use std::fmt;

use crate::inner::{orbit_closure, symmetries};
use crate::mesh::{extract_mesh, semidisjoint_union, validate_mesh};
use crate::quandle::FiniteQuandle;
use crate::set::ElementSet;
use crate::{Error, Result};

/// The four characterizations of a strongly complemented subquandle,
/// each computed on its own.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrongComplementReport {
    /// `Q ∖ s` is a subquandle.
    pub cond_setminus: bool,
    /// `s` is a union of orbits.
    pub cond_union_of_orbits: bool,
    /// Every symmetry maps `s` onto itself.
    pub cond_fixed_point: bool,
    /// `Q` is the semidisjoint union of `s` and `Q ∖ s` over a valid mesh.
    pub cond_mesh: bool,
    pub agreement: bool,
    /// `(a, b)` in the complement with `a ⊳ b` outside it.
    pub setminus_witness: Option<(usize, usize)>,
    /// A member of `s` whose orbit leaves `s`, and an orbit element outside.
    pub orbit_witness: Option<(usize, usize)>,
    /// `(x, y)` with `x ∈ s` and `x ⊳ y ∉ s`.
    pub fixed_point_witness: Option<(usize, usize)>,
    pub mesh_failure: Option<String>,
}

impl StrongComplementReport {
    pub fn conditions(&self) -> [bool; 4] {
        [
            self.cond_setminus,
            self.cond_union_of_orbits,
            self.cond_fixed_point,
            self.cond_mesh,
        ]
    }
}

impl fmt::Display for StrongComplementReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pair = |w: Option<(usize, usize)>| {
            w.map(|(a, b)| format!(" (witness {}, {})", a + 1, b + 1))
                .unwrap_or_default()
        };
        writeln!(
            f,
            "(1) complement is a subquandle:   {}{}",
            self.cond_setminus,
            pair(self.setminus_witness)
        )?;
        writeln!(
            f,
            "(2) union of orbits:              {}{}",
            self.cond_union_of_orbits,
            pair(self.orbit_witness)
        )?;
        writeln!(
            f,
            "(3) fixed by every symmetry:      {}{}",
            self.cond_fixed_point,
            pair(self.fixed_point_witness)
        )?;
        writeln!(
            f,
            "(4) semidisjoint union over mesh: {}{}",
            self.cond_mesh,
            self.mesh_failure
                .as_ref()
                .map(|m| format!(" ({m})"))
                .unwrap_or_default()
        )?;
        writeln!(f, "agreement: {}", self.agreement)
    }
}

/// Strongly complemented: the set complement is also a subquandle.
pub fn is_strongly_complemented(q: &FiniteQuandle, s: &ElementSet) -> bool {
    q.is_subquandle(s) && q.is_subquandle(&s.complement())
}

fn mesh_condition(q: &FiniteQuandle, s: &ElementSet) -> std::result::Result<(), String> {
    let parts: Vec<ElementSet> = [s.clone(), s.complement()]
        .into_iter()
        .filter(|p| !p.is_empty())
        .collect();
    let mesh = extract_mesh(q, Some(&parts)).map_err(|e| e.to_string())?;
    let report = validate_mesh(&mesh);
    if !report.is_ok() {
        return Err(report.to_string());
    }
    let rebuilt = semidisjoint_union(&mesh).map_err(|e| e.to_string())?;
    if rebuilt != *q {
        return Err("semidisjoint union does not reproduce the table".into());
    }
    Ok(())
}

/// Evaluates all four conditions and fails with [`Error::Falsified`] if
/// they disagree.
pub fn classify_strong_complement(
    q: &FiniteQuandle,
    s: &ElementSet,
) -> Result<StrongComplementReport> {
    q.require_quandle()?;
    if !q.is_subquandle(s) {
        return Err(Error::NotSubquandle(s.one_based()));
    }
    let rest = s.complement();

    let setminus_witness = rest.iter().find_map(|a| {
        rest.iter()
            .find(|&b| !rest.contains(q.op(a, b)))
            .map(|b| (a, b))
    });

    let closure = orbit_closure(q, s);
    let orbit_witness = closure.difference(s).iter().next().map(|outside| {
        let inside = s
            .iter()
            .find(|&x| orbit_closure(q, &ElementSet::singleton(q.size(), x)).contains(outside))
            .expect("orbit closure element comes from some member");
        (inside, outside)
    });

    let syms = symmetries(q);
    let fixed_point_witness = syms
        .iter()
        .enumerate()
        .find_map(|(y, p)| s.iter().find(|&x| !s.contains(p.apply(x))).map(|x| (x, y)));

    let mesh_failure = mesh_condition(q, s).err();

    let report = StrongComplementReport {
        cond_setminus: setminus_witness.is_none(),
        cond_union_of_orbits: orbit_witness.is_none(),
        cond_fixed_point: fixed_point_witness.is_none(),
        cond_mesh: mesh_failure.is_none(),
        agreement: false,
        setminus_witness,
        orbit_witness,
        fixed_point_witness,
        mesh_failure,
    };
    let c = report.conditions();
    let agreement = c.iter().all(|&b| b == c[0]);
    if !agreement {
        return Err(Error::Falsified(format!(
            "strong-complement conditions disagree for {}: {c:?}",
            s.one_based()
        )));
    }
    Ok(StrongComplementReport {
        agreement,
        ..report
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

    #[test]
    fn parity_class_is_strong() {
        let r = classify_strong_complement(&tak(4), &ElementSet::from_members(4, [0, 2])).unwrap();
        assert_eq!(r.conditions(), [true; 4]);
        assert!(r.agreement);
    }

    #[test]
    fn tait_singleton_is_not() {
        let r = classify_strong_complement(&tait(), &ElementSet::singleton(3, 0)).unwrap();
        assert_eq!(r.conditions(), [false; 4]);
        assert!(r.setminus_witness.is_some() && r.fixed_point_witness.is_some());
    }

    #[test]
    fn bottom_and_top() {
        for q in [tait(), tak(4)] {
            let n = q.size();
            for s in [ElementSet::empty(n), ElementSet::full(n)] {
                assert_eq!(
                    classify_strong_complement(&q, &s).unwrap().conditions(),
                    [true; 4]
                );
            }
        }
    }

    #[test]
    fn rejects_non_subquandle() {
        assert!(classify_strong_complement(&tait(), &ElementSet::from_members(3, [0, 1])).is_err());
    }
}
