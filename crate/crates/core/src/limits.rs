//! Finite probes of direct and inverse systems of quandles.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use crate::constructors::{takasaki, AbelianGroupSpec};
use crate::lattice::{enumerate_subquandles, is_complement, SubquandleLattice};
use crate::quandle::{homomorphism_witness, validate_table, ElementMap, FiniteQuandle};
use crate::set::ElementSet;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TowerKind {
    /// Maps run level `i` → level `i+1`.
    Direct,
    /// Maps run level `i+1` → level `i`.
    Inverse,
}

impl fmt::Display for TowerKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TowerKind::Direct => "direct",
            TowerKind::Inverse => "inverse",
        })
    }
}

/// A chain of finite quandles with connecting maps between neighbours.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TowerSpec {
    kind: TowerKind,
    levels: Vec<FiniteQuandle>,
    maps: Vec<ElementMap>,
}

impl TowerSpec {
    /// Checks only that the maps fit between consecutive levels.
    pub fn new(kind: TowerKind, levels: Vec<FiniteQuandle>, maps: Vec<ElementMap>) -> Result<Self> {
        if levels.is_empty() {
            return Err(Error::Malformed("a tower needs at least one level".into()));
        }
        if maps.len() + 1 != levels.len() {
            return Err(Error::Malformed(format!(
                "{} levels need {} maps, got {}",
                levels.len(),
                levels.len() - 1,
                maps.len()
            )));
        }
        let t = TowerSpec { kind, levels, maps };
        for (i, m) in t.maps.iter().enumerate() {
            let (dom, cod) = t.endpoints(i);
            if m.domain_size() != t.levels[dom].size() || m.codomain_size() != t.levels[cod].size()
            {
                return Err(Error::Malformed(format!(
                    "map {} should go from a set of size {} to one of size {}",
                    i + 1,
                    t.levels[dom].size(),
                    t.levels[cod].size()
                )));
            }
        }
        Ok(t)
    }

    pub fn kind(&self) -> TowerKind {
        self.kind
    }

    pub fn levels(&self) -> &[FiniteQuandle] {
        &self.levels
    }

    pub fn maps(&self) -> &[ElementMap] {
        &self.maps
    }

    pub fn len(&self) -> usize {
        self.levels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.levels.is_empty()
    }

    pub fn top(&self) -> &FiniteQuandle {
        self.levels.last().expect("towers are nonempty")
    }

    /// (domain level, codomain level) of map `i`.
    pub fn endpoints(&self, i: usize) -> (usize, usize) {
        match self.kind {
            TowerKind::Direct => (i, i + 1),
            TowerKind::Inverse => (i + 1, i),
        }
    }

    /// The first `k` levels.
    pub fn prefix(&self, k: usize) -> Result<TowerSpec> {
        if k == 0 || k > self.len() {
            return Err(Error::OutOfRange {
                index: k,
                size: self.len(),
            });
        }
        TowerSpec::new(
            self.kind,
            self.levels[..k].to_vec(),
            self.maps[..k - 1].to_vec(),
        )
    }

    /// The derived map between levels `i ≤ j`: `Q_i → Q_j` for direct
    /// towers, `Q_j → Q_i` for inverse ones. `i = j` gives the identity.
    pub fn composite(&self, i: usize, j: usize) -> ElementMap {
        assert!(i <= j && j < self.len(), "composite({i}, {j}) out of order");
        match self.kind {
            TowerKind::Direct => (i..j)
                .fold(ElementMap::identity(self.levels[i].size()), |acc, k| {
                    acc.then(&self.maps[k]).expect("consecutive maps compose")
                }),
            TowerKind::Inverse => (i..j)
                .rev()
                .fold(ElementMap::identity(self.levels[j].size()), |acc, k| {
                    acc.then(&self.maps[k]).expect("consecutive maps compose")
                }),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TowerViolation {
    LevelNotQuandle {
        level: usize,
    },
    NotHomomorphism {
        map: usize,
        x: usize,
        y: usize,
    },
    NotInjective {
        map: usize,
        a: usize,
        b: usize,
    },
    /// `f_ik(x) ≠ f_ij(f_jk(x))` for the derived composites.
    CompositeMismatch {
        i: usize,
        j: usize,
        k: usize,
        x: usize,
    },
}

impl fmt::Display for TowerViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            TowerViolation::LevelNotQuandle { level } => {
                write!(f, "level {} is not a quandle", level + 1)
            }
            TowerViolation::NotHomomorphism { map, x, y } => {
                write!(
                    f,
                    "map {} is not a homomorphism: fails on ({}, {})",
                    map + 1,
                    x + 1,
                    y + 1
                )
            }
            TowerViolation::NotInjective { map, a, b } => {
                write!(
                    f,
                    "map {} is not injective: {} and {} collide",
                    map + 1,
                    a + 1,
                    b + 1
                )
            }
            TowerViolation::CompositeMismatch { i, j, k, x } => write!(
                f,
                "composites disagree for levels {} ≤ {} ≤ {} at element {}",
                i + 1,
                j + 1,
                k + 1,
                x + 1
            ),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TowerReport {
    pub violations: Vec<TowerViolation>,
    /// Observations that are not violations, such as a non-surjective map
    /// in an inverse tower.
    pub notes: Vec<String>,
}

impl TowerReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for TowerReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_ok() {
            writeln!(f, "tower ok")?;
        }
        for v in &self.violations {
            writeln!(f, "violation: {v}")?;
        }
        for n in &self.notes {
            writeln!(f, "note: {n}")?;
        }
        Ok(())
    }
}

pub fn validate_tower(t: &TowerSpec) -> TowerReport {
    let mut report = TowerReport::default();
    for (level, q) in t.levels.iter().enumerate() {
        if !q.is_quandle() {
            report
                .violations
                .push(TowerViolation::LevelNotQuandle { level });
        }
    }
    for (i, m) in t.maps.iter().enumerate() {
        let (dom, cod) = t.endpoints(i);
        if let Some((x, y)) = homomorphism_witness(&t.levels[dom], &t.levels[cod], m) {
            report
                .violations
                .push(TowerViolation::NotHomomorphism { map: i, x, y });
        }
        match t.kind {
            TowerKind::Direct => {
                let mut seen = HashMap::new();
                for (a, &img) in m.images().iter().enumerate() {
                    if let Some(&b) = seen.get(&img) {
                        report
                            .violations
                            .push(TowerViolation::NotInjective { map: i, a: b, b: a });
                        break;
                    }
                    seen.insert(img, a);
                }
            }
            TowerKind::Inverse => {
                if !m.is_surjective() {
                    report
                        .notes
                        .push(format!("map {} is not surjective", i + 1));
                }
            }
        }
    }
    // Pointwise comparison of f_ik with f_ij∘f_jk for every triple.
    let n = t.len();
    for i in 0..n {
        for j in i..n {
            for k in j..n {
                let (ij, jk, ik) = (t.composite(i, j), t.composite(j, k), t.composite(i, k));
                let bad = match t.kind {
                    TowerKind::Direct => {
                        (0..t.levels[i].size()).find(|&x| ik.apply(x) != jk.apply(ij.apply(x)))
                    }
                    TowerKind::Inverse => {
                        (0..t.levels[k].size()).find(|&x| ik.apply(x) != ij.apply(jk.apply(x)))
                    }
                };
                if let Some(x) = bad {
                    report
                        .violations
                        .push(TowerViolation::CompositeMismatch { i, j, k, x });
                }
            }
        }
    }
    report
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GrowthEnd {
    /// The closure stopped changing at this step with nothing escaping.
    Saturated {
        step: usize,
    },
    /// The closure filled the bounded carrier but products still escape it.
    BoundReached {
        step: usize,
    },
    BudgetExhausted,
}

/// Sizes of the iterated closure `S_{k+1} = S_k ∪ (S_k ⊳ S_k) ∪ (S_k ⊳⁻¹ S_k)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrowthReport {
    /// `sizes[k] = |S_k|`, starting from the seed.
    pub sizes: Vec<usize>,
    pub end: GrowthEnd,
    /// Surrogate elements with a product outside the bounded carrier.
    pub frontier: Vec<i64>,
}

impl GrowthReport {
    pub fn saturated(&self) -> bool {
        matches!(self.end, GrowthEnd::Saturated { .. })
    }

    pub fn saturation_step(&self) -> Option<usize> {
        match self.end {
            GrowthEnd::Saturated { step } => Some(step),
            _ => None,
        }
    }

    pub fn final_size(&self) -> usize {
        *self.sizes.last().expect("sizes start with the seed")
    }
}

impl fmt::Display for GrowthReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sizes: Vec<String> = self.sizes.iter().map(|s| s.to_string()).collect();
        writeln!(f, "sizes: {}", sizes.join(" "))?;
        match self.end {
            GrowthEnd::Saturated { step } => {
                writeln!(f, "saturated at step {step}, size {}", self.final_size())
            }
            GrowthEnd::BoundReached { step } => writeln!(
                f,
                "not saturated: carrier bound reached at step {step}, {} frontier elements",
                self.frontier.len()
            ),
            GrowthEnd::BudgetExhausted => writeln!(f, "not saturated: budget exhausted"),
        }
    }
}

fn check_budget(budget: usize) -> Result<()> {
    if budget == 0 {
        return Err(Error::Malformed("growth budget must be at least 1".into()));
    }
    Ok(())
}

/// Iterated one-step closure of `seed` inside a finite quandle.
pub fn closure_growth(q: &FiniteQuandle, seed: &ElementSet, budget: usize) -> Result<GrowthReport> {
    check_budget(budget)?;
    if seed.carrier_size() != q.size() {
        return Err(Error::Malformed("seed lives on a different carrier".into()));
    }
    let mut current = seed.clone();
    let mut sizes = vec![current.len()];
    for step in 0..budget {
        let mut next = current.clone();
        for x in current.iter() {
            for y in current.iter() {
                next.insert(q.op(x, y));
                next.insert(q.inv_op(x, y));
            }
        }
        if next == current {
            return Ok(GrowthReport {
                sizes,
                end: GrowthEnd::Saturated { step },
                frontier: vec![],
            });
        }
        sizes.push(next.len());
        current = next;
    }
    Ok(GrowthReport {
        sizes,
        end: GrowthEnd::BudgetExhausted,
        frontier: vec![],
    })
}

/// Closure growth at the top level of a direct tower.
pub fn direct_tower_growth(
    t: &TowerSpec,
    seed: &ElementSet,
    budget: usize,
) -> Result<GrowthReport> {
    if t.kind != TowerKind::Direct {
        return Err(Error::Malformed("growth probes need a direct tower".into()));
    }
    closure_growth(t.top(), seed, budget)
}

/// `{−B, …, B}` with `x ⊳ y = 2y − x`, a partial stand-in for the integers
/// under the Takasaki operation; products outside the bound are dropped
/// and their left factor is marked as frontier.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BoundedIntegerDihedral {
    pub bound: i64,
}

impl BoundedIntegerDihedral {
    pub fn new(bound: i64) -> Result<Self> {
        if bound < 0 {
            return Err(Error::Malformed("bound must be nonnegative".into()));
        }
        Ok(BoundedIntegerDihedral { bound })
    }

    fn inside(&self, v: i64) -> bool {
        (-self.bound..=self.bound).contains(&v)
    }

    pub fn op(&self, x: i64, y: i64) -> Option<i64> {
        Some(2 * y - x).filter(|&v| self.inside(v))
    }

    pub fn growth(&self, seed: &[i64], budget: usize) -> Result<GrowthReport> {
        check_budget(budget)?;
        if let Some(&x) = seed.iter().find(|&&x| !self.inside(x)) {
            return Err(Error::Malformed(format!(
                "seed element {x} lies outside ±{}",
                self.bound
            )));
        }
        let mut current: BTreeSet<i64> = seed.iter().copied().collect();
        let mut sizes = vec![current.len()];
        for step in 0..budget {
            let mut next = current.clone();
            let mut frontier = BTreeSet::new();
            for &x in &current {
                for &y in &current {
                    match self.op(x, y) {
                        Some(v) => {
                            next.insert(v);
                        }
                        None => {
                            frontier.insert(x);
                        }
                    }
                }
            }
            if next == current {
                let end = if frontier.is_empty() {
                    GrowthEnd::Saturated { step }
                } else {
                    GrowthEnd::BoundReached { step }
                };
                return Ok(GrowthReport {
                    sizes,
                    end,
                    frontier: frontier.into_iter().collect(),
                });
            }
            sizes.push(next.len());
            current = next;
        }
        Ok(GrowthReport {
            sizes,
            end: GrowthEnd::BudgetExhausted,
            frontier: vec![],
        })
    }
}

/// Levels `Tak(ℤ_{n!})` for `n = 1..=levels`, joined by `x ↦ (n+1)·x`.
pub fn factorial_tower(levels: usize) -> Result<TowerSpec> {
    const CAP: usize = 6;
    if levels == 0 || levels > CAP {
        return Err(Error::CapExceeded {
            what: "factorial tower levels",
            cap: CAP,
            got: levels,
        });
    }
    let mut quandles = Vec::new();
    let mut maps = Vec::new();
    let mut order = 1usize;
    for n in 1..=levels {
        order *= n;
        quandles.push(takasaki(&AbelianGroupSpec::cyclic(order as u64))?);
        if n < levels {
            let next = order * (n + 1);
            maps.push(ElementMap::new(
                (0..order).map(|x| x * (n + 1)).collect(),
                next,
            )?);
        }
    }
    TowerSpec::new(TowerKind::Direct, quandles, maps)
}

/// Levels `Tak(ℤ_{m_i})` with reduction maps `ℤ_{m_{i+1}} → ℤ_{m_i}`.
pub fn reduction_tower(moduli: &[u64]) -> Result<TowerSpec> {
    let levels = moduli
        .iter()
        .map(|&m| takasaki(&AbelianGroupSpec::cyclic(m)))
        .collect::<Result<Vec<_>>>()?;
    let maps = moduli
        .windows(2)
        .map(|w| {
            ElementMap::new(
                (0..w[1]).map(|x| (x % w[0]) as usize).collect(),
                w[0] as usize,
            )
        })
        .collect::<Result<Vec<_>>>()?;
    TowerSpec::new(TowerKind::Inverse, levels, maps)
}

/// The compatible tuples of the first `depth` levels of an inverse tower.
#[derive(Clone, Debug)]
pub struct TruncatedLimit {
    pub quandle: FiniteQuandle,
    /// Tuple `t` is element `i`; `t[l]` is its level-`l` coordinate.
    pub tuples: Vec<Vec<usize>>,
    /// Coordinate projections onto each level.
    pub projections: Vec<ElementMap>,
}

pub fn truncated_inverse_limit(t: &TowerSpec, depth: usize) -> Result<TruncatedLimit> {
    if t.kind != TowerKind::Inverse {
        return Err(Error::Malformed(
            "inverse limits need an inverse tower".into(),
        ));
    }
    if depth == 0 || depth > t.len() {
        return Err(Error::OutOfRange {
            index: depth,
            size: t.len(),
        });
    }
    let report = validate_tower(t);
    if !report.is_ok() {
        return Err(Error::Hypothesis(format!(
            "tower is invalid: {}",
            report.violations[0]
        )));
    }
    let mut tuples: Vec<Vec<usize>> = (0..t.levels[0].size()).map(|x| vec![x]).collect();
    for l in 1..depth {
        let down = &t.maps[l - 1];
        tuples = tuples
            .iter()
            .flat_map(|tup| {
                let last = tup[l - 1];
                (0..t.levels[l].size())
                    .filter(move |&x| down.apply(x) == last)
                    .map(move |x| {
                        let mut next = tup.clone();
                        next.push(x);
                        next
                    })
            })
            .collect();
    }
    tuples.sort();
    if tuples.is_empty() {
        return Err(Error::Malformed("no compatible tuples".into()));
    }
    let index: HashMap<&[usize], usize> = tuples
        .iter()
        .enumerate()
        .map(|(i, t)| (t.as_slice(), i))
        .collect();
    let mut rows = vec![vec![0; tuples.len()]; tuples.len()];
    for (a, ta) in tuples.iter().enumerate() {
        for (b, tb) in tuples.iter().enumerate() {
            let prod: Vec<usize> = (0..depth).map(|l| t.levels[l].op(ta[l], tb[l])).collect();
            rows[a][b] = *index.get(prod.as_slice()).ok_or_else(|| {
                Error::Falsified(format!(
                    "coordinatewise product of tuples {} and {} is incompatible",
                    a + 1,
                    b + 1
                ))
            })?;
        }
    }
    let quandle = validate_table(&rows).map_err(|e| match e {
        Error::Axioms(r) => Error::Falsified(format!("truncated limit fails the axioms: {r}")),
        other => other,
    })?;
    if !quandle.is_quandle() {
        return Err(Error::Falsified("truncated limit is not idempotent".into()));
    }
    let mut projections = Vec::with_capacity(depth);
    for l in 0..depth {
        let p = ElementMap::new(
            tuples.iter().map(|tup| tup[l]).collect(),
            t.levels[l].size(),
        )?;
        if let Some((x, y)) = homomorphism_witness(&quandle, &t.levels[l], &p) {
            return Err(Error::Falsified(format!(
                "projection to level {} fails on ({}, {})",
                l + 1,
                x + 1,
                y + 1
            )));
        }
        projections.push(p);
    }
    Ok(TruncatedLimit {
        quandle,
        tuples,
        projections,
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelVerdict {
    /// 1-based level label, or `None` for the truncated limit.
    pub level: Option<usize>,
    pub order: usize,
    pub subquandles: usize,
    pub complemented: bool,
}

/// One subquandle `S` of level `i+1` and whether some complement of `S`
/// maps onto a complement of `f(S)` in level `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompatibilityRow {
    pub level: usize,
    pub subquandle: ElementSet,
    pub image: ElementSet,
    pub compatible: bool,
    pub witness: Option<ElementSet>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvidenceReport {
    pub levels: Vec<LevelVerdict>,
    pub compatibility: Vec<CompatibilityRow>,
}

impl EvidenceReport {
    pub fn all_complemented(&self) -> bool {
        self.levels.iter().all(|l| l.complemented)
    }
}

impl fmt::Display for EvidenceReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for l in &self.levels {
            let name = l
                .level
                .map(|i| format!("level {i}"))
                .unwrap_or_else(|| "truncation".into());
            writeln!(
                f,
                "{name}: order {}, {} subquandles, complemented: {}",
                l.order, l.subquandles, l.complemented
            )?;
        }
        writeln!(f, "compatibility (diagnostic, not a theorem):")?;
        for r in &self.compatibility {
            writeln!(
                f,
                "  level {} {} -> {}: {}",
                r.level,
                r.subquandle.one_based(),
                r.image.one_based(),
                if r.compatible {
                    "compatible"
                } else {
                    "no compatible complement"
                }
            )?;
        }
        Ok(())
    }
}

fn verdict(level: Option<usize>, lattice: &SubquandleLattice) -> LevelVerdict {
    LevelVerdict {
        level,
        order: lattice.quandle().size(),
        subquandles: lattice.len(),
        complemented: lattice.is_complemented().complemented,
    }
}

/// Complementation verdicts along the first `depth` levels of an inverse
/// tower and its truncated limit, plus the compatibility diagnostic.
pub fn profinite_evidence(t: &TowerSpec, depth: usize) -> Result<EvidenceReport> {
    let limit = truncated_inverse_limit(t, depth)?;
    let lattices = t.levels[..depth]
        .iter()
        .map(enumerate_subquandles)
        .collect::<Result<Vec<_>>>()?;
    let mut levels: Vec<LevelVerdict> = lattices
        .iter()
        .enumerate()
        .map(|(i, l)| verdict(Some(i + 1), l))
        .collect();
    levels.push(verdict(None, &enumerate_subquandles(&limit.quandle)?));

    let mut compatibility = Vec::new();
    for i in 0..depth.saturating_sub(1) {
        let f = &t.maps[i];
        let lower = &t.levels[i];
        let upper = &lattices[i + 1];
        for s in upper.elements() {
            let image = f.image_of(s);
            let witness = upper
                .elements()
                .iter()
                .filter(|c| is_complement(upper.quandle(), s, c))
                .find(|c| is_complement(lower, &image, &f.image_of(c)))
                .cloned();
            compatibility.push(CompatibilityRow {
                level: i + 2,
                subquandle: s.clone(),
                image,
                compatible: witness.is_some(),
                witness,
            });
        }
    }
    Ok(EvidenceReport {
        levels,
        compatibility,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::trivial;
    use crate::iso::are_isomorphic;

    #[test]
    fn reduction_tower_is_valid() {
        let t = reduction_tower(&[2, 4, 8]).unwrap();
        assert!(validate_tower(&t).is_ok());
        assert_eq!(t.composite(0, 2).images(), &[0, 1, 0, 1, 0, 1, 0, 1]);
    }

    #[test]
    fn swapped_images_are_reported() {
        let t = reduction_tower(&[2, 4]).unwrap();
        let bad = ElementMap::new(vec![1, 0, 0, 1], 2).unwrap();
        let t = TowerSpec::new(TowerKind::Inverse, t.levels().to_vec(), vec![bad]).unwrap();
        let r = validate_tower(&t);
        assert!(matches!(
            r.violations[0],
            TowerViolation::NotHomomorphism { map: 0, .. }
        ));
    }

    #[test]
    fn single_level() {
        let t = TowerSpec::new(TowerKind::Inverse, vec![trivial(3).unwrap()], vec![]).unwrap();
        assert!(validate_tower(&t).is_ok());
        let l = truncated_inverse_limit(&t, 1).unwrap();
        assert_eq!(l.quandle, trivial(3).unwrap());
    }

    #[test]
    fn z8_limit() {
        let t = reduction_tower(&[2, 4, 8]).unwrap();
        let l = truncated_inverse_limit(&t, 3).unwrap();
        assert_eq!(l.quandle.size(), 8);
        assert!(are_isomorphic(&l.quandle, &t.levels()[2]));
    }

    #[test]
    fn factorial_growth() {
        let t = factorial_tower(3).unwrap();
        let r = direct_tower_growth(&t, &ElementSet::from_members(6, [0, 1]), 10).unwrap();
        assert!(r.saturated());
        assert_eq!(r.final_size(), 6);
        let r = direct_tower_growth(&t, &ElementSet::singleton(6, 4), 10).unwrap();
        assert_eq!((r.final_size(), r.saturation_step()), (1, Some(0)));
    }

    #[test]
    fn surrogate_escapes() {
        let r = BoundedIntegerDihedral::new(50)
            .unwrap()
            .growth(&[0, 1], 100)
            .unwrap();
        assert!(!r.saturated());
        assert!(!r.frontier.is_empty());
        assert_eq!(r.final_size(), 101);
        assert!(r.sizes.windows(2).all(|w| w[0] <= w[1]));
    }

    #[test]
    fn zero_budget() {
        assert!(closure_growth(&trivial(2).unwrap(), &ElementSet::empty(2), 0).is_err());
    }

    #[test]
    fn evidence_small() {
        let r = profinite_evidence(&reduction_tower(&[2, 4]).unwrap(), 2).unwrap();
        assert!(r.all_complemented());
        assert_eq!(r.levels.len(), 3);
    }
}
