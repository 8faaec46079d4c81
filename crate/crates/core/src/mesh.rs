//! Semidisjoint unions of quandles and the meshes that glue them.
//!
//! A mesh over blocks `Q_1..Q_n` assigns to each ordered pair `(i, j)` and
//! each `y ∈ Q_i` a permutation `g_ij(|y|)` of `Q_j`. These are the
//! generator images of a homomorphism out of `Adconj(Q_i)`, which is never
//! materialized. The union operation is `x ⊳ y = x·g_ij(|y|)` for
//! `x ∈ Q_j`, `y ∈ Q_i`.

use std::collections::BTreeMap;
use std::fmt;

use crate::inner::{orbits, symmetries};
use crate::perm::Permutation;
use crate::quandle::{check_homomorphism, ElementMap, FiniteQuandle};
use crate::set::ElementSet;
use crate::{Error, Result};

/// `y ↦ S_y`, the generator images of the canonical `Adconj(Q) → Aut(Q)`.
pub fn canonical_phi(q: &FiniteQuandle) -> Vec<Permutation> {
    symmetries(q)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MeshBlock {
    /// Ambient elements in ascending order; local index `i` is `members[i]`.
    pub members: Vec<usize>,
    pub quandle: FiniteQuandle,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MeshSpec {
    carrier_size: usize,
    blocks: Vec<MeshBlock>,
    /// ambient element → (block, local index)
    location: Vec<(usize, usize)>,
    /// `gen_images[i][j][y]` = `g_ij(|y|)` for local `y ∈ Q_i`, acting on local `Q_j`.
    gen_images: Vec<Vec<Vec<Permutation>>>,
}

impl MeshSpec {
    /// Checks shape only: the blocks partition the carrier and every image
    /// is a permutation of the right block. Use [`validate_mesh`] for the
    /// algebraic conditions.
    pub fn new(
        carrier_size: usize,
        blocks: Vec<MeshBlock>,
        gen_images: Vec<Vec<Vec<Permutation>>>,
    ) -> Result<Self> {
        let mut location = vec![(usize::MAX, 0); carrier_size];
        for (b, block) in blocks.iter().enumerate() {
            if block.members.is_empty() {
                return Err(Error::Malformed(format!("block {} is empty", b + 1)));
            }
            if block.members.len() != block.quandle.size() {
                return Err(Error::Malformed(format!(
                    "block {} lists {} members but its quandle has order {}",
                    b + 1,
                    block.members.len(),
                    block.quandle.size()
                )));
            }
            for (l, &m) in block.members.iter().enumerate() {
                if m >= carrier_size {
                    return Err(Error::OutOfRange {
                        index: m,
                        size: carrier_size,
                    });
                }
                if location[m].0 != usize::MAX {
                    return Err(Error::Malformed(format!(
                        "element {} lies in two blocks",
                        m + 1
                    )));
                }
                location[m] = (b, l);
            }
        }
        if let Some(m) = location.iter().position(|l| l.0 == usize::MAX) {
            return Err(Error::Malformed(format!(
                "element {} lies in no block",
                m + 1
            )));
        }
        let nb = blocks.len();
        if gen_images.len() != nb || gen_images.iter().any(|row| row.len() != nb) {
            return Err(Error::Malformed(format!(
                "expected a {nb}×{nb} matrix of generator images"
            )));
        }
        for i in 0..nb {
            for j in 0..nb {
                let imgs = &gen_images[i][j];
                if imgs.len() != blocks[i].members.len() {
                    return Err(Error::Malformed(format!(
                        "g {} {} needs one image per element of block {}",
                        i + 1,
                        j + 1,
                        i + 1
                    )));
                }
                if imgs.iter().any(|p| p.degree() != blocks[j].members.len()) {
                    return Err(Error::Malformed(format!(
                        "g {} {} images must permute block {}",
                        i + 1,
                        j + 1,
                        j + 1
                    )));
                }
            }
        }
        Ok(MeshSpec {
            carrier_size,
            blocks,
            location,
            gen_images,
        })
    }

    pub fn carrier_size(&self) -> usize {
        self.carrier_size
    }

    pub fn blocks(&self) -> &[MeshBlock] {
        &self.blocks
    }

    /// `g_ij(|y|)` for local `y` in block `i`.
    pub fn image(&self, i: usize, j: usize, y: usize) -> &Permutation {
        &self.gen_images[i][j][y]
    }

    pub fn set_image(&mut self, i: usize, j: usize, y: usize, p: Permutation) {
        assert_eq!(p.degree(), self.blocks[j].members.len());
        self.gen_images[i][j][y] = p;
    }

    /// (block, local index) of an ambient element.
    pub fn locate(&self, x: usize) -> (usize, usize) {
        self.location[x]
    }

    /// The union operation on ambient elements.
    pub fn op(&self, x: usize, y: usize) -> usize {
        let (bx, lx) = self.location[x];
        let (by, ly) = self.location[y];
        self.blocks[bx].members[self.gen_images[by][bx][ly].apply(lx)]
    }
}

/// Which requirement a mesh violates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MeshCondition {
    /// `g_ii(|y|) ≠ S_y` on block `i`.
    DiagonalNotCanonical,
    /// Some `g_ij(|y|)` is not an automorphism of `Q_j`.
    NotAutomorphism,
    /// `g_ij(|q ⊳ r|) ≠ g_ij(|r|)⁻¹ g_ij(|q|) g_ij(|r|)`.
    ConjugationCompatibility,
    /// A block quandle itself fails right distributivity.
    BlockAxioms,
    /// First mesh-criterion identity (two blocks).
    Condition1,
    /// Second mesh-criterion identity (three distinct blocks).
    Condition2,
}

impl MeshCondition {
    /// Conditions stated by the mesh criterion proper, as opposed to the
    /// degenerate index cases and structural invariants.
    pub fn is_criterion(self) -> bool {
        matches!(self, MeshCondition::Condition1 | MeshCondition::Condition2)
    }
}

impl fmt::Display for MeshCondition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MeshCondition::DiagonalNotCanonical => "diagonal not canonical",
            MeshCondition::NotAutomorphism => "image not an automorphism",
            MeshCondition::ConjugationCompatibility => "conjugation compatibility",
            MeshCondition::BlockAxioms => "block quandle axioms",
            MeshCondition::Condition1 => "mesh condition (1)",
            MeshCondition::Condition2 => "mesh condition (2)",
        })
    }
}

/// A violated condition with the block indices `(i, j, k)` of the ambient
/// witness elements `(x, y, z)`. Unused coordinates repeat earlier ones.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct MeshViolation {
    pub condition: MeshCondition,
    pub blocks: (usize, usize, usize),
    pub elements: (usize, usize, usize),
}

impl fmt::Display for MeshViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (i, j, k) = self.blocks;
        let (x, y, z) = self.elements;
        write!(
            f,
            "{}: blocks ({}, {}, {}), elements x={}, y={}, z={}",
            self.condition,
            i + 1,
            j + 1,
            k + 1,
            x + 1,
            y + 1,
            z + 1
        )
    }
}

/// Outcome of [`validate_mesh`]; one witness per condition and block triple,
/// sorted.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct MeshReport {
    pub violations: Vec<MeshViolation>,
}

impl MeshReport {
    pub fn is_ok(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn first(&self) -> Option<&MeshViolation> {
        self.violations.first()
    }

    pub fn criterion_violations(&self) -> impl Iterator<Item = &MeshViolation> {
        self.violations
            .iter()
            .filter(|v| v.condition.is_criterion())
    }

    pub fn degenerate_violations(&self) -> impl Iterator<Item = &MeshViolation> {
        self.violations
            .iter()
            .filter(|v| !v.condition.is_criterion())
    }
}

impl fmt::Display for MeshReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_ok() {
            return writeln!(f, "mesh ok");
        }
        let crit: Vec<_> = self.criterion_violations().collect();
        let degen: Vec<_> = self.degenerate_violations().collect();
        if !crit.is_empty() {
            writeln!(f, "mesh criterion violations:")?;
            for v in crit {
                writeln!(f, "  {v}")?;
            }
        }
        if !degen.is_empty() {
            writeln!(f, "degenerate-index and structural violations:")?;
            for v in degen {
                writeln!(f, "  {v}")?;
            }
        }
        Ok(())
    }
}

type Triple = (usize, usize, usize);

/// Brute-force check of every mesh requirement over all element triples.
pub fn validate_mesh(m: &MeshSpec) -> MeshReport {
    let mut found: BTreeMap<(MeshCondition, Triple), Triple> = BTreeMap::new();
    let mut record = |c: MeshCondition, blocks: Triple, elems: Triple| {
        found.entry((c, blocks)).or_insert(elems);
    };

    for (i, block) in m.blocks.iter().enumerate() {
        let canonical = canonical_phi(&block.quandle);
        for (y, s) in canonical.iter().enumerate() {
            if m.gen_images[i][i][y] != *s {
                let x = (0..s.degree())
                    .find(|&x| m.gen_images[i][i][y].apply(x) != s.apply(x))
                    .unwrap();
                record(
                    MeshCondition::DiagonalNotCanonical,
                    (i, i, i),
                    (block.members[x], block.members[y], block.members[y]),
                );
            }
        }
        for (j, target) in m.blocks.iter().enumerate() {
            for (y, p) in m.gen_images[i][j].iter().enumerate() {
                let h = ElementMap::new(p.images().to_vec(), p.degree())
                    .expect("permutation images in range");
                if !check_homomorphism(&target.quandle, &target.quandle, &h) {
                    record(
                        MeshCondition::NotAutomorphism,
                        (j, j, i),
                        (target.members[0], target.members[0], block.members[y]),
                    );
                }
            }
        }
    }

    // Right distributivity of the union, classified by the blocks involved.
    let n = m.carrier_size;
    for x in 0..n {
        let bx = m.location[x].0;
        for y in 0..n {
            let by = m.location[y].0;
            let xy = m.op(x, y);
            for z in 0..n {
                let bz = m.location[z].0;
                if m.op(xy, z) == m.op(m.op(x, z), m.op(y, z)) {
                    continue;
                }
                let condition = if bx == by && by == bz {
                    MeshCondition::BlockAxioms
                } else if bx == by {
                    MeshCondition::NotAutomorphism
                } else if by == bz {
                    MeshCondition::ConjugationCompatibility
                } else if bx == bz {
                    MeshCondition::Condition1
                } else {
                    MeshCondition::Condition2
                };
                record(condition, (bx, by, bz), (x, y, z));
            }
        }
    }

    MeshReport {
        violations: found
            .into_iter()
            .map(|((condition, blocks), elements)| MeshViolation {
                condition,
                blocks,
                elements,
            })
            .collect(),
    }
}

/// `#(Q_1, …, Q_n, M)` on the ambient carrier.
pub fn semidisjoint_union(m: &MeshSpec) -> Result<FiniteQuandle> {
    let report = validate_mesh(m);
    if !report.is_ok() {
        return Err(Error::MeshInvalid(report));
    }
    let q = FiniteQuandle::from_fn(m.carrier_size, |x, y| m.op(x, y))?;
    if !q.is_quandle() {
        return Err(Error::Falsified(
            "semidisjoint union of quandles is not idempotent".into(),
        ));
    }
    Ok(q)
}

/// Reads off the mesh of `q` over a partition into symmetry-invariant
/// subquandles (the orbit partition by default).
///
/// `g_ij(|y|)` is the restriction of `S_y` to block `j`.
pub fn extract_mesh(q: &FiniteQuandle, partition: Option<&[ElementSet]>) -> Result<MeshSpec> {
    q.require_quandle()?;
    let default_blocks;
    let parts: &[ElementSet] = match partition {
        Some(p) => p,
        None => {
            default_blocks = orbits(q);
            &default_blocks
        }
    };

    let syms = symmetries(q);
    let mut blocks = Vec::with_capacity(parts.len());
    for (b, part) in parts.iter().enumerate() {
        if part.carrier_size() != q.size() {
            return Err(Error::Malformed(
                "partition block over the wrong carrier".into(),
            ));
        }
        if let Some((y, x)) = syms.iter().enumerate().find_map(|(y, s)| {
            part.iter()
                .find(|&x| !part.contains(s.apply(x)))
                .map(|x| (y, x))
        }) {
            return Err(Error::BlockNotOrbitClosed {
                block: b,
                detail: format!(
                    "{} ⊳ {} = {} leaves {}",
                    x + 1,
                    y + 1,
                    syms[y].apply(x) + 1,
                    part.one_based()
                ),
            });
        }
        let (quandle, members) = q.induced(part).map_err(|e| match e {
            Error::NotSubquandle(s) => Error::BlockNotOrbitClosed {
                block: b,
                detail: format!("{s} is not a subquandle"),
            },
            e => e,
        })?;
        blocks.push(MeshBlock { members, quandle });
    }

    let gen_images = blocks
        .iter()
        .map(|src| {
            blocks
                .iter()
                .map(|dst| {
                    src.members
                        .iter()
                        .map(|&y| {
                            syms[y]
                                .restrict(&dst.members)
                                .expect("blocks are symmetry-invariant")
                        })
                        .collect()
                })
                .collect()
        })
        .collect();
    MeshSpec::new(q.size(), blocks, gen_images)
}
