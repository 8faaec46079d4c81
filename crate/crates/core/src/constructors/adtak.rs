use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use super::snf::{smith_normal_form, IntegerMatrix, SmithForm};
use super::{takasaki, AbelianGroupSpec};
use crate::quandle::{homomorphism_witness, ElementMap, FiniteQuandle};
use crate::{Error, Result};

/// Relations `e_{x⊳y} − 2e_y + e_x`, one row per ordered pair `(x, y)` in
/// row-major order, one column per element.
pub fn relation_matrix(k: &FiniteQuandle) -> IntegerMatrix {
    let n = k.size();
    let mut m = IntegerMatrix::zeros(n * n, n);
    for x in 0..n {
        for y in 0..n {
            let row = x * n + y;
            m[(row, k.op(x, y))] += 1;
            m[(row, y)] -= 2;
            m[(row, x)] += 1;
        }
    }
    m
}

fn presentation(k: &FiniteQuandle) -> Result<(IntegerMatrix, SmithForm)> {
    if !k.is_kei() || !k.is_quandle() {
        return Err(Error::NotKei);
    }
    let m = relation_matrix(k);
    let snf = smith_normal_form(&m);
    Ok((m, snf))
}

fn group_from_snf(generators: usize, snf: &SmithForm) -> Result<AbelianGroupSpec> {
    let mut factors = Vec::new();
    for d in &snf.diagonal[..snf.rank] {
        let f = d.to_u64().ok_or_else(|| {
            Error::Malformed(format!("invariant factor {d} does not fit in 64 bits"))
        })?;
        if f > 1 {
            factors.push(f);
        }
    }
    factors.extend(std::iter::repeat_n(0, generators - snf.rank));
    Ok(AbelianGroupSpec::new(factors))
}

/// The free abelian group on `K` modulo `x⊳y − 2y + x`, as invariant
/// factors (torsion in divisibility order, then a 0 per free summand).
pub fn adtak(k: &FiniteQuandle) -> Result<AbelianGroupSpec> {
    let (_, snf) = presentation(k)?;
    group_from_snf(k.size(), &snf)
}

/// Result of checking that a kei map `φ : K → Tak(A)` factors through the
/// unit `K → Tak(AdTak(K))`.
#[derive(Clone, Debug)]
pub struct AdjunctionReport {
    /// `AdTak(K)`.
    pub adtak: AbelianGroupSpec,
    /// φ′ kills every defining relation.
    pub factors: bool,
    /// The induced map on the Smith basis respects every invariant factor.
    pub respects_invariants: bool,
    /// Tak(φ′) ∘ η reproduces φ.
    pub recovers_map: bool,
    /// The Smith basis change is unimodular, so φ′ is pinned by the
    /// generator images.
    pub unique: bool,
    /// φ′ on the generator `x̄`, as a mixed-radix tuple of `A`.
    pub generator_images: Vec<Vec<u64>>,
    /// φ′ on the Smith basis vectors, paired with their invariant factor.
    pub basis_images: Vec<(BigInt, Vec<u64>)>,
}

impl AdjunctionReport {
    pub fn holds(&self) -> bool {
        self.factors && self.respects_invariants && self.recovers_map && self.unique
    }
}

fn scale(a: &AbelianGroupSpec, coeff: &BigInt, v: &[u64]) -> Vec<u64> {
    v.iter()
        .zip(a.factors())
        .map(|(&x, &f)| {
            let c = coeff.mod_floor(&BigInt::from(f)).to_u64().unwrap();
            ((c as u128 * x as u128) % f as u128) as u64
        })
        .collect()
}

fn combine(a: &AbelianGroupSpec, coeffs: &[BigInt], vs: &[Vec<u64>]) -> Vec<u64> {
    coeffs
        .iter()
        .zip(vs)
        .fold(a.zero(), |acc, (c, v)| a.add(&acc, &scale(a, c, v)))
}

/// Verifies the universal property for `φ` by solving for `φ′` on the
/// Smith basis of the presentation of `AdTak(K)`.
pub fn check_adjunction(
    k: &FiniteQuandle,
    a: &AbelianGroupSpec,
    phi: &ElementMap,
) -> Result<AdjunctionReport> {
    let (m, snf) = presentation(k)?;
    let target = takasaki(a)?;
    if let Some((x, y)) = homomorphism_witness(k, &target, phi) {
        return Err(Error::Hypothesis(format!(
            "φ is not a kei homomorphism (fails at {}, {})",
            x + 1,
            y + 1
        )));
    }
    let n = k.size();
    let generator_images: Vec<Vec<u64>> = (0..n).map(|x| a.decode(phi.apply(x))).collect();

    let factors = (0..m.rows()).all(|r| combine(a, m.row(r), &generator_images) == a.zero());

    // Coordinates r ↦ r·V turn the relation lattice into diag(d); the basis
    // vectors of the quotient are sent to V⁻¹·(images).
    let basis_images: Vec<(BigInt, Vec<u64>)> = (0..n)
        .map(|i| {
            let d = snf.diagonal.get(i).cloned().unwrap_or_else(BigInt::zero);
            (d, combine(a, snf.right_inverse.row(i), &generator_images))
        })
        .collect();
    let respects_invariants = basis_images
        .iter()
        .all(|(d, b)| d.is_zero() || scale(a, d, b) == a.zero());

    let basis_vectors: Vec<Vec<u64>> = basis_images.iter().map(|(_, b)| b.clone()).collect();
    let recovers_map =
        (0..n).all(|x| combine(a, snf.right.row(x), &basis_vectors) == generator_images[x]);

    let unique = snf.right.mul(&snf.right_inverse) == IntegerMatrix::identity(n);

    Ok(AdjunctionReport {
        adtak: group_from_snf(n, &snf)?,
        factors,
        respects_invariants,
        recovers_map,
        unique,
        generator_images,
        basis_images,
    })
}
