//! Eigenvalues by exhaustive root scanning in extension fields.

use num_integer::Integer;

use super::{FieldElement, FiniteField, Matrix, Poly};
use crate::error::{Error, Result};

/// Largest extension field we are willing to scan element by element.
pub const ROOT_SCAN_BUDGET: u64 = 1 << 20;

/// A field embedding `F_{p^m} -> F_{p^{m'}}` with `m | m'`, determined by the
/// image of the generator `a` of the source.
#[derive(Clone, Debug)]
pub struct Embedding {
    source: FiniteField,
    target: FiniteField,
    generator_image: FieldElement,
}

impl Embedding {
    /// Embeds `source` into `target`, sending `a` to the smallest root of the
    /// source modulus in `target`.
    pub fn new(source: &FiniteField, target: &FiniteField) -> Result<Self> {
        if source.characteristic() != target.characteristic()
            || !target.degree().is_multiple_of(source.degree())
        {
            return Err(Error::FieldMismatch);
        }
        if target.order() > ROOT_SCAN_BUDGET && !source.is_prime_field() {
            return Err(Error::BudgetExceeded(target.order() as u128));
        }
        let generator_image = if source.is_prime_field() {
            target.zero()
        } else {
            let modulus: Vec<FieldElement> = source
                .modulus()
                .iter()
                .map(|&c| target.from_int(c as i64))
                .collect();
            let modulus = Poly::new(target, modulus);
            target
                .elements()
                .find(|&x| target.is_zero(modulus.eval(x)))
                .ok_or_else(|| Error::Internal(format!("{source} does not embed in {target}")))?
        };
        Ok(Self {
            source: source.clone(),
            target: target.clone(),
            generator_image,
        })
    }

    pub fn source(&self) -> &FiniteField {
        &self.source
    }

    pub fn target(&self) -> &FiniteField {
        &self.target
    }

    pub fn map(&self, x: FieldElement) -> FieldElement {
        let t = &self.target;
        if self.source.is_prime_field() {
            return t.from_int(x.0 as i64);
        }
        self.source
            .coeffs(x)
            .iter()
            .rev()
            .fold(t.zero(), |acc, &c| {
                t.add(t.mul(acc, self.generator_image), t.from_int(c as i64))
            })
    }

    pub fn map_poly(&self, poly: &Poly) -> Poly {
        poly.map_into(&self.target, |c| self.map(c))
    }
}

/// The eigenvalue multiset of a square matrix, expressed in a common
/// extension of its field of definition.
#[derive(Clone, Debug)]
pub struct Eigenvalues {
    pub embedding: Embedding,
    /// Sorted by packed representation; repeated according to multiplicity.
    pub values: Vec<FieldElement>,
}

impl Eigenvalues {
    pub fn field(&self) -> &FiniteField {
        self.embedding.target()
    }
}

/// All roots of `poly` in its own field, with multiplicity, by scanning every
/// element.
pub fn roots_with_multiplicity(poly: &Poly) -> Result<Vec<FieldElement>> {
    let field = poly.field();
    if field.order() > ROOT_SCAN_BUDGET {
        return Err(Error::BudgetExceeded(field.order() as u128));
    }
    let mut roots = Vec::new();
    for x in field.elements() {
        if !field.is_zero(poly.eval(x)) {
            continue;
        }
        let mut rest = poly.clone();
        while !rest.is_zero() && rest.degree() > Some(0) && field.is_zero(rest.eval(x)) {
            rest = rest.divide_by_root(x)?;
            roots.push(x);
        }
    }
    Ok(roots)
}

/// Roots of `charpoly(m)` in the smallest extension `F_{q^d}` of its field
/// `F_q` over which the characteristic polynomial splits.
///
/// Only degrees `d` dividing `lcm(1..=n)` can occur, so only those are
/// scanned. Fails with [`Error::BudgetExceeded`] once `q^d` passes
/// [`ROOT_SCAN_BUDGET`].
pub fn eigenvalues_in_splitting_field(m: &Matrix) -> Result<Eigenvalues> {
    let chi = m.charpoly()?;
    let n = m.rows();
    let base = m.field();
    let lcm = (1..=n as u64).fold(1u64, |acc, k| acc.lcm(&k));
    for d in (1..=lcm).filter(|d| lcm % d == 0) {
        let ext_degree = base.degree() as u64 * d;
        let order = (base.characteristic() as u128).checked_pow(ext_degree as u32);
        match order {
            Some(o) if o <= ROOT_SCAN_BUDGET as u128 => {}
            Some(o) => return Err(Error::BudgetExceeded(o)),
            None => return Err(Error::BudgetExceeded(u128::MAX)),
        }
        let ext = FiniteField::new(base.characteristic(), ext_degree as u32)?;
        let embedding = Embedding::new(base, &ext)?;
        let lifted = embedding.map_poly(&chi);
        let mut values = roots_with_multiplicity(&lifted)?;
        if values.len() == n {
            values.sort();
            return Ok(Eigenvalues { embedding, values });
        }
    }
    Err(Error::Internal(
        "characteristic polynomial failed to split in any admissible extension".into(),
    ))
}
