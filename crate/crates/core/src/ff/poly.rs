use std::fmt;

use super::{FieldElement, FiniteField};
use crate::error::{Error, Result};

/// A univariate polynomial over a [`FiniteField`], lowest degree first.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    field: FiniteField,
    coeffs: Vec<FieldElement>,
}

impl Poly {
    pub fn new(field: &FiniteField, coeffs: Vec<FieldElement>) -> Self {
        let mut p = Self {
            field: field.clone(),
            coeffs,
        };
        p.normalize();
        p
    }

    pub fn from_ints(field: &FiniteField, coeffs: &[i64]) -> Self {
        Self::new(field, coeffs.iter().map(|&c| field.from_int(c)).collect())
    }

    pub fn zero(field: &FiniteField) -> Self {
        Self::new(field, Vec::new())
    }

    pub fn one(field: &FiniteField) -> Self {
        Self::new(field, vec![field.one()])
    }

    /// `T - a`.
    pub fn linear(field: &FiniteField, root: FieldElement) -> Self {
        Self::new(field, vec![field.neg(root), field.one()])
    }

    /// `(T - 1)^n`.
    pub fn unipotent_target(field: &FiniteField, n: usize) -> Self {
        let base = Self::linear(field, field.one());
        (0..n).fold(Self::one(field), |acc, _| acc.mul(&base))
    }

    fn normalize(&mut self) {
        while self.coeffs.last() == Some(&self.field.zero()) {
            self.coeffs.pop();
        }
    }

    pub fn field(&self) -> &FiniteField {
        &self.field
    }

    pub fn coeffs(&self) -> &[FieldElement] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last() == Some(&self.field.one())
    }

    pub fn eval(&self, x: FieldElement) -> FieldElement {
        let f = &self.field;
        self.coeffs
            .iter()
            .rev()
            .fold(f.zero(), |acc, &c| f.add(f.mul(acc, x), c))
    }

    pub fn mul(&self, other: &Self) -> Self {
        let f = &self.field;
        if self.is_zero() || other.is_zero() {
            return Self::zero(f);
        }
        let mut out = vec![f.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        Self::new(f, out)
    }

    /// Exact division by `T - root`; errors if `root` is not a root.
    pub fn divide_by_root(&self, root: FieldElement) -> Result<Self> {
        let f = &self.field;
        let n = self.coeffs.len();
        if n == 0 {
            return Ok(self.clone());
        }
        let mut quotient = vec![f.zero(); n - 1];
        let mut carry = f.zero();
        for i in (0..n).rev() {
            let c = f.add(self.coeffs[i], f.mul(carry, root));
            if i == 0 {
                if !f.is_zero(c) {
                    return Err(Error::Internal("divide_by_root: nonzero remainder".into()));
                }
            } else {
                quotient[i - 1] = c;
            }
            carry = c;
        }
        Ok(Self::new(f, quotient))
    }

    /// Applies a coefficient map into another field (e.g. an embedding).
    pub fn map_into(
        &self,
        target: &FiniteField,
        map: impl Fn(FieldElement) -> FieldElement,
    ) -> Self {
        Self::new(target, self.coeffs.iter().map(|&c| map(c)).collect())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self} over {}", self.field)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(out, "0");
        }
        let field = &self.field;
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if field.is_zero(c) {
                continue;
            }
            if !first {
                write!(out, " + ")?;
            }
            first = false;
            let cs = field.display(c);
            let cs = if field.is_prime_field() || !cs.contains('+') {
                cs
            } else {
                format!("({cs})")
            };
            match (i, c == field.one()) {
                (0, _) => write!(out, "{cs}")?,
                (1, true) => write!(out, "T")?,
                (1, false) => write!(out, "{cs}T")?,
                (_, true) => write!(out, "T^{i}")?,
                (_, false) => write!(out, "{cs}T^{i}")?,
            }
        }
        Ok(())
    }
}
