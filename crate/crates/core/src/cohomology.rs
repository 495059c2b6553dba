//! Cohomology of finite cyclic groups with coefficients in finite-dimensional
//! `F_l`-representations, and the order-two action on `gl_n` twisted by a
//! pairing matrix.
//!
//! For `Z/n` generated by `s` acting through `S`, with norm `N = 1 + S + ... + S^{n-1}`:
//!
//! * `H^0 = ker(S - 1)`
//! * `H^1 = ker N / im(S - 1)`
//! * `H^2 = ker(S - 1) / im N`
//!
//! and a 1-cocycle is determined by its value on `s`, which must lie in `ker N`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ff::{FiniteField, Matrix};

/// `Z/nZ` acting on `F^d` through the generator matrix `sigma`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclicAction {
    order: u64,
    sigma: Matrix,
}

impl CyclicAction {
    pub fn new(order: u64, sigma: Matrix) -> Result<Self> {
        if order == 0 {
            return Err(Error::InvalidAction(
                "group order must be at least 1".into(),
            ));
        }
        if !sigma.is_square() {
            return Err(Error::InvalidAction(format!(
                "generator is {}x{}, not square",
                sigma.rows(),
                sigma.cols()
            )));
        }
        let d = sigma.rows();
        if sigma.pow(order)? != Matrix::identity(sigma.field(), d) {
            return Err(Error::InvalidAction(format!(
                "generator does not satisfy sigma^{order} = 1"
            )));
        }
        Ok(Self { order, sigma })
    }

    /// The trivial action of `Z/order` on `field^dim`.
    pub fn trivial(field: &FiniteField, order: u64, dim: usize) -> Self {
        Self {
            order,
            sigma: Matrix::identity(field, dim),
        }
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn dim(&self) -> usize {
        self.sigma.rows()
    }

    pub fn sigma(&self) -> &Matrix {
        &self.sigma
    }

    pub fn field(&self) -> &FiniteField {
        self.sigma.field()
    }

    /// `N = sum_{j=0}^{n-1} sigma^j`.
    pub fn norm_matrix(&self) -> Matrix {
        let field = self.field();
        let d = self.dim();
        let mut acc = Matrix::zeros(field, d, d);
        let mut power = Matrix::identity(field, d);
        for _ in 0..self.order {
            acc = acc.add(&power).expect("same shape");
            power = power.mul(&self.sigma).expect("same shape");
        }
        acc
    }

    /// Dimension of the `lambda`-eigenspace of the generator.
    pub fn eigenspace_dim(&self, lambda: i64) -> usize {
        let c = self.field().from_int(lambda);
        self.sigma.shift(c).expect("square").kernel_dim()
    }

    pub fn cohomology_dims(&self) -> Result<CohomologyDims> {
        let field = self.field();
        let minus_one = self.sigma.shift(field.one())?;
        let norm = self.norm_matrix();
        let ker_minus_one = minus_one.kernel_dim();
        let rank_minus_one = minus_one.rank();
        let ker_norm = norm.kernel_dim();
        let rank_norm = norm.rank();
        let h1 = ker_norm.checked_sub(rank_minus_one).ok_or_else(|| {
            Error::Internal(format!(
                "dim ker N = {ker_norm} < rank(sigma - 1) = {rank_minus_one}"
            ))
        })?;
        let h2 = ker_minus_one.checked_sub(rank_norm).ok_or_else(|| {
            Error::Internal(format!(
                "dim ker(sigma - 1) = {ker_minus_one} < rank N = {rank_norm}"
            ))
        })?;
        Ok(CohomologyDims {
            h0: ker_minus_one,
            h1,
            h2,
            z1: ker_norm,
        })
    }

    /// Number of formal variables of the framed lifting ring of an order-two
    /// action in odd characteristic: the dimension of the `(-1)`-eigenspace.
    ///
    /// Also checks that `H^2` vanishes and that the eigenspace dimension
    /// agrees with the cocycle count `z1`.
    pub fn arch_lift_dim(&self) -> Result<usize> {
        if self.order != 2 {
            return Err(Error::InvalidAction(format!(
                "archimedean lifting needs an action of order 2, got {}",
                self.order
            )));
        }
        if self.field().characteristic() == 2 {
            return Err(Error::InvalidAction(
                "archimedean lifting needs odd characteristic".into(),
            ));
        }
        let dims = self.cohomology_dims()?;
        let minus = self.eigenspace_dim(-1);
        if dims.h2 != 0 {
            return Err(Error::Internal(format!(
                "H^2 of an order-2 action in odd characteristic is {}, expected 0",
                dims.h2
            )));
        }
        if dims.z1 != minus {
            return Err(Error::Internal(format!(
                "z1 = {} but the (-1)-eigenspace has dimension {minus}",
                dims.z1
            )));
        }
        Ok(minus)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CohomologyDims {
    pub h0: usize,
    pub h1: usize,
    pub h2: usize,
    /// Dimension of the space of 1-cocycles.
    pub z1: usize,
}

/// Data for the involution `x -> -J x^t J^{-1}` of `gl_n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InvolutionSpec {
    j: Matrix,
}

impl InvolutionSpec {
    pub fn new(j: Matrix) -> Result<Self> {
        if !j.is_square() {
            return Err(Error::NotSquare {
                rows: j.rows(),
                cols: j.cols(),
            });
        }
        if j.field().characteristic() == 2 {
            return Err(Error::InvalidAction(
                "involution needs odd characteristic".into(),
            ));
        }
        j.inverse()?;
        Ok(Self { j })
    }

    /// `J` = antidiagonal of ones, the symmetric default.
    pub fn antidiagonal(field: &FiniteField, n: usize) -> Result<Self> {
        let j = Matrix::from_fn(field, n, n, |r, c| {
            if r + c + 1 == n {
                field.one()
            } else {
                field.zero()
            }
        });
        Self::new(j)
    }

    /// `J = [[0, I_m], [-I_m, 0]]` with `n = 2m`, an antisymmetric choice.
    pub fn symplectic(field: &FiniteField, n: usize) -> Result<Self> {
        if !n.is_multiple_of(2) {
            return Err(Error::InvalidInput("symplectic J needs even n".into()));
        }
        let m = n / 2;
        let j = Matrix::from_fn(field, n, n, |r, c| {
            if r < m && c == r + m {
                field.one()
            } else if r >= m && c + m == r {
                field.from_int(-1)
            } else {
                field.zero()
            }
        });
        Self::new(j)
    }

    pub fn n(&self) -> usize {
        self.j.rows()
    }

    pub fn j(&self) -> &Matrix {
        &self.j
    }
}

/// The action of `x -> -J x^t J^{-1}` on `gl_n`, written in the basis of
/// elementary matrices flattened row-major.
pub fn twisted_involution_action(spec: &InvolutionSpec) -> Result<CyclicAction> {
    let j = &spec.j;
    let field = j.field();
    let n = spec.n();
    let j_inv = j.inverse()?;
    // theta(E_ab) has (i, k) entry -J[i][b] * J^{-1}[a][k].
    let sigma = Matrix::from_fn(field, n * n, n * n, |row, col| {
        let (i, k) = (row / n, row % n);
        let (a, b) = (col / n, col % n);
        field.neg(field.mul(j.get(i, b), j_inv.get(a, k)))
    });
    if sigma.mul(&sigma)? != Matrix::identity(field, n * n) {
        return Err(Error::InvalidAction(
            "x -> -J x^t J^{-1} is not an involution for this J".into(),
        ));
    }
    CyclicAction::new(2, sigma)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn field(p: u64) -> FiniteField {
        FiniteField::prime(p).unwrap()
    }

    fn diag(f: &FiniteField, d: &[i64]) -> Matrix {
        let d: Vec<_> = d.iter().map(|&x| f.from_int(x)).collect();
        Matrix::diagonal(f, &d)
    }

    #[test]
    fn norm_examples() {
        let f3 = field(3);
        let t = CyclicAction::trivial(&f3, 3, 1);
        assert!(t.norm_matrix().is_zero());
        let a = CyclicAction::new(2, diag(&f3, &[1, -1])).unwrap();
        assert_eq!(a.norm_matrix(), diag(&f3, &[2, 0]));
        let f7 = field(7);
        let any = CyclicAction::new(1, Matrix::identity(&f7, 3)).unwrap();
        assert_eq!(any.norm_matrix(), Matrix::identity(&f7, 3));
    }

    #[test]
    fn cohomology_examples() {
        let f3 = field(3);
        let a = CyclicAction::new(2, diag(&f3, &[1, -1])).unwrap();
        let d = a.cohomology_dims().unwrap();
        assert_eq!((d.h0, d.h2, d.z1), (1, 0, 1));

        let t = CyclicAction::trivial(&f3, 3, 1);
        let d = t.cohomology_dims().unwrap();
        assert_eq!((d.h1, d.h2), (1, 1));

        let f5 = field(5);
        let d = CyclicAction::trivial(&f5, 2, 1).cohomology_dims().unwrap();
        assert_eq!((d.h0, d.h1, d.h2), (1, 0, 0));
    }

    #[test]
    fn rejects_wrong_order() {
        let f5 = field(5);
        let err = CyclicAction::new(2, diag(&f5, &[2])).unwrap_err();
        assert!(matches!(err, Error::InvalidAction(_)));
    }

    #[test]
    fn arch_lift_examples() {
        let f5 = field(5);
        let a = CyclicAction::new(2, diag(&f5, &[1, -1, -1])).unwrap();
        assert_eq!(a.arch_lift_dim().unwrap(), 2);
        let f7 = field(7);
        assert_eq!(CyclicAction::trivial(&f7, 2, 4).arch_lift_dim().unwrap(), 0);
        assert!(CyclicAction::trivial(&f7, 3, 1).arch_lift_dim().is_err());
        let f3 = field(3);
        assert!(CyclicAction::trivial(&f3, 3, 1).arch_lift_dim().is_err());
        let f2 = field(2);
        assert!(CyclicAction::trivial(&f2, 2, 1).arch_lift_dim().is_err());
    }

    #[test]
    fn twisted_involution_examples() {
        let f5 = field(5);
        let swap = InvolutionSpec::new(Matrix::from_ints(&f5, &[vec![0, 1], vec![1, 0]]).unwrap())
            .unwrap();
        let act = twisted_involution_action(&swap).unwrap();
        assert_eq!(act.arch_lift_dim().unwrap(), 3);

        let f7 = field(7);
        let act =
            twisted_involution_action(&InvolutionSpec::antidiagonal(&f7, 3).unwrap()).unwrap();
        assert_eq!(act.eigenspace_dim(-1), 6);

        let anti = InvolutionSpec::new(Matrix::from_ints(&f5, &[vec![0, 1], vec![-1, 0]]).unwrap())
            .unwrap();
        let act = twisted_involution_action(&anti).unwrap();
        assert_eq!(act.eigenspace_dim(-1), 1);
        assert_eq!(act.eigenspace_dim(1), 3);
    }

    #[test]
    fn singular_j_rejected() {
        let f5 = field(5);
        let j = Matrix::from_ints(&f5, &[vec![1, 1], vec![1, 1]]).unwrap();
        assert_eq!(InvolutionSpec::new(j).unwrap_err(), Error::Singular);
    }

    #[test]
    fn non_involutive_j_rejected() {
        let f5 = field(5);
        // J J^{-t} is not scalar, so theta squared is not the identity.
        let j = Matrix::from_ints(&f5, &[vec![1, 1], vec![0, 1]]).unwrap();
        let spec = InvolutionSpec::new(j).unwrap();
        assert!(matches!(
            twisted_involution_action(&spec),
            Err(Error::InvalidAction(_))
        ));
    }
}
