//! Eigenvalue arithmetic around Taylor's `(1,...,1)` condition: the
//! threshold `q^{n!}`, the characteristic polynomial test, the relation
//! `phi X phi^{-1} = X^q`, and recovery of the block partition of a
//! unipotent matrix.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};

use crate::error::{Error, Result};
use crate::ff::{eigenvalues_in_splitting_field, is_prime, Matrix, Poly};
use crate::partitions::{kernel_sequence, Partition};

/// Largest `n` accepted by [`taylor_threshold`].
pub const MAX_THRESHOLD_N: u32 = 8;

fn factorial(n: u32) -> u32 {
    (1..=n).product()
}

/// `q^{n!}` exactly.
pub fn taylor_threshold(q: u64, n: u32) -> Result<BigUint> {
    if q < 2 {
        return Err(Error::InvalidInput(format!(
            "q must be at least 2, got {q}"
        )));
    }
    if n == 0 || n > MAX_THRESHOLD_N {
        return Err(Error::InvalidInput(format!(
            "n must lie in 1..={MAX_THRESHOLD_N}, got {n}"
        )));
    }
    Ok(BigUint::from(q).pow(factorial(n)))
}

/// Whether `gcd(ell, q^{n!} - 1) = 1`.
///
/// A prime `ell >= q^{n!}` cannot divide `q^{n!} - 1`; that case is checked
/// and reported as an internal error if violated.
pub fn threshold_coprime(ell: u64, q: u64, n: u32) -> Result<bool> {
    if !is_prime(ell) {
        return Err(Error::NotPrime(ell));
    }
    let threshold = taylor_threshold(q, n)?;
    let minus_one = &threshold - BigUint::one();
    let coprime = BigUint::from(ell).gcd(&minus_one).is_one();
    if BigUint::from(ell) >= threshold && !coprime {
        return Err(Error::Internal(format!(
            "prime {ell} >= {q}^{n}! divides {q}^{n}! - 1"
        )));
    }
    Ok(coprime)
}

/// `charpoly(X) = (T - 1)^n`.
pub fn satisfies_one_condition(x: &Matrix) -> Result<bool> {
    let chi = x.charpoly()?;
    Ok(chi == Poly::unipotent_target(x.field(), x.rows()))
}

/// `phi X phi^{-1} = X^q`.
pub fn qpower_conjugacy(x: &Matrix, phi: &Matrix, q: u64) -> Result<bool> {
    if !x.is_square() {
        return Err(Error::NotSquare {
            rows: x.rows(),
            cols: x.cols(),
        });
    }
    if phi.rows() != x.rows() || phi.cols() != x.cols() {
        return Err(Error::DimensionMismatch(format!(
            "phi is {}x{}, X is {}x{}",
            phi.rows(),
            phi.cols(),
            x.rows(),
            x.cols()
        )));
    }
    let lhs = phi.mul(x)?.mul(&phi.inverse()?)?;
    Ok(lhs == x.pow(q)?)
}

/// Whether `z -> z^q` maps the eigenvalue multiset of `X` to itself.
///
/// When it does, every nonzero eigenvalue is also checked to satisfy
/// `z^{q^{n!} - 1} = 1`; a violation is an internal error.
pub fn eigenvalue_qpower_stable(x: &Matrix, q: u64) -> Result<bool> {
    let ev = eigenvalues_in_splitting_field(x)?;
    let field = ev.field();
    let mut powered: Vec<_> = ev.values.iter().map(|&z| field.pow(z, q)).collect();
    powered.sort();
    if powered != ev.values {
        return Ok(false);
    }
    let n = x.rows() as u32;
    if n == 0 {
        return Ok(true);
    }
    // Exponents only matter modulo the order of the unit group.
    let units = BigUint::from(field.order() - 1);
    let exponent = (BigUint::from(q).pow(factorial(n)) - BigUint::one()) % &units;
    let exponent = exponent.to_u64().expect("reduced below the field order");
    for &z in &ev.values {
        if !field.is_zero(z) && field.pow(z, exponent) != field.one() {
            return Err(Error::Internal(format!(
                "eigenvalue {} is q-power stable but not a root of T^(q^{n}! - 1) - 1",
                field.display(z)
            )));
        }
    }
    Ok(true)
}

/// Block partition `lambda` with `X ~ I + diag(B_lambda)`: the conjugate of
/// the kernel sequence.
pub fn min_equals_type_partition(x: &Matrix) -> Result<Partition> {
    Ok(kernel_sequence(x)?.conjugate())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ff::FiniteField;
    use crate::partitions::nabla_matrix;

    fn f(p: u64) -> FiniteField {
        FiniteField::prime(p).unwrap()
    }

    fn m(field: &FiniteField, rows: &[Vec<i64>]) -> Matrix {
        Matrix::from_ints(field, rows).unwrap()
    }

    #[test]
    fn thresholds() {
        assert_eq!(taylor_threshold(2, 2).unwrap(), BigUint::from(4u32));
        assert_eq!(taylor_threshold(2, 3).unwrap(), BigUint::from(64u32));
        assert_eq!(taylor_threshold(7, 1).unwrap(), BigUint::from(7u32));
        assert!(taylor_threshold(2, 9).is_err());
        assert!(taylor_threshold(1, 2).is_err());
        // 2^{8!} has 40320 bits
        assert_eq!(taylor_threshold(2, 8).unwrap().bits(), 40321);
    }

    #[test]
    fn coprimality() {
        assert!(threshold_coprime(17, 2, 2).unwrap());
        // 2^{2!} - 1 = 3, so 5 is coprime while 3 is not
        assert!(threshold_coprime(5, 2, 2).unwrap());
        assert!(!threshold_coprime(3, 2, 2).unwrap());
        // 5 | 2^4 - 1 | 2^{4!} - 1
        assert!(!threshold_coprime(5, 2, 4).unwrap());
        assert!(threshold_coprime(67, 2, 3).unwrap());
        assert!(threshold_coprime(15, 2, 2).is_err());
    }

    #[test]
    fn one_condition() {
        let f5 = f(5);
        let u = Matrix::identity(&f5, 3)
            .add(&Matrix::nilpotent_block(&f5, 3))
            .unwrap();
        assert!(satisfies_one_condition(&u).unwrap());
        assert!(
            !satisfies_one_condition(&m(&f5, &[vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 2]]))
                .unwrap()
        );
        let lambda: Partition = "2,2,1".parse().unwrap();
        assert!(satisfies_one_condition(&nabla_matrix(&lambda, &f5)).unwrap());
    }

    #[test]
    fn qpower_examples() {
        let f7 = f(7);
        let swap = m(&f7, &[vec![0, 1], vec![1, 0]]);
        assert!(qpower_conjugacy(&Matrix::identity(&f7, 2), &swap, 5).unwrap());
        let x = m(&f7, &[vec![2, 0], vec![0, 4]]);
        assert!(qpower_conjugacy(&x, &swap, 2).unwrap());
        let y = m(&f7, &[vec![2, 0], vec![0, 3]]);
        assert!(!qpower_conjugacy(&y, &Matrix::identity(&f7, 2), 2).unwrap());
        let singular = m(&f7, &[vec![1, 1], vec![1, 1]]);
        assert_eq!(
            qpower_conjugacy(&x, &singular, 2).unwrap_err(),
            Error::Singular
        );
    }

    #[test]
    fn stability_examples() {
        let f7 = f(7);
        assert!(eigenvalue_qpower_stable(&m(&f7, &[vec![2, 0], vec![0, 4]]), 2).unwrap());
        assert!(!eigenvalue_qpower_stable(&m(&f7, &[vec![2, 0], vec![0, 3]]), 2).unwrap());
        let u = nabla_matrix(&"3".parse().unwrap(), &f7);
        assert!(eigenvalue_qpower_stable(&u, 3).unwrap());
    }

    #[test]
    fn type_partition_examples() {
        let f5 = f(5);
        let lambda: Partition = "3,1".parse().unwrap();
        assert_eq!(
            min_equals_type_partition(&nabla_matrix(&lambda, &f5)).unwrap(),
            lambda
        );
        assert_eq!(
            min_equals_type_partition(&Matrix::identity(&f5, 4)).unwrap(),
            Partition::column(4).unwrap()
        );
        let j = Matrix::identity(&f5, 5)
            .add(&Matrix::nilpotent_block(&f5, 5))
            .unwrap();
        assert_eq!(
            min_equals_type_partition(&j).unwrap(),
            Partition::row(5).unwrap()
        );
        assert!(min_equals_type_partition(&m(&f5, &[vec![2]])).is_err());
    }
}
