//! Thresholds, the (1,...,1) condition and q-power eigenvalue orbits.
//!
//! `cargo run --example taylor_condition`

use defring_audit::ff::{FiniteField, Matrix};
use defring_audit::partitions::{nabla_matrix, Partition};
use defring_audit::taylor::{
    eigenvalue_qpower_stable, min_equals_type_partition, qpower_conjugacy, satisfies_one_condition,
    taylor_threshold, threshold_coprime,
};

fn main() -> defring_audit::Result<()> {
    for (q, n) in [(2, 2), (2, 3), (3, 3)] {
        let t = taylor_threshold(q, n)?;
        println!("q = {q}, n = {n}: q^(n!) = {t}");
    }
    println!("gcd(3, 2^2 - 1) = 1? {}", threshold_coprime(3, 2, 2)?);

    let f7 = FiniteField::prime(7)?;
    let x = Matrix::from_ints(&f7, &[vec![2, 0], vec![0, 4]])?;
    let swap = Matrix::from_ints(&f7, &[vec![0, 1], vec![1, 0]])?;
    println!(
        "diag(2,4): swap X swap^-1 = X^2? {}, eigenvalues stable under squaring? {}",
        qpower_conjugacy(&x, &swap, 2)?,
        eigenvalue_qpower_stable(&x, 2)?
    );

    let lambda: Partition = "3,2,1".parse()?;
    let u = nabla_matrix(&lambda, &f7);
    println!(
        "nabla({lambda}): (1,...,1) condition {}, recovered type {}",
        satisfies_one_condition(&u)?,
        min_equals_type_partition(&u)?
    );
    Ok(())
}
