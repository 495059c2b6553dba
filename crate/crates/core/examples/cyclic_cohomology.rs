//! Cohomology of cyclic actions and the twisted involution on gl_n.
//!
//! `cargo run --example cyclic_cohomology`

use defring_audit::cohomology::{twisted_involution_action, CyclicAction, InvolutionSpec};
use defring_audit::ff::{FiniteField, Matrix};

fn main() -> defring_audit::Result<()> {
    // Trivial action in the modular case: nothing vanishes.
    let f3 = FiniteField::prime(3)?;
    let d = CyclicAction::trivial(&f3, 3, 1).cohomology_dims()?;
    println!("Z/3 on F_3 trivially: {d:?}");

    // A sign flip over F_5: order 2, coprime to the characteristic.
    let f5 = FiniteField::prime(5)?;
    let sigma = Matrix::from_ints(&f5, &[vec![1, 0, 0], vec![0, -1, 0], vec![0, 0, -1]])?;
    let action = CyclicAction::new(2, sigma)?;
    println!(
        "diag(1,-1,-1): {:?}, lifting variables {}",
        action.cohomology_dims()?,
        action.arch_lift_dim()?
    );

    let f7 = FiniteField::prime(7)?;
    for n in 1..=5 {
        let act = twisted_involution_action(&InvolutionSpec::antidiagonal(&f7, n)?)?;
        println!(
            "gl_{n}: (+1) {:>2}  (-1) {:>2}  n(n+1)/2 = {}",
            act.eigenspace_dim(1),
            act.eigenspace_dim(-1),
            n * (n + 1) / 2
        );
    }
    Ok(())
}
