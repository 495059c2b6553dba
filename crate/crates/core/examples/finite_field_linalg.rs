//! Field construction, elimination, characteristic polynomials and
//! eigenvalues in splitting fields.
//!
//! `cargo run --example finite_field_linalg`

use defring_audit::ff::{eigenvalues_in_splitting_field, FiniteField, Matrix, Poly};

fn main() -> defring_audit::Result<()> {
    let f9 = FiniteField::new(3, 2)?;
    println!("{f9} has modulus {:?} (low degree first)", f9.modulus());

    let f5 = FiniteField::prime(5)?;
    let m = Matrix::from_ints(&f5, &[vec![1, 2, 3], vec![2, 4, 1], vec![3, 1, 4]])?;
    println!(
        "rank {} kernel {} det {}",
        m.rank(),
        m.kernel_dim(),
        f5.display(m.determinant()?)
    );
    println!("charpoly {}", m.charpoly()?);

    // T^2 + 1 is irreducible over F_3, so its roots live in F_9.
    let f3 = FiniteField::prime(3)?;
    let c = Matrix::companion(&Poly::from_ints(&f3, &[1, 0, 1]))?;
    let ev = eigenvalues_in_splitting_field(&c)?;
    let roots: Vec<String> = ev.values.iter().map(|&z| ev.field().display(z)).collect();
    println!(
        "eigenvalues of the companion of T^2 + 1 in {}: {roots:?}",
        ev.field()
    );
    Ok(())
}
