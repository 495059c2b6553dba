//! Partitions, their matrix models and the kernel sequence.
//!
//! `cargo run --example partition_dictionary -- 4`

use defring_audit::ff::FiniteField;
use defring_audit::partitions::{
    kernel_sequence, nabla_matrix, verify_conjugation_lemma, Partition,
};

fn main() -> defring_audit::Result<()> {
    let n: usize = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(4);
    let f5 = FiniteField::prime(5)?;
    println!("{:>12} {:>12} {:>12}", "lambda", "conjugate", "kernel seq");
    for lambda in Partition::all(n) {
        let seq = kernel_sequence(&nabla_matrix(&lambda, &f5))?;
        println!(
            "{:>12} {:>12} {:>12}",
            lambda.to_string(),
            lambda.conjugate().to_string(),
            seq.to_string()
        );
    }
    let report = verify_conjugation_lemma(n)?;
    println!(
        "{} partitions checked, {} failures",
        report.checked,
        report.failures.len()
    );
    Ok(())
}
