//! Exact splitting densities over every subgroup of a small group.
//!
//! `cargo run --example density_bound -- S4 2`

use defring_audit::density::{FiniteGroup, GroupSpec, SplitDensityProblem};

fn main() -> defring_audit::Result<()> {
    let mut args = std::env::args().skip(1);
    let gamma: GroupSpec = args.next().unwrap_or_else(|| "S3".into()).parse()?;
    let k: u32 = args.next().and_then(|a| a.parse().ok()).unwrap_or(1);
    let gamma: FiniteGroup = gamma.build()?;
    println!("Gamma = {gamma:?}, k = {k}");
    for h in gamma.all_subgroups() {
        let order = h.iter().filter(|&&b| b).count();
        let c = SplitDensityProblem::new(gamma.clone(), h, k)?.bound_certificate();
        println!(
            "|H| = {order:>2}: density {:>7} >= {} ({} witnesses, holds {})",
            c.density.to_string(),
            c.bound,
            c.witness_count,
            c.holds
        );
    }
    Ok(())
}
