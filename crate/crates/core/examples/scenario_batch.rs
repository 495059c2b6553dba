//! Runs every scenario file in `scenarios/` and summarises the reports.
//!
//! `DEFRING_AUDIT_THREADS=2 cargo run --example scenario_batch`

use std::path::Path;

use defring_audit::scenario::{batch_exit_code, run_file};

fn main() -> defring_audit::Result<()> {
    let dir = Path::new(env!("CARGO_MANIFEST_DIR")).join("scenarios");
    let mut paths: Vec<_> = std::fs::read_dir(&dir)
        .map_err(|e| defring_audit::Error::InvalidInput(e.to_string()))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    paths.sort();
    for path in paths {
        let reports = run_file(&path)?;
        println!(
            "{} -> exit {}",
            path.file_name().unwrap().to_string_lossy(),
            batch_exit_code(&reports)
        );
        for r in &reports {
            println!(
                "  {:<24} {:<10} exit {} {}",
                r.scenario,
                r.mode,
                r.exit_code,
                r.diagnostics.join("; ")
            );
        }
    }
    Ok(())
}
