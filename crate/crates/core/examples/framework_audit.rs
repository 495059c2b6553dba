//! Gamma, r0 and the crystalline margin for a hand-built setting, then the
//! G_n preset.
//!
//! `cargo run --example framework_audit`

use defring_audit::audit::{gn_audit, GnAuditInput};
use defring_audit::ledger::{
    dual_selmer_verdict, framework_check, gn_dims, DeformationSetting, PlaceSpec,
};

fn main() -> defring_audit::Result<()> {
    let places = vec![
        PlaceSpec::min(),
        PlaceSpec::sm(1, 0),
        PlaceSpec::sm(1, 0),
        PlaceSpec::arch(),
        PlaceSpec::arch(),
    ];
    let setting = DeformationSetting::new(gn_dims(2), 2, places)?;
    let v = framework_check(&setting)?;
    println!(
        "gamma {} (closed form {}), r0 {}, gen_I {}, margin {}, smooth {}",
        v.gamma, v.gamma_closed_form, v.r0, v.gen_i, v.margin, v.smooth
    );
    let d = dual_selmer_verdict(&setting, 0, 0, &[0, 0, 0, 1, 1])?;
    println!(
        "dual Selmer dimension {} (vanishes: {})",
        d.dual_dim, d.vanishes
    );

    for (n, deg_f, s, ell) in [
        (1, 1, 0, vec![1]),
        (2, 2, 1, vec![1, 1]),
        (3, 2, 2, vec![2]),
        (4, 3, 1, vec![1, 2]),
    ] {
        let a = gn_audit(&GnAuditInput {
            n,
            deg_f,
            s_count: s,
            ell_degrees: ell,
        })?;
        println!(
            "G_{n} [F:Q]={deg_f}: gamma {} r0 {} margin {} smooth {} dual {} passed {}",
            a.framework.gamma,
            a.framework.r0,
            a.framework.margin,
            a.framework.smooth,
            a.dual_selmer.dual_dim,
            a.passed()
        );
    }
    Ok(())
}
