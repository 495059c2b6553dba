//! The `G_n` preset: a full smoothness and dual-Selmer audit for the group
//! whose identity component is `GL_n × GL_1`.

use serde::{Deserialize, Serialize};

use crate::cohomology::{twisted_involution_action, InvolutionSpec};
use crate::error::{Error, Result};
use crate::ff::FiniteField;
use crate::ledger::{
    dual_selmer_verdict, framework_check, gn_dims, r0, taylor_wiles_sum, DeformationSetting,
    DualSelmerVerdict, FrameworkVerdict, PlaceKind, PlaceSpec,
};

/// Largest `n` for which the archimedean `h^0` is computed from the
/// involution on `gl_n`.
pub const MAX_GN_AUDIT_N: u64 = 16;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GnAuditInput {
    pub n: u64,
    #[serde(rename = "deg_F")]
    pub deg_f: u64,
    pub s_count: u64,
    pub ell_degrees: Vec<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    /// The identity or inequality being tested.
    pub identity: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    pub fn new(name: &str, identity: &str, passed: bool, detail: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            identity: identity.into(),
            passed,
            detail: detail.into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GnAudit {
    pub input: GnAuditInput,
    pub setting: DeformationSetting,
    /// `h^0` of complex conjugation on `gl_n` at each archimedean place.
    pub arch_h0: u64,
    pub framework: FrameworkVerdict,
    pub dual_selmer: DualSelmerVerdict,
    /// `(n^2 + 1) #S_l - 1`.
    pub r0_expected: i64,
    pub checks: Vec<Check>,
}

impl GnAudit {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// `h^0` of `x -> -J x^t J^{-1}` on `gl_n` for the antidiagonal `J`,
/// i.e. the `(+1)`-eigenspace dimension, computed over `F_5`.
pub fn arch_h0_gl(n: u64) -> Result<u64> {
    let f5 = FiniteField::prime(5)?;
    let action = twisted_involution_action(&InvolutionSpec::antidiagonal(&f5, n as usize)?)?;
    Ok(action.eigenspace_dim(1) as u64)
}

/// `min` at `s_count` places outside `l`, `sm` with `δ = 0` at places above
/// `l` with the given local degrees, and `deg_F` archimedean places.
pub fn gn_setting(input: &GnAuditInput) -> Result<DeformationSetting> {
    if input.n == 0 || input.n > MAX_GN_AUDIT_N {
        return Err(Error::InvalidInput(format!(
            "n must lie in 1..={MAX_GN_AUDIT_N}, got {}",
            input.n
        )));
    }
    let ell_sum: u64 = input.ell_degrees.iter().sum();
    if ell_sum != input.deg_f {
        return Err(Error::InvalidSetting(format!(
            "local degrees above l sum to {ell_sum}, expected [F:Q] = {}",
            input.deg_f
        )));
    }
    let mut places = Vec::new();
    places.extend((0..input.s_count).map(|_| PlaceSpec::min()));
    places.extend(input.ell_degrees.iter().map(|&d| PlaceSpec::sm(d, 0)));
    places.extend((0..input.deg_f).map(|_| PlaceSpec::arch()));
    DeformationSetting::new(gn_dims(input.n), input.deg_f, places)
}

pub fn gn_audit(input: &GnAuditInput) -> Result<GnAudit> {
    let setting = gn_setting(input)?;
    let lie = setting.lie;
    let framework = framework_check(&setting)?;
    let arch_h0 = arch_h0_gl(input.n)?;
    let h0s: Vec<u64> = setting
        .places
        .iter()
        .map(|p| {
            if p.kind == PlaceKind::Arch {
                arch_h0
            } else {
                0
            }
        })
        .collect();
    let dual_selmer = dual_selmer_verdict(&setting, 0, 0, &h0s)?;

    let count = setting.place_count() as i64;
    let n2 = (input.n * input.n) as i64;
    let r0_expected = (n2 + 1) * count - 1;
    let tw = taylor_wiles_sum(&lie, input.deg_f);
    let checks = vec![
        Check::new(
            "gamma",
            "per-place gamma = #S_l dim g + [F:Q] dim b^der - dim g^ab - sum delta",
            framework.gamma == framework.gamma_closed_form,
            format!("{} vs {}", framework.gamma, framework.gamma_closed_form),
        ),
        Check::new(
            "r0",
            "r0 = (n^2 + 1) #S_l - 1",
            framework.r0 == r0_expected && r0(&lie, count as u64) == r0_expected,
            format!("r0 = {}, expected {r0_expected}", framework.r0),
        ),
        Check::new(
            "crys-equality",
            "gen(I) = gamma - r0 when all delta vanish",
            framework.margin == 0,
            format!(
                "gen_I = {}, gamma - r0 = {}",
                framework.gen_i, framework.gen_bound
            ),
        ),
        Check::new(
            "smooth",
            "gen(I) <= gamma - r0",
            framework.smooth,
            format!("margin {}", framework.margin),
        ),
        Check::new(
            "taylor-wiles",
            "sum over v|inf of h0(g^der) = [F:Q](dim g^der - dim b^der)",
            arch_h0 * input.deg_f == tw,
            format!("{} x {arch_h0} vs {tw}", input.deg_f),
        ),
        Check::new(
            "dual-selmer",
            "dim H^1_{L-perp} = [F:Q] dim b^der - (Greenberg-Wiles difference) = 0",
            dual_selmer.vanishes,
            format!(
                "tangent {} - difference {} = {}",
                dual_selmer.tangent_dim, dual_selmer.gw_diff, dual_selmer.dual_dim
            ),
        ),
    ];
    Ok(GnAudit {
        input: input.clone(),
        setting,
        arch_h0,
        framework,
        dual_selmer,
        r0_expected,
        checks,
    })
}
