//! Dimension bookkeeping for global deformation rings.
//!
//! A [`DeformationSetting`] lists the places of `S_l = S ∪ Ω_∞ ∪ Ω_l` with
//! their local conditions. From it the ledger computes the expected relative
//! dimensions of the local rings, the number `γ` of variables minus relations
//! of the global ring, the `R = T` dimension `r_0`, and decides whether the
//! relations cut out by the crystalline quotient fit inside `γ - r_0`
//! ([`framework_check`]). [`dual_selmer_verdict`] runs the Greenberg–Wiles
//! count that forces the dual Selmer group to vanish.
//!
//! All quantities are exact integers. Values that can legitimately go
//! negative (margins, differences) are `i64`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Dimensions of `g`, its derived and abelian parts, a Borel of `g^der`, and
/// the centre `z` of `g`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawLieDims")]
pub struct LieDims {
    pub dim_g: u64,
    pub dim_g_der: u64,
    pub dim_g_ab: u64,
    pub dim_b_der: u64,
    pub dim_z: u64,
}

#[derive(Deserialize)]
struct RawLieDims {
    dim_g: u64,
    dim_g_der: u64,
    dim_g_ab: u64,
    dim_b_der: u64,
    dim_z: Option<u64>,
}

impl TryFrom<RawLieDims> for LieDims {
    type Error = Error;

    fn try_from(raw: RawLieDims) -> Result<Self> {
        let dims = LieDims::new(raw.dim_g, raw.dim_g_der, raw.dim_g_ab, raw.dim_b_der)?;
        match raw.dim_z {
            Some(z) if z != dims.dim_z => Err(Error::InvalidSetting(format!(
                "dim_z = {z} conflicts with dim_g - dim_g_der = {}",
                dims.dim_z
            ))),
            _ => Ok(dims),
        }
    }
}

impl LieDims {
    /// Validates the split `g = g^der ⊕ g^ab` and `b^der ⊆ g^der`; `dim_z` is
    /// derived as `dim_g - dim_g_der`.
    pub fn new(dim_g: u64, dim_g_der: u64, dim_g_ab: u64, dim_b_der: u64) -> Result<Self> {
        if dim_g != dim_g_der + dim_g_ab {
            return Err(Error::InvalidSetting(format!(
                "dim_g = {dim_g} but dim_g_der + dim_g_ab = {}",
                dim_g_der + dim_g_ab
            )));
        }
        if dim_b_der > dim_g_der {
            return Err(Error::InvalidSetting(format!(
                "dim_b_der = {dim_b_der} exceeds dim_g_der = {dim_g_der}"
            )));
        }
        Ok(Self {
            dim_g,
            dim_g_der,
            dim_g_ab,
            dim_b_der,
            dim_z: dim_g - dim_g_der,
        })
    }

    pub fn validate(&self) -> Result<()> {
        let fresh = Self::new(self.dim_g, self.dim_g_der, self.dim_g_ab, self.dim_b_der)?;
        if fresh.dim_z != self.dim_z {
            return Err(Error::InvalidSetting(format!(
                "dim_z = {} conflicts with dim_g - dim_g_der = {}",
                self.dim_z, fresh.dim_z
            )));
        }
        Ok(())
    }
}

/// Lie algebra dimensions of `G_n`, whose identity component is `GL_n × GL_1`.
pub fn gn_dims(n: u64) -> LieDims {
    assert!(n >= 1, "G_n needs n >= 1");
    LieDims::new(n * n + 1, n * n, 1, n * (n + 1) / 2).expect("G_n dimensions are consistent")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PlaceKind {
    /// A finite place not above `l`.
    #[serde(rename = "S")]
    S,
    /// A place above `l`.
    #[serde(rename = "ell")]
    Ell,
    /// An archimedean place.
    #[serde(rename = "arch")]
    Arch,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LocalCondition {
    Min,
    Sm,
    Crys,
    Unrestricted,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlaceSpec {
    pub kind: PlaceKind,
    /// `[F_v : Q_l]` for places above `l`, otherwise 0.
    #[serde(default)]
    pub local_degree: u64,
    pub condition: LocalCondition,
    /// Defect of the `sm` ring from `dim(g^der)([F_v:Q_l] + 1)`.
    #[serde(default)]
    pub delta: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub h0_local: Option<u64>,
}

impl PlaceSpec {
    pub fn min() -> Self {
        Self {
            kind: PlaceKind::S,
            local_degree: 0,
            condition: LocalCondition::Min,
            delta: 0,
            h0_local: None,
        }
    }

    pub fn sm(local_degree: u64, delta: u64) -> Self {
        Self {
            kind: PlaceKind::Ell,
            local_degree,
            condition: LocalCondition::Sm,
            delta,
            h0_local: None,
        }
    }

    pub fn crys(local_degree: u64) -> Self {
        Self {
            kind: PlaceKind::Ell,
            local_degree,
            condition: LocalCondition::Crys,
            delta: 0,
            h0_local: None,
        }
    }

    pub fn arch() -> Self {
        Self {
            kind: PlaceKind::Arch,
            local_degree: 0,
            condition: LocalCondition::Unrestricted,
            delta: 0,
            h0_local: None,
        }
    }

    pub fn with_h0(mut self, h0: u64) -> Self {
        self.h0_local = Some(h0);
        self
    }

    pub fn validate(&self) -> Result<()> {
        use LocalCondition::*;
        use PlaceKind::*;
        match (self.kind, self.condition) {
            (S, Min | Unrestricted) | (Ell, Sm | Crys) | (Arch, Unrestricted) => {}
            (kind, cond) => {
                return Err(Error::InvalidSetting(format!(
                    "condition {cond:?} is not allowed at a place of kind {kind:?}"
                )))
            }
        }
        match self.kind {
            Ell if self.local_degree == 0 => {
                return Err(Error::InvalidSetting(
                    "a place above l needs [F_v:Q_l] >= 1".into(),
                ))
            }
            S | Arch if self.local_degree != 0 => {
                return Err(Error::InvalidSetting(format!(
                    "local degree {} given for a {:?} place",
                    self.local_degree, self.kind
                )))
            }
            _ => {}
        }
        if self.delta != 0 && self.condition != Sm {
            return Err(Error::InvalidSetting(
                "delta is only meaningful at sm places".into(),
            ));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DeformationSetting {
    pub lie: LieDims,
    /// `[F : Q]`.
    #[serde(rename = "deg_F")]
    pub deg_f: u64,
    pub places: Vec<PlaceSpec>,
    /// When set, the local degrees above `l` sum to `[F:Q]` and there are
    /// `[F:Q]` archimedean places (`F` totally real).
    #[serde(default = "default_true")]
    pub degrees_complete: bool,
}

fn default_true() -> bool {
    true
}

impl DeformationSetting {
    pub fn new(lie: LieDims, deg_f: u64, places: Vec<PlaceSpec>) -> Result<Self> {
        let s = Self {
            lie,
            deg_f,
            places,
            degrees_complete: true,
        };
        s.validate()?;
        Ok(s)
    }

    pub fn validate(&self) -> Result<()> {
        self.lie.validate()?;
        if self.deg_f == 0 {
            return Err(Error::InvalidSetting("[F:Q] must be at least 1".into()));
        }
        if self.places.is_empty() {
            return Err(Error::InvalidSetting("no places".into()));
        }
        for p in &self.places {
            p.validate()?;
        }
        if self.degrees_complete {
            let ell_sum = self.ell_degree_sum();
            if ell_sum != self.deg_f {
                return Err(Error::InvalidSetting(format!(
                    "local degrees above l sum to {ell_sum}, but [F:Q] = {}",
                    self.deg_f
                )));
            }
            let arch = self.count(PlaceKind::Arch);
            if arch as u64 != self.deg_f {
                return Err(Error::InvalidSetting(format!(
                    "{arch} archimedean places, but [F:Q] = {}",
                    self.deg_f
                )));
            }
        }
        Ok(())
    }

    /// `#S_l`.
    pub fn place_count(&self) -> usize {
        self.places.len()
    }

    pub fn count(&self, kind: PlaceKind) -> usize {
        self.places.iter().filter(|p| p.kind == kind).count()
    }

    pub fn ell_degree_sum(&self) -> u64 {
        self.places
            .iter()
            .filter(|p| p.kind == PlaceKind::Ell)
            .map(|p| p.local_degree)
            .sum()
    }

    pub fn delta_sum(&self) -> u64 {
        self.places.iter().map(|p| p.delta).sum()
    }

    /// `min` at every place in `S`, `sm` above `l`, unrestricted at infinity.
    pub fn require_smoothness_configuration(&self) -> Result<()> {
        self.validate()?;
        for (i, p) in self.places.iter().enumerate() {
            let expected = match p.kind {
                PlaceKind::S => LocalCondition::Min,
                PlaceKind::Ell => LocalCondition::Sm,
                PlaceKind::Arch => LocalCondition::Unrestricted,
            };
            if p.condition != expected {
                return Err(Error::InvalidSetting(format!(
                    "place {i} ({:?}) carries {:?}; the smoothness check needs {expected:?}",
                    p.kind, p.condition
                )));
            }
        }
        Ok(())
    }
}

/// The relative dimension of the local lifting ring prescribed by a place's
/// condition.
///
/// * `sm` above `l`: `dim(g^der)([F_v:Q_l] + 1) - δ_v`
/// * `crys` above `l`: `dim(g^der) + (dim(g^der) - dim(b^der))[F_v:Q_l]`
/// * `min` or unrestricted in `S`: `dim(g^der)`
/// * archimedean: `dim(b^der)`
pub fn expected_local_dim(lie: &LieDims, place: &PlaceSpec) -> Result<u64> {
    place.validate()?;
    let g = lie.dim_g_der;
    let b = lie.dim_b_der;
    Ok(match (place.kind, place.condition) {
        (PlaceKind::Ell, LocalCondition::Sm) => {
            let full = g * (place.local_degree + 1);
            full.checked_sub(place.delta).ok_or_else(|| {
                Error::InvalidSetting(format!("delta {} exceeds {full}", place.delta))
            })?
        }
        (PlaceKind::Ell, LocalCondition::Crys) => g + (g - b) * place.local_degree,
        (PlaceKind::S, _) => g,
        (PlaceKind::Arch, _) => b,
        (kind, cond) => {
            return Err(Error::InvalidSetting(format!(
                "no dimension formula for {cond:?} at {kind:?}"
            )))
        }
    })
}

/// `r_0 = dim(g) · #S_l - dim(g^ab)`.
pub fn r0(lie: &LieDims, s_ell_count: u64) -> i64 {
    (lie.dim_g * s_ell_count) as i64 - lie.dim_g_ab as i64
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GammaReport {
    /// `(#S_l - 1) dim(g^ab) + d^sm_l + d_∞ + d^min_S`.
    pub per_place: i64,
    /// `#S_l dim(g) + [F:Q] dim(b^der) - dim(g^ab) - Σ δ_v`.
    pub closed_form: i64,
}

/// Both computations of `γ`; they are required to agree when the setting's
/// degrees are complete.
pub fn gamma_report(setting: &DeformationSetting) -> Result<GammaReport> {
    setting.require_smoothness_configuration()?;
    let lie = &setting.lie;
    let count = setting.place_count() as i64;
    let mut per_place = (count - 1) * lie.dim_g_ab as i64;
    for p in &setting.places {
        per_place += expected_local_dim(lie, p)? as i64;
    }
    let closed_form = count * lie.dim_g as i64 + (setting.deg_f * lie.dim_b_der) as i64
        - lie.dim_g_ab as i64
        - setting.delta_sum() as i64;
    if setting.degrees_complete && per_place != closed_form {
        return Err(Error::Internal(format!(
            "gamma: per-place sum {per_place} disagrees with closed form {closed_form}"
        )));
    }
    Ok(GammaReport {
        per_place,
        closed_form,
    })
}

pub fn gamma(setting: &DeformationSetting) -> Result<i64> {
    gamma_report(setting).map(|g| g.per_place)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlaceDimensions {
    pub index: usize,
    pub kind: PlaceKind,
    pub condition: LocalCondition,
    pub local_degree: u64,
    pub delta: u64,
    /// Dimension under the place's own condition.
    pub dim: u64,
    /// Crystalline dimension, for places above `l`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dim_crys: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FrameworkVerdict {
    pub gamma: i64,
    pub gamma_closed_form: i64,
    pub r0: i64,
    /// `γ - r_0`.
    pub gen_bound: i64,
    /// `d^sm_l - d^crys_l`, the number of generators of the kernel of the
    /// crystalline quotient of the local ring.
    #[serde(rename = "gen_I")]
    pub gen_i: i64,
    pub margin: i64,
    pub smooth: bool,
    /// `[F:Q] dim(b^der) - Σ δ_v`.
    pub unframed_dim: i64,
    pub places: Vec<PlaceDimensions>,
    pub notes: Vec<String>,
}

/// Decides formal smoothness of the global `min`/`sm` ring by comparing the
/// generator count of the local crystalline kernel with `γ - r_0`.
pub fn framework_check(setting: &DeformationSetting) -> Result<FrameworkVerdict> {
    let g = gamma_report(setting)?;
    let lie = &setting.lie;
    let r0 = r0(lie, setting.place_count() as u64);
    let mut places = Vec::with_capacity(setting.places.len());
    let mut gen_i = 0i64;
    for (index, p) in setting.places.iter().enumerate() {
        let dim = expected_local_dim(lie, p)?;
        let dim_crys = match p.kind {
            PlaceKind::Ell => Some(expected_local_dim(lie, &PlaceSpec::crys(p.local_degree))?),
            _ => None,
        };
        if let Some(c) = dim_crys {
            gen_i += dim as i64 - c as i64;
        }
        places.push(PlaceDimensions {
            index,
            kind: p.kind,
            condition: p.condition,
            local_degree: p.local_degree,
            delta: p.delta,
            dim,
            dim_crys,
        });
    }
    let gen_bound = g.per_place - r0;
    let margin = gen_bound - gen_i;
    let smooth = margin >= 0;
    let unframed_dim = (setting.deg_f * lie.dim_b_der) as i64 - setting.delta_sum() as i64;
    let mut notes = Vec::new();
    if !smooth {
        notes.push(format!(
            "gen(I) = d^sm_l - d^crys_l = {gen_i} exceeds gamma - r0 = {gen_bound}: \
             the crystalline relations do not fit, smoothness is not established"
        ));
    }
    if setting.degrees_complete && setting.delta_sum() == 0 && margin != 0 {
        notes.push(format!(
            "margin {margin} != 0 although all delta vanish and degrees are complete: \
             the (crys) dimension equality is violated"
        ));
    }
    Ok(FrameworkVerdict {
        gamma: g.per_place,
        gamma_closed_form: g.closed_form,
        r0,
        gen_bound,
        gen_i,
        margin,
        smooth,
        unframed_dim,
        places,
        notes,
    })
}

/// `Σ_{v|∞} h^0(G_{F_v}, g^der) = [F:Q](dim(g^der) - dim(b^der))`.
pub fn taylor_wiles_sum(lie: &LieDims, deg_f: u64) -> u64 {
    deg_f * (lie.dim_g_der - lie.dim_b_der)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocalSelmerTerm {
    pub dim_l: u64,
    pub h0: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SelmerInput {
    pub h0_global: u64,
    pub h0_global_dual: u64,
    pub local: Vec<LocalSelmerTerm>,
}

/// `h^0 - h^0(dual) + Σ_v (dim L_v - h^0_v)`, which equals
/// `dim H^1_L - dim H^1_{L^⊥}`.
pub fn greenberg_wiles_diff(si: &SelmerInput) -> i64 {
    let local: i64 = si.local.iter().map(|t| t.dim_l as i64 - t.h0 as i64).sum();
    si.h0_global as i64 - si.h0_global_dual as i64 + local
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualSelmerVerdict {
    pub vanishes: bool,
    pub dual_dim: i64,
    pub tangent_dim: i64,
    pub gw_diff: i64,
    pub selmer_input: SelmerInput,
}

/// Assembles the local conditions of the smooth-at-`l` setting, applies
/// Greenberg–Wiles with `dim H^1_L = [F:Q] dim(b^der)`, and reports the
/// dimension of the dual Selmer group.
///
/// `h0_locals[i]` is `h^0` at `setting.places[i]`.
pub fn dual_selmer_verdict(
    setting: &DeformationSetting,
    h0_global: u64,
    h0_global_dual: u64,
    h0_locals: &[u64],
) -> Result<DualSelmerVerdict> {
    setting.require_smoothness_configuration()?;
    if let Some((i, p)) = setting
        .places
        .iter()
        .enumerate()
        .find(|(_, p)| p.delta != 0)
    {
        return Err(Error::InvalidSetting(format!(
            "place {i} has delta = {}; the dual Selmer count needs all delta to vanish",
            p.delta
        )));
    }
    if h0_locals.len() != setting.places.len() {
        return Err(Error::InvalidSetting(format!(
            "{} local h0 values for {} places",
            h0_locals.len(),
            setting.places.len()
        )));
    }
    let lie = &setting.lie;
    let arch_sum: u64 = setting
        .places
        .iter()
        .zip(h0_locals)
        .filter(|(p, _)| p.kind == PlaceKind::Arch)
        .map(|(_, &h)| h)
        .sum();
    let tw = taylor_wiles_sum(lie, setting.deg_f);
    if arch_sum != tw {
        return Err(Error::InvalidSetting(format!(
            "archimedean h0 values sum to {arch_sum}, but the Taylor-Wiles identity requires \
             [F:Q](dim g^der - dim b^der) = {tw}"
        )));
    }
    let local = setting
        .places
        .iter()
        .zip(h0_locals)
        .map(|(p, &h0)| {
            let dim_l = match p.kind {
                PlaceKind::S => h0,
                PlaceKind::Ell => h0 + p.local_degree * lie.dim_g_der,
                PlaceKind::Arch => 0,
            };
            LocalSelmerTerm { dim_l, h0 }
        })
        .collect();
    let selmer_input = SelmerInput {
        h0_global,
        h0_global_dual,
        local,
    };
    let gw_diff = greenberg_wiles_diff(&selmer_input);
    let tangent_dim = (setting.deg_f * lie.dim_b_der) as i64;
    let dual_dim = tangent_dim - gw_diff;
    if dual_dim < 0 {
        return Err(Error::InvalidSetting(format!(
            "dual Selmer dimension would be {dual_dim}: tangent {tangent_dim} < Greenberg-Wiles \
             difference {gw_diff}"
        )));
    }
    Ok(DualSelmerVerdict {
        vanishes: dual_dim == 0 && h0_global == 0,
        dual_dim,
        tangent_dim,
        gw_diff,
        selmer_input,
    })
}

/// Convenience wrapper reading `h^0` from each place's `h0_local` (default 0).
pub fn dual_selmer_from_places(
    setting: &DeformationSetting,
    h0_global: u64,
    h0_global_dual: u64,
) -> Result<DualSelmerVerdict> {
    let h0s: Vec<u64> = setting
        .places
        .iter()
        .map(|p| p.h0_local.unwrap_or(0))
        .collect();
    dual_selmer_verdict(setting, h0_global, h0_global_dual, &h0s)
}

/// Number of variables `n^2([K:Q_p] + 1)` of the local lifting ring at a
/// place above `p` when it is unobstructed.
pub fn local_euler_lift_vars(n: u64, deg: u64) -> Result<u64> {
    if n == 0 || deg == 0 {
        return Err(Error::InvalidInput(
            "n and [K:Q_p] must be at least 1".into(),
        ));
    }
    Ok(n * n * (deg + 1))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FramedCounts {
    /// Extra variables from framing at `#Σ` places: `dim(g)(#Σ - 1)`.
    pub t: u64,
    /// `dim(g) - dim(z) = dim(g^der)`.
    pub u: u64,
}

pub fn framed_variable_counts(lie: &LieDims, sigma_size: u64) -> Result<FramedCounts> {
    if sigma_size == 0 {
        return Err(Error::InvalidInput("#Σ must be at least 1".into()));
    }
    Ok(FramedCounts {
        t: lie.dim_g * (sigma_size - 1),
        u: lie.dim_g - lie.dim_z,
    })
}

/// Strict inequality `Σ d_v > dim(g) #Σ - dim(z) - b`, under which a
/// balanced presentation over the local ring exists.
pub fn presentability_check(lie: &LieDims, local_dims: &[u64], b: u64) -> bool {
    let d: i64 = local_dims.iter().map(|&x| x as i64).sum();
    let bound = (lie.dim_g * local_dims.len() as u64) as i64 - lie.dim_z as i64 - b as i64;
    d > bound
}

/// `gen(I) <= a - u - b` for a quotient of `A[[x_1..x_a]]/(f_1..f_b)` by `I`
/// to stay formally smooth over `u` fixed directions.
pub fn smooth_quotient_test(a: u64, u: u64, b: u64, gen: u64) -> Result<bool> {
    if u > a {
        return Err(Error::InvalidInput(format!("u = {u} exceeds a = {a}")));
    }
    let bound = a as i64 - u as i64 - b as i64;
    if bound < 0 {
        return Err(Error::InvalidInput(format!(
            "a - u - b = {bound} is negative: malformed presentation"
        )));
    }
    Ok(gen as i64 <= bound)
}

/// Presentation data `R_1 = Λ[[y_1..y_{β+h}]]/(g_1..g_β)`,
/// `R_2 = Λ[[z_1..z_{m+h}]]` and `R_1[[x_1..x_{α+m}]]/(f_1..f_α) ≅ R_2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegularityInput {
    pub alpha: u64,
    pub beta: u64,
    pub m: u64,
    pub h: u64,
    /// Caller's total variable count for the combined presentation.
    #[serde(default)]
    pub total_vars: Option<u64>,
    /// Caller's dimension for the presented ring.
    #[serde(default)]
    pub target_dim: Option<u64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RegularityVerdict {
    pub consistent: bool,
    pub r1_regular: bool,
}

/// `α + β` relations in `α + m + β + h` variables presenting a ring of
/// dimension `m + h` force the relations into a regular system of
/// parameters, so `R_1` is regular. Mismatched caller totals are rejected.
pub fn regularity_from_presentations(input: &RegularityInput) -> RegularityVerdict {
    let vars = input.alpha + input.m + input.beta + input.h;
    let relations = input.alpha + input.beta;
    let total = input.total_vars.unwrap_or(vars);
    let dim = input.target_dim.unwrap_or(input.m + input.h);
    let consistent =
        total == vars && total.checked_sub(relations) == Some(dim) && dim == input.m + input.h;
    RegularityVerdict {
        consistent,
        r1_regular: consistent,
    }
}
