//! JSON scenarios and reports for batch audits.
//!
//! A scenario is an object with a `name`, a `mode` and mode-specific fields.
//! A file may hold one scenario or an array of them; arrays are evaluated in
//! parallel and reported in input order. Reports carry an exit code:
//! 0 when every check passes, 1 when a mathematical check fails, 2 when the
//! input is invalid.

use std::time::Instant;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::audit::{gn_audit, Check, GnAuditInput};
use crate::cohomology::{twisted_involution_action, CyclicAction, InvolutionSpec};
use crate::density::SplitDensityProblem;
use crate::error::{Error, Result};
use crate::ff::{FiniteField, Matrix};
use crate::ledger::{dual_selmer_verdict, framework_check, gamma_report, DeformationSetting};
use crate::partitions::{theta, verify_conjugation_lemma_over, Partition};
use crate::taylor::{
    eigenvalue_qpower_stable, min_equals_type_partition, qpower_conjugacy, satisfies_one_condition,
    taylor_threshold, threshold_coprime,
};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Environment variable bounding the number of worker threads for batches.
pub const THREADS_ENV: &str = "DEFRING_AUDIT_THREADS";

/// A matrix over `F_{p^m}`: row-major integers, packed as `sum c_i p^i` when
/// `m > 1`, reduced mod `p` (negatives allowed) when `m = 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixSpec {
    pub p: u64,
    #[serde(default = "one")]
    pub m: u32,
    pub rows: Vec<Vec<i64>>,
}

fn one() -> u32 {
    1
}

impl MatrixSpec {
    pub fn build(&self) -> Result<Matrix> {
        let field = FiniteField::new(self.p, self.m)?;
        if self.m == 1 {
            return Matrix::from_ints(&field, &self.rows);
        }
        let rows = self
            .rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|&x| {
                        u64::try_from(x)
                            .map_err(|_| {
                                Error::InvalidInput(format!("packed entry {x} is negative"))
                            })
                            .and_then(|x| field.from_packed(x))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        let n_rows = rows.len();
        let n_cols = rows.first().map_or(0, Vec::len);
        Matrix::from_entries(&field, n_rows, n_cols, rows.into_iter().flatten().collect())
    }

    pub fn from_matrix(m: &Matrix) -> Self {
        Self {
            p: m.field().characteristic(),
            m: m.field().degree(),
            rows: m
                .row_ints()
                .into_iter()
                .map(|r| r.into_iter().map(|x| x as i64).collect())
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "kebab-case")]
pub enum PartitionTask {
    VerifyLemma {
        n: usize,
        #[serde(default = "default_p")]
        p: u64,
    },
    Conjugate {
        partition: Partition,
    },
    Theta {
        partition: Partition,
        #[serde(default = "default_p")]
        p: u64,
    },
}

fn default_p() -> u64 {
    5
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum JChoice {
    Antidiagonal,
    Symplectic,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum JSpec {
    Named(JChoice),
    Matrix(MatrixSpec),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "kebab-case")]
pub enum CohomologyTask {
    Cyclic {
        order: u64,
        sigma: MatrixSpec,
    },
    Involution {
        n: usize,
        #[serde(default = "default_p")]
        p: u64,
        #[serde(default = "default_j")]
        j: JSpec,
    },
}

fn default_j() -> JSpec {
    JSpec::Named(JChoice::Antidiagonal)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SelmerPayload {
    #[serde(default)]
    pub h0_global: u64,
    #[serde(default)]
    pub h0_global_dual: u64,
    /// Per-place `h^0`; defaults to each place's `h0_local`.
    #[serde(default)]
    pub h0_locals: Option<Vec<u64>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LedgerTask {
    pub setting: DeformationSetting,
    #[serde(default)]
    pub selmer: Option<SelmerPayload>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DensityTask {
    pub gamma: String,
    #[serde(default = "trivial")]
    pub subgroup: String,
    pub k: u32,
}

fn trivial() -> String {
    "trivial".into()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "kebab-case")]
pub enum TaylorTask {
    Threshold {
        q: u64,
        n: u32,
        #[serde(default)]
        ell: Option<u64>,
    },
    CheckType {
        matrix: MatrixSpec,
    },
    Qpower {
        matrix: MatrixSpec,
        phi: MatrixSpec,
        q: u64,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "kebab-case")]
pub enum Payload {
    Partition(PartitionTask),
    Cohomology(CohomologyTask),
    Ledger(LedgerTask),
    Density(DensityTask),
    Taylor(TaylorTask),
    GnAudit(GnAuditInput),
}

impl Payload {
    pub fn mode(&self) -> &'static str {
        match self {
            Payload::Partition(_) => "partition",
            Payload::Cohomology(_) => "cohomology",
            Payload::Ledger(_) => "ledger",
            Payload::Density(_) => "density",
            Payload::Taylor(_) => "taylor",
            Payload::GnAudit(_) => "gn-audit",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Scenario {
    pub name: String,
    #[serde(flatten)]
    pub payload: Payload,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub scenario: String,
    pub mode: String,
    pub passed: bool,
    pub exit_code: i32,
    pub verdicts: Value,
    pub checks: Vec<Check>,
    /// One line per failed check naming the violated identity, plus input errors.
    pub diagnostics: Vec<String>,
    pub version: String,
    pub elapsed_ms: u64,
}

impl Report {
    fn invalid(scenario: &str, mode: &str, err: &Error) -> Self {
        Self {
            scenario: scenario.into(),
            mode: mode.into(),
            passed: false,
            exit_code: 2,
            verdicts: Value::Null,
            checks: Vec::new(),
            diagnostics: vec![format!("invalid input: {err}")],
            version: VERSION.into(),
            elapsed_ms: 0,
        }
    }
}

/// Combined exit code of several reports: the worst one.
pub fn batch_exit_code(reports: &[Report]) -> i32 {
    reports.iter().map(|r| r.exit_code).max().unwrap_or(0)
}

/// Evaluates one scenario. Errors from validation become exit-code-2 reports.
pub fn run_scenario(scenario: &Scenario) -> Report {
    let start = Instant::now();
    let mode = scenario.payload.mode();
    let mut report = match evaluate(&scenario.payload) {
        Ok((verdicts, checks)) => {
            let diagnostics: Vec<String> = checks
                .iter()
                .filter(|c| !c.passed)
                .map(|c| format!("{} failed: {} ({})", c.name, c.identity, c.detail))
                .collect();
            let passed = diagnostics.is_empty();
            Report {
                scenario: scenario.name.clone(),
                mode: mode.into(),
                passed,
                exit_code: if passed { 0 } else { 1 },
                verdicts,
                checks,
                diagnostics,
                version: VERSION.into(),
                elapsed_ms: 0,
            }
        }
        Err(e) => Report::invalid(&scenario.name, mode, &e),
    };
    report.elapsed_ms = start.elapsed().as_millis() as u64;
    report
}

/// Parses a file body holding a scenario or an array of scenarios.
///
/// Array entries that fail to parse become exit-code-2 reports in place, so
/// one bad entry does not hide the others.
pub fn parse_scenarios(text: &str) -> Result<Vec<std::result::Result<Scenario, (String, Error)>>> {
    let value: Value =
        serde_json::from_str(text).map_err(|e| Error::InvalidInput(format!("not JSON: {e}")))?;
    let items = match value {
        Value::Array(items) => items,
        single => vec![single],
    };
    Ok(items
        .into_iter()
        .enumerate()
        .map(|(i, item)| {
            let name = item
                .get("name")
                .and_then(Value::as_str)
                .map_or_else(|| format!("#{i}"), str::to_string);
            serde_json::from_value::<Scenario>(item)
                .map_err(|e| (name, Error::InvalidInput(format!("schema violation: {e}"))))
        })
        .collect())
}

/// Evaluates parsed scenarios in parallel, keeping input order. The pool
/// size comes from `DEFRING_AUDIT_THREADS` when set.
pub fn run_batch(items: &[std::result::Result<Scenario, (String, Error)>]) -> Result<Vec<Report>> {
    use rayon::prelude::*;
    let threads = match std::env::var(THREADS_ENV) {
        Ok(v) => v
            .trim()
            .parse::<usize>()
            .ok()
            .filter(|&n| n >= 1)
            .ok_or_else(|| {
                Error::InvalidInput(format!(
                    "{THREADS_ENV} must be a positive integer, got {v:?}"
                ))
            })?,
        Err(_) => 0,
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| Error::Internal(format!("thread pool: {e}")))?;
    Ok(pool.install(|| {
        items
            .par_iter()
            .map(|item| match item {
                Ok(s) => run_scenario(s),
                Err((name, e)) => Report::invalid(name, "unknown", e),
            })
            .collect()
    }))
}

/// Reads and runs a scenario file.
pub fn run_file(path: &std::path::Path) -> Result<Vec<Report>> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidInput(format!("cannot read {}: {e}", path.display())))?;
    run_batch(&parse_scenarios(&text)?)
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("report types serialize")
}

fn evaluate(payload: &Payload) -> Result<(Value, Vec<Check>)> {
    match payload {
        Payload::Partition(t) => partition(t),
        Payload::Cohomology(t) => cohomology(t),
        Payload::Ledger(t) => ledger(t),
        Payload::Density(t) => density(t),
        Payload::Taylor(t) => taylor(t),
        Payload::GnAudit(input) => {
            let audit = gn_audit(input)?;
            let verdicts = json!({
                "gamma": audit.framework.gamma,
                "gamma_closed_form": audit.framework.gamma_closed_form,
                "r0": audit.framework.r0,
                "r0_expected": audit.r0_expected,
                "gen_I": audit.framework.gen_i,
                "gen_bound": audit.framework.gen_bound,
                "margin": audit.framework.margin,
                "smooth": audit.framework.smooth,
                "unframed_dim": audit.framework.unframed_dim,
                "arch_h0": audit.arch_h0,
                "places": to_value(&audit.framework.places),
                "dual_selmer": {
                    "vanishes": audit.dual_selmer.vanishes,
                    "dual_dim": audit.dual_selmer.dual_dim,
                    "tangent_dim": audit.dual_selmer.tangent_dim,
                    "gw_diff": audit.dual_selmer.gw_diff,
                },
            });
            Ok((verdicts, audit.checks))
        }
    }
}

fn partition(task: &PartitionTask) -> Result<(Value, Vec<Check>)> {
    match task {
        PartitionTask::VerifyLemma { n, p } => {
            let field = FiniteField::prime(*p)?;
            let r = verify_conjugation_lemma_over(*n, &field)?;
            let check = Check::new(
                "conjugation-lemma",
                "kernel sequence of I + diag(B_lambda) = conjugate(lambda)",
                r.passed(),
                format!("{} partitions, {} failures", r.checked, r.failures.len()),
            );
            Ok((to_value(&r), vec![check]))
        }
        PartitionTask::Conjugate { partition } => {
            let c = partition.conjugate();
            let check = Check::new(
                "involution",
                "conjugate(conjugate(lambda)) = lambda",
                c.conjugate() == *partition,
                format!("{partition} -> {c}"),
            );
            Ok((
                json!({ "partition": partition, "conjugate": c }),
                vec![check],
            ))
        }
        PartitionTask::Theta { partition, p } => {
            let field = FiniteField::prime(*p)?;
            let t = theta(partition, &field);
            let c = partition.conjugate();
            let check = Check::new(
                "conjugation-lemma",
                "kernel sequence of I + diag(B_lambda) = conjugate(lambda)",
                t == c,
                format!("theta = {t}, conjugate = {c}"),
            );
            Ok((
                json!({ "partition": partition, "theta": t, "conjugate": c }),
                vec![check],
            ))
        }
    }
}

fn cohomology(task: &CohomologyTask) -> Result<(Value, Vec<Check>)> {
    match task {
        CohomologyTask::Cyclic { order, sigma } => {
            let action = CyclicAction::new(*order, sigma.build()?)?;
            let dims = action.cohomology_dims()?;
            let mut checks = Vec::new();
            let mut verdicts = json!({ "order": order, "dim": action.dim(), "h0": dims.h0, "h1": dims.h1, "h2": dims.h2, "z1": dims.z1 });
            let p = action.field().characteristic();
            if order % p != 0 {
                checks.push(Check::new(
                    "coprime-vanishing",
                    "H^1 = H^2 = 0 when the characteristic does not divide the order",
                    dims.h1 == 0 && dims.h2 == 0,
                    format!("h1 = {}, h2 = {}", dims.h1, dims.h2),
                ));
            }
            if *order == 2 && p != 2 {
                let minus = action.eigenspace_dim(-1);
                verdicts["minus_eigenspace"] = json!(minus);
                checks.push(Check::new(
                    "arch-lift",
                    "H^2 = 0 and dim Z^1 = dim of the (-1)-eigenspace",
                    dims.h2 == 0 && dims.z1 == minus,
                    format!(
                        "h2 = {}, z1 = {}, (-1)-eigenspace {minus}",
                        dims.h2, dims.z1
                    ),
                ));
            }
            Ok((verdicts, checks))
        }
        CohomologyTask::Involution { n, p, j } => {
            let field = FiniteField::prime(*p)?;
            let spec = match j {
                JSpec::Named(JChoice::Antidiagonal) => InvolutionSpec::antidiagonal(&field, *n)?,
                JSpec::Named(JChoice::Symplectic) => InvolutionSpec::symplectic(&field, *n)?,
                JSpec::Matrix(m) => {
                    let m = m.build()?;
                    if m.field() != &field || m.rows() != *n {
                        return Err(Error::InvalidInput(format!("J must be {n}x{n} over F_{p}")));
                    }
                    InvolutionSpec::new(m)?
                }
            };
            let action = twisted_involution_action(&spec)?;
            let minus = action.eigenspace_dim(-1);
            let plus = action.eigenspace_dim(1);
            let jm = spec.j();
            let jt = jm.transpose();
            let mut checks = vec![Check::new(
                "eigenspace-split",
                "dim(+1) + dim(-1) = n^2",
                plus + minus == n * n,
                format!("{plus} + {minus}"),
            )];
            if jt == *jm {
                checks.push(Check::new(
                    "symmetric-J",
                    "dim gl_n^{c = -1} = n(n+1)/2 for symmetric J",
                    minus == n * (n + 1) / 2,
                    format!("(-1)-eigenspace {minus}"),
                ));
            } else if jt == jm.neg() {
                checks.push(Check::new(
                    "antisymmetric-J",
                    "dim gl_n^{c = -1} = n(n-1)/2 for antisymmetric J",
                    minus == n * (n - 1) / 2,
                    format!("(-1)-eigenspace {minus}"),
                ));
            }
            let verdicts = json!({ "n": n, "p": p, "plus_eigenspace": plus, "minus_eigenspace": minus, "arch_lift_dim": action.arch_lift_dim()? });
            Ok((verdicts, checks))
        }
    }
}

fn ledger(task: &LedgerTask) -> Result<(Value, Vec<Check>)> {
    let setting = &task.setting;
    setting.validate()?;
    let g = gamma_report(setting)?;
    let v = framework_check(setting)?;
    let mut checks = Vec::new();
    if setting.degrees_complete {
        checks.push(Check::new(
            "gamma",
            "per-place gamma = #S_l dim g + [F:Q] dim b^der - dim g^ab - sum delta",
            g.per_place == g.closed_form,
            format!("{} vs {}", g.per_place, g.closed_form),
        ));
        if setting.delta_sum() == 0 {
            checks.push(Check::new(
                "crys-equality",
                "gen(I) = gamma - r0 when all delta vanish",
                v.margin == 0,
                format!("margin {}", v.margin),
            ));
        }
    }
    checks.push(Check::new(
        "smooth",
        "gen(I) <= gamma - r0",
        v.smooth,
        format!("gen_I = {}, gamma - r0 = {}", v.gen_i, v.gen_bound),
    ));
    let mut verdicts = json!({
        "gamma": v.gamma,
        "gamma_closed_form": v.gamma_closed_form,
        "r0": v.r0,
        "gen_I": v.gen_i,
        "gen_bound": v.gen_bound,
        "margin": v.margin,
        "smooth": v.smooth,
        "unframed_dim": v.unframed_dim,
        "places": to_value(&v.places),
        "notes": v.notes,
    });
    if let Some(sel) = &task.selmer {
        let h0s = sel.h0_locals.clone().unwrap_or_else(|| {
            setting
                .places
                .iter()
                .map(|p| p.h0_local.unwrap_or(0))
                .collect()
        });
        let d = dual_selmer_verdict(setting, sel.h0_global, sel.h0_global_dual, &h0s)?;
        checks.push(Check::new(
            "dual-selmer",
            "dim H^1_{L-perp} = [F:Q] dim b^der - (Greenberg-Wiles difference) = 0",
            d.vanishes,
            format!("dual dimension {}", d.dual_dim),
        ));
        verdicts["dual_selmer"] = json!({
            "vanishes": d.vanishes,
            "dual_dim": d.dual_dim,
            "tangent_dim": d.tangent_dim,
            "gw_diff": d.gw_diff,
        });
    }
    Ok((verdicts, checks))
}

fn density(task: &DensityTask) -> Result<(Value, Vec<Check>)> {
    let problem = SplitDensityProblem::parse(&task.gamma, &task.subgroup, task.k)?;
    let c = problem.bound_certificate();
    let checks = vec![
        Check::new(
            "density-bound",
            "|Xi| / |G| >= 1 - 1/2^k",
            c.density >= c.bound,
            format!("{} vs {}", c.density, c.bound),
        ),
        Check::new(
            "witnesses",
            "every (gamma, omega, delta) with omega != 1 lies in Xi, and there are (2^k - 1) 2 |Gamma| of them",
            c.witnesses_in_xi && c.witness_count == c.expected_witness_count,
            format!("{} witnesses, expected {}", c.witness_count, c.expected_witness_count),
        ),
        Check::new(
            "conjugation-closed",
            "Xi is a union of conjugacy classes",
            c.conjugation_closed,
            String::new(),
        ),
    ];
    let verdicts = json!({
        "gamma": problem.gamma().name(),
        "subgroup_order": problem.h().iter().filter(|&&b| b).count(),
        "k": task.k,
        "group_order": c.group_order,
        "xi_size": c.xi_size,
        "density": c.density.to_string(),
        "bound": format!("1-1/2^{}", task.k),
        "bound_value": c.bound.to_string(),
        "witness_count": c.witness_count,
        "holds": c.holds,
    });
    Ok((verdicts, checks))
}

fn taylor(task: &TaylorTask) -> Result<(Value, Vec<Check>)> {
    match task {
        TaylorTask::Threshold { q, n, ell } => {
            let t = taylor_threshold(*q, *n)?;
            let mut verdicts = json!({ "q": q, "n": n, "threshold": t.to_string() });
            let mut checks = Vec::new();
            if let Some(ell) = ell {
                let coprime = threshold_coprime(*ell, *q, *n)?;
                verdicts["ell"] = json!(ell);
                verdicts["coprime"] = json!(coprime);
                if num_bigint::BigUint::from(*ell) >= t {
                    checks.push(Check::new(
                        "threshold-coprime",
                        "gcd(l, q^{n!} - 1) = 1 for primes l >= q^{n!}",
                        coprime,
                        String::new(),
                    ));
                }
            }
            Ok((verdicts, checks))
        }
        TaylorTask::CheckType { matrix } => {
            let x = matrix.build()?;
            let one = satisfies_one_condition(&x)?;
            let mut verdicts = json!({ "one_condition": one });
            let mut checks = vec![Check::new(
                "one-condition",
                "charpoly(X) = (T - 1)^n",
                one,
                String::new(),
            )];
            if one {
                let lambda = min_equals_type_partition(&x)?;
                let back = crate::partitions::kernel_sequence(&crate::partitions::nabla_matrix(
                    &lambda,
                    x.field(),
                ))?;
                let original = crate::partitions::kernel_sequence(&x)?;
                checks.push(Check::new(
                    "type-round-trip",
                    "kernel sequence of I + diag(B_lambda) equals that of X",
                    back == original,
                    format!("lambda = {lambda}"),
                ));
                verdicts["type_partition"] = json!(lambda);
            }
            Ok((verdicts, checks))
        }
        TaylorTask::Qpower { matrix, phi, q } => {
            let x = matrix.build()?;
            let phi = phi.build()?;
            let conj = qpower_conjugacy(&x, &phi, *q)?;
            let stable = eigenvalue_qpower_stable(&x, *q)?;
            let checks = vec![Check::new(
                "eigenvalue-orbit",
                "phi X phi^{-1} = X^q implies z -> z^q permutes the eigenvalues",
                !conj || stable,
                format!("conjugacy {conj}, stable {stable}"),
            )];
            Ok((
                json!({ "qpower_conjugacy": conj, "eigenvalue_qpower_stable": stable }),
                checks,
            ))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn run(text: &str) -> Vec<Report> {
        run_batch(&parse_scenarios(text).unwrap()).unwrap()
    }

    #[test]
    fn partition_lemma_scenario() {
        let r = run(r#"{"name": "lemma", "mode": "partition", "op": "verify-lemma", "n": 8}"#);
        assert_eq!(r[0].exit_code, 0);
        assert_eq!(r[0].verdicts["failures"], json!([]));
    }

    #[test]
    fn inconsistent_ledger_is_invalid() {
        let text = r#"{"name": "bad", "mode": "ledger", "setting": {
            "lie": {"dim_g": 5, "dim_g_der": 4, "dim_g_ab": 1, "dim_b_der": 3},
            "deg_F": 2,
            "places": [{"kind": "ell", "local_degree": 1, "condition": "sm"},
                       {"kind": "arch", "condition": "unrestricted"},
                       {"kind": "arch", "condition": "unrestricted"}]}}"#;
        assert_eq!(run(text)[0].exit_code, 2);
    }

    #[test]
    fn density_scenario() {
        let r =
            run(r#"{"name": "d", "mode": "density", "gamma": "S3", "subgroup": "(12)", "k": 1}"#);
        assert_eq!(r[0].exit_code, 0);
        assert_eq!(r[0].verdicts["holds"], json!(true));
    }

    #[test]
    fn batch_keeps_order_and_isolates_errors() {
        let text = r#"[
            {"name": "a", "mode": "gn-audit", "n": 2, "deg_F": 2, "s_count": 1, "ell_degrees": [1, 1]},
            {"name": "b", "mode": "nonsense"},
            {"name": "c", "mode": "taylor", "op": "threshold", "q": 2, "n": 3, "ell": 67}
        ]"#;
        let r = run(text);
        let names: Vec<_> = r.iter().map(|r| r.scenario.as_str()).collect();
        assert_eq!(names, ["a", "b", "c"]);
        assert_eq!(r.iter().map(|r| r.exit_code).collect::<Vec<_>>(), [0, 2, 0]);
        assert_eq!(r[0].verdicts["gamma"], json!(30));
        assert_eq!(batch_exit_code(&r), 2);
    }

    #[test]
    fn failed_check_names_identity() {
        let text = r#"{"name": "s", "mode": "ledger",
            "setting": {"lie": {"dim_g": 5, "dim_g_der": 4, "dim_g_ab": 1, "dim_b_der": 3}, "deg_F": 2,
              "places": [{"kind": "S", "condition": "min"},
                         {"kind": "ell", "local_degree": 1, "condition": "sm"},
                         {"kind": "ell", "local_degree": 1, "condition": "sm"},
                         {"kind": "arch", "condition": "unrestricted"},
                         {"kind": "arch", "condition": "unrestricted"}]},
            "selmer": {"h0_global_dual": 1, "h0_locals": [0, 0, 0, 1, 1]}}"#;
        let r = &run(text)[0];
        assert_eq!(r.exit_code, 1);
        assert!(r.diagnostics[0].contains("Greenberg-Wiles"));
    }

    #[test]
    fn packed_matrices() {
        let spec = MatrixSpec {
            p: 3,
            m: 2,
            rows: vec![vec![3, 0], vec![0, 3]],
        };
        let m = spec.build().unwrap();
        assert_eq!(m.field().order(), 9);
        assert_eq!(MatrixSpec::from_matrix(&m), spec);
        let bad = MatrixSpec {
            p: 3,
            m: 2,
            rows: vec![vec![9]],
        };
        assert!(bad.build().is_err());
    }

    #[test]
    fn reports_are_deterministic() {
        let text = r#"{"name": "c", "mode": "cohomology", "op": "involution", "n": 3, "p": 7}"#;
        let mut a = run(text).remove(0);
        let mut b = run(text).remove(0);
        a.elapsed_ms = 0;
        b.elapsed_ms = 0;
        assert_eq!(
            serde_json::to_string(&a).unwrap(),
            serde_json::to_string(&b).unwrap()
        );
        assert_eq!(a.verdicts["minus_eigenspace"], json!(6));
    }
}
