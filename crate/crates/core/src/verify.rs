//! Self-audit: twelve exhaustive or seeded-random checks of the library's
//! identities, each timed against a fixed budget.

use std::time::{Duration, Instant};

use num_rational::Ratio;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::audit::{gn_audit, GnAuditInput};
use crate::cohomology::{twisted_involution_action, CyclicAction, InvolutionSpec};
use crate::density::{FiniteGroup, SplitDensityProblem};
use crate::error::Result;
use crate::ff::{is_prime, FieldElement, FiniteField, Matrix, Poly};
use crate::ledger::{framework_check, gamma_report, gn_dims, r0, DeformationSetting, PlaceSpec};
use crate::partitions::{nabla_matrix, theta, Partition, MAX_LEMMA_N};
use crate::taylor::{min_equals_type_partition, taylor_threshold, threshold_coprime};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriterionResult {
    pub id: u32,
    pub name: String,
    pub passed: bool,
    pub within_budget: bool,
    pub budget_ms: u64,
    pub elapsed_ms: u64,
    pub cases: u64,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub max_n: usize,
    pub seed: u64,
    pub passed: bool,
    pub criteria: Vec<CriterionResult>,
}

/// Outcome of one check: number of cases and the first failure, if any.
type Outcome = Result<(u64, Option<String>)>;

fn run(id: u32, name: &str, budget: Duration, f: impl FnOnce() -> Outcome) -> CriterionResult {
    let start = Instant::now();
    let outcome = f();
    let elapsed = start.elapsed();
    let (passed, cases, detail) = match outcome {
        Ok((cases, None)) => (true, cases, format!("{cases} cases")),
        Ok((cases, Some(why))) => (false, cases, why),
        Err(e) => (false, 0, format!("error: {e}")),
    };
    CriterionResult {
        id,
        name: name.into(),
        passed: passed && elapsed <= budget,
        within_budget: elapsed <= budget,
        budget_ms: budget.as_millis() as u64,
        elapsed_ms: elapsed.as_millis() as u64,
        cases,
        detail,
    }
}

/// Runs all twelve checks. `max_n` bounds the partition sizes (at most 12)
/// and `seed` drives the random samples.
pub fn verify_all(max_n: usize, seed: u64) -> VerifyReport {
    let max_n = max_n.clamp(1, MAX_LEMMA_N);
    let s = |secs: u64| Duration::from_secs(secs);
    let criteria = vec![
        run(1, "conjugation lemma", s(5), || conjugation_lemma(max_n)),
        run(2, "kernel of nilpotent powers", s(1), kernel_formula),
        run(3, "archimedean cohomology", s(2), || arch_cohomology(seed)),
        run(4, "twisted involution eigenspace", s(1), twisted_involution),
        run(5, "framework arithmetic", s(2), || {
            framework_arithmetic(seed)
        }),
        run(6, "worked G_2 audit", s(1), worked_gn_audit),
        run(7, "r0 identity", s(1), r0_identity),
        run(8, "density bound", s(30), density_bound),
        run(9, "density spot values", s(1), density_spot_values),
        run(
            10,
            "Taylor threshold coprimality",
            s(2),
            taylor_threshold_range,
        ),
        run(11, "charpoly against cofactor expansion", s(5), || {
            charpoly_oracle(seed)
        }),
        run(12, "type partition round trip", s(2), || round_trip(max_n)),
    ];
    VerifyReport {
        max_n,
        seed,
        passed: criteria.iter().all(|c| c.passed),
        criteria,
    }
}

fn conjugation_lemma(max_n: usize) -> Outcome {
    let mut cases = 0;
    for p in [2, 5, 101] {
        let field = FiniteField::prime(p)?;
        for n in 1..=max_n {
            for lambda in Partition::all(n) {
                cases += 1;
                let t = theta(&lambda, &field);
                if t != lambda.conjugate() {
                    return Ok((cases, Some(format!("theta{lambda:?} = {t:?} over F_{p}"))));
                }
            }
        }
    }
    Ok((cases, None))
}

fn kernel_formula() -> Outcome {
    let mut cases = 0;
    for p in [2, 3, 7] {
        let field = FiniteField::prime(p)?;
        for m in 1..=8 {
            let b = Matrix::nilpotent_block(&field, m);
            let mut power = Matrix::identity(&field, m);
            for i in 1..=10 {
                power = power.mul(&b)?;
                cases += 1;
                if power.kernel_dim() != i.min(m) {
                    return Ok((
                        cases,
                        Some(format!("dim ker B_{m}^{i} != {} over F_{p}", i.min(m))),
                    ));
                }
            }
        }
    }
    Ok((cases, None))
}

fn random_invertible(field: &FiniteField, d: usize, rng: &mut ChaCha8Rng) -> Matrix {
    loop {
        let m = Matrix::from_fn(field, d, d, |_, _| {
            field.from_int(rng.gen_range(0..field.order() as i64))
        });
        if m.rank() == d {
            return m;
        }
    }
}

fn arch_cohomology(seed: u64) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for case in 0..200u64 {
        let field = FiniteField::prime(if case % 2 == 0 { 5 } else { 7 })?;
        let d = rng.gen_range(1..=6);
        let signs: Vec<FieldElement> = (0..d)
            .map(|_| field.from_int(if rng.gen_bool(0.5) { 1 } else { -1 }))
            .collect();
        let p = random_invertible(&field, d, &mut rng);
        let sigma = p
            .mul(&Matrix::diagonal(&field, &signs))?
            .mul(&p.inverse()?)?;
        let action = CyclicAction::new(2, sigma)?;
        let dims = action.cohomology_dims()?;
        let minus = action.eigenspace_dim(-1);
        if dims.h2 != 0 || dims.z1 != minus {
            return Ok((
                case + 1,
                Some(format!(
                    "h2 = {}, z1 = {}, (-1)-eigenspace {minus}",
                    dims.h2, dims.z1
                )),
            ));
        }
    }
    Ok((200, None))
}

fn twisted_involution() -> Outcome {
    let mut cases = 0;
    for p in [5, 11] {
        let field = FiniteField::prime(p)?;
        for n in 1..=6 {
            cases += 1;
            let action = twisted_involution_action(&InvolutionSpec::antidiagonal(&field, n)?)?;
            let minus = action.eigenspace_dim(-1);
            if minus != n * (n + 1) / 2 {
                return Ok((
                    cases,
                    Some(format!("n = {n} over F_{p}: (-1)-eigenspace {minus}")),
                ));
            }
        }
    }
    Ok((cases, None))
}

/// A random degrees-complete setting with all `δ = 0` and at most 8 places.
pub fn random_complete_setting(rng: &mut impl Rng) -> DeformationSetting {
    let n = rng.gen_range(1..=4);
    let deg_f = rng.gen_range(1..=3u64);
    // Split deg_f into a random composition.
    let mut ell = Vec::new();
    let mut left = deg_f;
    while left > 0 {
        let d = rng.gen_range(1..=left);
        ell.push(d);
        left -= d;
    }
    let used = ell.len() + deg_f as usize;
    let s = rng.gen_range(0..=8 - used);
    let mut places: Vec<PlaceSpec> = (0..s).map(|_| PlaceSpec::min()).collect();
    places.extend(ell.iter().map(|&d| PlaceSpec::sm(d, 0)));
    places.extend((0..deg_f).map(|_| PlaceSpec::arch()));
    DeformationSetting::new(gn_dims(n), deg_f, places).expect("complete by construction")
}

fn framework_arithmetic(seed: u64) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x5e77);
    for case in 0..500u64 {
        let setting = random_complete_setting(&mut rng);
        let g = gamma_report(&setting)?;
        let v = framework_check(&setting)?;
        if g.per_place != g.closed_form || v.margin != 0 {
            return Ok((
                case + 1,
                Some(format!(
                    "gamma {} vs {}, margin {} for {setting:?}",
                    g.per_place, g.closed_form, v.margin
                )),
            ));
        }
    }
    Ok((500, None))
}

fn worked_gn_audit() -> Outcome {
    let a = gn_audit(&GnAuditInput {
        n: 2,
        deg_f: 2,
        s_count: 1,
        ell_degrees: vec![1, 1],
    })?;
    let f = &a.framework;
    let got = (
        f.gamma,
        f.r0,
        f.gen_i,
        f.smooth,
        f.unframed_dim,
        a.dual_selmer.vanishes,
    );
    if got == (30, 24, 6, true, 6, true) {
        Ok((1, None))
    } else {
        Ok((
            1,
            Some(format!(
                "(gamma, r0, gen_I, smooth, unframed, vanishes) = {got:?}"
            )),
        ))
    }
}

fn r0_identity() -> Outcome {
    let mut cases = 0;
    for n in 1..=6u64 {
        for k in 1..=10u64 {
            cases += 1;
            let expected = ((n * n + 1) * k) as i64 - 1;
            if r0(&gn_dims(n), k) != expected {
                return Ok((cases, Some(format!("r0(G_{n}, {k}) != {expected}"))));
            }
        }
    }
    Ok((cases, None))
}

fn density_bound() -> Outcome {
    let gammas = [
        FiniteGroup::trivial(),
        FiniteGroup::cyclic(2)?,
        FiniteGroup::cyclic(3)?,
        FiniteGroup::symmetric(3)?,
        FiniteGroup::symmetric(4)?,
    ];
    let mut cases = 0;
    for gamma in &gammas {
        for h in gamma.all_subgroups() {
            for k in 1..=3 {
                cases += 1;
                let c = SplitDensityProblem::new(gamma.clone(), h.clone(), k)?.bound_certificate();
                let expected = ((1usize << k) - 1) * 2 * gamma.order();
                if !c.holds || !c.conjugation_closed || c.witness_count != expected {
                    return Ok((cases, Some(format!("{gamma:?}, k = {k}: {c:?}"))));
                }
            }
        }
    }
    Ok((cases, None))
}

fn density_spot_values() -> Outcome {
    let a = SplitDensityProblem::parse("trivial", "trivial", 1)?.density();
    let b = SplitDensityProblem::parse("Z2", "trivial", 1)?.density();
    if a == Ratio::new(3, 4) && b == Ratio::new(7, 8) {
        Ok((2, None))
    } else {
        Ok((
            2,
            Some(format!("densities {a} and {b}, expected 3/4 and 7/8")),
        ))
    }
}

fn taylor_threshold_range() -> Outcome {
    let mut cases = 0;
    for q in [2u64, 3] {
        for n in [2u32, 3] {
            let t: u64 = taylor_threshold(q, n)?.try_into().expect("small threshold");
            for ell in (t..=t + 1000).filter(|&l| is_prime(l)) {
                cases += 1;
                if !threshold_coprime(ell, q, n)? {
                    return Ok((cases, Some(format!("{ell} divides {q}^{n}! - 1"))));
                }
            }
        }
    }
    Ok((cases, None))
}

/// `det(T I - M)` by Laplace expansion along the first row.
pub fn cofactor_charpoly(m: &Matrix) -> Poly {
    let field = m.field();
    let n = m.rows();
    let entry = |i: usize, j: usize| -> Vec<FieldElement> {
        let c = field.neg(m.get(i, j));
        if i == j {
            vec![c, field.one()]
        } else {
            vec![c]
        }
    };
    let rows: Vec<Vec<Vec<FieldElement>>> = (0..n)
        .map(|i| (0..n).map(|j| entry(i, j)).collect())
        .collect();
    Poly::new(field, det_poly(field, &rows))
}

fn poly_add(field: &FiniteField, a: &[FieldElement], b: &[FieldElement]) -> Vec<FieldElement> {
    (0..a.len().max(b.len()))
        .map(|i| {
            let x = a.get(i).copied().unwrap_or(field.zero());
            let y = b.get(i).copied().unwrap_or(field.zero());
            field.add(x, y)
        })
        .collect()
}

fn poly_mul(field: &FiniteField, a: &[FieldElement], b: &[FieldElement]) -> Vec<FieldElement> {
    let mut out = vec![field.zero(); a.len() + b.len()];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = field.add(out[i + j], field.mul(x, y));
        }
    }
    out
}

fn det_poly(field: &FiniteField, rows: &[Vec<Vec<FieldElement>>]) -> Vec<FieldElement> {
    let n = rows.len();
    if n == 0 {
        return vec![field.one()];
    }
    let mut acc = vec![field.zero()];
    for j in 0..n {
        let minor: Vec<Vec<Vec<FieldElement>>> = rows[1..]
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|&(c, _)| c != j)
                    .map(|(_, e)| e.clone())
                    .collect()
            })
            .collect();
        let mut term = poly_mul(field, &rows[0][j], &det_poly(field, &minor));
        if j % 2 == 1 {
            term = term.iter().map(|&c| field.neg(c)).collect();
        }
        acc = poly_add(field, &acc, &term);
    }
    acc
}

fn charpoly_oracle(seed: u64) -> Outcome {
    let f3 = FiniteField::prime(3)?;
    let mut cases = 0;
    for code in 0..81 {
        let m = Matrix::from_fn(&f3, 2, 2, |i, j| {
            f3.from_int((code / 3i64.pow((2 * i + j) as u32)) % 3)
        });
        cases += 1;
        if m.charpoly()? != cofactor_charpoly(&m) {
            return Ok((
                cases,
                Some(format!("2x2 over F_3 disagrees: {:?}", m.row_ints())),
            ));
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0xc4a7);
    let fields = [FiniteField::prime(2)?, FiniteField::prime(3)?];
    for _ in 0..1000 {
        let field = &fields[rng.gen_range(0..2)];
        let n = rng.gen_range(3..=5);
        let m = Matrix::from_fn(field, n, n, |_, _| {
            field.from_int(rng.gen_range(0..field.order() as i64))
        });
        cases += 1;
        if m.charpoly()? != cofactor_charpoly(&m) {
            return Ok((
                cases,
                Some(format!(
                    "{n}x{n} over {field} disagrees: {:?}",
                    m.row_ints()
                )),
            ));
        }
    }
    Ok((cases, None))
}

fn round_trip(max_n: usize) -> Outcome {
    let field = FiniteField::prime(5)?;
    let mut cases = 0;
    for n in 1..=max_n {
        for lambda in Partition::all(n) {
            cases += 1;
            let back = min_equals_type_partition(&nabla_matrix(&lambda, &field))?;
            if back != lambda {
                return Ok((cases, Some(format!("{lambda:?} came back as {back:?}"))));
            }
        }
    }
    Ok((cases, None))
}
