//! Property tests for the invariants of each module.

mod common;

use defring_audit::cohomology::CyclicAction;
use defring_audit::density::{FiniteGroup, SplitDensityProblem};
use defring_audit::ff::{eigenvalues_in_splitting_field, FiniteField, Matrix, Poly};
use defring_audit::ledger::{
    dual_selmer_verdict, expected_local_dim, framework_check, gamma_report, gn_dims,
    DeformationSetting, PlaceKind, PlaceSpec,
};
use defring_audit::partitions::{kernel_sequence, nabla_matrix, Partition};
use defring_audit::taylor::{
    eigenvalue_qpower_stable, qpower_conjugacy, satisfies_one_condition, taylor_threshold,
    threshold_coprime,
};
use num_rational::Ratio;
use proptest::prelude::*;

fn small_prime() -> impl Strategy<Value = u64> {
    prop::sample::select(vec![2u64, 3, 5, 7, 11, 13])
}

fn matrix(p: u64, rows: usize, cols: usize) -> impl Strategy<Value = Vec<Vec<i64>>> {
    prop::collection::vec(prop::collection::vec(0..p as i64, cols), rows)
}

fn prime_and_matrix(max: usize) -> impl Strategy<Value = (u64, Vec<Vec<i64>>)> {
    (small_prime(), 1..=max, 1..=max).prop_flat_map(|(p, r, c)| (Just(p), matrix(p, r, c)))
}

fn partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(1usize..=5, 1..=5).prop_map(|mut v| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(v).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn rank_equals_transpose_rank((p, rows) in prime_and_matrix(6)) {
        let f = FiniteField::prime(p).unwrap();
        let m = Matrix::from_ints(&f, &rows).unwrap();
        prop_assert_eq!(m.rank(), m.transpose().rank());
        prop_assert_eq!(m.rank() + m.kernel_dim(), m.cols());
        let raw: common::Mat = m.row_ints();
        prop_assert_eq!(m.rank(), common::rank(&raw, p));
    }

    #[test]
    fn kernel_basis_is_in_kernel((p, rows) in prime_and_matrix(5)) {
        let f = FiniteField::prime(p).unwrap();
        let m = Matrix::from_ints(&f, &rows).unwrap();
        let basis = m.kernel_basis();
        prop_assert_eq!(basis.len(), m.kernel_dim());
        for v in basis {
            let col = Matrix::from_entries(&f, v.len(), 1, v).unwrap();
            prop_assert!(m.mul(&col).unwrap().is_zero());
        }
    }

    #[test]
    fn nilpotent_power_kernels(p in small_prime(), m in 1usize..=8, i in 1u64..=10) {
        let f = FiniteField::prime(p).unwrap();
        let b = Matrix::nilpotent_block(&f, m).pow(i).unwrap();
        prop_assert_eq!(b.kernel_dim(), (i as usize).min(m));
    }

    #[test]
    fn inverse_and_determinant((p, n, rows) in small_prime().prop_flat_map(|p| (1usize..=5).prop_flat_map(move |n| (Just(p), Just(n), matrix(p, n, n))))) {
        let f = FiniteField::prime(p).unwrap();
        let m = Matrix::from_ints(&f, &rows).unwrap();
        let det = m.determinant().unwrap();
        match m.inverse() {
            Ok(inv) => {
                prop_assert!(!f.is_zero(det));
                prop_assert_eq!(m.mul(&inv).unwrap(), Matrix::identity(&f, n));
            }
            Err(_) => prop_assert!(f.is_zero(det)),
        }
        // Cayley-Hamilton: chi(M) = 0.
        let chi = m.charpoly().unwrap();
        let mut acc = Matrix::zeros(&f, n, n);
        for &c in chi.coeffs().iter().rev() {
            acc = acc.mul(&m).unwrap().add(&Matrix::scalar(&f, n, c)).unwrap();
        }
        prop_assert!(acc.is_zero());
    }

    #[test]
    fn eigenvalues_multiply_out_to_charpoly((p, n, rows) in prop::sample::select(vec![2u64, 3]).prop_flat_map(|p| (1usize..=4).prop_flat_map(move |n| (Just(p), Just(n), matrix(p, n, n))))) {
        let f = FiniteField::prime(p).unwrap();
        let m = Matrix::from_ints(&f, &rows).unwrap();
        let ev = eigenvalues_in_splitting_field(&m).unwrap();
        prop_assert_eq!(ev.values.len(), n);
        let big = ev.field();
        let prod = ev.values.iter().fold(Poly::one(big), |acc, &z| acc.mul(&Poly::linear(big, z)));
        prop_assert_eq!(prod, ev.embedding.map_poly(&m.charpoly().unwrap()));
    }

    #[test]
    fn conjugation_is_an_involution(lambda in partition()) {
        prop_assert_eq!(lambda.conjugate().conjugate(), lambda.clone());
        prop_assert_eq!(lambda.conjugate().size(), lambda.size());
        prop_assert_eq!(lambda.conjugate().parts().to_vec(), common::conjugate_by_cells(lambda.parts()));
    }

    #[test]
    fn theta_is_conjugation(lambda in partition(), p in small_prime()) {
        let f = FiniteField::prime(p).unwrap();
        prop_assert_eq!(kernel_sequence(&nabla_matrix(&lambda, &f)).unwrap(), lambda.conjugate());
    }

    #[test]
    fn coprime_order_kills_higher_cohomology(p in prop::sample::select(vec![5u64, 7]), d in 1usize..=4, perm_seed in any::<u64>()) {
        // A permutation matrix of order 2 or 3, both coprime to 5 and 7.
        let f = FiniteField::prime(p).unwrap();
        let order = if perm_seed % 2 == 0 { 2 } else { 3 };
        let sigma = Matrix::from_fn(&f, d, d, |i, j| {
            let image = if order == 2 && d >= 2 && i < 2 { 1 - i } else if order == 3 && d >= 3 && i < 3 { (i + 1) % 3 } else { i };
            if j == image { f.one() } else { f.zero() }
        });
        let dims = CyclicAction::new(order, sigma).unwrap().cohomology_dims().unwrap();
        prop_assert_eq!((dims.h1, dims.h2), (0, 0));
    }

    #[test]
    fn gamma_forms_agree(n in 1u64..=4, deg_f in 1u64..=3, s in 0u64..=4, split in any::<bool>()) {
        let ell = if split && deg_f > 1 { vec![1, deg_f - 1] } else { vec![deg_f] };
        let mut places: Vec<PlaceSpec> = (0..s).map(|_| PlaceSpec::min()).collect();
        places.extend(ell.iter().map(|&d| PlaceSpec::sm(d, 0)));
        places.extend((0..deg_f).map(|_| PlaceSpec::arch()));
        let setting = DeformationSetting::new(gn_dims(n), deg_f, places).unwrap();
        let g = gamma_report(&setting).unwrap();
        prop_assert_eq!(g.per_place, g.closed_form);
        let v = framework_check(&setting).unwrap();
        prop_assert_eq!(v.margin, 0);
        prop_assert!(v.smooth);

        // Part 2: zero global h0 and Taylor-Wiles-consistent arch h0 force vanishing.
        let h0s: Vec<u64> = setting.places.iter().map(|p| if p.kind == PlaceKind::Arch { n * (n - 1) / 2 } else { 0 }).collect();
        let d = dual_selmer_verdict(&setting, 0, 0, &h0s).unwrap();
        prop_assert!(d.vanishes);
    }

    #[test]
    fn margin_is_delta_independent(d1 in 0u64..=3, d2 in 0u64..=3) {
        let places = vec![PlaceSpec::min(), PlaceSpec::sm(1, d1), PlaceSpec::sm(1, d2), PlaceSpec::arch(), PlaceSpec::arch()];
        let v = framework_check(&DeformationSetting::new(gn_dims(2), 2, places).unwrap()).unwrap();
        prop_assert_eq!(v.gamma, 30 - (d1 + d2) as i64);
        prop_assert_eq!(v.margin, 0);
    }

    #[test]
    fn crys_minus_min(n in 1u64..=6, d in 1u64..=4) {
        let lie = gn_dims(n);
        let crys = expected_local_dim(&lie, &PlaceSpec::crys(d)).unwrap();
        let min = expected_local_dim(&lie, &PlaceSpec::min()).unwrap();
        prop_assert_eq!(crys - min, d * n * (n - 1) / 2);
    }

    #[test]
    fn thresholds_are_coprime_above(q in 2u64..=5, n in 1u32..=3, offset in 0u64..=1000) {
        let t: u64 = taylor_threshold(q, n).unwrap().try_into().unwrap();
        let ell = t + offset;
        prop_assume!(common::is_prime(ell));
        prop_assert!(threshold_coprime(ell, q, n).unwrap());
    }

    #[test]
    fn one_condition_iff_unipotent(entries in prop::collection::vec(0i64..3, 4)) {
        let f = FiniteField::prime(3).unwrap();
        let m = Matrix::from_ints(&f, &[entries[..2].to_vec(), entries[2..].to_vec()]).unwrap();
        prop_assert_eq!(satisfies_one_condition(&m).unwrap(), m.is_unipotent().unwrap());
    }
}

#[test]
fn qpower_conjugacy_implies_stability() {
    // All diagonalizable 2x2 over F_7 (taken diagonal up to conjugacy, nonzero
    // eigenvalues) against both permutation matrices, q = 2.
    let f = FiniteField::prime(7).unwrap();
    let perms = [
        Matrix::identity(&f, 2),
        Matrix::from_ints(&f, &[vec![0, 1], vec![1, 0]]).unwrap(),
    ];
    for a in 1..7 {
        for b in 1..7 {
            let x = Matrix::from_ints(&f, &[vec![a, 0], vec![0, b]]).unwrap();
            for phi in &perms {
                if qpower_conjugacy(&x, phi, 2).unwrap() {
                    assert!(eigenvalue_qpower_stable(&x, 2).unwrap(), "diag({a},{b})");
                }
            }
        }
    }
}

#[test]
fn density_invariants_over_small_groups() {
    let groups = [
        FiniteGroup::trivial(),
        FiniteGroup::cyclic(2).unwrap(),
        FiniteGroup::cyclic(3).unwrap(),
        FiniteGroup::symmetric(3).unwrap(),
    ];
    for gamma in &groups {
        let abelian = gamma.is_abelian();
        for h in gamma.all_subgroups() {
            for k in 1..=2 {
                let p = SplitDensityProblem::new(gamma.clone(), h.clone(), k).unwrap();
                let g = p.group();
                for x in 0..g.order() {
                    let e = p.e_exponent(x);
                    assert_eq!(g.order() % e, 0);
                    let t = p.split(g.pow(x, e));
                    assert!(h[t.gamma] && t.omega == 0);
                }
                if abelian {
                    assert_eq!(p.xi(), p.xi_star());
                }
                assert!(p.density() >= Ratio::new((1 << k) - 1, 1 << k));
            }
        }
    }
}
