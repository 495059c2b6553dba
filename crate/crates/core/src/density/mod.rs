//! Frobenius splitting sets in `G = Γ × Ω × Δ`, `Ω = (Z/2)^k`, `Δ = Z/2`.
//!
//! For `g ∈ G` let `e_g` be the least `e >= 1` with `g^e ∈ H × 1 × Δ`.
//! `Ξ*` collects the `g` for which `g^{e_g}` has trivial `Δ` component, and
//! `Ξ` is the union of the conjugacy classes of `G` lying inside `Ξ*`.
//! Every element with `ω ≠ 1` belongs to `Ξ`, which gives
//! `|Ξ| / |G| >= 1 - 1/2^k`.

mod group;

pub use group::{FiniteGroup, GroupSpec, MAX_GROUP_ORDER};

use num_rational::Ratio;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Components of an element of `G`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Triple {
    pub gamma: usize,
    /// Bit mask in `(Z/2)^k`.
    pub omega: usize,
    pub delta: usize,
}

#[derive(Clone, Debug)]
pub struct SplitDensityProblem {
    gamma: FiniteGroup,
    h: Vec<bool>,
    k: u32,
    g: FiniteGroup,
}

impl SplitDensityProblem {
    /// `h` is a membership vector over the elements of `gamma`.
    pub fn new(gamma: FiniteGroup, h: Vec<bool>, k: u32) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidGroup("k must be at least 1".into()));
        }
        if !gamma.is_subgroup(&h) {
            return Err(Error::InvalidGroup(format!(
                "H is not a subgroup of {}",
                gamma.name()
            )));
        }
        let omega_delta = FiniteGroup::elementary_abelian_2(k + 1)?;
        let g = FiniteGroup::direct_product(&gamma, &omega_delta)?;
        Ok(Self { gamma, h, k, g })
    }

    /// Parses `gamma` (e.g. `S3`) and `subgroup` (e.g. `(12)`, `trivial`).
    pub fn parse(gamma: &str, subgroup: &str, k: u32) -> Result<Self> {
        let gamma = gamma.parse::<GroupSpec>()?.build()?;
        let h = gamma.parse_subgroup(subgroup)?;
        Self::new(gamma, h, k)
    }

    pub fn gamma(&self) -> &FiniteGroup {
        &self.gamma
    }

    pub fn h(&self) -> &[bool] {
        &self.h
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    /// The full group `G`; index `γ·2^{k+1} + 2ω + δ`.
    pub fn group(&self) -> &FiniteGroup {
        &self.g
    }

    pub fn split(&self, g: usize) -> Triple {
        let od = g % (1 << (self.k + 1));
        Triple {
            gamma: g >> (self.k + 1),
            omega: od >> 1,
            delta: od & 1,
        }
    }

    pub fn join(&self, t: Triple) -> usize {
        (t.gamma << (self.k + 1)) | (t.omega << 1) | t.delta
    }

    fn in_h1delta(&self, g: usize) -> bool {
        let t = self.split(g);
        self.h[t.gamma] && t.omega == 0
    }

    /// Least `e >= 1` with `g^e ∈ H × 1 × Δ`, together with `g^e`.
    pub fn e_exponent_with_power(&self, g: usize) -> (usize, usize) {
        let mut power = g;
        let mut e = 1;
        while !self.in_h1delta(power) {
            power = self.g.mul(power, g);
            e += 1;
        }
        (e, power)
    }

    pub fn e_exponent(&self, g: usize) -> usize {
        self.e_exponent_with_power(g).0
    }

    pub fn in_xi_star(&self, g: usize) -> bool {
        let (_, power) = self.e_exponent_with_power(g);
        self.split(power).delta == 0
    }

    /// Membership vector of `Ξ*`.
    pub fn xi_star(&self) -> Vec<bool> {
        (0..self.g.order())
            .into_par_iter()
            .map(|g| self.in_xi_star(g))
            .collect()
    }

    /// Membership vector of `Ξ`: elements whose whole conjugacy class lies in `Ξ*`.
    pub fn xi(&self) -> Vec<bool> {
        let star = self.xi_star();
        let n = self.g.order();
        let xi: Vec<bool> = (0..n)
            .into_par_iter()
            .map(|g| (0..n).all(|x| star[self.g.conjugate(g, x)]))
            .collect();
        debug_assert!(self.is_conjugation_closed(&xi));
        xi
    }

    pub fn is_conjugation_closed(&self, set: &[bool]) -> bool {
        let n = self.g.order();
        (0..n).all(|g| !set[g] || (0..n).all(|x| set[self.g.conjugate(g, x)]))
    }

    /// `|Ξ| / |G|` in lowest terms.
    pub fn density(&self) -> Ratio<u64> {
        let count = self.xi().iter().filter(|&&b| b).count();
        Ratio::new(count as u64, self.g.order() as u64)
    }

    /// `1 - 1/2^k`.
    pub fn bound(&self) -> Ratio<u64> {
        let d = 1u64 << self.k;
        Ratio::new(d - 1, d)
    }

    pub fn bound_certificate(&self) -> BoundCertificate {
        let xi = self.xi();
        let witnesses: Vec<usize> = (0..self.g.order())
            .filter(|&g| self.split(g).omega != 0)
            .collect();
        let witnesses_in_xi = witnesses.iter().all(|&g| xi[g]);
        let count = xi.iter().filter(|&&b| b).count();
        let density = Ratio::new(count as u64, self.g.order() as u64);
        let bound = self.bound();
        BoundCertificate {
            density,
            bound,
            witness_count: witnesses.len(),
            expected_witness_count: ((1usize << self.k) - 1) * 2 * self.gamma.order(),
            xi_size: count,
            group_order: self.g.order(),
            conjugation_closed: self.is_conjugation_closed(&xi),
            witnesses_in_xi,
            holds: density >= bound && witnesses_in_xi,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundCertificate {
    pub density: Ratio<u64>,
    pub bound: Ratio<u64>,
    pub witness_count: usize,
    /// `(2^k - 1) · 2 · |Γ|`.
    pub expected_witness_count: usize,
    pub xi_size: usize,
    pub group_order: usize,
    pub conjugation_closed: bool,
    pub witnesses_in_xi: bool,
    pub holds: bool,
}

#[cfg(test)]
mod tests {
    use super::*;

    fn problem(gamma: &str, h: &str, k: u32) -> SplitDensityProblem {
        SplitDensityProblem::parse(gamma, h, k).unwrap()
    }

    #[test]
    fn e_exponent_examples() {
        let p = problem("trivial", "trivial", 1);
        assert_eq!(p.e_exponent(p.group().identity()), 1);
        let w = p.join(Triple {
            gamma: 0,
            omega: 1,
            delta: 0,
        });
        assert_eq!(p.e_exponent(w), 2);
        let d = p.join(Triple {
            gamma: 0,
            omega: 0,
            delta: 1,
        });
        assert_eq!(p.e_exponent(d), 1);
    }

    #[test]
    fn xi_star_smallest_case() {
        let p = problem("trivial", "trivial", 1);
        let star = p.xi_star();
        assert_eq!(star.iter().filter(|&&b| b).count(), 3);
        assert!(
            !star[p.join(Triple {
                gamma: 0,
                omega: 0,
                delta: 1
            })]
        );
        assert!(star[p.group().identity()]);
        assert_eq!(p.xi(), star);
    }

    #[test]
    fn density_examples() {
        assert_eq!(problem("trivial", "trivial", 1).density(), Ratio::new(3, 4));
        let p = problem("Z2", "trivial", 1);
        assert_eq!(p.density(), Ratio::new(7, 8));
        let star = p.xi_star();
        let missing: Vec<Triple> = (0..8).filter(|&g| !star[g]).map(|g| p.split(g)).collect();
        assert_eq!(
            missing,
            vec![Triple {
                gamma: 0,
                omega: 0,
                delta: 1
            }]
        );
    }

    #[test]
    fn certificates() {
        let c = problem("trivial", "trivial", 1).bound_certificate();
        assert_eq!(
            (c.witness_count, c.density, c.holds),
            (2, Ratio::new(3, 4), true)
        );

        let s3 = FiniteGroup::symmetric(3).unwrap();
        for h in s3.all_subgroups() {
            let c = SplitDensityProblem::new(s3.clone(), h, 2)
                .unwrap()
                .bound_certificate();
            assert_eq!(c.witness_count, 36);
            assert!(c.holds && c.conjugation_closed);
        }

        let c = problem("trivial", "trivial", 3).bound_certificate();
        assert_eq!(c.bound, Ratio::new(7, 8));
        assert!(c.holds);
    }

    #[test]
    fn s3_with_transposition_subgroup() {
        let p = problem("S3", "(12)", 1);
        assert_eq!(p.group().order(), 24);
        let c = p.bound_certificate();
        assert!(c.conjugation_closed && c.holds);
        assert_eq!(c.witness_count, c.expected_witness_count);
    }

    #[test]
    fn non_subgroup_rejected() {
        let s3 = FiniteGroup::symmetric(3).unwrap();
        let mut h = vec![false; 6];
        h[s3.parse_element("(12)").unwrap()] = true;
        assert!(SplitDensityProblem::new(s3, h, 1).is_err());
        assert!(SplitDensityProblem::parse("S3", "trivial", 0).is_err());
    }
}
