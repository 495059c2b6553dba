use std::fmt;
use std::sync::Arc;

use super::fp;
use crate::error::{Error, Result};

/// Largest field order we are willing to pack into a machine word.
const MAX_ORDER: u128 = 1 << 62;

/// The finite field `F_{p^m}`, realised as `F_p[T] / (f)` for the
/// lexicographically smallest monic irreducible `f` of degree `m`.
///
/// Cloning is cheap; the descriptor is shared.
#[derive(Clone)]
pub struct FiniteField {
    inner: Arc<Inner>,
}

struct Inner {
    p: u64,
    m: u32,
    /// Monic, lowest degree first, length `m + 1`.
    modulus: Vec<u64>,
    order: u64,
}

/// An element of some [`FiniteField`], packed as `sum c_i p^i` where `c_i` is
/// the coefficient of `T^i` in the polynomial representative.
///
/// Elements carry no reference to their field. Mixing elements of different
/// fields is a logic error that the field methods cannot detect.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct FieldElement(pub(crate) u64);

impl FieldElement {
    /// The packed integer representation.
    pub fn packed(self) -> u64 {
        self.0
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for small in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n.is_multiple_of(small) {
            return n == small;
        }
    }
    // Deterministic Miller-Rabin for all 64-bit inputs.
    let mut d = n - 1;
    let mut s = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = fp::pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = fp::mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

impl FiniteField {
    /// Builds `F_{p^m}` with the canonical modulus.
    pub fn new(p: u64, m: u32) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if m == 0 {
            return Err(Error::InvalidInput(
                "extension degree must be at least 1".into(),
            ));
        }
        let order = (p as u128)
            .checked_pow(m)
            .filter(|&o| o <= MAX_ORDER)
            .ok_or(Error::FieldTooLarge { p, m })?;
        if m > 1 && p >= 1 << 32 {
            return Err(Error::FieldTooLarge { p, m });
        }
        let modulus = smallest_irreducible(p, m as usize)
            .ok_or_else(|| Error::Internal(format!("no irreducible of degree {m} over F_{p}")))?;
        Ok(Self {
            inner: Arc::new(Inner {
                p,
                m,
                modulus,
                order: order as u64,
            }),
        })
    }

    /// Shorthand for the prime field `F_p`.
    pub fn prime(p: u64) -> Result<Self> {
        Self::new(p, 1)
    }

    pub fn characteristic(&self) -> u64 {
        self.inner.p
    }

    pub fn degree(&self) -> u32 {
        self.inner.m
    }

    /// Number of elements `p^m`.
    pub fn order(&self) -> u64 {
        self.inner.order
    }

    /// Coefficients of the defining modulus, lowest degree first.
    pub fn modulus(&self) -> &[u64] {
        &self.inner.modulus
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement(0)
    }

    pub fn one(&self) -> FieldElement {
        FieldElement(1)
    }

    /// The image of an integer under `Z -> F_p -> F_{p^m}`.
    pub fn from_int(&self, n: i64) -> FieldElement {
        FieldElement(fp::reduce_signed(n, self.inner.p))
    }

    /// Element with the given polynomial coefficients (lowest first).
    pub fn from_coeffs(&self, coeffs: &[u64]) -> Result<FieldElement> {
        if coeffs.len() > self.inner.m as usize {
            return Err(Error::InvalidInput(format!(
                "{} coefficients for a degree-{} field",
                coeffs.len(),
                self.inner.m
            )));
        }
        Ok(self.pack(coeffs.iter().map(|&c| c % self.inner.p)))
    }

    /// Element from its packed integer form; rejects out-of-range values.
    pub fn from_packed(&self, packed: u64) -> Result<FieldElement> {
        if packed >= self.inner.order {
            return Err(Error::InvalidInput(format!(
                "{packed} is not a packed element of a field of order {}",
                self.inner.order
            )));
        }
        Ok(FieldElement(packed))
    }

    pub fn coeffs(&self, a: FieldElement) -> Vec<u64> {
        let p = self.inner.p;
        let mut v = a.0;
        (0..self.inner.m)
            .map(|_| {
                let c = v % p;
                v /= p;
                c
            })
            .collect()
    }

    fn pack(&self, coeffs: impl DoubleEndedIterator<Item = u64>) -> FieldElement {
        let p = self.inner.p;
        FieldElement(coeffs.rev().fold(0u64, |acc, c| acc * p + c))
    }

    /// All elements in packed order; `0` first.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> {
        (0..self.inner.order).map(FieldElement)
    }

    pub fn is_prime_field(&self) -> bool {
        self.inner.m == 1
    }

    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let p = self.inner.p;
        if self.is_prime_field() {
            return FieldElement(fp::add_mod(a.0, b.0, p));
        }
        let (ca, cb) = (self.coeffs(a), self.coeffs(b));
        self.pack(ca.iter().zip(&cb).map(|(&x, &y)| fp::add_mod(x, y, p)))
    }

    pub fn neg(&self, a: FieldElement) -> FieldElement {
        let p = self.inner.p;
        if self.is_prime_field() {
            return FieldElement(fp::neg_mod(a.0, p));
        }
        self.pack(self.coeffs(a).into_iter().map(|x| fp::neg_mod(x, p)))
    }

    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        let p = self.inner.p;
        if self.is_prime_field() {
            return FieldElement(fp::mul_mod(a.0, b.0, p));
        }
        if a.0 == 0 || b.0 == 0 {
            return FieldElement(0);
        }
        let prod = fp::poly_mul(&self.coeffs(a), &self.coeffs(b), p);
        let mut r = fp::poly_rem(&prod, &self.inner.modulus, p);
        r.resize(self.inner.m as usize, 0);
        self.pack(r.into_iter())
    }

    pub fn pow(&self, a: FieldElement, mut e: u64) -> FieldElement {
        let mut base = a;
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        if a.0 == 0 {
            return Err(Error::Singular);
        }
        Ok(self.pow(a, self.inner.order - 2))
    }

    pub fn is_zero(&self, a: FieldElement) -> bool {
        a.0 == 0
    }

    /// Renders an element as an integer (prime fields) or a polynomial in `a`.
    pub fn display(&self, x: FieldElement) -> String {
        if self.is_prime_field() {
            return x.0.to_string();
        }
        let coeffs = self.coeffs(x);
        let terms: Vec<String> = coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| match (i, c) {
                (0, c) => c.to_string(),
                (1, 1) => "a".to_string(),
                (1, c) => format!("{c}a"),
                (i, 1) => format!("a^{i}"),
                (i, c) => format!("{c}a^{i}"),
            })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }
}

impl PartialEq for FiniteField {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
            || (self.inner.p == other.inner.p && self.inner.modulus == other.inner.modulus)
    }
}

impl Eq for FiniteField {}

impl fmt::Debug for FiniteField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for FiniteField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inner.m == 1 {
            write!(f, "F_{}", self.inner.p)
        } else {
            write!(f, "F_{}^{}", self.inner.p, self.inner.m)
        }
    }
}

/// Lexicographically smallest monic irreducible of degree `m` over `F_p`,
/// comparing `(c_0, c_1, ..., c_{m-1})` from the constant term upwards.
fn smallest_irreducible(p: u64, m: usize) -> Option<Vec<u64>> {
    if m == 1 {
        return Some(vec![0, 1]);
    }
    let mut tail = vec![0u64; m];
    loop {
        // c_0 = 0 gives a factor of T.
        if tail[0] != 0 {
            let mut f = tail.clone();
            f.push(1);
            if fp::is_irreducible(&f, p) {
                return Some(f);
            }
        }
        // Odometer with c_{m-1} as the fastest digit.
        let mut i = m;
        loop {
            if i == 0 {
                return None;
            }
            i -= 1;
            tail[i] += 1;
            if tail[i] < p {
                break;
            }
            tail[i] = 0;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_has_modulus_t() {
        let f = FiniteField::new(5, 1).unwrap();
        assert_eq!(f.modulus(), &[0, 1]);
        assert_eq!(f.order(), 5);
    }

    #[test]
    fn f4_modulus() {
        let f = FiniteField::new(2, 2).unwrap();
        assert_eq!(f.modulus(), &[1, 1, 1]);
    }

    #[test]
    fn f9_modulus_is_t2_plus_1() {
        let f = FiniteField::new(3, 2).unwrap();
        assert_eq!(f.modulus(), &[1, 0, 1]);
    }

    #[test]
    fn rejects_composite() {
        assert_eq!(FiniteField::new(4, 1).unwrap_err(), Error::NotPrime(4));
        assert_eq!(FiniteField::new(1, 1).unwrap_err(), Error::NotPrime(1));
    }

    #[test]
    fn modulus_matches_brute_force_factor_check() {
        // Exhaustive oracle: a monic polynomial of degree m is irreducible iff
        // no monic polynomial of degree 1..=m/2 divides it.
        for (p, m) in [(2u64, 3usize), (2, 4), (3, 3), (5, 2), (2, 6)] {
            let f = FiniteField::new(p, m as u32).unwrap();
            let expected = brute_smallest(p, m);
            assert_eq!(f.modulus(), expected.as_slice(), "F_{p}^{m}");
        }
    }

    fn brute_smallest(p: u64, m: usize) -> Vec<u64> {
        let monics = |d: usize| -> Vec<Vec<u64>> {
            (0..p.pow(d as u32))
                .map(|mut x| {
                    let mut v: Vec<u64> = (0..d)
                        .map(|_| {
                            let c = x % p;
                            x /= p;
                            c
                        })
                        .collect();
                    v.push(1);
                    v
                })
                .collect()
        };
        let mut cands = monics(m);
        cands.sort_by(|a, b| a[..m].cmp(&b[..m]));
        cands
            .into_iter()
            .find(|f| {
                (1..=m / 2).all(|d| monics(d).iter().all(|g| !fp::poly_rem(f, g, p).is_empty()))
            })
            .unwrap()
    }

    #[test]
    fn multiplicative_group_of_f8() {
        let f = FiniteField::new(2, 3).unwrap();
        for x in f.elements().skip(1) {
            assert_eq!(f.pow(x, 7), f.one());
            assert_eq!(f.mul(x, f.inv(x).unwrap()), f.one());
        }
    }

    #[test]
    fn primality() {
        let small: Vec<u64> = (0..40).filter(|&n| is_prime(n)).collect();
        assert_eq!(small, vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37]);
        assert!(is_prime(1_000_000_007));
        assert!(!is_prime(561));
    }
}
