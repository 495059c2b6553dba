//! Scalar and dense polynomial arithmetic over a prime field `F_p`.
//!
//! Polynomials are coefficient vectors, lowest degree first, with no trailing
//! zeros; the zero polynomial is the empty vector.

pub fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 + b as u128) % p as u128) as u64
}

pub fn neg_mod(a: u64, p: u64) -> u64 {
    if a == 0 {
        0
    } else {
        p - a
    }
}

pub fn sub_mod(a: u64, b: u64, p: u64) -> u64 {
    add_mod(a, neg_mod(b, p), p)
}

pub fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub fn pow_mod(mut base: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        e >>= 1;
    }
    acc
}

pub fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

pub fn reduce_signed(n: i64, p: u64) -> u64 {
    (n as i128).rem_euclid(p as i128) as u64
}

pub fn trim(mut f: Vec<u64>) -> Vec<u64> {
    while f.last() == Some(&0) {
        f.pop();
    }
    f
}

pub fn poly_mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = add_mod(out[i + j], mul_mod(x, y, p), p);
        }
    }
    trim(out)
}

pub fn poly_sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| {
            sub_mod(
                a.get(i).copied().unwrap_or(0),
                b.get(i).copied().unwrap_or(0),
                p,
            )
        })
        .collect();
    trim(out)
}

/// Remainder of `a` modulo a nonzero `b`.
pub fn poly_rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let b = trim(b.to_vec());
    assert!(!b.is_empty(), "division by the zero polynomial");
    let mut r = trim(a.to_vec());
    let lead_inv = inv_mod(*b.last().unwrap(), p);
    let db = b.len() - 1;
    while r.len() > db {
        let shift = r.len() - 1 - db;
        let c = mul_mod(*r.last().unwrap(), lead_inv, p);
        for (i, &bi) in b.iter().enumerate() {
            r[shift + i] = sub_mod(r[shift + i], mul_mod(c, bi, p), p);
        }
        r = trim(r);
    }
    r
}

pub fn poly_gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut x = trim(a.to_vec());
    let mut y = trim(b.to_vec());
    while !y.is_empty() {
        let r = poly_rem(&x, &y, p);
        x = y;
        y = r;
    }
    if let Some(&lead) = x.last() {
        let li = inv_mod(lead, p);
        x.iter_mut().for_each(|c| *c = mul_mod(*c, li, p));
    }
    x
}

fn poly_powmod(base: &[u64], mut e: u64, modulus: &[u64], p: u64) -> Vec<u64> {
    let mut acc = poly_rem(&[1], modulus, p);
    let mut b = poly_rem(base, modulus, p);
    while e > 0 {
        if e & 1 == 1 {
            acc = poly_rem(&poly_mul(&acc, &b, p), modulus, p);
        }
        b = poly_rem(&poly_mul(&b, &b, p), modulus, p);
        e >>= 1;
    }
    acc
}

/// Ben-Or irreducibility test: a monic `f` of degree `m` is irreducible iff
/// `gcd(T^{p^i} - T, f) = 1` for every `1 <= i <= m/2`.
pub fn is_irreducible(f: &[u64], p: u64) -> bool {
    let f = trim(f.to_vec());
    let m = f.len().saturating_sub(1);
    if m == 0 {
        return false;
    }
    if m == 1 {
        return true;
    }
    let t = vec![0, 1];
    let mut frob = poly_rem(&t, &f, p);
    for _ in 1..=m / 2 {
        frob = poly_powmod(&frob, p, &f, p);
        let g = poly_gcd(&poly_sub(&frob, &t, p), &f, p);
        if g.len() != 1 {
            return false;
        }
    }
    true
}
