//! Test-side oracles written without the library's elimination or
//! polynomial code: plain `Vec<Vec<u64>>` arithmetic mod a prime.
#![allow(dead_code)]

pub type Mat = Vec<Vec<u64>>;

pub fn identity(n: usize) -> Mat {
    (0..n)
        .map(|i| (0..n).map(|j| u64::from(i == j)).collect())
        .collect()
}

pub fn mat_mul(a: &Mat, b: &Mat, p: u64) -> Mat {
    let (n, k, m) = (a.len(), b.len(), b.first().map_or(0, Vec::len));
    (0..n)
        .map(|i| {
            (0..m)
                .map(|j| (0..k).map(|t| a[i][t] * b[t][j] % p).sum::<u64>() % p)
                .collect()
        })
        .collect()
}

pub fn mat_add_scalar(a: &Mat, c: i64, p: u64) -> Mat {
    let c = c.rem_euclid(p as i64) as u64;
    let mut out = a.clone();
    for (i, row) in out.iter_mut().enumerate() {
        row[i] = (row[i] + c) % p;
    }
    out
}

fn pow_mod(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

/// Rank by forward elimination.
pub fn rank(a: &Mat, p: u64) -> usize {
    let mut a = a.clone();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(piv) = (r..rows).find(|&i| !a[i][c].is_multiple_of(p)) else {
            continue;
        };
        a.swap(r, piv);
        let inv = pow_mod(a[r][c], p - 2, p);
        for i in r + 1..rows {
            let f = a[i][c] * inv % p;
            if f != 0 {
                let pivot_row = a[r].clone();
                for (x, y) in a[i][c..].iter_mut().zip(&pivot_row[c..]) {
                    *x = (*x + p * p - f * y % p) % p;
                }
            }
        }
        r += 1;
    }
    r
}

pub fn kernel_dim(a: &Mat, p: u64) -> usize {
    a.first().map_or(0, Vec::len) - rank(a, p)
}

/// Partition read off a Young diagram after transposing its cell set.
pub fn conjugate_by_cells(parts: &[usize]) -> Vec<usize> {
    let cells: Vec<(usize, usize)> = parts
        .iter()
        .enumerate()
        .flat_map(|(r, &l)| (0..l).map(move |c| (c, r)))
        .collect();
    let rows = cells.iter().map(|&(r, _)| r).max().map_or(0, |m| m + 1);
    (0..rows)
        .map(|r| cells.iter().filter(|&&(x, _)| x == r).count())
        .collect()
}

/// `I + diag(B_l)` with `B_l` the nilpotent block of ones on the superdiagonal.
pub fn unipotent_model(parts: &[usize]) -> Mat {
    let n: usize = parts.iter().sum();
    let mut m = identity(n);
    let mut start = 0;
    for &l in parts {
        for i in start..start + l - 1 {
            m[i][i + 1] = 1;
        }
        start += l;
    }
    m
}

/// `s_i = dim ker (M - I)^i - dim ker (M - I)^{i-1}` until the kernel is everything.
pub fn kernel_steps(m: &Mat, p: u64) -> Vec<usize> {
    let n = m.len();
    let nil = mat_add_scalar(m, -1, p);
    let mut power = identity(n);
    let mut prev = 0;
    let mut out = Vec::new();
    loop {
        power = mat_mul(&power, &nil, p);
        let k = kernel_dim(&power, p);
        out.push(k - prev);
        if k == n {
            return out;
        }
        prev = k;
    }
}

/// Partitions of `n` by recursion on the largest part.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, max: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for first in (1..=max.min(n)).rev() {
            for mut rest in go(n - first, first) {
                rest.insert(0, first);
                out.push(rest);
            }
        }
        out
    }
    go(n, n)
}

/// Polynomials mod p, lowest degree first.
fn padd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    (0..a.len().max(b.len()))
        .map(|i| (a.get(i).copied().unwrap_or(0) + b.get(i).copied().unwrap_or(0)) % p)
        .collect()
}

fn pmul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    out
}

fn pdet(m: &[Vec<Vec<u64>>], p: u64) -> Vec<u64> {
    if m.is_empty() {
        return vec![1];
    }
    let mut acc = vec![0];
    for j in 0..m.len() {
        let minor: Vec<Vec<Vec<u64>>> = m[1..]
            .iter()
            .map(|r| {
                r.iter()
                    .enumerate()
                    .filter(|&(c, _)| c != j)
                    .map(|(_, e)| e.clone())
                    .collect()
            })
            .collect();
        let mut t = pmul(&m[0][j], &pdet(&minor, p), p);
        if j % 2 == 1 {
            t = t.iter().map(|&c| (p - c) % p).collect();
        }
        acc = padd(&acc, &t, p);
    }
    acc
}

/// `det(T I - M)` by cofactor expansion, trailing zeros trimmed.
pub fn charpoly_cofactor(m: &Mat, p: u64) -> Vec<u64> {
    let n = m.len();
    let entries: Vec<Vec<Vec<u64>>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let c = (p - m[i][j] % p) % p;
                    if i == j {
                        vec![c, 1]
                    } else {
                        vec![c]
                    }
                })
                .collect()
        })
        .collect();
    let mut out = pdet(&entries, p);
    while out.len() > 1 && out.last() == Some(&0) {
        out.pop();
    }
    out
}

pub fn is_prime(n: u64) -> bool {
    n >= 2
        && (2..)
            .take_while(|d| d * d <= n)
            .all(|d| !n.is_multiple_of(d))
}

pub fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Permutations of `0..n` as image vectors; product `a * b` applies `b` first.
pub fn perm_mul(a: &[usize], b: &[usize]) -> Vec<usize> {
    b.iter().map(|&x| a[x]).collect()
}

pub fn perm_inv(a: &[usize]) -> Vec<usize> {
    let mut out = vec![0; a.len()];
    for (i, &x) in a.iter().enumerate() {
        out[x] = i;
    }
    out
}

/// Closure of a generating set under multiplication.
pub fn perm_closure(gens: &[Vec<usize>], n: usize) -> Vec<Vec<usize>> {
    let mut set: Vec<Vec<usize>> = vec![(0..n).collect()];
    let mut i = 0;
    while i < set.len() {
        for g in gens {
            let y = perm_mul(&set[i], g);
            if !set.contains(&y) {
                set.push(y);
            }
        }
        i += 1;
    }
    set.sort();
    set
}

/// All subgroups of a permutation group, as sorted element lists, found by
/// closing every pair of elements (enough for the groups used here, all of
/// whose subgroups are generated by two elements).
pub fn perm_subgroups(group: &[Vec<usize>], n: usize) -> Vec<Vec<Vec<usize>>> {
    let mut out: Vec<Vec<Vec<usize>>> = Vec::new();
    for a in group {
        for b in group {
            let h = perm_closure(&[a.clone(), b.clone()], n);
            if !out.contains(&h) {
                out.push(h);
            }
        }
    }
    out
}
