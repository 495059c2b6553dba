use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest group order we build a table for.
pub const MAX_GROUP_ORDER: usize = 5040;

/// A finite group given by its full multiplication table.
#[derive(Clone)]
pub struct FiniteGroup {
    name: String,
    order: usize,
    table: Vec<u32>,
    identity: usize,
    inverse: Vec<usize>,
    labels: Vec<String>,
    kind: Kind,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Kind {
    Symmetric(usize),
    Other,
}

/// Constructor recipes for the groups used in density problems.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupSpec {
    Trivial,
    Cyclic(usize),
    Symmetric(usize),
    ElementaryAbelian2(u32),
    DirectProduct(Box<GroupSpec>, Box<GroupSpec>),
}

impl GroupSpec {
    pub fn build(&self) -> Result<FiniteGroup> {
        match self {
            GroupSpec::Trivial => Ok(FiniteGroup::trivial()),
            GroupSpec::Cyclic(n) => FiniteGroup::cyclic(*n),
            GroupSpec::Symmetric(n) => FiniteGroup::symmetric(*n),
            GroupSpec::ElementaryAbelian2(k) => FiniteGroup::elementary_abelian_2(*k),
            GroupSpec::DirectProduct(a, b) => FiniteGroup::direct_product(&a.build()?, &b.build()?),
        }
    }
}

impl FromStr for GroupSpec {
    type Err = Error;

    /// Accepts `trivial`, `Zn`/`Cn`, `Sn`, `Z2^k`/`En`, and products joined by `x`,
    /// e.g. `S3xZ2^2`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let factors: Vec<&str> = s.split(['x', '×', '*']).map(str::trim).collect();
        if factors.len() > 1 {
            let mut it = factors.into_iter().map(Self::from_str);
            let first = it.next().expect("nonempty")?;
            return it.try_fold(first, |acc, f| {
                Ok(GroupSpec::DirectProduct(Box::new(acc), Box::new(f?)))
            });
        }
        let bad = || Error::InvalidGroup(format!("cannot parse group {s:?}"));
        let lower = s.to_ascii_lowercase();
        if lower == "trivial" || lower == "1" {
            return Ok(GroupSpec::Trivial);
        }
        if let Some(k) = lower
            .strip_prefix("z2^")
            .or_else(|| lower.strip_prefix("c2^"))
        {
            return Ok(GroupSpec::ElementaryAbelian2(k.parse().map_err(|_| bad())?));
        }
        let (head, num) = lower.split_at(1);
        let num: usize = num.trim_start_matches('/').parse().map_err(|_| bad())?;
        match head {
            "z" | "c" => Ok(GroupSpec::Cyclic(num)),
            "s" => Ok(GroupSpec::Symmetric(num)),
            "e" => Ok(GroupSpec::ElementaryAbelian2(num as u32)),
            _ => Err(bad()),
        }
    }
}

impl FiniteGroup {
    /// Builds a group from a multiplication table, checking identity and
    /// inverses, and associativity (fully for order <= 48, on a deterministic
    /// sample of triples up to order 200).
    pub fn from_table(
        name: impl Into<String>,
        order: usize,
        table: Vec<u32>,
        labels: Vec<String>,
    ) -> Result<Self> {
        let name = name.into();
        if order == 0 || order > MAX_GROUP_ORDER {
            return Err(Error::InvalidGroup(format!(
                "order {order} outside 1..={MAX_GROUP_ORDER}"
            )));
        }
        if table.len() != order * order || labels.len() != order {
            return Err(Error::InvalidGroup(
                "table or label count does not match the order".into(),
            ));
        }
        if table.iter().any(|&x| x as usize >= order) {
            return Err(Error::InvalidGroup("table entry out of range".into()));
        }
        let mul = |a: usize, b: usize| table[a * order + b] as usize;
        let identity = (0..order)
            .find(|&e| (0..order).all(|x| mul(e, x) == x && mul(x, e) == x))
            .ok_or_else(|| Error::InvalidGroup(format!("{name}: no identity")))?;
        let inverse = (0..order)
            .map(|a| {
                (0..order)
                    .find(|&b| mul(a, b) == identity && mul(b, a) == identity)
                    .ok_or_else(|| {
                        Error::InvalidGroup(format!("{name}: element {a} has no inverse"))
                    })
            })
            .collect::<Result<Vec<_>>>()?;
        let assoc = |a: usize, b: usize, c: usize| mul(mul(a, b), c) == mul(a, mul(b, c));
        if order <= 48 {
            for a in 0..order {
                for b in 0..order {
                    for c in 0..order {
                        if !assoc(a, b, c) {
                            return Err(Error::InvalidGroup(format!("{name}: not associative")));
                        }
                    }
                }
            }
        } else if order <= 200 {
            // Deterministic stride through the cube of triples.
            let total = order * order * order;
            let step = (total / 20_000).max(1) | 1;
            let mut t = 0;
            while t < total {
                let (a, b, c) = (t % order, (t / order) % order, t / (order * order));
                if !assoc(a, b, c) {
                    return Err(Error::InvalidGroup(format!("{name}: not associative")));
                }
                t += step;
            }
        }
        Ok(Self {
            name,
            order,
            table,
            identity,
            inverse,
            labels,
            kind: Kind::Other,
        })
    }

    pub fn trivial() -> Self {
        Self::cyclic(1).expect("trivial group")
    }

    /// `Z/n` with element `i` standing for `i mod n`.
    pub fn cyclic(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidGroup("cyclic group of order 0".into()));
        }
        let table = (0..n * n).map(|k| ((k / n + k % n) % n) as u32).collect();
        let labels = (0..n).map(|i| i.to_string()).collect();
        let name = if n == 1 {
            "trivial".to_string()
        } else {
            format!("Z{n}")
        };
        Self::from_table(name, n, table, labels)
    }

    /// `(Z/2)^k`, elements are bit masks and the product is XOR.
    pub fn elementary_abelian_2(k: u32) -> Result<Self> {
        let n = 1usize
            .checked_shl(k)
            .filter(|&n| n <= MAX_GROUP_ORDER)
            .ok_or_else(|| Error::InvalidGroup(format!("(Z/2)^{k} exceeds the order budget")))?;
        let table = (0..n * n).map(|x| ((x / n) ^ (x % n)) as u32).collect();
        let labels = (0..n).map(|i| i.to_string()).collect();
        Self::from_table(format!("Z2^{k}"), n, table, labels)
    }

    /// `S_n` for `n <= 6`, acting on `{1..n}`; the product `ab` applies `b` first.
    pub fn symmetric(n: usize) -> Result<Self> {
        if n == 0 || n > 6 {
            return Err(Error::InvalidGroup(format!(
                "S_{n} is outside the supported range 1..=6"
            )));
        }
        let perms = permutations(n);
        let index = |p: &[usize]| {
            perms
                .binary_search_by(|q| q.as_slice().cmp(p))
                .expect("closed")
        };
        let order = perms.len();
        let mut table = Vec::with_capacity(order * order);
        for a in &perms {
            for b in &perms {
                let ab: Vec<usize> = (0..n).map(|i| a[b[i]]).collect();
                table.push(index(&ab) as u32);
            }
        }
        let labels = perms.iter().map(|p| cycle_label(p)).collect();
        let mut g = Self::from_table(format!("S{n}"), order, table, labels)?;
        g.kind = Kind::Symmetric(n);
        Ok(g)
    }

    /// `A × B` with `(a, b)` stored at index `a * |B| + b`.
    pub fn direct_product(a: &Self, b: &Self) -> Result<Self> {
        let order = a
            .order
            .checked_mul(b.order)
            .filter(|&n| n <= MAX_GROUP_ORDER)
            .ok_or_else(|| Error::InvalidGroup("direct product exceeds the order budget".into()))?;
        let mut table = Vec::with_capacity(order * order);
        for x in 0..order {
            let (xa, xb) = (x / b.order, x % b.order);
            for y in 0..order {
                let (ya, yb) = (y / b.order, y % b.order);
                table.push((a.mul(xa, ya) * b.order + b.mul(xb, yb)) as u32);
            }
        }
        let labels = (0..order)
            .map(|x| format!("[{}, {}]", a.labels[x / b.order], b.labels[x % b.order]))
            .collect();
        let identity = a.identity * b.order + b.identity;
        let inverse = (0..order)
            .map(|x| a.inverse[x / b.order] * b.order + b.inverse[x % b.order])
            .collect();
        Ok(Self {
            name: format!("{}x{}", a.name, b.name),
            order,
            table,
            identity,
            inverse,
            labels,
            kind: Kind::Other,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b] as usize
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inverse[a]
    }

    pub fn pow(&self, a: usize, e: usize) -> usize {
        (0..e).fold(self.identity, |acc, _| self.mul(acc, a))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != self.identity {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..a).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// `x g x^{-1}`.
    pub fn conjugate(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(x, g), self.inverse[x])
    }

    /// Conjugacy classes by full orbit enumeration, ordered by smallest member.
    pub fn conjugacy_classes(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.order];
        let mut classes = Vec::new();
        for g in 0..self.order {
            if seen[g] {
                continue;
            }
            let mut class: Vec<usize> = (0..self.order).map(|x| self.conjugate(g, x)).collect();
            class.sort_unstable();
            class.dedup();
            for &c in &class {
                seen[c] = true;
            }
            classes.push(class);
        }
        classes
    }

    /// Looks up an element by label; for symmetric groups any cycle notation
    /// such as `(12)(34)`, `(1 2 3)` or `()` is accepted.
    pub fn parse_element(&self, s: &str) -> Result<usize> {
        let s = s.trim();
        if let Some(i) = self.labels.iter().position(|l| l == s) {
            return Ok(i);
        }
        if let Kind::Symmetric(n) = self.kind {
            let perm = parse_cycles(s, n)?;
            let label = cycle_label(&perm);
            if let Some(i) = self.labels.iter().position(|l| *l == label) {
                return Ok(i);
            }
        }
        Err(Error::InvalidGroup(format!(
            "{s:?} is not an element of {}",
            self.name
        )))
    }

    /// Membership vector of the subgroup generated by `gens`.
    pub fn generated_subgroup(&self, gens: &[usize]) -> Vec<bool> {
        let mut member = vec![false; self.order];
        member[self.identity] = true;
        let mut elems = vec![self.identity];
        let mut i = 0;
        while i < elems.len() {
            let x = elems[i];
            for &g in gens {
                let y = self.mul(x, g);
                if !member[y] {
                    member[y] = true;
                    elems.push(y);
                }
            }
            i += 1;
        }
        member
    }

    /// Parses a subgroup as `;`-separated generators, or `trivial` / `all`.
    pub fn parse_subgroup(&self, s: &str) -> Result<Vec<bool>> {
        let s = s.trim();
        match s.to_ascii_lowercase().as_str() {
            "" | "trivial" | "1" | "e" => return Ok(self.generated_subgroup(&[])),
            "all" | "whole" => return Ok(vec![true; self.order]),
            _ => {}
        }
        let gens = s
            .split(';')
            .map(|g| self.parse_element(g))
            .collect::<Result<Vec<_>>>()?;
        Ok(self.generated_subgroup(&gens))
    }

    pub fn is_subgroup(&self, member: &[bool]) -> bool {
        member.len() == self.order
            && member[self.identity]
            && (0..self.order).all(|a| {
                !member[a]
                    || (member[self.inverse[a]]
                        && (0..self.order).all(|b| !member[b] || member[self.mul(a, b)]))
            })
    }

    /// Every subgroup, found by closing under one extra generator at a time.
    pub fn all_subgroups(&self) -> Vec<Vec<bool>> {
        let mut found: Vec<Vec<bool>> = vec![self.generated_subgroup(&[])];
        let mut i = 0;
        while i < found.len() {
            let current = found[i].clone();
            let gens: Vec<usize> = (0..self.order).filter(|&x| current[x]).collect();
            for g in (0..self.order).filter(|&x| !current[x]) {
                let mut with = gens.clone();
                with.push(g);
                let next = self.generated_subgroup(&with);
                if !found.contains(&next) {
                    found.push(next);
                }
            }
            i += 1;
        }
        found.sort_by_key(|m| m.iter().filter(|&&b| b).count());
        found
    }
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (order {})", self.name, self.order)
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                rec(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// Canonical 1-based cycle notation; each cycle starts at its smallest point,
/// fixed points omitted, identity written `()`.
fn cycle_label(perm: &[usize]) -> String {
    let mut seen = vec![false; perm.len()];
    let mut out = String::new();
    for start in 0..perm.len() {
        if seen[start] || perm[start] == start {
            continue;
        }
        out.push('(');
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            out.push_str(&(x + 1).to_string());
            x = perm[x];
        }
        out.push(')');
    }
    if out.is_empty() {
        "()".into()
    } else {
        out
    }
}

/// Parses a product of cycles acting on `{1..n}`, composing right to left.
fn parse_cycles(s: &str, n: usize) -> Result<Vec<usize>> {
    let bad = || Error::InvalidGroup(format!("cannot parse permutation {s:?}"));
    let mut perm: Vec<usize> = (0..n).collect();
    let mut cycles = Vec::new();
    let mut rest = s.trim();
    while !rest.is_empty() {
        let body_end = rest.find(')').ok_or_else(bad)?;
        let body = rest.strip_prefix('(').ok_or_else(bad)?;
        let body = &body[..body_end - 1];
        let points: Vec<usize> = if body.contains([',', ' ']) {
            body.split([',', ' '])
                .filter(|t| !t.is_empty())
                .map(|t| t.parse::<usize>().map_err(|_| bad()))
                .collect::<Result<_>>()?
        } else {
            body.chars()
                .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(bad))
                .collect::<Result<_>>()?
        };
        if points.iter().any(|&p| p == 0 || p > n) {
            return Err(bad());
        }
        cycles.push(points);
        rest = rest[body_end + 1..].trim_start();
    }
    for cycle in cycles.iter().rev() {
        let mut step: Vec<usize> = (0..n).collect();
        for w in 0..cycle.len() {
            step[cycle[w] - 1] = cycle[(w + 1) % cycle.len()] - 1;
        }
        perm = perm.iter().map(|&x| step[x]).collect();
    }
    Ok(perm)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn orders() {
        assert_eq!(FiniteGroup::cyclic(2).unwrap().order(), 2);
        assert_eq!(FiniteGroup::symmetric(3).unwrap().order(), 6);
        let p = FiniteGroup::direct_product(
            &FiniteGroup::symmetric(3).unwrap(),
            &FiniteGroup::elementary_abelian_2(2).unwrap(),
        )
        .unwrap();
        assert_eq!(p.order(), 24);
        assert_eq!(FiniteGroup::symmetric(6).unwrap().order(), 720);
        assert!(FiniteGroup::symmetric(7).is_err());
    }

    #[test]
    fn spec_parsing() {
        let g: GroupSpec = "S3xZ2^2".parse().unwrap();
        assert_eq!(g.build().unwrap().order(), 24);
        assert_eq!("trivial".parse::<GroupSpec>().unwrap(), GroupSpec::Trivial);
        assert_eq!("Z/3".parse::<GroupSpec>().unwrap(), GroupSpec::Cyclic(3));
        assert!("Q8".parse::<GroupSpec>().is_err());
    }

    #[test]
    fn class_counts() {
        // class numbers: S3 -> 3, S4 -> 5, S5 -> 7
        for (n, classes) in [(3, 3), (4, 5), (5, 7)] {
            assert_eq!(
                FiniteGroup::symmetric(n).unwrap().conjugacy_classes().len(),
                classes
            );
        }
    }

    #[test]
    fn subgroup_counts() {
        assert_eq!(FiniteGroup::symmetric(3).unwrap().all_subgroups().len(), 6);
        assert_eq!(FiniteGroup::symmetric(4).unwrap().all_subgroups().len(), 30);
        assert_eq!(FiniteGroup::cyclic(3).unwrap().all_subgroups().len(), 2);
        for h in FiniteGroup::symmetric(4).unwrap().all_subgroups() {
            assert!(FiniteGroup::symmetric(4).unwrap().is_subgroup(&h));
        }
    }

    #[test]
    fn cycle_parsing() {
        let s3 = FiniteGroup::symmetric(3).unwrap();
        let t = s3.parse_element("(12)").unwrap();
        assert_eq!(s3.parse_element("(2 1)").unwrap(), t);
        assert_eq!(s3.element_order(t), 2);
        let c = s3.parse_element("(123)").unwrap();
        assert_eq!(s3.element_order(c), 3);
        // (12)(23) applies (23) first: 1->1->2, 2->3->3, 3->2->1, i.e. (123)
        assert_eq!(s3.parse_element("(12)(23)").unwrap(), c);
        assert_eq!(s3.mul(t, s3.parse_element("(23)").unwrap()), c);
        assert_eq!(s3.parse_element("()").unwrap(), s3.identity());
        assert!(s3.parse_element("(14)").is_err());
        let h = s3.parse_subgroup("(12)").unwrap();
        assert_eq!(h.iter().filter(|&&b| b).count(), 2);
    }

    #[test]
    fn rejects_non_group_table() {
        // x*y = x - y mod 3: has no two-sided identity
        let table = (0..9).map(|k| ((k / 3 + 3 - k % 3) % 3) as u32).collect();
        let labels = (0..3).map(|i| i.to_string()).collect();
        assert!(FiniteGroup::from_table("bad", 3, table, labels).is_err());
    }
}
