//! Young diagrams and the dictionary between partitions and unipotent
//! inertial types.
//!
//! A partition `(l_1, ..., l_k)` of `n` is realised as the unipotent matrix
//! `I + diag(B_{l_1}, ..., B_{l_k})` ([`nabla_matrix`]). Going back through
//! kernel dimensions of powers of `M - I` ([`kernel_sequence`]) does not return
//! the block sizes but their conjugate partition.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ff::{FiniteField, Matrix};

/// Largest `n` for which [`verify_conjugation_lemma`] enumerates partitions.
pub const MAX_LEMMA_N: usize = 12;

/// A weakly decreasing list of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidPartition("no parts".into()));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidPartition("parts must be positive".into()));
        }
        if !parts.windows(2).all(|w| w[0] >= w[1]) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} is not weakly decreasing"
            )));
        }
        Ok(Self(parts))
    }

    /// `(1, 1, ..., 1)`.
    pub fn column(n: usize) -> Result<Self> {
        Self::new(vec![1; n])
    }

    /// `(n)`.
    pub fn row(n: usize) -> Result<Self> {
        Self::new(vec![n])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// The integer being partitioned.
    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Reflection of the Young diagram in its main diagonal.
    pub fn conjugate(&self) -> Self {
        let width = self.0[0];
        let parts = (1..=width)
            .map(|i| self.0.iter().take_while(|&&l| l >= i).count())
            .collect();
        Self(parts)
    }

    /// All partitions of `n` in reverse lexicographic order, `(n)` first.
    pub fn all(n: usize) -> Vec<Self> {
        fn rec(remaining: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if remaining == 0 {
                out.push(Partition(prefix.clone()));
                return;
            }
            for part in (1..=max.min(remaining)).rev() {
                prefix.push(part);
                rec(remaining - part, part, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        if n > 0 {
            rec(n, n, &mut Vec::new(), &mut out);
        }
        out
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Self::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses comma-separated parts such as `"3,1"`; surrounding parentheses
    /// are tolerated.
    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim().trim_start_matches('(').trim_end_matches(')');
        let parts = body
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidPartition(format!("cannot parse {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

/// `I + diag(B_{l_1}, ..., B_{l_k})`, blocks in the order given.
pub fn nabla_matrix(partition: &Partition, field: &FiniteField) -> Matrix {
    let blocks: Vec<Matrix> = partition
        .parts()
        .iter()
        .map(|&l| Matrix::nilpotent_block(field, l))
        .collect();
    let n = partition.size();
    let nilpotent = Matrix::block_diag(field, &blocks).expect("blocks share the field");
    nilpotent
        .add(&Matrix::identity(field, n))
        .expect("same shape and field")
}

/// The partition `(s_1, ..., s_r)` with
/// `s_i = dim ker (M - I)^i - dim ker (M - I)^{i-1}`, stopping at the first
/// `r` where `(M - I)^r` vanishes.
pub fn kernel_sequence(m: &Matrix) -> Result<Partition> {
    if !m.is_unipotent()? {
        return Err(Error::NotUnipotent);
    }
    let n = m.rows();
    if n == 0 {
        return Err(Error::InvalidPartition(
            "empty matrix has no kernel sequence".into(),
        ));
    }
    let nilpotent = m.shift(m.field().one())?;
    let mut power = nilpotent.clone();
    let mut previous = 0;
    let mut seq = Vec::new();
    loop {
        let dim = power.kernel_dim();
        seq.push(dim - previous);
        if dim == n {
            break;
        }
        previous = dim;
        power = power.mul(&nilpotent)?;
    }
    Partition::new(seq)
        .map_err(|e| Error::Internal(format!("kernel sequence not a partition: {e}")))
}

/// Kernel sequence of the matrix model of `partition`.
pub fn theta(partition: &Partition, field: &FiniteField) -> Partition {
    kernel_sequence(&nabla_matrix(partition, field)).expect("nabla matrices are unipotent")
}

/// The field [`theta`] uses when none is given.
pub fn default_field() -> FiniteField {
    FiniteField::prime(5).expect("5 is prime")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaFailure {
    pub partition: Partition,
    pub theta: Partition,
    pub conjugate: Partition,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LemmaReport {
    pub n: usize,
    pub checked: usize,
    pub failures: Vec<LemmaFailure>,
}

impl LemmaReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Checks `theta(l) == conjugate(l)` for every partition `l` of `n` over `field`.
pub fn verify_conjugation_lemma_over(n: usize, field: &FiniteField) -> Result<LemmaReport> {
    if n == 0 || n > MAX_LEMMA_N {
        return Err(Error::InvalidInput(format!(
            "n must lie in 1..={MAX_LEMMA_N}, got {n}"
        )));
    }
    let mut checked = 0;
    let mut failures = Vec::new();
    for lambda in Partition::all(n) {
        checked += 1;
        let t = theta(&lambda, field);
        let c = lambda.conjugate();
        if t != c {
            failures.push(LemmaFailure {
                partition: lambda,
                theta: t,
                conjugate: c,
            });
        }
    }
    Ok(LemmaReport {
        n,
        checked,
        failures,
    })
}

pub fn verify_conjugation_lemma(n: usize) -> Result<LemmaReport> {
    verify_conjugation_lemma_over(n, &default_field())
}
