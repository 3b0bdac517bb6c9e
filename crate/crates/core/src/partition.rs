//! Young diagrams and their cycle-type combinatorics.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;

use crate::diagram_sum::DiagramSum;
use crate::error::{Error, Result};
use crate::rational::{self, Rational};

/// Default upper bound for [`partitions_of`].
pub const MAX_ENUMERATION_DEGREE: u32 = 30;

/// A Young diagram: weakly decreasing positive parts. The empty diagram is
/// a valid value of degree 0.
///
/// Ordering is by degree first and then reverse-lexicographic on the parts,
/// so `[3] < [2,1] < [1,1,1] < [4]`. All tables and printed sums use it.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if let Some(i) = parts.iter().position(|&p| p == 0) {
            return Err(Error::Argument(format!("part {i} is zero")));
        }
        if let Some(i) = parts.windows(2).position(|w| w[0] < w[1]) {
            return Err(Error::Argument(format!(
                "parts must be weakly decreasing, found {} before {}",
                parts[i],
                parts[i + 1]
            )));
        }
        Ok(Partition(parts))
    }

    /// Builds a partition from parts in any order; zero parts are dropped.
    pub fn from_multiset(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// `[1^n]`, the cycle type of the identity in S_n.
    pub fn ones(n: u32) -> Self {
        Partition(vec![1; n as usize])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Number of parts equal to `k`.
    pub fn multiplicity(&self, k: u32) -> u32 {
        self.0.iter().filter(|&&p| p == k).count() as u32
    }

    /// `(part, multiplicity)` pairs in decreasing part order.
    pub fn multiplicities(&self) -> Vec<(u32, u32)> {
        let mut out: Vec<(u32, u32)> = Vec::new();
        for &p in &self.0 {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// Centralizer order `z = prod_k m_k! k^{m_k}`.
    pub fn aut_order(&self) -> BigInt {
        self.multiplicities()
            .into_iter()
            .fold(BigInt::one(), |acc, (k, m)| {
                acc * rational::factorial(m) * BigInt::from(k).pow(m)
            })
    }

    /// `1 / aut_order`.
    pub fn kappa(&self) -> Rational {
        Rational::new(BigInt::one(), self.aut_order())
    }

    /// Number of permutations of cycle type `self` in S_degree.
    pub fn class_size(&self) -> BigInt {
        rational::factorial(self.degree()) / self.aut_order()
    }

    /// Appends `k` unit rows.
    pub fn pad(&self, k: u32) -> Partition {
        let mut parts = self.0.clone();
        parts.extend(std::iter::repeat_n(1, k as usize));
        Partition(parts)
    }

    /// Pads up to degree `n`; `None` when the diagram is already larger.
    pub fn pad_to(&self, n: u32) -> Option<Partition> {
        n.checked_sub(self.degree()).map(|k| self.pad(k))
    }

    /// The embedding `rho_k`: `binom(r+k, k) * pad(k)` with `r` the number
    /// of unit rows.
    pub fn rho(&self, k: u32) -> DiagramSum {
        DiagramSum::single(self.pad(k), rational::big(self.rho_coefficient(k)))
    }

    pub fn rho_coefficient(&self, k: u32) -> BigInt {
        let r = self.multiplicity(1);
        rational::factorial(r + k) / (rational::factorial(r) * rational::factorial(k))
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.0.first().copied().unwrap_or(0);
        Partition(
            (1..=width)
                .map(|j| self.0.iter().filter(|&&p| p >= j).count() as u32)
                .collect(),
        )
    }

    /// Sign of a permutation with this cycle type.
    pub fn sign(&self) -> i64 {
        if (self.degree() as usize - self.len()).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Union of the two part multisets.
    pub fn merge(&self, other: &Partition) -> Partition {
        let (a, b) = (&self.0, &other.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            if a[i] >= b[j] {
                out.push(a[i]);
                i += 1;
            } else {
                out.push(b[j]);
                j += 1;
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Partition(out)
    }

    /// Removes one part equal to `k`, if present.
    pub fn without_part(&self, k: u32) -> Option<Partition> {
        let i = self.0.iter().position(|&p| p == k)?;
        let mut parts = self.0.clone();
        parts.remove(i);
        Some(Partition(parts))
    }

    /// Hook lengths row by row.
    pub fn hook_lengths(&self) -> Vec<u32> {
        let conj = self.conjugate();
        let mut out = Vec::with_capacity(self.degree() as usize);
        for (i, &row) in self.0.iter().enumerate() {
            for j in 0..row {
                let arm = row - j - 1;
                let leg = conj.0[j as usize] - i as u32 - 1;
                out.push(arm + leg + 1);
            }
        }
        out
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_at(s, 0)
    }
}

/// Parses `[a,b,...]` with whitespace allowed anywhere; `offset` shifts the
/// reported error positions when the text is embedded in a longer string.
pub(crate) fn parse_at(s: &str, offset: usize) -> Result<Partition> {
    let mut chars = s
        .char_indices()
        .filter(|(_, c)| !c.is_whitespace())
        .peekable();
    let pos = |i: usize| offset + i;
    match chars.next() {
        Some((_, '[')) => {}
        Some((i, c)) => return Err(Error::parse(pos(i), format!("expected '[', found {c:?}"))),
        None => return Err(Error::parse(pos(0), "expected '['")),
    }
    let mut parts = Vec::new();
    let mut expect_value = false;
    loop {
        match chars.next() {
            Some((i, ']')) => {
                if expect_value {
                    return Err(Error::parse(pos(i), "expected a part after ','"));
                }
                break;
            }
            Some((i, c)) if c.is_ascii_digit() => {
                if !parts.is_empty() && !expect_value {
                    return Err(Error::parse(pos(i), "expected ',' or ']'"));
                }
                let mut value = c.to_digit(10).unwrap() as u64;
                let mut end = i + 1;
                while let Some(&(j, d)) = chars.peek() {
                    let Some(d) = d.to_digit(10).filter(|_| j == end) else {
                        break;
                    };
                    end = j + 1;
                    value = value * 10 + d as u64;
                    if value > u32::MAX as u64 {
                        return Err(Error::parse(pos(i), "part too large"));
                    }
                    chars.next();
                }
                if value == 0 {
                    return Err(Error::parse(pos(i), "parts must be positive"));
                }
                if let Some(&last) = parts.last() {
                    if (value as u32) > last {
                        return Err(Error::parse(
                            pos(i),
                            format!("parts must be weakly decreasing, found {last} before {value}"),
                        ));
                    }
                }
                parts.push(value as u32);
                expect_value = false;
            }
            Some((i, ',')) => {
                if parts.is_empty() || expect_value {
                    return Err(Error::parse(pos(i), "unexpected ','"));
                }
                expect_value = true;
            }
            Some((i, c)) => return Err(Error::parse(pos(i), format!("unexpected {c:?}"))),
            None => return Err(Error::parse(pos(s.len()), "unterminated partition")),
        }
    }
    if let Some((i, c)) = chars.next() {
        return Err(Error::parse(pos(i), format!("trailing {c:?}")));
    }
    Ok(Partition(parts))
}

/// All partitions of `n` in canonical (reverse-lexicographic) order.
pub fn partitions_of(n: u32) -> Result<Vec<Partition>> {
    partitions_of_bounded(n, MAX_ENUMERATION_DEGREE)
}

pub fn partitions_of_bounded(n: u32, bound: u32) -> Result<Vec<Partition>> {
    if n > bound {
        return Err(Error::Resource(format!(
            "partition enumeration of degree {n} exceeds bound {bound}"
        )));
    }
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill(n, n, &mut current, &mut out);
    Ok(out)
}

fn fill(remaining: u32, max_part: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition(current.clone()));
        return;
    }
    for p in (1..=max_part.min(remaining)).rev() {
        current.push(p);
        fill(remaining - p, p, current, out);
        current.pop();
    }
}

/// All partitions of degree `lo..=hi`, in canonical order.
pub fn partitions_in_range(lo: u32, hi: u32) -> Result<Vec<Partition>> {
    let mut out = Vec::new();
    for n in lo..=hi {
        out.extend(partitions_of(n)?);
    }
    Ok(out)
}
