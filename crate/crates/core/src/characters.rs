//! Irreducible characters of the symmetric groups.
//!
//! Values come from the Murnaghan–Nakayama rule on beta-sets: removing a
//! border strip of length `k` from a diagram moves one bead of its beta-set
//! down by `k`, with sign `(-1)^(beads jumped over)`. Class parts are
//! consumed largest first and the recursion is memoized on
//! `(remaining shape, remaining class parts)`.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::partition::{partitions_of, Partition};
use crate::rational::{self, Rational};

/// Hard ceiling on the degree of any character table built in memory.
pub const MAX_TABLE_DEGREE: u32 = 14;

type Memo = HashMap<(Partition, Vec<u32>), i64>;

/// `chi_R(Delta)` for `|R| = |Delta|`.
pub fn character(shape: &Partition, class: &Partition) -> Result<i64> {
    if shape.degree() != class.degree() {
        return Err(Error::Argument(format!(
            "character of {shape} (degree {}) on class {class} (degree {})",
            shape.degree(),
            class.degree()
        )));
    }
    let mut memo = Memo::new();
    Ok(mn(shape, class.parts(), &mut memo))
}

fn mn(shape: &Partition, class: &[u32], memo: &mut Memo) -> i64 {
    let Some((&k, rest)) = class.split_first() else {
        return if shape.is_empty() { 1 } else { 0 };
    };
    let key = (shape.clone(), class.to_vec());
    if let Some(&v) = memo.get(&key) {
        return v;
    }
    let mut total = 0i64;
    for (smaller, height) in remove_border_strips(shape, k) {
        let sign = if height % 2 == 0 { 1 } else { -1 };
        total += sign * mn(&smaller, rest, memo);
    }
    memo.insert(key, total);
    total
}

/// Every diagram obtained by removing a border strip of length `k`, with the
/// strip's height (rows spanned minus one).
fn remove_border_strips(shape: &Partition, k: u32) -> Vec<(Partition, u32)> {
    let l = shape.len() as u32;
    let beads: Vec<u32> = shape
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &p)| p + l - 1 - i as u32)
        .collect();
    let mut out = Vec::new();
    for (i, &b) in beads.iter().enumerate() {
        if b < k {
            continue;
        }
        let target = b - k;
        if beads.contains(&target) {
            continue;
        }
        let height = beads.iter().filter(|&&c| c > target && c < b).count() as u32;
        let mut moved = beads.clone();
        moved[i] = target;
        moved.sort_unstable_by(|a, b| b.cmp(a));
        let parts = moved
            .iter()
            .enumerate()
            .map(|(j, &c)| c - (l - 1 - j as u32))
            .collect();
        out.push((Partition::from_multiset(parts), height));
    }
    out
}

/// Dimension of the irreducible representation `R` via the hook length
/// formula.
pub fn dimension_by_hooks(shape: &Partition) -> BigInt {
    let hooks: BigInt = shape
        .hook_lengths()
        .into_iter()
        .fold(BigInt::from(1), |acc, h| acc * h);
    rational::factorial(shape.degree()) / hooks
}

/// Dimension of `R`, read off the identity column of its character table.
pub fn dimension(shape: &Partition) -> Result<BigInt> {
    let table = table(shape.degree())?;
    Ok(BigInt::from(
        table.get(shape, &Partition::ones(shape.degree())),
    ))
}

/// `d_R = dim R / |R|!`.
pub fn d_r(shape: &Partition) -> Result<Rational> {
    Ok(Rational::new(
        dimension(shape)?,
        rational::factorial(shape.degree()),
    ))
}

/// `d_R` from the closed product over parts padded with zeros to length
/// `|R|`.
pub fn d_r_product(shape: &Partition) -> Rational {
    let n = shape.degree() as i64;
    let mu: Vec<i64> = (0..n)
        .map(|i| shape.parts().get(i as usize).copied().unwrap_or(0) as i64)
        .collect();
    let mut num = BigInt::from(1);
    for i in 0..n {
        for j in (i + 1)..n {
            num *= mu[i as usize] - mu[j as usize] - i + j;
        }
    }
    let mut den = BigInt::from(1);
    for i in 0..n {
        den *= rational::factorial((mu[i as usize] + n - (i + 1)) as u32);
    }
    Rational::new(num, den)
}

/// The normalized character `phi_R(Delta)`: for `|R| >= |Delta|`,
/// `kappa(Delta) chi_R(Delta^k) / (d_R k!)` with `k = |R| - |Delta|`,
/// and zero otherwise. It is the eigenvalue of `W(Delta)` on `s_R`.
///
/// A variant with `m_1!(|R|-|Delta|-m_1)!` in the denominator and a
/// cutoff at `|R|-|Delta| >= m_1` is sometimes quoted; it does not match
/// the explicit cut-and-join action (it would give `phi_[2]([1,1]) = 0`
/// while the operator gives 1) and is not used.
pub fn phi(shape: &Partition, class: &Partition) -> Result<Rational> {
    let n = shape.degree();
    let Some(padded) = class.pad_to(n) else {
        return Ok(Rational::zero());
    };
    let k = n - class.degree();
    let table = table(n)?;
    let chi = rational::int(table.get(shape, &padded));
    let dim = rational::int(table.get(shape, &Partition::ones(n)));
    let d = dim / rational::big(rational::factorial(n));
    Ok(class.kappa() * chi / (d * rational::big(rational::factorial(k))))
}

/// Full character table of S_n; rows are irreducibles `R`, columns classes
/// `Delta`, both in canonical partition order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterTable {
    n: u32,
    order: Vec<Partition>,
    index: HashMap<Partition, usize>,
    rows: Vec<Vec<i64>>,
}

impl CharacterTable {
    pub fn compute(n: u32) -> Result<Self> {
        Self::compute_with(n, Execution::default())
    }

    pub fn compute_with(n: u32, exec: Execution) -> Result<Self> {
        check_degree(n, MAX_TABLE_DEGREE)?;
        let order = partitions_of(n)?;
        let rows = exec.map(&order, |shape| compute_row(shape, &order));
        Ok(Self::from_parts(n, order, rows))
    }

    fn from_parts(n: u32, order: Vec<Partition>, rows: Vec<Vec<i64>>) -> Self {
        let index = order
            .iter()
            .enumerate()
            .map(|(i, d)| (d.clone(), i))
            .collect();
        CharacterTable {
            n,
            order,
            index,
            rows,
        }
    }

    pub fn degree(&self) -> u32 {
        self.n
    }

    pub fn order(&self) -> &[Partition] {
        &self.order
    }

    pub fn position(&self, d: &Partition) -> Option<usize> {
        self.index.get(d).copied()
    }

    pub fn row(&self, shape: &Partition) -> &[i64] {
        &self.rows[self.index[shape]]
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    /// Panics if either partition is not of degree `n`.
    pub fn get(&self, shape: &Partition, class: &Partition) -> i64 {
        self.rows[self.index[shape]][self.index[class]]
    }

    /// Checks row and column orthogonality exactly.
    pub fn verify_orthogonality(&self) -> Result<()> {
        let fact = rational::factorial(self.n);
        let sizes: Vec<BigInt> = self.order.iter().map(Partition::class_size).collect();
        for (a, ra) in self.rows.iter().enumerate() {
            for (b, rb) in self.rows.iter().enumerate().skip(a) {
                let s: BigInt = ra
                    .iter()
                    .zip(rb)
                    .zip(&sizes)
                    .map(|((x, y), c)| c * (x * y))
                    .sum();
                let want = if a == b { fact.clone() } else { BigInt::zero() };
                if s != want {
                    return Err(Error::Internal(format!(
                        "row orthogonality fails for {} and {} in S_{}",
                        self.order[a], self.order[b], self.n
                    )));
                }
            }
        }
        for (a, da) in self.order.iter().enumerate() {
            for b in a..self.order.len() {
                let s: i64 = self.rows.iter().map(|r| r[a] * r[b]).sum();
                let want = if a == b {
                    da.aut_order()
                } else {
                    BigInt::zero()
                };
                if BigInt::from(s) != want {
                    return Err(Error::Internal(format!(
                        "column orthogonality fails for {} and {} in S_{}",
                        da, self.order[b], self.n
                    )));
                }
            }
        }
        Ok(())
    }
}

pub(crate) fn compute_row(shape: &Partition, order: &[Partition]) -> Vec<i64> {
    let mut memo = Memo::new();
    order
        .iter()
        .map(|c| mn(shape, c.parts(), &mut memo))
        .collect()
}

fn check_degree(n: u32, bound: u32) -> Result<()> {
    if n > bound {
        Err(Error::Resource(format!(
            "character table of S_{n} exceeds bound {bound}"
        )))
    } else {
        Ok(())
    }
}

static TABLES: OnceLock<RwLock<HashMap<u32, Arc<CharacterTable>>>> = OnceLock::new();

/// Process-wide memoized table of S_n.
pub fn table(n: u32) -> Result<Arc<CharacterTable>> {
    check_degree(n, MAX_TABLE_DEGREE)?;
    let tables = TABLES.get_or_init(Default::default);
    if let Some(t) = tables.read().expect("table lock").get(&n) {
        return Ok(Arc::clone(t));
    }
    let computed = Arc::new(CharacterTable::compute(n)?);
    let mut guard = tables.write().expect("table lock");
    Ok(Arc::clone(guard.entry(n).or_insert(computed)))
}

mod cache;
pub use cache::{to_json, CacheStatus, CharTableCache, CACHE_DIR_ENV, DEFAULT_CACHE_DIR};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn small_values() {
        assert_eq!(character(&p("[2]"), &p("[2]")).unwrap(), 1);
        assert_eq!(character(&p("[1,1]"), &p("[2]")).unwrap(), -1);
        assert_eq!(character(&p("[2,1]"), &p("[1,1,1]")).unwrap(), 2);
        assert_eq!(character(&p("[2,1]"), &p("[2,1]")).unwrap(), 0);
        assert_eq!(character(&p("[2,1]"), &p("[3]")).unwrap(), -1);
        assert_eq!(character(&p("[]"), &p("[]")).unwrap(), 1);
        assert!(matches!(
            character(&p("[2]"), &p("[1]")),
            Err(Error::Argument(_))
        ));
    }

    #[test]
    fn trivial_representation() {
        for n in 0..=6 {
            for c in partitions_of(n).unwrap() {
                assert_eq!(
                    character(&Partition::from_multiset(vec![n]), &c).unwrap(),
                    1
                );
            }
        }
    }

    #[test]
    fn dimensions() {
        assert_eq!(dimension(&p("[2,1]")).unwrap(), BigInt::from(2));
        assert_eq!(dimension(&p("[5]")).unwrap(), BigInt::from(1));
        assert_eq!(dimension(&p("[2,2]")).unwrap(), BigInt::from(2));
        assert_eq!(dimension_by_hooks(&p("[2,2]")), BigInt::from(2));
    }

    #[test]
    fn d_r_values() {
        assert_eq!(d_r(&p("[1]")).unwrap(), int(1));
        assert_eq!(d_r(&p("[2]")).unwrap(), ratio(1, 2));
        assert_eq!(d_r(&p("[1,1]")).unwrap(), ratio(1, 2));
        assert_eq!(d_r(&p("[2,1]")).unwrap(), ratio(1, 3));
        assert_eq!(d_r_product(&p("[2,1]")), ratio(1, 3));
        assert_eq!(d_r_product(&p("[]")), int(1));
    }

    #[test]
    fn phi_values() {
        assert_eq!(phi(&p("[2]"), &p("[2]")).unwrap(), int(1));
        assert_eq!(phi(&p("[1,1]"), &p("[2]")).unwrap(), int(-1));
        assert_eq!(phi(&p("[1]"), &p("[1,1]")).unwrap(), int(0));
        assert_eq!(phi(&p("[2]"), &p("[1,1]")).unwrap(), int(1));
        assert_eq!(phi(&p("[3,1]"), &p("[]")).unwrap(), int(1));
    }

    #[test]
    fn s3_table() {
        let t = CharacterTable::compute(3).unwrap();
        let cols = [p("[1,1,1]"), p("[2,1]"), p("[3]")];
        let expect = [
            (p("[3]"), [1, 1, 1]),
            (p("[2,1]"), [2, 0, -1]),
            (p("[1,1,1]"), [1, -1, 1]),
        ];
        for (r, vals) in expect {
            for (c, v) in cols.iter().zip(vals) {
                assert_eq!(t.get(&r, c), v, "chi_{r}({c})");
            }
        }
        assert_eq!(CharacterTable::compute(1).unwrap().rows(), &[vec![1]]);
        assert!(matches!(
            CharacterTable::compute(15),
            Err(Error::Resource(_))
        ));
    }

    #[test]
    fn parallel_and_sequential_tables_agree() {
        assert_eq!(
            CharacterTable::compute_with(7, Execution::Sequential).unwrap(),
            CharacterTable::compute_with(7, Execution::Parallel).unwrap()
        );
    }
}
