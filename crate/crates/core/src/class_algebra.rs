//! The class algebras of S_n and the graded product of diagrams.
//!
//! `mult_same_degree` is the product of class sums in the centre of the
//! group algebra of S_n, written in the diagram basis. `mult_infinity`
//! multiplies diagrams of arbitrary degree: both factors are padded with
//! unit rows (via `rho`) to each intermediate degree `n`, multiplied in
//! degree `n`, and the padded images of the lower graded pieces are
//! subtracted.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::characters::{self, MAX_TABLE_DEGREE};
use crate::diagram_sum::DiagramSum;
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::partition::{partitions_of, Partition};
use crate::perm::{conjugacy_classes, Perm};
use crate::rational::{self, Rational};

/// Largest degree accepted by the permutation-count oracle.
pub const ORACLE_MAX_DEGREE: u32 = 6;

fn same_degree(parts: &[&Partition]) -> Result<u32> {
    let n = parts[0].degree();
    if let Some(bad) = parts.iter().find(|d| d.degree() != n) {
        return Err(Error::Argument(format!(
            "diagrams must share a degree: {} has degree {}, expected {n}",
            bad,
            bad.degree()
        )));
    }
    Ok(n)
}

/// `C^D_{D1,D2}`: the coefficient of the class sum of `D` in the product of
/// the class sums of `D1` and `D2`, evaluated by the Frobenius formula
/// `|C1||C2|/n! * sum_R chi_R(D1) chi_R(D2) chi_R(D) / dim R`.
pub fn structure_constant(d1: &Partition, d2: &Partition, d: &Partition) -> Result<BigInt> {
    let n = same_degree(&[d1, d2, d])?;
    let table = characters::table(n)?;
    let fact = rational::factorial(n);
    let identity = Partition::ones(n);
    let mut sum = BigInt::zero();
    for shape in table.order() {
        let row = table.row(shape);
        let dim = row[table.position(&identity).expect("identity class")];
        let chi = |c: &Partition| BigInt::from(row[table.position(c).expect("class")]);
        // dim R divides n!
        sum += chi(d1) * chi(d2) * chi(d) * (&fact / BigInt::from(dim));
    }
    let num = d1.class_size() * d2.class_size() * sum;
    let den = &fact * &fact;
    let (q, r) = num.div_rem(&den);
    if !r.is_zero() || q.is_negative() {
        return Err(Error::Internal(format!(
            "structure constant C^{d}_{{{d1},{d2}}} evaluated to {num}/{den}"
        )));
    }
    Ok(q)
}

type PairMemo<T> = OnceLock<RwLock<HashMap<(Partition, Partition), T>>>;

static SAME_DEGREE: PairMemo<DiagramSum> = OnceLock::new();
static GRADED: PairMemo<Arc<Vec<DiagramSum>>> = OnceLock::new();

fn memo_get<T: Clone>(memo: &PairMemo<T>, key: &(Partition, Partition)) -> Option<T> {
    memo.get_or_init(Default::default)
        .read()
        .expect("memo lock")
        .get(key)
        .cloned()
}

fn memo_put<T>(memo: &PairMemo<T>, key: (Partition, Partition), value: T) {
    memo.get_or_init(Default::default)
        .write()
        .expect("memo lock")
        .insert(key, value);
}

/// `D1 o D2` in the class algebra of S_n, `n = |D1| = |D2|`.
pub fn mult_same_degree(d1: &Partition, d2: &Partition) -> Result<DiagramSum> {
    let n = same_degree(&[d1, d2])?;
    let key = (d1.clone(), d2.clone());
    if let Some(hit) = memo_get(&SAME_DEGREE, &key) {
        return Ok(hit);
    }
    let mut out = DiagramSum::zero();
    for d in partitions_of(n)? {
        let c = structure_constant(d1, d2, &d)?;
        out.add_term(d, rational::big(c));
    }
    memo_put(&SAME_DEGREE, key, out.clone());
    Ok(out)
}

/// Bilinear extension of [`mult_same_degree`] to sums concentrated in one
/// degree.
pub fn mult_same_degree_sums(a: &DiagramSum, b: &DiagramSum) -> Result<DiagramSum> {
    let mut out = DiagramSum::zero();
    for (d1, c1) in a.iter() {
        for (d2, c2) in b.iter() {
            out.add_scaled(&mult_same_degree(d1, d2)?, &(c1 * c2));
        }
    }
    Ok(out)
}

/// The graded pieces `{D1 D2}_n` for `n = max(|D1|,|D2|) ..= |D1|+|D2|`.
pub fn graded_pieces(d1: &Partition, d2: &Partition) -> Result<Arc<Vec<DiagramSum>>> {
    let (a, b) = (d1.degree(), d2.degree());
    if a + b > MAX_TABLE_DEGREE {
        return Err(Error::Resource(format!(
            "product of diagrams of degrees {a} and {b} exceeds degree bound {MAX_TABLE_DEGREE}"
        )));
    }
    let key = (d1.clone(), d2.clone());
    if let Some(hit) = memo_get(&GRADED, &key) {
        return Ok(hit);
    }
    let lo = a.max(b);
    let mut pieces: Vec<DiagramSum> = Vec::new();
    for n in lo..=(a + b) {
        let mut piece = mult_same_degree_sums(&d1.rho(n - a), &d2.rho(n - b))?;
        for (k, lower) in (lo..n).zip(&pieces) {
            piece.add_scaled(&lower.rho(n - k), &rational::int(-1));
        }
        pieces.push(piece);
    }
    let pieces = Arc::new(pieces);
    memo_put(&GRADED, key, Arc::clone(&pieces));
    Ok(pieces)
}

/// The product of two diagrams in the algebra of all diagrams.
pub fn mult_infinity(d1: &Partition, d2: &Partition) -> Result<DiagramSum> {
    let mut out = DiagramSum::zero();
    for piece in graded_pieces(d1, d2)?.iter() {
        out.add_scaled(piece, &rational::int(1));
    }
    Ok(out)
}

/// Bilinear extension of [`mult_infinity`].
pub fn mult_sum(a: &DiagramSum, b: &DiagramSum) -> Result<DiagramSum> {
    let mut out = DiagramSum::zero();
    for (d1, c1) in a.iter() {
        for (d2, c2) in b.iter() {
            out.add_scaled(&mult_infinity(d1, d2)?, &(c1 * c2));
        }
    }
    Ok(out)
}

/// Literal count behind `C^D_{D1,D2}`: fix `g` of type `D` and count the
/// `g1` of type `D1` for which `g1^{-1} g` has type `D2`.
pub fn oracle_structure_constant(d1: &Partition, d2: &Partition, d: &Partition) -> Result<u64> {
    oracle_structure_constant_with(d1, d2, d, Execution::default())
}

pub fn oracle_structure_constant_with(
    d1: &Partition,
    d2: &Partition,
    d: &Partition,
    exec: Execution,
) -> Result<u64> {
    let n = same_degree(&[d1, d2, d])?;
    if n > ORACLE_MAX_DEGREE {
        return Err(Error::Resource(format!(
            "oracle enumeration in S_{n} exceeds bound S_{ORACLE_MAX_DEGREE}"
        )));
    }
    let classes = conjugacy_classes(n)?;
    let g = Perm::with_cycle_type(d);
    let first: &[Perm] = &classes[d1];
    Ok(exec.sum_u64(first, |g1| {
        u64::from(g1.inverse().compose(&g).cycle_type() == *d2)
    }))
}

/// Exact value of a diagram sum under the character `phi_R`.
pub fn evaluate_phi(shape: &Partition, x: &DiagramSum) -> Result<Rational> {
    let mut out = Rational::zero();
    for (d, c) in x.iter() {
        out += c * characters::phi(shape, d)?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn sum(s: &str) -> DiagramSum {
        s.parse().unwrap()
    }

    #[test]
    fn structure_constants_from_examples() {
        let c = |a: &str, b: &str, d: &str| structure_constant(&p(a), &p(b), &p(d)).unwrap();
        assert_eq!(c("[2]", "[2]", "[1,1]"), BigInt::from(1));
        assert_eq!(c("[2,1]", "[2,1]", "[3]"), BigInt::from(3));
        assert_eq!(c("[2,1]", "[2,1]", "[1,1,1]"), BigInt::from(3));
        assert_eq!(c("[2,1,1]", "[2,1,1]", "[2,2]"), BigInt::from(2));
        assert_eq!(c("[2,1,1]", "[2,1,1]", "[3,1]"), BigInt::from(3));
        assert_eq!(c("[2,1,1]", "[2,1,1]", "[1,1,1,1]"), BigInt::from(6));
        assert!(matches!(
            structure_constant(&p("[2]"), &p("[1]"), &p("[2]")),
            Err(Error::Argument(_))
        ));
    }

    #[test]
    fn same_degree_products() {
        assert_eq!(
            mult_same_degree(&p("[1,1]"), &p("[2]")).unwrap(),
            sum("1*[2]")
        );
        assert_eq!(
            mult_same_degree(&p("[2]"), &p("[2]")).unwrap(),
            sum("1*[1,1]")
        );
        for n in 0..=5 {
            for d in partitions_of(n).unwrap() {
                assert_eq!(
                    mult_same_degree(&Partition::ones(n), &d).unwrap(),
                    DiagramSum::from(d.clone())
                );
            }
        }
    }

    #[test]
    fn infinity_products_from_examples() {
        assert_eq!(
            mult_infinity(&p("[1]"), &p("[2]")).unwrap(),
            sum("2*[2] + 1*[2,1]")
        );
        assert_eq!(
            mult_infinity(&p("[2]"), &p("[2]")).unwrap(),
            sum("1*[1,1] + 3*[3] + 2*[2,2]")
        );
        assert_eq!(
            mult_infinity(&p("[1]"), &p("[1]")).unwrap(),
            sum("1*[1] + 2*[1,1]")
        );
        let pieces = graded_pieces(&p("[1]"), &p("[1]")).unwrap();
        assert_eq!(pieces[0], sum("1*[1]"));
        assert_eq!(pieces[1], sum("2*[1,1]"));
        assert_eq!(mult_infinity(&p("[]"), &p("[3]")).unwrap(), sum("1*[3]"));
    }

    #[test]
    fn sums() {
        assert!(mult_sum(&DiagramSum::zero(), &sum("[2]"))
            .unwrap()
            .is_zero());
        assert_eq!(
            mult_sum(&sum("2*[2]"), &sum("[1]")).unwrap(),
            sum("4*[2] + 2*[2,1]")
        );
        let lhs = mult_sum(&sum("[1] + [2]"), &sum("[2]")).unwrap();
        let rhs = mult_infinity(&p("[1]"), &p("[2]"))
            .unwrap()
            .add(&mult_infinity(&p("[2]"), &p("[2]")).unwrap());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn oracle_small_cases() {
        let o = |a: &str, b: &str, d: &str| oracle_structure_constant(&p(a), &p(b), &p(d)).unwrap();
        assert_eq!(o("[2]", "[2]", "[1,1]"), 1);
        assert_eq!(o("[2,1]", "[2,1]", "[3]"), 3);
        assert_eq!(o("[3]", "[3]", "[1,1,1]"), 2);
        assert!(matches!(
            oracle_structure_constant(&p("[7]"), &p("[7]"), &p("[7]")),
            Err(Error::Resource(_))
        ));
    }

    #[test]
    fn phi_of_squares() {
        // [1][1] = [1] + 2[1,1] means |R|^2 = |R| + 2 phi_R([1,1])
        let prod = mult_infinity(&p("[1]"), &p("[1]")).unwrap();
        for shape in partitions_of(5).unwrap() {
            assert_eq!(evaluate_phi(&shape, &prod).unwrap(), int(25));
        }
    }
}
