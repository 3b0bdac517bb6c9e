//! The operators `W(D)` on polynomials in the power sums.
//!
//! Every `W(D)` is diagonal on Schur functions with eigenvalue
//! `phi_R(D)`, which gives the spectral action for arbitrary `D`. The six
//! operators with `|D| <= 3` are also available as explicit differential
//! operators in the `p_k`, applied term by term.

use std::collections::HashMap;

use num_traits::Zero;

use crate::characters;
use crate::class_algebra;
use crate::diagram_sum::DiagramSum;
use crate::error::Result;
use crate::partition::Partition;
use crate::psym::{self, Monomial, PPoly};
use crate::rational::{self, Rational};

/// Eigenvalue of `W(D)` on `s_R`.
pub fn eigenvalue(d: &Partition, shape: &Partition) -> Result<Rational> {
    characters::phi(shape, d)
}

/// `W(x) f` for a diagram or a linear combination of diagrams, computed in
/// the Schur basis.
pub fn apply_spectral(x: impl Into<DiagramSum>, f: &PPoly) -> Result<PPoly> {
    let x = x.into();
    let mut coeffs = psym::schur_expand(f)?;
    for (shape, c) in coeffs.iter_mut() {
        *c *= class_algebra::evaluate_phi(shape, &x)?;
    }
    coeffs.retain(|_, c| !c.is_zero());
    let out = psym::from_schur(&coeffs)?;
    Ok(match f.bound() {
        Some(b) => out.truncate(b),
        None => out,
    })
}

/// Returns `(W(D1) W(D2) f, W(D1 D2) f)`; the two must coincide because
/// `D -> W(D)` is an algebra homomorphism.
pub fn compose_check(d1: &Partition, d2: &Partition, f: &PPoly) -> Result<(PPoly, PPoly)> {
    let sequential = apply_spectral(d1.clone(), &apply_spectral(d2.clone(), f)?)?;
    let product = class_algebra::mult_infinity(d1, d2)?;
    let direct = apply_spectral(product, f)?;
    Ok((sequential, direct))
}

/// One summand family of an explicit operator:
/// `sum over indices i in 1.. of coef(i) * prod p_{factor(i)} * prod d/dp_{deriv(i)}`,
/// where each factor and derivative index is a linear form in the
/// summation indices. Tuples where any form is below 1 are skipped.
#[derive(Clone, Copy)]
pub struct DiffTerm {
    pub arity: usize,
    pub coef: fn(&[i64]) -> Rational,
    pub factors: &'static [&'static [i64]],
    pub derivs: &'static [&'static [i64]],
}

/// An explicit differential operator for one of the diagrams of degree at
/// most 3.
#[derive(Clone)]
pub struct DiffOpSpec {
    pub op: Partition,
    pub terms: Vec<DiffTerm>,
}

fn q(num: i64, den: i64) -> Rational {
    rational::ratio(num, den)
}

const A: &[i64] = &[1];
const A2: &[i64] = &[1, 0];
const B2: &[i64] = &[0, 1];
const AB2: &[i64] = &[1, 1];
const A3: &[i64] = &[1, 0, 0];
const B3: &[i64] = &[0, 1, 0];
const C3: &[i64] = &[0, 0, 1];
const AB3: &[i64] = &[1, 1, 0];
const BC3: &[i64] = &[0, 1, 1];
const ABC3: &[i64] = &[1, 1, 1];
/// `d = a + b - c` for the `a+b = c+d` family.
const D3: &[i64] = &[1, 1, -1];

impl DiffOpSpec {
    /// `W([1]) = sum_k k p_k d/dp_k`.
    pub fn w1() -> Self {
        DiffOpSpec {
            op: Partition::from_multiset(vec![1]),
            terms: vec![DiffTerm {
                arity: 1,
                coef: |i| rational::int(i[0]),
                factors: &[A],
                derivs: &[A],
            }],
        }
    }

    /// The cut-and-join operator
    /// `W([2]) = 1/2 sum_{a,b} ((a+b) p_a p_b d/dp_{a+b} + ab p_{a+b} d2/dp_a dp_b)`.
    pub fn w2() -> Self {
        DiffOpSpec {
            op: Partition::from_multiset(vec![2]),
            terms: vec![
                DiffTerm {
                    arity: 2,
                    coef: |i| q(i[0] + i[1], 2),
                    factors: &[A2, B2],
                    derivs: &[AB2],
                },
                DiffTerm {
                    arity: 2,
                    coef: |i| q(i[0] * i[1], 2),
                    factors: &[AB2],
                    derivs: &[A2, B2],
                },
            ],
        }
    }

    pub fn w11() -> Self {
        DiffOpSpec {
            op: Partition::from_multiset(vec![1, 1]),
            terms: vec![
                DiffTerm {
                    arity: 1,
                    coef: |i| q(i[0] * (i[0] - 1), 2),
                    factors: &[A],
                    derivs: &[A],
                },
                DiffTerm {
                    arity: 2,
                    coef: |i| q(i[0] * i[1], 2),
                    factors: &[A2, B2],
                    derivs: &[A2, B2],
                },
            ],
        }
    }

    pub fn w3() -> Self {
        DiffOpSpec {
            op: Partition::from_multiset(vec![3]),
            terms: vec![
                DiffTerm {
                    arity: 3,
                    coef: |i| q(i[0] * i[1] * i[2], 3),
                    factors: &[ABC3],
                    derivs: &[A3, B3, C3],
                },
                // indices (a, b, c) with d = a + b - c; excludes (c, d) = (a, b)
                DiffTerm {
                    arity: 3,
                    coef: |i| {
                        let (a, b, c) = (i[0], i[1], i[2]);
                        if a == c {
                            Rational::zero()
                        } else {
                            q(c * (a + b - c), 2)
                        }
                    },
                    factors: &[A3, B3],
                    derivs: &[C3, D3],
                },
                DiffTerm {
                    arity: 3,
                    coef: |i| q(i[0] + i[1] + i[2], 3),
                    factors: &[A3, B3, C3],
                    derivs: &[ABC3],
                },
                DiffTerm {
                    arity: 3,
                    coef: |i| q(i[0] + i[1] + i[2], 3),
                    factors: &[ABC3],
                    derivs: &[ABC3],
                },
            ],
        }
    }

    pub fn w21() -> Self {
        DiffOpSpec {
            op: Partition::from_multiset(vec![2, 1]),
            terms: vec![
                DiffTerm {
                    arity: 2,
                    coef: |i| {
                        let s = i[0] + i[1];
                        q(s * (s - 2), 2)
                    },
                    factors: &[A2, B2],
                    derivs: &[AB2],
                },
                DiffTerm {
                    arity: 2,
                    coef: |i| q(i[0] * i[1] * (i[0] + i[1] - 2), 2),
                    factors: &[AB2],
                    derivs: &[A2, B2],
                },
                DiffTerm {
                    arity: 3,
                    coef: |i| q((i[0] + i[1]) * i[2], 2),
                    factors: &[A3, B3, C3],
                    derivs: &[AB3, C3],
                },
                DiffTerm {
                    arity: 3,
                    coef: |i| q(i[0] * i[1] * i[2], 2),
                    factors: &[A3, BC3],
                    derivs: &[A3, B3, C3],
                },
            ],
        }
    }

    pub fn w111() -> Self {
        DiffOpSpec {
            op: Partition::from_multiset(vec![1, 1, 1]),
            terms: vec![
                DiffTerm {
                    arity: 1,
                    coef: |i| q(i[0] * (i[0] - 1) * (i[0] - 2), 6),
                    factors: &[A],
                    derivs: &[A],
                },
                DiffTerm {
                    arity: 2,
                    coef: |i| q(i[0] * i[1] * (i[0] + i[1] - 2), 4),
                    factors: &[A2, B2],
                    derivs: &[A2, B2],
                },
                DiffTerm {
                    arity: 3,
                    coef: |i| q(i[0] * i[1] * i[2], 6),
                    factors: &[A3, B3, C3],
                    derivs: &[A3, B3, C3],
                },
            ],
        }
    }

    /// All six explicit operators, ordered `[1], [2], [1,1], [3], [2,1], [1,1,1]`.
    pub fn all() -> Vec<Self> {
        vec![
            Self::w1(),
            Self::w2(),
            Self::w11(),
            Self::w3(),
            Self::w21(),
            Self::w111(),
        ]
    }

    pub fn for_diagram(d: &Partition) -> Option<Self> {
        Self::all().into_iter().find(|s| &s.op == d)
    }

    /// Term-by-term application. Summation indices run over `1..=deg f`;
    /// larger derivatives vanish.
    pub fn apply(&self, f: &PPoly) -> PPoly {
        let top = f.max_degree().unwrap_or(0) as i64;
        let mut out = PPoly::zero();
        let mut derivatives: HashMap<Partition, PPoly> = HashMap::new();
        for term in &self.terms {
            let mut idx = vec![1i64; term.arity];
            if top == 0 {
                break;
            }
            loop {
                if let Some(piece) = term_at(term, &idx, top, f, &mut derivatives) {
                    out.add_scaled(&piece, &rational::int(1));
                }
                if !advance(&mut idx, top) {
                    break;
                }
            }
        }
        match f.bound() {
            Some(b) => out.truncate(b),
            None => out,
        }
    }
}

fn eval_form(form: &[i64], idx: &[i64]) -> i64 {
    form.iter().zip(idx).map(|(c, i)| c * i).sum()
}

fn term_at(
    term: &DiffTerm,
    idx: &[i64],
    top: i64,
    f: &PPoly,
    derivatives: &mut HashMap<Partition, PPoly>,
) -> Option<PPoly> {
    let mut derivs = Vec::with_capacity(term.derivs.len());
    for form in term.derivs {
        let k = eval_form(form, idx);
        if k < 1 || k > top {
            return None;
        }
        derivs.push(k as u32);
    }
    let mut factors = Vec::with_capacity(term.factors.len());
    for form in term.factors {
        let k = eval_form(form, idx);
        if k < 1 {
            return None;
        }
        factors.push(k as u32);
    }
    let coef = (term.coef)(idx);
    if coef.is_zero() {
        return None;
    }
    let key = Partition::from_multiset(derivs);
    let g = derivatives
        .entry(key.clone())
        .or_insert_with(|| {
            key.parts()
                .iter()
                .fold(f.clone().unbounded(), |acc, &k| acc.derivative(k))
        })
        .clone();
    if g.is_zero() {
        return None;
    }
    let mut factor = PPoly::zero();
    factor.add_term(Monomial(Partition::from_multiset(factors)), coef);
    Some(factor.mul(&g))
}

/// Odometer over `1..=top` in every slot.
fn advance(idx: &mut [i64], top: i64) -> bool {
    for slot in idx.iter_mut() {
        if *slot < top {
            *slot += 1;
            return true;
        }
        *slot = 1;
    }
    false
}

/// `W(D) f` with the explicit operator for `D`, if `|D| <= 3`.
pub fn apply_explicit(spec: &DiffOpSpec, f: &PPoly) -> PPoly {
    spec.apply(f)
}
