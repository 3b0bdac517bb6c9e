//! Symmetric functions as polynomials in the power sums `p_1, p_2, ...`.
//!
//! A monomial `p_L = p_{L_1} p_{L_2} ...` is keyed by the partition `L`,
//! and has graded degree `|L|`. Schur functions are built from the
//! Jacobi–Trudi determinant in the complete homogeneous functions `P_i`,
//! where `exp(sum_k p_k x^k / k) = sum_i P_i x^i`.

use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::characters;
use crate::error::{Error, Result};
use crate::partition::{partitions_of, Partition};
use crate::rational::{self, Rational};

/// The power-sum monomial `p_L`. Ordered by degree, then by the exponent
/// vector `(m_1, m_2, ...)` descending: `p1^3 < p1*p2 < p3`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(pub Partition);

impl Monomial {
    pub fn degree(&self) -> u32 {
        self.0.degree()
    }

    pub fn one() -> Self {
        Monomial(Partition::empty())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| {
            self.0
                .parts()
                .iter()
                .rev()
                .cmp(other.0.parts().iter().rev())
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut mults = self.0.multiplicities();
        mults.reverse();
        for (i, (k, m)) in mults.into_iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            if m == 1 {
                write!(f, "p{k}")?;
            } else {
                write!(f, "p{k}^{m}")?;
            }
        }
        Ok(())
    }
}

/// Sparse polynomial in the power sums with exact rational coefficients and
/// an optional truncation bound on the graded degree.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct PPoly {
    terms: BTreeMap<Monomial, Rational>,
    bound: Option<u32>,
}

impl PPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(rational::int(1))
    }

    pub fn constant(c: Rational) -> Self {
        Self::term(Partition::empty(), c)
    }

    /// `c * p_L`.
    pub fn term(mono: Partition, c: Rational) -> Self {
        let mut out = Self::zero();
        out.add_term(Monomial(mono), c);
        out
    }

    /// The variable `p_k`.
    pub fn p(k: u32) -> Self {
        Self::term(Partition::from_multiset(vec![k]), rational::int(1))
    }

    pub fn bound(&self) -> Option<u32> {
        self.bound
    }

    /// Sets the truncation bound (tightening any existing one) and drops
    /// monomials above it.
    pub fn truncate(mut self, bound: u32) -> Self {
        let b = self.bound.map_or(bound, |old| old.min(bound));
        self.bound = Some(b);
        self.terms.retain(|m, _| m.degree() <= b);
        self
    }

    /// Same terms, no bound.
    pub fn unbounded(mut self) -> Self {
        self.bound = None;
        self
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of nonzero terms.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, mono: &Partition) -> Rational {
        self.terms
            .get(&Monomial(mono.clone()))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn max_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    fn admits(&self, m: &Monomial) -> bool {
        self.bound.is_none_or(|b| m.degree() <= b)
    }

    pub fn add_term(&mut self, mono: Monomial, c: Rational) {
        if c.is_zero() || !self.admits(&mono) {
            return;
        }
        match self.terms.entry(mono) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn combined_bound(&self, other: &PPoly) -> Option<u32> {
        match (self.bound, other.bound) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        }
    }

    /// `self += c * other`; the result carries the tighter bound.
    pub fn add_scaled(&mut self, other: &PPoly, c: &Rational) {
        let bound = self.combined_bound(other);
        if bound != self.bound {
            *self = std::mem::take(self).truncate(bound.expect("bound set"));
        }
        if c.is_zero() {
            return;
        }
        for (m, a) in other.iter() {
            self.add_term(m.clone(), a * c);
        }
    }

    pub fn add(&self, other: &PPoly) -> PPoly {
        let mut out = self.clone();
        out.add_scaled(other, &rational::int(1));
        out
    }

    pub fn sub(&self, other: &PPoly) -> PPoly {
        let mut out = self.clone();
        out.add_scaled(other, &rational::int(-1));
        out
    }

    pub fn scale(&self, c: &Rational) -> PPoly {
        let mut out = PPoly {
            terms: BTreeMap::new(),
            bound: self.bound,
        };
        out.add_scaled(self, c);
        out
    }

    pub fn mul(&self, other: &PPoly) -> PPoly {
        let mut out = PPoly {
            terms: BTreeMap::new(),
            bound: self.combined_bound(other),
        };
        for (ma, a) in self.iter() {
            for (mb, b) in other.iter() {
                if out.bound.is_some_and(|bd| ma.degree() + mb.degree() > bd) {
                    continue;
                }
                out.add_term(Monomial(ma.0.merge(&mb.0)), a * b);
            }
        }
        out
    }

    pub fn pow(&self, e: u32) -> PPoly {
        let mut out = PPoly::one();
        out.bound = self.bound;
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// `d/dp_k`.
    pub fn derivative(&self, k: u32) -> PPoly {
        let mut out = PPoly {
            terms: BTreeMap::new(),
            bound: self.bound,
        };
        for (m, c) in self.iter() {
            let mult = m.0.multiplicity(k);
            if mult == 0 {
                continue;
            }
            let rest = m.0.without_part(k).expect("part present");
            out.add_term(Monomial(rest), c * rational::int(mult as i64));
        }
        out
    }

    /// Homogeneous component of degree `n`.
    pub fn graded(&self, n: u32) -> PPoly {
        PPoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == n)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
            bound: self.bound,
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        match degrees.next() {
            Some(d) => degrees.all(|e| e == d),
            None => true,
        }
    }

    pub fn to_json(&self) -> PPolyJson {
        PPolyJson {
            bound: self.bound,
            terms: self
                .iter()
                .map(|(m, c)| TermJson {
                    mono: m.0.parts().to_vec(),
                    coef: rational::format(c),
                })
                .collect(),
        }
    }

    pub fn from_json(json: &PPolyJson) -> Result<PPoly> {
        let mut out = PPoly {
            terms: BTreeMap::new(),
            bound: json.bound,
        };
        for t in &json.terms {
            let mono = Partition::new(t.mono.clone())?;
            if !out.admits(&Monomial(mono.clone())) {
                return Err(Error::Argument(format!(
                    "monomial of degree {} above bound",
                    mono.degree()
                )));
            }
            out.add_term(Monomial(mono), rational::parse(&t.coef, 0)?);
        }
        Ok(out)
    }
}

/// JSON form: `{"bound": N|null, "terms": [{"mono": [parts], "coef": "a/b"}]}`.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct PPolyJson {
    pub bound: Option<u32>,
    pub terms: Vec<TermJson>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct TermJson {
    pub mono: Vec<u32>,
    pub coef: String,
}

impl fmt::Display for PPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if m.0.is_empty() {
                f.write_str(&rational::format(c))?;
            } else {
                write!(f, "{}*{}", rational::format(c), m)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for PPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)?;
        if let Some(b) = self.bound {
            write!(f, " (deg <= {b})")?;
        }
        Ok(())
    }
}

impl FromStr for PPoly {
    type Err = Error;

    /// Terms separated by `+`; each term is `coef`, `coef*mono` or `mono`,
    /// with `mono` a `*`-separated product of `pK` or `pK^E`.
    fn from_str(s: &str) -> Result<Self> {
        let mut out = PPoly::zero();
        let mut offset = 0;
        for piece in s.split('+') {
            let at = offset;
            offset += piece.len() + 1;
            let mut coef = rational::int(1);
            let mut parts = Vec::new();
            let mut local = 0;
            for (idx, factor) in piece.split('*').enumerate() {
                let pos = at + local;
                local += factor.len() + 1;
                let t = factor.trim();
                if t.is_empty() {
                    return Err(Error::parse(pos, "empty factor"));
                }
                let Some(var) = t.strip_prefix('p') else {
                    if idx != 0 {
                        return Err(Error::parse(pos, format!("expected pK, found {t:?}")));
                    }
                    coef = rational::parse(t, pos)?;
                    continue;
                };
                let (index, exp) = match var.split_once('^') {
                    Some((i, e)) => (i, e),
                    None => (var, "1"),
                };
                let index: u32 = index
                    .trim()
                    .parse()
                    .ok()
                    .filter(|&k| k > 0)
                    .ok_or_else(|| Error::parse(pos, format!("bad variable {t:?}")))?;
                let exp: usize = exp
                    .trim()
                    .parse()
                    .map_err(|_| Error::parse(pos, format!("bad exponent in {t:?}")))?;
                parts.extend(std::iter::repeat_n(index, exp));
            }
            out.add_term(Monomial(Partition::from_multiset(parts)), coef);
        }
        Ok(out)
    }
}

/// `p(D) = kappa(D) p_D`.
pub fn p_monomial(d: &Partition) -> PPoly {
    PPoly::term(d.clone(), d.kappa())
}

/// `P_i` with `exp(sum_k p_k x^k / k) = sum_i P_i x^i`, via Newton's
/// recurrence `i P_i = sum_{k=1..i} p_k P_{i-k}`.
pub fn complete_homogeneous(i: u32) -> PPoly {
    let mut hs = vec![PPoly::one()];
    for m in 1..=i {
        let mut acc = PPoly::zero();
        for k in 1..=m {
            acc = acc.add(&PPoly::p(k).mul(&hs[(m - k) as usize]));
        }
        hs.push(acc.scale(&rational::ratio(1, m as i64)));
    }
    hs.pop().expect("P_0 present")
}

/// Jacobi–Trudi: `s_R = det[P_{R_i + j - i}]`.
pub fn schur(shape: &Partition) -> PPoly {
    let l = shape.len();
    if l == 0 {
        return PPoly::one();
    }
    let top = shape.parts()[0] + l as u32;
    let hs: Vec<PPoly> = (0..=top).map(complete_homogeneous).collect();
    let entry = |i: usize, j: usize| -> Option<&PPoly> {
        let idx = shape.parts()[i] as i64 + j as i64 - i as i64;
        (idx >= 0).then(|| &hs[idx as usize])
    };
    let mut memo: HashMap<(usize, u32), PPoly> = HashMap::new();
    determinant(0, 0, l, &entry, &mut memo)
}

/// Laplace expansion along row `row` over the columns not in `used`.
fn determinant<'a>(
    row: usize,
    used: u32,
    l: usize,
    entry: &dyn Fn(usize, usize) -> Option<&'a PPoly>,
    memo: &mut HashMap<(usize, u32), PPoly>,
) -> PPoly {
    if row == l {
        return PPoly::one();
    }
    if let Some(hit) = memo.get(&(row, used)) {
        return hit.clone();
    }
    let mut out = PPoly::zero();
    let mut sign = 1i64;
    for col in 0..l {
        if used & (1 << col) != 0 {
            continue;
        }
        if let Some(e) = entry(row, col).filter(|e| !e.is_zero()) {
            let minor = determinant(row + 1, used | (1 << col), l, entry, memo);
            if !minor.is_zero() {
                out.add_scaled(&e.mul(&minor), &rational::int(sign));
            }
        }
        sign = -sign;
    }
    memo.insert((row, used), out.clone());
    out
}

/// Coefficients `c_R` with `f = sum_R c_R s_R`, degree by degree, using
/// `p_L = sum_{|R|=|L|} chi_R(L) s_R`.
pub fn schur_expand(f: &PPoly) -> Result<BTreeMap<Partition, Rational>> {
    let mut out: BTreeMap<Partition, Rational> = BTreeMap::new();
    for (m, a) in f.iter() {
        let table = characters::table(m.degree())?;
        let col = table.position(&m.0).expect("class present");
        for (shape, row) in table.order().iter().zip(table.rows()) {
            if row[col] != 0 {
                *out.entry(shape.clone()).or_insert_with(Rational::zero) +=
                    a * rational::int(row[col]);
            }
        }
    }
    out.retain(|_, c| !c.is_zero());
    Ok(out)
}

/// `sum_R c_R s_R`, with `s_R = sum_L chi_R(L) p_L / z_L`.
pub fn from_schur(coeffs: &BTreeMap<Partition, Rational>) -> Result<PPoly> {
    let mut out = PPoly::zero();
    for (shape, c) in coeffs {
        if c.is_zero() {
            continue;
        }
        let table = characters::table(shape.degree())?;
        let row = table.row(shape);
        for (class, &chi) in table.order().iter().zip(row) {
            if chi != 0 {
                out.add_term(
                    Monomial(class.clone()),
                    c * rational::int(chi) * class.kappa(),
                );
            }
        }
    }
    Ok(out)
}

/// Schur function through the character table rather than Jacobi–Trudi.
pub fn schur_from_characters(shape: &Partition) -> Result<PPoly> {
    from_schur(&BTreeMap::from([(shape.clone(), rational::int(1))]))
}

/// `sum_{n <= bound} p_1^n / n!`, carrying the bound.
pub fn exp_p1(bound: u32) -> PPoly {
    let mut out = PPoly::zero().truncate(bound);
    for n in 0..=bound {
        out.add_term(
            Monomial(Partition::ones(n)),
            Rational::new(BigInt::one(), rational::factorial(n)),
        );
    }
    out
}

/// Determinant of a square rational matrix by Gaussian elimination.
pub fn rational_det(mut m: Vec<Vec<Rational>>) -> Rational {
    let n = m.len();
    let mut det = rational::int(1);
    for c in 0..n {
        let Some(pivot) = (c..n).find(|&r| !m[r][c].is_zero()) else {
            return Rational::zero();
        };
        if pivot != c {
            m.swap(pivot, c);
            det = -det;
        }
        let pv = m[c][c].clone();
        det *= &pv;
        for r in (c + 1)..n {
            if m[r][c].is_zero() {
                continue;
            }
            let factor = &m[r][c] / &pv;
            let (upper, lower) = m.split_at_mut(r);
            for (x, y) in lower[0][c..].iter_mut().zip(&upper[c][c..]) {
                *x -= &factor * y;
            }
        }
    }
    det
}

/// `s_R(x_1..x_n) = det[x_i^{R_j+n-j}] / det[x_i^{n-j}]`.
pub fn bialternant_eval(shape: &Partition, xs: &[Rational]) -> Result<Rational> {
    let n = xs.len();
    if n < shape.len() {
        return Err(Error::Argument(format!(
            "{shape} needs at least {} points, got {n}",
            shape.len()
        )));
    }
    for i in 0..n {
        if xs[i + 1..].contains(&xs[i]) {
            return Err(Error::Argument(format!(
                "evaluation points must be distinct, {} repeats",
                rational::format(&xs[i])
            )));
        }
    }
    let part = |j: usize| shape.parts().get(j).copied().unwrap_or(0);
    let alternant = |exps: &dyn Fn(usize) -> u32| -> Rational {
        let m = xs
            .iter()
            .map(|x| {
                (0..n)
                    .map(|j| num_traits::pow(x.clone(), exps(j) as usize))
                    .collect()
            })
            .collect();
        rational_det(m)
    };
    let num = alternant(&|j| part(j) + (n - 1 - j) as u32);
    let den = alternant(&|j| (n - 1 - j) as u32);
    Ok(num / den)
}

/// Substitutes `p_k = sum_j x_j^k`.
pub fn eval_at_power_sums(f: &PPoly, xs: &[Rational]) -> Rational {
    let top = f.max_degree().unwrap_or(0);
    let power_sums: Vec<Rational> = (0..=top)
        .map(|k| {
            xs.iter()
                .map(|x| num_traits::pow(x.clone(), k as usize))
                .fold(Rational::zero(), |a, b| a + b)
        })
        .collect();
    f.iter()
        .map(|(m, c)| {
            m.0.parts()
                .iter()
                .fold(c.clone(), |acc, &k| acc * &power_sums[k as usize])
        })
        .fold(Rational::zero(), |a, b| a + b)
}

/// All Schur functions of degree `n`, in canonical order.
pub fn schur_basis(n: u32) -> Result<Vec<(Partition, PPoly)>> {
    Ok(partitions_of(n)?
        .into_iter()
        .map(|r| {
            let s = schur(&r);
            (r, s)
        })
        .collect())
}
