//! Disconnected genus-0 Hurwitz numbers and their generating function.
//!
//! Normalization: `<D_1, .., D_k>` is `1/n!` times the number of tuples
//! `(g_1, .., g_k)` in S_n with `g_i` of cycle type `D_i` and
//! `g_1 ... g_k = 1`. With this convention
//! `<D1, D2, D3> = C^{D3}_{D1,D2} / z_{D3}` where `z` is the centralizer
//! order, and brackets glue along an intermediate class with weight `z`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::characters::{self, MAX_TABLE_DEGREE};
use crate::class_algebra;
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::partition::{partitions_of, Partition};
use crate::perm::{conjugacy_classes, Perm};
use crate::psym::{self, PPoly};
use crate::rational::{self, Rational};
use crate::w_ops;

/// Largest degree accepted by the tuple-count oracle.
pub const ORACLE_MAX_DEGREE: u32 = 6;

fn common_degree(classes: &[Partition]) -> Result<u32> {
    let n = classes
        .first()
        .ok_or_else(|| Error::Argument("at least one class is required".into()))?
        .degree();
    if let Some(bad) = classes.iter().find(|d| d.degree() != n) {
        return Err(Error::Argument(format!(
            "all classes must have degree {n}, {bad} has degree {}",
            bad.degree()
        )));
    }
    Ok(n)
}

fn z(d: &Partition) -> Rational {
    rational::big(d.aut_order())
}

/// `<D1, D2, D3> = C^{D3}_{D1,D2} / z_{D3}`.
pub fn hurwitz3(d1: &Partition, d2: &Partition, d3: &Partition) -> Result<Rational> {
    let c = class_algebra::structure_constant(d1, d2, d3)?;
    Ok(rational::big(c) / z(d3))
}

/// Chain contraction of three-point numbers for `k >= 3` classes:
/// `sum <D1,D2,U1> z_U1 <U1,D3,U2> z_U2 ... <U_{k-3},D_{k-1},D_k>`.
pub fn hurwitz_chain(classes: &[Partition]) -> Result<Rational> {
    let k = classes.len();
    if k < 3 {
        return Err(Error::Argument(format!(
            "chain formula needs at least 3 classes, got {k}"
        )));
    }
    let n = common_degree(classes)?;
    if k == 3 {
        return hurwitz3(&classes[0], &classes[1], &classes[2]);
    }
    let basis = partitions_of(n)?;
    let mut weights: Vec<Rational> = basis
        .iter()
        .map(|u| Ok(hurwitz3(&classes[0], &classes[1], u)? * z(u)))
        .collect::<Result<_>>()?;
    for middle in &classes[2..k - 2] {
        let mut next = vec![Rational::zero(); basis.len()];
        for (u, w) in basis.iter().zip(&weights) {
            if w.is_zero() {
                continue;
            }
            for (v, slot) in basis.iter().zip(next.iter_mut()) {
                *slot += w * hurwitz3(u, middle, v)? * z(v);
            }
        }
        weights = next;
    }
    let mut total = Rational::zero();
    for (u, w) in basis.iter().zip(&weights) {
        if !w.is_zero() {
            total += w * hurwitz3(u, &classes[k - 2], &classes[k - 1])?;
        }
    }
    Ok(total)
}

/// `<D_1, .., D_k>` for any `k >= 1`.
pub fn hurwitz_bracket(classes: &[Partition]) -> Result<Rational> {
    let n = common_degree(classes)?;
    match classes {
        [d] => Ok(if *d == Partition::ones(n) {
            Rational::new(BigInt::from(1), rational::factorial(n))
        } else {
            Rational::zero()
        }),
        [a, b] => Ok(if a == b {
            Rational::new(BigInt::from(1), a.aut_order())
        } else {
            Rational::zero()
        }),
        _ => hurwitz_chain(classes),
    }
}

/// The gluing relation with the cut after position `r` (`1 <= r < k`):
/// `sum_U <D_1..D_r, U> z_U <U, D_{r+1}..D_k>`.
pub fn hurwitz_split(classes: &[Partition], r: usize) -> Result<Rational> {
    let n = common_degree(classes)?;
    if r == 0 || r >= classes.len() {
        return Err(Error::Argument(format!(
            "split position {r} outside 1..{}",
            classes.len()
        )));
    }
    let mut total = Rational::zero();
    for u in partitions_of(n)? {
        let mut left = classes[..r].to_vec();
        left.push(u.clone());
        let mut right = vec![u.clone()];
        right.extend_from_slice(&classes[r..]);
        let l = hurwitz_bracket(&left)?;
        if l.is_zero() {
            continue;
        }
        total += l * z(&u) * hurwitz_bracket(&right)?;
    }
    Ok(total)
}

/// `(1/n!) #{(g_1..g_k) : type(g_i) = classes[i], g_1 ... g_k = 1}` by
/// enumeration of S_n.
pub fn oracle_tuple_count(classes: &[Partition], n: u32) -> Result<Rational> {
    oracle_tuple_count_with(classes, n, Execution::default())
}

pub fn oracle_tuple_count_with(classes: &[Partition], n: u32, exec: Execution) -> Result<Rational> {
    if n > ORACLE_MAX_DEGREE {
        return Err(Error::Resource(format!(
            "tuple enumeration in S_{n} exceeds bound S_{ORACLE_MAX_DEGREE}"
        )));
    }
    if let Some(bad) = classes.iter().find(|d| d.degree() != n) {
        return Err(Error::Argument(format!("{bad} is not a class of S_{n}")));
    }
    let count = match classes {
        [] => 1,
        [only] => u64::from(*only == Partition::ones(n)),
        [first, middle @ .., last] => {
            let by_type = conjugacy_classes(n)?;
            let middle: Vec<&[Perm]> = middle.iter().map(|c| by_type[c].as_slice()).collect();
            exec.sum_u64(&by_type[first], |g| count_paths(*g, &middle, last))
        }
    };
    Ok(Rational::new(BigInt::from(count), rational::factorial(n)))
}

/// Ways to extend `acc` through the middle slots so that the running
/// product has the type of `last` (then `g_k` is forced to be its inverse).
fn count_paths(acc: Perm, middle: &[&[Perm]], last: &Partition) -> u64 {
    match middle.split_first() {
        None => u64::from(acc.cycle_type() == *last),
        Some((slot, rest)) => slot
            .iter()
            .map(|g| count_paths(acc.compose(g), rest, last))
            .sum(),
    }
}

/// Branch data `<(D_1,n_1), .., (D_k,n_k) | D>`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BranchSpec {
    pub degree: u32,
    pub branches: Vec<(Partition, u32)>,
    /// Defaults to `[1^degree]`, an unbranched point.
    pub final_diagram: Option<Partition>,
}

impl BranchSpec {
    pub fn new(final_diagram: Partition, branches: Vec<(Partition, u32)>) -> Result<Self> {
        let spec = BranchSpec {
            degree: final_diagram.degree(),
            branches,
            final_diagram: Some(final_diagram),
        };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        if let Some(d) = &self.final_diagram {
            if d.degree() != self.degree {
                return Err(Error::Argument(format!(
                    "final diagram {d} does not have degree {}",
                    self.degree
                )));
            }
        }
        if let Some((d, _)) = self.branches.iter().find(|(_, m)| *m == 0) {
            return Err(Error::Argument(format!("branch {d} has multiplicity 0")));
        }
        Ok(())
    }

    pub fn final_diagram(&self) -> Partition {
        self.final_diagram
            .clone()
            .unwrap_or_else(|| Partition::ones(self.degree))
    }
}

/// Every marked diagram is padded to `|D|` through `rho` (contributing its
/// binomial coefficient once per occurrence) and the resulting bracket is
/// evaluated; zero when some marked diagram is larger than `D`.
pub fn hurwitz_padded(spec: &BranchSpec) -> Result<Rational> {
    spec.validate()?;
    let last = spec.final_diagram();
    let n = last.degree();
    let mut classes = Vec::new();
    let mut scale = Rational::from_integer(BigInt::from(1));
    for (d, mult) in &spec.branches {
        let Some(k) = n.checked_sub(d.degree()) else {
            return Ok(Rational::zero());
        };
        let coef = rational::big(d.rho_coefficient(k));
        for _ in 0..*mult {
            classes.push(d.pad(k));
            scale *= &coef;
        }
    }
    classes.push(last);
    Ok(scale * hurwitz_bracket(&classes)?)
}

/// Multi-index over the active directions; ordered by total order, then
/// lexicographically descending (`(1,0) < (0,1)`).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BetaIndex(pub Vec<u32>);

impl BetaIndex {
    pub fn total(&self) -> u32 {
        self.0.iter().sum()
    }

    fn bumped(&self, i: usize) -> BetaIndex {
        let mut v = self.0.clone();
        v[i] += 1;
        BetaIndex(v)
    }
}

impl Ord for BetaIndex {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.total()
            .cmp(&other.total())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for BetaIndex {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// All multi-indices of length `k` with total at most `max`.
pub fn beta_indices(k: usize, max: u32) -> Vec<BetaIndex> {
    let mut out = Vec::new();
    let mut current = vec![0u32; k];
    fn rec(pos: usize, left: u32, current: &mut Vec<u32>, out: &mut Vec<BetaIndex>) {
        if pos == current.len() {
            out.push(BetaIndex(current.clone()));
            return;
        }
        for v in 0..=left {
            current[pos] = v;
            rec(pos + 1, left - v, current, out);
        }
        current[pos] = 0;
    }
    rec(0, max, &mut current, &mut out);
    out.sort();
    out
}

/// Truncated expansion of
/// `Z = sum_R d_R exp(sum_U beta_U phi_R(U)) s_R(p)`.
///
/// `component(n)` is the coefficient of `prod beta_U^{n_U} / n_U!`, a
/// polynomial in the power sums; its coefficient on `p_D` is the bracket
/// `<(U_1,n_1), .., | D>` with padded branch types.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HurwitzSeries {
    directions: Vec<Partition>,
    p_bound: u32,
    order: u32,
    components: BTreeMap<BetaIndex, PPoly>,
}

impl HurwitzSeries {
    pub fn directions(&self) -> &[Partition] {
        &self.directions
    }

    pub fn p_bound(&self) -> u32 {
        self.p_bound
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    pub fn component(&self, index: &BetaIndex) -> Option<&PPoly> {
        self.components.get(index)
    }

    pub fn components(&self) -> impl Iterator<Item = (&BetaIndex, &PPoly)> {
        self.components.iter()
    }

    pub fn direction_index(&self, d: &Partition) -> Option<usize> {
        self.directions.iter().position(|u| u == d)
    }

    /// Coefficient of `prod beta^n / n!` on the monomial `p_D`.
    pub fn coefficient(&self, index: &BetaIndex, mono: &Partition) -> Rational {
        self.components
            .get(index)
            .map(|f| f.coeff(mono))
            .unwrap_or_else(Rational::zero)
    }

    /// The branch data matching `(index, D)`.
    pub fn branch_spec(&self, index: &BetaIndex, mono: &Partition) -> BranchSpec {
        BranchSpec {
            degree: mono.degree(),
            branches: self
                .directions
                .iter()
                .zip(&index.0)
                .filter(|(_, &m)| m > 0)
                .map(|(d, &m)| (d.clone(), m))
                .collect(),
            final_diagram: Some(mono.clone()),
        }
    }

    pub fn to_json(&self) -> SeriesJson<'_> {
        SeriesJson(self)
    }
}

pub fn generating_function(
    active: &[Partition],
    p_bound: u32,
    order: u32,
) -> Result<HurwitzSeries> {
    generating_function_with(active, p_bound, order, Execution::default())
}

pub fn generating_function_with(
    active: &[Partition],
    p_bound: u32,
    order: u32,
    exec: Execution,
) -> Result<HurwitzSeries> {
    if p_bound > MAX_TABLE_DEGREE {
        return Err(Error::Resource(format!(
            "p-degree bound {p_bound} exceeds {MAX_TABLE_DEGREE}"
        )));
    }
    let mut directions = active.to_vec();
    directions.sort();
    directions.dedup();
    let indices = beta_indices(directions.len(), order);
    let shapes: Vec<Partition> = (0..=p_bound)
        .map(partitions_of)
        .collect::<Result<Vec<_>>>()?
        .concat();

    let contributions = exec.map(&shapes, |shape| -> Result<Vec<PPoly>> {
        let d = characters::d_r(shape)?;
        let s = psym::schur_from_characters(shape)?;
        let phis = directions
            .iter()
            .map(|u| characters::phi(shape, u))
            .collect::<Result<Vec<_>>>()?;
        Ok(indices
            .iter()
            .map(|idx| {
                let w = idx.0.iter().zip(&phis).fold(d.clone(), |acc, (&m, phi)| {
                    acc * num_traits::pow(phi.clone(), m as usize)
                });
                s.scale(&w)
            })
            .collect())
    });

    let mut components: BTreeMap<BetaIndex, PPoly> = indices
        .iter()
        .map(|idx| (idx.clone(), PPoly::zero().truncate(p_bound)))
        .collect();
    for per_shape in contributions {
        for (idx, piece) in indices.iter().zip(per_shape?) {
            components
                .get_mut(idx)
                .expect("index present")
                .add_scaled(&piece, &rational::int(1));
        }
    }
    Ok(HurwitzSeries {
        directions,
        p_bound,
        order,
        components,
    })
}

/// Largest absolute coefficient of `dZ/dbeta_U - W(U) Z` within the
/// truncation. The left side is read off the stored series by shifting the
/// multi-index; the right side applies `W(U)` to each component afresh.
pub fn pde_residual(direction: &Partition, series: &HurwitzSeries) -> Result<Rational> {
    pde_residual_by(direction, series, |f| {
        w_ops::apply_spectral(direction.clone(), f)
    })
}

/// As [`pde_residual`], with a caller-supplied action of `W(U)`.
pub fn pde_residual_by(
    direction: &Partition,
    series: &HurwitzSeries,
    apply: impl Fn(&PPoly) -> Result<PPoly>,
) -> Result<Rational> {
    let i = series.direction_index(direction).ok_or_else(|| {
        Error::Argument(format!(
            "{direction} is not an active direction of the series"
        ))
    })?;
    let mut worst = Rational::zero();
    for (idx, z_n) in series.components() {
        if idx.total() >= series.order {
            continue;
        }
        let lhs = series
            .component(&idx.bumped(i))
            .expect("shifted index within order");
        let rhs = apply(z_n)?.truncate(series.p_bound);
        for (_, c) in lhs.sub(&rhs).iter() {
            let a = c.abs();
            if a > worst {
                worst = a;
            }
        }
    }
    Ok(worst)
}

/// Disconnected Hurwitz numbers with `m` simple branch points: for every
/// `D` of degree `n`, the coefficient of `beta_[2]^m / m!` on `p_D`.
pub fn simple_hurwitz(n: u32, m: u32) -> Result<BTreeMap<Partition, Rational>> {
    let two = Partition::from_multiset(vec![2]);
    let series = generating_function(std::slice::from_ref(&two), n, m)?;
    let idx = BetaIndex(vec![m]);
    Ok(partitions_of(n)?
        .into_iter()
        .map(|d| {
            let c = series.coefficient(&idx, &d);
            (d, c)
        })
        .collect())
}

/// `{"p_bound": N, "order": M, "terms": [{"beta": {"<U>": k}, "mono": [..], "coef": "a/b"}]}`;
/// `coef` multiplies `prod beta^k / k!` and `p_mono`.
pub struct SeriesJson<'a>(&'a HurwitzSeries);

struct TermsJson<'a>(&'a HurwitzSeries);

struct BetaJson<'a>(&'a [Partition], &'a BetaIndex);

impl Serialize for SeriesJson<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(Some(3))?;
        map.serialize_entry("p_bound", &self.0.p_bound)?;
        map.serialize_entry("order", &self.0.order)?;
        map.serialize_entry("terms", &TermsJson(self.0))?;
        map.end()
    }
}

impl Serialize for TermsJson<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeSeq;
        #[derive(Serialize)]
        struct Term<'a> {
            beta: BetaJson<'a>,
            mono: &'a [u32],
            coef: String,
        }
        let series = self.0;
        let mut seq = s.serialize_seq(None)?;
        for (idx, poly) in series.components() {
            for (mono, c) in poly.iter() {
                seq.serialize_element(&Term {
                    beta: BetaJson(&series.directions, idx),
                    mono: mono.0.parts(),
                    coef: rational::format(c),
                })?;
            }
        }
        seq.end()
    }
}

impl Serialize for BetaJson<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(None)?;
        for (d, &k) in self.0.iter().zip(&self.1 .0) {
            if k > 0 {
                map.serialize_entry(&d.to_string(), &k)?;
            }
        }
        map.end()
    }
}
