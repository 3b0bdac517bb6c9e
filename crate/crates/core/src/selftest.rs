//! Randomized cross-checks of the fast paths against the enumeration
//! oracles. Sampling is seeded, so a report is a pure function of
//! `(suite, seed)`.

use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::characters::{CharTableCache, CharacterTable};
use crate::class_algebra;
use crate::error::{Error, Result};
use crate::hurwitz;
use crate::partition::{partitions_in_range, partitions_of, Partition};
use crate::psym::{self, PPoly};
use crate::rational;
use crate::w_ops::{self, DiffOpSpec};

pub const DEFAULT_SEED: u64 = 0x5eed_d1a6;

/// Failures kept per check; the count is always exact.
const MAX_REPORTED_FAILURES: usize = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Quick,
    Full,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Quick => "quick",
            Suite::Full => "full",
        }
    }

    pub fn max_degree(self) -> u32 {
        match self {
            Suite::Quick => 4,
            Suite::Full => 6,
        }
    }

    fn samples(self) -> usize {
        match self {
            Suite::Quick => 8,
            Suite::Full => 24,
        }
    }
}

impl std::str::FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "quick" => Ok(Suite::Quick),
            "full" => Ok(Suite::Full),
            other => Err(Error::Argument(format!(
                "unknown suite {other:?}, expected quick or full"
            ))),
        }
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct CheckResult {
    pub name: &'static str,
    pub cases: u64,
    pub failed: u64,
    pub failures: Vec<String>,
}

impl CheckResult {
    fn new(name: &'static str) -> Self {
        CheckResult {
            name,
            cases: 0,
            failed: 0,
            failures: Vec::new(),
        }
    }

    fn record(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failed += 1;
            if self.failures.len() < MAX_REPORTED_FAILURES {
                self.failures.push(describe());
            }
        }
    }

    fn record_result(&mut self, r: Result<bool>, describe: impl FnOnce() -> String) {
        match r {
            Ok(ok) => self.record(ok, describe),
            Err(e) => self.record(false, || format!("{}: {e}", describe())),
        }
    }
}

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
pub struct SelftestReport {
    pub suite: &'static str,
    pub seed: u64,
    pub max_degree: u32,
    pub passed: bool,
    pub checks: Vec<CheckResult>,
}

pub fn run(suite: Suite, seed: u64, cache: Option<&CharTableCache>) -> Result<SelftestReport> {
    let n_max = suite.max_degree();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let checks = vec![
        check_kappa(n_max)?,
        check_tables(n_max, cache)?,
        check_structure_constants(n_max)?,
        check_hurwitz(suite, &mut rng)?,
        check_schur(n_max)?,
        check_operators(suite, &mut rng)?,
        check_series(n_max)?,
    ];
    Ok(SelftestReport {
        suite: suite.name(),
        seed,
        max_degree: n_max,
        passed: checks.iter().all(|c| c.failed == 0),
        checks,
    })
}

fn check_kappa(n_max: u32) -> Result<CheckResult> {
    let mut check = CheckResult::new("kappa_times_aut");
    for d in partitions_in_range(0, n_max)? {
        let prod = d.kappa() * rational::big(d.aut_order());
        check.record(prod == rational::int(1), || format!("{d}: {prod}"));
    }
    Ok(check)
}

fn check_tables(n_max: u32, cache: Option<&CharTableCache>) -> Result<CheckResult> {
    let mut check = CheckResult::new("character_orthogonality");
    for n in 1..=n_max {
        let table = match cache {
            Some(c) => c.char_table(n)?,
            None => std::sync::Arc::new(CharacterTable::compute(n)?),
        };
        let r = table.verify_orthogonality();
        check.record(r.is_ok(), || format!("S_{n}: {}", r.unwrap_err()));
    }
    Ok(check)
}

fn check_structure_constants(n_max: u32) -> Result<CheckResult> {
    let mut check = CheckResult::new("structure_constants_vs_enumeration");
    for n in 1..=n_max.min(class_algebra::ORACLE_MAX_DEGREE) {
        let classes = partitions_of(n)?;
        for a in &classes {
            for b in &classes {
                for c in &classes {
                    let fast = class_algebra::structure_constant(a, b, c);
                    let slow = class_algebra::oracle_structure_constant(a, b, c)?;
                    check.record_result(fast.map(|f| f == slow.into()), || {
                        format!("C^{c}_({a},{b})")
                    });
                }
            }
        }
    }
    Ok(check)
}

fn random_class(rng: &mut ChaCha8Rng, classes: &[Partition]) -> Partition {
    classes.choose(rng).expect("nonempty class list").clone()
}

fn check_hurwitz(suite: Suite, rng: &mut ChaCha8Rng) -> Result<CheckResult> {
    let mut check = CheckResult::new("hurwitz_chain_vs_enumeration");
    for _ in 0..suite.samples() {
        // four-point enumeration in S_6 is slow, so those samples stay in S_5
        let k = rng.random_range(3..=4usize);
        let top = if k == 4 {
            suite.max_degree().min(5)
        } else {
            suite.max_degree()
        };
        let n = rng.random_range(1..=top);
        let classes = partitions_of(n)?;
        let tuple: Vec<Partition> = (0..k).map(|_| random_class(rng, &classes)).collect();
        let chain = hurwitz::hurwitz_chain(&tuple)?;
        let oracle = hurwitz::oracle_tuple_count(&tuple, n)?;
        let r = rng.random_range(1..k);
        let split = hurwitz::hurwitz_split(&tuple, r)?;
        check.record(chain == oracle && split == chain, || {
            format!("{tuple:?}: chain {chain}, split@{r} {split}, enumeration {oracle}")
        });
    }
    Ok(check)
}

fn check_schur(n_max: u32) -> Result<CheckResult> {
    let mut check = CheckResult::new("schur_determinant_vs_characters");
    for shape in partitions_in_range(0, n_max)? {
        let jt = psym::schur(&shape);
        let by_chars = psym::schur_from_characters(&shape)?;
        check.record(jt == by_chars, || format!("s_{shape}"));
    }
    Ok(check)
}

fn check_operators(suite: Suite, rng: &mut ChaCha8Rng) -> Result<CheckResult> {
    let mut check = CheckResult::new("operator_explicit_vs_spectral");
    let monomials = partitions_in_range(0, suite.max_degree())?;
    for spec in DiffOpSpec::all() {
        for _ in 0..suite.samples() {
            let mono = random_class(rng, &monomials);
            let f = psym::p_monomial(&mono);
            let explicit = w_ops::apply_explicit(&spec, &f);
            let spectral = w_ops::apply_spectral(spec.op.clone(), &f);
            check.record_result(spectral.map(|s| s == explicit), || {
                format!("W({}) on p{mono}", spec.op)
            });
        }
    }
    Ok(check)
}

fn check_series(n_max: u32) -> Result<CheckResult> {
    let mut check = CheckResult::new("generating_function_equation");
    let directions: Vec<Partition> = ["[1]", "[2]", "[3]"]
        .iter()
        .map(|s| s.parse())
        .collect::<Result<_>>()?;
    let z = hurwitz::generating_function(&directions, n_max, 2)?;
    for d in &directions {
        let residual = hurwitz::pde_residual(d, &z)?;
        check.record(residual == rational::int(0), || {
            format!("W({d}): residual {residual}")
        });
        if let Some(spec) = DiffOpSpec::for_diagram(d) {
            let residual = hurwitz::pde_residual_by(d, &z, |f: &PPoly| Ok(spec.apply(f)))?;
            check.record(residual == rational::int(0), || {
                format!("explicit W({d}): residual {residual}")
            });
        }
    }
    for (idx, poly) in z.components() {
        for (mono, c) in poly.iter() {
            let spec = z.branch_spec(idx, &mono.0);
            let r = hurwitz::hurwitz_padded(&spec).map(|v| v == *c);
            check.record_result(r, || format!("coefficient {:?} on p{}", idx.0, mono));
        }
    }
    Ok(check)
}
