use diagram_ops::characters::to_json as table_json;
use diagram_ops::hurwitz::{self, BranchSpec};
use diagram_ops::rational::format;
use diagram_ops::selftest::{self, Suite};
use diagram_ops::w_ops::{self, DiffOpSpec};
use diagram_ops::{characters, class_algebra, psym};
use diagram_ops::{DiagramSum, Error, PPoly, Partition, Result};
use serde::Serialize;

use crate::CliConfig;

fn partition(text: &str) -> Result<Partition> {
    text.parse()
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("in-memory serialization")
}

#[derive(Serialize)]
struct SumTerm<'a> {
    diagram: &'a [u32],
    coef: String,
}

#[derive(Serialize)]
struct SumJson<'a> {
    terms: Vec<SumTerm<'a>>,
}

#[derive(Serialize)]
struct EigenvalueJson {
    diagram: String,
    shape: String,
    value: String,
}

#[derive(Serialize)]
struct HurwitzJson {
    n: u32,
    branches: Vec<String>,
    value: String,
}

fn sum_json(s: &DiagramSum) -> String {
    let terms = s
        .iter()
        .map(|(d, c)| SumTerm {
            diagram: d.parts(),
            coef: format(c),
        })
        .collect();
    to_json(&SumJson { terms })
}

pub fn mult(config: &CliConfig, a: &str, b: &str) -> Result<String> {
    let a: DiagramSum = a.parse()?;
    let b: DiagramSum = b.parse()?;
    let degree = a.max_degree().unwrap_or(0) + b.max_degree().unwrap_or(0);
    config.check_degree("product", degree)?;
    let product = class_algebra::mult_sum(&a, &b)?;
    Ok(if config.json {
        sum_json(&product)
    } else {
        product.to_string()
    })
}

pub fn chartable(config: &CliConfig, n: u32) -> Result<String> {
    config.check_degree("character table", n)?;
    let (table, status) = config.cache().load_or_compute(n)?;
    log::debug!("character table of S_{n}: {status:?}");
    if config.json {
        return Ok(table_json(&table));
    }
    let cells: Vec<Vec<String>> = std::iter::once(
        std::iter::once(String::new())
            .chain(table.order().iter().map(Partition::to_string))
            .collect(),
    )
    .chain(table.order().iter().zip(table.rows()).map(|(r, row)| {
        std::iter::once(r.to_string())
            .chain(row.iter().map(i64::to_string))
            .collect()
    }))
    .collect();
    let widths: Vec<usize> = (0..cells[0].len())
        .map(|j| cells.iter().map(|row| row[j].len()).max().unwrap_or(0))
        .collect();
    let lines: Vec<String> = cells
        .iter()
        .map(|row| {
            row.iter()
                .zip(&widths)
                .enumerate()
                .map(|(j, (cell, &w))| {
                    if j == 0 {
                        format!("{cell:<w$}")
                    } else {
                        format!("{cell:>w$}")
                    }
                })
                .collect::<Vec<_>>()
                .join("  ")
                .trim_end()
                .to_string()
        })
        .collect();
    Ok(lines.join("\n"))
}

fn poly_out(config: &CliConfig, f: &PPoly) -> String {
    if config.json {
        to_json(&f.to_json())
    } else {
        f.to_string()
    }
}

pub fn schur(config: &CliConfig, shape: &str) -> Result<String> {
    let shape = partition(shape)?;
    config.check_degree("shape", shape.degree())?;
    Ok(poly_out(config, &psym::schur(&shape)))
}

pub fn eigenvalue(config: &CliConfig, diagram: &str, shape: &str) -> Result<String> {
    let d = partition(diagram)?;
    let r = partition(shape)?;
    config.check_degree("shape", r.degree())?;
    let value = characters::phi(&r, &d)?;
    Ok(if config.json {
        to_json(&EigenvalueJson {
            diagram: d.to_string(),
            shape: r.to_string(),
            value: format(&value),
        })
    } else {
        format(&value)
    })
}

pub fn wapply(config: &CliConfig, diagram: &str, poly: &str, explicit: bool) -> Result<String> {
    let op: DiagramSum = diagram.parse()?;
    let f: PPoly = poly.parse()?;
    config.check_degree("operator", op.max_degree().unwrap_or(0))?;
    config.check_degree("polynomial", f.max_degree().unwrap_or(0))?;
    let out = if explicit {
        let spec = single_diagram(&op)
            .and_then(DiffOpSpec::for_diagram)
            .ok_or_else(|| {
                Error::Argument(format!(
                    "no explicit operator for {op}; --explicit covers single diagrams of degree at most 3"
                ))
            })?;
        w_ops::apply_explicit(&spec, &f)
    } else {
        w_ops::apply_spectral(op, &f)?
    };
    Ok(poly_out(config, &out))
}

fn single_diagram(s: &DiagramSum) -> Option<&Partition> {
    let mut terms = s.iter();
    match (terms.next(), terms.next()) {
        (Some((d, c)), None) if *c == diagram_ops::rational::int(1) => Some(d),
        _ => None,
    }
}

pub fn hurwitz(
    config: &CliConfig,
    n: u32,
    branches: &[String],
    last: Option<&str>,
) -> Result<String> {
    config.check_degree("covering", n)?;
    let parsed = branches
        .iter()
        .map(|b| partition(b))
        .collect::<Result<Vec<_>>>()?;
    if let Some(big) = parsed.iter().find(|d| d.degree() > n) {
        return Err(Error::Argument(format!(
            "branch type {big} has degree above {n}"
        )));
    }
    let final_diagram = last.map(partition).transpose()?;
    let spec = BranchSpec {
        degree: n,
        branches: parsed.iter().map(|d| (d.clone(), 1)).collect(),
        final_diagram: final_diagram.clone(),
    };
    let value = hurwitz::hurwitz_padded(&spec)?;
    Ok(if config.json {
        let mut names: Vec<String> = parsed.iter().map(Partition::to_string).collect();
        names.extend(final_diagram.iter().map(Partition::to_string));
        to_json(&HurwitzJson {
            n,
            branches: names,
            value: format(&value),
        })
    } else {
        format(&value)
    })
}

pub fn evolve(
    config: &CliConfig,
    directions: &[String],
    p_bound: u32,
    order: u32,
) -> Result<String> {
    config.check_degree("p-degree bound", p_bound)?;
    let dirs = directions
        .iter()
        .map(|d| partition(d))
        .collect::<Result<Vec<_>>>()?;
    let series = hurwitz::generating_function(&dirs, p_bound, order)?;
    if config.json {
        return Ok(to_json(&series.to_json()));
    }
    let lines: Vec<String> = series
        .components()
        .filter(|(_, f)| !f.is_zero())
        .map(|(idx, f)| {
            let beta: Vec<String> = series
                .directions()
                .iter()
                .zip(&idx.0)
                .filter(|(_, &k)| k > 0)
                .map(|(d, k)| format!("{d}:{k}"))
                .collect();
            format!("{{{}}}: {f}", beta.join(","))
        })
        .collect();
    Ok(lines.join("\n"))
}

pub fn selftest(config: &CliConfig, suite: Suite) -> Result<(String, bool)> {
    let report = selftest::run(suite, config.seed, Some(&config.cache()))?;
    let out = if config.json {
        to_json(&report)
    } else {
        let mut lines: Vec<String> = report
            .checks
            .iter()
            .map(|c| {
                let mut line = format!("{}: {} cases, {} failed", c.name, c.cases, c.failed);
                for f in &c.failures {
                    line.push_str(&format!("\n  {f}"));
                }
                line
            })
            .collect();
        lines.push(format!(
            "selftest {}: {}",
            report.suite,
            if report.passed { "pass" } else { "FAIL" }
        ));
        lines.join("\n")
    };
    Ok((out, report.passed))
}
