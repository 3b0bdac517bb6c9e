//! Finitely supported rational combinations of Young diagrams.

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::partition::{self, Partition};
use crate::rational::{self, Rational};

/// An element of the algebra of diagrams: a formal sum `sum c_D * D`,
/// possibly of mixed degrees. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct DiagramSum {
    terms: BTreeMap<Partition, Rational>,
}

impl DiagramSum {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn single(diagram: Partition, coef: Rational) -> Self {
        let mut out = Self::zero();
        out.add_term(diagram, coef);
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of nonzero terms.
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, diagram: &Partition) -> Rational {
        self.terms
            .get(diagram)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// Terms in canonical diagram order.
    pub fn iter(&self) -> impl Iterator<Item = (&Partition, &Rational)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, diagram: Partition, coef: Rational) {
        if coef.is_zero() {
            return;
        }
        match self.terms.entry(diagram) {
            Entry::Vacant(v) => {
                v.insert(coef);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += coef;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// `self += scale * other`.
    pub fn add_scaled(&mut self, other: &DiagramSum, scale: &Rational) {
        if scale.is_zero() {
            return;
        }
        for (d, c) in other.iter() {
            self.add_term(d.clone(), c * scale);
        }
    }

    pub fn add(&self, other: &DiagramSum) -> DiagramSum {
        let mut out = self.clone();
        out.add_scaled(other, &rational::int(1));
        out
    }

    pub fn sub(&self, other: &DiagramSum) -> DiagramSum {
        let mut out = self.clone();
        out.add_scaled(other, &rational::int(-1));
        out
    }

    pub fn scale(&self, c: &Rational) -> DiagramSum {
        let mut out = DiagramSum::zero();
        out.add_scaled(self, c);
        out
    }

    /// All terms of degree exactly `n`.
    pub fn graded(&self, n: u32) -> DiagramSum {
        DiagramSum {
            terms: self
                .terms
                .iter()
                .filter(|(d, _)| d.degree() == n)
                .map(|(d, c)| (d.clone(), c.clone()))
                .collect(),
        }
    }

    /// Distinct degrees present, ascending.
    pub fn degrees(&self) -> Vec<u32> {
        let mut out: Vec<u32> = self.terms.keys().map(Partition::degree).collect();
        out.dedup();
        out
    }

    pub fn max_degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Partition::degree)
    }

    /// Linear extension of `rho_k`.
    pub fn rho(&self, k: u32) -> DiagramSum {
        let mut out = DiagramSum::zero();
        for (d, c) in self.iter() {
            out.add_scaled(&d.rho(k), c);
        }
        out
    }
}

impl From<Partition> for DiagramSum {
    fn from(d: Partition) -> Self {
        DiagramSum::single(d, rational::int(1))
    }
}

impl FromIterator<(Partition, Rational)> for DiagramSum {
    fn from_iter<I: IntoIterator<Item = (Partition, Rational)>>(iter: I) -> Self {
        let mut out = DiagramSum::zero();
        for (d, c) in iter {
            out.add_term(d, c);
        }
        out
    }
}

impl fmt::Display for DiagramSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (d, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{}*{}", rational::format(c), d)?;
        }
        Ok(())
    }
}

impl fmt::Debug for DiagramSum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for DiagramSum {
    type Err = Error;

    /// Accepts `coef*[..] + coef*[..]`; a bare `[..]` has coefficient 1 and
    /// `0` is the empty sum.
    fn from_str(s: &str) -> Result<Self> {
        if s.trim() == "0" {
            return Ok(DiagramSum::zero());
        }
        let mut out = DiagramSum::zero();
        let mut start = 0;
        let mut depth = 0i32;
        let bytes = s.as_bytes();
        let mut pieces = Vec::new();
        for (i, &b) in bytes.iter().enumerate() {
            match b {
                b'[' => depth += 1,
                b']' => depth -= 1,
                b'+' if depth == 0 => {
                    pieces.push((start, &s[start..i]));
                    start = i + 1;
                }
                _ => {}
            }
        }
        pieces.push((start, &s[start..]));
        for (offset, piece) in pieces {
            let Some(bracket) = piece.find('[') else {
                return Err(Error::parse(offset, "expected a diagram term"));
            };
            let head = piece[..bracket].trim_end();
            let coef = if head.trim().is_empty() {
                rational::int(1)
            } else {
                let Some(c) = head.strip_suffix('*') else {
                    return Err(Error::parse(offset + head.len(), "expected '*'"));
                };
                rational::parse(c, offset)?
            };
            let diagram = partition::parse_at(&piece[bracket..], offset + bracket)?;
            out.add_term(diagram, coef);
        }
        Ok(out)
    }
}
