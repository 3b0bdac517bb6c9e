//! Small permutations for the brute-force oracles.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::partition::Partition;

/// Largest n for which S_n is enumerated explicitly.
pub const MAX_PERM_DEGREE: u32 = 8;

/// A permutation of `{0, .., n-1}` stored inline; `n <= 8`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Perm {
    n: u8,
    img: [u8; MAX_PERM_DEGREE as usize],
}

impl Perm {
    pub fn identity(n: u32) -> Self {
        assert!(n <= MAX_PERM_DEGREE);
        let mut img = [0u8; MAX_PERM_DEGREE as usize];
        for (i, slot) in img.iter_mut().enumerate() {
            *slot = i as u8;
        }
        Perm { n: n as u8, img }
    }

    pub fn from_images(images: &[u8]) -> Self {
        let mut p = Perm::identity(images.len() as u32);
        p.img[..images.len()].copy_from_slice(images);
        p
    }

    /// The standard representative of a cycle type: consecutive cycles
    /// `(0 1 .. a-1)(a .. a+b-1)..`.
    pub fn with_cycle_type(shape: &Partition) -> Self {
        let mut p = Perm::identity(shape.degree());
        let mut start = 0usize;
        for &len in shape.parts() {
            let len = len as usize;
            for i in 0..len {
                p.img[start + i] = (start + (i + 1) % len) as u8;
            }
            start += len;
        }
        p
    }

    pub fn degree(&self) -> u32 {
        self.n as u32
    }

    pub fn apply(&self, i: usize) -> usize {
        self.img[i] as usize
    }

    /// `(self * other)(i) = self(other(i))`.
    pub fn compose(&self, other: &Perm) -> Perm {
        let mut out = *self;
        for i in 0..self.n as usize {
            out.img[i] = self.img[other.img[i] as usize];
        }
        out
    }

    pub fn inverse(&self) -> Perm {
        let mut out = *self;
        for i in 0..self.n as usize {
            out.img[self.img[i] as usize] = i as u8;
        }
        out
    }

    pub fn is_identity(&self) -> bool {
        (0..self.n as usize).all(|i| self.img[i] as usize == i)
    }

    pub fn cycle_type(&self) -> Partition {
        let n = self.n as usize;
        let mut seen = [false; MAX_PERM_DEGREE as usize];
        let mut lengths = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.img[i] as usize;
                len += 1;
            }
            lengths.push(len);
        }
        Partition::from_multiset(lengths)
    }
}

/// All n! permutations in lexicographic order of their image sequences.
pub fn all_perms(n: u32) -> Result<Vec<Perm>> {
    if n > MAX_PERM_DEGREE {
        return Err(Error::Resource(format!(
            "explicit enumeration of S_{n} exceeds bound S_{MAX_PERM_DEGREE}"
        )));
    }
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(n as usize);
    let mut used = vec![false; n as usize];
    extend(n as usize, &mut current, &mut used, &mut out);
    Ok(out)
}

fn extend(n: usize, current: &mut Vec<u8>, used: &mut [bool], out: &mut Vec<Perm>) {
    if current.len() == n {
        out.push(Perm::from_images(current));
        return;
    }
    for v in 0..n {
        if !used[v] {
            used[v] = true;
            current.push(v as u8);
            extend(n, current, used, out);
            current.pop();
            used[v] = false;
        }
    }
}

/// S_n split into conjugacy classes by cycle type.
pub fn conjugacy_classes(n: u32) -> Result<BTreeMap<Partition, Vec<Perm>>> {
    let mut classes: BTreeMap<Partition, Vec<Perm>> = BTreeMap::new();
    for g in all_perms(n)? {
        classes.entry(g.cycle_type()).or_default().push(g);
    }
    Ok(classes)
}
