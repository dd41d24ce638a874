//! Generators and freely reduced words for the presentations built from
//! plumbing graphs.

use crate::graph::VertexId;
use num_bigint::BigInt;
use std::collections::BTreeMap;
use std::fmt;

/// Generator of the fundamental group presentation.
///
/// `Gamma(i)` is the meridian loop around curve `i`; `Lambda` generators
/// correspond to crossings outside the chosen spanning tree (oriented with
/// `i < j`; the reverse orientation is the inverse and is never
/// materialized); `A`/`B` are the handle loops of a positive-genus curve.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Gen {
    Gamma(VertexId),
    Lambda {
        i: VertexId,
        j: VertexId,
        /// Occurrence index among parallel non-tree edges of the same pair.
        copy: u16,
    },
    A(VertexId, u32),
    B(VertexId, u32),
}

impl Gen {
    pub fn lambda(i: VertexId, j: VertexId, copy: u16) -> Self {
        debug_assert!(i < j);
        Gen::Lambda { i, j, copy }
    }

    /// Sort key: meridians, then lambdas, then the handle generators of
    /// each vertex interleaved a, b per handle.
    fn key(&self) -> (u8, u64, u64, u64) {
        match *self {
            Gen::Gamma(i) => (0, i as u64, 0, 0),
            Gen::Lambda { i, j, copy } => (1, i as u64, j as u64, copy as u64),
            Gen::A(i, h) => (2, i as u64, h as u64, 0),
            Gen::B(i, h) => (2, i as u64, h as u64, 1),
        }
    }
}

impl PartialOrd for Gen {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Gen {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.key().cmp(&other.key())
    }
}

impl fmt::Display for Gen {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Gen::Gamma(i) => write!(f, "g{i}"),
            Gen::Lambda { i, j, copy: 0 } => write!(f, "l{i}_{j}"),
            Gen::Lambda { i, j, copy } => write!(f, "l{i}_{j}_{copy}"),
            Gen::A(i, h) => write!(f, "a{i}_{h}"),
            Gen::B(i, h) => write!(f, "b{i}_{h}"),
        }
    }
}

/// A freely reduced word: adjacent inverse pairs never survive a push.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Word {
    letters: Vec<(Gen, bool)>, // (generator, inverted)
}

impl Word {
    pub fn identity() -> Self {
        Word::default()
    }

    pub fn generator(g: Gen) -> Self {
        Word {
            letters: vec![(g, false)],
        }
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[(Gen, bool)] {
        &self.letters
    }

    pub fn push(&mut self, g: Gen, inv: bool) {
        match self.letters.last() {
            Some(&(last, last_inv)) if last == g && last_inv != inv => {
                self.letters.pop();
            }
            _ => self.letters.push((g, inv)),
        }
    }

    pub fn push_power(&mut self, g: Gen, exp: i64) {
        let inv = exp < 0;
        for _ in 0..exp.unsigned_abs() {
            self.push(g, inv);
        }
    }

    pub fn mul(&self, other: &Word) -> Word {
        let mut out = self.clone();
        for &(g, inv) in &other.letters {
            out.push(g, inv);
        }
        out
    }

    pub fn inverse(&self) -> Word {
        Word {
            letters: self.letters.iter().rev().map(|&(g, i)| (g, !i)).collect(),
        }
    }

    pub fn conjugate_by(&self, t: &Word) -> Word {
        t.mul(self).mul(&t.inverse())
    }

    pub fn commutator(x: &Word, y: &Word) -> Word {
        x.mul(y).mul(&x.inverse()).mul(&y.inverse())
    }

    pub fn power(g: Gen, exp: i64) -> Word {
        let mut w = Word::identity();
        w.push_power(g, exp);
        w
    }

    /// Exponent sum of each generator (the abelianized image).
    pub fn exponent_sums(&self) -> BTreeMap<Gen, BigInt> {
        let mut sums = BTreeMap::new();
        for &(g, inv) in &self.letters {
            let e = sums.entry(g).or_insert_with(|| BigInt::from(0));
            *e += if inv { -1 } else { 1 };
        }
        sums
    }

    /// Drop every letter whose generator fails the predicate, then reduce.
    pub fn retain<F: Fn(Gen) -> bool>(&self, keep: F) -> Word {
        let mut out = Word::identity();
        for &(g, inv) in &self.letters {
            if keep(g) {
                out.push(g, inv);
            }
        }
        out
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        let mut i = 0;
        while i < self.letters.len() {
            let (g, inv) = self.letters[i];
            let mut run = 1;
            while i + run < self.letters.len() && self.letters[i + run] == (g, inv) {
                run += 1;
            }
            let exp = if inv { -(run as i64) } else { run as i64 };
            if !first {
                write!(f, " ")?;
            }
            if exp == 1 {
                write!(f, "{g}")?;
            } else {
                write!(f, "{g}^{exp}")?;
            }
            first = false;
            i += run;
        }
        Ok(())
    }
}

/// Structured form of a relator, kept for deterministic printing: a product
/// of generator powers and commutators of sub-products.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Factor {
    Pow(Gen, i64),
    Comm(Vec<Factor>, Vec<Factor>),
}

pub fn expand_factors(factors: &[Factor]) -> Word {
    let mut w = Word::identity();
    for f in factors {
        match f {
            Factor::Pow(g, e) => w.push_power(*g, *e),
            Factor::Comm(x, y) => {
                let c = Word::commutator(&expand_factors(x), &expand_factors(y));
                w = w.mul(&c);
            }
        }
    }
    w
}

pub fn display_factors(factors: &[Factor]) -> String {
    factors
        .iter()
        .map(|f| match f {
            Factor::Pow(g, 1) => format!("{g}"),
            Factor::Pow(g, e) => format!("{g}^{e}"),
            Factor::Comm(x, y) => {
                format!("[{},{}]", display_factors(x), display_factors(y))
            }
        })
        .collect::<Vec<_>>()
        .join(" ")
}
