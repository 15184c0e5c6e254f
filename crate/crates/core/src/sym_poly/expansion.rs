use std::cmp::Reverse;
use std::collections::BTreeMap;
use std::fmt;

use crate::combinatorics::{straighten, Partition, StrongComposition};
use crate::sym_poly::generators::{fundamental_poly, schur_poly};
use crate::sym_poly::polynomial::{add_coeff, mul_coeff, Coeff, SparsePolynomial};

/// Index type of a basis of (quasi)symmetric functions.
pub trait BasisIndex: Clone + Ord + fmt::Debug {
    /// Letter used in text rendering, e.g. `F[2,1]`.
    const SYMBOL: &'static str;

    fn entries(&self) -> &[u32];

    fn degree(&self) -> u32 {
        self.entries().iter().sum()
    }
}

impl BasisIndex for StrongComposition {
    const SYMBOL: &'static str = "F";

    fn entries(&self) -> &[u32] {
        self.parts()
    }
}

impl BasisIndex for Partition {
    const SYMBOL: &'static str = "s";

    fn entries(&self) -> &[u32] {
        self.parts()
    }
}

/// A finite integer combination of basis elements with no zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Expansion<K: BasisIndex> {
    terms: BTreeMap<K, Coeff>,
}

pub type FundamentalExpansion = Expansion<StrongComposition>;
pub type SchurExpansion = Expansion<Partition>;

impl<K: BasisIndex> Default for Expansion<K> {
    fn default() -> Self {
        Expansion {
            terms: BTreeMap::new(),
        }
    }
}

impl<K: BasisIndex> Expansion<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_term(&mut self, key: K, coeff: Coeff) {
        if coeff == 0 {
            return;
        }
        let c = add_coeff(self.terms.get(&key).copied().unwrap_or(0), coeff);
        if c == 0 {
            self.terms.remove(&key);
        } else {
            self.terms.insert(key, c);
        }
    }

    pub fn coeff(&self, key: &K) -> Coeff {
        self.terms.get(key).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical order: larger degree first, then lexicographic on
    /// the index.
    pub fn terms(&self) -> Vec<(&K, Coeff)> {
        let mut out: Vec<(&K, Coeff)> = self.terms.iter().map(|(k, &c)| (k, c)).collect();
        out.sort_by_key(|(k, _)| (Reverse(k.degree()), *k));
        out
    }

    /// Sum of all coefficients.
    pub fn total(&self) -> Coeff {
        self.terms.values().fold(0, |a, &c| add_coeff(a, c))
    }

    pub fn all_positive(&self) -> bool {
        self.terms.values().all(|&c| c > 0)
    }

    pub fn degree_slice(&self, d: u32) -> Self {
        Expansion {
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| k.degree() == d)
                .map(|(k, &c)| (k.clone(), c))
                .collect(),
        }
    }

    pub fn max_degree(&self) -> Option<u32> {
        self.terms.keys().map(BasisIndex::degree).max()
    }

    pub fn min_degree(&self) -> Option<u32> {
        self.terms.keys().map(BasisIndex::degree).min()
    }

    /// Largest number of parts among the indices.
    pub fn max_length(&self) -> usize {
        self.terms
            .keys()
            .map(|k| k.entries().len())
            .max()
            .unwrap_or(0)
    }

    pub fn add_scaled(&mut self, other: &Self, scale: Coeff) {
        for (k, &c) in &other.terms {
            self.add_term(k.clone(), mul_coeff(c, scale));
        }
    }
}

impl<K: BasisIndex> FromIterator<(K, Coeff)> for Expansion<K> {
    fn from_iter<I: IntoIterator<Item = (K, Coeff)>>(iter: I) -> Self {
        let mut e = Expansion::new();
        for (k, c) in iter {
            e.add_term(k, c);
        }
        e
    }
}

impl<K: BasisIndex> fmt::Display for Expansion<K> {
    /// `s[3,3] + s[2,2,1] - 2*s[1,1]`; the empty expansion prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms();
        if terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (k, c)) in terms.into_iter().enumerate() {
            let mag = c.unsigned_abs();
            match (i, c < 0) {
                (0, false) => {}
                (0, true) => f.write_str("-")?,
                (_, false) => f.write_str(" + ")?,
                (_, true) => f.write_str(" - ")?,
            }
            if mag != 1 {
                write!(f, "{mag}*")?;
            }
            write!(f, "{}[", K::SYMBOL)?;
            for (j, p) in k.entries().iter().enumerate() {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{p}")?;
            }
            f.write_str("]")?;
        }
        Ok(())
    }
}

pub fn fundamental_expansion_to_poly(e: &FundamentalExpansion, n: usize) -> SparsePolynomial {
    let mut out = SparsePolynomial::zero(n);
    for (alpha, c) in e.terms() {
        out.add_assign_scaled(&fundamental_poly(alpha, n), c);
    }
    out
}

pub fn schur_expansion_to_poly(e: &SchurExpansion, n: usize) -> SparsePolynomial {
    let mut out = SparsePolynomial::zero(n);
    for (lambda, c) in e.terms() {
        out.add_assign_scaled(&schur_poly(lambda, n), c);
    }
    out
}

/// Replaces each `F_alpha` by the composition Schur function `s_alpha` and
/// straightens. Valid when `e` expands a symmetric function.
pub fn fundamental_to_schur(e: &FundamentalExpansion) -> SchurExpansion {
    let mut out = SchurExpansion::new();
    for (alpha, c) in e.terms() {
        let sp = straighten(alpha.parts());
        if !sp.is_zero() {
            out.add_term(sp.shape, mul_coeff(c, sp.sign as Coeff));
        }
    }
    out
}
