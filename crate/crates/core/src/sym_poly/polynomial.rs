use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Exact integer coefficient. Arithmetic is overflow-checked and panics
/// rather than wrapping.
pub type Coeff = i64;

#[inline]
pub(crate) fn add_coeff(a: Coeff, b: Coeff) -> Coeff {
    a.checked_add(b)
        .expect("integer overflow in coefficient arithmetic")
}

#[inline]
pub(crate) fn mul_coeff(a: Coeff, b: Coeff) -> Coeff {
    a.checked_mul(b)
        .expect("integer overflow in coefficient arithmetic")
}

/// A polynomial in `x_1, ..., x_n` with integer coefficients, stored as a map
/// from exponent vectors of length `n` to nonzero coefficients.
///
/// Zero coefficients are never stored, so structural equality is
/// mathematical equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SparsePolynomial {
    num_vars: usize,
    terms: BTreeMap<Vec<u32>, Coeff>,
}

impl SparsePolynomial {
    pub fn zero(num_vars: usize) -> Self {
        SparsePolynomial {
            num_vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(num_vars: usize) -> Self {
        Self::monomial(vec![0; num_vars], 1)
    }

    pub fn monomial(exponents: Vec<u32>, coeff: Coeff) -> Self {
        let mut p = Self::zero(exponents.len());
        p.add_term(exponents, coeff);
        p
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, exponents: &[u32]) -> Coeff {
        self.terms.get(exponents).copied().unwrap_or(0)
    }

    /// Terms in graded-lex order: higher total degree first, then
    /// lexicographically larger exponent vectors first.
    pub fn terms(&self) -> Vec<(&[u32], Coeff)> {
        let mut out: Vec<(&[u32], Coeff)> =
            self.terms.iter().map(|(e, &c)| (e.as_slice(), c)).collect();
        out.sort_by(|a, b| {
            let da: u32 = a.0.iter().sum();
            let db: u32 = b.0.iter().sum();
            db.cmp(&da).then_with(|| b.0.cmp(a.0))
        });
        out
    }

    pub fn add_term(&mut self, exponents: Vec<u32>, coeff: Coeff) {
        assert_eq!(exponents.len(), self.num_vars, "exponent vector length");
        if coeff == 0 {
            return;
        }
        match self.terms.entry(exponents) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let c = add_coeff(*o.get(), coeff);
                if c == 0 {
                    o.remove();
                } else {
                    *o.get_mut() = c;
                }
            }
        }
    }

    pub fn add_assign_scaled(&mut self, other: &SparsePolynomial, scale: Coeff) {
        assert_eq!(self.num_vars, other.num_vars, "variable count mismatch");
        for (e, &c) in &other.terms {
            self.add_term(e.clone(), mul_coeff(c, scale));
        }
    }

    pub fn scaled(&self, scale: Coeff) -> SparsePolynomial {
        let mut out = Self::zero(self.num_vars);
        out.add_assign_scaled(self, scale);
        out
    }

    /// Every term has total degree `d`.
    pub fn is_homogeneous_of_degree(&self, d: u32) -> bool {
        self.terms.keys().all(|e| e.iter().sum::<u32>() == d)
    }

    /// The homogeneous component of total degree `d`.
    pub fn degree_slice(&self, d: u32) -> SparsePolynomial {
        SparsePolynomial {
            num_vars: self.num_vars,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.iter().sum::<u32>() == d)
                .map(|(e, &c)| (e.clone(), c))
                .collect(),
        }
    }

    /// The image under `x_i <-> x_j` (0-based indices).
    pub fn swap_vars(&self, i: usize, j: usize) -> SparsePolynomial {
        SparsePolynomial {
            num_vars: self.num_vars,
            terms: self
                .terms
                .iter()
                .map(|(e, &c)| {
                    let mut e = e.clone();
                    e.swap(i, j);
                    (e, c)
                })
                .collect(),
        }
    }

    /// Invariant under every adjacent transposition `x_i <-> x_{i+1}`.
    pub fn is_symmetric(&self) -> bool {
        (1..self.num_vars).all(|i| self.swap_vars(i - 1, i) == *self)
    }
}

impl Add for &SparsePolynomial {
    type Output = SparsePolynomial;

    fn add(self, rhs: &SparsePolynomial) -> SparsePolynomial {
        let mut out = self.clone();
        out.add_assign_scaled(rhs, 1);
        out
    }
}

impl Sub for &SparsePolynomial {
    type Output = SparsePolynomial;

    fn sub(self, rhs: &SparsePolynomial) -> SparsePolynomial {
        let mut out = self.clone();
        out.add_assign_scaled(rhs, -1);
        out
    }
}

impl Neg for &SparsePolynomial {
    type Output = SparsePolynomial;

    fn neg(self) -> SparsePolynomial {
        self.scaled(-1)
    }
}

impl Mul for &SparsePolynomial {
    type Output = SparsePolynomial;

    fn mul(self, rhs: &SparsePolynomial) -> SparsePolynomial {
        assert_eq!(self.num_vars, rhs.num_vars, "variable count mismatch");
        let mut out = SparsePolynomial::zero(self.num_vars);
        for (ea, &ca) in &self.terms {
            for (eb, &cb) in &rhs.terms {
                let e = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, mul_coeff(ca, cb));
            }
        }
        out
    }
}

impl fmt::Display for SparsePolynomial {
    /// `c*x1^e1*x2^e2` terms in graded-lex order joined by `" + "`; negative
    /// coefficients keep their sign, exponent 1 is left implicit, and the
    /// zero polynomial prints as `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (e, c)) in self.terms().into_iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{c}")?;
            for (i, &p) in e.iter().enumerate() {
                match p {
                    0 => {}
                    1 => write!(f, "*x{}", i + 1)?,
                    _ => write!(f, "*x{}^{}", i + 1, p)?,
                }
            }
        }
        Ok(())
    }
}
