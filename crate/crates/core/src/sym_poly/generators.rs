use crate::combinatorics::{Partition, StrongComposition};
use crate::sym_poly::polynomial::{Coeff, SparsePolynomial};
use crate::tableaux::enumerate_semistandard;

/// `F_alpha(x_1, ..., x_n)`: the sum of `x_{i_1} ... x_{i_d}` over
/// `i_1 <= ... <= i_d` with a strict step wherever a part of `alpha` ends.
pub fn fundamental_poly(alpha: &StrongComposition, n: usize) -> SparsePolynomial {
    assert!(n >= 1, "need at least one variable");
    let d = alpha.size() as usize;
    let mut strict = vec![false; d];
    for p in alpha.descent_positions() {
        strict[p as usize - 1] = true;
    }

    fn go(
        pos: usize,
        min_var: usize,
        strict: &[bool],
        exps: &mut Vec<u32>,
        out: &mut SparsePolynomial,
    ) {
        if pos == strict.len() {
            out.add_term(exps.clone(), 1);
            return;
        }
        for v in min_var..exps.len() {
            exps[v] += 1;
            let next = if strict[pos] { v + 1 } else { v };
            go(pos + 1, next, strict, exps, out);
            exps[v] -= 1;
        }
    }

    let mut out = SparsePolynomial::zero(n);
    go(0, 0, &strict, &mut vec![0; n], &mut out);
    out
}

/// `s_lambda(x_1, ..., x_n)` as the content generating function of
/// semistandard tableaux with entries at most `n`.
pub fn schur_poly(lambda: &Partition, n: usize) -> SparsePolynomial {
    assert!(n >= 1, "need at least one variable");
    let mut out = SparsePolynomial::zero(n);
    for t in enumerate_semistandard(lambda, n as u32) {
        out.add_term(t.filling().content().padded(n).entries().to_vec(), 1);
    }
    out
}

/// `h_k(x_1, ..., x_n)`: every monomial of degree `k` once; `h_0 = 1` and
/// `h_k = 0` for `k < 0`.
pub fn complete_homogeneous_poly(k: i64, n: usize) -> SparsePolynomial {
    assert!(n >= 1, "need at least one variable");
    let mut out = SparsePolynomial::zero(n);
    if k < 0 {
        return out;
    }
    fn go(var: usize, rest: u32, exps: &mut Vec<u32>, out: &mut SparsePolynomial) {
        if var + 1 == exps.len() {
            exps[var] = rest;
            out.add_term(exps.clone(), 1);
            exps[var] = 0;
            return;
        }
        for e in (0..=rest).rev() {
            exps[var] = e;
            go(var + 1, rest - e, exps, out);
        }
        exps[var] = 0;
    }
    go(0, k as u32, &mut vec![0; n], &mut out);
    out
}

/// Determinant of a square matrix of polynomials, by dynamic programming over
/// the set of columns used by the leading rows.
pub fn determinant(matrix: &[Vec<SparsePolynomial>], num_vars: usize) -> SparsePolynomial {
    let k = matrix.len();
    assert!(
        matrix.iter().all(|row| row.len() == k),
        "matrix must be square"
    );
    assert!(k < usize::BITS as usize, "matrix too large");
    // partial[mask]: signed sum over injections of rows 0..|mask| onto mask
    let mut partial: Vec<Option<SparsePolynomial>> = vec![None; 1 << k];
    partial[0] = Some(SparsePolynomial::one(num_vars));
    for mask in 0usize..(1 << k) {
        let Some(acc) = partial[mask].take() else {
            continue;
        };
        if acc.is_zero() {
            continue;
        }
        let row = mask.count_ones() as usize;
        if row == k {
            partial[mask] = Some(acc);
            continue;
        }
        for col in (0..k).filter(|c| mask & (1 << c) == 0) {
            let entry = &matrix[row][col];
            if entry.is_zero() {
                continue;
            }
            // inversions added by placing `col` after the larger used columns
            let larger = (mask >> (col + 1)).count_ones();
            let sign: Coeff = if larger % 2 == 0 { 1 } else { -1 };
            let term = &acc * entry;
            let slot =
                partial[mask | (1 << col)].get_or_insert_with(|| SparsePolynomial::zero(num_vars));
            slot.add_assign_scaled(&term, sign);
        }
    }
    partial[(1 << k) - 1]
        .take()
        .unwrap_or_else(|| SparsePolynomial::zero(num_vars))
}

/// The composition Schur polynomial `det(h_{alpha_i - i + j})` in `n`
/// variables. Zero entries in `alpha` are allowed.
pub fn jacobi_trudi_poly(alpha: &[u32], n: usize) -> SparsePolynomial {
    let k = alpha.len();
    let mut cache: std::collections::BTreeMap<i64, SparsePolynomial> = Default::default();
    let matrix: Vec<Vec<SparsePolynomial>> = (0..k)
        .map(|i| {
            (0..k)
                .map(|j| {
                    let deg = alpha[i] as i64 - i as i64 + j as i64;
                    cache
                        .entry(deg)
                        .or_insert_with(|| complete_homogeneous_poly(deg, n))
                        .clone()
                })
                .collect()
        })
        .collect();
    determinant(&matrix, n)
}
