//! The genomic Schur function `U_lambda`, computed four ways:
//!
//! * directly, as the weight generating function of genomic tableaux with
//!   entries at most `n`;
//! * as `sum F_wt(T)` over quasiYamanouchi genomic tableaux `T`;
//! * as `sum F_Des(T)` over gapless increasing tableaux `T`;
//! * as `sum s_Des(T)` over gapless increasing tableaux, straightened into the
//!   Schur basis (possibly with negative coefficients).
//!
//! For two-row shapes there is also a closed multiplicity-free Schur formula.

use crate::combinatorics::{Partition, StrongComposition};
use crate::error::{Error, Result};
use crate::sym_poly::{
    fundamental_to_schur, FundamentalExpansion, SchurExpansion, SparsePolynomial,
};
use crate::tableaux::{
    enumerate_gapless_increasing, enumerate_genomic, enumerate_qy_genomic, enumerate_standard,
    GenomicTableau, IncreasingTableau,
};

pub fn u_poly_direct(lambda: &Partition, n: usize) -> SparsePolynomial {
    assert!(n >= 1, "need at least one variable");
    let mut out = SparsePolynomial::zero(n);
    for t in enumerate_genomic(lambda, n as u32) {
        out.add_term(t.weight().padded(n).entries().to_vec(), 1);
    }
    out
}

pub(crate) fn qy_expansion(tableaux: &[GenomicTableau]) -> FundamentalExpansion {
    tableaux
        .iter()
        .map(|t| {
            let w = StrongComposition::new(t.weight().entries().to_vec())
                .expect("quasiYamanouchi weights have no zero entries");
            (w, 1)
        })
        .collect()
}

pub(crate) fn descent_expansion(tableaux: &[IncreasingTableau]) -> FundamentalExpansion {
    tableaux
        .iter()
        .map(|t| (t.descent_composition(), 1))
        .collect()
}

/// `sum F_wt(T)` over quasiYamanouchi genomic tableaux of shape `lambda`,
/// restricted to entries at most `n` when given.
pub fn u_fundamental_qy(lambda: &Partition, n: Option<u32>) -> FundamentalExpansion {
    qy_expansion(&enumerate_qy_genomic(lambda, n))
}

/// `sum F_Des(T)` over gapless increasing tableaux of shape `lambda`.
pub fn u_fundamental_inc(lambda: &Partition) -> FundamentalExpansion {
    descent_expansion(&enumerate_gapless_increasing(lambda, None))
}

pub fn u_schur_expansion(lambda: &Partition) -> SchurExpansion {
    fundamental_to_schur(&u_fundamental_inc(lambda))
}

/// Gessel's expansion `s_lambda = sum F_Des(S)` over standard tableaux `S`.
pub fn gessel_schur_fundamental(lambda: &Partition) -> FundamentalExpansion {
    descent_expansion(&enumerate_standard(lambda))
}

/// `(a, b, 1^k)` when it is a partition with `b >= 1`.
fn flag(a: u32, b: u32, ones: u32) -> Option<Partition> {
    if b == 0 {
        return None;
    }
    let mut parts = vec![a, b];
    parts.extend(std::iter::repeat_n(1, ones as usize));
    Partition::new(parts).ok()
}

/// Shapes of the standard tableaux matched with gapless increasing tableaux
/// of shape `(m, small)` having maximum entry `m + small - k`.
pub fn two_row_flag_shapes(m: u32, small: u32, k: u32) -> Vec<Partition> {
    if k > small {
        return Vec::new();
    }
    let mut out = Vec::new();
    out.extend(flag(m - k, small - k, k));
    if m > small && k >= 1 {
        out.extend(flag(m - k, small - k + 1, k - 1));
    }
    out
}

/// Closed Schur expansion of `U_(m, small)`:
///
/// * `m == small`: `sum_{k=0}^{m-1} s_(m-k, m-k, 1^k)`;
/// * `m > small`: `s_(m, small) + sum_{k>=1} [s_(m-k, small-k, 1^k) + s_(m-k, small-k+1, 1^(k-1))]`,
///   where `k` runs up to `small` and terms that are not partitions are
///   dropped. At `k = small` only `s_(m-small, 1^small)` survives.
pub fn u_two_row_closed_form(lambda: &Partition) -> Result<SchurExpansion> {
    let &[m, small] = lambda.parts() else {
        return Err(Error::NotTwoRow(lambda.to_string()));
    };
    Ok((0..=small)
        .flat_map(|k| two_row_flag_shapes(m, small, k))
        .map(|p| (p, 1))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sym_poly::{schur_expansion_to_poly, schur_poly};

    fn part(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn comp(v: &[u32]) -> StrongComposition {
        StrongComposition::new(v.to_vec()).unwrap()
    }

    fn schur(terms: &[(&[u32], i64)]) -> SchurExpansion {
        terms.iter().map(|(p, c)| (part(p), *c)).collect()
    }

    #[test]
    fn direct_small_cases() {
        assert_eq!(u_poly_direct(&part(&[1]), 2), schur_poly(&part(&[1]), 2));
        // three single-row genomic tableaux: 11, 12, 22
        assert_eq!(u_poly_direct(&part(&[2]), 2), schur_poly(&part(&[2]), 2));
        let u33 = schur(&[(&[3, 3], 1), (&[2, 2, 1], 1), (&[1, 1, 1, 1], 1)]);
        assert_eq!(
            u_poly_direct(&part(&[3, 3]), 3),
            schur_expansion_to_poly(&u33, 3)
        );
    }

    #[test]
    fn single_cell() {
        let one: FundamentalExpansion = [(comp(&[1]), 1)].into_iter().collect();
        assert_eq!(u_fundamental_qy(&part(&[1]), None), one);
        assert_eq!(u_fundamental_inc(&part(&[1])), one);
        assert_eq!(u_schur_expansion(&part(&[1])), schur(&[(&[1], 1)]));
    }

    #[test]
    fn gessel_small_cases() {
        let s22: FundamentalExpansion = [(comp(&[2, 2]), 1), (comp(&[1, 2, 1]), 1)]
            .into_iter()
            .collect();
        assert_eq!(gessel_schur_fundamental(&part(&[2, 2])), s22);
        let row: FundamentalExpansion = [(comp(&[4]), 1)].into_iter().collect();
        assert_eq!(gessel_schur_fundamental(&part(&[4])), row);
        let col: FundamentalExpansion = [(comp(&[1, 1, 1]), 1)].into_iter().collect();
        assert_eq!(gessel_schur_fundamental(&part(&[1, 1, 1])), col);
    }

    #[test]
    fn two_row_closed_form_cases() {
        let u33 = schur(&[(&[3, 3], 1), (&[2, 2, 1], 1), (&[1, 1, 1, 1], 1)]);
        assert_eq!(u_two_row_closed_form(&part(&[3, 3])).unwrap(), u33);
        for m in 1..=6 {
            assert_eq!(
                u_two_row_closed_form(&part(&[m, m])).unwrap().len(),
                m as usize
            );
        }
        // k = 1 gives s_(2,1,1) + s_(2,2); k = 2 leaves s_(1,1,1)
        let u32_ = schur(&[(&[3, 2], 1), (&[2, 1, 1], 1), (&[2, 2], 1), (&[1, 1, 1], 1)]);
        assert_eq!(u_two_row_closed_form(&part(&[3, 2])).unwrap(), u32_);
        assert_eq!(u_schur_expansion(&part(&[3, 2])), u32_);
        assert!(matches!(
            u_two_row_closed_form(&part(&[3, 2, 1])),
            Err(Error::NotTwoRow(_))
        ));
        assert!(u_two_row_closed_form(&part(&[3])).is_err());
    }

    /// The upper limit `k <= small - 1` alone misses `s_(m - small, 1^small)`,
    /// which comes from the gapless tableau with first row `1..m`.
    #[test]
    fn two_row_top_k_term_is_needed() {
        let literal: SchurExpansion = std::iter::once((part(&[3, 2]), 1))
            .chain((1..2).flat_map(|k| {
                [
                    (part(&[3 - k, 2 - k, 1]), 1),
                    (part(&[3 - k, 2 - k + 1]), 1),
                ]
            }))
            .collect();
        let computed = u_schur_expansion(&part(&[3, 2]));
        assert_ne!(literal, computed);
        let mut with_top = literal.clone();
        with_top.add_term(part(&[1, 1, 1]), 1);
        assert_eq!(with_top, computed);
        assert_eq!(
            enumerate_gapless_increasing(&part(&[3, 2]), Some(3))[0].to_string(),
            "1 2 3/2 3"
        );
    }
}
