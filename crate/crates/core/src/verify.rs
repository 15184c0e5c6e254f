//! Cross-checks of every construction of `U_lambda` against the others for a
//! single shape and variable count.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::combinatorics::{positive_part, refines, Partition, StrongComposition, WeakComposition};
use crate::genomic_schur::{
    descent_expansion, qy_expansion, two_row_flag_shapes, u_poly_direct, u_two_row_closed_form,
};
use crate::sym_poly::{
    fundamental_expansion_to_poly, fundamental_to_schur, schur_expansion_to_poly, SchurExpansion,
};
use crate::tableaux::{
    enumerate_gapless_increasing, enumerate_genomic, enumerate_qy_genomic, enumerate_standard,
    k_semistandardize, GenomicTableau,
};

pub const CHECK_NAMES: [&str; 10] = [
    "EQ-DEF-QY",
    "EQ-QY-INC",
    "EQ-SCHUR",
    "POSITIVITY",
    "SYMMETRY",
    "FIBER-LAW",
    "PHI-PSI",
    "TWO-ROW",
    "TWO-ROW-BIJECTION-COUNTS",
    "DEGREE-RANGE",
];

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    #[serde(serialize_with = "serialize_partition")]
    pub shape: Partition,
    pub num_vars: usize,
    pub checks: Vec<Check>,
}

fn serialize_partition<S: serde::Serializer>(p: &Partition, s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(p.parts())
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "shape {} in {} variables", self.shape, self.num_vars)?;
        for c in &self.checks {
            writeln!(
                f,
                "{} {}: {}",
                if c.passed { "PASS" } else { "FAIL" },
                c.name,
                c.detail
            )?;
        }
        write!(
            f,
            "{}",
            if self.passed() {
                "all checks passed"
            } else {
                "verification FAILED"
            }
        )
    }
}

fn outcome(ok: bool, pass: impl Into<String>, fail: impl Into<String>) -> (bool, String) {
    if ok {
        (true, pass.into())
    } else {
        (false, fail.into())
    }
}

/// Every genomic tableau with entries at most `n` regularizes to a
/// quasiYamanouchi `U`, and the weights over each fiber are exactly the weak
/// compositions of length `n` whose positive part refines `wt(U)`, each once.
fn fiber_law(lambda: &Partition, n: u32, qy: &[GenomicTableau]) -> (bool, String) {
    let mut fibers: BTreeMap<GenomicTableau, Vec<WeakComposition>> = BTreeMap::new();
    let all = enumerate_genomic(lambda, n);
    for v in &all {
        let u = v.regularize();
        if !u.is_quasi_yamanouchi() {
            return (false, format!("reg({v}) = {u} is not quasiYamanouchi"));
        }
        fibers
            .entry(u)
            .or_default()
            .push(v.weight().padded(n as usize));
    }
    if fibers.keys().any(|u| qy.binary_search(u).is_err()) {
        return (
            false,
            "a fiber lands outside the quasiYamanouchi set".into(),
        );
    }
    for u in qy {
        let target = StrongComposition::new(u.weight().entries().to_vec()).unwrap();
        let expected: Vec<WeakComposition> =
            WeakComposition::all_of_size_and_len(target.size(), n as usize)
                .into_iter()
                .filter(|a| refines(&positive_part(a), &target))
                .collect();
        let mut got = fibers.remove(u).unwrap_or_default();
        got.sort();
        if got != expected {
            return (
                false,
                format!("fiber over {u} has weights {got:?}, expected {expected:?}"),
            );
        }
    }
    (
        true,
        format!(
            "{} genomic tableaux split into {} fibers",
            all.len(),
            qy.len()
        ),
    )
}

fn phi_psi(lambda: &Partition, qy: &[GenomicTableau]) -> (bool, String) {
    let inc = enumerate_gapless_increasing(lambda, None);
    let mut images: Vec<_> = qy.iter().map(GenomicTableau::k_standardize).collect();
    images.sort();
    if images != inc {
        return (
            false,
            "K-standardization is not a bijection onto gapless tableaux".into(),
        );
    }
    for u in qy {
        let v = u.k_standardize();
        if k_semistandardize(&v) != *u {
            return (false, format!("Psi(Phi({u})) differs"));
        }
        if v.descent_composition().parts() != u.weight().entries() {
            return (
                false,
                format!("wt({u}) != Des(Phi) = {}", v.descent_composition()),
            );
        }
    }
    for v in &inc {
        let psi = k_semistandardize(v);
        if !psi.is_quasi_yamanouchi() || psi.k_standardize() != *v {
            return (false, format!("Phi(Psi({v})) differs"));
        }
        if !v.is_pieri_filled(&v.descent_composition()) {
            return (false, format!("{v} is not Des-Pieri-filled"));
        }
    }
    (
        true,
        format!(
            "{} tableaux, inverse bijections, all Pieri-filled",
            inc.len()
        ),
    )
}

fn two_row_counts(lambda: &Partition) -> (bool, String) {
    let &[m, small] = lambda.parts() else {
        return (true, "not applicable: shape does not have two rows".into());
    };
    let mut total = 0usize;
    for k in 0..=small {
        let inc = enumerate_gapless_increasing(lambda, Some(m + small - k));
        let mut syt = Vec::new();
        for shape in two_row_flag_shapes(m, small, k) {
            syt.extend(enumerate_standard(&shape));
        }
        if inc.len() != syt.len() {
            return (
                false,
                format!(
                    "max entry {}: {} gapless vs {} standard",
                    m + small - k,
                    inc.len(),
                    syt.len()
                ),
            );
        }
        if descent_expansion(&inc) != descent_expansion(&syt) {
            return (
                false,
                format!("max entry {}: descent multisets differ", m + small - k),
            );
        }
        total += inc.len();
    }
    let all = enumerate_gapless_increasing(lambda, None).len();
    outcome(
        all == total,
        format!("{all} gapless tableaux matched with standard flag tableaux"),
        format!("{all} gapless tableaux but only {total} with max entry in range"),
    )
}

pub fn verify(lambda: &Partition, n: usize) -> VerificationReport {
    assert!(n >= 1, "need at least one variable");
    let direct = u_poly_direct(lambda, n);
    let qy_bounded = enumerate_qy_genomic(lambda, Some(n as u32));
    let qy_all = enumerate_qy_genomic(lambda, None);
    let inc_exp = descent_expansion(&enumerate_gapless_increasing(lambda, None));
    let qy_exp = qy_expansion(&qy_all);
    let schur = fundamental_to_schur(&inc_exp);
    let size = lambda.size();

    let mut checks = Vec::with_capacity(CHECK_NAMES.len());
    let mut push = |name: &'static str, (passed, detail): (bool, String)| {
        checks.push(Check {
            name,
            passed,
            detail,
        });
    };

    push(
        "EQ-DEF-QY",
        outcome(
            fundamental_expansion_to_poly(&qy_expansion(&qy_bounded), n) == direct,
            format!(
                "{} quasiYamanouchi tableaux with entries <= {n}",
                qy_bounded.len()
            ),
            "fundamental sum over quasiYamanouchi tableaux differs from the direct sum",
        ),
    );
    push(
        "EQ-QY-INC",
        outcome(
            qy_exp == inc_exp,
            format!("{} terms, total {}", inc_exp.len(), inc_exp.total()),
            format!("quasiYamanouchi: {qy_exp}; increasing: {inc_exp}"),
        ),
    );
    push(
        "EQ-SCHUR",
        outcome(
            schur_expansion_to_poly(&schur, n) == direct,
            format!("{schur}"),
            format!("Schur expansion {schur} disagrees with the direct polynomial"),
        ),
    );
    push(
        "POSITIVITY",
        outcome(
            inc_exp.all_positive(),
            "all fundamental coefficients positive",
            "a fundamental coefficient is not positive",
        ),
    );
    push(
        "SYMMETRY",
        outcome(
            direct.is_symmetric(),
            format!(
                "{} monomials, invariant under adjacent transpositions",
                direct.len()
            ),
            "direct polynomial is not symmetric",
        ),
    );
    push("FIBER-LAW", fiber_law(lambda, n as u32, &qy_bounded));
    push("PHI-PSI", phi_psi(lambda, &qy_all));
    push(
        "TWO-ROW",
        match u_two_row_closed_form(lambda) {
            Err(_) => (true, "not applicable: shape does not have two rows".into()),
            Ok(closed) => outcome(
                closed == schur && closed.terms().iter().all(|&(_, c)| c == 1),
                format!("closed form {closed} matches"),
                format!("closed form {closed} vs computed {schur}"),
            ),
        },
    );
    push("TWO-ROW-BIJECTION-COUNTS", two_row_counts(lambda));
    let top: SchurExpansion = [(lambda.clone(), 1)].into_iter().collect();
    push(
        "DEGREE-RANGE",
        outcome(
            schur.max_degree().unwrap_or(0) == size && schur.degree_slice(size) == top,
            format!(
                "degrees {}..={size}, top slice s[{lambda}]",
                schur.min_degree().unwrap_or(0)
            ),
            format!("top-degree slice is {}", schur.degree_slice(size)),
        ),
    );
    debug_assert!(checks.iter().map(|c| c.name).eq(CHECK_NAMES));

    VerificationReport {
        shape: lambda.clone(),
        num_vars: n,
        checks,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_shapes_verify() {
        for (shape, n) in [("1", 1), ("3,3", 3), ("2,1", 2), ("2,2,1", 4)] {
            let report = verify(&shape.parse().unwrap(), n);
            assert!(report.passed(), "{report}");
            assert_eq!(report.checks.len(), CHECK_NAMES.len());
        }
    }

    #[test]
    fn report_rendering() {
        let report = verify(&"2".parse().unwrap(), 2);
        let text = report.to_string();
        assert!(text.starts_with("shape 2 in 2 variables\nPASS EQ-DEF-QY"));
        assert!(text.ends_with("all checks passed"));
        assert!(report
            .check("TWO-ROW")
            .unwrap()
            .detail
            .starts_with("not applicable"));
    }
}
