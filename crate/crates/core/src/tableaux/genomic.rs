use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::combinatorics::WeakComposition;
use crate::error::{Error, GeneViolation, Result};
use crate::tableaux::filling::{Filling, SemistandardTableau};
use crate::tableaux::increasing::IncreasingTableau;

/// A semistandard tableau together with a decomposition of each label's cells
/// into genes.
///
/// Genes are stored as a parallel filling of gene identifiers in canonical
/// numbering: `1..=G`, ordered by label and then by leftmost column. Two
/// genomic tableaux are equal exactly when their canonical forms are.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GenomicTableau {
    labels: Filling,
    genes: Filling,
}

/// Checks that `genes` assigns every cell of `base` to a gene and that the
/// result is a genomic tableau: genes are label-homogeneous, each gene is a
/// column interval of its label's cells, and no gene has two cells in a row.
pub fn validate_genes(base: &SemistandardTableau, genes: &Filling) -> Result<()> {
    let labels = base.filling();
    if labels.shape() != genes.shape() {
        return Err(Error::ShapeMismatch);
    }

    // gene id -> cells
    let mut members: BTreeMap<u32, Vec<(usize, usize)>> = BTreeMap::new();
    for (cell, g) in genes.cells() {
        members.entry(g).or_default().push(cell);
    }
    let label_at = |(r, c): (usize, usize)| labels.rows()[r][c];

    for (&gene, cells) in &members {
        let label = label_at(cells[0]);
        if cells.iter().any(|&cell| label_at(cell) != label) {
            return Err(GeneViolation::MixedLabels { gene }.into());
        }
    }

    for (&gene, cells) in &members {
        let label = label_at(cells[0]);
        let lo = cells.iter().map(|&(_, c)| c).min().unwrap();
        let hi = cells.iter().map(|&(_, c)| c).max().unwrap();
        for ((r, c), v) in labels.cells() {
            if v == label && lo < c && c < hi && genes.rows()[r][c] != gene {
                return Err(GeneViolation::NotColumnInterval {
                    gene,
                    row: r,
                    col: c,
                }
                .into());
            }
        }
    }

    for (&gene, cells) in &members {
        let mut rows: Vec<usize> = cells.iter().map(|&(r, _)| r).collect();
        rows.sort_unstable();
        if let Some(w) = rows.windows(2).find(|w| w[0] == w[1]) {
            return Err(GeneViolation::TwoCellsInRow { gene, row: w[0] }.into());
        }
    }
    Ok(())
}

pub fn is_valid_genomic(base: &SemistandardTableau, genes: &Filling) -> bool {
    validate_genes(base, genes).is_ok()
}

/// Renumbers gene identifiers to `1..=G` by (label, leftmost column).
fn canonical_genes(labels: &Filling, genes: &Filling) -> Filling {
    let mut key: BTreeMap<u32, (u32, usize)> = BTreeMap::new();
    for (((_, c), label), (_, g)) in labels.cells().zip(genes.cells()) {
        key.entry(g)
            .and_modify(|k| k.1 = k.1.min(c))
            .or_insert((label, c));
    }
    let mut order: Vec<(u32, usize, u32)> = key.into_iter().map(|(g, (l, c))| (l, c, g)).collect();
    order.sort_unstable();
    let renumber: BTreeMap<u32, u32> = order
        .iter()
        .enumerate()
        .map(|(i, &(_, _, g))| (g, i as u32 + 1))
        .collect();
    Filling::from_shape_fn(genes.shape(), |r, c| renumber[&genes.rows()[r][c]])
}

/// `(min column, max column)` of the cells carrying each label, indexed by label.
fn column_spans(labels: &Filling) -> Vec<Option<(usize, usize)>> {
    let mut spans = vec![None; labels.max_entry() as usize + 1];
    for ((_, c), v) in labels.cells() {
        let s: &mut Option<(usize, usize)> = &mut spans[v as usize];
        *s = Some(match *s {
            None => (c, c),
            Some((lo, hi)) => (lo.min(c), hi.max(c)),
        });
    }
    spans
}

impl GenomicTableau {
    /// Validates the decomposition and stores it in canonical numbering.
    pub fn new(base: SemistandardTableau, genes: Filling) -> Result<Self> {
        validate_genes(&base, &genes)?;
        let labels = base.into_filling();
        let genes = canonical_genes(&labels, &genes);
        Ok(GenomicTableau { labels, genes })
    }

    pub(crate) fn from_parts_unchecked(labels: Filling, genes: Filling) -> Self {
        let genes = canonical_genes(&labels, &genes);
        let t = GenomicTableau { labels, genes };
        debug_assert!(t.labels.is_semistandard());
        t
    }

    pub fn labels(&self) -> &Filling {
        &self.labels
    }

    pub fn genes(&self) -> &Filling {
        &self.genes
    }

    pub fn num_genes(&self) -> u32 {
        self.genes.max_entry()
    }

    /// Number of `i`-genes for each label `i = 1..=max label`.
    pub fn weight(&self) -> WeakComposition {
        let mut w = vec![0u32; self.labels.max_entry() as usize];
        let mut seen = vec![false; self.num_genes() as usize + 1];
        for ((_, label), (_, g)) in self.labels.cells().zip(self.genes.cells()) {
            if !seen[g as usize] {
                seen[g as usize] = true;
                w[label as usize - 1] += 1;
            }
        }
        WeakComposition::new(w)
    }

    pub fn is_quasi_yamanouchi(&self) -> bool {
        is_quasi_yamanouchi(&self.labels)
    }

    /// Repeatedly lowers every `i` to `i - 1` while all `i`s sit strictly east
    /// of all `i - 1`s (vacuously when no `i - 1` is present), keeping genes.
    pub fn regularize(&self) -> GenomicTableau {
        let mut rows = self.labels.rows().to_vec();
        loop {
            let labels = Filling::from_rows_unchecked(rows.clone());
            let spans = column_spans(&labels);
            let movable = (2..spans.len()).find(|&i| match (spans[i - 1], spans[i]) {
                (_, None) => false,
                (None, Some(_)) => true,
                (Some((_, prev_hi)), Some((lo, _))) => lo > prev_hi,
            });
            let Some(i) = movable else {
                return GenomicTableau::from_parts_unchecked(labels, self.genes.clone());
            };
            for v in rows.iter_mut().flatten() {
                if *v == i as u32 {
                    *v -= 1;
                }
            }
        }
    }

    /// K-standardization: every cell receives the canonical index of its gene.
    pub fn k_standardize(&self) -> IncreasingTableau {
        IncreasingTableau::new_unchecked(self.genes.clone())
    }
}

/// Every label `i > 1` present has an instance weakly west of some `i - 1`.
pub fn is_quasi_yamanouchi(labels: &Filling) -> bool {
    let spans = column_spans(labels);
    (2..spans.len()).all(|i| match (spans[i - 1], spans[i]) {
        (_, None) => true,
        (None, Some(_)) => false,
        (Some((_, prev_hi)), Some((lo, _))) => lo <= prev_hi,
    })
}

/// K-semistandardization: cells whose value lies in the `i`th block of the
/// descent composition get label `i`; equal values form one gene.
pub fn k_semistandardize(v: &IncreasingTableau) -> GenomicTableau {
    let blocks = v.descent_composition().blocks();
    let f = v.filling();
    let labels = Filling::from_shape_fn(f.shape(), |r, c| {
        let value = f.rows()[r][c];
        blocks.iter().position(|b| b.contains(&value)).unwrap() as u32 + 1
    });
    GenomicTableau::from_parts_unchecked(labels, f.clone())
}

impl fmt::Display for GenomicTableau {
    /// `"1 2 2/2 3 4/4 | 1 2 3/2 4 5/5"`: labels, then gene identifiers.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} | {}", self.labels, self.genes)
    }
}

impl FromStr for GenomicTableau {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (labels, genes) = s.split_once('|').ok_or_else(|| Error::Parse {
            what: "genomic tableau",
            input: s.to_string(),
            reason: "expected `labels | genes`".into(),
        })?;
        GenomicTableau::new(labels.parse()?, genes.parse()?)
    }
}
