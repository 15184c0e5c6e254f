//! Semistandard, increasing, standard, and genomic tableaux of straight
//! shape, their exhaustive enumeration, and the maps between them.
//!
//! Every enumerator returns its tableaux sorted by row-reading word (entries
//! first, then gene identifiers), so outputs are deterministic.

mod filling;
mod genomic;
mod increasing;

use std::ops::ControlFlow;

pub use filling::{Filling, SemistandardTableau};
pub use genomic::{
    is_quasi_yamanouchi, is_valid_genomic, k_semistandardize, validate_genes, GenomicTableau,
};
pub use increasing::{DescentSet, IncreasingTableau};

use crate::combinatorics::Partition;
use crate::error::{Error, Result};

/// Collects visited objects, stopping once more than `limit` have been seen.
struct Collector<T> {
    items: Vec<T>,
    limit: Option<usize>,
}

impl<T> Collector<T> {
    fn new(limit: Option<usize>) -> Self {
        Collector {
            items: Vec::new(),
            limit,
        }
    }

    fn push(&mut self, item: T) -> ControlFlow<()> {
        self.items.push(item);
        match self.limit {
            Some(l) if self.items.len() > l => ControlFlow::Break(()),
            _ => ControlFlow::Continue(()),
        }
    }

    fn finish(self, flow: ControlFlow<()>) -> Result<Vec<T>>
    where
        T: Ord,
    {
        if flow.is_break() {
            return Err(Error::LimitExceeded(self.limit.unwrap_or(0)));
        }
        let mut items = self.items;
        items.sort();
        Ok(items)
    }
}

/// Largest number of cells still missing from any single column.
fn column_deficit(rows: &[Vec<u32>], shape: &[usize]) -> usize {
    let cols = shape.first().copied().unwrap_or(0);
    (0..cols)
        .map(|c| {
            rows.iter()
                .zip(shape)
                .filter(|(row, &len)| row.len() <= c && c < len)
                .count()
        })
        .max()
        .unwrap_or(0)
}

/// Builds semistandard tableaux one label at a time: the cells labeled `i`
/// form a horizontal strip added to the shape filled by labels `< i`.
///
/// In quasiYamanouchi mode every strip is nonempty and, from label 2 on, its
/// leftmost column is at most the rightmost column of the previous strip.
struct StripWalk<'a, F> {
    shape: &'a [usize],
    max_entry: u32,
    quasi_yamanouchi: bool,
    visit: F,
}

impl<F: FnMut(&[Vec<u32>]) -> ControlFlow<()>> StripWalk<'_, F> {
    fn layer(
        &mut self,
        rows: &mut Vec<Vec<u32>>,
        label: u32,
        prev: Option<(usize, usize)>,
    ) -> ControlFlow<()> {
        if rows
            .iter()
            .zip(self.shape)
            .all(|(row, &len)| row.len() == len)
        {
            return (self.visit)(rows);
        }
        if label > self.max_entry
            || column_deficit(rows, self.shape) > (self.max_entry - label + 1) as usize
        {
            return ControlFlow::Continue(());
        }
        let old: Vec<usize> = rows.iter().map(Vec::len).collect();
        self.strip_row(rows, &old, 0, label, prev, None)
    }

    fn strip_row(
        &mut self,
        rows: &mut Vec<Vec<u32>>,
        old: &[usize],
        r: usize,
        label: u32,
        prev: Option<(usize, usize)>,
        strip: Option<(usize, usize)>,
    ) -> ControlFlow<()> {
        if r == rows.len() {
            return match strip {
                None if self.quasi_yamanouchi => ControlFlow::Continue(()),
                None => self.layer(rows, label + 1, prev),
                Some((lo, hi)) => {
                    if self.quasi_yamanouchi && label > 1 && lo > prev.map_or(0, |p| p.1) {
                        return ControlFlow::Continue(());
                    }
                    self.layer(rows, label + 1, Some((lo, hi)))
                }
            };
        }
        let cap = if r == 0 {
            self.shape[0]
        } else {
            old[r - 1].min(self.shape[r])
        };
        for new_len in old[r]..=cap {
            rows[r].resize(new_len, label);
            let strip = if new_len > old[r] {
                let (lo, hi) = (old[r], new_len - 1);
                Some(strip.map_or((lo, hi), |(a, b)| (a.min(lo), b.max(hi))))
            } else {
                strip
            };
            self.strip_row(rows, old, r + 1, label, prev, strip)?;
        }
        rows[r].truncate(old[r]);
        ControlFlow::Continue(())
    }
}

fn walk_semistandard(
    shape: &Partition,
    max_entry: u32,
    quasi_yamanouchi: bool,
    visit: impl FnMut(&[Vec<u32>]) -> ControlFlow<()>,
) -> ControlFlow<()> {
    let dims: Vec<usize> = shape.parts().iter().map(|&p| p as usize).collect();
    let mut walk = StripWalk {
        shape: &dims,
        max_entry,
        quasi_yamanouchi,
        visit,
    };
    walk.layer(&mut vec![Vec::new(); dims.len()], 1, None)
}

/// Every gene decomposition of a semistandard filling, in canonical numbering.
///
/// The cells of one label sit in distinct columns; genes are runs of
/// consecutive cells in column order, and two column-neighbours in the same
/// row must be separated.
fn gene_decompositions(
    labels: &Filling,
    mut visit: impl FnMut(GenomicTableau) -> ControlFlow<()>,
) -> ControlFlow<()> {
    let max = labels.max_entry() as usize;
    let mut by_label: Vec<Vec<(usize, usize)>> = vec![Vec::new(); max + 1];
    for ((r, c), v) in labels.cells() {
        by_label[v as usize].push((r, c));
    }
    // For each cell after the first of its label: the index of the optional
    // join with its column predecessor, or None when a cut is forced.
    let mut num_optional = 0;
    let mut join_slot: Vec<Vec<Option<usize>>> = Vec::with_capacity(by_label.len());
    for cells in by_label.iter_mut() {
        cells.sort_unstable_by_key(|&(_, c)| c);
        let slots = (0..cells.len())
            .map(|k| {
                (k > 0 && cells[k - 1].0 != cells[k].0).then(|| {
                    num_optional += 1;
                    num_optional - 1
                })
            })
            .collect();
        join_slot.push(slots);
    }

    let mut joined = vec![false; num_optional];
    loop {
        let mut genes: Vec<Vec<u32>> = labels.rows().iter().map(|row| vec![0; row.len()]).collect();
        let mut next_id = 0u32;
        for (cells, slots) in by_label.iter().zip(&join_slot) {
            for (&(r, c), slot) in cells.iter().zip(slots) {
                if !slot.is_some_and(|i| joined[i]) {
                    next_id += 1;
                }
                genes[r][c] = next_id;
            }
        }
        visit(GenomicTableau::from_parts_unchecked(
            labels.clone(),
            Filling::from_rows_unchecked(genes),
        ))?;

        // binary increment over the optional joins
        match joined.iter().position(|&j| !j) {
            None => return ControlFlow::Continue(()),
            Some(p) => {
                joined[..p].iter_mut().for_each(|j| *j = false);
                joined[p] = true;
            }
        }
    }
}

/// Semistandard tableaux of `shape` with entries at most `n`.
pub fn enumerate_semistandard(shape: &Partition, n: u32) -> Vec<SemistandardTableau> {
    let mut out = Collector::new(None);
    let flow = walk_semistandard(shape, n, false, |rows| {
        out.push(SemistandardTableau::new_unchecked(
            Filling::from_rows_unchecked(rows.to_vec()),
        ))
    });
    out.finish(flow).expect("no limit")
}

/// All genomic tableaux of `shape` with entries at most `n`.
pub fn enumerate_genomic(shape: &Partition, n: u32) -> Vec<GenomicTableau> {
    enumerate_genomic_limited(shape, n, None).expect("no limit")
}

pub fn enumerate_genomic_limited(
    shape: &Partition,
    n: u32,
    limit: Option<usize>,
) -> Result<Vec<GenomicTableau>> {
    let mut out = Collector::new(limit);
    let flow = walk_semistandard(shape, n, false, |rows| {
        gene_decompositions(&Filling::from_rows_unchecked(rows.to_vec()), |t| {
            out.push(t)
        })
    });
    out.finish(flow)
}

/// QuasiYamanouchi genomic tableaux of `shape`, with entries at most `n` when
/// given. Without a bound the set is still finite: a quasiYamanouchi tableau
/// uses labels `1..=m` with `m <= |shape|`.
pub fn enumerate_qy_genomic(shape: &Partition, n: Option<u32>) -> Vec<GenomicTableau> {
    enumerate_qy_genomic_limited(shape, n, None).expect("no limit")
}

pub fn enumerate_qy_genomic_limited(
    shape: &Partition,
    n: Option<u32>,
    limit: Option<usize>,
) -> Result<Vec<GenomicTableau>> {
    let bound = n.unwrap_or(shape.size()).min(shape.size().max(1));
    let mut out = Collector::new(limit);
    let flow = walk_semistandard(shape, bound, true, |rows| {
        gene_decompositions(&Filling::from_rows_unchecked(rows.to_vec()), |t| {
            out.push(t)
        })
    });
    out.finish(flow)
}

/// Builds increasing tableaux one value at a time: the cells holding value `v`
/// are a nonempty set of addable corners of the shape filled by values `< v`.
fn walk_increasing(
    shape: &Partition,
    max_entry: Option<u32>,
    standard: bool,
    visit: &mut impl FnMut(&[Vec<u32>]) -> ControlFlow<()>,
) -> ControlFlow<()> {
    fn go(
        dims: &[usize],
        rows: &mut Vec<Vec<u32>>,
        value: u32,
        max_entry: Option<u32>,
        standard: bool,
        visit: &mut impl FnMut(&[Vec<u32>]) -> ControlFlow<()>,
    ) -> ControlFlow<()> {
        let remaining: usize = rows
            .iter()
            .zip(dims)
            .map(|(row, &len)| len - row.len())
            .sum();
        if remaining == 0 {
            return match max_entry {
                Some(m) if m != value - 1 => ControlFlow::Continue(()),
                _ => visit(rows),
            };
        }
        if let Some(m) = max_entry {
            let layers_left = (m + 1).saturating_sub(value) as usize;
            if layers_left == 0
                || layers_left > remaining
                || column_deficit(rows, dims) > layers_left
            {
                return ControlFlow::Continue(());
            }
        }
        let corners: Vec<usize> = (0..dims.len())
            .filter(|&r| rows[r].len() < dims[r] && (r == 0 || rows[r - 1].len() > rows[r].len()))
            .collect();
        let subsets: Vec<u32> = if standard {
            (0..corners.len()).map(|k| 1 << k).collect()
        } else {
            (1..1u32 << corners.len()).collect()
        };
        for mask in subsets {
            let chosen: Vec<usize> = (0..corners.len())
                .filter(|k| mask & (1 << k) != 0)
                .map(|k| corners[k])
                .collect();
            for &r in &chosen {
                rows[r].push(value);
            }
            let flow = go(dims, rows, value + 1, max_entry, standard, visit);
            for &r in &chosen {
                rows[r].pop();
            }
            flow?;
        }
        ControlFlow::Continue(())
    }

    let dims: Vec<usize> = shape.parts().iter().map(|&p| p as usize).collect();
    go(
        &dims,
        &mut vec![Vec::new(); dims.len()],
        1,
        max_entry,
        standard,
        visit,
    )
}

/// Gapless increasing tableaux of `shape` (entry set `{1, ..., m}`), with
/// `m = max_entry` when given.
pub fn enumerate_gapless_increasing(
    shape: &Partition,
    max_entry: Option<u32>,
) -> Vec<IncreasingTableau> {
    enumerate_gapless_increasing_limited(shape, max_entry, None).expect("no limit")
}

pub fn enumerate_gapless_increasing_limited(
    shape: &Partition,
    max_entry: Option<u32>,
    limit: Option<usize>,
) -> Result<Vec<IncreasingTableau>> {
    let mut out = Collector::new(limit);
    let flow = walk_increasing(shape, max_entry, false, &mut |rows| {
        out.push(IncreasingTableau::new_unchecked(
            Filling::from_rows_unchecked(rows.to_vec()),
        ))
    });
    out.finish(flow)
}

/// Standard Young tableaux of `shape`.
pub fn enumerate_standard(shape: &Partition) -> Vec<IncreasingTableau> {
    let mut out = Collector::new(None);
    let flow = walk_increasing(shape, None, true, &mut |rows| {
        out.push(IncreasingTableau::new_unchecked(
            Filling::from_rows_unchecked(rows.to_vec()),
        ))
    });
    out.finish(flow).expect("no limit")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::StrongComposition;
    use std::collections::BTreeSet;

    fn part(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    /// Every filling of `shape` with entries `1..=n`, by brute force.
    fn all_fillings(shape: &Partition, n: u32) -> Vec<Filling> {
        let cells: Vec<(usize, usize)> = shape.cells().collect();
        let mut out = Vec::new();
        let mut values = vec![1u32; cells.len()];
        loop {
            let f = Filling::from_shape_fn(shape, |r, c| {
                values[cells.iter().position(|&x| x == (r, c)).unwrap()]
            });
            out.push(f);
            let Some(k) = values.iter().rposition(|&v| v < n) else {
                return out;
            };
            values[k] += 1;
            values[k + 1..].iter_mut().for_each(|v| *v = 1);
        }
    }

    /// All set partitions of `0..m` as restricted growth strings.
    fn set_partitions(m: usize) -> Vec<Vec<u32>> {
        fn go(m: usize, cur: &mut Vec<u32>, max: u32, out: &mut Vec<Vec<u32>>) {
            if cur.len() == m {
                out.push(cur.clone());
                return;
            }
            for b in 1..=max + 1 {
                cur.push(b);
                go(m, cur, max.max(b), out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(m, &mut Vec::new(), 0, &mut out);
        out
    }

    /// Genomic tableaux by brute force: every SSYT times every partition of
    /// its cells, filtered by the definition.
    fn genomic_oracle(shape: &Partition, n: u32) -> BTreeSet<GenomicTableau> {
        let cells: Vec<(usize, usize)> = shape.cells().collect();
        let mut out = BTreeSet::new();
        for f in all_fillings(shape, n) {
            let Ok(ssyt) = SemistandardTableau::try_from(f) else {
                continue;
            };
            for blocks in set_partitions(cells.len()) {
                let genes = Filling::from_shape_fn(shape, |r, c| {
                    blocks[cells.iter().position(|&x| x == (r, c)).unwrap()]
                });
                if let Ok(t) = GenomicTableau::new(ssyt.clone(), genes) {
                    out.insert(t);
                }
            }
        }
        out
    }

    #[test]
    fn genomic_small_shapes() {
        assert_eq!(enumerate_genomic(&part(&[1]), 2).len(), 2);
        let row = enumerate_genomic(&part(&[2]), 2);
        let weights: Vec<Vec<u32>> = row.iter().map(|t| t.weight().entries().to_vec()).collect();
        assert_eq!(weights, vec![vec![2], vec![1, 1], vec![0, 2]]);
    }

    #[test]
    fn genomic_matches_brute_force() {
        for (shape, n) in [
            (part(&[2, 1]), 2),
            (part(&[2, 1]), 3),
            (part(&[2, 2]), 3),
            (part(&[3, 1]), 3),
        ] {
            let fast: Vec<GenomicTableau> = enumerate_genomic(&shape, n);
            let oracle: Vec<GenomicTableau> = genomic_oracle(&shape, n).into_iter().collect();
            assert_eq!(fast, oracle, "shape {shape}, n = {n}");
        }
        // (2,1), n = 2: "1 1/2", and "1 2/2" with the two 2s split or joined
        let frozen: Vec<String> = enumerate_genomic(&part(&[2, 1]), 2)
            .iter()
            .map(ToString::to_string)
            .collect();
        assert_eq!(
            frozen,
            vec!["1 1/2 | 1 2/3", "1 2/2 | 1 2/2", "1 2/2 | 1 3/2"]
        );
    }

    #[test]
    fn semistandard_matches_brute_force() {
        for (shape, n) in [
            (part(&[2, 1]), 3),
            (part(&[3, 2]), 3),
            (part(&[2, 2, 1]), 4),
        ] {
            let oracle: Vec<SemistandardTableau> = all_fillings(&shape, n)
                .into_iter()
                .filter_map(|f| f.try_into().ok())
                .collect();
            assert_eq!(enumerate_semistandard(&shape, n), oracle);
        }
    }

    #[test]
    fn increasing_matches_brute_force() {
        for shape in [part(&[2, 2]), part(&[3, 2]), part(&[2, 2, 1])] {
            let n = shape.size();
            let oracle: Vec<IncreasingTableau> = all_fillings(&shape, n)
                .into_iter()
                .filter(Filling::is_gapless)
                .filter_map(|f| f.try_into().ok())
                .collect();
            assert_eq!(enumerate_gapless_increasing(&shape, None), oracle);
            let standard: Vec<IncreasingTableau> = oracle
                .iter()
                .filter(|t| t.filling().is_standard())
                .cloned()
                .collect();
            assert_eq!(enumerate_standard(&shape), standard);
        }
    }

    #[test]
    fn quasi_yamanouchi_matches_filter() {
        // one label beyond |shape| never yields extra quasiYamanouchi tableaux
        for shape in [
            part(&[2, 1]),
            part(&[2, 2]),
            part(&[3, 2]),
            part(&[2, 1, 1]),
        ] {
            let n = shape.size() + 1;
            let filtered: Vec<GenomicTableau> = enumerate_genomic(&shape, n)
                .into_iter()
                .filter(GenomicTableau::is_quasi_yamanouchi)
                .collect();
            assert_eq!(enumerate_qy_genomic(&shape, None), filtered);
        }
    }

    #[test]
    fn counts_for_small_shapes() {
        assert_eq!(enumerate_qy_genomic(&part(&[1]), None).len(), 1);
        assert_eq!(enumerate_qy_genomic(&part(&[3, 3]), None).len(), 11);
        assert_eq!(enumerate_gapless_increasing(&part(&[3, 3]), None).len(), 11);
        assert_eq!(enumerate_gapless_increasing(&part(&[4]), None).len(), 1);
        assert_eq!(
            enumerate_gapless_increasing(&Partition::empty(), None).len(),
            1
        );
        assert_eq!(enumerate_genomic(&Partition::empty(), 3).len(), 1);
    }

    #[test]
    fn standard_tableaux() {
        let s = enumerate_standard(&part(&[2, 2]));
        let des: BTreeSet<StrongComposition> = s.iter().map(|t| t.descent_composition()).collect();
        assert_eq!(
            des,
            [vec![2, 2], vec![1, 2, 1]]
                .into_iter()
                .map(|v| StrongComposition::new(v).unwrap())
                .collect()
        );
        assert_eq!(enumerate_standard(&part(&[5])).len(), 1);
        let col = enumerate_standard(&part(&[1, 1, 1]));
        assert_eq!(col.len(), 1);
        assert_eq!(col[0].descent_composition().parts(), &[1, 1, 1]);
    }

    #[test]
    fn limit_aborts() {
        assert!(matches!(
            enumerate_genomic_limited(&part(&[2, 2]), 4, Some(5)),
            Err(Error::LimitExceeded(5))
        ));
        assert!(enumerate_gapless_increasing_limited(&part(&[3, 3]), None, Some(11)).is_ok());
        assert!(enumerate_gapless_increasing_limited(&part(&[3, 3]), None, Some(10)).is_err());
    }
}
