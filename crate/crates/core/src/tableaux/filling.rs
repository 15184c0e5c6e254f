use std::fmt;
use std::str::FromStr;

use crate::combinatorics::{Partition, WeakComposition};
use crate::error::{Error, Result};

/// Positive integers on the cells of a Young diagram, English orientation:
/// row 0 on top, rows weakly shrinking downward.
///
/// The derived ordering compares shapes first and then the row-reading word,
/// so within one shape it is the lexicographic order of reading words.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Filling {
    shape: Partition,
    rows: Vec<Vec<u32>>,
}

impl Filling {
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self> {
        let shape = Partition::new(rows.iter().map(|r| r.len() as u32).collect())?;
        if rows.iter().flatten().any(|&v| v == 0) {
            return Err(Error::Parse {
                what: "filling",
                input: format!("{rows:?}"),
                reason: "entries must be positive".into(),
            });
        }
        Ok(Filling { shape, rows })
    }

    /// Caller guarantees `rows` has partition shape and positive entries.
    pub(crate) fn from_rows_unchecked(rows: Vec<Vec<u32>>) -> Self {
        let shape = Partition::new(rows.iter().map(|r| r.len() as u32).collect())
            .expect("rows form a partition shape");
        debug_assert!(rows.iter().flatten().all(|&v| v > 0));
        Filling { shape, rows }
    }

    pub fn from_shape_fn(shape: &Partition, mut f: impl FnMut(usize, usize) -> u32) -> Self {
        let rows = shape
            .parts()
            .iter()
            .enumerate()
            .map(|(r, &len)| (0..len as usize).map(|c| f(r, c)).collect())
            .collect();
        Filling::from_rows_unchecked(rows)
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn get(&self, row: usize, col: usize) -> Option<u32> {
        self.rows.get(row).and_then(|r| r.get(col)).copied()
    }

    /// `((row, col), entry)` in row-reading order.
    pub fn cells(&self) -> impl Iterator<Item = ((usize, usize), u32)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(r, row)| row.iter().enumerate().map(move |(c, &v)| ((r, c), v)))
    }

    pub fn max_entry(&self) -> u32 {
        self.rows.iter().flatten().copied().max().unwrap_or(0)
    }

    pub fn reading_word(&self) -> Vec<u32> {
        self.rows.iter().flatten().copied().collect()
    }

    /// Number of cells carrying each label `1..=max_entry`.
    pub fn content(&self) -> WeakComposition {
        let mut counts = vec![0u32; self.max_entry() as usize];
        for &v in self.rows.iter().flatten() {
            counts[v as usize - 1] += 1;
        }
        WeakComposition::new(counts)
    }

    fn columns_strict(&self) -> bool {
        self.rows
            .windows(2)
            .all(|w| w[1].iter().zip(&w[0]).all(|(below, above)| below > above))
    }

    pub fn is_semistandard(&self) -> bool {
        self.columns_strict() && self.rows.iter().all(|r| r.windows(2).all(|w| w[0] <= w[1]))
    }

    pub fn is_increasing(&self) -> bool {
        self.columns_strict() && self.rows.iter().all(|r| r.windows(2).all(|w| w[0] < w[1]))
    }

    /// Entry set is exactly `{1, ..., max_entry}`.
    pub fn is_gapless(&self) -> bool {
        self.content().entries().iter().all(|&c| c > 0)
    }

    pub fn is_standard(&self) -> bool {
        self.is_increasing() && self.content().entries().iter().all(|&c| c == 1)
    }
}

impl FromStr for Filling {
    type Err = Error;

    /// Rows separated by `/`, entries by whitespace: `"1 2 5/3 4 6/5 7 8"`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Filling::from_rows_unchecked(Vec::new()));
        }
        let rows = s
            .split('/')
            .map(|row| {
                row.split_whitespace()
                    .map(|tok| {
                        tok.parse::<u32>().map_err(|e| Error::Parse {
                            what: "filling",
                            input: s.to_string(),
                            reason: e.to_string(),
                        })
                    })
                    .collect::<Result<Vec<u32>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Filling::new(rows)
    }
}

impl fmt::Display for Filling {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (r, row) in self.rows.iter().enumerate() {
            if r > 0 {
                f.write_str("/")?;
            }
            for (c, v) in row.iter().enumerate() {
                if c > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{v}")?;
            }
        }
        Ok(())
    }
}

/// Rows weakly increase, columns strictly increase.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SemistandardTableau(Filling);

impl SemistandardTableau {
    pub(crate) fn new_unchecked(f: Filling) -> Self {
        debug_assert!(f.is_semistandard());
        SemistandardTableau(f)
    }

    pub fn filling(&self) -> &Filling {
        &self.0
    }

    pub fn into_filling(self) -> Filling {
        self.0
    }
}

impl TryFrom<Filling> for SemistandardTableau {
    type Error = Error;

    fn try_from(f: Filling) -> Result<Self> {
        if f.is_semistandard() {
            Ok(SemistandardTableau(f))
        } else {
            Err(Error::NotTableau("semistandard"))
        }
    }
}

impl FromStr for SemistandardTableau {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.parse::<Filling>()?.try_into()
    }
}

impl fmt::Display for SemistandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_render() {
        let f: Filling = "1 2 5/3 4 6/5 7 8".parse().unwrap();
        assert_eq!(f.shape().parts(), &[3, 3, 3]);
        assert_eq!(f.get(2, 0), Some(5));
        assert_eq!(f.to_string(), "1 2 5/3 4 6/5 7 8");
        assert!(f.is_increasing());
        assert!(f.is_gapless());
        assert!(!f.is_standard());
        assert_eq!(f.content().entries(), &[1, 1, 1, 1, 2, 1, 1, 1]);
    }

    #[test]
    fn rejects_bad_shapes_and_entries() {
        assert!("1/2 3".parse::<Filling>().is_err());
        assert!("1 0".parse::<Filling>().is_err());
        assert!("1 a".parse::<Filling>().is_err());
        assert_eq!("".parse::<Filling>().unwrap().shape(), &Partition::empty());
    }

    #[test]
    fn tableau_conditions() {
        let ssyt: Filling = "1 2 2/2 3 4/4".parse().unwrap();
        assert!(ssyt.is_semistandard());
        assert!(!ssyt.is_increasing());
        assert!("1 1/1".parse::<SemistandardTableau>().is_err());
        assert!("2 1".parse::<SemistandardTableau>().is_err());
        let gap: Filling = "1 3".parse().unwrap();
        assert!(gap.is_increasing() && !gap.is_gapless());
    }
}
