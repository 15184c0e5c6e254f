use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::combinatorics::StrongComposition;
use crate::error::{Error, Result};
use crate::tableaux::filling::Filling;

/// Rows and columns strictly increase.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IncreasingTableau(Filling);

/// Descents of an increasing tableau: `i` such that some `i` lies in a
/// strictly higher row than some `i + 1`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct DescentSet(BTreeSet<u32>);

impl DescentSet {
    pub fn contains(&self, i: u32) -> bool {
        self.0.contains(&i)
    }

    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        self.0.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl FromIterator<u32> for DescentSet {
    fn from_iter<I: IntoIterator<Item = u32>>(iter: I) -> Self {
        DescentSet(iter.into_iter().collect())
    }
}

impl IncreasingTableau {
    pub(crate) fn new_unchecked(f: Filling) -> Self {
        debug_assert!(f.is_increasing());
        IncreasingTableau(f)
    }

    pub fn filling(&self) -> &Filling {
        &self.0
    }

    pub fn max_entry(&self) -> u32 {
        self.0.max_entry()
    }

    pub fn descents(&self) -> DescentSet {
        let m = self.max_entry() as usize;
        // Row range occupied by each value.
        let mut top = vec![usize::MAX; m + 1];
        let mut bottom = vec![0usize; m + 1];
        let mut present = vec![false; m + 1];
        for ((r, _), v) in self.0.cells() {
            let v = v as usize;
            top[v] = top[v].min(r);
            bottom[v] = bottom[v].max(r);
            present[v] = true;
        }
        (1..m)
            .filter(|&i| present[i] && present[i + 1] && top[i] < bottom[i + 1])
            .map(|i| i as u32)
            .collect()
    }

    /// Segment lengths of `1 2 ... m` cut after every descent.
    pub fn descent_composition(&self) -> StrongComposition {
        StrongComposition::from_descents(self.max_entry(), self.descents().iter())
    }

    /// For each block `M_i(mu)` of consecutive values, the cells carrying those
    /// values occupy distinct columns and their values weakly increase from
    /// left to right.
    pub fn is_pieri_filled(&self, mu: &StrongComposition) -> bool {
        if mu.size() != self.max_entry() {
            return false;
        }
        mu.blocks().into_iter().all(|block| {
            let mut strip: Vec<(usize, u32)> = self
                .0
                .cells()
                .filter(|(_, v)| block.contains(v))
                .map(|((_, c), v)| (c, v))
                .collect();
            strip.sort_unstable();
            strip
                .windows(2)
                .all(|w| w[0].0 < w[1].0 && w[0].1 <= w[1].1)
        })
    }
}

impl TryFrom<Filling> for IncreasingTableau {
    type Error = Error;

    fn try_from(f: Filling) -> Result<Self> {
        if f.is_increasing() {
            Ok(IncreasingTableau(f))
        } else {
            Err(Error::NotTableau("increasing"))
        }
    }
}

impl FromStr for IncreasingTableau {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        s.parse::<Filling>()?.try_into()
    }
}

impl fmt::Display for IncreasingTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}
