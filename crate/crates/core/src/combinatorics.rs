//! Partitions, compositions, refinement, and straightening of composition
//! Schur functions.

use std::fmt;
use std::ops::Range;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<u32>);

/// A finite sequence of nonnegative integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeakComposition(Vec<u32>);

/// A finite sequence of positive integers.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StrongComposition(Vec<u32>);

/// `sign * s_shape`, or zero when `sign == 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignedPartition {
    pub sign: i8,
    pub shape: Partition,
}

impl SignedPartition {
    pub fn zero() -> Self {
        SignedPartition {
            sign: 0,
            shape: Partition::empty(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.sign == 0
    }
}

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        let decreasing = parts.windows(2).all(|w| w[0] >= w[1]);
        if !decreasing || parts.contains(&0) {
            return Err(Error::NotAPartition(parts));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn into_parts(self) -> Vec<u32> {
        self.0
    }

    /// Number of rows.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of cells.
    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn row_len(&self, row: usize) -> usize {
        self.0.get(row).map_or(0, |&p| p as usize)
    }

    /// Cells `(row, col)` in row-reading order.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(r, &len)| (0..len as usize).map(move |c| (r, c)))
    }

    /// All partitions of `n`, largest first in lexicographic order.
    pub fn all_of_size(n: u32) -> Vec<Partition> {
        fn go(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                cur.push(p);
                go(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// All partitions whose diagram fits in a `rows x cols` box, including
    /// the empty partition.
    pub fn in_box(rows: usize, cols: u32) -> Vec<Partition> {
        fn go(rows: usize, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
            out.push(Partition(cur.clone()));
            if cur.len() == rows {
                return;
            }
            for p in 1..=max {
                cur.push(p);
                go(rows, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(rows, cols, &mut Vec::new(), &mut out);
        out
    }
}

impl WeakComposition {
    pub fn new(entries: Vec<u32>) -> Self {
        WeakComposition(entries)
    }

    pub fn entries(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Extends with trailing zeros to length `n`; never truncates.
    pub fn padded(&self, n: usize) -> WeakComposition {
        let mut v = self.0.clone();
        if v.len() < n {
            v.resize(n, 0);
        }
        WeakComposition(v)
    }

    /// Every weak composition of `size` with exactly `len` entries, in
    /// lexicographic order.
    pub fn all_of_size_and_len(size: u32, len: usize) -> Vec<WeakComposition> {
        fn go(rest: u32, slots: usize, cur: &mut Vec<u32>, out: &mut Vec<WeakComposition>) {
            if slots == 0 {
                if rest == 0 {
                    out.push(WeakComposition(cur.clone()));
                }
                return;
            }
            for v in 0..=rest {
                cur.push(v);
                go(rest - v, slots - 1, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(size, len, &mut Vec::new(), &mut out);
        out
    }
}

impl StrongComposition {
    pub fn new(entries: Vec<u32>) -> Result<Self> {
        if entries.contains(&0) {
            return Err(Error::NotAComposition(entries));
        }
        Ok(StrongComposition(entries))
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// The consecutive value blocks `M_1 = {1..a_1}, M_2 = {a_1+1..a_1+a_2}, ...`
    /// as half-open ranges of values.
    pub fn blocks(&self) -> Vec<Range<u32>> {
        let mut start = 1;
        self.0
            .iter()
            .map(|&p| {
                let r = start..start + p;
                start += p;
                r
            })
            .collect()
    }

    /// Partial sums `a_1, a_1 + a_2, ...` excluding the total.
    pub fn descent_positions(&self) -> Vec<u32> {
        let mut acc = 0;
        let mut out = Vec::with_capacity(self.0.len().saturating_sub(1));
        for &p in &self.0[..self.0.len().saturating_sub(1)] {
            acc += p;
            out.push(acc);
        }
        out
    }

    /// Inverse of [`descent_positions`](Self::descent_positions) for a
    /// composition of `n`.
    pub fn from_descents(n: u32, descents: impl IntoIterator<Item = u32>) -> StrongComposition {
        let mut parts = Vec::new();
        let mut last = 0;
        for d in descents {
            debug_assert!(d > last && d < n);
            parts.push(d - last);
            last = d;
        }
        if n > last {
            parts.push(n - last);
        }
        StrongComposition(parts)
    }
}

impl From<Partition> for StrongComposition {
    fn from(p: Partition) -> Self {
        StrongComposition(p.0)
    }
}

impl From<StrongComposition> for WeakComposition {
    fn from(c: StrongComposition) -> Self {
        WeakComposition(c.0)
    }
}

/// Drops the zero entries of a weak composition.
pub fn positive_part(a: &WeakComposition) -> StrongComposition {
    StrongComposition(a.0.iter().copied().filter(|&x| x > 0).collect())
}

/// Whether `alpha` is obtained from `beta` by summing consecutive entries.
pub fn refines(beta: &StrongComposition, alpha: &StrongComposition) -> bool {
    if beta.size() != alpha.size() {
        return false;
    }
    let mut it = beta.0.iter();
    for &target in &alpha.0 {
        let mut acc = 0;
        while acc < target {
            match it.next() {
                Some(&b) => acc += b,
                None => return false,
            }
        }
        if acc != target {
            return false;
        }
    }
    it.next().is_none()
}

/// Rewrites the composition Schur function `s_alpha = det(h_{alpha_i - i + j})`
/// as `0` or `±s_lambda`.
///
/// Zero entries are allowed. With `beta_i = alpha_i - i`, the determinant
/// vanishes when two `beta_i` coincide; otherwise sorting `beta` into
/// strictly decreasing order by a permutation `sigma` gives
/// `lambda_i = beta_sigma(i) + i` and sign `sgn(sigma)`.
pub fn straighten(alpha: &[u32]) -> SignedPartition {
    let mut beta: Vec<i64> = alpha
        .iter()
        .enumerate()
        .map(|(i, &a)| a as i64 - (i as i64 + 1))
        .collect();

    // Insertion sort into decreasing order, counting transpositions.
    let mut swaps = 0usize;
    for i in 1..beta.len() {
        let mut j = i;
        while j > 0 && beta[j - 1] < beta[j] {
            beta.swap(j - 1, j);
            swaps += 1;
            j -= 1;
        }
        if j > 0 && beta[j - 1] == beta[j] {
            return SignedPartition::zero();
        }
    }

    let mut parts = Vec::with_capacity(beta.len());
    for (i, b) in beta.iter().enumerate() {
        let part = b + i as i64 + 1;
        if part < 0 {
            return SignedPartition::zero();
        }
        parts.push(part as u32);
    }
    while parts.last() == Some(&0) {
        parts.pop();
    }
    SignedPartition {
        sign: if swaps.is_multiple_of(2) { 1 } else { -1 },
        shape: Partition(parts),
    }
}

fn parse_parts(what: &'static str, s: &str) -> Result<Vec<u32>> {
    let s = s.trim();
    let s = s
        .strip_prefix('[')
        .and_then(|t| t.strip_suffix(']'))
        .or_else(|| s.strip_prefix('(').and_then(|t| t.strip_suffix(')')))
        .unwrap_or(s);
    if s.trim().is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|tok| {
            tok.trim().parse::<u32>().map_err(|e| Error::Parse {
                what,
                input: s.to_string(),
                reason: e.to_string(),
            })
        })
        .collect()
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Partition::new(parse_parts("partition", s)?)
    }
}

impl FromStr for StrongComposition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        StrongComposition::new(parse_parts("composition", s)?)
    }
}

fn write_parts(f: &mut fmt::Formatter<'_>, parts: &[u32]) -> fmt::Result {
    for (i, p) in parts.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{p}")?;
    }
    Ok(())
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.0)
    }
}

impl fmt::Display for StrongComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.0)
    }
}

impl fmt::Display for WeakComposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(f, &self.0)
    }
}
