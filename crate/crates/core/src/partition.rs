//! Integer partitions and the few shape operations everything else is built on.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
///
/// Trailing zeros are trimmed on construction, so two partitions are equal
/// exactly when their diagrams are equal.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::NotAPartition(parts));
        }
        Ok(Partition { parts })
    }

    /// The empty partition.
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Builds a partition from column lengths (the conjugate of `cols`).
    pub fn from_columns(cols: &[usize]) -> Result<Self> {
        let p = Partition::new(cols.to_vec())?;
        Ok(p.conjugate())
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of boxes.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Part `i` (0-based), zero past the end.
    pub fn get(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Length of the first row, i.e. the number of columns.
    pub fn width(&self) -> usize {
        self.get(0)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.width();
        let parts = (0..width)
            .map(|c| self.parts.iter().take_while(|&&p| p > c).count())
            .collect();
        Partition { parts }
    }

    /// Column lengths padded (or truncated) to `width` entries.
    pub fn column_lengths(&self, width: usize) -> Vec<usize> {
        let conj = self.conjugate();
        (0..width).map(|c| conj.get(c)).collect()
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && (0..other.len()).all(|i| self.get(i) >= other.get(i))
    }

    pub fn fits_in(&self, rows: usize, cols: usize) -> bool {
        self.len() <= rows && self.width() <= cols
    }

    /// Complement of `self` inside the rectangle with `rows` rows and `cols` columns,
    /// rotated so that it is again a partition.
    pub fn rect_complement(&self, rows: usize, cols: usize) -> Result<Partition> {
        if !self.fits_in(rows, cols) {
            return Err(Error::OutOfRectangle {
                shape: self.clone(),
                rows,
                cols,
            });
        }
        let parts = (0..rows).map(|i| cols - self.get(rows - 1 - i)).collect();
        Partition::new(parts)
    }

    /// Adds one box at the end of row `row` (0-based). `None` if the result is not a partition.
    pub fn add_box(&self, row: usize) -> Option<Partition> {
        if row > self.len() || (row > 0 && self.get(row - 1) <= self.get(row)) {
            return None;
        }
        let mut parts = self.parts.clone();
        if row == parts.len() {
            parts.push(1);
        } else {
            parts[row] += 1;
        }
        Some(Partition { parts })
    }

    /// Removes the last box of row `row` (0-based). `None` if that is not a removable corner.
    pub fn remove_box(&self, row: usize) -> Option<Partition> {
        let len = self.get(row);
        if len == 0 || self.get(row + 1) >= len {
            return None;
        }
        let mut parts = self.parts.clone();
        parts[row] -= 1;
        if parts[row] == 0 {
            parts.pop();
        }
        Some(Partition { parts })
    }

    /// Rows (0-based) whose last box is a removable corner.
    pub fn corners(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&r| self.get(r) > self.get(r + 1))
            .collect()
    }

    /// All partitions of `n`, in reverse lexicographic order.
    pub fn all_of_size(n: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        partitions_rec(n, n, usize::MAX, &mut cur, &mut out);
        out
    }

    /// All partitions fitting inside the `rows` x `cols` rectangle, ordered by size
    /// and then reverse lexicographically.
    pub fn in_rectangle(rows: usize, cols: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        for n in 0..=rows * cols {
            let mut cur = Vec::new();
            partitions_rec(n, cols, rows, &mut cur, &mut out);
        }
        out
    }

    /// All partitions of size at most `max_size` with at most `max_len` parts.
    pub fn up_to_size(max_size: usize, max_len: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        for n in 0..=max_size {
            let mut cur = Vec::new();
            partitions_rec(n, n, max_len, &mut cur, &mut out);
        }
        out
    }
}

fn partitions_rec(
    rest: usize,
    max_part: usize,
    max_len: usize,
    cur: &mut Vec<usize>,
    out: &mut Vec<Partition>,
) {
    if rest == 0 {
        out.push(Partition { parts: cur.clone() });
        return;
    }
    if cur.len() == max_len {
        return;
    }
    for p in (1..=rest.min(max_part)).rev() {
        cur.push(p);
        partitions_rec(rest - p, p, max_len, cur, out);
        cur.pop();
    }
}

/// True iff `inner` is contained in `outer` and `outer / inner` has at most one box per column.
pub fn is_horizontal_strip(inner: &Partition, outer: &Partition) -> bool {
    outer.contains(inner) && (0..outer.len()).all(|i| outer.get(i + 1) <= inner.get(i))
}

/// True iff `outer / inner` has at most one box per row.
pub fn is_vertical_strip(inner: &Partition, outer: &Partition) -> bool {
    outer.contains(inner) && (0..outer.len()).all(|i| outer.get(i) <= inner.get(i) + 1)
}

/// Dominance order: `a` dominates `b` when every partial sum of `a` is at least that of `b`.
pub fn dominates(a: &Partition, b: &Partition) -> bool {
    let n = a.len().max(b.len());
    let (mut sa, mut sb) = (0, 0);
    for i in 0..n {
        sa += a.get(i);
        sb += b.get(i);
        if sa < sb {
            return false;
        }
    }
    true
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic on parts.
impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.parts.cmp(&other.parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses `[3,1]`; `[]` is the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let inner = s
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("partition must be bracketed: {s:?}")))?;
        if inner.trim().is_empty() {
            return Ok(Partition::empty());
        }
        let parts = inner
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad part {t:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

/// Shorthand used throughout the tests: `part(&[3, 1])`. Panics on invalid input.
pub fn part(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).expect("valid partition literal")
}
