//! Semistandard Young tableaux over the positive integers.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::partition::Partition;

/// A 1-based `(row, column)` position in a diagram.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Ssyt {
    rows: Vec<Vec<u32>>,
}

impl Ssyt {
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self> {
        let t = Ssyt::from_rows_unchecked(rows);
        t.validate()?;
        Ok(t)
    }

    pub(crate) fn from_rows_unchecked(mut rows: Vec<Vec<u32>>) -> Self {
        while rows.last().is_some_and(|r| r.is_empty()) {
            rows.pop();
        }
        Ssyt { rows }
    }

    pub fn empty() -> Self {
        Ssyt { rows: Vec::new() }
    }

    fn validate(&self) -> Result<()> {
        for (r, row) in self.rows.iter().enumerate() {
            if row.is_empty() {
                return Err(Error::InvalidTableau(format!("row {} is empty", r + 1)));
            }
            if row.contains(&0) {
                return Err(Error::InvalidTableau("entries must be positive".into()));
            }
            if row.windows(2).any(|w| w[0] > w[1]) {
                return Err(Error::InvalidTableau(format!("row {} decreases", r + 1)));
            }
            if r > 0 {
                let above = &self.rows[r - 1];
                if row.len() > above.len() {
                    return Err(Error::InvalidTableau("shape is not a partition".into()));
                }
                if row.iter().zip(above).any(|(b, a)| b <= a) {
                    return Err(Error::InvalidTableau(format!(
                        "column strictness fails between rows {} and {}",
                        r,
                        r + 1
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(Vec::len).collect()).expect("tableau rows form a partition")
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Entry at a 1-based cell.
    pub fn get(&self, cell: Cell) -> Option<u32> {
        self.rows
            .get(cell.row.checked_sub(1)?)?
            .get(cell.col.checked_sub(1)?)
            .copied()
    }

    pub fn max_entry(&self) -> Option<u32> {
        self.rows.iter().flatten().copied().max()
    }

    /// Entries read row by row from the top, each row right to left.
    pub fn reading_word(&self) -> Vec<u32> {
        self.rows
            .iter()
            .flat_map(|row| row.iter().rev().copied())
            .collect()
    }

    /// Number of entries equal to `k`, for `k = 1..=n`.
    pub fn content(&self, n: usize) -> Vec<usize> {
        let mut c = vec![0; n];
        for &x in self.rows.iter().flatten() {
            if (1..=n as u32).contains(&x) {
                c[x as usize - 1] += 1;
            }
        }
        c
    }

    /// Row insertion: `x` bumps the leftmost entry strictly greater than it, cascading down.
    /// Returns the new tableau and the cell that was added.
    pub fn row_insert(&self, x: u32) -> (Ssyt, Cell) {
        let mut rows = self.rows.clone();
        let mut x = x;
        for r in 0..=rows.len() {
            if r == rows.len() {
                rows.push(vec![x]);
                return (Ssyt { rows }, Cell::new(r + 1, 1));
            }
            let row = &mut rows[r];
            match row.iter().position(|&y| y > x) {
                Some(c) => x = std::mem::replace(&mut row[c], x),
                None => {
                    row.push(x);
                    let col = row.len();
                    return (Ssyt { rows }, Cell::new(r + 1, col));
                }
            }
        }
        unreachable!()
    }

    /// Inverse of [`Ssyt::row_insert`]: removes the entry at `corner` and un-bumps it upwards,
    /// returning the smaller tableau and the entry ejected from the first row.
    pub fn reverse_row_insert(&self, corner: Cell) -> Result<(Ssyt, u32)> {
        let shape = self.shape();
        let r0 = corner.row.wrapping_sub(1);
        if corner.row == 0 || shape.get(r0) != corner.col || shape.get(r0 + 1) >= corner.col {
            return Err(Error::NotACorner {
                row: corner.row,
                col: corner.col,
            });
        }
        let mut rows = self.rows.clone();
        let mut y = rows[r0].pop().expect("corner row is nonempty");
        if rows[r0].is_empty() {
            rows.pop();
        }
        for r in (0..r0).rev() {
            let row = &mut rows[r];
            // rightmost entry strictly less than y
            let c = row
                .iter()
                .rposition(|&v| v < y)
                .expect("row above a corner has a smaller entry");
            y = std::mem::replace(&mut row[c], y);
        }
        Ok((Ssyt { rows }, y))
    }

    /// Column insertion: in each column `x` displaces the smallest entry `>= x`
    /// and the displaced entry moves to the next column.
    pub fn column_insert(&self, x: u32) -> (Ssyt, Cell) {
        let mut rows = self.rows.clone();
        let mut x = x;
        let mut col = 0;
        loop {
            let height = rows.iter().take_while(|row| row.len() > col).count();
            match (0..height).find(|&r| rows[r][col] >= x) {
                Some(r) => {
                    x = std::mem::replace(&mut rows[r][col], x);
                    col += 1;
                }
                None => {
                    if height == rows.len() {
                        rows.push(Vec::new());
                    }
                    rows[height].push(x);
                    return (Ssyt { rows }, Cell::new(height + 1, col + 1));
                }
            }
        }
    }

    /// Inverse of [`Ssyt::column_insert`].
    pub fn reverse_column_insert(&self, corner: Cell) -> Result<(Ssyt, u32)> {
        let shape = self.shape();
        let r0 = corner.row.wrapping_sub(1);
        if corner.row == 0 || shape.get(r0) != corner.col || shape.get(r0 + 1) >= corner.col {
            return Err(Error::NotACorner {
                row: corner.row,
                col: corner.col,
            });
        }
        let mut rows = self.rows.clone();
        let mut y = rows[r0].pop().expect("corner row is nonempty");
        if rows[r0].is_empty() {
            rows.pop();
        }
        for col in (0..corner.col - 1).rev() {
            let height = rows.iter().take_while(|row| row.len() > col).count();
            // largest entry <= y in this column
            let r = (0..height)
                .rev()
                .find(|&r| rows[r][col] <= y)
                .expect("column left of a corner has an entry <= the ejected one");
            y = std::mem::replace(&mut rows[r][col], y);
        }
        Ok((Ssyt { rows }, y))
    }

    /// Cells holding the value `v`, left to right.
    pub fn cells_of(&self, v: u32) -> Vec<Cell> {
        let mut cells: Vec<Cell> = self
            .rows
            .iter()
            .enumerate()
            .flat_map(|(r, row)| {
                row.iter()
                    .enumerate()
                    .filter(move |(_, &x)| x == v)
                    .map(move |(c, _)| Cell::new(r + 1, c + 1))
            })
            .collect();
        cells.sort_by_key(|c| c.col);
        cells
    }

    /// Deletes the rightmost occurrence of the largest entry, which must be a corner.
    pub fn delete_rightmost_max(&self) -> Option<Ssyt> {
        let max = self.max_entry()?;
        let cell = *self.cells_of(max).last()?;
        let mut rows = self.rows.clone();
        debug_assert_eq!(rows[cell.row - 1].len(), cell.col);
        rows[cell.row - 1].pop();
        Some(Ssyt::from_rows_unchecked(rows))
    }

    /// Deletes the rightmost occurrence of `v`, which must be the largest entry.
    pub fn delete_rightmost(&self, v: u32) -> Option<Ssyt> {
        if self.max_entry() != Some(v) {
            return None;
        }
        self.delete_rightmost_max()
    }

    /// Replaces the entry at `cell`. The caller is responsible for semistandardness.
    pub(crate) fn with_entry(&self, cell: Cell, v: u32) -> Ssyt {
        let mut rows = self.rows.clone();
        rows[cell.row - 1][cell.col - 1] = v;
        Ssyt { rows }
    }

    /// All SSYT of shape `shape` with entries in `1..=n`, in row-major lexicographic order.
    pub fn enumerate(shape: &Partition, n: u32) -> Vec<Ssyt> {
        let mut out = Vec::new();
        let mut rows: Vec<Vec<u32>> = shape.parts().iter().map(|&l| Vec::with_capacity(l)).collect();
        let cells: Vec<(usize, usize)> = shape
            .parts()
            .iter()
            .enumerate()
            .flat_map(|(r, &l)| (0..l).map(move |c| (r, c)))
            .collect();
        fill_ssyt(&cells, 0, n, &mut rows, &mut out);
        out
    }
}

fn fill_ssyt(
    cells: &[(usize, usize)],
    k: usize,
    n: u32,
    rows: &mut Vec<Vec<u32>>,
    out: &mut Vec<Ssyt>,
) {
    if k == cells.len() {
        out.push(Ssyt { rows: rows.clone() });
        return;
    }
    let (r, c) = cells[k];
    let mut lo = 1;
    if c > 0 {
        lo = lo.max(rows[r][c - 1]);
    }
    if r > 0 {
        lo = lo.max(rows[r - 1][c] + 1);
    }
    for v in lo..=n {
        rows[r].push(v);
        fill_ssyt(cells, k + 1, n, rows, out);
        rows[r].pop();
    }
}

impl fmt::Display for Ssyt {
    /// One row per line, entries separated by spaces; the empty tableau prints as `.`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows.is_empty() {
            return write!(f, ".");
        }
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let line: Vec<String> = row.iter().map(u32::to_string).collect();
            write!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Ssyt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| r.iter().map(u32::to_string).collect::<Vec<_>>().join(","))
            .collect();
        write!(f, "Ssyt({})", rows.join("/"))
    }
}

impl FromStr for Ssyt {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut rows = Vec::new();
        for line in s.lines() {
            let line = line.trim();
            if line.is_empty() || line == "." {
                continue;
            }
            let row = line
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|t| !t.is_empty())
                .map(|t| t.parse::<u32>().map_err(|_| Error::Parse(format!("bad entry {t:?}"))))
                .collect::<Result<Vec<_>>>()?;
            rows.push(row);
        }
        Ssyt::new(rows)
    }
}

/// Shorthand for tests: `ssyt(&[&[1, 1, 2], &[2]])`. Panics on invalid input.
pub fn ssyt(rows: &[&[u32]]) -> Ssyt {
    Ssyt::new(rows.iter().map(|r| r.to_vec()).collect()).expect("valid tableau literal")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::part;

    #[test]
    fn row_insert_examples() {
        let (t, c) = ssyt(&[&[1]]).row_insert(2);
        assert_eq!(t, ssyt(&[&[1, 2]]));
        assert_eq!(c, Cell::new(1, 2));

        let (t, c) = Ssyt::empty().row_insert(5);
        assert_eq!(t, ssyt(&[&[5]]));
        assert_eq!(c, Cell::new(1, 1));

        let (t, c) = ssyt(&[&[1, 1], &[2]]).row_insert(3);
        assert_eq!(t, ssyt(&[&[1, 1, 3], &[2]]));
        assert_eq!(c, Cell::new(1, 3));

        let (t, c) = ssyt(&[&[1, 1, 3], &[2]]).row_insert(2);
        assert_eq!(t, ssyt(&[&[1, 1, 2], &[2, 3]]));
        assert_eq!(c, Cell::new(2, 2));
    }

    #[test]
    fn reverse_row_insert_examples() {
        let (t, x) = ssyt(&[&[1, 2], &[3]]).reverse_row_insert(Cell::new(2, 1)).unwrap();
        assert_eq!(t, ssyt(&[&[1, 3]]));
        assert_eq!(x, 2);

        let (t, x) = ssyt(&[&[5]]).reverse_row_insert(Cell::new(1, 1)).unwrap();
        assert_eq!(t, Ssyt::empty());
        assert_eq!(x, 5);

        let (t, x) = ssyt(&[&[1, 1, 2, 4], &[2, 3]])
            .reverse_row_insert(Cell::new(1, 4))
            .unwrap();
        assert_eq!(t, ssyt(&[&[1, 1, 2], &[2, 3]]));
        assert_eq!(x, 4);
    }

    #[test]
    fn reverse_row_insert_rejects_non_corners() {
        let t = ssyt(&[&[1, 2], &[3, 4]]);
        assert!(matches!(
            t.reverse_row_insert(Cell::new(1, 2)),
            Err(Error::NotACorner { .. })
        ));
        assert!(t.reverse_row_insert(Cell::new(3, 1)).is_err());
        assert!(t.reverse_row_insert(Cell::new(0, 1)).is_err());
    }

    #[test]
    fn row_insert_round_trips_on_all_small_tableaux() {
        for shape in Partition::up_to_size(4, 4) {
            for t in Ssyt::enumerate(&shape, 4) {
                for x in 1..=5 {
                    let (t2, cell) = t.row_insert(x);
                    assert!(Ssyt::new(t2.rows().to_vec()).is_ok());
                    assert_eq!(t2.reverse_row_insert(cell).unwrap(), (t.clone(), x));
                    let (t3, cell) = t.column_insert(x);
                    assert!(Ssyt::new(t3.rows().to_vec()).is_ok());
                    assert_eq!(t3.reverse_column_insert(cell).unwrap(), (t.clone(), x));
                }
            }
        }
    }

    #[test]
    fn validation() {
        assert!(Ssyt::new(vec![vec![1, 2], vec![1]]).is_err());
        assert!(Ssyt::new(vec![vec![2, 1]]).is_err());
        assert!(Ssyt::new(vec![vec![1], vec![2, 3]]).is_err());
        assert!(Ssyt::new(vec![vec![0]]).is_err());
        assert!(Ssyt::new(vec![vec![1, 1], vec![2]]).is_ok());
    }

    #[test]
    fn reading_word_matches_row_reading() {
        let t = ssyt(&[&[1, 1, 1, 2, 2], &[2, 3], &[3, 4]]);
        assert_eq!(t.reading_word(), vec![2, 2, 1, 1, 1, 3, 2, 4, 3]);
    }

    #[test]
    fn enumeration_counts() {
        // number of SSYT of shape (2,1) in 3 letters is 8
        assert_eq!(Ssyt::enumerate(&part(&[2, 1]), 3).len(), 8);
        assert_eq!(Ssyt::enumerate(&part(&[1, 1]), 2).len(), 1);
        assert_eq!(Ssyt::enumerate(&part(&[2]), 2).len(), 3);
        assert_eq!(Ssyt::enumerate(&Partition::empty(), 2).len(), 1);
    }

    #[test]
    fn text_round_trip() {
        let t = ssyt(&[&[1, 1, 2], &[2, 3]]);
        assert_eq!(t.to_string(), "1 1 2\n2 3");
        assert_eq!(t.to_string().parse::<Ssyt>().unwrap(), t);
        assert_eq!(".".parse::<Ssyt>().unwrap(), Ssyt::empty());
    }
}
