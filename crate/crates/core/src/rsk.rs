//! Column RSK on nonnegative integer matrices.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::tableau::Ssyt;
use crate::weight::WeightVector;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<u32>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::InvalidMatrix("ragged rows".into()));
        }
        Ok(IntMatrix {
            rows: rows.len(),
            cols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn n_rows(&self) -> usize {
        self.rows
    }

    pub fn n_cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Entry at 0-based `(r, c)`.
    pub fn get(&self, r: usize, c: usize) -> u32 {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: u32) {
        self.data[r * self.cols + c] = v;
    }

    pub fn add(&mut self, r: usize, c: usize, v: u32) {
        self.data[r * self.cols + c] += v;
    }

    pub fn to_rows(&self) -> Vec<Vec<u32>> {
        self.data.chunks(self.cols.max(1)).take(self.rows).map(<[u32]>::to_vec).collect()
    }

    pub fn total(&self) -> u32 {
        self.data.iter().sum()
    }

    pub fn row_sums(&self) -> Vec<u32> {
        (0..self.rows).map(|r| (0..self.cols).map(|c| self.get(r, c)).sum()).collect()
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    pub fn rotate180(&self) -> IntMatrix {
        let mut t = IntMatrix::zeros(self.rows, self.cols);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(self.rows - 1 - r, self.cols - 1 - c, self.get(r, c));
            }
        }
        t
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|r| (0..r).all(|c| self.get(r, c) == self.get(c, r)))
    }

    pub fn two_line_array(&self) -> TwoLineArray {
        let mut columns = Vec::with_capacity(self.total() as usize);
        for r in 0..self.rows {
            for c in (0..self.cols).rev() {
                for _ in 0..self.get(r, c) {
                    columns.push((r as u32 + 1, c as u32 + 1));
                }
            }
        }
        TwoLineArray { columns }
    }

    /// Every matrix of the given size whose entries sum to at most `max_total`.
    pub fn all_up_to(rows: usize, cols: usize, max_total: u32) -> Vec<IntMatrix> {
        let mut out = Vec::new();
        let mut cur = IntMatrix::zeros(rows, cols);
        fn go(k: usize, left: u32, cur: &mut IntMatrix, out: &mut Vec<IntMatrix>) {
            if k == cur.data.len() {
                out.push(cur.clone());
                return;
            }
            for v in 0..=left {
                cur.data[k] = v;
                go(k + 1, left - v, cur, out);
            }
            cur.data[k] = 0;
        }
        go(0, max_total, &mut cur, &mut out);
        out
    }

    /// Symmetric matrices with even diagonal and every row sum at most `max_row_sum`.
    pub fn all_sym_even(n: usize, max_row_sum: u32) -> Vec<IntMatrix> {
        let slots: Vec<(usize, usize)> = (0..n).flat_map(|r| (r..n).map(move |c| (r, c))).collect();
        let mut out = Vec::new();
        let mut cur = IntMatrix::zeros(n, n);
        let mut sums = vec![0u32; n];
        fn go(
            k: usize,
            slots: &[(usize, usize)],
            max: u32,
            cur: &mut IntMatrix,
            sums: &mut [u32],
            out: &mut Vec<IntMatrix>,
        ) {
            if k == slots.len() {
                out.push(cur.clone());
                return;
            }
            let (r, c) = slots[k];
            let step = if r == c { 2 } else { 1 };
            let mut v = 0;
            loop {
                let fits = if r == c {
                    sums[r] + v <= max
                } else {
                    sums[r] + v <= max && sums[c] + v <= max
                };
                if !fits {
                    break;
                }
                cur.set(r, c, v);
                cur.set(c, r, v);
                sums[r] += v;
                if r != c {
                    sums[c] += v;
                }
                go(k + 1, slots, max, cur, sums, out);
                sums[r] -= v;
                if r != c {
                    sums[c] -= v;
                }
                v += step;
            }
            cur.set(r, c, 0);
            cur.set(c, r, 0);
        }
        go(0, &slots, max_row_sum, &mut cur, &mut sums, &mut out);
        out
    }
}

impl fmt::Display for IntMatrix {
    /// Rows as comma-separated integers, one row per line.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            if r > 0 {
                writeln!(f)?;
            }
            let line: Vec<String> = (0..self.cols).map(|c| self.get(r, c).to_string()).collect();
            write!(f, "{}", line.join(","))?;
        }
        Ok(())
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.to_rows())
    }
}

impl FromStr for IntMatrix {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let rows = s
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty())
            .map(|l| {
                l.split(|c: char| c == ',' || c.is_whitespace())
                    .filter(|t| !t.is_empty())
                    .map(|t| t.parse::<u32>().map_err(|_| Error::Parse(format!("bad matrix entry {t:?}"))))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        IntMatrix::from_rows(rows)
    }
}

/// Biword with top line weakly increasing and, for equal tops, bottoms weakly decreasing.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TwoLineArray {
    columns: Vec<(u32, u32)>,
}

impl TwoLineArray {
    pub fn new(columns: Vec<(u32, u32)>) -> Result<Self> {
        let ok = columns
            .windows(2)
            .all(|w| w[0].0 < w[1].0 || (w[0].0 == w[1].0 && w[0].1 >= w[1].1));
        if !ok || columns.iter().any(|&(i, j)| i == 0 || j == 0) {
            return Err(Error::InvalidMatrix("two-line array out of order".into()));
        }
        Ok(TwoLineArray { columns })
    }

    /// Sorts arbitrary pairs into two-line array order.
    pub fn from_pairs(mut pairs: Vec<(u32, u32)>) -> Self {
        pairs.sort_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)));
        TwoLineArray { columns: pairs }
    }

    pub fn columns(&self) -> &[(u32, u32)] {
        &self.columns
    }

    pub fn len(&self) -> usize {
        self.columns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.columns.is_empty()
    }

    pub fn top(&self) -> Vec<u32> {
        self.columns.iter().map(|c| c.0).collect()
    }

    pub fn bottom(&self) -> Vec<u32> {
        self.columns.iter().map(|c| c.1).collect()
    }

    pub fn to_matrix(&self, rows: usize, cols: usize) -> Result<IntMatrix> {
        let mut m = IntMatrix::zeros(rows, cols);
        for &(i, j) in &self.columns {
            if i as usize > rows || j as usize > cols {
                return Err(Error::InvalidMatrix(format!("pair ({i},{j}) outside {rows}x{cols}")));
            }
            m.add(i as usize - 1, j as usize - 1, 1);
        }
        Ok(m)
    }
}

impl fmt::Display for TwoLineArray {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = self
            .columns
            .iter()
            .map(|(i, j)| i.to_string().len().max(j.to_string().len()))
            .collect::<Vec<_>>();
        let line = |pick: fn(&(u32, u32)) -> u32| {
            self.columns
                .iter()
                .zip(&width)
                .map(|(c, &w)| format!("{:>w$}", pick(c)))
                .collect::<Vec<_>>()
                .join(" ")
        };
        write!(f, "{}\n{}", line(|c| c.0), line(|c| c.1))
    }
}

/// `(P, Q)`: column-insert the bottom line left to right, recording the top line.
pub fn rsk_column(m: &IntMatrix) -> (Ssyt, Ssyt) {
    let mut p = Ssyt::empty();
    let mut q_rows: Vec<Vec<u32>> = Vec::new();
    for &(i, j) in m.two_line_array().columns() {
        let (next, cell) = p.column_insert(j);
        p = next;
        if cell.row > q_rows.len() {
            q_rows.push(Vec::new());
        }
        q_rows[cell.row - 1].push(i);
    }
    (p, Ssyt::from_rows_unchecked(q_rows))
}

/// Inverse of [`rsk_column`], producing a square matrix sized by the largest entry.
pub fn rsk_column_inverse(p: &Ssyt, q: &Ssyt) -> Result<IntMatrix> {
    let n = p.max_entry().unwrap_or(0).max(q.max_entry().unwrap_or(0)) as usize;
    rsk_column_inverse_sized(p, q, n, n)
}

pub fn rsk_column_inverse_sized(p: &Ssyt, q: &Ssyt, rows: usize, cols: usize) -> Result<IntMatrix> {
    if p.shape() != q.shape() {
        return Err(Error::ShapeMismatch {
            p: p.shape(),
            q: q.shape(),
        });
    }
    let mut p = p.clone();
    let mut q = q.clone();
    let mut pairs = Vec::with_capacity(p.size());
    while let Some(top) = q.max_entry() {
        let mut last: Option<u32> = None;
        while q.max_entry() == Some(top) {
            let cell = *q.cells_of(top).last().expect("max entry present");
            let (p2, j) = p.reverse_column_insert(cell)?;
            if last.is_some_and(|prev| j < prev) {
                return Err(Error::NonInvertible(format!(
                    "recording letter {top} ejects {j} after {}",
                    last.unwrap()
                )));
            }
            last = Some(j);
            p = p2;
            q = q.delete_rightmost_max().expect("nonempty");
            pairs.push((top, j));
        }
    }
    TwoLineArray::from_pairs(pairs).to_matrix(rows, cols)
}

/// Number of columns of `P(M)`.
pub fn c_index(m: &IntMatrix) -> usize {
    rsk_column(m).0.shape().width()
}

/// Membership in the symmetric, even-diagonal class.
pub fn sym_even_check(m: &IntMatrix) -> Result<bool> {
    if !m.is_square() {
        return Err(Error::InvalidMatrix(format!("{}x{} is not square", m.n_rows(), m.n_cols())));
    }
    Ok(m.is_symmetric() && (0..m.n_rows()).all(|i| m.get(i, i).is_multiple_of(2)))
}

/// Row-inserts the entries of `n` reading rows from the bottom up, each row by
/// increasing column. Returns the insertion tableau and the tableau recording
/// row `r` with the letter `rows + 1 - r`.
pub fn reversed_row_insertion(n: &IntMatrix) -> (Ssyt, Ssyt) {
    let rows = n.n_rows();
    let mut p = Ssyt::empty();
    let mut q_rows: Vec<Vec<u32>> = Vec::new();
    for r in (0..rows).rev() {
        for c in 0..n.n_cols() {
            for _ in 0..n.get(r, c) {
                let (next, cell) = p.row_insert(c as u32 + 1);
                p = next;
                if cell.row > q_rows.len() {
                    q_rows.push(Vec::new());
                }
                q_rows[cell.row - 1].push((rows - r) as u32);
            }
        }
    }
    (p, Ssyt::from_rows_unchecked(q_rows))
}

/// A matrix in the symmetric, even-diagonal class.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SymEvenMatrix(IntMatrix);

impl SymEvenMatrix {
    pub fn new(m: IntMatrix) -> Result<Self> {
        if !sym_even_check(&m)? {
            return Err(Error::InvalidMatrix("not symmetric with even diagonal".into()));
        }
        Ok(SymEvenMatrix(m))
    }

    pub fn zeros(m: usize) -> Self {
        SymEvenMatrix(IntMatrix::zeros(m, m))
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.0
    }

    pub fn into_matrix(self) -> IntMatrix {
        self.0
    }

    pub fn m(&self) -> usize {
        self.0.n_rows()
    }

    pub fn row_sums(&self) -> Vec<u32> {
        self.0.row_sums()
    }

    pub fn c_index(&self) -> usize {
        c_index(&self.0)
    }

    /// `g` minus the row sum in each coordinate.
    pub fn crystal_weight(&self, g: usize) -> WeightVector {
        WeightVector(self.row_sums().iter().map(|&s| g as i64 - s as i64).collect())
    }
}

impl fmt::Display for SymEvenMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl fmt::Debug for SymEvenMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tableau::{ssyt, Cell};

    pub(crate) fn mat(rows: &[&[u32]]) -> IntMatrix {
        IntMatrix::from_rows(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn example() -> IntMatrix {
        mat(&[&[2, 1, 0, 1], &[1, 0, 1, 0], &[0, 1, 0, 0], &[1, 0, 0, 0]])
    }

    #[test]
    fn two_line_array_of_example() {
        let w = example().two_line_array();
        assert_eq!(w.top(), vec![1, 1, 1, 1, 2, 2, 3, 4]);
        assert_eq!(w.bottom(), vec![4, 2, 1, 1, 3, 1, 2, 1]);
        assert!(TwoLineArray::new(w.columns().to_vec()).is_ok());
        assert!(TwoLineArray::new(vec![(1, 1), (1, 2)]).is_err());
    }

    #[test]
    fn column_rsk_of_example() {
        let (p, q) = rsk_column(&example());
        let expected = ssyt(&[&[1, 1, 1, 1, 2, 4], &[2, 3]]);
        assert_eq!(p, expected);
        assert_eq!(q, expected);
        assert_eq!(c_index(&example()), 6);
        assert_eq!(rsk_column_inverse(&p, &q).unwrap(), example());
    }

    #[test]
    fn small_cases() {
        let z = IntMatrix::zeros(3, 3);
        assert_eq!(rsk_column(&z), (Ssyt::empty(), Ssyt::empty()));
        assert_eq!(c_index(&z), 0);
        assert_eq!(rsk_column_inverse(&Ssyt::empty(), &Ssyt::empty()).unwrap(), IntMatrix::zeros(0, 0));

        let a = mat(&[&[0, 1], &[1, 0]]);
        let (p, q) = rsk_column(&a);
        assert_eq!(p, ssyt(&[&[1, 2]]));
        assert_eq!(q, ssyt(&[&[1, 2]]));
        assert_eq!(rsk_column_inverse(&p, &q).unwrap(), a);

        assert_eq!(c_index(&mat(&[&[2]])), 2);
    }

    #[test]
    fn inverse_rejects_mismatched_shapes() {
        assert!(matches!(
            rsk_column_inverse(&ssyt(&[&[1, 2]]), &ssyt(&[&[1], &[2]])),
            Err(Error::ShapeMismatch { .. })
        ));
    }

    #[test]
    fn membership() {
        assert!(sym_even_check(&example()).unwrap());
        assert!(!sym_even_check(&mat(&[&[1]])).unwrap());
        assert!(!sym_even_check(&mat(&[&[0, 1], &[2, 0]])).unwrap());
        assert!(sym_even_check(&mat(&[&[0, 1]])).is_err());
    }

    #[test]
    fn reversed_row_insertion_example() {
        let n = mat(&[&[0, 0, 0, 0], &[2, 1, 0, 0], &[1, 1, 1, 0], &[1, 1, 1, 0]]);
        let (p, qbar) = reversed_row_insertion(&n);
        assert_eq!(p, ssyt(&[&[1, 1, 1, 1, 2], &[2, 2, 3], &[3]]));
        assert_eq!(qbar, ssyt(&[&[1, 1, 1, 2, 3], &[2, 2, 3], &[3]]));
        assert_eq!(p, rsk_column(&n).0);
        assert_eq!(qbar, rsk_column(&n.rotate180()).1);
    }

    #[test]
    fn reverse_row_insert_from_insertion_step() {
        let (t, x) = ssyt(&[&[1, 1, 2, 4], &[2, 3]])
            .reverse_row_insert(Cell::new(1, 4))
            .unwrap();
        assert_eq!((t, x), (ssyt(&[&[1, 1, 2], &[2, 3]]), 4));
    }

    #[test]
    fn matrix_text_round_trip() {
        let m = example();
        assert_eq!(m.to_string(), "2,1,0,1\n1,0,1,0\n0,1,0,0\n1,0,0,0");
        assert_eq!(m.to_string().parse::<IntMatrix>().unwrap(), m);
        assert!("1,2\n3".parse::<IntMatrix>().is_err());
    }

    #[test]
    fn sym_even_enumeration() {
        let all = IntMatrix::all_sym_even(2, 2);
        // diagonal pairs (0|2, 0|2) with off-diagonal bounded by remaining row sums
        assert!(all.iter().all(|m| sym_even_check(m).unwrap()));
        assert!(all.iter().all(|m| m.row_sums().iter().all(|&s| s <= 2)));
        assert_eq!(all.len(), 6);
    }
}
