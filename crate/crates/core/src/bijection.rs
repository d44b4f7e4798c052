//! Bijections between King tableaux, oscillating tableaux and symmetric matrices.

use std::fmt;

use crate::error::{Error, Result};
use crate::king::{BarredLetter, KingTableau};
use crate::oscillating::{OscStrip, Ssot};
use crate::partition::Partition;
use crate::rsk::{sym_even_check, IntMatrix, SymEvenMatrix};
use crate::tableau::{Cell, Ssyt};

/// Column lengths of `p` over columns `1..=width`.
fn columns(p: &Partition, width: usize) -> Vec<usize> {
    p.column_lengths(width)
}

/// King tableau to oscillating tableau. King column `c` corresponds to strip column `g + 1 - c`.
pub fn psi(t: &KingTableau, g: usize) -> Result<Ssot> {
    let m = t.m();
    let shape = t.shape();
    if !shape.fits_in(m, g) {
        return Err(Error::OutOfRectangle { shape, rows: m, cols: g });
    }
    // below[c]: length of King column c among entries <= (i-1)b
    let mut below = vec![0usize; g];
    let mut strips = Vec::with_capacity(m);
    let mut inside = Partition::empty();
    for i in 1..=m as u32 {
        let upto_plain = columns(&t.restrict(BarredLetter::plain(i)).shape(), g);
        let upto_bar = columns(&t.restrict(BarredLetter::barred(i)).shape(), g);
        let mut star_cols = vec![0usize; g];
        let mut out_cols = vec![0usize; g];
        for j in 0..g {
            let c = g - 1 - j;
            let has_plain = upto_plain[c] > below[c];
            star_cols[j] = (i as usize - 1 - below[c]) + usize::from(!has_plain);
            out_cols[j] = i as usize - upto_bar[c];
        }
        let star = Partition::from_columns(&star_cols)?;
        let outside = Partition::from_columns(&out_cols)?;
        let strip = OscStrip::from_shapes(&inside, &star, &outside)?;
        inside = outside;
        strips.push(strip);
        below = upto_bar;
    }
    Ssot::new(Partition::empty(), strips)
}

pub fn psi_inverse(s: &Ssot, m: usize, g: usize) -> Result<KingTableau> {
    if !s.inside().is_empty() {
        return Err(Error::InvalidSsot("inside must be empty".into()));
    }
    if s.len() > m {
        return Err(Error::InvalidSsot(format!("more than {m} nonempty strips")));
    }
    if s.c() > g {
        return Err(Error::TooWide { c: s.c(), g });
    }
    if !s.outside().fits_in(m, g) {
        return Err(Error::OutOfRectangle {
            shape: s.outside().clone(),
            rows: m,
            cols: g,
        });
    }
    let mut cols: Vec<Vec<BarredLetter>> = vec![Vec::new(); g];
    for i in 1..=m {
        let strip = s.strip(i);
        let inside = columns(strip.inside(), g);
        let star = columns(strip.star(), g);
        let outside = columns(strip.outside(), g);
        for j in 0..g {
            let c = g - 1 - j;
            if star[j] == inside[j] {
                cols[c].push(BarredLetter::plain(i as u32));
            }
            if star[j] == outside[j] + 1 {
                cols[c].push(BarredLetter::barred(i as u32));
            }
        }
    }
    let height = cols.first().map_or(0, Vec::len);
    if cols.windows(2).any(|w| w[0].len() < w[1].len()) {
        return Err(Error::InvalidSsot("column lengths do not form a shape".into()));
    }
    let rows: Vec<Vec<BarredLetter>> = (0..height)
        .map(|r| cols.iter().take_while(|c| c.len() > r).map(|c| c[r]).collect())
        .collect();
    let t = KingTableau::new(rows, m).map_err(|e| Error::InvalidSsot(e.to_string()))?;
    if &psi(&t, g)? != s {
        return Err(Error::InvalidSsot("strip data is inconsistent with any King tableau".into()));
    }
    Ok(t)
}

/// Fixed-point-free involution on `1..=n`, stored as the one-line notation.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Involution(Vec<u32>);

impl Involution {
    pub fn new(perm: Vec<u32>) -> Result<Self> {
        let n = perm.len() as u32;
        for (k, &v) in perm.iter().enumerate() {
            let k = k as u32 + 1;
            if v == 0 || v > n || v == k || perm[v as usize - 1] != k {
                return Err(Error::NonInvertible(format!(
                    "{perm:?} is not a fixed-point-free involution"
                )));
            }
        }
        Ok(Involution(perm))
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Image of `k` (1-based).
    pub fn apply(&self, k: u32) -> u32 {
        self.0[k as usize - 1]
    }
}

impl fmt::Display for Involution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let sep = if self.0.len() < 10 { "" } else { " " };
        let s: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "{}", s.join(sep))
    }
}

impl fmt::Debug for Involution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Involution({self})")
    }
}

/// Concatenated chain of all strips, starting at the empty partition.
fn standard_chain(t: &Ssot) -> Vec<i32> {
    t.strips().iter().flat_map(|s| s.word().iter().copied()).collect()
}

/// Involution attached to the standardization of `t`.
pub fn phi_involution(t: &Ssot) -> Result<Involution> {
    if !t.inside().is_empty() || !t.outside().is_empty() {
        return Err(Error::InvalidSsot("inside and outside must be empty".into()));
    }
    let word = standard_chain(t);
    let mut perm = vec![0u32; word.len()];
    let mut v = Ssyt::empty();
    for (s, &r) in word.iter().enumerate() {
        let step = s as u32 + 1;
        let row = r.unsigned_abs() as usize;
        if r > 0 {
            let mut rows = v.rows().to_vec();
            if row > rows.len() {
                rows.push(Vec::new());
            }
            rows[row - 1].push(step);
            v = Ssyt::from_rows_unchecked(rows);
        } else {
            let col = v.rows()[row - 1].len();
            let (smaller, j) = v.reverse_row_insert(Cell::new(row, col))?;
            v = smaller;
            perm[step as usize - 1] = j;
            perm[j as usize - 1] = step;
        }
    }
    Involution::new(perm)
}

/// Block index (1-based) of each position `1..=total` for the given block sizes.
fn blocks(sizes: &[usize]) -> Vec<usize> {
    sizes
        .iter()
        .enumerate()
        .flat_map(|(b, &n)| std::iter::repeat_n(b + 1, n))
        .collect()
}

/// Oscillating tableau with empty inside and outside to a symmetric, even-diagonal `m x m` matrix.
pub fn phi(t: &Ssot, m: usize) -> Result<SymEvenMatrix> {
    let w = phi_involution(t)?;
    let block = blocks(&t.weight(m)?);
    let mut mat = IntMatrix::zeros(m, m);
    for k in 1..=w.len() as u32 {
        mat.add(block[k as usize - 1] - 1, block[w.apply(k) as usize - 1] - 1, 1);
    }
    SymEvenMatrix::new(mat)
}

/// Standardization of the two-line array of `mat`: within each row block the
/// bottom letters receive decreasing labels from left to right.
pub fn standardize(mat: &IntMatrix) -> Result<Involution> {
    let sums = mat.row_sums();
    let mut next: Vec<u32> = sums
        .iter()
        .scan(0u32, |acc, &s| {
            *acc += s;
            Some(*acc)
        })
        .collect();
    let perm = mat
        .two_line_array()
        .bottom()
        .iter()
        .map(|&b| {
            let label = next[b as usize - 1];
            next[b as usize - 1] -= 1;
            label
        })
        .collect();
    Involution::new(perm)
}

pub fn phi_inverse(mat: &SymEvenMatrix) -> Result<Ssot> {
    let m = mat.m();
    let w = standardize(mat.matrix())?;
    let n = w.len();
    let mut shapes = vec![Partition::empty(); n + 1];
    let mut v = Ssyt::empty();
    for s in (1..=n as u32).rev() {
        let ws = w.apply(s);
        v = if ws < s {
            v.row_insert(ws).0
        } else {
            v.delete_rightmost(s)
                .ok_or_else(|| Error::NonInvertible(format!("{s} is not the largest entry")))?
        };
        shapes[s as usize - 1] = v.shape();
    }
    let sums = mat.row_sums();
    let mut strips = Vec::with_capacity(m);
    let mut start = 0usize;
    for &size in &sums {
        let end = start + size as usize;
        strips.push(OscStrip::from_chain(&shapes[start..=end])?);
        start = end;
    }
    Ssot::new(Partition::empty(), strips)
}

/// Insertion and deletion tableaux read backwards along the two-line array.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PvTrace {
    /// Bottom line of the two-line array read right to left.
    pub inverse_column_word: Vec<u32>,
    /// `p[q]` for `q = 0..=n`.
    pub p: Vec<Ssyt>,
    /// `v[q]` for `q = 0..=n`.
    pub v: Vec<Ssyt>,
}

pub fn pv_trace(mat: &SymEvenMatrix) -> Result<PvTrace> {
    let cols = mat.matrix().two_line_array().columns().to_vec();
    let n = cols.len();
    let mut p = vec![Ssyt::empty(); n + 1];
    let mut v = vec![Ssyt::empty(); n + 1];
    let mut s = n;
    while s > 0 {
        let (i, j) = cols[s - 1];
        if i == j {
            // run of equal diagonal columns ending at s: insert for the upper half, delete for the lower
            let start = (0..s).rev().take_while(|&k| cols[k] == (i, j)).last().unwrap();
            let run = s - start;
            for (k, step) in (start + 1..=s).rev().enumerate() {
                p[step - 1] = p[step].row_insert(j).0;
                v[step - 1] = if k < run / 2 {
                    v[step].row_insert(i).0
                } else {
                    delete_rightmost(&v[step], i)?
                };
            }
            s = start;
            continue;
        }
        p[s - 1] = p[s].row_insert(j).0;
        v[s - 1] = if i > j {
            v[s].row_insert(j).0
        } else {
            delete_rightmost(&v[s], i)?
        };
        s -= 1;
    }
    Ok(PvTrace {
        inverse_column_word: cols.iter().rev().map(|c| c.1).collect(),
        p,
        v,
    })
}

fn delete_rightmost(t: &Ssyt, x: u32) -> Result<Ssyt> {
    t.delete_rightmost(x)
        .ok_or_else(|| Error::NonInvertible(format!("{x} is not the largest entry of {t:?}")))
}

/// Checks the input class before running the inverse.
pub fn phi_inverse_checked(mat: &IntMatrix) -> Result<Ssot> {
    if !sym_even_check(mat)? {
        return Err(Error::InvalidMatrix("not symmetric with even diagonal".into()));
    }
    phi_inverse(&SymEvenMatrix::new(mat.clone())?)
}
