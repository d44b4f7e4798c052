//! Kashiwara operators on tableaux, matrices and oscillating tableaux.

use crate::crystal::multiset::{unpaired, MultisetZ};
use crate::crystal::Direction;
use crate::error::{Error, Result};
use crate::oscillating::{OscStrip, Ssot};
use crate::rsk::{rsk_column, rsk_column_inverse_sized, IntMatrix, SymEvenMatrix};
use crate::tableau::{Cell, Ssyt};

/// Type A operator on the row reading word (rows top to bottom, each right to left).
pub fn ssyt_op(t: &Ssyt, i: u32, dir: Direction) -> Option<Ssyt> {
    assert!(i >= 1, "type A operators start at index 1");
    let mut stack: Vec<Cell> = Vec::new();
    let mut lone_closes: Vec<Cell> = Vec::new();
    for (r, row) in t.rows().iter().enumerate() {
        for (c, &x) in row.iter().enumerate().rev() {
            let cell = Cell::new(r + 1, c + 1);
            if x == i {
                stack.push(cell);
            } else if x == i + 1 && stack.pop().is_none() {
                lone_closes.push(cell);
            }
        }
    }
    match dir {
        Direction::Raise => lone_closes.last().map(|&cell| t.with_entry(cell, i)),
        Direction::Lower => stack.first().map(|&cell| t.with_entry(cell, i + 1)),
    }
}

/// `(epsilon, phi)` of the type A operator.
pub fn ssyt_stats(t: &Ssyt, i: u32) -> (usize, usize) {
    let mut open = 0;
    let mut lone = 0;
    for x in t.reading_word() {
        if x == i {
            open += 1;
        } else if x == i + 1 {
            if open > 0 {
                open -= 1;
            } else {
                lone += 1;
            }
        }
    }
    (lone, open)
}

fn check_matrix(mat: &SymEvenMatrix, i: usize, g: usize) -> Result<()> {
    if i >= mat.m() {
        return Err(Error::BadIndex {
            index: i,
            reason: format!("matrix operators need i < m = {}", mat.m()),
        });
    }
    let c = mat.c_index();
    if c > 2 * g {
        return Err(Error::TooWide { c, g: 2 * g });
    }
    Ok(())
}

/// Crystal operator on symmetric even-diagonal matrices with `c <= 2g`.
pub fn matrix_op(mat: &SymEvenMatrix, i: usize, dir: Direction, g: usize) -> Result<Option<SymEvenMatrix>> {
    check_matrix(mat, i, g)?;
    let m = mat.m();
    if i == 0 {
        let mut n = mat.matrix().clone();
        let d = n.get(0, 0);
        match dir {
            Direction::Raise if d == 0 => return Ok(None),
            Direction::Raise => n.set(0, 0, d - 2),
            Direction::Lower => n.set(0, 0, d + 2),
        }
        let n = SymEvenMatrix::new(n)?;
        return Ok((n.c_index() <= 2 * g).then_some(n));
    }
    let (p, q) = rsk_column(mat.matrix());
    let (Some(p), Some(q)) = (ssyt_op(&p, i as u32, dir), ssyt_op(&q, i as u32, dir)) else {
        return Ok(None);
    };
    let n = rsk_column_inverse_sized(&p, &q, m, m)?;
    Ok(Some(SymEvenMatrix::new(n)?))
}

/// Acts on the recording side only: moves one entry between rows `i` and `i+1`.
pub fn recording_op(mat: &IntMatrix, i: usize, dir: Direction) -> Option<IntMatrix> {
    let (a, b) = (i - 1, i);
    let mut opens = MultisetZ::new();
    let mut closes = MultisetZ::new();
    for c in 0..mat.n_cols() {
        opens.insert_n(c as i32 + 1, mat.get(a, c) as usize);
        closes.insert_n(c as i32 + 1, mat.get(b, c) as usize);
    }
    let (uc, ud) = unpaired(&opens, &closes);
    let mut n = mat.clone();
    match dir {
        Direction::Raise => {
            let col = ud.largest()? as usize - 1;
            n.set(b, col, n.get(b, col) - 1);
            n.add(a, col, 1);
        }
        Direction::Lower => {
            let col = uc.smallest()? as usize - 1;
            n.set(a, col, n.get(a, col) - 1);
            n.add(b, col, 1);
        }
    }
    Some(n)
}

/// Matrix operator for `i >= 1` computed by editing the two-line array directly.
pub fn matrix_op_by_arrays(mat: &SymEvenMatrix, i: usize, dir: Direction) -> Option<SymEvenMatrix> {
    assert!(i >= 1 && i < mat.m());
    let once = recording_op(mat.matrix(), i, dir)?;
    let twice = recording_op(&once.transpose(), i, dir)?.transpose();
    Some(SymEvenMatrix::new(twice).expect("both sides moved symmetrically"))
}

/// Data of the local rule at index `i >= 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalPair {
    pub c: MultisetZ,
    pub d: MultisetZ,
}

impl LocalPair {
    pub fn of(t: &Ssot, i: usize) -> LocalPair {
        let a = t.strip(i);
        let b = t.strip(i + 1);
        let words = |s: &OscStrip| -> (MultisetZ, MultisetZ) {
            let all: MultisetZ = s.word().iter().copied().collect();
            (all.positive(), all.negative_abs())
        };
        let (plus_i, minus_i) = words(&a);
        let (plus_n, minus_n) = words(&b);
        let minus_i_bar = minus_i.up(&plus_n);
        let plus_n_bar = plus_n.up(&minus_i);
        LocalPair {
            c: plus_i.union(&minus_i_bar.negate()),
            d: plus_n_bar.union(&minus_n.negate()),
        }
    }

    /// `(unpaired in C, unpaired in D)`.
    pub fn residue(&self) -> (MultisetZ, MultisetZ) {
        unpaired(&self.c, &self.d)
    }

    /// Signed words of strips `i` and `i+1` encoded by this pair.
    pub fn words(&self) -> (Vec<i32>, Vec<i32>) {
        let plus_i = self.c.positive();
        let minus_i_bar = self.c.negative_abs();
        let plus_n_bar = self.d.positive();
        let minus_n = self.d.negative_abs();
        let minus_i = minus_i_bar.down(&plus_n_bar);
        let plus_n = plus_n_bar.down(&minus_i_bar);
        let word = |plus: &MultisetZ, minus: &MultisetZ| {
            let mut w: Vec<i32> = plus.to_vec();
            w.extend(minus.to_vec().into_iter().map(|x| -x));
            w.sort_unstable_by(|a, b| b.cmp(a));
            w
        };
        (word(&plus_i, &minus_i), word(&plus_n, &minus_n))
    }
}

fn check_ssot(t: &Ssot, i: usize, g: usize) -> Result<()> {
    let c = t.c();
    if c > g {
        return Err(Error::TooWide { c, g });
    }
    if i == 0 && !t.inside().is_empty() {
        return Err(Error::BadIndex {
            index: 0,
            reason: "index 0 needs an empty inside shape".into(),
        });
    }
    Ok(())
}

/// Crystal operator on (skew) oscillating tableaux with `c <= g`.
pub fn ssot_op(t: &Ssot, i: usize, dir: Direction, g: usize) -> Result<Option<Ssot>> {
    check_ssot(t, i, g)?;
    if i == 0 {
        let first = t.strip(1);
        let (adds, rems) = (first.additions(), first.removals());
        let (adds, rems) = match dir {
            Direction::Lower if adds < g => (adds + 1, rems + 1),
            Direction::Raise if rems > 0 => (adds - 1, rems - 1),
            _ => return Ok(None),
        };
        let word: Vec<i32> = std::iter::repeat_n(1, adds)
            .chain(std::iter::repeat_n(-1, rems))
            .collect();
        let strip = OscStrip::new(first.inside().clone(), word)?;
        let second = t.strip(2);
        return t.with_strips(1, [strip, second]).map(Some);
    }
    let mut pair = LocalPair::of(t, i);
    let (uc, ud) = pair.residue();
    match dir {
        Direction::Raise => {
            let Some(x) = ud.largest() else { return Ok(None) };
            pair.d.remove(x);
            pair.c.insert(x);
        }
        Direction::Lower => {
            let Some(x) = uc.smallest() else { return Ok(None) };
            pair.c.remove(x);
            pair.d.insert(x);
        }
    }
    let (wa, wb) = pair.words();
    let inconsistent = |e: Error| Error::InconsistentCrystal(format!("operator {i} on {t}: {e}"));
    let a = OscStrip::new(t.strip(i).inside().clone(), wa).map_err(inconsistent)?;
    let b = OscStrip::new(a.outside().clone(), wb).map_err(inconsistent)?;
    if b.outside() != t.strip(i + 1).outside() {
        return Err(Error::InconsistentCrystal(format!(
            "operator {i} on {t} moves the outside of strip {}",
            i + 1
        )));
    }
    let out = t.with_strips(i, [a, b])?;
    if out.c() > g {
        return Err(Error::InconsistentCrystal(format!("operator {i} on {t} exceeds {g} columns")));
    }
    Ok(Some(out))
}

/// `(epsilon, phi)` read off the local rule.
pub fn ssot_stats(t: &Ssot, i: usize, g: usize) -> Result<(usize, usize)> {
    check_ssot(t, i, g)?;
    if i == 0 {
        let first = t.strip(1);
        return Ok((first.removals(), g - first.additions()));
    }
    let (uc, ud) = LocalPair::of(t, i).residue();
    Ok((ud.len(), uc.len()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bijection::phi;
    use crate::tableau::ssyt;

    fn example() -> Ssot {
        "(1 1b)(1 1 1b)(2 1 2b)(2 1)".parse().unwrap()
    }

    #[test]
    fn type_a_operators_on_the_remark_tableau() {
        let t = ssyt(&[&[1, 1, 1, 2, 2], &[2, 3], &[3, 4]]);
        assert_eq!(
            ssyt_op(&t, 2, Direction::Lower),
            Some(ssyt(&[&[1, 1, 1, 2, 3], &[2, 3], &[3, 4]]))
        );
        assert_eq!(ssyt_op(&t, 2, Direction::Raise), None);
        assert_eq!(ssyt_stats(&t, 2), (0, 1));
        assert_eq!(ssyt_op(&ssyt(&[&[1]]), 1, Direction::Lower), Some(ssyt(&[&[2]])));
    }

    #[test]
    fn index_zero_on_the_worked_example() {
        let t = example();
        let once = ssot_op(&t, 0, Direction::Lower, 3).unwrap().unwrap();
        assert_eq!(once.to_string(), "(1 1 1b 1b)(1 1 1b)(2 1 2b)(2 1)");
        let twice = ssot_op(&once, 0, Direction::Lower, 3).unwrap().unwrap();
        assert_eq!(ssot_op(&twice, 0, Direction::Lower, 3).unwrap(), None);
        assert_eq!(ssot_stats(&t, 0, 3).unwrap(), (1, 2));
        let empty = Ssot::empty(crate::partition::Partition::empty());
        assert_eq!(ssot_stats(&empty, 0, 4).unwrap(), (0, 4));
    }

    #[test]
    fn index_two_on_the_worked_example() {
        let t = example();
        let pair = LocalPair::of(&t, 2);
        assert_eq!(pair.c.to_string(), "{1,1,2b}");
        assert_eq!(pair.d.to_string(), "{2,2,2b}");
        assert_eq!(ssot_stats(&t, 2, 3).unwrap(), (1, 1));

        let up = ssot_op(&t, 2, Direction::Raise, 3).unwrap().unwrap();
        let p = LocalPair::of(&up, 2);
        assert_eq!(p.c.to_string(), "{1,1,2b,2b}");
        assert_eq!(p.d.to_string(), "{2,2}");
        assert_eq!(up.to_string(), "(1 1b)(1 1 1b 1b)(1 1)(2 1)");

        let down = ssot_op(&t, 2, Direction::Lower, 3).unwrap().unwrap();
        let p = LocalPair::of(&down, 2);
        assert_eq!(p.c.to_string(), "{1,1}");
        assert_eq!(p.d.to_string(), "{2,2,2b,2b}");
        assert_eq!(down.to_string(), "(1 1b)(1 1)(2 2 2b 2b)(2 1)");
    }

    #[test]
    fn matrix_index_zero_boundaries() {
        let z = SymEvenMatrix::zeros(2);
        assert_eq!(matrix_op(&z, 0, Direction::Raise, 1).unwrap(), None);
        assert_eq!(
            matrix_op(&z, 0, Direction::Lower, 1).unwrap().unwrap().to_string(),
            "2,0\n0,0"
        );
        let full = SymEvenMatrix::new("4".parse().unwrap()).unwrap();
        assert_eq!(matrix_op(&full, 0, Direction::Lower, 2).unwrap(), None);
        assert!(matches!(matrix_op(&full, 0, Direction::Lower, 1), Err(Error::TooWide { .. })));
        assert!(matches!(matrix_op(&full, 1, Direction::Lower, 2), Err(Error::BadIndex { .. })));
    }

    #[test]
    fn matrix_operator_commutes_with_phi_on_a_closed_tableau() {
        let t: Ssot = "(1 1)(2 2b)(1b)(1b)".parse().unwrap();
        let mat = phi(&t, 4).unwrap();
        for i in 0..4 {
            for dir in [Direction::Raise, Direction::Lower] {
                let lhs = matrix_op(&mat, i, dir, 2).unwrap();
                let rhs = ssot_op(&t, i, dir, 2).unwrap().map(|u| phi(&u, 4).unwrap());
                assert_eq!(lhs, rhs, "index {i} {dir}");
                if i > 0 {
                    assert_eq!(matrix_op_by_arrays(&mat, i, dir), lhs);
                }
            }
        }
    }
}
