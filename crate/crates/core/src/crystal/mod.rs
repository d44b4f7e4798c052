//! Crystal structures on oscillating tableaux, symmetric matrices and King tableaux.

pub mod graph;
pub mod multiset;
pub mod ops;
pub mod stembridge;

use std::fmt;
use std::str::FromStr;

use crate::bijection::{psi, psi_inverse};
use crate::error::{Error, Result};
use crate::king::KingTableau;
use crate::oscillating::Ssot;
use crate::partition::Partition;
use crate::rsk::{IntMatrix, SymEvenMatrix};
use crate::weight::WeightVector;

pub use graph::CrystalGraph;
pub use multiset::{unpaired, MultisetZ};
pub use ops::{matrix_op, matrix_op_by_arrays, ssot_op, ssot_stats, ssyt_op, ssyt_stats, LocalPair};
pub use stembridge::{stembridge_check, StembridgeReport, Violation};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Direction {
    Raise,
    Lower,
}

impl Direction {
    pub fn opposite(self) -> Direction {
        match self {
            Direction::Raise => Direction::Lower,
            Direction::Lower => Direction::Raise,
        }
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::Raise => "raise",
            Direction::Lower => "lower",
        })
    }
}

impl FromStr for Direction {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "raise" | "e" => Ok(Direction::Raise),
            "lower" | "f" => Ok(Direction::Lower),
            _ => Err(Error::Parse(format!("unknown direction {s:?}"))),
        }
    }
}

/// A set with Kashiwara operators indexed by `0..rank()`.
pub trait Crystal {
    type Elem: Clone + Ord + fmt::Display;

    fn rank(&self) -> usize;

    fn apply(&self, x: &Self::Elem, i: usize, dir: Direction) -> Result<Option<Self::Elem>>;

    fn weight(&self, x: &Self::Elem) -> Result<WeightVector>;

    fn raise(&self, x: &Self::Elem, i: usize) -> Result<Option<Self::Elem>> {
        self.apply(x, i, Direction::Raise)
    }

    fn lower(&self, x: &Self::Elem, i: usize) -> Result<Option<Self::Elem>> {
        self.apply(x, i, Direction::Lower)
    }

    fn epsilon(&self, x: &Self::Elem, i: usize) -> Result<usize> {
        string_length(self, x, i, Direction::Raise)
    }

    fn phi(&self, x: &Self::Elem, i: usize) -> Result<usize> {
        string_length(self, x, i, Direction::Lower)
    }
}

/// Number of times the operator applies before vanishing.
pub fn string_length<C: Crystal + ?Sized>(c: &C, x: &C::Elem, i: usize, dir: Direction) -> Result<usize> {
    let mut k = 0;
    let mut cur = x.clone();
    while let Some(next) = c.apply(&cur, i, dir)? {
        cur = next;
        k += 1;
    }
    Ok(k)
}

fn check_index(i: usize, m: usize) -> Result<()> {
    if i >= m {
        return Err(Error::BadIndex {
            index: i,
            reason: format!("rank is {m}"),
        });
    }
    Ok(())
}

/// Oscillating tableaux with at most `m` strips and at most `g` columns.
#[derive(Clone, Copy, Debug)]
pub struct SsotCrystal {
    pub m: usize,
    pub g: usize,
}

impl SsotCrystal {
    /// Every SSOT from the empty shape.
    pub fn ambient(&self) -> Vec<Ssot> {
        let empty = Partition::empty();
        let mut out: Vec<Ssot> = Partition::in_rectangle(self.m, self.g)
            .iter()
            .flat_map(|outside| Ssot::enumerate(&empty, outside, self.m, self.g, None))
            .collect();
        out.sort();
        out
    }

    /// SSOT from the empty shape ending at the complement of `mu` in the `m x g` box.
    pub fn highest_weight_set(&self, mu: &Partition) -> Result<Vec<Ssot>> {
        let outside = mu.rect_complement(self.m, self.g)?;
        Ok(Ssot::enumerate(&Partition::empty(), &outside, self.m, self.g, None))
    }
}

impl Crystal for SsotCrystal {
    type Elem = Ssot;

    fn rank(&self) -> usize {
        self.m
    }

    fn apply(&self, x: &Ssot, i: usize, dir: Direction) -> Result<Option<Ssot>> {
        check_index(i, self.m)?;
        ssot_op(x, i, dir, self.g)
    }

    fn weight(&self, x: &Ssot) -> Result<WeightVector> {
        x.crystal_weight(self.m, self.g)
    }

    fn epsilon(&self, x: &Ssot, i: usize) -> Result<usize> {
        check_index(i, self.m)?;
        Ok(ssot_stats(x, i, self.g)?.0)
    }

    fn phi(&self, x: &Ssot, i: usize) -> Result<usize> {
        check_index(i, self.m)?;
        Ok(ssot_stats(x, i, self.g)?.1)
    }
}

/// Symmetric even-diagonal `m x m` matrices with `c <= 2g`.
#[derive(Clone, Copy, Debug)]
pub struct MatrixCrystal {
    pub m: usize,
    pub g: usize,
}

impl MatrixCrystal {
    pub fn ambient(&self) -> Vec<SymEvenMatrix> {
        let mut out: Vec<SymEvenMatrix> = IntMatrix::all_sym_even(self.m, 2 * self.g as u32)
            .into_iter()
            .map(|n| SymEvenMatrix::new(n).expect("enumerated symmetric"))
            .filter(|n| n.c_index() <= 2 * self.g)
            .collect();
        out.sort();
        out
    }
}

impl Crystal for MatrixCrystal {
    type Elem = SymEvenMatrix;

    fn rank(&self) -> usize {
        self.m
    }

    fn apply(&self, x: &SymEvenMatrix, i: usize, dir: Direction) -> Result<Option<SymEvenMatrix>> {
        if x.m() != self.m {
            return Err(Error::InvalidMatrix(format!("expected {0}x{0}", self.m)));
        }
        matrix_op(x, i, dir, self.g)
    }

    fn weight(&self, x: &SymEvenMatrix) -> Result<WeightVector> {
        Ok(x.crystal_weight(self.g))
    }
}

/// King tableaux in the `m x g` box, with operators carried over from oscillating tableaux.
#[derive(Clone, Copy, Debug)]
pub struct KingCrystal {
    pub m: usize,
    pub g: usize,
}

impl Crystal for KingCrystal {
    type Elem = KingTableau;

    fn rank(&self) -> usize {
        self.m
    }

    fn apply(&self, x: &KingTableau, i: usize, dir: Direction) -> Result<Option<KingTableau>> {
        check_index(i, self.m)?;
        match ssot_op(&psi(x, self.g)?, i, dir, self.g)? {
            Some(s) => psi_inverse(&s, self.m, self.g).map(Some),
            None => Ok(None),
        }
    }

    fn weight(&self, x: &KingTableau) -> Result<WeightVector> {
        Ok(x.weight())
    }
}

/// Skew oscillating tableaux with the type A operators `1..m`.
#[derive(Clone, Copy, Debug)]
pub struct SkewSsotCrystal {
    pub m: usize,
    pub g: usize,
}

impl Crystal for SkewSsotCrystal {
    type Elem = Ssot;

    fn rank(&self) -> usize {
        self.m
    }

    fn apply(&self, x: &Ssot, i: usize, dir: Direction) -> Result<Option<Ssot>> {
        check_index(i, self.m)?;
        if i == 0 {
            return Err(Error::BadIndex {
                index: 0,
                reason: "skew oscillating tableaux carry only indices 1..m".into(),
            });
        }
        ssot_op(x, i, dir, self.g)
    }

    fn weight(&self, x: &Ssot) -> Result<WeightVector> {
        x.crystal_weight(self.m, self.g)
    }

    fn epsilon(&self, x: &Ssot, i: usize) -> Result<usize> {
        Ok(ssot_stats(x, i, self.g)?.0)
    }

    fn phi(&self, x: &Ssot, i: usize) -> Result<usize> {
        Ok(ssot_stats(x, i, self.g)?.1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::part;

    #[test]
    fn king_operators_agree_with_transport() {
        let k = KingCrystal { m: 2, g: 2 };
        let s = SsotCrystal { m: 2, g: 2 };
        for t in KingTableau::enumerate(&part(&[1, 1]), 2).unwrap() {
            for i in 0..2 {
                for dir in [Direction::Raise, Direction::Lower] {
                    let via_king = k.apply(&t, i, dir).unwrap().map(|u| psi(&u, 2).unwrap());
                    let via_ssot = s.apply(&psi(&t, 2).unwrap(), i, dir).unwrap();
                    assert_eq!(via_king, via_ssot);
                }
            }
        }
    }

    #[test]
    fn closed_form_stats_match_iteration() {
        let c = SsotCrystal { m: 2, g: 2 };
        for t in c.ambient() {
            for i in 0..2 {
                assert_eq!(c.epsilon(&t, i).unwrap(), string_length(&c, &t, i, Direction::Raise).unwrap());
                assert_eq!(c.phi(&t, i).unwrap(), string_length(&c, &t, i, Direction::Lower).unwrap());
            }
        }
    }

    #[test]
    fn index_out_of_range() {
        let c = SsotCrystal { m: 2, g: 1 };
        let t = Ssot::empty(Partition::empty());
        assert!(matches!(c.lower(&t, 2), Err(Error::BadIndex { .. })));
        let skew = SkewSsotCrystal { m: 2, g: 2 };
        assert!(matches!(skew.lower(&t, 0), Err(Error::BadIndex { .. })));
    }
}
