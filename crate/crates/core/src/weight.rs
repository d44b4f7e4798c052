//! Weight vectors in the type C weight lattice, written in the coordinate basis.
//!
//! Coordinate `i` (1-based in prose, 0-based in code) carries the coefficient of
//! the `i`-th barred basis vector. A weight is dominant when its coordinates are
//! nonnegative and weakly increasing; it then corresponds to the partition
//! obtained by reading the coordinates backwards.

use std::fmt;
use std::ops::{Add, AddAssign, Neg, Sub};

use crate::partition::Partition;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct WeightVector(pub Vec<i64>);

impl WeightVector {
    pub fn zero(m: usize) -> Self {
        WeightVector(vec![0; m])
    }

    pub fn constant(m: usize, value: i64) -> Self {
        WeightVector(vec![value; m])
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    /// Simple root `alpha_i` of `sp(2m)`: `alpha_0 = 2 e_1`, `alpha_i = e_{i+1} - e_i`.
    pub fn simple_root(m: usize, i: usize) -> Self {
        let mut v = vec![0; m];
        if i == 0 {
            v[0] = 2;
        } else {
            v[i - 1] = -1;
            v[i] = 1;
        }
        WeightVector(v)
    }

    /// Pairing with the simple coroot `alpha_i^vee` (`alpha_0^vee = e_1`).
    pub fn pair_coroot(&self, i: usize) -> i64 {
        if i == 0 {
            self.0[0]
        } else {
            self.0[i] - self.0[i - 1]
        }
    }

    pub fn is_dominant(&self) -> bool {
        self.0.first().is_none_or(|&x| x >= 0) && self.0.windows(2).all(|w| w[0] <= w[1])
    }

    /// Partition `(w_m, ..., w_1)` for a dominant weight.
    pub fn to_partition(&self) -> Option<Partition> {
        if !self.is_dominant() {
            return None;
        }
        Partition::new(self.0.iter().rev().map(|&x| x as usize).collect()).ok()
    }

    /// Dominant weight of rank `m` identified with `p`. `None` if `p` has more than `m` parts.
    pub fn from_partition(p: &Partition, m: usize) -> Option<Self> {
        if p.len() > m {
            return None;
        }
        Some(WeightVector(
            (0..m).map(|i| p.get(m - 1 - i) as i64).collect(),
        ))
    }
}

impl Add for &WeightVector {
    type Output = WeightVector;

    fn add(self, rhs: &WeightVector) -> WeightVector {
        WeightVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &WeightVector {
    type Output = WeightVector;

    fn sub(self, rhs: &WeightVector) -> WeightVector {
        WeightVector(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl AddAssign<&WeightVector> for WeightVector {
    fn add_assign(&mut self, rhs: &WeightVector) {
        for (a, b) in self.0.iter_mut().zip(&rhs.0) {
            *a += b;
        }
    }
}

impl Neg for &WeightVector {
    type Output = WeightVector;

    fn neg(self) -> WeightVector {
        WeightVector(self.0.iter().map(|a| -a).collect())
    }
}

impl fmt::Display for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for WeightVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::part;

    #[test]
    fn dominant_partition_identification() {
        // (2,1,1) with m = 3 is 2 e_3 + e_2 + e_1
        let w = WeightVector::from_partition(&part(&[2, 1, 1]), 3).unwrap();
        assert_eq!(w, WeightVector(vec![1, 1, 2]));
        assert!(w.is_dominant());
        assert_eq!(w.to_partition().unwrap(), part(&[2, 1, 1]));
        assert!(!WeightVector(vec![1, 0]).is_dominant());
        assert!(!WeightVector(vec![-1, 2]).is_dominant());
        assert!(WeightVector::from_partition(&part(&[1, 1]), 1).is_none());
    }

    #[test]
    fn roots_and_coroots() {
        assert_eq!(WeightVector::simple_root(3, 0), WeightVector(vec![2, 0, 0]));
        assert_eq!(WeightVector::simple_root(3, 2), WeightVector(vec![0, -1, 1]));
        // Cartan matrix entries <alpha_j, alpha_i^vee>
        let a = |i, j| WeightVector::simple_root(3, j).pair_coroot(i);
        assert_eq!(a(0, 0), 2);
        assert_eq!(a(1, 1), 2);
        assert_eq!(a(0, 1), -1);
        assert_eq!(a(1, 0), -2);
        assert_eq!(a(1, 2), -1);
        assert_eq!(a(0, 2), 0);
    }
}
