use std::collections::BTreeMap;
use std::fmt;

/// Finite multiset of integers.
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultisetZ(BTreeMap<i32, usize>);

impl MultisetZ {
    pub fn new() -> Self {
        MultisetZ(BTreeMap::new())
    }

    pub fn count(&self, x: i32) -> usize {
        self.0.get(&x).copied().unwrap_or(0)
    }

    pub fn insert(&mut self, x: i32) {
        self.insert_n(x, 1);
    }

    pub fn insert_n(&mut self, x: i32, n: usize) {
        if n > 0 {
            *self.0.entry(x).or_default() += n;
        }
    }

    /// Removes one copy of `x`; false if absent.
    pub fn remove(&mut self, x: i32) -> bool {
        match self.0.get_mut(&x) {
            Some(c) if *c > 1 => {
                *c -= 1;
                true
            }
            Some(_) => {
                self.0.remove(&x);
                true
            }
            None => false,
        }
    }

    pub fn len(&self) -> usize {
        self.0.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn smallest(&self) -> Option<i32> {
        self.0.keys().next().copied()
    }

    pub fn largest(&self) -> Option<i32> {
        self.0.keys().next_back().copied()
    }

    /// Elements in increasing order, with repetition.
    pub fn to_vec(&self) -> Vec<i32> {
        self.0
            .iter()
            .flat_map(|(&x, &n)| std::iter::repeat_n(x, n))
            .collect()
    }

    pub fn intersection(&self, other: &Self) -> Self {
        let mut out = MultisetZ::new();
        for (&x, &n) in &self.0 {
            out.insert_n(x, n.min(other.count(x)));
        }
        out
    }

    pub fn union(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&x, &n) in &other.0 {
            out.insert_n(x, n);
        }
        out
    }

    pub fn difference(&self, other: &Self) -> Self {
        let mut out = MultisetZ::new();
        for (&x, &n) in &self.0 {
            out.insert_n(x, n.saturating_sub(other.count(x)));
        }
        out
    }

    pub fn shift(&self, by: i32) -> Self {
        MultisetZ(self.0.iter().map(|(&x, &n)| (x + by, n)).collect())
    }

    pub fn negate(&self) -> Self {
        MultisetZ(self.0.iter().map(|(&x, &n)| (-x, n)).collect())
    }

    /// `(A \ B) ⊎ ((A ∩ B) + 1)`.
    pub fn up(&self, other: &Self) -> Self {
        self.difference(other).union(&self.intersection(other).shift(1))
    }

    /// `(A \ B) ⊎ ((A ∩ B) - 1)`.
    pub fn down(&self, other: &Self) -> Self {
        self.difference(other).union(&self.intersection(other).shift(-1))
    }

    /// Elements `> 0`.
    pub fn positive(&self) -> Self {
        MultisetZ(self.0.range(1..).map(|(&x, &n)| (x, n)).collect())
    }

    /// Elements `< 0`, negated.
    pub fn negative_abs(&self) -> Self {
        MultisetZ(self.0.range(..0).map(|(&x, &n)| (-x, n)).collect())
    }
}

impl FromIterator<i32> for MultisetZ {
    fn from_iter<I: IntoIterator<Item = i32>>(iter: I) -> Self {
        let mut m = MultisetZ::new();
        for x in iter {
            m.insert(x);
        }
        m
    }
}

impl fmt::Display for MultisetZ {
    /// `{1,1,2b}` with negative entries printed barred.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self
            .to_vec()
            .into_iter()
            .rev()
            .map(|x| if x < 0 { format!("{}b", -x) } else { x.to_string() })
            .collect();
        write!(f, "{{{}}}", items.join(","))
    }
}

impl fmt::Debug for MultisetZ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Bracket matching between `opens` and `closes`: a close `q` pairs with the
/// nearest unmatched open `p < q`. Returns the unpaired opens and closes.
pub fn unpaired(opens: &MultisetZ, closes: &MultisetZ) -> (MultisetZ, MultisetZ) {
    let mut events: Vec<(i32, bool)> = opens
        .to_vec()
        .into_iter()
        .map(|x| (x, true))
        .chain(closes.to_vec().into_iter().map(|x| (x, false)))
        .collect();
    // closes before opens at equal values so that equal values never pair
    events.sort();
    let mut stack = Vec::new();
    let mut left = MultisetZ::new();
    for (x, is_open) in events {
        if is_open {
            stack.push(x);
        } else if stack.pop().is_none() {
            left.insert(x);
        }
    }
    (stack.into_iter().collect(), left)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ms(v: &[i32]) -> MultisetZ {
        v.iter().copied().collect()
    }

    #[test]
    fn up_and_down() {
        assert_eq!(ms(&[1]).up(&ms(&[2, 1])), ms(&[2]));
        assert_eq!(ms(&[2, 1]).up(&ms(&[1])), ms(&[2, 2]));
        assert_eq!(ms(&[2]).down(&ms(&[2, 2])), ms(&[1]));
        assert_eq!(ms(&[2, 2]).down(&ms(&[2])), ms(&[2, 1]));
    }

    #[test]
    fn pairing_on_the_worked_example() {
        let c = ms(&[1, 1, -2]);
        let d = ms(&[2, 2, -2]);
        let (uc, ud) = unpaired(&c, &d);
        assert_eq!(uc, ms(&[-2]));
        assert_eq!(ud, ms(&[-2]));
        assert_eq!(c.to_string(), "{1,1,2b}");
    }

    #[test]
    fn pairing_is_bracket_matching() {
        let (uc, ud) = unpaired(&ms(&[2]), &ms(&[3, 5]));
        assert!(uc.is_empty());
        assert_eq!(ud, ms(&[5]));
        let (uc, ud) = unpaired(&ms(&[3, 3]), &ms(&[3]));
        assert_eq!((uc, ud), (ms(&[3, 3]), ms(&[3])));
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn up_down_are_inverse(a in prop::collection::vec(-4i32..5, 0..6), b in prop::collection::vec(-4i32..5, 0..6)) {
                let (a, b) = (ms(&a), ms(&b));
                let c = a.up(&b);
                let d = b.up(&a);
                prop_assert_eq!(c.down(&d), a);
                prop_assert_eq!(d.down(&c), b);
            }

            #[test]
            fn residue_separates(a in prop::collection::vec(-4i32..5, 0..7), b in prop::collection::vec(-4i32..5, 0..7)) {
                let (uc, ud) = unpaired(&ms(&a), &ms(&b));
                if let (Some(lo), Some(hi)) = (uc.smallest(), ud.largest()) {
                    prop_assert!(lo >= hi);
                }
                prop_assert_eq!(a.len() - uc.len(), b.len() - ud.len());
            }
        }
    }
}
