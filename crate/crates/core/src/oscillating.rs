//! Oscillating horizontal strips and (skew) semistandard oscillating tableaux.
//!
//! A strip is a unit-step chain of partitions whose signed row numbers are
//! weakly decreasing: boxes are added from the lowest row up, then removed
//! from the top row down. Removing a box from row `i` is written `-i`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::partition::{is_horizontal_strip, Partition};
use crate::weight::WeightVector;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OscStrip {
    inside: Partition,
    word: Vec<i32>,
    star: Partition,
    outside: Partition,
}

impl OscStrip {
    pub fn new(inside: Partition, word: Vec<i32>) -> Result<Self> {
        if word.contains(&0) {
            return Err(Error::InvalidStrip("row number 0".into()));
        }
        if word.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidStrip(format!("word {word:?} is not weakly decreasing")));
        }
        let mut shape = inside.clone();
        let mut star = inside.clone();
        for &r in &word {
            let row = r.unsigned_abs() as usize - 1;
            let next = if r > 0 {
                shape.add_box(row)
            } else {
                shape.remove_box(row)
            };
            shape = next.ok_or_else(|| {
                Error::InvalidStrip(format!("step {r} from {shape} leaves the partitions"))
            })?;
            if r > 0 {
                star = shape.clone();
            }
        }
        debug_assert!(is_horizontal_strip(&inside, &star) && is_horizontal_strip(&shape, &star));
        Ok(OscStrip {
            inside,
            word,
            star,
            outside: shape,
        })
    }

    pub fn empty(inside: Partition) -> Self {
        OscStrip {
            star: inside.clone(),
            outside: inside.clone(),
            inside,
            word: Vec::new(),
        }
    }

    /// The unique strip through `inside ⊆ star ⊇ outside`.
    pub fn from_shapes(inside: &Partition, star: &Partition, outside: &Partition) -> Result<Self> {
        if !is_horizontal_strip(inside, star) || !is_horizontal_strip(outside, star) {
            return Err(Error::InvalidStrip(format!(
                "{star} over {inside} and {outside} is not a pair of horizontal strips"
            )));
        }
        let mut word = Vec::with_capacity(star.size() * 2);
        for r in (0..star.len()).rev() {
            for _ in inside.get(r)..star.get(r) {
                word.push(r as i32 + 1);
            }
        }
        for r in 0..star.len() {
            for _ in outside.get(r)..star.get(r) {
                word.push(-(r as i32 + 1));
            }
        }
        OscStrip::new(inside.clone(), word)
    }

    /// Strip through the consecutive shapes of a unit-step chain.
    pub fn from_chain(chain: &[Partition]) -> Result<Self> {
        let first = chain
            .first()
            .ok_or_else(|| Error::InvalidStrip("empty chain".into()))?;
        let mut word = Vec::with_capacity(chain.len() - 1);
        for pair in chain.windows(2) {
            word.push(unit_step(&pair[0], &pair[1])?);
        }
        let strip = OscStrip::new(first.clone(), word)?;
        debug_assert_eq!(&strip.outside, chain.last().unwrap());
        Ok(strip)
    }

    pub fn inside(&self) -> &Partition {
        &self.inside
    }

    pub fn outside(&self) -> &Partition {
        &self.outside
    }

    /// The largest partition of the strip.
    pub fn star(&self) -> &Partition {
        &self.star
    }

    pub fn word(&self) -> &[i32] {
        &self.word
    }

    pub fn size(&self) -> usize {
        self.word.len()
    }

    pub fn is_empty(&self) -> bool {
        self.word.is_empty()
    }

    pub fn additions(&self) -> usize {
        self.word.iter().filter(|&&r| r > 0).count()
    }

    pub fn removals(&self) -> usize {
        self.word.iter().filter(|&&r| r < 0).count()
    }

    /// All partitions of the chain in order.
    pub fn shapes(&self) -> Vec<Partition> {
        let mut out = Vec::with_capacity(self.word.len() + 1);
        let mut shape = self.inside.clone();
        out.push(shape.clone());
        for &r in &self.word {
            let row = r.unsigned_abs() as usize - 1;
            shape = if r > 0 { shape.add_box(row) } else { shape.remove_box(row) }.expect("validated");
            out.push(shape.clone());
        }
        out
    }

    pub fn width(&self) -> usize {
        self.star.width()
    }

    /// Every strip starting at `inside` whose largest partition has at most `max_width` columns.
    pub fn all_from(inside: &Partition, max_width: usize) -> Vec<OscStrip> {
        let mut out = Vec::new();
        let rows = inside.len() + 1;
        let mut star = vec![0usize; rows];
        choose_star(inside, max_width, 0, &mut star, &mut out);
        out
    }
}

fn choose_star(inside: &Partition, max_width: usize, r: usize, star: &mut Vec<usize>, out: &mut Vec<OscStrip>) {
    if r == star.len() {
        let star_p = Partition::new(star.clone()).expect("horizontal strip over a partition");
        let mut outside = vec![0usize; star_p.len()];
        choose_outside(inside, &star_p, 0, &mut outside, out);
        return;
    }
    let cap = if r == 0 { max_width } else { inside.get(r - 1) };
    for v in inside.get(r)..=cap.max(inside.get(r)) {
        if v > max_width {
            break;
        }
        star[r] = v;
        choose_star(inside, max_width, r + 1, star, out);
    }
}

fn choose_outside(inside: &Partition, star: &Partition, r: usize, outside: &mut Vec<usize>, out: &mut Vec<OscStrip>) {
    if r == outside.len() {
        let outside_p = Partition::new(outside.clone()).expect("horizontal strip under a partition");
        out.push(OscStrip::from_shapes(inside, star, &outside_p).expect("shapes chosen as horizontal strips"));
        return;
    }
    for v in star.get(r + 1)..=star.get(r) {
        outside[r] = v;
        choose_outside(inside, star, r + 1, outside, out);
    }
}

/// Signed row number of a single box step between two partitions.
fn unit_step(from: &Partition, to: &Partition) -> Result<i32> {
    let rows = from.len().max(to.len());
    let diffs: Vec<(usize, i64)> = (0..rows)
        .map(|r| (r, to.get(r) as i64 - from.get(r) as i64))
        .filter(|&(_, d)| d != 0)
        .collect();
    match diffs.as_slice() {
        [(r, 1)] => Ok(*r as i32 + 1),
        [(r, -1)] => Ok(-(*r as i32 + 1)),
        _ => Err(Error::InvalidStrip(format!("{from} to {to} is not a single box step"))),
    }
}

/// A skew semistandard oscillating tableau. Trailing empty strips are not stored.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Ssot {
    inside: Partition,
    strips: Vec<OscStrip>,
}

impl Ssot {
    pub fn new(inside: Partition, mut strips: Vec<OscStrip>) -> Result<Self> {
        let mut cur = &inside;
        for (k, s) in strips.iter().enumerate() {
            if s.inside() != cur {
                return Err(Error::InvalidSsot(format!(
                    "strip {} starts at {} but the previous one ends at {}",
                    k + 1,
                    s.inside(),
                    cur
                )));
            }
            cur = s.outside();
        }
        while strips.last().is_some_and(OscStrip::is_empty) {
            strips.pop();
        }
        Ok(Ssot { inside, strips })
    }

    /// Builds strips from consecutive signed words starting at `inside`.
    pub fn from_words(inside: Partition, words: &[Vec<i32>]) -> Result<Self> {
        let mut strips = Vec::with_capacity(words.len());
        let mut cur = inside.clone();
        for w in words {
            let s = OscStrip::new(cur, w.clone())?;
            cur = s.outside().clone();
            strips.push(s);
        }
        Ssot::new(inside, strips)
    }

    pub fn empty(inside: Partition) -> Self {
        Ssot {
            inside,
            strips: Vec::new(),
        }
    }

    pub fn inside(&self) -> &Partition {
        &self.inside
    }

    pub fn outside(&self) -> &Partition {
        self.strips.last().map_or(&self.inside, OscStrip::outside)
    }

    /// Stored strips (no trailing empties).
    pub fn strips(&self) -> &[OscStrip] {
        &self.strips
    }

    /// Number of stored strips, the position of the last nonempty one.
    pub fn len(&self) -> usize {
        self.strips.len()
    }

    pub fn is_empty(&self) -> bool {
        self.strips.is_empty()
    }

    /// Strip `k` (1-based), empty beyond the stored ones.
    pub fn strip(&self, k: usize) -> OscStrip {
        match self.strips.get(k - 1) {
            Some(s) => s.clone(),
            None => OscStrip::empty(self.outside().clone()),
        }
    }

    /// Replaces strips `k` and `k+1` (1-based) and revalidates the chain.
    pub(crate) fn with_strips(&self, k: usize, new: [OscStrip; 2]) -> Result<Ssot> {
        let mut strips = self.strips.clone();
        while strips.len() < k + 1 {
            strips.push(OscStrip::empty(self.outside().clone()));
        }
        let [a, b] = new;
        strips[k - 1] = a;
        strips[k] = b;
        Ssot::new(self.inside.clone(), strips)
    }

    /// Per-strip signed words padded to `m` strips.
    pub fn row_sequence(&self, m: usize) -> Vec<Vec<i32>> {
        (1..=m.max(self.len())).map(|k| self.strip(k).word().to_vec()).collect()
    }

    /// Strip sizes padded with zeros to `m` entries.
    pub fn weight(&self, m: usize) -> Result<Vec<usize>> {
        if self.len() > m {
            return Err(Error::InvalidSsot(format!("{} nonempty strips exceed m = {m}", self.len())));
        }
        Ok((1..=m).map(|k| self.strip(k).size()).collect())
    }

    /// Largest number of columns of any partition appearing.
    pub fn c(&self) -> usize {
        self.strips
            .iter()
            .map(OscStrip::width)
            .max()
            .unwrap_or(0)
            .max(self.inside.width())
    }

    /// `g` minus the weight.
    pub fn crystal_weight(&self, m: usize, g: usize) -> Result<WeightVector> {
        let c = self.c();
        if c > g {
            return Err(Error::TooWide { c, g });
        }
        Ok(WeightVector(
            self.weight(m)?.iter().map(|&a| g as i64 - a as i64).collect(),
        ))
    }

    /// Every skew SSOT from `inside` to `outside` with at most `m` nonempty strips,
    /// `c <= g`, and the given strip sizes when `weight` is supplied. Sorted.
    pub fn enumerate(
        inside: &Partition,
        outside: &Partition,
        m: usize,
        g: usize,
        weight: Option<&[usize]>,
    ) -> Vec<Ssot> {
        if inside.width() > g || outside.width() > g {
            return Vec::new();
        }
        if let Some(w) = weight {
            if w.len() > m && w[m..].iter().any(|&x| x > 0) {
                return Vec::new();
            }
        }
        let mut out = Vec::new();
        let mut strips = Vec::with_capacity(m);
        search(inside, outside, m, g, weight, &mut strips, &mut out);
        out.sort();
        out.dedup();
        out.into_iter()
            .map(|strips| Ssot::new(inside.clone(), strips).expect("chained by construction"))
            .collect()
    }
}

fn search(
    cur: &Partition,
    target: &Partition,
    m: usize,
    g: usize,
    weight: Option<&[usize]>,
    strips: &mut Vec<OscStrip>,
    out: &mut Vec<Vec<OscStrip>>,
) {
    let k = strips.len();
    if k == m {
        if cur == target {
            out.push(strips.clone());
        }
        return;
    }
    let left = m - k;
    let want = weight.map(|w| w.get(k).copied().unwrap_or(0));
    for s in OscStrip::all_from(cur, g) {
        if want.is_some_and(|w| w != s.size()) {
            continue;
        }
        // each later strip moves every column length by at most one
        let reachable = (0..g.max(1)).all(|c| {
            let a = column_length(s.outside(), c);
            let b = column_length(target, c);
            a.abs_diff(b) < left
        });
        if !reachable {
            continue;
        }
        let next = s.outside().clone();
        strips.push(s);
        search(&next, target, m, g, weight, strips, out);
        strips.pop();
    }
}

fn column_length(p: &Partition, c: usize) -> usize {
    p.parts().iter().take_while(|&&l| l > c).count()
}

pub fn row_sequence(t: &Ssot, m: usize) -> Vec<Vec<i32>> {
    t.row_sequence(m)
}

/// `(wt, cwt)` padded to `m` strips.
pub fn ssot_weights(t: &Ssot, m: usize, g: usize) -> Result<(Vec<usize>, WeightVector)> {
    Ok((t.weight(m)?, t.crystal_weight(m, g)?))
}

pub fn enumerate_ssot(
    inside: &Partition,
    outside: &Partition,
    m: usize,
    g: usize,
    weight: Option<&[usize]>,
) -> Vec<Ssot> {
    Ssot::enumerate(inside, outside, m, g, weight)
}

fn fmt_word(word: &[i32]) -> String {
    word.iter()
        .map(|&r| if r < 0 { format!("{}b", -r) } else { r.to_string() })
        .collect::<Vec<_>>()
        .join(" ")
}

impl fmt::Display for OscStrip {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", fmt_word(&self.word))
    }
}

impl fmt::Debug for OscStrip {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.inside, self)
    }
}

impl fmt::Display for Ssot {
    /// `(1 1b)(1 1 1b)...`, prefixed with the inside shape when it is nonempty.
    /// The empty tableau prints as `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if !self.inside.is_empty() {
            write!(f, "{}", self.inside)?;
        }
        if self.strips.is_empty() {
            return write!(f, "()");
        }
        for s in &self.strips {
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Ssot {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.inside.is_empty() {
            write!(f, "{}{}", Partition::empty(), self)
        } else {
            write!(f, "{self}")
        }
    }
}

impl FromStr for Ssot {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (inside, rest) = if s.starts_with('[') {
            let end = s
                .find(']')
                .ok_or_else(|| Error::Parse("unterminated inside shape".into()))?;
            (s[..=end].parse::<Partition>()?, &s[end + 1..])
        } else {
            (Partition::empty(), s)
        };
        let mut words = Vec::new();
        let mut rest = rest.trim_start();
        while !rest.is_empty() {
            let body = rest
                .strip_prefix('(')
                .ok_or_else(|| Error::Parse(format!("expected '(' at {rest:?}")))?;
            let end = body
                .find(')')
                .ok_or_else(|| Error::Parse("unterminated strip".into()))?;
            let word = body[..end]
                .split_whitespace()
                .map(|t| {
                    let (digits, sign) = match t.strip_suffix('b') {
                        Some(d) => (d, -1),
                        None => (t, 1),
                    };
                    match digits.parse::<i32>() {
                        Ok(v) if v > 0 => Ok(sign * v),
                        _ => Err(Error::Parse(format!("bad row number {t:?}"))),
                    }
                })
                .collect::<Result<Vec<_>>>()?;
            words.push(word);
            rest = body[end + 1..].trim_start();
        }
        Ssot::from_words(inside, &words)
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::partition::part;

    pub(crate) fn example_small() -> Ssot {
        "(1 1b)(1 1 1b)(2 1 2b)(2 1)".parse().unwrap()
    }

    pub(crate) fn example_chain() -> Ssot {
        "(1 1)(2 2b)(1b)(1b)".parse().unwrap()
    }

    #[test]
    fn strip_from_word() {
        let s = OscStrip::new(part(&[1]), vec![2, 1, -2]).unwrap();
        assert_eq!(s.shapes(), vec![part(&[1]), part(&[1, 1]), part(&[2, 1]), part(&[2])]);
        assert_eq!(s.star(), &part(&[2, 1]));
        assert_eq!(s.outside(), &part(&[2]));
        assert_eq!(s.size(), 3);

        let e = OscStrip::new(Partition::empty(), vec![]).unwrap();
        assert_eq!(e.outside(), &Partition::empty());

        assert!(OscStrip::new(Partition::empty(), vec![1, 2]).is_err());
        assert!(OscStrip::new(Partition::empty(), vec![2]).is_err());
        assert!(OscStrip::new(Partition::empty(), vec![-1]).is_err());
    }

    #[test]
    fn strip_from_shapes_matches_word() {
        let s = OscStrip::from_shapes(&part(&[1]), &part(&[2, 1]), &part(&[2])).unwrap();
        assert_eq!(s.word(), &[2, 1, -2]);
        assert!(OscStrip::from_shapes(&Partition::empty(), &part(&[1, 1]), &Partition::empty()).is_err());
    }

    #[test]
    fn example_row_sequence_and_weights() {
        let t = example_small();
        assert_eq!(
            row_sequence(&t, 4),
            vec![vec![1, -1], vec![1, 1, -1], vec![2, 1, -2], vec![2, 1]]
        );
        assert_eq!(t.c(), 3);
        assert_eq!(t.outside(), &part(&[3, 1]));
        let (wt, cwt) = ssot_weights(&t, 4, 3).unwrap();
        assert_eq!(wt, vec![2, 3, 3, 2]);
        assert_eq!(cwt, WeightVector(vec![1, 0, 0, 1]));
        assert!(matches!(ssot_weights(&t, 4, 2), Err(Error::TooWide { c: 3, g: 2 })));
        assert_eq!(t.strip(3).shapes()[0], part(&[1]));
        assert_eq!(t.strip(3).star(), &part(&[2, 1]));
    }

    #[test]
    fn chain_example_weights() {
        let t = example_chain();
        let (wt, cwt) = ssot_weights(&t, 4, 2).unwrap();
        assert_eq!(wt, vec![2, 2, 1, 1]);
        assert_eq!(cwt, WeightVector(vec![0, 0, 1, 1]));
        let shapes: Vec<Partition> = t.strips().iter().flat_map(|s| s.shapes()).collect();
        assert_eq!(shapes[2], part(&[2]));
        assert_eq!(shapes[4], part(&[2, 1]));
    }

    #[test]
    fn empty_tableau() {
        let t = Ssot::empty(Partition::empty());
        assert_eq!(row_sequence(&t, 3), vec![Vec::<i32>::new(); 3]);
        let (wt, cwt) = ssot_weights(&t, 2, 5).unwrap();
        assert_eq!(wt, vec![0, 0]);
        assert_eq!(cwt, WeightVector(vec![5, 5]));
        assert_eq!(t.to_string(), "()");
        assert_eq!("()".parse::<Ssot>().unwrap(), t);
    }

    #[test]
    fn small_enumerations() {
        let e = Partition::empty();
        let a = enumerate_ssot(&e, &e, 1, 1, None);
        assert_eq!(a.iter().map(ToString::to_string).collect::<Vec<_>>(), vec!["()", "(1 1b)"]);
        let b = enumerate_ssot(&e, &part(&[1]), 1, 1, None);
        assert_eq!(b.iter().map(ToString::to_string).collect::<Vec<_>>(), vec!["(1)"]);
        assert_eq!(enumerate_ssot(&e, &e, 2, 1, None).len(), 5);
        assert_eq!(enumerate_ssot(&e, &e, 2, 1, Some(&[2, 0])).len(), 1);
    }

    #[test]
    fn text_round_trip_with_inside() {
        let t = Ssot::from_words(part(&[2, 1]), &[vec![3, -1], vec![]]).unwrap();
        assert_eq!(t.to_string(), "[2,1](3 1b)");
        assert_eq!(t.to_string().parse::<Ssot>().unwrap(), t);
        assert!("(1 2)".parse::<Ssot>().is_err());
        assert!("(1 0)".parse::<Ssot>().is_err());
    }

    #[test]
    fn strips_replay_from_their_three_shapes() {
        for inside in Partition::up_to_size(4, 3) {
            for s in OscStrip::all_from(&inside, 3) {
                assert!(is_horizontal_strip(s.inside(), s.star()));
                assert!(is_horizontal_strip(s.outside(), s.star()));
                let again = OscStrip::from_shapes(s.inside(), s.star(), s.outside()).unwrap();
                assert_eq!(again, s);
                assert_eq!(OscStrip::from_chain(&s.shapes()).unwrap(), s);
            }
        }
    }
}
