//! King tableaux: column-strict fillings over `1 < 1b < 2 < 2b < ...` where
//! every entry in row `i` is at least `i`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::weight::WeightVector;

/// A letter of the barred alphabet. `+i` is the letter `i`, `-i` is `i` barred.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct BarredLetter(i32);

impl BarredLetter {
    pub fn new(value: i32) -> Result<Self> {
        if value == 0 {
            return Err(Error::InvalidKing("letter 0 does not exist".into()));
        }
        Ok(BarredLetter(value))
    }

    pub fn plain(i: u32) -> Self {
        BarredLetter(i as i32)
    }

    pub fn barred(i: u32) -> Self {
        BarredLetter(-(i as i32))
    }

    pub fn value(self) -> i32 {
        self.0
    }

    pub fn index(self) -> u32 {
        self.0.unsigned_abs()
    }

    pub fn is_barred(self) -> bool {
        self.0 < 0
    }

    /// Position in the alphabet, starting at 1 for the letter `1`.
    pub fn rank(self) -> u32 {
        2 * self.index() - u32::from(!self.is_barred())
    }
}

impl Ord for BarredLetter {
    fn cmp(&self, other: &Self) -> Ordering {
        self.rank().cmp(&other.rank())
    }
}

impl PartialOrd for BarredLetter {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for BarredLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_barred() {
            write!(f, "{}b", self.index())
        } else {
            write!(f, "{}", self.index())
        }
    }
}

impl fmt::Debug for BarredLetter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for BarredLetter {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (digits, barred) = match s.strip_suffix('b') {
            Some(d) => (d, true),
            None => (s, false),
        };
        let i: u32 = digits
            .parse()
            .map_err(|_| Error::Parse(format!("bad letter {s:?}")))?;
        if i == 0 {
            return Err(Error::Parse(format!("bad letter {s:?}")));
        }
        Ok(if barred {
            BarredLetter::barred(i)
        } else {
            BarredLetter::plain(i)
        })
    }
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KingTableau {
    m: usize,
    rows: Vec<Vec<BarredLetter>>,
}

impl KingTableau {
    pub fn new(rows: Vec<Vec<BarredLetter>>, m: usize) -> Result<Self> {
        let t = KingTableau { m, rows };
        t.validate()?;
        Ok(t)
    }

    /// Builds from signed integers, `-2` standing for `2b`.
    pub fn from_values(rows: &[&[i32]], m: usize) -> Result<Self> {
        let rows = rows
            .iter()
            .map(|r| r.iter().map(|&v| BarredLetter::new(v)).collect())
            .collect::<Result<Vec<_>>>()?;
        KingTableau::new(rows, m)
    }

    pub fn empty(m: usize) -> Self {
        KingTableau { m, rows: Vec::new() }
    }

    fn validate(&self) -> Result<()> {
        if self.rows.len() > self.m {
            return Err(Error::InvalidKing(format!(
                "{} rows exceed m = {}",
                self.rows.len(),
                self.m
            )));
        }
        for (r, row) in self.rows.iter().enumerate() {
            if row.is_empty() {
                return Err(Error::InvalidKing(format!("row {} is empty", r + 1)));
            }
            if row.windows(2).any(|w| w[0] > w[1]) {
                return Err(Error::InvalidKing(format!("row {} decreases", r + 1)));
            }
            if let Some(x) = row
                .iter()
                .find(|x| x.index() as usize <= r || x.index() as usize > self.m)
            {
                return Err(Error::InvalidKing(format!(
                    "letter {x} not allowed in row {} (m = {})",
                    r + 1,
                    self.m
                )));
            }
            if r > 0 {
                let above = &self.rows[r - 1];
                if row.len() > above.len() {
                    return Err(Error::InvalidKing("shape is not a partition".into()));
                }
                if row.iter().zip(above).any(|(b, a)| b <= a) {
                    return Err(Error::InvalidKing(format!(
                        "columns not strict between rows {} and {}",
                        r,
                        r + 1
                    )));
                }
            }
        }
        Ok(())
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn rows(&self) -> &[Vec<BarredLetter>] {
        &self.rows
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.rows.iter().map(Vec::len).collect()).expect("rows form a partition")
    }

    /// Columns read top to bottom.
    pub fn columns(&self) -> Vec<Vec<BarredLetter>> {
        let width = self.rows.first().map_or(0, Vec::len);
        (0..width)
            .map(|c| {
                self.rows
                    .iter()
                    .take_while(|row| row.len() > c)
                    .map(|row| row[c])
                    .collect()
            })
            .collect()
    }

    /// Subtableau of entries `<= bound`.
    pub fn restrict(&self, bound: BarredLetter) -> KingTableau {
        let rows = self
            .rows
            .iter()
            .map(|row| row.iter().copied().filter(|&x| x <= bound).collect::<Vec<_>>())
            .filter(|row| !row.is_empty())
            .collect();
        KingTableau { m: self.m, rows }
    }

    /// `(#i) - (#ib)` in coordinate `i`.
    pub fn weight(&self) -> WeightVector {
        let mut w = vec![0; self.m];
        for x in self.rows.iter().flatten() {
            w[x.index() as usize - 1] += if x.is_barred() { -1 } else { 1 };
        }
        WeightVector(w)
    }

    /// All King tableaux of shape `mu`, ordered lexicographically on the row-major entries.
    pub fn enumerate(mu: &Partition, m: usize) -> Result<Vec<KingTableau>> {
        if mu.len() > m {
            return Err(Error::ShapeTooTall {
                shape: mu.clone(),
                m,
            });
        }
        let alphabet: Vec<BarredLetter> = (1..=m as u32)
            .flat_map(|i| [BarredLetter::plain(i), BarredLetter::barred(i)])
            .collect();
        let cells: Vec<(usize, usize)> = mu
            .parts()
            .iter()
            .enumerate()
            .flat_map(|(r, &l)| (0..l).map(move |c| (r, c)))
            .collect();
        let mut rows: Vec<Vec<BarredLetter>> = mu.parts().iter().map(|&l| Vec::with_capacity(l)).collect();
        let mut out = Vec::new();
        fill(&cells, 0, &alphabet, m, &mut rows, &mut out);
        Ok(out)
    }
}

fn fill(
    cells: &[(usize, usize)],
    k: usize,
    alphabet: &[BarredLetter],
    m: usize,
    rows: &mut Vec<Vec<BarredLetter>>,
    out: &mut Vec<KingTableau>,
) {
    if k == cells.len() {
        out.push(KingTableau {
            m,
            rows: rows.clone(),
        });
        return;
    }
    let (r, c) = cells[k];
    // smallest admissible rank: row r+1 needs letters >= r+1
    let mut lo = 2 * r as u32 + 1;
    if c > 0 {
        lo = lo.max(rows[r][c - 1].rank());
    }
    if r > 0 {
        lo = lo.max(rows[r - 1][c].rank() + 1);
    }
    for &x in &alphabet[(lo as usize - 1).min(alphabet.len())..] {
        rows[r].push(x);
        fill(cells, k + 1, alphabet, m, rows, out);
        rows[r].pop();
    }
}

pub fn enumerate_king(mu: &Partition, m: usize) -> Result<Vec<KingTableau>> {
    KingTableau::enumerate(mu, m)
}

pub fn king_weight(t: &KingTableau) -> WeightVector {
    t.weight()
}

impl fmt::Display for KingTableau {
    /// One row per line; the empty tableau prints as `.`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows.is_empty() {
            return write!(f, ".");
        }
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let line: Vec<String> = row.iter().map(ToString::to_string).collect();
            write!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for KingTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| r.iter().map(ToString::to_string).collect::<Vec<_>>().join(","))
            .collect();
        write!(f, "King[m={}]({})", self.m, rows.join("/"))
    }
}

impl KingTableau {
    /// Parses the line-per-row text form against an ambient rank `m`.
    pub fn parse(s: &str, m: usize) -> Result<Self> {
        let mut rows = Vec::new();
        for line in s.lines() {
            let line = line.trim();
            if line.is_empty() || line == "." {
                continue;
            }
            let row = line
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|t| !t.is_empty())
                .map(str::parse)
                .collect::<Result<Vec<BarredLetter>>>()?;
            rows.push(row);
        }
        KingTableau::new(rows, m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::part;

    fn example() -> KingTableau {
        KingTableau::from_values(&[&[2, -2], &[3, 3], &[-3, 4], &[4, -4]], 4).unwrap()
    }

    #[test]
    fn alphabet_order() {
        let letters: Vec<BarredLetter> = [1, -1, 2, -2, 3].iter().map(|&v| BarredLetter::new(v).unwrap()).collect();
        assert!(letters.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(BarredLetter::barred(2).rank(), 4);
        assert_eq!(BarredLetter::plain(2).rank(), 3);
        assert_eq!("3b".parse::<BarredLetter>().unwrap(), BarredLetter::barred(3));
        assert!("0".parse::<BarredLetter>().is_err());
    }

    #[test]
    fn small_enumerations() {
        let one = enumerate_king(&part(&[1]), 1).unwrap();
        assert_eq!(one.len(), 2);
        assert_eq!(one[0].to_string(), "1");
        assert_eq!(one[1].to_string(), "1b");
        assert_eq!(enumerate_king(&part(&[1, 1]), 2).unwrap().len(), 5);
        assert_eq!(enumerate_king(&Partition::empty(), 3).unwrap().len(), 1);
        assert!(matches!(
            enumerate_king(&part(&[1, 1]), 1),
            Err(Error::ShapeTooTall { .. })
        ));
    }

    #[test]
    fn example_tableau_is_enumerated_and_weighted() {
        let t = example();
        assert_eq!(king_weight(&t), WeightVector(vec![0, 0, 1, 1]));
        let all = enumerate_king(&part(&[2, 2, 2, 2]), 4).unwrap();
        assert!(all.contains(&t));
        assert!(all.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn validation_rejects_symplectic_violations() {
        assert!(KingTableau::from_values(&[&[1], &[1]], 2).is_err());
        assert!(KingTableau::from_values(&[&[1], &[-1]], 2).is_err());
        assert!(KingTableau::from_values(&[&[1], &[2]], 2).is_ok());
        assert!(KingTableau::from_values(&[&[3]], 2).is_err());
        assert!(KingTableau::from_values(&[&[-1, 1]], 1).is_err());
    }

    #[test]
    fn restriction_heights_and_letter_strips() {
        for m in 1..=3 {
            for mu in Partition::up_to_size(4, m) {
                for t in enumerate_king(&mu, m).unwrap() {
                    for i in 1..=m as u32 {
                        assert!(t.restrict(BarredLetter::barred(i)).rows().len() <= i as usize);
                        for x in [BarredLetter::plain(i), BarredLetter::barred(i)] {
                            let inner = t.restrict(x).shape();
                            let below = if x.rank() == 1 {
                                Partition::empty()
                            } else {
                                let prev = if x.is_barred() {
                                    BarredLetter::plain(i)
                                } else {
                                    BarredLetter::barred(i - 1)
                                };
                                t.restrict(prev).shape()
                            };
                            assert!(crate::partition::is_horizontal_strip(&below, &inner));
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn text_round_trip() {
        let t = example();
        assert_eq!(t.to_string(), "2 2b\n3 3\n3b 4\n4 4b");
        assert_eq!(KingTableau::parse(&t.to_string(), 4).unwrap(), t);
        assert_eq!(KingTableau::parse(".", 2).unwrap(), KingTableau::empty(2));
    }
}
