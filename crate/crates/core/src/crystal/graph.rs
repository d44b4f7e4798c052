use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt::Write as _;

use crate::crystal::{Crystal, Direction};
use crate::error::{Error, Result};
use crate::weight::WeightVector;

/// Finite crystal graph with vertices in canonical order.
#[derive(Clone, Debug)]
pub struct CrystalGraph<E> {
    indices: Vec<usize>,
    vertices: Vec<E>,
    weights: Vec<WeightVector>,
    lower: Vec<Vec<Option<usize>>>,
    raise: Vec<Vec<Option<usize>>>,
}

type Neighbours<E> = Vec<(Option<E>, Option<E>)>;

impl<E: Clone + Ord + std::fmt::Display> CrystalGraph<E> {
    /// Closure of `seeds` under raising and lowering for every index in `indices`.
    pub fn build<C>(crystal: &C, seeds: impl IntoIterator<Item = E>, indices: &[usize]) -> Result<Self>
    where
        C: Crystal<Elem = E>,
    {
        let mut seen: BTreeMap<E, Neighbours<E>> = BTreeMap::new();
        let mut queue: VecDeque<E> = VecDeque::new();
        let mut queued: BTreeSet<E> = BTreeSet::new();
        for s in seeds {
            if queued.insert(s.clone()) {
                queue.push_back(s);
            }
        }
        while let Some(x) = queue.pop_front() {
            let mut nb = Vec::with_capacity(indices.len());
            for &i in indices {
                let down = crystal.lower(&x, i)?;
                let up = crystal.raise(&x, i)?;
                for y in down.iter().chain(up.iter()) {
                    if queued.insert(y.clone()) {
                        queue.push_back(y.clone());
                    }
                }
                nb.push((down, up));
            }
            seen.insert(x, nb);
        }
        let vertices: Vec<E> = seen.keys().cloned().collect();
        let pos = |y: &E| vertices.binary_search(y).expect("closed under operators");
        let mut lower = vec![vec![None; vertices.len()]; indices.len()];
        let mut raise = vec![vec![None; vertices.len()]; indices.len()];
        for (v, nb) in seen.values().enumerate() {
            for (slot, (down, up)) in nb.iter().enumerate() {
                lower[slot][v] = down.as_ref().map(pos);
                raise[slot][v] = up.as_ref().map(pos);
            }
        }
        let weights = vertices.iter().map(|x| crystal.weight(x)).collect::<Result<Vec<_>>>()?;
        let g = CrystalGraph {
            indices: indices.to_vec(),
            vertices,
            weights,
            lower,
            raise,
        };
        g.check_consistency(crystal.rank())?;
        Ok(g)
    }

    fn check_consistency(&self, rank: usize) -> Result<()> {
        for (slot, &i) in self.indices.iter().enumerate() {
            let root = WeightVector::simple_root(rank, i);
            for v in 0..self.len() {
                if let Some(w) = self.lower[slot][v] {
                    if self.raise[slot][w] != Some(v) {
                        return Err(self.inconsistent(v, i, "raising does not undo lowering"));
                    }
                    if &self.weights[w] + &root != self.weights[v] {
                        return Err(self.inconsistent(v, i, "lowering does not subtract the simple root"));
                    }
                }
                if let Some(u) = self.raise[slot][v] {
                    if self.lower[slot][u] != Some(v) {
                        return Err(self.inconsistent(v, i, "lowering does not undo raising"));
                    }
                }
            }
        }
        Ok(())
    }

    fn inconsistent(&self, v: usize, i: usize, what: &str) -> Error {
        Error::InconsistentCrystal(format!("{what} at {} for index {i}", self.label(v)))
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn vertices(&self) -> &[E] {
        &self.vertices
    }

    pub fn vertex(&self, v: usize) -> &E {
        &self.vertices[v]
    }

    pub fn position(&self, x: &E) -> Option<usize> {
        self.vertices.binary_search(x).ok()
    }

    pub fn weight(&self, v: usize) -> &WeightVector {
        &self.weights[v]
    }

    fn slot(&self, i: usize) -> usize {
        self.indices
            .iter()
            .position(|&j| j == i)
            .unwrap_or_else(|| panic!("index {i} is not part of this graph"))
    }

    pub fn step(&self, v: usize, i: usize, dir: Direction) -> Option<usize> {
        let s = self.slot(i);
        match dir {
            Direction::Raise => self.raise[s][v],
            Direction::Lower => self.lower[s][v],
        }
    }

    pub fn e(&self, v: usize, i: usize) -> Option<usize> {
        self.step(v, i, Direction::Raise)
    }

    pub fn f(&self, v: usize, i: usize) -> Option<usize> {
        self.step(v, i, Direction::Lower)
    }

    fn run(&self, mut v: usize, i: usize, dir: Direction) -> usize {
        let mut k = 0;
        while let Some(w) = self.step(v, i, dir) {
            v = w;
            k += 1;
        }
        k
    }

    pub fn epsilon(&self, v: usize, i: usize) -> usize {
        self.run(v, i, Direction::Raise)
    }

    pub fn phi(&self, v: usize, i: usize) -> usize {
        self.run(v, i, Direction::Lower)
    }

    /// Edges `(source, index, target)` with `f_index(source) = target`.
    pub fn edges(&self) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        for v in 0..self.len() {
            for (slot, &i) in self.indices.iter().enumerate() {
                if let Some(w) = self.lower[slot][v] {
                    out.push((v, i, w));
                }
            }
        }
        out
    }

    /// Vertices killed by every raising operator.
    pub fn highest(&self) -> Vec<usize> {
        (0..self.len())
            .filter(|&v| self.raise.iter().all(|r| r[v].is_none()))
            .collect()
    }

    /// Highest weights with multiplicities.
    pub fn decompose(&self) -> BTreeMap<WeightVector, usize> {
        let mut out = BTreeMap::new();
        for v in self.highest() {
            *out.entry(self.weights[v].clone()).or_insert(0) += 1;
        }
        out
    }

    /// Connected components as sorted vertex lists, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut parent: Vec<usize> = (0..self.len()).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for (v, _, w) in self.edges() {
            let (a, b) = (find(&mut parent, v), find(&mut parent, w));
            if a != b {
                parent[a.max(b)] = a.min(b);
            }
        }
        let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for v in 0..self.len() {
            let r = find(&mut parent, v);
            groups.entry(r).or_default().push(v);
        }
        groups.into_values().collect()
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Multiset of weights.
    pub fn character(&self) -> BTreeMap<WeightVector, i64> {
        let mut out = BTreeMap::new();
        for w in &self.weights {
            *out.entry(w.clone()).or_insert(0) += 1;
        }
        out
    }

    /// Single-line text form of a vertex.
    pub fn label(&self, v: usize) -> String {
        self.vertices[v].to_string().replace('\n', " / ")
    }

    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph crystal {\n");
        for v in 0..self.len() {
            let _ = writeln!(s, "  v{v} [label=\"{}\"];", self.label(v).replace('"', "\\\""));
        }
        for (v, i, w) in self.edges() {
            let _ = writeln!(s, "  v{v} -> v{w} [label=\"{i}\"];");
        }
        s.push_str("}\n");
        s
    }

    /// One `<src> -i-> <dst>` line per edge.
    pub fn to_adjacency(&self) -> String {
        let mut s = String::new();
        for (v, i, w) in self.edges() {
            let _ = writeln!(s, "{} -{i}-> {}", self.label(v), self.label(w));
        }
        s
    }
}
