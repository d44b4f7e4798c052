//! Exact symplectic characters as Laurent polynomials in `x_1..x_m`.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Sub};

use crate::crystal::{string_length, Crystal, SkewSsotCrystal};
use crate::error::{Error, Result};
use crate::king::KingTableau;
use crate::oscillating::{OscStrip, Ssot};
use crate::partition::{is_horizontal_strip, Partition};
use crate::tableau::Ssyt;
use crate::weight::WeightVector;

/// Integer combination of monomials `x^w`, keyed by exponent vectors.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct LaurentCharacter {
    m: usize,
    terms: BTreeMap<WeightVector, i64>,
}

impl LaurentCharacter {
    pub fn zero(m: usize) -> Self {
        LaurentCharacter {
            m,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(m: usize) -> Self {
        Self::monomial(WeightVector::zero(m), 1)
    }

    pub fn monomial(w: WeightVector, c: i64) -> Self {
        let mut out = Self::zero(w.rank());
        out.add_term(w, c);
        out
    }

    /// Sum of `x^w` over the given exponents, with multiplicity.
    pub fn from_weights<I: IntoIterator<Item = WeightVector>>(m: usize, weights: I) -> Self {
        let mut out = Self::zero(m);
        for w in weights {
            out.add_term(w, 1);
        }
        out
    }

    pub fn add_term(&mut self, w: WeightVector, c: i64) {
        assert_eq!(w.rank(), self.m, "rank mismatch");
        if c == 0 {
            return;
        }
        match self.terms.entry(w) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if *e.get() == 0 {
                    e.remove();
                }
            }
            Entry::Vacant(e) => {
                e.insert(c);
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.m
    }

    pub fn terms(&self) -> &BTreeMap<WeightVector, i64> {
        &self.terms
    }

    pub fn coefficient(&self, w: &WeightVector) -> i64 {
        self.terms.get(w).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Value at `x = 1`.
    pub fn dimension(&self) -> i64 {
        self.terms.values().sum()
    }

    pub fn scale(&self, c: i64) -> Self {
        let mut out = Self::zero(self.m);
        if c != 0 {
            out.terms = self.terms.iter().map(|(w, &v)| (w.clone(), v * c)).collect();
        }
        out
    }

    /// Invariance under permuting the variables and inverting any of them.
    pub fn is_symmetric(&self) -> bool {
        self.terms.iter().all(|(w, &c)| {
            let mut d: Vec<i64> = w.0.iter().map(|x| x.abs()).collect();
            d.sort_unstable_by(|a, b| b.cmp(a));
            signed_permutations(&d).iter().all(|(v, _)| self.coefficient(v) == c)
        })
    }
}

impl Add for &LaurentCharacter {
    type Output = LaurentCharacter;

    fn add(self, rhs: &LaurentCharacter) -> LaurentCharacter {
        let mut out = self.clone();
        for (w, &c) in &rhs.terms {
            out.add_term(w.clone(), c);
        }
        out
    }
}

impl Sub for &LaurentCharacter {
    type Output = LaurentCharacter;

    fn sub(self, rhs: &LaurentCharacter) -> LaurentCharacter {
        let mut out = self.clone();
        for (w, &c) in &rhs.terms {
            out.add_term(w.clone(), -c);
        }
        out
    }
}

impl Mul for &LaurentCharacter {
    type Output = LaurentCharacter;

    fn mul(self, rhs: &LaurentCharacter) -> LaurentCharacter {
        assert_eq!(self.m, rhs.m, "rank mismatch");
        let mut acc: HashMap<WeightVector, i64> = HashMap::new();
        for (a, &ca) in &self.terms {
            for (b, &cb) in &rhs.terms {
                *acc.entry(a + b).or_insert(0) += ca * cb;
            }
        }
        LaurentCharacter {
            m: self.m,
            terms: acc.into_iter().filter(|&(_, c)| c != 0).collect(),
        }
    }
}

impl fmt::Display for LaurentCharacter {
    /// One `coeff : [w1,...,wm]` line per term, in increasing exponent order.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (w, c) in &self.terms {
            writeln!(f, "{c} : {w}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentCharacter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (w, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}*{w}")?;
        }
        write!(f, "}}")
    }
}

fn check_length(p: &Partition, m: usize) -> Result<()> {
    if p.len() > m {
        return Err(Error::ShapeTooTall { shape: p.clone(), m });
    }
    Ok(())
}

/// Sum of `x^{weight}` over King tableaux of shape `lambda`.
pub fn king_character(lambda: &Partition, m: usize) -> Result<LaurentCharacter> {
    check_length(lambda, m)?;
    Ok(LaurentCharacter::from_weights(
        m,
        KingTableau::enumerate(lambda, m)?.iter().map(KingTableau::weight),
    ))
}

/// Every signed permutation of `v` with its sign.
fn signed_permutations(v: &[i64]) -> Vec<(WeightVector, i64)> {
    let m = v.len();
    let mut out = Vec::new();
    let mut idx: Vec<usize> = (0..m).collect();
    permute(&mut idx, 0, 1, &mut |perm, sign| {
        for mask in 0..(1u32 << m) {
            let mut s = sign;
            let w: Vec<i64> = (0..m)
                .map(|j| {
                    let x = v[perm[j]];
                    if mask >> j & 1 == 1 {
                        s = -s;
                        -x
                    } else {
                        x
                    }
                })
                .collect();
            out.push((WeightVector(w), s));
        }
    });
    out
}

fn permute(idx: &mut Vec<usize>, k: usize, sign: i64, visit: &mut impl FnMut(&[usize], i64)) {
    if k == idx.len() {
        visit(idx, sign);
        return;
    }
    for j in k..idx.len() {
        idx.swap(k, j);
        permute(idx, k + 1, if j == k { sign } else { -sign }, visit);
        idx.swap(k, j);
    }
}

/// `sum over signed permutations w of sign(w) x^{w(v)}`.
fn alternant(v: &[i64]) -> LaurentCharacter {
    let mut out = LaurentCharacter::zero(v.len());
    for (w, s) in signed_permutations(v) {
        out.add_term(w, s);
    }
    out
}

/// Weyl character formula as an exact quotient of alternants.
pub fn weyl_character(lambda: &Partition, m: usize) -> Result<LaurentCharacter> {
    check_length(lambda, m)?;
    if m == 0 {
        return Ok(LaurentCharacter::one(0));
    }
    let shifted: Vec<i64> = (0..m).map(|i| (lambda.get(i) + m - i) as i64).collect();
    let rho: Vec<i64> = (0..m).map(|i| (m - i) as i64).collect();
    divide_exact(&alternant(&shifted), &alternant(&rho), lambda.get(0) as i64)
}

/// Exact division by lexicographic leading terms. Quotient exponents are bounded by `bound`.
fn divide_exact(num: &LaurentCharacter, den: &LaurentCharacter, bound: i64) -> Result<LaurentCharacter> {
    let (lead_w, &lead_c) = den
        .terms
        .iter()
        .next_back()
        .ok_or_else(|| Error::InexactDivision("division by zero".into()))?;
    let mut rem = num.clone();
    let mut quot = LaurentCharacter::zero(num.m);
    while let Some((w, &c)) = rem.terms.iter().next_back() {
        let q = w - lead_w;
        if c % lead_c != 0 || q.0.iter().any(|x| x.abs() > bound) {
            return Err(Error::InexactDivision(format!("leading term {c} x^{w} does not divide")));
        }
        let term = LaurentCharacter::monomial(q, c / lead_c);
        rem = &rem - &(&term * den);
        quot = &quot + &term;
    }
    Ok(quot)
}

/// Schur polynomial of shape `mu` in `x_1..x_m, x_1^{-1}..x_m^{-1}`; zero when `mu` has more than `2m` rows.
pub fn schur_eval(mu: &Partition, m: usize) -> LaurentCharacter {
    let weights = Ssyt::enumerate(mu, 2 * m as u32).into_iter().map(|t| {
        let mut w = vec![0i64; m];
        for &x in t.rows().iter().flatten() {
            let k = x as usize;
            if k <= m {
                w[k - 1] += 1;
            } else {
                w[k - m - 1] -= 1;
            }
        }
        WeightVector(w)
    });
    LaurentCharacter::from_weights(m, weights)
}

/// Exponent vector `(nu_1, ..., nu_m)` of the dominant monomial for `nu`.
fn top_monomial(nu: &Partition, m: usize) -> WeightVector {
    WeightVector((0..m).map(|i| nu.get(i) as i64).collect())
}

/// Multiplicities of irreducible characters in `f`, peeled off from the top.
pub fn decompose_sp(f: &LaurentCharacter) -> Result<BTreeMap<Partition, i64>> {
    let m = f.rank();
    let mut cache: HashMap<Partition, LaurentCharacter> = HashMap::new();
    let mut rem = f.clone();
    let mut out = BTreeMap::new();
    while !rem.is_zero() {
        let top = rem
            .terms
            .iter()
            .filter_map(|(w, &c)| {
                let dominant = w.0.windows(2).all(|p| p[0] >= p[1]) && w.0.last().is_none_or(|&x| x >= 0);
                dominant.then(|| (Partition::new(w.0.iter().map(|&x| x as usize).collect()).unwrap(), c))
            })
            .max_by(|a, b| a.0.cmp(&b.0));
        let Some((nu, c)) = top else {
            return Err(Error::NotSymmetric(format!("remainder {rem:?} has no dominant term")));
        };
        if !cache.contains_key(&nu) {
            cache.insert(nu.clone(), weyl_character(&nu, m)?);
        }
        let chi = &cache[&nu];
        debug_assert_eq!(chi.coefficient(&top_monomial(&nu, m)), 1);
        rem = &rem - &chi.scale(c);
        out.insert(nu, c);
    }
    Ok(out)
}

/// Reassembles `sum c_nu chi_nu`.
pub fn recompose_sp(parts: &BTreeMap<Partition, i64>, m: usize) -> Result<LaurentCharacter> {
    let mut out = LaurentCharacter::zero(m);
    for (nu, &c) in parts {
        out = &out + &weyl_character(nu, m)?.scale(c);
    }
    Ok(out)
}

/// Number of oscillating strips of size `ell` from the conjugate of `lambda` to the
/// conjugate of `nu` using at most `g` columns.
pub fn dual_pieri_count(lambda: &Partition, ell: usize, nu: &Partition, g: usize) -> usize {
    if lambda.len() > g || nu.len() > g {
        return 0;
    }
    let (inside, outside) = (lambda.conjugate(), nu.conjugate());
    OscStrip::all_from(&inside, g)
        .iter()
        .filter(|s| s.size() == ell && s.outside() == &outside)
        .count()
}

/// Number of `gamma` inside both `lambda` and `nu` with `lambda/gamma` and `nu/gamma`
/// horizontal strips of total size `k`; zero when `nu` has more than `m` rows.
pub fn sundaram_h_count(lambda: &Partition, k: usize, nu: &Partition, m: usize) -> usize {
    if nu.len() > m || lambda.len() > m {
        return 0;
    }
    let total = lambda.size() + nu.size();
    if total < k || !(total - k).is_multiple_of(2) {
        return 0;
    }
    let gsize = (total - k) / 2;
    Partition::all_of_size(gsize)
        .iter()
        .filter(|gamma| is_horizontal_strip(gamma, lambda) && is_horizontal_strip(gamma, nu))
        .count()
}

/// Counts for the skew tableau side of the product rule.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LhsCount {
    /// Highest weight for every index `i >= 1`.
    pub all: usize,
    /// Highest weight for `i = 1..m-1` only.
    pub below_rank: usize,
}

/// Skew oscillating tableaux from the conjugate of `lambda` to the conjugate of `nu`
/// with strip sizes the conjugate of `mu`, at most `m` columns, killed by raising.
pub fn conjecture_lhs(lambda: &Partition, mu: &Partition, nu: &Partition, m: usize) -> Result<LhsCount> {
    for p in [lambda, mu, nu] {
        check_length(p, m)?;
    }
    let strips = mu.get(0);
    let weight: Vec<usize> = mu.conjugate().parts().to_vec();
    let tabs = Ssot::enumerate(&lambda.conjugate(), &nu.conjugate(), strips, m, Some(&weight));
    let crystal = SkewSsotCrystal { m: strips.max(1), g: m };
    let mut count = LhsCount { all: 0, below_rank: 0 };
    for t in &tabs {
        let eps = (1..strips.max(m))
            .map(|i| {
                if i < crystal.rank() {
                    crystal.epsilon(t, i)
                } else {
                    Ok(0)
                }
            })
            .collect::<Result<Vec<_>>>()?;
        if eps.iter().all(|&e| e == 0) {
            count.all += 1;
        }
        if eps.iter().take(m.saturating_sub(1)).all(|&e| e == 0) {
            count.below_rank += 1;
        }
    }
    Ok(count)
}

/// Iterated-operator epsilon on a skew tableau, for cross-checking the closed form.
pub fn skew_epsilon_by_iteration(t: &Ssot, i: usize, strips: usize, g: usize) -> Result<usize> {
    string_length(&SkewSsotCrystal { m: strips, g }, t, i, crate::crystal::Direction::Raise)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Mode {
    Assert,
    Report,
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Assert => "ASSERT",
            Mode::Report => "REPORT",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjectureRow {
    pub nu: Partition,
    pub lhs: LhsCount,
    pub rhs: i64,
}

impl ConjectureRow {
    pub fn agrees(&self) -> bool {
        self.lhs.all as i64 == self.rhs
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjectureReport {
    pub lambda: Partition,
    pub mu: Partition,
    pub m: usize,
    pub mode: Mode,
    pub rows: Vec<ConjectureRow>,
}

impl ConjectureReport {
    /// False only for a disagreement in a case where equality is asserted.
    pub fn passes(&self) -> bool {
        self.mode == Mode::Report || self.rows.iter().all(ConjectureRow::agrees)
    }

    pub fn mismatches(&self) -> impl Iterator<Item = &ConjectureRow> {
        self.rows.iter().filter(|r| !r.agrees())
    }
}

impl fmt::Display for ConjectureReport {
    /// TSV with columns `nu lhs_count rhs_coeff status`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "# lambda={} mu={} m={} mode={}", self.lambda, self.mu, self.m, self.mode)?;
        writeln!(f, "nu\tlhs_count\trhs_coeff\tstatus")?;
        for r in &self.rows {
            let status = match (r.agrees(), self.mode) {
                (true, _) => "ok",
                (false, Mode::Assert) => "FAIL",
                (false, Mode::Report) => "differs",
            };
            write!(f, "{}\t{}\t{}\t{status}", r.nu, r.lhs.all, r.rhs)?;
            if r.lhs.below_rank != r.lhs.all {
                write!(f, "\t(first m-1 indices only: {})", r.lhs.below_rank)?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Compares both sides of the product rule for every `nu` that could occur.
pub fn conjecture_verify(lambda: &Partition, mu: &Partition, m: usize) -> Result<ConjectureReport> {
    check_length(lambda, m)?;
    check_length(mu, m)?;
    let product = &king_character(lambda, m)? * &schur_eval(mu, m);
    let rhs = decompose_sp(&product)?;
    let mut nus: Vec<Partition> = Partition::up_to_size(lambda.size() + mu.size(), m);
    for nu in rhs.keys() {
        if !nus.contains(nu) {
            nus.push(nu.clone());
        }
    }
    nus.sort();
    let rows = nus
        .into_iter()
        .map(|nu| {
            let lhs = conjecture_lhs(lambda, mu, &nu, m)?;
            let rhs = rhs.get(&nu).copied().unwrap_or(0);
            Ok(ConjectureRow { nu, lhs, rhs })
        })
        .collect::<Result<Vec<_>>>()?;
    let mode = if mu.get(0) <= 3 || mu.len() == 1 { Mode::Assert } else { Mode::Report };
    Ok(ConjectureReport {
        lambda: lambda.clone(),
        mu: mu.clone(),
        m,
        mode,
        rows,
    })
}
