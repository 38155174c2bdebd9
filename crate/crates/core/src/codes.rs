//! Linear codes over a finite field: duals, puncturing, column scaling,
//! minimum distance and the kernel queries behind codeword supports.
//!
//! A word of `C^⊥` supported inside a coordinate set `S` is a kernel vector
//! of the columns of a generator of `C` restricted to `S`. Most of the
//! heavier searches in this crate reduce to that observation and to
//! [`scan_subsets`], which walks column subsets in lexicographic order with
//! an incrementally maintained echelon basis.

use std::fmt::Write as _;
use std::sync::Arc;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geometry::ProjPoint;
use crate::gf::{Elem, Field};
use crate::linalg::{self, parse_numbers, Echelon, Matrix};

/// Default cap on codewords enumerated by exhaustive distance computation.
pub const DEFAULT_MAX_CODEWORDS: u64 = 1 << 24;
/// Default cap on column subsets visited by support searches.
pub const DEFAULT_MAX_SUBSETS: u64 = 1 << 26;

/// Explicit work limits. Nothing in the crate truncates silently: when a
/// computation would exceed a budget it fails with
/// [`Error::BudgetExceeded`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budget {
    pub max_codewords: u64,
    pub max_subsets: u64,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_codewords: DEFAULT_MAX_CODEWORDS, max_subsets: DEFAULT_MAX_SUBSETS }
    }
}

impl Budget {
    pub fn check_subsets(&self, what: &str, needed: u128) -> Result<()> {
        if needed > self.max_subsets as u128 {
            return Err(Error::BudgetExceeded { what: what.into(), needed, budget: self.max_subsets });
        }
        Ok(())
    }
}

/// `n choose k`, saturating at `u128::MAX`.
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r: u128 = 1;
    for i in 0..k {
        r = r.saturating_mul((n - i) as u128) / (i as u128 + 1);
    }
    r
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DistanceStrategy {
    Exhaustive,
    SupportSearch,
}

/// Outcome of a distance computation limited to weights `<= bound`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Distance {
    Exact(usize),
    /// No nonzero word of weight `<= bound` exists.
    Exceeds(usize),
}

impl Distance {
    pub fn exact(self) -> Option<usize> {
        match self {
            Distance::Exact(d) => Some(d),
            Distance::Exceeds(_) => None,
        }
    }
}

/// Words of a code whose support lies inside a coordinate set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SupportedWords {
    pub dimension: usize,
    /// Basis rows, restricted to the coordinates of the set (in its order).
    pub basis: Matrix,
    /// A word whose support is exactly the set, restricted likewise.
    pub witness: Option<Vec<Elem>>,
}

/// Summary of a candidate support set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SupportReport {
    pub support: Vec<usize>,
    pub weight: usize,
    pub kernel_dim: usize,
    pub has_full_support_word: bool,
}

/// A linear code given by a full-rank generator matrix whose columns are
/// labelled with evaluation points.
#[derive(Clone, Debug)]
pub struct LinearCode {
    field: Arc<Field>,
    generator: Matrix,
    labels: Vec<ProjPoint>,
}

impl LinearCode {
    /// Requires `generator` to have full row rank and one distinct label per column.
    pub fn new(field: Arc<Field>, generator: Matrix, labels: Vec<ProjPoint>) -> Result<LinearCode> {
        check_labels(&generator, &labels)?;
        let r = linalg::rank(&field, &generator);
        if r != generator.rows() {
            return Err(Error::params(format!("generator has {} rows but rank {r}", generator.rows())));
        }
        Ok(LinearCode { field, generator, labels })
    }

    /// Keeps the rows of `spanning` that are independent of the earlier ones.
    pub fn from_spanning(field: Arc<Field>, spanning: &Matrix, labels: Vec<ProjPoint>) -> Result<LinearCode> {
        check_labels(spanning, &labels)?;
        let mut ech = Echelon::new(spanning.cols());
        let keep: Vec<usize> = (0..spanning.rows()).filter(|&r| ech.push(&field, spanning.row(r))).collect();
        let generator = spanning.select_rows(&keep);
        Ok(LinearCode { field, generator, labels })
    }

    /// The code `F^n` with the identity generator.
    pub fn full_space(field: Arc<Field>, labels: Vec<ProjPoint>) -> LinearCode {
        let generator = Matrix::identity(labels.len());
        LinearCode { field, generator, labels }
    }

    pub fn field(&self) -> &Arc<Field> {
        &self.field
    }

    pub fn generator(&self) -> &Matrix {
        &self.generator
    }

    pub fn labels(&self) -> &[ProjPoint] {
        &self.labels
    }

    pub fn length(&self) -> usize {
        self.generator.cols()
    }

    pub fn dimension(&self) -> usize {
        self.generator.rows()
    }

    /// The dual code, generated by a kernel basis of the generator.
    pub fn dual(&self) -> LinearCode {
        let n = self.length();
        let generator = if self.dimension() == 0 {
            Matrix::identity(n)
        } else {
            linalg::kernel_from_rref(&self.field, &linalg::rref(&self.field, &self.generator))
        };
        LinearCode { field: self.field.clone(), generator, labels: self.labels.clone() }
    }

    /// Same row space.
    pub fn same_code(&self, other: &LinearCode) -> Result<bool> {
        linalg::row_space_equal(&self.field, &self.generator, &other.generator)
    }

    /// Projection onto the coordinates outside `h`.
    pub fn puncture(&self, h: &[usize]) -> Result<LinearCode> {
        let n = self.length();
        let mut removed = vec![false; n];
        for &i in h {
            if i >= n {
                return Err(Error::params(format!("coordinate {i} out of range for length {n}")));
            }
            removed[i] = true;
        }
        let keep: Vec<usize> = (0..n).filter(|&i| !removed[i]).collect();
        if keep.is_empty() {
            return Err(Error::params("cannot puncture every coordinate"));
        }
        let labels = keep.iter().map(|&i| self.labels[i]).collect();
        LinearCode::from_spanning(self.field.clone(), &self.generator.select_columns(&keep), labels)
    }

    /// The code `vC`, multiplying column `i` by `v[i]`.
    pub fn scale_columns(&self, v: &[Elem]) -> Result<LinearCode> {
        if v.len() != self.length() {
            return Err(Error::DimensionMismatch(format!("{} scalars for length {}", v.len(), self.length())));
        }
        if v.iter().any(|e| e.is_zero()) {
            return Err(Error::params("scaling vector has a zero entry"));
        }
        let mut g = self.generator.clone();
        for r in 0..g.rows() {
            for (c, &s) in v.iter().enumerate() {
                g.set(r, c, self.field.mul(g.get(r, c), s));
            }
        }
        Ok(LinearCode { field: self.field.clone(), generator: g, labels: self.labels.clone() })
    }

    /// Words of this code with support inside `s`: the dimension is
    /// `k - rank(G restricted to the complement of s)`.
    pub fn words_supported_within(&self, s: &[usize]) -> Result<SupportedWords> {
        let n = self.length();
        let set = coordinate_set(s, n)?;
        let k = self.dimension();
        if s.is_empty() || k == 0 {
            return Ok(SupportedWords { dimension: 0, basis: Matrix::zeros(0, s.len()), witness: None });
        }
        let outside: Vec<usize> = (0..n).filter(|i| !set[*i]).collect();
        // Coefficient vectors u with u G_out = 0.
        let coeffs = if outside.is_empty() {
            Matrix::identity(k)
        } else {
            let gt = self.generator.select_columns(&outside).transpose();
            linalg::kernel_from_rref(&self.field, &linalg::rref(&self.field, &gt))
        };
        let words = if coeffs.rows() == 0 {
            Matrix::zeros(0, s.len())
        } else {
            coeffs.mul(&self.field, &self.generator.select_columns(s))?
        };
        let witness = full_support_witness(&self.field, &words)?;
        Ok(SupportedWords { dimension: words.rows(), basis: words, witness })
    }

    /// Words of the dual code with support inside `s`, computed from this
    /// code's generator directly as the kernel of its `s` columns.
    pub fn dual_words_supported_within(&self, s: &[usize]) -> Result<SupportedWords> {
        coordinate_set(s, self.length())?;
        if s.is_empty() {
            return Ok(SupportedWords { dimension: 0, basis: Matrix::zeros(0, 0), witness: None });
        }
        let basis = if self.dimension() == 0 {
            Matrix::identity(s.len())
        } else {
            let sub = self.generator.select_columns(s);
            linalg::kernel_from_rref(&self.field, &linalg::rref(&self.field, &sub))
        };
        let witness = full_support_witness(&self.field, &basis)?;
        Ok(SupportedWords { dimension: basis.rows(), basis, witness })
    }

    /// [`SupportReport`] for words of the dual code inside `s`.
    pub fn dual_support_report(&self, s: &[usize]) -> Result<SupportReport> {
        let w = self.dual_words_supported_within(s)?;
        let mut support = s.to_vec();
        support.sort_unstable();
        Ok(SupportReport {
            weight: s.len(),
            support,
            kernel_dim: w.dimension,
            has_full_support_word: w.witness.is_some(),
        })
    }

    /// Number of codewords of each weight `0..=n`, by full enumeration.
    pub fn weight_distribution(&self, budget: &Budget) -> Result<Vec<u64>> {
        let k = self.dimension() as u32;
        let q = self.field.order() as u64;
        let total = (q as u128).checked_pow(k).unwrap_or(u128::MAX);
        if total > budget.max_codewords as u128 {
            return Err(Error::BudgetExceeded {
                what: "codeword enumeration".into(),
                needed: total,
                budget: budget.max_codewords,
            });
        }
        let mut dist = vec![0u64; self.length() + 1];
        dist[0] = 1;
        for (w, c) in projective_weights(&self.field, &self.generator).into_iter().enumerate() {
            dist[w] += c * (q - 1);
        }
        Ok(dist)
    }

    /// Minimum distance, searching weights up to `bound`.
    pub fn min_distance(&self, strategy: DistanceStrategy, bound: usize, budget: &Budget) -> Result<Distance> {
        if self.dimension() == 0 {
            return Err(Error::params("the zero code has no minimum distance"));
        }
        match strategy {
            DistanceStrategy::Exhaustive => {
                let dist = self.weight_distribution(budget)?;
                let d = (1..dist.len()).find(|&w| dist[w] > 0).expect("nonzero code has a nonzero word");
                Ok(if d <= bound { Distance::Exact(d) } else { Distance::Exceeds(bound) })
            }
            DistanceStrategy::SupportSearch => {
                // Supports of words of C are the dependent column sets of a
                // generator of the dual, the smallest one giving d(C).
                let parity = self.dual();
                let columns = columns_of(&parity.generator, self.length());
                let mut spent: u128 = 0;
                for w in 1..=bound.min(self.length()) {
                    spent += binomial(self.length() as u64, w as u64);
                    budget.check_subsets("support search", spent)?;
                    if first_dependent_subset(&self.field, &columns, w).is_some() {
                        return Ok(Distance::Exact(w));
                    }
                }
                Ok(Distance::Exceeds(bound))
            }
        }
    }

    /// Text form: the generator matrix followed by a `labels n` block of
    /// point coordinate triples.
    pub fn to_text(&self) -> String {
        let mut s = self.generator.to_text(&self.field);
        writeln!(s, "labels {}", self.labels.len()).unwrap();
        for p in &self.labels {
            writeln!(s, "{} {} {}", p.x, p.y, p.z).unwrap();
        }
        s
    }

    pub fn parse_text(text: &str, field: Arc<Field>) -> Result<LinearCode> {
        let (generator, consumed) = Matrix::parse_text(text, &field)?;
        let mut lines = text.lines().skip(consumed).filter(|l| !l.trim().is_empty());
        let header = lines.next().ok_or_else(|| Error::Parse("missing labels block".into()))?;
        let count = header
            .strip_prefix("labels")
            .and_then(|t| t.trim().parse::<usize>().ok())
            .ok_or_else(|| Error::Parse(format!("bad labels header {header:?}")))?;
        let mut labels = Vec::with_capacity(count);
        for _ in 0..count {
            let line = lines.next().ok_or_else(|| Error::Parse("labels block too short".into()))?;
            let v = parse_numbers(line)?;
            if v.len() != 3 {
                return Err(Error::Parse(format!("label needs 3 coordinates: {line:?}")));
            }
            let e = |i: usize| field.element(v[i] as u32);
            labels.push(ProjPoint::new(&field, e(0)?, e(1)?, e(2)?)?);
        }
        LinearCode::new(field, generator, labels)
    }
}

fn check_labels(generator: &Matrix, labels: &[ProjPoint]) -> Result<()> {
    if labels.len() != generator.cols() {
        return Err(Error::DimensionMismatch(format!("{} labels for {} columns", labels.len(), generator.cols())));
    }
    let mut sorted = labels.to_vec();
    sorted.sort();
    if sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::params("coordinate labels must be distinct"));
    }
    Ok(())
}

fn coordinate_set(s: &[usize], n: usize) -> Result<Vec<bool>> {
    let mut set = vec![false; n];
    for &i in s {
        if i >= n || set[i] {
            return Err(Error::params(format!("coordinate {i} is out of range or repeated")));
        }
        set[i] = true;
    }
    Ok(set)
}

/// Column vectors of a matrix with `n` columns (empty vectors when it has no rows).
pub fn columns_of(m: &Matrix, n: usize) -> Vec<Vec<Elem>> {
    (0..n).map(|c| if m.rows() == 0 { Vec::new() } else { m.column(c) }).collect()
}

/// Count of nonzero projective codewords (leading coefficient 1) per weight.
fn projective_weights(field: &Field, g: &Matrix) -> Vec<u64> {
    let (k, n) = (g.rows(), g.cols());
    let mut counts = vec![0u64; n + 1];
    if k == 0 {
        return counts;
    }
    let rows: Vec<Vec<Elem>> = g.row_vecs();
    // Leading coefficient sits on row `lead`; earlier rows have coefficient 0.
    let per_lead: Vec<Vec<u64>> = (0..k)
        .into_par_iter()
        .map(|lead| {
            let mut local = vec![0u64; n + 1];
            let mut word = rows[lead].clone();
            enumerate_tail(field, &rows[lead + 1..], &mut word, &mut local);
            local
        })
        .collect();
    for l in per_lead {
        for (c, v) in counts.iter_mut().zip(l) {
            *c += v;
        }
    }
    counts
}

fn enumerate_tail(field: &Field, rows: &[Vec<Elem>], word: &mut Vec<Elem>, counts: &mut [u64]) {
    let Some((first, rest)) = rows.split_first() else {
        counts[word.iter().filter(|e| !e.is_zero()).count()] += 1;
        return;
    };
    let saved = word.clone();
    for c in field.elements() {
        if !c.is_zero() {
            for (w, (&s, &g)) in word.iter_mut().zip(saved.iter().zip(first)) {
                *w = field.add(s, field.mul(c, g));
            }
        } else {
            word.copy_from_slice(&saved);
        }
        enumerate_tail(field, rest, word, counts);
    }
    word.copy_from_slice(&saved);
}

/// A vector in the row space of `basis` that is nonzero in every
/// coordinate, if one exists.
///
/// Basis rows are folded in one at a time with a multiplier avoiding the at
/// most one bad value per coordinate; when the field is too small for that
/// to be guaranteed and it fails, small spaces are scanned exhaustively.
pub fn full_support_witness(field: &Field, basis: &Matrix) -> Result<Option<Vec<Elem>>> {
    let (k, n) = (basis.rows(), basis.cols());
    if k == 0 || n == 0 {
        return Ok(None);
    }
    if (0..n).any(|c| (0..k).all(|r| basis.get(r, c).is_zero())) {
        return Ok(None);
    }
    let mut v = vec![Elem::ZERO; n];
    let mut stuck = false;
    for r in 0..k {
        let b = basis.row(r);
        let chosen = field.elements().find(|&lam| {
            v.iter().zip(b).all(|(&x, &y)| {
                let nz_before = !x.is_zero() || !y.is_zero();
                !nz_before || !field.add(x, field.mul(lam, y)).is_zero()
            })
        });
        match chosen {
            Some(lam) => {
                for (x, &y) in v.iter_mut().zip(b) {
                    *x = field.add(*x, field.mul(lam, y));
                }
            }
            None => {
                stuck = true;
                break;
            }
        }
    }
    if !stuck {
        return Ok(Some(v));
    }
    let q = field.order() as u128;
    let total = q.checked_pow(k as u32).unwrap_or(u128::MAX);
    const LIMIT: u128 = 1 << 22;
    if total > LIMIT {
        return Err(Error::BudgetExceeded { what: "full-support witness scan".into(), needed: total, budget: LIMIT as u64 });
    }
    let rows = basis.row_vecs();
    let mut coeffs = vec![0u32; k];
    for _ in 0..total {
        let mut w = vec![Elem::ZERO; n];
        for (r, &c) in coeffs.iter().enumerate() {
            let c = field.element(c)?;
            for (x, &y) in w.iter_mut().zip(&rows[r]) {
                *x = field.add(*x, field.mul(c, y));
            }
        }
        if w.iter().all(|e| !e.is_zero()) {
            return Ok(Some(w));
        }
        for c in coeffs.iter_mut() {
            *c += 1;
            if *c < field.order() {
                break;
            }
            *c = 0;
        }
    }
    Ok(None)
}

/// Visits every `w`-subset of `0..columns.len()` in lexicographic order,
/// calling `visit(subset, dependent)` where `dependent` tells whether the
/// chosen columns are linearly dependent. Returns the values produced, in
/// subset order. Work is split over the first element of the subset.
pub fn scan_subsets<T, F>(field: &Field, columns: &[Vec<Elem>], w: usize, visit: F) -> Vec<T>
where
    T: Send,
    F: Fn(&[usize], bool) -> Option<T> + Sync,
{
    let n = columns.len();
    if w == 0 || w > n {
        return Vec::new();
    }
    let len = columns[0].len();
    (0..=n - w)
        .into_par_iter()
        .map(|first| {
            let mut out = Vec::new();
            let mut ech = Echelon::new(len);
            let mut chosen = vec![first];
            ech.push(field, &columns[first]);
            dfs(field, columns, w, &mut chosen, &mut ech, &mut |s, dep| {
                if let Some(t) = visit(s, dep) {
                    out.push(t);
                }
                false
            });
            out
        })
        .collect::<Vec<_>>()
        .into_iter()
        .flatten()
        .collect()
}

/// The lexicographically first dependent `w`-subset of columns.
pub fn first_dependent_subset(field: &Field, columns: &[Vec<Elem>], w: usize) -> Option<Vec<usize>> {
    let n = columns.len();
    if w == 0 || w > n {
        return None;
    }
    let len = columns[0].len();
    (0..=n - w).into_par_iter().find_map_first(|first| {
        let mut ech = Echelon::new(len);
        let mut chosen = vec![first];
        ech.push(field, &columns[first]);
        let mut found = None;
        dfs(field, columns, w, &mut chosen, &mut ech, &mut |s, dep| {
            if dep {
                found = Some(s.to_vec());
            }
            dep
        });
        found
    })
}

// Returns true when `leaf` asked to stop.
fn dfs(
    field: &Field,
    columns: &[Vec<Elem>],
    w: usize,
    chosen: &mut Vec<usize>,
    ech: &mut Echelon,
    leaf: &mut dyn FnMut(&[usize], bool) -> bool,
) -> bool {
    if chosen.len() == w {
        return leaf(chosen, ech.is_dependent());
    }
    let n = columns.len();
    let start = chosen.last().unwrap() + 1;
    let remaining = w - chosen.len();
    for i in start..=n - remaining {
        chosen.push(i);
        ech.push(field, &columns[i]);
        let stop = dfs(field, columns, w, chosen, ech, leaf);
        ech.pop();
        chosen.pop();
        if stop {
            return true;
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn labels(field: &Field, n: usize) -> Vec<ProjPoint> {
        let mut pts = Vec::new();
        for x in field.elements() {
            for y in field.elements() {
                for z in field.elements() {
                    if let Ok(p) = ProjPoint::new(field, x, y, z) {
                        if !pts.contains(&p) {
                            pts.push(p);
                        }
                    }
                }
            }
        }
        pts.truncate(n);
        pts
    }

    fn repetition(field: Arc<Field>, n: usize) -> LinearCode {
        let g = Matrix::new(1, n, vec![Elem::ONE; n]).unwrap();
        let l = labels(&field, n);
        LinearCode::new(field, g, l).unwrap()
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(27, 6), 296_010);
        assert_eq!(binomial(3, 5), 0);
        assert_eq!(binomial(50, 3), 19_600);
    }

    #[test]
    fn dual_of_repetition_and_full_space() {
        let f = Arc::new(Field::new(2, 2).unwrap());
        let rep = repetition(f.clone(), 5);
        let d = rep.dual();
        assert_eq!(d.dimension(), 4);
        assert!(d.dual().same_code(&rep).unwrap());
        let full = LinearCode::full_space(f.clone(), labels(&f, 4));
        assert_eq!(full.dual().dimension(), 0);
    }

    #[test]
    fn repetition_distance_both_strategies() {
        let f = Arc::new(Field::new(3, 1).unwrap());
        let rep = repetition(f, 6);
        let b = Budget::default();
        assert_eq!(rep.min_distance(DistanceStrategy::Exhaustive, 6, &b).unwrap(), Distance::Exact(6));
        assert_eq!(rep.min_distance(DistanceStrategy::SupportSearch, 6, &b).unwrap(), Distance::Exact(6));
        assert_eq!(rep.min_distance(DistanceStrategy::SupportSearch, 4, &b).unwrap(), Distance::Exceeds(4));
        assert_eq!(rep.dual().min_distance(DistanceStrategy::SupportSearch, 6, &b).unwrap(), Distance::Exact(2));
    }

    #[test]
    fn budget_is_enforced() {
        let f = Arc::new(Field::new(3, 1).unwrap());
        let rep = repetition(f, 6);
        let tiny = Budget { max_codewords: 2, max_subsets: 3 };
        assert!(matches!(rep.weight_distribution(&tiny), Err(Error::BudgetExceeded { .. })));
        assert!(matches!(
            rep.min_distance(DistanceStrategy::SupportSearch, 6, &tiny),
            Err(Error::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn puncture_repetition() {
        let f = Arc::new(Field::new(2, 1).unwrap());
        let rep = repetition(f.clone(), 5);
        let p = rep.puncture(&[2]).unwrap();
        assert_eq!(p.length(), 4);
        assert!(p.same_code(&repetition(f, 4)).unwrap());
        assert!(rep.puncture(&[0, 1, 2, 3, 4]).is_err());
        assert!(rep.puncture(&[]).unwrap().same_code(&rep).unwrap());
    }

    #[test]
    fn supported_words_of_sum_zero_code() {
        let f = Arc::new(Field::new(2, 2).unwrap());
        let rep = repetition(f, 5);
        let sz = rep.dual();
        let w = sz.words_supported_within(&[0, 3]).unwrap();
        assert_eq!(w.dimension, 1);
        assert!(w.witness.is_some());
        let via_kernel = rep.dual_words_supported_within(&[0, 3]).unwrap();
        assert_eq!(via_kernel.dimension, 1);
        assert_eq!(sz.words_supported_within(&[]).unwrap().dimension, 0);
        assert_eq!(sz.words_supported_within(&[0, 1, 2, 3, 4]).unwrap().dimension, 4);
    }

    #[test]
    fn witness_needs_every_coordinate() {
        let f = Field::new(2, 1).unwrap();
        // Over F_2 the span of (1,1,0) and (0,1,1) contains no word of full support.
        let b = Matrix::from_rows(3, &[vec![Elem::ONE, Elem::ONE, Elem::ZERO], vec![Elem::ZERO, Elem::ONE, Elem::ONE]]).unwrap();
        assert_eq!(full_support_witness(&f, &b).unwrap(), None);
        let b2 = Matrix::from_rows(2, &[vec![Elem::ONE, Elem::ZERO]]).unwrap();
        assert_eq!(full_support_witness(&f, &b2).unwrap(), None);
    }

    #[test]
    fn scan_finds_lex_first() {
        let f = Field::new(2, 1).unwrap();
        let o = Elem::ONE;
        let z = Elem::ZERO;
        let cols = vec![vec![o, z], vec![z, o], vec![o, z], vec![o, o]];
        assert_eq!(first_dependent_subset(&f, &cols, 2), Some(vec![0, 2]));
        let deps = scan_subsets(&f, &cols, 3, |s, dep| dep.then(|| s.to_vec()));
        assert_eq!(deps.len(), 4);
    }

    #[test]
    fn text_round_trip() {
        let f = Arc::new(Field::new(3, 2).unwrap());
        let rep = repetition(f.clone(), 4);
        let text = rep.to_text();
        let back = LinearCode::parse_text(&text, f).unwrap();
        assert_eq!(back.generator(), rep.generator());
        assert_eq!(back.labels(), rep.labels());
        assert_eq!(back.to_text(), text);
    }
}
