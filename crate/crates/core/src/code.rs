//! Linear codes over GF(q) and exhaustive weight enumeration.
//!
//! Codewords are visited in Gray-code order over the prime-field expansion
//! of the generator rows, so each step adds exactly one row. Binary codes
//! are packed one bit per symbol; ternary codes use two bit planes with a
//! per-symbol nonzero mask; everything else falls back to symbol vectors.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;
use std::sync::Arc;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf::FieldTable;
use crate::{binomial_u128, DEFAULT_CODEWORD_BUDGET};

/// A linear code stored as a reduced row echelon basis.
#[derive(Clone, Debug)]
pub struct LinearCode {
    field: Arc<FieldTable>,
    length: usize,
    rows: Vec<Vec<u32>>,
}

/// Exact counts `A_0..A_nu` of a code.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightDistribution {
    pub q: u64,
    pub dimension: usize,
    pub counts: Vec<u64>,
}

impl WeightDistribution {
    /// Validates `sum A_i = q^m` and `A_0 = 1`.
    pub fn new(q: u64, dimension: usize, counts: Vec<u64>) -> Result<Self> {
        if counts.is_empty() {
            return Err(Error::Inconsistent("distribution needs at least A_0".into()));
        }
        let total: u128 = counts.iter().map(|&c| c as u128).sum();
        let expected = (q as u128).checked_pow(dimension as u32);
        if Some(total) != expected {
            return Err(Error::Inconsistent(format!(
                "counts sum to {total}, expected {q}^{dimension}"
            )));
        }
        if counts[0] != 1 {
            return Err(Error::Inconsistent("A_0 must be 1".into()));
        }
        Ok(WeightDistribution { q, dimension, counts })
    }

    /// Code length.
    pub fn length(&self) -> usize {
        self.counts.len() - 1
    }

    pub fn count(&self, weight: usize) -> u64 {
        self.counts.get(weight).copied().unwrap_or(0)
    }

    /// Smallest nonzero weight, `None` for the zero code.
    pub fn minimum_distance(&self) -> Option<usize> {
        self.counts.iter().enumerate().skip(1).find(|(_, &c)| c > 0).map(|(i, _)| i)
    }

    /// Weights `i > 0` with `A_i > 0`.
    pub fn nonzero_weights(&self) -> Vec<usize> {
        self.counts.iter().enumerate().skip(1).filter(|(_, &c)| c > 0).map(|(i, _)| i).collect()
    }

    /// Sparse `(weight, count)` list of the nonzero entries, `A_0` included.
    pub fn terms(&self) -> Vec<(usize, u64)> {
        self.counts.iter().enumerate().filter(|(_, &c)| c > 0).map(|(i, &c)| (i, c)).collect()
    }

    /// Builds a distribution from sparse `(weight, count)` terms.
    pub fn from_terms(q: u64, dimension: usize, length: usize, terms: &[(usize, u64)]) -> Result<Self> {
        let mut counts = vec![0u64; length + 1];
        for &(w, c) in terms {
            if w > length {
                return Err(Error::CoordinateOutOfRange { coord: w, len: length + 1 });
            }
            counts[w] += c;
        }
        Self::new(q, dimension, counts)
    }
}

impl std::fmt::Display for WeightDistribution {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut first = true;
        for (w, c) in self.terms() {
            if !first {
                f.write_str("+")?;
            }
            first = false;
            match (w, c) {
                (0, c) => write!(f, "{c}")?,
                (w, 1) => write!(f, "z^{w}")?,
                (w, c) => write!(f, "{c}z^{w}")?,
            }
        }
        Ok(())
    }
}

impl LinearCode {
    /// Row-reduces `rows` over the field. Zero rows and dependent rows vanish.
    pub fn from_rows(field: Arc<FieldTable>, rows: Vec<Vec<u32>>) -> Result<Self> {
        let first = rows.first().ok_or(Error::EmptyRows)?;
        let length = first.len();
        for (i, r) in rows.iter().enumerate() {
            if r.len() != length {
                return Err(Error::RaggedRows { row: i, len: r.len(), expected: length });
            }
            if let Some(&s) = r.iter().find(|&&s| s >= field.size()) {
                return Err(Error::InvalidSymbol { symbol: s, q: field.size() as u64 });
            }
        }
        let rows = rref(&field, rows);
        Ok(LinearCode { field, length, rows })
    }

    /// The zero code of the given length.
    pub fn zero(field: Arc<FieldTable>, length: usize) -> Self {
        LinearCode { field, length, rows: Vec::new() }
    }

    /// The full space GF(q)^length.
    pub fn full(field: Arc<FieldTable>, length: usize) -> Self {
        let rows = (0..length)
            .map(|i| {
                let mut r = vec![0; length];
                r[i] = 1;
                r
            })
            .collect();
        LinearCode { field, length, rows }
    }

    pub fn field(&self) -> &Arc<FieldTable> {
        &self.field
    }

    pub fn q(&self) -> u64 {
        self.field.size() as u64
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn dimension(&self) -> usize {
        self.rows.len()
    }

    /// Reduced row echelon basis.
    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// Number of codewords, `None` on overflow.
    pub fn size(&self) -> Option<u128> {
        (self.q() as u128).checked_pow(self.dimension() as u32)
    }

    /// Same field, length and row space.
    pub fn same_row_space(&self, other: &LinearCode) -> bool {
        *self.field == *other.field && self.length == other.length && self.rows == other.rows
    }

    /// Encodes a message vector (one field element per basis row).
    pub fn encode(&self, message: &[u32]) -> Result<Vec<u32>> {
        if message.len() != self.dimension() {
            return Err(Error::MismatchedLengths(format!(
                "message has {} symbols, dimension is {}",
                message.len(),
                self.dimension()
            )));
        }
        let f = &self.field;
        let mut out = vec![0u32; self.length];
        for (&a, row) in message.iter().zip(&self.rows) {
            if a == 0 {
                continue;
            }
            for (o, &r) in out.iter_mut().zip(row) {
                *o = f.add(*o, f.mul(a, r));
            }
        }
        Ok(out)
    }

    /// Dual code: the null space of the generator rows.
    pub fn dual(&self) -> LinearCode {
        let f = &self.field;
        let pivots: Vec<usize> = self.rows.iter().map(|r| r.iter().position(|&x| x != 0).unwrap()).collect();
        let mut rows = Vec::with_capacity(self.length - pivots.len());
        for j in (0..self.length).filter(|j| !pivots.contains(j)) {
            let mut v = vec![0u32; self.length];
            v[j] = 1;
            for (row, &pc) in self.rows.iter().zip(&pivots) {
                v[pc] = f.neg(row[j]);
            }
            rows.push(v);
        }
        LinearCode { field: self.field.clone(), length: self.length, rows: rref(f, rows) }
    }

    fn check_coords(&self, coords: &[usize]) -> Result<Vec<bool>> {
        let mut mask = vec![false; self.length];
        for &c in coords {
            if c >= self.length {
                return Err(Error::CoordinateOutOfRange { coord: c, len: self.length });
            }
            mask[c] = true;
        }
        Ok(mask)
    }

    fn delete_columns(&self, rows: Vec<Vec<u32>>, mask: &[bool]) -> LinearCode {
        let length = mask.iter().filter(|&&m| !m).count();
        let rows: Vec<Vec<u32>> = rows
            .into_iter()
            .map(|r| r.into_iter().zip(mask).filter(|(_, &m)| !m).map(|(x, _)| x).collect())
            .collect();
        LinearCode { field: self.field.clone(), length, rows: rref(&self.field, rows) }
    }

    /// Punctured code: delete the coordinates in `coords`.
    pub fn puncture(&self, coords: &[usize]) -> Result<LinearCode> {
        let mask = self.check_coords(coords)?;
        Ok(self.delete_columns(self.rows.clone(), &mask))
    }

    /// Shortened code: codewords vanishing on `coords`, with those
    /// coordinates deleted.
    pub fn shorten(&self, coords: &[usize]) -> Result<LinearCode> {
        let mask = self.check_coords(coords)?;
        let f = &self.field;
        let mut rows = self.rows.clone();
        for (c, _) in mask.iter().enumerate().filter(|(_, &m)| m) {
            let Some(pr) = rows.iter().position(|r| r[c] != 0) else { continue };
            let pivot = rows.swap_remove(pr);
            let inv = f.inv(pivot[c]).expect("nonzero pivot");
            for r in rows.iter_mut() {
                if r[c] != 0 {
                    let factor = f.mul(r[c], inv);
                    for (x, &y) in r.iter_mut().zip(&pivot) {
                        *x = f.sub(*x, f.mul(factor, y));
                    }
                }
            }
        }
        Ok(self.delete_columns(rows, &mask))
    }

    /// Column `j` of the generator matrix.
    pub fn column(&self, j: usize) -> Vec<u32> {
        self.rows.iter().map(|r| r[j]).collect()
    }

    fn packed(&self) -> Packed {
        let f = &self.field;
        let p = f.characteristic();
        // GF(p)-basis of the row space: scalar multiples by the coordinate basis.
        let mut prime_rows = Vec::new();
        for row in &self.rows {
            for i in 0..f.degree() {
                let s = (p as u32).pow(i);
                prime_rows.push(row.iter().map(|&x| f.mul(s, x)).collect::<Vec<u32>>());
            }
        }
        let words = self.length.div_ceil(64);
        if f.size() == 2 {
            let rows = prime_rows
                .iter()
                .map(|r| {
                    let mut w = vec![0u64; words];
                    for (i, &x) in r.iter().enumerate() {
                        if x != 0 {
                            w[i / 64] |= 1 << (i % 64);
                        }
                    }
                    w
                })
                .collect();
            Packed::Binary { words, rows }
        } else if f.size() == 3 {
            let rows = prime_rows
                .iter()
                .map(|r| {
                    let mut lo = vec![0u64; words];
                    let mut hi = vec![0u64; words];
                    for (i, &x) in r.iter().enumerate() {
                        match x {
                            1 => lo[i / 64] |= 1 << (i % 64),
                            2 => hi[i / 64] |= 1 << (i % 64),
                            _ => {}
                        }
                    }
                    (lo, hi)
                })
                .collect();
            Packed::Ternary { words, rows }
        } else {
            Packed::Generic { field: f.clone(), p, rows: prime_rows }
        }
    }

    fn check_budget(&self, budget: u128) -> Result<u128> {
        let total = self.size().unwrap_or(u128::MAX);
        if total > budget {
            return Err(Error::budget("codeword enumeration", total, budget));
        }
        Ok(total)
    }

    /// Exact weight distribution by full enumeration under the default budget.
    pub fn weight_distribution(&self) -> Result<WeightDistribution> {
        self.weight_distribution_with_budget(DEFAULT_CODEWORD_BUDGET)
    }

    pub fn weight_distribution_with_budget(&self, budget: u128) -> Result<WeightDistribution> {
        let total = self.check_budget(budget)? as u64;
        let packed = self.packed();
        let len = self.length;
        let counts = chunks(total)
            .into_par_iter()
            .map(|(start, end)| {
                let mut local = vec![0u64; len + 1];
                packed.visit(start, end, |cw| local[cw.weight()] += 1);
                local
            })
            .reduce(
                || vec![0u64; len + 1],
                |mut a, b| {
                    a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                    a
                },
            );
        WeightDistribution::new(self.q(), self.dimension(), counts)
    }

    /// Minimum distance via the enumerated distribution.
    pub fn minimum_distance(&self) -> Result<Option<usize>> {
        Ok(self.weight_distribution()?.minimum_distance())
    }

    /// Supports of every codeword of weight `w`, with multiplicities counted
    /// over all codewords (scalar multiples included).
    pub fn supports_of_weight(&self, w: usize, budget: u128) -> Result<BTreeMap<Vec<u32>, u64>> {
        let total = self.check_budget(budget)? as u64;
        let packed = self.packed();
        let maps: Vec<BTreeMap<Vec<u32>, u64>> = chunks(total)
            .into_par_iter()
            .map(|(start, end)| {
                let mut local = BTreeMap::new();
                packed.visit(start, end, |cw| {
                    if cw.weight() == w {
                        *local.entry(cw.support()).or_insert(0) += 1;
                    }
                });
                local
            })
            .collect();
        let mut out = BTreeMap::new();
        for m in maps {
            for (k, v) in m {
                *out.entry(k).or_insert(0) += v;
            }
        }
        Ok(out)
    }

    /// Every codeword as a symbol vector, in Gray-code order.
    pub fn codewords(&self, budget: u128) -> Result<Vec<Vec<u32>>> {
        let total = self.check_budget(budget)? as u64;
        let mut out = Vec::with_capacity(total as usize);
        self.packed().visit(0, total, |cw| out.push(cw.symbols(self.length)));
        Ok(out)
    }

    /// Counts of dual codewords of weight `0..=max_weight`, by exhaustive
    /// search over low-weight vectors orthogonal to every generator row.
    pub fn dual_weight_prefix(&self, max_weight: usize, budget: u128) -> Result<Vec<u64>> {
        let searcher = DualSearch::new(self);
        let mut counts = vec![0u64; max_weight + 1];
        counts[0] = 1;
        for w in 1..=max_weight.min(self.length) {
            searcher.check_cost(w, budget)?;
            counts[w] = searcher.count(w);
        }
        Ok(counts)
    }

    /// Dual codewords of weight exactly `w`, normalized so the first nonzero
    /// symbol is 1. Each normalized word stands for `q - 1` codewords.
    pub fn dual_words_of_weight(&self, w: usize, budget: u128) -> Result<Vec<Vec<(u32, u32)>>> {
        if w == 0 || w > self.length {
            return Ok(Vec::new());
        }
        let searcher = DualSearch::new(self);
        searcher.check_cost(w, budget)?;
        Ok(searcher.words(w))
    }

    /// Minimum distance of the dual code; `None` when the dual is `{0}`.
    /// Enumerates the dual outright when it is small, otherwise searches
    /// low weights in increasing order.
    pub fn dual_distance(&self, budget: u128) -> Result<Option<usize>> {
        let dual_dim = self.length - self.dimension();
        if dual_dim == 0 {
            return Ok(None);
        }
        let dual_size = (self.q() as u128).checked_pow(dual_dim as u32).unwrap_or(u128::MAX);
        if dual_size <= budget.min(1 << 22) {
            return Ok(self.dual().weight_distribution_with_budget(budget)?.minimum_distance());
        }
        let searcher = DualSearch::new(self);
        for w in 1..=self.length {
            searcher.check_cost(w, budget)?;
            if searcher.count(w) > 0 {
                return Ok(Some(w));
            }
        }
        Ok(None)
    }

    /// Text form: header `q nu m`, then one row of element codes per line.
    pub fn to_file_string(&self) -> String {
        let mut s = format!("{} {} {}\n", self.q(), self.length, self.dimension());
        for r in &self.rows {
            let line: Vec<String> = r.iter().map(|x| x.to_string()).collect();
            let _ = writeln!(s, "{}", line.join(" "));
        }
        s
    }

    /// Parses the text form. Non-prime `q` uses the default modulus.
    pub fn from_file_str(text: &str) -> Result<Self> {
        let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines.next().ok_or_else(|| Error::Parse("empty code file".into()))?;
        let h: Vec<u64> = parse_numbers(header)?;
        let [q, nu, m] = h[..] else {
            return Err(Error::Parse("code header must be `q nu m`".into()));
        };
        let field = Arc::new(field_for_order(q)?);
        let rows: Vec<Vec<u32>> = lines
            .take(m as usize)
            .map(|l| parse_numbers(l).map(|v| v.into_iter().map(|x| x as u32).collect()))
            .collect::<Result<_>>()?;
        if rows.len() != m as usize {
            return Err(Error::Parse(format!("expected {m} rows, found {}", rows.len())));
        }
        if m == 0 {
            return Ok(LinearCode::zero(field, nu as usize));
        }
        let code = LinearCode::from_rows(field, rows)?;
        if code.length != nu as usize {
            return Err(Error::Parse(format!("rows have length {}, header says {nu}", code.length)));
        }
        Ok(code)
    }
}

fn parse_numbers(line: &str) -> Result<Vec<u64>> {
    line.split_whitespace()
        .map(|t| t.parse::<u64>().map_err(|e| Error::Parse(format!("`{t}`: {e}"))))
        .collect()
}

/// GF(q) with the default modulus for a prime power `q`.
pub fn field_for_order(q: u64) -> Result<FieldTable> {
    for p in [2u32, 3, 5, 7] {
        let mut m = 0;
        let mut x = q;
        while x > 1 && x % p as u64 == 0 {
            x /= p as u64;
            m += 1;
        }
        if x == 1 && m > 0 {
            return FieldTable::new(p, m, None);
        }
    }
    Err(Error::Parse(format!("{q} is not a supported prime power")))
}

fn rref(f: &FieldTable, mut rows: Vec<Vec<u32>>) -> Vec<Vec<u32>> {
    let len = rows.first().map_or(0, |r| r.len());
    let mut rank = 0;
    for col in 0..len {
        let Some(pr) = (rank..rows.len()).find(|&i| rows[i][col] != 0) else { continue };
        rows.swap(rank, pr);
        let inv = f.inv(rows[rank][col]).expect("nonzero pivot");
        if inv != 1 {
            for x in rows[rank].iter_mut() {
                *x = f.mul(*x, inv);
            }
        }
        let pivot = rows[rank].clone();
        for (i, r) in rows.iter_mut().enumerate() {
            if i != rank && r[col] != 0 {
                let factor = r[col];
                for (x, &y) in r.iter_mut().zip(&pivot) {
                    if y != 0 {
                        *x = f.sub(*x, f.mul(factor, y));
                    }
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rows.truncate(rank);
    rows
}

fn chunks(total: u64) -> Vec<(u64, u64)> {
    let pieces = (rayon::current_num_threads() as u64 * 8).max(1);
    let size = total.div_ceil(pieces).max(4096);
    (0..total).step_by(size as usize).map(|s| (s, (s + size).min(total))).collect()
}

enum Packed {
    Binary { words: usize, rows: Vec<Vec<u64>> },
    Ternary { words: usize, rows: Vec<(Vec<u64>, Vec<u64>)> },
    Generic { field: Arc<FieldTable>, p: u32, rows: Vec<Vec<u32>> },
}

enum Codeword<'a> {
    Binary(&'a [u64]),
    Ternary(&'a [u64], &'a [u64]),
    Generic(&'a [u32]),
}

impl Codeword<'_> {
    fn weight(&self) -> usize {
        match self {
            Codeword::Binary(w) => w.iter().map(|x| x.count_ones() as usize).sum(),
            Codeword::Ternary(lo, hi) => {
                lo.iter().zip(hi.iter()).map(|(a, b)| (a | b).count_ones() as usize).sum()
            }
            Codeword::Generic(s) => s.iter().filter(|&&x| x != 0).count(),
        }
    }

    fn support(&self) -> Vec<u32> {
        let bits = |words: &mut dyn Iterator<Item = u64>| {
            let mut out = Vec::new();
            for (i, mut w) in words.enumerate() {
                while w != 0 {
                    let b = w.trailing_zeros();
                    out.push(i as u32 * 64 + b);
                    w &= w - 1;
                }
            }
            out
        };
        match self {
            Codeword::Binary(w) => bits(&mut w.iter().copied()),
            Codeword::Ternary(lo, hi) => bits(&mut lo.iter().zip(hi.iter()).map(|(a, b)| a | b)),
            Codeword::Generic(s) => {
                s.iter().enumerate().filter(|(_, &x)| x != 0).map(|(i, _)| i as u32).collect()
            }
        }
    }

    fn symbols(&self, len: usize) -> Vec<u32> {
        match self {
            Codeword::Binary(w) => (0..len).map(|i| ((w[i / 64] >> (i % 64)) & 1) as u32).collect(),
            Codeword::Ternary(lo, hi) => (0..len)
                .map(|i| ((lo[i / 64] >> (i % 64)) & 1) as u32 + 2 * ((hi[i / 64] >> (i % 64)) & 1) as u32)
                .collect(),
            Codeword::Generic(s) => s.to_vec(),
        }
    }
}

/// Bitsliced addition mod 3 with encoding 0=(0,0), 1=(1,0), 2=(0,1).
#[inline]
fn ternary_add(xl: u64, xh: u64, yl: u64, yh: u64) -> (u64, u64) {
    let x0 = !(xl | xh);
    let y0 = !(yl | yh);
    let l = (xl & y0) | (x0 & yl) | (xh & yh);
    let h = (xh & y0) | (x0 & yh) | (xl & yl);
    (l, h)
}

impl Packed {
    /// Visits codewords with Gray index in `start..end`.
    fn visit(&self, start: u64, end: u64, mut f: impl FnMut(Codeword<'_>)) {
        if start >= end {
            return;
        }
        match self {
            Packed::Binary { words, rows } => {
                let mut cw = vec![0u64; *words];
                let g = start ^ (start >> 1);
                for (j, r) in rows.iter().enumerate() {
                    if (g >> j) & 1 == 1 {
                        cw.iter_mut().zip(r).for_each(|(a, b)| *a ^= b);
                    }
                }
                for n in start..end {
                    f(Codeword::Binary(&cw));
                    if n + 1 < end {
                        let j = (n + 1).trailing_zeros() as usize;
                        cw.iter_mut().zip(&rows[j]).for_each(|(a, b)| *a ^= b);
                    }
                }
            }
            Packed::Ternary { words, rows } => {
                let mut lo = vec![0u64; *words];
                let mut hi = vec![0u64; *words];
                let add_row = |lo: &mut [u64], hi: &mut [u64], j: usize| {
                    let (rl, rh) = &rows[j];
                    for i in 0..lo.len() {
                        let (l, h) = ternary_add(lo[i], hi[i], rl[i], rh[i]);
                        lo[i] = l;
                        hi[i] = h;
                    }
                };
                for (j, times) in gray_digits(start, 3, rows.len()).into_iter().enumerate() {
                    for _ in 0..times {
                        add_row(&mut lo, &mut hi, j);
                    }
                }
                for n in start..end {
                    f(Codeword::Ternary(&lo, &hi));
                    if n + 1 < end {
                        add_row(&mut lo, &mut hi, trailing_digits(n + 1, 3));
                    }
                }
            }
            Packed::Generic { field, p, rows } => {
                let len = rows.first().map_or(0, |r| r.len());
                let mut cw = vec![0u32; len];
                let add_row = |cw: &mut [u32], j: usize| {
                    for (a, &b) in cw.iter_mut().zip(&rows[j]) {
                        *a = field.add(*a, b);
                    }
                };
                for (j, times) in gray_digits(start, *p as u64, rows.len()).into_iter().enumerate() {
                    for _ in 0..times {
                        add_row(&mut cw, j);
                    }
                }
                for n in start..end {
                    f(Codeword::Generic(&cw));
                    if n + 1 < end {
                        add_row(&mut cw, trailing_digits(n + 1, *p as u64));
                    }
                }
            }
        }
    }
}

/// Digits of the modular base-`b` Gray code of `n`: `g_j = n_j - n_{j+1} mod b`.
fn gray_digits(n: u64, b: u64, len: usize) -> Vec<u64> {
    let mut d = Vec::with_capacity(len + 1);
    let mut x = n;
    for _ in 0..=len {
        d.push(x % b);
        x /= b;
    }
    (0..len).map(|j| (d[j] + b - d[j + 1]) % b).collect()
}

fn trailing_digits(mut n: u64, b: u64) -> usize {
    let mut j = 0;
    while n % b == 0 {
        n /= b;
        j += 1;
    }
    j
}

/// Exhaustive search for low-weight vectors in the dual.
struct DualSearch {
    field: Arc<FieldTable>,
    length: usize,
    /// Columns packed into u64 when q = 2 and the dimension fits.
    binary_cols: Option<Vec<u64>>,
    cols: Vec<Vec<u32>>,
}

impl DualSearch {
    fn new(code: &LinearCode) -> Self {
        let cols: Vec<Vec<u32>> = (0..code.length).map(|j| code.column(j)).collect();
        let binary_cols = (code.q() == 2 && code.dimension() <= 64).then(|| {
            cols.iter()
                .map(|c| c.iter().enumerate().fold(0u64, |acc, (i, &x)| acc | ((x as u64) << i)))
                .collect()
        });
        DualSearch { field: code.field.clone(), length: code.length, binary_cols, cols }
    }

    fn check_cost(&self, w: usize, budget: u128) -> Result<()> {
        let q1 = self.field.size() as u128 - 1;
        let cost = binomial_u128(self.length as u64, w.saturating_sub(1) as u64)
            .saturating_mul(q1.saturating_pow(w.saturating_sub(1) as u32))
            .saturating_mul(if self.binary_cols.is_some() { 1 } else { self.length as u128 });
        if cost > budget {
            return Err(Error::budget(format!("dual search at weight {w}"), cost, budget));
        }
        Ok(())
    }

    fn count(&self, w: usize) -> u64 {
        let mut n = 0u64;
        self.search(w, &mut |_| n += 1, false);
        n * (self.field.size() as u64 - 1)
    }

    fn words(&self, w: usize) -> Vec<Vec<(u32, u32)>> {
        let mut out = Vec::new();
        self.search(w, &mut |word| out.push(word.to_vec()), true);
        out.sort();
        out
    }

    /// Calls `emit` once per normalized weight-`w` dual word. The slice is
    /// only filled in when `materialize` is set.
    fn search(&self, w: usize, emit: &mut dyn FnMut(&[(u32, u32)]), materialize: bool) {
        if w == 0 || w > self.length {
            return;
        }
        if let Some(cols) = &self.binary_cols {
            let mut buckets: HashMap<u64, Vec<usize>> = HashMap::new();
            for (j, &c) in cols.iter().enumerate() {
                buckets.entry(c).or_default().push(j);
            }
            let mut chosen = Vec::with_capacity(w);
            binary_dfs(cols, &buckets, w, 0, 0, &mut chosen, emit, materialize);
        } else {
            let m = self.cols.first().map_or(0, |c| c.len());
            let mut chosen = Vec::with_capacity(w);
            self.generic_dfs(w, 0, &vec![0; m], &mut chosen, emit);
        }
    }

    fn generic_dfs(
        &self,
        remaining: usize,
        from: usize,
        syn: &[u32],
        chosen: &mut Vec<(u32, u32)>,
        emit: &mut dyn FnMut(&[(u32, u32)]),
    ) {
        let f = &self.field;
        if remaining == 1 {
            // Need c * col_j = -syn with c != 0.
            for j in from..self.length {
                let col = &self.cols[j];
                let Some(k) = col.iter().position(|&x| x != 0) else {
                    if syn.iter().all(|&s| s == 0) && !chosen.is_empty() {
                        // zero column: any nonzero value works
                        for c in 1..f.size() {
                            chosen.push((j as u32, c));
                            emit(chosen);
                            chosen.pop();
                        }
                    } else if chosen.is_empty() {
                        chosen.push((j as u32, 1));
                        emit(chosen);
                        chosen.pop();
                    }
                    continue;
                };
                let c = f.mul(f.neg(syn[k]), f.inv(col[k]).unwrap());
                if c == 0 {
                    continue;
                }
                if chosen.is_empty() && c != 1 {
                    continue;
                }
                if col.iter().zip(syn).all(|(&x, &s)| f.add(f.mul(c, x), s) == 0) {
                    chosen.push((j as u32, c));
                    emit(chosen);
                    chosen.pop();
                }
            }
            return;
        }
        for j in from..self.length {
            if self.length - j < remaining {
                break;
            }
            let values: Box<dyn Iterator<Item = u32>> =
                if chosen.is_empty() { Box::new(std::iter::once(1)) } else { Box::new(1..f.size()) };
            for c in values {
                let next: Vec<u32> =
                    syn.iter().zip(&self.cols[j]).map(|(&s, &x)| f.add(s, f.mul(c, x))).collect();
                chosen.push((j as u32, c));
                self.generic_dfs(remaining - 1, j + 1, &next, chosen, emit);
                chosen.pop();
            }
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn binary_dfs(
    cols: &[u64],
    buckets: &HashMap<u64, Vec<usize>>,
    remaining: usize,
    from: usize,
    syn: u64,
    chosen: &mut Vec<(u32, u32)>,
    emit: &mut dyn FnMut(&[(u32, u32)]),
    materialize: bool,
) {
    if remaining == 1 {
        if let Some(list) = buckets.get(&syn) {
            let start = list.partition_point(|&j| j < from);
            if materialize {
                for &j in &list[start..] {
                    chosen.push((j as u32, 1));
                    emit(chosen);
                    chosen.pop();
                }
            } else {
                for _ in start..list.len() {
                    emit(&[]);
                }
            }
        }
        return;
    }
    for j in from..cols.len() {
        if cols.len() - j < remaining {
            break;
        }
        chosen.push((j as u32, 1));
        binary_dfs(cols, buckets, remaining - 1, j + 1, syn ^ cols[j], chosen, emit, materialize);
        chosen.pop();
    }
}

/// Griesmer lower bound `sum_{i<m} ceil(d / q^i)` on the length of an
/// `[n, m, d]_q` code.
pub fn griesmer_lower_bound(m: u32, d: u64, q: u64) -> u64 {
    let mut total = 0;
    let mut qi = 1u64;
    for _ in 0..m {
        total += d.div_ceil(qi);
        qi = qi.saturating_mul(q);
    }
    total
}

/// Largest `d` whose Griesmer bound fits in `length`.
pub fn max_griesmer_d(length: u64, m: u32, q: u64) -> u64 {
    let mut d = 0;
    while griesmer_lower_bound(m, d + 1, q) <= length {
        d += 1;
    }
    d
}
