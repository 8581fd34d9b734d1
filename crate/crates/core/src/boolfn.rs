//! Vectorial Boolean functions `F: GF(2^n) -> GF(2^l)`.
//!
//! Walsh values are `W_F(lambda, mu) = sum_x (-1)^(Tr_l(lambda F(x)) + Tr_n(mu x))`
//! with `lambda` in the output field. A full component spectrum is one fast
//! Walsh-Hadamard transform of the sign vector: `Tr_n(mu x)` is the dot
//! product of the bits of `x` with the mask `i -> Tr_n(mu 2^i)`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;
use std::sync::Arc;

use num_integer::Integer;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf::FieldTable;

/// Default cap on `2^n * 2^l` difference-table work.
pub const DEFAULT_DIFF_BUDGET: u128 = 1 << 22;

#[derive(Clone, Debug)]
pub struct VectorialFunction {
    input: Arc<FieldTable>,
    output: Arc<FieldTable>,
    table: Vec<u32>,
}

impl PartialEq for VectorialFunction {
    fn eq(&self, other: &Self) -> bool {
        self.input == other.input && self.output == other.output && self.table == other.table
    }
}

fn check_binary(f: &FieldTable) -> Result<()> {
    if f.characteristic() != 2 {
        return Err(Error::UnsupportedField {
            p: f.characteristic(),
            m: f.degree(),
            reason: "Boolean functions need characteristic 2".into(),
        });
    }
    Ok(())
}

impl VectorialFunction {
    /// Wraps a table over explicit fields.
    pub fn new(input: Arc<FieldTable>, output: Arc<FieldTable>, table: Vec<u32>) -> Result<Self> {
        check_binary(&input)?;
        check_binary(&output)?;
        if table.len() != input.size() as usize {
            return Err(Error::InvalidTable(format!(
                "{} entries, expected {}",
                table.len(),
                input.size()
            )));
        }
        if let Some((x, &y)) = table.iter().enumerate().find(|(_, &y)| y >= output.size()) {
            return Err(Error::InvalidTable(format!("F({x}) = {y} is outside GF(2^{})", output.degree())));
        }
        if output.degree() > input.degree() {
            return Err(Error::InvalidTable(format!(
                "output degree {} exceeds input degree {}",
                output.degree(),
                input.degree()
            )));
        }
        Ok(VectorialFunction { input, output, table })
    }

    /// Table over the default fields GF(2^n) and GF(2^l).
    pub fn from_table(n: u32, l: u32, table: Vec<u32>) -> Result<Self> {
        let input = Arc::new(FieldTable::binary(n)?);
        let output = if l == n { input.clone() } else { Arc::new(FieldTable::binary(l)?) };
        Self::new(input, output, table)
    }

    /// `F(x) = f(x)` evaluated over every input code.
    pub fn from_fn(field: Arc<FieldTable>, f: impl Fn(u32) -> u32) -> Result<Self> {
        let table = field.elements().map(f).collect();
        Self::new(field.clone(), field, table)
    }

    /// Power map `x -> x^e` over the default GF(2^n), with `0 -> 0`.
    pub fn from_exponent(n: u32, e: u64) -> Result<Self> {
        Self::from_exponent_in(Arc::new(FieldTable::binary(n)?), e)
    }

    pub fn from_exponent_in(field: Arc<FieldTable>, e: u64) -> Result<Self> {
        let order = field.size() as u64 - 1;
        let f = field.clone();
        Self::from_fn(field, move |x| match (x, e) {
            (0, 0) => 1,
            (0, _) => 0,
            _ => f.exp(f.log(x).unwrap() as u64 * (e % order)),
        })
    }

    pub fn n(&self) -> u32 {
        self.input.degree()
    }

    pub fn l(&self) -> u32 {
        self.output.degree()
    }

    pub fn input_field(&self) -> &Arc<FieldTable> {
        &self.input
    }

    pub fn output_field(&self) -> &Arc<FieldTable> {
        &self.output
    }

    pub fn table(&self) -> &[u32] {
        &self.table
    }

    pub fn eval(&self, x: u32) -> u32 {
        self.table[x as usize]
    }

    /// `Tr_{2^n/2^l}(F(x))`, re-encoded in the default GF(2^l).
    /// Needs `l | n` and an `F` whose output field is its input field.
    pub fn with_trace_to(&self, l: u32) -> Result<Self> {
        if self.output != self.input {
            return Err(Error::FieldMismatch);
        }
        let n = self.n();
        if n % l != 0 {
            return Err(Error::NonDivisorDegree { target: l, m: n });
        }
        let sub = Arc::new(FieldTable::binary(l)?);
        let embed = self.input.embedding_of(&sub)?;
        let mut back = vec![u32::MAX; self.input.size() as usize];
        for (code, &image) in embed.iter().enumerate() {
            back[image as usize] = code as u32;
        }
        let trace = self.input.trace_table(l)?;
        let table = self.table.iter().map(|&y| back[trace[y as usize] as usize]).collect();
        Self::new(self.input.clone(), sub, table)
    }

    /// `x -> alpha^k F(x)` with `alpha` the output field's generator.
    pub fn scale(&self, k: u64) -> Self {
        let c = self.output.exp(k);
        let table = self.table.iter().map(|&y| self.output.mul(c, y)).collect();
        VectorialFunction { input: self.input.clone(), output: self.output.clone(), table }
    }

    /// Pointwise sum over the same fields.
    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.input != other.input || self.output != other.output {
            return Err(Error::FieldMismatch);
        }
        let table = self.table.iter().zip(&other.table).map(|(&a, &b)| a ^ b).collect();
        Ok(VectorialFunction { input: self.input.clone(), output: self.output.clone(), table })
    }

    /// Bits of the component `x -> Tr_l(lambda F(x))`.
    pub fn component(&self, lambda: u32) -> Vec<u8> {
        let tr = self.output.trace_table(1).expect("1 divides every degree");
        self.table.iter().map(|&y| tr[self.output.mul(lambda, y) as usize] as u8).collect()
    }

    /// Input mask of `x -> Tr_n(mu x)` in the coordinate basis.
    fn mask(&self, mu: u32) -> usize {
        (0..self.n()).fold(0usize, |acc, i| acc | ((self.input.absolute_trace(self.input.mul(mu, 1 << i)) as usize) << i))
    }

    /// `W_F(lambda, mu)` by direct summation.
    pub fn walsh(&self, lambda: u32, mu: u32) -> i64 {
        let tr_out = self.output.trace_table(1).expect("trace");
        let tr_in = self.input.trace_table(1).expect("trace");
        self.table
            .iter()
            .enumerate()
            .map(|(x, &y)| {
                let bit = tr_out[self.output.mul(lambda, y) as usize] ^ tr_in[self.input.mul(mu, x as u32) as usize];
                1 - 2 * bit as i64
            })
            .sum()
    }

    /// All `W_F(lambda, mu)` for one `lambda`, indexed by `mu`.
    pub fn walsh_row(&self, lambda: u32) -> Vec<i64> {
        let bits = self.component(lambda);
        let mut s: Vec<i64> = bits.iter().map(|&b| 1 - 2 * b as i64).collect();
        fwht(&mut s);
        self.input.elements().map(|mu| s[self.mask(mu)]).collect()
    }

    /// Histogram of `W_F(lambda, mu)` over `lambda != 0` and all `mu`.
    pub fn walsh_spectrum(&self) -> WalshSpectrum {
        let rows: Vec<(u32, Vec<i64>)> =
            (1..self.output.size()).into_par_iter().map(|l| (l, self.walsh_row(l))).collect();
        let mut histogram = BTreeMap::new();
        let mut parseval_ok = true;
        let target = 1i128 << (2 * self.n());
        for (_, row) in &rows {
            let sq: i128 = row.iter().map(|&w| (w as i128) * (w as i128)).sum();
            parseval_ok &= sq == target;
            for &w in row {
                *histogram.entry(w).or_insert(0u64) += 1;
            }
        }
        WalshSpectrum { histogram, parseval_ok }
    }

    /// Distinct Walsh values over `lambda != 0`.
    pub fn walsh_value_set(&self) -> BTreeSet<i64> {
        self.walsh_spectrum().histogram.into_keys().collect()
    }

    /// Every nonzero component is bent.
    pub fn is_bent_vectorial(&self) -> bool {
        if self.n() % 2 != 0 {
            return false;
        }
        let r = 1i64 << (self.n() / 2);
        (1..self.output.size()).into_par_iter().all(|l| self.walsh_row(l).iter().all(|w| w.abs() == r))
    }

    /// Bentness of a Boolean (`l = 1`) function.
    pub fn is_bent(&self) -> bool {
        self.l() == 1 && self.is_bent_vectorial()
    }

    /// Support `{x : f(x) = 1}` of a Boolean function, increasing.
    pub fn support(&self) -> Vec<u32> {
        self.input.elements().filter(|&x| self.table[x as usize] != 0).collect()
    }

    /// Full difference table `delta(a, b)`.
    pub fn difference_table(&self, budget: u128) -> Result<DifferenceTable> {
        let size = self.input.size() as usize;
        let out = self.output.size() as usize;
        let work = (size as u128) * (size.max(out) as u128);
        if work > budget {
            return Err(Error::budget("difference table", work, budget));
        }
        let mut counts = vec![0u32; size * out];
        counts.par_chunks_mut(out).enumerate().for_each(|(a, row)| {
            for x in 0..size {
                let b = self.table[x] ^ self.table[x ^ a];
                row[b as usize] += 1;
            }
        });
        Ok(DifferenceTable { out, counts })
    }

    /// Histogram of `delta(a, b)` over `a != 0` and all `b`.
    pub fn diff_spectrum(&self) -> Result<DifferentialSpectrum> {
        self.diff_spectrum_with(DEFAULT_DIFF_BUDGET)
    }

    pub fn diff_spectrum_with(&self, budget: u128) -> Result<DifferentialSpectrum> {
        Ok(self.difference_table(budget)?.spectrum())
    }

    /// `s` when every `delta(a, b)`, `a != 0`, lies in `{0, 2^s}` and both occur.
    pub fn two_valued_s(&self) -> Result<Option<u32>> {
        Ok(self.diff_spectrum()?.two_valued_s())
    }

    /// `sum_{a != 0, b} W_F(a, b)^4`; needs `l = n`.
    pub fn fourth_moment(&self) -> Result<u128> {
        if self.l() != self.n() {
            return Err(Error::Parameter(format!("fourth moment needs l = n, got l = {}", self.l())));
        }
        Ok((1..self.output.size())
            .into_par_iter()
            .map(|l| self.walsh_row(l).iter().map(|&w| (w as i128).pow(4) as u128).sum::<u128>())
            .sum())
    }

    /// Whether the fourth moment equals `2^(3n) (2^n - 1) delta`, the value
    /// reached exactly by differentially two-valued functions.
    pub fn fourth_moment_design_check(&self) -> Result<bool> {
        let delta = self.diff_spectrum()?.uniformity as u128;
        Ok(self.fourth_moment()? == fourth_moment_target(self.n(), delta))
    }

    /// Text form: header `n l`, then `2^n` hexadecimal output codes.
    pub fn to_file_string(&self) -> String {
        let mut s = format!("{} {}\n", self.n(), self.l());
        for chunk in self.table.chunks(16) {
            let line: Vec<String> = chunk.iter().map(|y| format!("{y:x}")).collect();
            let _ = writeln!(s, "{}", line.join(" "));
        }
        s
    }

    pub fn from_file_str(text: &str) -> Result<Self> {
        let mut tokens = text
            .lines()
            .map(|l| l.split('#').next().unwrap_or(""))
            .flat_map(str::split_whitespace);
        let mut header = || -> Result<u32> {
            tokens
                .next()
                .ok_or_else(|| Error::Parse("function file needs `n l` header".into()))?
                .parse::<u32>()
                .map_err(|e| Error::Parse(format!("header: {e}")))
        };
        let n = header()?;
        let l = header()?;
        let table = tokens
            .map(|t| {
                let t = t.trim_start_matches("0x");
                u32::from_str_radix(t, 16).map_err(|e| Error::Parse(format!("`{t}`: {e}")))
            })
            .collect::<Result<Vec<u32>>>()?;
        Self::from_table(n, l, table)
    }
}

/// `2^(3n) (2^n - 1) delta`.
pub fn fourth_moment_target(n: u32, delta: u128) -> u128 {
    (1u128 << (3 * n)) * ((1u128 << n) - 1) * delta
}

/// In-place fast Walsh-Hadamard transform.
pub fn fwht(v: &mut [i64]) {
    let n = v.len();
    let mut h = 1;
    while h < n {
        for i in (0..n).step_by(2 * h) {
            for j in i..i + h {
                let (a, b) = (v[j], v[j + h]);
                v[j] = a + b;
                v[j + h] = a - b;
            }
        }
        h *= 2;
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WalshSpectrum {
    /// Value -> number of `(lambda, mu)` pairs.
    pub histogram: BTreeMap<i64, u64>,
    /// `sum_mu W^2 = 2^(2n)` held for every component.
    pub parseval_ok: bool,
}

/// `delta(a, b)` for every input difference `a` and output difference `b`.
#[derive(Clone, Debug)]
pub struct DifferenceTable {
    out: usize,
    counts: Vec<u32>,
}

impl DifferenceTable {
    pub fn delta(&self, a: u32, b: u32) -> u32 {
        self.counts[a as usize * self.out + b as usize]
    }

    pub fn row(&self, a: u32) -> &[u32] {
        &self.counts[a as usize * self.out..(a as usize + 1) * self.out]
    }

    pub fn spectrum(&self) -> DifferentialSpectrum {
        let mut histogram = BTreeMap::new();
        for &d in &self.counts[self.out..] {
            *histogram.entry(d).or_insert(0u64) += 1;
        }
        let uniformity = histogram.keys().copied().max().unwrap_or(0);
        DifferentialSpectrum { histogram, uniformity }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DifferentialSpectrum {
    /// `delta` value -> number of `(a, b)` pairs with `a != 0`.
    pub histogram: BTreeMap<u32, u64>,
    pub uniformity: u32,
}

impl DifferentialSpectrum {
    pub fn values(&self) -> BTreeSet<u32> {
        self.histogram.keys().copied().collect()
    }

    pub fn two_valued_s(&self) -> Option<u32> {
        let v = self.values();
        let nonzero: Vec<u32> = v.iter().copied().filter(|&d| d != 0).collect();
        match nonzero[..] {
            [d] if v.contains(&0) && d.is_power_of_two() => Some(d.trailing_zeros()),
            _ => None,
        }
    }
}

/// A family member with the `s` its parameters promise.
#[derive(Clone, Debug)]
pub struct FamilyMember {
    pub function: VectorialFunction,
    pub predicted_s: u32,
    pub exponent: Option<u64>,
}

/// `x^(2^(2i) - 2^i + 1)` over GF(2^n); needs `n != 3i` and `n / gcd(n, i)` odd.
pub fn kasami(n: u32, i: u32) -> Result<FamilyMember> {
    if i == 0 || i >= n {
        return Err(Error::Inadmissible(format!("need 1 <= i < n, got n={n}, i={i}")));
    }
    if n == 3 * i {
        return Err(Error::Inadmissible(format!("n = 3i (n={n}, i={i})")));
    }
    let s = n.gcd(&i);
    if (n / s) % 2 == 0 {
        return Err(Error::Inadmissible(format!("n/gcd(n,i) = {} is even", n / s)));
    }
    let e = (1u64 << (2 * i)) - (1u64 << i) + 1;
    Ok(FamilyMember { function: VectorialFunction::from_exponent(n, e)?, predicted_s: s, exponent: Some(e) })
}

/// `x^(2^i + 1)` over GF(2^n), differentially two-valued with `s = gcd(n, i)`.
pub fn gold(n: u32, i: u32) -> Result<FamilyMember> {
    if i == 0 || i >= n {
        return Err(Error::Inadmissible(format!("need 1 <= i < n, got n={n}, i={i}")));
    }
    let e = (1u64 << i) + 1;
    Ok(FamilyMember { function: VectorialFunction::from_exponent(n, e)?, predicted_s: n.gcd(&i), exponent: Some(e) })
}

/// `alpha x^(2^i + 1) + alpha^(2^m) x^(2^(2m) + 2^(m+i))` over GF(2^(3m)),
/// with `alpha` the default generator. Needs `3 !| m`, `3 | m + i` and
/// `m / gcd(m, i)` odd.
pub fn bracken_tan_tan(m: u32, i: u32) -> Result<FamilyMember> {
    if m == 0 || i == 0 {
        return Err(Error::Inadmissible("m and i must be positive".into()));
    }
    if m % 3 == 0 {
        return Err(Error::Inadmissible(format!("3 divides m = {m}")));
    }
    if (m + i) % 3 != 0 {
        return Err(Error::Inadmissible(format!("3 does not divide m + i = {}", m + i)));
    }
    let s = m.gcd(&i);
    if (m / s) % 2 == 0 {
        return Err(Error::Inadmissible(format!("m/gcd(m,i) = {} is even", m / s)));
    }
    let n = 3 * m;
    let field = Arc::new(FieldTable::binary(n)?);
    let order = field.size() as u64 - 1;
    let alpha = field.generator();
    let c2 = field.exp((1u64 << m) % order);
    let e1 = ((1u64 << i) + 1) % order;
    let e2 = (((1u128 << (2 * m)) + (1u128 << (m + i))) % order as u128) as u64;
    let f = field.clone();
    let function = VectorialFunction::from_fn(field, move |x| {
        if x == 0 {
            return 0;
        }
        let lx = f.log(x).unwrap() as u64;
        f.add(f.mul(alpha, f.exp(lx * e1)), f.mul(c2, f.exp(lx * e2)))
    })?;
    Ok(FamilyMember { function, predicted_s: s, exponent: None })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    /// `x^e` by square-and-multiply on polynomial codes, independent of the log tables.
    fn power_by_squaring(f: &FieldTable, x: u32, mut e: u64) -> u32 {
        let mul = |a: u32, b: u32| -> u32 {
            let n = f.degree();
            let poly: u32 = f.modulus().iter().enumerate().fold(0, |acc, (i, &c)| acc | (c << i));
            let mut r = 0u32;
            let mut a = a;
            let mut b = b;
            while b != 0 {
                if b & 1 == 1 {
                    r ^= a;
                }
                b >>= 1;
                a <<= 1;
                if a >> n & 1 == 1 {
                    a ^= poly;
                }
            }
            r
        };
        let mut acc = 1;
        let mut base = x;
        while e > 0 {
            if e & 1 == 1 {
                acc = mul(acc, base);
            }
            base = mul(base, base);
            e >>= 1;
        }
        acc
    }

    #[test]
    fn power_map_matches_square_and_multiply() {
        let k = VectorialFunction::from_exponent(5, 13).unwrap();
        let f = k.input_field().clone();
        for x in 1..32 {
            assert_eq!(k.eval(x), power_by_squaring(&f, x, 13));
        }
        assert_eq!(k.eval(0), 0);
        let id = VectorialFunction::from_exponent(6, 1).unwrap();
        assert!(id.table().iter().enumerate().all(|(x, &y)| x as u32 == y));
    }

    #[test]
    fn bent_boolean_example() {
        let f = VectorialFunction::from_exponent(6, 3).unwrap().scale(1).with_trace_to(1).unwrap();
        assert!(f.is_bent());
        assert_eq!(f.support().len(), 36);
        let odd = VectorialFunction::from_exponent(5, 3).unwrap().with_trace_to(1).unwrap();
        assert!(!odd.is_bent());
    }

    #[test]
    fn bent_vectorial_example() {
        let f = VectorialFunction::from_exponent(6, 3).unwrap().scale(1).with_trace_to(3).unwrap();
        assert_eq!(f.l(), 3);
        assert!(f.is_bent_vectorial());
        assert_eq!(f.walsh_value_set(), BTreeSet::from([-8, 8]));
    }

    #[test]
    fn zero_map_walsh() {
        let z = VectorialFunction::from_table(4, 4, vec![0; 16]).unwrap();
        for l in 1..16 {
            assert_eq!(z.walsh(l, 0), 16);
        }
    }

    #[test]
    fn kasami_five() {
        let k = kasami(5, 2).unwrap();
        assert_eq!((k.exponent, k.predicted_s), (Some(13), 1));
        let f = &k.function;
        let ds = f.diff_spectrum().unwrap();
        assert_eq!(ds.values(), BTreeSet::from([0, 2]));
        assert_eq!(f.two_valued_s().unwrap(), Some(1));
        assert_eq!(f.walsh_value_set(), BTreeSet::from([-8, 0, 8]));
        assert!(f.fourth_moment_design_check().unwrap());
        assert_eq!(f.fourth_moment().unwrap(), 31 * (1 << 16));
    }

    #[test]
    fn kasami_admissibility() {
        assert!(matches!(kasami(6, 2), Err(Error::Inadmissible(m)) if m.contains("3i")));
        assert!(kasami(4, 1).is_err()); // n/s even
        assert_eq!(kasami(10, 2).unwrap().predicted_s, 2);
    }

    #[test]
    fn linear_map_is_two_valued_with_s_n() {
        let id = VectorialFunction::from_exponent(4, 1).unwrap();
        assert_eq!(id.two_valued_s().unwrap(), Some(4));
    }

    #[test]
    fn inverse_map_fails_fourth_moment_at_even_n() {
        let inv = VectorialFunction::from_exponent(6, 62).unwrap();
        let ds = inv.diff_spectrum().unwrap();
        assert_eq!(ds.values(), BTreeSet::from([0, 2, 4]));
        assert_eq!(ds.two_valued_s(), None);
        assert!(!inv.fourth_moment_design_check().unwrap());
        // At odd n the inverse map is APN and the check holds.
        let inv5 = VectorialFunction::from_exponent(5, 30).unwrap();
        assert!(inv5.fourth_moment_design_check().unwrap());
    }

    #[test]
    fn family_spectra_match_predictions() {
        let members = vec![
            kasami(5, 2).unwrap(),
            kasami(7, 2).unwrap(),
            kasami(7, 3).unwrap(),
            kasami(9, 2).unwrap(),
            gold(5, 1).unwrap(),
            gold(6, 2).unwrap(),
            bracken_tan_tan(1, 2).unwrap(),
            bracken_tan_tan(2, 4).unwrap(),
        ];
        for m in members {
            let f = &m.function;
            assert_eq!(f.two_valued_s().unwrap(), Some(m.predicted_s), "n={}", f.n());
            let n = f.n();
            if (n + m.predicted_s) % 2 == 0 {
                let r = 1i64 << ((n + m.predicted_s) / 2);
                assert!(f.walsh_value_set().is_subset(&BTreeSet::from([-r, 0, r])), "n={n}");
            }
        }
    }

    #[test]
    fn bracken_tan_tan_admissibility() {
        assert!(bracken_tan_tan(3, 3).is_err());
        assert!(bracken_tan_tan(2, 2).is_err());
        assert!(bracken_tan_tan(2, 1).is_err()); // m/s even
        assert_eq!(bracken_tan_tan(2, 4).unwrap().function.n(), 6);
    }

    #[test]
    fn table_validation_and_file_round_trip() {
        assert!(VectorialFunction::from_table(3, 3, vec![0; 7]).is_err());
        assert!(VectorialFunction::from_table(3, 2, vec![4; 8]).is_err());
        let k = kasami(5, 2).unwrap().function;
        let text = k.to_file_string();
        assert!(text.starts_with("5 5\n"));
        assert_eq!(VectorialFunction::from_file_str(&text).unwrap(), k);
    }

    #[test]
    fn add_and_scale() {
        let a = VectorialFunction::from_exponent(4, 3).unwrap();
        assert!(a.add(&a).unwrap().table().iter().all(|&y| y == 0));
        let s = a.scale(15);
        assert_eq!(s, a);
    }

    fn random_function() -> impl Strategy<Value = VectorialFunction> {
        (3u32..7, any::<u64>()).prop_map(|(n, seed)| {
            use rand::{Rng, SeedableRng};
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let l = rng.gen_range(1..=n);
            let table = (0..1u32 << n).map(|_| rng.gen_range(0..1u32 << l)).collect();
            VectorialFunction::from_table(n, l, table).unwrap()
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn parseval_holds(f in random_function()) {
            prop_assert!(f.walsh_spectrum().parseval_ok);
        }

        #[test]
        fn fast_transform_matches_direct(f in random_function(), picks in proptest::collection::vec((any::<u32>(), any::<u32>()), 50)) {
            for (l, m) in picks {
                let lambda = 1 + l % (f.output_field().size() - 1);
                let mu = m % f.input_field().size();
                prop_assert_eq!(f.walsh_row(lambda)[mu as usize], f.walsh(lambda, mu));
            }
        }

        #[test]
        fn difference_rows_sum_to_field_size(f in random_function()) {
            let t = f.difference_table(1 << 20).unwrap();
            let size = f.input_field().size();
            for a in 1..size {
                prop_assert_eq!(t.row(a).iter().sum::<u32>(), size);
                for x in 0..size {
                    let b = f.eval(x) ^ f.eval(x ^ a);
                    prop_assert!(t.delta(a, b) >= 2);
                }
            }
        }
    }
}
