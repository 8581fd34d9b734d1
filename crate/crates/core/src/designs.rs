//! Block designs from codeword supports.

use std::collections::BTreeMap;
use std::sync::atomic::{AtomicU64, Ordering};

use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::code::LinearCode;
use crate::error::{Error, Result};
use crate::exact::binom;
use crate::{binomial_u128, DEFAULT_DESIGN_STEPS};

/// Largest counter table allocated by the block-side strategy.
const MAX_COUNTERS: u128 = 1 << 27;

/// A multiset of blocks on the points `0..nu`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Design {
    nu: usize,
    blocks: BTreeMap<Vec<u32>, u64>,
}

/// How `is_t_design` counted.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CountStrategy {
    /// Enumerate the t-subsets of every block.
    BlockSide,
    /// Scan every t-subset of points against all blocks.
    PointSide,
}

#[derive(Serialize, Deserialize)]
struct DesignJson {
    nu: usize,
    k: Option<usize>,
    blocks: Vec<Vec<u32>>,
    mult: Vec<u64>,
}

impl Design {
    /// Builds a design; repeated blocks accumulate multiplicity.
    pub fn new<I>(nu: usize, blocks: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<u32>, u64)>,
    {
        let mut map = BTreeMap::new();
        for (mut b, mult) in blocks {
            b.sort_unstable();
            if b.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::Parameter(format!("block {b:?} repeats a point")));
            }
            if let Some(&p) = b.iter().find(|&&p| p as usize >= nu) {
                return Err(Error::CoordinateOutOfRange { coord: p as usize, len: nu });
            }
            if mult > 0 {
                *map.entry(b).or_insert(0) += mult;
            }
        }
        Ok(Design { nu, blocks: map })
    }

    pub fn empty(nu: usize) -> Self {
        Design { nu, blocks: BTreeMap::new() }
    }

    pub fn nu(&self) -> usize {
        self.nu
    }

    /// Distinct blocks with multiplicities, in lexicographic order.
    pub fn blocks(&self) -> &BTreeMap<Vec<u32>, u64> {
        &self.blocks
    }

    pub fn distinct_blocks(&self) -> usize {
        self.blocks.len()
    }

    /// Block count with multiplicity.
    pub fn total_blocks(&self) -> u64 {
        self.blocks.values().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn is_simple(&self) -> bool {
        self.blocks.values().all(|&m| m == 1)
    }

    /// Common block size, `None` if empty or mixed.
    pub fn block_size(&self) -> Option<usize> {
        let mut sizes = self.blocks.keys().map(Vec::len);
        let k = sizes.next()?;
        sizes.all(|s| s == k).then_some(k)
    }

    fn min_block_size(&self) -> usize {
        self.blocks.keys().map(Vec::len).min().unwrap_or(0)
    }

    /// Blocks replaced by their complements.
    pub fn complement(&self) -> Design {
        let blocks = self.blocks.iter().map(|(b, &m)| {
            let comp: Vec<u32> = (0..self.nu as u32).filter(|p| b.binary_search(p).is_err()).collect();
            (comp, m)
        });
        Design::new(self.nu, blocks).expect("complements stay in range")
    }

    /// Complement of a `t-(nu, k, lambda)` design with its declared `lambda`.
    pub fn complement_design(&self, t: usize, lambda: &BigRational) -> Result<(Design, BigRational)> {
        let Some(k) = self.block_size() else {
            return Ok((self.complement(), BigRational::from_integer(0.into())));
        };
        Ok((self.complement(), complement_lambda(self.nu, k, lambda, t)?))
    }

    /// Total multiplicity of blocks containing `t1` and disjoint from `t0`.
    pub fn count_intersection(&self, t0: &[u32], t1: &[u32]) -> u64 {
        self.blocks
            .iter()
            .filter(|(b, _)| {
                t1.iter().all(|p| b.binary_search(p).is_ok()) && t0.iter().all(|p| b.binary_search(p).is_err())
            })
            .map(|(_, &m)| m)
            .sum()
    }

    /// `lambda` if every `t`-subset lies in the same number of blocks
    /// (counted with multiplicity), picking the cheaper counting strategy.
    pub fn is_t_design(&self, t: usize) -> Result<Option<u64>> {
        self.is_t_design_with(t, None, DEFAULT_DESIGN_STEPS).map(|(l, _)| l)
    }

    /// As [`Design::is_t_design`] with an explicit strategy and step budget.
    pub fn is_t_design_with(
        &self,
        t: usize,
        strategy: Option<CountStrategy>,
        budget: u128,
    ) -> Result<(Option<u64>, CountStrategy)> {
        if self.blocks.is_empty() {
            return Ok((Some(0), strategy.unwrap_or(CountStrategy::BlockSide)));
        }
        if t > self.min_block_size() || t > self.nu {
            return Err(Error::Parameter(format!(
                "t = {t} exceeds the smallest block size {}",
                self.min_block_size()
            )));
        }
        let b = self.blocks.len() as u128;
        let subsets = binomial_u128(self.nu as u64, t as u64);
        let block_cost: u128 = self.blocks.keys().map(|k| binomial_u128(k.len() as u64, t as u64)).sum();
        let point_cost = subsets.saturating_mul(b);
        let chosen = strategy.unwrap_or(if block_cost <= point_cost && subsets <= MAX_COUNTERS {
            CountStrategy::BlockSide
        } else {
            CountStrategy::PointSide
        });
        let cost = match chosen {
            CountStrategy::BlockSide => block_cost.max(subsets),
            CountStrategy::PointSide => point_cost,
        };
        if cost > budget {
            return Err(Error::budget(format!("{t}-design check"), cost, budget));
        }
        let lambda = match chosen {
            CountStrategy::BlockSide => {
                if subsets > MAX_COUNTERS {
                    return Err(Error::budget("t-subset counter table", subsets, MAX_COUNTERS));
                }
                self.block_side(t)
            }
            CountStrategy::PointSide => self.point_side(t),
        };
        Ok((lambda, chosen))
    }

    fn block_side(&self, t: usize) -> Option<u64> {
        let table = BinomTable::new(self.nu, t);
        let n = table.get(self.nu, t) as usize;
        let counters: Vec<AtomicU64> = (0..n).map(|_| AtomicU64::new(0)).collect();
        let blocks: Vec<(&Vec<u32>, u64)> = self.blocks.iter().map(|(b, &m)| (b, m)).collect();
        blocks.par_iter().for_each(|(block, mult)| {
            for_each_subset(block, t, |sub| {
                counters[table.rank(sub)].fetch_add(*mult, Ordering::Relaxed);
            });
        });
        let first = counters[0].load(Ordering::Relaxed);
        counters.iter().all(|c| c.load(Ordering::Relaxed) == first).then_some(first)
    }

    fn point_side(&self, t: usize) -> Option<u64> {
        let words = self.nu.div_ceil(64);
        let packed: Vec<(Vec<u64>, u64)> = self
            .blocks
            .iter()
            .map(|(b, &m)| {
                let mut w = vec![0u64; words];
                for &p in b {
                    w[p as usize / 64] |= 1 << (p % 64);
                }
                (w, m)
            })
            .collect();
        let count = |sub: &[u32]| -> u64 {
            packed
                .iter()
                .filter(|(w, _)| sub.iter().all(|&p| (w[p as usize / 64] >> (p % 64)) & 1 == 1))
                .map(|(_, m)| m)
                .sum()
        };
        if t == 0 {
            return Some(self.total_blocks());
        }
        let target = count(&(0..t as u32).collect::<Vec<_>>());
        let points: Vec<u32> = (0..self.nu as u32).collect();
        let ok = (0..=(self.nu - t) as u32).into_par_iter().all(|first| {
            let rest: Vec<u32> = points[first as usize + 1..].to_vec();
            let mut sub = vec![first];
            let mut good = true;
            for_each_subset(&rest, t - 1, |tail| {
                if !good {
                    return;
                }
                sub.truncate(1);
                sub.extend_from_slice(tail);
                good = count(&sub) == target;
            });
            good
        });
        ok.then_some(target)
    }

    /// Design JSON `{nu, k, blocks, mult}`.
    pub fn to_json(&self) -> serde_json::Value {
        let json = DesignJson {
            nu: self.nu,
            k: self.block_size(),
            blocks: self.blocks.keys().cloned().collect(),
            mult: self.blocks.values().copied().collect(),
        };
        serde_json::to_value(json).expect("plain data serializes")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Self> {
        let json: DesignJson =
            serde_json::from_value(value.clone()).map_err(|e| Error::Parse(format!("design: {e}")))?;
        if json.blocks.len() != json.mult.len() {
            return Err(Error::Parse("blocks and mult differ in length".into()));
        }
        if let (Some(k), Some(b)) = (json.k, json.blocks.iter().find(|b| Some(b.len()) != json.k)) {
            return Err(Error::Parse(format!("block {b:?} has size {}, declared k = {k}", b.len())));
        }
        Design::new(json.nu, json.blocks.into_iter().zip(json.mult))
    }
}

/// Support design `B_w(C)`: supports of weight-`w` codewords, each
/// multiplicity divided by `q - 1`.
pub fn support_design(code: &LinearCode, w: usize, budget: u128) -> Result<Design> {
    let q1 = code.q() - 1;
    let supports = code.supports_of_weight(w, budget)?;
    let mut blocks = Vec::with_capacity(supports.len());
    for (b, m) in supports {
        if m % q1 != 0 {
            return Err(Error::NonIntegral(format!("block {b:?} has multiplicity {m}/{q1}")));
        }
        blocks.push((b, m / q1));
    }
    Design::new(code.length(), blocks)
}

/// Support design of weight-`w` words of the dual, found by low-weight
/// search so the dual is never enumerated in full.
pub fn dual_support_design(code: &LinearCode, w: usize, budget: u128) -> Result<Design> {
    let words = code.dual_words_of_weight(w, budget)?;
    let blocks = words.into_iter().map(|word| (word.into_iter().map(|(i, _)| i).collect(), 1u64));
    Design::new(code.length(), blocks)
}

/// `lambda(t0, t1) = C(nu - t0 - t1, k - t1) / C(nu - t, k - t) * lambda`.
pub fn intersection_number(
    nu: usize,
    k: usize,
    lambda: &BigRational,
    t: usize,
    t0: usize,
    t1: usize,
) -> Result<BigRational> {
    if t0 + t1 > t || t > k || k > nu {
        return Err(Error::Parameter(format!(
            "need t0 + t1 <= t <= k <= nu, got t0={t0}, t1={t1}, t={t}, k={k}, nu={nu}"
        )));
    }
    let num = binom((nu - t0 - t1) as i64, (k - t1) as i64);
    let den = binom((nu - t) as i64, (k - t) as i64);
    Ok(lambda * BigRational::new(num, den))
}

/// `lambda` of the complementary design: `C(nu-t, k) / C(nu-t, k-t) * lambda`.
pub fn complement_lambda(nu: usize, k: usize, lambda: &BigRational, t: usize) -> Result<BigRational> {
    if t > k || k + t > nu {
        return Err(Error::Parameter(format!("need t <= k <= nu - t, got t={t}, k={k}, nu={nu}")));
    }
    let num = binom((nu - t) as i64, k as i64);
    let den = binom((nu - t) as i64, (k - t) as i64);
    Ok(lambda * BigRational::new(num, den))
}

/// `lambda` of a `(nu-k)`-design with large blocks viewed as a `t`-design:
/// `C(nu-t, nu-k) / C(nu-t, k-t) * lambda`.
pub fn promoted_lambda(nu: usize, k: usize, lambda: &BigRational, t: usize) -> Result<BigRational> {
    if k > nu || nu - k < 1 || nu - k > t || t > k {
        return Err(Error::Parameter(format!("need 1 <= nu - k <= t <= k, got nu={nu}, k={k}, t={t}")));
    }
    let num = binom((nu - t) as i64, (nu - k) as i64);
    let den = binom((nu - t) as i64, (k - t) as i64);
    Ok(lambda * BigRational::new(num, den))
}

/// Largest `w <= nu` with `w - floor((w + q - 2) / (q - 1)) < d`; below this
/// weight, support designs of a code with minimum distance `d` are simple.
pub fn simplicity_w(q: u64, d: u64, nu: u64) -> u64 {
    (0..=nu).rev().find(|&w| w - (w + q - 2) / (q - 1) < d).unwrap_or(0)
}

/// The expected `lambda` of a `t`-design with `b` blocks of size `k`:
/// `b C(k, t) / C(nu, t)`.
pub fn expected_lambda(b: u64, nu: usize, k: usize, t: usize) -> BigRational {
    BigRational::new(
        BigInt::from(b) * binom(k as i64, t as i64),
        binom(nu as i64, t as i64),
    )
}

struct BinomTable {
    k: usize,
    table: Vec<u64>,
}

impl BinomTable {
    fn new(n: usize, k: usize) -> Self {
        let mut table = vec![0u64; (n + 1) * (k + 1)];
        for i in 0..=n {
            table[i * (k + 1)] = 1;
            for j in 1..=k.min(i) {
                let a = table[(i - 1) * (k + 1) + j - 1];
                let b = if j <= i - 1 { table[(i - 1) * (k + 1) + j] } else { 0 };
                table[i * (k + 1) + j] = a.saturating_add(b);
            }
        }
        BinomTable { k, table }
    }

    fn get(&self, n: usize, j: usize) -> u64 {
        if j > self.k || j > n {
            return 0;
        }
        self.table[n * (self.k + 1) + j]
    }

    /// Colex rank of a sorted subset.
    fn rank(&self, sub: &[u32]) -> usize {
        sub.iter().enumerate().map(|(i, &c)| self.get(c as usize, i + 1) as usize).sum()
    }
}

/// Calls `f` with every `t`-subset of the sorted slice, in lexicographic order.
pub(crate) fn for_each_subset(items: &[u32], t: usize, mut f: impl FnMut(&[u32])) {
    let n = items.len();
    if t > n {
        return;
    }
    let mut idx: Vec<usize> = (0..t).collect();
    let mut buf: Vec<u32> = idx.iter().map(|&i| items[i]).collect();
    loop {
        f(&buf);
        let Some(i) = (0..t).rev().find(|&i| idx[i] != i + n - t) else { return };
        idx[i] += 1;
        for j in i + 1..t {
            idx[j] = idx[j - 1] + 1;
        }
        for j in i..t {
            buf[j] = items[idx[j]];
        }
    }
}
