//! Table-driven arithmetic in GF(p^m) for small primes.
//!
//! Elements are identified by their *code*: the integer whose base-p digits
//! are the coefficients of the element's polynomial representation, least
//! significant digit first. Multiplication goes through log/antilog tables
//! built from a generator of the multiplicative group; addition is digit-wise
//! (plain XOR when p = 2).

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Largest field order accepted by [`FieldTable::new`].
pub const MAX_FIELD_SIZE: u64 = 1 << 24;

// Coefficients least significant first. GF(2^6) uses u^6+u^4+u^3+u+1.
const DEFAULT_MODULI: &[(u32, u32, &[u32])] = &[
    (2, 1, &[1, 1]),
    (2, 2, &[1, 1, 1]),
    (2, 3, &[1, 1, 0, 1]),
    (2, 4, &[1, 1, 0, 0, 1]),
    (2, 5, &[1, 0, 1, 0, 0, 1]),
    (2, 6, &[1, 1, 0, 1, 1, 0, 1]),
    (2, 7, &[1, 1, 0, 0, 0, 0, 0, 1]),
    (2, 8, &[1, 1, 1, 0, 0, 0, 0, 1, 1]),
    (2, 9, &[1, 0, 0, 0, 1, 0, 0, 0, 0, 1]),
    (2, 10, &[1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1]),
    (2, 11, &[1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
    (2, 12, &[1, 1, 1, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1]),
    (2, 13, &[1, 1, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 1]),
    (2, 14, &[1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1]),
    (2, 15, &[1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
    (2, 16, &[1, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1]),
    (2, 17, &[1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
    (2, 18, &[1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
    (2, 19, &[1, 1, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
    (2, 20, &[1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
    (3, 1, &[1, 1]),
    (3, 2, &[2, 1, 1]),
    (3, 3, &[1, 2, 0, 1]),
    (3, 4, &[2, 1, 0, 0, 1]),
    (3, 5, &[1, 2, 0, 0, 0, 1]),
    (3, 6, &[2, 1, 0, 0, 0, 0, 1]),
    (3, 7, &[1, 0, 2, 0, 0, 0, 0, 1]),
    (3, 8, &[2, 0, 0, 1, 0, 0, 0, 0, 1]),
    (3, 9, &[1, 0, 0, 0, 2, 0, 0, 0, 0, 1]),
    (3, 10, &[2, 1, 0, 1, 0, 0, 0, 0, 0, 0, 1]),
    (3, 11, &[1, 0, 2, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
    (3, 12, &[2, 1, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1]),
    (3, 13, &[1, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
    (3, 14, &[2, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
    (3, 15, &[1, 0, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1]),
    (5, 1, &[2, 1]),
    (5, 2, &[2, 1, 1]),
    (5, 3, &[2, 3, 0, 1]),
    (5, 4, &[2, 1, 4, 0, 1]),
    (5, 5, &[2, 4, 0, 0, 0, 1]),
    (5, 6, &[2, 1, 0, 0, 0, 0, 1]),
    (5, 7, &[2, 3, 0, 0, 0, 0, 0, 1]),
    (5, 8, &[3, 1, 4, 0, 0, 0, 0, 0, 1]),
    (5, 9, &[2, 0, 0, 0, 3, 0, 0, 0, 0, 1]),
    (5, 10, &[2, 2, 1, 0, 0, 0, 0, 0, 0, 0, 1]),
    (7, 1, &[2, 1]),
    (7, 2, &[3, 1, 1]),
    (7, 3, &[2, 3, 0, 1]),
    (7, 4, &[3, 1, 6, 0, 1]),
    (7, 5, &[2, 2, 0, 0, 0, 1]),
    (7, 6, &[3, 1, 5, 0, 0, 0, 1]),
    (7, 7, &[2, 6, 0, 0, 0, 0, 0, 1]),
    (7, 8, &[3, 1, 0, 0, 0, 0, 0, 0, 1]),
];

/// The shipped default modulus for `(p, m)`, least significant coefficient first.
pub fn default_modulus(p: u32, m: u32) -> Option<&'static [u32]> {
    DEFAULT_MODULI
        .iter()
        .find(|(pp, mm, _)| *pp == p && *mm == m)
        .map(|(_, _, f)| *f)
}

/// An immutable finite field GF(p^m) with log/antilog tables.
#[derive(Clone)]
pub struct FieldTable {
    p: u32,
    m: u32,
    size: u32,
    modulus: Vec<u32>,
    generator: u32,
    log: Vec<u32>,
    exp: Vec<u32>,
    digit_weight: Vec<u32>,
}

impl fmt::Debug for FieldTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldTable")
            .field("p", &self.p)
            .field("m", &self.m)
            .field("modulus", &self.modulus)
            .field("generator", &self.generator)
            .finish()
    }
}

impl PartialEq for FieldTable {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p
            && self.m == other.m
            && self.modulus == other.modulus
            && self.generator == other.generator
    }
}

impl Eq for FieldTable {}

impl FieldTable {
    /// Builds GF(p^m). With no modulus the shipped primitive polynomial is
    /// used; the generator is the residue class of the polynomial variable.
    pub fn new(p: u32, m: u32, modulus: Option<&[u32]>) -> Result<Self> {
        Self::build(p, m, modulus, None)
    }

    /// Like [`FieldTable::new`] but with an explicit multiplicative generator,
    /// needed when the modulus is irreducible but not primitive.
    pub fn with_generator(p: u32, m: u32, modulus: Option<&[u32]>, generator: u32) -> Result<Self> {
        Self::build(p, m, modulus, Some(generator))
    }

    /// The binary field GF(2^n) with the default modulus.
    pub fn binary(n: u32) -> Result<Self> {
        Self::new(2, n, None)
    }

    fn build(p: u32, m: u32, modulus: Option<&[u32]>, generator: Option<u32>) -> Result<Self> {
        let unsupported = |reason: &str| Error::UnsupportedField { p, m, reason: reason.to_string() };
        if ![2, 3, 5, 7].contains(&p) {
            return Err(unsupported("characteristic must be 2, 3, 5 or 7"));
        }
        if !(1..=20).contains(&m) {
            return Err(unsupported("extension degree must lie in 1..=20"));
        }
        let size = (p as u64).pow(m);
        if size > MAX_FIELD_SIZE {
            return Err(unsupported("field order exceeds 2^24"));
        }
        let modulus: Vec<u32> = match modulus {
            Some(f) => f.to_vec(),
            None => default_modulus(p, m).ok_or_else(|| unsupported("no default modulus"))?.to_vec(),
        };
        if modulus.len() != m as usize + 1 || modulus[m as usize] != 1 {
            return Err(unsupported("modulus must be monic of degree m"));
        }
        if modulus.iter().any(|&c| c >= p) {
            return Err(unsupported("modulus coefficient not reduced mod p"));
        }
        if let Some(factor) = find_factor(&modulus, p) {
            return Err(Error::ReducibleModulus { p, factor: poly_to_string(&factor) });
        }

        let size = size as u32;
        let mut digit_weight = Vec::with_capacity(m as usize);
        let mut w = 1u32;
        for _ in 0..m {
            digit_weight.push(w);
            w = w.wrapping_mul(p);
        }
        let mut field = FieldTable {
            p,
            m,
            size,
            modulus,
            generator: 0,
            log: Vec::new(),
            exp: Vec::new(),
            digit_weight,
        };
        let variable = if m >= 2 { p } else { (p - field.modulus[0]) % p };
        let generator = generator.unwrap_or(variable);
        if generator == 0 || generator >= size {
            return Err(Error::InvalidSymbol { symbol: generator, q: size as u64 });
        }
        field.generator = generator;

        let order = size as usize - 1;
        let mut exp = Vec::with_capacity(order);
        let mut log = vec![u32::MAX; size as usize];
        let mut x = 1u32;
        for k in 0..order {
            if k > 0 && x == 1 {
                return Err(Error::NotPrimitive { order: k as u64, expected: order as u64 });
            }
            exp.push(x);
            log[x as usize] = k as u32;
            x = if generator == variable && m >= 2 {
                field.mul_by_variable(x)
            } else {
                field.slow_mul(x, generator)
            };
        }
        if x != 1 {
            // Only reachable for a non-invertible generator, which cannot occur
            // in a field; keep the exhaustive check honest anyway.
            return Err(Error::NotPrimitive { order: 0, expected: order as u64 });
        }
        field.exp = exp;
        field.log = log;
        Ok(field)
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.m
    }

    /// Number of elements p^m.
    pub fn size(&self) -> u32 {
        self.size
    }

    /// Modulus coefficients, least significant first.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    pub fn generator(&self) -> u32 {
        self.generator
    }

    /// Codes of all elements in increasing order.
    pub fn elements(&self) -> std::ops::Range<u32> {
        0..self.size
    }

    pub fn element(&self, code: u32) -> Result<FieldElement<'_>> {
        if code >= self.size {
            return Err(Error::InvalidSymbol { symbol: code, q: self.size as u64 });
        }
        Ok(FieldElement { code, field: self })
    }

    fn digits(&self, mut x: u32) -> Vec<u32> {
        let mut d = Vec::with_capacity(self.m as usize);
        for _ in 0..self.m {
            d.push(x % self.p);
            x /= self.p;
        }
        d
    }

    fn from_digits(&self, d: &[u32]) -> u32 {
        d.iter().zip(&self.digit_weight).map(|(c, w)| c * w).sum()
    }

    /// Base-p digit `i` of an element code.
    pub fn digit(&self, x: u32, i: u32) -> u32 {
        (x / self.digit_weight[i as usize]) % self.p
    }

    fn mul_by_variable(&self, x: u32) -> u32 {
        let m = self.m;
        if self.p == 2 {
            let mut y = x << 1;
            if y & (1 << m) != 0 {
                let low: u32 = self.modulus[..m as usize]
                    .iter()
                    .enumerate()
                    .map(|(i, &c)| c << i)
                    .sum();
                y = (y ^ (1 << m)) ^ low;
            }
            return y;
        }
        let p = self.p;
        let d = self.digits(x);
        let top = d[m as usize - 1];
        let mut out = vec![0u32; m as usize];
        for i in (1..m as usize).rev() {
            out[i] = d[i - 1];
        }
        for (i, o) in out.iter_mut().enumerate() {
            *o = (*o + p * p - top * self.modulus[i] % p) % p;
        }
        self.from_digits(&out)
    }

    fn slow_mul(&self, a: u32, b: u32) -> u32 {
        let p = self.p;
        let m = self.m as usize;
        let da = self.digits(a);
        let db = self.digits(b);
        let mut prod = vec![0u32; 2 * m];
        for (i, &x) in da.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in db.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % p;
            }
        }
        for deg in (m..2 * m).rev() {
            let c = prod[deg];
            if c != 0 {
                for k in 0..=m {
                    let idx = deg - m + k;
                    prod[idx] = (prod[idx] + p * p - c * self.modulus[k] % p) % p;
                }
            }
        }
        self.from_digits(&prod[..m])
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        if self.p == 2 {
            return a ^ b;
        }
        let p = self.p;
        let (mut a, mut b) = (a, b);
        let mut out = 0;
        for &w in &self.digit_weight {
            out += ((a % p + b % p) % p) * w;
            a /= p;
            b /= p;
        }
        out
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        if self.p == 2 {
            return a;
        }
        let p = self.p;
        let mut a = a;
        let mut out = 0;
        for &w in &self.digit_weight {
            out += ((p - a % p) % p) * w;
            a /= p;
        }
        out
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        let order = self.size as u64 - 1;
        let e = (self.log[a as usize] as u64 + self.log[b as usize] as u64) % order;
        self.exp[e as usize]
    }

    pub fn inv(&self, a: u32) -> Result<u32> {
        if a == 0 {
            return Err(Error::ZeroInverse);
        }
        let order = self.size - 1;
        Ok(self.exp[((order - self.log[a as usize]) % order) as usize])
    }

    /// `a^e`, with `0^0 = 1`; negative exponents require `a != 0`.
    pub fn pow(&self, a: u32, e: i64) -> Result<u32> {
        if a == 0 {
            return match e.cmp(&0) {
                std::cmp::Ordering::Equal => Ok(1),
                std::cmp::Ordering::Greater => Ok(0),
                std::cmp::Ordering::Less => Err(Error::ZeroInverse),
            };
        }
        let order = self.size as i128 - 1;
        let e = (self.log[a as usize] as i128 * e as i128).rem_euclid(order);
        Ok(self.exp[e as usize])
    }

    /// `g^k` for the table generator `g`.
    pub fn exp(&self, k: u64) -> u32 {
        self.exp[(k % (self.size as u64 - 1)) as usize]
    }

    /// Discrete log base the generator; `None` for zero.
    pub fn log(&self, a: u32) -> Option<u32> {
        (a != 0).then(|| self.log[a as usize])
    }

    /// `x^(p^k)`.
    pub fn frobenius(&self, x: u32, k: u32) -> u32 {
        if x == 0 {
            return 0;
        }
        let order = self.size as u64 - 1;
        let mut e = self.log[x as usize] as u64;
        for _ in 0..k {
            e = e * self.p as u64 % order;
        }
        self.exp[e as usize]
    }

    /// Relative trace onto the subfield GF(p^d): `sum_{i < m/d} x^(p^(d i))`.
    pub fn trace(&self, x: u32, target_degree: u32) -> Result<u32> {
        self.check_divisor(target_degree)?;
        let mut acc = 0;
        let mut y = x;
        for _ in 0..self.m / target_degree {
            acc = self.add(acc, y);
            y = self.frobenius(y, target_degree);
        }
        debug_assert_eq!(self.frobenius(acc, target_degree), acc);
        Ok(acc)
    }

    /// Trace of every element, indexed by code. Uses linearity over the
    /// coordinate basis so the cost is linear in the field size.
    pub fn trace_table(&self, target_degree: u32) -> Result<Vec<u32>> {
        self.check_divisor(target_degree)?;
        let basis: Vec<u32> = self
            .digit_weight
            .iter()
            .map(|&w| self.trace(w, target_degree))
            .collect::<Result<_>>()?;
        let mut table = vec![0u32; self.size as usize];
        for x in 1..self.size {
            if self.p == 2 {
                // Peel off the lowest set bit.
                let low = x & x.wrapping_neg();
                let i = low.trailing_zeros() as usize;
                table[x as usize] = table[(x ^ low) as usize] ^ basis[i];
            } else {
                let mut acc = 0;
                for i in 0..self.m {
                    let d = self.digit(x, i);
                    for _ in 0..d {
                        acc = self.add(acc, basis[i as usize]);
                    }
                }
                table[x as usize] = acc;
            }
        }
        Ok(table)
    }

    /// Absolute trace to the prime field, returned as an integer in `0..p`.
    pub fn absolute_trace(&self, x: u32) -> u32 {
        self.trace(x, 1).expect("1 divides m")
    }

    fn check_divisor(&self, d: u32) -> Result<()> {
        if d == 0 || self.m % d != 0 {
            return Err(Error::NonDivisorDegree { target: d, m: self.m });
        }
        Ok(())
    }

    /// Whether `x` lies in the subfield GF(p^d).
    pub fn in_subfield(&self, x: u32, d: u32) -> bool {
        self.frobenius(x, d) == x
    }

    /// The field homomorphism `sub -> self`, as a table indexed by `sub`'s
    /// element codes. The image of `sub`'s polynomial variable is the
    /// smallest-code root of `sub`'s modulus in `self`.
    pub fn embedding_of(&self, sub: &FieldTable) -> Result<Vec<u32>> {
        if sub.p != self.p {
            return Err(Error::FieldMismatch);
        }
        self.check_divisor(sub.m)?;
        let root = self
            .elements()
            .find(|&x| {
                let mut acc = 0;
                for &c in sub.modulus.iter().rev() {
                    acc = self.add(self.mul(acc, x), c);
                }
                acc == 0
            })
            .ok_or_else(|| Error::Inconsistent("subfield modulus has no root".into()))?;
        let powers: Vec<u32> = (0..sub.m).map(|i| self.pow(root, i as i64).unwrap()).collect();
        Ok(sub
            .elements()
            .map(|c| {
                let mut acc = 0;
                for (i, &w) in powers.iter().enumerate() {
                    let d = sub.digit(c, i as u32);
                    acc = self.add(acc, self.mul(d, w));
                }
                acc
            })
            .collect())
    }

    /// Text form `p m c_m ... c_0`.
    pub fn to_text(&self) -> String {
        let mut s = format!("{} {}", self.p, self.m);
        for c in self.modulus.iter().rev() {
            s.push_str(&format!(" {c}"));
        }
        s
    }

    /// Parses `p m [c_m ... c_0]`; a bare `p m` selects the default modulus.
    pub fn from_text(text: &str) -> Result<Self> {
        text.parse()
    }
}

impl FromStr for FieldTable {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let nums: Vec<u32> = s
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<u32>().map_err(|e| Error::Parse(format!("field `{s}`: {e}"))))
            .collect::<Result<_>>()?;
        match nums.as_slice() {
            [p, m] => FieldTable::new(*p, *m, None),
            [p, m, rest @ ..] => {
                if rest.len() != *m as usize + 1 {
                    return Err(Error::Parse(format!(
                        "field `{s}`: expected {} coefficients",
                        m + 1
                    )));
                }
                let modulus: Vec<u32> = rest.iter().rev().copied().collect();
                FieldTable::new(*p, *m, Some(&modulus))
            }
            _ => Err(Error::Parse(format!("field `{s}`: expected `p m [coefficients]`"))),
        }
    }
}

/// A field element tied to its table, with checked arithmetic.
#[derive(Clone, Copy)]
pub struct FieldElement<'f> {
    code: u32,
    field: &'f FieldTable,
}

impl fmt::Debug for FieldElement<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FieldElement({})", self.code)
    }
}

impl PartialEq for FieldElement<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.code == other.code && self.field == other.field
    }
}

impl<'f> FieldElement<'f> {
    pub fn code(&self) -> u32 {
        self.code
    }

    pub fn field(&self) -> &'f FieldTable {
        self.field
    }

    fn same_field(&self, other: &FieldElement<'_>) -> Result<()> {
        if std::ptr::eq(self.field, other.field) || self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn add(self, other: FieldElement<'_>) -> Result<Self> {
        self.same_field(&other)?;
        Ok(FieldElement { code: self.field.add(self.code, other.code), field: self.field })
    }

    pub fn mul(self, other: FieldElement<'_>) -> Result<Self> {
        self.same_field(&other)?;
        Ok(FieldElement { code: self.field.mul(self.code, other.code), field: self.field })
    }

    pub fn pow(self, e: i64) -> Result<Self> {
        Ok(FieldElement { code: self.field.pow(self.code, e)?, field: self.field })
    }

    pub fn inv(self) -> Result<Self> {
        Ok(FieldElement { code: self.field.inv(self.code)?, field: self.field })
    }

    pub fn trace(self, target_degree: u32) -> Result<Self> {
        Ok(FieldElement { code: self.field.trace(self.code, target_degree)?, field: self.field })
    }
}

/// Trial division by every monic polynomial of degree `1..=deg/2`.
fn find_factor(f: &[u32], p: u32) -> Option<Vec<u32>> {
    let n = f.len() - 1;
    for deg in 1..=n / 2 {
        let count = (p as u64).pow(deg as u32);
        for low in 0..count {
            let mut g = Vec::with_capacity(deg + 1);
            let mut r = low;
            for _ in 0..deg {
                g.push((r % p as u64) as u32);
                r /= p as u64;
            }
            g.push(1);
            if poly_rem_is_zero(f, &g, p) {
                return Some(g);
            }
        }
    }
    None
}

fn poly_rem_is_zero(f: &[u32], g: &[u32], p: u32) -> bool {
    let mut r = f.to_vec();
    let dg = g.len() - 1;
    for deg in (dg..r.len()).rev() {
        let c = r[deg];
        if c != 0 {
            for k in 0..=dg {
                let idx = deg - dg + k;
                r[idx] = (r[idx] + p * p - c * g[k] % p) % p;
            }
        }
    }
    r[..dg].iter().all(|&c| c == 0)
}

fn poly_to_string(g: &[u32]) -> String {
    let mut terms = Vec::new();
    for (i, &c) in g.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let coef = if c == 1 && i > 0 { String::new() } else { c.to_string() };
        terms.push(match i {
            0 => coef,
            1 => format!("{coef}u"),
            _ => format!("{coef}u^{i}"),
        });
    }
    terms.join("+")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf64() -> FieldTable {
        FieldTable::new(2, 6, Some(&[1, 1, 0, 1, 1, 0, 1])).unwrap()
    }

    #[test]
    fn worked_example_field_is_primitive() {
        let f = gf64();
        assert_eq!(f.size(), 64);
        assert_eq!(f.generator(), 2);
        assert_eq!(f.pow(2, 63).unwrap(), 1);
        assert_eq!(f, FieldTable::binary(6).unwrap());
    }

    #[test]
    fn prime_fields() {
        let f = FieldTable::new(2, 1, None).unwrap();
        assert_eq!(f.generator(), 1);
        let f = FieldTable::new(7, 1, None).unwrap();
        assert_eq!(f.size(), 7);
        assert_eq!(f.mul(3, 5), 1);
    }

    #[test]
    fn gf27_generator_order_is_26() {
        let f = FieldTable::new(3, 3, None).unwrap();
        let g = f.generator();
        let mut x = g;
        let mut order = 1;
        while x != 1 {
            x = f.mul(x, g);
            order += 1;
        }
        assert_eq!(order, 26);
    }

    #[test]
    fn exponent_arithmetic() {
        let f = gf64();
        let a5 = f.exp(5);
        let a60 = f.exp(60);
        assert_eq!(f.mul(a5, a60), f.exp(2));
        for x in f.elements() {
            assert_eq!(f.add(x, x), 0);
        }
    }

    #[test]
    fn reducible_and_non_primitive_moduli_rejected() {
        // u^4 + 1 = (u + 1)^4
        assert!(matches!(
            FieldTable::new(2, 4, Some(&[1, 0, 0, 0, 1])),
            Err(Error::ReducibleModulus { .. })
        ));
        // u^4+u^3+u^2+u+1 is irreducible but u has order 5.
        let irr_not_prim = [1, 1, 1, 1, 1];
        assert!(matches!(
            FieldTable::new(2, 4, Some(&irr_not_prim)),
            Err(Error::NotPrimitive { order: 5, expected: 15 })
        ));
        // u + 1 = 3 (code for u+1) is primitive there.
        let f = FieldTable::with_generator(2, 4, Some(&irr_not_prim), 3).unwrap();
        assert_eq!(f.size(), 16);
    }

    #[test]
    fn size_budget_and_unsupported() {
        assert!(FieldTable::new(11, 1, None).is_err());
        assert!(FieldTable::new(2, 21, None).is_err());
        assert!(FieldTable::new(7, 9, None).is_err());
    }

    #[test]
    fn inverse_and_errors() {
        let f = FieldTable::new(5, 2, None).unwrap();
        for x in 1..f.size() {
            assert_eq!(f.mul(x, f.inv(x).unwrap()), 1);
        }
        assert_eq!(f.inv(0), Err(Error::ZeroInverse));
        let g = FieldTable::new(5, 1, None).unwrap();
        let a = f.element(3).unwrap();
        let b = g.element(3).unwrap();
        assert_eq!(a.add(b).unwrap_err(), Error::FieldMismatch);
        assert_eq!(a.mul(a).unwrap().code(), f.mul(3, 3));
    }

    #[test]
    fn trace_fibers_to_gf8() {
        let f = gf64();
        let tr = f.trace_table(3).unwrap();
        let mut fibers = std::collections::BTreeMap::new();
        for &t in &tr {
            assert!(f.in_subfield(t, 3));
            *fibers.entry(t).or_insert(0) += 1;
        }
        assert_eq!(fibers.len(), 8);
        assert!(fibers.values().all(|&c| c == 8));
        assert_eq!(f.trace(0, 2).unwrap(), 0);
        assert!(f.trace(5, 4).is_err());
    }

    #[test]
    fn absolute_trace_matches_power_sum() {
        let f = gf64();
        let alpha = f.generator();
        let mut direct = 0;
        for k in 0..6 {
            direct ^= f.pow(alpha, 1 << k).unwrap();
        }
        assert_eq!(direct, f.absolute_trace(alpha));
        let table = f.trace_table(1).unwrap();
        for x in f.elements() {
            assert_eq!(table[x as usize], f.absolute_trace(x));
        }
    }

    #[test]
    fn ternary_trace_table_matches_direct() {
        let f = FieldTable::new(3, 4, None).unwrap();
        let table = f.trace_table(2).unwrap();
        for x in f.elements() {
            assert_eq!(table[x as usize], f.trace(x, 2).unwrap());
        }
    }

    #[test]
    fn frobenius_additive_exhaustive() {
        for (p, m) in [(2, 12), (3, 7), (5, 5), (7, 4)] {
            let f = FieldTable::new(p, m, None).unwrap();
            let step = (f.size() / 211).max(1);
            for x in (0..f.size()).step_by(step as usize) {
                for y in (0..f.size()).step_by(step as usize * 3 + 1) {
                    let lhs = f.frobenius(f.add(x, y), 1);
                    let rhs = f.add(f.frobenius(x, 1), f.frobenius(y, 1));
                    assert_eq!(lhs, rhs);
                }
            }
        }
        let f = FieldTable::new(2, 6, None).unwrap();
        for x in f.elements() {
            for y in f.elements() {
                assert_eq!(f.frobenius(f.add(x, y), 1), f.add(f.frobenius(x, 1), f.frobenius(y, 1)));
            }
        }
    }

    #[test]
    fn every_default_modulus_builds_up_to_2_pow_16() {
        for &(p, m, _) in DEFAULT_MODULI {
            if (p as u64).pow(m) <= 1 << 16 {
                FieldTable::new(p, m, None).unwrap();
            }
        }
    }

    #[test]
    #[ignore = "builds every shipped field up to 2^24 elements"]
    fn every_default_modulus_builds() {
        for &(p, m, _) in DEFAULT_MODULI {
            FieldTable::new(p, m, None).unwrap();
        }
    }

    #[test]
    fn embedding_is_a_homomorphism() {
        let big = gf64();
        let small = FieldTable::binary(3).unwrap();
        let emb = big.embedding_of(&small).unwrap();
        for a in small.elements() {
            assert!(big.in_subfield(emb[a as usize], 3));
            for b in small.elements() {
                assert_eq!(emb[small.mul(a, b) as usize], big.mul(emb[a as usize], emb[b as usize]));
                assert_eq!(emb[small.add(a, b) as usize], big.add(emb[a as usize], emb[b as usize]));
            }
        }
    }

    #[test]
    fn text_form_round_trip() {
        let f: FieldTable = "2 6 1 0 1 1 0 1 1".parse().unwrap();
        assert_eq!(f, gf64());
        assert_eq!(f.to_text(), "2 6 1 0 1 1 0 1 1");
        let g: FieldTable = "3 3".parse().unwrap();
        assert_eq!(g.size(), 27);
        assert!("2 6 1 0".parse::<FieldTable>().is_err());
    }
}
