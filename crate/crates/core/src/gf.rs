//! Prime-field arithmetic and univariate polynomials over F_q.
//!
//! Field elements are plain `u32` residues in `[0, q)` on the hot paths; the
//! [`FieldElem`] wrapper carries its modulus for the checked public API.
//! Polynomials store coefficients lowest degree first and are always
//! normalized (no trailing zero coefficients), so structural equality is
//! polynomial equality.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest modulus accepted; keeps every product of two residues inside `u32`.
pub const MAX_MODULUS: u32 = 65521;

/// Default cap on the number of monic divisors of `x^n - 1` we are willing to list.
pub const DEFAULT_DIVISOR_CAP: u128 = 4096;

/// The prime field F_q.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "u32", into = "u32")]
pub struct FieldParams {
    q: u32,
}

impl TryFrom<u32> for FieldParams {
    type Error = Error;
    fn try_from(q: u32) -> Result<Self> {
        FieldParams::new(q)
    }
}

impl From<FieldParams> for u32 {
    fn from(p: FieldParams) -> u32 {
        p.q
    }
}

fn is_prime(q: u32) -> bool {
    if q < 2 {
        return false;
    }
    let mut d = 2u32;
    while d * d <= q {
        if q.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl FieldParams {
    pub fn new(q: u32) -> Result<Self> {
        if q > MAX_MODULUS || !is_prime(q) {
            return Err(Error::NotPrime(q as u64));
        }
        Ok(Self { q })
    }

    #[inline]
    pub fn q(&self) -> u32 {
        self.q
    }

    #[inline]
    pub fn is_odd(&self) -> bool {
        self.q != 2
    }

    /// Reduces an arbitrary signed integer into `[0, q)`.
    #[inline]
    pub fn reduce(&self, x: i64) -> u32 {
        x.rem_euclid(self.q as i64) as u32
    }

    pub fn elem(&self, x: i64) -> FieldElem {
        FieldElem { value: self.reduce(x), params: *self }
    }

    #[inline]
    pub fn add(&self, a: u32, b: u32) -> u32 {
        let s = a + b;
        if s >= self.q {
            s - self.q
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u32, b: u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + self.q - b
        }
    }

    #[inline]
    pub fn neg(&self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.q - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        a * b % self.q
    }

    pub fn pow(&self, mut base: u32, mut exp: u64) -> u32 {
        let mut acc = 1 % self.q;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse via Fermat's little theorem.
    pub fn inv(&self, a: u32) -> Result<u32> {
        if a.is_multiple_of(self.q) {
            return Err(Error::DivisionByZero);
        }
        Ok(self.pow(a, (self.q - 2) as u64))
    }

    /// `-1 mod q`.
    #[inline]
    pub fn minus_one(&self) -> u32 {
        self.q - 1
    }

    /// The inverse of 2, available only in odd characteristic.
    pub fn half(&self) -> Result<u32> {
        if !self.is_odd() {
            return Err(Error::CharacteristicTwoUnsupported);
        }
        Ok(self.q.div_ceil(2))
    }

    pub fn check_same(&self, other: &FieldParams) -> Result<()> {
        if self.q != other.q {
            Err(Error::ParamMismatch { left: self.q, right: other.q })
        } else {
            Ok(())
        }
    }
}

/// An element of F_q that remembers its modulus.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FieldElem {
    value: u32,
    params: FieldParams,
}

impl FieldElem {
    pub fn new(params: FieldParams, value: u32) -> Result<Self> {
        if value >= params.q {
            return Err(Error::InvalidArgument(format!("value {value} out of range for q={}", params.q)));
        }
        Ok(Self { value, params })
    }

    #[inline]
    pub fn value(&self) -> u32 {
        self.value
    }

    #[inline]
    pub fn params(&self) -> FieldParams {
        self.params
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldOp {
    Add,
    Sub,
    Mul,
    Inv,
    Neg,
}

/// Checked field arithmetic. Binary operations require `b`; unary ones ignore it.
pub fn field_arith(op: FieldOp, a: FieldElem, b: Option<FieldElem>) -> Result<FieldElem> {
    let p = a.params;
    let rhs = || -> Result<u32> {
        let b = b.ok_or_else(|| Error::InvalidArgument("binary operation needs two operands".into()))?;
        p.check_same(&b.params)?;
        Ok(b.value)
    };
    let value = match op {
        FieldOp::Add => p.add(a.value, rhs()?),
        FieldOp::Sub => p.sub(a.value, rhs()?),
        FieldOp::Mul => p.mul(a.value, rhs()?),
        FieldOp::Neg => p.neg(a.value),
        FieldOp::Inv => p.inv(a.value)?,
    };
    Ok(FieldElem { value, params: p })
}

/// A polynomial over F_q, coefficients lowest degree first.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    coeffs: Vec<u32>,
    params: FieldParams,
}

impl Polynomial {
    /// Builds a polynomial from raw coefficients (reduced mod q), lowest degree first.
    pub fn new(params: FieldParams, coeffs: impl IntoIterator<Item = u32>) -> Self {
        let coeffs = coeffs.into_iter().map(|c| c % params.q).collect();
        let mut p = Self { coeffs, params };
        p.normalize();
        p
    }

    pub fn zero(params: FieldParams) -> Self {
        Self { coeffs: Vec::new(), params }
    }

    pub fn one(params: FieldParams) -> Self {
        Self::monomial(params, 1, 0)
    }

    pub fn monomial(params: FieldParams, c: u32, k: usize) -> Self {
        let mut coeffs = vec![0; k + 1];
        coeffs[k] = c % params.q;
        Self::new(params, coeffs)
    }

    /// `x^n - 1`.
    pub fn xn_minus_1(params: FieldParams, n: usize) -> Self {
        let mut coeffs = vec![0; n + 1];
        coeffs[0] = params.minus_one();
        coeffs[n] = 1;
        Self::new(params, coeffs)
    }

    fn normalize(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    pub fn params(&self) -> FieldParams {
        self.params
    }

    pub fn coeffs(&self) -> &[u32] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, k: usize) -> u32 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    pub fn leading(&self) -> u32 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == 1
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.params.check_same(&other.params)?;
        let p = self.params;
        let len = self.coeffs.len().max(other.coeffs.len());
        Ok(Self::new(p, (0..len).map(|k| p.add(self.coeff(k), other.coeff(k)))))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.params.check_same(&other.params)?;
        let p = self.params;
        let len = self.coeffs.len().max(other.coeffs.len());
        Ok(Self::new(p, (0..len).map(|k| p.sub(self.coeff(k), other.coeff(k)))))
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.params.check_same(&other.params)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero(self.params));
        }
        let p = self.params;
        let mut out = vec![0u32; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = p.add(out[i + j], p.mul(a, b));
            }
        }
        Ok(Self::new(p, out))
    }

    pub fn scale(&self, c: u32) -> Self {
        let p = self.params;
        Self::new(p, self.coeffs.iter().map(|&a| p.mul(a, c)))
    }

    /// Scales to a monic polynomial; the zero polynomial is returned unchanged.
    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.params.inv(self.leading()).expect("leading coefficient is nonzero");
        self.scale(inv)
    }

    /// Euclidean division: returns `(quotient, remainder)` with `deg r < deg b`.
    pub fn divmod(&self, b: &Self) -> Result<(Self, Self)> {
        self.params.check_same(&b.params)?;
        let p = self.params;
        let db = b.degree().ok_or(Error::DivisionByZero)?;
        let lead_inv = p.inv(b.leading())?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= db {
            return Ok((Self::zero(p), self.clone()));
        }
        let mut quot = vec![0u32; rem.len() - db];
        for k in (0..quot.len()).rev() {
            let c = p.mul(rem[k + db], lead_inv);
            quot[k] = c;
            if c == 0 {
                continue;
            }
            for (j, &bj) in b.coeffs.iter().enumerate() {
                rem[k + j] = p.sub(rem[k + j], p.mul(c, bj));
            }
        }
        rem.truncate(db);
        Ok((Self::new(p, quot), Self::new(p, rem)))
    }

    pub fn divides(&self, other: &Self) -> Result<bool> {
        Ok(other.divmod(self)?.1.is_zero())
    }

    pub fn eval(&self, x: u32) -> u32 {
        let p = self.params;
        self.coeffs.iter().rev().fold(0, |acc, &c| p.add(p.mul(acc, x), c))
    }

    /// Monic reciprocal `x^deg h(1/x) / h(0)`; requires `h(0) != 0`.
    pub fn monic_reciprocal(&self) -> Result<Self> {
        if self.coeff(0) == 0 {
            return Err(Error::InvalidArgument("reciprocal needs a nonzero constant term".into()));
        }
        let rev = Self::new(self.params, self.coeffs.iter().rev().copied());
        Ok(rev.monic())
    }

    /// Parses the `c*x^k + ...` grammar; coefficients must lie in `[0, q)`.
    pub fn parse(params: FieldParams, text: &str) -> Result<Self> {
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut acc: BTreeMap<usize, i64> = BTreeMap::new();
        for (negative, term) in split_signed_terms(&s)? {
            let (c, k) = parse_poly_term(params, term)?;
            let c = if negative { -(c as i64) } else { c as i64 };
            *acc.entry(k).or_insert(0) += c;
        }
        let deg = acc.keys().next_back().copied().unwrap_or(0);
        let mut coeffs = vec![0u32; deg + 1];
        for (k, c) in acc {
            coeffs[k] = params.reduce(c);
        }
        Ok(Self::new(params, coeffs))
    }
}

/// Splits `a+b-c` into signed terms, rejecting empty terms.
pub(crate) fn split_signed_terms(s: &str) -> Result<Vec<(bool, &str)>> {
    let mut out = Vec::new();
    let mut start = 0;
    let mut negative = false;
    let bytes = s.as_bytes();
    for i in 0..=bytes.len() {
        if i == bytes.len() || ((bytes[i] == b'+' || bytes[i] == b'-') && i > 0) {
            let term = &s[start..i];
            if term.is_empty() {
                return Err(Error::Parse(format!("empty term in '{s}'")));
            }
            out.push((negative, term));
            if i < bytes.len() {
                negative = bytes[i] == b'-';
                start = i + 1;
            }
        } else if i == 0 && (bytes[0] == b'-' || bytes[0] == b'+') {
            negative = bytes[0] == b'-';
            start = 1;
        }
    }
    Ok(out)
}

pub(crate) fn parse_coeff(params: FieldParams, s: &str) -> Result<u32> {
    let c: u64 = s.parse().map_err(|_| Error::Parse(format!("bad coefficient '{s}'")))?;
    if c >= params.q as u64 {
        return Err(Error::Parse(format!("coefficient {c} not in [0, {})", params.q)));
    }
    Ok(c as u32)
}

fn parse_poly_term(params: FieldParams, term: &str) -> Result<(u32, usize)> {
    let Some(pos) = term.find('x') else {
        return Ok((parse_coeff(params, term)?, 0));
    };
    let (coef, rest) = term.split_at(pos);
    let coef = coef.strip_suffix('*').unwrap_or(coef);
    let c = if coef.is_empty() { 1 } else { parse_coeff(params, coef)? };
    let rest = &rest[1..];
    let k = if rest.is_empty() {
        1
    } else {
        let e = rest.strip_prefix('^').ok_or_else(|| Error::Parse(format!("bad term '{term}'")))?;
        e.parse().map_err(|_| Error::Parse(format!("bad exponent in '{term}'")))?
    };
    Ok((c, k))
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, "+")?;
            }
            first = false;
            match (k, c) {
                (0, c) => write!(f, "{c}")?,
                (1, 1) => write!(f, "x")?,
                (1, c) => write!(f, "{c}*x")?,
                (k, 1) => write!(f, "x^{k}")?,
                (k, c) => write!(f, "{c}*x^{k}")?,
            }
        }
        Ok(())
    }
}

impl Serialize for Polynomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Calls `f` on every monic polynomial of exact degree `d`.
fn for_each_monic(params: FieldParams, d: usize, mut f: impl FnMut(&Polynomial) -> bool) {
    let q = params.q;
    let mut coeffs = vec![0u32; d + 1];
    coeffs[d] = 1;
    loop {
        let poly = Polynomial { coeffs: coeffs.clone(), params };
        if !f(&poly) {
            return;
        }
        let mut i = 0;
        loop {
            if i == d {
                return;
            }
            coeffs[i] += 1;
            if coeffs[i] < q {
                break;
            }
            coeffs[i] = 0;
            i += 1;
        }
    }
}

/// `(a div b, a mod b)`; errors on a zero divisor.
pub fn poly_divmod(a: &Polynomial, b: &Polynomial) -> Result<(Polynomial, Polynomial)> {
    a.divmod(b)
}

/// Factors `x^n - 1` into monic irreducibles (with multiplicity), sorted by
/// degree then coefficients.
///
/// Trial division by monic polynomials of increasing degree: any divisor found
/// at degree `d` is irreducible because all smaller factors were already
/// removed, and once `deg(rest) < 2d` the remaining cofactor is irreducible.
pub fn factor_xn_minus_1(params: FieldParams, n: usize) -> Result<Vec<Polynomial>> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be positive".into()));
    }
    let mut rest = Polynomial::xn_minus_1(params, n);
    let mut factors = Vec::new();
    let mut d = 1;
    while rest.degree().unwrap_or(0) >= 2 * d {
        let mut found = Vec::new();
        for_each_monic(params, d, |cand| {
            while let Ok((quot, rem)) = rest.divmod(cand) {
                if !rem.is_zero() {
                    break;
                }
                rest = quot;
                found.push(cand.clone());
            }
            rest.degree().unwrap_or(0) >= d
        });
        factors.extend(found);
        d += 1;
    }
    if rest.degree().unwrap_or(0) >= 1 {
        factors.push(rest.monic());
    }
    factors.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.coeffs.cmp(&b.coeffs)));
    Ok(factors)
}

/// Groups a factor multiset into `(irreducible, multiplicity)` pairs.
pub fn group_factors(factors: &[Polynomial]) -> Vec<(Polynomial, usize)> {
    let mut out: Vec<(Polynomial, usize)> = Vec::new();
    for f in factors {
        match out.iter_mut().find(|(g, _)| g == f) {
            Some((_, m)) => *m += 1,
            None => out.push((f.clone(), 1)),
        }
    }
    out
}

/// Every monic divisor of `x^n - 1`, ordered by degree then coefficients.
pub fn monic_divisors_of_xn_minus_1(params: FieldParams, n: usize, cap: u128) -> Result<Vec<Polynomial>> {
    let grouped = group_factors(&factor_xn_minus_1(params, n)?);
    let count = grouped.iter().try_fold(1u128, |acc, (_, m)| acc.checked_mul(*m as u128 + 1)).unwrap_or(u128::MAX);
    crate::error::check_budget(count, cap)?;
    let mut divisors = vec![Polynomial::one(params)];
    for (f, m) in &grouped {
        let mut next = Vec::with_capacity(divisors.len() * (m + 1));
        for d in &divisors {
            let mut cur = d.clone();
            next.push(cur.clone());
            for _ in 0..*m {
                cur = cur.mul(f)?;
                next.push(cur.clone());
            }
        }
        divisors = next;
    }
    divisors.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.coeffs.cmp(&b.coeffs)));
    Ok(divisors)
}
