//! The ring R = F_q[v]/(v^3 - v).
//!
//! An element `a0 + a1 v + a2 v^2` is stored as its coefficient triple. Since
//! `v^3 - v = v (v - 1) (v + 1)`, the evaluations at `v = 0, 1, -1` are ring
//! homomorphisms `R -> F_q`; for odd q they jointly give `R ≅ F_q^3`, for q = 2
//! the points 1 and -1 coincide and R is not semisimple.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf::{parse_coeff, split_signed_terms, FieldElem, FieldParams};

/// Raw coefficient triple `(a0, a1, a2)`.
pub type Triple = [u32; 3];

/// `c0 = a0 b0`, `c1 = a0 b1 + a1 b0 + a1 b2 + a2 b1`,
/// `c2 = a0 b2 + a1 b1 + a2 b0 + a2 b2`, after reducing `v^3 -> v`, `v^4 -> v^2`.
#[inline]
pub fn mul_triples(p: &FieldParams, a: &Triple, b: &Triple) -> Triple {
    let q = p.q();
    let c0 = a[0] * b[0] % q;
    let c1 = (a[0] * b[1] % q + a[1] * b[0] % q + a[1] * b[2] % q + a[2] * b[1] % q) % q;
    let c2 = (a[0] * b[2] % q + a[1] * b[1] % q + a[2] * b[0] % q + a[2] * b[2] % q) % q;
    [c0, c1, c2]
}

#[inline]
pub fn add_triples(p: &FieldParams, a: &Triple, b: &Triple) -> Triple {
    [p.add(a[0], b[0]), p.add(a[1], b[1]), p.add(a[2], b[2])]
}

/// `(a0, a0 + a2, a1)`.
#[inline]
pub fn gray_triple(p: &FieldParams, a: &Triple) -> Triple {
    [a[0], p.add(a[0], a[2]), a[1]]
}

#[inline]
pub fn lee_weight_triple(p: &FieldParams, a: &Triple) -> u32 {
    gray_triple(p, a).iter().filter(|&&x| x != 0).count() as u32
}

/// Flat index of a triple, `a0 + q a1 + q^2 a2`; used for complete enumerators.
#[inline]
pub fn triple_index(p: &FieldParams, a: &Triple) -> usize {
    let q = p.q() as usize;
    a[0] as usize + q * a[1] as usize + q * q * a[2] as usize
}

pub fn triple_from_index(p: &FieldParams, idx: usize) -> Triple {
    let q = p.q() as usize;
    [(idx % q) as u32, (idx / q % q) as u32, (idx / (q * q)) as u32]
}

/// An element `a0 + a1 v + a2 v^2` of R.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RingElem {
    coeffs: Triple,
    params: FieldParams,
}

/// The Gray image `(a0, a0 + a2, a1)` of a single symbol.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct GrayTriple(pub [u32; 3]);

impl GrayTriple {
    pub fn hamming_weight(&self) -> u32 {
        self.0.iter().filter(|&&x| x != 0).count() as u32
    }
}

impl fmt::Display for GrayTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{},{}]", self.0[0], self.0[1], self.0[2])
    }
}

impl RingElem {
    /// Builds an element, reducing each coefficient mod q.
    pub fn new(params: FieldParams, a0: u32, a1: u32, a2: u32) -> Self {
        let q = params.q();
        Self { coeffs: [a0 % q, a1 % q, a2 % q], params }
    }

    pub fn from_triple(params: FieldParams, t: Triple) -> Self {
        Self::new(params, t[0], t[1], t[2])
    }

    pub fn zero(params: FieldParams) -> Self {
        Self::new(params, 0, 0, 0)
    }

    pub fn one(params: FieldParams) -> Self {
        Self::new(params, 1, 0, 0)
    }

    pub fn v(params: FieldParams) -> Self {
        Self::new(params, 0, 1, 0)
    }

    pub fn v2(params: FieldParams) -> Self {
        Self::new(params, 0, 0, 1)
    }

    /// Every element of R in index order.
    pub fn all(params: FieldParams) -> impl Iterator<Item = RingElem> {
        let q = params.q() as usize;
        (0..q * q * q).map(move |i| RingElem::from_triple(params, triple_from_index(&params, i)))
    }

    #[inline]
    pub fn triple(&self) -> Triple {
        self.coeffs
    }

    pub fn params(&self) -> FieldParams {
        self.params
    }

    pub fn coeff(&self, i: usize) -> FieldElem {
        FieldElem::new(self.params, self.coeffs[i]).expect("reduced")
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs == [0, 0, 0]
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.params.check_same(&other.params)?;
        Ok(Self { coeffs: add_triples(&self.params, &self.coeffs, &other.coeffs), params: self.params })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        let p = self.params;
        Self { coeffs: self.coeffs.map(|c| p.neg(c)), params: p }
    }

    /// Ring product; fails if the operands live over different fields.
    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.params.check_same(&other.params)?;
        Ok(Self { coeffs: mul_triples(&self.params, &self.coeffs, &other.coeffs), params: self.params })
    }

    pub fn scale(&self, c: u32) -> Self {
        let p = self.params;
        Self { coeffs: self.coeffs.map(|a| p.mul(a, c)), params: p }
    }

    /// Image under the ring map `v -> t`; `t` must be 0, 1 or -1.
    pub fn evaluate(&self, t: u32) -> Result<u32> {
        let p = self.params;
        if t != 0 && t != 1 && t != p.minus_one() {
            return Err(Error::InvalidEvaluationPoint(t));
        }
        Ok(eval_triple(&p, &self.coeffs, t))
    }

    /// `(x(0), x(1), x(-1))`.
    pub fn crt_split(&self) -> (u32, u32, u32) {
        let p = self.params;
        (
            eval_triple(&p, &self.coeffs, 0),
            eval_triple(&p, &self.coeffs, 1),
            eval_triple(&p, &self.coeffs, p.minus_one()),
        )
    }

    /// Inverse of [`crt_split`](Self::crt_split) for odd q.
    ///
    /// With `u0 = x(0)`, `u1 = x(1)`, `u2 = x(-1)`: `a0 = u0`,
    /// `a1 = (u1 - u2)/2`, `a2 = (u1 + u2)/2 - u0`.
    pub fn crt_combine(params: FieldParams, u0: u32, u1: u32, u2: u32) -> Result<Self> {
        let p = params;
        let half = p.half()?;
        let a1 = p.mul(p.sub(u1, u2), half);
        let a2 = p.sub(p.mul(p.add(u1, u2), half), u0);
        Ok(Self::new(p, u0, a1, a2))
    }

    /// Units are exactly the elements with nonzero image at 0, 1 and -1.
    pub fn is_unit(&self) -> bool {
        let (u0, u1, u2) = self.crt_split();
        u0 != 0 && u1 != 0 && u2 != 0
    }

    pub fn gray(&self) -> GrayTriple {
        GrayTriple(gray_triple(&self.params, &self.coeffs))
    }

    pub fn lee_weight(&self) -> u32 {
        self.gray().hamming_weight()
    }

    /// Parses `[a0,a1,a2]` or a sum of `c`, `c v`, `c v^2` terms.
    pub fn parse(params: FieldParams, text: &str) -> Result<Self> {
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        if let Some(inner) = s.strip_prefix('[') {
            let inner = inner.strip_suffix(']').ok_or_else(|| Error::Parse(format!("unterminated triple '{text}'")))?;
            let parts: Vec<&str> = inner.split(',').collect();
            if parts.len() != 3 {
                return Err(Error::Parse(format!("expected three coefficients in '{text}'")));
            }
            let mut t = [0u32; 3];
            for (slot, part) in t.iter_mut().zip(&parts) {
                *slot = parse_coeff(params, part)?;
            }
            return Ok(Self::from_triple(params, t));
        }
        if s.is_empty() {
            return Err(Error::Parse("empty ring element".into()));
        }
        let mut acc = [0i64; 3];
        for (negative, term) in split_signed_terms(&s)? {
            let (c, k) = parse_ring_term(params, term)?;
            acc[k] += if negative { -(c as i64) } else { c as i64 };
        }
        Ok(Self::new(params, params.reduce(acc[0]), params.reduce(acc[1]), params.reduce(acc[2])))
    }
}

#[inline]
pub(crate) fn eval_triple(p: &FieldParams, a: &Triple, t: u32) -> u32 {
    let t2 = p.mul(t, t);
    p.add(a[0], p.add(p.mul(a[1], t), p.mul(a[2], t2)))
}

fn parse_ring_term(params: FieldParams, term: &str) -> Result<(u32, usize)> {
    let Some(pos) = term.find('v') else {
        return Ok((parse_coeff(params, term)?, 0));
    };
    let (coef, rest) = term.split_at(pos);
    let coef = coef.strip_suffix('*').unwrap_or(coef);
    let c = if coef.is_empty() { 1 } else { parse_coeff(params, coef)? };
    let k = match &rest[1..] {
        "" => 1,
        "^2" => 2,
        "^1" => 1,
        "^0" => 0,
        other => return Err(Error::Parse(format!("bad power of v '{other}' in '{term}'"))),
    };
    Ok((c, k))
}

impl fmt::Display for RingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{},{}]", self.coeffs[0], self.coeffs[1], self.coeffs[2])
    }
}

impl Serialize for RingElem {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// `ring_mul` with the checked semantics.
pub fn ring_mul(x: &RingElem, y: &RingElem) -> Result<RingElem> {
    x.checked_mul(y)
}

pub fn gray_symbol(x: &RingElem) -> GrayTriple {
    x.gray()
}

pub fn lee_weight_symbol(x: &RingElem) -> u32 {
    x.lee_weight()
}

pub fn parse_elem(params: FieldParams, text: &str) -> Result<RingElem> {
    RingElem::parse(params, text)
}

/// Canonical `[a0,a1,a2]` form; `parse_elem` reads it back.
pub fn format_elem(x: &RingElem) -> String {
    x.to_string()
}

/// The orthogonal idempotents `(e1, e2, e0)` selecting the components at
/// `v = 1`, `v = -1` and `v = 0`: `e1 = (v + v^2)/2`, `e2 = (v^2 - v)/2`, `e0 = 1 - v^2`.
pub fn idempotents(params: FieldParams) -> Result<[RingElem; 3]> {
    let h = params.half()?;
    let e1 = RingElem::new(params, 0, h, h);
    let e2 = RingElem::new(params, 0, params.neg(h), h);
    let e0 = RingElem::new(params, 1, 0, params.minus_one());
    Ok([e1, e2, e0])
}

/// One row of the published case table for the Lee weight of a symbol.
///
/// Each condition is a predicate on `(a0, a1, a2)`; the final column of the
/// table mixes `a2`, `a0 + a2` and `a0 + a1` conditions, and the rows written
/// as `a0 + a2 = 0 [mod]` never state a modulus (read here as mod q).
#[derive(Clone, Copy, Debug)]
pub struct LeeTableRow {
    pub weight: u32,
    pub a0_zero: bool,
    pub a1_zero: bool,
    pub last: LastCondition,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LastCondition {
    A2Zero,
    A2NonZero,
    A0PlusA2Zero,
    A0PlusA1Zero,
}

impl LeeTableRow {
    pub fn matches(&self, p: &FieldParams, a: &Triple) -> bool {
        (a[0] == 0) == self.a0_zero
            && (a[1] == 0) == self.a1_zero
            && match self.last {
                LastCondition::A2Zero => a[2] == 0,
                LastCondition::A2NonZero => a[2] != 0,
                LastCondition::A0PlusA2Zero => p.add(a[0], a[2]) == 0,
                LastCondition::A0PlusA1Zero => p.add(a[0], a[1]) == 0,
            }
    }

    pub fn describe(&self) -> String {
        let z = |zero: bool, name: &str| if zero { format!("{name}=0") } else { format!("{name}!=0") };
        let last = match self.last {
            LastCondition::A2Zero => "a2=0",
            LastCondition::A2NonZero => "a2!=0",
            LastCondition::A0PlusA2Zero => "a0+a2=0",
            LastCondition::A0PlusA1Zero => "a0+a1=0",
        };
        format!("{}; {}; {}", z(self.a0_zero, "a0"), z(self.a1_zero, "a1"), last)
    }
}

/// The published Lee-weight case table, row by row, kept for auditing only.
/// The weight actually used everywhere is the Hamming weight of the Gray image.
pub const PUBLISHED_LEE_TABLE: [LeeTableRow; 10] = {
    use LastCondition::*;
    const fn row(weight: u32, a0_zero: bool, a1_zero: bool, last: LastCondition) -> LeeTableRow {
        LeeTableRow { weight, a0_zero, a1_zero, last }
    }
    [
        row(0, true, true, A2Zero),
        row(1, true, false, A2Zero),
        row(1, false, false, A2Zero),
        row(1, false, true, A0PlusA2Zero),
        row(1, true, false, A2NonZero),
        row(2, false, true, A0PlusA2Zero),
        row(2, true, false, A2NonZero),
        row(2, false, false, A0PlusA1Zero),
        row(3, false, false, A0PlusA2Zero),
        row(3, false, false, A2Zero),
    ]
};

/// Outcome of comparing one table row with `w_H ∘ Ψ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LeeTableAudit {
    /// 1-based row number.
    pub row: usize,
    pub condition: String,
    pub table_weight: u32,
    pub matching: usize,
    pub agreeing: usize,
    /// Gray weights observed among matching elements.
    pub observed_weights: Vec<u32>,
    pub contradictory: bool,
    /// Other rows with the identical condition but a different weight.
    pub duplicate_of: Vec<usize>,
}

/// Audits every row of [`PUBLISHED_LEE_TABLE`] over all `q^3` symbols.
pub fn audit_lee_table(params: FieldParams) -> Vec<LeeTableAudit> {
    let rows = &PUBLISHED_LEE_TABLE;
    rows.iter()
        .enumerate()
        .map(|(i, row)| {
            let mut matching = 0;
            let mut agreeing = 0;
            let mut observed = Vec::new();
            for x in RingElem::all(params) {
                if row.matches(&params, &x.triple()) {
                    matching += 1;
                    let w = x.lee_weight();
                    if w == row.weight {
                        agreeing += 1;
                    }
                    if !observed.contains(&w) {
                        observed.push(w);
                    }
                }
            }
            observed.sort_unstable();
            let duplicate_of = rows
                .iter()
                .enumerate()
                .filter(|(j, other)| {
                    *j != i
                        && other.a0_zero == row.a0_zero
                        && other.a1_zero == row.a1_zero
                        && other.last == row.last
                        && other.weight != row.weight
                })
                .map(|(j, _)| j + 1)
                .collect();
            LeeTableAudit {
                row: i + 1,
                condition: row.describe(),
                table_weight: row.weight,
                matching,
                agreeing,
                observed_weights: observed,
                contradictory: agreeing != matching,
                duplicate_of,
            }
        })
        .collect()
}

/// Symbols not covered by any table row.
pub fn lee_table_uncovered(params: FieldParams) -> Vec<RingElem> {
    RingElem::all(params).filter(|x| !PUBLISHED_LEE_TABLE.iter().any(|r| r.matches(&params, &x.triple()))).collect()
}
