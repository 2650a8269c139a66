//! Linear codes over R = F_q[v]/(v^3 - v).
//!
//! A code is kept as its generator list plus the canonical F_q-basis of the
//! code viewed inside F_q^{3n}. Vectors of R^n are laid out in three
//! coefficient blocks `[a0 | a1 | a2]`, each of length n. Since R is spanned
//! over F_q by 1, v, v^2, the R-span of the generators is the F_q-span of
//! `g, v g, v^2 g`; code size, membership and equality all reduce to linear
//! algebra on that basis.

use std::collections::{HashSet, VecDeque};
use std::fmt;

use serde::Serialize;

use crate::codes_fq::{content_lines, dual_fq, parse_header, LinearCodeFq};
use crate::error::{check_budget, saturating_pow, Error, Result};
use crate::gf::FieldParams;
use crate::linalg::{MatrixFq, Subspace};
use crate::ring::{self, RingElem, Triple};

/// An element of R^n.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RingVector {
    params: FieldParams,
    entries: Vec<RingElem>,
}

impl RingVector {
    pub fn new(params: FieldParams, entries: Vec<RingElem>) -> Result<Self> {
        for e in &entries {
            params.check_same(&e.params())?;
        }
        Ok(Self { params, entries })
    }

    pub fn zero(params: FieldParams, n: usize) -> Self {
        Self { params, entries: vec![RingElem::zero(params); n] }
    }

    /// Embeds an F_q vector as constants.
    pub fn from_field(params: FieldParams, v: &[u32]) -> Self {
        Self { params, entries: v.iter().map(|&a| RingElem::new(params, a, 0, 0)).collect() }
    }

    pub fn from_layout(params: FieldParams, layout: &[u32]) -> Self {
        let n = layout.len() / 3;
        let entries = (0..n).map(|i| RingElem::new(params, layout[i], layout[n + i], layout[2 * n + i])).collect();
        Self { params, entries }
    }

    /// Block layout `[a0 | a1 | a2]`.
    pub fn to_layout(&self) -> Vec<u32> {
        let n = self.entries.len();
        let mut out = vec![0; 3 * n];
        for (i, e) in self.entries.iter().enumerate() {
            let t = e.triple();
            out[i] = t[0];
            out[n + i] = t[1];
            out[2 * n + i] = t[2];
        }
        out
    }

    pub fn params(&self) -> FieldParams {
        self.params
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[RingElem] {
        &self.entries
    }

    pub fn scale(&self, r: &RingElem) -> Result<Self> {
        let entries = self.entries.iter().map(|e| r.checked_mul(e)).collect::<Result<_>>()?;
        Ok(Self { params: self.params, entries })
    }

    /// Euclidean inner product `Σ x_i y_i` in R.
    pub fn dot(&self, other: &RingVector) -> Result<RingElem> {
        self.params.check_same(&other.params)?;
        if self.len() != other.len() {
            return Err(Error::Shape("inner product of vectors with different lengths".into()));
        }
        self.entries
            .iter()
            .zip(&other.entries)
            .try_fold(RingElem::zero(self.params), |acc, (a, b)| acc.checked_add(&a.checked_mul(b)?))
    }

    /// Gray image in block layout `[a0 | a0 + a2 | a1]`.
    pub fn gray(&self) -> Vec<u32> {
        gray_layout(&self.params, &self.to_layout())
    }

    pub fn lee_weight(&self) -> u32 {
        self.entries.iter().map(RingElem::lee_weight).sum()
    }

    pub fn hamming_weight(&self) -> usize {
        self.entries.iter().filter(|e| !e.is_zero()).count()
    }

    /// `(c_{n-1}, c_0, ..., c_{n-2})`.
    pub fn cyclic_shift(&self) -> Self {
        let mut entries = self.entries.clone();
        entries.rotate_right(1);
        Self { params: self.params, entries }
    }

    /// Parses whitespace-separated entries in the element grammar.
    pub fn parse(params: FieldParams, line: &str) -> Result<Self> {
        let entries = split_entries(line).iter().map(|tok| RingElem::parse(params, tok)).collect::<Result<Vec<_>>>()?;
        Ok(Self { params, entries })
    }
}

impl fmt::Display for RingVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries.iter().map(|e| e.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

impl Serialize for RingVector {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Splits a line into element tokens. Whitespace separates entries except
/// inside brackets and next to an operator, so `1 + 2v` stays one entry.
pub(crate) fn split_entries(line: &str) -> Vec<String> {
    let chars: Vec<char> = line.trim().chars().collect();
    let mut out = Vec::new();
    let mut cur = String::new();
    let mut depth = 0usize;
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            let mut j = i;
            while j < chars.len() && chars[j].is_whitespace() {
                j += 1;
            }
            let prev = cur.chars().last();
            let next = chars.get(j).copied();
            let joins = depth > 0
                || matches!(prev, Some('+' | '-' | '*' | '^' | ',' | '['))
                || matches!(next, Some('+' | '-' | '*' | '^' | ',' | ']'));
            if !joins && !cur.is_empty() {
                out.push(std::mem::take(&mut cur));
            }
            i = j;
            continue;
        }
        match c {
            '[' => depth += 1,
            ']' => depth = depth.saturating_sub(1),
            _ => {}
        }
        cur.push(c);
        i += 1;
    }
    if !cur.is_empty() {
        out.push(cur);
    }
    out
}

// Block-layout helpers. `x` always has length 3n.

pub(crate) fn layout_triple(x: &[u32], n: usize, i: usize) -> Triple {
    [x[i], x[n + i], x[2 * n + i]]
}

pub(crate) fn mul_layout(p: &FieldParams, r: &Triple, x: &[u32]) -> Vec<u32> {
    let n = x.len() / 3;
    let mut out = vec![0; 3 * n];
    for i in 0..n {
        let t = ring::mul_triples(p, r, &layout_triple(x, n, i));
        out[i] = t[0];
        out[n + i] = t[1];
        out[2 * n + i] = t[2];
    }
    out
}

pub(crate) fn gray_layout(p: &FieldParams, x: &[u32]) -> Vec<u32> {
    let n = x.len() / 3;
    let mut out = vec![0; 3 * n];
    for i in 0..n {
        out[i] = x[i];
        out[n + i] = p.add(x[i], x[2 * n + i]);
        out[2 * n + i] = x[n + i];
    }
    out
}

pub(crate) fn eval_layout(p: &FieldParams, x: &[u32], t: u32) -> Vec<u32> {
    let n = x.len() / 3;
    (0..n).map(|i| ring::eval_triple(p, &layout_triple(x, n, i), t)).collect()
}

pub(crate) fn shift_layout(x: &[u32]) -> Vec<u32> {
    let n = x.len() / 3;
    let mut out = x.to_vec();
    for b in 0..3 {
        out[b * n..(b + 1) * n].rotate_right(1);
    }
    out
}

pub(crate) fn lee_weight_layout(p: &FieldParams, x: &[u32]) -> u32 {
    let n = x.len() / 3;
    (0..n).map(|i| ring::lee_weight_triple(p, &layout_triple(x, n, i))).sum()
}

/// Layout inner product, as a triple.
pub(crate) fn dot_layout(p: &FieldParams, x: &[u32], y: &[u32]) -> Triple {
    let n = x.len() / 3;
    (0..n).fold([0; 3], |acc, i| {
        ring::add_triples(p, &acc, &ring::mul_triples(p, &layout_triple(x, n, i), &layout_triple(y, n, i)))
    })
}

/// Embeds F_q^n into R^n scaled by `r`: coordinates `r * a_i`.
pub(crate) fn scaled_field_layout(p: &FieldParams, r: &Triple, v: &[u32]) -> Vec<u32> {
    let n = v.len();
    let mut out = vec![0; 3 * n];
    for (i, &a) in v.iter().enumerate() {
        for b in 0..3 {
            out[b * n + i] = p.mul(r[b], a);
        }
    }
    out
}

const V: Triple = [0, 1, 0];
const V2: Triple = [0, 0, 1];

/// A linear code over R: the R-span of its generators.
#[derive(Clone, Debug)]
pub struct LinearCodeR {
    params: FieldParams,
    n: usize,
    gens: Vec<RingVector>,
    space: Subspace,
}

impl PartialEq for LinearCodeR {
    fn eq(&self, other: &Self) -> bool {
        self.params == other.params && self.n == other.n && self.space == other.space
    }
}

impl Eq for LinearCodeR {}

impl std::hash::Hash for LinearCodeR {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.space.hash(state);
    }
}

impl LinearCodeR {
    pub fn zero(params: FieldParams, n: usize) -> Self {
        Self { params, n, gens: Vec::new(), space: Subspace::zero(params, 3 * n) }
    }

    pub fn full(params: FieldParams, n: usize) -> Self {
        let gens = (0..n)
            .map(|i| {
                let mut e = RingVector::zero(params, n);
                e.entries[i] = RingElem::one(params);
                e
            })
            .collect();
        Self { params, n, gens, space: Subspace::full(params, 3 * n) }
    }

    /// Wraps an F_q-subspace of F_q^{3n} that must already be closed under `v`.
    pub fn from_space(params: FieldParams, n: usize, space: Subspace) -> Result<Self> {
        if space.len() != 3 * n {
            return Err(Error::Shape(format!("subspace of length {} for n={n}", space.len())));
        }
        if !space.basis().iter().all(|b| space.contains(&mul_layout(&params, &V, b))) {
            return Err(Error::InvalidArgument("subspace is not an R-submodule".into()));
        }
        // Greedy R-generators: keep a basis vector only if the span so far misses it.
        let mut span = Subspace::zero(params, 3 * n);
        let mut gens = Vec::new();
        for b in space.basis() {
            if !span.contains(b) {
                gens.push(RingVector::from_layout(params, b));
                for r in [[1, 0, 0], V, V2] {
                    span.insert(&mul_layout(&params, &r, b));
                }
            }
        }
        Ok(Self { params, n, gens, space })
    }

    pub fn params(&self) -> FieldParams {
        self.params
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[RingVector] {
        &self.gens
    }

    /// The code as an F_q-subspace of F_q^{3n} in block layout.
    pub fn space(&self) -> &Subspace {
        &self.space
    }

    /// `log_q |C|`.
    pub fn dim_fq(&self) -> usize {
        self.space.dim()
    }

    pub fn size(&self) -> Option<u128> {
        self.space.size()
    }

    pub fn is_zero(&self) -> bool {
        self.space.is_zero()
    }

    pub fn contains(&self, x: &RingVector) -> bool {
        x.len() == self.n && self.space.contains(&x.to_layout())
    }

    pub fn is_subcode_of(&self, other: &LinearCodeR) -> bool {
        self.space.is_subspace_of(&other.space)
    }

    pub fn sum(&self, other: &LinearCodeR) -> Result<LinearCodeR> {
        let space = self.space.sum(&other.space)?;
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ok(Self { params: self.params, n: self.n, gens, space })
    }

    pub fn intersection(&self, other: &LinearCodeR) -> Result<LinearCodeR> {
        Self::from_space(self.params, self.n, self.space.intersection(&other.space)?)
    }

    /// Applies an R-linear coordinate map to every generator.
    pub fn map_generators(&self, f: impl Fn(&RingVector) -> Result<RingVector>) -> Result<LinearCodeR> {
        let gens = self.gens.iter().map(f).collect::<Result<Vec<_>>>()?;
        let n = gens.first().map(RingVector::len).unwrap_or(self.n);
        code_from_generators(self.params, n, gens)
    }
}

/// The R-span of `rows`; every row must have length `n`.
pub fn code_from_generators(params: FieldParams, n: usize, rows: Vec<RingVector>) -> Result<LinearCodeR> {
    let mut space = Subspace::zero(params, 3 * n);
    for (i, g) in rows.iter().enumerate() {
        params.check_same(&g.params)?;
        if g.len() != n {
            return Err(Error::Shape(format!("generator {i} has length {}, expected {n}", g.len())));
        }
        let x = g.to_layout();
        let vx = mul_layout(&params, &V, &x);
        let v2x = mul_layout(&params, &V2, &x);
        space.insert(&x);
        space.insert(&vx);
        space.insert(&v2x);
    }
    Ok(LinearCodeR { params, n, gens: rows, space })
}

/// Every codeword exactly once, in message-lexicographic order.
pub fn enumerate_codewords(c: &LinearCodeR, budget: u128) -> Result<impl Iterator<Item = RingVector> + '_> {
    let p = c.params;
    Ok(c.space.iter(budget)?.map(move |x| RingVector::from_layout(p, &x)))
}

/// Which reading of the component codes a triple carries.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ComponentProvenance {
    /// Projections `a`, `a + b`, `a + b + c` of codewords `a + v b + v^2 c`.
    PaperLiteral,
    /// Evaluations at `v = 1`, `v = -1`, `v = 0`.
    Crt,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentTriple {
    pub c1: LinearCodeFq,
    pub c2: LinearCodeFq,
    pub c3: LinearCodeFq,
    pub provenance: ComponentProvenance,
}

impl ComponentTriple {
    pub fn codes(&self) -> [&LinearCodeFq; 3] {
        [&self.c1, &self.c2, &self.c3]
    }

    /// `|c1| |c2| |c3|` as a power of q.
    pub fn total_dim(&self) -> usize {
        self.c1.k() + self.c2.k() + self.c3.k()
    }
}

/// Images of C under evaluation at `v = 1`, `v = -1`, `v = 0` (in that order).
pub fn components_crt(c: &LinearCodeR) -> Result<ComponentTriple> {
    let p = c.params;
    if !p.is_odd() {
        return Err(Error::CharacteristicTwoUnsupported);
    }
    let eval =
        |t: u32| -> Result<LinearCodeFq> { Ok(LinearCodeFq::from_space(c.space.map(c.n, |x| eval_layout(&p, x, t))?)) };
    Ok(ComponentTriple { c1: eval(1)?, c2: eval(p.minus_one())?, c3: eval(0)?, provenance: ComponentProvenance::Crt })
}

/// Literal projections `a`, `a + b`, `a + b + c` over codewords `a + v b + v^2 c`.
pub fn components_paper(c: &LinearCodeR) -> Result<ComponentTriple> {
    let p = c.params;
    let n = c.n;
    let proj = |take: usize| -> Result<LinearCodeFq> {
        let space =
            c.space.map(n, |x| (0..n).map(|i| (0..take).fold(0, |acc, b| p.add(acc, x[b * n + i]))).collect())?;
        Ok(LinearCodeFq::from_space(space))
    };
    Ok(ComponentTriple { c1: proj(1)?, c2: proj(2)?, c3: proj(3)?, provenance: ComponentProvenance::PaperLiteral })
}

/// How component codes are glued back into an R-code.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CombineMode {
    /// Coefficients `v`, `1 - v`, `1 - v^2`.
    PaperLiteral,
    /// Orthogonal idempotents `e1`, `e2`, `e0`.
    Idempotent,
}

/// Recombines a component triple. Paper-literal mode returns the R-span of
/// `v C1 + (1 - v) C2 + (1 - v^2) C3`; idempotent mode returns `e1 C1 + e2 C2 + e0 C3`.
pub fn combine_components(t: &ComponentTriple, mode: CombineMode) -> Result<LinearCodeR> {
    let p = t.c1.params();
    let n = t.c1.n();
    if t.c2.n() != n || t.c3.n() != n {
        return Err(Error::Shape("component codes of different lengths".into()));
    }
    let coeffs: [Triple; 3] = match mode {
        CombineMode::PaperLiteral => [[0, 1, 0], [1, p.minus_one(), 0], [1, 0, p.minus_one()]],
        CombineMode::Idempotent => ring::idempotents(p)?.map(|e| e.triple()),
    };
    let mut gens = Vec::new();
    for (code, r) in t.codes().into_iter().zip(&coeffs) {
        for b in code.space().basis() {
            gens.push(RingVector::from_layout(p, &scaled_field_layout(&p, r, b)));
        }
    }
    code_from_generators(p, n, gens)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum DualStrategy {
    /// CRT for odd q, linear algebra otherwise.
    Auto,
    /// Componentwise field duals recombined with idempotents (odd q only).
    Crt,
    /// Kernel of the F_q-linear system `x . g = 0` for every generator.
    Linear,
    /// Tests every vector of R^n.
    BruteForce,
}

pub fn dual_r(c: &LinearCodeR) -> Result<LinearCodeR> {
    dual_r_with(c, DualStrategy::Auto, crate::linalg::DEFAULT_BUDGET)
}

pub fn dual_r_with(c: &LinearCodeR, strategy: DualStrategy, budget: u128) -> Result<LinearCodeR> {
    match strategy {
        DualStrategy::Auto if c.params.is_odd() => dual_crt(c),
        DualStrategy::Auto | DualStrategy::Linear => dual_linear(c),
        DualStrategy::Crt => dual_crt(c),
        DualStrategy::BruteForce => dual_brute_force(c, budget),
    }
}

fn dual_crt(c: &LinearCodeR) -> Result<LinearCodeR> {
    let t = components_crt(c)?;
    let dual = ComponentTriple {
        c1: dual_fq(&t.c1),
        c2: dual_fq(&t.c2),
        c3: dual_fq(&t.c3),
        provenance: ComponentProvenance::Crt,
    };
    combine_components(&dual, CombineMode::Idempotent)
}

fn dual_linear(c: &LinearCodeR) -> Result<LinearCodeR> {
    let p = c.params;
    let n = c.n;
    // x . g = Σ x_i g_i; for a fixed g_i = (b0, b1, b2) the coefficients of
    // 1, v, v^2 in x_i g_i are linear in (a0, a1, a2).
    let mut rows = Vec::new();
    for g in c.space.basis() {
        let mut eq = [vec![0u32; 3 * n], vec![0u32; 3 * n], vec![0u32; 3 * n]];
        for i in 0..n {
            let [b0, b1, b2] = layout_triple(g, n, i);
            let b02 = p.add(b0, b2);
            eq[0][i] = b0;
            eq[1][i] = b1;
            eq[1][n + i] = b02;
            eq[1][2 * n + i] = b1;
            eq[2][i] = b2;
            eq[2][n + i] = b1;
            eq[2][2 * n + i] = b02;
        }
        rows.extend(eq);
    }
    if rows.is_empty() {
        return Ok(LinearCodeR::full(p, n));
    }
    let m = MatrixFq::from_rows(p, 3 * n, &rows)?;
    LinearCodeR::from_space(p, n, Subspace::from_matrix(&m.kernel()))
}

fn dual_brute_force(c: &LinearCodeR, budget: u128) -> Result<LinearCodeR> {
    let p = c.params;
    let n = c.n;
    let ambient = Subspace::full(p, 3 * n);
    let gens: Vec<Vec<u32>> = c.gens.iter().map(RingVector::to_layout).collect();
    let mut out = Subspace::zero(p, 3 * n);
    for x in ambient.iter(budget)? {
        if gens.iter().all(|g| dot_layout(&p, &x, g) == [0, 0, 0]) {
            out.insert(&x);
        }
    }
    LinearCodeR::from_space(p, n, out)
}

/// The F_q-code Ψ(C) of length 3n in block layout `[a0 | a0 + a2 | a1]`.
pub fn gray_image_code(c: &LinearCodeR) -> LinearCodeFq {
    let p = c.params;
    let mut space = Subspace::zero(p, 3 * c.n);
    for g in &c.gens {
        let x = g.to_layout();
        for r in [[1, 0, 0], V, V2] {
            space.insert(&gray_layout(&p, &mul_layout(&p, &r, &x)));
        }
    }
    LinearCodeFq::from_space(space)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum DistanceStrategy {
    /// Sum of symbol Lee weights over every codeword.
    Exhaustive,
    /// Minimum Hamming weight of the Gray image.
    GrayImage,
    /// Minimum of the component codes' distances.
    ComponentLemma,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum DistanceProvenance {
    Exhaustive,
    GrayImage,
    /// Not an exact value: the minimum of component distances.
    Lemma5Based(ComponentProvenance),
}

/// Minimum nonzero Lee weight, tagged with how it was obtained.
///
/// The component strategy uses evaluation components for odd q and the
/// literal projections for q = 2; zero components are skipped.
pub fn min_lee_distance(
    c: &LinearCodeR,
    strategy: DistanceStrategy,
    budget: u128,
) -> Result<(usize, DistanceProvenance)> {
    if c.is_zero() {
        return Err(Error::EmptyCode);
    }
    let p = c.params;
    match strategy {
        DistanceStrategy::Exhaustive => {
            let d = c.space.par_fold(
                budget,
                || u32::MAX,
                |best, x| {
                    let w = lee_weight_layout(&p, x);
                    if w > 0 && w < best {
                        w
                    } else {
                        best
                    }
                },
                u32::min,
            )?;
            Ok((d as usize, DistanceProvenance::Exhaustive))
        }
        DistanceStrategy::GrayImage => {
            Ok((gray_image_code(c).space().min_weight(budget)?, DistanceProvenance::GrayImage))
        }
        DistanceStrategy::ComponentLemma => {
            let t = if p.is_odd() { components_crt(c)? } else { components_paper(c)? };
            let mut best = None;
            for code in t.codes() {
                if code.k() == 0 {
                    continue;
                }
                let d = crate::codes_fq::min_distance_fq(code, budget)?;
                best = Some(best.map_or(d, |b: usize| b.min(d)));
            }
            let d = best.ok_or(Error::EmptyCode)?;
            Ok((d, DistanceProvenance::Lemma5Based(t.provenance)))
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DualityClass {
    pub self_orthogonal: bool,
    pub self_dual: bool,
    pub formally_self_dual: bool,
}

pub fn is_self_orthogonal(c: &LinearCodeR) -> bool {
    let p = c.params;
    let gens: Vec<Vec<u32>> = c.gens.iter().map(RingVector::to_layout).collect();
    gens.iter().enumerate().all(|(i, a)| gens[i..].iter().all(|b| dot_layout(&p, a, b) == [0, 0, 0]))
}

/// Self-orthogonality, self-duality and formal self-duality (equal Lee enumerators).
pub fn classify_duality(c: &LinearCodeR, budget: u128) -> Result<DualityClass> {
    let self_orthogonal = is_self_orthogonal(c);
    let self_dual = self_orthogonal && 2 * c.dim_fq() == 3 * c.n;
    let formally_self_dual = if self_dual {
        true
    } else if 2 * c.dim_fq() != 3 * c.n {
        false
    } else {
        let d = dual_r(c)?;
        crate::wenum::lee_enumerator(c, budget)? == crate::wenum::lee_enumerator(&d, budget)?
    };
    Ok(DualityClass { self_orthogonal, self_dual, formally_self_dual })
}

/// Every R-submodule of R^n (cyclic ones only when `cyclic` is set), ordered
/// by size and then canonical basis.
///
/// Principal submodules are found by closing each vector under `v` (and the
/// cyclic shift); every submodule is a sum of principal ones, so the lattice
/// is completed by repeatedly adding principal submodules.
pub fn enumerate_submodules(params: FieldParams, n: usize, cyclic: bool, budget: u128) -> Result<Vec<LinearCodeR>> {
    let len = 3 * n;
    check_budget(saturating_pow(params.q(), len), budget)?;
    let close = |x: &[u32]| -> Subspace {
        let mut s = Subspace::zero(params, len);
        let mut queue = VecDeque::from([x.to_vec()]);
        while let Some(y) = queue.pop_front() {
            if s.insert(&y) {
                queue.push_back(mul_layout(&params, &V, &y));
                if cyclic {
                    queue.push_back(shift_layout(&y));
                }
            }
        }
        s
    };
    let mut principal: HashSet<Subspace> = HashSet::new();
    for x in Subspace::full(params, len).iter(budget)? {
        if x.iter().find(|&&a| a != 0) == Some(&1) {
            principal.insert(close(&x));
        }
    }
    let mut principal: Vec<Subspace> = principal.into_iter().collect();
    principal.sort_by(|a, b| a.dim().cmp(&b.dim()).then_with(|| a.basis().cmp(b.basis())));

    let zero = Subspace::zero(params, len);
    let mut seen: HashSet<Subspace> = HashSet::from([zero.clone()]);
    let mut all = vec![zero];
    let mut i = 0;
    while i < all.len() {
        for pr in &principal {
            let s = all[i].sum(pr)?;
            if seen.insert(s.clone()) {
                check_budget(all.len() as u128 + 1, budget)?;
                all.push(s);
            }
        }
        i += 1;
    }
    all.sort_by(|a, b| a.dim().cmp(&b.dim()).then_with(|| a.basis().cmp(b.basis())));
    all.into_iter().map(|s| LinearCodeR::from_space(params, n, s)).collect()
}

/// Concatenation `C1 × C2`.
pub fn direct_product_codes(c1: &LinearCodeR, c2: &LinearCodeR) -> Result<LinearCodeR> {
    c1.params.check_same(&c2.params)?;
    let p = c1.params;
    let n = c1.n + c2.n;
    let mut gens = Vec::new();
    for g in &c1.gens {
        let mut e = g.entries.clone();
        e.extend(std::iter::repeat_n(RingElem::zero(p), c2.n));
        gens.push(RingVector { params: p, entries: e });
    }
    for g in &c2.gens {
        let mut e = vec![RingElem::zero(p); c1.n];
        e.extend(g.entries.iter().copied());
        gens.push(RingVector { params: p, entries: e });
    }
    code_from_generators(p, n, gens)
}

/// Reads the code file format: `q=<q> n=<n>`, then one generator per line.
pub fn parse_code_file(text: &str) -> Result<LinearCodeR> {
    let mut lines = content_lines(text);
    let (params, n) = parse_header(lines.next().ok_or_else(|| Error::Parse("empty code file".into()))?)?;
    let rows = lines.map(|l| RingVector::parse(params, l)).collect::<Result<Vec<_>>>()?;
    code_from_generators(params, n, rows)
}

pub fn format_code_file(c: &LinearCodeR) -> String {
    let mut out = format!("q={} n={}\n", c.params.q(), c.n);
    for g in &c.gens {
        out.push_str(&g.to_string());
        out.push('\n');
    }
    out
}
