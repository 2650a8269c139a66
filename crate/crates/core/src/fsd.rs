//! Formally self-dual codes over R: systematic constructions `[I | B]` from
//! symmetric, circulant and bordered circulant blocks, with a monomial
//! witness certifying that each output is equivalent to its dual.
//!
//! For `C = rowspan [I | B]` the dual is `rowspan [-B^T | I]`. If `p` is an
//! involution with `B_{p(j) p(i)} = B_{ij}`, the map
//! `(x, y) ↦ (-y_{p(·)}, x_{p(·)})` sends C onto its dual. The negation is
//! needed for odd q; it preserves Lee weight because Ψ is additive.

use serde::Serialize;

use crate::codes_fq::dual_fq;
use crate::codes_r::{
    code_from_generators, direct_product_codes, dual_r, enumerate_submodules, gray_image_code, LinearCodeR, RingVector,
};
use crate::error::{Error, Result};
use crate::gf::FieldParams;
use crate::linalg::Subspace;
use crate::ring::RingElem;
use crate::wenum::lee_enumerator;

/// Square matrix over R with `A = A^T`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetricMatrixR {
    params: FieldParams,
    rows: Vec<Vec<RingElem>>,
}

impl SymmetricMatrixR {
    pub fn new(params: FieldParams, rows: Vec<Vec<RingElem>>) -> Result<Self> {
        let n = rows.len();
        for (i, r) in rows.iter().enumerate() {
            if r.len() != n {
                return Err(Error::Shape(format!("row {i} has {} entries, expected {n}", r.len())));
            }
            for e in r {
                params.check_same(&e.params())?;
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                if rows[i][j] != rows[j][i] {
                    return Err(Error::NotSymmetric { row: i, col: j });
                }
            }
        }
        Ok(Self { params, rows })
    }

    /// Mirrors the upper triangle (diagonal included) into the lower one.
    pub fn from_upper(params: FieldParams, rows: &[Vec<RingElem>]) -> Result<Self> {
        let n = rows.len();
        let mut out = rows.to_vec();
        for i in 0..n {
            if rows[i].len() != n {
                return Err(Error::Shape(format!("row {i} has {} entries, expected {n}", rows[i].len())));
            }
            for j in 0..i {
                out[i][j] = rows[j][i];
            }
        }
        Self::new(params, out)
    }

    pub fn n(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[Vec<RingElem>] {
        &self.rows
    }

    /// Parses a matrix file: `q=<q> n=<n>` then n rows of ring elements.
    pub fn parse_file(text: &str) -> Result<Self> {
        let mut lines = crate::codes_fq::content_lines(text);
        let header = lines.next().ok_or_else(|| Error::Parse("empty matrix file".into()))?;
        let (params, n) = crate::codes_fq::parse_header(header)?;
        let rows =
            lines.map(|l| RingVector::parse(params, l).map(|v| v.entries().to_vec())).collect::<Result<Vec<_>>>()?;
        if rows.len() != n {
            return Err(Error::Shape(format!("{} rows for n={n}", rows.len())));
        }
        Self::new(params, rows)
    }
}

/// Circulant matrix given by its first row; row i is the right shift of row i - 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CirculantSpecR {
    pub first_row: RingVector,
}

impl CirculantSpecR {
    pub fn new(first_row: RingVector) -> Self {
        Self { first_row }
    }

    pub fn n(&self) -> usize {
        self.first_row.len()
    }

    /// `M_{ij} = m_{(j - i) mod n}`.
    pub fn rows(&self) -> Vec<Vec<RingElem>> {
        let m = self.first_row.entries();
        let n = m.len();
        (0..n).map(|i| (0..n).map(|j| m[(j + n - i) % n]).collect()).collect()
    }
}

/// `[[α, ω … ω], [ω; M]]` with M circulant of order `n - 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BorderedSpecR {
    pub alpha: RingElem,
    pub omega: RingElem,
    pub core: CirculantSpecR,
}

impl BorderedSpecR {
    pub fn n(&self) -> usize {
        self.core.n() + 1
    }

    pub fn rows(&self) -> Vec<Vec<RingElem>> {
        let n = self.n();
        let core = self.core.rows();
        let mut out = vec![vec![self.omega; n]; n];
        out[0][0] = self.alpha;
        for i in 1..n {
            out[i][1..].copy_from_slice(&core[i - 1]);
        }
        out
    }
}

/// Monomial map on 2n coordinates: `out[i] = ±in[perm[i]]`, negated where `negate[i]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PermutationWitness {
    pub perm: Vec<usize>,
    pub negate: Vec<bool>,
}

impl PermutationWitness {
    /// The half-swap built from an involution `p` of `0..n`.
    pub fn from_involution(p: &[usize]) -> Self {
        let n = p.len();
        let mut perm = vec![0; 2 * n];
        let mut negate = vec![false; 2 * n];
        for i in 0..n {
            perm[i] = n + p[i];
            negate[i] = true;
            perm[n + i] = p[i];
        }
        Self { perm, negate }
    }

    pub fn is_valid(&self) -> bool {
        let mut seen = vec![false; self.perm.len()];
        self.negate.len() == self.perm.len()
            && self.perm.iter().all(|&j| j < seen.len() && !std::mem::replace(&mut seen[j], true))
    }

    pub fn apply(&self, x: &RingVector) -> RingVector {
        let e = x.entries();
        let entries =
            self.perm.iter().zip(&self.negate).map(|(&j, &neg)| if neg { e[j].neg() } else { e[j] }).collect();
        RingVector::new(x.params(), entries).expect("entries share params")
    }
}

fn systematic_code(params: FieldParams, b: &[Vec<RingElem>]) -> Result<LinearCodeR> {
    let n = b.len();
    let gens = b
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut e = vec![RingElem::zero(params); n];
            e[i] = RingElem::one(params);
            e.extend_from_slice(row);
            RingVector::new(params, e)
        })
        .collect::<Result<Vec<_>>>()?;
    code_from_generators(params, 2 * n, gens)
}

/// `rowspan [I | A]` with the identity half-swap.
pub fn construction_a(a: &SymmetricMatrixR) -> Result<(LinearCodeR, PermutationWitness)> {
    let p: Vec<usize> = (0..a.n()).collect();
    Ok((systematic_code(a.params, a.rows())?, PermutationWitness::from_involution(&p)))
}

/// Double circulant `rowspan [I | M]`; the witness reverses indices mod n.
pub fn construction_b(m: &CirculantSpecR) -> Result<(LinearCodeR, PermutationWitness)> {
    let n = m.n();
    if n == 0 {
        return Err(Error::Shape("circulant of order 0".into()));
    }
    let p: Vec<usize> = (0..n).map(|i| (n - i) % n).collect();
    Ok((systematic_code(m.first_row.params(), &m.rows())?, PermutationWitness::from_involution(&p)))
}

/// Bordered double circulant; the witness fixes 0 and reverses the core indices.
pub fn construction_c(spec: &BorderedSpecR) -> Result<(LinearCodeR, PermutationWitness)> {
    let params = spec.alpha.params();
    params.check_same(&spec.omega.params())?;
    params.check_same(&spec.core.first_row.params())?;
    let k = spec.core.n();
    if k == 0 {
        return Err(Error::Shape("bordered construction needs a core of order at least 1".into()));
    }
    let p: Vec<usize> = std::iter::once(0).chain((0..k).map(|i| 1 + (k - i) % k)).collect();
    Ok((systematic_code(params, &spec.rows())?, PermutationWitness::from_involution(&p)))
}

/// Certifies `w(C) = C^⊥`.
///
/// When C's generators are `[I | B]`, the companion `[-B^T | I]` must be
/// orthogonal to C with complementary size; otherwise the dual is computed
/// directly. The image of C under `w` is then compared with the dual as a
/// canonical F_q-basis, which is set equality.
pub fn isodual_witness_check(c: &LinearCodeR, w: &PermutationWitness) -> Result<bool> {
    let n2 = c.n();
    if w.perm.len() != n2 || !w.is_valid() {
        return Ok(false);
    }
    let p = c.params();
    let dual = match companion(c)? {
        Some(comp) => {
            let orthogonal = c
                .generators()
                .iter()
                .all(|g| comp.generators().iter().all(|h| g.dot(h).map(|d| d.is_zero()).unwrap_or(false)));
            if !orthogonal || comp.dim_fq() + c.dim_fq() != 3 * n2 {
                return Ok(false);
            }
            comp
        }
        None => dual_r(c)?,
    };
    let mut image = Subspace::zero(p, 3 * n2);
    for b in c.space().basis() {
        image.insert(&w.apply(&RingVector::from_layout(p, b)).to_layout());
    }
    Ok(&image == dual.space())
}

fn companion(c: &LinearCodeR) -> Result<Option<LinearCodeR>> {
    let p = c.params();
    let n2 = c.n();
    let gens = c.generators();
    if !n2.is_multiple_of(2) || gens.len() != n2 / 2 {
        return Ok(None);
    }
    let n = n2 / 2;
    let systematic = gens
        .iter()
        .enumerate()
        .all(|(i, g)| (0..n).all(|j| g.entries()[j] == if i == j { RingElem::one(p) } else { RingElem::zero(p) }));
    if !systematic {
        return Ok(None);
    }
    let rows = (0..n)
        .map(|i| {
            let mut e: Vec<RingElem> = (0..n).map(|j| gens[j].entries()[n + i].neg()).collect();
            e.extend((0..n).map(|j| if i == j { RingElem::one(p) } else { RingElem::zero(p) }));
            RingVector::new(p, e)
        })
        .collect::<Result<Vec<_>>>()?;
    code_from_generators(p, n2, rows).map(Some)
}

/// `C1 × C2`.
pub fn direct_product(c1: &LinearCodeR, c2: &LinearCodeR) -> Result<LinearCodeR> {
    direct_product_codes(c1, c2)
}

/// Lee enumerators of C and C^⊥ coincide.
pub fn is_formally_self_dual(c: &LinearCodeR, budget: u128) -> Result<bool> {
    if 2 * c.dim_fq() != 3 * c.n() {
        return Ok(false);
    }
    Ok(lee_enumerator(c, budget)? == lee_enumerator(&dual_r(c)?, budget)?)
}

/// Some codeword has odd Lee weight.
pub fn is_odd(c: &LinearCodeR, budget: u128) -> Result<bool> {
    Ok(lee_enumerator(c, budget)?.nonzero().any(|(w, _)| w % 2 == 1))
}

/// Hamming enumerators of Ψ(C) and Ψ(C)^⊥ coincide.
pub fn gray_fsd_transfer(c: &LinearCodeR, budget: u128) -> Result<bool> {
    let g = gray_image_code(c);
    let gd = dual_fq(&g);
    Ok(crate::codes_fq::hamming_enumerator_fq(&g, budget)? == crate::codes_fq::hamming_enumerator_fq(&gd, budget)?)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OddFsdSearch {
    pub witness: Option<Vec<RingVector>>,
    pub exhausted: bool,
    pub tested: u64,
    /// `|C| = |C^⊥|` needs `|C|^2 = q^{3n}`, impossible when `3n` is odd.
    pub size_obstruction: bool,
}

/// Looks for a formally self-dual R-submodule of `R^n` with an odd-weight codeword.
pub fn odd_fsd_search(params: FieldParams, n: usize, budget: u128) -> Result<OddFsdSearch> {
    let codes = enumerate_submodules(params, n, false, budget)?;
    let tested = codes.len() as u64;
    let size_obstruction = (3 * n) % 2 == 1;
    for c in codes {
        if is_formally_self_dual(&c, budget)? && is_odd(&c, budget)? {
            return Ok(OddFsdSearch {
                witness: Some(c.generators().to_vec()),
                exhausted: true,
                tested,
                size_obstruction,
            });
        }
    }
    Ok(OddFsdSearch { witness: None, exhausted: true, tested, size_obstruction })
}

/// A reference input whose published form needed repair before use.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Canonicalization {
    pub input: &'static str,
    pub notes: Vec<&'static str>,
}

fn elems(params: FieldParams, row: &[&str]) -> Vec<RingElem> {
    row.iter().map(|s| RingElem::parse(params, s).expect("valid literal")).collect()
}

/// Symmetric 5×5 block over q = 3 whose code has a [30, 15] Gray image.
pub fn symmetric_30_15_input() -> (SymmetricMatrixR, Canonicalization) {
    let p = FieldParams::new(3).expect("prime");
    let published: [[&str; 5]; 5] = [
        ["0", "v", "2+v", "1+2v+2v^2", "2v+2v^2"],
        ["v", "2v+2v^2", "2", "1+v", "1+v^2"],
        ["2+v", "2", "2v^2", "2+v+v^2", "1+2v"],
        ["1+2v+v^2", "1+v", "2+v+v^2", "1", "v"],
        ["2v+2v^2", "1+v^2", "1+2v", "v", "2"],
    ];
    let rows: Vec<Vec<RingElem>> = published.iter().map(|r| elems(p, r)).collect();
    let a = SymmetricMatrixR::from_upper(p, &rows).expect("square");
    let note = Canonicalization {
        input: "symmetric-30-15",
        notes: vec!["upper triangle mirrored: entry (4,1) 1+2v+v^2 replaced by (1,4) entry 1+2v+2v^2"],
    };
    (a, note)
}

/// Circulant of order 5 over q = 5 whose code has a [30, 15] Gray image.
pub fn double_circulant_30_15_input() -> (CirculantSpecR, Canonicalization) {
    let p = FieldParams::new(5).expect("prime");
    let first = elems(p, &["3v+2v^2", "4v", "3+2v", "1+2v+2v^2", "2v+3v^2"]);
    let m = CirculantSpecR::new(RingVector::new(p, first).expect("same params"));
    let note = Canonicalization {
        input: "double-circulant-30-15",
        notes: vec!["rebuilt as the circulant of the first row: published row 5 is not a cyclic shift of row 4"],
    };
    (m, note)
}

/// Bordered circulant of order 4 over q = 3 whose code has a [24, 12] Gray image.
pub fn bordered_24_12_input() -> (BorderedSpecR, Canonicalization) {
    let p = FieldParams::new(3).expect("prime");
    let core = elems(p, &["2", "1+v", "2v^2"]);
    let spec = BorderedSpecR {
        alpha: RingElem::parse(p, "2+v+2v^2").expect("valid"),
        omega: RingElem::parse(p, "2+2v").expect("valid"),
        core: CirculantSpecR::new(RingVector::new(p, core).expect("same params")),
    };
    let note = Canonicalization {
        input: "bordered-24-12",
        notes: vec![
            "core rebuilt from its first row: published entry (3,2) v^2 should be 2v^2",
            "alpha taken as 2+v+2v^2; the published generator matrix shows 2+v+2v",
        ],
    };
    (spec, note)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes_r::{dual_r_with, enumerate_codewords, DualStrategy};
    use crate::linalg::DEFAULT_BUDGET;
    use crate::sample::random_elem;
    use rand::SeedableRng;
    use std::collections::BTreeSet;

    fn fp(q: u32) -> FieldParams {
        FieldParams::new(q).unwrap()
    }

    fn el(q: u32, s: &str) -> RingElem {
        RingElem::parse(fp(q), s).unwrap()
    }

    fn sym(q: u32, rows: &[&[&str]]) -> SymmetricMatrixR {
        SymmetricMatrixR::new(fp(q), rows.iter().map(|r| elems(fp(q), r)).collect()).unwrap()
    }

    fn words(c: &LinearCodeR) -> BTreeSet<Vec<u32>> {
        enumerate_codewords(c, DEFAULT_BUDGET).unwrap().map(|w| w.to_layout()).collect()
    }

    #[test]
    fn construction_a_examples() {
        let (c, w) = construction_a(&sym(3, &[&["0"]])).unwrap();
        assert_eq!(c.size(), Some(27));
        assert!(c.contains(&RingVector::parse(fp(3), "v 0").unwrap()));
        assert!(isodual_witness_check(&c, &w).unwrap());

        let (c, w) = construction_a(&sym(3, &[&["v"]])).unwrap();
        assert_eq!(c.size(), Some(27));
        assert!(isodual_witness_check(&c, &w).unwrap());
        assert!(is_formally_self_dual(&c, DEFAULT_BUDGET).unwrap());
        let dual = dual_r_with(&c, DualStrategy::BruteForce, DEFAULT_BUDGET).unwrap();
        let mapped: BTreeSet<Vec<u32>> =
            enumerate_codewords(&c, DEFAULT_BUDGET).unwrap().map(|x| w.apply(&x).to_layout()).collect();
        assert_eq!(mapped, words(&dual));

        let bad = SymmetricMatrixR::new(fp(3), vec![elems(fp(3), &["0", "1"]), elems(fp(3), &["v", "0"])]);
        assert_eq!(bad, Err(Error::NotSymmetric { row: 0, col: 1 }));
    }

    #[test]
    fn plain_swap_fails_for_odd_q() {
        let (c, w) = construction_a(&sym(3, &[&["v"]])).unwrap();
        let unsigned = PermutationWitness { perm: w.perm.clone(), negate: vec![false; 2] };
        assert!(!isodual_witness_check(&c, &unsigned).unwrap());
        let identity = PermutationWitness { perm: vec![0, 1], negate: vec![false; 2] };
        assert!(!isodual_witness_check(&c, &identity).unwrap());
        let broken = PermutationWitness { perm: vec![0, 0], negate: vec![false; 2] };
        assert!(!isodual_witness_check(&c, &broken).unwrap());
    }

    #[test]
    fn construction_b_examples() {
        let (c, w) = construction_b(&CirculantSpecR::new(RingVector::parse(fp(3), "0 0").unwrap())).unwrap();
        assert!(isodual_witness_check(&c, &w).unwrap());
        assert!(is_formally_self_dual(&c, DEFAULT_BUDGET).unwrap());
        let (c, w) = construction_b(&CirculantSpecR::new(RingVector::parse(fp(3), "1 v").unwrap())).unwrap();
        assert!(isodual_witness_check(&c, &w).unwrap());
        assert!(is_formally_self_dual(&c, DEFAULT_BUDGET).unwrap());
    }

    #[test]
    fn construction_c_examples() {
        let spec = |q: u32, a: &str, o: &str, core: &str| BorderedSpecR {
            alpha: el(q, a),
            omega: el(q, o),
            core: CirculantSpecR::new(RingVector::parse(fp(q), core).unwrap()),
        };
        for s in [spec(3, "0", "0", "0"), spec(3, "1", "v", "1+v")] {
            let (c, w) = construction_c(&s).unwrap();
            assert_eq!(c.n(), 4);
            assert!(isodual_witness_check(&c, &w).unwrap());
            assert!(is_formally_self_dual(&c, DEFAULT_BUDGET).unwrap());
        }
    }

    #[test]
    fn reference_inputs_have_expected_shape() {
        let (a, _) = symmetric_30_15_input();
        assert_eq!(a.rows()[3][0], el(3, "1+2v+2v^2"));
        let (c, w) = construction_a(&a).unwrap();
        let g = gray_image_code(&c);
        assert_eq!((g.n(), g.k()), (30, 15));
        assert!(isodual_witness_check(&c, &w).unwrap());

        let (m, _) = double_circulant_30_15_input();
        let (c, w) = construction_b(&m).unwrap();
        let g = gray_image_code(&c);
        assert_eq!((g.n(), g.k()), (30, 15));
        assert!(isodual_witness_check(&c, &w).unwrap());

        let (b, _) = bordered_24_12_input();
        let rows = b.rows();
        assert_eq!(rows[3][1..], elems(fp(3), &["1+v", "2v^2", "2"])[..]);
        let (c, w) = construction_c(&b).unwrap();
        let g = gray_image_code(&c);
        assert_eq!((g.n(), g.k()), (24, 12));
        assert!(isodual_witness_check(&c, &w).unwrap());
    }

    #[test]
    fn direct_product_examples() {
        let (c, _) = construction_a(&sym(3, &[&["v"]])).unwrap();
        let empty = LinearCodeR::zero(fp(3), 0);
        assert_eq!(direct_product(&c, &empty).unwrap(), c);
        let z = direct_product(&LinearCodeR::zero(fp(3), 2), &LinearCodeR::zero(fp(3), 3)).unwrap();
        assert_eq!(z, LinearCodeR::zero(fp(3), 5));
        let cc = direct_product(&c, &c).unwrap();
        assert_eq!(cc.n(), 4);
        assert!(is_formally_self_dual(&cc, DEFAULT_BUDGET).unwrap());
        let e = lee_enumerator(&c, DEFAULT_BUDGET).unwrap();
        assert_eq!(lee_enumerator(&cc, DEFAULT_BUDGET).unwrap(), e.product(&e).unwrap());
        let d = dual_r(&c).unwrap();
        assert_eq!(dual_r(&cc).unwrap(), direct_product(&d, &d).unwrap());
        assert_eq!(direct_product(&c, &LinearCodeR::zero(fp(2), 1)), Err(Error::ParamMismatch { left: 3, right: 2 }));
    }

    #[test]
    fn odd_fsd_search_small_cases() {
        for q in [2, 3] {
            let r = odd_fsd_search(fp(q), 1, DEFAULT_BUDGET).unwrap();
            assert!(r.exhausted && r.size_obstruction);
            assert_eq!(r.witness, None);
        }
        let r = odd_fsd_search(fp(3), 2, DEFAULT_BUDGET).unwrap();
        assert!(r.exhausted && !r.size_obstruction);
        let (c, _) = construction_a(&sym(3, &[&["v"]])).unwrap();
        assert!(is_odd(&c, DEFAULT_BUDGET).unwrap());
        assert!(r.witness.is_some());
    }

    #[test]
    fn gray_transfer_examples() {
        let (c, _) = construction_a(&sym(3, &[&["v"]])).unwrap();
        assert!(gray_fsd_transfer(&c, DEFAULT_BUDGET).unwrap());
        let sd =
            crate::codes_r::code_from_generators(fp(2), 2, vec![RingVector::parse(fp(2), "1 1").unwrap()]).unwrap();
        assert_eq!(dual_r(&sd).unwrap(), sd);
        assert!(gray_fsd_transfer(&sd, DEFAULT_BUDGET).unwrap());
        // R × 0 has dual 0 × R, a coordinate swap of itself.
        let split =
            crate::codes_r::code_from_generators(fp(3), 2, vec![RingVector::parse(fp(3), "1 0").unwrap()]).unwrap();
        assert!(is_formally_self_dual(&split, DEFAULT_BUDGET).unwrap());
        assert!(gray_fsd_transfer(&split, DEFAULT_BUDGET).unwrap());
        let rep =
            crate::codes_r::code_from_generators(fp(3), 3, vec![RingVector::parse(fp(3), "1 1 1").unwrap()]).unwrap();
        assert!(!is_formally_self_dual(&rep, DEFAULT_BUDGET).unwrap());
        assert!(!gray_fsd_transfer(&rep, DEFAULT_BUDGET).unwrap());
    }

    #[test]
    fn lee_weight_is_negation_invariant() {
        for q in [2, 3, 5] {
            for a in RingElem::all(fp(q)) {
                assert_eq!(a.neg().lee_weight(), a.lee_weight());
            }
        }
    }

    #[test]
    fn random_constructions_are_isodual() {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for q in [3, 5] {
            for n in 1..=3 {
                for _ in 0..20 {
                    let p = fp(q);
                    let mut rows = vec![vec![RingElem::zero(p); n]; n];
                    for i in 0..n {
                        for j in i..n {
                            rows[i][j] = random_elem(&mut rng, p);
                            rows[j][i] = rows[i][j];
                        }
                    }
                    let (c, w) = construction_a(&SymmetricMatrixR::new(p, rows).unwrap()).unwrap();
                    assert!(isodual_witness_check(&c, &w).unwrap());
                    let first = crate::sample::random_vector(&mut rng, p, n);
                    let (c, w) = construction_b(&CirculantSpecR::new(first.clone())).unwrap();
                    assert!(isodual_witness_check(&c, &w).unwrap());
                    let spec = BorderedSpecR {
                        alpha: random_elem(&mut rng, p),
                        omega: random_elem(&mut rng, p),
                        core: CirculantSpecR::new(first),
                    };
                    let (c, w) = construction_c(&spec).unwrap();
                    assert!(isodual_witness_check(&c, &w).unwrap());
                    if q == 3 && n <= 2 {
                        assert!(is_formally_self_dual(&c, DEFAULT_BUDGET).unwrap());
                    }
                }
            }
        }
    }
}
