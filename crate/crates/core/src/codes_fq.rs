//! Classical linear codes over F_q.

use std::fmt::Write as _;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::gf::{monic_divisors_of_xn_minus_1, FieldParams, Polynomial, DEFAULT_DIVISOR_CAP};
use crate::linalg::{MatrixFq, Subspace};
use crate::wenum::{WeightEnumerator, WeightKind};

/// A linear `[n, k]` code over F_q held by its reduced row-echelon generator matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LinearCodeFq {
    space: Subspace,
}

impl LinearCodeFq {
    pub fn from_space(space: Subspace) -> Self {
        Self { space }
    }

    /// The row space of `m`.
    pub fn from_generator(m: &MatrixFq) -> Self {
        Self { space: Subspace::from_matrix(m) }
    }

    pub fn from_rows(params: FieldParams, n: usize, rows: &[Vec<u32>]) -> Result<Self> {
        Ok(Self { space: Subspace::from_vectors(params, n, rows)? })
    }

    pub fn zero(params: FieldParams, n: usize) -> Self {
        Self { space: Subspace::zero(params, n) }
    }

    pub fn full(params: FieldParams, n: usize) -> Self {
        Self { space: Subspace::full(params, n) }
    }

    pub fn params(&self) -> FieldParams {
        self.space.params()
    }

    pub fn n(&self) -> usize {
        self.space.len()
    }

    pub fn k(&self) -> usize {
        self.space.dim()
    }

    pub fn space(&self) -> &Subspace {
        &self.space
    }

    /// Generator matrix in reduced row-echelon form, `k x n`.
    pub fn generator(&self) -> MatrixFq {
        self.space.to_matrix()
    }

    pub fn contains(&self, word: &[u32]) -> bool {
        self.space.contains(word)
    }

    pub fn size(&self) -> Option<u128> {
        self.space.size()
    }
}

/// Reduced row-echelon form and rank.
pub fn rref(m: &MatrixFq) -> (MatrixFq, usize) {
    m.rref()
}

pub fn dual_fq(c: &LinearCodeFq) -> LinearCodeFq {
    LinearCodeFq { space: c.space.dual() }
}

/// Exact minimum Hamming distance by enumerating all `q^k` codewords.
pub fn min_distance_fq(c: &LinearCodeFq, budget: u128) -> Result<usize> {
    c.space.min_weight(budget)
}

pub fn hamming_enumerator_fq(c: &LinearCodeFq, budget: u128) -> Result<WeightEnumerator> {
    let counts = c.space.weight_distribution(budget)?;
    Ok(WeightEnumerator::new(WeightKind::Hamming, c.n(), c.params().q() as u64, counts))
}

/// `(c_{n-1}, c_0, ..., c_{n-2})`.
pub fn cyclic_shift(word: &[u32]) -> Vec<u32> {
    let mut out = word.to_vec();
    out.rotate_right(1);
    out
}

fn check_divisor(g: &Polynomial, n: usize) -> Result<()> {
    if g.is_zero() || !g.divides(&Polynomial::xn_minus_1(g.params(), n))? {
        return Err(Error::NotADivisor { n });
    }
    Ok(())
}

/// The cyclic code generated by `g | x^n - 1`, of dimension `n - deg g`.
pub fn cyclic_code_fq(g: &Polynomial, n: usize) -> Result<LinearCodeFq> {
    check_divisor(g, n)?;
    let p = g.params();
    let deg = g.degree().expect("nonzero divisor");
    let rows: Vec<Vec<u32>> = (0..n - deg)
        .map(|shift| {
            let mut row = vec![0u32; n];
            for (i, &c) in g.coeffs().iter().enumerate() {
                row[i + shift] = c;
            }
            row
        })
        .collect();
    LinearCodeFq::from_rows(p, n, &rows)
}

/// Whether the row space is closed under one cyclic shift.
pub fn is_cyclic_fq(c: &LinearCodeFq) -> bool {
    c.space.basis().iter().all(|b| c.contains(&cyclic_shift(b)))
}

/// Generator of the dual of `<g>`: the monic reciprocal of `h = (x^n - 1)/g`.
pub fn cyclic_dual_generator(g: &Polynomial, n: usize) -> Result<Polynomial> {
    check_divisor(g, n)?;
    let (h, _) = Polynomial::xn_minus_1(g.params(), n).divmod(g)?;
    h.monic_reciprocal()
}

/// Result of the self-dual cyclic existence check over F_q.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SelfDualCyclicVerdict {
    /// Closed-form answer: q even and n even.
    pub criterion: bool,
    /// Exhaustive search over monic divisors, when it was run.
    pub audit: Option<CyclicAudit>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CyclicAudit {
    pub witness: Option<Polynomial>,
    pub tested: usize,
    pub exhausted: bool,
}

impl SelfDualCyclicVerdict {
    pub fn exists(&self) -> bool {
        self.criterion
    }

    /// `Some(true)` when the audit confirms the criterion.
    pub fn audit_agrees(&self) -> Option<bool> {
        self.audit.as_ref().map(|a| a.witness.is_some() == self.criterion)
    }
}

/// Largest length for which the divisor audit runs automatically.
pub const SELF_DUAL_AUDIT_MAX_N: usize = 8;

pub fn self_dual_cyclic_exists(params: FieldParams, n: usize) -> Result<SelfDualCyclicVerdict> {
    if n == 0 {
        return Err(Error::InvalidArgument("n must be positive".into()));
    }
    let criterion = !params.is_odd() && n.is_multiple_of(2);
    let audit = if n <= SELF_DUAL_AUDIT_MAX_N { Some(self_dual_cyclic_audit(params, n)?) } else { None };
    Ok(SelfDualCyclicVerdict { criterion, audit })
}

/// Tries every monic divisor `g` of `x^n - 1` for `<g> = <g>^⊥`.
pub fn self_dual_cyclic_audit(params: FieldParams, n: usize) -> Result<CyclicAudit> {
    let divisors = monic_divisors_of_xn_minus_1(params, n, DEFAULT_DIVISOR_CAP)?;
    let mut tested = 0;
    for g in &divisors {
        tested += 1;
        let c = cyclic_code_fq(g, n)?;
        if 2 * c.k() == n && c == dual_fq(&c) {
            return Ok(CyclicAudit { witness: Some(g.clone()), tested, exhausted: false });
        }
    }
    Ok(CyclicAudit { witness: None, tested, exhausted: true })
}

/// Parses a `q=<q> n=<n>` header line.
pub(crate) fn parse_header(line: &str) -> Result<(FieldParams, usize)> {
    let mut q = None;
    let mut n = None;
    for tok in line.split_whitespace() {
        let (key, val) = tok.split_once('=').ok_or_else(|| Error::Parse(format!("bad header token '{tok}'")))?;
        let val: u64 = val.parse().map_err(|_| Error::Parse(format!("bad header value '{tok}'")))?;
        match key {
            "q" => q = Some(val),
            "n" => n = Some(val as usize),
            _ => return Err(Error::Parse(format!("unknown header key '{key}'"))),
        }
    }
    let q = q.ok_or_else(|| Error::Parse("header lacks q".into()))?;
    let n = n.ok_or_else(|| Error::Parse("header lacks n".into()))?;
    let q = u32::try_from(q).map_err(|_| Error::NotPrime(q))?;
    Ok((FieldParams::new(q)?, n))
}

/// Non-empty, non-comment lines.
pub(crate) fn content_lines(text: &str) -> impl Iterator<Item = &str> {
    text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'))
}

/// Reads the matrix file format: a `q=<q> n=<n>` header, then one row per line.
pub fn parse_matrix_file(text: &str) -> Result<MatrixFq> {
    let mut lines = content_lines(text);
    let (params, n) = parse_header(lines.next().ok_or_else(|| Error::Parse("empty matrix file".into()))?)?;
    let mut rows = Vec::new();
    for line in lines {
        let row = line.split_whitespace().map(|t| crate::gf::parse_coeff(params, t)).collect::<Result<Vec<u32>>>()?;
        rows.push(row);
    }
    MatrixFq::from_rows(params, n, &rows)
}

pub fn format_matrix_file(m: &MatrixFq) -> String {
    let mut out = format!("q={} n={}\n", m.params().q(), m.cols());
    for i in 0..m.rows() {
        let row: Vec<String> = m.row(i).iter().map(u32::to_string).collect();
        let _ = writeln!(out, "{}", row.join(" "));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::DEFAULT_BUDGET;

    fn fp(q: u32) -> FieldParams {
        FieldParams::new(q).unwrap()
    }

    fn poly(q: u32, s: &str) -> Polynomial {
        Polynomial::parse(fp(q), s).unwrap()
    }

    fn code(q: u32, n: usize, rows: &[&[u32]]) -> LinearCodeFq {
        let rows: Vec<Vec<u32>> = rows.iter().map(|r| r.to_vec()).collect();
        LinearCodeFq::from_rows(fp(q), n, &rows).unwrap()
    }

    /// Every vector of F_q^n orthogonal to all generator rows.
    fn brute_dual(c: &LinearCodeFq) -> LinearCodeFq {
        let p = c.params();
        let n = c.n();
        let full = Subspace::full(p, n);
        let words: Vec<Vec<u32>> = full
            .iter(DEFAULT_BUDGET)
            .unwrap()
            .filter(|x| c.space().basis().iter().all(|g| crate::linalg::dot(&p, x, g) == 0))
            .collect();
        LinearCodeFq::from_rows(p, n, &words).unwrap()
    }

    #[test]
    fn dual_examples() {
        let p = fp(3);
        assert_eq!(dual_fq(&LinearCodeFq::full(p, 3)), LinearCodeFq::zero(p, 3));
        assert_eq!(dual_fq(&LinearCodeFq::zero(p, 3)), LinearCodeFq::full(p, 3));
        let rep = code(3, 3, &[&[1, 1, 1]]);
        let d = dual_fq(&rep);
        assert_eq!(d.k(), 2);
        assert!(d.contains(&[1, 2, 0]));
        assert_eq!(d, brute_dual(&rep));
    }

    #[test]
    fn distance_examples() {
        let rep = code(3, 3, &[&[1, 1, 1]]);
        assert_eq!(min_distance_fq(&rep, DEFAULT_BUDGET).unwrap(), 3);
        assert_eq!(min_distance_fq(&dual_fq(&rep), DEFAULT_BUDGET).unwrap(), 2);
        assert_eq!(min_distance_fq(&LinearCodeFq::zero(fp(3), 3), DEFAULT_BUDGET), Err(Error::EmptyCode));
    }

    #[test]
    fn hamming_examples() {
        let e = hamming_enumerator_fq(&code(2, 3, &[&[1, 1, 1]]), DEFAULT_BUDGET).unwrap();
        assert_eq!(e.counts(), &[1, 0, 0, 1]);
        let e = hamming_enumerator_fq(&LinearCodeFq::full(fp(2), 2), DEFAULT_BUDGET).unwrap();
        assert_eq!(e.counts(), &[1, 2, 1]);
        let e = hamming_enumerator_fq(&code(3, 3, &[&[1, 1, 1]]), DEFAULT_BUDGET).unwrap();
        assert_eq!(e.counts(), &[1, 0, 0, 2]);
    }

    #[test]
    fn cyclic_examples() {
        let p = fp(2);
        assert_eq!(cyclic_code_fq(&Polynomial::xn_minus_1(p, 3), 3).unwrap(), LinearCodeFq::zero(p, 3));
        assert_eq!(cyclic_code_fq(&Polynomial::one(p), 3).unwrap(), LinearCodeFq::full(p, 3));
        let even = cyclic_code_fq(&poly(2, "x+1"), 3).unwrap();
        assert_eq!(even, code(2, 3, &[&[1, 1, 0], &[0, 1, 1]]));
        for w in [[0, 0, 0], [1, 1, 0], [0, 1, 1], [1, 0, 1]] {
            assert!(even.contains(&w));
        }
        assert!(is_cyclic_fq(&even));
        assert_eq!(cyclic_code_fq(&poly(2, "x^2+1"), 3), Err(Error::NotADivisor { n: 3 }));
        assert!(!is_cyclic_fq(&code(3, 2, &[&[1, 0]])));
    }

    #[test]
    fn cyclic_dual_examples() {
        let p = fp(2);
        assert_eq!(cyclic_dual_generator(&Polynomial::one(p), 3).unwrap(), Polynomial::xn_minus_1(p, 3));
        assert_eq!(cyclic_dual_generator(&Polynomial::xn_minus_1(p, 3), 3).unwrap(), Polynomial::one(p));
        let h = cyclic_dual_generator(&poly(2, "x+1"), 3).unwrap();
        assert_eq!(h, poly(2, "x^2+x+1"));
        let even = cyclic_code_fq(&poly(2, "x+1"), 3).unwrap();
        assert_eq!(cyclic_code_fq(&h, 3).unwrap(), brute_dual(&even));
    }

    #[test]
    fn cyclic_dual_matches_brute_force_everywhere() {
        for q in [2, 3, 5] {
            for n in 1..=6 {
                for g in monic_divisors_of_xn_minus_1(fp(q), n, DEFAULT_DIVISOR_CAP).unwrap() {
                    let c = cyclic_code_fq(&g, n).unwrap();
                    assert!(is_cyclic_fq(&c));
                    assert_eq!(c.k(), n - g.degree().unwrap());
                    let h = cyclic_dual_generator(&g, n).unwrap();
                    assert_eq!(cyclic_code_fq(&h, n).unwrap(), brute_dual(&c), "q={q} n={n} g={g}");
                }
            }
        }
    }

    #[test]
    fn self_dual_cyclic_examples() {
        let v = self_dual_cyclic_exists(fp(2), 2).unwrap();
        assert!(v.exists());
        assert_eq!(v.audit.as_ref().unwrap().witness, Some(poly(2, "x+1")));
        assert!(!self_dual_cyclic_exists(fp(3), 4).unwrap().exists());
        assert!(!self_dual_cyclic_exists(fp(2), 3).unwrap().exists());
        for q in [2, 3, 5] {
            for n in 1..=8 {
                let v = self_dual_cyclic_exists(fp(q), n).unwrap();
                assert_eq!(v.audit_agrees(), Some(true), "q={q} n={n}");
            }
        }
    }

    #[test]
    fn matrix_file_roundtrip() {
        let m = MatrixFq::from_rows(fp(3), 3, &[vec![1, 0, 2], vec![0, 1, 1]]).unwrap();
        let text = format_matrix_file(&m);
        assert_eq!(text, "q=3 n=3\n1 0 2\n0 1 1\n");
        assert_eq!(parse_matrix_file(&text).unwrap(), m);
        assert!(parse_matrix_file("q=3 n=2\n1 3\n").is_err());
        assert!(parse_matrix_file("q=4 n=2\n1 1\n").is_err());
        assert!(parse_matrix_file("q=3 n=2\n1 1 1\n").is_err());
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn random_code() -> impl Strategy<Value = LinearCodeFq> {
            (prop::sample::select(vec![2u32, 3, 5]), 1usize..=6).prop_flat_map(|(q, n)| {
                prop::collection::vec(prop::collection::vec(0..q, n), 0..=n)
                    .prop_map(move |rows| LinearCodeFq::from_rows(FieldParams::new(q).unwrap(), n, &rows).unwrap())
            })
        }

        proptest! {
            #[test]
            fn dual_is_involutive_and_sizes_multiply(c in random_code()) {
                let d = dual_fq(&c);
                prop_assert_eq!(dual_fq(&d), c.clone());
                prop_assert_eq!(c.size().unwrap() * d.size().unwrap(), (c.params().q() as u128).pow(c.n() as u32));
                prop_assert_eq!(d, brute_dual(&c));
            }

            #[test]
            fn field_macwilliams_holds(c in random_code()) {
                let e = hamming_enumerator_fq(&c, DEFAULT_BUDGET).unwrap();
                let d = hamming_enumerator_fq(&dual_fq(&c), DEFAULT_BUDGET).unwrap();
                let t = e.macwilliams(c.size().unwrap()).unwrap();
                prop_assert_eq!(t, d);
            }
        }
    }
}
