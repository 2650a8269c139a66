//! Cyclic codes over R.
//!
//! For odd q a cyclic R-code is `e1 C1 + e2 C2 + e0 C3` with `Ci = <fi>`
//! cyclic over F_q and `fi | x^n - 1`; its size is `q^{3n - Σ deg fi}`. For
//! q = 2 the ring is not semisimple, so cyclic codes are found by enumerating
//! shift- and v-closed submodules directly.

use rayon::prelude::*;
use serde::Serialize;

use crate::codes_fq::{cyclic_code_fq, cyclic_dual_generator, LinearCodeFq};
use crate::codes_r::{
    combine_components, dual_r, enumerate_submodules, shift_layout, CombineMode, ComponentProvenance, ComponentTriple,
    LinearCodeR, RingVector,
};
use crate::error::{Error, Result};
use crate::gf::{monic_divisors_of_xn_minus_1, FieldParams, Polynomial};

/// Three monic divisors of `x^n - 1`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CyclicSpecR {
    pub q: FieldParams,
    pub n: usize,
    pub f1: Polynomial,
    pub f2: Polynomial,
    pub f3: Polynomial,
}

impl CyclicSpecR {
    pub fn new(params: FieldParams, n: usize, f1: Polynomial, f2: Polynomial, f3: Polynomial) -> Result<Self> {
        let xn1 = Polynomial::xn_minus_1(params, n);
        for f in [&f1, &f2, &f3] {
            params.check_same(&f.params())?;
            if !f.is_monic() || !f.divides(&xn1)? {
                return Err(Error::NotADivisor { n });
            }
        }
        Ok(Self { q: params, n, f1, f2, f3 })
    }

    pub fn params(&self) -> FieldParams {
        self.q
    }

    pub fn generators(&self) -> [&Polynomial; 3] {
        [&self.f1, &self.f2, &self.f3]
    }

    pub fn degree_sum(&self) -> usize {
        self.generators().iter().map(|f| f.degree().unwrap_or(0)).sum()
    }

    /// `3n - Σ deg fi`.
    pub fn expected_dim(&self) -> usize {
        3 * self.n - self.degree_sum()
    }

    fn components(&self, provenance: ComponentProvenance) -> Result<ComponentTriple> {
        Ok(ComponentTriple {
            c1: cyclic_code_fq(&self.f1, self.n)?,
            c2: cyclic_code_fq(&self.f2, self.n)?,
            c3: cyclic_code_fq(&self.f3, self.n)?,
            provenance,
        })
    }
}

pub fn cyclic_code_r(spec: &CyclicSpecR, mode: CombineMode) -> Result<LinearCodeR> {
    let provenance = match mode {
        CombineMode::PaperLiteral => ComponentProvenance::PaperLiteral,
        CombineMode::Idempotent => ComponentProvenance::Crt,
    };
    combine_components(&spec.components(provenance)?, mode)
}

/// True iff the cyclic shift of every basis vector stays in the code.
pub fn is_cyclic_r(c: &LinearCodeR) -> bool {
    c.space().basis().iter().all(|b| c.space().contains(&shift_layout(b)))
}

/// The dual, built from reciprocal check polynomials of each component.
pub fn cyclic_dual_r(spec: &CyclicSpecR) -> Result<LinearCodeR> {
    if !spec.q.is_odd() {
        return Err(Error::CharacteristicTwoUnsupported);
    }
    let d = cyclic_dual_spec(spec)?;
    cyclic_code_r(&d, CombineMode::Idempotent)
}

/// Spec of the dual: `fi ↦ monic reciprocal of (x^n - 1)/fi`.
pub fn cyclic_dual_spec(spec: &CyclicSpecR) -> Result<CyclicSpecR> {
    let n = spec.n;
    CyclicSpecR::new(
        spec.q,
        n,
        cyclic_dual_generator(&spec.f1, n)?,
        cyclic_dual_generator(&spec.f2, n)?,
        cyclic_dual_generator(&spec.f3, n)?,
    )
}

/// Every triple of monic divisors of `x^n - 1`, at most `cap` divisors each.
pub fn divisor_triples(params: FieldParams, n: usize, cap: u128) -> Result<Vec<CyclicSpecR>> {
    let divs = monic_divisors_of_xn_minus_1(params, n, cap)?;
    let mut out = Vec::with_capacity(divs.len().pow(3));
    for f1 in &divs {
        for f2 in &divs {
            for f3 in &divs {
                out.push(CyclicSpecR { q: params, n, f1: f1.clone(), f2: f2.clone(), f3: f3.clone() });
            }
        }
    }
    Ok(out)
}

/// All cyclic R-codes of length n, by submodule enumeration.
pub fn enumerate_cyclic_codes(params: FieldParams, n: usize, budget: u128) -> Result<Vec<LinearCodeR>> {
    enumerate_submodules(params, n, true, budget)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum SelfDualWitness {
    Spec(CyclicSpecR),
    Code { generators: Vec<RingVector> },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CyclicSearch {
    pub witness: Option<SelfDualWitness>,
    pub exhausted: bool,
    pub tested: u64,
}

/// Searches for a cyclic code with `C = C^⊥`.
///
/// Odd q walks every divisor triple; otherwise every cyclic submodule is
/// enumerated, which needs `q^{3n}` within `budget`. A completed search sets
/// `exhausted` whether or not a witness was found.
pub fn self_dual_cyclic_search(params: FieldParams, n: usize, budget: u128) -> Result<CyclicSearch> {
    if params.is_odd() {
        let triples = divisor_triples(params, n, budget)?;
        let tested = triples.len() as u64;
        let hit = triples
            .par_iter()
            .filter(|s| 2 * s.expected_dim() == 3 * s.n)
            .map(|s| -> Result<Option<CyclicSpecR>> {
                let c = cyclic_code_r(s, CombineMode::Idempotent)?;
                Ok((c == cyclic_dual_r(s)?).then(|| s.clone()))
            })
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .flatten()
            .next();
        Ok(CyclicSearch { witness: hit.map(SelfDualWitness::Spec), exhausted: true, tested })
    } else {
        let codes = enumerate_cyclic_codes(params, n, budget)?;
        let tested = codes.len() as u64;
        for c in codes {
            if 2 * c.dim_fq() == 3 * n && dual_r(&c)? == c {
                return Ok(CyclicSearch {
                    witness: Some(SelfDualWitness::Code { generators: c.generators().to_vec() }),
                    exhausted: true,
                    tested,
                });
            }
        }
        Ok(CyclicSearch { witness: None, exhausted: true, tested })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CardinalityRow {
    pub spec: CyclicSpecR,
    pub expected_dim: usize,
    pub observed_dim: usize,
}

/// Compares `log_q |C|` against `3n - Σ deg fi` for every divisor triple.
pub fn cardinality_audit(params: FieldParams, n: usize, mode: CombineMode, cap: u128) -> Result<Vec<CardinalityRow>> {
    divisor_triples(params, n, cap)?
        .into_par_iter()
        .map(|spec| {
            let c = cyclic_code_r(&spec, mode)?;
            Ok(CardinalityRow { expected_dim: spec.expected_dim(), observed_dim: c.dim_fq(), spec })
        })
        .collect()
}

/// The field code `<f>` as cyclic, checked directly.
pub fn component_is_cyclic(c: &LinearCodeFq) -> bool {
    crate::codes_fq::is_cyclic_fq(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::codes_r::{code_from_generators, components_crt, dual_r_with, DualStrategy};
    use crate::gf::DEFAULT_DIVISOR_CAP;
    use crate::linalg::DEFAULT_BUDGET;

    fn fp(q: u32) -> FieldParams {
        FieldParams::new(q).unwrap()
    }

    fn poly(q: u32, s: &str) -> Polynomial {
        Polynomial::parse(fp(q), s).unwrap()
    }

    fn spec(q: u32, n: usize, f: [&str; 3]) -> CyclicSpecR {
        CyclicSpecR::new(fp(q), n, poly(q, f[0]), poly(q, f[1]), poly(q, f[2])).unwrap()
    }

    #[test]
    fn construction_examples() {
        let z = spec(3, 2, ["x^2+2", "x^2+2", "x^2+2"]);
        assert!(cyclic_code_r(&z, CombineMode::Idempotent).unwrap().is_zero());
        let f = spec(3, 2, ["1", "1", "1"]);
        assert_eq!(cyclic_code_r(&f, CombineMode::Idempotent).unwrap(), LinearCodeR::full(fp(3), 2));
        let s = spec(3, 2, ["x+2", "x+1", "1"]);
        assert_eq!(cyclic_code_r(&s, CombineMode::Idempotent).unwrap().size(), Some(81));
        let bad = CyclicSpecR::new(fp(3), 2, poly(3, "x^2+1"), poly(3, "1"), poly(3, "1"));
        assert_eq!(bad, Err(Error::NotADivisor { n: 2 }));
        assert_eq!(
            cyclic_code_r(&spec(2, 2, ["1", "1", "1"]), CombineMode::Idempotent),
            Err(Error::CharacteristicTwoUnsupported)
        );
    }

    #[test]
    fn cyclic_check_examples() {
        assert!(is_cyclic_r(&LinearCodeR::full(fp(3), 3)));
        assert!(is_cyclic_r(&LinearCodeR::zero(fp(3), 3)));
        let c = code_from_generators(fp(3), 2, vec![RingVector::parse(fp(3), "1 0").unwrap()]).unwrap();
        assert!(!is_cyclic_r(&c));
    }

    #[test]
    fn dual_examples() {
        let z = spec(3, 2, ["x^2+2", "x^2+2", "x^2+2"]);
        let d = cyclic_dual_r(&z).unwrap();
        assert_eq!(d, LinearCodeR::full(fp(3), 2));
        let d = cyclic_dual_r(&spec(3, 2, ["1", "1", "1"])).unwrap();
        assert!(d.is_zero() && is_cyclic_r(&d));
        let s = spec(3, 2, ["x+2", "x+1", "1"]);
        let d = cyclic_dual_r(&s).unwrap();
        assert_eq!(d.size(), Some(9));
        let brute =
            dual_r_with(&cyclic_code_r(&s, CombineMode::Idempotent).unwrap(), DualStrategy::BruteForce, DEFAULT_BUDGET)
                .unwrap();
        assert_eq!(d, brute);
    }

    #[test]
    fn every_triple_is_cyclic_with_predicted_size_and_dual() {
        for n in [2, 3, 4] {
            for s in divisor_triples(fp(3), n, DEFAULT_DIVISOR_CAP).unwrap() {
                let c = cyclic_code_r(&s, CombineMode::Idempotent).unwrap();
                assert!(is_cyclic_r(&c));
                assert_eq!(c.dim_fq(), s.expected_dim(), "{s:?}");
                let d = cyclic_dual_r(&s).unwrap();
                assert!(is_cyclic_r(&d));
                if n <= 2 {
                    assert_eq!(d, dual_r_with(&c, DualStrategy::BruteForce, DEFAULT_BUDGET).unwrap());
                } else {
                    assert_eq!(d, dual_r_with(&c, DualStrategy::Linear, DEFAULT_BUDGET).unwrap());
                }
            }
        }
    }

    #[test]
    fn cyclic_codes_have_cyclic_components() {
        for n in [2, 3] {
            let codes = enumerate_cyclic_codes(fp(3), n, DEFAULT_BUDGET).unwrap();
            let triples = divisor_triples(fp(3), n, 64).unwrap();
            assert_eq!(codes.len(), triples.len());
            for c in codes {
                assert!(is_cyclic_r(&c));
                let t = components_crt(&c).unwrap();
                assert!(t.codes().iter().all(|k| component_is_cyclic(k)));
            }
        }
    }

    #[test]
    fn no_self_dual_cyclic_codes_for_odd_q() {
        for n in [2, 3, 4] {
            let r = self_dual_cyclic_search(fp(3), n, DEFAULT_BUDGET).unwrap();
            assert!(r.exhausted);
            assert_eq!(r.witness, None);
        }
    }

    #[test]
    fn binary_search_is_definitive() {
        let r = self_dual_cyclic_search(fp(2), 2, DEFAULT_BUDGET).unwrap();
        assert!(r.exhausted);
        if let Some(SelfDualWitness::Code { generators }) = &r.witness {
            let c = code_from_generators(fp(2), 2, generators.clone()).unwrap();
            assert!(is_cyclic_r(&c));
            assert_eq!(dual_r_with(&c, DualStrategy::BruteForce, DEFAULT_BUDGET).unwrap(), c);
        }
    }

    #[test]
    fn literal_mode_cardinality_is_measurable() {
        let rows = cardinality_audit(fp(3), 2, CombineMode::PaperLiteral, 64).unwrap();
        assert_eq!(rows.len(), 64);
        let rows = cardinality_audit(fp(3), 2, CombineMode::Idempotent, 64).unwrap();
        assert!(rows.iter().all(|r| r.expected_dim == r.observed_dim));
    }
}
