//! Seeded random inputs for property checks and the verification harness.

use rand::Rng;

use crate::codes_r::{code_from_generators, LinearCodeR, RingVector};
use crate::gf::FieldParams;
use crate::ring::RingElem;

pub fn random_elem<G: Rng + ?Sized>(rng: &mut G, params: FieldParams) -> RingElem {
    let q = params.q();
    RingElem::new(params, rng.gen_range(0..q), rng.gen_range(0..q), rng.gen_range(0..q))
}

pub fn random_vector<G: Rng + ?Sized>(rng: &mut G, params: FieldParams, n: usize) -> RingVector {
    let entries = (0..n).map(|_| random_elem(rng, params)).collect();
    RingVector::new(params, entries).expect("entries share params")
}

/// The R-span of between 1 and `max_gens` random generators.
pub fn random_code<G: Rng + ?Sized>(rng: &mut G, params: FieldParams, n: usize, max_gens: usize) -> LinearCodeR {
    let k = rng.gen_range(1..=max_gens.max(1));
    let gens = (0..k).map(|_| random_vector(rng, params, n)).collect();
    code_from_generators(params, n, gens).expect("generators have length n")
}
