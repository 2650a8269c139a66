//! Reproduction harness: every structural claim about codes over R, checked
//! at small scale and reported as confirmed, refuted, untestable or
//! canonicalized (holds after a documented repair of the statement or input).
//!
//! Each claim draws from its own ChaCha8 stream (`seed`, stream = claim
//! index), so reports are byte-identical for a fixed seed regardless of which
//! claims run concurrently. Wall-clock time is kept out of the serialized
//! report for the same reason.

use std::fmt;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::codes_fq::{dual_fq, is_cyclic_fq, min_distance_fq, self_dual_cyclic_exists};
use crate::codes_r::{
    combine_components, components_crt, components_paper, dual_r, dual_r_with, enumerate_codewords,
    enumerate_submodules, gray_image_code, is_self_orthogonal, min_lee_distance, CombineMode, DistanceStrategy,
    DualStrategy, LinearCodeR,
};
use crate::cyclic_r::{
    cardinality_audit, cyclic_code_r, cyclic_dual_r, divisor_triples, enumerate_cyclic_codes, is_cyclic_r,
    self_dual_cyclic_search,
};
use crate::error::{Error, Result};
use crate::fsd::{
    bordered_24_12_input, construction_a, construction_b, construction_c, direct_product, double_circulant_30_15_input,
    gray_fsd_transfer, is_formally_self_dual, isodual_witness_check, odd_fsd_search, symmetric_30_15_input,
    BorderedSpecR, Canonicalization, CirculantSpecR, PermutationWitness, SymmetricMatrixR,
};
use crate::gf::FieldParams;
use crate::linalg::hamming_weight;
use crate::ring::{self, audit_lee_table, RingElem};
use crate::sample::{random_code, random_elem, random_vector};
use crate::wenum::{
    complete_enumerator, hamming_enumerator_r, lee_enumerator, published_class_conflicts, MacWilliamsForm, Specialize,
    WeightKind,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Scope {
    All,
    Gray,
    Enumerators,
    Cyclic,
    Fsd,
    Examples,
}

impl Scope {
    pub fn parse(s: &str) -> Result<Self> {
        Ok(match s {
            "all" => Scope::All,
            "gray" => Scope::Gray,
            "enumerators" => Scope::Enumerators,
            "cyclic" => Scope::Cyclic,
            "fsd" => Scope::Fsd,
            "examples" => Scope::Examples,
            other => return Err(Error::InvalidArgument(format!("unknown scope '{other}'"))),
        })
    }

    fn includes(self, group: Scope) -> bool {
        self == Scope::All || self == group
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Confirmed,
    Refuted,
    Untestable,
    Canonicalized,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Confirmed => "confirmed",
            Status::Refuted => "refuted",
            Status::Untestable => "untestable",
            Status::Canonicalized => "canonicalized",
        })
    }
}

/// A claim under test.
pub struct Claim {
    pub id: &'static str,
    pub group: Scope,
    pub statement: &'static str,
    run: fn(&mut ChaCha8Rng, u128) -> Result<Outcome>,
}

struct Outcome {
    status: Status,
    consistent: bool,
    expected: String,
    observed: String,
    notes: Vec<String>,
}

impl Outcome {
    fn new(status: Status, expected: impl Into<String>, observed: impl Into<String>) -> Self {
        Self { status, consistent: true, expected: expected.into(), observed: observed.into(), notes: Vec::new() }
    }

    fn consistent(mut self, ok: bool) -> Self {
        self.consistent = ok;
        self
    }

    fn note(mut self, n: impl Into<String>) -> Self {
        self.notes.push(n.into());
        self
    }
}

fn verdict(ok: bool) -> Status {
    if ok {
        Status::Confirmed
    } else {
        Status::Refuted
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ReportEntry {
    pub id: &'static str,
    pub scope: Scope,
    pub statement: &'static str,
    pub status: Status,
    /// Independent computations of the same quantity agreed.
    pub consistent: bool,
    pub expected: String,
    pub observed: String,
    pub notes: Vec<String>,
    #[serde(skip)]
    pub runtime_ms: u128,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub seed: u64,
    pub scope: Scope,
    pub budget: u128,
    pub entries: Vec<ReportEntry>,
}

impl VerificationReport {
    pub fn entry(&self, id: &str) -> Option<&ReportEntry> {
        self.entries.iter().find(|e| e.id == id)
    }

    /// Every claim in scope appears exactly once, in catalogue order.
    pub fn is_complete(&self) -> bool {
        let expected: Vec<&str> = claim_ids(self.scope);
        let got: Vec<&str> = self.entries.iter().map(|e| e.id).collect();
        expected == got
    }

    pub fn all_consistent(&self) -> bool {
        self.entries.iter().all(|e| e.consistent)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("seed {} scope {:?} budget {}\n", self.seed, self.scope, self.budget).to_lowercase();
        for e in &self.entries {
            out.push_str(&format!(
                "{:<34} {:<13} {}\n    expected: {}\n    observed: {}\n",
                e.id,
                e.status,
                if e.consistent { "" } else { "INCONSISTENT" },
                e.expected,
                e.observed
            ));
            for n in &e.notes {
                out.push_str(&format!("    note: {n}\n"));
            }
        }
        out
    }
}

pub const CLAIMS: &[Claim] = &[
    Claim { id: "ring.cardinality", group: Scope::Gray, statement: "|C| = |C1| |C2| |C3|", run: ring_cardinality },
    Claim {
        id: "ring.lee-table",
        group: Scope::Gray,
        statement: "published case table gives w_L of every symbol",
        run: ring_lee_table,
    },
    Claim {
        id: "gray.weight-preservation",
        group: Scope::Gray,
        statement: "w_L(c) = w_H(Psi(c))",
        run: gray_weight_preservation,
    },
    Claim {
        id: "gray.self-orthogonality",
        group: Scope::Gray,
        statement: "C self-orthogonal => Psi(C) self-orthogonal",
        run: gray_self_orthogonality,
    },
    Claim { id: "gray.min-distance", group: Scope::Gray, statement: "d_L(C) = d_H(Psi(C))", run: gray_min_distance },
    Claim {
        id: "gray.component-dimension",
        group: Scope::Gray,
        statement: "dim Psi(C) = k1 + k2 + k3",
        run: gray_component_dimension,
    },
    Claim {
        id: "gray.component-distance",
        group: Scope::Gray,
        statement: "d_L(C) = min{d(C1), d(C2), d(C3)}",
        run: gray_component_distance,
    },
    Claim {
        id: "gray.dual-commutation",
        group: Scope::Gray,
        statement: "Psi(C)^perp = Psi(C^perp)",
        run: gray_dual_commutation,
    },
    Claim {
        id: "enum.complete-to-lee",
        group: Scope::Enumerators,
        statement: "Lee_C(X,Y) = cwe_C(X^3, X^2 Y, X Y^2, Y^3)",
        run: enum_complete_to_lee,
    },
    Claim {
        id: "enum.complete-to-hamming",
        group: Scope::Enumerators,
        statement: "Ham_C(X,Y) = cwe_C(X, Y, Y, Y)",
        run: enum_complete_to_hamming,
    },
    Claim {
        id: "enum.gray-hamming",
        group: Scope::Enumerators,
        statement: "Lee_C(X,Y) = Ham_Psi(C)(X,Y)",
        run: enum_gray_hamming,
    },
    Claim {
        id: "enum.macwilliams-lee",
        group: Scope::Enumerators,
        statement: "Lee_C^perp(X,Y) = Lee_C(X+Y, X-Y) / |C|",
        run: enum_macwilliams_lee,
    },
    Claim {
        id: "cyclic.decomposition",
        group: Scope::Cyclic,
        statement: "C cyclic over R <=> C1, C2, C3 cyclic over F_q",
        run: cyclic_decomposition,
    },
    Claim {
        id: "cyclic.dual",
        group: Scope::Cyclic,
        statement: "C^perp = e1 C1^perp + e2 C2^perp + e0 C3^perp, cyclic",
        run: cyclic_dual,
    },
    Claim {
        id: "cyclic.self-dual-existence",
        group: Scope::Cyclic,
        statement: "self-dual cyclic codes exist iff q even and n even",
        run: cyclic_self_dual_existence,
    },
    Claim {
        id: "cyclic.cardinality",
        group: Scope::Cyclic,
        statement: "|C| = q^(3n - deg f1 - deg f2 - deg f3)",
        run: cyclic_cardinality,
    },
    Claim {
        id: "fsd.construction-a",
        group: Scope::Fsd,
        statement: "[I | A] with A = A^T is isodual",
        run: fsd_construction_a,
    },
    Claim {
        id: "fsd.double-circulant",
        group: Scope::Fsd,
        statement: "[I | M] with M circulant is isodual",
        run: fsd_double_circulant,
    },
    Claim {
        id: "fsd.bordered-circulant",
        group: Scope::Fsd,
        statement: "bordered double circulant is formally self-dual",
        run: fsd_bordered_circulant,
    },
    Claim {
        id: "fsd.gray-transfer",
        group: Scope::Fsd,
        statement: "C formally self-dual => Psi(C) formally self-dual",
        run: fsd_gray_transfer,
    },
    Claim {
        id: "fsd.direct-product",
        group: Scope::Fsd,
        statement: "product of formally self-dual codes is formally self-dual",
        run: fsd_direct_product,
    },
    Claim {
        id: "fsd.odd-all-lengths",
        group: Scope::Fsd,
        statement: "odd formally self-dual codes exist for every length",
        run: fsd_odd_all_lengths,
    },
    Claim {
        id: "example.symmetric-30-15",
        group: Scope::Examples,
        statement: "[I | A], q = 3: Gray image [30,15,9]_3, formally self-dual",
        run: example_symmetric,
    },
    Claim {
        id: "example.double-circulant-30-15",
        group: Scope::Examples,
        statement: "[I | M], q = 5: Gray image [30,15,12]_5, formally self-dual",
        run: example_double_circulant,
    },
    Claim {
        id: "example.bordered-24-12",
        group: Scope::Examples,
        statement: "bordered, q = 3: Gray image [24,12,9]_3, formally self-dual",
        run: example_bordered,
    },
];

pub fn claim_ids(scope: Scope) -> Vec<&'static str> {
    CLAIMS.iter().filter(|c| scope.includes(c.group)).map(|c| c.id).collect()
}

/// Runs every claim in scope. Errors inside a claim become `untestable` entries.
pub fn run_verification_suite(scope: Scope, seed: u64, budget: u128) -> VerificationReport {
    let selected: Vec<(usize, &Claim)> = CLAIMS.iter().enumerate().filter(|(_, c)| scope.includes(c.group)).collect();
    let entries = selected
        .par_iter()
        .map(|&(idx, claim)| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(idx as u64);
            let start = Instant::now();
            let outcome = (claim.run)(&mut rng, budget)
                .unwrap_or_else(|e| Outcome::new(Status::Untestable, "completed check", format!("error: {e}")));
            ReportEntry {
                id: claim.id,
                scope: claim.group,
                statement: claim.statement,
                status: outcome.status,
                consistent: outcome.consistent,
                expected: outcome.expected,
                observed: outcome.observed,
                notes: outcome.notes,
                runtime_ms: start.elapsed().as_millis(),
            }
        })
        .collect();
    VerificationReport { seed, scope, budget, entries }
}

fn fp(q: u32) -> FieldParams {
    FieldParams::new(q).expect("small prime")
}

fn random_small_code(rng: &mut ChaCha8Rng, qs: &[u32], max_n: usize) -> LinearCodeR {
    let q = qs[rng.gen_range(0..qs.len())];
    let n = rng.gen_range(1..=max_n);
    random_code(rng, fp(q), n, 3)
}

fn canonical_notes(c: &Canonicalization) -> Vec<String> {
    c.notes.iter().map(|n| format!("input repaired: {n}")).collect()
}

// ---- ring and Gray map ----

fn ring_cardinality(rng: &mut ChaCha8Rng, _budget: u128) -> Result<Outcome> {
    let (mut crt_ok, mut literal_ok, mut tested) = (0, 0, 0);
    let mut literal_example = None;
    let mut roundtrip = true;
    for _ in 0..100 {
        let c = random_small_code(rng, &[3, 5], 3);
        tested += 1;
        let crt = components_crt(&c)?;
        if crt.total_dim() == c.dim_fq() {
            crt_ok += 1;
        }
        roundtrip &= combine_components(&crt, CombineMode::Idempotent)? == c;
        let lit = components_paper(&c)?;
        if lit.total_dim() == c.dim_fq() {
            literal_ok += 1;
        } else if literal_example.is_none() {
            literal_example = Some(format!(
                "q={} n={} |C|=q^{} but literal components give q^{}",
                c.params().q(),
                c.n(),
                c.dim_fq(),
                lit.total_dim()
            ));
        }
    }
    let status = match (crt_ok == tested, literal_ok == tested) {
        (true, true) => Status::Confirmed,
        (true, false) => Status::Canonicalized,
        _ => Status::Refuted,
    };
    let mut o = Outcome::new(
        status,
        "identity holds for every code",
        format!("evaluation components: {crt_ok}/{tested}; literal projections a, a+b, a+b+c: {literal_ok}/{tested}"),
    )
    .consistent(roundtrip)
    .note("components taken as images under v -> 1, -1, 0 and recombined with orthogonal idempotents");
    if let Some(e) = literal_example {
        o = o.note(format!("literal reading fails: {e}"));
    }
    Ok(o)
}

fn ring_lee_table(_rng: &mut ChaCha8Rng, _budget: u128) -> Result<Outcome> {
    let mut bad = Vec::new();
    for q in [2, 3, 5] {
        let audit = audit_lee_table(fp(q));
        let rows: Vec<String> = audit
            .iter()
            .filter(|a| a.contradictory)
            .map(|a| format!("row {} ({}) says {} sees {:?}", a.row, a.condition, a.table_weight, a.observed_weights))
            .collect();
        if q == 3 {
            bad = rows;
        }
    }
    let (repeated, missing) = published_class_conflicts();
    let status = if bad.is_empty() { Status::Confirmed } else { Status::Canonicalized };
    let mut o =
        Outcome::new(status, "every row agrees with w_H(Psi(x))", format!("{} contradictory rows at q=3", bad.len()))
            .note("Lee weight defined as w_H(Psi(x)) everywhere");
    for r in bad {
        o = o.note(r);
    }
    Ok(o.note(format!(
        "published symbol classes: eta {repeated:?} listed under several alpha, eta {missing:?} under none"
    )))
}

fn gray_weight_preservation(rng: &mut ChaCha8Rng, budget: u128) -> Result<Outcome> {
    let mut symbols = 0;
    let mut ok = true;
    for q in [2, 3, 5] {
        let p = fp(q);
        for a in RingElem::all(p) {
            for b in RingElem::all(p) {
                let s = a.checked_add(&b)?;
                let g = ring::add_triples(&p, &a.gray().0, &b.gray().0);
                ok &= s.gray().0 == g;
            }
            ok &= a.lee_weight() == a.gray().hamming_weight();
            symbols += 1;
        }
    }
    let mut words = 0u64;
    for _ in 0..50 {
        let c = random_small_code(rng, &[2, 3], 2);
        for w in enumerate_codewords(&c, budget)? {
            ok &= w.lee_weight() as usize == hamming_weight(&w.gray());
            words += 1;
        }
    }
    Ok(Outcome::new(
        verdict(ok),
        "equal for every symbol and codeword; Psi additive",
        format!("{symbols} symbols, {words} codewords checked"),
    ))
}

fn gray_self_orthogonality(_rng: &mut ChaCha8Rng, budget: u128) -> Result<Outcome> {
    let (mut so, mut ok) = (0, true);
    let mut consistent = true;
    for (q, n) in [(2, 1), (2, 2), (3, 1), (3, 2)] {
        for c in enumerate_submodules(fp(q), n, false, budget)? {
            if is_self_orthogonal(&c) {
                so += 1;
                let g = gray_image_code(&c);
                ok &= g.space().is_subspace_of(dual_fq(&g).space());
                consistent &= c.is_subcode_of(&dual_r(&c)?);
            }
        }
    }
    Ok(Outcome::new(
        verdict(ok),
        "Psi(C) within its dual",
        format!("{so} self-orthogonal submodules (q in {{2,3}}, n <= 2) checked"),
    )
    .consistent(consistent))
}

fn gray_min_distance(rng: &mut ChaCha8Rng, budget: u128) -> Result<Outcome> {
    let (mut agree, mut tested) = (0, 0);
    for _ in 0..100 {
        let c = random_small_code(rng, &[2, 3], 3);
        if c.is_zero() {
            continue;
        }
        tested += 1;
        let (a, _) = min_lee_distance(&c, DistanceStrategy::Exhaustive, budget)?;
        let (b, _) = min_lee_distance(&c, DistanceStrategy::GrayImage, budget)?;
        agree += usize::from(a == b);
    }
    Ok(Outcome::new(verdict(agree == tested), "equal", format!("{agree}/{tested} codes agree")))
}

fn gray_component_dimension(rng: &mut ChaCha8Rng, _budget: u128) -> Result<Outcome> {
    let (mut agree, mut tested) = (0, 0);
    for _ in 0..100 {
        let c = random_small_code(rng, &[3, 5], 3);
        tested += 1;
        let t = components_crt(&c)?;
        agree += usize::from(gray_image_code(&c).k() == t.total_dim());
    }
    Ok(Outcome::new(verdict(agree == tested), "equal", format!("{agree}/{tested} codes agree (evaluation components)")))
}

fn gray_component_distance(rng: &mut ChaCha8Rng, budget: u128) -> Result<Outcome> {
    let (mut agree, mut tested, mut below, mut above) = (0, 0, 0, 0);
    let mut example = None;
    for _ in 0..120 {
        let c = random_small_code(rng, &[3], 3);
        if c.is_zero() {
            continue;
        }
        tested += 1;
        let (exact, _) = min_lee_distance(&c, DistanceStrategy::Exhaustive, budget)?;
        let (lemma, _) = min_lee_distance(&c, DistanceStrategy::ComponentLemma, budget)?;
        match exact.cmp(&lemma) {
            std::cmp::Ordering::Equal => agree += 1,
            std::cmp::Ordering::Less => below += 1,
            std::cmp::Ordering::Greater => above += 1,
        }
        if exact != lemma && example.is_none() {
            let gens: Vec<String> = c.generators().iter().map(|g| format!("({g})")).collect();
            example =
                Some(format!("n={} generators {}: exact {exact}, component minimum {lemma}", c.n(), gens.join(", ")));
        }
    }
    let mut o = Outcome::new(
        verdict(agree == tested),
        "equal on every code",
        format!("{agree}/{tested} agree; exact below component minimum {below}, above {above}"),
    );
    if let Some(e) = example {
        o = o.note(format!("counterexample: {e}"));
    }
    Ok(o)
}

fn gray_dual_commutation(rng: &mut ChaCha8Rng, budget: u128) -> Result<Outcome> {
    let (mut agree, mut tested) = (0, 0);
    let mut consistent = true;
    for _ in 0..200 {
        let c = random_small_code(rng, &[2, 3], 3);
        tested += 1;
        let d = dual_r(&c)?;
        if c.n() <= 2 {
            consistent &= d == dual_r_with(&c, DualStrategy::BruteForce, budget)?;
        }
        agree += usize::from(gray_image_code(&d) == dual_fq(&gray_image_code(&c)));
    }
    Ok(Outcome::new(verdict(agree == tested), "equal as sets", format!("{agree}/{tested} codes agree"))
        .consistent(consistent))
}

// ---- enumerators ----

fn enum_complete_to_lee(rng: &mut ChaCha8Rng, budget: u128) -> Result<Outcome> {
    let (mut agree, mut tested) = (0, 0);
    for _ in 0..60 {
        let c = random_small_code(rng, &[2, 3], 2);
        tested += 1;
        agree +=
            usize::from(complete_enumerator(&c, budget)?.specialize(WeightKind::Lee) == lee_enumerator(&c, budget)?);
    }
    let (repeated, _) = published_class_conflicts();
    let status = if agree == tested { Status::Canonicalized } else { Status::Refuted };
    Ok(Outcome::new(status, "equal", format!("{agree}/{tested} codes agree"))
        .note("symbol class taken as w_H(Psi(symbol)); the published class lists overlap")
        .note(format!("overlapping published classes: eta {repeated:?}")))
}

fn enum_complete_to_hamming(rng: &mut ChaCha8Rng, budget: u128) -> Result<Outcome> {
    let (mut agree, mut tested) = (0, 0);
    for _ in 0..60 {
        let c = random_small_code(rng, &[2, 3], 2);
        tested += 1;
        agree += usize::from(
            complete_enumerator(&c, budget)?.specialize(WeightKind::Hamming) == hamming_enumerator_r(&c, budget)?,
        );
    }
    Ok(Outcome::new(verdict(agree == tested), "equal", format!("{agree}/{tested} codes agree")))
}

fn enum_gray_hamming(rng: &mut ChaCha8Rng, budget: u128) -> Result<Outcome> {
    let (mut agree, mut tested) = (0, 0);
    for _ in 0..100 {
        let c = random_small_code(rng, &[2, 3], 2);
        tested += 1;
        let lee = lee_enumerator(&c, budget)?;
        let ham = crate::codes_fq::hamming_enumerator_fq(&gray_image_code(&c), budget)?;
        agree += usize::from(lee.counts() == ham.counts());
    }
    Ok(Outcome::new(verdict(agree == tested), "equal coefficient lists", format!("{agree}/{tested} codes agree")))
}

fn enum_macwilliams_lee(rng: &mut ChaCha8Rng, budget: u128) -> Result<Outcome> {
    let (mut qary_ok, mut tested) = (0, 0);
    let mut literal_fail_q3 = 0;
    let mut literal_fail_q2 = 0;
    let mut example = None;
    let mut consistent = true;
    for i in 0..200 {
        let q = if i % 2 == 0 { 2 } else { 3 };
        let n = rng.gen_range(1..=2);
        let c = random_code(rng, fp(q), n, 3);
        tested += 1;
        let size = c.size().expect("small code");
        let brute = dual_r_with(&c, DualStrategy::BruteForce, budget)?;
        consistent &= brute == dual_r(&c)?;
        let e = lee_enumerator(&c, budget)?;
        let target = lee_enumerator(&brute, budget)?;
        qary_ok += usize::from(e.macwilliams(size).as_ref() == Ok(&target));
        let literal = e.macwilliams_with(size, MacWilliamsForm::Binary);
        if literal.as_ref() != Ok(&target) {
            if q == 3 {
                literal_fail_q3 += 1;
                if example.is_none() {
                    let got = match &literal {
                        Ok(l) => format!("{:?}", l.counts()),
                        Err(err) => err.to_string(),
                    };
                    example = Some(format!(
                        "q=3 n={n} |C|={size}: dual enumerator {:?}, literal transform {got}",
                        target.counts()
                    ));
                }
            } else {
                literal_fail_q2 += 1;
            }
        }
    }
    let status = match (qary_ok == tested, literal_fail_q3 > 0) {
        (true, true) => Status::Canonicalized,
        (true, false) => Status::Confirmed,
        _ => Status::Refuted,
    };
    let mut o = Outcome::new(
        status,
        "transform equals the dual's Lee enumerator",
        format!(
            "X+(q-1)Y form: {qary_ok}/{tested}; printed X+Y form fails {literal_fail_q3} q=3 and {literal_fail_q2} q=2 codes"
        ),
    )
    .consistent(consistent)
    .note("corrected substitution X+(q-1)Y, X-Y; the printed form is the q=2 case");
    if let Some(e) = example {
        o = o.note(format!("printed form counterexample: {e}"));
    }
    Ok(o)
}

// ---- cyclic codes ----

fn cyclic_decomposition(_rng: &mut ChaCha8Rng, budget: u128) -> Result<Outcome> {
    let p = fp(3);
    let (mut forward, mut forward_total, mut backward, mut backward_total) = (0, 0, 0, 0);
    let mut consistent = true;
    for n in [2, 3, 4] {
        let triples = divisor_triples(p, n, budget)?;
        for s in &triples {
            forward_total += 1;
            forward += usize::from(is_cyclic_r(&cyclic_code_r(s, CombineMode::Idempotent)?));
        }
        let codes = enumerate_cyclic_codes(p, n, budget)?;
        consistent &= codes.len() == triples.len();
        for c in codes {
            backward_total += 1;
            let t = components_crt(&c)?;
            backward += usize::from(t.codes().iter().all(|k| is_cyclic_fq(k)));
        }
    }
    let ok = forward == forward_total && backward == backward_total;
    Ok(Outcome::new(
        verdict(ok),
        "both directions hold",
        format!("cyclic components => cyclic code: {forward}/{forward_total}; cyclic code => cyclic components: {backward}/{backward_total} (q=3, n in 2..4)"),
    )
    .consistent(consistent))
}

fn cyclic_dual(_rng: &mut ChaCha8Rng, budget: u128) -> Result<Outcome> {
    let p = fp(3);
    let (mut agree, mut tested) = (0, 0);
    for n in [2, 3, 4] {
        for s in divisor_triples(p, n, budget)? {
            tested += 1;
            let c = cyclic_code_r(&s, CombineMode::Idempotent)?;
            let d = cyclic_dual_r(&s)?;
            let reference = if n == 2 {
                dual_r_with(&c, DualStrategy::BruteForce, budget)?
            } else {
                dual_r_with(&c, DualStrategy::Linear, budget)?
            };
            agree += usize::from(d == reference && is_cyclic_r(&d));
        }
    }
    Ok(Outcome::new(
        verdict(agree == tested),
        "componentwise dual equals the dual and is cyclic",
        format!("{agree}/{tested} divisor triples agree (q=3, n in 2..4)"),
    ))
}

fn cyclic_self_dual_existence(_rng: &mut ChaCha8Rng, budget: u128) -> Result<Outcome> {
    let mut lines = Vec::new();
    let mut ok = true;
    let mut consistent = true;
    for (q, n) in [(3, 2), (3, 3), (3, 4), (2, 2), (2, 3), (2, 4)] {
        let r = self_dual_cyclic_search(fp(q), n, budget)?;
        let predicted = q % 2 == 0 && n % 2 == 0;
        let found = r.witness.is_some();
        ok &= r.exhausted && found == predicted;
        lines.push(format!(
            "q={q} n={n}: {} ({} codes tested)",
            if found { "witness found" } else { "none" },
            r.tested
        ));
        let field = self_dual_cyclic_exists(fp(q), n)?;
        consistent &= field.audit_agrees().unwrap_or(true);
    }
    Ok(Outcome::new(verdict(ok), "witness exactly when q even and n even", lines.join("; "))
        .consistent(consistent)
        .note("only prime q are representable; q = 4, 8, ... untested"))
}

fn cyclic_cardinality(_rng: &mut ChaCha8Rng, budget: u128) -> Result<Outcome> {
    let p = fp(3);
    let (mut ok, mut tested, mut lit_ok) = (0, 0, 0);
    for n in [2, 4] {
        for row in cardinality_audit(p, n, CombineMode::Idempotent, budget)? {
            tested += 1;
            ok += usize::from(row.expected_dim == row.observed_dim);
        }
        for row in cardinality_audit(p, n, CombineMode::PaperLiteral, budget)? {
            lit_ok += usize::from(row.expected_dim == row.observed_dim);
        }
    }
    let status = match (ok == tested, lit_ok == tested) {
        (true, true) => Status::Confirmed,
        (true, false) => Status::Canonicalized,
        _ => Status::Refuted,
    };
    Ok(Outcome::new(
        status,
        "formula holds for every divisor triple",
        format!(
            "idempotent combination: {ok}/{tested}; coefficients v, 1-v, 1-v^2: {lit_ok}/{tested} (q=3, n in {{2,4}})"
        ),
    )
    .note("codes built as e1 C1 + e2 C2 + e0 C3 with orthogonal idempotents"))
}

// ---- formally self-dual constructions ----

fn random_symmetric(rng: &mut ChaCha8Rng, p: FieldParams, n: usize) -> SymmetricMatrixR {
    let mut rows = vec![vec![RingElem::zero(p); n]; n];
    for i in 0..n {
        for j in i..n {
            rows[i][j] = random_elem(rng, p);
            rows[j][i] = rows[i][j];
        }
    }
    SymmetricMatrixR::new(p, rows).expect("symmetric by construction")
}

fn random_circulant(rng: &mut ChaCha8Rng, p: FieldParams, n: usize) -> CirculantSpecR {
    CirculantSpecR::new(random_vector(rng, p, n))
}

fn random_bordered(rng: &mut ChaCha8Rng, p: FieldParams, n: usize) -> BorderedSpecR {
    BorderedSpecR { alpha: random_elem(rng, p), omega: random_elem(rng, p), core: random_circulant(rng, p, n - 1) }
}

type Built = (LinearCodeR, PermutationWitness);

fn construction_outcome(
    rng: &mut ChaCha8Rng,
    budget: u128,
    min_n: usize,
    build: fn(&mut ChaCha8Rng, FieldParams, usize) -> Result<Built>,
) -> Result<Outcome> {
    let (mut witness_ok, mut fsd_ok, mut tested, mut enumerated) = (0, 0, 0, 0);
    let mut consistent = true;
    for i in 0..120 {
        let n = min_n + i % (4 - min_n);
        let (c, w) = build(rng, fp(3), n)?;
        tested += 1;
        let wit = isodual_witness_check(&c, &w)?;
        witness_ok += usize::from(wit);
        let fsd = is_formally_self_dual(&c, budget)?;
        enumerated += 1;
        fsd_ok += usize::from(fsd);
        consistent &= !wit || fsd;
    }
    for i in 0..30 {
        let (c, w) = build(rng, fp(5), min_n + i % (4 - min_n))?;
        tested += 1;
        witness_ok += usize::from(isodual_witness_check(&c, &w)?);
    }
    Ok(Outcome::new(
        verdict(witness_ok == tested && fsd_ok == enumerated),
        "witness maps C onto its dual; Lee enumerators of C and its dual agree",
        format!(
            "witness {witness_ok}/{tested} (q in {{3,5}}); equal Lee enumerators {fsd_ok}/{enumerated} (q=3, n <= 3)"
        ),
    )
    .consistent(consistent)
    .note("witness is a monomial map: half swap with negation on one half"))
}

fn fsd_construction_a(rng: &mut ChaCha8Rng, budget: u128) -> Result<Outcome> {
    construction_outcome(rng, budget, 1, |rng, p, n| construction_a(&random_symmetric(rng, p, n)))
}

fn fsd_double_circulant(rng: &mut ChaCha8Rng, budget: u128) -> Result<Outcome> {
    construction_outcome(rng, budget, 1, |rng, p, n| construction_b(&random_circulant(rng, p, n)))
}

fn fsd_bordered_circulant(rng: &mut ChaCha8Rng, budget: u128) -> Result<Outcome> {
    construction_outcome(rng, budget, 2, |rng, p, n| construction_c(&random_bordered(rng, p, n)))
}

fn fsd_gray_transfer(rng: &mut ChaCha8Rng, budget: u128) -> Result<Outcome> {
    let (mut fsd, mut transferred) = (0, 0);
    for i in 0..90 {
        let p = fp(3);
        let n = 1 + i % 3;
        let (c, _) = match i % 3 {
            0 => construction_a(&random_symmetric(rng, p, n))?,
            1 => construction_b(&random_circulant(rng, p, n))?,
            _ => construction_c(&random_bordered(rng, p, n.max(2)))?,
        };
        if is_formally_self_dual(&c, budget)? {
            fsd += 1;
            transferred += usize::from(gray_fsd_transfer(&c, budget)?);
        }
    }
    Ok(Outcome::new(
        verdict(fsd == transferred),
        "Gray image formally self-dual whenever C is",
        format!("{transferred}/{fsd} formally self-dual codes transfer"),
    ))
}

fn fsd_direct_product(rng: &mut ChaCha8Rng, budget: u128) -> Result<Outcome> {
    let (mut ok, mut tested) = (0, 0);
    let mut consistent = true;
    let p = fp(3);
    for i in 0..40 {
        let (a, _) = construction_a(&random_symmetric(rng, p, 1))?;
        let (b, _) = if i % 2 == 0 {
            construction_b(&random_circulant(rng, p, 1))?
        } else {
            construction_a(&random_symmetric(rng, p, 1))?
        };
        let prod = direct_product(&a, &b)?;
        tested += 1;
        let law =
            lee_enumerator(&prod, budget)? == lee_enumerator(&a, budget)?.product(&lee_enumerator(&b, budget)?)?;
        consistent &= dual_r(&prod)? == direct_product(&dual_r(&a)?, &dual_r(&b)?)?;
        ok += usize::from(law && is_formally_self_dual(&prod, budget)?);
    }
    Ok(Outcome::new(
        verdict(ok == tested),
        "product formally self-dual, enumerator multiplicative",
        format!("{ok}/{tested} products of length 4"),
    )
    .consistent(consistent))
}

fn fsd_odd_all_lengths(_rng: &mut ChaCha8Rng, budget: u128) -> Result<Outcome> {
    let mut lines = Vec::new();
    let mut missing = Vec::new();
    for (q, n) in [(2, 1), (3, 1), (3, 2)] {
        let r = odd_fsd_search(fp(q), n, budget)?;
        lines.push(format!(
            "q={q} n={n}: {} ({} submodules, exhausted={})",
            if r.witness.is_some() { "witness found" } else { "none" },
            r.tested,
            r.exhausted
        ));
        if r.witness.is_none() && r.exhausted {
            missing.push(format!("q={q} n={n}"));
        }
    }
    let mut o = Outcome::new(
        verdict(missing.is_empty()),
        "an odd formally self-dual code at every tested length",
        lines.join("; "),
    );
    if !missing.is_empty() {
        o = o.note(format!(
            "no odd formally self-dual code at {}; |C| = |C^perp| forces |C|^2 = q^(3n), impossible for odd n",
            missing.join(", ")
        ));
    }
    Ok(o)
}

// ---- reference examples ----

fn gray_params(c: &LinearCodeR) -> (usize, usize) {
    (3 * c.n(), c.dim_fq())
}

fn exhaustive_example(
    c: &LinearCodeR,
    w: &PermutationWitness,
    q: u32,
    expected_d: usize,
    notes: Vec<String>,
    budget: u128,
) -> Result<Outcome> {
    let (len, k) = gray_params(c);
    let e = lee_enumerator(c, budget)?;
    let d = e.min_nonzero_weight().ok_or(Error::EmptyCode)?;
    let fsd = e == lee_enumerator(&dual_r(c)?, budget)?;
    let wit = isodual_witness_check(c, w)?;
    let status = if len == 2 * k && d == expected_d && fsd { Status::Canonicalized } else { Status::Refuted };
    let mut o = Outcome::new(
        status,
        format!("[{len},{},{expected_d}]_{q}, formally self-dual", len / 2),
        format!(
            "[{len},{k},{d}]_{q}, formally self-dual: {fsd}, witness: {wit} (exhaustive over {} codewords)",
            e.total()
        ),
    )
    .consistent(wit == fsd);
    for n in notes {
        o = o.note(n);
    }
    Ok(o)
}

fn example_symmetric(_rng: &mut ChaCha8Rng, budget: u128) -> Result<Outcome> {
    let (a, canon) = symmetric_30_15_input();
    let (c, w) = construction_a(&a)?;
    exhaustive_example(&c, &w, 3, 9, canonical_notes(&canon), budget)
}

fn example_bordered(_rng: &mut ChaCha8Rng, budget: u128) -> Result<Outcome> {
    let (s, canon) = bordered_24_12_input();
    let (c, w) = construction_c(&s)?;
    exhaustive_example(&c, &w, 3, 9, canonical_notes(&canon), budget)
}

fn example_double_circulant(_rng: &mut ChaCha8Rng, budget: u128) -> Result<Outcome> {
    let (m, canon) = double_circulant_30_15_input();
    let (c, w) = construction_b(&m)?;
    let (len, k) = gray_params(&c);
    let t = components_crt(&c)?;
    let mut ds = Vec::new();
    for comp in t.codes() {
        ds.push(min_distance_fq(comp, budget)?);
    }
    let (d, prov) = min_lee_distance(&c, DistanceStrategy::ComponentLemma, budget)?;
    let wit = isodual_witness_check(&c, &w)?;
    let status = if len == 2 * k && d == 12 && wit { Status::Canonicalized } else { Status::Refuted };
    let comps: Vec<String> = t.codes().iter().zip(&ds).map(|(c, d)| format!("[{},{},{d}]", c.n(), c.k())).collect();
    let mut o = Outcome::new(
        status,
        "[30,15,12]_5, formally self-dual",
        format!("[{len},{k},{d}]_5 (lemma5-based), isodual witness: {wit}; components {}", comps.join(" ")),
    )
    .consistent(ds.iter().min() == Some(&d))
    .note(format!("distance provenance: {}", serde_json::to_value(prov).expect("serializes")))
    .note("5^15 codewords exceed the enumeration budget; the component minimum is not an exact distance");
    for n in canonical_notes(&canon) {
        o = o.note(n);
    }
    Ok(o)
}
