//! Weight enumerators of codes over R and their MacWilliams transforms.
//!
//! Enumerators are exact integer tallies. A symbol's class is the Hamming
//! weight of its Gray image, so `w_L(c) = α1 + 2 α2 + 3 α3` holds for every
//! codeword.

use std::collections::BTreeMap;

use serde::ser::{SerializeMap, SerializeStruct};
use serde::{Serialize, Serializer};

use crate::codes_r::{layout_triple, lee_weight_layout, LinearCodeR};
use crate::error::{Error, Result};
use crate::gf::FieldParams;
use crate::ring::{self, RingElem};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum WeightKind {
    Lee,
    Hamming,
}

/// A weight distribution `E_0, ..., E_N` over `N` positions drawn from an
/// alphabet of size `alphabet`.
///
/// `n` is the code length. Lee enumerators of R-codes have `N = 3n` and
/// alphabet `q`; Hamming enumerators have `N = n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightEnumerator {
    kind: WeightKind,
    n: usize,
    alphabet: u64,
    counts: Vec<u64>,
}

pub type LeeEnumerator = WeightEnumerator;

/// Which substitution the MacWilliams transform applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum MacWilliamsForm {
    /// `X + (s - 1) Y, X - Y` for alphabet size `s`.
    QAry,
    /// `X + Y, X - Y` regardless of alphabet.
    Binary,
}

impl WeightEnumerator {
    pub fn new(kind: WeightKind, n: usize, alphabet: u64, counts: Vec<u64>) -> Self {
        Self { kind, n, alphabet, counts }
    }

    pub fn kind(&self) -> WeightKind {
        self.kind
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn alphabet(&self) -> u64 {
        self.alphabet
    }

    /// `N`, the number of positions weights range over.
    pub fn positions(&self) -> usize {
        self.counts.len() - 1
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    pub fn count(&self, w: usize) -> u64 {
        self.counts.get(w).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u128 {
        self.counts.iter().map(|&c| c as u128).sum()
    }

    /// Smallest nonzero weight with a nonzero count.
    pub fn min_nonzero_weight(&self) -> Option<usize> {
        (1..self.counts.len()).find(|&w| self.counts[w] > 0)
    }

    /// Nonzero entries in increasing weight order.
    pub fn nonzero(&self) -> impl Iterator<Item = (usize, u64)> + '_ {
        self.counts.iter().enumerate().filter(|(_, &c)| c > 0).map(|(w, &c)| (w, c))
    }

    /// Enumerator of the direct product: polynomial multiplication.
    pub fn product(&self, other: &WeightEnumerator) -> Result<WeightEnumerator> {
        if self.kind != other.kind || self.alphabet != other.alphabet {
            return Err(Error::InvalidArgument("enumerators of different kinds".into()));
        }
        let mut counts = vec![0u64; self.counts.len() + other.counts.len() - 1];
        for (i, &a) in self.counts.iter().enumerate() {
            for (j, &b) in other.counts.iter().enumerate() {
                let t = a.checked_mul(b).ok_or(Error::Overflow("enumerator product"))?;
                counts[i + j] = counts[i + j].checked_add(t).ok_or(Error::Overflow("enumerator product"))?;
            }
        }
        Ok(Self { kind: self.kind, n: self.n + other.n, alphabet: self.alphabet, counts })
    }

    /// `(1/|C|) W(X + (s-1) Y, X - Y)`.
    pub fn macwilliams(&self, code_size: u128) -> Result<WeightEnumerator> {
        self.macwilliams_with(code_size, MacWilliamsForm::QAry)
    }

    /// Applies the chosen substitution and divides by `code_size`. A
    /// coefficient that is not divisible, or negative, is an error rather
    /// than a rounded value.
    pub fn macwilliams_with(&self, code_size: u128, form: MacWilliamsForm) -> Result<WeightEnumerator> {
        if code_size == 0 || self.total() != code_size {
            return Err(Error::TransformInconsistent(format!(
                "code size {code_size} differs from enumerator total {}",
                self.total()
            )));
        }
        let big_n = self.positions();
        let s = match form {
            MacWilliamsForm::QAry => self.alphabet,
            MacWilliamsForm::Binary => 2,
        };
        let binom = binomials(big_n)?;
        let of = || Error::Overflow("MacWilliams transform");
        let mut sm1_pow = vec![1i128; big_n + 1];
        for k in 1..=big_n {
            sm1_pow[k] = sm1_pow[k - 1].checked_mul(s as i128 - 1).ok_or_else(of)?;
        }
        let mut acc = vec![0i128; big_n + 1];
        for (i, &e) in self.counts.iter().enumerate() {
            if e == 0 {
                continue;
            }
            // Krawtchouk value: [Y^j] (X + (s-1)Y)^{N-i} (X - Y)^i.
            for (j, slot) in acc.iter_mut().enumerate() {
                let mut k = 0i128;
                for h in j.saturating_sub(big_n - i)..=j.min(i) {
                    let term = binom[big_n - i][j - h]
                        .checked_mul(sm1_pow[j - h])
                        .and_then(|t| t.checked_mul(binom[i][h]))
                        .ok_or_else(of)?;
                    k = if h % 2 == 0 { k.checked_add(term) } else { k.checked_sub(term) }.ok_or_else(of)?;
                }
                *slot = slot.checked_add(k.checked_mul(e as i128).ok_or_else(of)?).ok_or_else(of)?;
            }
        }
        let m = i128::try_from(code_size).map_err(|_| of())?;
        let counts = acc
            .iter()
            .enumerate()
            .map(|(j, &a)| {
                if a % m != 0 || a < 0 {
                    Err(Error::TransformInconsistent(format!("coefficient of weight {j} is {a}/{m}")))
                } else {
                    u64::try_from(a / m).map_err(|_| of())
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { kind: self.kind, n: self.n, alphabet: self.alphabet, counts })
    }
}

fn binomials(n: usize) -> Result<Vec<Vec<i128>>> {
    let mut b = vec![vec![0i128; n + 1]; n + 1];
    for i in 0..=n {
        b[i][0] = 1;
        for j in 1..=i {
            b[i][j] =
                b[i - 1][j - 1].checked_add(if j < i { b[i - 1][j] } else { 0 }).ok_or(Error::Overflow("binomial"))?;
        }
    }
    Ok(b)
}

impl Serialize for WeightEnumerator {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let counts: Vec<(String, u64)> = self.nonzero().map(|(w, c)| (w.to_string(), c)).collect();
        serialize_enumerator(s, self.n, kind_name(self.kind), &counts)
    }
}

fn kind_name(k: WeightKind) -> &'static str {
    match k {
        WeightKind::Lee => "lee",
        WeightKind::Hamming => "hamming",
    }
}

struct OrderedCounts<'a>(&'a [(String, u64)]);

impl Serialize for OrderedCounts<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut m = s.serialize_map(Some(self.0.len()))?;
        for (k, v) in self.0 {
            m.serialize_entry(k, v)?;
        }
        m.end()
    }
}

fn serialize_enumerator<S: Serializer>(
    s: S,
    n: usize,
    kind: &str,
    counts: &[(String, u64)],
) -> std::result::Result<S::Ok, S::Error> {
    let mut st = s.serialize_struct("Enumerator", 3)?;
    st.serialize_field("n", &n)?;
    st.serialize_field("kind", kind)?;
    st.serialize_field("counts", &OrderedCounts(counts))?;
    st.end()
}

fn join(t: &[u32]) -> String {
    t.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
}

/// Tallies of codewords by `(α0, α1, α2, α3)`, the number of coordinates whose
/// symbol has Gray weight 0, 1, 2, 3.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetrizedEnumerator {
    params: FieldParams,
    n: usize,
    counts: BTreeMap<[u32; 4], u64>,
}

impl SymmetrizedEnumerator {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn counts(&self) -> &BTreeMap<[u32; 4], u64> {
        &self.counts
    }

    pub fn total(&self) -> u128 {
        self.counts.values().map(|&c| c as u128).sum()
    }
}

impl Serialize for SymmetrizedEnumerator {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let counts: Vec<(String, u64)> = self.counts.iter().map(|(k, &v)| (join(k), v)).collect();
        serialize_enumerator(s, self.n, "swe", &counts)
    }
}

/// Tallies of codewords by how often each of the `q^3` symbols occurs. Tally
/// slot `i` belongs to the symbol with `triple_index` `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompleteEnumerator {
    params: FieldParams,
    n: usize,
    counts: BTreeMap<Vec<u32>, u64>,
}

impl CompleteEnumerator {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn counts(&self) -> &BTreeMap<Vec<u32>, u64> {
        &self.counts
    }

    pub fn total(&self) -> u128 {
        self.counts.values().map(|&c| c as u128).sum()
    }
}

impl Serialize for CompleteEnumerator {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let counts: Vec<(String, u64)> = self.counts.iter().map(|(k, &v)| (join(k), v)).collect();
        serialize_enumerator(s, self.n, "cwe", &counts)
    }
}

fn merge_maps<K: Ord>(mut a: BTreeMap<K, u64>, b: BTreeMap<K, u64>) -> BTreeMap<K, u64> {
    for (k, v) in b {
        *a.entry(k).or_insert(0) += v;
    }
    a
}

fn merge_vecs(mut a: Vec<u64>, b: Vec<u64>) -> Vec<u64> {
    for (x, y) in a.iter_mut().zip(b) {
        *x += y;
    }
    a
}

/// Exact Lee distribution `E_0, ..., E_{3n}`.
pub fn lee_enumerator(c: &LinearCodeR, budget: u128) -> Result<LeeEnumerator> {
    let p = c.params();
    let len = 3 * c.n();
    let counts = c.space().par_fold(
        budget,
        || vec![0u64; len + 1],
        |mut acc, x| {
            acc[lee_weight_layout(&p, x) as usize] += 1;
            acc
        },
        merge_vecs,
    )?;
    Ok(WeightEnumerator::new(WeightKind::Lee, c.n(), p.q() as u64, counts))
}

/// Hamming distribution over ring symbols.
pub fn hamming_enumerator_r(c: &LinearCodeR, budget: u128) -> Result<WeightEnumerator> {
    let p = c.params();
    let n = c.n();
    let counts = c.space().par_fold(
        budget,
        || vec![0u64; n + 1],
        |mut acc, x| {
            let w = (0..n).filter(|&i| layout_triple(x, n, i) != [0, 0, 0]).count();
            acc[w] += 1;
            acc
        },
        merge_vecs,
    )?;
    Ok(WeightEnumerator::new(WeightKind::Hamming, n, (p.q() as u64).pow(3), counts))
}

pub fn symmetrized_enumerator(c: &LinearCodeR, budget: u128) -> Result<SymmetrizedEnumerator> {
    let p = c.params();
    let n = c.n();
    let counts = c.space().par_fold(
        budget,
        BTreeMap::new,
        |mut acc, x| {
            let mut alpha = [0u32; 4];
            for i in 0..n {
                alpha[ring::lee_weight_triple(&p, &layout_triple(x, n, i)) as usize] += 1;
            }
            *acc.entry(alpha).or_insert(0) += 1;
            acc
        },
        merge_maps,
    )?;
    Ok(SymmetrizedEnumerator { params: p, n, counts })
}

pub fn complete_enumerator(c: &LinearCodeR, budget: u128) -> Result<CompleteEnumerator> {
    let p = c.params();
    let n = c.n();
    let symbols = (p.q() as usize).pow(3);
    let counts = c.space().par_fold(
        budget,
        BTreeMap::new,
        |mut acc, x| {
            let mut tally = vec![0u32; symbols];
            for i in 0..n {
                tally[ring::triple_index(&p, &layout_triple(x, n, i))] += 1;
            }
            *acc.entry(tally).or_insert(0) += 1;
            acc
        },
        merge_maps,
    )?;
    Ok(CompleteEnumerator { params: p, n, counts })
}

/// Substitution target: Lee uses `X^{3-i} Y^i` for a symbol of class `i`,
/// Hamming uses `X` for the zero symbol and `Y` otherwise.
pub trait Specialize {
    fn specialize(&self, target: WeightKind) -> WeightEnumerator;
}

impl Specialize for SymmetrizedEnumerator {
    fn specialize(&self, target: WeightKind) -> WeightEnumerator {
        let q = self.params.q() as u64;
        let (len, alphabet) = match target {
            WeightKind::Lee => (3 * self.n, q),
            WeightKind::Hamming => (self.n, q.pow(3)),
        };
        let mut counts = vec![0u64; len + 1];
        for (a, &cnt) in &self.counts {
            let w = match target {
                WeightKind::Lee => a[1] + 2 * a[2] + 3 * a[3],
                WeightKind::Hamming => a[1] + a[2] + a[3],
            };
            counts[w as usize] += cnt;
        }
        WeightEnumerator::new(target, self.n, alphabet, counts)
    }
}

impl Specialize for CompleteEnumerator {
    fn specialize(&self, target: WeightKind) -> WeightEnumerator {
        let p = self.params;
        let symbol_weight: Vec<u32> = (0..(p.q() as usize).pow(3))
            .map(|i| {
                let t = ring::triple_from_index(&p, i);
                match target {
                    WeightKind::Lee => ring::lee_weight_triple(&p, &t),
                    WeightKind::Hamming => u32::from(t != [0, 0, 0]),
                }
            })
            .collect();
        let (len, alphabet) = match target {
            WeightKind::Lee => (3 * self.n, p.q() as u64),
            WeightKind::Hamming => (self.n, (p.q() as u64).pow(3)),
        };
        let mut counts = vec![0u64; len + 1];
        for (tally, &cnt) in &self.counts {
            let w: u32 = tally.iter().zip(&symbol_weight).map(|(t, w)| t * w).sum();
            counts[w as usize] += cnt;
        }
        WeightEnumerator::new(target, self.n, alphabet, counts)
    }
}

pub fn specialize<E: Specialize>(e: &E, target: WeightKind) -> WeightEnumerator {
    e.specialize(target)
}

/// Lee MacWilliams transform in the chosen form.
pub fn macwilliams_lee(e: &LeeEnumerator, code_size: u128, form: MacWilliamsForm) -> Result<LeeEnumerator> {
    e.macwilliams_with(code_size, form)
}

/// Class of a symbol: Hamming weight of its Gray image.
pub fn symbol_class(e: &RingElem) -> u32 {
    e.lee_weight()
}

/// Published symbol classes `η0..η7`: which of `a0`, `a1 v`, `a2 v^2` appear.
pub const PUBLISHED_ETA_SUPPORT: [[bool; 3]; 8] = [
    [false, false, false],
    [true, false, false],
    [false, true, false],
    [false, false, true],
    [true, true, false],
    [true, false, true],
    [false, true, true],
    [true, true, true],
];

/// Published membership of `η` classes in `α0..α3`.
pub const PUBLISHED_ALPHA_CLASSES: [&[usize]; 4] = [&[0], &[3, 4, 6, 7], &[1, 4, 5, 6], &[4, 5, 7]];

/// `η` classes listed under more than one `α`, or under none.
pub fn published_class_conflicts() -> (Vec<usize>, Vec<usize>) {
    let mut seen = [0usize; 8];
    for class in PUBLISHED_ALPHA_CLASSES {
        for &eta in class {
            seen[eta] += 1;
        }
    }
    let repeated = (0..8).filter(|&i| seen[i] > 1).collect();
    let missing = (0..8).filter(|&i| seen[i] == 0).collect();
    (repeated, missing)
}
