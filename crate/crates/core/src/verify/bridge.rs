use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::BRIDGE_TOL;
use crate::algebra::{Letter, Word};
use crate::rep::TruncatedRep;
use crate::{algebra, Real};

pub const DEFAULT_BRIDGE_SEED: u64 = 0x5eed_0001;
/// Longest sampled word.
pub const MAX_WORD_LEN: usize = 5;

/// Normal forms pushed through a representation against raw matrix products.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct BridgeReport {
    pub words: usize,
    pub seed: u64,
    /// Largest entrywise difference, relative to `max(1, |direct|)`.
    pub max_error: f64,
    pub tolerance: f64,
    pub pass: bool,
}

impl BridgeReport {
    pub(crate) fn rejudge(&mut self) {
        self.pass = self.max_error < self.tolerance;
    }
}

/// Uniformly random words of length `0..=MAX_WORD_LEN`.
pub fn random_words(count: usize, seed: u64) -> Vec<Word> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let len = rng.gen_range(0..=MAX_WORD_LEN);
            Word::from_letters((0..len).map(|_| Letter::ALL[rng.gen_range(0..8)]))
        })
        .collect()
}

/// Compares on columns a word of maximal length cannot push out of the box,
/// where truncation agrees with the untruncated operators.
pub fn symbolic_numeric_bridge<T: Real>(rep: &TruncatedRep<T>, count: usize, seed: u64) -> BridgeReport {
    let cols = rep.lattice().below_top(MAX_WORD_LEN);
    let mut max_error = T::zero();
    for w in random_words(count, seed) {
        let direct = rep.represent_word(&w);
        let via_nf = rep.represent_polynomial(&algebra().normal_form(&w));
        let scale = direct.max_abs().max(T::one());
        max_error = max_error.max(direct.max_abs_diff_on(&via_nf, &cols) / scale);
    }
    let mut report = BridgeReport { words: count, seed, max_error: max_error.as_f64(), tolerance: BRIDGE_TOL, pass: false };
    report.rejudge();
    report
}
