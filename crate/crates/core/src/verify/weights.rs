use std::collections::hash_map::DefaultHasher;
use std::hash::{Hash, Hasher};

use serde::{Deserialize, Serialize};

use super::COMMUTATOR_TOL;
use crate::algebra::Generator;
use crate::rep::{SparseOperator, TruncatedRep};
use crate::{Real, Result};

/// Diagonal values of `z21 z21*, z12 z12*, z22 z22*` and `a a*`, where `a`
/// is the diagonal part of `z11`, and how well they separate the basis.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct WeightReport {
    pub dimension: usize,
    /// Largest pairwise commutator modulus of the four operators.
    pub commutator: f64,
    /// Largest off-diagonal modulus of the four operators.
    pub off_diagonal: f64,
    /// Smallest max-norm distance between two basis vectors' 4-tuples;
    /// absent for a one-dimensional space.
    pub min_gap: Option<f64>,
    /// All 4-tuples pairwise distinct.
    pub simple: bool,
    #[serde(skip)]
    pub tuples: Vec<[f64; 4]>,
    pub pass: bool,
}

impl WeightReport {
    pub(crate) fn rejudge(&mut self) {
        self.simple = self.min_gap.is_none_or(|g| g > 0.0);
        self.pass = self.simple && self.commutator < COMMUTATOR_TOL && self.off_diagonal < COMMUTATOR_TOL;
    }
}

fn family<T: Real>(rep: &TruncatedRep<T>) -> [SparseOperator<T>; 4] {
    let a = rep.diagonal_part_z11();
    [
        rep.gram(Generator::Z21),
        rep.gram(Generator::Z12),
        rep.gram(Generator::Z22),
        a.mul(&a.adjoint()),
    ]
}

/// Smallest max-norm distance between any two tuples.
fn min_chebyshev_gap(tuples: &[[f64; 4]]) -> Option<f64> {
    let mut best: Option<f64> = None;
    for (i, a) in tuples.iter().enumerate() {
        for b in &tuples[i + 1..] {
            let d = a.iter().zip(b).fold(0.0f64, |acc, (x, y)| acc.max((x - y).abs()));
            best = Some(best.map_or(d, |g| g.min(d)));
        }
    }
    best
}

pub fn weight_diagnostics<T: Real>(rep: &TruncatedRep<T>) -> WeightReport {
    let ops = family(rep);
    let mut commutator = T::zero();
    for i in 0..4 {
        for j in i + 1..4 {
            commutator = commutator.max(ops[i].commutator(&ops[j]).max_abs());
        }
    }
    let off_diagonal = ops.iter().fold(T::zero(), |acc, o| acc.max(o.off_diagonal_max()));
    let diagonals = ops.map(|o| o.diagonal());
    let tuples: Vec<[f64; 4]> = (0..rep.dim())
        .map(|i| [0, 1, 2, 3].map(|a| diagonals[a][i].re.as_f64()))
        .collect();
    let mut report = WeightReport {
        dimension: rep.dim(),
        commutator: commutator.as_f64(),
        off_diagonal: off_diagonal.as_f64(),
        min_gap: min_chebyshev_gap(&tuples),
        simple: false,
        tuples,
        pass: false,
    };
    report.rejudge();
    report
}

/// Invariants that tell the series apart at equal cutoffs.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Fingerprint {
    pub rank: usize,
    /// Hash of the sorted joint spectrum rounded to `1e-9`.
    pub spectrum_digest: String,
    /// Interior basis vectors annihilated by `z11, z21, z12, z22`.
    pub interior_kernel: [usize; 4],
    /// Which of `z11, z21, z12, z22` are diagonal and nonzero.
    pub diagonal: [bool; 4],
    #[serde(skip)]
    pub spectrum: Vec<[i64; 3]>,
}

impl PartialEq for Fingerprint {
    fn eq(&self, other: &Self) -> bool {
        self.rank == other.rank
            && self.spectrum_digest == other.spectrum_digest
            && self.interior_kernel == other.interior_kernel
            && self.diagonal == other.diagonal
    }
}

pub fn series_fingerprint<T: Real>(rep: &TruncatedRep<T>, margin: usize) -> Result<Fingerprint> {
    let grams = [Generator::Z21, Generator::Z12, Generator::Z22].map(|g| rep.gram(g).diagonal());
    let mut spectrum: Vec<[i64; 3]> = (0..rep.dim())
        .map(|i| [0, 1, 2].map(|a| (grams[a][i].re.as_f64() * 1e9).round() as i64))
        .collect();
    spectrum.sort_unstable();
    let mut hasher = DefaultHasher::new();
    spectrum.hash(&mut hasher);

    let interior = rep.lattice().interior(margin)?;
    let tiny = T::lit(1e-12);
    let interior_kernel = Generator::ALL.map(|g| {
        let op = rep.generator(g);
        interior.iter().filter(|&&c| op.column_norm(c) < tiny).count()
    });
    let diagonal = Generator::ALL.map(|g| {
        let op = rep.generator(g);
        op.nnz() > 0 && op.off_diagonal_max() == T::zero()
    });
    Ok(Fingerprint {
        rank: rep.lattice().rank,
        spectrum_digest: format!("{:016x}", hasher.finish()),
        interior_kernel,
        diagonal,
        spectrum,
    })
}
