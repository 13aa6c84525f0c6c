use std::collections::BTreeMap;

use num_complex::Complex;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::{BasisLattice, SeriesSpec, SeriesTag, SparseOperator, MAX_RANK};
use crate::algebra::{Generator, Letter, NormalPolynomial, Word, WordPolynomial};
use crate::{Error, ExactField, Real, Result};

type Offset = [i64; MAX_RANK];

/// One term `weight * e_{idx + offset}` of a generator acting on `e_idx`.
struct Term<T> {
    offset: Offset,
    weight: Complex<T>,
}

fn off(v: &[i64]) -> Offset {
    let mut o = [0; MAX_RANK];
    o[..v.len()].copy_from_slice(v);
    o
}

/// Index offsets of each term of a generator, in the series' axis order.
pub fn shift_offsets(series: SeriesTag, g: Generator) -> Vec<Vec<i64>> {
    use Generator::*;
    use SeriesTag::*;
    let v: Vec<&[i64]> = match (series, g) {
        (OneDim, Z11 | Z22) => vec![&[]],
        (OneDim, _) => vec![],
        (Pi, Z11) => vec![&[1]],
        (Pi, Z22) => vec![&[0]],
        (Pi, _) => vec![],
        (Rho12, Z11) => vec![&[-1]],
        (Rho12, Z21 | Z12) => vec![&[0]],
        (Rho12, Z22) => vec![&[1]],
        (Rho1 | Rho2, Z11) => vec![&[1, -1]],
        (Rho1, Z21) | (Rho2, Z12) => vec![&[1, 0]],
        (Rho1, Z12) | (Rho2, Z21) => vec![&[0, 0]],
        (Rho1 | Rho2, Z22) => vec![&[0, 1]],
        (HatRho, Z11) => vec![&[0, 0, 0], &[1, 1, -1]],
        (HatRho, Z21) => vec![&[1, 0, 0]],
        (HatRho, Z12) => vec![&[0, 1, 0]],
        (HatRho, Z22) => vec![&[0, 0, 1]],
        (RhoFull, Z11) => vec![&[1, 0, 0, 0], &[0, 1, 1, -1]],
        (RhoFull, Z21) => vec![&[0, 1, 0, 0]],
        (RhoFull, Z12) => vec![&[0, 0, 1, 0]],
        (RhoFull, Z22) => vec![&[0, 0, 0, 1]],
    };
    v.into_iter().map(<[i64]>::to_vec).collect()
}

/// Weights of the defining action on `e_idx`, in the same order as
/// [`shift_offsets`].
fn weights<T: Real>(spec: &SeriesSpec<T>, g: Generator, idx: &[i64]) -> Vec<Complex<T>> {
    use Generator::*;
    use SeriesTag::*;
    let q = spec.q;
    let one = T::one();
    let re = |x: T| Complex::new(x, T::zero());
    let phase = |i: usize| Complex::from_polar(one, spec.phases[i]);
    // sqrt(1 - q^(2n))
    let w = |n: i64| (one - q.powi(2 * n as i32)).max(T::zero()).sqrt();
    let qp = |n: i64| q.powi(n as i32);
    let qinv = one / q;

    match (spec.series, g) {
        (OneDim, Z11) => vec![phase(0) * qinv],
        (OneDim, Z22) => vec![phase(1)],
        (OneDim, _) => vec![],
        (Pi, Z11) => vec![re(qinv * w(idx[0] + 1))],
        (Pi, Z22) => vec![phase(0)],
        (Pi, _) => vec![],
        (Rho12, _) => {
            let k = idx[0];
            match g {
                Z11 => vec![-(phase(0) * phase(1)) * (qinv * w(k))],
                Z21 => vec![phase(0) * qp(k)],
                Z12 => vec![phase(1) * qp(k)],
                Z22 => vec![re(w(k + 1))],
            }
        }
        (Rho1 | Rho2, _) => {
            let (m, k) = (idx[0], idx[1]);
            let shift = re(qp(k) * w(m + 1));
            let diag = phase(0) * qp(k);
            match (spec.series, g) {
                (_, Z11) => vec![-phase(0) * (qinv * w(m + 1) * w(k))],
                (Rho1, Z21) | (Rho2, Z12) => vec![shift],
                (Rho1, Z12) | (Rho2, Z21) => vec![diag],
                _ => vec![re(w(k + 1))],
            }
        }
        (HatRho | RhoFull, _) => {
            // RhoFull carries the extra leading axis s.
            let (s, rest) = if spec.series == RhoFull { (idx[0], &idx[1..]) } else { (0, idx) };
            let (m, l, k) = (rest[0], rest[1], rest[2]);
            match g {
                Z11 => {
                    let diagonal = if spec.series == HatRho {
                        phase(0) * qp(m + l)
                    } else {
                        re(qp(m + l) * w(s + 1))
                    };
                    vec![diagonal, re(-qinv * w(l + 1) * w(m + 1) * w(k))]
                }
                Z21 => vec![re(qp(k) * w(m + 1))],
                Z12 => vec![re(qp(k) * w(l + 1))],
                Z22 => vec![re(w(k + 1))],
            }
        }
    }
}

fn terms<T: Real>(spec: &SeriesSpec<T>, g: Generator, idx: &[i64]) -> Vec<Term<T>> {
    shift_offsets(spec.series, g)
        .into_iter()
        .zip(weights(spec, g, idx))
        .map(|(o, weight)| Term { offset: off(&o), weight })
        .collect()
}

/// A series realized on a truncated basis: four generator matrices and
/// their exact conjugate transposes.
#[derive(Debug, Clone, PartialEq)]
pub struct TruncatedRep<T> {
    spec: SeriesSpec<T>,
    lattice: BasisLattice,
    generators: [SparseOperator<T>; 4],
    adjoints: [SparseOperator<T>; 4],
    defect: Vec<T>,
}

/// Diagonal of `1 - z22 z22*` in closed form: `q^(2k)` on the last axis,
/// zero for the series where `z22` is unitary.
fn defect_diagonal<T: Real>(spec: &SeriesSpec<T>, lattice: &BasisLattice) -> Vec<T> {
    let q2 = spec.q * spec.q;
    (0..lattice.dimension())
        .map(|i| match spec.series {
            SeriesTag::OneDim | SeriesTag::Pi => T::zero(),
            _ => q2.powi(*lattice.coords(i).last().unwrap() as i32),
        })
        .collect()
}

impl<T: Real> TruncatedRep<T> {
    /// Builds all four generators from the series formulas on `[0, N)^rank`.
    pub fn build(spec: SeriesSpec<T>, cutoff: usize) -> Result<Self> {
        let lattice = BasisLattice::new(spec.series.rank(), cutoff)?;
        let rank = lattice.rank;
        let dim = lattice.dimension();
        let generators = Generator::ALL.map(|g| {
            let mut triplets = Vec::new();
            for col in 0..dim {
                let idx: Vec<i64> = lattice.coords(col).into_iter().map(|c| c as i64).collect();
                for term in terms(&spec, g, &idx) {
                    let dest: Vec<i64> = (0..rank).map(|a| idx[a] + term.offset[a]).collect();
                    if let Some(row) = lattice.index(&dest) {
                        triplets.push((row, col, term.weight));
                    }
                }
            }
            SparseOperator::from_triplets(dim, triplets)
        });
        let adjoints = [0, 1, 2, 3].map(|i| generators[i].adjoint());
        let defect = defect_diagonal(&spec, &lattice);
        Ok(TruncatedRep { spec, lattice, generators, adjoints, defect })
    }

    pub fn spec(&self) -> &SeriesSpec<T> {
        &self.spec
    }

    pub fn series(&self) -> SeriesTag {
        self.spec.series
    }

    pub fn q(&self) -> T {
        self.spec.q
    }

    pub fn lattice(&self) -> &BasisLattice {
        &self.lattice
    }

    pub fn dim(&self) -> usize {
        self.lattice.dimension()
    }

    pub fn generator(&self, g: Generator) -> &SparseOperator<T> {
        &self.generators[g.index()]
    }

    pub fn adjoint(&self, g: Generator) -> &SparseOperator<T> {
        &self.adjoints[g.index()]
    }

    pub fn letter(&self, l: Letter) -> &SparseOperator<T> {
        if l.starred {
            self.adjoint(l.generator)
        } else {
            self.generator(l.generator)
        }
    }

    /// Product of letter matrices in word order; the unit word is the identity.
    pub fn represent_word(&self, w: &Word) -> SparseOperator<T> {
        let mut letters = w.letters().iter();
        let Some(first) = letters.next() else {
            return SparseOperator::identity(self.dim());
        };
        letters.fold(self.letter(*first).clone(), |acc, l| acc.mul(self.letter(*l)))
    }

    /// `z_g z_g*`.
    pub fn gram(&self, g: Generator) -> SparseOperator<T> {
        self.generator(g).mul(self.adjoint(g))
    }

    /// Image of an algebra element, coefficients evaluated at this
    /// representation's `q`.
    pub fn represent_polynomial<F: ExactField>(&self, p: &NormalPolynomial<F>) -> SparseOperator<T> {
        let mut out = SparseOperator::zeros(self.dim());
        for (m, c) in p.terms() {
            let c = Complex::new(c.eval_unchecked(self.q()), T::zero());
            out = out.axpy(c, &self.represent_word(&m.word()));
        }
        out
    }

    /// Image of an un-normalized combination of words, each word multiplied
    /// out letter by letter.
    pub fn represent_word_polynomial<F: ExactField>(&self, p: &WordPolynomial<F>) -> SparseOperator<T> {
        let mut out = SparseOperator::zeros(self.dim());
        for (w, c) in p.terms() {
            let c = Complex::new(c.eval_unchecked(self.q()), T::zero());
            out = out.axpy(c, &self.represent_word(w));
        }
        out
    }

    /// Diagonal entries of `1 - z22 z22*`, exact rather than formed by
    /// subtraction (which loses everything once `q^(2k)` drops below epsilon).
    pub fn z22_defect(&self) -> &[T] {
        &self.defect
    }

    /// `-q z21 z12 z22* (1 - z22 z22*)^-1`, the part of `z11` that moves
    /// between joint eigenspaces. Where the defect vanishes (`x3 = 1`) the
    /// inverse is taken to be zero.
    pub fn z11_correction(&self) -> SparseOperator<T> {
        let inverse = SparseOperator::diagonal_from(self.defect.iter().map(|d| {
            if d.is_zero() {
                Complex::zero()
            } else {
                Complex::new(T::one() / *d, T::zero())
            }
        }));
        self.generator(Generator::Z21)
            .mul(self.generator(Generator::Z12))
            .mul(self.adjoint(Generator::Z22))
            .mul(&inverse)
            .scale(Complex::new(-self.q(), T::zero()))
    }

    /// `z11_0 = z11 - correction`: the block-diagonal part of `z11` with
    /// respect to the joint eigenspaces of `z21 z21*, z12 z12*, z22 z22*`.
    /// For the series living on the fixed point `(0, 0, 1)` this is `z11`.
    pub fn diagonal_part_z11(&self) -> SparseOperator<T> {
        self.generator(Generator::Z11).sub(&self.z11_correction())
    }
}

#[derive(Serialize, Deserialize)]
#[serde(bound(serialize = "T: Real + Serialize", deserialize = "T: Real + Deserialize<'de>"))]
struct RepJson<T> {
    spec: SeriesSpec<T>,
    lattice: BasisLattice,
    operators: BTreeMap<Generator, SparseOperator<T>>,
}

impl<T: Real + Serialize> Serialize for TruncatedRep<T> {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        RepJson {
            spec: self.spec.clone(),
            lattice: self.lattice,
            operators: Generator::ALL.iter().map(|g| (*g, self.generator(*g).clone())).collect(),
        }
        .serialize(serializer)
    }
}

impl<'de, T: Real + Deserialize<'de>> Deserialize<'de> for TruncatedRep<T> {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = RepJson::<T>::deserialize(deserializer)?;
        let spec = SeriesSpec::new(raw.spec.series, raw.spec.phases, raw.spec.q).map_err(D::Error::custom)?;
        let lattice = BasisLattice::new(raw.lattice.rank, raw.lattice.cutoff).map_err(D::Error::custom)?;
        if lattice.rank != spec.series.rank() {
            return Err(D::Error::custom(Error::Structural("lattice rank does not match series".into())));
        }
        let mut ops = raw.operators;
        let mut take = |g: Generator| {
            ops.remove(&g)
                .filter(|op| op.dim() == lattice.dimension())
                .ok_or_else(|| D::Error::custom(format!("missing or mis-sized operator {g}")))
        };
        let generators = [take(Generator::Z11)?, take(Generator::Z21)?, take(Generator::Z12)?, take(Generator::Z22)?];
        let adjoints = [0, 1, 2, 3].map(|i| generators[i].adjoint());
        let defect = defect_diagonal(&spec, &lattice);
        Ok(TruncatedRep { spec, lattice, generators, adjoints, defect })
    }
}
