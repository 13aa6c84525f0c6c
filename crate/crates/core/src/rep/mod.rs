//! Finite truncations of the irreducible series as sparse weighted shifts.
//!
//! Each series acts on a multi-indexed basis `e_{i_1..i_d}` with `d` between
//! 0 and 4. Truncation keeps indices in `[0, N)` per axis; a transition that
//! would leave the box is dropped. Downward transitions out of the box
//! already carry a zero weight (`sqrt(1 - q^0)`), so only the upper faces
//! of the box are truncation artifacts.

mod build;
mod sparse;

use std::f64::consts::TAU;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

pub use build::{shift_offsets, TruncatedRep};
pub use sparse::{SparseOperator, TripletList};

use crate::{Error, Real, Result};

/// Upper bound on lattice rank across all series.
pub const MAX_RANK: usize = 4;

/// The seven families of irreducible representations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SeriesTag {
    /// One-dimensional `xi_{phi1, phi2}`.
    OneDim,
    /// `pi_phi` on `l2(Z+)`: `z21 = z12 = 0`, `z22` a unitary scalar.
    Pi,
    /// `rho_{phi1, phi2}` on `l2(Z+)`.
    Rho12,
    /// `rho^1_phi` on `l2(Z+^2)`, `z21` shifting the first axis.
    Rho1,
    /// `rho^2_phi` on `l2(Z+^2)`, `z12` shifting the first axis.
    Rho2,
    /// `rho-hat_phi` on `l2(Z+^3)`.
    HatRho,
    /// `rho` on `l2(Z+^4)`, no parameters.
    RhoFull,
}

impl SeriesTag {
    pub const ALL: [SeriesTag; 7] = [
        SeriesTag::OneDim,
        SeriesTag::Pi,
        SeriesTag::Rho12,
        SeriesTag::Rho1,
        SeriesTag::Rho2,
        SeriesTag::HatRho,
        SeriesTag::RhoFull,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SeriesTag::OneDim => "one-dim",
            SeriesTag::Pi => "pi",
            SeriesTag::Rho12 => "rho12",
            SeriesTag::Rho1 => "rho1",
            SeriesTag::Rho2 => "rho2",
            SeriesTag::HatRho => "hat-rho",
            SeriesTag::RhoFull => "rho-full",
        }
    }

    pub fn rank(self) -> usize {
        match self {
            SeriesTag::OneDim => 0,
            SeriesTag::Pi | SeriesTag::Rho12 => 1,
            SeriesTag::Rho1 | SeriesTag::Rho2 => 2,
            SeriesTag::HatRho => 3,
            SeriesTag::RhoFull => 4,
        }
    }

    pub fn phase_arity(self) -> usize {
        match self {
            SeriesTag::OneDim | SeriesTag::Rho12 => 2,
            SeriesTag::RhoFull => 0,
            _ => 1,
        }
    }

    /// Axis names in enumeration order (last axis varies fastest).
    pub fn axes(self) -> &'static [&'static str] {
        match self {
            SeriesTag::OneDim => &[],
            SeriesTag::Pi | SeriesTag::Rho12 => &["k"],
            SeriesTag::Rho1 | SeriesTag::Rho2 => &["m", "k"],
            SeriesTag::HatRho => &["m", "l", "k"],
            SeriesTag::RhoFull => &["s", "m", "l", "k"],
        }
    }

    /// Default cutoff: 20, 12, 8, 6 for ranks 1 through 4, raised to
    /// `2 * margin + 1` when that leaves no interior vector.
    pub fn default_cutoff(self, margin: usize) -> usize {
        let base = match self.rank() {
            0 => 1,
            1 => 20,
            2 => 12,
            3 => 8,
            _ => 6,
        };
        if self.rank() == 0 {
            base
        } else {
            base.max(2 * margin + 1)
        }
    }
}

impl fmt::Display for SeriesTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SeriesTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SeriesTag::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| Error::UnknownSeries(s.to_string()))
    }
}

/// A series tag with its phases and the deformation parameter.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(bound(serialize = "T: Real + Serialize", deserialize = "T: Real + Deserialize<'de>"))]
pub struct SeriesSpec<T> {
    pub series: SeriesTag,
    pub phases: Vec<T>,
    pub q: T,
}

impl<T: Real> SeriesSpec<T> {
    /// Validates the phase count and `q`; phases are reduced into `[0, 2pi)`.
    pub fn new(series: SeriesTag, phases: Vec<T>, q: T) -> Result<Self> {
        let qf = q.as_f64();
        if !(qf > 0.0 && qf < 1.0) {
            return Err(Error::QOutOfRange(qf));
        }
        if phases.len() != series.phase_arity() {
            return Err(Error::PhaseArity {
                series: series.name(),
                expected: series.phase_arity(),
                got: phases.len(),
            });
        }
        let tau = T::lit(TAU);
        let phases = phases
            .into_iter()
            .map(|p| {
                if p.is_finite() {
                    let r = p % tau;
                    Ok(if r < T::zero() { r + tau } else { r })
                } else {
                    Err(Error::InvalidPhase(p.as_f64()))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(SeriesSpec { series, phases, q })
    }

    /// All phases zero.
    pub fn untwisted(series: SeriesTag, q: T) -> Result<Self> {
        Self::new(series, vec![T::zero(); series.phase_arity()], q)
    }
}

/// Multi-index basis `[0, N)^rank`, enumerated lexicographically with the
/// last axis fastest.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisLattice {
    pub rank: usize,
    pub cutoff: usize,
}

impl BasisLattice {
    pub fn new(rank: usize, cutoff: usize) -> Result<Self> {
        if cutoff == 0 {
            return Err(Error::InvalidCutoff(cutoff));
        }
        assert!(rank <= MAX_RANK, "rank {rank} exceeds {MAX_RANK}");
        Ok(BasisLattice { rank, cutoff })
    }

    pub fn dimension(&self) -> usize {
        self.cutoff.pow(self.rank as u32)
    }

    /// Enumeration index of a multi-index, or `None` outside the box.
    pub fn index(&self, coords: &[i64]) -> Option<usize> {
        debug_assert_eq!(coords.len(), self.rank);
        let n = self.cutoff as i64;
        coords.iter().try_fold(0usize, |acc, &c| {
            (0..n).contains(&c).then(|| acc * self.cutoff + c as usize)
        })
    }

    pub fn coords(&self, index: usize) -> Vec<usize> {
        let mut out = vec![0; self.rank];
        let mut rest = index;
        for slot in out.iter_mut().rev() {
            *slot = rest % self.cutoff;
            rest /= self.cutoff;
        }
        out
    }

    /// Indices whose every coordinate lies in `[margin, N - margin)`.
    ///
    /// Rank 0 has the single basis vector as its interior.
    pub fn interior(&self, margin: usize) -> Result<Vec<usize>> {
        if self.rank == 0 {
            return Ok(vec![0]);
        }
        if self.cutoff <= 2 * margin {
            return Err(Error::NoInterior { cutoff: self.cutoff, margin });
        }
        Ok((0..self.dimension())
            .filter(|&i| self.coords(i).iter().all(|&c| c >= margin && c < self.cutoff - margin))
            .collect())
    }

    /// Indices whose coordinates all lie below `N - reach`: vectors from
    /// which no word of length `reach` can climb out of the box.
    pub fn below_top(&self, reach: usize) -> Vec<usize> {
        (0..self.dimension())
            .filter(|&i| self.coords(i).iter().all(|&c| c + reach < self.cutoff))
            .collect()
    }
}
