//! Checks that certify a truncated representation: relation residuals on
//! interior vectors, the joint spectrum against its orbit, the diagonal part
//! of `z11`, simplicity of the weight spectrum, and agreement between the
//! rewriting engine and matrix products.
//!
//! Every check produces a plain report carrying the measured numbers and the
//! tolerance they were compared against, so a stored report can be re-judged
//! without rebuilding anything (see [`VerificationReport::recheck`]).

mod bridge;
mod decomposition;
mod relations;
mod spectrum;
mod weights;

use serde::{Deserialize, Serialize};

pub use bridge::{symbolic_numeric_bridge, BridgeReport, DEFAULT_BRIDGE_SEED};
pub use decomposition::{diagonal_decomposition_check, DecompositionReport};
pub use relations::{cross_identity_check, relation_residuals, CrossIdentityReport};
pub use spectrum::{expected_exponents, joint_spectrum, series_orbit_table, SpectrumReport};
pub use weights::{series_fingerprint, weight_diagnostics, Fingerprint, WeightReport};

use crate::rep::{SeriesSpec, SeriesTag, SparseOperator, TruncatedRep};
use crate::{Real, Result};

/// Relation and cross-identity residuals.
pub const RELATION_TOL: f64 = 1e-10;
/// Quantities that vanish identically in exact arithmetic.
pub const EXACT_TOL: f64 = 1e-14;
/// Commutators of the diagonal family.
pub const COMMUTATOR_TOL: f64 = 1e-12;
/// Distance between a joint eigenvalue and its orbit point.
pub const ORBIT_TOL: f64 = 1e-10;
/// Symbolic against numeric products.
pub const BRIDGE_TOL: f64 = 1e-10;
/// Longest word in any checked identity.
pub const DEFAULT_MARGIN: usize = 3;

/// One measured residual and the verdict against its tolerance.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct ResidualReport {
    pub id: String,
    pub residual: f64,
    pub tolerance: f64,
    pub margin: usize,
    pub pass: bool,
}

impl ResidualReport {
    pub fn new(id: impl Into<String>, residual: f64, tolerance: f64, margin: usize) -> Self {
        let mut r = ResidualReport { id: id.into(), residual, tolerance, margin, pass: false };
        r.rejudge();
        r
    }

    fn rejudge(&mut self) {
        self.pass = self.residual >= 0.0 && self.residual < self.tolerance;
    }
}

/// `max_c ||(lhs - rhs) e_c|| / max(1, ||lhs e_c||)` over the given columns.
pub fn normalized_residual<T: Real>(lhs: &SparseOperator<T>, rhs: &SparseOperator<T>, cols: &[usize]) -> T {
    let diff = lhs.sub(rhs);
    cols.iter().fold(T::zero(), |acc, &c| {
        acc.max(diff.column_norm(c) / lhs.column_norm(c).max(T::one()))
    })
}

/// Everything known about one `(series, phases, q, cutoff)` run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct VerificationReport {
    pub series: SeriesTag,
    pub phases: Vec<f64>,
    pub q: f64,
    pub cutoff: usize,
    pub margin: usize,
    pub relations: Vec<ResidualReport>,
    pub cross_identities: Vec<CrossIdentityReport>,
    pub spectrum: SpectrumReport,
    pub decomposition: Option<DecompositionReport>,
    pub weights: WeightReport,
    pub fingerprint: Fingerprint,
    pub bridge: BridgeReport,
    pub pass: bool,
}

impl VerificationReport {
    /// Recomputes every pass flag from the stored numbers and tolerances.
    pub fn recheck(&self) -> VerificationReport {
        let mut r = self.clone();
        r.relations.iter_mut().for_each(ResidualReport::rejudge);
        r.cross_identities.iter_mut().for_each(|c| c.numeric.rejudge());
        r.spectrum.rejudge();
        if let Some(d) = r.decomposition.as_mut() {
            d.rejudge();
        }
        r.weights.rejudge();
        r.bridge.rejudge();
        r.pass = r.all_pass();
        r
    }

    fn all_pass(&self) -> bool {
        self.relations.iter().all(|r| r.pass)
            && self.cross_identities.iter().all(|c| c.numeric.pass)
            && self.spectrum.pass
            && self.decomposition.as_ref().is_none_or(|d| d.pass)
            && self.weights.pass
            && self.bridge.pass
    }

    /// Names of the checks that failed.
    pub fn failures(&self) -> Vec<String> {
        let mut out: Vec<String> = self
            .relations
            .iter()
            .filter(|r| !r.pass)
            .map(|r| format!("relation {}", r.id))
            .collect();
        out.extend(self.cross_identities.iter().filter(|c| !c.numeric.pass).map(|c| c.numeric.id.clone()));
        if !self.spectrum.pass {
            out.push("spectrum".into());
        }
        if let Some(d) = &self.decomposition {
            out.extend(d.checks().filter(|r| !r.pass).map(|r| format!("decomposition {}", r.id)));
        }
        if !self.weights.pass {
            out.push("weights".into());
        }
        if !self.bridge.pass {
            out.push("bridge".into());
        }
        out
    }
}

/// Builds the representation and runs every check on it.
pub fn run_verification<T: Real>(spec: SeriesSpec<T>, cutoff: usize, margin: usize) -> Result<VerificationReport> {
    let rep = TruncatedRep::build(spec, cutoff)?;
    verify_rep(&rep, margin)
}

/// Runs every check on an already built representation.
pub fn verify_rep<T: Real>(rep: &TruncatedRep<T>, margin: usize) -> Result<VerificationReport> {
    let relations = relation_residuals(rep, margin, RELATION_TOL)?;
    let cross_identities = cross_identity_check(rep, margin, RELATION_TOL)?;
    let spectrum = joint_spectrum(rep)?;
    let decomposition = match diagonal_decomposition_check(rep, margin) {
        Ok(d) => Some(d),
        Err(crate::Error::NotApplicable { .. }) => None,
        Err(e) => return Err(e),
    };
    let weights = weight_diagnostics(rep);
    let fingerprint = series_fingerprint(rep, margin)?;
    let bridge = symbolic_numeric_bridge(rep, 100, DEFAULT_BRIDGE_SEED);
    let mut report = VerificationReport {
        series: rep.series(),
        phases: rep.spec().phases.iter().map(|p| p.as_f64()).collect(),
        q: rep.q().as_f64(),
        cutoff: rep.lattice().cutoff,
        margin,
        relations,
        cross_identities,
        spectrum,
        decomposition,
        weights,
        fingerprint,
        bridge,
        pass: false,
    };
    report.pass = report.all_pass();
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Series;

    #[test]
    fn full_run_on_rho_full() {
        let spec = Series::untwisted(SeriesTag::RhoFull, 0.5).unwrap();
        let report = run_verification(spec, 7, 3).unwrap();
        assert!(report.pass, "{:?}", report.failures());
        assert_eq!(report.recheck(), report);
        assert_eq!(report.spectrum.orbit, crate::OrbitTag::Base000);
    }

    #[test]
    fn recheck_flags_tampered_residuals() {
        let spec = Series::new(SeriesTag::Pi, vec![0.0], 0.5).unwrap();
        let mut report = run_verification(spec, 20, 3).unwrap();
        assert!(report.pass);
        report.relations[3].residual = 1.0;
        let again = report.recheck();
        assert!(!again.pass);
        assert_eq!(again.failures(), vec!["relation 4".to_string()]);
    }

    #[test]
    fn no_interior_is_a_configuration_error() {
        let spec = Series::untwisted(SeriesTag::RhoFull, 0.5).unwrap();
        assert_eq!(
            run_verification(spec, 4, 3).unwrap_err(),
            crate::Error::NoInterior { cutoff: 4, margin: 3 }
        );
    }
}
