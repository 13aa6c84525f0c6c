use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::{normalized_residual, ResidualReport};
use crate::algebra::Relation;
use crate::rep::TruncatedRep;
use crate::{algebra, Rational, Real, Result};

fn residual_of<T: Real>(rep: &TruncatedRep<T>, r: &Relation<Rational>, cols: &[usize], margin: usize, tol: f64) -> ResidualReport {
    let lhs = rep.represent_word_polynomial(&r.lhs);
    let rhs = rep.represent_word_polynomial(&r.rhs);
    ResidualReport::new(r.id.clone(), normalized_residual(&lhs, &rhs, cols).as_f64(), tol, margin)
}

/// Residual of each of the 16 defining relations, both sides multiplied out
/// word by word and compared on interior basis vectors.
pub fn relation_residuals<T: Real>(rep: &TruncatedRep<T>, margin: usize, tol: f64) -> Result<Vec<ResidualReport>> {
    let cols = rep.lattice().interior(margin)?;
    Ok(algebra()
        .relations()
        .iter()
        .map(|r| residual_of(rep, r, &cols, margin, tol))
        .collect())
}

/// A cross identity checked numerically and, independently of any
/// representation, by reduction to normal form.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct CrossIdentityReport {
    #[serde(flatten)]
    pub numeric: ResidualReport,
    /// `lhs - rhs` reduces to zero. A `false` here points at the identity
    /// itself, not the representation, so it does not enter `pass`.
    pub symbolic_zero: bool,
}

/// The three identities `z_a z_a* z11 = z11 z_a z_a* + c (q - q^-1) z21 z12 z22*`.
pub fn cross_identity_check<T: Real>(rep: &TruncatedRep<T>, margin: usize, tol: f64) -> Result<Vec<CrossIdentityReport>> {
    let cols = rep.lattice().interior(margin)?;
    Ok(algebra()
        .cross_identities()
        .iter()
        .map(|r| CrossIdentityReport {
            numeric: residual_of(rep, r, &cols, margin, tol),
            symbolic_zero: algebra().relation_defect(r).is_zero(),
        })
        .collect())
}
