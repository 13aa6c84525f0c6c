use num_complex::Complex;
use serde::{Deserialize, Serialize};

use super::{joint_spectrum, normalized_residual, ResidualReport, EXACT_TOL, RELATION_TOL};
use crate::algebra::Generator;
use crate::rep::{SeriesTag, SparseOperator, TruncatedRep};
use crate::{Error, Real, Result};

/// The split `z11 = z11_0 + correction` and the relations `z11_0` obeys.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct DecompositionReport {
    /// Compression of `z11` onto joint eigenspaces against `z11 - correction`.
    pub split: ResidualReport,
    /// `z11_0 = 0` (series on the orbits with `x1` or `x2` inert).
    pub vanishing: Option<ResidualReport>,
    /// `a* a = q^2 a a* + (1 - q^2) q^(2(m+l))` (series on `(0,0,0)`).
    pub block_identity: Option<ResidualReport>,
    /// `a z12 = q z12 a`, `a z21 = q z21 a`, `a z22 = z22 a` and the same for `a*`.
    pub commutation: Vec<ResidualReport>,
    pub pass: bool,
}

impl DecompositionReport {
    pub fn checks(&self) -> impl Iterator<Item = &ResidualReport> {
        std::iter::once(&self.split)
            .chain(self.vanishing.iter())
            .chain(self.block_identity.iter())
            .chain(self.commutation.iter())
    }

    pub(crate) fn rejudge(&mut self) {
        self.split.rejudge();
        self.vanishing.iter_mut().for_each(ResidualReport::rejudge);
        self.block_identity.iter_mut().for_each(ResidualReport::rejudge);
        self.commutation.iter_mut().for_each(ResidualReport::rejudge);
        let pass = self.checks().all(|r| r.pass);
        self.pass = pass;
    }
}

fn max_entry_on<T: Real>(op: &SparseOperator<T>, cols: &[usize]) -> T {
    cols.iter()
        .flat_map(|&c| op.column(c).iter())
        .fold(T::zero(), |acc, (_, v)| acc.max(v.norm()))
}

/// Checks the diagonal part of `z11` for every series off the fixed point.
pub fn diagonal_decomposition_check<T: Real>(rep: &TruncatedRep<T>, margin: usize) -> Result<DecompositionReport> {
    let series = rep.series();
    if matches!(series, SeriesTag::OneDim | SeriesTag::Pi) {
        return Err(Error::NotApplicable { check: "diagonal decomposition", series: series.name() });
    }
    let cols = rep.lattice().interior(margin)?;
    let spectrum = joint_spectrum(rep)?;
    let labels = &spectrum.exponents;
    let z11 = rep.generator(Generator::Z11);
    let a = rep.diagonal_part_z11();
    let q = rep.q();

    // Sum of P z11 P over joint eigenspaces, labels taken from the spectrum.
    let compressed = SparseOperator::from_triplets(
        rep.dim(),
        z11.triplets().filter(|(r, c, _)| labels[*r].is_some() && labels[*r] == labels[*c]),
    );
    let split = z11.sub(&compressed).sub(&rep.z11_correction());
    let split = ResidualReport::new("split", max_entry_on(&split, &cols).as_f64(), RELATION_TOL, margin);

    let (vanishing, block_identity) = match series {
        SeriesTag::HatRho | SeriesTag::RhoFull => {
            let weight = SparseOperator::diagonal_from(labels.iter().map(|e| {
                let [m, l, _] = e.unwrap_or([0, 0, 0]);
                Complex::new((T::one() - q * q) * q.powi(2 * (m + l)), T::zero())
            }));
            let lhs = a.adjoint().mul(&a);
            let rhs = a.mul(&a.adjoint()).scale(Complex::new(q * q, T::zero())).add(&weight);
            let r = normalized_residual(&lhs, &rhs, &cols);
            (None, Some(ResidualReport::new("block", r.as_f64(), RELATION_TOL, margin)))
        }
        _ => (Some(ResidualReport::new("vanishing", max_entry_on(&a, &cols).as_f64(), EXACT_TOL, margin)), None),
    };

    let a_star = a.adjoint();
    let mut commutation = Vec::new();
    for (name, op) in [("a", &a), ("a*", &a_star)] {
        for (g, factor) in [(Generator::Z12, q), (Generator::Z21, q), (Generator::Z22, T::one())] {
            let z = rep.generator(g);
            let lhs = op.mul(z);
            let rhs = z.mul(op).scale(Complex::new(factor, T::zero()));
            let r = normalized_residual(&lhs, &rhs, &cols);
            commutation.push(ResidualReport::new(format!("{name} {g}"), r.as_f64(), RELATION_TOL, margin));
        }
    }

    let mut report = DecompositionReport { split, vanishing, block_identity, commutation, pass: false };
    report.rejudge();
    Ok(report)
}
