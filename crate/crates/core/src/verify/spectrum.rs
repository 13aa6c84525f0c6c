use serde::{Deserialize, Serialize};

use super::{COMMUTATOR_TOL, EXACT_TOL, ORBIT_TOL};
use crate::algebra::Generator;
use crate::dynsys::{orbit_membership, orbit_value, OrbitTag, Point3, SearchBox};
use crate::rep::{SeriesTag, TruncatedRep};
use crate::{Error, Real, Result};

/// The orbit carrying the joint spectrum of each series.
pub fn series_orbit_table() -> Vec<(SeriesTag, OrbitTag)> {
    use OrbitTag::*;
    use SeriesTag::*;
    vec![
        (OneDim, Fixed001),
        (Pi, Fixed001),
        (Rho12, Base110),
        (Rho1, Base010),
        (Rho2, Base100),
        (HatRho, Base000),
        (RhoFull, Base000),
    ]
}

fn orbit_of(series: SeriesTag) -> OrbitTag {
    series_orbit_table().into_iter().find(|(s, _)| *s == series).map(|(_, o)| o).unwrap()
}

/// Orbit exponents `(m, l, k)` the series formulas assign to a basis vector,
/// with inert axes at zero.
pub fn expected_exponents(series: SeriesTag, coords: &[usize]) -> [i32; 3] {
    let c = |i: usize| coords[i] as i32;
    match series {
        SeriesTag::OneDim | SeriesTag::Pi => [0, 0, 0],
        SeriesTag::Rho12 => [0, 0, c(0)],
        SeriesTag::Rho1 => [c(0), 0, c(1)],
        SeriesTag::Rho2 => [0, c(0), c(1)],
        SeriesTag::HatRho => [c(0), c(1), c(2)],
        SeriesTag::RhoFull => [c(1), c(2), c(3)],
    }
}

/// Joint eigenvalues of `z21 z21*, z12 z12*, z22 z22*` matched against the
/// series' orbit.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct SpectrumReport {
    pub orbit: OrbitTag,
    /// Largest off-diagonal modulus in the three operators.
    pub off_diagonal: f64,
    /// Largest pairwise commutator modulus.
    pub commutator: f64,
    /// Largest distance from a triple to its recovered orbit point.
    pub max_error: f64,
    /// Basis vectors whose triple was not found on the orbit.
    pub unmatched: usize,
    /// Basis vectors whose recovered exponents differ from the lattice labels.
    pub mislabelled: usize,
    /// `max |1 - x3 - defect|`, the stored defect against the matrices.
    pub defect_error: f64,
    #[serde(skip)]
    pub triples: Vec<[f64; 3]>,
    #[serde(skip)]
    pub exponents: Vec<Option<[i32; 3]>>,
    pub pass: bool,
}

impl SpectrumReport {
    pub(crate) fn rejudge(&mut self) {
        self.pass = self.off_diagonal < EXACT_TOL
            && self.commutator < COMMUTATOR_TOL
            && self.max_error < ORBIT_TOL
            && self.unmatched == 0
            && self.mislabelled == 0
            && self.defect_error < EXACT_TOL;
    }
}

/// Fails with a structural error when the family is not diagonal.
pub fn joint_spectrum<T: Real>(rep: &TruncatedRep<T>) -> Result<SpectrumReport> {
    let grams = [Generator::Z21, Generator::Z12, Generator::Z22].map(|g| rep.gram(g));
    let off_diagonal = grams.iter().fold(T::zero(), |acc, g| acc.max(g.off_diagonal_max()));
    if off_diagonal >= T::lit(EXACT_TOL) {
        return Err(Error::Structural(format!(
            "{}: commuting family is not diagonal (off-diagonal {:e})",
            rep.series(),
            off_diagonal.as_f64()
        )));
    }
    let mut commutator = T::zero();
    for i in 0..3 {
        for j in i + 1..3 {
            commutator = commutator.max(grams[i].commutator(&grams[j]).max_abs());
        }
    }

    let orbit = orbit_of(rep.series());
    let base = orbit.base::<T>();
    let q = rep.q();
    let diagonals = grams.map(|g| g.diagonal());
    let (mut max_error, mut unmatched, mut mislabelled, mut defect_error) = (T::zero(), 0, 0, T::zero());
    let mut triples = Vec::with_capacity(rep.dim());
    let mut exponents = Vec::with_capacity(rep.dim());
    for i in 0..rep.dim() {
        let p = Point3([0, 1, 2].map(|a| diagonals[a][i].re));
        triples.push(p.0.map(|x| x.as_f64()));
        defect_error = defect_error.max((T::one() - p.0[2] - rep.z22_defect()[i]).abs());
        let found = orbit_membership(p, base, q, T::lit(ORBIT_TOL), SearchBox::default());
        match found {
            Some(e) => {
                max_error = max_error.max(orbit_value(base, e, q).distance(&p));
                if e != expected_exponents(rep.series(), &rep.lattice().coords(i)) {
                    mislabelled += 1;
                }
            }
            None => unmatched += 1,
        }
        exponents.push(found);
    }
    let mut report = SpectrumReport {
        orbit,
        off_diagonal: off_diagonal.as_f64(),
        commutator: commutator.as_f64(),
        max_error: max_error.as_f64(),
        unmatched,
        mislabelled,
        defect_error: defect_error.as_f64(),
        triples,
        exponents,
        pass: false,
    };
    report.rejudge();
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{Rep, Series};

    const Q: f64 = 0.5;

    fn rep(tag: SeriesTag, n: usize) -> Rep {
        Rep::build(Series::new(tag, vec![0.8; tag.phase_arity()], Q).unwrap(), n).unwrap()
    }

    #[test]
    fn rho12_triples() {
        let s = joint_spectrum(&rep(SeriesTag::Rho12, 3)).unwrap();
        let expected = [[1.0, 1.0, 0.0], [Q * Q, Q * Q, 1.0 - Q * Q], [Q.powi(4), Q.powi(4), 1.0 - Q.powi(4)]];
        for (t, e) in s.triples.iter().zip(expected) {
            for a in 0..3 {
                assert!((t[a] - e[a]).abs() < 1e-15);
            }
        }
        assert_eq!(s.orbit, OrbitTag::Base110);
        assert!(s.pass);
    }

    #[test]
    fn pi_sits_on_the_fixed_point() {
        let s = joint_spectrum(&rep(SeriesTag::Pi, 10)).unwrap();
        assert!(s.triples.iter().all(|t| t == &[0.0, 0.0, 1.0]));
        assert_eq!(s.orbit, OrbitTag::Fixed001);
        assert!(s.pass);
    }

    #[test]
    fn rho_full_labels_are_lattice_coordinates() {
        let r = rep(SeriesTag::RhoFull, 5);
        let s = joint_spectrum(&r).unwrap();
        assert!(s.pass, "{s:?}");
        for i in 0..r.dim() {
            let c = r.lattice().coords(i);
            assert_eq!(s.exponents[i], Some([c[1] as i32, c[2] as i32, c[3] as i32]));
            let (m, l, k) = (c[1] as i32, c[2] as i32, c[3] as i32);
            let t = s.triples[i];
            assert!((t[0] - Q.powi(2 * k) * (1.0 - Q.powi(2 * m))).abs() < 1e-15);
            assert!((t[1] - Q.powi(2 * k) * (1.0 - Q.powi(2 * l))).abs() < 1e-15);
            assert!((t[2] - (1.0 - Q.powi(2 * k))).abs() < 1e-15);
        }
    }

    #[test]
    fn every_series_matches_its_orbit() {
        for tag in SeriesTag::ALL {
            let s = joint_spectrum(&rep(tag, tag.default_cutoff(3))).unwrap();
            assert!(s.pass, "{tag}: {s:?}");
        }
    }

    #[test]
    fn rho1_and_rho2_orbits() {
        let table = series_orbit_table();
        assert!(table.contains(&(SeriesTag::Rho1, OrbitTag::Base010)));
        assert!(table.contains(&(SeriesTag::Rho2, OrbitTag::Base100)));
        assert!(table.contains(&(SeriesTag::HatRho, OrbitTag::Base000)));
        assert_eq!(table.len(), 7);
    }
}
