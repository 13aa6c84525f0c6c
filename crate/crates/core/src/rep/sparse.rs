use num_complex::Complex;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::{Error, Real};

/// Square sparse complex matrix stored by columns.
///
/// Each column holds `(row, value)` pairs sorted by row with no duplicates
/// and no stored zeros. Columns are what the verifiers consume: applying
/// the operator to basis vector `e_j` is reading column `j`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(
    into = "TripletList<T>",
    try_from = "TripletList<T>",
    bound(serialize = "T: Real + Serialize", deserialize = "T: Real + Deserialize<'de>")
)]
pub struct SparseOperator<T> {
    dim: usize,
    columns: Vec<Vec<(usize, Complex<T>)>>,
}

/// Serialized form: `{"dim": n, "entries": [[row, col, re, im], ...]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TripletList<T> {
    pub dim: usize,
    pub entries: Vec<(usize, usize, T, T)>,
}

impl<T: Real> From<SparseOperator<T>> for TripletList<T> {
    fn from(op: SparseOperator<T>) -> Self {
        TripletList {
            dim: op.dim,
            entries: op.triplets().map(|(r, c, v)| (r, c, v.re, v.im)).collect(),
        }
    }
}

impl<T: Real> TryFrom<TripletList<T>> for SparseOperator<T> {
    type Error = Error;

    fn try_from(list: TripletList<T>) -> Result<Self, Error> {
        let mut seen = std::collections::HashSet::new();
        for (r, c, _, _) in &list.entries {
            if *r >= list.dim || *c >= list.dim {
                return Err(Error::Structural(format!("entry ({r}, {c}) outside dimension {}", list.dim)));
            }
            if !seen.insert((*r, *c)) {
                return Err(Error::Structural(format!("duplicate entry ({r}, {c})")));
            }
        }
        Ok(SparseOperator::from_triplets(
            list.dim,
            list.entries.into_iter().map(|(r, c, re, im)| (r, c, Complex::new(re, im))),
        ))
    }
}

fn merge_column<T: Real>(entries: &mut Vec<(usize, Complex<T>)>) {
    entries.sort_by_key(|e| e.0);
    let mut merged: Vec<(usize, Complex<T>)> = Vec::with_capacity(entries.len());
    for (r, v) in entries.drain(..) {
        match merged.last_mut() {
            Some(last) if last.0 == r => last.1 += v,
            _ => merged.push((r, v)),
        }
    }
    merged.retain(|(_, v)| !v.is_zero());
    *entries = merged;
}

impl<T: Real> SparseOperator<T> {
    pub fn zeros(dim: usize) -> Self {
        SparseOperator { dim, columns: vec![Vec::new(); dim] }
    }

    pub fn identity(dim: usize) -> Self {
        Self::diagonal_from((0..dim).map(|_| Complex::one()))
    }

    pub fn diagonal_from(values: impl IntoIterator<Item = Complex<T>>) -> Self {
        let columns: Vec<_> = values
            .into_iter()
            .enumerate()
            .map(|(i, v)| if v.is_zero() { Vec::new() } else { vec![(i, v)] })
            .collect();
        SparseOperator { dim: columns.len(), columns }
    }

    /// Duplicate `(row, col)` entries are summed.
    pub fn from_triplets(dim: usize, triplets: impl IntoIterator<Item = (usize, usize, Complex<T>)>) -> Self {
        let mut columns = vec![Vec::new(); dim];
        for (r, c, v) in triplets {
            assert!(r < dim && c < dim, "triplet ({r}, {c}) outside dimension {dim}");
            columns[c].push((r, v));
        }
        for col in &mut columns {
            merge_column(col);
        }
        SparseOperator { dim, columns }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Image of basis vector `e_col`.
    pub fn column(&self, col: usize) -> &[(usize, Complex<T>)] {
        &self.columns[col]
    }

    pub fn triplets(&self) -> impl Iterator<Item = (usize, usize, Complex<T>)> + '_ {
        self.columns
            .iter()
            .enumerate()
            .flat_map(|(c, col)| col.iter().map(move |(r, v)| (*r, c, *v)))
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    pub fn max_column_nnz(&self) -> usize {
        self.columns.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn get(&self, row: usize, col: usize) -> Complex<T> {
        self.columns[col]
            .binary_search_by_key(&row, |e| e.0)
            .map(|i| self.columns[col][i].1)
            .unwrap_or_else(|_| Complex::zero())
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        let mut columns = vec![Vec::new(); self.dim];
        for (r, c, v) in self.triplets() {
            columns[r].push((c, v.conj()));
        }
        // triplets() walks columns in order, so each new column is already sorted
        SparseOperator { dim: self.dim, columns }
    }

    /// `self * rhs`.
    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        let columns = rhs
            .columns
            .iter()
            .map(|col| {
                let mut out = Vec::new();
                for (k, v) in col {
                    out.extend(self.columns[*k].iter().map(|(r, w)| (*r, *w * *v)));
                }
                merge_column(&mut out);
                out
            })
            .collect();
        SparseOperator { dim: self.dim, columns }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        self.axpy(Complex::one(), rhs)
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.axpy(-Complex::<T>::one(), rhs)
    }

    /// `self + alpha * rhs`.
    pub fn axpy(&self, alpha: Complex<T>, rhs: &Self) -> Self {
        assert_eq!(self.dim, rhs.dim, "dimension mismatch");
        let columns = self
            .columns
            .iter()
            .zip(&rhs.columns)
            .map(|(a, b)| {
                let mut out = a.clone();
                out.extend(b.iter().map(|(r, v)| (*r, *v * alpha)));
                merge_column(&mut out);
                out
            })
            .collect();
        SparseOperator { dim: self.dim, columns }
    }

    pub fn scale(&self, alpha: Complex<T>) -> Self {
        Self::zeros(self.dim).axpy(alpha, self)
    }

    /// `self * rhs - rhs * self`.
    pub fn commutator(&self, rhs: &Self) -> Self {
        self.mul(rhs).sub(&rhs.mul(self))
    }

    pub fn diagonal(&self) -> Vec<Complex<T>> {
        (0..self.dim).map(|i| self.get(i, i)).collect()
    }

    /// Largest modulus of any off-diagonal entry.
    pub fn off_diagonal_max(&self) -> T {
        self.triplets()
            .filter(|(r, c, _)| r != c)
            .fold(T::zero(), |acc, (_, _, v)| acc.max(v.norm()))
    }

    pub fn max_abs(&self) -> T {
        self.triplets().fold(T::zero(), |acc, (_, _, v)| acc.max(v.norm()))
    }

    /// Euclidean norm of column `col`.
    pub fn column_norm(&self, col: usize) -> T {
        self.columns[col]
            .iter()
            .fold(T::zero(), |acc, (_, v)| acc + v.norm_sqr())
            .sqrt()
    }

    /// Largest entrywise modulus of `self - rhs` restricted to the given columns.
    pub fn max_abs_diff_on(&self, rhs: &Self, cols: &[usize]) -> T {
        let diff = self.sub(rhs);
        cols.iter()
            .flat_map(|c| diff.columns[*c].iter())
            .fold(T::zero(), |acc, (_, v)| acc.max(v.norm()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type C = Complex<f64>;

    fn shift(dim: usize) -> SparseOperator<f64> {
        SparseOperator::from_triplets(dim, (0..dim - 1).map(|i| (i + 1, i, C::new(1.0, 0.5))))
    }

    #[test]
    fn duplicates_are_summed_and_zeros_dropped() {
        let op = SparseOperator::from_triplets(
            2,
            [(0, 0, C::new(1.0, 0.0)), (0, 0, C::new(2.0, 0.0)), (1, 0, C::new(0.0, 0.0))],
        );
        assert_eq!(op.nnz(), 1);
        assert_eq!(op.get(0, 0), C::new(3.0, 0.0));
    }

    #[test]
    fn adjoint_is_conjugate_transpose() {
        let s = shift(4);
        let a = s.adjoint();
        for (r, c, v) in s.triplets() {
            assert_eq!(a.get(c, r), v.conj());
        }
        assert_eq!(a.adjoint(), s);
    }

    #[test]
    fn product_of_shifts() {
        let s = shift(4);
        let s2 = s.mul(&s);
        assert_eq!(s2.get(2, 0), C::new(1.0, 0.5) * C::new(1.0, 0.5));
        assert_eq!(s2.nnz(), 2);
        let i = SparseOperator::identity(4);
        assert_eq!(i.mul(&s), s);
        assert_eq!(s.mul(&i), s);
    }

    #[test]
    fn diagonal_and_commutator() {
        let d = SparseOperator::diagonal_from([1.0, 2.0, 3.0].map(|x| C::new(x, 0.0)));
        assert_eq!(d.off_diagonal_max(), 0.0);
        assert_eq!(d.commutator(&d).nnz(), 0);
        let s = shift(3);
        assert!(d.commutator(&s).nnz() > 0);
    }

    #[test]
    fn json_round_trip_and_validation() {
        let s = shift(3);
        let json = serde_json::to_string(&s).unwrap();
        let back: SparseOperator<f64> = serde_json::from_str(&json).unwrap();
        assert_eq!(back, s);
        let bad = r#"{"dim":2,"entries":[[0,0,1.0,0.0],[0,0,2.0,0.0]]}"#;
        assert!(serde_json::from_str::<SparseOperator<f64>>(bad).is_err());
        let bad = r#"{"dim":2,"entries":[[2,0,1.0,0.0]]}"#;
        assert!(serde_json::from_str::<SparseOperator<f64>>(bad).is_err());
    }
}
