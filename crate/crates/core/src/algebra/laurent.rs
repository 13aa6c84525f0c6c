use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Zero};

use crate::{Error, ExactField, Real, Result};

/// Laurent polynomial in the indeterminate `q` over an exact field.
///
/// Stored as a map from exponent to coefficient with no zero coefficients,
/// so structural equality is ring equality.
#[derive(Debug, Clone, PartialEq)]
pub struct LaurentPoly<F> {
    terms: BTreeMap<i32, F>,
}

impl<F: ExactField> LaurentPoly<F> {
    pub fn constant(c: F) -> Self {
        Self::monomial(c, 0)
    }

    /// `c * q^power`.
    pub fn monomial(c: F, power: i32) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(power, c);
        }
        LaurentPoly { terms }
    }

    /// `q^power`.
    pub fn q_pow(power: i32) -> Self {
        Self::monomial(F::one(), power)
    }

    /// `q - q^-1`, the coefficient that recurs throughout the relations.
    pub fn q_minus_q_inv() -> Self {
        Self::q_pow(1) - Self::q_pow(-1)
    }

    /// `1 - q^2`.
    pub fn one_minus_q2() -> Self {
        Self::one() - Self::q_pow(2)
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (i32, F)>) -> Self {
        let mut out = LaurentPoly { terms: BTreeMap::new() };
        for (power, c) in terms {
            out.add_term(power, c);
        }
        out
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, &F)> + '_ {
        self.terms.iter().map(|(p, c)| (*p, c))
    }

    pub fn coefficient(&self, power: i32) -> F {
        self.terms.get(&power).cloned().unwrap_or_else(F::zero)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    fn add_term(&mut self, power: i32, c: F) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&power) {
            Some(existing) => {
                *existing = existing.clone() + c;
                if existing.is_zero() {
                    self.terms.remove(&power);
                }
            }
            None => {
                self.terms.insert(power, c);
            }
        }
    }

    /// Multiplicative inverse when `self` is a single term `c q^k`.
    pub fn unit_inverse(&self) -> Option<Self> {
        if self.terms.len() != 1 {
            return None;
        }
        let (power, c) = self.terms.iter().next()?;
        Some(Self::monomial(F::one() / c.clone(), -power))
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(p, x)| (*p, x.clone() * c.clone())).collect(),
        }
    }

    /// Value at a numeric `q` in `(0, 1)`, summed term by term.
    pub fn evaluate<T: Real>(&self, q: T) -> Result<T> {
        let qf = q.as_f64();
        if !(qf > 0.0 && qf < 1.0) {
            return Err(Error::QOutOfRange(qf));
        }
        Ok(self.eval_unchecked(q))
    }

    pub(crate) fn eval_unchecked<T: Real>(&self, q: T) -> T {
        self.terms
            .iter()
            .map(|(p, c)| T::lit(c.to_f64().unwrap_or(f64::NAN)) * q.powi(*p))
            .fold(T::zero(), |acc, x| acc + x)
    }
}

impl<F: ExactField> Zero for LaurentPoly<F> {
    fn zero() -> Self {
        LaurentPoly { terms: BTreeMap::new() }
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<F: ExactField> One for LaurentPoly<F> {
    fn one() -> Self {
        Self::constant(F::one())
    }
}

impl<F: ExactField> Add for LaurentPoly<F> {
    type Output = Self;

    fn add(mut self, rhs: Self) -> Self {
        self += rhs;
        self
    }
}

impl<F: ExactField> AddAssign for LaurentPoly<F> {
    fn add_assign(&mut self, rhs: Self) {
        for (p, c) in rhs.terms {
            self.add_term(p, c);
        }
    }
}

impl<'a, F: ExactField> AddAssign<&'a LaurentPoly<F>> for LaurentPoly<F> {
    fn add_assign(&mut self, rhs: &'a LaurentPoly<F>) {
        for (p, c) in &rhs.terms {
            self.add_term(*p, c.clone());
        }
    }
}

impl<F: ExactField> Sub for LaurentPoly<F> {
    type Output = Self;

    fn sub(mut self, rhs: Self) -> Self {
        self -= rhs;
        self
    }
}

impl<F: ExactField> SubAssign for LaurentPoly<F> {
    fn sub_assign(&mut self, rhs: Self) {
        for (p, c) in rhs.terms {
            self.add_term(p, -c);
        }
    }
}

impl<F: ExactField> Neg for LaurentPoly<F> {
    type Output = Self;

    fn neg(self) -> Self {
        LaurentPoly {
            terms: self.terms.into_iter().map(|(p, c)| (p, -c)).collect(),
        }
    }
}

impl<'a, F: ExactField> Mul<&'a LaurentPoly<F>> for &'a LaurentPoly<F> {
    type Output = LaurentPoly<F>;

    fn mul(self, rhs: &'a LaurentPoly<F>) -> LaurentPoly<F> {
        let mut out = LaurentPoly::zero();
        for (p1, c1) in &self.terms {
            for (p2, c2) in &rhs.terms {
                out.add_term(p1 + p2, c1.clone() * c2.clone());
            }
        }
        out
    }
}

impl<F: ExactField> Mul for LaurentPoly<F> {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

fn write_power(f: &mut fmt::Formatter<'_>, power: i32) -> fmt::Result {
    match power {
        0 => Ok(()),
        1 => f.write_str("q"),
        p => write!(f, "q^{p}"),
    }
}

/// Ascending powers joined by ` + ` / ` - `; a coefficient of one is elided
/// next to a power of `q`, e.g. `1 - q^2` or `q^-1 - q`.
impl<F: ExactField> fmt::Display for LaurentPoly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let zero = F::zero();
        for (i, (power, c)) in self.terms.iter().enumerate() {
            let negative = *c < zero;
            let magnitude = if negative { -c.clone() } else { c.clone() };
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if *power == 0 {
                write!(f, "{magnitude}")?;
            } else if magnitude.is_one() {
                write_power(f, *power)?;
            } else {
                write!(f, "{magnitude} ")?;
                write_power(f, *power)?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Laurent;
    use num_bigint::BigInt;
    use num_rational::BigRational;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn evaluates_small_laurent_polynomials() {
        let q = 0.5_f64;
        assert_eq!(Laurent::q_minus_q_inv().evaluate(q).unwrap(), -1.5);
        assert_eq!(Laurent::one_minus_q2().evaluate(q).unwrap(), 0.75);
        let p = &Laurent::q_pow(-2) * &(&Laurent::one_minus_q2() * &Laurent::one_minus_q2());
        assert_eq!(p.evaluate(q).unwrap(), 2.25);
    }

    #[test]
    fn evaluation_outside_unit_interval_is_rejected() {
        let p = Laurent::q_pow(1);
        assert_eq!(p.evaluate(0.0_f64), Err(Error::QOutOfRange(0.0)));
        assert!(p.evaluate(1.0_f64).is_err());
        assert!(p.evaluate(-0.3_f64).is_err());
        assert!(p.evaluate(f64::NAN).is_err());
    }

    #[test]
    fn cancellation_leaves_no_zero_terms() {
        let a = Laurent::q_pow(3) + Laurent::one();
        let b = a.clone() - Laurent::q_pow(3);
        assert_eq!(b, Laurent::one());
        assert!((a.clone() - a).is_zero());
        assert_eq!(Laurent::monomial(rat(0, 1), 5), Laurent::zero());
    }

    #[test]
    fn unit_inverse_only_for_single_terms() {
        let c = Laurent::monomial(rat(-2, 3), 4);
        let inv = c.unit_inverse().unwrap();
        assert_eq!(&c * &inv, Laurent::one());
        assert!(Laurent::q_minus_q_inv().unit_inverse().is_none());
        assert!(Laurent::zero().unit_inverse().is_none());
    }

    #[test]
    fn display_uses_ascending_powers() {
        assert_eq!(Laurent::one_minus_q2().to_string(), "1 - q^2");
        assert_eq!((-Laurent::q_minus_q_inv()).to_string(), "q^-1 - q");
        assert_eq!(Laurent::q_pow(2).to_string(), "q^2");
        assert_eq!(Laurent::monomial(rat(3, 2), -1).to_string(), "3/2 q^-1");
        assert_eq!(Laurent::zero().to_string(), "0");
    }

    #[test]
    fn works_over_machine_rationals() {
        type L = LaurentPoly<num_rational::Rational64>;
        let p = &L::q_minus_q_inv() * &L::q_minus_q_inv();
        assert_eq!(p.coefficient(0), num_rational::Rational64::from_integer(-2));
        assert_eq!(p.evaluate(0.5_f32).unwrap(), 2.25);
    }
}
