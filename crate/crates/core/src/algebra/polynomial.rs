use std::cmp::{Ordering, Reverse};
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::{One, Zero};

use super::{Generator, LaurentPoly, Letter, Word};
use crate::{Error, ExactField, Real, Result};

/// `z11^a11 z21^a21 z12^a12 z22^a22 (z11*)^b11 (z21*)^b21 (z12*)^b12 (z22*)^b22`.
///
/// `exponents` is indexed by [`Letter::index`]: the four unstarred exponents
/// followed by the four starred ones.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Hash)]
pub struct NormalMonomial {
    exponents: [u32; 8],
}

impl NormalMonomial {
    pub fn unit() -> Self {
        Self::default()
    }

    pub fn new(unstarred: [u32; 4], starred: [u32; 4]) -> Self {
        let mut exponents = [0; 8];
        exponents[..4].copy_from_slice(&unstarred);
        exponents[4..].copy_from_slice(&starred);
        NormalMonomial { exponents }
    }

    pub fn exponents(&self) -> &[u32; 8] {
        &self.exponents
    }

    pub fn exponent(&self, letter: Letter) -> u32 {
        self.exponents[letter.index()]
    }

    pub fn degree(&self) -> u32 {
        self.exponents.iter().sum()
    }

    /// Counts letters of a word that is already in normal order.
    pub fn from_normal_word(word: &Word) -> Option<Self> {
        if !word.is_normal() {
            return None;
        }
        let mut exponents = [0; 8];
        for letter in word.letters() {
            exponents[letter.index()] += 1;
        }
        Some(NormalMonomial { exponents })
    }

    pub fn word(&self) -> Word {
        Word::from_letters(
            Letter::ALL
                .iter()
                .zip(self.exponents)
                .flat_map(|(l, e)| std::iter::repeat_n(*l, e as usize)),
        )
    }
}

impl From<Generator> for NormalMonomial {
    fn from(g: Generator) -> Self {
        let mut exponents = [0; 8];
        exponents[g.index()] = 1;
        NormalMonomial { exponents }
    }
}

/// Higher degree first; within a degree, the lexicographically smaller word
/// first. For sorted words the lexicographic order is reverse order of the
/// exponent vectors.
impl Ord for NormalMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        (Reverse(self.degree()), Reverse(self.exponents))
            .cmp(&(Reverse(other.degree()), Reverse(other.exponents)))
    }
}

impl PartialOrd for NormalMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for NormalMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.degree() == 0 {
            f.write_str("1")
        } else {
            write!(f, "{}", self.word())
        }
    }
}

/// Element of the algebra: a finite map from normal monomials to Laurent
/// coefficients, with no zero coefficients stored.
#[derive(Debug, Clone, PartialEq)]
pub struct NormalPolynomial<F> {
    terms: BTreeMap<NormalMonomial, LaurentPoly<F>>,
}

impl<F: ExactField> NormalPolynomial<F> {
    pub fn monomial(m: NormalMonomial, c: LaurentPoly<F>) -> Self {
        let mut out = Self::zero();
        out.add_term(m, c);
        out
    }

    pub fn generator(g: Generator) -> Self {
        Self::monomial(g.into(), LaurentPoly::one())
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (NormalMonomial, LaurentPoly<F>)>) -> Self {
        let mut out = Self::zero();
        for (m, c) in terms {
            out.add_term(m, c);
        }
        out
    }

    pub fn add_term(&mut self, m: NormalMonomial, c: LaurentPoly<F>) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(existing) => {
                *existing += c;
                if existing.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    /// Terms in printing order (highest degree first).
    pub fn terms(&self) -> impl Iterator<Item = (&NormalMonomial, &LaurentPoly<F>)> + '_ {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, m: &NormalMonomial) -> LaurentPoly<F> {
        self.terms.get(m).cloned().unwrap_or_else(LaurentPoly::zero)
    }

    pub fn scale(&self, c: &LaurentPoly<F>) -> Self {
        Self::from_terms(self.terms.iter().map(|(m, x)| (*m, x * c)))
    }

    pub fn max_degree(&self) -> u32 {
        self.terms.keys().map(NormalMonomial::degree).max().unwrap_or(0)
    }

    /// Coefficients evaluated at a numeric `q` in `(0, 1)`.
    pub fn evaluate_coefficients<T: Real>(&self, q: T) -> Result<BTreeMap<NormalMonomial, T>> {
        let qf = q.as_f64();
        if !(qf > 0.0 && qf < 1.0) {
            return Err(Error::QOutOfRange(qf));
        }
        Ok(self.terms.iter().map(|(m, c)| (*m, c.eval_unchecked(q))).collect())
    }
}

impl<F: ExactField> Zero for NormalPolynomial<F> {
    fn zero() -> Self {
        NormalPolynomial { terms: BTreeMap::new() }
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<F: ExactField> NormalPolynomial<F> {
    pub fn one() -> Self {
        Self::monomial(NormalMonomial::unit(), LaurentPoly::one())
    }
}

impl<F: ExactField> Add for NormalPolynomial<F> {
    type Output = Self;

    fn add(mut self, rhs: Self) -> Self {
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
        self
    }
}

impl<F: ExactField> Neg for NormalPolynomial<F> {
    type Output = Self;

    fn neg(self) -> Self {
        NormalPolynomial {
            terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect(),
        }
    }
}

impl<F: ExactField> Sub for NormalPolynomial<F> {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

/// `coeff * monomial` terms joined by ` + `; multi-term coefficients are
/// parenthesized.
impl<F: ExactField> fmt::Display for NormalPolynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if m.degree() == 0 && c.is_one() {
                f.write_str("1")?;
                continue;
            }
            if c.num_terms() > 1 {
                write!(f, "({c}) * {m}")?;
            } else {
                write!(f, "{c} * {m}")?;
            }
        }
        Ok(())
    }
}
