use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::{One, Zero};

use super::{parse_word, LaurentPoly, Word};
use crate::ExactField;

/// Element of the free algebra: a linear combination of arbitrary words,
/// not yet reduced. Relation sides live here so they can be represented
/// letter by letter.
#[derive(Debug, Clone, PartialEq)]
pub struct WordPolynomial<F> {
    terms: BTreeMap<Word, LaurentPoly<F>>,
}

impl<F: ExactField> WordPolynomial<F> {
    pub fn zero() -> Self {
        WordPolynomial { terms: BTreeMap::new() }
    }

    pub fn word(w: Word) -> Self {
        Self::term(LaurentPoly::one(), w)
    }

    pub fn term(c: LaurentPoly<F>, w: Word) -> Self {
        let mut out = Self::zero();
        out.add_term(w, c);
        out
    }

    pub fn add_term(&mut self, w: Word, c: LaurentPoly<F>) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(existing) => {
                *existing += c;
                if existing.is_zero() {
                    self.terms.remove(&w);
                }
            }
            None => {
                self.terms.insert(w, c);
            }
        }
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Word, &LaurentPoly<F>)> + '_ {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Largest word in the degree-lexicographic order with its coefficient.
    pub fn leading(&self) -> Option<(&Word, &LaurentPoly<F>)> {
        self.terms.iter().next_back()
    }

    /// Adjoint: words reversed with stars toggled. Coefficients are real
    /// Laurent polynomials and stay fixed.
    pub fn adjoint(&self) -> Self {
        let mut out = Self::zero();
        for (w, c) in &self.terms {
            out.add_term(w.adjoint(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &LaurentPoly<F>) -> Self {
        let mut out = Self::zero();
        for (w, x) in &self.terms {
            out.add_term(w.clone(), x * c);
        }
        out
    }

    pub fn max_len(&self) -> usize {
        self.terms.keys().map(Word::len).max().unwrap_or(0)
    }

    pub(crate) fn into_terms(self) -> BTreeMap<Word, LaurentPoly<F>> {
        self.terms
    }
}

impl<F: ExactField> Add for WordPolynomial<F> {
    type Output = Self;

    fn add(mut self, rhs: Self) -> Self {
        for (w, c) in rhs.terms {
            self.add_term(w, c);
        }
        self
    }
}

impl<F: ExactField> Neg for WordPolynomial<F> {
    type Output = Self;

    fn neg(self) -> Self {
        WordPolynomial {
            terms: self.terms.into_iter().map(|(w, c)| (w, -c)).collect(),
        }
    }
}

impl<F: ExactField> Sub for WordPolynomial<F> {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<F: ExactField> fmt::Display for WordPolynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut ordered: Vec<_> = self.terms.iter().collect();
        ordered.sort_by(|a, b| b.0.len().cmp(&a.0.len()).then_with(|| a.0.cmp(b.0)));
        for (i, (w, c)) in ordered.into_iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            let w = if w.is_empty() { "1".to_string() } else { w.to_string() };
            if c.num_terms() > 1 {
                write!(f, "({c}) * {w}")?;
            } else {
                write!(f, "{c} * {w}")?;
            }
        }
        Ok(())
    }
}

/// An identity `lhs = rhs` between elements of the free algebra.
#[derive(Debug, Clone, PartialEq)]
pub struct Relation<F> {
    pub id: String,
    pub lhs: WordPolynomial<F>,
    pub rhs: WordPolynomial<F>,
}

impl<F: ExactField> Relation<F> {
    pub fn difference(&self) -> WordPolynomial<F> {
        self.lhs.clone() - self.rhs.clone()
    }

    pub fn adjoint(&self) -> Self {
        Relation {
            id: format!("{}*", self.id),
            lhs: self.lhs.adjoint(),
            rhs: self.rhs.adjoint(),
        }
    }

    /// Longest word on either side.
    pub fn max_len(&self) -> usize {
        self.lhs.max_len().max(self.rhs.max_len())
    }
}

impl<F: ExactField> fmt::Display for Relation<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}] {} = {}", self.id, self.lhs, self.rhs)
    }
}

/// Shorthand builder: `lin([(c, "z11 z21"), ...])`.
fn lin<F: ExactField>(terms: impl IntoIterator<Item = (LaurentPoly<F>, &'static str)>) -> WordPolynomial<F> {
    let mut out = WordPolynomial::zero();
    for (c, text) in terms {
        out.add_term(parse_word(text).expect("built-in relation word"), c);
    }
    out
}

fn rel<F: ExactField>(
    id: usize,
    lhs: impl IntoIterator<Item = (LaurentPoly<F>, &'static str)>,
    rhs: impl IntoIterator<Item = (LaurentPoly<F>, &'static str)>,
) -> Relation<F> {
    Relation { id: id.to_string(), lhs: lin(lhs), rhs: lin(rhs) }
}

/// The sixteen defining relations, ids `1..=16`: six holomorphic, four
/// diagonal `*`-relations, then six mixed ones (row by row).
pub fn defining_relations<F: ExactField>() -> Vec<Relation<F>> {
    let one = LaurentPoly::<F>::one;
    let q = || LaurentPoly::<F>::q_pow(1);
    let q2 = || LaurentPoly::<F>::q_pow(2);
    let qq = LaurentPoly::<F>::q_minus_q_inv;
    let p = LaurentPoly::<F>::one_minus_q2;
    let neg_p = || -LaurentPoly::<F>::one_minus_q2();
    let p2_over_q2 = || &LaurentPoly::<F>::q_pow(-2) * &(&p() * &p());

    vec![
        rel(1, [(one(), "z11 z21")], [(q(), "z21 z11")]),
        rel(2, [(one(), "z21 z12")], [(one(), "z12 z21")]),
        rel(3, [(one(), "z11 z12")], [(q(), "z12 z11")]),
        rel(4, [(one(), "z21 z22")], [(q(), "z22 z21")]),
        rel(5, [(one(), "z11 z22"), (-one(), "z22 z11")], [(qq(), "z12 z21")]),
        rel(6, [(one(), "z12 z22")], [(q(), "z22 z12")]),
        rel(
            7,
            [(one(), "z11* z11")],
            [
                (q2(), "z11 z11*"),
                (neg_p(), "z21 z21*"),
                (neg_p(), "z12 z12*"),
                (p2_over_q2(), "z22 z22*"),
                (p(), ""),
            ],
        ),
        rel(8, [(one(), "z21* z21")], [(q2(), "z21 z21*"), (neg_p(), "z22 z22*"), (p(), "")]),
        rel(9, [(one(), "z12* z12")], [(q2(), "z12 z12*"), (neg_p(), "z22 z22*"), (p(), "")]),
        rel(10, [(one(), "z22* z22")], [(q2(), "z22 z22*"), (p(), "")]),
        rel(11, [(one(), "z11* z21"), (-q(), "z21 z11*")], [(qq(), "z22 z12*")]),
        rel(12, [(one(), "z22* z21")], [(q(), "z21 z22*")]),
        rel(13, [(one(), "z11* z12"), (-q(), "z12 z11*")], [(qq(), "z22 z21*")]),
        rel(14, [(one(), "z22* z12")], [(q(), "z12 z22*")]),
        rel(15, [(one(), "z11* z22")], [(one(), "z22 z11*")]),
        rel(16, [(one(), "z21* z12")], [(one(), "z12 z21*")]),
    ]
}

/// `z_a^alpha (z_a^alpha)^* z11 = z11 z_a^alpha (z_a^alpha)^* - (-1)^(a+alpha) (q - q^-1) z21 z12 z22*`
/// for `(a, alpha)` in `(2,1), (1,2), (2,2)`. These follow from the defining
/// relations and drive the invariance of joint eigenspaces under `z11`.
pub fn cross_identities<F: ExactField>() -> Vec<Relation<F>> {
    let one = LaurentPoly::<F>::one;
    let qq = LaurentPoly::<F>::q_minus_q_inv;
    // (id, generator pair, (-1)^(a+alpha))
    let cases: [(&str, &'static str, &'static str, i32); 3] = [
        ("cross-21", "z21 z21* z11", "z11 z21 z21*", -1),
        ("cross-12", "z12 z12* z11", "z11 z12 z12*", -1),
        ("cross-22", "z22 z22* z11", "z11 z22 z22*", 1),
    ];
    cases
        .into_iter()
        .map(|(id, lhs, head, sign)| {
            let corr = if sign > 0 { -qq() } else { qq() };
            Relation {
                id: id.to_string(),
                lhs: lin([(one(), lhs)]),
                rhs: lin([(one(), head), (corr, "z21 z12 z22*")]),
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    #[test]
    fn sixteen_relations_with_distinct_ids() {
        let rels = defining_relations::<Rational>();
        assert_eq!(rels.len(), 16);
        for (i, r) in rels.iter().enumerate() {
            assert_eq!(r.id, (i + 1).to_string());
            assert!(r.max_len() <= 2);
        }
    }

    #[test]
    fn diagonal_relations_are_self_adjoint() {
        let rels = defining_relations::<Rational>();
        for r in &rels[6..10] {
            assert_eq!(r.adjoint().difference(), r.difference(), "relation {}", r.id);
        }
        for r in rels[..6].iter().chain(&rels[10..]) {
            assert_ne!(r.adjoint().difference(), r.difference(), "relation {}", r.id);
        }
    }

    #[test]
    fn leading_word_is_a_descending_pair() {
        for r in defining_relations::<Rational>() {
            let diff = r.difference();
            let (lead, c) = diff.leading().unwrap();
            assert_eq!(lead.len(), 2, "relation {}", r.id);
            assert!(lead.letters()[0] > lead.letters()[1], "relation {}", r.id);
            assert!(c.unit_inverse().is_some());
        }
    }

    #[test]
    fn cross_identity_signs() {
        let ids: Vec<_> = cross_identities::<Rational>().into_iter().map(|r| r.id).collect();
        assert_eq!(ids, ["cross-21", "cross-12", "cross-22"]);
        let c22 = &cross_identities::<Rational>()[2];
        assert_eq!(
            c22.to_string(),
            "[cross-22] 1 * z22 z22* z11 = 1 * z11 z22 z22* + (q^-1 - q) * z21 z12 z22*"
        );
    }
}
