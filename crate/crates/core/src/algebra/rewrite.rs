use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::{
    cross_identities, defining_relations, LaurentPoly, Letter, NormalMonomial, NormalPolynomial,
    Relation, Word, WordPolynomial,
};
use crate::{Error, ExactField, Result};

/// Which descent of a word is rewritten first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Strategy {
    #[default]
    Leftmost,
    Rightmost,
}

/// Rule applications allowed by [`PolAlgebra::normal_form`] before it gives up.
pub const DEFAULT_STEP_BUDGET: usize = 10_000_000;

type RuleRhs<F> = Vec<(LaurentPoly<F>, Word)>;

/// `Pol(Mat_{2,2})_q` over the exact field `F`.
///
/// Holds the rewrite table derived from the defining relations and their
/// adjoints: one rule per descending pair of letters (28 in total).
#[derive(Debug, Clone)]
pub struct PolAlgebra<F> {
    relations: Vec<Relation<F>>,
    rules: Vec<Option<RuleRhs<F>>>,
}

impl<F: ExactField> Default for PolAlgebra<F> {
    fn default() -> Self {
        Self::new()
    }
}

impl<F: ExactField> PolAlgebra<F> {
    pub fn new() -> Self {
        Self::from_relations(defining_relations())
            .expect("defining relations give one rule per descending pair")
    }

    /// Builds the rule table by solving each relation, and each relation's
    /// adjoint, for its leading word. Fails if two relations disagree on the
    /// same leading pair or some descending pair is left without a rule.
    pub fn from_relations(relations: Vec<Relation<F>>) -> Result<Self> {
        let mut rules: Vec<Option<RuleRhs<F>>> = vec![None; 64];
        for relation in relations.iter().flat_map(|r| [r.clone(), r.adjoint()]) {
            let diff = relation.difference();
            let (lead, lead_coeff) = diff
                .leading()
                .map(|(w, c)| (w.clone(), c.clone()))
                .ok_or_else(|| Error::InconsistentRules(relation.id.clone()))?;
            let inv = lead_coeff
                .unit_inverse()
                .ok_or_else(|| Error::InconsistentRules(relation.id.clone()))?;
            let &[left, right] = lead.letters() else {
                return Err(Error::InconsistentRules(relation.id.clone()));
            };
            if left <= right {
                return Err(Error::InconsistentRules(relation.id.clone()));
            }
            // lead = -(diff - c * lead) / c
            let mut rhs: RuleRhs<F> = diff
                .terms()
                .filter(|(w, _)| **w != lead)
                .map(|(w, c)| (-(c * &inv), w.clone()))
                .collect();
            rhs.sort_by(|a, b| a.1.cmp(&b.1));
            let slot = &mut rules[left.index() * 8 + right.index()];
            match slot {
                Some(existing) if *existing != rhs => {
                    return Err(Error::InconsistentRules(lead.to_string()));
                }
                Some(_) => {}
                None => *slot = Some(rhs),
            }
        }
        for a in Letter::ALL {
            for b in Letter::ALL {
                if a > b && rules[a.index() * 8 + b.index()].is_none() {
                    return Err(Error::InconsistentRules(format!("{a} {b}")));
                }
            }
        }
        Ok(PolAlgebra { relations, rules })
    }

    pub fn relations(&self) -> &[Relation<F>] {
        &self.relations
    }

    pub fn cross_identities(&self) -> Vec<Relation<F>> {
        cross_identities()
    }

    /// Right-hand side of the rule for the descending pair `left right`.
    pub fn rule(&self, left: Letter, right: Letter) -> Option<&[(LaurentPoly<F>, Word)]> {
        self.rules[left.index() * 8 + right.index()].as_deref()
    }

    pub fn num_rules(&self) -> usize {
        self.rules.iter().flatten().count()
    }

    pub fn normal_form(&self, word: &Word) -> NormalPolynomial<F> {
        self.reduce(WordPolynomial::word(word.clone()))
    }

    /// Reduces a linear combination of words with the default strategy.
    pub fn reduce(&self, p: WordPolynomial<F>) -> NormalPolynomial<F> {
        self.reduce_with(p, Strategy::Leftmost, DEFAULT_STEP_BUDGET)
            .map(|(nf, _)| nf)
            .expect("rewriting terminates within the default budget")
    }

    /// Reduces `p` to normal form, returning the result and the number of
    /// rule applications.
    ///
    /// Words are processed largest first. Every rule output is strictly
    /// smaller, so each word is expanded once with its fully merged
    /// coefficient.
    pub fn reduce_with(
        &self,
        p: WordPolynomial<F>,
        strategy: Strategy,
        budget: usize,
    ) -> Result<(NormalPolynomial<F>, usize)> {
        let mut pending: BTreeMap<Word, LaurentPoly<F>> = p.into_terms();
        let mut out = NormalPolynomial::zero();
        let mut steps = 0usize;
        while let Some((word, coeff)) = pending.pop_last() {
            if coeff.is_zero() {
                continue;
            }
            let descent = match strategy {
                Strategy::Leftmost => word.descents().next(),
                Strategy::Rightmost => word.descents().last(),
            };
            let Some(i) = descent else {
                let m = NormalMonomial::from_normal_word(&word).expect("word without descents");
                out.add_term(m, coeff);
                continue;
            };
            steps += 1;
            if steps > budget {
                return Err(Error::StepBudget(budget));
            }
            let letters = word.letters();
            let rhs = self
                .rule(letters[i], letters[i + 1])
                .expect("every descending pair has a rule");
            for (c, replacement) in rhs {
                let mut next = Vec::with_capacity(letters.len());
                next.extend_from_slice(&letters[..i]);
                next.extend_from_slice(replacement.letters());
                next.extend_from_slice(&letters[i + 2..]);
                let next = Word::from_letters(next);
                let c = c * &coeff;
                match pending.get_mut(&next) {
                    Some(existing) => *existing += c,
                    None => {
                        pending.insert(next, c);
                    }
                }
            }
        }
        Ok((out, steps))
    }

    pub fn multiply(&self, a: &NormalPolynomial<F>, b: &NormalPolynomial<F>) -> NormalPolynomial<F> {
        let mut product = WordPolynomial::zero();
        for (ma, ca) in a.terms() {
            let wa = ma.word();
            for (mb, cb) in b.terms() {
                product.add_term(wa.concat(&mb.word()), ca * cb);
            }
        }
        self.reduce(product)
    }

    /// The involution: reverse letters, toggle stars, renormalize.
    /// Coefficients are real Laurent polynomials and are left unchanged.
    pub fn star(&self, p: &NormalPolynomial<F>) -> NormalPolynomial<F> {
        let mut adj = WordPolynomial::zero();
        for (m, c) in p.terms() {
            adj.add_term(m.word().adjoint(), c.clone());
        }
        self.reduce(adj)
    }

    pub fn from_word_polynomial(&self, p: &WordPolynomial<F>) -> NormalPolynomial<F> {
        self.reduce(p.clone())
    }

    /// Normal form of `lhs - rhs`; zero exactly when the identity holds in
    /// the algebra.
    pub fn relation_defect(&self, r: &Relation<F>) -> NormalPolynomial<F> {
        self.reduce(r.difference())
    }

    pub fn one(&self) -> NormalPolynomial<F> {
        NormalPolynomial::monomial(NormalMonomial::unit(), LaurentPoly::one())
    }
}
