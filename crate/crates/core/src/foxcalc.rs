//! Integral group-ring elements over a free group and Fox free derivatives.
//!
//! The derivative rules are `d(x)/dx = 1`, `d(x^-1)/dx = -x^-1` and the
//! product rule `d(uv)/dx = du/dx + u dv/dx`; everything else follows.

use crate::alexpoly::LaurentPoly;
use crate::ring::IntRing;
use crate::words::GroupWord;
use num_bigint::BigInt;
use num_traits::Zero;
use std::collections::BTreeMap;
use std::fmt;

/// An element of the group ring `Z[F]`: a finite integer combination of
/// freely reduced words. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct GroupRingElem {
    terms: BTreeMap<GroupWord, BigInt>,
}

impl GroupRingElem {
    pub fn zero() -> Self {
        GroupRingElem::default()
    }

    pub fn one() -> Self {
        GroupRingElem::from_word(GroupWord::identity())
    }

    pub fn from_word(w: GroupWord) -> Self {
        GroupRingElem::from_term(w, BigInt::from(1))
    }

    pub fn from_term(w: GroupWord, coeff: impl Into<BigInt>) -> Self {
        let mut e = GroupRingElem::zero();
        e.add_term(w, coeff.into());
        e
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&GroupWord, &BigInt)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    fn add_term(&mut self, w: GroupWord, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(w.clone()).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn add(&self, other: &GroupRingElem) -> GroupRingElem {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> GroupRingElem {
        GroupRingElem {
            terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &GroupRingElem) -> GroupRingElem {
        self.add(&other.neg())
    }

    /// Ring multiplication; words multiply by reduced concatenation.
    pub fn mul(&self, other: &GroupRingElem) -> GroupRingElem {
        let mut out = GroupRingElem::zero();
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                out.add_term(u.concat(v), a * b);
            }
        }
        out
    }

    pub fn scale(&self, k: impl Into<BigInt>) -> GroupRingElem {
        let k = k.into();
        let mut out = GroupRingElem::zero();
        for (w, c) in &self.terms {
            out.add_term(w.clone(), c * &k);
        }
        out
    }

    /// Push forward along the abelianization sending every generator to `t`:
    /// each word contributes `coeff * t^(exponent sum)`.
    pub fn abelianize(&self) -> LaurentPoly<IntRing> {
        let mut p = LaurentPoly::zero(IntRing);
        for (w, c) in &self.terms {
            p = p.add(&LaurentPoly::term(IntRing, c.clone(), w.exponent_sum()));
        }
        p
    }
}

impl fmt::Display for GroupRingElem {
    fmt_body: fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (w, c) in &self.terms {
            if first {
                write!(f, "{c}*({w})")?;
                first = false;
            } else {
                write!(f, " + {c}*({w})")?;
            }
        }
        Ok(())
    }
}

/// Fox derivative of a freely reduced word with respect to generator `gen`,
/// computed in one left-to-right scan with a running prefix.
pub fn fox_derivative(w: &GroupWord, gen: i32) -> GroupRingElem {
    assert!(gen >= 1, "generator indices are 1-based");
    let mut out = GroupRingElem::zero();
    let mut prefix = GroupWord::identity();
    for &l in w.letters() {
        if l == gen {
            out = out.add(&GroupRingElem::from_word(prefix.clone()));
        } else if l == -gen {
            let mut word = prefix.clone();
            word.push(l);
            out = out.sub(&GroupRingElem::from_word(word));
        }
        prefix.push(l);
    }
    out
}

/// `sum_i d(w)/dx_i * (x_i - 1)`, which the fundamental identity equates
/// with `w - 1`.
pub fn fox_identity_lhs(w: &GroupWord, num_generators: u32) -> GroupRingElem {
    let mut acc = GroupRingElem::zero();
    for g in 1..=num_generators as i32 {
        let d = fox_derivative(w, g);
        let factor = GroupRingElem::from_word(GroupWord::from_letters([g]))
            .sub(&GroupRingElem::one());
        acc = acc.add(&d.mul(&factor));
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::GroupWord;

    fn w(letters: &[i32]) -> GroupWord {
        GroupWord::from_letters(letters.iter().copied())
    }

    #[test]
    fn ring_examples() {
        let one = GroupRingElem::one();
        assert!(one.add(&one.neg()).is_zero());

        let x = GroupRingElem::from_word(w(&[1]));
        let xinv = GroupRingElem::from_word(w(&[-1]));
        assert_eq!(x.mul(&xinv), GroupRingElem::one());

        let a = one.add(&x);
        let y = GroupRingElem::from_word(w(&[2]));
        let prod = a.mul(&y);
        let expected = GroupRingElem::from_word(w(&[2])).add(&GroupRingElem::from_word(w(&[1, 2])));
        assert_eq!(prod, expected);
    }

    #[test]
    fn ring_laws_on_small_elements() {
        let e1 = GroupRingElem::from_term(w(&[1]), 2).add(&GroupRingElem::from_word(w(&[-2])));
        let e2 = GroupRingElem::one().sub(&GroupRingElem::from_word(w(&[2, 1])));
        let e3 = GroupRingElem::from_term(w(&[3]), -1).add(&GroupRingElem::one());
        // Associativity and distributivity.
        assert_eq!(e1.mul(&e2).mul(&e3), e1.mul(&e2.mul(&e3)));
        assert_eq!(
            e1.mul(&e2.add(&e3)),
            e1.mul(&e2).add(&e1.mul(&e3))
        );
    }

    #[test]
    fn derivative_of_single_letters() {
        assert_eq!(fox_derivative(&w(&[1]), 1), GroupRingElem::one());
        assert_eq!(
            fox_derivative(&w(&[-1]), 1),
            GroupRingElem::from_term(w(&[-1]), -1)
        );
        assert!(fox_derivative(&w(&[2]), 1).is_zero());
    }

    #[test]
    fn derivative_of_commutator() {
        // d(x1 x2 x1^-1 x2^-1)/dx1 = 1 - x1 x2 x1^-1
        let d = fox_derivative(&w(&[1, 2, -1, -2]), 1);
        let expected =
            GroupRingElem::one().sub(&GroupRingElem::from_word(w(&[1, 2, -1])));
        assert_eq!(d, expected);
    }

    #[test]
    fn fundamental_identity_on_fixed_words() {
        for letters in [
            vec![1, 2, -1, -2],
            vec![3, 1, -3, -2],
            vec![1, 1, 1],
            vec![-2, 1, 2, 2, -1],
            vec![],
        ] {
            let word = w(&letters);
            let lhs = fox_identity_lhs(&word, 3);
            let rhs = GroupRingElem::from_word(word.clone()).sub(&GroupRingElem::one());
            assert_eq!(lhs, rhs, "failed on {word}");
        }
    }
}
