//! Truncated power series in noncommuting variables, and the Magnus
//! expansion of words in meridian generators.
//!
//! A [`TruncatedSeries`] keeps integer coefficients for monomials
//! `X_{i_1}...X_{i_p}` of degree at most a fixed bound `k`; everything of
//! higher degree is discarded on the fly. Storage is sparse: a monomial is a
//! sequence of variable indices, and zero coefficients are never kept.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::SeriesError;
use crate::word::FreeWord;

/// Sparse truncated series over `Z<<X_1,...,X_n>>`.
///
/// Monomial keys hold 1-based variable indices. The empty key is the
/// constant term.
#[derive(Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    vars: usize,
    bound: usize,
    terms: BTreeMap<Vec<u8>, BigInt>,
}

impl TruncatedSeries {
    pub fn zero(vars: usize, bound: usize) -> Self {
        Self { vars, bound, terms: BTreeMap::new() }
    }

    pub fn one(vars: usize, bound: usize) -> Self {
        let mut s = Self::zero(vars, bound);
        s.terms.insert(Vec::new(), BigInt::one());
        s
    }

    /// The expansion of a single meridian letter: `1 + X_i` for the
    /// generator, and the truncated geometric series
    /// `1 - X_i + X_i^2 - ...` for its inverse.
    pub fn meridian(var: usize, inverse: bool, vars: usize, bound: usize) -> Result<Self, SeriesError> {
        if var == 0 || var > vars {
            return Err(SeriesError::LetterOutOfRange(var, vars));
        }
        let mut s = Self::one(vars, bound);
        if !inverse {
            if bound >= 1 {
                s.terms.insert(vec![var as u8], BigInt::one());
            }
        } else {
            let mut coeff = BigInt::one();
            for d in 1..=bound {
                coeff = -coeff;
                s.terms.insert(vec![var as u8; d], coeff.clone());
            }
        }
        Ok(s)
    }

    pub fn vars(&self) -> usize {
        self.vars
    }

    pub fn degree_bound(&self) -> usize {
        self.bound
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&Vec::new()).is_some_and(|c| c.is_one())
    }

    /// Stored coefficient of `X_{i_1}...X_{i_p}`, zero when absent.
    pub fn coefficient(&self, index: &[usize]) -> Result<BigInt, SeriesError> {
        if index.len() > self.bound {
            return Err(SeriesError::SequenceTooLong(index.len(), self.bound));
        }
        let mut key = Vec::with_capacity(index.len());
        for &i in index {
            if i == 0 || i > self.vars {
                return Err(SeriesError::LetterOutOfRange(i, self.vars));
            }
            key.push(i as u8);
        }
        Ok(self.terms.get(&key).cloned().unwrap_or_else(BigInt::zero))
    }

    /// Monomials and coefficients, keys as 1-based variable indices.
    pub fn terms(&self) -> impl Iterator<Item = (&[u8], &BigInt)> {
        self.terms.iter().map(|(k, v)| (k.as_slice(), v))
    }

    fn check_compatible(&self, rhs: &Self) -> Result<(), SeriesError> {
        if self.vars != rhs.vars || self.bound != rhs.bound {
            return Err(SeriesError::Mismatch(self.vars, rhs.vars, self.bound, rhs.bound));
        }
        Ok(())
    }

    fn insert_add(terms: &mut BTreeMap<Vec<u8>, BigInt>, key: Vec<u8>, value: BigInt) {
        if value.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match terms.entry(key) {
            Entry::Vacant(e) => {
                e.insert(value);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += value;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add(&self, rhs: &Self) -> Result<Self, SeriesError> {
        self.check_compatible(rhs)?;
        let mut out = self.clone();
        for (k, v) in &rhs.terms {
            Self::insert_add(&mut out.terms, k.clone(), v.clone());
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        let mut out = self.clone();
        for v in out.terms.values_mut() {
            *v = -v.clone();
        }
        out
    }

    pub fn sub(&self, rhs: &Self) -> Result<Self, SeriesError> {
        self.add(&rhs.neg())
    }

    /// Product with every term of degree above the bound discarded.
    pub fn mul(&self, rhs: &Self) -> Result<Self, SeriesError> {
        self.check_compatible(rhs)?;
        let mut out = Self::zero(self.vars, self.bound);
        for (ka, va) in &self.terms {
            for (kb, vb) in &rhs.terms {
                if ka.len() + kb.len() > self.bound {
                    continue;
                }
                let mut key = Vec::with_capacity(ka.len() + kb.len());
                key.extend_from_slice(ka);
                key.extend_from_slice(kb);
                Self::insert_add(&mut out.terms, key, va * vb);
            }
        }
        Ok(out)
    }

    /// Multiplicative inverse, defined when the constant term is 1:
    /// `(1 + Y)^{-1} = sum (-Y)^i` truncated.
    pub fn inverse(&self) -> Result<Self, SeriesError> {
        if !self.terms.get(&Vec::new()).is_some_and(|c| c.is_one()) {
            return Err(SeriesError::NotInvertible);
        }
        let mut tail = self.clone();
        tail.terms.remove(&Vec::new());
        let minus_tail = tail.neg();
        let mut out = Self::one(self.vars, self.bound);
        let mut power = Self::one(self.vars, self.bound);
        for _ in 1..=self.bound {
            power = power.mul(&minus_tail)?;
            if power.terms.is_empty() {
                break;
            }
            out = out.add(&power)?;
        }
        Ok(out)
    }

    /// Re-truncates to a smaller degree bound.
    pub fn truncated(&self, bound: usize) -> Self {
        let bound = bound.min(self.bound);
        let terms = self.terms.iter().filter(|(k, _)| k.len() <= bound).map(|(k, v)| (k.clone(), v.clone())).collect();
        Self { vars: self.vars, bound, terms }
    }
}

/// Magnus expansion of a word over meridian generators `0..vars` (0-based
/// letters map to variables `X_1..X_vars`), truncated above degree `bound`.
///
/// Letters are substituted one at a time, left to right, with one truncated
/// multiplication each.
pub fn expand(word: &FreeWord, vars: usize, bound: usize) -> Result<TruncatedSeries, SeriesError> {
    let mut out = TruncatedSeries::one(vars, bound);
    for (gen, inv) in word.letters() {
        if gen >= vars {
            return Err(SeriesError::LetterOutOfRange(gen + 1, vars));
        }
        let letter = TruncatedSeries::meridian(gen + 1, inv, vars, bound)?;
        out = out.mul(&letter)?;
    }
    Ok(out)
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, v) in &self.terms {
            let neg = v.sign() == num_bigint::Sign::Minus;
            let abs = if neg { -v.clone() } else { v.clone() };
            if first {
                first = false;
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if k.is_empty() || !abs.is_one() {
                write!(f, "{abs}")?;
            }
            for x in k {
                write!(f, "X{x}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TruncatedSeries({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn big(v: i64) -> BigInt {
        BigInt::from(v)
    }

    #[test]
    fn meridian_generator_is_one_plus_x() {
        let s = expand(&FreeWord::from_signed(&[1]), 2, 3).unwrap();
        assert_eq!(s.coefficient(&[]).unwrap(), big(1));
        assert_eq!(s.coefficient(&[1]).unwrap(), big(1));
        assert_eq!(s.coefficient(&[1, 1]).unwrap(), big(0));
        assert_eq!(s.coefficient(&[2]).unwrap(), big(0));
    }

    #[test]
    fn word_times_inverse_expands_to_one() {
        let s = expand(&FreeWord::from_signed(&[1, -1]), 2, 4).unwrap();
        assert!(s.is_one());
    }

    #[test]
    fn truncated_inverse_pair_multiplies_to_one() {
        // (1 + X1)(1 - X1 + X1^2) = 1 at bound 2
        let a = TruncatedSeries::meridian(1, false, 1, 2).unwrap();
        let b = TruncatedSeries::meridian(1, true, 1, 2).unwrap();
        assert!(a.mul(&b).unwrap().is_one());
    }

    #[test]
    fn unit_is_neutral() {
        let s = expand(&FreeWord::from_signed(&[1, 2, -1]), 2, 3).unwrap();
        let one = TruncatedSeries::one(2, 3);
        assert_eq!(one.mul(&s).unwrap(), s);
        assert_eq!(s.mul(&one).unwrap(), s);
    }

    #[test]
    fn product_of_two_generators() {
        // (1+X1)(1+X2) = 1 + X1 + X2 + X1X2 at bound 2
        let a = TruncatedSeries::meridian(1, false, 2, 2).unwrap();
        let b = TruncatedSeries::meridian(2, false, 2, 2).unwrap();
        let p = a.mul(&b).unwrap();
        assert_eq!(p.coefficient(&[]).unwrap(), big(1));
        assert_eq!(p.coefficient(&[1]).unwrap(), big(1));
        assert_eq!(p.coefficient(&[2]).unwrap(), big(1));
        assert_eq!(p.coefficient(&[1, 2]).unwrap(), big(1));
        assert_eq!(p.coefficient(&[2, 1]).unwrap(), big(0));
        assert_eq!(p.terms().count(), 4);
    }

    #[test]
    fn borromean_longitude_word_expands_exactly() {
        // E(m2^-1 m1 m2 m1^-1) = 1 + X1X2 - X2X1 at bound 2
        let w = FreeWord::from_signed(&[-2, 1, 2, -1]);
        let s = expand(&w, 3, 2).unwrap();
        assert_eq!(s.coefficient(&[1, 2]).unwrap(), big(1));
        assert_eq!(s.coefficient(&[2, 1]).unwrap(), big(-1));
        let mut expected = TruncatedSeries::one(3, 2);
        expected = expected
            .add(&{
                let mut t = TruncatedSeries::zero(3, 2);
                TruncatedSeries::insert_add(&mut t.terms, vec![1, 2], big(1));
                TruncatedSeries::insert_add(&mut t.terms, vec![2, 1], big(-1));
                t
            })
            .unwrap();
        assert_eq!(s, expected);
    }

    #[test]
    fn coefficient_of_nonempty_index_in_one_is_zero() {
        let one = TruncatedSeries::one(2, 3);
        assert_eq!(one.coefficient(&[1, 2]).unwrap(), big(0));
    }

    #[test]
    fn too_long_sequence_is_a_configuration_error() {
        let one = TruncatedSeries::one(2, 2);
        assert!(matches!(one.coefficient(&[1, 1, 1]), Err(SeriesError::SequenceTooLong(3, 2))));
    }

    #[test]
    fn mismatched_parameters_error() {
        let a = TruncatedSeries::one(2, 2);
        let b = TruncatedSeries::one(3, 2);
        assert!(matches!(a.mul(&b), Err(SeriesError::Mismatch(..))));
    }

    #[test]
    fn commutator_leading_term() {
        // [m_i, m_j] expands to 1 + XiXj - XjXi + higher order
        let w = FreeWord::from_signed(&[1, 2, -1, -2]);
        let s = expand(&w, 2, 2).unwrap();
        assert_eq!(s.coefficient(&[1, 2]).unwrap(), big(1));
        assert_eq!(s.coefficient(&[2, 1]).unwrap(), big(-1));
        assert_eq!(s.coefficient(&[1]).unwrap(), big(0));
        assert_eq!(s.coefficient(&[2]).unwrap(), big(0));
    }

    fn word_strategy() -> impl Strategy<Value = FreeWord> {
        prop::collection::vec(prop_oneof![1..=3i32, -3i32..=-1], 0..10).prop_map(|ls| FreeWord::from_signed(&ls))
    }

    proptest! {
        #[test]
        fn expand_is_multiplicative(u in word_strategy(), v in word_strategy()) {
            let k = 3;
            let lhs = expand(&u.concat(&v), 3, k).unwrap();
            let rhs = expand(&u, 3, k).unwrap().mul(&expand(&v, 3, k).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn expand_of_inverse_is_series_inverse(w in word_strategy()) {
            let k = 3;
            let e = expand(&w, 3, k).unwrap();
            let ei = expand(&w.inverse(), 3, k).unwrap();
            prop_assert!(e.mul(&ei).unwrap().is_one());
            prop_assert_eq!(e.inverse().unwrap(), ei);
        }

        #[test]
        fn truncation_is_coherent(w in word_strategy()) {
            let high = expand(&w, 3, 4).unwrap();
            let low = expand(&w, 3, 3).unwrap();
            prop_assert_eq!(high.truncated(3), low);
        }
    }
}
