use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use super::{Monomial, MonomialOrder, PolyError, Rational};

/// A single `coefficient * monomial` term.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Term {
    pub coeff: Rational,
    pub monomial: Monomial,
}

impl Term {
    pub fn new(coeff: Rational, monomial: Monomial) -> Self {
        Term { coeff, monomial }
    }
}

/// Sparse multivariate polynomial over the rationals.
///
/// Terms are kept strictly descending under `order`, with no zero
/// coefficients and no repeated monomials. The zero polynomial has no terms.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    nvars: usize,
    order: MonomialOrder,
    terms: Vec<Term>,
}

impl Polynomial {
    pub fn zero(nvars: usize, order: MonomialOrder) -> Self {
        Polynomial {
            nvars,
            order,
            terms: Vec::new(),
        }
    }

    pub fn constant(nvars: usize, order: MonomialOrder, c: Rational) -> Self {
        let mut p = Polynomial::zero(nvars, order);
        if !c.is_zero() {
            p.terms.push(Term::new(c, Monomial::one(nvars)));
        }
        p
    }

    pub fn one(nvars: usize, order: MonomialOrder) -> Self {
        Polynomial::constant(nvars, order, Rational::one())
    }

    /// The polynomial `z_{index+1}`.
    pub fn variable(nvars: usize, order: MonomialOrder, index: usize) -> Result<Self, PolyError> {
        Ok(Polynomial {
            nvars,
            order,
            terms: vec![Term::new(
                Rational::one(),
                Monomial::variable(nvars, index)?,
            )],
        })
    }

    pub fn from_term(
        nvars: usize,
        order: MonomialOrder,
        coeff: Rational,
        monomial: Monomial,
    ) -> Result<Self, PolyError> {
        Polynomial::from_terms(nvars, order, [Term::new(coeff, monomial)])
    }

    /// Builds a polynomial from terms in any order; like terms are merged
    /// and zeros dropped.
    pub fn from_terms<I>(nvars: usize, order: MonomialOrder, terms: I) -> Result<Self, PolyError>
    where
        I: IntoIterator<Item = Term>,
    {
        let mut acc: HashMap<Monomial, Rational> = HashMap::new();
        for t in terms {
            if t.monomial.nvars() != nvars {
                return Err(PolyError::DimensionMismatch {
                    left: nvars,
                    right: t.monomial.nvars(),
                });
            }
            *acc.entry(t.monomial).or_insert_with(Rational::zero) += t.coeff;
        }
        Ok(Polynomial::from_map(nvars, order, acc))
    }

    fn from_map(nvars: usize, order: MonomialOrder, acc: HashMap<Monomial, Rational>) -> Self {
        let mut terms: Vec<Term> = acc
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(m, c)| Term::new(c, m))
            .collect();
        terms.sort_by(|a, b| order.cmp_same_ring(&b.monomial, &a.monomial));
        Polynomial {
            nvars,
            order,
            terms,
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Nonzero constant.
    pub fn is_constant(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].monomial.is_one()
    }

    pub fn is_one(&self) -> bool {
        self.is_constant() && self.terms[0].coeff.is_one()
    }

    pub fn leading_term(&self) -> Result<&Term, PolyError> {
        self.terms.first().ok_or(PolyError::ZeroPolynomial)
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|t| &t.monomial)
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.terms.first().map(|t| &t.coeff)
    }

    pub fn total_degree(&self) -> Option<u64> {
        self.terms.iter().map(|t| t.monomial.degree()).max()
    }

    /// The same polynomial with terms re-sorted under another order.
    pub fn with_order(&self, order: MonomialOrder) -> Polynomial {
        let mut terms = self.terms.clone();
        terms.sort_by(|a, b| order.cmp_same_ring(&b.monomial, &a.monomial));
        Polynomial {
            nvars: self.nvars,
            order,
            terms,
        }
    }

    pub(crate) fn check_compatible(&self, other: &Polynomial) -> Result<(), PolyError> {
        if self.nvars != other.nvars {
            return Err(PolyError::DimensionMismatch {
                left: self.nvars,
                right: other.nvars,
            });
        }
        if self.order != other.order {
            return Err(PolyError::OrderMismatch {
                left: self.order,
                right: other.order,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_compatible(other)?;
        Ok(self.merge(other.terms.iter().cloned()))
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_compatible(other)?;
        Ok(self.merge(
            other
                .terms
                .iter()
                .map(|t| Term::new(-t.coeff.clone(), t.monomial.clone())),
        ))
    }

    pub fn neg(&self) -> Polynomial {
        self.scale(&-Rational::one())
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars, self.order);
        }
        Polynomial {
            nvars: self.nvars,
            order: self.order,
            terms: self
                .terms
                .iter()
                .map(|t| Term::new(&t.coeff * c, t.monomial.clone()))
                .collect(),
        }
    }

    /// `coeff * monomial * self`. Multiplying by a monomial preserves the
    /// term order, so no re-sort is needed.
    pub fn mul_term(&self, coeff: &Rational, monomial: &Monomial) -> Result<Polynomial, PolyError> {
        if monomial.nvars() != self.nvars {
            return Err(PolyError::DimensionMismatch {
                left: self.nvars,
                right: monomial.nvars(),
            });
        }
        if coeff.is_zero() {
            return Ok(Polynomial::zero(self.nvars, self.order));
        }
        let terms = self
            .terms
            .iter()
            .map(|t| Ok(Term::new(&t.coeff * coeff, t.monomial.mul(monomial)?)))
            .collect::<Result<Vec<_>, PolyError>>()?;
        Ok(Polynomial {
            nvars: self.nvars,
            order: self.order,
            terms,
        })
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check_compatible(other)?;
        let mut acc: HashMap<Monomial, Rational> = HashMap::new();
        for a in &self.terms {
            for b in &other.terms {
                let m = a.monomial.mul(&b.monomial)?;
                *acc.entry(m).or_insert_with(Rational::zero) += &a.coeff * &b.coeff;
            }
        }
        Ok(Polynomial::from_map(self.nvars, self.order, acc))
    }

    pub fn pow(&self, exp: u32) -> Result<Polynomial, PolyError> {
        let mut result = Polynomial::one(self.nvars, self.order);
        for _ in 0..exp {
            result = result.mul(self)?;
        }
        Ok(result)
    }

    /// Scales so the leading coefficient is 1. Zero stays zero.
    pub fn monic(&self) -> Polynomial {
        match self.leading_coeff() {
            None => self.clone(),
            Some(lc) if lc.is_one() => self.clone(),
            Some(lc) => self.scale(&lc.recip()),
        }
    }

    /// Evaluates at a rational point with one coordinate per variable.
    pub fn eval(&self, point: &[Rational]) -> Result<Rational, PolyError> {
        if point.len() != self.nvars {
            return Err(PolyError::DimensionMismatch {
                left: self.nvars,
                right: point.len(),
            });
        }
        let mut sum = Rational::zero();
        for t in &self.terms {
            let mut v = t.coeff.clone();
            for (x, &e) in point.iter().zip(t.monomial.exponents()) {
                if e > 0 {
                    v *= num_traits::pow(x.clone(), e as usize);
                }
            }
            sum += v;
        }
        Ok(sum)
    }

    /// Sorted merge of `self` with `rhs` (which must already be descending).
    fn merge<I>(&self, rhs: I) -> Polynomial
    where
        I: IntoIterator<Item = Term>,
    {
        let order = self.order;
        let mut out = Vec::with_capacity(self.terms.len());
        let mut left = self.terms.iter().cloned().peekable();
        let mut right = rhs.into_iter().peekable();
        loop {
            let ord = match (left.peek(), right.peek()) {
                (None, None) => break,
                (Some(_), None) => Ordering::Greater,
                (None, Some(_)) => Ordering::Less,
                (Some(a), Some(b)) => order.cmp_same_ring(&a.monomial, &b.monomial),
            };
            match ord {
                Ordering::Greater => out.extend(left.next()),
                Ordering::Less => out.extend(right.next()),
                Ordering::Equal => {
                    let a = left.next().unwrap();
                    let b = right.next().unwrap();
                    let c = a.coeff + b.coeff;
                    if !c.is_zero() {
                        out.push(Term::new(c, a.monomial));
                    }
                }
            }
        }
        Polynomial {
            nvars: self.nvars,
            order,
            terms: out,
        }
    }

    /// `self - coeff * monomial * g`, fused to avoid an intermediate polynomial.
    pub(crate) fn sub_scaled(
        &self,
        coeff: &Rational,
        monomial: &Monomial,
        g: &Polynomial,
    ) -> Result<Polynomial, PolyError> {
        let neg = -coeff;
        let shifted = g
            .terms
            .iter()
            .map(|t| Ok(Term::new(&t.coeff * &neg, t.monomial.mul(monomial)?)))
            .collect::<Result<Vec<_>, PolyError>>()?;
        Ok(self.merge(shifted))
    }

    /// Drops the leading term.
    pub(crate) fn tail(mut self) -> Polynomial {
        if !self.terms.is_empty() {
            self.terms.remove(0);
        }
        self
    }

    /// Appends a term strictly smaller than every existing term.
    pub(crate) fn push_smallest(&mut self, term: Term) {
        debug_assert!(self
            .terms
            .last()
            .is_none_or(
                |t| self.order.cmp_same_ring(&t.monomial, &term.monomial) == Ordering::Greater
            ));
        if !term.coeff.is_zero() {
            self.terms.push(term);
        }
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial[{}; {}]({self})", self.nvars, self.order)
    }
}

/// Text form: `z1*z2*z3 - z1*z2 - z2*z3 + z2`. Zero renders as `0`.
impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, t) in self.terms.iter().enumerate() {
            let negative = t.coeff.is_negative();
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let abs = t.coeff.abs();
            if t.monomial.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", t.monomial)?;
            } else {
                write!(f, "{abs}*{}", t.monomial)?;
            }
        }
        Ok(())
    }
}
