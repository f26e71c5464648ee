use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::generator::GeneratorId;
use super::monomial::Monomial;
use super::Q;
use crate::error::{Result, RingError};

/// A sparse Q-linear combination of monomials over `n` markings.
///
/// No zero coefficients are ever stored. The operator impls (`+`, `-`, `*`)
/// panic on an ambient mismatch; use the `checked_*` methods when the
/// operands come from untrusted input.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Element {
    ambient: usize,
    terms: BTreeMap<Monomial, Q>,
}

impl Element {
    pub fn zero(ambient: usize) -> Self {
        Element {
            ambient,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(ambient: usize) -> Self {
        Element::constant(ambient, Q::one())
    }

    pub fn constant(ambient: usize, c: Q) -> Self {
        Element::term(ambient, Monomial::one(), c)
    }

    pub fn term(ambient: usize, m: Monomial, c: Q) -> Self {
        let mut e = Element::zero(ambient);
        e.add_term(m, c);
        e
    }

    pub fn monomial(ambient: usize, m: Monomial) -> Self {
        Element::term(ambient, m, Q::one())
    }

    pub fn generator(ambient: usize, g: GeneratorId) -> Self {
        Element::monomial(ambient, Monomial::generator(g))
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Q)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Monomial, Q)> {
        self.terms.into_iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> Q {
        self.terms.get(m).cloned().unwrap_or_else(Q::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: Q) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Element, c: &Q) {
        debug_assert_eq!(self.ambient, other.ambient);
        if c.is_zero() {
            return;
        }
        for (m, d) in &other.terms {
            self.add_term(m.clone(), d * c);
        }
    }

    pub fn scale(&self, c: &Q) -> Element {
        if c.is_zero() {
            return Element::zero(self.ambient);
        }
        Element {
            ambient: self.ambient,
            terms: self.terms.iter().map(|(m, d)| (m.clone(), d * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Element {
        Element {
            ambient: self.ambient,
            terms: self
                .terms
                .iter()
                .map(|(k, c)| (k.mul(m), c.clone()))
                .collect(),
        }
    }

    fn check(&self, other: &Element) -> Result<()> {
        if self.ambient == other.ambient {
            Ok(())
        } else {
            Err(RingError::AmbientMismatch {
                left: self.ambient,
                right: other.ambient,
            })
        }
    }

    pub fn checked_add(&self, other: &Element) -> Result<Element> {
        self.check(other)?;
        let mut out = self.clone();
        out.add_scaled(other, &Q::one());
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Element) -> Result<Element> {
        self.check(other)?;
        let mut out = self.clone();
        out.add_scaled(other, &-Q::one());
        Ok(out)
    }

    /// Free commutative product (no relations applied).
    pub fn checked_mul(&self, other: &Element) -> Result<Element> {
        self.check(other)?;
        let mut out = Element::zero(self.ambient);
        for (m, c) in &self.terms {
            for (k, d) in &other.terms {
                out.add_term(m.mul(k), c * d);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, e: u32) -> Element {
        let mut out = Element::one(self.ambient);
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// The common degree of all terms, if the element is homogeneous.
    /// The zero element is homogeneous of every degree and reports `None`.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let mut it = self.terms.keys().map(Monomial::degree);
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    /// Applies the ring homomorphism sending each generator `g` to `image(g)`.
    pub fn substitute(
        &self,
        ambient: usize,
        mut image: impl FnMut(GeneratorId) -> Element,
    ) -> Element {
        let mut cache: BTreeMap<GeneratorId, Element> = BTreeMap::new();
        let mut out = Element::zero(ambient);
        for (m, c) in &self.terms {
            let mut prod = Element::constant(ambient, c.clone());
            for &(g, e) in m.factors() {
                let img = cache.entry(g).or_insert_with(|| image(g));
                for _ in 0..e {
                    prod = &prod * img;
                }
                if prod.is_zero() {
                    break;
                }
            }
            out.add_scaled(&prod, &Q::one());
        }
        out
    }

    /// Same terms, relabelled with another ambient.
    pub fn with_ambient(mut self, ambient: usize) -> Element {
        self.ambient = ambient;
        self
    }

    pub fn validate(&self) -> Result<()> {
        for m in self.terms.keys() {
            for (g, _) in m.factors() {
                g.validate(self.ambient)?;
            }
        }
        Ok(())
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[n={}] {}", self.ambient, self)
    }
}

impl<'a> Add<&'a Element> for &'a Element {
    type Output = Element;
    fn add(self, rhs: &'a Element) -> Element {
        self.checked_add(rhs).expect("ambient mismatch in +")
    }
}

impl<'a> Sub<&'a Element> for &'a Element {
    type Output = Element;
    fn sub(self, rhs: &'a Element) -> Element {
        self.checked_sub(rhs).expect("ambient mismatch in -")
    }
}

impl<'a> Mul<&'a Element> for &'a Element {
    type Output = Element;
    fn mul(self, rhs: &'a Element) -> Element {
        self.checked_mul(rhs).expect("ambient mismatch in *")
    }
}

impl Add for Element {
    type Output = Element;
    fn add(self, rhs: Element) -> Element {
        &self + &rhs
    }
}

impl Sub for Element {
    type Output = Element;
    fn sub(self, rhs: Element) -> Element {
        &self - &rhs
    }
}

impl Mul for Element {
    type Output = Element;
    fn mul(self, rhs: Element) -> Element {
        &self * &rhs
    }
}

impl Neg for &Element {
    type Output = Element;
    fn neg(self) -> Element {
        self.scale(&-Q::one())
    }
}

impl Neg for Element {
    type Output = Element;
    fn neg(self) -> Element {
        -&self
    }
}
