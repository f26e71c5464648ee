use std::cmp::Ordering;
use std::fmt;

use super::generator::{GeneratorId, IndexSet};

/// A product of generators with positive exponents, kept sorted by generator.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    factors: Vec<(GeneratorId, u32)>,
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    pub fn generator(g: GeneratorId) -> Self {
        Monomial {
            factors: vec![(g, 1)],
        }
    }

    pub fn power(g: GeneratorId, e: u32) -> Self {
        if e == 0 {
            Monomial::one()
        } else {
            Monomial {
                factors: vec![(g, e)],
            }
        }
    }

    /// Builds a monomial from arbitrary `(generator, exponent)` pairs.
    pub fn from_factors<I: IntoIterator<Item = (GeneratorId, u32)>>(it: I) -> Self {
        let mut m = Monomial::one();
        for (g, e) in it {
            m.mul_generator(g, e);
        }
        m
    }

    pub fn factors(&self) -> &[(GeneratorId, u32)] {
        &self.factors
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.factors.iter().map(|&(_, e)| e as usize).sum()
    }

    pub fn exponent(&self, g: GeneratorId) -> u32 {
        match self.factors.binary_search_by(|(h, _)| h.cmp(&g)) {
            Ok(pos) => self.factors[pos].1,
            Err(_) => 0,
        }
    }

    pub fn mul_generator(&mut self, g: GeneratorId, e: u32) {
        if e == 0 {
            return;
        }
        match self.factors.binary_search_by(|(h, _)| h.cmp(&g)) {
            Ok(pos) => self.factors[pos].1 += e,
            Err(pos) => self.factors.insert(pos, (g, e)),
        }
    }

    /// Divides out `g^e`; returns `false` (leaving `self` untouched) if it does not divide.
    pub fn div_generator(&mut self, g: GeneratorId, e: u32) -> bool {
        if e == 0 {
            return true;
        }
        match self.factors.binary_search_by(|(h, _)| h.cmp(&g)) {
            Ok(pos) if self.factors[pos].1 >= e => {
                self.factors[pos].1 -= e;
                if self.factors[pos].1 == 0 {
                    self.factors.remove(pos);
                }
                true
            }
            _ => false,
        }
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.factors.len() + other.factors.len());
        let (mut i, mut j) = (0, 0);
        while i < self.factors.len() && j < other.factors.len() {
            let (g, e) = self.factors[i];
            let (h, f) = other.factors[j];
            match g.cmp(&h) {
                Ordering::Less => {
                    out.push((g, e));
                    i += 1;
                }
                Ordering::Greater => {
                    out.push((h, f));
                    j += 1;
                }
                Ordering::Equal => {
                    out.push((g, e + f));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.factors[i..]);
        out.extend_from_slice(&other.factors[j..]);
        Monomial { factors: out }
    }

    /// True if `other` divides `self`.
    pub fn is_divisible_by(&self, other: &Monomial) -> bool {
        other.factors.iter().all(|&(g, e)| self.exponent(g) >= e)
    }

    /// Splits into the curve part (`a`, `b`, `d`) and the rest.
    pub fn split_curve(&self) -> (Monomial, Monomial) {
        let (curve, rest): (Vec<_>, Vec<_>) = self.factors.iter().partition(|(g, _)| g.is_curve());
        (Monomial { factors: curve }, Monomial { factors: rest })
    }

    /// The exceptional factors `(I, exponent)` in increasing set order.
    pub fn exceptional_part(&self) -> Vec<(IndexSet, u32)> {
        self.factors
            .iter()
            .filter_map(|&(g, e)| match g {
                GeneratorId::Exc(s) => Some((s, e)),
                _ => None,
            })
            .collect()
    }

    pub fn has(&self, pred: impl Fn(&GeneratorId) -> bool) -> bool {
        self.factors.iter().any(|(g, _)| pred(g))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.factors.cmp(&other.factors))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return write!(f, "1");
        }
        for (k, (g, e)) in self.factors.iter().enumerate() {
            if k > 0 {
                write!(f, "*")?;
            }
            if *e == 1 {
                write!(f, "{g}")?;
            } else {
                write!(f, "{g}^{e}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromIterator<GeneratorId> for Monomial {
    fn from_iter<T: IntoIterator<Item = GeneratorId>>(iter: T) -> Self {
        Monomial::from_factors(iter.into_iter().map(|g| (g, 1)))
    }
}
