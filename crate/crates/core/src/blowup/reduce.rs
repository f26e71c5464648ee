//! Reduction to standard monomials.
//!
//! A monomial is rewritten in three ways, in this order: a star-incompatible
//! pair of exceptional sets kills it; an exponent above its bound is lowered
//! with a Chern relation (largest offending set first); otherwise the curve
//! part is restricted to the intersection of the roots and normalised there.

use std::collections::HashMap;

use num_traits::{One, Zero};

use crate::curve::normal_form_monomial;
use crate::error::{Result, RingError};
use crate::ring::{q, Element, GeneratorId, IndexSet, Monomial, Q};

use super::forest::{build_forest, Forest};
use super::index::star_compatible;
use super::relations::chern_relation;

pub const DEFAULT_STEP_CAP: usize = 50_000_000;

/// Memoising reducer for a fixed `n`.
pub struct Reducer {
    n: usize,
    memo: HashMap<Monomial, Element>,
    lowering: HashMap<(IndexSet, Vec<IndexSet>), (u32, Element)>,
    steps: usize,
    cap: usize,
}

impl Reducer {
    pub fn new(n: usize) -> Self {
        Reducer::with_cap(n, DEFAULT_STEP_CAP)
    }

    pub fn with_cap(n: usize, cap: usize) -> Self {
        Reducer {
            n,
            memo: HashMap::new(),
            lowering: HashMap::new(),
            steps: 0,
            cap,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    fn check_input(&self, e: &Element) -> Result<()> {
        if e.ambient() != self.n {
            return Err(RingError::AmbientMismatch {
                left: e.ambient(),
                right: self.n,
            });
        }
        for (m, _) in e.terms() {
            for (g, _) in m.factors() {
                if let GeneratorId::Bd(_) = g {
                    return Err(RingError::ForeignGenerator(g.to_string()));
                }
                g.validate(self.n)?;
            }
        }
        Ok(())
    }

    pub fn reduce(&mut self, e: &Element) -> Result<Element> {
        self.check_input(e)?;
        let mut out = Element::zero(self.n);
        for (m, c) in e.terms() {
            let r = self.reduce_monomial(m)?;
            out.add_scaled(&r, c);
        }
        Ok(out)
    }

    /// Reduces a single monomial over `a`, `b`, `d`, `E`.
    pub fn reduce_monomial(&mut self, m: &Monomial) -> Result<Element> {
        if let Some(r) = self.memo.get(m) {
            return Ok(r.clone());
        }
        self.steps += 1;
        if self.steps > self.cap {
            return Err(RingError::NonTermination(self.cap));
        }
        let r = self.reduce_uncached(m)?;
        self.memo.insert(m.clone(), r.clone());
        Ok(r)
    }

    fn reduce_uncached(&mut self, m: &Monomial) -> Result<Element> {
        let n = self.n;
        if let Some(&(g @ GeneratorId::Dd(j, k), _)) = m
            .factors()
            .iter()
            .find(|(g, _)| matches!(g, GeneratorId::Dd(..)))
        {
            let mut rest = m.clone();
            rest.div_generator(g, 1);
            let mut out = Element::zero(n);
            for h in [GeneratorId::B(j, k), GeneratorId::A(j), GeneratorId::A(k)] {
                let mut next = rest.clone();
                next.mul_generator(h, 1);
                let r = self.reduce_monomial(&next)?;
                out.add_scaled(&r, &Q::one());
            }
            return Ok(out);
        }
        let epart = m.exceptional_part();
        for (x, &(i, _)) in epart.iter().enumerate() {
            for &(j, _) in &epart[x + 1..] {
                if !star_compatible(i, j, n) {
                    return Ok(Element::zero(n));
                }
            }
        }
        let sets: Vec<IndexSet> = epart.iter().map(|&(s, _)| s).collect();
        let forest = build_forest(&sets, n)?;
        let violator = (0..forest.len())
            .rev()
            .find(|&r| epart[r].1 as usize > forest.exponent_bound(r));
        if let Some(r) = violator {
            return self.lower(m, &forest, r);
        }
        Ok(self.restrict_to_roots(m, &forest))
    }

    /// Replaces `E_I^c prod_{J in H} E_J` by smaller terms.
    fn lower(&mut self, m: &Monomial, forest: &Forest, r: usize) -> Result<Element> {
        let n = self.n;
        let base = forest.vertex(r);
        let over: Vec<IndexSet> = forest
            .children(r)
            .iter()
            .map(|&s| forest.vertex(s))
            .collect();
        let key = (base, over.clone());
        if !self.lowering.contains_key(&key) {
            let rel = chern_relation(base, &over, n);
            let c = (forest.exponent_bound(r) + 1) as u32;
            let mut lead = Monomial::power(GeneratorId::exc(base), c);
            for &j in &over {
                lead.mul_generator(GeneratorId::exc(j), 1);
            }
            let sign = if c.is_multiple_of(2) { q(1) } else { q(-1) };
            let mut replacement = Element::monomial(n, lead);
            replacement.add_scaled(&rel, &-sign);
            debug_assert!(replacement
                .terms()
                .all(|(t, _)| t.exponent(GeneratorId::exc(base)) < c));
            self.lowering.insert(key.clone(), (c, replacement));
        }
        let (c, replacement) = self.lowering[&key].clone();
        let mut rest = m.clone();
        let ok = rest.div_generator(GeneratorId::exc(base), c)
            && over
                .iter()
                .all(|&j| rest.div_generator(GeneratorId::exc(j), 1));
        debug_assert!(ok);
        let mut out = Element::zero(n);
        for (t, coef) in replacement.terms() {
            let r = self.reduce_monomial(&rest.mul(t))?;
            out.add_scaled(&r, coef);
        }
        Ok(out)
    }

    /// Moves the curve part onto the variables of the root intersection and normalises it.
    fn restrict_to_roots(&self, m: &Monomial, forest: &Forest) -> Element {
        let n = self.n;
        let (curve, epart) = m.split_curve();
        let mut map: Vec<Option<u8>> = (0..n).map(|i| Some(i as u8)).collect();
        for root in forest.root_sets() {
            let block = root.complement(n);
            let rep = if block.contains(n) {
                None
            } else {
                block.min().map(|x| x as u8)
            };
            for i in block.without(n).iter() {
                map[i] = rep;
            }
        }
        let mut image = Element::one(n);
        for &(g, e) in curve.factors() {
            let img = match g {
                GeneratorId::A(i) => match map[i as usize] {
                    Some(p) => Element::generator(n, GeneratorId::A(p)),
                    None => return Element::zero(n),
                },
                GeneratorId::B(i, j) => match (map[i as usize], map[j as usize]) {
                    (Some(p), Some(r)) if p == r => {
                        Element::term(n, Monomial::generator(GeneratorId::A(p)), q(-2))
                    }
                    (Some(p), Some(r)) => {
                        Element::generator(n, GeneratorId::b(p as usize, r as usize))
                    }
                    _ => return Element::zero(n),
                },
                _ => unreachable!("d expanded and E split off"),
            };
            for _ in 0..e {
                image = &image * &img;
            }
        }
        let mut out = Element::zero(n);
        for (t, c) in image.terms() {
            let nf = normal_form_monomial(n, t);
            for (s, d) in nf.terms() {
                out.add_term(s.mul(&epart), c * d);
            }
        }
        out
    }
}

pub fn blowup_reduce(e: &Element, n: usize) -> Result<Element> {
    Reducer::new(n).reduce(e)
}

/// The point class `a_1 ... a_{n-1}`.
pub fn point_monomial(n: usize) -> Monomial {
    (1..n).map(GeneratorId::a).collect()
}

impl Reducer {
    /// Socle value of a degree `n - 1` element, normalised by `a_1 ... a_{n-1} -> 1`.
    pub fn socle(&mut self, e: &Element) -> Result<Q> {
        if e.is_zero() {
            return Ok(Q::zero());
        }
        if e.homogeneous_degree() != Some(self.n - 1) {
            return Err(RingError::Degree {
                expected: self.n - 1,
            });
        }
        let r = self.reduce(e)?;
        let point = point_monomial(self.n);
        if let Some((m, _)) = r.terms().find(|(m, _)| **m != point) {
            return Err(RingError::Invalid(format!(
                "top-degree reduction left the non-point monomial {m}"
            )));
        }
        Ok(r.coefficient(&point))
    }

    pub fn socle_monomial(&mut self, m: &Monomial) -> Result<Q> {
        let e = Element::monomial(self.n, m.clone());
        self.socle(&e)
    }
}

pub fn blowup_socle_eval(e: &Element, n: usize) -> Result<Q> {
    Reducer::new(n).socle(e)
}
