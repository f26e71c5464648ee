//! Betti numbers straight from the presentation: the degree-`d` part of the
//! free algebra modulo the relation ideal, by exact rank.

use std::collections::HashMap;

use num_traits::One;

use crate::error::{Result, RingError};
use crate::linalg::{EchelonBasis, SparseVec};
use crate::ring::{Element, GeneratorId, Monomial};

use super::index::admissible_sets;
use super::relations::relation_generators;

pub const ORACLE_MAX_N: usize = 5;

/// Generators of the free algebra: `a_i`, `b_{j,k}`, admissible `E_I`.
pub fn free_generators(n: usize) -> Vec<GeneratorId> {
    let mut out: Vec<GeneratorId> = (1..n).map(GeneratorId::a).collect();
    for j in 1..n {
        for k in j + 1..n {
            out.push(GeneratorId::b(j, k));
        }
    }
    out.extend(admissible_sets(n).into_iter().map(GeneratorId::exc));
    out
}

/// All monomials of degree `d` in `gens`.
pub fn monomials_of_degree(gens: &[GeneratorId], d: usize) -> Vec<Monomial> {
    fn rec(
        gens: &[GeneratorId],
        start: usize,
        left: usize,
        cur: &mut Monomial,
        out: &mut Vec<Monomial>,
    ) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for k in start..gens.len() {
            cur.mul_generator(gens[k], 1);
            rec(gens, k, left - 1, cur, out);
            cur.div_generator(gens[k], 1);
        }
    }
    let mut out = Vec::new();
    rec(gens, 0, d, &mut Monomial::one(), &mut out);
    out
}

fn expand_d(e: &Element, n: usize) -> Element {
    e.substitute(n, |g| match g {
        GeneratorId::Dd(j, k) => {
            let mut x = Element::generator(n, GeneratorId::B(j, k));
            x.add_term(Monomial::generator(GeneratorId::A(j)), One::one());
            x.add_term(Monomial::generator(GeneratorId::A(k)), One::one());
            x
        }
        other => Element::generator(n, other),
    })
}

/// The degree-`d` part of an ideal of the free algebra, as an echelon basis over the monomials.
///
/// Monomials divisible by a single-term generator are dropped from the
/// coordinate space up front; they lie in the ideal.
pub struct IdealSlice {
    columns: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
    killers: Vec<Monomial>,
    basis: EchelonBasis,
}

impl IdealSlice {
    pub fn new(n: usize, d: usize, relations: &[Element]) -> Self {
        let gens = free_generators(n);
        let relations: Vec<Element> = relations
            .iter()
            .map(|r| expand_d(r, n))
            .filter(|e| !e.is_zero())
            .collect();
        let (monomial_rels, others): (Vec<Element>, Vec<Element>) =
            relations.into_iter().partition(|e| e.len() == 1);
        let killers: Vec<Monomial> = monomial_rels
            .iter()
            .map(|e| e.terms().next().expect("one term").0.clone())
            .collect();
        let dead = |m: &Monomial| killers.iter().any(|k| m.is_divisible_by(k));
        let columns: Vec<Monomial> = monomials_of_degree(&gens, d)
            .into_iter()
            .filter(|m| !dead(m))
            .collect();
        let index: HashMap<Monomial, usize> = columns
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), i))
            .collect();
        let mut basis = EchelonBasis::new();
        let mut multipliers: HashMap<usize, Vec<Monomial>> = HashMap::new();
        for rel in &others {
            if basis.rank() == columns.len() {
                break;
            }
            let Some(k) = rel.homogeneous_degree() else {
                continue;
            };
            if k > d {
                continue;
            }
            let us = multipliers.entry(d - k).or_insert_with(|| {
                monomials_of_degree(&gens, d - k)
                    .into_iter()
                    .filter(|m| !dead(m))
                    .collect()
            });
            for u in us.iter() {
                let mut row: SparseVec = rel
                    .terms()
                    .filter_map(|(m, c)| index.get(&m.mul(u)).map(|&i| (i, c.clone())))
                    .collect();
                if row.is_empty() {
                    continue;
                }
                row.sort_by_key(|&(i, _)| i);
                basis.insert(row);
            }
        }
        IdealSlice {
            columns,
            index,
            killers,
            basis,
        }
    }

    /// Dimension of the quotient in this degree.
    pub fn quotient_dimension(&self) -> usize {
        self.columns.len() - self.basis.rank()
    }

    /// Whether a degree-`d` element over `a`, `b`, `d`, `E` lies in the ideal.
    pub fn contains(&self, e: &Element) -> bool {
        let e = expand_d(e, e.ambient());
        let mut row: SparseVec = Vec::new();
        for (m, c) in e.terms() {
            if self.killers.iter().any(|k| m.is_divisible_by(k)) {
                continue;
            }
            match self.index.get(m) {
                Some(&i) => row.push((i, c.clone())),
                None => return false,
            }
        }
        row.sort_by_key(|&(i, _)| i);
        self.basis.contains(row)
    }
}

/// `dim R^d(U_{n-1})` computed without standard monomials or pairings.
pub fn brute_force_betti(n: usize, d: usize) -> Result<usize> {
    if n > ORACLE_MAX_N {
        return Err(RingError::SizeGuard(format!(
            "oracle limited to n <= {ORACLE_MAX_N}, got {n}"
        )));
    }
    if n < 2 || d >= n {
        return Err(RingError::Invalid(format!(
            "degree {d} out of range for n = {n}"
        )));
    }
    let relations: Vec<Element> = relation_generators(n)
        .into_iter()
        .map(|r| r.element)
        .collect();
    Ok(IdealSlice::new(n, d, &relations).quotient_dimension())
}
