//! The compact-type moduli space `M_{1,n}^{ct}`: boundary divisors `D_I` and
//! their translation to the blow-up ring.

pub mod getzler;
pub mod lambda;

use std::collections::HashMap;

use num_traits::One;

use crate::blowup::{is_admissible, Reducer};
use crate::error::{Result, RingError};
use crate::ring::{Element, GeneratorId, IndexSet, Monomial, Q};

pub use getzler::{getzler_ct_relation, verify_getzler_pullbacks, GetzlerClasses, GetzlerReport};
pub use lambda::{bernoulli, lambda_integral, multinomial};

fn sum_of(ambient: usize, gens: impl IntoIterator<Item = GeneratorId>) -> Element {
    let mut out = Element::zero(ambient);
    for g in gens {
        out.add_term(Monomial::generator(g), Q::one());
    }
    out
}

fn check_moduli(x: &Element, n: usize) -> Result<()> {
    if x.ambient() != n {
        return Err(RingError::AmbientMismatch {
            left: x.ambient(),
            right: n,
        });
    }
    for (m, _) in x.terms() {
        for (g, _) in m.factors() {
            match g {
                GeneratorId::Bd(_) => g.validate(n)?,
                _ => return Err(RingError::ForeignGenerator(g.to_string())),
            }
        }
    }
    Ok(())
}

/// `F^*` of a single boundary divisor.
pub fn pullback_divisor(set: IndexSet, n: usize) -> Element {
    let admissible = |s: &IndexSet| is_admissible(*s, n);
    if set.len() >= 3 {
        return Element::generator(n, GeneratorId::exc(set.complement(n)));
    }
    let v: Vec<usize> = set.iter().collect();
    let (j, k) = (v[0], v[1]);
    if k == n {
        let lower = IndexSet::full(n - 1).without(j);
        let sum = sum_of(n, lower.subsets().filter(admissible).map(GeneratorId::exc));
        &Element::generator(n, GeneratorId::a(j)) - &sum
    } else {
        let rest = IndexSet::full(n).without(j).without(k);
        let sum = sum_of(n, rest.subsets().filter(admissible).map(GeneratorId::exc));
        &Element::generator(n, GeneratorId::d(j, k)) - &sum
    }
}

/// The ring map `F^*` into the blow-up ring (output may contain `d_{j,k}`).
#[allow(non_snake_case)]
pub fn pullback_F(x: &Element, n: usize) -> Result<Element> {
    check_moduli(x, n)?;
    Ok(x.substitute(n, |g| match g {
        GeneratorId::Bd(s) => pullback_divisor(s, n),
        _ => unreachable!("checked"),
    }))
}

/// The inverse dictionary `G` on blow-up generators.
pub fn pushdown_generator(g: GeneratorId, n: usize) -> Result<Element> {
    g.validate(n)?;
    let full = IndexSet::full(n);
    let containing = |must: IndexSet| {
        sum_of(
            n,
            full.subsets()
                .filter(move |s| s.len() >= 2 && must.is_subset(*s))
                .map(GeneratorId::bd),
        )
    };
    Ok(match g {
        GeneratorId::A(i) => containing(IndexSet::singleton(i as usize).with(n)),
        GeneratorId::Dd(j, k) => containing(IndexSet::singleton(j as usize).with(k as usize)),
        GeneratorId::B(j, k) => {
            let d = containing(IndexSet::singleton(j as usize).with(k as usize));
            let aj = containing(IndexSet::singleton(j as usize).with(n));
            let ak = containing(IndexSet::singleton(k as usize).with(n));
            &(&d - &aj) - &ak
        }
        GeneratorId::Exc(s) => Element::generator(n, GeneratorId::bd(s.complement(n))),
        GeneratorId::Bd(_) => return Err(RingError::ForeignGenerator(g.to_string())),
    })
}

#[allow(non_snake_case)]
pub fn pushdown_G(e: &Element, n: usize) -> Result<Element> {
    if e.ambient() != n {
        return Err(RingError::AmbientMismatch {
            left: e.ambient(),
            right: n,
        });
    }
    let mut images = std::collections::BTreeMap::new();
    for (m, _) in e.terms() {
        for &(g, _) in m.factors() {
            if let std::collections::btree_map::Entry::Vacant(v) = images.entry(g) {
                v.insert(pushdown_generator(g, n)?);
            }
        }
    }
    Ok(e.substitute(n, |g| images[&g].clone()))
}

/// `psi_i` as the sum of `D_I` over `i ∈ I`, `|I| >= 2`.
pub fn psi_class(i: usize, n: usize) -> Element {
    sum_of(
        n,
        IndexSet::full(n)
            .subsets()
            .filter(|s| s.len() >= 2 && s.contains(i))
            .map(GeneratorId::bd),
    )
}

/// The genus-zero expression for `psi_i` relative to two other markings `j`, `k`.
pub fn psi_genus0(i: usize, j: usize, k: usize, n: usize) -> Result<Element> {
    if i == j || j == k || i == k || [i, j, k].iter().any(|&x| x == 0 || x > n) {
        return Err(RingError::Invalid(format!(
            "({i}, {j}, {k}) must be distinct markings in 1..={n}"
        )));
    }
    Ok(sum_of(
        n,
        IndexSet::full(n)
            .subsets()
            .filter(|s| s.len() >= 2 && s.contains(i) && !s.contains(j) && !s.contains(k))
            .map(GeneratorId::bd),
    ))
}

/// Pullback along the map forgetting marking `n_from + 1`.
pub fn forgetful_pullback(x: &Element, n_from: usize) -> Result<Element> {
    check_moduli(x, n_from)?;
    let n = n_from + 1;
    Ok(x.substitute(n, |g| match g {
        GeneratorId::Bd(s) => {
            let mut e = Element::generator(n, GeneratorId::bd(s));
            e.add_term(Monomial::generator(GeneratorId::bd(s.with(n))), Q::one());
            e
        }
        _ => unreachable!("checked"),
    }))
}

/// `F^*(x)` reduced to standard monomials, reducing after every factor.
///
/// Products of shared prefixes of the terms of `x` are computed once.
pub fn pullback_reduced(reducer: &mut Reducer, x: &Element) -> Result<Element> {
    let n = reducer.n();
    check_moduli(x, n)?;
    let mut prefixes: HashMap<Monomial, Element> = HashMap::new();
    prefixes.insert(Monomial::one(), Element::one(n));
    let mut out = Element::zero(n);
    for (m, c) in x.terms() {
        let factors: Vec<GeneratorId> = m
            .factors()
            .iter()
            .flat_map(|&(g, e)| std::iter::repeat_n(g, e as usize))
            .collect();
        let mut prefix = Monomial::one();
        let mut acc = Element::one(n);
        for g in factors {
            prefix.mul_generator(g, 1);
            if let Some(done) = prefixes.get(&prefix) {
                acc = done.clone();
                continue;
            }
            let GeneratorId::Bd(s) = g else {
                unreachable!("checked")
            };
            let key = Monomial::generator(g);
            if !prefixes.contains_key(&key) {
                let img = reducer.reduce(&pullback_divisor(s, n))?;
                prefixes.insert(key.clone(), img);
            }
            acc = reducer.reduce(&(&acc * &prefixes[&key]))?;
            prefixes.insert(prefix.clone(), acc.clone());
        }
        out.add_scaled(&acc, c);
    }
    Ok(out)
}

/// `epsilon(x)`: the blow-up socle of `F^*(x)` divided by 24.
pub fn epsilon_eval(x: &Element, n: usize) -> Result<Q> {
    epsilon_eval_with(&mut Reducer::new(n), x)
}

pub fn epsilon_eval_with(reducer: &mut Reducer, x: &Element) -> Result<Q> {
    let n = reducer.n();
    if !x.is_zero() && x.homogeneous_degree() != Some(n - 1) {
        return Err(RingError::Degree { expected: n - 1 });
    }
    let pulled = pullback_reduced(reducer, x)?;
    Ok(reducer.socle(&pulled)? / Q::from_integer(24.into()))
}
