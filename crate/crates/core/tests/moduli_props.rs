use proptest::prelude::*;

use taut_core::blowup::oracle::free_generators;
use taut_core::blowup::{Reducer, RelationKind};
use taut_core::moduli::{
    epsilon_eval_with, forgetful_pullback, lambda_integral, psi_class, pullback_F,
    pushdown_generator,
};
use taut_core::ring::{Element, GeneratorId, IndexSet, Monomial, Q};

fn boundary(n: usize) -> Vec<GeneratorId> {
    IndexSet::full(n)
        .subsets()
        .filter(|s| s.len() >= 2)
        .map(GeneratorId::bd)
        .collect()
}

fn moduli_element(n: usize) -> impl Strategy<Value = Element> {
    let gens = boundary(n);
    let k = gens.len();
    prop::collection::vec((-9i64..=9, prop::collection::vec(0..k, 0..3)), 0..4).prop_map(
        move |terms| {
            let mut e = Element::zero(n);
            for (c, picks) in terms {
                let m = Monomial::from_factors(picks.into_iter().map(|i| (gens[i], 1)));
                e.add_term(m, Q::from_integer(c.into()));
            }
            e
        },
    )
}

fn pair() -> impl Strategy<Value = (Element, Element)> {
    (2usize..=5).prop_flat_map(|n| (moduli_element(n), moduli_element(n)))
}

proptest! {
    #[test]
    fn pullback_is_a_ring_map((x, y) in pair()) {
        let n = x.ambient();
        let f = |e: &Element| pullback_F(e, n).unwrap();
        prop_assert_eq!(f(&(&x * &y)), &f(&x) * &f(&y));
        prop_assert_eq!(f(&(&x + &y)), &f(&x) + &f(&y));
    }

    #[test]
    fn forgetful_pullback_is_a_ring_map((x, y) in pair()) {
        let n = x.ambient();
        let f = |e: &Element| forgetful_pullback(e, n).unwrap();
        prop_assert_eq!(f(&(&x * &y)), &f(&x) * &f(&y));
    }
}

#[test]
fn forgetful_pullback_support() {
    for n in 2..=5 {
        for g in boundary(n) {
            let GeneratorId::Bd(s) = g else {
                unreachable!()
            };
            let image = forgetful_pullback(&Element::generator(n, g), n).unwrap();
            let support: Vec<GeneratorId> = image.terms().map(|(m, _)| m.factors()[0].0).collect();
            assert_eq!(image.len(), 2);
            assert!(support.contains(&GeneratorId::bd(s)));
            assert!(support.contains(&GeneratorId::bd(s.with(n + 1))));
        }
    }
}

#[test]
fn pushdown_is_a_section() {
    for n in 3..=5 {
        let mut reducer = Reducer::new(n);
        for g in free_generators(n) {
            let back = pullback_F(&pushdown_generator(g, n).unwrap(), n).unwrap();
            let diff = &back - &Element::generator(n, g);
            assert!(reducer.reduce(&diff).unwrap().is_zero(), "{g} at n = {n}");
        }
    }
}

fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    if parts == 1 {
        return vec![vec![total]];
    }
    (0..=total)
        .flat_map(|first| {
            compositions(total - first, parts - 1)
                .into_iter()
                .map(move |mut rest| {
                    rest.insert(0, first);
                    rest
                })
        })
        .collect()
}

fn genus_one_value(alpha: &[usize]) -> Q {
    let fact = |k: usize| (1..=k as i64).product::<i64>();
    let total: usize = alpha.iter().sum();
    let denom: i64 = alpha.iter().map(|&a| fact(a)).product();
    Q::new((fact(total) / denom).into(), 24.into())
}

#[test]
fn epsilon_matches_lambda_integrals() {
    for n in 2..=5 {
        let mut reducer = Reducer::new(n);
        for alpha in compositions(n - 1, n) {
            let mut x = Element::one(n);
            for (i, &a) in alpha.iter().enumerate() {
                x = &x * &psi_class(i + 1, n).pow(a as u32);
            }
            let eps = epsilon_eval_with(&mut reducer, &x).unwrap();
            assert_eq!(eps, genus_one_value(&alpha), "alpha = {alpha:?}");
            assert_eq!(eps, lambda_integral(1, &alpha).unwrap());
        }
    }
}

#[test]
fn boundary_strata_of_top_degree_are_finite() {
    let mut reducer = Reducer::new(4);
    for g in boundary(4) {
        let x = Element::generator(4, g).pow(3);
        assert!(epsilon_eval_with(&mut reducer, &x).is_ok());
    }
}

#[test]
fn relation_kinds_are_all_present() {
    let kinds: std::collections::BTreeSet<RelationKind> = taut_core::blowup::relation_generators(5)
        .into_iter()
        .map(|r| r.kind)
        .collect();
    assert_eq!(kinds.len(), 7);
    assert!(kinds.contains(&RelationKind::ThreeTerm));
}
