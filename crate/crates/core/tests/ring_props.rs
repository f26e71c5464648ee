use num_traits::Zero;
use proptest::prelude::*;

use taut_core::blowup::admissible_sets;
use taut_core::curve::{curve_ambient, normal_form};
use taut_core::linalg::RationalMatrix;
use taut_core::ring::{parse_expression, q, Element, GeneratorId, IndexSet, Monomial, Q};

fn generators(n: usize) -> Vec<GeneratorId> {
    let mut out: Vec<GeneratorId> = (1..n).map(GeneratorId::a).collect();
    for j in 1..n {
        for k in j + 1..n {
            out.push(GeneratorId::b(j, k));
            out.push(GeneratorId::d(j, k));
        }
    }
    out.extend(admissible_sets(n).into_iter().map(GeneratorId::exc));
    out.extend(
        IndexSet::full(n)
            .subsets()
            .filter(|s| s.len() >= 2)
            .map(GeneratorId::bd),
    );
    out
}

fn element_in(n: usize) -> impl Strategy<Value = Element> {
    let gens = generators(n);
    let k = gens.len();
    prop::collection::vec(
        (
            -20i64..=20,
            1i64..=6,
            prop::collection::vec((0..k, 1u32..=3), 0..4),
        ),
        0..6,
    )
    .prop_map(move |terms| {
        let mut e = Element::zero(n);
        for (num, den, factors) in terms {
            let m = Monomial::from_factors(factors.into_iter().map(|(i, p)| (gens[i], p)));
            e.add_term(m, Q::new(num.into(), den.into()));
        }
        e
    })
}

fn element() -> impl Strategy<Value = Element> {
    (3usize..=6).prop_flat_map(element_in)
}

fn triple() -> impl Strategy<Value = (Element, Element, Element)> {
    (3usize..=5).prop_flat_map(|n| (element_in(n), element_in(n), element_in(n)))
}

proptest! {
    #[test]
    fn parse_round_trip(e in element()) {
        let back = parse_expression(&e.to_string(), e.ambient()).unwrap();
        prop_assert_eq!(back, e);
    }

    #[test]
    fn multiplication_laws((x, y, z) in triple()) {
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert!((&x - &x).is_zero());
        prop_assert_eq!(&x * &Element::one(x.ambient()), x.clone());
    }

    #[test]
    fn rank_plus_nullity(rows in 1usize..7, cols in 1usize..7, seed in prop::collection::vec(-3i64..=3, 49)) {
        let mut m = RationalMatrix::zeros(rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.set(i, j, q(seed[i * 7 + j]));
            }
        }
        let (rank, kernel) = m.rank_and_kernel();
        prop_assert_eq!(rank + kernel.len(), cols);
        prop_assert_eq!(rank, m.transpose().rank());
        for v in &kernel {
            prop_assert!(m.mul_vec(v).iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn curve_normal_form_idempotent(n in 2usize..=6, picks in prop::collection::vec((0usize..64, 1u32..=2), 1..5)) {
        let ambient = curve_ambient(n);
        let mut gens: Vec<GeneratorId> = (1..=n).map(GeneratorId::a).collect();
        for j in 1..=n {
            for k in j + 1..=n {
                gens.push(GeneratorId::b(j, k));
                gens.push(GeneratorId::d(j, k));
            }
        }
        let m = Monomial::from_factors(picks.into_iter().map(|(i, p)| (gens[i % gens.len()], p)));
        let once = normal_form(&Element::monomial(ambient, m)).unwrap();
        let twice = normal_form(&once).unwrap();
        prop_assert_eq!(once, twice);
    }
}

#[test]
fn parse_errors_are_reported() {
    for bad in [
        "a_",
        "b_{1,1}",
        "E_{1,2,3,4}",
        "a_1 +",
        "D_{1}",
        "(a_1",
        "a_9",
    ] {
        assert!(parse_expression(bad, 5).is_err(), "{bad}");
    }
}
