use num_traits::Zero;
use proptest::prelude::*;

use taut_core::blowup::pairing::pairing_matrix_full;
use taut_core::blowup::{
    admissible_sets, blowup_dual, brute_force_betti, enumerate_standard_blowup, identity5_eval,
    pairing_matrix_blowup, star_compatible, Reducer, StandardBlowupMonomial,
};
use taut_core::curve::{curve_dual, enumerate_standard_curve, t_eigenvalue, t_matrix};
use taut_core::ring::{Element, GeneratorId, Monomial};

fn all_standard(n: usize) -> Vec<StandardBlowupMonomial> {
    (0..n)
        .flat_map(|d| enumerate_standard_blowup(n, d))
        .collect()
}

#[test]
fn curve_duality_is_an_involution() {
    for n in 1..=8 {
        for d in 0..=n {
            for v in enumerate_standard_curve(n, d) {
                let w = curve_dual(&v, n);
                assert_eq!(v.degree() + w.degree(), n);
                assert_eq!(curve_dual(&w, n), v);
            }
        }
    }
}

#[test]
fn blowup_duality_is_an_involution() {
    for n in 2..=6 {
        for v in all_standard(n) {
            let w = blowup_dual(&v);
            assert_eq!(v.degree() + w.degree(), n - 1, "{v}");
            assert_eq!(
                StandardBlowupMonomial::from_monomial(&w.to_monomial(), n).as_ref(),
                Ok(&w)
            );
            assert_eq!(blowup_dual(&w), v);
            let f = v.forest();
            for (r, (&(_, i), &(_, j))) in v.e.0.iter().zip(&w.e.0).enumerate() {
                assert_eq!((i + j) as usize, f.dual_exponent_sum(r));
            }
        }
    }
}

#[test]
fn star_incompatible_products_vanish() {
    for n in 2..=7 {
        let mut reducer = Reducer::new(n);
        let sets = admissible_sets(n);
        for (x, &i) in sets.iter().enumerate() {
            for &j in &sets[x + 1..] {
                if star_compatible(i, j, n) {
                    continue;
                }
                let m =
                    Monomial::from_factors([(GeneratorId::exc(i), 1), (GeneratorId::exc(j), 1)]);
                assert!(
                    reducer.reduce_monomial(&m).unwrap().is_zero(),
                    "E_{i} E_{j} at n = {n}"
                );
            }
        }
    }
}

#[test]
fn pairing_is_block_triangular_with_identity5_diagonal() {
    for n in 2..=5 {
        for d in 0..n {
            let basis = enumerate_standard_blowup(n, d);
            let full = pairing_matrix_full(n, d).unwrap();
            for (x, v) in basis.iter().enumerate() {
                for (y, u) in basis.iter().enumerate() {
                    let value = full.get(x, y);
                    if v.e < u.e {
                        assert!(value.is_zero(), "{v} . ({u})* at n = {n}");
                    } else if v.e == u.e {
                        assert_eq!(value, identity5_eval(v, &blowup_dual(u)).unwrap());
                    }
                }
            }
            let (_, betti) = pairing_matrix_blowup(n, d).unwrap();
            assert_eq!(full.rank(), betti);
        }
    }
}

#[test]
fn filtration_vanishing() {
    let mut checked = 0;
    for n in 2..=5 {
        let mut reducer = Reducer::new(n);
        let basis = all_standard(n);
        for v in &basis {
            let p = v.filtration_level();
            for w in &basis {
                let d = w.degree();
                if !w.e.much_less(&v.e) || p + d < n || v.degree() + d > n - 1 {
                    continue;
                }
                let prod = Element::monomial(n, v.to_monomial().mul(&w.to_monomial()));
                assert!(
                    reducer.reduce(&prod).unwrap().is_zero(),
                    "{v} . {w} at n = {n}"
                );
                checked += 1;
            }
        }
    }
    assert!(checked > 0);
}

#[test]
fn oracle_agrees_with_pairing() {
    for n in 2..=4 {
        for d in 0..n {
            let (_, betti) = pairing_matrix_blowup(n, d).unwrap();
            assert_eq!(brute_force_betti(n, d).unwrap(), betti, "n = {n}, d = {d}");
        }
    }
}

#[test]
fn first_betti_number() {
    for n in 2..=6usize {
        let (_, betti) = pairing_matrix_blowup(n, 1.min(n - 1)).unwrap();
        let expected = if n == 2 { 1 } else { (1 << n) - n - 1 };
        assert_eq!(betti, expected, "n = {n}");
    }
}

#[test]
fn t_matrix_squares_to_multiple() {
    for m in 1..=4 {
        let t = t_matrix(m);
        assert_eq!(t.mul(&t), t.scale(&t_eigenvalue(m)), "m = {m}");
    }
}

fn sampled_pair(n: usize) -> impl Strategy<Value = (usize, usize, usize)> {
    let sizes: Vec<usize> = (0..n)
        .map(|d| enumerate_standard_blowup(n, d).len())
        .collect();
    (0..n).prop_flat_map(move |d| {
        let rows = sizes[d];
        (Just(d), 0..rows, 0..rows)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn triangularity_sampled_at_six((d, x, y) in sampled_pair(6)) {
        let basis = enumerate_standard_blowup(6, d);
        let (v, u) = (&basis[x], &basis[y]);
        let w = blowup_dual(u);
        let value = Reducer::new(6).socle_monomial(&v.to_monomial().mul(&w.to_monomial())).unwrap();
        if v.e < u.e {
            prop_assert!(value.is_zero());
        } else if v.e == u.e {
            prop_assert_eq!(value, identity5_eval(v, &w).unwrap());
        }
    }
}
