//! Acceptance run: one PASS/FAIL line per criterion.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use num_traits::Zero;
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

use taut_core::blowup::pairing::pairing_matrix_full;
use taut_core::blowup::{
    admissible_sets, blowup_dual, brute_force_betti, enumerate_standard_blowup, identity5_eval,
    pairing_matrix_blowup, star_compatible, verify_gorenstein_with, Reducer,
    StandardBlowupMonomial,
};
use taut_core::curve::{
    curve_dual, enumerate_standard_curve, t_eigenvalue, t_matrix, three_term_kernel,
};
use taut_core::linalg::{span_rank, RationalMatrix};
use taut_core::moduli::getzler::getzler_free_slice;
use taut_core::moduli::{
    epsilon_eval_with, forgetful_pullback, lambda_integral, psi_class, pullback_F, GetzlerClasses,
};
use taut_core::ring::{parse_expression, q, Element, GeneratorId, IndexSet, Monomial, Q};

type Check = std::result::Result<(), String>;
type Criterion = (&'static str, fn() -> Check);

fn ensure(ok: bool, what: impl Into<String>) -> Check {
    if ok {
        Ok(())
    } else {
        Err(what.into())
    }
}

fn p(text: &str, n: usize) -> Element {
    parse_expression(text, n).unwrap_or_else(|e| panic!("{text}: {e}"))
}

const DELTAS: [&str; 4] = [
    "D_{1,2}*D_{3,4} + D_{1,3}*D_{2,4} + D_{1,4}*D_{2,3}",
    "D_{1,2}*D_{1,2,3} + D_{1,2}*D_{1,2,4} + D_{1,3}*D_{1,2,3} + D_{1,3}*D_{1,3,4} \
     + D_{1,4}*D_{1,2,4} + D_{1,4}*D_{1,3,4} + D_{2,3}*D_{1,2,3} + D_{2,3}*D_{2,3,4} \
     + D_{2,4}*D_{1,2,4} + D_{2,4}*D_{2,3,4} + D_{3,4}*D_{1,3,4} + D_{3,4}*D_{2,3,4}",
    "(D_{1,2} + D_{1,3} + D_{1,4} + D_{2,3} + D_{2,4} + D_{3,4})*D_{1,2,3,4}",
    "(D_{1,2,3} + D_{1,2,4} + D_{1,3,4} + D_{2,3,4})*D_{1,2,3,4}",
];

fn deltas() -> Vec<Element> {
    DELTAS.iter().map(|t| p(t, 4)).collect()
}

fn relation6(parts: &[Element]) -> Element {
    let mut out = Element::zero(parts[0].ambient());
    for (e, c) in parts.iter().zip([12, -4, -2, 6]) {
        out.add_scaled(e, &q(c));
    }
    out
}

/// Checks pulled-back classes against transcribed displays and the final relation.
fn getzler_case(n: usize, pulled: &[Element], displays: &[Element], fin: &Element) -> Check {
    let mut reducer = Reducer::new(n);
    let slice = getzler_free_slice(n);
    for (k, (got, want)) in pulled.iter().zip(displays).enumerate() {
        let diff = got - want;
        ensure(
            reducer.reduce(&diff).unwrap().is_zero(),
            format!(
                "class {k}: reduced pullback differs from display by {}",
                reducer.reduce(&diff).unwrap()
            ),
        )?;
        ensure(
            slice.contains(&diff),
            format!("class {k}: difference needs derived relations"),
        )?;
    }
    let total = relation6(pulled);
    ensure(
        reducer.reduce(&total).unwrap() == reducer.reduce(fin).unwrap(),
        "reduced relation differs from the final display",
    )?;
    ensure(
        slice.contains(&(&total - fin)),
        "relation is not the final display modulo underived relations",
    )?;
    ensure(
        !slice.contains(fin),
        "final display is already a consequence of underived relations",
    )
}

fn criterion1() -> Check {
    let ds = deltas();
    ensure(
        ds == GetzlerClasses::new().all().map(|(_, e)| e.clone()),
        "delta classes differ from the listing",
    )?;
    let pulled: Vec<Element> = ds.iter().map(|d| pullback_F(d, 4).unwrap()).collect();
    let displays = [
        "a_1*d_{2,3} + a_2*d_{1,3} + a_3*d_{1,2} + 3*E0^2",
        "3*(a_1*a_2 + a_1*a_3 + a_2*a_3 + d_{1,2}*d_{1,3}) + 3*(4*E0 + E_{1} + E_{2} + E_{3} + E_{4})*E0",
        "-3*(2*E0 + E_{1} + E_{2} + E_{3} + E_{4})*E0",
        "(E_{1} + E_{2} + E_{3} + E_{4})*E0",
    ]
    .map(|t| p(t, 4));
    let middle = p("12*(a_1*d_{2,3} + a_2*d_{1,3} + a_3*d_{1,2} - a_1*a_2 - a_1*a_3 - a_2*a_3 - d_{1,2}*d_{1,3})", 4);
    ensure(
        relation6(&displays) == middle,
        "displays do not combine to the intermediate expression",
    )?;
    getzler_case(
        4,
        &pulled,
        &displays,
        &p("12*(a_1*b_{2,3} - b_{1,2}*b_{1,3})", 4),
    )
}

fn criterion2() -> Check {
    let pulled: Vec<Element> = deltas()
        .iter()
        .map(|d| pullback_F(&forgetful_pullback(d, 4).unwrap(), 5).unwrap())
        .collect();
    let n = 5;
    let e = |s: &[usize]| {
        let set: IndexSet = s.iter().copied().collect();
        Element::generator(n, GeneratorId::exc(set))
    };
    let d = |i: usize, j: usize| Element::generator(n, GeneratorId::d(i, j));
    let e0 = e(&[]);
    let e05 = &e0 + &e(&[5]);
    let sq = &e05 * &e05;
    let mut sum_23 = Element::zero(n);
    let mut sum_24 = Element::zero(n);
    let mut sum_34 = Element::zero(n);
    let mut e0_ei = Element::zero(n);
    for i in 1..=4 {
        let ei = &e(&[i]) + &e(&[i, 5]);
        sum_23 = &sum_23 + &(&e05 * &ei);
        sum_34 = &(&sum_34 + &(&e(&[5]) * &e(&[i, 5]))) + &(&e0 * &ei);
        e0_ei = &e0_ei + &(&e0 * &e(&[i]));
        for j in i + 1..=4 {
            sum_24 = &sum_24 + &(&d(i, j) * &(&e(&[i, 5]) + &e(&[j, 5])));
        }
    }
    let dd = |a: (usize, usize), b: (usize, usize)| &d(a.0, a.1) * &d(b.0, b.1);
    let displays = [
        &(&(&dd((1, 2), (3, 4)) + &dd((1, 3), (2, 4))) + &dd((1, 4), (2, 3))) + &sq.scale(&q(3)),
        &sq.scale(&q(12))
            + &(&(&(&(&dd((1, 2), (1, 3)) + &dd((1, 2), (1, 4))) + &dd((1, 3), (1, 4)))
                + &dd((2, 3), (2, 4)))
                + &sum_23)
                .scale(&q(3)),
        &(&sq.scale(&q(-6)) - &sum_24) - &e0_ei.scale(&q(3)),
        sum_34,
    ];
    let fin = p(
        "12*(b_{1,2}*b_{3,4} + b_{1,3}*b_{2,4} + b_{1,4}*b_{2,3})",
        5,
    );
    getzler_case(5, &pulled, &displays, &fin)
}

fn criterion3() -> Check {
    ensure(
        t_matrix(2) == RationalMatrix::from_i64(&[&[4, -2, -2], &[-2, 4, -2], &[-2, -2, 4]]),
        "t_matrix(2) differs from the printed matrix",
    )?;
    for (m, catalan) in [(2usize, 2usize), (3, 5), (4, 14)] {
        let t = t_matrix(m);
        let fact: i64 = (1..=(m as i64 + 1)).product();
        let lambda = if m % 2 == 0 { q(fact) } else { q(-fact) };
        ensure(
            lambda == t_eigenvalue(m),
            format!("eigenvalue formula at m = {m}"),
        )?;
        ensure(
            t.mul(&t) == t.scale(&lambda),
            format!("T^2 != lambda T at m = {m}"),
        )?;
        let (rank, kernel) = t.rank_and_kernel();
        ensure(
            rank == catalan,
            format!("rank {rank} != {catalan} at m = {m}"),
        )?;
        let relations = three_term_kernel(m);
        for r in &relations {
            ensure(
                t.mul_vec(r).iter().all(Zero::is_zero),
                format!("three-term vector not in kernel at m = {m}"),
            )?;
        }
        let joint: Vec<Vec<Q>> = kernel.iter().chain(&relations).cloned().collect();
        ensure(
            span_rank(&relations) == kernel.len() && span_rank(&joint) == kernel.len(),
            format!("kernel is not spanned by three-term vectors at m = {m}"),
        )?;
    }
    Ok(())
}

fn criterion4() -> Check {
    let first = [(3usize, 4usize), (4, 11), (5, 26), (6, 57)];
    for n in 2..=6usize {
        let report = verify_gorenstein_with(n, true).map_err(|e| e.to_string())?;
        let dims = report.dims();
        ensure(
            report.symmetric(),
            format!("n = {n}: dims {dims:?} not symmetric"),
        )?;
        ensure(
            report.socle_one(),
            format!("n = {n}: dims {dims:?} ends not 1"),
        )?;
        ensure(
            report.perfect(),
            format!("n = {n}: a pairing is degenerate"),
        )?;
        ensure(
            report.degrees.iter().all(|d| d.full.is_some()),
            format!("n = {n}: full check missing"),
        )?;
        if let Some(&(_, r1)) = first.iter().find(|&&(m, _)| m == n) {
            ensure(
                dims[1] == r1,
                format!("n = {n}: dim R^1 = {} != {r1}", dims[1]),
            )?;
            ensure(r1 == (1 << n) - n - 1, "closed form")?;
        }
        println!("    n = {n}: dims {dims:?}");
    }
    Ok(())
}

fn criterion5() -> Check {
    for n in 3..=5 {
        for d in 0..n {
            let (_, betti) = pairing_matrix_blowup(n, d).map_err(|e| e.to_string())?;
            let oracle = brute_force_betti(n, d).map_err(|e| e.to_string())?;
            ensure(
                betti == oracle,
                format!("n = {n}, d = {d}: pairing {betti}, oracle {oracle}"),
            )?;
        }
    }
    Ok(())
}

fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    if parts == 1 {
        return vec![vec![total]];
    }
    let mut out = Vec::new();
    for first in 0..=total {
        for mut rest in compositions(total - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

fn criterion6() -> Check {
    let r = |a: i64, b: i64| Q::new(a.into(), b.into());
    ensure(
        lambda_integral(1, &[0]).unwrap() == r(1, 24),
        "lambda_integral(1, (0))",
    )?;
    ensure(
        lambda_integral(2, &[2]).unwrap() == r(7, 5760),
        "lambda_integral(2, (2))",
    )?;
    let mut red3 = Reducer::new(3);
    ensure(
        epsilon_eval_with(&mut red3, &p("psi_1^2", 3)).unwrap() == r(1, 24),
        "eps(psi_1^2)",
    )?;
    ensure(
        epsilon_eval_with(&mut red3, &p("psi_1*psi_2", 3)).unwrap() == r(2, 24),
        "eps(psi_1 psi_2)",
    )?;
    for n in 2..=5 {
        let mut reducer = Reducer::new(n);
        for alpha in compositions(n - 1, n) {
            let mut x = Element::one(n);
            for (i, &a) in alpha.iter().enumerate() {
                x = &x * &psi_class(i + 1, n).pow(a as u32);
            }
            let eps = epsilon_eval_with(&mut reducer, &x).map_err(|e| e.to_string())?;
            let lam = lambda_integral(1, &alpha).unwrap();
            ensure(
                eps == lam,
                format!("n = {n}, alpha = {alpha:?}: {eps} != {lam}"),
            )?;
        }
    }
    Ok(())
}

fn random_element(n: usize) -> impl Strategy<Value = Element> {
    let mut gens: Vec<GeneratorId> = (1..n).map(GeneratorId::a).collect();
    for j in 1..n {
        for k in j + 1..n {
            gens.push(GeneratorId::b(j, k));
            gens.push(GeneratorId::d(j, k));
        }
    }
    gens.extend(admissible_sets(n).into_iter().map(GeneratorId::exc));
    gens.extend(
        IndexSet::full(n)
            .subsets()
            .filter(|s| s.len() >= 2)
            .map(GeneratorId::bd),
    );
    let k = gens.len();
    prop::collection::vec(
        (
            -50i64..=50,
            1i64..=9,
            prop::collection::vec((0..k, 1u32..=4), 0..5),
        ),
        0..8,
    )
    .prop_map(move |terms| {
        let mut e = Element::zero(n);
        for (a, b, fs) in terms {
            e.add_term(
                Monomial::from_factors(fs.into_iter().map(|(i, x)| (gens[i], x))),
                Q::new(a.into(), b.into()),
            );
        }
        e
    })
}

fn criterion7() -> Check {
    for n in 1..=8 {
        for d in 0..=n {
            for v in enumerate_standard_curve(n, d) {
                let w = curve_dual(&v, n);
                ensure(
                    v.degree() + w.degree() == n && curve_dual(&w, n) == v,
                    format!("curve dual of {v:?}"),
                )?;
            }
        }
    }
    for n in 2..=6 {
        for d in 0..n {
            for v in enumerate_standard_blowup(n, d) {
                let w = blowup_dual(&v);
                ensure(
                    blowup_dual(&w) == v && w.degree() == n - 1 - d,
                    format!("blow-up dual of {v}"),
                )?;
                ensure(
                    StandardBlowupMonomial::from_monomial(&w.to_monomial(), n).is_ok(),
                    format!("dual of {v} is not standard"),
                )?;
            }
        }
    }
    for n in 2..=5 {
        let mut reducer = Reducer::new(n);
        let all: Vec<StandardBlowupMonomial> = (0..n)
            .flat_map(|d| enumerate_standard_blowup(n, d))
            .collect();
        for d in 0..n {
            let basis = enumerate_standard_blowup(n, d);
            let full = pairing_matrix_full(n, d).map_err(|e| e.to_string())?;
            for (x, v) in basis.iter().enumerate() {
                for (y, u) in basis.iter().enumerate() {
                    let value = full.get(x, y);
                    if v.e < u.e {
                        ensure(
                            value.is_zero(),
                            format!("triangularity: {v} . ({u})* = {value}"),
                        )?;
                    } else if v.e == u.e {
                        ensure(
                            value == identity5_eval(v, &blowup_dual(u)).unwrap(),
                            format!("diagonal entry {v}, {u}"),
                        )?;
                    }
                }
            }
        }
        for v in &all {
            for w in &all {
                let deg = w.degree();
                if w.e.much_less(&v.e) && v.filtration_level() + deg >= n && v.degree() + deg < n {
                    let prod = Element::monomial(n, v.to_monomial().mul(&w.to_monomial()));
                    ensure(
                        reducer.reduce(&prod).unwrap().is_zero(),
                        format!("filtration: {v} . {w}"),
                    )?;
                }
            }
        }
    }
    for n in 2..=7 {
        let mut reducer = Reducer::new(n);
        let sets = admissible_sets(n);
        for (x, &i) in sets.iter().enumerate() {
            for &j in &sets[x + 1..] {
                if !star_compatible(i, j, n) {
                    let m = Monomial::from_factors([
                        (GeneratorId::exc(i), 1),
                        (GeneratorId::exc(j), 1),
                    ]);
                    ensure(
                        reducer.reduce_monomial(&m).unwrap().is_zero(),
                        format!("star: E_{i} E_{j}, n = {n}"),
                    )?;
                }
            }
        }
    }
    let mut runner = TestRunner::new(Config {
        cases: 512,
        failure_persistence: None,
        ..Config::default()
    });
    runner
        .run(&(2usize..=7).prop_flat_map(random_element), |e| {
            let back = parse_expression(&e.to_string(), e.ambient()).expect("printed form parses");
            prop_assert_eq!(back, e);
            Ok(())
        })
        .map_err(|e| format!("parser round trip: {e}"))
}

fn main() {
    let criteria: [Criterion; 7] = [
        ("Getzler relation at four points", criterion1),
        ("Getzler relation pulled back to five points", criterion2),
        ("matching matrix T_m", criterion3),
        ("Gorenstein pairing for n = 2..6", criterion4),
        ("oracle Betti numbers for n = 3..5", criterion5),
        ("lambda integrals and epsilon", criterion6),
        ("property suites", criterion7),
    ];
    let mut failed = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|panic| {
            let msg = panic
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| panic.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(()) => println!("criterion {} ({name}): PASS [{secs:.1}s]", k + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {} ({name}): FAIL [{secs:.1}s] {why}", k + 1);
            }
        }
    }
    if failed > 0 {
        println!("{failed} criterion(s) failed");
        std::process::exit(1);
    }
}
