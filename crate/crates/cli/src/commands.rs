use std::fmt::Write as _;

use serde_json::{json, Value};

use taut_core::blowup::oracle::ORACLE_MAX_N;
use taut_core::blowup::{
    blowup_dual, brute_force_betti, enumerate_standard_blowup, pairing_matrix_blowup,
    pairing_matrix_full, verify_gorenstein_with, Reducer,
};
use taut_core::curve::{
    curve_ambient, curve_normal_form, curve_socle_eval, t_eigenvalue, t_matrix, three_term_kernel,
};
use taut_core::linalg::span_rank;
use taut_core::moduli::{
    epsilon_eval_with, lambda_integral, psi_class, pullback_reduced, verify_getzler_pullbacks,
};
use taut_core::ring::{parse_expression, Element, Q};
use taut_core::RingError;

use crate::{Format, Ring, Suite};

pub const SCHEMA: &str = "taut-ring/1";

pub enum Failure {
    Usage(String),
    Math(String),
}

impl From<RingError> for Failure {
    fn from(e: RingError) -> Self {
        match e {
            RingError::NonTermination(_) | RingError::Pattern(_) => Failure::Math(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

pub struct Outcome {
    pub ok: bool,
    pub text: String,
    pub json: Value,
    pub csv: String,
}

impl Outcome {
    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.text.clone(),
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.json).expect("serialisable");
                s.push('\n');
                s
            }
            Format::Csv => self.csv.clone(),
        }
    }
}

fn verdict(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

fn yes(ok: bool) -> &'static str {
    if ok {
        "yes"
    } else {
        "NO"
    }
}

fn check_n(n: usize, max_n: usize) -> Result<(), Failure> {
    if n < 2 || n > max_n {
        return Err(usage(format!("n = {n} must lie in 2..={max_n}")));
    }
    Ok(())
}

pub fn betti(n: usize, max_n: usize, slow: bool) -> Result<Outcome, Failure> {
    check_n(n, max_n)?;
    let report = verify_gorenstein_with(n, slow)?;
    let dims = report.dims();
    let ok = report.passed();
    let mut text = format!("dim R^d(M_(1,{n})^ct)\n  d  dim\n");
    let mut csv = String::from("degree,dim\n");
    for (d, dim) in dims.iter().enumerate() {
        let mark = if *dim == dims[n - 1 - d] {
            ""
        } else {
            "  (asymmetric)"
        };
        writeln!(text, "{d:>3}  {dim}{mark}").unwrap();
        writeln!(csv, "{d},{dim}").unwrap();
    }
    writeln!(text, "symmetric: {}", yes(report.symmetric())).unwrap();
    writeln!(text, "socle one-dimensional: {}", yes(report.socle_one())).unwrap();
    writeln!(text, "pairings perfect: {}", yes(report.perfect())).unwrap();
    writeln!(text, "Gorenstein: {}", verdict(ok)).unwrap();
    Ok(Outcome {
        ok,
        text,
        json: json!({ "schema": SCHEMA, "n": n, "dims": dims, "gorenstein": ok }),
        csv,
    })
}

pub fn pairing(n: usize, degree: usize, max_n: usize, slow: bool) -> Result<Outcome, Failure> {
    check_n(n, max_n)?;
    if degree >= n {
        return Err(usage(format!("degree {degree} must lie in 0..={}", n - 1)));
    }
    let basis = enumerate_standard_blowup(n, degree);
    let matrix = if slow {
        pairing_matrix_full(n, degree)?
    } else {
        pairing_matrix_blowup(n, degree)?.0
    };
    let rank = matrix.rank();
    let rows: Vec<String> = basis.iter().map(|v| v.to_string()).collect();
    let cols: Vec<String> = basis.iter().map(|v| blowup_dual(v).to_string()).collect();
    let entries: Vec<Vec<String>> = (0..basis.len())
        .map(|i| {
            (0..basis.len())
                .map(|j| matrix.get(i, j).to_string())
                .collect()
        })
        .collect();
    let ok = rank == basis.len();
    let mut text = format!(
        "pairing R^{degree} x R^{} at n = {n}: {} standard monomials, rank {rank}{}\n",
        n - 1 - degree,
        basis.len(),
        if slow {
            " (all entries reduced)"
        } else {
            " (diagonal blocks)"
        }
    );
    for (label, row) in rows.iter().zip(&entries) {
        writeln!(text, "{label:>24} | {}", row.join(" ")).unwrap();
    }
    writeln!(text, "full rank: {}", verdict(ok)).unwrap();
    let mut csv = format!("row,{}\n", cols.join(","));
    for (label, row) in rows.iter().zip(&entries) {
        writeln!(csv, "{label},{}", row.join(",")).unwrap();
    }
    Ok(Outcome {
        ok,
        text,
        json: json!({
            "schema": SCHEMA, "n": n, "degree": degree, "rows": rows, "columns": cols,
            "matrix": entries, "rank": rank, "full_rank": ok,
        }),
        csv,
    })
}

struct Section {
    name: &'static str,
    ok: bool,
    lines: Vec<String>,
    json: Value,
}

fn gorenstein_suite(max: usize, slow: bool) -> Result<Section, Failure> {
    let mut lines = Vec::new();
    let mut cases = Vec::new();
    let mut ok = true;
    for n in 2..=max {
        let r = verify_gorenstein_with(n, slow)?;
        let dims = r.dims();
        let first = if n >= 3 {
            dims[1] == (1 << n) - n - 1
        } else {
            true
        };
        let pass = r.passed() && first;
        ok &= pass;
        lines.push(format!(
            "n = {n}: dims {dims:?} symmetric {} socle {} perfect {} R^1 {} -> {}",
            yes(r.symmetric()),
            yes(r.socle_one()),
            yes(r.perfect()),
            yes(first),
            verdict(pass)
        ));
        cases.push(json!({ "n": n, "dims": dims, "passed": pass }));
    }
    Ok(Section {
        name: "gorenstein",
        ok,
        lines,
        json: json!({ "cases": cases, "full_matrices": slow }),
    })
}

fn getzler_suite() -> Result<Section, Failure> {
    let r = verify_getzler_pullbacks()?;
    let mut lines = Vec::new();
    for d in &r.displays {
        lines.push(format!(
            "n = {}: F^*({}) = {} : reduced {} underived {} -> {}",
            d.n,
            d.label,
            d.expected,
            yes(d.ring_equal),
            yes(d.equal_without_getzler),
            verdict(d.passed())
        ));
    }
    for f in &r.finals {
        lines.push(format!(
            "n = {}: relation {} = 0 : matches {} nontrivial {} pairs to zero {} -> {}",
            f.n,
            f.expected,
            yes(f.matches),
            yes(f.nontrivial),
            yes(f.pairs_to_zero),
            verdict(f.passed())
        ));
    }
    let finals: Vec<Value> = r
        .finals
        .iter()
        .map(|f| json!({ "n": f.n, "relation": f.expected.to_string(), "passed": f.passed() }))
        .collect();
    Ok(Section {
        name: "getzler",
        ok: r.passed(),
        lines,
        json: json!({ "finals": finals }),
    })
}

fn oracle_suite(ns: &[usize]) -> Result<Section, Failure> {
    let mut lines = Vec::new();
    let mut cases = Vec::new();
    let mut ok = true;
    for &n in ns {
        let mut pairing = Vec::new();
        let mut oracle = Vec::new();
        for d in 0..n {
            pairing.push(pairing_matrix_blowup(n, d)?.1);
            oracle.push(brute_force_betti(n, d)?);
        }
        let pass = pairing == oracle;
        ok &= pass;
        lines.push(format!(
            "n = {n}: pairing dims {pairing:?} oracle dims {oracle:?} -> {}",
            verdict(pass)
        ));
        cases.push(json!({ "n": n, "pairing": pairing, "oracle": oracle, "passed": pass }));
    }
    Ok(Section {
        name: "oracle",
        ok,
        lines,
        json: json!({ "cases": cases }),
    })
}

fn catalan(m: usize) -> usize {
    (0..m).fold(1usize, |c, k| c * 2 * (2 * k + 1) / (k + 2))
}

fn tmatrix_suite(ms: &[usize]) -> Section {
    let mut lines = Vec::new();
    let mut cases = Vec::new();
    let mut ok = true;
    for &m in ms {
        let t = t_matrix(m);
        let lambda = t_eigenvalue(m);
        let square = t.mul(&t) == t.scale(&lambda);
        let (rank, kernel) = t.rank_and_kernel();
        let relations = three_term_kernel(m);
        let joint: Vec<Vec<Q>> = kernel.iter().chain(&relations).cloned().collect();
        let spanned = span_rank(&relations) == kernel.len() && span_rank(&joint) == kernel.len();
        let pass = square && rank == catalan(m) && spanned;
        ok &= pass;
        lines.push(format!(
            "m = {m}: {0}x{0}, T^2 = {lambda}*T {1}, rank {rank} (Catalan {2}), kernel spanned by three-term relations {3} -> {4}",
            t.rows(),
            yes(square),
            catalan(m),
            yes(spanned),
            verdict(pass)
        ));
        cases.push(json!({
            "m": m, "size": t.rows(), "eigenvalue": lambda.to_string(), "rank": rank, "passed": pass,
        }));
    }
    Section {
        name: "tmatrix",
        ok,
        lines,
        json: json!({ "cases": cases }),
    }
}

pub fn verify(
    suite: Suite,
    n: Option<usize>,
    m: Option<usize>,
    slow: bool,
) -> Result<Outcome, Failure> {
    let oracle_cap = if slow { ORACLE_MAX_N } else { ORACLE_MAX_N - 1 };
    let t_cap = if slow { 5 } else { 4 };
    let oracle_n = |n: usize| -> Result<usize, Failure> {
        if !(2..=oracle_cap).contains(&n) {
            return Err(usage(format!(
                "oracle n = {n} must lie in 2..={oracle_cap}{}",
                if slow { "" } else { " (use --slow for n = 5)" }
            )));
        }
        Ok(n)
    };
    let t_m = |m: usize| -> Result<usize, Failure> {
        if !(1..=t_cap).contains(&m) {
            return Err(usage(format!("m = {m} must lie in 1..={t_cap}")));
        }
        Ok(m)
    };
    let sections = match suite {
        Suite::Gorenstein => {
            let max = n.unwrap_or(5);
            check_n(max, 7)?;
            vec![gorenstein_suite(max, slow)?]
        }
        Suite::Getzler => vec![getzler_suite()?],
        Suite::Oracle => vec![oracle_suite(&[oracle_n(n.unwrap_or(4))?])?],
        Suite::Tmatrix => vec![tmatrix_suite(&[t_m(m.unwrap_or(3))?])],
        Suite::All => {
            let oracle_ns: Vec<usize> = (3..=oracle_cap).collect();
            vec![
                gorenstein_suite(if slow { 6 } else { 5 }, slow)?,
                getzler_suite()?,
                oracle_suite(&oracle_ns)?,
                tmatrix_suite(&[2, 3, 4]),
            ]
        }
    };
    let ok = sections.iter().all(|s| s.ok);
    let mut text = String::new();
    let mut csv = String::from("suite,detail,result\n");
    let mut json_sections = serde_json::Map::new();
    for s in &sections {
        writeln!(text, "[{}] {}", s.name, verdict(s.ok)).unwrap();
        for line in &s.lines {
            writeln!(text, "  {line}").unwrap();
            let result = if line.ends_with("PASS") {
                "PASS"
            } else {
                "FAIL"
            };
            writeln!(csv, "{},\"{}\",{result}", s.name, line.replace('"', "'")).unwrap();
        }
        let mut v = s.json.clone();
        v["passed"] = json!(s.ok);
        json_sections.insert(s.name.to_string(), v);
    }
    writeln!(text, "{}", verdict(ok)).unwrap();
    Ok(Outcome {
        ok,
        text,
        json: json!({ "schema": SCHEMA, "passed": ok, "suites": json_sections }),
        csv,
    })
}

pub fn reduce(
    ring: Ring,
    n: usize,
    expr: &str,
    eval: bool,
    pullback: bool,
) -> Result<Outcome, Failure> {
    if n < 2 && ring != Ring::Curve || n < 1 {
        return Err(usage(format!("n = {n} is too small")));
    }
    if pullback && ring != Ring::Moduli {
        return Err(usage("--pullback applies to --ring moduli"));
    }
    let (result, value): (Element, Option<Q>) = match ring {
        Ring::Curve => {
            let e = parse_expression(expr, curve_ambient(n))?;
            let nf = curve_normal_form(&e, n)?;
            let value = if eval {
                Some(curve_socle_eval(&e, n)?)
            } else {
                None
            };
            (nf, value)
        }
        Ring::Blowup => {
            let e = parse_expression(expr, n)?;
            let mut reducer = Reducer::new(n);
            let r = reducer.reduce(&e)?;
            let value = if eval { Some(reducer.socle(&r)?) } else { None };
            (r, value)
        }
        Ring::Moduli => {
            let x = parse_expression(expr, n)?;
            let mut reducer = Reducer::new(n);
            let r = if pullback {
                pullback_reduced(&mut reducer, &x)?
            } else {
                x.validate()?;
                x.clone()
            };
            let value = if eval {
                Some(epsilon_eval_with(&mut reducer, &x)?)
            } else {
                None
            };
            (r, value)
        }
    };
    let mut text = format!("{result}\n");
    if let Some(v) = &value {
        writeln!(text, "value: {v}").unwrap();
    }
    let mut csv = String::from("monomial,coefficient\n");
    for (m, c) in result.terms() {
        writeln!(csv, "{m},{c}").unwrap();
    }
    let ring_name = match ring {
        Ring::Curve => "curve",
        Ring::Blowup => "blowup",
        Ring::Moduli => "moduli",
    };
    Ok(Outcome {
        ok: true,
        text,
        json: json!({
            "schema": SCHEMA, "ring": ring_name, "n": n, "input": expr,
            "result": result.to_string(), "value": value.map(|v| v.to_string()),
        }),
        csv,
    })
}

pub fn integral(g: usize, alpha: &[usize]) -> Result<Outcome, Failure> {
    let value = lambda_integral(g, alpha)?;
    let n = alpha.len();
    let epsilon = if g == 1 && (2..=5).contains(&n) {
        let mut x = Element::one(n);
        for (i, &a) in alpha.iter().enumerate() {
            x = &x * &psi_class(i + 1, n).pow(a as u32);
        }
        Some(epsilon_eval_with(&mut Reducer::new(n), &x)?)
    } else {
        None
    };
    let ok = epsilon.as_ref().is_none_or(|e| *e == value);
    let mut text = format!("lambda_integral({g}, {alpha:?}) = {value}\n");
    if let Some(e) = &epsilon {
        writeln!(text, "epsilon(psi^alpha) = {e} -> {}", verdict(ok)).unwrap();
    }
    let alpha_text: Vec<String> = alpha.iter().map(|a| a.to_string()).collect();
    let csv = format!(
        "g,alpha,value,epsilon\n{g},{},{value},{}\n",
        alpha_text.join(" "),
        epsilon.as_ref().map_or(String::new(), |e| e.to_string())
    );
    Ok(Outcome {
        ok,
        text,
        json: json!({
            "schema": SCHEMA, "g": g, "alpha": alpha, "value": value.to_string(),
            "epsilon": epsilon.map(|e| e.to_string()), "passed": ok,
        }),
        csv,
    })
}
