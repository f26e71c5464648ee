//! The tautological ring of `C^n` for a pointed elliptic curve `(C, O)`.
//!
//! Elements of `R*(C^n)` are represented with ambient `n + 1` (the point `O`
//! plays the role of an extra marking), so they embed verbatim into the
//! blow-up ring. Normal forms use the rewriting rules
//!
//! ```text
//! d_{j,k} -> b_{j,k} + a_j + a_k     a_i^2 -> 0        a_i b_{i,j} -> 0
//! b_{i,j}^2 -> -2 a_i a_j            b_{i,j} b_{i,k} -> a_i b_{j,k}
//! ```
//!
//! The three-term relation among matchings is not oriented; it is handled by
//! pairing matrices.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Result, RingError};
use crate::linalg::RationalMatrix;
use crate::ring::{q, Element, GeneratorId, IndexSet, Monomial, Q};

/// Ambient used for elements of `R*(C^n)`.
pub fn curve_ambient(n: usize) -> usize {
    n + 1
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CurvePresentation {
    n: usize,
}

impl CurvePresentation {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(RingError::Invalid("C^n needs n >= 1".into()));
        }
        Ok(CurvePresentation { n })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn ambient(&self) -> usize {
        curve_ambient(self.n)
    }
}

/// `a(v) b(v)` with `A_v` a set and `B_v` a matching on a disjoint support.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StandardCurveMonomial {
    pub a: IndexSet,
    pub b: Vec<(u8, u8)>,
}

impl StandardCurveMonomial {
    pub fn new(a: IndexSet, mut b: Vec<(u8, u8)>) -> Result<Self> {
        let mut support = IndexSet::EMPTY;
        for p in b.iter_mut() {
            if p.0 > p.1 {
                *p = (p.1, p.0);
            }
            for i in [p.0 as usize, p.1 as usize] {
                if p.0 == p.1 || support.contains(i) || a.contains(i) {
                    return Err(RingError::Invalid(format!(
                        "pairs must be disjoint from each other and from A (index {i})"
                    )));
                }
                support.insert(i);
            }
        }
        b.sort_unstable();
        Ok(StandardCurveMonomial { a, b })
    }

    pub fn one() -> Self {
        StandardCurveMonomial {
            a: IndexSet::EMPTY,
            b: Vec::new(),
        }
    }

    pub fn support_b(&self) -> IndexSet {
        self.b
            .iter()
            .flat_map(|&(j, k)| [j as usize, k as usize])
            .collect()
    }

    pub fn degree(&self) -> usize {
        self.a.len() + self.b.len()
    }

    pub fn to_monomial(&self) -> Monomial {
        let mut m = Monomial::one();
        for i in self.a.iter() {
            m.mul_generator(GeneratorId::a(i), 1);
        }
        for &(j, k) in &self.b {
            m.mul_generator(GeneratorId::b(j as usize, k as usize), 1);
        }
        m
    }

    /// Reads back a monomial that is standard in the curve sense.
    pub fn from_monomial(m: &Monomial) -> Option<Self> {
        let mut a = IndexSet::EMPTY;
        let mut b = Vec::new();
        for &(g, e) in m.factors() {
            if e != 1 {
                return None;
            }
            match g {
                GeneratorId::A(i) => a.insert(i as usize),
                GeneratorId::B(j, k) => b.push((j, k)),
                _ => return None,
            }
        }
        StandardCurveMonomial::new(a, b).ok()
    }
}

/// Normal form of a single monomial in `a`, `b`, `d` generators (any indices).
pub fn normal_form_monomial(ambient: usize, m: &Monomial) -> Element {
    let mut out = Element::zero(ambient);
    nf_into(m, &Q::one(), &mut out);
    out
}

fn nf_into(m: &Monomial, coef: &Q, out: &mut Element) {
    // d_{j,k} -> b_{j,k} + a_j + a_k
    if let Some(&(g @ GeneratorId::Dd(j, k), _)) = m
        .factors()
        .iter()
        .find(|(g, _)| matches!(g, GeneratorId::Dd(..)))
    {
        let mut rest = m.clone();
        rest.div_generator(g, 1);
        for h in [GeneratorId::B(j, k), GeneratorId::A(j), GeneratorId::A(k)] {
            let mut next = rest.clone();
            next.mul_generator(h, 1);
            nf_into(&next, coef, out);
        }
        return;
    }
    let mut a = IndexSet::EMPTY;
    for &(g, e) in m.factors() {
        if let GeneratorId::A(i) = g {
            if e >= 2 {
                return;
            }
            a.insert(i as usize);
        }
    }
    let pairs: Vec<(u8, u8, u32)> = m
        .factors()
        .iter()
        .filter_map(|&(g, e)| match g {
            GeneratorId::B(j, k) => Some((j, k, e)),
            _ => None,
        })
        .collect();
    for &(j, k, _) in &pairs {
        if a.contains(j as usize) || a.contains(k as usize) {
            return;
        }
    }
    // b_{j,k}^2 -> -2 a_j a_k
    if let Some(&(j, k, _)) = pairs.iter().find(|p| p.2 >= 2) {
        let mut next = m.clone();
        next.div_generator(GeneratorId::B(j, k), 2);
        next.mul_generator(GeneratorId::A(j), 1);
        next.mul_generator(GeneratorId::A(k), 1);
        nf_into(&next, &(coef * q(-2)), out);
        return;
    }
    // b_{i,j} b_{i,k} -> a_i b_{j,k}
    for (x, &(j1, k1, _)) in pairs.iter().enumerate() {
        for &(j2, k2, _) in &pairs[x + 1..] {
            let shared = [j1, k1].into_iter().find(|i| *i == j2 || *i == k2);
            if let Some(i) = shared {
                let o1 = if j1 == i { k1 } else { j1 };
                let o2 = if j2 == i { k2 } else { j2 };
                let mut next = m.clone();
                next.div_generator(GeneratorId::B(j1, k1), 1);
                next.div_generator(GeneratorId::B(j2, k2), 1);
                next.mul_generator(GeneratorId::A(i), 1);
                next.mul_generator(GeneratorId::b(o1 as usize, o2 as usize), 1);
                nf_into(&next, coef, out);
                return;
            }
        }
    }
    out.add_term(m.clone(), coef.clone());
}

/// Normal form of an element over `a`, `b`, `d` generators with any ambient.
pub fn normal_form(e: &Element) -> Result<Element> {
    let mut out = Element::zero(e.ambient());
    for (m, c) in e.terms() {
        if let Some((g, _)) = m.factors().iter().find(|(g, _)| !g.is_curve()) {
            return Err(RingError::ForeignGenerator(g.to_string()));
        }
        nf_into(m, c, &mut out);
    }
    Ok(out)
}

fn check_curve_element(e: &Element, n: usize) -> Result<()> {
    if e.ambient() != curve_ambient(n) {
        return Err(RingError::AmbientMismatch {
            left: e.ambient(),
            right: curve_ambient(n),
        });
    }
    for (m, _) in e.terms() {
        for (g, _) in m.factors() {
            if !g.is_curve() {
                return Err(RingError::ForeignGenerator(g.to_string()));
            }
            g.validate(curve_ambient(n))?;
        }
    }
    Ok(())
}

/// Normal form in `R*(C^n)`: the result is supported on standard monomials.
pub fn curve_normal_form(e: &Element, n: usize) -> Result<Element> {
    check_curve_element(e, n)?;
    normal_form(e)
}

/// The point class `a_i` over all `i` in `s`.
pub fn point_class(s: IndexSet) -> Monomial {
    s.iter().map(GeneratorId::a).collect()
}

/// Socle value on the variables `s`: coefficient of `prod_{i in s} a_i` in the normal form.
pub fn socle_on(ambient: usize, s: IndexSet, m: &Monomial) -> Q {
    normal_form_monomial(ambient, m).coefficient(&point_class(s))
}

/// Evaluates a degree-`n` element of `R*(C^n)`, normalised by `a_1 ... a_n -> 1`.
pub fn curve_socle_eval(e: &Element, n: usize) -> Result<Q> {
    check_curve_element(e, n)?;
    if e.is_zero() {
        return Ok(Q::zero());
    }
    if e.homogeneous_degree() != Some(n) {
        return Err(RingError::Degree { expected: n });
    }
    let nf = normal_form(e)?;
    let point = point_class(IndexSet::full(n));
    debug_assert!(nf.terms().all(|(m, _)| *m == point));
    Ok(nf.coefficient(&point))
}

/// Every perfect matching of `s`, smallest element paired first.
pub fn matchings(s: IndexSet) -> Vec<Vec<(u8, u8)>> {
    let Some(first) = s.min() else {
        return vec![Vec::new()];
    };
    let rest = s.without(first);
    let mut out = Vec::new();
    for partner in rest.iter() {
        for mut tail in matchings(rest.without(partner)) {
            tail.insert(0, (first as u8, partner as u8));
            out.push(tail);
        }
    }
    out
}

/// Standard monomials of degree `d` using only the variables in `s`.
pub fn enumerate_standard_on(s: IndexSet, d: usize) -> Vec<StandardCurveMonomial> {
    let mut out = Vec::new();
    for a in s.subsets() {
        if a.len() > d {
            continue;
        }
        let pairs = d - a.len();
        let rest = s.difference(a);
        if 2 * pairs > rest.len() {
            continue;
        }
        for support in rest.subsets().filter(|t| t.len() == 2 * pairs) {
            for b in matchings(support) {
                out.push(StandardCurveMonomial { a, b });
            }
        }
    }
    out.sort_by_cached_key(StandardCurveMonomial::to_monomial);
    out
}

pub fn enumerate_standard_curve(n: usize, d: usize) -> Vec<StandardCurveMonomial> {
    if d > n {
        return Vec::new();
    }
    enumerate_standard_on(IndexSet::full(n), d)
}

/// The dual `v*`: the remaining `a_i` times the same matching.
pub fn curve_dual(v: &StandardCurveMonomial, n: usize) -> StandardCurveMonomial {
    dual_on(v, IndexSet::full(n))
}

pub fn dual_on(v: &StandardCurveMonomial, s: IndexSet) -> StandardCurveMonomial {
    StandardCurveMonomial {
        a: s.difference(v.a.union(v.support_b())),
        b: v.b.clone(),
    }
}

/// Gram matrix `(v . w)` for `v` of degree `d` and `w` of degree `n - d`.
pub fn curve_pairing_matrix(n: usize, d: usize) -> RationalMatrix {
    let ambient = curve_ambient(n);
    let rows = enumerate_standard_curve(n, d);
    let cols = enumerate_standard_curve(n, n.saturating_sub(d));
    let full = IndexSet::full(n);
    let mut m = RationalMatrix::zeros(rows.len(), cols.len());
    for (i, v) in rows.iter().enumerate() {
        let vm = v.to_monomial();
        for (j, w) in cols.iter().enumerate() {
            m.set(i, j, socle_on(ambient, full, &vm.mul(&w.to_monomial())));
        }
    }
    m
}

/// Perfect matchings on `{1..2m}` together with representation-theoretic data.
#[derive(Clone, Debug)]
pub struct TabloidSpace {
    pub m: usize,
    pub matchings: Vec<Vec<(u8, u8)>>,
    index: HashMap<Vec<(u8, u8)>, usize>,
}

impl TabloidSpace {
    pub fn new(m: usize) -> Self {
        let matchings = matchings(IndexSet::full(2 * m));
        let index = matchings
            .iter()
            .enumerate()
            .map(|(i, mt)| (mt.clone(), i))
            .collect();
        TabloidSpace {
            m,
            matchings,
            index,
        }
    }

    pub fn len(&self) -> usize {
        self.matchings.len()
    }

    pub fn is_empty(&self) -> bool {
        self.matchings.is_empty()
    }

    pub fn index_of(&self, matching: &[(u8, u8)]) -> Option<usize> {
        let mut key: Vec<(u8, u8)> = matching
            .iter()
            .map(|&(j, k)| if j < k { (j, k) } else { (k, j) })
            .collect();
        key.sort_unstable();
        self.index.get(&key).copied()
    }

    /// `(2m - 1)!!`
    pub fn double_factorial(&self) -> BigInt {
        (1..=self.m).map(|k| BigInt::from(2 * k - 1)).product()
    }

    /// Dimension of the irreducible indexed by the `m x 2` rectangle, by the hook length formula.
    pub fn rectangle_dimension(&self) -> BigInt {
        hook_length_dimension(&vec![2; self.m])
    }
}

/// Number of standard Young tableaux of shape `partition`.
pub fn hook_length_dimension(partition: &[usize]) -> BigInt {
    let total: usize = partition.iter().sum();
    let mut hooks = BigInt::one();
    for (r, &len) in partition.iter().enumerate() {
        for c in 0..len {
            let arm = len - c - 1;
            let leg = partition[r + 1..].iter().filter(|&&l| l > c).count();
            hooks *= BigInt::from(arm + leg + 1);
        }
    }
    factorial(total) / hooks
}

pub fn factorial(k: usize) -> BigInt {
    (1..=k).map(BigInt::from).product()
}

/// Intersection matrix of the pure-matching monomials of `R^m(C^{2m})`.
pub fn t_matrix(m: usize) -> RationalMatrix {
    let space = TabloidSpace::new(m);
    let n = 2 * m;
    let ambient = curve_ambient(n);
    let full = IndexSet::full(n);
    let monos: Vec<Monomial> = space
        .matchings
        .iter()
        .map(|mt| {
            StandardCurveMonomial::new(IndexSet::EMPTY, mt.clone())
                .unwrap()
                .to_monomial()
        })
        .collect();
    let mut t = RationalMatrix::zeros(space.len(), space.len());
    for (i, v) in monos.iter().enumerate() {
        for (j, w) in monos.iter().enumerate().skip(i) {
            let val = socle_on(ambient, full, &v.mul(w));
            t.set(i, j, val.clone());
            t.set(j, i, val);
        }
    }
    t
}

/// `(-1)^m (m+1)!`, the nonzero eigenvalue of [`t_matrix`].
pub fn t_eigenvalue(m: usize) -> Q {
    let f = Q::from_integer(factorial(m + 1));
    if m.is_multiple_of(2) {
        f
    } else {
        -f
    }
}

/// Coordinates of `R_{ijkl} * mu` for every 4-set and every matching `mu` of its complement.
pub fn three_term_kernel(m: usize) -> Vec<Vec<Q>> {
    if m < 2 {
        return Vec::new();
    }
    let space = TabloidSpace::new(m);
    let full = IndexSet::full(2 * m);
    let mut out = Vec::new();
    for quad in full.subsets().filter(|s| s.len() == 4) {
        let v: Vec<u8> = quad.iter().map(|x| x as u8).collect();
        let splits = [
            [(v[0], v[1]), (v[2], v[3])],
            [(v[0], v[2]), (v[1], v[3])],
            [(v[0], v[3]), (v[1], v[2])],
        ];
        for mu in matchings(full.difference(quad)) {
            let mut vec = vec![Q::zero(); space.len()];
            for split in &splits {
                let mut mt = mu.clone();
                mt.extend_from_slice(split);
                let idx = space.index_of(&mt).expect("complete matching");
                vec[idx] += Q::one();
            }
            out.push(vec);
        }
    }
    out
}
