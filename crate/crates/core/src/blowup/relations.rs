//! Generators of the relation ideal of the blow-up ring.

use num_traits::One;

use crate::ring::{q, Element, GeneratorId, IndexSet, Monomial, Q};

use super::index::{admissible_sets, is_admissible, star_compatible};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RelationKind {
    /// `a_i^2`, `a_i b_{i,j}`, `b_{i,j}^2 + 2 a_i a_j`.
    CurveBasic,
    /// `b_{i,j} b_{i,k} - a_i b_{j,k}`.
    CurveDerived,
    /// `b_{i,j} b_{k,l} + b_{i,k} b_{j,l} + b_{i,l} b_{j,k}`.
    ThreeTerm,
    /// `E_I E_J` for incompatible pairs.
    Star,
    /// Degree-one kernel of restriction to `X_I`, times `E_I`.
    Kernel,
    /// Restriction rules of `a`, `b` against `E_I` with `n ∈ I`.
    LemmaD,
    /// Chern polynomial relations, transversal ones included.
    Chern,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub kind: RelationKind,
    pub element: Element,
}

/// The defining divisors `x_i = O` or `x_j = x_k` of `X_I` inside `C^{n-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CenterPresentation {
    pub set: IndexSet,
    pub factors: Vec<GeneratorId>,
}

impl CenterPresentation {
    pub fn new(set: IndexSet, n: usize) -> Self {
        CenterPresentation {
            set,
            factors: splitting_divisors(set, &[], n),
        }
    }

    pub fn codimension(&self) -> usize {
        self.factors.len()
    }
}

/// Divisors `W` with `X_{base} = X_{J_1} ∩ ... ∩ X_{J_k} ∩ W` transversally, for `J_i` in `over`.
///
/// The complement of `base` splits into units: the complements of the `J_i`
/// and the remaining singletons. `W` makes all units collide.
pub fn splitting_divisors(base: IndexSet, over: &[IndexSet], n: usize) -> Vec<GeneratorId> {
    let comp = base.complement(n);
    let mut units: Vec<IndexSet> = over.iter().map(|j| j.complement(n)).collect();
    let covered = units.iter().fold(IndexSet::EMPTY, |acc, &u| acc.union(u));
    units.extend(comp.difference(covered).iter().map(IndexSet::singleton));
    let reps: Vec<usize> = units
        .iter()
        .filter(|u| !u.contains(n))
        .map(|u| IndexSet::min(*u).expect("nonempty unit"))
        .collect();
    if reps.len() < units.len() {
        let mut out: Vec<GeneratorId> = reps.into_iter().map(GeneratorId::a).collect();
        out.sort();
        out
    } else {
        let hub = *reps.iter().min().expect("at least one unit");
        let mut out: Vec<GeneratorId> = reps
            .into_iter()
            .filter(|&r| r != hub)
            .map(|r| GeneratorId::d(hub, r))
            .collect();
        out.sort();
        out
    }
}

/// `sum_{K ⊆ I, K admissible} E_K`.
pub fn exceptional_sum(set: IndexSet, n: usize) -> Element {
    let mut out = Element::zero(n);
    for k in set.subsets().filter(|&k| is_admissible(k, n)) {
        out.add_term(Monomial::generator(GeneratorId::exc(k)), Q::one());
    }
    out
}

/// `prod_{J in over} E_J * prod_k (D_k - sum_{K ⊆ base} E_K)`.
pub fn chern_relation(base: IndexSet, over: &[IndexSet], n: usize) -> Element {
    let sum = exceptional_sum(base, n);
    let mut out = Element::monomial(n, over.iter().map(|&j| GeneratorId::exc(j)).collect());
    for g in splitting_divisors(base, over, n) {
        let factor = &Element::generator(n, g) - &sum;
        out = &out * &factor;
    }
    out
}

/// Antichains of admissible strict supersets of `base` with pairwise union `{1..n}`.
pub fn transversal_families(base: IndexSet, n: usize) -> Vec<Vec<IndexSet>> {
    let full = IndexSet::full(n);
    let candidates: Vec<IndexSet> = admissible_sets(n)
        .into_iter()
        .filter(|&j| base.is_strict_subset(j))
        .collect();
    fn grow(
        c: &[IndexSet],
        full: IndexSet,
        start: usize,
        cur: &mut Vec<IndexSet>,
        out: &mut Vec<Vec<IndexSet>>,
    ) {
        out.push(cur.clone());
        for k in start..c.len() {
            if cur.iter().all(|&j| j.union(c[k]) == full) {
                cur.push(c[k]);
                grow(c, full, k + 1, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    grow(&candidates, full, 0, &mut Vec::new(), &mut out);
    out
}

fn gen(n: usize, g: GeneratorId) -> Element {
    Element::generator(n, g)
}

fn exc(n: usize, s: IndexSet) -> Element {
    gen(n, GeneratorId::exc(s))
}

fn curve_relations(n: usize, out: &mut Vec<Relation>) {
    let m = n - 1;
    let a = |i| gen(n, GeneratorId::a(i));
    let b = |j, k| gen(n, GeneratorId::b(j, k));
    let mut push = |kind, element: Element| out.push(Relation { kind, element });
    for i in 1..=m {
        push(RelationKind::CurveBasic, &a(i) * &a(i));
        for j in (1..=m).filter(|&j| j != i) {
            push(RelationKind::CurveBasic, &a(i) * &b(i, j));
            if i < j {
                push(
                    RelationKind::CurveBasic,
                    &(&b(i, j) * &b(i, j)) + &(&a(i) * &a(j)).scale(&q(2)),
                );
            }
            for k in (j + 1..=m).filter(|&k| k != i) {
                push(
                    RelationKind::CurveDerived,
                    &(&b(i, j) * &b(i, k)) - &(&a(i) * &b(j, k)),
                );
            }
        }
    }
    for quad in IndexSet::full(m).subsets().filter(|s| s.len() == 4) {
        let v: Vec<usize> = quad.iter().collect();
        let r = &(&(&b(v[0], v[1]) * &b(v[2], v[3])) + &(&b(v[0], v[2]) * &b(v[1], v[3])))
            + &(&b(v[0], v[3]) * &b(v[1], v[2]));
        push(RelationKind::ThreeTerm, r);
    }
}

/// Degree-one classes restricting to zero on `X_I`.
pub fn kernel_generators(set: IndexSet, n: usize) -> Vec<Element> {
    let comp = set.complement(n);
    let a = |i| gen(n, GeneratorId::a(i));
    let b = |j, k| gen(n, GeneratorId::b(j, k));
    let mut out = Vec::new();
    if !set.contains(n) {
        for i in comp.without(n).iter() {
            out.push(a(i));
            for j in (1..n).filter(|&j| j != i) {
                out.push(b(i, j));
            }
        }
    } else {
        let c: Vec<usize> = comp.iter().collect();
        for (x, &j) in c.iter().enumerate() {
            for &k in &c[x + 1..] {
                out.push(&a(j) - &a(k));
            }
            for &k in c.iter().filter(|&&k| k != j) {
                out.push(&b(j, k) + &a(j).scale(&q(2)));
            }
        }
        for k in set.without(n).iter() {
            for (x, &i) in c.iter().enumerate() {
                for &i2 in &c[x + 1..] {
                    out.push(&b(i, k) - &b(i2, k));
                }
            }
        }
    }
    out
}

fn lemma_d(set: IndexSet, n: usize, out: &mut Vec<Relation>) {
    if !set.contains(n) {
        return;
    }
    let e = exc(n, set);
    let comp = set.complement(n);
    let a = |i| gen(n, GeneratorId::a(i));
    let b = |j, k| gen(n, GeneratorId::b(j, k));
    let mut push = |element: Element| {
        out.push(Relation {
            kind: RelationKind::LemmaD,
            element,
        })
    };
    for j in comp.iter() {
        for k in comp.iter().filter(|&k| k != j) {
            push(&(&a(j) - &a(k)) * &e);
            push(&(&b(j, k) + &a(j).scale(&q(2))) * &e);
        }
    }
    for i in set.without(n).iter() {
        let sum = exceptional_sum(set.without(i), n);
        for k in comp.iter() {
            let rhs = &(&sum - &a(i)) - &a(k);
            push(&(&b(i, k) - &rhs) * &e);
        }
    }
}

/// All relation generators used by the oracle, in a fixed order.
pub fn relation_generators(n: usize) -> Vec<Relation> {
    let mut out = Vec::new();
    if n < 2 {
        return out;
    }
    curve_relations(n, &mut out);
    let sets = admissible_sets(n);
    for (x, &i) in sets.iter().enumerate() {
        for &j in &sets[x + 1..] {
            if !star_compatible(i, j, n) {
                out.push(Relation {
                    kind: RelationKind::Star,
                    element: &exc(n, i) * &exc(n, j),
                });
            }
        }
    }
    for &i in &sets {
        for k in kernel_generators(i, n) {
            out.push(Relation {
                kind: RelationKind::Kernel,
                element: &k * &exc(n, i),
            });
        }
        lemma_d(i, n, &mut out);
    }
    for &i in &sets {
        for h in transversal_families(i, n) {
            out.push(Relation {
                kind: RelationKind::Chern,
                element: chern_relation(i, &h, n),
            });
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::parse_expression;

    fn has(rels: &[Relation], text: &str, n: usize) -> bool {
        let e = parse_expression(text, n).unwrap();
        rels.iter().any(|r| r.element == e || r.element == -&e)
    }

    #[test]
    fn six_point_examples() {
        let rels = relation_generators(6);
        assert!(has(&rels, "a_1*E0", 6));
        assert!(has(&rels, "b_{1,2}*E0", 6));
        assert!(has(&rels, "(a_1 - E0)*E_{1}", 6));
        assert!(has(
            &rels,
            "(a_1-E0)*(a_2-E0)*(a_3-E0)*(a_4-E0)*(a_5-E0)",
            6
        ));
    }

    #[test]
    fn center_presentations() {
        let c = CenterPresentation::new(IndexSet::EMPTY, 4);
        assert_eq!(
            c.factors,
            vec![GeneratorId::a(1), GeneratorId::a(2), GeneratorId::a(3)]
        );
        let s: IndexSet = [1, 5].into_iter().collect();
        let c = CenterPresentation::new(s, 5);
        assert_eq!(c.factors, vec![GeneratorId::d(2, 3), GeneratorId::d(2, 4)]);
        assert_eq!(c.codimension(), 2);
    }

    #[test]
    fn relations_are_homogeneous() {
        for n in 3..=5 {
            for r in relation_generators(n) {
                assert!(r.element.homogeneous_degree().is_some(), "{:?}", r);
            }
        }
    }
}
