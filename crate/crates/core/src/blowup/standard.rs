//! Standard monomials `a(v) b(v) E(v)` of the blow-up ring and their duals.

use std::cmp::Ordering;
use std::fmt;

use crate::curve::{enumerate_standard_on, StandardCurveMonomial};
use crate::error::{Result, RingError};
use crate::ring::{GeneratorId, IndexSet, Monomial};

use super::forest::{build_forest, Forest};
use super::index::{admissible_sets, star_compatible};

/// Exceptional part `prod E_{I_r}^{i_r}`, sets increasing, exponents positive.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct EPart(pub Vec<(IndexSet, u32)>);

impl EPart {
    pub fn from_monomial(m: &Monomial) -> Self {
        EPart(m.exceptional_part())
    }

    pub fn sets(&self) -> Vec<IndexSet> {
        self.0.iter().map(|&(s, _)| s).collect()
    }

    pub fn degree(&self) -> usize {
        self.0.iter().map(|&(_, e)| e as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn exponent(&self, set: IndexSet) -> u32 {
        self.0
            .iter()
            .find(|&&(s, _)| s == set)
            .map_or(0, |&(_, e)| e)
    }

    pub fn min_set(&self) -> Option<IndexSet> {
        self.0.first().map(|&(s, _)| s)
    }

    pub fn to_monomial(&self) -> Monomial {
        Monomial::from_factors(self.0.iter().map(|&(s, e)| (GeneratorId::exc(s), e)))
    }

    /// Every set of `self` is smaller than every set of `other`.
    pub fn much_less(&self, other: &EPart) -> bool {
        match (self.0.last(), other.min_set()) {
            (None, _) => true,
            (_, None) => false,
            (Some(&(a, _)), Some(b)) => a < b,
        }
    }
}

impl Ord for EPart {
    /// Exponent vectors compared lexicographically, largest set first.
    fn cmp(&self, other: &Self) -> Ordering {
        let (mut x, mut y) = (
            self.0.iter().rev().peekable(),
            other.0.iter().rev().peekable(),
        );
        loop {
            match (x.peek(), y.peek()) {
                (None, None) => return Ordering::Equal,
                (Some(_), None) => return Ordering::Greater,
                (None, Some(_)) => return Ordering::Less,
                (Some(&&(s, e)), Some(&&(t, f))) => match s.cmp(&t) {
                    Ordering::Greater => return Ordering::Greater,
                    Ordering::Less => return Ordering::Less,
                    Ordering::Equal => match e.cmp(&f) {
                        Ordering::Equal => {
                            x.next();
                            y.next();
                        }
                        o => return o,
                    },
                },
            }
        }
    }
}

impl PartialOrd for EPart {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct StandardBlowupMonomial {
    pub n: usize,
    pub curve: StandardCurveMonomial,
    pub e: EPart,
}

impl StandardBlowupMonomial {
    pub fn forest(&self) -> Forest {
        build_forest(&self.e.sets(), self.n).expect("standard monomials have valid forests")
    }

    pub fn s_set(&self) -> IndexSet {
        self.forest().s_set()
    }

    pub fn degree(&self) -> usize {
        self.curve.degree() + self.e.degree()
    }

    pub fn to_monomial(&self) -> Monomial {
        self.curve.to_monomial().mul(&self.e.to_monomial())
    }

    pub fn from_monomial(m: &Monomial, n: usize) -> Result<Self> {
        let (curve, _) = m.split_curve();
        let curve = StandardCurveMonomial::from_monomial(&curve)
            .ok_or_else(|| RingError::Invalid(format!("{m} has a non-standard curve part")))?;
        let v = StandardBlowupMonomial {
            n,
            curve,
            e: EPart::from_monomial(m),
        };
        if m.has(|g| matches!(g, GeneratorId::Dd(..) | GeneratorId::Bd(_))) || !v.check() {
            return Err(RingError::Invalid(format!(
                "{m} is not standard for n = {n}"
            )));
        }
        Ok(v)
    }

    fn check(&self) -> bool {
        let Ok(f) = build_forest(&self.e.sets(), self.n) else {
            return false;
        };
        let s = f.s_set();
        let curve_ok = self.curve.a.union(self.curve.support_b()).is_subset(s);
        curve_ok
            && self
                .e
                .0
                .iter()
                .enumerate()
                .all(|(r, &(_, e))| e >= 1 && e as usize <= f.exponent_bound(r))
    }

    /// `p(v)`; monomials without exceptional factors get their degree.
    pub fn filtration_level(&self) -> usize {
        if self.e.is_empty() {
            return self.degree();
        }
        let f = self.forest();
        let roots = f.root_sets();
        let meet = roots
            .iter()
            .fold(IndexSet::full(self.n), |acc, &s| acc.intersection(s));
        self.curve.degree() + self.n - meet.len() - roots.len()
    }
}

impl fmt::Display for StandardBlowupMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_monomial())
    }
}

/// Checks both standardness conditions for a single monomial over `a`, `b`, `E`.
pub fn is_standard(m: &Monomial, n: usize) -> bool {
    StandardBlowupMonomial::from_monomial(m, n).is_ok()
}

pub fn blowup_dual(v: &StandardBlowupMonomial) -> StandardBlowupMonomial {
    let f = v.forest();
    let t = f.s_set().difference(v.curve.a.union(v.curve.support_b()));
    let e =
        v.e.0
            .iter()
            .enumerate()
            .map(|(r, &(s, i))| (s, f.dual_exponent_sum(r) as u32 - i))
            .collect();
    StandardBlowupMonomial {
        n: v.n,
        curve: StandardCurveMonomial {
            a: t,
            b: v.curve.b.clone(),
        },
        e: EPart(e),
    }
}

pub fn filtration_level(v: &StandardBlowupMonomial) -> usize {
    v.filtration_level()
}

/// Every family of pairwise star-compatible admissible sets, together with its forest.
pub fn compatible_families(n: usize, max_len: usize) -> Vec<Forest> {
    fn grow(
        n: usize,
        max_len: usize,
        sets: &[IndexSet],
        start: usize,
        current: &mut Vec<IndexSet>,
        out: &mut Vec<Forest>,
    ) {
        out.push(build_forest(current, n).expect("compatible by construction"));
        if current.len() == max_len {
            return;
        }
        for k in start..sets.len() {
            if current.iter().all(|&c| star_compatible(c, sets[k], n)) {
                current.push(sets[k]);
                grow(n, max_len, sets, k + 1, current, out);
                current.pop();
            }
        }
    }
    let sets = admissible_sets(n);
    let mut out = Vec::new();
    grow(n, max_len, &sets, 0, &mut Vec::new(), &mut out);
    out
}

/// All exceptional parts allowed in standard monomials, of degree at most `max_degree`.
pub fn standard_e_parts(n: usize, max_degree: usize) -> Vec<(EPart, Forest)> {
    let mut out = Vec::new();
    for f in compatible_families(n, max_degree) {
        let bounds: Vec<usize> = (0..f.len()).map(|r| f.exponent_bound(r)).collect();
        if bounds.contains(&0) {
            continue;
        }
        let mut exps = vec![1u32; f.len()];
        loop {
            let deg: usize = exps.iter().map(|&e| e as usize).sum();
            if deg <= max_degree {
                let e = EPart(
                    f.vertices()
                        .iter()
                        .copied()
                        .zip(exps.iter().copied())
                        .collect(),
                );
                out.push((e, f.clone()));
            }
            let mut k = 0;
            while k < exps.len() && exps[k] as usize == bounds[k] {
                exps[k] = 1;
                k += 1;
            }
            if k == exps.len() {
                break;
            }
            exps[k] += 1;
        }
    }
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out
}

/// Standard monomials of degree `d`, ordered by exceptional part and then by curve part.
pub fn enumerate_standard_blowup(n: usize, d: usize) -> Vec<StandardBlowupMonomial> {
    if n < 2 || d >= n {
        return Vec::new();
    }
    let mut out = Vec::new();
    for (e, f) in standard_e_parts(n, d) {
        let s = f.s_set();
        for curve in enumerate_standard_on(s, d - e.degree()) {
            out.push(StandardBlowupMonomial {
                n,
                curve,
                e: e.clone(),
            });
        }
    }
    out
}
