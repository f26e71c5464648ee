//! The forest of an exceptional monomial: vertices are its index sets, edges
//! go to minimal strict supersets.

use crate::error::{Result, RingError};
use crate::ring::IndexSet;

use super::index::star_compatible;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Forest {
    n: usize,
    vertices: Vec<IndexSet>,
    children: Vec<Vec<usize>>,
    roots: Vec<usize>,
}

pub fn build_forest(indices: &[IndexSet], n: usize) -> Result<Forest> {
    let mut vertices = indices.to_vec();
    vertices.sort();
    vertices.dedup();
    for (x, &i) in vertices.iter().enumerate() {
        if i.len() + 3 > n || !i.is_subset(IndexSet::full(n)) {
            return Err(RingError::Invalid(format!(
                "E_{i} is not admissible for n = {n}"
            )));
        }
        for &j in &vertices[x + 1..] {
            if !star_compatible(i, j, n) {
                return Err(RingError::StarViolation(i.to_string(), j.to_string()));
            }
        }
    }
    let m = vertices.len();
    let mut children = vec![Vec::new(); m];
    let mut roots = Vec::new();
    for r in 0..m {
        let sup: Vec<usize> = (0..m)
            .filter(|&s| vertices[r].is_strict_subset(vertices[s]))
            .collect();
        for &s in &sup {
            if !sup
                .iter()
                .any(|&t| vertices[t].is_strict_subset(vertices[s]))
            {
                children[r].push(s);
            }
        }
        if !(0..m).any(|s| vertices[s].is_strict_subset(vertices[r])) {
            roots.push(r);
        }
    }
    Ok(Forest {
        n,
        vertices,
        children,
        roots,
    })
}

impl Forest {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Vertices in increasing order.
    pub fn vertices(&self) -> &[IndexSet] {
        &self.vertices
    }

    pub fn vertex(&self, r: usize) -> IndexSet {
        self.vertices[r]
    }

    pub fn position(&self, set: IndexSet) -> Option<usize> {
        self.vertices.binary_search(&set).ok()
    }

    pub fn children(&self, r: usize) -> &[usize] {
        &self.children[r]
    }

    pub fn deg(&self, r: usize) -> usize {
        self.children[r].len()
    }

    pub fn roots(&self) -> &[usize] {
        &self.roots
    }

    pub fn root_sets(&self) -> Vec<IndexSet> {
        self.roots.iter().map(|&r| self.vertices[r]).collect()
    }

    /// Vertices whose set contains that of `r`, including `r`.
    pub fn closure(&self, r: usize) -> Vec<usize> {
        (0..self.len())
            .filter(|&s| self.vertices[r].is_subset(self.vertices[s]))
            .collect()
    }

    pub fn is_external(&self, r: usize) -> bool {
        self.children[r].is_empty()
    }

    pub fn is_internal(&self, r: usize) -> bool {
        !self.is_external(r)
    }

    /// Intersection of the strict supersets of `r` (of its children, equivalently).
    pub fn upper_intersection(&self, r: usize) -> IndexSet {
        self.children[r]
            .iter()
            .fold(IndexSet::full(self.n), |acc, &s| {
                acc.intersection(self.vertices[s])
            })
    }

    /// The largest exponent `E_{I_r}` may carry in a standard monomial.
    pub fn exponent_bound(&self, r: usize) -> usize {
        let i = self.vertices[r].len();
        let external = (self.n - 2).saturating_sub(i);
        if self.is_external(r) {
            external
        } else {
            let internal = (self.upper_intersection(r).len() + self.deg(r)).saturating_sub(i + 2);
            internal.min(external)
        }
    }

    /// `i_r + j_r` for a standard monomial and its dual.
    pub fn dual_exponent_sum(&self, r: usize) -> usize {
        self.exponent_bound(r) + 1
    }

    /// Intersection of all vertices (of all roots, equivalently).
    pub fn intersection(&self) -> IndexSet {
        self.vertices
            .iter()
            .fold(IndexSet::full(self.n), |acc, &s| acc.intersection(s))
    }

    /// The root not containing `n`, if any.
    pub fn root_without_n(&self) -> Option<usize> {
        self.roots
            .iter()
            .copied()
            .find(|&r| !self.vertices[r].contains(self.n))
    }

    /// The variables surviving on the intersection of the roots.
    pub fn s_set(&self) -> IndexSet {
        let n = self.n;
        if self.is_empty() {
            return IndexSet::full(n - 1);
        }
        let mut s = self.intersection().without(n);
        for &r in &self.roots {
            let set = self.vertices[r];
            if set.contains(n) {
                s.insert(set.complement(n).min().expect("proper subset"));
            }
        }
        s
    }

    pub fn total_degree(&self) -> usize {
        self.children.iter().map(Vec::len).sum()
    }
}
