//! Index sets of the blow-up centres `X_I`.

use crate::ring::IndexSet;

/// The total order on index sets: size first, then the smaller first differing element.
pub fn subset_less(i: IndexSet, j: IndexSet) -> bool {
    i < j
}

/// `I ⊆ J`, `J ⊆ I` or `I ∪ J = {1..n}`.
pub fn star_compatible(i: IndexSet, j: IndexSet, n: usize) -> bool {
    i.is_subset(j) || j.is_subset(i) || i.union(j) == IndexSet::full(n)
}

/// `E_I` exists on `U_{n-1}`.
pub fn is_admissible(i: IndexSet, n: usize) -> bool {
    i.is_subset(IndexSet::full(n)) && i.len() + 3 <= n
}

/// All admissible index sets in increasing order.
pub fn admissible_sets(n: usize) -> Vec<IndexSet> {
    let mut out: Vec<IndexSet> = IndexSet::full(n)
        .subsets()
        .filter(|s| s.len() + 3 <= n)
        .collect();
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(items: &[usize]) -> IndexSet {
        items.iter().copied().collect()
    }

    #[test]
    fn order_examples() {
        assert!(subset_less(s(&[1, 3]), s(&[1, 2, 4])));
        assert!(subset_less(s(&[1, 3]), s(&[1, 4])));
        assert!(!subset_less(s(&[2]), s(&[2])));
    }

    #[test]
    fn star_examples() {
        assert!(star_compatible(s(&[1, 2]), s(&[1, 2, 3]), 6));
        assert!(star_compatible(s(&[1, 2, 3]), s(&[4, 5, 6]), 6));
        assert!(!star_compatible(s(&[1, 2]), s(&[4, 5, 6]), 6));
    }

    #[test]
    fn admissible_counts() {
        assert_eq!(admissible_sets(3), vec![IndexSet::EMPTY]);
        assert_eq!(admissible_sets(4).len(), 5);
        assert_eq!(admissible_sets(6).len(), 1 + 6 + 15 + 20);
        assert!(admissible_sets(2).is_empty());
    }
}
