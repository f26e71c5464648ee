use std::cmp::Ordering;
use std::fmt;

use crate::error::{Result, RingError};

/// Largest marking count supported by the bitmask representation.
pub const MAX_AMBIENT: usize = 31;

/// A subset of `{1..n}` stored as a bitmask (bit `i - 1` marks element `i`).
///
/// The ordering is the one used for exceptional index sets: smaller sets come
/// first, and among sets of equal size the one owning the smallest element of
/// the symmetric difference is smaller.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct IndexSet(u32);

impl IndexSet {
    pub const EMPTY: IndexSet = IndexSet(0);

    pub fn from_bits(bits: u32) -> Self {
        IndexSet(bits)
    }

    pub fn bits(self) -> u32 {
        self.0
    }

    /// All of `{1..n}`.
    pub fn full(n: usize) -> Self {
        if n >= 32 {
            IndexSet(u32::MAX)
        } else {
            IndexSet((1u32 << n) - 1)
        }
    }

    pub fn singleton(i: usize) -> Self {
        debug_assert!((1..=32).contains(&i));
        IndexSet(1 << (i - 1))
    }

    pub fn contains(self, i: usize) -> bool {
        (1..=32).contains(&i) && self.0 & (1 << (i - 1)) != 0
    }

    pub fn insert(&mut self, i: usize) {
        self.0 |= 1 << (i - 1);
    }

    pub fn remove(&mut self, i: usize) {
        self.0 &= !(1 << (i - 1));
    }

    pub fn with(mut self, i: usize) -> Self {
        self.insert(i);
        self
    }

    pub fn without(mut self, i: usize) -> Self {
        self.remove(i);
        self
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn union(self, other: Self) -> Self {
        IndexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        IndexSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        IndexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_strict_subset(self, other: Self) -> bool {
        self.is_subset(other) && self != other
    }

    pub fn complement(self, n: usize) -> Self {
        IndexSet::full(n).difference(self)
    }

    pub fn min(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize + 1)
        }
    }

    pub fn max(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(32 - self.0.leading_zeros() as usize)
        }
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        let bits = self.0;
        (0..32).filter(move |b| bits & (1 << b) != 0).map(|b| b + 1)
    }

    /// All subsets of this set, in increasing bitmask order.
    pub fn subsets(self) -> impl Iterator<Item = IndexSet> {
        let full = self.0;
        let mut next = Some(0u32);
        std::iter::from_fn(move || {
            let cur = next?;
            next = if cur == full {
                None
            } else {
                Some((cur.wrapping_sub(full)) & full)
            };
            Some(IndexSet(cur))
        })
    }
}

impl FromIterator<usize> for IndexSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        let mut s = IndexSet::EMPTY;
        for i in iter {
            s.insert(i);
        }
        s
    }
}

impl Ord for IndexSet {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.len().cmp(&other.len()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        let sym = self.0 ^ other.0;
        if sym == 0 {
            Ordering::Equal
        } else if self.0 & (sym & sym.wrapping_neg()) != 0 {
            Ordering::Less
        } else {
            Ordering::Greater
        }
    }
}

impl PartialOrd for IndexSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, i) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// A degree-one generator.
///
/// `A`, `B` and `Dd` index points of `C^{n-1}` (indices `1..n-1`, where `n` is
/// the number of markings); `Exc(I)` is an exceptional divisor `E_I` and
/// `Bd(I)` a boundary divisor `D_I` of the moduli space.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GeneratorId {
    A(u8),
    B(u8, u8),
    Dd(u8, u8),
    Exc(IndexSet),
    Bd(IndexSet),
}

fn pair(j: usize, k: usize) -> (u8, u8) {
    if j < k {
        (j as u8, k as u8)
    } else {
        (k as u8, j as u8)
    }
}

impl GeneratorId {
    /// `a_i`, unchecked.
    pub fn a(i: usize) -> Self {
        GeneratorId::A(i as u8)
    }

    /// `b_{j,k}` with the pair stored in canonical order, unchecked.
    pub fn b(j: usize, k: usize) -> Self {
        debug_assert_ne!(j, k);
        let (j, k) = pair(j, k);
        GeneratorId::B(j, k)
    }

    pub fn d(j: usize, k: usize) -> Self {
        debug_assert_ne!(j, k);
        let (j, k) = pair(j, k);
        GeneratorId::Dd(j, k)
    }

    pub fn exc(set: IndexSet) -> Self {
        GeneratorId::Exc(set)
    }

    pub fn bd(set: IndexSet) -> Self {
        GeneratorId::Bd(set)
    }

    /// Checks index bounds against `n` markings.
    pub fn validate(&self, n: usize) -> Result<()> {
        let ok = match *self {
            GeneratorId::A(i) => (1..n).contains(&(i as usize)),
            GeneratorId::B(j, k) | GeneratorId::Dd(j, k) => j >= 1 && j < k && (k as usize) < n,
            GeneratorId::Exc(s) => s.is_subset(IndexSet::full(n)) && s.len() + 3 <= n,
            GeneratorId::Bd(s) => s.is_subset(IndexSet::full(n)) && s.len() >= 2,
        };
        if ok && n <= MAX_AMBIENT {
            Ok(())
        } else {
            Err(RingError::IndexOutOfRange {
                generator: self.to_string(),
                n,
            })
        }
    }

    pub fn is_curve(&self) -> bool {
        matches!(
            self,
            GeneratorId::A(_) | GeneratorId::B(..) | GeneratorId::Dd(..)
        )
    }
}

impl fmt::Display for GeneratorId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            GeneratorId::A(i) => write!(f, "a_{i}"),
            GeneratorId::B(j, k) => write!(f, "b_{{{j},{k}}}"),
            GeneratorId::Dd(j, k) => write!(f, "d_{{{j},{k}}}"),
            GeneratorId::Exc(s) if s.is_empty() => write!(f, "E0"),
            GeneratorId::Exc(s) => write!(f, "E_{s}"),
            GeneratorId::Bd(s) => write!(f, "D_{s}"),
        }
    }
}

impl fmt::Debug for GeneratorId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
