//! Intersection pairing `R^d x R^{n-1-d} -> Q` on standard monomials.

use num_traits::Zero;
use rayon::prelude::*;

use crate::curve::curve_socle_eval;
use crate::error::{Result, RingError};
use crate::linalg::RationalMatrix;
use crate::ring::{Element, GeneratorId, Q};

use super::reduce::Reducer;
use super::standard::{blowup_dual, enumerate_standard_blowup, EPart, StandardBlowupMonomial};

/// Diagonal-block entry `v . w` for `w` with the complementary exponent pattern of `v`.
pub fn identity5_eval(v: &StandardBlowupMonomial, w: &StandardBlowupMonomial) -> Result<Q> {
    let n = v.n;
    if w.n != n || v.e.sets() != w.e.sets() {
        return Err(RingError::Pattern(format!(
            "{v} and {w} have different exceptional sets"
        )));
    }
    let forest = v.forest();
    for (r, (&(_, i), &(_, j))) in v.e.0.iter().zip(&w.e.0).enumerate() {
        if (i + j) as usize != forest.dual_exponent_sum(r) {
            return Err(RingError::Pattern(format!(
                "exponents of E_{} in {v} and {w} are not complementary",
                forest.vertex(r)
            )));
        }
    }
    let s = forest.s_set();
    let f = v.curve.to_monomial().mul(&w.curve.to_monomial());
    let used = v
        .curve
        .a
        .union(v.curve.support_b())
        .union(w.curve.a)
        .union(w.curve.support_b());
    if !used.is_subset(s) {
        return Err(RingError::Pattern(format!("{f} leaves the variables {s}")));
    }
    if f.degree() != s.len() {
        return Err(RingError::Pattern(format!(
            "{f} does not have degree |{s}|"
        )));
    }
    let mut point = f;
    for i in (1..n).filter(|&i| !s.contains(i)) {
        point.mul_generator(GeneratorId::a(i), 1);
    }
    let value = curve_socle_eval(&Element::monomial(n, point), n - 1)?;
    let eps = n + forest.intersection().len() + forest.total_degree();
    Ok(if eps.is_multiple_of(2) { value } else { -value })
}

/// Runs of equal exceptional part in an enumeration sorted by exceptional part.
pub fn e_blocks(basis: &[StandardBlowupMonomial]) -> Vec<(EPart, std::ops::Range<usize>)> {
    let mut out: Vec<(EPart, std::ops::Range<usize>)> = Vec::new();
    for (k, v) in basis.iter().enumerate() {
        match out.last_mut() {
            Some((e, range)) if *e == v.e => range.end = k + 1,
            _ => out.push((v.e.clone(), k..k + 1)),
        }
    }
    out
}

fn block_matrix(
    basis: &[StandardBlowupMonomial],
    range: std::ops::Range<usize>,
) -> Result<RationalMatrix> {
    let len = range.len();
    let mut m = RationalMatrix::zeros(len, len);
    for (x, v) in basis[range.clone()].iter().enumerate() {
        for (y, u) in basis[range.clone()].iter().enumerate() {
            m.set(x, y, identity5_eval(v, &blowup_dual(u))?);
        }
    }
    Ok(m)
}

/// Block-diagonal pairing matrix `(v_i . v_j^*)` and the Betti number it certifies.
///
/// Entries between different exceptional parts are left at zero: above the
/// diagonal they vanish, below it they do not affect the rank.
pub fn pairing_matrix_blowup(n: usize, d: usize) -> Result<(RationalMatrix, usize)> {
    let basis = enumerate_standard_blowup(n, d);
    let blocks = e_blocks(&basis);
    let mats: Vec<RationalMatrix> = blocks
        .par_iter()
        .map(|(_, r)| block_matrix(&basis, r.clone()))
        .collect::<Result<_>>()?;
    let mut m = RationalMatrix::zeros(basis.len(), basis.len());
    let mut betti = 0;
    for ((_, r), b) in blocks.iter().zip(&mats) {
        for (x, y, v) in b.nonzeros() {
            m.set(r.start + x, r.start + y, v.clone());
        }
        betti += b.rank();
    }
    Ok((m, betti))
}

/// Every entry `v_i . v_j^*` computed by reduction.
pub fn pairing_matrix_full(n: usize, d: usize) -> Result<RationalMatrix> {
    let basis = enumerate_standard_blowup(n, d);
    let duals: Vec<_> = basis.iter().map(|u| blowup_dual(u).to_monomial()).collect();
    let rows: Vec<Vec<Q>> = basis
        .par_iter()
        .map_init(
            || Reducer::new(n),
            |red, v| {
                let vm = v.to_monomial();
                duals
                    .iter()
                    .map(|w| red.socle_monomial(&vm.mul(w)))
                    .collect::<Result<Vec<Q>>>()
            },
        )
        .collect::<Result<_>>()?;
    Ok(RationalMatrix::from_dense(&rows))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeReport {
    pub degree: usize,
    pub standard_monomials: usize,
    pub betti: usize,
    pub blocks: usize,
    /// Set when the full matrix was computed.
    pub full: Option<FullCheck>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FullCheck {
    pub rank: usize,
    pub triangular: bool,
    pub diagonal_blocks_match: bool,
}

impl FullCheck {
    pub fn passed(&self, betti: usize) -> bool {
        self.rank == betti && self.triangular && self.diagonal_blocks_match
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairingReport {
    pub n: usize,
    pub degrees: Vec<DegreeReport>,
}

impl PairingReport {
    pub fn dims(&self) -> Vec<usize> {
        self.degrees.iter().map(|d| d.betti).collect()
    }

    pub fn symmetric(&self) -> bool {
        let d = self.dims();
        d.iter().eq(d.iter().rev())
    }

    pub fn socle_one(&self) -> bool {
        let d = self.dims();
        d.first() == Some(&1) && d.last() == Some(&1)
    }

    /// Each pairing matrix is square of size `dim R^d` on a basis.
    pub fn perfect(&self) -> bool {
        let d = self.dims();
        self.degrees.iter().all(|r| {
            r.full.as_ref().is_none_or(|f| f.passed(r.betti)) && r.betti == d[self.n - 1 - r.degree]
        })
    }

    pub fn passed(&self) -> bool {
        self.symmetric() && self.socle_one() && self.perfect()
    }
}

fn full_check(n: usize, d: usize) -> Result<FullCheck> {
    let basis = enumerate_standard_blowup(n, d);
    let full = pairing_matrix_full(n, d)?;
    let (blockwise, _) = pairing_matrix_blowup(n, d)?;
    let blocks = e_blocks(&basis);
    let mut triangular = true;
    let mut diagonal = true;
    for (bi, (_, ri)) in blocks.iter().enumerate() {
        for (bj, (_, rj)) in blocks.iter().enumerate() {
            for x in ri.clone() {
                for y in rj.clone() {
                    let v = full.get(x, y);
                    if bi < bj && !v.is_zero() {
                        triangular = false;
                    }
                    if bi == bj && v != blockwise.get(x, y) {
                        diagonal = false;
                    }
                }
            }
        }
    }
    Ok(FullCheck {
        rank: full.rank(),
        triangular,
        diagonal_blocks_match: diagonal,
    })
}

/// Betti numbers and pairing checks in every degree; `full` also reduces every matrix entry.
pub fn verify_gorenstein_with(n: usize, full: bool) -> Result<PairingReport> {
    if n < 2 {
        return Err(RingError::Invalid(format!("n = {n} must be at least 2")));
    }
    let degrees = (0..n)
        .into_par_iter()
        .map(|d| {
            let basis = enumerate_standard_blowup(n, d);
            let (_, betti) = pairing_matrix_blowup(n, d)?;
            Ok(DegreeReport {
                degree: d,
                standard_monomials: basis.len(),
                betti,
                blocks: e_blocks(&basis).len(),
                full: if full { Some(full_check(n, d)?) } else { None },
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(PairingReport { n, degrees })
}

pub fn verify_gorenstein(n: usize) -> Result<PairingReport> {
    verify_gorenstein_with(n, false)
}
