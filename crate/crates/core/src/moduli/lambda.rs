//! Hodge integrals `∫ psi^alpha lambda_g` through the Bernoulli closed form.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::curve::factorial;
use crate::error::{Result, RingError};
use crate::ring::Q;

/// `B_m` with `B_1 = -1/2`, from `sum_{k=0}^{m} C(m+1, k) B_k = 0`.
pub fn bernoulli(m: usize) -> Q {
    let mut b: Vec<Q> = vec![Q::one()];
    for k in 1..=m {
        let mut acc = Q::zero();
        let mut binom = BigInt::one();
        for (j, bj) in b.iter().enumerate() {
            acc += Q::from_integer(binom.clone()) * bj;
            binom = binom * BigInt::from(k + 1 - j) / BigInt::from(j + 1);
        }
        b.push(-acc / Q::from_integer(BigInt::from(k + 1)));
    }
    b.pop().expect("nonempty")
}

pub fn multinomial(parts: &[usize]) -> BigInt {
    let total: usize = parts.iter().sum();
    parts
        .iter()
        .fold(factorial(total), |acc, &p| acc / factorial(p))
}

/// `C(2g-3+n; alpha) (2^{2g-1}-1)/2^{2g-1} |B_{2g}|/(2g)!`.
pub fn lambda_integral(g: usize, alphas: &[usize]) -> Result<Q> {
    let n = alphas.len();
    if g == 0 || n == 0 {
        return Err(RingError::Invalid(
            "need g >= 1 and at least one marking".into(),
        ));
    }
    let dim = 2 * g + n - 3;
    let total: usize = alphas.iter().sum();
    if total != dim {
        return Err(RingError::Invalid(format!(
            "exponents sum to {total}, dimension is {dim}"
        )));
    }
    let pow = BigInt::one() << (2 * g - 1);
    let weight = Q::new(&pow - BigInt::one(), pow);
    let b = bernoulli(2 * g).abs() / Q::from_integer(factorial(2 * g));
    Ok(Q::from_integer(multinomial(alphas)) * weight * b)
}
