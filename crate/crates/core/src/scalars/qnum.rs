//! Balanced q-integers, q-factorials and q-exponential coefficients.

use super::{LaurentPoly, Scalar, ScalarError};
use num_rational::BigRational;
use num_traits::One;

/// `[n]_{q^d}` for any integer `n` (with `[-n] = -[n]`) as a Laurent polynomial.
pub fn q_int_laurent(n: i64, d: i32) -> LaurentPoly {
    if n == 0 {
        return LaurentPoly::zero();
    }
    let m = n.unsigned_abs() as i64;
    // q^{d(m-1)} + q^{d(m-3)} + ... + q^{-d(m-1)}
    let terms = (0..m).map(|k| (d * (m - 1 - 2 * k) as i32, BigRational::one()));
    let p = LaurentPoly::from_terms(terms);
    if n < 0 {
        -p
    } else {
        p
    }
}

/// `[n]_{q^d}`.
pub fn q_int(n: i64, d: u32) -> Result<Scalar, ScalarError> {
    check(n, d)?;
    Ok(Scalar::from_laurent(q_int_laurent(n, d as i32)))
}

/// `[n]!_{q^d}`.
pub fn q_factorial(n: i64, d: u32) -> Result<Scalar, ScalarError> {
    check(n, d)?;
    Ok(Scalar::from_laurent(q_factorial_laurent(n as u32, d as i32)))
}

pub fn q_factorial_laurent(n: u32, d: i32) -> LaurentPoly {
    (1..=n as i64).fold(LaurentPoly::one(), |acc, k| &acc * &q_int_laurent(k, d))
}

/// Coefficient of `y^n` in `exp_x(y)` at `x = q^d`: `x^{n(n-1)/2} / [n]!_x`.
pub fn expq_coeff(n: i64, d: u32) -> Result<Scalar, ScalarError> {
    check(n, d)?;
    Ok(exp_coeff(n as u32, d as i32))
}

/// Coefficient of `y^n` in `exp_x(y)` at `x = q^s`, where `s` may be
/// negative (`[n]!_x` is invariant under `x -> x^{-1}`).
pub fn exp_coeff(n: u32, s: i32) -> Scalar {
    let n = n as i64;
    let e = s as i64 * n * (n - 1) / 2;
    let fact = q_factorial_laurent(n as u32, s.abs().max(1));
    Scalar::new(LaurentPoly::q_pow(e as i32), fact)
}

/// Gaussian binomial `[n choose k]_{q^d}` as a Laurent polynomial.
pub fn q_binomial_laurent(n: u32, k: u32, d: i32) -> LaurentPoly {
    if k > n {
        return LaurentPoly::zero();
    }
    let num = q_factorial_laurent(n, d);
    let den = &q_factorial_laurent(k, d) * &q_factorial_laurent(n - k, d);
    num.div_exact(&den).expect("q-binomial is a Laurent polynomial")
}

fn check(n: i64, d: u32) -> Result<(), ScalarError> {
    if n < 0 {
        return Err(ScalarError::NegativeArgument(n));
    }
    if d == 0 {
        return Err(ScalarError::ZeroSymmetrizer);
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(e: i32) -> Scalar {
        Scalar::q_pow(e)
    }

    #[test]
    fn q_int_examples() {
        assert!(q_int(0, 1).unwrap().is_zero());
        assert_eq!(q_int(2, 1).unwrap(), &q(1) + &q(-1));
        assert_eq!(q_int(3, 2).unwrap(), &(&q(4) + &Scalar::one()) + &q(-4));
        assert!(matches!(q_int(-1, 1), Err(ScalarError::NegativeArgument(-1))));
    }

    #[test]
    fn q_int_matches_quotient_definition() {
        // [n]_x = (x^n - x^-n)/(x - x^-1), computed by field division
        for d in 1..=3 {
            for n in 0..=7 {
                let x = d as i32;
                let quotient = &(&q(x * n) - &q(-x * n)) / &(&q(x) - &q(-x));
                assert_eq!(q_int(n as i64, d).unwrap(), quotient);
            }
        }
    }

    #[test]
    fn factorial_examples() {
        assert!(q_factorial(0, 1).unwrap().is_one());
        assert_eq!(q_factorial(2, 1).unwrap(), &q(1) + &q(-1));
        let three = &(&q(2) + &Scalar::one()) + &q(-2);
        assert_eq!(q_factorial(3, 1).unwrap(), &(&q(1) + &q(-1)) * &three);
    }

    #[test]
    fn exp_coefficient_examples() {
        assert!(expq_coeff(0, 1).unwrap().is_one());
        assert_eq!(expq_coeff(2, 1).unwrap(), &q(1) / &(&q(1) + &q(-1)));
        let expected = &q(6) / &(&(&q(2) + &q(-2)) * &(&(&q(4) + &Scalar::one()) + &q(-4)));
        assert_eq!(expq_coeff(3, 2).unwrap(), expected);
    }

    #[test]
    fn q_exponential_inverse_truncation() {
        // exp_x(y) exp_{x^-1}(-y) = 1, coefficientwise up to y^8
        for d in 1..=3 {
            for n in 0..=8u32 {
                let mut acc = Scalar::zero();
                for a in 0..=n {
                    let b = n - a;
                    let t = &exp_coeff(a, d) * &exp_coeff(b, -d);
                    acc = if b % 2 == 1 { &acc - &t } else { &acc + &t };
                }
                assert_eq!(acc.is_one(), n == 0, "n={n} d={d}");
                assert!(n == 0 || acc.is_zero());
            }
        }
    }

    #[test]
    fn q_int_is_bar_invariant() {
        for n in 0..8 {
            let x = q_int(n, 2).unwrap();
            assert_eq!(x.bar(), x);
        }
    }

    #[test]
    fn binomial_pascal() {
        // [n k] = q^{-k}[n-1 k] + q^{n-k}[n-1 k-1]
        for n in 1..7u32 {
            for k in 1..n {
                let lhs = q_binomial_laurent(n, k, 1);
                let rhs = &q_binomial_laurent(n - 1, k, 1).shift(-(k as i32))
                    + &q_binomial_laurent(n - 1, k - 1, 1).shift((n - k) as i32);
                assert_eq!(lhs, rhs);
            }
        }
    }
}
