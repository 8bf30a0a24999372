//! Laurent polynomials in `q` with arbitrary-precision rational coefficients.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// A Laurent polynomial `sum c_k q^k`, stored densely from the lowest
/// exponent `low`.
///
/// Invariant: either `coeffs` is empty (the zero polynomial, `low == 0`) or
/// both the first and last stored coefficients are nonzero.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    low: i32,
    coeffs: Vec<BigRational>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::monomial(c, 0)
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(BigRational::from_integer(BigInt::from(n)))
    }

    /// `c * q^exp`.
    pub fn monomial(c: BigRational, exp: i32) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { low: exp, coeffs: vec![c] }
    }

    /// `q^exp`.
    pub fn q_pow(exp: i32) -> Self {
        Self::monomial(BigRational::one(), exp)
    }

    /// Builds from `(exponent, coefficient)` pairs; repeated exponents add up.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i32, BigRational)>,
    {
        let terms: Vec<(i32, BigRational)> = terms.into_iter().collect();
        let Some(lo) = terms.iter().map(|t| t.0).min() else {
            return Self::zero();
        };
        let hi = terms.iter().map(|t| t.0).max().unwrap();
        let mut coeffs = vec![BigRational::zero(); (hi - lo + 1) as usize];
        for (e, c) in terms {
            coeffs[(e - lo) as usize] += c;
        }
        Self::from_raw(lo, coeffs)
    }

    fn from_raw(mut low: i32, mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        let lead = coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead == coeffs.len() {
            return Self::zero();
        }
        if lead > 0 {
            coeffs.drain(..lead);
            low += lead as i32;
        }
        Self { low, coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.low == 0 && self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// True for a single term `c * q^0`.
    pub fn is_constant(&self) -> bool {
        self.is_zero() || (self.low == 0 && self.coeffs.len() == 1)
    }

    /// True for a single term `c * q^k`.
    pub fn is_monomial(&self) -> bool {
        self.coeffs.len() == 1
    }

    /// Lowest exponent with a nonzero coefficient (0 for the zero polynomial).
    pub fn low(&self) -> i32 {
        self.low
    }

    /// Highest exponent with a nonzero coefficient.
    pub fn high(&self) -> i32 {
        self.low + self.coeffs.len() as i32 - 1
    }

    /// Number of exponent slots between lowest and highest term, minus one.
    pub fn span(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeff(&self, exp: i32) -> BigRational {
        let idx = exp - self.low;
        if idx < 0 || idx as usize >= self.coeffs.len() {
            BigRational::zero()
        } else {
            self.coeffs[idx as usize].clone()
        }
    }

    pub fn leading_coeff(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn lowest_coeff(&self) -> Option<&BigRational> {
        self.coeffs.first()
    }

    /// Nonzero terms in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i32, &BigRational)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(k, c)| (self.low + k as i32, c))
    }

    /// Multiplication by `q^k`.
    pub fn shift(&self, k: i32) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        Self { low: self.low + k, coeffs: self.coeffs.clone() }
    }

    fn shift_in_place(&mut self, k: i32) {
        if !self.is_zero() {
            self.low += k;
        }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { low: self.low, coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    /// The substitution `q -> q^{-1}`.
    pub fn bar(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        Self { low: -self.high(), coeffs }
    }

    /// True when every coefficient is an integer.
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }

    /// Exact quotient `self / d` in the Laurent ring, or `None` when `d`
    /// does not divide `self`.
    pub fn div_exact(&self, d: &LaurentPoly) -> Option<LaurentPoly> {
        assert!(!d.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Some(Self::zero());
        }
        if d.is_monomial() {
            let inv = d.coeffs[0].recip();
            return Some(self.scale(&inv).shift(-d.low));
        }
        let (quot, rem) = poly_div_rem(&self.coeffs, &d.coeffs);
        if !rem.is_empty() {
            return None;
        }
        Some(Self::from_raw(self.low - d.low, quot))
    }

    /// Monic gcd in `Q[q]` of the polynomial parts (powers of `q` are units
    /// and are ignored). The result has lowest exponent 0.
    pub fn gcd(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
        if a.is_zero() {
            return b.monic_poly_part();
        }
        if b.is_zero() {
            return a.monic_poly_part();
        }
        if a.is_monomial() || b.is_monomial() {
            return Self::one();
        }
        let mut x = a.coeffs.clone();
        let mut y = b.coeffs.clone();
        if x.len() < y.len() {
            std::mem::swap(&mut x, &mut y);
        }
        make_monic(&mut y);
        while !y.is_empty() {
            if y.len() == 1 {
                return Self::one();
            }
            let (_, mut r) = poly_div_rem(&x, &y);
            make_monic(&mut r);
            x = std::mem::replace(&mut y, r);
        }
        make_monic(&mut x);
        Self::from_raw(0, x)
    }

    fn monic_poly_part(&self) -> LaurentPoly {
        let mut c = self.coeffs.clone();
        make_monic(&mut c);
        Self::from_raw(0, c)
    }

    /// Shifts so the lowest exponent is 0; returns the shift applied.
    pub(crate) fn normalize_low(&mut self) -> i32 {
        let s = -self.low;
        self.shift_in_place(s);
        s
    }

    pub fn to_integer_coeffs(&self) -> Option<Vec<(i32, BigInt)>> {
        self.terms()
            .map(|(e, c)| c.is_integer().then(|| (e, c.to_integer())))
            .collect()
    }
}

fn make_monic(c: &mut Vec<BigRational>) {
    if let Some(lc) = c.last().cloned() {
        if !lc.is_one() {
            let inv = lc.recip();
            for x in c.iter_mut() {
                *x *= &inv;
            }
        }
    }
}

/// Dense polynomial division with remainder, coefficients ascending.
fn poly_div_rem(num: &[BigRational], den: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut rem: Vec<BigRational> = num.to_vec();
    if num.len() < den.len() {
        return (Vec::new(), rem);
    }
    let dl = den.len();
    let lc_inv = den[dl - 1].recip();
    let mut quot = vec![BigRational::zero(); num.len() - dl + 1];
    for k in (0..quot.len()).rev() {
        let c = &rem[k + dl - 1] * &lc_inv;
        if c.is_zero() {
            continue;
        }
        for (j, dj) in den.iter().enumerate() {
            if !dj.is_zero() {
                rem[k + j] -= &c * dj;
            }
        }
        quot[k] = c;
    }
    rem.truncate(dl - 1);
    while rem.last().is_some_and(Zero::is_zero) {
        rem.pop();
    }
    (quot, rem)
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let lo = self.low.min(rhs.low);
        let hi = self.high().max(rhs.high());
        let mut coeffs = vec![BigRational::zero(); (hi - lo + 1) as usize];
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs[(self.low - lo) as usize + k] += c;
        }
        for (k, c) in rhs.coeffs.iter().enumerate() {
            coeffs[(rhs.low - lo) as usize + k] += c;
        }
        LaurentPoly::from_raw(lo, coeffs)
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { low: self.low, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        if rhs.is_monomial() {
            return self.scale(&rhs.coeffs[0]).shift(rhs.low);
        }
        if self.is_monomial() {
            return rhs.scale(&self.coeffs[0]).shift(self.low);
        }
        let mut coeffs = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        LaurentPoly::from_raw(self.low + rhs.low, coeffs)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

pub(crate) fn fmt_rational_coeff(c: &BigRational, with_unit: bool) -> String {
    if c.is_integer() {
        if !with_unit && c.is_one() {
            String::new()
        } else {
            c.to_integer().to_string()
        }
    } else {
        format!("({}/{})", c.numer(), c.denom())
    }
}

impl fmt::Display for LaurentPoly {
    /// Descending exponents, e.g. `q[2] + 1 + q[-2]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let e = self.low + k as i32;
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            first = false;
            if e == 0 {
                write!(f, "{}", fmt_rational_coeff(&mag, true))?;
            } else {
                write!(f, "{}q[{}]", fmt_rational_coeff(&mag, false), e)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lp(terms: &[(i32, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(
            terms.iter().map(|&(e, c)| (e, BigRational::from_integer(BigInt::from(c)))),
        )
    }

    #[test]
    fn zero_has_empty_storage() {
        let p = lp(&[(3, 1), (3, -1)]);
        assert!(p.is_zero());
        assert_eq!(p, LaurentPoly::zero());
    }

    #[test]
    fn display_descending() {
        assert_eq!(lp(&[(-2, 1), (0, 1), (2, 1)]).to_string(), "q[2] + 1 + q[-2]");
        assert_eq!(lp(&[(1, -3), (0, 2)]).to_string(), "-3q[1] + 2");
    }

    #[test]
    fn exact_division() {
        // (q^2 - 1) = (q - 1)(q + 1)
        let a = lp(&[(2, 1), (0, -1)]);
        let b = lp(&[(1, 1), (0, 1)]);
        assert_eq!(a.div_exact(&b), Some(lp(&[(1, 1), (0, -1)])));
        assert_eq!(b.div_exact(&a), None);
        assert_eq!(a.shift(-3).div_exact(&b.shift(1)), Some(lp(&[(-3, 1), (-4, -1)])));
    }

    #[test]
    fn gcd_ignores_powers_of_q() {
        let a = &lp(&[(2, 1), (0, -1)]) * &LaurentPoly::q_pow(-5);
        let b = lp(&[(3, 1), (2, 1)]); // q^2 (q + 1)
        assert_eq!(LaurentPoly::gcd(&a, &b), lp(&[(1, 1), (0, 1)]));
    }

    #[test]
    fn bar_reverses() {
        assert_eq!(lp(&[(3, 2), (-1, 1)]).bar(), lp(&[(-3, 2), (1, 1)]));
    }
}
