//! Elements of the rational function field `Q(q)` in canonical form.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use super::LaurentPoly;

/// A reduced rational function `num / den` in one variable `q`.
///
/// Canonical form: `den` has lowest exponent 0 and leading coefficient 1,
/// and `num`, `den` are coprime in `Q[q]`. Two scalars are equal iff their
/// fields are identical, so derived `Eq`/`Hash` are sound.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Scalar {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl Default for Scalar {
    fn default() -> Self {
        Self::zero()
    }
}

impl Scalar {
    pub fn zero() -> Self {
        Self { num: LaurentPoly::zero(), den: LaurentPoly::one() }
    }

    pub fn one() -> Self {
        Self { num: LaurentPoly::one(), den: LaurentPoly::one() }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_laurent(LaurentPoly::from_int(n))
    }

    pub fn from_rational(r: BigRational) -> Self {
        Self::from_laurent(LaurentPoly::constant(r))
    }

    pub fn from_laurent(num: LaurentPoly) -> Self {
        Self { num, den: LaurentPoly::one() }
    }

    /// `q^e`.
    pub fn q_pow(e: i32) -> Self {
        Self::from_laurent(LaurentPoly::q_pow(e))
    }

    /// `sign * q^e` with `sign = +-1`.
    pub fn signed_q_pow(negative: bool, e: i32) -> Self {
        let s = Self::q_pow(e);
        if negative {
            -s
        } else {
            s
        }
    }

    /// Builds `num / den`, reducing to canonical form.
    ///
    /// # Panics
    /// If `den` is zero.
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        normalize(num, den)
    }

    pub fn numer(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denom(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the value lies in `Q[q, q^{-1}]`.
    pub fn is_laurent(&self) -> bool {
        self.den.is_one()
    }

    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(normalize(self.den.clone(), self.num.clone()))
    }

    /// Integer power; negative exponents invert.
    ///
    /// # Panics
    /// On a negative power of zero.
    pub fn pow(&self, e: i32) -> Scalar {
        let base = if e < 0 { self.inv().expect("negative power of zero") } else { self.clone() };
        let mut acc = Scalar::one();
        let mut b = base;
        let mut n = e.unsigned_abs();
        while n > 0 {
            if n & 1 == 1 {
                acc = &acc * &b;
            }
            n >>= 1;
            if n > 0 {
                b = &b * &b;
            }
        }
        acc
    }

    /// The bar involution `q -> q^{-1}`.
    pub fn bar(&self) -> Scalar {
        Scalar::new(self.num.bar(), self.den.bar())
    }

    /// Multiplication by `q^k`.
    pub fn shift(&self, k: i32) -> Scalar {
        Scalar { num: self.num.shift(k), den: self.den.clone() }
    }

    pub fn scale_int(&self, n: i64) -> Scalar {
        if n == 0 {
            return Scalar::zero();
        }
        let r = BigRational::from_integer(BigInt::from(n));
        Scalar { num: self.num.scale(&r), den: self.den.clone() }
    }
}

fn normalize(mut num: LaurentPoly, mut den: LaurentPoly) -> Scalar {
    if num.is_zero() {
        return Scalar::zero();
    }
    let s = den.normalize_low();
    num = num.shift(s);
    if den.is_constant() {
        let c = den.lowest_coeff().unwrap().clone();
        if !c.is_one() {
            num = num.scale(&c.recip());
        }
        return Scalar { num, den: LaurentPoly::one() };
    }
    let g = LaurentPoly::gcd(&num, &den);
    if !g.is_one() {
        num = num.div_exact(&g).expect("gcd divides numerator");
        den = den.div_exact(&g).expect("gcd divides denominator");
    }
    let lc = den.leading_coeff().unwrap().clone();
    if !lc.is_one() {
        let inv = lc.recip();
        num = num.scale(&inv);
        den = den.scale(&inv);
    }
    Scalar { num, den }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl From<LaurentPoly> for Scalar {
    fn from(p: LaurentPoly) -> Self {
        Scalar::from_laurent(p)
    }
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            if self.den.is_one() {
                return Scalar::from_laurent(&self.num + &rhs.num);
            }
            return normalize(&self.num + &rhs.num, self.den.clone());
        }
        if rhs.den.is_one() {
            return Scalar { num: &self.num + &(&rhs.num * &self.den), den: self.den.clone() };
        }
        if self.den.is_one() {
            return Scalar { num: &(&self.num * &rhs.den) + &rhs.num, den: rhs.den.clone() };
        }
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        normalize(num, &self.den * &rhs.den)
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        self + &(-rhs)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { num: -&self.num, den: self.den.clone() }
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        if self.is_zero() || rhs.is_zero() {
            return Scalar::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return Scalar::from_laurent(&self.num * &rhs.num);
        }
        if rhs.num.is_monomial() && rhs.den.is_one() {
            return Scalar { num: &self.num * &rhs.num, den: self.den.clone() };
        }
        if self.num.is_monomial() && self.den.is_one() {
            return Scalar { num: &self.num * &rhs.num, den: rhs.den.clone() };
        }
        // cross-cancel before multiplying to keep degrees small
        let g1 = LaurentPoly::gcd(&self.num, &rhs.den);
        let g2 = LaurentPoly::gcd(&rhs.num, &self.den);
        let (a, d) = if g1.is_one() {
            (self.num.clone(), rhs.den.clone())
        } else {
            (self.num.div_exact(&g1).unwrap(), rhs.den.div_exact(&g1).unwrap())
        };
        let (c, b) = if g2.is_one() {
            (rhs.num.clone(), self.den.clone())
        } else {
            (rhs.num.div_exact(&g2).unwrap(), self.den.div_exact(&g2).unwrap())
        };
        normalize_coprime(&a * &c, &b * &d)
    }
}

/// Like `normalize` but skips the gcd: the caller guarantees coprimality.
fn normalize_coprime(mut num: LaurentPoly, mut den: LaurentPoly) -> Scalar {
    let s = den.normalize_low();
    num = num.shift(s);
    let lc = den.leading_coeff().unwrap().clone();
    if !lc.is_one() {
        let inv = lc.recip();
        num = num.scale(&inv);
        den = den.scale(&inv);
    }
    Scalar { num, den }
}

impl Div for &Scalar {
    type Output = Scalar;
    /// # Panics
    /// On division by zero.
    fn div(self, rhs: &Scalar) -> Scalar {
        self * &rhs.inv().expect("division by zero scalar")
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                (&self).$m(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        *self = &*self * rhs;
    }
}

impl Zero for Scalar {
    fn zero() -> Self {
        Scalar::zero()
    }
    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
}

impl One for Scalar {
    fn one() -> Self {
        Scalar::one()
    }
}

impl fmt::Display for Scalar {
    /// `(num)/(den)`, exponents in brackets.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})/({})", self.num, self.den)
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Scalar {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}
