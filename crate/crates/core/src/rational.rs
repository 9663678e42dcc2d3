//! Arbitrary-precision rational scalar.
//!
//! `Rat` is the coefficient field of every symbolic computation in this
//! crate.  It is a thin wrapper over `num_rational::BigRational`, which
//! maintains the two invariants we rely on: values are always in lowest
//! terms and the denominator is always positive.

use num_bigint::{BigInt, Sign};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, DivAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Rat(BigRational);

impl Rat {
    pub fn zero() -> Self {
        Rat(BigRational::zero())
    }

    pub fn one() -> Self {
        Rat(BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Rat(BigRational::from_integer(BigInt::from(n)))
    }

    /// `num/den`, reduced. Panics on a zero denominator.
    pub fn frac(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Rat(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_big(num: BigInt, den: BigInt) -> Self {
        assert!(!den.is_zero(), "zero denominator");
        Rat(BigRational::new(num, den))
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn abs(&self) -> Self {
        Rat(self.0.abs())
    }

    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "reciprocal of zero");
        Rat(self.0.recip())
    }

    pub fn pow(&self, exp: u32) -> Self {
        let mut acc = Rat::one();
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc *= &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Exact value of a finite float (dyadic rational).
    pub fn from_f64(x: f64) -> Option<Self> {
        BigRational::from_float(x).map(Rat)
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or_else(|| {
            // Fall back through a scaled quotient for extreme magnitudes.
            let n = self.0.numer();
            let d = self.0.denom();
            let nb = n.bits() as i64;
            let db = d.bits() as i64;
            let shift = (nb.max(db) - 60).max(0) as u64;
            let n2 = (n >> shift).to_f64().unwrap_or(f64::NAN);
            let d2 = (d >> shift).to_f64().unwrap_or(f64::NAN);
            n2 / d2
        })
    }

    /// gcd of two rationals: gcd of numerators over lcm of denominators.
    /// Used for content extraction; gcd(0, x) = |x|.
    pub fn gcd(&self, other: &Rat) -> Rat {
        use num_integer::Integer;
        if self.is_zero() {
            return other.abs();
        }
        if other.is_zero() {
            return self.abs();
        }
        let n = self.numer().gcd(other.numer());
        let d = self.denom().lcm(other.denom());
        Rat(BigRational::new(n, d))
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_integer() {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Rat {
    type Err = String;

    /// Parses `"p"`, `"p/q"`, or a plain decimal such as `"0.5"`.
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        let s = s.trim();
        if let Some((num, den)) = s.split_once('/') {
            let n = BigInt::from_str(num.trim()).map_err(|e| e.to_string())?;
            let d = BigInt::from_str(den.trim()).map_err(|e| e.to_string())?;
            if d.is_zero() {
                return Err("zero denominator".into());
            }
            return Ok(Rat(BigRational::new(n, d)));
        }
        if let Some((int_part, frac_part)) = s.split_once('.') {
            let digits = frac_part.len() as u32;
            let sign = if int_part.starts_with('-') { -1 } else { 1 };
            let ip = if int_part.is_empty() || int_part == "-" {
                BigInt::zero()
            } else {
                BigInt::from_str(int_part).map_err(|e| e.to_string())?
            };
            let fp = if frac_part.is_empty() {
                BigInt::zero()
            } else {
                BigInt::from_str(frac_part).map_err(|e| e.to_string())?
            };
            let den = BigInt::from(10u32).pow(digits);
            let num = ip * &den + BigInt::from(sign) * fp;
            return Ok(Rat(BigRational::new(num, den)));
        }
        let n = BigInt::from_str(s).map_err(|e| e.to_string())?;
        Ok(Rat(BigRational::from_integer(n)))
    }
}

impl PartialOrd for Rat {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rat {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.cmp(&other.0)
    }
}

impl From<i64> for Rat {
    fn from(n: i64) -> Self {
        Rat::from_int(n)
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $op:tt) => {
        impl $trait for Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat { Rat(self.0 $op rhs.0) }
        }
        impl<'a> $trait<&'a Rat> for Rat {
            type Output = Rat;
            fn $method(self, rhs: &'a Rat) -> Rat { Rat(self.0 $op &rhs.0) }
        }
        impl<'a> $trait<Rat> for &'a Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat { Rat(&self.0 $op rhs.0) }
        }
        impl<'a, 'b> $trait<&'b Rat> for &'a Rat {
            type Output = Rat;
            fn $method(self, rhs: &'b Rat) -> Rat { Rat(&self.0 $op &rhs.0) }
        }
    };
}

binop!(Add, add, +);
binop!(Sub, sub, -);
binop!(Mul, mul, *);

impl Div for Rat {
    type Output = Rat;
    fn div(self, rhs: Rat) -> Rat {
        assert!(!rhs.is_zero(), "rational division by zero");
        Rat(self.0 / rhs.0)
    }
}

impl<'a, 'b> Div<&'b Rat> for &'a Rat {
    type Output = Rat;
    fn div(self, rhs: &'b Rat) -> Rat {
        assert!(!rhs.is_zero(), "rational division by zero");
        Rat(&self.0 / &rhs.0)
    }
}

impl<'a> Div<&'a Rat> for Rat {
    type Output = Rat;
    fn div(self, rhs: &'a Rat) -> Rat {
        assert!(!rhs.is_zero(), "rational division by zero");
        Rat(self.0 / &rhs.0)
    }
}

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-self.0)
    }
}

impl<'a> Neg for &'a Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-&self.0)
    }
}

impl AddAssign<&Rat> for Rat {
    fn add_assign(&mut self, rhs: &Rat) {
        self.0 += &rhs.0;
    }
}

impl SubAssign<&Rat> for Rat {
    fn sub_assign(&mut self, rhs: &Rat) {
        self.0 -= &rhs.0;
    }
}

impl MulAssign<&Rat> for Rat {
    fn mul_assign(&mut self, rhs: &Rat) {
        self.0 *= &rhs.0;
    }
}

impl DivAssign<&Rat> for Rat {
    fn div_assign(&mut self, rhs: &Rat) {
        assert!(!rhs.is_zero(), "rational division by zero");
        self.0 /= &rhs.0;
    }
}

/// Sign of the value as -1, 0, or 1.
pub fn sign(r: &Rat) -> i32 {
    match r.numer().sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lowest_terms_and_positive_denominator() {
        let r = Rat::frac(6, -4);
        assert_eq!(r.to_string(), "-3/2");
        assert!(r.denom() > &BigInt::zero());
    }

    #[test]
    fn parsing_forms() {
        assert_eq!("3/6".parse::<Rat>().unwrap(), Rat::frac(1, 2));
        assert_eq!("-0.25".parse::<Rat>().unwrap(), Rat::frac(-1, 4));
        assert_eq!("7".parse::<Rat>().unwrap(), Rat::from_int(7));
        assert!("1/0".parse::<Rat>().is_err());
    }

    #[test]
    fn exactness_survives_large_magnitudes() {
        // Magnitudes like the ell = 8 twisted table entries.
        let big: Rat = "6263785284763018974609375/2".parse().unwrap();
        let back = &big * &Rat::frac(2, 1) / Rat::from_int(2);
        assert_eq!(&back + &big - &big - &big, Rat::zero());
    }

    #[test]
    fn rational_gcd_is_content_friendly() {
        let g = Rat::frac(3, 4).gcd(&Rat::frac(9, 2));
        assert_eq!(g, Rat::frac(3, 4));
        assert_eq!(Rat::zero().gcd(&Rat::frac(-5, 3)), Rat::frac(5, 3));
    }
}
