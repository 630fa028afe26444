//! Exact arithmetic in the field `Q(sqrt 5)`.
//!
//! Root systems of the crystallographic families have rational Cartan data,
//! but the H-family and the pentagonal dihedral groups need the golden
//! ratio. Numbers of the form `a + b*sqrt(5)` with rational `a`, `b` close
//! that gap while keeping all arithmetic exact. Comparisons never go through
//! floating point: the sign of `a + b*sqrt(5)` is decided by comparing `a^2`
//! with `5*b^2`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

/// An element `a + b*sqrt(5)` of `Q(sqrt 5)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Scalar {
    a: BigRational,
    b: BigRational,
}

impl Scalar {
    /// The rational number `a`.
    pub fn from_rational(a: BigRational) -> Self {
        Scalar {
            a,
            b: BigRational::zero(),
        }
    }

    /// The integer `n`.
    pub fn from_int(n: i64) -> Self {
        Scalar::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    /// The rational number `num / den`. Panics when `den == 0`.
    pub fn ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Scalar::from_rational(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    /// The number `(a_num + b_num * sqrt(5)) / den`. Panics when `den == 0`.
    pub fn with_sqrt5(a_num: i64, b_num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Scalar {
            a: BigRational::new(BigInt::from(a_num), BigInt::from(den)),
            b: BigRational::new(BigInt::from(b_num), BigInt::from(den)),
        }
    }

    /// The golden ratio `(1 + sqrt(5)) / 2`, i.e. `2 cos(pi / 5)`.
    pub fn golden() -> Self {
        Scalar::with_sqrt5(1, 1, 2)
    }

    pub fn zero() -> Self {
        Scalar::from_int(0)
    }

    pub fn one() -> Self {
        Scalar::from_int(1)
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// Rational part `a`.
    pub fn rational_part(&self) -> &BigRational {
        &self.a
    }

    /// Coefficient `b` of `sqrt(5)`.
    pub fn sqrt5_part(&self) -> &BigRational {
        &self.b
    }

    /// Sign of the real number represented, in `{-1, 0, 1}`.
    ///
    /// Writing the value as `a + b*sqrt(5)`: when `a` and `b` agree in sign
    /// the answer is clear; otherwise the larger of `a^2` and `5 b^2`
    /// decides, because squaring is monotone on non-negative reals.
    pub fn signum(&self) -> i32 {
        let sa = rational_sign(&self.a);
        let sb = rational_sign(&self.b);
        if sb == 0 {
            return sa;
        }
        if sa == 0 {
            return sb;
        }
        if sa == sb {
            return sa;
        }
        // Opposite signs: |a| vs |b|*sqrt(5) decides, i.e. a^2 vs 5*b^2.
        let a2 = &self.a * &self.a;
        let b2_5 = &self.b * &self.b * BigRational::from_integer(BigInt::from(5));
        match a2.cmp(&b2_5) {
            Ordering::Greater => sa,
            Ordering::Less => sb,
            Ordering::Equal => 0,
        }
    }

    pub fn is_positive(&self) -> bool {
        self.signum() > 0
    }

    pub fn is_negative(&self) -> bool {
        self.signum() < 0
    }

    /// Multiplicative inverse. Panics on zero.
    ///
    /// Uses the field norm: `1 / (a + b s) = (a - b s) / (a^2 - 5 b^2)`
    /// where `s = sqrt(5)`. The norm is nonzero for nonzero elements
    /// because `sqrt(5)` is irrational.
    pub fn inverse(&self) -> Self {
        assert!(!self.is_zero(), "inverse of zero");
        let norm = &self.a * &self.a - &self.b * &self.b * BigRational::from_integer(BigInt::from(5));
        debug_assert!(!norm.is_zero());
        Scalar {
            a: &self.a / &norm,
            b: -&self.b / &norm,
        }
    }
}

fn rational_sign(r: &BigRational) -> i32 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Scalar {
    fn cmp(&self, other: &Self) -> Ordering {
        let diff = self.clone() - other.clone();
        match diff.signum() {
            s if s < 0 => Ordering::Less,
            0 => Ordering::Equal,
            _ => Ordering::Greater,
        }
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        Scalar {
            a: self.a + rhs.a,
            b: self.b + rhs.b,
        }
    }
}

impl AddAssign for Scalar {
    fn add_assign(&mut self, rhs: Scalar) {
        self.a += rhs.a;
        self.b += rhs.b;
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        Scalar {
            a: self.a - rhs.a,
            b: self.b - rhs.b,
        }
    }
}

impl SubAssign for Scalar {
    fn sub_assign(&mut self, rhs: Scalar) {
        self.a -= rhs.a;
        self.b -= rhs.b;
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            a: -self.a,
            b: -self.b,
        }
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        // (a + b s)(c + d s) = ac + 5 bd + (ad + bc) s, with s^2 = 5.
        let five = BigRational::from_integer(BigInt::from(5));
        Scalar {
            a: &self.a * &rhs.a + &self.b * &rhs.b * &five,
            b: &self.a * &rhs.b + &self.b * &rhs.a,
        }
    }
}

impl MulAssign for Scalar {
    fn mul_assign(&mut self, rhs: Scalar) {
        *self = self.clone() * rhs;
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            write!(f, "{}", self.a)
        } else if self.a.is_zero() {
            write!(f, "{}*sqrt5", self.b)
        } else {
            write!(f, "{} + {}*sqrt5", self.a, self.b)
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn golden_ratio_satisfies_its_equation() {
        let phi = Scalar::golden();
        let lhs = phi.clone() * phi.clone();
        let rhs = phi.clone() + Scalar::one();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn sign_of_mixed_terms() {
        // 9/4 - sqrt(5) > 0 because 81/16 > 5.
        let x = Scalar::with_sqrt5(9, -4, 4);
        assert_eq!(x.signum(), 1);
        // 2 - sqrt(5) < 0 because 4 < 5.
        let y = Scalar::with_sqrt5(2, -1, 1);
        assert_eq!(y.signum(), -1);
        // 0 has sign 0.
        assert_eq!(Scalar::zero().signum(), 0);
        // -3 + sqrt(5) < 0.
        let z = Scalar::with_sqrt5(-3, 1, 1);
        assert_eq!(z.signum(), -1);
    }

    #[test]
    fn inverse_of_golden_is_golden_minus_one() {
        let phi = Scalar::golden();
        let inv = phi.inverse();
        assert_eq!(inv, phi.clone() - Scalar::one());
        assert_eq!(phi * inv, Scalar::one());
    }

    #[test]
    fn ordering_is_consistent_with_subtraction_sign() {
        let phi = Scalar::golden(); // about 1.618
        let x = Scalar::ratio(8, 5); // 1.6
        let y = Scalar::ratio(13, 8); // 1.625
        assert!(x < phi);
        assert!(phi < y);
        assert_eq!(phi.cmp(&phi), Ordering::Equal);
    }

    #[test]
    fn arithmetic_identities() {
        let x = Scalar::with_sqrt5(3, 2, 7);
        let y = Scalar::with_sqrt5(-1, 5, 3);
        assert_eq!(x.clone() + y.clone() - y.clone(), x);
        assert_eq!(x.clone() * y.clone(), y.clone() * x.clone());
        assert_eq!(x.clone() * x.inverse(), Scalar::one());
        assert!((x.clone() - x).is_zero());
    }
}
