//! Exact rationals: `i128` fractions with checked arithmetic that fall back to
//! big integers on overflow.

use core::cmp::Ordering;
use core::fmt;
use core::iter::Sum;
use core::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{CheckedAdd, CheckedDiv, CheckedMul, CheckedSub, Signed, ToPrimitive, Zero};

#[derive(Clone, Debug)]
enum Repr {
    Small(Ratio<i128>),
    Big(BigRational),
}

/// An always-reduced fraction with positive denominator.
#[derive(Clone, Debug)]
pub struct Rational(Repr);

impl Rational {
    pub fn new(num: i128, den: i128) -> Self {
        assert!(den != 0, "zero denominator");
        match (num.checked_neg(), den.checked_neg()) {
            (Some(_), Some(_)) => Rational(Repr::Small(Ratio::new(num, den))),
            _ => Rational::from_big(BigRational::new(BigInt::from(num), BigInt::from(den))),
        }
    }

    pub fn integer(n: i128) -> Self {
        Rational(Repr::Small(Ratio::from_integer(n)))
    }

    pub fn zero() -> Self {
        Rational::integer(0)
    }

    fn from_big(r: BigRational) -> Self {
        match (r.numer().to_i128(), r.denom().to_i128()) {
            // Keep the small form only when negation cannot overflow later.
            (Some(n), Some(d)) if n != i128::MIN && d != i128::MIN => {
                Rational(Repr::Small(Ratio::new_raw(n, d)))
            }
            _ => Rational(Repr::Big(r)),
        }
    }

    fn to_big(&self) -> BigRational {
        match &self.0 {
            Repr::Small(r) => BigRational::new_raw(BigInt::from(*r.numer()), BigInt::from(*r.denom())),
            Repr::Big(r) => r.clone(),
        }
    }

    pub fn numer(&self) -> BigInt {
        match &self.0 {
            Repr::Small(r) => BigInt::from(*r.numer()),
            Repr::Big(r) => r.numer().clone(),
        }
    }

    pub fn denom(&self) -> BigInt {
        match &self.0 {
            Repr::Small(r) => BigInt::from(*r.denom()),
            Repr::Big(r) => r.denom().clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.0 {
            Repr::Small(r) => r.is_zero(),
            Repr::Big(r) => r.is_zero(),
        }
    }

    pub fn is_positive(&self) -> bool {
        match &self.0 {
            Repr::Small(r) => r.is_positive(),
            Repr::Big(r) => r.is_positive(),
        }
    }

    pub fn is_negative(&self) -> bool {
        match &self.0 {
            Repr::Small(r) => r.is_negative(),
            Repr::Big(r) => r.is_negative(),
        }
    }

    fn binary(
        &self,
        rhs: &Self,
        small: impl Fn(&Ratio<i128>, &Ratio<i128>) -> Option<Ratio<i128>>,
        big: impl Fn(BigRational, BigRational) -> BigRational,
    ) -> Self {
        if let (Repr::Small(a), Repr::Small(b)) = (&self.0, &rhs.0) {
            if let Some(r) = small(a, b) {
                if *r.numer() != i128::MIN && *r.denom() != i128::MIN {
                    return Rational(Repr::Small(r));
                }
            }
        }
        Rational::from_big(big(self.to_big(), rhs.to_big()))
    }
}

impl Default for Rational {
    fn default() -> Self {
        Rational::zero()
    }
}

impl From<i64> for Rational {
    fn from(n: i64) -> Self {
        Rational::integer(n.into())
    }
}

impl From<usize> for Rational {
    fn from(n: usize) -> Self {
        Rational::integer(n as i128)
    }
}

impl PartialEq for Rational {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Rational {}

impl PartialOrd for Rational {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Rational {
    fn cmp(&self, other: &Self) -> Ordering {
        match (&self.0, &other.0) {
            (Repr::Small(a), Repr::Small(b)) => {
                // Cross-multiplication can overflow; compare in big form then.
                match (i128::checked_mul(*a.numer(), *b.denom()), i128::checked_mul(*b.numer(), *a.denom())) {
                    (Some(x), Some(y)) => x.cmp(&y),
                    _ => self.to_big().cmp(&other.to_big()),
                }
            }
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

impl core::hash::Hash for Rational {
    fn hash<H: core::hash::Hasher>(&self, state: &mut H) {
        self.numer().hash(state);
        self.denom().hash(state);
    }
}

impl Add for &Rational {
    type Output = Rational;
    fn add(self, rhs: &Rational) -> Rational {
        self.binary(rhs, |a, b| a.checked_add(b), |a, b| a + b)
    }
}

impl Sub for &Rational {
    type Output = Rational;
    fn sub(self, rhs: &Rational) -> Rational {
        self.binary(rhs, |a, b| a.checked_sub(b), |a, b| a - b)
    }
}

impl Mul for &Rational {
    type Output = Rational;
    fn mul(self, rhs: &Rational) -> Rational {
        self.binary(rhs, |a, b| a.checked_mul(b), |a, b| a * b)
    }
}

impl Div for &Rational {
    type Output = Rational;
    fn div(self, rhs: &Rational) -> Rational {
        assert!(!rhs.is_zero(), "division by zero");
        self.binary(rhs, |a, b| a.checked_div(b), |a, b| a / b)
    }
}

macro_rules! by_value {
    ($($tr:ident $f:ident),*) => {$(
        impl $tr for Rational {
            type Output = Rational;
            fn $f(self, rhs: Rational) -> Rational {
                (&self).$f(&rhs)
            }
        }
        impl $tr<&Rational> for Rational {
            type Output = Rational;
            fn $f(self, rhs: &Rational) -> Rational {
                (&self).$f(rhs)
            }
        }
    )*};
}

by_value!(Add add, Sub sub, Mul mul, Div div);

impl AddAssign<&Rational> for Rational {
    fn add_assign(&mut self, rhs: &Rational) {
        *self = &*self + rhs;
    }
}

impl AddAssign for Rational {
    fn add_assign(&mut self, rhs: Rational) {
        *self = &*self + &rhs;
    }
}

impl SubAssign<&Rational> for Rational {
    fn sub_assign(&mut self, rhs: &Rational) {
        *self = &*self - rhs;
    }
}

impl SubAssign for Rational {
    fn sub_assign(&mut self, rhs: Rational) {
        *self = &*self - &rhs;
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        match self.0 {
            Repr::Small(r) => Rational(Repr::Small(-r)),
            Repr::Big(r) => Rational::from_big(-r),
        }
    }
}

impl<'a> Sum<&'a Rational> for Rational {
    fn sum<I: Iterator<Item = &'a Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl fmt::Display for Rational {
    /// Always `num/den`, e.g. `0/1`, `-2/1`, `4/5`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Small(r) => write!(f, "{}/{}", r.numer(), r.denom()),
            Repr::Big(r) => write!(f, "{}/{}", r.numer(), r.denom()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use proptest::prelude::*;

    fn q(n: i128, d: i128) -> Rational {
        Rational::new(n, d)
    }

    #[test]
    fn reduced_and_signed() {
        assert_eq!(q(4, -10).to_string(), "-2/5");
        assert_eq!(q(0, 7).to_string(), "0/1");
        assert_eq!(Rational::integer(-2).to_string(), "-2/1");
        assert_eq!(q(2, 4), q(1, 2));
    }

    #[test]
    fn discharging_constants() {
        let two_fifths = q(2, 5);
        let four_fifths = q(4, 5);
        let bad = Rational::integer(-2) + Rational::integer(2) * &four_fifths + &two_fifths;
        assert!(bad.is_zero());
        let five = Rational::integer(-1) + Rational::integer(3) * &four_fifths
            - Rational::integer(2) * &two_fifths;
        assert_eq!(five, q(3, 5));
    }

    #[test]
    fn overflow_falls_back_to_big() {
        let huge = q(i128::MAX, 3);
        let sum = &huge + &huge;
        assert!(sum > huge);
        assert_eq!(sum.numer(), BigInt::from(i128::MAX) * 2);
        let back = &sum - &huge;
        assert_eq!(back, huge);
        let prod = &huge * &huge;
        assert_eq!(prod.denom(), BigInt::from(9));
        assert!((&prod / &prod - Rational::integer(1)).is_zero());
    }

    #[test]
    fn ordering_across_representations() {
        let big = &q(i128::MAX, 1) + &q(1, 1);
        assert!(big > q(i128::MAX, 1));
        assert!(-big.clone() < q(-i128::MAX, 1));
        assert_eq!(q(1, 3).cmp(&q(1, 2)), Ordering::Less);
    }

    proptest! {
        #[test]
        fn field_laws(a in -1000i128..1000, b in 1i128..1000, c in -1000i128..1000, d in 1i128..1000) {
            let x = q(a, b);
            let y = q(c, d);
            prop_assert_eq!(&(&x + &y) - &y, x.clone());
            prop_assert_eq!(&x * &y, &y * &x);
            prop_assert_eq!(q(a * d + c * b, b * d), &x + &y);
            if !y.is_zero() {
                prop_assert_eq!(&(&x / &y) * &y, x);
            }
        }
    }
}
