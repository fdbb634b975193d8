use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::IntPoly;
use crate::{Error, Result};

/// An element of `ℚ(t)` stored as a reduced fraction of integer polynomials.
///
/// The stored form is canonical: numerator and denominator are coprime in
/// `ℚ[t]`, their integer contents are coprime, and the denominator has a
/// positive leading coefficient. Zero is stored as `0/1`. Structural
/// equality is therefore equality in `ℚ(t)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: IntPoly,
    den: IntPoly,
}

impl RationalFunction {
    pub fn new(num: IntPoly, den: IntPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(num, den))
    }

    pub fn zero() -> Self {
        RationalFunction {
            num: IntPoly::zero(),
            den: IntPoly::one(),
        }
    }

    pub fn one() -> Self {
        IntPoly::one().into()
    }

    pub fn numerator(&self) -> &IntPoly {
        &self.num
    }

    pub fn denominator(&self) -> &IntPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Returns the polynomial if this element lies in `ℤ[t]`.
    pub fn as_int_poly(&self) -> Option<IntPoly> {
        if self.den.is_one() {
            Some(self.num.clone())
        } else {
            None
        }
    }

    /// The reciprocal, failing on zero.
    pub fn recip(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    fn reduce(num: IntPoly, den: IntPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        // cancel the common power of t, then split den = t^k · rest
        let common = num.low_degree().unwrap_or(0).min(den.low_degree().unwrap_or(0));
        let num = num.unshift(common).expect("low degree");
        let den = den.unshift(common).expect("low degree");
        let k = den.low_degree().unwrap_or(0);
        let rest = den.unshift(k).expect("low degree");
        let (mut num, mut den) = if rest.is_constant() {
            (num, den)
        } else if let Ok(q) = num.div_exact(&rest) {
            // rest | num in ℤ[t]; t^k and q are coprime after the cancellation
            (q, IntPoly::monomial(1, k))
        } else {
            let g = num.gcd(&den);
            if g.is_one() {
                (num, den)
            } else {
                (
                    num.div_exact(&g).expect("gcd divides numerator"),
                    den.div_exact(&g).expect("gcd divides denominator"),
                )
            }
        };
        let c = num.content().gcd(&den.content());
        let c = if den.leading().is_some_and(Signed::is_negative) {
            -c
        } else {
            c
        };
        if !c.is_one() {
            num = num.div_scalar_exact(&c).expect("content divides");
            den = den.div_scalar_exact(&c).expect("content divides");
        }
        RationalFunction { num, den }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::reduce(self.num.scale(c), self.den.clone())
    }

    /// Evaluates at an integer point, returning `(numerator, denominator)`
    /// values; fails if the denominator vanishes there.
    pub fn eval(&self, x: &BigInt) -> Result<(BigInt, BigInt)> {
        let d = self.den.eval(x);
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.num.eval(x);
        let g = n.gcd(&d);
        let (mut n, mut d) = if g.is_zero() { (n, d) } else { (n / &g, d / &g) };
        if d.is_negative() {
            n = -n;
            d = -d;
        }
        Ok((n, d))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::reduce(&self.num * &rhs.den, &self.den * &rhs.num))
    }
}

impl Default for RationalFunction {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<IntPoly> for RationalFunction {
    fn from(p: IntPoly) -> Self {
        RationalFunction {
            num: p,
            den: IntPoly::one(),
        }
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFunction({self})")
    }
}

impl<'a> Add<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return RationalFunction::reduce(&self.num + &rhs.num, self.den.clone());
        }
        RationalFunction::reduce(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl<'a> Sub<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        if self.is_zero() || rhs.is_zero() {
            return RationalFunction::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return (&self.num * &rhs.num).into();
        }
        RationalFunction::reduce(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

/// Panics on division by zero; use [`RationalFunction::checked_div`] to
/// handle it.
impl<'a> Div<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;
    fn div(self, rhs: &RationalFunction) -> RationalFunction {
        self.checked_div(rhs).expect("division by zero rational function")
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl One for RationalFunction {
    fn one() -> Self {
        RationalFunction::one()
    }
}

impl Mul for RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    fn rf(n: &[i64], d: &[i64]) -> RationalFunction {
        RationalFunction::new(p(n), p(d)).unwrap()
    }

    #[test]
    fn normalizes_to_a_canonical_form() {
        // (2t+2)/(4t^2-4) = 1/(2t-2)
        assert_eq!(rf(&[2, 2], &[-4, 0, 4]), rf(&[1], &[-2, 2]));
        // sign moves to the numerator
        assert_eq!(rf(&[1], &[0, -1]), rf(&[-1], &[0, 1]));
        assert_eq!(rf(&[0], &[3, 1]), RationalFunction::zero());
    }

    #[test]
    fn self_quotient_is_one() {
        let a = rf(&[3, 0, 1, 7], &[1, 1]);
        assert_eq!(&a / &a, RationalFunction::one());
    }

    #[test]
    fn zero_denominator_is_rejected() {
        assert_eq!(
            RationalFunction::new(p(&[1]), IntPoly::zero()),
            Err(Error::DivisionByZero)
        );
        assert!(RationalFunction::one()
            .checked_div(&RationalFunction::zero())
            .is_err());
    }

    #[test]
    fn arithmetic_matches_hand_results() {
        // 1/t + 1/(t+1) = (2t+1)/(t^2+t)
        let s = &rf(&[1], &[0, 1]) + &rf(&[1], &[1, 1]);
        assert_eq!(s, rf(&[1, 2], &[0, 1, 1]));
        assert_eq!(&s - &s, RationalFunction::zero());
        assert_eq!(s.eval(&BigInt::from(2)).unwrap(), (5.into(), 6.into()));
    }

    proptest::proptest! {
        #[test]
        fn two_constructions_agree(
            n in proptest::collection::vec(-6i64..6, 1..4),
            d in proptest::collection::vec(-6i64..6, 1..4),
            k in proptest::collection::vec(-6i64..6, 1..3),
            s in 1i64..5,
        ) {
            let (n, d, k) = (p(&n), p(&d), p(&k));
            proptest::prop_assume!(!d.is_zero() && !k.is_zero());
            let a = RationalFunction::new(n.clone(), d.clone()).unwrap();
            let b = RationalFunction::new(
                (&n * &k).scale(&BigInt::from(s)),
                (&d * &k).scale(&BigInt::from(-s)),
            ).unwrap();
            proptest::prop_assert_eq!(a, -&b);
        }
    }
}
