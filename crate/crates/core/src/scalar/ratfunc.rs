//! Canonical rational functions in v over Q.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::laurent::LaurentPoly;
use super::{rat, Rational, ScalarError};

/// A rational function num/den in v, kept canonical:
///
/// * den is nonzero with lowest exponent 0 and trailing coefficient 1,
/// * gcd(num, den) = 1 up to units v^k,
/// * the zero element is 0/1.
///
/// Canonical form makes derived equality representation equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RatFunc {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RatFunc {
    pub fn zero() -> Self {
        RatFunc { num: LaurentPoly::zero(), den: LaurentPoly::one() }
    }

    pub fn one() -> Self {
        RatFunc { num: LaurentPoly::one(), den: LaurentPoly::one() }
    }

    /// c * v^e.
    pub fn monomial(c: Rational, e: i64) -> Self {
        RatFunc { num: LaurentPoly::monomial(c, e), den: LaurentPoly::one() }
    }

    /// v^e.
    pub fn v_pow(e: i64) -> Self {
        Self::monomial(rat(1), e)
    }

    pub fn from_int(n: i64) -> Self {
        Self::monomial(rat(n), 0)
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        RatFunc { num: p, den: LaurentPoly::one() }
    }

    /// Builds num/den in canonical form. Panics if den = 0.
    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Self {
        assert!(!den.is_zero(), "rational function with zero denominator");
        if num.is_zero() {
            return Self::zero();
        }
        // Split off v^k units, reduce the polynomial parts, restore the shift
        // on the numerator so the denominator keeps lowest exponent 0.
        let a = num.min_exp().unwrap();
        let b = den.min_exp().unwrap();
        let n = num.shifted(-a);
        let d = den.shifted(-b);
        let g = n.gcd(&d);
        let (n, d) = if g.is_one() {
            (n, d)
        } else {
            (
                n.checked_div_exact(&g).expect("gcd divides numerator"),
                d.checked_div_exact(&g).expect("gcd divides denominator"),
            )
        };
        let t = d.coeff(0);
        debug_assert!(!t.is_zero());
        let inv = t.recip();
        RatFunc { num: n.scaled(&inv).shifted(a - b), den: d.scaled(&inv) }
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True when the denominator is 1, i.e. the element is a Laurent
    /// polynomial.
    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    /// The bar involution v -> v^-1 (a field automorphism). Coprimality is
    /// preserved, so only the unit normalization of the denominator redoes.
    pub fn bar(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        Self::from_reduced(self.num.bar(), self.den.bar())
    }

    pub fn recip(&self) -> Result<Self, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        // num and den are already coprime; swapping only needs the units
        // moved back onto the numerator side.
        Ok(Self::from_reduced(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, rhs: &RatFunc) -> Result<Self, ScalarError> {
        if rhs.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        Ok(self * &rhs.recip()?)
    }

    pub fn pow(&self, k: u32) -> Self {
        // Canonical inputs stay canonical under powers of num and den.
        RatFunc { num: self.num.pow(k), den: self.den.pow(k) }
    }

    /// Canonicalizes num/den under the promise that they are already coprime
    /// up to units, skipping the gcd.
    fn from_reduced(num: LaurentPoly, den: LaurentPoly) -> Self {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return Self::zero();
        }
        let b = den.min_exp().unwrap();
        let d = den.shifted(-b);
        let t = d.coeff(0);
        debug_assert!(!t.is_zero());
        if b == 0 && t.is_one() {
            return RatFunc { num, den: d };
        }
        let inv = t.recip();
        RatFunc { num: num.scaled(&inv).shifted(-b), den: d.scaled(&inv) }
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den.is_one() && rhs.den.is_one() {
            let num = &self.num + &rhs.num;
            return RatFunc { num, den: LaurentPoly::one() };
        }
        if self.den == rhs.den {
            return RatFunc::new(&self.num + &rhs.num, self.den.clone());
        }
        // Reduced operands: only factors of g = gcd of the denominators can
        // survive into the sum, so one small gcd finishes the reduction.
        let g = self.den.gcd(&rhs.den);
        if g.is_one() {
            let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
            if num.is_zero() {
                return RatFunc::zero();
            }
            return RatFunc { num, den: &self.den * &rhs.den };
        }
        let db = self.den.checked_div_exact(&g).expect("gcd divides");
        let dd = rhs.den.checked_div_exact(&g).expect("gcd divides");
        let t = &(&self.num * &dd) + &(&rhs.num * &db);
        if t.is_zero() {
            return RatFunc::zero();
        }
        let h = t.gcd(&g);
        if h.is_one() {
            return RatFunc { num: t, den: &(&g * &db) * &dd };
        }
        let num = t.checked_div_exact(&h).expect("gcd divides");
        let gh = g.checked_div_exact(&h).expect("gcd divides");
        RatFunc::from_reduced(num, &(&gh * &db) * &dd)
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RatFunc { num: &self.num * &rhs.num, den: LaurentPoly::one() };
        }
        // Cross-cancel against reduced operands; the leftovers are coprime.
        let g1 = self.num.gcd(&rhs.den);
        let g2 = rhs.num.gcd(&self.den);
        let (n1, d2) = if g1.is_one() {
            (self.num.clone(), rhs.den.clone())
        } else {
            (
                self.num.checked_div_exact(&g1).expect("gcd divides"),
                rhs.den.checked_div_exact(&g1).expect("gcd divides"),
            )
        };
        let (n2, d1) = if g2.is_one() {
            (rhs.num.clone(), self.den.clone())
        } else {
            (
                rhs.num.checked_div_exact(&g2).expect("gcd divides"),
                self.den.checked_div_exact(&g2).expect("gcd divides"),
            )
        };
        RatFunc::from_reduced(&n1 * &n2, &d1 * &d2)
    }
}

impl Div for &RatFunc {
    type Output = RatFunc;
    fn div(self, rhs: &RatFunc) -> RatFunc {
        self.checked_div(rhs)
            .expect("division by zero rational function")
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }
}

impl Zero for RatFunc {
    fn zero() -> Self {
        RatFunc::zero()
    }
    fn is_zero(&self) -> bool {
        RatFunc::is_zero(self)
    }
}

impl Add for RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: RatFunc) -> RatFunc {
        &self + &rhs
    }
}

impl One for RatFunc {
    fn one() -> Self {
        RatFunc::one()
    }
}

impl Mul for RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: RatFunc) -> RatFunc {
        &self * &rhs
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(pairs: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(pairs.iter().map(|(e, c)| (*e, rat(*c))))
    }

    #[test]
    fn canonicalization_quantum_two() {
        // (v^6 - v^-6)/(v^3 - v^-3) reduces to v^3 + v^-3.
        let f = RatFunc::new(p(&[(6, 1), (-6, -1)]), p(&[(3, 1), (-3, -1)]));
        assert_eq!(f, RatFunc::from_poly(p(&[(3, 1), (-3, 1)])));
        assert!(f.is_polynomial());
    }

    #[test]
    fn canonical_den_trailing_one() {
        // (v^2+1) / (2v^4 - 2) -> den (v^4-1) scaled to trailing 1 = -v^4+... :
        // trailing coefficient of den must be +1 and min exp 0.
        let f = RatFunc::new(p(&[(2, 1), (0, 1)]), p(&[(4, 2), (0, -2)]));
        assert_eq!(f.den().coeff(0), rat(1));
        assert_eq!(f.den().min_exp(), Some(0));
        // f * den = num must hold in the field.
        let back = &f * &RatFunc::from_poly(f.den().clone());
        assert_eq!(back, RatFunc::from_poly(f.num().clone()));
    }

    #[test]
    fn field_ops() {
        let a = RatFunc::new(p(&[(1, 1)]), p(&[(0, 1), (6, 1)]));
        let b = RatFunc::v_pow(-3);
        let s = &a + &b;
        assert_eq!(&s - &a, b);
        let q = &a / &b;
        assert_eq!(&q * &b, a);
        assert!(a.checked_div(&RatFunc::zero()).is_err());
        assert_eq!(&a - &a, RatFunc::zero());
    }

    #[test]
    fn bar_is_involutive_automorphism() {
        let a = RatFunc::new(p(&[(5, 1), (0, 2)]), p(&[(0, 1), (2, 3)]));
        let b = RatFunc::new(p(&[(-1, 1)]), p(&[(0, 4), (1, 1)]));
        assert_eq!(a.bar().bar(), a);
        assert_eq!((&a * &b).bar(), &a.bar() * &b.bar());
        assert_eq!((&a + &b).bar(), &a.bar() + &b.bar());
    }
}
