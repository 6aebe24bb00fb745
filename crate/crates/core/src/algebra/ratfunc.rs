use std::sync::Arc;

use num_traits::{One, Zero};

use super::context::VarContext;
use super::laurent::{Exponents, LaurentPolynomial};
use super::Rational;
use crate::error::{AlgebraError, Result};

/// Quotient of two Laurent polynomials.
///
/// Only monomial content and rational content are removed; there is no
/// polynomial gcd. After normalization the denominator is either `1` or a
/// non-monomial polynomial with no variable factor and leading coefficient
/// `1`. Equality is decided by cross-multiplication.
#[derive(Clone, Debug)]
pub struct RationalFunction {
    num: LaurentPolynomial,
    den: LaurentPolynomial,
}

impl RationalFunction {
    pub fn from_poly(p: LaurentPolynomial) -> Self {
        let den = LaurentPolynomial::one(p.context());
        Self { num: p, den }
    }

    pub fn new(num: LaurentPolynomial, den: LaurentPolynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(Self::normalized(num, den))
    }

    fn normalized(num: LaurentPolynomial, den: LaurentPolynomial) -> Self {
        debug_assert!(!den.is_zero());
        let ctx = num.context().clone();
        if num.is_zero() {
            return Self { num, den: LaurentPolynomial::one(&ctx) };
        }
        if let Some((c, e)) = den.as_monomial() {
            let inv_c = c.recip();
            let neg: Exponents = e.iter().map(|x| -x).collect();
            return Self { num: num.mul_term(&inv_c, &neg), den: LaurentPolynomial::one(&ctx) };
        }
        if num == den {
            return Self::from_poly(LaurentPolynomial::one(&ctx));
        }
        let shift: Exponents = den.min_exponents().iter().map(|x| -x).collect();
        let lc = den.leading_coefficient().cloned().unwrap_or_else(Rational::one).recip();
        let den = den.mul_term(&lc, &shift);
        let num = num.mul_term(&lc, &shift);
        Self { num, den }
    }

    pub fn context(&self) -> &Arc<VarContext> {
        self.num.context()
    }

    pub fn numer(&self) -> &LaurentPolynomial {
        &self.num
    }

    pub fn denom(&self) -> &LaurentPolynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.den == other.den {
            return Self::normalized(self.num.add(&other.num), self.den.clone());
        }
        let num = self.num.mul(&other.den).add(&other.num.mul(&self.den));
        Self::normalized(num, self.den.mul(&other.den))
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Self { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        // Cancel identical factors across the product before multiplying.
        let (n1, d2) = cancel_pair(&self.num, &other.den);
        let (n2, d1) = cancel_pair(&other.num, &self.den);
        Self::normalized(n1.mul(&n2), d1.mul(&d2))
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Ok(Self::normalized(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self.mul(&other.inv()?))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::normalized(self.num.scale(c), self.den.clone())
    }

    pub fn pow(&self, n: i32) -> Result<Self> {
        if n < 0 {
            return self.inv()?.pow(-n);
        }
        let n = n as u32;
        Ok(Self::normalized(self.num.pow(n), self.den.pow(n)))
    }

    /// Exact field equality via `num(x) * den(y) == num(y) * den(x)`.
    pub fn field_eq(&self, other: &Self) -> bool {
        if self.den == other.den {
            return self.num == other.num;
        }
        self.num.mul(&other.den) == other.num.mul(&self.den)
    }

    pub fn as_constant(&self) -> Option<Rational> {
        if self.den.is_one() {
            self.num.as_constant()
        } else {
            None
        }
    }

    /// Does the expression mention the variable in its normalized form?
    pub fn involves(&self, var: usize) -> bool {
        self.num.involves(var) || self.den.involves(var)
    }

    pub fn render(&self) -> String {
        if self.den.is_one() {
            self.num.render()
        } else {
            format!("({})/({})", self.num.render(), self.den.render())
        }
    }

    /// Substitutes `var^2 -> value` throughout, requiring every exponent of
    /// `var` to be even in both numerator and denominator.
    pub fn substitute_square(&self, var: usize, value: &Rational) -> Result<Self> {
        let name = self.context().names()[var].clone();
        let sub = |p: &LaurentPolynomial| -> Result<LaurentPolynomial> {
            let mut terms = Vec::with_capacity(p.num_terms());
            for (e, c) in p.terms() {
                if e[var] % 2 != 0 {
                    return Err(AlgebraError::OddExponent(name.clone()));
                }
                let half = e[var] / 2;
                let factor = if half >= 0 {
                    num_traits::pow(value.clone(), half as usize)
                } else {
                    if value.is_zero() {
                        return Err(AlgebraError::DivisionByZero);
                    }
                    num_traits::pow(value.recip(), (-half) as usize)
                };
                let mut e2 = e.clone();
                e2[var] = 0;
                terms.push((e2, c * factor));
            }
            Ok(LaurentPolynomial::from_terms(p.context(), terms))
        };
        let den = sub(&self.den)?;
        if den.is_zero() {
            return Err(AlgebraError::VanishingDenominator);
        }
        Ok(Self::normalized(sub(&self.num)?, den))
    }
}

/// Drops a common factor when one side equals the other up to a rational
/// multiple (cheap structural check, not a gcd).
fn cancel_pair(a: &LaurentPolynomial, b: &LaurentPolynomial) -> (LaurentPolynomial, LaurentPolynomial) {
    if a.num_terms() > 1 && a.num_terms() == b.num_terms() {
        let ratio = a.terms()[0].1.clone() / b.terms()[0].1.clone();
        if a.terms().iter().zip(b.terms()).all(|((ea, ca), (eb, cb))| ea == eb && *ca == cb * &ratio) {
            let ctx = a.context();
            return (LaurentPolynomial::constant(ctx, ratio), LaurentPolynomial::one(ctx));
        }
    }
    (a.clone(), b.clone())
}

impl PartialEq for RationalFunction {
    fn eq(&self, other: &Self) -> bool {
        self.field_eq(other)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    fn setup() -> (Arc<VarContext>, RationalFunction, RationalFunction) {
        let ctx = VarContext::new(&["l1", "l2"]).unwrap();
        let x = RationalFunction::from_poly(LaurentPolynomial::var(&ctx, 0));
        let y = RationalFunction::from_poly(LaurentPolynomial::var(&ctx, 1));
        (ctx, x, y)
    }

    #[test]
    fn difference_of_squares_quotient() {
        let (_, x, y) = setup();
        let q = x.mul(&x).sub(&y.mul(&y)).div(&x.sub(&y)).unwrap();
        assert!(q.field_eq(&x.add(&y)));
        assert!(!q.is_polynomial());
    }

    #[test]
    fn monomial_denominators_fold_into_numerator() {
        let (_, x, y) = setup();
        let r = x.div(&y).unwrap();
        assert!(r.is_polynomial());
        assert_eq!(r.render(), "l1*l2^-1");
        let r2 = x.mul(&y).div(&y.mul(&y)).unwrap();
        assert_eq!(r, r2);
    }

    #[test]
    fn normalized_denominator_is_monic() {
        let (_, x, y) = setup();
        let two = rat(2, 1);
        let r = x.div(&y.scale(&two).add(&x.scale(&two))).unwrap();
        assert_eq!(r.render(), "(1/2*l1)/(l1+l2)");
    }

    #[test]
    fn square_substitution() {
        let (_, x, y) = setup();
        let r = x.mul(&x).mul(&y).div(&y.add(&x.mul(&x))).unwrap();
        let s = r.substitute_square(0, &rat(-1, 1)).unwrap();
        assert_eq!(s.render(), "(-l2)/(l2-1)");
        assert!(x.substitute_square(0, &rat(1, 1)).is_err());
    }
}
