use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::context::VarContext;
use super::extension::{ExtElement, Modulus};
use super::laurent::LaurentPolynomial;
use super::ratfunc::RationalFunction;
use super::{fmt_rational, Rational};
use crate::error::{AlgebraError, Result};

/// The field a [`Scalar`] lives in.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Backend {
    /// Rational functions in the context's variables.
    Symbolic(Arc<VarContext>),
    /// Plain rationals.
    Rational,
    /// `Q[z]/(m)` for a user-supplied monic modulus.
    Extension(Arc<Modulus>),
}

impl Backend {
    pub fn symbolic<S: AsRef<str>>(names: &[S]) -> Result<Self> {
        Ok(Backend::Symbolic(VarContext::new(names)?))
    }

    pub fn zero(&self) -> Scalar {
        self.from_rational(Rational::zero())
    }

    pub fn one(&self) -> Scalar {
        self.from_rational(Rational::one())
    }

    pub fn from_int(&self, n: i64) -> Scalar {
        self.from_rational(Rational::from_integer(BigInt::from(n)))
    }

    pub fn from_rational(&self, c: Rational) -> Scalar {
        match self {
            Backend::Symbolic(ctx) => Scalar::Symbolic(RationalFunction::from_poly(LaurentPolynomial::constant(ctx, c))),
            Backend::Rational => Scalar::Rational(c),
            Backend::Extension(m) => Scalar::Extension(ExtElement::from_rational(m, c)),
        }
    }

    /// Embeds an element of another backend when that is well defined
    /// (rationals go anywhere; otherwise backends must match).
    pub fn embed(&self, x: &Scalar) -> Result<Scalar> {
        if let Some(c) = x.as_rational() {
            return Ok(self.from_rational(c));
        }
        if &x.backend() == self {
            return Ok(x.clone());
        }
        Err(AlgebraError::BackendMismatch(self.describe(), x.backend().describe()))
    }

    /// A named variable (symbolic) or the adjoined generator (extension).
    pub fn variable(&self, name: &str) -> Result<Scalar> {
        match self {
            Backend::Symbolic(ctx) => {
                let i = ctx.index_of(name).ok_or_else(|| AlgebraError::UnknownVariable(name.into()))?;
                Ok(Scalar::Symbolic(RationalFunction::from_poly(LaurentPolynomial::var(ctx, i))))
            }
            Backend::Extension(m) if m.generator() == name => Ok(Scalar::Extension(ExtElement::generator(m))),
            _ => Err(AlgebraError::UnknownVariable(name.into())),
        }
    }

    pub fn is_symbolic(&self) -> bool {
        matches!(self, Backend::Symbolic(_))
    }

    pub fn describe(&self) -> String {
        match self {
            Backend::Symbolic(ctx) => format!("symbolic{ctx}"),
            Backend::Rational => "rational".to_string(),
            Backend::Extension(m) => format!("extension({})", m.render()),
        }
    }

    /// A primitive `n`-th root of unity available in this field, found among
    /// `±1` and `±z^k`.
    pub fn primitive_root_of_unity(&self, n: u32) -> Option<Scalar> {
        let mut candidates = vec![self.one(), self.one().neg()];
        if let Backend::Extension(m) = self {
            let z = Scalar::Extension(ExtElement::generator(m));
            let mut p = z.clone();
            for _ in 0..(4 * n.max(m.degree() as u32) + 8) {
                candidates.push(p.clone());
                candidates.push(-&p);
                p = &p * &z;
            }
        }
        let one = self.one();
        candidates.into_iter().find(|c| {
            c.powi(n as i32).map(|v| v == one).unwrap_or(false)
                && (1..n).all(|k| !n.is_multiple_of(k) || c.powi(k as i32).map(|v| v != one).unwrap_or(false))
        })
    }
}

impl fmt::Display for Backend {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.describe())
    }
}

/// Exact field element in one of three backends.
///
/// Fallible `try_*` methods report backend mismatches; the operator impls on
/// references panic on mismatch and are meant for code that has already
/// validated its inputs share a backend (e.g. entries of one matrix).
#[derive(Debug, Clone)]
pub enum Scalar {
    Symbolic(RationalFunction),
    Rational(Rational),
    Extension(ExtElement),
}

impl Scalar {
    pub fn backend(&self) -> Backend {
        match self {
            Scalar::Symbolic(r) => Backend::Symbolic(r.context().clone()),
            Scalar::Rational(_) => Backend::Rational,
            Scalar::Extension(e) => Backend::Extension(e.modulus().clone()),
        }
    }

    pub fn same_backend(&self, other: &Scalar) -> bool {
        match (self, other) {
            (Scalar::Symbolic(a), Scalar::Symbolic(b)) => Arc::ptr_eq(a.context(), b.context()) || a.context() == b.context(),
            (Scalar::Rational(_), Scalar::Rational(_)) => true,
            (Scalar::Extension(a), Scalar::Extension(b)) => Arc::ptr_eq(a.modulus(), b.modulus()) || a.modulus() == b.modulus(),
            _ => false,
        }
    }

    fn check(&self, other: &Scalar) -> Result<()> {
        if self.same_backend(other) {
            Ok(())
        } else {
            Err(AlgebraError::BackendMismatch(self.backend().describe(), other.backend().describe()))
        }
    }

    pub fn try_add(&self, other: &Scalar) -> Result<Scalar> {
        self.check(other)?;
        Ok(match (self, other) {
            (Scalar::Symbolic(a), Scalar::Symbolic(b)) => Scalar::Symbolic(a.add(b)),
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Extension(a), Scalar::Extension(b)) => Scalar::Extension(a.add(b)),
            _ => unreachable!(),
        })
    }

    pub fn try_sub(&self, other: &Scalar) -> Result<Scalar> {
        self.try_add(&other.neg())
    }

    pub fn try_mul(&self, other: &Scalar) -> Result<Scalar> {
        self.check(other)?;
        Ok(match (self, other) {
            (Scalar::Symbolic(a), Scalar::Symbolic(b)) => Scalar::Symbolic(a.mul(b)),
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Extension(a), Scalar::Extension(b)) => Scalar::Extension(a.mul(b)),
            _ => unreachable!(),
        })
    }

    pub fn try_div(&self, other: &Scalar) -> Result<Scalar> {
        self.check(other)?;
        self.try_mul(&other.inv()?)
    }

    /// Field equality; for rational functions decided by cross-multiplication.
    pub fn try_eq(&self, other: &Scalar) -> Result<bool> {
        self.check(other)?;
        Ok(match (self, other) {
            (Scalar::Symbolic(a), Scalar::Symbolic(b)) => a.field_eq(b),
            (Scalar::Rational(a), Scalar::Rational(b)) => a == b,
            (Scalar::Extension(a), Scalar::Extension(b)) => a == b,
            _ => unreachable!(),
        })
    }

    pub fn neg(&self) -> Scalar {
        match self {
            Scalar::Symbolic(a) => Scalar::Symbolic(a.neg()),
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Extension(a) => Scalar::Extension(a.neg()),
        }
    }

    pub fn inv(&self) -> Result<Scalar> {
        match self {
            Scalar::Symbolic(a) => Ok(Scalar::Symbolic(a.inv()?)),
            Scalar::Rational(a) => {
                if a.is_zero() {
                    Err(AlgebraError::DivisionByZero)
                } else {
                    Ok(Scalar::Rational(a.recip()))
                }
            }
            Scalar::Extension(a) => Ok(Scalar::Extension(a.inv()?)),
        }
    }

    pub fn scale(&self, c: &Rational) -> Scalar {
        match self {
            Scalar::Symbolic(a) => Scalar::Symbolic(a.scale(c)),
            Scalar::Rational(a) => Scalar::Rational(a * c),
            Scalar::Extension(a) => Scalar::Extension(a.mul(&ExtElement::from_rational(a.modulus(), c.clone()))),
        }
    }

    pub fn powi(&self, n: i32) -> Result<Scalar> {
        if n < 0 {
            return self.inv()?.powi(-n);
        }
        if let Scalar::Symbolic(a) = self {
            return Ok(Scalar::Symbolic(a.pow(n)?));
        }
        let mut acc = self.backend().one();
        let mut base = self.clone();
        let mut k = n as u32;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        Ok(acc)
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Symbolic(a) => a.is_zero(),
            Scalar::Rational(a) => a.is_zero(),
            Scalar::Extension(a) => a.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        self.as_rational().is_some_and(|c| c.is_one())
    }

    /// `Some(c)` when the element is (the image of) a rational constant.
    pub fn as_rational(&self) -> Option<Rational> {
        match self {
            Scalar::Symbolic(a) => a.as_constant(),
            Scalar::Rational(a) => Some(a.clone()),
            Scalar::Extension(a) => a.as_rational(),
        }
    }

    pub fn as_symbolic(&self) -> Option<&RationalFunction> {
        match self {
            Scalar::Symbolic(a) => Some(a),
            _ => None,
        }
    }

    /// Canonical text form (no whitespace).
    pub fn render(&self) -> String {
        match self {
            Scalar::Symbolic(a) => a.render(),
            Scalar::Rational(a) => fmt_rational(a),
            Scalar::Extension(a) => a.render(),
        }
    }

    /// Evaluates a symbolic scalar by substituting every variable.
    ///
    /// `assignment` maps variable names to scalars of one target backend;
    /// the result lives in that backend.
    pub fn specialize(&self, assignment: &HashMap<String, Scalar>, target: &Backend) -> Result<Scalar> {
        let Scalar::Symbolic(rf) = self else {
            return target.embed(self);
        };
        let ctx = rf.context();
        let mut values = Vec::with_capacity(ctx.arity());
        for name in ctx.names() {
            let v = assignment.get(name).ok_or_else(|| AlgebraError::MissingVariable(name.clone()))?;
            values.push(target.embed(v)?);
        }
        let den = eval_poly(rf.denom(), &values, target)?;
        if den.is_zero() {
            return Err(AlgebraError::VanishingDenominator);
        }
        let num = eval_poly(rf.numer(), &values, target)?;
        num.try_div(&den)
    }
}

fn eval_poly(p: &LaurentPolynomial, values: &[Scalar], target: &Backend) -> Result<Scalar> {
    let mut acc = target.zero();
    let mut cache: HashMap<(usize, i32), Scalar> = HashMap::new();
    for (exps, c) in p.terms() {
        let mut term = target.from_rational(c.clone());
        for (i, &e) in exps.iter().enumerate() {
            if e == 0 {
                continue;
            }
            let pw = match cache.get(&(i, e)) {
                Some(v) => v.clone(),
                None => {
                    let v = values[i].powi(e).map_err(|err| match err {
                        AlgebraError::DivisionByZero => AlgebraError::VanishingDenominator,
                        other => other,
                    })?;
                    cache.insert((i, e), v.clone());
                    v
                }
            };
            term = term.try_mul(&pw)?;
        }
        acc = acc.try_add(&term)?;
    }
    Ok(acc)
}

impl PartialEq for Scalar {
    /// Field equality; scalars of different backends compare unequal.
    fn eq(&self, other: &Self) -> bool {
        self.try_eq(other).unwrap_or(false)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

macro_rules! forward_op {
    ($tr:ident, $m:ident, $try:ident) => {
        impl $tr<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $m(self, rhs: &Scalar) -> Scalar {
                self.$try(rhs).expect("scalar backend mismatch")
            }
        }
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $m(self, rhs: Scalar) -> Scalar {
                (&self).$try(&rhs).expect("scalar backend mismatch")
            }
        }
    };
}

forward_op!(Add, add, try_add);
forward_op!(Sub, sub, try_sub);
forward_op!(Mul, mul, try_mul);

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::neg(self)
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::neg(&self)
    }
}
