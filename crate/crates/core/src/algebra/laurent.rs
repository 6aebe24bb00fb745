use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use smallvec::SmallVec;

use super::context::VarContext;
use super::{fmt_rational, Rational};

/// Exponent vector of a Laurent monomial; one (possibly negative) entry per
/// context variable.
pub type Exponents = SmallVec<[i32; 6]>;

/// Graded-lex comparison: total degree first, then lexicographic in the
/// context's variable order.
pub fn grlex_cmp(a: &[i32], b: &[i32]) -> Ordering {
    let da: i64 = a.iter().map(|&e| e as i64).sum();
    let db: i64 = b.iter().map(|&e| e as i64).sum();
    da.cmp(&db).then_with(|| a.cmp(b))
}

/// Sparse Laurent polynomial over the rationals.
///
/// Terms are kept sorted in descending graded-lex order with no zero
/// coefficients, so structural equality is polynomial equality.
#[derive(Clone, Debug)]
pub struct LaurentPolynomial {
    ctx: Arc<VarContext>,
    terms: Vec<(Exponents, Rational)>,
}

impl PartialEq for LaurentPolynomial {
    fn eq(&self, other: &Self) -> bool {
        self.ctx == other.ctx && self.terms == other.terms
    }
}

impl Eq for LaurentPolynomial {}

impl LaurentPolynomial {
    pub fn zero(ctx: &Arc<VarContext>) -> Self {
        Self { ctx: ctx.clone(), terms: Vec::new() }
    }

    pub fn constant(ctx: &Arc<VarContext>, c: Rational) -> Self {
        Self::monomial(ctx, c, Exponents::from_elem(0, ctx.arity()))
    }

    pub fn one(ctx: &Arc<VarContext>) -> Self {
        Self::constant(ctx, Rational::one())
    }

    pub fn monomial(ctx: &Arc<VarContext>, c: Rational, exps: Exponents) -> Self {
        debug_assert_eq!(exps.len(), ctx.arity());
        if c.is_zero() {
            return Self::zero(ctx);
        }
        Self { ctx: ctx.clone(), terms: vec![(exps, c)] }
    }

    /// The variable at position `index` of the context.
    pub fn var(ctx: &Arc<VarContext>, index: usize) -> Self {
        let mut exps = Exponents::from_elem(0, ctx.arity());
        exps[index] = 1;
        Self::monomial(ctx, Rational::one(), exps)
    }

    /// Builds a polynomial from arbitrary (possibly repeated, possibly zero)
    /// terms.
    pub fn from_terms(ctx: &Arc<VarContext>, terms: impl IntoIterator<Item = (Exponents, Rational)>) -> Self {
        let mut acc: HashMap<Exponents, Rational> = HashMap::new();
        for (e, c) in terms {
            debug_assert_eq!(e.len(), ctx.arity());
            *acc.entry(e).or_insert_with(Rational::zero) += c;
        }
        Self::from_map(ctx, acc)
    }

    fn from_map(ctx: &Arc<VarContext>, acc: HashMap<Exponents, Rational>) -> Self {
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_by(|a, b| grlex_cmp(&b.0, &a.0));
        Self { ctx: ctx.clone(), terms }
    }

    pub fn context(&self) -> &Arc<VarContext> {
        &self.ctx
    }

    pub fn terms(&self) -> &[(Exponents, Rational)] {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.as_constant().is_some_and(|c| c.is_one())
    }

    /// `Some(c)` when the polynomial is the constant `c` (including zero).
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.as_slice() {
            [] => Some(Rational::zero()),
            [(e, c)] if e.iter().all(|&x| x == 0) => Some(c.clone()),
            _ => None,
        }
    }

    /// `Some((c, e))` when the polynomial is a single term `c * x^e`.
    pub fn as_monomial(&self) -> Option<(&Rational, &Exponents)> {
        match self.terms.as_slice() {
            [(e, c)] => Some((c, e)),
            _ => None,
        }
    }

    pub fn leading_coefficient(&self) -> Option<&Rational> {
        self.terms.first().map(|(_, c)| c)
    }

    pub fn neg(&self) -> Self {
        Self { ctx: self.ctx.clone(), terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.merge(other, false)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.merge(other, true)
    }

    fn merge(&self, other: &Self, negate: bool) -> Self {
        debug_assert!(self.ctx == other.ctx);
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() || j < b.len() {
            let ord = if i == a.len() {
                Ordering::Less
            } else if j == b.len() {
                Ordering::Greater
            } else {
                grlex_cmp(&a[i].0, &b[j].0)
            };
            match ord {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = if negate { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0.clone(), c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        Self { ctx: self.ctx.clone(), terms: out }
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert!(self.ctx == other.ctx);
        if self.is_zero() || other.is_zero() {
            return Self::zero(&self.ctx);
        }
        if let Some((c, e)) = other.as_monomial() {
            return self.mul_term(c, e);
        }
        if let Some((c, e)) = self.as_monomial() {
            return other.mul_term(c, e);
        }
        let mut acc: HashMap<Exponents, Rational> = HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Exponents = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                let prod = ca * cb;
                match acc.get_mut(&e) {
                    Some(v) => *v += prod,
                    None => {
                        acc.insert(e, prod);
                    }
                }
            }
        }
        Self::from_map(&self.ctx, acc)
    }

    /// Multiplies by the single term `c * x^e`; the term order is preserved.
    pub fn mul_term(&self, c: &Rational, e: &[i32]) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ctx);
        }
        Self { ctx: self.ctx.clone(), terms: self.terms.iter().map(|(ea, ca)| (ea.iter().zip(e).map(|(x, y)| x + y).collect(), ca * c)).collect() }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        self.mul_term(c, &Exponents::from_elem(0, self.ctx.arity()))
    }

    pub fn pow(&self, mut n: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(&self.ctx);
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Componentwise minimum exponent over all terms (the monomial content).
    pub fn min_exponents(&self) -> Exponents {
        let mut it = self.terms.iter();
        let Some((first, _)) = it.next() else {
            return Exponents::from_elem(0, self.ctx.arity());
        };
        let mut m = first.clone();
        for (e, _) in it {
            for (a, b) in m.iter_mut().zip(e) {
                *a = (*a).min(*b);
            }
        }
        m
    }

    /// Positive rational `g` such that `self / g` has coprime integer
    /// coefficients.
    pub fn rational_content(&self) -> Rational {
        let mut num = num_bigint::BigInt::zero();
        let mut den = num_bigint::BigInt::one();
        for (_, c) in &self.terms {
            num = num.gcd(c.numer());
            den = den.lcm(c.denom());
        }
        if num.is_zero() {
            return Rational::one();
        }
        Rational::new(num.abs(), den)
    }

    /// Does any term carry a nonzero exponent for the variable?
    pub fn involves(&self, var: usize) -> bool {
        self.terms.iter().any(|(e, _)| e[var] != 0)
    }

    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (e, c)) in self.terms.iter().enumerate() {
            let term = render_term(&self.ctx, c, e);
            if k > 0 && !term.starts_with('-') {
                out.push('+');
            }
            out.push_str(&term);
        }
        out
    }
}

fn render_term(ctx: &VarContext, c: &Rational, e: &[i32]) -> String {
    let mono: Vec<String> =
        ctx.names().iter().zip(e).filter(|(_, &x)| x != 0).map(|(n, &x)| if x == 1 { n.clone() } else { format!("{n}^{x}") }).collect();
    if mono.is_empty() {
        return fmt_rational(c);
    }
    let mono = mono.join("*");
    if c.is_one() {
        mono
    } else if (-c).is_one() {
        format!("-{mono}")
    } else {
        format!("{}*{mono}", fmt_rational(c))
    }
}

impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    fn ctx() -> Arc<VarContext> {
        VarContext::new(&["l1", "l2"]).unwrap()
    }

    #[test]
    fn add_cancels_and_orders() {
        let c = ctx();
        let x = LaurentPolynomial::var(&c, 0);
        let y = LaurentPolynomial::var(&c, 1);
        let s = x.add(&y);
        assert_eq!(s.render(), "l1+l2");
        assert!(s.sub(&x).sub(&y).is_zero());
    }

    #[test]
    fn inverse_monomials_cancel() {
        let c = ctx();
        let x = LaurentPolynomial::var(&c, 0);
        let xinv = LaurentPolynomial::monomial(&c, rat(1, 1), [-1, 0].into_iter().collect());
        assert!(x.mul(&xinv).is_one());
        assert_eq!(xinv.render(), "l1^-1");
    }

    #[test]
    fn graded_lex_render() {
        let c = ctx();
        let x = LaurentPolynomial::var(&c, 0);
        let y = LaurentPolynomial::var(&c, 1);
        let one = LaurentPolynomial::one(&c);
        // (x - y + 1)^2
        let p = x.sub(&y).add(&one).pow(2);
        assert_eq!(p.render(), "l1^2-2*l1*l2+l2^2+2*l1-2*l2+1");
    }

    #[test]
    fn content() {
        let c = ctx();
        let p = LaurentPolynomial::from_terms(&c, vec![([2, -1].into_iter().collect(), rat(4, 3)), ([1, 0].into_iter().collect(), rat(-2, 9))]);
        assert_eq!(p.rational_content(), rat(2, 9));
        assert_eq!(p.min_exponents().as_slice(), &[1, -1]);
    }
}
