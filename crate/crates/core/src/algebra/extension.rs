use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};

use super::context::is_identifier;
use super::{fmt_rational, Rational};
use crate::error::{AlgebraError, Result};

/// Monic modulus `m(x)` defining the field `Q[x]/(m)`.
///
/// Irreducibility is the caller's responsibility; a reducible modulus
/// surfaces as [`AlgebraError::NotInvertible`] on the first zero divisor.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Modulus {
    generator: String,
    /// Coefficients low to high; the last one is 1.
    coeffs: Vec<Rational>,
}

impl Modulus {
    pub fn new(generator: &str, coeffs: Vec<Rational>) -> Result<Arc<Self>> {
        if !is_identifier(generator) {
            return Err(AlgebraError::InvalidContext(format!("`{generator}` is not an identifier")));
        }
        let coeffs = trim(coeffs);
        if coeffs.len() < 2 || !coeffs.last().is_some_and(|c| c.is_one()) {
            return Err(AlgebraError::InvalidModulus);
        }
        Ok(Arc::new(Self { generator: generator.to_string(), coeffs }))
    }

    /// Sixth cyclotomic polynomial `z^2 - z + 1`; its root is a primitive
    /// sixth root of unity and `z - 1` is a primitive cube root.
    pub fn cyclotomic6() -> Arc<Self> {
        Self::new("z", vec![Rational::one(), -Rational::one(), Rational::one()]).expect("valid modulus")
    }

    /// Fifth cyclotomic polynomial `z^4 + z^3 + z^2 + z + 1`.
    pub fn cyclotomic5() -> Arc<Self> {
        Self::new("z", vec![Rational::one(); 5]).expect("valid modulus")
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn generator(&self) -> &str {
        &self.generator
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn render(&self) -> String {
        render_poly(&self.generator, &self.coeffs)
    }
}

impl fmt::Display for Modulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// Element of `Q[x]/(m)`, stored as its reduced representative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtElement {
    modulus: Arc<Modulus>,
    /// Low to high, length < deg(m), no trailing zeros.
    coeffs: Vec<Rational>,
}

impl ExtElement {
    pub fn from_rational(modulus: &Arc<Modulus>, c: Rational) -> Self {
        Self::reduce(modulus, vec![c])
    }

    pub fn generator(modulus: &Arc<Modulus>) -> Self {
        Self::reduce(modulus, vec![Rational::zero(), Rational::one()])
    }

    pub fn reduce(modulus: &Arc<Modulus>, coeffs: Vec<Rational>) -> Self {
        let (_, r) = poly_divrem(&trim(coeffs), &modulus.coeffs);
        Self { modulus: modulus.clone(), coeffs: r }
    }

    pub fn modulus(&self) -> &Arc<Modulus> {
        &self.modulus
    }

    pub fn coefficients(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn as_rational(&self) -> Option<Rational> {
        match self.coeffs.as_slice() {
            [] => Some(Rational::zero()),
            [c] => Some(c.clone()),
            _ => None,
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n)
            .map(|i| {
                let a = self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero);
                let b = other.coeffs.get(i).cloned().unwrap_or_else(Rational::zero);
                a + b
            })
            .collect();
        Self { modulus: self.modulus.clone(), coeffs: trim(coeffs) }
    }

    pub fn neg(&self) -> Self {
        Self { modulus: self.modulus.clone(), coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::reduce(&self.modulus, poly_mul(&self.coeffs, &other.coeffs))
    }

    /// Inverse via the extended Euclidean algorithm in `Q[x]`.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        let (g, s) = ext_gcd(&self.coeffs, &self.modulus.coeffs);
        if g.len() != 1 {
            return Err(AlgebraError::NotInvertible(self.modulus.render()));
        }
        let inv_g = g[0].recip();
        let s: Vec<Rational> = s.into_iter().map(|c| c * &inv_g).collect();
        Ok(Self::reduce(&self.modulus, s))
    }

    pub fn render(&self) -> String {
        render_poly(&self.modulus.generator, &self.coeffs)
    }
}

pub(crate) fn trim(mut v: Vec<Rational>) -> Vec<Rational> {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn poly_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let n = a.len().max(b.len());
    trim((0..n).map(|i| a.get(i).cloned().unwrap_or_else(Rational::zero) - b.get(i).cloned().unwrap_or_else(Rational::zero)).collect())
}

/// Division with remainder over `Q`; `b` must be nonzero.
fn poly_divrem(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut r = trim(a.to_vec());
    let db = b.len() - 1;
    let lead_inv = b[db].recip();
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let mut q = vec![Rational::zero(); r.len() - db];
    while r.len() >= b.len() {
        let shift = r.len() - b.len();
        let c = r.last().unwrap() * &lead_inv;
        for (i, bc) in b.iter().enumerate() {
            r[shift + i] -= &c * bc;
        }
        q[shift] = c;
        r = trim(r);
    }
    (trim(q), r)
}

/// Returns `(g, s)` with `g = gcd(a, m)` and `s * a ≡ g (mod m)`.
fn ext_gcd(a: &[Rational], m: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let (mut r0, mut r1) = (m.to_vec(), a.to_vec());
    let (mut s0, mut s1): (Vec<Rational>, Vec<Rational>) = (Vec::new(), vec![Rational::one()]);
    while !r1.is_empty() {
        let (q, r) = poly_divrem(&r0, &r1);
        let s2 = poly_sub(&s0, &poly_mul(&q, &s1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s2);
    }
    (r0, s0)
}

fn render_poly(var: &str, coeffs: &[Rational]) -> String {
    if coeffs.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (k, c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let term = match k {
            0 => fmt_rational(c),
            _ => {
                let mono = if k == 1 { var.to_string() } else { format!("{var}^{k}") };
                if c.is_one() {
                    mono
                } else if (-c).is_one() {
                    format!("-{mono}")
                } else {
                    format!("{}*{mono}", fmt_rational(c))
                }
            }
        };
        if !out.is_empty() && !term.starts_with('-') {
            out.push('+');
        }
        out.push_str(&term);
    }
    out
}
