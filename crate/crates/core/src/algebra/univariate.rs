use std::fmt;

use super::matrix::SquareMatrix;
use super::scalar::{Backend, Scalar};
use crate::error::{AlgebraError, Result};

/// Univariate polynomial in `x` with [`Scalar`] coefficients (low to high).
#[derive(Debug, Clone)]
pub struct UniPoly {
    backend: Backend,
    coeffs: Vec<Scalar>,
}

impl UniPoly {
    pub fn new(backend: &Backend, coeffs: Vec<Scalar>) -> Result<Self> {
        for c in &coeffs {
            if c.backend() != *backend {
                return Err(AlgebraError::BackendMismatch(backend.describe(), c.backend().describe()));
            }
        }
        Ok(Self::trimmed(backend.clone(), coeffs))
    }

    fn trimmed(backend: Backend, mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { backend, coeffs }
    }

    pub fn zero(backend: &Backend) -> Self {
        Self { backend: backend.clone(), coeffs: Vec::new() }
    }

    pub fn one(backend: &Backend) -> Self {
        Self { backend: backend.clone(), coeffs: vec![backend.one()] }
    }

    /// `x - root`.
    pub fn linear(root: &Scalar) -> Self {
        let b = root.backend();
        Self { coeffs: vec![root.neg(), b.one()], backend: b }
    }

    /// `∏ (x - r)` over the given roots.
    pub fn from_roots(backend: &Backend, roots: &[Scalar]) -> Result<Self> {
        let mut p = Self::one(backend);
        for r in roots {
            let r = backend.embed(r)?;
            p = p.mul(&Self::linear(&r));
        }
        Ok(p)
    }

    pub fn backend(&self) -> &Backend {
        &self.backend
    }

    pub fn coefficients(&self) -> &[Scalar] {
        &self.coeffs
    }

    /// Degree, with `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(|c| c.is_one())
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let zero = self.backend.zero();
        let coeffs = (0..n).map(|i| self.coeffs.get(i).unwrap_or(&zero) + other.coeffs.get(i).unwrap_or(&zero)).collect();
        Self::trimmed(self.backend.clone(), coeffs)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(&self.backend);
        }
        let mut out = vec![self.backend.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        Self::trimmed(self.backend.clone(), out)
    }

    /// Division with remainder; the divisor must be nonzero.
    pub fn divrem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let db = divisor.degree().ok_or(AlgebraError::DivisionByZero)?;
        let lead_inv = divisor.coeffs[db].inv()?;
        let mut r = self.coeffs.clone();
        if r.len() <= db {
            return Ok((Self::zero(&self.backend), self.clone()));
        }
        let mut q = vec![self.backend.zero(); r.len() - db];
        while r.len() > db {
            let shift = r.len() - 1 - db;
            let c = r.last().expect("nonempty") * &lead_inv;
            if !c.is_zero() {
                for (i, bc) in divisor.coeffs.iter().enumerate() {
                    r[shift + i] = &r[shift + i] - &(&c * bc);
                }
            }
            q[shift] = c;
            r.pop();
        }
        Ok((Self::trimmed(self.backend.clone(), q), Self::trimmed(self.backend.clone(), r)))
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        let mut acc = self.backend.zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    /// Horner evaluation at a square matrix.
    pub fn eval_matrix(&self, m: &SquareMatrix) -> Result<SquareMatrix> {
        let id = SquareMatrix::identity(m.backend(), m.dim())?;
        let mut acc = SquareMatrix::zero(m.backend(), m.dim())?;
        for c in self.coeffs.iter().rev() {
            acc = acc.try_mul(m)?.try_add(&id.scale(c)?)?;
        }
        Ok(acc)
    }

    /// Renders in `x`, highest degree first, e.g. `x^2+(-l1-l2)*x+l1*l2`.
    pub fn render(&self) -> String {
        if self.coeffs.is_empty() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mono = match k {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{k}"),
            };
            let coef = c.render();
            let term = if mono.is_empty() {
                coef
            } else if c.is_one() {
                mono
            } else if c.neg().is_one() {
                format!("-{mono}")
            } else if c.as_rational().is_some() {
                format!("{coef}*{mono}")
            } else {
                format!("({coef})*{mono}")
            };
            if !out.is_empty() && !term.starts_with('-') {
                out.push('+');
            }
            out.push_str(&term);
        }
        out
    }
}

impl PartialEq for UniPoly {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs.len() == other.coeffs.len() && self.coeffs.iter().zip(&other.coeffs).all(|(a, b)| a == b)
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_scalar;

    #[test]
    fn roots_and_division() {
        let b = Backend::Rational;
        let p = UniPoly::from_roots(&b, &[b.from_int(1), b.from_int(2), b.from_int(2)]).unwrap();
        assert_eq!(p.render(), "x^3-5*x^2+8*x-4");
        let d = UniPoly::from_roots(&b, &[b.from_int(2)]).unwrap();
        let (q, r) = p.divrem(&d).unwrap();
        assert!(r.is_zero());
        assert_eq!(q.render(), "x^2-3*x+2");
        assert!(p.eval(&b.from_int(2)).is_zero());
    }

    #[test]
    fn symbolic_render() {
        let b = Backend::symbolic(&["l1", "l2"]).unwrap();
        let roots = [parse_scalar("l1", &b).unwrap(), parse_scalar("l2", &b).unwrap()];
        let p = UniPoly::from_roots(&b, &roots).unwrap();
        assert_eq!(p.render(), "x^2+(-l1-l2)*x+l1*l2");
    }
}
