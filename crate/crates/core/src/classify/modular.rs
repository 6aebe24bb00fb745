use serde::Serialize;

use crate::algebra::{Scalar, SquareMatrix};
use crate::error::RepError;
use crate::rep::{build_rep, structure_report, Rep, RepSpec};

fn require_specialized(spec_backend_symbolic: bool, what: &str) -> Result<(), RepError> {
    if spec_backend_symbolic {
        Err(RepError::Unsupported(format!("{what} needs specialized (non-symbolic) eigenvalues")))
    } else {
        Ok(())
    }
}

/// `δ` with `(ABA)² = δ·I` for the spec's representation.
pub fn delta(spec: &RepSpec) -> Result<Scalar, RepError> {
    let rep = build_rep(spec)?;
    structure_report(&rep)?.delta.ok_or_else(|| RepError::Internal("(ABA)^2 is not scalar".into()))
}

/// `(δ² = 1, δ = 1)`: whether the representation factors through
/// `SL(2,Z)`, resp. `PSL(2,Z)`.
pub fn sl2z_flags(spec: &RepSpec) -> Result<(bool, bool), RepError> {
    require_specialized(spec.backend().is_symbolic(), "the SL(2,Z) test")?;
    let dl = delta(spec)?;
    Ok(((&dl * &dl).is_one(), dl.is_one()))
}

/// Result of the determinant criterion over all proper eigenvalue subsets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeligneOutcome {
    /// `(λ₁⋯λ_d)^{6r} = (∏_{i∈S} λ_i)^{6d}` failed for every proper subset.
    pub certificate: bool,
    /// 1-based subsets for which the equation holds.
    pub holding_subsets: Vec<Vec<usize>>,
}

/// If the equation fails for every proper nonempty subset, the module is
/// necessarily simple; otherwise nothing follows.
pub fn deligne_check(spec: &RepSpec) -> Result<DeligneOutcome, RepError> {
    require_specialized(spec.backend().is_symbolic(), "the determinant criterion")?;
    let l = spec.eigenvalues();
    let d = l.len();
    let total = l.iter().fold(spec.backend().one(), |acc, x| &acc * x);
    let mut holding = Vec::new();
    for mask in 1u32..((1 << d) - 1) {
        let r = mask.count_ones() as i32;
        let sub = (0..d).filter(|&i| mask & (1 << i) != 0).fold(spec.backend().one(), |acc, i| &acc * &l[i]);
        if total.powi(6 * r)? == sub.powi(6 * d as i32)? {
            holding.push((0..d).filter(|&i| mask & (1 << i) != 0).map(|i| i + 1).collect());
        }
    }
    Ok(DeligneOutcome { certificate: holding.is_empty(), holding_subsets: holding })
}

/// Eigenspace dimensions after normalizing to a `PSL(2,Z)` representation.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WestburyDims {
    /// Multiplicities of `+1, −1` for `A'B'A'`.
    pub n: [usize; 2],
    /// Multiplicities of `1, ω, ω²` for `A'B'`.
    pub m: [usize; 3],
}

impl WestburyDims {
    pub fn sums_ok(&self, d: usize) -> bool {
        self.n.iter().sum::<usize>() == d && self.m.iter().sum::<usize>() == d
    }

    /// `n_i ≥ m_j` for all `i, j`.
    pub fn inequality_ok(&self) -> bool {
        self.n.iter().min() >= self.m.iter().max()
    }
}

fn eigenspace_dim(m: &SquareMatrix, value: &Scalar) -> Result<usize, RepError> {
    let id = SquareMatrix::identity(m.backend(), m.dim())?;
    Ok(m.try_sub(&id.scale(value)?)?.nullspace_dim())
}

/// Eigenspace dimensions of `A'B'A'` (for `±1`) and `A'B'` (for the cube
/// roots of unity), where `A' = A/ρ`, `B' = B/ρ` and `ρ⁶ = δ`.
///
/// The backend must contain a primitive cube root of unity.
pub fn westbury_dims(rep: &Rep, sixth_root: &Scalar) -> Result<WestburyDims, RepError> {
    let b = rep.backend().clone();
    let rho = b.embed(sixth_root)?;
    let dl = structure_report(rep)?.delta.ok_or_else(|| RepError::Internal("(ABA)^2 is not scalar".into()))?;
    if rho.powi(6)? != dl {
        return Err(RepError::Constraint("sixth_root^6 != delta".into()));
    }
    let omega = b.primitive_root_of_unity(3).ok_or_else(|| RepError::Unsupported(format!("backend {b} has no primitive cube root of unity")))?;
    let inv = rho.inv()?;
    let a = rep.a.scale(&inv)?;
    let bb = rep.b.scale(&inv)?;
    let ab = a.mul(&bb);
    let aba = ab.mul(&a);
    let n = [eigenspace_dim(&aba, &b.one())?, eigenspace_dim(&aba, &b.one().neg())?];
    let m = [eigenspace_dim(&ab, &b.one())?, eigenspace_dim(&ab, &omega)?, eigenspace_dim(&ab, &(&omega * &omega))?];
    Ok(WestburyDims { n, m })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat, Backend, Modulus};

    fn q(x: i64) -> Scalar {
        Scalar::Rational(rat(x, 1))
    }

    #[test]
    fn delta_flags() {
        let (sl, psl) = sl2z_flags(&RepSpec::classified(vec![q(1), q(1)], None).unwrap()).unwrap();
        assert!(sl && !psl);
        let (sl, psl) = sl2z_flags(&RepSpec::classified(vec![q(2), Scalar::Rational(rat(-1, 2))], None).unwrap()).unwrap();
        assert!(sl && psl);
        let (_, psl) = sl2z_flags(&RepSpec::classified(vec![q(2), Scalar::Rational(rat(1, 4)), q(2)], None).unwrap()).unwrap();
        assert!(psl);
        assert!(sl2z_flags(&RepSpec::generic(2).unwrap()).is_err());
    }

    #[test]
    fn deligne_examples() {
        let c = deligne_check(&RepSpec::classified(vec![q(1), q(2)], None).unwrap()).unwrap();
        assert!(c.certificate);
        let c = deligne_check(&RepSpec::classified(vec![q(1), q(1)], None).unwrap()).unwrap();
        assert!(!c.certificate);
        assert_eq!(c.holding_subsets, vec![vec![1], vec![2]]);
    }

    #[test]
    fn westbury_d2() {
        let e = Backend::Extension(Modulus::cyclotomic6());
        let spec = RepSpec::classified(vec![e.one(), e.one()], None).unwrap();
        let rep = build_rep(&spec).unwrap();
        // δ = −1 here, and 1 is not a sixth root of it.
        assert!(westbury_dims(&rep, &e.one()).is_err());
        let spec = RepSpec::classified(vec![e.from_int(2), e.from_rational(rat(-1, 2))], None).unwrap();
        let rep = build_rep(&spec).unwrap();
        let w = westbury_dims(&rep, &e.one()).unwrap();
        assert!(w.sums_ok(2) && w.inequality_ok());
        assert!(westbury_dims(&build_rep(&RepSpec::classified(vec![q(2), Scalar::Rational(rat(-1, 2))], None).unwrap()).unwrap(), &q(1)).is_err());
    }
}
