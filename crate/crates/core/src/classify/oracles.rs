use crate::algebra::{rank_of_rows, EchelonBasis, Scalar, SquareMatrix};
use crate::error::{AlgebraError, RepError};
use crate::rep::Rep;

/// Whether `A` and `B` generate the full matrix algebra, by closing the
/// span of words under right multiplication.
pub fn burnside_oracle(rep: &Rep) -> Result<bool, RepError> {
    Ok(generated_algebra_dim(&rep.a, &rep.b)? == rep.dim() * rep.dim())
}

/// Dimension of the algebra generated by `a` and `b`.
pub fn generated_algebra_dim(a: &SquareMatrix, b: &SquareMatrix) -> Result<usize, RepError> {
    let d = a.dim();
    if b.dim() != d {
        return Err(AlgebraError::DimensionMismatch(d, b.dim()).into());
    }
    let id = SquareMatrix::identity(a.backend(), d)?;
    let mut basis = EchelonBasis::new();
    basis.insert(id.entries().to_vec());
    let mut frontier = vec![id];
    let cap = 2 * d * d;
    let mut rounds = 0;
    while !frontier.is_empty() {
        rounds += 1;
        if rounds > cap {
            return Err(RepError::Internal("span closure did not stabilize".into()));
        }
        let mut next = Vec::new();
        for w in &frontier {
            for g in [a, b] {
                let v = w.try_mul(g)?;
                if basis.insert(v.entries().to_vec()) {
                    next.push(v);
                }
            }
        }
        frontier = next;
    }
    Ok(basis.rank())
}

/// `dim { X : X A₁ = A₂ X, X B₁ = B₂ X }`.
pub fn hom_space_dim(rep1: &Rep, rep2: &Rep) -> Result<usize, RepError> {
    let d = rep1.dim();
    if rep2.dim() != d {
        return Err(AlgebraError::DimensionMismatch(d, rep2.dim()).into());
    }
    if rep1.backend() != rep2.backend() {
        return Err(AlgebraError::BackendMismatch(rep1.backend().describe(), rep2.backend().describe()).into());
    }
    let n = d * d;
    let zero = rep1.backend().zero();
    let mut rows: Vec<Vec<Scalar>> = Vec::with_capacity(2 * n);
    for (m1, m2) in [(&rep1.a, &rep2.a), (&rep1.b, &rep2.b)] {
        // (X M1 − M2 X)_{ij} = Σ_k x_{ik} M1_{kj} − Σ_k M2_{ik} x_{kj}; x_{pq} ↦ column p·d + q.
        for i in 0..d {
            for j in 0..d {
                let mut row = vec![zero.clone(); n];
                for k in 0..d {
                    row[i * d + k] = &row[i * d + k] + m1.get(k, j);
                    row[k * d + j] = &row[k * d + j] - m2.get(i, k);
                }
                rows.push(row);
            }
        }
    }
    Ok(n - rank_of_rows(rows))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat, Backend};
    use crate::rep::{build_rep, rescale_basis, RepSpec};

    fn q(x: i64) -> Scalar {
        Scalar::Rational(rat(x, 1))
    }

    #[test]
    fn burnside_examples() {
        let rep = build_rep(&RepSpec::classified(vec![q(1), q(1)], None).unwrap()).unwrap();
        assert!(burnside_oracle(&rep).unwrap());
        let rep = build_rep(&RepSpec::classified(vec![q(1), q(1), q(-1)], None).unwrap()).unwrap();
        assert!(!burnside_oracle(&rep).unwrap());
        let id = SquareMatrix::identity(&Backend::Rational, 2).unwrap();
        assert_eq!(generated_algebra_dim(&id, &id).unwrap(), 1);
    }

    #[test]
    fn schur() {
        let rep = build_rep(&RepSpec::classified(vec![q(2), q(3), q(5)], None).unwrap()).unwrap();
        assert_eq!(hom_space_dim(&rep, &rep).unwrap(), 1);
        let other = rescale_basis(&rep, &[q(7), q(1), q(7)]).unwrap();
        assert_eq!(hom_space_dim(&rep, &other).unwrap(), 1);
        let swapped = build_rep(&RepSpec::classified(vec![q(3), q(2), q(5)], None).unwrap()).unwrap();
        assert_eq!(hom_space_dim(&rep, &swapped).unwrap(), 1);
        let different = build_rep(&RepSpec::classified(vec![q(2), q(3), q(7)], None).unwrap()).unwrap();
        assert_eq!(hom_space_dim(&rep, &different).unwrap(), 0);
    }
}
