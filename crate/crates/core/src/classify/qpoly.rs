use crate::algebra::{Scalar, SquareMatrix, UniPoly};
use crate::error::RepError;
use crate::rep::Rep;

fn check_index(i: usize, d: usize) -> Result<(), RepError> {
    if i < d {
        Ok(())
    } else {
        Err(RepError::IndexOutOfRange { index: i + 1, dim: d })
    }
}

/// `P_r(x) = ∏_{i≠r} (x − λ_i)` (0-based `r`).
pub fn p_poly(r: usize, eigenvalues: &[Scalar]) -> Result<UniPoly, RepError> {
    let d = eigenvalues.len();
    check_index(r, d)?;
    let b = eigenvalues[0].backend();
    let roots: Vec<Scalar> = eigenvalues.iter().enumerate().filter(|&(i, _)| i != r).map(|(_, v)| v.clone()).collect();
    Ok(UniPoly::from_roots(&b, &roots)?)
}

/// `P_i(λ_i) = ∏_{k≠i} (λ_i − λ_k)`.
pub fn p_value(i: usize, eigenvalues: &[Scalar]) -> Result<Scalar, RepError> {
    check_index(i, eigenvalues.len())?;
    let b = eigenvalues[0].backend();
    Ok(eigenvalues.iter().enumerate().filter(|&(k, _)| k != i).fold(b.one(), |acc, (_, l)| &acc * &(&eigenvalues[i] - l)))
}

/// Closed form of `Q_rs` (0-based `r ≠ s`).
///
/// `gamma` is `γ²` for `d = 4` (a square root of `det A`) and `γ` for
/// `d = 5` (a fifth root of `det A`); it is ignored for `d ≤ 3`.
pub fn q_closed(r: usize, s: usize, eigenvalues: &[Scalar], gamma: Option<&Scalar>) -> Result<Scalar, RepError> {
    let d = eigenvalues.len();
    check_index(r, d)?;
    check_index(s, d)?;
    if r == s {
        return Err(RepError::Constraint("Q_rs needs r != s".into()));
    }
    let l = eigenvalues;
    let (lr, ls) = (&l[r], &l[s]);
    let others: Vec<&Scalar> = (0..d).filter(|&k| k != r && k != s).map(|k| &l[k]).collect();
    let need_gamma = || -> Result<Scalar, RepError> {
        let g = gamma.ok_or_else(|| RepError::Constraint(format!("Q_rs for d={d} needs gamma")))?;
        Ok(lr.backend().embed(g)?)
    };
    Ok(match d {
        2 => &(&(lr * ls) - &(lr * lr)) - &(ls * ls),
        3 => {
            let k = others[0];
            &(&(lr * lr) + &(ls * k)) * &(&(ls * ls) + &(lr * k))
        }
        4 => {
            let g2 = need_gamma()?;
            let (k, m) = (others[0], others[1]);
            let f = &(&(&(&(lr * lr) + &g2) * &(&(ls * ls) + &g2)) * &(&(&g2 + &(lr * k)) + &(ls * m))) * &(&(&g2 + &(lr * m)) + &(ls * k));
            f.try_div(&g2)?.neg()
        }
        5 => {
            let g = need_gamma()?;
            let g2 = &g * &g;
            let tri = |x: &Scalar| &(&g2 + &(x * &g)) + &(x * x);
            let mut f = &tri(lr) * &tri(ls);
            for k in &others {
                f = &(&f * &(&g2 + &(lr * k))) * &(&g2 + &(ls * k));
            }
            f.try_div(&g.powi(8)?)?
        }
        _ => return Err(RepError::Unsupported(format!("Q_rs is only defined for d in 2..=5, got {d}"))),
    })
}

fn proportionality(lhs: &SquareMatrix, base: &SquareMatrix) -> Result<Scalar, RepError> {
    let d = base.dim();
    let (i, j) = (0..d * d)
        .map(|k| (k / d, k % d))
        .find(|&(i, j)| !base.get(i, j).is_zero())
        .ok_or_else(|| RepError::Constraint("P_r(A) vanishes, so the module is not simple".into()))?;
    let q = lhs.get(i, j).try_div(base.get(i, j))?;
    if *lhs != base.scale(&q)? {
        return Err(RepError::Internal("P_r(A) P_s(B) P_r(A) is not proportional to P_r(A)".into()));
    }
    Ok(q)
}

/// `Q` with `P_r(A) P_s(B) P_r(A) = Q · P_r(A)`, read off the matrices.
pub fn q_oracle(rep: &Rep, r: usize, s: usize) -> Result<Scalar, RepError> {
    let l = rep.spec.eigenvalues();
    let pa = p_poly(r, l)?.eval_matrix(&rep.a)?;
    let pb = p_poly(s, l)?.eval_matrix(&rep.b)?;
    proportionality(&pa.mul(&pb).mul(&pa), &pa)
}

/// Second route to `Q_{1d}` for matrices in ordered triangular form:
/// `P_1(B) P_d(A) = Q · E_dd`.
pub fn q_corner(rep: &Rep) -> Result<Scalar, RepError> {
    let d = rep.dim();
    let l = rep.spec.eigenvalues();
    let m = p_poly(0, l)?.eval_matrix(&rep.b)?.mul(&p_poly(d - 1, l)?.eval_matrix(&rep.a)?);
    let q = m.get(d - 1, d - 1).clone();
    let off_corner = (0..d * d).filter(|&k| k != d * d - 1).any(|k| !m.get(k / d, k % d).is_zero());
    if off_corner {
        return Err(RepError::Internal("P_1(B) P_d(A) is not a multiple of E_dd".into()));
    }
    Ok(q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{parse_scalar, rat, Backend, Modulus};
    use crate::rep::{build_rep, RepSpec};

    fn q(x: i64) -> Scalar {
        Scalar::Rational(rat(x, 1))
    }

    #[test]
    fn p_poly_shapes() {
        let b = Backend::symbolic(&["l1", "l2", "l3"]).unwrap();
        let l: Vec<Scalar> = ["l1", "l2", "l3"].iter().map(|n| b.variable(n).unwrap()).collect();
        assert_eq!(p_poly(0, &l[..2]).unwrap().render(), "x-l2");
        assert_eq!(p_poly(1, &l).unwrap().render(), "x^2+(-l1-l3)*x+l1*l3");
        assert!(matches!(p_poly(3, &l), Err(RepError::IndexOutOfRange { index: 4, dim: 3 })));
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(q_closed(0, 1, &[q(1), q(1)], None).unwrap(), q(-1));
        assert!(q_closed(0, 1, &[q(1), q(1), q(-1)], None).unwrap().is_zero());
        let e = Backend::Extension(Modulus::cyclotomic6());
        let z = e.variable("z").unwrap();
        assert!(q_closed(0, 1, &[e.one(), z], None).unwrap().is_zero());
        assert!(q_closed(0, 0, &[q(1), q(2)], None).is_err());
        assert!(q_closed(0, 1, &[q(1), q(2), q(3), q(4)], None).is_err());
    }

    #[test]
    fn oracle_matches_closed_form_d2_d3() {
        for d in 2..=3 {
            let rep = build_rep(&RepSpec::generic(d).unwrap()).unwrap();
            for r in 0..d {
                for s in 0..d {
                    if r != s {
                        let qc = q_closed(r, s, rep.spec.eigenvalues(), None).unwrap();
                        assert_eq!(q_oracle(&rep, r, s).unwrap(), qc, "d={d} r={r} s={s}");
                    }
                }
            }
        }
        let rep = build_rep(&RepSpec::generic(2).unwrap()).unwrap();
        let expect = parse_scalar("-l1^2+l1*l2-l2^2", rep.backend()).unwrap();
        assert_eq!(q_oracle(&rep, 0, 1).unwrap(), expect);
    }

    #[test]
    fn corner_route() {
        for d in 2..=3 {
            let rep = build_rep(&RepSpec::generic(d).unwrap()).unwrap();
            let qc = q_closed(0, d - 1, rep.spec.eigenvalues(), None).unwrap();
            assert_eq!(q_corner(&rep).unwrap(), qc);
        }
    }
}
