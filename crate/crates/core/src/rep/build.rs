use num_bigint::BigInt;
use num_integer::binomial;

use super::spec::{Family, RepSpec};
use crate::algebra::{Backend, Rational, Scalar, SquareMatrix};
use crate::error::RepError;

/// A pair of matrices `(A, B)` together with the spec it came from.
#[derive(Debug, Clone)]
pub struct Rep {
    pub spec: RepSpec,
    pub a: SquareMatrix,
    pub b: SquareMatrix,
}

impl Rep {
    pub fn dim(&self) -> usize {
        self.a.dim()
    }

    pub fn backend(&self) -> &Backend {
        self.a.backend()
    }
}

/// `b_ij = (−1)^{i+j} a_{ī,j̄}` with `ī = d−1−i` (0-based).
pub fn flip(a: &SquareMatrix) -> SquareMatrix {
    let d = a.dim();
    SquareMatrix::from_fn(a.backend(), d, |i, j| {
        let v = a.get(d - 1 - i, d - 1 - j).clone();
        if (i + j) % 2 == 1 {
            v.neg()
        } else {
            v
        }
    })
    .expect("same shape")
}

/// Builds the explicit ordered-triangular pair for a classified spec, or the
/// binomial pair for a binomial spec.
pub fn build_rep(spec: &RepSpec) -> Result<Rep, RepError> {
    if spec.family() == Family::Binomial {
        return build_binomial(spec);
    }
    let b = spec.backend().clone();
    let l = spec.eigenvalues();
    let one = b.one();
    let z = b.zero();
    let (a, bm) = match spec.dim() {
        2 => {
            let a = vec![vec![l[0].clone(), l[0].clone()], vec![z.clone(), l[1].clone()]];
            let bm = vec![vec![l[1].clone(), z.clone()], vec![l[1].neg(), l[0].clone()]];
            (a, bm)
        }
        3 => {
            // a12 = λ1λ3/λ2 + λ2
            let a12 = &(&l[0] * &l[2]).try_div(&l[1])? + &l[1];
            let a = vec![
                vec![l[0].clone(), a12.clone(), l[1].clone()],
                vec![z.clone(), l[1].clone(), l[1].clone()],
                vec![z.clone(), z.clone(), l[2].clone()],
            ];
            let bm = vec![
                vec![l[2].clone(), z.clone(), z.clone()],
                vec![l[1].neg(), l[1].clone(), z.clone()],
                vec![l[1].clone(), a12.neg(), l[0].clone()],
            ];
            (a, bm)
        }
        4 => {
            let dd = spec.root_param().expect("validated").clone();
            let di = dd.inv()?;
            let c = &(&one + &di) + &(&di * &di);
            let c1 = &one + &di;
            let d2 = &dd * &dd;
            let d3 = &d2 * &dd;
            let a = vec![
                vec![l[0].clone(), &c * &l[1], &c * &l[2], l[3].clone()],
                vec![z.clone(), l[1].clone(), &c1 * &l[2], l[3].clone()],
                vec![z.clone(), z.clone(), l[2].clone(), l[3].clone()],
                vec![z.clone(), z.clone(), z.clone(), l[3].clone()],
            ];
            let bm = vec![
                vec![l[3].clone(), z.clone(), z.clone(), z.clone()],
                vec![l[2].neg(), l[2].clone(), z.clone(), z.clone()],
                vec![&dd * &l[1], (&(&dd + &one) * &l[1]).neg(), l[1].clone(), z.clone()],
                vec![(&d3 * &l[0]).neg(), &(&(&d3 + &d2) + &dd) * &l[0], (&(&(&d2 + &dd) + &one) * &l[0]).neg(), l[0].clone()],
            ];
            (a, bm)
        }
        5 => {
            let a = classified5(spec)?;
            let bm = flip(&a);
            return finish(spec, a, bm);
        }
        d => return Err(RepError::Unsupported(format!("no classified construction for d={d}"))),
    };
    finish(spec, SquareMatrix::from_rows(&b, a)?, SquareMatrix::from_rows(&b, bm)?)
}

fn finish(spec: &RepSpec, a: SquareMatrix, b: SquareMatrix) -> Result<Rep, RepError> {
    Ok(Rep { spec: spec.clone(), a, b })
}

fn classified5(spec: &RepSpec) -> Result<SquareMatrix, RepError> {
    let b = spec.backend();
    let l = spec.eigenvalues();
    let g = spec.root_param().expect("validated");
    let one = b.one();
    let g2 = g * g;
    let g3 = &g2 * g;
    let a15 = g3.try_div(&(&l[0] * &l[4]))?;
    let a34 = &a15 + &l[2];
    let a24 = &a34 + g;
    let a23 = &(g + &l[2]) + &g2.try_div(&l[2])?;
    let l24 = &l[1] * &l[3];
    let a14 = &(&l24.try_div(&g2)? + &one) * &(&l[2] + &g3.try_div(&l24)?);
    let a12 = &(&one + &g2.try_div(&l24)?) * &(&l[1] + &g3.try_div(&(&l[2] * &l[3]))?);
    let a13 = &(&(&g2.try_div(&l[2])? + &l[2]) + g) * &(&one + &(&l[0] * &l[4]).try_div(&g2)?);
    let mut m = SquareMatrix::diagonal(b, l)?;
    let entries = [
        (0, 1, a12),
        (0, 2, a13),
        (0, 3, a14),
        (0, 4, a15.clone()),
        (1, 2, a23),
        (1, 3, a24),
        (1, 4, a15.clone()),
        (2, 3, a34),
        (2, 4, a15),
        (3, 4, l[3].clone()),
    ];
    for (i, j, v) in entries {
        m.set(i, j, v)?;
    }
    Ok(m)
}

fn build_binomial(spec: &RepSpec) -> Result<Rep, RepError> {
    let n = spec.dim();
    let d = n - 1;
    let b = spec.backend();
    let l = spec.eigenvalues();
    let coef = |top: usize, bottom: usize| -> Rational {
        if bottom > top {
            Rational::from_integer(BigInt::from(0))
        } else {
            Rational::from_integer(binomial(BigInt::from(top), BigInt::from(bottom)))
        }
    };
    // A = (C(ī, j̄) λ_j), B = ((−1)^{i+j} C(i, j) λ_ī) with ī = d − i.
    let a = SquareMatrix::from_fn(b, n, |i, j| l[j].scale(&coef(d - i, d - j)))?;
    let bm = SquareMatrix::from_fn(b, n, |i, j| {
        let v = l[d - i].scale(&coef(i, j));
        if (i + j) % 2 == 1 {
            v.neg()
        } else {
            v
        }
    })?;
    finish(spec, a, bm)
}

/// Convenience wrapper for the binomial family.
pub fn build_binomial_rep(params: Vec<Scalar>, c: Scalar) -> Result<Rep, RepError> {
    build_rep(&RepSpec::binomial(params, c)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{parse_scalar, rat};

    #[test]
    fn modular_group_images() {
        let one = Scalar::Rational(rat(1, 1));
        let rep = build_rep(&RepSpec::classified(vec![one.clone(), one], None).unwrap()).unwrap();
        assert_eq!(rep.a, SquareMatrix::from_ints(2, &[1, 1, 0, 1]).unwrap());
        assert_eq!(rep.b, SquareMatrix::from_ints(2, &[1, 0, -1, 1]).unwrap());
    }

    #[test]
    fn explicit_entries() {
        let r3 = build_rep(&RepSpec::generic(3).unwrap()).unwrap();
        let b3 = r3.backend().clone();
        let row: Vec<String> = (0..3).map(|j| r3.a.get(0, j).render()).collect();
        assert_eq!(row, ["l1", "l1*l2^-1*l3+l2", "l2"]);
        assert_eq!(*r3.a.get(0, 1), parse_scalar("l1*l3/l2 + l2", &b3).unwrap());
        let r4 = build_rep(&RepSpec::generic(4).unwrap()).unwrap();
        let expect = parse_scalar("(1 + D^-1 + D^-2)*l2", r4.backend()).unwrap();
        assert_eq!(*r4.a.get(0, 1), expect);
    }

    #[test]
    fn binomial_small() {
        let q = |x: i64| Scalar::Rational(rat(x, 1));
        let rep = build_binomial_rep(vec![q(4), q(2), q(1)], q(4)).unwrap();
        assert_eq!(rep.a, SquareMatrix::from_ints(3, &[4, 4, 1, 0, 2, 1, 0, 0, 1]).unwrap());
    }
}
