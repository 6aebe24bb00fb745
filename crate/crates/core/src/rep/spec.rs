use crate::algebra::{Backend, Scalar};
use crate::error::RepError;

/// Which construction a spec feeds.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// The simple representations of dimension 2..=5 in ordered triangular form.
    Classified,
    /// The binomial-coefficient family of any size, with `λ_i λ_{n-1-i} = c`.
    Binomial,
}

impl Family {
    pub fn as_str(self) -> &'static str {
        match self {
            Family::Classified => "classified",
            Family::Binomial => "binomial",
        }
    }
}

/// Validated input data for a representation.
#[derive(Debug, Clone)]
pub struct RepSpec {
    family: Family,
    backend: Backend,
    eigenvalues: Vec<Scalar>,
    root_param: Option<Scalar>,
}

fn common_backend(values: &[Scalar]) -> Result<Backend, RepError> {
    let first = values.first().ok_or_else(|| RepError::Constraint("no eigenvalues given".into()))?;
    let b = first.backend();
    for v in values {
        if !v.same_backend(first) {
            return Err(crate::error::AlgebraError::BackendMismatch(b.describe(), v.backend().describe()).into());
        }
    }
    Ok(b)
}

fn check_nonzero(values: &[Scalar]) -> Result<(), RepError> {
    match values.iter().position(Scalar::is_zero) {
        Some(i) => Err(RepError::ZeroEigenvalue(i + 1)),
        None => Ok(()),
    }
}

impl RepSpec {
    /// Spec for the classified family. `root_param` is `D` for `d = 4`
    /// (with `D² = λ₂λ₃/(λ₁λ₄)`) and `γ` for `d = 5` (with `γ⁵ = ∏λ`);
    /// it must be absent for `d ≤ 3`.
    pub fn classified(eigenvalues: Vec<Scalar>, root_param: Option<Scalar>) -> Result<Self, RepError> {
        let d = eigenvalues.len();
        if !(2..=5).contains(&d) {
            return Err(RepError::Unsupported(format!("classified representations exist for d in 2..=5, got {d}")));
        }
        let backend = common_backend(&eigenvalues)?;
        check_nonzero(&eigenvalues)?;
        let root = match (d, root_param) {
            (2 | 3, None) => None,
            (2 | 3, Some(_)) => {
                return Err(RepError::Constraint(format!("no root parameter is used for d={d}")));
            }
            (_, None) => {
                let name = if d == 4 { "D" } else { "gamma" };
                return Err(RepError::Constraint(format!("d={d} requires the root parameter {name}")));
            }
            (_, Some(r)) => Some(backend.embed(&r)?),
        };
        let l = &eigenvalues;
        if d == 4 {
            let dd = root.as_ref().expect("checked");
            if dd.is_zero() {
                return Err(RepError::Constraint("root parameter D must be nonzero".into()));
            }
            if &(&(dd * dd) * &l[0]) * &l[3] != &l[1] * &l[2] {
                return Err(RepError::Constraint("D^2 = l2*l3/(l1*l4) does not hold".into()));
            }
        }
        if d == 5 {
            let g = root.as_ref().expect("checked");
            if g.is_zero() {
                return Err(RepError::Constraint("root parameter gamma must be nonzero".into()));
            }
            let prod = l.iter().fold(backend.one(), |acc, x| &acc * x);
            if g.powi(5)? != prod {
                return Err(RepError::Constraint("gamma^5 = l1*l2*l3*l4*l5 does not hold".into()));
            }
        }
        Ok(Self { family: Family::Classified, backend, eigenvalues, root_param: root })
    }

    /// Classified spec for `d = 4, 5` from the first `d − 1` eigenvalues and
    /// the root parameter; the last eigenvalue is solved for
    /// (`λ₄ = λ₂λ₃/(λ₁D²)`, resp. `λ₅ = γ⁵/(λ₁λ₂λ₃λ₄)`).
    pub fn classified_derived(leading: Vec<Scalar>, root_param: Scalar) -> Result<Self, RepError> {
        let d = leading.len() + 1;
        if !(4..=5).contains(&d) {
            return Err(RepError::Unsupported(format!("the last eigenvalue is derived only for d=4,5, got d={d}")));
        }
        let backend = common_backend(&leading)?;
        check_nonzero(&leading)?;
        let root = backend.embed(&root_param)?;
        if root.is_zero() {
            let name = if d == 4 { "D" } else { "gamma" };
            return Err(RepError::Constraint(format!("root parameter {name} must be nonzero")));
        }
        let l = &leading;
        let last = if d == 4 {
            (&l[1] * &l[2]).try_div(&(&l[0] * &(&root * &root)))?
        } else {
            root.powi(5)?.try_div(&l.iter().fold(backend.one(), |acc, x| &acc * x))?
        };
        let mut eigenvalues = leading;
        eigenvalues.push(last);
        Self::classified(eigenvalues, Some(root))
    }

    /// Fully symbolic classified spec: free `l1..ld` for `d ≤ 3`,
    /// `(l1, l2, l3, D)` for `d = 4` and `(l1, l2, l3, l4, g)` for `d = 5`.
    pub fn generic(d: usize) -> Result<Self, RepError> {
        match d {
            2 | 3 => {
                let names: Vec<String> = (1..=d).map(|i| format!("l{i}")).collect();
                let b = Backend::symbolic(&names)?;
                let eigs = names.iter().map(|n| b.variable(n)).collect::<Result<Vec<_>, _>>()?;
                Self::classified(eigs, None)
            }
            4 => {
                let b = Backend::symbolic(&["l1", "l2", "l3", "D"])?;
                let eigs = ["l1", "l2", "l3"].iter().map(|n| b.variable(n)).collect::<Result<Vec<_>, _>>()?;
                Self::classified_derived(eigs, b.variable("D")?)
            }
            5 => {
                let b = Backend::symbolic(&["l1", "l2", "l3", "l4", "g"])?;
                let eigs = ["l1", "l2", "l3", "l4"].iter().map(|n| b.variable(n)).collect::<Result<Vec<_>, _>>()?;
                Self::classified_derived(eigs, b.variable("g")?)
            }
            _ => Err(RepError::Unsupported(format!("classified representations exist for d in 2..=5, got {d}"))),
        }
    }

    /// Spec for the binomial family of matrix size `params.len()`, requiring
    /// `λ_i λ_{n−1−i} = c` for all `i`.
    pub fn binomial(params: Vec<Scalar>, c: Scalar) -> Result<Self, RepError> {
        let n = params.len();
        if !(2..=crate::algebra::MAX_DIM).contains(&n) {
            return Err(RepError::Unsupported(format!("binomial family needs matrix size 2..=8, got {n}")));
        }
        let backend = common_backend(&params)?;
        check_nonzero(&params)?;
        let c = backend.embed(&c)?;
        for i in 0..n {
            if &params[i] * &params[n - 1 - i] != c {
                return Err(RepError::Constraint(format!("lambda_{i} * lambda_{} != c", n - 1 - i)));
            }
        }
        Ok(Self { family: Family::Binomial, backend, eigenvalues: params, root_param: Some(c) })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    /// Matrix size.
    pub fn dim(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn backend(&self) -> &Backend {
        &self.backend
    }

    /// Diagonal of `A`, in order.
    pub fn eigenvalues(&self) -> &[Scalar] {
        &self.eigenvalues
    }

    /// `D` (d=4), `γ` (d=5) or the constant `c` (binomial family).
    pub fn root_param(&self) -> Option<&Scalar> {
        self.root_param.as_ref()
    }

    /// The root quantity the Q-polynomials use: `γ² = λ₂λ₃/D` for `d = 4`
    /// and `γ` for `d = 5`.
    pub fn gamma(&self) -> Option<Scalar> {
        if self.family != Family::Classified {
            return None;
        }
        match self.dim() {
            4 => {
                let l = &self.eigenvalues;
                (&l[1] * &l[2]).try_div(self.root_param.as_ref()?).ok()
            }
            5 => self.root_param.clone(),
            _ => None,
        }
    }
}
