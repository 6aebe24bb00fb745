//! Categorical dimensions of the summands of `Z ⊗ Z` from braid
//! eigenvalues, compared with closed bracket formulas.

use std::collections::HashMap;

use serde::Serialize;

use crate::algebra::{Backend, Scalar};
use crate::classify::{p_value, q_closed};
use crate::error::RepError;
use crate::rep::{build_rep, structure_report, RepSpec};

/// Which family of closed formulas the brackets belong to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Series {
    /// Orthogonal/symplectic: variables `q, r` (and `a` for the fourth root
    /// of unity `α`).
    Bcd,
    /// Exceptional series: variables `u = s^{1/2}`, `w = t^{1/2}`.
    Exceptional,
}

impl Series {
    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "bcd" => Some(Series::Bcd),
            "exceptional" => Some(Series::Exceptional),
            _ => None,
        }
    }
}

/// Symbolic ring for the bracket expressions.
///
/// Exceptional: `[n] = uⁿ − u⁻ⁿ`, `[kλ+n] = wᵏuⁿ − w⁻ᵏu⁻ⁿ`.
/// BCD: `[n] = qⁿ − q⁻ⁿ`, `[kλ+n] = rᵏqⁿ − r⁻ᵏq⁻ⁿ`.
#[derive(Debug, Clone)]
pub struct BracketContext {
    series: Series,
    backend: Backend,
    base: Scalar,
    lambda: Scalar,
}

impl BracketContext {
    pub fn exceptional() -> Self {
        let backend = Backend::symbolic(&["u", "w"]).expect("valid names");
        let base = backend.variable("u").expect("declared");
        let lambda = backend.variable("w").expect("declared");
        Self { series: Series::Exceptional, backend, base, lambda }
    }

    pub fn bcd() -> Self {
        let backend = Backend::symbolic(&["q", "r", "a"]).expect("valid names");
        let base = backend.variable("q").expect("declared");
        let lambda = backend.variable("r").expect("declared");
        Self { series: Series::Bcd, backend, base, lambda }
    }

    pub fn series(&self) -> Series {
        self.series
    }

    pub fn backend(&self) -> &Backend {
        &self.backend
    }

    pub fn var(&self, name: &str) -> Scalar {
        self.backend.variable(name).expect("declared variable")
    }

    /// `[n]`.
    pub fn bracket(&self, n: i32) -> Scalar {
        self.bracket_lambda(0, n)
    }

    /// `[kλ + n]`.
    pub fn bracket_lambda(&self, k: i32, n: i32) -> Scalar {
        let up = &self.lambda.powi(k).expect("nonzero") * &self.base.powi(n).expect("nonzero");
        &up - &up.inv().expect("nonzero")
    }

    /// Quotient of bracket products; each factor is `(k, n)` for `[kλ+n]`.
    pub fn ratio(&self, num: &[(i32, i32)], den: &[(i32, i32)]) -> Scalar {
        let prod = |fs: &[(i32, i32)]| fs.iter().fold(self.backend.one(), |acc, &(k, n)| &acc * &self.bracket_lambda(k, n));
        prod(num).try_div(&prod(den)).expect("brackets are nonzero")
    }
}

/// `dim Y_i = Q_{1i} (dim Z)² / (P_1(λ_1) P_i(λ_i))` (0-based `i`, with index
/// 0 the trivial summand, whose dimension is 1).
pub fn dim_from_rep(eigenvalues: &[Scalar], gamma: Option<&Scalar>, dim_z: &Scalar, i: usize) -> Result<Scalar, RepError> {
    let b = eigenvalues.first().ok_or_else(|| RepError::Constraint("no eigenvalues".into()))?.backend();
    if i == 0 {
        return Ok(b.one());
    }
    let p = &p_value(0, eigenvalues)? * &p_value(i, eigenvalues)?;
    if p.is_zero() {
        return Err(RepError::Constraint("repeated eigenvalues make P_i(lambda_i) vanish".into()));
    }
    let q = q_closed(0, i, eigenvalues, gamma)?;
    Ok((&q * &(dim_z * dim_z)).try_div(&p)?)
}

/// `dim Z = P_1(λ_1) P_k(λ_k) / Q_{1k}` where summand `k` is isomorphic to `Z`.
pub fn derive_dim_z(eigenvalues: &[Scalar], gamma: Option<&Scalar>, self_index: usize) -> Result<Scalar, RepError> {
    if self_index == 0 {
        return Err(RepError::Constraint("the self summand cannot be the trivial one".into()));
    }
    let q = q_closed(0, self_index, eigenvalues, gamma)?;
    if q.is_zero() {
        return Err(RepError::Constraint("Q_1k vanishes, dim Z is undetermined".into()));
    }
    Ok((&p_value(0, eigenvalues)? * &p_value(self_index, eigenvalues)?).try_div(&q)?)
}

/// Closed BCD formulas `(dim Z, dim X, dim Y)` for `α² = alpha_sq`.
pub fn bcd_dims(ctx: &BracketContext, alpha_sq: &Scalar) -> Result<(Scalar, Scalar, Scalar), RepError> {
    let a2 = ctx.backend.embed(alpha_sq)?;
    let l_over_1 = ctx.ratio(&[(1, 0)], &[(0, 1)]);
    let dim_z = &a2 * &(&l_over_1 + &ctx.backend.one());
    let two = ctx.bracket(2);
    let dim_x = &(&ctx.bracket_lambda(1, -1) + &two).try_div(&two)? * &l_over_1;
    let dim_y = &(&ctx.bracket_lambda(1, 1) + &two).try_div(&two)? * &l_over_1;
    Ok((dim_z, dim_x, dim_y))
}

/// Closed exceptional-series formulas in bracket notation.
#[derive(Debug, Clone)]
pub struct ExceptionalDims {
    pub g: Scalar,
    pub x2: Scalar,
    pub y2: Scalar,
    /// `[6][5][4][λ−6][2λ+6][3λ+3][λ+2] / ([2][λ−1][λ][2λ−2][2λ−1][2λ+4][λ+1])`.
    pub y2_star: Scalar,
}

pub const G_NUM: &[(i32, i32)] = &[(0, 4), (1, -6), (1, 5)];
pub const G_DEN: &[(i32, i32)] = &[(0, 2), (1, -1), (1, 0)];
pub const X2_NUM: &[(i32, i32)] = &[(0, 5), (1, -6), (1, 5), (1, -4), (1, 3), (2, 4), (2, -6)];
pub const X2_DEN: &[(i32, i32)] = &[(0, 1), (1, 0), (1, -1), (1, 2), (1, -3), (2, 0), (2, -2)];
pub const Y2_NUM: &[(i32, i32)] = &[(0, 6), (0, 5), (0, 4), (1, 5), (1, -4), (3, -6)];
pub const Y2_DEN: &[(i32, i32)] = &[(0, 2), (1, -1), (1, 0), (2, 0), (2, -1), (1, -2)];
pub const Y2_STAR_NUM: &[(i32, i32)] = &[(0, 6), (0, 5), (0, 4), (1, -6), (2, 6), (3, 3), (1, 2)];
pub const Y2_STAR_DEN: &[(i32, i32)] = &[(0, 2), (1, -1), (1, 0), (2, -2), (2, -1), (2, 4), (1, 1)];

pub fn exceptional_dims(ctx: &BracketContext) -> ExceptionalDims {
    ExceptionalDims {
        g: ctx.ratio(G_NUM, G_DEN),
        x2: ctx.ratio(X2_NUM, X2_DEN),
        y2: ctx.ratio(Y2_NUM, Y2_DEN),
        y2_star: ctx.ratio(Y2_STAR_NUM, Y2_STAR_DEN),
    }
}

/// Eigenvalues `(s⁶, −s³, −1, t, s/t)` for `(1, 𝔤, X₂, Y₂, Y₂*)` and
/// `γ = s²`, in the variables `u, w`.
pub fn exceptional_eigenvalues(ctx: &BracketContext) -> (Vec<Scalar>, Scalar) {
    let s = ctx.var("u").powi(2).expect("nonzero");
    let t = ctx.var("w").powi(2).expect("nonzero");
    let one = ctx.backend.one();
    let eigs = vec![s.powi(6).expect("nonzero"), s.powi(3).expect("nonzero").neg(), one.neg(), t.clone(), s.try_div(&t).expect("nonzero")];
    (eigs, s.powi(2).expect("nonzero"))
}

/// Substitutes variables of a symbolic scalar by expressions in the same ring.
pub fn substitute(x: &Scalar, ctx: &BracketContext, values: &[(&str, Scalar)]) -> Result<Scalar, RepError> {
    let Backend::Symbolic(vars) = &ctx.backend else { unreachable!("bracket contexts are symbolic") };
    let mut assignment: HashMap<String, Scalar> = vars.names().iter().map(|n| (n.clone(), ctx.var(n))).collect();
    for (name, v) in values {
        assignment.insert(name.to_string(), v.clone());
    }
    Ok(x.specialize(&assignment, &ctx.backend)?)
}

/// `(u, w) → (u⁻¹, w⁻¹)`, resp. `(q, r) → (q⁻¹, r⁻¹)`.
pub fn invert_variables(x: &Scalar, ctx: &BracketContext) -> Result<Scalar, RepError> {
    let names: &[&str] = match ctx.series {
        Series::Exceptional => &["u", "w"],
        Series::Bcd => &["q", "r"],
    };
    let values: Vec<(&str, Scalar)> = names.iter().map(|n| (*n, ctx.var(n).inv().expect("nonzero"))).collect();
    substitute(x, ctx, &values)
}

/// Convention used to compare the two routes.
#[derive(Debug, Clone, Serialize)]
pub struct Convention {
    pub gamma: String,
    pub sign_flip: bool,
}

/// One summand: route a (eigenvalues) against route b (closed formula).
#[derive(Debug, Clone, Serialize)]
pub struct DimReport {
    pub summand: String,
    pub route_a: String,
    pub route_b: String,
    pub equal: bool,
    pub convention: Convention,
}

/// Named consistency check attached to a series verification.
#[derive(Debug, Clone, Serialize)]
pub struct SeriesCheck {
    pub name: String,
    pub ok: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct SeriesReport {
    pub reports: Vec<DimReport>,
    pub checks: Vec<SeriesCheck>,
}

impl SeriesReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    pub fn all_equal(&self) -> bool {
        self.reports.iter().all(|r| r.equal) && self.checks.iter().all(|c| c.ok)
    }
}

/// Compares the routes, allowing `route_a = −route_b` when `allow_sign_flip`.
fn compare(summand: &str, a: &Scalar, b: &Scalar, gamma: &str, allow_sign_flip: bool) -> DimReport {
    let direct = a == b;
    let flipped = !direct && allow_sign_flip && *a == b.neg();
    DimReport {
        summand: summand.to_string(),
        route_a: a.render(),
        route_b: if flipped { b.neg().render() } else { b.render() },
        equal: direct || flipped,
        convention: Convention { gamma: gamma.to_string(), sign_flip: flipped },
    }
}

pub fn verify_series(series: Series) -> Result<SeriesReport, RepError> {
    match series {
        Series::Bcd => verify_bcd(),
        Series::Exceptional => verify_exceptional(),
    }
}

fn verify_bcd() -> Result<SeriesReport, RepError> {
    let ctx = BracketContext::bcd();
    let (q, r, a) = (ctx.var("q"), ctx.var("r"), ctx.var("a"));
    // (1, X, Y) ↦ (α r⁻¹, −α q⁻¹, α q)
    let eigs = vec![a.try_div(&r)?, a.try_div(&q)?.neg(), &a * &q];
    let a_idx = 2;
    let mut reports = Vec::new();
    for alpha_sq in [1, -1] {
        let a2 = ctx.backend.from_int(alpha_sq);
        let (_, dim_x, dim_y) = bcd_dims(&ctx, &a2)?;
        // dim Z with the symbolic α; α only enters through α².
        let dim_z = &(&a * &a) * &(&ctx.ratio(&[(1, 0)], &[(0, 1)]) + &ctx.backend.one());
        let rat_a2 = a2.as_rational().expect("integer");
        for (i, name, closed) in [(1, "X", dim_x), (2, "Y", dim_y)] {
            let route_a = dim_from_rep(&eigs, None, &dim_z, i)?;
            let sym = route_a.as_symbolic().expect("symbolic");
            let route_a = Scalar::Symbolic(sym.substitute_square(a_idx, &rat_a2)?);
            reports.push(compare(&format!("{name} (alpha^2={alpha_sq})"), &route_a, &closed, "none", false));
        }
    }
    Ok(SeriesReport { reports, checks: Vec::new() })
}

fn verify_exceptional() -> Result<SeriesReport, RepError> {
    let ctx = BracketContext::exceptional();
    let (eigs, gamma) = exceptional_eigenvalues(&ctx);
    let s = ctx.var("u").powi(2)?;
    let mut checks = Vec::new();
    let prod = eigs.iter().fold(ctx.backend.one(), |acc, x| &acc * x);
    checks.push(SeriesCheck { name: "product of eigenvalues = s^10".into(), ok: prod == s.powi(10)? });
    checks.push(SeriesCheck { name: "gamma^5 = s^10".into(), ok: gamma.powi(5)? == s.powi(10)? });
    // δ read off (ABA)² for the 5-dimensional representation with these eigenvalues.
    let rep = build_rep(&RepSpec::classified(eigs.clone(), Some(gamma.clone()))?)?;
    let delta_ok = structure_report(&rep)?.delta.is_some_and(|dl| dl == s.powi(12).expect("nonzero"));
    checks.push(SeriesCheck { name: "delta = gamma^6 = s^12".into(), ok: delta_ok });
    let nonzero = (1..5).all(|i| q_closed(0, i, &eigs, Some(&gamma)).map(|q| !q.is_zero()).unwrap_or(false));
    checks.push(SeriesCheck { name: "Q_1i != 0 for all i".into(), ok: nonzero });

    let closed = exceptional_dims(&ctx);
    let balanced = [&closed.g, &closed.x2, &closed.y2, &closed.y2_star].iter().all(|x| invert_variables(x, &ctx).map(|y| y == **x).unwrap_or(false));
    checks.push(SeriesCheck { name: "closed formulas invariant under (u,w) -> (1/u,1/w)".into(), ok: balanced });

    let dim_z = derive_dim_z(&eigs, Some(&gamma), 1)?;
    let gamma_text = gamma.render();
    let mut reports = Vec::new();
    for (i, name, formula) in [(1, "g", &closed.g), (2, "X2", &closed.x2), (3, "Y2", &closed.y2), (4, "Y2*", &closed.y2_star)] {
        let route_a = dim_from_rep(&eigs, Some(&gamma), &dim_z, i)?;
        reports.push(compare(name, &route_a, formula, &gamma_text, true));
    }
    Ok(SeriesReport { reports, checks })
}

/// Route a for `Y₂*` against the `Y₂` closed formula under the exchange of
/// the eigenvalues `t ↔ s/t` (i.e. `w ↦ u/w`), which swaps the two summands.
pub fn y2_star_from_exchange() -> Result<(Scalar, Scalar), RepError> {
    let ctx = BracketContext::exceptional();
    let (eigs, gamma) = exceptional_eigenvalues(&ctx);
    let dim_z = derive_dim_z(&eigs, Some(&gamma), 1)?;
    let route_a = dim_from_rep(&eigs, Some(&gamma), &dim_z, 4)?;
    let swapped = substitute(&exceptional_dims(&ctx).y2, &ctx, &[("w", ctx.var("u").try_div(&ctx.var("w"))?)])?;
    Ok((route_a, swapped))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn brackets() {
        let ctx = BracketContext::exceptional();
        assert_eq!(ctx.bracket(1).render(), "u-u^-1");
        assert_eq!(ctx.bracket_lambda(2, -1).render(), "u^-1*w^2-u*w^-2");
        let bcd = BracketContext::bcd();
        assert_eq!(bcd.bracket_lambda(1, 0).render(), "r-r^-1");
    }

    #[test]
    fn dim_z_for_bcd_closed_form() {
        let ctx = BracketContext::bcd();
        let (z, _, _) = bcd_dims(&ctx, &ctx.backend().one()).unwrap();
        let expect = crate::algebra::parse_scalar("(r - 1/r)/(q - 1/q) + 1", ctx.backend()).unwrap();
        assert_eq!(z, expect);
    }

    #[test]
    fn dim_z_sign_does_not_matter() {
        let ctx = BracketContext::exceptional();
        let (eigs, gamma) = exceptional_eigenvalues(&ctx);
        let z = derive_dim_z(&eigs, Some(&gamma), 1).unwrap();
        for i in 1..5 {
            let plus = dim_from_rep(&eigs, Some(&gamma), &z, i).unwrap();
            let minus = dim_from_rep(&eigs, Some(&gamma), &z.neg(), i).unwrap();
            assert_eq!(plus, minus);
        }
    }

    #[test]
    fn self_summand_reproduces_dim_z() {
        let ctx = BracketContext::exceptional();
        let (eigs, gamma) = exceptional_eigenvalues(&ctx);
        let z = derive_dim_z(&eigs, Some(&gamma), 1).unwrap();
        assert_eq!(dim_from_rep(&eigs, Some(&gamma), &z, 1).unwrap(), z);
    }

    #[test]
    fn y2_star_is_exchange_image_of_y2() {
        let (route_a, swapped) = y2_star_from_exchange().unwrap();
        assert_eq!(route_a, swapped.neg());
    }

    #[test]
    fn bcd_routes_agree() {
        let r = verify_series(Series::Bcd).unwrap();
        assert_eq!(r.reports.len(), 4);
        assert!(r.all_equal());
    }

    #[test]
    fn repeated_eigenvalues_rejected() {
        let b = Backend::Rational;
        let l = vec![b.from_int(2), b.from_int(2), b.from_int(3)];
        assert!(dim_from_rep(&l, None, &b.one(), 1).is_err());
    }
}
