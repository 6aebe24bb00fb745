use serde::Serialize;

use super::modular::{deligne_check, sl2z_flags, westbury_dims, WestburyDims};
use super::oracles::burnside_oracle;
use super::qpoly::q_closed;
use crate::algebra::Scalar;
use crate::error::RepError;
use crate::rep::{build_rep, Family, RepSpec};

/// An obstruction polynomial that vanishes on the given spec.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VanishingFactor {
    /// Text form over `l1..ld` and `gamma`, e.g. `l1^2+l2*l3`.
    pub generator: String,
    /// 1-based eigenvalue labels entering the generator.
    pub indices: Vec<usize>,
}

/// Outcome of classification; `None` marks checks that were not run.
#[derive(Debug, Clone, Serialize)]
pub struct ClassificationReport {
    pub simple: bool,
    pub vanishing_factors: Vec<VanishingFactor>,
    pub sl2z: Option<bool>,
    pub psl2z: Option<bool>,
    pub burnside: Option<bool>,
    pub deligne_certificate: Option<bool>,
    pub westbury: Option<WestburyDims>,
}

struct Generator {
    text: String,
    indices: Vec<usize>,
    value: Scalar,
}

fn generators(spec: &RepSpec) -> Result<Vec<Generator>, RepError> {
    let l = spec.eigenvalues();
    let d = l.len();
    let mut out = Vec::new();
    let mut push = |text: String, indices: Vec<usize>, value: Scalar| out.push(Generator { text, indices, value });
    match d {
        2 => push("l1^2-l1*l2+l2^2".into(), vec![1, 2], &(&(&l[0] * &l[0]) - &(&l[0] * &l[1])) + &(&l[1] * &l[1])),
        3 => {
            for i in 0..3 {
                let (r, s) = match i {
                    0 => (1, 2),
                    1 => (0, 2),
                    _ => (0, 1),
                };
                push(format!("l{}^2+l{}*l{}", i + 1, r + 1, s + 1), vec![i + 1, r + 1, s + 1], &(&l[i] * &l[i]) + &(&l[r] * &l[s]));
            }
        }
        4 => {
            let g2 = spec.gamma().ok_or_else(|| RepError::Constraint("d=4 needs D".into()))?;
            for i in 0..4 {
                push(format!("l{}^2+gamma^2", i + 1), vec![i + 1], &(&l[i] * &l[i]) + &g2);
            }
            for (i, j, r, s) in [(0, 1, 2, 3), (0, 2, 1, 3), (0, 3, 1, 2)] {
                push(
                    format!("gamma^2+l{}*l{}+l{}*l{}", i + 1, j + 1, r + 1, s + 1),
                    vec![i + 1, j + 1, r + 1, s + 1],
                    &(&g2 + &(&l[i] * &l[j])) + &(&l[r] * &l[s]),
                );
            }
        }
        5 => {
            let g = spec.gamma().ok_or_else(|| RepError::Constraint("d=5 needs gamma".into()))?;
            let g2 = &g * &g;
            // All five indices: Q^(5) is symmetric in every eigenvalue.
            for i in 0..5 {
                push(format!("gamma^2+gamma*l{0}+l{0}^2", i + 1), vec![i + 1], &(&g2 + &(&g * &l[i])) + &(&l[i] * &l[i]));
            }
            for i in 0..5 {
                for j in i + 1..5 {
                    push(format!("gamma^2+l{}*l{}", i + 1, j + 1), vec![i + 1, j + 1], &g2 + &(&l[i] * &l[j]));
                }
            }
        }
        _ => return Err(RepError::Unsupported(format!("no obstruction ideal for d={d}"))),
    }
    Ok(out)
}

/// The obstruction generators that vanish on the spec (identically, for
/// symbolic specs).
pub fn vanishing_factors(spec: &RepSpec) -> Result<Vec<VanishingFactor>, RepError> {
    Ok(generators(spec)?.into_iter().filter(|g| g.value.is_zero()).map(|g| VanishingFactor { generator: g.text, indices: g.indices }).collect())
}

/// Simplicity from the closed `Q_rs`: simple iff `Q_rs ≠ 0` for all `r ≠ s`.
pub fn is_simple(spec: &RepSpec) -> Result<ClassificationReport, RepError> {
    if spec.family() != Family::Classified {
        return Err(RepError::Unsupported("simplicity is decided for the classified family only".into()));
    }
    let l = spec.eigenvalues();
    let d = l.len();
    let gamma = spec.gamma();
    let mut simple = true;
    'outer: for r in 0..d {
        for s in 0..d {
            if r != s && q_closed(r, s, l, gamma.as_ref())?.is_zero() {
                simple = false;
                break 'outer;
            }
        }
    }
    let vanishing = vanishing_factors(spec)?;
    if simple != vanishing.is_empty() {
        return Err(RepError::Internal("Q_rs verdict disagrees with the obstruction generators".into()));
    }
    Ok(ClassificationReport {
        simple,
        vanishing_factors: vanishing,
        sl2z: None,
        psl2z: None,
        burnside: None,
        deligne_certificate: None,
        westbury: None,
    })
}

/// Optional extra checks for [`classify`].
#[derive(Debug, Clone, Default)]
pub struct ClassifyOptions {
    pub burnside: bool,
    /// Run the eigenspace check with this sixth root of `δ`.
    pub westbury_sixth_root: Option<Scalar>,
}

/// [`is_simple`] plus the δ-flags and Deligne certificate for specialized
/// specs, and any requested oracle.
pub fn classify(spec: &RepSpec, opts: &ClassifyOptions) -> Result<ClassificationReport, RepError> {
    let mut report = is_simple(spec)?;
    let specialized = !spec.backend().is_symbolic();
    if specialized {
        let (sl, psl) = sl2z_flags(spec)?;
        report.sl2z = Some(sl);
        report.psl2z = Some(psl);
        let cert = deligne_check(spec)?.certificate;
        if cert && !report.simple {
            return Err(RepError::Internal("Deligne certificate issued for a non-simple spec".into()));
        }
        report.deligne_certificate = Some(cert);
    }
    if opts.burnside || opts.westbury_sixth_root.is_some() {
        let rep = build_rep(spec)?;
        if opts.burnside {
            report.burnside = Some(burnside_oracle(&rep)?);
        }
        if let Some(root) = &opts.westbury_sixth_root {
            report.westbury = Some(westbury_dims(&rep, root)?);
        }
    }
    Ok(report)
}

impl ClassificationReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }
}
