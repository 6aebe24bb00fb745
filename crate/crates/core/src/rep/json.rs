use serde::{Deserialize, Serialize};

use super::build::Rep;
use super::spec::{Family, RepSpec};
use crate::algebra::{parse_scalar, Backend, Modulus, Rational, Scalar, SquareMatrix};
use crate::error::RepError;

/// Wire form of a [`Rep`]; field order is part of the format.
///
/// For the binomial family `root_param` carries the constant `c`.
/// Extension-field reps add a trailing `modulus` (e.g. `"z^2-z+1"`) and list
/// its generator as the only variable.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RepJson {
    pub dim: usize,
    pub family: String,
    pub variables: Vec<String>,
    pub eigenvalues: Vec<String>,
    pub root_param: Option<String>,
    #[serde(rename = "A")]
    pub a: Vec<Vec<String>>,
    #[serde(rename = "B")]
    pub b: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub modulus: Option<String>,
}

fn render_matrix(m: &SquareMatrix) -> Vec<Vec<String>> {
    m.rows().iter().map(|r| r.iter().map(Scalar::render).collect()).collect()
}

impl From<&Rep> for RepJson {
    fn from(rep: &Rep) -> Self {
        let (variables, modulus) = match rep.backend() {
            Backend::Symbolic(ctx) => (ctx.names().to_vec(), None),
            Backend::Rational => (Vec::new(), None),
            Backend::Extension(m) => (vec![m.generator().to_string()], Some(m.render())),
        };
        RepJson {
            dim: rep.dim(),
            family: rep.spec.family().as_str().to_string(),
            variables,
            eigenvalues: rep.spec.eigenvalues().iter().map(Scalar::render).collect(),
            root_param: rep.spec.root_param().map(Scalar::render),
            a: render_matrix(&rep.a),
            b: render_matrix(&rep.b),
            modulus,
        }
    }
}

/// Parses a modulus such as `z^2-z+1` in the given generator.
pub fn parse_modulus(generator: &str, text: &str) -> Result<std::sync::Arc<Modulus>, RepError> {
    let sym = Backend::symbolic(&[generator])?;
    let p = parse_scalar(text, &sym)?;
    let rf = p.as_symbolic().expect("symbolic backend");
    if !rf.is_polynomial() {
        return Err(RepError::Json(format!("modulus `{text}` is not a polynomial")));
    }
    let mut coeffs: Vec<Rational> = Vec::new();
    for (e, c) in rf.numer().terms() {
        let k = usize::try_from(e[0]).map_err(|_| RepError::Json(format!("modulus `{text}` has negative powers")))?;
        if coeffs.len() <= k {
            coeffs.resize(k + 1, Rational::from_integer(0.into()));
        }
        coeffs[k] = c.clone();
    }
    Ok(Modulus::new(generator, coeffs)?)
}

impl RepJson {
    pub fn backend(&self) -> Result<Backend, RepError> {
        match &self.modulus {
            Some(m) => {
                let [g] = self.variables.as_slice() else {
                    return Err(RepError::Json("an extension backend needs exactly one variable".into()));
                };
                Ok(Backend::Extension(parse_modulus(g, m)?))
            }
            None if self.variables.is_empty() => Ok(Backend::Rational),
            None => Ok(Backend::symbolic(&self.variables)?),
        }
    }

    pub fn to_rep(&self) -> Result<Rep, RepError> {
        let backend = self.backend()?;
        let parse = |s: &String| parse_scalar(s, &backend).map_err(RepError::from);
        let eigs: Vec<Scalar> = self.eigenvalues.iter().map(parse).collect::<Result<_, _>>()?;
        let root = self.root_param.as_ref().map(parse).transpose()?;
        if eigs.len() != self.dim {
            return Err(RepError::Json(format!("expected {} eigenvalues, found {}", self.dim, eigs.len())));
        }
        let spec = match self.family.as_str() {
            "classified" => RepSpec::classified(eigs, root)?,
            "binomial" => {
                let c = root.ok_or_else(|| RepError::Json("binomial family needs root_param = c".into()))?;
                RepSpec::binomial(eigs, c)?
            }
            other => return Err(RepError::Json(format!("unknown family `{other}`"))),
        };
        let matrix = |rows: &Vec<Vec<String>>, name: &str| -> Result<SquareMatrix, RepError> {
            if rows.len() != self.dim || rows.iter().any(|r| r.len() != self.dim) {
                return Err(RepError::Json(format!("matrix {name} is not {0}x{0}", self.dim)));
            }
            let rows = rows.iter().map(|r| r.iter().map(parse).collect::<Result<Vec<_>, _>>()).collect::<Result<Vec<_>, _>>()?;
            Ok(SquareMatrix::from_rows(&backend, rows)?)
        };
        Ok(Rep { a: matrix(&self.a, "A")?, b: matrix(&self.b, "B")?, spec })
    }
}

impl Family {
    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "classified" => Some(Family::Classified),
            "binomial" => Some(Family::Binomial),
            _ => None,
        }
    }
}

/// Pretty JSON with the frozen field order.
pub fn rep_to_json(rep: &Rep) -> String {
    serde_json::to_string_pretty(&RepJson::from(rep)).expect("serializable")
}

pub fn rep_from_json(text: &str) -> Result<Rep, RepError> {
    let raw: RepJson = serde_json::from_str(text).map_err(|e| RepError::Json(e.to_string()))?;
    raw.to_rep()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rep::build_rep;

    #[test]
    fn roundtrip_symbolic() {
        for d in 2..=5 {
            let rep = build_rep(&RepSpec::generic(d).unwrap()).unwrap();
            let text = rep_to_json(&rep);
            let back = rep_from_json(&text).unwrap();
            assert_eq!(back.a, rep.a);
            assert_eq!(back.b, rep.b);
            assert_eq!(rep_to_json(&back), text);
        }
    }

    #[test]
    fn field_order_is_frozen() {
        let rep = build_rep(&RepSpec::generic(2).unwrap()).unwrap();
        let text = serde_json::to_string(&RepJson::from(&rep)).unwrap();
        assert_eq!(
            text,
            r#"{"dim":2,"family":"classified","variables":["l1","l2"],"eigenvalues":["l1","l2"],"root_param":null,"A":[["l1","l1"],["0","l2"]],"B":[["l2","0"],["-l2","l1"]]}"#
        );
    }

    #[test]
    fn extension_modulus_roundtrip() {
        let m = parse_modulus("z", "z^2 - z + 1").unwrap();
        assert_eq!(*m, *Modulus::cyclotomic6());
        assert!(parse_modulus("z", "z^-1 + 1").is_err());
    }
}
