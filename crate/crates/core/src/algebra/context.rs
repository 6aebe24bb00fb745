use std::fmt;
use std::sync::Arc;

use crate::error::{AlgebraError, Result};

/// An ordered, immutable list of variable names.
///
/// The order fixes the exponent-vector layout and the graded-lex monomial
/// order used for canonical rendering.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VarContext {
    names: Vec<String>,
}

impl VarContext {
    pub fn new<S: AsRef<str>>(names: &[S]) -> Result<Arc<Self>> {
        let names: Vec<String> = names.iter().map(|s| s.as_ref().to_string()).collect();
        for (i, n) in names.iter().enumerate() {
            if !is_identifier(n) {
                return Err(AlgebraError::InvalidContext(format!("`{n}` is not an identifier")));
            }
            if names[..i].contains(n) {
                return Err(AlgebraError::InvalidContext(format!("duplicate variable `{n}`")));
            }
        }
        Ok(Arc::new(Self { names }))
    }

    pub fn arity(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }
}

impl fmt::Display for VarContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.names.join(","))
    }
}

pub(crate) fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() || c == '_' => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_duplicates_and_bad_names() {
        assert!(VarContext::new(&["l1", "l2"]).is_ok());
        assert!(VarContext::new(&["l1", "l1"]).is_err());
        assert!(VarContext::new(&["1x"]).is_err());
        assert!(VarContext::new(&[""]).is_err());
    }

    #[test]
    fn index_lookup() {
        let ctx = VarContext::new(&["u", "w"]).unwrap();
        assert_eq!(ctx.index_of("w"), Some(1));
        assert_eq!(ctx.index_of("q"), None);
    }
}
