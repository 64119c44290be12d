use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use crate::error::{AlgebraError, Result};
use crate::field::Field;

/// Variable names and coefficient field of a polynomial ring.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RingContext {
    vars: Vec<String>,
    field: Field,
}

/// Shared handle to a ring; polynomials keep one each.
pub type Ring = Arc<RingContext>;

fn valid_name(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic()) && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl RingContext {
    pub fn new<S: AsRef<str>>(vars: &[S], field: Field) -> Result<Ring> {
        if vars.is_empty() {
            return Err(AlgebraError::Precondition("a ring needs at least one variable".into()));
        }
        let mut seen = HashSet::new();
        let mut names = Vec::with_capacity(vars.len());
        for v in vars {
            let v = v.as_ref();
            if !valid_name(v) {
                return Err(AlgebraError::Parse {
                    pos: 0,
                    msg: format!("invalid variable name `{v}`"),
                });
            }
            if !seen.insert(v.to_string()) {
                return Err(AlgebraError::DuplicateVariable(v.to_string()));
            }
            names.push(v.to_string());
        }
        Ok(Arc::new(RingContext { vars: names, field }))
    }

    /// `prefix1 .. prefixN` over `field`.
    pub fn indexed(prefix: &str, n: usize, field: Field) -> Result<Ring> {
        let names: Vec<String> = (1..=n).map(|i| format!("{prefix}{i}")).collect();
        Self::new(&names, field)
    }

    /// Rational ring in `x1..xn`.
    pub fn rational(n: usize) -> Ring {
        Self::indexed("x", n, Field::Rationals).expect("valid names")
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// Same variables with `extra` prepended.
    pub fn with_front_vars<S: AsRef<str>>(&self, extra: &[S]) -> Result<Ring> {
        let mut names: Vec<String> = extra.iter().map(|s| s.as_ref().to_string()).collect();
        names.extend(self.vars.iter().cloned());
        Self::new(&names, self.field)
    }

    /// Same variables with `extra` appended.
    pub fn with_back_vars<S: AsRef<str>>(&self, extra: &[S]) -> Result<Ring> {
        let mut names = self.vars.clone();
        names.extend(extra.iter().map(|s| s.as_ref().to_string()));
        Self::new(&names, self.field)
    }

    /// Same ring without the variable at `idx`.
    pub fn without_var(&self, idx: usize) -> Result<Ring> {
        let mut names = self.vars.clone();
        names.remove(idx);
        Self::new(&names, self.field)
    }

    /// A variable name of the form `{prefix}{k}` not present in the ring.
    pub fn fresh_name(&self, prefix: &str) -> String {
        (1..)
            .map(|k| format!("{prefix}{k}"))
            .find(|n| self.var_index(n).is_none())
            .expect("unbounded search")
    }
}

impl fmt::Display for RingContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.field, self.vars.join(","))
    }
}

pub(crate) fn same_ring(a: &Ring, b: &Ring) -> bool {
    Arc::ptr_eq(a, b) || a == b
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_duplicates_and_empty() {
        assert_eq!(
            RingContext::new(&["x", "x"], Field::Rationals).unwrap_err(),
            AlgebraError::DuplicateVariable("x".into())
        );
        assert!(RingContext::new::<&str>(&[], Field::Rationals).is_err());
        assert!(RingContext::new(&["1x"], Field::Rationals).is_err());
    }

    #[test]
    fn fresh_names_avoid_collisions() {
        let r = RingContext::rational(3);
        assert_eq!(r.fresh_name("x"), "x4");
        assert_eq!(r.fresh_name("t"), "t1");
    }
}
