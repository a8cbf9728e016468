use serde::{Deserialize, Serialize};

use super::MonomialOrder;
use crate::error::{Error, Result};

/// Declares a polynomial ring `Q[x1..xn]`: its dimension, variable names and
/// default monomial order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyRingContext {
    names: Vec<String>,
    order: MonomialOrder,
}

impl PolyRingContext {
    /// Ring in `n` variables named `x1, ..., xn`, ordered by degrevlex.
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidContext("ring dimension must be positive".into()));
        }
        Ok(PolyRingContext {
            names: (1..=n).map(|i| format!("x{i}")).collect(),
            order: MonomialOrder::DegRevLex,
        })
    }

    pub fn with_names(names: Vec<String>, order: MonomialOrder) -> Result<Self> {
        if names.is_empty() {
            return Err(Error::InvalidContext("ring dimension must be positive".into()));
        }
        for (i, name) in names.iter().enumerate() {
            if name.is_empty() {
                return Err(Error::InvalidContext(format!("variable {} has an empty name", i + 1)));
            }
            if names[..i].contains(name) {
                return Err(Error::InvalidContext(format!("duplicate variable name `{name}`")));
            }
        }
        Ok(PolyRingContext { names, order })
    }

    pub fn with_order(mut self, order: MonomialOrder) -> Self {
        self.order = order;
        self
    }

    pub fn ring_dim(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// Ring on the disjoint union of both variable sets; variables of `other`
    /// follow those of `self`. Clashing names in `other` are renamed `y1, y2, ...`
    /// (then `y1_1`, ... if needed).
    pub fn concat(&self, other: &PolyRingContext) -> PolyRingContext {
        let mut names = self.names.clone();
        for (i, name) in other.names.iter().enumerate() {
            let mut candidate = name.clone();
            if names.contains(&candidate) {
                candidate = format!("y{}", i + 1);
            }
            let mut suffix = 1;
            while names.contains(&candidate) {
                candidate = format!("y{}_{suffix}", i + 1);
                suffix += 1;
            }
            names.push(candidate);
        }
        PolyRingContext {
            names,
            order: self.order,
        }
    }
}
