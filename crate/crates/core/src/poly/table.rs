use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{Error, Result};

/// Declaration of one variable: its name and its two weights.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VariableSpec {
    pub name: String,
    pub reparam_weight: u32,
    pub gl_weight: Vec<i64>,
}

impl VariableSpec {
    pub fn new(name: impl Into<String>, reparam_weight: u32, gl_weight: Vec<i64>) -> Self {
        VariableSpec {
            name: name.into(),
            reparam_weight,
            gl_weight,
        }
    }
}

/// Ordered, immutable list of variables shared by all polynomials of a ring.
#[derive(Debug, PartialEq, Eq)]
pub struct VariableTable {
    specs: Vec<VariableSpec>,
    gl_rank: usize,
    lookup: HashMap<String, usize>,
}

impl VariableTable {
    /// Builds a table. Names must be unique, reparametrization weights
    /// positive, and all GL-weights of the same length.
    pub fn new(specs: Vec<VariableSpec>) -> Result<Arc<Self>> {
        let gl_rank = specs.first().map_or(0, |s| s.gl_weight.len());
        let mut lookup = HashMap::with_capacity(specs.len());
        for (i, s) in specs.iter().enumerate() {
            if s.reparam_weight == 0 {
                return Err(Error::usage(format!(
                    "variable `{}` has zero reparametrization weight",
                    s.name
                )));
            }
            if s.gl_weight.len() != gl_rank {
                return Err(Error::usage(format!(
                    "variable `{}` has a GL-weight of the wrong length",
                    s.name
                )));
            }
            if lookup.insert(s.name.clone(), i).is_some() {
                return Err(Error::usage(format!("duplicate variable `{}`", s.name)));
            }
        }
        Ok(Arc::new(VariableTable {
            specs,
            gl_rank,
            lookup,
        }))
    }

    /// Variables of weight 1 with no GL grading.
    pub fn plain(names: &[&str]) -> Result<Arc<Self>> {
        Self::new(
            names
                .iter()
                .map(|n| VariableSpec::new(*n, 1, Vec::new()))
                .collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.specs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.specs.is_empty()
    }

    pub fn gl_rank(&self) -> usize {
        self.gl_rank
    }

    pub fn name(&self, var: usize) -> &str {
        &self.specs[var].name
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.specs.iter().map(|s| s.name.as_str())
    }

    pub fn reparam_weight(&self, var: usize) -> u32 {
        self.specs[var].reparam_weight
    }

    pub fn gl_weight(&self, var: usize) -> &[i64] {
        &self.specs[var].gl_weight
    }

    pub fn index(&self, name: &str) -> Result<usize> {
        self.lookup
            .get(name)
            .copied()
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))
    }
}
