use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::Zero;

use super::polynomial::{Monomial, Polynomial};
use super::table::VariableTable;
use super::Rational;
use crate::error::{Error, Result};

/// A derivation of the polynomial ring, given by the images of finitely many
/// variables. Unlisted variables are sent to zero.
#[derive(Debug, Clone, PartialEq)]
pub struct Derivation {
    table: Arc<VariableTable>,
    images: BTreeMap<usize, Polynomial>,
}

impl Derivation {
    pub fn new(table: &Arc<VariableTable>) -> Self {
        Derivation {
            table: Arc::clone(table),
            images: BTreeMap::new(),
        }
    }

    /// Sets the image of `var`. Zero images are not stored.
    pub fn with_image(mut self, var: usize, image: Polynomial) -> Result<Self> {
        if var >= self.table.len() {
            return Err(Error::usage(format!("variable index {var} out of range")));
        }
        if !Arc::ptr_eq(&self.table, image.table()) && **image.table() != *self.table {
            return Err(Error::TableMismatch);
        }
        if image.is_zero() {
            self.images.remove(&var);
        } else {
            self.images.insert(var, image);
        }
        Ok(self)
    }

    pub fn table(&self) -> &Arc<VariableTable> {
        &self.table
    }

    pub fn image(&self, var: usize) -> Polynomial {
        self.images
            .get(&var)
            .cloned()
            .unwrap_or_else(|| Polynomial::zero(&self.table))
    }

    /// Extends the variable images by linearity and the Leibniz rule.
    pub fn apply(&self, p: &Polynomial) -> Result<Polynomial> {
        if !Arc::ptr_eq(&self.table, p.table()) && **p.table() != *self.table {
            return Err(Error::TableMismatch);
        }
        let mut out = Polynomial::zero(&self.table);
        for (m, c) in p.terms() {
            for (&v, img) in &self.images {
                let e = m.exponents()[v];
                if e == 0 {
                    continue;
                }
                let mut lowered = m.exponents().to_vec();
                lowered[v] -= 1;
                let coeff = c * Rational::from_integer(e.into());
                if coeff.is_zero() {
                    continue;
                }
                let cofactor = Polynomial::monomial(&self.table, Monomial::new(lowered), coeff);
                out = &out + &(&cofactor * img);
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{int, VariableSpec};

    fn jets() -> (Arc<VariableTable>, Derivation) {
        let t = VariableTable::new(vec![
            VariableSpec::new("f1'", 1, vec![1, 0]),
            VariableSpec::new("f1''", 2, vec![1, 0]),
            VariableSpec::new("f2'", 1, vec![0, 1]),
            VariableSpec::new("f2''", 2, vec![0, 1]),
        ])
        .unwrap();
        let d = Derivation::new(&t)
            .with_image(1, Polynomial::var_index(&t, 0).scale(&int(2)))
            .unwrap()
            .with_image(3, Polynomial::var_index(&t, 2).scale(&int(2)))
            .unwrap();
        (t, d)
    }

    #[test]
    fn second_derivative_direction() {
        let (t, d) = jets();
        let f1pp = Polynomial::var(&t, "f1''").unwrap();
        let f1p = Polynomial::var(&t, "f1'").unwrap();
        assert_eq!(d.apply(&f1pp).unwrap(), f1p.scale(&int(2)));
    }

    #[test]
    fn wedge_is_annihilated() {
        let (t, d) = jets();
        let v = |n: &str| Polynomial::var(&t, n).unwrap();
        let w12 = &(&v("f1'") * &v("f2''")) - &(&v("f1''") * &v("f2'"));
        assert!(d.apply(&w12).unwrap().is_zero());
    }

    #[test]
    fn constants_are_annihilated() {
        let (t, d) = jets();
        assert!(d
            .apply(&Polynomial::constant(&t, int(5)))
            .unwrap()
            .is_zero());
    }

    #[test]
    fn table_mismatch() {
        let (_, d) = jets();
        let other = VariableTable::plain(&["x"]).unwrap();
        let x = Polynomial::var(&other, "x").unwrap();
        assert_eq!(d.apply(&x), Err(Error::TableMismatch));
    }
}
